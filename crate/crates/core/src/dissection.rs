//! 3d-dissections of convex polygons.
//!
//! Vertices of the n-gon are labelled `0..n` counterclockwise. A dissection is
//! a set of pairwise non-crossing diagonals; it is a 3d-dissection when every
//! face has a multiple of three vertices. Its quiddity counts, at each vertex,
//! the faces containing that vertex.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::enumeration::Budget;
use crate::error::{Error, Result};
use crate::matrix::Word;
use crate::surgery::{ReductionCertificate, SurgeryStep};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissection {
    n: usize,
    /// Sorted, each pair with `i < j`.
    diagonals: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissectionProfile {
    /// Face sizes in non-decreasing order.
    pub face_sizes: Vec<usize>,
    /// `d -> number of faces with 3d vertices`.
    pub n_d: BTreeMap<usize, usize>,
    pub even_face_count: usize,
}

impl DissectionProfile {
    pub fn is_3d(&self) -> bool {
        self.face_sizes.iter().all(|s| s % 3 == 0)
    }

    /// `Σ (d - 1) N_d`, the number of type 2 surgeries needed to build the dissection.
    pub fn weighted_sum(&self) -> usize {
        self.n_d.iter().map(|(d, count)| (d - 1) * count).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

fn crosses((i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

impl Dissection {
    /// Validates and normalizes a diagonal set.
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Dissection> {
        if n < 3 {
            return Err(Error::InvalidDissection(format!("a polygon needs 3 vertices, got {n}")));
        }
        let mut diags: Vec<(usize, usize)> = Vec::new();
        for (i, j) in diagonals {
            let (i, j) = (i.min(j), i.max(j));
            if j >= n {
                return Err(Error::InvalidDissection(format!("vertex {j} out of range")));
            }
            if j - i <= 1 || (i == 0 && j == n - 1) {
                return Err(Error::InvalidDissection(format!("{{{i},{j}}} is not a diagonal")));
            }
            diags.push((i, j));
        }
        diags.sort_unstable();
        if diags.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidDissection("repeated diagonal".into()));
        }
        for (x, &p) in diags.iter().enumerate() {
            if let Some(&q) = diags[x + 1..].iter().find(|&&q| crosses(p, q)) {
                return Err(Error::InvalidDissection(format!(
                    "diagonals {{{},{}}} and {{{},{}}} cross",
                    p.0, p.1, q.0, q.1
                )));
            }
        }
        Ok(Dissection { n, diagonals: diags })
    }

    /// The polygon with no diagonals.
    pub fn bare(n: usize) -> Result<Dissection> {
        Dissection::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    /// Faces as ascending vertex lists (ascending is counterclockwise on a
    /// convex polygon), ordered lexicographically. There are always
    /// `diagonals + 1` of them.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut faces: Vec<Vec<usize>> = vec![(0..self.n).collect()];
        for &(i, j) in &self.diagonals {
            let f = faces
                .iter()
                .position(|f| f.binary_search(&i).is_ok() && f.binary_search(&j).is_ok())
                .expect("non-crossing diagonals always lie in one face");
            let face = faces.swap_remove(f);
            let pi = face.binary_search(&i).unwrap();
            let pj = face.binary_search(&j).unwrap();
            let inner = face[pi..=pj].to_vec();
            let mut outer = face[pj..].to_vec();
            outer.extend_from_slice(&face[..=pi]);
            outer.sort_unstable();
            faces.push(inner);
            faces.push(outer);
        }
        faces.sort();
        faces
    }

    pub fn profile(&self) -> DissectionProfile {
        let mut face_sizes: Vec<usize> = self.faces().iter().map(Vec::len).collect();
        face_sizes.sort_unstable();
        let mut n_d = BTreeMap::new();
        for &s in face_sizes.iter().filter(|s| *s % 3 == 0) {
            *n_d.entry(s / 3).or_insert(0) += 1;
        }
        let even_face_count = face_sizes.iter().filter(|s| *s % 2 == 0).count();
        DissectionProfile { face_sizes, n_d, even_face_count }
    }

    pub fn is_3d(&self) -> bool {
        self.faces().iter().all(|f| f.len() % 3 == 0)
    }

    /// Number of faces at each vertex, starting at vertex 0.
    pub fn quiddity(&self) -> Result<Word> {
        if !self.is_3d() {
            return Err(Error::InvalidDissection("not a 3d-dissection".into()));
        }
        Ok(self.degree_quiddity())
    }

    /// Faces at a vertex are one more than the diagonals at it.
    fn degree_quiddity(&self) -> Word {
        let mut q = vec![1u64; self.n];
        for &(i, j) in &self.diagonals {
            q[i] += 1;
            q[j] += 1;
        }
        Word::from_vec_unchecked(q)
    }

    /// Parity of the number of faces with an even number of vertices. Odd means
    /// the quiddity solves `M = Id`, even means `M = -Id`.
    pub fn even_face_parity(&self) -> Result<Parity> {
        let p = self.profile();
        if !p.is_3d() {
            return Err(Error::InvalidDissection("not a 3d-dissection".into()));
        }
        Ok(if p.even_face_count % 2 == 1 { Parity::Odd } else { Parity::Even })
    }

    /// Relabels by `v -> v + k (mod n)`.
    pub fn rotated(&self, k: usize) -> Dissection {
        self.mapped(|v| (v + k) % self.n)
    }

    /// Relabels by `v -> -v (mod n)`.
    pub fn reflected(&self) -> Dissection {
        self.mapped(|v| (self.n - v) % self.n)
    }

    fn mapped(&self, f: impl Fn(usize) -> usize) -> Dissection {
        let mut diagonals: Vec<(usize, usize)> = self
            .diagonals
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (f(i), f(j));
                (a.min(b), a.max(b))
            })
            .collect();
        diagonals.sort_unstable();
        Dissection { n: self.n, diagonals }
    }

    /// Least image under the dihedral group of the polygon.
    pub fn dihedral_canonical(&self) -> Dissection {
        let reflected = self.reflected();
        (0..self.n).flat_map(|k| [self.rotated(k), reflected.rotated(k)]).min().expect("n >= 3")
    }

    pub fn is_centrally_symmetric(&self) -> Result<bool> {
        if self.n % 2 == 1 {
            return Err(Error::OddPolygon { n: self.n });
        }
        Ok(self.rotated(self.n / 2) == *self)
    }

    /// Entries `start .. start + n/2` (cyclically) of an (n/2)-periodic quiddity.
    pub fn half_quiddity(&self, start: usize) -> Result<Word> {
        if self.n % 2 == 1 {
            return Err(Error::OddPolygon { n: self.n });
        }
        let q = self.quiddity()?;
        let half = self.n / 2;
        if !q.is_periodic(half) {
            return Err(Error::NotPeriodic { period: half });
        }
        let v = (0..half).map(|k| q.as_slice()[(start + k) % self.n]).collect();
        Ok(Word::from_vec_unchecked(v))
    }

    /// Replays a certificate with base `(1,1,1)` on the triangle.
    ///
    /// A type 1 step at `i` glues a triangle onto the edge `(i, i+1)`. A type 2
    /// step at `i` with split `(a', a'')` cuts vertex `i` into two and inserts
    /// two new vertices between the copies; the face that grows by three
    /// vertices is the `a'`-th face around `i`, counted from the edge `(i-1, i)`.
    pub fn from_certificate(cert: &ReductionCertificate) -> Result<Dissection> {
        if cert.base.as_slice() != [1, 1, 1] {
            return Err(Error::InvalidDissection(
                "certificate base must be (1,1,1); use build_symmetric for trace-zero words".into(),
            ));
        }
        cert.steps.iter().try_fold(Dissection::bare(3)?, |d, step| d.apply_step(step))
    }

    fn apply_step(&self, step: &SurgeryStep) -> Result<Dissection> {
        let n = self.n;
        let grown = match *step {
            SurgeryStep::Type1 { position, .. } => {
                let i = position % n;
                let relabel = |v: usize| if v <= i { v } else { v + 1 };
                let mut diags: Vec<(usize, usize)> =
                    self.diagonals.iter().map(|&(a, b)| (relabel(a), relabel(b))).collect();
                // The old side (i, i+1) becomes a diagonal.
                diags.push(if i + 1 < n { (i, i + 2) } else { (0, n - 1) });
                Dissection::new(n + 1, diags)?
            }
            SurgeryStep::Type2 { position, split: (x, y), .. } => {
                let i = position % n;
                let fan = self.fan(i);
                let faces_at_i = (fan.len() - 1) as u64;
                if x == 0 || y == 0 || x + y != faces_at_i + 1 {
                    return Err(Error::InvalidDissection(format!(
                        "split ({x},{y}) does not match the {faces_at_i} faces at vertex {i}"
                    )));
                }
                let x = x as usize;
                let relabel = |v: usize| if v <= i { v } else { v + 3 };
                let mut diags = Vec::with_capacity(self.diagonals.len());
                for &(a, b) in &self.diagonals {
                    if a != i && b != i {
                        diags.push((relabel(a), relabel(b)));
                    }
                }
                for (t, &v) in fan.iter().enumerate().take(fan.len() - 1).skip(1) {
                    let end = if t < x { i } else { i + 3 };
                    diags.push((end, relabel(v)));
                }
                Dissection::new(n + 3, diags)?
            }
        };
        Ok(grown.rotated(step.shift() % grown.n))
    }

    /// Neighbours of vertex `i` in angular order, from `i-1` round to `i+1`.
    fn fan(&self, i: usize) -> Vec<usize> {
        let n = self.n;
        let mut inner: Vec<usize> = self
            .diagonals
            .iter()
            .filter_map(|&(a, b)| match (a == i, b == i) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect();
        inner.sort_unstable_by_key(|&v| core::cmp::Reverse((v + n - i) % n));
        let mut fan = vec![(i + n - 1) % n];
        fan.extend(inner);
        fan.push((i + 1) % n);
        fan
    }

    /// A centrally symmetric 3d-dissection of the `2n`-gon whose half-quiddity
    /// starting at vertex 0 is `w`, found by searching the dissections whose
    /// quiddity is `w ‖ w`.
    pub fn build_symmetric(w: &Word, budget: &Budget) -> Result<Dissection> {
        dissections_with_quiddity(&w.doubled(), budget)?
            .into_iter()
            .find(|d| d.is_centrally_symmetric() == Ok(true))
            .ok_or_else(|| Error::NotASolution { stuck: w.clone() })
    }
}

/// Calls `visit` with the diagonal list of every 3d-dissection of the labelled
/// n-gon. Each dissection is produced exactly once.
///
/// The recursion picks the face containing the edge `(lo, hi)` of the current
/// sub-polygon `lo..=hi`, then recurses into the gaps between consecutive
/// face vertices.
pub fn for_each_dissection(n: usize, mut visit: impl FnMut(&[(usize, usize)])) {
    if n < 3 {
        return;
    }
    let mut pending = vec![(0, n - 1)];
    let mut diags = Vec::new();
    recurse(&mut pending, &mut diags, &mut visit);
}

fn recurse(
    pending: &mut Vec<(usize, usize)>,
    diags: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]),
) {
    let Some((lo, hi)) = pending.pop() else {
        visit(diags);
        return;
    };
    let interior: Vec<usize> = (lo + 1..hi).collect();
    let mut chosen = Vec::new();
    choose(&interior, 0, &mut chosen, &mut |chosen| {
        let mut corners = Vec::with_capacity(chosen.len() + 2);
        corners.push(lo);
        corners.extend_from_slice(chosen);
        corners.push(hi);
        let (p0, d0) = (pending.len(), diags.len());
        for pair in corners.windows(2) {
            if pair[1] - pair[0] >= 2 {
                pending.push((pair[0], pair[1]));
                diags.push((pair[0], pair[1]));
            }
        }
        recurse(pending, diags, visit);
        pending.truncate(p0);
        diags.truncate(d0);
    });
    pending.push((lo, hi));
}

/// Subsets of `pool[from..]` extending `chosen`, in lexicographic order, whose
/// total size plus the two base corners is a multiple of three.
fn choose(pool: &[usize], from: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if (chosen.len() + 2).is_multiple_of(3) {
        f(chosen);
    }
    for k in from..pool.len() {
        chosen.push(pool[k]);
        choose(pool, k + 1, chosen, f);
        chosen.pop();
    }
}

/// All 3d-dissections of the labelled n-gon, sorted by diagonal list.
pub fn enumerate_dissections(n: usize, budget: &Budget) -> Result<Vec<Dissection>> {
    Budget::check(budget.dissections, "dissection enumeration", n)?;
    let mut out = Vec::new();
    for_each_dissection(n, |diags| {
        let mut diagonals = diags.to_vec();
        diagonals.sort_unstable();
        out.push(Dissection { n, diagonals });
    });
    out.sort();
    Ok(out)
}

/// Every 3d-dissection whose quiddity is exactly `w` (not up to rotation).
pub fn dissections_with_quiddity(w: &Word, budget: &Budget) -> Result<Vec<Dissection>> {
    let n = w.len();
    Budget::check(budget.dissections, "dissection enumeration", n)?;
    let target = w.as_slice();
    let mut degrees = vec![0u64; n];
    let mut out = Vec::new();
    for_each_dissection(n, |diags| {
        degrees.iter_mut().for_each(|d| *d = 1);
        for &(i, j) in diags {
            degrees[i] += 1;
            degrees[j] += 1;
        }
        if degrees == target {
            let mut diagonals = diags.to_vec();
            diagonals.sort_unstable();
            out.push(Dissection { n, diagonals });
        }
    });
    out.sort();
    Ok(out)
}
