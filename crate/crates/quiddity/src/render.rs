//! Text, DOT and SVG renderings.

use std::f64::consts::PI;
use std::fmt::Write;

use quiddity_core::dissection::Dissection;
use quiddity_core::sturm::Frieze;

/// Staggered frieze text. Row `r` occupies the half-columns `x` with
/// `x ≡ r (mod 2)`, `1 <= x <= 2 * width`, and shows `entry(r, (x - r)/2 + shift)`.
/// Entries are right-aligned in cells of equal width.
pub fn frieze_text(f: &Frieze, width: usize, shift: isize) -> String {
    let cells: Vec<Vec<(usize, String)>> = (0..f.row_count())
        .map(|r| {
            (1..=2 * width)
                .filter(|x| (x + r) % 2 == 0)
                .map(|x| {
                    let i = (x as isize - r as isize) / 2 + shift;
                    (x, f.entry(r, i).to_string())
                })
                .collect()
        })
        .collect();
    let cell = cells.iter().flatten().map(|(_, s)| s.len()).max().unwrap_or(1) + 1;
    let mut out = String::new();
    for row in cells {
        let mut line = String::new();
        for (x, s) in row {
            let end = x * cell;
            let pad = end - s.len() - line.len();
            line.push_str(&" ".repeat(pad));
            line.push_str(&s);
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn labels(d: &Dissection) -> Vec<String> {
    match d.quiddity() {
        Ok(q) => q.as_slice().iter().map(u64::to_string).collect(),
        Err(_) => vec![String::new(); d.n()],
    }
}

/// Undirected DOT graph; sides are solid, diagonals dashed, vertices labelled
/// `index:quiddity`.
pub fn dot(d: &Dissection) -> String {
    let n = d.n();
    let mut out = String::from("graph dissection {\n  node [shape=circle];\n");
    for (v, q) in labels(d).iter().enumerate() {
        writeln!(out, "  {v} [label=\"{v}:{q}\"];").unwrap();
    }
    for v in 0..n {
        writeln!(out, "  {} -- {};", v, (v + 1) % n).unwrap();
    }
    for &(i, j) in d.diagonals() {
        writeln!(out, "  {i} -- {j} [style=dashed];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Vertices on the unit circle, vertex 0 at 90°, numbered counterclockwise.
pub fn svg(d: &Dissection) -> String {
    let n = d.n();
    let point = |v: usize| {
        let t = PI / 2.0 + 2.0 * PI * v as f64 / n as f64;
        (t.cos(), -t.sin())
    };
    let mut out = String::from(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.3 -1.3 2.6 2.6\" width=\"400\" height=\"400\">\n",
    );
    let outline: Vec<String> = (0..n)
        .map(|v| {
            let (x, y) = point(v);
            format!("{x:.4},{y:.4}")
        })
        .collect();
    writeln!(out, "  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.01\"/>", outline.join(" "))
        .unwrap();
    for &(i, j) in d.diagonals() {
        let ((x1, y1), (x2, y2)) = (point(i), point(j));
        writeln!(
            out,
            "  <line x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" stroke=\"black\" stroke-width=\"0.01\"/>"
        )
        .unwrap();
    }
    for (v, q) in labels(d).iter().enumerate() {
        let (x, y) = point(v);
        writeln!(
            out,
            "  <text x=\"{:.4}\" y=\"{:.4}\" font-size=\"0.1\" text-anchor=\"middle\" dominant-baseline=\"middle\">{q}</text>",
            1.15 * x,
            1.15 * y
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiddity_core::sturm::frieze;
    use quiddity_core::Word;

    #[test]
    fn coxeter_frieze_layout() {
        let f = frieze(&Word::from_slice(&[1, 3, 1, 2, 2]), 4).unwrap();
        let text = frieze_text(&f, 5, 0);
        let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
        assert_eq!(rows[1], ["1", "3", "1", "2", "2"]);
        assert_eq!(rows[2], ["2", "2", "1", "3", "1"]);
        // Odd rows start half a cell to the left of even rows.
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[1].len() < lines[2].len());
    }

    #[test]
    fn dot_lists_sides_and_diagonals() {
        let d = Dissection::new(7, [(1, 6)]).unwrap();
        let g = dot(&d);
        assert_eq!(g.matches(" -- ").count(), 8);
        assert!(g.contains("1 -- 6 [style=dashed];"));
        assert!(g.contains("6 [label=\"6:2\"]"));
    }

    #[test]
    fn svg_puts_vertex_zero_on_top() {
        let d = Dissection::bare(6).unwrap();
        let s = svg(&d);
        assert!(s.contains("points=\"0.0000,-1.0000 "));
        assert_eq!(s.matches("<text").count(), 6);
        assert_eq!(s.matches("<line").count(), 0);
    }
}
