//! JSON documents printed by `--format json`. Every type round-trips through
//! `serde_json`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use quiddity_core::dissection::Dissection;
use quiddity_core::psl2::ProbeEntry;
use quiddity_core::sturm::Frieze;
use quiddity_core::{Mat2, ReductionCertificate, SurgeryStep, Word};

fn small(x: &BigInt) -> i128 {
    i128::try_from(x).expect("value fits in 128 bits")
}

fn matrix(m: &Mat2) -> [[i128; 2]; 2] {
    [[small(&m.a), small(&m.b)], [small(&m.c), small(&m.d)]]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub word: Vec<u64>,
    pub class: String,
    pub trace: i128,
    pub s: Option<usize>,
    pub r: Option<usize>,
    pub sum: u64,
    pub expected_sum: Option<i64>,
    pub sum_ok: Option<bool>,
    pub max_entry: u64,
    pub entry_bound: Option<u64>,
    pub entry_bound_ok: Option<bool>,
    pub index_twice: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub problem: u8,
    pub n: usize,
    pub engine: String,
    /// `"none"`, `"rotation"` or `"dihedral"`; with orbits, `count` counts classes.
    pub orbits: String,
    pub count: usize,
    /// Omitted with `--count`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    /// 1 or 2.
    pub kind: u8,
    pub position: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<(u64, u64)>,
    pub shift: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub word: Vec<u64>,
    pub base: Vec<u64>,
    pub s: usize,
    pub r: usize,
    pub steps: Vec<StepJson>,
}

impl CertificateJson {
    pub fn new(word: &Word, cert: &ReductionCertificate) -> Self {
        let steps = cert
            .steps
            .iter()
            .map(|step| match *step {
                SurgeryStep::Type1 { position, shift } => StepJson { kind: 1, position, split: None, shift },
                SurgeryStep::Type2 { position, split, shift } => {
                    StepJson { kind: 2, position, split: Some(split), shift }
                }
            })
            .collect();
        CertificateJson {
            word: word.as_slice().to_vec(),
            base: cert.base.as_slice().to_vec(),
            s: cert.s,
            r: cert.r,
            steps,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DissectionJson {
    pub n: usize,
    pub diagonals: Vec<[usize; 2]>,
}

impl DissectionJson {
    pub fn new(d: &Dissection) -> Self {
        DissectionJson { n: d.n(), diagonals: d.diagonals().iter().map(|&(i, j)| [i, j]).collect() }
    }

    pub fn to_dissection(&self) -> Result<Dissection, String> {
        Dissection::new(self.n, self.diagonals.iter().map(|&[i, j]| (i, j))).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriezeJson {
    pub word: Vec<u64>,
    pub rows: Vec<Vec<i128>>,
}

impl FriezeJson {
    pub fn new(f: &Frieze) -> Self {
        FriezeJson {
            word: f.word.as_slice().to_vec(),
            rows: f.rows.iter().map(|row| row.iter().map(small).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementReport {
    pub element: [[i128; 2]; 2],
    pub reduced: Vec<u64>,
    pub quiddity: Vec<u64>,
    pub index_twice: i64,
    /// `None` when the quiddity is longer than the dissection budget.
    pub dissections_found: Option<usize>,
}

impl ElementReport {
    pub fn new(element: &Mat2, reduced: &Word, quiddity: &Word, index_twice: i64, found: Option<usize>) -> Self {
        ElementReport {
            element: matrix(element),
            reduced: reduced.as_slice().to_vec(),
            quiddity: quiddity.as_slice().to_vec(),
            index_twice,
            dissections_found: found,
        }
    }

    pub fn from_probe(e: &ProbeEntry) -> Self {
        Self::new(&e.element, &e.reduced, &e.quiddity, e.index.twice, Some(e.dissections_found))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FareyReport {
    pub order: u64,
    pub word: Vec<u64>,
    pub n: usize,
    pub sum: u64,
    pub class: String,
    pub totally_positive: bool,
}
