//! JSON report format. Big integers are always decimal strings.

use std::collections::BTreeMap;

use hermite_wronskian::{
    IdentityVerdict, IndexSet, IntPolynomial, KarlinSzego, OrthogonalityReport, SegmentCertificate,
    ZeroCertificate,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Vec<Item>,
    /// Wall-clock seconds per entry of `results`, same order.
    pub timing: Vec<f64>,
    /// No verdict or certificate in `results` is negative.
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, inputs: BTreeMap<String, Value>, timed: Vec<(Item, f64)>) -> Self {
        let (results, timing): (Vec<_>, Vec<_>) = timed.into_iter().unzip();
        let ok = results.iter().all(Item::passed);
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results,
            timing,
            ok,
        }
    }

    /// The report with timing zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            timing: vec![0.0; self.timing.len()],
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootPoint {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Item {
    Omega {
        set: IndexSet,
        polynomial: IntPolynomial,
        degree: Option<usize>,
        predicted_degree: usize,
    },
    Roots {
        set: IndexSet,
        lo: String,
        hi: String,
        squarefree_part: IntPolynomial,
        real_root_count: usize,
    },
    Certificate(ZeroCertificate),
    Segment(SegmentCertificate),
    Verdict(IdentityVerdict),
    Admissible {
        set: IndexSet,
        admissible: bool,
        real_root_count: usize,
        krein_adler_holds: bool,
    },
    KarlinSzego(KarlinSzego),
    RootCloud {
        set: IndexSet,
        roots: Vec<RootPoint>,
    },
    Orthogonality {
        set: IndexSet,
        tolerance: f64,
        passed: bool,
        #[serde(flatten)]
        report: OrthogonalityReport,
    },
}

impl Item {
    /// False for a negative verdict or certificate.
    pub fn passed(&self) -> bool {
        match self {
            Item::Omega {
                degree,
                predicted_degree,
                ..
            } => *degree == Some(*predicted_degree),
            Item::Roots { .. } | Item::RootCloud { .. } => true,
            Item::Certificate(c) => c.veselov_ok,
            Item::Segment(s) => s.all_hold(),
            Item::Verdict(v) => v.holds_exactly,
            Item::Admissible {
                krein_adler_holds, ..
            } => *krein_adler_holds,
            Item::KarlinSzego(k) => k.holds(),
            Item::Orthogonality { passed, .. } => *passed,
        }
    }
}

/// Root clouds as `re,im` rows under a header.
pub fn roots_csv(roots: &[RootPoint]) -> String {
    let mut out = String::from("re,im\n");
    for r in roots {
        out.push_str(&format!("{},{}\n", r.re, r.im));
    }
    out
}
