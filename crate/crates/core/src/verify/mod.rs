//! Theorem-verification suites and counterexample search over enumerated
//! corpora. Each statement of the underlying theory gets exactly one
//! suite; suites run to completion and aggregate violations rather than
//! stopping at the first failure, so a genuine refutation (or an
//! implementation bug) produces a full witness list.

pub mod corpus;
pub mod search;
pub mod suites;

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub use corpus::{Corpus, CorpusParams, GpTask, DEFAULT_SEED};
pub use search::{search, SearchOutcome};

/// Outcome of one suite run. Violations are sorted canonically, so two
/// runs with the same corpus parameters produce byte-identical reports up
/// to the timing field.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: Value,
    pub checked: u64,
    pub violations: Vec<Value>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn assemble(
        suite: &str,
        params: Value,
        parts: Vec<(u64, Vec<Value>)>,
        started: Instant,
    ) -> Report {
        let mut checked = 0u64;
        let mut violations = Vec::new();
        for (count, mut vs) in parts {
            checked += count;
            violations.append(&mut vs);
        }
        violations.sort_by_key(|v| v.to_string());
        Report {
            suite: suite.into(),
            params,
            checked,
            violations,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }
}

/// Names of all suites, in the order `run_suite("all", ..)` executes them.
/// The machine-readable manifest for harness discovery.
pub fn manifest() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Which checker and construction operations each suite exercises; the
/// coverage self-test asserts the union touches every operation.
pub struct SuiteInfo {
    pub name: &'static str,
    pub ops: &'static [&'static str],
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        name: "thm-2-4",
        ops: &["pullback_gp", "is_strong_gp"],
    },
    SuiteInfo {
        name: "prop-2-5",
        ops: &["jointly_strongly_epic", "is_strong_gp"],
    },
    SuiteInfo {
        name: "cor-2-6",
        ops: &["canonical_point", "as_generalized", "is_strong_gp"],
    },
    SuiteInfo {
        name: "conditions",
        ops: &[
            "pullback_gp",
            "product_gp",
            "equalizer_gp",
            "canonical_point",
            "as_generalized",
            "is_strong_gp",
            "is_schreier_point",
            "is_schreier_gp",
        ],
    },
    SuiteInfo {
        name: "thm-3-4",
        ops: &[
            "map_f",
            "map_g",
            "canonical_point",
            "as_generalized",
            "is_schreier_point",
            "is_schreier_gp",
        ],
    },
    SuiteInfo {
        name: "thm-4-5",
        ops: &["canonical_point", "is_schreier_point", "is_schreier_gp"],
    },
    SuiteInfo {
        name: "thm-4-6",
        ops: &[
            "witness_g",
            "is_regular_schreier_epi",
            "is_schreier_epi",
            "representatives",
            "is_schreier_gp",
        ],
    },
    SuiteInfo {
        name: "cor-4-7",
        ops: &["canonical_point", "is_schreier_point", "is_regular_schreier_epi"],
    },
    SuiteInfo {
        name: "remark-4-4",
        ops: &["is_schreier_gp", "is_strong_gp"],
    },
];

/// Every checker and construction operation the suites must touch.
pub const REQUIRED_OPS: &[&str] = &[
    "as_generalized",
    "jointly_strongly_epic",
    "is_strong_gp",
    "is_schreier_point",
    "representatives",
    "is_schreier_epi",
    "is_regular_schreier_epi",
    "is_schreier_gp",
    "pullback_gp",
    "canonical_point",
    "map_f",
    "map_g",
    "product_gp",
    "equalizer_gp",
    "witness_g",
];

/// Runs one suite by manifest name; `"all"` runs every suite in manifest
/// order and returns the reports in that order.
pub fn run_suite(name: &str, corpus: &Corpus) -> Result<Vec<Report>> {
    if name == "all" {
        return manifest()
            .iter()
            .map(|n| run_one(n, corpus))
            .collect::<Result<Vec<_>>>();
    }
    Ok(vec![run_one(name, corpus)?])
}

fn run_one(name: &str, corpus: &Corpus) -> Result<Report> {
    match name {
        "thm-2-4" => Ok(suites::suite_thm_2_4(corpus)),
        "prop-2-5" => Ok(suites::suite_prop_2_5(corpus)),
        "cor-2-6" => Ok(suites::suite_cor_2_6(corpus)),
        "conditions" => Ok(suites::suite_conditions(corpus)),
        "thm-3-4" => Ok(suites::suite_thm_3_4(corpus)),
        "thm-4-5" => Ok(suites::suite_thm_4_5(corpus)),
        "thm-4-6" => Ok(suites::suite_thm_4_6(corpus)),
        "cor-4-7" => Ok(suites::suite_cor_4_7(corpus)),
        "remark-4-4" => Ok(suites::suite_remark_4_4(corpus)),
        other => Err(Error::UnknownSuite(other.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_has_one_suite_per_statement() {
        assert_eq!(
            manifest(),
            vec![
                "thm-2-4",
                "prop-2-5",
                "cor-2-6",
                "conditions",
                "thm-3-4",
                "thm-4-5",
                "thm-4-6",
                "cor-4-7",
                "remark-4-4",
            ]
        );
    }

    #[test]
    fn suite_coverage_touches_every_operation() {
        let covered: std::collections::BTreeSet<&str> =
            SUITES.iter().flat_map(|s| s.ops.iter().copied()).collect();
        for op in REQUIRED_OPS {
            assert!(covered.contains(op), "operation `{op}` not covered by any suite");
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        let corpus = Corpus::build(CorpusParams::new(1));
        assert!(matches!(
            run_suite("thm-9-9", &corpus),
            Err(Error::UnknownSuite(_))
        ));
    }
}
