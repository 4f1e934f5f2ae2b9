//! Named verification checks replayed against constructed and bundled rings.
//!
//! Every check is a registration `id → fn(&Tables) -> Vec<CheckResult>`;
//! suites are filters over the registry. Results are sorted by id, so the
//! report does not depend on execution order.

mod checks;
mod corest;
mod props;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qalgebra::QRing;
use crate::rings::{Provenance, RingTable};

pub use checks::{
    bqh_obstruction_suite, catalog_check, ci_admissible_pairs, ci_check, coadjoint_kernel_check,
    coadjoint_radical_check, corest_suite, gr2_check, gr2_graded_dims, graded_dimension_check,
    graded_dimension_suite, ig2_graded_dims, kernel_residues, projective_check,
    radical_structure_check, rootsys_check, semisimple_targets_check,
};
pub use corest::{corest_check, Corestriction, StratumMap};
pub use props::{
    brute_force_nilpotent, property_suite, random_algebra, random_split_algebra, PropertyStats,
    PROPS_SEED,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped(_) => "SKIPPED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Skipped(r) => write!(f, "SKIPPED({r})"),
            s => f.write_str(s.as_str()),
        }
    }
}

/// Outcome of one check. `witness` carries the offending data on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    /// The statement being replayed.
    pub anchor: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn pass(id: impl Into<String>, anchor: &str, detail: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        anchor: &str,
        detail: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Fail,
            detail: detail.into(),
            witness: Some(witness.into()),
        }
    }

    pub fn skipped(id: impl Into<String>, anchor: &str, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Skipped(reason.clone()),
            detail: reason,
            witness: None,
        }
    }

    /// `PASS` when `ok`, otherwise `FAIL` with `detail` as the witness.
    pub fn check(id: impl Into<String>, anchor: &str, ok: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        if ok {
            Self::pass(id, anchor, detail)
        } else {
            Self::fail(id, anchor, detail.clone(), detail)
        }
    }

    pub fn error(id: impl Into<String>, anchor: &str, e: &Error) -> Self {
        Self::fail(id, anchor, format!("error: {e}"), e.to_string())
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Ring tables used by the table-driven checks. A missing table turns the
/// checks that need it into `SKIPPED`.
#[derive(Clone, Debug, Default)]
pub struct Tables {
    pub ig26: Option<RingTable>,
    pub ig28: Option<RingTable>,
    pub f4p4: Option<RingTable>,
}

impl Tables {
    /// The tables shipped with the crate.
    pub fn bundled() -> Result<Self> {
        let get = |name: &str| RingTable::bundled(name).transpose();
        Ok(Self {
            ig26: get("ig26")?,
            ig28: get("ig28")?,
            f4p4: get("f4p4")?,
        })
    }

    pub fn get(&self, name: &str) -> Option<&QRing> {
        let t = match name {
            "ig26" => self.ig26.as_ref(),
            "ig28" => self.ig28.as_ref(),
            "f4p4" => self.f4p4.as_ref(),
            _ => None,
        };
        t.map(|t| &t.ring)
    }

    pub(crate) fn require(&self, name: &str) -> std::result::Result<&QRing, String> {
        self.get(name).ok_or_else(|| {
            format!(
                "missing data: {name} table ({} provenance) not supplied",
                Provenance::External
            )
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Replays of statements about the rings.
    Paper,
    /// Randomised algebraic properties with a fixed seed.
    Props,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Suite::Paper),
            "props" => Ok(Suite::Props),
            "all" => Ok(Suite::All),
            _ => Err(Error::Unsupported(format!("unknown suite {s}"))),
        }
    }
}

type Runner = fn(&Tables) -> Vec<CheckResult>;

/// One registered check.
#[derive(Clone, Copy)]
pub struct Registration {
    pub id: &'static str,
    pub suite: Suite,
    pub run: Runner,
}

/// Every registered check, in canonical order.
pub fn registry() -> Vec<Registration> {
    let paper = |id, run| Registration {
        id,
        suite: Suite::Paper,
        run,
    };
    vec![
        paper("rootsys", |_| vec![rootsys_check()]),
        paper("pn", |_| vec![projective_check()]),
        paper("ci", |_| vec![ci_check()]),
        paper("gr2", |_| vec![gr2_check()]),
        paper("coadjoint.kernel", |_| vec![coadjoint_kernel_check()]),
        paper("coadjoint.radical", coadjoint_radical_check),
        paper("graded", graded_dimension_suite),
        paper("corest", |_| corest_suite()),
        paper("semisimple", semisimple_targets_check),
        paper("bqh", bqh_obstruction_suite),
        paper("catalog", |_| vec![catalog_check()]),
        Registration {
            id: "props",
            suite: Suite::Props,
            run: |_| property_suite(PROPS_SEED, 120).1,
        },
    ]
}

/// Deterministic report of a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn failures(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| r.failed()).collect()
    }

    /// No check failed; skipped checks do not count as failures.
    pub fn ok(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn count(&self, s: &str) -> usize {
        self.results
            .iter()
            .filter(|r| r.status.as_str() == s)
            .count()
    }

    /// Line-oriented UTF-8 serialization, one block per check in id order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "report {}\nchecks {}\npass {}\nfail {}\nskipped {}\n",
            match self.suite {
                Suite::Paper => "paper",
                Suite::Props => "props",
                Suite::All => "all",
            },
            self.results.len(),
            self.count("PASS"),
            self.count("FAIL"),
            self.count("SKIPPED"),
        ));
        for r in &self.results {
            out.push_str(&format!("check {}\n", r.id));
            out.push_str(&format!("anchor {}\n", r.anchor));
            out.push_str(&format!("status {}\n", r.status));
            out.push_str(&format!("detail {}\n", one_line(&r.detail)));
            if let Some(w) = &r.witness {
                out.push_str(&format!("witness {}\n", one_line(w)));
            }
        }
        out
    }
}

fn one_line(s: &str) -> String {
    s.replace('\n', " ")
}

/// Run every registration of `suite` concurrently and sort the results.
pub fn run_suite(suite: Suite, tables: &Tables) -> Report {
    let regs: Vec<Registration> = registry()
        .into_iter()
        .filter(|r| suite == Suite::All || r.suite == suite)
        .collect();
    let mut results: Vec<CheckResult> = std::thread::scope(|s| {
        let handles: Vec<_> = regs
            .iter()
            .map(|r| {
                let run = r.run;
                s.spawn(move || run(tables))
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("check panicked"))
            .collect()
    });
    results.sort_by(|a, b| a.id.cmp(&b.id));
    Report { suite, results }
}
