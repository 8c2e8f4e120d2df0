//! A registry of named, exhaustively checkable results. Every check runs
//! at explicit bounds and yields a [`PairReport`]; failures carry a witness
//! (word, partition or monomial) that reproduces the failure on its own.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Debug, Display};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::genfun::{inv_distribution, maj_distribution};
use crate::poly::LaurentPoly;
use crate::word::Word;

mod ballot;
mod fibonacci;
mod lucas;
mod partitions;
mod words;

/// Named integer bounds for a check, e.g. `n = 6` or `degree = 20`.
pub type Params = BTreeMap<String, usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Small bounds, the whole suite in a few seconds.
    Quick,
    /// Desk-scale bounds, the whole suite in a few minutes.
    Full,
}

impl std::str::FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::UnknownParameter(format!("profile {other}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u64,
    /// The compared polynomials: on failure the diverging pair, otherwise
    /// the last pair compared. Absent for purely set-valued checks.
    #[serde(skip)]
    pub left: Option<LaurentPoly>,
    #[serde(skip)]
    pub right: Option<LaurentPoly>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

impl Display for PairReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{verdict} {} [{}] ({} ms)", self.check, params.join(" "), self.millis)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

/// Accumulates comparisons for one check and keeps the first failure.
#[derive(Default)]
pub(crate) struct Checker {
    left: Option<LaurentPoly>,
    right: Option<LaurentPoly>,
    witness: Option<String>,
}

fn monomial_text(e: &crate::poly::Exponents) -> String {
    LaurentPoly::monomial(1, *e).to_string()
}

impl Checker {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub(crate) fn fail(&mut self, witness: String) {
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }

    pub(crate) fn ensure(&mut self, cond: bool, witness: impl FnOnce() -> String) {
        if !cond && !self.failed() {
            self.fail(witness());
        }
    }

    pub(crate) fn polys(&mut self, label: impl Display, left: LaurentPoly, right: LaurentPoly) {
        if self.failed() {
            return;
        }
        if let Some((e, a, b)) = left.first_difference(&right) {
            self.fail(format!(
                "{label}: coefficient of {} is {a} on the left and {b} on the right",
                monomial_text(&e)
            ));
        }
        self.left = Some(left);
        self.right = Some(right);
    }

    pub(crate) fn equal<T: PartialEq + Debug>(&mut self, label: impl Display, left: T, right: T) {
        if !self.failed() && left != right {
            self.fail(format!("{label}: {left:?} != {right:?}"));
        }
    }

    /// Two-sided inclusion with the smallest stray element as witness.
    pub(crate) fn same_sets<T: Ord + Display>(
        &mut self,
        label: impl Display,
        left: &BTreeSet<T>,
        right: &BTreeSet<T>,
    ) {
        if self.failed() {
            return;
        }
        if let Some(x) = left.difference(right).next() {
            self.fail(format!("{label}: {x} is only on the left"));
        } else if let Some(x) = right.difference(left).next() {
            self.fail(format!("{label}: {x} is only on the right"));
        }
    }
}

pub(crate) fn get(p: &Params, key: &str) -> usize {
    *p.get(key).unwrap_or_else(|| panic!("parameter {key} is declared"))
}

type Runner = fn(&Params) -> Result<Checker>;

pub struct CheckSpec {
    pub id: &'static str,
    /// The asserted statement.
    pub summary: &'static str,
    quick: &'static [(&'static str, usize)],
    full: &'static [(&'static str, usize)],
    /// Set for statements that are tested but have no written proof.
    pub empirical: bool,
    run: Runner,
}

impl CheckSpec {
    pub fn defaults(&self, profile: Profile) -> Params {
        let table = match profile {
            Profile::Quick => self.quick,
            Profile::Full => self.full,
        };
        table.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    fn params(&self, profile: Profile, overrides: &Params) -> Result<Params> {
        let mut params = self.defaults(profile);
        for (k, &v) in overrides {
            match params.get_mut(k) {
                Some(slot) => *slot = v,
                None => {
                    return Err(Error::UnknownParameter(format!("{k} for check {}", self.id)))
                }
            }
        }
        Ok(params)
    }

    fn execute(&self, params: Params) -> PairReport {
        let start = Instant::now();
        let outcome = (self.run)(&params);
        let millis = start.elapsed().as_millis() as u64;
        let mut json: Map<String, Value> =
            params.iter().map(|(k, &v)| (k.clone(), Value::from(v))).collect();
        if self.empirical {
            json.insert("empirical".into(), Value::Bool(true));
        }
        let checker = outcome.unwrap_or_else(|e| {
            let mut c = Checker::new();
            c.fail(format!("error: {e}"));
            c
        });
        PairReport {
            check: self.id.to_string(),
            params: json,
            verdict: if checker.failed() { Verdict::Fail } else { Verdict::Pass },
            witness: checker.witness,
            millis,
            left: checker.left,
            right: checker.right,
        }
    }
}

macro_rules! spec {
    ($id:literal, $summary:literal, quick: $q:expr, full: $f:expr, $run:path) => {
        CheckSpec {
            id: $id,
            summary: $summary,
            quick: $q,
            full: $f,
            empirical: false,
            run: $run,
        }
    };
}

pub(crate) use spec;

/// Every registered check, in suite order.
pub fn registry() -> &'static [CheckSpec] {
    static REGISTRY: std::sync::OnceLock<Vec<CheckSpec>> = std::sync::OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(words::checks());
        all.extend(ballot::checks());
        all.extend(fibonacci::checks());
        all.extend(partitions::checks());
        all.extend(lucas::checks());
        all
    })
}

pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

pub fn find_check(id: &str) -> Result<&'static CheckSpec> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one check at the profile's bounds with `overrides` applied.
pub fn check_named(id: &str, profile: Profile, overrides: &Params) -> Result<PairReport> {
    let spec = find_check(id)?;
    Ok(spec.execute(spec.params(profile, overrides)?))
}

/// Runs every check accepted by `filter` in parallel; reports come back in
/// registry order.
pub fn run_suite(profile: Profile, filter: impl Fn(&str) -> bool + Sync) -> Vec<PairReport> {
    run_suite_with(profile, filter, &Params::new())
}

/// Like [`run_suite`], with each override applied to the checks that take
/// that parameter.
pub fn run_suite_with(
    profile: Profile,
    filter: impl Fn(&str) -> bool + Sync,
    overrides: &Params,
) -> Vec<PairReport> {
    registry()
        .par_iter()
        .filter(|c| filter(c.id))
        .map(|c| {
            let mut params = c.defaults(profile);
            for (k, v) in overrides {
                if let Some(slot) = params.get_mut(k) {
                    *slot = *v;
                }
            }
            c.execute(params)
        })
        .collect()
}

/// Compares `Σ_{S} q^{maj}` with `Σ_{T} q^{inv}`.
pub fn check_mahonian_pair(s: &[Word], t: &[Word]) -> PairReport {
    let start = Instant::now();
    let mut c = Checker::new();
    c.polys("maj over S vs inv over T", maj_distribution(s), inv_distribution(t));
    let mut params = Map::new();
    params.insert("left_size".into(), Value::from(s.len()));
    params.insert("right_size".into(), Value::from(t.len()));
    PairReport {
        check: "mahonian-pair".to_string(),
        params,
        verdict: if c.failed() { Verdict::Fail } else { Verdict::Pass },
        witness: c.witness,
        millis: start.elapsed().as_millis() as u64,
        left: c.left,
        right: c.right,
    }
}
