//! Checkers for the determinant identities. Every checker returns an
//! [`IdentityReport`] comparing both sides exactly.

mod bazin;
mod converse;
mod factorial;
mod hamel;
mod jt;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hring::{Fingerprint, HPoly};

pub use bazin::{bazin_sides, random_labelled_matrix};
pub use converse::{verify_converse, ConverseConstruction};
pub use factorial::{factorial_entries, verify_factorial, Entry, FactorialForm};
pub use hamel::{
    attach_rule_sides, general_hg_sides, verify_attach_rule, verify_general_hg, verify_giambelli,
    verify_hamel_goulden, verify_strip_lemma, GeneralHgSides,
};
pub use jt::{
    code_lemma_holds, strip_determinant, verify_kreiman, verify_kreiman_straight, verify_lp,
    verify_lp_straight, verify_main, verify_outer_strip_formula, KreimanLhs,
};

/// Identifiers accepted by `schurdet verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "thm3.3")]
    Main,
    #[serde(rename = "thm4.2")]
    LascouxPragacz,
    #[serde(rename = "thm4.3")]
    Kreiman,
    #[serde(rename = "cor4.4")]
    OuterStrip,
    #[serde(rename = "cor4.5")]
    LpStraight,
    #[serde(rename = "cor4.6")]
    KreimanStraight,
    #[serde(rename = "cor4.7")]
    Factorial,
    #[serde(rename = "thm5.3")]
    GeneralHamelGoulden,
    #[serde(rename = "cor5.7")]
    HamelGoulden,
    #[serde(rename = "cor5.9")]
    Giambelli,
    #[serde(rename = "lem5.10")]
    AttachRule,
    #[serde(rename = "thm6.1")]
    Converse,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Main,
        TheoremId::LascouxPragacz,
        TheoremId::Kreiman,
        TheoremId::OuterStrip,
        TheoremId::LpStraight,
        TheoremId::KreimanStraight,
        TheoremId::Factorial,
        TheoremId::GeneralHamelGoulden,
        TheoremId::HamelGoulden,
        TheoremId::Giambelli,
        TheoremId::AttachRule,
        TheoremId::Converse,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::Main => "thm3.3",
            TheoremId::LascouxPragacz => "thm4.2",
            TheoremId::Kreiman => "thm4.3",
            TheoremId::OuterStrip => "cor4.4",
            TheoremId::LpStraight => "cor4.5",
            TheoremId::KreimanStraight => "cor4.6",
            TheoremId::Factorial => "cor4.7",
            TheoremId::GeneralHamelGoulden => "thm5.3",
            TheoremId::HamelGoulden => "cor5.7",
            TheoremId::Giambelli => "cor5.9",
            TheoremId::AttachRule => "lem5.10",
            TheoremId::Converse => "thm6.1",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Input(format!("unknown identity '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    TrivialPass,
    Zero,
}

/// Summary of one side of an identity: a ring fingerprint or a list of exact values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Side {
    Poly(Fingerprint),
    Values(Vec<String>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityReport {
    pub theorem: TheoremId,
    pub form: String,
    pub instance: Value,
    pub k: usize,
    pub lhs: Side,
    pub rhs: Side,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

pub(crate) fn elapsed_ms(start: Instant) -> Option<f64> {
    Some((start.elapsed().as_secs_f64() * 1e6).round() / 1e3)
}

pub(crate) struct ReportBuilder {
    pub theorem: TheoremId,
    pub instance: Value,
    pub start: Instant,
}

impl ReportBuilder {
    pub fn new(theorem: TheoremId, instance: Value) -> Self {
        ReportBuilder {
            theorem,
            instance,
            start: Instant::now(),
        }
    }

    pub fn poly(
        &self,
        form: &str,
        k: usize,
        lhs: &HPoly,
        rhs: &HPoly,
        detail: Value,
    ) -> IdentityReport {
        let verdict = if lhs != rhs {
            Verdict::Fail
        } else if k == 0 {
            Verdict::TrivialPass
        } else if lhs.is_zero() {
            Verdict::Zero
        } else {
            Verdict::Pass
        };
        self.finish(
            form,
            k,
            Side::Poly(lhs.fingerprint()),
            Side::Poly(rhs.fingerprint()),
            verdict,
            detail,
        )
    }

    pub fn values(
        &self,
        form: &str,
        k: usize,
        lhs: &[BigRational],
        rhs: &[BigRational],
        detail: Value,
    ) -> IdentityReport {
        let verdict = if lhs != rhs {
            Verdict::Fail
        } else if k == 0 {
            Verdict::TrivialPass
        } else if lhs.iter().all(num_traits::Zero::is_zero) {
            Verdict::Zero
        } else {
            Verdict::Pass
        };
        let show = |v: &[BigRational]| Side::Values(v.iter().map(|x| x.to_string()).collect());
        self.finish(form, k, show(lhs), show(rhs), verdict, detail)
    }

    pub fn finish(
        &self,
        form: &str,
        k: usize,
        lhs: Side,
        rhs: Side,
        verdict: Verdict,
        detail: Value,
    ) -> IdentityReport {
        IdentityReport {
            theorem: self.theorem,
            form: form.to_string(),
            instance: self.instance.clone(),
            k,
            lhs,
            rhs,
            verdict,
            elapsed_ms: elapsed_ms(self.start),
            detail,
        }
    }
}

pub(crate) fn chi(b: bool) -> i64 {
    i64::from(b)
}

pub(crate) fn signed(p: HPoly, odd: bool) -> HPoly {
    if odd {
        -&p
    } else {
        p
    }
}

/// Number of pairs `(i, j)` with `x_i > y_j`.
pub fn inv(x: &[i64], y: &[i64]) -> usize {
    x.iter()
        .map(|a| y.iter().filter(|&&b| *a > b).count())
        .sum()
}

/// Parity of the permutation sorting `v` ascending; `None` when `v` has repeats.
pub(crate) fn sort_parity(v: &[i64]) -> Option<bool> {
    let mut odd = false;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] > v[j] {
                odd = !odd;
            }
        }
    }
    Some(odd)
}

pub(crate) fn pow_km1(base: &HPoly, k: usize) -> HPoly {
    base.pow(k.saturating_sub(1) as u32)
}
