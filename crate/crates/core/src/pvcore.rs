//! The optimal exponent `p_V`: the least `p` with `rho_h <= p rho_V`.
//!
//! On the closed dominant chamber `rho_h` is linear, so `1/p_V` is the
//! minimum of the convex function `rho_V` over the chamber slice
//! `rho_h = 1`, solved exactly as a linear program.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ratlp::{self, LinProgram, LpOutcome, Relation};
use crate::rat::{self, frac, int, Rat};
use crate::rho::{rho_eval, rho_function, rho_h, ModuleSpec, RhoFunction, SemisimpleAlg};
use crate::rootsys::WeightVec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PvValue {
    Finite(Rat),
    Infinite,
}

impl PvValue {
    /// `p` from the minimum ratio `min rho_V / rho_h`.
    pub fn from_ratio(v: &Rat) -> PvValue {
        if v.is_zero() {
            PvValue::Infinite
        } else {
            PvValue::Finite(v.recip())
        }
    }

    /// `1/p`, with `1/inf = 0`.
    pub fn inverse(&self) -> Rat {
        match self {
            PvValue::Finite(p) => p.recip(),
            PvValue::Infinite => Rat::zero(),
        }
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            PvValue::Finite(p) => Some(p),
            PvValue::Infinite => None,
        }
    }

    pub fn le(&self, bound: &Rat) -> bool {
        matches!(self, PvValue::Finite(p) if p <= bound)
    }

    pub fn parse(s: &str) -> Result<PvValue> {
        match s.trim() {
            "inf" | "infinity" => Ok(PvValue::Infinite),
            t => Ok(PvValue::Finite(rat::parse(t)?)),
        }
    }
}

impl PartialOrd for PvValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PvValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PvValue::Finite(a), PvValue::Finite(b)) => a.cmp(b),
            (PvValue::Finite(_), PvValue::Infinite) => Ordering::Less,
            (PvValue::Infinite, PvValue::Finite(_)) => Ordering::Greater,
            (PvValue::Infinite, PvValue::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for PvValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PvValue::Finite(p) => write!(f, "{p}"),
            PvValue::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PvResult {
    pub value: PvValue,
    /// `min rho_V / rho_h` over nonzero `Y`; equals `1/p_V`.
    pub ratio: Rat,
    /// Dominant `Y` with `rho_h(Y) = 1` attaining the minimum.
    pub minimizer: WeightVec,
    pub dim_v: u64,
}

/// Minimizes `rho` (given by its lines) over the cone spanned by
/// `coweights`, normalized by the linear form with values `rho_h_cw` on
/// them. Returns the minimum and a minimizer.
pub fn chamber_minimum(
    lines: &[(WeightVec, u64)],
    coweights: &[WeightVec],
    rho_h_cw: &[Rat],
) -> Result<(Rat, WeightVec)> {
    let r = coweights.len();
    let dim = coweights.first().map_or(0, WeightVec::dim);
    let mut linear = vec![Rat::zero(); r];
    let mut mixed: Vec<(Vec<Rat>, u64)> = Vec::new();
    for (l, m) in lines {
        let vals: Vec<Rat> = coweights.iter().map(|w| l.dot(&w.0)).collect();
        let half_m = frac(*m as i64, 2);
        if vals.iter().all(|v| !v.is_negative()) {
            rat::axpy(&mut linear, &half_m, &vals);
        } else if vals.iter().all(|v| !v.is_positive()) {
            rat::axpy(&mut linear, &-half_m, &vals);
        } else {
            mixed.push((vals, *m));
        }
    }

    // Variables: c_1..c_r (chamber coordinates), then one slack per mixed line.
    let n = r + mixed.len();
    let mut objective = linear;
    objective.extend(mixed.iter().map(|(_, m)| frac(*m as i64, 2)));
    let mut lp = LinProgram::new(n).minimize(objective).nonnegative(0..n);
    for (k, (vals, _)) in mixed.iter().enumerate() {
        for sgn in [1, -1] {
            let mut row: Vec<Rat> = vals.iter().map(|v| v * int(-sgn)).collect();
            row.resize(n, Rat::zero());
            row[r + k] = int(1);
            lp.constrain(row, Relation::Ge, Rat::zero());
        }
    }
    let mut norm = rho_h_cw.to_vec();
    norm.resize(n, Rat::zero());
    lp.constrain(norm, Relation::Eq, int(1));

    match ratlp::solve(&lp)? {
        LpOutcome::Optimal(s) => {
            let mut y = vec![Rat::zero(); dim];
            for (c, w) in s.point.iter().zip(coweights) {
                rat::axpy(&mut y, c, &w.0);
            }
            Ok((s.value, WeightVec(y)))
        }
        other => Err(Error::Lp(format!("chamber program not optimal: {other:?}"))),
    }
}

pub fn compute_pv_rho(alg: &SemisimpleAlg, rho_v: &RhoFunction) -> Result<PvResult> {
    if alg.rank() == 0 {
        return Err(Error::Lp("algebra has rank zero".into()));
    }
    let (ratio, minimizer) = chamber_minimum(&rho_v.lines, &alg.coweights(), &alg.rho_on_coweights())?;
    Ok(PvResult { value: PvValue::from_ratio(&ratio), ratio, minimizer, dim_v: rho_v.module_dim() })
}

pub fn compute_pv(alg: &SemisimpleAlg, spec: &ModuleSpec) -> Result<PvResult> {
    compute_pv_rho(alg, &rho_function(alg, spec)?)
}

#[derive(Clone, Debug)]
pub struct Verdict {
    /// `rho_h <= rho_q`.
    pub tempered: bool,
    pub p_q: PvValue,
    /// `X` with `rho_h(X) > rho_q(X)` when not tempered.
    pub witness: Option<WeightVec>,
}

pub fn temperedness_check(alg: &SemisimpleAlg, q: &ModuleSpec) -> Result<Verdict> {
    let rq = rho_function(alg, q)?;
    let res = compute_pv_rho(alg, &rq)?;
    let tempered = res.value.le(&int(1));
    let witness = if tempered {
        None
    } else {
        let x = res.minimizer;
        debug_assert!(is_witness(alg, &rq, &x.0));
        Some(x)
    };
    Ok(Verdict { tempered, p_q: res.value, witness })
}

/// `rho_h(X) > rho_V(X)`.
pub fn is_witness(alg: &SemisimpleAlg, rho_v: &RhoFunction, x: &[Rat]) -> bool {
    rho_eval(&rho_h(alg), x) > rho_eval(rho_v, x)
}

/// Whether every nonzero `X` is a witness. `rho_V` is convex and `rho_h`
/// linear on the chamber, so it suffices to check the fundamental coweights.
pub fn universal_witness(alg: &SemisimpleAlg, rho_v: &RhoFunction) -> bool {
    alg.coweights().iter().all(|w| is_witness(alg, rho_v, &w.0))
}

/// `p_{V1 (x) V2} <= p1/d2 + p2/d1`.
pub fn tensor_bound(p1: &PvValue, d1: u64, p2: &PvValue, d2: u64) -> PvValue {
    match (p1, p2) {
        (PvValue::Finite(a), PvValue::Finite(b)) => {
            PvValue::Finite(a / int(d2 as i64) + b / int(d1 as i64))
        }
        _ => PvValue::Infinite,
    }
}

/// `1/p_{V1+V2} >= 1/p_{V1} + 1/p_{V2}`.
pub fn superadditivity_check(alg: &SemisimpleAlg, v1: &ModuleSpec, v2: &ModuleSpec) -> Result<bool> {
    let a = compute_pv(alg, v1)?.ratio;
    let b = compute_pv(alg, v2)?.ratio;
    let s = compute_pv(alg, &v1.clone().plus(v2))?.ratio;
    Ok(s >= a + b)
}
