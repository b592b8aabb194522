//! Semisimple algebras, module descriptions and the piecewise-linear
//! functions `rho_V(Y) = 1/2 sum m |alpha(Y)|`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{self, frac, int, Rat};
use crate::repkit::{self, named_rep, RepName};
use crate::rootsys::{root_system, RootSystem, Series, WeightVec};

/// Direct sum of simple factors; the Cartan subalgebra is the product of
/// the factors' ambient spaces.
#[derive(Clone, Debug)]
pub struct SemisimpleAlg {
    pub factors: Vec<Arc<RootSystem>>,
    offsets: Vec<usize>,
    dim: usize,
}

impl PartialEq for SemisimpleAlg {
    fn eq(&self, other: &Self) -> bool {
        self.signature() == other.signature()
    }
}

impl SemisimpleAlg {
    pub fn new(factors: &[(Series, usize)]) -> Result<Self> {
        let factors = factors
            .iter()
            .map(|&(s, r)| root_system(s, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_factors(factors))
    }

    pub fn from_factors(factors: Vec<Arc<RootSystem>>) -> Self {
        let mut offsets = Vec::with_capacity(factors.len());
        let mut dim = 0;
        for f in &factors {
            offsets.push(dim);
            dim += f.ambient_dim;
        }
        SemisimpleAlg { factors, offsets, dim }
    }

    pub fn simple(series: Series, rank: usize) -> Result<Self> {
        Self::new(&[(series, rank)])
    }

    pub fn signature(&self) -> Vec<(Series, usize)> {
        self.factors.iter().map(|f| (f.series, f.rank)).collect()
    }

    /// Dimension of the joint ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn dim_algebra(&self) -> usize {
        self.factors.iter().map(|f| f.dim_algebra()).sum()
    }

    pub fn offset(&self, factor: usize) -> usize {
        self.offsets[factor]
    }

    /// Places a factor-local vector into the joint ambient space.
    pub fn embed(&self, factor: usize, v: &[Rat]) -> WeightVec {
        let mut out = vec![Rat::zero(); self.dim];
        out[self.offsets[factor]..self.offsets[factor] + v.len()].clone_from_slice(v);
        WeightVec(out)
    }

    pub fn block<'a>(&self, factor: usize, v: &'a [Rat]) -> &'a [Rat] {
        let o = self.offsets[factor];
        &v[o..o + self.factors[factor].ambient_dim]
    }

    /// Fundamental coweights of all factors in joint coordinates; their
    /// nonnegative span is the closed dominant chamber.
    pub fn coweights(&self) -> Vec<WeightVec> {
        let mut out = Vec::with_capacity(self.rank());
        for (k, f) in self.factors.iter().enumerate() {
            for w in &f.fundamental_coweights {
                out.push(self.embed(k, &w.0));
            }
        }
        out
    }

    /// `rho_h` evaluated on each fundamental coweight (sum of simple-root
    /// coefficients over positive roots).
    pub fn rho_on_coweights(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.rank());
        for f in &self.factors {
            for i in 0..f.rank {
                out.push(int(f.positive_root_coeffs.iter().map(|c| c[i]).sum()));
            }
        }
        out
    }

    pub fn is_dominant(&self, y: &[Rat]) -> bool {
        self.factors
            .iter()
            .enumerate()
            .all(|(k, f)| f.is_dominant(self.block(k, y)))
    }

    pub fn in_cartan(&self, y: &[Rat]) -> bool {
        y.len() == self.dim
            && self.factors.iter().enumerate().all(|(k, f)| f.in_cartan(self.block(k, y)))
    }

    /// Moves `y` into the closed dominant chamber factor by factor.
    pub fn dominant_rep(&self, y: &[Rat]) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.dim);
        for (k, f) in self.factors.iter().enumerate() {
            out.extend(f.dominant_rep(self.block(k, y)));
        }
        out
    }
}

impl fmt::Display for SemisimpleAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|r| r.name()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for SemisimpleAlg {
    type Err = Error;

    /// `"A1+C3"`, also accepting `,` or `x` as separators.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split(['+', ',', 'x']).map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::Parse { pos: 0, msg: format!("bad simple factor `{part}`") };
            let mut chars = part.chars();
            let series = chars.next().and_then(Series::from_letter).ok_or_else(bad)?;
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            factors.push((series, rank));
        }
        if factors.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty algebra".into() });
        }
        SemisimpleAlg::new(&factors)
    }
}

/// `mult` copies of a tensor product of irreducibles of distinct factors,
/// optionally together with its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub mult: u32,
    /// `(factor index, representation)`, 0-based, strictly increasing.
    pub reps: Vec<(usize, RepName)>,
    pub plus_dual: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleSpec {
    pub summands: Vec<Summand>,
    pub trivial: u64,
}

impl ModuleSpec {
    pub fn trivial(n: u64) -> Self {
        ModuleSpec { summands: Vec::new(), trivial: n }
    }

    pub fn irreducible(factor: usize, rep: RepName) -> Self {
        ModuleSpec {
            summands: vec![Summand { mult: 1, reps: vec![(factor, rep)], plus_dual: false }],
            trivial: 0,
        }
    }

    pub fn push(&mut self, mult: u32, reps: Vec<(usize, RepName)>, plus_dual: bool) {
        self.summands.push(Summand { mult, reps, plus_dual });
    }

    /// Direct sum.
    pub fn plus(mut self, other: &ModuleSpec) -> ModuleSpec {
        self.summands.extend(other.summands.iter().cloned());
        self.trivial += other.trivial;
        self
    }

    /// `k` copies.
    pub fn times(mut self, k: u32) -> ModuleSpec {
        for s in &mut self.summands {
            s.mult *= k;
        }
        self.trivial *= k as u64;
        self
    }

    /// Contragredient module.
    pub fn dual(&self) -> ModuleSpec {
        let summands = self
            .summands
            .iter()
            .map(|s| {
                if s.plus_dual {
                    s.clone()
                } else {
                    Summand {
                        mult: s.mult,
                        reps: s.reps.iter().map(|(i, r)| (*i, RepName::Dual(Box::new(r.clone())))).collect(),
                        plus_dual: false,
                    }
                }
            })
            .collect();
        ModuleSpec { summands, trivial: self.trivial }
    }

    pub fn validate(&self, alg: &SemisimpleAlg) -> Result<()> {
        for s in &self.summands {
            if s.reps.is_empty() {
                return Err(Error::Parse { pos: 0, msg: "empty tensor product".into() });
            }
            for w in s.reps.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("factor {} used twice or out of order in one product", w[1].0 + 1),
                    });
                }
            }
            for (i, r) in &s.reps {
                let f = alg.factors.get(*i).ok_or(Error::FactorIndex { index: i + 1, count: alg.factors.len() })?;
                named_rep(f, r)?;
            }
        }
        Ok(())
    }

    pub fn dimension(&self, alg: &SemisimpleAlg) -> Result<u64> {
        self.validate(alg)?;
        let mut total = self.trivial;
        for s in &self.summands {
            let mut d = s.mult as u64;
            for (i, r) in &s.reps {
                let f = &alg.factors[*i];
                d *= repkit::dimension(f, &named_rep(f, r)?);
            }
            total += if s.plus_dual { 2 * d } else { d };
        }
        Ok(total)
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult != 1 {
            write!(f, "{}*", self.mult)?;
        }
        let parts: Vec<String> = self.reps.iter().map(|(i, r)| format!("{r}@{}", i + 1)).collect();
        write!(f, "{}", parts.join(" x "))?;
        if self.plus_dual {
            write!(f, " +dual")?;
        }
        Ok(())
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        if self.trivial > 0 || self.summands.is_empty() {
            terms.push(format!("trivial({})", self.trivial));
        }
        terms.extend(self.summands.iter().map(Summand::to_string));
        write!(f, "{}", terms.join(" + "))
    }
}

/// Full weight multiset of a module, in joint coordinates.
pub fn module_weights(alg: &SemisimpleAlg, spec: &ModuleSpec) -> Result<BTreeMap<WeightVec, u64>> {
    spec.validate(alg)?;
    let n = alg.ambient_dim();
    let mut out: BTreeMap<WeightVec, u64> = BTreeMap::new();
    if spec.trivial > 0 {
        out.insert(WeightVec::zero(n), spec.trivial);
    }
    for s in &spec.summands {
        let mut cur: Vec<(Vec<Rat>, u64)> = vec![(vec![Rat::zero(); n], s.mult as u64)];
        for (i, r) in &s.reps {
            let f = &alg.factors[*i];
            let ws = repkit::weight_system(f, &named_rep(f, r)?)?;
            let o = alg.offset(*i);
            let mut next = Vec::with_capacity(cur.len() * ws.entries.len());
            for (v, m) in &cur {
                for (w, k) in &ws.entries {
                    let mut u = v.clone();
                    u[o..o + w.0.len()].clone_from_slice(&w.0);
                    next.push((u, m * k));
                }
            }
            cur = next;
        }
        for (v, m) in cur {
            if s.plus_dual {
                *out.entry(WeightVec(rat::neg(&v))).or_insert(0) += m;
            }
            *out.entry(WeightVec(v)).or_insert(0) += m;
        }
    }
    Ok(out)
}

/// `rho_V` as a list of lines: each `±alpha` pair is merged into one
/// representative (first nonzero coordinate positive) with summed
/// multiplicity; zero weights are counted separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoFunction {
    pub dim: usize,
    pub lines: Vec<(WeightVec, u64)>,
    pub zero_weights: u64,
}

fn canonical(v: WeightVec) -> WeightVec {
    match v.0.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.neg(),
        _ => v,
    }
}

impl RhoFunction {
    pub fn from_weights<I: IntoIterator<Item = (WeightVec, u64)>>(dim: usize, weights: I) -> Self {
        let mut lines: BTreeMap<WeightVec, u64> = BTreeMap::new();
        let mut zero = 0;
        for (w, m) in weights {
            if w.is_zero() {
                zero += m;
            } else {
                *lines.entry(canonical(w)).or_insert(0) += m;
            }
        }
        RhoFunction { dim, lines: lines.into_iter().collect(), zero_weights: zero }
    }

    /// Total dimension of the module this was built from.
    pub fn module_dim(&self) -> u64 {
        self.zero_weights + self.lines.iter().map(|(_, m)| m).sum::<u64>()
    }

    pub fn eval(&self, y: &[Rat]) -> Rat {
        rho_eval(self, y)
    }
}

pub fn rho_function(alg: &SemisimpleAlg, spec: &ModuleSpec) -> Result<RhoFunction> {
    Ok(RhoFunction::from_weights(alg.ambient_dim(), module_weights(alg, spec)?))
}

/// `rho_h`, built from the roots of every factor.
pub fn rho_h(alg: &SemisimpleAlg) -> RhoFunction {
    let mut w = Vec::new();
    for (k, f) in alg.factors.iter().enumerate() {
        for b in &f.positive_roots {
            w.push((alg.embed(k, &b.0), 2));
        }
    }
    RhoFunction::from_weights(alg.ambient_dim(), w)
}

pub fn rho_eval(f: &RhoFunction, y: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (l, m) in &f.lines {
        let v = l.dot(y);
        if !v.is_zero() {
            acc += v.abs() * int(*m as i64);
        }
    }
    acc * frac(1, 2)
}

/// `sum m max(alpha(Y), 0)` over the unmerged weight multiset.
pub fn rho_plus_eval(weights: &BTreeMap<WeightVec, u64>, y: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (w, m) in weights {
        let v = w.dot(y);
        if v.is_positive() {
            acc += v * int(*m as i64);
        }
    }
    acc
}
