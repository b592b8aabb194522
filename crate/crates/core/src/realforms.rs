//! Real forms through their restricted roots.
//!
//! A datum fixes the split part `a_h` of a real form by a matrix whose rows
//! are a basis of `a_h` in ambient Cartan coordinates. A weight `mu`
//! restricts to `R mu`, and `y` in `a_h` coordinates sits in the complex
//! Cartan as `R^T y`.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairdb::corpus::{load_json, AlgDesc};
use crate::pvcore::{chamber_minimum, PvResult, PvValue};
use crate::rat::{self, int, Rat};
use crate::rho::{rho_eval, rho_function, rho_h, ModuleSpec, RhoFunction, SemisimpleAlg};
use crate::rootsys::{Series, WeightVec};

#[derive(Clone, Debug)]
pub struct RestrictedRootDatum {
    pub id: String,
    pub complex_alg: SemisimpleAlg,
    pub restricted_rank: usize,
    pub map: Vec<Vec<Rat>>,
    /// All restricted roots (both signs) with multiplicities.
    pub restricted_roots: Vec<(WeightVec, u64)>,
    pub cite: String,
}

/// Integer or `"num/den"` text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatText {
    Int(i64),
    Text(String),
}

impl RatText {
    fn value(&self) -> Result<Rat> {
        match self {
            RatText::Int(n) => Ok(int(*n)),
            RatText::Text(s) => rat::parse(s),
        }
    }

    fn from_rat(r: &Rat) -> RatText {
        if r.is_integer() {
            if let Ok(n) = r.to_integer().try_into() {
                return RatText::Int(n);
            }
        }
        RatText::Text(rat::fmt(r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub vec: Vec<RatText>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumJson {
    pub id: String,
    pub complex: AlgDesc,
    pub map: Vec<Vec<RatText>>,
    pub restricted_roots: Vec<RootEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub cite: String,
}

fn bad(id: &str, field: &str, msg: impl ToString) -> Error {
    Error::Schema { id: id.to_string(), field: field.to_string(), msg: msg.to_string() }
}

/// Image multiset of all roots of `alg` under `map`, zero images dropped.
fn image_roots(alg: &SemisimpleAlg, map: &[Vec<Rat>]) -> Vec<(WeightVec, u64)> {
    let mut out: BTreeMap<WeightVec, u64> = BTreeMap::new();
    for (k, f) in alg.factors.iter().enumerate() {
        for b in &f.positive_roots {
            let a = alg.embed(k, &b.0);
            let img = WeightVec(map.iter().map(|row| rat::dot(row, &a.0)).collect());
            if !img.is_zero() {
                *out.entry(img.neg()).or_insert(0) += 1;
                *out.entry(img).or_insert(0) += 1;
            }
        }
    }
    out.into_iter().collect()
}

impl RestrictedRootDatum {
    /// Builds a datum from its map, computing the restricted roots.
    pub fn from_map(id: impl Into<String>, alg: SemisimpleAlg, map: Vec<Vec<Rat>>) -> Result<Self> {
        let id = id.into();
        for row in &map {
            if !alg.in_cartan(row) {
                return Err(bad(&id, "map", "row is not in the Cartan subalgebra"));
            }
        }
        let r = rat::rank(&map);
        if r != map.len() {
            return Err(bad(&id, "map", format!("rows have rank {r}, expected {}", map.len())));
        }
        let restricted_roots = image_roots(&alg, &map);
        Ok(RestrictedRootDatum { id, restricted_rank: r, complex_alg: alg, map, restricted_roots, cite: String::new() })
    }

    /// The split form: `a_h` is the whole Cartan, with the simple roots
    /// (in ambient coordinates) as basis.
    pub fn split(alg: &SemisimpleAlg) -> Result<Self> {
        let mut map = Vec::new();
        for (k, f) in alg.factors.iter().enumerate() {
            for a in &f.simple_roots {
                map.push(alg.embed(k, &a.0).0);
            }
        }
        Self::from_map(format!("split {alg}"), alg.clone(), map)
    }

    /// `so(p,q)` inside `so(p+q)` with `p >= q`, realized on the B or D
    /// series; `a_h` is spanned by the first `q` coordinate vectors.
    pub fn so_pq(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if q == 0 || p < q || n < 5 {
            return Err(bad(&format!("so({p},{q})"), "complex", "need p >= q >= 1 and p + q >= 5"));
        }
        let (s, r) = if n % 2 == 1 { (Series::B, n / 2) } else { (Series::D, n / 2) };
        let alg = SemisimpleAlg::simple(s, r)?;
        let map = (0..q).map(|i| unit_row(r, &[(i, 1)])).collect();
        Self::from_map(format!("so({p},{q})"), alg, map)
    }

    /// `sl(m, H)` inside `sl(2m)`: `a_h` is the trace-zero part of
    /// `(y1, y1, y2, y2, ..., ym, ym)`.
    pub fn sl_quaternionic(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(bad("sl(1,H)", "complex", "compact"));
        }
        let alg = SemisimpleAlg::simple(Series::A, 2 * m - 1)?;
        let map = (0..m - 1)
            .map(|i| unit_row(2 * m, &[(2 * i, 1), (2 * i + 1, 1), (2 * i + 2, -1), (2 * i + 3, -1)]))
            .collect();
        Self::from_map(format!("sl({m},H)"), alg, map)
    }

    /// `so*(2n)` inside `so(2n)`: `a_h` spanned by `e1+e2, e3+e4, ...`.
    pub fn so_star(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(bad(&format!("so*({})", 2 * n), "complex", "need n >= 3"));
        }
        let alg = SemisimpleAlg::simple(Series::D, n)?;
        let map = (0..n / 2).map(|i| unit_row(n, &[(2 * i, 1), (2 * i + 1, 1)])).collect();
        Self::from_map(format!("so*({})", 2 * n), alg, map)
    }

    pub fn from_json(j: &DatumJson) -> Result<Self> {
        let alg = j.complex.build().map_err(|e| bad(&j.id, "complex", e))?;
        let map = j
            .map
            .iter()
            .map(|row| row.iter().map(RatText::value).collect::<Result<Vec<Rat>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(|e| bad(&j.id, "map", e))?;
        if map.iter().any(|row| row.len() != alg.ambient_dim()) {
            return Err(bad(&j.id, "map", format!("rows must have length {}", alg.ambient_dim())));
        }
        let mut d = Self::from_map(j.id.clone(), alg, map)?;
        let mut listed: BTreeMap<WeightVec, u64> = BTreeMap::new();
        for e in &j.restricted_roots {
            let v = WeightVec(e.vec.iter().map(RatText::value).collect::<Result<Vec<Rat>>>().map_err(|x| bad(&j.id, "restricted_roots", x))?);
            if v.dim() != d.restricted_rank {
                return Err(bad(&j.id, "restricted_roots", "wrong length"));
            }
            *listed.entry(v).or_insert(0) += e.mult;
        }
        let listed: Vec<(WeightVec, u64)> = listed.into_iter().collect();
        if listed != d.restricted_roots {
            return Err(bad(&j.id, "restricted_roots", "not the image of the complex roots under the map"));
        }
        d.cite = j.cite.clone();
        Ok(d)
    }

    pub fn to_json(&self) -> DatumJson {
        DatumJson {
            id: self.id.clone(),
            complex: AlgDesc::from_alg(&self.complex_alg),
            map: self.map.iter().map(|r| r.iter().map(RatText::from_rat).collect()).collect(),
            restricted_roots: self
                .restricted_roots
                .iter()
                .map(|(v, m)| RootEntry { vec: v.0.iter().map(RatText::from_rat).collect(), mult: *m })
                .collect(),
            note: None,
            cite: self.cite.clone(),
        }
    }

    /// `R mu`.
    pub fn restrict(&self, mu: &[Rat]) -> WeightVec {
        WeightVec(self.map.iter().map(|row| rat::dot(row, mu)).collect())
    }

    /// `R^T y`.
    pub fn embed(&self, y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.complex_alg.ambient_dim()];
        for (c, row) in y.iter().zip(&self.map) {
            rat::axpy(&mut out, c, row);
        }
        out
    }

    /// `rho_h` on `a_h`.
    pub fn rho_h(&self) -> RhoFunction {
        RhoFunction::from_weights(self.restricted_rank, self.restricted_roots.iter().cloned())
    }

    /// Simple restricted roots for the chamber cut out by a generic vector.
    pub fn simple_roots(&self) -> Result<Vec<WeightVec>> {
        let r = self.restricted_rank;
        let roots: Vec<&WeightVec> = self.restricted_roots.iter().map(|(v, _)| v).collect();
        let generic = (2..64i64)
            .map(|k| (0..r).map(|i| int(k.pow(i as u32))).collect::<Vec<Rat>>())
            .find(|g| roots.iter().all(|a| !a.dot(g).is_zero()))
            .ok_or_else(|| Error::Lp(format!("{}: no generic vector found", self.id)))?;
        let pos: Vec<&WeightVec> = roots.iter().copied().filter(|a| a.dot(&generic).is_positive()).collect();
        let simple: Vec<WeightVec> = pos
            .iter()
            .filter(|a| {
                !pos.iter().any(|b| {
                    let d = WeightVec(rat::sub(&a.0, &b.0));
                    pos.iter().any(|c| **c == d)
                })
            })
            .map(|a| (*a).clone())
            .collect();
        if simple.len() != r {
            return Err(Error::Lp(format!("{}: found {} simple restricted roots for rank {r}", self.id, simple.len())));
        }
        Ok(simple)
    }

    /// Dual basis to the simple restricted roots; spans the closed chamber.
    pub fn coweights(&self) -> Result<Vec<WeightVec>> {
        let s: Vec<Vec<Rat>> = self.simple_roots()?.into_iter().map(|w| w.0).collect();
        let inv = rat::invert(&s).ok_or_else(|| Error::Lp(format!("{}: simple roots are dependent", self.id)))?;
        let r = s.len();
        Ok((0..r).map(|j| WeightVec((0..r).map(|i| inv[i][j].clone()).collect())).collect())
    }
}

fn unit_row(n: usize, ones: &[(usize, i64)]) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    for &(i, s) in ones {
        v[i] = int(s);
    }
    v
}

/// Reads and validates a datum file (a single JSON object or an array).
pub fn load_datum(path: &Path) -> Result<Vec<RestrictedRootDatum>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    let t = text.trim_start();
    if t.starts_with('{') {
        let j: DatumJson =
            serde_json::from_str(&text).map_err(|source| Error::Json { path: path.display().to_string(), source })?;
        return Ok(vec![RestrictedRootDatum::from_json(&j)?]);
    }
    load_json::<DatumJson>(path)?.iter().map(RestrictedRootDatum::from_json).collect()
}

/// Pushes the lines of `f` through the restriction map.
pub fn restrict_rho(f: &RhoFunction, d: &RestrictedRootDatum) -> Result<RhoFunction> {
    if f.dim != d.complex_alg.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: d.complex_alg.ambient_dim(), got: f.dim });
    }
    let mut out = RhoFunction::from_weights(d.restricted_rank, f.lines.iter().map(|(l, m)| (d.restrict(&l.0), *m)));
    out.zero_weights += f.zero_weights;
    Ok(out)
}

/// `p_V` of the real form: the chamber program on `a_h`.
pub fn real_pv(d: &RestrictedRootDatum, spec: &ModuleSpec) -> Result<PvResult> {
    let rv = restrict_rho(&rho_function(&d.complex_alg, spec)?, d)?;
    real_pv_rho(d, &rv)
}

pub fn real_pv_rho(d: &RestrictedRootDatum, rv: &RhoFunction) -> Result<PvResult> {
    let cw = d.coweights()?;
    let rh = d.rho_h();
    let rho_cw: Vec<Rat> = cw.iter().map(|w| rho_eval(&rh, &w.0)).collect();
    let (ratio, minimizer) = chamber_minimum(&rv.lines, &cw, &rho_cw)?;
    Ok(PvResult { value: PvValue::from_ratio(&ratio), ratio, minimizer, dim_v: rv.module_dim() })
}

/// `rho_h(X) > rho_V(X)` on the complex Cartan.
pub fn check_witness_vector(alg: &SemisimpleAlg, spec: &ModuleSpec, x: &[Rat]) -> Result<bool> {
    if x.len() != alg.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: alg.ambient_dim(), got: x.len() });
    }
    if !alg.in_cartan(x) {
        return Err(Error::Schema { id: alg.to_string(), field: "X".into(), msg: "not in the Cartan subalgebra".into() });
    }
    let rv = rho_function(alg, spec)?;
    Ok(rho_eval(&rho_h(alg), x) > rho_eval(&rv, x))
}

/// The same comparison done on restricted data at `y` in `a_h`.
pub fn restricted_witness(d: &RestrictedRootDatum, rv_restricted: &RhoFunction, y: &[Rat]) -> bool {
    rho_eval(&d.rho_h(), y) > rho_eval(rv_restricted, y)
}
