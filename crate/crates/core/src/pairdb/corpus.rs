//! Corpus records and their JSON form.

use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairdb::expr::parse_module_for;
use crate::rat::{self, Rat};
use crate::rho::{ModuleSpec, SemisimpleAlg};
use crate::rootsys::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDesc {
    pub series: Series,
    pub rank: usize,
}

/// `{"series","rank"}` for a simple algebra or `{"factors":[...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgDesc {
    Simple(FactorDesc),
    Sum { factors: Vec<FactorDesc> },
}

impl AlgDesc {
    pub fn factors(&self) -> Vec<(Series, usize)> {
        match self {
            AlgDesc::Simple(f) => vec![(f.series, f.rank)],
            AlgDesc::Sum { factors } => factors.iter().map(|f| (f.series, f.rank)).collect(),
        }
    }

    pub fn build(&self) -> Result<SemisimpleAlg> {
        SemisimpleAlg::new(&self.factors())
    }

    pub fn from_alg(alg: &SemisimpleAlg) -> AlgDesc {
        AlgDesc::Sum {
            factors: alg.signature().into_iter().map(|(series, rank)| FactorDesc { series, rank }).collect(),
        }
    }
}

/// Printed dimension identity `d_g = d_h + d_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimIdentity {
    pub g: u64,
    pub h: u64,
    pub q: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generic_stabilizer: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ags: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_name: Option<String>,
    /// Number of conjugacy classes the row stands for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairExpected {
    pub tempered: bool,
    /// Optional bound on `p_q`, e.g. `"<= 1"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_bound: Option<String>,
}

/// One row `g ⊃ h` with `q = g/h` as an `h`-module. `q` may be absent
/// when only its dimension is known; such rows are settled by the
/// dimension thresholds for small `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub id: String,
    pub g: AlgDesc,
    pub h: AlgDesc,
    #[serde(rename = "q", default)]
    pub q_expr: Option<String>,
    /// Another reading of `q` (dual or triality choice) that must give the same verdict.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternate_q: Option<String>,
    pub expected: PairExpected,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<DimIdentity>,
    #[serde(default)]
    pub annotations: Annotations,
    pub cite: String,
}

/// Expected value or upper bound for `p_V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PvExpected {
    P(String),
    PLe(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PvRecord {
    pub id: String,
    pub h: AlgDesc,
    pub v: String,
    pub expected: PvExpected,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternate_v: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub cite: String,
}

/// Witness claims: explicit vectors, "any nonzero X", or `(Y, Y)` on
/// two equal factors for any nonzero `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessClaim {
    Vectors(Vec<Vec<String>>),
    Any,
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub id: String,
    pub case_name: String,
    pub h: AlgDesc,
    pub v: String,
    pub witnesses: WitnessClaim,
    /// Real forms for which `rho_h <= rho_V` nevertheless holds.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real_exception: Option<String>,
    pub cite: String,
}

pub(crate) fn schema(id: &str, field: &str, msg: impl ToString) -> Error {
    Error::Schema { id: id.to_string(), field: field.to_string(), msg: msg.to_string() }
}

/// Reads a JSON array of records; an empty file is an empty list.
pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    serde_json::from_str(&text).map_err(|source| Error::Json { path: path.display().to_string(), source })
}

impl PairRecord {
    pub fn h_alg(&self) -> Result<SemisimpleAlg> {
        self.h.build().map_err(|e| schema(&self.id, "h", e))
    }

    pub fn g_dim(&self) -> Result<u64> {
        let g = self.g.build().map_err(|e| schema(&self.id, "g", e))?;
        Ok(g.dim_algebra() as u64)
    }

    pub fn q(&self, h: &SemisimpleAlg) -> Result<Option<ModuleSpec>> {
        self.q_expr
            .as_deref()
            .map(|t| parse_module_for(t, h).map_err(|e| schema(&self.id, "q", e)))
            .transpose()
    }

    pub fn alternate(&self, h: &SemisimpleAlg) -> Result<Option<ModuleSpec>> {
        self.alternate_q
            .as_deref()
            .map(|t| parse_module_for(t, h).map_err(|e| schema(&self.id, "alternate_q", e)))
            .transpose()
    }

    /// Checks that everything parses and that the printed and computed
    /// dimensions satisfy `d_g = d_h + d_q`.
    pub fn validate(&self) -> Result<()> {
        let h = self.h_alg()?;
        let dg = self.g_dim()?;
        let dh = h.dim_algebra() as u64;
        if dh >= dg {
            return Err(schema(&self.id, "h", format!("dim h = {dh} is not below dim g = {dg}")));
        }
        for q in [self.q(&h)?, self.alternate(&h)?].into_iter().flatten() {
            let dq = q.dimension(&h)?;
            if dg != dh + dq {
                return Err(schema(&self.id, "q", format!("{dg} != {dh} + {dq}")));
            }
        }
        if let Some(d) = self.dims {
            if (d.g, d.h, d.q) != (dg, dh, dg - dh) {
                return Err(schema(
                    &self.id,
                    "dims",
                    format!("printed {} = {} + {}, computed {} = {} + {}", d.g, d.h, d.q, dg, dh, dg - dh),
                ));
            }
        }
        if let Some(b) = &self.expected.p_bound {
            parse_bound(b).map_err(|e| schema(&self.id, "expected.p_bound", e))?;
        }
        Ok(())
    }
}

/// Parses `"<= 1"` style bounds; only `<=` is meaningful here.
pub fn parse_bound(s: &str) -> Result<Rat> {
    let t = s.trim();
    let t = t.strip_prefix("<=").ok_or_else(|| Error::Parse { pos: 0, msg: "bound must start with <=".into() })?;
    rat::parse(t.trim())
}

impl PvRecord {
    pub fn alg(&self) -> Result<SemisimpleAlg> {
        self.h.build().map_err(|e| schema(&self.id, "h", e))
    }

    pub fn module(&self, h: &SemisimpleAlg) -> Result<ModuleSpec> {
        parse_module_for(&self.v, h).map_err(|e| schema(&self.id, "v", e))
    }

    pub fn alternate(&self, h: &SemisimpleAlg) -> Result<Option<ModuleSpec>> {
        self.alternate_v
            .as_deref()
            .map(|t| parse_module_for(t, h).map_err(|e| schema(&self.id, "alternate_v", e)))
            .transpose()
    }

    pub fn validate(&self) -> Result<()> {
        let h = self.alg()?;
        self.module(&h)?;
        self.alternate(&h)?;
        match &self.expected {
            PvExpected::P(p) => crate::pvcore::PvValue::parse(p).map(|_| ()),
            PvExpected::PLe(b) => rat::parse(b).map(|_| ()),
        }
        .map_err(|e| schema(&self.id, "expected", e))
    }
}

impl WitnessRecord {
    pub fn alg(&self) -> Result<SemisimpleAlg> {
        self.h.build().map_err(|e| schema(&self.id, "h", e))
    }

    pub fn module(&self, h: &SemisimpleAlg) -> Result<ModuleSpec> {
        parse_module_for(&self.v, h).map_err(|e| schema(&self.id, "v", e))
    }

    pub fn vectors(&self, h: &SemisimpleAlg) -> Result<Vec<Vec<Rat>>> {
        let WitnessClaim::Vectors(vs) = &self.witnesses else {
            return Ok(Vec::new());
        };
        vs.iter()
            .map(|v| {
                let x = v.iter().map(|s| rat::parse(s)).collect::<Result<Vec<Rat>>>()?;
                if !h.in_cartan(&x) {
                    return Err(schema(&self.id, "witnesses", format!("{v:?} is not in the Cartan subalgebra")));
                }
                Ok(x)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(|e| match e {
                Error::Schema { .. } => e,
                other => schema(&self.id, "witnesses", other),
            })
    }

    pub fn validate(&self) -> Result<()> {
        let h = self.alg()?;
        self.module(&h)?;
        self.vectors(&h)?;
        if self.witnesses == WitnessClaim::Diagonal {
            let sig = h.signature();
            if sig.len() != 2 || sig[0] != sig[1] {
                return Err(schema(&self.id, "witnesses", "diagonal claim needs two equal factors"));
            }
        }
        Ok(())
    }
}

/// Loads and validates a pair corpus file.
pub fn load_corpus(path: &Path) -> Result<Vec<PairRecord>> {
    let recs: Vec<PairRecord> = load_json(path)?;
    for r in &recs {
        r.validate()?;
    }
    Ok(recs)
}

pub fn load_pv_corpus(path: &Path) -> Result<Vec<PvRecord>> {
    let recs: Vec<PvRecord> = load_json(path)?;
    for r in &recs {
        r.validate()?;
    }
    Ok(recs)
}

pub fn load_witness_corpus(path: &Path) -> Result<Vec<WitnessRecord>> {
    let recs: Vec<WitnessRecord> = load_json(path)?;
    for r in &recs {
        r.validate()?;
    }
    Ok(recs)
}

/// `$TEMPER_CORPUS_DIR`, or the corpus shipped with this crate.
pub fn corpus_dir() -> PathBuf {
    std::env::var_os("TEMPER_CORPUS_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus")))
}
