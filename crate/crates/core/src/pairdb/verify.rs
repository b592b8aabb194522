//! Per-record verification and whole-suite runs.

use std::path::{Path, PathBuf};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pairdb::corpus::{
    self, load_corpus, load_pv_corpus, load_witness_corpus, parse_bound, PairRecord, PvExpected, PvRecord,
    WitnessClaim, WitnessRecord,
};
use crate::pairdb::families::{self, ModuleCase, PairCase};
use crate::pvcore::{compute_pv, compute_pv_rho, is_witness, temperedness_check, universal_witness, PvValue};
use crate::rat::{self, frac, Rat};
use crate::rho::{rho_eval, rho_function, rho_h, ModuleSpec, SemisimpleAlg};
use crate::rootsys::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Agree,
    Disagree,
    Error,
}

/// Outcome for one corpus row or generated case.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_check: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Report {
    fn new(id: &str, expected: impl Into<String>, computed: impl Into<String>, ok: bool) -> Report {
        Report {
            id: id.to_string(),
            expected: expected.into(),
            computed: computed.into(),
            status: if ok { Status::Agree } else { Status::Disagree },
            p: None,
            witness: None,
            dim_check: None,
            detail: None,
        }
    }

    fn error(id: &str, e: &Error) -> Report {
        Report {
            id: id.to_string(),
            expected: String::new(),
            computed: String::new(),
            status: Status::Error,
            p: None,
            witness: None,
            dim_check: None,
            detail: Some(e.to_string()),
        }
    }

    fn detail(mut self, d: impl Into<String>) -> Report {
        self.detail = Some(d.into());
        self
    }

    fn demote(&mut self, why: String) {
        if self.status == Status::Agree {
            self.status = Status::Disagree;
        }
        self.detail = Some(match self.detail.take() {
            Some(d) => format!("{d}; {why}"),
            None => why,
        });
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub agree: usize,
    pub disagree: usize,
    pub error: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub items: Vec<Report>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(command: impl Into<String>, items: Vec<Report>) -> RunReport {
        let mut summary = Summary::default();
        for it in &items {
            match it.status {
                Status::Agree => summary.agree += 1,
                Status::Disagree => summary.disagree += 1,
                Status::Error => summary.error += 1,
            }
        }
        RunReport { command: command.into(), items, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.disagree == 0 && self.summary.error == 0
    }
}

fn vec_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat::fmt).collect()
}

fn tempered_word(t: bool) -> &'static str {
    if t {
        "tempered"
    } else {
        "not tempered"
    }
}

/// Smallest `dim q` for which `rho_h <= rho_q` is guaranteed when `q` has no
/// invariant vectors (for `a1 + h2`: none under either factor).
pub fn dimension_threshold(sig: &[(Series, usize)]) -> Option<u64> {
    use Series::*;
    match sig {
        [(A, 1)] => Some(3),
        [(A, 2)] => Some(11),
        [(B, 2)] | [(C, 2)] => Some(15),
        [(G, 2)] => Some(21),
        [(A, 1), (A, 1)] => Some(6),
        [(A, 1), (A, 2)] | [(A, 2), (A, 1)] => Some(12),
        [(A, 1), (B, 2)] | [(B, 2), (A, 1)] | [(A, 1), (C, 2)] | [(C, 2), (A, 1)] => Some(15),
        [(A, 1), (G, 2)] | [(G, 2), (A, 1)] => Some(21),
        _ => None,
    }
}

fn check_pair(id: &str, h: &SemisimpleAlg, q: &ModuleSpec, expect_tempered: bool) -> Result<Report> {
    let v = temperedness_check(h, q)?;
    let mut r = Report::new(id, tempered_word(expect_tempered), tempered_word(v.tempered), v.tempered == expect_tempered);
    r.p = Some(v.p_q.to_string());
    r.witness = v.witness.map(|w| w.to_strings());
    Ok(r)
}

/// Verifies one pair row: the verdict, the optional `p_q` bound, the
/// alternate reading of `q` and the dimension identity.
pub fn verify_record(rec: &PairRecord) -> Report {
    let run = || -> Result<Report> {
        let h = rec.h_alg()?;
        let dims_ok = rec.validate().is_ok();
        let mut r = match rec.q(&h)? {
            Some(q) => check_pair(&rec.id, &h, &q, rec.expected.tempered)?,
            None => {
                let dq = rec.g_dim()? - h.dim_algebra() as u64;
                match dimension_threshold(&h.signature()) {
                    Some(t) => {
                        let holds = dq >= t;
                        Report::new(
                            &rec.id,
                            tempered_word(rec.expected.tempered),
                            tempered_word(holds),
                            holds == rec.expected.tempered,
                        )
                        .detail(format!("q unspecified; dim q = {dq} >= {t} certifies rho_h <= rho_q"))
                    }
                    None => Report::new(&rec.id, tempered_word(rec.expected.tempered), "undecided", false)
                        .detail("q unspecified and no dimension threshold applies"),
                }
            }
        };
        r.dim_check = Some(dims_ok);
        if !dims_ok {
            r.demote("dimension identity fails".into());
        }
        if let (Some(bound), Some(p)) = (&rec.expected.p_bound, &r.p) {
            let b = parse_bound(bound)?;
            let p = PvValue::parse(p)?;
            if !p.le(&b) {
                r.demote(format!("p_q = {p} exceeds {bound}"));
            }
        }
        if let Some(alt) = rec.alternate(&h)? {
            let v = temperedness_check(&h, &alt)?;
            if v.tempered != rec.expected.tempered {
                r.demote(format!("alternate q gives {}", tempered_word(v.tempered)));
            }
        }
        Ok(r)
    };
    run().unwrap_or_else(|e| Report::error(&rec.id, &e))
}

pub fn verify_pv(rec: &PvRecord) -> Report {
    let run = || -> Result<Report> {
        let h = rec.alg()?;
        let v = rec.module(&h)?;
        let res = compute_pv(&h, &v)?;
        let mut r = match &rec.expected {
            PvExpected::P(p) => {
                let e = PvValue::parse(p)?;
                Report::new(&rec.id, format!("p = {e}"), format!("p = {}", res.value), res.value == e)
            }
            PvExpected::PLe(b) => {
                let b = rat::parse(b)?;
                Report::new(&rec.id, format!("p <= {b}"), format!("p = {}", res.value), res.value.le(&b))
            }
        };
        r.p = Some(res.value.to_string());
        if let Some(alt) = rec.alternate(&h)? {
            let a = compute_pv(&h, &alt)?;
            if a.value != res.value {
                r.demote(format!("alternate module gives p = {}", a.value));
            }
        }
        if let Some(n) = &rec.note {
            r.detail = Some(match r.detail.take() {
                Some(d) => format!("{d}; {n}"),
                None => n.clone(),
            });
        }
        Ok(r)
    };
    run().unwrap_or_else(|e| Report::error(&rec.id, &e))
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Deterministic generator keyed by a record id.
pub fn rng_for(id: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(fnv1a(id))
}

/// Random nonzero rational Cartan element: a combination of fundamental
/// coweights with small integer numerators and a common denominator.
pub fn random_cartan<R: Rng>(alg: &SemisimpleAlg, rng: &mut R) -> Vec<Rat> {
    let cw = alg.coweights();
    loop {
        let den = rng.gen_range(1..=4i64);
        let mut y = vec![Rat::zero(); alg.ambient_dim()];
        for w in &cw {
            let c = frac(rng.gen_range(-6..=6i64), den);
            rat::axpy(&mut y, &c, &w.0);
        }
        if !rat::is_zero_vec(&y) {
            return y;
        }
    }
}

/// Checks a witness claim; `samples` random vectors for the "any" forms.
pub fn verify_witness(rec: &WitnessRecord, samples: usize) -> Report {
    let run = || -> Result<Report> {
        let h = rec.alg()?;
        let v = rec.module(&h)?;
        let rv = rho_function(&h, &v)?;
        let mut rng = rng_for(&rec.id);
        let (expected, failures): (String, Vec<String>) = match &rec.witnesses {
            WitnessClaim::Vectors(_) => {
                let xs = rec.vectors(&h)?;
                let bad = xs
                    .iter()
                    .filter(|x| !is_witness(&h, &rv, x))
                    .map(|x| format!("({})", vec_strings(x).join(",")))
                    .collect();
                (format!("{} listed witnesses", xs.len()), bad)
            }
            WitnessClaim::Any => {
                let mut bad = Vec::new();
                if !universal_witness(&h, &rv) {
                    bad.push("some fundamental coweight is not a witness".to_string());
                }
                for _ in 0..samples {
                    let x = random_cartan(&h, &mut rng);
                    if !is_witness(&h, &rv, &x) {
                        bad.push(format!("({})", vec_strings(&x).join(",")));
                    }
                }
                (format!("any X != 0 ({samples} samples)"), bad)
            }
            WitnessClaim::Diagonal => {
                let half = SemisimpleAlg::from_factors(vec![h.factors[0].clone()]);
                let mut bad = Vec::new();
                for _ in 0..samples {
                    let y = random_cartan(&half, &mut rng);
                    let mut x = y.clone();
                    x.extend(y);
                    if !is_witness(&h, &rv, &x) {
                        bad.push(format!("({})", vec_strings(&x).join(",")));
                    }
                }
                (format!("(Y,Y) for any Y != 0 ({samples} samples)"), bad)
            }
        };
        let ok = failures.is_empty();
        let computed = if ok { "all witnesses".to_string() } else { format!("{} failures", failures.len()) };
        let mut r = Report::new(&rec.id, expected, computed, ok);
        if !ok {
            r.detail = Some(failures.join(" "));
        }
        r.p = Some(compute_pv_rho(&h, &rv)?.value.to_string());
        Ok(r)
    };
    run().unwrap_or_else(|e| Report::error(&rec.id, &e))
}

pub fn verify_case(c: &PairCase) -> Report {
    let run = || -> Result<Report> {
        let dq = c.q.dimension(&c.h)? as usize;
        let mut r = check_pair(&c.id, &c.h, &c.q, c.expected_tempered)?;
        let ok = dq + c.h.dim_algebra() == c.dim_g;
        r.dim_check = Some(ok);
        if !ok {
            r.demote(format!("{} != {} + {dq}", c.dim_g, c.h.dim_algebra()));
        }
        Ok(r)
    };
    run().unwrap_or_else(|e| Report::error(&c.id, &e))
}

pub fn verify_module_case(c: &ModuleCase) -> Report {
    let run = || -> Result<Report> {
        let res = compute_pv(&c.h, &c.v)?;
        let holds = res.value.le(&c.k);
        let word = |b: bool| if b { format!("rho_h <= {} rho_V", c.k) } else { format!("rho_h not <= {} rho_V", c.k) };
        let mut r = Report::new(&c.id, word(c.expected_holds), word(holds), holds == c.expected_holds);
        r.p = Some(res.value.to_string());
        Ok(r)
    };
    run().unwrap_or_else(|e| Report::error(&c.id, &e))
}

pub const SUITES: &[&str] = &[
    "air",
    "nir",
    "eir",
    "abcd",
    "efg",
    "ral",
    "sal",
    "ghh",
    "witness-classical",
    "witness-exceptional",
    "families",
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub corpus_dir: PathBuf,
    /// Parameter bound for generated families.
    pub bound: usize,
    /// Random vectors per "any X" witness claim.
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { corpus_dir: corpus::corpus_dir(), bound: 8, samples: 50 }
    }
}

fn pairs_file(dir: &Path, name: &str) -> Result<Vec<Report>> {
    let recs = load_corpus(&dir.join(name))?;
    Ok(recs.par_iter().map(verify_record).collect())
}

/// Runs a named suite. Items come out in corpus order followed by
/// generated cases in generation order.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<RunReport> {
    let dir = &opts.corpus_dir;
    let items = match name {
        "air" | "nir" | "eir" => {
            let recs = load_pv_corpus(&dir.join(format!("{name}.json")))?;
            recs.par_iter().map(verify_pv).collect()
        }
        "abcd" => {
            let mut items = pairs_file(dir, "abcd.json")?;
            let cases = families::classical_table(opts.bound);
            items.extend(cases.par_iter().map(verify_case).collect::<Vec<_>>());
            items
        }
        "efg" | "ral" | "sal" | "ghh" => pairs_file(dir, &format!("{name}.json"))?,
        "witness-classical" | "witness-exceptional" => {
            let file = format!("{}.json", name.replace('-', "_"));
            let mut recs = load_witness_corpus(&dir.join(file))?;
            if name == "witness-classical" {
                recs.extend(classical_witness_rows(opts.bound + 2));
            }
            recs.par_iter().map(|r| verify_witness(r, opts.samples)).collect()
        }
        "families" => {
            let b = opts.bound.min(6);
            let mut cases = families::symmetric_pairs(b);
            cases.extend(families::block_sweep(b, 2 * b));
            cases.extend(families::tensor_pairs(b.min(4), 2000));
            let mut items: Vec<Report> = cases.par_iter().map(verify_case).collect();
            let mut mods = families::two_block_modules(b);
            mods.extend(families::three_block_modules(b));
            mods.extend(families::mixed_block_modules(b));
            mods.extend(families::exceptional_block_modules(12));
            items.extend(mods.par_iter().map(verify_module_case).collect::<Vec<_>>());
            items
        }
        other => {
            return Err(Error::Parse { pos: 0, msg: format!("unknown suite `{other}`; expected one of {}", SUITES.join(", ")) })
        }
    };
    Ok(RunReport::new(format!("verify --suite {name}"), items))
}

fn unit(n: usize, ones: &[(usize, i64)]) -> Vec<String> {
    let mut v = vec!["0".to_string(); n];
    for &(i, s) in ones {
        v[i] = s.to_string();
    }
    v
}

fn simple_desc(series: Series, rank: usize) -> corpus::AlgDesc {
    corpus::AlgDesc::Simple(corpus::FactorDesc { series, rank })
}

/// Parametric rows of the classical witness table, up to `bound`.
pub fn classical_witness_rows(bound: usize) -> Vec<WitnessRecord> {
    let cite = "witnesses for classical g";
    let mut out = Vec::new();
    let mk = |id: String, case: &str, h, v: String, w: WitnessClaim, exc: Option<&str>| WitnessRecord {
        id,
        case_name: case.to_string(),
        h,
        v,
        witnesses: w,
        real_exception: exc.map(str::to_string),
        cite: cite.to_string(),
    };
    // A1: sl(p) on q (C^p + dual), p >= q+2.
    for p in 3..=bound {
        let first = unit(p, &[(0, 1), (p - 1, -1)]);
        for q in 1..=p - 2 {
            let mut ws = vec![first.clone()];
            let mut exc = Some("sl(m,H) with p = 2m");
            if p >= q + 3 {
                ws.push(unit(p, &[(0, 1), (1, 1), (p - 2, -1), (p - 1, -1)]));
                exc = None;
            }
            out.push(mk(
                format!("A1/sl({p})/q={q}"),
                "A1",
                simple_desc(Series::A, p - 1),
                format!("{q}*std@1 +dual"),
                WitnessClaim::Vectors(ws),
                exc,
            ));
        }
    }
    // BD1: so(p) on q C^p, p >= q+3.
    for p in 5..=bound {
        let (s, r) = if p % 2 == 1 { (Series::B, p / 2) } else { (Series::D, p / 2) };
        for q in 1..=p - 3 {
            let mut ws = vec![unit(r, &[(0, 1)])];
            if p >= q + 4 {
                ws.push(unit(r, &[(0, 1), (1, 1)]));
            }
            out.push(mk(
                format!("BD1/so({p})/q={q}"),
                "BD1",
                simple_desc(s, r),
                format!("{q}*std@1"),
                WitnessClaim::Vectors(ws),
                None,
            ));
        }
    }
    // C1: sp(p) on q C^2p, p >= q+1.
    for p in 2..=bound {
        for q in 1..p {
            out.push(mk(
                format!("C1/sp({p})/q={q}"),
                "C1",
                simple_desc(Series::C, p),
                format!("{q}*std@1"),
                WitnessClaim::Vectors(vec![unit(p, &[(0, 1)]), unit(p, &[(0, 1), (1, 1)])]),
                None,
            ));
        }
    }
    for p in 2..=bound {
        out.push(mk(
            format!("A2/sp({p})"),
            "A2",
            simple_desc(Series::C, p),
            "ext0(2)@1".into(),
            WitnessClaim::Any,
            None,
        ));
        out.push(mk(
            format!("C2/sp({p})+sp({p})"),
            "C2",
            corpus::AlgDesc::Sum {
                factors: vec![
                    corpus::FactorDesc { series: Series::C, rank: p },
                    corpus::FactorDesc { series: Series::C, rank: p },
                ],
            },
            "std@1 x std@2".into(),
            WitnessClaim::Diagonal,
            None,
        ));
    }
    for p in 3..=bound {
        let w = if p == 3 {
            WitnessClaim::Any
        } else {
            WitnessClaim::Vectors(vec![
                unit(p, &[(0, 1), (p - 1, -1)]),
                unit(p, &[(0, 1), (1, 1), (p - 2, -1), (p - 1, -1)]),
            ])
        };
        out.push(mk(format!("D2/sl({p})"), "D2", simple_desc(Series::A, p - 1), "ext(2)@1 +dual".into(), w, None));
    }
    out
}

/// `rho_h(x) - rho_V(x)`, positive exactly at witnesses.
pub fn witness_margin(alg: &SemisimpleAlg, v: &ModuleSpec, x: &[Rat]) -> Result<Rat> {
    let rv = rho_function(alg, v)?;
    Ok(rho_eval(&rho_h(alg), x) - rho_eval(&rv, x))
}
