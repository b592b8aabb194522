//! Irreducible representations: named highest weights, Freudenthal weight
//! multiplicities and the Weyl dimension formula.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::rootsys::{RootSystem, Series, WeightVec};

/// Highest weight in Dynkin labels (coordinates in the fundamental weights).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HighestWeight(pub Vec<i64>);

impl HighestWeight {
    pub fn to_weight(&self, rs: &RootSystem) -> WeightVec {
        rs.from_labels(&self.0)
    }

    pub fn from_weight(rs: &RootSystem, v: &WeightVec) -> Result<Self> {
        let labels = rs.int_labels(&v.0).ok_or(Error::NotDominant)?;
        if labels.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant);
        }
        Ok(HighestWeight(labels))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepName {
    Std,
    Sym(u32),
    Ext(u32),
    Ext0(u32),
    Sym0(u32),
    Spin,
    HalfspinPlus,
    HalfspinMinus,
    Adjoint,
    Fund(u32),
    Dual(Box<RepName>),
    /// Explicit Dynkin labels.
    Hw(Vec<u32>),
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepName::Std => write!(f, "std"),
            RepName::Sym(k) => write!(f, "sym({k})"),
            RepName::Ext(k) => write!(f, "ext({k})"),
            RepName::Ext0(k) => write!(f, "ext0({k})"),
            RepName::Sym0(k) => write!(f, "sym0({k})"),
            RepName::Spin => write!(f, "spin"),
            RepName::HalfspinPlus => write!(f, "halfspin_plus"),
            RepName::HalfspinMinus => write!(f, "halfspin_minus"),
            RepName::Adjoint => write!(f, "adjoint"),
            RepName::Fund(i) => write!(f, "fund({i})"),
            RepName::Dual(r) => write!(f, "dual({r})"),
            RepName::Hw(v) => {
                let parts: Vec<String> = v.iter().map(u32::to_string).collect();
                write!(f, "hw({})", parts.join(","))
            }
        }
    }
}

impl FromStr for RepName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("rep name `{s}`: {msg}") };
        let (head, arg) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(bad("unbalanced parenthesis")),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<u32> {
            a.ok_or_else(|| bad("missing argument"))?
                .trim()
                .parse()
                .map_err(|_| bad("expected a non-negative integer"))
        };
        Ok(match (head, arg) {
            ("std", None) => RepName::Std,
            ("spin", None) => RepName::Spin,
            ("halfspin_plus", None) => RepName::HalfspinPlus,
            ("halfspin_minus", None) => RepName::HalfspinMinus,
            ("adjoint", None) => RepName::Adjoint,
            ("sym", a) => RepName::Sym(num(a)?),
            ("ext", a) => RepName::Ext(num(a)?),
            ("ext0", a) => RepName::Ext0(num(a)?),
            ("sym0", a) => RepName::Sym0(num(a)?),
            ("fund", a) => RepName::Fund(num(a)?),
            ("dual", Some(inner)) => RepName::Dual(Box::new(inner.parse()?)),
            ("hw", Some(inner)) => RepName::Hw(
                inner
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| bad("bad label")))
                    .collect::<Result<_>>()?,
            ),
            _ => return Err(bad("unknown name")),
        })
    }
}

/// Resolves a dictionary name to a highest weight of `rs`.
pub fn named_rep(rs: &RootSystem, name: &RepName) -> Result<HighestWeight> {
    let l = rs.rank;
    let reject = |why: &str| Error::InvalidRep {
        name: name.to_string(),
        algebra: rs.name(),
        reason: why.to_string(),
    };
    let omega = |i: usize, k: i64| {
        let mut v = vec![0i64; l];
        v[i - 1] = k;
        HighestWeight(v)
    };
    let s = rs.series;
    let classical = s.is_classical();
    Ok(match name {
        RepName::Std if classical => omega(1, 1),
        RepName::Std => return Err(reject("std is defined for classical series only")),
        RepName::Sym(k) if classical => omega(1, *k as i64),
        RepName::Sym(_) => return Err(reject("sym is defined for classical series only")),
        RepName::Sym0(k) if matches!(s, Series::B | Series::D) => omega(1, *k as i64),
        RepName::Sym0(_) => return Err(reject("sym0 is defined for B and D only")),
        RepName::Ext(k) => {
            let k = *k as usize;
            let max = match s {
                Series::A => l,
                Series::B => l - 1,
                Series::D => l - 2,
                _ => return Err(reject("ext is defined for A, B and D only; use ext0 for C")),
            };
            if k == 0 || k > max {
                return Err(reject(&format!("ext degree must be in 1..={max}")));
            }
            omega(k, 1)
        }
        RepName::Ext0(k) => {
            if s != Series::C {
                return Err(reject("ext0 is defined for C only"));
            }
            let k = *k as usize;
            if k == 0 || k > l {
                return Err(reject(&format!("ext0 degree must be in 1..={l}")));
            }
            omega(k, 1)
        }
        RepName::Spin if s == Series::B => omega(l, 1),
        RepName::Spin => return Err(reject("spin is defined for B only")),
        RepName::HalfspinPlus if s == Series::D => omega(l, 1),
        RepName::HalfspinMinus if s == Series::D => omega(l - 1, 1),
        RepName::HalfspinPlus | RepName::HalfspinMinus => return Err(reject("half-spin is defined for D only")),
        RepName::Adjoint => HighestWeight(rs.highest_root_labels()),
        RepName::Fund(i) => {
            let i = *i as usize;
            if i == 0 || i > l {
                return Err(reject(&format!("fundamental index must be in 1..={l}")));
            }
            omega(i, 1)
        }
        RepName::Dual(inner) => HighestWeight(rs.dual_labels(&named_rep(rs, inner)?.0)),
        RepName::Hw(v) => {
            if v.len() != l {
                return Err(reject(&format!("expected {l} labels")));
            }
            HighestWeight(v.iter().map(|&x| x as i64).collect())
        }
    })
}

pub fn dual_highest_weight(rs: &RootSystem, hw: &HighestWeight) -> HighestWeight {
    HighestWeight(rs.dual_labels(&hw.0))
}

/// Weight multiset of an irreducible representation.
#[derive(Clone, Debug)]
pub struct WeightSystem {
    pub highest: HighestWeight,
    /// Ambient-coordinate weights with multiplicities, sorted.
    pub entries: Vec<(WeightVec, u64)>,
    /// Dominant weights (Dynkin labels) with multiplicities.
    pub dominant: Vec<(Vec<i64>, u64)>,
    pub dim: u64,
}

/// Weyl dimension formula, saturating at `u64::MAX`.
pub fn dimension(rs: &RootSystem, hw: &HighestWeight) -> u64 {
    dimension_exact(rs, hw).to_u64().unwrap_or(u64::MAX)
}

/// Weyl dimension formula without overflow.
pub fn dimension_exact(rs: &RootSystem, hw: &HighestWeight) -> BigInt {
    let rho = vec![1i64; rs.rank];
    let lr: Vec<i64> = hw.0.iter().map(|x| x + 1).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for b in &rs.positive_root_labels {
        num *= rs.label_inner(&lr, b);
        den *= rs.label_inner(&rho, b);
    }
    Rat::new(num, den).to_integer()
}

fn reflect_labels(rs: &RootSystem, i: usize, v: &mut [i64]) {
    let c = v[i];
    if c != 0 {
        for (x, a) in v.iter_mut().zip(&rs.cartan[i]) {
            *x -= c * a;
        }
    }
}

fn dominant_labels(rs: &RootSystem, v: &[i64]) -> Vec<i64> {
    let mut cur = v.to_vec();
    while let Some(i) = (0..rs.rank).find(|&i| cur[i] < 0) {
        reflect_labels(rs, i, &mut cur);
    }
    cur
}

fn orbit_labels(rs: &RootSystem, v: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.to_vec());
    queue.push_back(v.to_vec());
    while let Some(w) = queue.pop_front() {
        for i in 0..rs.rank {
            if w[i] == 0 {
                continue;
            }
            let mut r = w.clone();
            reflect_labels(rs, i, &mut r);
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen.into_iter().collect()
}

/// Dominant weights of `V(lambda)` with multiplicities (Freudenthal).
pub fn dominant_multiplicities(rs: &RootSystem, hw: &HighestWeight) -> Vec<(Vec<i64>, u64)> {
    let lambda = &hw.0;
    let heights: Vec<i64> = rs.positive_root_coeffs.iter().map(|c| c.iter().sum()).collect();

    // Every dominant weight below lambda is reachable by subtracting positive
    // roots while staying dominant.
    let mut level: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut queue = VecDeque::new();
    level.insert(lambda.clone(), 0);
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        let lv = level[&mu];
        for (b, h) in rs.positive_root_labels.iter().zip(&heights) {
            let nu: Vec<i64> = mu.iter().zip(b).map(|(x, y)| x - y).collect();
            if nu.iter().all(|&x| x >= 0) && !level.contains_key(&nu) {
                level.insert(nu.clone(), lv + h);
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<(i64, Vec<i64>)> = level.into_iter().map(|(k, v)| (v, k)).collect();
    order.sort();

    let shift = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| x + 1).collect() };
    let lr = shift(lambda);
    let top = rs.label_inner(&lr, &lr) as i128;
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    let mut out = Vec::new();
    for (lv, mu) in order {
        let m = if lv == 0 {
            1
        } else {
            let mut num: i128 = 0;
            for b in &rs.positive_root_labels {
                let mut cur: Vec<i64> = mu.clone();
                loop {
                    for (x, y) in cur.iter_mut().zip(b) {
                        *x += y;
                    }
                    let dom = dominant_labels(rs, &cur);
                    let Some(&m) = mult.get(&dom) else { break };
                    num += 2 * m as i128 * rs.label_inner(&cur, b) as i128;
                }
            }
            let mr = shift(&mu);
            let den = top - rs.label_inner(&mr, &mr) as i128;
            assert!(den > 0 && num % den == 0, "Freudenthal recursion is exact");
            (num / den) as u64
        };
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((mu, m));
        }
    }
    out
}

fn compute_weight_system(rs: &RootSystem, hw: &HighestWeight) -> WeightSystem {
    let dominant = dominant_multiplicities(rs, hw);
    let mut entries: BTreeMap<WeightVec, u64> = BTreeMap::new();
    for (mu, m) in &dominant {
        for w in orbit_labels(rs, mu) {
            entries.insert(rs.from_labels(&w), *m);
        }
    }
    let dim = entries.values().sum();
    WeightSystem { highest: hw.clone(), entries: entries.into_iter().collect(), dominant, dim }
}

/// Memoized weight system of `V(hw)`.
pub fn weight_system(rs: &RootSystem, hw: &HighestWeight) -> Result<Arc<WeightSystem>> {
    type Key = (Series, usize, Vec<i64>);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<WeightSystem>>>> = OnceLock::new();
    if hw.0.len() != rs.rank || hw.0.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant);
    }
    let key = (rs.series, rs.rank, hw.0.clone());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(ws) = cache.lock().unwrap().get(&key) {
        return Ok(ws.clone());
    }
    let ws = Arc::new(compute_weight_system(rs, hw));
    Ok(cache.lock().unwrap().entry(key).or_insert(ws).clone())
}
