//! Root systems of the simple complex Lie algebras in Bourbaki coordinates.
//!
//! `A_l` lives in the trace-zero hyperplane of Q^{l+1}, `G2` in that of Q^3,
//! `B/C/D_l` in Q^l, `F4` in Q^4 and `E6/E7/E8` inside Q^8.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{self, frac, int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Series::A | Series::B | Series::C | Series::D)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A vector of exact rationals in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec(pub Vec<Rat>);

impl WeightVec {
    pub fn zero(n: usize) -> Self {
        WeightVec(vec![Rat::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        WeightVec(v.iter().map(|&x| int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        rat::is_zero_vec(&self.0)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &[Rat]) -> Rat {
        rat::dot(&self.0, other)
    }

    pub fn neg(&self) -> WeightVec {
        WeightVec(rat::neg(&self.0))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rat::fmt).collect()
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

#[derive(Debug)]
pub struct RootSystem {
    pub series: Series,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<WeightVec>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<WeightVec>,
    pub fundamental_weights: Vec<WeightVec>,
    /// Dual basis to the simple roots: `(alpha_j, coweight_i) = delta_ij`.
    pub fundamental_coweights: Vec<WeightVec>,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`; row `i` is the Dynkin label of `alpha_i`.
    pub cartan: Vec<Vec<i64>>,
    /// Dynkin labels of the positive roots, aligned with `positive_roots`.
    pub positive_root_labels: Vec<Vec<i64>>,
    /// Simple-root coefficients of the positive roots.
    pub positive_root_coeffs: Vec<Vec<i64>>,
    /// `(omega_i, omega_j) * gram_scale`, integral.
    pub gram_fund: Vec<Vec<i64>>,
    pub gram_scale: i64,
    root_norms: Vec<Rat>,
}

fn e(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vec<Rat> {
    let mut v = e(n, i);
    v[j] -= Rat::one();
    v
}

fn simple_roots(series: Series, rank: usize) -> Result<(usize, Vec<Vec<Rat>>)> {
    let bad = |reason: &str| Error::InvalidRootSystem {
        series: series.letter(),
        rank,
        reason: reason.to_string(),
    };
    let l = rank;
    Ok(match series {
        Series::A => {
            if l < 1 {
                return Err(bad("A needs rank >= 1"));
            }
            (l + 1, (0..l).map(|i| diff(l + 1, i, i + 1)).collect())
        }
        Series::B | Series::C | Series::D => {
            let min = if series == Series::D { 3 } else { 2 };
            if l < min {
                return Err(bad(&format!("{series} needs rank >= {min}")));
            }
            let mut s: Vec<Vec<Rat>> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            s.push(match series {
                Series::B => e(l, l - 1),
                Series::C => rat::scale(&e(l, l - 1), &int(2)),
                _ => rat::add(&e(l, l - 2), &e(l, l - 1)),
            });
            (l, s)
        }
        Series::E => {
            if !(6..=8).contains(&l) {
                return Err(bad("E needs rank 6, 7 or 8"));
            }
            let h = frac(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut s = vec![a1, rat::add(&e(8, 0), &e(8, 1)), diff(8, 1, 0)];
            for i in 2..l - 1 {
                s.push(diff(8, i, i - 1));
            }
            (8, s)
        }
        Series::F => {
            if l != 4 {
                return Err(bad("F needs rank 4"));
            }
            let h = frac(1, 2);
            let a4 = vec![h.clone(), -h.clone(), -h.clone(), -h];
            (4, vec![diff(4, 1, 2), diff(4, 2, 3), e(4, 3), a4])
        }
        Series::G => {
            if l != 2 {
                return Err(bad("G needs rank 2"));
            }
            (3, vec![diff(3, 0, 1), vec![int(-2), int(1), int(1)]])
        }
    })
}

impl RootSystem {
    pub fn dim_algebra(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    /// `<v, alpha_i^vee>`
    pub fn coroot_pairing(&self, v: &[Rat], i: usize) -> Rat {
        rat::dot(v, &self.simple_roots[i].0) * int(2) / &self.root_norms[i]
    }

    /// Dynkin labels `<v, alpha_i^vee>` for every simple root.
    pub fn labels(&self, v: &[Rat]) -> Vec<Rat> {
        (0..self.rank).map(|i| self.coroot_pairing(v, i)).collect()
    }

    /// Integral Dynkin labels; `None` if `v` is not an integral weight.
    pub fn int_labels(&self, v: &[Rat]) -> Option<Vec<i64>> {
        self.labels(v)
            .iter()
            .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn from_labels(&self, labels: &[i64]) -> WeightVec {
        let mut v = vec![Rat::zero(); self.ambient_dim];
        for (k, &c) in labels.iter().enumerate() {
            if c != 0 {
                rat::axpy(&mut v, &int(c), &self.fundamental_weights[k].0);
            }
        }
        WeightVec(v)
    }

    pub fn is_dominant(&self, v: &[Rat]) -> bool {
        (0..self.rank).all(|i| !self.coroot_pairing(v, i).is_negative())
    }

    pub fn reflect(&self, i: usize, v: &[Rat]) -> Vec<Rat> {
        let c = self.coroot_pairing(v, i);
        if c.is_zero() {
            return v.to_vec();
        }
        let mut out = v.to_vec();
        rat::axpy(&mut out, &-c, &self.simple_roots[i].0);
        out
    }

    /// The unique dominant element of the Weyl orbit of `v`.
    pub fn dominant_rep(&self, v: &[Rat]) -> Vec<Rat> {
        let mut cur = v.to_vec();
        while let Some(i) = (0..self.rank).find(|&i| self.coroot_pairing(&cur, i).is_negative()) {
            cur = self.reflect(i, &cur);
        }
        cur
    }

    pub fn weyl_orbit(&self, v: &WeightVec) -> BTreeSet<WeightVec> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(v.clone());
        queue.push_back(v.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank {
                let r = WeightVec(self.reflect(i, &w.0));
                if !seen.contains(&r) {
                    seen.insert(r.clone());
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// `-w0(lambda)` for dominant `lambda`.
    pub fn dual_highest_weight(&self, lambda: &WeightVec) -> Result<WeightVec> {
        if !self.is_dominant(&lambda.0) {
            return Err(Error::NotDominant);
        }
        Ok(WeightVec(self.dominant_rep(&rat::neg(&lambda.0))))
    }

    /// Integer Dynkin-label version of `dual_highest_weight`.
    pub fn dual_labels(&self, labels: &[i64]) -> Vec<i64> {
        let mut cur: Vec<i64> = labels.iter().map(|x| -x).collect();
        while let Some(i) = (0..self.rank).find(|&i| cur[i] < 0) {
            let c = cur[i];
            for (x, a) in cur.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
        cur
    }

    pub fn highest_root_labels(&self) -> Vec<i64> {
        self.positive_root_labels.last().cloned().unwrap_or_default()
    }

    /// Scaled inner product of two weights given by Dynkin labels.
    pub fn label_inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0i64;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc += x * self.gram_fund[i][j] * y;
            }
        }
        acc
    }

    pub fn weyl_group_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let l = self.rank;
        match self.series {
            Series::A => fact(l + 1),
            Series::B | Series::C => (1u128 << l) * fact(l),
            Series::D => (1u128 << (l - 1)) * fact(l),
            Series::E => match l {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1_152,
            Series::G => 12,
        }
    }

    /// Whether `v` lies in the span of the roots (the Cartan subalgebra).
    pub fn in_cartan(&self, v: &[Rat]) -> bool {
        let p = self.project_to_cartan_matrix();
        (0..self.ambient_dim).all(|r| rat::dot(&p[r], v) == v[r])
    }

    /// Orthogonal projection onto the span of the roots, as a matrix.
    pub fn project_to_cartan_matrix(&self) -> Vec<Vec<Rat>> {
        let n = self.ambient_dim;
        let r = self.rank;
        let g: Vec<Vec<Rat>> = (0..r)
            .map(|i| (0..r).map(|j| self.simple_roots[i].dot(&self.simple_roots[j].0)).collect())
            .collect();
        let gi = rat::invert(&g).expect("simple roots are independent");
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut acc = Rat::zero();
                        for i in 0..r {
                            for j in 0..r {
                                acc += &self.simple_roots[i].0[a] * &gi[i][j] * &self.simple_roots[j].0[b];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem> {
    let (n, simple) = simple_roots(series, rank)?;
    let r = simple.len();
    let norms: Vec<Rat> = simple.iter().map(|a| rat::dot(a, a)).collect();

    let cartan_rat: Vec<Vec<Rat>> = (0..r)
        .map(|i| (0..r).map(|j| rat::dot(&simple[i], &simple[j]) * int(2) / &norms[j]).collect())
        .collect();
    let cartan: Vec<Vec<i64>> = cartan_rat
        .iter()
        .map(|row| row.iter().map(|x| x.to_integer().to_i64().unwrap()).collect())
        .collect();

    // omega_i = sum_k (A^{-1})_{ik} alpha_k
    let inv = rat::invert(&cartan_rat).expect("Cartan matrix is invertible");
    let fund: Vec<WeightVec> = (0..r)
        .map(|i| {
            let mut v = vec![Rat::zero(); n];
            for k in 0..r {
                rat::axpy(&mut v, &inv[i][k], &simple[k]);
            }
            WeightVec(v)
        })
        .collect();
    let coweights: Vec<WeightVec> = (0..r)
        .map(|i| WeightVec(rat::scale(&fund[i].0, &(int(2) / &norms[i]))))
        .collect();

    let mut rs = RootSystem {
        series,
        rank: r,
        ambient_dim: n,
        simple_roots: simple.into_iter().map(WeightVec).collect(),
        positive_roots: Vec::new(),
        fundamental_weights: fund,
        fundamental_coweights: coweights,
        cartan,
        positive_root_labels: Vec::new(),
        positive_root_coeffs: Vec::new(),
        gram_fund: Vec::new(),
        gram_scale: 1,
        root_norms: norms,
    };

    // Every root is Weyl-conjugate to a simple root.
    let mut roots = BTreeSet::new();
    for a in &rs.simple_roots {
        roots.extend(rs.weyl_orbit(a));
    }
    let mut pos: Vec<(i64, Vec<i64>, WeightVec)> = roots
        .into_iter()
        .filter_map(|b| {
            let coeffs: Vec<Rat> = rs.fundamental_coweights.iter().map(|w| b.dot(&w.0)).collect();
            if coeffs.iter().any(Signed::is_negative) {
                return None;
            }
            let c: Vec<i64> = coeffs.iter().map(|x| x.to_integer().to_i64().unwrap()).collect();
            Some((c.iter().sum(), c, b))
        })
        .collect();
    pos.sort();
    rs.positive_root_labels = pos.iter().map(|(_, _, b)| rs.int_labels(&b.0).unwrap()).collect();
    rs.positive_root_coeffs = pos.iter().map(|(_, c, _)| c.clone()).collect();
    rs.positive_roots = pos.into_iter().map(|(_, _, b)| b).collect();

    let gram: Vec<Vec<Rat>> = (0..r)
        .map(|i| (0..r).map(|j| rs.fundamental_weights[i].dot(&rs.fundamental_weights[j].0)).collect())
        .collect();
    let scale = gram
        .iter()
        .flatten()
        .fold(num_bigint::BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    let scale_r = Rat::from_integer(scale.clone());
    rs.gram_fund = gram
        .iter()
        .map(|row| row.iter().map(|x| (x * &scale_r).to_integer().to_i64().unwrap()).collect())
        .collect();
    rs.gram_scale = scale.to_i64().unwrap();
    Ok(rs)
}

/// Cached, shared root system.
pub fn root_system(series: Series, rank: usize) -> Result<Arc<RootSystem>> {
    type Cache = Mutex<HashMap<(Series, usize), Arc<RootSystem>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rs) = cache.lock().unwrap().get(&(series, rank)) {
        return Ok(rs.clone());
    }
    let rs = Arc::new(build_root_system(series, rank)?);
    Ok(cache.lock().unwrap().entry((series, rank)).or_insert(rs).clone())
}
