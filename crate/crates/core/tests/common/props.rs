//! Randomized exact checks built from raw integer draws, so the same
//! checks can be driven by proptest or by a seeded generator.

use num_traits::{One, Zero};
use rand::Rng;

use temper_core::pvcore::{compute_pv, superadditivity_check};
use temper_core::rat::{self, frac, int, Rat};
use temper_core::repkit::{dimension, HighestWeight, RepName};
use temper_core::rho::{rho_eval, rho_function, rho_h, ModuleSpec, SemisimpleAlg};

use super::alg;

pub const ALGS: &[&str] = &["A1", "A2", "A3", "B2", "C3", "G2", "B3", "A1+A1", "A1+A2", "A1+B2", "A2+G2"];

/// First index in `ALGS` with more than one simple factor.
pub const FIRST_SEMISIMPLE: usize = 7;

const MAX_DIM: u64 = 64;

/// Raw draws for one case; every field is reduced modulo what it selects.
#[derive(Clone, Debug)]
pub struct Raw {
    pub alg: usize,
    pub labels: Vec<u8>,
    pub mask: u8,
    pub mult: u8,
    pub dual_mult: u8,
    pub coords: Vec<i8>,
    pub den: u8,
}

pub const N_LABELS: usize = 16;
pub const N_COORDS: usize = 24;

impl Raw {
    pub fn draw<R: Rng>(rng: &mut R, alg_range: std::ops::Range<usize>) -> Raw {
        Raw {
            alg: rng.gen_range(alg_range),
            labels: (0..N_LABELS).map(|_| rng.gen_range(0..3)).collect(),
            mask: rng.gen(),
            mult: rng.gen_range(1..4),
            dual_mult: rng.gen_range(0..3),
            coords: (0..N_COORDS).map(|_| rng.gen_range(-6..=6)).collect(),
            den: rng.gen_range(1..5),
        }
    }
}

pub struct Case {
    pub h: SemisimpleAlg,
    /// Two irreducible summands (products over the factors they touch).
    pub v1: ModuleSpec,
    pub v2: ModuleSpec,
    pub ys: [Vec<Rat>; 3],
}

fn factor_labels(h: &SemisimpleAlg, k: usize, raw: &[u8]) -> Vec<u32> {
    let rs = &h.factors[k];
    let mut l: Vec<u32> = raw.iter().take(rs.rank).map(|&x| x as u32 % 3).collect();
    if l.iter().all(|&x| x == 0) {
        l[0] = 1;
    }
    let hw = HighestWeight(l.iter().map(|&x| x as i64).collect());
    if dimension(rs, &hw) > MAX_DIM / 2 {
        l = vec![0; rs.rank];
        l[0] = 1;
    }
    l
}

fn summand(h: &SemisimpleAlg, raw: &Raw, shift: usize, mask: u8) -> ModuleSpec {
    let n = h.factors.len();
    let mut reps = Vec::new();
    let mut dim = 1;
    for k in 0..n {
        if mask >> k & 1 == 0 && !(k + 1 == n && reps.is_empty()) {
            continue;
        }
        let mut l = factor_labels(h, k, &raw.labels[(shift + 4 * k) % N_LABELS..]);
        let rs = &h.factors[k];
        let d = dimension(rs, &HighestWeight(l.iter().map(|&x| x as i64).collect()));
        if dim * d > MAX_DIM {
            l = vec![0; rs.rank];
            l[0] = 1;
        }
        dim *= dimension(rs, &HighestWeight(l.iter().map(|&x| x as i64).collect()));
        reps.push((k, RepName::Hw(l)));
    }
    let mut spec = ModuleSpec::trivial(0);
    spec.push(1, reps, false);
    spec
}

fn cartan(h: &SemisimpleAlg, coords: &[i8], den: u8) -> Vec<Rat> {
    let mut y = vec![Rat::zero(); h.ambient_dim()];
    let d = den.max(1) as i64;
    for (w, &c) in h.coweights().iter().zip(coords) {
        rat::axpy(&mut y, &frac(c as i64, d), &w.0);
    }
    y
}

pub fn build(raw: &Raw) -> Case {
    let h = alg(ALGS[raw.alg % ALGS.len()]);
    let v1 = summand(&h, raw, 0, raw.mask);
    let v2 = summand(&h, raw, 7, raw.mask >> 3);
    let ys = [
        cartan(&h, &raw.coords[0..], raw.den),
        cartan(&h, &raw.coords[8..], raw.den),
        cartan(&h, &raw.coords[16..], 1),
    ];
    Case { h, v1, v2, ys }
}

type Check = Result<(), String>;

fn fail(what: &str, c: &Case) -> Check {
    Err(format!("{what}: h = {}, V1 = {}, V2 = {}", c.h, c.v1, c.v2))
}

/// `p_{V*} = p_V`, and `rho_{V + V*} = 2 rho_V` pointwise.
pub fn duality(c: &Case) -> Check {
    let v = c.v1.clone().plus(&c.v2);
    let a = compute_pv(&c.h, &v).unwrap();
    let b = compute_pv(&c.h, &v.dual()).unwrap();
    if a.value != b.value {
        return fail("p_V* != p_V", c);
    }
    let mut both = ModuleSpec::trivial(0);
    both.push(1, c.v1.summands[0].reps.clone(), true);
    let f1 = rho_function(&c.h, &c.v1).unwrap();
    let f2 = rho_function(&c.h, &both).unwrap();
    for y in &c.ys {
        if rho_eval(&f2, y) != int(2) * rho_eval(&f1, y) {
            return fail("rho of V + dual is not twice rho_V", c);
        }
    }
    Ok(())
}

/// `m` copies of `V` and `n` of `V*` give `p_V / (m + n)`.
pub fn scaling(c: &Case, m: u8, n: u8) -> Check {
    let base = compute_pv(&c.h, &c.v1).unwrap().value;
    let v = c.v1.clone().times(m.max(1) as u32).plus(&c.v1.dual().times(n as u32));
    let k = int((m.max(1) + n) as i64);
    let got = compute_pv(&c.h, &v).unwrap().value;
    let ok = match (&base, &got) {
        (temper_core::PvValue::Finite(a), temper_core::PvValue::Finite(b)) => *b == a / &k,
        (temper_core::PvValue::Infinite, temper_core::PvValue::Infinite) => true,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        fail("multiplicity scaling", c)
    }
}

/// `1/p_{V1+V2} >= 1/p_{V1} + 1/p_{V2}`.
pub fn superadditivity(c: &Case) -> Check {
    if superadditivity_check(&c.h, &c.v1, &c.v2).unwrap() {
        Ok(())
    } else {
        fail("superadditivity of 1/p", c)
    }
}

/// `rho_V(X1) <= rho_V(X1 + X2)` for `X1`, `X2` in different ideals.
pub fn monotonicity(c: &Case) -> Check {
    if c.h.factors.len() < 2 {
        return Ok(());
    }
    let v = c.v1.clone().plus(&c.v2);
    let f = rho_function(&c.h, &v).unwrap();
    let x1 = c.h.embed(0, c.h.block(0, &c.ys[0])).0;
    let x2 = c.h.embed(1, c.h.block(1, &c.ys[1])).0;
    if rho_eval(&f, &x1) <= rho_eval(&f, &rat::add(&x1, &x2)) {
        Ok(())
    } else {
        fail("monotonicity across ideals", c)
    }
}

/// Invariance under every simple reflection of every factor.
pub fn weyl_invariance(c: &Case) -> Check {
    let v = c.v1.clone().plus(&c.v2);
    let f = rho_function(&c.h, &v).unwrap();
    let fh = rho_h(&c.h);
    let y = &c.ys[0];
    let base = (rho_eval(&f, y), rho_eval(&fh, y));
    for (k, rs) in c.h.factors.iter().enumerate() {
        for i in 0..rs.rank {
            let r = rs.reflect(i, c.h.block(k, y));
            let mut w = y.clone();
            let o = c.h.offset(k);
            w[o..o + r.len()].clone_from_slice(&r);
            if (rho_eval(&f, &w), rho_eval(&fh, &w)) != base {
                return fail("Weyl invariance", c);
            }
        }
    }
    Ok(())
}

pub fn evenness(c: &Case) -> Check {
    let f = rho_function(&c.h, &c.v1.clone().plus(&c.v2)).unwrap();
    for y in &c.ys {
        if rho_eval(&f, y) != rho_eval(&f, &rat::neg(y)) {
            return fail("evenness", c);
        }
    }
    Ok(())
}

pub fn midpoint_convexity(c: &Case) -> Check {
    let f = rho_function(&c.h, &c.v1.clone().plus(&c.v2)).unwrap();
    let half = frac(1, 2);
    let (a, b) = (&c.ys[0], &c.ys[1]);
    let mid = rat::scale(&rat::add(a, b), &half);
    if rho_eval(&f, &mid) <= (rho_eval(&f, a) + rho_eval(&f, b)) * &half {
        Ok(())
    } else {
        fail("midpoint convexity", c)
    }
}

/// Dominant samples never beat the optimum, and the minimizer attains it.
pub fn sampling_lower_bound(c: &Case) -> Check {
    let v = c.v1.clone().plus(&c.v2);
    let res = compute_pv(&c.h, &v).unwrap();
    let f = rho_function(&c.h, &v).unwrap();
    let fh = rho_h(&c.h);
    for y in &c.ys {
        let y = c.h.dominant_rep(y);
        if rat::is_zero_vec(&y) {
            continue;
        }
        if rho_eval(&f, &y) < &res.ratio * rho_eval(&fh, &y) {
            return fail("sampled ratio below the optimum", c);
        }
    }
    let m = &res.minimizer.0;
    if rho_eval(&fh, m) != Rat::one() || rho_eval(&f, m) != res.ratio {
        return fail("minimizer does not attain the optimum", c);
    }
    Ok(())
}
