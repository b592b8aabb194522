//! Exact rational scalars and small dense linear algebra over them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `n` or `n/d`.
pub fn fmt(r: &Rat) -> String {
    r.to_string()
}

/// Decimal approximation rounded to `places` digits, for display only.
pub fn decimal(r: &Rat, places: usize) -> String {
    let scaled = (r.abs() * Rat::from_integer(BigInt::from(10).pow(places as u32))).round().to_integer();
    let mut digits = scaled.to_string();
    if digits.len() <= places {
        digits = format!("{}{digits}", "0".repeat(places + 1 - digits.len()));
    }
    let (whole, frac) = digits.split_at(digits.len() - places);
    let sign = if r.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac}")
    }
}

pub fn parse(s: &str) -> Result<Rat> {
    let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("`{s}`: {msg}") };
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(n, d))
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], k: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * k).collect()
}

pub fn neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// `a += k * b`
pub fn axpy(a: &mut [Rat], k: &Rat, b: &[Rat]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += k * y;
        }
    }
}

/// Inverse of a square matrix, `None` if singular.
pub fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let k = -row[col].clone();
                axpy(row, &k, &prow);
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank by Gaussian elimination.
pub fn rank(m: &[Vec<Rat>]) -> usize {
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let prow = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            if !row[c].is_zero() {
                let k = -(&row[c] / &prow[c]);
                axpy(row, &k, &prow);
            }
        }
        r += 1;
    }
    r
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}
