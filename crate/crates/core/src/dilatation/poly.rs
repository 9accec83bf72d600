//! Univariate integer polynomials.
//!
//! [`SparsePoly`] is the public type: specializations of multivariate
//! Laurent polynomials along a class are sparse and can have very high
//! degree, so evaluation works term-by-term. The dense helpers at the bottom
//! back the Descartes/square-free machinery used when the sparse fast path
//! cannot certify a root.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `sum c_i x^{e_i}` with strictly increasing exponents and nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    terms: Vec<(u64, BigInt)>,
}

impl SparsePoly {
    /// Collects terms, summing equal exponents and dropping zeros. Exponents
    /// may be negative; the result is shifted so its lowest exponent is 0.
    /// Returns `None` if everything cancels.
    pub fn from_laurent_terms<I>(terms: I) -> Option<SparsePoly>
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut acc: std::collections::BTreeMap<i64, BigInt> = Default::default();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        let min = *acc.keys().next()?;
        Some(SparsePoly {
            terms: acc.into_iter().map(|(e, c)| ((e - min) as u64, c)).collect(),
        })
    }

    /// Builds from dense coefficients, index = exponent. Does not shift.
    pub fn from_dense(coeffs: &[BigInt]) -> SparsePoly {
        SparsePoly {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as u64, c.clone()))
                .collect(),
        }
    }

    pub fn from_i64_dense(coeffs: &[i64]) -> SparsePoly {
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        SparsePoly::from_dense(&big)
    }

    pub fn terms(&self) -> &[(u64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.terms.last().map_or(0, |(e, _)| *e)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.degree() as usize + 1];
        for (e, c) in &self.terms {
            out[*e as usize] = c.clone();
        }
        out
    }

    /// `p(x^k)`.
    pub fn compose_power(&self, k: u64) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn negated(&self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Sign changes in the coefficient sequence: Descartes' bound on the
    /// number of positive roots counted with multiplicity.
    pub fn sign_variations(&self) -> usize {
        self.terms
            .windows(2)
            .filter(|w| w[0].1.is_negative() != w[1].1.is_negative())
            .count()
    }

    /// Exact sign of `p(x)` at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(&(top, _)) = self.terms.last() else {
            return Ordering::Equal;
        };
        // Homogenized Horner: sum c_i n^{e_i} d^{top - e_i}, d > 0.
        let n = x.numer();
        let d = x.denom();
        let mut acc = BigInt::zero();
        let mut prev = top;
        for (e, c) in self.terms.iter().rev() {
            let gap = (prev - e) as usize;
            if gap > 0 {
                acc *= num_traits::pow(n.clone(), gap);
            }
            acc += c * num_traits::pow(d.clone(), (top - e) as usize);
            prev = *e;
        }
        if prev > 0 {
            acc *= num_traits::pow(n.clone(), prev as usize);
        }
        acc.sign_ordering()
    }

    /// Floating-point value scaled to stay finite: `p(x) / x^deg` for
    /// `x >= 1` and `p(x)` otherwise. Same sign as `p(x)` for `x > 0`.
    pub fn eval_scaled(&self, x: f64) -> f64 {
        let top = self.degree() as f64;
        let lx = x.ln();
        self.terms
            .iter()
            .map(|(e, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let shift = if x >= 1.0 { *e as f64 - top } else { *e as f64 };
                c * (shift * lx).exp()
            })
            .sum()
    }

    /// Positive-root bounds: every positive root lies strictly between the
    /// returned values. Requires a nonzero constant term.
    pub fn positive_root_bounds(&self) -> (BigRational, BigRational) {
        let lead = self.terms.last().expect("nonzero polynomial").1.abs();
        let constant = self.terms.first().expect("nonzero polynomial").1.abs();
        let n = self.terms.len();
        let upper_ratio = self.terms[..n - 1]
            .iter()
            .map(|(_, c)| BigRational::new(c.abs(), lead.clone()))
            .max()
            .unwrap_or_else(BigRational::zero);
        let lower_ratio = self.terms[1..]
            .iter()
            .map(|(_, c)| BigRational::new(c.abs(), constant.clone()))
            .max()
            .unwrap_or_else(BigRational::zero);
        let one = BigRational::one();
        let upper = &one + upper_ratio;
        let lower = one.clone() / (&one + lower_ratio);
        (lower, upper)
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Dense integer polynomial helpers (index = exponent, no trailing zeros).

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

pub(crate) fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let content = content * sign;
    p.iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder: some positive power of `lc(b)` times `a`, reduced mod `b`.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = degree(b);
    let lb = b.last().expect("nonzero divisor").clone();
    while !r.is_empty() && degree(&r) >= db {
        let lr = r.last().unwrap().clone();
        let shift = degree(&r) - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Exact quotient `a / b` up to a positive rational factor, returned primitive.
fn primitive_quotient(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = degree(b);
    let lb = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigInt::zero(); degree(&r).saturating_sub(db) + 1];
    while !r.is_empty() && degree(&r) >= db {
        let lr = r.last().unwrap().clone();
        let shift = degree(&r) - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for c in q.iter_mut() {
            *c *= &lb;
        }
        q[shift] += &lr;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact division");
    primitive_part(&q)
}

/// Gcd over `Q[x]`, returned primitive with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_remainder(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    x
}

const MODULUS: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(p: &[BigInt]) -> Vec<u64> {
    let m = BigInt::from(MODULUS);
    let mut out: Vec<u64> = p.iter().map(|c| c.mod_floor(&m).to_u64().unwrap()).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    while !b.is_empty() {
        // a <- a mod b
        let inv = powmod(*b.last().unwrap(), MODULUS - 2);
        while a.len() >= b.len() {
            let factor = mulmod(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (i, bc) in b.iter().enumerate() {
                let sub = mulmod(factor, *bc);
                a[i + shift] = (a[i + shift] + MODULUS - sub) % MODULUS;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Square-free part, primitive with positive leading coefficient.
///
/// A modular gcd of degree zero (with the leading coefficient surviving
/// reduction) proves coprimality over `Q` and skips the exact gcd.
pub(crate) fn squarefree_part(p: &[BigInt]) -> Vec<BigInt> {
    let p = primitive_part(p);
    if p.len() <= 2 {
        return p;
    }
    let dp = derivative(&p);
    let pm = reduce(&p);
    let dm = reduce(&dp);
    if pm.len() == p.len() && dm.len() == dp.len() && gcd_degree_mod(pm, dm) == 0 {
        return p;
    }
    let g = gcd(&p, &dp);
    if g.len() <= 1 {
        return p;
    }
    primitive_quotient(&p, &g)
}

/// `p(x + c)` for integer `c`.
pub(crate) fn taylor_shift(p: &mut [BigInt], c: &BigInt) {
    if c.is_zero() || p.len() < 2 {
        return;
    }
    let n = p.len() - 1;
    for i in 0..n {
        for j in (i..n).rev() {
            let add = c * &p[j + 1];
            p[j] += add;
        }
    }
}

fn variations(p: &[BigInt]) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for c in p.iter().filter(|c| !c.is_zero()) {
        let neg = c.is_negative();
        if last.is_some_and(|l| l != neg) {
            count += 1;
        }
        last = Some(neg);
    }
    count
}

/// Descartes bound on the number of roots of `p` in the open interval
/// `(a, b)`, via the Möbius map `x = (a + b y) / (1 + y)`.
pub(crate) fn descartes_interval(p: &[BigInt], a: &BigRational, b: &BigRational) -> usize {
    let n = degree(p);
    let w = a.denom().lcm(b.denom());
    let ua = a.numer() * (&w / a.denom());
    let ub = b.numer() * (&w / b.denom());
    let span = ub - &ua;
    // w^n p((ua + span x) / w)
    let mut r: Vec<BigInt> = p
        .iter()
        .enumerate()
        .map(|(i, c)| c * num_traits::pow(w.clone(), n - i))
        .collect();
    taylor_shift(&mut r, &ua);
    let mut s = BigInt::one();
    for c in r.iter_mut().skip(1) {
        s *= &span;
        *c *= &s;
    }
    r.reverse();
    taylor_shift(&mut r, &BigInt::one());
    variations(&r)
}

/// Descartes bound on roots in `(a, +inf)`.
#[cfg(test)]
pub(crate) fn descartes_above(p: &[BigInt], a: &BigRational) -> usize {
    let n = degree(p);
    let d = a.denom();
    // d^n p((num + x)/d), then positive roots in x.
    let mut r: Vec<BigInt> = p
        .iter()
        .enumerate()
        .map(|(i, c)| c * num_traits::pow(d.clone(), n - i))
        .collect();
    taylor_shift(&mut r, a.numer());
    variations(&r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn laurent_terms_are_normalized() {
        let p = SparsePoly::from_laurent_terms(vec![
            (3, BigInt::from(1)),
            (-1, BigInt::from(2)),
            (3, BigInt::from(-1)),
            (0, BigInt::from(-5)),
            (1, BigInt::from(1)),
        ])
        .unwrap();
        assert_eq!(p.to_string(), "x^2 - 5x + 2");
        assert!(SparsePoly::from_laurent_terms(vec![(1, BigInt::from(1)), (1, BigInt::from(-1))]).is_none());
    }

    #[test]
    fn exact_sign_matches_direct_evaluation() {
        let p = SparsePoly::from_i64_dense(&[1, -3, 1]);
        assert_eq!(p.sign_at(&q(0, 1)), Ordering::Greater);
        assert_eq!(p.sign_at(&q(1, 1)), Ordering::Less);
        assert_eq!(p.sign_at(&q(3, 1)), Ordering::Greater);
        assert_eq!(p.sign_at(&q(5, 2)), Ordering::Less); // 25/4 - 15/2 + 1 = -1/4
        let lin = SparsePoly::from_i64_dense(&[-2, 1]);
        assert_eq!(lin.sign_at(&q(2, 1)), Ordering::Equal);
        let sparse = SparsePoly::from_i64_dense(&[1, 0, 0, -1, -1, -1, 0, 0, 1]);
        // x^8 - x^5 - x^4 - x^3 + 1 at 13/10
        let x = 1.3f64;
        let direct = x.powi(8) - x.powi(5) - x.powi(4) - x.powi(3) + 1.0;
        assert_eq!(sparse.sign_at(&q(13, 10)), direct.partial_cmp(&0.0).unwrap());
    }

    #[test]
    fn display_and_variations() {
        let p = SparsePoly::from_i64_dense(&[1, -1, -1, -1, 1]);
        assert_eq!(p.to_string(), "x^4 - x^3 - x^2 - x + 1");
        assert_eq!(p.sign_variations(), 2);
        assert_eq!(SparsePoly::from_i64_dense(&[-2, 1]).to_string(), "x - 2");
        assert_eq!(SparsePoly::from_i64_dense(&[3, 0, -2]).to_string(), "-2x^2 + 3");
    }

    #[test]
    fn root_bounds_enclose_roots() {
        let p = SparsePoly::from_i64_dense(&[1, -3, 1]);
        let (lo, hi) = p.positive_root_bounds();
        assert_eq!(lo, q(1, 4));
        assert_eq!(hi, q(4, 1));
    }

    #[test]
    fn squarefree_part_removes_repeated_factors() {
        // (x - 2)^2 (x + 1) = x^3 - 3x^2 + 4
        let p = big(&[4, 0, -3, 1]);
        assert_eq!(squarefree_part(&p), big(&[-2, -1, 1]));
        // already square-free
        let p = big(&[1, -3, 1]);
        assert_eq!(squarefree_part(&p), p);
        // 2 (x^2 - 2)^3
        let base = big(&[-2, 0, 1]);
        let mut cube = big(&[2]);
        for _ in 0..3 {
            let mut next = vec![BigInt::zero(); cube.len() + 2];
            for (i, a) in cube.iter().enumerate() {
                for (j, b) in base.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            cube = next;
        }
        assert_eq!(squarefree_part(&cube), base);
    }

    #[test]
    fn taylor_shift_matches_expansion() {
        let mut p = big(&[0, 0, 1]);
        taylor_shift(&mut p, &BigInt::from(3));
        assert_eq!(p, big(&[9, 6, 1]));
    }

    #[test]
    fn descartes_counts_isolated_roots() {
        // roots of x^2 - 3x + 1: 0.381..., 2.618...
        let p = big(&[1, -3, 1]);
        assert_eq!(descartes_interval(&p, &q(0, 1), &q(4, 1)), 2);
        assert_eq!(descartes_interval(&p, &q(1, 1), &q(4, 1)), 1);
        assert_eq!(descartes_interval(&p, &q(1, 2), &q(5, 2)), 0);
        assert_eq!(descartes_above(&p, &q(27, 10)), 0);
        assert_eq!(descartes_above(&p, &q(1, 1)), 1);
    }
}
