//! Certified isolation of the largest real root.
//!
//! Every certificate is decided by exact sign evaluation at rational points.
//! Floating point only proposes where to look:
//!
//! 1. Fast path. Descartes' rule bounds the positive roots by the number `V`
//!    of coefficient sign changes. A floating-point scan (log-spaced, with
//!    extra resolution near `x = 1` where high-degree specializations cluster)
//!    proposes sign changes; if `V` of them are confirmed exactly, every
//!    positive root is simple and isolated, so the topmost bracket holds the
//!    largest root. This never builds a dense polynomial, which keeps
//!    degree-thousands specializations cheap.
//! 2. Fallback. Take the square-free part and run Descartes bisection
//!    (Möbius-transformed sign counts) from the top of the Cauchy bound down
//!    until an interval with exactly one root appears.
//!
//! The isolating bracket is then shrunk by exact bisection to the tolerance.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, SparsePoly};
use super::RootInterval;
use crate::error::{Error, Result};
use crate::rational::{dyadic_floor, to_f64_down, to_f64_up};

const SCAN_POINTS: usize = 768;
const SCAN_SCALES: [f64; 4] = [1.0, 1.0 / 16.0, 1.0 / 256.0, 1.0 / 4096.0];

enum Isolated {
    Exact(BigRational),
    Bracket {
        lo: BigRational,
        hi: BigRational,
        sign_lo: Ordering,
    },
}

/// Largest real root of `p`, which must exceed 1, to within `tol`.
pub fn perron_root(p: &SparsePoly, tol: &BigRational) -> Result<RootInterval> {
    if !tol.is_positive() {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::NotDilatation(format!("{p} has no roots")));
    }
    if p.terms()[0].0 != 0 {
        // Strip the x^k factor; it only contributes the root 0.
        let shift = p.terms()[0].0 as i64;
        let p = SparsePoly::from_laurent_terms(p.terms().iter().map(|(e, c)| (*e as i64 - shift, c.clone())))
            .expect("nonzero");
        return perron_root(&p, tol);
    }
    let p = if p.leading_coefficient().is_some_and(|c| c.is_negative()) {
        p.negated()
    } else {
        p.clone()
    };
    if p.sign_variations() == 0 {
        return Err(Error::NotDilatation(format!("{p} has no positive real root")));
    }

    if let Some(isolated) = fast_isolation(&p) {
        return finish(&p, isolated, tol);
    }
    let sqf = SparsePoly::from_dense(&poly::squarefree_part(&p.to_dense()));
    let isolated = descartes_isolation(&sqf)?;
    finish(&sqf, isolated, tol)
}

fn fast_isolation(p: &SparsePoly) -> Option<Isolated> {
    let bound = p.sign_variations();
    let (lower, upper) = p.positive_root_bounds();
    let umin = to_f64_down(&lower).ln();
    let umax = to_f64_up(&upper).ln();

    let mut grid: Vec<f64> = Vec::with_capacity(SCAN_POINTS * SCAN_SCALES.len() + 1);
    for s in SCAN_SCALES {
        let (a, b) = (umin * s, umax * s);
        for i in 0..=SCAN_POINTS {
            grid.push(a + (b - a) * (i as f64) / (SCAN_POINTS as f64));
        }
    }
    grid.push(0.0);
    let mut xs: Vec<f64> = grid
        .into_iter()
        .map(f64::exp)
        .filter(|x| x.is_finite() && *x > 0.0)
        .collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();

    let mut candidates: Vec<f64> = Vec::new();
    let mut last: Option<(f64, bool)> = None;
    for &x in &xs {
        let v = p.eval_scaled(x);
        if v == 0.0 || !v.is_finite() {
            continue;
        }
        let neg = v < 0.0;
        if let Some((px, pneg)) = last {
            if pneg != neg {
                candidates.push(px);
                candidates.push(x);
            }
        }
        last = Some((x, neg));
    }
    if candidates.len() / 2 < bound || candidates.len() / 2 > 4 * bound + 8 {
        return None;
    }
    candidates.dedup();

    let mut points = Vec::with_capacity(candidates.len());
    for x in candidates {
        let r = BigRational::from_float(x)?;
        let s = p.sign_at(&r);
        if s == Ordering::Equal {
            return None;
        }
        points.push((r, s));
    }
    let changes: Vec<usize> = (1..points.len())
        .filter(|&i| points[i - 1].1 != points[i].1)
        .collect();
    if changes.len() != bound {
        return None;
    }
    let top = *changes.last()?;
    Some(Isolated::Bracket {
        lo: points[top - 1].0.clone(),
        hi: points[top].0.clone(),
        sign_lo: points[top - 1].1,
    })
}

enum Work {
    Interval(BigRational, BigRational),
    Point(BigRational),
}

/// Descartes bisection on a square-free polynomial, searching from the top.
fn descartes_isolation(sqf: &SparsePoly) -> Result<Isolated> {
    let dense = sqf.to_dense();
    let (_, upper) = sqf.positive_root_bounds();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut stack = vec![Work::Interval(BigRational::zero(), upper)];
    while let Some(work) = stack.pop() {
        match work {
            Work::Point(m) => return Ok(Isolated::Exact(m)),
            Work::Interval(a, b) => match poly::descartes_interval(&dense, &a, &b) {
                0 => {}
                1 => {
                    let sign_lo = sqf.sign_at(&a);
                    debug_assert_ne!(sign_lo, sqf.sign_at(&b));
                    return Ok(Isolated::Bracket {
                        lo: a,
                        hi: b,
                        sign_lo,
                    });
                }
                _ => {
                    let m = (&a + &b) / &two;
                    stack.push(Work::Interval(a, m.clone()));
                    if sqf.sign_at(&m) == Ordering::Equal {
                        stack.push(Work::Point(m.clone()));
                    }
                    stack.push(Work::Interval(m, b));
                }
            },
        }
    }
    Err(Error::NotDilatation(format!("{sqf} has no positive real root")))
}

fn not_above_one(p: &SparsePoly) -> Error {
    Error::NotDilatation(format!("largest real root of {p} is not greater than 1"))
}

/// Pushes the isolated root above 1 and shrinks the bracket to `tol`.
fn finish(p: &SparsePoly, isolated: Isolated, tol: &BigRational) -> Result<RootInterval> {
    let one = BigRational::one();
    let (mut lo, mut hi, sign_lo) = match isolated {
        Isolated::Exact(r) => {
            return if r > one {
                Ok(RootInterval::exact(r))
            } else {
                Err(not_above_one(p))
            };
        }
        Isolated::Bracket { lo, hi, sign_lo } => (lo, hi, sign_lo),
    };

    if hi <= one {
        return Err(not_above_one(p));
    }
    if lo < one {
        match p.sign_at(&one) {
            Ordering::Equal => return Err(not_above_one(p)),
            s if s == sign_lo => lo = one.clone(),
            _ => return Err(not_above_one(p)),
        }
    }

    // Float guess, then an exact check of a tol-wide bracket around it.
    if let Some(guess) = float_root(p, &lo, &hi, sign_lo) {
        if p.sign_at(&guess) == Ordering::Equal && guess > one {
            return Ok(RootInterval::exact(guess));
        }
        let half = dyadic_floor(tol) / BigRational::from_integer(BigInt::from(2));
        let a = std::cmp::max(&guess - &half, lo.clone());
        let b = std::cmp::min(&guess + &half, hi.clone());
        let sa = p.sign_at(&a);
        let sb = p.sign_at(&b);
        if sa == Ordering::Equal && a > one {
            return Ok(RootInterval::exact(a));
        }
        if sb == Ordering::Equal && b > one {
            return Ok(RootInterval::exact(b));
        }
        if sa == sign_lo && sb != sign_lo {
            lo = a;
            hi = b;
        }
    }

    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > *tol || lo <= one {
        let mid = (&lo + &hi) / &two;
        match p.sign_at(&mid) {
            Ordering::Equal => return Ok(RootInterval::exact(mid)),
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(RootInterval::new(lo, hi))
}

fn float_root(p: &SparsePoly, lo: &BigRational, hi: &BigRational, sign_lo: Ordering) -> Option<BigRational> {
    let mut a = to_f64_up(lo);
    let mut b = to_f64_down(hi);
    if a.partial_cmp(&b) != Some(Ordering::Less) {
        return None;
    }
    let lo_negative = sign_lo == Ordering::Less;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let v = p.eval_scaled(m);
        if v == 0.0 {
            return BigRational::from_float(m);
        }
        if (v < 0.0) == lo_negative {
            a = m;
        } else {
            b = m;
        }
    }
    BigRational::from_float(0.5 * (a + b))
}
