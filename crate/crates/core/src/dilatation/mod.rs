//! Dilatations as largest real roots of specialized Teichmüller polynomials.
//!
//! A face's Teichmüller polynomial is a multivariate integer Laurent
//! polynomial. Pairing its exponents with an integral class gives a
//! one-variable polynomial whose largest real root is the dilatation of the
//! corresponding monodromy. Roots are certified; logs carry interval bounds.

mod isolate;
pub mod poly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::conegeom::{in_open_cone, FiberedFace, IntegralClass, NormData};
use crate::error::{Error, Result};
use crate::rational::{format_rational, next_down, next_up, to_f64_down, to_f64_up};

pub use isolate::perron_root;
pub use poly::SparsePoly;

/// Closed rational interval `[lo, hi]` holding a certified root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RootInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty root interval");
        RootInterval { lo, hi }
    }

    pub fn exact(root: BigRational) -> Self {
        RootInterval {
            lo: root.clone(),
            hi: root,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Outward-rounded float bounds.
    pub fn bounds_f64(&self) -> (f64, f64) {
        (to_f64_down(&self.lo), to_f64_up(&self.hi))
    }

    pub fn midpoint_f64(&self) -> f64 {
        let (lo, hi) = self.bounds_f64();
        0.5 * (lo + hi)
    }

    pub fn overlaps(&self, other: &RootInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Certified enclosure of `ln(root)`.
    pub fn ln(&self) -> RealInterval {
        let (lo, hi) = self.bounds_f64();
        RealInterval::new(next_down(next_down(lo.ln())), next_up(next_up(hi.ln())))
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", format_rational(&self.lo), format_rational(&self.hi))
    }
}

impl std::str::FromStr for RootInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a rational interval: {s:?}"));
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let lo = crate::rational::parse_rational(lo.trim()).map_err(|_| bad())?;
        let hi = crate::rational::parse_rational(hi.trim()).map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(RootInterval { lo, hi })
    }
}

/// Closed interval of reals with outward-rounded f64 endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealInterval {
    pub lo: f64,
    pub hi: f64,
}

impl RealInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        RealInterval { lo, hi }
    }

    /// Multiplies by a nonnegative integer, rounding outward.
    pub fn scale(&self, k: i64) -> RealInterval {
        assert!(k >= 0);
        let k = k as f64;
        RealInterval::new(next_down(self.lo * k), next_up(self.hi * k))
    }

    pub fn overlaps(&self, other: &RealInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl std::str::FromStr for RealInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not an interval: {s:?}"));
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(bad());
        }
        Ok(RealInterval { lo, hi })
    }
}

/// Multivariate integer Laurent polynomial bound to one fibered face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeichPoly {
    b1: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl TeichPoly {
    pub fn new(b1: usize, terms: Vec<(Vec<i64>, i64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, (exponents, coeff)) in terms.into_iter().enumerate() {
            let loc = format!("teich_poly[{i}]");
            if exponents.len() != b1 {
                return Err(Error::validation(
                    loc,
                    format!(
                        "dimension mismatch: expected length {b1}, found {}",
                        exponents.len()
                    ),
                ));
            }
            if coeff == 0 {
                return Err(Error::validation(loc, "coefficients must be nonzero"));
            }
            if map.insert(exponents, coeff).is_some() {
                return Err(Error::validation(loc, "duplicate exponent vector"));
            }
        }
        if map.len() < 2 {
            return Err(Error::validation("teich_poly", "needs at least two terms"));
        }
        Ok(TeichPoly { b1, terms: map })
    }

    pub fn b1(&self) -> usize {
        self.b1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    /// `p_eta(x) = sum_a c_a x^{<eta, a>}`, shifted so the lowest exponent is 0.
    pub fn specialize(&self, eta: &IntegralClass) -> Result<SparsePoly> {
        if eta.dim() != self.b1 {
            return Err(Error::DimensionMismatch {
                expected: self.b1,
                found: eta.dim(),
            });
        }
        if eta.is_zero() {
            return Err(Error::ZeroClass);
        }
        SparsePoly::from_laurent_terms(self.terms.iter().map(|(a, c)| (eta.dot(a), BigInt::from(*c))))
            .ok_or_else(|| Error::DegenerateSpecialization(eta.to_string()))
    }
}

/// Dilatation of the monodromy dual to `eta`.
pub fn lambda(theta: &TeichPoly, eta: &IntegralClass, tol: &BigRational) -> Result<RootInterval> {
    perron_root(&theta.specialize(eta)?, tol)
}

/// `norm(eta) * log(lambda(eta))`, which is constant along rays.
pub fn normalized_dilatation(
    nd: &NormData,
    face: &FiberedFace,
    theta: &TeichPoly,
    eta: &IntegralClass,
    tol: &BigRational,
) -> Result<RealInterval> {
    if !in_open_cone(nd, face, eta)? {
        return Err(Error::OutsideOpenCone(eta.to_string()));
    }
    let norm = nd.norm(eta)?;
    let root = lambda(theta, eta, tol)?;
    debug_assert!(root.lo().is_positive());
    Ok(root.ln().scale(norm))
}
