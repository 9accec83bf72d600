//! Hyperbolic, extremal and modulus lengths of curves, the collar function,
//! and the thick-part threshold for short Teichmüller geodesics.
//!
//! Everything here is binary64: downstream uses are strict inequalities
//! with room to spare.

use std::fmt;

use crate::error::{Error, Result};

/// Which notion of length a value carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthKind {
    Hyperbolic,
    Extremal,
    Modulus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LengthValue {
    kind: LengthKind,
    value: f64,
}

impl LengthValue {
    pub fn new(kind: LengthKind, value: f64) -> Result<Self> {
        positive("length", value)?;
        Ok(LengthValue { kind, value })
    }

    pub fn kind(&self) -> LengthKind {
        self.kind
    }

    pub fn value(&self) -> f64 {
        self.value
    }
}

impl fmt::Display for LengthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            LengthKind::Hyperbolic => "hyperbolic",
            LengthKind::Extremal => "extremal",
            LengthKind::Modulus => "modulus",
        };
        write!(f, "{} ({tag})", self.value)
    }
}

fn positive(what: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{what} must be positive and finite (got {x})"
        )))
    }
}

fn nonnegative(what: &str, x: f64) -> Result<()> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{what} must be nonnegative and finite (got {x})"
        )))
    }
}

/// Fixed point of the collar function, `2·asinh(1)`.
pub fn collar_fixed_point() -> f64 {
    2.0 * 1f64.asinh()
}

/// `F(x) = 2·asinh(1 / sinh(x/2))`: any curve crossing a geodesic of
/// length `x` has length at least `F(x)`. Decreasing, and an involution.
pub fn collar_f(x: f64) -> Result<f64> {
    positive("collar argument", x)?;
    Ok(collar_f_unchecked(x))
}

fn collar_f_unchecked(x: f64) -> f64 {
    2.0 * (1.0 / (x / 2.0).sinh()).asinh()
}

/// Lower bound `i·F(ℓ)` for a curve meeting a geodesic of length `ℓ`
/// in `intersections` points.
pub fn collar_lower_bound(ell: f64, intersections: u64) -> Result<f64> {
    Ok(intersections as f64 * collar_f(ell)?)
}

/// The root of `F(x) = e^{3L}·x`. Below it `F(x) > e^{3L}·x` strictly.
///
/// Bisection on `[0, x*]`; stops once the bracket and the residual are
/// both within `tol`, or the bracket is two adjacent floats. The lower
/// endpoint is returned, so the strict inequality holds there as well.
pub fn epsilon_thick(l: f64, tol: f64) -> Result<f64> {
    positive("L", l)?;
    positive("tolerance", tol)?;
    let growth = (3.0 * l).exp();
    if !growth.is_finite() {
        return Err(Error::InvalidArgument(format!("L = {l} overflows e^(3L)")));
    }
    let h = |x: f64| collar_f_unchecked(x) - growth * x;
    let mut lo = 0.0f64;
    let mut hi = collar_fixed_point();
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if lo > 0.0 && hi - lo <= tol && h(lo).abs() <= tol {
            break;
        }
    }
    Ok(lo)
}

/// Residual `F(ε) − e^{3L}·ε`.
pub fn epsilon_residual(l: f64, eps: f64) -> Result<f64> {
    Ok(collar_f(eps)? - (3.0 * l).exp() * eps)
}

/// Closed bracket on a positive quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LengthBracket {
    pub lower: LengthValue,
    pub upper: LengthValue,
}

impl LengthBracket {
    pub fn contains(&self, x: f64) -> bool {
        self.lower.value <= x && x <= self.upper.value
    }
}

/// Extremal length of a curve with hyperbolic length `ℓ` lies in
/// `[ℓ/π, (ℓ/2)·e^{ℓ/2}]`.
pub fn extremal_bounds(ell: f64) -> Result<LengthBracket> {
    positive("hyperbolic length", ell)?;
    Ok(LengthBracket {
        lower: LengthValue::new(LengthKind::Extremal, ell / std::f64::consts::PI)?,
        upper: LengthValue::new(LengthKind::Extremal, 0.5 * ell * (0.5 * ell).exp())?,
    })
}

/// The modulus is the reciprocal of extremal length, so its bracket is
/// the reciprocal of [`extremal_bounds`].
pub fn modulus_bounds(ell: f64) -> Result<LengthBracket> {
    let ext = extremal_bounds(ell)?;
    Ok(LengthBracket {
        lower: LengthValue::new(LengthKind::Modulus, 1.0 / ext.upper.value)?,
        upper: LengthValue::new(LengthKind::Modulus, 1.0 / ext.lower.value)?,
    })
}

/// Upper bound `e^{d}·ℓ_Y` on the length at a point at Teichmüller
/// distance `d`.
pub fn wolpert_factor(ell_y: f64, dist: f64) -> Result<f64> {
    positive("length", ell_y)?;
    nonnegative("Teichmüller distance", dist)?;
    Ok(dist.exp() * ell_y)
}

/// Arithmetic of the contradiction showing that a short geodesic cannot
/// enter the `ε₁(L)`-thin part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThickChain {
    /// `F(ℓ)`, the collar lower bound on the length of a crossing iterate.
    pub collar: f64,
    /// `λ^{3g-2}·ℓ` with `log λ = L/g`, via repeated length stretching.
    pub stretched: f64,
    /// `e^{3L}·ℓ`.
    pub threshold: f64,
}

impl ThickChain {
    /// The chain `stretched < threshold < collar`, which is impossible for an
    /// actual crossing iterate.
    pub fn is_contradiction(&self) -> bool {
        self.stretched < self.threshold && self.threshold < self.collar
    }
}

pub fn thick_chain(l: f64, g: u32, ell: f64) -> Result<ThickChain> {
    positive("L", l)?;
    positive("length", ell)?;
    if g < 2 {
        return Err(Error::InvalidArgument(format!(
            "genus must be at least 2 (got {g})"
        )));
    }
    let step = l / g as f64;
    let mut stretched = ell;
    for _ in 0..(3 * g - 2) {
        stretched = wolpert_factor(stretched, step)?;
    }
    Ok(ThickChain {
        collar: collar_f(ell)?,
        stretched,
        threshold: (3.0 * l).exp() * ell,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const XSTAR: f64 = 1.762_747_174_039_086;

    #[test]
    fn collar_examples() {
        assert!((collar_fixed_point() - XSTAR).abs() < 1e-15);
        assert!((collar_f(XSTAR).unwrap() - XSTAR).abs() < 1e-14);
        assert!((collar_f(collar_f(2.0).unwrap()).unwrap() - 2.0).abs() < 1e-12);
        assert!(collar_f(1e-6).unwrap() > 25.0);
        assert!((collar_f(1.0).unwrap() - 2.813_658_227_494_591).abs() < 1e-13);
        assert!(collar_f(0.0).is_err());
        assert!(collar_f(-1.0).is_err());
        assert!(collar_f(f64::NAN).is_err());
    }

    #[test]
    fn collar_is_a_decreasing_involution() {
        let mut prev = f64::INFINITY;
        for i in 0..5000 {
            let x = 1e-6 * (50.0f64 / 1e-6).powf(i as f64 / 4999.0);
            let fx = collar_f(x).unwrap();
            assert!(fx < prev);
            prev = fx;
            assert!((collar_f(fx).unwrap() - x).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn collar_bound_examples() {
        assert_eq!(collar_lower_bound(1.0, 0).unwrap(), 0.0);
        assert!((collar_lower_bound(XSTAR, 1).unwrap() - XSTAR).abs() < 1e-14);
        assert!((collar_lower_bound(1.0, 3).unwrap() - 3.0 * 2.813_658_227_494_591).abs() < 1e-12);
        assert!(collar_lower_bound(0.0, 1).is_err());
    }

    #[test]
    fn epsilon_regression_values() {
        // Values from 40-digit bisection in an independent tool.
        let cases = [
            (1e-9, 1.762_747_171_394_965_3),
            (0.1, 1.510_801_647_205_273_3),
            (0.5, 0.751_402_136_347_054_1),
            (0.962, 0.292_204_805_767_094_1),
            (1.0, 0.268_951_959_781_189_4),
            (2.0, 0.025_133_799_759_029_62),
            (5.0, 8.026_313_757_658_46e-6),
        ];
        for (l, want) in cases {
            let eps = epsilon_thick(l, 1e-12).unwrap();
            assert!(
                (eps - want).abs() < 1e-10 * want.max(1e-3),
                "L={l}: {eps} vs {want}"
            );
            assert!(epsilon_residual(l, eps).unwrap().abs() < 1e-10);
            assert!(epsilon_residual(l, eps).unwrap() > 0.0);
            let below = 0.99 * eps;
            assert!(collar_f(below).unwrap() > (3.0 * l).exp() * below);
        }
        assert!(epsilon_thick(1.0, 1e-12).unwrap() < epsilon_thick(0.5, 1e-12).unwrap());
        assert!(epsilon_thick(0.0, 1e-12).is_err());
        assert!(epsilon_thick(400.0, 1e-12).is_err());
    }

    #[test]
    fn extremal_and_modulus_brackets() {
        let b = extremal_bounds(2.0).unwrap();
        assert!((b.lower.value() - 2.0 / std::f64::consts::PI).abs() < 1e-15);
        assert!((b.upper.value() - std::f64::consts::E).abs() < 1e-15);
        for ell in [0.01, 1.0, 10.0] {
            let e = extremal_bounds(ell).unwrap();
            assert!(e.lower.value() < e.upper.value());
            let m = modulus_bounds(ell).unwrap();
            assert_eq!(m.lower.value(), 1.0 / e.upper.value());
            assert_eq!(m.upper.value(), 1.0 / e.lower.value());
            assert_eq!(m.lower.kind(), LengthKind::Modulus);
        }
        assert!(extremal_bounds(0.0).is_err());
    }

    #[test]
    fn wolpert_examples() {
        assert_eq!(wolpert_factor(1.3, 0.0).unwrap(), 1.3);
        assert!((wolpert_factor(1.0, 0.962 / 2.0).unwrap() - 1.617_691_284_901_700_5).abs() < 1e-12);
        let mut x = 0.7;
        for _ in 0..5 {
            x = wolpert_factor(x, 0.3).unwrap();
        }
        assert!((x - wolpert_factor(0.7, 1.5).unwrap()).abs() < 1e-12);
        assert!(wolpert_factor(1.0, -0.1).is_err());
    }

    #[test]
    fn chain_below_threshold_is_contradictory() {
        for l in [0.1, 0.962, 2.0] {
            let eps = epsilon_thick(l, 1e-12).unwrap();
            for g in [2, 3, 10, 50] {
                for frac in [0.1, 0.5, 0.999] {
                    let c = thick_chain(l, g, frac * eps).unwrap();
                    assert!(c.is_contradiction(), "L={l} g={g} frac={frac}: {c:?}");
                }
            }
        }
        // Above the threshold the chain breaks.
        let eps = epsilon_thick(0.962, 1e-12).unwrap();
        assert!(!thick_chain(0.962, 2, 1.5 * eps).unwrap().is_contradiction());
        assert!(thick_chain(0.962, 1, 0.1).is_err());
    }

    #[test]
    fn length_value_rejects_nonpositive() {
        assert!(LengthValue::new(LengthKind::Hyperbolic, 0.0).is_err());
        let v = LengthValue::new(LengthKind::Extremal, 2.5).unwrap();
        assert_eq!(v.to_string(), "2.5 (extremal)");
    }
}
