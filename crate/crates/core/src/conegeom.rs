//! Cohomology classes, the polyhedral Thurston norm and fibered faces.
//!
//! The norm is stored in support-function form: the dual unit ball is the
//! convex hull of finitely many integral vertices, and
//! `norm(eta) = max_v <eta, v>`. A fibered face is named by the dual vertex
//! `psi` that realizes the norm on its open cone.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::gcd_i64;

/// An element of `H^1(M; Z)` in a fixed integral basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegralClass(pub Vec<i64>);

impl IntegralClass {
    pub fn new(coords: Vec<i64>) -> Self {
        IntegralClass(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &[i64]) -> i64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, k: i64) -> IntegralClass {
        IntegralClass(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &IntegralClass) -> IntegralClass {
        IntegralClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Gcd of the coordinates (zero for the zero class).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0, |acc, &c| gcd_i64(acc, c))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroClass);
        }
        Ok(self.content() == 1)
    }

    pub fn primitive_part(&self) -> Result<IntegralClass> {
        let c = self.content();
        if c == 0 {
            return Err(Error::ZeroClass);
        }
        Ok(IntegralClass(self.0.iter().map(|x| x / c).collect()))
    }

    pub(crate) fn check_dim(&self, b1: usize) -> Result<()> {
        if self.dim() != b1 {
            return Err(Error::DimensionMismatch {
                expected: b1,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for IntegralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for IntegralClass {
    type Err = Error;

    /// Accepts `1,0`, `(1,0)` or `1 0`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad class coordinate {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::InvalidArgument(format!("empty class {s:?}")));
        }
        Ok(IntegralClass(coords))
    }
}

/// Polyhedral norm given by the integral vertex set of its dual unit ball.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormData {
    b1: usize,
    dual_vertices: Vec<Vec<i64>>,
}

impl NormData {
    /// Validates symmetry and nondegeneracy of the dual vertex set.
    pub fn new(b1: usize, dual_vertices: Vec<Vec<i64>>) -> Result<Self> {
        if b1 == 0 {
            return Err(Error::validation("b1", "first Betti number must be positive"));
        }
        if dual_vertices.is_empty() {
            return Err(Error::validation("dual_vertices", "dual vertex set is empty"));
        }
        for (i, v) in dual_vertices.iter().enumerate() {
            if v.len() != b1 {
                return Err(Error::validation(
                    format!("dual_vertices[{i}]"),
                    format!("dimension mismatch: expected length {b1}, found {}", v.len()),
                ));
            }
        }
        for (i, v) in dual_vertices.iter().enumerate() {
            if dual_vertices[..i].contains(v) {
                return Err(Error::validation(
                    format!("dual_vertices[{i}]"),
                    "dual vertices must be distinct",
                ));
            }
            let neg: Vec<i64> = v.iter().map(|c| -c).collect();
            if !dual_vertices.contains(&neg) {
                return Err(Error::validation(
                    format!("dual_vertices[{i}]"),
                    "dual vertex symmetry violated: negation missing",
                ));
            }
        }
        if integer_rank(&dual_vertices) < b1 {
            return Err(Error::validation(
                "dual_vertices",
                "norm nondegeneracy violated: dual vertices do not span",
            ));
        }
        Ok(NormData { b1, dual_vertices })
    }

    pub fn b1(&self) -> usize {
        self.b1
    }

    pub fn dual_vertices(&self) -> &[Vec<i64>] {
        &self.dual_vertices
    }

    /// `max_v <eta, v>`.
    pub fn norm(&self, eta: &IntegralClass) -> Result<i64> {
        eta.check_dim(self.b1)?;
        Ok(self.norm_unchecked(eta.coords()))
    }

    pub(crate) fn norm_unchecked(&self, eta: &[i64]) -> i64 {
        self.dual_vertices
            .iter()
            .map(|v| v.iter().zip(eta).map(|(a, b)| a * b).sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    /// Checks that integral classes in a small box all have even norm.
    ///
    /// Even values on every integral class is a closed-manifold property;
    /// it is implied by all dual vertices being even, which is what the
    /// sample check effectively probes.
    pub fn check_even_on_samples(&self) -> Result<()> {
        let radius = if self.b1 <= 3 { 2 } else { 1 };
        let mut failure = None;
        for_each_in_box(self.b1, radius, |eta| {
            if failure.is_none() && self.norm_unchecked(eta) % 2 != 0 {
                failure = Some(IntegralClass(eta.to_vec()));
            }
        });
        match failure {
            Some(eta) => Err(Error::validation(
                "dual_vertices",
                format!("norm even-integrality violated at {eta}"),
            )),
            None => Ok(()),
        }
    }
}

/// An open top-dimensional face of the norm ball, named by its functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberedFace {
    psi: Vec<i64>,
}

impl FiberedFace {
    pub fn new(nd: &NormData, psi: Vec<i64>) -> Result<Self> {
        if psi.len() != nd.b1() {
            return Err(Error::validation(
                "psi",
                format!(
                    "dimension mismatch: expected length {}, found {}",
                    nd.b1(),
                    psi.len()
                ),
            ));
        }
        if psi.iter().any(|c| c % 2 != 0) {
            return Err(Error::validation("psi", "face even-integrality violated"));
        }
        if !nd.dual_vertices().contains(&psi) {
            return Err(Error::validation("psi", "face functional is not a dual vertex"));
        }
        let face = FiberedFace { psi };
        if face.find_cone_witness(nd).is_none() {
            return Err(Error::validation(
                "psi",
                "face functional does not realize the norm on an open cone",
            ));
        }
        Ok(face)
    }

    pub fn psi(&self) -> &[i64] {
        &self.psi
    }

    pub fn eval(&self, eta: &IntegralClass) -> i64 {
        eta.dot(&self.psi)
    }

    /// A small integral class in the open cone, if one exists in a bounded box.
    pub fn find_cone_witness(&self, nd: &NormData) -> Option<IntegralClass> {
        let psi_class = IntegralClass(self.psi.clone());
        if self.strictly_maximal(nd, psi_class.coords()) {
            return Some(psi_class);
        }
        let max_radius = match nd.b1() {
            1..=2 => 12,
            3 => 6,
            4 => 4,
            5 => 3,
            _ => 2,
        };
        for radius in 1..=max_radius {
            let mut found = None;
            for_each_in_box(nd.b1(), radius, |eta| {
                if found.is_none() && self.strictly_maximal(nd, eta) {
                    found = Some(IntegralClass(eta.to_vec()));
                }
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn strictly_maximal(&self, nd: &NormData, eta: &[i64]) -> bool {
        let top: i64 = self.psi.iter().zip(eta).map(|(a, b)| a * b).sum();
        top > 0
            && nd
                .dual_vertices()
                .iter()
                .filter(|v| v.as_slice() != self.psi.as_slice())
                .all(|v| v.iter().zip(eta).map(|(a, b)| a * b).sum::<i64>() < top)
    }
}

/// True iff `eta` lies in the open cone over `face`: `psi` is the unique
/// maximizing dual vertex.
pub fn in_open_cone(nd: &NormData, face: &FiberedFace, eta: &IntegralClass) -> Result<bool> {
    eta.check_dim(nd.b1())?;
    if eta.is_zero() {
        return Err(Error::ZeroClass);
    }
    Ok(face.strictly_maximal(nd, eta.coords()))
}

/// Genus of the closed connected fiber dual to `eta`: `(norm + 2) / 2`.
pub fn genus_of_closed_fiber(nd: &NormData, face: &FiberedFace, eta: &IntegralClass) -> Result<i64> {
    let (norm, genus) = checked_fiber_norm(nd, face, eta)?;
    debug_assert_eq!(norm, 2 * genus - 2);
    Ok(genus)
}

fn checked_fiber_norm(nd: &NormData, face: &FiberedFace, eta: &IntegralClass) -> Result<(i64, i64)> {
    eta.check_dim(nd.b1())?;
    if !eta.is_primitive()? {
        return Err(Error::NotPrimitive(eta.to_string()));
    }
    if !in_open_cone(nd, face, eta)? {
        return Err(Error::OutsideOpenCone(eta.to_string()));
    }
    let norm = nd.norm_unchecked(eta.coords());
    if norm % 2 != 0 {
        return Err(Error::OddNorm {
            class: eta.to_string(),
            norm,
        });
    }
    Ok((norm, (norm + 2) / 2))
}

/// Genus and puncture count of a punctured fiber, using per-face boundary
/// functionals: `punctures = sum_i |<b_i, eta>|` and
/// `genus = (norm - punctures + 2) / 2`.
pub fn punctured_fiber_topology(
    nd: &NormData,
    face: &FiberedFace,
    boundary: &[Vec<i64>],
    eta: &IntegralClass,
) -> Result<(i64, i64)> {
    let (norm, _) = checked_fiber_norm(nd, face, eta)?;
    let punctures: i64 = boundary.iter().map(|b| eta.dot(b).abs()).sum();
    let twice = norm - punctures + 2;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InvariantViolated(format!(
            "fiber {eta} has norm {norm} and {punctures} punctures; no surface has that Euler characteristic"
        )));
    }
    Ok((twice / 2, punctures))
}

/// Calls `f` on every integer vector in `[-radius, radius]^dim`.
pub(crate) fn for_each_in_box(dim: usize, radius: i64, mut f: impl FnMut(&[i64])) {
    let mut v = vec![-radius; dim];
    loop {
        f(&v);
        let mut i = dim;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if v[i] < radius {
                v[i] += 1;
                break;
            }
            v[i] = -radius;
        }
    }
}

/// Rank of an integer matrix (rows), by fraction-free elimination.
pub(crate) fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let a = m[rank][col];
                let b = m[r][col];
                let g = num_integer::gcd(a, b);
                let pivot_row = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = *x * (a / g) - p * (b / g);
                }
                let content = m[r].iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x));
                if content > 1 {
                    m[r].iter_mut().for_each(|x| *x /= content);
                }
            }
        }
        rank += 1;
    }
    rank
}
