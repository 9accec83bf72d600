//! Integral and primitive points in scaled cubes and in norm balls.
//!
//! Cubes live in a face whose functional is `±2·e_j`: the face lies in the
//! hyperplane `x_j = ±1/2`, and scaling a cube by `2g - 2` puts its integral
//! points on the slice `x_j = ±(g - 1)`, i.e. at norm `2g - 2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::conegeom::{in_open_cone, FiberedFace, IntegralClass, NormData};
use crate::error::{Error, Result};
use crate::rational::{ceil_to_i64, floor_to_i64};

/// Closed axis-aligned cube inside a fibered face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeRegion {
    face: FiberedFace,
    slice_axis: usize,
    slice_sign: i64,
    center: Vec<BigRational>,
    radius: BigRational,
    axes: Vec<usize>,
}

impl CubeRegion {
    pub fn new(
        nd: &NormData,
        face: &FiberedFace,
        center: Vec<BigRational>,
        radius: BigRational,
    ) -> Result<Self> {
        let b1 = nd.b1();
        let psi = face.psi();
        let nonzero: Vec<usize> = (0..b1).filter(|&i| psi[i] != 0).collect();
        let (slice_axis, slice_sign) = match nonzero.as_slice() {
            [j] if psi[*j].abs() == 2 => (*j, psi[*j].signum()),
            _ => {
                return Err(Error::validation(
                    "cubes",
                    "cube regions need a face functional of the form ±2·e_j (normalized basis)",
                ))
            }
        };
        if center.len() != b1 {
            return Err(Error::validation(
                "center",
                format!("dimension mismatch: expected length {b1}, found {}", center.len()),
            ));
        }
        let half = BigRational::new(BigInt::from(slice_sign), BigInt::from(2));
        if center[slice_axis] != half {
            return Err(Error::validation(
                "center",
                "cube center must lie on the face hyperplane psi = 1",
            ));
        }
        if !radius.is_positive() {
            return Err(Error::validation("radius", "cube radius must be positive"));
        }
        let axes: Vec<usize> = (0..b1).filter(|&i| i != slice_axis).collect();
        let cube = CubeRegion {
            face: face.clone(),
            slice_axis,
            slice_sign,
            center,
            radius,
            axes,
        };
        cube.check_inside_face(nd)?;
        Ok(cube)
    }

    fn check_inside_face(&self, nd: &NormData) -> Result<()> {
        let denominators = self
            .center
            .iter()
            .chain(std::iter::once(&self.radius))
            .fold(BigInt::one(), |acc, q| num_integer::lcm(acc, q.denom().clone()));
        let scale = BigRational::from_integer(denominators);
        let d = self.axes.len();
        for mask in 0u64..(1u64 << d) {
            let mut vertex = self.center.clone();
            for (bit, &axis) in self.axes.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    vertex[axis] += &self.radius;
                } else {
                    vertex[axis] -= &self.radius;
                }
            }
            let coords = vertex
                .iter()
                .map(|q| (q * &scale).to_integer().to_i64())
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| Error::validation("cubes", "cube coordinates out of range"))?;
            let eta = IntegralClass::new(coords);
            if !in_open_cone(nd, &self.face, &eta)? {
                return Err(Error::validation(
                    "cubes",
                    format!("cube-inside-face violated: vertex {eta} (scaled) leaves the open cone"),
                ));
            }
        }
        Ok(())
    }

    pub fn face(&self) -> &FiberedFace {
        &self.face
    }

    pub fn center(&self) -> &[BigRational] {
        &self.center
    }

    pub fn radius(&self) -> &BigRational {
        &self.radius
    }

    /// Number of free axes `d`.
    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    /// Integer ranges of the free coordinates of `(2g - 2)·K`.
    pub fn ranges_at(&self, g: i64) -> Vec<(i64, i64)> {
        let scale = BigRational::from_integer(BigInt::from(2 * g - 2));
        self.axes
            .iter()
            .map(|&axis| {
                let lo = (&self.center[axis] - &self.radius) * &scale;
                let hi = (&self.center[axis] + &self.radius) * &scale;
                (
                    ceil_to_i64(&lo).expect("cube range fits in i64"),
                    floor_to_i64(&hi).expect("cube range fits in i64"),
                )
            })
            .collect()
    }

    fn slice_value(&self, g: i64) -> i64 {
        self.slice_sign * (g - 1)
    }

    fn assemble(&self, g: i64, free: &[i64]) -> IntegralClass {
        let mut coords = vec![0; self.axes.len() + 1];
        coords[self.slice_axis] = self.slice_value(g);
        for (&axis, &n) in self.axes.iter().zip(free) {
            coords[axis] = n;
        }
        IntegralClass::new(coords)
    }
}

/// One row of the primitive-count table.
#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub genus: i64,
    pub total: u128,
    pub primitive_exact: u128,
    pub primitive_ie: u128,
    pub lower_bound: Option<f64>,
}

/// All integral points of `(2g - 2)·K`, in lexicographic order.
pub fn enumerate_cube(cube: &CubeRegion, g: i64) -> Vec<IntegralClass> {
    if g < 2 {
        return Vec::new();
    }
    let ranges = cube.ranges_at(g);
    if ranges.iter().any(|(lo, hi)| lo > hi) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut free: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    'outer: loop {
        out.push(cube.assemble(g, &free));
        for i in (0..free.len()).rev() {
            if free[i] < ranges[i].1 {
                free[i] += 1;
                continue 'outer;
            }
            free[i] = ranges[i].0;
        }
        break;
    }
    out
}

fn range_len(lo: i64, hi: i64) -> u128 {
    if hi < lo {
        0
    } else {
        (hi - lo + 1) as u128
    }
}

fn total_points(ranges: &[(i64, i64)]) -> u128 {
    ranges.iter().map(|&(lo, hi)| range_len(lo, hi)).product()
}

/// All positive divisors of `n`.
fn divisors(n: i64) -> Vec<i64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Count of primitive points of `(2g - 2)·K` by direct gcd checks.
///
/// Walks the free coordinates in order, tracking the gcd of `g - 1` with the
/// coordinates fixed so far. That running gcd is always a divisor of
/// `g - 1`, so the count of completions depends only on (level, gcd) and is
/// tabulated from the last coordinate backwards. The leading coordinate is
/// split across worker threads.
pub fn primitive_count_exact(cube: &CubeRegion, g: i64) -> u128 {
    if g < 2 {
        return 0;
    }
    let ranges = cube.ranges_at(g);
    let lead = g - 1;
    let Some((&(lo, hi), rest)) = ranges.split_first() else {
        return u128::from(lead == 1);
    };
    let divs = divisors(lead);
    let index = |d: i64| divs.binary_search(&d).expect("gcd divides g - 1");
    // completions[i]: ways to fill `rest[level..]` given running gcd divs[i].
    let mut completions: Vec<u128> = divs.iter().map(|&d| u128::from(d == 1)).collect();
    for &(a, b) in rest.iter().rev() {
        completions = divs
            .iter()
            .map(|&d| (a..=b).map(|n| completions[index(num_integer::gcd(d, n))]).sum())
            .collect();
    }
    (lo..=hi)
        .into_par_iter()
        .map(|n| completions[index(num_integer::gcd(lead, n))])
        .sum()
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Count of primitive points by Möbius inclusion–exclusion over the
/// square-free divisors of `g - 1`.
pub fn primitive_count_ie(cube: &CubeRegion, g: i64) -> u128 {
    if g < 2 {
        return 0;
    }
    let ranges = cube.ranges_at(g);
    let primes = prime_factors((g - 1) as u64);
    let mut sum: i128 = 0;
    for mask in 0u32..(1u32 << primes.len()) {
        let k: i64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p as i64)
            .product();
        let multiples: u128 = ranges
            .iter()
            .map(|&(lo, hi)| {
                range_len(
                    lo.div_euclid(k) + i64::from(lo.rem_euclid(k) != 0),
                    hi.div_euclid(k),
                )
            })
            .product();
        let term = multiples as i128;
        if mask.count_ones() % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    u128::try_from(sum).expect("inclusion-exclusion count is nonnegative")
}

/// `2 - zeta(d)` to about 1e-13, by summing the head of the series and
/// closing the tail with Euler–Maclaurin terms up to the `B_4` correction.
pub fn series_constant(d: u32) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "series constant needs d >= 2 (got {d}); the zeta series diverges"
        )));
    }
    const N: u32 = 64;
    let df = d as f64;
    let n = N as f64;
    let head: f64 = (1..N).rev().map(|k| (k as f64).powi(-(d as i32))).sum();
    let tail = n.powf(1.0 - df) / (df - 1.0) + 0.5 * n.powf(-df) + df * n.powf(-df - 1.0) / 12.0
        - df * (df + 1.0) * (df + 2.0) * n.powf(-df - 3.0) / 720.0;
    Ok(2.0 - (head + tail))
}

/// `C·((4g - 4)·r)^d` with `C = 2 - zeta(d)`.
pub fn lower_bound_poly(d: u32, r: &BigRational, g: i64) -> Result<f64> {
    let c = series_constant(d)?;
    let side = (4 * g - 4) as f64 * r.to_f64().unwrap_or(f64::NAN);
    Ok(c * side.powi(d as i32))
}

/// Exact, enumeration-based and inclusion–exclusion counts for one genus.
pub fn count_report(cube: &CubeRegion, g: i64) -> CountReport {
    let d = cube.dim() as u32;
    CountReport {
        genus: g,
        total: if g < 2 {
            0
        } else {
            total_points(&cube.ranges_at(g))
        },
        primitive_exact: primitive_count_exact(cube, g),
        primitive_ie: primitive_count_ie(cube, g),
        lower_bound: lower_bound_poly(d, cube.radius(), g).ok(),
    }
}

/// Per-coordinate bound `|x_j| <= B_j` for every class of norm at most `r`.
fn ball_box(nd: &NormData, r: i64) -> Vec<i64> {
    let b1 = nd.b1();
    // Greedy basis of dual vertices.
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for v in nd.dual_vertices() {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if crate::conegeom::integer_rank(&trial) == trial.len() {
            basis = trial;
        }
        if basis.len() == b1 {
            break;
        }
    }
    // Invert the basis matrix exactly; |<x, v_i>| <= r for each basis row.
    let mut m: Vec<Vec<BigRational>> = basis
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut ext: Vec<BigRational> =
                row.iter().map(|&c| BigRational::from_integer(c.into())).collect();
            ext.extend((0..b1).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            ext
        })
        .collect();
    for col in 0..b1 {
        let pivot = (col..b1)
            .find(|&r| !m[r][col].is_zero())
            .expect("basis is invertible");
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for c in m[col].iter_mut() {
            *c /= &p;
        }
        for row in 0..b1 {
            if row != col && !m[row][col].is_zero() {
                let f = m[row][col].clone();
                let pivot_row = m[col].clone();
                for (c, pc) in m[row].iter_mut().zip(&pivot_row) {
                    *c -= &f * pc;
                }
            }
        }
    }
    // Row i of V x = y means x = V^{-1} y; V^{-1} sits in the right half.
    (0..b1)
        .map(|j| {
            let weight: BigRational = (0..b1).map(|i| m[j][b1 + i].abs()).sum();
            floor_to_i64(&(weight * BigRational::from_integer(r.into()))).expect("ball box fits in i64")
        })
        .collect()
}

/// Number of integral classes with `norm <= r`.
pub fn count_ball_points(nd: &NormData, r: i64) -> u128 {
    if r < 0 {
        return 0;
    }
    let bounds = ball_box(nd, r);
    let b1 = nd.b1();
    let last = b1 - 1;
    let verts = nd.dual_vertices();

    let count_last = |prefix: &[i64]| -> u128 {
        let mut lo = -bounds[last];
        let mut hi = bounds[last];
        for v in verts {
            let s: i64 = prefix.iter().zip(v).map(|(a, b)| a * b).sum();
            let slack = r - s;
            let c = v[last];
            if c > 0 {
                hi = hi.min(slack.div_euclid(c));
            } else if c < 0 {
                // x * c <= slack  <=>  x >= slack / c (rounded up)
                lo = lo.max(-(slack.div_euclid(-c)));
            } else if slack < 0 {
                return 0;
            }
        }
        range_len(lo, hi)
    };

    if b1 == 1 {
        return count_last(&[]);
    }
    (-bounds[0]..=bounds[0])
        .into_par_iter()
        .map(|x0| {
            let mut prefix = vec![0i64; last];
            prefix[0] = x0;
            let mut total = 0u128;
            walk_prefix(&mut prefix, 1, &bounds, &count_last, &mut total);
            total
        })
        .sum()
}

fn walk_prefix(
    prefix: &mut Vec<i64>,
    level: usize,
    bounds: &[i64],
    leaf: &impl Fn(&[i64]) -> u128,
    total: &mut u128,
) {
    if level == prefix.len() {
        *total += leaf(prefix);
        return;
    }
    for x in -bounds[level]..=bounds[level] {
        prefix[level] = x;
        walk_prefix(prefix, level + 1, bounds, leaf, total);
    }
}

/// Least-squares polynomial in one variable, fitted in a rescaled variable.
#[derive(Debug, Clone)]
pub struct PolyFit {
    scale: f64,
    coefficients: Vec<f64>,
}

impl PolyFit {
    pub fn least_squares(xs: &[f64], ys: &[f64], degree: usize) -> Result<PolyFit> {
        if xs.len() != ys.len() || xs.len() <= degree {
            return Err(Error::InvalidArgument("not enough samples for the fit".into()));
        }
        let scale = xs.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
        let a = nalgebra::DMatrix::from_fn(xs.len(), degree + 1, |i, j| (xs[i] / scale).powi(j as i32));
        let b = nalgebra::DVector::from_column_slice(ys);
        let svd = a.svd(true, true);
        let sol = svd
            .solve(&b, 1e-14)
            .map_err(|e| Error::InvalidArgument(format!("least squares failed: {e}")))?;
        Ok(PolyFit {
            scale,
            coefficients: sol.iter().copied().collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = x / self.scale;
        self.coefficients.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    /// Leading coefficient in the original variable.
    pub fn leading(&self) -> f64 {
        self.coefficients[self.degree()] / self.scale.powi(self.degree() as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn square() -> NormData {
        NormData::new(2, vec![vec![2, 0], vec![-2, 0], vec![0, 2], vec![0, -2]]).unwrap()
    }

    fn cross(b1: usize) -> NormData {
        let mut verts = Vec::new();
        for i in 0..b1 {
            for s in [2, -2] {
                let mut v = vec![0; b1];
                v[i] = s;
                verts.push(v);
            }
        }
        NormData::new(b1, verts).unwrap()
    }

    fn square_cube() -> CubeRegion {
        let nd = square();
        let face = FiberedFace::new(&nd, vec![2, 0]).unwrap();
        CubeRegion::new(&nd, &face, vec![q(1, 2), q(0, 1)], q(1, 4)).unwrap()
    }

    /// Oracle: filter the literal enumeration by gcd.
    fn brute_primitive(cube: &CubeRegion, g: i64) -> u128 {
        enumerate_cube(cube, g)
            .iter()
            .filter(|c| c.is_primitive().unwrap())
            .count() as u128
    }

    #[test]
    fn enumeration_examples() {
        let k = square_cube();
        let pts = |g| -> Vec<Vec<i64>> { enumerate_cube(&k, g).into_iter().map(|c| c.0).collect() };
        assert_eq!(
            pts(5),
            vec![vec![4, -2], vec![4, -1], vec![4, 0], vec![4, 1], vec![4, 2]]
        );
        assert_eq!(pts(2), vec![vec![1, 0]]);
        assert_eq!(pts(3), vec![vec![2, -1], vec![2, 0], vec![2, 1]]);
        assert!(pts(1).is_empty());
    }

    #[test]
    fn primitive_count_examples() {
        let k = square_cube();
        assert_eq!(primitive_count_exact(&k, 5), 2);
        assert_eq!(primitive_count_exact(&k, 2), 1);
        assert_eq!(primitive_count_exact(&k, 3), 2);
        assert_eq!(primitive_count_ie(&k, 5), 2);
        assert_eq!(primitive_count_ie(&k, 2), 1);
        assert_eq!(primitive_count_ie(&k, 3), 2);
        // g - 1 = 6: |n| <= 3, primitive iff gcd(6, n) = 1 -> n = ±1
        assert_eq!(brute_primitive(&k, 7), 2);
        assert_eq!(primitive_count_ie(&k, 7), 2);
        assert_eq!(primitive_count_exact(&k, 7), 2);
    }

    #[test]
    fn exact_walk_agrees_with_enumeration_in_several_dimensions() {
        for b1 in 2..=4 {
            let nd = cross(b1);
            let face = FiberedFace::new(&nd, {
                let mut v = vec![0; b1];
                v[0] = 2;
                v
            })
            .unwrap();
            let mut center = vec![q(0, 1); b1];
            center[0] = q(1, 2);
            center[1] = q(1, 8);
            let cube = CubeRegion::new(&nd, &face, center, q(1, 4)).unwrap();
            for g in 2..=25 {
                let brute = brute_primitive(&cube, g);
                assert_eq!(primitive_count_exact(&cube, g), brute, "b1={b1} g={g}");
                assert_eq!(primitive_count_ie(&cube, g), brute, "b1={b1} g={g}");
            }
        }
    }

    #[test]
    fn cube_must_sit_inside_the_open_face() {
        let nd = square();
        let face = FiberedFace::new(&nd, vec![2, 0]).unwrap();
        // |x1| <= 1/2 touches the boundary ray (1/2, 1/2).
        assert!(CubeRegion::new(&nd, &face, vec![q(1, 2), q(0, 1)], q(1, 2)).is_err());
        assert!(CubeRegion::new(&nd, &face, vec![q(1, 2), q(1, 4)], q(1, 4)).is_err());
        assert!(CubeRegion::new(&nd, &face, vec![q(1, 3), q(0, 1)], q(1, 8)).is_err());
        assert!(CubeRegion::new(&nd, &face, vec![q(1, 2), q(0, 1)], q(0, 1)).is_err());
        let neg = FiberedFace::new(&nd, vec![0, -2]).unwrap();
        let cube = CubeRegion::new(&nd, &neg, vec![q(0, 1), q(-1, 2)], q(1, 4)).unwrap();
        let pts = enumerate_cube(&cube, 3);
        assert_eq!(
            pts.iter().map(|c| c.0.clone()).collect::<Vec<_>>(),
            vec![vec![-1, -2], vec![0, -2], vec![1, -2]]
        );
    }

    #[test]
    fn series_constant_matches_closed_forms_and_brute_force() {
        let pi = std::f64::consts::PI;
        assert!((series_constant(2).unwrap() - (2.0 - pi * pi / 6.0)).abs() < 1e-12);
        assert!((series_constant(4).unwrap() - (2.0 - pi.powi(4) / 90.0)).abs() < 1e-12);
        // Independent oracle: long partial sum bracketed by integral tails.
        for d in 2..=6u32 {
            let n = 2_000_000u64;
            let partial: f64 = (1..=n).rev().map(|k| (k as f64).powi(-(d as i32))).sum();
            let lo_tail = ((n + 1) as f64).powf(1.0 - d as f64) / (d as f64 - 1.0);
            let hi_tail = (n as f64).powf(1.0 - d as f64) / (d as f64 - 1.0);
            let c = series_constant(d).unwrap();
            assert!(
                2.0 - (partial + hi_tail) - 1e-12 <= c && c <= 2.0 - (partial + lo_tail) + 1e-12,
                "d={d}"
            );
        }
        assert!((series_constant(4).unwrap() - 0.917_676_766_288_861_8).abs() < 1e-12);
        assert!((series_constant(2).unwrap() - 0.355_065_933_151_773_6).abs() < 1e-12);
        assert!(series_constant(1).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound_poly(4, &q(0, 1), 10).unwrap(), 0.0);
        assert!(lower_bound_poly(1, &q(1, 4), 10).is_err());
        let v = lower_bound_poly(2, &q(1, 4), 5).unwrap();
        assert!((v - series_constant(2).unwrap() * 16.0).abs() < 1e-12);
    }

    #[test]
    fn ball_count_examples() {
        let nd = square();
        assert_eq!(count_ball_points(&nd, 2), 9);
        assert_eq!(count_ball_points(&nd, 0), 1);
        assert_eq!(count_ball_points(&nd, 4), 25);
        assert_eq!(count_ball_points(&nd, 6), 49);
        assert_eq!(count_ball_points(&nd, 5), 25);
    }

    #[test]
    fn ball_count_matches_brute_force_on_skewed_norms() {
        let hex = NormData::new(
            2,
            vec![
                vec![2, 0],
                vec![-2, 0],
                vec![0, 2],
                vec![0, -2],
                vec![2, -2],
                vec![-2, 2],
            ],
        )
        .unwrap();
        let skew = NormData::new(
            3,
            vec![
                vec![2, 0, 0],
                vec![-2, 0, 0],
                vec![2, 4, 0],
                vec![-2, -4, 0],
                vec![0, 2, 2],
                vec![0, -2, -2],
                vec![0, 0, 2],
                vec![0, 0, -2],
            ],
        )
        .unwrap();
        for nd in [hex, skew, cross(3)] {
            for r in [0, 1, 2, 5, 8] {
                let mut brute = 0u128;
                crate::conegeom::for_each_in_box(nd.b1(), 2 * r + 2, |x| {
                    if nd.norm_unchecked(x) <= r {
                        brute += 1;
                    }
                });
                assert_eq!(count_ball_points(&nd, r), brute, "r={r}");
            }
        }
    }

    #[test]
    fn ball_counts_scale_like_volume() {
        let nd = cross(3);
        let r = 200;
        let ratio = count_ball_points(&nd, 2 * r) as f64 / count_ball_points(&nd, r) as f64;
        assert!((ratio - 8.0).abs() < 0.1, "{ratio}");
    }

    #[test]
    fn fit_recovers_a_cubic() {
        let xs: Vec<f64> = (0..30).map(|i| i as f64 * 3.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x * x * x - x + 5.0).collect();
        let fit = PolyFit::least_squares(&xs, &ys, 3).unwrap();
        assert!((fit.leading() - 2.0).abs() < 1e-8);
        assert!((fit.eval(100.0) - 1_999_905.0).abs() < 1e-3);
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(prime_factors(97), vec![97]);
    }
}
