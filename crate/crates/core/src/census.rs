//! Per-genus census of fibers with small normalized dilatation.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::ops::RangeInclusive;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::conegeom::{
    genus_of_closed_fiber, in_open_cone, integer_rank, punctured_fiber_topology, IntegralClass, NormData,
};
use crate::dilatation::{lambda, RealInterval, RootInterval};
use crate::error::{Error, Result};
use crate::lattice::{count_ball_points, enumerate_cube};
use crate::manifold::{Face, Manifold};

/// One fiber: its class, topology and certified dilatation.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberRecord {
    pub class: IntegralClass,
    pub norm: i64,
    pub genus: i64,
    pub punctures: i64,
    pub lambda: RootInterval,
    pub log_lambda: RealInterval,
    /// `genus · log λ`.
    pub normalized: RealInterval,
}

impl FiberRecord {
    /// `norm · log λ`, constant along rays.
    pub fn norm_log_lambda(&self) -> RealInterval {
        self.log_lambda.scale(self.norm)
    }
}

/// Genus, punctures and dilatation of the fiber dual to `eta` in `face`.
pub fn fiber_record(
    m: &Manifold,
    face: &Face,
    eta: &IntegralClass,
    tol: &BigRational,
) -> Result<FiberRecord> {
    let nd = &m.norm;
    let (genus, punctures) = if m.is_closed() {
        (genus_of_closed_fiber(nd, &face.face, eta)?, 0)
    } else {
        let boundary = face
            .boundary_functionals
            .as_deref()
            .ok_or_else(cusped_without_functionals)?;
        punctured_fiber_topology(nd, &face.face, boundary, eta)?
    };
    let lam = lambda(&face.theta, eta, tol)?;
    let log_lambda = lam.ln();
    Ok(FiberRecord {
        class: eta.clone(),
        norm: nd.norm(eta)?,
        genus,
        punctures,
        normalized: log_lambda.scale(genus),
        log_lambda,
        lambda: lam,
    })
}

fn cusped_without_functionals() -> Error {
    Error::InvalidArgument(
        "cusped census needs boundary functionals on every face (genus is not determined by the norm alone)"
            .into(),
    )
}

/// Where a record's normalized dilatation sits relative to the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Member,
    Undecided,
    Excluded,
}

pub fn membership(record: &FiberRecord, threshold: f64) -> Membership {
    if record.normalized.hi <= threshold {
        Membership::Member
    } else if record.normalized.lo > threshold {
        Membership::Excluded
    } else {
        Membership::Undecided
    }
}

type Matrix = Vec<Vec<i64>>;

/// Integer matrices permuting the dual vertices. Acting on classes by the
/// transpose, they are isometries of the norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryGroup {
    elements: Vec<Matrix>,
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b[0].len();
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

fn determinant(a: &Matrix) -> i128 {
    // Bareiss elimination; exact for integer input.
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn adjugate(a: &Matrix) -> Matrix {
    let n = a.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let cofactor = |i: usize, j: usize| -> i64 {
        let minor: Matrix = (0..n)
            .filter(|&r| r != i)
            .map(|r| (0..n).filter(|&c| c != j).map(|c| a[r][c]).collect())
            .collect();
        let d = determinant(&minor) as i64;
        if (i + j).is_multiple_of(2) {
            d
        } else {
            -d
        }
    };
    (0..n).map(|i| (0..n).map(|j| cofactor(j, i)).collect()).collect()
}

impl SymmetryGroup {
    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &Matrix) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    /// Image of a class under the transpose of `a`.
    pub fn act(a: &Matrix, eta: &IntegralClass) -> IntegralClass {
        let n = a.len();
        IntegralClass::new(
            (0..n)
                .map(|j| (0..n).map(|i| a[i][j] * eta.coords()[i]).sum())
                .collect(),
        )
    }

    /// Lexicographically least point of the orbit.
    pub fn canonical(&self, eta: &IntegralClass) -> IntegralClass {
        self.elements
            .iter()
            .map(|a| Self::act(a, eta))
            .min()
            .expect("group contains the identity")
    }

    /// Checks closure under products and inverses.
    pub fn is_closed(&self) -> bool {
        let n = self.elements[0].len();
        self.elements.iter().all(|a| {
            self.elements.iter().all(|b| self.contains(&mat_mul(a, b)))
                && self.elements.iter().any(|b| mat_mul(a, b) == identity(n))
        })
    }
}

/// All unimodular integer matrices permuting the dual vertices.
///
/// A linear map is fixed by the images of a basis of dual vertices, and
/// those images must themselves be dual vertices, so the search runs over
/// tuples of vertices.
pub fn symmetry_group(nd: &NormData) -> SymmetryGroup {
    let b1 = nd.b1();
    let verts = nd.dual_vertices();
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for v in verts {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if integer_rank(&trial) == trial.len() {
            basis = trial;
        }
    }
    // Columns of `b` are basis vectors.
    let b: Matrix = (0..b1).map(|i| basis.iter().map(|v| v[i]).collect()).collect();
    let det = determinant(&b) as i64;
    let adj = adjugate(&b);
    let vertex_set: HashSet<&Vec<i64>> = verts.iter().collect();

    let mut found = BTreeSet::new();
    let mut choice = vec![0usize; b1];
    loop {
        let w: Matrix = (0..b1)
            .map(|i| choice.iter().map(|&k| verts[k][i]).collect())
            .collect();
        let numer = mat_mul(&w, &adj);
        if numer.iter().flatten().all(|x| x % det == 0) {
            let a: Matrix = numer
                .iter()
                .map(|r| r.iter().map(|x| x / det).collect())
                .collect();
            if determinant(&a).abs() == 1 && verts.iter().all(|v| vertex_set.contains(&mat_vec(&a, v))) {
                found.insert(a);
            }
        }
        let mut i = 0;
        loop {
            if i == b1 {
                return SymmetryGroup {
                    elements: found.into_iter().collect(),
                };
            }
            choice[i] += 1;
            if choice[i] < verts.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Number of orbits of the given classes.
pub fn orbit_count<'a>(classes: impl IntoIterator<Item = &'a IntegralClass>, group: &SymmetryGroup) -> usize {
    classes
        .into_iter()
        .map(|c| group.canonical(c))
        .collect::<HashSet<_>>()
        .len()
}

/// Census results for one genus.
#[derive(Debug, Clone)]
pub struct GenusRow {
    pub genus: i64,
    /// Certain members, in class order.
    pub members: Vec<FiberRecord>,
    /// Records whose interval straddles the threshold.
    pub borderline: Vec<FiberRecord>,
    /// Classes whose dilatation could not be computed.
    pub failures: Vec<(IntegralClass, Error)>,
    pub count_orbits: usize,
    pub upper_bound: u128,
}

impl GenusRow {
    pub fn count_raw(&self) -> usize {
        self.members.len()
    }

    pub fn undecided(&self) -> usize {
        self.borderline.len()
    }
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub manifold: String,
    pub threshold: f64,
    pub group_order: usize,
    pub rows: Vec<GenusRow>,
}

/// Primitive cube classes, per face, whose fiber has genus `g`.
fn candidates(m: &Manifold, face: &Face, g: i64) -> Result<BTreeSet<IntegralClass>> {
    let mut out = BTreeSet::new();
    if m.is_closed() {
        for cube in &face.cubes {
            out.extend(
                enumerate_cube(cube, g)
                    .into_iter()
                    .filter(|c| c.is_primitive() == Ok(true)),
            );
        }
        return Ok(out);
    }
    let boundary = face
        .boundary_functionals
        .as_deref()
        .ok_or_else(cusped_without_functionals)?;
    // norm = 2·level; genus g with norm <= 6g - 6 needs g - 1 <= level <= 3g - 3.
    for level in (g - 1).max(1)..=(3 * g - 3) {
        for cube in &face.cubes {
            for c in enumerate_cube(cube, level + 1) {
                if c.is_primitive() != Ok(true) || !in_open_cone(&m.norm, &face.face, &c)? {
                    continue;
                }
                if let Ok((genus, _)) = punctured_fiber_topology(&m.norm, &face.face, boundary, &c) {
                    if genus == g {
                        out.insert(c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Fibers in the manifold's cubes with `genus · log λ <= threshold`, for
/// each genus in `genera`.
pub fn run_census(
    m: &Manifold,
    threshold: f64,
    genera: RangeInclusive<i64>,
    tol: &BigRational,
) -> Result<CensusReport> {
    if !(threshold.is_finite() && threshold > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "threshold L must be positive (got {threshold})"
        )));
    }
    if !m.is_closed() && m.faces.iter().any(|f| f.boundary_functionals.is_none()) {
        return Err(cusped_without_functionals());
    }
    let group = symmetry_group(&m.norm);
    let mut rows = Vec::new();
    for g in genera {
        let mut work: BTreeMap<IntegralClass, &Face> = BTreeMap::new();
        for face in &m.faces {
            for c in candidates(m, face, g)? {
                work.entry(c).or_insert(face);
            }
        }
        let work: Vec<(IntegralClass, &Face)> = work.into_iter().collect();
        let results: Vec<(IntegralClass, Result<FiberRecord>)> = work
            .par_iter()
            .map(|(c, face)| (c.clone(), fiber_record(m, face, c, tol)))
            .collect();
        let mut members = Vec::new();
        let mut borderline = Vec::new();
        let mut failures = Vec::new();
        for (class, result) in results {
            match result {
                Ok(rec) => match membership(&rec, threshold) {
                    Membership::Member => members.push(rec),
                    Membership::Undecided => borderline.push(rec),
                    Membership::Excluded => {}
                },
                Err(e) => failures.push((class, e)),
            }
        }
        let count_orbits = orbit_count(members.iter().map(|r| &r.class), &group);
        let upper_bound = upper_bound_report(m, g);
        if members.len() as u128 > upper_bound {
            return Err(Error::InvariantViolated(format!(
                "genus {g}: census count {} exceeds the ball bound {upper_bound}",
                members.len()
            )));
        }
        rows.push(GenusRow {
            genus: g,
            members,
            borderline,
            failures,
            count_orbits,
            upper_bound,
        });
    }
    Ok(CensusReport {
        manifold: m.name().to_string(),
        threshold,
        group_order: group.order(),
        rows,
    })
}

/// Number of integral classes of norm at most `6g - 6`: every genus-`g`
/// fiber of the manifold has norm in that ball.
pub fn upper_bound_report(m: &Manifold, g: i64) -> u128 {
    count_ball_points(&m.norm, (6 * g - 6).max(0))
}

/// One member `Σ_g = (g - 1)·S + Σ` of a Penner-type family.
#[derive(Debug, Clone)]
pub struct PennerEntry {
    pub g: i64,
    pub class: IntegralClass,
    /// The record, or why `Σ_g` is not a fiber of the face.
    pub outcome: std::result::Result<FiberRecord, String>,
}

#[derive(Debug, Clone)]
pub struct PennerReport {
    /// `norm(S) · log λ(S)`.
    pub limit: RealInterval,
    /// First `g` at which `Σ_g` is a fiber.
    pub start: Option<i64>,
    pub entries: Vec<PennerEntry>,
}

impl PennerReport {
    /// Worst-case distance from `norm · log λ` to the limit.
    pub fn distance(&self, rec: &FiberRecord) -> f64 {
        let v = rec.norm_log_lambda();
        (v.hi - self.limit.lo).abs().max((self.limit.hi - v.lo).abs())
    }

    /// Least `g` after which every computed entry is within `eps` of the
    /// limit, if the last entry is.
    pub fn settled_from(&self, eps: f64) -> Option<i64> {
        let mut settled = None;
        for e in self.entries.iter().rev() {
            match &e.outcome {
                Ok(rec) if self.distance(rec) < eps => settled = Some(e.g),
                _ => break,
            }
        }
        settled
    }
}

/// The family `Σ_g = (g - 1)·S + Σ` for `g = 2..=g_max` in face `face`.
///
/// `S` must be a fiber of the face and `Σ` must lie in the kernel of its
/// functional, so `norm(Σ_g) = (g - 1)·norm(S)` wherever `Σ_g` is in the cone.
pub fn penner_family(
    m: &Manifold,
    face: &Face,
    s: &IntegralClass,
    sigma: &IntegralClass,
    g_max: i64,
    tol: &BigRational,
) -> Result<PennerReport> {
    let nd = &m.norm;
    if !in_open_cone(nd, &face.face, s)? {
        return Err(Error::OutsideOpenCone(s.to_string()));
    }
    sigma.check_dim(nd.b1())?;
    if face.face.eval(sigma) != 0 {
        return Err(Error::InvalidArgument(format!(
            "{sigma} is not in the kernel of the face functional"
        )));
    }
    let norm_s = nd.norm(s)?;
    let base = lambda(&face.theta, s, tol)?;
    let limit = base.ln().scale(norm_s);
    let gs: Vec<i64> = (2..=g_max).collect();
    let entries: Vec<PennerEntry> = gs
        .par_iter()
        .map(|&g| -> Result<PennerEntry> {
            let class = s.scaled(g - 1).add(sigma);
            let outcome = if class.is_zero() || !class.is_primitive()? {
                Err("not primitive".to_string())
            } else if !in_open_cone(nd, &face.face, &class)? {
                Err("outside the open cone".to_string())
            } else {
                let norm = nd.norm(&class)?;
                if norm != (g - 1) * norm_s {
                    return Err(Error::InvariantViolated(format!(
                        "norm of {class} is {norm}, expected {}",
                        (g - 1) * norm_s
                    )));
                }
                fiber_record(m, face, &class, tol).map_err(|e| e.to_string())
            };
            Ok(PennerEntry { g, class, outcome })
        })
        .collect::<Result<_>>()?;
    let start = entries.iter().find(|e| e.outcome.is_ok()).map(|e| e.g);
    Ok(PennerReport {
        limit,
        start,
        entries,
    })
}
