//! Rational polyhedral cones carried in dual form.
//!
//! A [`Cone`] stores both a generator description (extreme rays plus a
//! lineality basis) and a constraint description (a minimal system of
//! inequality and equation normals). Both sides are primitive integer
//! vectors in canonical order, so identical point sets constructed along
//! different routes print identically. Set equality is nevertheless always
//! decided by mutual containment, never by comparing presentations.

use num::{Signed, Zero};
use serde_json::{json, Value};

use crate::linalg::{self, Int, Rat};
use crate::{Error, Result};

mod dd;

use dd::dd_generators;

/// A rational polyhedral cone in `ℝⁿ`.
#[derive(Debug, Clone)]
pub struct Cone {
    ambient: usize,
    rays: Vec<Vec<Int>>,
    lineality: Vec<Vec<Int>>,
    ineqs: Vec<Vec<Int>>,
    eqs: Vec<Vec<Int>>,
}

/// Answer of [`Cone::dimension_info`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionInfo {
    pub dim: usize,
    pub lineality_dim: usize,
    pub strongly_convex: bool,
}

/// Exact intersection of a cone with a parametrized segment
/// `[p, q] = {(1−t)p + tq : t ∈ [0, 1]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentHit {
    Empty,
    Point { t: Rat },
    SubSegment { t_lo: Rat, t_hi: Rat },
    Full,
}

impl SegmentHit {
    /// A hit that is a nonempty proper subset of the segment.
    pub fn is_proper(&self) -> bool {
        matches!(self, SegmentHit::Point { .. } | SegmentHit::SubSegment { .. })
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

fn normalize_directed(vectors: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut out: Vec<Vec<Int>> = vectors
        .iter()
        .filter(|v| !linalg::is_zero_vec(v))
        .map(|v| linalg::primitive(v))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn normalize_undirected(vectors: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut out: Vec<Vec<Int>> = vectors
        .iter()
        .filter(|v| !linalg::is_zero_vec(v))
        .map(|v| linalg::primitive_signed(v))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn to_int_rows(vectors: &[Vec<Rat>], n: usize) -> Result<Vec<Vec<Int>>> {
    vectors
        .iter()
        .map(|v| {
            check_dim(n, v.len())?;
            Ok(linalg::primitive_from_rat(v))
        })
        .collect()
}

impl Cone {
    /// The cone generated by the given rays and lineality vectors. Empty
    /// lists give the zero cone `{0}`.
    pub fn from_generators(n: usize, rays: &[Vec<Rat>], lineality: &[Vec<Rat>]) -> Result<Cone> {
        Self::from_int_generators(n, &to_int_rows(rays, n)?, &to_int_rows(lineality, n)?)
    }

    /// The solution cone of `{x : a·x ≥ 0 (a ∈ ineqs), e·x = 0 (e ∈ eqs)}`.
    pub fn from_constraints(n: usize, ineqs: &[Vec<Rat>], eqs: &[Vec<Rat>]) -> Result<Cone> {
        Self::from_int_constraints(n, &to_int_rows(ineqs, n)?, &to_int_rows(eqs, n)?)
    }

    pub fn from_int_generators(n: usize, rays: &[Vec<Int>], lineality: &[Vec<Int>]) -> Result<Cone> {
        for v in rays.iter().chain(lineality) {
            check_dim(n, v.len())?;
        }
        let rays = normalize_directed(rays);
        let lineality = normalize_undirected(lineality);
        // The dual cone of the generated set, computed as a constraint
        // system: generators become the dual's constraints.
        let dual = dd_generators(n, &rays, &lineality);
        Self::assemble(n, &dual.rays, &dual.lineality)
    }

    pub fn from_int_constraints(n: usize, ineqs: &[Vec<Int>], eqs: &[Vec<Int>]) -> Result<Cone> {
        for v in ineqs.iter().chain(eqs) {
            check_dim(n, v.len())?;
        }
        let ineqs = normalize_directed(ineqs);
        let eqs = normalize_undirected(eqs);
        Self::assemble(n, &ineqs, &eqs)
    }

    /// The zero cone `{0}` in `ℝⁿ`.
    pub fn zero(n: usize) -> Cone {
        Self::from_int_generators(n, &[], &[]).expect("zero cone construction cannot fail")
    }

    /// The whole space `ℝⁿ`.
    pub fn full_space(n: usize) -> Cone {
        Self::from_int_constraints(n, &[], &[]).expect("full space construction cannot fail")
    }

    /// Canonical cone from an (already primitive, possibly redundant)
    /// constraint system: one double-description run recovers the
    /// generators, a second run on the dual recovers the minimal system.
    fn assemble(n: usize, ineqs: &[Vec<Int>], eqs: &[Vec<Int>]) -> Result<Cone> {
        let gens = dd_generators(n, ineqs, eqs);
        let dual = dd_generators(n, &gens.rays, &gens.lineality);
        let cone = Cone {
            ambient: n,
            rays: gens.rays,
            lineality: gens.lineality,
            ineqs: dual.rays,
            eqs: dual.lineality,
        };
        cone.verify_coherent()?;
        Ok(cone)
    }

    /// Both descriptions must agree on every generator; this runs on every
    /// construction.
    fn verify_coherent(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Internal(format!("incoherent cone description: {msg}")));
        for r in &self.rays {
            if self.eqs.iter().any(|e| !linalg::dot(e, r).is_zero()) {
                return fail("ray violates an equation");
            }
            if self.ineqs.iter().any(|a| linalg::dot(a, r).is_negative()) {
                return fail("ray violates an inequality");
            }
        }
        for l in &self.lineality {
            if self.eqs.iter().any(|e| !linalg::dot(e, l).is_zero())
                || self.ineqs.iter().any(|a| !linalg::dot(a, l).is_zero())
            {
                return fail("lineality vector not in every constraint kernel");
            }
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn ineqs(&self) -> &[Vec<Int>] {
        &self.ineqs
    }

    pub fn eqs(&self) -> &[Vec<Int>] {
        &self.eqs
    }

    pub fn is_zero_cone(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// `{u : u·v ≥ 0 for every v in the cone}`. The generators of one side
    /// are the constraints of the other.
    pub fn dual_cone(&self) -> Cone {
        Self::assemble(self.ambient, &self.rays, &self.lineality)
            .expect("dual of a coherent cone is coherent")
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        check_dim(self.ambient, other.ambient)?;
        let ineqs: Vec<Vec<Int>> = self.ineqs.iter().chain(&other.ineqs).cloned().collect();
        let eqs: Vec<Vec<Int>> = self.eqs.iter().chain(&other.eqs).cloned().collect();
        Self::from_int_constraints(self.ambient, &ineqs, &eqs)
    }

    /// Smallest polyhedral cone containing every cone in the list.
    pub fn conic_hull(cones: &[&Cone]) -> Result<Cone> {
        let Some(first) = cones.first() else {
            return Err(Error::EmptyHull);
        };
        let n = first.ambient;
        let mut rays = Vec::new();
        let mut lineality = Vec::new();
        for c in cones {
            check_dim(n, c.ambient)?;
            rays.extend(c.rays.iter().cloned());
            lineality.extend(c.lineality.iter().cloned());
        }
        Self::from_int_generators(n, &rays, &lineality)
    }

    pub fn contains_point(&self, p: &[Rat]) -> Result<bool> {
        check_dim(self.ambient, p.len())?;
        Ok(self.eqs.iter().all(|e| linalg::dot_rat(p, e).is_zero())
            && self.ineqs.iter().all(|a| !linalg::dot_rat(p, a).is_negative()))
    }

    pub fn contains_int_point(&self, p: &[Int]) -> Result<bool> {
        check_dim(self.ambient, p.len())?;
        Ok(self.eqs.iter().all(|e| linalg::dot(e, p).is_zero())
            && self.ineqs.iter().all(|a| !linalg::dot(a, p).is_negative()))
    }

    /// Whether `other ⊆ self`: every ray and ±(every lineality vector) of
    /// `other` satisfies the constraints of `self`.
    pub fn contains_cone(&self, other: &Cone) -> Result<bool> {
        check_dim(self.ambient, other.ambient)?;
        for r in &other.rays {
            if !self.contains_int_point(r)? {
                return Ok(false);
            }
        }
        for l in &other.lineality {
            let on_all = self.eqs.iter().all(|e| linalg::dot(e, l).is_zero())
                && self.ineqs.iter().all(|a| linalg::dot(a, l).is_zero());
            if !on_all {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Set equality by mutual containment.
    pub fn set_eq(&self, other: &Cone) -> Result<bool> {
        Ok(self.contains_cone(other)? && other.contains_cone(self)?)
    }

    pub fn dimension_info(&self) -> DimensionInfo {
        DimensionInfo {
            dim: self.ambient - self.eqs.len(),
            lineality_dim: self.lineality.len(),
            strongly_convex: self.lineality.is_empty(),
        }
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.eqs.len()
    }

    /// Exact intersection with the segment `[p, q]`, classified against the
    /// parameter interval `[0, 1]`.
    pub fn segment_intersection(&self, p: &[Rat], q: &[Rat]) -> Result<SegmentHit> {
        check_dim(self.ambient, p.len())?;
        check_dim(self.ambient, q.len())?;
        if p == q {
            return Err(Error::DegenerateSegment);
        }
        let mut lo = Rat::zero();
        let mut hi = Rat::from_integer(Int::from(1));
        // along the segment each constraint is affine in t: value(t) = a + t·b
        let eval = |v: &[Int]| -> (Rat, Rat) {
            let at_p = linalg::dot_rat(p, v);
            let at_q = linalg::dot_rat(q, v);
            let slope = &at_q - &at_p;
            (at_p, slope)
        };
        for e in &self.eqs {
            let (a, b) = eval(e);
            if b.is_zero() {
                if !a.is_zero() {
                    return Ok(SegmentHit::Empty);
                }
            } else {
                let t = -a / b;
                if t > lo {
                    lo = t.clone();
                }
                if t < hi {
                    hi = t;
                }
            }
        }
        for c in &self.ineqs {
            let (a, b) = eval(c);
            if b.is_zero() {
                if a.is_negative() {
                    return Ok(SegmentHit::Empty);
                }
            } else {
                let t = -a / &b;
                if b.is_positive() {
                    if t > lo {
                        lo = t;
                    }
                } else if t < hi {
                    hi = t;
                }
            }
        }
        if lo > hi {
            return Ok(SegmentHit::Empty);
        }
        if lo == hi {
            return Ok(SegmentHit::Point { t: lo });
        }
        if lo.is_zero() && hi == Rat::from_integer(Int::from(1)) {
            return Ok(SegmentHit::Full);
        }
        Ok(SegmentHit::SubSegment { t_lo: lo, t_hi: hi })
    }

    /// Sum of all extreme rays: a point of the relative interior. For pure
    /// lineality cones (and for `{0}`) this is the origin, which also lies
    /// in the relative interior.
    pub fn relative_interior_point(&self) -> Vec<Int> {
        let mut p = vec![Int::zero(); self.ambient];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }

    /// The canonical JSON encoding:
    /// `{"rays":…,"lineality":…,"ineqs":…,"eqs":…,"dim":…,"lineality_dim":…}`.
    pub fn to_json(&self) -> Result<Value> {
        let info = self.dimension_info();
        Ok(json!({
            "rays": int_matrix_json(&self.rays)?,
            "lineality": int_matrix_json(&self.lineality)?,
            "ineqs": int_matrix_json(&self.ineqs)?,
            "eqs": int_matrix_json(&self.eqs)?,
            "dim": info.dim,
            "lineality_dim": info.lineality_dim,
        }))
    }
}

pub(crate) fn int_matrix_json(rows: &[Vec<Int>]) -> Result<Value> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for x in row {
            let v = i64::try_from(x)
                .map_err(|_| Error::Internal(format!("entry {x} exceeds the i64 range")))?;
            r.push(Value::from(v));
        }
        out.push(Value::from(r));
    }
    Ok(Value::from(out))
}
