//! Point- and segment-level stability queries.
//!
//! Two weights are TF equivalent exactly when every wall meets the segment
//! between them in nothing or in the whole segment. Any wall that cuts the
//! segment properly is realized by an actual module, so a proper hit is a
//! sound certificate of inequivalence for every quiver. The converse
//! direction is bounded: sweeping all dimension vectors up to a degree
//! bound certifies equivalence outright only when the quiver is
//! representation-finite and the bound covers the highest root (every wall
//! is then a root wall, and the all-or-nothing property passes to
//! intersections); otherwise the answer is qualified by the bound.

use serde_json::{json, Value};

use crate::cone::SegmentHit;
use crate::quiver::{DimVector, Weight};
use crate::walls::{vectors_of_degree, WallTable};
use crate::{Error, Result};

/// Outcome of a bounded TF-equivalence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TfVerdict {
    /// A wall crosses the open segment: the weights are certainly not TF
    /// equivalent, witnessed by the smallest such dimension vector.
    NotEquivalent {
        witness_d: DimVector,
        witness_hit: SegmentHit,
        bound: i64,
    },
    /// No wall up to the bound separates the weights, but larger walls
    /// might.
    EquivalentUpToBound { bound: i64 },
    /// No wall separates the weights at all.
    EquivalentExact { bound: i64 },
}

impl TfVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            TfVerdict::NotEquivalent { .. } => "not_equivalent",
            TfVerdict::EquivalentUpToBound { .. } => "equivalent_up_to_bound",
            TfVerdict::EquivalentExact { .. } => "equivalent_exact",
        }
    }

    pub fn is_equivalent(&self) -> bool {
        !matches!(self, TfVerdict::NotEquivalent { .. })
    }

    pub fn to_json(&self) -> Value {
        let (bound, witness) = match self {
            TfVerdict::NotEquivalent { witness_d, witness_hit, bound } => (
                *bound,
                json!({ "d": witness_d.entries(), "hit": segment_hit_json(witness_hit) }),
            ),
            TfVerdict::EquivalentUpToBound { bound } => (*bound, Value::Null),
            TfVerdict::EquivalentExact { bound } => (*bound, Value::Null),
        };
        json!({ "verdict": self.kind(), "bound": bound, "witness": witness })
    }
}

pub fn segment_hit_json(hit: &SegmentHit) -> Value {
    match hit {
        SegmentHit::Empty => json!({ "kind": "empty" }),
        SegmentHit::Point { t } => {
            json!({ "kind": "point", "t_lo": t.to_string(), "t_hi": t.to_string() })
        }
        SegmentHit::SubSegment { t_lo, t_hi } => {
            json!({ "kind": "subsegment", "t_lo": t_lo.to_string(), "t_hi": t_hi.to_string() })
        }
        SegmentHit::Full => json!({ "kind": "full" }),
    }
}

fn check_weight(table: &WallTable, theta: &Weight) -> Result<()> {
    let n = table.quiver().n();
    if theta.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: theta.len() });
    }
    Ok(())
}

fn check_bound(bound: i64) -> Result<()> {
    if bound < 1 {
        return Err(Error::Invalid("degree bound must be at least 1".into()));
    }
    Ok(())
}

/// Whether `θ` lies on the wall of `d`.
pub fn on_wall(table: &WallTable, theta: &Weight, d: &DimVector) -> Result<bool> {
    check_weight(table, theta)?;
    table.wall(d)?.contains_point(theta.coords())
}

/// All nonzero `d` with `Σdᵢ ≤ degree_bound` whose wall passes through
/// `θ`, sorted.
pub fn walls_through(table: &WallTable, theta: &Weight, degree_bound: i64) -> Result<Vec<DimVector>> {
    check_weight(table, theta)?;
    check_bound(degree_bound)?;
    let n = table.quiver().n();
    let mut out = Vec::new();
    for degree in 1..=degree_bound {
        for d in vectors_of_degree(n, degree) {
            if table.wall(&d)?.contains_point(theta.coords())? {
                out.push(d);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Bounded TF-equivalence test along the segment `[θ, θ′]`.
///
/// The sweep runs over all nonzero dimension vectors up to the bound in
/// increasing total degree, lexicographically within a degree, so a
/// negative answer always carries the smallest witness.
pub fn tf_equivalent_bounded(
    table: &WallTable,
    theta: &Weight,
    theta2: &Weight,
    degree_bound: i64,
) -> Result<TfVerdict> {
    check_weight(table, theta)?;
    check_weight(table, theta2)?;
    check_bound(degree_bound)?;
    if theta == theta2 {
        return Ok(TfVerdict::EquivalentExact { bound: degree_bound });
    }
    let n = table.quiver().n();
    for degree in 1..=degree_bound {
        for d in vectors_of_degree(n, degree) {
            let hit = table
                .wall(&d)?
                .segment_intersection(theta.coords(), theta2.coords())?;
            if hit.is_proper() {
                return Ok(TfVerdict::NotEquivalent {
                    witness_d: d,
                    witness_hit: hit,
                    bound: degree_bound,
                });
            }
        }
    }
    let exact = table
        .roots_info()
        .is_some_and(|info| info.max_degree <= degree_bound);
    if exact {
        Ok(TfVerdict::EquivalentExact { bound: degree_bound })
    } else {
        Ok(TfVerdict::EquivalentUpToBound { bound: degree_bound })
    }
}

/// Whether no wall up to the bound passes through `θ`. Exact chamber
/// membership when the quiver is representation-finite and the bound
/// covers the highest root.
pub fn in_chamber_bounded(table: &WallTable, theta: &Weight, degree_bound: i64) -> Result<bool> {
    Ok(walls_through(table, theta, degree_bound)?.is_empty())
}
