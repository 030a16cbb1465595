//! Intersect walls with an affine triangle and draw the result.
//!
//! The triangle `{u·p0 + v·p1 + w·p2 : u, v, w ≥ 0, u + v + w = 1}` is
//! handled in homogeneous coordinates: membership of the ambient point in a
//! wall is linear in `(u, v, w)`, so each wall pulls back to a polyhedral
//! cone inside the non-negative orthant of `ℝ³`, and the slice region is
//! that cone's cross-section at coordinate sum one. Everything stays exact
//! rational; decimals appear only in the final SVG serialization, at 12
//! significant digits.

use std::cmp::Ordering;

use num::{Signed, Zero};
use serde_json::{json, Value};

use wallchamber::linalg::{self, Int, Rat};
use wallchamber::{Cone, DimVector, Error, Result, WallTable};

/// An affine triangle spanned by three weights.
#[derive(Debug, Clone)]
pub struct SliceSpec {
    pub p0: Vec<Rat>,
    pub p1: Vec<Rat>,
    pub p2: Vec<Rat>,
}

/// One wall clipped to the triangle, in barycentric coordinates.
#[derive(Debug, Clone)]
pub struct WallSlice {
    pub d: DimVector,
    /// 0 = point, 1 = segment, 2 = polygon.
    pub region_dim: usize,
    /// Vertices `(u, v, w)` with `u + v + w = 1`; polygon vertices are in
    /// boundary order.
    pub vertices: Vec<[Rat; 3]>,
}

impl SliceSpec {
    pub fn new(p0: Vec<Rat>, p1: Vec<Rat>, p2: Vec<Rat>) -> Result<SliceSpec> {
        let n = p0.len();
        if n == 0 || p1.len() != n || p2.len() != n {
            return Err(Error::DimensionMismatch { expected: n.max(1), got: p1.len() });
        }
        let d1: Vec<Rat> = p1.iter().zip(&p0).map(|(a, b)| a - b).collect();
        let d2: Vec<Rat> = p2.iter().zip(&p0).map(|(a, b)| a - b).collect();
        let rows = vec![linalg::primitive_from_rat(&d1), linalg::primitive_from_rat(&d2)];
        if linalg::rank(&rows, n) != 2 {
            return Err(Error::Invalid(
                "slice plane corners must be affinely independent".into(),
            ));
        }
        Ok(SliceSpec { p0, p1, p2 })
    }

    /// The standard simplex `[P₁], −[P₂], −[P₃]` for three vertices.
    pub fn default_plane(n: usize) -> Result<SliceSpec> {
        if n != 3 {
            return Err(Error::Invalid(
                "the default slice plane exists only for three vertices; pass --plane".into(),
            ));
        }
        let rat = |x: i64| Rat::from_integer(Int::from(x));
        Ok(SliceSpec {
            p0: vec![rat(1), rat(0), rat(0)],
            p1: vec![rat(0), rat(-1), rat(0)],
            p2: vec![rat(0), rat(0), rat(-1)],
        })
    }

    pub fn corners(&self) -> [&Vec<Rat>; 3] {
        [&self.p0, &self.p1, &self.p2]
    }

    /// Map barycentric coordinates back to the ambient space.
    pub fn to_ambient(&self, bary: &[Rat; 3]) -> Vec<Rat> {
        let n = self.p0.len();
        (0..n)
            .map(|i| {
                &bary[0] * &self.p0[i] + &bary[1] * &self.p1[i] + &bary[2] * &self.p2[i]
            })
            .collect()
    }
}

/// Clip every wall of total degree up to the bound to the triangle. Walls
/// missing the triangle are dropped; the rest are sorted by `d`.
pub fn compute_slices(table: &WallTable, bound: i64, spec: &SliceSpec) -> Result<Vec<WallSlice>> {
    let n = table.quiver().n();
    if spec.p0.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: spec.p0.len() });
    }
    let mut out = Vec::new();
    for (d, wall) in table.wall_sweep(bound)? {
        if let Some(slice) = clip_wall(&d, &wall, spec)? {
            out.push(slice);
        }
    }
    Ok(out)
}

fn clip_wall(d: &DimVector, wall: &Cone, spec: &SliceSpec) -> Result<Option<WallSlice>> {
    // pull each wall constraint back to (u, v, w)
    let pull = |normal: &Vec<Int>| -> Vec<Int> {
        let row: Vec<Rat> = spec
            .corners()
            .iter()
            .map(|p| linalg::dot_rat(p, normal))
            .collect();
        linalg::primitive_from_rat(&row)
    };
    let mut ineqs: Vec<Vec<Int>> = wall.ineqs().iter().map(|a| pull(a)).collect();
    for axis in 0..3 {
        let mut e = vec![Int::zero(); 3];
        e[axis] = Int::from(1);
        ineqs.push(e);
    }
    let eqs: Vec<Vec<Int>> = wall.eqs().iter().map(|a| pull(a)).collect();
    let cone = Cone::from_int_constraints(3, &ineqs, &eqs)?;
    if cone.dim() == 0 {
        return Ok(None);
    }
    if !cone.lineality().is_empty() {
        return Err(Error::Internal(
            "slice cone inside the orthant cannot carry lineality".into(),
        ));
    }
    let mut vertices: Vec<[Rat; 3]> = cone
        .rays()
        .iter()
        .map(|r| {
            let sum: Int = r.iter().sum();
            let v: Vec<Rat> = r.iter().map(|x| Rat::new(x.clone(), sum.clone())).collect();
            [v[0].clone(), v[1].clone(), v[2].clone()]
        })
        .collect();
    let region_dim = cone.dim() - 1;
    if region_dim == 2 {
        order_polygon(&mut vertices);
    }
    Ok(Some(WallSlice { d: d.clone(), region_dim, vertices }))
}

/// Drawing-plane coordinates of the triangle corners.
const CORNER_XY: [(i64, i64); 3] = [(400, 80), (80, 640), (720, 640)];

fn to_xy(bary: &[Rat; 3]) -> (Rat, Rat) {
    let mut x = Rat::zero();
    let mut y = Rat::zero();
    for (b, &(cx, cy)) in bary.iter().zip(&CORNER_XY) {
        x = x + b * Rat::from_integer(Int::from(cx));
        y = y + b * Rat::from_integer(Int::from(cy));
    }
    (x, y)
}

/// Order polygon vertices counter-clockwise around their centroid, with an
/// exact angular comparator (half-plane split, then cross products).
fn order_polygon(vertices: &mut [[Rat; 3]]) {
    let k = Rat::from_integer(Int::from(vertices.len() as i64));
    let pts: Vec<(Rat, Rat)> = vertices.iter().map(to_xy).collect();
    let cx: Rat = pts.iter().map(|p| p.0.clone()).sum::<Rat>() / &k;
    let cy: Rat = pts.iter().map(|p| p.1.clone()).sum::<Rat>() / &k;
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    let half = |dx: &Rat, dy: &Rat| -> u8 {
        u8::from(dy.is_negative() || (dy.is_zero() && dx.is_negative()))
    };
    order.sort_by(|&i, &j| {
        let (ax, ay) = (&pts[i].0 - &cx, &pts[i].1 - &cy);
        let (bx, by) = (&pts[j].0 - &cx, &pts[j].1 - &cy);
        half(&ax, &ay)
            .cmp(&half(&bx, &by))
            .then_with(|| {
                let cross = &ax * &by - &ay * &bx;
                if cross.is_positive() {
                    Ordering::Less
                } else if cross.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            })
    });
    let reordered: Vec<[Rat; 3]> = order.iter().map(|&i| vertices[i].clone()).collect();
    vertices.clone_from_slice(&reordered);
}

/// Render a decimal with the given number of significant digits, rounding
/// half away from zero; exact trailing zeros are trimmed.
pub fn format_decimal(x: &Rat, sig: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let a = x.numer().abs();
    let b = x.denom().clone();
    let int_part = &a / &b;
    let int_digits = if int_part.is_zero() { 0 } else { int_part.to_string().len() as i64 };
    let sig = sig as i64;
    if int_digits > sig {
        // round the integer part itself
        let scale = Int::from(10).pow((int_digits - sig) as u32);
        let shifted = &a / &b;
        let rounded = ((&shifted + &scale / 2) / &scale) * &scale;
        return format!("{sign}{rounded}");
    }
    let frac_places = if int_digits > 0 {
        (sig - int_digits) as u32
    } else {
        // count zeros between the point and the first significant digit
        let mut z = 0u32;
        let mut scaled = &a * Int::from(10);
        while scaled < b {
            scaled *= Int::from(10);
            z += 1;
        }
        z + sig as u32
    };
    let scale = Int::from(10).pow(frac_places);
    let num = &a * &scale;
    let rounded = (&num * Int::from(2) + &b) / (&b * Int::from(2));
    let digits = rounded.to_string();
    let digits = if digits.len() <= frac_places as usize {
        format!("{:0>width$}", digits, width = frac_places as usize + 1)
    } else {
        digits
    };
    let split = digits.len() - frac_places as usize;
    let (whole, frac) = digits.split_at(split);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac}")
    }
}

fn xy_attr(bary: &[Rat; 3]) -> (String, String) {
    let (x, y) = to_xy(bary);
    (format_decimal(&x, 12), format_decimal(&y, 12))
}

/// Deterministic SVG 1.1 document; the degree bound is stated in the title
/// and in a visible caption, because the picture is a truncation whenever
/// the quiver is representation-infinite.
pub fn render_svg(slices: &[WallSlice], bound: i64) -> String {
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"720\" viewBox=\"0 0 800 720\">\n",
    );
    svg.push_str(&format!(
        "<title>wall slices, total degree &#8804; {bound}</title>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"20\" y=\"32\" font-family=\"monospace\" font-size=\"18\">walls of total degree &#8804; {bound} (truncated picture)</text>\n"
    ));
    svg.push_str(&format!(
        "<polygon points=\"{},{} {},{} {},{}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n",
        CORNER_XY[0].0, CORNER_XY[0].1, CORNER_XY[1].0, CORNER_XY[1].1, CORNER_XY[2].0, CORNER_XY[2].1
    ));
    for slice in slices {
        let label = format!("d = {}", slice.d);
        match slice.region_dim {
            2 => {
                let points: Vec<String> = slice
                    .vertices
                    .iter()
                    .map(|v| {
                        let (x, y) = xy_attr(v);
                        format!("{x},{y}")
                    })
                    .collect();
                svg.push_str(&format!(
                    "<polygon points=\"{}\" fill=\"#9db8d9\" fill-opacity=\"0.35\" stroke=\"#4a6fa5\" stroke-width=\"1\"><title>{label}</title></polygon>\n",
                    points.join(" ")
                ));
            }
            1 => {
                let (x1, y1) = xy_attr(&slice.vertices[0]);
                let (x2, y2) = xy_attr(&slice.vertices[1]);
                svg.push_str(&format!(
                    "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#b03030\" stroke-width=\"1.5\"><title>{label}</title></line>\n"
                ));
            }
            _ => {}
        }
    }
    svg.push_str("</svg>\n");
    svg
}

/// Barycentric data for the round-trip check: every vertex, mapped back to
/// ambient coordinates, must lie on its source wall.
pub fn sidecar_json(slices: &[WallSlice], spec: &SliceSpec, bound: i64) -> Value {
    let rat_str = |x: &Rat| x.to_string();
    let plane: Vec<Vec<String>> = spec.corners().iter().map(|p| p.iter().map(rat_str).collect()).collect();
    let walls: Vec<Value> = slices
        .iter()
        .map(|s| {
            let vertices: Vec<Vec<String>> = s
                .vertices
                .iter()
                .map(|v| v.iter().map(rat_str).collect())
                .collect();
            json!({
                "d": s.d.entries(),
                "region_dim": s.region_dim,
                "vertices": vertices,
            })
        })
        .collect();
    json!({
        "bound": bound,
        "plane": plane,
        "walls": walls,
    })
}
