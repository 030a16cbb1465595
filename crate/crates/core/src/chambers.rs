//! Exact chamber enumeration for representation-finite quivers.
//!
//! The root hyperplanes `{θ : ⟨θ, d⟩ = 0}` of the positive roots refine the
//! stability space into full-dimensional sign cells. Two cells differing in
//! a single sign share a facet inside that root's hyperplane; the facet
//! connects them through the wall complement exactly when it is not covered
//! by the root's wall, which is a plain cone-containment test because in
//! Dynkin type the positive roots are pairwise non-proportional and each
//! hyperplane carries a single wall. Chambers are the components of the
//! resulting gluing graph; each one must come out as a simplicial cone
//! whose primitive ray matrix is unimodular, and the closures must tile the
//! whole space facet-to-facet.

use num::Signed;

use crate::cone::Cone;
use crate::linalg::{self, Int};
use crate::quiver::DimVector;
use crate::walls::WallTable;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A full-dimensional cell of the root-hyperplane arrangement.
#[derive(Debug, Clone)]
pub struct Cell {
    /// One sign per hyperplane, in root order.
    pub signs: Vec<Sign>,
    /// The closed cell.
    pub cone: Cone,
    /// An interior point realizing every sign strictly.
    pub witness: Vec<Int>,
}

/// A chamber: a union of glued cells, realized as a simplicial cone.
#[derive(Debug, Clone)]
pub struct Chamber {
    /// Indices into [`ChamberDecomposition::cells`].
    pub cells: Vec<usize>,
    /// Closure of the chamber.
    pub cone: Cone,
    /// Rows are the primitive extreme rays, sorted; always `n` of them.
    pub g_matrix: Vec<Vec<i64>>,
    pub det: i64,
}

#[derive(Debug)]
pub struct ChamberDecomposition {
    /// The positive roots indexing the arrangement hyperplanes.
    pub roots: Vec<DimVector>,
    pub cells: Vec<Cell>,
    pub chambers: Vec<Chamber>,
}

#[derive(Debug, Clone)]
pub struct UnimodularReport {
    pub pass: bool,
    /// Offending chambers as (index, determinant, rays).
    pub violations: Vec<(usize, i64, Vec<Vec<i64>>)>,
}

#[derive(Debug, Clone)]
pub struct CoverageReport {
    pub pass: bool,
    pub chambers: usize,
    pub shared_facets: usize,
    pub issues: Vec<String>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Enumerate all chambers of a representation-finite quiver.
pub fn enumerate_chambers(table: &WallTable) -> Result<ChamberDecomposition> {
    let quiver = table.quiver();
    let n = quiver.n();
    let roots = table
        .roots_info()
        .ok_or(Error::NotRepresentationFinite)?
        .roots
        .clone();

    let normals: Vec<Vec<Int>> = roots.iter().map(|d| linalg::int_vec(d.entries())).collect();

    // depth-first sign assignment, pruning prefixes whose closed cone has
    // already dropped below full dimension
    let mut cells: Vec<Cell> = Vec::new();
    let mut signs: Vec<Sign> = Vec::new();
    let mut constraints: Vec<Vec<Int>> = Vec::new();
    dfs_cells(n, &normals, &mut signs, &mut constraints, &mut cells)?;

    for cell in &cells {
        for (root, sign) in normals.iter().zip(&cell.signs) {
            let v = linalg::dot(&cell.witness, root);
            let strict = match sign {
                Sign::Plus => v.is_positive(),
                Sign::Minus => v.is_negative(),
            };
            if !strict {
                return Err(Error::Internal(
                    "cell witness fails to realize its sign vector strictly".into(),
                ));
            }
        }
    }

    // glue cells across facets that the corresponding wall does not cover
    let mut dsu = Dsu::new(cells.len());
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let diff: Vec<usize> = (0..normals.len())
                .filter(|&h| cells[i].signs[h] != cells[j].signs[h])
                .collect();
            let [h] = diff.as_slice() else { continue };
            let facet = cells[i].cone.intersect(&cells[j].cone)?;
            if facet.dim() != n - 1 {
                continue;
            }
            let wall = table.wall(&roots[*h])?;
            if !wall.contains_cone(&facet)? {
                dsu.union(i, j);
            }
        }
    }

    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..cells.len() {
        groups.entry(dsu.find(i)).or_default().push(i);
    }

    let mut chambers = Vec::new();
    for (_, members) in groups {
        let cones: Vec<&Cone> = members.iter().map(|&i| &cells[i].cone).collect();
        let cone = Cone::conic_hull(&cones)?;
        let info = cone.dimension_info();
        if !info.strongly_convex || info.dim != n || cone.rays().len() != n {
            return Err(Error::Internal(format!(
                "chamber is not a simplicial cone: dim {}, lineality {}, {} rays",
                info.dim,
                info.lineality_dim,
                cone.rays().len()
            )));
        }
        let g_matrix: Vec<Vec<i64>> = cone
            .rays()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x).map_err(|_| Error::Internal("ray exceeds i64".into())))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;
        let det_big = linalg::det(cone.rays());
        let det = i64::try_from(&det_big)
            .map_err(|_| Error::Internal("chamber determinant exceeds i64".into()))?;
        chambers.push(Chamber { cells: members, cone, g_matrix, det });
    }
    chambers.sort_by(|a, b| a.g_matrix.cmp(&b.g_matrix));

    Ok(ChamberDecomposition { roots, cells, chambers })
}

fn dfs_cells(
    n: usize,
    normals: &[Vec<Int>],
    signs: &mut Vec<Sign>,
    constraints: &mut Vec<Vec<Int>>,
    cells: &mut Vec<Cell>,
) -> Result<()> {
    let depth = signs.len();
    let cone = Cone::from_int_constraints(n, constraints, &[])?;
    if cone.dim() != n {
        return Ok(());
    }
    if depth == normals.len() {
        let witness = cone.relative_interior_point();
        cells.push(Cell { signs: signs.clone(), cone, witness });
        return Ok(());
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let normal = match sign {
            Sign::Plus => normals[depth].clone(),
            Sign::Minus => normals[depth].iter().map(|x| -x).collect(),
        };
        signs.push(sign);
        constraints.push(normal);
        dfs_cells(n, normals, signs, constraints, cells)?;
        signs.pop();
        constraints.pop();
    }
    Ok(())
}

/// Every chamber's primitive ray matrix must be unimodular.
pub fn check_unimodular(chambers: &[Chamber]) -> UnimodularReport {
    let mut violations = Vec::new();
    for (i, chamber) in chambers.iter().enumerate() {
        if chamber.det.abs() != 1 {
            violations.push((i, chamber.det, chamber.g_matrix.clone()));
        }
    }
    UnimodularReport { pass: violations.is_empty(), violations }
}

/// Verify that the chamber closures tile the space: interiors are pairwise
/// disjoint and every facet of every chamber is shared with exactly one
/// other chamber.
pub fn check_fan_coverage(chambers: &[Chamber]) -> Result<CoverageReport> {
    let mut issues = Vec::new();

    for (i, a) in chambers.iter().enumerate() {
        let witness = a.cone.relative_interior_point();
        for (j, b) in chambers.iter().enumerate() {
            if i != j && b.cone.contains_int_point(&witness)? {
                issues.push(format!("interiors of chambers {i} and {j} overlap"));
            }
        }
    }

    // facet of a full-dimensional simplicial cone: one per inequality
    let mut facets: Vec<(usize, Cone)> = Vec::new();
    for (i, chamber) in chambers.iter().enumerate() {
        let n = chamber.cone.ambient_dim();
        for u in chamber.cone.ineqs() {
            let facet =
                Cone::from_int_constraints(n, chamber.cone.ineqs(), &[u.clone()])?;
            if facet.dim() != n - 1 {
                issues.push(format!("chamber {i} has a degenerate facet"));
                continue;
            }
            facets.push((i, facet));
        }
    }

    let mut matched = vec![false; facets.len()];
    let mut shared = 0usize;
    for i in 0..facets.len() {
        if matched[i] {
            continue;
        }
        let mut partners = Vec::new();
        for j in i + 1..facets.len() {
            if !matched[j]
                && facets[i].0 != facets[j].0
                && facets[i].1.set_eq(&facets[j].1)?
            {
                partners.push(j);
            }
        }
        match partners.as_slice() {
            [j] => {
                matched[i] = true;
                matched[*j] = true;
                shared += 1;
            }
            [] => {
                issues.push(format!(
                    "facet of chamber {} is not shared with any other chamber",
                    facets[i].0
                ));
            }
            many => {
                issues.push(format!(
                    "facet of chamber {} is shared with {} chambers",
                    facets[i].0,
                    many.len()
                ));
            }
        }
    }

    Ok(CoverageReport {
        pass: issues.is_empty(),
        chambers: chambers.len(),
        shared_facets: shared,
        issues,
    })
}
