//! Incremental double description: from a constraint system to the
//! extreme-ray / lineality description of its solution cone.
//!
//! The solution set of `{x : a·x ≥ 0 (a ∈ ineqs), e·x = 0 (e ∈ eqs)}` is
//! first split along its lineality space (the common kernel of every
//! constraint). On a coordinate complement of that space the cone is
//! pointed, so the classical incremental algorithm with the combinatorial
//! adjacency test is sound: start from a simplicial cone cut out by a
//! maximal independent subsystem, then insert the remaining halfspaces one
//! at a time, replacing the cut-off rays by combinations of adjacent pairs.
//! Equations travel through the pointed phase as pairs `±e` of halfspaces.
//!
//! All arithmetic is exact; every produced vector is reduced to primitive
//! integer form, which makes the output canonical: the extreme rays of a
//! pointed cone are unique up to positive scaling, and the lineality basis
//! comes from a reduced row echelon form.

use num::{Signed, Zero};

use crate::linalg::{self, Int};

pub(crate) struct DdOutput {
    /// Extreme rays of the cone modulo its lineality space, primitive and
    /// lexicographically sorted. The representatives vanish on the pivot
    /// coordinates of the lineality basis.
    pub rays: Vec<Vec<Int>>,
    /// Canonical basis of the lineality space.
    pub lineality: Vec<Vec<Int>>,
}

struct Ray {
    coords: Vec<Int>,
    /// Bitset over the constraint list: which *processed* constraints this
    /// ray satisfies with equality.
    zero: Vec<u64>,
}

fn bitset_new(bits: usize) -> Vec<u64> {
    vec![0; bits.div_ceil(64)]
}

fn bitset_insert(set: &mut [u64], i: usize) {
    set[i / 64] |= 1u64 << (i % 64);
}

fn bitset_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bitset_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn dd_generators(n: usize, ineqs: &[Vec<Int>], eqs: &[Vec<Int>]) -> DdOutput {
    let all: Vec<Vec<Int>> = ineqs.iter().chain(eqs).cloned().collect();
    let lineality = linalg::kernel_basis(&all, n);
    if lineality.len() == n {
        return DdOutput {
            rays: Vec::new(),
            lineality,
        };
    }

    // Coordinate complement of the lineality space: drop the pivot
    // coordinates of its echelon basis. On the kept coordinates the
    // restricted cone is pointed and represents the original modulo
    // lineality.
    let pivot_cols = linalg::rref(&lineality, n).pivot_cols;
    let keep: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let m = keep.len();

    let restrict = |row: &[Int]| -> Vec<Int> { keep.iter().map(|&c| row[c].clone()).collect() };

    let mut sys: Vec<Vec<Int>> = Vec::new();
    {
        let mut seen = std::collections::BTreeSet::new();
        let mut push = |row: Vec<Int>, sys: &mut Vec<Vec<Int>>| {
            if linalg::is_zero_vec(&row) {
                return;
            }
            let row = linalg::primitive(&row);
            if seen.insert(row.clone()) {
                sys.push(row);
            }
        };
        for a in ineqs {
            push(restrict(a), &mut sys);
        }
        for e in eqs {
            let r = restrict(e);
            push(r.iter().map(|x| -x).collect(), &mut sys);
            push(r, &mut sys);
        }
    }
    sys.sort();

    assert_eq!(
        linalg::rank(&sys, m),
        m,
        "restricted constraint system must have full column rank"
    );

    // Simplicial start: a maximal independent subsystem B, whose solution
    // cone has the columns of B⁻¹ as rays.
    let base = linalg::independent_rows(&sys, m);
    let b_mat: Vec<Vec<Int>> = base.iter().map(|&i| sys[i].clone()).collect();
    let inv_cols = linalg::invert(&b_mat).expect("independent rows are invertible");

    // Process base constraints first, then the rest in list order.
    let order: Vec<usize> = base
        .iter()
        .copied()
        .chain((0..sys.len()).filter(|i| !base.contains(i)))
        .collect();

    let nbits = sys.len();
    let mut rays: Vec<Ray> = inv_cols
        .iter()
        .map(|col| {
            let coords = linalg::primitive_from_rat(col);
            let mut zero = bitset_new(nbits);
            for &ci in &order[..base.len()] {
                let s = linalg::dot(&sys[ci], &coords);
                assert!(!s.is_negative(), "initial ray violates a base constraint");
                if s.is_zero() {
                    bitset_insert(&mut zero, ci);
                }
            }
            Ray { coords, zero }
        })
        .collect();

    for &ci in &order[base.len()..] {
        let h = &sys[ci];
        let signs: Vec<Int> = rays.iter().map(|r| linalg::dot(h, &r.coords)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
            for (r, s) in rays.iter_mut().zip(&signs) {
                if s.is_zero() {
                    bitset_insert(&mut r.zero, ci);
                }
            }
            continue;
        }
        let plus: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_negative()).collect();

        let mut fresh: Vec<Ray> = Vec::new();
        let mut fresh_seen = std::collections::BTreeSet::new();
        for &ip in &plus {
            for &im in &minus {
                if !adjacent(&rays, ip, im) {
                    continue;
                }
                // w = h(r⁺)·r⁻ − h(r⁻)·r⁺ lies in the cone and on the
                // hyperplane of h; its equality set over the processed
                // constraints is exactly the common one plus h itself.
                let (sp, sm) = (&signs[ip], &signs[im]);
                let coords: Vec<Int> = rays[ip]
                    .coords
                    .iter()
                    .zip(&rays[im].coords)
                    .map(|(p, q)| sp * q - sm * p)
                    .collect();
                let coords = linalg::primitive(&coords);
                if !fresh_seen.insert(coords.clone()) {
                    continue;
                }
                let mut zero = bitset_and(&rays[ip].zero, &rays[im].zero);
                bitset_insert(&mut zero, ci);
                fresh.push(Ray { coords, zero });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(plus.len() + fresh.len());
        for (i, ray) in rays.into_iter().enumerate() {
            if signs[i].is_negative() {
                continue;
            }
            let mut ray = ray;
            if signs[i].is_zero() {
                bitset_insert(&mut ray.zero, ci);
            }
            next.push(ray);
        }
        next.extend(fresh);
        rays = next;
    }

    let mut out: Vec<Vec<Int>> = rays
        .into_iter()
        .map(|r| {
            let mut full = vec![Int::zero(); n];
            for (k, &c) in keep.iter().enumerate() {
                full[c] = r.coords[k].clone();
            }
            full
        })
        .collect();
    out.sort();
    out.dedup();

    DdOutput {
        rays: out,
        lineality,
    }
}

/// Combinatorial adjacency: r⁺ and r⁻ span a 2-face iff no third ray's
/// equality set contains their common one. Valid because the working cone
/// is pointed and the ray list stays minimal throughout.
fn adjacent(rays: &[Ray], ip: usize, im: usize) -> bool {
    let common = bitset_and(&rays[ip].zero, &rays[im].zero);
    rays.iter()
        .enumerate()
        .all(|(k, r)| k == ip || k == im || !bitset_subset(&common, &r.zero))
}
