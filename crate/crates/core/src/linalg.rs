//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Vectors are plain `Vec<Int>` / `Vec<Rat>`. Subspaces are always handed
//! around as canonical bases: primitive integer rows of the reduced row
//! echelon form, sign-fixed so the first nonzero coordinate is positive,
//! sorted lexicographically. Two routines may return the same subspace only
//! through the identical basis, which the rest of the crate relies on for
//! deterministic output.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Int]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x * Rat::from_integer(y.clone()))
        .sum()
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Gcd of the absolute values of the entries; zero for the zero vector.
pub fn content(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Scale to coprime integer entries, keeping the direction.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Primitive with the first nonzero coordinate positive (canonical form for
/// vectors that only matter up to sign: lineality and equation normals).
pub fn primitive_signed(v: &[Int]) -> Vec<Int> {
    let mut p = primitive(v);
    if let Some(first) = p.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut p {
                *x = -&*x;
            }
        }
    }
    p
}

/// Clear denominators of a rational vector, then reduce to primitive form.
/// The direction is preserved.
pub fn primitive_from_rat(v: &[Rat]) -> Vec<Int> {
    let lcm = v
        .iter()
        .fold(Int::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(&ints)
}

/// Row echelon data over the rationals for an integer matrix.
pub struct Echelon {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Fully reduced rows (zeros above and below each pivot), one per pivot,
    /// scaled to primitive integer vectors with positive pivot entries.
    pub rows: Vec<Vec<Int>>,
}

/// Reduced row echelon form, computed exactly over `ℚ` and rescaled to
/// canonical primitive integer rows. The output is the unique canonical
/// basis of the row space.
pub fn rref(rows: &[Vec<Int>], ncols: usize) -> Echelon {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), ncols);
            r.iter().map(|x| Rat::from_integer(x.clone())).collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        let Some(src) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = m[pivot_row][col].recip();
        for x in &mut m[pivot_row] {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..ncols {
                    let sub = &m[pivot_row][c] * &factor;
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    let rows_out: Vec<Vec<Int>> = m[..pivot_row]
        .iter()
        .map(|r| primitive_from_rat(r))
        .map(|r| primitive_signed(&r))
        .collect();
    Echelon {
        rank: pivot_row,
        pivot_cols,
        rows: rows_out,
    }
}

pub fn rank(rows: &[Vec<Int>], ncols: usize) -> usize {
    rref(rows, ncols).rank
}

/// Canonical basis of `{x : r · x = 0 for every row r}`.
///
/// An empty row list yields the standard basis of the full space.
pub fn kernel_basis(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    let ech = rref(rows, ncols);
    let pivots: Vec<usize> = ech.pivot_cols.clone();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v: Vec<Rat> = vec![Rat::zero(); ncols];
        v[f] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            // row i reads  pivot·x_p + ... + row[f]·x_f + ... = 0
            let pivot = Rat::from_integer(ech.rows[i][p].clone());
            let coeff = Rat::from_integer(ech.rows[i][f].clone());
            v[p] = -(coeff / pivot);
        }
        basis.push(primitive_signed(&primitive_from_rat(&v)));
    }
    basis.sort();
    basis
}

/// Determinant of a square integer matrix via the Bareiss fraction-free
/// elimination.
pub fn det(mat: &[Vec<Int>]) -> Int {
    let n = mat.len();
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = mat.to_vec();
    for row in &a {
        assert_eq!(row.len(), n, "determinant needs a square matrix");
    }
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Int::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Indices of a lexicographically-first maximal linearly independent subset
/// of the given rows.
pub fn independent_rows(rows: &[Vec<Int>], ncols: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut current: Vec<Vec<Int>> = Vec::new();
    let mut r = 0;
    for (i, row) in rows.iter().enumerate() {
        current.push(row.clone());
        let new_rank = rank(&current, ncols);
        if new_rank > r {
            chosen.push(i);
            r = new_rank;
        } else {
            current.pop();
        }
        if r == ncols {
            break;
        }
    }
    chosen
}

/// Exact inverse of a square integer matrix, returned column-by-column as
/// rational vectors; `None` if singular.
pub fn invert(mat: &[Vec<Int>]) -> Option<Vec<Vec<Rat>>> {
    let n = mat.len();
    let mut a: Vec<Vec<Rat>> = mat
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "inverse needs a square matrix");
            r.iter().map(|x| Rat::from_integer(x.clone())).collect()
        })
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let src = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, src);
        inv.swap(col, src);
        let pivot_inv = a[col][col].recip();
        for c in 0..n {
            a[col][c] = &a[col][c] * &pivot_inv;
            inv[col][c] = &inv[col][c] * &pivot_inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..n {
                    let s = &a[col][c] * &factor;
                    a[r][c] = &a[r][c] - s;
                    let s = &inv[col][c] * &factor;
                    inv[r][c] = &inv[r][c] - s;
                }
            }
        }
    }
    // return columns of the inverse
    Some((0..n).map(|j| (0..n).map(|i| inv[i][j].clone()).collect()).collect())
}
