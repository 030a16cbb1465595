//! Quivers, dimension vectors, stability weights, and the Euler form.
//!
//! A quiver here is a finite acyclic multidigraph on vertices `1..n` (stored
//! zero-based). Its path algebra has Euler form
//! `⟨d, e⟩ = Σᵢ dᵢeᵢ − Σ_{arrows i→j} dᵢeⱼ` on dimension vectors, and each
//! stability weight `θ ∈ ℝⁿ` pairs with a dimension vector by the plain dot
//! product, the two bases `[Pᵢ]` and `[Sᵢ]` being dual to each other.

use std::collections::VecDeque;
use std::fmt;

use num::{Integer, Signed, Zero};

use crate::linalg::{self, Int, Rat};
use crate::{Error, Result};

/// A finite acyclic quiver. Arrows are stored as zero-based
/// `(source, target)` pairs; parallel arrows simply repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

/// A dimension vector: non-negative integer entries, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVector(Vec<i64>);

/// A stability parameter: exact rational coordinates in the `[Pᵢ]` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(Vec<Rat>);

/// Classification of a dimension vector by its Euler self-pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootKind {
    Real,
    Isotropic,
    ImaginaryNonisotropic,
    None,
}

impl RootKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RootKind::Real => "real",
            RootKind::Isotropic => "isotropic",
            RootKind::ImaginaryNonisotropic => "imaginary-nonisotropic",
            RootKind::None => "none",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootLabel {
    pub euler_self: i64,
    pub kind: RootKind,
}

impl Quiver {
    /// Build from zero-based arrows, validating all invariants.
    pub fn new(n: usize, arrows: &[(usize, usize)]) -> Result<Quiver> {
        if n == 0 {
            return Err(Error::Invalid("a quiver needs at least one vertex".into()));
        }
        for &(s, t) in arrows {
            if s >= n {
                return Err(Error::VertexOutOfRange { vertex: s as i64 + 1, n });
            }
            if t >= n {
                return Err(Error::VertexOutOfRange { vertex: t as i64 + 1, n });
            }
            if s == t {
                return Err(Error::LoopArrow { vertex: s + 1 });
            }
        }
        let mut arrows = arrows.to_vec();
        arrows.sort_unstable();
        let q = Quiver { n, arrows };
        if q.topological_order().is_none() {
            return Err(Error::CycleDetected);
        }
        Ok(q)
    }

    /// Parse the line-oriented quiver file format: a `vertices <n>` line,
    /// then one `arrow <i> <j>` line per arrow (vertices 1-based, repeats
    /// for parallel arrows); `#` starts a comment.
    pub fn parse(text: &str) -> Result<Quiver> {
        let mut n: Option<usize> = None;
        let mut arrows: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().unwrap_or("");
            let syntax = |msg: &str| Error::QuiverSyntax { line: line_no, msg: msg.to_string() };
            match keyword {
                "vertices" => {
                    if n.is_some() {
                        return Err(syntax("duplicate `vertices` line"));
                    }
                    let value: usize = tokens
                        .next()
                        .ok_or_else(|| syntax("expected `vertices <n>`"))?
                        .parse()
                        .map_err(|_| syntax("vertex count must be a positive integer"))?;
                    if value == 0 {
                        return Err(syntax("vertex count must be positive"));
                    }
                    if tokens.next().is_some() {
                        return Err(syntax("trailing tokens after `vertices <n>`"));
                    }
                    n = Some(value);
                }
                "arrow" => {
                    let n = n.ok_or_else(|| syntax("`arrow` before `vertices`"))?;
                    let mut read = || -> Result<i64> {
                        tokens
                            .next()
                            .ok_or_else(|| syntax("expected `arrow <i> <j>`"))?
                            .parse()
                            .map_err(|_| syntax("arrow endpoints must be integers"))
                    };
                    let i = read()?;
                    let j = read()?;
                    if tokens.next().is_some() {
                        return Err(syntax("trailing tokens after `arrow <i> <j>`"));
                    }
                    for v in [i, j] {
                        if v < 1 || v as usize > n {
                            return Err(Error::VertexOutOfRange { vertex: v, n });
                        }
                    }
                    if i == j {
                        return Err(Error::LoopArrow { vertex: i as usize });
                    }
                    arrows.push((i as usize - 1, j as usize - 1));
                }
                other => {
                    return Err(syntax(&format!("unknown keyword `{other}`")));
                }
            }
        }
        let n = n.ok_or(Error::QuiverSyntax { line: 0, msg: "missing `vertices <n>` line".into() })?;
        Quiver::new(n, &arrows)
    }

    /// The linear quiver `1 → 2 → ⋯ → n` of type Aₙ.
    pub fn linear(n: usize) -> Quiver {
        let arrows: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Quiver::new(n, &arrows).expect("linear quiver is valid")
    }

    /// Two vertices joined by `m` parallel arrows `1 → 2`.
    pub fn kronecker(m: usize) -> Quiver {
        let arrows: Vec<(usize, usize)> = (0..m).map(|_| (0, 1)).collect();
        Quiver::new(2, &arrows).expect("kronecker quiver is valid")
    }

    /// `n` vertices and no arrows at all.
    pub fn no_arrows(n: usize) -> Quiver {
        Quiver::new(n, &[]).expect("arrowless quiver is valid")
    }

    /// The wild quiver `1 ⇉ 2 → 3`.
    pub fn wild_123() -> Quiver {
        Quiver::new(3, &[(0, 1), (0, 1), (1, 2)]).expect("valid quiver")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn arrow_count(&self, source: usize, target: usize) -> usize {
        self.arrows.iter().filter(|&&(s, t)| s == source && t == target).count()
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// `⟨a, b⟩ = Σᵢ aᵢbᵢ − Σ_{arrows i→j} aᵢbⱼ` on arbitrary integer vectors.
    pub fn euler_pairing(&self, a: &[i64], b: &[i64]) -> Result<i64> {
        for v in [a, b] {
            if v.len() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, got: v.len() });
            }
        }
        let mut acc: i128 = a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum();
        for &(s, t) in &self.arrows {
            acc -= a[s] as i128 * b[t] as i128;
        }
        i64::try_from(acc).map_err(|_| Error::Internal("euler pairing overflow".into()))
    }

    /// The Tits form `⟨d, d⟩`.
    pub fn tits_form(&self, d: &[i64]) -> Result<i64> {
        self.euler_pairing(d, d)
    }

    /// `Σᵢ θᵢ dᵢ`, the evaluation of a stability weight on a dimension
    /// vector (the `[Pᵢ]`/`[Sᵢ]` bases are dual, so the pairing is the dot
    /// product).
    pub fn stability_pairing(&self, theta: &Weight, d: &DimVector) -> Result<Rat> {
        for len in [theta.len(), d.len()] {
            if len != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, got: len });
            }
        }
        Ok(theta
            .coords()
            .iter()
            .zip(d.entries())
            .map(|(t, &x)| t * Rat::from_integer(Int::from(x)))
            .sum())
    }

    pub fn root_label(&self, d: &DimVector) -> Result<RootLabel> {
        if d.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: d.len() });
        }
        if d.is_zero() {
            return Err(Error::ZeroVector);
        }
        let q = self.tits_form(d.entries())?;
        let kind = match q {
            1 => RootKind::Real,
            0 => RootKind::Isotropic,
            _ if q < 0 => RootKind::ImaginaryNonisotropic,
            _ => RootKind::None,
        };
        Ok(RootLabel { euler_self: q, kind })
    }

    /// Dimension vectors of the indecomposable projectives: `(dimv Pᵢ)ⱼ`
    /// counts the paths from `i` to `j`.
    pub fn projective_dim_vectors(&self) -> Vec<Vec<i64>> {
        let order = self.topological_order().expect("constructed quivers are acyclic");
        let mut dims = vec![vec![0i64; self.n]; self.n];
        for &v in order.iter().rev() {
            dims[v][v] = 1;
            let outgoing: Vec<usize> = self
                .arrows
                .iter()
                .filter(|&&(s, _)| s == v)
                .map(|&(_, t)| t)
                .collect();
            for t in outgoing {
                let add = dims[t].clone();
                for (x, y) in dims[v].iter_mut().zip(&add) {
                    *x += y;
                }
            }
        }
        dims
    }

    /// Symmetrized Euler matrix: `2` on the diagonal, minus the number of
    /// arrows between each pair off it.
    fn symmetric_matrix(&self) -> Vec<Vec<Int>> {
        let mut c = vec![vec![Int::zero(); self.n]; self.n];
        for i in 0..self.n {
            c[i][i] = Int::from(2);
        }
        for &(s, t) in &self.arrows {
            c[s][t] -= 1;
            c[t][s] -= 1;
        }
        c
    }

    /// Gabriel's finiteness criterion: the symmetrized Tits form is
    /// positive definite exactly when the underlying graph is a disjoint
    /// union of ADE Dynkin diagrams.
    pub fn is_representation_finite(&self) -> bool {
        let c = self.symmetric_matrix();
        for k in 1..=self.n {
            let minor: Vec<Vec<Int>> =
                (0..k).map(|i| (0..k).map(|j| c[i][j].clone()).collect()).collect();
            if !linalg::det(&minor).is_positive() {
                return false;
            }
        }
        true
    }

    /// All positive roots `{d > 0 : ⟨d, d⟩ = 1}` of a representation-finite
    /// quiver, sorted lexicographically.
    ///
    /// Computed as the closure of the unit vectors under the simple
    /// reflections `sᵢ(d) = d − (Cd)ᵢ eᵢ`, keeping the non-negative
    /// vectors; every positive root arises along such a chain.
    pub fn positive_roots(&self) -> Result<Vec<DimVector>> {
        if !self.is_representation_finite() {
            return Err(Error::NotRepresentationFinite);
        }
        let c = self.symmetric_matrix();
        let cd = |d: &[i64], i: usize| -> i64 {
            (0..self.n)
                .map(|j| {
                    let cij = i64::try_from(&c[i][j]).expect("small matrix entry");
                    cij * d[j]
                })
                .sum()
        };
        let mut seen = std::collections::BTreeSet::<Vec<i64>>::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..self.n {
            let mut e = vec![0i64; self.n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(d) = queue.pop_front() {
            for i in 0..self.n {
                let mut r = d.clone();
                r[i] -= cd(&d, i);
                if r.iter().all(|&x| x >= 0)
                    && r.iter().any(|&x| x > 0)
                    && seen.insert(r.clone())
                {
                    queue.push_back(r);
                }
            }
        }
        Ok(seen.into_iter().map(DimVector).collect())
    }
}

impl DimVector {
    pub fn new(entries: Vec<i64>) -> Result<DimVector> {
        if entries.iter().any(|&x| x < 0) {
            return Err(Error::NegativeEntry);
        }
        Ok(DimVector(entries))
    }

    pub fn from_slice(entries: &[i64]) -> Result<DimVector> {
        Self::new(entries.to_vec())
    }

    pub fn unit(n: usize, i: usize) -> DimVector {
        let mut e = vec![0i64; n];
        e[i] = 1;
        DimVector(e)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Whether the entry gcd is one.
    pub fn is_indivisible(&self) -> bool {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Weight {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Weight {
        Weight(linalg::rat_vec(coords))
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }
}

/// The sequence `s₀ = 0, s₁ = 1, s_{i+2} = m·s_{i+1} − s_i` whose
/// consecutive pairs are the real Schur roots of the `m`-Kronecker quiver.
pub fn kronecker_sequence(m: i64, length: usize) -> Result<Vec<Int>> {
    if m < 0 {
        return Err(Error::Invalid("kronecker multiplicity must be non-negative".into()));
    }
    if length == 0 {
        return Err(Error::Invalid("sequence length must be at least 1".into()));
    }
    let mut s: Vec<Int> = Vec::with_capacity(length);
    for i in 0..length {
        let next = match i {
            0 => Int::zero(),
            1 => Int::from(1),
            _ => Int::from(m) * &s[i - 1] - &s[i - 2],
        };
        s.push(next);
    }
    Ok(s)
}
