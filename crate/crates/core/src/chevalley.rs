//! Simple Lie algebras in a Chevalley basis.
//!
//! Basis order: the Cartan generators `h_1..h_r` (the simple coroots) first,
//! then `e_α` for every root in [`RootSystem::roots`] order. Brackets:
//!
//! * `[h_i, e_α] = <α, α_i^∨> e_α`
//! * `[e_α, e_-α] = h_α`, the coroot written in the `h_i`
//! * `[e_α, e_β] = N_{α,β} e_{α+β}` when `α + β` is a root, with `|N_{α,β}| = p + 1`
//!
//! Signs of `N` are fixed by declaring `N_{α,β} = +(p + 1)` on every
//! extraspecial pair and propagating through the standard relations between
//! structure constants. The resulting table is validated against the Jacobi
//! identity when the algebra is built.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{format_rational, rat, QMatrix, Rational, Subspace};
use crate::roots::{Root, RootSystem, SimpleType};

/// Label of a basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    Cartan(usize),
    RootVector(Root),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Cartan(i) => write!(f, "h{}", i + 1),
            BasisLabel::RootVector(a) => write!(f, "e{a}"),
        }
    }
}

/// An element of the algebra, by its coordinates in the Chevalley basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GVector(Vec<Rational>);

impl GVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        GVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        GVector(vec![Rational::zero(); dim])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        GVector(coords.iter().map(|&x| rat(x)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> GVector {
        GVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &GVector) -> Result<GVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(GVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &GVector) -> Result<GVector> {
        self.add(&other.scale(&rat(-1)))
    }

    pub(crate) fn sparse(&self) -> Vec<(usize, &Rational)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }
}

impl AsRef<[Rational]> for GVector {
    fn as_ref(&self) -> &[Rational] {
        &self.0
    }
}

/// Sparse integer linear combination of basis vectors.
pub type IntCombination = Vec<(usize, i64)>;

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    roots: RootSystem,
    dim: usize,
    labels: Vec<BasisLabel>,
    // products of basis vectors, row-major dim x dim
    table: Vec<IntCombination>,
    // N_{α,β} keyed by root indices, only for α + β a root
    structure: HashMap<(usize, usize), i64>,
}

/// Sign propagation for the structure constants.
struct StructureSolver<'a> {
    rs: &'a RootSystem,
    npos: usize,
    memo: HashMap<(usize, usize), i64>,
}

impl<'a> StructureSolver<'a> {
    fn root(&self, i: usize) -> &'a Root {
        &self.rs.roots()[i]
    }

    fn idx(&self, a: &Root) -> Option<usize> {
        self.rs.index_of(a)
    }

    fn norm(&self, i: usize) -> i64 {
        self.rs.norm(self.root(i))
    }

    fn is_pos(&self, i: usize) -> bool {
        i < self.npos
    }

    fn neg(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    /// First positive root γ (in root order) with `ξ - γ` a positive root.
    fn extraspecial(&self, xi: &Root) -> (usize, usize) {
        for g in 0..self.npos {
            let d = xi.sub(self.root(g));
            if let Some(di) = self.idx(&d) {
                if self.is_pos(di) {
                    return (g, di);
                }
            }
        }
        unreachable!("a non-simple positive root is a sum of two positive roots")
    }

    fn n(&mut self, a: usize, b: usize) -> Result<i64> {
        if let Some(&v) = self.memo.get(&(a, b)) {
            return Ok(v);
        }
        let value = self.compute(a, b)?;
        self.memo.insert((a, b), value);
        Ok(value)
    }

    fn compute(&mut self, a: usize, b: usize) -> Result<i64> {
        let s = self.root(a).add(self.root(b));
        let s_idx = self
            .idx(&s)
            .ok_or_else(|| Error::Construction(format!("{s} is not a root")))?;
        match (self.is_pos(a), self.is_pos(b)) {
            (true, true) => {
                if b < a {
                    return Ok(-self.n(b, a)?);
                }
                let (g, d) = self.extraspecial(&s);
                let (p, _) = self.rs.root_string(self.root(b), self.root(a))?;
                if g == a {
                    return Ok(p as i64 + 1);
                }
                // Four-root relation applied to (a, b, -g, -d).
                let (ng, nd) = (self.neg(g), self.neg(d));
                let n_gd = self.n(g, d)?;
                let mut acc = Rational64::zero();
                let bg = self.root(b).sub(self.root(g));
                if let Some(bg_idx) = self.idx(&bg) {
                    let t = self.n(b, ng)? * self.n(a, nd)?;
                    acc += Rational64::new(t, self.norm(bg_idx));
                }
                let ag = self.root(a).sub(self.root(g));
                if let Some(ag_idx) = self.idx(&ag) {
                    let t = self.n(ng, a)? * self.n(b, nd)?;
                    acc += Rational64::new(t, self.norm(ag_idx));
                }
                let value = acc * Rational64::from_integer(self.norm(s_idx))
                    / Rational64::from_integer(n_gd);
                if !value.is_integer() || value.to_integer().abs() != p as i64 + 1 {
                    return Err(Error::Construction(format!(
                        "N({}, {}) = {value}, expected magnitude {}",
                        self.root(a),
                        self.root(b),
                        p + 1
                    )));
                }
                Ok(value.to_integer())
            }
            (false, false) => Ok(-self.n(self.neg(a), self.neg(b))?),
            _ => {
                // a + b + c = 0 gives N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
                let c = self.neg(s_idx);
                let (num, den, other) = if self.is_pos(b) == self.is_pos(c) {
                    (self.norm(c), self.norm(a), self.n(b, c)?)
                } else {
                    (self.norm(c), self.norm(b), self.n(c, a)?)
                };
                let value = Rational64::new(num * other, den);
                if !value.is_integer() {
                    return Err(Error::Construction(format!(
                        "non-integral N({}, {})",
                        self.root(a),
                        self.root(b)
                    )));
                }
                Ok(value.to_integer())
            }
        }
    }
}

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Result<Self> {
        let r = rs.rank();
        let nroots = rs.num_roots();
        let npos = nroots / 2;
        let dim = r + nroots;

        let mut solver = StructureSolver {
            rs: &rs,
            npos,
            memo: HashMap::new(),
        };
        let mut structure = HashMap::new();
        for a in 0..nroots {
            for b in 0..nroots {
                let s = rs.roots()[a].add(&rs.roots()[b]);
                if rs.is_root(&s) {
                    structure.insert((a, b), solver.n(a, b)?);
                }
            }
        }

        let mut labels: Vec<BasisLabel> = (0..r).map(BasisLabel::Cartan).collect();
        labels.extend(rs.roots().iter().cloned().map(BasisLabel::RootVector));

        let mut table = vec![IntCombination::new(); dim * dim];
        for i in 0..r {
            for (a, root) in rs.roots().iter().enumerate() {
                let c = rs.simple_coroot_pairing(root, i) as i64;
                if c != 0 {
                    table[i * dim + r + a] = vec![(r + a, c)];
                    table[(r + a) * dim + i] = vec![(r + a, -c)];
                }
            }
        }
        for (a, root) in rs.roots().iter().enumerate() {
            let neg = rs
                .index_of(&-root)
                .expect("roots are closed under negation");
            table[(r + a) * dim + r + neg] = rs
                .coroot_coeffs(root)?
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .collect();
        }
        for (&(a, b), &n) in &structure {
            let s = rs.index_of(&rs.roots()[a].add(&rs.roots()[b])).unwrap();
            table[(r + a) * dim + r + b] = vec![(r + s, n)];
        }

        let alg = ChevalleyAlgebra {
            roots: rs,
            dim,
            labels,
            table,
            structure,
        };
        alg.validate()?;
        Ok(alg)
    }

    pub fn for_type(t: SimpleType) -> Result<Self> {
        Self::new(RootSystem::new(t))
    }

    /// Antisymmetry, `|N| = p + 1`, and the Jacobi identity: exhaustive over
    /// basis triples up to rank 4, 10^4 seeded random basis triples above.
    fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let mut sum: HashMap<usize, i64> = HashMap::new();
                for &(k, c) in self.bracket_basis(i, j) {
                    *sum.entry(k).or_default() += c;
                }
                for &(k, c) in self.bracket_basis(j, i) {
                    *sum.entry(k).or_default() += c;
                }
                if sum.values().any(|&c| c != 0) {
                    return Err(Error::Construction(format!(
                        "bracket of {} and {} is not antisymmetric",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        for (&(a, b), &n) in &self.structure {
            let (alpha, beta) = (&self.roots.roots()[a], &self.roots.roots()[b]);
            let (p, _) = self.roots.root_string(beta, alpha)?;
            if n.unsigned_abs() != p as u64 + 1 {
                return Err(Error::Construction(format!(
                    "|N({alpha}, {beta})| = {}, expected {}",
                    n.abs(),
                    p + 1
                )));
            }
        }
        let failing = if self.rank() <= 4 {
            (0..d)
                .flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k))))
                .find(|&(i, j, k)| !self.jacobi_holds(i, j, k))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            (0..10_000)
                .map(|_| {
                    (
                        rng.random_range(0..d),
                        rng.random_range(0..d),
                        rng.random_range(0..d),
                    )
                })
                .find(|&(i, j, k)| !self.jacobi_holds(i, j, k))
        };
        if let Some((i, j, k)) = failing {
            return Err(Error::Construction(format!(
                "Jacobi identity fails on ({}, {}, {})",
                self.labels[i], self.labels[j], self.labels[k]
            )));
        }
        Ok(())
    }

    /// Jacobi identity on basis vectors `i, j, k`, in integer arithmetic.
    pub fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
            for &(m, c) in self.bracket_basis(x, y) {
                for &(n, e) in self.bracket_basis(m, z) {
                    *acc.entry(n).or_default() += c * e;
                }
            }
        }
        acc.values().all(|&c| c == 0)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn simple_type(&self) -> SimpleType {
        self.roots.simple_type()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    /// Basis coordinate of `e_α`.
    pub fn root_coordinate(&self, alpha: &Root) -> Result<usize> {
        Ok(self.rank() + self.roots.require(alpha)?)
    }

    /// Root of a basis coordinate, `None` for Cartan coordinates.
    pub fn coordinate_root(&self, k: usize) -> Option<&Root> {
        match &self.labels[k] {
            BasisLabel::RootVector(a) => Some(a),
            BasisLabel::Cartan(_) => None,
        }
    }

    pub fn basis_vector(&self, k: usize) -> GVector {
        let mut v = GVector::zero(self.dim);
        v.0[k] = Rational::one();
        v
    }

    pub fn e(&self, alpha: &Root) -> Result<GVector> {
        Ok(self.basis_vector(self.root_coordinate(alpha)?))
    }

    pub fn h(&self, i: usize) -> GVector {
        self.basis_vector(i)
    }

    /// `h_α = [e_α, e_-α]`.
    pub fn coroot_vector(&self, alpha: &Root) -> Result<GVector> {
        let mut v = GVector::zero(self.dim);
        for (i, c) in self.roots.coroot_coeffs(alpha)?.into_iter().enumerate() {
            v.0[i] = rat(c);
        }
        Ok(v)
    }

    /// `N_{α,β}`, or 0 when `α + β` is not a root.
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        let a = self.roots.require(alpha)?;
        let b = self.roots.require(beta)?;
        Ok(self.structure.get(&(a, b)).copied().unwrap_or(0))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim + j]
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn bracket_coords(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(u)?;
        self.check_len(v)?;
        let mut out = vec![Rational::zero(); self.dim];
        let vs: Vec<(usize, &Rational)> =
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &vs {
                let ab = a * b;
                for &(k, c) in self.bracket_basis(i, j) {
                    out[k] += &ab * rat(c);
                }
            }
        }
        Ok(out)
    }

    /// `[e_i, v]` for a basis index `i`.
    pub(crate) fn bracket_basis_with(&self, i: usize, v: &[(usize, &Rational)]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for &(j, b) in v {
            for &(k, c) in self.bracket_basis(i, j) {
                out[k] += b * rat(c);
            }
        }
        out
    }

    pub fn bracket(&self, u: &GVector, v: &GVector) -> Result<GVector> {
        Ok(GVector(self.bracket_coords(&u.0, &v.0)?))
    }

    /// Matrix of `u ↦ [v, u]`.
    pub fn ad_matrix(&self, v: &GVector) -> Result<QMatrix> {
        self.check_len(&v.0)?;
        let vs = v.sparse();
        let columns: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| {
                // [v, e_j] = -[e_j, v]
                self.bracket_basis_with(j, &vs)
                    .into_iter()
                    .map(|x| -x)
                    .collect()
            })
            .collect();
        QMatrix::from_columns(&columns, self.dim)
    }

    /// Whether `ad(v)` is nilpotent, by iterating `V ↦ [v, V]` from the whole
    /// algebra until the image vanishes or stops shrinking.
    pub fn is_nilpotent(&self, v: &GVector) -> Result<bool> {
        self.check_len(&v.0)?;
        let vs = v.sparse();
        let mut current = Subspace::full(self.dim);
        for _ in 0..=self.dim {
            if current.is_zero() {
                return Ok(true);
            }
            let images: Vec<Vec<Rational>> = current
                .basis_vectors()
                .map(|w| {
                    let ws: Vec<(usize, &Rational)> =
                        w.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                    let mut out = vec![Rational::zero(); self.dim];
                    for &(i, a) in &vs {
                        for (k, x) in self.bracket_basis_with(i, &ws).into_iter().enumerate() {
                            if !x.is_zero() {
                                out[k] += a * x;
                            }
                        }
                    }
                    out
                })
                .collect();
            let next = Subspace::span(&images, self.dim)?;
            if next.dim() == current.dim() {
                return Ok(false);
            }
            current = next;
        }
        Ok(current.is_zero())
    }

    /// Killing form `tr(ad u ∘ ad v)`.
    pub fn killing(&self, u: &GVector, v: &GVector) -> Result<Rational> {
        Ok(self.ad_matrix(u)?.mul(&self.ad_matrix(v)?)?.trace())
    }

    /// The Cartan subalgebra `t = span{h_i}`.
    pub fn cartan_subalgebra(&self) -> Subspace {
        Subspace::coordinate(0..self.rank(), self.dim)
    }

    pub fn root_space(&self, alpha: &Root) -> Result<Subspace> {
        Ok(Subspace::coordinate(
            [self.root_coordinate(alpha)?],
            self.dim,
        ))
    }

    /// `t_α = [g_α, g_-α] = C h_α`.
    pub fn coroot_line(&self, alpha: &Root) -> Result<Subspace> {
        Subspace::span(&[self.coroot_vector(alpha)?], self.dim)
    }

    /// Chevalley involution `e_α ↦ -e_-α`, `h ↦ -h`.
    pub fn chevalley_involution(&self, v: &GVector) -> Result<GVector> {
        self.check_len(&v.0)?;
        let r = self.rank();
        let mut out = GVector::zero(self.dim);
        for (k, x) in v.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let target = match self.coordinate_root(k) {
                None => k,
                Some(a) => r + self.roots.index_of(&-a).unwrap(),
            };
            out.0[target] = -x.clone();
        }
        Ok(out)
    }

    /// Nonzero coordinates keyed by basis label, values as `n` or `n/d`.
    pub fn render(&self, v: &GVector) -> Vec<(String, String)> {
        v.0.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (self.labels[k].to_string(), format_rational(x)))
            .collect()
    }
}

pub fn build_chevalley(rs: RootSystem) -> Result<ChevalleyAlgebra> {
    ChevalleyAlgebra::new(rs)
}

/// Serializable rendering of an element: `{"label": "coefficient"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RenderedVector(pub std::collections::BTreeMap<String, String>);

impl ChevalleyAlgebra {
    pub fn rendered(&self, v: &GVector) -> RenderedVector {
        RenderedVector(self.render(v).into_iter().collect())
    }
}
