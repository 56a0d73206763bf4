//! Lie-theoretic operations on subspaces of a Chevalley algebra.

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_rows, rat, Rational, SparseRow, Subspace};
use crate::roots::Root;

/// A subspace stable under the Cartan subalgebra, split as its toral part
/// plus the root spaces it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TStableSubalgebra {
    /// Subspace of `Q^rank`, in the coordinates of `h_1..h_r`.
    pub toral_part: Subspace,
    /// Roots α with `g_α ⊆ W`, in root-system order.
    pub root_set: Vec<Root>,
}

impl TStableSubalgebra {
    pub fn toral_dim(&self) -> usize {
        self.toral_part.dim()
    }

    pub fn dim(&self) -> usize {
        self.toral_dim() + self.root_set.len()
    }

    /// `toral_part ⊕ span{e_α : α ∈ root_set}` as a subspace of the algebra.
    pub fn reconstitute(&self, alg: &ChevalleyAlgebra) -> Result<Subspace> {
        let n = alg.dim();
        let mut vectors: Vec<Vec<Rational>> = self
            .toral_part
            .basis_vectors()
            .map(|row| {
                let mut v = vec![Rational::zero(); n];
                v[..row.len()].clone_from_slice(row);
                v
            })
            .collect();
        for a in &self.root_set {
            vectors.push(alg.e(a)?.into_coords());
        }
        Subspace::span(&vectors, n)
    }

    pub fn summary(&self) -> TStableSummary {
        TStableSummary {
            toral_dim: self.toral_dim(),
            roots: self.root_set.clone(),
        }
    }
}

/// Report form of a [`TStableSubalgebra`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TStableSummary {
    pub toral_dim: usize,
    pub roots: Vec<Root>,
}

fn check_ambient(alg: &ChevalleyAlgebra, w: &Subspace) -> Result<()> {
    if w.ambient_dim() != alg.dim() {
        return Err(Error::AmbientMismatch {
            left: alg.dim(),
            right: w.ambient_dim(),
        });
    }
    Ok(())
}

fn nonzero(v: &[Rational]) -> Vec<(usize, &Rational)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

/// Rows of the linear map `u ↦ ([u, w])` restricted to the coordinates kept
/// by `project`, one block per basis vector `w` of `W`.
fn stacked_kernel<F>(alg: &ChevalleyAlgebra, w: &Subspace, project: F) -> Subspace
where
    F: Fn(Vec<Rational>) -> Vec<Rational>,
{
    let n = alg.dim();
    let blocks = w.basis_vectors().map(|wj| {
        let ws = nonzero(wj);
        // columns[i] = project([e_i, w_j])
        let columns: Vec<Vec<Rational>> = (0..n)
            .map(|i| project(alg.bracket_basis_with(i, &ws)))
            .collect();
        let height = columns.first().map_or(0, Vec::len);
        let mut rows: Vec<SparseRow> = vec![Vec::new(); height];
        for (i, col) in columns.into_iter().enumerate() {
            for (c, x) in col.into_iter().enumerate() {
                if !x.is_zero() {
                    rows[c].push((i, x));
                }
            }
        }
        rows
    });
    kernel_of_rows(n, blocks.flatten().filter(|r| !r.is_empty()))
}

/// `c_g(W) = {u : [u, W] = 0}`.
pub fn centralizer(alg: &ChevalleyAlgebra, w: &Subspace) -> Result<Subspace> {
    check_ambient(alg, w)?;
    Ok(stacked_kernel(alg, w, |v| v))
}

/// `n_g(W) = {u : [u, W] ⊆ W}`, as the kernel of `u ↦ [u, w_j] mod W`
/// stacked over a basis of `W`.
pub fn normalizer(alg: &ChevalleyAlgebra, w: &Subspace) -> Result<Subspace> {
    check_ambient(alg, w)?;
    let ech = w.echelon();
    let keep = w.complement_columns();
    Ok(stacked_kernel(alg, w, |mut v| {
        ech.reduce_dense(&mut v);
        keep.iter().map(|&k| std::mem::take(&mut v[k])).collect()
    }))
}

/// Span of `[a, b]` over basis vectors of `A` and `B`.
pub fn bracket_span(alg: &ChevalleyAlgebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(alg, a)?;
    check_ambient(alg, b)?;
    let mut out = Vec::new();
    for x in a.basis_vectors() {
        for y in b.basis_vectors() {
            out.push(alg.bracket_coords(x, y)?);
        }
    }
    Subspace::span(&out, alg.dim())
}

pub fn is_subalgebra(alg: &ChevalleyAlgebra, w: &Subspace) -> Result<bool> {
    check_ambient(alg, w)?;
    let basis: Vec<&[Rational]> = w.basis_vectors().collect();
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            if !w.contains(&alg.bracket_coords(x, y)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[[W, W], W] ⊆ W`.
pub fn is_lie_triple(alg: &ChevalleyAlgebra, w: &Subspace) -> Result<bool> {
    check_ambient(alg, w)?;
    let ww = bracket_span(alg, w, w)?;
    let www = bracket_span(alg, &ww, w)?;
    w.contains_subspace(&www)
}

pub fn is_t_stable(alg: &ChevalleyAlgebra, w: &Subspace) -> Result<bool> {
    check_ambient(alg, w)?;
    for i in 0..alg.rank() {
        for v in w.basis_vectors() {
            let hv = alg.bracket_basis_with(i, &nonzero(v));
            if !w.contains(&hv)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Φ_W = {α : g_α ⊆ W}`, in root-system order.
pub fn root_set(alg: &ChevalleyAlgebra, w: &Subspace) -> Result<Vec<Root>> {
    check_ambient(alg, w)?;
    let mut out = Vec::new();
    for a in alg.root_system().roots() {
        if w.contains(alg.e(a)?.coords())? {
            out.push(a.clone());
        }
    }
    Ok(out)
}

/// Splits a t-stable subspace as `(W ∩ t) ⊕ ⊕_{α ∈ Φ_W} g_α`.
pub fn t_stable_decompose(alg: &ChevalleyAlgebra, w: &Subspace) -> Result<TStableSubalgebra> {
    if !is_t_stable(alg, w)? {
        return Err(Error::NotTStable);
    }
    let toral = w.intersect(&alg.cartan_subalgebra())?;
    let r = alg.rank();
    let toral_rows: Vec<Vec<Rational>> =
        toral.basis_vectors().map(|row| row[..r].to_vec()).collect();
    let toral_part = Subspace::span(&toral_rows, r)?;
    let root_set = root_set(alg, w)?;
    let out = TStableSubalgebra {
        toral_part,
        root_set,
    };
    if out.dim() != w.dim() {
        return Err(Error::Construction(format!(
            "t-stable subspace of dim {} splits into {} + {}",
            w.dim(),
            out.toral_dim(),
            out.root_set.len()
        )));
    }
    Ok(out)
}

/// Random subspace of `t`, spanned by up to `rank` vectors with entries in
/// `[-5, 5]`.
pub fn random_toral_subspace<R: Rng>(alg: &ChevalleyAlgebra, rng: &mut R) -> Subspace {
    let r = alg.rank();
    let k = rng.random_range(0..=r);
    let vectors: Vec<Vec<Rational>> = (0..k)
        .map(|_| {
            let mut v = vec![Rational::zero(); alg.dim()];
            for x in v.iter_mut().take(r) {
                *x = rat(rng.random_range(-5..=5));
            }
            v
        })
        .collect();
    Subspace::span(&vectors, alg.dim()).expect("vectors have the algebra's length")
}

/// Random t-stable subspace: a random toral part plus a random set of root
/// spaces, each root kept with probability 1/2.
pub fn random_t_stable_subspace<R: Rng>(alg: &ChevalleyAlgebra, rng: &mut R) -> Subspace {
    let toral = random_toral_subspace(alg, rng);
    let roots: Vec<usize> = (0..alg.root_system().num_roots())
        .filter(|_| rng.random_bool(0.5))
        .map(|i| alg.rank() + i)
        .collect();
    toral
        .sum(&Subspace::coordinate(roots, alg.dim()))
        .expect("same ambient space")
}
