//! Adjoint orbits in the projectivized algebra: cone tangent spaces, Gauss
//! fiber dimensions via stabilizer comparison, and `sl2(α)` subalgebras.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, GVector, RenderedVector};
use crate::error::{Error, Result};
use crate::lie_subspace::normalizer;
use crate::linalg::{Rational, Subspace};
use crate::roots::{Root, SimpleType};

/// Stabilizer data of the orbit through `[x]`.
///
/// `fiber_dim` is `dim n(T) - dim n(Cx)` where `T` is the tangent space of
/// the affine cone at `x`. By equivariance this is the dimension of the
/// Gauss-map fiber through `[x]` of the orbit closure `G.[x]`; it is a
/// statement about that orbit, not about the generic fiber of an arbitrary
/// variety through `[x]`.
#[derive(Debug, Clone)]
pub struct GaussFiberReport {
    pub point: GVector,
    pub line_stabilizer: Subspace,
    pub cone_tangent: Subspace,
    pub tangent_stabilizer: Subspace,
    pub orbit_dim_in_pg: usize,
    pub tangent_dim: usize,
    pub fiber_dim: usize,
    pub nondegenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReportDims {
    pub line_stab: usize,
    pub tangent: usize,
    pub tangent_stab: usize,
    pub orbit: usize,
    pub fiber: usize,
}

/// JSON form of a [`GaussFiberReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussFiberSummary {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub point: RenderedVector,
    pub dims: ReportDims,
    pub nondegenerate: bool,
}

impl GaussFiberReport {
    pub fn dims(&self) -> ReportDims {
        ReportDims {
            line_stab: self.line_stabilizer.dim(),
            tangent: self.tangent_dim,
            tangent_stab: self.tangent_stabilizer.dim(),
            orbit: self.orbit_dim_in_pg,
            fiber: self.fiber_dim,
        }
    }

    pub fn summary(&self, alg: &ChevalleyAlgebra) -> GaussFiberSummary {
        GaussFiberSummary {
            simple_type: alg.simple_type(),
            point: alg.rendered(&self.point),
            dims: self.dims(),
            nondegenerate: self.nondegenerate,
        }
    }
}

/// `fiber + [g, x]`; with no fiber, `Cx + [g, x]`.
pub fn cone_tangent(
    alg: &ChevalleyAlgebra,
    x: &GVector,
    fiber: Option<&Subspace>,
) -> Result<Subspace> {
    if x.len() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: x.len(),
        });
    }
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    let base = match fiber {
        Some(f) => {
            if !f.contains(x.coords())? {
                return Err(Error::PointNotInFiber);
            }
            f.clone()
        }
        None => Subspace::span(&[x], alg.dim())?,
    };
    let xs = x.sparse();
    let image: Vec<Vec<Rational>> = (0..alg.dim())
        .map(|i| alg.bracket_basis_with(i, &xs))
        .collect();
    base.sum(&Subspace::span(&image, alg.dim())?)
}

pub fn gauss_fiber_report(alg: &ChevalleyAlgebra, x: &GVector) -> Result<GaussFiberReport> {
    let tangent = cone_tangent(alg, x, None)?;
    let line = Subspace::span(&[x], alg.dim())?;
    let line_stabilizer = normalizer(alg, &line)?;
    let tangent_stabilizer = normalizer(alg, &tangent)?;
    debug_assert!(tangent_stabilizer
        .contains_subspace(&line_stabilizer)
        .unwrap_or(false));
    let orbit_dim_in_pg = alg.dim() - line_stabilizer.dim();
    let fiber_dim = tangent_stabilizer.dim() - line_stabilizer.dim();
    Ok(GaussFiberReport {
        point: x.clone(),
        tangent_dim: tangent.dim(),
        line_stabilizer,
        cone_tangent: tangent,
        tangent_stabilizer,
        orbit_dim_in_pg,
        fiber_dim,
        nondegenerate: fiber_dim == 0,
    })
}

/// `e_θ` for the highest root θ; spans the closed orbit in `P(g)`.
pub fn minimal_orbit_point(alg: &ChevalleyAlgebra) -> GVector {
    alg.e(&alg.root_system().highest_root())
        .expect("the highest root is a root")
}

/// `e_α` for the first long simple root α. Lies in the same orbit as `e_θ`.
pub fn long_simple_root_point(alg: &ChevalleyAlgebra) -> GVector {
    let rs = alg.root_system();
    let alpha = rs
        .simple_roots()
        .into_iter()
        .find(|a| rs.is_long(a).unwrap_or(false))
        .expect("some simple root is long");
    alg.e(&alpha).expect("simple roots are roots")
}

/// `sl2(α) = g_α + t_α + g_-α`.
pub fn sl2_alpha(alg: &ChevalleyAlgebra, alpha: &Root) -> Result<Subspace> {
    let e = alg.e(alpha)?;
    let f = alg.e(&-alpha)?;
    let h = alg.coroot_vector(alpha)?;
    Subspace::span(&[e, h, f], alg.dim())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sl2Classification {
    /// Some α-string has even length, so the connected subgroup of `sl2(α)`
    /// has an even-dimensional irreducible module and is `SL2`.
    ConfirmedSL2,
    /// Every α-string has odd length. This does not by itself identify the
    /// subgroup as `PSL2`.
    NoEvenModule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Witness {
    pub beta: Root,
    pub pairing: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Verdict {
    pub alpha: Root,
    pub classification: Sl2Classification,
    /// For simple α: the first simple β with `<β, α^∨>` equal to -1 or -3.
    pub witness: Option<Sl2Witness>,
    /// Lengths of the α-strings through roots other than ±α, sorted.
    pub module_dims: Vec<usize>,
}

pub fn sl2_group_type(alg: &ChevalleyAlgebra, alpha: &Root) -> Result<Sl2Verdict> {
    let rs = alg.root_system();
    rs.require(alpha)?;
    let neg = -alpha;
    // each string is identified by its bottom root β - pα
    let mut bottoms: BTreeSet<(Root, usize)> = BTreeSet::new();
    for beta in rs.roots() {
        if beta == alpha || *beta == neg {
            continue;
        }
        let (p, q) = rs.root_string(beta, alpha)?;
        bottoms.insert((beta.sub(&alpha.scaled(p as i32)), p + q + 1));
    }
    let mut module_dims: Vec<usize> = bottoms.into_iter().map(|(_, len)| len).collect();
    module_dims.sort_unstable();
    let classification = if module_dims.iter().any(|d| d % 2 == 0) {
        Sl2Classification::ConfirmedSL2
    } else {
        Sl2Classification::NoEvenModule
    };
    let witness = match rs.simple_index(alpha) {
        Some(_) => rs
            .simple_roots()
            .into_iter()
            .filter(|b| b != alpha)
            .map(|b| {
                let pairing = rs.pairing(&b, alpha)?;
                Ok(Sl2Witness { beta: b, pairing })
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .find(|w| w.pairing == -1 || w.pairing == -3),
        None => None,
    };
    Ok(Sl2Verdict {
        alpha: alpha.clone(),
        classification,
        witness,
        module_dims,
    })
}
