//! Identity ledger for a subalgebra `h` with a toral point `s`.
//!
//! Given `h` and `s ∈ h ∩ t`, the instance computes `n = n_g(h)`,
//! `h0 = h ∩ t` and a t-stable complement `m` of `n`, then evaluates the
//! chain of subspace identities relating `n`, `h`, and the centralizers of
//! `s`, `h0` and `h`. The identities are derived under geometric hypotheses
//! that a bare `(h, s)` pair need not satisfy, so the ledger records which
//! hold rather than asserting them.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, GVector};
use crate::error::{Error, Result};
use crate::lie_subspace::{
    bracket_span, centralizer, is_subalgebra, is_t_stable, normalizer, root_set,
};
use crate::linalg::{kernel, QMatrix, Rational, Subspace};
use crate::orbit::sl2_alpha;
use crate::roots::Root;

#[derive(Debug, Clone)]
pub struct SetupInstance<'a> {
    pub algebra: &'a ChevalleyAlgebra,
    pub h: Subspace,
    pub s: GVector,
    pub n: Subspace,
    pub h0: Subspace,
    /// t-stable complement of `n`.
    pub m: Subspace,
}

/// Truth value of one identity with the dimensions of its two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
}

/// A root of `c(h0)` that fails to centralize `h`, with a root `partner` of
/// `h` such that `[e_root, e_partner] = N e_result` with `N ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerGapWitness {
    pub root: Root,
    pub partner: Root,
    pub result: Root,
    pub coefficient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityLedger {
    /// Keyed by identity name; per-root entries are `a_alpha_codim1[..]`.
    pub identities: BTreeMap<String, IdentityCheck>,
    /// Roots of `c(h0)` outside `Φ_h ∪ Φ_c(h)`, each with a bracket witness.
    pub centralizer_gap: Vec<CentralizerGapWitness>,
}

pub const N_EQ_H_PLUS_CS: &str = "n_eq_h_plus_cs";
pub const PHI_PARTITION: &str = "phi_partition";
pub const CS_SANDWICH: &str = "cs_sandwich";
pub const N_EQ_H_PLUS_CH0: &str = "n_eq_h_plus_ch0";
pub const BRACKET_GH_IN_H_PLUS_M: &str = "bracket_gh_in_h_plus_m";
pub const N_EQ_H_PLUS_CH_PLUS_T: &str = "n_eq_h_plus_ch_plus_t";
pub const H0_DIM: &str = "h0_dim";

pub fn a_alpha_key(alpha: &Root) -> String {
    format!("a_alpha_codim1{alpha}")
}

impl IdentityLedger {
    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.identities.get(name)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.holds)
    }
}

/// Builds `(h, s)` with `n`, `h0` and the deterministic complement `m`:
/// root spaces of roots outside `Φ_n`, plus the `h_i` whose index is not a
/// pivot column of `n ∩ t`.
pub fn build_setup<'a>(
    alg: &'a ChevalleyAlgebra,
    h: Subspace,
    s: GVector,
) -> Result<SetupInstance<'a>> {
    if h.ambient_dim() != alg.dim() {
        return Err(Error::AmbientMismatch {
            left: alg.dim(),
            right: h.ambient_dim(),
        });
    }
    if s.len() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: s.len(),
        });
    }
    if !is_subalgebra(alg, &h)? {
        return Err(Error::NotSubalgebra);
    }
    if h.dim() < 2 {
        return Err(Error::SubalgebraTooSmall(h.dim()));
    }
    let t = alg.cartan_subalgebra();
    let h0 = h.intersect(&t)?;
    if !h0.contains(s.coords())? {
        return Err(Error::PointNotInToralPart);
    }
    let n = normalizer(alg, &h)?;
    if !is_t_stable(alg, &n)? {
        return Err(Error::NormalizerNotTStable);
    }
    let n_roots: BTreeSet<Root> = root_set(alg, &n)?.into_iter().collect();
    let nt = n.intersect(&t)?;
    let mut coords: Vec<usize> = (0..alg.rank())
        .filter(|i| !nt.pivot_columns().contains(i))
        .collect();
    for a in alg.root_system().roots() {
        if !n_roots.contains(a) {
            coords.push(alg.root_coordinate(a)?);
        }
    }
    let m = Subspace::coordinate(coords, alg.dim());
    debug_assert_eq!(n.dim() + m.dim(), alg.dim());
    Ok(SetupInstance {
        algebra: alg,
        h,
        s,
        n,
        h0,
        m,
    })
}

/// `h = sl2(α)` with `s = h_α`.
pub fn sl2_setup<'a>(alg: &'a ChevalleyAlgebra, alpha: &Root) -> Result<SetupInstance<'a>> {
    let h = sl2_alpha(alg, alpha)?;
    let s = alg.coroot_vector(alpha)?;
    build_setup(alg, h, s)
}

fn equality(a: &Subspace, b: &Subspace) -> IdentityCheck {
    IdentityCheck {
        holds: a == b,
        lhs_dim: a.dim(),
        rhs_dim: b.dim(),
    }
}

fn inclusion(a: &Subspace, b: &Subspace) -> Result<IdentityCheck> {
    Ok(IdentityCheck {
        holds: b.contains_subspace(a)?,
        lhs_dim: a.dim(),
        rhs_dim: b.dim(),
    })
}

impl SetupInstance<'_> {
    pub fn phi_m(&self) -> Result<Vec<Root>> {
        root_set(self.algebra, &self.m)
    }

    fn line(&self, v: &GVector) -> Result<Subspace> {
        Subspace::span(&[v], self.algebra.dim())
    }

    /// Every identity recomputed from subspaces.
    pub fn check_identities(&self) -> Result<IdentityLedger> {
        let alg = self.algebra;
        let t = alg.cartan_subalgebra();
        let cs = centralizer(alg, &self.line(&self.s)?)?;
        let ch0 = centralizer(alg, &self.h0)?;
        let ch = centralizer(alg, &self.h)?;
        let h_plus_cs = self.h.sum(&cs)?;
        let h_plus_ch0 = self.h.sum(&ch0)?;

        let mut ids = BTreeMap::new();
        ids.insert(N_EQ_H_PLUS_CS.to_string(), equality(&self.n, &h_plus_cs));

        let phi_m: BTreeSet<Root> = self.phi_m()?.into_iter().collect();
        let phi_h: BTreeSet<Root> = root_set(alg, &self.h)?.into_iter().collect();
        let phi_cs: BTreeSet<Root> = root_set(alg, &cs)?.into_iter().collect();
        let phi_h_cs: BTreeSet<Root> = phi_h.union(&phi_cs).cloned().collect();
        let all = alg.root_system().num_roots();
        let disjoint = phi_m.is_disjoint(&phi_h_cs);
        ids.insert(
            PHI_PARTITION.to_string(),
            IdentityCheck {
                holds: disjoint && phi_m.len() + phi_h_cs.len() == all,
                lhs_dim: all,
                rhs_dim: phi_m.len() + phi_h_cs.len(),
            },
        );

        let lower = cs.contains_subspace(&ch0)?;
        let upper = h_plus_ch0.contains_subspace(&cs)?;
        ids.insert(
            CS_SANDWICH.to_string(),
            IdentityCheck {
                holds: lower && upper,
                lhs_dim: cs.dim(),
                rhs_dim: h_plus_ch0.dim(),
            },
        );
        ids.insert(N_EQ_H_PLUS_CH0.to_string(), equality(&self.n, &h_plus_ch0));

        for alpha in &phi_m {
            let (a, codim) = self.check_a_alpha(alpha)?;
            ids.insert(
                a_alpha_key(alpha),
                IdentityCheck {
                    holds: codim == 1,
                    lhs_dim: self.h0.dim(),
                    rhs_dim: a.dim(),
                },
            );
        }

        let gh = bracket_span(alg, &Subspace::full(alg.dim()), &self.h)?;
        ids.insert(
            BRACKET_GH_IN_H_PLUS_M.to_string(),
            inclusion(&gh, &self.h.sum(&self.m)?)?,
        );
        ids.insert(
            N_EQ_H_PLUS_CH_PLUS_T.to_string(),
            equality(&self.n, &self.h.sum(&ch)?.sum(&t)?),
        );
        ids.insert(
            H0_DIM.to_string(),
            IdentityCheck {
                holds: self.h0.dim() == 1,
                lhs_dim: self.h0.dim(),
                rhs_dim: 1,
            },
        );

        let phi_ch0 = root_set(alg, &ch0)?;
        let phi_ch: BTreeSet<Root> = root_set(alg, &ch)?.into_iter().collect();
        let mut centralizer_gap = Vec::new();
        for a in phi_ch0 {
            if phi_h.contains(&a) || phi_ch.contains(&a) {
                continue;
            }
            if let Some(w) = phi_h.iter().find_map(|b| {
                let n = alg.structure_constant(&a, b).ok()?;
                (n != 0).then(|| CentralizerGapWitness {
                    root: a.clone(),
                    partner: b.clone(),
                    result: a.add(b),
                    coefficient: n,
                })
            }) {
                centralizer_gap.push(w);
            }
        }

        Ok(IdentityLedger {
            identities: ids,
            centralizer_gap,
        })
    }

    /// `a_α = h0 ∩ ker α` and its codimension in `h0`, for `α ∈ Φ_m`.
    pub fn check_a_alpha(&self, alpha: &Root) -> Result<(Subspace, usize)> {
        if !self.phi_m()?.contains(alpha) {
            return Err(Error::RootNotInComplement(alpha.to_string()));
        }
        let alg = self.algebra;
        let rs = alg.root_system();
        let mut functional = vec![Rational::from_integer(0.into()); alg.dim()];
        for (i, x) in functional.iter_mut().enumerate().take(alg.rank()) {
            *x = Rational::from_integer(rs.simple_coroot_pairing(alpha, i).into());
        }
        let ker = kernel(&QMatrix::from_rows(vec![functional], alg.dim())?);
        let a = self.h0.intersect(&ker)?;
        let codim = self.h0.dim() - a.dim();
        Ok((a, codim))
    }
}

pub fn check_identities(inst: &SetupInstance<'_>) -> Result<IdentityLedger> {
    inst.check_identities()
}

pub fn check_a_alpha(inst: &SetupInstance<'_>, alpha: &Root) -> Result<(Subspace, usize)> {
    inst.check_a_alpha(alpha)
}
