use std::time::Instant;

use chevalley::lie_subspace::{
    centralizer, normalizer, random_t_stable_subspace, random_toral_subspace, t_stable_decompose,
};
use chevalley::orbit::{gauss_fiber_report, minimal_orbit_point, sl2_group_type};
use chevalley::setup::sl2_setup;
use chevalley::{
    ChevalleyAlgebra, Error, Family, GVector, Root, SimpleType, Sl2Classification, Subspace,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{CheckResult, VerifyError};

/// Largest rank any command accepts; E8 has rank 8.
pub const MAX_RANK: usize = 8;

/// Types exercised by the randomized suites.
const PROPERTY_MAX_RANK: usize = 4;

fn algebra(t: SimpleType) -> Result<ChevalleyAlgebra, Error> {
    ChevalleyAlgebra::for_type(t)
}

fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
    let start = Instant::now();
    let r = f();
    r.with_elapsed(start.elapsed())
}

fn check_rank(max_rank: usize) -> Result<(), VerifyError> {
    if max_rank == 0 || max_rank > MAX_RANK {
        return Err(VerifyError::MaxRank(max_rank));
    }
    Ok(())
}

fn rendered_basis(alg: &ChevalleyAlgebra, w: &Subspace) -> Value {
    let rows: Vec<Value> = w
        .basis_vectors()
        .map(|row| json!(alg.rendered(&GVector::new(row.to_vec()))))
        .collect();
    Value::Array(rows)
}

/// The short simple root orbit of G2: the stabilizer of the line through
/// `e_α1` and of the cone tangent there, compared with the explicit lists.
pub fn cmd_verify_g2() -> CheckResult {
    timed(|| {
        let t = SimpleType::new(Family::G, 2).expect("G2 exists");
        let g2 = algebra(t).expect("G2 builds");
        let e = |c: &[i32]| {
            g2.e(&Root::new(c.to_vec()))
                .expect("listed roots are roots")
        };
        let x = e(&[1, 0]);
        let report = match gauss_fiber_report(&g2, &x) {
            Ok(r) => r,
            Err(err) => {
                return CheckResult::asserted(
                    "g2.short-root-orbit",
                    false,
                    json!({"type": t, "error": err.to_string()}),
                )
            }
        };

        let h1 = g2
            .coroot_vector(&Root::new(vec![1, 0]))
            .expect("simple root");
        let h2 = g2
            .coroot_vector(&Root::new(vec![0, 1]))
            .expect("simple root");
        let mut isotropy = vec![h1.clone(), h2];
        isotropy.extend([[1, 0], [3, 1], [3, 2], [0, -1], [-3, -2]].map(|c| e(&c)));
        let mut tangent = vec![h1];
        tangent
            .extend([[1, 0], [1, 1], [2, 1], [3, 1], [0, -1], [-1, -1], [-2, -1]].map(|c| e(&c)));
        let isotropy = Subspace::span(&isotropy, g2.dim()).expect("vectors fit");
        let tangent = Subspace::span(&tangent, g2.dim()).expect("vectors fit");

        let stab_ok = report.line_stabilizer == isotropy;
        let tangent_ok = report.cone_tangent == tangent;
        let equal = report.tangent_stabilizer == report.line_stabilizer;
        let contains = |c: &[i32]| report.cone_tangent.contains(e(c).coords()).unwrap_or(false);
        let has_neg_a2 = contains(&[0, -1]);
        let has_theta = contains(&[3, 2]);
        let ok =
            stab_ok && tangent_ok && equal && report.fiber_dim == 0 && has_neg_a2 && !has_theta;

        let mut details = json!({
            "type": t,
            "point": g2.rendered(&x),
            "dims": report.dims(),
            "line_stabilizer_matches": stab_ok,
            "tangent_matches": tangent_ok,
            "stabilizers_equal": equal,
            "tangent_contains_e[0,-1]": has_neg_a2,
            "tangent_contains_e[3,2]": has_theta,
        });
        if !ok {
            details["line_stabilizer"] = rendered_basis(&g2, &report.line_stabilizer);
            details["cone_tangent"] = rendered_basis(&g2, &report.cone_tangent);
        }
        CheckResult::asserted("g2.short-root-orbit", ok, details)
    })
}

/// Gauss-fiber report at `e_θ` for every type up to `max_rank`.
pub fn cmd_verify_minimal_orbits(max_rank: usize) -> Result<Vec<CheckResult>, VerifyError> {
    check_rank(max_rank)?;
    Ok(SimpleType::all_up_to_rank(max_rank)
        .into_iter()
        .map(|t| {
            timed(|| {
                let id = format!("minimal-orbit.{t}");
                let result = algebra(t).and_then(|alg| {
                    let x = minimal_orbit_point(&alg);
                    let r = gauss_fiber_report(&alg, &x)?;
                    Ok((alg.root_system().highest_root(), r.summary(&alg)))
                });
                match result {
                    Ok((theta, summary)) => {
                        let mut details = json!(summary);
                        details["representative"] = json!("e_theta");
                        details["theta"] = json!(theta);
                        CheckResult::asserted(id, summary.nondegenerate, details)
                    }
                    Err(err) => CheckResult::asserted(
                        id,
                        false,
                        json!({"type": t, "error": err.to_string()}),
                    ),
                }
            })
        })
        .collect())
}

/// Whether `(type, α_i)` is one of the pairs where no string has even
/// length: `A1` and the short simple root of `B_r`.
fn sl2_excluded(t: SimpleType, i: usize) -> bool {
    match t.family() {
        Family::A => t.rank() == 1,
        Family::B => i + 1 == t.rank(),
        _ => false,
    }
}

pub fn cmd_sl2_table(max_rank: usize) -> Result<Vec<CheckResult>, VerifyError> {
    check_rank(max_rank)?;
    let mut out = Vec::new();
    for t in SimpleType::all_up_to_rank(max_rank) {
        let alg = algebra(t)?;
        for (i, alpha) in alg.root_system().simple_roots().into_iter().enumerate() {
            out.push(timed(|| {
                let id = format!("sl2.{t}.{alpha}");
                let expected = if sl2_excluded(t, i) {
                    Sl2Classification::NoEvenModule
                } else {
                    Sl2Classification::ConfirmedSL2
                };
                match sl2_group_type(&alg, &alpha) {
                    Ok(v) => CheckResult::asserted(
                        id,
                        v.classification == expected,
                        json!({
                            "type": t,
                            "alpha": alpha,
                            "classification": v.classification,
                            "expected": expected,
                            "witness": v.witness,
                            "module_dims": v.module_dims,
                        }),
                    ),
                    Err(err) => CheckResult::asserted(
                        id,
                        false,
                        json!({"type": t, "alpha": alpha, "error": err.to_string()}),
                    ),
                }
            }));
        }
    }
    Ok(out)
}

/// One randomized suite over all types up to rank 4, with a separate ChaCha
/// stream per (suite, type).
fn property_check<F>(id: &str, suite: u64, seed: u64, trials: usize, mut trial: F) -> CheckResult
where
    F: FnMut(&ChevalleyAlgebra, &mut ChaCha8Rng) -> Result<(), Value>,
{
    timed(|| {
        let types = SimpleType::all_up_to_rank(PROPERTY_MAX_RANK);
        let mut checked = 0usize;
        let mut counterexample = Value::Null;
        'types: for (k, &t) in types.iter().enumerate() {
            let alg = match algebra(t) {
                Ok(a) => a,
                Err(err) => {
                    counterexample = json!({"type": t, "error": err.to_string()});
                    break;
                }
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(suite << 32 | k as u64);
            for n in 0..trials {
                if let Err(mut witness) = trial(&alg, &mut rng) {
                    witness["type"] = json!(t);
                    witness["trial"] = json!(n);
                    counterexample = witness;
                    break 'types;
                }
                checked += 1;
            }
        }
        CheckResult::asserted(
            id,
            counterexample.is_null(),
            json!({
                "seed": seed,
                "trials_per_type": trials,
                "types": types,
                "checked": checked,
                "counterexample": counterexample,
            }),
        )
    })
}

fn random_basis_triple(alg: &ChevalleyAlgebra, rng: &mut ChaCha8Rng) -> (usize, usize, usize) {
    let n = alg.dim();
    (
        rng.random_range(0..n),
        rng.random_range(0..n),
        rng.random_range(0..n),
    )
}

/// Randomized suites: toral normalizers, t-stable round trips, Jacobi on
/// basis triples and the root-string form of the coroot pairing.
pub fn cmd_property_suite(seed: u64, trials: usize) -> Vec<CheckResult> {
    let toral = property_check("props.toral-normalizer", 0, seed, trials, |alg, rng| {
        let w = random_toral_subspace(alg, rng);
        let n = normalizer(alg, &w).map_err(|e| json!({"error": e.to_string()}))?;
        let c = centralizer(alg, &w).map_err(|e| json!({"error": e.to_string()}))?;
        if n == c {
            Ok(())
        } else {
            Err(json!({
                "w": rendered_basis(alg, &w),
                "normalizer_dim": n.dim(),
                "centralizer_dim": c.dim(),
            }))
        }
    });

    let decompose = property_check("props.t-stable-decompose", 1, seed, trials, |alg, rng| {
        let w = random_t_stable_subspace(alg, rng);
        let fail = |reason: String| json!({"w": rendered_basis(alg, &w), "reason": reason});
        let d = t_stable_decompose(alg, &w).map_err(|e| fail(e.to_string()))?;
        let back = d.reconstitute(alg).map_err(|e| fail(e.to_string()))?;
        if back != w {
            return Err(fail("reconstituted subspace differs".into()));
        }
        if w.dim() != d.toral_dim() + d.root_set.len() {
            return Err(fail(format!(
                "dim {} != {} + {}",
                w.dim(),
                d.toral_dim(),
                d.root_set.len()
            )));
        }
        Ok(())
    });

    let jacobi = property_check("props.jacobi", 2, seed, trials, |alg, rng| {
        let (i, j, k) = random_basis_triple(alg, rng);
        if alg.jacobi_holds(i, j, k) {
            Ok(())
        } else {
            let labels = alg.labels();
            Err(json!({"triple": [
                labels[i].to_string(),
                labels[j].to_string(),
                labels[k].to_string(),
            ]}))
        }
    });

    let pairing = property_check("props.string-pairing", 3, seed, trials, |alg, rng| {
        let rs = alg.root_system();
        let roots = rs.roots();
        let alpha = &roots[rng.random_range(0..roots.len())];
        let beta = &roots[rng.random_range(0..roots.len())];
        if beta == alpha || *beta == -alpha {
            return Ok(());
        }
        let witness = |msg: String| json!({"alpha": alpha, "beta": beta, "reason": msg});
        let (p, q) = rs
            .root_string(beta, alpha)
            .map_err(|e| witness(e.to_string()))?;
        // <β, α^∨> expanded linearly over the simple coroots
        let coeffs = rs
            .coroot_coeffs(alpha)
            .map_err(|e| witness(e.to_string()))?;
        let linear: i64 = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * rs.simple_coroot_pairing(beta, i) as i64)
            .sum();
        if p as i64 - q as i64 == linear && p + q < 4 {
            Ok(())
        } else {
            Err(witness(format!("p = {p}, q = {q}, pairing = {linear}")))
        }
    });

    vec![toral, decompose, jacobi, pairing]
}

/// Identity ledger for `h = sl2(α)` with `s = h_α`. Never fails; the ledger
/// is reported as computed.
pub fn cmd_setup_report(t: SimpleType, alpha: &Root) -> Result<CheckResult, VerifyError> {
    let alg = algebra(t)?;
    let rs = alg.root_system();
    if alpha.rank() != rs.rank() || rs.simple_index(alpha).is_none() {
        return Err(VerifyError::NotSimple {
            alpha: alpha.to_string(),
            simple_type: t,
        });
    }
    let start = Instant::now();
    let inst = sl2_setup(&alg, alpha)?;
    let ledger = inst.check_identities()?;
    let details = json!({
        "type": t,
        "alpha": alpha,
        "s": alg.rendered(&inst.s),
        "dims": {
            "h": inst.h.dim(),
            "n": inst.n.dim(),
            "h0": inst.h0.dim(),
            "m": inst.m.dim(),
        },
        "phi_m": inst.phi_m()?,
        "identities": ledger.identities,
        "centralizer_gap": ledger.centralizer_gap,
    });
    Ok(
        CheckResult::report_only(format!("setup.{t}.{alpha}"), details)
            .with_elapsed(start.elapsed()),
    )
}

/// Everything `verify all` runs.
pub fn run_all(seed: u64, trials: usize) -> Vec<CheckResult> {
    let mut out = vec![cmd_verify_g2()];
    out.extend(cmd_verify_minimal_orbits(MAX_RANK).expect("MAX_RANK is valid"));
    out.extend(cmd_sl2_table(MAX_RANK).expect("MAX_RANK is valid"));
    out.extend(cmd_property_suite(seed, trials));
    out
}
