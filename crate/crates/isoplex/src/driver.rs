//! The solve loop: test every face, refine where a face resists, repeat.
//!
//! Faces are tested in a fixed order (higher-dimensional first, then by
//! vertex ids). The first failure picks a fan edge to bisect via
//! [`Decomposition::choose_refinement_edge`]; only faces touched by the split
//! are retested, every other certificate stays valid. The loop ends when a
//! full pass certifies every face, or when the refinement budget runs out.
//!
//! With `threads > 1` the dirty faces of a pass are tested in parallel
//! chunks, but outcomes are consumed strictly in order, so the resulting
//! decomposition, certificates, and statistics are identical to a sequential
//! run.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use crate::criterion::{test_face, CertNode, FaceOutcome, GradientCache, Guards, TildeValues};
use crate::poly::PolySystem;
use crate::simplex::{Decomposition, VertexId};

/// Knobs of the solve loop.
#[derive(Clone, Debug)]
pub struct SolveParams {
    /// Split-tree depth budget per face test.
    pub max_splits: usize,
    /// Fan refinement budget for the whole run.
    pub max_refinements: usize,
    /// Float margins for the face tests.
    pub guards: Guards,
    /// Worker threads; `1` runs fully sequentially.
    pub threads: usize,
    /// Seed recorded for downstream randomized consumers (reports, checks);
    /// the solve loop itself is deterministic.
    pub seed: u64,
}

impl Default for SolveParams {
    fn default() -> Self {
        SolveParams {
            max_splits: 32,
            max_refinements: 10_000,
            guards: Guards::default(),
            threads: 1,
            seed: 0,
        }
    }
}

/// Per-face certificate with its split-tree statistics.
#[derive(Clone, Debug)]
pub struct FaceCert {
    pub node: CertNode,
    pub leaves: usize,
    pub depth: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    /// Every face of the final fan carries a certificate.
    Certified,
    /// The refinement budget ran out with at least one failing face.
    BudgetExhausted,
}

/// What a verified certificate establishes, in one sentence. For a single
/// equation the piecewise-linear model is ambient-isotopic to the projective
/// zero set; for systems of several equations the certified condition is the
/// same convex-position test, but the step from there to an isotopy is
/// conjectural, and reports should say so.
pub fn guarantee_statement(m: usize) -> &'static str {
    if m == 1 {
        "the model is ambient-isotopic to the projective zero set"
    } else {
        "every sign pattern passes the convex-position test; the isotopy \
         conclusion for multi-equation systems is conjectural"
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    pub refinements: usize,
    pub face_tests: usize,
    pub final_cones: usize,
    pub final_faces: usize,
    pub max_split_depth: usize,
    pub total_leaves: usize,
    pub wall: Duration,
}

pub struct SolveResult {
    pub status: SolveStatus,
    pub decomp: Decomposition,
    pub tilde: TildeValues,
    pub certs: BTreeMap<Vec<VertexId>, FaceCert>,
    pub stats: SolveStats,
}

/// Dirty faces in test order: dimension descending, then vertex ids.
fn ordered(dirty: &BTreeSet<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    let mut faces: Vec<Vec<VertexId>> = dirty.iter().cloned().collect();
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces
}

pub fn solve(sys: &PolySystem, params: &SolveParams) -> SolveResult {
    let start = Instant::now();
    let mut decomp = Decomposition::initial(sys.nvars());
    let mut tilde = TildeValues::new(sys, &decomp);
    let mut grads = GradientCache::new(&decomp, &tilde);
    let mut certs: BTreeMap<Vec<VertexId>, FaceCert> = BTreeMap::new();
    let mut dirty: BTreeSet<Vec<VertexId>> = decomp.faces();
    let mut stats = SolveStats::default();
    let pool = (params.threads > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(params.threads)
            .build()
            .expect("thread pool")
    });

    let status = 'outer: loop {
        let faces = ordered(&dirty);
        let mut failed: Option<Vec<VertexId>> = None;
        if let Some(pool) = &pool {
            // parallel pass in chunks, consumed in order: identical outcome
            // to the sequential path, bounded wasted work past a failure
            let chunk = 4 * params.threads;
            'pass: for block in faces.chunks(chunk) {
                let outcomes: Vec<(Vec<VertexId>, FaceOutcome)> = pool.install(|| {
                    use rayon::prelude::*;
                    block
                        .par_iter()
                        .map(|f| {
                            (
                                f.clone(),
                                test_face(
                                    sys,
                                    &decomp,
                                    &tilde,
                                    &grads,
                                    f,
                                    params.max_splits,
                                    &params.guards,
                                ),
                            )
                        })
                        .collect()
                });
                for (f, outcome) in outcomes {
                    stats.face_tests += 1;
                    match outcome {
                        FaceOutcome::Certified {
                            cert,
                            leaves,
                            max_depth,
                        } => {
                            dirty.remove(&f);
                            certs.insert(
                                f,
                                FaceCert {
                                    node: cert,
                                    leaves,
                                    depth: max_depth,
                                },
                            );
                        }
                        FaceOutcome::Failed => {
                            failed = Some(f);
                            break 'pass;
                        }
                    }
                }
            }
        } else {
            for f in faces {
                stats.face_tests += 1;
                match test_face(
                    sys,
                    &decomp,
                    &tilde,
                    &grads,
                    &f,
                    params.max_splits,
                    &params.guards,
                ) {
                    FaceOutcome::Certified {
                        cert,
                        leaves,
                        max_depth,
                    } => {
                        dirty.remove(&f);
                        certs.insert(
                            f,
                            FaceCert {
                                node: cert,
                                leaves,
                                depth: max_depth,
                            },
                        );
                    }
                    FaceOutcome::Failed => {
                        failed = Some(f);
                        break;
                    }
                }
            }
        }
        let face = match failed {
            None => break 'outer SolveStatus::Certified,
            Some(f) => f,
        };
        if stats.refinements >= params.max_refinements {
            // leave the failing face dirty so callers can see what resisted
            break 'outer SolveStatus::BudgetExhausted;
        }
        let (a, b) = decomp.choose_refinement_edge(&face);
        log::debug!(
            "refinement {}: face {face:?} failed, bisecting edge ({a}, {b})",
            stats.refinements + 1
        );
        let delta = decomp.refine(a, b);
        tilde.extend(sys, &decomp);
        grads.refresh(&decomp, &tilde, &delta);
        stats.refinements += 1;
        let current = decomp.faces();
        let newly_dirty = delta.dirty_faces(&decomp);
        certs.retain(|f, _| current.contains(f) && !newly_dirty.contains(f));
        dirty = dirty
            .into_iter()
            .chain(newly_dirty)
            .filter(|f| current.contains(f))
            .collect();
    };

    stats.final_cones = decomp.num_cones();
    stats.final_faces = decomp.faces().len();
    stats.max_split_depth = certs.values().map(|c| c.depth).max().unwrap_or(0);
    stats.total_leaves = certs.values().map(|c| c.leaves).sum();
    stats.wall = start.elapsed();
    SolveResult {
        status,
        decomp,
        tilde,
        certs,
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Sign;
    use crate::parse::parse_system;

    #[test]
    fn conic_certifies_without_refinement() {
        let sys = parse_system("x0^2 + x1^2 - x2^2\n").unwrap();
        let r = solve(&sys, &SolveParams::default());
        assert_eq!(r.status, SolveStatus::Certified);
        assert_eq!(r.stats.refinements, 0);
        assert_eq!(r.stats.final_cones, 8);
        assert_eq!(r.certs.len(), 26);
        assert_eq!(r.stats.max_split_depth, 0);
    }

    #[test]
    fn positive_form_certifies_immediately() {
        let sys = parse_system("x0^2 + x1^2 + x2^2\n").unwrap();
        let r = solve(&sys, &SolveParams::default());
        assert_eq!(r.status, SolveStatus::Certified);
        assert_eq!(r.stats.refinements, 0);
        assert_eq!(r.stats.max_split_depth, 0);
        // vertex faces see one strictly positive value: sign-certified
        // (edges like {+e0, +e1} have a vanishing cross coefficient and fall
        // through to the gradient test, which is fine)
        for (f, cert) in &r.certs {
            if f.len() == 1 {
                assert!(
                    matches!(
                        cert.node,
                        CertNode::Sign {
                            poly: 0,
                            sign: Sign::Pos
                        }
                    ),
                    "{f:?}: {:?}",
                    cert.node
                );
            }
        }
    }

    #[test]
    fn perturbed_circle_needs_refinement_and_certifies() {
        let sys = parse_system(
            "x0^4 + 2 x0^2 x1^2 - 2 x0^2 x2^2 + x1^4 - 2 x1^2 x2^2 + x2^4 + 1/2 x0^3 x1 - 1/2 x0 x1^3\n",
        )
        .unwrap();
        let r = solve(&sys, &SolveParams::default());
        assert_eq!(r.status, SolveStatus::Certified);
        assert!(r.stats.refinements > 0, "coarse fan cannot certify this");
        assert_eq!(r.certs.len(), r.stats.final_faces);
        // every live face holds a certificate
        for f in r.decomp.faces() {
            assert!(r.certs.contains_key(&f), "missing certificate for {f:?}");
        }
    }

    #[test]
    fn budget_exhaustion_reports_honestly() {
        let sys = parse_system(
            "x0^4 + 2 x0^2 x1^2 - 2 x0^2 x2^2 + x1^4 - 2 x1^2 x2^2 + x2^4 + 1/2 x0^3 x1 - 1/2 x0 x1^3\n",
        )
        .unwrap();
        let params = SolveParams {
            max_refinements: 1,
            ..SolveParams::default()
        };
        let r = solve(&sys, &params);
        assert_eq!(r.status, SolveStatus::BudgetExhausted);
        assert_eq!(r.stats.refinements, 1);
    }

    #[test]
    fn singular_system_exhausts_budget() {
        // x0 x1 has a singular zero set through +-e2: never certifies
        let sys = parse_system("x0 x1 + 0 x2^2\n").unwrap();
        let params = SolveParams {
            max_refinements: 5,
            ..SolveParams::default()
        };
        let r = solve(&sys, &params);
        assert_eq!(r.status, SolveStatus::BudgetExhausted);
    }

    #[test]
    fn two_equations_in_projective_three_space() {
        // conic cylinder cut by a hyperplane: a circle in P^3
        let sys = parse_system("x0^2 + x1^2 - x3^2\nx2\n").unwrap();
        assert_eq!(sys.m(), 2);
        let r = solve(&sys, &SolveParams::default());
        assert_eq!(r.status, SolveStatus::Certified);
        for cert in r.certs.values() {
            if let CertNode::Sep { witnesses } = &cert.node {
                // two equations: two canonical sign orbits per leaf
                assert_eq!(witnesses.len(), 2);
            }
        }
    }

    #[test]
    fn parallel_run_matches_sequential() {
        let sys = parse_system(
            "x0^4 + 2 x0^2 x1^2 - 2 x0^2 x2^2 + x1^4 - 2 x1^2 x2^2 + x2^4 + 1/2 x0^3 x1 - 1/2 x0 x1^3\n",
        )
        .unwrap();
        let seq = solve(&sys, &SolveParams::default());
        let par = solve(
            &sys,
            &SolveParams {
                threads: 3,
                ..SolveParams::default()
            },
        );
        assert_eq!(seq.status, par.status);
        assert_eq!(seq.stats.refinements, par.stats.refinements);
        assert_eq!(seq.stats.face_tests, par.stats.face_tests);
        assert_eq!(seq.decomp.num_cones(), par.decomp.num_cones());
        assert_eq!(seq.decomp.faces(), par.decomp.faces());
        let sk: Vec<_> = seq.certs.keys().cloned().collect();
        let pk: Vec<_> = par.certs.keys().cloned().collect();
        assert_eq!(sk, pk);
        for (f, c) in &seq.certs {
            assert_eq!(&par.certs[f].node, &c.node, "certificate differs at {f:?}");
        }
    }

    #[test]
    fn solve_runs_are_reproducible() {
        let sys = parse_system(
            "x0^4 + 2 x0^2 x1^2 - 2 x0^2 x2^2 + x1^4 - 2 x1^2 x2^2 + x2^4 + 1/20 x0^3 x1 - 1/20 x0 x1^3\n",
        )
        .unwrap();
        let a = solve(&sys, &SolveParams::default());
        let b = solve(&sys, &SolveParams::default());
        assert_eq!(a.stats.refinements, b.stats.refinements);
        assert_eq!(a.decomp.faces(), b.decomp.faces());
        for (f, c) in &a.certs {
            assert_eq!(&b.certs[f].node, &c.node);
        }
    }
}
