//! The per-face acceptance test behind the solver's topology guarantee.
//!
//! The fan induces a piecewise-linear interpolant of the polynomial system:
//! on each cone it is the linear function matching the system's values at the
//! integer rays. The zero set of that interpolant is isotopic to the true
//! zero set once every face of the fan passes one of two tests on the region
//! where true and interpolated signs could disagree:
//!
//! * **sign test** — some equation and its interpolant are both strictly
//!   positive, or both strictly negative, on the whole (sub-)face; then the
//!   disagreement region misses it entirely;
//! * **gradient test** — the origin is strictly separated from the convex
//!   hull pooling the equation gradients over the face with the interpolant
//!   gradients of every neighbouring cone, under every relative sign flip of
//!   the equations; this pins the interpolant's zero set to a product
//!   structure transverse to the true one.
//!
//! Either test may start succeeding only after binary subdivision of the
//! face, so each face carries a bounded-depth split tree whose leaves record
//! which test passed and with what witness. Everything here runs in floats;
//! the witnesses are replayed exactly by the certificate checker.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{rat_to_f64, solve_mat, Sign};
use crate::bernstein::{matrix_form, BernsteinForm};
use crate::poly::{gradient_terms, substitute_terms, PolySystem, Terms};
use crate::simplex::{ConeId, Decomposition, RefineDelta, VertexId};

/// Strictness margins for the float phase. Accepting only verdicts that hold
/// by a margin keeps the later exact replay from overturning them.
#[derive(Clone, Copy, Debug)]
pub struct Guards {
    /// Relative margin a one-signed coefficient list must clear.
    pub sign: f64,
    /// Geometric margin (on max-normalized generators) a separating
    /// direction must clear.
    pub sep: f64,
    /// Norm below which the min-norm search concedes the origin is inside.
    pub min_norm: f64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            sign: 1e-9,
            sep: 1e-9,
            min_norm: MIN_NORM_TOL,
        }
    }
}

/// Tolerance below which the min-norm search declares the origin inside.
pub const MIN_NORM_TOL: f64 = 9.313225746154785e-10; // 2^-30

/// Values of every equation at every ray of the fan: the data defining the
/// piecewise-linear interpolant.
#[derive(Clone, Debug)]
pub struct TildeValues {
    exact: Vec<Vec<BigRational>>,
    float: Vec<Vec<f64>>,
}

impl TildeValues {
    pub fn new(sys: &PolySystem, decomp: &Decomposition) -> Self {
        let mut t = TildeValues {
            exact: Vec::new(),
            float: Vec::new(),
        };
        t.extend(sys, decomp);
        t
    }

    /// Exact values per ray, one row per vertex in id order.
    pub fn exact_rows(&self) -> &[Vec<BigRational>] {
        &self.exact
    }

    /// Compute values for rays added since the last call.
    pub fn extend(&mut self, sys: &PolySystem, decomp: &Decomposition) {
        for v in self.exact.len()..decomp.num_vertices() {
            let ray: Vec<BigRational> = decomp
                .ray(v)
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect();
            let vals: Vec<BigRational> = sys.polys().iter().map(|p| p.eval_rat(&ray)).collect();
            self.float.push(vals.iter().map(rat_to_f64).collect());
            self.exact.push(vals);
        }
    }

    pub fn exact(&self, v: VertexId, poly: usize) -> &BigRational {
        &self.exact[v][poly]
    }

    pub fn float(&self, v: VertexId, poly: usize) -> f64 {
        self.float[v][poly]
    }

    pub fn num_vertices(&self) -> usize {
        self.exact.len()
    }
}

/// Per-cone gradients of the interpolant, cached in both float and exact
/// integer-cleared form; the gradient of a linear function on a
/// full-dimensional cone is the unique vector matching the ray values.
#[derive(Clone, Debug, Default)]
pub struct GradientCache {
    map: HashMap<ConeId, Option<Vec<Vec<f64>>>>,
    exact: HashMap<ConeId, Option<Vec<Vec<BigInt>>>>,
}

/// Gradient vectors (one per equation) of the interpolant on one cone, or
/// `None` when the float solve degenerates.
pub fn cone_gradients(
    decomp: &Decomposition,
    tilde: &TildeValues,
    cone: ConeId,
) -> Option<Vec<Vec<f64>>> {
    let vs = decomp.cone(cone);
    let dim = decomp.dim();
    let m = tilde.exact[0].len();
    // rows of R^T are the rays; solve R^T c_i = values_i for all i at once
    let a: Vec<Vec<f64>> = decomp.float_columns(vs);
    let b: Vec<Vec<f64>> = vs
        .iter()
        .map(|&v| (0..m).map(|i| tilde.float(v, i)).collect())
        .collect();
    let x = solve_mat(&a, &b)?;
    if x.iter().flatten().any(|c| !c.is_finite()) {
        return None;
    }
    Some(
        (0..m)
            .map(|i| (0..dim).map(|r| x[r][i]).collect())
            .collect(),
    )
}

impl GradientCache {
    pub fn new(decomp: &Decomposition, tilde: &TildeValues) -> Self {
        let mut g = GradientCache::default();
        for c in decomp.cone_ids() {
            g.insert(decomp, tilde, c);
        }
        g
    }

    fn insert(&mut self, decomp: &Decomposition, tilde: &TildeValues, c: ConeId) {
        self.map.insert(c, cone_gradients(decomp, tilde, c));
        self.exact.insert(
            c,
            crate::verify::exact_cone_gradient_rows(decomp, tilde.exact_rows(), c),
        );
    }

    /// Keep the cache aligned with one refinement step.
    pub fn refresh(&mut self, decomp: &Decomposition, tilde: &TildeValues, delta: &RefineDelta) {
        for (c, _) in &delta.removed {
            self.map.remove(c);
            self.exact.remove(c);
        }
        for &c in &delta.added {
            self.insert(decomp, tilde, c);
        }
    }

    pub fn get(&self, c: ConeId) -> Option<&Vec<Vec<f64>>> {
        self.map.get(&c).and_then(|o| o.as_ref())
    }

    pub(crate) fn get_exact(&self, c: ConeId) -> Option<&Vec<Vec<BigInt>>> {
        self.exact.get(&c).and_then(|o| o.as_ref())
    }
}

/// One node of a face's split tree. Leaves certify a region; `Split` bisects
/// the chart edge between local columns `edge.0` and `edge.1`, left keeping
/// column `edge.0`.
#[derive(Clone, Debug, PartialEq)]
pub enum CertNode {
    Split {
        edge: (usize, usize),
        left: Box<CertNode>,
        right: Box<CertNode>,
    },
    /// Equation `poly` and its interpolant both hold sign `sign` strictly.
    Sign { poly: usize, sign: Sign },
    /// For every canonical sign flip of the equations, a direction with
    /// strictly positive inner product against all pooled gradients.
    Sep {
        witnesses: Vec<(Vec<Sign>, Vec<f64>)>,
    },
}

/// Result of testing one face.
#[derive(Clone, Debug)]
pub enum FaceOutcome {
    Certified {
        cert: CertNode,
        leaves: usize,
        max_depth: usize,
    },
    /// Some region resisted both tests at the split budget (or the face is a
    /// single ray, which cannot split).
    Failed,
}

/// Canonical sign flips: the first equation is never flipped, since negating
/// every generator mirrors the witness.
pub fn sign_orbits(m: usize) -> Vec<Vec<Sign>> {
    assert!(m >= 1);
    let mut out = Vec::with_capacity(1 << (m - 1));
    for mask in 0..(1u32 << (m - 1)) {
        let mut sigma = vec![Sign::Pos];
        for i in 0..m - 1 {
            sigma.push(if mask >> i & 1 == 1 {
                Sign::Neg
            } else {
                Sign::Pos
            });
        }
        out.push(sigma);
    }
    out
}

/// One-signed with a relative margin: all entries strictly positive (or all
/// strictly negative) and the smallest magnitude clears `guard` times the
/// largest.
fn uniform_sign(coefs: impl Iterator<Item = f64>, guard: f64) -> Option<Sign> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for c in coefs {
        lo = lo.min(c);
        hi = hi.max(c);
    }
    let scale = lo.abs().max(hi.abs());
    if lo > guard * scale && lo > 0.0 {
        Some(Sign::Pos)
    } else if hi < -guard * scale && hi < 0.0 {
        Some(Sign::Neg)
    } else {
        None
    }
}

/// Pooled gradient test: matrices are the Jacobian's Bernstein coefficient
/// matrices plus the interpolant gradient matrix of every neighbouring cone;
/// each sign orbit must admit a separating direction with geometric margin.
fn gradient_test(
    jac: &BernsteinForm<f64>,
    coface_mats: &[&Vec<Vec<f64>>],
    m: usize,
    ambient: usize,
    guards: &Guards,
) -> Option<Vec<(Vec<Sign>, Vec<f64>)>> {
    let mut rows_by_poly: Vec<Vec<Vec<f64>>> = vec![Vec::new(); m];
    for entry in jac.entries() {
        for i in 0..m {
            rows_by_poly[i].push(entry[i * ambient..(i + 1) * ambient].to_vec());
        }
    }
    for mat in coface_mats {
        for i in 0..m {
            rows_by_poly[i].push(mat[i].clone());
        }
    }
    // normalize each generator by its largest magnitude; positive scaling
    // changes neither hull membership nor strict separation
    for rows in rows_by_poly.iter_mut() {
        for r in rows.iter_mut() {
            let s = r.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
            if s == 0.0 {
                return None; // zero gradient: the origin is trivially inside
            }
            for x in r.iter_mut() {
                *x /= s;
            }
        }
    }
    let mut witnesses = Vec::new();
    for sigma in sign_orbits(m) {
        let gens: Vec<Vec<f64>> = (0..m)
            .flat_map(|i| {
                let f = sigma[i].factor() as f64;
                rows_by_poly[i]
                    .iter()
                    .map(move |r| r.iter().map(|&x| f * x).collect::<Vec<f64>>())
            })
            .collect();
        match crate::minnorm::separate(&gens, guards.min_norm) {
            crate::minnorm::SeparationResult::Separated { normal, margin }
                if margin >= guards.sep =>
            {
                witnesses.push((sigma, normal));
            }
            _ => return None,
        }
    }
    Some(witnesses)
}

/// Everything that subdivides with the split tree.
struct NodeData {
    /// chart columns (raw, unnormalized)
    cols: Vec<Vec<f64>>,
    /// one scalar form per equation
    qs: Vec<BernsteinForm<f64>>,
    /// one degree-1 form per equation (interpolant restricted to the face)
    tildes: Vec<BernsteinForm<f64>>,
    /// matrix form of all equation Jacobians
    jac: BernsteinForm<f64>,
}

impl NodeData {
    fn split(&self, i: usize, j: usize) -> (NodeData, NodeData) {
        let mut lcols = self.cols.clone();
        let mut rcols = self.cols.clone();
        let mid: Vec<f64> = self.cols[i]
            .iter()
            .zip(&self.cols[j])
            .map(|(a, b)| 0.5 * (a + b))
            .collect();
        lcols[j] = mid.clone();
        rcols[i] = mid;
        let q_split: Vec<_> = self.qs.iter().map(|q| q.subdivide_edge(i, j)).collect();
        let t_split: Vec<_> = self.tildes.iter().map(|t| t.subdivide_edge(i, j)).collect();
        let (jl, jr) = self.jac.subdivide_edge(i, j);
        (
            NodeData {
                cols: lcols,
                qs: q_split.iter().map(|(l, _)| l.clone()).collect(),
                tildes: t_split.iter().map(|(l, _)| l.clone()).collect(),
                jac: jl,
            },
            NodeData {
                cols: rcols,
                qs: q_split.into_iter().map(|(_, r)| r).collect(),
                tildes: t_split.into_iter().map(|(_, r)| r).collect(),
                jac: jr,
            },
        )
    }

    /// Longest chart edge by unit-direction distance, ties to the smallest
    /// local index pair.
    fn longest_edge(&self) -> (usize, usize) {
        let units: Vec<Vec<f64>> = self
            .cols
            .iter()
            .map(|c| {
                let n = c.iter().map(|x| x * x).sum::<f64>().sqrt();
                c.iter().map(|x| x / n).collect()
            })
            .collect();
        let k = self.cols.len();
        let mut best = (0, 1);
        let mut best_len = f64::NEG_INFINITY;
        for i in 0..k {
            for j in i + 1..k {
                let len = units[i]
                    .iter()
                    .zip(&units[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                if len > best_len + 1e-12 {
                    best = (i, j);
                    best_len = len;
                }
            }
        }
        best
    }
}

fn test_node(
    data: &NodeData,
    coface_mats: &[&Vec<Vec<f64>>],
    m: usize,
    ambient: usize,
    splits_left: usize,
    guards: &Guards,
) -> Option<(CertNode, usize, usize)> {
    for (i, (q, t)) in data.qs.iter().zip(&data.tildes).enumerate() {
        let sq = uniform_sign(q.entries().map(|e| e[0]), guards.sign);
        let st = uniform_sign(t.entries().map(|e| e[0]), guards.sign);
        if let (Some(a), Some(b)) = (sq, st) {
            if a == b {
                return Some((CertNode::Sign { poly: i, sign: a }, 1, 0));
            }
        }
    }
    if let Some(witnesses) = gradient_test(&data.jac, coface_mats, m, ambient, guards) {
        return Some((CertNode::Sep { witnesses }, 1, 0));
    }
    if splits_left == 0 || data.cols.len() < 2 {
        return None;
    }
    let (i, j) = data.longest_edge();
    let (l, r) = data.split(i, j);
    let (ln, ll, ld) = test_node(&l, coface_mats, m, ambient, splits_left - 1, guards)?;
    let (rn, rl, rd) = test_node(&r, coface_mats, m, ambient, splits_left - 1, guards)?;
    Some((
        CertNode::Split {
            edge: (i, j),
            left: Box::new(ln),
            right: Box::new(rn),
        },
        ll + rl,
        ld.max(rd) + 1,
    ))
}

/// Run the face test: build the chart-restricted forms, then search the split
/// tree for a certificate.
pub fn test_face(
    sys: &PolySystem,
    decomp: &Decomposition,
    tilde: &TildeValues,
    grads: &GradientCache,
    face: &[VertexId],
    max_splits: usize,
    guards: &Guards,
) -> FaceOutcome {
    let m = sys.m();
    let ambient = sys.nvars();
    let cols = decomp.float_columns(face);
    let k1 = face.len();
    let qs: Vec<BernsteinForm<f64>> = sys
        .polys()
        .iter()
        .map(|p| {
            let t = substitute_terms(p.float_terms(), &cols);
            BernsteinForm::from_terms(&t, k1, p.degree())
        })
        .collect();
    let tildes: Vec<BernsteinForm<f64>> = (0..m)
        .map(|i| {
            BernsteinForm::linear_from_vertex_values(
                face.iter().map(|&v| tilde.float(v, i)).collect(),
            )
        })
        .collect();
    let grad_rows: Vec<Vec<Terms<f64>>> = sys
        .polys()
        .iter()
        .map(|p| {
            gradient_terms(p.float_terms(), ambient)
                .iter()
                .map(|g| substitute_terms(g, &cols))
                .collect()
        })
        .collect();
    let row_degrees: Vec<usize> = sys.degrees().iter().map(|d| d - 1).collect();
    let jac = matrix_form(&grad_rows, &row_degrees, k1);
    let mut coface_mats: Vec<&Vec<Vec<f64>>> = Vec::new();
    for c in decomp.cofaces(face) {
        match grads.get(c) {
            Some(mat) => coface_mats.push(mat),
            None => return FaceOutcome::Failed,
        }
    }
    let data = NodeData {
        cols,
        qs,
        tildes,
        jac,
    };
    match test_node(&data, &coface_mats, m, ambient, max_splits, guards) {
        Some((cert, leaves, max_depth)) => {
            // Confirm every claim of the candidate tree in exact arithmetic
            // before recording it; float margins can be noise when chart
            // coefficients span many orders of magnitude, and a refinement
            // wasted on a rejected face is recoverable while a bad
            // certificate is not.
            let exact_cols = decomp.rational_columns(face);
            let tilde_vals: Vec<Vec<BigRational>> = face
                .iter()
                .map(|&v| (0..m).map(|i| tilde.exact(v, i).clone()).collect())
                .collect();
            let mut coface_rows = Vec::new();
            for c in decomp.cofaces(face) {
                match grads.get_exact(c) {
                    Some(rows) => coface_rows.push(rows.clone()),
                    None => return FaceOutcome::Failed,
                }
            }
            let expr = crate::verify::expr_of_node(&cert);
            match crate::verify::exact_face_replay(
                sys,
                &exact_cols,
                &tilde_vals,
                &coface_rows,
                face,
                &expr,
            ) {
                Ok(_) => FaceOutcome::Certified {
                    cert,
                    leaves,
                    max_depth,
                },
                Err(e) => {
                    log::debug!("float certificate for face {face:?} overturned: {e}");
                    FaceOutcome::Failed
                }
            }
        }
        None => FaceOutcome::Failed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_system;
    use num_bigint::BigInt;

    fn conic() -> PolySystem {
        parse_system("x0^2 + x1^2 - x2^2\n").unwrap()
    }

    fn setup(sys: &PolySystem) -> (Decomposition, TildeValues, GradientCache) {
        let d = Decomposition::initial(sys.nvars());
        let t = TildeValues::new(sys, &d);
        let g = GradientCache::new(&d, &t);
        (d, t, g)
    }

    #[test]
    fn tilde_values_match_exact_evaluation() {
        let sys = conic();
        let (_d, t, _) = setup(&sys);
        // rays: +-e_i; value of the conic is 1, 1, -1 on the axes
        for (v, want) in [(0, 1), (1, 1), (2, 1), (3, 1), (4, -1), (5, -1)] {
            assert_eq!(
                t.exact(v, 0),
                &BigRational::from_integer(BigInt::from(want))
            );
            assert_eq!(t.float(v, 0), want as f64);
        }
    }

    #[test]
    fn cone_gradient_of_conic_octant() {
        let sys = conic();
        let (d, _t, g) = setup(&sys);
        // cone {+e0, +e1, +e2} has interpolant x + y - t
        let c = d.cone_ids().find(|&c| d.cone(c) == [0, 2, 4]).unwrap();
        let grads = g.get(c).unwrap();
        assert_eq!(grads.len(), 1);
        let want = [1.0, 1.0, -1.0];
        for (a, b) in grads[0].iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn orbits_have_canonical_first_sign() {
        assert_eq!(sign_orbits(1), vec![vec![Sign::Pos]]);
        assert_eq!(
            sign_orbits(2),
            vec![vec![Sign::Pos, Sign::Pos], vec![Sign::Pos, Sign::Neg]]
        );
        assert_eq!(sign_orbits(3).len(), 4);
        assert!(sign_orbits(3).iter().all(|s| s[0] == Sign::Pos));
    }

    #[test]
    fn conic_faces_certify_at_depth_zero() {
        let sys = conic();
        let (d, t, g) = setup(&sys);
        let guards = Guards::default();
        // vertex on the positive side
        match test_face(&sys, &d, &t, &g, &[0], 8, &guards) {
            FaceOutcome::Certified {
                cert,
                leaves: 1,
                max_depth: 0,
            } => {
                assert_eq!(
                    cert,
                    CertNode::Sign {
                        poly: 0,
                        sign: Sign::Pos
                    }
                );
            }
            other => panic!("{other:?}"),
        }
        // vertex on the negative side
        match test_face(&sys, &d, &t, &g, &[4], 8, &guards) {
            FaceOutcome::Certified { cert, .. } => {
                assert_eq!(
                    cert,
                    CertNode::Sign {
                        poly: 0,
                        sign: Sign::Neg
                    }
                );
            }
            other => panic!("{other:?}"),
        }
        // the edge {+e0, +e1} has a vanishing corner coefficient, so only the
        // gradient test can pass; it does, without splitting
        match test_face(&sys, &d, &t, &g, &[0, 2], 8, &guards) {
            FaceOutcome::Certified {
                cert,
                leaves: 1,
                max_depth: 0,
            } => match cert {
                CertNode::Sep { witnesses } => assert_eq!(witnesses.len(), 1),
                other => panic!("{other:?}"),
            },
            other => panic!("{other:?}"),
        }
        // edge crossing the zero set
        match test_face(&sys, &d, &t, &g, &[0, 4], 8, &guards) {
            FaceOutcome::Certified { cert, .. } => match cert {
                CertNode::Sep { .. } => {}
                other => panic!("{other:?}"),
            },
            other => panic!("{other:?}"),
        }
        // every face of the fan certifies without splits
        for f in d.faces() {
            match test_face(&sys, &d, &t, &g, &f, 8, &guards) {
                FaceOutcome::Certified { max_depth: 0, .. } => {}
                other => panic!("face {f:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn linear_form_certifies_on_zero_faces() {
        // the plane x0 = 0 in three variables (the zero coefficient only
        // widens the ambient dimension)
        let sys = parse_system("x0 + 0 x2\n").unwrap();
        let (d, t, g) = setup(&sys);
        let guards = Guards::default();
        // faces inside the plane x0 = 0 carry interpolant value 0; the
        // pooled gradients are all e_0, which separates cleanly
        for face in [vec![2], vec![2, 4], vec![3, 4]] {
            match test_face(&sys, &d, &t, &g, &face, 8, &guards) {
                FaceOutcome::Certified {
                    cert, max_depth: 0, ..
                } => match cert {
                    CertNode::Sep { witnesses } => {
                        let n = &witnesses[0].1;
                        assert!(n[0].abs() > 1e-6);
                    }
                    other => panic!("{other:?}"),
                },
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn degenerate_vertex_fails_immediately() {
        // x0 x1 vanishes doubly at +-e2 where its gradient vanishes too;
        // a single ray cannot split, so the test gives up at once
        let sys = parse_system("x0 x1 + 0 x2^2\n").unwrap();
        let (d, t, g) = setup(&sys);
        match test_face(&sys, &d, &t, &g, &[4], 8, &Guards::default()) {
            FaceOutcome::Failed => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn perturbed_circle_fails_on_coarse_cone() {
        // the straddling region of the perturbed circle admits points where
        // the true gradient and the interpolant gradient oppose each other,
        // so no amount of splitting certifies the coarse octant
        let sys =
            parse_system("x0^4 + 2 x0^2 x1^2 - 2 x0^2 x2^2 + x1^4 - 2 x1^2 x2^2 + x2^4 + 1/2 x0^3 x1 - 1/2 x0 x1^3\n")
                .unwrap();
        let (d, t, g) = setup(&sys);
        match test_face(&sys, &d, &t, &g, &[0, 2, 4], 6, &Guards::default()) {
            FaceOutcome::Failed => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cache_refresh_tracks_refinement() {
        let sys = conic();
        let (mut d, mut t, mut g) = setup(&sys);
        let removed: Vec<ConeId> = d.cofaces(&[0, 4]);
        let delta = d.refine(0, 4);
        t.extend(&sys, &d);
        g.refresh(&d, &t, &delta);
        for c in removed {
            assert!(g.get(c).is_none());
        }
        for &c in &delta.added {
            assert!(g.get(c).is_some());
        }
        // the new vertex value is p(e0 + e2) = 1 + 0 - 1 = 0
        assert_eq!(t.exact(6, 0), &BigRational::from_integer(BigInt::from(0)));
    }

    #[test]
    fn conic_still_certifies_after_refinement() {
        let sys = conic();
        let (mut d, mut t, mut g) = setup(&sys);
        let delta = d.refine(0, 4);
        t.extend(&sys, &d);
        g.refresh(&d, &t, &delta);
        let guards = Guards::default();
        for f in d.faces() {
            match test_face(&sys, &d, &t, &g, &f, 8, &guards) {
                FaceOutcome::Certified { .. } => {}
                other => panic!("face {f:?}: {other:?}"),
            }
        }
    }
}
