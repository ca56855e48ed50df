//! Separating the origin from a convex hull of float vectors.
//!
//! The solver repeatedly asks one geometric question: is the origin inside
//! the convex hull of a finite point set? [`separate`] answers with either a
//! certified-by-construction *witness direction* (every point has strictly
//! positive inner product with it) or a convex combination landing (almost)
//! on the origin. The search runs in floats; downstream exact checks only
//! ever re-verify the witness, so a wrong float answer can cost completeness,
//! never soundness.
//!
//! [`hull_contains_origin`] is an exact rational reference used by tests:
//! small instances only, exponential in the number of points.

use num_rational::BigRational;
use num_traits::Signed;

use crate::arith::Coeff;

/// Outcome of the min-norm-point search on a point set.
#[derive(Clone, Debug)]
pub enum SeparationResult {
    /// A convex combination of the points with norm below the tolerance;
    /// `coeffs` are its barycentric weights over the input order.
    Inside { coeffs: Vec<f64> },
    /// Every point has inner product `>= margin * |normal|` with `normal`
    /// (`margin` is the geometric distance estimate, positive).
    Separated { normal: Vec<f64>, margin: f64 },
    /// Iteration budget exhausted without a verdict.
    Inconclusive,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

/// Min-norm point of the convex hull, Wolfe style: keep a convex combination
/// `N` of the points; while some point `V` has `N . V <= 0`, step towards `V`
/// along the segment (which strictly shrinks `|N|`), then re-optimize the
/// weights over the current support by one equality-constrained least-squares
/// solve, clipping any weights that went negative. Terminates with `Inside`
/// when `|N| < tol`, with `Separated` when no point is on the far side, or
/// `Inconclusive` at the iteration cap.
pub fn separate(points: &[Vec<f64>], tol: f64) -> SeparationResult {
    assert!(!points.is_empty(), "empty point set");
    let n = points.len();
    let dim = points[0].len();
    for p in points {
        assert_eq!(p.len(), dim, "mixed dimensions");
    }
    if let Some(k) = points.iter().position(|p| norm_sq(p) == 0.0) {
        let mut coeffs = vec![0.0; n];
        coeffs[k] = 1.0;
        return SeparationResult::Inside { coeffs };
    }
    let start = (0..n)
        .min_by(|&i, &j| norm_sq(&points[i]).total_cmp(&norm_sq(&points[j])))
        .unwrap();
    let mut normal = points[start].clone();
    let mut weights = vec![0.0; n];
    weights[start] = 1.0;
    let mut frozen: Vec<bool> = vec![false; n];
    let cap = 10 * n * (dim + 1);
    for _ in 0..cap {
        let nn = norm_sq(&normal);
        if nn < tol * tol {
            return SeparationResult::Inside { coeffs: weights };
        }
        let mut best: Option<usize> = None;
        let mut any_candidate = false;
        for (i, p) in points.iter().enumerate() {
            if dot(&normal, p) <= 0.0 {
                any_candidate = true;
                if !frozen[i] && best.is_none_or(|b| dot(&normal, p) < dot(&normal, &points[b])) {
                    best = Some(i);
                }
            }
        }
        if !any_candidate {
            let margin = points
                .iter()
                .map(|p| dot(&normal, p))
                .fold(f64::INFINITY, f64::min)
                / nn.sqrt();
            return SeparationResult::Separated { normal, margin };
        }
        let v = match best {
            Some(v) => v,
            None => {
                // every improving point was frozen by the last clip; unfreeze
                // and retry so the search cannot deadlock
                frozen.iter_mut().for_each(|f| *f = false);
                continue;
            }
        };
        frozen.iter_mut().for_each(|f| *f = false);
        let p = &points[v];
        let t = ((nn - dot(&normal, p))
            / norm_sq(&normal.iter().zip(p).map(|(a, b)| a - b).collect::<Vec<_>>()))
        .clamp(0.0, 1.0);
        for (w, &pc) in normal.iter_mut().zip(p) {
            *w += t * (pc - *w);
        }
        for w in weights.iter_mut() {
            *w *= 1.0 - t;
        }
        weights[v] += t;
        debug_assert!(norm_sq(&normal) <= nn * (1.0 + 1e-12) + 1e-300);
        // re-optimize over the support: min |sum l_i p_i| with sum l_i = 1
        let support: Vec<usize> = (0..n).filter(|&i| weights[i] > 0.0).collect();
        if support.len() >= 2 {
            let s = support.len();
            let mut a = vec![vec![0.0f64; s + 1]; s + 1];
            let mut b = vec![vec![0.0f64]; s + 1];
            for (r, &i) in support.iter().enumerate() {
                for (c, &j) in support.iter().enumerate() {
                    a[r][c] = 2.0 * dot(&points[i], &points[j]);
                }
                a[r][s] = 1.0;
                a[s][r] = 1.0;
            }
            b[s][0] = 1.0;
            if let Some(sol) = crate::arith::solve_mat(&a, &b) {
                let lam: Vec<f64> = sol[..s].iter().map(|r| r[0]).collect();
                let mut clipped = vec![0.0f64; n];
                let mut total = 0.0;
                for (k, &i) in support.iter().enumerate() {
                    let l = lam[k].max(0.0);
                    clipped[i] = l;
                    total += l;
                }
                if total > 0.0 {
                    for l in clipped.iter_mut() {
                        *l /= total;
                    }
                    let mut cand = vec![0.0f64; dim];
                    for (i, &l) in clipped.iter().enumerate() {
                        if l > 0.0 {
                            for (c, &pc) in cand.iter_mut().zip(&points[i]) {
                                *c += l * pc;
                            }
                        }
                    }
                    // only adopt the re-optimized point if it did not grow
                    if norm_sq(&cand) <= norm_sq(&normal) {
                        for (k, &i) in support.iter().enumerate() {
                            if lam[k] < 0.0 {
                                frozen[i] = true;
                            }
                        }
                        normal = cand;
                        weights = clipped;
                    }
                }
            }
        }
    }
    SeparationResult::Inconclusive
}

/// Exact decision `0 in conv(points)` by Caratheodory enumeration: some
/// affinely independent subset of at most `dim + 1` points must carry a
/// nonnegative affine combination of the origin, and for such subsets the
/// combination is the unique solution of a full-column-rank linear system.
/// Exponential in `points.len()`; intended for differential testing.
pub fn hull_contains_origin(points: &[Vec<BigRational>]) -> bool {
    let n = points.len();
    assert!(n <= 16, "reference oracle limited to 16 points");
    let dim = points[0].len();
    // lifted columns: point coordinates plus a trailing 1
    let lift = |i: usize| -> Vec<BigRational> {
        let mut c = points[i].clone();
        c.push(<BigRational as Coeff>::one());
        c
    };
    let mut target = vec![<BigRational as Coeff>::zero(); dim + 1];
    target[dim] = <BigRational as Coeff>::one();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if subset.len() > dim + 1 {
            continue;
        }
        let cols: Vec<Vec<BigRational>> = subset.iter().map(|&i| lift(i)).collect();
        if let Some(lam) = solve_full_column_rank(&cols, &target) {
            if lam.iter().all(|l| !l.is_negative()) {
                return true;
            }
        }
    }
    false
}

/// Solve `cols * lam = rhs` when `cols` (given as columns) has full column
/// rank, returning the unique solution if the system is consistent.
pub(crate) fn solve_full_column_rank(
    cols: &[Vec<BigRational>],
    rhs: &[BigRational],
) -> Option<Vec<BigRational>> {
    let s = cols.len();
    let rows = rhs.len();
    // augmented row-major matrix [cols | rhs]
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut r0 = 0usize;
    for c in 0..s {
        let piv = (r0..rows).find(|&r| !num_traits::Zero::is_zero(&m[r][c]))?;
        m.swap(r0, piv);
        for r in 0..rows {
            if r != r0 && !num_traits::Zero::is_zero(&m[r][c]) {
                let f = &m[r][c] / &m[r0][c];
                #[allow(clippy::needless_range_loop)] // two rows of `m` in play
                for j in c..=s {
                    let t = &f * &m[r0][j];
                    m[r][j] = &m[r][j] - t;
                }
            }
        }
        pivot_rows.push(r0);
        r0 += 1;
    }
    // rows below the pivots must have vanished for consistency
    if m[r0..]
        .iter()
        .any(|row| !num_traits::Zero::is_zero(&row[s]))
    {
        return None;
    }
    let mut lam = vec![<BigRational as Coeff>::zero(); s];
    for (c, &r) in pivot_rows.iter().enumerate() {
        lam[c] = &m[r][s] / &m[r][c];
    }
    Some(lam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::f64_to_rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 9.313225746154785e-10; // 2^-30

    fn to_rat(points: &[Vec<f64>]) -> Vec<Vec<BigRational>> {
        points
            .iter()
            .map(|p| p.iter().map(|&x| f64_to_rat(x)).collect())
            .collect()
    }

    #[test]
    fn single_point_separates() {
        match separate(&[vec![1.0, 0.0]], TOL) {
            SeparationResult::Separated { normal, margin } => {
                assert_eq!(normal, vec![1.0, 0.0]);
                assert!((margin - 1.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn opposite_points_straddle() {
        match separate(&[vec![1.0, 0.0], vec![-1.0, 0.0]], TOL) {
            SeparationResult::Inside { coeffs } => {
                assert!((coeffs[0] - 0.5).abs() < 1e-9);
                assert!((coeffs[1] - 0.5).abs() < 1e-9);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wedge_min_norm_point() {
        // conv{(1,1), (1,-1), (2,0)} has min-norm point (1,0)
        let pts = vec![vec![1.0, 1.0], vec![1.0, -1.0], vec![2.0, 0.0]];
        match separate(&pts, TOL) {
            SeparationResult::Separated { normal, margin } => {
                assert!((normal[0] - 1.0).abs() < 1e-9);
                assert!(normal[1].abs() < 1e-9);
                assert!((margin - 1.0).abs() < 1e-9);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn origin_in_set_is_inside() {
        match separate(&[vec![3.0, 4.0], vec![0.0, 0.0]], TOL) {
            SeparationResult::Inside { coeffs } => assert_eq!(coeffs, vec![0.0, 1.0]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn verdicts_are_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..300 {
            let dim = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=7);
            let points: Vec<Vec<f64>> = (0..n)
                .map(|_| {
                    (0..dim)
                        .map(|_| rng.gen_range(-3..=3) as f64 / 2.0)
                        .collect()
                })
                .collect();
            match separate(&points, TOL) {
                SeparationResult::Inside { coeffs } => {
                    assert!(coeffs.iter().all(|&c| c >= 0.0));
                    assert!((coeffs.iter().sum::<f64>() - 1.0).abs() < 1e-9);
                    let mut combo = vec![0.0; dim];
                    for (c, p) in coeffs.iter().zip(&points) {
                        for (z, &pc) in combo.iter_mut().zip(p) {
                            *z += c * pc;
                        }
                    }
                    assert!(norm_sq(&combo).sqrt() < 2.0 * TOL);
                }
                SeparationResult::Separated { normal, margin } => {
                    assert!(margin > 0.0);
                    for p in &points {
                        assert!(dot(&normal, p) > 0.0);
                    }
                }
                SeparationResult::Inconclusive => panic!("cap hit on tiny instance"),
            }
        }
    }

    #[test]
    fn agrees_with_exact_oracle_on_lattice_points() {
        // lattice coordinates keep the float search and the exact oracle
        // decidable by a margin no rounding can cross
        let mut rng = ChaCha8Rng::seed_from_u64(57);
        let mut inside_seen = 0;
        let mut outside_seen = 0;
        for _ in 0..300 {
            let dim = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=6);
            let points: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..dim).map(|_| rng.gen_range(-2..=2) as f64).collect())
                .collect();
            let exact = hull_contains_origin(&to_rat(&points));
            match separate(&points, TOL) {
                SeparationResult::Inside { .. } => {
                    assert!(exact, "float Inside but hull misses origin: {points:?}");
                    inside_seen += 1;
                }
                SeparationResult::Separated { .. } => {
                    assert!(!exact, "float Separated but origin in hull: {points:?}");
                    outside_seen += 1;
                }
                SeparationResult::Inconclusive => {
                    // allowed, but should be rare on lattice instances
                }
            }
        }
        assert!(inside_seen > 50, "too few inside cases: {inside_seen}");
        assert!(outside_seen > 50, "too few outside cases: {outside_seen}");
    }

    #[test]
    fn exact_oracle_small_cases() {
        let r = |xs: &[i64]| -> Vec<BigRational> {
            xs.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        };
        assert!(hull_contains_origin(&[r(&[0, 0])]));
        assert!(!hull_contains_origin(&[r(&[1, 0])]));
        assert!(hull_contains_origin(&[r(&[1, 0]), r(&[-1, 0])]));
        assert!(!hull_contains_origin(&[r(&[1, 0]), r(&[0, 1])]));
        assert!(hull_contains_origin(&[
            r(&[1, 1]),
            r(&[1, -1]),
            r(&[-1, 0])
        ]));
        // boundary: origin on an edge of the hull
        assert!(hull_contains_origin(&[
            r(&[1, 1]),
            r(&[-1, -1]),
            r(&[5, 3])
        ]));
    }

    #[test]
    fn needle_hull_still_resolved() {
        // nearly antipodal needle: origin inside but barely
        let pts = vec![vec![1.0, 1e-7], vec![-1.0, 1e-7], vec![0.0, -1.0]];
        match separate(&pts, TOL) {
            SeparationResult::Inside { .. } => {}
            other => panic!("{other:?}"),
        }
        // shifted needle: origin outside by 1e-7
        let pts = vec![vec![1.0, 1e-7], vec![-1.0, 1e-7], vec![0.0, 1.0]];
        match separate(&pts, TOL) {
            SeparationResult::Separated { normal, .. } => {
                for p in &pts {
                    assert!(dot(&normal, p) > 0.0);
                }
            }
            other => panic!("{other:?}"),
        }
    }
}
