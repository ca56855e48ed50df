//! Bernstein form of homogeneous polynomials over a simplex.
//!
//! A homogeneous polynomial `q` of degree `d` in `v` barycentric variables is
//! expanded over the basis `B_alpha(y) = (d!/alpha!) y^alpha`, `|alpha| = d`.
//! On the unit simplex the basis functions are a partition of unity, so the
//! value of `q` at any simplex point is a convex combination of the stored
//! coefficients — the *hull property* that every test in the solver rests on.
//!
//! Coefficients are stored densely in colex order (see [`crate::mindex`]) and
//! may be scalars or flattened matrices: a matrix-valued form holds, per
//! index, the coefficient matrix of a polynomial map such as a Jacobian.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{Coeff, Sign};
use crate::mindex;
use crate::poly::{elevate_terms, Terms};

#[derive(Clone, Debug)]
pub struct BernsteinForm<T> {
    vars: usize,
    degree: usize,
    entry_rows: usize,
    entry_cols: usize,
    /// index-major, `entry_rows * entry_cols` scalars per index
    coeffs: Vec<T>,
}

#[derive(Debug, thiserror::Error)]
pub enum BernsteinError {
    #[error("point is not barycentric (entries must be >= 0 and sum to 1)")]
    NotBarycentric,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

impl<T: Coeff> BernsteinForm<T> {
    /// Bernstein coefficients of a scalar polynomial given by its monomial
    /// term map: `b_alpha = c_alpha * alpha! / d!`.
    pub fn from_terms(terms: &Terms<T>, vars: usize, degree: usize) -> Self {
        let table = mindex::table(vars, degree);
        let mut coeffs = vec![T::zero(); table.list.len()];
        for (alpha, c) in terms {
            let r = table.rank[alpha];
            coeffs[r] = c.div_nat(mindex::multinomial(alpha));
        }
        BernsteinForm {
            vars,
            degree,
            entry_rows: 1,
            entry_cols: 1,
            coeffs,
        }
    }

    /// Inverse of [`from_terms`](Self::from_terms) for scalar forms.
    pub fn to_terms(&self) -> Terms<T> {
        assert_eq!(self.stride(), 1, "scalar form expected");
        let table = mindex::table(self.vars, self.degree);
        let mut out = Terms::new();
        for (r, alpha) in table.list.iter().enumerate() {
            if !self.coeffs[r].is_zero() {
                out.insert(
                    alpha.clone(),
                    self.coeffs[r].mul_nat(mindex::multinomial(alpha)),
                );
            }
        }
        out
    }

    /// Degree-1 form of an affine function given by its values at the simplex
    /// vertices (vertex `l` corresponds to index `e_l`, which has colex rank
    /// `l`).
    pub fn linear_from_vertex_values(values: Vec<T>) -> Self {
        BernsteinForm {
            vars: values.len(),
            degree: 1,
            entry_rows: 1,
            entry_cols: 1,
            coeffs: values,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entry_shape(&self) -> (usize, usize) {
        (self.entry_rows, self.entry_cols)
    }

    fn stride(&self) -> usize {
        self.entry_rows * self.entry_cols
    }

    /// Number of stored indices.
    pub fn len(&self) -> usize {
        self.coeffs.len() / self.stride()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Entry at a given colex index, as a flat slice of length
    /// `entry_rows * entry_cols`.
    pub fn entry(&self, index: usize) -> &[T] {
        let s = self.stride();
        &self.coeffs[index * s..(index + 1) * s]
    }

    pub fn entries(&self) -> impl Iterator<Item = &[T]> {
        let s = self.stride();
        self.coeffs.chunks(s)
    }

    /// Value at a barycentric point by the de Casteljau recurrence: repeated
    /// convex combination of coefficients, numerically stable and exact for
    /// rational scalars.
    pub fn value_at(&self, lam: &[T]) -> Result<Vec<T>, BernsteinError> {
        if lam.len() != self.vars {
            return Err(BernsteinError::Dimension {
                expected: self.vars,
                got: lam.len(),
            });
        }
        if !T::is_barycentric(lam) {
            return Err(BernsteinError::NotBarycentric);
        }
        let s = self.stride();
        let mut level = self.coeffs.clone();
        for r in (1..=self.degree).rev() {
            // combine level of degree r into degree r - 1
            let hi = mindex::table(self.vars, r);
            let lo = mindex::table(self.vars, r - 1);
            let mut next = vec![T::zero(); lo.list.len() * s];
            for (bi, beta) in lo.list.iter().enumerate() {
                for v in 0..self.vars {
                    if lam[v].is_zero() {
                        continue;
                    }
                    let mut up = beta.clone();
                    up[v] += 1;
                    let ui = hi.rank[&up];
                    for t in 0..s {
                        let w = lam[v].mul(&level[ui * s + t]);
                        next[bi * s + t] = next[bi * s + t].add(&w);
                    }
                }
            }
            level = next;
        }
        Ok(level)
    }

    /// Convenience for scalar forms.
    pub fn value_scalar_at(&self, lam: &[T]) -> Result<T, BernsteinError> {
        assert_eq!(self.stride(), 1, "scalar form expected");
        Ok(self.value_at(lam)?.pop().unwrap())
    }

    /// Split at the midpoint of the simplex edge `(i, j)`.
    ///
    /// Returns the coefficients over the two halves: the *left* half keeps
    /// vertex `i` and replaces vertex `j` by the midpoint, the *right* half
    /// keeps vertex `j` and replaces vertex `i`. Both halves represent the
    /// same polynomial restricted to their sub-simplices, so sign tests and
    /// hull tests refine strictly.
    pub fn subdivide_edge(&self, i: usize, j: usize) -> (Self, Self) {
        assert!(i < self.vars && j < self.vars && i != j);
        let s = self.stride();
        let d = self.degree;
        // levels[r][beta] = blossom with r midpoint arguments, |beta| = d - r
        let mut levels: Vec<Vec<T>> = Vec::with_capacity(d + 1);
        levels.push(self.coeffs.clone());
        for r in 1..=d {
            let hi = mindex::table(self.vars, d - r + 1);
            let lo = mindex::table(self.vars, d - r);
            let prev = &levels[r - 1];
            let mut next = vec![T::zero(); lo.list.len() * s];
            for (bi, beta) in lo.list.iter().enumerate() {
                let mut up_i = beta.clone();
                up_i[i] += 1;
                let mut up_j = beta.clone();
                up_j[j] += 1;
                let ri = hi.rank[&up_i];
                let rj = hi.rank[&up_j];
                for t in 0..s {
                    next[bi * s + t] = prev[ri * s + t].add(&prev[rj * s + t]).half();
                }
            }
            levels.push(next);
        }
        let full = mindex::table(self.vars, d);
        let mut left = vec![T::zero(); self.coeffs.len()];
        let mut right = vec![T::zero(); self.coeffs.len()];
        for (ai, alpha) in full.list.iter().enumerate() {
            // left: alpha[j] counts midpoint arguments
            let r = alpha[j] as usize;
            let mut rest = alpha.clone();
            rest[j] = 0;
            let li = mindex::table(self.vars, d - r).rank[&rest];
            for t in 0..s {
                left[ai * s + t] = levels[r][li * s + t].clone();
            }
            // right: alpha[i] counts midpoint arguments
            let r = alpha[i] as usize;
            let mut rest = alpha.clone();
            rest[i] = 0;
            let ri = mindex::table(self.vars, d - r).rank[&rest];
            for t in 0..s {
                right[ai * s + t] = levels[r][ri * s + t].clone();
            }
        }
        (
            BernsteinForm {
                vars: self.vars,
                degree: d,
                entry_rows: self.entry_rows,
                entry_cols: self.entry_cols,
                coeffs: left,
            },
            BernsteinForm {
                vars: self.vars,
                degree: d,
                entry_rows: self.entry_rows,
                entry_cols: self.entry_cols,
                coeffs: right,
            },
        )
    }
}

/// Matrix-valued Bernstein form of a family of polynomial maps sharing one
/// index set.
///
/// `row_terms[i][v]` holds the monomial terms (in `vars` barycentric
/// variables) of entry `(i, v)`; row `i` has degree `row_degrees[i]`. Rows of
/// lower degree are elevated to the common maximum degree, which preserves
/// values on the simplex, so the matrix entries at the simplex point `y` are
/// a convex combination of the stored coefficient matrices.
pub(crate) fn matrix_form<T: Coeff>(
    row_terms: &[Vec<Terms<T>>],
    row_degrees: &[usize],
    vars: usize,
) -> BernsteinForm<T> {
    let rows = row_terms.len();
    let cols = if rows == 0 { 0 } else { row_terms[0].len() };
    let target = row_degrees.iter().copied().max().unwrap_or(0);
    let table = mindex::table(vars, target);
    let stride = rows * cols;
    let mut coeffs = vec![T::zero(); table.list.len() * stride];
    for (i, row) in row_terms.iter().enumerate() {
        for (v, terms) in row.iter().enumerate() {
            let lifted;
            let terms = if row_degrees[i] < target {
                lifted = elevate_terms(terms, vars, target - row_degrees[i]);
                &lifted
            } else {
                terms
            };
            for (alpha, c) in terms {
                let r = table.rank[alpha];
                coeffs[r * stride + i * cols + v] = c.div_nat(mindex::multinomial(alpha));
            }
        }
    }
    BernsteinForm {
        vars,
        degree: target,
        entry_rows: rows,
        entry_cols: cols,
        coeffs,
    }
}

// ---------------------------------------------------------------------------
// integer Bernstein forms for exact replay

/// Bernstein coefficients cleared to integers. Each stored number equals the
/// true rational coefficient times a *positive* factor (a per-row clearing
/// scale, times a power of two accumulated by unhalved subdivision), so signs
/// and strict dot-product inequalities transfer exactly.
#[derive(Clone)]
pub(crate) struct IntBern {
    pub(crate) vars: usize,
    pub(crate) degree: usize,
    pub(crate) rows: usize,
    pub(crate) cols: usize,
    pub(crate) numers: Vec<BigInt>,
}

impl IntBern {
    pub(crate) fn from_rational(form: &BernsteinForm<BigRational>) -> IntBern {
        let (rows, cols) = form.entry_shape();
        let stride = rows * cols;
        let mut scale = vec![BigInt::one(); rows];
        for e in form.entries() {
            for r in 0..rows {
                for c in 0..cols {
                    scale[r] = scale[r].lcm(e[r * cols + c].denom());
                }
            }
        }
        let mut numers = Vec::with_capacity(form.len() * stride);
        for e in form.entries() {
            for r in 0..rows {
                for c in 0..cols {
                    let x = &e[r * cols + c];
                    numers.push(x.numer() * (&scale[r] / x.denom()));
                }
            }
        }
        IntBern {
            vars: form.vars(),
            degree: form.degree(),
            rows,
            cols,
            numers,
        }
    }

    pub(crate) fn stride(&self) -> usize {
        self.rows * self.cols
    }

    pub(crate) fn len(&self) -> usize {
        self.numers.len() / self.stride()
    }

    pub(crate) fn entry(&self, idx: usize) -> &[BigInt] {
        let s = self.stride();
        &self.numers[idx * s..(idx + 1) * s]
    }

    /// Edge-midpoint subdivision without the halving: every coefficient of a
    /// child is the true one times `2^k` for some `k >= 0`.
    pub(crate) fn subdivide_edge(&self, i: usize, j: usize) -> (IntBern, IntBern) {
        let s = self.stride();
        let d = self.degree;
        let mut levels: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
        levels.push(self.numers.clone());
        for r in 1..=d {
            let hi = mindex::table(self.vars, d - r + 1);
            let lo = mindex::table(self.vars, d - r);
            let prev = &levels[r - 1];
            let mut next = vec![BigInt::zero(); lo.list.len() * s];
            for (bi, beta) in lo.list.iter().enumerate() {
                let mut up_i = beta.clone();
                up_i[i] += 1;
                let mut up_j = beta.clone();
                up_j[j] += 1;
                let ri = hi.rank[&up_i];
                let rj = hi.rank[&up_j];
                for t in 0..s {
                    next[bi * s + t] = &prev[ri * s + t] + &prev[rj * s + t];
                }
            }
            levels.push(next);
        }
        let full = mindex::table(self.vars, d);
        let mut left = vec![BigInt::zero(); self.numers.len()];
        let mut right = vec![BigInt::zero(); self.numers.len()];
        for (ai, alpha) in full.list.iter().enumerate() {
            let r = alpha[j] as usize;
            let mut rest = alpha.clone();
            rest[j] = 0;
            let li = mindex::table(self.vars, d - r).rank[&rest];
            for t in 0..s {
                left[ai * s + t] = levels[r][li * s + t].clone();
            }
            let r = alpha[i] as usize;
            let mut rest = alpha.clone();
            rest[i] = 0;
            let ri = mindex::table(self.vars, d - r).rank[&rest];
            for t in 0..s {
                right[ai * s + t] = levels[r][ri * s + t].clone();
            }
        }
        (
            IntBern {
                vars: self.vars,
                degree: d,
                rows: self.rows,
                cols: self.cols,
                numers: left,
            },
            IntBern {
                vars: self.vars,
                degree: d,
                rows: self.rows,
                cols: self.cols,
                numers: right,
            },
        )
    }

    /// The strict common sign of a scalar form's coefficients, if any.
    pub(crate) fn strict_sign(&self) -> Option<Sign> {
        debug_assert_eq!(self.stride(), 1);
        if self.numers.iter().all(|x| x.is_positive()) {
            Some(Sign::Pos)
        } else if self.numers.iter().all(|x| x.is_negative()) {
            Some(Sign::Neg)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{substitute_terms, HomogeneousPoly};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn square_has_vertex_coefficient_only() {
        // x^2 over (x, y): basis (x^2, 2xy, y^2), coefficients (1, 0, 0)
        let p = HomogeneousPoly::new(2, 2, [(vec![2, 0], rat(1, 1))]);
        let b = BernsteinForm::from_terms(p.terms(), 2, 2);
        let got: Vec<BigRational> = b.entries().map(|e| e[0].clone()).collect();
        assert_eq!(got, vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn binomial_square_is_all_ones() {
        // (x+y)^2 = x^2 + 2xy + y^2 has Bernstein coefficients (1, 1, 1)
        let p = HomogeneousPoly::new(
            2,
            2,
            [
                (vec![2, 0], rat(1, 1)),
                (vec![1, 1], rat(2, 1)),
                (vec![0, 2], rat(1, 1)),
            ],
        );
        let b = BernsteinForm::from_terms(p.terms(), 2, 2);
        let got: Vec<BigRational> = b.entries().map(|e| e[0].clone()).collect();
        assert_eq!(got, vec![rat(1, 1), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn round_trip_terms() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = crate::poly::random_bombieri(3, 4, &mut rng);
        let b = BernsteinForm::from_terms(p.terms(), 3, 4);
        assert_eq!(&b.to_terms(), p.terms());
    }

    #[test]
    fn de_casteljau_matches_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let p = crate::poly::random_bombieri(3, 5, &mut rng);
        let b = BernsteinForm::from_terms(p.terms(), 3, 5);
        for _ in 0..20 {
            let a: i64 = rng.gen_range(0..=8);
            let c: i64 = rng.gen_range(0..=8 - a);
            let lam = [rat(a, 8), rat(c, 8), rat(8 - a - c, 8)];
            let v = b.value_scalar_at(&lam).unwrap();
            assert_eq!(v, p.eval_rat(&lam));
        }
    }

    #[test]
    fn de_casteljau_rejects_outside_points() {
        let p = HomogeneousPoly::new(2, 2, [(vec![2, 0], rat(1, 1))]);
        let b = BernsteinForm::from_terms(p.terms(), 2, 2);
        assert!(matches!(
            b.value_scalar_at(&[rat(2, 1), rat(-1, 1)]),
            Err(BernsteinError::NotBarycentric)
        ));
        assert!(matches!(
            b.value_scalar_at(&[rat(1, 2), rat(1, 4)]),
            Err(BernsteinError::NotBarycentric)
        ));
    }

    #[test]
    fn vertex_values_are_coefficients() {
        // at a simplex vertex the value is the corresponding corner coefficient
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let p = crate::poly::random_bombieri(3, 4, &mut rng);
        let b = BernsteinForm::from_terms(p.terms(), 3, 4);
        let v = b
            .value_scalar_at(&[rat(1, 1), rat(0, 1), rat(0, 1)])
            .unwrap();
        assert_eq!(v, p.eval_rat(&[rat(1, 1), rat(0, 1), rat(0, 1)]));
    }

    #[test]
    fn subdivision_matches_chart_substitution() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let p = crate::poly::random_bombieri(3, 4, &mut rng);
        let b = BernsteinForm::from_terms(p.terms(), 3, 4);
        let (left, right) = b.subdivide_edge(0, 2);
        // left chart: columns (e0, e1, (e0+e2)/2)
        let half = rat(1, 2);
        let lcols = vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![half.clone(), rat(0, 1), half.clone()],
        ];
        let lterms = substitute_terms(p.terms(), &lcols);
        let lb = BernsteinForm::from_terms(&lterms, 3, 4);
        for (a, b) in left.entries().zip(lb.entries()) {
            assert_eq!(a, b);
        }
        // right chart: columns ((e0+e2)/2, e1, e2)
        let rcols = vec![
            vec![half.clone(), rat(0, 1), half.clone()],
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(1, 1)],
        ];
        let rterms = substitute_terms(p.terms(), &rcols);
        let rb = BernsteinForm::from_terms(&rterms, 3, 4);
        for (a, b) in right.entries().zip(rb.entries()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn hull_property_by_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let p = crate::poly::random_bombieri(3, 4, &mut rng);
        let b = BernsteinForm::from_terms(p.float_terms(), 3, 4);
        let lo = b.entries().map(|e| e[0]).fold(f64::INFINITY, f64::min);
        let hi = b.entries().map(|e| e[0]).fold(f64::NEG_INFINITY, f64::max);
        for _ in 0..200 {
            let a: f64 = rng.gen_range(0.0..1.0);
            let c: f64 = rng.gen_range(0.0..1.0 - a);
            let v = p.eval_f64(&[a, c, 1.0 - a - c]);
            assert!(v >= lo - 1e-9 && v <= hi + 1e-9);
        }
    }
}
