//! Homogeneous polynomials with exact rational coefficients and a binary64
//! mirror.
//!
//! Every polynomial is homogeneous: all monomials share one total degree, so
//! the zero locus is a cone through the origin and can be studied on the unit
//! sphere (equivalently, in projective space). Exact coefficients drive the
//! certificate checker; the float mirror drives the search.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::arith::{f64_to_rat, rat_to_f64, Coeff};
use crate::mindex;

pub(crate) type Terms<T> = BTreeMap<Vec<u32>, T>;

/// Value of a term map at a point.
pub(crate) fn eval_terms<T: Coeff>(terms: &Terms<T>, x: &[T]) -> T {
    let mut acc = T::zero();
    for (alpha, c) in terms {
        let mut term = c.clone();
        for (i, &a) in alpha.iter().enumerate() {
            for _ in 0..a {
                term = term.mul(&x[i]);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// Partial derivatives of a term map, one map per variable.
pub(crate) fn gradient_terms<T: Coeff>(terms: &Terms<T>, nvars: usize) -> Vec<Terms<T>> {
    let mut out = vec![Terms::new(); nvars];
    for (alpha, c) in terms {
        for v in 0..nvars {
            if alpha[v] > 0 {
                let mut beta = alpha.clone();
                beta[v] -= 1;
                let d = c.mul_nat(alpha[v] as u128);
                insert_term(&mut out[v], beta, d);
            }
        }
    }
    out
}

pub(crate) fn insert_term<T: Coeff>(terms: &mut Terms<T>, key: Vec<u32>, val: T) {
    if val.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&val);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub(crate) fn mul_terms<T: Coeff>(a: &Terms<T>, b: &Terms<T>) -> Terms<T> {
    let mut out = Terms::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            out_insert(&mut out, key, ca.mul(cb));
        }
    }
    out
}

fn out_insert<T: Coeff>(terms: &mut Terms<T>, key: Vec<u32>, val: T) {
    insert_term(terms, key, val);
}

/// Composition with a linear map: the polynomial `y -> p(M y)` where column
/// `j` of `M` is `cols[j]` (length = number of input variables). The result
/// lives in `cols.len()` variables and keeps the total degree.
pub(crate) fn substitute_terms<T: Coeff>(terms: &Terms<T>, cols: &[Vec<T>]) -> Terms<T> {
    let out_vars = cols.len();
    let in_vars = if cols.is_empty() { 0 } else { cols[0].len() };
    // linear form for each input variable: row i of M
    let rows: Vec<Terms<T>> = (0..in_vars)
        .map(|i| {
            let mut lf = Terms::new();
            for (j, col) in cols.iter().enumerate() {
                if !col[i].is_zero() {
                    let mut key = vec![0u32; out_vars];
                    key[j] = 1;
                    lf.insert(key, col[i].clone());
                }
            }
            lf
        })
        .collect();
    // memoized powers of each linear form
    let mut powers: Vec<Vec<Terms<T>>> = rows
        .iter()
        .map(|lf| {
            let mut one = Terms::new();
            one.insert(vec![0u32; out_vars], T::one());
            vec![one, lf.clone()]
        })
        .collect();
    let mut out = Terms::new();
    for (alpha, c) in terms {
        let mut acc = Terms::new();
        acc.insert(vec![0u32; out_vars], c.clone());
        for (i, &a) in alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            while powers[i].len() <= a as usize {
                let next = mul_terms(powers[i].last().unwrap(), &powers[i][1]);
                powers[i].push(next);
            }
            acc = mul_terms(&acc, &powers[i][a as usize]);
        }
        for (k, v) in acc {
            out_insert(&mut out, k, v);
        }
    }
    out
}

/// Multiply by `(y_0 + ... + y_{v-1})^e`; on the unit simplex this does not
/// change values, so it realizes degree elevation.
pub(crate) fn elevate_terms<T: Coeff>(terms: &Terms<T>, vars: usize, e: usize) -> Terms<T> {
    if e == 0 {
        return terms.clone();
    }
    let mut out = Terms::new();
    for gamma in mindex::enumerate(vars, e) {
        let w = mindex::multinomial(&gamma);
        for (alpha, c) in terms {
            let key: Vec<u32> = alpha.iter().zip(&gamma).map(|(a, g)| a + g).collect();
            out_insert(&mut out, key, c.mul_nat(w));
        }
    }
    out
}

/// Homogeneous polynomial with exact rational coefficients and a binary64
/// mirror kept within one rounding of each coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousPoly {
    nvars: usize,
    degree: usize,
    terms: Terms<BigRational>,
    float_terms: Terms<f64>,
}

impl HomogeneousPoly {
    /// Build from exact terms. Zero coefficients are dropped; every exponent
    /// vector must have length `nvars` and total degree `degree`.
    pub fn new(
        nvars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Self {
        let mut map = Terms::new();
        for (alpha, c) in terms {
            assert_eq!(alpha.len(), nvars, "exponent vector length");
            assert_eq!(
                alpha.iter().map(|&a| a as usize).sum::<usize>(),
                degree,
                "total degree of {alpha:?}"
            );
            insert_term(&mut map, alpha, c);
        }
        let float_terms = map
            .iter()
            .map(|(k, v)| (k.clone(), rat_to_f64(v)))
            .collect();
        HomogeneousPoly {
            nvars,
            degree,
            terms: map,
            float_terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &Terms<BigRational> {
        &self.terms
    }

    pub fn float_terms(&self) -> &Terms<f64> {
        &self.float_terms
    }

    /// Exact value at a rational point.
    pub fn eval_rat(&self, x: &[BigRational]) -> BigRational {
        assert_eq!(x.len(), self.nvars, "point dimension");
        eval_terms(&self.terms, x)
    }

    /// Approximate value at a float point, computed on the float mirror.
    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.nvars, "point dimension");
        eval_terms(&self.float_terms, x)
    }

    /// All partial derivatives; each has degree one less.
    pub fn gradient(&self) -> Vec<HomogeneousPoly> {
        assert!(self.degree >= 1, "gradient of a constant");
        gradient_terms(&self.terms, self.nvars)
            .into_iter()
            .map(|t| {
                HomogeneousPoly::new(
                    self.nvars,
                    self.degree - 1,
                    t.into_iter().collect::<Vec<_>>(),
                )
            })
            .collect()
    }

    /// Composition with the linear map whose columns are `cols`; the result is
    /// a homogeneous polynomial of the same degree in `cols.len()` variables.
    pub fn substitute(&self, cols: &[Vec<BigRational>]) -> HomogeneousPoly {
        for col in cols {
            assert_eq!(col.len(), self.nvars, "column dimension");
        }
        let terms = substitute_terms(&self.terms, cols);
        HomogeneousPoly::new(
            cols.len(),
            self.degree,
            terms.into_iter().collect::<Vec<_>>(),
        )
    }

    /// Float view used by the search phase.
    pub fn float_view(&self) -> FloatPoly {
        FloatPoly {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.float_terms.clone(),
        }
    }

    /// Sum of absolute float coefficients.
    pub fn coef_one_norm(&self) -> f64 {
        self.float_terms.values().map(|c| c.abs()).sum()
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &a) in alpha.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, " * x{i}")?,
                    _ => write!(f, " * x{i}^{a}")?,
                }
            }
        }
        Ok(())
    }
}

/// Float-only homogeneous polynomial, the working representation of the
/// search phase.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    pub(crate) nvars: usize,
    pub(crate) degree: usize,
    pub(crate) terms: Terms<f64>,
}

impl FloatPoly {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &Terms<f64> {
        &self.terms
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.nvars);
        eval_terms(&self.terms, x)
    }

    pub fn substitute(&self, cols: &[Vec<f64>]) -> FloatPoly {
        FloatPoly {
            nvars: cols.len(),
            degree: self.degree,
            terms: substitute_terms(&self.terms, cols),
        }
    }

    pub fn gradient(&self) -> Vec<FloatPoly> {
        gradient_terms(&self.terms, self.nvars)
            .into_iter()
            .map(|t| FloatPoly {
                nvars: self.nvars,
                degree: self.degree - 1,
                terms: t,
            })
            .collect()
    }
}

/// A system of homogeneous polynomials cutting out a projective variety of
/// expected codimension `len()`.
#[derive(Clone, Debug)]
pub struct PolySystem {
    polys: Vec<HomogeneousPoly>,
    nvars: usize,
}

/// Why a polynomial system was rejected at construction.
#[derive(Debug, thiserror::Error)]
pub enum SystemError {
    #[error("empty system")]
    Empty,
    #[error("polynomial {index} has {got} variables, expected {expected}")]
    MixedVars {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("polynomial {index} is zero")]
    ZeroPoly { index: usize },
    #[error("polynomial {index} has degree 0")]
    ConstantPoly { index: usize },
    #[error(
        "{m} equations in {nvars} variables leave no expected dimension (need m <= nvars - 1)"
    )]
    TooManyEquations { m: usize, nvars: usize },
}

impl PolySystem {
    pub fn new(polys: Vec<HomogeneousPoly>) -> Result<Self, SystemError> {
        if polys.is_empty() {
            return Err(SystemError::Empty);
        }
        let nvars = polys[0].nvars();
        for (index, p) in polys.iter().enumerate() {
            if p.nvars() != nvars {
                return Err(SystemError::MixedVars {
                    index,
                    expected: nvars,
                    got: p.nvars(),
                });
            }
            if p.is_zero() {
                return Err(SystemError::ZeroPoly { index });
            }
            if p.degree() == 0 {
                return Err(SystemError::ConstantPoly { index });
            }
        }
        let m = polys.len();
        if m > nvars - 1 {
            return Err(SystemError::TooManyEquations { m, nvars });
        }
        Ok(PolySystem { polys, nvars })
    }

    /// Number of equations.
    pub fn m(&self) -> usize {
        self.polys.len()
    }

    /// Number of variables (ambient dimension).
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.polys.iter().map(|p| p.degree()).collect()
    }

    pub fn polys(&self) -> &[HomogeneousPoly] {
        &self.polys
    }
}

/// Random homogeneous polynomial with Bombieri-weighted normal coefficients:
/// the coefficient of `x^alpha` is `N(0,1) * sqrt(d!/alpha!)`. This weighting
/// makes the induced measure on zero sets invariant under orthogonal changes
/// of coordinates.
pub fn random_bombieri<R: Rng>(nvars: usize, degree: usize, rng: &mut R) -> HomogeneousPoly {
    let mut terms = Vec::new();
    for alpha in mindex::enumerate(nvars, degree) {
        let z: f64 = StandardNormal.sample(rng);
        let c = z * (mindex::multinomial(&alpha) as f64).sqrt();
        if c != 0.0 {
            terms.push((alpha, f64_to_rat(c)));
        }
    }
    HomogeneousPoly::new(nvars, degree, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rats(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| rat(x, 1)).collect()
    }

    /// (x^2 + y^2 - t^2)^2 + eps * x y (x - y) (x + y), the quartic family
    /// whose zero set has four small projective components for eps > 0.
    pub(crate) fn perturbed_circle(eps: BigRational) -> HomogeneousPoly {
        // (x^2+y^2-t^2)^2 = x^4 + 2x^2y^2 - 2x^2t^2 + y^4 - 2y^2t^2 + t^4
        // x y (x-y)(x+y) = x^3 y - x y^3
        let mut terms = vec![
            (vec![4, 0, 0], rat(1, 1)),
            (vec![2, 2, 0], rat(2, 1)),
            (vec![2, 0, 2], rat(-2, 1)),
            (vec![0, 4, 0], rat(1, 1)),
            (vec![0, 2, 2], rat(-2, 1)),
            (vec![0, 0, 4], rat(1, 1)),
        ];
        terms.push((vec![3, 1, 0], eps.clone()));
        terms.push((vec![1, 3, 0], -eps));
        HomogeneousPoly::new(3, 4, terms)
    }

    #[test]
    fn eval_simple_values() {
        let p = perturbed_circle(rat(1, 2));
        assert_eq!(p.eval_rat(&rats(&[1, 1, 0])), rat(4, 1));
        assert_eq!(p.eval_rat(&rats(&[1, 0, 1])), rat(0, 1));
        assert_eq!(p.eval_f64(&[1.0, 1.0, 0.0]), 4.0);
        // eval at (1, 2, 1): (1+4-1)^2 + 1/2 * 2 * (-1) * 3 = 16 - 3 = 13
        assert_eq!(p.eval_rat(&rats(&[1, 2, 1])), rat(13, 1));
    }

    #[test]
    fn euler_identity_on_random_quartic() {
        // x . grad p = degree * p for homogeneous p
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = random_bombieri(3, 4, &mut rng);
        let grad = p.gradient();
        for trial in 0..10 {
            let x: Vec<BigRational> = (0..3)
                .map(|i| rat((trial * 3 + i) as i64 % 13 - 6, 7))
                .collect();
            let lhs: BigRational = grad
                .iter()
                .zip(&x)
                .map(|(g, xi)| g.eval_rat(&x) * xi)
                .fold(rat(0, 1), |a, b| a + b);
            let rhs = p.eval_rat(&x) * rat(4, 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gradient_of_square() {
        // p = x^2 in 2 vars: grad = (2x, 0)
        let p = HomogeneousPoly::new(2, 2, [(vec![2, 0], rat(1, 1))]);
        let g = p.gradient();
        assert_eq!(g[0].terms().len(), 1);
        assert_eq!(g[0].terms()[&vec![1, 0]], rat(2, 1));
        assert!(g[1].is_zero());
        assert_eq!(g[1].degree(), 1);
    }

    #[test]
    fn substitute_identity_and_shear() {
        let p = HomogeneousPoly::new(2, 2, [(vec![2, 0], rat(1, 1)), (vec![0, 2], rat(-1, 1))]);
        let id = vec![rats(&[1, 0]), rats(&[0, 1])];
        assert_eq!(p.substitute(&id), p);
        // x = u + v, y = u - v turns x^2 - y^2 into 4uv
        let m = vec![rats(&[1, 1]), rats(&[1, -1])];
        let q = p.substitute(&m);
        assert_eq!(q.terms().len(), 1);
        assert_eq!(q.terms()[&vec![1, 1]], rat(4, 1));
    }

    #[test]
    fn substitute_agrees_with_eval() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = random_bombieri(3, 3, &mut rng);
        let cols = vec![rats(&[1, 2, 0]), rats(&[0, 1, 1])];
        let q = p.substitute(&cols);
        assert_eq!(q.nvars(), 2);
        assert_eq!(q.degree(), 3);
        for (a, b) in [(1i64, 0i64), (0, 1), (2, 3), (-1, 5), (7, -2)] {
            let y = rats(&[a, b]);
            let x: Vec<BigRational> = (0..3)
                .map(|i| &cols[0][i] * &y[0] + &cols[1][i] * &y[1])
                .collect();
            assert_eq!(q.eval_rat(&y), p.eval_rat(&x));
        }
    }

    #[test]
    fn float_mirror_is_close() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let p = random_bombieri(3, 4, &mut rng);
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let xr: Vec<BigRational> = x.iter().map(|&v| f64_to_rat(v)).collect();
            let exact = rat_to_f64(&p.eval_rat(&xr));
            let approx = p.eval_f64(&x);
            let scale = p.coef_one_norm() * x.iter().fold(0.0f64, |m, v| m.max(v.abs())).powi(4);
            assert!(
                (exact - approx).abs() <= 2f64.powi(-40) * scale.max(1e-300),
                "{exact} vs {approx}"
            );
        }
    }

    #[test]
    fn system_rejects_too_many_equations() {
        let p = HomogeneousPoly::new(2, 1, [(vec![1, 0], rat(1, 1))]);
        let q = HomogeneousPoly::new(2, 1, [(vec![0, 1], rat(1, 1))]);
        match PolySystem::new(vec![p, q]) {
            Err(SystemError::TooManyEquations { m: 2, nvars: 2 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn display_round_trips_through_parser() {
        let p = perturbed_circle(rat(1, 2));
        let shown = p.to_string();
        let sys = crate::parse::parse_system(&shown).unwrap();
        assert_eq!(sys.polys()[0], p);
    }
}
