//! Scalar arithmetic shared by the float search phase and the exact rational
//! checking phase.
//!
//! Every numeric routine in this crate is written once, generically over
//! [`Coeff`], and instantiated at `f64` (fast, approximate, used to *search*
//! for certificates) and at [`BigRational`] (exact, used to *check* them).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Strict sign of a nonzero quantity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Pos => Sign::Neg,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Pos => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Neg),
            '+' => Some(Sign::Pos),
            _ => None,
        }
    }

    /// Sign as a multiplier, `+1` or `-1`.
    pub fn factor(self) -> i64 {
        match self {
            Sign::Neg => -1,
            Sign::Pos => 1,
        }
    }
}

/// Coefficient scalar: the closed set of operations the polynomial, Bernstein
/// and linear-algebra code needs. Implemented for `f64` and `BigRational`.
pub trait Coeff: Clone + PartialOrd + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;
    fn from_int(k: i64) -> Self;
    /// Division by a positive integer (exact for rationals).
    fn div_nat(&self, k: u128) -> Self;
    /// Multiplication by a non-negative integer.
    fn mul_nat(&self, k: u128) -> Self;
    fn half(&self) -> Self {
        self.div_nat(2)
    }
    /// Strict sign; `None` for zero.
    fn sign(&self) -> Option<Sign>;
    /// Is `xs` a valid barycentric coordinate vector (entries >= 0, summing
    /// to 1)?  Exact for rationals, toleranced for floats.
    fn is_barycentric(xs: &[Self]) -> bool;
}

impl Coeff for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn from_int(k: i64) -> Self {
        k as f64
    }
    fn div_nat(&self, k: u128) -> Self {
        self / k as f64
    }
    fn mul_nat(&self, k: u128) -> Self {
        self * k as f64
    }
    fn sign(&self) -> Option<Sign> {
        if *self > 0.0 {
            Some(Sign::Pos)
        } else if *self < 0.0 {
            Some(Sign::Neg)
        } else {
            None
        }
    }
    fn is_barycentric(xs: &[Self]) -> bool {
        xs.iter().all(|&x| x >= -1e-12) && (xs.iter().sum::<f64>() - 1.0).abs() <= 1e-9
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn from_int(k: i64) -> Self {
        BigRational::from_integer(BigInt::from(k))
    }
    fn div_nat(&self, k: u128) -> Self {
        self / BigRational::from_integer(BigInt::from(k))
    }
    fn mul_nat(&self, k: u128) -> Self {
        self * BigRational::from_integer(BigInt::from(k))
    }
    fn sign(&self) -> Option<Sign> {
        if self.is_positive() {
            Some(Sign::Pos)
        } else if self.is_negative() {
            Some(Sign::Neg)
        } else {
            None
        }
    }
    fn is_barycentric(xs: &[Self]) -> bool {
        let mut sum: BigRational = num_traits::Zero::zero();
        for x in xs {
            if x.is_negative() {
                return false;
            }
            sum += x;
        }
        num_traits::One::is_one(&sum)
    }
}

/// Correctly rounded (nearest, ties to even) conversion of an exact rational
/// to binary64.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    if Zero::is_zero(r) {
        return 0.0;
    }
    let negative = r.is_negative();
    let num = Signed::abs(r.numer());
    let den = Signed::abs(r.denom());
    let e = num.bits() as i64 - den.bits() as i64;
    // Scale so the integer quotient carries 54 or 55 significant bits.
    let shift = e - 54;
    let (n2, d2) = if shift >= 0 {
        (num, den << shift as u64)
    } else {
        (num << (-shift) as u64, den)
    };
    let (mut q, rem) = n2.div_rem(&d2);
    let mut sticky = !rem.is_zero();
    // Reduce q to exactly 53 bits with guard/sticky rounding.
    let mut exp = shift;
    while q.bits() > 53 {
        let drop = q.bits() - 53;
        let guard_pos = drop - 1;
        let guard = q.bit(guard_pos);
        let low_mask = (BigInt::from(1) << guard_pos) - 1;
        if !(&q & &low_mask).is_zero() {
            sticky = true;
        }
        q >>= drop;
        exp += drop as i64;
        if guard && (sticky || q.is_odd()) {
            q += 1; // may carry to 54 bits; loop handles it
            sticky = false;
        } else {
            break;
        }
    }
    let mantissa = q.to_u64_digits().1.first().copied().unwrap_or(0);
    let mag = if exp > 1024 {
        f64::INFINITY
    } else if exp < -1140 {
        0.0
    } else if exp >= -1022 {
        (mantissa as f64) * 2f64.powi(exp as i32)
    } else {
        // keep the intermediate normal so the only rounding is the final one
        ((mantissa as f64) * 2f64.powi((exp + 537) as i32)) * 2f64.powi(-537)
    };
    if negative {
        -mag
    } else {
        mag
    }
}

/// Exact dyadic rational equal to a finite float.
pub fn f64_to_rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

/// Solve the square system `A X = B` by Gaussian elimination with partial
/// pivoting; `a` is row-major `n x n`, `b` row-major `n x k`. Returns `None`
/// when a zero pivot is met (singular matrix).
pub fn solve_mat<T: Coeff>(a: &[Vec<T>], b: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = a.len();
    let k = if n == 0 {
        return Some(Vec::new());
    } else {
        b[0].len()
    };
    let mut m: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(b[i].iter().cloned());
            row
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).max_by(|&i, &j| {
            m[i][col]
                .abs()
                .partial_cmp(&m[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if m[pivot_row][col].is_zero() {
            return None;
        }
        m.swap(col, pivot_row);
        for row in 0..n {
            if row != col && !m[row][col].is_zero() {
                let f = m[row][col].div(&m[col][col]);
                #[allow(clippy::needless_range_loop)] // two rows of `m` in play
                for j in col..n + k {
                    let t = f.mul(&m[col][j]);
                    m[row][j] = m[row][j].sub(&t);
                }
            }
        }
    }
    let mut x = vec![vec![T::zero(); k]; n];
    for i in 0..n {
        for j in 0..k {
            x[i][j] = m[i][n + j].div(&m[i][i]);
        }
    }
    Some(x)
}

/// Rank of a row-major matrix.
pub fn rank_of<T: Coeff>(a: &[Vec<T>]) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<T>> = a.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).max_by(|&i, &j| {
            m[i][col]
                .abs()
                .partial_cmp(&m[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let pivot = match pivot {
            Some(p) if !m[p][col].is_zero() => p,
            _ => continue,
        };
        m.swap(rank, pivot);
        for row in rank + 1..rows {
            if !m[row][col].is_zero() {
                let f = m[row][col].div(&m[rank][col]);
                #[allow(clippy::needless_range_loop)] // two rows of `m` in play
                for j in col..cols {
                    let t = f.mul(&m[rank][j]);
                    m[row][j] = m[row][j].sub(&t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Basis vector of the kernel of a row-major `r x c` matrix whose kernel is
/// one-dimensional (`rank == c - 1`); `None` otherwise.
pub fn kernel_vector<T: Coeff>(a: &[Vec<T>]) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = if rows == 0 { return None } else { a[0].len() };
    let mut m: Vec<Vec<T>> = a.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).max_by(|&i, &j| {
            m[i][col]
                .abs()
                .partial_cmp(&m[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let pivot = match pivot {
            Some(p) if !m[p][col].is_zero() => p,
            _ => continue,
        };
        m.swap(rank, pivot);
        for row in 0..rows {
            if row != rank && !m[row][col].is_zero() {
                let f = m[row][col].div(&m[rank][col]);
                #[allow(clippy::needless_range_loop)] // two rows of `m` in play
                for j in 0..cols {
                    let t = f.mul(&m[rank][j]);
                    m[row][j] = m[row][j].sub(&t);
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    if rank != cols.checked_sub(1)? {
        return None;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_col = (0..cols).find(|c| !pivot_cols.contains(c))?;
    let mut x = vec![T::zero(); cols];
    x[free_col] = T::one();
    for &(row, col) in &pivots {
        // m[row][col]*x[col] + m[row][free_col] = 0
        x[col] = m[row][free_col].div(&m[row][col]).neg();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rat_to_f64_matches_native_division() {
        for (n, d) in [
            (1i64, 3i64),
            (2, 3),
            (-7, 11),
            (1, 200),
            (355, 113),
            (-1, 10),
            (123456789, 987654321),
        ] {
            assert_eq!(rat_to_f64(&rat(n, d)), n as f64 / d as f64, "{n}/{d}");
        }
    }

    #[test]
    fn rat_to_f64_rounds_to_nearest() {
        // 2^60 + 1 over 2^60 rounds back to 1.0
        let big = BigInt::from(1u64 << 60);
        let r = BigRational::new(&big + 1, big.clone());
        assert_eq!(rat_to_f64(&r), 1.0);
        // (2^53 + 1) is exactly halfway between 2^53 and 2^53 + 2: ties to even
        let r = BigRational::from_integer(BigInt::from((1u64 << 53) + 1));
        assert_eq!(rat_to_f64(&r), (1u64 << 53) as f64);
        // exact dyadics round-trip, down to the smallest subnormal
        for x in [0.1, -3.75, 1e-300, 2.5e17, -0.0078125, 5e-324, -2.5e-320] {
            assert_eq!(rat_to_f64(&f64_to_rat(x)), x);
        }
    }

    #[test]
    fn rat_to_f64_big_operands() {
        let n: BigInt = BigInt::from(10).pow(40u32) + 17;
        let d: BigInt = BigInt::from(3).pow(70u32);
        let r = BigRational::new(n.clone(), d.clone());
        let got = rat_to_f64(&r);
        let approx = n.to_f64().unwrap() / d.to_f64().unwrap();
        assert!((got - approx).abs() <= approx.abs() * 1e-15);
    }

    #[test]
    fn solve_small_exact_system() {
        let a = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]];
        let b = vec![vec![rat(5, 1)], vec![rat(10, 1)]];
        let x = solve_mat(&a, &b).unwrap();
        assert_eq!(x[0][0], rat(1, 1));
        assert_eq!(x[1][0], rat(3, 1));
    }

    #[test]
    fn singular_system_is_rejected() {
        let a = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        let b = vec![vec![rat(1, 1)], vec![rat(2, 1)]];
        assert!(solve_mat(&a, &b).is_none());
        assert_eq!(rank_of(&a), 1);
    }

    #[test]
    fn kernel_of_codim_one_matrix() {
        // rows span the plane z = x + y; kernel generated by (1, 1, -1)·t
        let a = vec![
            vec![rat(1, 1), rat(0, 1), rat(1, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ];
        let k = kernel_vector(&a).unwrap();
        // a · k = 0
        for row in &a {
            let dot = row
                .iter()
                .zip(&k)
                .fold(<BigRational as Coeff>::zero(), |s, (a, b)| s + a * b);
            assert!(num_traits::Zero::is_zero(&dot));
        }
        assert!(k.iter().any(|x| !num_traits::Zero::is_zero(x)));
    }
}
