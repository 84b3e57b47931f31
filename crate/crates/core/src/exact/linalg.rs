//! Fraction-free determinants and exact ranks.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{Deadline, ExactError, MultiPoly, Rational};

/// Commutative ring with exact division, as needed by Bareiss elimination.
pub trait Ring: Clone + Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other`, which the caller guarantees to be exact.
    fn exact_div(&self, other: &Self) -> Result<Self, ExactError>;

    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }
}

impl Ring for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigInt::from(n)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Result<Self, ExactError> {
        if Zero::is_zero(other) {
            return Err(ExactError::DivisionByZero);
        }
        let (q, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(ExactError::NotDivisible)
        }
    }
}

impl Ring for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Result<Self, ExactError> {
        if Zero::is_zero(other) {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self / other)
    }
}

impl Ring for MultiPoly {
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        MultiPoly::zero_in(self.vars_arc().clone())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        MultiPoly::constant_in(self.vars_arc().clone(), Rational::from_integer(BigInt::from(n)))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Result<Self, ExactError> {
        MultiPoly::exact_div(self, other)
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize, ExactError> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(ExactError::NonSquare { rows: n, cols: row.len() });
        }
    }
    Ok(n)
}

/// Determinant by Bareiss fraction-free elimination over any exact ring.
///
/// `one` is the ring's unit, needed only to answer the empty matrix.
pub fn bareiss_determinant<R: Ring>(matrix: &[Vec<R>], one: &R, deadline: Deadline) -> Result<R, ExactError> {
    let n = check_square(matrix)?;
    if n == 0 {
        return Ok(one.one_like());
    }
    let mut a: Vec<Vec<R>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = one.one_like();
    for k in 0..n - 1 {
        deadline.check()?;
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(one.zero_like()),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = pivot.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = v.exact_div(&prev)?;
            }
            row[k] = one.zero_like();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Determinant of a rational matrix: rows are scaled to integers, then Bareiss
/// runs over `Z`.
pub fn determinant_rational(matrix: &[Vec<Rational>], deadline: Deadline) -> Result<Rational, ExactError> {
    check_square(matrix)?;
    let mut scale = BigInt::one();
    let mut int_rows = Vec::with_capacity(matrix.len());
    for row in matrix {
        let l = row.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        int_rows.push(row.iter().map(|c| c.numer() * (&l / c.denom())).collect::<Vec<_>>());
        scale *= l;
    }
    let det = bareiss_determinant(&int_rows, &BigInt::one(), deadline)?;
    Ok(Rational::new(det, scale))
}

/// Arithmetic of an exact field, used by rank computations and residue fields.
pub trait Field: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    /// Field characteristic (0 for `Q`).
    fn characteristic(&self) -> u64;

    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl Field for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        num_traits::Inv::inv(self.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// Element of the prime field `F_p`, carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 2);
        Fp { value: value % modulus, modulus }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        Fp { value: (value as i128).rem_euclid(m) as u64, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            base = Field::mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv_checked(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            // modulus is prime, so Fermat applies
            Some(self.pow(self.modulus - 2))
        }
    }
}

impl Field for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn zero_like(&self) -> Self {
        Fp::new(0, self.modulus)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp::from_i64(n, self.modulus)
    }
    fn add(&self, other: &Self) -> Self {
        Fp::new(((self.value as u128 + other.value as u128) % self.modulus as u128) as u64, self.modulus)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp::new(
            ((self.value as u128 + self.modulus as u128 - other.value as u128) % self.modulus as u128) as u64,
            self.modulus,
        )
    }
    fn mul(&self, other: &Self) -> Self {
        Fp::new(((self.value as u128 * other.value as u128) % self.modulus as u128) as u64, self.modulus)
    }
    fn neg(&self) -> Self {
        Fp::new((self.modulus - self.value) % self.modulus, self.modulus)
    }
    fn inv(&self) -> Self {
        self.inv_checked().expect("inverse of zero in F_p")
    }
    fn characteristic(&self) -> u64 {
        self.modulus
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankInfo {
    pub rank: usize,
    /// Dimension of the right kernel (`columns - rank`).
    pub nullity: usize,
}

/// Rank by Gaussian elimination over an exact field.
pub fn kernel_rank<F: Field>(rows: &[Vec<F>]) -> RankInfo {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<F>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].inv();
        for j in col..ncols {
            a[rank][j] = a[rank][j].mul(&inv);
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in bottom.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..ncols {
                row[j] = row[j].sub(&f.mul(&pivot[j]));
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    RankInfo { rank, nullity: ncols - rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use rand::{Rng, SeedableRng};

    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 0 {
            return rat(1);
        }
        let mut acc = rat(0);
        for j in 0..n {
            let minor: Vec<Vec<Rational>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect()).collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn small_determinants() {
        let m = vec![
            vec![rat(2), rat(0), rat(0)],
            vec![rat(0), rat(2), rat(0)],
            vec![rat(0), rat(0), rat(2)],
        ];
        assert_eq!(determinant_rational(&m, Deadline::none()).unwrap(), rat(8));
        let id: Vec<Vec<Rational>> = (0..5).map(|i| (0..5).map(|j| rat((i == j) as i64)).collect()).collect();
        assert_eq!(determinant_rational(&id, Deadline::none()).unwrap(), rat(1));
        let m = vec![vec![rat(1), rat(2), rat(3)], vec![rat(4), rat(5), rat(6)], vec![rat(7), rat(8), rat(10)]];
        assert_eq!(determinant_rational(&m, Deadline::none()).unwrap(), cofactor_det(&m));
        assert_eq!(cofactor_det(&m), rat(-3));
    }

    #[test]
    fn pivoting_and_rationals() {
        let m = vec![vec![rat(0), ratio(1, 2)], vec![ratio(2, 3), rat(5)]];
        assert_eq!(determinant_rational(&m, Deadline::none()).unwrap(), ratio(-1, 3));
        assert_eq!(determinant_rational(&Vec::new(), Deadline::none()).unwrap(), rat(1));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = vec![vec![rat(1), rat(2)]];
        assert!(matches!(determinant_rational(&m, Deadline::none()), Err(ExactError::NonSquare { .. })));
    }

    #[test]
    fn expired_deadline_cancels() {
        let m: Vec<Vec<Rational>> = (0..4).map(|i| (0..4).map(|j| rat(i * j + 1)).collect()).collect();
        let past = Deadline::at(std::time::Instant::now() - std::time::Duration::from_secs(1));
        assert_eq!(determinant_rational(&m, past), Err(ExactError::Cancelled));
    }

    #[test]
    fn polynomial_determinant() {
        let v = ["a", "b", "c", "d"];
        let g = |n| MultiPoly::var(&v, n).unwrap();
        let m = vec![vec![g("a"), g("b")], vec![g("c"), g("d")]];
        let det = bareiss_determinant(&m, &MultiPoly::one(&v), Deadline::none()).unwrap();
        assert_eq!(det, &(&g("a") * &g("d")) - &(&g("b") * &g("c")));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=4 {
            for _ in 0..25 {
                let m: Vec<Vec<Rational>> =
                    (0..n).map(|_| (0..n).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect()).collect();
                assert_eq!(determinant_rational(&m, Deadline::none()).unwrap(), cofactor_det(&m));
            }
        }
    }

    fn reference_rank_mod_p(m: &[Vec<u64>], p: u64) -> usize {
        // row echelon by repeated elimination of the first nonzero column
        let mut rows: Vec<Vec<u64>> = m.to_vec();
        let mut rank = 0;
        while let Some(col) = (0..rows.first().map_or(0, |r| r.len())).find(|&c| rows.iter().any(|r| r[c] != 0)) {
            let i = rows.iter().position(|r| r[col] != 0).unwrap();
            let pivot = rows.remove(i);
            let inv = Fp::new(pivot[col], p).inv().value();
            for r in rows.iter_mut() {
                let f = (r[col] * inv) % p;
                for (x, y) in r.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_over_prime_field() {
        let p = 101;
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let raw: Vec<Vec<u64>> = (0..5)
                .map(|_| (0..7).map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(0..p) }).collect())
                .collect();
            let mut raw = raw;
            // force some dependence
            let dup: Vec<u64> = raw[0].iter().zip(&raw[1]).map(|(a, b)| (a + 3 * b) % p).collect();
            raw[4] = dup;
            let m: Vec<Vec<Fp>> = raw.iter().map(|r| r.iter().map(|&v| Fp::new(v, p)).collect()).collect();
            let info = kernel_rank(&m);
            assert_eq!(info.rank, reference_rank_mod_p(&raw, p));
            assert_eq!(info.rank + info.nullity, 7);
        }
    }

    #[test]
    fn rank_trivial_cases() {
        let zero = vec![vec![rat(0); 3]; 3];
        assert_eq!(kernel_rank(&zero).rank, 0);
        let id: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| rat((i == j) as i64)).collect()).collect();
        assert_eq!(kernel_rank(&id), RankInfo { rank: 3, nullity: 0 });
    }
}
