//! The rational group algebra `QG` with exact coefficients.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::group::CayleyGroup;
use crate::structure::Subgroup;

/// Exact arbitrary precision rational number.
pub type Rational = num_rational::BigRational;

/// An element `sum a_g g` of `QG`, as integer numerators over one common denominator.
///
/// The representation is normalized: the denominator is positive and shares no factor
/// with all numerators at once, so equal elements compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElement {
    num: Vec<BigInt>,
    den: BigInt,
}

fn fits_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

impl AlgElement {
    pub fn zero(n: usize) -> Self {
        AlgElement { num: vec![BigInt::zero(); n], den: BigInt::one() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(n, 0)
    }

    pub fn basis(n: usize, x: usize) -> Self {
        let mut e = Self::zero(n);
        e.num[x] = BigInt::one();
        e
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        AlgElement { num: coeffs.iter().map(|&c| BigInt::from(c)).collect(), den: BigInt::one() }
    }

    /// `num / den`, normalized; `den` must be nonzero.
    pub fn from_parts(num: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut e = AlgElement { num, den };
        e.normalize();
        e
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::from_parts(num, den)
    }

    /// Sum of the listed group elements with multiplicity.
    pub fn sum_of(n: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut e = Self::zero(n);
        for x in elems {
            e.num[x] += 1;
        }
        e
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    /// Dimension of the ambient algebra, i.e. the group order.
    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeff(&self, x: usize) -> Rational {
        Rational::new(self.num[x].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.len()).map(|x| self.coeff(x)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !self.num[x].is_zero()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Coefficient sum.
    pub fn augmentation(&self) -> Rational {
        Rational::new(self.num.iter().sum(), self.den.clone())
    }

    /// Numerators and denominator as machine integers, when they fit.
    pub fn to_i64_parts(&self) -> Option<(Vec<i64>, i64)> {
        let num = self.num.iter().map(fits_i64).collect::<Option<Vec<_>>>()?;
        Some((num, fits_i64(&self.den)?))
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = &self.den * &other.den;
        let num = self.num.iter().zip(&other.num).map(|(a, b)| a * &other.den + b * &self.den).collect();
        Self::from_parts(num, den)
    }

    pub fn neg(&self) -> Self {
        AlgElement { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::from_parts(num, &self.den * q.denom())
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(k)))
    }

    /// Product in `QG`.
    pub fn mul(&self, other: &Self, g: &CayleyGroup) -> Self {
        let n = self.len();
        let den = &self.den * &other.den;
        let sa = self.support();
        let sb = other.support();
        if let (Some(a), Some(b)) = (small_coeffs(&self.num, &sa), small_coeffs(&other.num, &sb)) {
            let ma = a.iter().map(|c| c.unsigned_abs() as u128).max().unwrap_or(0);
            let mb = b.iter().map(|c| c.unsigned_abs() as u128).max().unwrap_or(0);
            let terms = sa.len().min(sb.len()) as u128;
            if ma.saturating_mul(mb).saturating_mul(terms.max(1)) < (1u128 << 126) {
                let mut acc = vec![0i128; n];
                for (i, &x) in sa.iter().enumerate() {
                    for (j, &y) in sb.iter().enumerate() {
                        acc[g.mul(x, y)] += a[i] as i128 * b[j] as i128;
                    }
                }
                return Self::from_parts(acc.into_iter().map(BigInt::from).collect(), den);
            }
        }
        let mut acc = vec![BigInt::zero(); n];
        for &x in &sa {
            for &y in &sb {
                acc[g.mul(x, y)] += &self.num[x] * &other.num[y];
            }
        }
        Self::from_parts(acc, den)
    }

    pub fn pow(&self, k: u32, g: &CayleyGroup) -> Self {
        let mut acc = Self::one(self.len());
        for _ in 0..k {
            acc = acc.mul(self, g);
        }
        acc
    }

    /// `x^-1 a x`.
    pub fn conjugate(&self, g: &CayleyGroup, x: usize) -> Self {
        let mut num = vec![BigInt::zero(); self.len()];
        for y in self.support() {
            num[g.conj(y, x)] = self.num[y].clone();
        }
        AlgElement { num, den: self.den.clone() }
    }

    /// `x a` for a group element `x`.
    pub fn left_mul_group(&self, g: &CayleyGroup, x: usize) -> Self {
        let mut num = vec![BigInt::zero(); self.len()];
        for y in self.support() {
            num[g.mul(x, y)] = self.num[y].clone();
        }
        AlgElement { num, den: self.den.clone() }
    }

    /// `a x` for a group element `x`.
    pub fn right_mul_group(&self, g: &CayleyGroup, x: usize) -> Self {
        let mut num = vec![BigInt::zero(); self.len()];
        for y in self.support() {
            num[g.mul(y, x)] = self.num[y].clone();
        }
        AlgElement { num, den: self.den.clone() }
    }

    pub fn is_idempotent(&self, g: &CayleyGroup) -> bool {
        self.mul(self, g) == *self
    }

    /// Whether some power vanishes; squares until the exponent reaches `|G|`.
    pub fn is_nilpotent(&self, g: &CayleyGroup) -> bool {
        let mut x = self.clone();
        let mut e = 1;
        loop {
            if x.is_zero() {
                return true;
            }
            if e >= g.order() {
                return false;
            }
            x = x.mul(&x, g);
            e *= 2;
        }
    }

    /// Central iff it commutes with every generator of `g`.
    pub fn is_central(&self, g: &CayleyGroup) -> bool {
        g.generator_elements().iter().all(|&s| self.conjugate(g, s) == *self)
    }
}

fn small_coeffs(num: &[BigInt], support: &[usize]) -> Option<Vec<i64>> {
    support.iter().map(|&x| fits_i64(&num[x])).collect()
}

/// `H~`, the sum of the elements of `H`.
pub fn tilde(g: &CayleyGroup, h: &Subgroup) -> AlgElement {
    AlgElement::sum_of(g.order(), h.set().iter())
}

/// `H^ = H~ / |H|`.
pub fn hat(g: &CayleyGroup, h: &Subgroup) -> AlgElement {
    let mut e = tilde(g, h);
    e.den = BigInt::from(h.order());
    e.normalize();
    e
}

/// Rank over `Q` of the right multiplication map `x -> x a`, by exact elimination.
pub fn right_mult_rank(a: &AlgElement, g: &CayleyGroup) -> usize {
    let rows: Vec<Vec<BigInt>> = g
        .elements()
        .map(|x| {
            let mut row = vec![BigInt::zero(); g.order()];
            for y in a.support() {
                row[g.mul(x, y)] = a.num[y].clone();
            }
            row
        })
        .collect();
    integer_rank(rows)
}

/// Rank of an integer matrix, keeping each row primitive during elimination.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (c, pc) in row.iter_mut().zip(&pivot_row).skip(col) {
                *c = &*c * &pv - pc * &f;
            }
            let content = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
            if !content.is_zero() && !content.is_one() {
                for c in row.iter_mut() {
                    *c /= &content;
                }
            }
        }
        rank += 1;
    }
    rank
}
