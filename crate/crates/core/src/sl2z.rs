//! Integer 2x2 matrices, unipotent normal forms and congruence levels.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{AlgElement, Rational};
use crate::group::{CayleyGroup, FamilyTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Sl2Error {
    #[error("determinant is {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("matrix has non-integral entries")]
    NotIntegral,
    #[error("expected a group tagged as the dihedral group of order 8")]
    NotDihedral8,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: &'static str },
}

/// `[[a, b], [c, d]]` with arbitrary precision entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        IntMat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        IntMat2::new(1, 0, 0, 1)
    }

    /// `[[0, 1], [-1, 0]]`.
    pub fn swap() -> Self {
        IntMat2::new(0, 1, -1, 0)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Self) -> Self {
        IntMat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        IntMat2 { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }

    /// The adjugate, which is the inverse when the determinant is 1.
    pub fn adjugate(&self) -> Self {
        IntMat2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn inverse(&self) -> Result<Self, Sl2Error> {
        require_sl2(self)?;
        Ok(self.adjugate())
    }

    /// `[[1, m], [0, 1]]`.
    pub fn upper(m: BigInt) -> Self {
        IntMat2 { a: BigInt::one(), b: m, c: BigInt::zero(), d: BigInt::one() }
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMat2::identity()
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for IntMat2 {
    type Err = Sl2Error;

    /// Parses `[[a,b],[c,d]]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        p.expect(b'[')?;
        p.expect(b'[')?;
        let a = p.int()?;
        p.expect(b',')?;
        let b = p.int()?;
        p.expect(b']')?;
        p.expect(b',')?;
        p.expect(b'[')?;
        let c = p.int()?;
        p.expect(b',')?;
        let d = p.int()?;
        p.expect(b']')?;
        p.expect(b']')?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Sl2Error::Parse { offset: p.pos, expected: "end of input" });
        }
        Ok(IntMat2 { a, b, c, d })
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> Result<(), Sl2Error> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&ch) {
            self.pos += 1;
            Ok(())
        } else {
            let expected = match ch {
                b'[' => "'['",
                b']' => "']'",
                _ => "','",
            };
            Err(Sl2Error::Parse { offset: self.pos, expected })
        }
    }

    fn int(&mut self) -> Result<BigInt, Sl2Error> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(Sl2Error::Parse { offset: start, expected: "an integer" });
        }
        let text = core::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        BigInt::from_str(text).map_err(|_| Sl2Error::Parse { offset: start, expected: "an integer" })
    }
}

fn require_sl2(m: &IntMat2) -> Result<(), Sl2Error> {
    let det = m.det();
    if det.is_one() {
        Ok(())
    } else {
        Err(Sl2Error::NotUnimodular(det))
    }
}

/// `[[x, y], [z, w]]` is nilpotent iff `x = -w` and `x^2 = -yz`.
pub fn nilpotent2x2(m: &IntMat2) -> bool {
    m.a == -&m.d && &m.a * &m.a == -(&m.b * &m.c)
}

/// Whether `u` is unipotent, i.e. `u - 1` is nilpotent.
pub fn is_unipotent(u: &IntMat2) -> bool {
    nilpotent2x2(&u.sub(&IntMat2::identity()))
}

/// `S` in `SL(2, Z)` and `m` with `S^-1 u S = [[1, m], [0, 1]]`.
///
/// For `u - 1 = [[x, y], [z, w]]` with `y != 0`, `S = [[y', a], [-x', b]]` where
/// `(x', y') = (x, y) / g`, `g` is the gcd carrying the sign of `y`, and `a x' + b y' = 1`.
/// Among the admissible Bezout pairs the one with `tr S` in `(-|x'|/2, |x'|/2]` is returned.
/// For `y = 0 != z` the conjugator is `[[0, 1], [-1, 0]]` and `m = -z`.
pub fn unipotent_normal_form(u: &IntMat2) -> Result<(IntMat2, BigInt), Sl2Error> {
    require_sl2(u)?;
    let n = u.sub(&IntMat2::identity());
    if !nilpotent2x2(&n) {
        return Err(Sl2Error::NotUnipotent);
    }
    let (s, m) = if n.b.is_zero() && n.c.is_zero() {
        (IntMat2::identity(), BigInt::zero())
    } else if n.b.is_zero() {
        (IntMat2::swap(), -&n.c)
    } else {
        let (x, y) = (&n.a, &n.b);
        let mut g = x.gcd(y);
        if y.is_negative() {
            g = -g;
        }
        let (xb, yb) = (x / &g, y / &g);
        let eg = xb.extended_gcd(&yb);
        let (mut a, mut b) = if eg.gcd.is_one() { (eg.x, eg.y) } else { (-eg.x, -eg.y) };
        if !xb.is_zero() {
            let t0 = &yb + &b;
            let modulus = xb.abs();
            let mut r = t0.mod_floor(&modulus);
            if &r * 2 > modulus {
                r -= &modulus;
            }
            let k = (&t0 - &r) / &xb;
            a += &k * &yb;
            b -= &k * &xb;
        } else {
            a = BigInt::zero();
        }
        let s = IntMat2 { a: yb.clone(), b: a, c: -xb, d: b };
        let conj = s.adjugate().mul(&n).mul(&s);
        (s, conj.b)
    };
    assert!(s.det().is_one(), "conjugator must lie in SL(2, Z)");
    assert_eq!(s.adjugate().mul(u).mul(&s), IntMat2::upper(m.clone()), "normal form must be upper unitriangular");
    Ok((s, m))
}

/// Largest `n` with `M` in `Gamma(n)`; the identity lies in every `Gamma(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CongruenceLevel {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for CongruenceLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceLevel::Finite(n) => write!(f, "{n}"),
            CongruenceLevel::Infinite => f.write_str("infinite"),
        }
    }
}

/// `gcd(a - 1, d - 1, b, c)`.
pub fn congruence_level(m: &IntMat2) -> Result<CongruenceLevel, Sl2Error> {
    require_sl2(m)?;
    let n = m.sub(&IntMat2::identity());
    let g = n.a.gcd(&n.b).gcd(&n.c).gcd(&n.d);
    Ok(if g.is_zero() { CongruenceLevel::Infinite } else { CongruenceLevel::Finite(g) })
}

/// Membership in `V_m`: `M = [[1 + m l2, m t1], [m t2, 1 + m l1]]` with `l1 = l2` and
/// `t1 = t2` modulo 2.
pub fn in_v(m: &IntMat2, level: &BigInt) -> Result<bool, Sl2Error> {
    require_sl2(m)?;
    if level.is_zero() || level.is_negative() {
        return Err(Sl2Error::InvalidParameter("the level must be positive".into()));
    }
    let n = m.sub(&IntMat2::identity());
    if [&n.a, &n.b, &n.c, &n.d].iter().any(|v| !v.is_multiple_of(level)) {
        return Ok(false);
    }
    let (l2, t1, t2, l1) = (&n.a / level, &n.b / level, &n.c / level, &n.d / level);
    let two = BigInt::from(2);
    Ok((l1 - l2).is_multiple_of(&two) && (t1 - t2).is_multiple_of(&two))
}

/// Whether the `(2, 3, n)` triangle group is finite, which happens iff `n <= 5`.
pub fn triangle_quotient_is_finite(n: u64) -> Result<bool, Sl2Error> {
    if n == 0 {
        return Err(Sl2Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(n <= 5)
}

/// A 2x2 matrix with rational entries, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat2(pub [Rational; 4]);

impl RatMat2 {
    pub fn zero() -> Self {
        RatMat2(core::array::from_fn(|_| Rational::zero()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (p, q) = (&self.0, &o.0);
        RatMat2([
            &p[0] * &q[0] + &p[1] * &q[2],
            &p[0] * &q[1] + &p[1] * &q[3],
            &p[2] * &q[0] + &p[3] * &q[2],
            &p[2] * &q[1] + &p[3] * &q[3],
        ])
    }

    pub fn add(&self, o: &Self) -> Self {
        RatMat2(core::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RatMat2(core::array::from_fn(|i| &self.0[i] * k))
    }

    /// The integer matrix, if every entry is an integer.
    pub fn to_int(&self) -> Result<IntMat2, Sl2Error> {
        if self.0.iter().any(|x| !x.is_integer()) {
            return Err(Sl2Error::NotIntegral);
        }
        let e: Vec<BigInt> = self.0.iter().map(|x| x.to_integer()).collect();
        Ok(IntMat2 { a: e[0].clone(), b: e[1].clone(), c: e[2].clone(), d: e[3].clone() })
    }
}

impl From<&IntMat2> for RatMat2 {
    fn from(m: &IntMat2) -> Self {
        let r = |x: &BigInt| Rational::from_integer(x.clone());
        RatMat2([r(&m.a), r(&m.b), r(&m.c), r(&m.d)])
    }
}

/// Images of the group elements of the dihedral group of order 8 under
/// `a -> [[0, 1], [-1, 0]]`, `b -> [[0, 1], [1, 0]]`, indexed like the group.
pub fn d8_images(g: &CayleyGroup) -> Result<Vec<IntMat2>, Sl2Error> {
    if g.tag() != Some(FamilyTag::Dihedral { order: 8 }) {
        return Err(Sl2Error::NotDihedral8);
    }
    let gens = [
        (g.generator("a").ok_or(Sl2Error::NotDihedral8)?, IntMat2::new(0, 1, -1, 0)),
        (g.generator("b").ok_or(Sl2Error::NotDihedral8)?, IntMat2::new(0, 1, 1, 0)),
    ];
    let mut img: Vec<Option<IntMat2>> = alloc::vec![None; g.order()];
    img[0] = Some(IntMat2::identity());
    let mut queue = alloc::vec![0usize];
    while let Some(x) = queue.pop() {
        for (s, ms) in &gens {
            let y = g.mul(x, *s);
            if img[y].is_none() {
                img[y] = Some(img[x].as_ref().expect("visited").mul(ms));
                queue.push(y);
            }
        }
    }
    Ok(img.into_iter().map(|m| m.expect("generators generate")).collect())
}

/// The linear extension of [`d8_images`] to `Q D_8`.
pub fn d8_embedding(g: &CayleyGroup, x: &AlgElement) -> Result<RatMat2, Sl2Error> {
    let images = d8_images(g)?;
    if x.len() != g.order() {
        return Err(Sl2Error::InvalidParameter("element lives in a different group ring".into()));
    }
    Ok(images.iter().enumerate().fold(RatMat2::zero(), |acc, (i, m)| {
        let c = x.coeff(i);
        if c.is_zero() {
            acc
        } else {
            acc.add(&RatMat2::from(m).scale(&c))
        }
    }))
}

/// Whether an integer matrix `[[a, b], [c, d]]` has `a = d` and `b = c` modulo 2.
pub fn d8_image_member(m: &RatMat2) -> Result<bool, Sl2Error> {
    let m = m.to_int()?;
    let two = BigInt::from(2);
    Ok((&m.a - &m.d).is_multiple_of(&two) && (&m.b - &m.c).is_multiple_of(&two))
}
