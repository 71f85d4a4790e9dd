//! Hilbert symbols over `Q` and splitting of rational quaternion algebras.

use alloc::vec::Vec;

/// A place of `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    Infinity,
    Prime(u64),
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(u / p)` for an odd prime `p` not dividing `u`.
fn legendre(u: i64, p: u64) -> i8 {
    let r = u.rem_euclid(p as i64) as u64;
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn split_off(mut a: i64, p: i64) -> (u32, i64) {
    let mut k = 0;
    while a % p == 0 {
        a /= p;
        k += 1;
    }
    (k, a)
}

/// `(a, b)_v` for nonzero integers `a`, `b`.
pub fn hilbert_symbol(a: i64, b: i64, place: Place) -> i8 {
    assert!(a != 0 && b != 0, "Hilbert symbol of zero");
    match place {
        Place::Infinity => {
            if a < 0 && b < 0 {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_off(a, 2);
            let (beta, v) = split_off(b, 2);
            let eps = |x: i64| ((x - 1) / 2).rem_euclid(2) as u32;
            let omega = |x: i64| match x.rem_euclid(8) {
                1 | 7 => 0,
                _ => 1,
            };
            let e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = split_off(a, p as i64);
            let (beta, v) = split_off(b, p as i64);
            let mut s: i8 = if (alpha as u64 * beta as u64 * ((p - 1) / 2)).is_multiple_of(2) { 1 } else { -1 };
            if beta % 2 == 1 {
                s *= legendre(u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(v, p);
            }
            s
        }
    }
}

/// Primes dividing `n`.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Places where `(a, b)_v = -1`.
pub fn ramified_places(a: i64, b: i64) -> Vec<Place> {
    let mut places = Vec::new();
    if hilbert_symbol(a, b, Place::Infinity) == -1 {
        places.push(Place::Infinity);
    }
    let n = 2u64 * a.unsigned_abs() * b.unsigned_abs();
    for p in prime_divisors(n) {
        if hilbert_symbol(a, b, Place::Prime(p)) == -1 {
            places.push(Place::Prime(p));
        }
    }
    places
}

/// Whether the quaternion algebra `(a, b)_Q` is a matrix algebra.
pub fn quaternion_splits_over_q(a: i64, b: i64) -> bool {
    ramified_places(a, b).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        assert!(!quaternion_splits_over_q(-1, -1));
        assert_eq!(ramified_places(-1, -1), alloc::vec![Place::Infinity, Place::Prime(2)]);
        assert!(quaternion_splits_over_q(-1, 1));
        assert!(quaternion_splits_over_q(-3, 1));
        assert!(!quaternion_splits_over_q(-3, -1));
        assert!(quaternion_splits_over_q(1, 7));
        assert!(quaternion_splits_over_q(2, 7));
        assert_eq!(hilbert_symbol(3, 3, Place::Prime(3)), -1);
        assert_eq!(hilbert_symbol(-1, 5, Place::Prime(5)), 1);
    }
}
