//! Bicyclic nilpotents and fast integrality probes against idempotents.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::AlgElement;
use crate::group::{CayleyGroup, GroupError};
use crate::structure::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `(1 - h) g H~`.
    Left,
    /// `H~ g (1 - h)`.
    Right,
}

/// A bicyclic nilpotent `(1 - h) g H~` or `H~ g (1 - h)` with `h` in `H`.
#[derive(Debug, Clone)]
pub struct BicyclicNilpotent {
    pub h: usize,
    pub g: usize,
    pub subgroup: Subgroup,
    pub side: Side,
}

impl BicyclicNilpotent {
    pub fn new(h: usize, g: usize, subgroup: Subgroup, side: Side) -> Result<Self, GroupError> {
        if !subgroup.contains(h) {
            return Err(GroupError::InvalidParameter("h must lie in H".into()));
        }
        Ok(BicyclicNilpotent { h, g, subgroup, side })
    }

    /// Nonzero iff `g^-1 h g` (left) or `g h g^-1` (right) lies outside `H`.
    pub fn is_nonzero(&self, grp: &CayleyGroup) -> bool {
        match self.side {
            Side::Left => !self.subgroup.contains(grp.conj(self.h, self.g)),
            Side::Right => !self.subgroup.contains(grp.conj(self.h, grp.inv(self.g))),
        }
    }

    /// Dense integer coefficients.
    pub fn coefficients(&self, grp: &CayleyGroup) -> Vec<i64> {
        let mut c = vec![0i64; grp.order()];
        for x in self.subgroup.set().iter() {
            match self.side {
                Side::Left => {
                    let gx = grp.mul(self.g, x);
                    c[gx] += 1;
                    c[grp.mul(self.h, gx)] -= 1;
                }
                Side::Right => {
                    let xg = grp.mul(x, self.g);
                    c[xg] += 1;
                    c[grp.mul(xg, self.h)] -= 1;
                }
            }
        }
        c
    }

    pub fn to_element(&self, grp: &CayleyGroup) -> AlgElement {
        AlgElement::from_ints(&self.coefficients(grp))
    }
}

/// Nonzero bicyclic nilpotents built on `H`, one per `(h, coset of g)`, both sides.
pub fn bicyclics_on(grp: &CayleyGroup, subgroup: &Subgroup) -> Vec<BicyclicNilpotent> {
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        let mut covered = vec![false; grp.order()];
        for g in grp.elements() {
            if covered[g] {
                continue;
            }
            for x in subgroup.set().iter() {
                let y = match side {
                    Side::Left => grp.mul(g, x),
                    Side::Right => grp.mul(x, g),
                };
                covered[y] = true;
            }
            for h in subgroup.set().iter().filter(|&h| h != 0) {
                let b = BicyclicNilpotent { h, g, subgroup: subgroup.clone(), side };
                if b.is_nonzero(grp) {
                    out.push(b);
                }
            }
        }
    }
    out
}

/// An element of `QG` prepared for repeated products with integral elements.
#[derive(Debug, Clone)]
pub struct Probe {
    pub element: AlgElement,
    small: Option<(Vec<(usize, i64)>, i64)>,
}

/// Outcome of multiplying an integral element by a probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Zero,
    IntegralNonzero,
    NonIntegral,
}

impl Probe {
    pub fn new(element: AlgElement) -> Self {
        let small = element.to_i64_parts().and_then(|(num, den)| {
            let sparse: Vec<(usize, i64)> =
                num.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
            let bound = sparse.iter().map(|(_, c)| c.unsigned_abs()).max().unwrap_or(0);
            (bound < (1 << 40)).then_some((sparse, den))
        });
        Probe { element, small }
    }

    /// Classifies `n * self` (or `self * n` when `left` is false) for integral `n`.
    pub fn classify(&self, grp: &CayleyGroup, n: &[i64], n_on_left: bool) -> ProductKind {
        if let Some((sparse, den)) = &self.small {
            let n_sparse: Vec<(usize, i64)> =
                n.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
            let bound: u128 = n_sparse.iter().map(|(_, c)| c.unsigned_abs() as u128).max().unwrap_or(0);
            if bound < (1 << 40) {
                let mut acc = vec![0i128; grp.order()];
                for &(x, a) in &n_sparse {
                    for &(y, b) in sparse {
                        let idx = if n_on_left { grp.mul(x, y) } else { grp.mul(y, x) };
                        acc[idx] += a as i128 * b as i128;
                    }
                }
                let d = *den as i128;
                if acc.iter().all(|&c| c == 0) {
                    return ProductKind::Zero;
                }
                return if acc.iter().all(|&c| c % d == 0) {
                    ProductKind::IntegralNonzero
                } else {
                    ProductKind::NonIntegral
                };
            }
        }
        let ne = AlgElement::from_ints(n);
        let p = if n_on_left { ne.mul(&self.element, grp) } else { self.element.mul(&ne, grp) };
        if p.is_zero() {
            ProductKind::Zero
        } else if p.is_integral() {
            ProductKind::IntegralNonzero
        } else {
            ProductKind::NonIntegral
        }
    }
}

/// Dense integer coefficients of an integral element.
pub fn integral_coefficients(a: &AlgElement) -> Option<Vec<i64>> {
    if !a.is_integral() {
        return None;
    }
    a.numerators()
        .iter()
        .map(|c| if c.is_zero() { Some(0) } else { i64::try_from(c.clone()).ok() })
        .collect()
}

