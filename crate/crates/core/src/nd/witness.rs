//! Explicit nilpotent witnesses: the `(r, s, y, e)` construction for `G(p, m, n)` and the
//! `(1 - y) x (1 + y)` elements for groups with a non-central involution.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::{hat, tilde, AlgElement, Rational};
use crate::group::families::gpmn;
use crate::group::{CayleyGroup, FamilyTag, GroupError};
use crate::nd::bicyclic::integral_coefficients;
use crate::structure::{closure, cyclic_subgroup};

/// Data `(r, s, y, e)` over a prime `p`; `y (r + s) / p` is the candidate nilpotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTriple {
    pub r: AlgElement,
    pub s: AlgElement,
    pub y: AlgElement,
    pub e: AlgElement,
    pub p: u32,
}

/// Outcome of every condition checked by [`thersy_verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThersyReport {
    /// `r`, `s`, `y` have integer coefficients.
    pub integral_inputs: bool,
    /// `y` commutes with every group element.
    pub y_central: bool,
    /// `e` is a central idempotent.
    pub e_central_idempotent: bool,
    /// `rs = sr = 0`.
    pub orthogonal: bool,
    pub r_nilpotent: bool,
    pub s_nilpotent: bool,
    /// `r^2 = s^2 = 0`, the strongest form of condition (i).
    pub square_zero: bool,
    /// `er = r` and `es = 0`.
    pub condition_ii: bool,
    /// `y (r + s) / p` is integral.
    pub condition_iii: bool,
    /// `y r / p` is not integral.
    pub condition_iv: bool,
    /// Direct check that `n = y (r + s) / p` is nilpotent.
    pub n_nilpotent: bool,
    /// Direct check that `n e = y r / p`.
    pub ne_matches: bool,
}

impl ThersyReport {
    /// Condition (i) in the form used: `rs = sr = 0` with `r` and `s` nilpotent.
    pub fn condition_i(&self) -> bool {
        self.orthogonal && self.r_nilpotent && self.s_nilpotent
    }

    pub fn accepted(&self) -> bool {
        self.integral_inputs
            && self.e_central_idempotent
            && self.condition_i()
            && self.condition_ii
            && self.condition_iii
            && self.condition_iv
            && self.n_nilpotent
            && self.ne_matches
    }
}

impl WitnessTriple {
    /// `y (r + s) / p`.
    pub fn nilpotent(&self, g: &CayleyGroup) -> AlgElement {
        self.y.mul(&self.r.add(&self.s), g).scale(&inv_p(self.p))
    }
}

fn inv_p(p: u32) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(p))
}

/// Checks the four conditions and confirms the resulting element directly.
pub fn thersy_report(w: &WitnessTriple, g: &CayleyGroup) -> ThersyReport {
    let order = g.order();
    let zero = AlgElement::zero(order);
    let inv = inv_p(w.p);
    let rs = w.r.mul(&w.s, g);
    let sr = w.s.mul(&w.r, g);
    let yr = w.y.mul(&w.r, g).scale(&inv);
    let n = w.nilpotent(g);
    let all_commute = g.elements().all(|x| w.y.conjugate(g, x) == w.y);
    ThersyReport {
        integral_inputs: w.r.is_integral() && w.s.is_integral() && w.y.is_integral(),
        y_central: all_commute,
        e_central_idempotent: w.e.is_idempotent(g) && g.elements().all(|x| w.e.conjugate(g, x) == w.e),
        orthogonal: rs == zero && sr == zero,
        r_nilpotent: w.r.is_nilpotent(g),
        s_nilpotent: w.s.is_nilpotent(g),
        square_zero: w.r.mul(&w.r, g) == zero && w.s.mul(&w.s, g) == zero,
        condition_ii: w.e.mul(&w.r, g) == w.r && w.e.mul(&w.s, g) == zero,
        condition_iii: n.is_integral(),
        condition_iv: !yr.is_integral(),
        n_nilpotent: n.is_nilpotent(g),
        ne_matches: n.mul(&w.e, g) == yr,
    }
}

/// Whether the triple certifies that `g` fails ND.
pub fn thersy_verify(w: &WitnessTriple, g: &CayleyGroup) -> bool {
    thersy_report(w, g).accepted()
}

struct Ring<'a> {
    g: &'a CayleyGroup,
}

impl Ring<'_> {
    fn el(&self, x: usize) -> AlgElement {
        AlgElement::basis(self.g.order(), x)
    }
    fn one(&self) -> AlgElement {
        AlgElement::one(self.g.order())
    }
    /// `1 - x`.
    fn one_minus(&self, x: usize) -> AlgElement {
        self.one().sub(&self.el(x))
    }
    fn prod(&self, factors: &[AlgElement]) -> AlgElement {
        factors.iter().fold(self.one(), |acc, f| acc.mul(f, self.g))
    }
    fn hat_of(&self, gens: &[usize]) -> AlgElement {
        hat(self.g, &closure(self.g, gens))
    }
    fn tilde_cyclic(&self, x: usize) -> AlgElement {
        tilde(self.g, &cyclic_subgroup(self.g, x))
    }
}

/// Whether the construction covers `G(p, m, n)`.
pub fn witness_range_ok(p: u32, m: u32, n: u32) -> bool {
    if n < 2 || m < 2 {
        return false;
    }
    if p == 2 {
        return !matches!((m, n), (2, 2) | (2, 3));
    }
    true
}

/// Where a witness triple came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessSource {
    /// The closed formulas for `r`, `s`, `y`, `e`.
    Formula,
    /// Strictly triangular nilpotents in the matrix components, combined by linear algebra
    /// modulo `p`; used when `m = 2`, where the formula's `y` is not central.
    Triangular,
}

/// A verified triple for a `G(p, m, n)` instance.
#[derive(Debug, Clone)]
pub struct GpmnWitness {
    pub triple: WitnessTriple,
    pub source: WitnessSource,
}

/// The verified triple for `G(p, m, n)` together with the group it lives in.
pub fn witness_gpmn(p: u32, m: u32, n: u32) -> Result<(CayleyGroup, GpmnWitness), GroupError> {
    if !witness_range_ok(p, m, n) {
        return Err(GroupError::InvalidParameter(format!("no witness construction for G({p},{m},{n})")));
    }
    let g = gpmn(p, m, n)?;
    let w = witness_for_tagged(&g)?;
    Ok((g, w))
}

/// The formula triple when it verifies, otherwise the triangular one.
pub fn witness_for_tagged(g: &CayleyGroup) -> Result<GpmnWitness, GroupError> {
    let formula = formula_triple(g)?;
    if thersy_verify(&formula, g) {
        return Ok(GpmnWitness { triple: formula, source: WitnessSource::Formula });
    }
    triangular_triple(g)
        .map(|triple| GpmnWitness { triple, source: WitnessSource::Triangular })
        .ok_or_else(|| GroupError::InvalidParameter("no triangular witness found".into()))
}

fn gpmn_params(g: &CayleyGroup) -> Result<(u32, u32, u32, usize, usize), GroupError> {
    let Some(FamilyTag::Gpmn { p, m, n }) = g.tag() else {
        return Err(GroupError::InvalidParameter("group is not tagged as G(p,m,n)".into()));
    };
    if !witness_range_ok(p, m, n) {
        return Err(GroupError::InvalidParameter(format!("no witness construction for G({p},{m},{n})")));
    }
    let a = g.generator("a").ok_or_else(|| GroupError::InvalidParameter("missing generator a".into()))?;
    let b = g.generator("b").ok_or_else(|| GroupError::InvalidParameter("missing generator b".into()))?;
    Ok((p, m, n, a, b))
}

/// The closed formula triple for a group carrying the `G(p, m, n)` tag. For `m = 2` the
/// element `y` is not central and the triple does not verify.
pub fn formula_triple(g: &CayleyGroup) -> Result<WitnessTriple, GroupError> {
    let (p, m, n, a, b) = gpmn_params(g)?;
    let rg = Ring { g };
    let pi = p as i64;
    let pw = |x: usize, k: i64| g.pow(x, k);
    let ipow = |base: i64, e: u32| base.pow(e);
    let w = if p == 2 {
        let big_a = pw(a, ipow(2, m - 1));
        let big_b = pw(a, ipow(2, m - 2));
        let b2 = pw(b, 2);
        let t = rg.tilde_cyclic(pw(b, 4));
        let one = rg.one();
        let r = rg.prod(&[
            rg.el(a),
            rg.el(big_a).add(&rg.el(b)),
            rg.one_minus(big_a),
            one.add(&rg.el(b2)),
            t.clone(),
        ]);
        let s = rg.prod(&[rg.el(a), rg.el(big_b).add(&rg.el(b)), rg.one_minus(big_a), rg.one_minus(b2), t]);
        let y = one.add(&rg.el(big_b));
        let e = rg.hat_of(&[b2]).mul(&one.sub(&rg.hat_of(&[big_a])), g);
        WitnessTriple { r, s, y, e, p }
    } else if m >= 3 {
        let big_a = pw(a, ipow(pi, m - 1));
        let big_b = pw(a, ipow(pi, m - 2));
        let bp = pw(b, pi);
        let t = rg.tilde_cyclic(pw(b, pi * pi));
        let factor = |i: i64| rg.one_minus(g.mul(bp, pw(big_a, i)));
        let mut rf = Vec::from([rg.el(b).sub(&rg.el(big_b)), rg.el(a), rg.one_minus(big_a), t.clone()]);
        rf.extend((0..=pi - 2).map(factor));
        let mut sf = Vec::from([rg.el(b).sub(&rg.el(g.inv(big_b))), rg.el(a), rg.one_minus(g.inv(big_a)), t]);
        sf.extend((2..=pi).map(factor));
        let y = rg.one_minus(big_b).pow((pi * (pi - 1) - 1) as u32, g);
        let e = rg
            .hat_of(&[pw(b, pi * pi), g.mul(bp, g.inv(big_a))])
            .mul(&rg.one().sub(&rg.hat_of(&[big_a])), g);
        WitnessTriple { r: rg.prod(&rf), s: rg.prod(&sf), y, e, p }
    } else if n > 2 {
        let bn = pw(b, ipow(pi, n - 1));
        let bm = pw(b, ipow(pi, n - 2));
        let ap = pw(a, pi);
        let factor = |i: i64| rg.one_minus(g.mul(ap, pw(bn, i)));
        let mut rf = Vec::from([rg.el(a).sub(&rg.el(bm)), rg.el(b), rg.one_minus(bn)]);
        rf.extend((0..=pi - 2).map(factor));
        let mut sf = Vec::from([rg.el(a).sub(&rg.el(g.inv(bm))), rg.el(b), rg.one_minus(g.inv(bn))]);
        sf.extend((2..=pi).map(factor));
        let y = rg.one_minus(bm).pow((pi * (pi - 1) - 1) as u32, g);
        let e = rg.hat_of(&[g.mul(ap, g.inv(bn))]).mul(&rg.one().sub(&rg.hat_of(&[bn])), g);
        WitnessTriple { r: rg.prod(&rf), s: rg.prod(&sf), y, e, p }
    } else {
        let ap = pw(a, pi);
        let bp = pw(b, pi);
        let factor = |i: i64| rg.one_minus(g.mul(pw(ap, i), bp));
        let mut rf = Vec::from([rg.el(b).sub(&rg.el(a)), rg.one_minus(ap)]);
        rf.extend((0..=pi - 2).map(factor));
        let mut sf = Vec::from([rg.el(b).sub(&rg.el(g.inv(a))), rg.one_minus(g.inv(ap))]);
        sf.extend((2..=pi).map(factor));
        let y = rg.one_minus(a).pow((pi * (pi - 1) - 1) as u32, g);
        let e = rg.hat_of(&[g.mul(ap, g.inv(bp))]).mul(&rg.one().sub(&rg.hat_of(&[ap])), g);
        WitnessTriple { r: rg.prod(&rf), s: rg.prod(&sf), y, e, p }
    };
    Ok(w)
}

/// One matrix component seen through a split form: `killer` is central and vanishes on every
/// other component, `e` is the component's central idempotent, and each flag lists ring
/// elements `w` such that `w f killer` is strictly triangular for every `f` in `diag_basis`.
struct ComponentFlags {
    killer: AlgElement,
    e: AlgElement,
    flags: Vec<Vec<AlgElement>>,
    diag_basis: Vec<usize>,
}

/// Components with `a^p` acting nontrivially for `G(p, 2, n)`.
fn matrix_components_m2(g: &CayleyGroup, p: u32, n: u32, a: usize, b: usize) -> Vec<ComponentFlags> {
    let rg = Ring { g };
    let pi = p as i64;
    let one = rg.one();
    let ap = g.pow(a, pi);
    let bp = g.pow(b, pi);
    let not_derived = one.sub(&rg.hat_of(&[ap]));
    let center: Vec<usize> = (0..pi)
        .flat_map(|i| (0..g.element_order(bp) as i64).map(move |j| (i, j)))
        .map(|(i, j)| g.mul(g.pow(ap, i), g.pow(bp, j)))
        .collect();
    let with_powers = |c: usize, k: i64| -> Vec<usize> {
        (0..k).flat_map(|i| center.iter().map(move |&z| g.mul(g.pow(c, i), z))).collect()
    };
    let mut out = Vec::new();
    if p != 2 {
        // b^p acts as the t-th power of a^p; the diagonal element is a^-t b, the shift is a.
        for t in 0..pi {
            let mut killer = rg.one_minus(ap);
            for i in (0..pi).filter(|i| (i + t).rem_euclid(pi) != 0) {
                killer = killer.mul(&rg.one_minus(g.mul(g.pow(ap, i), bp)), g);
            }
            let c = g.mul(g.pow(a, -t), b);
            let mut flags = Vec::new();
            for reversed in [false, true] {
                for start in 0..pi {
                    let mut prefixes = Vec::new();
                    for j in 1..pi {
                        let mut d = one.clone();
                        for k in 0..pi {
                            let zero_here = if reversed {
                                (start - k).rem_euclid(pi) < j
                            } else {
                                (k - start).rem_euclid(pi) >= pi - j
                            };
                            if zero_here {
                                d = d.mul(&rg.one_minus(g.mul(g.pow(ap, k), c)), g);
                            }
                        }
                        prefixes.push(rg.el(g.pow(a, j)).mul(&d, g));
                    }
                    flags.push(prefixes);
                }
            }
            let e = rg.hat_of(&[g.mul(g.pow(ap, -t), bp)]).mul(&not_derived, g);
            out.push(ComponentFlags { killer, e, flags, diag_basis: with_powers(c, pi) });
        }
        return out;
    }
    // p = 2: a^2 acts as -1 and b^2 as a primitive 2^j-th root of unity; j = 1 is a division
    // algebra and is skipped.
    let b_pow = |k: i64| g.pow(b, k);
    let hat_b = |k: i64| rg.hat_of(&[b_pow(k)]);
    let tilde_b = |k: i64| rg.tilde_cyclic(b_pow(k));
    let killer0 = rg.one_minus(ap).mul(&tilde_b(2), g);
    let e0 = hat_b(2).mul(&not_derived, g);
    out.push(ComponentFlags {
        killer: killer0,
        e: e0,
        flags: Vec::from([
            Vec::from([rg.el(a).mul(&one.add(&rg.el(b)), g)]),
            Vec::from([rg.el(a).mul(&rg.one_minus(b), g)]),
        ]),
        diag_basis: with_powers(b, 2),
    });
    for j in 2..n as i64 {
        let lo = 1i64 << j;
        let hi = 1i64 << (j + 1);
        let killer = rg.one_minus(ap).mul(&rg.one_minus(b_pow(lo)), g).mul(&tilde_b(hi), g);
        let e = hat_b(hi).sub(&hat_b(lo)).mul(&not_derived, g);
        let mu = b_pow(1 << (j - 1));
        let flags = [rg.one_minus(g.mul(mu, a)), rg.one().add(&rg.el(g.mul(mu, a)))]
            .into_iter()
            .map(|d| Vec::from([rg.el(b).mul(&d, g)]))
            .collect();
        out.push(ComponentFlags { killer, e, flags, diag_basis: with_powers(a, 2) });
    }
    out
}

/// Searches `X = sum_t X_t`, each `X_t` strictly triangular in one matrix component, with
/// `X = 0` but some `X_t != 0` modulo `p`; then `(r, s, y, e) = (X_t, X - X_t, 1, e_t)`.
pub fn triangular_triple(g: &CayleyGroup) -> Option<WitnessTriple> {
    let (p, m, n, a, b) = gpmn_params(g).ok()?;
    if m != 2 {
        return None;
    }
    triangular_search(g, p, n, a, b)
}

fn triangular_search(g: &CayleyGroup, p: u32, n: u32, a: usize, b: usize) -> Option<WitnessTriple> {
    let comps = matrix_components_m2(g, p, n, a, b);
    let pm = p as i64;
    let gens: Vec<Vec<Vec<Vec<i64>>>> = comps
        .iter()
        .map(|c| {
            c.flags
                .iter()
                .map(|prefixes| {
                    prefixes
                        .iter()
                        .flat_map(|w| {
                            c.diag_basis.iter().map(move |&f| {
                                let x = w.mul(&AlgElement::basis(g.order(), f), g).mul(&c.killer, g);
                                integral_coefficients(&x).expect("integral generator")
                            })
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; comps.len()];
    loop {
        let mut cols = Vec::new();
        let mut owner = Vec::new();
        for (ci, &fi) in choice.iter().enumerate() {
            for col in &gens[ci][fi] {
                cols.push(col.clone());
                owner.push(ci);
            }
        }
        for lambda in null_space_mod_p(&cols, pm) {
            for ci in 0..comps.len() {
                let mut part = vec![0i64; g.order()];
                for (k, &l) in lambda.iter().enumerate().filter(|(k, &l)| l != 0 && owner[*k] == ci) {
                    for (x, v) in part.iter_mut().zip(&cols[k]) {
                        *x += l * v;
                    }
                }
                if part.iter().all(|v| v.rem_euclid(pm) == 0) {
                    continue;
                }
                let mut total = vec![0i64; g.order()];
                for (k, &l) in lambda.iter().enumerate().filter(|(_, &l)| l != 0) {
                    for (x, v) in total.iter_mut().zip(&cols[k]) {
                        *x += l * v;
                    }
                }
                let r = AlgElement::from_ints(&part);
                let s = AlgElement::from_ints(&total).sub(&r);
                let w = WitnessTriple { r, s, y: AlgElement::one(g.order()), e: comps[ci].e.clone(), p };
                if thersy_verify(&w, g) {
                    return Some(w);
                }
            }
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < comps[k].flags.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Basis of `{lambda : sum lambda_i rows_i = 0 mod p}`.
fn null_space_mod_p(rows: &[Vec<i64>], p: i64) -> Vec<Vec<i64>> {
    let k = rows.len();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<i64>> = (0..cols).map(|j| (0..k).map(|i| rows[i][j].rem_euclid(p)).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(piv) = (row..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(row, piv);
        let f = mod_pow(m[row][col], p - 2, p);
        for v in m[row].iter_mut() {
            *v = *v * f % p;
        }
        for i in 0..m.len() {
            if i != row && m[i][col] != 0 {
                let f = m[i][col];
                for j in 0..k {
                    m[i][j] = (m[i][j] - f * m[row][j]).rem_euclid(p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..k)
        .filter(|c| !pivots.contains(c))
        .map(|fc| {
            let mut v = vec![0i64; k];
            v[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = (-m[ri][fc]).rem_euclid(p);
            }
            v
        })
        .collect()
}

fn mod_pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b = b.rem_euclid(p);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `n = (1 - y) x (1 + y)` for an involution `y` with `y^x != y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonsolvableWitness {
    pub x: usize,
    pub y: usize,
    pub n: AlgElement,
}

/// First pair `(x, y)` in index order with `y` an involution not fixed by `x`.
pub fn witness_nonsolvable(g: &CayleyGroup) -> Option<NonsolvableWitness> {
    let involutions: Vec<usize> = g.elements().filter(|&y| y != 0 && g.mul(y, y) == 0).collect();
    for &y in &involutions {
        if let Some(x) = g.elements().find(|&x| g.conj(y, x) != y) {
            let rg = Ring { g };
            let n = rg.prod(&[rg.one_minus(y), rg.el(x), rg.one().add(&rg.el(y))]);
            return Some(NonsolvableWitness { x, y, n });
        }
    }
    None
}

impl NonsolvableWitness {
    /// The coefficient of `x` in `n e`.
    pub fn x_coefficient(&self, g: &CayleyGroup, e: &AlgElement) -> Rational {
        self.n.mul(e, g).coeff(self.x)
    }

    /// `(chi(1) - chi([x, y])) / |G|` with `chi(h) = |G| e(h^-1)`, the character of `QGe`.
    pub fn x_coefficient_by_character(&self, g: &CayleyGroup, e: &AlgElement) -> Rational {
        let order = Rational::from_integer(BigInt::from(g.order()));
        let chi = |h: usize| e.coeff(g.inv(h)) * &order;
        (chi(0) - chi(g.commutator(self.x, self.y))) / order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::{cyclic, dihedral, direct_product, generalized_quaternion, symmetric};
    use crate::structure::normal_subgroups;
    use crate::wedderburn::epsilon_normal;
    use num_traits::Zero;

    #[test]
    fn zero_triple_fails_only_iv() {
        let g = gpmn(2, 3, 2).unwrap();
        let z = AlgElement::zero(g.order());
        let w = WitnessTriple { r: z.clone(), s: z.clone(), y: z, e: AlgElement::one(g.order()), p: 2 };
        let rep = thersy_report(&w, &g);
        assert!(rep.condition_i() && rep.condition_ii && rep.condition_iii);
        assert!(!rep.condition_iv);
        assert!(!thersy_verify(&w, &g));
    }

    #[test]
    fn out_of_range_parameters_rejected() {
        assert!(witness_gpmn(2, 2, 3).is_err());
        assert!(witness_gpmn(2, 2, 2).is_err());
        assert!(witness_gpmn(3, 2, 1).is_err());
    }

    #[test]
    fn even_case_verifies() {
        let (g, w) = witness_gpmn(2, 3, 2).unwrap();
        assert_eq!(w.source, WitnessSource::Formula);
        let w = w.triple;
        let rep = thersy_report(&w, &g);
        assert!(rep.accepted(), "{rep:?}");
        assert!(rep.y_central && rep.square_zero);
        let a = g.generator("a").unwrap();
        let b = g.generator("b").unwrap();
        assert_eq!(w.y.mul(&w.r, &g).coeff(g.mul(a, b)), Rational::from_integer(1.into()));
    }

    #[test]
    fn odd_cases_with_large_m_or_n_use_the_formula() {
        for (p, m, n, b_first) in [(3, 3, 2, true), (3, 2, 3, false)] {
            let (g, w) = witness_gpmn(p, m, n).unwrap();
            let (a, b) = (g.generator("a").unwrap(), g.generator("b").unwrap());
            assert_eq!(w.source, WitnessSource::Formula);
            let rep = thersy_report(&w.triple, &g);
            assert!(rep.accepted() && rep.y_central, "{rep:?}");
            let x = if b_first { g.mul(b, a) } else { g.mul(a, b) };
            let yr = w.triple.y.mul(&w.triple.r, &g);
            assert_eq!(num_traits::Signed::abs(&yr.coeff(x)), Rational::from_integer(1.into()), "G({p},{m},{n})");
        }
    }

    #[test]
    fn formula_y_is_not_central_when_m_is_two() {
        for (p, m, n) in [(3, 2, 2), (2, 2, 4)] {
            let g = gpmn(p, m, n).unwrap();
            let rep = thersy_report(&formula_triple(&g).unwrap(), &g);
            assert!(!rep.y_central && !rep.n_nilpotent);
            assert!(rep.condition_ii && rep.condition_iii && rep.condition_iv);
        }
    }

    #[test]
    fn triangular_triples_verify_when_m_is_two() {
        for (p, m, n) in [(3, 2, 2), (2, 2, 4)] {
            let (g, w) = witness_gpmn(p, m, n).unwrap();
            assert_eq!(w.source, WitnessSource::Triangular);
            let rep = thersy_report(&w.triple, &g);
            assert!(rep.accepted() && rep.y_central, "{rep:?}");
        }
    }

    #[test]
    fn triangular_search_finds_nothing_for_the_nd_group() {
        let g = gpmn(2, 2, 3).unwrap();
        let (a, b) = (g.generator("a").unwrap(), g.generator("b").unwrap());
        assert_eq!(matrix_components_m2(&g, 2, 3, a, b).len(), 2);
        assert!(triangular_search(&g, 2, 3, a, b).is_none());
    }

    fn gamma(g: &CayleyGroup, x: usize, l: i64) -> AlgElement {
        let n = g.order();
        (0..=l).fold(AlgElement::zero(n), |acc, i| acc.add(&AlgElement::basis(n, g.pow(x, i))))
    }

    fn congruent_mod(a: &AlgElement, b: &AlgElement, p: i64) -> bool {
        let d = a.sub(b);
        d.is_integral() && d.numerators().iter().all(|c| (c % BigInt::from(p)).is_zero())
    }

    #[test]
    fn technical_congruences() {
        for p in [3i64, 5] {
            let cx = cyclic((p * p) as u32).unwrap();
            let cz = cyclic(p as u32).unwrap();
            let g = direct_product(&cx, &cz).unwrap();
            let x = g.generator("a1").unwrap();
            let z = g.generator("a2").unwrap();
            let n = g.order();
            let el = |u: usize| AlgElement::basis(n, u);
            let one = AlgElement::one(n);
            let om = |u: usize| one.sub(&el(u));
            let xp = g.pow(x, p);
            let xmp = g.inv(xp);
            let t1 = om(xp).mul(&om(g.mul(xp, z)), &g);
            let t2 = om(xmp).mul(&om(g.mul(xmp, z)), &g);
            let lhs1 = t1.add(&t2);
            let base = om(x).pow((p + 1) as u32, &g);
            let xpz = el(g.mul(xp, z));
            let mut alpha = gamma(&g, x, p * p - p - 1);
            if p != 3 {
                alpha = alpha.sub(&xpz.mul(&gamma(&g, x, p * p - 3 * p - 1), &g));
            }
            assert!(congruent_mod(&lhs1, &base.mul(&alpha, &g), p), "first congruence p={p}");
            let lhs2 = el(x).mul(&t1, &g).add(&el(g.inv(x)).mul(&t2, &g));
            let l2 = if p == 3 { p * p - 3 } else { p * p - 3 * p - 3 };
            let beta = el(x)
                .mul(&gamma(&g, x, p * p - p - 3), &g)
                .sub(&el(g.mul(xp, x)).mul(&el(z), &g).mul(&gamma(&g, x, l2), &g));
            assert!(congruent_mod(&lhs2, &base.mul(&beta, &g), p), "second congruence p={p}");
            let beta_without_z =
                el(x).mul(&gamma(&g, x, p * p - p - 3), &g).sub(&el(g.mul(xp, x)).mul(&gamma(&g, x, l2), &g));
            assert!(!congruent_mod(&lhs2, &base.mul(&beta_without_z, &g), p));
        }
    }

    #[test]
    fn nonsolvable_witness_small_groups() {
        let s4 = symmetric(4).unwrap();
        let w = witness_nonsolvable(&s4).unwrap();
        assert!(!w.n.is_zero() && w.n.mul(&w.n, &s4).is_zero());
        let d8 = dihedral(8).unwrap();
        let w = witness_nonsolvable(&d8).unwrap();
        assert!(!w.n.is_zero() && w.n.mul(&w.n, &d8).is_zero());
        assert!(witness_nonsolvable(&generalized_quaternion(8).unwrap()).is_none());
    }

    #[test]
    fn nonsolvable_coefficient_matches_character() {
        let s4 = symmetric(4).unwrap();
        let w = witness_nonsolvable(&s4).unwrap();
        for nsub in normal_subgroups(&s4) {
            let e = epsilon_normal(&s4, &nsub).unwrap();
            assert_eq!(w.x_coefficient(&s4, &e), w.x_coefficient_by_character(&s4, &e));
        }
    }
}
