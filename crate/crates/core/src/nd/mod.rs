//! Nilpotent decomposition: bicyclic nilpotents, explicit witnesses and property checks.
pub mod bicyclic;
pub mod g223;
pub mod witness;

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{hat, tilde, AlgElement, Rational};
use crate::group::families::gpmn;
use crate::group::iso::is_isomorphic;
use crate::group::{CayleyGroup, FamilyTag, GroupError};
use crate::structure::{
    all_subgroups, conjugacy_classes, conjugate_subgroup, cyclic_subgroup_class_count, cyclic_subgroups, is_normal,
    join, normal_subgroups, LatticeGuard, Subgroup,
};
use crate::wedderburn::{epsilon_normal, wedderburn_report};
use bicyclic::{bicyclics_on, BicyclicNilpotent, Side};
use witness::{witness_for_tagged, witness_nonsolvable, witness_range_ok, WitnessSource};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NdStatus {
    Holds,
    Fails,
    Undetermined,
}

/// The rule that decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NdBasis {
    /// `QG` has at most one matrix component.
    OneMatrixComponent,
    /// The group is isomorphic to `G(2,2,3)`, which has ND although it has two matrix components.
    KnownException,
    /// An explicit nilpotent `n` and idempotent `e` with `n e` not integral.
    WitnessFound,
    /// Every element and idempotent of the tested families was tried.
    FamilyExhausted,
}

/// How a witness was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessOrigin {
    Triple(WitnessSource),
    Bicyclic,
    Involution,
    Supplied,
}

/// A nilpotent `n`, a central idempotent `e`, and the first group element where `n e` has a
/// non-integral coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdWitness {
    pub n: AlgElement,
    pub e: AlgElement,
    pub element: usize,
    pub coefficient: Rational,
    pub origin: WitnessOrigin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdVerdict {
    pub status: NdStatus,
    pub basis: NdBasis,
    pub witness: Option<NdWitness>,
}

impl NdVerdict {
    fn holds(basis: NdBasis) -> Self {
        NdVerdict { status: NdStatus::Holds, basis, witness: None }
    }
    fn fails(w: NdWitness) -> Self {
        NdVerdict { status: NdStatus::Fails, basis: NdBasis::WitnessFound, witness: Some(w) }
    }
    fn undetermined() -> Self {
        NdVerdict { status: NdStatus::Undetermined, basis: NdBasis::FamilyExhausted, witness: None }
    }
}

/// The witness for `n e` when it is not integral.
pub fn witness_from(g: &CayleyGroup, n: &AlgElement, e: &AlgElement, origin: WitnessOrigin) -> Option<NdWitness> {
    let ne = n.mul(e, g);
    let element = g.elements().find(|&x| !ne.coeff(x).is_integer())?;
    Some(NdWitness { n: n.clone(), e: e.clone(), element, coefficient: ne.coeff(element), origin })
}

/// Re-checks a witness from its data alone.
pub fn verify_nd_witness(g: &CayleyGroup, w: &NdWitness) -> bool {
    let order = g.order();
    if w.n.len() != order || w.e.len() != order || w.element >= order {
        return false;
    }
    if !w.n.is_integral() || !w.n.is_nilpotent(g) || !w.e.is_idempotent(g) || !w.e.is_central(g) {
        return false;
    }
    let c = w.n.mul(&w.e, g).coeff(w.element);
    c == w.coefficient && !c.is_integer()
}

/// Whether `n e` is integral for every `e` in the family; fails on the first violation.
pub fn nd_with_respect_to(g: &CayleyGroup, n: &AlgElement, family: &[AlgElement]) -> Result<NdVerdict, GroupError> {
    if n.len() != g.order() || !n.is_integral() || !n.is_nilpotent(g) {
        return Err(GroupError::InvalidParameter("expected an integral nilpotent element".into()));
    }
    for e in family {
        if let Some(w) = witness_from(g, n, e, WitnessOrigin::Supplied) {
            return Ok(NdVerdict::fails(w));
        }
    }
    Ok(NdVerdict::holds(NdBasis::FamilyExhausted))
}

/// Every nonzero bicyclic nilpotent, subgroup by subgroup.
pub fn bicyclic_nilpotents(g: &CayleyGroup, guard: LatticeGuard) -> Result<Vec<BicyclicNilpotent>, GroupError> {
    Ok(all_subgroups(g, guard)?.iter().flat_map(|h| bicyclics_on(g, h)).collect())
}

/// Nonzero `eps(G, N)` for the normal subgroups `N`.
pub fn nonzero_epsilons(g: &CayleyGroup) -> Result<Vec<(Subgroup, AlgElement)>, GroupError> {
    let mut out = Vec::new();
    for n in normal_subgroups(g) {
        let e = epsilon_normal(g, &n)?;
        if !e.is_zero() {
            out.push((n, e));
        }
    }
    Ok(out)
}

/// `N^` for the normal subgroups `N`.
pub fn normal_hats(g: &CayleyGroup) -> Vec<AlgElement> {
    normal_subgroups(g).iter().map(|n| hat(g, n)).collect()
}

/// Marks the elements having a conjugate in `h`.
fn conjugate_reach(g: &CayleyGroup, classes: &[Vec<usize>], h: &Subgroup) -> Vec<bool> {
    let mut reach = vec![false; g.order()];
    for class in classes {
        if class.iter().any(|&x| h.contains(x)) {
            for &x in class {
                reach[x] = true;
            }
        }
    }
    reach
}

/// With `v = H~ e`, a left bicyclic `(1 - h) g H~` times `e` equals `g (1 - x) v` for
/// `x = g^-1 h g`, and a right one `H~ g (1 - h)` times `e` equals `v (1 - x) g` for
/// `x = g h g^-1`. Returns the first `(side, x)` with a non-integral product.
fn failing_shift(g: &CayleyGroup, h: &Subgroup, v: &AlgElement, reach: &[bool]) -> Option<(Side, usize)> {
    if v.is_zero() {
        return None;
    }
    let order = g.order();
    let parts = v.to_i64_parts();
    let integral_shift = |x: usize, side: Side| -> bool {
        let src = |y: usize| match side {
            Side::Left => g.mul(g.inv(x), y),
            Side::Right => g.mul(y, g.inv(x)),
        };
        match &parts {
            Some((num, den)) => (0..order).all(|y| (num[y] - num[src(y)]) % den == 0),
            None => (0..order).all(|y| (v.coeff(y) - v.coeff(src(y))).is_integer()),
        }
    };
    for side in [Side::Left, Side::Right] {
        let mut covered = vec![false; order];
        for x in g.elements() {
            if covered[x] || !reach[x] || h.contains(x) {
                continue;
            }
            for y in h.set().iter() {
                let c = match side {
                    Side::Left => g.mul(x, y),
                    Side::Right => g.mul(y, x),
                };
                covered[c] = true;
            }
            if !integral_shift(x, side) {
                return Some((side, x));
            }
        }
    }
    None
}

/// The bicyclic nilpotent on `h` whose product with an idempotent reduces to the shift by `x`.
fn bicyclic_for_shift(g: &CayleyGroup, h: &Subgroup, side: Side, x: usize) -> BicyclicNilpotent {
    for t in g.elements() {
        let hh = match side {
            Side::Left => g.mul(g.mul(t, x), g.inv(t)),
            Side::Right => g.conj(x, t),
        };
        if h.contains(hh) {
            return BicyclicNilpotent::new(hh, t, h.clone(), side).expect("h lies in H");
        }
    }
    unreachable!("x has a conjugate in H")
}

/// First bicyclic nilpotent `n` and family member `e` with `n e` not integral, scanning subgroups
/// in the given order, then the family, then the left side before the right side.
pub fn bicyclic_sweep(g: &CayleyGroup, subgroups: &[Subgroup], family: &[AlgElement]) -> Option<NdWitness> {
    let classes = conjugacy_classes(g);
    for h in subgroups {
        if is_normal(g, h) {
            continue;
        }
        let reach = conjugate_reach(g, &classes, h);
        let ht = tilde(g, h);
        for e in family {
            let v = ht.mul(e, g);
            if let Some((side, x)) = failing_shift(g, h, &v, &reach) {
                let n = bicyclic_for_shift(g, h, side, x).to_element(g);
                let w = witness_from(g, &n, e, WitnessOrigin::Bicyclic);
                debug_assert!(w.is_some());
                if w.is_some() {
                    return w;
                }
            }
        }
    }
    None
}

/// The three equivalent forms of SN.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnReport {
    /// For all `N` normal and `Y` a subgroup, `N <= Y` or `NY` is normal.
    pub direct: bool,
    /// Every bicyclic nilpotent has ND with respect to `{N^ : N normal}`.
    pub via_hats: bool,
    /// Every bicyclic nilpotent has ND with respect to `{eps(G, N) : N normal}`.
    pub via_epsilons: bool,
}

impl SnReport {
    pub fn consistent(&self) -> bool {
        self.direct == self.via_hats && self.via_hats == self.via_epsilons
    }
}

fn sn_direct_on(g: &CayleyGroup, subgroups: &[Subgroup]) -> bool {
    normal_subgroups(g)
        .iter()
        .all(|n| subgroups.iter().all(|y| n.is_subgroup_of(y) || is_normal(g, &join(g, n, y))))
}

/// SN by its definition.
pub fn sn_direct(g: &CayleyGroup, guard: LatticeGuard) -> Result<bool, GroupError> {
    Ok(sn_direct_on(g, &all_subgroups(g, guard)?))
}

/// SN computed three ways.
pub fn sn_check(g: &CayleyGroup, guard: LatticeGuard) -> Result<SnReport, GroupError> {
    let subs = all_subgroups(g, guard)?;
    let eps: Vec<AlgElement> = nonzero_epsilons(g)?.into_iter().map(|(_, e)| e).collect();
    Ok(SnReport {
        direct: sn_direct_on(g, &subs),
        via_hats: bicyclic_sweep(g, &subs, &normal_hats(g)).is_none(),
        via_epsilons: bicyclic_sweep(g, &subs, &eps).is_none(),
    })
}

/// SSN: every subgroup, up to conjugacy, has SN.
pub fn ssn_check(g: &CayleyGroup, guard: LatticeGuard) -> Result<bool, GroupError> {
    let subs = all_subgroups(g, guard)?;
    let mut seen: Vec<Subgroup> = Vec::new();
    for s in &subs {
        if seen.iter().any(|t| t.order() == s.order() && g.elements().any(|x| conjugate_subgroup(g, t, x) == *s)) {
            continue;
        }
        seen.push(s.clone());
        let (sg, _) = g.subgroup_as_group(&s.elements());
        if !sn_direct(&sg, guard)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// DK through counting: nonzero `eps(G, N)` against classes of cyclic subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DkReport {
    pub holds: bool,
    pub nonzero_epsilon_count: usize,
    pub cyclic_class_count: usize,
}

pub fn dk_check(g: &CayleyGroup) -> Result<DkReport, GroupError> {
    let nonzero_epsilon_count = nonzero_epsilons(g)?.len();
    let cyclic_class_count = cyclic_subgroup_class_count(g);
    Ok(DkReport { holds: nonzero_epsilon_count == cyclic_class_count, nonzero_epsilon_count, cyclic_class_count })
}

/// Central idempotents available without the full census: nonzero `eps(G, N)` and `N^`.
fn normal_family(g: &CayleyGroup) -> Result<Vec<AlgElement>, GroupError> {
    let mut family: Vec<AlgElement> = nonzero_epsilons(g)?.into_iter().map(|(_, e)| e).collect();
    for h in normal_hats(g) {
        if !family.contains(&h) {
            family.push(h);
        }
    }
    Ok(family)
}

/// Bicyclic resistance. With full coverage the primitive central idempotents decide it; otherwise
/// only a witness against `{eps(G, N)} u {N^}` is conclusive.
pub fn bicyclic_resistant(g: &CayleyGroup, guard: LatticeGuard) -> Result<NdVerdict, GroupError> {
    let report = wedderburn_report(g, guard)?;
    let subs = all_subgroups(g, guard)?;
    if report.covered {
        let pcis: Vec<AlgElement> = report.components.iter().map(|c| c.ssp.e.clone()).collect();
        return Ok(match bicyclic_sweep(g, &subs, &pcis) {
            Some(w) => NdVerdict::fails(w),
            None => NdVerdict::holds(NdBasis::FamilyExhausted),
        });
    }
    Ok(match bicyclic_sweep(g, &subs, &normal_family(g)?) {
        Some(w) => NdVerdict::fails(w),
        None => NdVerdict::undetermined(),
    })
}

/// Whether `g` is isomorphic to `G(2,2,3)`.
pub fn is_g223(g: &CayleyGroup) -> bool {
    if let Some(FamilyTag::Gpmn { p: 2, m: 2, n: 3 }) = g.tag() {
        return true;
    }
    g.order() == 32 && gpmn(2, 2, 3).ok().is_some_and(|h| is_isomorphic(g, &h).unwrap_or(false))
}

/// ND verdict: one matrix component, the `G(2,2,3)` exception, then explicit witnesses
/// (the `G(p, m, n)` triple, the bicyclic sweep, the involution construction).
pub fn nd_report(g: &CayleyGroup, guard: LatticeGuard) -> NdVerdict {
    let report = wedderburn_report(g, guard).ok();
    if report.as_ref().is_some_and(|r| r.matrix_count_max <= 1) {
        return NdVerdict::holds(NdBasis::OneMatrixComponent);
    }
    if is_g223(g) {
        return NdVerdict::holds(NdBasis::KnownException);
    }
    if let Some(FamilyTag::Gpmn { p, m, n }) = g.tag() {
        if witness_range_ok(p, m, n) {
            if let Ok(w) = witness_for_tagged(g) {
                let nil = w.triple.nilpotent(g);
                if let Some(wit) = witness_from(g, &nil, &w.triple.e, WitnessOrigin::Triple(w.source)) {
                    return NdVerdict::fails(wit);
                }
            }
        }
    }
    let mut family: Vec<AlgElement> = Vec::new();
    if let Some(r) = &report {
        family.extend(r.components.iter().map(|c| c.ssp.e.clone()));
    }
    if report.as_ref().is_none_or(|r| !r.covered) {
        let Ok(extra) = normal_family(g) else {
            return NdVerdict::undetermined();
        };
        for e in extra {
            if !family.contains(&e) {
                family.push(e);
            }
        }
    }
    let subs = all_subgroups(g, guard).unwrap_or_else(|_| cyclic_subgroups(g));
    if let Some(w) = bicyclic_sweep(g, &subs, &family) {
        return NdVerdict::fails(w);
    }
    if let Some(inv) = witness_nonsolvable(g) {
        for e in &family {
            if let Some(w) = witness_from(g, &inv.n, e, WitnessOrigin::Involution) {
                return NdVerdict::fails(w);
            }
        }
    }
    NdVerdict::undetermined()
}
