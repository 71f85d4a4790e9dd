//! Primitive central idempotents from strong Shoda pairs and the simple components they cut out.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;



use crate::algebra::{hat, right_mult_rank, AlgElement, Rational};
use crate::bitset::ElemSet;
use crate::group::{CayleyGroup, GroupError};
use crate::hilbert::quaternion_splits_over_q;
use crate::nd::bicyclic::{bicyclics_on, Probe, ProductKind};
use crate::structure::{
    all_subgroups, conjugate_subgroup, core, cyclic_subgroup_class_count, cyclic_subgroups, is_normal_in,
    minimal_overnormals_in, normalizer, LatticeGuard, Subgroup,
};

/// `eps(H, K) = K^ * prod (1 - M^)` over the minimal normal subgroups `M/K` of `H/K`.
pub fn epsilon(g: &CayleyGroup, h: &Subgroup, k: &Subgroup) -> Result<AlgElement, GroupError> {
    if !is_normal_in(g, k, h) {
        return Err(GroupError::InvalidParameter("K must be normal in H".into()));
    }
    let one = AlgElement::one(g.order());
    let mut e = hat(g, k);
    for m in minimal_overnormals_in(g, k, h) {
        e = e.mul(&one.sub(&hat(g, &m)), g);
    }
    Ok(e)
}

/// `eps(G, N)` for a normal subgroup `N`.
pub fn epsilon_normal(g: &CayleyGroup, n: &Subgroup) -> Result<AlgElement, GroupError> {
    epsilon(g, &Subgroup::whole(g), n)
}

/// Elements `x` with `x^-1 a x = a`.
pub fn stabilizer(g: &CayleyGroup, a: &AlgElement) -> Subgroup {
    let elems = g.elements().filter(|&x| a.conjugate(g, x) == *a).collect();
    crate::structure::from_elements(g, elems)
}

/// Smallest representative of each right coset `C x`.
pub fn right_transversal(g: &CayleyGroup, c: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        for y in c.set().iter() {
            seen[g.mul(y, x)] = true;
        }
        reps.push(x);
    }
    reps
}

/// `e(G, H, K)`: the sum of the distinct `G`-conjugates of `eps(H, K)`.
pub fn e_of_pair(g: &CayleyGroup, h: &Subgroup, k: &Subgroup) -> Result<AlgElement, GroupError> {
    let eps = epsilon(g, h, k)?;
    let cen = stabilizer(g, &eps);
    Ok(conjugate_sum(g, &eps, &cen))
}

fn conjugate_sum(g: &CayleyGroup, eps: &AlgElement, cen: &Subgroup) -> AlgElement {
    right_transversal(g, cen)
        .into_iter()
        .fold(AlgElement::zero(g.order()), |acc, t| acc.add(&eps.conjugate(g, t)))
}

/// Order of `x K` in `H/K`.
fn order_mod(g: &CayleyGroup, x: usize, k: &Subgroup) -> usize {
    let mut y = x;
    let mut i = 1;
    while !k.contains(y) {
        y = g.mul(y, x);
        i += 1;
    }
    i
}

/// Group theoretic part of the strong Shoda conditions; returns a generator of `H/K`.
fn shoda_structure(g: &CayleyGroup, h: &Subgroup, k: &Subgroup, n: &Subgroup) -> Option<usize> {
    if !k.is_subgroup_of(h) || !h.is_subgroup_of(n) || !is_normal_in(g, h, n) {
        return None;
    }
    let idx = h.order() / k.order();
    let gen = h.set().iter().find(|&x| order_mod(g, x, k) == idx)?;
    let centralizing = n.set().iter().filter(|&x| k.contains(g.commutator(gen, x))).count();
    (centralizing == h.order()).then_some(gen)
}

/// Whether `(H, K)` is a strong Shoda pair of `G`.
pub fn is_strong_shoda_pair(g: &CayleyGroup, h: &Subgroup, k: &Subgroup) -> Result<bool, GroupError> {
    let n = normalizer(g, k);
    if shoda_structure(g, h, k, &n).is_none() {
        return Ok(false);
    }
    let eps = epsilon(g, h, k)?;
    Ok(conjugates_orthogonal(g, &eps, &stabilizer(g, &eps)))
}

fn conjugates_orthogonal(g: &CayleyGroup, eps: &AlgElement, cen: &Subgroup) -> bool {
    right_transversal(g, cen)
        .into_iter()
        .skip(1)
        .all(|t| eps.mul(&eps.conjugate(g, t), g).is_zero())
}

/// A strong Shoda pair with its idempotents.
#[derive(Debug, Clone)]
pub struct SspRecord {
    pub h: Subgroup,
    pub k: Subgroup,
    pub normalizer: Subgroup,
    pub epsilon: AlgElement,
    pub e: AlgElement,
}

/// Strong Shoda pairs up to conjugacy, one per distinct `e(G, H, K)`.
///
/// Pairs are scanned with `|H|` descending and `|K|` ascending; the first pair producing a
/// given idempotent is kept.
pub fn enumerate_ssp(g: &CayleyGroup, guard: LatticeGuard) -> Result<Vec<SspRecord>, GroupError> {
    let subs = all_subgroups(g, guard)?;
    let index: BTreeMap<ElemSet, usize> = subs.iter().enumerate().map(|(i, s)| (s.set().clone(), i)).collect();
    let normalizers: Vec<Subgroup> = subs.iter().map(|k| normalizer(g, k)).collect();
    let mut cands: Vec<(usize, usize)> = Vec::new();
    let mut canon_seen = BTreeMap::new();
    for (ki, k) in subs.iter().enumerate() {
        let n = &normalizers[ki];
        for (hi, h) in subs.iter().enumerate() {
            if !k.is_subgroup_of(h) || !h.is_subgroup_of(n) {
                continue;
            }
            if shoda_structure(g, h, k, n).is_none() {
                continue;
            }
            let canon = g
                .elements()
                .map(|x| {
                    let kx = index[conjugate_subgroup(g, k, x).set()];
                    let hx = index[conjugate_subgroup(g, h, x).set()];
                    (kx, hx)
                })
                .min()
                .unwrap();
            if canon_seen.insert(canon, ()).is_none() {
                cands.push((hi, ki));
            }
        }
    }
    cands.sort_by(|a, b| {
        subs[b.0].order().cmp(&subs[a.0].order()).then(subs[a.1].order().cmp(&subs[b.1].order())).then(a.cmp(b))
    });
    let mut out: Vec<SspRecord> = Vec::new();
    for (hi, ki) in cands {
        let (h, k) = (&subs[hi], &subs[ki]);
        let eps = epsilon(g, h, k)?;
        let cen = stabilizer(g, &eps);
        if !conjugates_orthogonal(g, &eps, &cen) {
            continue;
        }
        let e = conjugate_sum(g, &eps, &cen);
        if out.iter().any(|r| r.e == e) {
            continue;
        }
        out.push(SspRecord { h: h.clone(), k: k.clone(), normalizer: normalizers[ki].clone(), epsilon: eps, e });
    }
    Ok(out)
}

/// Type of a simple component, as far as the classification rules decide it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentClass {
    /// Commutative: `Q(zeta_n)` with `n = [G:K]` (rule R1, `H = G`).
    Field { conductor: usize },
    /// A matrix algebra over a division ring whose reduced degree is at least the bound.
    Matrix { reduced_degree_at_least: usize },
    /// The quaternion algebra `(d, gamma)` over `Q`, not split.
    DivisionQuaternionOverQ { d: i64, gamma: i64 },
    Undecided,
}

impl ComponentClass {
    pub fn is_matrix(&self) -> bool {
        matches!(self, ComponentClass::Matrix { .. })
    }
}

/// One simple component `QG e`.
#[derive(Debug, Clone)]
pub struct Component {
    pub ssp: SspRecord,
    /// `dim_Q QGe`, computed as the rank of `x -> x e`.
    pub dim: usize,
    /// `[G:H] [G:N_G(K)] phi([H:K])`.
    pub dim_formula: usize,
    /// `core_G(K)`, the kernel of `G -> QGe`.
    pub kernel: Subgroup,
    pub class: ComponentClass,
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// `{g : g e = e}`.
pub fn kernel_of_idempotent(g: &CayleyGroup, e: &AlgElement) -> Subgroup {
    let elems = g.elements().filter(|&x| e.left_mul_group(g, x) == *e).collect();
    crate::structure::from_elements(g, elems)
}

/// Some cyclic bicyclic nilpotent `n` with `n e != 0`.
fn nilpotent_hits(g: &CayleyGroup, e: &AlgElement) -> bool {
    let probe = Probe::new(e.clone());
    cyclic_subgroups(g).iter().filter(|c| !c.is_trivial()).any(|c| {
        bicyclics_on(g, c)
            .iter()
            .any(|b| probe.classify(g, &b.coefficients(g), true) != ProductKind::Zero)
    })
}

/// Applies the classification rules to the component of a strong Shoda pair.
pub fn classify_component(g: &CayleyGroup, ssp: &SspRecord) -> ComponentClass {
    let (h, k, n) = (&ssp.h, &ssp.k, &ssp.normalizer);
    let order = g.order();
    if h.order() == order {
        return ComponentClass::Field { conductor: order / k.order() };
    }
    let idx_n = order / n.order();
    if idx_n >= 2 {
        return ComponentClass::Matrix { reduced_degree_at_least: idx_n };
    }
    let hk = h.order() / k.order();
    if order / h.order() == 2 && [3, 4, 6].contains(&hk) {
        let d = if hk == 4 { -1 } else { -3 };
        let outside = g.elements().find(|&x| !h.contains(x)).unwrap();
        let sq = g.mul(outside, outside);
        let gamma = if k.contains(sq) {
            1
        } else if k.contains(g.mul(sq, sq)) {
            -1
        } else {
            return ComponentClass::Undecided;
        };
        let evidence = nilpotent_hits(g, &ssp.e);
        return if quaternion_splits_over_q(d, gamma) {
            if evidence {
                ComponentClass::Matrix { reduced_degree_at_least: 2 }
            } else {
                ComponentClass::Undecided
            }
        } else if evidence {
            ComponentClass::Undecided
        } else {
            ComponentClass::DivisionQuaternionOverQ { d, gamma }
        };
    }
    ComponentClass::Undecided
}

/// The Wedderburn census reachable from strong Shoda pairs.
#[derive(Debug, Clone)]
pub struct WedderburnReport {
    pub group_order: usize,
    pub components: Vec<Component>,
    /// Whether the listed idempotents sum to 1.
    pub covered: bool,
    /// Number of simple components of `QG`.
    pub total_components: usize,
    /// Components not reached by any strong Shoda pair.
    pub uncovered_components: usize,
    pub uncovered_dim: usize,
    /// Whether `1 - sum e` kills some bicyclic nilpotent only partially, certifying a matrix
    /// component among the uncovered ones.
    pub uncovered_has_nilpotent: bool,
    pub matrix_count_min: usize,
    pub matrix_count_max: usize,
}

/// Components with dimensions, kernels and classes.
pub fn wedderburn_report(g: &CayleyGroup, guard: LatticeGuard) -> Result<WedderburnReport, GroupError> {
    let ssps = enumerate_ssp(g, guard)?;
    let order = g.order();
    let mut components = Vec::new();
    let mut sum = AlgElement::zero(order);
    for ssp in ssps {
        sum = sum.add(&ssp.e);
        let hk = ssp.h.order() / ssp.k.order();
        let dim_formula = (order / ssp.h.order()) * (order / ssp.normalizer.order()) * euler_phi(hk);
        let dim = right_mult_rank(&ssp.e, g);
        let kernel = core(g, &ssp.k);
        let class = classify_component(g, &ssp);
        components.push(Component { ssp, dim, dim_formula, kernel, class });
    }
    let one = AlgElement::one(order);
    let covered = sum == one;
    let total = cyclic_subgroup_class_count(g);
    let uncovered_components = total.saturating_sub(components.len());
    let covered_dim: usize = components.iter().map(|c| c.dim).sum();
    let rest = one.sub(&sum);
    let uncovered_has_nilpotent = !covered && nilpotent_hits(g, &rest);
    let matrices = components.iter().filter(|c| c.class.is_matrix()).count();
    let undecided = components.iter().filter(|c| c.class == ComponentClass::Undecided).count();
    Ok(WedderburnReport {
        group_order: order,
        covered,
        total_components: total,
        uncovered_components,
        uncovered_dim: order - covered_dim,
        uncovered_has_nilpotent,
        matrix_count_min: matrices + usize::from(uncovered_has_nilpotent),
        matrix_count_max: matrices + undecided + uncovered_components,
        components,
    })
}

/// Sum of a list of idempotents equals one.
pub fn sums_to_one(order: usize, es: &[AlgElement]) -> bool {
    es.iter().fold(AlgElement::zero(order), |acc, e| acc.add(e)) == AlgElement::one(order)
}

/// `|G| * e(1)`, the trace of right multiplication by `e`.
pub fn trace_dim(e: &AlgElement, order: usize) -> Rational {
    e.coeff(0) * Rational::from_integer(order.into())
}

