//! Subgroups, normal structure and quotients.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::ElemSet;
use crate::group::{CayleyGroup, GroupError};

/// A subgroup, stored as a bitset of element indices together with generators.
#[derive(Clone, Debug)]
pub struct Subgroup {
    set: ElemSet,
    order: usize,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn trivial(g: &CayleyGroup) -> Self {
        Subgroup { set: ElemSet::from_indices(g.order(), [0]), order: 1, gens: vec![] }
    }

    pub fn whole(g: &CayleyGroup) -> Self {
        Subgroup { set: ElemSet::full(g.order()), order: g.order(), gens: g.generator_elements() }
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn elements(&self) -> Vec<usize> {
        self.set.to_vec()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Index in `g`.
    pub fn index_in(&self, g: &CayleyGroup) -> usize {
        g.order() / self.order
    }
}

/// The subgroup generated by `gens`.
pub fn closure(g: &CayleyGroup, gens: &[usize]) -> Subgroup {
    let mut set = ElemSet::from_indices(g.order(), [0]);
    let mut stack = vec![0usize];
    let mut order = 1;
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                order += 1;
                stack.push(y);
            }
        }
    }
    let gens = gens.iter().copied().filter(|&s| s != 0).collect();
    Subgroup { set, order, gens }
}

/// A short generating list for the subgroup on `elements`, preferring elements of large order.
pub fn small_generating_set(g: &CayleyGroup, elements: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = elements.to_vec();
    sorted.sort_by_key(|&x| (core::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut current = closure(g, &[]);
    for x in sorted {
        if current.order() == elements.len() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = closure(g, &gens);
        }
    }
    gens
}

pub fn cyclic_subgroup(g: &CayleyGroup, x: usize) -> Subgroup {
    closure(g, &[x])
}

pub fn join(g: &CayleyGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    if b.is_subgroup_of(a) {
        return a.clone();
    }
    if a.is_subgroup_of(b) {
        return b.clone();
    }
    let mut gens = a.gens.clone();
    gens.extend(b.gens.iter().copied().filter(|&x| !a.contains(x)));
    closure(g, &gens)
}

pub fn intersection(g: &CayleyGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let set = a.set.intersection(&b.set);
    let elems = set.to_vec();
    let gens = small_generating_set(g, &elems);
    Subgroup { order: elems.len(), set, gens }
}

/// `H^x = x^-1 H x`.
pub fn conjugate_subgroup(g: &CayleyGroup, h: &Subgroup, x: usize) -> Subgroup {
    let set = ElemSet::from_indices(g.order(), h.set.iter().map(|y| g.conj(y, x)));
    Subgroup { set, order: h.order, gens: h.gens.iter().map(|&y| g.conj(y, x)).collect() }
}

pub fn is_normal(g: &CayleyGroup, h: &Subgroup) -> bool {
    g.generator_elements()
        .iter()
        .all(|&s| h.gens.iter().all(|&t| h.contains(g.conj(t, s))))
}

/// Whether `n` is normal in the subgroup `h` of `g`.
pub fn is_normal_in(g: &CayleyGroup, n: &Subgroup, h: &Subgroup) -> bool {
    n.is_subgroup_of(h) && h.gens.iter().all(|&s| n.gens.iter().all(|&t| n.contains(g.conj(t, s))))
}

pub fn normalizer(g: &CayleyGroup, h: &Subgroup) -> Subgroup {
    let elems: Vec<usize> = g.elements().filter(|&x| h.gens.iter().all(|&t| h.contains(g.conj(t, x)))).collect();
    from_elements(g, elems)
}

/// Centralizer of a set of elements.
pub fn centralizer(g: &CayleyGroup, xs: &[usize]) -> Subgroup {
    let elems: Vec<usize> = g.elements().filter(|&y| xs.iter().all(|&x| g.mul(x, y) == g.mul(y, x))).collect();
    from_elements(g, elems)
}

pub fn center(g: &CayleyGroup) -> Subgroup {
    centralizer(g, &g.generator_elements())
}

/// Wraps a list of elements already known to form a subgroup.
pub fn from_elements(g: &CayleyGroup, elems: Vec<usize>) -> Subgroup {
    let gens = small_generating_set(g, &elems);
    Subgroup { set: ElemSet::from_indices(g.order(), elems.iter().copied()), order: elems.len(), gens }
}

/// Smallest subgroup of `within` containing `xs` and normalized by `within`.
pub fn normal_closure_in(g: &CayleyGroup, xs: &[usize], within: &Subgroup) -> Subgroup {
    let mut h = closure(g, xs);
    loop {
        let mut extra = None;
        'outer: for &s in &within.gens {
            for &t in &h.gens {
                let c = g.conj(t, s);
                if !h.contains(c) {
                    extra = Some(c);
                    break 'outer;
                }
            }
        }
        match extra {
            Some(c) => {
                let mut gens = h.gens.clone();
                gens.push(c);
                h = closure(g, &gens);
            }
            None => return h,
        }
    }
}

pub fn normal_closure(g: &CayleyGroup, xs: &[usize]) -> Subgroup {
    normal_closure_in(g, xs, &Subgroup::whole(g))
}

/// Derived subgroup of a subgroup `h`.
pub fn derived_of(g: &CayleyGroup, h: &Subgroup) -> Subgroup {
    let mut comms = Vec::new();
    for &s in &h.gens {
        for &t in &h.gens {
            let c = g.commutator(s, t);
            if c != 0 {
                comms.push(c);
            }
        }
    }
    normal_closure_in(g, &comms, h)
}

pub fn derived_subgroup(g: &CayleyGroup) -> Subgroup {
    derived_of(g, &Subgroup::whole(g))
}

/// Largest normal subgroup of `g` inside `h`.
pub fn core(g: &CayleyGroup, h: &Subgroup) -> Subgroup {
    let elems: Vec<usize> = h.set.iter().filter(|&x| g.elements().all(|y| h.contains(g.conj(x, y)))).collect();
    from_elements(g, elems)
}

/// Distinct cyclic subgroups, ordered by order and then by elements.
pub fn cyclic_subgroups(g: &CayleyGroup) -> Vec<Subgroup> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let c = cyclic_subgroup(g, x);
        if seen.insert(c.set.clone()) {
            out.push(c);
        }
    }
    sort_subgroups(&mut out);
    out
}

fn sort_subgroups(list: &mut [Subgroup]) {
    list.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.elements().cmp(&b.elements())));
}

/// Limits on subgroup lattice computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeGuard {
    pub max_order: usize,
    pub max_subgroups: usize,
}

impl Default for LatticeGuard {
    fn default() -> Self {
        LatticeGuard { max_order: 128, max_subgroups: 20_000 }
    }
}

impl LatticeGuard {
    pub fn unbounded() -> Self {
        LatticeGuard { max_order: usize::MAX, max_subgroups: usize::MAX }
    }
}

/// Every subgroup, obtained by closing the cyclic subgroups under joins.
pub fn all_subgroups(g: &CayleyGroup, guard: LatticeGuard) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > guard.max_order {
        return Err(GroupError::Guard(format!(
            "subgroup lattice of a group of order {} exceeds the order guard {}",
            g.order(),
            guard.max_order
        )));
    }
    let cyc = cyclic_subgroups(g);
    let mut known: BTreeSet<ElemSet> = cyc.iter().map(|c| c.set.clone()).collect();
    let mut list = cyc.clone();
    let mut work = cyc.clone();
    while let Some(h) = work.pop() {
        for c in &cyc {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let j = join(g, &h, c);
            if known.insert(j.set.clone()) {
                if list.len() >= guard.max_subgroups {
                    return Err(GroupError::Guard(format!(
                        "more than {} subgroups",
                        guard.max_subgroups
                    )));
                }
                list.push(j.clone());
                work.push(j);
            }
        }
    }
    sort_subgroups(&mut list);
    Ok(list)
}

/// Normal subgroups, as joins of normal closures of single elements.
pub fn normal_subgroups(g: &CayleyGroup) -> Vec<Subgroup> {
    let mut base: Vec<Subgroup> = Vec::new();
    let mut known = BTreeSet::new();
    for rep in conjugacy_classes(g).iter().map(|c| c[0]) {
        let n = normal_closure(g, &[rep]);
        if known.insert(n.set.clone()) {
            base.push(n);
        }
    }
    let mut list = base.clone();
    let mut work = base.clone();
    while let Some(n) = work.pop() {
        for b in &base {
            if b.is_subgroup_of(&n) {
                continue;
            }
            let j = join(g, &n, b);
            if known.insert(j.set.clone()) {
                list.push(j.clone());
                work.push(j);
            }
        }
    }
    sort_subgroups(&mut list);
    list
}

/// Normal subgroups `M` of `g` properly containing `n` and minimal with this property.
pub fn minimal_overnormals(g: &CayleyGroup, n: &Subgroup) -> Vec<Subgroup> {
    minimal_overnormals_in(g, n, &Subgroup::whole(g))
}

/// Subgroups `M` normal in `h` with `n < M`, minimal; `n` must be normal in `h`.
pub fn minimal_overnormals_in(g: &CayleyGroup, n: &Subgroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut cands: Vec<Subgroup> = Vec::new();
    let mut known = BTreeSet::new();
    for x in h.set.iter().filter(|&x| !n.contains(x)) {
        let mut xs = n.gens.clone();
        xs.push(x);
        let m = normal_closure_in(g, &xs, h);
        if known.insert(m.set.clone()) {
            cands.push(m);
        }
    }
    let minimal: Vec<Subgroup> = cands
        .iter()
        .filter(|m| !cands.iter().any(|o| o.order < m.order && o.is_subgroup_of(m)))
        .cloned()
        .collect();
    let mut minimal = minimal;
    sort_subgroups(&mut minimal);
    minimal
}

pub fn conjugacy_classes(g: &CayleyGroup) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut class: Vec<usize> = g.elements().map(|y| g.conj(x, y)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            assigned[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// Number of conjugacy classes of cyclic subgroups.
pub fn cyclic_subgroup_class_count(g: &CayleyGroup) -> usize {
    let cyc = cyclic_subgroups(g);
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for c in &cyc {
        if seen.contains(&c.set) {
            continue;
        }
        count += 1;
        for y in g.elements() {
            seen.insert(conjugate_subgroup(g, c, y).set);
        }
    }
    count
}

/// A quotient group together with the projection from the parent.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub group: CayleyGroup,
    pub projection: Vec<usize>,
}

impl QuotientMap {
    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }
}

/// `G/N`; cosets are ordered by their smallest element.
pub fn quotient(g: &CayleyGroup, n: &Subgroup) -> Result<QuotientMap, GroupError> {
    if !is_normal(g, n) {
        return Err(GroupError::InvalidParameter("quotient by a subgroup that is not normal".into()));
    }
    let mut proj = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if proj[x] != usize::MAX {
            continue;
        }
        for y in n.set.iter() {
            proj[g.mul(x, y)] = reps.len();
        }
        reps.push(x);
    }
    let k = reps.len();
    let mut table = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            table[i * k + j] = proj[g.mul(reps[i], reps[j])];
        }
    }
    let names = reps.iter().map(|&r| g.name(r).into()).collect();
    let gens = g
        .generators()
        .iter()
        .filter(|(_, x)| proj[*x] != 0)
        .map(|(nm, x)| (nm.clone(), proj[*x]))
        .collect();
    let group = CayleyGroup::from_table(table, names, gens)?;
    Ok(QuotientMap { group, projection: proj })
}

pub fn is_nilpotent(g: &CayleyGroup) -> bool {
    let gens = g.generator_elements();
    let mut z = ElemSet::from_indices(g.order(), [0]);
    loop {
        let next = ElemSet::from_indices(
            g.order(),
            g.elements().filter(|&x| gens.iter().all(|&s| z.contains(g.commutator(x, s)))),
        );
        if next.len() == g.order() {
            return true;
        }
        if next == z {
            return false;
        }
        z = next;
    }
}

pub fn is_solvable(g: &CayleyGroup) -> bool {
    let mut h = Subgroup::whole(g);
    loop {
        if h.is_trivial() {
            return true;
        }
        let d = derived_of(g, &h);
        if d.order == h.order {
            return false;
        }
        h = d;
    }
}

/// Whether a normal series with cyclic factors exists, searched over normal subgroups.
pub fn is_supersolvable(g: &CayleyGroup) -> bool {
    let normals = normal_subgroups(g);
    let mut dead = BTreeSet::new();
    supersolvable_from(&normals, 0, &mut dead)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn supersolvable_from(normals: &[Subgroup], at: usize, dead: &mut BTreeSet<usize>) -> bool {
    let n = &normals[at];
    if at == normals.len() - 1 {
        return true;
    }
    for (i, m) in normals.iter().enumerate() {
        if m.order > n.order && is_prime(m.order / n.order) && n.is_subgroup_of(m) && !dead.contains(&i) {
            if supersolvable_from(normals, i, dead) {
                return true;
            }
            dead.insert(i);
        }
    }
    false
}

/// Every subgroup is normal; checked on cyclic subgroups, which generate all others.
pub fn is_dedekind(g: &CayleyGroup) -> bool {
    cyclic_subgroups(g).iter().all(|c| is_normal(g, c))
}

/// Dedekind test through the classification `Q8 x C2^n x A` with `A` abelian of odd order.
pub fn is_dedekind_by_classification(g: &CayleyGroup) -> Result<bool, GroupError> {
    if g.is_abelian() {
        return Ok(true);
    }
    if !is_nilpotent(g) {
        return Ok(false);
    }
    let two: Vec<usize> = g.elements().filter(|&x| g.element_order(x).is_power_of_two()).collect();
    let odd: Vec<usize> = g.elements().filter(|&x| g.element_order(x) % 2 == 1).collect();
    let odd_abelian = odd.iter().all(|&x| odd.iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    if !odd_abelian || two.len() < 8 {
        return Ok(false);
    }
    let (p, _) = g.subgroup_as_group(&two);
    let mut model = crate::group::generalized_quaternion(8)?;
    let c2 = crate::group::cyclic(2)?;
    while model.order() < p.order() {
        model = crate::group::direct_product(&model, &c2)?;
    }
    crate::group::is_isomorphic(&p, &model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    #[test]
    fn lattice_sizes() {
        let g = guard_default();
        assert_eq!(all_subgroups(&cyclic(6).unwrap(), g).unwrap().len(), 4);
        assert_eq!(all_subgroups(&generalized_quaternion(8).unwrap(), g).unwrap().len(), 6);
        assert_eq!(all_subgroups(&symmetric(4).unwrap(), g).unwrap().len(), 30);
        assert_eq!(all_subgroups(&dihedral(8).unwrap(), g).unwrap().len(), 10);
        assert_eq!(all_subgroups(&alternating(5).unwrap(), g).unwrap().len(), 59);
    }

    fn guard_default() -> LatticeGuard {
        LatticeGuard::default()
    }

    #[test]
    fn core_and_quotients() {
        let s4 = symmetric(4).unwrap();
        let t = s4.element_by_name("(1,2)").unwrap();
        assert!(core(&s4, &cyclic_subgroup(&s4, t)).is_trivial());
        let v4 = normal_subgroups(&s4).into_iter().find(|n| n.order() == 4).unwrap();
        let q = quotient(&s4, &v4).unwrap();
        assert!(is_isomorphic(&q.group, &symmetric(3).unwrap()).unwrap());

        let g = gpmn(2, 2, 3).unwrap();
        let d = derived_subgroup(&g);
        assert_eq!(d.order(), 2);
        let q = quotient(&g, &d).unwrap();
        let c2c8 = direct_product(&cyclic(2).unwrap(), &cyclic(8).unwrap()).unwrap();
        assert!(is_isomorphic(&q.group, &c2c8).unwrap());
    }

    #[test]
    fn class_counts() {
        assert_eq!(cyclic_subgroup_class_count(&generalized_quaternion(8).unwrap()), 5);
        assert_eq!(conjugacy_classes(&symmetric(4).unwrap()).len(), 5);
        assert_eq!(center(&generalized_quaternion(8).unwrap()).order(), 2);
    }

    #[test]
    fn solvability_ladder() {
        let s4 = symmetric(4).unwrap();
        assert!(is_solvable(&s4) && !is_supersolvable(&s4) && !is_nilpotent(&s4));
        assert!(is_supersolvable(&symmetric(3).unwrap()));
        assert!(!is_solvable(&alternating(5).unwrap()));
        assert!(is_nilpotent(&dihedral(8).unwrap()));
    }

    #[test]
    fn dedekind_routes_agree() {
        let q8 = generalized_quaternion(8).unwrap();
        let q8c2 = direct_product(&q8, &cyclic(2).unwrap()).unwrap();
        let q8c3 = direct_product(&q8, &cyclic(3).unwrap()).unwrap();
        for (g, expect) in [(q8, true), (q8c2, true), (q8c3, true), (dihedral(8).unwrap(), false), (cyclic(6).unwrap(), true)] {
            assert_eq!(is_dedekind(&g), expect);
            assert_eq!(is_dedekind_by_classification(&g).unwrap(), expect);
        }
        let q8c4 = direct_product(&generalized_quaternion(8).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert!(!is_dedekind(&q8c4));
        assert!(!is_dedekind_by_classification(&q8c4).unwrap());
    }
}
