//! Isomorphism testing by backtracking over generator images.

use alloc::vec;
use alloc::vec::Vec;

use super::{CayleyGroup, GroupError};
use crate::structure::{closure, small_generating_set};

/// Largest order accepted by [`is_isomorphic`].
pub const ISO_LIMIT: usize = 128;

fn centralizer_size(g: &CayleyGroup, x: usize) -> usize {
    g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)).count()
}

fn order_profile(g: &CayleyGroup) -> Vec<usize> {
    let mut counts = vec![0; g.order() + 1];
    for x in g.elements() {
        counts[g.element_order(x)] += 1;
    }
    counts
}

/// Whether two groups are isomorphic; both orders must be at most [`ISO_LIMIT`].
pub fn is_isomorphic(g: &CayleyGroup, h: &CayleyGroup) -> Result<bool, GroupError> {
    for grp in [g, h] {
        if grp.order() > ISO_LIMIT {
            return Err(GroupError::TooLarge { order: grp.order(), limit: ISO_LIMIT });
        }
    }
    if g.order() != h.order() || order_profile(g) != order_profile(h) || g.is_abelian() != h.is_abelian() {
        return Ok(false);
    }
    let all: Vec<usize> = g.elements().collect();
    let gens = small_generating_set(g, &all);
    let sig = |grp: &CayleyGroup, x: usize| (grp.element_order(x), centralizer_size(grp, x));
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let s = sig(g, x);
            h.elements().filter(|&y| sig(h, y) == s).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(g, h, &gens, &candidates, &mut images))
}

fn search(g: &CayleyGroup, h: &CayleyGroup, gens: &[usize], cands: &[Vec<usize>], images: &mut Vec<usize>) -> bool {
    let k = images.len();
    if k > 0 && !extends(g, h, &gens[..k], images) {
        return false;
    }
    if k == gens.len() {
        return closure(h, images).order() == h.order();
    }
    for &y in &cands[k] {
        images.push(y);
        if search(g, h, gens, cands, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Whether `gens[i] -> images[i]` extends to a homomorphism on `<gens>`.
fn extends(g: &CayleyGroup, h: &CayleyGroup, gens: &[usize], images: &[usize]) -> bool {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let img = h.mul(map[x], images[i]);
            if map[y] == usize::MAX {
                map[y] = img;
                stack.push(y);
            } else if map[y] != img {
                return false;
            }
        }
    }
    let mut hit = vec![false; h.order()];
    for &v in map.iter().filter(|&&v| v != usize::MAX) {
        if hit[v] {
            return false;
        }
        hit[v] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::families::*;

    #[test]
    fn dihedral_from_permutations_matches_presentation() {
        let perm = from_permutations(4, &[("r", vec![1, 2, 3, 0]), ("s", vec![0, 3, 2, 1])]).unwrap();
        assert!(is_isomorphic(&perm, &dihedral(8).unwrap()).unwrap());
        assert!(!is_isomorphic(&perm, &generalized_quaternion(8).unwrap()).unwrap());
    }

    #[test]
    fn small_identifications() {
        assert!(is_isomorphic(&sl2(2).unwrap(), &symmetric(3).unwrap()).unwrap());
        let c6 = cyclic(6).unwrap();
        let c2c3 = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert!(is_isomorphic(&c6, &c2c3).unwrap());
        let c2c2 = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert!(!is_isomorphic(&cyclic(4).unwrap(), &c2c2).unwrap());
        assert!(!is_isomorphic(&symmetric(4).unwrap(), &sl2(3).unwrap()).unwrap());
        assert!(is_isomorphic(&dihedral(8).unwrap(), &gpmn(2, 2, 1).unwrap()).unwrap());
    }
}
