mod common;

use grouprings_core::algebra::{right_mult_rank, AlgElement};
use grouprings_core::nd::{bicyclic_resistant, dk_check, sn_check, NdStatus};
use grouprings_core::structure::{
    core, cyclic_subgroup_class_count, derived_of, derived_subgroup, is_solvable, is_supersolvable, normal_subgroups,
    LatticeGuard,
};
use grouprings_core::wedderburn::{epsilon_normal, kernel_of_idempotent, wedderburn_report};

fn guard() -> LatticeGuard {
    LatticeGuard::default()
}

#[test]
fn epsilon_family_is_a_complete_orthogonal_set() {
    for (name, g) in common::small_catalog() {
        let eps: Vec<AlgElement> =
            normal_subgroups(&g).iter().map(|n| epsilon_normal(&g, n).unwrap()).filter(|e| !e.is_zero()).collect();
        let sum = eps.iter().fold(AlgElement::zero(g.order()), |acc, e| acc.add(e));
        assert_eq!(sum, AlgElement::one(g.order()), "{name}");
        for (i, e) in eps.iter().enumerate() {
            assert!(e.is_idempotent(&g) && e.is_central(&g), "{name}");
            for f in &eps[i + 1..] {
                assert!(e.mul(f, &g).is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn components_match_formulas_kernels_and_counts() {
    for (name, g) in common::small_catalog() {
        let r = wedderburn_report(&g, guard()).unwrap();
        let g2 = derived_of(&g, &derived_subgroup(&g));
        if g.is_abelian() || g2.is_trivial() || is_supersolvable(&g) {
            assert!(r.covered, "{name} should be covered");
        }
        for c in &r.components {
            assert_eq!(c.dim, c.dim_formula, "{name}");
            assert_eq!(c.dim, right_mult_rank(&c.ssp.e, &g), "{name}");
            assert_eq!(c.kernel, core(&g, &c.ssp.k), "{name}");
            assert_eq!(c.kernel, kernel_of_idempotent(&g, &c.ssp.e), "{name}");
        }
        if r.covered {
            assert_eq!(r.components.len(), cyclic_subgroup_class_count(&g), "{name}");
            assert_eq!(r.components.iter().map(|c| c.dim).sum::<usize>(), g.order(), "{name}");
        }
        for (i, a) in r.components.iter().enumerate() {
            for b in &r.components[i + 1..] {
                assert!(a.ssp.e.mul(&b.ssp.e, &g).is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn at_most_one_matrix_component_implies_dk() {
    for (name, g) in common::small_catalog() {
        let r = wedderburn_report(&g, guard()).unwrap();
        if r.matrix_count_max <= 1 {
            assert!(dk_check(&g).unwrap().holds, "{name}");
        }
    }
}

#[test]
fn sn_routes_agree() {
    for (name, g) in common::small_catalog() {
        let r = sn_check(&g, guard()).unwrap();
        assert!(r.consistent(), "{name}: {r:?}");
    }
}

#[test]
fn resistance_supersolvability_and_dk_agree_under_sn() {
    let mut with_sn = 0;
    for (name, g) in common::small_catalog() {
        if !is_solvable(&g) || !sn_check(&g, guard()).unwrap().direct {
            continue;
        }
        with_sn += 1;
        let r = wedderburn_report(&g, guard()).unwrap();
        let resistant = bicyclic_resistant(&g, guard()).unwrap();
        assert_ne!(resistant.status, NdStatus::Undetermined, "{name}");
        let resistant = resistant.status == NdStatus::Holds;
        let structural = is_supersolvable(&g) || r.matrix_count_max <= 1;
        let dk = dk_check(&g).unwrap().holds;
        assert_eq!(resistant, structural, "{name}");
        assert_eq!(resistant, dk, "{name}");
    }
    assert!(with_sn >= 10);
}
