use grouprings_core::group::families::*;
use grouprings_core::CayleyGroup;

/// Named groups of order at most 64 exercising every constructor.
pub fn small_catalog() -> Vec<(&'static str, CayleyGroup)> {
    let dp = |a: CayleyGroup, b: CayleyGroup| direct_product(&a, &b).unwrap();
    vec![
        ("C2", cyclic(2).unwrap()),
        ("C6", cyclic(6).unwrap()),
        ("C4xC2", dp(cyclic(4).unwrap(), cyclic(2).unwrap())),
        ("S3", symmetric(3).unwrap()),
        ("D8", dihedral(8).unwrap()),
        ("Q8", generalized_quaternion(8).unwrap()),
        ("D10", dihedral(10).unwrap()),
        ("MC(3,4,2)", metacyclic(3, 4, 2).unwrap()),
        ("A4", alternating(4).unwrap()),
        ("D12", dihedral(12).unwrap()),
        ("Q16", generalized_quaternion(16).unwrap()),
        ("D16", dihedral(16).unwrap()),
        ("MC(8,2,3)", metacyclic(8, 2, 3).unwrap()),
        ("MC(8,2,5)", metacyclic(8, 2, 5).unwrap()),
        ("G(2,2,2)", gpmn(2, 2, 2).unwrap()),
        ("MC(5,4,2)", metacyclic(5, 4, 2).unwrap()),
        ("MC(7,3,2)", metacyclic(7, 3, 2).unwrap()),
        ("S4", symmetric(4).unwrap()),
        ("SL2(3)", sl2(3).unwrap()),
        ("MC(3,8,2)", metacyclic(3, 8, 2).unwrap()),
        ("D8xC2", dp(dihedral(8).unwrap(), cyclic(2).unwrap())),
        ("Q8xC2", dp(generalized_quaternion(8).unwrap(), cyclic(2).unwrap())),
        ("Q8xC3", dp(generalized_quaternion(8).unwrap(), cyclic(3).unwrap())),
        ("S3xC3", dp(symmetric(3).unwrap(), cyclic(3).unwrap())),
        ("S3xS3", dp(symmetric(3).unwrap(), symmetric(3).unwrap())),
        ("D10xC5", dp(dihedral(10).unwrap(), cyclic(5).unwrap())),
        ("SG32_11", sg32_11().unwrap()),
        ("G(2,2,3)", gpmn(2, 2, 3).unwrap()),
        ("G(2,3,2)", gpmn(2, 3, 2).unwrap()),
        ("BJ5", bj5().unwrap()),
        ("BJ8", bj8().unwrap()),
        ("A5", alternating(5).unwrap()),
        ("MC(7,9,2)", metacyclic(7, 9, 2).unwrap()),
        ("BJ9", bj9().unwrap()),
        ("SG64_135", sg64_135().unwrap()),
        ("Q8xQ8", q8xq8().unwrap()),
    ]
}
