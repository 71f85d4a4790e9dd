//! Constructors for the standard families and the named groups.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{CayleyGroup, FamilyTag, GroupError, PcPresentation, MAX_ORDER};

fn invalid(msg: String) -> GroupError {
    GroupError::InvalidParameter(msg)
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn pow_u64(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// Closes a set of generators under a multiplication and tabulates the result.
///
/// Elements are sorted with the identity first.
pub fn from_closure<T: Ord + Clone>(
    identity: T,
    generators: &[(&str, T)],
    mul: impl Fn(&T, &T) -> T,
    name: impl Fn(&T) -> String,
) -> Result<CayleyGroup, GroupError> {
    let mut seen: BTreeMap<T, ()> = BTreeMap::new();
    seen.insert(identity.clone(), ());
    let mut frontier = vec![identity.clone()];
    while let Some(x) = frontier.pop() {
        for (_, g) in generators {
            let y = mul(&x, g);
            if !seen.contains_key(&y) {
                if seen.len() >= MAX_ORDER {
                    return Err(GroupError::TooLarge { order: seen.len() + 1, limit: MAX_ORDER });
                }
                seen.insert(y.clone(), ());
                frontier.push(y);
            }
        }
    }
    let mut elems: Vec<T> = seen.into_keys().filter(|x| *x != identity).collect();
    elems.insert(0, identity);
    let index: BTreeMap<T, usize> = elems.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    let n = elems.len();
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = index[&mul(&elems[i], &elems[j])];
        }
    }
    let names = elems.iter().map(&name).collect();
    let gens = generators.iter().map(|(nm, g)| (nm.to_string(), index[g])).collect();
    CayleyGroup::from_table(table, names, gens)
}

/// Permutations act on `1..=n`, stored 0-based; `(p * q)(i) = q(p(i))`.
pub fn from_permutations(degree: usize, generators: &[(&str, Vec<usize>)]) -> Result<CayleyGroup, GroupError> {
    for (_, p) in generators {
        let mut sorted = p.clone();
        sorted.sort_unstable();
        if p.len() != degree || sorted != (0..degree).collect::<Vec<_>>() {
            return Err(invalid("generator is not a permutation".into()));
        }
    }
    let id: Vec<usize> = (0..degree).collect();
    from_closure(id, generators, |p, q| p.iter().map(|&i| q[i]).collect(), |p| cycle_notation(p))
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for w in 0..points.len() {
        p[points[w] - 1] = points[(w + 1) % points.len()] - 1;
    }
    p
}

pub fn cyclic(n: u32) -> Result<CayleyGroup, GroupError> {
    if n == 0 {
        return Err(invalid("cyclic group needs n >= 1".into()));
    }
    if n == 1 {
        return CayleyGroup::from_table(vec![0], vec!["1".into()], vec![]);
    }
    PcPresentation::new(&["a"], &[n])?.to_group()
}

/// Dihedral group of order `order`, `<a, b | a^(order/2) = b^2 = 1, a^b = a^-1>`.
pub fn dihedral(order: u32) -> Result<CayleyGroup, GroupError> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(invalid(format!("dihedral order {order} must be even and at least 4")));
    }
    let n = order / 2;
    let mut pc = PcPresentation::new(&["b", "a"], &[2, n])?;
    pc.set_conjugate(1, 0, &[(1, n - 1)])?;
    Ok(pc.to_group()?.with_tag(FamilyTag::Dihedral { order }))
}

/// Generalized quaternion group of order `order = 2^n >= 8`:
/// `<a, b | a^(2^(n-1)) = 1, b^2 = a^(2^(n-2)), a^b = a^-1>`.
pub fn generalized_quaternion(order: u32) -> Result<CayleyGroup, GroupError> {
    if order < 8 || !order.is_power_of_two() {
        return Err(invalid(format!("quaternion order {order} must be a power of two at least 8")));
    }
    let n = order / 2;
    let mut pc = PcPresentation::new(&["b", "a"], &[2, n])?;
    pc.set_power(0, &[(1, n / 2)])?;
    pc.set_conjugate(1, 0, &[(1, n - 1)])?;
    pc.to_group()
}

pub fn symmetric(n: usize) -> Result<CayleyGroup, GroupError> {
    if !(1..=5).contains(&n) {
        return Err(invalid(format!("symmetric degree {n} must be between 1 and 5")));
    }
    if n == 1 {
        return from_permutations(1, &[]);
    }
    let all: Vec<usize> = (1..=n).collect();
    from_permutations(n, &[("s", cycle(n, &[1, 2])), ("t", cycle(n, &all))])
}

pub fn alternating(n: usize) -> Result<CayleyGroup, GroupError> {
    if !(1..=5).contains(&n) {
        return Err(invalid(format!("alternating degree {n} must be between 1 and 5")));
    }
    let gens: Vec<(String, Vec<usize>)> =
        (3..=n).map(|k| (format!("c{k}"), cycle(n, &[1, 2, k]))).collect();
    let refs: Vec<(&str, Vec<usize>)> = gens.iter().map(|(s, p)| (s.as_str(), p.clone())).collect();
    from_permutations(n, &refs)
}

/// `<a, b | a^(p^m) = b^(p^n) = 1, a^b = a^(1 + p^(m-1))>` of order `p^(m+n)`.
pub fn gpmn(p: u32, m: u32, n: u32) -> Result<CayleyGroup, GroupError> {
    if !is_prime(p as u64) || m < 2 || n < 1 {
        return Err(invalid(format!("G({p},{m},{n}) needs p prime, m >= 2 and n >= 1")));
    }
    let (pm, pn) = match (pow_u64(p as u64, m), pow_u64(p as u64, n)) {
        (Some(a), Some(b)) if a * b <= MAX_ORDER as u64 => (a as u32, b as u32),
        _ => return Err(GroupError::TooLarge { order: usize::MAX, limit: MAX_ORDER }),
    };
    let mut pc = PcPresentation::new(&["b", "a"], &[pn, pm])?;
    pc.set_conjugate(1, 0, &[(1, (1 + pm / p) % pm)])?;
    Ok(pc.to_group()?.with_tag(FamilyTag::Gpmn { p, m, n }))
}

/// `C_m x| C_k = <a, b | a^m = b^k = 1, a^b = a^r>`; needs `r^k = 1 mod m`.
pub fn metacyclic(m: u32, k: u32, r: u32) -> Result<CayleyGroup, GroupError> {
    if m < 2 || k < 2 {
        return Err(invalid("metacyclic group needs m >= 2 and k >= 2".into()));
    }
    let (mm, rr) = (m as u64, r as u64 % m as u64);
    let mut acc = 1u64;
    for _ in 0..k {
        acc = acc * rr % mm;
    }
    if acc != 1 {
        return Err(invalid(format!("{r}^{k} is not 1 modulo {m}")));
    }
    if (m as u64) * (k as u64) > MAX_ORDER as u64 {
        return Err(GroupError::TooLarge { order: (m * k) as usize, limit: MAX_ORDER });
    }
    let mut pc = PcPresentation::new(&["b", "a"], &[k, m])?;
    pc.set_conjugate(1, 0, &[(1, rr as u32)])?;
    Ok(pc.to_group()?.with_tag(FamilyTag::Metacyclic { m, k, r: rr as u32 }))
}

/// Direct product; elements `(x, y)` are indexed `x * |H| + y`.
pub fn direct_product(g: &CayleyGroup, h: &CayleyGroup) -> Result<CayleyGroup, GroupError> {
    let (n, m) = (g.order(), h.order());
    if n * m > MAX_ORDER {
        return Err(GroupError::TooLarge { order: n * m, limit: MAX_ORDER });
    }
    let mut table = vec![0; n * n * m * m];
    for x1 in 0..n {
        for y1 in 0..m {
            for x2 in 0..n {
                for y2 in 0..m {
                    table[(x1 * m + y1) * n * m + x2 * m + y2] = g.mul(x1, x2) * m + h.mul(y1, y2);
                }
            }
        }
    }
    let names = (0..n * m).map(|i| format!("({},{})", g.name(i / m), h.name(i % m))).collect();
    let mut gens: Vec<(String, usize)> =
        g.generators().iter().map(|(nm, x)| (format!("{nm}1"), x * m)).collect();
    gens.extend(h.generators().iter().map(|(nm, y)| (format!("{nm}2"), *y)));
    CayleyGroup::from_table(table, names, gens)
}

/// `SL(2, q)` for `q` in {2, 3, 5}, by closing generators over `F_q`.
pub fn sl2(q: u32) -> Result<CayleyGroup, GroupError> {
    if ![2, 3, 5].contains(&q) {
        return Err(invalid(format!("SL(2,{q}) is only provided for q in {{2, 3, 5}}")));
    }
    let q = q as i64;
    let md = |x: i64| x.rem_euclid(q);
    let mul = |a: &[i64; 4], b: &[i64; 4]| {
        [
            md(a[0] * b[0] + a[1] * b[2]),
            md(a[0] * b[1] + a[1] * b[3]),
            md(a[2] * b[0] + a[3] * b[2]),
            md(a[2] * b[1] + a[3] * b[3]),
        ]
    };
    from_closure(
        [1, 0, 0, 1],
        &[("t", [1, 1, 0, 1]), ("w", [0, md(-1), 1, 0])],
        mul,
        |m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3]),
    )
}

/// `<a, b, c | a^9 = b^3 = [a,b] = 1, a^c = ab, b^c = a^-3 b, c^3 = a^3>`, order 81.
pub fn bj4() -> Result<CayleyGroup, GroupError> {
    let mut pc = PcPresentation::new(&["c", "a", "b"], &[3, 9, 3])?;
    pc.set_power(0, &[(1, 3)])?;
    pc.set_conjugate(1, 0, &[(1, 1), (2, 1)])?;
    pc.set_conjugate(2, 0, &[(1, 6), (2, 1)])?;
    pc.to_group()
}

/// `<a, b | a^8 = 1, a^b = a^-1, a^4 = b^4>`, order 32.
pub fn bj5() -> Result<CayleyGroup, GroupError> {
    let mut pc = PcPresentation::new(&["b", "a"], &[4, 8])?;
    pc.set_power(0, &[(1, 4)])?;
    pc.set_conjugate(1, 0, &[(1, 7)])?;
    pc.to_group()
}

/// `<a, b, c | a^4 = b^4 = [a,b] = 1, a^c = ab^2, b^c = ba^2, c^2 = a^2>`, order 32.
pub fn bj8() -> Result<CayleyGroup, GroupError> {
    let mut pc = PcPresentation::new(&["c", "a", "b"], &[2, 4, 4])?;
    pc.set_power(0, &[(1, 2)])?;
    pc.set_conjugate(1, 0, &[(1, 1), (2, 2)])?;
    pc.set_conjugate(2, 0, &[(1, 2), (2, 1)])?;
    pc.to_group()
}

/// `<a, b, c, d | a^4 = b^4 = [a,b] = 1, a^c = a^-1, b^c = b^-1 a^2, a^d = a^-1 b^2,
/// b^d = b^-1, c^2 = a^2 b^2, d^2 = a^2, [c,d] = BJ9_CD>`, order 64.
pub fn bj9() -> Result<CayleyGroup, GroupError> {
    bj9_with_cd(BJ9_CD)
}

/// The commutator `[c, d]` completing the order 64 presentation, as exponents of `a, b`.
pub const BJ9_CD: (u32, u32) = (0, 0);

pub fn bj9_with_cd(cd: (u32, u32)) -> Result<CayleyGroup, GroupError> {
    let mut pc = PcPresentation::new(&["d", "c", "a", "b"], &[2, 2, 4, 4])?;
    pc.set_power(0, &[(2, 2)])?;
    pc.set_power(1, &[(2, 2), (3, 2)])?;
    pc.set_conjugate(2, 1, &[(2, 3)])?;
    pc.set_conjugate(3, 1, &[(2, 2), (3, 3)])?;
    pc.set_conjugate(2, 0, &[(2, 3), (3, 2)])?;
    pc.set_conjugate(3, 0, &[(3, 3)])?;
    let mut letters = vec![(1, 1)];
    if cd.0 != 0 {
        letters.push((2, cd.0));
    }
    if cd.1 != 0 {
        letters.push((3, cd.1));
    }
    pc.set_conjugate(1, 0, &letters)?;
    pc.to_group()
}

/// `<a, b, c | a^4 = b^4 = c^2 = 1, [a,b] = [b,c] = 1, [a,c] = a^2 b>`, order 32.
pub fn sg32_11() -> Result<CayleyGroup, GroupError> {
    let mut pc = PcPresentation::new(&["c", "a", "b"], &[2, 4, 4])?;
    pc.set_conjugate(1, 0, &[(1, 3), (2, 1)])?;
    pc.to_group()
}

/// `G(2, 2, 3)`.
pub fn sg32_12() -> Result<CayleyGroup, GroupError> {
    gpmn(2, 2, 3)
}

/// `<a, b, c, d | a^4 = b^4 = c^2 = d^2 = [a,b] = [b,c] = 1, [a,c] = a^2 b,
/// [a,d] = a^2 b^2, [b,d] = b^2, [c,d] = a^2 b^-1>`, order 64, with pc order `d, c, a, b`.
pub fn sg64_135() -> Result<CayleyGroup, GroupError> {
    let mut pc = PcPresentation::new(&["d", "c", "a", "b"], &[2, 2, 4, 4])?;
    pc.set_conjugate(2, 1, &[(2, 3), (3, 1)])?;
    pc.set_conjugate(2, 0, &[(2, 3), (3, 2)])?;
    pc.set_conjugate(3, 0, &[(3, 3)])?;
    pc.set_conjugate(1, 0, &[(1, 1), (2, 2), (3, 3)])?;
    let g = pc.to_group()?;
    if g.order() != 64 {
        return Err(GroupError::Inconsistent("SG64_135 does not have order 64".into()));
    }
    Ok(g)
}

pub fn q8xq8() -> Result<CayleyGroup, GroupError> {
    let q = generalized_quaternion(8)?;
    direct_product(&q, &q)
}
