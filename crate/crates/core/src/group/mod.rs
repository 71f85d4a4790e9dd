//! Finite groups stored as dense Cayley tables.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

pub mod families;
pub mod iso;
pub mod pc;

pub use families::*;
pub use iso::is_isomorphic;
pub use pc::PcPresentation;

/// Largest order accepted for a Cayley table.
pub const MAX_ORDER: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group of order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("inconsistent presentation: {0}")]
    Inconsistent(String),
    #[error("collection exceeded the step budget of {0}")]
    CollectionBudget(usize),
    #[error("guard exceeded: {0}")]
    Guard(String),
}

/// Constructor provenance, used to pick family specific routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    /// `<a, b | a^(p^m) = b^(p^n) = 1, a^b = a^(1 + p^(m-1))>`.
    Gpmn { p: u32, m: u32, n: u32 },
    /// `C_m x| C_k` with `a^b = a^r`.
    Metacyclic { m: u32, k: u32, r: u32 },
    /// Dihedral group of the given order with generators `a` (rotation) and `b`.
    Dihedral { order: u32 },
}

/// A finite group given by its full multiplication table.
///
/// Elements are the indices `0..order`; index 0 is the identity.
#[derive(Debug, Clone)]
pub struct CayleyGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    names: Vec<String>,
    generators: Vec<(String, usize)>,
    tag: Option<FamilyTag>,
}

impl CayleyGroup {
    /// Builds a group from a row-major table, checking every group axiom exhaustively.
    pub fn from_table(
        table: Vec<usize>,
        names: Vec<String>,
        generators: Vec<(String, usize)>,
    ) -> Result<Self, GroupError> {
        let order = names.len();
        if order == 0 {
            return Err(GroupError::NotAGroup("empty element list".into()));
        }
        if order > MAX_ORDER {
            return Err(GroupError::TooLarge { order, limit: MAX_ORDER });
        }
        if table.len() != order * order {
            return Err(GroupError::NotAGroup("table has the wrong size".into()));
        }
        if table.iter().any(|&x| x >= order) {
            return Err(GroupError::NotAGroup("table entry out of range".into()));
        }
        for x in 0..order {
            if table[x] != x || table[x * order] != x {
                return Err(GroupError::NotAGroup("index 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0usize; order];
        for stamp in 1..=2 * order {
            let (is_row, k) = ((stamp - 1) < order, (stamp - 1) % order);
            for j in 0..order {
                let v = if is_row { table[k * order + j] } else { table[j * order + k] };
                if seen[v] == stamp {
                    return Err(GroupError::NotAGroup("table is not a Latin square".into()));
                }
                seen[v] = stamp;
            }
        }
        let mut inverses = vec![0u16; order];
        for x in 0..order {
            let y = (0..order).find(|&y| table[x * order + y] == 0).unwrap();
            if table[y * order + x] != 0 {
                return Err(GroupError::NotAGroup("left and right inverses differ".into()));
            }
            inverses[x] = y as u16;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    if table[ab * order + c] != table[a * order + table[b * order + c]] {
                        return Err(GroupError::NotAGroup(alloc::format!(
                            "associativity fails at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        for (_, g) in &generators {
            if *g >= order {
                return Err(GroupError::NotAGroup("generator out of range".into()));
            }
        }
        let g = CayleyGroup {
            order,
            table: table.into_iter().map(|x| x as u16).collect(),
            inverses,
            names,
            generators,
            tag: None,
        };
        let gens: Vec<usize> = g.generators.iter().map(|(_, x)| *x).collect();
        if crate::structure::closure(&g, &gens).order() != order {
            return Err(GroupError::NotAGroup("generators do not generate the group".into()));
        }
        Ok(g)
    }

    pub(crate) fn with_tag(mut self, tag: FamilyTag) -> Self {
        self.tag = Some(tag);
        self
    }

    pub fn with_generators(mut self, generators: Vec<(String, usize)>) -> Self {
        self.generators = generators;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let (mut acc, mut sq) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// `g^h = h^-1 g h`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// `[g, h] = g^-1 h^-1 g h`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn generator_elements(&self) -> Vec<usize> {
        self.generators.iter().map(|(_, g)| *g).collect()
    }

    /// Element bound to a named generator.
    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, g)| *g)
    }

    pub fn tag(&self) -> Option<FamilyTag> {
        self.tag
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_elements();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Canonical byte encoding of the table, suitable for hashing.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + 2 * self.table.len());
        out.extend_from_slice(&(self.order as u32).to_le_bytes());
        for &x in &self.table {
            out.extend_from_slice(&x.to_le_bytes());
        }
        out
    }

    /// The subgroup on `elements` as a group of its own, with a map back into `self`.
    pub fn subgroup_as_group(&self, elements: &[usize]) -> (CayleyGroup, Vec<usize>) {
        let mut elems: Vec<usize> = elements.to_vec();
        elems.sort_unstable();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let n = elems.len();
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = pos[self.mul(elems[i], elems[j])];
            }
        }
        let names = elems.iter().map(|&x| self.names[x].clone()).collect();
        let gens = crate::structure::small_generating_set(self, &elems)
            .into_iter()
            .map(|x| (self.names[x].to_string(), pos[x]))
            .collect();
        let g = CayleyGroup::from_table(table, names, gens).expect("subgroup table is a group");
        (g, elems)
    }
}
