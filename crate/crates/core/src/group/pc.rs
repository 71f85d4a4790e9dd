//! Power-conjugate presentations and collection.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{CayleyGroup, GroupError, MAX_ORDER};

/// Step budget for a single collection; exceeding it marks the presentation inconsistent.
pub const COLLECTION_BUDGET: usize = 1_000_000;

/// A power-conjugate presentation on generators `g_0, ..., g_{n-1}`.
///
/// Normal words are `g_0^e_0 ... g_{n-1}^e_{n-1}` with `0 <= e_i < r_i`; they are
/// represented by their exponent vectors. Relations are
/// `g_i^r_i = w_i` and `g_j^g_i = w_ij` for `i < j`, where the right hand sides are
/// normal words in generators after `g_i`. Unset relations default to trivial ones.
#[derive(Debug, Clone)]
pub struct PcPresentation {
    names: Vec<String>,
    rel_orders: Vec<u32>,
    powers: Vec<Vec<u32>>,
    conjugates: Vec<Vec<Vec<u32>>>,
}

impl PcPresentation {
    pub fn new(names: &[&str], rel_orders: &[u32]) -> Result<Self, GroupError> {
        if names.len() != rel_orders.len() || names.is_empty() {
            return Err(GroupError::InvalidParameter("names and relative orders differ in length".into()));
        }
        if let Some(r) = rel_orders.iter().find(|&&r| r < 2) {
            return Err(GroupError::InvalidParameter(format!("relative order {r} is below 2")));
        }
        let order = rel_orders.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r as usize));
        match order {
            Some(o) if o <= MAX_ORDER => {}
            _ => return Err(GroupError::TooLarge { order: order.unwrap_or(usize::MAX), limit: MAX_ORDER }),
        }
        let n = names.len();
        let conjugates = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut w = vec![0; n];
                        if j > i {
                            w[j] = 1;
                        }
                        w
                    })
                    .collect()
            })
            .collect();
        Ok(PcPresentation {
            names: names.iter().map(|s| s.to_string()).collect(),
            rel_orders: rel_orders.to_vec(),
            powers: vec![vec![0; n]; n],
            conjugates,
        })
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rel_orders(&self) -> &[u32] {
        &self.rel_orders
    }

    /// Product of the relative orders.
    pub fn order(&self) -> usize {
        self.rel_orders.iter().map(|&r| r as usize).product()
    }

    /// Normal word from `(generator, exponent)` letters; each generator may appear once.
    pub fn word(&self, letters: &[(usize, u32)]) -> Result<Vec<u32>, GroupError> {
        let mut w = vec![0; self.ngens()];
        for &(g, e) in letters {
            if g >= self.ngens() {
                return Err(GroupError::InvalidParameter(format!("no generator {g}")));
            }
            if e >= self.rel_orders[g] || w[g] != 0 {
                return Err(GroupError::InvalidParameter(format!(
                    "letter {}^{e} is not in normal form",
                    self.names[g]
                )));
            }
            w[g] = e;
        }
        Ok(w)
    }

    fn check_tail(&self, i: usize, w: &[u32], what: &str) -> Result<(), GroupError> {
        if w.iter().take(i + 1).any(|&e| e != 0) {
            return Err(GroupError::InvalidParameter(format!(
                "{what} must only involve generators after {}",
                self.names[i]
            )));
        }
        Ok(())
    }

    /// Sets `g_i^r_i = w`.
    pub fn set_power(&mut self, i: usize, letters: &[(usize, u32)]) -> Result<&mut Self, GroupError> {
        let w = self.word(letters)?;
        self.check_tail(i, &w, "power relation")?;
        self.powers[i] = w;
        Ok(self)
    }

    /// Sets `g_j^g_i = w` for `i < j`.
    pub fn set_conjugate(&mut self, j: usize, i: usize, letters: &[(usize, u32)]) -> Result<&mut Self, GroupError> {
        if i >= j {
            return Err(GroupError::InvalidParameter("conjugation relations need i < j".into()));
        }
        let w = self.word(letters)?;
        self.check_tail(i, &w, "conjugation relation")?;
        self.conjugates[i][j] = w;
        Ok(self)
    }

    fn strides(&self) -> Vec<usize> {
        let n = self.ngens();
        let mut s = vec![1usize; n + 1];
        for i in (0..n).rev() {
            s[i] = s[i + 1] * self.rel_orders[i] as usize;
        }
        s
    }

    /// Position of a normal word in the lexicographic order of normal words.
    pub fn index_of(&self, w: &[u32]) -> usize {
        let s = self.strides();
        w.iter().enumerate().map(|(i, &e)| e as usize * s[i + 1]).sum()
    }

    pub fn word_at(&self, index: usize) -> Vec<u32> {
        let s = self.strides();
        (0..self.ngens()).map(|i| ((index / s[i + 1]) % self.rel_orders[i] as usize) as u32).collect()
    }

    pub fn format_word(&self, w: &[u32]) -> String {
        let parts: Vec<String> = w
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Collects an arbitrary positive word into its normal form, letter by letter from the left.
    pub fn collect(&self, letters: &[(usize, u32)]) -> Result<Vec<u32>, GroupError> {
        let mut u = vec![0; self.ngens()];
        let mut steps = 0;
        for &(g, e) in letters {
            if g >= self.ngens() {
                return Err(GroupError::InvalidParameter(format!("no generator {g}")));
            }
            for _ in 0..e {
                self.mul_gen(&mut u, g, &mut steps)?;
            }
        }
        Ok(u)
    }

    /// Product of two normal words.
    pub fn multiply(&self, u: &[u32], v: &[u32]) -> Result<Vec<u32>, GroupError> {
        let mut w = u.to_vec();
        let mut steps = 0;
        self.mul_word(&mut w, v, &mut steps)?;
        Ok(w)
    }

    fn mul_word(&self, u: &mut [u32], v: &[u32], steps: &mut usize) -> Result<(), GroupError> {
        for (j, &e) in v.iter().enumerate() {
            for _ in 0..e {
                self.mul_gen(u, j, steps)?;
            }
        }
        Ok(())
    }

    // u := u * g_k, using prefix * g_k^e * t * g_k = prefix * g_k^(e+1) * t^(g_k).
    fn mul_gen(&self, u: &mut [u32], k: usize, steps: &mut usize) -> Result<(), GroupError> {
        *steps += 1;
        if *steps > COLLECTION_BUDGET {
            return Err(GroupError::CollectionBudget(COLLECTION_BUDGET));
        }
        let n = self.ngens();
        let mut t = vec![0; n];
        for j in k + 1..n {
            for _ in 0..u[j] {
                self.mul_word(&mut t, &self.conjugates[k][j], steps)?;
            }
        }
        u[k] += 1;
        if u[k] == self.rel_orders[k] {
            u[k] = 0;
            let mut w = self.powers[k].clone();
            self.mul_word(&mut w, &t, steps)?;
            t = w;
        }
        u[k + 1..n].copy_from_slice(&t[k + 1..n]);
        Ok(())
    }

    /// Builds the Cayley table level by level and validates it exhaustively.
    ///
    /// The level `k` subgroup `<g_k, ..., g_{n-1}>` occupies the first indices, so products
    /// `g_k^e t * g_k^f t'` reduce to `g_k^(e+f) t^(g_k^f) t'` inside the next level.
    pub fn to_group(&self) -> Result<CayleyGroup, GroupError> {
        let n = self.ngens();
        let order = self.order();
        let s = self.strides();
        let mut table = vec![0usize; order * order];
        for k in (0..n).rev() {
            let sub = s[k + 1];
            let r = self.rel_orders[k] as usize;
            let t_of = |a: usize, b: usize, table: &[usize]| table[a * order + b];
            let conj_idx: Vec<usize> = (k + 1..n).map(|j| self.index_of(&self.conjugates[k][j])).collect();
            let mut phis: Vec<Vec<usize>> = Vec::with_capacity(r);
            phis.push((0..sub).collect());
            let phi1: Vec<usize> = (0..sub)
                .map(|t| {
                    let w = self.word_at(t);
                    let mut acc = 0;
                    for (off, j) in (k + 1..n).enumerate() {
                        for _ in 0..w[j] {
                            acc = t_of(acc, conj_idx[off], &table);
                        }
                    }
                    acc
                })
                .collect();
            for f in 1..r {
                let prev = &phis[f - 1];
                let next: Vec<usize> = (0..sub).map(|t| phi1[prev[t]]).collect();
                phis.push(next);
            }
            let w = self.index_of(&self.powers[k]);
            for u in 0..sub * r {
                let (e, tu) = (u / sub, u % sub);
                for v in 0..sub * r {
                    let (f, tv) = (v / sub, v % sub);
                    let mut x = t_of(phis[f][tu], tv, &table);
                    let mut ex = e + f;
                    if ex >= r {
                        ex -= r;
                        x = t_of(w, x, &table);
                    }
                    table[u * order + v] = ex * sub + x;
                }
            }
        }
        let names: Vec<String> = (0..order).map(|i| self.format_word(&self.word_at(i))).collect();
        let gens = (0..n)
            .map(|i| {
                let mut w = vec![0; n];
                w[i] = 1;
                (self.names[i].clone(), self.index_of(&w))
            })
            .collect();
        CayleyGroup::from_table(table, names, gens).map_err(|e| match e {
            GroupError::NotAGroup(msg) => GroupError::Inconsistent(msg),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d8() -> PcPresentation {
        let mut pc = PcPresentation::new(&["b", "a"], &[2, 4]).unwrap();
        pc.set_conjugate(1, 0, &[(1, 3)]).unwrap();
        pc
    }

    #[test]
    fn collects_dihedral_words() {
        let pc = d8();
        // a * b = b * a^3
        assert_eq!(pc.collect(&[(1, 1), (0, 1)]).unwrap(), vec![1, 3]);
        assert_eq!(pc.format_word(&[1, 3]), "b*a^3");
        assert_eq!(pc.collect(&[(0, 2)]).unwrap(), vec![0, 0]);
    }

    #[test]
    fn table_agrees_with_collection() {
        let pc = d8();
        let g = pc.to_group().unwrap();
        for u in 0..8 {
            for v in 0..8 {
                let w = pc.multiply(&pc.word_at(u), &pc.word_at(v)).unwrap();
                assert_eq!(pc.index_of(&w), g.mul(u, v));
            }
        }
    }

    #[test]
    fn inconsistent_presentation_is_rejected() {
        // b^2 = 1 while b acts on <a> of order 3 as an automorphism of order 3.
        let mut pc = PcPresentation::new(&["b", "a"], &[2, 7]).unwrap();
        pc.set_conjugate(1, 0, &[(1, 2)]).unwrap();
        assert!(matches!(pc.to_group(), Err(GroupError::Inconsistent(_))));
    }

    #[test]
    fn relation_words_must_lie_below() {
        let mut pc = PcPresentation::new(&["b", "a"], &[2, 4]).unwrap();
        assert!(pc.set_power(1, &[(0, 1)]).is_err());
        assert!(pc.set_conjugate(0, 1, &[(1, 1)]).is_err());
        assert!(pc.word(&[(1, 4)]).is_err());
    }
}
