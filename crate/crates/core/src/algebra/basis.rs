//! Indexing of the basis `L_1^{c_1} ⋯ L_n^{c_n} T_w`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Perm;

/// A basis monomial `L^c T_w` with `0 ≤ c_k < r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BasisIndex {
    pub c: Vec<usize>,
    pub w: Perm,
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &e) in self.c.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("L{}", k + 1)),
                _ => parts.push(format!("L{}^{}", k + 1, e)),
            }
        }
        if !self.w.is_identity() {
            parts.push(format!("T{}", self.w));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Dense numbering `idx = code(c)·n! + perm`, where `code(c) = Σ c_k r^{k−1}`.
///
/// Index 0 is the identity; permutations are numbered in lexicographic order.
#[derive(Debug)]
pub(crate) struct BasisTable {
    pub n: usize,
    pub r: usize,
    nfact: usize,
    ncodes: usize,
    perms: Vec<Perm>,
    perm_index: HashMap<Vec<usize>, u32>,
    /// `left[p][i−1]` is the number of `s_i·w_p`.
    left: Vec<Vec<u32>>,
    words: Vec<Vec<usize>>,
    inverse: Vec<u32>,
}

impl BasisTable {
    pub fn new(n: usize, r: usize) -> Self {
        let perms = Perm::all(n);
        let perm_index: HashMap<Vec<usize>, u32> =
            perms.iter().enumerate().map(|(k, p)| (p.one_line().to_vec(), k as u32)).collect();
        let left = perms
            .iter()
            .map(|p| (1..n).map(|i| perm_index[p.left_simple(i).one_line()]).collect())
            .collect();
        let words = perms.iter().map(Perm::reduced_word).collect();
        let inverse = perms.iter().map(|p| perm_index[p.inverse().one_line()]).collect();
        BasisTable { n, r, nfact: perms.len(), ncodes: r.pow(n as u32), perms, perm_index, left, words, inverse }
    }

    pub fn dim(&self) -> usize {
        self.nfact * self.ncodes
    }

    pub fn encode(&self, c: &[usize], p: u32) -> u32 {
        let code = c.iter().rev().fold(0, |acc, &e| acc * self.r + e);
        (code * self.nfact) as u32 + p
    }

    /// `(c, perm number)`.
    pub fn decode(&self, idx: u32) -> (Vec<usize>, u32) {
        let (mut code, p) = (idx as usize / self.nfact, idx as usize % self.nfact);
        let c = (0..self.n)
            .map(|_| {
                let e = code % self.r;
                code /= self.r;
                e
            })
            .collect();
        (c, p as u32)
    }

    pub fn perm(&self, p: u32) -> &Perm {
        &self.perms[p as usize]
    }

    pub fn perm_number(&self, w: &Perm) -> Option<u32> {
        self.perm_index.get(w.one_line()).copied()
    }

    pub fn left_simple(&self, p: u32, i: usize) -> u32 {
        self.left[p as usize][i - 1]
    }

    pub fn word(&self, p: u32) -> &[usize] {
        &self.words[p as usize]
    }

    pub fn inverse(&self, p: u32) -> u32 {
        self.inverse[p as usize]
    }

    pub fn index(&self, b: &BasisIndex) -> Option<u32> {
        if b.c.len() != self.n || b.c.iter().any(|&e| e >= self.r) {
            return None;
        }
        Some(self.encode(&b.c, self.perm_number(&b.w)?))
    }

    pub fn basis_index(&self, idx: u32) -> BasisIndex {
        let (c, p) = self.decode(idx);
        BasisIndex { c, w: self.perm(p).clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let t = BasisTable::new(3, 2);
        assert_eq!(t.dim(), 48);
        for idx in 0..t.dim() as u32 {
            let b = t.basis_index(idx);
            assert_eq!(t.index(&b), Some(idx));
        }
        assert_eq!(t.basis_index(0).to_string(), "1");
    }
}
