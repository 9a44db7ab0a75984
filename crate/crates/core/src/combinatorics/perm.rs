//! Permutations of `{1..n}` acting on the right.
//!
//! `(k)(vw) = ((k)v)w`, so a product is applied left to right.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::CombError;

/// One-line notation with cached Coxeter length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    img: Vec<usize>,
    len: usize,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (1..=n).collect(), len: 0 }
    }

    /// From a 1-based image list.
    pub fn from_one_line(img: Vec<usize>) -> Result<Self, CombError> {
        let n = img.len();
        let mut seen = vec![false; n + 1];
        for &v in &img {
            if v == 0 || v > n || seen[v] {
                return Err(CombError::NotAPermutation(img));
            }
            seen[v] = true;
        }
        let len = inversions(&img);
        Ok(Perm { img, len })
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self, CombError> {
        if i == 0 || i >= n {
            return Err(CombError::OutOfRange { what: "simple transposition", value: i, bound: n });
        }
        let mut img: Vec<usize> = (1..=n).collect();
        img.swap(i - 1, i);
        Ok(Perm { img, len: 1 })
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.img
    }

    /// `(k)w`.
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1]
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// `self · o`: apply `self`, then `o`.
    pub fn then(&self, o: &Perm) -> Perm {
        assert_eq!(self.n(), o.n(), "permutations of different degree");
        let img: Vec<usize> = self.img.iter().map(|&k| o.apply(k)).collect();
        let len = inversions(&img);
        Perm { img, len }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.n()];
        for (k, &v) in self.img.iter().enumerate() {
            img[v - 1] = k + 1;
        }
        Perm { img, len: self.len }
    }

    /// Embeds into `S_m`, `m ≥ n`, fixing `n+1..m`.
    pub fn extend(&self, m: usize) -> Perm {
        let mut img = self.img.clone();
        img.extend(self.n() + 1..=m);
        Perm { img, len: self.len }
    }

    /// `s_i · self`: swaps the images of `i` and `i+1`.
    pub fn left_simple(&self, i: usize) -> Perm {
        let mut img = self.img.clone();
        img.swap(i - 1, i);
        let len = if self.img[i - 1] < self.img[i] { self.len + 1 } else { self.len - 1 };
        Perm { img, len }
    }

    /// `self · s_i`: swaps the values `i` and `i+1`.
    pub fn right_simple(&self, i: usize) -> Perm {
        let mut img = self.img.clone();
        let (a, b) = (img.iter().position(|&v| v == i).unwrap(), img.iter().position(|&v| v == i + 1).unwrap());
        img.swap(a, b);
        let len = if a < b { self.len + 1 } else { self.len - 1 };
        Perm { img, len }
    }

    /// Whether `ℓ(s_i w) > ℓ(w)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.img[i - 1] < self.img[i]
    }

    /// Reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}`, greedy from the left.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.len);
        while w.len > 0 {
            let i = (1..w.n()).find(|&i| !w.left_ascent(i)).expect("non-identity has a descent");
            word.push(i);
            w = w.left_simple(i);
        }
        word
    }

    /// Product of simple transpositions `s_{i_1} ⋯ s_{i_k}` in `S_n`.
    pub fn from_word(word: &[usize], n: usize) -> Result<Perm, CombError> {
        let mut w = Perm::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(CombError::OutOfRange { what: "simple transposition", value: i, bound: n });
            }
            w = w.right_simple(i);
        }
        Ok(w)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n() + 1];
        let mut out = Vec::new();
        for k in 1..=self.n() {
            if seen[k] {
                continue;
            }
            let mut cyc = vec![k];
            seen[k] = true;
            let mut x = self.apply(k);
            while x != k {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn cycle_string(&self) -> String {
        let c = self.cycles();
        if c.is_empty() {
            return "()".to_string();
        }
        c.iter()
            .map(|cyc| format!("({})", cyc.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect()
    }

    /// Every permutation of `S_n`, in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm::from_one_line(cur.clone()).expect("valid"));
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

fn inversions(img: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..img.len() {
        for j in i + 1..img.len() {
            if img[i] > img[j] {
                c += 1;
            }
        }
    }
    c
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.img.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self, self.cycle_string())
    }
}

/// `w_{a,b}` in `S_{a+b}`: `k ↦ b + k` for `k ≤ a` and `a + k ↦ k` for `k ≤ b`.
pub fn w_ab(a: usize, b: usize) -> Perm {
    let img = (1..=a).map(|k| b + k).chain(1..=b).collect();
    Perm::from_one_line(img).expect("two-row form is a permutation")
}

/// `s_{i,j} = s_i s_{i+1} ⋯ s_j` in `S_n`; the identity when `j < i`.
pub fn s_ij(i: usize, j: usize, n: usize) -> Result<Perm, CombError> {
    if j < i {
        return Ok(Perm::identity(n));
    }
    Perm::from_word(&(i..=j).collect::<Vec<_>>(), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        // s_{1,2} = s_1 s_2 = (3,2,1)
        let s = s_ij(1, 2, 3).unwrap();
        assert_eq!(s.cycle_string(), "(1,3,2)");
    }

    #[test]
    fn reduced_words_round_trip() {
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Perm::from_word(&word, 4).unwrap(), w);
        }
    }

    #[test]
    fn inverse_and_then() {
        for w in Perm::all(3) {
            assert!(w.then(&w.inverse()).is_identity());
        }
        assert_eq!(Perm::all(4).len(), 24);
    }

    #[test]
    fn shuffle_permutations() {
        assert_eq!(w_ab(3, 2).cycle_string(), "(1,3,5,2,4)");
        let word = s_ij(3, 4, 5).unwrap().then(&s_ij(2, 3, 5).unwrap()).then(&s_ij(1, 2, 5).unwrap());
        assert_eq!(word, w_ab(3, 2));
        assert_eq!(w_ab(4, 5).cycle_string(), "(1,6,2,7,3,8,4,9,5)");
    }
}
