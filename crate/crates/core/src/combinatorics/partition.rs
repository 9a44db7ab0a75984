//! Partitions and multipartitions under the dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CombError;
use crate::coeff::{q_fact, RatFunc};

/// Weakly decreasing positive parts; the empty list is the zero partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Row `i` (1-based); zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.row(1);
        Partition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.row(i)
    }

    /// All partitions of `m` in decreasing lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if m == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(m)).rev() {
                cur.push(p);
                rec(m - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// `h_ij = λ_i + λ'_j − i − j + 1` for every node.
    pub fn hooks(&self) -> Vec<((usize, usize), usize)> {
        let c = self.conjugate();
        self.cells().map(|(i, j)| ((i, j), self.row(i) + c.row(j) + 1 - i - j)).collect()
    }

    /// `λ_i − j + 1` for every node: the number of nodes from `(i,j)` to the row end.
    pub fn row_hand(&self) -> Vec<((usize, usize), usize)> {
        self.cells().map(|(i, j)| ((i, j), self.row(i) - j + 1)).collect()
    }

    /// `λ'_j − i + 1` for every node: the number of nodes from `(i,j)` to the column end.
    pub fn col_hand(&self) -> Vec<((usize, usize), usize)> {
        let c = self.conjugate();
        self.cells().map(|(i, j)| ((i, j), c.row(j) - i + 1)).collect()
    }

    pub fn hook(&self, i: usize, j: usize) -> Result<usize, CombError> {
        if !self.contains(i, j) {
            return Err(CombError::NodeOutside(i, j));
        }
        Ok(self.row(i) + self.conjugate().row(j) + 1 - i - j)
    }

    /// Nodes `(i, j)` in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A node `(row, col, comp)` of a multipartition diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// Content `j − i`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// `q^{j−i} Q_c`.
    pub fn residue(&self) -> RatFunc {
        RatFunc::q_mono(self.content(), self.comp)
    }

    /// Strictly below `x`: in a later component, or in the same component and
    /// strictly left of `x`.
    pub fn is_below(&self, x: &Node) -> bool {
        self.comp > x.comp || (self.comp == x.comp && self.col < x.col)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// An `r`-tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Multipartition {
    comps: Vec<Partition>,
    n: usize,
}

impl Multipartition {
    pub fn new(comps: Vec<Partition>) -> Result<Self, CombError> {
        if comps.is_empty() {
            return Err(CombError::NoComponents);
        }
        let n = comps.iter().map(Partition::size).sum();
        Ok(Multipartition { comps, n })
    }

    pub fn from_parts(parts: Vec<Vec<usize>>) -> Result<Self, CombError> {
        Self::new(parts.into_iter().map(Partition::new).collect::<Result<_, _>>()?)
    }

    pub fn empty(r: usize) -> Self {
        Multipartition { comps: vec![Partition::empty(); r], n: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.comps.len()
    }

    /// Component `s`, 1-based.
    pub fn comp(&self, s: usize) -> &Partition {
        &self.comps[s - 1]
    }

    pub fn comps(&self) -> &[Partition] {
        &self.comps
    }

    /// Longest component length.
    pub fn length(&self) -> usize {
        self.comps.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// `a_s = |λ^{(1)}| + … + |λ^{(s−1)}|`.
    pub fn a(&self, s: usize) -> usize {
        self.comps[..s - 1].iter().map(Partition::size).sum()
    }

    /// `b_s = |λ^{(s+1)}| + … + |λ^{(r)}|`.
    pub fn b(&self, s: usize) -> usize {
        self.comps[s..].iter().map(Partition::size).sum()
    }

    pub fn contains(&self, x: &Node) -> bool {
        x.comp >= 1 && x.comp <= self.r() && self.comp(x.comp).contains(x.row, x.col)
    }

    /// Nodes in row-reading order: component by component, row by row.
    pub fn nodes(&self) -> Vec<Node> {
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(c, p)| p.cells().map(move |(i, j)| Node::new(i, j, c + 1)))
            .collect()
    }

    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.comps.iter().enumerate() {
            for i in 1..=p.len() + 1 {
                let j = p.row(i) + 1;
                if i == 1 || p.row(i - 1) >= j {
                    out.push(Node::new(i, j, c + 1));
                }
            }
        }
        out
    }

    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.comps.iter().enumerate() {
            for i in 1..=p.len() {
                if p.row(i + 1) < p.row(i) {
                    out.push(Node::new(i, p.row(i), c + 1));
                }
            }
        }
        out
    }

    pub fn with_node(&self, x: &Node) -> Multipartition {
        let mut parts: Vec<Vec<usize>> = self.comps.iter().map(|p| p.parts().to_vec()).collect();
        let row = &mut parts[x.comp - 1];
        if row.len() < x.row {
            row.resize(x.row, 0);
        }
        row[x.row - 1] += 1;
        Self::from_parts(parts).expect("adding an addable node keeps a multipartition")
    }

    pub fn without_node(&self, x: &Node) -> Multipartition {
        let mut parts: Vec<Vec<usize>> = self.comps.iter().map(|p| p.parts().to_vec()).collect();
        parts[x.comp - 1][x.row - 1] -= 1;
        Self::from_parts(parts).expect("removing a removable node keeps a multipartition")
    }

    /// `λ'^{(s)} = (λ^{(r−s+1)})'`.
    pub fn conjugate(&self) -> Multipartition {
        Multipartition { comps: self.comps.iter().rev().map(Partition::conjugate).collect(), n: self.n }
    }

    /// Partial sums `a_s + λ_1^{(s)} + … + λ_i^{(s)}` for `s = 1..r`, `i = 1..len`.
    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.r() * len);
        let mut base = 0;
        for p in &self.comps {
            let mut acc = base;
            for i in 1..=len {
                acc += p.row(i);
                out.push(acc);
            }
            base += p.size();
        }
        out
    }

    pub fn dominates(&self, mu: &Multipartition) -> Result<bool, CombError> {
        if self.n != mu.n || self.r() != mu.r() {
            return Err(CombError::SizeMismatch);
        }
        let len = self.n.max(1);
        Ok(self.partial_sums(len).iter().zip(mu.partial_sums(len)).all(|(a, b)| *a >= b))
    }

    pub fn strictly_dominates(&self, mu: &Multipartition) -> Result<bool, CombError> {
        Ok(self != mu && self.dominates(mu)?)
    }

    /// Dominance-compatible total order: larger keys dominate smaller ones.
    pub fn dominance_key_cmp(&self, mu: &Multipartition) -> Ordering {
        let len = self.n.max(mu.n).max(1);
        self.partial_sums(len).cmp(&mu.partial_sums(len))
    }

    /// `α(λ) = ½ Σ (λ_i^{(s)} − 1) λ_i^{(s)}`.
    pub fn alpha(&self) -> i64 {
        self.comps.iter().flat_map(|p| p.parts()).map(|&l| (l * (l - 1) / 2) as i64).sum()
    }

    /// `[λ]_q! = ∏_{s,i} [λ_i^{(s)}]_q!`.
    pub fn q_factorial(&self) -> RatFunc {
        self.comps
            .iter()
            .flat_map(|p| p.parts())
            .fold(RatFunc::one(), |acc, &l| &acc * &q_fact(l as i64).expect("nonnegative"))
    }

    /// `η_t`: all `n` nodes in one row of component `t`.
    pub fn eta(n: usize, r: usize, t: usize) -> Multipartition {
        let mut comps = vec![Partition::empty(); r];
        if n > 0 {
            comps[t - 1] = Partition(vec![n]);
        }
        Multipartition { comps, n }
    }

    /// Permutes components: component `s` of the result is component `v[s−1]` of `self`.
    pub fn permute(&self, v: &[usize]) -> Multipartition {
        Multipartition { comps: v.iter().map(|&s| self.comps[s - 1].clone()).collect(), n: self.n }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.comps.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Multipartition {
    type Err = CombError;

    /// Parses `((2,1),(1),())`; `(0)` also denotes an empty component.
    fn from_str(s: &str) -> Result<Self, CombError> {
        let bad = || CombError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
        let mut comps = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let parts = body[..close]
                .split(',')
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            comps.push(Partition::new(parts)?);
            rest = &body[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                rest = r;
            } else if !rest.is_empty() {
                return Err(bad());
            }
        }
        Multipartition::new(comps)
    }
}

/// All multipartitions of `n` with `r` components, most dominant first.
pub fn multipartitions(n: usize, r: usize) -> Vec<Multipartition> {
    fn rec(n: usize, r: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if r == 1 {
            for p in Partition::all(n) {
                cur.push(p);
                out.push(Multipartition::new(cur.clone()).expect("r ≥ 1"));
                cur.pop();
            }
            return;
        }
        for m in (0..=n).rev() {
            for p in Partition::all(m) {
                cur.push(p);
                rec(n - m, r - 1, cur, out);
                cur.pop();
            }
        }
    }
    if r == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(n, r, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.dominance_key_cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let l = multipartitions(2, 1);
        assert_eq!(l, vec![mp("((2))"), mp("((1,1))")]);
        assert_eq!(multipartitions(2, 2).len(), 5);
        let z = multipartitions(0, 3);
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].n(), 0);
        assert_eq!(z[0].r(), 3);
    }

    #[test]
    fn dominance_examples() {
        assert!(mp("((2),())").dominates(&mp("((1),(1))")).unwrap());
        let l = mp("((1),(1))");
        assert!(l.dominates(&l).unwrap());
        assert!(!l.strictly_dominates(&l).unwrap());
        assert!(!mp("((),(2))").dominates(&mp("((1),(1))")).unwrap());
        assert!(mp("((2),())").dominates(&mp("((2,1),())")).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(mp("((2,1,1),(2,1),(2))").conjugate(), mp("((1,1),(2,1),(3,1))"));
        let l = mp("((3),(),())");
        assert_eq!(l.conjugate(), mp("((),(),(1,1,1))"));
        assert_eq!(l.conjugate().conjugate(), l);
    }

    #[test]
    fn hook_and_alpha_examples() {
        let p = Partition::new(vec![2]).unwrap();
        assert_eq!(p.hooks(), vec![((1, 1), 2), ((1, 2), 1)]);
        assert_eq!(Partition::new(vec![2, 1]).unwrap().hook(1, 1).unwrap(), 3);
        assert!(p.hook(2, 1).is_err());
        assert_eq!(mp("((2),())").alpha(), 1);
        assert_eq!(mp("((1,1),())").alpha(), 0);
    }

    #[test]
    fn parsing_accepts_zero_components() {
        assert_eq!(mp("((2),(0))"), mp("((2),())"));
        assert_eq!(mp("((2),(0))").to_string(), "((2),())");
        assert!("((1),(2,3))".parse::<Multipartition>().is_err());
        assert!("(1,2)".parse::<Multipartition>().is_err());
    }
}
