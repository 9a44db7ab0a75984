//! Standard tableaux of multipartition shape.

use std::fmt;

use serde::{Serialize, Serializer};

use super::partition::{Multipartition, Node};
use super::perm::Perm;
use super::CombError;
use crate::coeff::RatFunc;

/// A standard `λ`-tableau, stored as the node holding each entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StdTableau {
    shape: Multipartition,
    pos: Vec<Node>,
}

/// Rows increase left to right and columns increase downwards.
pub fn is_standard_rows(shape: &Multipartition, pos: &[Node]) -> bool {
    let entry = entry_map(shape, pos);
    shape.nodes().iter().all(|x| {
        let v = entry(x);
        let right = Node::new(x.row, x.col + 1, x.comp);
        let down = Node::new(x.row + 1, x.col, x.comp);
        (!shape.contains(&right) || entry(&right) > v) && (!shape.contains(&down) || entry(&down) > v)
    })
}

/// `Shape(t↓k)` is a multipartition for every `k`.
pub fn is_standard_restrictions(shape: &Multipartition, pos: &[Node]) -> bool {
    let mut rows: Vec<Vec<usize>> = shape.comps().iter().map(|p| vec![0; p.len()]).collect();
    for x in pos {
        let row = &mut rows[x.comp - 1];
        row[x.row - 1] += 1;
        // the new node must extend its row by one and sit under a longer row
        if row[x.row - 1] != x.col || (x.row > 1 && row[x.row - 2] < x.col) {
            return false;
        }
    }
    true
}

fn entry_map<'a>(shape: &'a Multipartition, pos: &'a [Node]) -> impl Fn(&Node) -> usize + 'a {
    let _ = shape;
    move |x: &Node| pos.iter().position(|y| y == x).map(|k| k + 1).unwrap_or(0)
}

impl StdTableau {
    /// From nested rows per component; validates shape and standardness.
    pub fn from_rows(rows: Vec<Vec<Vec<usize>>>) -> Result<Self, CombError> {
        let parts = rows.iter().map(|c| c.iter().map(Vec::len).collect()).collect();
        let shape = Multipartition::from_parts(parts)?;
        let n = shape.n();
        let mut pos = vec![None; n];
        for (c, comp) in rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v == 0 || v > n || pos[v - 1].is_some() {
                        return Err(CombError::NotStandard);
                    }
                    pos[v - 1] = Some(Node::new(i + 1, j + 1, c + 1));
                }
            }
        }
        let pos: Vec<Node> = pos.into_iter().map(|p| p.expect("bijection")).collect();
        Self::from_positions(shape, pos)
    }

    /// From the node of each entry `1..n`.
    pub fn from_positions(shape: Multipartition, pos: Vec<Node>) -> Result<Self, CombError> {
        if pos.len() != shape.n() || !pos.iter().all(|x| shape.contains(x)) || !is_standard_rows(&shape, &pos) {
            return Err(CombError::NotStandard);
        }
        Ok(StdTableau { shape, pos })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// Node holding `k`.
    pub fn node(&self, k: usize) -> Node {
        self.pos[k - 1]
    }

    pub fn positions(&self) -> &[Node] {
        &self.pos
    }

    /// Nested rows per component.
    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> =
            self.shape.comps().iter().map(|p| p.parts().iter().map(|&l| vec![0; l]).collect()).collect();
        for (k, x) in self.pos.iter().enumerate() {
            out[x.comp - 1][x.row - 1][x.col - 1] = k + 1;
        }
        out
    }

    /// Entries read component by component, row by row.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows().into_iter().flatten().flatten().collect()
    }

    /// `d(t)` with `t = t^λ d(t)`; its one-line form is the reading word.
    pub fn d(&self) -> Perm {
        Perm::from_one_line(self.reading_word()).expect("reading word is a permutation")
    }

    /// `t^λ`: entries `1..n` along rows, component by component.
    pub fn row_tableau(shape: &Multipartition) -> StdTableau {
        StdTableau { shape: shape.clone(), pos: shape.nodes() }
    }

    /// `t_λ = (t^{λ'})'`.
    pub fn col_tableau(shape: &Multipartition) -> StdTableau {
        Self::row_tableau(&shape.conjugate()).conjugate()
    }

    /// Rows and columns interchanged, components reversed.
    pub fn conjugate(&self) -> StdTableau {
        let r = self.shape.r();
        let pos = self.pos.iter().map(|x| Node::new(x.col, x.row, r - x.comp + 1)).collect();
        StdTableau { shape: self.shape.conjugate(), pos }
    }

    /// `t·w`: entry `k` becomes `(k)w`; `None` if the result is not standard.
    pub fn act(&self, w: &Perm) -> Option<StdTableau> {
        let mut pos = vec![self.pos[0]; self.n()];
        for (k, x) in self.pos.iter().enumerate() {
            pos[w.apply(k + 1) - 1] = *x;
        }
        is_standard_rows(&self.shape, &pos).then(|| StdTableau { shape: self.shape.clone(), pos })
    }

    /// `t·(i, i+1)` when standard.
    pub fn swap(&self, i: usize) -> Option<StdTableau> {
        if i == 0 || i >= self.n() {
            return None;
        }
        let mut pos = self.pos.clone();
        pos.swap(i - 1, i);
        is_standard_rows(&self.shape, &pos).then(|| StdTableau { shape: self.shape.clone(), pos })
    }

    pub fn same_row(&self, i: usize, j: usize) -> bool {
        let (a, b) = (self.node(i), self.node(j));
        a.comp == b.comp && a.row == b.row
    }

    pub fn same_col(&self, i: usize, j: usize) -> bool {
        let (a, b) = (self.node(i), self.node(j));
        a.comp == b.comp && a.col == b.col
    }

    /// `Shape(t↓k)`: the nodes holding `1..k`.
    pub fn restrict_shape(&self, k: usize) -> Multipartition {
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); self.shape.r()];
        for x in &self.pos[..k] {
            let row = &mut parts[x.comp - 1];
            if row.len() < x.row {
                row.resize(x.row, 0);
            }
            row[x.row - 1] += 1;
        }
        Multipartition::from_parts(parts).expect("standard restriction")
    }

    /// `s ⊵ t` iff `Shape(s↓k) ⊵ Shape(t↓k)` for all `k`.
    pub fn dominates(&self, t: &StdTableau) -> bool {
        (1..=self.n())
            .all(|k| self.restrict_shape(k).dominates(&t.restrict_shape(k)).unwrap_or(false))
    }

    /// `(j − i, c)` for the node holding `k`.
    pub fn residue_exp(&self, k: usize) -> (i64, usize) {
        let x = self.node(k);
        (x.content(), x.comp)
    }

    /// `res_t(k) = q^{j−i} Q_c`.
    pub fn residue(&self, k: usize) -> Result<RatFunc, CombError> {
        if k == 0 || k > self.n() {
            return Err(CombError::OutOfRange { what: "tableau entry", value: k, bound: self.n() });
        }
        Ok(self.node(k).residue())
    }

    /// Residues `res_t(1), …, res_t(n)`.
    pub fn residues(&self) -> Vec<RatFunc> {
        self.pos.iter().map(Node::residue).collect()
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        f.write_str("(")?;
        for (c, comp) in rows.iter().enumerate() {
            if c > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (i, row) in comp.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "[{}]", row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))?;
            }
            f.write_str("]")?;
        }
        f.write_str(")")
    }
}

impl Serialize for StdTableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// `Std(λ)` ordered by `(ℓ(d(t)), reading word)`: starts at `t^λ`, ends at `t_λ`.
pub fn std_tableaux(shape: &Multipartition) -> Vec<StdTableau> {
    fn rec(shape: &Multipartition, out: &mut Vec<Vec<Node>>) {
        if shape.n() == 0 {
            out.push(Vec::new());
            return;
        }
        for x in shape.removable() {
            let mut sub = Vec::new();
            rec(&shape.without_node(&x), &mut sub);
            for mut p in sub {
                p.push(x);
                out.push(p);
            }
        }
    }
    let mut fills = Vec::new();
    rec(shape, &mut fills);
    let mut tabs: Vec<(usize, Vec<usize>, StdTableau)> = fills
        .into_iter()
        .map(|pos| {
            let t = StdTableau { shape: shape.clone(), pos };
            (t.d().length(), t.reading_word(), t)
        })
        .collect();
    tabs.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    tabs.into_iter().map(|x| x.2).collect()
}

/// `R(k) = {q^d Q_s : |d| < k}`, without `d = 0` when `r = 1` and `k ∈ {2, 3}`.
///
/// Returned as `(d, s)` ordered by `s`, then `d`.
pub fn residue_set(k: usize, r: usize) -> Vec<(i64, usize)> {
    let k = k as i64;
    let mut out = Vec::new();
    for s in 1..=r {
        for d in (1 - k)..k {
            if d == 0 && r == 1 && (k == 2 || k == 3) {
                continue;
            }
            out.push((d, s));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn row_and_column_tableaux() {
        let l = mp("((3,1),(2,1),(1,1))");
        assert_eq!(StdTableau::row_tableau(&l).rows(), vec![
            vec![vec![1, 2, 3], vec![4]],
            vec![vec![5, 6], vec![7]],
            vec![vec![8], vec![9]]
        ]);
        let l = mp("((2,1,1),(2,1),(2))");
        let t = StdTableau::col_tableau(&l);
        assert_eq!(t.to_string(), "([[6,9],[7],[8]],[[3,5],[4]],[[1,2]])");
        assert_eq!(t.d().cycle_string(), "(1,6,5,3,7,4,8)(2,9)");
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(std_tableaux(&mp("((1),(1))")).len(), 2);
        assert_eq!(std_tableaux(&mp("((3),())")).len(), 1);
        let l = mp("((3,1),(2,1),(1,1))");
        let all = std_tableaux(&l);
        let shown =
            StdTableau::from_rows(vec![vec![vec![1, 3, 6], vec![2]], vec![vec![4, 9], vec![7]], vec![vec![5], vec![8]]])
                .unwrap();
        assert!(all.contains(&shown));
        assert_eq!(all[0], StdTableau::row_tableau(&l));
        assert_eq!(*all.last().unwrap(), StdTableau::col_tableau(&l));
    }

    #[test]
    fn residue_examples() {
        let t = StdTableau::row_tableau(&mp("((3,1),(2,1),(1,1))"));
        assert_eq!(t.residue(1).unwrap(), RatFunc::big_q(1));
        assert_eq!(t.residue(4).unwrap(), RatFunc::q_mono(-1, 1));
        assert_eq!(t.residue(2).unwrap(), RatFunc::q_mono(1, 1));
        assert_eq!(t.residue(5).unwrap(), RatFunc::big_q(2));
        assert!(t.residue(10).is_err());
    }

    #[test]
    fn residue_set_examples() {
        assert_eq!(residue_set(1, 2), vec![(0, 1), (0, 2)]);
        assert_eq!(residue_set(2, 1), vec![(-1, 1), (1, 1)]);
        assert_eq!(residue_set(2, 2).len(), 6);
        assert_eq!(residue_set(4, 1).len(), 7);
    }
}
