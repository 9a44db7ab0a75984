//! The γ-coefficients of standard tableaux. Beta symbols and `w_λ` live here too.

use super::partition::{Multipartition, Node, Partition};
use super::perm::{w_ab, Perm};
use super::tableau::StdTableau;
use super::CombError;
use crate::coeff::{Factored, RatFunc};

/// Addable nodes of `Shape(t↓i)` below the node holding `i`.
pub fn addable_below(t: &StdTableau, i: usize) -> Vec<Node> {
    let x = t.node(i);
    t.restrict_shape(i).addable().into_iter().filter(|y| y.is_below(&x)).collect()
}

/// Removable nodes of `Shape(t↓i−1)` below the node holding `i`.
pub fn removable_below(t: &StdTableau, i: usize) -> Vec<Node> {
    let x = t.node(i);
    t.restrict_shape(i - 1).removable().into_iter().filter(|y| y.is_below(&x)).collect()
}

/// `γ_t` from the product over addable and removable nodes.
pub fn gamma_product(t: &StdTableau) -> RatFunc {
    let mut acc = Factored::one();
    acc.mul_var(0, t.d().length() as i64 + t.shape().alpha());
    for i in 1..=t.n() {
        let x = t.node(i);
        for y in addable_below(t, i) {
            acc.mul_binomial(x.content(), x.comp, y.content(), y.comp, 1);
        }
        for y in removable_below(t, i) {
            acc.mul_binomial(x.content(), x.comp, y.content(), y.comp, -1);
        }
    }
    acc.to_ratfunc()
}

/// `γ_{t^λ} = [λ]_q! ∏_{s<u} ∏_{(i,j)∈λ^{(s)}} (q^{j−i}Q_s − Q_u)`.
pub fn gamma_row_closed(shape: &Multipartition) -> RatFunc {
    let mut acc = shape.q_factorial();
    for x in shape.nodes() {
        for u in x.comp + 1..=shape.r() {
            acc = &acc * &(&x.residue() - &RatFunc::big_q(u));
        }
    }
    acc
}

/// Indices `i_1, …, i_k` with `t = t^λ s_{i_1} ⋯ s_{i_k}` and every prefix standard,
/// each step moving strictly down in dominance.
pub fn chain_to(t: &StdTableau) -> Vec<usize> {
    let mut cur = t.clone();
    let mut steps = Vec::new();
    while cur.d().length() > 0 {
        let len = cur.d().length();
        let (i, up) = (1..cur.n())
            .find_map(|i| cur.swap(i).filter(|s| s.d().length() < len).map(|s| (i, s)))
            .expect("a non-initial standard tableau has a standard predecessor");
        steps.push(i);
        cur = up;
    }
    steps.reverse();
    steps
}

/// Ratio `γ_t / γ_s` for `t = s·(i, i+1)` with `s ▷ t`.
pub fn gamma_step(s: &StdTableau, t: &StdTableau, i: usize) -> RatFunc {
    let (rs, rt) = (s.node(i).residue(), t.node(i).residue());
    let q = RatFunc::q();
    let a = &(&q * &rs) - &rt;
    let b = &rs - &(&q * &rt);
    let d = &rs - &rt;
    &(&a * &b) / &(&d * &d)
}

/// `γ_t` from `γ_{t^λ}` by one ratio per step along [`chain_to`].
pub fn gamma_recursive(t: &StdTableau) -> RatFunc {
    let mut s = StdTableau::row_tableau(t.shape());
    let mut g = gamma_row_closed(t.shape());
    for i in chain_to(t) {
        let next = s.swap(i).expect("chain steps are standard");
        g = &g * &gamma_step(&s, &next, i);
        s = next;
    }
    debug_assert_eq!(&s, t);
    g
}

/// Beta numbers `β_i^{(s)} = λ_i^{(s)} + L − i` for `i = 1..L`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaSymbol {
    l: usize,
    rows: Vec<Vec<usize>>,
}

impl BetaSymbol {
    pub fn new(shape: &Multipartition, l: usize) -> Result<Self, CombError> {
        if l < shape.length() {
            return Err(CombError::OutOfRange { what: "beta symbol length", value: l, bound: shape.length() });
        }
        let rows = shape.comps().iter().map(|p| (1..=l).map(|i| p.row(i) + l - i).collect()).collect();
        Ok(BetaSymbol { l, rows })
    }

    pub fn len(&self) -> usize {
        self.l
    }

    pub fn is_empty(&self) -> bool {
        self.l == 0
    }

    /// Row `B_s`, strictly decreasing.
    pub fn row(&self, s: usize) -> &[usize] {
        &self.rows[s - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// All entries of all rows.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(s, row)| row.iter().map(move |&b| (s + 1, b)))
    }

    /// The same multipartition with `L + 1` beta numbers.
    pub fn shifted(&self) -> BetaSymbol {
        let rows = self.rows.iter().map(|row| row.iter().map(|b| b + 1).chain([0]).collect()).collect();
        BetaSymbol { l: self.l + 1, rows }
    }
}

pub fn beta_symbol(shape: &Multipartition, l: usize) -> Result<BetaSymbol, CombError> {
    BetaSymbol::new(shape, l)
}

/// `w_λ = d(t_λ)`.
pub fn w_lambda(shape: &Multipartition) -> Perm {
    StdTableau::col_tableau(shape).d()
}

/// `λ̄`: component `s` is the single row `(|λ^{(s)}|)`.
pub fn row_shape(shape: &Multipartition) -> Multipartition {
    let comps = shape
        .comps()
        .iter()
        .map(|p| Partition::new(vec![p.size()]).expect("a single row"))
        .collect();
    Multipartition::new(comps).expect("same number of components")
}

/// `([w_{λ̄,1}, …, w_{λ̄,r−1}], w_{λ/λ̄})` with `w_λ = w_{λ̄,1} ⋯ w_{λ̄,r−1} · w_{λ/λ̄}`,
/// where `w_{λ̄,s} = w_{|λ^{(s)}|, b_s}` fixes everything above `|λ^{(s)}| + b_s`.
pub fn w_lambda_factorization(shape: &Multipartition) -> (Vec<Perm>, Perm) {
    let n = shape.n();
    let factors: Vec<Perm> = (1..shape.r()).map(|s| w_ab(shape.comp(s).size(), shape.b(s)).extend(n)).collect();
    let bar = factors.iter().fold(Perm::identity(n), |acc, w| acc.then(w));
    let rest = bar.inverse().then(&w_lambda(shape));
    (factors, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{multipartitions, std_tableaux};

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_small_examples() {
        let (a, b) = (RatFunc::big_q(1), RatFunc::big_q(2));
        let l = mp("((1),(1))");
        let top = StdTableau::row_tableau(&l);
        assert_eq!(gamma_product(&top), &a - &b);
        let q = RatFunc::q();
        let t = top.swap(1).unwrap();
        let expect = &(&(&(&(&q * &b) - &a) * &(&b - &(&q * &a))) / &(&(&b - &a) * &(&b - &a))) * &(&a - &b);
        assert_eq!(gamma_recursive(&t), expect);
        assert_eq!(gamma_product(&t), expect);
        assert!(addable_below(&top, 2).is_empty());
        let row = StdTableau::row_tableau(&mp("((3))"));
        assert_eq!(gamma_product(&row), crate::coeff::q_fact(3).unwrap());
    }

    #[test]
    fn gamma_product_matches_recursion() {
        for r in 1..=2 {
            for n in 1..=3 {
                for l in multipartitions(n, r) {
                    assert_eq!(gamma_product(&StdTableau::row_tableau(&l)), gamma_row_closed(&l), "{l}");
                    for t in std_tableaux(&l) {
                        assert_eq!(gamma_product(&t), gamma_recursive(&t), "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn beta_symbols() {
        let l = mp("((1),(1))");
        assert_eq!(beta_symbol(&l, 1).unwrap().rows(), &[vec![1], vec![1]]);
        assert_eq!(beta_symbol(&l, 2).unwrap().rows(), &[vec![2, 0], vec![2, 0]]);
        assert_eq!(beta_symbol(&l, 1).unwrap().shifted(), beta_symbol(&l, 2).unwrap());
        assert_eq!(beta_symbol(&mp("((),())"), 2).unwrap().rows(), &[vec![1, 0], vec![1, 0]]);
        assert!(beta_symbol(&mp("((1,1),())"), 1).is_err());
    }

    #[test]
    fn w_lambda_factorization_example() {
        let l = mp("((2,1,1),(2,1),(2))");
        let (f, rest) = w_lambda_factorization(&l);
        assert_eq!(f[0].cycle_string(), "(1,6,2,7,3,8,4,9,5)");
        assert_eq!(f[1].cycle_string(), "(1,3,5,2,4)");
        assert_eq!(rest.cycle_string(), "(4,5)(7,9,8)");
        let w = w_lambda(&l);
        assert_eq!(w.length(), f.iter().map(Perm::length).sum::<usize>() + rest.length());
        assert_eq!(f.iter().fold(Perm::identity(9), |a, x| a.then(x)), w_lambda(&row_shape(&l)));
    }
}
