use akalg::algebra::Algebra;
use akalg::cellular::*;
use akalg::coeff::{Eval, EvalPoint, RatFunc, Symbolic};
use akalg::combinatorics::{std_tableaux, Multipartition, StdTableau};
use akalg::report::all_pass;

fn sym(r: usize, n: usize) -> Algebra<Symbolic> {
    Algebra::new(Symbolic::new(r).unwrap(), n).unwrap()
}

fn eval(r: usize, n: usize, seed: u64) -> Algebra<Eval> {
    Algebra::new(Eval::new(EvalPoint::from_seed(r, n, seed).unwrap()), n).unwrap()
}

fn shape(s: &str) -> Multipartition {
    s.parse().unwrap()
}

#[test]
fn row_stabilizer_elements() {
    let alg = sym(2, 2);
    let single = shape("((1),(1))");
    assert_eq!(x_elem(&alg, &single).unwrap(), alg.unit());
    assert_eq!(y_elem(&alg, &single).unwrap(), alg.unit());
    let two = shape("((2),())");
    let t1 = alg.gen_t(1).unwrap();
    assert_eq!(x_elem(&alg, &two).unwrap(), alg.unit().add(&t1));
    let x = x_elem(&alg, &two).unwrap();
    assert_eq!(alg.mul(&t1, &x).unwrap(), x.scale(alg.q()));
    assert!(x_elem(&alg, &shape("((2),(1))")).is_err());
}

#[test]
fn jm_products() {
    let alg = sym(2, 2);
    let lam = shape("((1),(1))");
    let l1 = alg.elem_l(1).unwrap();
    let q2 = alg.scalar(RatFunc::big_q(2));
    assert_eq!(u_plus(&alg, &lam).unwrap(), l1.sub(&q2));
    assert_eq!(u_plus(&alg, &shape("((),(2))")).unwrap(), alg.unit());
    let r1 = sym(1, 3);
    assert_eq!(u_plus(&r1, &shape("((2,1))")).unwrap(), r1.unit());
    assert_eq!(u_minus(&r1, &shape("((2,1))")).unwrap(), r1.unit());
    for lam in akalg::combinatorics::multipartitions(2, 2) {
        let x = x_elem(&alg, &lam).unwrap();
        let u = u_plus(&alg, &lam).unwrap();
        assert_eq!(alg.mul(&x, &u).unwrap(), alg.mul(&u, &x).unwrap());
    }
}

#[test]
fn top_tableau_gives_m_lambda() {
    let alg = sym(2, 2);
    for lam in akalg::combinatorics::multipartitions(2, 2) {
        let top = StdTableau::row_tableau(&lam);
        assert_eq!(m_st(&alg, &top, &top).unwrap(), m_lambda(&alg, &lam).unwrap());
        assert_eq!(n_st(&alg, &top, &top).unwrap(), n_lambda(&alg, &lam).unwrap());
    }
    let a = StdTableau::row_tableau(&shape("((2),())"));
    let b = StdTableau::row_tableau(&shape("((1),(1))"));
    assert!(m_st(&alg, &a, &b).is_err());
}

#[test]
fn bases_symbolic_small() {
    for (r, n) in [(2, 2), (3, 2), (1, 3)] {
        let alg = sym(r, n);
        let m = CellularBasis::new(&alg, Kind::Murphy).unwrap();
        let d = CellularBasis::new(&alg, Kind::Dual).unwrap();
        assert_eq!(m.elems.len(), alg.dim());
        assert!(basis_check(&alg, &m).passed());
        assert!(basis_check(&alg, &d).passed());
        assert!(all_pass(&triangularity_check(&alg, &m).unwrap()));
        assert!(all_pass(&triangularity_check(&alg, &d).unwrap()));
        assert!(star_check(&alg, &m).passed());
        assert!(star_check(&alg, &d).passed());
        assert!(prime_check(&alg, &m, &d).unwrap().passed());
        assert!(all_pass(&eta_check(&alg).unwrap()));
    }
}

#[test]
fn bases_eval_n3() {
    for (r, n) in [(2, 3)] {
        let alg = eval(r, n, 5);
        let m = CellularBasis::new(&alg, Kind::Murphy).unwrap();
        let d = CellularBasis::new(&alg, Kind::Dual).unwrap();
        assert!(basis_check(&alg, &m).passed());
        assert!(basis_check(&alg, &d).passed());
        assert!(all_pass(&triangularity_check(&alg, &m).unwrap()));
        assert!(all_pass(&triangularity_check(&alg, &d).unwrap()));
        assert!(star_check(&alg, &m).passed());
        assert!(all_pass(&eta_check(&alg).unwrap()));
    }
}

#[test]
fn eta_square_symbolic_n3() {
    assert!(all_pass(&eta_check(&sym(2, 3)).unwrap()));
}

#[test]
fn tableau_count_matches_basis() {
    let alg = sym(2, 2);
    let total: usize = akalg::combinatorics::multipartitions(2, 2)
        .iter()
        .map(|l| std_tableaux(l).len().pow(2))
        .sum();
    assert_eq!(total, alg.dim());
}
