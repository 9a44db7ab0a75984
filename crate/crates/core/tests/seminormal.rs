use akalg::algebra::Algebra;
use akalg::coeff::{Eval, EvalPoint, Field, RatFunc, Symbolic};
use akalg::combinatorics::{std_tableaux, Multipartition, StdTableau};
use akalg::report::{all_pass, CheckRecord};
use akalg::seminormal::*;

fn sym(r: usize, n: usize) -> Algebra<Symbolic> {
    Algebra::new(Symbolic::new(r).unwrap(), n).unwrap()
}

fn eval(r: usize, n: usize, seed: u64) -> Algebra<Eval> {
    Algebra::new(Eval::new(EvalPoint::from_seed(r, n, seed).unwrap()), n).unwrap()
}

fn shape(s: &str) -> Multipartition {
    s.parse().unwrap()
}

fn assert_all(records: &[CheckRecord]) {
    for r in records {
        assert!(r.passed(), "{r:?}");
    }
    assert!(all_pass(records));
}

fn full_suite<B: akalg::coeff::Backend>(alg: &Algebra<B>, with_prime: bool) {
    let sn = Seminormal::new(alg).unwrap();
    assert_all(&idempotent_checks(&sn).unwrap());
    assert_all(&central_checks(&sn).unwrap());
    assert_all(&spectral_checks(&sn).unwrap());
    assert_all(&gamma_checks(&sn).unwrap());
    assert_all(&matrix_unit_checks(&sn).unwrap());
    assert_all(&orthogonality_checks(&sn).unwrap());
    assert_all(&submodule_checks(&sn).unwrap());
    assert_all(&psi_phi_checks(&sn).unwrap());
    assert_all(&eta_rep_check(alg).unwrap());
    if with_prime {
        assert_all(&dual_checks(&sn).unwrap());
    }
}

#[test]
fn suite_symbolic_r2_n2() {
    full_suite(&sym(2, 2), true);
}

#[test]
fn suite_symbolic_r1_n3() {
    full_suite(&sym(1, 3), true);
}

#[test]
fn suite_symbolic_r3_n2() {
    full_suite(&sym(3, 2), true);
}

#[test]
fn suite_eval_r2_n3() {
    full_suite(&eval(2, 3, 11), false);
}

#[test]
fn idempotent_of_single_node() {
    let alg = sym(2, 1);
    let sn = Seminormal::new(&alg).unwrap();
    let t = StdTableau::row_tableau(&shape("((1),())"));
    // F_t = (L_1 − Q_2)/(Q_1 − Q_2)
    let q2 = alg.scalar(RatFunc::big_q(2));
    let den = (&RatFunc::big_q(1) - &RatFunc::big_q(2)).inv().unwrap();
    let expect = alg.elem_l(1).unwrap().sub(&q2).scale(&den);
    assert_eq!(sn.idempotent(&t).unwrap(), expect);
}

#[test]
fn gamma_algebraic_matches_recursion() {
    let alg = sym(2, 2);
    let sn = Seminormal::new(&alg).unwrap();
    for lam in akalg::combinatorics::multipartitions(2, 2) {
        for t in std_tableaux(&lam) {
            assert_eq!(sn.gamma_algebraic(&t).unwrap(), sn.gamma(&t).unwrap(), "{t}");
        }
    }
}

#[test]
fn specht_rep_dimensions_and_character_of_unit() {
    let alg = sym(2, 3);
    let mut total = 0;
    for lam in akalg::combinatorics::multipartitions(3, 2) {
        let rep = specht_rep(&alg, &lam).unwrap();
        assert_eq!(rep.dim(), std_tableaux(&lam).len());
        let chi = character(&alg, &rep, &alg.unit());
        assert_eq!(chi, RatFunc::from_i64(rep.dim() as i64));
        assert!(rep_relations_check(&alg, &rep).passed());
        total += rep.dim() * rep.dim();
    }
    assert_eq!(total, alg.dim());
}

#[test]
fn one_row_rep_is_the_trivial_character() {
    let alg = sym(3, 2);
    let rep = specht_rep(&alg, &Multipartition::eta(2, 3, 2)).unwrap();
    assert_eq!(rep.t[1].get(0, 0), alg.q());
    assert_eq!(*rep.t[0].get(0, 0), RatFunc::big_q(2));
}

#[test]
fn non_semisimple_point_is_rejected() {
    let int = |v: i64| num_rational::BigRational::from_integer(v.into());
    // Q_1 = Q_2 kills P_H
    let point = EvalPoint::new(int(2), vec![int(1), int(1)]).unwrap();
    let alg = Algebra::new(Eval::new(point), 2).unwrap();
    assert!(!alg.is_semisimple());
    assert!(Seminormal::new(&alg).is_err());
}

#[test]
fn gamma_table_check_passes() {
    for lam in akalg::combinatorics::multipartitions(4, 2) {
        assert!(GammaTable::new(&lam).check().passed(), "{lam}");
    }
}

/// `F_{t^λ} = f_{t^λ t_λ} Ψ*_{t_λ} / γ` holds with `γ = γ_{t_λ}`; normalizing by `γ_{t^λ}` instead fails
/// as soon as the two differ.
#[test]
fn top_idempotent_normalizer_is_gamma_of_column_tableau() {
    let alg = sym(2, 2);
    let sn = Seminormal::new(&alg).unwrap();
    let mut differing = 0;
    for lam in akalg::combinatorics::multipartitions(2, 2) {
        let top = StdTableau::row_tableau(&lam);
        let bottom = StdTableau::col_tableau(&lam);
        let f_top = sn.idempotent(&top).unwrap();
        let psi_star = alg.star(&sn.psi_phi(&bottom).unwrap().0);
        let base = alg.mul(&sn.f_st(&top, &bottom).unwrap(), &psi_star).unwrap();
        let g_bottom = sn.gamma(&bottom).unwrap();
        let g_top = sn.gamma(&top).unwrap();
        assert_eq!(base.scale(&g_bottom.inv().unwrap()), f_top, "{lam}");
        if g_top != g_bottom {
            differing += 1;
            assert_ne!(base.scale(&g_top.inv().unwrap()), f_top, "{lam}");
        }
    }
    assert!(differing > 0);
}
