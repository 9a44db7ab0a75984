use akalg::algebra::Algebra;
use akalg::coeff::{q_int, Eval, EvalPoint, RatFunc, Symbolic};
use akalg::combinatorics::{multipartitions, Multipartition};
use akalg::report::CheckRecord;
use akalg::schur::*;
use akalg::seminormal::Seminormal;

fn sn_sym(r: usize, n: usize) -> Seminormal<Symbolic> {
    Seminormal::new(&Algebra::new(Symbolic::new(r).unwrap(), n).unwrap()).unwrap()
}

fn shape(s: &str) -> Multipartition {
    s.parse().unwrap()
}

fn q() -> RatFunc {
    RatFunc::q()
}

fn big(s: usize) -> RatFunc {
    RatFunc::big_q(s)
}

fn assert_all(records: &[CheckRecord]) {
    for r in records {
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn semisimplicity_polynomial() {
    assert_eq!(p_h(1, 2), &RatFunc::one() + &q());
    assert_eq!(p_h(2, 1), &big(1) - &big(2));
    let expect = [
        &RatFunc::one() + &q(),
        &(&RatFunc::q_pow(-1) * &big(1)) - &big(2),
        &big(1) - &big(2),
        &(&q() * &big(1)) - &big(2),
    ]
    .iter()
    .fold(RatFunc::one(), |a, b| &a * b);
    assert_eq!(p_h(2, 2), expect);
}

#[test]
fn small_trace_values() {
    let sn = sn_sym(1, 1);
    assert!(schur_trace(&sn, &shape("((1))")).unwrap().is_one());
    let sn = sn_sym(2, 1);
    let v = schur_trace(&sn, &shape("((1),())")).unwrap();
    assert_eq!(v, &(&big(2) - &big(1)) / &big(2));
    let sn = sn_sym(1, 2);
    assert_eq!(schur_trace(&sn, &shape("((2))")).unwrap(), q_int(2));
    assert_eq!(schur_trace(&sn, &shape("((1,1))")).unwrap(), &q_int(2) / &q());
}

#[test]
fn small_formula_values() {
    assert_eq!(schur_gamma(&shape("((2))")), q_int(2));
    assert_eq!(schur_hook(&shape("((1,1))")), &RatFunc::q_pow(-1) * &q_int(2));
    assert_eq!(schur_hook(&shape("((1),())")), -&(&(&big(1) - &big(2)) / &big(2)));
    assert_eq!(symbol_exponents(2, 3, 2), (4, 1));
    assert_eq!(generic_degree_ratio(&shape("((2))")).unwrap(), RatFunc::one());
    assert_eq!(generic_degree_ratio(&shape("((1,1))")).unwrap(), q());
}

#[test]
fn four_way_agreement_symbolic() {
    for (r, n) in [(1, 2), (1, 3), (2, 2)] {
        let sn = sn_sym(r, n);
        assert_all(&agreement_checks(&sn, &Method::ALL).unwrap());
    }
}

#[test]
fn combinatorial_agreement_wider() {
    for (r, n) in [(1, 4), (2, 3), (3, 2), (3, 3), (2, 4)] {
        for lam in multipartitions(n, r) {
            let g = schur_gamma(&lam);
            assert_eq!(schur_hook(&lam), g, "hook {lam}");
            assert_eq!(schur_formula(&lam, Method::Symbol).unwrap(), g, "symbol {lam}");
        }
    }
}

#[test]
fn four_way_agreement_eval_points() {
    for seed in [1, 2, 3] {
        let alg = Algebra::new(Eval::new(EvalPoint::from_seed(2, 3, seed).unwrap()), 3).unwrap();
        let sn = Seminormal::new(&alg).unwrap();
        assert_all(&agreement_checks(&sn, &Method::ALL).unwrap());
    }
}

#[test]
fn gamma_closed_form_matches_recursion() {
    for (r, n) in [(1, 4), (2, 2), (2, 3), (3, 2), (3, 3)] {
        assert_all(&gamma_closed_checks(r, n));
    }
}

#[test]
fn shift_invariance() {
    for (r, n) in [(2, 2), (3, 2), (1, 3)] {
        assert_all(&shift_invariance_checks(r, n, 2).unwrap());
    }
}

#[test]
fn symmetries() {
    for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        assert_all(&symmetry_checks(r, n));
    }
}

#[test]
fn eta_closed_form() {
    for r in 1..=3 {
        for n in 1..=3 {
            assert_all(&eta_checks(r, n, &Method::ALL).unwrap());
        }
    }
    let sn = sn_sym(3, 2);
    for t in 1..=3 {
        let lam = Multipartition::eta(2, 3, t);
        assert_eq!(schur_trace(&sn, &lam).unwrap(), schur_eta_closed(2, 3, t));
    }
}

#[test]
fn one_row_swap_moves_between_components() {
    let v = [2, 1, 3];
    assert_eq!(schur_eta_closed(2, 3, 1).permute_params(&v), schur_eta_closed(2, 3, 2));
}

#[test]
fn dimension_sum_and_denominators() {
    for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        assert_all(&schur_sum_checks(r, n).unwrap());
    }
}

#[test]
fn group_algebra_specialization() {
    for r in 1..=2 {
        for n in 1..=3 {
            assert_all(&group_algebra_checks(r, n).unwrap());
        }
    }
}

#[test]
fn z_trace_closed_form() {
    for (r, n) in [(2, 2), (1, 3)] {
        assert_all(&z_trace_checks(&sn_sym(r, n)).unwrap());
    }
}

#[test]
fn generic_degree_ratio_is_homogeneous_in_q_params() {
    let c = num_rational::BigRational::new(3.into(), 7.into());
    for lam in multipartitions(2, 2) {
        let ratio = generic_degree_ratio(&lam).unwrap();
        assert_eq!(ratio.scale_params(&c), ratio, "{lam}");
    }
}

#[test]
fn symbol_needs_enough_rows() {
    assert!(schur_symbol(&shape("((1,1),())"), 1).is_err());
    assert!("nonsense".parse::<Method>().is_err());
    assert_eq!("HOOK".parse::<Method>().unwrap(), Method::Hook);
}
