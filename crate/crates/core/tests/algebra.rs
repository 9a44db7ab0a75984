use akalg::algebra::{Algebra, Elem, Gen};
use akalg::coeff::{Backend, Eval, EvalPoint, Field, RatFunc, Symbolic};
use akalg::combinatorics::Perm;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sym(r: usize, n: usize) -> Algebra<Symbolic> {
    Algebra::new(Symbolic::new(r).unwrap(), n).unwrap()
}

fn eval(r: usize, n: usize, seed: u64) -> Algebra<Eval> {
    Algebra::new(Eval::new(EvalPoint::from_seed(r, n, seed).unwrap()), n).unwrap()
}

fn lin<B: Backend>(alg: &Algebra<B>, a: &Elem<B::C>, c: &RatFunc) -> Elem<B::C> {
    a.scale(&alg.lift(c).unwrap())
}

fn check_relations<B: Backend>(alg: &Algebra<B>) {
    let n = alg.n();
    let t: Vec<_> = (0..n).map(|i| alg.gen_t(i).unwrap()).collect();
    let m = |a: &Elem<B::C>, b: &Elem<B::C>| alg.mul(a, b).unwrap();
    // cyclotomic relation
    let mut cyc = alg.unit();
    for s in 1..=alg.r() {
        cyc = m(&cyc, &t[0].sub(&lin(alg, &alg.unit(), &RatFunc::big_q(s))));
    }
    assert!(cyc.is_zero());
    // quadratic relation (T_i + 1)(T_i − q) = 0
    for ti in &t[1..] {
        let a = ti.add(&alg.unit());
        let b = ti.sub(&alg.unit().scale(alg.q()));
        assert!(m(&a, &b).is_zero());
    }
    if n >= 2 {
        let l = m(&m(&t[0], &t[1]), &m(&t[0], &t[1]));
        let rr = m(&m(&t[1], &t[0]), &m(&t[1], &t[0]));
        assert_eq!(l, rr);
    }
    for i in 1..n {
        for j in 1..n {
            if i + 1 == j {
                assert_eq!(m(&m(&t[i], &t[j]), &t[i]), m(&m(&t[j], &t[i]), &t[j]));
            } else if i.abs_diff(j) > 1 {
                assert_eq!(m(&t[i], &t[j]), m(&t[j], &t[i]));
            }
        }
        if i >= 2 {
            assert_eq!(m(&t[0], &t[i]), m(&t[i], &t[0]));
        }
    }
}

fn check_jucys_murphy<B: Backend>(alg: &Algebra<B>) {
    let n = alg.n();
    let t: Vec<_> = (0..n).map(|i| alg.gen_t(i).unwrap()).collect();
    let l: Vec<_> = (1..=n).map(|k| alg.elem_l(k).unwrap()).collect();
    let m = |a: &Elem<B::C>, b: &Elem<B::C>| alg.mul(a, b).unwrap();
    for k in 1..=n {
        // q^{1−k} T_{k−1} ⋯ T_1 T_0 T_1 ⋯ T_{k−1}
        let mut w = t[0].clone();
        for i in 1..k {
            w = m(&m(&t[i], &w), &t[i]);
        }
        assert_eq!(lin(alg, &w, &RatFunc::q_pow(1 - k as i64)), l[k - 1], "L_{k}");
    }
    for a in 0..n {
        for b in 0..n {
            assert_eq!(m(&l[a], &l[b]), m(&l[b], &l[a]));
        }
    }
    for i in 1..n {
        for k in 1..=n {
            if k != i && k != i + 1 {
                assert_eq!(m(&t[i], &l[k - 1]), m(&l[k - 1], &t[i]));
            }
        }
        let prod = m(&l[i - 1], &l[i]);
        let sum = l[i - 1].add(&l[i]);
        assert_eq!(m(&t[i], &prod), m(&prod, &t[i]));
        assert_eq!(m(&t[i], &sum), m(&sum, &t[i]));
        // T_i commutes with (L_1 − Q_1)⋯(L_m − Q_1) for i ≠ m
        for mm in 1..=n {
            if mm == i {
                continue;
            }
            let mut p = alg.unit();
            for k in 1..=mm {
                p = m(&p, &l[k - 1].sub(&lin(alg, &alg.unit(), &RatFunc::big_q(1))));
            }
            assert_eq!(m(&t[i], &p), m(&p, &t[i]));
        }
    }
}

#[test]
fn defining_relations_symbolic() {
    for (r, n) in [(1, 3), (2, 2), (3, 2), (2, 3)] {
        let alg = sym(r, n);
        check_relations(&alg);
        check_jucys_murphy(&alg);
    }
}

#[test]
fn defining_relations_eval() {
    for (r, n) in [(1, 3), (2, 3), (3, 3)] {
        let alg = eval(r, n, 11);
        check_relations(&alg);
        check_jucys_murphy(&alg);
    }
}

#[test]
fn generator_examples() {
    let alg = sym(2, 2);
    let t1 = alg.gen_t(1).unwrap();
    let q = RatFunc::q();
    let expect = t1.scale(&(&q - &RatFunc::one())).add(&alg.scalar(q.clone()));
    assert_eq!(alg.mul(&t1, &t1).unwrap(), expect);
    assert_eq!(alg.gen_t(0).unwrap(), alg.elem_l(1).unwrap());
    let l1 = alg.elem_l(1).unwrap();
    assert_eq!(l1.len(), 1);
    let b = alg.basis_index(l1.terms()[0].0);
    assert_eq!(b.c, vec![1, 0]);
    assert!(b.w.is_identity());
    assert!(alg.gen_t(2).is_err());
    assert!(alg.elem_l(3).is_err());
    assert!(alg.elem_l(0).is_err());
}

#[test]
fn dimension_examples() {
    assert_eq!(sym(2, 2).dim_check().unwrap(), 8);
    assert_eq!(sym(1, 3).dim_check().unwrap(), 6);
    assert_eq!(sym(3, 2).dim_check().unwrap(), 18);
    assert_eq!(sym(2, 0).dim_check().unwrap(), 1);
}

#[test]
fn trace_on_hecke_words() {
    let alg = sym(2, 3);
    for x in Perm::all(3) {
        for y in Perm::all(3) {
            let v = alg.tau(&alg.mul(&alg.t_w(&x), &alg.t_w(&y)).unwrap());
            let expect = if x.then(&y).is_identity() { RatFunc::q_pow(x.length() as i64) } else { RatFunc::zero() };
            assert_eq!(v, expect, "{x:?} {y:?}");
        }
    }
    assert_eq!(alg.tau(&alg.unit()), RatFunc::one());
    for i in 0..3 {
        assert!(alg.tau(&alg.gen_t(i).unwrap()).is_zero());
    }
}

#[test]
fn star_and_prime_on_generators() {
    let alg = sym(2, 3);
    assert_eq!(alg.star(&alg.unit()), alg.unit());
    for i in 0..3 {
        let t = alg.gen_t(i).unwrap();
        assert_eq!(alg.star(&t), t);
    }
    for k in 1..=3 {
        let l = alg.elem_l(k).unwrap();
        assert_eq!(alg.star(&l), l);
        assert_eq!(alg.prime(&l).unwrap(), l);
    }
    let t0 = alg.gen_t(0).unwrap();
    assert_eq!(alg.prime(&t0).unwrap(), t0);
    let t1 = alg.gen_t(1).unwrap();
    assert_eq!(alg.prime(&t1).unwrap(), t1.scale(&-RatFunc::q_pow(-1)));
    let e = eval(2, 2, 3);
    assert!(e.prime(&e.unit()).is_err());
}

#[test]
fn mismatched_algebras_are_rejected() {
    let a = sym(2, 2);
    let b = sym(2, 2);
    assert!(a.mul(&a.unit(), &b.unit()).is_err());
}

#[test]
fn word_products() {
    let alg = sym(2, 2);
    let w = alg.word(&[Gen::T(1), Gen::T(0), Gen::T(1)]);
    let t = |i| alg.gen_t(i).unwrap();
    assert_eq!(w, alg.product(&[&t(1), &t(0), &t(1)]).unwrap());
}

fn algebra_laws<B: Backend>(alg: &Algebra<B>, seed: u64, symbolic: bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = alg.random_elem(&mut rng, 4);
    let b = alg.random_elem(&mut rng, 4);
    let c = alg.random_elem(&mut rng, 4);
    let m = |x: &Elem<B::C>, y: &Elem<B::C>| alg.mul(x, y).unwrap();
    assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
    assert_eq!(m(&a, &alg.unit()), a);
    assert_eq!(m(&alg.unit(), &a), a);
    assert_eq!(alg.tau(&m(&a, &b)), alg.tau(&m(&b, &a)));
    assert_eq!(alg.star(&m(&a, &b)), m(&alg.star(&b), &alg.star(&a)));
    assert_eq!(alg.star(&alg.star(&a)), a);
    if symbolic {
        let p = |x: &Elem<B::C>| alg.prime(x).unwrap();
        assert_eq!(p(&m(&a, &b)), m(&p(&a), &p(&b)));
        assert_eq!(p(&p(&a)), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn symbolic_laws(seed in any::<u64>(), shape in 0usize..3) {
        let (r, n) = [(2, 2), (3, 2), (1, 3)][shape];
        algebra_laws(&sym(r, n), seed, true);
    }

    #[test]
    fn eval_laws(seed in any::<u64>(), shape in 0usize..3) {
        let (r, n) = [(2, 3), (3, 2), (1, 4)][shape];
        algebra_laws(&eval(r, n, seed % 17), seed, false);
    }
}

#[test]
fn scalar_field_when_n_is_zero() {
    let alg = sym(2, 0);
    assert_eq!(alg.dim(), 1);
    let x = alg.scalar(RatFunc::q());
    assert_eq!(alg.mul(&x, &x).unwrap(), alg.scalar(&RatFunc::q() * &RatFunc::q()));
    assert!(alg.gen_t(0).is_err());
    assert!(<RatFunc as Field>::is_one(&alg.tau(&alg.unit())));
}
