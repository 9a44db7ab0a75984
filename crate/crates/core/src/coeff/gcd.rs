//! Multivariate polynomial GCD over `Z`.
//!
//! Factors of the shapes `Φ_m(q)` and `Q_t ∓ q^d Q_s` are matched by exact
//! divisibility tests; whatever remains goes through recursive subresultant
//! remainder sequences.
//!
//! Keeps rational-function numerators and denominators coprime, which stops
//! intermediate expression swell in long products of idempotent factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, Poly, MAX_VARS};

/// Greatest common divisor with positive leading coefficient.
///
/// `gcd(0, 0) = 0`; the integer and monomial contents are included.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return positive(b.clone());
    }
    if b.is_zero() {
        return positive(a.clone());
    }
    if a == b {
        return positive(a.clone());
    }
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let m = ma.gcd(&mb);
    let (ca, cb) = (a.int_content(), b.int_content());
    let c = ca.gcd(&cb);
    if a.is_monomial() || b.is_monomial() {
        return Poly::term(m, c);
    }
    let pa = a.div_monomial(&ma).div_int(&ca);
    let pb = b.div_monomial(&mb).div_int(&cb);
    let g = gcd_primitive(&pa, &pb);
    positive(g.mul_term(&m, &c))
}

fn positive(p: Poly) -> Poly {
    if p.leading().is_some_and(|(_, c)| c.is_negative()) {
        p.neg()
    } else {
        p
    }
}

fn is_unit(p: &Poly) -> bool {
    p.is_constant() && p.leading().is_some_and(|(_, c)| c.abs().is_one())
}

/// Integer-primitive part with positive leading coefficient.
fn primitive(p: Poly) -> Poly {
    let c = p.int_content();
    if c.is_zero() || c.is_one() {
        positive(p)
    } else {
        positive(p.div_int(&c))
    }
}

/// GCD of inputs free of monomial and integer content.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b || *a == b.neg() {
        return positive(a.clone());
    }
    let (va, vb) = (a.var_mask(), b.var_mask());
    if va & vb == 0 {
        return Poly::one();
    }
    // Known irreducible factors are matched directly; only the unsplit rests need a PRS.
    let (fa, ra) = split_known(a);
    let (fb, rb) = split_known(b);
    if !fa.is_empty() || !fb.is_empty() {
        let mut g = Poly::one();
        for (f, e) in &fa {
            if let Some((_, e2)) = fb.iter().find(|(h, _)| h == f) {
                g = g.mul(&f.pow(*e.min(e2)));
            }
        }
        // A factor found on one side only cannot divide the other side's rest.
        return positive(g.mul(&gcd_primitive(&ra, &rb)));
    }
    // A variable present in only one argument cannot occur in the gcd.
    if let Some(v) = first_bit(va & !vb) {
        return gcd(&content_in(a, v), b);
    }
    if let Some(v) = first_bit(vb & !va) {
        return gcd(a, &content_in(b, v));
    }
    let x = (0..MAX_VARS)
        .filter(|v| va & (1 << v) != 0)
        .min_by_key(|&v| (a.degree_in(v).min(b.degree_in(v)), a.degree_in(v).max(b.degree_in(v))))
        .expect("shared variable");
    let (ca, cb) = (content_in(a, x), content_in(b, x));
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let gc = gcd(&ca, &cb);
    let gp = subresultant(pa, pb, x);
    positive(gc.mul(&gp))
}

/// `Φ_m(q)`, memoized.
pub fn cyclotomic(m: usize) -> Poly {
    thread_local! {
        static CACHE: std::cell::RefCell<Vec<Poly>> = const { std::cell::RefCell::new(Vec::new()) };
    }
    CACHE.with(|c| {
        let mut c = c.borrow_mut();
        while c.len() < m {
            let k = c.len() + 1;
            // q^k − 1 = ∏_{d | k} Φ_d
            let mut p = Poly::term(x_pow(0, k as u16), BigInt::one()).sub(&Poly::one());
            for d in (1..k).filter(|d| k % d == 0) {
                p = p.div_exact(&c[d - 1]).expect("cyclotomic factor divides");
            }
            c.push(p);
        }
        c[m - 1].clone()
    })
}

/// A known irreducible factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Known {
    /// `Φ_m(q)`.
    Cyclotomic(usize),
    /// `Q_t − sign·q^d Q_s`, i.e. `Q_t = sign·q^d Q_s` on its zero set.
    Binomial { t: usize, s: usize, d: u16, sign: i8 },
}

impl Known {
    fn poly(&self) -> Poly {
        match *self {
            Known::Cyclotomic(m) => cyclotomic(m),
            Known::Binomial { t, s, d, sign } => {
                let other = Poly::term(Monomial::var(s, 1).mul(&x_pow(0, d)), BigInt::from(sign));
                Poly::var(t).sub(&other)
            }
        }
    }

    fn divides(&self, p: &Poly) -> bool {
        match *self {
            Known::Cyclotomic(m) => vanishes_mod_cyclotomic(p, m),
            Known::Binomial { t, s, d, sign } => vanishes_on_binomial(p, t, s, d, sign),
        }
    }
}

/// `p` restricted to `Q_t = sign·q^d Q_s` is zero.
fn vanishes_on_binomial(p: &Poly, t: usize, s: usize, d: u16, sign: i8) -> bool {
    let mut acc: std::collections::HashMap<Monomial, BigInt> = std::collections::HashMap::new();
    for (m, c) in p.terms() {
        let e = m.exp(t);
        let mut mm = m.with_exp(t, 0).with_exp(s, m.exp(s) + e);
        mm = mm.with_exp(0, mm.exp(0) + d * e);
        let c = if sign < 0 && e % 2 == 1 { -c } else { c.clone() };
        *acc.entry(mm).or_default() += c;
    }
    acc.values().all(Zero::is_zero)
}

/// Every `q`-coefficient polynomial of `p` is divisible by `Φ_m`.
fn vanishes_mod_cyclotomic(p: &Poly, m: usize) -> bool {
    let phi: Vec<BigInt> = {
        let f = cyclotomic(m);
        let deg = f.degree_in(0) as usize;
        let mut v = vec![BigInt::zero(); deg + 1];
        for (mono, c) in f.terms() {
            v[mono.exp(0) as usize] = c.clone();
        }
        v
    };
    let deg = phi.len() - 1;
    let mut groups: std::collections::HashMap<Monomial, Vec<BigInt>> = std::collections::HashMap::new();
    for (mono, c) in p.terms() {
        let e = mono.exp(0) as usize;
        let v = groups.entry(mono.with_exp(0, 0)).or_default();
        if v.len() <= e {
            v.resize(e + 1, BigInt::zero());
        }
        v[e] += c;
    }
    groups.into_values().all(|mut v| {
        // Φ_m is monic: reduce from the top.
        for k in (deg..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let lead = v[k].clone();
            for (j, a) in phi.iter().enumerate() {
                v[k - deg + j] -= &lead * a;
            }
        }
        v.iter().all(Zero::is_zero)
    })
}

/// Degree of `Φ_m` (Euler's totient).
fn totient(m: usize) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

/// Known irreducibles that could divide `p`.
fn candidates(p: &Poly) -> Vec<Known> {
    let dq = p.degree_in(0) as usize;
    let mask = p.var_mask();
    let mut out: Vec<Known> = Vec::new();
    if dq > 0 {
        // φ(m) ≥ √(m/2), so φ(m) ≤ dq forces m ≤ 2 dq².
        out.extend((1..=2 * dq * dq).filter(|&m| totient(m) <= dq).map(Known::Cyclotomic));
    }
    let params: Vec<usize> = (1..MAX_VARS).filter(|v| mask & (1 << v) != 0).collect();
    for (i, &s) in params.iter().enumerate() {
        for &t in &params[i + 1..] {
            for d in 0..=dq as u16 {
                for sign in [1, -1] {
                    out.push(Known::Binomial { t, s, d, sign });
                    if d > 0 {
                        out.push(Known::Binomial { t: s, s: t, d, sign });
                    }
                }
            }
        }
    }
    out
}

/// `p = ± ∏ f_i^{e_i} · rest` with `f_i` known irreducibles and `rest` free of them.
fn split_known(p: &Poly) -> (Vec<(Poly, u32)>, Poly) {
    let mut rest = p.clone();
    let mut found = Vec::new();
    for k in candidates(p) {
        let mut e = 0;
        let mut f = None;
        while !rest.is_constant() && k.divides(&rest) {
            let fp = f.get_or_insert_with(|| k.poly());
            rest = rest.div_exact(fp).expect("divisibility was tested");
            e += 1;
        }
        if let Some(f) = f {
            found.push((f, e));
        }
    }
    (found, rest)
}

fn first_bit(mask: u32) -> Option<usize> {
    if mask == 0 {
        None
    } else {
        Some(mask.trailing_zeros() as usize)
    }
}

/// GCD of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero();
    for (_, c) in p.coeffs_in(v) {
        g = gcd(&g, &c);
        if is_unit(&g) {
            return Poly::one();
        }
    }
    g
}

fn x_pow(x: usize, e: u16) -> Monomial {
    Monomial::var(x, e)
}

/// Pseudo-remainder of `a` by `b` in `R[x]`.
fn prem(a: &Poly, b: &Poly, x: usize) -> Poly {
    let db = b.degree_in(x);
    let lb = b.lead_in(x);
    let mut r = a.clone();
    let mut e = a.degree_in(x) as i32 - db as i32 + 1;
    while !r.is_zero() && r.degree_in(x) >= db {
        let dr = r.degree_in(x);
        let lr = r.lead_in(x).mul_term(&x_pow(x, dr - db), &BigInt::one());
        r = lb.mul(&r).sub(&lr.mul(b));
        e -= 1;
    }
    if e > 0 {
        r = lb.pow(e as u32).mul(&r);
    }
    r
}

/// Primitive gcd of two polynomials primitive in `x`, via the subresultant PRS.
fn subresultant(a: Poly, b: Poly, x: usize) -> Poly {
    let (mut a, mut b) = if a.degree_in(x) >= b.degree_in(x) { (a, b) } else { (b, a) };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = (a.degree_in(x) - b.degree_in(x)) as u32;
        let r = prem(&a, &b, x);
        if r.is_zero() {
            break;
        }
        if r.degree_in(x) == 0 {
            return Poly::one();
        }
        let div = g.mul(&h.pow(delta));
        a = b;
        b = r.div_exact(&div).expect("subresultant division is exact");
        g = a.lead_in(x);
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant h update is exact"),
        };
    }
    let c = content_in(&b, x);
    primitive(b.div_exact(&c).expect("content divides"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> Poly {
        Poly::var(i)
    }

    fn c(i: i64) -> Poly {
        Poly::constant(BigInt::from(i))
    }

    #[test]
    fn univariate() {
        let a = v(0).sub(&c(1)).mul(&v(0).add(&c(2)));
        let b = v(0).sub(&c(1)).mul(&v(0).add(&c(3)));
        assert_eq!(gcd(&a, &b), v(0).sub(&c(1)));
    }

    #[test]
    fn multivariate_common_factor() {
        // (q*Q1 - Q2) * (Q1 + 1) and (q*Q1 - Q2) * (q - Q2)
        let f = v(0).mul(&v(1)).sub(&v(2));
        let a = f.mul(&v(1).add(&c(1)));
        let b = f.mul(&v(0).sub(&v(2)));
        assert_eq!(gcd(&a, &b), f);
        let a2 = a.scale(&BigInt::from(6));
        let b2 = b.scale(&BigInt::from(-4)).mul(&v(0));
        assert_eq!(gcd(&a2, &b2), f.scale(&BigInt::from(2)));
    }

    #[test]
    fn coprime() {
        let a = v(0).mul(&v(1)).sub(&v(2));
        let b = v(0).mul(&v(2)).sub(&v(1));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn split_over_known_factors() {
        let f = v(0).mul(&v(1)).sub(&v(2));
        let phi3 = v(0).mul(&v(0)).add(&v(0)).add(&c(1));
        let odd = v(1).mul(&v(1)).add(&v(2).mul(&v(0)));
        let p = f.pow(2).mul(&phi3).mul(&odd);
        let (found, rest) = split_known(&p);
        assert_eq!(rest, odd);
        assert!(found.contains(&(f.neg(), 2)) && found.contains(&(phi3, 1)));
        let other = odd.mul(&v(0).sub(&c(1)));
        assert_eq!(gcd(&p, &other), odd);
    }

    #[test]
    fn repeated_factor() {
        let f = v(1).sub(&v(2));
        let a = f.pow(3).mul(&v(0).add(&c(1)));
        let b = f.pow(2).mul(&v(0).sub(&c(1)));
        assert_eq!(gcd(&a, &b), f.pow(2));
    }
}
