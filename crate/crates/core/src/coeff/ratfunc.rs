//! Rational functions in `q, Q1, …, Qr` over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::eval::EvalPoint;
use super::gcd::gcd;
use super::poly::{Monomial, Poly, MAX_VARS};
use super::CoeffError;

/// `num / den` with `gcd(num, den) = 1` and positive leading denominator coefficient.
///
/// Numerator and denominator have integer coefficients; rational scalars
/// such as `1/2` are stored as `1` over `2`.
#[derive(Clone, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(i: i64) -> Self {
        RatFunc { num: Poly::constant(BigInt::from(i)), den: Poly::one() }
    }

    pub fn from_bigint(i: BigInt) -> Self {
        RatFunc { num: Poly::constant(i), den: Poly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::reduced(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// `num / den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// `num / den` for a pair already known to be coprime; only the sign is normalized.
    pub(crate) fn from_coprime(mut num: Poly, mut den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::from_poly(Poly::var(0))
    }

    /// The parameter `Q_s`, `s ≥ 1`.
    pub fn big_q(s: usize) -> Self {
        assert!((1..MAX_VARS).contains(&s), "parameter index {s} out of range");
        Self::from_poly(Poly::var(s))
    }

    /// `q^d` for any integer `d`.
    pub fn q_pow(d: i64) -> Self {
        let m = Monomial::var(0, d.unsigned_abs() as u16);
        let p = Poly::term(m, BigInt::one());
        if d >= 0 {
            Self::from_poly(p)
        } else {
            RatFunc { num: Poly::one(), den: p }
        }
    }

    /// The monomial `q^d Q_s`.
    pub fn q_mono(d: i64, s: usize) -> Self {
        &Self::q_pow(d) * &Self::big_q(s)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc { num, den })
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<Self, CoeffError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(RatFunc { num: base.num.pow(e), den: base.den.pow(e) })
    }

    /// Cross-multiplication equality.
    pub fn equals(&self, o: &RatFunc) -> bool {
        if self.num == o.num && self.den == o.den {
            return true;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Exact value at `p`.
    pub fn evaluate(&self, p: &EvalPoint) -> Result<BigRational, CoeffError> {
        let vals = p.values();
        let d = self.den.evaluate(&vals);
        if d.is_zero() {
            return Err(CoeffError::PoleAtPoint { point: p.to_string(), value: self.to_string() });
        }
        Ok(self.num.evaluate(&vals) / d)
    }

    /// Substitutes `q ↦ 1/q` and `Q_s ↦ Q_{r−s+1}`.
    pub fn prime_involution(&self, r: usize) -> RatFunc {
        let flip = |p: &Poly| {
            let dq = p.degree_in(0);
            p.map_monomials(|m| {
                let mut e = [0u16; MAX_VARS];
                e[0] = dq - m.exp(0);
                for s in 1..=r {
                    e[r - s + 1] = m.exp(s);
                }
                Monomial(e)
            })
        };
        let (a, b) = (self.num.degree_in(0), self.den.degree_in(0));
        let num = flip(&self.num).mul_term(&Monomial::var(0, b), &BigInt::one());
        let den = flip(&self.den).mul_term(&Monomial::var(0, a), &BigInt::one());
        Self::reduced(num, den)
    }

    /// Applies a permutation of the `Q` parameters: `Q_s ↦ Q_{perm[s-1]}`.
    pub fn permute_params(&self, perm: &[usize]) -> RatFunc {
        let f = |p: &Poly| {
            p.map_monomials(|m| {
                let mut e = [0u16; MAX_VARS];
                e[0] = m.exp(0);
                for (i, &t) in perm.iter().enumerate() {
                    e[t] = m.exp(i + 1);
                }
                Monomial(e)
            })
        };
        Self::reduced(f(&self.num), f(&self.den))
    }

    /// Substitutes `Q_s ↦ c·Q_s` for every `s`.
    pub fn scale_params(&self, c: &BigRational) -> RatFunc {
        let f = |p: &Poly| {
            let mut acc = RatFunc::zero();
            for (m, coeff) in p.terms() {
                let deg: u32 = (1..MAX_VARS).map(|v| m.exp(v) as u32).sum();
                let t = RatFunc::from_rational(&num_traits::pow(c.clone(), deg as usize))
                    * RatFunc::from_poly(Poly::term(*m, coeff.clone()));
                acc = &acc + &t;
            }
            acc
        };
        &f(&self.num) * &f(&self.den).inv().expect("nonzero denominator")
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::reduced(self.num.add(&o.num), self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&o.num.mul(&d1));
        RatFunc::reduced(num, d1.mul(&o.den))
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let (mut num, mut den) = (n1.mul(&n2), d1.mul(&d2));
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero rational function")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc { (&self).$m(&o) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

/// Sums many fractions, grouping equal denominators so that a shared
/// denominator costs one reduction instead of one per term.
#[derive(Default)]
pub struct RatAcc {
    groups: Vec<(Poly, Poly)>,
}

impl RatAcc {
    /// Adds `a·b` without reducing.
    pub fn add_product(&mut self, a: &RatFunc, b: &RatFunc) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let den = if b.den.is_one() { a.den.clone() } else { a.den.mul(&b.den) };
        let num = a.num.mul(&b.num);
        match self.groups.iter_mut().find(|(d, _)| *d == den) {
            Some((_, n)) => *n = n.add(&num),
            None => self.groups.push((den, num)),
        }
    }

    pub fn finish(self) -> RatFunc {
        self.groups
            .into_iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(d, n)| RatFunc::reduced(n, d))
            .fold(RatFunc::zero(), |acc, x| &acc + &x)
    }
}
