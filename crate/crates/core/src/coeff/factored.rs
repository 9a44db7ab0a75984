//! Products of binomials `q^a Q_s − q^b Q_t` kept in factored form.
//!
//! Every such binomial is a signed monomial times either `q^d Q_x − Q_y` (`x ≠ y`) or a product
//! of cyclotomic polynomials in `q`. Exponents cancel before anything is expanded, so long
//! telescoping products cost only as much as their reduced value.

use std::collections::BTreeMap;

use super::gcd::cyclotomic;
use super::{Monomial, Poly, RatFunc, MAX_VARS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Factor {
    /// `Φ_m(q)`.
    Cyclotomic(u32),
    /// `q^d Q_x − Q_y`; when `d = 0` we keep `x < y`.
    Binomial { x: u8, y: u8, d: u32 },
}

impl Factor {
    fn poly(self) -> Poly {
        match self {
            Factor::Cyclotomic(m) => cyclotomic(m as usize),
            Factor::Binomial { x, y, d } => {
                let lead = Monomial::var(0, d as u16).mul(&Monomial::var(x as usize, 1));
                Poly::term(lead, 1.into()).sub(&Poly::var(y as usize))
            }
        }
    }
}

/// `±∏ vars^{e} · ∏ factor^{k}` with integer (possibly negative) exponents.
#[derive(Debug, Clone)]
pub struct Factored {
    negative: bool,
    mono: [i64; MAX_VARS],
    factors: BTreeMap<Factor, i64>,
}

impl Default for Factored {
    fn default() -> Self {
        Factored { negative: false, mono: [0; MAX_VARS], factors: BTreeMap::new() }
    }
}

impl Factored {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn negate_pow(&mut self, e: i64) {
        self.negative ^= e.rem_euclid(2) == 1;
    }

    /// Multiply by `var^e` (variable 0 is `q`, variable `s` is `Q_s`).
    pub fn mul_var(&mut self, v: usize, e: i64) {
        self.mono[v] += e;
    }

    fn mul_factor(&mut self, f: Factor, e: i64) {
        let slot = self.factors.entry(f).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&f);
        }
    }

    /// Multiply by `(q^k − 1)^e`, `k ≥ 1`.
    pub fn mul_q_power_minus_one(&mut self, k: u32, e: i64) {
        assert!(k >= 1, "q^0 − 1 vanishes");
        for m in (1..=k).filter(|m| k % m == 0) {
            self.mul_factor(Factor::Cyclotomic(m), e);
        }
    }

    /// Multiply by `[h]_q^e = ((q^h − 1)/(q − 1))^e`, `h ≥ 1`.
    pub fn mul_q_int(&mut self, h: u32, e: i64) {
        self.mul_q_power_minus_one(h, e);
        self.mul_factor(Factor::Cyclotomic(1), -e);
    }

    /// Multiply by `(q^a Q_s − q^b Q_t)^e`; the binomial must be nonzero.
    pub fn mul_binomial(&mut self, a: i64, s: usize, b: i64, t: usize, e: i64) {
        let low = a.min(b);
        self.mul_var(0, low * e);
        let (a, b) = (a - low, b - low);
        if s == t {
            assert!(a != b, "q^a Q_s − q^a Q_s vanishes");
            self.mul_var(s, e);
            // q^a − 1 with a > 0, or 1 − q^b = −(q^b − 1).
            if a > 0 {
                self.mul_q_power_minus_one(a as u32, e);
            } else {
                self.negate_pow(e);
                self.mul_q_power_minus_one(b as u32, e);
            }
            return;
        }
        let (x, y, d, flip) = match (a, b) {
            (0, 0) if s < t => (s, t, 0, false),
            (0, 0) => (t, s, 0, true),
            (a, 0) => (s, t, a, false),
            (_, b) => (t, s, b, true),
        };
        if flip {
            self.negate_pow(e);
        }
        self.mul_factor(Factor::Binomial { x: x as u8, y: y as u8, d: d as u32 }, e);
    }

    pub fn mul(&mut self, o: &Factored) {
        self.negative ^= o.negative;
        for (m, e) in self.mono.iter_mut().zip(o.mono) {
            *m += e;
        }
        for (&f, &e) in &o.factors {
            self.mul_factor(f, e);
        }
    }

    /// Expand into a reduced rational function. The surviving factors are distinct irreducibles
    /// and the monomial parts are split by sign, so numerator and denominator are coprime.
    pub fn to_ratfunc(&self) -> RatFunc {
        let mut num_mono = Monomial::default();
        let mut den_mono = Monomial::default();
        for (v, &e) in self.mono.iter().enumerate() {
            let target = if e >= 0 { &mut num_mono } else { &mut den_mono };
            *target = target.with_exp(v, e.unsigned_abs() as u16);
        }
        let sign = if self.negative { -1 } else { 1 };
        let mut num = Poly::term(num_mono, sign.into());
        let mut den = Poly::term(den_mono, 1.into());
        for (&f, &e) in &self.factors {
            let p = f.poly().pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = num.mul(&p);
            } else {
                den = den.mul(&p);
            }
        }
        RatFunc::from_coprime(num, den)
    }
}
