//! Rational evaluation points and their deterministic generation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::MAX_VARS;
use super::{semisimplicity_poly, CoeffError};

/// Values for `q, Q1, …, Qr`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvalPoint {
    q: BigRational,
    params: Vec<BigRational>,
    /// `P_H` evaluated to zero at this point for the `n` it was checked against.
    pub ph_zero: bool,
}

impl EvalPoint {
    /// A point with `q ≠ 0`; `P_H` is not inspected.
    pub fn new(q: BigRational, params: Vec<BigRational>) -> Result<Self, CoeffError> {
        if q.is_zero() {
            return Err(CoeffError::ZeroQ);
        }
        if params.len() + 1 > MAX_VARS {
            return Err(CoeffError::TooManyParams(params.len()));
        }
        Ok(EvalPoint { q, params, ph_zero: false })
    }

    /// Records whether `P_H` for `n` vanishes here.
    pub fn checked_for(mut self, n: usize) -> Self {
        let ph = semisimplicity_poly(self.params.len(), n);
        self.ph_zero = ph.evaluate(&self).map(|v| v.is_zero()).unwrap_or(true);
        self
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn param(&self, s: usize) -> &BigRational {
        &self.params[s - 1]
    }

    pub fn r(&self) -> usize {
        self.params.len()
    }

    /// Values indexed like monomial exponents; unused slots are zero.
    pub fn values(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); MAX_VARS];
        v[0] = self.q.clone();
        for (i, p) in self.params.iter().enumerate() {
            v[i + 1] = p.clone();
        }
        v
    }

    /// Deterministic semisimple point for `(r, n)` derived from `(seed, attempt)`.
    ///
    /// Values are integers: `2 ≤ |q| ≤ 2^8` and `1 ≤ |Q_s| ≤ 2^12`. Small integers keep
    /// coefficient growth in long products modest. Attempts continue until `P_H` is nonzero.
    pub fn from_seed(r: usize, n: usize, seed: u64) -> Result<Self, CoeffError> {
        if r + 1 > MAX_VARS {
            return Err(CoeffError::TooManyParams(r));
        }
        for attempt in 0u64..1000 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let draw = |rng: &mut ChaCha8Rng, lo: i64, hi: i64| {
                let mag: i64 = rng.gen_range(lo..=hi);
                let v = if rng.gen_bool(0.5) { mag } else { -mag };
                BigRational::from_integer(BigInt::from(v))
            };
            let q = draw(&mut rng, 2, 1 << 8);
            let params: Vec<_> = (0..r).map(|_| draw(&mut rng, 1, 1 << 12)).collect();
            if q.is_zero() || params.iter().any(|p| p.is_zero()) {
                continue;
            }
            let p = EvalPoint::new(q, params)?.checked_for(n);
            if !p.ph_zero {
                return Ok(p);
            }
        }
        Err(CoeffError::NoSemisimplePoint)
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}", self.q)?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, ",Q{}={}", i + 1, p)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_points_are_deterministic_and_semisimple() {
        let a = EvalPoint::from_seed(2, 3, 7).unwrap();
        let b = EvalPoint::from_seed(2, 3, 7).unwrap();
        assert_eq!(a, b);
        assert!(!a.ph_zero);
        let c = EvalPoint::from_seed(2, 3, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn zero_q_rejected() {
        assert!(EvalPoint::new(BigRational::zero(), vec![]).is_err());
    }
}
