//! Exact coefficients: rational functions and their evaluation at points.

mod eval;
mod factored;
mod field;
pub mod gcd;
mod poly;
mod ratfunc;

pub use eval::EvalPoint;
pub use factored::Factored;
pub use field::{Backend, Eval, Field, RationalAcc, Symbolic};
pub use poly::{Monomial, Poly, MAX_VARS};
pub use ratfunc::{RatAcc, RatFunc};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("denominator of {value} vanishes at {point}")]
    PoleAtPoint { point: String, value: String },
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("at most {} parameters are supported, got {0}", MAX_VARS - 1)]
    TooManyParams(usize),
    #[error("r must be at least 1")]
    ZeroR,
    #[error("q-factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("no semisimple evaluation point found")]
    NoSemisimplePoint,
    #[error("{0}")]
    BackendMismatch(&'static str),
}

pub(crate) fn check_r(r: usize) -> Result<(), CoeffError> {
    if r == 0 {
        Err(CoeffError::ZeroR)
    } else if r + 1 > MAX_VARS {
        Err(CoeffError::TooManyParams(r))
    } else {
        Ok(())
    }
}

/// The quantum integer `[k]_q`; for `k < 0` it is `−q^k [−k]_q`.
pub fn q_int(k: i64) -> RatFunc {
    if k < 0 {
        return -&(&RatFunc::q_pow(k) * &q_int(-k));
    }
    let terms = (0..k).map(|e| (Monomial::var(0, e as u16), 1.into())).collect();
    RatFunc::from_poly(Poly::from_terms(terms))
}

/// `[k]_q! = [1]_q ⋯ [k]_q`.
pub fn q_fact(k: i64) -> Result<RatFunc, CoeffError> {
    if k < 0 {
        return Err(CoeffError::NegativeFactorial(k));
    }
    Ok((1..=k).fold(RatFunc::one(), |acc, i| &acc * &q_int(i)))
}

/// `P_H = ∏_{i=1}^n [i]_q · ∏_{1≤i<j≤r} ∏_{−n<d<n} (q^d Q_i − Q_j)`.
pub fn semisimplicity_poly(r: usize, n: usize) -> RatFunc {
    let mut acc = (1..=n as i64).fold(RatFunc::one(), |acc, i| &acc * &q_int(i));
    let n = n as i64;
    for i in 1..=r {
        for j in i + 1..=r {
            for d in (1 - n)..n {
                acc = &acc * &(&RatFunc::q_mono(d, i) - &RatFunc::big_q(j));
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        let q = RatFunc::q();
        let one = RatFunc::one();
        assert_eq!(q_int(3), &(&one + &q) + &(&q * &q));
        assert_eq!(q_int(-2).to_string(), "(-q - 1)/(q^2)");
        assert_eq!(q_fact(3).unwrap(), &(&one + &q) * &q_int(3));
        assert!(q_fact(-1).is_err());
        assert_eq!(q_int(0), RatFunc::zero());
    }

    #[test]
    fn semisimplicity_examples() {
        let q = RatFunc::q();
        let one = RatFunc::one();
        assert_eq!(semisimplicity_poly(1, 2), &one + &q);
        let (a, b) = (RatFunc::big_q(1), RatFunc::big_q(2));
        assert_eq!(semisimplicity_poly(2, 1), &a - &b);
        let expect = [
            &one + &q,
            &RatFunc::q_mono(-1, 1) - &b,
            &a - &b,
            &RatFunc::q_mono(1, 1) - &b,
        ]
        .iter()
        .fold(one.clone(), |acc, x| &acc * x);
        assert_eq!(semisimplicity_poly(2, 2), expect);
    }
}
