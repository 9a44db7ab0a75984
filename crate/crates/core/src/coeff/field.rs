//! The coefficient interface shared by the symbolic and evaluation backends.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::eval::EvalPoint;
use super::ratfunc::{RatAcc, RatFunc};
use super::CoeffError;

/// A field of coefficients with a sum-of-products accumulator.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Acc: Default + Send;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, CoeffError>;

    fn div(&self, o: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&o.inv()?))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `acc += a·b`.
    fn acc_add(acc: &mut Self::Acc, a: &Self, b: &Self);
    fn acc_finish(acc: Self::Acc) -> Self;
}

impl Field for RatFunc {
    type Acc = RatAcc;

    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(v: i64) -> Self {
        RatFunc::from_int(v)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, CoeffError> {
        RatFunc::inv(self)
    }
    fn acc_add(acc: &mut RatAcc, a: &Self, b: &Self) {
        acc.add_product(a, b)
    }
    fn acc_finish(acc: RatAcc) -> Self {
        acc.finish()
    }
}

/// Accumulator for rationals grouping equal denominators.
#[derive(Default)]
pub struct RationalAcc {
    groups: Vec<(BigInt, BigInt)>,
}

impl Field for BigRational {
    type Acc = RationalAcc;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, CoeffError> {
        if Zero::is_zero(self) {
            Err(CoeffError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn acc_add(acc: &mut RationalAcc, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        let den = a.denom() * b.denom();
        let num = a.numer() * b.numer();
        match acc.groups.iter_mut().find(|(d, _)| *d == den) {
            Some((_, n)) => *n += num,
            None => acc.groups.push((den, num)),
        }
    }
    fn acc_finish(acc: RationalAcc) -> Self {
        acc.groups
            .into_iter()
            .map(|(d, n)| BigRational::new(n, d))
            .fold(<BigRational as Zero>::zero(), |a, x| a + x)
    }
}

/// Which coefficient field an algebra computes over.
pub trait Backend: Clone + Send + Sync + fmt::Debug + 'static {
    type C: Field;

    /// Number of cyclotomic parameters.
    fn r(&self) -> usize;

    /// Maps a symbolic value into this backend.
    fn lift(&self, f: &RatFunc) -> Result<Self::C, CoeffError>;

    fn q(&self) -> Self::C {
        self.lift(&RatFunc::q()).expect("q is a polynomial")
    }

    fn big_q(&self, s: usize) -> Self::C {
        self.lift(&RatFunc::big_q(s)).expect("Q_s is a polynomial")
    }

    /// Applies the `′` involution to a coefficient (symbolic only).
    fn prime_coeff(&self, c: &Self::C) -> Result<Self::C, CoeffError>;

    /// Short label, `symbolic` or the evaluation point.
    fn label(&self) -> String;
}

/// Exact rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbolic {
    r: usize,
}

impl Symbolic {
    pub fn new(r: usize) -> Result<Self, CoeffError> {
        crate::coeff::check_r(r)?;
        Ok(Symbolic { r })
    }
}

impl Backend for Symbolic {
    type C = RatFunc;

    fn r(&self) -> usize {
        self.r
    }
    fn lift(&self, f: &RatFunc) -> Result<RatFunc, CoeffError> {
        Ok(f.clone())
    }
    fn prime_coeff(&self, c: &RatFunc) -> Result<RatFunc, CoeffError> {
        Ok(c.prime_involution(self.r))
    }
    fn label(&self) -> String {
        "symbolic".to_string()
    }
}

/// Exact rationals at a fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eval {
    point: EvalPoint,
}

impl Eval {
    pub fn new(point: EvalPoint) -> Self {
        Eval { point }
    }

    pub fn point(&self) -> &EvalPoint {
        &self.point
    }
}

impl Backend for Eval {
    type C = BigRational;

    fn r(&self) -> usize {
        self.point.r()
    }
    fn lift(&self, f: &RatFunc) -> Result<BigRational, CoeffError> {
        f.evaluate(&self.point)
    }
    fn prime_coeff(&self, _: &BigRational) -> Result<BigRational, CoeffError> {
        Err(CoeffError::BackendMismatch("the prime involution needs the symbolic backend"))
    }
    fn label(&self) -> String {
        format!("eval[{}]", self.point)
    }
}
