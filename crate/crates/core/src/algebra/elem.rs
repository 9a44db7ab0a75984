//! Sparse algebra elements.

use std::collections::BTreeMap;

use crate::coeff::Field;

/// A linear combination of basis monomials; terms sorted by index, no zero coefficients.
///
/// `alg` identifies the algebra the indices refer to.
#[derive(Clone, Debug, PartialEq)]
pub struct Elem<C> {
    pub(crate) alg: u64,
    pub(crate) terms: Vec<(u32, C)>,
}

impl<C: Field> Elem<C> {
    pub(crate) fn zero_in(alg: u64) -> Self {
        Elem { alg, terms: Vec::new() }
    }

    pub(crate) fn from_sorted(alg: u64, terms: Vec<(u32, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        Elem { alg, terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(u32, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of basis number `idx`.
    pub fn coeff(&self, idx: u32) -> C {
        match self.terms.binary_search_by_key(&idx, |t| t.0) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => C::zero(),
        }
    }

    fn merge(&self, o: &Self, f: impl Fn(Option<&C>, Option<&C>) -> C) -> Self {
        assert_eq!(self.alg, o.alg, "elements belong to different algebras");
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), o.terms.iter().peekable());
        loop {
            let (idx, c) = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(x), None) => (x.0, f(Some(&a.next().unwrap().1), None)),
                (None, Some(y)) => (y.0, f(None, Some(&b.next().unwrap().1))),
                (Some(x), Some(y)) => {
                    if x.0 < y.0 {
                        (x.0, f(Some(&a.next().unwrap().1), None))
                    } else if y.0 < x.0 {
                        (y.0, f(None, Some(&b.next().unwrap().1)))
                    } else {
                        let idx = x.0;
                        (idx, f(Some(&a.next().unwrap().1), Some(&b.next().unwrap().1)))
                    }
                }
            };
            if !c.is_zero() {
                out.push((idx, c));
            }
        }
        Elem { alg: self.alg, terms: out }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, |x, y| match (x, y) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => C::zero(),
        })
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, |x, y| match (x, y) {
            (Some(x), Some(y)) => x.sub(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.neg(),
            (None, None) => C::zero(),
        })
    }

    pub fn neg(&self) -> Self {
        Elem { alg: self.alg, terms: self.terms.iter().map(|(i, c)| (*i, c.neg())).collect() }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Elem::zero_in(self.alg);
        }
        Elem { alg: self.alg, terms: self.terms.iter().map(|(i, c)| (*i, c.mul(s))).collect() }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(u32, &C) -> C) -> Self {
        let terms = self.terms.iter().map(|(i, c)| (*i, f(*i, c))).filter(|(_, c)| !c.is_zero()).collect();
        Elem { alg: self.alg, terms }
    }

    /// If `self = c·o` for a scalar `c`, returns `c`.
    pub fn ratio_to(&self, o: &Self) -> Option<C> {
        if o.is_zero() {
            return self.is_zero().then(C::zero);
        }
        if self.terms.len() != o.terms.len() {
            return None;
        }
        let c = self.terms[0].1.div(&o.terms[0].1).ok()?;
        let same = self.terms[0].0 == o.terms[0].0
            && self.terms.iter().zip(&o.terms).all(|(x, y)| x.0 == y.0 && x.1 == y.1.mul(&c));
        same.then_some(c)
    }
}

/// Accumulates `Σ c_j · e_j` with one reduction per output coefficient.
pub(crate) struct Accum<C: Field> {
    map: BTreeMap<u32, C::Acc>,
}

impl<C: Field> Accum<C> {
    pub fn new() -> Self {
        Accum { map: BTreeMap::new() }
    }

    /// `+= s · Σ terms`.
    pub fn add_scaled(&mut self, s: &C, terms: &[(u32, C)]) {
        for (j, c) in terms {
            C::acc_add(self.map.entry(*j).or_default(), s, c);
        }
    }

    pub fn add_term(&mut self, idx: u32, a: &C, b: &C) {
        C::acc_add(self.map.entry(idx).or_default(), a, b);
    }

    pub fn finish_terms(self) -> Vec<(u32, C)> {
        self.map
            .into_iter()
            .map(|(j, acc)| (j, C::acc_finish(acc)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn finish(self, alg: u64) -> Elem<C> {
        Elem { alg, terms: self.finish_terms() }
    }
}
