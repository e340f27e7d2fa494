//! Sparse multivariate polynomials over exact rationals.

use crate::scalar::ExactScalar;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Multi-index of variable exponents; the length is the ambient dimension.
///
/// Ordering derives from the underlying vector, so `BTreeMap` keys iterate in
/// ascending lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, axis: usize) -> u32 {
        self.0[axis]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Componentwise sum of two exponent vectors of equal length.
    fn plus(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.0.len(), other.0.len());
        ExponentVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn bumped(&self, axis: usize) -> ExponentVector {
        let mut v = self.0.clone();
        v[axis] += 1;
        ExponentVector(v)
    }
}

/// Sparse polynomial in `ambient_dim` variables; no stored coefficient is
/// zero and every exponent vector has length `ambient_dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ambient_dim: usize,
    terms: BTreeMap<ExponentVector, ExactScalar>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            ambient_dim: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: ExactScalar) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(ExponentVector::zeros(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, ExactScalar::one())
    }

    pub fn int(n: usize, v: i64) -> Self {
        Polynomial::constant(n, ExactScalar::from_int(v))
    }

    /// The coordinate polynomial `x_axis`.
    pub fn variable(n: usize, axis: usize) -> Self {
        assert!(axis < n, "axis {axis} out of range for dimension {n}");
        Polynomial::monomial(n, ExponentVector::zeros(n).bumped(axis), ExactScalar::one())
    }

    pub fn monomial(n: usize, exps: ExponentVector, coeff: ExactScalar) -> Self {
        assert_eq!(exps.len(), n, "exponent vector length must equal dimension");
        let mut p = Polynomial::zero(n);
        p.add_term(exps, coeff);
        p
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &ExponentVector) -> ExactScalar {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    /// Adds `c * x^exps`, pruning the term if the sum cancels.
    pub fn add_term(&mut self, exps: ExponentVector, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), self.ambient_dim);
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ambient_dim);
        }
        Polynomial {
            ambient_dim: self.ambient_dim,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiplication by the coordinate `x_axis`.
    pub fn mul_var(&self, axis: usize) -> Polynomial {
        assert!(axis < self.ambient_dim);
        Polynomial {
            ambient_dim: self.ambient_dim,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.bumped(axis), a.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to `x_axis`.
    pub fn derivative(&self, axis: usize) -> Polynomial {
        assert!(axis < self.ambient_dim);
        let mut out = Polynomial::zero(self.ambient_dim);
        for (e, c) in &self.terms {
            let k = e.get(axis);
            if k == 0 {
                continue;
            }
            let mut v: Vec<u32> = e.as_slice().to_vec();
            v[axis] -= 1;
            out.add_term(
                ExponentVector::new(v),
                c * &ExactScalar::from_int(i64::from(k)),
            );
        }
        out
    }

    /// Substitutes the constant `value` for `x_axis`. The result still lives
    /// in `ambient_dim` variables; the substituted one no longer appears.
    pub fn substitute(&self, axis: usize, value: &ExactScalar) -> Polynomial {
        assert!(axis < self.ambient_dim);
        let mut out = Polynomial::zero(self.ambient_dim);
        for (e, c) in &self.terms {
            let k = e.get(axis);
            let mut factor = ExactScalar::one();
            for _ in 0..k {
                factor *= value;
            }
            let mut v: Vec<u32> = e.as_slice().to_vec();
            v[axis] = 0;
            out.add_term(ExponentVector::new(v), c * &factor);
        }
        out
    }

    /// Largest exponent of `x_axis` in any term (0 for the zero polynomial).
    pub fn max_exponent(&self, axis: usize) -> u32 {
        self.terms.keys().map(|e| e.get(axis)).max().unwrap_or(0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::total_degree).max()
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.ambient_dim);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ambient_dim, rhs.ambient_dim);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ambient_dim, rhs.ambient_dim);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ambient_dim, rhs.ambient_dim);
        let mut out = Polynomial::zero(self.ambient_dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.plus(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ambient_dim: self.ambient_dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::render_polynomial(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize) -> Polynomial {
        Polynomial::variable(n, 0)
    }
    fn y(n: usize) -> Polynomial {
        Polynomial::variable(n, 1)
    }

    #[test]
    fn product_and_cancellation() {
        let n = 2;
        // (x + 1)(x - 1) = x^2 - 1
        let p = &(&x(n) + &Polynomial::one(n)) * &(&x(n) - &Polynomial::one(n));
        let mut expected = Polynomial::zero(n);
        expected.add_term(ExponentVector::new(vec![2, 0]), ExactScalar::one());
        expected.add_term(ExponentVector::new(vec![0, 0]), ExactScalar::from_int(-1));
        assert_eq!(p, expected);

        let q = &p - &p;
        assert!(q.is_zero());
    }

    #[test]
    fn derivative_and_substitute() {
        let n = 2;
        // d/dx (x^2 y) = 2xy
        let p = &(&x(n) * &x(n)) * &y(n);
        let d = p.derivative(0);
        assert_eq!(d, (&x(n) * &y(n)).scale(&ExactScalar::from_int(2)));

        // substitute x = 1 in (x + 1) y -> 2y
        let q = &(&x(n) + &Polynomial::one(n)) * &y(n);
        assert_eq!(
            q.substitute(0, &ExactScalar::one()),
            y(n).scale(&ExactScalar::from_int(2))
        );
    }

    #[test]
    fn degree_bookkeeping() {
        let n = 3;
        let p = &Polynomial::variable(n, 2).pow(3) * &y(n);
        assert_eq!(p.total_degree(), Some(4));
        assert_eq!(p.max_exponent(2), 3);
        assert_eq!(p.max_exponent(0), 0);
        assert_eq!(Polynomial::zero(n).total_degree(), None);
    }
}
