//! Sparse multivariate polynomials with exact coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::{same_ring, Ring};

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Scalar) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable at position `idx`.
    pub fn var_at(ring: &Ring, idx: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), idx), ring.field().one())
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ring, idx))
    }

    /// Builds from (monomial, coefficient) pairs, summing duplicates.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Smallest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero lead")),
        }
    }

    /// Checked ring arithmetic.
    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Image under the ring map sending each assigned variable to its
    /// polynomial and every other variable to the variable of the same name
    /// in `target`.
    pub fn substitute(&self, assignments: &BTreeMap<String, Polynomial>, target: &Ring) -> Result<Polynomial> {
        for (name, p) in assignments {
            if self.ring.var_index(name).is_none() {
                return Err(AlgebraError::UnknownVariable(name.clone()));
            }
            if !same_ring(p.ring(), target) {
                return Err(AlgebraError::RingMismatch);
            }
        }
        if self.ring.field() != target.field() {
            return Err(AlgebraError::RingMismatch);
        }
        let mut images = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.vars() {
            let img = match assignments.get(name) {
                Some(p) => p.clone(),
                None => Polynomial::var(target, name)?,
            };
            images.push(img);
        }
        let mut out = Polynomial::zero(target);
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Same polynomial viewed in `target`, matching variables by name.
    pub fn map_to_ring(&self, target: &Ring) -> Result<Polynomial> {
        self.substitute(&BTreeMap::new(), target)
    }

    /// Exact quotient `self / d`; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let order = MonomialOrder::DegRevLex;
        let (lm, lc) = d.leading_term(order)?;
        let lc_inv = lc.inverse()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term(order) {
            let q = lm.quotient_of(m)?;
            let qc = c * &lc_inv;
            rem = &rem - &d.mul_monomial(&q, &qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether the variable at `idx` occurs.
    pub fn involves_var(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[idx] > 0)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    /// Panics on ring mismatch; use [`Polynomial::arith`] for a checked variant.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.arith(rhs, ArithOp::Add).expect("ring mismatch")
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.arith(rhs, ArithOp::Sub).expect("ring mismatch")
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.arith(rhs, ArithOp::Mul).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::RingContext;

    fn parse(r: &Ring, s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = RingContext::rational(2);
        let a = parse(&r, "x1 + x2");
        let b = parse(&r, "x1 - x2");
        assert_eq!(&a * &b, parse(&r, "x1^2 - x2^2"));
    }

    #[test]
    fn additive_identity() {
        let r = RingContext::rational(3);
        let f = parse(&r, "x1*x2 + x3^2");
        assert_eq!(&f + &Polynomial::zero(&r), f);
    }

    #[test]
    fn hand_expansion() {
        // (x2^2 - x1^3) * x1 = x1*x2^2 - x1^4, expanded term by term
        let r = RingContext::rational(2);
        let f = parse(&r, "x2^2 - x1^3");
        let g = parse(&r, "x1");
        let mut expected = Polynomial::zero(&r);
        expected.add_term(Monomial::new(vec![1, 2]), Field::Rationals.one());
        expected.add_term(Monomial::new(vec![4, 0]), Field::Rationals.from_i64(-1));
        assert_eq!(&f * &g, expected);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r2 = RingContext::rational(2);
        let r3 = RingContext::rational(3);
        let e = Polynomial::one(&r2).arith(&Polynomial::one(&r3), ArithOp::Add);
        assert_eq!(e.unwrap_err(), AlgebraError::RingMismatch);
    }

    #[test]
    fn substitution_examples() {
        let r = RingContext::new(&["x1", "x2", "x3", "x4", "b"], Field::Rationals).unwrap();
        let target = RingContext::rational(4);
        let f = parse(&r, "x4^2 - b*x4 - x1^4");
        let mut a = BTreeMap::new();
        a.insert("b".to_string(), Polynomial::zero(&target));
        assert_eq!(f.substitute(&a, &target).unwrap(), parse(&target, "x4^2 - x1^4"));

        let r2 = RingContext::rational(2);
        let g = parse(&r2, "x1^2 + x2");
        assert_eq!(g.substitute(&BTreeMap::new(), &r2).unwrap(), g);
        let mut a = BTreeMap::new();
        a.insert("x2".to_string(), parse(&r2, "x1^2"));
        assert_eq!(g.substitute(&a, &r2).unwrap(), parse(&r2, "2*x1^2"));

        let mut bad = BTreeMap::new();
        bad.insert("q".to_string(), Polynomial::zero(&r2));
        assert_eq!(
            g.substitute(&bad, &r2).unwrap_err(),
            AlgebraError::UnknownVariable("q".into())
        );
    }

    #[test]
    fn exact_division() {
        let r = RingContext::rational(2);
        let f = parse(&r, "x1^2*x2 - x2^3");
        let d = parse(&r, "x1 - x2");
        assert_eq!(f.exact_div(&d).unwrap(), parse(&r, "x1*x2 + x2^2"));
        assert!(parse(&r, "x1 + 1").exact_div(&parse(&r, "x2")).is_none());
    }
}
