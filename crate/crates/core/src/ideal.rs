//! Ideals given by generators, with a lazily computed, write-once cache of
//! reduced Gröbner bases per monomial order.

use std::sync::{Arc, Mutex};

use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<Vec<Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ") in {}", self.ring)
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

impl Ideal {
    /// Zero generators are dropped; an empty list is the zero ideal.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(Vec::new()),
        })
    }

    pub fn parse(ring: &Ring, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| crate::parse::parse_polynomial(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Ring) -> Self {
        Ideal::power_of_maximal(ring, 1)
    }

    /// `m^s`, generated by all monomials of degree `s`.
    pub fn power_of_maximal(ring: &Ring, s: u32) -> Self {
        let one = ring.field().one();
        let gens = monomials_of_degree(ring.nvars(), s)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, one.clone()))
            .collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// Reduced Gröbner basis under `order`; computed once, then shared.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(g) = self
            .cache
            .lock()
            .expect("cache lock")
            .iter()
            .find(|g| g.order() == order)
        {
            return g.clone();
        }
        let g = Arc::new(buchberger(&self.ring, &self.generators, order));
        let mut cache = self.cache.lock().expect("cache lock");
        if let Some(existing) = cache.iter().find(|g| g.order() == order) {
            return existing.clone();
        }
        cache.push(g.clone());
        g
    }

    /// The degrevlex basis, used by default throughout.
    pub fn gb(&self) -> Arc<GroebnerBasis> {
        self.groebner_basis(MonomialOrder::DegRevLex)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.gb().contains(f)
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Equality of ideals, via reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(self.gb().elements() == other.gb().elements())
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let g = other.gb();
        for f in &self.generators {
            if !g.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for (i, f) in self.generators.iter().enumerate() {
            for (j, g) in other.generators.iter().enumerate() {
                // skip the mirrored half of a square
                if std::ptr::eq(self, other) && j < i {
                    continue;
                }
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn square(&self) -> Ideal {
        self.product(self).expect("same ring")
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `self ∩ k[x_{k+1}, ..., x_n]`, returned in the ring of the remaining
    /// variables. Requires `1 <= front_count < nvars`.
    pub fn eliminate(&self, front_count: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        if front_count == 0 || front_count >= n {
            return Err(AlgebraError::Precondition(format!(
                "cannot eliminate {front_count} of {n} variables"
            )));
        }
        let g = self.groebner_basis(MonomialOrder::BlockElimination(front_count));
        let mut target = self.ring.clone();
        for _ in 0..front_count {
            target = target.without_var(0)?;
        }
        let gens = g
            .elements()
            .iter()
            .filter(|p| (0..front_count).all(|i| !p.involves_var(i)))
            .map(|p| drop_front(p, front_count, &target))
            .collect();
        Ideal::new(&target, gens)
    }

    /// `I ∩ J` by eliminating `t` from `tI + (1 - t)J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ideal::new(&self.ring, vec![]);
        }
        let t_name = self.ring.fresh_name("t");
        let big = self.ring.with_front_vars(&[t_name.as_str()])?;
        let t = Polynomial::var_at(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&t * &lift_front(f, 1, &big));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &lift_front(g, 1, &big));
        }
        let elim = Ideal::new(&big, gens)?.eliminate(1)?;
        // same variables, but rebuild over our own ring handle
        let gens = elim
            .generators
            .iter()
            .map(|p| Polynomial::from_terms(&self.ring, p.terms().map(|(m, c)| (m.clone(), c.clone()))))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `(I : f)`.
    pub fn quotient_by(&self, f: &Polynomial) -> Result<Ideal> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens = inter
            .generators
            .iter()
            .map(|g| {
                g.exact_div(f)
                    .ok_or_else(|| AlgebraError::Precondition("intersection element not divisible".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `(I : J) = ∩_{f ∈ gens(J)} (I : f)`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for f in &other.generators {
            let q = self.quotient_by(f)?;
            acc = if acc.is_unit() { q } else { acc.intersect(&q)? };
        }
        Ok(acc)
    }

    /// `(I : J^∞)`, iterating quotients until the ideal stops growing.
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Moves every generator into `target`, matching variables by name.
    pub fn map_to_ring(&self, target: &Ring) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.map_to_ring(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Homogeneous generators of degree `d`, as given.
    pub fn generators_of_degree(&self, d: u32) -> Vec<&Polynomial> {
        self.generators.iter().filter(|g| g.degree() == Some(d)).collect()
    }
}

fn drop_front(p: &Polynomial, k: usize, target: &Ring) -> Polynomial {
    Polynomial::from_terms(
        target,
        p.terms()
            .map(|(m, c)| (Monomial::new(m.exponents()[k..].to_vec()), c.clone())),
    )
}

fn lift_front(p: &Polynomial, k: usize, target: &Ring) -> Polynomial {
    Polynomial::from_terms(target, p.terms().map(|(m, c)| (m.insert_vars(0, k), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingContext;

    fn ideal(r: &Ring, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn eliminate_parametrized_curve() {
        let r = RingContext::new(&["t", "x", "y"], crate::field::Field::Rationals).unwrap();
        let i = ideal(&r, &["x - t^2", "y - t^3"]);
        let e = i.eliminate(1).unwrap();
        let target = e.ring().clone();
        let expected = ideal(&target, &["x^3 - y^2"]);
        assert!(e.equals(&expected).unwrap());
    }

    #[test]
    fn eliminate_to_zero_ideal() {
        let r = RingContext::rational(2);
        let e = ideal(&r, &["x1 - x2^2"]).eliminate(1).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn intersection_of_coordinate_axes() {
        let r = RingContext::rational(2);
        let i = ideal(&r, &["x1"]).intersect(&ideal(&r, &["x2"])).unwrap();
        assert!(i.equals(&ideal(&r, &["x1*x2"])).unwrap());
        let j = ideal(&r, &["x1^2", "x2"])
            .intersect(&ideal(&r, &["x1", "x2^2"]))
            .unwrap();
        assert!(j.equals(&ideal(&r, &["x1^2", "x1*x2", "x2^2"])).unwrap());
    }

    #[test]
    fn colon_and_saturation() {
        let r = RingContext::rational(2);
        let i = ideal(&r, &["x1^2*x2", "x1*x2^3"]);
        let x1 = parse_polynomial("x1", &r).unwrap();
        let q = i.quotient_by(&x1).unwrap();
        assert!(q.equals(&ideal(&r, &["x1*x2", "x2^3"])).unwrap());
        let m = Ideal::maximal(&r);
        let sat = ideal(&r, &["x1^2", "x1*x2"]).saturation(&m).unwrap();
        assert!(sat.equals(&ideal(&r, &["x1"])).unwrap());
    }

    #[test]
    fn square_and_unit() {
        let r = RingContext::rational(2);
        let i = ideal(&r, &["x1", "x2"]);
        assert!(i.square().equals(&Ideal::power_of_maximal(&r, 2)).unwrap());
        assert!(ideal(&r, &["x1", "1 - x1"]).is_unit());
        assert!(!i.is_unit());
    }
}
