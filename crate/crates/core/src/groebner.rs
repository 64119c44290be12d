//! Buchberger's algorithm with the Gebauer–Möller pair criteria, normal
//! forms, and reduced Gröbner bases.

use std::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

/// Terms sorted by decreasing monomial under the working order.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(Monomial, Scalar)>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        SortedPoly {
            terms: p.sorted_terms(order),
        }
    }

    fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.inverse().expect("nonzero lead");
                for (_, a) in self.terms.iter_mut() {
                    *a = &*a * &inv;
                }
            }
        }
    }
}

/// `a[from..] - c * m * b`, merged under `order`.
fn sub_multiple(
    a: &[(Monomial, Scalar)],
    c: &Scalar,
    m: &Monomial,
    b: &[(Monomial, Scalar)],
    order: MonomialOrder,
) -> Vec<(Monomial, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(t, x)| (t.mul(m), x)).peekable();
    while i < a.len() || bi.peek().is_some() {
        let ord = match (a.get(i), bi.peek()) {
            (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (t, x) = bi.next().expect("peeked");
                out.push((t, -&(c * x)));
            }
            Ordering::Equal => {
                let (t, x) = bi.next().expect("peeked");
                let s = &a[i].1 - &(c * x);
                if !s.is_zero() {
                    out.push((t, s));
                }
                i += 1;
            }
        }
    }
    out
}

/// Full reduction of `p` by monic reducers; the remainder has no term
/// divisible by any reducer's leading monomial.
fn reduce(p: &SortedPoly, reducers: &[&SortedPoly], order: MonomialOrder) -> SortedPoly {
    let mut work = p.terms.clone();
    let mut head = 0;
    let mut rem = Vec::new();
    while head < work.len() {
        let (m, c) = &work[head];
        let found = reducers.iter().find(|g| g.lm().divides(m));
        match found {
            Some(g) => {
                let q = g.lm().quotient_of(m).expect("divides");
                let c = c.clone();
                work = sub_multiple(&work[head..], &c, &q, &g.terms, order);
                head = 0;
            }
            None => {
                rem.push(work[head].clone());
                head += 1;
            }
        }
    }
    SortedPoly { terms: rem }
}

fn s_polynomial(f: &SortedPoly, g: &SortedPoly, order: MonomialOrder) -> SortedPoly {
    let lcm = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&lcm).expect("lcm");
    let mg = g.lm().quotient_of(&lcm).expect("lcm");
    let scaled_f: Vec<_> = f.terms.iter().map(|(t, c)| (t.mul(&mf), c.clone())).collect();
    let one = f.terms[0].1.field().one();
    let terms = sub_multiple(&scaled_f, &one, &mg, &g.terms, order);
    SortedPoly { terms }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    order: MonomialOrder,
    polys: Vec<SortedPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn reducers(&self) -> Vec<&SortedPoly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Gebauer–Möller update for a new monic, reduced element `h`.
    fn update(&mut self, h: SortedPoly) {
        let k = self.polys.len();
        let hl = h.lm().clone();
        let cands: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| {
                let lm = self.polys[i].lm();
                (i, lm.lcm(&hl), lm.is_coprime(&hl))
            })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (i, lcm, coprime)) in cands.iter().enumerate() {
            let dominated = |other: &(usize, Monomial, bool)| other.1.divides(lcm);
            let later_divides = cands[idx + 1..].iter().any(dominated);
            let kept_divides = kept.iter().any(dominated);
            if *coprime || (!later_divides && !kept_divides) {
                kept.push((*i, lcm.clone(), *coprime));
            }
        }
        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs
            .retain(|p| !hl.divides(&p.lcm) || polys[p.i].lm().lcm(&hl) == p.lcm || polys[p.j].lm().lcm(&hl) == p.lcm);
        // coprime leading monomials: the S-polynomial reduces to zero
        for (i, lcm, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i, j: k, lcm });
            }
        }
        for i in 0..k {
            if self.active[i] && hl.divides(self.polys[i].lm()) {
                self.active[i] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let (best, _) = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|a, b| order.cmp(&a.1.lcm, &b.1.lcm))
            .expect("nonempty");
        Some(self.pairs.swap_remove(best))
    }
}

/// A reduced Gröbner basis: monic elements sorted by decreasing leading
/// monomial, no leading monomial dividing another, tails fully reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

/// Reduced Gröbner basis of the ideal generated by `gens` (zero generators ignored).
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> GroebnerBasis {
    let mut inputs: Vec<SortedPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_poly(g, order))
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut eng = Engine {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in inputs {
        let mut h = reduce(&f, &eng.reducers(), order);
        if !h.is_zero() {
            h.make_monic();
            eng.update(h);
        }
    }
    while let Some(pair) = eng.select_pair() {
        let s = s_polynomial(&eng.polys[pair.i], &eng.polys[pair.j], order);
        let mut h = reduce(&s, &eng.reducers(), order);
        if !h.is_zero() {
            h.make_monic();
            eng.update(h);
        }
    }
    let minimal: Vec<SortedPoly> = eng
        .polys
        .iter()
        .zip(&eng.active)
        .filter(|(_, a)| **a)
        .map(|(p, _)| p.clone())
        .collect();
    finish(ring, minimal, order)
}

/// Interreduces a minimal basis and sorts it.
fn finish(ring: &Ring, minimal: Vec<SortedPoly>, order: MonomialOrder) -> GroebnerBasis {
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p)
            .collect();
        let head = SortedPoly {
            terms: vec![g.terms[0].clone()],
        };
        let tail = SortedPoly {
            terms: g.terms[1..].to_vec(),
        };
        let tail = reduce(&tail, &others, order);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        let mut p = SortedPoly { terms };
        p.make_monic();
        reduced.push(p);
    }
    reduced.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    GroebnerBasis {
        ring: ring.clone(),
        order,
        leads: reduced.iter().map(|p| p.lm().clone()).collect(),
        elements: reduced.iter().map(|p| p.to_poly(ring)).collect(),
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(Monomial::is_one)
    }

    /// Whether some leading monomial divides `m`.
    pub fn lead_divides(&self, m: &Monomial) -> bool {
        self.leads.iter().any(|l| l.divides(m))
    }

    /// Remainder of `f` on division by the basis; zero iff `f` is in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let sorted: Vec<SortedPoly> = self
            .elements
            .iter()
            .map(|g| SortedPoly::from_poly(g, self.order))
            .collect();
        let reducers: Vec<&SortedPoly> = sorted.iter().collect();
        Ok(reduce(&SortedPoly::from_poly(f, self.order), &reducers, self.order).to_poly(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks the defining property directly: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let sorted: Vec<SortedPoly> = self
            .elements
            .iter()
            .map(|g| SortedPoly::from_poly(g, self.order))
            .collect();
        let reducers: Vec<&SortedPoly> = sorted.iter().collect();
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                let s = s_polynomial(&sorted[i], &sorted[j], self.order);
                if !reduce(&s, &reducers, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks reducedness: monic leads and no term of any element divisible
    /// by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, g)| {
            let (_, c) = g.leading_term(self.order).expect("nonzero");
            c.is_one()
                && g.terms()
                    .all(|(m, _)| self.leads.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingContext;

    fn polys(r: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = RingContext::rational(2);
        let g = buchberger(&r, &polys(&r, &["x1*x2", "x2^2"]), MonomialOrder::DegRevLex);
        assert_eq!(g.elements(), &polys(&r, &["x1*x2", "x2^2"])[..]);
    }

    #[test]
    fn linear_triangularization_lex() {
        let r = RingContext::rational(3);
        let g = buchberger(&r, &polys(&r, &["x1 - x2", "x2 - x3"]), MonomialOrder::Lex);
        assert_eq!(g.elements(), &polys(&r, &["x1 - x3", "x2 - x3"])[..]);
    }

    #[test]
    fn normal_form_examples() {
        let r = RingContext::rational(2);
        let g = buchberger(&r, &polys(&r, &["x1*x2", "x2^2"]), MonomialOrder::DegRevLex);
        assert!(g.normal_form(&polys(&r, &["x1*x2"])[0]).unwrap().is_zero());
        let one = Polynomial::one(&r);
        assert_eq!(g.normal_form(&one).unwrap(), one);
    }

    #[test]
    fn cyclic_three_is_consistent() {
        let r = RingContext::rational(3);
        let gens = polys(&r, &["x1 + x2 + x3", "x1*x2 + x2*x3 + x3*x1", "x1*x2*x3 - 1"]);
        for order in [
            MonomialOrder::DegRevLex,
            MonomialOrder::Lex,
            MonomialOrder::BlockElimination(1),
        ] {
            let g = buchberger(&r, &gens, order);
            assert!(g.s_pairs_reduce_to_zero());
            assert!(g.is_reduced());
            for f in &gens {
                assert!(g.contains(f).unwrap());
            }
        }
        let lex = buchberger(&r, &gens, MonomialOrder::Lex);
        assert_eq!(
            lex.elements(),
            &polys(&r, &["x1 + x2 + x3", "x2^2 + x2*x3 + x3^2", "x3^3 - 1"])[..]
        );
    }

    #[test]
    fn unit_ideal() {
        let r = RingContext::rational(2);
        let g = buchberger(&r, &polys(&r, &["x1", "x1 + 1"]), MonomialOrder::DegRevLex);
        assert!(g.is_unit());
        assert_eq!(g.len(), 1);
    }
}
