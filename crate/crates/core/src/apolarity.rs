//! Inverse systems: `S = k[x_1..x_N]` acting on `R = k[y_1..y_N]` by
//! differentiation, catalecticants, apolar ideals and minimal generators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::artinian::GradedPieces;
use crate::error::{AlgebraError, Result};
use crate::field::{Field, Scalar};
use crate::ideal::Ideal;
use crate::linalg::{kernel, rank, to_sparse};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingContext};

/// `k[y1..yn]`.
pub fn dual_ring(n: usize, field: Field) -> Ring {
    RingContext::indexed("y", n, field).expect("valid names")
}

/// `k[x1..xn]`.
pub fn primal_ring(n: usize, field: Field) -> Ring {
    RingContext::indexed("x", n, field).expect("valid names")
}

/// A nonzero homogeneous form of positive degree in the dual ring.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseForm {
    form: Polynomial,
    degree: u32,
}

impl InverseForm {
    pub fn new(form: Polynomial) -> Result<Self> {
        if form.is_zero() {
            return Err(AlgebraError::Precondition("inverse form must be nonzero".into()));
        }
        if !form.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let degree = form.degree().expect("nonzero");
        if degree == 0 {
            return Err(AlgebraError::Precondition(
                "inverse form must have positive degree".into(),
            ));
        }
        Ok(InverseForm { form, degree })
    }

    /// Parses `text` in `y1..yn` over `field`.
    pub fn parse(text: &str, n: usize, field: Field) -> Result<Self> {
        InverseForm::new(crate::parse::parse_polynomial(text, &dual_ring(n, field))?)
    }

    pub fn form(&self) -> &Polynomial {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.form.ring().nvars()
    }

    pub fn field(&self) -> Field {
        self.form.ring().field()
    }
}

/// `β!/(β-α)!`, or `None` when `α ≰ β`.
fn falling_factor(alpha: &[u32], beta: &[u32]) -> Option<BigInt> {
    let mut acc = BigInt::one();
    for (&a, &b) in alpha.iter().zip(beta) {
        if a > b {
            return None;
        }
        for k in (b - a + 1)..=b {
            acc *= k;
        }
    }
    Some(acc)
}

/// `x^α ∘ y^β = β!/(β-α)! · y^{β-α}`.
fn contract_monomial(alpha: &Monomial, beta: &Monomial, field: Field) -> Result<Option<(Monomial, Scalar)>> {
    let Some(q) = alpha.quotient_of(beta) else {
        return Ok(None);
    };
    let factor = falling_factor(alpha.exponents(), beta.exponents()).expect("divides");
    let c = field.from_bigint(&factor);
    if c.is_zero() {
        return Err(AlgebraError::FieldTooSmall(field.characteristic()));
    }
    Ok(Some((q, c)))
}

/// The contraction `f ∘ g`, a polynomial in the ring of `g`.
pub fn contract(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring().nvars() != g.ring().nvars() || f.ring().field() != g.ring().field() {
        return Err(AlgebraError::RingMismatch);
    }
    let field = g.ring().field();
    let mut out = Polynomial::zero(g.ring());
    for (a, fa) in f.terms() {
        for (b, gb) in g.terms() {
            if let Some((m, c)) = contract_monomial(a, b, field)? {
                out.add_term(m, &(fa * gb) * &c);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Catalecticant {
    pub source_degree: u32,
    /// Rows indexed by `S_j` monomials, columns by `R_{d-j}` monomials,
    /// both in descending degrevlex.
    pub matrix: Vec<Vec<Scalar>>,
    pub rank: usize,
}

/// Matrix of `S_j → R_{d-j}`, `f ↦ f ∘ g`.
pub fn catalecticant(g: &InverseForm, j: u32) -> Result<Catalecticant> {
    let n = g.nvars();
    let field = g.field();
    let d = g.degree;
    let rows_m = monomials_of_degree(n, j);
    let cols_m: Vec<Monomial> = if j <= d {
        monomials_of_degree(n, d - j)
    } else {
        Vec::new()
    };
    let col_index: BTreeMap<&Monomial, usize> = cols_m.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = Vec::with_capacity(rows_m.len());
    for a in &rows_m {
        let mut row = vec![field.zero(); cols_m.len()];
        for (b, gb) in g.form.terms() {
            if let Some((m, c)) = contract_monomial(a, b, field)? {
                let k = col_index[&m];
                row[k] = &row[k] + &(gb * &c);
            }
        }
        matrix.push(row);
    }
    let rank = rank(&matrix, cols_m.len());
    Ok(Catalecticant {
        source_degree: j,
        matrix,
        rank,
    })
}

/// `h_{S/g⊥}(1)`: the number of linear forms `g` genuinely depends on.
pub fn essential_variables(g: &InverseForm) -> Result<usize> {
    Ok(catalecticant(g, 1)?.rank)
}

/// Clears denominators and content over Q so printed generators have
/// coprime integer coefficients and a positive leading term.
fn primitive(p: &Polynomial) -> Polynomial {
    if p.ring().field() != Field::Rationals || p.is_zero() {
        return p.clone();
    }
    let rationals = || {
        p.terms().filter_map(|(_, c)| match c {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Modular { .. } => None,
        })
    };
    let den = rationals().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let content = rationals().fold(BigInt::zero(), |acc, q| acc.gcd(&(q.numer() * &den / q.denom())));
    let mut scale = BigRational::new(den, content);
    let lead_negative = p
        .leading_term(MonomialOrder::DegRevLex)
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false);
    if lead_negative {
        scale = -scale;
    }
    p.scale(&Scalar::Rational(scale))
}

/// Minimal generators of `g⊥` degree by degree, and the ideal they generate.
pub struct ApolarData {
    pub ideal: Ideal,
    pub counts_by_degree: BTreeMap<u32, usize>,
}

/// `g⊥ = {f ∈ S : f ∘ g = 0}` in `x1..xN`, given by minimal generators.
pub fn apolar_ideal(g: &InverseForm) -> Result<Ideal> {
    Ok(apolar_data(g)?.ideal)
}

pub fn apolar_data(g: &InverseForm) -> Result<ApolarData> {
    let n = g.nvars();
    let field = g.field();
    let s = primal_ring(n, field);
    let d = g.degree;
    let essential = essential_variables(g)?;
    let top = if essential == 1 { d + 1 } else { d };
    let mut pieces = GradedPieces::new(n);
    pieces.push_degree(Vec::new());
    let mut gens = Vec::new();
    let mut counts = BTreeMap::new();
    for j in 1..=top {
        let basis = monomials_of_degree(n, j);
        let kern = if j <= d {
            let cat = catalecticant(g, j)?;
            let ncols = cat.matrix.first().map(Vec::len).unwrap_or(0);
            // kernel of the transpose action: vectors v with v^T M = 0
            let mut t = vec![vec![field.zero(); basis.len()]; ncols];
            for (r, row) in cat.matrix.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    t[c][r] = x.clone();
                }
            }
            kernel(&t, basis.len(), field)
        } else {
            (0..basis.len())
                .map(|i| {
                    let mut v = vec![field.zero(); basis.len()];
                    v[i] = field.one();
                    v
                })
                .collect()
        };
        let mut e = pieces.shifted(j as usize);
        let mut fresh = 0;
        for v in &kern {
            if e.insert(to_sparse(v)) {
                let p = Polynomial::from_terms(
                    &s,
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (basis[i].clone(), c.clone())),
                );
                gens.push(primitive(&p));
                fresh += 1;
            }
        }
        pieces.pieces.push(e);
        counts.insert(j, fresh);
    }
    Ok(ApolarData {
        ideal: Ideal::new(&s, gens)?,
        counts_by_degree: counts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalGeneratorProfile {
    pub counts_by_degree: BTreeMap<u32, usize>,
    /// Count in degree 3.
    pub beta: usize,
}

impl MinimalGeneratorProfile {
    pub fn count(&self, j: u32) -> usize {
        self.counts_by_degree.get(&j).copied().unwrap_or(0)
    }
}

/// `count(j) = dim I_j - dim (S_1 I_{j-1})_j` for `j = 1..=max_degree`.
pub fn minimal_generator_counts(i: &Ideal, max_degree: u32) -> Result<MinimalGeneratorProfile> {
    if !i.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous);
    }
    let n = i.ring().nvars();
    let mut pieces = GradedPieces::new(n);
    let mut counts = BTreeMap::new();
    for d in 0..=max_degree as usize {
        let rows = i
            .generators()
            .iter()
            .filter(|g| g.degree() == Some(d as u32))
            .map(|g| pieces.row_of(g, d))
            .collect();
        let fresh = pieces.push_degree(rows);
        if d >= 1 {
            counts.insert(d as u32, fresh);
        }
    }
    let beta = counts.get(&3).copied().unwrap_or(0);
    Ok(MinimalGeneratorProfile {
        counts_by_degree: counts,
        beta,
    })
}

/// Symmetric matrix of the quadric `ℓ(g)`, `ℓ = Σ c_i x_i`, with entries
/// linear forms in `ring = k[c1..c4]`.
fn contraction_matrix(g: &InverseForm, ring: &Ring) -> Result<Vec<Vec<Polynomial>>> {
    let n = g.nvars();
    let field = g.field();
    let third = |i: usize, a: usize, b: usize| -> Result<Scalar> {
        let m = Monomial::var(n, i).mul(&Monomial::var(n, a)).mul(&Monomial::var(n, b));
        let x = Polynomial::monomial(&primal_ring(n, field), m, field.one());
        let c = contract(&x, &g.form)?;
        Ok(c.coefficient(&Monomial::one(n)))
    };
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut entry = Polynomial::zero(ring);
                    for i in 0..n {
                        let c = third(i, a, b)?;
                        if !c.is_zero() {
                            entry = &entry + &Polynomial::var_at(ring, i).scale(&c);
                        }
                    }
                    Ok(entry)
                })
                .collect()
        })
        .collect()
}

/// Whether some nonzero `ℓ ∈ S_1` makes `ℓ(g)` a quadric of rank at most 1.
/// Decided by saturating the 2×2 minors of `ℓ(g)` by `(c1..c4)`.
pub fn exists_rank_one_contraction(g: &InverseForm) -> Result<bool> {
    if g.degree != 3 || g.nvars() != 4 {
        return Err(AlgebraError::Precondition("expects a cubic in 4 variables".into()));
    }
    if essential_variables(g)? < 4 {
        return Err(AlgebraError::Precondition("expects a form that is not a cone".into()));
    }
    let c = RingContext::indexed("c", 4, g.field())?;
    let m = contraction_matrix(g, &c)?;
    let mut minors = Vec::new();
    for a in 0..4 {
        for a2 in a + 1..4 {
            for b in 0..4 {
                for b2 in b + 1..4 {
                    minors.push(&(&m[a][b] * &m[a2][b2]) - &(&m[a][b2] * &m[a2][b]));
                }
            }
        }
    }
    let j = Ideal::new(&c, minors)?;
    let sat = j.saturation(&Ideal::maximal(&c))?;
    Ok(!sat.is_unit())
}

/// A cubic in `n` variables with integer coefficients in `[-5, 5]`,
/// resampled until it has `n` essential variables.
pub fn random_nondegenerate_cubic<R: Rng>(rng: &mut R, n: usize, field: Field) -> InverseForm {
    let ring = dual_ring(n, field);
    let monos = monomials_of_degree(n, 3);
    loop {
        let p = Polynomial::from_terms(
            &ring,
            monos.iter().map(|m| (m.clone(), field.from_i64(rng.gen_range(-5..=5)))),
        );
        if let Ok(g) = InverseForm::new(p) {
            if essential_variables(&g).expect("cubic") == n {
                return g;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn form(s: &str) -> InverseForm {
        InverseForm::parse(s, 4, Field::Rationals).unwrap()
    }

    fn x(s: &str) -> Polynomial {
        parse_polynomial(s, &primal_ring(4, Field::Rationals)).unwrap()
    }

    #[test]
    fn contraction_examples() {
        let g = form("y1^3");
        assert_eq!(contract(&x("x1"), g.form()).unwrap().to_string(), "3*y1^2");
        let g = form("y1*y2*y3");
        assert_eq!(contract(&x("x1*x2"), g.form()).unwrap().to_string(), "y3");
        let g = form("y4^3 + y1*y2*y3");
        assert_eq!(contract(&x("x4"), g.form()).unwrap().to_string(), "3*y4^2");
        let g = form("y2^3");
        assert!(contract(&x("x1^2"), g.form()).unwrap().is_zero());
    }

    #[test]
    fn essential_variable_counts() {
        assert_eq!(essential_variables(&form("y1^3 + y2^3")).unwrap(), 2);
        assert_eq!(essential_variables(&form("y4^3 + y1*y2*y3")).unwrap(), 4);
        assert_eq!(essential_variables(&form("y3^3 + y4^3")).unwrap(), 2);
    }

    #[test]
    fn apolar_of_power_in_one_variable() {
        let g = InverseForm::parse("y1^3", 1, Field::Rationals).unwrap();
        let i = apolar_ideal(&g).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].to_string(), "x1^4");
    }

    #[test]
    fn apolar_generators_annihilate() {
        let g = form("y4^3 + y1*y2*y3");
        let data = apolar_data(&g).unwrap();
        for f in data.ideal.generators() {
            assert!(contract(f, g.form()).unwrap().is_zero());
        }
        assert_eq!(data.counts_by_degree[&2], 6);
        assert_eq!(data.counts_by_degree[&3], 1);
        assert!(data
            .ideal
            .generators()
            .iter()
            .any(|f| f.to_string() == "6*x1*x2*x3 - x4^3"));
    }

    #[test]
    fn catalecticant_rank_symmetry() {
        let g = form("y4^3 + y1*y2*y3");
        for j in 0..=3 {
            assert_eq!(
                catalecticant(&g, j).unwrap().rank,
                catalecticant(&g, 3 - j).unwrap().rank
            );
        }
    }

    #[test]
    fn minimal_generators_of_maximal_ideal() {
        let r = primal_ring(4, Field::Rationals);
        let p = minimal_generator_counts(&Ideal::maximal(&r), 4).unwrap();
        assert_eq!(p.count(1), 4);
        assert_eq!(p.count(2) + p.count(3) + p.count(4), 0);
    }

    #[test]
    fn rank_one_examples() {
        assert!(exists_rank_one_contraction(&form("y4^3 + y1*y2*y3")).unwrap());
        assert!(exists_rank_one_contraction(&form("y3^2*y4 + y1*y2^2")).unwrap());
        assert!(matches!(
            exists_rank_one_contraction(&form("y1^3 + y2^3")),
            Err(AlgebraError::Precondition(_))
        ));
    }

    #[test]
    fn field_too_small() {
        let f = Field::prime_above(7, 6).unwrap();
        let g = InverseForm::parse("y1^7", 1, f).unwrap();
        let r = primal_ring(1, f);
        let x = parse_polynomial("x1^7", &r).unwrap();
        assert_eq!(contract(&x, g.form()).unwrap_err(), AlgebraError::FieldTooSmall(7));
    }
}
