//! Zero-dimensional quotients `A = S/I`: standard-monomial bases, local and
//! graded Hilbert functions, socles.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::{Field, Scalar};
use crate::groebner::GroebnerBasis;
use crate::ideal::Ideal;
use crate::linalg::{integral_image, kernel, SparseEchelon, SparseRow};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;

/// `S/I` with its standard monomials (degrevlex) as a k-basis.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub ideal: Ideal,
    /// Ascending degrevlex; closed under division.
    pub basis: Vec<Monomial>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    pub values: Vec<usize>,
}

impl HilbertFunction {
    pub fn new(values: Vec<usize>) -> Self {
        HilbertFunction { values }
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    /// Value at `i`, zero past the end.
    pub fn at(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(0)
    }

    /// Largest index with a nonzero value.
    pub fn socle_degree(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }
}

impl std::fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraProfile {
    pub dim: usize,
    pub hilbert: HilbertFunction,
    pub emdim: usize,
    pub msdeg: usize,
    pub socle_dim: usize,
    /// Normal forms spanning the socle.
    pub socle_basis: Vec<Polynomial>,
    pub gorenstein: bool,
}

/// Standard monomials of a Gröbner basis, or `NotZeroDimensional`.
pub fn standard_monomials(g: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let n = g.ring().nvars();
    if g.is_unit() {
        return Ok(Vec::new());
    }
    let mut has_power = vec![false; n];
    for m in g.leading_monomials() {
        if let Some(i) = m.pure_power_var() {
            has_power[i] = true;
        }
    }
    if has_power.iter().any(|h| !h) {
        return Err(AlgebraError::NotZeroDimensional);
    }
    let mut out = Vec::new();
    let mut d = 0;
    loop {
        let layer: Vec<Monomial> = monomials_of_degree(n, d)
            .into_iter()
            .filter(|m| !g.lead_divides(m))
            .collect();
        if layer.is_empty() {
            break;
        }
        out.extend(layer.into_iter().rev());
        d += 1;
    }
    Ok(out)
}

pub fn quotient_basis(i: &Ideal) -> Result<QuotientAlgebra> {
    let basis = standard_monomials(&i.gb())?;
    Ok(QuotientAlgebra {
        ideal: i.clone(),
        dim: basis.len(),
        basis,
    })
}

/// `dim_k S/I`.
pub fn quotient_dim(i: &Ideal) -> Result<usize> {
    Ok(standard_monomials(&i.gb())?.len())
}

/// Hilbert function of the associated graded ring at the origin,
/// `h(i) = dim S/(I + m^{i+1}) - dim S/(I + m^i)`.
pub fn local_hilbert_function(i: &Ideal) -> Result<HilbertFunction> {
    let total = quotient_dim(i)?;
    let ring = i.ring();
    // d[k] = dim S/(I + m^k)
    let mut dims = vec![0usize];
    let mut k = 1;
    loop {
        let dk = quotient_dim(&i.sum(&Ideal::power_of_maximal(ring, k))?)?;
        let prev = *dims.last().expect("nonempty");
        if dk == prev {
            break;
        }
        dims.push(dk);
        k += 1;
    }
    if *dims.last().expect("nonempty") != total {
        return Err(AlgebraError::NotLocalAtOrigin);
    }
    Ok(HilbertFunction::new(dims.windows(2).map(|w| w[1] - w[0]).collect()))
}

/// Multiplication by each variable on the standard-monomial basis, as
/// columns: `mats[k][col]` = coordinates of `x_k * basis[col]`.
pub fn multiplication_matrices(q: &QuotientAlgebra) -> Vec<Vec<SparseRow>> {
    let g = q.ideal.gb();
    let ring = q.ideal.ring();
    let index: HashMap<&Monomial, usize> = q.basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let one = ring.field().one();
    (0..ring.nvars())
        .map(|k| {
            let xk = Monomial::var(ring.nvars(), k);
            q.basis
                .iter()
                .map(|b| {
                    let p = Polynomial::monomial(ring, b.mul(&xk), one.clone());
                    let nf = g.normal_form(&p).expect("same ring");
                    let mut row: SparseRow = nf.terms().map(|(m, c)| (index[m], c.clone())).collect();
                    row.sort_by_key(|(i, _)| *i);
                    row
                })
                .collect()
        })
        .collect()
}

/// Socle `0 : m` of `S/I` as normal forms.
pub fn socle(q: &QuotientAlgebra) -> Vec<Polynomial> {
    let ring = q.ideal.ring();
    let field = ring.field();
    let n = q.dim;
    if n == 0 {
        return Vec::new();
    }
    // rows: (k, i) -> coefficient of basis[i] in x_k * v
    let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
    for cols in multiplication_matrices(q) {
        let mut block = vec![vec![field.zero(); n]; n];
        for (c, col) in cols.iter().enumerate() {
            for (r, a) in col {
                block[*r][c] = a.clone();
            }
        }
        rows.extend(block);
    }
    kernel(&rows, n, field)
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(
                ring,
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (q.basis[i].clone(), c)),
            )
        })
        .collect()
}

pub fn socle_and_profile(i: &Ideal) -> Result<AlgebraProfile> {
    let hilbert = local_hilbert_function(i)?;
    let q = quotient_basis(i)?;
    let soc = socle(&q);
    Ok(AlgebraProfile {
        dim: q.dim,
        emdim: hilbert.at(1),
        msdeg: hilbert.socle_degree(),
        socle_dim: soc.len(),
        gorenstein: soc.len() == 1,
        socle_basis: soc,
        hilbert,
    })
}

/// Degree-by-degree spans `I_j ⊆ S_j` of a homogeneous ideal, built as
/// `I_j = S_1 I_{j-1} + span(generators of degree j)`.
/// Large prime for modular full-rank certificates.
const CERTIFYING_PRIME: u64 = 2_147_483_647;

pub(crate) struct GradedPieces {
    nvars: usize,
    pub(crate) index: Vec<HashMap<Monomial, usize>>,
    pub(crate) pieces: Vec<SparseEchelon>,
}

impl GradedPieces {
    pub(crate) fn new(nvars: usize) -> Self {
        GradedPieces {
            nvars,
            index: Vec::new(),
            pieces: Vec::new(),
        }
    }

    fn ensure_index(&mut self, d: usize) {
        while self.index.len() <= d {
            let deg = self.index.len() as u32;
            let idx = monomials_of_degree(self.nvars, deg)
                .into_iter()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            self.index.push(idx);
        }
    }

    pub(crate) fn row_of(&mut self, p: &Polynomial, d: usize) -> SparseRow {
        self.ensure_index(d);
        let mut row: SparseRow = p.terms().map(|(m, c)| (self.index[d][m], c.clone())).collect();
        row.sort_by_key(|(i, _)| *i);
        row
    }

    /// Spanning rows of `(S_1 I_{d-1})_d`.
    fn shift_rows(&mut self, d: usize) -> Vec<SparseRow> {
        self.ensure_index(d);
        if d == 0 || d > self.pieces.len() {
            return Vec::new();
        }
        let below = monomials_of_degree(self.nvars, d as u32 - 1);
        let mut out = Vec::new();
        for row in self.pieces[d - 1].rows() {
            for k in 0..self.nvars {
                let xk = Monomial::var(self.nvars, k);
                let mut shifted: SparseRow = row
                    .iter()
                    .map(|(c, a)| (self.index[d][&below[*c].mul(&xk)], a.clone()))
                    .collect();
                shifted.sort_by_key(|(i, _)| *i);
                out.push(shifted);
            }
        }
        out
    }

    /// `(S_1 I_{d-1})_d`, the part of degree `d` forced by lower degrees.
    pub(crate) fn shifted(&mut self, d: usize) -> SparseEchelon {
        let mut e = SparseEchelon::new();
        for r in self.shift_rows(d) {
            e.insert(r);
        }
        e
    }

    /// Over Q, whether a modular image already shows that degree `d` of the
    /// ideal fills `S_d`, given `new_rows` from generators of degree `d`.
    /// A `false` answer is inconclusive.
    pub(crate) fn fills_degree(&mut self, d: usize, new_rows: &[SparseRow]) -> bool {
        let mut rows = self.shift_rows(d);
        rows.extend(new_rows.iter().cloned());
        if !matches!(rows.first().map(|r| &r[0].1), Some(Scalar::Rational(_))) {
            return false;
        }
        let field = Field::Prime(CERTIFYING_PRIME);
        let target = monomial_count(self.nvars, d);
        let mut e = SparseEchelon::new();
        rows.iter().any(|r| {
            e.insert(integral_image(r, field));
            e.rank() == target
        })
    }

    /// Appends the next degree, seeded from the shift plus `new_rows`.
    /// Returns the number of rows that were not already in the shift.
    pub(crate) fn push_degree(&mut self, new_rows: Vec<SparseRow>) -> usize {
        let d = self.pieces.len();
        let mut e = self.shifted(d);
        let mut fresh = 0;
        for r in new_rows {
            if e.insert(r) {
                fresh += 1;
            }
        }
        self.pieces.push(e);
        fresh
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim_k S_d` in `n` variables.
pub fn monomial_count(n: usize, d: usize) -> usize {
    binomial(n + d - 1, d)
}

/// Graded Hilbert function of `S/I` for homogeneous `I`, by linear algebra
/// per degree. Trailing zeros are dropped.
pub fn graded_hilbert_function(i: &Ideal) -> Result<HilbertFunction> {
    if !i.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous);
    }
    let n = i.ring().nvars();
    let max_gen = i.generators().iter().filter_map(Polynomial::degree).max().unwrap_or(0) as usize;
    if i.generators().iter().any(|g| g.degree() == Some(0)) {
        return Ok(HilbertFunction::new(Vec::new()));
    }
    // a zero-dimensional ideal generated in degree <= e vanishes by degree n(e-1)+1
    let bound = n * max_gen.saturating_sub(1) + 1;
    let mut pieces = GradedPieces::new(n);
    let mut values = Vec::new();
    for d in 0..=bound.max(max_gen) {
        let rows: Vec<SparseRow> = i
            .generators()
            .iter()
            .filter(|g| g.degree() == Some(d as u32))
            .map(|g| pieces.row_of(g, d))
            .collect();
        if d > 0 && pieces.fills_degree(d, &rows) {
            return Ok(HilbertFunction::new(values));
        }
        pieces.push_degree(rows);
        let h = monomial_count(n, d) - pieces.pieces[d].rank();
        if h == 0 && d >= max_gen {
            return Ok(HilbertFunction::new(values));
        }
        values.push(h);
    }
    Err(AlgebraError::NotZeroDimensional)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Ring, RingContext};

    fn ideal(r: &Ring, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn reduced_point_and_fat_line() {
        let r = RingContext::rational(4);
        let q = quotient_basis(&Ideal::maximal(&r)).unwrap();
        assert_eq!(q.dim, 1);
        let r1 = RingContext::rational(1);
        let q = quotient_basis(&ideal(&r1, &["x1^4"])).unwrap();
        assert_eq!(q.dim, 4);
        assert_eq!(
            local_hilbert_function(&ideal(&r1, &["x1^4"])).unwrap().values,
            vec![1, 1, 1, 1]
        );
    }

    #[test]
    fn not_zero_dimensional() {
        let r = RingContext::rational(2);
        assert_eq!(
            quotient_basis(&ideal(&r, &["x1^2"])).unwrap_err(),
            AlgebraError::NotZeroDimensional
        );
        assert_eq!(
            graded_hilbert_function(&ideal(&r, &["x1^2"])).unwrap_err(),
            AlgebraError::NotZeroDimensional
        );
    }

    #[test]
    fn not_local() {
        let r = RingContext::rational(1);
        assert_eq!(
            local_hilbert_function(&ideal(&r, &["x1^2 - x1"])).unwrap_err(),
            AlgebraError::NotLocalAtOrigin
        );
    }

    #[test]
    fn socles() {
        let r = RingContext::rational(2);
        let p = socle_and_profile(&ideal(&r, &["x1^2", "x2^2"])).unwrap();
        assert!(p.gorenstein);
        assert_eq!(p.socle_basis[0].to_string(), "x1*x2");
        assert_eq!(p.hilbert.values, vec![1, 2, 1]);
        let p = socle_and_profile(&ideal(&r, &["x1^2", "x1*x2", "x2^2"])).unwrap();
        assert_eq!(p.socle_dim, 2);
        assert!(!p.gorenstein);
        let p = socle_and_profile(&ideal(&r, &["x1^2", "x2"])).unwrap();
        assert_eq!(p.hilbert.values, vec![1, 1]);
    }

    #[test]
    fn graded_matches_local_on_homogeneous() {
        let r = RingContext::rational(3);
        let i = ideal(&r, &["x1^2 - x2^2", "x2^2 - x3^2", "x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(
            graded_hilbert_function(&i).unwrap(),
            local_hilbert_function(&i).unwrap()
        );
        assert_eq!(graded_hilbert_function(&i).unwrap().values, vec![1, 3, 1]);
        let r4 = RingContext::rational(4);
        assert_eq!(
            graded_hilbert_function(&Ideal::power_of_maximal(&r4, 2))
                .unwrap()
                .values,
            vec![1, 4]
        );
    }

    #[test]
    fn not_homogeneous() {
        let r = RingContext::rational(2);
        assert_eq!(
            graded_hilbert_function(&ideal(&r, &["x1^2 - x2", "x2^2"])).unwrap_err(),
            AlgebraError::NotHomogeneous
        );
    }
}
