//! Fixed inputs shared by the benchmarks.

use apolar_core::{Field, Ideal, InverseForm, Polynomial, Result, RingContext};

/// The cyclic-`n` system in `x1..xn`: elementary symmetric-like sums of
/// consecutive products, and `x1 * ... * xn - 1`.
pub fn cyclic(n: usize) -> Result<Ideal> {
    let ring = RingContext::rational(n);
    let x: Vec<Polynomial> = (0..n).map(|i| Polynomial::var_at(&ring, i)).collect();
    let mut gens = Vec::with_capacity(n);
    for len in 1..n {
        let mut sum = Polynomial::zero(&ring);
        for start in 0..n {
            let term = (0..len).fold(Polynomial::one(&ring), |acc, k| &acc * &x[(start + k) % n]);
            sum = &sum + &term;
        }
        gens.push(sum);
    }
    let all = x.iter().fold(Polynomial::one(&ring), |acc, v| &acc * v);
    gens.push(&all - &Polynomial::one(&ring));
    Ideal::new(&ring, gens)
}

/// A non-cone cubic in four variables whose apolar ideal has no cubic
/// minimal generators.
pub fn generic_cubic() -> Result<InverseForm> {
    InverseForm::parse(
        "y1^3 + y2^3 + y3^3 + y4^3 + y1*y2*y3 - 2*y2*y3*y4 + 3*y1*y3*y4",
        4,
        Field::Rationals,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use apolar_core::artinian::quotient_dim;

    #[test]
    fn cyclic_three_has_six_solutions() {
        assert_eq!(quotient_dim(&cyclic(3).unwrap()).unwrap(), 6);
    }

    #[test]
    fn generic_cubic_is_not_a_cone() {
        let g = generic_cubic().unwrap();
        assert_eq!(apolar_core::apolarity::essential_variables(&g).unwrap(), 4);
    }
}
