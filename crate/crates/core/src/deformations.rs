//! Tangent spaces to the Hilbert scheme at zero-dimensional schemes,
//! ambient changes, disjoint unions and fibers of one-parameter families.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::artinian::{graded_hilbert_function, quotient_dim};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, Scalar};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::same_ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentReport {
    /// `dim_k S/I`, the degree of the scheme.
    pub dim_a: usize,
    /// `dim_k S/I^2`.
    pub dim_a2: usize,
    pub h0: usize,
    pub ambient_n: usize,
    /// `h0 > dim_a * ambient_n`.
    pub obstructed: bool,
}

impl TangentReport {
    /// `h0 - dN`, unchanged by adding ambient variables.
    pub fn excess(&self) -> i64 {
        self.h0 as i64 - (self.dim_a * self.ambient_n) as i64
    }
}

/// `h0 = dim S/I^2 - dim S/I` in an `ambient_n`-dimensional affine space.
/// Rings with fewer variables are padded with unused ones first.
/// Homogeneous ideals are measured degree by degree, others through
/// standard monomials.
pub fn tangent_dimension(i: &Ideal, ambient_n: usize) -> Result<TangentReport> {
    let n = i.ring().nvars();
    if n > ambient_n {
        return Err(AlgebraError::Precondition(format!(
            "ideal lives in {n} variables, more than the ambient {ambient_n}"
        )));
    }
    if n < ambient_n {
        return tangent_dimension(&embed_in_higher_ambient(i, ambient_n - n)?, ambient_n);
    }
    let (dim_a, dim_a2) = if i.is_homogeneous() {
        (
            graded_hilbert_function(i)?.total(),
            graded_hilbert_function(&i.square())?.total(),
        )
    } else {
        (quotient_dim(i)?, quotient_dim(&i.square())?)
    };
    let h0 = dim_a2 - dim_a;
    Ok(TangentReport {
        dim_a,
        dim_a2,
        h0,
        ambient_n,
        obstructed: h0 > dim_a * ambient_n,
    })
}

/// Same scheme inside a larger affine space: fresh variables are appended
/// and added as generators.
pub fn embed_in_higher_ambient(i: &Ideal, extra: usize) -> Result<Ideal> {
    if extra == 0 {
        return Err(AlgebraError::Precondition("need at least one extra variable".into()));
    }
    let mut names: Vec<String> = Vec::with_capacity(extra);
    let mut ring = i.ring().clone();
    for _ in 0..extra {
        let name = ring.fresh_name("x");
        ring = ring.with_back_vars(&[name.as_str()])?;
        names.push(name);
    }
    let mut gens = i
        .generators()
        .iter()
        .map(|g| g.map_to_ring(&ring))
        .collect::<Result<Vec<_>>>()?;
    for name in &names {
        gens.push(Polynomial::var(&ring, name)?);
    }
    Ideal::new(&ring, gens)
}

/// Whether `h0` of the union `V(I1) ∪ V(I2)` is the sum of the parts.
pub fn additivity_check(i1: &Ideal, i2: &Ideal, ambient_n: usize) -> Result<bool> {
    if !i1.sum(i2)?.is_unit() {
        return Err(AlgebraError::NotDisjoint);
    }
    let whole = tangent_dimension(&i1.intersect(i2)?, ambient_n)?;
    let a = tangent_dimension(i1, ambient_n)?;
    let b = tangent_dimension(i2, ambient_n)?;
    Ok(whole.h0 == a.h0 + b.h0)
}

/// Specializes the parameter `param` to `value` and drops it from the ring.
pub fn fiber(family: &Ideal, param: &str, value: &Scalar) -> Result<Ideal> {
    let ring = family.ring();
    let idx = ring
        .var_index(param)
        .ok_or_else(|| AlgebraError::UnknownVariable(param.to_string()))?;
    if value.field() != ring.field() {
        return Err(AlgebraError::RingMismatch);
    }
    let target = ring.without_var(idx)?;
    let mut assign = BTreeMap::new();
    assign.insert(param.to_string(), Polynomial::constant(&target, value.clone()));
    let gens = family
        .generators()
        .iter()
        .map(|g| g.substitute(&assign, &target))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&target, gens)
}

#[derive(Clone, Debug)]
pub struct FamilyFiberReport {
    pub parameter_values: Vec<Scalar>,
    pub fiber_dims: Vec<usize>,
    pub special_matches_catalog: Option<bool>,
    pub decomposition_verified: Option<bool>,
}

impl FamilyFiberReport {
    /// Equal fiber dimension at every sample.
    pub fn is_flat(&self) -> bool {
        self.fiber_dims.windows(2).all(|w| w[0] == w[1])
    }
}

/// `{0, 1, 2, 1/2}` in `field`.
pub fn default_samples(field: Field) -> Vec<Scalar> {
    let half = field.from_i64(2).inverse().expect("characteristic is not 2");
    vec![field.zero(), field.one(), field.from_i64(2), half]
}

/// Fiber dimensions at sample parameter values; at least three samples,
/// one of them zero.
pub fn flatness_certificate(family: &Ideal, param: &str, samples: &[Scalar]) -> Result<FamilyFiberReport> {
    if samples.len() < 3 || !samples.iter().any(Scalar::is_zero) {
        return Err(AlgebraError::Precondition(
            "need at least three samples including 0".into(),
        ));
    }
    let fiber_dims = samples
        .iter()
        .map(|v| quotient_dim(&fiber(family, param, v)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyFiberReport {
        parameter_values: samples.to_vec(),
        fiber_dims,
        special_matches_catalog: None,
        decomposition_verified: None,
    })
}

/// `whole = ∩ parts`.
pub fn verify_decomposition(whole: &Ideal, parts: &[Ideal]) -> Result<bool> {
    let Some((first, rest)) = parts.split_first() else {
        return Err(AlgebraError::Precondition("no parts given".into()));
    };
    if parts.iter().any(|p| !same_ring(p.ring(), whole.ring())) {
        return Err(AlgebraError::RingMismatch);
    }
    let mut acc = first.clone();
    for p in rest {
        acc = acc.intersect(p)?;
    }
    whole.equals(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Ring, RingContext};

    fn ideal(r: &Ring, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn reduced_point() {
        for n in 1..=4 {
            let r = RingContext::rational(n);
            let t = tangent_dimension(&Ideal::maximal(&r), n).unwrap();
            assert_eq!((t.dim_a, t.dim_a2, t.h0, t.obstructed), (1, n + 1, n, false));
            let e = embed_in_higher_ambient(&Ideal::maximal(&r), 1).unwrap();
            assert_eq!(tangent_dimension(&e, n + 1).unwrap().h0, n + 1);
        }
    }

    #[test]
    fn padding_matches_explicit_embedding() {
        let r = RingContext::rational(2);
        let i = ideal(&r, &["x1^2", "x2^2"]);
        let a = tangent_dimension(&i, 3).unwrap();
        let b = tangent_dimension(&embed_in_higher_ambient(&i, 1).unwrap(), 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.excess(), tangent_dimension(&i, 2).unwrap().excess());
    }

    #[test]
    fn graded_and_standard_monomial_routes_agree() {
        let r = RingContext::rational(3);
        let i = ideal(&r, &["x1^2 - x2*x3", "x2^2", "x3^2 - x1*x2", "x1*x3"]);
        let t = tangent_dimension(&i, 3).unwrap();
        assert_eq!(t.dim_a, quotient_dim(&i).unwrap());
        assert_eq!(t.dim_a2, quotient_dim(&i.square()).unwrap());
    }

    #[test]
    fn two_points() {
        let r = RingContext::rational(4);
        let p = Ideal::maximal(&r);
        let q = ideal(&r, &["x1 - 1", "x2", "x3", "x4"]);
        assert!(additivity_check(&p, &q, 4).unwrap());
        assert_eq!(additivity_check(&p, &p, 4).unwrap_err(), AlgebraError::NotDisjoint);
    }

    #[test]
    fn fibers() {
        let r = RingContext::new(&["x1", "x2", "b"], Field::Rationals).unwrap();
        let fam = ideal(&r, &["x1^2 - b*x1", "x2"]);
        let report = flatness_certificate(&fam, "b", &default_samples(Field::Rationals)).unwrap();
        assert_eq!(report.fiber_dims, vec![2, 2, 2, 2]);
        assert!(report.is_flat());
        let constant = ideal(&r, &["x1^2", "x2"]);
        let f = fiber(&constant, "b", &Field::Rationals.one()).unwrap();
        assert_eq!(f.generators().len(), 2);
        assert_eq!(f.generators()[0].to_string(), "x1^2");
        assert!(matches!(
            fiber(&fam, "c", &Field::Rationals.one()),
            Err(AlgebraError::UnknownVariable(_))
        ));
        assert!(flatness_certificate(&fam, "b", &default_samples(Field::Rationals)[1..]).is_err());
    }

    #[test]
    fn decompositions() {
        let r = RingContext::rational(2);
        assert!(verify_decomposition(&ideal(&r, &["x1*x2"]), &[ideal(&r, &["x1"]), ideal(&r, &["x2"])]).unwrap());
        assert!(!verify_decomposition(&ideal(&r, &["x1^2"]), &[ideal(&r, &["x1"]), ideal(&r, &["x1"])]).unwrap());
    }
}
