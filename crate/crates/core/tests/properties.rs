use apolar_core::apolarity::{apolar_data, catalecticant, contract, dual_ring, primal_ring};
use apolar_core::artinian::{graded_hilbert_function, quotient_dim};
use apolar_core::deformations::tangent_dimension;
use apolar_core::{
    buchberger, parse_polynomial, Field, Ideal, InverseForm, Monomial, MonomialOrder, Polynomial, Ring, RingContext,
};
use proptest::prelude::*;

fn ring3() -> Ring {
    RingContext::rational(3)
}

fn poly_in(ring: Ring, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -4i64..=4), 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max_deg)
                .map(|(e, c)| (Monomial::new(e), Field::Rationals.from_i64(c))),
        )
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    poly_in(ring3(), 3, 5)
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::DegRevLex),
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::BlockElimination(1))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_parses_back(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(parse_polynomial(&text, a.ring()).unwrap(), a);
    }

    #[test]
    fn orders_are_total_and_multiplicative(
        x in prop::collection::vec(0u32..4, 3),
        y in prop::collection::vec(0u32..4, 3),
        z in prop::collection::vec(0u32..4, 3),
        o in order(),
    ) {
        let (x, y, z) = (Monomial::new(x), Monomial::new(y), Monomial::new(z));
        prop_assert_eq!(o.cmp(&x, &y), o.cmp(&y, &x).reverse());
        prop_assert_eq!(o.cmp(&x, &y), o.cmp(&x.mul(&z), &y.mul(&z)));
        prop_assert!(o.cmp(&Monomial::one(3), &x.mul(&z)) != std::cmp::Ordering::Greater);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduced_basis_is_canonical(gens in prop::collection::vec(poly_in(ring3(), 2, 4), 1..4), h in poly_in(ring3(), 1, 3), o in order()) {
        let ring = ring3();
        let a = buchberger(&ring, &gens, o);
        let mut other = gens.clone();
        other.push(&h * &gens[0]);
        other.reverse();
        let b = buchberger(&ring, &other, o);
        prop_assert_eq!(a.elements(), b.elements());
        prop_assert!(a.is_reduced());
        prop_assert!(a.s_pairs_reduce_to_zero());
        for g in &gens {
            prop_assert!(a.contains(g).unwrap());
        }
    }

    #[test]
    fn normal_form_decides_membership(gens in prop::collection::vec(poly_in(ring3(), 2, 4), 1..4), p in poly(), q in poly()) {
        let ring = ring3();
        let gb = buchberger(&ring, &gens, MonomialOrder::DegRevLex);
        let combo = &(&p * &gens[0]) + &(&q * gens.last().unwrap());
        prop_assert!(gb.normal_form(&combo).unwrap().is_zero());
        let nf = gb.normal_form(&p).unwrap();
        prop_assert!(gb.contains(&(&p - &nf)).unwrap());
        for (m, _) in nf.terms() {
            prop_assert!(!gb.lead_divides(m));
        }
    }

    #[test]
    fn intersection_and_colon(
        a in prop::collection::vec(poly_in(ring3(), 2, 3), 1..3),
        b in prop::collection::vec(poly_in(ring3(), 2, 3), 1..3),
        f in poly_in(ring3(), 1, 3),
    ) {
        let ring = ring3();
        let i = Ideal::new(&ring, a).unwrap();
        let j = Ideal::new(&ring, b).unwrap();
        let k = i.intersect(&j).unwrap();
        prop_assert!(k.is_subset_of(&i).unwrap());
        prop_assert!(k.is_subset_of(&j).unwrap());
        prop_assert!(i.product(&j).unwrap().is_subset_of(&k).unwrap());
        if !f.is_zero() {
            let colon = i.quotient_by(&f).unwrap();
            prop_assert!(i.is_subset_of(&colon).unwrap());
            for g in colon.generators() {
                prop_assert!(i.contains(&(g * &f)).unwrap());
            }
        }
    }
}

fn cubic() -> impl Strategy<Value = InverseForm> {
    poly_in(dual_ring(3, Field::Rationals), 3, 6).prop_filter_map("nonzero cubic", |p| {
        let cubic = p.homogeneous_part(3);
        InverseForm::new(cubic).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn apolar_quotient_is_gorenstein(g in cubic()) {
        let i = apolar_data(&g).unwrap().ideal;
        let h = graded_hilbert_function(&i).unwrap();
        prop_assert!(h.is_symmetric());
        prop_assert_eq!(h.total(), quotient_dim(&i).unwrap());
        for j in 0..=3 {
            prop_assert_eq!(h.at(j as usize), catalecticant(&g, j).unwrap().rank);
        }
        for gen in i.generators() {
            prop_assert!(contract(gen, g.form()).unwrap().is_zero());
        }
    }

    #[test]
    fn tangent_routes_agree(g in cubic()) {
        // graded route for homogeneous ideals against standard monomials
        let i = apolar_data(&g).unwrap().ideal;
        let t = tangent_dimension(&i, 3).unwrap();
        prop_assert_eq!(t.dim_a, quotient_dim(&i).unwrap());
        prop_assert_eq!(t.dim_a2, quotient_dim(&i.square()).unwrap());
    }

    #[test]
    fn contraction_is_a_module_action(a in poly_in(primal_ring(3, Field::Rationals), 2, 3), b in poly_in(primal_ring(3, Field::Rationals), 2, 3), g in cubic()) {
        let ab = &a * &b;
        let lhs = contract(&ab, g.form()).unwrap();
        let rhs = contract(&a, &contract(&b, g.form()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
