use poisson_forge::{parse_element, parse_polynomial};
use poisson_forge_core::exterior::monomials_of_degree;
use poisson_forge_core::rational::frac;
use poisson_forge_core::{ExteriorIndex, GradedElement, Kind, Monomial, Polynomial};
use proptest::prelude::*;

fn polynomial() -> impl Strategy<Value = Polynomial> {
    let monos: Vec<Monomial> = (0..=4).flat_map(|d| monomials_of_degree(4, d)).collect();
    let n = monos.len();
    proptest::collection::vec((0..n, -40i64..=40, 1i64..=9), 0..8).prop_map(move |terms| {
        Polynomial::from_terms(4, terms.into_iter().map(|(i, a, b)| (monos[i].clone(), frac(a, b))))
    })
}

fn element(kind: Kind) -> impl Strategy<Value = GradedElement> {
    (0usize..=4, proptest::collection::vec(polynomial(), 6)).prop_map(move |(k, coeffs)| {
        let mut e = GradedElement::zero(kind, 4, k);
        let idx = poisson_forge_core::exterior::indices_of_degree(4, k);
        for (i, p) in idx.iter().zip(coeffs) {
            e.add_component(*i, &p);
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printed_polynomials_parse_back(p in polynomial()) {
        prop_assert_eq!(parse_polynomial(&p.to_string(), 4).unwrap(), p);
    }

    #[test]
    fn printed_forms_parse_back(a in element(Kind::Form)) {
        // zero prints as "0" whatever its degree
        prop_assume!(!a.is_zero());
        prop_assert_eq!(parse_element(&a.to_string(), 4, Kind::Form).unwrap(), a);
    }

    #[test]
    fn printed_fields_parse_back(v in element(Kind::Multivector)) {
        prop_assume!(!v.is_zero());
        prop_assert_eq!(parse_element(&v.to_string(), 4, Kind::Multivector).unwrap(), v);
    }

    #[test]
    fn whitespace_is_insignificant(p in polynomial()) {
        let spaced = p.to_string().replace('*', "\t* ").replace('^', " ^\n").replace('/', " / ");
        prop_assert_eq!(parse_polynomial(&spaced, 4).unwrap(), p);
    }

    #[test]
    fn garbage_never_panics(s in "[x0-9+*^()\\[\\]/ de-]{0,24}") {
        let _ = parse_polynomial(&s, 4);
        let _ = parse_element(&s, 4, Kind::Form);
    }
}

#[test]
fn wedge_groups_follow_written_order() {
    let a = parse_element("[dx3^dx1^dx2]", 4, Kind::Form).unwrap();
    let idx = ExteriorIndex::from_axes(&[0, 1, 2]).unwrap();
    assert_eq!(a, GradedElement::monomial_element(Kind::Form, idx, Polynomial::one(4)));
}
