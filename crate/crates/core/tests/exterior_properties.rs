use poisson_forge_core::exterior::{monomial_cmp, monomials_of_degree, GradedElement, Kind, Monomial, WeightSliceBasis};
use poisson_forge_core::rational::{frac, int};
use proptest::prelude::*;

fn slice(kind: Kind, k: usize, w: i64) -> WeightSliceBasis {
    WeightSliceBasis::enumerate(kind, 4, k, w)
}

#[test]
fn de_rham_squares_to_zero_through_weight_ten() {
    for w in 0..=10 {
        for k in 0..=3 {
            let b = slice(Kind::Form, k, w);
            for j in 0..b.len() {
                let e = b.element(j);
                assert!(e.de_rham().unwrap().de_rham().unwrap().is_zero(), "k {k} w {w} j {j}");
            }
        }
    }
}

#[test]
fn star_is_inverted_through_weight_ten() {
    for k in 0..=4 {
        for w in -(k as i64)..=10 {
            let b = slice(Kind::Multivector, k, w);
            for j in 0..b.len() {
                let v = b.element(j);
                assert_eq!(v.star().unwrap().star_inv().unwrap(), v);
            }
        }
        for w in k as i64..=10 {
            let b = slice(Kind::Form, k, w);
            for j in 0..b.len() {
                let a = b.element(j);
                assert_eq!(a.star_inv().unwrap().star().unwrap(), a);
            }
        }
    }
}

#[test]
fn contraction_against_wedge_exhaustive_through_weight_six() {
    let mut checked = 0usize;
    for k in 0..=4usize {
        for l in 0..=(4 - k) {
            for wa in k as i64..=6 {
                for wb in l as i64..=(6 - wa) {
                    let (ba, bb) = (slice(Kind::Form, k, wa), slice(Kind::Form, l, wb));
                    let sign = if (k * (4 - k)) % 2 == 0 { int(1) } else { int(-1) };
                    for i in 0..ba.len() {
                        let a = ba.element(i);
                        for j in 0..bb.len() {
                            let b = bb.element(j);
                            let lhs = a.contract_into(&b.star_inv().unwrap()).unwrap();
                            let rhs = b.wedge(&a).unwrap().star_inv().unwrap().scale(&sign);
                            assert_eq!(lhs, rhs, "k {k} l {l} i {i} j {j}");
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn constant_is_the_maximum() {
    for d in 1..=5 {
        for m in monomials_of_degree(4, d) {
            assert_eq!(monomial_cmp(&Monomial::one(4), &m).unwrap(), core::cmp::Ordering::Greater);
        }
    }
}

fn element(kind: Kind, max_weight: i64) -> impl Strategy<Value = GradedElement> {
    (0usize..=4, 0i64..=max_weight).prop_flat_map(move |(k, w)| {
        let w = if kind == Kind::Form { w.max(k as i64) } else { w - k as i64 };
        let b = slice(kind, k, w);
        let n = b.len().max(1);
        proptest::collection::vec((0..n, -3i64..=3, 1i64..=2), 0..5).prop_map(move |terms| {
            let mut e = GradedElement::zero(kind, 4, k);
            for (j, a, d) in terms {
                if j < b.len() {
                    e.add_scaled(&b.element(j), &frac(a, d)).unwrap();
                }
            }
            e
        })
    })
}

fn monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..4, 4).prop_map(Monomial::new)
}

fn parity_sign(p: usize) -> poisson_forge_core::Rational {
    if p % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn wedge_is_graded_commutative(a in element(Kind::Form, 6), b in element(Kind::Form, 6)) {
        let (p, q) = (a.degree(), b.degree());
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().scale(&parity_sign(p * q)));
    }

    #[test]
    fn wedge_is_associative(a in element(Kind::Form, 4), b in element(Kind::Form, 4), c in element(Kind::Form, 4)) {
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multivector_wedge_is_graded_commutative(a in element(Kind::Multivector, 4), b in element(Kind::Multivector, 4)) {
        let (p, q) = (a.degree(), b.degree());
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().scale(&parity_sign(p * q)));
    }

    #[test]
    fn de_rham_is_a_derivation(a in element(Kind::Form, 5), b in element(Kind::Form, 5)) {
        let lhs = a.wedge(&b).unwrap().de_rham().unwrap();
        let rhs = &a.de_rham().unwrap().wedge(&b).unwrap() + &a.wedge(&b.de_rham().unwrap()).unwrap().scale(&parity_sign(a.degree()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_round_trips(v in element(Kind::Multivector, 8)) {
        prop_assert_eq!(v.star().unwrap().star_inv().unwrap(), v);
    }

    #[test]
    fn order_is_total(a in monomial(), b in monomial(), c in monomial()) {
        use core::cmp::Ordering::*;
        let ab = monomial_cmp(&a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), monomial_cmp(&b, &a).unwrap());
        prop_assert_eq!(ab == Equal, a == b);
        if ab != Less && monomial_cmp(&b, &c).unwrap() != Less {
            prop_assert_ne!(monomial_cmp(&a, &c).unwrap(), Less);
        }
    }
}
