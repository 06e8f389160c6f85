//! Normal forms against a reduced standard basis under the local degree
//! ordering, cross-checked against plain linear algebra.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::catalog::{f1, f2, jacobian_generators};
use crate::error::{AlgebraError, Result};
use crate::exterior::{coordinates, monomials_of_degree, Monomial, Polynomial};
use crate::linalg::{rank_of_vectors, sparse_from_dense, SparseVec, Subspace};
use crate::rational::Rational;

/// `LM(f)` with its coefficient: the greatest monomial under the local
/// ordering (lower total degree first, then lexicographic exponents).
pub fn leading_monomial(f: &Polynomial) -> Result<(Monomial, Rational)> {
    f.leading()
}

/// Generators of an ideal together with the verified reducedness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedIdealBasis {
    generators: Vec<Polynomial>,
    leading: Vec<Monomial>,
    reduced: bool,
    defect: Option<String>,
}

impl OrderedIdealBasis {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        let mut leading = Vec::new();
        for g in &generators {
            leading.push(g.leading()?.0);
        }
        let mut basis = OrderedIdealBasis { generators, leading, reduced: false, defect: None };
        basis.defect = basis.find_defect();
        basis.reduced = basis.defect.is_none();
        Ok(basis)
    }

    /// The four quadrics generating the coefficient ideal of `df1 ^ df2`.
    pub fn lefschetz_jacobian() -> Self {
        Self::new(jacobian_generators().to_vec()).expect("nonzero generators")
    }

    fn find_defect(&self) -> Option<String> {
        for (i, g) in self.generators.iter().enumerate() {
            let (lm, lc) = g.leading().expect("nonzero");
            if !lc.is_one() {
                return Some(alloc::format!("generator {i} has leading coefficient {lc}"));
            }
            for (j, other) in self.leading.iter().enumerate() {
                if i != j && other.divides(&lm) {
                    return Some(alloc::format!("leading monomial of generator {j} divides that of {i}"));
                }
            }
            for (m, _) in g.terms() {
                if *m != lm && self.leading.iter().any(|l| l.divides(m)) {
                    return Some(alloc::format!("tail of generator {i} is not reduced at {m}"));
                }
            }
        }
        None
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Why the basis is not reduced, if it is not.
    pub fn defect(&self) -> Option<&str> {
        self.defect.as_deref()
    }

    /// Monomials of degree `d` outside the leading ideal.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.dim(), d)
            .into_iter()
            .filter(|m| !self.leading.iter().any(|l| l.divides(m)))
            .collect()
    }

    fn dim(&self) -> usize {
        self.generators.first().map_or(0, Polynomial::dim)
    }
}

/// `f = sum_i q_i g_i + remainder` with no monomial of the remainder in
/// the leading ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl Division {
    /// Recompute `sum q_i g_i + r` and compare with `f`.
    pub fn certifies(&self, f: &Polynomial, basis: &OrderedIdealBasis) -> bool {
        let mut sum = self.remainder.clone();
        for (q, g) in self.quotients.iter().zip(basis.generators()) {
            sum = &sum + &(q * g);
        }
        sum == *f
    }
}

/// Full reduction of `f` by the basis. Every generator is homogeneous, so
/// each homogeneous part of `f` is reduced on its own and the process
/// stays inside one finite degree slice.
pub fn divide(f: &Polynomial, basis: &OrderedIdealBasis) -> Result<Division> {
    if !basis.is_reduced() {
        return Err(AlgebraError::NotReduced(basis.defect().unwrap_or_default().into()));
    }
    let n = f.dim();
    let mut quotients = alloc::vec![Polynomial::zero(n); basis.generators().len()];
    let mut remainder = Polynomial::zero(n);
    let mut rest = f.clone();
    // always treat the greatest remaining monomial
    while let Ok((m, c)) = rest.leading() {
        match basis.leading.iter().position(|l| l.divides(&m)) {
            Some(i) => {
                let shift = basis.leading[i].quotient_of(&m);
                quotients[i].add_term(shift.clone(), c.clone());
                rest.add_scaled(&basis.generators[i].mul_monomial(&shift, &Rational::one()), &-c);
            }
            None => {
                remainder.add_term(m.clone(), c.clone());
                rest.add_term(m, -c);
            }
        }
    }
    Ok(Division { quotients, remainder })
}

/// `NF(f | G)`.
pub fn normal_form(f: &Polynomial, basis: &OrderedIdealBasis) -> Result<Polynomial> {
    Ok(divide(f, basis)?.remainder)
}

/// Span of the degree-`d` slice of the ideal, in the monomial basis of
/// that degree.
fn ideal_slice(basis: &OrderedIdealBasis, d: u32) -> (Vec<Monomial>, Vec<SparseVec>) {
    let n = basis.dim();
    let monomials = monomials_of_degree(n, d);
    let mut vectors = Vec::new();
    for g in basis.generators() {
        let gd = g.max_degree().unwrap_or(0);
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(n, d - gd) {
            let p = g.mul_monomial(&m, &Rational::one());
            if let Some(v) = coordinates(&p, &monomials) {
                vectors.push(sparse_from_dense(&v));
            }
        }
    }
    (monomials, vectors)
}

/// Dimension of the degree-`d` slice of the ideal.
pub fn ideal_dim(basis: &OrderedIdealBasis, d: u32) -> usize {
    let (monomials, vectors) = ideal_slice(basis, d);
    rank_of_vectors(monomials.len(), &vectors)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub normal_form_zero: bool,
    pub linear_member: bool,
    /// The division certificate recomputes to the input.
    pub certified: bool,
}

impl MembershipVerdict {
    pub fn agree(&self) -> bool {
        self.normal_form_zero == self.linear_member && self.certified
    }
}

/// Ideal membership of a homogeneous `f` decided twice: by `NF(f | G) = 0`
/// and by rank against the degree slice of the ideal.
pub fn membership_crosscheck(f: &Polynomial, basis: &OrderedIdealBasis) -> Result<MembershipVerdict> {
    if !f.is_homogeneous() {
        return Err(AlgebraError::InvalidArgument("membership is checked on homogeneous input".into()));
    }
    let division = divide(f, basis)?;
    let d = f.max_degree().unwrap_or(0);
    let (monomials, vectors) = ideal_slice(basis, d);
    let mut space = Subspace::new(monomials.len());
    for v in &vectors {
        space.insert(v);
    }
    let target = coordinates(f, &monomials).map(|v| sparse_from_dense(&v)).unwrap_or_default();
    Ok(MembershipVerdict {
        normal_form_zero: division.remainder.is_zero(),
        linear_member: f.is_zero() || space.contains(&target),
        certified: division.certifies(f, basis),
    })
}

/// Degree-`d` intersection of the ideal with the Casimir and transverse
/// parameter slices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirIntersection {
    pub degree: u32,
    pub ideal: usize,
    pub casimir: usize,
    pub transverse: usize,
    /// `dim (J cap R[[f1, f2]])` in degree `d`.
    pub ideal_cap_casimir: usize,
    /// `dim (J cap (R[[f1, f2]] + M))` in degree `d`.
    pub ideal_cap_sum: usize,
    /// `dim ((f1^2 + f2^2) R[[f1, f2]])` in degree `d`.
    pub multiples: usize,
    /// The multiples lie in the ideal.
    pub multiples_in_ideal: bool,
    /// `dim (R[[f1, f2]] cap M)` in degree `d`.
    pub casimir_cap_transverse: usize,
}

impl CasimirIntersection {
    pub fn passed(&self) -> bool {
        self.ideal_cap_casimir == self.multiples
            && self.ideal_cap_sum == self.multiples
            && self.multiples_in_ideal
            && self.casimir_cap_transverse == 0
    }
}

fn f_monomials(d: u32) -> Vec<Polynomial> {
    if d % 2 != 0 {
        return Vec::new();
    }
    let s = d / 2;
    let (a, b) = (f1(), f2());
    (0..=s).rev().map(|i| &a.pow(i) * &b.pow(s - i)).collect()
}

/// `x_i x2^(2a) x4^b` of total degree `d`.
fn transverse_monomials(d: u32) -> Vec<Polynomial> {
    if d == 0 {
        return Vec::new();
    }
    let m = d - 1;
    let x = |i| Polynomial::var(4, i);
    let mut out = Vec::new();
    for i in 0..4 {
        for a in (0..=m / 2).rev() {
            out.push(&(&x(i) * &x(1).pow(2 * a)) * &x(3).pow(m - 2 * a));
        }
    }
    out
}

fn intersection_dim(dim: usize, a: &[SparseVec], b: &[SparseVec]) -> usize {
    let both: Vec<SparseVec> = a.iter().chain(b).cloned().collect();
    rank_of_vectors(dim, a) + rank_of_vectors(dim, b) - rank_of_vectors(dim, &both)
}

/// Linear-algebra check, degree by degree, that the ideal meets
/// `R[[f1, f2]] + M` exactly in `(f1^2 + f2^2) R[[f1, f2]]` and that
/// `R[[f1, f2]]` and `M = sum x_i R[[x2^2, x4]]` meet trivially.
pub fn casimir_intersection_check(d_max: u32) -> Vec<CasimirIntersection> {
    let basis = OrderedIdealBasis::lefschetz_jacobian();
    let sum_of_squares = &f1().pow(2) + &f2().pow(2);
    (0..=d_max)
        .map(|d| {
            let (monomials, ideal) = ideal_slice(&basis, d);
            let vecs = |ps: &[Polynomial]| -> Vec<SparseVec> {
                ps.iter().map(|p| sparse_from_dense(&coordinates(p, &monomials).expect("degree d"))).collect()
            };
            let casimir = vecs(&f_monomials(d));
            let transverse = vecs(&transverse_monomials(d));
            let multiples_p: Vec<Polynomial> =
                if d >= 4 { f_monomials(d - 4).iter().map(|m| &sum_of_squares * m).collect() } else { Vec::new() };
            let multiples = vecs(&multiples_p);
            let sum: Vec<SparseVec> = casimir.iter().chain(&transverse).cloned().collect();
            let n = monomials.len();
            let mut ideal_space = Subspace::new(n);
            for v in &ideal {
                ideal_space.insert(v);
            }
            CasimirIntersection {
                degree: d,
                ideal: ideal_space.rank(),
                casimir: rank_of_vectors(n, &casimir),
                transverse: rank_of_vectors(n, &transverse),
                ideal_cap_casimir: intersection_dim(n, &ideal, &casimir),
                ideal_cap_sum: intersection_dim(n, &ideal, &sum),
                multiples: rank_of_vectors(n, &multiples),
                multiples_in_ideal: multiples.iter().all(|v| ideal_space.contains(v)),
                casimir_cap_transverse: intersection_dim(n, &casimir, &transverse),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(4, i - 1)
    }

    fn g() -> OrderedIdealBasis {
        OrderedIdealBasis::lefschetz_jacobian()
    }

    #[test]
    fn leading_monomial_examples() {
        let (m, c) = leading_monomial(&f1()).unwrap();
        assert_eq!((m, c), (Monomial::new(alloc::vec![2, 0, 0, 0]), int(1)));
        let (m, _) = leading_monomial(&(&Polynomial::one(4) + &x(1))).unwrap();
        assert!(m.is_one());
        assert_eq!(leading_monomial(&(&x(2) + &x(1))).unwrap().0, Monomial::var(4, 0));
        assert_eq!(leading_monomial(&Polynomial::zero(4)), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn jacobian_basis_is_reduced() {
        let b = g();
        assert!(b.is_reduced(), "{:?}", b.defect());
        let lms: Vec<Monomial> = b.leading_monomials().to_vec();
        let want = [[2, 0, 0, 0], [0, 0, 2, 0], [1, 0, 1, 0], [1, 0, 0, 1]];
        assert_eq!(lms, want.map(|e| Monomial::new(e.to_vec())));
    }

    #[test]
    fn non_reduced_bases_are_flagged() {
        let b = OrderedIdealBasis::new(alloc::vec![x(1).scale(&int(2))]).unwrap();
        assert!(!b.is_reduced());
        assert!(matches!(normal_form(&x(1), &b), Err(AlgebraError::NotReduced(_))));
        let b = OrderedIdealBasis::new(alloc::vec![x(1), &x(1) * &x(2)]).unwrap();
        assert!(!b.is_reduced());
        let b = OrderedIdealBasis::new(alloc::vec![&x(1) + &x(2), x(2)]).unwrap();
        assert!(b.defect().unwrap().contains("tail"));
    }

    #[test]
    fn normal_form_examples() {
        let b = g();
        assert_eq!(normal_form(&(&x(1) * &x(4)), &b).unwrap(), &x(2) * &x(3));
        assert!(normal_form(&(&f1().pow(2) + &f2().pow(2)), &b).unwrap().is_zero());
        assert_eq!(normal_form(&x(1), &b).unwrap(), x(1));
    }

    #[test]
    fn sum_of_squares_expansion() {
        let [a, b, c, d] = jacobian_generators();
        let rhs = &(&(&a.pow(2) + &b.pow(2)) + &c.pow(2).scale(&int(2))) - &d.pow(2).scale(&int(2));
        assert_eq!(&f1().pow(2) + &f2().pow(2), rhs);
    }

    #[test]
    fn powers_of_f1() {
        let b = g();
        let s = &x(2).pow(2) + &x(4).pow(2);
        for m in 1..=4u32 {
            let nf = normal_form(&f1().pow(m), &b).unwrap();
            assert_eq!(nf, s.pow(m).scale(&int(-2).pow(m as i32)), "m = {m}");
            let v = membership_crosscheck(&f1().pow(m), &b).unwrap();
            assert!(v.agree());
            assert!(!v.linear_member);
        }
    }

    #[test]
    fn odd_cubic_is_not_a_member() {
        let f = &(&x(1) * &x(2)) * &x(3);
        let v = membership_crosscheck(&f, &g()).unwrap();
        assert!(v.agree() && !v.linear_member && !v.normal_form_zero);
    }

    #[test]
    fn quotient_dimensions() {
        let b = g();
        for d in 1..=10u32 {
            assert_eq!(b.standard_monomials(d).len(), 2 * (d as usize + 1), "d = {d}");
            let total = crate::exterior::count_of_degree(4, d);
            assert_eq!(total - ideal_dim(&b, d), 2 * (d as usize + 1));
        }
    }

    #[test]
    fn intersection_examples() {
        let r = casimir_intersection_check(10);
        assert!(r.iter().all(CasimirIntersection::passed), "{r:?}");
        assert_eq!(r[4].ideal_cap_sum, 1);
        assert_eq!(r[2].ideal_cap_sum, 0);
        assert_eq!(r[3].ideal_cap_sum, 0);
        assert_eq!(r[8].ideal_cap_casimir, 3);
    }

    fn homogeneous(d: u32) -> impl Strategy<Value = Polynomial> {
        let ms = monomials_of_degree(4, d);
        let n = ms.len();
        proptest::collection::vec((0..n, -3i64..=3, 1i64..=2), 1..6).prop_map(move |terms| {
            Polynomial::from_terms(4, terms.into_iter().map(|(i, a, b)| (ms[i].clone(), frac(a, b))))
        })
    }

    fn member(d: u32) -> impl Strategy<Value = Polynomial> {
        let gens = jacobian_generators();
        proptest::collection::vec(homogeneous(d - 2), 4).prop_map(move |qs| {
            let mut s = Polynomial::zero(4);
            for (q, g) in qs.iter().zip(&gens) {
                s = &s + &(q * g);
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn reduction_is_certified(f in (0u32..=8).prop_flat_map(homogeneous)) {
            let b = g();
            let div = divide(&f, &b).unwrap();
            prop_assert!(div.certifies(&f, &b));
            let r = &div.remainder;
            prop_assert!(r.terms().all(|(m, _)| !b.leading_monomials().iter().any(|l| l.divides(m))));
            prop_assert_eq!(&normal_form(r, &b).unwrap(), r);
            prop_assert!(membership_crosscheck(&f, &b).unwrap().agree());
        }

        #[test]
        fn constructed_members(f in (2u32..=6).prop_flat_map(member)) {
            let v = membership_crosscheck(&f, &g()).unwrap();
            prop_assert!(v.agree());
            prop_assert!(v.linear_member);
        }

        #[test]
        fn normal_form_is_linear(a in homogeneous(4), b in homogeneous(4), c in -3i64..=3) {
            let basis = g();
            let lhs = normal_form(&(&a + &b.scale(&int(c))), &basis).unwrap();
            let rhs = &normal_form(&a, &basis).unwrap() + &normal_form(&b, &basis).unwrap().scale(&int(c));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
