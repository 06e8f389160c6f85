use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::catalog::LefschetzCatalog;
use crate::error::{AlgebraError, Result};
use crate::exterior::{monomials_of_degree, GradedElement, Kind, Monomial, Polynomial};
use crate::linalg::{SparseVec, Subspace};
use crate::poisson::schouten;
use crate::rational::{int, Rational};

/// One correction: the field `X` of weight `weight` that moves the
/// degree-`weight` part of the coefficient into `R[[f1, f2]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizationStep {
    pub weight: u32,
    /// The part of the coefficient kept, a combination of `f1^a f2^b`.
    pub kept: Polynomial,
    /// `X~` with `d_pi X~ = (h_i - kept) pi` and `X~(f1) = X~(f2) = 0`.
    pub solution: GradedElement,
    /// `X = X~ / h(0)`, the field whose flow is applied.
    pub field: GradedElement,
    /// `d_pi X~` recomputed and compared against `(h_i - kept) pi`.
    pub certified: bool,
    /// The flowed bivector equals `h' pi` up to the truncation.
    pub flow_certified: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Normalization {
    pub max_weight: u32,
    /// `q` with `q pi` equivalent to `g pi` up to the truncation.
    pub q: Polynomial,
    /// `q` as `(a, b, c)` meaning `c f1^a f2^b`.
    pub q_in_f: Vec<(u32, u32, Rational)>,
    pub transcript: Vec<NormalizationStep>,
}

impl Normalization {
    pub fn all_certified(&self) -> bool {
        self.transcript.iter().all(|s| s.certified && s.flow_certified)
    }
}

fn index_of(monomials: &[Monomial]) -> BTreeMap<Monomial, usize> {
    monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

fn place(p: &Polynomial, index: &BTreeMap<Monomial, usize>, offset: usize, out: &mut BTreeMap<usize, Rational>) {
    for (m, c) in p.terms() {
        let e = out.entry(offset + index[m]).or_insert_with(Rational::default);
        *e += c;
    }
}

fn divergence(x: &GradedElement) -> Polynomial {
    let coeffs = x.axis_coefficients();
    let mut out = Polynomial::zero(x.dim());
    for (i, c) in coeffs.iter().enumerate() {
        out = &out + &c.derivative(i);
    }
    out
}

/// `exp(L) h` with `L h = X(h) - div(X) h`, truncated at degree `w_max`:
/// the coefficient of `exp([X, .]) (h pi)` for a field tangent to the
/// fibres.
fn flow_coefficient(x: &GradedElement, h: &Polynomial, w_max: u32) -> Result<Polynomial> {
    let div = divergence(x);
    let mut term = h.clone();
    let mut sum = h.clone();
    for n in 1.. {
        let next = &x.apply_to(&term)? - &(&div * &term);
        term = next.truncate(w_max).scale(&(Rational::one() / int(n)));
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
    }
    Ok(sum)
}

/// `exp([X, .]) P` through the Schouten bracket, truncated at weight
/// `w_max`.
fn flow_bivector(x: &GradedElement, p: &GradedElement, w_max: u32) -> Result<GradedElement> {
    let w = w_max as i64;
    let mut term = p.truncate_weight(w);
    let mut sum = term.clone();
    for n in 1.. {
        term = schouten(x, &term)?.truncate_weight(w).scale(&(Rational::one() / int(n)));
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Solve `div X~ + sum c_j m_j = target` for a field `X~` with
/// coefficients of degree `i + 1` annihilating `f1` and `f2`, where `m_j`
/// runs over the `f1^a f2^b` of degree `i`.
fn solve_step(c: &LefschetzCatalog, i: u32, target: &Polynomial) -> Result<Option<(GradedElement, Vec<(u32, u32, Rational)>)>> {
    let n = 4;
    let source = monomials_of_degree(n, i + 1);
    let fs = monomials_of_degree(n, i + 2);
    let ds = monomials_of_degree(n, i);
    let (fi, di) = (index_of(&fs), index_of(&ds));
    // rows: X(f1) | X(f2) | div X + kept
    let dim = 2 * fs.len() + ds.len();
    let mut space = Subspace::with_certificates(dim);
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    for axis in 0..n {
        for m in &source {
            let mut coeffs = alloc::vec![Polynomial::zero(n); n];
            coeffs[axis] = Polynomial::term(m.clone(), Rational::one());
            let x = GradedElement::from_coefficients(Kind::Multivector, &coeffs);
            let mut col = BTreeMap::new();
            place(&x.apply_to(&c.f1)?, &fi, 0, &mut col);
            place(&x.apply_to(&c.f2)?, &fi, fs.len(), &mut col);
            place(&divergence(&x), &di, 2 * fs.len(), &mut col);
            let col: SparseVec = col.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            space.insert(&col);
            unknowns.push((axis, m.clone()));
        }
    }
    let mut kept: Vec<(u32, u32)> = Vec::new();
    if i % 2 == 0 {
        let s = i / 2;
        for a in (0..=s).rev() {
            let mut col = BTreeMap::new();
            place(&c.f_monomial(a, s - a), &di, 2 * fs.len(), &mut col);
            let col: SparseVec = col.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            space.insert(&col);
            kept.push((a, s - a));
        }
    }
    let mut rhs = BTreeMap::new();
    place(target, &di, 2 * fs.len(), &mut rhs);
    let rhs: SparseVec = rhs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    let Some(combo) = space.coordinates(&rhs) else { return Ok(None) };
    let mut coeffs = alloc::vec![Polynomial::zero(n); n];
    let mut q = Vec::new();
    for (g, v) in combo {
        if g < unknowns.len() {
            let (axis, m) = &unknowns[g];
            coeffs[*axis].add_term(m.clone(), v);
        } else {
            let (a, b) = kept[g - unknowns.len()];
            q.push((a, b, v));
        }
    }
    q.sort_by(|x, y| y.0.cmp(&x.0));
    Ok(Some((GradedElement::from_coefficients(Kind::Multivector, &coeffs), q)))
}

fn f_span(c: &LefschetzCatalog, q: &[(u32, u32, Rational)]) -> Polynomial {
    let mut out = Polynomial::zero(4);
    for (a, b, v) in q {
        out.add_scaled(&c.f_monomial(*a, *b), v);
    }
    out
}

/// Bring `g pi` to the normal form `q pi` with `q` in `R[[f1, f2]]` by a
/// sequence of flows of fields tangent to the fibres, weight by weight up
/// to `w_max`.
pub fn normalize_volume_deformation(c: &LefschetzCatalog, g: &Polynomial, w_max: u32) -> Result<Normalization> {
    let h0 = g.constant_term();
    if h0 <= Rational::default() {
        return Err(AlgebraError::InvalidArgument("the coefficient needs a positive constant term".into()));
    }
    let mut h = g.truncate(w_max);
    let mut q_in_f = alloc::vec![(0, 0, h0.clone())];
    let mut transcript = Vec::new();
    for i in 1..=w_max {
        let hi = h.homogeneous(i);
        let (solution, q) = solve_step(c, i, &hi)?.ok_or(AlgebraError::UnsolvableStep { weight: i as usize })?;
        let kept = f_span(c, &q);
        q_in_f.extend(q.into_iter().filter(|(_, _, v)| !v.is_zero()));
        if solution.is_zero() {
            continue;
        }
        let residual = &hi - &kept;
        let certified = c.poisson.d_pi(&solution)? == c.pi().mul_poly(&residual)
            && solution.apply_to(&c.f1)?.is_zero()
            && solution.apply_to(&c.f2)?.is_zero();
        let field = solution.scale(&(Rational::one() / &h0));
        let next = flow_coefficient(&field, &h, w_max)?;
        let flowed = flow_bivector(&field, &c.pi().mul_poly(&h), w_max)?;
        let flow_certified = flowed == c.pi().mul_poly(&next).truncate_weight(w_max as i64);
        if !certified || !flow_certified {
            return Err(AlgebraError::UnsolvableStep { weight: i as usize });
        }
        h = next;
        transcript.push(NormalizationStep { weight: i, kept, solution, field, certified, flow_certified });
    }
    let q = f_span(c, &q_in_f);
    if q != h {
        return Err(AlgebraError::UnsolvableStep { weight: w_max as usize });
    }
    Ok(Normalization { max_weight: w_max, q, q_in_f, transcript })
}
