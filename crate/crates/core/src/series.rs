//! Generating functions `p(t) / prod_j (1 - t^{k_j})` with integer
//! numerators, as used for Hilbert-Poincare series.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct RationalSeries {
    // numerator[i] is the coefficient of t^i; no trailing zeros
    numerator: Vec<BigInt>,
    // each k means a factor (1 - t^k); sorted
    factors: Vec<u32>,
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn one_minus(k: u32) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); k as usize + 1];
    p[0] = BigInt::one();
    p[k as usize] -= BigInt::one();
    p
}

/// Exact division by `1 - t^k`, if it divides.
fn divide_one_minus(p: &[BigInt], k: u32) -> Option<Vec<BigInt>> {
    let k = k as usize;
    if p.is_empty() {
        return Some(Vec::new());
    }
    if p.len() <= k {
        return None;
    }
    // p = (1 - t^k) q  <=>  q_i = p_i + q_{i-k}
    let n = p.len() - k;
    let mut q = vec![BigInt::zero(); n];
    for i in 0..n {
        let prev = if i >= k { q[i - k].clone() } else { BigInt::zero() };
        q[i] = &p[i] + prev;
    }
    let mut check = poly_mul(&q, &one_minus(k as u32));
    let mut p = p.to_vec();
    trim(&mut check);
    trim(&mut p);
    (check == p).then_some(q)
}

impl RationalSeries {
    pub fn new(numerator: &[i64], factors: &[u32]) -> Self {
        Self::from_big(numerator.iter().map(|&x| BigInt::from(x)).collect(), factors.to_vec())
    }

    pub fn from_big(mut numerator: Vec<BigInt>, mut factors: Vec<u32>) -> Self {
        assert!(factors.iter().all(|&k| k > 0), "factor exponents are positive");
        trim(&mut numerator);
        factors.sort_unstable();
        RationalSeries { numerator, factors }
    }

    pub fn zero() -> Self {
        Self::new(&[], &[])
    }

    pub fn polynomial(coeffs: &[i64]) -> Self {
        Self::new(coeffs, &[])
    }

    /// `t^a / (1 - t)^n`, the series of a free module on one generator of
    /// weight `a` over `n` variables of weight one.
    pub fn free(a: usize, n: usize) -> Self {
        let mut num = vec![0i64; a + 1];
        num[a] = 1;
        Self::new(&num, &vec![1; n])
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Coefficients of `t^0 .. t^w_max`.
    pub fn expand(&self, w_max: usize) -> Vec<BigInt> {
        let n = w_max + 1;
        let mut c: Vec<BigInt> = (0..n).map(|i| self.numerator.get(i).cloned().unwrap_or_default()).collect();
        // multiply by 1/(1 - t^k) = running sums with stride k
        for &k in &self.factors {
            let k = k as usize;
            for i in k..n {
                let prev = c[i - k].clone();
                c[i] += prev;
            }
        }
        c
    }

    /// [`RationalSeries::expand`] converted to machine integers.
    pub fn expand_i64(&self, w_max: usize) -> Vec<i64> {
        self.expand(w_max).iter().map(|x| x.to_i64().expect("coefficient fits in i64")).collect()
    }

    fn with_factors(&self, target: &[u32]) -> Vec<BigInt> {
        // numerator after extending the denominator to `target`, a superset
        let mut missing = target.to_vec();
        for k in &self.factors {
            let pos = missing.iter().position(|x| x == k).expect("target contains own factors");
            missing.remove(pos);
        }
        missing.iter().fold(self.numerator.clone(), |acc, &k| poly_mul(&acc, &one_minus(k)))
    }

    fn common_factors(a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x == y => {
                    out.push(*x);
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(*x);
                    i += 1;
                }
                (Some(_), Some(y)) => {
                    out.push(*y);
                    j += 1;
                }
                (Some(x), None) => {
                    out.push(*x);
                    i += 1;
                }
                (None, Some(y)) => {
                    out.push(*y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let den = Self::common_factors(&self.factors, &other.factors);
        let a = self.with_factors(&den);
        let b = other.with_factors(&den);
        let n = a.len().max(b.len());
        let s = BigInt::from(sign);
        let num = (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + &s * b.get(i).cloned().unwrap_or_default())
            .collect();
        Self::from_big(num, den).reduced()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        Self::from_big(self.numerator.iter().map(|x| x * &c).collect(), self.factors.clone())
    }

    /// Multiply by `t^k`: the series of the shifted module `M(-k)`, whose
    /// degree-`d` part is `M_{d-k}`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut num = vec![BigInt::zero(); k];
        num.extend(self.numerator.iter().cloned());
        Self::from_big(num, self.factors.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        Self::from_big(poly_mul(&self.numerator, &other.numerator), f).reduced()
    }

    /// Cancel denominator factors that divide the numerator exactly.
    pub fn reduced(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut kept = Vec::new();
        if num.is_empty() {
            return Self::zero();
        }
        for &k in self.factors.iter().rev() {
            match divide_one_minus(&num, k) {
                Some(q) => num = q,
                None => kept.push(k),
            }
        }
        Self::from_big(num, kept)
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        self.same_function(other)
    }
}

impl Eq for RationalSeries {}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let unit = mag.is_one();
        match (i, unit) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => f.write_str("t")?,
            (1, false) => write!(f, "{mag}*t")?,
            (_, true) => write!(f, "t^{i}")?,
            (_, false) => write!(f, "{mag}*t^{i}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.numerator.iter().filter(|c| !c.is_zero()).count();
        if self.factors.is_empty() {
            return write_poly(f, &self.numerator);
        }
        if terms > 1 {
            f.write_str("(")?;
            write_poly(f, &self.numerator)?;
            f.write_str(")")?;
        } else {
            write_poly(f, &self.numerator)?;
        }
        f.write_str("/")?;
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &k in &self.factors {
            match groups.last_mut() {
                Some((g, n)) if *g == k => *n += 1,
                _ => groups.push((k, 1)),
            }
        }
        let many = groups.len() > 1;
        if many {
            f.write_str("(")?;
        }
        for (i, (k, n)) in groups.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            let base = if *k == 1 { String::from("(1-t)") } else { alloc::format!("(1-t^{k})") };
            f.write_str(&base)?;
            if *n > 1 {
                write!(f, "^{n}")?;
            }
        }
        if many {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The Hilbert-Poincare series used throughout: free forms, the homology
/// groups and the kernels of the delta differential.
pub mod catalog {
    use super::RationalSeries;

    /// `C(4,k) t^k / (1-t)^4`, the forms of degree `k` on `R^4`.
    pub fn forms(k: usize) -> RationalSeries {
        RationalSeries::free(k, 4).scale(crate::exterior::binomial(4, k as u64) as i64)
    }

    pub fn homology(k: usize) -> RationalSeries {
        match k {
            0 => RationalSeries::new(&[1, 4, 4], &[2, 2]),
            1 => RationalSeries::new(&[0, 4, 8, 4, 4], &[2, 2]),
            2 => RationalSeries::new(&[0, 0, 2, 4, 8], &[2, 2]),
            3 => RationalSeries::new(&[0, 0, 0, 0, 4], &[2, 2]),
            4 => RationalSeries::new(&[0, 0, 0, 0, 1], &[2, 2]),
            _ => RationalSeries::zero(),
        }
    }

    /// Kernel of delta on `k`-forms. Degree zero is everything.
    pub fn kernel(k: usize) -> RationalSeries {
        let r = |n: &[i64], f: &[u32]| RationalSeries::new(n, f);
        match k {
            0 => forms(0),
            1 => r(&[-1, 0, 2], &[2, 2]).add(&r(&[1, 0, 2], &[1, 1, 1, 1])),
            2 => r(&[0, 0, 0, 0, 3], &[2, 2]).add(&r(&[0, 0, 2, 0, 1], &[1, 1, 1, 1])),
            3 => r(&[0, 0, 0, 0, 3], &[2, 2]).add(&r(&[0, 0, 0, 0, 1], &[1, 1, 1, 1])),
            4 => homology(4),
            _ => RationalSeries::zero(),
        }
    }

    /// The printed variant for degree three, which disagrees with the
    /// exact sequence it is derived from.
    pub fn kernel3_printed() -> RationalSeries {
        RationalSeries::new(&[0, 0, 0, 0, 1], &[2, 2]).add(&RationalSeries::new(&[0, 0, 0, 0, 1], &[1, 1, 1, 1]))
    }

    /// The variant of the degree-two homology series printed at the end of
    /// the derivation, `2t^2(4t^2+4t+1)/(1-t^2)^2`.
    pub fn homology2_printed_variant() -> RationalSeries {
        RationalSeries::new(&[0, 0, 2, 8, 8], &[2, 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn expansions() {
        assert_eq!(RationalSeries::new(&[1, 4, 4], &[2, 2]).expand_i64(4), [1, 4, 6, 8, 11]);
        assert_eq!(RationalSeries::free(4, 4).expand_i64(5), [0, 0, 0, 0, 1, 4]);
        assert_eq!(RationalSeries::new(&[1], &[1]).expand_i64(3), [1, 1, 1, 1]);
    }

    #[test]
    fn shift_and_sub() {
        let s = RationalSeries::new(&[1], &[1]);
        assert_eq!(s.shift(2).expand_i64(4), [0, 0, 1, 1, 1]);
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn homology_one_from_kernels() {
        use catalog::*;
        let h1 = kernel(1).add(&kernel(2)).sub(&forms(2));
        assert_eq!(h1, homology(1));
        // the other degrees follow the same pattern
        assert_eq!(kernel(0).sub(&forms(1)).add(&kernel(1)), homology(0));
        assert_eq!(kernel(2).add(&kernel(3)).sub(&forms(3)), homology(2));
        assert_eq!(kernel(3).add(&kernel(4)).sub(&forms(4)), homology(3));
        assert_ne!(kernel3_printed(), kernel(3));
        assert_ne!(homology2_printed_variant(), homology(2));
    }

    #[test]
    fn reduction_cancels_exact_factors() {
        let s = RationalSeries::new(&[1, 0, -1], &[1, 2]);
        let r = s.reduced();
        assert_eq!(r.factors(), &[1]);
        assert_eq!(r.expand_i64(3), [1, 1, 1, 1]);
    }

    #[test]
    fn display() {
        let s = RationalSeries::new(&[1, 4, 4], &[2, 2]);
        assert_eq!(alloc::format!("{s}"), "(1 + 4*t + 4*t^2)/(1-t^2)^2");
        let s = RationalSeries::new(&[0, 0, 0, 0, 1], &[1, 2]);
        assert_eq!(alloc::format!("{s}"), "t^4/((1-t)*(1-t^2))");
    }

    fn series() -> impl Strategy<Value = RationalSeries> {
        (proptest::collection::vec(-5i64..=5, 0..5), proptest::collection::vec(1u32..=3, 0..4))
            .prop_map(|(n, f)| RationalSeries::new(&n, &f))
    }

    proptest! {
        #[test]
        fn arithmetic_is_pointwise(a in series(), b in series(), w in 0usize..12) {
            let (ea, eb) = (a.expand(w), b.expand(w));
            let sum: Vec<BigInt> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
            let diff: Vec<BigInt> = ea.iter().zip(&eb).map(|(x, y)| x - y).collect();
            prop_assert_eq!(a.add(&b).expand(w), sum);
            prop_assert_eq!(a.sub(&b).expand(w), diff);
        }

        #[test]
        fn shift_moves_coefficients(a in series(), k in 0usize..5, w in 0usize..12) {
            let e = a.expand(w);
            let s = a.shift(k).expand(w);
            for i in 0..=w {
                let expected = if i < k { BigInt::zero() } else { e[i - k].clone() };
                prop_assert_eq!(&s[i], &expected);
            }
        }
    }
}
