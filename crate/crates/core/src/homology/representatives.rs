use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::LefschetzCatalog;
use crate::error::Result;
use crate::exterior::{differential, GradedElement, Kind, Polynomial};

use super::SliceComplex;

/// Coefficient ring a family is parametrized by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParameterSpace {
    /// `R[[f1, f2]]`: parameters `f1^a f2^b`, weight `2(a + b)`.
    Casimir,
    /// `R[[x2^2, x4]]`: parameters `x2^(2a) x4^b`, weight `2a + b`.
    Transverse,
}

impl ParameterSpace {
    pub fn label(self) -> &'static str {
        match self {
            ParameterSpace::Casimir => "R[[f1,f2]]",
            ParameterSpace::Transverse => "R[[x2^2,x4]]",
        }
    }

    /// Parameter monomials of weight `m`, larger first exponent first.
    pub fn monomials(self, c: &LefschetzCatalog, m: i64) -> Vec<Polynomial> {
        if m < 0 {
            return Vec::new();
        }
        match self {
            ParameterSpace::Casimir => {
                if m % 2 != 0 {
                    return Vec::new();
                }
                let n = (m / 2) as u32;
                (0..=n).rev().map(|a| c.f_monomial(a, n - a)).collect()
            }
            ParameterSpace::Transverse => {
                let m = m as u32;
                (0..=m / 2).rev().map(|a| &c.x(2).pow(2 * a) * &c.x(4).pow(m - 2 * a)).collect()
            }
        }
    }

    /// Number of parameter monomials of weight `m`.
    pub fn count(self, m: i64) -> usize {
        if m < 0 {
            return 0;
        }
        match self {
            ParameterSpace::Casimir => if m % 2 == 0 { (m / 2 + 1) as usize } else { 0 },
            ParameterSpace::Transverse => (m / 2 + 1) as usize,
        }
    }
}

type Template = fn(&LefschetzCatalog, usize, &Polynomial) -> GradedElement;

/// One family `{ template(p) : p a parameter }` of homology classes.
#[derive(Clone, Debug)]
pub struct RepresentativeFamily {
    pub degree: usize,
    pub name: String,
    pub space: ParameterSpace,
    /// Weight of the generator at the parameter `1`.
    pub weight_offset: i64,
    index: usize,
    template: Template,
}

impl RepresentativeFamily {
    fn new(degree: usize, name: &str, space: ParameterSpace, weight_offset: i64, index: usize, template: Template) -> Self {
        RepresentativeFamily { degree, name: name.into(), space, weight_offset, index, template }
    }

    pub fn instantiate(&self, c: &LefschetzCatalog, parameter: &Polynomial) -> GradedElement {
        (self.template)(c, self.index, parameter)
    }

    /// The family members of weight `w`, in parameter order.
    pub fn at_weight(&self, c: &LefschetzCatalog, w: i64) -> Vec<GradedElement> {
        self.space.monomials(c, w - self.weight_offset).iter().map(|p| self.instantiate(c, p)).collect()
    }

    pub fn count_at_weight(&self, w: i64) -> usize {
        self.space.count(w - self.weight_offset)
    }
}

fn wedge(a: &GradedElement, b: &GradedElement) -> GradedElement {
    a.wedge(b).expect("forms")
}

fn d(a: &GradedElement) -> GradedElement {
    a.de_rham().expect("form")
}

fn xi(c: &LefschetzCatalog, i: usize, p: &Polynomial) -> Polynomial {
    p * &c.x(i)
}

/// Every family of classes in degree `k`.
pub fn families(k: usize) -> Vec<RepresentativeFamily> {
    use ParameterSpace::{Casimir, Transverse};
    let mut out = Vec::new();
    let fam = RepresentativeFamily::new;
    match k {
        0 => {
            out.push(fam(0, "p", Casimir, 0, 0, |c, _, p| c.scalar_form(p)));
            for i in 1..=4 {
                let name = alloc::format!("a{i} x{i}");
                out.push(fam(0, &name, Transverse, 1, i, |c, i, p| c.scalar_form(&xi(c, i, p))));
            }
        }
        1 => {
            for j in 1..=2 {
                out.push(fam(1, &alloc::format!("p{j} zeta{j}"), Casimir, 2, j, |c, j, p| c.zeta(j).mul_poly(p)));
            }
            for j in 1..=2 {
                out.push(fam(1, &alloc::format!("q{j} df{j}"), Casimir, 2, j, |c, j, p| c.df(j).mul_poly(p)));
            }
            for i in 1..=4 {
                out.push(fam(1, &alloc::format!("d(a{i} x{i})"), Transverse, 1, i, |c, i, p| differential(&xi(c, i, p))));
            }
            for i in 1..=4 {
                out.push(fam(1, &alloc::format!("b{i} x{i} df1"), Transverse, 3, i, |c, i, p| c.df1.mul_poly(&xi(c, i, p))));
            }
        }
        2 => {
            out.push(fam(2, "p zeta1^zeta2", Casimir, 4, 0, |c, _, p| wedge(&c.zeta1, &c.zeta2).mul_poly(p)));
            out.push(fam(2, "q df1^df2", Casimir, 4, 0, |c, _, p| wedge(&c.df1, &c.df2).mul_poly(p)));
            for i in 1..=2 {
                out.push(fam(2, &alloc::format!("p{i} d(f1 zeta{i})"), Casimir, 4, i, |c, i, p| {
                    d(&c.zeta(i).mul_poly(&c.f1)).mul_poly(p)
                }));
            }
            for i in 1..=2 {
                out.push(fam(2, &alloc::format!("q{i} dzeta{i}"), Casimir, 2, i, |c, i, p| c.beta(i).mul_poly(p)));
            }
            for i in 1..=4 {
                out.push(fam(2, &alloc::format!("d(a{i} x{i})^df1"), Transverse, 3, i, |c, i, p| {
                    wedge(&differential(&xi(c, i, p)), &c.df1)
                }));
            }
        }
        3 => {
            for i in 1..=2 {
                out.push(fam(3, &alloc::format!("p{i} zeta2^dzeta{i}"), Casimir, 4, i, |c, i, p| {
                    wedge(&c.zeta2, c.beta(i)).mul_poly(p)
                }));
            }
            for i in 1..=2 {
                out.push(fam(3, &alloc::format!("q{i} df1^dzeta{i}"), Casimir, 4, i, |c, i, p| {
                    wedge(&c.df1, c.beta(i)).mul_poly(p)
                }));
            }
        }
        4 => out.push(fam(4, "p mu", Casimir, 4, 0, |c, _, p| c.mu.mul_poly(p))),
        _ => {}
    }
    out
}

/// All family members of degree `k` and weight `w`, family by family.
pub fn representative_basis(c: &LefschetzCatalog, k: usize, w: i64) -> Vec<GradedElement> {
    families(k).iter().flat_map(|f| f.at_weight(c, w)).collect()
}

/// Number of family members of degree `k` and weight `w`, counted from
/// the parameter spaces alone.
pub fn family_count(k: usize, w: i64) -> usize {
    families(k).iter().map(|f| f.count_at_weight(w)).sum()
}

/// Outcome of checking the families against one slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeVerdict {
    pub degree: usize,
    pub weight: i64,
    pub count: usize,
    pub homogeneous: bool,
    pub cycles: bool,
    /// Rank the representatives add to the boundaries.
    pub independent_rank: usize,
    pub homology_dim: usize,
}

impl RepresentativeVerdict {
    pub fn passed(&self) -> bool {
        self.homogeneous && self.cycles && self.independent_rank == self.count && self.count == self.homology_dim
    }
}

/// Check `forms` as a basis of the degree `k` homology of `slice`.
pub fn verify_forms(slice: &SliceComplex, k: usize, forms: &[GradedElement]) -> Result<RepresentativeVerdict> {
    let w = slice.weight();
    let homogeneous = forms.iter().all(|f| {
        f.kind() == Kind::Form && f.degree() == k && (f.is_zero() || f.weights() == [w])
    });
    let mut cycles = homogeneous;
    let mut independent_rank = 0;
    if homogeneous {
        for f in forms {
            if !slice.is_cycle(f)? {
                cycles = false;
            }
        }
        independent_rank = slice.rank_mod_boundaries(k, forms)?;
    }
    Ok(RepresentativeVerdict {
        degree: k,
        weight: w,
        count: forms.len(),
        homogeneous,
        cycles,
        independent_rank,
        homology_dim: slice.homology_dim(k),
    })
}

/// Check the families of degree `k` against the slice of weight `w`.
pub fn verify_representatives(c: &LefschetzCatalog, slice: &SliceComplex, k: usize) -> Result<RepresentativeVerdict> {
    verify_forms(slice, k, &representative_basis(c, k, slice.weight()))
}
