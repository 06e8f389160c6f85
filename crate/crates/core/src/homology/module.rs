use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::LefschetzCatalog;
use crate::error::Result;
use crate::exterior::{differential, GradedElement, Polynomial};
use crate::rational::int;

use super::{HomologyEngine, PreimageSolver};

/// One relation tested for boundary membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCheck {
    pub label: String,
    pub degree: usize,
    pub weight: i64,
    /// Whether the relation is supposed to be a boundary.
    pub expect_boundary: bool,
    pub is_boundary: bool,
    /// A preimage was found and re-checked by applying delta to it.
    pub certified: bool,
}

impl ModuleCheck {
    pub fn passed(&self) -> bool {
        if self.expect_boundary {
            self.is_boundary && self.certified
        } else {
            !self.is_boundary
        }
    }
}

#[derive(Clone, Debug)]
pub struct ModuleStructureReport {
    pub max_weight: i64,
    pub checks: Vec<ModuleCheck>,
}

impl ModuleStructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(ModuleCheck::passed)
    }

    pub fn failures(&self) -> Vec<&ModuleCheck> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}

/// The cubic polynomials whose classes vanish, with display labels:
/// `(f1 + 2(x2^2 + x4^2)) x_i` and the four relations among `f_j x_i`.
pub fn base_relations(c: &LefschetzCatalog) -> Vec<(String, Polynomial)> {
    let x = |i| c.x(i);
    let s = &(&x(2).pow(2) + &x(4).pow(2)).scale(&int(2));
    let shifted = &c.f1 + s;
    let mut out = Vec::new();
    for i in 1..=4 {
        out.push((alloc::format!("(f1 + 2(x2^2+x4^2)) x{i}"), &shifted * &x(i)));
    }
    let (f1, f2) = (&c.f1, &c.f2);
    out.push(("f1 x1 + f2 x2".into(), &(f1 * &x(1)) + &(f2 * &x(2))));
    out.push(("f2 x1 - f1 x2".into(), &(f2 * &x(1)) - &(f1 * &x(2))));
    out.push(("f1 x3 + f2 x4".into(), &(f1 * &x(3)) + &(f2 * &x(4))));
    out.push(("f2 x3 - f1 x4".into(), &(f2 * &x(3)) - &(f1 * &x(4))));
    out
}

fn monomial_label(a: u32, b: u32) -> String {
    match (a, b) {
        (0, 0) => String::new(),
        (a, 0) => alloc::format!("f1^{a} "),
        (0, b) => alloc::format!("f2^{b} "),
        (a, b) => alloc::format!("f1^{a} f2^{b} "),
    }
}

type Solvers<'a> = BTreeMap<(i64, usize), PreimageSolver<'a>>;

fn check<'a>(
    engine: &'a HomologyEngine,
    solvers: &mut Solvers<'a>,
    label: String,
    form: GradedElement,
    weight: i64,
    expect_boundary: bool,
) -> Result<ModuleCheck> {
    let degree = form.degree();
    let solver = match solvers.entry((weight, degree)) {
        Entry::Occupied(e) => e.into_mut(),
        Entry::Vacant(e) => e.insert(PreimageSolver::new(engine.slice(weight)?, degree)),
    };
    let preimage = solver.solve(&form)?;
    let certified = match &preimage {
        Some(nu) => engine.catalog().poisson.delta_pi(nu)? == form,
        None => false,
    };
    Ok(ModuleCheck { label, degree, weight, expect_boundary, is_boundary: preimage.is_some(), certified })
}

/// Certify every module relation of weight at most the engine truncation,
/// in homology degrees 0, 1 and 2, together with the non-vanishing of
/// the generators they relate.
pub fn module_structure_check(engine: &HomologyEngine) -> Result<ModuleStructureReport> {
    let c = engine.catalog();
    let w_max = engine.max_weight();
    let mut checks = Vec::new();
    let mut solvers = Solvers::new();
    let bases = base_relations(c);
    for s in 0.. {
        let weight0 = 3 + 2 * s as i64;
        if weight0 > w_max {
            break;
        }
        for a in (0..=s).rev() {
            let b = s - a;
            let m = c.f_monomial(a, b);
            let ml = monomial_label(a, b);
            for (name, r) in &bases {
                let g = &m * r;
                let dg = differential(&g);
                checks.push(check(engine, &mut solvers, alloc::format!("H0 {ml}[{name}]"), c.scalar_form(&g), weight0, true)?);
                checks.push(check(engine, &mut solvers, alloc::format!("H1 d({ml}[{name}])"), dg.clone(), weight0, true)?);
                if weight0 + 2 > w_max {
                    continue;
                }
                let w2 = weight0 + 2;
                checks.push(check(engine, &mut solvers, alloc::format!("H1 {ml}[{name}] df1"), c.df1.mul_poly(&g), w2, true)?);
                for j in 1..=2 {
                    let f = dg.wedge(c.df(j))?;
                    checks.push(check(engine, &mut solvers, alloc::format!("H2 d({ml}[{name}])^df{j}"), f, w2, true)?);
                }
            }
        }
    }
    for i in 1..=4 {
        let xi = c.x(i);
        let dxi = differential(&xi);
        if w_max >= 1 {
            checks.push(check(engine, &mut solvers, alloc::format!("H0 x{i}"), c.scalar_form(&xi), 1, false)?);
            checks.push(check(engine, &mut solvers, alloc::format!("H1 dx{i}"), dxi.clone(), 1, false)?);
        }
        if w_max >= 3 {
            checks.push(check(engine, &mut solvers, alloc::format!("H1 x{i} df1"), c.df1.mul_poly(&xi), 3, false)?);
            checks.push(check(engine, &mut solvers, alloc::format!("H2 dx{i}^df1"), dxi.wedge(&c.df1)?, 3, false)?);
        }
    }
    Ok(ModuleStructureReport { max_weight: w_max, checks })
}
