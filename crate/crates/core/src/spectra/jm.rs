use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::families::Example;
use super::scan::exceptional_ideal;
use crate::basealg::{Automorphism, CentralPoly};
use crate::error::{Error, Result};
use crate::ideal::{CentralIdeal, IdealRecord};
use crate::scalar::Scalar;

/// `Π(M, i, r̂, j)`: product of `M_i..M_j` omitting `M_skip`.
/// Requires `i ≤ j < translates.len()`.
pub fn pi_product(translates: &[CentralIdeal], i: usize, skip: Option<usize>, j: usize) -> Result<CentralIdeal> {
    if i > j || j >= translates.len() {
        return Err(Error::IndexOutOfRange(format!("Pi({i}, {j}) with {} translates", translates.len())));
    }
    Ok(window(translates, i as i64, skip, j as i64))
}

/// Like [`pi_product`] but an empty window gives the unit ideal.
pub(crate) fn window(translates: &[CentralIdeal], i: i64, skip: Option<usize>, j: i64) -> CentralIdeal {
    let first = &translates[0];
    let mut acc = CentralIdeal::unit(first.is_laurent(), first.var());
    for l in i.max(0)..=j {
        if Some(l as usize) == skip {
            continue;
        }
        acc = acc.product(&translates[l as usize]).expect("same subring");
    }
    acc
}

/// Components `I_d` of `J(M)` for `|d| < m`; `I_d = A` otherwise.
#[derive(Clone, Debug)]
pub struct JmTable {
    pub m: u32,
    pub lambda: Scalar,
    pub ideal: CentralIdeal,
    /// `M_i = α^{-i}(M)` for `0 ≤ i < m`.
    pub translates: Vec<CentralIdeal>,
    components: BTreeMap<i64, CentralIdeal>,
    alpha: Automorphism,
    central: usize,
    shifted_u: CentralPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JmRecord {
    pub m: u32,
    pub lambda: String,
    pub ideal: IdealRecord,
    pub translates: Vec<IdealRecord>,
    pub components: BTreeMap<i64, IdealRecord>,
}

/// `J(M)` for `M = (u + λ)A + α^m(u + λ)A`.
pub fn build_jm(ex: &Example, lambda: &Scalar, m: u32) -> Result<JmTable> {
    let ideal = exceptional_ideal(ex, lambda, m)?;
    if !ideal.is_maximal()? {
        return Err(Error::Witness(format!("M = ({ideal}) is not maximal")));
    }
    let (alpha, central) = (ex.alpha().clone(), ex.central_index());
    let translates: Vec<_> = (0..m as i64).map(|i| ideal.apply_auto(&alpha, central, -i)).collect();
    for a in 0..translates.len() {
        for b in a + 1..translates.len() {
            if translates[a] == translates[b] {
                return Err(Error::NonDistinctTranslates(a as u32, b as u32));
            }
        }
    }
    let mut components = BTreeMap::new();
    let last = m as i64 - 1;
    for d in 0..m as i64 {
        let pos = (0..=last - d).fold(CentralIdeal::unit(ideal.is_laurent(), ideal.var()), |acc, l| {
            acc.intersect(&translates[l as usize]).expect("same subring")
        });
        components.insert(d, pos);
        if d > 0 {
            let neg = (d..=last).fold(CentralIdeal::unit(ideal.is_laurent(), ideal.var()), |acc, l| {
                acc.intersect(&translates[l as usize]).expect("same subring")
            });
            components.insert(-d, neg);
        }
    }
    Ok(JmTable {
        m,
        lambda: lambda.clone(),
        ideal,
        translates,
        components,
        alpha,
        central,
        shifted_u: ex.shifted_u(lambda)?,
    })
}

impl JmTable {
    pub fn component(&self, d: i64) -> CentralIdeal {
        self.components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| CentralIdeal::unit(self.ideal.is_laurent(), self.ideal.var()))
    }

    /// Replaces one component, e.g. to build negative controls.
    pub fn with_component(mut self, d: i64, ideal: CentralIdeal) -> Self {
        self.components.insert(d, ideal);
        self
    }

    pub fn alpha(&self) -> &Automorphism {
        &self.alpha
    }

    pub fn central_index(&self) -> usize {
        self.central
    }

    /// `u + λ`.
    pub fn shifted_u(&self) -> &CentralPoly {
        &self.shifted_u
    }

    /// `α^k(u + λ)`.
    pub fn shifted_u_image(&self, k: i64) -> CentralPoly {
        self.alpha.apply_central(k, self.central, &self.shifted_u)
    }

    pub(crate) fn alpha_u(&self, k: i64) -> CentralIdeal {
        CentralIdeal::new(&self.shifted_u_image(k), self.ideal.is_laurent(), self.ideal.var()).expect("central element")
    }

    pub(crate) fn alpha_ideal(&self, k: i64, i: &CentralIdeal) -> CentralIdeal {
        i.apply_auto(&self.alpha, self.central, k)
    }

    pub fn to_record(&self) -> JmRecord {
        JmRecord {
            m: self.m,
            lambda: self.lambda.to_string(),
            ideal: self.ideal.to_record(),
            translates: self.translates.iter().map(CentralIdeal::to_record).collect(),
            components: self.components.iter().map(|(&d, i)| (d, i.to_record())).collect(),
        }
    }
}

/// Outcome of [`verify_jm_closure_report`]: one line per failed containment.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !matches!(ok, Ok(true)) {
            self.failures.push(what());
        }
    }
}

/// Checks that `⊕ I_d W_d` is a two-sided ideal: closure under left and right
/// multiplication by `X` and `Y`, reduced to containments of central ideals.
/// Also checks `I_0 ≠ A` and the product form of each component.
pub fn verify_jm_closure_report(t: &JmTable) -> ClosureReport {
    let mut rep = ClosureReport::default();
    let m = t.m as i64;
    let i_ = |d: i64| t.component(d);
    let sub = |a: &CentralIdeal, b: &CentralIdeal| a.is_subset_of(b);
    let times = |a: &CentralIdeal, b: &CentralIdeal| a.product(b).expect("same subring");

    rep.check(Ok(!i_(0).is_unit()), || "I_0 is the unit ideal".into());
    for i in 0..m {
        // Y J_i and J_i Y
        rep.check(sub(&i_(i), &i_(i + 1)), || format!("I_{i} ⊄ I_{}", i + 1));
        rep.check(sub(&t.alpha_ideal(1, &i_(i)), &i_(i + 1)), || format!("α(I_{i}) ⊄ I_{}", i + 1));
        if i >= 1 {
            // J_i X and X J_i
            rep.check(sub(&times(&i_(i), &t.alpha_u(i)), &i_(i - 1)), || format!("I_{i}·α^{i}(u) ⊄ I_{}", i - 1));
            rep.check(sub(&times(&t.alpha_ideal(-1, &i_(i)), &t.alpha_u(0)), &i_(i - 1)), || {
                format!("α⁻¹(I_{i})·u ⊄ I_{}", i - 1)
            });
            // negative side: J_{-i} X, X J_{-i}, J_{-i} Y, Y J_{-i}
            rep.check(sub(&i_(-i), &i_(-i - 1)), || format!("I_-{i} ⊄ I_-{}", i + 1));
            rep.check(sub(&t.alpha_ideal(-1, &i_(-i)), &i_(-i - 1)), || format!("α⁻¹(I_-{i}) ⊄ I_-{}", i + 1));
            rep.check(sub(&times(&i_(-i), &t.alpha_u(1 - i)), &i_(-i + 1)), || {
                format!("I_-{i}·α^{}(u) ⊄ I_-{}", 1 - i, i - 1)
            });
            rep.check(sub(&times(&t.alpha_ideal(1, &i_(-i)), &t.alpha_u(1)), &i_(-i + 1)), || {
                format!("α(I_-{i})·α(u) ⊄ I_-{}", i - 1)
            });
        } else {
            rep.check(sub(&i_(0), &i_(-1)), || "I_0 ⊄ I_-1".into());
            rep.check(sub(&t.alpha_ideal(-1, &i_(0)), &i_(-1)), || "α⁻¹(I_0) ⊄ I_-1".into());
        }
    }
    // intersections of distinct maximal translates are products
    for d in 0..m {
        let pos = window(&t.translates, 0, None, m - 1 - d);
        rep.check(Ok(i_(d) == pos), || format!("I_{d} ≠ Π(M, 0, {})", m - 1 - d));
        if d > 0 {
            let neg = window(&t.translates, d, None, m - 1);
            rep.check(Ok(i_(-d) == neg), || format!("I_-{d} ≠ Π(M, {d}, {})", m - 1));
        }
    }
    rep
}

pub fn verify_jm_closure(t: &JmTable) -> bool {
    verify_jm_closure_report(t).passed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::families::{make_example, ExampleFamily};
    use crate::spectra::scan::exceptional_lambdas;

    fn lin(ex: &Example, c: i64) -> CentralIdeal {
        ex.ideal(&CentralPoly::from_terms(vec![(1, Scalar::one()), (0, Scalar::from_int(c))])).unwrap()
    }

    fn usl2_m2() -> (Example, JmTable) {
        let ex = make_example(&ExampleFamily::Usl2).unwrap();
        let t = build_jm(&ex, &Scalar::one(), 2).unwrap();
        (ex, t)
    }

    #[test]
    fn usl2_m2_components() {
        let (ex, t) = usl2_m2();
        let t2m1 = ex.ideal(&CentralPoly::from_terms(vec![(2, Scalar::one()), (0, Scalar::from_int(-1))])).unwrap();
        assert_eq!(t.ideal, lin(&ex, 1));
        assert_eq!(t.translates, vec![lin(&ex, 1), lin(&ex, -1)]);
        assert_eq!(t.component(0), t2m1);
        assert_eq!(t.component(1), lin(&ex, 1));
        assert_eq!(t.component(-1), lin(&ex, -1));
        assert!(t.component(2).is_unit() && t.component(-5).is_unit());
        assert!(verify_jm_closure(&t));
    }

    #[test]
    fn pi_product_windows() {
        let (ex, t) = usl2_m2();
        let tr = &t.translates;
        assert_eq!(pi_product(tr, 0, None, 1).unwrap(), t.component(0));
        assert_eq!(pi_product(tr, 0, Some(0), 1).unwrap(), lin(&ex, -1));
        assert_eq!(pi_product(tr, 1, None, 1).unwrap(), tr[1]);
        assert!(matches!(pi_product(tr, 1, None, 0), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(pi_product(tr, 0, None, 2), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn m1_table_is_just_m() {
        let ex = make_example(&ExampleFamily::Uqsl2).unwrap();
        let lam = &exceptional_lambdas(&ex.family, 1).unwrap()[0].value;
        let t = build_jm(&ex, lam, 1).unwrap();
        assert_eq!(t.component(0), t.ideal);
        assert!(t.component(1).is_unit() && t.component(-1).is_unit());
        assert!(verify_jm_closure(&t));
    }

    #[test]
    fn corrupted_table_fails_closure() {
        let (ex, t) = usl2_m2();
        let bad = t.with_component(0, CentralIdeal::unit(false, ex.var_name()));
        let rep = verify_jm_closure_report(&bad);
        assert!(!rep.passed());
        assert!(rep.failures.iter().any(|f| f.contains("I_0 is the unit")));
    }

    #[test]
    fn qtorus_m2_closure() {
        let fam = ExampleFamily::Qtorus { p: 3 };
        let ex = make_example(&fam).unwrap();
        for l in exceptional_lambdas(&fam, 2).unwrap() {
            let t = build_jm(&ex, &l.value, 2).unwrap();
            assert_eq!(t.component(0), t.translates[0].product(&t.translates[1]).unwrap());
            assert!(verify_jm_closure(&t));
        }
    }
}
