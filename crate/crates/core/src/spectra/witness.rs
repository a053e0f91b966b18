use serde::{Deserialize, Serialize};

use super::families::{Example, ExampleFamily};
use crate::basealg::{BaseElem, CentralPoly};
use crate::error::{Error, Result};
use crate::ideal::{render_central, render_upoly, residue_minpoly, resultant, BiPoly, CentralIdeal, UPoly};
use crate::poly::{DensePoly, Ring};
use crate::scalar::Scalar;

/// `p_m` with `p_m(u) ∈ v^(m)A`.
#[derive(Clone, Debug)]
pub struct PmWitness {
    pub m: u32,
    pub p: UPoly,
    pub vm_ideal: CentralIdeal,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PmRecord {
    pub m: u32,
    pub p: String,
    pub vm_generator: String,
    pub certified: bool,
}

impl PmWitness {
    pub fn to_record(&self) -> PmRecord {
        PmRecord {
            m: self.m,
            p: render_upoly(&self.p, "X"),
            vm_generator: self.vm_ideal.to_string(),
            certified: self.certified,
        }
    }
}

/// Minimal `p_m` for the image of `u` in `A/v^(m)A`, re-verified by
/// evaluating `p_m(u)` in A and testing membership.
pub fn find_pm(ex: &Example, m: u32) -> Result<PmWitness> {
    if matches!(ex.family, ExampleFamily::Adu { .. }) {
        return Err(Error::NoSpectralData(ex.family.to_string()));
    }
    let vm = ex.ring.v_power(m);
    let vm_ideal = CentralIdeal::from_base(&vm)?;
    let u = ex.u.central_project().ok_or(Error::NotCentralUnivariate)?;
    let p = residue_minpoly(&vm_ideal, &u)?;
    // Horner in A itself, independent of the Laurent evaluation used above
    let mut pu = BaseElem::zero(ex.signature());
    for c in p.coeffs().iter().rev() {
        pu = &(&pu * &ex.u) + &BaseElem::constant(ex.signature(), c.clone());
    }
    let certified = vm_ideal.contains_elem(&pu)?;
    Ok(PmWitness { m, p, vm_ideal, certified })
}

/// `p(X, Y)` with `p(u, c) ∈ v^(m)A` in the augmented down-up family.
#[derive(Clone, Debug)]
pub struct BivariateWitness {
    pub m: u32,
    pub vm: BaseElem,
    pub c_bar: CentralPoly,
    pub u_bar: CentralPoly,
    pub p: BiPoly,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariateRecord {
    pub m: u32,
    pub vm: String,
    pub c_bar: String,
    pub u_bar: String,
    pub p: String,
    pub certified: bool,
}

impl BivariateWitness {
    pub fn to_record(&self) -> BivariateRecord {
        BivariateRecord {
            m: self.m,
            vm: self.vm.to_string(),
            c_bar: render_central(&self.c_bar, "k"),
            u_bar: render_central(&self.u_bar, "k"),
            p: self.p.to_string(),
            certified: self.certified,
        }
    }
}

/// Splits `a = a_1(k)·c + a_0(k)` in `K[c, k^{±1}]`.
fn split_linear_c(a: &BaseElem) -> Result<(CentralPoly, CentralPoly)> {
    let mut lin = Vec::new();
    let mut rest = Vec::new();
    for (e, c) in a.terms() {
        match e[0] {
            0 => rest.push((e[1] as i64, c.clone())),
            1 => lin.push((e[1] as i64, c.clone())),
            _ => return Err(Error::InvalidFamily("v^(m) is not linear in c".into())),
        }
    }
    Ok((CentralPoly::from_terms(lin), CentralPoly::from_terms(rest)))
}

/// `k^{-low} (head - tail(k))` as a polynomial in `k` over `F[X, Y]`.
fn clear_k(head: BiPoly, tail: &CentralPoly) -> DensePoly<BiPoly> {
    let shift = (-tail.low()).max(0);
    let top = (tail.high() + shift).max(shift) as usize;
    let mut coeffs = vec![BiPoly::zero(); top + 1];
    coeffs[shift as usize] = head;
    for (e, c) in tail.terms() {
        let i = (e + shift) as usize;
        coeffs[i] = coeffs[i].minus(&BiPoly::constant(c.clone()));
    }
    DensePoly::new(coeffs)
}

pub fn find_pm_bivariate(ex: &Example, m: u32) -> Result<BivariateWitness> {
    let ExampleFamily::Adu { n, f } = &ex.family else {
        return Err(Error::InvalidFamily(format!("{} is not an augmented down-up family", ex.family)));
    };
    let vm = ex.ring.v_power(m);
    let (a1, a0) = split_linear_c(&vm)?;
    if a1.is_zero() {
        return Err(Error::InvalidFamily("v^(m) does not involve c".into()));
    }
    // a1 = (1 - q^{2mn}) k^n is a unit of K[k^{±1}]
    if a1.terms().count() != 1 {
        return Err(Error::InvalidFamily("leading c-coefficient of v^(m) is not a unit".into()));
    }
    let (e, c) = a1.terms().next().expect("one term");
    let a1_inv = CentralPoly::monomial(c.inv()?, -e);
    let c_bar = -&(&a0 * &a1_inv);
    let u_bar = &(&c_bar * &CentralPoly::monomial(Scalar::one(), *n as i64)) + f;

    let fx = clear_k(BiPoly::x(), &u_bar);
    let fy = clear_k(BiPoly::y(), &c_bar);
    let raw = resultant(&fx, &fy)?;
    let lead = raw.leading().cloned().ok_or_else(|| Error::Witness("resultant vanished".into()))?;
    let p = raw.scale(&lead.inv()?);

    // p(u, c) lies in v^(m)A = (c - c_bar)A iff p(u_bar, c_bar) = 0
    let certified = p.degree_x() > 0 && p.eval_central(&u_bar, &c_bar).is_zero();
    Ok(BivariateWitness { m, vm, c_bar, u_bar, p, certified })
}
