use serde::{Deserialize, Serialize};

use super::families::{Example, ExampleFamily};
use crate::error::{Error, Result};
use crate::ideal::CentralIdeal;
use crate::scalar::Scalar;

fn require_spectral(ex: &Example) -> Result<()> {
    if ex.family.has_spectral_data() {
        Ok(())
    } else {
        Err(Error::NoSpectralData(ex.family.to_string()))
    }
}

/// `(u + λ)A + α^m(u + λ)A`.
pub fn m_ideal(ex: &Example, lambda: &Scalar, m: u32) -> Result<CentralIdeal> {
    let ul = ex.shifted_u(lambda)?;
    ex.ideal(&ul)?.sum(&ex.ideal(&ex.alpha_central(m as i64, &ul))?)
}

/// All `m ≤ m_max` for which `(u + λ)A + α^m(u + λ)A` is proper.
pub fn maximality_scan(ex: &Example, lambda: &Scalar, m_max: u32) -> Result<Vec<u32>> {
    require_spectral(ex)?;
    let mut hits = Vec::new();
    for m in 1..=m_max {
        if !m_ideal(ex, lambda, m)?.is_unit() {
            hits.push(m);
        }
    }
    Ok(hits)
}

/// A closed-form exceptional parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalLambda {
    pub m: u32,
    /// `+1` or `-1`; USL2 has only `+1`.
    pub sign: i8,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaRecord {
    pub m: u32,
    pub sign: i8,
    pub value: String,
}

impl ExceptionalLambda {
    pub fn to_record(&self) -> LambdaRecord {
        LambdaRecord { m: self.m, sign: self.sign, value: self.value.to_string() }
    }
}

/// Closed-form exceptional λ for `m`, `+` sign first.
pub fn exceptional_lambdas(family: &ExampleFamily, m: u32) -> Result<Vec<ExceptionalLambda>> {
    family.validate()?;
    let mi = m as i64;
    let plus = match family {
        ExampleFamily::Usl2 => {
            return Ok(vec![ExceptionalLambda { m, sign: 1, value: Scalar::ratio(mi * mi, 4) }]);
        }
        ExampleFamily::Uqsl2 => {
            let qq = &Scalar::q() - &Scalar::q_pow(-1);
            &(&Scalar::q_pow(-mi) + &Scalar::q_pow(mi)) / &(&qq * &qq)
        }
        ExampleFamily::Qtorus { p } => {
            // q^{(p-2m+1)/4} = s^{(p-2m+1)/2}, an integer power since p is odd
            let e = (*p as i64 - 2 * mi + 1) / 2;
            &Scalar::s_pow(e) * &(&Scalar::q_pow(mi) + &Scalar::one())
        }
        ExampleFamily::Adu { .. } => return Err(Error::NoSpectralData(family.to_string())),
    };
    Ok(vec![
        ExceptionalLambda { m, sign: 1, value: plus.clone() },
        ExceptionalLambda { m, sign: -1, value: -plus },
    ])
}

/// `M = (u + λ)A + α^m(u + λ)A`, required to be proper.
pub fn exceptional_ideal(ex: &Example, lambda: &Scalar, m: u32) -> Result<CentralIdeal> {
    require_spectral(ex)?;
    let ideal = m_ideal(ex, lambda, m)?;
    if ideal.is_unit() {
        return Err(Error::NotExceptional(m));
    }
    Ok(ideal)
}
