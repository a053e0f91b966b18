use std::fmt;
use std::sync::Arc;

use crate::ambiskew::AmbiskewRing;
use crate::basealg::{AlgebraSignature, Automorphism, BaseElem, CentralPoly};
use crate::error::{Error, Result};
use crate::gwa::GwaRing;
use crate::ideal::{render_central, CentralIdeal};
use crate::scalar::Scalar;

/// The built-in conformal ambiskew rings.
#[derive(Clone, Debug, PartialEq)]
pub enum ExampleFamily {
    /// `K[t]`, `α(t) = t + 2`.
    Usl2,
    /// `K[t^{±1}]`, `α(t) = q²t`.
    Uqsl2,
    /// Quantum torus on `z_1..z_p`, `p` odd.
    Qtorus { p: u32 },
    /// `K[c, k^{±1}]`, `α = (c, q²k)`, `u = ck^n + f(k)` with `f` free of `k^n`.
    Adu { n: i32, f: CentralPoly },
}

impl ExampleFamily {
    pub fn validate(&self) -> Result<()> {
        match self {
            ExampleFamily::Qtorus { p } if p % 2 == 0 => {
                Err(Error::InvalidFamily(format!("quantum torus needs odd p, got {p}")))
            }
            ExampleFamily::Adu { n: 0, .. } => Err(Error::InvalidFamily("n must be nonzero".into())),
            ExampleFamily::Adu { n, f } if !f.coeff(*n as i64).is_zero() => {
                Err(Error::InvalidFamily(format!("f has a nonzero k^{n} coefficient")))
            }
            _ => Ok(()),
        }
    }

    /// Short identifier: `usl2`, `uqsl2`, `qtorus`, `adu`.
    pub fn key(&self) -> &'static str {
        match self {
            ExampleFamily::Usl2 => "usl2",
            ExampleFamily::Uqsl2 => "uqsl2",
            ExampleFamily::Qtorus { .. } => "qtorus",
            ExampleFamily::Adu { .. } => "adu",
        }
    }

    /// Expected number of exceptional λ per `m`.
    pub fn expected_d(&self) -> Option<u32> {
        match self {
            ExampleFamily::Usl2 => Some(1),
            ExampleFamily::Uqsl2 | ExampleFamily::Qtorus { .. } => Some(2),
            ExampleFamily::Adu { .. } => None,
        }
    }

    pub fn has_spectral_data(&self) -> bool {
        !matches!(self, ExampleFamily::Adu { .. })
    }

    /// Structural facts about the family that the engine takes as given.
    pub fn hypotheses(&self) -> Vec<String> {
        let mut out = vec![
            "A is alpha-simple".to_string(),
            "no nonzero power of alpha is inner, so A[y^{+-1}; alpha] is simple with centre K".to_string(),
        ];
        if self.has_spectral_data() {
            out.push("A/M is a simple right Ore domain for every exceptional M".to_string());
        }
        out
    }
}

impl fmt::Display for ExampleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExampleFamily::Usl2 => f.write_str("usl2"),
            ExampleFamily::Uqsl2 => f.write_str("uqsl2"),
            ExampleFamily::Qtorus { p } => write!(f, "qtorus(p={p})"),
            ExampleFamily::Adu { n, f: g } => write!(f, "adu(n={n}, f={})", render_central(g, "k")),
        }
    }
}

/// A family instance: the conformal ring and its splitting element.
#[derive(Clone, Debug)]
pub struct Example {
    pub family: ExampleFamily,
    pub ring: Arc<AmbiskewRing>,
    pub u: BaseElem,
}

pub fn make_example(family: &ExampleFamily) -> Result<Example> {
    family.validate()?;
    let q = Scalar::q();
    let (sig, alpha, u) = match family {
        ExampleFamily::Usl2 => {
            let sig = AlgebraSignature::polynomial("t");
            let u = BaseElem::from_terms(
                &sig,
                vec![(vec![2], Scalar::ratio(-1, 4)), (vec![1], Scalar::ratio(1, 2)), (vec![0], Scalar::ratio(-1, 4))],
            )?;
            (sig, Automorphism::Shift(Scalar::from_int(2)), u)
        }
        ExampleFamily::Uqsl2 => {
            let sig = AlgebraSignature::laurent("t");
            let qq = &q - &q.inv()?;
            let den = -(&qq * &qq).inv()?;
            let u = BaseElem::from_terms(&sig, vec![(vec![1], &q.inv()? * &den), (vec![-1], &q * &den)])?;
            (sig, Automorphism::Scaling(vec![Scalar::q_pow(2)]), u)
        }
        ExampleFamily::Qtorus { p } => {
            let p = *p as usize;
            let sig = AlgebraSignature::quantum_torus(p)?;
            let scale = (1..=p).map(|i| if i % 2 == 1 { Scalar::q_pow(-1) } else { Scalar::one() }).collect();
            let mut lo = vec![0; p];
            lo[p - 1] = -1;
            let mut hi = vec![0; p];
            hi[p - 1] = 1;
            let u = BaseElem::from_terms(&sig, vec![(lo, Scalar::q_pow((p as i64 - 1) / 2)), (hi, q.clone())])?;
            (sig, Automorphism::Scaling(scale), u)
        }
        ExampleFamily::Adu { n, f } => {
            let sig = AlgebraSignature::commutative(&["c", "k"], &[false, true], 1)?;
            let mut terms = vec![(vec![1, *n], Scalar::one())];
            terms.extend(f.terms().map(|(e, c)| (vec![0, e as i32], c.clone())));
            let u = BaseElem::from_terms(&sig, terms)?;
            (sig, Automorphism::Scaling(vec![Scalar::one(), Scalar::q_pow(2)]), u)
        }
    };
    let v = &u - &alpha.apply(1, &u);
    let ring = AmbiskewRing::new(&sig, alpha, v, Scalar::one())?;
    Ok(Example { family: family.clone(), ring, u })
}

impl Example {
    pub fn signature(&self) -> &Arc<AlgebraSignature> {
        self.ring.signature()
    }

    pub fn alpha(&self) -> &Automorphism {
        self.ring.alpha()
    }

    pub fn central_index(&self) -> usize {
        self.signature().central_var()
    }

    pub fn var_name(&self) -> &str {
        &self.signature().names()[self.central_index()]
    }

    pub fn laurent(&self) -> bool {
        self.signature().central_is_laurent()
    }

    /// `u + λ` in the central subring.
    pub fn shifted_u(&self, lambda: &Scalar) -> Result<CentralPoly> {
        let u = self.u.central_project().ok_or(Error::NotCentralUnivariate)?;
        Ok(&u + &CentralPoly::constant(lambda.clone()))
    }

    /// `α^k` on the central subring.
    pub fn alpha_central(&self, k: i64, p: &CentralPoly) -> CentralPoly {
        self.alpha().apply_central(k, self.central_index(), p)
    }

    pub fn ideal(&self, p: &CentralPoly) -> Result<CentralIdeal> {
        CentralIdeal::new(p, self.laurent(), self.var_name())
    }

    /// `W(A, α, u + λ)`.
    pub fn gwa(&self, lambda: &Scalar) -> Result<Arc<GwaRing>> {
        GwaRing::from_ambiskew(&self.ring, &self.u, lambda)
    }
}
