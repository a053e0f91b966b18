use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::families::{make_example, Example, ExampleFamily};
use super::goldie::{goldie_decomposition, GoldieReport};
use super::jm::{build_jm, verify_jm_closure_report, ClosureReport, JmRecord};
use super::scan::{exceptional_ideal, exceptional_lambdas, maximality_scan};
use super::witness::{find_pm, PmRecord};
use crate::error::{Error, Result};

pub const SCHEMA: &str = "skewalg/1";

/// Label attached to statements the engine does not verify.
pub const UNCHECKED: &str = "conclusion given the verified witnesses; not machine-checked";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaEntry {
    pub sign: i8,
    pub value: String,
    pub m_generator: String,
    pub m_is_maximal: bool,
    /// All `a ≤ scan_bound` with a proper `(u + λ)A + α^a(u + λ)A`.
    pub scan: Vec<u32>,
    pub jm: JmRecord,
    pub closure: ClosureReport,
    pub goldie: GoldieReport,
    pub goldie_rank: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub m: u32,
    pub lambdas: Vec<LambdaEntry>,
    pub d: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightOne {
    pub description: String,
    pub pm_certificates: Vec<PmRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub schema: String,
    pub family: String,
    pub m_max: u32,
    pub scan_bound: u32,
    pub hypotheses: Vec<String>,
    pub height_one: HeightOne,
    pub degrees: Vec<DegreeRecord>,
    /// Common value of `d` across all `m`, if there is one.
    pub d: Option<u32>,
    pub conclusions: Vec<String>,
    pub notes: Vec<String>,
}

fn lambda_entry(ex: &Example, m: u32, sign: i8, value: &crate::scalar::Scalar, bound: u32) -> Result<LambdaEntry> {
    let ideal = exceptional_ideal(ex, value, m)?;
    let m_is_maximal = ideal.is_maximal()?;
    let scan = maximality_scan(ex, value, bound)?;
    let table = build_jm(ex, value, m)?;
    let closure = verify_jm_closure_report(&table);
    let goldie = goldie_decomposition(&table);
    Ok(LambdaEntry {
        sign,
        value: value.to_string(),
        m_generator: ideal.to_string(),
        m_is_maximal,
        scan,
        jm: table.to_record(),
        closure,
        goldie_rank: goldie.rank,
        goldie,
    })
}

fn degree_record(ex: &Example, m: u32, bound: u32) -> Result<DegreeRecord> {
    let lambdas = exceptional_lambdas(&ex.family, m)?
        .iter()
        .map(|l| lambda_entry(ex, m, l.sign, &l.value, bound))
        .collect::<Result<Vec<_>>>()?;
    let d = lambdas.len() as u32;
    Ok(DegreeRecord { m, lambdas, d })
}

/// Exceptional data and witnesses for `m ≤ m_max`.
pub fn spectrum_report(family: &ExampleFamily, m_max: u32) -> Result<SpectrumReport> {
    if !family.has_spectral_data() {
        return Err(Error::NoSpectralData(family.to_string()));
    }
    if m_max == 0 {
        return Err(Error::IndexOutOfRange("m_max must be at least 1".into()));
    }
    let ex = make_example(family)?;
    let bound = (2 * m_max).max(10);

    let pm_certificates =
        (1..=m_max).into_par_iter().map(|m| find_pm(&ex, m).map(|w| w.to_record())).collect::<Result<Vec<_>>>()?;
    if let Some(bad) = pm_certificates.iter().find(|c| !c.certified) {
        return Err(Error::Witness(format!("p_{} failed membership re-check", bad.m)));
    }
    let degrees =
        (1..=m_max).into_par_iter().map(|m| degree_record(&ex, m, bound)).collect::<Result<Vec<_>>>()?;

    let d = degrees.first().map(|r| r.d).filter(|d0| degrees.iter().all(|r| r.d == *d0));
    let var = ex.var_name();
    Ok(SpectrumReport {
        schema: SCHEMA.to_string(),
        family: family.to_string(),
        m_max,
        scan_bound: bound,
        hypotheses: family.hypotheses(),
        height_one: HeightOne {
            description: format!("(z - λ)R with z the Casimir element, λ in K; {UNCHECKED}"),
            pm_certificates,
        },
        degrees,
        d,
        conclusions: vec![
            format!("0 is prime; {UNCHECKED}"),
            format!("(z - λ)R is maximal for all but countably many λ; {UNCHECKED}"),
            format!("for each m ≥ 1 there are d height-two primes with Goldie rank m quotients; {UNCHECKED}"),
        ],
        notes: vec![format!(
            "maximality of degree-2 generators in K[{var}] is decided over Q(s), which is not algebraically closed"
        )],
    })
}

impl SpectrumReport {
    /// True iff every closure, Goldie and scan witness passed.
    pub fn all_passed(&self) -> bool {
        self.degrees.iter().all(|r| {
            r.lambdas.iter().all(|l| l.m_is_maximal && l.closure.passed() && l.goldie.passed() && l.scan == [r.m])
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Spectrum of {}\n", self.family);
        let _ = writeln!(out, "schema `{}`, m ≤ {}, scan bound {}\n", self.schema, self.m_max, self.scan_bound);
        out.push_str("## Hypotheses\n\n");
        for h in &self.hypotheses {
            let _ = writeln!(out, "- {h}");
        }
        out.push_str("\n## Height one\n\n");
        let _ = writeln!(out, "{}\n", self.height_one.description);
        out.push_str("| m | p_m(X) | v^(m)A | certified |\n|---|---|---|---|\n");
        for c in &self.height_one.pm_certificates {
            let _ = writeln!(out, "| {} | {} | ({}) | {} |", c.m, c.p, c.vm_generator, c.certified);
        }
        out.push_str("\n## Height two\n\n");
        out.push_str("| m | sign | λ | M | scan | I_0 | closure | Goldie rank |\n|---|---|---|---|---|---|---|---|\n");
        for r in &self.degrees {
            for l in &r.lambdas {
                let sign = if l.sign > 0 { "+" } else { "-" };
                let i0 = l.jm.components.get(&0).map(|i| i.generator.as_str()).unwrap_or("1");
                let scan: Vec<_> = l.scan.iter().map(u32::to_string).collect();
                let rank = l.goldie_rank.map_or_else(|| "failed".to_string(), |k| k.to_string());
                let _ = writeln!(
                    out,
                    "| {} | {sign} | {} | ({}) | {{{}}} | ({i0}) | {} | {rank} |",
                    r.m,
                    l.value,
                    l.m_generator,
                    scan.join(", "),
                    if l.closure.passed() { "ok" } else { "failed" },
                );
            }
        }
        match self.d {
            Some(d) => {
                let _ = writeln!(out, "\nd = {d}");
            }
            None => out.push_str("\nd varies with m\n"),
        }
        out.push_str("\n## Conclusions\n\n");
        for c in self.conclusions.iter().chain(&self.notes) {
            let _ = writeln!(out, "- {c}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn usl2_report() {
        let r = spectrum_report(&ExampleFamily::Usl2, 4).unwrap();
        let values: Vec<_> = r.degrees.iter().flat_map(|d| d.lambdas.iter().map(|l| l.value.clone())).collect();
        let want: Vec<_> = [(1, 4), (1, 1), (9, 4), (4, 1)].iter().map(|&(a, b)| Scalar::ratio(a, b).to_string()).collect();
        assert_eq!(values, want);
        assert_eq!(r.d, Some(1));
        assert!(r.all_passed());
        for d in &r.degrees {
            assert_eq!(d.lambdas[0].goldie_rank, Some(d.m));
        }
    }

    #[test]
    fn qtorus_report_has_d_two() {
        let r = spectrum_report(&ExampleFamily::Qtorus { p: 3 }, 3).unwrap();
        assert_eq!(r.d, Some(2));
        assert!(r.all_passed());
        let ranks: Vec<_> = r.degrees.iter().map(|d| d.lambdas.iter().map(|l| l.goldie_rank).collect::<Vec<_>>()).collect();
        assert_eq!(ranks, vec![vec![Some(1); 2], vec![Some(2); 2], vec![Some(3); 2]]);
    }

    #[test]
    fn markdown_is_deterministic() {
        let a = spectrum_report(&ExampleFamily::Uqsl2, 2).unwrap();
        let b = spectrum_report(&ExampleFamily::Uqsl2, 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_markdown(), b.to_markdown());
        assert!(a.to_markdown().contains("d = 2"));
    }

    #[test]
    fn rejects_adu_and_zero_bound() {
        let adu = ExampleFamily::Adu { n: 1, f: crate::basealg::CentralPoly::monomial(Scalar::one(), -1) };
        assert!(matches!(spectrum_report(&adu, 2), Err(Error::NoSpectralData(_))));
        assert!(spectrum_report(&ExampleFamily::Usl2, 0).is_err());
    }
}
