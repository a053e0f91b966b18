//! Exceptional parameters, the graded ideal `J(M)` and its Goldie decomposition
//! for the built-in families.

pub mod families;
pub mod goldie;
pub mod jm;
pub mod report;
pub mod scan;
pub mod witness;

pub use families::{make_example, Example, ExampleFamily};
pub use goldie::{goldie_decomposition, GoldieReport, SummandWitness, WitnessLine};
pub use jm::{build_jm, pi_product, verify_jm_closure, verify_jm_closure_report, ClosureReport, JmRecord, JmTable};
pub use report::{spectrum_report, DegreeRecord, HeightOne, LambdaEntry, SpectrumReport, SCHEMA};
pub use scan::{exceptional_ideal, exceptional_lambdas, m_ideal, maximality_scan, ExceptionalLambda, LambdaRecord};
pub use witness::{find_pm, find_pm_bivariate, BivariateRecord, BivariateWitness, PmRecord, PmWitness};
