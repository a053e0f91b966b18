//! Exact symbolic kernel for ambiskew polynomial rings and generalized Weyl
//! algebras over Q(s), with q = s².

pub mod ambiskew;
pub mod basealg;
pub mod error;
pub mod expr;
pub mod fuzz;
pub mod gwa;
pub mod ideal;
pub mod poly;
pub mod scalar;
pub mod spectra;

pub use ambiskew::{AmbiskewRing, OreElem};
pub use basealg::{AlgebraSignature, Automorphism, BaseElem, CentralPoly, Exponents};
pub use error::{Error, Result};
pub use expr::{parse_central, parse_scalar};
pub use gwa::{GwaElem, GwaQuotient, GwaRing};
pub use ideal::{residue_minpoly, resultant, BiPoly, CentralIdeal, IdealRecord, UPoly};
pub use poly::{DensePoly, Field, LaurentPoly, Ring};
pub use scalar::{QPoly, Scalar};
pub use spectra::{
    build_jm, exceptional_ideal, exceptional_lambdas, find_pm, find_pm_bivariate, goldie_decomposition, make_example,
    maximality_scan, pi_product, spectrum_report, verify_jm_closure, Example, ExampleFamily, GoldieReport, JmTable,
    SpectrumReport,
};
