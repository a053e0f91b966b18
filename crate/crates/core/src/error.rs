use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands belong to different algebras")]
    SignatureMismatch,

    #[error("invalid algebra signature: {0}")]
    InvalidSignature(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("element is not central: {0}")]
    NotCentral(String),

    #[error("element does not lie in the central univariate subring")]
    NotCentralUnivariate,

    #[error("{0} is not a splitting element")]
    NotSplitting(String),

    #[error("construction requires rho = 1")]
    NonConformal,

    #[error("ideal is not stable under the automorphism")]
    NotStable,

    #[error("unsupported quotient: {0}")]
    UnsupportedQuotient(String),

    #[error("quotient by the unit ideal is the zero ring")]
    DegenerateQuotient,

    #[error("ideals live in different subrings")]
    MixedSubrings,

    #[error("maximality is undecidable at degree {0} over Q(s)")]
    UndecidableDegree(usize),

    #[error("residue ring is not finite dimensional")]
    InfiniteResidue,

    #[error("resultant needs an input of positive degree in the eliminated variable")]
    ConstantResultantInputs,

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("family {0} has no spectral closed forms")]
    NoSpectralData(String),

    #[error("lambda is not exceptional for m = {0}")]
    NotExceptional(u32),

    #[error("translates M_{0} and M_{1} coincide")]
    NonDistinctTranslates(u32, u32),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("witness failure: {0}")]
    Witness(String),
}
