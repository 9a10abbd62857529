use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field elements belong to different number fields")]
    FieldMismatch,
    #[error("the zero polynomial has no root profile")]
    ZeroPolynomial,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("invalid number field: {0}")]
    InvalidField(String),
    #[error("component `{component}`: exponent 2g/(t m) = 2*{g}/({t}*{m}) is not a positive integer")]
    NonIntegralExponent {
        component: String,
        g: u32,
        t: usize,
        m: usize,
    },
    #[error("component `{component}`: {reason}")]
    TypeConstraintViolation { component: String, reason: String },
    #[error("component `{component}`: invalid involution: {reason}")]
    InvalidInvolution { component: String, reason: String },
    #[error("component `{component}`: involution is not positive (leading minor {minor} of the trace form is not positive)")]
    NonPositiveInvolution { component: String, minor: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("component `{component}`: class block is not fixed by the Rosati involution")]
    NotRosatiFixed { component: String },
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("component `{component}`: reduced characteristic polynomial is not a perfect square")]
    SquareExtractionFailed { component: String },
    #[error("product of reduced norms is not a perfect square polynomial")]
    NotAPerfectSquare,
    #[error("pencil polynomial has {real} real roots out of degree {degree}")]
    NonRealRoots { real: usize, degree: usize },
    #[error("engine and reference computation disagree: {0}")]
    OracleDisagreement(String),
    #[error("no regularity found in scan window [{lo}, {hi}]")]
    ScanWindowExhausted { lo: i64, hi: i64 },
}

impl Error {
    /// Errors raised while validating input data, as opposed to failures
    /// of a computation on data that validated.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidRational(_)
                | Error::InvalidField(_)
                | Error::NonIntegralExponent { .. }
                | Error::TypeConstraintViolation { .. }
                | Error::InvalidInvolution { .. }
                | Error::NonPositiveInvolution { .. }
                | Error::InvalidInput(_)
                | Error::NotRosatiFixed { .. }
                | Error::ContextMismatch(_)
                | Error::FieldMismatch
        )
    }
}
