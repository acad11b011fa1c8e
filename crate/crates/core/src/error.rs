use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interpolated values do not define an integer-valued polynomial")]
    NonIntegralCoefficients,

    #[error("minimizing step did not lower the degree (degree {degree}, remainder degree {remainder})")]
    DegreeNotDropped { degree: usize, remainder: usize },

    #[error("the zero element has no leader")]
    ZeroElement,

    #[error("generator {index} is not homogeneous")]
    NonHomogeneousInput { index: usize },

    #[error("system is given by leader matrices; Groebner computation needs explicit generators")]
    UnsupportedRing,

    #[error("no closed-form bound for codimension {0}; use the general derivation")]
    UnsupportedCodim(usize),

    #[error("codimension {codim} bounds are stated for ideals; got {count} orders")]
    MultipleOrdersUnsupported { codim: usize, count: usize },

    #[error("coefficient b_{index} is not determined by the degree-drop condition")]
    NonForcedCoefficient { index: usize },

    #[error("polynomial of degree {degree} exceeds the ambient bound m - 1 = {max}")]
    DegreeExceedsAmbient { degree: usize, max: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonIntegralCoefficients => "non_integral_coefficients",
            Error::DegreeNotDropped { .. } => "degree_not_dropped",
            Error::ZeroElement => "zero_element",
            Error::NonHomogeneousInput { .. } => "non_homogeneous_input",
            Error::UnsupportedRing => "unsupported_ring",
            Error::UnsupportedCodim(_) => "unsupported_codim",
            Error::MultipleOrdersUnsupported { .. } => "multiple_orders_unsupported",
            Error::NonForcedCoefficient { .. } => "non_forced_coefficient",
            Error::DegreeExceedsAmbient { .. } => "degree_exceeds_ambient",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::InvalidInput(_) => "invalid_input",
        }
    }
}
