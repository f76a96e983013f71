use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("{0} of the zero polynomial is undefined")]
    ZeroPolynomial(&'static str),

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },

    #[error("length {0} is not odd and positive")]
    EvenLength(usize),

    #[error("length {n} exceeds the supported maximum {max}")]
    LengthTooLarge { n: usize, max: usize },

    #[error("invalid code spec: {0}")]
    InvalidSpec(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("vector length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("the zero code has no minimum distance")]
    ZeroCode,

    #[error("factor product {product} is not x^{n}+1")]
    BadFactorization { product: String, n: usize },

    #[error("code is not dual-containing; the CSS construction does not apply")]
    NotDualContaining,

    #[error("code is not self-orthogonal over R")]
    NotSelfOrthogonal,

    #[error("containment methods disagree: {0}")]
    MethodDisagreement(String),

    #[error("word length {0} is not a multiple of 3")]
    BadWordLength(usize),
}
