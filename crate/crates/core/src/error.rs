use thiserror::Error;

/// Everything that can go wrong while building states or evaluating moments.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinError {
    #[error("number state index {n} outside 0..={twice_j} for twice_j = {twice_j}")]
    IndexOutOfRange { n: i64, twice_j: u32 },

    #[error("spin spaces differ: twice_j {left} vs {right}")]
    SpaceMismatch { left: u32, right: u32 },

    #[error("amplitude vector has length {got}, space dimension is {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("state vector has zero norm")]
    ZeroNorm,

    #[error("variance requested for a non-Hermitian operator")]
    NotHermitian,

    #[error("variance {value:e} is negative beyond roundoff; internal consistency failure")]
    NegativeVariance { value: f64 },

    #[error(
        "degenerate superposition: normalization 2 + 2 cos(theta) xi^(2j) = {denominator:e} \
         (theta -> pi with eta -> 0); the analytic limit is the number state |1>, \
         build it with number_state(space, 1)"
    )]
    DegenerateSuperposition { denominator: f64 },

    #[error(
        "second-order correlation undefined: <N(2j-N+1)> = {denominator:e} (vacuum-like state)"
    )]
    UndefinedCorrelation { denominator: f64 },

    #[error("pole at |eta| = 1: xi_x^2 diverges for the j = 1 even cat state")]
    Pole,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no crossing of xi_y^2 = 1 found on |eta| in (0, {scan_max}]")]
    NoCrossing { scan_max: f64 },
}

pub type Result<T> = std::result::Result<T, SpinError>;
