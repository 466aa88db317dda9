use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Integer payloads are carried as decimal strings so the enum stays
/// independent of the integer type the computation ran over.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow")]
    Overflow,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{a} and {b} are not coprime (gcd {gcd})")]
    NotCoprime { a: String, b: String, gcd: String },

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("continued fraction has a zero intermediate denominator")]
    DegenerateCf,

    #[error("the knot is trivial")]
    TrivialKnot,

    #[error("bad tangle {alpha}/{beta}: alpha must be at least 2")]
    BadTangle { alpha: String, beta: String },

    #[error("bad fiber ({alpha},{beta}): alpha must be at least 1")]
    BadFiber { alpha: String, beta: String },

    #[error("Seifert fibration is not unique with fewer than 3 exceptional fibers")]
    AmbiguousFibration,

    #[error("Montesinos presentation has {0} tangles; at least 3 are needed")]
    TooFewTangles(usize),

    #[error("invalid satellite: {0}")]
    InvalidSatellite(String),

    #[error("not a tunnel number one Montesinos knot")]
    NotTunnelNumberOne,

    #[error("no computable Seifert cover for {0}")]
    NoComputableCover(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("integer {value} exceeds the configured cap {cap}")]
    IntegerCap { value: String, cap: String },
}

impl Error {
    /// Stable machine-readable code used in serialized reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Overflow => "overflow",
            Error::DivisionByZero => "division_by_zero",
            Error::NotCoprime { .. } => "not_coprime",
            Error::BadInput(_) => "bad_input",
            Error::DegenerateCf => "degenerate_cf",
            Error::TrivialKnot => "trivial_knot",
            Error::BadTangle { .. } => "bad_tangle",
            Error::BadFiber { .. } => "bad_fiber",
            Error::AmbiguousFibration => "ambiguous_fibration",
            Error::TooFewTangles(_) => "too_few_tangles",
            Error::InvalidSatellite(_) => "invalid_satellite",
            Error::NotTunnelNumberOne => "not_tunnel_number_one",
            Error::NoComputableCover(_) => "no_computable_cover",
            Error::Parse { .. } => "parse_error",
            Error::IntegerCap { .. } => "integer_cap",
        }
    }

    /// True for errors that describe a violated presentation invariant
    /// rather than malformed text or an arithmetic failure.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            Error::NotCoprime { .. }
                | Error::BadTangle { .. }
                | Error::BadFiber { .. }
                | Error::InvalidSatellite(_)
                | Error::BadInput(_)
        )
    }
}
