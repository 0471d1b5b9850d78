use core::fmt;

/// Failure modes surfaced by the numeric kernel and the analysis layers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A matrix that must be Hermitian is not, within tolerance.
    NotHermitian,
    /// The eigensolver ran out of its iteration budget.
    NoConvergence,
    /// A linear solve hit a pivot below the singularity tolerance.
    Singular,
    /// Operand shapes do not conform.
    Dimension {
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// Fractional order outside (0, 2).
    InvalidOrder(f64),
    /// A frequency argument was negative.
    NegativeFrequency(f64),
    /// Frequency-range parameters are missing, reversed, or negative.
    InvalidRange,
    /// `theta I - A` is singular at the requested frequency.
    Resonance(f64),
    /// A performance bound `delta` must be strictly positive.
    NonpositiveDelta(f64),
    /// The curve pair does not satisfy `det(Delta) < 0`.
    NotACurve,
    /// H-infinity analysis requires a stable system.
    Unstable,
    /// The requested range does not intersect the sweep grid.
    EmptyIntersection,
    /// NaN or infinity appeared inside an iterative routine.
    NumericalFailure,
    /// Doubling never reached a feasible upper bound for the norm bisection.
    NoFeasibleUpperBound,
    /// A solver or grid parameter was out of its documented domain.
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotHermitian => write!(f, "matrix is not Hermitian within tolerance"),
            Error::NoConvergence => write!(f, "eigensolver did not converge within budget"),
            Error::Singular => write!(f, "matrix is singular to working tolerance"),
            Error::Dimension { expected, got } => write!(
                f,
                "dimension mismatch: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            Error::InvalidOrder(nu) => write!(f, "fractional order {nu} outside (0, 2)"),
            Error::NegativeFrequency(w) => write!(f, "negative frequency {w}"),
            Error::InvalidRange => write!(f, "invalid frequency range parameters"),
            Error::Resonance(w) => write!(f, "resonance: theta*I - A singular at omega = {w}"),
            Error::NonpositiveDelta(d) => write!(f, "performance bound delta = {d} must be > 0"),
            Error::NotACurve => write!(f, "curve pair requires det(Delta) < 0"),
            Error::Unstable => write!(f, "system is not stable"),
            Error::EmptyIntersection => write!(f, "frequency range does not meet the grid"),
            Error::NumericalFailure => write!(f, "numerical failure (NaN or Inf) in iteration"),
            Error::NoFeasibleUpperBound => {
                write!(f, "no feasible delta found below the doubling cap")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}
