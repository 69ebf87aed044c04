use thiserror::Error;

/// Failures of the floating-point kinematics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KinematicsError {
    /// A positivity condition was violated; `inequality` names the failing one.
    #[error("domain error: {inequality}")]
    Domain { inequality: String },

    /// ⊖ hit the pole K(s) = 0.
    #[error("singular inversion: |K(s)| = {k:e} is below the threshold")]
    SingularInversion { k: f64 },

    /// 1 + a·b vanished (or went negative) in the composition law.
    #[error("degenerate composition denominator 1 + a·b = {value:e}")]
    DegenerateDenominator { value: f64 },

    #[error("division by zero in {what}")]
    DivisionByZero { what: &'static str },

    #[error("invalid mass {0}: must be strictly positive and finite")]
    InvalidMass(f64),

    #[error("non-finite input in {0}")]
    NonFinite(&'static str),
}

impl KinematicsError {
    pub(crate) fn domain(inequality: impl Into<String>) -> Self {
        KinematicsError::Domain {
            inequality: inequality.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, KinematicsError>;
