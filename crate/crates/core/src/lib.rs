//! Four-directional anisotropic relativistic kinematics.
//!
//! The kinematic length of a four-vector Y is the fourth root of the product
//! of its four characteristic coordinates `g_A = Y⁰ + ε_A·Y`, where ε_A runs
//! over the sign triples (+,+,+), (−,+,−), (+,−,−), (−,−,+). Boosts act
//! diagonally on the g_A, velocities combine through the commutative
//! composition law ⊕ with inverse ⊖, and the momentum mass shell is a
//! quartic in the energy.
//!
//! Floating-point operations live in [`velocity`], [`transforms`],
//! [`metric`] and [`approx`]; [`oracle`] mirrors them over exact rationals
//! and adjudicates the algebraic identities.

pub mod approx;
pub mod cli;
pub mod error;
pub mod metric;
pub mod oracle;
pub mod sampling;
pub mod suites;
pub mod tolerance;
pub mod transforms;
pub mod velocity;

pub use error::{KinematicsError, Result};
pub use metric::{
    dispersion_energy, hamiltonian, kinematic_length, momentum_from_velocity, solve_dispersion,
    CoMomentum, MassShellQuery,
};
pub use tolerance::Tolerance;
pub use transforms::{boost_matrix, transform, BoostMatrix, CharCoords, FourVector};
pub use velocity::{a_factor, compose, invert, k_factor, subtract, SignPattern, Velocity3};
