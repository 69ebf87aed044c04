//! The fourth-root kinematic length F, the Hamiltonian H, isotropic vectors,
//! the momentum map P = m·∂F/∂V and the mass-shell (dispersion) solver.

use serde::{Deserialize, Serialize};

use crate::error::{KinematicsError, Result};
use crate::transforms::{char_coords, inv_char_coords, CharCoords, FourVector};
use crate::velocity::{SignPattern, Velocity3};

/// Characteristic coordinates closer to zero than this are rejected by the
/// momentum map.
pub const CONE_EPSILON: f64 = 1e-300;

/// Covariant components (P₀, P₁, P₂, P₃). Pairs with a [`FourVector`] only
/// through [`CoMomentum::contract`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoMomentum(pub [f64; 4]);

impl CoMomentum {
    pub const fn new(p0: f64, p1: f64, p2: f64, p3: f64) -> Self {
        CoMomentum([p0, p1, p2, p3])
    }

    pub fn components(&self) -> [f64; 4] {
        self.0
    }

    pub fn energy(&self) -> f64 {
        self.0[0]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// P_q Y^q.
    pub fn contract(&self, y: &FourVector) -> f64 {
        self.0.iter().zip(y.0).map(|(p, y)| p * y).sum()
    }

    /// `h_A = P₀ + ε_A·(P₁, P₂, P₃)`, the factors of H⁴.
    pub fn char_coords(&self) -> [f64; 4] {
        let spatial = self.spatial();
        SignPattern::ALL.map(|e| self.0[0] + e.dot(&spatial))
    }
}

/// A massive particle's spatial momentum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassShellQuery {
    mass: f64,
    momentum: [f64; 3],
}

impl MassShellQuery {
    pub fn new(mass: f64, momentum: [f64; 3]) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(KinematicsError::InvalidMass(mass));
        }
        if momentum.iter().any(|p| !p.is_finite()) {
            return Err(KinematicsError::NonFinite("momentum"));
        }
        Ok(MassShellQuery { mass, momentum })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn momentum(&self) -> [f64; 3] {
        self.momentum
    }
}

/// A four-vector on the null hyperplane g_A = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsotropicVector {
    pattern: SignPattern,
    vector: FourVector,
}

impl IsotropicVector {
    pub fn pattern(&self) -> SignPattern {
        self.pattern
    }

    pub fn vector(&self) -> FourVector {
        self.vector
    }
}

const Y_LABELS: [&str; 4] = ["Y⁰+Y¹+Y²+Y³", "Y⁰−Y¹+Y²−Y³", "Y⁰+Y¹−Y²−Y³", "Y⁰−Y¹−Y²+Y³"];
const P_LABELS: [&str; 4] = ["P₀+P₁+P₂+P₃", "P₀−P₁+P₂−P₃", "P₀+P₁−P₂−P₃", "P₀−P₁−P₂+P₃"];

/// (g₁g₂g₃g₄)^¼; exactly 0 when a factor is exactly 0, otherwise every factor
/// must be positive.
fn fourth_root_of_factors(g: [f64; 4], labels: &[&str; 4]) -> Result<f64> {
    if g.iter().any(|x| !x.is_finite()) {
        return Err(KinematicsError::NonFinite("four-vector"));
    }
    if g.contains(&0.0) {
        return Ok(0.0);
    }
    if let Some(i) = g.iter().position(|x| *x < 0.0) {
        return Err(KinematicsError::domain(format!("{} < 0", labels[i])));
    }
    Ok(g.iter().product::<f64>().sqrt().sqrt())
}

/// F(Y) = (g₁g₂g₃g₄)^¼ on the closed forward cone.
pub fn kinematic_length(y: &FourVector) -> Result<f64> {
    fourth_root_of_factors(char_coords(y).0, &Y_LABELS)
}

/// H(P), the same fourth-root form on covariant components.
pub fn hamiltonian(p: &CoMomentum) -> Result<f64> {
    fourth_root_of_factors(p.char_coords(), &P_LABELS)
}

/// Puts `spatial` on the A-th null hyperplane by solving g_A = 0 for the time
/// component.
pub fn isotropic_vector(pattern: SignPattern, spatial: [f64; 3]) -> IsotropicVector {
    let y0 = -pattern.dot(&spatial);
    IsotropicVector {
        pattern,
        vector: FourVector::new(y0, spatial[0], spatial[1], spatial[2]),
    }
}

/// P_p = m ∂F/∂V^p.
///
/// In characteristic form the momentum factors are `h_A = m F(V) / g_A(V)`,
/// which gives H(P) = m directly; the components are recovered with the same
/// linear map that inverts the characteristic coordinates.
pub fn momentum_from_velocity(mass: f64, v4: &FourVector) -> Result<CoMomentum> {
    if !(mass.is_finite() && mass > 0.0) {
        return Err(KinematicsError::InvalidMass(mass));
    }
    let g = char_coords(v4).0;
    if let Some(i) = g.iter().position(|x| !(*x > CONE_EPSILON)) {
        return Err(KinematicsError::domain(format!("{} ≤ 0", Y_LABELS[i])));
    }
    let f = g.iter().product::<f64>().sqrt().sqrt();
    let h = g.map(|x| mass * f / x);
    Ok(CoMomentum(inv_char_coords(&CharCoords(h)).0))
}

/// P₀ in the simplified closed form
/// `m [(V⁰)³ − V⁰|V|² + 2V¹V²V³] / (g₁g₂g₃g₄)^¾`.
pub fn momentum_energy_closed_form(mass: f64, v4: &FourVector) -> Result<f64> {
    let g = char_coords(v4).0;
    if let Some(i) = g.iter().position(|x| !(*x > CONE_EPSILON)) {
        return Err(KinematicsError::domain(format!("{} ≤ 0", Y_LABELS[i])));
    }
    let [v0, v1, v2, v3] = v4.0;
    let numer = v0 * v0 * v0 - v0 * (v1 * v1 + v2 * v2 + v3 * v3) + 2.0 * v1 * v2 * v3;
    let prod: f64 = g.iter().product();
    Ok(mass * numer / prod.powf(0.75))
}

/// vᵃ = Vᵃ / V⁰.
pub fn relative_velocity(v4: &FourVector) -> Result<Velocity3> {
    let v0 = v4.time();
    if v0 == 0.0 {
        return Err(KinematicsError::DivisionByZero { what: "V⁰" });
    }
    Ok(Velocity3::from_array_unchecked(
        v4.spatial().map(|x| x / v0),
    ))
}

/// p_a = P_a / P₀.
pub fn relative_momentum(p: &CoMomentum) -> Result<[f64; 3]> {
    let p0 = p.energy();
    if p0 == 0.0 {
        return Err(KinematicsError::DivisionByZero { what: "P₀" });
    }
    Ok(p.spatial().map(|x| x / p0))
}

/// Root of the mass-shell quartic with solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DispersionRoot {
    pub energy: f64,
    /// `Π_A (E + ε_A·P) − m⁴` at the returned energy.
    pub residual: f64,
    pub iterations: u32,
}

/// Lowest admissible energy: every factor `E + ε_A·P` vanishes or is positive
/// above it.
pub fn dispersion_energy_floor(momentum: &[f64; 3]) -> f64 {
    SignPattern::ALL
        .iter()
        .map(|e| -e.dot(momentum))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Neumaier-compensated sum; near-cancelling shell factors keep their
/// relative accuracy.
fn compensated_sum(xs: &[f64]) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for &x in xs {
        let t = sum + x;
        carry += if sum.abs() >= x.abs() {
            (sum - t) + x
        } else {
            (x - t) + sum
        };
        sum = t;
    }
    sum + carry
}

fn shell_factors(e: f64, momentum: &[f64; 3]) -> [f64; 4] {
    SignPattern::ALL.map(|pat| {
        let [x, y, z] = pat.as_f64();
        compensated_sum(&[e, x * momentum[0], y * momentum[1], z * momentum[2]])
    })
}

/// Adjacent float for positive finite `x`.
fn next_float(x: f64, dir: i64) -> f64 {
    f64::from_bits((x.to_bits() as i64 + dir) as u64)
}

/// Energy E > E_min solving `Π_A (E + ε_A·P) = m⁴`.
pub fn dispersion_energy(q: &MassShellQuery) -> Result<f64> {
    solve_dispersion(q).map(|r| r.energy)
}

/// Bracketed Newton iteration with bisection fallback. The quartic is zero at
/// E_min and strictly increasing beyond it, so the bracket always holds a
/// single root.
pub fn solve_dispersion(q: &MassShellQuery) -> Result<DispersionRoot> {
    const MAX_ITER: u32 = 400;
    let m = q.mass;
    let p = q.momentum;
    let m4 = m * m * m * m;
    let residual = |e: f64| shell_factors(e, &p).iter().product::<f64>() - m4;

    let e_min = dispersion_energy_floor(&p);
    let p_norm2 = p.iter().map(|x| x * x).sum::<f64>();
    let mut lo = e_min;
    let mut width = (m * m + p_norm2).sqrt().max(m);
    while residual(e_min + width) < 0.0 {
        width *= 2.0;
    }
    let mut hi = e_min + width;

    let guess = (m * m + p_norm2).sqrt();
    let mut x = if guess > lo && guess <= hi {
        guess
    } else {
        0.5 * (lo + hi)
    };
    let mut iterations = 0;
    while iterations < MAX_ITER {
        iterations += 1;
        let h = shell_factors(x, &p);
        let fx = h.iter().product::<f64>() - m4;
        if fx == 0.0 {
            break;
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let dfx = h[1] * h[2] * h[3] + h[0] * h[2] * h[3] + h[0] * h[1] * h[3] + h[0] * h[1] * h[2];
        let newton = x - fx / dfx;
        let next = if dfx > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let converged = (next - x).abs() <= 2.0 * f64::EPSILON * next.abs();
        x = next;
        if converged || hi - lo <= 4.0 * f64::EPSILON * hi.abs().max(lo.abs()) {
            break;
        }
    }
    // the stopping tests allow a few ulps of slack; walk to the float with
    // the smallest residual
    let mut energy = x;
    let mut res = residual(x);
    for dir in [-1, 1] {
        for _ in 0..64 {
            let cand = next_float(energy, dir);
            if cand <= e_min {
                break;
            }
            let r = residual(cand);
            if r.abs() >= res.abs() {
                break;
            }
            energy = cand;
            res = r;
        }
    }
    Ok(DispersionRoot {
        energy,
        residual: res,
        iterations,
    })
}
