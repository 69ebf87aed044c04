//! Low-velocity and low-momentum series, the reduction to two-dimensional
//! Lorentz kinematics, remainder-order sweeps and the slow-transport
//! synchronization check.
//!
//! Series are evaluated exactly as printed in the source formulas, including
//! the reciprocity series whose quadratic terms disagree with the exact ⊖.
//! [`remainder_order_check`] is what decides whether a truncation matches.

use serde::{Deserialize, Serialize};

use crate::error::{KinematicsError, Result};
use crate::metric::{dispersion_energy, kinematic_length, MassShellQuery};
use crate::sampling::DomainSampler;
use crate::tolerance::scaled_diff;
use crate::transforms::{transform, FourVector};
use crate::velocity::{a_factor, compose, invert, subtract, SignPattern, Velocity3};

pub const DEFAULT_FD_STEP: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesPart {
    pub name: String,
    pub value: f64,
}

/// A truncated series: `value` is the sum of `parts`, accurate up to
/// remainder order `order`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: f64,
    pub parts: Vec<SeriesPart>,
    pub order: u32,
}

impl SeriesResult {
    fn from_parts(parts: Vec<(&str, f64)>, order: u32) -> Self {
        let value = parts.iter().map(|(_, v)| v).sum();
        SeriesResult {
            value,
            parts: parts
                .into_iter()
                .map(|(name, value)| SeriesPart {
                    name: name.to_string(),
                    value,
                })
                .collect(),
            order,
        }
    }

    pub fn part(&self, name: &str) -> Option<f64> {
        self.parts.iter().find(|p| p.name == name).map(|p| p.value)
    }
}

struct Moments {
    sq: f64,
    quart: f64,
    cross: f64,
    triple: f64,
}

fn moments(s: &[f64; 3]) -> Moments {
    let [a, b, c] = *s;
    let (a2, b2, c2) = (a * a, b * b, c * c);
    Moments {
        sq: a2 + b2 + c2,
        quart: a2 * a2 + b2 * b2 + c2 * c2,
        cross: a2 * b2 + b2 * c2 + a2 * c2,
        triple: a * b * c,
    }
}

/// `(A₁ − 1, A₂)`; the constant is kept out so small deviations stay exact.
fn a_series_deviation(s: &Velocity3) -> (f64, f64) {
    let m = moments(&s.components());
    (
        -0.5 * m.sq - 0.125 * m.quart,
        2.0 * m.triple - 1.25 * m.cross,
    )
}

fn a_inv_series_deviation(s: &Velocity3) -> (f64, f64) {
    let m = moments(&s.components());
    (
        0.5 * m.sq + 0.375 * m.quart,
        -2.0 * m.triple + 1.75 * m.cross,
    )
}

/// A(s) ≈ A₁ + A₂.
pub fn a_series(s: &Velocity3) -> SeriesResult {
    let (d1, a2) = a_series_deviation(s);
    SeriesResult::from_parts(vec![("A1", 1.0 + d1), ("A2", a2)], 5)
}

/// 1/A(s) ≈ (A⁻¹)₁ + (A⁻¹)₂.
pub fn a_inv_series(s: &Velocity3) -> SeriesResult {
    let (d1, a2) = a_inv_series_deviation(s);
    SeriesResult::from_parts(vec![("Ainv1", 1.0 + d1), ("Ainv2", a2)], 5)
}

/// ln A(s) = ¼ Σ_A ln(1 + ε_A·s), accurate for small s.
fn ln_a(s: &Velocity3) -> Result<f64> {
    s.check_domain()?;
    let comps = s.components();
    Ok(0.25
        * SignPattern::ALL
            .iter()
            .map(|e| e.dot(&comps).ln_1p())
            .sum::<f64>())
}

/// A(s) − 1 without cancellation.
pub fn a_factor_minus_one(s: &Velocity3) -> Result<f64> {
    Ok(ln_a(s)?.exp_m1())
}

/// 1/A(s) − 1 without cancellation.
pub fn a_inv_minus_one(s: &Velocity3) -> Result<f64> {
    Ok((-ln_a(s)?).exp_m1())
}

/// Printed quadratic truncation of ⊖s.
pub fn invert_series(s: &Velocity3) -> Velocity3 {
    let [a, b, c] = s.components();
    Velocity3::unchecked(
        -a - a * a - (b - c) * (b - c),
        -b - b * b - (a - c) * (a - c),
        -c - c * c - (a - b) * (a - b),
    )
}

/// Quadratic truncation of a ⊖ b (minuend `a`, subtrahend `b`).
pub fn subtract_series(a: &Velocity3, b: &Velocity3) -> Velocity3 {
    let [a1, a2, a3] = a.components();
    let [b1, b2, b3] = b.components();
    Velocity3::unchecked(
        a1 - b1 + 2.0 * b2 * b3 - b2 * a3 - a2 * b3,
        a2 - b2 + 2.0 * b1 * b3 - b1 * a3 - a1 * b3,
        a3 - b3 + 2.0 * b1 * b2 - b1 * a2 - a1 * b2,
    )
}

/// Quadratic truncation of a ⊕ b.
pub fn compose_series(a: &Velocity3, b: &Velocity3) -> Velocity3 {
    let [a1, a2, a3] = a.components();
    let [b1, b2, b3] = b.components();
    Velocity3::unchecked(
        a1 + b1 + a2 * b3 + a3 * b2,
        a2 + b2 + a1 * b3 + a3 * b1,
        a3 + b3 + a1 * b2 + a2 * b1,
    )
}

/// E ≈ m + |P|²/2m + Σ P_a⁴/8m³ + E_𝒜, with the anisotropic correction
/// E_𝒜 = −2P₁P₂P₃/m² − (5/4m³)Σ_{a<b} P_a²P_b², as printed.
///
/// The quartic coefficients of this form do not match the mass shell, so its
/// remainder is only O(|P|⁴); see [`energy_series_corrected`].
pub fn energy_series(q: &MassShellQuery) -> SeriesResult {
    energy_series_with(q, 1.0 / 8.0, -1.25)
}

/// The energy series with the quartic coefficients of the true expansion of
/// the mass shell: −Σ P_a⁴/8m³ and +(3/4m³)Σ_{a<b} P_a²P_b².
pub fn energy_series_corrected(q: &MassShellQuery) -> SeriesResult {
    energy_series_with(q, -1.0 / 8.0, 0.75)
}

fn energy_series_with(q: &MassShellQuery, quartic: f64, cross: f64) -> SeriesResult {
    let m = q.mass();
    let mo = moments(&q.momentum());
    let isotropic = mo.sq / (2.0 * m) + quartic * mo.quart / (m * m * m);
    let anisotropic = -2.0 * mo.triple / (m * m) + cross * mo.cross / (m * m * m);
    SeriesResult::from_parts(
        vec![
            ("rest", m),
            ("isotropic", isotropic),
            ("anisotropic", anisotropic),
        ],
        5,
    )
}

/// Which truncated series a remainder sweep targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesOp {
    ASeries,
    AInvSeries,
    InvertSeries,
    SubtractSeries,
    ComposeSeries,
    EnergySeries,
    EnergySeriesCorrected,
}

impl SeriesOp {
    pub const ALL: [SeriesOp; 7] = [
        SeriesOp::ASeries,
        SeriesOp::AInvSeries,
        SeriesOp::InvertSeries,
        SeriesOp::SubtractSeries,
        SeriesOp::ComposeSeries,
        SeriesOp::EnergySeries,
        SeriesOp::EnergySeriesCorrected,
    ];

    /// Remainder order the truncation claims.
    pub fn claimed_order(self) -> u32 {
        match self {
            SeriesOp::ASeries
            | SeriesOp::AInvSeries
            | SeriesOp::EnergySeries
            | SeriesOp::EnergySeriesCorrected => 5,
            SeriesOp::InvertSeries | SeriesOp::SubtractSeries | SeriesOp::ComposeSeries => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesOp::ASeries => "a-series",
            SeriesOp::AInvSeries => "a-inv-series",
            SeriesOp::InvertSeries => "invert-series",
            SeriesOp::SubtractSeries => "subtract-series",
            SeriesOp::ComposeSeries => "compose-series",
            SeriesOp::EnergySeries => "energy-series",
            SeriesOp::EnergySeriesCorrected => "energy-series-corrected",
        }
    }

    pub fn from_name(name: &str) -> Option<SeriesOp> {
        Self::ALL.into_iter().find(|op| op.name() == name)
    }
}

/// Base point of a remainder sweep; every momentum or velocity component is
/// scaled by 2⁻ᵏ at level k, the mass is held fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SeriesInput {
    Velocity(Velocity3),
    Pair(Velocity3, Velocity3),
    Momentum(MassShellQuery),
}

impl SeriesInput {
    fn scaled(&self, t: f64) -> Result<SeriesInput> {
        Ok(match self {
            SeriesInput::Velocity(s) => SeriesInput::Velocity(s.scaled(t)),
            SeriesInput::Pair(a, b) => SeriesInput::Pair(a.scaled(t), b.scaled(t)),
            SeriesInput::Momentum(q) => {
                SeriesInput::Momentum(MassShellQuery::new(q.mass(), q.momentum().map(|p| t * p))?)
            }
        })
    }
}

fn mismatched(op: SeriesOp) -> KinematicsError {
    KinematicsError::domain(format!("input kind does not match {}", op.name()))
}

fn max3(x: Velocity3, y: Velocity3) -> f64 {
    let (x, y) = (x.components(), y.components());
    (0..3).map(|i| (x[i] - y[i]).abs()).fold(0.0, f64::max)
}

/// |exact − series| for one op at one input.
pub fn series_error(op: SeriesOp, input: &SeriesInput) -> Result<f64> {
    match (op, input) {
        (SeriesOp::ASeries, SeriesInput::Velocity(s)) => {
            let (d1, d2) = a_series_deviation(s);
            Ok((a_factor_minus_one(s)? - (d1 + d2)).abs())
        }
        (SeriesOp::AInvSeries, SeriesInput::Velocity(s)) => {
            let (d1, d2) = a_inv_series_deviation(s);
            Ok((a_inv_minus_one(s)? - (d1 + d2)).abs())
        }
        (SeriesOp::InvertSeries, SeriesInput::Velocity(s)) => {
            Ok(max3(invert(s)?, invert_series(s)))
        }
        (SeriesOp::SubtractSeries, SeriesInput::Pair(a, b)) => {
            Ok(max3(subtract(a, b)?, subtract_series(a, b)))
        }
        (SeriesOp::ComposeSeries, SeriesInput::Pair(a, b)) => {
            Ok(max3(compose(a, b)?, compose_series(a, b)))
        }
        (SeriesOp::EnergySeries, SeriesInput::Momentum(q)) => {
            Ok((dispersion_energy(q)? - energy_series(q).value).abs())
        }
        (SeriesOp::EnergySeriesCorrected, SeriesInput::Momentum(q)) => {
            Ok((dispersion_energy(q)? - energy_series_corrected(q).value).abs())
        }
        _ => Err(mismatched(op)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderRow {
    pub level: u32,
    pub scale: f64,
    pub abs_error: f64,
}

/// Outcome of a remainder sweep. `fitted_slope` is `None` when the series is
/// exact at every level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderReport {
    pub op: SeriesOp,
    pub claimed_order: u32,
    pub fitted_slope: Option<f64>,
    pub passed: bool,
    pub rows: Vec<OrderRow>,
}

/// Least-squares slope of ln(error) against ln(scale) over nonzero errors.
pub fn fit_log_log_slope(rows: &[OrderRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.abs_error > 0.0)
        .map(|r| (r.scale.ln(), r.abs_error.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some(sxy / sxx)
}

/// Sweeps the input through scales 2⁻ᵏ, k = 0..=levels, and checks the fitted
/// log-log slope against the claimed order (with 0.2 slack).
pub fn remainder_order_check(op: SeriesOp, base: &SeriesInput, levels: u32) -> Result<OrderReport> {
    let mut rows = Vec::with_capacity(levels as usize + 1);
    for level in 0..=levels {
        let scale = 0.5f64.powi(level as i32);
        let abs_error = series_error(op, &base.scaled(scale)?)?;
        rows.push(OrderRow {
            level,
            scale,
            abs_error,
        });
    }
    let fitted_slope = fit_log_log_slope(&rows);
    let claimed_order = op.claimed_order();
    let passed = fitted_slope.is_none_or(|s| s >= claimed_order as f64 - 0.2);
    Ok(OrderReport {
        op,
        claimed_order,
        fitted_slope,
        passed,
        rows,
    })
}

/// Worst scaled deviations of the collinear specialization from the
/// two-dimensional Lorentz formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzReport {
    pub samples: usize,
    pub transform: f64,
    pub length: f64,
    pub subtract: f64,
    pub compose: f64,
    pub invert: f64,
}

impl LorentzReport {
    pub fn max_deviation(&self) -> f64 {
        [
            self.transform,
            self.length,
            self.subtract,
            self.compose,
            self.invert,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Random collinear inputs (s² = s³ = 0, Y² = Y³ = 0) against the classical
/// formulas; deviations are `|x − y| / max(1, |x|, |y|)`.
pub fn lorentz_reduction_check(samples: usize, seed: u64) -> Result<LorentzReport> {
    let mut rng = DomainSampler::new(seed);
    let mut report = LorentzReport {
        samples,
        transform: 0.0,
        length: 0.0,
        subtract: 0.0,
        compose: 0.0,
        invert: 0.0,
    };
    let collinear = |v: f64| Velocity3::new(v, 0.0, 0.0);
    for _ in 0..samples {
        let v = rng.uniform(-0.9, 0.9);
        let w = rng.uniform(-0.9, 0.9);
        let y0 = rng.uniform(0.5, 2.0);
        let y1 = y0 * rng.uniform(-0.95, 0.95);
        let (sv, sw) = (collinear(v)?, collinear(w)?);

        let gamma = 1.0 / ((1.0 + v) * (1.0 - v)).sqrt();
        let y = FourVector::new(y0, y1, 0.0, 0.0);
        let got = transform(&sv, &y)?.0;
        let want = [gamma * (y0 + v * y1), gamma * (v * y0 + y1), 0.0, 0.0];
        for i in 0..4 {
            report.transform = report.transform.max(scaled_diff(got[i], want[i]));
        }

        let len = kinematic_length(&y)?;
        report.length = report
            .length
            .max(scaled_diff(len, ((y0 + y1) * (y0 - y1)).sqrt()));

        let sub = subtract(&sv, &sw)?.components();
        report.subtract = report
            .subtract
            .max(scaled_diff(sub[0], (v - w) / (1.0 - w * v)));
        report.subtract = report.subtract.max(sub[1].abs()).max(sub[2].abs());

        let comp = compose(&sv, &sw)?.components();
        report.compose = report
            .compose
            .max(scaled_diff(comp[0], (v + w) / (1.0 + v * w)));
        report.compose = report.compose.max(comp[1].abs()).max(comp[2].abs());

        let inv = invert(&sv)?.components();
        report.invert = report.invert.max(scaled_diff(inv[0], -v));
        report.invert = report.invert.max(inv[1].abs()).max(inv[2].abs());
    }
    Ok(report)
}

/// Clock-rate ratio R(s) = A(u ⊕ s)(1 + s·u) / A(s).
pub fn clock_rate_ratio(u: &Velocity3, s: &Velocity3) -> Result<f64> {
    let w = compose(u, s)?;
    Ok(a_factor(&w)? * (1.0 + s.dot(u)) / a_factor(s)?)
}

fn central_gradient(u: &Velocity3, h: f64) -> Result<[f64; 3]> {
    let mut grad = [0.0; 3];
    for (a, g) in grad.iter_mut().enumerate() {
        let mut e = [0.0; 3];
        e[a] = h;
        let plus = clock_rate_ratio(u, &Velocity3::new(e[0], e[1], e[2])?)?;
        let minus = clock_rate_ratio(u, &Velocity3::new(-e[0], -e[1], -e[2])?)?;
        *g = (plus - minus) / (2.0 * h);
    }
    Ok(grad)
}

fn check_step(h: f64) -> Result<()> {
    if (1e-6..=1e-3).contains(&h) {
        Ok(())
    } else {
        Err(KinematicsError::domain(format!(
            "finite-difference step {h:e} outside [1e-6, 1e-3]"
        )))
    }
}

/// Central-difference gradient ∂R/∂sᵃ at s = 0; slow transport keeps clocks
/// synchronized when all three components vanish.
pub fn sync_check(u: &Velocity3, h: f64) -> Result<[f64; 3]> {
    u.check_domain()?;
    check_step(h)?;
    central_gradient(u, h)
}

/// [`sync_check`] with one Richardson step: (4·D(h/2) − D(h)) / 3.
pub fn sync_check_richardson(u: &Velocity3, h: f64) -> Result<[f64; 3]> {
    u.check_domain()?;
    check_step(h)?;
    let coarse = central_gradient(u, h)?;
    let fine = central_gradient(u, 0.5 * h)?;
    Ok([0, 1, 2].map(|i| (4.0 * fine[i] - coarse[i]) / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: f64, b: f64, c: f64) -> Velocity3 {
        Velocity3::new(a, b, c).unwrap()
    }

    #[test]
    fn a_series_examples() {
        let r = a_series(&Velocity3::ZERO);
        assert_eq!(r.value, 1.0);
        assert_eq!(r.part("A2"), Some(0.0));

        let r = a_series(&v(0.1, 0.0, 0.0));
        assert!((r.value - 0.994_987_5).abs() < 1e-12);
        assert!((r.value - 0.99f64.sqrt()).abs() <= 1.3e-7);

        let r = a_series(&v(0.1, 0.2, 0.3));
        assert!((r.part("A1").unwrap() - 0.928_775).abs() < 1e-15);
        assert!((r.part("A2").unwrap() - 0.005_875).abs() < 1e-15);
        assert!((r.value - 0.934_65).abs() < 1e-15);
        let exact = a_factor(&v(0.1, 0.2, 0.3)).unwrap();
        assert!((r.value - exact).abs() < 2e-3);
        assert_eq!(r.value, r.parts.iter().map(|p| p.value).sum::<f64>());
    }

    #[test]
    fn a_inv_series_tracks_reciprocal() {
        let s = v(0.01, -0.02, 0.015);
        let exact = 1.0 / a_factor(&s).unwrap();
        assert!((a_inv_series(&s).value - exact).abs() < 2e-8);
        assert!((a_inv_minus_one(&s).unwrap() - (exact - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn velocity_series_examples() {
        let r = invert_series(&v(0.1, 0.0, 0.0)).components();
        for (a, b) in r.iter().zip([-0.11, -0.01, -0.01]) {
            assert!((a - b).abs() < 1e-16);
        }
        let b = v(0.2, -0.1, 0.05);
        assert_eq!(compose_series(&Velocity3::ZERO, &b), b);
        let r = compose_series(&v(0.1, 0.0, 0.0), &v(0.0, 0.2, 0.0)).components();
        for (a, b) in r.iter().zip([0.1, 0.2, 0.02]) {
            assert!((a - b).abs() < 1e-16);
        }
        let s = v(0.1, 0.2, 0.3);
        assert_eq!(subtract_series(&s, &s).components(), [0.0; 3]);
    }

    #[test]
    fn energy_series_examples() {
        let q = MassShellQuery::new(2.0, [0.0; 3]).unwrap();
        let r = energy_series(&q);
        assert_eq!(r.value, 2.0);
        assert_eq!(r.part("anisotropic"), Some(0.0));

        let p = 0.05;
        let r = energy_series(&MassShellQuery::new(1.0, [p, 0.0, 0.0]).unwrap());
        assert_eq!(r.part("anisotropic"), Some(0.0));
        assert!((r.value - (1.0 + p * p / 2.0 + p.powi(4) / 8.0)).abs() < 1e-16);

        let r = energy_series(&MassShellQuery::new(1.0, [0.1, 0.2, 0.3]).unwrap());
        assert!((r.value - 1.0531).abs() < 1e-12);
        assert!((r.part("anisotropic").unwrap() + 0.018_125).abs() < 1e-15);
    }

    #[test]
    fn order_check_examples() {
        let r = remainder_order_check(
            SeriesOp::ASeries,
            &SeriesInput::Velocity(v(0.1, 0.2, 0.3)),
            5,
        )
        .unwrap();
        assert!(r.fitted_slope.unwrap() >= 4.8, "{r:?}");
        assert!(r.passed);

        let q = MassShellQuery::new(1.0, [0.1, 0.2, 0.3]).unwrap();
        let r = remainder_order_check(
            SeriesOp::EnergySeriesCorrected,
            &SeriesInput::Momentum(q),
            5,
        )
        .unwrap();
        assert!(r.fitted_slope.unwrap() >= 4.8, "{r:?}");

        let r = remainder_order_check(
            SeriesOp::ASeries,
            &SeriesInput::Velocity(v(0.1, 0.0, 0.0)),
            5,
        )
        .unwrap();
        assert!(r.fitted_slope.unwrap() >= 5.8, "{r:?}");

        let zero = SeriesInput::Pair(Velocity3::ZERO, Velocity3::ZERO);
        let r = remainder_order_check(SeriesOp::ComposeSeries, &zero, 3).unwrap();
        assert_eq!(r.fitted_slope, None);
        assert!(r.passed);

        assert!(series_error(
            SeriesOp::EnergySeries,
            &SeriesInput::Velocity(Velocity3::ZERO)
        )
        .is_err());
    }

    #[test]
    fn printed_energy_series_is_fourth_order() {
        let q = MassShellQuery::new(1.0, [0.1, 0.2, 0.3]).unwrap();
        let r =
            remainder_order_check(SeriesOp::EnergySeries, &SeriesInput::Momentum(q), 5).unwrap();
        assert!((r.fitted_slope.unwrap() - 4.0).abs() < 0.2, "{r:?}");
        assert!(!r.passed);
        let c = energy_series_corrected(&q).value;
        assert!((c - 1.060_45).abs() < 1e-12, "{c}");
    }

    #[test]
    fn printed_reciprocity_series_is_only_first_order() {
        let r = remainder_order_check(
            SeriesOp::InvertSeries,
            &SeriesInput::Velocity(v(0.1, 0.2, 0.3)),
            5,
        )
        .unwrap();
        let slope = r.fitted_slope.unwrap();
        assert!((slope - 2.0).abs() < 0.2, "{r:?}");
        assert!(!r.passed);
    }

    #[test]
    fn lorentz_reduction_small_sweep() {
        let r = lorentz_reduction_check(200, 11).unwrap();
        assert!(r.max_deviation() <= 1e-14, "{r:?}");
        let zero = lorentz_reduction_check(0, 1).unwrap();
        assert_eq!(zero.max_deviation(), 0.0);
    }

    #[test]
    fn sync_examples() {
        assert_eq!(sync_check(&Velocity3::ZERO, 1e-5).unwrap(), [0.0; 3]);
        for u in [v(0.2, 0.0, 0.0), v(0.1, 0.2, 0.3)] {
            let g = sync_check(&u, 1e-5).unwrap();
            assert!(g.iter().all(|x| x.abs() <= 1e-8), "{g:?}");
            let g = sync_check_richardson(&u, 1e-4).unwrap();
            assert!(g.iter().all(|x| x.abs() <= 1e-8), "{g:?}");
        }
        let r0 = clock_rate_ratio(&v(0.2, 0.0, 0.0), &Velocity3::ZERO).unwrap();
        assert!((r0 - a_factor(&v(0.2, 0.0, 0.0)).unwrap()).abs() < 1e-15);
        assert!(sync_check(&Velocity3::ZERO, 0.1).is_err());
    }
}
