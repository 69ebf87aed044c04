//! Seeded floating-point property sweeps.
//!
//! Every suite draws its own [`DomainSampler`] from the shared seed and
//! reports the worst deviation it saw against a fixed threshold.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::metric::{
    hamiltonian, kinematic_length, momentum_from_velocity, solve_dispersion, CoMomentum,
    MassShellQuery,
};
use crate::oracle::exact::{q_to_f64, RationalCoMomentum, RationalFourVector, RationalVelocity};
use crate::sampling::DomainSampler;
use crate::tolerance::{scaled_diff, Tolerance};
use crate::transforms::{
    boost_matrix, compose_matrices_check, momentum_transform, transform, FourVector,
};
use crate::velocity::{compose, invert, k_factor, subtract, Velocity3};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub samples: usize,
    pub threshold: f64,
    pub max_deviation: f64,
    /// Samples that errored or exceeded the threshold.
    pub failures: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    pub tol: Tolerance,
    /// Lower bound on every domain factor of sampled velocities and every
    /// characteristic coordinate (relative to scale) of sampled vectors.
    pub margin: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            samples: 10_000,
            seed: 7,
            tol: Tolerance::default(),
            margin: DEFAULT_MARGIN,
        }
    }
}

pub const DEFAULT_MARGIN: f64 = 1e-2;

pub const SUITES: [&str; 16] = [
    "length-invariance",
    "hamiltonian-invariance",
    "contraction-invariance",
    "boost-symmetry",
    "boost-determinant",
    "group-law",
    "matrix-commutativity",
    "matrix-inverse",
    "composition-commutativity",
    "composition-associativity",
    "identity-suite",
    "diagonal-factors",
    "k-positivity",
    "dispersion-residual",
    "mass-shell",
    "oracle-agreement",
];

fn relative(x: f64, y: f64) -> f64 {
    if x == y {
        0.0
    } else {
        (x - y).abs() / x.abs().max(y.abs())
    }
}

fn worst(pairs: &[(f64, f64)]) -> f64 {
    pairs
        .iter()
        .map(|(x, y)| scaled_diff(*x, *y))
        .fold(0.0, f64::max)
}

fn worst3(x: &Velocity3, y: &Velocity3) -> f64 {
    let (x, y) = (x.components(), y.components());
    worst(&[(x[0], y[0]), (x[1], y[1]), (x[2], y[2])])
}

fn sweep(
    name: &str,
    cfg: &SuiteConfig,
    samples: usize,
    threshold: f64,
    mut deviation: impl FnMut(&mut Draw) -> Result<f64>,
) -> SuiteReport {
    let offset = SUITES
        .iter()
        .position(|s| *s == name)
        .unwrap_or(SUITES.len()) as u64;
    let mut sampler = Draw {
        rng: DomainSampler::new(cfg.seed.wrapping_mul(1_000_003).wrapping_add(offset)),
        margin: cfg.margin,
    };
    let mut max_deviation = 0.0f64;
    let mut failures = 0;
    for _ in 0..samples {
        match deviation(&mut sampler) {
            Ok(d) if d <= threshold => max_deviation = max_deviation.max(d),
            Ok(d) => {
                failures += 1;
                max_deviation = max_deviation.max(d);
            }
            Err(_) => {
                failures += 1;
                max_deviation = f64::INFINITY;
            }
        }
    }
    SuiteReport {
        name: name.to_string(),
        samples,
        threshold,
        max_deviation,
        failures,
        passed: failures == 0,
    }
}

/// Sampler bound to the configured margin.
struct Draw {
    rng: DomainSampler,
    margin: f64,
}

impl Draw {
    fn velocity(&mut self) -> Velocity3 {
        self.rng.velocity_with_margin(self.margin)
    }

    fn forward_vector(&mut self, scale: f64) -> FourVector {
        self.rng.forward_vector(scale, self.margin)
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.uniform(lo, hi)
    }
}

fn covector(y: FourVector) -> CoMomentum {
    CoMomentum(y.0)
}

/// Runs one named suite; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteReport> {
    let n = cfg.samples;
    let rtol = cfg.tol.rtol;
    let report = match name {
        "length-invariance" => sweep(name, cfg, n, rtol, |r| {
            let s = r.velocity();
            let y = r.forward_vector(1.0);
            Ok(relative(
                kinematic_length(&transform(&s, &y)?)?,
                kinematic_length(&y)?,
            ))
        }),
        "hamiltonian-invariance" => sweep(name, cfg, n, rtol, |r| {
            let s = r.velocity();
            let p = covector(r.forward_vector(1.0));
            Ok(relative(
                hamiltonian(&momentum_transform(&s, &p)?)?,
                hamiltonian(&p)?,
            ))
        }),
        "contraction-invariance" => sweep(name, cfg, n, rtol, |r| {
            let s = r.velocity();
            let y = r.forward_vector(1.0);
            let p = covector(r.forward_vector(1.0));
            let lhs = momentum_transform(&s, &p)?.contract(&transform(&s, &y)?);
            Ok(relative(lhs, p.contract(&y)))
        }),
        "boost-symmetry" => sweep(name, cfg, n, 0.0, |r| {
            let m = boost_matrix(&r.velocity())?;
            Ok(if m.is_symmetric() { 0.0 } else { f64::INFINITY })
        }),
        "boost-determinant" => sweep(name, cfg, n, rtol, |r| {
            Ok((boost_matrix(&r.velocity())?.determinant() - 1.0).abs())
        }),
        "group-law" | "matrix-commutativity" | "matrix-inverse" => sweep(name, cfg, n, rtol, |r| {
            let (a, b) = (r.velocity(), r.velocity());
            let report = compose_matrices_check(&a, &b, &cfg.tol)?;
            let item = match name {
                "group-law" => report.group_law,
                "matrix-commutativity" => report.commutativity,
                _ => report.inverse,
            };
            let scale = boost_matrix(&a)?
                .max_abs()
                .max(boost_matrix(&b)?.max_abs())
                .max(1.0);
            Ok(item.max_deviation / scale / scale)
        }),
        "composition-commutativity" => sweep(name, cfg, n, rtol, |r| {
            let (a, b) = (r.velocity(), r.velocity());
            Ok(worst3(&compose(&a, &b)?, &compose(&b, &a)?))
        }),
        "composition-associativity" => sweep(name, cfg, n, rtol, |r| {
            let (a, b, c) = (r.velocity(), r.velocity(), r.velocity());
            let lhs = compose(&compose(&a, &b)?, &c)?;
            let rhs = compose(&a, &compose(&b, &c)?)?;
            Ok(worst3(&lhs, &rhs))
        }),
        "identity-suite" => sweep(name, cfg, n, rtol, identity_suite_deviation),
        "diagonal-factors" => sweep(name, cfg, n, rtol, |r| {
            let (a, b) = (r.velocity(), r.velocity());
            let c = compose(&a, &b)?;
            let d = 1.0 + a.dot(&b);
            let (fa, fb, fc) = (a.domain_factors(), b.domain_factors(), c.domain_factors());
            let pairs: Vec<(f64, f64)> = (0..4).map(|i| (fc[i] * d, fa[i] * fb[i])).collect();
            Ok(worst(&pairs))
        }),
        "k-positivity" => sweep(name, cfg, n, 0.0, |r| {
            Ok(if k_factor(&r.velocity()) > 0.0 {
                0.0
            } else {
                f64::INFINITY
            })
        }),
        "dispersion-residual" => sweep(name, cfg, n, rtol, |r| {
            let m = r.uniform(0.1, 10.0);
            let p = r
                .velocity()
                .components()
                .map(|x| x * r.uniform(0.0, 5.0) * m);
            let q = MassShellQuery::new(m, p)?;
            Ok(solve_dispersion(&q)?.residual.abs() / m.powi(4))
        }),
        "mass-shell" => sweep(name, cfg, n, 1e-10, |r| {
            let m = r.uniform(0.1, 10.0);
            let scale = r.uniform(0.1, 10.0);
            let v = r.forward_vector(scale);
            Ok(relative(hamiltonian(&momentum_from_velocity(m, &v)?)?, m))
        }),
        "oracle-agreement" => sweep(name, cfg, n, 1.0, |r| oracle_agreement(r, &cfg.tol)),
        _ => return None,
    };
    Some(report)
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .filter_map(|name| run_suite(name, cfg))
        .collect()
}

/// Worst deviation over s⊖s = 0, 0⊖s = ⊖s, 0⊕s = s, s⊕⊖s = 0, a⊖⊖b = a⊕b,
/// ((a⊖b)⊕b)⊕c = a⊕c, a⊕⊖b = a⊖b and a⊖b = ⊖(b⊖a).
fn identity_suite_deviation(r: &mut Draw) -> Result<f64> {
    let (a, b, c) = (r.velocity(), r.velocity(), r.velocity());
    let zero = Velocity3::ZERO;
    let checks = [
        worst3(&subtract(&a, &a)?, &zero),
        worst3(&subtract(&zero, &a)?, &invert(&a)?),
        worst3(&compose(&zero, &a)?, &a),
        worst3(&compose(&a, &invert(&a)?)?, &zero),
        worst3(&subtract(&a, &invert(&b)?)?, &compose(&a, &b)?),
        worst3(
            &compose(&compose(&subtract(&a, &b)?, &b)?, &c)?,
            &compose(&a, &c)?,
        ),
        worst3(&compose(&a, &invert(&b)?)?, &subtract(&a, &b)?),
        worst3(&subtract(&a, &b)?, &invert(&subtract(&b, &a)?)?),
    ];
    Ok(checks.into_iter().fold(0.0, f64::max))
}

/// Largest [`Tolerance::excess`] between floating results and the exact
/// rational evaluation of the same binary inputs; ≤ 1 means agreement.
fn oracle_agreement(r: &mut Draw, tol: &Tolerance) -> Result<f64> {
    let (a, b) = (r.velocity(), r.velocity());
    let y = r.forward_vector(1.0);
    let p = covector(r.forward_vector(1.0));
    let (qa, qb) = (
        RationalVelocity::from_f64(a.components()),
        RationalVelocity::from_f64(b.components()),
    );
    let qy = RationalFourVector::from_f64(y.0);
    let qp = RationalCoMomentum::from_f64(p.0);

    let mut pairs: Vec<(f64, f64)> = Vec::new();
    let mut push3 = |x: Velocity3, exact: Option<RationalVelocity>| {
        if let Some(e) = exact {
            for (u, v) in x.components().into_iter().zip(e.to_f64()) {
                pairs.push((u, v));
            }
        }
    };
    push3(compose(&a, &b)?, qa.compose(&qb));
    push3(invert(&a)?, qa.invert());
    push3(subtract(&a, &b)?, qa.subtract(&qb));
    pairs.push((k_factor(&a), q_to_f64(&qa.k())));
    pairs.push((
        crate::velocity::a_factor_fourth_power(&a),
        q_to_f64(&qa.a4()),
    ));
    pairs.push((kinematic_length(&y)?.powi(4), q_to_f64(&qy.length4())));
    pairs.push((hamiltonian(&p)?.powi(4), q_to_f64(&qp.hamiltonian4())));
    pairs.push((p.contract(&y), q_to_f64(&qp.contract(&qy))));
    Ok(pairs
        .iter()
        .map(|(x, y)| tol.excess(*x, *y))
        .fold(0.0, f64::max))
}
