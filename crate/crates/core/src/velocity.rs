//! Three-velocities and their algebra: the scalar factors A(s) and K(s),
//! inversion ⊖, composition ⊕ and subtraction.
//!
//! Everything is indexed by the four sign patterns ε_A. A velocity `s` is in
//! the domain when all four factors `1 + ε_A·s` are strictly positive.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KinematicsError, Result};

/// |K(s)| below this is treated as the pole of ⊖.
pub const SINGULAR_K_THRESHOLD: f64 = 1e-14;

/// Denominators (1 + a·b, domain factors of a subtrahend) must exceed this.
pub const DENOMINATOR_EPSILON: f64 = 1e-14;

/// One of the four sign triples ε₁..ε₄.
///
/// The set is closed under componentwise multiplication (a Klein four-group
/// with ε₁ as identity) and every triple multiplies out to +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignPattern {
    index: u8,
}

impl SignPattern {
    pub const E1: SignPattern = SignPattern { index: 1 };
    pub const E2: SignPattern = SignPattern { index: 2 };
    pub const E3: SignPattern = SignPattern { index: 3 };
    pub const E4: SignPattern = SignPattern { index: 4 };
    pub const ALL: [SignPattern; 4] = [Self::E1, Self::E2, Self::E3, Self::E4];

    const TABLE: [[i8; 3]; 4] = [[1, 1, 1], [-1, 1, -1], [1, -1, -1], [-1, -1, 1]];

    /// Pattern by its 1-based index.
    pub fn from_index(index: usize) -> Option<SignPattern> {
        (1..=4)
            .contains(&index)
            .then_some(SignPattern { index: index as u8 })
    }

    pub fn from_signs(signs: [i8; 3]) -> Option<SignPattern> {
        Self::TABLE
            .iter()
            .position(|t| *t == signs)
            .map(|i| SignPattern { index: i as u8 + 1 })
    }

    /// 1-based index A.
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn signs(self) -> [i8; 3] {
        Self::TABLE[self.index as usize - 1]
    }

    pub fn as_f64(self) -> [f64; 3] {
        self.signs().map(f64::from)
    }

    pub fn dot(self, v: &[f64; 3]) -> f64 {
        let e = self.as_f64();
        e[0] * v[0] + e[1] * v[1] + e[2] * v[2]
    }

    /// Componentwise product; stays inside the set.
    pub fn mul(self, other: SignPattern) -> SignPattern {
        let (a, b) = (self.signs(), other.signs());
        Self::from_signs([a[0] * b[0], a[1] * b[1], a[2] * b[2]])
            .expect("sign patterns are closed under multiplication")
    }

    /// Human-readable `1+s¹+s²+s³`-style label for the A-th domain factor.
    pub fn factor_label(self) -> String {
        const SUP: [&str; 3] = ["¹", "²", "³"];
        let mut out = String::from("1");
        for (i, sign) in self.signs().iter().enumerate() {
            out.push(if *sign > 0 { '+' } else { '−' });
            out.push('s');
            out.push_str(SUP[i]);
        }
        out
    }
}

/// A relative three-velocity (c = 1).
///
/// [`Velocity3::new`] enforces the positivity domain; [`Velocity3::unchecked`]
/// skips it so boundary points such as the light-like sign triples can be
/// studied with the same algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Velocity3 {
    s: [f64; 3],
}

impl Velocity3 {
    pub const ZERO: Velocity3 = Velocity3 { s: [0.0; 3] };

    pub fn new(s1: f64, s2: f64, s3: f64) -> Result<Self> {
        Self::try_from_array([s1, s2, s3])
    }

    pub fn try_from_array(s: [f64; 3]) -> Result<Self> {
        let v = Velocity3 { s };
        v.check_domain()?;
        Ok(v)
    }

    pub const fn unchecked(s1: f64, s2: f64, s3: f64) -> Self {
        Velocity3 { s: [s1, s2, s3] }
    }

    pub const fn from_array_unchecked(s: [f64; 3]) -> Self {
        Velocity3 { s }
    }

    pub fn components(&self) -> [f64; 3] {
        self.s
    }

    pub fn dot(&self, other: &Velocity3) -> f64 {
        self.s[0] * other.s[0] + self.s[1] * other.s[1] + self.s[2] * other.s[2]
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn scaled(&self, t: f64) -> Velocity3 {
        Velocity3 {
            s: self.s.map(|x| t * x),
        }
    }

    /// The four factors `1 + ε_A·s`, A = 1..4.
    pub fn domain_factors(&self) -> [f64; 4] {
        SignPattern::ALL.map(|e| 1.0 + e.dot(&self.s))
    }

    pub fn in_domain(&self) -> bool {
        self.check_domain().is_ok()
    }

    /// Names the first violated positivity condition.
    pub fn check_domain(&self) -> Result<()> {
        if self.s.iter().any(|x| !x.is_finite()) {
            return Err(KinematicsError::NonFinite("velocity"));
        }
        for (e, f) in SignPattern::ALL.iter().zip(self.domain_factors()) {
            if f <= 0.0 {
                return Err(KinematicsError::domain(format!("{} ≤ 0", e.factor_label())));
            }
        }
        Ok(())
    }

    /// Rebuilds the velocity whose domain factors are proportional to `weights`:
    /// `sᵃ = Σ_A ε_Aᵃ w_A / Σ_A w_A`.
    pub fn from_factor_weights(weights: [f64; 4]) -> Result<Velocity3> {
        let total: f64 = weights.iter().sum();
        if total == 0.0 {
            return Err(KinematicsError::DivisionByZero {
                what: "factor weights",
            });
        }
        // Positive and negative halves summed separately: equal weights
        // cancel exactly.
        let s = [0, 1, 2].map(|a| {
            let (mut plus, mut minus) = (0.0, 0.0);
            for (e, w) in SignPattern::ALL.iter().zip(weights) {
                if e.signs()[a] > 0 {
                    plus += w;
                } else {
                    minus += w;
                }
            }
            plus - minus
        });
        Ok(Velocity3 {
            s: s.map(|x| x / total),
        })
    }
}

impl fmt::Display for Velocity3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.s[0], self.s[1], self.s[2])
    }
}

/// Product of the four domain factors, i.e. A(s)⁴.
pub fn a_factor_fourth_power(s: &Velocity3) -> f64 {
    s.domain_factors().iter().product()
}

/// The fourth-root factor A(s) = (Π_A (1 + ε_A·s))^¼.
///
/// Zero on the boundary; a negative factor is a domain error rather than a
/// complex root.
pub fn a_factor(s: &Velocity3) -> Result<f64> {
    let factors = s.domain_factors();
    if factors.contains(&0.0) {
        return Ok(0.0);
    }
    if let Some((e, _)) = SignPattern::ALL.iter().zip(factors).find(|(_, f)| *f < 0.0) {
        return Err(KinematicsError::domain(format!("{} < 0", e.factor_label())));
    }
    Ok(factors.iter().product::<f64>().sqrt().sqrt())
}

/// K(s) = 1 − |s|² + 2s¹s²s³.
pub fn k_factor(s: &Velocity3) -> f64 {
    let [a, b, c] = s.s;
    1.0 - a * a - b * b - c * c + 2.0 * a * b * c
}

/// The reciprocal velocity ⊖s.
///
/// Evaluated in factor form: the bracket of each component and 4K(s) are the
/// signed and plain sums of the weights `w_A = Π_{B≠A} (1 + ε_B·s)`, so inside
/// the domain the denominator is a sum of positive terms.
pub fn invert(s: &Velocity3) -> Result<Velocity3> {
    let k = k_factor(s);
    if k.abs() < SINGULAR_K_THRESHOLD {
        return Err(KinematicsError::SingularInversion { k });
    }
    let f = s.domain_factors();
    let (f12, f34) = (f[0] * f[1], f[2] * f[3]);
    let w = [f[1] * f34, f[0] * f34, f[3] * f12, f[2] * f12];
    Velocity3::from_factor_weights(w).map_err(|_| KinematicsError::SingularInversion { k })
}

/// The composition law a ⊕ b.
///
/// Each component `(aᵃ + bᵃ + a^b b^c + a^c b^b) / (1 + a·b)` is evaluated
/// through the identity `4(1 + a·b)(1 + ε_A·(a⊕b)) = 4f_A(a)f_A(b)`, i.e. as
/// a weighted mean of the sign triples with weights `f_A(a)·f_A(b)`.
pub fn compose(a: &Velocity3, b: &Velocity3) -> Result<Velocity3> {
    let denom = 1.0 + a.dot(b);
    if denom <= DENOMINATOR_EPSILON {
        return Err(KinematicsError::DegenerateDenominator { value: denom });
    }
    if *a == Velocity3::ZERO {
        return Ok(*b);
    }
    if *b == Velocity3::ZERO {
        return Ok(*a);
    }
    let (fa, fb) = (a.domain_factors(), b.domain_factors());
    let weights = [0, 1, 2, 3].map(|i| fa[i] * fb[i]);
    let out = if a.in_domain() && b.in_domain() {
        let out = Velocity3::from_factor_weights(weights)?;
        out.check_domain()?;
        out
    } else {
        let [a1, a2, a3] = a.s;
        let [b1, b2, b3] = b.s;
        Velocity3 {
            s: [
                (a1 + b1 + a2 * b3 + a3 * b2) / denom,
                (a2 + b2 + a1 * b3 + a3 * b1) / denom,
                (a3 + b3 + a1 * b2 + a2 * b1) / denom,
            ],
        }
    };
    Ok(out)
}

/// The subtraction law s₃ ⊖ s₂ via the four factor ratios
/// `r_A = (1 + ε_A·s₃) / (1 + ε_A·s₂)`.
pub fn subtract(s3: &Velocity3, s2: &Velocity3) -> Result<Velocity3> {
    let f3 = s3.domain_factors();
    let f2 = s2.domain_factors();
    for (e, f) in SignPattern::ALL.iter().zip(f2) {
        if f <= DENOMINATOR_EPSILON {
            return Err(KinematicsError::domain(format!(
                "{} ≤ 0 for the subtrahend",
                e.factor_label()
            )));
        }
    }
    let ratios = [0, 1, 2, 3].map(|i| f3[i] / f2[i]);
    let h: f64 = ratios.iter().sum();
    if h <= DENOMINATOR_EPSILON {
        return Err(KinematicsError::DegenerateDenominator { value: h });
    }
    Velocity3::from_factor_weights(ratios)
}

/// s₃ ⊖ s₂ computed as s₃ ⊕ (⊖s₂); the cross-check route for [`subtract`].
pub fn subtract_via_compose(s3: &Velocity3, s2: &Velocity3) -> Result<Velocity3> {
    compose(s3, &invert(s2)?)
}
