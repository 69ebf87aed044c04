//! The boost Λ(s), its diagonal (characteristic-coordinate) form, and the
//! vector and covector transformation laws.
//!
//! Every Λ(s) acts diagonally on the characteristic coordinates
//! `g_A = Y⁰ + ε_A·(Y¹, Y², Y³)` with eigenvalues `λ_A = (1 + ε_A·s) / A(s)`.

use serde::{Deserialize, Serialize};

use crate::error::{KinematicsError, Result};
use crate::metric::CoMomentum;
use crate::tolerance::Tolerance;
use crate::velocity::{a_factor, compose, invert, SignPattern, Velocity3};

/// Contravariant components (Y⁰, Y¹, Y², Y³).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const fn new(y0: f64, y1: f64, y2: f64, y3: f64) -> Self {
        FourVector([y0, y1, y2, y3])
    }

    pub fn components(&self) -> [f64; 4] {
        self.0
    }

    pub fn time(&self) -> f64 {
        self.0[0]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    pub fn scaled(&self, t: f64) -> FourVector {
        FourVector(self.0.map(|x| t * x))
    }

    pub fn char_coords(&self) -> CharCoords {
        char_coords(self)
    }

    /// All four characteristic coordinates strictly positive.
    pub fn in_forward_cone(&self) -> bool {
        self.char_coords().0.iter().all(|g| *g > 0.0)
    }
}

/// The characteristic coordinates g₁..g₄ of a four-vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CharCoords(pub [f64; 4]);

impl CharCoords {
    pub const fn new(g: [f64; 4]) -> Self {
        CharCoords(g)
    }

    pub fn to_four_vector(&self) -> FourVector {
        inv_char_coords(self)
    }

    pub fn product(&self) -> f64 {
        self.0.iter().product()
    }
}

/// `g_A = Y⁰ + ε_A·(Y¹, Y², Y³)`.
pub fn char_coords(y: &FourVector) -> CharCoords {
    let spatial = y.spatial();
    CharCoords(SignPattern::ALL.map(|e| y.0[0] + e.dot(&spatial)))
}

/// Inverse of [`char_coords`]: `Y⁰ = ¼Σg_A`, `Yᵃ = ¼Σ ε_Aᵃ g_A`.
pub fn inv_char_coords(g: &CharCoords) -> FourVector {
    let [g1, g2, g3, g4] = g.0;
    FourVector([
        0.25 * (g1 + g2 + g3 + g4),
        0.25 * (g1 - g2 + g3 - g4),
        0.25 * (g1 + g2 - g3 - g4),
        0.25 * (g1 - g2 - g3 + g4),
    ])
}

/// Eigenvalues λ_A(s) of Λ(s) on the characteristic coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenFactors(pub [f64; 4]);

impl EigenFactors {
    pub fn product(&self) -> f64 {
        self.0.iter().product()
    }
}

fn positive_a(s: &Velocity3) -> Result<f64> {
    let a = a_factor(s)?;
    if a > 0.0 {
        Ok(a)
    } else {
        s.check_domain()?;
        Err(KinematicsError::DivisionByZero { what: "A(s)" })
    }
}

pub fn eigenfactors(s: &Velocity3) -> Result<EigenFactors> {
    let a = positive_a(s)?;
    Ok(EigenFactors(s.domain_factors().map(|f| f / a)))
}

/// The kinematic matrix Λᵖ_q(s), row p, column q.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoostMatrix {
    pub entries: [[f64; 4]; 4],
}

impl BoostMatrix {
    pub const IDENTITY: BoostMatrix = BoostMatrix {
        entries: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    };

    /// The shared entry pattern of Λ(s) without the 1/A scale.
    fn pattern(s: [f64; 3]) -> [[f64; 4]; 4] {
        let [s1, s2, s3] = s;
        [
            [1.0, s1, s2, s3],
            [s1, 1.0, s3, s2],
            [s2, s3, 1.0, s1],
            [s3, s2, s1, 1.0],
        ]
    }

    pub fn apply(&self, y: &FourVector) -> FourVector {
        FourVector(self.mul_vec(&y.0))
    }

    /// Same matrix acting on index-down components.
    pub fn apply_covector(&self, p: &CoMomentum) -> CoMomentum {
        CoMomentum(self.mul_vec(&p.0))
    }

    fn mul_vec(&self, x: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (row, o) in self.entries.iter().zip(out.iter_mut()) {
            *o = row.iter().zip(x).map(|(m, v)| m * v).sum();
        }
        out
    }

    pub fn mul(&self, other: &BoostMatrix) -> BoostMatrix {
        let mut entries = [[0.0; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (0..4)
                    .map(|k| self.entries[i][k] * other.entries[k][j])
                    .sum();
            }
        }
        BoostMatrix { entries }
    }

    pub fn transpose(&self) -> BoostMatrix {
        let mut entries = self.entries;
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.entries[j][i];
            }
        }
        BoostMatrix { entries }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Determinant by Laplace expansion over complementary 2×2 minors of
    /// rows (0,1) and (2,3).
    pub fn determinant(&self) -> f64 {
        let m = &self.entries;
        let minor =
            |r: usize, c1: usize, c2: usize| m[r][c1] * m[r + 1][c2] - m[r][c2] * m[r + 1][c1];
        // column pairs with their complements and sign
        const PAIRS: [((usize, usize), (usize, usize), f64); 6] = [
            ((0, 1), (2, 3), 1.0),
            ((0, 2), (1, 3), -1.0),
            ((0, 3), (1, 2), 1.0),
            ((1, 2), (0, 3), 1.0),
            ((1, 3), (0, 2), -1.0),
            ((2, 3), (0, 1), 1.0),
        ];
        PAIRS
            .iter()
            .map(|((a, b), (c, d), sign)| sign * minor(0, *a, *b) * minor(2, *c, *d))
            .sum()
    }

    /// Gauss-Jordan inverse with partial pivoting; `None` if singular.
    pub fn inverse(&self) -> Option<BoostMatrix> {
        let mut a = self.entries;
        let mut inv = BoostMatrix::IDENTITY.entries;
        for col in 0..4 {
            let pivot = (col..4).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
            if a[pivot][col] == 0.0 {
                return None;
            }
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let d = a[col][col];
            for k in 0..4 {
                a[col][k] /= d;
                inv[col][k] /= d;
            }
            for row in 0..4 {
                if row != col {
                    let f = a[row][col];
                    for k in 0..4 {
                        a[row][k] -= f * a[col][k];
                        inv[row][k] -= f * inv[col][k];
                    }
                }
            }
        }
        Some(BoostMatrix { entries: inv })
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .fold(0.0, |m: f64, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, other: &BoostMatrix) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).abs());
            }
        }
        worst
    }

    pub fn close_to(&self, other: &BoostMatrix, tol: &Tolerance) -> bool {
        (0..4).all(|i| (0..4).all(|j| tol.close(self.entries[i][j], other.entries[i][j])))
    }
}

/// Λ(s): diagonal 1/A, row and column 0 carry sᵃ/A, and the spatial pairs
/// (1,2), (1,3), (2,3) carry s³/A, s²/A, s¹/A.
pub fn boost_matrix(s: &Velocity3) -> Result<BoostMatrix> {
    let a = positive_a(s)?;
    let entries = BoostMatrix::pattern(s.components()).map(|row| row.map(|x| x / a));
    Ok(BoostMatrix { entries })
}

/// Closed-form boost Y′ = Λ(s)Y.
pub fn transform(s: &Velocity3, y: &FourVector) -> Result<FourVector> {
    let a = positive_a(s)?;
    Ok(FourVector(boost_closed_form(s.components(), a, y.0)))
}

fn boost_closed_form(s: [f64; 3], a: f64, y: [f64; 4]) -> [f64; 4] {
    let [s1, s2, s3] = s;
    let [y0, y1, y2, y3] = y;
    [
        (y0 + s1 * y1 + s2 * y2 + s3 * y3) / a,
        (s1 * y0 + y1 + s3 * y2 + s2 * y3) / a,
        (s2 * y0 + s3 * y1 + y2 + s1 * y3) / a,
        (s3 * y0 + s2 * y1 + s1 * y2 + y3) / a,
    ]
}

/// Boost through the characteristic coordinates: `g′_A = λ_A g_A`.
pub fn transform_characteristic(s: &Velocity3, g: &CharCoords) -> Result<CharCoords> {
    let l = eigenfactors(s)?;
    Ok(CharCoords([0, 1, 2, 3].map(|i| l.0[i] * g.0[i])))
}

/// Covector law P′ = Λ(⊖s)P.
///
/// Λ(⊖s) is diagonal in the characteristic coordinates with eigenvalues
/// 1/λ_A(s), so the map is applied as `h′_A = h_A / λ_A(s)`, which avoids
/// forming ⊖s and dividing by K(s).
pub fn momentum_transform(s: &Velocity3, p: &CoMomentum) -> Result<CoMomentum> {
    let l = eigenfactors(s)?;
    if *s == Velocity3::ZERO {
        return Ok(*p);
    }
    let h = p.char_coords();
    let moved = CharCoords([0, 1, 2, 3].map(|i| h[i] / l.0[i]));
    Ok(CoMomentum(moved.to_four_vector().0))
}

/// Pass/fail with the worst entrywise deviation seen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckItem {
    pub passed: bool,
    pub max_deviation: f64,
}

impl CheckItem {
    fn compare(lhs: &BoostMatrix, rhs: &BoostMatrix, tol: &Tolerance) -> Self {
        CheckItem {
            passed: lhs.close_to(rhs, tol),
            max_deviation: lhs.max_abs_diff(rhs),
        }
    }
}

/// Group law, commutativity and inverse of the Λ family at one pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupCheckReport {
    pub group_law: CheckItem,
    pub commutativity: CheckItem,
    pub inverse: CheckItem,
}

impl GroupCheckReport {
    pub fn passed(&self) -> bool {
        self.group_law.passed && self.commutativity.passed && self.inverse.passed
    }

    pub fn max_deviation(&self) -> f64 {
        self.group_law
            .max_deviation
            .max(self.commutativity.max_deviation)
            .max(self.inverse.max_deviation)
    }
}

/// Checks Λ(a)Λ(b) = Λ(a⊕b), Λ(a)Λ(b) = Λ(b)Λ(a) and Λ(a)⁻¹ = Λ(⊖a).
pub fn compose_matrices_check(
    a: &Velocity3,
    b: &Velocity3,
    tol: &Tolerance,
) -> Result<GroupCheckReport> {
    let la = boost_matrix(a)?;
    let lb = boost_matrix(b)?;
    let ab = la.mul(&lb);
    let ba = lb.mul(&la);
    let composed = boost_matrix(&compose(a, b)?)?;
    let inv = la.inverse().ok_or(KinematicsError::DivisionByZero {
        what: "singular boost matrix",
    })?;
    let via_ominus = boost_matrix(&invert(a)?)?;
    Ok(GroupCheckReport {
        group_law: CheckItem::compare(&ab, &composed, tol),
        commutativity: CheckItem::compare(&ab, &ba, tol),
        inverse: CheckItem::compare(&inv, &via_ominus, tol),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: f64, b: f64, c: f64) -> Velocity3 {
        Velocity3::new(a, b, c).unwrap()
    }

    fn close4(x: [f64; 4], y: [f64; 4], tol: f64) -> bool {
        x.iter().zip(y).all(|(a, b)| (a - b).abs() <= tol)
    }

    #[test]
    fn boost_matrix_examples() {
        assert_eq!(
            boost_matrix(&Velocity3::ZERO).unwrap(),
            BoostMatrix::IDENTITY
        );

        let m = boost_matrix(&v(0.6, 0.0, 0.0)).unwrap();
        for i in 0..4 {
            assert!((m.entries[i][i] - 1.25).abs() < 1e-15);
        }
        for (i, j) in [(0, 1), (1, 0), (2, 3), (3, 2)] {
            assert!((m.entries[i][j] - 0.75).abs() < 1e-15);
        }
        assert_eq!(m.entries[0][2], 0.0);

        let m = boost_matrix(&v(0.1, 0.2, 0.3)).unwrap();
        assert!((m.entries[0][0] - 1.068_217_5).abs() < 1e-7);
        assert!((m.entries[0][1] - 0.106_821_8).abs() < 1e-7);
        assert!((m.entries[1][2] - 0.320_465_3).abs() < 1e-7);
        assert!(m.is_symmetric());
        assert!((m.determinant() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn transform_examples() {
        let y = FourVector::new(0.3, -1.0, 2.0, 0.5);
        assert_eq!(transform(&Velocity3::ZERO, &y).unwrap(), y);

        let out = transform(&v(0.1, 0.2, 0.3), &FourVector::new(1.0, 0.0, 0.0, 0.0)).unwrap();
        assert!(close4(
            out.0,
            [1.068_217_5, 0.106_821_8, 0.213_643_5, 0.320_465_3],
            1e-7
        ));

        let out = transform(&v(0.6, 0.0, 0.0), &FourVector::new(1.0, 0.6, 0.0, 0.0)).unwrap();
        assert!(close4(out.0, [1.7, 1.5, 0.0, 0.0], 1e-15));
    }

    #[test]
    fn closed_form_matches_matrix_and_diagonal_paths() {
        let s = v(0.1, -0.25, 0.3);
        let y = FourVector::new(1.2, 0.1, -0.4, 0.35);
        let closed = transform(&s, &y).unwrap();
        let by_matrix = boost_matrix(&s).unwrap().apply(&y);
        let by_char = transform_characteristic(&s, &y.char_coords())
            .unwrap()
            .to_four_vector();
        assert!(close4(closed.0, by_matrix.0, 1e-13));
        assert!(close4(closed.0, by_char.0, 1e-13));
    }

    #[test]
    fn char_coords_examples() {
        assert_eq!(
            char_coords(&FourVector::new(1.0, 0.0, 0.0, 0.0)).0,
            [1.0; 4]
        );
        let g = char_coords(&FourVector::new(1.0, 0.1, 0.2, 0.3)).0;
        assert!(close4(g, [1.6, 0.8, 0.6, 1.0], 1e-15));
        let y = inv_char_coords(&CharCoords([0.0, 1.0, 2.0, 0.5]));
        assert_eq!(y.char_coords().0[0], 0.0);
        assert!(close4(
            inv_char_coords(&CharCoords(g)).0,
            [1.0, 0.1, 0.2, 0.3],
            1e-15
        ));
    }

    #[test]
    fn eigenfactor_examples() {
        assert_eq!(eigenfactors(&Velocity3::ZERO).unwrap().0, [1.0; 4]);
        let l = eigenfactors(&v(0.1, 0.2, 0.3)).unwrap();
        assert!(close4(
            l.0,
            [1.709_148_0, 0.854_574_0, 0.640_930_5, 1.068_217_5],
            1e-7
        ));
        assert!((l.product() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn momentum_transform_preserves_contraction() {
        let p = CoMomentum::new(1.0, 0.2, -0.1, 0.05);
        assert_eq!(momentum_transform(&Velocity3::ZERO, &p).unwrap(), p);

        let s = v(0.1, 0.2, 0.3);
        let y = FourVector::new(1.0, 0.1, 0.2, 0.3);
        assert!((p.contract(&y) - 1.015).abs() < 1e-15);
        let lhs = momentum_transform(&s, &p)
            .unwrap()
            .contract(&transform(&s, &y).unwrap());
        assert!((lhs - 1.015).abs() < 1e-14);
    }

    #[test]
    fn covector_reduces_to_two_dimensional_rule() {
        let vel = 0.6;
        let (e, p1) = (1.25, 0.75);
        let out =
            momentum_transform(&v(vel, 0.0, 0.0), &CoMomentum::new(e, -p1, 0.0, 0.0)).unwrap();
        let gamma = 1.0 / (1.0 - vel * vel).sqrt();
        assert!((out.0[0] - gamma * (e + vel * p1)).abs() < 1e-14);
        assert!((out.0[1] - gamma * (-vel * e - p1)).abs() < 1e-14);
    }

    #[test]
    fn group_check_examples() {
        let tol = Tolerance::default();
        let r = compose_matrices_check(&Velocity3::ZERO, &Velocity3::ZERO, &tol).unwrap();
        assert!(r.passed());
        assert_eq!(r.max_deviation(), 0.0);

        let r = compose_matrices_check(&v(0.1, 0.0, 0.0), &v(0.2, 0.0, 0.0), &tol).unwrap();
        assert!(r.passed());
        let expected = boost_matrix(&v(0.3 / 1.02, 0.0, 0.0)).unwrap();
        let got = boost_matrix(&v(0.1, 0.0, 0.0))
            .unwrap()
            .mul(&boost_matrix(&v(0.2, 0.0, 0.0)).unwrap());
        assert!(got.max_abs_diff(&expected) < 1e-15);

        let r = compose_matrices_check(&v(0.1, 0.2, 0.3), &v(0.05, -0.1, 0.2), &tol).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.max_deviation() <= 1e-12);
    }
}
