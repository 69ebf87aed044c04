//! Exact mirrors of the kinematic operations.
//!
//! Everything here is written once over [`Field`] so the same code runs on
//! plain rationals and on truncated power series ([`Jet`]) of rationals. No
//! fourth roots appear: root-bearing quantities are carried as fourth powers
//! (A⁴ = product of the domain factors, F⁴, H⁴), except for [`Jet::powr`],
//! which expands (1 + x)^r as a series.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

/// `n / d` as an exact rational.
pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_from_f64(x: f64) -> Q {
    BigRational::from_float(x).expect("finite float")
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Arithmetic needed by the exact operations.
pub trait Field:
    Clone
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn null() -> Self;
    fn unit() -> Self;
    fn from_ratio(n: i64, d: i64) -> Self;
    /// `None` when the divisor is not invertible.
    fn try_div(&self, other: &Self) -> Option<Self>;
    fn is_null(&self) -> bool;
}

impl Field for Q {
    fn null() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        q(n, d)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Power series in one variable t truncated after t^(N−1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet<const N: usize>(pub [Q; N]);

impl<const N: usize> Jet<N> {
    pub fn constant(c: Q) -> Self {
        Jet(std::array::from_fn(|i| {
            if i == 0 {
                c.clone()
            } else {
                Q::zero()
            }
        }))
    }

    /// c·t.
    pub fn linear(c: Q) -> Self {
        Jet(std::array::from_fn(|i| {
            if i == 1 {
                c.clone()
            } else {
                Q::zero()
            }
        }))
    }

    pub fn coeff(&self, k: usize) -> &Q {
        &self.0[k]
    }

    /// f^r for a series with constant term 1, via
    /// `k·y_k = Σ_{j=1..k} ((r+1)·j − k) f_j y_{k−j}`.
    pub fn powr(&self, r: &Q) -> Option<Self> {
        if !self.0[0].is_one() {
            return None;
        }
        let mut y: [Q; N] = std::array::from_fn(|_| Q::zero());
        y[0] = Q::one();
        for k in 1..N {
            let mut acc = Q::zero();
            for j in 1..=k {
                let w = (r + Q::one()) * q(j as i64, 1) - q(k as i64, 1);
                acc += w * &self.0[j] * &y[k - j];
            }
            y[k] = acc / q(k as i64, 1);
        }
        Some(Jet(y))
    }
}

impl<const N: usize> Add for Jet<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Jet(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl<const N: usize> Sub for Jet<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Jet(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl<const N: usize> Neg for Jet<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet(self.0.map(|c| -c))
    }
}

impl<const N: usize> Mul for Jet<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Jet(std::array::from_fn(|k| {
            (0..=k).fold(Q::zero(), |acc, j| acc + &self.0[j] * &rhs.0[k - j])
        }))
    }
}

impl<const N: usize> Field for Jet<N> {
    fn null() -> Self {
        Jet::constant(Q::zero())
    }
    fn unit() -> Self {
        Jet::constant(Q::one())
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Jet::constant(q(n, d))
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        let b0 = &other.0[0];
        if Zero::is_zero(b0) {
            return None;
        }
        let mut out: [Q; N] = std::array::from_fn(|_| Q::zero());
        for k in 0..N {
            let mut acc = self.0[k].clone();
            for j in 0..k {
                acc -= &out[j] * &other.0[k - j];
            }
            out[k] = acc / b0;
        }
        Some(Jet(out))
    }
    fn is_null(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// The sign triples ε₁..ε₄ as integers.
pub const SIGNS: [[i64; 3]; 4] = [[1, 1, 1], [-1, 1, -1], [1, -1, -1], [-1, -1, 1]];

fn signed<T: Field>(sign: i64, x: &T) -> T {
    if sign > 0 {
        x.clone()
    } else {
        -x.clone()
    }
}

/// `x₀ + ε_A·(x₁, x₂, x₃)` for each A.
pub fn char4<T: Field>(x0: &T, x: &[T; 3]) -> [T; 4] {
    SIGNS.map(|e| x0.clone() + signed(e[0], &x[0]) + signed(e[1], &x[1]) + signed(e[2], &x[2]))
}

/// Domain factors `1 + ε_A·s`.
pub fn factors<T: Field>(s: &[T; 3]) -> [T; 4] {
    char4(&T::unit(), s)
}

pub fn product4<T: Field>(x: &[T; 4]) -> T {
    x.iter().cloned().fold(T::unit(), |acc, v| acc * v)
}

/// A(s)⁴.
pub fn a4<T: Field>(s: &[T; 3]) -> T {
    product4(&factors(s))
}

pub fn dot3<T: Field>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn k_factor<T: Field>(s: &[T; 3]) -> T {
    let two = T::from_ratio(2, 1);
    T::unit() - dot3(s, s) + two * s[0].clone() * s[1].clone() * s[2].clone()
}

/// ⊖s; `None` at the pole K(s) = 0.
pub fn invert<T: Field>(s: &[T; 3]) -> Option<[T; 3]> {
    let k = k_factor(s);
    let two = T::from_ratio(2, 1);
    let sq: [T; 3] = std::array::from_fn(|i| s[i].clone() * s[i].clone());
    let bracket = |a: usize, b: usize, c: usize| {
        s[a].clone() - two.clone() * s[b].clone() * s[c].clone() - sq[a].clone() * s[a].clone()
            + s[a].clone() * (sq[b].clone() + sq[c].clone())
    };
    let out = [bracket(0, 1, 2), bracket(1, 0, 2), bracket(2, 0, 1)];
    let mut res: [T; 3] = std::array::from_fn(|_| T::null());
    for i in 0..3 {
        res[i] = (-out[i].clone()).try_div(&k)?;
    }
    Some(res)
}

/// a ⊕ b; `None` when 1 + a·b = 0.
pub fn compose<T: Field>(a: &[T; 3], b: &[T; 3]) -> Option<[T; 3]> {
    let d = T::unit() + dot3(a, b);
    let n = [
        a[0].clone() + b[0].clone() + a[1].clone() * b[2].clone() + a[2].clone() * b[1].clone(),
        a[1].clone() + b[1].clone() + a[0].clone() * b[2].clone() + a[2].clone() * b[0].clone(),
        a[2].clone() + b[2].clone() + a[0].clone() * b[1].clone() + a[1].clone() * b[0].clone(),
    ];
    Some([n[0].try_div(&d)?, n[1].try_div(&d)?, n[2].try_div(&d)?])
}

/// Velocity whose domain factors are proportional to `w`.
pub fn from_factor_weights<T: Field>(w: &[T; 4]) -> Option<[T; 3]> {
    let total = w.iter().cloned().fold(T::null(), |acc, x| acc + x);
    let mut out: [T; 3] = std::array::from_fn(|_| T::null());
    for (e, wa) in SIGNS.iter().zip(w) {
        for a in 0..3 {
            out[a] = out[a].clone() + signed(e[a], wa);
        }
    }
    Some([
        out[0].try_div(&total)?,
        out[1].try_div(&total)?,
        out[2].try_div(&total)?,
    ])
}

/// s₃ ⊖ s₂ by the four factor ratios.
pub fn subtract<T: Field>(s3: &[T; 3], s2: &[T; 3]) -> Option<[T; 3]> {
    let f3 = factors(s3);
    let f2 = factors(s2);
    let mut ratios: [T; 4] = std::array::from_fn(|_| T::null());
    for i in 0..4 {
        ratios[i] = f3[i].try_div(&f2[i])?;
    }
    from_factor_weights(&ratios)
}

pub fn neg3<T: Field>(s: &[T; 3]) -> [T; 3] {
    s.clone().map(|x| -x)
}

pub fn zero3<T: Field>() -> [T; 3] {
    std::array::from_fn(|_| T::null())
}

/// The 4×4 pattern of Λ(s) without its 1/A(s) scale: Λ(s) = M(s)/A(s).
pub fn boost_pattern<T: Field>(s: &[T; 3]) -> [[T; 4]; 4] {
    let o = T::unit();
    let [s1, s2, s3] = s.clone();
    [
        [o.clone(), s1.clone(), s2.clone(), s3.clone()],
        [s1.clone(), o.clone(), s3.clone(), s2.clone()],
        [s2.clone(), s3.clone(), o.clone(), s1.clone()],
        [s3, s2, s1, o],
    ]
}

pub fn mat_mul<T: Field>(a: &[[T; 4]; 4], b: &[[T; 4]; 4]) -> [[T; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..4).fold(T::null(), |acc, k| acc + a[i][k].clone() * b[k][j].clone())
        })
    })
}

pub fn mat_vec<T: Field>(m: &[[T; 4]; 4], x: &[T; 4]) -> [T; 4] {
    std::array::from_fn(|i| (0..4).fold(T::null(), |acc, k| acc + m[i][k].clone() * x[k].clone()))
}

pub fn mat_scale<T: Field>(m: &[[T; 4]; 4], c: &T) -> [[T; 4]; 4] {
    m.clone().map(|row| row.map(|x| x * c.clone()))
}

pub fn identity4<T: Field>() -> [[T; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { T::unit() } else { T::null() }))
}

/// Determinant by Laplace expansion along rows (0,1) against (2,3).
pub fn det4<T: Field>(m: &[[T; 4]; 4]) -> T {
    let minor = |r: usize, c1: usize, c2: usize| {
        m[r][c1].clone() * m[r + 1][c2].clone() - m[r][c2].clone() * m[r + 1][c1].clone()
    };
    const PAIRS: [((usize, usize), (usize, usize), bool); 6] = [
        ((0, 1), (2, 3), true),
        ((0, 2), (1, 3), false),
        ((0, 3), (1, 2), true),
        ((1, 2), (0, 3), true),
        ((1, 3), (0, 2), false),
        ((2, 3), (0, 1), true),
    ];
    PAIRS.iter().fold(T::null(), |acc, ((a, b), (c, d), plus)| {
        let term = minor(0, *a, *b) * minor(2, *c, *d);
        if *plus {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Split a four-vector into (time, spatial).
pub fn split4<T: Field>(y: &[T; 4]) -> (T, [T; 3]) {
    (y[0].clone(), [y[1].clone(), y[2].clone(), y[3].clone()])
}

/// Characteristic coordinates of a four-vector (or covector).
pub fn char_coords<T: Field>(y: &[T; 4]) -> [T; 4] {
    let (t, x) = split4(y);
    char4(&t, &x)
}

/// Inverse map `Y⁰ = ¼Σg`, `Yᵃ = ¼Σε_Aᵃ g_A`.
pub fn from_char_coords<T: Field>(g: &[T; 4]) -> [T; 4] {
    let quarter = T::from_ratio(1, 4);
    let mut out: [T; 4] = std::array::from_fn(|_| T::null());
    for (e, ga) in SIGNS.iter().zip(g) {
        out[0] = out[0].clone() + ga.clone();
        for a in 0..3 {
            out[a + 1] = out[a + 1].clone() + signed(e[a], ga);
        }
    }
    out.map(|x| x * quarter.clone())
}

/// F⁴(Y) (equally H⁴(P) for covariant components).
pub fn length4<T: Field>(y: &[T; 4]) -> T {
    product4(&char_coords(y))
}

pub fn contract<T: Field>(p: &[T; 4], y: &[T; 4]) -> T {
    (0..4).fold(T::null(), |acc, i| acc + p[i].clone() * y[i].clone())
}

/// The momentum map divided by F(V): P = F(V)·Q with
/// `Q_p = (m/4)·Σ_A (∂g_A/∂V^p) / g_A`. `None` on a null hyperplane.
pub fn momentum_over_length(m: &Q, v: &[Q; 4]) -> Option<[Q; 4]> {
    let g = char_coords(v);
    let mut inv: [Q; 4] = std::array::from_fn(|_| Q::zero());
    for i in 0..4 {
        inv[i] = Q::one().try_div(&g[i])?;
    }
    // Σ_A (1, ε_A) / g_A is four times the inverse characteristic map
    let sums = from_char_coords(&inv).map(|x| x * q(4, 1));
    Some(sums.map(|x| x * m * q(1, 4)))
}

/// Exact three-velocity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVelocity(pub [Q; 3]);

/// Exact contravariant four-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFourVector(pub [Q; 4]);

/// Exact covariant momentum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCoMomentum(pub [Q; 4]);

impl RationalVelocity {
    pub fn new(s1: Q, s2: Q, s3: Q) -> Self {
        RationalVelocity([s1, s2, s3])
    }

    pub fn zero() -> Self {
        RationalVelocity(zero3())
    }

    pub fn from_f64(s: [f64; 3]) -> Self {
        RationalVelocity(s.map(q_from_f64))
    }

    pub fn to_f64(&self) -> [f64; 3] {
        std::array::from_fn(|i| q_to_f64(&self.0[i]))
    }

    pub fn factors(&self) -> [Q; 4] {
        factors(&self.0)
    }

    pub fn in_domain(&self) -> bool {
        self.factors().iter().all(Signed::is_positive)
    }

    pub fn a4(&self) -> Q {
        a4(&self.0)
    }

    pub fn k(&self) -> Q {
        k_factor(&self.0)
    }

    pub fn invert(&self) -> Option<Self> {
        invert(&self.0).map(RationalVelocity)
    }

    pub fn compose(&self, other: &Self) -> Option<Self> {
        compose(&self.0, &other.0).map(RationalVelocity)
    }

    pub fn subtract(&self, other: &Self) -> Option<Self> {
        subtract(&self.0, &other.0).map(RationalVelocity)
    }
}

impl RationalFourVector {
    pub fn from_f64(y: [f64; 4]) -> Self {
        RationalFourVector(y.map(q_from_f64))
    }

    pub fn char_coords(&self) -> [Q; 4] {
        char_coords(&self.0)
    }

    pub fn length4(&self) -> Q {
        length4(&self.0)
    }
}

impl RationalCoMomentum {
    pub fn from_f64(p: [f64; 4]) -> Self {
        RationalCoMomentum(p.map(q_from_f64))
    }

    pub fn hamiltonian4(&self) -> Q {
        length4(&self.0)
    }

    pub fn contract(&self, y: &RationalFourVector) -> Q {
        contract(&self.0, &y.0)
    }
}
