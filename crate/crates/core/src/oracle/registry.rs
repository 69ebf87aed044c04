//! The registered identities and their exact checks.
//!
//! Each check receives one [`ExactInputs`] sample and returns `Err(detail)`
//! when the two sides differ. Root-bearing statements are checked in
//! fourth-power form together with the sign condition that selects the
//! positive root.

use num_traits::{One, Signed, Zero};

use super::exact::{
    a4, boost_pattern, char_coords, compose, contract, det4, dot3, factors, identity4, invert,
    k_factor, length4, mat_mul, mat_scale, mat_vec, momentum_over_length, neg3, product4, q,
    split4, subtract, zero3, Field, Jet, Q, SIGNS,
};
use super::inputs::{ExactInputs, Slot};

pub type Check = fn(&ExactInputs) -> Result<(), String>;

/// A registered identity: the printed statement, what is actually checked,
/// and an optional corrected statement for contested items.
pub struct Identity {
    pub id: &'static str,
    pub paper_form: &'static str,
    pub implemented_form: &'static str,
    pub contested: bool,
    pub slots: &'static [Slot],
    pub paper_check: Check,
    pub corrected_check: Option<Check>,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("contested", &self.contested)
            .finish_non_exhaustive()
    }
}

pub fn find(id: &str) -> Option<&'static Identity> {
    REGISTRY.iter().find(|ident| ident.id == id)
}

pub fn registry() -> &'static [Identity] {
    REGISTRY
}

fn show(xs: &[Q]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn same(what: &str, lhs: &[Q], rhs: &[Q]) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {} ≠ {}", show(lhs), show(rhs)))
    }
}

fn same1(what: &str, lhs: &Q, rhs: &Q) -> Result<(), String> {
    same(what, std::slice::from_ref(lhs), std::slice::from_ref(rhs))
}

fn positive(what: &str, x: &Q) -> Result<(), String> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(format!("{what} = {x} is not positive"))
    }
}

fn defined<T>(x: Option<T>, what: &str) -> Result<T, String> {
    x.ok_or_else(|| format!("{what} is undefined (zero denominator)"))
}

fn flat(m: &[[Q; 4]; 4]) -> Vec<Q> {
    m.iter().flatten().cloned().collect()
}

fn cone(s: &[Q; 3]) -> [Q; 4] {
    [Q::one(), s[0].clone(), s[1].clone(), s[2].clone()]
}

fn scale3(s: &[Q; 3], c: &Q) -> [Q; 3] {
    std::array::from_fn(|i| &s[i] * c)
}

fn sign_triple(index: usize, flip: bool) -> [Q; 3] {
    let sign = if flip { -1 } else { 1 };
    SIGNS[index].map(|e| q(sign * e, 1))
}

/// The invariant velocities as listed in the printed table: c_A = −ε_A.
fn listed_invariant(index: usize) -> [Q; 3] {
    sign_triple(index, true)
}

fn on_collinear(s: &[Q; 3]) -> [Q; 3] {
    [s[0].clone(), Q::zero(), Q::zero()]
}

// ---- kinematic length and boosts ----

fn boost_symmetric(x: &ExactInputs) -> Result<(), String> {
    let m = boost_pattern(&x.a);
    let t: [[Q; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()));
    same("M(a) vs transpose", &flat(&m), &flat(&t))
}

fn boost_determinant(x: &ExactInputs) -> Result<(), String> {
    same1("det M(a) vs A⁴(a)", &det4(&boost_pattern(&x.a)), &a4(&x.a))
}

fn length_invariance(x: &ExactInputs) -> Result<(), String> {
    let moved = mat_vec(&boost_pattern(&x.a), &x.y);
    same1(
        "F⁴(M(a)y) vs A⁴(a)F⁴(y)",
        &length4(&moved),
        &(a4(&x.a) * length4(&x.y)),
    )
}

fn diagonal_action(x: &ExactInputs) -> Result<(), String> {
    let moved = char_coords(&mat_vec(&boost_pattern(&x.a), &x.y));
    let f = factors(&x.a);
    let g = char_coords(&x.y);
    let expected: Vec<Q> = (0..4).map(|i| &f[i] * &g[i]).collect();
    same("g_A(M(a)y) vs f_A(a)·g_A(y)", &moved, &expected)
}

fn isotropic_printed(x: &ExactInputs) -> Result<(), String> {
    let c = [x.y[1].clone(), x.y[2].clone(), x.y[3].clone()];
    let c0 = match x.pattern {
        0 => -&c[0] - &c[1] - &c[2],
        1 => &c[0] - &c[1] + &c[2],
        2 => -&c[0] + &c[1] + &c[2],
        _ => &c[0] + &c[1] - &c[2],
    };
    let v = [c0, c[0].clone(), c[1].clone(), c[2].clone()];
    same1("F⁴(C_A) vs 0", &length4(&v), &Q::zero())
}

fn contraction_invariance(x: &ExactInputs) -> Result<(), String> {
    let f = defined(invert(&x.a), "⊖a")?;
    let p2 = mat_vec(&boost_pattern(&f), &x.p);
    let y2 = mat_vec(&boost_pattern(&x.a), &x.y);
    let sigma = Q::one() + dot3(&x.a, &f);
    same1(
        "⟨M(⊖a)p, M(a)y⟩ vs σ⟨p, y⟩",
        &contract(&p2, &y2),
        &(&sigma * contract(&x.p, &x.y)),
    )?;
    same1(
        "σ⁴ vs A⁴(a)A⁴(⊖a)",
        &(&sigma * &sigma * &sigma * &sigma),
        &(a4(&x.a) * a4(&f)),
    )?;
    positive("σ = 1 + a·⊖a", &sigma)
}

fn hamiltonian_invariance(x: &ExactInputs) -> Result<(), String> {
    let f = defined(invert(&x.a), "⊖a")?;
    let moved = mat_vec(&boost_pattern(&f), &x.p);
    same1(
        "H⁴(M(⊖a)p) vs A⁴(⊖a)H⁴(p)",
        &length4(&moved),
        &(a4(&f) * length4(&x.p)),
    )
}

// ---- momentum map ----

/// Σ_A (1, ε_A) / g_A(v), the bracket of the printed momentum components.
fn reciprocal_sum(v: &[Q; 4]) -> Result<[Q; 4], String> {
    let g = char_coords(v);
    let mut out: [Q; 4] = std::array::from_fn(|_| Q::zero());
    for (e, ga) in SIGNS.iter().zip(&g) {
        let r = defined(Q::one().try_div(ga), "1/g_A")?;
        out[0] += &r;
        for a in 0..3 {
            out[a + 1] += &r * q(e[a], 1);
        }
    }
    Ok(out)
}

fn momentum_printed_normalization(x: &ExactInputs) -> Result<(), String> {
    let w = reciprocal_sum(&x.y)?;
    let m4 = &x.m * &x.m * &x.m * &x.m;
    same1(
        "H⁴(P) vs m⁴ with P = mF(V)·Σ(1, ε_A)/g_A",
        &(m4.clone() * length4(&x.y) * length4(&w)),
        &m4,
    )
}

fn momentum_quarter_normalization(x: &ExactInputs) -> Result<(), String> {
    let w = reciprocal_sum(&x.y)?.map(|c| c * q(1, 4));
    let m4 = &x.m * &x.m * &x.m * &x.m;
    same1(
        "H⁴(P) vs m⁴ with P = (m/4)F(V)·Σ(1, ε_A)/g_A",
        &(m4.clone() * length4(&x.y) * length4(&w)),
        &m4,
    )
}

fn mass_shell(x: &ExactInputs) -> Result<(), String> {
    let w = defined(momentum_over_length(&x.m, &x.y), "P/F")?;
    same1(
        "F⁴(V)·H⁴(P/F) vs m⁴",
        &(length4(&x.y) * length4(&w)),
        &(&x.m * &x.m * &x.m * &x.m),
    )
}

fn energy_closed_form(x: &ExactInputs) -> Result<(), String> {
    let w = defined(momentum_over_length(&x.m, &x.y), "P/F")?;
    let (v0, v) = split4(&x.y);
    let cubic = &v0 * &v0 * &v0 - &v0 * dot3(&v, &v) + q(2, 1) * &v[0] * &v[1] * &v[2];
    same1(
        "(P₀/F)·F⁴ vs m(V₀³ − V₀|V|² + 2V¹V²V³)",
        &(&w[0] * length4(&x.y)),
        &(&x.m * cubic),
    )
}

fn momentum_direction(x: &ExactInputs, scale: &Q) -> Result<(), String> {
    let w = defined(momentum_over_length(&x.m, &x.y), "P/F")?;
    let (p0, p) = split4(&w);
    let (v0, v) = split4(&x.y);
    let inv_p0 = defined(Q::one().try_div(&p0), "1/P₀")?;
    let inv_v0 = defined(Q::one().try_div(&v0), "1/V₀")?;
    let lhs = scale3(&p, &(inv_p0 * scale));
    let rhs = defined(invert(&scale3(&v, &inv_v0)), "⊖v")?;
    same("p vs ⊖v", &lhs, &rhs)
}

fn momentum_direction_printed(x: &ExactInputs) -> Result<(), String> {
    let inv_m = defined(Q::one().try_div(&x.m), "1/m")?;
    momentum_direction(x, &inv_m)
}

fn momentum_direction_corrected(x: &ExactInputs) -> Result<(), String> {
    momentum_direction(x, &Q::one())
}

// ---- velocity algebra ----

fn k_positivity(x: &ExactInputs) -> Result<(), String> {
    let f = factors(&x.a);
    let mut sum = Q::zero();
    for skip in 0..4 {
        let mut prod = Q::one();
        for (b, fb) in f.iter().enumerate() {
            if b != skip {
                prod *= fb;
            }
        }
        sum += prod;
    }
    let k = k_factor(&x.a);
    same1("4K vs Σ_A Π_{B≠A} f_B", &(q(4, 1) * &k), &sum)?;
    positive("K(a)", &k)
}

fn composition_diagonal(x: &ExactInputs) -> Result<(), String> {
    let c = defined(compose(&x.a, &x.b), "a⊕b")?;
    let d = Q::one() + dot3(&x.a, &x.b);
    let fc = factors(&c);
    let fa = factors(&x.a);
    let fb = factors(&x.b);
    let lhs: Vec<Q> = fc.iter().map(|v| v * &d).collect();
    let rhs: Vec<Q> = (0..4).map(|i| &fa[i] * &fb[i]).collect();
    same("(1+ε_A·(a⊕b))(1+a·b) vs f_A(a)f_A(b)", &lhs, &rhs)
}

fn commutative(x: &ExactInputs) -> Result<(), String> {
    same(
        "a⊕b vs b⊕a",
        &defined(compose(&x.a, &x.b), "a⊕b")?,
        &defined(compose(&x.b, &x.a), "b⊕a")?,
    )
}

fn antisymmetric(x: &ExactInputs) -> Result<(), String> {
    let ba = defined(subtract(&x.b, &x.a), "b⊖a")?;
    same(
        "a⊖b vs ⊖(b⊖a)",
        &defined(subtract(&x.a, &x.b), "a⊖b")?,
        &defined(invert(&ba), "⊖(b⊖a)")?,
    )
}

fn associative(x: &ExactInputs) -> Result<(), String> {
    let ab = defined(compose(&x.a, &x.b), "a⊕b")?;
    let bc = defined(compose(&x.b, &x.c), "b⊕c")?;
    same(
        "(a⊕b)⊕c vs a⊕(b⊕c)",
        &defined(compose(&ab, &x.c), "(a⊕b)⊕c")?,
        &defined(compose(&x.a, &bc), "a⊕(b⊕c)")?,
    )
}

fn self_subtraction(x: &ExactInputs) -> Result<(), String> {
    same("a⊖a vs 0", &defined(subtract(&x.a, &x.a), "a⊖a")?, &zero3())
}

fn zero_minus(x: &ExactInputs) -> Result<(), String> {
    same(
        "0⊖a vs ⊖a",
        &defined(subtract(&zero3(), &x.a), "0⊖a")?,
        &defined(invert(&x.a), "⊖a")?,
    )
}

fn zero_plus(x: &ExactInputs) -> Result<(), String> {
    same("0⊕a vs a", &defined(compose(&zero3(), &x.a), "0⊕a")?, &x.a)
}

fn plus_inverse(x: &ExactInputs) -> Result<(), String> {
    let inv = defined(invert(&x.a), "⊖a")?;
    same(
        "a⊕(⊖a) vs 0",
        &defined(compose(&x.a, &inv), "a⊕(⊖a)")?,
        &zero3(),
    )
}

fn minus_inverse(x: &ExactInputs) -> Result<(), String> {
    let inv = defined(invert(&x.b), "⊖b")?;
    same(
        "a⊖(⊖b) vs a⊕b",
        &defined(subtract(&x.a, &inv), "a⊖(⊖b)")?,
        &defined(compose(&x.a, &x.b), "a⊕b")?,
    )
}

fn chain(x: &ExactInputs) -> Result<(), String> {
    let d = defined(subtract(&x.a, &x.b), "a⊖b")?;
    let e = defined(compose(&d, &x.b), "(a⊖b)⊕b")?;
    same(
        "((a⊖b)⊕b)⊕c vs a⊕c",
        &defined(compose(&e, &x.c), "((a⊖b)⊕b)⊕c")?,
        &defined(compose(&x.a, &x.c), "a⊕c")?,
    )
}

fn plus_minus(x: &ExactInputs) -> Result<(), String> {
    let inv = defined(invert(&x.b), "⊖b")?;
    same(
        "a⊕(⊖b) vs a⊖b",
        &defined(compose(&x.a, &inv), "a⊕(⊖b)")?,
        &defined(subtract(&x.a, &x.b), "a⊖b")?,
    )
}

fn double_inverse(x: &ExactInputs) -> Result<(), String> {
    let inv = defined(invert(&x.a), "⊖a")?;
    same("⊖(⊖a) vs a", &defined(invert(&inv), "⊖(⊖a)")?, &x.a)
}

fn mixed_order(x: &ExactInputs) -> Result<(), String> {
    let inv = defined(invert(&x.b), "⊖b")?;
    let diff = defined(subtract(&x.a, &x.b), "a⊖b")?;
    same(
        "(⊖b)⊕a vs a⊖b",
        &defined(compose(&inv, &x.a), "(⊖b)⊕a")?,
        &diff,
    )?;
    same(
        "a⊕(⊖b) vs a⊖b",
        &defined(compose(&x.a, &inv), "a⊕(⊖b)")?,
        &diff,
    )
}

// ---- invariant velocities ----

fn absorbing(c: &[Q; 3], s: &[Q; 3]) -> Result<(), String> {
    same("c⊕s vs c", &defined(compose(c, s), "c⊕s")?, c)
}

fn sign_table_printed(x: &ExactInputs) -> Result<(), String> {
    absorbing(&listed_invariant(x.pattern), &x.a)
}

fn sign_table_corrected(x: &ExactInputs) -> Result<(), String> {
    absorbing(&sign_triple(x.pattern, false), &x.a)
}

fn fixed_vector(x: &ExactInputs) -> Result<(), String> {
    let y = cone(&listed_invariant(x.pattern));
    let moved = mat_vec(&boost_pattern(&x.a), &y);
    let mu = moved[0].clone();
    let scaled: Vec<Q> = y.iter().map(|v| v * &mu).collect();
    same("M(a)(1, c_A) vs μ(1, c_A)", &moved, &scaled)?;
    same1("μ⁴ vs A⁴(a)", &(&mu * &mu * &mu * &mu), &a4(&x.a))?;
    positive("μ", &mu)
}

fn neutral(x: &ExactInputs) -> Result<(), String> {
    let c = listed_invariant(x.pattern);
    same("a⊕c_A vs a", &defined(compose(&x.a, &c), "a⊕c_A")?, &x.a)?;
    same("a⊖c_A vs a", &defined(subtract(&x.a, &c), "a⊖c_A")?, &x.a)
}

fn invariant_inverse(x: &ExactInputs) -> Result<(), String> {
    let c = listed_invariant(x.pattern);
    same("⊖c_A vs −c_A", &defined(invert(&c), "⊖c_A")?, &neg3(&c))
}

// ---- matrix group ----

fn group_law(x: &ExactInputs) -> Result<(), String> {
    let ab = defined(compose(&x.a, &x.b), "a⊕b")?;
    let d = Q::one() + dot3(&x.a, &x.b);
    let prod = mat_mul(&boost_pattern(&x.a), &boost_pattern(&x.b));
    same(
        "M(a)M(b) vs (1+a·b)M(a⊕b)",
        &flat(&prod),
        &flat(&mat_scale(&boost_pattern(&ab), &d)),
    )?;
    same1(
        "A⁴(a⊕b)(1+a·b)⁴ vs A⁴(a)A⁴(b)",
        &(a4(&ab) * &d * &d * &d * &d),
        &(a4(&x.a) * a4(&x.b)),
    )?;
    positive("1 + a·b", &d)
}

fn matrices_commute(x: &ExactInputs) -> Result<(), String> {
    let ma = boost_pattern(&x.a);
    let mb = boost_pattern(&x.b);
    same(
        "M(a)M(b) vs M(b)M(a)",
        &flat(&mat_mul(&ma, &mb)),
        &flat(&mat_mul(&mb, &ma)),
    )
}

fn matrix_inverse(x: &ExactInputs) -> Result<(), String> {
    let inv = defined(invert(&x.a), "⊖a")?;
    let prod = mat_mul(&boost_pattern(&x.a), &boost_pattern(&inv));
    let sigma = prod[0][0].clone();
    same(
        "M(a)M(⊖a) vs σI",
        &flat(&prod),
        &flat(&mat_scale(&identity4(), &sigma)),
    )?;
    same1(
        "σ⁴ vs A⁴(a)A⁴(⊖a)",
        &(&sigma * &sigma * &sigma * &sigma),
        &(a4(&x.a) * a4(&inv)),
    )?;
    positive("σ", &sigma)
}

// ---- inversion factor identities ----

/// `1 ± u ± v ± w` with the sign pattern of ε_B.
fn pattern_factor(b: usize, u: &Q, v: &Q, w: &Q) -> Q {
    let e = SIGNS[b];
    Q::one() + q(e[0], 1) * u + q(e[1], 1) * v + q(e[2], 1) * w
}

/// The four printed inversion-factor statements as `(LHS factor index,
/// RHS pattern indices)`. The fourth repeats the third.
const PRINTED_FACTOR_ROWS: [(usize, [usize; 3]); 4] = [
    (0, [1, 2, 3]),
    (1, [0, 2, 3]),
    (2, [0, 1, 3]),
    (2, [0, 1, 3]),
];

fn inverse_factor_rows(
    x: &ExactInputs,
    rows: &[(usize, [usize; 3])],
    printed_superscripts: bool,
) -> Result<(), String> {
    let s = &x.a;
    let inv = defined(invert(s), "⊖a")?;
    let k = k_factor(s);
    let fi = factors(&inv);
    for (lhs, rhs) in rows {
        let mut prod = Q::one();
        for &b in rhs {
            prod *= if printed_superscripts {
                pattern_factor(b, &s[1], &s[1], &s[2])
            } else {
                pattern_factor(b, &s[0], &s[1], &s[2])
            };
        }
        same1(
            &format!(
                "K·f_{}(⊖a) vs product of f_{:?}",
                lhs + 1,
                rhs.map(|b| b + 1)
            ),
            &(&fi[*lhs] * &k),
            &prod,
        )?;
    }
    Ok(())
}

fn inverse_factors_printed(x: &ExactInputs) -> Result<(), String> {
    inverse_factor_rows(x, &PRINTED_FACTOR_ROWS, true)
}

fn inverse_factors_fixed_superscripts(x: &ExactInputs) -> Result<(), String> {
    inverse_factor_rows(x, &PRINTED_FACTOR_ROWS, false)
}

fn inverse_factor_four_printed(x: &ExactInputs) -> Result<(), String> {
    inverse_factor_rows(x, &[(3, [0, 1, 3])], false)
}

fn inverse_factors_all(x: &ExactInputs) -> Result<(), String> {
    inverse_factor_rows(
        x,
        &[
            (0, [1, 2, 3]),
            (1, [0, 2, 3]),
            (2, [0, 1, 3]),
            (3, [0, 1, 2]),
        ],
        false,
    )
}

fn inverse_a_factor(x: &ExactInputs) -> Result<(), String> {
    let inv = defined(invert(&x.a), "⊖a")?;
    let k = k_factor(&x.a);
    let a = a4(&x.a);
    same1(
        "A⁴(⊖a)K⁴ vs A⁴(a)³",
        &(a4(&inv) * &k * &k * &k * &k),
        &(&a * &a * &a),
    )?;
    positive("K(a)", &k)
}

// ---- collinear reduction ----

fn lorentz_boost(x: &ExactInputs) -> Result<(), String> {
    let v = on_collinear(&x.a);
    let y = [x.y[0].clone(), x.y[1].clone(), Q::zero(), Q::zero()];
    let moved = mat_vec(&boost_pattern(&v), &y);
    let expected = [
        &y[0] + &v[0] * &y[1],
        &v[0] * &y[0] + &y[1],
        Q::zero(),
        Q::zero(),
    ];
    same(
        "M((v,0,0))(y⁰,y¹,0,0) vs (y⁰+vy¹, vy⁰+y¹, 0, 0)",
        &moved,
        &expected,
    )?;
    let r = Q::one() - &v[0] * &v[0];
    same1("A⁴((v,0,0)) vs (1−v²)²", &a4(&v), &(&r * &r))
}

fn lorentz_length(x: &ExactInputs) -> Result<(), String> {
    let y = [x.y[0].clone(), x.y[1].clone(), Q::zero(), Q::zero()];
    let r = (&y[0] + &y[1]) * (&y[0] - &y[1]);
    same1(
        "F⁴((y⁰,y¹,0,0)) vs ((y⁰+y¹)(y⁰−y¹))²",
        &length4(&y),
        &(&r * &r),
    )
}

fn collinear_composition(x: &ExactInputs) -> Result<(), String> {
    let (u, v) = (&x.a[0], &x.b[0]);
    let expected = [(u + v) / (Q::one() + u * v), Q::zero(), Q::zero()];
    same(
        "(u,0,0)⊕(v,0,0) vs ((u+v)/(1+uv),0,0)",
        &defined(compose(&on_collinear(&x.a), &on_collinear(&x.b)), "⊕")?,
        &expected,
    )
}

fn collinear_subtraction(x: &ExactInputs) -> Result<(), String> {
    let (u, v) = (&x.a[0], &x.b[0]);
    let expected = [(u - v) / (Q::one() - u * v), Q::zero(), Q::zero()];
    same(
        "(u,0,0)⊖(v,0,0) vs ((u−v)/(1−uv),0,0)",
        &defined(subtract(&on_collinear(&x.a), &on_collinear(&x.b)), "⊖")?,
        &expected,
    )
}

fn collinear_inverse(x: &ExactInputs) -> Result<(), String> {
    let v = on_collinear(&x.a);
    same(
        "⊖(v,0,0) vs (−v,0,0)",
        &defined(invert(&v), "⊖")?,
        &neg3(&v),
    )
}

// ---- series ----

fn c<T: Field>(n: i64, d: i64) -> T {
    T::from_ratio(n, d)
}

fn sq<T: Field>(x: &T) -> T {
    x.clone() * x.clone()
}

fn quadratic_sum<T: Field>(s: &[T; 3]) -> T {
    sq(&s[0]) + sq(&s[1]) + sq(&s[2])
}

fn quartic_sum<T: Field>(s: &[T; 3]) -> T {
    sq(&sq(&s[0])) + sq(&sq(&s[1])) + sq(&sq(&s[2]))
}

fn mixed_quartic<T: Field>(s: &[T; 3]) -> T {
    sq(&s[0]) * sq(&s[1]) + sq(&s[1]) * sq(&s[2]) + sq(&s[0]) * sq(&s[2])
}

fn triple<T: Field>(s: &[T; 3]) -> T {
    s[0].clone() * s[1].clone() * s[2].clone()
}

fn a_series_printed<T: Field>(s: &[T; 3]) -> T {
    T::unit() - c::<T>(1, 2) * quadratic_sum(s) - c::<T>(1, 8) * quartic_sum(s)
        + c::<T>(2, 1) * triple(s)
        - c::<T>(5, 4) * mixed_quartic(s)
}

fn a_inv_series_printed<T: Field>(s: &[T; 3]) -> T {
    T::unit() + c::<T>(1, 2) * quadratic_sum(s) + c::<T>(3, 8) * quartic_sum(s)
        - c::<T>(2, 1) * triple(s)
        + c::<T>(7, 4) * mixed_quartic(s)
}

/// The printed reciprocity series, or with `corrected` the exact
/// quadratic truncation `−s^a + 2s^b s^c`.
fn invert_series<T: Field>(s: &[T; 3], corrected: bool) -> [T; 3] {
    let comp = |a: usize, b: usize, d: usize| {
        if corrected {
            -s[a].clone() + c::<T>(2, 1) * s[b].clone() * s[d].clone()
        } else {
            -s[a].clone() - sq(&s[a]) - sq(&(s[b].clone() - s[d].clone()))
        }
    };
    [comp(0, 1, 2), comp(1, 0, 2), comp(2, 0, 1)]
}

fn subtract_series<T: Field>(s3: &[T; 3], s2: &[T; 3]) -> [T; 3] {
    let comp = |a: usize, b: usize, d: usize| {
        s3[a].clone() - s2[a].clone() + c::<T>(2, 1) * s2[b].clone() * s2[d].clone()
            - s2[b].clone() * s3[d].clone()
            - s3[b].clone() * s2[d].clone()
    };
    [comp(0, 1, 2), comp(1, 0, 2), comp(2, 0, 1)]
}

fn compose_series<T: Field>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    let comp = |i: usize, j: usize, k: usize| {
        a[i].clone() + b[i].clone() + a[j].clone() * b[k].clone() + a[k].clone() * b[j].clone()
    };
    [comp(0, 1, 2), comp(1, 0, 2), comp(2, 0, 1)]
}

/// The printed energy series, or with `corrected` the quartic
/// coefficients that match the exact dispersion relation.
fn energy_series<T: Field>(m: &T, p: &[T; 3], corrected: bool) -> Option<T> {
    let (quartic, mixed) = if corrected {
        (c::<T>(-1, 8), c::<T>(3, 4))
    } else {
        (c::<T>(1, 8), c::<T>(-5, 4))
    };
    let m2 = m.clone() * m.clone();
    let m3 = m2.clone() * m.clone();
    Some(
        m.clone()
            + quadratic_sum(p).try_div(&(c::<T>(2, 1) * m.clone()))?
            + (quartic * quartic_sum(p)).try_div(&m3)?
            - (c::<T>(2, 1) * triple(p)).try_div(&m2)?
            + (mixed * mixed_quartic(p)).try_div(&m3)?,
    )
}

fn ray<const N: usize>(s: &[Q; 3]) -> [Jet<N>; 3] {
    std::array::from_fn(|i| Jet::linear(s[i].clone()))
}

fn same_jet<const N: usize>(what: &str, lhs: &Jet<N>, rhs: &Jet<N>) -> Result<(), String> {
    for k in 0..N {
        if lhs.coeff(k) != rhs.coeff(k) {
            return Err(format!(
                "{what}: t^{k} coefficient {} ≠ {}",
                lhs.coeff(k),
                rhs.coeff(k)
            ));
        }
    }
    Ok(())
}

fn same_jets<const N: usize>(
    what: &str,
    lhs: &[Jet<N>; 3],
    rhs: &[Jet<N>; 3],
) -> Result<(), String> {
    for i in 0..3 {
        same_jet(&format!("{what}, component {}", i + 1), &lhs[i], &rhs[i])?;
    }
    Ok(())
}

fn a_series_check(x: &ExactInputs) -> Result<(), String> {
    let s = ray::<5>(&x.a);
    let exact = defined(a4(&s).powr(&q(1, 4)), "A(ta)")?;
    same_jet("A(ta) vs printed series", &exact, &a_series_printed(&s))
}

fn a_inv_series_check(x: &ExactInputs) -> Result<(), String> {
    let s = ray::<5>(&x.a);
    let exact = defined(a4(&s).powr(&q(-1, 4)), "1/A(ta)")?;
    same_jet(
        "1/A(ta) vs printed series",
        &exact,
        &a_inv_series_printed(&s),
    )
}

fn invert_series_check(x: &ExactInputs, corrected: bool) -> Result<(), String> {
    let s = ray::<3>(&x.a);
    let exact = defined(invert(&s), "⊖(ta)")?;
    same_jets("⊖(ta) vs series", &exact, &invert_series(&s, corrected))
}

fn invert_series_printed(x: &ExactInputs) -> Result<(), String> {
    invert_series_check(x, false)
}

fn invert_series_corrected(x: &ExactInputs) -> Result<(), String> {
    invert_series_check(x, true)
}

fn subtract_series_check(x: &ExactInputs) -> Result<(), String> {
    let (a, b) = (ray::<3>(&x.a), ray::<3>(&x.b));
    let exact = defined(subtract(&a, &b), "ta⊖tb")?;
    same_jets("ta⊖tb vs printed series", &exact, &subtract_series(&a, &b))
}

fn compose_series_check(x: &ExactInputs) -> Result<(), String> {
    let (a, b) = (ray::<3>(&x.a), ray::<3>(&x.b));
    let exact = defined(compose(&a, &b), "ta⊕tb")?;
    same_jets("ta⊕tb vs printed series", &exact, &compose_series(&a, &b))
}

/// Energy on the mass shell along P = t·p, to order t⁴, from the fixed
/// point E = m·A(P/E)⁻¹.
fn exact_energy_jet(m: &Q, p: &[Q; 3]) -> Option<Jet<5>> {
    let pj = ray::<5>(p);
    let mass = Jet::constant(m.clone());
    let mut e = mass.clone();
    for _ in 0..5 {
        let x: [Jet<5>; 3] = [pj[0].try_div(&e)?, pj[1].try_div(&e)?, pj[2].try_div(&e)?];
        e = mass.clone() * a4(&x).powr(&q(-1, 4))?;
    }
    Some(e)
}

fn energy_series_check(x: &ExactInputs, corrected: bool) -> Result<(), String> {
    let p = [x.p[1].clone(), x.p[2].clone(), x.p[3].clone()];
    let exact = defined(exact_energy_jet(&x.m, &p), "E(tP)")?;
    let pj = ray::<5>(&p);
    let series = defined(
        energy_series(&Jet::constant(x.m.clone()), &pj, corrected),
        "series",
    )?;
    let shell = char4(&exact, &pj);
    let m4 = &x.m * &x.m * &x.m * &x.m;
    same_jet("mass shell at E(tP)", &product4(&shell), &Jet::constant(m4))?;
    same_jet("E(tP) vs series", &exact, &series)
}

fn energy_series_printed(x: &ExactInputs) -> Result<(), String> {
    energy_series_check(x, false)
}

fn energy_series_corrected(x: &ExactInputs) -> Result<(), String> {
    energy_series_check(x, true)
}

use super::exact::char4;

use Slot::{Pattern as PAT, A, B, C, M, P, Y};

static REGISTRY: &[Identity] = &[
    Identity {
        id: "2.12",
        paper_form: "Λ^p_q(s) = Λ^q_p(s)",
        implemented_form: "M(a) equals its transpose, M = A·Λ the polynomial boost pattern",
        contested: false,
        slots: &[A],
        paper_check: boost_symmetric,
        corrected_check: None,
    },
    Identity {
        id: "2.13",
        paper_form: "det Λ(s) = 1",
        implemented_form: "det M(a) = A⁴(a)",
        contested: false,
        slots: &[A],
        paper_check: boost_determinant,
        corrected_check: None,
    },
    Identity {
        id: "2.15",
        paper_form: "F(Y') = F(Y)",
        implemented_form: "F⁴(M(a)y) = A⁴(a)·F⁴(y)",
        contested: false,
        slots: &[A, Y],
        paper_check: length_invariance,
        corrected_check: None,
    },
    Identity {
        id: "2.16-2.19",
        paper_form: "Y'⁰ + ε_A·Y' = λ_A(Y⁰ + ε_A·Y)",
        implemented_form: "g_A(M(a)y) = f_A(a)·g_A(y) for every A",
        contested: false,
        slots: &[A, Y],
        paper_check: diagonal_action,
        corrected_check: None,
    },
    Identity {
        id: "2.22",
        paper_form: "F(C_A) = 0 for C_1⁰ = −C¹−C²−C³, C_2⁰ = C¹−C²+C³, C_3⁰ = −C¹+C²+C³, C_4⁰ = C¹+C²−C³",
        implemented_form: "F⁴(C_A) = 0 with the listed time components",
        contested: false,
        slots: &[Y, PAT],
        paper_check: isotropic_printed,
        corrected_check: None,
    },
    Identity {
        id: "2.29",
        paper_form: "P'_q Y'^q = P_q Y^q with P' = Λ(⊖s)-pattern·P / A(⊖s)",
        implemented_form: "⟨M(⊖a)p, M(a)y⟩ = σ⟨p, y⟩, σ = 1 + a·⊖a, σ⁴ = A⁴(a)A⁴(⊖a), σ > 0",
        contested: false,
        slots: &[A, Y, P],
        paper_check: contraction_invariance,
        corrected_check: None,
    },
    Identity {
        id: "2.33",
        paper_form: "H(P') = H(P)",
        implemented_form: "H⁴(M(⊖a)p) = A⁴(⊖a)·H⁴(p)",
        contested: false,
        slots: &[A, P],
        paper_check: hamiltonian_invariance,
        corrected_check: None,
    },
    Identity {
        id: "2.35-normalization",
        paper_form: "P_p / (mF(V)) = Σ_A (1, ε_A)_p / g_A(V), with H(P) = m",
        implemented_form: "P_p = m·∂F/∂V^p = (m/4)·F(V)·Σ_A (1, ε_A)_p / g_A(V); H⁴(P) = m⁴",
        contested: true,
        slots: &[Y, M],
        paper_check: momentum_printed_normalization,
        corrected_check: Some(momentum_quarter_normalization),
    },
    Identity {
        id: "2.39",
        paper_form: "H(P) = m",
        implemented_form: "F⁴(V)·H⁴(P/F) = m⁴ with the gradient momentum",
        contested: false,
        slots: &[Y, M],
        paper_check: mass_shell,
        corrected_check: None,
    },
    Identity {
        id: "2.40",
        paper_form: "P₀ = m(V₀³ − V₀|V|² + 2V¹V²V³) / F(V)³",
        implemented_form: "(P₀/F)·F⁴ = m(V₀³ − V₀|V|² + 2V¹V²V³)",
        contested: false,
        slots: &[Y, M],
        paper_check: energy_closed_form,
        corrected_check: None,
    },
    Identity {
        id: "2.43-factor",
        paper_form: "(1/m)·p_a = (⊖v)_a, p_a = P_a/P₀, v^a = V^a/V⁰",
        implemented_form: "p_a = (⊖v)_a",
        contested: true,
        slots: &[Y, M],
        paper_check: momentum_direction_printed,
        corrected_check: Some(momentum_direction_corrected),
    },
    Identity {
        id: "3.4-positivity",
        paper_form: "K(s) = 1 − |s|² + 2s¹s²s³ is the denominator of ⊖s",
        implemented_form: "4K(s) = Σ_A Π_{B≠A} (1 + ε_B·s), hence K > 0 on the domain",
        contested: false,
        slots: &[A],
        paper_check: k_positivity,
        corrected_check: None,
    },
    Identity {
        id: "3.11-diagonal",
        paper_form: "a⊕b by the three-component composition law",
        implemented_form: "(1 + ε_A·(a⊕b))(1 + a·b) = (1 + ε_A·a)(1 + ε_A·b) for every A",
        contested: false,
        slots: &[A, B],
        paper_check: composition_diagonal,
        corrected_check: None,
    },
    Identity {
        id: "3.14",
        paper_form: "a⊕b = b⊕a",
        implemented_form: "a⊕b = b⊕a",
        contested: false,
        slots: &[A, B],
        paper_check: commutative,
        corrected_check: None,
    },
    Identity {
        id: "3.15",
        paper_form: "a⊖b = ⊖(b⊖a)",
        implemented_form: "a⊖b = ⊖(b⊖a)",
        contested: false,
        slots: &[A, B],
        paper_check: antisymmetric,
        corrected_check: None,
    },
    Identity {
        id: "3.16",
        paper_form: "(a⊕b)⊕c = a⊕(b⊕c)",
        implemented_form: "(a⊕b)⊕c = a⊕(b⊕c)",
        contested: false,
        slots: &[A, B, C],
        paper_check: associative,
        corrected_check: None,
    },
    Identity {
        id: "3.17",
        paper_form: "s⊖s = 0",
        implemented_form: "a⊖a = 0",
        contested: false,
        slots: &[A],
        paper_check: self_subtraction,
        corrected_check: None,
    },
    Identity {
        id: "3.18",
        paper_form: "0⊖s = ⊖s",
        implemented_form: "0⊖a = ⊖a",
        contested: false,
        slots: &[A],
        paper_check: zero_minus,
        corrected_check: None,
    },
    Identity {
        id: "3.19",
        paper_form: "0⊕s = s",
        implemented_form: "0⊕a = a",
        contested: false,
        slots: &[A],
        paper_check: zero_plus,
        corrected_check: None,
    },
    Identity {
        id: "3.20",
        paper_form: "s⊕(⊖s) = 0",
        implemented_form: "a⊕(⊖a) = 0",
        contested: false,
        slots: &[A],
        paper_check: plus_inverse,
        corrected_check: None,
    },
    Identity {
        id: "3.21",
        paper_form: "a⊖(⊖b) = a⊕b",
        implemented_form: "a⊖(⊖b) = a⊕b",
        contested: false,
        slots: &[A, B],
        paper_check: minus_inverse,
        corrected_check: None,
    },
    Identity {
        id: "3.22",
        paper_form: "a⊖b⊕b⊕c = a⊕c",
        implemented_form: "((a⊖b)⊕b)⊕c = a⊕c, evaluated left to right",
        contested: false,
        slots: &[A, B, C],
        paper_check: chain,
        corrected_check: None,
    },
    Identity {
        id: "3.23",
        paper_form: "a⊕(⊖b) = a⊖b",
        implemented_form: "a⊕(⊖b) = a⊖b, with a⊖b from the four-ratio formulas",
        contested: false,
        slots: &[A, B],
        paper_check: plus_minus,
        corrected_check: None,
    },
    Identity {
        id: "3.24",
        paper_form: "⊖⊖ = ⊕",
        implemented_form: "⊖(⊖a) = a",
        contested: false,
        slots: &[A],
        paper_check: double_inverse,
        corrected_check: None,
    },
    Identity {
        id: "3.25",
        paper_form: "⊕⊖ = ⊖⊕ = ⊖",
        implemented_form: "(⊖b)⊕a = a⊕(⊖b) = a⊖b",
        contested: false,
        slots: &[A, B],
        paper_check: mixed_order,
        corrected_check: None,
    },
    Identity {
        id: "3.26-sign-table",
        paper_form: "invariant velocities c_1 = (−1,−1,−1), c_2 = (1,−1,1), c_3 = (−1,1,1), c_4 = (1,1,−1), i.e. c_A = −ε_A",
        implemented_form: "the invariant (absorbing) velocities are ε_A: ε_A⊕s = ε_A",
        contested: true,
        slots: &[A, PAT],
        paper_check: sign_table_printed,
        corrected_check: Some(sign_table_corrected),
    },
    Identity {
        id: "3.27",
        paper_form: "Λ·c_A = c_A",
        implemented_form: "Λ(a)(1, c_A) = (1, c_A): M(a)(1, c_A) = μ(1, c_A) with μ⁴ = A⁴(a), μ > 0",
        contested: true,
        slots: &[A, PAT],
        paper_check: fixed_vector,
        corrected_check: None,
    },
    Identity {
        id: "3.28",
        paper_form: "s⊕c_A = s, s⊖c_A = s",
        implemented_form: "a⊕c_A = a and a⊖c_A = a with the listed c_A",
        contested: true,
        slots: &[A, PAT],
        paper_check: neutral,
        corrected_check: None,
    },
    Identity {
        id: "3.29",
        paper_form: "⊖c_A = −c_A",
        implemented_form: "⊖c_A = −c_A with the listed c_A",
        contested: true,
        slots: &[PAT],
        paper_check: invariant_inverse,
        corrected_check: None,
    },
    Identity {
        id: "3.30",
        paper_form: "Λ(a)Λ(b) = Λ(a⊕b)",
        implemented_form: "M(a)M(b) = (1+a·b)M(a⊕b), A⁴(a⊕b)(1+a·b)⁴ = A⁴(a)A⁴(b), 1+a·b > 0",
        contested: false,
        slots: &[A, B],
        paper_check: group_law,
        corrected_check: None,
    },
    Identity {
        id: "3.31",
        paper_form: "Λ(a)Λ(b) = Λ(b)Λ(a)",
        implemented_form: "M(a)M(b) = M(b)M(a)",
        contested: false,
        slots: &[A, B],
        paper_check: matrices_commute,
        corrected_check: None,
    },
    Identity {
        id: "3.32",
        paper_form: "Λ(s)⁻¹ = Λ(⊖s)",
        implemented_form: "M(a)M(⊖a) = σI with σ⁴ = A⁴(a)A⁴(⊖a), σ > 0",
        contested: false,
        slots: &[A],
        paper_check: matrix_inverse,
        corrected_check: None,
    },
    Identity {
        id: "3.33-superscripts",
        paper_form: "1+(⊖s)¹+(⊖s)²+(⊖s)³ = (1−s²+s²−s³)(1+s²−s²−s³)(1−s²−s²+s³)/K and the three companions, as typeset with s² in the first two slots",
        implemented_form: "the same four statements with the slots read as s¹, s², s³",
        contested: true,
        slots: &[A],
        paper_check: inverse_factors_printed,
        corrected_check: Some(inverse_factors_fixed_superscripts),
    },
    Identity {
        id: "3.35-3.36-duplicate",
        paper_form: "the printed list of four factor identities covers 1−(⊖s)¹−(⊖s)²+(⊖s)³ (its last line repeats 1+(⊖s)¹−(⊖s)²−(⊖s)³)",
        implemented_form: "K·(1−(⊖s)¹−(⊖s)²+(⊖s)³) = (1+s¹+s²+s³)(1−s¹+s²−s³)(1+s¹−s²−s³)",
        contested: true,
        slots: &[A],
        paper_check: inverse_factor_four_printed,
        corrected_check: Some(inverse_factors_all),
    },
    Identity {
        id: "3.33-3.36-corrected",
        paper_form: "K(s)·(1 + ε_A·⊖s) = Π_{B≠A} (1 + ε_B·s)",
        implemented_form: "K(a)·(1 + ε_A·⊖a) = Π_{B≠A} (1 + ε_B·a) for all four A",
        contested: false,
        slots: &[A],
        paper_check: inverse_factors_all,
        corrected_check: None,
    },
    Identity {
        id: "3.37",
        paper_form: "A(⊖s) = A(s)³ / K(s)",
        implemented_form: "A⁴(⊖a)·K⁴ = A⁴(a)³, K > 0",
        contested: false,
        slots: &[A],
        paper_check: inverse_a_factor,
        corrected_check: None,
    },
    Identity {
        id: "4.1",
        paper_form: "Y'⁰ = (Y⁰ + s¹Y¹)/√((1+s¹)(1−s¹)), Y'¹ = (s¹Y⁰ + Y¹)/√((1+s¹)(1−s¹))",
        implemented_form: "M((v,0,0))(y⁰,y¹,0,0) = (y⁰+vy¹, vy⁰+y¹, 0, 0), A⁴((v,0,0)) = (1−v²)²",
        contested: false,
        slots: &[A, Y],
        paper_check: lorentz_boost,
        corrected_check: None,
    },
    Identity {
        id: "4.2",
        paper_form: "F(Y) = √((Y⁰+Y¹)(Y⁰−Y¹)) for collinear Y",
        implemented_form: "F⁴((y⁰,y¹,0,0)) = ((y⁰+y¹)(y⁰−y¹))²",
        contested: false,
        slots: &[Y],
        paper_check: lorentz_length,
        corrected_check: None,
    },
    Identity {
        id: "4.3-composition",
        paper_form: "s₃¹ = (s₁¹ + s₂¹)/(1 + s₁¹s₂¹) for collinear velocities",
        implemented_form: "(u,0,0)⊕(v,0,0) = ((u+v)/(1+uv), 0, 0)",
        contested: false,
        slots: &[A, B],
        paper_check: collinear_composition,
        corrected_check: None,
    },
    Identity {
        id: "4.3-subtraction",
        paper_form: "s₁¹ = (s₃¹ − s₂¹)/(1 − s₂¹s₃¹) for collinear velocities",
        implemented_form: "(u,0,0)⊖(v,0,0) = ((u−v)/(1−uv), 0, 0)",
        contested: false,
        slots: &[A, B],
        paper_check: collinear_subtraction,
        corrected_check: None,
    },
    Identity {
        id: "4.4",
        paper_form: "⊖s^a = −s^a for collinear velocities",
        implemented_form: "⊖(v,0,0) = (−v,0,0)",
        contested: false,
        slots: &[A],
        paper_check: collinear_inverse,
        corrected_check: None,
    },
    Identity {
        id: "4.5-4.7",
        paper_form: "A(s) ≈ 1 − |s|²/2 − Σ(s^a)⁴/8 + 2s¹s²s³ − (5/4)Σ(s^a)²(s^b)² up to O(5)",
        implemented_form: "A(ta) and the series agree through t⁴ (exact jets)",
        contested: false,
        slots: &[A],
        paper_check: a_series_check,
        corrected_check: None,
    },
    Identity {
        id: "4.8-4.10",
        paper_form: "1/A(s) ≈ 1 + |s|²/2 + (3/8)Σ(s^a)⁴ − 2s¹s²s³ + (7/4)Σ(s^a)²(s^b)² up to O(5)",
        implemented_form: "1/A(ta) and the series agree through t⁴ (exact jets)",
        contested: false,
        slots: &[A],
        paper_check: a_inv_series_check,
        corrected_check: None,
    },
    Identity {
        id: "4.11-4.13",
        paper_form: "(⊖s)¹ ≈ −s¹ − (s¹)² − (s² − s³)² and cyclic",
        implemented_form: "(⊖s)¹ ≈ −s¹ + 2s²s³ and cyclic; ⊖(ta) and the series agree through t²",
        contested: true,
        slots: &[A],
        paper_check: invert_series_printed,
        corrected_check: Some(invert_series_corrected),
    },
    Identity {
        id: "4.14-4.16",
        paper_form: "(s₃⊖s₂)¹ ≈ s₃¹ − s₂¹ + 2s₂²s₂³ − s₂²s₃³ − s₃²s₂³ and cyclic",
        implemented_form: "ta⊖tb and the series agree through t²",
        contested: false,
        slots: &[A, B],
        paper_check: subtract_series_check,
        corrected_check: None,
    },
    Identity {
        id: "4.17-4.19",
        paper_form: "(s₁⊕s₂)¹ ≈ s₁¹ + s₂¹ + s₁²s₂³ + s₁³s₂² and cyclic",
        implemented_form: "ta⊕tb and the series agree through t²",
        contested: false,
        slots: &[A, B],
        paper_check: compose_series_check,
        corrected_check: None,
    },
    Identity {
        id: "4.20-4.21",
        paper_form: "E ≈ m + |P|²/2m + ΣP_a⁴/8m³ − 2P₁P₂P₃/m² − (5/4)ΣP_a²P_b²/m³",
        implemented_form: "E ≈ m + |P|²/2m − ΣP_a⁴/8m³ − 2P₁P₂P₃/m² + (3/4)ΣP_a²P_b²/m³; agrees with the mass-shell root E(tP) through t⁴",
        contested: true,
        slots: &[P, M],
        paper_check: energy_series_printed,
        corrected_check: Some(energy_series_corrected),
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|i| i.id).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn canonical_inputs_match_expectations() {
        let x = ExactInputs::canonical();
        for ident in REGISTRY {
            let printed = (ident.paper_check)(&x);
            if ident.contested {
                assert!(printed.is_err(), "{} unexpectedly holds as printed", ident.id);
                if let Some(fix) = ident.corrected_check {
                    assert_eq!(fix(&x), Ok(()), "{}", ident.id);
                }
            } else {
                assert_eq!(printed, Ok(()), "{}", ident.id);
            }
        }
    }

    #[test]
    fn listed_invariant_is_its_own_inverse() {
        for a in 0..4 {
            let c = listed_invariant(a);
            assert_eq!(k_factor(&c), q(-4, 1));
            assert_eq!(invert(&c).unwrap(), c);
        }
    }

    #[test]
    fn exact_energy_matches_known_expansion() {
        let m = q(1, 1);
        let p = [q(1, 1), q(0, 1), q(0, 1)];
        let e = exact_energy_jet(&m, &p).unwrap();
        assert_eq!(e.0, [q(1, 1), q(0, 1), q(1, 2), q(0, 1), q(-1, 8)]);
    }
}
