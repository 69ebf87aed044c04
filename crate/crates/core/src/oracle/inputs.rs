//! Exact sample inputs for identity checks.

use std::collections::BTreeMap;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::exact::{char_coords, factors, from_char_coords, q, Q, SIGNS};

/// Named input slots an identity may read; the witness reports only these.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    A,
    B,
    C,
    Y,
    P,
    M,
    Pattern,
}

impl Slot {
    pub fn name(self) -> &'static str {
        match self {
            Slot::A => "a",
            Slot::B => "b",
            Slot::C => "c",
            Slot::Y => "y",
            Slot::P => "p",
            Slot::M => "m",
            Slot::Pattern => "pattern",
        }
    }
}

/// One exact sample: three in-domain velocities, a forward-cone vector, a
/// covector with positive momentum factors, a mass and a sign-pattern index
/// (0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct ExactInputs {
    pub a: [Q; 3],
    pub b: [Q; 3],
    pub c: [Q; 3],
    pub y: [Q; 4],
    pub p: [Q; 4],
    pub m: Q,
    pub pattern: usize,
}

impl ExactInputs {
    /// Hand-picked small-denominator instance tried first for witnesses.
    pub fn canonical() -> Self {
        ExactInputs {
            a: [q(1, 10), q(1, 5), q(3, 10)],
            b: [q(1, 20), q(-1, 10), q(1, 5)],
            c: [q(-1, 8), q(1, 16), q(1, 4)],
            y: [q(1, 1), q(1, 10), q(1, 5), q(3, 10)],
            p: [q(1, 1), q(1, 5), q(-1, 10), q(1, 20)],
            m: q(2, 1),
            pattern: 0,
        }
    }

    pub fn witness(&self, slots: &[Slot]) -> BTreeMap<String, Vec<String>> {
        let show = |xs: &[Q]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        slots
            .iter()
            .map(|slot| {
                let values = match slot {
                    Slot::A => show(&self.a),
                    Slot::B => show(&self.b),
                    Slot::C => show(&self.c),
                    Slot::Y => show(&self.y),
                    Slot::P => show(&self.p),
                    Slot::M => vec![self.m.to_string()],
                    Slot::Pattern => vec![(self.pattern + 1).to_string()],
                };
                (slot.name().to_string(), values)
            })
            .collect()
    }

    /// All velocities in the domain and both vectors in the forward cone.
    pub fn is_valid(&self) -> bool {
        let pos = |xs: [Q; 4]| xs.iter().all(Signed::is_positive);
        pos(factors(&self.a))
            && pos(factors(&self.b))
            && pos(factors(&self.c))
            && pos(char_coords(&self.y))
            && pos(char_coords(&self.p))
            && self.m.is_positive()
            && self.pattern < SIGNS.len()
    }
}

/// Seeded generator of [`ExactInputs`].
#[derive(Debug, Clone)]
pub struct ExactSampler {
    rng: ChaCha8Rng,
}

impl ExactSampler {
    pub fn new(seed: u64) -> Self {
        ExactSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Velocity with domain factors `4n_A / Σn`, n_A ∈ 1..=12.
    pub fn velocity(&mut self) -> [Q; 3] {
        let n: [i64; 4] = std::array::from_fn(|_| self.rng.gen_range(1..=12));
        let total: i64 = n.iter().sum();
        std::array::from_fn(|a| {
            let num: i64 = SIGNS.iter().zip(n).map(|(e, k)| e[a] * k).sum();
            q(num, total)
        })
    }

    /// Velocity whose components have denominators ≤ 16.
    pub fn small_velocity(&mut self) -> [Q; 3] {
        loop {
            let s: [Q; 3] = std::array::from_fn(|_| {
                let d = self.rng.gen_range(1..=16);
                q(self.rng.gen_range(-(d - 1)..=(d - 1)), d)
            });
            if factors(&s).iter().all(Signed::is_positive) {
                return s;
            }
        }
    }

    /// Forward-cone vector with characteristic coordinates n_A / d.
    pub fn cone_vector(&mut self) -> [Q; 4] {
        let d = self.rng.gen_range(1..=8);
        let g: [Q; 4] = std::array::from_fn(|_| q(self.rng.gen_range(1..=20), d));
        from_char_coords(&g)
    }

    /// Forward-cone vector (1, s) with a small-denominator s.
    pub fn small_cone_vector(&mut self) -> [Q; 4] {
        let s = self.small_velocity();
        [q(1, 1), s[0].clone(), s[1].clone(), s[2].clone()]
    }

    pub fn mass(&mut self) -> Q {
        q(self.rng.gen_range(1..=16), 4)
    }

    pub fn sample(&mut self) -> ExactInputs {
        ExactInputs {
            a: self.velocity(),
            b: self.velocity(),
            c: self.velocity(),
            y: self.cone_vector(),
            p: self.cone_vector(),
            m: self.mass(),
            pattern: self.rng.gen_range(0..4),
        }
    }

    /// Sample restricted to denominators ≤ 16, for witness minimization.
    pub fn small_sample(&mut self) -> ExactInputs {
        ExactInputs {
            a: self.small_velocity(),
            b: self.small_velocity(),
            c: self.small_velocity(),
            y: self.small_cone_vector(),
            p: self.small_cone_vector(),
            m: q(self.rng.gen_range(1..=8), self.rng.gen_range(1..=2)),
            pattern: self.rng.gen_range(0..4),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_valid_and_reproducible() {
        assert!(ExactInputs::canonical().is_valid());
        let mut s1 = ExactSampler::new(9);
        let mut s2 = ExactSampler::new(9);
        for _ in 0..200 {
            let x = s1.sample();
            assert!(x.is_valid());
            assert_eq!(x, s2.sample());
            assert!(s1.small_sample().is_valid());
            let _ = s2.small_sample();
        }
    }

    #[test]
    fn witness_formats_rationals() {
        let w = ExactInputs::canonical().witness(&[Slot::A, Slot::M]);
        assert_eq!(w["a"], vec!["1/10", "1/5", "3/10"]);
        assert_eq!(w["m"], vec!["2"]);
    }
}
