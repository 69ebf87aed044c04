use anisokin::metric::{hamiltonian, kinematic_length, momentum_from_velocity};
use anisokin::sampling::velocity_from_weights;
use anisokin::transforms::{boost_matrix, momentum_transform, transform, CharCoords};
use anisokin::velocity::{compose, invert, k_factor, subtract, Velocity3};
use proptest::prelude::*;

/// Domain velocity from four factor weights bounded away from zero.
fn velocity() -> impl Strategy<Value = Velocity3> {
    prop::array::uniform4(0.05f64..1.0).prop_map(|w| {
        let total: f64 = w.iter().sum();
        velocity_from_weights(w.map(|x| 4.0 * x / total))
    })
}

fn forward_vector() -> impl Strategy<Value = anisokin::FourVector> {
    prop::array::uniform4(0.05f64..2.0).prop_map(|g| CharCoords::new(g).to_four_vector())
}

fn close(x: f64, y: f64, rtol: f64) -> bool {
    (x - y).abs() <= rtol * 1f64.max(x.abs()).max(y.abs())
}

proptest! {
    #[test]
    fn k_is_positive_on_domain(s in velocity()) {
        prop_assert!(k_factor(&s) > 0.0);
    }

    #[test]
    fn length_is_boost_invariant(s in velocity(), y in forward_vector()) {
        let y2 = transform(&s, &y).unwrap();
        prop_assert!(close(kinematic_length(&y).unwrap(), kinematic_length(&y2).unwrap(), 1e-12));
    }

    #[test]
    fn hamiltonian_is_boost_invariant(s in velocity(), y in forward_vector()) {
        let p = momentum_from_velocity(1.5, &y).unwrap();
        let p2 = momentum_transform(&s, &p).unwrap();
        prop_assert!(close(hamiltonian(&p).unwrap(), hamiltonian(&p2).unwrap(), 1e-12));
        prop_assert!(close(hamiltonian(&p).unwrap(), 1.5, 1e-12));
    }

    #[test]
    fn inverse_cancels(s in velocity()) {
        let back = compose(&s, &invert(&s).unwrap()).unwrap();
        for x in back.components() {
            prop_assert!(x.abs() < 1e-12);
        }
    }

    #[test]
    fn composition_commutes(a in velocity(), b in velocity()) {
        let (ab, ba) = (compose(&a, &b).unwrap(), compose(&b, &a).unwrap());
        for (x, y) in ab.components().iter().zip(ba.components()) {
            prop_assert!(close(*x, y, 1e-12));
        }
    }

    #[test]
    fn subtraction_undoes_composition(a in velocity(), b in velocity()) {
        let back = subtract(&compose(&a, &b).unwrap(), &b).unwrap();
        for (x, y) in back.components().iter().zip(a.components()) {
            prop_assert!(close(*x, y, 1e-11));
        }
    }

    #[test]
    fn boost_matrix_is_symmetric(s in velocity()) {
        prop_assert!(boost_matrix(&s).unwrap().is_symmetric());
    }

    #[test]
    fn inverse_boost_undoes_boost(s in velocity(), y in forward_vector()) {
        let there = transform(&s, &y).unwrap();
        let back = transform(&invert(&s).unwrap(), &there).unwrap();
        for (x, z) in back.0.iter().zip(y.0) {
            prop_assert!(close(*x, z, 1e-11));
        }
    }
}
