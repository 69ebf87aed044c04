use anisokin::oracle::audit::invariant_velocity_audit;
use anisokin::oracle::exact::{q, RationalFourVector, RationalVelocity};
use anisokin::oracle::ledger::{full_ledger, ledger_with_samples, verify_identity, Verdict};
use anisokin::oracle::registry::registry;
use anisokin::oracle::OracleError;
use anisokin::suites::{run_suite, SuiteConfig};

#[test]
fn float_and_exact_agree_on_shared_samples() {
    let cfg = SuiteConfig {
        samples: 1000,
        ..SuiteConfig::default()
    };
    let r = run_suite("oracle-agreement", &cfg).unwrap();
    assert!(r.passed, "{r:?}");
}

#[test]
fn ledger_bytes_are_deterministic() {
    assert_eq!(full_ledger(7).to_json(), full_ledger(7).to_json());
    assert_ne!(
        ledger_with_samples(7, 3).to_json(),
        ledger_with_samples(8, 3).to_json()
    );
}

#[test]
fn ledger_examples() {
    let e = verify_identity("3.16", 100, 7).unwrap();
    assert_eq!(e.verdict, Verdict::HoldsExactly);
    let e = verify_identity("2.15", 100, 7).unwrap();
    assert_eq!(e.verdict, Verdict::HoldsExactly);
    let e = verify_identity("3.28", 100, 7).unwrap();
    assert_eq!(e.verdict, Verdict::Fails);
    assert_eq!(e.witness.inputs["a"], ["1/10", "1/5", "3/10"]);
    for id in ["3.37", "2.13"] {
        assert_eq!(
            verify_identity(id, 100, 7).unwrap().verdict,
            Verdict::HoldsExactly
        );
    }
    assert!(matches!(
        verify_identity("nope", 1, 7),
        Err(OracleError::UnknownIdentity(_))
    ));
}

#[test]
fn contested_verdicts() {
    let ledger = full_ledger(7);
    let expect = [
        ("2.35-normalization", Verdict::HoldsAfterStatedCorrection),
        ("2.43-factor", Verdict::HoldsAfterStatedCorrection),
        ("3.26-sign-table", Verdict::HoldsAfterStatedCorrection),
        ("3.27", Verdict::Fails),
        ("3.28", Verdict::Fails),
        ("3.29", Verdict::Fails),
        ("3.33-superscripts", Verdict::HoldsAfterStatedCorrection),
        ("3.35-3.36-duplicate", Verdict::HoldsAfterStatedCorrection),
        ("4.11-4.13", Verdict::HoldsAfterStatedCorrection),
        ("4.20-4.21", Verdict::HoldsAfterStatedCorrection),
    ];
    for (id, verdict) in expect {
        let e = ledger.entry(id).unwrap();
        assert!(e.contested, "{id}");
        assert_eq!(e.verdict, verdict, "{id}: {}", e.witness.detail);
    }
    assert_eq!(ledger.entries.len(), registry().len());
}

#[test]
fn invariant_velocity_table() {
    let t = invariant_velocity_audit(7, 50);
    let c1 = t.candidate([-1, -1, -1]).unwrap();
    assert!(!c1.absorbing && !c1.neutral);
    let e1 = t.candidate([1, 1, 1]).unwrap();
    assert!(e1.absorbing && !e1.inverse_defined);
}

#[test]
fn rational_mirrors() {
    let s = RationalVelocity::new(q(1, 10), q(1, 5), q(3, 10));
    assert!(s.in_domain());
    assert_eq!(
        s.compose(&s.invert().unwrap()),
        Some(RationalVelocity::zero())
    );
    let y = RationalFourVector::from_f64([1.0, 0.0, 0.0, 0.0]);
    assert_eq!(y.length4(), q(1, 1));
}
