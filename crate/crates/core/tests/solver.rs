mod common;

use common::{holds, q, Law};
use nullfil::families::formulas::reynolds_multiples;
use nullfil::solver::{
    classify, verify_completeness, verify_equality, SolutionFamily, MAX_FALSE_EQUAL,
};
use nullfil::{Error, IdentityKind, MultiRat, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rb(w: &str) -> IdentityKind {
    IdentityKind::RotaBaxter(q(w))
}

fn law_of(kind: &IdentityKind) -> Law {
    match kind {
        IdentityKind::RotaBaxter(w) if w.is_zero() => Law::RotaBaxter(0),
        IdentityKind::RotaBaxter(_) => Law::RotaBaxter(1),
        IdentityKind::Reynolds => Law::Reynolds,
        IdentityKind::Nijenhuis => Law::Nijenhuis,
        IdentityKind::Average => Law::Average,
        other => panic!("no oracle for {other}"),
    }
}

fn at_one(f: &SolutionFamily) -> Vec<Scalar> {
    f.specialize(&vec![Scalar::one(); f.params().len()]).unwrap()
}

#[test]
fn nijenhuis_degree_zero_is_scalar_multiples_of_identity() {
    let c = classify(&IdentityKind::Nijenhuis, 0, 5).unwrap();
    assert_eq!(c.families.len(), 1);
    assert_eq!(c.families[0].render_psi(), vec!["a"; 5]);
    assert_eq!(c.families[0].free_names(), vec!["a"]);
}

#[test]
fn rb0_degree_zero_n4_families() {
    let c = classify(&rb("0"), 0, 4).unwrap();
    let mut got: Vec<Vec<Scalar>> = c.families.iter().map(at_one).collect();
    got.sort();
    // t v / i on multiples of t at v = 1, then the spikes r = 3, 4
    let mut expected = vec![
        vec![q("1"), q("1/2"), q("1/3"), q("1/4")],
        vec![q("0"), q("1"), q("0"), q("1/2")],
        vec![q("0"), q("0"), q("1"), q("0")],
        vec![q("0"), q("0"), q("0"), q("1")],
    ];
    expected.sort();
    assert_eq!(got, expected);
    assert!(c.families.iter().all(|f| f.params().len() == 1));
}

#[test]
fn rb1_degree_zero_n3_has_one_family_with_pole() {
    let c = classify(&rb("1"), 0, 3).unwrap();
    assert_eq!(c.families.len(), 1);
    let f = &c.families[0];
    assert_eq!(f.excluded(), vec![("a".to_string(), q("-1/2"))]);
    // the zero operator is the a = 0 member
    let zero = f.specialize(&[Scalar::zero()]).unwrap();
    assert!(zero.iter().all(Scalar::is_zero));
    assert!(matches!(
        f.specialize(&[q("-1/2")]),
        Err(Error::SingularParameter { .. })
    ));
}

#[test]
fn rb1_low_degree_only_zero() {
    for n in 3..=10 {
        for k in 1..n / 2 {
            let c = classify(&rb("1"), k, n).unwrap();
            assert_eq!(c.families.len(), 1, "n={n} k={k}");
            assert!(c.families[0].params().is_empty());
            assert!(c.families[0].render_psi().iter().all(|s| s == "0"));
        }
    }
}

#[test]
fn nijenhuis_high_degree_arbitrary_head() {
    let c = classify(&IdentityKind::Nijenhuis, 3, 6).unwrap();
    assert_eq!(c.families.len(), 1);
    assert_eq!(c.families[0].render_psi(), vec!["a", "b", "c", "0", "0", "0"]);
}

#[test]
fn rb0_degree_zero_family_count() {
    for n in 2..=10 {
        let c = classify(&rb("0"), 0, n).unwrap();
        assert_eq!(c.families.len(), n / 2 + (n - n / 2), "n={n}");
        assert!(c.notes.is_empty());
    }
}

#[test]
fn unclassified_regime_is_an_error() {
    assert!(matches!(
        classify(&IdentityKind::Reynolds, 2, 7),
        Err(Error::UnclassifiedRegime(_))
    ));
    assert!(matches!(
        classify(&IdentityKind::Derivation, 0, 3),
        Err(Error::UnclassifiedRegime(_))
    ));
}

#[test]
fn every_family_member_passes_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let kinds = [
        rb("0"),
        rb("1"),
        IdentityKind::Reynolds,
        IdentityKind::Nijenhuis,
        IdentityKind::Average,
    ];
    for kind in &kinds {
        for n in 2..=7 {
            for k in [0, 1, n / 2, n - 1] {
                let Ok(c) = classify(kind, k, n) else { continue };
                for f in &c.families {
                    for _ in 0..10 {
                        let point = f.random_point(&mut rng, 1000);
                        let psi = f.specialize(&point).unwrap();
                        assert!(holds(law_of(kind), k, &psi), "{kind} k={k} n={n} {psi:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn equality_self_and_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = classify(&rb("0"), 0, 3).unwrap();
    let harmonic = c
        .families
        .iter()
        .find(|f| f.render_psi()[0] == "a")
        .unwrap()
        .clone();
    let r = verify_equality(&harmonic, &harmonic, 5, &mut rng).unwrap();
    assert!(r.equal);
    assert!(r.error_bound <= MAX_FALSE_EQUAL);

    // the Reynolds chain v/(i - (i-1)v), placed in the same regime
    let psi = reynolds_multiples(3, 1, &MultiRat::var(0)).unwrap();
    let reynolds = SolutionFamily::from_values(rb("0"), 0, psi).unwrap();
    let r = verify_equality(&harmonic, &reynolds, 5, &mut rng).unwrap();
    assert!(!r.equal);
    let w = r.witness.unwrap();
    assert_eq!(w.index, 2);
    let a = &w.point[0];
    assert_eq!(w.lhs, a * q("1/2"));
    assert_ne!(w.lhs, w.rhs);

    // parameter-count mismatch is structural
    let zero = SolutionFamily::from_values(rb("0"), 0, vec![MultiRat::zero(); 3]).unwrap();
    let r = verify_equality(&harmonic, &zero, 5, &mut rng).unwrap();
    assert!(!r.equal && r.structural);
}

#[test]
fn spike_at_zero_equals_zero_family() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = classify(&rb("0"), 0, 5).unwrap();
    let spike = c
        .families
        .iter()
        .find(|f| f.render_psi() == ["0", "0", "0", "0", "a"])
        .unwrap();
    let collapsed = spike.specialize_param("a", &Scalar::zero()).unwrap();
    let zero = SolutionFamily::from_values(rb("0"), 0, vec![MultiRat::zero(); 5]).unwrap();
    assert!(verify_equality(&collapsed, &zero, 3, &mut rng).unwrap().equal);
}

#[test]
fn average_degree_zero_n6_matches_theorem() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let r = verify_completeness(&IdentityKind::Average, 0, 6, 3, &mut rng).unwrap();
    assert!(r.perfect, "{r:?}");
    assert_eq!(r.matched.len(), 6);
}

#[test]
fn classification_is_deterministic() {
    for kind in [rb("0"), IdentityKind::Reynolds, IdentityKind::Nijenhuis] {
        let a = serde_json::to_string(&classify(&kind, 1, 7).unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&classify(&kind, 1, 7).unwrap().to_json()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn reynolds_n4_json() {
    let c = classify(&IdentityKind::Reynolds, 0, 4).unwrap();
    let json = serde_json::to_value(c.to_json()).unwrap();
    let first = &json["families"][0];
    assert_eq!(
        first["psi"],
        serde_json::json!(["a", "(a)/(2 - a)", "(a)/(3 - 2*a)", "(a)/(4 - 3*a)"])
    );
    assert_eq!(first["free"], serde_json::json!(["a"]));
    assert_eq!(
        first["excluded"],
        serde_json::json!([["a", "2"], ["a", "3/2"], ["a", "4/3"]])
    );
}
