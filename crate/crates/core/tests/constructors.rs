mod common;

use common::{first_violation, holds, q, qs, Law};
use nullfil::families::{
    average_deg0, average_deg0_spike, average_deg1, average_degk, nijenhuis_deg0, nijenhuis_deg1,
    nijenhuis_degk, rb0_deg0, rb0_deg0_spike, rb0_deg1, rb0_degk, rb1_deg0, rb1_degk,
    reynolds_deg0, reynolds_deg0_spike, reynolds_deg1, reynolds_degk, Degree1Params,
};
use nullfil::{Error, Scalar};

fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(num, den).unwrap()
}

#[test]
fn rb0_degree_zero_examples() {
    let op = rb0_deg0(4, 1, &q("1")).unwrap();
    let expected: Vec<Scalar> = (1..=4).map(|i| frac(1, i)).collect();
    assert_eq!(op.psi(), expected.as_slice());
    assert!(holds(Law::RotaBaxter(0), 0, op.psi()));

    // t v / i on multiples of t
    let op = rb0_deg0(5, 2, &q("3")).unwrap();
    let expected: Vec<Scalar> = (1..=5)
        .map(|i| if i % 2 == 0 { frac(6, i) } else { Scalar::zero() })
        .collect();
    assert_eq!(op.psi(), expected.as_slice());
    assert!(holds(Law::RotaBaxter(0), 0, op.psi()));

    assert!(rb0_deg0(4, 3, &q("1")).is_err());
    assert!(rb0_deg0(4, 1, &q("0")).is_err());
}

#[test]
fn rb0_spike_examples() {
    let op = rb0_deg0_spike(5, 3, &q("7")).unwrap();
    assert_eq!(op.psi(), qs(&["0", "0", "7", "0", "0"]).as_slice());
    assert!(holds(Law::RotaBaxter(0), 0, op.psi()));
    let zero = rb0_deg0_spike(5, 3, &q("0")).unwrap();
    assert!(holds(Law::RotaBaxter(0), 0, zero.psi()));
    assert!(rb0_deg0_spike(4, 2, &q("1")).is_err());
}

#[test]
fn rb0_degree_one_examples() {
    // 2ψ(1)/(i+1) for i <= n-1
    let op = rb0_deg1(6, 'a', &Degree1Params::Psi1(q("1"))).unwrap();
    let mut expected: Vec<Scalar> = (1..6).map(|i| frac(2, i + 1)).collect();
    expected.push(Scalar::zero());
    assert_eq!(op.psi(), expected.as_slice());
    assert_eq!(op.degree(), 1);
    assert!(holds(Law::RotaBaxter(0), 1, op.psi()));

    let op = rb0_deg1(6, 'b', &Degree1Params::Psi1(q("1"))).unwrap();
    assert_eq!(op.psi(), qs(&["1", "0", "1/2", "0", "1/3", "0"]).as_slice());
    assert!(holds(Law::RotaBaxter(0), 1, op.psi()));

    let op = rb0_deg1(8, 'c', &Degree1Params::Multiple { t: 2, v: q("1") }).unwrap();
    assert_eq!(
        op.psi(),
        qs(&["0", "1", "0", "0", "1/2", "0", "0", "0"]).as_slice()
    );
    assert!(holds(Law::RotaBaxter(0), 1, op.psi()));

    let op = rb0_deg1(8, 'd', &Degree1Params::TwoSpike { r: 5, v1: q("2"), v2: q("-3") }).unwrap();
    assert!(holds(Law::RotaBaxter(0), 1, op.psi()));
}

#[test]
fn rb1_examples() {
    // a^s/((a+1)^s - a^s) at a = 1 is 1/(2^s - 1)
    let op = rb1_deg0(4, &q("1")).unwrap();
    let expected: Vec<Scalar> = (1..=4u32).map(|s| frac(1, 2i64.pow(s) - 1)).collect();
    assert_eq!(op.psi(), expected.as_slice());
    assert!(holds(Law::RotaBaxter(1), 0, op.psi()));

    assert!(rb1_deg0(5, &q("0")).unwrap().psi().iter().all(Scalar::is_zero));
    assert!(matches!(
        rb1_deg0(3, &q("-1/2")),
        Err(Error::SingularParameter { index: 2, .. })
    ));

    let op = rb1_degk(8, 2, &q("5")).unwrap();
    assert!(op.psi().iter().all(Scalar::is_zero));
    let op = rb1_degk(8, 4, &q("5")).unwrap();
    assert_eq!(op.degree(), 4);
    assert_eq!(op.psi(), qs(&["5", "0", "0", "0", "0", "0", "0", "0"]).as_slice());
    assert!(holds(Law::RotaBaxter(1), 4, op.psi()));
    let op = rb1_degk(2, 1, &q("3")).unwrap();
    assert_eq!(op.psi(), qs(&["3", "0"]).as_slice());
    assert!(holds(Law::RotaBaxter(1), 1, op.psi()));
}

#[test]
fn reynolds_examples() {
    // v/(i - (i-1)v) at v = 1/2 is 1/(i+1)
    let op = reynolds_deg0(3, 1, &q("1/2")).unwrap();
    let expected: Vec<Scalar> = (1..=3).map(|i| frac(1, i + 1)).collect();
    assert_eq!(op.psi(), expected.as_slice());
    assert!(holds(Law::Reynolds, 0, op.psi()));

    match reynolds_deg0(4, 1, &q("2")) {
        Err(Error::SingularParameter { index, detail }) => {
            assert_eq!(index, 2);
            assert!(detail.contains("pole"), "{detail}");
        }
        other => panic!("expected a pole, got {other:?}"),
    }

    let op = reynolds_deg0_spike(5, 3, &q("9")).unwrap();
    assert!(holds(Law::Reynolds, 0, op.psi()));

    let op = reynolds_deg1(8, 'b', &Degree1Params::TwoSpike { r: 4, v1: q("2"), v2: q("3") }).unwrap();
    assert_eq!(
        op.psi(),
        qs(&["0", "0", "0", "2", "3", "0", "0", "0"]).as_slice()
    );
    assert!(holds(Law::Reynolds, 1, op.psi()));
    assert!(reynolds_deg1(4, 'a', &Degree1Params::Multiple { t: 2, v: q("1") }).is_err());
}

#[test]
fn reynolds_degree_one_shifted_harmonic() {
    // (t+1)v/(i+1) wherever t+1 divides i+1, for i <= n-1
    let op = reynolds_deg1(8, 'a', &Degree1Params::Multiple { t: 1, v: q("1") }).unwrap();
    let expected: Vec<Scalar> = (1..=8)
        .map(|i| {
            if i < 8 && (i + 1) % 2 == 0 {
                frac(2, i + 1)
            } else {
                Scalar::zero()
            }
        })
        .collect();
    assert_eq!(op.psi(), expected.as_slice());
    assert!(holds(Law::Reynolds, 1, op.psi()));
    // zeroing psi(7) breaks the identity
    let truncated = qs(&["1", "0", "1/2", "0", "1/3", "0", "0", "0"]);
    assert!(!holds(Law::Reynolds, 1, &truncated));
}

#[test]
fn nijenhuis_examples() {
    let op = nijenhuis_deg0(6, &q("5")).unwrap();
    assert_eq!(op.psi(), vec![q("5"); 6].as_slice());
    assert!(holds(Law::Nijenhuis, 0, op.psi()));
    assert!(holds(Law::Nijenhuis, 0, nijenhuis_deg0(4, &q("0")).unwrap().psi()));
    assert!(holds(Law::Nijenhuis, 0, nijenhuis_deg0(4, &q("1")).unwrap().psi()));

    let op = nijenhuis_deg1(6, 'c', &Degree1Params::Spike { r: 3, v: q("4") }).unwrap();
    assert_eq!(op.psi(), qs(&["0", "0", "4", "0", "0", "0"]).as_slice());
    assert_eq!(op.degree(), 1);
    assert!(holds(Law::Nijenhuis, 1, op.psi()));

    let op = nijenhuis_deg1(10, 'b', &Degree1Params::Multiple { t: 2, v: q("1") }).unwrap();
    let expected = qs(&["0", "1", "0", "0", "1/2", "0", "0", "1/3", "0", "0"]);
    assert_eq!(op.psi(), expected.as_slice());
    assert!(holds(Law::Nijenhuis, 1, op.psi()));
}

#[test]
fn nijenhuis_recurrence_seed_is_free() {
    for s in ["1/3", "3", "-5", "7/2"] {
        let op = nijenhuis_deg1(5, 'a', &Degree1Params::Seeds(q("1"), q(s))).unwrap();
        assert_eq!(op.psi()[1], q(s));
        assert!(holds(Law::Nijenhuis, 1, op.psi()), "seed {s}");
    }
    // psi(1) + psi(1) - psi(2) vanishes at psi(2) = 2 psi(1)
    let err = nijenhuis_deg1(5, 'a', &Degree1Params::Seeds(q("1"), q("2")));
    assert!(matches!(err, Err(Error::SingularParameter { index: 3, .. })), "{err:?}");
}

#[test]
fn average_examples() {
    let op = average_deg0(6, 2, &q("3")).unwrap();
    assert_eq!(op.psi(), qs(&["0", "3", "0", "3", "0", "3"]).as_slice());
    assert!(holds(Law::Average, 0, op.psi()));
    let op = average_deg0(4, 1, &q("-2/7")).unwrap();
    assert!(holds(Law::Average, 0, op.psi()));
    let op = average_deg0_spike(5, 4, &q("2")).unwrap();
    assert!(holds(Law::Average, 0, op.psi()));

    let op = average_deg1(5, 'a', &Degree1Params::Psi1(q("2"))).unwrap();
    assert_eq!(op.psi(), qs(&["2", "2", "2", "2", "0"]).as_slice());
    assert!(holds(Law::Average, 1, op.psi()));
    let op = average_deg1(6, 'b', &Degree1Params::Psi1(q("1"))).unwrap();
    assert_eq!(op.psi(), qs(&["1", "0", "1", "0", "1", "0"]).as_slice());
    assert!(holds(Law::Average, 1, op.psi()));
    let op = average_deg1(8, 'c', &Degree1Params::Multiple { t: 2, v: q("5") }).unwrap();
    assert_eq!(
        op.psi(),
        qs(&["0", "5", "0", "0", "5", "0", "0", "0"]).as_slice()
    );
    assert!(holds(Law::Average, 1, op.psi()));
}

#[test]
fn arbitrary_head_examples() {
    let op = rb0_degk(6, 3, &qs(&["1", "2", "3"])).unwrap();
    assert_eq!(op.psi(), qs(&["1", "2", "3", "0", "0", "0"]).as_slice());
    assert!(holds(Law::RotaBaxter(0), 3, op.psi()));
    let head = qs(&["7"]);
    for (law, op) in [
        (Law::RotaBaxter(0), rb0_degk(6, 5, &head)),
        (Law::Reynolds, reynolds_degk(6, 5, &head)),
        (Law::Nijenhuis, nijenhuis_degk(6, 5, &head)),
        (Law::Average, average_degk(6, 5, &head)),
    ] {
        assert!(holds(law, 5, op.unwrap().psi()), "{law:?}");
    }
    assert!(rb0_degk(6, 2, &qs(&["1", "2", "3", "4"])).is_err());
    assert!(rb0_degk(6, 3, &qs(&["1", "2"])).is_err());
}

#[test]
fn all_ones_fails_rota_baxter_at_first_pair() {
    let psi = qs(&["1", "1", "1", "1"]);
    assert_eq!(first_violation(Law::RotaBaxter(0), 0, &psi), Some((1, 1)));
}

#[test]
fn scaling_by_identity_homogeneity() {
    let two = q("2");
    let scaled = |psi: &[Scalar]| psi.iter().map(|x| x * &two).collect::<Vec<_>>();

    let rb0 = rb0_deg0(5, 1, &q("1")).unwrap();
    assert!(holds(Law::RotaBaxter(0), 0, &scaled(rb0.psi())));
    let avg = average_deg0(5, 1, &q("3")).unwrap();
    assert!(holds(Law::Average, 0, &scaled(avg.psi())));

    let rb1 = rb1_deg0(3, &q("1")).unwrap();
    assert!(!holds(Law::RotaBaxter(1), 0, &scaled(rb1.psi())));
    let rey = reynolds_deg0(3, 1, &q("1/2")).unwrap();
    assert!(!holds(Law::Reynolds, 0, &scaled(rey.psi())));
    // every Nijenhuis term is quadratic in P, so c P is again a solution
    let nij = nijenhuis_deg1(5, 'a', &Degree1Params::Seeds(q("1"), q("1/3"))).unwrap();
    assert!(holds(Law::Nijenhuis, 1, &scaled(nij.psi())));
}
