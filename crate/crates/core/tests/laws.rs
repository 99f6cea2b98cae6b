use nullfil::families::{derivation_family, homomorphism_family, rb1_deg0};
use nullfil::operators::normalize_rota_baxter;
use nullfil::{
    basis_product, check_identity, hom_to_matrix, power, AlgebraDims, AlgebraElement,
    IdentityKind, MatrixOperator, Polynomial, RationalFunction, Scalar,
};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=20).prop_map(|(p, q)| Scalar::new(p, q).unwrap())
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(scalar(), 0..max_len).prop_map(|c| Polynomial::new("a", c))
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), Scalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn scalar_text_and_json_round_trip(a in scalar()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), a);
    }

    #[test]
    fn polynomial_round_trip(p in poly(5)) {
        let back: Polynomial = Polynomial::parse(&p.to_string(), "a").unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn ratfunc_eval_is_multiplicative(
        n1 in poly(4), d1 in poly(3), n2 in poly(4), d2 in poly(3), x in scalar()
    ) {
        prop_assume!(!d1.is_zero() && !d2.is_zero());
        let f = RationalFunction::new(n1, d1).unwrap();
        let g = RationalFunction::new(n2, d2).unwrap();
        let fg = f.mul(&g).unwrap();
        if let (Ok(fx), Ok(gx)) = (f.eval(&x), g.eval(&x)) {
            prop_assert_eq!(fg.eval(&x).unwrap(), &fx * &gx);
            let sum = f.add(&g).unwrap().eval(&x).unwrap();
            prop_assert_eq!(sum, &fx + &gx);
        }
    }

    #[test]
    fn ratfunc_text_round_trip(n in poly(4), d in poly(3)) {
        prop_assume!(!d.is_zero());
        let f = RationalFunction::new(n, d).unwrap();
        let back: RationalFunction = RationalFunction::parse(&f.to_string(), "a").unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn rota_baxter_weight_normalization(a in scalar(), w in nonzero()) {
        let Ok(op) = rb1_deg0(5, &a) else { return Ok(()) };
        let p = hom_to_matrix(&op).scale(&w);
        let weighted = IdentityKind::RotaBaxter(w.clone());
        prop_assert!(check_identity(&weighted, &p).passed());
        let back = normalize_rota_baxter(&p, &w).unwrap();
        prop_assert!(check_identity(&IdentityKind::RotaBaxter(Scalar::one()), &back).passed());
    }

    #[test]
    fn derivation_is_nilpotent_without_diagonal(tail in prop::collection::vec(scalar(), 5)) {
        let mut alpha = vec![Scalar::zero()];
        alpha.extend(tail);
        let d = derivation_family(6, &alpha).unwrap();
        prop_assert!(check_identity(&IdentityKind::Derivation, &d).passed());
        let mut acc = d.clone();
        for _ in 1..6 {
            acc = acc.compose(&d).unwrap();
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn derivation_scaling(alpha in prop::collection::vec(scalar(), 5), c in scalar()) {
        let d = derivation_family(5, &alpha).unwrap().scale(&c);
        prop_assert!(check_identity(&IdentityKind::Derivation, &d).passed());
    }

    #[test]
    fn differential_matches_shifted_homomorphism(alpha in prop::collection::vec(scalar(), 4)) {
        let phi = homomorphism_family(4, &alpha).unwrap();
        let id = MatrixOperator::identity(phi.dims());
        let d = phi.sub(&id).unwrap();
        let diff = IdentityKind::Differential(Scalar::one());
        prop_assert!(check_identity(&IdentityKind::Homomorphism, &phi).passed());
        prop_assert!(check_identity(&diff, &d).passed());
    }
}

#[test]
fn basis_products_and_powers() {
    for n in 1..=8 {
        let dims = AlgebraDims::new(n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let p = basis_product(i, j, dims).unwrap();
                let expected = if i + j <= n {
                    AlgebraElement::basis(i + j, dims).unwrap()
                } else {
                    AlgebraElement::zero(dims)
                };
                assert_eq!(p, expected);
            }
        }
        let e1 = AlgebraElement::basis(1, dims).unwrap();
        for k in 1..=n as u32 + 1 {
            let p = power(&e1, k).unwrap();
            if k as usize <= n {
                assert_eq!(p, AlgebraElement::basis(k as usize, dims).unwrap());
            } else {
                assert!(p.is_zero());
            }
        }
    }
}
