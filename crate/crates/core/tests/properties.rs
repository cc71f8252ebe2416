//! Algebraic laws checked on random inputs.

use std::sync::OnceLock;

use hochschild::hopf::kac_paljutkin;
use hochschild::koszul::{dual_action, dual_degrees, DualElement};
use hochschild::kp::kp_plane_action;
use hochschild::linalg::{int, kernel_basis, rat, Matrix, Scalar, Subspace};
use hochschild::qalgebra::{AlgebraElement, HActionOnA, Monomial, SkewPolyAlgebra, SmashElement, SmashProduct};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..5, 1i64..4).prop_map(|(p, q)| rat(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-2i64..3, cols), rows)
        .prop_map(move |r| Matrix::from_rows(r.into_iter().map(|row| row.into_iter().map(int).collect()).collect(), cols))
}

fn element(n: usize) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), scalar()), 1..4).prop_map(|terms| {
        let mut x = AlgebraElement::zero();
        for (e, c) in terms {
            x.add_term(Monomial::from_exponents(&e), c);
        }
        x
    })
}

fn smash_element() -> impl Strategy<Value = SmashElement> {
    prop::collection::vec((0u32..3, 0u32..3, 0usize..8, -2i64..3), 1..4).prop_map(|terms| {
        let mut x = SmashElement::zero();
        for (a, b, h, c) in terms {
            x.add_term((Monomial::from_exponents(&[a, b]), h), int(c));
        }
        x
    })
}

fn kp_smash() -> &'static SmashProduct {
    static S: OnceLock<SmashProduct> = OnceLock::new();
    S.get_or_init(|| SmashProduct::new(kp_plane_action(&int(2))))
}

fn kp_action() -> &'static HActionOnA {
    static A: OnceLock<HActionOnA> = OnceLock::new();
    A.get_or_init(|| kp_plane_action(&rat(-3, 2)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_vectors_are_annihilated(m in matrix(3, 5)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.dim() + m.rank(), 5);
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(2, 4), b in matrix(3, 4)) {
        let sa = Subspace::span(4, (0..2).map(|i| a.row(i).to_vec()).collect());
        let sb = Subspace::span(4, (0..3).map(|i| b.row(i).to_vec()).collect());
        prop_assert_eq!(sa.sum(&sb).dim() + sa.intersection(&sb).dim(), sa.dim() + sb.dim());
        prop_assert!(sa.sum(&sb).contains_subspace(&sa));
        prop_assert!(sa.contains_subspace(&sa.intersection(&sb)));
    }

    #[test]
    fn inverse_when_full_rank(m in matrix(3, 3)) {
        match m.inverse() {
            Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(3)),
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn skew_polynomial_multiplication_is_associative(
        q in prop::collection::vec(prop_oneof![Just(int(-1)), Just(int(2)), Just(rat(1, 3))], 3),
        x in element(3), y in element(3), z in element(3),
    ) {
        let table = vec![
            vec![int(1), q[0].clone(), q[1].clone()],
            vec![q[0].recip(), int(1), q[2].clone()],
            vec![q[1].recip(), q[2].recip(), int(1)],
        ];
        let a = SkewPolyAlgebra::new(vec!["a".into(), "b".into(), "c".into()], table).unwrap();
        prop_assert_eq!(a.multiply(&a.multiply(&x, &y), &z), a.multiply(&x, &a.multiply(&y, &z)));
    }

    #[test]
    fn action_is_a_module_algebra_action(h in 0usize..8, x in element(2), y in element(2)) {
        let act = kp_action();
        let hopf = act.hopf();
        let alg = act.algebra();
        let b = hopf.basis_element(h);
        let lhs = act.act(&b, &alg.multiply(&x, &y));
        let mut rhs = AlgebraElement::zero();
        for (legs, c) in hochschild::hopf::sweedler(hopf, &b, 2).iter() {
            let p = alg.multiply(&act.act(&hopf.basis_element(legs[0]), &x), &act.act(&hopf.basis_element(legs[1]), &y));
            rhs = rhs.add(&p.scale(c));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn smash_product_is_associative(x in smash_element(), y in smash_element(), z in smash_element()) {
        let s = kp_smash();
        prop_assert_eq!(s.multiply(&s.multiply(&x, &y), &z), s.multiply(&x, &s.multiply(&y, &z)));
        prop_assert_eq!(s.multiply(&s.one(), &x), x.clone());
        prop_assert_eq!(s.multiply(&x, &s.one()), x);
    }

    #[test]
    fn koszul_dual_is_associative_and_right_module(
        q in prop_oneof![Just(int(-1)), Just(int(3)), Just(rat(-1, 2))],
        c in prop::collection::vec(-3i64..4, 9),
        g in 0usize..8, h in 0usize..8,
    ) {
        let a = SkewPolyAlgebra::plane(q);
        let dual = dual_degrees(&a, 3).unwrap();
        let e = |m: usize, k: usize| DualElement { m, coords: c[k..k + dual.dim(m).unwrap()].iter().map(|x| int(*x)).collect() };
        let (x, y, z) = (e(1, 0), e(1, 2), e(0, 4));
        let mul = |p: &DualElement, r: &DualElement| dual.dual_multiply(p, r).unwrap();
        prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));

        // the Kac–Paljutkin action only exists on the (−1)-plane
        let kp_dual = dual_degrees(kp_action().algebra(), 3).unwrap();
        let act = dual_action(&kp_dual, kp_action()).unwrap();
        let hopf = kac_paljutkin();
        let lhs = act.apply(&act.apply(&x, g), h);
        let mut rhs = vec![int(0); x.coords.len()];
        for (p, coeff) in hopf.mul_basis(g, h) {
            for (r, v) in rhs.iter_mut().zip(act.apply(&x, *p).coords) {
                *r += coeff * v;
            }
        }
        prop_assert_eq!(lhs.coords, rhs);
    }
}
