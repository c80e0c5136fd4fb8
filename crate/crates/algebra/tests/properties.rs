use std::cmp::Ordering;

use drg_algebra::{
    expr_is_zero_via, factor, real_roots, AlgebraicReal, BigInt, BigRational, Expr, IntPoly,
    NumberField, ZeroRoute,
};
use proptest::prelude::*;

fn small_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| IntPoly::from_i64s(&c))
}

fn sqrt(n: i64) -> AlgebraicReal {
    real_roots(&IntPoly::from_i64s(&[-n, 0, 1])).pop().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_expands_back(a in small_poly(3), b in small_poly(3), c in small_poly(2)) {
        let p = a.mul(&b).mul(&c);
        let f = factor(&p);
        prop_assert_eq!(f.expand(), p);
        for (g, _) in &f.factors {
            prop_assert!(g.leading() > BigInt::from(0));
            prop_assert_eq!(g.content(), BigInt::from(1));
        }
    }

    #[test]
    fn real_roots_are_roots_and_sorted(a in small_poly(4), b in small_poly(3)) {
        let p = a.mul(&b);
        prop_assume!(p.deg() > 0);
        let roots = real_roots(&p);
        for w in roots.windows(2) {
            prop_assert_eq!(w[0].compare(&w[1]), Ordering::Less);
        }
        for r in &roots {
            let f = r.minimal_polynomial();
            prop_assert!(p.div_exact(f).is_some());
            if r.is_rational() {
                prop_assert_eq!(p.sign_at(r.lo()), Ordering::Equal);
            } else {
                prop_assert_ne!(f.sign_at(r.lo()), f.sign_at(r.hi()));
            }
        }
    }

    #[test]
    fn comparison_matches_floating_point_when_far_apart(n in 2i64..60, m in 2i64..60, k in -5i64..5) {
        let a = sqrt(n);
        let b = AlgebraicReal::from_integer(k).add(&sqrt(m));
        let fa = (n as f64).sqrt();
        let fb = k as f64 + (m as f64).sqrt();
        if (fa - fb).abs() > 1e-9 {
            prop_assert_eq!(a.compare(&b), fa.partial_cmp(&fb).unwrap());
        }
    }

    #[test]
    fn zero_routes_agree(n in 2i64..30, m in 2i64..30, p in -4i64..4, q in 1i64..4) {
        let x = Expr::real(sqrt(n));
        let y = Expr::real(sqrt(m));
        let exprs = [
            x.clone() * y.clone() - Expr::real(sqrt(n * m)),
            (x.clone() + y.clone()).pow(2) - x.pow(2) - y.pow(2) - Expr::int(2) * x.clone() * y.clone(),
            x.clone() * Expr::int(p) - y.clone() * Expr::int(q),
            (x.clone() - Expr::int(p)) / (y.clone() + Expr::int(q)) - Expr::int(1),
        ];
        for e in &exprs {
            let f = expr_is_zero_via(e, ZeroRoute::Field);
            let b = expr_is_zero_via(e, ZeroRoute::Bound);
            prop_assert_eq!(f, b);
        }
        prop_assert!(expr_is_zero_via(&exprs[0], ZeroRoute::Field).unwrap());
        prop_assert!(expr_is_zero_via(&exprs[1], ZeroRoute::Field).unwrap());
    }

    #[test]
    fn field_round_trip(n in 2i64..40, m in 2i64..40) {
        let vals = [sqrt(n), sqrt(m), sqrt(n).neg()];
        let (_, elems) = NumberField::generated_by(&vals);
        for (v, e) in vals.iter().zip(&elems) {
            prop_assert_eq!(&e.to_algebraic(), v);
        }
        let nm = BigRational::from_integer(BigInt::from(n * m));
        let square = (&elems[0] * &elems[1]) * (&elems[0] * &elems[1]);
        prop_assert_eq!(square.as_rational(), Some(nm));
    }
}
