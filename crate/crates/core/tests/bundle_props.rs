use num_bigint::BigInt;
use num_traits::Zero;
use picard_core::algebra::{parse_element, ratio};
use picard_core::bundle::{
    base_polynomial, eval_fourmanifold, eval_trivial_family, formal_pushforward, FourManifoldModel,
    TrivialFamilyModel,
};
use picard_core::{Element, Generator, Rational};
use proptest::prelude::*;

use picard_reference::oracle::{binomial_oracle, hirzebruch_solutions};

fn ey_poly() -> impl Strategy<Value = Element> {
    prop::collection::vec((-5i64..=5, 0u32..5, 0u32..5), 0..6).prop_map(|terms| {
        terms.into_iter().fold(Element::zero(), |acc, (c, a, b)| {
            acc + Element::generator(Generator::e()).pow(a)
                * Element::generator(Generator::y()).pow(b)
                * Element::integer(c)
        })
    })
}

fn param_poly() -> impl Strategy<Value = Element> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 1..4).prop_map(|terms| {
        terms.into_iter().fold(Element::zero(), |acc, (c, a, b)| {
            acc + Element::generator(Generator::param("r")).pow(a)
                * Element::generator(Generator::param("s")).pow(b)
                * Element::integer(c)
        })
    })
}

proptest! {
    #[test]
    fn pushforward_is_linear(p in ey_poly(), q in ey_poly(), c in -7i64..=7) {
        let lhs = formal_pushforward(&(&p + &q.scale(&ratio(c, 1)))).unwrap();
        let rhs = formal_pushforward(&p).unwrap()
            + formal_pushforward(&q).unwrap().scale(&ratio(c, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pushforward_drops_degree_by_two(p in ey_poly()) {
        let pushed = formal_pushforward(&p).unwrap();
        for d in pushed.degrees() {
            prop_assert!(d >= 2);
            let source = formal_pushforward(&p.homogeneous_part(d + 2)).unwrap();
            prop_assert_eq!(source, pushed.homogeneous_part(d));
        }
    }

    #[test]
    fn projection_formula(p in ey_poly(), a in param_poly()) {
        prop_assert_eq!(
            formal_pushforward(&(&a * &p)).unwrap(),
            a * formal_pushforward(&p).unwrap()
        );
    }

    #[test]
    fn pairing_is_symmetric(
        g in prop::collection::vec(-5i64..=5, 6),
        a in prop::collection::vec(-5i64..=5, 3),
        b in prop::collection::vec(-5i64..=5, 3),
    ) {
        let intersection = vec![
            vec![g[0], g[1], g[2]],
            vec![g[1], g[3], g[4]],
            vec![g[2], g[4], g[5]],
        ];
        let m = FourManifoldModel::new(
            vec!["p".into(), "q".into(), "r".into()],
            intersection,
            a.clone(),
            b.clone(),
            None,
        )
        .unwrap();
        prop_assert_eq!(m.pairing(&a, &b), m.pairing(&b, &a));
        let two_zeta = eval_fourmanifold(&m, &parse_element("2*zeta", &[]).unwrap()).unwrap();
        prop_assert!(two_zeta.is_integer());
        prop_assert_eq!(two_zeta.to_integer(), m.m01() - m.m_minus1_2());
    }
}

#[test]
fn higher_restrictions_match_binomial_oracle() {
    for g in 2..=8 {
        for k in -5..=5 {
            let model = TrivialFamilyModel::new(g, k, 8).unwrap();
            for i in -1..=3i32 {
                for j in 1..=5u32 {
                    if i + j as i32 <= 0 {
                        continue;
                    }
                    let class = Element::generator(Generator::m(i, j));
                    let got = eval_trivial_family(&model, &class).unwrap();
                    assert_eq!(got, base_polynomial(&binomial_oracle(g, k, i, j)), "g={g} k={k} m({i},{j})");
                }
            }
        }
    }
}

#[test]
fn edge_values_on_grid() {
    let x = |c: i64| base_polynomial(&[Rational::zero(), Rational::from_integer(c.into())]);
    for g in 2..=20 {
        for k in -10..=10 {
            let model = TrivialFamilyModel::new(g, k, 2).unwrap();
            let eval = |s: &str| eval_trivial_family(&model, &parse_element(s, &[]).unwrap()).unwrap();
            assert!(eval("lambda").is_zero());
            assert!(eval("kappa_1").is_zero());
            assert_eq!(eval("zeta"), x(1 - g - k));
            assert_eq!(eval("m_{0,1}"), x(2 - 2 * g));
        }
    }
}

#[test]
fn hirzebruch_form_is_determined() {
    // Line bundle y with fiber dual x: no integral form fits.
    assert!(hirzebruch_solutions([0, 1], [1, 0]).is_empty());
    // Line bundle x with fiber dual y: exactly the shipped form.
    let found = hirzebruch_solutions([1, 0], [0, 1]);
    assert_eq!(found, vec![[[-1, 1], [1, 0]]]);
    let h = FourManifoldModel::hirzebruch_h1();
    assert_eq!(h.intersection, vec![vec![-1, 1], vec![1, 0]]);
    assert_eq!(h.kappa1(), BigInt::zero());
}
