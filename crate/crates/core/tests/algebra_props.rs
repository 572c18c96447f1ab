use picard_core::algebra::{parse_element, Parity, Substitution};
use picard_core::{Element, Generator, Rational};
use proptest::prelude::*;

fn odd_a() -> Generator {
    Generator::user("a", 1, Parity::Odd).unwrap()
}

fn odd_b() -> Generator {
    Generator::user("b", 3, Parity::Odd).unwrap()
}

fn pool() -> Vec<(Generator, u32)> {
    vec![
        (Generator::kappa(1), 3),
        (Generator::m(0, 1), 3),
        (Generator::m(-1, 3), 2),
        (odd_a(), 1),
        (odd_b(), 1),
    ]
}

fn build(terms: &[(i64, i64, Vec<u32>)], gens: &[(Generator, u32)]) -> Element {
    let mut out = Element::zero();
    for (num, den, exps) in terms {
        let mut t = Element::constant(Rational::new((*num).into(), (*den).into()));
        for ((g, max), e) in gens.iter().zip(exps) {
            t = t * Element::generator(g.clone()).pow(e % (max + 1));
        }
        out = out + t;
    }
    out
}

fn element_in(gens: Vec<(Generator, u32)>) -> impl Strategy<Value = Element> {
    let n = gens.len();
    prop::collection::vec((-6i64..=6, 1i64..=4, prop::collection::vec(0u32..4, n)), 0..5)
        .prop_map(move |terms| build(&terms, &gens))
}

fn element() -> impl Strategy<Value = Element> {
    element_in(pool())
}

fn even_element() -> impl Strategy<Value = Element> {
    element_in(vec![(Generator::kappa(1), 2), (Generator::m(0, 1), 2)])
}

fn homogeneous() -> impl Strategy<Value = Element> {
    (element(), 0u32..12).prop_map(|(x, d)| x.homogeneous_part(d))
}

proptest! {
    #[test]
    fn associativity(x in element(), y in element(), z in element()) {
        prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
    }

    #[test]
    fn distributivity(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
        prop_assert_eq!((&y + &z) * &x, &y * &x + &z * &x);
    }

    #[test]
    fn additive_group(x in element(), y in element()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x + Element::zero(), x.clone());
        prop_assert_eq!(&x * Element::one(), x);
    }

    #[test]
    fn sign_commutativity(x in homogeneous(), y in homogeneous()) {
        let (dx, dy) = (x.degree().unwrap_or(0), y.degree().unwrap_or(0));
        let swapped = &y * &x;
        let expected = if dx % 2 == 1 && dy % 2 == 1 { -swapped } else { swapped };
        prop_assert_eq!(&x * &y, expected);
    }

    #[test]
    fn odd_squares_vanish(x in homogeneous()) {
        if x.degree().unwrap_or(0) % 2 == 1 {
            prop_assert!((&x * &x).is_zero());
        }
    }

    #[test]
    fn homogeneous_decomposition(x in element()) {
        let sum = x
            .degrees()
            .into_iter()
            .fold(Element::zero(), |acc, d| acc + x.homogeneous_part(d));
        prop_assert_eq!(sum, x.clone());
        for d in x.degrees() {
            prop_assert_eq!(x.homogeneous_part(d).degree(), Some(d));
        }
    }

    #[test]
    fn substitution_is_a_ring_map(
        x in element(),
        y in element(),
        k in even_element(),
        c in -3i64..=3,
    ) {
        let odd_image = Element::generator(odd_a()).scale(&Rational::from_integer(c.into()))
            + Element::generator(odd_b()) * Element::generator(Generator::m(0, 1));
        let sub = Substitution::new()
            .with(Generator::kappa(1), k)
            .with(odd_a(), odd_image);
        let s = |e: &Element| e.substitute(&sub).unwrap();
        prop_assert_eq!(s(&(&x * &y)), s(&x) * s(&y));
        prop_assert_eq!(s(&(&x + &y)), s(&x) + s(&y));
    }

    #[test]
    fn text_round_trip(x in element()) {
        let back = parse_element(&x.to_string(), &[odd_a(), odd_b()]).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn json_round_trip(x in element()) {
        prop_assert_eq!(Element::from_json(&x.to_json()).unwrap(), x);
    }
}
