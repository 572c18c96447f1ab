use picard_core::algebra::Substitution;
use picard_core::grr::{
    chart_coordinates, degree2_closed_form, degree2_piece, index_chern_character,
    integrality_witness, r_param, s_param,
};
use picard_core::{Element, Generator, Rational};
use proptest::prelude::*;

fn at(el: &Element, r: &Rational, s: &Rational) -> Element {
    let sub = Substitution::new()
        .with(Generator::param("r"), Element::constant(r.clone()))
        .with(Generator::param("s"), Element::constant(s.clone()));
    el.substitute(&sub).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn with_lambda(el: &Element) -> Element {
    let [l, z, m] = chart_coordinates(el).unwrap();
    l * Element::generator(Generator::lambda())
        + z * Element::generator(Generator::zeta())
        + m * Element::generator(Generator::m(0, 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn symbolic_specializes(r in rational(), s in rational()) {
        let symbolic = index_chern_character(&r_param(), &s_param(), 6).unwrap();
        let numeric = index_chern_character(
            &Element::constant(r.clone()),
            &Element::constant(s.clone()),
            6,
        )
        .unwrap();
        for d in [2, 4, 6] {
            prop_assert_eq!(at(&symbolic.piece(d), &r, &s), numeric.piece(d));
        }
        let closed = degree2_closed_form(&Element::constant(r.clone()), &Element::constant(s.clone()));
        prop_assert_eq!(with_lambda(&closed), with_lambda(&numeric.piece(2)));
    }
}

#[test]
fn integrality_grid() {
    let mut failures = 0;
    for r in -10..=10 {
        for s in -10..=10 {
            if integrality_witness(r, s).is_err() {
                failures += 1;
            }
        }
    }
    assert_eq!(failures, 0);
}

#[test]
fn half_integers_are_not_integral() {
    let piece = degree2_piece(&Element::constant(Rational::new(1.into(), 2.into())), &Element::integer(0)).unwrap();
    let [l, _, _] = chart_coordinates(&piece).unwrap();
    assert!(!l.constant_term().is_integer());
}
