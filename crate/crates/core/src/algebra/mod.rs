//! Exact sparse graded-commutative polynomial arithmetic.
//!
//! Elements are finite sums of monomials in named generators with exact
//! rational coefficients. Multiplication follows the Koszul sign rule, and
//! the square of an odd generator vanishes.

mod element;
mod generator;
mod json;
mod text;

use thiserror::Error;

pub use element::{Element, Monomial, Substitution, Universe};
pub use generator::{Generator, Parity, Symbol};
pub use json::{ElementRecord, GeneratorKindRecord, GeneratorRecord, ELEMENT_SCHEMA_VERSION};
pub use text::{parse_element, parse_element_in, resolve, GRAMMAR};

pub type Rational = num_rational::BigRational;

/// Default cap on degrees produced by truncated series products.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements live in different universes ({left} vs {right})")]
    UniverseMismatch { left: String, right: String },
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("coefficient is not an integer: {0}")]
    NotIntegral(String),
}

/// `n/d` as a rational.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(g: Generator) -> Element {
        Element::generator(g)
    }

    fn odd(name: &str) -> Element {
        gen(Generator::user(name, 1, Parity::Odd).unwrap())
    }

    #[test]
    fn add_examples() {
        let k1 = gen(Generator::kappa(1));
        let m01 = gen(Generator::m(0, 1));
        assert_eq!(&Element::zero() + &k1, k1);
        assert!((k1.scale(&ratio(2, 1)) + k1.scale(&ratio(-2, 1))).is_zero());
        let merged = (&k1 + &m01) + &m01;
        assert_eq!(merged.to_string(), "kappa_1 + 2*m_{0,1}");
    }

    #[test]
    fn universe_mismatch() {
        let a = gen(Generator::x()).in_universe(Universe::new("base"));
        let b = gen(Generator::x());
        assert!(matches!(
            a.checked_add(&b),
            Err(AlgebraError::UniverseMismatch { .. })
        ));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn koszul_sign_and_odd_square() {
        let a = odd("a");
        let b = odd("b");
        assert_eq!(&a * &b, -(&b * &a));
        assert!((&a * &a).is_zero());
        let c = odd("c");
        // c*b*a reorders to a*b*c through three transpositions.
        assert_eq!((&c * &b * &a).to_string(), "-a*b*c");
    }

    #[test]
    fn binomial_on_even_classes() {
        let s = gen(Generator::e()) + gen(Generator::y());
        assert_eq!((&s * &s).to_string(), "e^2 + 2*e*y + y^2");
    }

    #[test]
    fn homogeneous_parts() {
        let k1 = gen(Generator::kappa(1));
        let a = Element::one() + &k1 + &k1 * &k1;
        assert_eq!(a.homogeneous_part(4), &k1 * &k1);
        assert!(Element::zero().homogeneous_part(6).is_zero());
    }

    #[test]
    fn substitute_examples() {
        let zeta = gen(Generator::zeta());
        let half = ratio(1, 2);
        let image = (gen(Generator::m(0, 1)) - gen(Generator::m(-1, 2))).scale(&half);
        let sub = Substitution::new().with(Generator::zeta(), image);
        assert_eq!(
            zeta.substitute(&sub).unwrap().to_string(),
            "1/2*m_{0,1} - 1/2*m_{-1,2}"
        );

        let k1 = gen(Generator::kappa(1));
        assert_eq!(k1.substitute(&Substitution::new()).unwrap(), k1);

        let e2 = gen(Generator::e()).pow(2);
        let sub = Substitution::new().with(
            Generator::e(),
            gen(Generator::x()).scale(&ratio(2, 1)) + gen(Generator::y()),
        );
        assert_eq!(e2.substitute(&sub).unwrap().to_string(), "4*x^2 + 4*x*y + y^2");
    }

    #[test]
    fn substitute_parity_violation() {
        let sub = Substitution::new().with(Generator::e(), odd("a"));
        assert!(matches!(
            gen(Generator::e()).substitute(&sub),
            Err(AlgebraError::Parity(_))
        ));
    }

    #[test]
    fn truncated_product() {
        let s = Element::one() + gen(Generator::e());
        let sq = s.mul_truncated(&s, 2).unwrap();
        assert_eq!(sq.to_string(), "1 + 2*e");
    }

    #[test]
    fn integer_projection() {
        let a = gen(Generator::lambda()).scale(&ratio(1, 12));
        assert!(matches!(a.integer_terms(), Err(AlgebraError::NotIntegral(_))));
        assert_eq!(Element::integer(3).integer_terms().unwrap().len(), 1);
    }
}
