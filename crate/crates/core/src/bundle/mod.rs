//! Fiber integration for surface bundles `E -> B` carrying a line bundle
//! `L -> E`, and evaluation of the resulting classes on concrete models.
//!
//! With `e` the vertical Euler class and `y = c_1(L)`, the generalized
//! Miller-Morita-Mumford classes are `m_{i,j} = pi_!(e^{i+1} y^j)`, and
//! `m_{i,0} = kappa_i`.

mod basis;
mod fourfold;
mod trivial;

use thiserror::Error;

use crate::algebra::{ratio, AlgebraError, Element, Generator, Monomial, Substitution, Symbol};

pub use basis::{basis_vector, BasisModel, BasisVector};
pub use fourfold::{eval_fourmanifold, FiberConstraint, FourManifoldModel};
pub use trivial::{base_polynomial, eval_trivial_family, FiberClass, TrivialFamilyModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degree error: {0}")]
    Degree(String),
    #[error("result needs x^{needed} but the model is truncated at x^{truncation}")]
    Truncation { needed: u32, truncation: u32 },
    #[error("kappa_1 = {kappa1} is not divisible by 12, so lambda is not integral on this model")]
    NonIntegralHodge { kappa1: String },
    #[error("model inconsistency: {0}")]
    ModelInconsistency(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `pi_!` on polynomials in `e` and `y`.
///
/// `e^a y^b` maps to `m_{a-1,b}` (to `kappa_{a-1}` when `b = 0`); monomials
/// of total order at most one land in non-positive degree and map to zero.
/// Degree-zero parameters pass through as scalars.
pub fn formal_pushforward(p: &Element) -> Result<Element, BundleError> {
    let mut out = Element::zero_in(p.universe().clone());
    for (mono, c) in p.terms() {
        let (mut a, mut b) = (0u32, 0u32);
        let mut scalars = Vec::new();
        for (g, exp) in mono.factors() {
            match g.symbol() {
                Symbol::E => a = *exp,
                Symbol::Y => b = *exp,
                Symbol::Param(_) => scalars.push((g.clone(), *exp)),
                _ => {
                    return Err(BundleError::Domain(format!(
                        "pushforward is defined on polynomials in e and y, found {g}"
                    )))
                }
            }
        }
        if a + b <= 1 {
            continue;
        }
        let class = Generator::m(a as i32 - 1, b);
        scalars.push((class, 1));
        let (m, _) = Monomial::from_factors(scalars).expect("all factors even");
        out = out.checked_add(&Element::term(c.clone(), m).in_universe(p.universe().clone()))?;
    }
    Ok(out)
}

/// Rewrites `lambda = kappa_1 / 12` and `zeta = (m_{0,1} - m_{-1,2}) / 2`.
pub fn expand_hodge_and_zeta(class: &Element) -> Result<Element, BundleError> {
    let u = class.universe().clone();
    let sub = Substitution::new()
        .with(
            Generator::lambda(),
            Element::generator(Generator::kappa(1))
                .scale(&ratio(1, 12))
                .in_universe(u.clone()),
        )
        .with(
            Generator::zeta(),
            (Element::generator(Generator::m(0, 1)) - Element::generator(Generator::m(-1, 2)))
                .scale(&ratio(1, 2))
                .in_universe(u),
        );
    Ok(class.substitute(&sub)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;

    fn p(s: &str) -> Element {
        parse_element(s, &[]).unwrap()
    }

    #[test]
    fn pushforward_examples() {
        assert_eq!(formal_pushforward(&p("e*y")).unwrap(), p("m_{0,1}"));
        assert_eq!(formal_pushforward(&p("e^2")).unwrap(), p("kappa_1"));
        for low in ["1", "e", "y", "3 + 2*e - y"] {
            assert!(formal_pushforward(&p(low)).unwrap().is_zero());
        }
        assert_eq!(
            formal_pushforward(&p("y^2 + 1/2*e^3*y^2")).unwrap(),
            p("m_{-1,2} + 1/2*m_{2,2}")
        );
    }

    #[test]
    fn pushforward_domain_error() {
        assert!(matches!(
            formal_pushforward(&p("e*x")),
            Err(BundleError::Domain(_))
        ));
    }

    #[test]
    fn params_pass_through() {
        let r = Generator::param("r");
        let el = parse_element("r^2*e*y", &[r]).unwrap();
        assert_eq!(formal_pushforward(&el).unwrap().to_string(), "m_{0,1}*r^2");
    }

    #[test]
    fn hodge_rewrite() {
        assert_eq!(
            expand_hodge_and_zeta(&p("12*lambda + 2*zeta")).unwrap(),
            p("kappa_1 + m_{0,1} - m_{-1,2}")
        );
    }
}
