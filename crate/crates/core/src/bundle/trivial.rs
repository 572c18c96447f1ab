use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{expand_hodge_and_zeta, BundleError};
use crate::algebra::{Element, Generator, Monomial, Rational, Substitution, Symbol, Universe};

/// Element of `Q[x] (x) Q[sigma]/(sigma^2)`, the cohomology of
/// `CP^inf x Sigma_g`, where `sigma` is dual to the fundamental class of the
/// fiber. Stored as `base + sigma * fiber`, each a coefficient vector in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClass {
    base: Vec<Rational>,
    fiber: Vec<Rational>,
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = (0..a.len().max(b.len()))
        .map(|i| {
            let zero = Rational::zero();
            a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

impl FiberClass {
    pub fn zero() -> FiberClass {
        FiberClass {
            base: Vec::new(),
            fiber: Vec::new(),
        }
    }

    /// Pullback of a class from the base, given by its coefficients in `x`.
    pub fn from_base(mut coeffs: Vec<Rational>) -> FiberClass {
        trim(&mut coeffs);
        FiberClass {
            base: coeffs,
            fiber: Vec::new(),
        }
    }

    pub fn constant(c: Rational) -> FiberClass {
        FiberClass::from_base(vec![c])
    }

    pub fn x() -> FiberClass {
        FiberClass::from_base(vec![Rational::zero(), Rational::one()])
    }

    pub fn sigma() -> FiberClass {
        FiberClass {
            base: Vec::new(),
            fiber: vec![Rational::one()],
        }
    }

    pub fn add(&self, other: &FiberClass) -> FiberClass {
        FiberClass {
            base: poly_add(&self.base, &other.base),
            fiber: poly_add(&self.fiber, &other.fiber),
        }
    }

    pub fn scale(&self, c: &Rational) -> FiberClass {
        let s = |v: &[Rational]| {
            let mut out: Vec<Rational> = v.iter().map(|a| a * c).collect();
            trim(&mut out);
            out
        };
        FiberClass {
            base: s(&self.base),
            fiber: s(&self.fiber),
        }
    }

    pub fn mul(&self, other: &FiberClass) -> FiberClass {
        FiberClass {
            base: poly_mul(&self.base, &other.base),
            fiber: poly_add(
                &poly_mul(&self.base, &other.fiber),
                &poly_mul(&self.fiber, &other.base),
            ),
        }
    }

    pub fn pow(&self, n: u32) -> FiberClass {
        (0..n).fold(FiberClass::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    /// Integration over the fiber: the coefficient of `sigma`.
    pub fn pushforward(&self) -> Vec<Rational> {
        self.fiber.clone()
    }
}

/// The product family `Sigma_g x CP^inf -> CP^inf` with
/// `c_1(L) = k sigma + x` and `e = chi(Sigma_g) sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialFamilyModel {
    pub g: i64,
    pub k: i64,
    /// Highest power of `x` kept in results.
    pub truncation: u32,
}

impl TrivialFamilyModel {
    pub fn new(g: i64, k: i64, truncation: u32) -> Result<TrivialFamilyModel, BundleError> {
        let model = TrivialFamilyModel { g, k, truncation };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<(), BundleError> {
        if self.g < 2 {
            return Err(BundleError::InvalidModel(format!(
                "genus must be at least 2, got {}",
                self.g
            )));
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.g
    }

    pub fn euler_class(&self) -> FiberClass {
        FiberClass::sigma().scale(&Rational::from_integer(self.euler_characteristic().into()))
    }

    pub fn line_class(&self) -> FiberClass {
        FiberClass::sigma()
            .scale(&Rational::from_integer(self.k.into()))
            .add(&FiberClass::x())
    }

    /// `pi_!(e^{i+1} c_1(L)^j)` as coefficients in `x`. Not truncated.
    pub fn fiber_integral(&self, i: i32, j: u32) -> Vec<Rational> {
        assert!(i >= -1, "e^(i+1) needs i >= -1");
        self.euler_class()
            .pow((i + 1) as u32)
            .mul(&self.line_class().pow(j))
            .pushforward()
    }
}

pub(crate) fn base_universe() -> Universe {
    Universe::new("CP^inf")
}

/// The polynomial `sum c_n x^n` in the cohomology of the base.
pub fn base_polynomial(coeffs: &[Rational]) -> Element {
    let u = base_universe();
    let terms = coeffs.iter().enumerate().map(|(n, c)| {
        let m = if n == 0 {
            Monomial::one()
        } else {
            Monomial::from_factors([(Generator::x(), n as u32)]).expect("even").0
        };
        (m, c.clone())
    });
    Element::from_terms(u, terms)
}

/// Restricts a class in `kappa`, `m`, `lambda`, `zeta` to the product
/// family, returning a polynomial in `x`.
pub fn eval_trivial_family(
    model: &TrivialFamilyModel,
    class: &Element,
) -> Result<Element, BundleError> {
    model.validate()?;
    let expanded = expand_hodge_and_zeta(class)?;
    let mut sub = Substitution::new();
    for g in expanded.support() {
        let image = match *g.symbol() {
            Symbol::Kappa(i) => model.fiber_integral(i as i32, 0),
            Symbol::M(i, j) => model.fiber_integral(i, j),
            _ => {
                return Err(BundleError::Domain(format!(
                    "{g} is not a fiber-integral class"
                )))
            }
        };
        sub.insert(g, base_polynomial(&image));
    }
    let result = if expanded.support().is_empty() {
        expanded.in_universe(base_universe())
    } else {
        expanded.substitute(&sub)?
    };
    if let Some(top) = result.max_degree() {
        let needed = top / 2;
        if needed > model.truncation {
            return Err(BundleError::Truncation {
                needed,
                truncation: model.truncation,
            });
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_element, ratio};

    fn x_power(c: i64, n: u32) -> Element {
        let mut v = vec![Rational::zero(); n as usize + 1];
        v[n as usize] = Rational::from_integer(c.into());
        base_polynomial(&v)
    }

    fn eval(g: i64, k: i64, class: &str) -> Element {
        let model = TrivialFamilyModel::new(g, k, 10).unwrap();
        eval_trivial_family(&model, &parse_element(class, &[]).unwrap()).unwrap()
    }

    #[test]
    fn restriction_examples() {
        assert!(eval(4, 3, "kappa_1").is_zero());
        assert_eq!(eval(4, 3, "m_{0,1}"), x_power(-6, 1));
        assert_eq!(eval(4, 3, "m_{-1,2}"), x_power(6, 1));
        assert_eq!(eval(4, 3, "m_{0,2}"), x_power(-6, 2));
        assert_eq!(eval(4, 3, "m_{-1,3}"), x_power(9, 2));
        assert!(eval(4, 3, "m_{1,1}").is_zero());
    }

    #[test]
    fn hodge_and_zeta() {
        assert!(eval(6, 0, "lambda").is_zero());
        assert_eq!(eval(6, 0, "zeta"), x_power(-5, 1));
        assert_eq!(eval(6, 0, "m_{0,1}"), x_power(-10, 1));
        assert_eq!(eval(5, 2, "zeta"), x_power(1 - 5 - 2, 1));
    }

    #[test]
    fn products_and_constants() {
        assert_eq!(eval(2, 0, "m_{0,1}^2"), x_power(4, 2));
        assert_eq!(eval(2, 0, "3"), Element::integer(3).in_universe(base_universe()));
    }

    #[test]
    fn truncation_error() {
        let model = TrivialFamilyModel::new(3, 1, 1).unwrap();
        let class = parse_element("m_{0,2}", &[]).unwrap();
        assert!(matches!(
            eval_trivial_family(&model, &class),
            Err(BundleError::Truncation { needed: 2, truncation: 1 })
        ));
    }

    #[test]
    fn domain_error() {
        let model = TrivialFamilyModel::new(3, 1, 4).unwrap();
        let class = parse_element("e", &[]).unwrap();
        assert!(matches!(
            eval_trivial_family(&model, &class),
            Err(BundleError::Domain(_))
        ));
        assert!(TrivialFamilyModel::new(1, 0, 4).is_err());
    }

    #[test]
    fn sigma_squares_to_zero() {
        let s = FiberClass::sigma();
        assert_eq!(s.mul(&s), FiberClass::zero());
        let half = FiberClass::constant(ratio(1, 2));
        assert_eq!(half.mul(&s).pushforward(), vec![ratio(1, 2)]);
    }
}
