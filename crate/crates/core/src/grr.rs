//! Truncated Todd and exponential series, and the Chern character of the
//! index bundle of the fiberwise Dolbeault operator twisted by
//! `T^{(x) r} (x) L^{(x) s}`:
//!
//! ```text
//! ch(ind) = pi_!( Td(e) exp(r e) exp(s y) )
//! ```
//!
//! `r` and `s` may be numbers or the degree-zero parameters `r`, `s`, so the
//! expansion can be checked as a polynomial identity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::algebra::{
    ratio, AlgebraError, Element, Generator, Monomial, Rational, Symbol, DEFAULT_DEGREE_CAP,
};
use crate::bundle::{formal_pushforward, BundleError};
use crate::lattice::{verify_free_basis, FreeBasisCertificate, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrrError {
    #[error("degree {requested} exceeds the series budget of {budget}")]
    Truncation { requested: u32, budget: u32 },
    #[error("non-integral coordinate at (r, s) = ({r}, {s}): {coordinates}")]
    Integrality { r: i64, s: i64, coordinates: String },
    #[error("internal consistency: {0}")]
    InternalConsistency(String),
    #[error("{0} is not a degree-2 class in lambda, kappa_1, zeta, m_{{0,1}}, m_{{-1,2}}")]
    NotDegreeTwo(String),
    #[error(transparent)]
    Bundle(#[from] BundleError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Bivariate power series in `e` and `y`, truncated at total order `order`.
/// Coefficients may involve degree-zero parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries2 {
    order: u32,
    body: Element,
}

impl PowerSeries2 {
    pub fn one(order: u32) -> PowerSeries2 {
        PowerSeries2 {
            order,
            body: Element::one(),
        }
    }

    /// Truncates `body`, a polynomial in `e`, `y` and parameters.
    pub fn from_element(body: &Element, order: u32) -> PowerSeries2 {
        PowerSeries2 {
            order,
            body: body.truncate(2 * order),
        }
    }

    /// `exp(c * v)` for a parameter polynomial `c` and `v` one of `e`, `y`.
    pub fn exp_linear(c: &Element, v: Generator, order: u32) -> PowerSeries2 {
        let cv = c * Element::generator(v);
        let mut term = Element::one();
        let mut sum = Element::one();
        for n in 1..=order {
            term = (&term * &cv).scale(&ratio(1, n as i64));
            sum = &sum + &term;
        }
        PowerSeries2 { order, body: sum }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn element(&self) -> &Element {
        &self.body
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &PowerSeries2) -> Result<PowerSeries2, AlgebraError> {
        let order = self.order.min(other.order);
        Ok(PowerSeries2 {
            order,
            body: self.body.mul_truncated(&other.body, 2 * order)?,
        })
    }

    /// Coefficient of `e^a y^b`, a polynomial in the parameters.
    pub fn coefficient(&self, a: u32, b: u32) -> Element {
        let target = 2 * (a + b);
        let mut out = Element::zero();
        for (mono, c) in self.body.homogeneous_part(target).terms() {
            if mono.exponent(&Generator::e()) == a && mono.exponent(&Generator::y()) == b {
                let params = mono
                    .factors()
                    .iter()
                    .filter(|(g, _)| g.is_param())
                    .cloned();
                let (m, _) = Monomial::from_factors(params).expect("even");
                out = out + Element::term(c.clone(), m);
            }
        }
        out
    }
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = +1/2` (Akiyama-Tanigawa).
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut row: Vec<Rational> = Vec::with_capacity(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(ratio(1, m as i64 + 1));
        for j in (1..=m).rev() {
            let v = (&row[j - 1] - &row[j]) * Rational::from_integer((j as i64).into());
            row[j - 1] = v;
        }
        out.push(row[0].clone());
    }
    out
}

/// `e / (1 - exp(-e))` up to `e^order`; the coefficient of `e^n` is
/// `B_n / n!`.
pub fn todd_series(order: u32) -> PowerSeries2 {
    let bernoulli = bernoulli_numbers(order as usize);
    let mut factorial = BigInt::one();
    let mut body = Element::zero();
    for (n, b) in bernoulli.iter().enumerate() {
        if n > 0 {
            factorial *= n;
        }
        let c = b / Rational::from_integer(factorial.clone());
        body = body + Element::generator(Generator::e()).pow(n as u32).scale(&c);
    }
    PowerSeries2 { order, body }
}

/// Graded pieces of the pushed-forward index character, keyed by degree.
/// Pieces of degree at most zero are not modeled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexExpansion {
    pieces: BTreeMap<u32, Element>,
}

impl IndexExpansion {
    pub fn piece(&self, degree: u32) -> Element {
        self.pieces.get(&degree).cloned().unwrap_or_default()
    }

    pub fn pieces(&self) -> impl Iterator<Item = (u32, &Element)> {
        self.pieces.iter().map(|(d, e)| (*d, e))
    }
}

/// Rewrites `kappa_1` as `12 lambda`.
fn kappa1_to_lambda(el: &Element) -> Result<Element, AlgebraError> {
    let sub = crate::algebra::Substitution::new().with(
        Generator::kappa(1),
        Element::generator(Generator::lambda()).scale(&ratio(12, 1)),
    );
    el.substitute(&sub)
}

pub fn r_param() -> Element {
    Element::generator(Generator::param("r"))
}

pub fn s_param() -> Element {
    Element::generator(Generator::param("s"))
}

pub fn index_chern_character(
    r: &Element,
    s: &Element,
    maxdeg: u32,
) -> Result<IndexExpansion, GrrError> {
    // A pushforward of degree d needs the integrand up to degree d + 2.
    if maxdeg + 2 > DEFAULT_DEGREE_CAP {
        return Err(GrrError::Truncation {
            requested: maxdeg,
            budget: DEFAULT_DEGREE_CAP - 2,
        });
    }
    let order = maxdeg / 2 + 1;
    let integrand = todd_series(order)
        .mul(&PowerSeries2::exp_linear(r, Generator::e(), order))?
        .mul(&PowerSeries2::exp_linear(s, Generator::y(), order))?;
    let pushed = kappa1_to_lambda(&formal_pushforward(integrand.element())?)?;
    let pieces = pushed
        .degrees()
        .into_iter()
        .filter(|&d| d > 0 && d <= maxdeg)
        .map(|d| (d, pushed.homogeneous_part(d)))
        .collect();
    Ok(IndexExpansion { pieces })
}

pub fn degree2_piece(r: &Element, s: &Element) -> Result<Element, GrrError> {
    Ok(index_chern_character(r, s, 2)?.piece(2))
}

/// Closed form of the degree-2 piece,
///
/// ```text
/// (6r^2 + 6r + 1) lambda + 1/2 s^2 (m_{0,1} + m_{-1,2}) + (rs + 1/2 (s - s^2)) m_{0,1}
/// ```
///
/// read off from the quadratic part
/// `(1/12 + r/2 + r^2/2) e^2 + (s/2 + rs) e y + (s^2/2) y^2` of the integrand.
pub fn degree2_closed_form(r: &Element, s: &Element) -> Element {
    let lambda = Element::generator(Generator::lambda());
    let m01 = Element::generator(Generator::m(0, 1));
    let m12 = Element::generator(Generator::m(-1, 2));
    let r2 = r * r;
    let s2 = s * s;
    let rs = r * s;
    let a = r2.scale(&ratio(6, 1)) + r.scale(&ratio(6, 1)) + Element::one();
    let b = s2.scale(&ratio(1, 2));
    let c = rs + (s - &s2).scale(&ratio(1, 2));
    a * lambda + b * (&m01 + m12) + c * m01
}

/// Coordinates of a degree-2 class in the chart `(lambda, zeta, m_{0,1})`,
/// each a polynomial in the parameters. Uses `kappa_1 = 12 lambda` and
/// `m_{-1,2} = m_{0,1} - 2 zeta`.
pub fn chart_coordinates(class: &Element) -> Result<[Element; 3], GrrError> {
    let mut coords = [Element::zero(), Element::zero(), Element::zero()];
    for (mono, c) in class.terms() {
        let mut params = Vec::new();
        let mut class_gen = None;
        for (g, e) in mono.factors() {
            if g.is_param() {
                params.push((g.clone(), *e));
            } else if class_gen.is_none() && *e == 1 {
                class_gen = Some(g.clone());
            } else {
                return Err(GrrError::NotDegreeTwo(mono.to_string()));
            }
        }
        let (pm, _) = Monomial::from_factors(params).expect("even");
        let scalar = Element::term(c.clone(), pm);
        let Some(g) = class_gen else {
            return Err(GrrError::NotDegreeTwo(mono.to_string()));
        };
        let twelve = ratio(12, 1);
        let two = ratio(2, 1);
        match *g.symbol() {
            Symbol::Lambda => coords[0] = &coords[0] + &scalar,
            Symbol::Kappa(1) => coords[0] = &coords[0] + scalar.scale(&twelve),
            Symbol::Zeta => coords[1] = &coords[1] + &scalar,
            Symbol::M(0, 1) => coords[2] = &coords[2] + &scalar,
            Symbol::M(-1, 2) => {
                coords[1] = &coords[1] - scalar.scale(&two);
                coords[2] = &coords[2] + &scalar;
            }
            _ => return Err(GrrError::NotDegreeTwo(mono.to_string())),
        }
    }
    Ok(coords)
}

fn numeric(coords: &[Element; 3]) -> Option<[Rational; 3]> {
    let one = |e: &Element| {
        (e.support().is_empty()).then(|| e.constant_term())
    };
    Some([one(&coords[0])?, one(&coords[1])?, one(&coords[2])?])
}

/// Integer coordinates `(lambda, zeta, m_{0,1})` of the degree-2 index
/// piece at integer `(r, s)`.
pub fn integrality_witness(r: i64, s: i64) -> Result<[BigInt; 3], GrrError> {
    let piece = degree2_piece(&Element::integer(r), &Element::integer(s))?;
    let coords = numeric(&chart_coordinates(&piece)?)
        .ok_or_else(|| GrrError::InternalConsistency("parameters left in a numeric expansion".into()))?;
    if coords.iter().all(Rational::is_integer) {
        Ok(coords.map(|c| c.to_integer()))
    } else {
        let text: Vec<String> = coords.iter().map(ToString::to_string).collect();
        Err(GrrError::Integrality {
            r,
            s,
            coordinates: format!("({})", text.join(", ")),
        })
    }
}

/// A degree-2 class realized as the first Chern class of an index bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub r: i64,
    pub s: i64,
    pub class: Element,
    /// Chart `(lambda, zeta, m_{0,1})`.
    pub coordinates: [BigInt; 3],
}

pub const REALIZATION_PARAMETERS: [(i64, i64); 3] = [(0, 0), (0, 1), (1, 1)];

/// Index classes at `(r, s) = (0,0), (0,1), (1,1)`, each recomputed from the
/// series and cross-checked against the closed form, together with the
/// certificate that they span `Z^3`.
pub fn index_realizations() -> Result<(Vec<Realization>, FreeBasisCertificate), GrrError> {
    let mut out = Vec::new();
    for (r, s) in REALIZATION_PARAMETERS {
        let (re, se) = (Element::integer(r), Element::integer(s));
        let class = degree2_piece(&re, &se)?;
        let closed = kappa1_to_lambda(&degree2_closed_form(&re, &se))?;
        if class != closed {
            return Err(GrrError::InternalConsistency(format!(
                "series gives {class} but the closed form gives {closed} at ({r}, {s})"
            )));
        }
        let coordinates = integrality_witness(r, s)?;
        out.push(Realization {
            r,
            s,
            class,
            coordinates,
        });
    }
    let rows: Vec<Vec<BigInt>> = out.iter().map(|x| x.coordinates.to_vec()).collect();
    let certificate = verify_free_basis(&rows)?;
    if !certificate.pass {
        return Err(GrrError::InternalConsistency(format!(
            "realized classes span an index-{} sublattice",
            certificate.determinant
        )));
    }
    Ok((out, certificate))
}

impl std::fmt::Display for Realization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(r, s) = ({}, {}): {}", self.r, self.s, self.class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;
    use num_traits::Zero;

    /// Series-division oracle: invert `(1 - exp(-x)) / x = sum (-1)^n x^n / (n+1)!`.
    fn todd_by_division(n: usize) -> Vec<Rational> {
        let mut fact = vec![BigInt::one()];
        for i in 1..=n + 1 {
            let next = &fact[i - 1] * BigInt::from(i);
            fact.push(next);
        }
        let a: Vec<Rational> = (0..=n)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                Rational::new(BigInt::from(sign), fact[i + 1].clone())
            })
            .collect();
        let mut q = vec![Rational::one()];
        for k in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += &a[i] * &q[k - i];
            }
            q.push(-acc);
        }
        q
    }

    fn todd_coefficient(series: &PowerSeries2, n: u32) -> Rational {
        series.coefficient(n, 0).constant_term()
    }

    #[test]
    fn todd_low_order() {
        let t = todd_series(4);
        assert_eq!(todd_coefficient(&t, 0), ratio(1, 1));
        assert_eq!(todd_coefficient(&t, 1), ratio(1, 2));
        assert_eq!(todd_coefficient(&t, 2), ratio(1, 12));
        assert_eq!(todd_coefficient(&t, 3), ratio(0, 1));
        assert_eq!(todd_coefficient(&t, 4), ratio(-1, 720));
    }

    #[test]
    fn todd_matches_division_oracle() {
        for n in 0..=12u32 {
            let t = todd_series(n);
            let oracle = todd_by_division(n as usize);
            for (i, expected) in oracle.iter().enumerate() {
                assert_eq!(&todd_coefficient(&t, i as u32), expected, "order {n}, e^{i}");
            }
        }
    }

    #[test]
    fn degree_zero_convention() {
        let exp = index_chern_character(&Element::integer(1), &Element::integer(0), 4).unwrap();
        assert!(exp.piece(0).is_zero());
        assert_eq!(exp.pieces().map(|(d, _)| d).collect::<Vec<_>>(), vec![2, 4]);
        // The e^3 Todd coefficient vanishes.
        let flat = index_chern_character(&Element::integer(0), &Element::integer(0), 4).unwrap();
        assert!(flat.piece(4).is_zero());
    }

    #[test]
    fn degree2_values() {
        // Quadratic part of Td(e) e^{re} e^{sy} pushed forward by hand:
        // (0,0): e^2/12 -> kappa_1/12 = lambda.
        // (0,1): e^2/12 + ey/2 + y^2/2 -> lambda + m01/2 + m-12/2.
        // (1,1): (1/12+1) e^2 + (3/2) ey + y^2/2 -> 13 lambda + 3/2 m01 + 1/2 m-12.
        let p = |r, s| degree2_piece(&Element::integer(r), &Element::integer(s)).unwrap();
        let q = |s: &str| parse_element(s, &[]).unwrap();
        assert_eq!(p(0, 0), q("lambda"));
        assert_eq!(p(0, 1), q("1/2*m_{0,1} + 1/2*m_{-1,2} + lambda"));
        assert_eq!(p(1, 1), q("3/2*m_{0,1} + 1/2*m_{-1,2} + 13*lambda"));
    }

    #[test]
    fn symbolic_identity() {
        let piece = degree2_piece(&r_param(), &s_param()).unwrap();
        let closed = kappa1_to_lambda(&degree2_closed_form(&r_param(), &s_param())).unwrap();
        assert_eq!(piece, closed);
        let [l, z, m] = chart_coordinates(&piece).unwrap();
        let params = [Generator::param("r"), Generator::param("s")];
        let q = |s: &str| parse_element(s, &params).unwrap();
        assert_eq!(l, q("6*r^2 + 6*r + 1"));
        assert_eq!(z, q("-s^2"));
        assert_eq!(m, q("r*s + 1/2*s + 1/2*s^2"));
    }

    #[test]
    fn witnesses() {
        let w = |r, s| integrality_witness(r, s).unwrap().map(|x| i64::try_from(x).unwrap());
        assert_eq!(w(0, 0), [1, 0, 0]);
        assert_eq!(w(0, 1), [1, -1, 1]);
        assert_eq!(w(1, 1), [13, -1, 2]);
        for r in -10..=10 {
            for s in -10..=10 {
                integrality_witness(r, s).unwrap();
            }
        }
    }

    #[test]
    fn realizations_span() {
        let (rs, cert) = index_realizations().unwrap();
        assert_eq!(rs.len(), 3);
        assert!(cert.pass);
        assert_eq!(cert.determinant, BigInt::from(-1));
    }

    #[test]
    fn budget() {
        let zero = Element::integer(0);
        assert!(matches!(
            index_chern_character(&zero, &zero, 63),
            Err(GrrError::Truncation { .. })
        ));
        assert!(index_chern_character(&zero, &zero, 8).is_ok());
    }

    #[test]
    fn chart_rejects_other_classes() {
        let q = |s: &str| parse_element(s, &[]).unwrap();
        assert!(chart_coordinates(&q("kappa_2")).is_err());
        assert!(chart_coordinates(&q("1")).is_err());
    }
}
