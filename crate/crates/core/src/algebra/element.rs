use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Generator, Parity, Rational};

/// Label of the ambient ring an element lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Universe(Arc<str>);

impl Universe {
    pub fn new(name: &str) -> Universe {
        Universe(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl Default for Universe {
    fn default() -> Self {
        Universe::new("H")
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A product of generators in canonical order. Odd generators occur with
/// exponent at most one.
///
/// Monomials are ordered lexicographically on exponent vectors, larger
/// exponents of earlier generators first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        for (a, b) in self.0.iter().zip(&other.0) {
            let ord = a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        other.0.len().cmp(&self.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn generator(g: Generator) -> Monomial {
        Monomial(vec![(g, 1)])
    }

    /// Builds a monomial from arbitrary factors. Returns the Koszul sign of
    /// the reordering, or `None` when an odd generator repeats.
    pub fn from_factors<I>(factors: I) -> Option<(Monomial, bool)>
    where
        I: IntoIterator<Item = (Generator, u32)>,
    {
        let mut acc = Monomial::one();
        let mut negative = false;
        for (g, e) in factors {
            for _ in 0..e {
                let (m, s) = acc.mul(&Monomial::generator(g.clone()))?;
                acc = m;
                negative ^= s;
            }
        }
        Some((acc, negative))
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(g, e)| g.degree() * e).sum()
    }

    pub fn exponent(&self, g: &Generator) -> u32 {
        self.0
            .iter()
            .find(|(h, _)| h == g)
            .map_or(0, |(_, e)| *e)
    }

    fn odd_count(&self) -> usize {
        self.0.iter().filter(|(g, _)| g.is_odd()).count()
    }

    /// Product with sign. `None` if the product vanishes (repeated odd
    /// generator); otherwise the flag is `true` when the sign is negative.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut negative = false;
        let (mut i, mut j) = (0, 0);
        // Odd factors of `self` not yet emitted: every odd factor of
        // `other` emitted now has to pass them.
        let mut odd_left_in_self = self.odd_count();
        while i < self.0.len() || j < other.0.len() {
            let take_left = match (self.0.get(i), other.0.get(j)) {
                (Some((a, _)), Some((b, _))) => match a.cmp(b) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => {
                        if a.is_odd() {
                            return None;
                        }
                        let e = self.0[i].1 + other.0[j].1;
                        out.push((a.clone(), e));
                        i += 1;
                        j += 1;
                        continue;
                    }
                },
                (Some(_), None) => true,
                (None, _) => false,
            };
            if take_left {
                if self.0[i].0.is_odd() {
                    odd_left_in_self -= 1;
                }
                out.push(self.0[i].clone());
                i += 1;
            } else {
                if other.0[j].0.is_odd() && odd_left_in_self % 2 == 1 {
                    negative = !negative;
                }
                out.push(other.0[j].clone());
                j += 1;
            }
        }
        Some((Monomial(out), negative))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, (g, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse element of a free graded-commutative algebra over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    universe: Universe,
    terms: BTreeMap<Monomial, Rational>,
}

impl Default for Element {
    fn default() -> Self {
        Element::zero()
    }
}

impl Element {
    pub fn zero() -> Element {
        Element::zero_in(Universe::default())
    }

    pub fn zero_in(universe: Universe) -> Element {
        Element {
            universe,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Element {
        Element::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Element {
        Element::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Element {
        Element::constant(Rational::from_integer(n.into()))
    }

    pub fn generator(g: Generator) -> Element {
        Element::term(Rational::one(), Monomial::generator(g))
    }

    pub fn term(c: Rational, m: Monomial) -> Element {
        let mut out = Element::zero();
        if !c.is_zero() {
            out.terms.insert(m, c);
        }
        out
    }

    pub fn from_terms<I>(universe: Universe, terms: I) -> Element
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut out = Element::zero_in(universe);
        for (m, c) in terms {
            out.accumulate(m, c);
        }
        out
    }

    pub fn in_universe(mut self, universe: Universe) -> Element {
        self.universe = universe;
        self
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of a single generator to the first power.
    pub fn coefficient_of(&self, g: &Generator) -> Rational {
        self.coefficient(&Monomial::generator(g.clone()))
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// Every generator that occurs in some term.
    pub fn support(&self) -> Vec<Generator> {
        let mut gens: Vec<Generator> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(g, _)| g.clone()))
            .collect();
        gens.sort();
        gens.dedup();
        gens
    }

    /// Degree if the element is homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Parity of a homogeneous-parity element; `None` when both parities
    /// occur. The zero element counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|m| Parity::of_degree(m.degree()));
        let first = match ps.next() {
            Some(p) => p,
            None => return Some(Parity::Even),
        };
        ps.all(|p| p == first).then_some(first)
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_universe(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.universe != other.universe {
            return Err(AlgebraError::UniverseMismatch {
                left: self.universe.name().to_owned(),
                right: other.universe.name().to_owned(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.mul_impl(other, None)
    }

    /// Product with every term above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Element, max_degree: u32) -> Result<Element, AlgebraError> {
        self.mul_impl(other, Some(max_degree))
    }

    fn mul_impl(&self, other: &Element, cap: Option<u32>) -> Result<Element, AlgebraError> {
        self.check_universe(other)?;
        let mut out = Element::zero_in(self.universe.clone());
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &other.terms {
                if cap.is_some_and(|cap| da + mb.degree() > cap) {
                    continue;
                }
                if let Some((m, negative)) = ma.mul(mb) {
                    let c = ca * cb;
                    out.accumulate(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut out = Element::one().in_universe(self.universe.clone());
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero_in(self.universe.clone());
        }
        Element {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> Element {
        Element {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of degree at most `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Element {
        Element {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Extends `assignment` to a ring homomorphism. Unassigned generators map
    /// to themselves. The result lives in the universe of the images (or
    /// of `self` when the assignment is empty).
    pub fn substitute(&self, assignment: &Substitution) -> Result<Element, AlgebraError> {
        let target = assignment
            .target_universe()?
            .unwrap_or_else(|| self.universe.clone());
        for (g, image) in &assignment.images {
            let expected = g.parity();
            if image.parity() != Some(expected) {
                return Err(AlgebraError::Parity(format!(
                    "{g} is {expected:?} but its image {image} is not"
                )));
            }
        }
        let mut out = Element::zero_in(target.clone());
        for (m, c) in &self.terms {
            let mut acc = Element::constant(c.clone()).in_universe(target.clone());
            for (g, e) in m.factors() {
                let factor = match assignment.images.get(g) {
                    Some(image) => image.clone(),
                    None => Element::generator(g.clone()).in_universe(target.clone()),
                };
                for _ in 0..*e {
                    acc = acc.checked_mul(&factor)?;
                }
            }
            out = out.checked_add(&acc)?;
        }
        Ok(out)
    }

    /// Integer coefficients, or an error naming the first non-integral term.
    pub fn integer_terms(&self) -> Result<Vec<(Monomial, BigInt)>, AlgebraError> {
        self.terms
            .iter()
            .map(|(m, c)| {
                if c.is_integer() {
                    Ok((m.clone(), c.to_integer()))
                } else {
                    Err(AlgebraError::NotIntegral(format!("{c}*{m}")))
                }
            })
            .collect()
    }

    /// Terms sorted for display: by degree, then canonical monomial order.
    pub(crate) fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.0.cmp(b.0)));
        terms
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.display_order().into_iter().enumerate() {
            let magnitude = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Images of generators under a ring homomorphism.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    images: BTreeMap<Generator, Element>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn with(mut self, g: Generator, image: Element) -> Substitution {
        self.images.insert(g, image);
        self
    }

    pub fn insert(&mut self, g: Generator, image: Element) {
        self.images.insert(g, image);
    }

    pub fn get(&self, g: &Generator) -> Option<&Element> {
        self.images.get(g)
    }

    fn target_universe(&self) -> Result<Option<Universe>, AlgebraError> {
        let mut images = self.images.values();
        let Some(first) = images.next() else {
            return Ok(None);
        };
        for other in images {
            first.check_universe(other)?;
        }
        Ok(Some(first.universe.clone()))
    }
}

impl FromIterator<(Generator, Element)> for Substitution {
    fn from_iter<T: IntoIterator<Item = (Generator, Element)>>(iter: T) -> Self {
        Substitution {
            images: iter.into_iter().collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Element> for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Element> for Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                (&self).$method(rhs)
            }
        }
        impl $trait<Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Element {
        Element::generator(g)
    }
}
