use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(degree: u32) -> Parity {
        if degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Structured name of a generator.
///
/// `Param` symbols are degree-zero scalars (such as the twisting exponents
/// of an index computation); every other consumer treats them as part of
/// the coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Kappa(u32),
    M(i32, u32),
    Lambda,
    Zeta,
    Eta,
    E,
    Y,
    X,
    U,
    Param(String),
    User(String),
}

impl Symbol {
    // kappa < m < named scalars < geometric symbols < params < user.
    // m(i, j) is ordered by degree, then by j.
    fn sort_key(&self) -> (u8, i64, i64, &str) {
        match self {
            Symbol::Kappa(i) => (0, *i as i64, 0, ""),
            Symbol::M(i, j) => (1, *i as i64 + *j as i64, *j as i64, ""),
            Symbol::Lambda => (2, 0, 0, ""),
            Symbol::Zeta => (2, 1, 0, ""),
            Symbol::Eta => (2, 2, 0, ""),
            Symbol::E => (3, 0, 0, "e"),
            Symbol::U => (3, 0, 0, "u"),
            Symbol::X => (3, 0, 0, "x"),
            Symbol::Y => (3, 0, 0, "y"),
            Symbol::Param(name) => (4, 0, 0, name),
            Symbol::User(name) => (5, 0, 0, name),
        }
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Kappa(i) => write!(f, "kappa_{i}"),
            Symbol::M(i, j) => write!(f, "m_{{{i},{j}}}"),
            Symbol::Lambda => f.write_str("lambda"),
            Symbol::Zeta => f.write_str("zeta"),
            Symbol::Eta => f.write_str("eta"),
            Symbol::E => f.write_str("e"),
            Symbol::Y => f.write_str("y"),
            Symbol::X => f.write_str("x"),
            Symbol::U => f.write_str("u"),
            Symbol::Param(name) | Symbol::User(name) => f.write_str(name),
        }
    }
}

/// A named homogeneous generator of a graded-commutative ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    symbol: Symbol,
    degree: u32,
    parity: Parity,
}

impl Generator {
    pub fn kappa(i: u32) -> Generator {
        Self::try_kappa(i).expect("kappa_i needs i >= 1")
    }

    pub fn try_kappa(i: u32) -> Result<Generator, AlgebraError> {
        if i == 0 {
            return Err(AlgebraError::InvalidGenerator(
                "kappa_0 is not a generator".into(),
            ));
        }
        Ok(Self::even(Symbol::Kappa(i), 2 * i))
    }

    /// `m_{i,j}`; `m_{i,0}` is returned as `kappa_i`.
    pub fn m(i: i32, j: u32) -> Generator {
        Self::try_m(i, j).expect("m_{i,j} needs i >= -1 and i + j >= 1")
    }

    pub fn try_m(i: i32, j: u32) -> Result<Generator, AlgebraError> {
        if i < -1 || i + (j as i32) < 1 {
            return Err(AlgebraError::InvalidGenerator(format!(
                "m_{{{i},{j}}} is outside i >= -1, i + j >= 1"
            )));
        }
        if j == 0 {
            return Self::try_kappa(i as u32);
        }
        Ok(Self::even(Symbol::M(i, j), 2 * (i + j as i32) as u32))
    }

    pub fn lambda() -> Generator {
        Self::even(Symbol::Lambda, 2)
    }

    pub fn zeta() -> Generator {
        Self::even(Symbol::Zeta, 2)
    }

    pub fn eta() -> Generator {
        Self::even(Symbol::Eta, 2)
    }

    /// Vertical Euler class.
    pub fn e() -> Generator {
        Self::even(Symbol::E, 2)
    }

    /// First Chern class of the line bundle.
    pub fn y() -> Generator {
        Self::even(Symbol::Y, 2)
    }

    /// Degree-2 generator of the base.
    pub fn x() -> Generator {
        Self::even(Symbol::X, 2)
    }

    pub fn u() -> Generator {
        Self::even(Symbol::U, 2)
    }

    /// Degree-zero scalar parameter.
    pub fn param(name: &str) -> Generator {
        Self::even(Symbol::Param(name.to_owned()), 0)
    }

    pub fn user(name: &str, degree: u32, parity: Parity) -> Result<Generator, AlgebraError> {
        if parity == Parity::Odd && degree.is_multiple_of(2) {
            return Err(AlgebraError::InvalidGenerator(format!(
                "odd generator {name} must have odd degree, got {degree}"
            )));
        }
        if !is_identifier(name) || Symbol::builtin_from_name(name).is_some() {
            return Err(AlgebraError::InvalidGenerator(format!(
                "{name:?} is not a free identifier"
            )));
        }
        Ok(Generator {
            symbol: Symbol::User(name.to_owned()),
            degree,
            parity,
        })
    }

    fn even(symbol: Symbol, degree: u32) -> Generator {
        Generator {
            symbol,
            degree,
            parity: Parity::Even,
        }
    }

    pub fn symbol(&self) -> &Symbol {
        &self.symbol
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    pub fn is_param(&self) -> bool {
        matches!(self.symbol, Symbol::Param(_))
    }

    /// Rebuilds a generator from its serialized parts, validating that
    /// built-in names carry their canonical degree.
    pub(crate) fn from_parts(
        name: &str,
        kind: GeneratorKind,
        degree: u32,
        parity: Parity,
    ) -> Result<Generator, AlgebraError> {
        let g = match kind {
            GeneratorKind::Builtin => Symbol::builtin_from_name(name)
                .ok_or_else(|| AlgebraError::Parse(format!("unknown built-in generator {name}")))??,
            GeneratorKind::Param => {
                if !is_identifier(name) {
                    return Err(AlgebraError::Parse(format!("bad parameter name {name:?}")));
                }
                Generator::param(name)
            }
            GeneratorKind::User => Generator::user(name, degree, parity)?,
        };
        if g.degree != degree || g.parity != parity {
            return Err(AlgebraError::Parse(format!(
                "generator {name} declared with degree {degree}, expected {}",
                g.degree
            )));
        }
        Ok(g)
    }

    pub(crate) fn kind(&self) -> GeneratorKind {
        match self.symbol {
            Symbol::Param(_) => GeneratorKind::Param,
            Symbol::User(_) => GeneratorKind::User,
            _ => GeneratorKind::Builtin,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub(crate) enum GeneratorKind {
    Builtin,
    Param,
    User,
}

impl Symbol {
    /// Parses the textual name of a built-in generator. Returns `None` for
    /// names outside the built-in grammar, `Some(Err)` for malformed
    /// indices of a built-in family.
    pub(crate) fn builtin_from_name(name: &str) -> Option<Result<Generator, AlgebraError>> {
        match name {
            "lambda" => return Some(Ok(Generator::lambda())),
            "zeta" => return Some(Ok(Generator::zeta())),
            "eta" => return Some(Ok(Generator::eta())),
            "e" => return Some(Ok(Generator::e())),
            "y" => return Some(Ok(Generator::y())),
            "x" => return Some(Ok(Generator::x())),
            "u" => return Some(Ok(Generator::u())),
            _ => {}
        }
        if let Some(rest) = name.strip_prefix("kappa_") {
            let digits = rest
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .unwrap_or(rest);
            return Some(
                digits
                    .parse::<u32>()
                    .map_err(|_| AlgebraError::Parse(format!("bad kappa index in {name}")))
                    .and_then(Generator::try_kappa),
            );
        }
        if let Some(rest) = name.strip_prefix("m_") {
            let inner = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}'));
            let parsed = inner.and_then(|inner| {
                let (i, j) = inner.split_once(',')?;
                Some((i.trim().parse::<i32>().ok()?, j.trim().parse::<u32>().ok()?))
            });
            return Some(match parsed {
                Some((i, j)) => Generator::try_m(i, j),
                None => Err(AlgebraError::Parse(format!(
                    "bad m index in {name}, expected m_{{i,j}}"
                ))),
            });
        }
        None
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbol
            .cmp(&other.symbol)
            .then(self.degree.cmp(&other.degree))
            .then(self.parity.cmp(&other.parity))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbol.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_degrees() {
        assert_eq!(Generator::kappa(3).degree(), 6);
        assert_eq!(Generator::m(-1, 2).degree(), 2);
        assert_eq!(Generator::m(1, 1).degree(), 4);
        assert_eq!(Generator::m(2, 0), Generator::kappa(2));
        for g in [Generator::lambda(), Generator::zeta(), Generator::e(), Generator::x()] {
            assert_eq!(g.degree(), 2);
            assert_eq!(g.parity(), Parity::Even);
        }
    }

    #[test]
    fn invalid_indices() {
        assert!(Generator::try_kappa(0).is_err());
        assert!(Generator::try_m(-2, 5).is_err());
        assert!(Generator::try_m(-1, 1).is_err());
        assert!(Generator::user("a", 2, Parity::Odd).is_err());
        assert!(Generator::user("lambda", 2, Parity::Even).is_err());
        assert!(Generator::user("a", 3, Parity::Odd).is_ok());
    }

    #[test]
    fn canonical_order() {
        let mut gens = [Generator::u(),
            Generator::m(-1, 2),
            Generator::lambda(),
            Generator::m(0, 1),
            Generator::kappa(2),
            Generator::kappa(1),
            Generator::e()];
        gens.sort();
        let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(
            names,
            ["kappa_1", "kappa_2", "m_{0,1}", "m_{-1,2}", "lambda", "e", "u"]
        );
    }

    #[test]
    fn names_round_trip() {
        for g in [Generator::kappa(12), Generator::m(-1, 3), Generator::zeta()] {
            let back = Symbol::builtin_from_name(&g.to_string()).unwrap().unwrap();
            assert_eq!(back, g);
        }
        assert!(Symbol::builtin_from_name("m_{0,0}").unwrap().is_err());
        assert!(Symbol::builtin_from_name("foo").is_none());
    }
}
