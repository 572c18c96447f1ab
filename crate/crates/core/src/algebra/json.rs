use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::generator::GeneratorKind;
use super::{AlgebraError, Element, Generator, Monomial, Parity, Rational, Universe};

pub const ELEMENT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub name: String,
    pub kind: GeneratorKindRecord,
    pub degree: u32,
    pub parity: Parity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKindRecord {
    Builtin,
    Param,
    User,
}

/// A term as (exponent vector, numerator, denominator). Integers are decimal
/// strings so that arbitrary precision survives any JSON reader.
pub type TermRecord = (Vec<u32>, String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub schema_version: u32,
    pub universe: String,
    pub generators: Vec<GeneratorRecord>,
    pub terms: Vec<TermRecord>,
}

impl From<GeneratorKind> for GeneratorKindRecord {
    fn from(k: GeneratorKind) -> Self {
        match k {
            GeneratorKind::Builtin => GeneratorKindRecord::Builtin,
            GeneratorKind::Param => GeneratorKindRecord::Param,
            GeneratorKind::User => GeneratorKindRecord::User,
        }
    }
}

impl From<GeneratorKindRecord> for GeneratorKind {
    fn from(k: GeneratorKindRecord) -> Self {
        match k {
            GeneratorKindRecord::Builtin => GeneratorKind::Builtin,
            GeneratorKindRecord::Param => GeneratorKind::Param,
            GeneratorKindRecord::User => GeneratorKind::User,
        }
    }
}

impl Element {
    pub fn to_record(&self) -> ElementRecord {
        let generators = self.support();
        let terms = self
            .display_order()
            .into_iter()
            .map(|(m, c)| {
                let exps = generators.iter().map(|g| m.exponent(g)).collect();
                (exps, c.numer().to_string(), c.denom().to_string())
            })
            .collect();
        ElementRecord {
            schema_version: ELEMENT_SCHEMA_VERSION,
            universe: self.universe().name().to_owned(),
            generators: generators
                .iter()
                .map(|g| GeneratorRecord {
                    name: g.to_string(),
                    kind: g.kind().into(),
                    degree: g.degree(),
                    parity: g.parity(),
                })
                .collect(),
            terms,
        }
    }

    pub fn from_record(record: &ElementRecord) -> Result<Element, AlgebraError> {
        if record.schema_version != ELEMENT_SCHEMA_VERSION {
            return Err(AlgebraError::Parse(format!(
                "unsupported element schema_version {}",
                record.schema_version
            )));
        }
        let generators = record
            .generators
            .iter()
            .map(|g| Generator::from_parts(&g.name, g.kind.into(), g.degree, g.parity))
            .collect::<Result<Vec<_>, _>>()?;
        let mut terms = Vec::with_capacity(record.terms.len());
        for (exps, num, den) in &record.terms {
            if exps.len() != generators.len() {
                return Err(AlgebraError::Parse(format!(
                    "exponent vector of length {} for {} generators",
                    exps.len(),
                    generators.len()
                )));
            }
            let parse = |s: &str| {
                s.parse::<BigInt>()
                    .map_err(|_| AlgebraError::Parse(format!("bad integer {s:?}")))
            };
            let (num, den) = (parse(num)?, parse(den)?);
            if den == BigInt::from(0) {
                return Err(AlgebraError::Parse("zero denominator".into()));
            }
            let factors = generators.iter().cloned().zip(exps.iter().copied());
            let (m, negative) = Monomial::from_factors(factors).ok_or_else(|| {
                AlgebraError::Parse("odd generator with exponent above one".into())
            })?;
            let c = Rational::new(num, den);
            terms.push((m, if negative { -c } else { c }));
        }
        Ok(Element::from_terms(Universe::new(&record.universe), terms))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("element records serialize")
    }

    pub fn from_json(text: &str) -> Result<Element, AlgebraError> {
        let record: ElementRecord =
            serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        Element::from_record(&record)
    }
}
