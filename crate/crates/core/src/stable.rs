//! Stable cohomology rings as free graded-commutative algebras: generator
//! tables, Hilbert series, and dimension-level collapse checks.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Element, Generator, DEFAULT_DEGREE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StableError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("generator {name} has odd degree {degree}")]
    Parity { name: String, degree: u32 },
    #[error("degree {requested} exceeds the budget of {budget}")]
    Truncation { requested: u32, budget: u32 },
    #[error("coefficient overflow in degree {0}")]
    Overflow(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AssocVariant {
    Boundary,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum RingSpec {
    /// `Q[kappa_i] (x) Q[m_{i,j} | i + j > 0, j > 0, i >= -1]`.
    Hol,
    /// Kappa classes, the degree-2 class `k m_{0,1} + (g-1) m_{-1,2}`, and
    /// `m_{i,j}` with `i + j > 1`.
    Pic { g: i64, k: i64 },
    GammaTildeBoundary,
    /// As the boundary ring without `(i, j) = (0, 1)`.
    GammaTildeClosed,
    AssocGraded { variant: AssocVariant },
}

impl RingSpec {
    pub fn label(&self) -> String {
        match self {
            RingSpec::Hol => "hol".into(),
            RingSpec::Pic { g, k } => format!("pic(g={g},k={k})"),
            RingSpec::GammaTildeBoundary => "gamma-tilde-boundary".into(),
            RingSpec::GammaTildeClosed => "gamma-tilde-closed".into(),
            RingSpec::AssocGraded { variant: AssocVariant::Boundary } => "assoc-graded-boundary".into(),
            RingSpec::AssocGraded { variant: AssocVariant::Closed } => "assoc-graded-closed".into(),
        }
    }

    fn validate(&self) -> Result<(), StableError> {
        if let RingSpec::Pic { g, k } = *self {
            if g == 1 && k == 0 {
                return Err(StableError::Domain(
                    "k m_{0,1} + (g-1) m_{-1,2} vanishes for (g, k) = (1, 0)".into(),
                ));
            }
        }
        Ok(())
    }

    /// Index predicate on `m`-type generators.
    fn has_m(&self, i: i32, j: u32) -> bool {
        let basic = j > 0 && i >= -1 && i + j as i32 > 0;
        match self {
            RingSpec::Pic { .. } => basic && i + j as i32 > 1,
            RingSpec::GammaTildeClosed
            | RingSpec::AssocGraded {
                variant: AssocVariant::Closed,
            } => basic && (i, j) != (0, 1),
            _ => basic,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorIndex {
    Kappa { i: u32 },
    /// `k m_{0,1} + (g-1) m_{-1,2}`.
    PicCombination,
    M { i: i32, j: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableGenerator {
    pub name: String,
    pub degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bidegree: Option<(u32, u32)>,
    pub index: GeneratorIndex,
}

pub fn tilde_name(i: i32, j: u32) -> String {
    format!("mtilde_{{{i},{j}}}")
}

/// Kawazumi's `mtilde_{i+1,j}` is `m_{i,j}`; returns the `m` index.
pub fn kawazumi_to_m(i: i32, j: u32) -> (i32, u32) {
    (i - 1, j)
}

pub fn m_to_kawazumi(i: i32, j: u32) -> (i32, u32) {
    (i + 1, j)
}

fn m_name(spec: &RingSpec, i: i32, j: u32) -> String {
    match spec {
        RingSpec::GammaTildeBoundary | RingSpec::GammaTildeClosed => tilde_name(i, j),
        RingSpec::AssocGraded { .. } => format!("x_{{{i},{j}}}"),
        _ => Generator::m(i, j).to_string(),
    }
}

fn pic_combination(g: i64, k: i64) -> Element {
    let m01 = Element::generator(Generator::m(0, 1));
    let m12 = Element::generator(Generator::m(-1, 2));
    m01.scale(&crate::algebra::ratio(k, 1)) + m12.scale(&crate::algebra::ratio(g - 1, 1))
}

fn check_budget(maxdeg: u32) -> Result<(), StableError> {
    if maxdeg > DEFAULT_DEGREE_CAP {
        return Err(StableError::Truncation {
            requested: maxdeg,
            budget: DEFAULT_DEGREE_CAP,
        });
    }
    Ok(())
}

/// Generators of degree at most `maxdeg`, by degree then index:
/// kappa, then the PIC combination, then `m_{i,j}` with `i` decreasing.
pub fn enumerate_generators(spec: &RingSpec, maxdeg: u32) -> Result<Vec<StableGenerator>, StableError> {
    spec.validate()?;
    check_budget(maxdeg)?;
    let assoc = matches!(spec, RingSpec::AssocGraded { .. });
    let mut out = Vec::new();
    for half in 1..=maxdeg / 2 {
        let degree = 2 * half;
        out.push(StableGenerator {
            name: Generator::kappa(half).to_string(),
            degree,
            bidegree: assoc.then_some((degree, 0)),
            index: GeneratorIndex::Kappa { i: half },
        });
        if let (RingSpec::Pic { g, k }, 1) = (spec, half) {
            out.push(StableGenerator {
                name: pic_combination(*g, *k).to_string(),
                degree,
                bidegree: None,
                index: GeneratorIndex::PicCombination,
            });
        }
        for i in (-1..half as i32).rev() {
            let j = (half as i32 - i) as u32;
            if spec.has_m(i, j) {
                out.push(StableGenerator {
                    name: m_name(spec, i, j),
                    degree,
                    bidegree: assoc.then_some(((2 * i + j as i32) as u32, j)),
                    index: GeneratorIndex::M { i, j },
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub maxdeg: u32,
    /// `coefficients[d]` is the dimension in degree `d`.
    pub coefficients: Vec<u128>,
}

impl HilbertSeries {
    pub fn coefficient(&self, d: u32) -> u128 {
        self.coefficients.get(d as usize).copied().unwrap_or(0)
    }

    /// Multiplies by `1 / (1 - t^2)`.
    pub fn divide_by_one_minus_t2(&self) -> Result<HilbertSeries, StableError> {
        let mut c = self.coefficients.clone();
        for d in 2..c.len() {
            c[d] = c[d].checked_add(c[d - 2]).ok_or(StableError::Overflow(d as u32))?;
        }
        Ok(HilbertSeries {
            maxdeg: self.maxdeg,
            coefficients: c,
        })
    }
}

/// `prod 1 / (1 - t^d)` over the given degrees, truncated at `maxdeg`.
pub fn series_from_degrees<'a, I>(generators: I, maxdeg: u32) -> Result<HilbertSeries, StableError>
where
    I: IntoIterator<Item = (&'a str, u32)>,
{
    let mut c = vec![0u128; maxdeg as usize + 1];
    c[0] = 1;
    for (name, degree) in generators {
        if degree % 2 == 1 {
            return Err(StableError::Parity {
                name: name.to_string(),
                degree,
            });
        }
        let d = degree as usize;
        for n in d..c.len() {
            c[n] = c[n].checked_add(c[n - d]).ok_or(StableError::Overflow(n as u32))?;
        }
    }
    Ok(HilbertSeries {
        maxdeg,
        coefficients: c,
    })
}

pub fn hilbert_series(spec: &RingSpec, maxdeg: u32) -> Result<HilbertSeries, StableError> {
    let gens = enumerate_generators(spec, maxdeg)?;
    series_from_degrees(gens.iter().map(|g| (g.name.as_str(), g.degree)), maxdeg)
}

/// Bivariate series truncated at total degree `p + q <= maxdeg`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedSeries {
    pub maxdeg: u32,
    /// `coefficients[p][q]`, with `p + q <= maxdeg`.
    pub coefficients: Vec<Vec<u128>>,
}

impl BigradedSeries {
    pub fn coefficient(&self, p: u32, q: u32) -> u128 {
        self.coefficients
            .get(p as usize)
            .and_then(|row| row.get(q as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Sets `s = t`.
    pub fn specialize(&self) -> Result<HilbertSeries, StableError> {
        let mut c = vec![0u128; self.maxdeg as usize + 1];
        for (p, row) in self.coefficients.iter().enumerate() {
            for (q, v) in row.iter().enumerate() {
                let n = p + q;
                c[n] = c[n].checked_add(*v).ok_or(StableError::Overflow(n as u32))?;
            }
        }
        Ok(HilbertSeries {
            maxdeg: self.maxdeg,
            coefficients: c,
        })
    }
}

pub fn bigraded_hilbert(variant: AssocVariant, maxdeg: u32) -> Result<BigradedSeries, StableError> {
    let gens = enumerate_generators(&RingSpec::AssocGraded { variant }, maxdeg)?;
    let n = maxdeg as usize;
    let mut c: Vec<Vec<u128>> = (0..=n).map(|p| vec![0; n - p + 1]).collect();
    c[0][0] = 1;
    for gen in &gens {
        let (dp, dq) = gen.bidegree.expect("associated graded generators are bigraded");
        let (dp, dq) = (dp as usize, dq as usize);
        for p in dp..=n {
            for q in dq..=n - p {
                let add = c[p - dp][q - dq];
                c[p][q] = c[p][q]
                    .checked_add(add)
                    .ok_or(StableError::Overflow((p + q) as u32))?;
            }
        }
    }
    Ok(BigradedSeries {
        maxdeg,
        coefficients: c,
    })
}

/// `floor(2g/3) - 1`.
pub fn stable_range(g: i64) -> Result<i64, StableError> {
    if g < 2 {
        return Err(StableError::Domain(format!("genus must be at least 2, got {g}")));
    }
    Ok(2 * g / 3 - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseRow {
    pub degree: u32,
    pub hol: u128,
    /// PIC series times `1 / (1 - t^2)`.
    pub pic_extended: u128,
    /// Closed series times `1 / (1 - t^2)`.
    pub closed_extended: u128,
    pub boundary_specialized: u128,
    pub closed: u128,
    pub closed_specialized: u128,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub g: i64,
    pub k: i64,
    pub maxdeg: u32,
    pub rows: Vec<CollapseRow>,
    pub pass: bool,
}

pub fn collapse_consistency(g: i64, k: i64, maxdeg: u32) -> Result<CollapseReport, StableError> {
    if g < 2 {
        return Err(StableError::Domain(format!("genus must be at least 2, got {g}")));
    }
    let hol = hilbert_series(&RingSpec::Hol, maxdeg)?;
    let pic = hilbert_series(&RingSpec::Pic { g, k }, maxdeg)?.divide_by_one_minus_t2()?;
    let closed = hilbert_series(&RingSpec::GammaTildeClosed, maxdeg)?;
    let closed_ext = closed.divide_by_one_minus_t2()?;
    let boundary_spec = bigraded_hilbert(AssocVariant::Boundary, maxdeg)?.specialize()?;
    let closed_spec = bigraded_hilbert(AssocVariant::Closed, maxdeg)?.specialize()?;
    let rows: Vec<CollapseRow> = (0..=maxdeg)
        .map(|d| {
            let h = hol.coefficient(d);
            let row = CollapseRow {
                degree: d,
                hol: h,
                pic_extended: pic.coefficient(d),
                closed_extended: closed_ext.coefficient(d),
                boundary_specialized: boundary_spec.coefficient(d),
                closed: closed.coefficient(d),
                closed_specialized: closed_spec.coefficient(d),
                pass: false,
            };
            CollapseRow {
                pass: row.pic_extended == h
                    && row.closed_extended == h
                    && row.boundary_specialized == h
                    && row.closed_specialized == row.closed,
                ..row
            }
        })
        .collect();
    let pass = rows.iter().all(|r| r.pass);
    Ok(CollapseReport {
        g,
        k,
        maxdeg,
        rows,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(spec: RingSpec, maxdeg: u32) -> Vec<String> {
        enumerate_generators(&spec, maxdeg)
            .unwrap()
            .into_iter()
            .map(|g| g.name)
            .collect()
    }

    #[test]
    fn low_degree_generators() {
        assert_eq!(names(RingSpec::Hol, 2), ["kappa_1", "m_{0,1}", "m_{-1,2}"]);
        assert_eq!(names(RingSpec::Pic { g: 6, k: 0 }, 2), ["kappa_1", "5*m_{-1,2}"]);
        assert_eq!(
            names(RingSpec::Pic { g: 4, k: 3 }, 2),
            ["kappa_1", "3*m_{0,1} + 3*m_{-1,2}"]
        );
        assert_eq!(
            names(RingSpec::Hol, 4)[3..],
            ["kappa_2", "m_{1,1}", "m_{0,2}", "m_{-1,3}"]
        );
        assert!(names(RingSpec::Hol, 0).is_empty());
        assert!(names(RingSpec::Hol, 1).is_empty());
        assert_eq!(
            names(RingSpec::GammaTildeClosed, 2),
            ["kappa_1", "mtilde_{-1,2}"]
        );
    }

    #[test]
    fn series_examples() {
        let hol = hilbert_series(&RingSpec::Hol, 4).unwrap();
        assert_eq!(hol.coefficients, [1, 0, 3, 0, 10]);
        let pic = hilbert_series(&RingSpec::Pic { g: 6, k: 0 }, 4).unwrap();
        assert_eq!(pic.coefficients, [1, 0, 2, 0, 7]);
    }

    #[test]
    fn bigraded_examples() {
        let b = bigraded_hilbert(AssocVariant::Boundary, 4).unwrap();
        assert_eq!(b.coefficient(2, 0), 1);
        assert_eq!(b.coefficient(1, 1), 1);
        let c = bigraded_hilbert(AssocVariant::Closed, 4).unwrap();
        assert_eq!(c.coefficient(1, 1), 0);
        assert_eq!(b.specialize().unwrap(), hilbert_series(&RingSpec::Hol, 4).unwrap());
    }

    #[test]
    fn ranges() {
        assert_eq!(stable_range(6).unwrap(), 3);
        assert_eq!(stable_range(2).unwrap(), 0);
        assert_eq!(stable_range(9).unwrap(), 5);
        assert!(stable_range(1).is_err());
    }

    #[test]
    fn collapse_small() {
        let r = collapse_consistency(6, 0, 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.rows[4].pic_extended, 10);
        assert!(collapse_consistency(6, 0, 0).unwrap().pass);
        assert!(matches!(
            collapse_consistency(6, 0, 65),
            Err(StableError::Truncation { .. })
        ));
    }

    #[test]
    fn parity_and_domain() {
        assert!(matches!(
            series_from_degrees([("u", 3)], 6),
            Err(StableError::Parity { .. })
        ));
        assert!(enumerate_generators(&RingSpec::Pic { g: 1, k: 0 }, 2).is_err());
    }

    #[test]
    fn aliases() {
        assert_eq!(kawazumi_to_m(1, 1), (0, 1));
        assert_eq!(m_to_kawazumi(-1, 2), (0, 2));
        assert_eq!(tilde_name(-1, 2), "mtilde_{-1,2}");
    }
}
