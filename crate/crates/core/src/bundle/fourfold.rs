use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{expand_hodge_and_zeta, BundleError};
use crate::algebra::{Element, Generator, Rational, Symbol};

/// A surface bundle over `S^2` whose total space is a closed oriented
/// 4-manifold, described by its intersection form on `H^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourManifoldModel {
    /// Labels of the chosen basis of `H^2`.
    pub basis: Vec<String>,
    /// Cup-product pairing `<a b, [E]>` on the basis.
    pub intersection: Vec<Vec<i64>>,
    /// Coordinates of the vertical Euler class.
    pub euler: Vec<i64>,
    /// Coordinates of `c_1(L)`.
    pub line: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber: Option<FiberConstraint>,
}

/// Poincare dual of the fiber, with the Euler characteristic the vertical
/// Euler class must pair to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberConstraint {
    pub class: Vec<i64>,
    pub euler_characteristic: i64,
}

impl FourManifoldModel {
    pub fn new(
        basis: Vec<String>,
        intersection: Vec<Vec<i64>>,
        euler: Vec<i64>,
        line: Vec<i64>,
        fiber: Option<FiberConstraint>,
    ) -> Result<FourManifoldModel, BundleError> {
        let model = FourManifoldModel {
            basis,
            intersection,
            euler,
            line,
            fiber,
        };
        model.validate()?;
        Ok(model)
    }

    /// The Hirzebruch surface `H_1` as an `S^2`-bundle over `S^2`.
    ///
    /// `(x, y)` is the basis dual to (fiber, section at infinity) under the
    /// Kronecker pairing. Those homology classes meet with matrix
    /// `[[0, 1], [1, 1]]`, so the cup pairing on `(x, y)` is its inverse
    /// `[[-1, 1], [1, 0]]`. The vertical tangent bundle has degree 2 on the
    /// fiber and restricts to the normal bundle of the section, so
    /// `e = 2x + y`. The line bundle is the one of fiber degree one,
    /// `c_1(L) = x`; the fiber is Poincare dual to `y`.
    pub fn hirzebruch_h1() -> FourManifoldModel {
        FourManifoldModel::new(
            vec!["x".into(), "y".into()],
            vec![vec![-1, 1], vec![1, 0]],
            vec![2, 1],
            vec![1, 0],
            Some(FiberConstraint {
                class: vec![0, 1],
                euler_characteristic: 2,
            }),
        )
        .expect("valid built-in model")
    }

    pub fn validate(&self) -> Result<(), BundleError> {
        let n = self.basis.len();
        let bad = |msg: String| Err(BundleError::InvalidModel(msg));
        if self.intersection.len() != n || self.intersection.iter().any(|r| r.len() != n) {
            return bad(format!("intersection matrix must be {n}x{n}"));
        }
        for i in 0..n {
            for j in 0..i {
                if self.intersection[i][j] != self.intersection[j][i] {
                    return bad(format!("intersection matrix is not symmetric at ({i},{j})"));
                }
            }
        }
        if self.euler.len() != n || self.line.len() != n {
            return bad(format!("euler and line vectors must have length {n}"));
        }
        if let Some(fiber) = &self.fiber {
            if fiber.class.len() != n {
                return bad(format!("fiber class must have length {n}"));
            }
            let pairing = self.pairing(&self.euler, &fiber.class);
            if pairing != BigInt::from(fiber.euler_characteristic) {
                return bad(format!(
                    "euler class pairs to {pairing} with the fiber, expected {}",
                    fiber.euler_characteristic
                ));
            }
        }
        Ok(())
    }

    /// `a^T G b`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> BigInt {
        let mut total = BigInt::from(0);
        for (i, row) in self.intersection.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                total += BigInt::from(a[i]) * BigInt::from(*g) * BigInt::from(b[j]);
            }
        }
        total
    }

    pub fn kappa1(&self) -> BigInt {
        self.pairing(&self.euler, &self.euler)
    }

    pub fn m01(&self) -> BigInt {
        self.pairing(&self.euler, &self.line)
    }

    pub fn m_minus1_2(&self) -> BigInt {
        self.pairing(&self.line, &self.line)
    }

    pub fn from_json(text: &str) -> Result<FourManifoldModel, BundleError> {
        let model: FourManifoldModel = serde_json::from_str(text)
            .map_err(|e| BundleError::InvalidModel(format!("bad model JSON: {e}")))?;
        model.validate()?;
        Ok(model)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("models serialize")
    }
}

/// Evaluates a degree-2 class in `kappa_1`, `m_{0,1}`, `m_{-1,2}`,
/// `lambda`, `zeta` on the fundamental class of the base.
pub fn eval_fourmanifold(model: &FourManifoldModel, class: &Element) -> Result<Rational, BundleError> {
    model.validate()?;
    let kappa1 = model.kappa1();
    if class.support().contains(&Generator::lambda()) && !kappa1.is_multiple_of(&BigInt::from(12)) {
        return Err(BundleError::NonIntegralHodge {
            kappa1: kappa1.to_string(),
        });
    }
    let expanded = expand_hodge_and_zeta(class)?;
    let mut total = Rational::from_integer(0.into());
    for (mono, c) in expanded.terms() {
        if mono.degree() != 2 {
            return Err(BundleError::Degree(format!(
                "only degree-2 classes evaluate on a surface bundle over S^2, got {mono}"
            )));
        }
        let g = match mono.factors() {
            [(g, 1)] => g,
            _ => {
                return Err(BundleError::Domain(format!(
                    "{mono} is not a single fiber-integral class"
                )))
            }
        };
        let value = match *g.symbol() {
            Symbol::Kappa(1) => model.kappa1(),
            Symbol::M(0, 1) => model.m01(),
            Symbol::M(-1, 2) => model.m_minus1_2(),
            _ => {
                return Err(BundleError::Domain(format!(
                    "{g} is not a fiber-integral class"
                )))
            }
        };
        total += c * Rational::from_integer(value);
    }
    Ok(total)
}
