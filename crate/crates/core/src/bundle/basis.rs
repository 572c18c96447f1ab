use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{eval_fourmanifold, eval_trivial_family, BundleError, FourManifoldModel, TrivialFamilyModel};
use crate::algebra::{Element, Generator, Rational};

/// Test bundles on which the degree-2 classes `(lambda, m_{0,1}, zeta)`
/// are evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisModel {
    /// Universal bundle over the moduli space with the trivial line bundle.
    /// Its values are declared, not computed: lambda generates, the other
    /// two vanish.
    UniversalStub,
    TrivialFamily(TrivialFamilyModel),
    FourManifold(FourManifoldModel),
}

impl BasisModel {
    /// The three reference models: universal bundle, genus-2 product family
    /// with a line bundle pulled back from the base, Hirzebruch surface.
    pub fn reference_models() -> [BasisModel; 3] {
        [
            BasisModel::UniversalStub,
            BasisModel::TrivialFamily(TrivialFamilyModel::new(2, 0, 1).expect("g = 2")),
            BasisModel::FourManifold(FourManifoldModel::hirzebruch_h1()),
        ]
    }

    pub fn label(&self) -> &'static str {
        match self {
            BasisModel::UniversalStub => "universal",
            BasisModel::TrivialFamily(_) => "trivial-family",
            BasisModel::FourManifold(_) => "four-manifold",
        }
    }
}

/// Values of `(lambda, m_{0,1}, zeta)` on a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub lambda: Rational,
    pub m01: Rational,
    pub zeta: Rational,
}

impl BasisVector {
    pub fn to_vec(&self) -> Vec<Rational> {
        vec![self.lambda.clone(), self.m01.clone(), self.zeta.clone()]
    }

    pub fn integers(&self) -> Option<Vec<BigInt>> {
        self.to_vec()
            .iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect()
    }

    fn negated(&self) -> BasisVector {
        BasisVector {
            lambda: -&self.lambda,
            m01: -&self.m01,
            zeta: -&self.zeta,
        }
    }
}

fn integral(v: BasisVector) -> Result<BasisVector, BundleError> {
    if !v.lambda.is_integer() {
        return Err(BundleError::NonIntegralHodge {
            kappa1: (&v.lambda * Rational::from_integer(12.into())).to_string(),
        });
    }
    if !v.zeta.is_integer() {
        return Err(BundleError::ModelInconsistency(format!(
            "zeta evaluates to {}, but m_{{0,1}} - m_{{-1,2}} is divisible by 2 on every \
             genuine surface bundle with a line bundle",
            v.zeta
        )));
    }
    Ok(v)
}

pub fn basis_vector(model: &BasisModel) -> Result<BasisVector, BundleError> {
    let classes = [Generator::lambda(), Generator::m(0, 1), Generator::zeta()];
    let v = match model {
        BasisModel::UniversalStub => BasisVector {
            lambda: Rational::from_integer(1.into()),
            m01: Rational::zero(),
            zeta: Rational::zero(),
        },
        BasisModel::TrivialFamily(m) => {
            let [lambda, m01, zeta] = classes.map(|g| {
                eval_trivial_family(m, &Element::generator(g))
                    .map(|poly| poly.coefficient_of(&Generator::x()))
            });
            let v = BasisVector {
                lambda: lambda?,
                m01: m01?,
                zeta: zeta?,
            };
            // The generator of H^2(CP^inf) is only defined up to sign; fix it
            // so the first nonzero entry among (m_{0,1}, zeta) is positive.
            let lead = if v.m01.is_zero() { &v.zeta } else { &v.m01 };
            if lead.is_negative() {
                v.negated()
            } else {
                v
            }
        }
        BasisModel::FourManifold(m) => {
            let [lambda, m01, zeta] =
                classes.map(|g| eval_fourmanifold(m, &Element::generator(g)));
            BasisVector {
                lambda: lambda?,
                m01: m01?,
                zeta: zeta?,
            }
        }
    };
    integral(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn ints(v: &BasisVector) -> Vec<i64> {
        v.integers()
            .unwrap()
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect()
    }

    #[test]
    fn reference_vectors() {
        let [a, b, c] = BasisModel::reference_models();
        assert_eq!(ints(&basis_vector(&a).unwrap()), [1, 0, 0]);
        assert_eq!(ints(&basis_vector(&b).unwrap()), [0, 2, 1]);
        assert_eq!(ints(&basis_vector(&c).unwrap()), [0, -1, 0]);
    }

    #[test]
    fn trivial_family_sign_is_normalized() {
        // Raw values at g = 2, k = 0 are (0, -2, -1).
        let m = TrivialFamilyModel::new(2, 0, 1).unwrap();
        let raw = eval_trivial_family(&m, &Element::generator(Generator::m(0, 1))).unwrap();
        assert_eq!(raw.coefficient_of(&Generator::x()), ratio(-2, 1));
        // g = 2, k = -1: zeta = 0 and m_{0,1} = -2 before normalization.
        let v = basis_vector(&BasisModel::TrivialFamily(TrivialFamilyModel::new(2, -1, 1).unwrap()));
        assert_eq!(ints(&v.unwrap()), [0, 2, 0]);
    }

    #[test]
    fn odd_pairing_is_inconsistent() {
        // m_{0,1} = 1 and m_{-1,2} = 0 would make zeta = 1/2.
        let m = FourManifoldModel::new(
            vec!["a".into(), "b".into()],
            vec![vec![0, 1], vec![1, 0]],
            vec![1, 0],
            vec![0, 1],
            None,
        )
        .unwrap();
        assert!(matches!(
            basis_vector(&BasisModel::FourManifold(m)),
            Err(BundleError::ModelInconsistency(_))
        ));
    }
}
