use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{smith_normal_form, IntMatrix, LatticeError};

/// The edge map `Z^3 -> Z` on second cohomology, in the chart
/// `(lambda, zeta, m_{0,1})`, together with an adapted basis of `Z^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeKernel {
    /// Images of `(lambda, zeta, m_{0,1})`.
    pub map: [BigInt; 3],
    /// `lambda = (1, 0, 0)`.
    pub lambda: [BigInt; 3],
    /// Primitive kernel vector with vanishing lambda coordinate.
    pub eta: [BigInt; 3],
    /// A vector mapping to the generator of the image.
    pub preimage: [BigInt; 3],
    /// Index of the image in `Z`.
    pub cokernel_order: BigInt,
}

impl EdgeKernel {
    pub fn apply(&self, v: &[BigInt; 3]) -> BigInt {
        self.map.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// Rows `lambda, eta, preimage`.
    pub fn adapted_basis(&self) -> IntMatrix {
        IntMatrix::from_rows(&[
            self.lambda.to_vec(),
            self.eta.to_vec(),
            self.preimage.to_vec(),
        ])
        .expect("3x3")
    }
}

fn check_genus(g: i64) -> Result<(), LatticeError> {
    if g < 2 {
        return Err(LatticeError::Domain(format!("genus must be at least 2, got {g}")));
    }
    Ok(())
}

/// Restriction to the fiber of the universal Picard fibration:
/// `lambda -> 0`, `zeta -> 1 - g - k`, `m_{0,1} -> 2 - 2g`.
pub fn edge_kernel(g: i64, k: i64) -> Result<EdgeKernel, LatticeError> {
    check_genus(g)?;
    let a = BigInt::from(1 - g - k);
    let b = BigInt::from(2 - 2 * g);
    let map = [BigInt::zero(), a.clone(), b.clone()];
    let snf = smith_normal_form(&IntMatrix::from_rows(&[map.to_vec()])?);
    let order = snf
        .cokernel_order()
        .expect("2 - 2g is nonzero, so the edge map has rank one");

    let unit = snf.u[(0, 0)].clone();
    let pre = snf.v.column(0);
    let preimage = [&pre[0] * &unit, &pre[1] * &unit, &pre[2] * &unit];

    let mut eta = [BigInt::zero(), &b / &order, -(&a / &order)];
    let m01_sign = eta[2].signum();
    let flip = if m01_sign.is_zero() {
        eta[1].is_negative()
    } else {
        m01_sign.is_negative()
    };
    if flip {
        eta = [BigInt::zero(), -&eta[1], -&eta[2]];
    }

    Ok(EdgeKernel {
        map,
        lambda: [BigInt::from(1), BigInt::zero(), BigInt::zero()],
        eta,
        preimage,
        cokernel_order: order,
    })
}

/// A genus-g degree-k Picard bundle has a section iff `(2g - 2) | k`.
pub fn admits_section(g: i64, k: i64) -> Result<bool, LatticeError> {
    check_genus(g)?;
    Ok(k.is_multiple_of(&(2 * g - 2)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionReport {
    pub g: i64,
    pub k: i64,
    /// Order of `H^3` of the universal Picard variety.
    pub h3_pic_order: i64,
    /// Order of `H^1(M_g; Pic^0)`.
    pub h1_mg_pic0_order: i64,
    /// Order of `H^3` of the extended mapping class group.
    pub h3_gamma_tilde_order: i64,
    /// `eta` in the chart `(lambda, zeta, m_{0,1})`.
    pub eta_vector: [i64; 3],
    /// Order of the Dixmier-Douady class of the gerbe.
    pub dd_class_order: i64,
    pub admits_section: bool,
}

pub fn torsion_orders(g: i64, k: i64) -> Result<TorsionReport, LatticeError> {
    let edge = edge_kernel(g, k)?;
    let small = |x: &BigInt| {
        x.to_i64()
            .ok_or_else(|| LatticeError::Overflow(x.to_string()))
    };
    let h3 = small(&edge.cokernel_order)?;
    Ok(TorsionReport {
        g,
        k,
        h3_pic_order: h3,
        h1_mg_pic0_order: 2 * g - 2,
        h3_gamma_tilde_order: (2 - 2 * g).abs(),
        eta_vector: [small(&edge.eta[0])?, small(&edge.eta[1])?, small(&edge.eta[2])?],
        dd_class_order: h3,
        admits_section: admits_section(g, k)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: [i64; 3]) -> [BigInt; 3] {
        x.map(BigInt::from)
    }

    #[test]
    fn genus_six_degree_zero() {
        let e = edge_kernel(6, 0).unwrap();
        assert_eq!(e.map, v([0, -5, -10]));
        assert_eq!(e.cokernel_order, BigInt::from(5));
        assert_eq!(e.eta, v([0, -2, 1]));
        assert!(e.adapted_basis().is_unimodular());
    }

    #[test]
    fn degenerate_zeta_coefficient() {
        // g + k - 1 = 0: zeta lies in the kernel.
        let e = edge_kernel(2, -1).unwrap();
        assert_eq!(e.map, v([0, 0, -2]));
        assert_eq!(e.eta, v([0, 1, 0]));
        assert_eq!(e.cokernel_order, BigInt::from(2));
    }

    #[test]
    fn report_examples() {
        assert_eq!(torsion_orders(6, 5).unwrap().h3_pic_order, 10);
        let r = torsion_orders(2, 0).unwrap();
        assert_eq!(r.h3_pic_order, 1);
        assert_eq!(r.dd_class_order, 1);
        assert_eq!(r.h1_mg_pic0_order, 2);
        assert_eq!(r.h3_gamma_tilde_order, 2);
        assert!(r.admits_section);
        assert!(torsion_orders(1, 0).is_err());
    }

    #[test]
    fn sections() {
        assert!(admits_section(3, 4).unwrap());
        assert!(admits_section(3, -8).unwrap());
        assert!(!admits_section(3, 2).unwrap());
    }
}
