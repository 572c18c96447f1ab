use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, LatticeError};

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal, its diagonal
/// entries non-negative and each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal of `d`, of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Basis of the kernel of `a` (as column vectors of `v`).
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.v.cols()).map(|j| self.v.column(j)).collect()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect()
    }

    /// Order of the cokernel `Z^rows / im(a)`, or `None` when it is infinite.
    pub fn cokernel_order(&self) -> Option<BigInt> {
        if self.rank() < self.d.rows() {
            return None;
        }
        Some(self.diagonal().iter().filter(|x| !x.is_zero()).product())
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&d, t) else {
                return SmithForm { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce the divisibility chain: fold an offending row into
            // row t and reduce again.
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| x < *b) {
                best = Some(((i, j), x));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Result of checking that a square family of integer vectors is a
/// basis of the full lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBasisCertificate {
    pub determinant: BigInt,
    pub pass: bool,
}

/// PASS iff the vectors (as rows) have determinant ±1.
pub fn verify_free_basis(vectors: &[Vec<BigInt>]) -> Result<FreeBasisCertificate, LatticeError> {
    let n = vectors.len();
    if n == 0 || vectors.iter().any(|v| v.len() != n) {
        return Err(LatticeError::Shape(format!(
            "expected {n} vectors of length {n}"
        )));
    }
    let determinant = IntMatrix::from_rows(vectors)?.determinant()?;
    let pass = determinant.abs().is_one();
    Ok(FreeBasisCertificate { determinant, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn check_contract(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        s
    }

    #[test]
    fn diag_2_3() {
        let s = check_contract(&mat(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_and_identity() {
        let s = check_contract(&IntMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
        assert_eq!(s.kernel_basis().len(), 3);
        let s = check_contract(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
    }

    #[test]
    fn row_vector_cokernel() {
        let s = check_contract(&mat(&[vec![0, -5, -10]]));
        assert_eq!(s.cokernel_order(), Some(BigInt::from(5)));
        assert_eq!(s.kernel_basis().len(), 2);
        let col = mat(&[vec![4], vec![6]]);
        assert_eq!(check_contract(&col).cokernel_order(), None);
    }

    #[test]
    fn free_basis_examples() {
        let v = |rows: &[[i64; 3]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        let c = verify_free_basis(&v(&[[1, 0, 0], [0, 2, 1], [0, -1, 0]])).unwrap();
        assert!(c.pass);
        assert_eq!(c.determinant, BigInt::from(1));
        let c = verify_free_basis(&v(&[[1, 0, 0], [0, 2, 0], [0, 0, 1]])).unwrap();
        assert!(!c.pass);
        assert_eq!(c.determinant, BigInt::from(2));
        assert!(verify_free_basis(&v(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap().pass);
        assert!(verify_free_basis(&v(&[[1, 0, 0], [0, 1, 0]])).is_err());
    }
}
