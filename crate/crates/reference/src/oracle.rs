//! Brute-force reference computations, written independently of the
//! engine so the two can be compared.

use num_integer::Integer;
use num_traits::Zero;
use picard_core::Rational;

pub fn det_laplace(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det_laplace(&minor)
        })
        .sum()
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `D_k` = gcd of all k x k minors.
pub fn determinantal_divisors(a: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (a.len(), a.first().map_or(0, Vec::len));
    (1..=r.min(c))
        .map(|k| {
            let mut g = 0i128;
            for rows in subsets(r, k) {
                for cols in subsets(c, k) {
                    let minor: Vec<Vec<i128>> = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| a[i][j] as i128).collect())
                        .collect();
                    g = g.gcd(&det_laplace(&minor));
                }
            }
            g
        })
        .collect()
}

pub fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `pi_!((chi sigma)^(i+1) (k sigma + x)^j)` with `sigma^2 = 0`, by the
/// binomial theorem.
pub fn binomial_oracle(g: i64, k: i64, i: i32, j: u32) -> Vec<Rational> {
    let chi = 2 - 2 * g;
    let mut out = vec![Rational::zero(); j as usize + 1];
    for l in 0..=j {
        let sigma_power = (i + 1) as u32 + l;
        if sigma_power != 1 {
            continue;
        }
        let c = chi.pow((i + 1) as u32) * binomial(j, l) * k.pow(l);
        out[(j - l) as usize] += Rational::from_integer(c.into());
    }
    out
}

/// All symmetric `[[a, b], [b, c]]` with entries in `-10..=10` meeting the
/// constraints, for `e = 2x + y`.
pub fn hirzebruch_solutions(line: [i64; 2], fiber: [i64; 2]) -> Vec<[[i64; 2]; 2]> {
    let mut out = Vec::new();
    for a in -10..=10 {
        for b in -10..=10 {
            for c in -10..=10 {
                let g = [[a, b], [b, c]];
                let pair = |u: [i64; 2], v: [i64; 2]| {
                    (0..2).map(|i| (0..2).map(|j| u[i] * g[i][j] * v[j]).sum::<i64>()).sum::<i64>()
                };
                let e = [2, 1];
                if pair(fiber, fiber) == 0
                    && pair(e, fiber) == 2
                    && pair(e, e) == 0
                    && pair(e, line) == -1
                    && pair(line, line) == -1
                {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Number of multisets drawn from `degrees[from..]` with total `n`.
pub fn count_monomials(degrees: &[u32], from: usize, n: u32) -> u128 {
    if n == 0 {
        return 1;
    }
    if from == degrees.len() {
        return 0;
    }
    let d = degrees[from];
    (0..=n / d)
        .map(|e| count_monomials(degrees, from + 1, n - e * d))
        .sum()
}


/// Coefficients of `x / (1 - exp(-x))` up to `x^n`, by inverting
/// `sum (-1)^i x^i / (i+1)!` term by term.
pub fn todd_by_division(n: usize) -> Vec<Rational> {
    let mut fact = vec![num_bigint::BigInt::from(1)];
    for i in 1..=n + 1 {
        let next = &fact[i - 1] * num_bigint::BigInt::from(i);
        fact.push(next);
    }
    let a: Vec<Rational> = (0..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            Rational::new(sign.into(), fact[i + 1].clone())
        })
        .collect();
    let mut q = vec![Rational::from_integer(1.into())];
    for k in 1..=n {
        let mut acc = Rational::zero();
        for i in 1..=k {
            acc += &a[i] * &q[k - i];
        }
        q.push(-acc);
    }
    q
}
