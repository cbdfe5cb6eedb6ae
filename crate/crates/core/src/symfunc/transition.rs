//! Exact transition matrices between each supported basis and the monomial
//! basis, memoized per `(basis, degree)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{xi_expansion_in_m, Basis};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, IntPartition};
use crate::tableaux::count_ssyt;

/// Largest degree for which basis changes are computed.
pub const MAX_DEGREE: usize = 9;

/// Dense square matrix over the rationals, indexed by
/// [`enumerate_partitions`] order.
pub type Matrix = Vec<Vec<BigRational>>;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Direction {
    ToM,
    FromM,
}

type Cache = Mutex<HashMap<(Basis, usize, Direction), Arc<Matrix>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_degree(d: usize) -> Result<()> {
    if d > MAX_DEGREE {
        return Err(Error::CapExceeded { what: "symmetric function degree", size: d, cap: MAX_DEGREE });
    }
    Ok(())
}

fn cached(key: (Basis, usize, Direction), build: impl FnOnce() -> Result<Matrix>) -> Result<Arc<Matrix>> {
    if let Some(m) = cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let m = Arc::new(build()?);
    Ok(cache().lock().unwrap().entry(key).or_insert(m).clone())
}

/// Row `i` holds the `m`-expansion of the `i`-th basis element of degree `d`.
pub fn to_m_matrix(basis: Basis, d: usize) -> Result<Arc<Matrix>> {
    check_degree(d)?;
    cached((basis, d, Direction::ToM), || Ok(build_to_m(basis, d)))
}

/// Row `i` holds the `basis`-expansion of `m_λ` for the `i`-th partition.
pub fn from_m_matrix(basis: Basis, d: usize) -> Result<Arc<Matrix>> {
    check_degree(d)?;
    cached((basis, d, Direction::FromM), || {
        let fwd = to_m_matrix(basis, d)?;
        invert(&fwd).ok_or_else(|| Error::Invalid { what: "transition matrix", reason: format!("{basis} at degree {d} is singular") })
    })
}

fn build_to_m(basis: Basis, d: usize) -> Matrix {
    let parts = enumerate_partitions(d);
    let int = |n: BigUint| BigRational::from_integer(BigInt::from(n));
    parts
        .iter()
        .map(|lambda| match basis {
            Basis::M => parts.iter().map(|mu| if mu == lambda { BigRational::one() } else { BigRational::zero() }).collect(),
            Basis::MTilde => parts
                .iter()
                .map(|mu| if mu == lambda { int(lambda.r_factorial()) } else { BigRational::zero() })
                .collect(),
            Basis::P => parts.iter().map(|mu| int(count_matrices(lambda, mu, Fill::Power))).collect(),
            Basis::E => parts.iter().map(|mu| int(count_matrices(lambda, mu, Fill::ZeroOne))).collect(),
            Basis::H => parts.iter().map(|mu| int(count_matrices(lambda, mu, Fill::Natural))).collect(),
            Basis::S => parts.iter().map(|mu| int(count_ssyt(lambda, mu))).collect(),
            Basis::Xi => {
                let xi = xi_expansion_in_m(lambda);
                parts.iter().map(|mu| xi.get(mu).cloned().unwrap_or_else(BigRational::zero)).collect()
            }
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Fill {
    /// each row places its whole sum in one column (power sums)
    Power,
    /// 0/1 entries (elementary)
    ZeroOne,
    /// nonnegative integer entries (complete homogeneous)
    Natural,
}

/// Coefficient of `x^μ` in `b_λ`, counted as matrices with row sums `λ` and
/// column sums `μ` subject to `fill`.
fn count_matrices(lambda: &IntPartition, mu: &IntPartition, fill: Fill) -> BigUint {
    fn place_row(
        r: u32,
        col: usize,
        remaining: &mut Vec<u32>,
        fill: Fill,
        row: usize,
        rows: &[u32],
        memo: &mut HashMap<(usize, Vec<u32>), BigUint>,
    ) -> BigUint {
        if r == 0 {
            return rows_from(row + 1, rows, remaining, fill, memo);
        }
        if col == remaining.len() {
            return BigUint::zero();
        }
        let mut total = BigUint::zero();
        let max = match fill {
            Fill::Power => {
                if remaining[col] >= r {
                    remaining[col] -= r;
                    total += rows_from(row + 1, rows, remaining, fill, memo);
                    remaining[col] += r;
                }
                return total + place_row(r, col + 1, remaining, fill, row, rows, memo);
            }
            Fill::ZeroOne => 1.min(r).min(remaining[col]),
            Fill::Natural => r.min(remaining[col]),
        };
        for k in 0..=max {
            remaining[col] -= k;
            total += place_row(r - k, col + 1, remaining, fill, row, rows, memo);
            remaining[col] += k;
        }
        total
    }

    fn rows_from(
        row: usize,
        rows: &[u32],
        remaining: &mut Vec<u32>,
        fill: Fill,
        memo: &mut HashMap<(usize, Vec<u32>), BigUint>,
    ) -> BigUint {
        if row == rows.len() {
            return if remaining.iter().all(|&c| c == 0) { BigUint::one() } else { BigUint::zero() };
        }
        let key = (row, remaining.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let v = place_row(rows[row], 0, remaining, fill, row, rows, memo);
        memo.insert(key, v.clone());
        v
    }

    if lambda.size() != mu.size() {
        return BigUint::zero();
    }
    let mut remaining = mu.parts().to_vec();
    rows_from(0, lambda.parts(), &mut remaining, fill, &mut HashMap::new())
}

/// Gauss–Jordan inverse over the rationals; `None` if singular.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(c, pivot);
        let inv = aug[c][c].recip();
        for x in aug[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for k in 0..2 * n {
                    let delta = &f * &aug[c][k];
                    aug[r][k] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

/// `K[λ][μ]`: semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka_matrix(d: usize) -> Vec<Vec<BigUint>> {
    let parts = enumerate_partitions(d);
    parts.iter().map(|l| parts.iter().map(|m| count_ssyt(l, m)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPartition {
        s.parse().unwrap()
    }

    #[test]
    fn kostka_small() {
        let k = kostka_matrix(3);
        // rows/cols: (3), (2,1), (1,1,1)
        assert_eq!(k[1][2], BigUint::from(2u32));
        assert_eq!(k[0][2], BigUint::from(1u32));
        for d in 1..=6 {
            let k = kostka_matrix(d);
            for i in 0..k.len() {
                assert_eq!(k[i][i], BigUint::one());
                for j in 0..i {
                    assert!(k[i][j].is_zero(), "not unitriangular at d={d}");
                }
            }
        }
    }

    #[test]
    fn matrix_counts() {
        // p_{1,1} = m_2 + 2 m_{1,1}
        assert_eq!(count_matrices(&p("1,1"), &p("2"), Fill::Power), BigUint::from(1u32));
        assert_eq!(count_matrices(&p("1,1"), &p("1,1"), Fill::Power), BigUint::from(2u32));
        // e_2 = m_{1,1}
        assert_eq!(count_matrices(&p("2"), &p("2"), Fill::ZeroOne), BigUint::zero());
        assert_eq!(count_matrices(&p("2"), &p("1,1"), Fill::ZeroOne), BigUint::one());
        // h_{2,1}: coefficient of m_{1,1,1} is 3
        assert_eq!(count_matrices(&p("2,1"), &p("1,1,1"), Fill::Natural), BigUint::from(3u32));
    }

    #[test]
    fn inverse_roundtrip() {
        for basis in Basis::ALL {
            for d in 0..=6 {
                let a = to_m_matrix(basis, d).unwrap();
                let b = from_m_matrix(basis, d).unwrap();
                let id = matmul(&a, &b);
                for (i, row) in id.iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        assert_eq!(x.is_one(), i == j);
                        assert!(i == j || x.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(to_m_matrix(Basis::S, MAX_DEGREE + 1), Err(Error::CapExceeded { .. })));
    }
}
