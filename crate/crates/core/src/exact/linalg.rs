//! Exact linear solves over ℚ.

use super::{Field, Rat, Ring};
use crate::error::{Error, Result};
use num_bigint::BigInt;

fn size(r: &Rat) -> u64 {
    r.numer().bits() + r.denom().bits()
}

/// Row-reduces `[rows | rhs]` and returns the unique solution.
///
/// Fails with [`Error::RankDeficient`] when the columns are not independent
/// and with [`Error::Inconsistent`] when the system has no solution.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat]) -> Result<Vec<Rat>> {
    assert_eq!(rows.len(), rhs.len(), "row count");
    let n = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), n, "ragged matrix");
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();

    let mut pivots = Vec::with_capacity(n);
    let mut row = 0;
    for col in 0..n {
        // smallest pivot keeps coefficient growth down
        let Some(p) = (row..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| size(&m[i][col]))
        else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse().unwrap();
        for k in col..=n {
            m[row][k] = &m[row][k] * &inv;
        }
        for i in 0..m.len() {
            if i == row || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            for k in col..=n {
                if !m[row][k].is_zero() {
                    let delta = &f * &m[row][k];
                    m[i][k] = &m[i][k] - &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[n].is_zero()) {
        return Err(Error::Inconsistent);
    }
    if pivots.len() < n {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            unknowns: n,
        });
    }
    Ok((0..n).map(|i| m[i][n].clone()).collect())
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let zeros = vec![Rat::zero(); rows.len()];
    match solve(rows, &zeros) {
        Ok(_) => rows.first().map_or(0, Vec::len),
        Err(Error::RankDeficient { rank, .. }) => rank,
        Err(_) => unreachable!("homogeneous systems are consistent"),
    }
}

/// Modulus for [`solve_integral_mod_p`]: the Mersenne prime `2⁶¹ − 1`.
pub const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn reduce_mod(n: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((n % &p) + &p) % &p;
    u64::try_from(&r).expect("reduced residue")
}

/// Solves an integer system modulo [`PRIME`] and lifts each residue to the
/// integer of least absolute value.
///
/// The lift is only correct when the true solution is integral with
/// entries far below `2⁶⁰`, so callers must certify the result exactly.
/// Fails with [`Error::RankDeficient`] or [`Error::Inconsistent`] modulo the
/// prime.
pub fn solve_integral_mod_p(rows: &[Vec<BigInt>], rhs: &[BigInt]) -> Result<Vec<BigInt>> {
    assert_eq!(rows.len(), rhs.len(), "row count");
    let n = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), n, "ragged matrix");
            r.iter().chain(std::iter::once(b)).map(reduce_mod).collect()
        })
        .collect();
    let mut row = 0;
    let mut pivots = 0;
    for col in 0..n {
        let Some(p) = (row..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        let inv = powmod(m[row][col], PRIME - 2);
        for k in col..=n {
            m[row][k] = mulmod(m[row][k], inv);
        }
        for i in 0..m.len() {
            if i == row || m[i][col] == 0 {
                continue;
            }
            let f = m[i][col];
            for k in col..=n {
                let d = mulmod(f, m[row][k]);
                m[i][k] = (m[i][k] + PRIME - d) % PRIME;
            }
        }
        pivots += 1;
        row += 1;
        if row == m.len() {
            break;
        }
    }
    if m[row..].iter().any(|r| r[n] != 0) {
        return Err(Error::Inconsistent);
    }
    if pivots < n {
        return Err(Error::RankDeficient {
            rank: pivots,
            unknowns: n,
        });
    }
    Ok((0..n)
        .map(|i| {
            let v = m[i][n];
            if v > PRIME / 2 {
                BigInt::from(v) - BigInt::from(PRIME)
            } else {
                BigInt::from(v)
            }
        })
        .collect())
}
