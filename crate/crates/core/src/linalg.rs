//! Exact matrix rank over `Q` (fraction-free Bareiss elimination) and over `F_p`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    #[default]
    Rationals,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `q` / `Q` / `rationals` or `fp:<p>`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "q" | "Q" | "rationals" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidField(s.to_string()))?;
                Field::prime(p)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rationals => "QQ".to_string(),
            Field::Prime(p) => format!("ZZ/{p}"),
        }
    }

    /// Rank of a dense integer matrix over this field.
    pub fn rank(&self, rows: Vec<Vec<i64>>) -> usize {
        match *self {
            Field::Rationals => rank_rational(rows),
            Field::Prime(p) => rank_mod_p(rows, p),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Rank over `Q`. Runs Bareiss elimination in `i128` and restarts with big integers
/// if an intermediate product overflows.
pub fn rank_rational(rows: Vec<Vec<i64>>) -> usize {
    let small: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => {
            let big = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            bareiss_big(big)
        }
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        let p = m[rank][col];
        for r in rank + 1..nrows {
            let f = m[r][col];
            for c in col + 1..ncols {
                let v = p.checked_mul(m[r][c])?.checked_sub(f.checked_mul(m[rank][c])?)?;
                // exact by Sylvester's identity
                m[r][c] = v / prev;
            }
            m[r][col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for r in rank + 1..nrows {
            let f = m[r][col].clone();
            for c in col + 1..ncols {
                let v = &p * &m[r][c] - &f * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(rows: Vec<Vec<i64>>, p: u32) -> usize {
    let p = p as u64;
    let mut m: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for c in col..ncols {
            m[rank][c] = m[rank][c] * inv % p;
        }
        for r in rank + 1..nrows {
            let f = m[r][col];
            if f == 0 {
                continue;
            }
            for c in col..ncols {
                m[r][c] = (m[r][c] + p - f * m[rank][c] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}
