//! Scalar fields for the homology kernels.
//!
//! Rank computations are generic over [`Field`]; the concrete prime fields
//! are `Fp<P>` for a small set of primes, re-exported at the crate root as
//! `F2`, `F3`, ...

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// An exact field usable by Gaussian elimination.
pub trait Field:
    Copy
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// 0 for characteristic zero.
    const CHARACTERISTIC: u32;

    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn inv(self) -> Option<Self>;
}

/// The prime field Z/PZ. `P` must be prime; only the aliases below are
/// instantiated by the library.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: u32) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    const CHARACTERISTIC: u32 = P;

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    fn inv(self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(P-2)
        let mut base = self;
        let mut exp = P - 2;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        Some(acc)
    }
}

/// Rank of a dense matrix (rows of equal length) by Gaussian elimination.
pub const SUPPORTED_PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

pub fn is_supported_prime(p: u32) -> bool {
    SUPPORTED_PRIMES.contains(&p)
}

pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] * inv;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor.is_zero() {
                continue;
            }
            for c in col..ncols {
                row[c] = row[c] - factor * pivot_row[c];
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Calls `$body` with the type alias `$F` bound to the prime field of
/// characteristic `$p`, or returns `Err(UnsupportedPrime)`.
#[macro_export]
macro_rules! with_prime_field {
    ($p:expr, $F:ident => $body:expr) => {
        match $p {
            2 => {
                type $F = $crate::F2;
                Ok($body)
            }
            3 => {
                type $F = $crate::F3;
                Ok($body)
            }
            5 => {
                type $F = $crate::F5;
                Ok($body)
            }
            7 => {
                type $F = $crate::F7;
                Ok($body)
            }
            11 => {
                type $F = $crate::F11;
                Ok($body)
            }
            13 => {
                type $F = $crate::F13;
                Ok($body)
            }
            other => Err($crate::Error::UnsupportedPrime(other)),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3, F7};

    #[test]
    fn inverses() {
        for v in 1..7 {
            let a = F7::new(v);
            assert_eq!(a * a.inv().unwrap(), F7::one());
        }
        assert!(F3::zero().inv().is_none());
        assert_eq!(F3::from_i64(-1), F3::new(2));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // [[1,1],[1,-1]] has determinant -2.
        let m2 = vec![
            vec![F2::from_i64(1), F2::from_i64(1)],
            vec![F2::from_i64(1), F2::from_i64(-1)],
        ];
        let m3 = vec![
            vec![F3::from_i64(1), F3::from_i64(1)],
            vec![F3::from_i64(1), F3::from_i64(-1)],
        ];
        assert_eq!(rank(m2), 1);
        assert_eq!(rank(m3), 2);
    }

    #[test]
    fn rank_of_empty_and_zero() {
        assert_eq!(rank::<F2>(vec![]), 0);
        assert_eq!(rank(vec![vec![F3::zero(); 3]; 2]), 0);
    }
}
