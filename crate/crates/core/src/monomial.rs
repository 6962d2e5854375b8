//! Exponent-vector monomials in a fixed number of variables.
//!
//! Variables are 0-based internally and printed 1-based (`x1` is index 0).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Exponent = u16;

/// A monomial `x^a` with `a` a nonnegative exponent vector.
///
/// `Ord` is the canonical generator order: total degree first, then
/// ascending lexicographic comparison of exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<Exponent>,
}

impl Monomial {
    /// The constant monomial 1.
    pub fn one(ambient: usize) -> Self {
        Monomial {
            exps: vec![0; ambient],
        }
    }

    pub fn from_exponents(exps: Vec<Exponent>) -> Self {
        Monomial { exps }
    }

    /// The variable `x_{index+1}`.
    pub fn var(index: usize, ambient: usize) -> Result<Self> {
        if index >= ambient {
            return Err(Error::VariableOutOfRange { index, ambient });
        }
        let mut m = Self::one(ambient);
        m.exps[index] = 1;
        Ok(m)
    }

    /// `x_A`, the product of the variables indexed by `set` (0-based).
    pub fn x_of_set(set: &[usize], ambient: usize) -> Result<Self> {
        let mut m = Self::one(ambient);
        for &i in set {
            if i >= ambient {
                return Err(Error::VariableOutOfRange { index: i, ambient });
            }
            m.exps[i] = 1;
        }
        Ok(m)
    }

    /// `x_A` for a bitmask of 0-based variable indices.
    pub fn x_of_mask(mask: u64, ambient: usize) -> Self {
        let mut m = Self::one(ambient);
        for (i, e) in m.exps.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                *e = 1;
            }
        }
        m
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// A single variable `x_i`, returned as its index.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// 0-based indices of variables dividing the monomial.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Squarefree fast path: the support as a bitmask. Requires ambient ≤ 64.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.exps.len() <= 64);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | 1 << i)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::AmbientMismatch(self.exps.len(), other.exps.len()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                (a as u32)
                    .checked_mul(k)
                    .filter(|&v| v <= Exponent::MAX as u32)
                    .map(|v| v as Exponent)
                    .ok_or(Error::ExponentOverflow)
            })
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Componentwise `self ≤ other`. Ambients are assumed equal.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_divides(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides(other))
    }

    /// `self / divisor`, which must be exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        divisor.check_ambient(self)?;
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                divisor: divisor.to_string(),
                dividend: self.to_string(),
            });
        }
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn colon(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// Restrict to the variables listed in `keep` (in that order), i.e.
    /// substitute 1 for every other variable.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        Monomial {
            exps: keep.iter().map(|&i| self.exps[i]).collect(),
        }
    }

    /// Re-embed a monomial living on the variables `map` into `ambient`.
    pub fn embed(&self, map: &[usize], ambient: usize) -> Self {
        let mut m = Self::one(ambient);
        for (j, &i) in map.iter().enumerate() {
            m.exps[i] = self.exps[j];
        }
        m
    }

    /// Number of divisors, `∏ (e_i + 1)`.
    pub fn divisor_count(&self) -> u128 {
        self.exps.iter().map(|&e| e as u128 + 1).product()
    }

    /// All divisors, each exactly once; the first variable varies fastest.
    pub fn divisors(&self) -> Divisors<'_> {
        Divisors {
            bound: self,
            current: Some(Self::one(self.exps.len())),
        }
    }

    pub fn parse(s: &str, ambient: usize) -> Result<Self> {
        let s = s.trim();
        let mut m = Self::one(ambient);
        if s == "1" {
            return Ok(m);
        }
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad factor `{factor}`")))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
            let exp: Exponent = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
            if idx == 0 || idx > ambient {
                return Err(Error::VariableOutOfRange {
                    index: idx,
                    ambient,
                });
            }
            m.exps[idx - 1] = m.exps[idx - 1]
                .checked_add(exp)
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct Divisors<'a> {
    bound: &'a Monomial,
    current: Option<Monomial>,
}

impl Iterator for Divisors<'_> {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut carried = true;
        for (e, &b) in next.exps.iter_mut().zip(&self.bound.exps) {
            if *e < b {
                *e += 1;
                carried = false;
                break;
            }
            *e = 0;
        }
        if !carried {
            self.current = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(m("x1*x2", 3).lcm(&m("x2*x3", 3)), m("x1*x2*x3", 3));
        assert!(m("x1", 2).divides(&m("x1^2*x2", 2)));
        assert_eq!(m("x1^2*x2", 3).gcd(&m("x2^2*x3", 3)), m("x2", 3));
        assert_eq!(
            m("x1^2*x2", 2).exact_div(&m("x1", 2)).unwrap(),
            m("x1*x2", 2)
        );
    }

    #[test]
    fn arithmetic_errors() {
        assert!(matches!(
            m("x1", 2).mul(&m("x1", 3)),
            Err(Error::AmbientMismatch(2, 3))
        ));
        assert!(matches!(
            m("x1", 2).exact_div(&m("x2", 2)),
            Err(Error::NotDivisible { .. })
        ));
        let big = Monomial::from_exponents(vec![Exponent::MAX]);
        assert_eq!(big.mul(&m("x1", 1)), Err(Error::ExponentOverflow));
    }

    #[test]
    fn x_of_set_examples() {
        assert_eq!(Monomial::x_of_set(&[0, 1, 2], 3).unwrap(), m("x1*x2*x3", 3));
        assert!(Monomial::x_of_set(&[], 3).unwrap().is_one());
        assert_eq!(Monomial::x_of_set(&[1], 4).unwrap(), m("x2", 4));
        assert!(Monomial::x_of_set(&[4], 4).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(m("x1*x2", 2).divisors().count(), 4);
        assert_eq!(m("x1^2", 1).divisors().count(), 3);
        assert_eq!(m("x1^2*x2^2*x3^2", 3).divisors().count(), 27);
        let ds: Vec<_> = m("x1*x2", 2).divisors().collect();
        assert_eq!(ds, vec![m("1", 2), m("x1", 2), m("x2", 2), m("x1*x2", 2)]);
    }

    #[test]
    fn printing_and_parsing() {
        assert_eq!(m("x1^2*x3", 3).to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(2).to_string(), "1");
        assert_eq!(m("x3 * x1^2", 3), m("x1^2*x3", 3));
        assert!(Monomial::parse("y1", 2).is_err());
        assert!(Monomial::parse("x0", 2).is_err());
        assert!(Monomial::parse("x3", 2).is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![m("x1*x2", 3), m("x3", 3), m("x1", 3), m("x2*x3", 3)];
        v.sort();
        assert_eq!(v, vec![m("x3", 3), m("x1", 3), m("x2*x3", 3), m("x1*x2", 3)]);
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u16..4, n).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn lattice_laws(u in mono(4), v in mono(4)) {
            let g = u.gcd(&v);
            let l = u.lcm(&v);
            prop_assert!(g.divides(&u) && g.divides(&v));
            prop_assert!(u.divides(&l) && v.divides(&l));
            let uv = u.mul(&v).unwrap();
            prop_assert_eq!(uv.degree(), u.degree() + v.degree());
            prop_assert_eq!(uv.support_mask(), u.support_mask() | v.support_mask());
            prop_assert_eq!(uv.exact_div(&v).unwrap(), u.clone());
        }

        #[test]
        fn divisors_are_complete(u in mono(3)) {
            let ds: Vec<_> = u.divisors().collect();
            prop_assert_eq!(ds.len() as u128, u.divisor_count());
            prop_assert!(ds.iter().all(|d| d.divides(&u)));
            let set: std::collections::HashSet<_> = ds.iter().collect();
            prop_assert_eq!(set.len(), ds.len());
        }

        #[test]
        fn display_parses_back(u in mono(5)) {
            prop_assert_eq!(Monomial::parse(&u.to_string(), 5).unwrap(), u);
        }
    }
}
