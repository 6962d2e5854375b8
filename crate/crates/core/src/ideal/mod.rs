//! Monomial ideals with canonical minimal generating sets.

mod classify;

pub use classify::{classify_big_degree, BigDegreeCase, CaseClassification};

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{full_mask, mask_to_vec, Graph};
use crate::monomial::{Exponent, Monomial};
use crate::varset::VarSet;

/// Largest support for which subset enumeration of minimal primes runs.
pub const MINIMAL_PRIMES_SUPPORT_LIMIT: usize = 24;

/// A monomial ideal in `ambient` variables, held as its minimal
/// generators in canonical order. The zero ideal has no generators; the
/// unit ideal is generated by 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

/// `I(P_F)`: an ideal moved into the ring on the variables `map` (indices
/// into the original ambient), with `dropped` variables substituted by 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedIdeal {
    pub ideal: MonomialIdeal,
    pub map: Vec<usize>,
    pub dropped: usize,
}

impl MonomialIdeal {
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: vec![Monomial::one(ambient)],
        }
    }

    /// Minimalize an arbitrary generating set.
    pub fn new(ambient: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.ambient() != ambient) {
            return Err(Error::AmbientMismatch(ambient, bad.ambient()));
        }
        Ok(Self::minimalized(ambient, gens))
    }

    /// `new` for callers that already guarantee a shared ambient.
    pub(crate) fn minimalized(ambient: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // Sorted by degree, so only earlier generators can divide g.
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal {
            ambient,
            gens: kept,
        }
    }

    /// Parse `(g1, g2, ...)`; `(0)` or `()` is the zero ideal.
    pub fn parse(s: &str, ambient: usize) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("ideal `{s}` must be parenthesized")))?
            .trim();
        if inner.is_empty() || inner == "0" {
            return Ok(Self::zero(ambient));
        }
        let gens = inner
            .split(',')
            .map(|g| Monomial::parse(g, ambient))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, gens)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// A prime `P_F` is recognised by all generators being variables.
    pub fn as_monomial_prime(&self) -> Option<VarSet> {
        if self.gens.is_empty() {
            return None;
        }
        let mut set = 0u64;
        for g in &self.gens {
            set |= 1 << g.as_variable()?;
        }
        Some(VarSet(set))
    }

    pub fn support(&self) -> VarSet {
        VarSet(self.gens.iter().fold(0, |m, g| m | g.support_mask()))
    }

    /// Initial degree; `None` for the zero ideal.
    pub fn indeg(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.last().map(Monomial::degree)
    }

    pub fn equigenerated_degree(&self) -> Option<u32> {
        match (self.indeg(), self.max_degree()) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    /// `μ_j(I)`: minimal generators of degree `j`.
    pub fn mu(&self, j: u32) -> usize {
        self.gens.iter().filter(|g| g.degree() == j).count()
    }

    /// lcm of all generators (1 for the zero ideal).
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.ambient), |acc, g| acc.lcm(g))
    }

    fn check_ambient(&self, other_ambient: usize) -> Result<()> {
        if self.ambient != other_ambient {
            return Err(Error::AmbientMismatch(self.ambient, other_ambient));
        }
        Ok(())
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    pub fn try_contains(&self, u: &Monomial) -> Result<bool> {
        self.check_ambient(u.ambient())?;
        Ok(self.contains(u))
    }

    /// `J ⊆ I` (every generator of `J` lies in `I`).
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::minimalized(self.ambient, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.mul(v)?);
            }
        }
        Ok(Self::minimalized(self.ambient, gens))
    }

    /// `I^k`, minimalizing after every multiplication; `I^0` is the unit
    /// ideal.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(self.ambient);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `[I, I^2, ..., I^kmax]`.
    pub fn powers(&self, kmax: u32) -> Result<Vec<Self>> {
        let mut out: Vec<Self> = Vec::with_capacity(kmax as usize);
        for k in 0..kmax {
            let next = match out.last() {
                Some(prev) => prev.product(self)?,
                None => self.clone(),
            };
            debug_assert!(k > 0 || next == *self);
            out.push(next);
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        Ok(Self::minimalized(self.ambient, gens))
    }

    /// `I : u`.
    pub fn colon(&self, u: &Monomial) -> Result<Self> {
        self.check_ambient(u.ambient())?;
        let gens = self.gens.iter().map(|g| g.colon(u)).collect();
        Ok(Self::minimalized(self.ambient, gens))
    }

    /// `I : J`, the intersection of `I : v` over the generators of `J`.
    /// `I : 0` is the unit ideal.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let mut acc = Self::unit(self.ambient);
        for v in &other.gens {
            acc = acc.intersect(&self.colon(v)?)?;
        }
        Ok(acc)
    }

    /// Monomial localization `I(P_F)` for a nonempty set of 0-based
    /// variables.
    pub fn localization(&self, vars: &[usize]) -> Result<LocalizedIdeal> {
        let mut mask = 0u64;
        for &i in vars {
            if i >= self.ambient {
                return Err(Error::VariableOutOfRange {
                    index: i + 1,
                    ambient: self.ambient,
                });
            }
            mask |= 1 << i;
        }
        self.localize(VarSet(mask))
    }

    pub fn localize(&self, vars: VarSet) -> Result<LocalizedIdeal> {
        if vars.is_empty() {
            return Err(Error::EmptySubset);
        }
        if vars.0 & !full_mask(self.ambient) != 0 {
            return Err(Error::VariableOutOfRange {
                index: 64 - vars.0.leading_zeros() as usize,
                ambient: self.ambient,
            });
        }
        let map = mask_to_vec(vars.0);
        let gens = self.gens.iter().map(|g| g.restrict(&map)).collect();
        Ok(LocalizedIdeal {
            ideal: Self::minimalized(map.len(), gens),
            dropped: self.ambient - map.len(),
            map,
        })
    }

    /// `I_{<j>}`: the ideal generated by the degree-`j` monomials of `I`.
    pub fn graded_component(&self, j: u32) -> Self {
        let mut gens = Vec::new();
        for g in &self.gens {
            let d = g.degree();
            if d > j {
                break;
            }
            for m in monomials_of_degree(self.ambient, j - d) {
                gens.push(g.mul(&m).expect("degree-bounded product"));
            }
        }
        Self::minimalized(self.ambient, gens)
    }

    /// Membership in `I_{<j>}` without building it: `u` has degree at least
    /// `j` and is divisible by a generator of degree at most `j`.
    pub fn graded_component_contains(&self, j: u32, u: &Monomial) -> bool {
        u.degree() >= j && self.gens.iter().any(|g| g.degree() <= j && g.divides(u))
    }

    fn require_squarefree_proper(&self) -> Result<()> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.is_zero() || self.is_unit() {
            return Err(Error::DegenerateIdeal);
        }
        Ok(())
    }

    /// Minimal primes of a squarefree ideal: the inclusion-minimal
    /// transversals of the generator supports, by subset enumeration over
    /// `supp(I)`. Sorted in `VarSet` order.
    pub fn minimal_primes_squarefree(&self) -> Result<Vec<VarSet>> {
        self.require_squarefree_proper()?;
        let support = mask_to_vec(self.support().0);
        if support.len() > MINIMAL_PRIMES_SUPPORT_LIMIT {
            return Err(Error::LimitExceeded {
                what: "support size for minimal primes",
                value: support.len() as u128,
                limit: MINIMAL_PRIMES_SUPPORT_LIMIT as u128,
            });
        }
        let gen_masks: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        let spread = |sub: u64| {
            support
                .iter()
                .enumerate()
                .filter(|(b, _)| sub >> b & 1 == 1)
                .fold(0u64, |m, (_, &v)| m | 1 << v)
        };
        let mut subsets: Vec<u64> = (0..1u64 << support.len()).map(spread).collect();
        subsets.sort_by_key(|m| m.count_ones());
        let mut minimal: Vec<u64> = Vec::new();
        for f in subsets {
            if gen_masks.iter().all(|g| g & f != 0) && !minimal.iter().any(|&m| m & !f == 0) {
                minimal.push(f);
            }
        }
        let mut out: Vec<VarSet> = minimal.into_iter().map(VarSet).collect();
        out.sort();
        Ok(out)
    }

    /// `P_F^k` extended to `ambient` variables.
    pub fn prime_power(prime: VarSet, k: u32, ambient: usize) -> Self {
        let vars = prime.indices();
        let gens = monomials_of_degree(vars.len(), k)
            .map(|m| m.embed(&vars, ambient))
            .collect();
        Self::minimalized(ambient, gens)
    }

    /// `I^(k)`: the intersection of `P_F^k` over the minimal primes of a
    /// squarefree ideal.
    pub fn symbolic_power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("symbolic power needs k >= 1".into()));
        }
        let primes = self.minimal_primes_squarefree()?;
        let mut acc = Self::unit(self.ambient);
        for p in primes {
            acc = acc.intersect(&Self::prime_power(p, k, self.ambient))?;
        }
        Ok(acc)
    }

    /// `I_c(G) = (x_[n] / (x_i x_j) : {i,j} ∈ E(G))`.
    pub fn complementary_edge_ideal(g: &Graph) -> Self {
        let n = g.vertex_count();
        let gens = g
            .edges()
            .into_iter()
            .map(|(i, j)| Monomial::x_of_mask(full_mask(n) & !(1 << i) & !(1 << j), n))
            .collect();
        Self::minimalized(n, gens)
    }

    /// `I(G) = (x_i x_j : {i,j} ∈ E(G))`.
    pub fn edge_ideal(g: &Graph) -> Self {
        let n = g.vertex_count();
        let gens = g
            .edges()
            .into_iter()
            .map(|(i, j)| Monomial::x_of_mask(1 << i | 1 << j, n))
            .collect();
        Self::minimalized(n, gens)
    }

    /// Squarefree Veronese-type ideal `(x_[n] / x_i : i ∈ vars)`.
    pub fn almost_complete_products(vars: VarSet, ambient: usize) -> Self {
        let all = full_mask(ambient);
        let gens = vars
            .indices()
            .into_iter()
            .map(|i| Monomial::x_of_mask(all & !(1 << i), ambient))
            .collect();
        Self::minimalized(ambient, gens)
    }
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> impl Iterator<Item = Monomial> {
    fn fill(pos: usize, left: u32, cur: &mut Vec<Exponent>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left as Exponent;
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e as Exponent;
            fill(pos + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
    } else {
        fill(0, d, &mut vec![0; n], &mut out);
    }
    out.into_iter()
}

impl LocalizedIdeal {
    /// Map a set of local variable positions back to original indices.
    pub fn lift(&self, local: VarSet) -> VarSet {
        VarSet(
            local
                .indices()
                .into_iter()
                .fold(0, |m, j| m | 1 << self.map[j]),
        )
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.ambient)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    ambient: usize,
    generators: Vec<Vec<Exponent>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            ambient: self.ambient,
            generators: self.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = IdealRepr::deserialize(d)?;
        let gens = r.generators.into_iter().map(Monomial::from_exponents).collect();
        MonomialIdeal::new(r.ambient, gens).map_err(serde::de::Error::custom)
    }
}
