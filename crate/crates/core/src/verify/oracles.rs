//! Witness searches over the divisors of `lcm(G(I))`.
//!
//! If `I : u = P` then `I : gcd(u, lcm(G(I))) = P` as well, and the
//! truncated witness has no larger degree, so the finite search loses
//! nothing.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exponent, Monomial};
use crate::resolution::DivisorBox;
use crate::varset::VarSet;

/// Default cap on the number of divisors of `lcm(G(I))` searched.
pub const ORACLE_LIMIT: usize = 1_000_000;

/// A monomial `u` with `I : u = P_F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VWitness {
    pub v: u32,
    pub witness: Monomial,
    pub prime: VarSet,
}

struct Search {
    dbox: DivisorBox,
}

impl Search {
    /// `None` for the unit ideal.
    fn new(ideal: &MonomialIdeal, limit: usize) -> Result<Option<Self>> {
        if ideal.is_zero() {
            return Err(Error::DegenerateIdeal);
        }
        if ideal.is_unit() {
            return Ok(None);
        }
        Ok(Some(Search {
            dbox: DivisorBox::new(ideal, limit)?,
        }))
    }

    /// Visit every divisor of the lcm with its exponent vector.
    fn for_each(&self, mut f: impl FnMut(usize, &[Exponent])) {
        let b = &self.dbox;
        let mut a = vec![0 as Exponent; b.n];
        for idx in 0..b.len() {
            f(idx, &a);
            for i in 0..b.n {
                if a[i] < b.top[i] {
                    a[i] += 1;
                    break;
                }
                a[i] = 0;
            }
        }
    }

    /// `F` with `I : u = P_F`, if that colon is prime. Variables with
    /// `u_i = top_i` can only lie in `I : u` when `u ∈ I`.
    fn prime_colon(&self, idx: usize, a: &[Exponent]) -> Option<u64> {
        let b = &self.dbox;
        if b.member[idx] {
            return None;
        }
        let mut f = 0u64;
        let mut raised = idx;
        for i in 0..b.n {
            if a[i] < b.top[i] && b.member[idx + b.stride[i]] {
                f |= 1 << i;
            } else {
                raised += (b.top[i] - a[i]) as usize * b.stride[i];
            }
        }
        // I : u ⊆ P_F unless some element of I : u avoids F.
        (f != 0 && !b.member[raised]).then_some(f)
    }

    fn is_socle(&self, idx: usize, a: &[Exponent]) -> bool {
        let b = &self.dbox;
        !b.member[idx] && (0..b.n).all(|i| a[i] < b.top[i] && b.member[idx + b.stride[i]])
    }
}

/// Least degree first, then the lex-largest exponent vector.
fn better(a: &[Exponent], b: &[Exponent]) -> bool {
    let (da, db) = (
        a.iter().map(|&e| e as u32).sum::<u32>(),
        b.iter().map(|&e| e as u32).sum::<u32>(),
    );
    da < db || (da == db && a.cmp(b) == Ordering::Greater)
}

pub fn ass_oracle(ideal: &MonomialIdeal) -> Result<Vec<VarSet>> {
    ass_oracle_with_limit(ideal, ORACLE_LIMIT)
}

/// All `F` with `I : u = P_F` for some `u | lcm(G(I))`, sorted. The unit
/// ideal has none.
pub fn ass_oracle_with_limit(ideal: &MonomialIdeal, limit: usize) -> Result<Vec<VarSet>> {
    let Some(s) = Search::new(ideal, limit)? else {
        return Ok(Vec::new());
    };
    let mut found = std::collections::BTreeSet::new();
    s.for_each(|idx, a| {
        if let Some(f) = s.prime_colon(idx, a) {
            found.insert(VarSet(f));
        }
    });
    Ok(found.into_iter().collect())
}

pub fn depth_zero_oracle(ideal: &MonomialIdeal) -> Result<Option<Monomial>> {
    depth_zero_oracle_with_limit(ideal, ORACLE_LIMIT)
}

/// A socle witness `u ∉ I` with `x_i u ∈ I` for every ambient variable,
/// of least degree and then lex-largest. `None` when `S/I` has positive
/// depth (or is zero).
pub fn depth_zero_oracle_with_limit(ideal: &MonomialIdeal, limit: usize) -> Result<Option<Monomial>> {
    let Some(s) = Search::new(ideal, limit)? else {
        return Ok(None);
    };
    let mut best: Option<Vec<Exponent>> = None;
    s.for_each(|idx, a| {
        if s.is_socle(idx, a) && best.as_deref().is_none_or(|b| better(a, b)) {
            best = Some(a.to_vec());
        }
    });
    Ok(best.map(Monomial::from_exponents))
}

pub fn v_oracle(ideal: &MonomialIdeal) -> Result<VWitness> {
    v_search(ideal, None, ORACLE_LIMIT)
}

/// `v_P(I)` for `P = P_F`; errors with `NotAssociated` if no witness exists.
pub fn local_v_oracle(ideal: &MonomialIdeal, f: VarSet) -> Result<VWitness> {
    v_search(ideal, Some(f), ORACLE_LIMIT)
}

pub fn v_oracle_with_limit(ideal: &MonomialIdeal, limit: usize) -> Result<VWitness> {
    v_search(ideal, None, limit)
}

fn v_search(ideal: &MonomialIdeal, only: Option<VarSet>, limit: usize) -> Result<VWitness> {
    let not_associated = || Error::NotAssociated(only.map(VarSet::labels).unwrap_or_default());
    let s = Search::new(ideal, limit)?.ok_or(Error::DegenerateIdeal)?;
    let mut best: Option<(Vec<Exponent>, u64)> = None;
    s.for_each(|idx, a| {
        if best.as_ref().is_some_and(|(b, _)| !better(a, b)) {
            return;
        }
        if let Some(f) = s.prime_colon(idx, a) {
            if only.is_none_or(|p| p.0 == f) {
                best = Some((a.to_vec(), f));
            }
        }
    });
    let (a, f) = best.ok_or_else(not_associated)?;
    let witness = Monomial::from_exponents(a);
    Ok(VWitness {
        v: witness.degree(),
        witness,
        prime: VarSet(f),
    })
}

/// Every `F ⊆ supp(I)` with `depth S_F/I(P_F)^k = 0` for some `k ≤ k_max`,
/// paired with the least such `k`. Variables outside the support never
/// qualify.
pub fn stable_ass_localization(ideal: &MonomialIdeal, k_max: u32) -> Result<Vec<(VarSet, u32)>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::DegenerateIdeal);
    }
    let support = ideal.support().0;
    let mut out = Vec::new();
    let mut f = support;
    while f != 0 {
        let local = ideal.localize(VarSet(f))?.ideal;
        if !local.is_unit() {
            let mut power = local.clone();
            for k in 1..=k_max {
                if k > 1 {
                    power = power.product(&local)?;
                }
                if depth_zero_oracle(&power)?.is_some() {
                    out.push((VarSet(f), k));
                    break;
                }
            }
        }
        f = (f - 1) & support;
    }
    out.sort();
    Ok(out)
}

/// A prime of `Ass(I^k)` missing from `Ass(I^(k+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceViolation {
    pub k: u32,
    pub prime: VarSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceOutcome {
    pub holds: bool,
    /// `Ass(I^k)` at index `k − 1`.
    pub ass: Vec<Vec<VarSet>>,
    pub violation: Option<PersistenceViolation>,
}

/// First break in the chain `ass_by_k[0] ⊆ ass_by_k[1] ⊆ ...`, with
/// `ass_by_k[k−1]` read as `Ass(I^k)`.
pub fn first_persistence_violation(ass_by_k: &[Vec<VarSet>]) -> Option<PersistenceViolation> {
    ass_by_k.windows(2).enumerate().find_map(|(j, w)| {
        w[0].iter()
            .find(|p| !w[1].contains(p))
            .map(|&prime| PersistenceViolation {
                k: j as u32 + 1,
                prime,
            })
    })
}

pub fn persistence_check(ideal: &MonomialIdeal, k_max: u32) -> Result<PersistenceOutcome> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::DegenerateIdeal);
    }
    let ass = ideal
        .powers(k_max)?
        .iter()
        .map(ass_oracle)
        .collect::<Result<Vec<_>>>()?;
    let violation = first_persistence_violation(&ass);
    Ok(PersistenceOutcome {
        holds: violation.is_none(),
        ass,
        violation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongPersistenceOutcome {
    pub holds: bool,
    /// Whether `I^(k+1) : I = I^k`, at index `k − 1`.
    pub per_k: Vec<bool>,
}

/// Records `I^(k+1) : I = I^k` for `k = 1..=k_max`.
pub fn strong_persistence_check(ideal: &MonomialIdeal, k_max: u32) -> Result<StrongPersistenceOutcome> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::DegenerateIdeal);
    }
    let powers = ideal.powers(k_max + 1)?;
    let per_k = (0..k_max as usize)
        .map(|j| Ok(powers[j + 1].colon_ideal(ideal)? == powers[j]))
        .collect::<Result<Vec<_>>>()?;
    Ok(StrongPersistenceOutcome {
        holds: per_k.iter().all(|&b| b),
        per_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    fn id(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    fn labels(v: &[VarSet]) -> Vec<Vec<usize>> {
        v.iter().map(|s| s.labels()).collect()
    }

    fn paw() -> MonomialIdeal {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        MonomialIdeal::complementary_edge_ideal(&g)
    }

    /// Ass by explicit colon ideals over every divisor of the lcm.
    fn ass_by_colon(i: &MonomialIdeal) -> Vec<VarSet> {
        let mut out: Vec<VarSet> = i
            .lcm_of_generators()
            .divisors()
            .filter_map(|u| i.colon(&u).unwrap().as_monomial_prime())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn ass_examples() {
        assert_eq!(
            labels(&ass_oracle(&id("(x1*x2, x3*x4)", 4)).unwrap()),
            vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        assert_eq!(labels(&ass_oracle(&id("(x1, x2, x3)", 3)).unwrap()), vec![vec![1, 2, 3]]);
        let p = VarSet::from_labels(&[1, 2, 3, 4]);
        assert!(!ass_oracle(&paw()).unwrap().contains(&p));
        assert!(ass_oracle(&paw().pow(2).unwrap()).unwrap().contains(&p));
        assert!(ass_oracle(&MonomialIdeal::unit(3)).unwrap().is_empty());
        assert!(ass_oracle(&MonomialIdeal::zero(3)).is_err());
        assert!(matches!(
            ass_oracle_with_limit(&id("(x1^9*x2^9)", 2), 10),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn depth_zero_examples() {
        let w = depth_zero_oracle(&id("(x1^2, x1*x2, x2^2)", 2)).unwrap();
        assert_eq!(w, Some(Monomial::parse("x1", 2).unwrap()));
        assert_eq!(depth_zero_oracle(&id("(x1*x2)", 2)).unwrap(), None);
        for p in 3..=5usize {
            let ver = MonomialIdeal::almost_complete_products(VarSet((1 << p) - 1), p);
            let w = depth_zero_oracle(&ver.pow(p as u32 - 1).unwrap()).unwrap().unwrap();
            let full = Monomial::x_of_mask((1 << p) - 1, p);
            assert_eq!(w, full.pow(p as u32 - 2).unwrap());
            assert_eq!(depth_zero_oracle(&ver.pow(p as u32 - 2).unwrap()).unwrap(), None);
        }
    }

    #[test]
    fn v_examples() {
        let k3 = MonomialIdeal::complementary_edge_ideal(&Graph::complete(3).unwrap());
        let w = v_oracle(&k3).unwrap();
        assert_eq!((w.v, w.witness.is_one()), (0, true));
        let m2 = MonomialIdeal::complementary_edge_ideal(&Graph::matching(2).unwrap());
        let w = v_oracle(&m2).unwrap();
        assert_eq!(w.v, 2);
        assert_eq!(w.witness, Monomial::parse("x1*x3", 4).unwrap());
        assert_eq!(w.prime, VarSet::from_labels(&[2, 4]));
        assert_eq!(v_oracle(&paw()).unwrap().v, 1);
        assert_eq!(v_oracle(&paw().pow(2).unwrap()).unwrap().v, 3);
        let local = local_v_oracle(&m2, VarSet::from_labels(&[1, 3])).unwrap();
        assert_eq!((local.v, local.prime), (2, VarSet::from_labels(&[1, 3])));
        assert!(matches!(
            local_v_oracle(&m2, VarSet::from_labels(&[1, 2])),
            Err(Error::NotAssociated(_))
        ));
    }

    #[test]
    fn stable_localization_examples() {
        let c4 = MonomialIdeal::complementary_edge_ideal(&Graph::cycle(4).unwrap());
        let s = stable_ass_localization(&c4, 3).unwrap();
        assert_eq!(
            s,
            vec![(VarSet::from_labels(&[1, 3]), 1), (VarSet::from_labels(&[2, 4]), 1)]
        );
        let s = stable_ass_localization(&paw(), 3).unwrap();
        assert!(s.contains(&(VarSet::from_labels(&[1, 2, 3, 4]), 2)));
        let p3 = MonomialIdeal::complementary_edge_ideal(&Graph::path(3).unwrap());
        assert_eq!(stable_ass_localization(&p3, 3).unwrap(), vec![(VarSet::from_labels(&[1, 3]), 1)]);
    }

    #[test]
    fn persistence() {
        let c4 = MonomialIdeal::complementary_edge_ideal(&Graph::cycle(4).unwrap());
        assert!(persistence_check(&c4, 3).unwrap().holds);
        assert!(persistence_check(&id("(x1*x2, x3*x4)", 4), 3).unwrap().holds);
        // Synthetic chain with a prime dropped at k = 2.
        let a = VarSet::from_labels(&[1, 2]);
        let b = VarSet::from_labels(&[3]);
        let chain = vec![vec![a], vec![a, b], vec![b]];
        assert_eq!(
            first_persistence_violation(&chain),
            Some(PersistenceViolation { k: 2, prime: a })
        );
        assert_eq!(first_persistence_violation(&chain[..2]), None);
    }

    #[test]
    fn strong_persistence() {
        let k3 = MonomialIdeal::complementary_edge_ideal(&Graph::complete(3).unwrap());
        assert!(strong_persistence_check(&k3, 3).unwrap().holds);
        assert!(strong_persistence_check(&id("(x1, x2)", 2), 3).unwrap().holds);
        let c4 = MonomialIdeal::complementary_edge_ideal(&Graph::cycle(4).unwrap());
        assert_eq!(strong_persistence_check(&c4, 3).unwrap().per_k.len(), 3);
    }

    #[test]
    fn squarefree_ass_is_minimal_primes() {
        for g in crate::graph::enumerate_labeled_graphs(5).unwrap().skip(1) {
            let i = MonomialIdeal::complementary_edge_ideal(&g);
            assert_eq!(ass_oracle(&i).unwrap(), i.minimal_primes_squarefree().unwrap(), "{g}");
        }
    }

    fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..=4).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0u16..=3, n), 1..6).prop_map(move |gens| {
                let gens = gens.into_iter().map(|e| Monomial::from_exponents(e as Vec<Exponent>));
                MonomialIdeal::new(n, gens.collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn box_search_matches_explicit_colons(i in small_ideal()) {
            prop_assert_eq!(ass_oracle(&i).unwrap(), ass_by_colon(&i));
        }

        #[test]
        fn v_witness_is_a_prime_colon(i in small_ideal()) {
            prop_assume!(!i.is_unit());
            let w = v_oracle(&i).unwrap();
            prop_assert_eq!(i.colon(&w.witness).unwrap().as_monomial_prime(), Some(w.prime));
            let least = i.lcm_of_generators().divisors()
                .filter(|u| i.colon(u).unwrap().as_monomial_prime().is_some())
                .map(|u| u.degree())
                .min();
            prop_assert_eq!(Some(w.v), least);
        }
    }
}
