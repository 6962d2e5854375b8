//! Multigraded Betti numbers of monomial ideals from upper-Koszul
//! homology, and the invariants derived from them.

mod complex;
mod lattice;
mod quotients;

pub use complex::{
    reduced_homology_ranks, reduced_homology_ranks_with_limit, upper_koszul, SimplicialComplex,
    HOMOLOGY_GROUND_LIMIT,
};
pub use lattice::BOX_LIMIT;
pub use quotients::{
    has_linear_quotients, has_linear_quotients_with, LinearQuotientsOptions,
    LINEAR_QUOTIENTS_GENERATOR_LIMIT,
};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::Exponent;
use complex::homology_of_local;
pub(crate) use lattice::DivisorBox;
use lattice::is_cone;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub multidegree: Vec<Exponent>,
    pub rank: usize,
}

/// Nonzero multigraded Betti numbers `β_{i,a}(I)` over `F_p`, sorted by
/// `(i, |a|, a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub characteristic: u32,
    pub entries: Vec<BettiEntry>,
}

/// Regularity of `I`, projective dimension and depth of `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegPdDepth {
    pub reg: u32,
    pub pd: usize,
    /// Depth of `S/I` with `S` on all ambient variables.
    pub depth: usize,
    /// Depth in the polynomial ring on `supp(I)` only.
    pub depth_support: usize,
}

impl BettiTable {
    /// `β_{i,j} = Σ_{|a| = j} β_{i,a}`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry((e.i, degree(&e.multidegree))).or_insert(0) += e.rank;
        }
        out
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|e| e.i == i).map(|e| e.rank).sum()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.i).max()
    }

    /// `max{|a| − i}`.
    pub fn regularity(&self) -> Option<u32> {
        self.entries
            .iter()
            .map(|e| degree(&e.multidegree) - e.i as u32)
            .max()
    }

    /// Macaulay2-style table of the ideal: columns `i`, rows `j − i`.
    pub fn pretty(&self) -> String {
        let graded = self.graded();
        let Some(top) = self.max_index() else {
            return "(empty)\n".into();
        };
        let rows: Vec<u32> = {
            let mut r: Vec<u32> = graded.keys().map(|&(i, j)| j - i as u32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let (lo, hi) = (rows[0], *rows.last().unwrap());
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=top).map(|i| i.to_string()));
        cells.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=top).map(|i| self.total(i).to_string()));
        cells.push(totals);
        for r in lo..=hi {
            let mut row = vec![format!("{r}:")];
            for i in 0..=top {
                let v = graded.get(&(i, r + i as u32)).copied().unwrap_or(0);
                row.push(if v == 0 { ".".into() } else { v.to_string() });
            }
            cells.push(row);
        }
        let width: Vec<usize> = (0..=top + 1)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in cells {
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{cell:>w$}", w = width[c]);
            }
            out.push('\n');
        }
        out
    }
}

fn degree(a: &[Exponent]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::DegenerateIdeal);
    }
    Ok(())
}

/// Betti table of `I` over `F`, from the homology of the upper-Koszul
/// complex at every point of the lcm lattice.
pub fn betti_table<F: Field>(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_table_with_limit::<F>(ideal, BOX_LIMIT)
}

pub fn betti_table_with_limit<F: Field>(ideal: &MonomialIdeal, limit: usize) -> Result<BettiTable> {
    require_proper(ideal)?;
    let dbox = DivisorBox::new(ideal, limit)?;
    let points: Vec<usize> = (0..dbox.len()).filter(|&k| dbox.in_lattice[k]).collect();
    let mut entries: Vec<BettiEntry> = points
        .par_iter()
        .flat_map_iter(|&idx| {
            let (support, faces) = dbox.koszul_faces(idx);
            let ranks = if is_cone(support.len(), &faces) {
                Vec::new()
            } else {
                homology_of_local::<F>(&faces)
            };
            let a = dbox.point(idx);
            ranks
                .into_iter()
                .enumerate()
                .filter(|&(_, r)| r > 0)
                .map(move |(i, rank)| BettiEntry {
                    i,
                    multidegree: a.clone(),
                    rank,
                })
        })
        .collect();
    entries.sort_by(|x, y| {
        (x.i, degree(&x.multidegree), &x.multidegree).cmp(&(y.i, degree(&y.multidegree), &y.multidegree))
    });
    Ok(BettiTable {
        characteristic: F::CHARACTERISTIC,
        entries,
    })
}

/// Betti table over `F_p` for a runtime prime in {2, 3, 5, 7, 11, 13}.
pub fn betti_table_p(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
    crate::with_prime_field!(p, F => betti_table::<F>(ideal)?)
}

pub fn reg_pd_depth(table: &BettiTable, ideal: &MonomialIdeal) -> Result<RegPdDepth> {
    require_proper(ideal)?;
    let reg = table.regularity().ok_or(Error::DegenerateIdeal)?;
    let pd = 1 + table.max_index().ok_or(Error::DegenerateIdeal)?;
    Ok(RegPdDepth {
        reg,
        pd,
        depth: ideal.ambient() - pd,
        depth_support: ideal.support().len() - pd,
    })
}

pub fn reg_pd_depth_p(ideal: &MonomialIdeal, p: u32) -> Result<RegPdDepth> {
    reg_pd_depth(&betti_table_p(ideal, p)?, ideal)
}

/// For an equigenerated ideal in degree `d`: `reg I = d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, p: u32) -> Result<bool> {
    require_proper(ideal)?;
    let d = ideal.equigenerated_degree().ok_or(Error::NotEquigenerated)?;
    Ok(reg_pd_depth_p(ideal, p)?.reg == d)
}

/// `I_{<j>}` has a linear resolution for each generator degree `j`. Above
/// the top generator degree `I_{<j+1>} = m I_{<j>}`, which keeps a linear
/// resolution, so those components need no check.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, p: u32) -> Result<bool> {
    require_proper(ideal)?;
    let (lo, hi) = (ideal.indeg().unwrap(), ideal.max_degree().unwrap());
    for j in lo..=hi {
        if !has_linear_resolution(&ideal.graded_component(j), p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::{F2, F3};

    fn id(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    fn entries(t: &BettiTable) -> Vec<(usize, Vec<Exponent>, usize)> {
        t.entries.iter().map(|e| (e.i, e.multidegree.clone(), e.rank)).collect()
    }

    #[test]
    fn koszul_pair() {
        let t = betti_table::<F2>(&id("(x1, x2)", 2)).unwrap();
        assert_eq!(
            entries(&t),
            vec![(0, vec![0, 1], 1), (0, vec![1, 0], 1), (1, vec![1, 1], 1)]
        );
        let r = reg_pd_depth(&t, &id("(x1, x2)", 2)).unwrap();
        assert_eq!((r.reg, r.pd, r.depth), (1, 2, 0));
    }

    #[test]
    fn one_syzygy_at_lcm() {
        let t = betti_table::<F3>(&id("(x1*x2, x2*x3)", 3)).unwrap();
        assert_eq!(t.total(0), 2);
        assert_eq!(entries(&t)[2..], [(1, vec![1, 1, 1], 1)]);
        let ic = MonomialIdeal::complementary_edge_ideal(&Graph::matching(2).unwrap());
        let t = betti_table::<F2>(&ic).unwrap();
        assert_eq!(entries(&t)[2..], [(1, vec![1, 1, 1, 1], 1)]);
        assert_eq!(reg_pd_depth(&t, &ic).unwrap().reg, 3);
    }

    #[test]
    fn hypersurface_depth() {
        let i = id("(x1*x2)", 4);
        let r = reg_pd_depth_p(&i, 2).unwrap();
        assert_eq!((r.reg, r.pd, r.depth, r.depth_support), (2, 1, 3, 1));
    }

    #[test]
    fn generators_biject_with_degree_zero() {
        let i = id("(x1^2*x2, x1*x2^2, x2*x3^3, x1*x3)", 3);
        let t = betti_table::<F2>(&i).unwrap();
        let gens: Vec<_> = t
            .entries
            .iter()
            .filter(|e| e.i == 0)
            .map(|e| crate::Monomial::from_exponents(e.multidegree.clone()))
            .collect();
        let mut expect = i.generators().to_vec();
        expect.sort_by(|a, b| (a.degree(), a.exponents()).cmp(&(b.degree(), b.exponents())));
        assert_eq!(gens, expect);
        assert!(t.entries.iter().filter(|e| e.i == 0).all(|e| e.rank == 1));
    }

    #[test]
    fn maximal_ideal_powers() {
        let m3 = MonomialIdeal::complementary_edge_ideal(&Graph::complete(3).unwrap());
        for k in 1..=3 {
            let p = m3.pow(k).unwrap();
            let r = reg_pd_depth_p(&p, 3).unwrap();
            assert_eq!((r.reg, r.pd, r.depth), (k, 3, 0));
            assert!(has_linear_resolution(&p, 2).unwrap());
        }
    }

    #[test]
    fn linearity_checks() {
        assert!(has_linear_resolution(&id("(x1, x2)", 2), 2).unwrap());
        let ic = MonomialIdeal::complementary_edge_ideal(&Graph::matching(2).unwrap());
        assert!(!has_linear_resolution(&ic, 2).unwrap());
        assert!(!is_componentwise_linear(&ic, 3).unwrap());
        assert!(is_componentwise_linear(&id("(x1, x2*x3)", 3), 2).unwrap());
        assert!(is_componentwise_linear(&id("(x1, x3, x4)", 4), 2).unwrap());
        assert_eq!(
            has_linear_resolution(&id("(x1, x2*x3)", 3), 2),
            Err(Error::NotEquigenerated)
        );
        assert_eq!(betti_table::<F2>(&MonomialIdeal::unit(2)), Err(Error::DegenerateIdeal));
    }

    #[test]
    fn pretty_table() {
        let ic = MonomialIdeal::complementary_edge_ideal(&Graph::cycle(4).unwrap());
        let t = betti_table_p(&ic, 2).unwrap();
        assert_eq!(t.pretty(), "       0 1 2\ntotal: 4 4 1\n    2: 4 4 1\n");
        let js = serde_json::to_string(&betti_table_p(&id("(x1, x2)", 2), 2).unwrap()).unwrap();
        assert!(js.starts_with(r#"{"characteristic":2,"entries":[{"i":0,"multidegree":[0,1],"rank":1}"#));
    }
}
