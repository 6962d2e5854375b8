//! Closed-form predictions for complementary edge ideals and the other
//! squarefree ideals generated in degrees `≥ n − 2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph};
use crate::ideal::{BigDegreeCase, CaseClassification, MonomialIdeal};
use crate::monomial::Monomial;
use crate::varset::VarSet;

/// Predicted stable associated primes of `I_c(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssPrediction {
    pub stable_set: Vec<VarSet>,
    /// Power from which each stable prime is claimed to stay associated.
    /// An upper bound, not a proven exact value.
    pub per_prime_entry_bound: Vec<(VarSet, u32)>,
    pub astab_bound: u32,
}

impl AssPrediction {
    pub fn entry_bound(&self, f: VarSet) -> Option<u32> {
        self.per_prime_entry_bound
            .iter()
            .find(|(g, _)| *g == f)
            .map(|&(_, k)| k)
    }

    /// Largest entry bound over the stable set.
    pub fn max_entry_bound(&self) -> u32 {
        self.per_prime_entry_bound
            .iter()
            .map(|&(_, k)| k)
            .max()
            .unwrap_or(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthPrediction {
    pub stable_depth: usize,
    pub dstab_bound: u32,
}

fn require_formula_graph(g: &Graph) -> Result<()> {
    if g.vertex_count() < 3 {
        return Err(Error::Precondition(format!(
            "formula needs at least 3 vertices, got {}",
            g.vertex_count()
        )));
    }
    require_edges(g)
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("formula needs a graph with an edge".into()));
    }
    Ok(())
}

/// Singletons of isolated vertices, and every `F` of size at least 2 inside
/// the non-isolated vertices with `b̃(G|_F) = 0`.
pub fn ass_infinity(g: &Graph) -> Result<AssPrediction> {
    require_formula_graph(g)?;
    let n = g.vertex_count();
    let mut stable: Vec<(VarSet, u32)> = g
        .isolated()
        .into_iter()
        .map(|i| (VarSet(1 << i), 1))
        .collect();
    let core = g.non_isolated_mask();
    let mut f = core;
    while f != 0 {
        if f.count_ones() >= 2 && g.b_tilde_within(f) == 0 {
            stable.push((VarSet(f), f.count_ones().saturating_sub(2).max(1)));
        }
        f = (f - 1) & core;
    }
    stable.sort();
    Ok(AssPrediction {
        stable_set: stable.iter().map(|&(f, _)| f).collect(),
        per_prime_entry_bound: stable,
        astab_bound: n as u32 - 2,
    })
}

/// `Ass(I_c(G))`: isolated singletons, the non-edges of `H` and the
/// triangles of `H`, with `H` the graph on the non-isolated vertices.
pub fn ass_first_power(g: &Graph) -> Result<Vec<VarSet>> {
    require_edges(g)?;
    let core = g.non_isolated_mask();
    let mut out: Vec<VarSet> = g.isolated().into_iter().map(|i| VarSet(1 << i)).collect();
    for (i, j) in g.complement().edges() {
        if core >> i & 1 == 1 && core >> j & 1 == 1 {
            out.push(VarSet(1 << i | 1 << j));
        }
    }
    out.extend(
        g.triangles()
            .into_iter()
            .map(|t| VarSet(t.iter().fold(0, |m, &v| m | 1 << v))),
    );
    out.sort();
    Ok(out)
}

/// `A_F`: vertices of `F` isolated in `G|_F` but with a neighbour in `G`.
pub fn localization_extra_vertices(g: &Graph, f: VarSet) -> VarSet {
    VarSet(
        f.indices()
            .into_iter()
            .filter(|&i| g.neighbors(i) != 0 && g.neighbors(i) & f.0 == 0)
            .fold(0, |m, i| m | 1 << i),
    )
}

/// `I_c(G)(P_F)` in the ring on the variables of `F` (in increasing
/// order): `I_c(G|_F) + (x_F/x_i : i ∈ A_F)` when an edge meets `F`, else
/// `(x_F)`.
pub fn localization_formula(g: &Graph, f: VarSet) -> Result<MonomialIdeal> {
    let sub = g.induced_by_mask(f.0)?;
    let m = sub.map.len();
    if g.non_isolated_mask() & f.0 == 0 {
        return MonomialIdeal::new(m, vec![Monomial::x_of_mask(full_mask(m), m)]);
    }
    let a_f = localization_extra_vertices(g, f);
    let local_a = VarSet(
        sub.map
            .iter()
            .enumerate()
            .filter(|&(_, &v)| a_f.contains(v))
            .fold(0, |acc, (k, _)| acc | 1 << k),
    );
    MonomialIdeal::complementary_edge_ideal(&sub.graph)
        .sum(&MonomialIdeal::almost_complete_products(local_a, m))
}

fn classified_graph(cls: &CaseClassification) -> Result<&Graph> {
    cls.graph
        .as_ref()
        .ok_or_else(|| Error::Precondition("classification carries no graph".into()))
}

/// Closed-form `reg I^k`.
pub fn reg_closed_form(cls: &CaseClassification, k: u32) -> Result<u32> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let n = cls.n as u32;
    match cls.case {
        BigDegreeCase::Matroidal => {
            let d = cls.degree.ok_or_else(|| Error::Precondition("missing degree".into()))?;
            Ok(d * k)
        }
        BigDegreeCase::ComplementaryEdge => {
            let c = classified_graph(cls)?.component_summary().c as u32;
            if k + 2 <= c {
                Ok((n - 1) * k)
            } else {
                Ok((n - 2) * k + c - 1)
            }
        }
        BigDegreeCase::Mixed => Ok((n - 1) * k),
        BigDegreeCase::NotApplicable => Err(Error::Precondition(
            "regularity formula needs a classified ideal".into(),
        )),
    }
}

/// Limit depth of `S/I^k` and the power from which it is reached.
pub fn depth_and_dstab_closed_form(cls: &CaseClassification) -> Result<DepthPrediction> {
    let n = cls.n as u32;
    match cls.case {
        BigDegreeCase::ComplementaryEdge => Ok(DepthPrediction {
            stable_depth: classified_graph(cls)?.component_summary().b,
            dstab_bound: n - 1,
        }),
        BigDegreeCase::Mixed => Ok(DepthPrediction {
            stable_depth: classified_graph(cls)?.component_summary().b - cls.mu_n1(),
            dstab_bound: n - 2,
        }),
        BigDegreeCase::Matroidal | BigDegreeCase::NotApplicable => Err(Error::Precondition(
            format!("no depth formula for the {:?} case", cls.case),
        )),
    }
}

/// `v(I_c(G)^k)`: `(n−2)k` for `tK_2` with `t ≥ 2` and no isolated
/// vertices, `(n−2)k − 1` otherwise.
pub fn v_closed_form(g: &Graph, k: u32) -> Result<u32> {
    require_formula_graph(g)?;
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let n = g.vertex_count() as u32;
    let matching = g.isolated().is_empty() && g.is_perfect_matching_graph() && g.edge_count() >= 2;
    Ok(if matching { (n - 2) * k } else { (n - 2) * k - 1 })
}

/// The graphs whose non-isolated part is `K_2, K_3, P_3, 2K_2, P_4` or `C_4`.
pub fn symbolic_equals_ordinary_class(g: &Graph) -> Result<bool> {
    require_edges(g)?;
    let core = g.induced_by_mask(g.non_isolated_mask())?.graph;
    let listed = [
        Graph::complete(2)?,
        Graph::complete(3)?,
        Graph::path(3)?,
        Graph::matching(2)?,
        Graph::path(4)?,
        Graph::cycle(4)?,
    ];
    for h in &listed {
        if h.vertex_count() == core.vertex_count()
            && h.edge_count() == core.edge_count()
            && core.is_isomorphic(h)?
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether every power has linear quotients (equivalently is
/// componentwise linear): always in the matroidal case, otherwise exactly
/// when `c(G) = 1`.
pub fn linear_powers_predicate(cls: &CaseClassification) -> Result<bool> {
    match cls.case {
        BigDegreeCase::Matroidal => Ok(true),
        BigDegreeCase::ComplementaryEdge | BigDegreeCase::Mixed => {
            Ok(classified_graph(cls)?.component_summary().c == 1)
        }
        BigDegreeCase::NotApplicable => Err(Error::Precondition(
            "linear powers predicate needs a classified ideal".into(),
        )),
    }
}

pub fn vstab(g: &Graph) -> Result<u32> {
    require_formula_graph(g)?;
    Ok(1)
}
