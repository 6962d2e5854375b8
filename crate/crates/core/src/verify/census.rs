//! Exhaustive families of small graphs and ideals.

use crate::error::Result;
use crate::graph::{enumerate_labeled_graphs, full_mask, Graph};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::varset::VarSet;

/// Labeled graphs on `n` vertices with at least one edge, in census order.
pub fn edged_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_labeled_graphs(n)?.skip(1).collect())
}

/// Labeled graphs with at least one edge on `lo..=hi` vertices.
pub fn edged_graphs_between(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(edged_graphs(n)?);
    }
    Ok(out)
}

/// `I_c(G) + (x_[n]/x_i : i ∈ S)` for `S` a set of isolated vertices.
pub fn with_almost_complete(g: &Graph, s: VarSet) -> Result<MonomialIdeal> {
    MonomialIdeal::complementary_edge_ideal(g)
        .sum(&MonomialIdeal::almost_complete_products(s, g.vertex_count()))
}

/// Every nonzero squarefree ideal on `n` variables generated in degrees
/// `≥ n − 2`: `I_c(G) + (x_[n]/x_i : i ∈ S)` over all graphs `G` and sets
/// `S` of isolated vertices, then `(x_[n])`.
pub fn big_degree_census(n: usize) -> Result<Vec<MonomialIdeal>> {
    let mut out = Vec::new();
    for g in enumerate_labeled_graphs(n)? {
        let iso = g.isolated().into_iter().fold(0u64, |m, i| m | 1 << i);
        let mut s = iso;
        loop {
            if g.edge_count() > 0 || s != 0 {
                out.push(with_almost_complete(&g, VarSet(s))?);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & iso;
        }
    }
    out.push(MonomialIdeal::new(n, vec![Monomial::x_of_mask(full_mask(n), n)])?);
    Ok(out)
}
