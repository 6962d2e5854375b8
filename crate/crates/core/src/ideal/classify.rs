use serde::Serialize;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph};
use crate::varset::VarSet;

/// Shape of a squarefree ideal generated in degrees at least `n − 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BigDegreeCase {
    /// `I = I_c(G)`, all generators of degree `n − 2`.
    ComplementaryEdge,
    /// Squarefree Veronese type: equigenerated in degree `n − 1` or `n`.
    Matroidal,
    /// `I_c(G) + (x_[n]/x_i : i ∈ S)` with `S` nonempty and isolated in `G`.
    Mixed,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseClassification {
    pub case: BigDegreeCase,
    /// Number of ring variables.
    pub n: usize,
    /// `G` with `I_{<n-2>} = I_c(G)`; present in the complementary-edge and
    /// mixed cases.
    pub graph: Option<Graph>,
    /// Indices `i` with `x_[n]/x_i` a minimal generator (mixed case, and
    /// the matroidal case in degree `n − 1`).
    pub degree_n1_vars: Option<VarSet>,
    /// Generation degree in the matroidal case.
    pub degree: Option<u32>,
}

impl CaseClassification {
    fn not_applicable(n: usize) -> Self {
        CaseClassification {
            case: BigDegreeCase::NotApplicable,
            n,
            graph: None,
            degree_n1_vars: None,
            degree: None,
        }
    }

    /// `μ_{n-1}(I)`.
    pub fn mu_n1(&self) -> usize {
        self.degree_n1_vars.map_or(0, VarSet::len)
    }

    /// Rebuild the classified ideal.
    pub fn ideal(&self) -> Option<MonomialIdeal> {
        match self.case {
            BigDegreeCase::ComplementaryEdge | BigDegreeCase::Mixed => {
                let g = self.graph.as_ref()?;
                let extra = MonomialIdeal::almost_complete_products(
                    self.degree_n1_vars.unwrap_or_default(),
                    self.n,
                );
                MonomialIdeal::complementary_edge_ideal(g).sum(&extra).ok()
            }
            BigDegreeCase::Matroidal => {
                let d = self.degree?;
                let all = full_mask(self.n);
                if d as usize == self.n {
                    return MonomialIdeal::new(
                        self.n,
                        vec![crate::monomial::Monomial::x_of_mask(all, self.n)],
                    )
                    .ok();
                }
                Some(MonomialIdeal::almost_complete_products(self.degree_n1_vars?, self.n))
            }
            BigDegreeCase::NotApplicable => None,
        }
    }
}

/// Sort a squarefree ideal with all generator degrees `≥ n − 2` (`n` the
/// ambient variable count) into the complementary-edge, matroidal or mixed
/// shape. Other ideals, including zero, unit and `n < 3`, are
/// `NotApplicable`.
pub fn classify_big_degree(ideal: &MonomialIdeal) -> Result<CaseClassification> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ambient();
    if n < 3 || ideal.is_zero() || ideal.is_unit() {
        return Ok(CaseClassification::not_applicable(n));
    }
    let n32 = n as u32;
    let all = full_mask(n);
    if ideal.indeg().is_some_and(|d| d + 2 < n32) {
        return Ok(CaseClassification::not_applicable(n));
    }
    if let Some(d) = ideal.equigenerated_degree().filter(|&d| d >= n32 - 1) {
        let missing = ideal
            .generators()
            .iter()
            .fold(0, |m, g| m | (all & !g.support_mask()));
        return Ok(CaseClassification {
            case: BigDegreeCase::Matroidal,
            n,
            graph: None,
            degree_n1_vars: (d < n32).then_some(VarSet(missing)),
            degree: Some(d),
        });
    }
    if ideal.max_degree() == Some(n32) {
        // x_[n] next to a smaller generator would not be minimal.
        return Ok(CaseClassification::not_applicable(n));
    }

    let mut edges = Vec::new();
    let mut n1 = 0u64;
    for g in ideal.generators() {
        let missing = all & !g.support_mask();
        if g.degree() + 2 == n32 {
            let i = missing.trailing_zeros() as usize;
            let j = 63 - missing.leading_zeros() as usize;
            edges.push((i, j));
        } else {
            n1 |= missing;
        }
    }
    let graph = Graph::from_edges(n, &edges)?;
    if let Some(i) = (0..n).find(|&i| n1 >> i & 1 == 1 && graph.degree(i) > 0) {
        return Err(Error::ReconstructionMismatch(format!(
            "x_[n]/x{} is a generator but vertex {} has an edge",
            i + 1,
            i + 1
        )));
    }
    let cls = CaseClassification {
        case: if n1 == 0 {
            BigDegreeCase::ComplementaryEdge
        } else {
            BigDegreeCase::Mixed
        },
        n,
        graph: Some(graph),
        degree_n1_vars: (n1 != 0).then_some(VarSet(n1)),
        degree: None,
    };
    if cls.ideal().as_ref() != Some(ideal) {
        return Err(Error::ReconstructionMismatch(ideal.to_string()));
    }
    Ok(cls)
}
