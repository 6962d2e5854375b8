//! Finite simple graphs on at most 64 vertices.
//!
//! Vertices are 0-based internally; the text formats in [`io`] and all
//! `Display` output are 1-based.

pub mod io;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Default vertex limit for brute-force isomorphism.
pub const ISOMORPHISM_LIMIT: usize = 8;

/// Default vertex limit for exhaustive enumeration.
pub const ENUMERATION_LIMIT: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// An induced subgraph together with the order-preserving map from its
/// vertices back to the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub bipartite: Vec<bool>,
    /// Bipartite components, isolated vertices included.
    pub b: usize,
    /// Bipartite components with more than one vertex.
    pub b_tilde: usize,
    /// Components with more than one vertex.
    pub c: usize,
    pub isolated: Vec<usize>,
}

/// Index of the pair `{i, j}` (i < j) in graph6 column order.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "vertex count {n} outside 1..={MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build from 0-based edges. Loops, duplicates and out-of-range
    /// endpoints are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v + 1,
                    n: self.n,
                });
            }
        }
        if i == j {
            return Err(Error::InvalidGraph(format!("loop at vertex {}", i + 1)));
        }
        if self.adj[i] >> j & 1 == 1 {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {{{}, {}}}",
                i + 1,
                j + 1
            )));
        }
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
        Ok(())
    }

    /// The labeled graph whose edge set is the given bitmask over pairs in
    /// graph6 column order.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_index(i, j) & 1 == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for i in 0..n {
            g.adj[i] = all & !(1 << i);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::FamilyOutOfRange(format!("C_{n} needs n >= 3")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges)
    }

    /// `t K_2`: t disjoint edges {1,2}, {3,4}, ...
    pub fn matching(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::FamilyOutOfRange("tK_2 needs t >= 1".into()));
        }
        let edges: Vec<_> = (0..t).map(|s| (2 * s, 2 * s + 1)).collect();
        Self::from_edges(2 * t, &edges)
    }

    /// `self` followed by `other`, with `other`'s vertices shifted.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(i, j)| (i + self.n, j + self.n)));
        Self::from_edges(self.n + other.n, &edges)
    }

    pub fn with_isolated(&self, extra: usize) -> Result<Self> {
        Self::from_edges(self.n + extra, &self.edges())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as 0-based pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            let mut higher = self.adj[i] & !full_mask(i + 1);
            while higher != 0 {
                let j = higher.trailing_zeros() as usize;
                out.push((i, j));
                higher &= higher - 1;
            }
        }
        out
    }

    /// Edge set as a bitmask over pairs in graph6 column order.
    pub fn pair_mask(&self) -> u64 {
        self.edges()
            .into_iter()
            .fold(0, |m, (i, j)| m | 1 << pair_index(i, j))
    }

    pub fn isolated(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn non_isolated_mask(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.adj[v] != 0)
            .fold(0, |m, v| m | 1 << v)
    }

    /// Components of the subgraph induced on `mask`, each with a
    /// bipartiteness flag from BFS 2-coloring.
    pub fn components_within(&self, mask: u64) -> Vec<(u64, bool)> {
        let mut out = Vec::new();
        let mut unseen = mask;
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut color = 0u64; // bits set = side 1
            let mut bipartite = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let mut nb = self.adj[v] & mask;
                let side = color >> v & 1;
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if comp >> w & 1 == 0 {
                        comp |= 1 << w;
                        if side == 0 {
                            color |= 1 << w;
                        }
                        stack.push(w);
                    } else if color >> w & 1 == side {
                        bipartite = false;
                    }
                }
            }
            unseen &= !comp;
            out.push((comp, bipartite));
        }
        out
    }

    /// `b̃(G|_F)` for the vertex set `mask`.
    pub fn b_tilde_within(&self, mask: u64) -> usize {
        self.components_within(mask)
            .into_iter()
            .filter(|&(comp, bip)| bip && comp.count_ones() > 1)
            .count()
    }

    pub fn component_summary(&self) -> ComponentSummary {
        let comps = self.components_within(self.vertex_mask());
        let components: Vec<Vec<usize>> = comps.iter().map(|&(m, _)| mask_to_vec(m)).collect();
        let bipartite: Vec<bool> = comps.iter().map(|&(_, b)| b).collect();
        let b = bipartite.iter().filter(|&&b| b).count();
        let nontrivial = |m: u64| m.count_ones() > 1;
        let b_tilde = comps.iter().filter(|&&(m, b)| b && nontrivial(m)).count();
        let c = comps.iter().filter(|&&(m, _)| nontrivial(m)).count();
        ComponentSummary {
            components,
            bipartite,
            b,
            b_tilde,
            c,
            isolated: self.isolated(),
        }
    }

    /// `G|_F` for a nonempty set of 0-based vertices, relabeled in
    /// increasing order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v + 1,
                    n: self.n,
                });
            }
            mask |= 1 << v;
        }
        self.induced_by_mask(mask)
    }

    pub fn induced_by_mask(&self, mask: u64) -> Result<InducedSubgraph> {
        if mask == 0 {
            return Err(Error::EmptySubset);
        }
        if mask & !self.vertex_mask() != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 64 - mask.leading_zeros() as usize,
                n: self.n,
            });
        }
        let map = mask_to_vec(mask);
        let mut graph = Graph::empty(map.len())?;
        for (a, &i) in map.iter().enumerate() {
            for (b, &j) in map.iter().enumerate() {
                if self.has_edge(i, j) {
                    graph.adj[a] |= 1 << b;
                }
            }
        }
        Ok(InducedSubgraph { graph, map })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|i| all & !self.adj[i] & !(1 << i)).collect(),
        }
    }

    /// All triangles `{i, j, k}` with `i < j < k`, sorted.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (i, j) in self.edges() {
            let mut common = self.adj[i] & self.adj[j] & !full_mask(j + 1);
            while common != 0 {
                let k = common.trailing_zeros() as usize;
                common &= common - 1;
                out.push([i, j, k]);
            }
        }
        out.sort();
        out
    }

    pub fn complement_and_triangles(&self) -> (Graph, Vec<[usize; 3]>) {
        (self.complement(), self.triangles())
    }

    /// Whether the graph (with no isolated vertices) is `tK_2`, t ≥ 1.
    pub fn is_perfect_matching_graph(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 1)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        self.is_isomorphic_with_limit(other, ISOMORPHISM_LIMIT)
    }

    /// Exhaustive search over degree-preserving vertex bijections.
    pub fn is_isomorphic_with_limit(&self, other: &Graph, limit: usize) -> Result<bool> {
        let n = self.n.max(other.n);
        if n > limit {
            return Err(Error::LimitExceeded {
                what: "vertex count for isomorphism",
                value: n as u128,
                limit: limit as u128,
            });
        }
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let mut d1: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut d2: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        let (deg1, deg2) = (d1.clone(), d2.clone());
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return Ok(false);
        }
        let mut image = vec![usize::MAX; n];
        Ok(self.extend_iso(other, &deg1, &deg2, &mut image, 0, 0))
    }

    fn extend_iso(
        &self,
        other: &Graph,
        deg1: &[usize],
        deg2: &[usize],
        image: &mut [usize],
        v: usize,
        used: u64,
    ) -> bool {
        if v == self.n {
            return true;
        }
        for w in 0..other.n {
            if used >> w & 1 == 1 || deg1[v] != deg2[w] {
                continue;
            }
            let consistent = (0..v).all(|u| self.has_edge(u, v) == other.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            image[v] = w;
            if self.extend_iso(other, deg1, deg2, image, v + 1, used | 1 << w) {
                return true;
            }
        }
        image[v] = usize::MAX;
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list()
            .entries(self.edges().iter().map(|&(i, j)| (i + 1, j + 1)))
            .finish()?;
        f.write_str(")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{{{},{}}}", i + 1, j + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<[usize; 2]>,
            graph6: String,
        }
        Repr {
            n: self.n,
            edges: self.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
            graph6: io::to_graph6(self),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<[usize; 2]>,
        }
        let r = Repr::deserialize(d)?;
        let edges: Vec<_> = r
            .edges
            .iter()
            .map(|&[i, j]| (i.wrapping_sub(1), j.wrapping_sub(1)))
            .collect();
        Graph::from_edges(r.n, &edges).map_err(serde::de::Error::custom)
    }
}

pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

pub fn vec_to_mask(v: &[usize]) -> u64 {
    v.iter().fold(0, |m, &i| m | 1 << i)
}

/// All labeled graphs on `n` vertices, in ascending order of the pair
/// bitmask (graph6 column order).
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    enumerate_labeled_graphs_with_limit(n, ENUMERATION_LIMIT)
}

pub fn enumerate_labeled_graphs_with_limit(n: usize, limit: usize) -> Result<LabeledGraphs> {
    if n == 0 || n > limit || n > 11 {
        return Err(Error::LimitExceeded {
            what: "vertex count for enumeration",
            value: n as u128,
            limit: limit.min(11) as u128,
        });
    }
    let pairs = n * (n - 1) / 2;
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: 1u64 << pairs,
    })
}

pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_pair_mask(self.n, self.next).expect("valid n");
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        let e: Vec<_> = edges.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn paw() -> Graph {
        g(4, &[(1, 2), (1, 3), (2, 3), (3, 4)])
    }

    #[test]
    fn families() {
        assert_eq!(Graph::path(3).unwrap(), g(3, &[(1, 2), (2, 3)]));
        assert_eq!(Graph::cycle(4).unwrap(), g(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]));
        assert_eq!(Graph::matching(2).unwrap(), g(4, &[(1, 2), (3, 4)]));
        assert_eq!(Graph::complete(3).unwrap().edge_count(), 3);
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::matching(0).is_err());
        assert!(Graph::empty(0).is_err());
        let k3_plus = Graph::complete(3).unwrap().with_isolated(1).unwrap();
        assert_eq!(k3_plus.vertex_count(), 4);
        assert_eq!(k3_plus.isolated(), vec![3]);
    }

    #[test]
    fn invalid_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn component_summaries() {
        let s = Graph::cycle(5).unwrap().component_summary();
        assert_eq!((s.b, s.b_tilde, s.c), (0, 0, 1));
        let s = Graph::complete(3).unwrap().with_isolated(1).unwrap().component_summary();
        assert_eq!((s.b, s.b_tilde, s.c), (1, 0, 1));
        let s = Graph::matching(2).unwrap().component_summary();
        assert_eq!((s.b, s.b_tilde, s.c), (2, 2, 2));
        assert_eq!(s.components, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn induced_subgraphs() {
        let c4 = Graph::cycle(4).unwrap();
        let sub = c4.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub.graph, Graph::empty(2).unwrap());
        assert_eq!(sub.map, vec![0, 2]);
        assert_eq!(
            c4.induced_subgraph(&[0, 1, 2]).unwrap().graph,
            Graph::path(3).unwrap()
        );
        assert_eq!(
            paw().induced_subgraph(&[0, 1, 2]).unwrap().graph,
            Graph::complete(3).unwrap()
        );
        assert_eq!(c4.induced_subgraph(&[]), Err(Error::EmptySubset));
        assert!(c4.induced_subgraph(&[4]).is_err());
    }

    #[test]
    fn complements_and_triangles() {
        let (comp, tri) = Graph::cycle(4).unwrap().complement_and_triangles();
        assert_eq!(comp, g(4, &[(1, 3), (2, 4)]));
        assert!(tri.is_empty());
        let (comp, tri) = Graph::complete(3).unwrap().complement_and_triangles();
        assert_eq!(comp.edge_count(), 0);
        assert_eq!(tri, vec![[0, 1, 2]]);
        let (comp, tri) = paw().complement_and_triangles();
        assert_eq!(tri, vec![[0, 1, 2]]);
        assert_eq!(comp, g(4, &[(1, 4), (2, 4)]));
    }

    #[test]
    fn isomorphism() {
        let relabeled = g(3, &[(2, 1), (1, 3)]);
        assert!(Graph::path(3).unwrap().is_isomorphic(&relabeled).unwrap());
        assert!(!Graph::cycle(4).unwrap().is_isomorphic(&Graph::path(4).unwrap()).unwrap());
        let m = Graph::matching(2).unwrap().with_isolated(1).unwrap();
        assert!(!m.is_isomorphic(&Graph::cycle(4).unwrap()).unwrap());
        // Same degree sequence, different graphs: C_6 vs 2K_3.
        let two_k3 = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        assert!(!Graph::cycle(6).unwrap().is_isomorphic(&two_k3).unwrap());
        assert!(Graph::empty(9).unwrap().is_isomorphic(&Graph::empty(9).unwrap()).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(5).unwrap().count(), 1024);
        assert!(enumerate_labeled_graphs(7).is_err());
        let masks: Vec<u64> = enumerate_labeled_graphs(4).unwrap().map(|g| g.pair_mask()).collect();
        assert_eq!(masks, (0..64).collect::<Vec<_>>());
    }

    #[test]
    fn census_invariants() {
        for n in 1..=5 {
            let census: Vec<Graph> = enumerate_labeled_graphs(n).unwrap().collect();
            for gr in &census {
                let s = gr.component_summary();
                assert_eq!(s.b, s.b_tilde + s.isolated.len());
                assert!(s.c >= s.b_tilde);
                let all: Vec<usize> = (0..n).collect();
                let whole = gr.induced_subgraph(&all).unwrap();
                assert_eq!(&whole.graph, gr);
                assert_eq!(&gr.complement().complement(), gr);
                // Triangles of G are exactly the 3-sets that are independent in G^c.
                let comp = gr.complement();
                let mut independent = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            if !comp.has_edge(a, b) && !comp.has_edge(a, c) && !comp.has_edge(b, c) {
                                independent.push([a, b, c]);
                            }
                        }
                    }
                }
                assert_eq!(gr.triangles(), independent);
            }
            // Isomorphism behaves like an equivalence relation on samples.
            for (a, ga) in census.iter().enumerate().step_by(7) {
                assert!(ga.is_isomorphic(ga).unwrap());
                for gb in census.iter().skip(a).step_by(11) {
                    assert_eq!(ga.is_isomorphic(gb).unwrap(), gb.is_isomorphic(ga).unwrap());
                }
            }
        }
    }
}
