//! Simplicial complexes on small ground sets and their reduced homology.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{rank, Field};
use crate::graph::mask_to_vec;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::varset::VarSet;

/// Default cap on the ground set for homology computations.
pub const HOMOLOGY_GROUND_LIMIT: usize = 12;

/// A simplicial complex, faces stored as bitmasks over ambient variable
/// indices. No faces at all is the void complex; `{∅}` is the irrelevant
/// complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: VarSet,
    faces: Vec<u64>,
}

impl SimplicialComplex {
    pub fn void(ground: VarSet) -> Self {
        SimplicialComplex {
            ground,
            faces: Vec::new(),
        }
    }

    pub fn irrelevant(ground: VarSet) -> Self {
        SimplicialComplex {
            ground,
            faces: vec![0],
        }
    }

    /// The complex generated by `facets` (downward closure).
    pub fn from_facets(ground: VarSet, facets: &[u64]) -> Result<Self> {
        let mut faces = Vec::new();
        for &f in facets {
            if f & !ground.0 != 0 {
                return Err(Error::Precondition(format!(
                    "facet {} outside ground {ground}",
                    VarSet(f)
                )));
            }
            let mut sub = f;
            loop {
                faces.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        Ok(Self::from_face_list(ground, faces))
    }

    fn from_face_list(ground: VarSet, mut faces: Vec<u64>) -> Self {
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        faces.dedup();
        SimplicialComplex { ground, faces }
    }

    pub fn ground(&self) -> VarSet {
        self.ground
    }

    pub fn faces(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.faces.iter().map(|&f| VarSet(f))
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.faces == [0]
    }

    pub fn contains(&self, face: VarSet) -> bool {
        self.faces
            .binary_search_by_key(&(face.0.count_ones(), face.0), |&f| (f.count_ones(), f))
            .is_ok()
    }

    /// Dimension; `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<i32> {
        self.faces.last().map(|f| f.count_ones() as i32 - 1)
    }
}

/// Upper-Koszul complex `K^a(I) = { b ⊆ supp(a) squarefree : x^(a−b) ∈ I }`.
pub fn upper_koszul(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplex> {
    if a.ambient() != ideal.ambient() {
        return Err(Error::AmbientMismatch(ideal.ambient(), a.ambient()));
    }
    let ground = a.support_mask();
    let mut faces = Vec::new();
    let mut b = ground;
    loop {
        let xb = Monomial::x_of_mask(b, a.ambient());
        if ideal.contains(&a.exact_div(&xb)?) {
            faces.push(b);
        }
        if b == 0 {
            break;
        }
        b = (b - 1) & ground;
    }
    Ok(SimplicialComplex::from_face_list(VarSet(ground), faces))
}

/// Ranks of `H̃_d(C; F)` for `d = -1 ..= dim C`, stored at index `d + 1`.
/// The void complex has an empty vector.
pub fn reduced_homology_ranks<F: Field>(c: &SimplicialComplex) -> Result<Vec<usize>> {
    reduced_homology_ranks_with_limit::<F>(c, HOMOLOGY_GROUND_LIMIT)
}

pub fn reduced_homology_ranks_with_limit<F: Field>(
    c: &SimplicialComplex,
    limit: usize,
) -> Result<Vec<usize>> {
    if c.ground.len() > limit {
        return Err(Error::LimitExceeded {
            what: "homology ground set",
            value: c.ground.len() as u128,
            limit: limit as u128,
        });
    }
    let ground = mask_to_vec(c.ground.0);
    let local: Vec<u32> = c
        .faces
        .iter()
        .map(|&f| {
            ground
                .iter()
                .enumerate()
                .filter(|(_, &v)| f >> v & 1 == 1)
                .fold(0u32, |m, (k, _)| m | 1 << k)
        })
        .collect();
    Ok(homology_of_local::<F>(&local))
}

/// Reduced homology ranks of a complex given by local face masks (each a
/// subset of `0..32`). Faces must be closed under taking subsets.
pub(crate) fn homology_of_local<F: Field>(faces: &[u32]) -> Vec<usize> {
    let Some(top) = faces.iter().map(|f| f.count_ones() as usize).max() else {
        return Vec::new();
    };
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u32, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(k, &f)| (f, k)).collect())
        .collect();
    // boundary_rank[s]: rank of the boundary from size-s faces to size s-1.
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        if by_size[s].is_empty() || by_size[s - 1].is_empty() {
            continue;
        }
        let cols = by_size[s - 1].len();
        boundary_rank[s] = if F::CHARACTERISTIC == 2 {
            let words = cols.div_ceil(64);
            let rows = by_size[s]
                .iter()
                .map(|&f| {
                    let mut row = vec![0u64; words];
                    for_each_bit(f, |v| {
                        let k = index[s - 1][&(f & !(1 << v))];
                        row[k / 64] |= 1 << (k % 64);
                    });
                    row
                })
                .collect();
            rank_gf2(rows)
        } else {
            let rows = by_size[s]
                .iter()
                .map(|&f| {
                    let mut row = vec![F::zero(); cols];
                    let mut sign = F::one();
                    for_each_bit(f, |v| {
                        row[index[s - 1][&(f & !(1 << v))]] = sign;
                        sign = -sign;
                    });
                    row
                })
                .collect();
            rank(rows)
        };
    }
    (0..=top)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}

fn for_each_bit(mut m: u32, mut f: impl FnMut(u32)) {
    while m != 0 {
        f(m.trailing_zeros());
        m &= m - 1;
    }
}

/// Rank over GF(2) of bit-packed rows.
pub(crate) fn rank_gf2(mut rows: Vec<Vec<u64>>) -> usize {
    let mut r = 0;
    let words = rows.first().map_or(0, Vec::len);
    for col in 0..words * 64 {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (r..rows.len()).find(|&i| rows[i][w] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = std::mem::take(&mut rows[r]);
        for row in rows.iter_mut().skip(r + 1) {
            if row[w] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3};

    fn id(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn faces(c: &SimplicialComplex) -> Vec<Vec<usize>> {
        c.faces().map(VarSet::labels).collect()
    }

    #[test]
    fn koszul_examples() {
        // x^(a-b) = 1 for b = {1}, so only the empty face survives.
        let c = upper_koszul(&id("(x1)", 1), &m("x1", 1)).unwrap();
        assert!(c.is_irrelevant());
        let c = upper_koszul(&id("(x1)", 1), &m("x1^2", 1)).unwrap();
        assert_eq!(faces(&c), vec![vec![], vec![1]]);
        let c = upper_koszul(&id("(x1, x2)", 2), &m("x1*x2", 2)).unwrap();
        assert_eq!(faces(&c), vec![vec![], vec![1], vec![2]]);
        let c = upper_koszul(&id("(x1*x2)", 2), &m("x1*x2", 2)).unwrap();
        assert!(c.is_irrelevant());
        let c = upper_koszul(&id("(x1*x2)", 2), &m("x1", 2)).unwrap();
        assert!(c.is_void());
    }

    #[test]
    fn homology_examples() {
        let g = VarSet(0b111);
        let hollow_edge = SimplicialComplex::from_facets(VarSet(0b11), &[0b01, 0b10]).unwrap();
        assert_eq!(reduced_homology_ranks::<F2>(&hollow_edge).unwrap(), vec![0, 1]);
        let circle = SimplicialComplex::from_facets(g, &[0b011, 0b101, 0b110]).unwrap();
        assert_eq!(reduced_homology_ranks::<F3>(&circle).unwrap(), vec![0, 0, 1]);
        assert_eq!(reduced_homology_ranks::<F2>(&circle).unwrap(), vec![0, 0, 1]);
        let simplex = SimplicialComplex::from_facets(g, &[0b111]).unwrap();
        assert_eq!(reduced_homology_ranks::<F3>(&simplex).unwrap(), vec![0; 4]);
        let irr = SimplicialComplex::irrelevant(g);
        assert_eq!(reduced_homology_ranks::<F2>(&irr).unwrap(), vec![1]);
        assert!(reduced_homology_ranks::<F2>(&SimplicialComplex::void(g)).unwrap().is_empty());
        assert_eq!(irr.dimension(), Some(-1));
        assert_eq!(SimplicialComplex::void(g).dimension(), None);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // Six-vertex triangulation of RP^2.
        let tri: [[u32; 3]; 10] = [
            [0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 5], [0, 4, 5],
            [1, 2, 4], [1, 2, 5], [1, 3, 5], [2, 3, 4], [3, 4, 5],
        ];
        let facets: Vec<u64> = tri.iter().map(|t| t.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let c = SimplicialComplex::from_facets(VarSet(0b111111), &facets).unwrap();
        assert_eq!(reduced_homology_ranks::<F2>(&c).unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(reduced_homology_ranks::<F3>(&c).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn ground_limit() {
        let c = SimplicialComplex::irrelevant(VarSet((1 << 13) - 1));
        assert!(matches!(
            reduced_homology_ranks::<F2>(&c),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn gf2_rank() {
        assert_eq!(rank_gf2(vec![vec![0b11], vec![0b01], vec![0b10]]), 2);
        assert_eq!(rank_gf2(vec![]), 0);
    }
}
