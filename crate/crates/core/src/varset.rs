use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::mask_to_vec;

/// A set of variable (or vertex) indices, stored as a bitmask of 0-based
/// indices. Identifies the monomial prime `P_F = (x_i : i ∈ F)`.
///
/// Ordered by size, then lexicographically on the sorted elements.
/// Serialized and printed 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(pub u64);

impl VarSet {
    pub fn from_indices(indices: &[usize]) -> Self {
        VarSet(indices.iter().fold(0, |m, &i| m | 1 << i))
    }

    /// From 1-based labels; panics on 0.
    pub fn from_labels(labels: &[usize]) -> Self {
        VarSet(labels.iter().fold(0, |m, &i| m | 1 << (i - 1)))
    }

    pub fn indices(self) -> Vec<usize> {
        mask_to_vec(self.0)
    }

    pub fn labels(self) -> Vec<usize> {
        mask_to_vec(self.0).into_iter().map(|i| i + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.labels().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VarSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VarSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if labels.iter().any(|&l| l == 0 || l > 64) {
            return Err(serde::de::Error::custom("variable labels must lie in 1..=64"));
        }
        Ok(VarSet::from_labels(&labels))
    }
}

/// Format a collection of sets as `{{1,3}, {2,4}}`.
pub fn format_sets<'a>(sets: impl IntoIterator<Item = &'a VarSet>) -> String {
    let parts: Vec<String> = sets.into_iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
