//! Exact search for a linear-quotients order of the minimal generators.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub const LINEAR_QUOTIENTS_GENERATOR_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug)]
pub struct LinearQuotientsOptions {
    pub max_generators: usize,
    /// Search nodes before giving up with `BudgetExceeded`.
    pub node_budget: u64,
}

impl Default for LinearQuotientsOptions {
    fn default() -> Self {
        LinearQuotientsOptions {
            max_generators: LINEAR_QUOTIENTS_GENERATOR_LIMIT,
            node_budget: 5_000_000,
        }
    }
}

pub fn has_linear_quotients(ideal: &MonomialIdeal) -> Result<Option<Vec<Monomial>>> {
    has_linear_quotients_with(ideal, &LinearQuotientsOptions::default())
}

/// Search for an order `u_1, ..., u_m` of `G(I)` with every
/// `(u_1, ..., u_{j-1}) : u_j` generated by variables. Orders are built in
/// nondecreasing degree. Returns the order, or `None` once the search is
/// exhausted.
pub fn has_linear_quotients_with(
    ideal: &MonomialIdeal,
    opts: &LinearQuotientsOptions,
) -> Result<Option<Vec<Monomial>>> {
    if ideal.is_zero() {
        return Err(Error::DegenerateIdeal);
    }
    let gens = ideal.generators();
    let m = gens.len();
    if m > opts.max_generators {
        return Err(Error::LimitExceeded {
            what: "generators for linear quotients",
            value: m as u128,
            limit: opts.max_generators as u128,
        });
    }
    // Candidate order: degree, then revlex descending.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        gens[a]
            .degree()
            .cmp(&gens[b].degree())
            .then_with(|| revlex(&gens[b], &gens[a]))
    });
    let gens: Vec<&Monomial> = order.iter().map(|&k| &gens[k]).collect();
    let words = m.div_ceil(64);
    // quot[u][v]: support of v : u; linear[u][v]: whether v : u is a variable.
    let mut quot = vec![vec![0u64; m]; m];
    let mut linear = vec![vec![false; m]; m];
    for u in 0..m {
        for v in 0..m {
            if u != v {
                let q = gens[v].colon(gens[u]);
                quot[u][v] = q.support_mask();
                linear[u][v] = q.degree() == 1;
            }
        }
    }
    let mut search = Search {
        m,
        degrees: gens.iter().map(|g| g.degree()).collect(),
        quot,
        linear,
        failed: HashSet::new(),
        nodes: 0,
        budget: opts.node_budget,
        placed: vec![0u64; words],
        path: Vec::with_capacity(m),
    };
    if search.extend()? {
        Ok(Some(search.path.iter().map(|&k| gens[k].clone()).collect()))
    } else {
        Ok(None)
    }
}

/// `a` compared to `b` in revlex among monomials of equal degree: the
/// larger one has the smaller exponent at the last differing variable.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

struct Search {
    m: usize,
    degrees: Vec<u32>,
    quot: Vec<Vec<u64>>,
    linear: Vec<Vec<bool>>,
    failed: HashSet<Vec<u64>>,
    nodes: u64,
    budget: u64,
    placed: Vec<u64>,
    path: Vec<usize>,
}

impl Search {
    fn is_placed(&self, k: usize) -> bool {
        self.placed[k / 64] >> (k % 64) & 1 == 1
    }

    fn admissible(&self, u: usize) -> bool {
        let vars = self
            .path
            .iter()
            .filter(|&&v| self.linear[u][v])
            .fold(0u64, |acc, &v| acc | self.quot[u][v]);
        self.path.iter().all(|&v| self.quot[u][v] & vars != 0)
    }

    fn extend(&mut self) -> Result<bool> {
        if self.path.len() == self.m {
            return Ok(true);
        }
        if self.failed.contains(&self.placed) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "linear-quotients search exceeded {} nodes",
                self.budget
            )));
        }
        let next_degree = (0..self.m)
            .filter(|&k| !self.is_placed(k))
            .map(|k| self.degrees[k])
            .min()
            .expect("unplaced generator");
        for u in 0..self.m {
            if self.is_placed(u) || self.degrees[u] != next_degree || !self.admissible(u) {
                continue;
            }
            self.placed[u / 64] |= 1 << (u % 64);
            self.path.push(u);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.placed[u / 64] &= !(1 << (u % 64));
        }
        self.failed.insert(self.placed.clone());
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn id(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    /// Check an order directly from colon ideals.
    fn is_linear_order(order: &[Monomial]) -> bool {
        let n = order[0].ambient();
        (1..order.len()).all(|j| {
            let prefix = MonomialIdeal::new(n, order[..j].to_vec()).unwrap();
            prefix.colon(&order[j]).unwrap().as_monomial_prime().is_some()
        })
    }

    #[test]
    fn examples() {
        let order = has_linear_quotients(&id("(x1, x2, x3)", 3)).unwrap().unwrap();
        assert!(is_linear_order(&order));
        let ic = MonomialIdeal::complementary_edge_ideal(&Graph::matching(2).unwrap());
        assert_eq!(has_linear_quotients(&ic).unwrap(), None);
        let m4 = id("(x1, x2, x3, x4)", 4).pow(3).unwrap();
        let opts = LinearQuotientsOptions {
            max_generators: 64,
            ..Default::default()
        };
        assert!(is_linear_order(&has_linear_quotients_with(&m4, &opts).unwrap().unwrap()));
        assert!(has_linear_quotients(&id("(x1, x2, x3, x4)", 4).pow(4).unwrap()).is_err());
    }

    #[test]
    fn mixed_degrees() {
        let order = has_linear_quotients(&id("(x1, x2*x3)", 3)).unwrap().unwrap();
        assert_eq!(order[0].degree(), 1);
        assert!(is_linear_order(&order));
        // (x1*x2, x3*x4) has no order; adding x1*x3*x4 does not help.
        assert_eq!(has_linear_quotients(&id("(x1*x2, x3*x4, x1*x3*x4)", 4)).unwrap(), None);
    }

    #[test]
    fn budget() {
        let opts = LinearQuotientsOptions {
            max_generators: 24,
            node_budget: 1,
        };
        let ic = MonomialIdeal::complementary_edge_ideal(&Graph::cycle(5).unwrap());
        assert!(matches!(
            has_linear_quotients_with(&ic.pow(2).unwrap(), &opts),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn exhaustive_agreement_on_small_ideals() {
        // Brute force over all permutations for ideals with at most 5 generators.
        fn permutations(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        for g in crate::graph::enumerate_labeled_graphs(4).unwrap().skip(1) {
            let i = MonomialIdeal::complementary_edge_ideal(&g);
            if i.is_unit() || i.len() > 5 {
                continue;
            }
            let gens = i.generators();
            let brute = permutations(gens.len()).into_iter().any(|p| {
                let order: Vec<Monomial> = p.iter().map(|&k| gens[k].clone()).collect();
                is_linear_order(&order)
            });
            assert_eq!(has_linear_quotients(&i).unwrap().is_some(), brute, "{g}");
        }
    }
}
