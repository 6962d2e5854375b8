//! Dense tables over the divisor box of `lcm(G(I))`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Exponent;

/// Default cap on the number of points in the divisor box.
pub const BOX_LIMIT: usize = 1 << 22;

/// Membership in `I` and lcm-lattice membership for every divisor of
/// `lcm(G(I))`. Points are indexed mixed-radix with the first variable
/// varying fastest.
pub(crate) struct DivisorBox {
    pub n: usize,
    pub top: Vec<Exponent>,
    pub stride: Vec<usize>,
    pub member: Vec<bool>,
    pub in_lattice: Vec<bool>,
}

impl DivisorBox {
    pub fn new(ideal: &MonomialIdeal, limit: usize) -> Result<Self> {
        let n = ideal.ambient();
        let top = ideal.lcm_of_generators().exponents().to_vec();
        let mut stride = Vec::with_capacity(n);
        let mut size: u128 = 1;
        for &e in &top {
            stride.push(size as usize);
            size *= e as u128 + 1;
        }
        if size > limit as u128 {
            return Err(Error::LimitExceeded {
                what: "lcm divisor box",
                value: size,
                limit: limit as u128,
            });
        }
        let size = size as usize;
        let mut is_gen = vec![false; size];
        for g in ideal.generators() {
            is_gen[index_of(&stride, g.exponents())] = true;
        }
        let mut member = vec![false; size];
        // lcm of the generators dividing each point, flattened.
        let mut below = vec![0 as Exponent; size * n];
        let mut in_lattice = vec![false; size];
        let mut a = vec![0 as Exponent; n];
        for idx in 0..size {
            let mut acc = if is_gen[idx] { a.clone() } else { vec![0; n] };
            let mut mem = is_gen[idx];
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                let prev = idx - stride[i];
                mem |= member[prev];
                for (x, &y) in acc.iter_mut().zip(&below[prev * n..prev * n + n]) {
                    *x = (*x).max(y);
                }
            }
            member[idx] = mem;
            in_lattice[idx] = mem && acc == a;
            below[idx * n..idx * n + n].copy_from_slice(&acc);
            for i in 0..n {
                if a[i] < top[i] {
                    a[i] += 1;
                    break;
                }
                a[i] = 0;
            }
        }
        Ok(DivisorBox {
            n,
            top,
            stride,
            member,
            in_lattice,
        })
    }

    pub fn len(&self) -> usize {
        self.member.len()
    }

    pub fn point(&self, mut idx: usize) -> Vec<Exponent> {
        let mut out = vec![0; self.n];
        for i in 0..self.n {
            let d = self.top[i] as usize + 1;
            out[i] = (idx % d) as Exponent;
            idx /= d;
        }
        out
    }

    #[cfg(test)]
    pub fn monomial(&self, idx: usize) -> crate::monomial::Monomial {
        crate::monomial::Monomial::from_exponents(self.point(idx))
    }

    /// Faces of the upper-Koszul complex at point `idx`, as masks local to
    /// the support of the point.
    pub fn koszul_faces(&self, idx: usize) -> (Vec<usize>, Vec<u32>) {
        let a = self.point(idx);
        let support: Vec<usize> = (0..self.n).filter(|&i| a[i] > 0).collect();
        let mut faces = Vec::new();
        for b in 0u32..1 << support.len() {
            let mut j = idx;
            for (k, &v) in support.iter().enumerate() {
                if b >> k & 1 == 1 {
                    j -= self.stride[v];
                }
            }
            if self.member[j] {
                faces.push(b);
            }
        }
        (support, faces)
    }
}

fn index_of(stride: &[usize], e: &[Exponent]) -> usize {
    stride.iter().zip(e).map(|(s, &x)| s * x as usize).sum()
}

/// True when some vertex `v` makes the face set a cone with apex `v`.
pub(crate) fn is_cone(ground: usize, faces: &[u32]) -> bool {
    let mut present = vec![false; 1 << ground];
    for &f in faces {
        present[f as usize] = true;
    }
    (0..ground).any(|v| faces.iter().all(|&f| present[(f | 1 << v) as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_of_three_generators() {
        let i = MonomialIdeal::parse("(x1*x2, x2*x3, x1*x3)", 3).unwrap();
        let b = DivisorBox::new(&i, BOX_LIMIT).unwrap();
        let lattice: Vec<String> = (0..b.len())
            .filter(|&k| b.in_lattice[k])
            .map(|k| b.monomial(k).to_string())
            .collect();
        assert_eq!(lattice, ["x1*x2", "x1*x3", "x2*x3", "x1*x2*x3"]);
        assert_eq!(b.member.iter().filter(|&&x| x).count(), 4);
    }

    #[test]
    fn box_limit() {
        let i = MonomialIdeal::parse("(x1^9*x2^9)", 2).unwrap();
        assert!(DivisorBox::new(&i, 50).is_err());
    }

    #[test]
    fn cones() {
        assert!(is_cone(2, &[0, 1, 2, 3]));
        assert!(!is_cone(2, &[0, 1, 2]));
        assert!(!is_cone(1, &[0]));
    }
}
