//! Coordinates on `Q[v_1..v_m]` degree by degree, with multiplication and
//! linear substitution tables.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::linalg::{Int, IntVec};
use crate::poly::MonomialIndex;

/// Sparse image of one monomial: `(target index, coefficient)`.
pub type Image = Vec<(u32, i64)>;

#[derive(Debug)]
pub struct GradedRing {
    nvars: usize,
    indices: Vec<MonomialIndex>,
    /// `mul[k][i][m]`: index in degree `k+1` of `v_i · m`.
    mul: Vec<Vec<Vec<u32>>>,
    tables: RwLock<HashMap<(Vec<Vec<i64>>, usize), Arc<Vec<Image>>>>,
}

impl GradedRing {
    pub fn new(nvars: usize, max_degree: usize) -> Self {
        let indices: Vec<MonomialIndex> = (0..=max_degree + 1).map(|k| MonomialIndex::new(nvars, k)).collect();
        let mut mul = Vec::with_capacity(max_degree + 1);
        for k in 0..=max_degree {
            let next = &indices[k + 1];
            let per_var: Vec<Vec<u32>> = (0..nvars)
                .map(|i| {
                    indices[k]
                        .exponents()
                        .iter()
                        .map(|e| {
                            let mut e = e.clone();
                            e[i] += 1;
                            next.index_of(&e).unwrap() as u32
                        })
                        .collect()
                })
                .collect();
            mul.push(per_var);
        }
        GradedRing {
            nvars,
            indices,
            mul,
            tables: RwLock::new(HashMap::new()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> usize {
        self.mul.len() - 1
    }

    pub fn index(&self, k: usize) -> &MonomialIndex {
        &self.indices[k]
    }

    pub fn dim(&self, k: usize) -> usize {
        self.indices[k].len()
    }

    /// Index of `v_i · m` for `m` of degree `k`.
    pub fn times_var(&self, k: usize, i: usize, m: u32) -> u32 {
        self.mul[k][i][m as usize]
    }

    /// `Σ_i c_i v_i` times the degree-`k` polynomial `p`.
    pub fn mul_linear(&self, k: usize, form: &[i64], p: &[(u32, Int)]) -> Vec<(u32, Int)> {
        let mut out = Vec::with_capacity(p.len() * 2);
        for (i, &c) in form.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let ci = Int::from(c);
            for (m, a) in p {
                out.push((self.times_var(k, i, *m), a * &ci));
            }
        }
        out
    }

    /// Images of the degree-`k` monomials under the ring map `v_i ↦ images[i]`.
    pub fn substitution(&self, images: &[Vec<i64>], k: usize) -> Arc<Vec<Image>> {
        let key = (images.to_vec(), k);
        if let Some(t) = self.tables.read().unwrap().get(&key) {
            return Arc::clone(t);
        }
        let t = if k == 0 {
            Arc::new(vec![vec![(0u32, 1i64)]])
        } else {
            let prev = self.substitution(images, k - 1);
            let idx = &self.indices[k];
            let prev_idx = &self.indices[k - 1];
            let table: Vec<Image> = idx
                .exponents()
                .iter()
                .map(|e| {
                    let i = e.iter().position(|&x| x > 0).unwrap();
                    let mut rest = e.clone();
                    rest[i] -= 1;
                    let src = &prev[prev_idx.index_of(&rest).unwrap()];
                    let mut acc: HashMap<u32, i64> = HashMap::new();
                    for (j, &c) in images[i].iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for &(m, a) in src {
                            let target = self.mul[k - 1][j][m as usize];
                            let prod = a.checked_mul(c).expect("substitution coefficient overflow");
                            let slot = acc.entry(target).or_insert(0);
                            *slot = slot.checked_add(prod).expect("substitution coefficient overflow");
                        }
                    }
                    let mut img: Image = acc.into_iter().filter(|&(_, c)| c != 0).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            Arc::new(table)
        };
        self.tables.write().unwrap().insert(key, Arc::clone(&t));
        t
    }

    /// Applies a substitution table to a block of coordinates.
    pub fn apply(&self, table: &[Image], p: &[(u32, Int)]) -> Vec<(u32, Int)> {
        let mut out = Vec::new();
        for (m, a) in p {
            for &(t, c) in &table[*m as usize] {
                out.push((t, a * &Int::from(c)));
            }
        }
        out
    }
}

/// Splits a vertex-major coordinate vector into per-vertex blocks.
pub fn blocks(v: &IntVec, block: usize) -> Vec<(usize, Vec<(u32, Int)>)> {
    let mut out: Vec<(usize, Vec<(u32, Int)>)> = Vec::new();
    for (c, a) in v.entries() {
        let (vert, m) = (*c as usize / block, *c % block as u32);
        match out.last_mut() {
            Some((last, entries)) if *last == vert => entries.push((m, a.clone())),
            _ => out.push((vert, vec![(m, a.clone())])),
        }
    }
    out
}

/// Reassembles per-vertex blocks into a coordinate vector.
pub fn assemble(parts: impl IntoIterator<Item = (usize, Vec<(u32, Int)>)>, block: usize) -> IntVec {
    let mut pairs = Vec::new();
    for (vert, entries) in parts {
        let base = (vert * block) as u32;
        pairs.extend(entries.into_iter().map(|(m, a)| (base + m, a)));
    }
    IntVec::from_pairs(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_table() {
        let r = GradedRing::new(2, 3);
        assert_eq!(r.dim(2), 3);
        // v1 * v1 = v1^2, index 0 in graded lex
        assert_eq!(r.times_var(1, 0, 0), 0);
        assert_eq!(r.times_var(1, 1, 1), 2);
    }

    #[test]
    fn substitution_expands_powers() {
        let r = GradedRing::new(2, 3);
        // v1 -> v1 + v2, v2 -> v2: (v1+v2)^2 = v1^2 + 2 v1 v2 + v2^2
        let t = r.substitution(&[vec![1, 1], vec![0, 1]], 2);
        assert_eq!(t[0], vec![(0, 1), (1, 2), (2, 1)]);
        assert_eq!(t[2], vec![(2, 1)]);
        let t3 = r.substitution(&[vec![1, 1], vec![0, 1]], 3);
        assert_eq!(t3[0], vec![(0, 1), (1, 3), (2, 3), (3, 1)]);
    }

    #[test]
    fn blocks_round_trip() {
        let v = IntVec::from_pairs(vec![(1, Int::from(2)), (4, Int::from(-1)), (5, Int::from(3))]);
        let b = blocks(&v, 3);
        assert_eq!(b.len(), 2);
        assert_eq!(assemble(b, 3), v);
    }
}
