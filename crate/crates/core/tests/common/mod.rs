//! Oracles that share no code with the library's solvers.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use gkm_modular::gkm::{LabeledGraph, SignedBlowupGraph};
use gkm_modular::hessenberg::HessenbergFunction;
use gkm_modular::perm::all_perms;

/// Exponent vectors of degree `k` in `n` variables.
pub fn monomials(n: usize, k: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in 0..=k {
        for mut rest in monomials(n - 1, k - a) {
            rest.insert(0, a as u32);
            out.push(rest);
        }
    }
    out
}

/// Rank over Q by plain Gaussian elimination on sparse rational rows.
pub fn rank(rows: Vec<BTreeMap<usize, BigRational>>) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, BigRational>> = HashMap::new();
    for mut row in rows {
        loop {
            let Some((&c, a)) = row.iter().next() else { break };
            let a = a.clone();
            match pivots.get(&c) {
                None => {
                    let inv = BigRational::one() / &a;
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    pivots.insert(c, row);
                    break;
                }
                Some(p) => {
                    for (col, v) in p {
                        let e = row.entry(*col).or_insert_with(BigRational::zero);
                        *e -= &a * v;
                        if e.is_zero() {
                            row.remove(col);
                        }
                    }
                }
            }
        }
    }
    pivots.len()
}

struct Unknowns {
    next: usize,
}

impl Unknowns {
    fn block(&mut self, len: usize) -> usize {
        let b = self.next;
        self.next += len;
        b
    }
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `dim H^{2k}_T` as the nullity of `f(u) - f(v) = L_e g_e` and
/// `Σ s_i f(v_i) = L_K^2 g_K`, with auxiliary unknowns `g`.
pub fn equivariant_dim(graph: &LabeledGraph, quads: &[(Vec<usize>, Vec<i64>, Vec<i64>)], k: usize) -> usize {
    let n = graph.n();
    let mk = monomials(n, k);
    let index = |ms: &[Vec<u32>]| -> HashMap<Vec<u32>, usize> { ms.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect() };
    let ik = index(&mk);
    let mut u = Unknowns { next: 0 };
    let f: Vec<usize> = graph.vertices().iter().map(|_| u.block(mk.len())).collect();
    let mut rows = Vec::new();
    let lower = |d: usize| if k >= d { monomials(n, k - d) } else { Vec::new() };
    let m1 = lower(1);
    for e in graph.edges() {
        let g = u.block(m1.len());
        let mut eqs: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); mk.len()];
        for i in 0..mk.len() {
            eqs[i].insert(f[e.u] + i, q(1));
            eqs[i].insert(f[e.v] + i, q(-1));
        }
        for (j, m) in m1.iter().enumerate() {
            for (a, &c) in e.label.coeffs().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let mut t = m.clone();
                t[a] += 1;
                *eqs[ik[&t]].entry(g + j).or_insert_with(BigRational::zero) -= q(c);
            }
        }
        rows.extend(eqs);
    }
    let m2 = lower(2);
    for (verts, signs, form) in quads {
        let g = u.block(m2.len());
        let mut eqs: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); mk.len()];
        for i in 0..mk.len() {
            for (v, s) in verts.iter().zip(signs) {
                *eqs[i].entry(f[*v] + i).or_insert_with(BigRational::zero) += q(*s);
            }
        }
        for (j, m) in m2.iter().enumerate() {
            for (a, &ca) in form.iter().enumerate() {
                for (b, &cb) in form.iter().enumerate() {
                    if ca == 0 || cb == 0 {
                        continue;
                    }
                    let mut t = m.clone();
                    t[a] += 1;
                    t[b] += 1;
                    *eqs[ik[&t]].entry(g + j).or_insert_with(BigRational::zero) -= q(ca * cb);
                }
            }
        }
        rows.extend(eqs);
    }
    for r in &mut rows {
        r.retain(|_, v| !v.is_zero());
    }
    u.next - rank(rows)
}

pub fn graph_dim(graph: &LabeledGraph, k: usize) -> usize {
    equivariant_dim(graph, &[], k)
}

pub fn blowup_dim(b: &SignedBlowupGraph, k: usize) -> usize {
    let quads: Vec<_> = b
        .quads
        .iter()
        .map(|q| (q.vertices.to_vec(), q.signs.iter().map(|&s| s as i64).collect(), q.form.coeffs().to_vec()))
        .collect();
    equivariant_dim(&b.graph, &quads, k)
}

/// `Σ_w q^{#{(i,j): i < j ≤ h(i), w(i) > w(j)}}`.
pub fn inversion_poincare(h: &HessenbergFunction) -> Vec<i64> {
    let n = h.n();
    let mut out = vec![0i64; h.dimension() + 1];
    for w in all_perms(n) {
        let mut inv = 0;
        for i in 1..=n {
            for j in i + 1..=h.at(i) {
                if w.at(i) > w.at(j) {
                    inv += 1;
                }
            }
        }
        out[inv] += 1;
    }
    out
}

/// `[n]_q! = Π_{i=1}^n (1 + q + … + q^{i-1})`.
pub fn q_factorial(n: usize) -> Vec<i64> {
    let mut p = vec![1i64];
    for i in 1..=n {
        let mut next = vec![0i64; p.len() + i - 1];
        for (a, c) in p.iter().enumerate() {
            for b in 0..i {
                next[a + b] += c;
            }
        }
        p = next;
    }
    p
}

/// Full equivariant dimensions from a Poincaré polynomial of a free module
/// over `Q[t_1..t_n]`: `Σ_j b_j C(k - j + n - 1, n - 1)`.
pub fn free_module_dims(b: &[i64], n: usize, top: usize) -> Vec<usize> {
    let binom = |a: usize, r: usize| -> i64 {
        (0..r).fold(1i64, |acc, i| acc * (a - i) as i64 / (i as i64 + 1))
    };
    (0..=top)
        .map(|k| {
            b.iter()
                .enumerate()
                .filter(|(j, _)| *j <= k)
                .map(|(j, c)| c * binom(k - j + n - 1, n - 1))
                .sum::<i64>() as usize
        })
        .collect()
}
