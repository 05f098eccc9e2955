//! Kostka numbers, Murnaghan–Nakayama characters and cached transition
//! matrices between each basis and the Schur basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::partition::{partitions, Partition};
use super::Basis;
use crate::linalg::RationalMatrix;

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(lambda.parts(), mu.parts(), &mut memo)
}

// The largest entry `k = len(mu)` fills a horizontal strip of size mu_k.
fn kostka_rec(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
    let Some((&last, rest)) = mu.split_last() else {
        return u64::from(lambda.is_empty());
    };
    if lambda.len() > mu.len() {
        return 0;
    }
    let key = (lambda.to_vec(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut nu = lambda.to_vec();
    strips(lambda, 0, last, &mut nu, &mut |nu: &[usize]| {
        let trimmed: Vec<usize> = nu.iter().copied().filter(|&p| p > 0).collect();
        total += kostka_rec(&trimmed, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Visits every `nu ⊆ lambda` with `lambda/nu` a horizontal strip of size `left`.
fn strips(lambda: &[usize], row: usize, left: usize, nu: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if row == lambda.len() {
        if left == 0 {
            visit(nu);
        }
        return;
    }
    // row `row` may shrink down to lambda[row+1]
    let floor = lambda.get(row + 1).copied().unwrap_or(0);
    let max_remove = (lambda[row] - floor).min(left);
    for r in 0..=max_remove {
        nu[row] = lambda[row] - r;
        strips(lambda, row + 1, left - r, nu, visit);
    }
    nu[row] = lambda[row];
}

/// Irreducible character `χ^λ` at cycle type `mu`, by Murnaghan–Nakayama on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let k = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect();
    let mut memo = HashMap::new();
    mn_rec(beta, mu.parts(), &mut memo)
}

fn mn_rec(beta: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[idx] = b - r;
        next.sort_unstable_by(|a, c| c.cmp(a));
        total += sign * mn_rec(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

pub(crate) struct Transition {
    pub index: Vec<Partition>,
    pub position: HashMap<Partition, usize>,
    /// Columns: Schur expansion of each basis element.
    pub to_s: RationalMatrix,
    pub from_s: RationalMatrix,
}

type Cache = RwLock<HashMap<(usize, Basis), Arc<Transition>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn build(n: usize, basis: Basis) -> Transition {
    let index = partitions(n);
    let position = index.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let len = index.len();
    let mut m = RationalMatrix::zeros(len, len);
    let kostka_t = |m: &mut RationalMatrix| {
        // s→m has entry [mu][lambda] = K_{lambda mu}
        for (a, lambda) in index.iter().enumerate() {
            for (b, mu) in index.iter().enumerate() {
                m.set(b, a, q(kostka(lambda, mu) as i64));
            }
        }
    };
    let to_s = match basis {
        Basis::S => RationalMatrix::identity(len),
        Basis::H => {
            for (a, lambda) in index.iter().enumerate() {
                for (b, mu) in index.iter().enumerate() {
                    m.set(a, b, q(kostka(lambda, mu) as i64));
                }
            }
            m
        }
        Basis::E => {
            for (a, lambda) in index.iter().enumerate() {
                let conj = lambda.conjugate();
                for (b, mu) in index.iter().enumerate() {
                    m.set(a, b, q(kostka(&conj, mu) as i64));
                }
            }
            m
        }
        Basis::P => {
            for (a, lambda) in index.iter().enumerate() {
                for (b, mu) in index.iter().enumerate() {
                    m.set(a, b, q(mn_character(lambda, mu)));
                }
            }
            m
        }
        Basis::M => {
            kostka_t(&mut m);
            m.inverse().expect("Kostka matrix is unitriangular")
        }
    };
    let from_s = to_s.inverse().expect("transition matrices are invertible");
    debug_assert!((0..len).all(|i| !to_s.row(i).iter().all(Zero::is_zero)));
    Transition {
        index,
        position,
        to_s,
        from_s,
    }
}

pub(crate) fn transition(n: usize, basis: Basis) -> Arc<Transition> {
    if let Some(t) = cache().read().unwrap().get(&(n, basis)) {
        return Arc::clone(t);
    }
    let built = Arc::new(build(n, basis));
    let mut w = cache().write().unwrap();
    Arc::clone(w.entry((n, basis)).or_insert(built))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn small_kostka_numbers() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(kostka(&p(&[2, 1]), &p(&[3])), 0);
        assert_eq!(kostka(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])), 5);
        assert_eq!(kostka(&p(&[2, 2]), &p(&[2, 1, 1])), 1);
    }

    #[test]
    fn s3_character_table() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        assert_eq!(mn_character(&p(&[3]), &p(&[2, 1])), 1);
    }

    #[test]
    fn character_table_orthogonality() {
        for n in 1..=7 {
            let parts = partitions(n);
            // column orthogonality: Σ_λ χ^λ(μ) χ^λ(ν) = δ z_μ
            for mu in &parts {
                for nu in &parts {
                    let s: i64 = parts.iter().map(|l| mn_character(l, mu) * mn_character(l, nu)).sum();
                    let expect = if mu == nu { mu.z() } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expect, "n={n} {mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn kostka_row_sums_count_standard_tableaux() {
        // K_{λ,1^n} = χ^λ(1^n)
        for n in 1..=7 {
            for l in partitions(n) {
                assert_eq!(kostka(&l, &Partition::ones(n)) as i64, mn_character(&l, &Partition::ones(n)));
            }
        }
    }
}
