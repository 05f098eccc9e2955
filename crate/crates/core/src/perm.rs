//! Permutations of `[n]` in one-line notation.
//!
//! Entries are 1-based values. `w.swap_positions(i, j)` is the right
//! multiplication `w·(i,j)`, and `sigma.compose(w)` is `sigma ∘ w`.

use std::fmt;

use crate::symfun::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    /// Checks that `values` is a bijection on `1..=len`.
    pub fn from_one_line(values: Vec<u8>) -> Option<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm(values))
    }

    /// Parses compact one-line strings such as "213" (single digits, n ≤ 9).
    pub fn parse(s: &str) -> Option<Self> {
        let digits: Option<Vec<u8>> = s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        Self::from_one_line(digits?)
    }

    /// Transposition of the values `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i - 1, j - 1);
        p
    }

    /// The n-cycle `1 → 2 → … → n → 1`.
    pub fn long_cycle(n: usize) -> Self {
        Perm((1..=n as u8).map(|i| if i as usize == n { 1 } else { i + 1 }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Perm(inv)
    }

    /// `w·(i,j)`: swaps the entries in positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Perm {
        let mut p = self.0.clone();
        p.swap(i - 1, j - 1);
        Perm(p)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut l = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize - 1;
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    /// Canonical representative of a cycle type: consecutive cycles
    /// `(1 2 … λ1)(λ1+1 …)…`.
    pub fn of_cycle_type(lambda: &Partition) -> Perm {
        let n = lambda.weight();
        let mut v = vec![0u8; n];
        let mut start = 0;
        for &part in lambda.parts() {
            for k in 0..part {
                let next = if k + 1 == part { start } else { start + k + 1 };
                v[start + k] = (next + 1) as u8;
            }
            start += part;
        }
        Perm(v)
    }

    /// Position of this permutation in [`all_perms`] order.
    pub fn lex_rank(&self) -> usize {
        let n = self.0.len();
        let mut rank = 0;
        let mut fact = vec![1usize; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1] * i;
        }
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            rank += smaller * fact[n - 1 - i];
        }
        rank
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

/// All permutations of `[n]` in lexicographic order of their one-line notation.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = Perm::identity(n).0;
    loop {
        out.push(Perm(cur.clone()));
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}
