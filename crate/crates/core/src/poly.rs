//! Linear forms and polynomials in `t_1..t_m` with exact rational coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::perm::Perm;

/// Integer linear form `Σ c_i t_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm {
    coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        LinearForm { coeffs: vec![0; n] }
    }

    /// `t_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        LinearForm { coeffs: c }
    }

    /// `t_a - t_b` (1-based).
    pub fn diff(n: usize, a: usize, b: usize) -> Self {
        let mut c = vec![0; n];
        c[a - 1] += 1;
        c[b - 1] -= 1;
        LinearForm { coeffs: c }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// First nonzero coefficient as `(0-based index, value)`.
    pub fn leading(&self) -> Option<(usize, i64)> {
        self.coeffs.iter().enumerate().find(|(_, &c)| c != 0).map(|(i, &c)| (i, c))
    }

    /// Sign-normalized copy: first nonzero coefficient positive.
    pub fn canonical(&self) -> LinearForm {
        match self.leading() {
            Some((_, c)) if c < 0 => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Image under `t_i ↦ t_{σ(i)}`.
    pub fn permute(&self, sigma: &Perm) -> LinearForm {
        let mut c = vec![0; self.coeffs.len()];
        for (i, &v) in self.coeffs.iter().enumerate() {
            c[sigma.at(i + 1) - 1] += v;
        }
        LinearForm { coeffs: c }
    }

    /// Drops `t_n`, i.e. restricts to the hyperplane `t_n = 0`.
    pub fn drop_last(&self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs[..self.coeffs.len() - 1].to_vec(),
        }
    }

    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        let (a, b) = (&self.coeffs, &other.coeffs);
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] * b[j] != a[j] * b[i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_poly(&self) -> Poly {
        let n = self.coeffs.len();
        let mut p = Poly::zero(n);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0u8; n];
                e[i] = 1;
                p.terms.insert(e, BigRational::from_integer(BigInt::from(c)));
            }
        }
        p
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}t{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearForm({self})")
    }
}

/// All exponent vectors of degree-`k` monomials in `m` variables, graded
/// lexicographic with `t_1 > … > t_m`.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    nvars: usize,
    degree: usize,
    exps: Vec<Vec<u8>>,
    lookup: HashMap<Vec<u8>, usize>,
}

impl MonomialIndex {
    pub fn new(nvars: usize, degree: usize) -> Self {
        let mut exps = Vec::new();
        let mut cur = vec![0u8; nvars];
        fn rec(pos: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if pos + 1 >= cur.len() {
                if !cur.is_empty() {
                    cur[pos] = left as u8;
                    out.push(cur.clone());
                    cur[pos] = 0;
                } else if left == 0 {
                    out.push(Vec::new());
                }
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e as u8;
                rec(pos + 1, left - e, cur, out);
            }
            cur[pos] = 0;
        }
        rec(0, degree, &mut cur, &mut exps);
        let lookup = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MonomialIndex {
            nvars,
            degree,
            exps,
            lookup,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: usize) -> &[u8] {
        &self.exps[i]
    }

    pub fn exponents(&self) -> &[Vec<u8>] {
        &self.exps
    }

    pub fn index_of(&self, e: &[u8]) -> Option<usize> {
        self.lookup.get(e).copied()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Sparse polynomial; exponent vectors map to nonzero rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// `t_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        LinearForm::var(nvars, i).to_poly()
    }

    pub fn monomial(exp: Vec<u8>, c: BigRational) -> Self {
        let mut p = Self::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max()
    }

    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.terms.keys().all(|e| e.iter().map(|&x| x as usize).sum::<usize>() == k)
    }

    fn add_term(&mut self, e: Vec<u8>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u8> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Simultaneous substitution `t_i ↦ images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let nv = images.first().map_or(self.nvars, Poly::nvars);
        let mut pow_cache: HashMap<(usize, u8), Poly> = HashMap::new();
        let mut out = Poly::zero(nv);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(nv, c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let p = pow_cache
                    .entry((i, x))
                    .or_insert_with(|| images[i].pow(x as usize))
                    .clone();
                term = term.mul(&p);
            }
            out = out.add(&term);
        }
        out
    }

    /// `t_i ↦ t_{σ(i)}`.
    pub fn permute_vars(&self, sigma: &Perm) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0u8; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[sigma.at(i + 1) - 1] = x;
            }
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// `∂/∂t_i` (0-based `i`).
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * BigRational::from_integer(BigInt::from(e[i])));
        }
        out
    }

    /// Coefficients `(g0, g1)` of `ε^0, ε^1` after putting `ℓ = ε`, where the
    /// leading variable of `ℓ` is solved for; `g0 = 0` means `ℓ | g`, and
    /// `g0 = g1 = 0` means `ℓ² | g`.
    pub fn expand_along(&self, l: &LinearForm) -> (Poly, Poly) {
        let (a, ca) = l.leading().expect("nonzero linear form");
        let ca = BigRational::from_integer(BigInt::from(ca));
        let n = self.nvars;
        // t_a = (ε - Σ_{i≠a} c_i t_i) / c_a, with ε stored as an extra variable
        let mut images: Vec<Poly> = (0..n)
            .map(|i| Poly::var(n + 1, i + 1))
            .collect();
        let mut rest = Poly::var(n + 1, n + 1);
        for (i, &c) in l.coeffs().iter().enumerate() {
            if i != a && c != 0 {
                rest = rest.sub(&Poly::var(n + 1, i + 1).scale(&BigRational::from_integer(BigInt::from(c))));
            }
        }
        images[a] = rest.scale(&(BigRational::one() / ca));
        let g = self.substitute(&images);
        let mut g0 = Poly::zero(n);
        let mut g1 = Poly::zero(n);
        for (e, c) in &g.terms {
            match e[n] {
                0 => g0.add_term(e[..n].to_vec(), c.clone()),
                1 => g1.add_term(e[..n].to_vec(), c.clone()),
                _ => {}
            }
        }
        (g0, g1)
    }

    pub fn divisible_by(&self, l: &LinearForm) -> bool {
        self.expand_along(l).0.is_zero()
    }

    pub fn divisible_by_square(&self, l: &LinearForm) -> bool {
        let (g0, g1) = self.expand_along(l);
        g0.is_zero() && g1.is_zero()
    }

    /// Sets `t_n = 0` and drops the variable.
    pub fn drop_last(&self) -> Poly {
        let n = self.nvars;
        let mut out = Poly::zero(n - 1);
        for (e, c) in &self.terms {
            if e[n - 1] == 0 {
                out.terms.insert(e[..n - 1].to_vec(), c.clone());
            }
        }
        out
    }

    /// Coordinates in a monomial index; panics on a term of the wrong degree.
    pub fn to_coords(&self, index: &MonomialIndex) -> Vec<(u32, BigRational)> {
        let mut out: Vec<(u32, BigRational)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let i = index.index_of(e).expect("monomial of the indexed degree");
                (i as u32, c.clone())
            })
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn from_coords(index: &MonomialIndex, coords: impl IntoIterator<Item = (u32, BigRational)>) -> Poly {
        let mut p = Poly::zero(index.nvars());
        for (i, c) in coords {
            p.add_term(index.exponent(i as usize).to_vec(), c);
        }
        p
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest graded-lex term first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().map(|&x| x as u32).sum();
            let db: u32 = b.iter().map(|&x| x as u32).sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("t{}", i + 1) } else { format!("t{}^{}", i + 1, x) })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
