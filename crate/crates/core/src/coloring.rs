//! Chromatic quasisymmetric functions and unicellular LLT polynomials by
//! coloring enumeration, and the coloring-class calculus behind their
//! modular laws.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::hessenberg::{indifference_graph, HessenbergFunction, ModularTriple, TripleKind};
use crate::symfun::{partitions, Basis, GradedSymmetricFunction, Partition, SymFunError, SymmetricFunction, DEGREE_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("n = {n} exceeds the coloring cap {cap}")]
    DegreeTooLarge { n: usize, cap: usize },
    #[error("operation needs a kind-C triple")]
    WrongKind,
    #[error("coloring {0} is not proper for G_(h-)")]
    NotProper(Coloring),
    #[error("coloring has {got} entries, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("coefficients of z^{a:?} and z^{b:?} differ; result is not symmetric")]
    NotSymmetric { a: Vec<u8>, b: Vec<u8> },
    #[error(transparent)]
    SymFun(#[from] SymFunError),
}

/// `κ: [n] → P`, stored as colors `κ(1), …, κ(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(pub Vec<u8>);

impl Coloring {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `κ(i)`, 1-based.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// Color multiplicities `(#κ⁻¹(1), …, #κ⁻¹(m))`.
    pub fn content(&self, m: usize) -> Vec<u8> {
        let mut c = vec![0u8; m];
        for &v in &self.0 {
            c[v as usize - 1] += 1;
        }
        c
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring{self}")
    }
}

fn check_n(n: usize) -> Result<(), ColoringError> {
    if n > DEGREE_CAP {
        Err(ColoringError::DegreeTooLarge { n, cap: DEGREE_CAP })
    } else {
        Ok(())
    }
}

/// Number of edges `{i, j}`, `j < i`, with `κ(j) < κ(i)`.
pub fn asc(h: &HessenbergFunction, kappa: &Coloring) -> usize {
    indifference_graph(h)
        .edges
        .iter()
        .filter(|&&(i, j)| kappa.at(j) < kappa.at(i))
        .count()
}

pub fn is_proper(h: &HessenbergFunction, kappa: &Coloring) -> bool {
    indifference_graph(h).edges.iter().all(|&(i, j)| kappa.at(i) != kappa.at(j))
}

/// Distinct arrangements of a multiset, in lexicographic order.
fn multiset_permutations(mut items: Vec<u8>, mut visit: impl FnMut(&[u8])) {
    items.sort_unstable();
    let n = items.len();
    loop {
        visit(&items);
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| items[i] < items[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
    }
}

fn by_content(h: &HessenbergFunction, proper: bool) -> Result<GradedSymmetricFunction, ColoringError> {
    let n = h.n();
    check_n(n)?;
    let edges = indifference_graph(h).edges;
    let per_lambda: Vec<(Partition, Vec<u64>)> = partitions(n)
        .into_par_iter()
        .map(|lambda| {
            let mut colors = Vec::with_capacity(n);
            for (c, &mult) in lambda.parts().iter().enumerate() {
                colors.extend(std::iter::repeat((c + 1) as u8).take(mult));
            }
            let mut counts = vec![0u64; edges.len() + 1];
            multiset_permutations(colors, |k| {
                let mut a = 0;
                for &(i, j) in &edges {
                    let (ki, kj) = (k[i - 1], k[j - 1]);
                    if proper && ki == kj {
                        return;
                    }
                    if kj < ki {
                        a += 1;
                    }
                }
                counts[a] += 1;
            });
            (lambda, counts)
        })
        .collect();
    let mut out = GradedSymmetricFunction::zero(n, Basis::M);
    let mut by_q: BTreeMap<usize, Vec<(Partition, BigRational)>> = BTreeMap::new();
    for (lambda, counts) in per_lambda {
        for (a, &c) in counts.iter().enumerate() {
            if c > 0 {
                by_q.entry(a).or_default().push((lambda.clone(), BigRational::from_integer(BigInt::from(c))));
            }
        }
    }
    for (a, terms) in by_q {
        out.set(a, SymmetricFunction::from_terms(n, Basis::M, terms)?);
    }
    Ok(out)
}

/// `Σ_{κ proper} z_κ q^{asc κ}` in the monomial basis.
pub fn csf_q(h: &HessenbergFunction) -> Result<GradedSymmetricFunction, ColoringError> {
    by_content(h, true)
}

/// `Σ_κ z_κ q^{asc κ}` over all colorings, in the monomial basis.
pub fn llt(h: &HessenbergFunction) -> Result<GradedSymmetricFunction, ColoringError> {
    by_content(h, false)
}

/// Sums over every coloring `[n] → [m]` and reads off monomial coefficients,
/// failing if two rearrangements of a content disagree.
pub fn expansion_with_colors(h: &HessenbergFunction, proper: bool, m: usize) -> Result<GradedSymmetricFunction, ColoringError> {
    let n = h.n();
    check_n(n)?;
    let sum = content_sum(h, proper, m, |_| true);
    let mut by_lambda: BTreeMap<Partition, (Vec<u8>, Vec<i64>)> = BTreeMap::new();
    for (content, poly) in sum.iter() {
        let lambda = Partition::new(content.iter().map(|&c| c as usize).collect());
        match by_lambda.get(&lambda) {
            Some((first, p)) if p != poly => {
                return Err(ColoringError::NotSymmetric { a: first.clone(), b: content.clone() });
            }
            Some(_) => {}
            None => {
                by_lambda.insert(lambda, (content.clone(), poly.clone()));
            }
        }
    }
    // contents that never occur must be absent for every rearrangement
    for lambda in partitions(n) {
        if lambda.len() > m {
            continue;
        }
        let mut comp: Vec<u8> = lambda.parts().iter().map(|&p| p as u8).collect();
        comp.resize(m, 0);
        let mut seen_zero = None;
        let mut seen_nonzero = None;
        multiset_permutations(comp, |c| {
            if sum.get(c).is_some() {
                seen_nonzero.get_or_insert_with(|| c.to_vec());
            } else {
                seen_zero.get_or_insert_with(|| c.to_vec());
            }
        });
        if let (Some(a), Some(b)) = (seen_zero, seen_nonzero) {
            return Err(ColoringError::NotSymmetric { a, b });
        }
    }
    let mut out = GradedSymmetricFunction::zero(n, Basis::M);
    let mut by_q: BTreeMap<usize, Vec<(Partition, BigRational)>> = BTreeMap::new();
    for (lambda, (_, poly)) in by_lambda {
        for (a, &c) in poly.iter().enumerate() {
            if c != 0 {
                by_q.entry(a).or_default().push((lambda.clone(), BigRational::from_integer(BigInt::from(c))));
            }
        }
    }
    for (a, terms) in by_q {
        out.set(a, SymmetricFunction::from_terms(n, Basis::M, terms)?);
    }
    Ok(out)
}

/// Content-refined q-polynomials: `Σ z_κ q^{a(κ)}` keyed by the content of `κ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContentPoly {
    terms: BTreeMap<Vec<u8>, Vec<i64>>,
}

impl ContentPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, content: &[u8]) -> Option<&Vec<i64>> {
        self.terms.get(content)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u8>, &Vec<i64>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, content: Vec<u8>, q_deg: usize, c: i64) {
        let p = self.terms.entry(content.clone()).or_default();
        if p.len() <= q_deg {
            p.resize(q_deg + 1, 0);
        }
        p[q_deg] += c;
        Self::normalize_one(&mut self.terms, &content);
    }

    fn normalize_one(terms: &mut BTreeMap<Vec<u8>, Vec<i64>>, key: &[u8]) {
        if let Some(p) = terms.get_mut(key) {
            while p.last() == Some(&0) {
                p.pop();
            }
            if p.is_empty() {
                terms.remove(key);
            }
        }
    }

    /// `self · Σ_i poly[i] q^i`.
    pub fn mul_q_poly(&self, poly: &[i64]) -> ContentPoly {
        let mut out = ContentPoly::new();
        for (k, p) in &self.terms {
            for (i, &a) in p.iter().enumerate() {
                for (j, &b) in poly.iter().enumerate() {
                    if a != 0 && b != 0 {
                        out.add_term(k.clone(), i + j, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ContentPoly) -> ContentPoly {
        let mut out = self.clone();
        for (k, p) in &other.terms {
            for (i, &c) in p.iter().enumerate() {
                if c != 0 {
                    out.add_term(k.clone(), i, c);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &ContentPoly) -> ContentPoly {
        self.add(&other.mul_q_poly(&[-1]))
    }

    pub fn total_count(&self) -> i64 {
        self.terms.values().flat_map(|p| p.iter()).sum()
    }
}

/// All colorings `[n] → [m]`, in lexicographic order.
pub fn all_colorings(n: usize, m: usize) -> Vec<Coloring> {
    let mut out = Vec::with_capacity(m.pow(n as u32));
    let mut cur = vec![1u8; n];
    if m == 0 {
        return out;
    }
    loop {
        out.push(Coloring(cur.clone()));
        let Some(i) = (0..n).rev().find(|&i| (cur[i] as usize) < m) else {
            return out;
        };
        cur[i] += 1;
        for c in &mut cur[i + 1..] {
            *c = 1;
        }
    }
}

/// `Σ z_κ q^{asc_h κ}` over colorings `[n] → [m]` (proper ones if asked)
/// passing `filter`.
pub fn content_sum(h: &HessenbergFunction, proper: bool, m: usize, filter: impl Fn(&Coloring) -> bool) -> ContentPoly {
    let mut out = ContentPoly::new();
    for k in all_colorings(h.n(), m) {
        if (proper && !is_proper(h, &k)) || !filter(&k) {
            continue;
        }
        out.add_term(k.content(m), asc(h, &k), 1);
    }
    out
}

/// The comparison of `κ(d0)` with `κ(d)` and with `κ(d+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoringClass {
    pub with_d: Ordering,
    pub with_d_plus_1: Ordering,
}

fn sym(o: Ordering) -> char {
    match o {
        Ordering::Less => '<',
        Ordering::Equal => '=',
        Ordering::Greater => '>',
    }
}

impl ColoringClass {
    pub const ALL: [ColoringClass; 9] = {
        use Ordering::*;
        [
            ColoringClass { with_d: Less, with_d_plus_1: Less },
            ColoringClass { with_d: Less, with_d_plus_1: Equal },
            ColoringClass { with_d: Less, with_d_plus_1: Greater },
            ColoringClass { with_d: Equal, with_d_plus_1: Less },
            ColoringClass { with_d: Equal, with_d_plus_1: Equal },
            ColoringClass { with_d: Equal, with_d_plus_1: Greater },
            ColoringClass { with_d: Greater, with_d_plus_1: Less },
            ColoringClass { with_d: Greater, with_d_plus_1: Equal },
            ColoringClass { with_d: Greater, with_d_plus_1: Greater },
        ]
    };

    /// One of `<<, <=, <>, =<, ==, =>, ><, >=, >>`.
    pub fn tag(&self) -> String {
        format!("{}{}", sym(self.with_d), sym(self.with_d_plus_1))
    }

    pub fn from_tag(tag: &str) -> Option<ColoringClass> {
        Self::ALL.into_iter().find(|c| c.tag() == tag)
    }

    pub fn coarse(&self) -> CoarseClass {
        CoarseClass {
            lt_d: self.with_d == Ordering::Less,
            lt_d_plus_1: self.with_d_plus_1 == Ordering::Less,
        }
    }
}

impl fmt::Display for ColoringClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// The four-way split by `κ(d0) < κ(d)` and `κ(d0) < κ(d+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoarseClass {
    pub lt_d: bool,
    pub lt_d_plus_1: bool,
}

impl CoarseClass {
    pub const LT_LT: CoarseClass = CoarseClass { lt_d: true, lt_d_plus_1: true };
    pub const LT_GE: CoarseClass = CoarseClass { lt_d: true, lt_d_plus_1: false };
    pub const GE_LT: CoarseClass = CoarseClass { lt_d: false, lt_d_plus_1: true };
    pub const GE_GE: CoarseClass = CoarseClass { lt_d: false, lt_d_plus_1: false };
    pub const ALL: [CoarseClass; 4] = [Self::LT_LT, Self::LT_GE, Self::GE_LT, Self::GE_GE];

    pub fn tag(&self) -> &'static str {
        match (self.lt_d, self.lt_d_plus_1) {
            (true, true) => "<<",
            (true, false) => "<≥",
            (false, true) => "≥<",
            (false, false) => "≥≥",
        }
    }
}

impl fmt::Display for CoarseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn c_params(triple: &ModularTriple) -> Result<(usize, usize), ColoringError> {
    triple.c_params().ok_or(ColoringError::WrongKind)
}

fn classify_unchecked(d: usize, d0: usize, kappa: &Coloring) -> ColoringClass {
    ColoringClass {
        with_d: kappa.at(d0).cmp(&kappa.at(d)),
        with_d_plus_1: kappa.at(d0).cmp(&kappa.at(d + 1)),
    }
}

/// Nine-way class of a coloring that must be proper for `G_{h_-}`.
pub fn classify_coloring(triple: &ModularTriple, kappa: &Coloring) -> Result<ColoringClass, ColoringError> {
    let (d, d0) = c_params(triple)?;
    if kappa.n() != triple.n() {
        return Err(ColoringError::WrongLength { got: kappa.n(), expected: triple.n() });
    }
    if !is_proper(&triple.minus, kappa) {
        return Err(ColoringError::NotProper(kappa.clone()));
    }
    Ok(classify_unchecked(d, d0, kappa))
}

/// Four-way class; any coloring is accepted.
pub fn classify_coloring_coarse(triple: &ModularTriple, kappa: &Coloring) -> Result<CoarseClass, ColoringError> {
    let (d, d0) = c_params(triple)?;
    if kappa.n() != triple.n() {
        return Err(ColoringError::WrongLength { got: kappa.n(), expected: triple.n() });
    }
    Ok(classify_unchecked(d, d0, kappa).coarse())
}

/// `κ ∘ τ` for `τ = (d+1, d)`: swaps the colors at positions `d` and `d+1`.
pub fn tau_bijection(d: usize, kappa: &Coloring) -> Coloring {
    let mut v = kappa.0.clone();
    v.swap(d - 1, d);
    Coloring(v)
}

/// `asc_-`: ascents counted on the edges of `G_{h_-}`.
pub fn asc_minus(triple: &ModularTriple, kappa: &Coloring) -> usize {
    asc(&triple.minus, kappa)
}

fn modular_law<F>(triple: &ModularTriple, f: F) -> Result<bool, ColoringError>
where
    F: Fn(&HessenbergFunction) -> Result<GradedSymmetricFunction, ColoringError>,
{
    let (fm, fh, fp) = (f(&triple.minus)?, f(&triple.h)?, f(&triple.plus)?);
    let lhs = fp.sub(&fh)?;
    let rhs = fh.sub(&fm)?.scale_q_poly_i64(&[0, 1]);
    Ok(lhs.equals(&rhs)?)
}

/// `LLT[h+] - LLT[h] = q (LLT[h] - LLT[h-])`.
pub fn check_modular_law_llt(triple: &ModularTriple) -> Result<bool, ColoringError> {
    modular_law(triple, llt)
}

/// `csf[h+] - csf[h] = q (csf[h] - csf[h-])`.
pub fn check_modular_law_csf(triple: &ModularTriple) -> Result<bool, ColoringError> {
    modular_law(triple, csf_q)
}

/// Outcome of one refined identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

fn record(out: &mut Vec<IdentityCheck>, name: &str, holds: bool) {
    out.push(IdentityCheck { name: name.to_string(), holds });
}

/// Content-refined sums `Σ_{κ ∈ class} z_κ q^{asc_-(κ)}` with `m` colors.
pub fn class_sums<K: Ord + Copy>(
    triple: &ModularTriple,
    colorings: &[Coloring],
    m: usize,
    class_of: impl Fn(&Coloring) -> K,
) -> BTreeMap<K, ContentPoly> {
    let mut out: BTreeMap<K, ContentPoly> = BTreeMap::new();
    for k in colorings {
        out.entry(class_of(k)).or_default().add_term(k.content(m), asc_minus(triple, k), 1);
    }
    out
}

fn tau_maps_onto(d: usize, from: &BTreeSet<&Coloring>, to: &BTreeSet<&Coloring>) -> bool {
    let image: BTreeSet<Coloring> = from.iter().map(|k| tau_bijection(d, k)).collect();
    image.len() == from.len() && image.iter().collect::<BTreeSet<_>>() == *to
}

/// The four-class decomposition identities for the LLT modular law, with
/// `m` colors: totals, the τ-bijection `C_{<≥} → C_{≥<}`, the ascent shift
/// on `C_{<≥}`, and the resulting sum identity.
pub fn check_llt_decomposition(triple: &ModularTriple, m: usize) -> Result<Vec<IdentityCheck>, ColoringError> {
    let (d, d0) = c_params(triple)?;
    let n = triple.n();
    check_n(n)?;
    let all = all_colorings(n, m);
    let class = |k: &Coloring| classify_unchecked(d, d0, k).coarse();
    let sums = class_sums(triple, &all, m, class);
    let get = |c: CoarseClass| sums.get(&c).cloned().unwrap_or_default();
    let (ll, lg, gl, gg) = (get(CoarseClass::LT_LT), get(CoarseClass::LT_GE), get(CoarseClass::GE_LT), get(CoarseClass::GE_GE));
    let mut out = Vec::new();

    let plus = ll.mul_q_poly(&[0, 0, 1]).add(&lg.mul_q_poly(&[0, 1])).add(&gl.mul_q_poly(&[0, 1])).add(&gg);
    let mid = ll.mul_q_poly(&[0, 1]).add(&lg.mul_q_poly(&[0, 1])).add(&gl).add(&gg);
    let minus = ll.add(&lg).add(&gl).add(&gg);
    record(&mut out, "LLT[h+] from four classes", plus == content_sum(&triple.plus, false, m, |_| true));
    record(&mut out, "LLT[h] from four classes", mid == content_sum(&triple.h, false, m, |_| true));
    record(&mut out, "LLT[h-] from four classes", minus == content_sum(&triple.minus, false, m, |_| true));

    let set = |c: CoarseClass| -> BTreeSet<&Coloring> { all.iter().filter(|k| class(k) == c).collect() };
    let (s_lg, s_gl) = (set(CoarseClass::LT_GE), set(CoarseClass::GE_LT));
    record(&mut out, "tau maps C<≥ onto C≥<", tau_maps_onto(d, &s_lg, &s_gl));
    let contents_kept = s_lg.iter().all(|k| tau_bijection(d, k).content(m) == k.content(m));
    record(&mut out, "tau preserves content", contents_kept);
    let shift = s_lg.iter().all(|k| asc_minus(triple, k) + 1 == asc_minus(triple, &tau_bijection(d, k)));
    record(&mut out, "asc_-(κ) + 1 = asc_-(κ∘τ) on C<≥", shift);
    record(&mut out, "q·Σ C<≥ = Σ C≥<", lg.mul_q_poly(&[0, 1]) == gl);
    let lhs = plus.sub(&mid);
    let rhs = mid.sub(&minus).mul_q_poly(&[0, 1]);
    record(&mut out, "LLT modular law (refined)", lhs == rhs);
    Ok(out)
}

/// The nine-class decomposition identities for the csf modular law.
pub fn check_csf_decomposition(triple: &ModularTriple, m: usize) -> Result<Vec<IdentityCheck>, ColoringError> {
    let (d, d0) = c_params(triple)?;
    let n = triple.n();
    check_n(n)?;
    let proper: Vec<Coloring> = all_colorings(n, m).into_iter().filter(|k| is_proper(&triple.minus, k)).collect();
    let class = |k: &Coloring| classify_unchecked(d, d0, k);
    let sums = class_sums(triple, &proper, m, class);
    let get = |t: &str| sums.get(&ColoringClass::from_tag(t).unwrap()).cloned().unwrap_or_default();
    let mut out = Vec::new();

    record(&mut out, "C== is empty", get("==").is_zero());
    let set = |t: &str| -> BTreeSet<&Coloring> {
        let c = ColoringClass::from_tag(t).unwrap();
        proper.iter().filter(|k| class(k) == c).collect()
    };
    let proper_h: BTreeSet<&Coloring> = proper.iter().filter(|k| is_proper(&triple.h, k)).collect();
    let proper_hp: BTreeSet<&Coloring> = proper.iter().filter(|k| is_proper(&triple.plus, k)).collect();
    let union = |tags: &[&str]| -> BTreeSet<&Coloring> { tags.iter().flat_map(|t| set(t)).collect() };
    record(&mut out, "PC(G_h) = <<,<=,<>,><,>=,>>", proper_h == union(&["<<", "<=", "<>", "><", ">=", ">>"]));
    record(&mut out, "PC(G_h+) = <<,<>,><,>>", proper_hp == union(&["<<", "<>", "><", ">>"]));

    let forced = [("<=", false), ("<>", false), ("=<", true), ("=>", false), ("><", true), (">=", true)];
    let mut forced_ok = true;
    for (t, up) in forced {
        forced_ok &= set(t).iter().all(|k| (k.at(d) < k.at(d + 1)) == up && k.at(d) != k.at(d + 1));
    }
    record(&mut out, "forced order of κ(d), κ(d+1) per class", forced_ok);

    let csf_p = content_sum(&triple.plus, true, m, |_| true);
    let csf_h = content_sum(&triple.h, true, m, |_| true);
    let csf_m = content_sum(&triple.minus, true, m, |_| true);
    let diff_plus = get("<<").mul_q_poly(&[0, -1, 1])
        .sub(&get("<=").mul_q_poly(&[0, 1]))
        .add(&get("><").mul_q_poly(&[-1, 1]))
        .sub(&get(">="));
    record(&mut out, "csf[h+] - csf[h] from classes", csf_p.sub(&csf_h) == diff_plus);
    let diff = get("<<").mul_q_poly(&[-1, 1])
        .add(&get("<=").mul_q_poly(&[-1, 1]))
        .add(&get("<>").mul_q_poly(&[-1, 1]))
        .sub(&get("=<"))
        .sub(&get("=>"));
    record(&mut out, "csf[h] - csf[h-] from classes", csf_h.sub(&csf_m) == diff);
    record(&mut out, "q·Σ C<= - Σ C=< = 0", get("<=").mul_q_poly(&[0, 1]).sub(&get("=<")).is_zero());
    let diff2 = get("<<").mul_q_poly(&[-1, 1])
        .sub(&get("<="))
        .add(&get("<>").mul_q_poly(&[-1, 1]))
        .sub(&get("=>"));
    record(&mut out, "csf[h] - csf[h-] after cancellation", csf_h.sub(&csf_m) == diff2);

    for (a, b) in [("<=", "=<"), ("<>", "><"), ("=>", ">=")] {
        let (sa, sb) = (set(a), set(b));
        record(&mut out, &format!("tau maps C{a} onto C{b}"), tau_maps_onto(d, &sa, &sb));
        record(&mut out, &format!("q·Σ C{a} = Σ C{b}"), get(a).mul_q_poly(&[0, 1]) == get(b));
    }
    record(
        &mut out,
        "csf modular law (refined)",
        csf_p.sub(&csf_h) == csf_h.sub(&csf_m).mul_q_poly(&[0, 1]),
    );
    Ok(out)
}

/// Whether the triple is one the decomposition checks accept.
pub fn decomposable(triple: &ModularTriple) -> bool {
    triple.kind() == TripleKind::C
}
