//! Hessenberg functions, indifference graphs and modular triples.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HessenbergError {
    #[error("empty value vector")]
    Empty,
    #[error("values not non-decreasing at position {position}")]
    NotNonDecreasing { position: usize },
    #[error("h({position}) = {value} is outside [{position}, {n}]")]
    ValueOutOfRange { position: usize, value: usize, n: usize },
    #[error("cannot parse Hessenberg function {0:?}")]
    Parse(String),
    #[error("internal consistency: {0}")]
    Internal(String),
}

/// A non-decreasing `h: [n] → [n]` with `h(j) ≥ j`; `values[j-1] = h(j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self, HessenbergError> {
        validate(&values)?;
        Ok(HessenbergFunction { values })
    }

    /// `h(j) = j`.
    pub fn identity(n: usize) -> Self {
        HessenbergFunction {
            values: (1..=n).collect(),
        }
    }

    /// `h(j) = n`.
    pub fn full(n: usize) -> Self {
        HessenbergFunction { values: vec![n; n] }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `h(j)`, 1-based.
    pub fn at(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    /// `Σ (h(j) - j)`, the number of edges of `G_h`.
    pub fn dimension(&self) -> usize {
        self.values.iter().enumerate().map(|(i, &v)| v - (i + 1)).sum()
    }

    /// `h⁻¹(v)`, 1-based positions.
    pub fn preimage(&self, v: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&j| self.at(j) == v).collect()
    }

    fn with_value(&self, j: usize, v: usize) -> Result<Self, HessenbergError> {
        let mut values = self.values.clone();
        values[j - 1] = v;
        HessenbergFunction::new(values)
            .map_err(|e| HessenbergError::Internal(format!("modified {self} at {j}: {e}")))
    }

    /// Box-diagram rendering: row `i`, column `j` is `#` when `i ≤ h(j)`,
    /// with the diagonal marked `\`.
    pub fn render_ascii(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        for i in 1..=n {
            for j in 1..=n {
                out.push(if i == j {
                    '\\'
                } else if j < i && i <= self.at(j) {
                    '#'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h({self})")
    }
}

impl FromStr for HessenbergFunction {
    type Err = HessenbergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values: Result<Vec<usize>, _> = trimmed.split(',').map(|p| p.trim().parse::<usize>()).collect();
        HessenbergFunction::new(values.map_err(|_| HessenbergError::Parse(s.to_string()))?)
    }
}

impl TryFrom<Vec<usize>> for HessenbergFunction {
    type Error = HessenbergError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        HessenbergFunction::new(v)
    }
}

impl From<HessenbergFunction> for Vec<usize> {
    fn from(h: HessenbergFunction) -> Self {
        h.values
    }
}

pub fn validate(values: &[usize]) -> Result<(), HessenbergError> {
    let n = values.len();
    if n == 0 {
        return Err(HessenbergError::Empty);
    }
    for (i, &v) in values.iter().enumerate() {
        if i > 0 && v < values[i - 1] {
            return Err(HessenbergError::NotNonDecreasing { position: i + 1 });
        }
        if v < i + 1 || v > n {
            return Err(HessenbergError::ValueOutOfRange {
                position: i + 1,
                value: v,
                n,
            });
        }
    }
    Ok(())
}

/// `h^t(j') = #{k : h(k) ≥ n+1-j'}`.
pub fn transpose(h: &HessenbergFunction) -> HessenbergFunction {
    let n = h.n();
    let values = (1..=n)
        .map(|jp| h.values.iter().filter(|&&v| v >= n + 1 - jp).count())
        .collect();
    HessenbergFunction { values }
}

pub fn product(h1: &HessenbergFunction, h2: &HessenbergFunction) -> HessenbergFunction {
    let n1 = h1.n();
    let mut values = h1.values.clone();
    values.extend(h2.values.iter().map(|v| v + n1));
    HessenbergFunction { values }
}

/// Edges `{i, j}` with `j < i ≤ h(j)`, stored as `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndifferenceGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl IndifferenceGraph {
    pub fn contains(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i > j { (i, j) } else { (j, i) };
        self.edges.contains(&(a, b))
    }
}

/// Edges ordered by `j`, then `i`.
pub fn indifference_graph(h: &HessenbergFunction) -> IndifferenceGraph {
    let mut edges = Vec::new();
    for j in 1..=h.n() {
        for i in j + 1..=h.at(j) {
            edges.push((i, j));
        }
    }
    IndifferenceGraph { n: h.n(), edges }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TripleKind {
    C,
    R,
}

impl fmt::Display for TripleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripleKind::C => "C",
            TripleKind::R => "R",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TripleParams {
    C { d: usize, d0: usize },
    R { d_prime: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModularTriple {
    pub params: TripleParams,
    pub minus: HessenbergFunction,
    pub h: HessenbergFunction,
    pub plus: HessenbergFunction,
}

impl ModularTriple {
    pub fn kind(&self) -> TripleKind {
        match self.params {
            TripleParams::C { .. } => TripleKind::C,
            TripleParams::R { .. } => TripleKind::R,
        }
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    /// `(d, d0)` for kind C.
    pub fn c_params(&self) -> Option<(usize, usize)> {
        match self.params {
            TripleParams::C { d, d0 } => Some((d, d0)),
            TripleParams::R { .. } => None,
        }
    }

    /// Builds the kind-C triple at `(d, d0)` if the conditions hold.
    pub fn kind_c(h: &HessenbergFunction, d: usize, d0: usize) -> Result<Option<Self>, HessenbergError> {
        let n = h.n();
        if !(1 <= d0 && d0 < d && d < n) || h.at(d) != h.at(d + 1) || h.preimage(d) != [d0] {
            return Ok(None);
        }
        Ok(Some(ModularTriple {
            params: TripleParams::C { d, d0 },
            minus: h.with_value(d0, d - 1)?,
            h: h.clone(),
            plus: h.with_value(d0, d + 1)?,
        }))
    }

    /// Builds the kind-R triple at `d'` if the conditions hold.
    pub fn kind_r(h: &HessenbergFunction, dp: usize) -> Result<Option<Self>, HessenbergError> {
        let n = h.n();
        if !(1 <= dp && dp < n)
            || h.at(dp) + 1 != h.at(dp + 1)
            || h.at(dp + 1) == dp + 1
            || !h.preimage(dp).is_empty()
        {
            return Ok(None);
        }
        Ok(Some(ModularTriple {
            params: TripleParams::R { d_prime: dp },
            minus: h.with_value(dp + 1, h.at(dp))?,
            h: h.clone(),
            plus: h.with_value(dp, h.at(dp) + 1)?,
        }))
    }

    /// For kind R, the kind-C triple of `h^t` at `d = n - d'`; members are the
    /// transposes of this triple's members.
    pub fn transposed(&self) -> ModularTriple {
        let params = match self.params {
            TripleParams::R { d_prime } => {
                let t = transpose(&self.h);
                let d = self.n() - d_prime;
                let d0 = t.preimage(d).first().copied().unwrap_or(0);
                TripleParams::C { d, d0 }
            }
            TripleParams::C { d, .. } => TripleParams::R {
                d_prime: self.n() - d,
            },
        };
        ModularTriple {
            params,
            minus: transpose(&self.minus),
            h: transpose(&self.h),
            plus: transpose(&self.plus),
        }
    }
}

impl fmt::Display for ModularTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params {
            TripleParams::C { d, d0 } => write!(f, "C(d={d},d0={d0})")?,
            TripleParams::R { d_prime } => write!(f, "R(d'={d_prime})")?,
        }
        write!(f, " [{}] [{}] [{}]", self.minus, self.h, self.plus)
    }
}

/// All kind-C triples, then all kind-R triples, each ordered by position.
pub fn find_modular_triples(h: &HessenbergFunction) -> Result<Vec<ModularTriple>, HessenbergError> {
    let n = h.n();
    let mut out = Vec::new();
    for d in 2..n {
        for d0 in 1..d {
            if let Some(t) = ModularTriple::kind_c(h, d, d0)? {
                out.push(t);
            }
        }
    }
    for dp in 1..n {
        if let Some(t) = ModularTriple::kind_r(h, dp)? {
            out.push(t);
        }
    }
    for t in &out {
        let diffs = (1..=n).filter(|&j| t.minus.at(j) != h.at(j) || t.plus.at(j) != h.at(j)).count();
        let ordered = (1..=n).all(|j| t.minus.at(j) <= h.at(j) && h.at(j) <= t.plus.at(j));
        if !ordered || diffs == 0 || diffs > 2 {
            return Err(HessenbergError::Internal(format!("malformed triple {t}")));
        }
    }
    Ok(out)
}

/// Kind-C triples of `h^t` match kind-R triples of `h` under `d' = n - d`,
/// with transposed members.
pub fn transpose_duality_check(h: &HessenbergFunction) -> bool {
    let n = h.n();
    let ht = transpose(h);
    let (Ok(c_of_t), Ok(of_h)) = (find_modular_triples(&ht), find_modular_triples(h)) else {
        return false;
    };
    let c_of_t: Vec<_> = c_of_t.into_iter().filter(|t| t.kind() == TripleKind::C).collect();
    let r_of_h: Vec<_> = of_h.into_iter().filter(|t| t.kind() == TripleKind::R).collect();
    if c_of_t.len() != r_of_h.len() {
        return false;
    }
    c_of_t.iter().all(|c| {
        let (d, _) = c.c_params().unwrap();
        r_of_h.iter().any(|r| {
            r.params == TripleParams::R { d_prime: n - d }
                && transpose(&c.minus) == r.minus
                && transpose(&c.plus) == r.plus
        })
    })
}

/// Block sizes `(n_1, …, n_r)` when `h` is a product of constant functions.
pub fn is_initial(h: &HessenbergFunction) -> Option<Vec<usize>> {
    let mut blocks = Vec::new();
    let mut start = 0;
    while start < h.n() {
        let end = h.at(start + 1);
        if (start + 1..=end).any(|j| h.at(j) != end) {
            return None;
        }
        blocks.push(end - start);
        start = end;
    }
    Some(blocks)
}

/// Every Hessenberg function of size `n`, in lexicographic order.
pub fn enumerate_hessenberg(n: usize) -> Vec<HessenbergFunction> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        let j = cur.len() + 1;
        if j > n {
            out.push(HessenbergFunction { values: cur.clone() });
            return;
        }
        let lo = cur.last().copied().unwrap_or(1).max(j);
        for v in lo..=n {
            cur.push(v);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(h("2,5,6,8,9,9,11,11,11,11,11").n(), 11);
        assert!(HessenbergFunction::new(vec![1, 2, 3]).is_ok());
        assert_eq!(
            HessenbergFunction::new(vec![2, 1, 3]),
            Err(HessenbergError::NotNonDecreasing { position: 2 })
        );
        assert!(matches!(
            HessenbergFunction::new(vec![1, 1]),
            Err(HessenbergError::ValueOutOfRange { position: 2, .. })
        ));
        assert!(matches!(
            HessenbergFunction::new(vec![3, 3]),
            Err(HessenbergError::ValueOutOfRange { position: 1, .. })
        ));
    }

    #[test]
    fn figure_one_transpose() {
        let left = h("2,5,6,8,9,9,11,11,11,11,11");
        let right = h("5,5,7,8,8,9,10,10,10,11,11");
        assert_eq!(transpose(&left), right);
        assert_eq!(transpose(&right), left);
        assert_eq!(transpose(&h("2,2")), h("2,2"));
        assert_eq!(transpose(&HessenbergFunction::full(5)), HessenbergFunction::full(5));
    }

    #[test]
    fn products() {
        assert_eq!(product(&h("1"), &h("1")), h("1,2"));
        assert_eq!(product(&h("2,2"), &h("1")), h("2,2,3"));
        assert_eq!(product(&h("2,2"), &h("2,2")), h("2,2,4,4"));
    }

    #[test]
    fn indifference_graphs() {
        assert_eq!(indifference_graph(&h("2,3,3")).edges, vec![(2, 1), (3, 2)]);
        assert!(indifference_graph(&h("1,2,3")).edges.is_empty());
        assert_eq!(indifference_graph(&h("3,3,3")).edges, vec![(2, 1), (3, 1), (3, 2)]);
    }

    fn positions(h: &HessenbergFunction) -> Vec<TripleParams> {
        find_modular_triples(h).unwrap().into_iter().map(|t| t.params).collect()
    }

    #[test]
    fn figure_one_triples() {
        assert_eq!(
            positions(&h("2,5,6,8,9,9,11,11,11,11,11")),
            vec![
                TripleParams::C { d: 5, d0: 2 },
                TripleParams::C { d: 8, d0: 4 },
                TripleParams::R { d_prime: 4 }
            ]
        );
        assert_eq!(
            positions(&h("5,5,7,8,8,9,10,10,10,11,11")),
            vec![
                TripleParams::C { d: 7, d0: 3 },
                TripleParams::R { d_prime: 3 },
                TripleParams::R { d_prime: 6 }
            ]
        );
    }

    #[test]
    fn triple_of_233() {
        let ts = find_modular_triples(&h("2,3,3")).unwrap();
        let c = &ts[0];
        assert_eq!(c.params, TripleParams::C { d: 2, d0: 1 });
        assert_eq!(c.minus, h("1,3,3"));
        assert_eq!(c.plus, h("3,3,3"));
        let c2 = ts[1].transposed();
        assert_eq!(c2.params, TripleParams::C { d: 2, d0: 1 });
        assert_eq!(c2.minus, h("1,3,3"));
    }

    #[test]
    fn duality_on_examples() {
        assert!(transpose_duality_check(&h("2,5,6,8,9,9,11,11,11,11,11")));
        assert!(transpose_duality_check(&h("5,5,7,8,8,9,10,10,10,11,11")));
        assert!(transpose_duality_check(&HessenbergFunction::identity(4)));
        assert!(transpose_duality_check(&h("2,3,3")));
    }

    #[test]
    fn initial_functions() {
        assert_eq!(is_initial(&h("2,2,4,4")), Some(vec![2, 2]));
        assert_eq!(is_initial(&h("3,3,3")), Some(vec![3]));
        assert_eq!(is_initial(&h("2,3,3")), None);
        assert_eq!(is_initial(&h("1,2,3")), Some(vec![1, 1, 1]));
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 1..=8 {
            assert_eq!(enumerate_hessenberg(n).len(), catalan[n]);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // every vector in [1, n]^n filtered by the definition
        for n in 1usize..=5 {
            let mut brute = Vec::new();
            let total = n.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let v: Vec<usize> = (0..n).map(|_| { let x = c % n + 1; c /= n; x }).collect();
                if validate(&v).is_ok() {
                    brute.push(v);
                }
            }
            brute.sort();
            let ours: Vec<Vec<usize>> = enumerate_hessenberg(n).into_iter().map(Vec::from).collect();
            assert_eq!(ours, brute);
        }
    }

    #[test]
    fn ascii_render() {
        assert_eq!(h("2,3,3").render_ascii(), "\\..\n#\\.\n.#\\\n");
    }

    #[test]
    fn exhaustive_involution_and_duality() {
        for n in 1..=8 {
            for f in enumerate_hessenberg(n) {
                assert_eq!(transpose(&transpose(&f)), f);
                assert_eq!(transpose(&f).dimension(), f.dimension());
                if n <= 6 {
                    assert!(transpose_duality_check(&f), "duality fails at {f}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn triples_are_valid_and_pointwise_ordered(n in 2usize..8, pick in 0usize..10_000) {
            let all = enumerate_hessenberg(n);
            let f = &all[pick % all.len()];
            for t in find_modular_triples(f).unwrap() {
                prop_assert!(validate(t.minus.values()).is_ok());
                prop_assert!(validate(t.plus.values()).is_ok());
                prop_assert_eq!(t.plus.dimension(), f.dimension() + 1);
                prop_assert_eq!(t.minus.dimension() + 1, f.dimension());
                let changed: Vec<usize> = (1..=n)
                    .filter(|&j| t.minus.at(j) != f.at(j) || t.plus.at(j) != f.at(j))
                    .collect();
                match t.params {
                    TripleParams::C { d0, .. } => prop_assert_eq!(changed, vec![d0]),
                    TripleParams::R { d_prime } => prop_assert_eq!(changed, vec![d_prime, d_prime + 1]),
                }
            }
        }
    }
}
