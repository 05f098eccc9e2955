//! Homogeneous symmetric functions of degree `n ≤ 8` over the rationals.

mod partition;
pub mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

pub use partition::{factorial, partitions, Partition};

pub const DEGREE_CAP: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymFunError {
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("index {index} has weight {weight}, expected {degree}")]
    WrongWeight { index: Partition, weight: usize, degree: usize },
    #[error("malformed symmetric function JSON: {0}")]
    Json(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            other => Err(format!("unknown basis {other:?} (expected m, e, h, p or s)")),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_degree(n: usize) -> Result<(), SymFunError> {
    if n > DEGREE_CAP {
        Err(SymFunError::DegreeTooLarge { degree: n, cap: DEGREE_CAP })
    } else {
        Ok(())
    }
}

pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let d: BigInt = b.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(a.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricFunction {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymmetricFunction {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymmetricFunction {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.weight(), basis);
        f.coeffs.insert(lambda, BigRational::one());
        f
    }

    pub fn from_terms(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Result<Self, SymFunError> {
        let mut f = Self::zero(degree, basis);
        for (l, c) in terms {
            if l.weight() != degree {
                return Err(SymFunError::WrongWeight {
                    weight: l.weight(),
                    index: l,
                    degree,
                });
            }
            f.add_term(l, c);
        }
        Ok(f)
    }

    pub fn from_i64_terms(degree: usize, basis: Basis, terms: &[(&[usize], i64)]) -> Self {
        Self::from_terms(
            degree,
            basis,
            terms
                .iter()
                .map(|(p, c)| (Partition::new(p.to_vec()), BigRational::from_integer(BigInt::from(*c)))),
        )
        .expect("terms of the stated degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, l: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(l.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        if !c.is_zero() {
            for (l, v) in &self.coeffs {
                out.coeffs.insert(l.clone(), v * c);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymFunError> {
        if self.degree != other.degree {
            return Err(SymFunError::DegreeMismatch(self.degree, other.degree));
        }
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (l, v) in other.coeffs {
            out.add_term(l, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SymFunError> {
        self.add(&other.neg())
    }

    pub fn to_basis(&self, target: Basis) -> Result<Self, SymFunError> {
        convert(self, target)
    }

    /// Equality as elements of Λ, independent of the stored basis.
    pub fn equals(&self, other: &Self) -> Result<bool, SymFunError> {
        if self.degree != other.degree {
            return Ok(false);
        }
        Ok(self.to_basis(Basis::M)? == other.to_basis(Basis::M)?)
    }

    /// True when every coefficient is non-negative.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn to_json_terms(&self) -> Value {
        let mut m = Map::new();
        for (l, c) in &self.coeffs {
            m.insert(l.to_string(), Value::String(rational_to_string(c)));
        }
        Value::Object(m)
    }

    fn from_json_terms(degree: usize, basis: Basis, v: &Value) -> Result<Self, SymFunError> {
        let obj = v.as_object().ok_or_else(|| SymFunError::Json("terms must be objects".into()))?;
        let mut terms = Vec::new();
        for (k, c) in obj {
            let l: Partition = k.parse().map_err(SymFunError::Json)?;
            let c = c
                .as_str()
                .and_then(parse_rational)
                .ok_or_else(|| SymFunError::Json(format!("bad coefficient for {k}")))?;
            terms.push((l, c));
        }
        Self::from_terms(degree, basis, terms)
    }
}

impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // largest partitions first
        for (k, (l, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mag = c.abs();
            let idx: String = l.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
            if mag.is_one() {
                write!(f, "{}[{idx}]", self.basis)?;
            } else {
                write!(f, "{}*{}[{idx}]", rational_to_string(&mag), self.basis)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetricFunction(deg {}: {self})", self.degree)
    }
}

fn dense(f: &SymmetricFunction, t: &tables::Transition) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); t.index.len()];
    for (l, c) in &f.coeffs {
        v[t.position[l]] = c.clone();
    }
    v
}

pub fn convert(f: &SymmetricFunction, target: Basis) -> Result<SymmetricFunction, SymFunError> {
    check_degree(f.degree)?;
    if f.basis == target {
        return Ok(f.clone());
    }
    let src = tables::transition(f.degree, f.basis);
    let dst = tables::transition(f.degree, target);
    let s = src.to_s.apply(&dense(f, &src));
    let out = dst.from_s.apply(&s);
    SymmetricFunction::from_terms(f.degree, target, dst.index.iter().cloned().zip(out))
}

/// `ω`, through the power sums: `ω p_λ = (-1)^{|λ| - ℓ(λ)} p_λ`.
pub fn omega(f: &SymmetricFunction) -> Result<SymmetricFunction, SymFunError> {
    let p = convert(f, Basis::P)?;
    let mut out = SymmetricFunction::zero(f.degree, Basis::P);
    for (l, c) in &p.coeffs {
        let c = if (l.weight() - l.len()) % 2 == 0 { c.clone() } else { -c };
        out.add_term(l.clone(), c);
    }
    convert(&out, f.basis)
}

/// Product in Λ, computed in the power sums and returned in `f`'s basis.
pub fn multiply(f: &SymmetricFunction, g: &SymmetricFunction) -> Result<SymmetricFunction, SymFunError> {
    let n = f.degree + g.degree;
    check_degree(n)?;
    let fp = convert(f, Basis::P)?;
    let gp = convert(g, Basis::P)?;
    let mut out = SymmetricFunction::zero(n, Basis::P);
    for (a, x) in &fp.coeffs {
        for (b, y) in &gp.coeffs {
            out.add_term(a.union(b), x * y);
        }
    }
    convert(&out, f.basis)
}

/// Class function on `S_n`, one value per cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    pub fn new(n: usize, values: BTreeMap<Partition, BigRational>) -> Self {
        ClassFunction { n, values }
    }

    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> BigRational) -> Self {
        ClassFunction {
            n,
            values: partitions(n).into_iter().map(|l| { let v = f(&l); (l, v) }).collect(),
        }
    }

    pub fn value(&self, lambda: &Partition) -> BigRational {
        self.values.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction::from_fn(self.n, |l| self.value(l) + other.value(l))
    }
}

/// `ch(χ) = Σ_λ χ(λ) p_λ / z_λ`.
pub fn frobenius(chi: &ClassFunction) -> Result<SymmetricFunction, SymFunError> {
    check_degree(chi.n)?;
    let mut out = SymmetricFunction::zero(chi.n, Basis::P);
    for l in partitions(chi.n) {
        let v = chi.value(&l);
        out.add_term(l.clone(), v / BigRational::from_integer(l.z()));
    }
    Ok(out)
}

/// Element of Λ^n[q]: q-exponent ↦ symmetric function.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSymmetricFunction {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<usize, SymmetricFunction>,
}

impl GradedSymmetricFunction {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        GradedSymmetricFunction {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(f: SymmetricFunction) -> Self {
        let mut g = Self::zero(f.degree, f.basis);
        g.set(0, f);
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<usize, SymmetricFunction> {
        &self.terms
    }

    pub fn term(&self, k: usize) -> SymmetricFunction {
        self.terms.get(&k).cloned().unwrap_or_else(|| SymmetricFunction::zero(self.degree, self.basis))
    }

    pub fn max_q_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Replaces the `q^k` term, converting it into this function's basis.
    pub fn set(&mut self, k: usize, f: SymmetricFunction) {
        let f = if f.basis == self.basis { f } else { convert(&f, self.basis).expect("degree checked") };
        if f.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, f);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymFunError> {
        if self.degree != other.degree {
            return Err(SymFunError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (k, f) in &other.terms {
            let sum = out.term(*k).add(f)?;
            out.set(*k, sum);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SymFunError> {
        self.add(&other.scale_q_poly(&[-BigRational::one()]))
    }

    /// Multiplication by `Σ_i c_i q^i`.
    pub fn scale_q_poly(&self, poly: &[BigRational]) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, f) in &self.terms {
                let sum = out.term(k + i).add(&f.scale(c)).expect("same degree");
                out.set(k + i, sum);
            }
        }
        out
    }

    pub fn scale_q_poly_i64(&self, poly: &[i64]) -> Self {
        let p: Vec<BigRational> = poly.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        self.scale_q_poly(&p)
    }

    pub fn to_basis(&self, target: Basis) -> Result<Self, SymFunError> {
        check_degree(self.degree)?;
        let mut out = Self::zero(self.degree, target);
        for (k, f) in &self.terms {
            out.set(*k, convert(f, target)?);
        }
        Ok(out)
    }

    pub fn map_terms(&self, f: impl Fn(&SymmetricFunction) -> Result<SymmetricFunction, SymFunError>) -> Result<Self, SymFunError> {
        let mut out = Self::zero(self.degree, self.basis);
        for (k, t) in &self.terms {
            out.set(*k, f(t)?);
        }
        Ok(out)
    }

    pub fn omega(&self) -> Result<Self, SymFunError> {
        self.map_terms(omega)
    }

    /// Equality of canonical m-basis expansions in every q-degree.
    pub fn equals(&self, other: &Self) -> Result<bool, SymFunError> {
        if self.degree != other.degree {
            return Ok(false);
        }
        Ok(self.to_basis(Basis::M)?.terms == other.to_basis(Basis::M)?.terms)
    }

    /// Coefficient of `b_λ` as a q-polynomial (ascending powers).
    pub fn coeff_poly(&self, lambda: &Partition) -> Vec<BigRational> {
        let top = self.max_q_degree().map_or(0, |d| d + 1);
        let mut v: Vec<BigRational> = (0..top).map(|k| self.term(k).coeff(lambda)).collect();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn to_json(&self) -> Value {
        let mut terms = Map::new();
        for (k, f) in &self.terms {
            terms.insert(k.to_string(), f.to_json_terms());
        }
        json!({ "degree": self.degree, "basis": self.basis.name(), "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self, SymFunError> {
        let degree = v["degree"].as_u64().ok_or_else(|| SymFunError::Json("missing degree".into()))? as usize;
        let basis: Basis = v["basis"]
            .as_str()
            .ok_or_else(|| SymFunError::Json("missing basis".into()))?
            .parse()
            .map_err(SymFunError::Json)?;
        let terms = v["terms"].as_object().ok_or_else(|| SymFunError::Json("missing terms".into()))?;
        let mut out = Self::zero(degree, basis);
        for (k, t) in terms {
            let q: usize = k.parse().map_err(|_| SymFunError::Json(format!("bad q-degree {k:?}")))?;
            out.set(q, SymmetricFunction::from_json_terms(degree, basis, t)?);
        }
        Ok(out)
    }
}

impl fmt::Display for GradedSymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, t)| format!("q^{k}*({t})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GradedSymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graded({self})")
    }
}

/// Renders a q-polynomial such as `1+4q+q^2`.
pub fn q_poly_to_string(coeffs: &[BigRational]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{k}"),
        };
        let mag = c.abs();
        let body = if mono.is_empty() {
            rational_to_string(&mag)
        } else if mag.is_one() {
            mono
        } else {
            format!("{}{mono}", rational_to_string(&mag))
        };
        let sign = if c.is_negative() { "-" } else if parts.is_empty() { "" } else { "+" };
        parts.push(format!("{sign}{body}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn sf(basis: Basis, n: usize, terms: &[(&[usize], i64)]) -> SymmetricFunction {
        SymmetricFunction::from_i64_terms(n, basis, terms)
    }

    #[test]
    fn conversions_to_monomials() {
        let e2 = sf(Basis::E, 2, &[(&[2], 1)]);
        assert_eq!(convert(&e2, Basis::M).unwrap(), sf(Basis::M, 2, &[(&[1, 1], 1)]));
        let p11 = sf(Basis::P, 2, &[(&[1, 1], 1)]);
        assert_eq!(convert(&p11, Basis::M).unwrap(), sf(Basis::M, 2, &[(&[2], 1), (&[1, 1], 2)]));
        let s21 = sf(Basis::S, 3, &[(&[2, 1], 1)]);
        assert_eq!(convert(&s21, Basis::M).unwrap(), sf(Basis::M, 3, &[(&[2, 1], 1), (&[1, 1, 1], 2)]));
    }

    #[test]
    fn monomial_expansions_from_first_principles() {
        // h_n = Σ_λ m_λ and e_n = m_{1^n}
        for n in 1..=6 {
            let hn = convert(&SymmetricFunction::basis_element(Basis::H, Partition::new(vec![n])), Basis::M).unwrap();
            for l in partitions(n) {
                assert_eq!(hn.coeff(&l), r(1));
            }
            let en = convert(&SymmetricFunction::basis_element(Basis::E, Partition::new(vec![n])), Basis::M).unwrap();
            assert_eq!(en, SymmetricFunction::basis_element(Basis::M, Partition::ones(n)));
        }
    }

    #[test]
    fn omega_examples() {
        let e3 = sf(Basis::E, 3, &[(&[3], 1)]);
        assert!(omega(&e3).unwrap().equals(&sf(Basis::H, 3, &[(&[3], 1)])).unwrap());
        let p2 = sf(Basis::P, 2, &[(&[2], 1)]);
        assert_eq!(omega(&p2).unwrap(), sf(Basis::P, 2, &[(&[2], -1)]));
        let s21 = sf(Basis::S, 3, &[(&[2, 1], 1)]);
        assert_eq!(omega(&s21).unwrap(), s21);
    }

    #[test]
    fn omega_is_conjugation_on_schur() {
        for n in 1..=6 {
            for l in partitions(n) {
                let s = SymmetricFunction::basis_element(Basis::S, l.clone());
                assert_eq!(omega(&s).unwrap(), SymmetricFunction::basis_element(Basis::S, l.conjugate()));
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let triv = ClassFunction::from_fn(3, |_| r(1));
        assert!(frobenius(&triv).unwrap().equals(&sf(Basis::H, 3, &[(&[3], 1)])).unwrap());
        let sign = ClassFunction::from_fn(3, |l| r(if (l.weight() - l.len()) % 2 == 0 { 1 } else { -1 }));
        assert!(frobenius(&sign).unwrap().equals(&sf(Basis::E, 3, &[(&[3], 1)])).unwrap());
        let reg = ClassFunction::from_fn(3, |l| r(if l.len() == 3 { 6 } else { 0 }));
        let f = frobenius(&reg).unwrap();
        assert_eq!(f, sf(Basis::P, 3, &[(&[1, 1, 1], 1)]));
        assert_eq!(convert(&f, Basis::S).unwrap(), sf(Basis::S, 3, &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)]));
    }

    #[test]
    fn permutation_module_is_h() {
        // the coset module of S_λ has character = number of fixed cosets
        for n in 1..=5 {
            for mu in partitions(n) {
                let chi = ClassFunction::from_fn(n, |sigma| {
                    // fixed points of σ on ordered set compositions of type μ
                    fn count(cycles: &[usize], bins: &mut Vec<usize>) -> u64 {
                        let Some((&c, rest)) = cycles.split_first() else {
                            return u64::from(bins.iter().all(|&b| b == 0));
                        };
                        let mut total = 0;
                        for i in 0..bins.len() {
                            if bins[i] >= c {
                                bins[i] -= c;
                                total += count(rest, bins);
                                bins[i] += c;
                            }
                        }
                        total
                    }
                    r(count(sigma.parts(), &mut mu.parts().to_vec()) as i64)
                });
                let f = frobenius(&chi).unwrap();
                assert!(f.equals(&SymmetricFunction::basis_element(Basis::H, mu.clone())).unwrap());
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let e2 = sf(Basis::E, 2, &[(&[2], 1)]);
        let e1 = sf(Basis::E, 1, &[(&[1], 1)]);
        assert_eq!(multiply(&e2, &e1).unwrap(), sf(Basis::E, 3, &[(&[2, 1], 1)]));
        let m1 = sf(Basis::M, 1, &[(&[1], 1)]);
        assert_eq!(multiply(&m1, &m1).unwrap(), sf(Basis::M, 2, &[(&[2], 1), (&[1, 1], 2)]));
        let s1 = sf(Basis::S, 1, &[(&[1], 1)]);
        let s11 = sf(Basis::S, 2, &[(&[1, 1], 1)]);
        assert_eq!(multiply(&s1, &s11).unwrap(), sf(Basis::S, 3, &[(&[2, 1], 1), (&[1, 1, 1], 1)]));
        let big = sf(Basis::E, 5, &[(&[5], 1)]);
        assert!(matches!(multiply(&big, &big), Err(SymFunError::DegreeTooLarge { .. })));
    }

    #[test]
    fn pieri_rule_for_h1() {
        // s_λ · s_1 = Σ s_{λ + box}
        for n in 1..=5 {
            for l in partitions(n) {
                let prod = multiply(&SymmetricFunction::basis_element(Basis::S, l.clone()), &SymmetricFunction::basis_element(Basis::S, Partition::new(vec![1]))).unwrap();
                let mut expect = SymmetricFunction::zero(n + 1, Basis::S);
                let parts = l.parts();
                for i in 0..=parts.len() {
                    let mut p = parts.to_vec();
                    if i == parts.len() {
                        p.push(1);
                    } else {
                        if i > 0 && parts[i - 1] == parts[i] {
                            continue;
                        }
                        p[i] += 1;
                    }
                    expect.add_term(Partition::new(p), r(1));
                }
                assert_eq!(prod, expect);
            }
        }
    }

    #[test]
    fn graded_ops() {
        let e2 = GradedSymmetricFunction::constant(sf(Basis::E, 2, &[(&[2], 1)]));
        let g = e2.scale_q_poly_i64(&[1, 1]);
        assert_eq!(g.term(1), sf(Basis::E, 2, &[(&[2], 1)]));
        let round = g.to_basis(Basis::P).unwrap().to_basis(Basis::E).unwrap();
        assert!(round.equals(&g).unwrap());
        assert_eq!(round, g);
    }

    #[test]
    fn json_round_trip() {
        let mut g = GradedSymmetricFunction::zero(3, Basis::M);
        g.set(0, sf(Basis::M, 3, &[(&[1, 1, 1], 1)]));
        g.set(1, sf(Basis::M, 3, &[(&[1, 1, 1], 4), (&[2, 1], 1)]));
        let j = g.to_json();
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"basis":"m","degree":3,"terms":{"0":{"[1,1,1]":"1"},"1":{"[1,1,1]":"4","[2,1]":"1"}}}"#
        );
        assert_eq!(GradedSymmetricFunction::from_json(&j).unwrap(), g);
        let mut half = GradedSymmetricFunction::zero(1, Basis::P);
        half.set(2, SymmetricFunction::from_terms(1, Basis::P, [(Partition::new(vec![1]), BigRational::new(1.into(), 2.into()))]).unwrap());
        assert!(half.to_json().to_string().contains("\"1/2\""));
        assert_eq!(GradedSymmetricFunction::from_json(&half.to_json()).unwrap(), half);
    }

    #[test]
    fn q_poly_rendering() {
        assert_eq!(q_poly_to_string(&[r(1), r(4), r(1)]), "1+4q+q^2");
        assert_eq!(q_poly_to_string(&[r(0), r(-2)]), "-2q");
        assert_eq!(q_poly_to_string(&[]), "0");
    }

    fn arb_sf(n: usize) -> impl Strategy<Value = SymmetricFunction> {
        let len = partitions(n).len();
        (proptest::collection::vec(-4i64..5, len), 0usize..5).prop_map(move |(cs, b)| {
            let parts = partitions(n);
            SymmetricFunction::from_terms(n, Basis::ALL[b], parts.into_iter().zip(cs.into_iter().map(r))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn conversions_round_trip(f in (1usize..=6).prop_flat_map(arb_sf)) {
            for a in Basis::ALL {
                for b in Basis::ALL {
                    let back = convert(&convert(&convert(&f, a).unwrap(), b).unwrap(), f.basis()).unwrap();
                    prop_assert_eq!(&back, &f);
                }
            }
        }

        #[test]
        fn omega_involution_and_homomorphism(f in arb_sf(3), g in arb_sf(2)) {
            prop_assert_eq!(omega(&omega(&f).unwrap()).unwrap(), f.clone());
            let lhs = omega(&multiply(&f, &g).unwrap()).unwrap();
            let rhs = multiply(&omega(&f).unwrap(), &omega(&g).unwrap()).unwrap();
            prop_assert!(lhs.equals(&rhs).unwrap());
        }

        #[test]
        fn frobenius_is_additive(a in proptest::collection::vec(-5i64..5, 5), b in proptest::collection::vec(-5i64..5, 5)) {
            let parts = partitions(4);
            let ca = ClassFunction::new(4, parts.iter().cloned().zip(a.into_iter().map(r)).collect());
            let cb = ClassFunction::new(4, parts.iter().cloned().zip(b.into_iter().map(r)).collect());
            let lhs = frobenius(&ca.add(&cb)).unwrap();
            let rhs = frobenius(&ca).unwrap().add(&frobenius(&cb).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn graded_linear_identity(f in arb_sf(3)) {
            let a = GradedSymmetricFunction::constant(f);
            let lhs = a.scale_q_poly_i64(&[0, 1]).add(&a).unwrap();
            let diff = lhs.sub(&a.scale_q_poly_i64(&[1, 1])).unwrap();
            prop_assert!(diff.is_zero());
        }
    }
}
