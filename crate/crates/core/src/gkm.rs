//! Labeled graphs of Hessenberg varieties, their twins, the circle copy and
//! the signed blow-up attached to a modular triple.
//!
//! `w(i,j)` is the right multiplication `w·(i,j)`, which swaps the entries
//! of `w` in positions `i` and `j`. Labels are stored sign-normalized.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::hessenberg::{indifference_graph, transpose, HessenbergFunction, ModularTriple, TripleKind};
use crate::perm::{all_perms, Perm};
use crate::poly::LinearForm;

pub const GRAPH_CAP: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GkmError {
    #[error("n = {n} exceeds the graph cap {cap}")]
    SizeTooLarge { n: usize, cap: usize },
    #[error("the construction needs a kind-C triple")]
    WrongKind,
    #[error("edge augmentation is defined on side X only")]
    WrongSide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "x",
            Side::Y => "y",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Ok(Side::X),
            "y" => Ok(Side::Y),
            other => Err(format!("unknown side '{other}' (expected x or y)")),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub perm: Perm,
    pub circle: bool,
}

impl Vertex {
    pub fn plain(perm: Perm) -> Self {
        Vertex { perm, circle: false }
    }

    pub fn circle(perm: Perm) -> Self {
        Vertex { perm, circle: true }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.circle {
            write!(f, "°{}", self.perm)
        } else {
            write!(f, "{}", self.perm)
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({self})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: LinearForm,
}

/// Vertices are `S_n` in lexicographic order, followed by the circle copies
/// in the same order when present.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    n: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    lookup: HashMap<(usize, usize), usize>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn check_size(n: usize) -> Result<(), GkmError> {
    if n > GRAPH_CAP {
        Err(GkmError::SizeTooLarge { n, cap: GRAPH_CAP })
    } else {
        Ok(())
    }
}

fn label_x(n: usize, w: &Perm, i: usize, j: usize) -> LinearForm {
    LinearForm::diff(n, w.at(i), w.at(j)).canonical()
}

fn label_y(n: usize, i: usize, j: usize) -> LinearForm {
    LinearForm::diff(n, i, j).canonical()
}

fn edge_label(side: Side, n: usize, w: &Perm, i: usize, j: usize) -> LinearForm {
    match side {
        Side::X => label_x(n, w, i, j),
        Side::Y => label_y(n, i, j),
    }
}

impl LabeledGraph {
    fn empty(n: usize, with_circle: bool) -> Self {
        let perms = all_perms(n);
        let mut vertices: Vec<Vertex> = perms.iter().cloned().map(Vertex::plain).collect();
        if with_circle {
            vertices.extend(perms.into_iter().map(Vertex::circle));
        }
        LabeledGraph {
            n,
            vertices,
            edges: Vec::new(),
            lookup: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Whether both the plain and the circle copy are present.
    pub fn has_both_copies(&self) -> bool {
        self.vertices.len() > factorial(self.n)
    }

    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        if v.perm.len() != self.n {
            return None;
        }
        let k = self.index_of(&v.perm, v.circle);
        (self.vertices.get(k) == Some(v)).then_some(k)
    }

    /// Index of `(perm, circle)`; on a single-copy graph the flag is ignored.
    pub fn index_of(&self, perm: &Perm, circle: bool) -> usize {
        let r = perm.lex_rank();
        if circle && self.has_both_copies() {
            factorial(self.n) + r
        } else {
            r
        }
    }

    /// Adds `{a, b}` unless present; returns whether it was new.
    fn add_edge(&mut self, a: usize, b: usize, label: LinearForm) -> bool {
        debug_assert!(!label.is_zero());
        let key = (a.min(b), a.max(b));
        if self.lookup.contains_key(&key) {
            return false;
        }
        self.lookup.insert(key, self.edges.len());
        self.edges.push(Edge { u: key.0, v: key.1, label });
        true
    }

    fn add_family(&mut self, pairs: &[(usize, usize)], circle: bool, side: Side) {
        let n = self.n;
        for w in all_perms(n) {
            for &(i, j) in pairs {
                let v = w.swap_positions(i, j);
                if w < v {
                    let label = edge_label(side, n, &w, i, j);
                    self.add_edge(self.index_of(&w, circle), self.index_of(&v, circle), label);
                }
            }
        }
    }

    pub fn edge(&self, a: usize, b: usize) -> Option<&Edge> {
        self.lookup.get(&(a.min(b), a.max(b))).map(|&k| &self.edges[k])
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.lookup.contains_key(&(a.min(b), a.max(b)))
    }

    /// Unordered vertex pairs, ignoring labels.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.lookup.keys().copied().collect()
    }

    /// Indices of edges at vertex `v`.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&k| self.edges[k].u == v || self.edges[k].v == v).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).len()
    }

    pub fn to_json(&self) -> Value {
        let names: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| json!([names[e.u], names[e.v], e.label.coeffs()]))
            .collect();
        json!({ "n": self.n, "vertices": names, "edges": edges })
    }
}

fn pairs_of(h: &HessenbergFunction) -> Vec<(usize, usize)> {
    indifference_graph(h).edges
}

fn build(h: &HessenbergFunction, side: Side) -> Result<LabeledGraph, GkmError> {
    check_size(h.n())?;
    let mut g = LabeledGraph::empty(h.n(), false);
    g.add_family(&pairs_of(h), false, side);
    Ok(g)
}

/// `E = {{w, w(i,j)} : j < i ≤ h(j)}` labeled `t_{w(i)} - t_{w(j)}`.
pub fn build_gx(h: &HessenbergFunction) -> Result<LabeledGraph, GkmError> {
    build(h, Side::X)
}

/// Same edges as [`build_gx`], labeled `t_i - t_j`.
pub fn build_gy(h: &HessenbergFunction) -> Result<LabeledGraph, GkmError> {
    build(h, Side::Y)
}

pub fn build_graph(h: &HessenbergFunction, side: Side) -> Result<LabeledGraph, GkmError> {
    build(h, side)
}

fn require_c(triple: &ModularTriple) -> Result<(usize, usize), GkmError> {
    triple.c_params().ok_or(GkmError::WrongKind)
}

/// The kind-C triple to use for graph constructions: itself, or for kind R
/// the transposed triple.
pub fn as_kind_c(triple: &ModularTriple) -> ModularTriple {
    match triple.kind() {
        TripleKind::C => triple.clone(),
        TripleKind::R => triple.transposed(),
    }
}

pub fn build_triple_graphs(
    triple: &ModularTriple,
    side: Side,
) -> Result<(LabeledGraph, LabeledGraph, LabeledGraph), GkmError> {
    require_c(triple)?;
    Ok((build(&triple.minus, side)?, build(&triple.h, side)?, build(&triple.plus, side)?))
}

/// Edge pairs of the circle copy: those of `h_-` together with `(d+1, d0)`.
fn circle_pairs(triple: &ModularTriple) -> Result<Vec<(usize, usize)>, GkmError> {
    let (d, d0) = require_c(triple)?;
    let mut pairs = pairs_of(&triple.minus);
    pairs.push((d + 1, d0));
    Ok(pairs)
}

pub fn build_circle_graph(triple: &ModularTriple, side: Side) -> Result<LabeledGraph, GkmError> {
    let pairs = circle_pairs(triple)?;
    check_size(triple.n())?;
    let n = triple.n();
    let mut g = LabeledGraph::empty(n, false);
    for w in all_perms(n) {
        for &(i, j) in &pairs {
            let v = w.swap_positions(i, j);
            if w < v {
                g.add_edge(w.lex_rank(), v.lex_rank(), edge_label(side, n, &w, i, j));
            }
        }
    }
    for v in &mut g.vertices {
        v.circle = true;
    }
    Ok(g)
}

/// A 4-gon `K_w` with vertices `(w, °w, wτ, °wτ)` and signs in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quad {
    pub vertices: [usize; 4],
    pub signs: [i8; 4],
    /// The linear form whose square must divide the signed sum.
    pub form: LinearForm,
}

#[derive(Clone, Debug)]
pub struct SignedBlowupGraph {
    pub graph: LabeledGraph,
    pub sign: Vec<i8>,
    pub quads: Vec<Quad>,
    pub d: usize,
    pub d0: usize,
    pub side: Side,
    pub triple: ModularTriple,
}

impl SignedBlowupGraph {
    pub fn n(&self) -> usize {
        self.graph.n
    }

    /// `τ = (d+1, d)`.
    pub fn tau(&self) -> Perm {
        Perm::transposition(self.n(), self.d, self.d + 1)
    }

    pub fn sign_of(&self, v: &Vertex) -> Option<i8> {
        self.graph.vertex_index(v).map(|k| self.sign[k])
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.graph.to_json();
        let names: Vec<String> = self.graph.vertices.iter().map(|v| v.to_string()).collect();
        v["side"] = json!(self.side.to_string());
        v["d"] = json!(self.d);
        v["d0"] = json!(self.d0);
        v["signs"] = json!(self.sign);
        v["quads"] = json!(self
            .quads
            .iter()
            .map(|q| json!({
                "vertices": q.vertices.iter().map(|&k| names[k].clone()).collect::<Vec<_>>(),
                "signs": q.signs,
                "form": q.form.coeffs(),
            }))
            .collect::<Vec<_>>());
        v
    }
}

fn blowup_sign(side: Side, w: &Perm, circle: bool) -> i8 {
    let base = match side {
        Side::X => 1,
        Side::Y => {
            if w.length() % 2 == 0 {
                1
            } else {
                -1
            }
        }
    };
    if circle {
        -base
    } else {
        base
    }
}

/// Blow-up of `G_+` along `G_-`: plain copy of `G`, the circle copy and the
/// edges `{w, °w}`, with vertex signs and one 4-gon per coset `{w, wτ}`.
pub fn build_blowup(triple: &ModularTriple, side: Side) -> Result<SignedBlowupGraph, GkmError> {
    let (d, d0) = require_c(triple)?;
    let n = triple.n();
    check_size(n)?;
    let mut g = LabeledGraph::empty(n, true);
    g.add_family(&pairs_of(&triple.h), false, side);
    g.add_family(&circle_pairs(triple)?, true, side);
    let perms = all_perms(n);
    for w in &perms {
        let label = edge_label(side, n, w, d + 1, d);
        g.add_edge(g.index_of(w, false), g.index_of(w, true), label);
    }
    let sign: Vec<i8> = g.vertices.iter().map(|v| blowup_sign(side, &v.perm, v.circle)).collect();
    let mut quads = Vec::new();
    for w in &perms {
        let wt = w.swap_positions(d, d + 1);
        if *w > wt {
            continue;
        }
        let vertices = [g.index_of(w, false), g.index_of(w, true), g.index_of(&wt, false), g.index_of(&wt, true)];
        let signs = vertices.map(|k| sign[k]);
        quads.push(Quad { vertices, signs, form: edge_label(side, n, w, d + 1, d) });
    }
    Ok(SignedBlowupGraph { graph: g, sign, quads, d, d0, side, triple: triple.clone() })
}

/// Adds the edges `{w, °wτ}` labeled `t_{w(d+1)} - t_{w(d)}`; idempotent.
pub fn augment_blowup(gt: &SignedBlowupGraph) -> Result<SignedBlowupGraph, GkmError> {
    if gt.side != Side::X {
        return Err(GkmError::WrongSide);
    }
    let mut out = gt.clone();
    let n = gt.n();
    for w in all_perms(n) {
        let wt = w.swap_positions(gt.d, gt.d + 1);
        let label = label_x(n, &w, gt.d + 1, gt.d);
        let (a, b) = (out.graph.index_of(&w, false), out.graph.index_of(&wt, true));
        out.graph.add_edge(a, b, label);
    }
    Ok(out)
}

/// Whether `Φ(w) = °wτ` carries the edges of `G` bijectively onto those of
/// the circle copy, comparing labels directly or after `t_d ↔ t_{d+1}`.
pub fn circle_isomorphism_check_with(triple: &ModularTriple, side: Side, swap_variables: bool) -> Result<bool, GkmError> {
    let (d, _) = require_c(triple)?;
    let g = build(&triple.h, side)?;
    let c = build_circle_graph(triple, side)?;
    if g.edges.len() != c.edges.len() {
        return Ok(false);
    }
    let tau = Perm::transposition(triple.n(), d, d + 1);
    let perms = all_perms(triple.n());
    let phi = |k: usize| perms[k].compose(&tau).lex_rank();
    for e in &g.edges {
        let Some(ce) = c.edge(phi(e.u), phi(e.v)) else {
            return Ok(false);
        };
        let expected = if swap_variables { e.label.permute(&tau).canonical() } else { e.label.clone() };
        if ce.label != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The isomorphism as used on each side: plain on X, through `t_d ↔ t_{d+1}` on Y.
pub fn circle_isomorphism_check(triple: &ModularTriple, side: Side) -> Result<bool, GkmError> {
    circle_isomorphism_check_with(triple, side, side == Side::Y)
}

/// Failure witness: a vertex and two incident edges with proportional labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependentPair {
    pub vertex: usize,
    pub edges: (usize, usize),
}

/// `Ok(())` iff incident labels are pairwise independent at every vertex.
pub fn two_independence_check(g: &LabeledGraph) -> Result<(), DependentPair> {
    for v in 0..g.vertices.len() {
        let inc = g.incident(v);
        for (a, &e1) in inc.iter().enumerate() {
            for &e2 in &inc[a + 1..] {
                if g.edges[e1].label.is_proportional(&g.edges[e2].label) {
                    return Err(DependentPair { vertex: v, edges: (e1, e2) });
                }
            }
        }
    }
    Ok(())
}

/// Whether `w ↦ w w0` carries `G(h)` onto `G(h^t)`, with labels equal on X
/// and related by `t_i ↦ t_{n+1-i}` on Y.
pub fn transpose_isomorphism_check(h: &HessenbergFunction, side: Side) -> Result<bool, GkmError> {
    let n = h.n();
    let g = build(h, side)?;
    let gt = build(&transpose(h), side)?;
    if g.edges.len() != gt.edges.len() {
        return Ok(false);
    }
    let w0 = Perm::from_one_line((1..=n as u8).rev().collect()).unwrap();
    let perms = all_perms(n);
    let map = |k: usize| perms[k].compose(&w0).lex_rank();
    for e in &g.edges {
        let Some(te) = gt.edge(map(e.u), map(e.v)) else {
            return Ok(false);
        };
        let expected = match side {
            Side::X => e.label.clone(),
            Side::Y => e.label.permute(&w0).canonical(),
        };
        if te.label != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::{enumerate_hessenberg, find_modular_triples};

    fn h(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Perm {
        Perm::parse(s).unwrap()
    }

    fn triple_233() -> ModularTriple {
        find_modular_triples(&h("2,3,3")).unwrap().into_iter().find(|t| t.kind() == TripleKind::C).unwrap()
    }

    #[test]
    fn vertex_order_matches_lex_rank() {
        let g = build_gx(&h("3,3,3")).unwrap();
        for (k, v) in g.vertices().iter().enumerate() {
            assert_eq!(g.vertex_index(v), Some(k));
        }
    }

    #[test]
    fn gx_233() {
        let g = build_gx(&h("2,3,3")).unwrap();
        assert_eq!(g.vertices().len(), 6);
        assert_eq!(g.edges().len(), 6);
        let e = g.edge(g.index_of(&p("123"), false), g.index_of(&p("213"), false)).unwrap();
        assert_eq!(e.label, LinearForm::diff(3, 1, 2));
        // black edge 123 - 132 of the middle graph carries t_2 - t_3
        let e = g.edge(g.index_of(&p("123"), false), g.index_of(&p("132"), false)).unwrap();
        assert_eq!(e.label, LinearForm::diff(3, 2, 3));
        let e = g.edge(g.index_of(&p("231"), false), g.index_of(&p("213"), false)).unwrap();
        assert_eq!(e.label, LinearForm::diff(3, 1, 3));
        assert!(build_gx(&HessenbergFunction::identity(4)).unwrap().edges().is_empty());
    }

    #[test]
    fn gy_shares_edges() {
        for n in 1..=4 {
            for f in enumerate_hessenberg(n) {
                let (gx, gy) = (build_gx(&f).unwrap(), build_gy(&f).unwrap());
                assert_eq!(gx.edge_set(), gy.edge_set());
                let edges = indifference_graph(&f).edges.len();
                for v in 0..gx.vertices().len() {
                    assert_eq!(gx.degree(v), edges);
                }
                assert!(two_independence_check(&gx).is_ok());
                assert!(two_independence_check(&gy).is_ok());
            }
        }
        let g = build_gy(&h("2,2")).unwrap();
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].label, LinearForm::diff(2, 1, 2));
    }

    #[test]
    fn triple_graphs_nest() {
        let t = triple_233();
        let (gm, g, gp) = build_triple_graphs(&t, Side::X).unwrap();
        assert_eq!((gm.edges().len(), g.edges().len(), gp.edges().len()), (3, 6, 9));
        assert!(gm.edge_set().is_subset(&g.edge_set()));
        assert!(g.edge_set().is_subset(&gp.edge_set()));
        let extra: BTreeSet<_> = gp.edge_set().difference(&g.edge_set()).copied().collect();
        let expect: BTreeSet<_> = all_perms(3)
            .iter()
            .map(|w| {
                let (a, b) = (w.lex_rank(), w.swap_positions(3, 1).lex_rank());
                (a.min(b), a.max(b))
            })
            .collect();
        assert_eq!(extra, expect);
        let r = find_modular_triples(&h("2,3,3")).unwrap().into_iter().find(|t| t.kind() == TripleKind::R).unwrap();
        assert_eq!(build_triple_graphs(&r, Side::X).unwrap_err(), GkmError::WrongKind);
        assert!(build_triple_graphs(&as_kind_c(&r), Side::X).is_ok());
    }

    #[test]
    fn circle_graph_233() {
        let t = triple_233();
        let c = build_circle_graph(&t, Side::X).unwrap();
        assert_eq!((c.vertices().len(), c.edges().len()), (6, 6));
        let w = p("231");
        let e = c.edge(w.lex_rank(), w.swap_positions(3, 1).lex_rank()).unwrap();
        assert_eq!(e.label, LinearForm::diff(3, w.at(3), w.at(1)).canonical());
        let cy = build_circle_graph(&t, Side::Y).unwrap();
        let e = cy.edge(w.lex_rank(), w.swap_positions(3, 1).lex_rank()).unwrap();
        assert_eq!(e.label, LinearForm::diff(3, 1, 3));
        assert!(c.vertices().iter().all(|v| v.circle));
    }

    #[test]
    fn blowup_233() {
        let t = triple_233();
        let gt = build_blowup(&t, Side::X).unwrap();
        assert_eq!(gt.graph.vertices().len(), 12);
        assert_eq!(gt.graph.edges().len(), 18);
        assert_eq!(gt.quads.len(), 3);
        assert_eq!(gt.sign_of(&Vertex::circle(p("231"))), Some(-1));
        let gy = build_blowup(&t, Side::Y).unwrap();
        assert_eq!(gy.sign_of(&Vertex::circle(p("213"))), Some(1));
        assert_eq!(gy.graph.edge_set(), gt.graph.edge_set());
        for g in [&gt, &gy] {
            for q in &g.quads {
                assert_eq!(q.signs.iter().map(|&s| s as i32).sum::<i32>(), 0);
                let w = &g.graph.vertices()[q.vertices[0]].perm;
                let [a, b, c, e] = q.vertices;
                for (x, y) in [(a, c), (b, e), (a, b), (c, e)] {
                    assert_eq!(g.graph.edge(x, y).unwrap().label, q.form, "{w}");
                }
            }
        }
        assert_eq!(gt.quads[0].form, LinearForm::diff(3, 2, 3));
        assert!(gy.quads.iter().all(|q| q.form == LinearForm::diff(3, 2, 3)));
        let err = two_independence_check(&gt.graph).unwrap_err();
        let (e1, e2) = err.edges;
        assert_eq!(gt.graph.edges()[e1].label, gt.graph.edges()[e2].label);
    }

    #[test]
    fn augmentation() {
        let gt = build_blowup(&triple_233(), Side::X).unwrap();
        let a = augment_blowup(&gt).unwrap();
        assert_eq!(a.graph.edges().len(), 24);
        assert_eq!(augment_blowup(&a).unwrap().graph.edges().len(), 24);
        let gy = build_blowup(&triple_233(), Side::Y).unwrap();
        assert_eq!(augment_blowup(&gy).unwrap_err(), GkmError::WrongSide);
    }

    #[test]
    fn circle_isomorphism() {
        let t = triple_233();
        assert!(circle_isomorphism_check(&t, Side::X).unwrap());
        assert!(circle_isomorphism_check(&t, Side::Y).unwrap());
        assert!(!circle_isomorphism_check_with(&t, Side::Y, false).unwrap());
        for n in 3..=5 {
            for f in enumerate_hessenberg(n) {
                for t in find_modular_triples(&f).unwrap().into_iter().filter(|t| t.kind() == TripleKind::C) {
                    assert!(circle_isomorphism_check(&t, Side::X).unwrap(), "{t}");
                    assert!(circle_isomorphism_check(&t, Side::Y).unwrap(), "{t}");
                }
            }
        }
    }

    #[test]
    fn blowups_are_never_two_independent() {
        for n in 3..=4 {
            for f in enumerate_hessenberg(n) {
                for t in find_modular_triples(&f).unwrap() {
                    let t = as_kind_c(&t);
                    for side in [Side::X, Side::Y] {
                        let g = build_blowup(&t, side).unwrap();
                        assert!(!g.quads.is_empty());
                        let w = two_independence_check(&g.graph).unwrap_err();
                        let (e1, e2) = w.edges;
                        assert!(g.graph.edges()[e1].label.is_proportional(&g.graph.edges()[e2].label));
                        for q in &g.quads {
                            assert_eq!(q.signs.iter().map(|&s| s as i32).sum::<i32>(), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_relabeling() {
        for n in 1..=4 {
            for f in enumerate_hessenberg(n) {
                assert!(transpose_isomorphism_check(&f, Side::X).unwrap(), "{f}");
                assert!(transpose_isomorphism_check(&f, Side::Y).unwrap(), "{f}");
            }
        }
    }

    #[test]
    fn json_export() {
        let g = build_gx(&h("2,2")).unwrap();
        assert_eq!(g.to_json().to_string(), r#"{"edges":[["12","21",[1,-1]]],"n":2,"vertices":["12","21"]}"#);
        let gt = build_blowup(&triple_233(), Side::X).unwrap().to_json();
        assert_eq!(gt["vertices"][6], "°123");
        assert_eq!(gt["quads"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn size_cap() {
        assert!(matches!(build_gx(&HessenbergFunction::identity(7)), Err(GkmError::SizeTooLarge { .. })));
    }
}
