//! The maps `φ, ψ_!, η, ρ_!` into the signed blow-up and the degreewise
//! check that `φ + ψ_!` and `η + ρ_!` are isomorphisms of `S_n`-modules.
//!
//! Each map exists twice: on integer coordinates of the slice model (used
//! for ranks and equivariance) and on [`EquivariantClass`] values (used for
//! membership). Both are `Q[t_1 + … + t_n]`-linear, so the slice determines
//! the full statement.

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cohomology::{
    self, Action, CohomologyError, CohomologyGraph, EquivariantClass, GradedSolutionSpace, Model, SpaceCache,
};
use crate::coloring::{csf_q, llt, ColoringError};
use crate::gkm::{as_kind_c, build_blowup, build_circle_graph, build_graph, GkmError, LabeledGraph, Side, SignedBlowupGraph};
use crate::hessenberg::{HessenbergFunction, ModularTriple};
use crate::linalg::{Echelon, IntVec};
use crate::perm::{all_perms, Perm};
use crate::poly::{LinearForm, Poly};
use crate::symfun::{GradedSymmetricFunction, SymFunError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("{map} is not injective in degree {degree}: rank {rank} < {source_dim}")]
    RankDeficit { map: ModularMap, degree: usize, rank: usize, source_dim: usize },
    #[error("images of {pair} meet in degree {degree} (intersection dimension {dim})")]
    Overlap { pair: &'static str, degree: usize, dim: usize },
    #[error("images of {pair} span {rank} of {target} dimensions in degree {degree}")]
    DimensionGap { pair: &'static str, degree: usize, rank: usize, target: usize },
    #[error("{map} does not commute with {sigma} in degree {degree}")]
    EquivarianceFailed { map: ModularMap, sigma: String, degree: usize },
    #[error("{map} leaves the signed space in degree {degree}: {detail}")]
    MembershipFailed { map: ModularMap, degree: usize, detail: String },
    #[error(transparent)]
    Graph(#[from] GkmError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ModularMap {
    Phi,
    PsiShriek,
    Eta,
    RhoShriek,
}

impl ModularMap {
    pub const ALL: [ModularMap; 4] = [ModularMap::Phi, ModularMap::PsiShriek, ModularMap::Eta, ModularMap::RhoShriek];

    /// Polynomial degree shift.
    pub fn shift(self) -> usize {
        match self {
            ModularMap::Phi | ModularMap::Eta => 0,
            ModularMap::PsiShriek | ModularMap::RhoShriek => 1,
        }
    }
}

impl std::fmt::Display for ModularMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModularMap::Phi => "phi",
            ModularMap::PsiShriek => "psi!",
            ModularMap::Eta => "eta",
            ModularMap::RhoShriek => "rho!",
        })
    }
}

/// Where a target vertex takes its value from.
#[derive(Clone, Debug)]
struct Pull {
    source: usize,
    /// Multiply by this difference form (full `n`-variable coefficients).
    factor: Option<LinearForm>,
    /// Apply `t_d ↔ t_{d+1}` to the value.
    twist: bool,
}

/// The five graphs of a kind-C triple and their solution spaces.
#[derive(Debug)]
pub struct TripleContext {
    pub triple: ModularTriple,
    pub side: Side,
    pub d: usize,
    pub d0: usize,
    pub minus: LabeledGraph,
    pub mid: LabeledGraph,
    pub plus: LabeledGraph,
    pub circle: LabeledGraph,
    pub blowup: SignedBlowupGraph,
    pub max_degree: usize,
    spaces: Option<[GradedSolutionSpace; 5]>,
    pulls: [Vec<Option<Pull>>; 4],
}

/// Index into the five spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Minus,
    Mid,
    Plus,
    Circle,
    Blowup,
}

impl ModularMap {
    pub fn source(self) -> Part {
        match self {
            ModularMap::Phi => Part::Circle,
            ModularMap::PsiShriek => Part::Mid,
            ModularMap::Eta => Part::Plus,
            ModularMap::RhoShriek => Part::Minus,
        }
    }
}

fn diff(n: usize, a: usize, b: usize) -> LinearForm {
    LinearForm::diff(n, a, b)
}

impl TripleContext {
    /// Builds the graphs; kind R triples are replaced by their transposes.
    pub fn new(triple: &ModularTriple, side: Side) -> Result<Self, ModularError> {
        let triple = as_kind_c(triple);
        let (d, d0) = triple.c_params().ok_or(GkmError::WrongKind)?;
        let n = triple.n();
        let minus = build_graph(&triple.minus, side)?;
        let mid = build_graph(&triple.h, side)?;
        let plus = build_graph(&triple.plus, side)?;
        let circle = build_circle_graph(&triple, side)?;
        let blowup = build_blowup(&triple, side)?;
        let tau = Perm::transposition(n, d, d + 1);
        let targets = blowup.graph.vertices();
        let perms = all_perms(n);
        let x = |w: &Perm, i: usize, j: usize| match side {
            Side::X => diff(n, w.at(i), w.at(j)),
            Side::Y => diff(n, i, j),
        };
        let phi = targets
            .iter()
            .map(|v| {
                let (src, twist) = if v.circle { (v.perm.clone(), false) } else { (v.perm.compose(&tau), side == Side::Y) };
                Some(Pull { source: circle.index_of(&src, true), factor: None, twist })
            })
            .collect();
        let psi = targets
            .iter()
            .map(|v| {
                (!v.circle).then(|| Pull { source: mid.index_of(&v.perm, false), factor: Some(x(&v.perm, d + 1, d)), twist: false })
            })
            .collect();
        let eta = targets
            .iter()
            .map(|v| Some(Pull { source: plus.index_of(&v.perm, false), factor: None, twist: false }))
            .collect();
        let rho = targets
            .iter()
            .map(|v| {
                let top = if v.circle { d + 1 } else { d };
                Some(Pull { source: minus.index_of(&v.perm, false), factor: Some(x(&v.perm, top, d0)), twist: false })
            })
            .collect();
        debug_assert_eq!(perms.len() * 2, targets.len());
        let max_degree = triple.plus.dimension() + 1;
        Ok(TripleContext {
            triple,
            side,
            d,
            d0,
            minus,
            mid,
            plus,
            circle,
            blowup,
            max_degree,
            spaces: None,
            pulls: [phi, psi, eta, rho],
        })
    }

    /// Checks run through degree `D + margin` for `D = dim` of `h_+`; at least 1.
    pub fn with_margin(mut self, margin: usize) -> Self {
        self.max_degree = self.triple.plus.dimension() + margin.max(1);
        self
    }

    /// Computes all five solution spaces through `max_degree`.
    pub fn with_spaces(mut self, cache: Option<&SpaceCache>) -> Result<Self, ModularError> {
        let top = self.max_degree;
        let dims = [
            self.triple.minus.dimension(),
            self.triple.h.dimension(),
            self.triple.plus.dimension(),
            self.triple.h.dimension(),
            self.triple.plus.dimension(),
        ];
        let graphs: [&dyn CohomologyGraph; 5] = [&self.minus, &self.mid, &self.plus, &self.circle, &self.blowup];
        let spaces: Vec<GradedSolutionSpace> = graphs
            .par_iter()
            .zip(dims)
            .map(|(g, d)| GradedSolutionSpace::compute(*g, d, top - d, cache))
            .collect::<Result<_, _>>()?;
        let [a, b, c, e, f]: [GradedSolutionSpace; 5] = spaces.try_into().unwrap();
        self.spaces = Some([a, b, c, e, f]);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.triple.n()
    }

    pub fn tau(&self) -> Perm {
        Perm::transposition(self.n(), self.d, self.d + 1)
    }

    /// The `S_n`-action used on this side.
    pub fn action(&self) -> Action {
        match self.side {
            Side::X => Action::Dot,
            Side::Y => Action::Dagger,
        }
    }

    pub fn graph(&self, part: Part) -> &dyn CohomologyGraph {
        match part {
            Part::Minus => &self.minus,
            Part::Mid => &self.mid,
            Part::Plus => &self.plus,
            Part::Circle => &self.circle,
            Part::Blowup => &self.blowup,
        }
    }

    /// Panics unless [`TripleContext::with_spaces`] was called.
    pub fn space(&self, part: Part) -> &GradedSolutionSpace {
        let s = self.spaces.as_ref().expect("spaces not computed");
        &s[part as usize]
    }

    fn pulls(&self, map: ModularMap) -> &[Option<Pull>] {
        &self.pulls[map as usize]
    }

    /// The map on slice coordinates, from degree `k` to degree `k + shift`.
    pub fn apply_coords(&self, map: ModularMap, k: usize, v: &IntVec) -> IntVec {
        let target = self.space(Part::Blowup);
        let ring = target.ring();
        let source_block = ring.dim(k);
        let out_block = ring.dim(k + map.shift());
        let mut by_vertex: Vec<Vec<(u32, crate::linalg::Int)>> = vec![Vec::new(); self.graph(map.source()).labeled().vertices().len()];
        for (vert, e) in cohomology::ring::blocks(v, source_block) {
            by_vertex[vert] = e;
        }
        let twist = ring.substitution(&Model::Slice.variable_images(&self.tau()), k);
        let parts = self.pulls(map).iter().enumerate().filter_map(|(t, p)| {
            let p = p.as_ref()?;
            let src = &by_vertex[p.source];
            if src.is_empty() {
                return None;
            }
            let mut e = if p.twist { IntVec::from_pairs(ring.apply(&twist, src)).entries().to_vec() } else { src.clone() };
            if let Some(f) = &p.factor {
                e = IntVec::from_pairs(ring.mul_linear(k, &Model::Slice.project(f), &e)).entries().to_vec();
            }
            Some((t, e))
        });
        cohomology::ring::assemble(parts, out_block)
    }

    /// The map on symbolic classes; the result is checked against the signed blow-up.
    pub fn apply_class(&self, map: ModularMap, f: &EquivariantClass) -> Result<EquivariantClass, ModularError> {
        let n = self.n();
        let tau = self.tau();
        let degree = f.degree + map.shift();
        let values = self
            .pulls(map)
            .iter()
            .map(|p| match p {
                None => Poly::zero(n),
                Some(p) => {
                    let mut val = f.values[p.source].clone();
                    if p.twist {
                        val = val.permute_vars(&tau);
                    }
                    if let Some(l) = &p.factor {
                        val = l.to_poly().mul(&val);
                    }
                    val
                }
            })
            .collect();
        EquivariantClass::new(&self.blowup, degree, values).map_err(|e| ModularError::MembershipFailed {
            map,
            degree,
            detail: e.to_string(),
        })
    }

    pub fn phi(&self, f: &EquivariantClass) -> Result<EquivariantClass, ModularError> {
        self.apply_class(ModularMap::Phi, f)
    }

    pub fn psi_shriek(&self, f: &EquivariantClass) -> Result<EquivariantClass, ModularError> {
        self.apply_class(ModularMap::PsiShriek, f)
    }

    pub fn eta(&self, f: &EquivariantClass) -> Result<EquivariantClass, ModularError> {
        self.apply_class(ModularMap::Eta, f)
    }

    pub fn rho_shriek(&self, f: &EquivariantClass) -> Result<EquivariantClass, ModularError> {
        self.apply_class(ModularMap::RhoShriek, f)
    }
}

/// Dimensions in one slice degree `k` (polynomial degree `k`, cohomological `2k`).
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub blowup: usize,
    pub circle: usize,
    pub mid_shifted: usize,
    pub plus: usize,
    pub minus_shifted: usize,
    pub rank_phi_psi: usize,
    pub rank_eta_rho: usize,
    pub first_iso: bool,
    pub second_iso: bool,
    pub equivariant: bool,
}

#[derive(Clone, Debug)]
pub struct MainReport {
    pub triple: ModularTriple,
    pub side: Side,
    pub degrees: Vec<DegreeReport>,
    /// Equivariant dimensions `dim H^{2k}_T` of `(G~, s)`, `°G`, `G`, `G_+`, `G_-`.
    pub full_dims: [Vec<usize>; 5],
    /// Poincaré polynomials in the same order; empty where the numerator check failed.
    pub numerators: [Vec<i64>; 5],
    pub failures: Vec<ModularError>,
}

impl MainReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn ensure(&self) -> Result<(), ModularError> {
        self.failures.first().cloned().map_or(Ok(()), Err)
    }

    pub fn to_json(&self) -> Value {
        let names = ["blowup", "circle", "mid", "plus", "minus"];
        let full: serde_json::Map<String, Value> =
            names.iter().zip(&self.full_dims).map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({
            "triple": {
                "minus": self.triple.minus.to_string(),
                "h": self.triple.h.to_string(),
                "plus": self.triple.plus.to_string(),
            },
            "side": self.side.to_string(),
            "passed": self.passed(),
            "degrees": self.degrees,
            "equivariant_dims": full,
            "numerators": names.iter().zip(&self.numerators).map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
            "failures": self.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// A coordinate map used by the checks; replaceable in tests.
pub type CoordMap<'a> = dyn Fn(ModularMap, usize, &IntVec) -> IntVec + Sync + 'a;

fn rank_of<'a>(vs: impl IntoIterator<Item = &'a IntVec>, ambient: usize) -> usize {
    let mut e = Echelon::new(ambient);
    for v in vs {
        e.insert(v.clone());
    }
    e.rank()
}

/// Images of the source basis in degree `k` of the blow-up, membership-checked.
fn images(ctx: &TripleContext, apply: &CoordMap<'_>, map: ModularMap, k: usize) -> Result<Vec<IntVec>, ModularError> {
    let target = ctx.space(Part::Blowup);
    let Some(sk) = k.checked_sub(map.shift()) else {
        return Ok(Vec::new());
    };
    let src = ctx.space(map.source()).piece(sk)?;
    src.columns()
        .iter()
        .map(|c| {
            let img = apply(map, sk, c);
            if target.is_member(k, &img) {
                Ok(img)
            } else {
                Err(ModularError::MembershipFailed { map, degree: k, detail: "image violates a congruence".into() })
            }
        })
        .collect()
}

fn check_pair(
    ctx: &TripleContext,
    apply: &CoordMap<'_>,
    pair: (ModularMap, ModularMap),
    name: &'static str,
    k: usize,
    failures: &mut Vec<ModularError>,
) -> Result<usize, ModularError> {
    let target = ctx.space(Part::Blowup);
    let ambient = target.piece(k)?.ambient_dim();
    let a = images(ctx, apply, pair.0, k)?;
    let b = images(ctx, apply, pair.1, k)?;
    let (ra, rb) = (rank_of(&a, ambient), rank_of(&b, ambient));
    for (map, imgs, r) in [(pair.0, &a, ra), (pair.1, &b, rb)] {
        if r < imgs.len() {
            failures.push(ModularError::RankDeficit { map, degree: k, rank: r, source_dim: imgs.len() });
        }
    }
    let r = rank_of(a.iter().chain(&b), ambient);
    if r < ra + rb {
        failures.push(ModularError::Overlap { pair: name, degree: k, dim: ra + rb - r });
    }
    let dim = target.piece(k)?.dim();
    if r != dim {
        failures.push(ModularError::DimensionGap { pair: name, degree: k, rank: r, target: dim });
    }
    Ok(r)
}

fn check_equivariance(ctx: &TripleContext, apply: &CoordMap<'_>, k: usize, failures: &mut Vec<ModularError>) -> Result<(), ModularError> {
    let action = ctx.action();
    let target = ctx.space(Part::Blowup);
    for map in ModularMap::ALL {
        let Some(sk) = k.checked_sub(map.shift()) else { continue };
        let src_space = ctx.space(map.source());
        for sigma in cohomology::generators(ctx.n()) {
            let bad = src_space.piece(sk)?.columns().iter().any(|c| {
                let lhs = apply(map, sk, &src_space.act(&sigma, action, sk, c));
                let rhs = target.act(&sigma, action, k, &apply(map, sk, c));
                lhs != rhs
            });
            if bad {
                failures.push(ModularError::EquivarianceFailed { map, sigma: sigma.to_string(), degree: k });
            }
        }
    }
    Ok(())
}

/// Both isomorphisms and equivariance in slice degrees `0..=max_degree`.
pub fn check_theorem_main(ctx: &TripleContext, max_degree: usize) -> Result<MainReport, ModularError> {
    check_theorem_main_with(ctx, max_degree, &|m, k, v| ctx.apply_coords(m, k, v))
}

pub fn check_theorem_main_with(ctx: &TripleContext, max_degree: usize, apply: &CoordMap<'_>) -> Result<MainReport, ModularError> {
    let max_degree = max_degree.min(ctx.max_degree);
    let results: Vec<Result<(DegreeReport, Vec<ModularError>), ModularError>> = (0..=max_degree)
        .into_par_iter()
        .map(|k| {
            let mut failures = Vec::new();
            let dim = |p: Part, j: Option<usize>| j.map_or(0, |j| ctx.space(p).slice_dims()[j]);
            let r1 = check_pair(ctx, apply, (ModularMap::Phi, ModularMap::PsiShriek), "phi+psi!", k, &mut failures);
            let r1 = match r1 {
                Ok(r) => r,
                Err(e) => {
                    failures.push(e);
                    0
                }
            };
            let before = failures.len();
            let r2 = match check_pair(ctx, apply, (ModularMap::Eta, ModularMap::RhoShriek), "eta+rho!", k, &mut failures) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(e);
                    0
                }
            };
            let first_iso = before == 0;
            let second_iso = failures.len() == before;
            let before = failures.len();
            if let Err(e) = check_equivariance(ctx, apply, k, &mut failures) {
                failures.push(e);
            }
            let report = DegreeReport {
                degree: k,
                blowup: dim(Part::Blowup, Some(k)),
                circle: dim(Part::Circle, Some(k)),
                mid_shifted: dim(Part::Mid, k.checked_sub(1)),
                plus: dim(Part::Plus, Some(k)),
                minus_shifted: dim(Part::Minus, k.checked_sub(1)),
                rank_phi_psi: r1,
                rank_eta_rho: r2,
                first_iso,
                second_iso,
                equivariant: failures.len() == before,
            };
            Ok((report, failures))
        })
        .collect();
    let mut degrees = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        let (d, f) = r?;
        degrees.push(d);
        failures.extend(f);
    }
    if let Err(e) = ctx.space(Part::Blowup).check_invariance(ctx.action()) {
        failures.push(e.into());
    }
    let full = |p: Part| ctx.space(p).full_dims()[..=max_degree].to_vec();
    let parts = [Part::Blowup, Part::Circle, Part::Mid, Part::Plus, Part::Minus];
    let numerators = parts.map(|p| match cohomology::hilbert_numerator(ctx.space(p)) {
        Ok(b) => b,
        Err(e) => {
            failures.push(e.into());
            Vec::new()
        }
    });
    Ok(MainReport {
        numerators,
        triple: ctx.triple.clone(),
        side: ctx.side,
        degrees,
        full_dims: [full(Part::Blowup), full(Part::Circle), full(Part::Mid), full(Part::Plus), full(Part::Minus)],
        failures,
    })
}

/// Outcome of comparing two graded symmetric functions.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: String,
    pub holds: bool,
    pub lhs: GradedSymmetricFunction,
    pub rhs: GradedSymmetricFunction,
}

impl IdentityReport {
    fn new(name: String, lhs: GradedSymmetricFunction, rhs: GradedSymmetricFunction) -> Result<Self, ModularError> {
        let holds = lhs.equals(&rhs)?;
        Ok(IdentityReport { name, holds, lhs, rhs })
    }

    /// `lhs - rhs`, empty when the identity holds.
    pub fn diff(&self) -> Result<GradedSymmetricFunction, ModularError> {
        Ok(self.lhs.sub(&self.rhs)?)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "holds": self.holds,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        })
    }
}

fn side_action(side: Side) -> Action {
    match side {
        Side::X => Action::Dot,
        Side::Y => Action::Dagger,
    }
}

/// Frobenius series of the ordinary cohomology of `G_X(h)` (dot) or
/// `G_Y(h)` (dagger), with the series and direct characters cross-checked.
pub fn graph_frobenius(h: &HessenbergFunction, side: Side, margin: usize, cache: Option<&SpaceCache>) -> Result<GradedSymmetricFunction, ModularError> {
    let g = build_graph(h, side)?;
    let space = GradedSolutionSpace::compute(&g, h.dimension(), margin, cache)?;
    Ok(cohomology::graded_character_checked(&space, side_action(side))?.frobenius()?)
}

fn space_frobenius(space: &GradedSolutionSpace, side: Side) -> Result<GradedSymmetricFunction, ModularError> {
    Ok(cohomology::graded_character_checked(space, side_action(side))?.frobenius()?)
}

/// `(1+q) F(h) = F(h_+) + q F(h_-)` for the Frobenius series of the triple's graphs.
pub fn check_corollary_modular_law(ctx: &TripleContext) -> Result<IdentityReport, ModularError> {
    let f = |p| space_frobenius(ctx.space(p), ctx.side);
    let (fm, fh, fp) = (f(Part::Minus)?, f(Part::Mid)?, f(Part::Plus)?);
    let lhs = fh.scale_q_poly_i64(&[1, 1]);
    let rhs = fp.add(&fm.scale_q_poly_i64(&[0, 1]))?;
    IdentityReport::new(format!("geometric modular law, side {}", ctx.side), lhs, rhs)
}

/// `ω(csf_q(h))` against the dot-action Frobenius series of `G_X(h)`.
pub fn check_theorem_1_1(h: &HessenbergFunction, margin: usize, cache: Option<&SpaceCache>) -> Result<IdentityReport, ModularError> {
    let lhs = csf_q(h)?.omega()?;
    let rhs = graph_frobenius(h, Side::X, margin, cache)?;
    IdentityReport::new(format!("omega csf_q({h}) = ch H*(G_X)"), lhs, rhs)
}

/// `llt(h)` against the dagger-action Frobenius series of `G_Y(h)`.
pub fn check_theorem_1_2(h: &HessenbergFunction, margin: usize, cache: Option<&SpaceCache>) -> Result<IdentityReport, ModularError> {
    let lhs = llt(h)?;
    let rhs = graph_frobenius(h, Side::Y, margin, cache)?;
    IdentityReport::new(format!("llt({h}) = ch H*(G_Y)"), lhs, rhs)
}

/// The constant class `c` on `g`.
pub fn constant_class(g: &dyn CohomologyGraph, c: Poly, degree: usize) -> Result<EquivariantClass, ModularError> {
    Ok(EquivariantClass::constant(g, c, degree)?)
}

/// The unit class.
pub fn unit_class(g: &dyn CohomologyGraph) -> Result<EquivariantClass, ModularError> {
    constant_class(g, Poly::constant(g.labeled().n(), BigRational::one()), 0)
}
