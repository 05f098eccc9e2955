//! Equivariant graph cohomology, degree by degree, as exact kernels of the
//! edge congruences and the signed 4-gon conditions.
//!
//! All labels are differences `t_a - t_b`, so every condition is invariant
//! under translating all variables at once. The solution space therefore
//! splits as `H_T = H' ⊗ Q[t_1 + … + t_n]` where `H'` consists of classes with
//! values in polynomials of the differences, and `H'` is computed on the
//! slice `t_n = 0` in `n - 1` variables. [`equivariant_piece`] computes
//! `H^{2k}_T` directly in all `n` variables.

pub mod cache;
pub mod ring;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::gkm::{LabeledGraph, Quad, SignedBlowupGraph, Vertex};
use crate::linalg::{Echelon, Int, IntVec, SubspaceBasis};
use crate::perm::Perm;
use crate::poly::{binomial, LinearForm, Poly};
use crate::symfun::{frobenius, partitions, Basis, ClassFunction, GradedSymmetricFunction, Partition, SymFunError};

pub use cache::SpaceCache;
use ring::{assemble, blocks, GradedRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("Hilbert numerator has negative coefficient {value} at q^{degree}; H_T is not free")]
    NotFree { degree: usize, value: i64 },
    #[error("Hilbert numerator is nonzero at q^{degree}, beyond the expected dimension")]
    Truncated { degree: usize },
    #[error("action of {sigma} does not preserve the degree-{degree} piece")]
    NotInvariant { sigma: String, degree: usize },
    #[error("series-division character {series} differs from direct quotient {direct} at {partition}, q^{degree}")]
    CrossCheckFailed { partition: String, degree: usize, series: String, direct: String },
    #[error("direct quotient has dimension {direct} at q^{degree}, numerator says {numerator}")]
    DimensionMismatch { degree: usize, numerator: i64, direct: usize },
    #[error("class violates the congruence on {0}")]
    MembershipFailed(String),
    #[error("degree {0} was not computed")]
    DegreeOutOfRange(usize),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    SymFun(#[from] SymFunError),
}

/// Which `S_n`-action a character is taken for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    /// `(σ·f)(w) = σ(f(σ⁻¹w))`.
    Dot,
    /// `(σ†f)(w) = f(σ⁻¹w)`.
    Dagger,
}

impl std::fmt::Display for Action {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Action::Dot => "dot",
            Action::Dagger => "dagger",
        })
    }
}

/// Polynomial coordinates: all of `t_1..t_n`, or the slice `t_n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    Full,
    Slice,
}

impl Model {
    pub fn nvars(self, n: usize) -> usize {
        match self {
            Model::Full => n,
            Model::Slice => n.saturating_sub(1),
        }
    }

    /// Coefficients of a difference form in this model's variables.
    pub fn project(self, l: &LinearForm) -> Vec<i64> {
        match self {
            Model::Full => l.coeffs().to_vec(),
            Model::Slice => {
                debug_assert_eq!(l.coeffs().iter().sum::<i64>(), 0, "labels are differences");
                l.drop_last().coeffs().to_vec()
            }
        }
    }

    /// Images of the variables under `t_i ↦ t_{σ(i)}`; on the slice
    /// `u_i ↦ u_{σ(i)} - u_{σ(n)}` with `u_n = 0`.
    pub fn variable_images(self, sigma: &Perm) -> Vec<Vec<i64>> {
        let n = sigma.len();
        let m = self.nvars(n);
        (1..=m)
            .map(|i| {
                let mut img = vec![0i64; m];
                match self {
                    Model::Full => img[sigma.at(i) - 1] = 1,
                    Model::Slice => {
                        if sigma.at(i) < n {
                            img[sigma.at(i) - 1] += 1;
                        }
                        if sigma.at(n) < n {
                            img[sigma.at(n) - 1] -= 1;
                        }
                    }
                }
                img
            })
            .collect()
    }
}

/// A labeled graph, possibly with signed 4-gon conditions.
pub trait CohomologyGraph: Sync {
    fn labeled(&self) -> &LabeledGraph;

    fn quads(&self) -> &[Quad] {
        &[]
    }

    /// Stable description used as a cache key.
    fn fingerprint(&self) -> String;
}

impl CohomologyGraph for LabeledGraph {
    fn labeled(&self) -> &LabeledGraph {
        self
    }

    fn fingerprint(&self) -> String {
        self.to_json().to_string()
    }
}

impl CohomologyGraph for SignedBlowupGraph {
    fn labeled(&self) -> &LabeledGraph {
        &self.graph
    }

    fn quads(&self) -> &[Quad] {
        &self.quads
    }

    fn fingerprint(&self) -> String {
        self.to_json().to_string()
    }
}

/// Integer substitution solving `ℓ = 0` for its leading variable `a`:
/// `v_i ↦ c_a v_i` for `i ≠ a`, `v_a ↦ -Σ_{i≠a} c_i v_i`. A degree-`k`
/// polynomial vanishes on `ℓ = 0` iff its image is zero.
fn hyperplane_images(form: &[i64]) -> (usize, Vec<Vec<i64>>) {
    let (a, &ca) = form.iter().enumerate().find(|(_, &c)| c != 0).expect("nonzero label");
    let m = form.len();
    let images = (0..m)
        .map(|i| {
            let mut img = vec![0i64; m];
            if i == a {
                for (j, &c) in form.iter().enumerate() {
                    if j != a {
                        img[j] = -c;
                    }
                }
            } else {
                img[i] = ca;
            }
            img
        })
        .collect();
    (a, images)
}

/// Linear conditions on vertex-major coordinates of degree `k`.
pub fn constraint_rows(g: &dyn CohomologyGraph, model: Model, ring: &GradedRing, k: usize) -> Vec<IntVec> {
    let block = ring.dim(k);
    let mut rows = Vec::new();
    let mut tables = HashMap::new();
    let mut table_for = |form: &[i64], deg: usize| -> (usize, Arc<Vec<ring::Image>>) {
        let (a, images) = hyperplane_images(form);
        let t = tables.entry((form.to_vec(), deg)).or_insert_with(|| ring.substitution(&images, deg)).clone();
        (a, t)
    };
    for e in g.labeled().edges() {
        let form = model.project(&e.label);
        let (_, table) = table_for(&form, k);
        let mut by_target: BTreeMap<u32, Vec<(u32, Int)>> = BTreeMap::new();
        for (m, img) in table.iter().enumerate() {
            for &(t, c) in img {
                let row = by_target.entry(t).or_default();
                row.push(((e.u * block + m) as u32, Int::from(c)));
                row.push(((e.v * block + m) as u32, Int::from(-c)));
            }
        }
        rows.extend(by_target.into_values().map(IntVec::from_pairs).filter(|r| !r.is_zero()));
    }
    for q in g.quads() {
        let form = model.project(&q.form);
        let (a, table) = table_for(&form, k);
        let mut by_target: BTreeMap<u32, Vec<(u32, Int)>> = BTreeMap::new();
        for (m, img) in table.iter().enumerate() {
            for &(t, c) in img {
                let row = by_target.entry(t).or_default();
                for (v, s) in q.vertices.iter().zip(q.signs) {
                    row.push(((v * block + m) as u32, Int::from(c * s as i64)));
                }
            }
        }
        rows.extend(by_target.into_values().map(IntVec::from_pairs).filter(|r| !r.is_zero()));
        if k == 0 {
            continue;
        }
        // first-order term: ∂_a of the signed sum, restricted to ℓ = 0
        let (_, lower) = table_for(&form, k - 1);
        let idx = ring.index(k);
        let lower_idx = ring.index(k - 1);
        let mut by_target: BTreeMap<u32, Vec<(u32, Int)>> = BTreeMap::new();
        for (m, e) in idx.exponents().iter().enumerate() {
            if e[a] == 0 {
                continue;
            }
            let mut rest = e.clone();
            rest[a] -= 1;
            let src = lower_idx.index_of(&rest).unwrap();
            for &(t, c) in &lower[src] {
                let row = by_target.entry(t).or_default();
                for (v, s) in q.vertices.iter().zip(q.signs) {
                    row.push(((v * block + m) as u32, Int::from(c * e[a] as i64 * s as i64)));
                }
            }
        }
        rows.extend(by_target.into_values().map(IntVec::from_pairs).filter(|r| !r.is_zero()));
    }
    rows
}

fn solve(ambient: usize, rows: &[IntVec]) -> SubspaceBasis {
    let mut e = Echelon::new(ambient);
    for r in rows {
        e.insert(r.clone());
    }
    let (pivots, columns): (Vec<u32>, Vec<IntVec>) = e.into_rref().kernel().into_iter().unzip();
    SubspaceBasis::from_reduced(ambient, columns, pivots)
}

/// `H^{2k}_T` in all `n` variables: coordinates are vertex-major blocks of
/// degree-`k` monomials in `t_1..t_n`.
pub fn equivariant_piece(g: &dyn CohomologyGraph, k: usize) -> SubspaceBasis {
    let n = g.labeled().n();
    let ring = GradedRing::new(n, k);
    let rows = constraint_rows(g, Model::Full, &ring, k);
    solve(g.labeled().vertices().len() * ring.dim(k), &rows)
}

/// Whether `v` satisfies every row.
fn satisfies(rows: &[IntVec], ambient: usize, v: &IntVec) -> bool {
    let dense = v.to_dense(ambient);
    rows.iter().all(|r| {
        let mut acc = Int::ZERO;
        for (c, a) in r.entries() {
            let x = &dense[*c as usize];
            if !x.is_zero() {
                acc = acc.add_mul(a, x);
            }
        }
        acc.is_zero()
    })
}

/// Degreewise solution spaces `H'^{2k}` on the slice `t_n = 0`, for
/// `k = 0..=max_degree`.
#[derive(Debug)]
pub struct GradedSolutionSpace {
    n: usize,
    expected_dimension: usize,
    ring: Arc<GradedRing>,
    vertices: Vec<Vertex>,
    lookup: HashMap<Vertex, usize>,
    pieces: Vec<SubspaceBasis>,
    rows: Vec<Vec<IntVec>>,
}

impl GradedSolutionSpace {
    /// Computes through degree `expected_dimension + margin`.
    pub fn compute(
        g: &dyn CohomologyGraph,
        expected_dimension: usize,
        margin: usize,
        cache: Option<&SpaceCache>,
    ) -> Result<Self, CohomologyError> {
        let labeled = g.labeled();
        let n = labeled.n();
        let max_degree = expected_dimension + margin;
        let ring = Arc::new(GradedRing::new(Model::Slice.nvars(n), max_degree));
        let nv = labeled.vertices().len();
        let fingerprint = cache.map(|_| g.fingerprint());
        let results: Vec<Result<(SubspaceBasis, Vec<IntVec>), CohomologyError>> = (0..=max_degree)
            .into_par_iter()
            .map(|k| {
                let rows = constraint_rows(g, Model::Slice, &ring, k);
                let ambient = nv * ring.dim(k);
                let key = fingerprint.as_ref().map(|f| (f, k));
                if let (Some(c), Some((f, k))) = (cache, key) {
                    if let Some(b) = c.load(f, k)? {
                        if b.ambient_dim() == ambient {
                            return Ok((b, rows));
                        }
                    }
                }
                let basis = solve(ambient, &rows);
                if let (Some(c), Some((f, k))) = (cache, key) {
                    c.store(f, k, &basis)?;
                }
                Ok((basis, rows))
            })
            .collect();
        let mut pieces = Vec::with_capacity(results.len());
        let mut rows = Vec::with_capacity(results.len());
        for r in results {
            let (b, rw) = r?;
            pieces.push(b);
            rows.push(rw);
        }
        let vertices = labeled.vertices().to_vec();
        let lookup = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(GradedSolutionSpace { n, expected_dimension, ring, vertices, lookup, pieces, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn expected_dimension(&self) -> usize {
        self.expected_dimension
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub fn block(&self, k: usize) -> usize {
        self.ring.dim(k)
    }

    pub fn piece(&self, k: usize) -> Result<&SubspaceBasis, CohomologyError> {
        self.pieces.get(k).ok_or(CohomologyError::DegreeOutOfRange(k))
    }

    /// `dim H'^{2k}` for each computed `k`.
    pub fn slice_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dim()).collect()
    }

    /// `dim H^{2k}_T = Σ_{j≤k} dim H'^{2j}`.
    pub fn full_dims(&self) -> Vec<usize> {
        self.slice_dims()
            .iter()
            .scan(0, |acc, d| {
                *acc += d;
                Some(*acc)
            })
            .collect()
    }

    /// Whether a degree-`k` coordinate vector lies in `H'^{2k}`.
    pub fn is_member(&self, k: usize, v: &IntVec) -> bool {
        k < self.rows.len() && satisfies(&self.rows[k], self.vertices.len() * self.block(k), v)
    }

    fn vertex_map(&self, sigma: &Perm) -> Vec<usize> {
        self.vertices
            .iter()
            .map(|v| self.lookup[&Vertex { perm: sigma.compose(&v.perm), circle: v.circle }])
            .collect()
    }

    /// `σ` acting on a degree-`k` coordinate vector.
    pub fn act(&self, sigma: &Perm, action: Action, k: usize, v: &IntVec) -> IntVec {
        act_on(&self.ring, &self.vertex_map(sigma), sigma, action, k, v)
    }

    /// Pivot-reading traces of `σ` on each `H'^{2k}`; with `verify`, every
    /// image is checked to lie in the piece first.
    pub fn slice_traces(&self, sigma: &Perm, action: Action, verify: bool) -> Result<Vec<BigRational>, CohomologyError> {
        let vmap = self.vertex_map(sigma);
        (0..self.pieces.len())
            .into_par_iter()
            .map(|k| {
                let piece = &self.pieces[k];
                let mut tr = BigRational::zero();
                for (col, &p) in piece.columns().iter().zip(piece.pivots()) {
                    let img = act_on(&self.ring, &vmap, sigma, action, k, col);
                    if verify && !self.is_member(k, &img) {
                        return Err(CohomologyError::NotInvariant { sigma: sigma.to_string(), degree: k });
                    }
                    let a = img.get(p);
                    if !a.is_zero() {
                        tr += BigRational::new(a.to_bigint(), col.get(p).to_bigint());
                    }
                }
                Ok(tr)
            })
            .collect()
    }

    /// Checks that `(1,2)` and `(1,2,…,n)` preserve every piece.
    pub fn check_invariance(&self, action: Action) -> Result<(), CohomologyError> {
        for sigma in generators(self.n) {
            self.slice_traces(&sigma, action, true)?;
        }
        Ok(())
    }
}

pub(crate) fn act_on(ring: &GradedRing, vmap: &[usize], sigma: &Perm, action: Action, k: usize, v: &IntVec) -> IntVec {
    let block = ring.dim(k);
    let parts = blocks(v, block);
    match action {
        Action::Dagger => assemble(parts.into_iter().map(|(vert, e)| (vmap[vert], e)), block),
        Action::Dot => {
            let table = ring.substitution(&Model::Slice.variable_images(sigma), k);
            assemble(parts.into_iter().map(|(vert, e)| (vmap[vert], ring.apply(&table, &e))), block)
        }
    }
}

/// `(1,2)` and the long cycle; empty for `n = 1`.
pub fn generators(n: usize) -> Vec<Perm> {
    if n < 2 {
        return Vec::new();
    }
    vec![Perm::transposition(n, 1, 2), Perm::long_cycle(n)]
}

/// `Σ_j (-1)^j C(n-1, j) dim H'^{2(k-j)}`, which equals the Poincaré
/// polynomial `Σ_k dim H^{2k} q^k` when `H_T` is free.
pub fn hilbert_numerator(space: &GradedSolutionSpace) -> Result<Vec<i64>, CohomologyError> {
    let n = space.n();
    let m = n.saturating_sub(1);
    let dims = space.slice_dims();
    let mut b = Vec::with_capacity(dims.len());
    for k in 0..dims.len() {
        let mut acc = 0i64;
        for j in 0..=k.min(m) {
            let term = binomial(m, j) as i64 * dims[k - j] as i64;
            acc += if j % 2 == 0 { term } else { -term };
        }
        b.push(acc);
    }
    for (k, &v) in b.iter().enumerate() {
        if k > space.expected_dimension() && v != 0 {
            return Err(CohomologyError::Truncated { degree: k });
        }
        if v < 0 {
            return Err(CohomologyError::NotFree { degree: k, value: v });
        }
    }
    b.truncate(space.expected_dimension() + 1);
    while b.len() > 1 && b.last() == Some(&0) {
        b.pop();
    }
    Ok(b)
}

/// `H^{2k} = H'^{2k} / Σ_i u_i H'^{2(k-1)}`, presented in the pivot
/// coordinates of `H'^{2k}`: `sub` spans the image of multiplication, and the
/// coordinates outside its pivots index a basis of the quotient.
#[derive(Debug, Clone)]
pub struct QuotientPiece {
    pub degree: usize,
    sub: SubspaceBasis,
    reps: Vec<u32>,
    /// For each representative coordinate, the rows of `sub` touching it.
    touching: Vec<Vec<(usize, BigRational)>>,
}

impl QuotientPiece {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the `H'^{2k}` basis vectors that represent a basis of the quotient.
    pub fn representatives(&self) -> &[u32] {
        &self.reps
    }

    pub fn submodule(&self) -> &SubspaceBasis {
        &self.sub
    }
}

/// Pivot coordinates of a member of a piece, scaled by `scale[j] = L / K_j[p_j]`.
fn scaled_coordinates(piece: &SubspaceBasis, scale: &[Int], v: &IntVec) -> IntVec {
    let pairs = piece
        .pivots()
        .iter()
        .enumerate()
        .filter_map(|(j, p)| {
            let a = v.get(*p);
            (!a.is_zero()).then(|| (j as u32, &a * &scale[j]))
        })
        .collect();
    IntVec::from_pairs(pairs)
}

fn pivot_scales(piece: &SubspaceBasis) -> Vec<Int> {
    let mut l = Int::ONE;
    for (c, p) in piece.columns().iter().zip(piece.pivots()) {
        l = l.lcm(&c.get(*p));
    }
    piece.columns().iter().zip(piece.pivots()).map(|(c, p)| l.div_exact(&c.get(*p))).collect()
}

/// The direct quotient in degree `k`; each product `u_i f` is checked to be a member.
pub fn ordinary_piece_direct(space: &GradedSolutionSpace, k: usize) -> Result<QuotientPiece, CohomologyError> {
    let piece = space.piece(k)?;
    let scale = pivot_scales(piece);
    let ring = space.ring();
    let m = ring.nvars();
    let mut gens = Vec::new();
    if k > 0 {
        let lower = space.piece(k - 1)?;
        let (bl, bk) = (space.block(k - 1), space.block(k));
        for col in lower.columns() {
            let parts = blocks(col, bl);
            for i in 0..m {
                let mut form = vec![0i64; m];
                form[i] = 1;
                let prod = assemble(parts.iter().map(|(v, e)| (*v, ring.mul_linear(k - 1, &form, e))), bk);
                if !space.is_member(k, &prod) {
                    return Err(CohomologyError::MembershipFailed(format!("u_{} times a degree-{} class", i + 1, k - 1)));
                }
                gens.push(scaled_coordinates(piece, &scale, &prod));
            }
        }
    }
    let sub = SubspaceBasis::span(piece.dim(), gens);
    let is_pivot: std::collections::HashSet<u32> = sub.pivots().iter().copied().collect();
    let reps: Vec<u32> = (0..piece.dim() as u32).filter(|c| !is_pivot.contains(c)).collect();
    let slot: HashMap<u32, usize> = reps.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut touching = vec![Vec::new(); reps.len()];
    for (j, (col, p)) in sub.columns().iter().zip(sub.pivots()).enumerate() {
        let pv = col.get(*p).to_bigint();
        for (c, a) in col.entries() {
            if let Some(&s) = slot.get(c) {
                touching[s].push((j, BigRational::new(a.to_bigint(), pv.clone())));
            }
        }
    }
    Ok(QuotientPiece { degree: k, sub, reps, touching })
}

/// Whether `σ` maps the multiplication image `Σ u_i H'^{2(k-1)}` into itself.
pub fn ideal_is_invariant(
    space: &GradedSolutionSpace,
    quotient: &QuotientPiece,
    sigma: &Perm,
    action: Action,
) -> Result<bool, CohomologyError> {
    let k = quotient.degree;
    let piece = space.piece(k)?;
    let scale = pivot_scales(piece);
    let vmap = space.vertex_map(sigma);
    for row in quotient.sub.columns() {
        // scaled coordinates are a common multiple of the basis coefficients
        let mut v = IntVec::new();
        for (j, c) in row.entries() {
            v = v.combine(&Int::ONE, &piece.columns()[*j as usize], c);
        }
        let img = act_on(space.ring(), &vmap, sigma, action, k, &v);
        if !space.is_member(k, &img) || !quotient.sub.contains(&scaled_coordinates(piece, &scale, &img)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Trace of `σ` on a quotient piece: coefficient of each representative in
/// the normal form of its image.
pub fn quotient_trace(
    space: &GradedSolutionSpace,
    quotient: &QuotientPiece,
    sigma: &Perm,
    action: Action,
) -> Result<BigRational, CohomologyError> {
    let k = quotient.degree;
    let piece = space.piece(k)?;
    let scale = pivot_scales(piece);
    let vmap = space.vertex_map(sigma);
    let mut tr = BigRational::zero();
    for (slot, &r) in quotient.reps.iter().enumerate() {
        let col = &piece.columns()[r as usize];
        let img = act_on(space.ring(), &vmap, sigma, action, k, col);
        if !space.is_member(k, &img) {
            return Err(CohomologyError::NotInvariant { sigma: sigma.to_string(), degree: k });
        }
        let x = scaled_coordinates(piece, &scale, &img);
        // col itself has scaled coordinate scale[r] at r
        let mut coeff = BigRational::from_integer(x.get(r).to_bigint());
        for (j, ratio) in &quotient.touching[slot] {
            let piv = quotient.sub.pivots()[*j];
            let xp = x.get(piv);
            if !xp.is_zero() {
                coeff -= BigRational::from_integer(xp.to_bigint()) * ratio;
            }
        }
        tr += coeff / BigRational::from_integer(scale[r as usize].to_bigint());
    }
    Ok(tr)
}

/// Class function valued in polynomials of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    pub n: usize,
    pub values: BTreeMap<Partition, Vec<BigRational>>,
}

impl GradedCharacter {
    pub fn value(&self, lambda: &Partition, k: usize) -> BigRational {
        self.values.get(lambda).and_then(|v| v.get(k)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn max_degree(&self) -> usize {
        self.values.values().map(|v| v.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn frobenius(&self) -> Result<GradedSymmetricFunction, CohomologyError> {
        let mut out = GradedSymmetricFunction::zero(self.n, Basis::P);
        for k in 0..=self.max_degree() {
            let chi = ClassFunction::from_fn(self.n, |l| self.value(l, k));
            out.set(k, frobenius(&chi)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let values: BTreeMap<String, Vec<String>> = self
            .values
            .iter()
            .map(|(l, v)| (l.to_string(), v.iter().map(crate::symfun::rational_to_string).collect()))
            .collect();
        json!({ "n": self.n, "values": values })
    }
}

/// `Π_c (1 - q^{|c|}) / (1 - q)` for the dot action, `(1 - q)^{n-1}` for dagger.
fn ambient_factor(lambda: &Partition, action: Action) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    let mul = |p: &[BigInt], r: usize| {
        let mut out = vec![BigInt::zero(); p.len() + r];
        for (i, a) in p.iter().enumerate() {
            out[i] += a;
            out[i + r] -= a;
        }
        out
    };
    match action {
        Action::Dot => {
            let parts = lambda.parts();
            for &c in &parts[1..] {
                p = mul(&p, c);
            }
            // (1 - q^{c}) / (1 - q) = 1 + q + … + q^{c-1}
            let c = parts[0];
            let mut out = vec![BigInt::zero(); p.len() + c - 1];
            for (i, a) in p.iter().enumerate() {
                for j in 0..c {
                    out[i + j] += a;
                }
            }
            out
        }
        Action::Dagger => {
            for _ in 1..lambda.weight() {
                p = mul(&p, 1);
            }
            p
        }
    }
}

/// Ordinary graded character from equivariant traces on the slice, by
/// multiplying with the ambient factor; coefficients beyond the expected
/// dimension must vanish.
pub fn graded_character(space: &GradedSolutionSpace, action: Action) -> Result<GradedCharacter, CohomologyError> {
    space.check_invariance(action)?;
    let n = space.n();
    let d = space.expected_dimension();
    let mut values = BTreeMap::new();
    for lambda in partitions(n) {
        let sigma = Perm::of_cycle_type(&lambda);
        let traces = space.slice_traces(&sigma, action, false)?;
        let factor = ambient_factor(&lambda, action);
        let mut series = Vec::with_capacity(traces.len());
        for k in 0..traces.len() {
            let mut acc = BigRational::zero();
            for (j, f) in factor.iter().enumerate().take(k + 1) {
                if !f.is_zero() {
                    acc += &traces[k - j] * BigRational::from_integer(f.clone());
                }
            }
            series.push(acc);
        }
        for (k, v) in series.iter().enumerate() {
            if k > d && !v.is_zero() {
                return Err(CohomologyError::Truncated { degree: k });
            }
        }
        series.truncate(d + 1);
        values.insert(lambda, series);
    }
    Ok(GradedCharacter { n, values })
}

/// Graded character from traces on the direct quotient in every degree up
/// to the expected dimension.
pub fn graded_character_direct(space: &GradedSolutionSpace, action: Action) -> Result<GradedCharacter, CohomologyError> {
    let n = space.n();
    let quotients: Vec<QuotientPiece> = (0..=space.expected_dimension())
        .into_par_iter()
        .map(|k| ordinary_piece_direct(space, k))
        .collect::<Result<_, _>>()?;
    for sigma in generators(n) {
        for q in &quotients {
            if !ideal_is_invariant(space, q, &sigma, action)? {
                return Err(CohomologyError::NotInvariant { sigma: sigma.to_string(), degree: q.degree });
            }
        }
    }
    let mut values = BTreeMap::new();
    for lambda in partitions(n) {
        let sigma = Perm::of_cycle_type(&lambda);
        let series = quotients
            .par_iter()
            .map(|q| quotient_trace(space, q, &sigma, action))
            .collect::<Result<Vec<_>, _>>()?;
        values.insert(lambda, series);
    }
    Ok(GradedCharacter { n, values })
}

/// Both characters, failing loudly if they disagree; the direct value is returned.
pub fn graded_character_checked(space: &GradedSolutionSpace, action: Action) -> Result<GradedCharacter, CohomologyError> {
    let series = graded_character(space, action)?;
    let direct = graded_character_direct(space, action)?;
    for lambda in partitions(space.n()) {
        for k in 0..=space.expected_dimension() {
            let (a, b) = (series.value(&lambda, k), direct.value(&lambda, k));
            if a != b {
                return Err(CohomologyError::CrossCheckFailed {
                    partition: lambda.to_string(),
                    degree: k,
                    series: a.to_string(),
                    direct: b.to_string(),
                });
            }
        }
    }
    Ok(direct)
}

/// Direct quotient dimensions, checked against the Hilbert numerator.
pub fn ordinary_dims_checked(space: &GradedSolutionSpace) -> Result<Vec<usize>, CohomologyError> {
    let b = hilbert_numerator(space)?;
    let dims: Vec<usize> = (0..=space.expected_dimension())
        .into_par_iter()
        .map(|k| ordinary_piece_direct(space, k).map(|q| q.dim()))
        .collect::<Result<_, _>>()?;
    for (k, &d) in dims.iter().enumerate() {
        let expect = b.get(k).copied().unwrap_or(0);
        if expect != d as i64 {
            return Err(CohomologyError::DimensionMismatch { degree: k, numerator: expect, direct: d });
        }
    }
    Ok(dims)
}

pub fn frobenius_series(space: &GradedSolutionSpace, action: Action) -> Result<GradedSymmetricFunction, CohomologyError> {
    graded_character(space, action)?.frobenius()
}

/// A map from vertices to homogeneous polynomials in `t_1..t_n`, checked
/// against its graph on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantClass {
    pub degree: usize,
    pub values: Vec<Poly>,
}

impl EquivariantClass {
    pub fn new(g: &dyn CohomologyGraph, degree: usize, values: Vec<Poly>) -> Result<Self, CohomologyError> {
        if values.len() != g.labeled().vertices().len() {
            return Err(CohomologyError::MembershipFailed(format!(
                "{} values for {} vertices",
                values.len(),
                g.labeled().vertices().len()
            )));
        }
        if let Some(bad) = values.iter().position(|p| !p.is_zero() && !p.is_homogeneous_of(degree)) {
            return Err(CohomologyError::MembershipFailed(format!("value at vertex {bad} is not of degree {degree}")));
        }
        if let Some(e) = first_violation(g, &values) {
            return Err(CohomologyError::MembershipFailed(e));
        }
        Ok(EquivariantClass { degree, values })
    }

    /// The constant class `p` at every vertex.
    pub fn constant(g: &dyn CohomologyGraph, p: Poly, degree: usize) -> Result<Self, CohomologyError> {
        Self::new(g, degree, vec![p; g.labeled().vertices().len()])
    }

    /// Coordinates in the slice model (after `t_n = 0`) at degree `degree`.
    pub fn to_slice_coords(&self, ring: &GradedRing) -> IntVec {
        let block = ring.dim(self.degree);
        let index = ring.index(self.degree);
        let mut pairs = Vec::new();
        let mut lcm = BigInt::one();
        let sliced: Vec<Poly> = self.values.iter().map(|p| slice_poly(p)).collect();
        for p in &sliced {
            for (_, c) in p.terms() {
                lcm = num_integer::Integer::lcm(&lcm, c.denom());
            }
        }
        for (v, p) in sliced.iter().enumerate() {
            for (i, c) in p.to_coords(index) {
                pairs.push(((v * block) as u32 + i, Int::from(c.numer() * (&lcm / c.denom()))));
            }
        }
        IntVec::from_pairs(pairs)
    }
}

/// `p(t_1 - t_n, …, t_{n-1} - t_n)` read back as a polynomial in `t_1..t_{n-1}`
/// equals `p|_{t_n = 0}` for polynomials in the differences.
fn slice_poly(p: &Poly) -> Poly {
    p.drop_last()
}

fn first_violation(g: &dyn CohomologyGraph, values: &[Poly]) -> Option<String> {
    let lg = g.labeled();
    for e in lg.edges() {
        if !values[e.u].sub(&values[e.v]).divisible_by(&e.label) {
            return Some(format!("edge {{{}, {}}}", lg.vertices()[e.u], lg.vertices()[e.v]));
        }
    }
    for q in g.quads() {
        let mut s = Poly::zero(lg.n());
        for (v, sign) in q.vertices.iter().zip(q.signs) {
            let term = values[*v].scale(&BigRational::from_integer(BigInt::from(sign)));
            s = s.add(&term);
        }
        if !s.divisible_by_square(&q.form) {
            return Some(format!("4-gon at {}", lg.vertices()[q.vertices[0]]));
        }
    }
    None
}

/// Every edge congruence and, for signed graphs, every 4-gon condition.
pub fn membership_check(values: &[Poly], g: &dyn CohomologyGraph) -> bool {
    values.len() == g.labeled().vertices().len() && first_violation(g, values).is_none()
}

/// `x_i(w) = t_{w(i)}`; circle vertices `°v` get `t_{v(τ(i))}` when `tau`
/// is given, and `t_{v(i)}` otherwise.
pub fn make_class_xi_twisted(g: &dyn CohomologyGraph, i: usize, tau: Option<&Perm>) -> Result<EquivariantClass, CohomologyError> {
    let lg = g.labeled();
    let n = lg.n();
    let values = lg
        .vertices()
        .iter()
        .map(|v| {
            let pos = match (v.circle, tau) {
                (true, Some(t)) => t.at(i),
                _ => i,
            };
            Poly::var(n, v.perm.at(pos))
        })
        .collect();
    EquivariantClass::new(g, 1, values)
}

pub fn make_class_xi(g: &dyn CohomologyGraph, i: usize) -> Result<EquivariantClass, CohomologyError> {
    make_class_xi_twisted(g, i, None)
}

impl SignedBlowupGraph {
    /// `x_i(°wτ) = x_i(w) = t_{w(i)}`.
    pub fn class_xi(&self, i: usize) -> Result<EquivariantClass, CohomologyError> {
        make_class_xi_twisted(self, i, Some(&self.tau()))
    }
}
