//! Finitely generated right modules as quiver representations.
//!
//! A module `M` is stored as vertex spaces `M e_v` of dimension `dims[v]`
//! and one matrix per arrow `a: i -> j` of shape `dims[i] x dims[j]`; the
//! right action of `a` sends the row vector `x` at `i` to `x * maps[a]`.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{Algebra, Path};
use crate::linalg::Matrix;

/// Exhaustive iso search is used while `p^dim Hom <= ISO_EXHAUSTIVE_LIMIT`.
pub const ISO_EXHAUSTIVE_LIMIT: u64 = 4096;
/// Random invertibility probes when the Hom space is too large to enumerate.
pub const ISO_RANDOM_SAMPLES: usize = 256;
/// Iso tests whose Hom linear system has more unknowns than this report
/// `Inconclusive` instead of solving it.
pub const HOM_UNKNOWN_LIMIT: usize = 1600;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("operation undefined on the zero module")]
    ZeroModule,
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("malformed representation: {0}")]
    Malformed(String),
}

#[derive(Clone)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("dims", &self.dims)
            .field("maps", &self.maps)
            .finish()
    }
}

impl Representation {
    /// Validates matrix shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, ModuleError> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(ModuleError::Malformed(format!(
                "{} vertex dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(ModuleError::Malformed(format!(
                "{} arrow maps for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if (m.rows(), m.cols()) != (dims[a.source], dims[a.target]) {
                return Err(ModuleError::Malformed(format!(
                    "arrow {} has a {}x{} matrix, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.source],
                    dims[a.target]
                )));
            }
            if m.field() != algebra.field() {
                return Err(ModuleError::Malformed(format!("arrow {} uses a different field", a.name)));
            }
        }
        let rep = Representation { algebra, dims, maps };
        if let Some(r) = rep.violated_relation() {
            return Err(ModuleError::Malformed(format!(
                "relation {} does not act as zero",
                rep.algebra.path_label(r)
            )));
        }
        Ok(rep)
    }

    fn assemble(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let rep = Representation { algebra, dims, maps };
        debug_assert!(rep.violated_relation().is_none(), "relation violated");
        rep
    }

    fn violated_relation(&self) -> Option<&Path> {
        self.algebra.relations().iter().find(|r| {
            let mut prod = Matrix::identity(self.algebra.field(), self.dims[r.start()]);
            for &a in r.arrows() {
                prod = prod.mul(&self.maps[a]);
            }
            !prod.is_zero()
        })
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        let n = algebra.vertex_count();
        semisimple(algebra, &vec![0; n])
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn arrow_map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// All arrows act as zero.
    pub fn is_semisimple(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    fn with_algebra(mut self, algebra: &Arc<Algebra>) -> Self {
        debug_assert!(**algebra == *self.algebra);
        self.algebra = algebra.clone();
        self
    }

    fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    /// Image of the row vector `x` (living at the start of `path`) under the
    /// action of `path`.
    pub fn act(&self, x: &[u32], path: &Path) -> Vec<u32> {
        let mut v = x.to_vec();
        for &a in path.arrows() {
            v = self.maps[a].apply_row(&v);
        }
        v
    }

    /// `(MJ)_v`: the span of the images of all arrows ending at `v`, as an
    /// RREF basis.
    fn radical_space(&self, v: usize) -> Matrix {
        let f = self.algebra.field();
        let mut stacked = Matrix::zeros(f, 0, self.dims[v]);
        for id in self.algebra.quiver().incoming(v) {
            stacked = stacked.vstack(&self.maps[id]);
        }
        stacked.row_space_basis()
    }

    pub(crate) fn radical_space_basis(&self, v: usize) -> Matrix {
        self.radical_space(v)
    }

    /// The submodule spanned at each vertex by the rows of `bases[v]`,
    /// where `coords[v]` are columns on which `bases[v]` is the identity.
    /// The spaces must be closed under the arrow action.
    fn submodule(&self, bases: Vec<Matrix>, coords: Vec<Vec<usize>>) -> (Representation, ModuleMap) {
        let q = self.algebra.quiver();
        let dims: Vec<usize> = bases.iter().map(Matrix::rows).collect();
        let f = self.algebra.field();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let moved = bases[a.source].mul(&self.maps[id]);
                let mut m = Matrix::zeros(f, dims[a.source], dims[a.target]);
                for r in 0..moved.rows() {
                    for (k, &c) in coords[a.target].iter().enumerate() {
                        m.set(r, k, moved.get(r, c));
                    }
                }
                debug_assert_eq!(m.mul(&bases[a.target]), moved, "subspace not closed");
                m
            })
            .collect();
        let sub = Representation::assemble(self.algebra.clone(), dims, maps);
        let inclusion = ModuleMap {
            source: sub.clone(),
            target: self.clone(),
            components: bases,
        };
        (sub, inclusion)
    }

    /// `rad M = MJ` as a submodule.
    pub fn radical(&self) -> Representation {
        let n = self.algebra.vertex_count();
        let mut bases = Vec::with_capacity(n);
        let mut coords = Vec::with_capacity(n);
        for v in 0..n {
            let (r, pivots) = self.radical_space(v).rref();
            bases.push(r);
            coords.push(pivots);
        }
        self.submodule(bases, coords).0
    }

    /// Dimensions of the successive radical layers `rad^k M / rad^(k+1) M`.
    pub fn radical_layer_dims(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let top = top_dims(&cur);
            layers.push(top);
            cur = cur.radical();
        }
        layers
    }

    /// Every radical layer is simple or zero.
    pub fn is_uniserial(&self) -> bool {
        self.radical_layer_dims()
            .iter()
            .all(|layer| layer.iter().sum::<usize>() <= 1)
    }

    /// `M` is projective iff its projective cover has the same dimension.
    pub fn is_projective(&self) -> bool {
        let t = top_dims(self);
        let cover_dim: usize = t
            .iter()
            .enumerate()
            .map(|(v, &m)| m * self.algebra.paths_from(v).len())
            .sum();
        cover_dim == self.total_dim()
    }
}

/// A homomorphism of right modules given by its vertex components.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    components: Vec<Matrix>,
}

impl ModuleMap {
    /// Validates shapes and the commuting squares
    /// `f_i * N_a = M_a * f_j` for every arrow `a: i -> j`.
    pub fn new(source: Representation, target: Representation, components: Vec<Matrix>) -> Result<Self, ModuleError> {
        if !source.same_algebra(&target) {
            return Err(ModuleError::AlgebraMismatch);
        }
        let n = source.algebra.vertex_count();
        if components.len() != n {
            return Err(ModuleError::Malformed("wrong number of vertex components".into()));
        }
        for v in 0..n {
            let c = &components[v];
            if (c.rows(), c.cols()) != (source.dims[v], target.dims[v]) {
                return Err(ModuleError::Malformed(format!("component at vertex {} has wrong shape", v + 1)));
            }
        }
        let map = ModuleMap {
            source,
            target,
            components,
        };
        if !map.commutes() {
            return Err(ModuleError::Malformed("not a module homomorphism".into()));
        }
        Ok(map)
    }

    pub fn identity(m: &Representation) -> Self {
        let f = m.algebra.field();
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            components: m.dims.iter().map(|&d| Matrix::identity(f, d)).collect(),
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn commutes(&self) -> bool {
        self.source
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(id, a)| {
                let lhs = self.components[a.source].mul(&self.target.maps[id]);
                let rhs = self.source.maps[id].mul(&self.components[a.target]);
                lhs == rhs
            })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap) -> ModuleMap {
        let components = self
            .components
            .iter()
            .zip(&next.components)
            .map(|(f, g)| f.mul(g))
            .collect();
        ModuleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            components,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn rank_dims(&self) -> Vec<usize> {
        self.components.iter().map(Matrix::rank).collect()
    }

    /// Kernel as a submodule of the source, with its inclusion.
    pub fn kernel(&self) -> (Representation, ModuleMap) {
        let mut bases = Vec::with_capacity(self.components.len());
        let mut coords = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let (k, free) = c.transpose().kernel_basis_with_coords();
            bases.push(k);
            coords.push(free);
        }
        self.source.submodule(bases, coords)
    }
}

fn check_vertex(a: &Algebra, v: usize) -> Result<(), ModuleError> {
    if v >= a.vertex_count() {
        return Err(ModuleError::VertexOutOfRange {
            vertex: v,
            count: a.vertex_count(),
        });
    }
    Ok(())
}

/// The module spanned by the basis paths selected by `member`, with
/// `p . a = 0` whenever the product is not a selected path. Selecting an
/// upward-closed set gives a submodule of `A_A`; a convex set `{k <= len < l}`
/// gives the subquotient `J^k / J^l`.
fn path_span_module(a: &Arc<Algebra>, member: impl Fn(&Path) -> bool) -> Representation {
    let n = a.vertex_count();
    let f = a.field();
    // position of each selected basis path inside its vertex space
    let mut slot = vec![None; a.dim()];
    let mut dims = vec![0; n];
    for (b, p) in a.basis().iter().enumerate() {
        if member(p) {
            slot[b] = Some(dims[p.end()]);
            dims[p.end()] += 1;
        }
    }
    let mut maps: Vec<Matrix> = a
        .quiver()
        .arrows()
        .iter()
        .map(|ar| Matrix::zeros(f, dims[ar.source], dims[ar.target]))
        .collect();
    for (b, _) in a.basis().iter().enumerate() {
        let Some(row) = slot[b] else { continue };
        for id in a.quiver().outgoing(a.basis()[b].end()) {
            if let Some(c) = a.extend_by_arrow(b, id).and_then(|q| slot[q]) {
                maps[id].set(row, c, 1);
            }
        }
    }
    Representation::assemble(a.clone(), dims, maps)
}

pub fn semisimple(a: &Arc<Algebra>, dims: &[usize]) -> Representation {
    let f = a.field();
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .map(|ar| Matrix::zeros(f, dims[ar.source], dims[ar.target]))
        .collect();
    Representation::assemble(a.clone(), dims.to_vec(), maps)
}

/// The simple top `S_v` of `e_v A`.
pub fn simple(a: &Arc<Algebra>, v: usize) -> Result<Representation, ModuleError> {
    check_vertex(a, v)?;
    let mut dims = vec![0; a.vertex_count()];
    dims[v] = 1;
    Ok(semisimple(a, &dims))
}

/// `P_v = e_v A`, with basis the normal paths starting at `v`.
pub fn projective(a: &Arc<Algebra>, v: usize) -> Result<Representation, ModuleError> {
    check_vertex(a, v)?;
    Ok(path_span_module(a, |p| p.start() == v))
}

/// `I_v = D(A e_v)`, obtained by dualizing the projective `e_v A^op`.
pub fn injective(a: &Arc<Algebra>, v: usize) -> Result<Representation, ModuleError> {
    check_vertex(a, v)?;
    let op = a.opposite();
    Ok(dual(&projective(&op, v)?).with_algebra(a))
}

/// The path module `pA`: normal paths having `p` as a prefix.
pub fn path_module(a: &Arc<Algebra>, p: &Path) -> Representation {
    path_span_module(a, |q| q.start() == p.start() && q.arrows().starts_with(p.arrows()))
}

pub fn regular_module(a: &Arc<Algebra>) -> Representation {
    radical_power_module(a, 0)
}

/// The right ideal `J^k`, spanned by the basis paths of length `>= k`.
pub fn radical_power_module(a: &Arc<Algebra>, k: usize) -> Representation {
    path_span_module(a, |p| p.len() >= k)
}

/// `J^k / J^l` for `k < l`.
pub fn radical_layer_quotient(a: &Arc<Algebra>, k: usize, l: usize) -> Representation {
    assert!(k < l, "radical_layer_quotient needs k < l");
    path_span_module(a, |p| p.len() >= k && p.len() < l)
}

/// The vector-space dual, a right module over the opposite algebra.
pub fn dual(m: &Representation) -> Representation {
    let op = m.algebra.opposite();
    let maps = m.maps.iter().map(Matrix::transpose).collect();
    Representation::assemble(op, m.dims.clone(), maps)
}

/// Block-diagonal direct sum.
pub fn direct_sum(a: &Arc<Algebra>, summands: &[Representation]) -> Representation {
    let n = a.vertex_count();
    let f = a.field();
    let mut dims = vec![0; n];
    for s in summands {
        for v in 0..n {
            dims[v] += s.dims[v];
        }
    }
    let arrows = a.quiver().arrows();
    let mut maps: Vec<Matrix> = arrows
        .iter()
        .map(|ar| Matrix::zeros(f, dims[ar.source], dims[ar.target]))
        .collect();
    let mut offset = vec![0; n];
    for s in summands {
        for (id, ar) in arrows.iter().enumerate() {
            let block = &s.maps[id];
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    let x = block.get(r, c);
                    if x != 0 {
                        maps[id].set(offset[ar.source] + r, offset[ar.target] + c, x);
                    }
                }
            }
        }
        for v in 0..n {
            offset[v] += s.dims[v];
        }
    }
    Representation::assemble(a.clone(), dims, maps)
}

/// `dim (M / MJ)_v` per vertex.
pub fn top_dims(m: &Representation) -> Vec<usize> {
    (0..m.dims.len())
        .map(|v| m.dims[v] - m.radical_space(v).rows())
        .collect()
}

/// `dim soc(M)_v` per vertex.
pub fn socle_dims(m: &Representation) -> Vec<usize> {
    (0..m.dims.len()).map(|v| socle_space(m, v).rows()).collect()
}

fn socle_space(m: &Representation, v: usize) -> Matrix {
    let f = m.algebra.field();
    let mut leaving = Matrix::zeros(f, m.dims[v], 0);
    for id in m.algebra.quiver().outgoing(v) {
        leaving = leaving.hstack(&m.maps[id]);
    }
    leaving.left_kernel_basis()
}

/// `top(M) = M / MJ`, a semisimple module.
pub fn top(m: &Representation) -> Result<Representation, ModuleError> {
    if m.is_zero() {
        return Err(ModuleError::ZeroModule);
    }
    Ok(semisimple(&m.algebra, &top_dims(m)))
}

/// `soc(M)`, the annihilator of `J`, a semisimple module.
pub fn socle(m: &Representation) -> Result<Representation, ModuleError> {
    if m.is_zero() {
        return Err(ModuleError::ZeroModule);
    }
    Ok(semisimple(&m.algebra, &socle_dims(m)))
}

/// Basis of `Hom_A(M, N)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub dimension: usize,
    pub basis: Vec<ModuleMap>,
}

fn hom_unknowns(m: &Representation, n: &Representation) -> usize {
    m.dims.iter().zip(&n.dims).map(|(x, y)| x * y).sum()
}

/// Solves the commuting-square system `f_i N_a = M_a f_j`.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<HomSpace, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let a = &m.algebra;
    let f = a.field();
    let nv = a.vertex_count();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    }
    let unknowns = offset[nv];
    // unknown (v, r, c) -> offset[v] + r * n.dims[v] + c
    let var = |v: usize, r: usize, c: usize| offset[v] + r * n.dims[v] + c;
    let mut rows: Vec<u32> = Vec::new();
    let mut row_count = 0;
    for (id, ar) in a.quiver().arrows().iter().enumerate() {
        let (i, j) = (ar.source, ar.target);
        let (ma, na) = (&m.maps[id], &n.maps[id]);
        for r in 0..m.dims[i] {
            for c in 0..n.dims[j] {
                let mut eq = vec![0u32; unknowns];
                // (f_i N_a)[r][c] = sum_s f_i[r][s] N_a[s][c]
                for s in 0..n.dims[i] {
                    let x = na.get(s, c);
                    if x != 0 {
                        let k = var(i, r, s);
                        eq[k] = f.add(eq[k], x);
                    }
                }
                // - (M_a f_j)[r][c] = - sum_t M_a[r][t] f_j[t][c]
                for t in 0..m.dims[j] {
                    let x = ma.get(r, t);
                    if x != 0 {
                        let k = var(j, t, c);
                        eq[k] = f.sub(eq[k], x);
                    }
                }
                if eq.iter().any(|&x| x != 0) {
                    rows.extend(eq);
                    row_count += 1;
                }
            }
        }
    }
    let system = Matrix::from_residues(f, row_count, unknowns, rows);
    let kernel = system.kernel_basis();
    let basis = (0..kernel.rows())
        .map(|k| {
            let sol = kernel.row(k);
            let components = (0..nv)
                .map(|v| {
                    let data = sol[offset[v]..offset[v + 1]].to_vec();
                    Matrix::from_residues(f, m.dims[v], n.dims[v], data)
                })
                .collect();
            ModuleMap {
                source: m.clone(),
                target: n.clone(),
                components,
            }
        })
        .collect::<Vec<_>>();
    Ok(HomSpace {
        dimension: basis.len(),
        basis,
    })
}

/// Outcome of an isomorphism test. `Inconclusive` means "unknown", never
/// "not isomorphic".
#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic(ModuleMap),
    NotIsomorphic,
    Inconclusive,
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

fn combine(basis: &[ModuleMap], coeffs: &[u32]) -> ModuleMap {
    let first = &basis[0];
    let f = first.source.algebra.field();
    let components = (0..first.components.len())
        .map(|v| {
            let mut acc = Matrix::zeros(f, first.components[v].rows(), first.components[v].cols());
            for (b, &c) in basis.iter().zip(coeffs) {
                if c != 0 {
                    acc = acc.add(&b.components[v].scale(c));
                }
            }
            acc
        })
        .collect();
    ModuleMap {
        source: first.source.clone(),
        target: first.target.clone(),
        components,
    }
}

/// Searches `Hom(M, N)` for an invertible element.
pub fn is_isomorphic(m: &Representation, n: &Representation, seed: u64) -> Result<IsoOutcome, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.dims != n.dims {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if m.is_semisimple() && n.is_semisimple() {
        // semisimple modules are determined by their dimension vectors
        let f = m.algebra.field();
        let components = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        return Ok(IsoOutcome::Isomorphic(ModuleMap {
            source: m.clone(),
            target: n.clone(),
            components,
        }));
    }
    if m.is_semisimple() != n.is_semisimple() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if hom_unknowns(m, n) > HOM_UNKNOWN_LIMIT {
        return Ok(IsoOutcome::Inconclusive);
    }
    let hom = hom_space(m, n)?;
    if hom.dimension == 0 {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let p = m.algebra.field().prime() as u64;
    let exhaustive = (0..hom.dimension)
        .try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&x| x <= ISO_EXHAUSTIVE_LIMIT))
        .is_some();
    if exhaustive {
        let mut coeffs = vec![0u32; hom.dimension];
        loop {
            // odometer increment; the all-zero vector is skipped
            let mut k = 0;
            while k < coeffs.len() {
                coeffs[k] += 1;
                if (coeffs[k] as u64) < p {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
            if k == coeffs.len() {
                return Ok(IsoOutcome::NotIsomorphic);
            }
            let candidate = combine(&hom.basis, &coeffs);
            if candidate.is_isomorphism() {
                return Ok(IsoOutcome::Isomorphic(candidate));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_RANDOM_SAMPLES {
        let coeffs: Vec<u32> = (0..hom.dimension).map(|_| rng.gen_range(0..p as u32)).collect();
        let candidate = combine(&hom.basis, &coeffs);
        if candidate.is_isomorphism() {
            return Ok(IsoOutcome::Isomorphic(candidate));
        }
    }
    Ok(IsoOutcome::Inconclusive)
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: Representation,
    pub cover: ModuleMap,
    pub multiplicities: Vec<usize>,
}

/// Minimal projective cover `P -> M`. Generators are lifted from the
/// standard basis vectors outside the pivot columns of `rad(M)_v`.
pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover, ModuleError> {
    if m.is_zero() {
        return Err(ModuleError::ZeroModule);
    }
    let a = &m.algebra;
    let nv = a.vertex_count();
    let mut generators: Vec<(usize, usize)> = Vec::new();
    let mut multiplicities = vec![0; nv];
    for v in 0..nv {
        let pivots = m.radical_space(v).rref().1;
        for c in (0..m.dims[v]).filter(|c| !pivots.contains(c)) {
            generators.push((v, c));
            multiplicities[v] += 1;
        }
    }
    let summands: Vec<Representation> = generators
        .iter()
        .map(|&(v, _)| projective(a, v).expect("vertex in range"))
        .collect();
    let p = direct_sum(a, &summands);

    // rows of the cover at vertex k, in the same order as the direct sum
    let mut rows: Vec<Vec<Vec<u32>>> = vec![Vec::new(); nv];
    for &(v, c) in &generators {
        let mut image: Vec<Option<Vec<u32>>> = vec![None; a.dim()];
        for &b in a.paths_from(v) {
            let path = &a.basis()[b];
            let vec = if path.is_trivial() {
                let mut g = vec![0u32; m.dims[v]];
                g[c] = 1;
                g
            } else {
                let (last, prefix) = path.arrows().split_last().unwrap();
                let prefix_path = if prefix.is_empty() {
                    Path::trivial(v)
                } else {
                    Path::from_arrows(a.quiver(), prefix.to_vec()).unwrap()
                };
                let pi = a.index_of(&prefix_path).expect("prefix of a normal path is normal");
                m.maps[*last].apply_row(image[pi].as_ref().unwrap())
            };
            rows[path.end()].push(vec.clone());
            image[b] = Some(vec);
        }
    }
    let f = a.field();
    let components = (0..nv)
        .map(|k| {
            let data: Vec<u32> = rows[k].concat();
            Matrix::from_residues(f, rows[k].len(), m.dims[k], data)
        })
        .collect();
    let cover = ModuleMap {
        source: p.clone(),
        target: m.clone(),
        components,
    };
    debug_assert!(cover.commutes());
    debug_assert!(cover.is_surjective());
    Ok(ProjectiveCover {
        module: p,
        cover,
        multiplicities,
    })
}

#[derive(Clone, Debug)]
pub struct InjectiveEnvelope {
    pub module: Representation,
    pub embedding: ModuleMap,
    pub multiplicities: Vec<usize>,
}

/// Minimal injective envelope `M -> E`, the dual of the projective cover of
/// `D(M)` over the opposite algebra.
pub fn injective_envelope(m: &Representation) -> Result<InjectiveEnvelope, ModuleError> {
    if m.is_zero() {
        return Err(ModuleError::ZeroModule);
    }
    let cover = projective_cover(&dual(m))?;
    let e = dual(&cover.module).with_algebra(&m.algebra);
    let components = cover.cover.components.iter().map(Matrix::transpose).collect();
    let embedding = ModuleMap {
        source: m.clone(),
        target: e.clone(),
        components,
    };
    debug_assert!(embedding.commutes());
    Ok(InjectiveEnvelope {
        module: e,
        embedding,
        multiplicities: cover.multiplicities,
    })
}

/// Dimension of the injective envelope, computed from socle multiplicities
/// without building it.
pub fn injective_envelope_dim(m: &Representation) -> usize {
    let a = &m.algebra;
    socle_dims(m)
        .iter()
        .enumerate()
        .map(|(v, &s)| s * a.paths_to(v).len())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;
    use crate::linalg::Field;

    fn f() -> Field {
        Field::new(DEFAULT_PRIME).unwrap()
    }

    fn a2() -> Arc<Algebra> {
        let q = Quiver::from_edges(2, &[("a", 0, 1)]).unwrap();
        build_monomial_algebra(f(), q, vec![], DEFAULT_MAX_PATH_LEN).unwrap()
    }

    fn truncated_loop(power: usize) -> Arc<Algebra> {
        let q = Quiver::from_edges(1, &[("x", 0, 0)]).unwrap();
        build_monomial_algebra(f(), q, vec![vec![0; power]], DEFAULT_MAX_PATH_LEN).unwrap()
    }

    fn k221() -> Arc<Algebra> {
        let k = KupischSeries::new(KupischShape::Linear, vec![2, 2, 1]).unwrap();
        nakayama_from_kupisch(f(), &k).unwrap()
    }

    fn iso(m: &Representation, n: &Representation) -> bool {
        is_isomorphic(m, n, 7).unwrap().is_isomorphic()
    }

    #[test]
    fn simple_and_projective_dims() {
        assert_eq!(simple(&a2(), 0).unwrap().dims(), [1, 0]);
        assert_eq!(simple(&k221(), 2).unwrap().dims(), [0, 0, 1]);
        assert!(matches!(simple(&a2(), 2), Err(ModuleError::VertexOutOfRange { .. })));

        assert_eq!(projective(&k221(), 0).unwrap().dims(), [1, 1, 0]);
        assert_eq!(projective(&truncated_loop(2), 0).unwrap().dims(), [2]);
        let p2 = projective(&a2(), 1).unwrap();
        assert!(iso(&p2, &simple(&a2(), 1).unwrap()));
    }

    #[test]
    fn injective_examples() {
        let a = k221();
        let i2 = injective(&a, 1).unwrap();
        assert_eq!(i2.dims(), [1, 1, 0]);
        assert!(iso(&projective(&a, 0).unwrap(), &i2));

        let i1 = injective(&a2(), 0).unwrap();
        assert!(iso(&i1, &simple(&a2(), 0).unwrap()));

        let l = truncated_loop(2);
        assert!(iso(&injective(&l, 0).unwrap(), &regular_module(&l)));
    }

    #[test]
    fn radical_powers_and_layers() {
        let a = k221();
        let j = radical_power_module(&a, 1);
        assert_eq!(j.dims(), [0, 1, 1]);
        assert!(j.is_semisimple());
        assert_eq!(radical_power_module(&a, 0).dims(), [1, 2, 2]);
        assert!(radical_power_module(&a, 2).is_zero());

        let q = radical_layer_quotient(&a, 1, 2);
        assert_eq!(q.dims(), [0, 1, 1]);
        assert!(q.is_semisimple());
        assert_eq!(radical_layer_quotient(&a, 0, 1).dims(), [1, 1, 1]);
        assert_eq!(radical_layer_quotient(&truncated_loop(3), 1, 2).dims(), [1]);
    }

    #[test]
    fn sum_of_simples_is_top_of_regular() {
        let a = k221();
        let simples: Vec<_> = (0..3).map(|v| simple(&a, v).unwrap()).collect();
        let sum = direct_sum(&a, &simples);
        assert!(iso(&sum, &radical_layer_quotient(&a, 0, 1)));
        assert!(iso(&sum, &top(&regular_module(&a)).unwrap()));
    }

    #[test]
    fn dual_examples() {
        let a = k221();
        for v in 0..3 {
            let s = simple(&a, v).unwrap();
            let ds = dual(&s);
            assert!(iso(&ds, &simple(&a.opposite(), v).unwrap()));
        }
        let j = radical_power_module(&a, 1);
        assert_eq!(dual(&j).dims(), [0, 1, 1]);
        let dd = dual(&dual(&j));
        assert_eq!(dd.maps(), j.maps());
    }

    #[test]
    fn tops_and_socles() {
        let a = k221();
        for v in 0..3 {
            assert!(iso(&top(&projective(&a, v).unwrap()).unwrap(), &simple(&a, v).unwrap()));
            assert!(iso(&socle(&injective(&a, v).unwrap()).unwrap(), &simple(&a, v).unwrap()));
        }
        let j = radical_power_module(&a, 1);
        assert_eq!(top_dims(&j), [0, 1, 1]);
        assert!(matches!(top(&Representation::zero(&a)), Err(ModuleError::ZeroModule)));
        assert!(matches!(socle(&Representation::zero(&a)), Err(ModuleError::ZeroModule)));
    }

    #[test]
    fn hom_examples() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let s1 = simple(&a, 0).unwrap();
        assert_eq!(hom_space(&p1, &p1).unwrap().dimension, 1);
        assert_eq!(hom_space(&s1, &p1).unwrap().dimension, 0);
        assert_eq!(hom_space(&p1, &s1).unwrap().dimension, 1);
        for b in hom_space(&p1, &p1).unwrap().basis {
            assert!(b.commutes());
        }
    }

    #[test]
    fn iso_examples() {
        let a = k221();
        let s1 = simple(&a, 0).unwrap();
        let s2 = simple(&a, 1).unwrap();
        assert!(matches!(is_isomorphic(&s1, &s2, 0).unwrap(), IsoOutcome::NotIsomorphic));
        let r = regular_module(&a);
        assert!(iso(&r, &r));
        // same dimension vector, different modules: P1 vs S1 + S2
        let p1 = projective(&a, 0).unwrap();
        let split = direct_sum(&a, &[s1, s2]);
        assert!(matches!(is_isomorphic(&p1, &split, 0).unwrap(), IsoOutcome::NotIsomorphic));
    }

    #[test]
    fn covers() {
        let a = k221();
        let c = projective_cover(&simple(&a, 0).unwrap()).unwrap();
        assert_eq!(c.multiplicities, [1, 0, 0]);
        assert!(iso(&c.module, &projective(&a, 0).unwrap()));

        let j = radical_power_module(&a, 1);
        let c = projective_cover(&j).unwrap();
        assert_eq!(c.multiplicities, [0, 1, 1]);
        assert!(c.cover.is_surjective());
        let p23 = direct_sum(&a, &[projective(&a, 1).unwrap(), projective(&a, 2).unwrap()]);
        assert!(iso(&c.module, &p23));

        let p = projective(&a, 1).unwrap();
        assert!(projective_cover(&p).unwrap().cover.is_isomorphism());
        assert!(matches!(projective_cover(&Representation::zero(&a)), Err(ModuleError::ZeroModule)));
    }

    #[test]
    fn envelopes() {
        let a = k221();
        let e = injective_envelope(&simple(&a, 1).unwrap()).unwrap();
        assert_eq!(e.multiplicities, [0, 1, 0]);
        assert!(iso(&e.module, &projective(&a, 0).unwrap()));
        assert!(e.embedding.is_injective());

        let i = injective(&a, 2).unwrap();
        assert!(injective_envelope(&i).unwrap().embedding.is_isomorphism());

        // QF-3: the envelope of the regular module is projective
        let r = regular_module(&a);
        let e = injective_envelope(&r).unwrap();
        assert!(e.module.is_projective());
        assert_eq!(injective_envelope_dim(&r), e.module.total_dim());
    }

    #[test]
    fn kernel_of_cover() {
        let a = k221();
        let c = projective_cover(&simple(&a, 0).unwrap()).unwrap();
        let (k, inc) = c.cover.kernel();
        assert_eq!(k.dims(), [0, 1, 0]);
        assert!(inc.commutes());
        assert!(inc.then(&c.cover).is_zero());
    }

    #[test]
    fn uniserial_checks() {
        let a = k221();
        for v in 0..3 {
            assert!(projective(&a, v).unwrap().is_uniserial());
        }
        assert!(!regular_module(&a).is_uniserial());
        let q = Quiver::from_edges(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap();
        let k = radical_square_zero(f(), q).unwrap();
        assert!(!projective(&k, 0).unwrap().is_uniserial());
    }

    #[test]
    fn constructor_validation() {
        let a = truncated_loop(2);
        let fl = a.field().clone();
        // x acting by a nonzero nilpotent of order 3 violates x^2 = 0
        let x = Matrix::from_rows(&fl, &[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
        assert!(Representation::new(a.clone(), vec![3], vec![x]).is_err());
        let x = Matrix::from_rows(&fl, &[[0, 1], [0, 0]]);
        assert!(Representation::new(a.clone(), vec![2], vec![x]).is_ok());
        let bad = Matrix::zeros(&fl, 2, 3);
        assert!(Representation::new(a, vec![2], vec![bad]).is_err());
    }
}
