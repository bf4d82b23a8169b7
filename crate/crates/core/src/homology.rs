//! Syzygies, minimal projective resolutions and homological dimensions.
//!
//! Infinite dimensions are only ever reported with a certificate:
//!
//! * `PathCycle`: for monomial algebras `Omega(pA)` is the direct sum of the
//!   path modules `qA` over the minimal `q` with `pq = 0`. Following these
//!   edges from the arrows at a vertex and reaching a cycle proves the simple
//!   module there has infinite projective dimension.
//! * `SyzygyPeriodicity`: `Omega^m(M) ~ Omega^n(M)` with `m < n`, witnessed
//!   by an explicit isomorphism.
//! * `SupportPeriodicity`: `Omega^m(M)` and `Omega^n(M)` are both semisimple
//!   with the same support. The projective dimension of a semisimple module
//!   only depends on its support, so a finite value would satisfy
//!   `pd = pd - (n - m)`.
//!
//! When neither fires within the step cap or the dimension budget the value
//! is `AtLeast(c)`: the `c`-th syzygy is known to be nonzero and nothing
//! more.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::modules::{
    dual, injective, injective_envelope, is_isomorphic, projective, projective_cover, radical_power_module,
    regular_module, simple, IsoOutcome, ModuleError, ModuleMap, Representation,
};

pub const DEFAULT_CAP: usize = 64;
/// Syzygy iteration gives up (with `AtLeast`) once a syzygy exceeds this
/// total dimension.
pub const DEFAULT_DIM_BUDGET: usize = 256;

/// Why a dimension is infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// A cycle of path modules in the path-syzygy graph. `via` records the
    /// semisimple syzygy whose summand `S_vertex` reaches the cycle.
    PathCycle {
        cycle: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        via: Option<SimpleSummand>,
    },
    /// `Omega^first(M)` and `Omega^second(M)` are isomorphic; `witness`
    /// holds the vertex components of the isomorphism as row lists.
    SyzygyPeriodicity {
        first: usize,
        second: usize,
        witness: Vec<Vec<Vec<u32>>>,
    },
    /// `Omega^first(M)` and `Omega^second(M)` are semisimple with the same
    /// support (1-based vertices).
    SupportPeriodicity {
        first: usize,
        second: usize,
        support: Vec<usize>,
    },
}

/// The simple summand `S_vertex` (1-based) of the semisimple syzygy
/// `Omega^syzygy(M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleSummand {
    pub syzygy: usize,
    pub vertex: usize,
}

/// A homological dimension: `-inf` for the zero module, a finite value, a
/// certified infinity, or a lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ExtDim {
    #[serde(rename = "neginf")]
    NegInfinity,
    #[serde(rename = "finite")]
    Finite { n: usize },
    #[serde(rename = "infinite")]
    Infinite { certificate: Certificate },
    #[serde(rename = "atleast")]
    AtLeast { cap: usize },
}

/// Points of the extended line `{-inf} u Z u {+inf}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    NegInf,
    At(i64),
    Inf,
}

impl Level {
    fn pred(self) -> Level {
        match self {
            Level::At(n) => Level::At(n - 1),
            other => other,
        }
    }
}

/// Three-valued truth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }
}

/// The interval of values an `ExtDim` may denote.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lo: Level,
    pub hi: Level,
}

impl Bounds {
    pub fn exact(l: Level) -> Self {
        Bounds { lo: l, hi: l }
    }

    pub fn minus_one(self) -> Self {
        Bounds {
            lo: self.lo.pred(),
            hi: self.hi.pred(),
        }
    }

    pub fn max(self, other: Bounds) -> Bounds {
        Bounds {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn le(self, other: Bounds) -> Truth {
        if self.hi <= other.lo {
            Truth::True
        } else if self.lo > other.hi {
            Truth::False
        } else {
            Truth::Unknown
        }
    }

    pub fn ge(self, other: Bounds) -> Truth {
        other.le(self)
    }

    pub fn equals(self, other: Bounds) -> Truth {
        if self.lo == self.hi && other.lo == other.hi && self.lo == other.lo {
            Truth::True
        } else if self.hi < other.lo || other.hi < self.lo {
            Truth::False
        } else {
            Truth::Unknown
        }
    }
}

impl ExtDim {
    pub fn finite(n: usize) -> Self {
        ExtDim::Finite { n }
    }

    pub fn at_least(cap: usize) -> Self {
        ExtDim::AtLeast { cap }
    }

    pub fn bounds(&self) -> Bounds {
        match self {
            ExtDim::NegInfinity => Bounds::exact(Level::NegInf),
            ExtDim::Finite { n } => Bounds::exact(Level::At(*n as i64)),
            ExtDim::Infinite { .. } => Bounds::exact(Level::Inf),
            ExtDim::AtLeast { cap } => Bounds {
                lo: Level::At(*cap as i64),
                hi: Level::Inf,
            },
        }
    }

    pub fn is_determined(&self) -> bool {
        !matches!(self, ExtDim::AtLeast { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtDim::Infinite { .. })
    }

    pub fn as_finite(&self) -> Option<usize> {
        match self {
            ExtDim::Finite { n } => Some(*n),
            _ => None,
        }
    }

    /// Equality of values, ignoring certificates.
    pub fn same_value(&self, other: &ExtDim) -> bool {
        match (self, other) {
            (ExtDim::NegInfinity, ExtDim::NegInfinity) => true,
            (ExtDim::Finite { n }, ExtDim::Finite { n: m }) => n == m,
            (ExtDim::Infinite { .. }, ExtDim::Infinite { .. }) => true,
            (ExtDim::AtLeast { cap }, ExtDim::AtLeast { cap: c }) => cap == c,
            _ => false,
        }
    }

    /// Supremum of a family of dimensions. The result keeps the certificate
    /// of the first infinite member; lower bounds absorb finite values.
    pub fn max_of<'a>(values: impl IntoIterator<Item = &'a ExtDim>) -> ExtDim {
        let mut best = ExtDim::NegInfinity;
        for v in values {
            best = match (&best, v) {
                (ExtDim::Infinite { .. }, _) => best,
                (_, ExtDim::Infinite { .. }) => v.clone(),
                (ExtDim::AtLeast { cap: c }, other) | (other, ExtDim::AtLeast { cap: c }) => {
                    let floor = match other {
                        ExtDim::Finite { n } => *n,
                        ExtDim::AtLeast { cap } => *cap,
                        _ => 0,
                    };
                    ExtDim::at_least((*c).max(floor))
                }
                (ExtDim::NegInfinity, other) => other.clone(),
                (ExtDim::Finite { n }, ExtDim::Finite { n: m }) => ExtDim::finite((*n).max(*m)),
                (ExtDim::Finite { .. }, ExtDim::NegInfinity) => best,
            };
        }
        best
    }

    /// Compact text form: `2`, `inf`, `>=64`, `-inf`.
    pub fn short(&self) -> String {
        match self {
            ExtDim::NegInfinity => "-inf".into(),
            ExtDim::Finite { n } => n.to_string(),
            ExtDim::Infinite { .. } => "inf".into(),
            ExtDim::AtLeast { cap } => format!(">={cap}"),
        }
    }

    /// Partial order on determined values.
    pub fn compare(&self, other: &ExtDim) -> Option<Ordering> {
        match self.bounds().le(other.bounds()) {
            Truth::True if self.bounds() == other.bounds() => Some(Ordering::Equal),
            Truth::True => Some(Ordering::Less),
            Truth::False => Some(Ordering::Greater),
            Truth::Unknown => None,
        }
    }
}

/// Parameters for syzygy iteration.
#[derive(Clone, Copy, Debug)]
pub struct DimOptions {
    pub cap: usize,
    pub seed: u64,
    pub budget: usize,
    /// Finish as soon as a syzygy is semisimple, reading the projective
    /// dimensions of its simple summands off the path-syzygy graph.
    pub path_shortcut: bool,
}

impl DimOptions {
    pub fn new(cap: usize) -> Self {
        assert!(cap >= 1, "cap must be at least 1");
        DimOptions {
            cap,
            seed: 0,
            budget: DEFAULT_DIM_BUDGET,
            path_shortcut: true,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    /// Pure syzygy iteration without the path-graph shortcut.
    pub fn iterative(mut self) -> Self {
        self.path_shortcut = false;
        self
    }
}

impl Default for DimOptions {
    fn default() -> Self {
        DimOptions::new(DEFAULT_CAP)
    }
}

/// SplitMix64 finalizer, used to derive independent per-call seeds.
pub fn mix_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ b.wrapping_mul(0xC2B2_AE3D_27D4_EB4F);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
enum NodeDim {
    Finite(usize),
    /// basis indices forming a directed cycle
    Infinite(Arc<Vec<usize>>),
}

/// Directed graph on normal paths: `p -> q` for each minimal nonzero path
/// `q` with `p q = 0`. Node ids are basis indices.
#[derive(Clone, Debug)]
pub struct PathGraph {
    edges: Vec<Vec<usize>>,
    dims: Vec<NodeDim>,
    labels: Vec<String>,
    simple_arrows: Vec<Vec<usize>>,
}

/// Builds the path-syzygy graph of a monomial algebra.
pub fn path_syzygy_graph(a: &Algebra) -> PathGraph {
    let basis = a.basis();
    let mut edges = vec![Vec::new(); basis.len()];
    for (p, path) in basis.iter().enumerate() {
        if path.is_trivial() {
            continue;
        }
        for &q in a.paths_from(path.end()) {
            let qp = &basis[q];
            if qp.is_trivial() || a.multiply(p, q).is_some() {
                continue;
            }
            // minimal: every proper nonempty prefix of q still multiplies
            let minimal = (1..qp.len()).all(|l| {
                let prefix = crate::algebra::Path::from_arrows(a.quiver(), qp.arrows()[..l].to_vec()).unwrap();
                let pi = a.index_of(&prefix).expect("prefix of a normal path is normal");
                a.multiply(p, pi).is_some()
            });
            if minimal {
                edges[p].push(q);
            }
        }
    }

    #[derive(Clone)]
    enum State {
        New,
        Open(usize),
        Done(NodeDim),
    }
    fn visit(v: usize, edges: &[Vec<usize>], state: &mut [State], stack: &mut Vec<usize>) -> NodeDim {
        match &state[v] {
            State::Done(d) => return d.clone(),
            State::Open(pos) => return NodeDim::Infinite(Arc::new(stack[*pos..].to_vec())),
            State::New => {}
        }
        state[v] = State::Open(stack.len());
        stack.push(v);
        let mut result = NodeDim::Finite(0);
        for &w in &edges[v] {
            let d = visit(w, edges, state, stack);
            result = match (result, d) {
                (NodeDim::Infinite(c), _) => NodeDim::Infinite(c),
                (_, NodeDim::Infinite(c)) => NodeDim::Infinite(c),
                (NodeDim::Finite(x), NodeDim::Finite(y)) => NodeDim::Finite(x.max(y + 1)),
            };
        }
        stack.pop();
        state[v] = State::Done(result.clone());
        result
    }

    let mut state = vec![State::New; basis.len()];
    let mut stack = Vec::new();
    let dims = (0..basis.len())
        .map(|v| visit(v, &edges, &mut state, &mut stack))
        .collect();
    let labels = basis.iter().map(|p| a.path_label(p)).collect();
    let simple_arrows = (0..a.vertex_count())
        .map(|v| {
            a.radical_layers()
                .get(1)
                .map(|layer| layer.iter().copied().filter(|&b| basis[b].start() == v).collect())
                .unwrap_or_default()
        })
        .collect();
    PathGraph {
        edges,
        dims,
        labels,
        simple_arrows,
    }
}

impl PathGraph {
    /// Cached graph of `a`.
    pub fn of(a: &Algebra) -> &PathGraph {
        a.path_graph.get_or_init(|| path_syzygy_graph(a))
    }

    pub fn node_count(&self) -> usize {
        self.edges.len()
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.edges[node]
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    fn to_ext(&self, d: &NodeDim, shift: usize) -> ExtDim {
        match d {
            NodeDim::Finite(n) => ExtDim::finite(n + shift),
            NodeDim::Infinite(cycle) => ExtDim::Infinite {
                certificate: Certificate::PathCycle {
                    cycle: cycle.iter().map(|&v| self.labels[v].clone()).collect(),
                    via: None,
                },
            },
        }
    }

    /// Projective dimension of the path module `pA` (node = basis index of `p`).
    pub fn path_module_pd(&self, node: usize) -> ExtDim {
        self.to_ext(&self.dims[node], 0)
    }

    /// `pd(S_v)`: zero when no arrow leaves `v`, else one more than the
    /// largest `pd(aA)` over the arrows `a` leaving `v`.
    pub fn simple_pd(&self, v: usize) -> ExtDim {
        let arrows = &self.simple_arrows[v];
        if arrows.is_empty() {
            return ExtDim::finite(0);
        }
        let mut best = 0;
        for &b in arrows {
            match &self.dims[b] {
                NodeDim::Finite(n) => best = best.max(*n),
                inf @ NodeDim::Infinite(_) => return self.to_ext(inf, 0),
            }
        }
        ExtDim::finite(best + 1)
    }

    /// Maximum of `pd(S_v)` over all vertices.
    pub fn global_dimension(&self) -> ExtDim {
        let pds: Vec<ExtDim> = (0..self.simple_arrows.len()).map(|v| self.simple_pd(v)).collect();
        ExtDim::max_of(&pds)
    }
}

/// Global dimension read off the path-syzygy graph. Exact for monomial
/// algebras.
pub fn global_dimension(a: &Algebra) -> ExtDim {
    PathGraph::of(a).global_dimension()
}

/// `Omega(M)`, the kernel of the projective cover.
pub fn syzygy(m: &Representation) -> Result<Representation, ModuleError> {
    let cover = projective_cover(m)?;
    Ok(cover.cover.kernel().0)
}

/// One step `P_n -> P_(n-1)` of a minimal projective resolution (for
/// `n = 0` the augmentation `P_0 -> M`).
#[derive(Clone, Debug)]
pub struct ResolutionTerm {
    pub multiplicities: Vec<usize>,
    pub differential: ModuleMap,
}

#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Representation,
    pub terms: Vec<ResolutionTerm>,
    /// The last computed syzygy was zero: the resolution is finished.
    pub complete: bool,
}

/// Computes at most `max_terms` terms of the minimal projective resolution,
/// stopping early once a syzygy exceeds `budget` in total dimension.
pub fn minimal_resolution(m: &Representation, max_terms: usize, budget: usize) -> Resolution {
    let mut terms: Vec<ResolutionTerm> = Vec::new();
    if m.is_zero() {
        return Resolution {
            module: m.clone(),
            terms,
            complete: true,
        };
    }
    let mut current = m.clone();
    // inclusion of the current syzygy into the previous projective term
    let mut inclusion: Option<ModuleMap> = None;
    let mut complete = false;
    while terms.len() < max_terms {
        let cover = projective_cover(&current).expect("current syzygy is nonzero");
        let differential = match &inclusion {
            Some(inc) => cover.cover.then(inc),
            None => cover.cover.clone(),
        };
        terms.push(ResolutionTerm {
            multiplicities: cover.multiplicities.clone(),
            differential,
        });
        let (kernel, inc) = cover.cover.kernel();
        if kernel.is_zero() {
            complete = true;
            break;
        }
        if kernel.total_dim() > budget {
            break;
        }
        current = kernel;
        inclusion = Some(inc);
    }
    Resolution {
        module: m.clone(),
        terms,
        complete,
    }
}

impl Resolution {
    /// Exactness at every computed step and minimality (each differential
    /// lands in the radical of its codomain).
    pub fn verify(&self) -> bool {
        let Some(first) = self.terms.first() else {
            return self.module.is_zero();
        };
        if !first.differential.is_surjective() {
            return false;
        }
        for w in self.terms.windows(2) {
            let (prev, next) = (&w[0].differential, &w[1].differential);
            if !next.then(prev).is_zero() {
                return false;
            }
            let prev_rank = prev.rank_dims();
            let next_rank = next.rank_dims();
            let codomain = next.target();
            for v in 0..codomain.dims().len() {
                if next_rank[v] + prev_rank[v] != codomain.dims()[v] {
                    return false;
                }
            }
            // minimality
            let through_rad = next
                .components()
                .iter()
                .enumerate()
                .all(|(v, c)| image_in_radical(codomain, v, c));
            if !through_rad {
                return false;
            }
        }
        if self.complete {
            let last = &self.terms.last().unwrap().differential;
            if !last.is_injective() {
                return false;
            }
        }
        true
    }

    /// Betti numbers: `betti()[n][i]` is the multiplicity of `P_i` in the
    /// `n`-th term.
    pub fn betti(&self) -> Vec<Vec<usize>> {
        self.terms.iter().map(|t| t.multiplicities.clone()).collect()
    }
}

fn image_in_radical(m: &Representation, v: usize, rows: &crate::linalg::Matrix) -> bool {
    let rad = m.radical_space_basis(v);
    let r = rad.rows();
    rad.vstack(rows).rank() == r
}

/// `dim Ext^n(M, S_i)`, the multiplicity of `P_i` in the `n`-th term of the
/// minimal projective resolution. `None` when the resolution stops before
/// step `n` (cap or budget).
pub fn ext_dim(n: usize, m: &Representation, i: usize, opts: &DimOptions) -> Option<usize> {
    if n > opts.cap {
        return None;
    }
    let res = minimal_resolution(m, n + 1, opts.budget);
    if let Some(t) = res.terms.get(n) {
        Some(t.multiplicities[i])
    } else if res.complete {
        Some(0)
    } else {
        None
    }
}

/// Projective dimension by syzygy iteration.
pub fn projective_dimension(m: &Representation, opts: &DimOptions) -> ExtDim {
    if m.is_zero() {
        return ExtDim::NegInfinity;
    }
    let mut history: Vec<Representation> = vec![m.clone()];
    let mut current = m.clone();
    for step in 0..=opts.cap {
        if opts.path_shortcut && current.is_semisimple() {
            return semisimple_shortcut(&current, step);
        }
        if current.is_projective() {
            return ExtDim::finite(step);
        }
        if step == opts.cap {
            break;
        }
        let next = syzygy(&current).expect("non-projective module has a nonzero syzygy");
        if let Some(first) = repeated_semisimple_support(&history, &next) {
            return ExtDim::Infinite {
                certificate: Certificate::SupportPeriodicity {
                    first,
                    second: step + 1,
                    support: support(&next).iter().map(|v| v + 1).collect(),
                },
            };
        }
        if next.total_dim() > opts.budget {
            return ExtDim::at_least(step + 1);
        }
        for (k, prev) in history.iter().enumerate() {
            if prev.dims() != next.dims() {
                continue;
            }
            let seed = mix_seed(opts.seed, k as u64, step as u64 + 1);
            if let Ok(IsoOutcome::Isomorphic(w)) = is_isomorphic(prev, &next, seed) {
                return ExtDim::Infinite {
                    certificate: Certificate::SyzygyPeriodicity {
                        first: k,
                        second: step + 1,
                        witness: w.components().iter().map(|c| c.row_vecs()).collect(),
                    },
                };
            }
        }
        history.push(next.clone());
        current = next;
    }
    ExtDim::at_least(opts.cap)
}

fn support(m: &Representation) -> Vec<usize> {
    (0..m.dims().len()).filter(|&v| m.dims()[v] > 0).collect()
}

/// Index of an earlier semisimple syzygy with the same support as `next`.
fn repeated_semisimple_support(history: &[Representation], next: &Representation) -> Option<usize> {
    if !next.is_semisimple() {
        return None;
    }
    let target = support(next);
    history
        .iter()
        .position(|prev| prev.is_semisimple() && support(prev) == target)
}

/// `pd(M) = step + max pd(S_v)` over the simple summands of the semisimple
/// syzygy `Omega^step(M)`.
fn semisimple_shortcut(m: &Representation, step: usize) -> ExtDim {
    let graph = PathGraph::of(m.algebra());
    let mut best = 0;
    for (v, &d) in m.dims().iter().enumerate() {
        if d == 0 {
            continue;
        }
        match graph.simple_pd(v) {
            ExtDim::Finite { n } => best = best.max(n),
            ExtDim::Infinite {
                certificate: Certificate::PathCycle { cycle, .. },
            } => {
                return ExtDim::Infinite {
                    certificate: Certificate::PathCycle {
                        cycle,
                        via: Some(SimpleSummand {
                            syzygy: step,
                            vertex: v + 1,
                        }),
                    },
                };
            }
            other => unreachable!("path graph yields finite or cycle-certified values, got {other:?}"),
        }
    }
    ExtDim::finite(step + best)
}

/// `id_A(M) = pd_(A^op)(D M)`.
pub fn injective_dimension(m: &Representation, opts: &DimOptions) -> ExtDim {
    projective_dimension(&dual(m), opts)
}

/// Whether the injective envelope of `M` is an isomorphism.
pub fn is_injective_module(m: &Representation) -> Result<bool, ModuleError> {
    Ok(injective_envelope(m)?.embedding.is_isomorphism())
}

/// `Ext^1(S_j, M) = 0` for every `j`, computed as the vanishing of the
/// first Betti numbers of `D(M)` over the opposite algebra.
pub fn is_injective_by_ext(m: &Representation) -> Result<bool, ModuleError> {
    if m.is_zero() {
        return Err(ModuleError::ZeroModule);
    }
    let opts = DimOptions::new(1).with_budget(usize::MAX);
    let d = dual(m);
    Ok((0..m.dims().len()).all(|j| ext_dim(1, &d, j, &opts) == Some(0)))
}

pub fn is_local(a: &Algebra) -> bool {
    a.vertex_count() == 1
}

/// Every indecomposable projective is injective.
pub fn is_selfinjective(a: &Arc<Algebra>) -> bool {
    (0..a.vertex_count()).all(|v| {
        let p = projective(a, v).expect("vertex in range");
        is_injective_module(&p).expect("projectives are nonzero")
    })
}

/// Every indecomposable projective and injective is uniserial.
pub fn is_nakayama(a: &Arc<Algebra>) -> bool {
    (0..a.vertex_count()).all(|v| {
        projective(a, v).expect("vertex in range").is_uniserial()
            && injective(a, v).expect("vertex in range").is_uniserial()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GorensteinVerdict {
    Gorenstein,
    NotGorenstein,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gorenstein {
    /// injective dimension of `A_A`
    pub right: ExtDim,
    /// injective dimension of `A^op` as a right `A^op`-module
    pub left: ExtDim,
    pub verdict: GorensteinVerdict,
}

pub fn gorenstein_dimension(a: &Arc<Algebra>, opts: &DimOptions) -> Gorenstein {
    let right = injective_dimension(&regular_module(a), opts);
    let left = injective_dimension(&regular_module(&a.opposite()), opts);
    let verdict = match (&right, &left) {
        (ExtDim::AtLeast { .. }, _) | (_, ExtDim::AtLeast { .. }) => GorensteinVerdict::Undetermined,
        (ExtDim::Finite { n }, ExtDim::Finite { n: m }) if n == m => GorensteinVerdict::Gorenstein,
        _ => GorensteinVerdict::NotGorenstein,
    };
    Gorenstein { right, left, verdict }
}

/// `(pd, id)` of every simple module.
pub fn simple_dimensions(a: &Arc<Algebra>, opts: &DimOptions) -> (Vec<ExtDim>, Vec<ExtDim>) {
    (0..a.vertex_count())
        .map(|v| {
            let s = simple(a, v).expect("vertex in range");
            (projective_dimension(&s, opts), injective_dimension(&s, opts))
        })
        .unzip()
}

/// Radical powers `J^k` for `k = 0 ..= loewy_length`.
pub fn radical_filtration(a: &Arc<Algebra>) -> Vec<Representation> {
    (0..=a.loewy_length()).map(|k| radical_power_module(a, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;
    use crate::linalg::Field;
    use crate::modules::*;

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

    fn kupisch(shape: KupischShape, c: &[usize]) -> Arc<Algebra> {
        let k = KupischSeries::new(shape, c.to_vec()).unwrap();
        nakayama_from_kupisch(f(), &k).unwrap()
    }

    fn opts() -> DimOptions {
        DimOptions::new(DEFAULT_CAP)
    }

    #[test]
    fn ext_dim_order_is_three_valued() {
        let two = ExtDim::finite(2).bounds();
        let inf = ExtDim::Infinite {
            certificate: Certificate::PathCycle { cycle: vec![], via: None },
        }
        .bounds();
        let at5 = ExtDim::at_least(5).bounds();
        assert_eq!(ExtDim::NegInfinity.bounds().le(two), Truth::True);
        assert_eq!(two.le(inf), Truth::True);
        assert_eq!(two.le(at5), Truth::True);
        assert_eq!(at5.le(two), Truth::False);
        assert_eq!(at5.equals(ExtDim::finite(7).bounds()), Truth::Unknown);
        assert_eq!(at5.equals(inf), Truth::Unknown);
        assert_eq!(at5.le(inf), Truth::True);
        assert_eq!(ExtDim::finite(0).bounds().minus_one().le(ExtDim::finite(0).bounds()), Truth::True);
        assert_eq!(ExtDim::NegInfinity.bounds().minus_one(), ExtDim::NegInfinity.bounds());
    }

    #[test]
    fn ext_dim_max() {
        let vals = [ExtDim::finite(3), ExtDim::at_least(2), ExtDim::NegInfinity];
        assert_eq!(ExtDim::max_of(&vals), ExtDim::at_least(3));
        let vals = [ExtDim::finite(1), ExtDim::finite(4)];
        assert_eq!(ExtDim::max_of(&vals), ExtDim::finite(4));
        assert_eq!(ExtDim::max_of(&[]), ExtDim::NegInfinity);
    }

    #[test]
    fn syzygy_examples() {
        let a = kupisch(KupischShape::Linear, &[2, 2, 1]);
        let om = syzygy(&simple(&a, 0).unwrap()).unwrap();
        assert!(is_isomorphic(&om, &simple(&a, 1).unwrap(), 1).unwrap().is_isomorphic());

        let l = truncated_loop(2);
        let s = simple(&l, 0).unwrap();
        assert!(is_isomorphic(&syzygy(&s).unwrap(), &s, 1).unwrap().is_isomorphic());

        for v in 0..3 {
            assert!(syzygy(&projective(&a, v).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn pd_examples() {
        let a = kupisch(KupischShape::Linear, &[2, 2, 1]);
        let s1 = simple(&a, 0).unwrap();
        assert_eq!(projective_dimension(&s1, &opts()), ExtDim::finite(2));
        assert_eq!(projective_dimension(&s1, &opts().iterative()), ExtDim::finite(2));
        assert_eq!(projective_dimension(&regular_module(&a), &opts()), ExtDim::finite(0));

        let l = truncated_loop(2);
        let s = simple(&l, 0).unwrap();
        match projective_dimension(&s, &opts().iterative()) {
            ExtDim::Infinite {
                certificate: Certificate::SupportPeriodicity { first, second, support },
            } => assert_eq!((first, second, support), (0, 1, vec![1])),
            other => panic!("expected periodicity, got {other:?}"),
        }
        assert!(projective_dimension(&s, &opts()).is_infinite());

        // over k[x]/(x^3): xA -> S -> xA
        let l3 = truncated_loop(3);
        let xa = radical_power_module(&l3, 1);
        match projective_dimension(&xa, &opts().iterative()) {
            ExtDim::Infinite {
                certificate: Certificate::SyzygyPeriodicity { first, second, witness },
            } => {
                assert_eq!((first, second), (0, 2));
                assert_eq!(witness.len(), 1);
            }
            other => panic!("expected periodicity, got {other:?}"),
        }
    }

    #[test]
    fn id_examples() {
        let a = kupisch(KupischShape::Linear, &[2, 2, 1]);
        let j = radical_power_module(&a, 1);
        assert_eq!(injective_dimension(&j, &opts()), ExtDim::finite(2));
        assert_eq!(injective_dimension(&j, &opts().iterative()), ExtDim::finite(2));
        for v in 0..3 {
            assert_eq!(injective_dimension(&injective(&a, v).unwrap(), &opts()), ExtDim::finite(0));
        }
        let l = truncated_loop(2);
        assert!(injective_dimension(&radical_power_module(&l, 1), &opts()).is_infinite());
    }

    #[test]
    fn path_graph_examples() {
        let l = truncated_loop(2);
        let g = path_syzygy_graph(&l);
        // node 1 is x
        assert_eq!(g.successors(1), &[1]);
        assert!(g.path_module_pd(1).is_infinite());

        let a = kupisch(KupischShape::Linear, &[2, 2, 1]);
        let g = path_syzygy_graph(&a);
        let node = |label: &str| (0..g.node_count()).find(|&n| g.label(n) == label).unwrap();
        assert_eq!(g.successors(node("a")), &[node("b")]);
        assert!(g.successors(node("b")).is_empty());
        assert_eq!(g.simple_pd(0), ExtDim::finite(2));

        // hereditary: no edges from arrows
        let q = Quiver::from_edges(3, &[("a", 0, 1), ("b", 1, 2), ("c", 0, 2)]).unwrap();
        let h = build_monomial_algebra(f(), q, vec![], 64).unwrap();
        let g = path_syzygy_graph(&h);
        assert!((0..g.node_count()).all(|n| g.successors(n).is_empty()));
        assert_eq!(g.global_dimension(), ExtDim::finite(1));
    }

    #[test]
    fn path_module_pd_matches_iteration() {
        let a = kupisch(KupischShape::Cyclic, &[3, 4, 3]);
        let g = PathGraph::of(&a);
        for (b, p) in a.basis().iter().enumerate() {
            let m = path_module(&a, p);
            let it = projective_dimension(&m, &opts().iterative());
            assert!(g.path_module_pd(b).same_value(&it), "{} {:?} vs {:?}", g.label(b), g.path_module_pd(b), it);
        }
    }

    #[test]
    fn gldim_examples() {
        assert_eq!(global_dimension(&a2()), ExtDim::finite(1));
        assert!(global_dimension(&truncated_loop(2)).is_infinite());
        assert_eq!(global_dimension(&kupisch(KupischShape::Linear, &[2, 2, 1])), ExtDim::finite(2));
    }

    #[test]
    fn ext_examples() {
        let a = a2();
        let o = opts();
        let s1 = simple(&a, 0).unwrap();
        let s2 = simple(&a, 1).unwrap();
        assert_eq!(ext_dim(1, &s1, 1, &o), Some(1));
        assert_eq!(ext_dim(1, &s2, 0, &o), Some(0));
        for v in 0..2 {
            assert_eq!(ext_dim(0, &simple(&a, v).unwrap(), v, &o), Some(1));
        }
        assert_eq!(ext_dim(5, &s1, 0, &o), Some(0));
        let l = truncated_loop(2);
        let tight = DimOptions::new(2);
        assert_eq!(ext_dim(3, &simple(&l, 0).unwrap(), 0, &tight), None);
    }

    #[test]
    fn resolution_is_exact_and_minimal() {
        for a in [
            kupisch(KupischShape::Linear, &[3, 3, 2, 1]),
            kupisch(KupischShape::Cyclic, &[2, 3]),
            truncated_loop(3),
        ] {
            for m in [regular_module(&a), radical_power_module(&a, 1), dual(&radical_power_module(&a.opposite(), 1))] {
                let res = minimal_resolution(&m, 6, 512);
                assert!(res.verify());
            }
        }
    }

    #[test]
    fn injectivity_examples() {
        let a = a2();
        assert!(is_injective_module(&simple(&a, 0).unwrap()).unwrap());
        assert!(!is_injective_module(&simple(&a, 1).unwrap()).unwrap());
        assert!(is_injective_by_ext(&simple(&a, 0).unwrap()).unwrap());
        assert!(!is_injective_by_ext(&simple(&a, 1).unwrap()).unwrap());
        let c = kupisch(KupischShape::Cyclic, &[2, 2]);
        assert!(is_injective_module(&regular_module(&c)).unwrap());
        assert!(is_injective_module(&Representation::zero(&a)).is_err());
    }

    #[test]
    fn predicates() {
        let l = truncated_loop(2);
        assert!(is_local(&l) && is_selfinjective(&l) && is_nakayama(&l));
        let k = kupisch(KupischShape::Linear, &[2, 2, 1]);
        assert!(!is_local(&k) && !is_selfinjective(&k) && is_nakayama(&k));
        let q = Quiver::from_edges(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap();
        let kr = radical_square_zero(f(), q).unwrap();
        assert!(!is_nakayama(&kr));
        assert!(is_selfinjective(&kupisch(KupischShape::Cyclic, &[2, 2])));
    }

    #[test]
    fn gorenstein_examples() {
        let g = gorenstein_dimension(&kupisch(KupischShape::Linear, &[2, 2, 1]), &opts());
        assert_eq!((g.right, g.left, g.verdict), (ExtDim::finite(2), ExtDim::finite(2), GorensteinVerdict::Gorenstein));
        for power in [2, 3] {
            let g = gorenstein_dimension(&truncated_loop(power), &opts());
            assert_eq!((g.right, g.left, g.verdict), (ExtDim::finite(0), ExtDim::finite(0), GorensteinVerdict::Gorenstein));
        }
    }

    #[test]
    fn ext_dim_serialization() {
        let v = ExtDim::finite(2);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"kind":"finite","n":2}"#);
        assert_eq!(serde_json::to_string(&ExtDim::at_least(64)).unwrap(), r#"{"kind":"atleast","cap":64}"#);
        assert_eq!(serde_json::to_string(&ExtDim::NegInfinity).unwrap(), r#"{"kind":"neginf"}"#);
        let inf = ExtDim::Infinite {
            certificate: Certificate::SyzygyPeriodicity {
                first: 0,
                second: 1,
                witness: vec![vec![vec![1]]],
            },
        };
        let s = serde_json::to_string(&inf).unwrap();
        assert!(s.starts_with(r#"{"kind":"infinite","certificate":{"type":"syzygy_periodicity""#));
        assert_eq!(serde_json::from_str::<ExtDim>(&s).unwrap(), inf);
    }
}
