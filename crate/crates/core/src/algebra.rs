//! Basic connected bound quiver algebras `kQ/I` with monomial `I`.
//!
//! Vertices are 0-based indices in the Rust API; text formats and labels
//! use 1-based numbering. Paths compose left to right: `a.b` means "first
//! `a`, then `b`", so `e_i A` is spanned by the normal paths starting at `i`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::homology::PathGraph;
use crate::linalg::Field;

pub const DEFAULT_MAX_PATH_LEN: usize = 64;
pub const DEFAULT_PRIME: u64 = 101;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("normal paths of length {0} exist; the algebra is infinite dimensional")]
    InfiniteDimensional(usize),
    #[error("the quiver is not connected")]
    NotConnected,
    #[error("relation {index}: {reason}")]
    BadRelation { index: usize, reason: String },
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("semisimple algebra: at least one arrow is required")]
    NonSemisimpleRequired,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        if vertex_count == 0 {
            return Err(AlgebraError::InvalidQuiver("no vertices".into()));
        }
        let mut names = HashSet::new();
        for a in &arrows {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(AlgebraError::InvalidQuiver(format!(
                    "arrow {} has an endpoint outside 1..={}",
                    a.name, vertex_count
                )));
            }
            if !names.insert(a.name.as_str()) {
                return Err(AlgebraError::InvalidQuiver(format!(
                    "duplicate arrow name {}",
                    a.name
                )));
            }
        }
        Ok(Quiver {
            vertex_count,
            arrows,
        })
    }

    /// Convenience constructor from `(name, source, target)` triples with
    /// 0-based vertices.
    pub fn from_edges(vertex_count: usize, edges: &[(&str, usize, usize)]) -> Result<Self, AlgebraError> {
        let arrows = edges
            .iter()
            .map(|&(name, source, target)| Arrow {
                name: name.to_string(),
                source,
                target,
            })
            .collect();
        Self::new(vertex_count, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Connected as an undirected graph.
    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in &self.arrows {
            let (r1, r2) = (find(&mut parent, a.source), find(&mut parent, a.target));
            parent[r1] = r2;
        }
        let root = find(&mut parent, 0);
        (0..self.vertex_count).all(|v| find(&mut parent, v) == root)
    }

    /// The same vertices with every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// `counts[i][j]` = number of arrows `i -> j`.
    pub fn adjacency_counts(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.vertex_count]; self.vertex_count];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&id| self.arrows[id].target == v)
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&id| self.arrows[id].source == v)
    }
}

/// A path in the quiver; the empty arrow sequence is the idempotent `e_start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    /// Validates composability against `quiver`.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Option<Self> {
        let first = *arrows.first()?;
        if arrows.iter().any(|&a| a >= quiver.arrows.len()) {
            return None;
        }
        for w in arrows.windows(2) {
            if quiver.arrow(w[0]).target != quiver.arrow(w[1]).source {
                return None;
            }
        }
        Some(Path {
            start: quiver.arrow(first).source,
            end: quiver.arrow(*arrows.last().unwrap()).target,
            arrows,
        })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    fn extended(&self, arrow: usize, target: usize) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path {
            start: self.start,
            end: target,
            arrows,
        }
    }

    fn reversed(&self) -> Path {
        Path {
            start: self.end,
            end: self.start,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    fn sort_key(&self) -> (usize, &[usize], usize) {
        (self.arrows.len(), &self.arrows, self.start)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KupischShape {
    Linear,
    Cyclic,
}

/// Composition lengths `c_i` of the indecomposable projectives of a
/// Nakayama algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KupischSeries {
    shape: KupischShape,
    lengths: Vec<usize>,
}

impl KupischSeries {
    pub fn new(shape: KupischShape, lengths: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = lengths.len();
        let bad = |msg: String| Err(AlgebraError::InvalidKupisch(msg));
        if n == 0 {
            return bad("empty series".into());
        }
        match shape {
            KupischShape::Linear => {
                if n == 1 {
                    return bad("a linear series on one vertex is semisimple".into());
                }
                if lengths[n - 1] != 1 {
                    return bad(format!("last length must be 1, got {}", lengths[n - 1]));
                }
                for i in 0..n - 1 {
                    if lengths[i] < 2 {
                        return bad(format!("c_{} = {} < 2", i + 1, lengths[i]));
                    }
                    if lengths[i] > lengths[i + 1] + 1 {
                        return bad(format!("c_{} > c_{} + 1", i + 1, i + 2));
                    }
                }
            }
            KupischShape::Cyclic => {
                for i in 0..n {
                    if lengths[i] < 2 {
                        return bad(format!("c_{} = {} < 2", i + 1, lengths[i]));
                    }
                    if lengths[i] > lengths[(i + 1) % n] + 1 {
                        return bad(format!("c_{} > c_{} + 1", i + 1, (i + 1) % n + 1));
                    }
                }
            }
        }
        Ok(KupischSeries { shape, lengths })
    }

    pub fn shape(&self) -> KupischShape {
        self.shape
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = match self.shape {
            KupischShape::Linear => "linear",
            KupischShape::Cyclic => "cyclic",
        };
        let body: Vec<String> = self.lengths.iter().map(|c| c.to_string()).collect();
        write!(f, "{shape}[{}]", body.join(","))
    }
}

/// A finite-dimensional monomial bound quiver algebra.
pub struct Algebra {
    field: Field,
    quiver: Quiver,
    relations: Vec<Path>,
    relation_set: HashSet<Vec<usize>>,
    relation_lengths: Vec<usize>,
    basis: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
    loewy_length: usize,
    layers: Vec<Vec<usize>>,
    from_vertex: Vec<Vec<usize>>,
    to_vertex: Vec<Vec<usize>>,
    opposite: OnceLock<Arc<Algebra>>,
    pub(crate) path_graph: OnceLock<PathGraph>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| self.path_label(r)).collect();
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("vertices", &self.quiver.vertex_count)
            .field("arrows", &self.quiver.arrows)
            .field("relations", &rels)
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.relation_set == other.relation_set
    }
}

impl Eq for Algebra {}

/// Builds `kQ/I` for the monomial ideal generated by `relations`.
pub fn build_monomial_algebra(
    field: Field,
    quiver: Quiver,
    relations: Vec<Vec<usize>>,
    max_path_len: usize,
) -> Result<Arc<Algebra>, AlgebraError> {
    let mut rel_paths = Vec::with_capacity(relations.len());
    for (index, word) in relations.into_iter().enumerate() {
        if word.len() < 2 {
            return Err(AlgebraError::BadRelation {
                index,
                reason: format!("length {} < 2", word.len()),
            });
        }
        let path = Path::from_arrows(&quiver, word).ok_or_else(|| AlgebraError::BadRelation {
            index,
            reason: "arrows are not composable".into(),
        })?;
        rel_paths.push(path);
    }
    if !quiver.is_connected() {
        return Err(AlgebraError::NotConnected);
    }
    Algebra::assemble(field, quiver, rel_paths, max_path_len).map(Arc::new)
}

/// The Nakayama algebra with the given Kupisch series.
pub fn nakayama_from_kupisch(field: Field, series: &KupischSeries) -> Result<Arc<Algebra>, AlgebraError> {
    // re-validate: the fields are private but the series may be hand-built in tests
    let series = KupischSeries::new(series.shape, series.lengths.clone())?;
    let n = series.lengths.len();
    let name = |i: usize| -> String {
        if n == 1 {
            "x".to_string()
        } else if n <= 26 {
            ((b'a' + i as u8) as char).to_string()
        } else {
            format!("a{}", i + 1)
        }
    };
    let arrow_count = match series.shape {
        KupischShape::Linear => n - 1,
        KupischShape::Cyclic => n,
    };
    let arrows = (0..arrow_count)
        .map(|i| Arrow {
            name: name(i),
            source: i,
            target: (i + 1) % n,
        })
        .collect();
    let quiver = Quiver::new(n, arrows)?;
    let mut relations = Vec::new();
    for (i, &c) in series.lengths.iter().enumerate() {
        let exists = match series.shape {
            KupischShape::Linear => i + c < n,
            KupischShape::Cyclic => true,
        };
        // the path of length c_i from i is a minimal relation unless its
        // tail from i+1 already vanishes
        let minimal = series.lengths[(i + 1) % n] >= c;
        if exists && minimal {
            // arrow i leaves vertex i
            relations.push((0..c).map(|k| (i + k) % n).collect());
        }
    }
    build_monomial_algebra(field, quiver, relations, DEFAULT_MAX_PATH_LEN)
}

/// `kQ/J^2`: every composable pair of arrows is a relation.
pub fn radical_square_zero(field: Field, quiver: Quiver) -> Result<Arc<Algebra>, AlgebraError> {
    if quiver.arrows.is_empty() {
        return Err(AlgebraError::NonSemisimpleRequired);
    }
    let mut relations = Vec::new();
    for (i, a) in quiver.arrows.iter().enumerate() {
        for (j, b) in quiver.arrows.iter().enumerate() {
            if a.target == b.source {
                relations.push(vec![i, j]);
            }
        }
    }
    build_monomial_algebra(field, quiver, relations, DEFAULT_MAX_PATH_LEN)
}

impl Algebra {
    fn assemble(
        field: Field,
        quiver: Quiver,
        relations: Vec<Path>,
        max_path_len: usize,
    ) -> Result<Algebra, AlgebraError> {
        let relation_set: HashSet<Vec<usize>> = relations.iter().map(|r| r.arrows.clone()).collect();
        let mut relation_lengths: Vec<usize> = relation_set.iter().map(|r| r.len()).collect();
        relation_lengths.sort_unstable();
        relation_lengths.dedup();

        let n = quiver.vertex_count;
        let suffix_is_relation = |word: &[usize]| {
            relation_lengths
                .iter()
                .take_while(|&&l| l <= word.len())
                .any(|&l| relation_set.contains(&word[word.len() - l..]))
        };

        let mut layers_paths: Vec<Vec<Path>> = vec![(0..n).map(Path::trivial).collect()];
        loop {
            let len = layers_paths.len();
            let prev = layers_paths.last().unwrap();
            let mut next = Vec::new();
            for p in prev {
                for (id, a) in quiver.arrows.iter().enumerate() {
                    if a.source != p.end {
                        continue;
                    }
                    let q = p.extended(id, a.target);
                    if !suffix_is_relation(&q.arrows) {
                        next.push(q);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            if len >= max_path_len {
                return Err(AlgebraError::InfiniteDimensional(len));
            }
            next.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
            layers_paths.push(next);
        }

        let loewy_length = layers_paths.len();
        let mut basis = Vec::new();
        let mut layers = Vec::with_capacity(loewy_length);
        for layer in layers_paths {
            let start = basis.len();
            basis.extend(layer);
            layers.push((start..basis.len()).collect());
        }
        let mut index = HashMap::with_capacity(basis.len());
        let mut from_vertex = vec![Vec::new(); n];
        let mut to_vertex = vec![Vec::new(); n];
        for (i, p) in basis.iter().enumerate() {
            index.insert((p.start, p.arrows.clone()), i);
            from_vertex[p.start].push(i);
            to_vertex[p.end].push(i);
        }
        Ok(Algebra {
            field,
            quiver,
            relations,
            relation_set,
            relation_lengths,
            basis,
            index,
            loewy_length,
            layers,
            from_vertex,
            to_vertex,
            opposite: OnceLock::new(),
            path_graph: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn relations(&self) -> &[Path] {
        &self.relations
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Smallest `L` with `J^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    /// Basis indices grouped by path length.
    pub fn radical_layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Basis indices of the normal paths starting at `v` (basis of `e_v A`).
    pub fn paths_from(&self, v: usize) -> &[usize] {
        &self.from_vertex[v]
    }

    /// Basis indices of the normal paths ending at `v` (basis of `A e_v`).
    pub fn paths_to(&self, v: usize) -> &[usize] {
        &self.to_vertex[v]
    }

    pub fn is_semisimple(&self) -> bool {
        self.quiver.arrows.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.quiver.is_connected()
    }

    pub fn is_normal(&self, word: &[usize]) -> bool {
        for &l in &self.relation_lengths {
            if l > word.len() {
                break;
            }
            if word.windows(l).any(|w| self.relation_set.contains(w)) {
                return false;
            }
        }
        true
    }

    pub fn index_of(&self, path: &Path) -> Option<usize> {
        self.index.get(&(path.start, path.arrows.clone())).copied()
    }

    /// Product of two basis elements: another basis element or zero.
    pub fn multiply(&self, x: usize, y: usize) -> Option<usize> {
        let (p, q) = (&self.basis[x], &self.basis[y]);
        if p.end != q.start {
            return None;
        }
        if p.is_trivial() {
            return Some(y);
        }
        if q.is_trivial() {
            return Some(x);
        }
        let mut word = p.arrows.clone();
        word.extend_from_slice(&q.arrows);
        self.index.get(&(p.start, word)).copied()
    }

    /// Basis index of `path . arrow`, or `None` when that product is zero.
    pub fn extend_by_arrow(&self, path: usize, arrow: usize) -> Option<usize> {
        let p = &self.basis[path];
        let a = self.quiver.arrow(arrow);
        if p.end != a.source {
            return None;
        }
        let mut word = p.arrows.clone();
        word.push(arrow);
        self.index.get(&(p.start, word)).copied()
    }

    /// `A^op`: arrows reversed, relations reversed word by word. Arrow names
    /// and ids are kept, so `opposite(opposite(A)) == A`.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let quiver = self.quiver.reversed();
                let relations = self.relations.iter().map(Path::reversed).collect();
                let op = Algebra::assemble(self.field.clone(), quiver, relations, self.loewy_length + 1)
                    .expect("opposite of a finite-dimensional algebra is finite dimensional");
                Arc::new(op)
            })
            .clone()
    }

    /// Human-readable path label: `e3` for idempotents, `a.b` otherwise.
    pub fn path_label(&self, p: &Path) -> String {
        if p.is_trivial() {
            return format!("e{}", p.start + 1);
        }
        let names: Vec<&str> = p.arrows.iter().map(|&a| self.quiver.arrow(a).name.as_str()).collect();
        names.join(".")
    }

    /// Number of basis paths from `i` to `j` per length.
    pub fn path_counts(&self, from: usize, to: usize) -> Vec<usize> {
        let mut counts = vec![0; self.loewy_length];
        for &b in &self.from_vertex[from] {
            if self.basis[b].end == to {
                counts[self.basis[b].len()] += 1;
            }
        }
        counts
    }
}

/// The quiver of the algebra: one arrow `i -> j` for each basis element of
/// `e_i J e_j / e_i J^2 e_j`, i.e. each length-one basis path.
pub fn ext_quiver(a: &Algebra) -> Quiver {
    let arrows = a
        .radical_layers()
        .get(1)
        .map(|layer| {
            layer
                .iter()
                .map(|&b| {
                    let p = &a.basis()[b];
                    a.quiver().arrow(p.arrows()[0]).clone()
                })
                .collect()
        })
        .unwrap_or_default();
    Quiver {
        vertex_count: a.vertex_count(),
        arrows,
    }
}
