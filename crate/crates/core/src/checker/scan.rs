//! Enumeration of algebra families and batch evaluation.
//!
//! Algebras are built and checked independently, so batches run on the rayon
//! pool when the `parallel` feature is on. Output order never depends on the
//! execution mode.

use std::collections::BTreeSet;
use std::sync::Arc;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::canonical::{canonical_adjacency, permutations};
use super::{check_algebra, CheckError, CheckOptions, Report};
use crate::algebra::{nakayama_from_kupisch, radical_square_zero, Algebra, Arrow, KupischSeries, KupischShape, Quiver};
use crate::homology::ExtDim;
use crate::linalg::Field;

/// Parallel arrows allowed between two vertices in radical-square-zero scans.
pub const MAX_ARROW_MULTIPLICITY: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    #[cfg_attr(feature = "parallel", default)]
    Parallel,
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
}

/// Runs `f` over `items`, keeping input order.
pub fn run_batch<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Kupisch series on exactly `n` vertices with every `c_i <= max_len`, in
/// lexicographic order. Cyclic series are listed once per rotation class,
/// represented by the lexicographically least rotation.
pub fn kupisch_series(shape: KupischShape, n: usize, max_len: usize) -> Vec<KupischSeries> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    match shape {
        KupischShape::Linear => {
            if n < 2 {
                return out;
            }
            // build from the right: c_n = 1, 2 <= c_i <= c_{i+1} + 1
            let mut acc = vec![1usize];
            fn grow(acc: &mut Vec<usize>, n: usize, max_len: usize, out: &mut Vec<Vec<usize>>) {
                if acc.len() == n {
                    out.push(acc.iter().rev().copied().collect());
                    return;
                }
                let hi = (acc.last().unwrap() + 1).min(max_len);
                for c in 2..=hi {
                    acc.push(c);
                    grow(acc, n, max_len, out);
                    acc.pop();
                }
            }
            let mut raw = Vec::new();
            grow(&mut acc, n, max_len, &mut raw);
            raw.sort();
            out = raw
                .into_iter()
                .map(|c| KupischSeries::new(shape, c).expect("valid by construction"))
                .collect();
        }
        KupischShape::Cyclic => {
            let mut seen = BTreeSet::new();
            let mut c = vec![2usize; n];
            if max_len < 2 {
                return out;
            }
            loop {
                let valid = (0..n).all(|i| c[i] <= c[(i + 1) % n] + 1);
                if valid {
                    let least = (0..n)
                        .map(|r| {
                            let mut v = c.clone();
                            v.rotate_left(r);
                            v
                        })
                        .min()
                        .unwrap();
                    seen.insert(least);
                }
                // odometer over [2, max_len]^n
                let mut k = n;
                loop {
                    if k == 0 {
                        return seen
                            .into_iter()
                            .map(|c| KupischSeries::new(shape, c).expect("valid by construction"))
                            .collect();
                    }
                    k -= 1;
                    if c[k] < max_len {
                        c[k] += 1;
                        break;
                    }
                    c[k] = 2;
                }
            }
        }
    }
    out
}

/// Connected multi-digraphs on exactly `n` vertices with at most `max_mult`
/// arrows between any ordered pair (loops included) and at least one arrow,
/// one per isomorphism class, as canonical adjacency matrices.
pub fn connected_digraphs(n: usize, max_mult: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return Vec::new();
    }
    let cells = n * n;
    let base = max_mult + 1;
    let total = (base as u128).pow(cells as u32);
    assert!(total <= 1 << 32, "digraph enumeration too large");
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for code in 0..total as u64 {
        let mut flat = vec![0usize; cells];
        let mut x = code;
        for cell in flat.iter_mut() {
            *cell = (x % base as u64) as usize;
            x /= base as u64;
        }
        if flat.iter().all(|&c| c == 0) {
            continue;
        }
        // skip codes that are not already canonical; each class is reached
        // from its own canonical representative
        let adj: Vec<Vec<usize>> = flat.chunks(n).map(|r| r.to_vec()).collect();
        if !is_connected(&adj) {
            continue;
        }
        let is_min = perms.iter().all(|p| {
            let mut relabelled = vec![0usize; cells];
            for i in 0..n {
                for j in 0..n {
                    relabelled[p[i] * n + p[j]] = adj[i][j];
                }
            }
            relabelled >= flat
        });
        if is_min {
            classes.insert(flat);
        }
    }
    classes
        .into_iter()
        .map(|flat| flat.chunks(n).map(|r| r.to_vec()).collect())
        .collect()
}

fn is_connected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if !seen[w] && (adj[v][w] > 0 || adj[w][v] > 0) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Quiver with arrows listed row by row; parallel arrows get suffixes.
pub fn quiver_from_adjacency(adj: &[Vec<usize>]) -> Quiver {
    let n = adj.len();
    let mut arrows = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        for (j, &m) in row.iter().enumerate() {
            for k in 0..m {
                let name = if m == 1 {
                    format!("x{}{}", i + 1, j + 1)
                } else {
                    format!("x{}{}_{}", i + 1, j + 1, k + 1)
                };
                arrows.push(Arrow {
                    name,
                    source: i,
                    target: j,
                });
            }
        }
    }
    Quiver::new(n, arrows).expect("adjacency matrix describes a valid quiver")
}

/// Length of the longest directed path, or `None` if there is a cycle.
pub fn longest_path(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    // Kahn's algorithm, relaxing lengths in topological order
    let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| adj[i][j] > 0).count()).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut dist = vec![0usize; n];
    let mut processed = 0;
    while let Some(v) = queue.pop() {
        processed += 1;
        for w in 0..n {
            if adj[v][w] > 0 {
                dist[w] = dist[w].max(dist[v] + 1);
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
    }
    (processed == n).then(|| dist.into_iter().max().unwrap_or(0))
}

pub fn kupisch_label(series: &KupischSeries) -> String {
    series.to_string()
}

pub fn adjacency_label(adj: &[Vec<usize>]) -> String {
    let rows: Vec<String> = adj
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    format!("radsq[{}]", rows.join(";"))
}

/// Nakayama algebras on `2..=max_vertices` vertices (`1..` for cyclic).
pub fn nakayama_family(
    field: &Field,
    shape: KupischShape,
    max_vertices: usize,
    max_len: usize,
) -> Vec<(String, Arc<Algebra>)> {
    let lo = match shape {
        KupischShape::Linear => 2,
        KupischShape::Cyclic => 1,
    };
    (lo..=max_vertices)
        .flat_map(|n| kupisch_series(shape, n, max_len))
        .map(|s| {
            let a = nakayama_from_kupisch(field.clone(), &s).expect("valid series give finite algebras");
            (kupisch_label(&s), a)
        })
        .collect()
}

pub fn scan_nakayama(
    field: &Field,
    shape: KupischShape,
    max_vertices: usize,
    max_len: usize,
    opts: &CheckOptions,
    exec: Execution,
) -> Result<Vec<Report>, CheckError> {
    let family = nakayama_family(field, shape, max_vertices, max_len);
    run_batch(&family, exec, |(label, a)| check_algebra(a, label, opts))
        .into_iter()
        .collect()
}

/// Radical-square-zero algebras of connected quivers on `1..=max_vertices`
/// vertices. For acyclic quivers the global dimension is compared with the
/// longest path length; a disagreement is an error.
pub fn scan_radical_square_zero(
    field: &Field,
    max_vertices: usize,
    opts: &CheckOptions,
    exec: Execution,
) -> Result<Vec<Report>, CheckError> {
    let graphs: Vec<Vec<Vec<usize>>> = (1..=max_vertices)
        .flat_map(|n| connected_digraphs(n, MAX_ARROW_MULTIPLICITY))
        .collect();
    debug_assert!(graphs.iter().all(|g| canonical_adjacency(g) == g.concat()));
    run_batch(&graphs, exec, |adj| {
        let a = radical_square_zero(field.clone(), quiver_from_adjacency(adj))?;
        let label = adjacency_label(adj);
        let mut report = check_algebra(&a, &label, opts)?;
        if let Some(len) = longest_path(adj) {
            report.longest_path = Some(len);
            if report.gldim != ExtDim::finite(len) {
                return Err(CheckError::AcyclicLaw {
                    label,
                    gldim: report.gldim.short(),
                    longest: len,
                });
            }
        }
        Ok(report)
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_counts_are_catalan() {
        let counts: Vec<usize> = (2..=5)
            .map(|n| kupisch_series(KupischShape::Linear, n, n).len())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 14]);
    }

    #[test]
    fn cyclic_rotation_classes() {
        // one vertex: c in 2..=4
        assert_eq!(kupisch_series(KupischShape::Cyclic, 1, 4).len(), 3);
        let two = kupisch_series(KupischShape::Cyclic, 2, 3);
        let lists: Vec<Vec<usize>> = two.iter().map(|s| s.lengths().to_vec()).collect();
        assert_eq!(lists, vec![vec![2, 2], vec![2, 3], vec![3, 3]]);
    }

    #[test]
    fn small_digraph_counts() {
        // one vertex: one or two loops
        assert_eq!(connected_digraphs(1, 2).len(), 2);
        // simple digraphs without loops on two vertices, connected: 1->2, 1<->2
        let simple: Vec<_> = connected_digraphs(2, 1)
            .into_iter()
            .filter(|g| (0..2).all(|i| g[i][i] == 0))
            .collect();
        assert_eq!(simple.len(), 2);
    }

    #[test]
    fn longest_paths() {
        assert_eq!(longest_path(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]), Some(2));
        assert_eq!(longest_path(&[vec![1]]), None);
        assert_eq!(longest_path(&[vec![0, 2], vec![0, 0]]), Some(1));
    }
}
