//! Canonical forms and stable identifiers for algebras and digraphs.
//!
//! Up to [`EXACT_LIMIT`] vertices the canonical form is the lexicographic
//! minimum over all vertex permutations. Larger quivers fall back to a
//! degree-sorted relabelling, which is stable but not a complete invariant.

use sha2::{Digest, Sha256};

use crate::algebra::Algebra;

pub const EXACT_LIMIT: usize = 8;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// `perm[v]` is the new index of old vertex `v`.
fn relabel_matrix(adj: &[Vec<usize>], perm: &[usize]) -> Vec<usize> {
    let n = adj.len();
    let mut out = vec![0; n * n];
    for (i, row) in adj.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            out[perm[i] * n + perm[j]] = c;
        }
    }
    out
}

fn fallback_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    let key = |v: usize| {
        let out: usize = adj[v].iter().sum();
        let inc: usize = adj.iter().map(|r| r[v]).sum();
        (out, inc, adj[v][v], v)
    };
    order.sort_by_key(|&v| key(v));
    // order[k] = old vertex placed at k; invert to perm[old] = new
    let mut perm = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        perm[v] = k;
    }
    perm
}

fn candidate_perms(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    if adj.len() <= EXACT_LIMIT {
        permutations(adj.len())
    } else {
        vec![fallback_order(adj)]
    }
}

/// Canonical adjacency matrix (row-major) of a multi-digraph.
pub fn canonical_adjacency(adj: &[Vec<usize>]) -> Vec<usize> {
    candidate_perms(adj)
        .iter()
        .map(|p| relabel_matrix(adj, p))
        .min()
        .unwrap_or_default()
}

type AlgebraKey = (Vec<usize>, Vec<Vec<usize>>);

fn algebra_key(a: &Algebra, perm: &[usize]) -> AlgebraKey {
    let q = a.quiver();
    let adj = q.adjacency_counts();
    let matrix = relabel_matrix(&adj, perm);
    // arrows ordered by relabelled endpoints; parallel arrows keep their
    // relative order
    let mut order: Vec<usize> = (0..q.arrows().len()).collect();
    order.sort_by_key(|&id| {
        let ar = q.arrow(id);
        (perm[ar.source], perm[ar.target], id)
    });
    let mut label = vec![0; order.len()];
    for (k, &id) in order.iter().enumerate() {
        label[id] = k;
    }
    let mut rels: Vec<Vec<usize>> = a
        .relations()
        .iter()
        .map(|r| r.arrows().iter().map(|&x| label[x]).collect())
        .collect();
    rels.sort();
    (matrix, rels)
}

/// Minimal key over vertex relabellings, rendered as text.
pub fn canonical_form(a: &Algebra) -> String {
    let adj = a.quiver().adjacency_counts();
    let (matrix, rels) = candidate_perms(&adj)
        .iter()
        .map(|p| algebra_key(a, p))
        .min()
        .expect("at least one vertex");
    let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let rels: Vec<String> = rels.iter().map(|r| join(r)).collect();
    format!(
        "p={};n={};adj={};rel={}",
        a.field().prime(),
        a.vertex_count(),
        join(&matrix),
        rels.join("|")
    )
}

/// Hex SHA-256 prefix of the canonical form; equal for isomorphic
/// presentations.
pub fn algebra_id(a: &Algebra) -> String {
    let digest = Sha256::digest(canonical_form(a).as_bytes());
    digest[..12].iter().map(|b| format!("{b:02x}")).collect()
}
