//! Claim evaluation over single algebras and enumerated families.
//!
//! Each algebra is turned into a [`Report`]: its invariants plus one
//! [`ClaimVerdict`] per claim. All comparisons are three-valued, so a lower
//! bound `AtLeast(c)` can never produce a vacuous confirmation or a
//! spurious violation.

pub mod canonical;
pub mod document;
pub mod emit;
pub mod scan;

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{ext_quiver, Algebra, AlgebraError};
use crate::homology::{
    ext_dim, global_dimension, gorenstein_dimension, injective_dimension, is_injective_by_ext, is_injective_module,
    is_local, is_nakayama, is_selfinjective, mix_seed, projective_dimension, Bounds, DimOptions, ExtDim, Gorenstein,
    GorensteinVerdict, Truth, DEFAULT_CAP, DEFAULT_DIM_BUDGET,
};
use crate::modules::{radical_layer_quotient, radical_power_module, simple, ModuleError};

pub use canonical::algebra_id;

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("semisimple algebra: the checks need at least one arrow")]
    NonSemisimpleRequired,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("{label}: global dimension {gldim} differs from the longest path length {longest}")]
    AcyclicLaw {
        label: String,
        gldim: String,
        longest: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    /// `gldim A = id J`
    C1,
    /// `id(J/J^2) = gldim A`
    C2,
    /// finite global dimension `g` forces `id J = g`
    C3,
    /// Gorenstein algebras satisfy `id J = gldim A`
    C4,
    /// `gldim A = max pd S_i = max id S_i`
    C5,
    /// `S_i` injective iff no arrow ends at `i`
    C6,
    /// `id J >= id J^2 - 1`
    C7,
    /// `id J >= id J^2`
    C8,
}

impl ClaimId {
    pub const ALL: [ClaimId; 8] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
    ];

    /// C7 and C8 are observations; a violation is
    /// reported but does not fail a run.
    pub fn is_observation(self) -> bool {
        matches!(self, ClaimId::C7 | ClaimId::C8)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Confirmed,
    ConsistentUndetermined,
    Violated,
    /// The claim's hypothesis does not hold for this algebra.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub label: String,
    pub value: ExtDim,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim: ClaimId,
    pub status: ClaimStatus,
    pub evidence: Vec<Evidence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Per-vertex data for the simple-injectivity claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleInjectivity {
    /// 1-based
    pub vertex: usize,
    /// the injective envelope of `S_i` is an isomorphism
    pub by_envelope: bool,
    /// `Ext^1(S_j, S_i) = 0` for all `j`
    pub by_ext: bool,
    /// no arrow of the quiver of `A` ends at `i`
    pub no_incoming_arrow: bool,
    /// `dim Ext^1(S_j, S_i)` equals the number of arrows `j -> i` for all `j`
    pub ext1_counts_arrows: bool,
}

/// Everything the claims are evaluated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub gldim: ExtDim,
    pub id_j: ExtDim,
    pub id_j2: ExtDim,
    pub id_jmodj2: ExtDim,
    pub pd_simples: Vec<ExtDim>,
    pub id_simples: Vec<ExtDim>,
    pub gorenstein: Gorenstein,
    pub simple_injectivity: Vec<SimpleInjectivity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub algebra_id: String,
    pub label: String,
    pub prime: u32,
    pub n: usize,
    pub total_dim: usize,
    pub loewy_length: usize,
    pub gldim: ExtDim,
    pub id_j: ExtDim,
    pub id_j2: ExtDim,
    pub id_jmodj2: ExtDim,
    pub pd_simples: Vec<ExtDim>,
    pub id_simples: Vec<ExtDim>,
    pub local: bool,
    pub selfinjective: bool,
    pub nakayama: bool,
    pub gorenstein: Gorenstein,
    pub simple_injectivity: Vec<SimpleInjectivity>,
    /// Longest directed path, recorded for acyclic radical-square-zero scans.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub longest_path: Option<usize>,
    pub verdicts: Vec<ClaimVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn verdict(&self, claim: ClaimId) -> &ClaimVerdict {
        self.verdicts
            .iter()
            .find(|v| v.claim == claim)
            .expect("reports carry every claim")
    }

    pub fn status(&self, claim: ClaimId) -> ClaimStatus {
        self.verdict(claim).status
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub cap: usize,
    pub seed: u64,
    pub budget: usize,
    pub timing: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            cap: DEFAULT_CAP,
            seed: 0,
            budget: DEFAULT_DIM_BUDGET,
            timing: false,
        }
    }
}

fn seed_for(id: &str, seed: u64) -> u64 {
    let folded = id
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    mix_seed(seed, folded, 0)
}

/// Computes all invariants of `a`.
pub fn compute_invariants(a: &Arc<Algebra>, opts: &CheckOptions, seed: u64) -> Result<Invariants, CheckError> {
    if a.is_semisimple() {
        return Err(CheckError::NonSemisimpleRequired);
    }
    let gldim = global_dimension(a);
    // every pd and id is bounded by a finite global dimension
    let cap = match gldim.as_finite() {
        Some(g) => opts.cap.min(g.max(1)),
        None => opts.cap,
    };
    let dim_opts = |salt: u64| {
        DimOptions::new(cap)
            .with_budget(opts.budget)
            .with_seed(mix_seed(seed, salt, 0))
    };

    let j = radical_power_module(a, 1);
    let j2 = radical_power_module(a, 2);
    let jmodj2 = radical_layer_quotient(a, 1, 2);
    let id_j = injective_dimension(&j, &dim_opts(1));
    let id_j2 = injective_dimension(&j2, &dim_opts(2));
    let id_jmodj2 = injective_dimension(&jmodj2, &dim_opts(3));

    let n = a.vertex_count();
    let mut pd_simples = Vec::with_capacity(n);
    let mut id_simples = Vec::with_capacity(n);
    for v in 0..n {
        let s = simple(a, v)?;
        pd_simples.push(projective_dimension(&s, &dim_opts(100 + v as u64).iterative()));
        id_simples.push(injective_dimension(&s, &dim_opts(200 + v as u64).iterative()));
    }

    let gorenstein = gorenstein_dimension(a, &dim_opts(4));

    let q = ext_quiver(a);
    let ext1_opts = DimOptions::new(1).with_budget(usize::MAX);
    let mut simple_injectivity = Vec::with_capacity(n);
    for i in 0..n {
        let s = simple(a, i)?;
        let ext1_counts_arrows = (0..n).all(|jv| {
            let arrows = q.arrows().iter().filter(|ar| ar.source == jv && ar.target == i).count();
            let sj = simple(a, jv).expect("vertex in range");
            ext_dim(1, &sj, i, &ext1_opts) == Some(arrows)
        });
        simple_injectivity.push(SimpleInjectivity {
            vertex: i + 1,
            by_envelope: is_injective_module(&s)?,
            by_ext: is_injective_by_ext(&s)?,
            no_incoming_arrow: q.incoming(i).next().is_none(),
            ext1_counts_arrows,
        });
    }

    Ok(Invariants {
        gldim,
        id_j,
        id_j2,
        id_jmodj2,
        pd_simples,
        id_simples,
        gorenstein,
        simple_injectivity,
    })
}

fn evidence(pairs: &[(&str, &ExtDim)]) -> Vec<Evidence> {
    pairs
        .iter()
        .map(|(label, value)| Evidence {
            label: label.to_string(),
            value: (*value).clone(),
        })
        .collect()
}

/// Maps a three-valued outcome to a status. `Violated` needs every
/// compared value to be determined.
fn status_from(truth: Truth, values: &[&ExtDim]) -> (ClaimStatus, Option<String>) {
    let determined = values.iter().all(|v| v.is_determined());
    match truth {
        Truth::True => (ClaimStatus::Confirmed, None),
        Truth::False if determined => (ClaimStatus::Violated, None),
        Truth::False => (
            ClaimStatus::ConsistentUndetermined,
            Some("bounds disagree but some values are only lower bounds".into()),
        ),
        Truth::Unknown => (ClaimStatus::ConsistentUndetermined, None),
    }
}

fn verdict(claim: ClaimId, truth: Truth, pairs: &[(&str, &ExtDim)]) -> ClaimVerdict {
    let values: Vec<&ExtDim> = pairs.iter().map(|(_, v)| *v).collect();
    let (status, note) = status_from(truth, &values);
    ClaimVerdict {
        claim,
        status,
        evidence: evidence(pairs),
        note,
    }
}

fn not_applicable(claim: ClaimId, pairs: &[(&str, &ExtDim)], note: &str) -> ClaimVerdict {
    ClaimVerdict {
        claim,
        status: ClaimStatus::NotApplicable,
        evidence: evidence(pairs),
        note: Some(note.into()),
    }
}

/// Evaluates C1..C8 on precomputed invariants.
pub fn evaluate_claims(inv: &Invariants) -> Vec<ClaimVerdict> {
    let gl = &inv.gldim;
    let idj = &inv.id_j;
    let idj2 = &inv.id_j2;
    let b = |x: &ExtDim| -> Bounds { x.bounds() };
    let mut out = Vec::with_capacity(8);

    out.push(verdict(
        ClaimId::C1,
        b(gl).equals(b(idj)),
        &[("gldim", gl), ("id_J", idj)],
    ));
    out.push(verdict(
        ClaimId::C2,
        b(&inv.id_jmodj2).equals(b(gl)),
        &[("gldim", gl), ("id_J/J^2", &inv.id_jmodj2)],
    ));

    out.push(match gl {
        ExtDim::Finite { .. } => verdict(ClaimId::C3, b(gl).equals(b(idj)), &[("gldim", gl), ("id_J", idj)]),
        ExtDim::AtLeast { .. } => ClaimVerdict {
            claim: ClaimId::C3,
            status: ClaimStatus::ConsistentUndetermined,
            evidence: evidence(&[("gldim", gl), ("id_J", idj)]),
            note: Some("finiteness of the global dimension is undetermined".into()),
        },
        _ => not_applicable(ClaimId::C3, &[("gldim", gl)], "global dimension is not finite"),
    });

    let gor = &inv.gorenstein;
    let c4_pairs: [(&str, &ExtDim); 4] = [
        ("gldim", gl),
        ("id_J", idj),
        ("id_A_right", &gor.right),
        ("id_A_left", &gor.left),
    ];
    out.push(match gor.verdict {
        GorensteinVerdict::NotGorenstein => not_applicable(ClaimId::C4, &c4_pairs, "not Gorenstein"),
        GorensteinVerdict::Undetermined => ClaimVerdict {
            claim: ClaimId::C4,
            status: ClaimStatus::ConsistentUndetermined,
            evidence: evidence(&c4_pairs),
            note: Some("Gorenstein property undetermined".into()),
        },
        GorensteinVerdict::Gorenstein => match gl {
            // finite global dimension equals the Gorenstein dimension
            ExtDim::Finite { .. } => {
                let t = b(idj).equals(b(&gor.right)).and(b(gl).equals(b(&gor.right)));
                verdict(ClaimId::C4, t, &c4_pairs)
            }
            // infinite global dimension: id J must be infinite as well
            ExtDim::Infinite { .. } => {
                let t = match idj {
                    ExtDim::Infinite { .. } => Truth::True,
                    ExtDim::AtLeast { .. } => Truth::Unknown,
                    _ => Truth::False,
                };
                verdict(ClaimId::C4, t, &c4_pairs)
            }
            _ => verdict(ClaimId::C4, Truth::Unknown, &c4_pairs),
        },
    });

    let max_pd = ExtDim::max_of(&inv.pd_simples);
    let max_id = ExtDim::max_of(&inv.id_simples);
    out.push(verdict(
        ClaimId::C5,
        b(gl).equals(b(&max_pd)).and(b(gl).equals(b(&max_id))),
        &[("gldim", gl), ("max_pd_S", &max_pd), ("max_id_S", &max_id)],
    ));

    let mismatched: Vec<usize> = inv
        .simple_injectivity
        .iter()
        .filter(|s| {
            !(s.by_envelope == s.no_incoming_arrow && s.by_ext == s.by_envelope && s.ext1_counts_arrows)
        })
        .map(|s| s.vertex)
        .collect();
    let injective_at: Vec<String> = inv
        .simple_injectivity
        .iter()
        .filter(|s| s.by_envelope)
        .map(|s| s.vertex.to_string())
        .collect();
    out.push(ClaimVerdict {
        claim: ClaimId::C6,
        status: if mismatched.is_empty() {
            ClaimStatus::Confirmed
        } else {
            ClaimStatus::Violated
        },
        evidence: Vec::new(),
        note: Some(if mismatched.is_empty() {
            format!("injective simples at vertices [{}]", injective_at.join(","))
        } else {
            format!("mismatch at vertices {mismatched:?}")
        }),
    });

    out.push(verdict(
        ClaimId::C7,
        b(idj).ge(b(idj2).minus_one()),
        &[("id_J", idj), ("id_J^2", idj2)],
    ));
    out.push(verdict(ClaimId::C8, b(idj).ge(b(idj2)), &[("id_J", idj), ("id_J^2", idj2)]));
    out
}

/// Computes the invariants of `a` and evaluates every claim.
pub fn check_algebra(a: &Arc<Algebra>, label: &str, opts: &CheckOptions) -> Result<Report, CheckError> {
    let started = Instant::now();
    let id = algebra_id(a);
    let seed = seed_for(&id, opts.seed);
    let inv = compute_invariants(a, opts, seed)?;
    let verdicts = evaluate_claims(&inv);
    Ok(Report {
        algebra_id: id,
        label: label.to_string(),
        prime: a.field().prime(),
        n: a.vertex_count(),
        total_dim: a.dim(),
        loewy_length: a.loewy_length(),
        gldim: inv.gldim,
        id_j: inv.id_j,
        id_j2: inv.id_j2,
        id_jmodj2: inv.id_jmodj2,
        pd_simples: inv.pd_simples,
        id_simples: inv.id_simples,
        local: is_local(a),
        selfinjective: is_selfinjective(a),
        nakayama: is_nakayama(a),
        gorenstein: inv.gorenstein,
        simple_injectivity: inv.simple_injectivity,
        longest_path: None,
        verdicts,
        elapsed_ms: opts.timing.then(|| started.elapsed().as_millis() as u64),
    })
}
