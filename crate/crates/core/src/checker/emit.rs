//! Report serialization and run summaries.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::{ClaimId, ClaimStatus, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCounts {
    pub confirmed: usize,
    pub undetermined: usize,
    pub violated: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub algebras: usize,
    pub claims: BTreeMap<ClaimId, ClaimCounts>,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Summary {
        let mut claims: BTreeMap<ClaimId, ClaimCounts> = ClaimId::ALL.iter().map(|&c| (c, ClaimCounts::default())).collect();
        for r in reports {
            for v in &r.verdicts {
                let c = claims.entry(v.claim).or_default();
                match v.status {
                    ClaimStatus::Confirmed => c.confirmed += 1,
                    ClaimStatus::ConsistentUndetermined => c.undetermined += 1,
                    ClaimStatus::Violated => c.violated += 1,
                    ClaimStatus::NotApplicable => c.not_applicable += 1,
                }
            }
        }
        Summary {
            algebras: reports.len(),
            claims,
        }
    }

    /// 2 when a C1–C6 claim is violated, else 0.
    pub fn exit_code(&self) -> i32 {
        let violated = self
            .claims
            .iter()
            .any(|(c, n)| !c.is_observation() && n.violated > 0);
        if violated {
            2
        } else {
            0
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::json!({ "summary": self }).to_string()
    }
}

const CSV_HEADER: [&str; 23] = [
    "algebra_id",
    "label",
    "prime",
    "n",
    "total_dim",
    "loewy_length",
    "gldim",
    "id_j",
    "id_j2",
    "id_jmodj2",
    "local",
    "selfinjective",
    "nakayama",
    "gorenstein",
    "longest_path",
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "C7",
    "C8",
];

fn status_text(s: ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Confirmed => "confirmed",
        ClaimStatus::ConsistentUndetermined => "undetermined",
        ClaimStatus::Violated => "violated",
        ClaimStatus::NotApplicable => "not_applicable",
    }
}

fn csv_row(r: &Report) -> Vec<String> {
    let mut row = vec![
        r.algebra_id.clone(),
        r.label.clone(),
        r.prime.to_string(),
        r.n.to_string(),
        r.total_dim.to_string(),
        r.loewy_length.to_string(),
        r.gldim.short(),
        r.id_j.short(),
        r.id_j2.short(),
        r.id_jmodj2.short(),
        r.local.to_string(),
        r.selfinjective.to_string(),
        r.nakayama.to_string(),
        serde_json::to_value(r.gorenstein.verdict)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
        r.longest_path.map(|l| l.to_string()).unwrap_or_default(),
    ];
    row.extend(ClaimId::ALL.iter().map(|&c| status_text(r.status(c)).to_string()));
    row
}

/// Writes the reports. JSONL output ends with a summary line; CSV output
/// carries only the table, so the caller decides where the summary goes.
pub fn emit<W: Write>(reports: &[Report], format: Format, out: W) -> io::Result<Summary> {
    let summary = Summary::of(reports);
    match format {
        Format::Jsonl => {
            let mut out = out;
            for r in reports {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            writeln!(out, "{}", summary.to_json_line())?;
            out.flush()?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in reports {
                w.write_record(csv_row(r))?;
            }
            w.flush()?;
        }
    }
    Ok(summary)
}
