use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::json;

use idrad::algebra::{ext_quiver, Algebra, KupischShape, DEFAULT_PRIME};
use idrad::checker::document::parse_algebra_spec;
use idrad::checker::emit::{emit, Format};
use idrad::checker::scan::{scan_nakayama, scan_radical_square_zero, Execution};
use idrad::checker::{algebra_id, check_algebra, CheckOptions, Report};
use idrad::homology::{
    global_dimension, gorenstein_dimension, is_local, is_nakayama, is_selfinjective, simple_dimensions, DimOptions,
    DEFAULT_CAP, DEFAULT_DIM_BUDGET,
};
use idrad::linalg::Field;

#[derive(Parser, Debug)]
#[command(name = "idrad", version, about = "Injective dimension of the radical vs. global dimension")]
struct Cli {
    /// Field characteristic when the input does not fix one
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Maximal number of syzygy steps per dimension computation
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Seed for randomized isomorphism tests
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest syzygy dimension explored before reporting a lower bound
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_BUDGET)]
    budget: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    /// Write reports to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record per-algebra wall-clock time in reports
    #[arg(long, global = true)]
    timing: bool,
    /// Evaluate scans on a single thread
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print basic invariants of an algebra described in a JSON file
    Info { file: PathBuf },
    /// Evaluate every claim on one algebra
    Check { file: PathBuf },
    /// Evaluate every claim over a family of algebras
    Scan {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Nakayama algebras given by Kupisch series
    Nakayama {
        #[arg(long, value_enum)]
        shape: ShapeArg,
        #[arg(long)]
        max_vertices: usize,
        /// Largest composition length of an indecomposable projective
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Radical-square-zero algebras of connected quivers
    Radsq {
        #[arg(long)]
        max_vertices: usize,
    },
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum ShapeArg {
    Linear,
    Cyclic,
}

impl From<ShapeArg> for KupischShape {
    fn from(s: ShapeArg) -> Self {
        match s {
            ShapeArg::Linear => KupischShape::Linear,
            ShapeArg::Cyclic => KupischShape::Cyclic,
        }
    }
}

type Failure = Box<dyn std::error::Error>;

fn load(path: &PathBuf, prime: u64) -> Result<Arc<Algebra>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_algebra_spec(&text, prime).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn output(cli: &Cli) -> Result<Box<dyn Write>, Failure> {
    Ok(match &cli.out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| format!("{}: {e}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn info(a: &Arc<Algebra>, cli: &Cli) -> serde_json::Value {
    let q = a.quiver();
    let opts = DimOptions::new(cli.cap).with_seed(cli.seed).with_budget(cli.budget);
    let (pd, id) = simple_dimensions(a, &opts);
    let short = |v: &[idrad::ExtDim]| v.iter().map(|x| x.short()).collect::<Vec<_>>();
    let arrows: Vec<_> = q
        .arrows()
        .iter()
        .map(|ar| json!({"name": ar.name, "source": ar.source + 1, "target": ar.target + 1}))
        .collect();
    let relations: Vec<String> = a.relations().iter().map(|r| a.path_label(r)).collect();
    let basis: Vec<String> = a.basis().iter().map(|p| a.path_label(p)).collect();
    let ext_arrows: Vec<_> = ext_quiver(a)
        .arrows()
        .iter()
        .map(|ar| json!([ar.source + 1, ar.target + 1]))
        .collect();
    let gor = gorenstein_dimension(a, &opts);
    json!({
        "algebra_id": algebra_id(a),
        "prime": a.field().prime(),
        "vertices": a.vertex_count(),
        "arrows": arrows,
        "relations": relations,
        "dim": a.dim(),
        "loewy_length": a.loewy_length(),
        "basis": basis,
        "ext_quiver": ext_arrows,
        "gldim": global_dimension(a),
        "pd_simples": short(&pd),
        "id_simples": short(&id),
        "gorenstein": gor,
        "local": is_local(a),
        "selfinjective": is_selfinjective(a),
        "nakayama": is_nakayama(a),
    })
}

fn write_reports(cli: &Cli, reports: &[Report]) -> Result<i32, Failure> {
    let mut out = output(cli)?;
    let summary = emit(reports, cli.format, &mut out)?;
    out.flush()?;
    if cli.format == Format::Csv {
        eprintln!("{}", summary.to_json_line());
    }
    Ok(summary.exit_code())
}

fn run(cli: &Cli) -> Result<i32, Failure> {
    let opts = CheckOptions {
        cap: cli.cap,
        seed: cli.seed,
        budget: cli.budget,
        timing: cli.timing,
    };
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match &cli.command {
        Command::Info { file } => {
            let a = load(file, cli.prime)?;
            let mut out = output(cli)?;
            serde_json::to_writer_pretty(&mut out, &info(&a, cli))?;
            writeln!(out)?;
            out.flush()?;
            Ok(0)
        }
        Command::Check { file } => {
            let a = load(file, cli.prime)?;
            let label = file
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let report = check_algebra(&a, &label, &opts)?;
            write_reports(cli, &[report])
        }
        Command::Scan { family } => {
            let field = Field::new(cli.prime)?;
            let reports = match family {
                Family::Nakayama {
                    shape,
                    max_vertices,
                    max_len,
                } => scan_nakayama(&field, (*shape).into(), *max_vertices, *max_len, &opts, exec)?,
                Family::Radsq { max_vertices } => scan_radical_square_zero(&field, *max_vertices, &opts, exec)?,
            };
            write_reports(cli, &reports)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
