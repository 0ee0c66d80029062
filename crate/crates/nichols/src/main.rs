//! Thin command-line front end: parse a braiding file, run the requested
//! computation from the library, print text or JSON, and exit with a
//! stable code (0 success, 1 mismatch or finiteness not shown, 2 parse or
//! validation error, 3 reflection undefined, 4 degree range insufficient).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nichols::braiding::BraidingMatrix;
use nichols::groupoid::{build_groupoid, Caps};
use nichols::reflection::{pseudo_reflection, reflect_braiding};
use nichols::report;

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_REFLECTABLE: u8 = 3;
const EXIT_ORACLE_CUTOFF: u8 = 4;

#[derive(Parser)]
#[command(
    name = "nichols",
    version,
    about = "Reflection analysis of diagonal braidings, cross-checked by word combinatorics"
)]
struct Cli {
    /// Emit one machine-readable JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Number of worker threads for block computations (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CapArgs {
    /// Cap on enumerated states and basis pairs.
    #[arg(long = "max-objects", default_value_t = 10_000)]
    max_objects: usize,
    /// Cap on the length of reflection words followed.
    #[arg(long = "max-depth", default_value_t = 64)]
    max_depth: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_states: self.max_objects,
            max_arrows: self.max_objects.saturating_mul(10),
            max_word_len: self.max_depth,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Reflection-side report: Cartan data, orbit, roots, groupoid checks.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        /// Exit 1 unless the enumeration proved the orbit finite.
        #[arg(long = "require-finite")]
        require_finite: bool,
        /// Write the state graph in Graphviz format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Transport the braiding across the reflection at one index (1-based).
    Reflect { file: PathBuf, index: usize },
    /// Dimension table and inferred generators from word combinatorics.
    Oracle {
        file: PathBuf,
        /// Largest total degree to tabulate.
        #[arg(long = "max-degree", default_value_t = 6)]
        max_degree: usize,
    },
    /// Run both sides and check that roots and generators agree.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        /// Largest total degree for the word-combinatorics side.
        #[arg(long = "max-degree", default_value_t = 6)]
        max_degree: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match &cli.cmd {
        Cmd::Analyze {
            file,
            caps,
            require_finite,
            dot,
        } => cmd_analyze(&cli, file, &caps.caps(), *require_finite, dot.as_deref()),
        Cmd::Reflect { file, index } => cmd_reflect(&cli, file, *index),
        Cmd::Oracle { file, max_degree } => cmd_oracle(&cli, file, *max_degree),
        Cmd::Compare {
            file,
            caps,
            max_degree,
        } => cmd_compare(&cli, file, &caps.caps(), *max_degree),
    }
}

fn load(file: &Path) -> Result<BraidingMatrix, ExitCode> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", file.display());
        ExitCode::from(EXIT_PARSE)
    })?;
    BraidingMatrix::parse(&text).map_err(|e| {
        eprintln!("error: {}: {e}", file.display());
        ExitCode::from(EXIT_PARSE)
    })
}

fn cmd_analyze(
    cli: &Cli,
    file: &Path,
    caps: &Caps,
    require_finite: bool,
    dot: Option<&Path>,
) -> ExitCode {
    let q = match load(file) {
        Ok(q) => q,
        Err(code) => return code,
    };
    let report = report::analyze(&q, caps);
    if let Some(path) = dot {
        match build_groupoid(&q, caps) {
            Ok(graph) => {
                if let Err(e) = std::fs::write(path, graph.to_dot()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_PARSE);
                }
            }
            Err(e) => eprintln!("state graph not exported: {e}"),
        }
    }
    if cli.json {
        println!("{:#}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if require_finite && !report.shown_finite() {
        return ExitCode::from(EXIT_MISMATCH);
    }
    ExitCode::SUCCESS
}

fn cmd_reflect(cli: &Cli, file: &Path, index: usize) -> ExitCode {
    let q = match load(file) {
        Ok(q) => q,
        Err(code) => return code,
    };
    if index == 0 || index > q.rank() {
        eprintln!(
            "error: index {index} out of range 1..={} for this braiding",
            q.rank()
        );
        return ExitCode::from(EXIT_PARSE);
    }
    let i = index - 1;
    let (map, image) = match (pseudo_reflection(&q, i), reflect_braiding(&q, i)) {
        (Ok(map), Ok(image)) => (map, image),
        (Err(e), _) | (_, Err(e)) => {
            // The library error speaks 0-based; this front end is 1-based.
            eprintln!(
                "error: index {} admits no pseudo-reflection: the commutator tower \
                 into {} never truncates",
                e.index + 1,
                e.partner + 1
            );
            return ExitCode::from(EXIT_NOT_REFLECTABLE);
        }
    };
    if cli.json {
        let doc = serde_json::json!({
            "index": index,
            "coefficients": map.coefficients(),
            "braiding": image.serialize(),
        });
        println!("{doc:#}");
    } else {
        print!("{}", image.serialize());
    }
    ExitCode::SUCCESS
}

fn cmd_oracle(cli: &Cli, file: &Path, max_degree: usize) -> ExitCode {
    let q = match load(file) {
        Ok(q) => q,
        Err(code) => return code,
    };
    if max_degree == 0 {
        eprintln!("error: --max-degree must be at least 1");
        return ExitCode::from(EXIT_PARSE);
    }
    let report = report::oracle_report(&q, max_degree);
    if cli.json {
        println!("{:#}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.pbw.is_err() {
        eprintln!("hint: rerun with a larger --max-degree to disambiguate");
        return ExitCode::from(EXIT_ORACLE_CUTOFF);
    }
    ExitCode::SUCCESS
}

fn cmd_compare(cli: &Cli, file: &Path, caps: &Caps, max_degree: usize) -> ExitCode {
    let q = match load(file) {
        Ok(q) => q,
        Err(code) => return code,
    };
    if max_degree == 0 {
        eprintln!("error: --max-degree must be at least 1");
        return ExitCode::from(EXIT_PARSE);
    }
    let report = match report::compare(&q, caps, max_degree) {
        Ok(report) => report,
        Err(cutoff) => {
            eprintln!("error: {cutoff}");
            eprintln!("hint: rerun with a larger --max-degree to disambiguate");
            return ExitCode::from(EXIT_ORACLE_CUTOFF);
        }
    };
    if cli.json {
        println!("{:#}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.agreed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}
