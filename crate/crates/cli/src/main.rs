mod construct;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use bolkit_core::gf2;
use bolkit_core::iso::{classify, find_isomorphism};
use bolkit_core::loops::parse_table;
use bolkit_core::report::{classification_report, structure_report};
use bolkit_core::search::{bol_search, DEFAULT_NODE_BUDGET};
use bolkit_core::structure::{check_identity, commutant, is_subloop, Identity};
use bolkit_core::LoopTable;
use clap::{Parser, Subcommand};

/// Exit status when a check or verification fails.
const FAILURE: u8 = 1;
/// Exit status for unreadable or invalid input.
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "bolkit",
    version,
    about = "Finite loops: Bol identities, commutants, extensions, classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a structural report for a table file.
    Check { file: PathBuf },
    /// Build a loop from a construction spec and write it as a table file.
    ///
    /// Specs: "q9 <9 bits>", "exceptional", "named <example>",
    /// "semidirect K=<group> E=<group> tau=<trivial|i1,i2,...>".
    Construct {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Partition table files into isomorphism classes.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// List the 512 loops Q(c1..c9), or classify them.
    EnumerateQ9 {
        #[arg(long)]
        classify: bool,
        /// Also write each table to DIR/q9_<bits>.tbl.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
    /// Exhaustive searches.
    Oracle {
        #[command(subcommand)]
        which: Oracle,
    },
    /// Run the full claim suite; exit 0 iff every claim passes.
    VerifyPaper,
    /// Test two table files for isomorphism; exit 0 if isomorphic, 1 if not.
    Iso { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand)]
enum Oracle {
    /// Every left Bol loop of order 8, checked for subloop commutants.
    Order8 {
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn read_table(path: &Path) -> Result<LoopTable> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_table(&text).with_context(|| format!("parsing {}", path.display()))
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAILURE)
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Check { file } => {
            print!("{}", structure_report(&read_table(&file)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { spec, output } => {
            let spec = spec.join(" ");
            let q = construct::build(&spec)?;
            fs::write(&output, q.render())
                .with_context(|| format!("writing {}", output.display()))?;
            println!("wrote {} (order {})", output.display(), q.order());
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { files } => {
            let loops = files
                .iter()
                .map(|f| {
                    let q = read_table(f)?;
                    Ok(q.with_name(f.display().to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            let classes = classify(&loops);
            print!("{}", classification_report(&loops, &classes));
            println!("classes: {}", classes.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::EnumerateQ9 {
            classify: with_classes,
            out_dir,
        } => {
            let loops = gf2::enumerate_q9();
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for (t, q) in loops.iter().enumerate() {
                    let bits: String = gf2::Q9Params::from_index(t)
                        .bits()
                        .iter()
                        .map(u8::to_string)
                        .collect();
                    let path = dir.join(format!("q9_{bits}.tbl"));
                    fs::write(&path, q.render())
                        .with_context(|| format!("writing {}", path.display()))?;
                }
            }
            if with_classes {
                let classes = classify(&loops);
                print!("{}", classification_report(&loops, &classes));
                println!("classes: {}", classes.len());
            } else {
                for q in &loops {
                    let c = commutant(q);
                    println!(
                        "{}: left_bol={} commutant={} commutant_is_subloop={}",
                        q.name().unwrap_or("?"),
                        check_identity(q, Identity::LeftBol),
                        c,
                        is_subloop(q, &c)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            which: Oracle::Order8 { budget },
        } => oracle_order8(budget),
        Command::VerifyPaper => {
            let report = verify::run(|r| println!("{r}"));
            let passed = report
                .claims
                .iter()
                .filter(|c| c.status == verify::Status::Pass)
                .count();
            println!("{passed}/{} claims passed", report.claims.len());
            Ok(status(report.passed()))
        }
        Command::Iso { first, second } => {
            let (a, b) = (read_table(&first)?, read_table(&second)?);
            match find_isomorphism(&a, &b) {
                Some(phi) => {
                    println!("isomorphic: {phi}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("not isomorphic");
                    Ok(ExitCode::from(FAILURE))
                }
            }
        }
    }
}

fn oracle_order8(budget: u64) -> Result<ExitCode> {
    let (tables, stats) = match bol_search(8, budget) {
        Ok(r) => r,
        Err(e) => {
            println!("search aborted: {e}");
            return Ok(ExitCode::from(FAILURE));
        }
    };
    let non_subloop = tables
        .iter()
        .filter(|q| !is_subloop(q, &commutant(q)))
        .count();
    let classes = classify(&tables);
    let groups = classes
        .iter()
        .filter(|c| check_identity(&tables[c.representative], Identity::Associative))
        .count();
    println!(
        "left Bol tables of order 8 (identity fixed): {}",
        tables.len()
    );
    println!("search nodes: {}", stats.nodes);
    println!("isomorphism classes: {}", classes.len());
    println!("group classes: {groups}");
    println!("nonassociative classes: {}", classes.len() - groups);
    println!("tables with non-subloop commutant: {non_subloop}");
    let ok = non_subloop == 0 && groups == 5;
    println!("all commutants are subloops: {}", non_subloop == 0);
    Ok(status(ok))
}
