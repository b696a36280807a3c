use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wiener_cli::claims::{self, Settings, Status};
use wiener_cli::commands::{self, EnumerateMode, EnumerateOutput, OrientMode, SignedMode};
use wiener_cli::report::{self, Format};
use wiener_cli::{CliError, CliResult};
use wiener_core::Shard;
use wiener_enumerate::Direction;
use wiener_orient::TauConvention;

#[derive(Parser)]
#[command(name = "wiener", version, about = "Wiener-index computations, exhaustive searches and claim checks")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Work slice i/N of a search.
    #[arg(long, global = true, default_value = "0/1")]
    shards: String,
    #[arg(long, global = true, value_enum, default_value_t = Tau::Self_)]
    tau_convention: Tau,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    out: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out_file: Option<String>,
    /// Worker cap for `verify`.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tau {
    #[value(name = "self")]
    Self_,
    #[value(name = "noself")]
    NoSelf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Min,
    Max,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants of graph6 graphs.
    Invariant {
        input: Option<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "w")]
        which: Vec<String>,
    },
    /// Isomorph-free generation of connected graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "connected")]
        filter: String,
        /// Stream graph6 lines.
        #[arg(long, conflicts_with = "extremal")]
        emit: bool,
        /// Objective (w, sz, dim, diameter, radius, blocks) and direction.
        #[arg(long, num_args = 2, value_names = ["OBJ", "DIR"])]
        extremal: Option<Vec<String>>,
    },
    /// Orientation searches; a djson input is evaluated instead.
    Orient {
        input: String,
        #[arg(long, value_enum, default_value_t = OrientMode::Exhaustive)]
        mode: OrientMode,
        #[arg(long, value_delimiter = ',', default_value = "max,min")]
        report: Vec<String>,
    },
    /// Signed Wiener index, its minimum, or k-canceling signatures.
    Signed {
        input: String,
        #[arg(long, value_enum, default_value_t = SignedMode::Wiener)]
        mode: SignedMode,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Δ_v = W(G) − W(G − v) for every vertex.
    Soltes {
        input: Option<String>,
        #[arg(long)]
        family: Option<String>,
    },
    /// Sign changes of Sz^α − W^α.
    Alpha {
        input: Option<String>,
        #[arg(long)]
        family: Option<String>,
        /// Closed-form G_{k,ℓ} profile, `k,l`; no order limit.
        #[arg(long)]
        structural: Option<String>,
        #[arg(long, default_value = "0,4,4096")]
        scan: String,
    },
    /// Runs a registered claim, or `all`.
    Verify {
        id: String,
        /// Print JSON regardless of --out.
        #[arg(long)]
        json: bool,
        /// n for ladder-wmax.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Lists the claim registry.
    Claims,
}

fn emit(global: &Global, text: &str) -> CliResult<()> {
    match &global.out_file {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_pair(text: &str) -> CliResult<(u64, u64)> {
    let bad = || CliError::Usage(format!("{text:?} is not k,l"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let g = &cli.global;
    let shard = Shard::parse(&g.shards)?;
    let tau = match g.tau_convention {
        Tau::Self_ => TauConvention::SelfCounts,
        Tau::NoSelf => TauConvention::NoSelf,
    };
    let rows = match cli.cmd {
        Cmd::Invariant { input, family, which } => {
            commands::invariant(&commands::load_graphs(input.as_deref(), family.as_deref())?, &which)?
        }
        Cmd::Enumerate { n, filter, emit: lines, extremal } => {
            let mode = match (lines, extremal) {
                (true, _) => EnumerateMode::Emit,
                (false, Some(v)) => {
                    let direction = match Dir::from_str(&v[1], true).map_err(CliError::Usage)? {
                        Dir::Min => Direction::Min,
                        Dir::Max => Direction::Max,
                    };
                    EnumerateMode::Extremal { objective: v[0].clone(), direction }
                }
                (false, None) => EnumerateMode::Count,
            };
            match commands::enumerate(n, &filter, shard, mode)? {
                EnumerateOutput::Lines(ls) => {
                    emit(g, &ls.iter().map(|l| format!("{l}\n")).collect::<String>())?;
                    return Ok(ExitCode::SUCCESS);
                }
                EnumerateOutput::Rows(r) => r,
            }
        }
        Cmd::Orient { input, mode, report } => commands::orient(&commands::read_input(&input)?, mode, &report, shard, tau)?,
        Cmd::Signed { input, mode, k } => commands::signed(&commands::read_input(&input)?, mode, k, shard)?,
        Cmd::Soltes { input, family } => commands::soltes(&commands::load_graphs(input.as_deref(), family.as_deref())?)?,
        Cmd::Alpha { input, family, structural, scan } => {
            let params = commands::parse_scan(&scan)?;
            let structural = structural.as_deref().map(parse_pair).transpose()?;
            let graphs = match structural {
                Some(_) => vec![],
                None => commands::load_graphs(input.as_deref(), family.as_deref())?,
            };
            commands::alpha(&graphs, structural, params)?
        }
        Cmd::Claims => {
            emit(g, &(claims::listing() + "\n"))?;
            return Ok(ExitCode::SUCCESS);
        }
        Cmd::Verify { id, json, n } => {
            let settings = Settings { tau, seed: g.seed, ladder_n: n };
            let selected: Vec<_> = match id.as_str() {
                "all" => claims::gating().collect(),
                "criteria" => claims::criteria().collect(),
                "evidence" => claims::REGISTRY.iter().filter(|c| !c.gate).collect(),
                one => vec![claims::find(one)?],
            };
            let results = claims::run_all(&selected, &settings, g.threads);
            let rows = results.iter().map(report::row).collect::<CliResult<Vec<_>>>()?;
            let format = if json { Format::Json } else { g.out };
            emit(g, &report::render(&rows, format)?)?;
            for r in &results {
                eprintln!("{:<24} {}", r.id, r.status.as_str());
            }
            let failed = results.iter().any(|r| r.gate && r.status == Status::Fail);
            return Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS });
        }
    };
    emit(g, &report::render(&rows, g.out)?)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
