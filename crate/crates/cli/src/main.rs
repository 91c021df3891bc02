use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use steklov_core::{
    bound_report, check_rigidity, generate_comb, harmonic_extension, parse_graph, steklov_spectrum,
    verify_corpus_streaming, BoundaryFunction, BoundaryGraph, Checks, CombSpec, CorpusSpec, RigidityOptions, Teeth,
};

/// Steklov spectra, lower bounds for the first nonzero eigenvalue and
/// rigidity certificates for weighted graphs with boundary.
#[derive(Parser)]
#[command(name = "steklov", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Steklov eigenvalues and eigenvectors of a graph file.
    Spectrum { file: PathBuf },
    /// Lower bounds for sigma_2 next to the computed value.
    Bounds { file: PathBuf },
    /// Equality verdict and structural certificate.
    #[command(allow_negative_numbers = true)]
    Rigidity {
        file: PathBuf,
        /// Relative tolerance for the numeric equality verdict.
        #[arg(long, default_value_t = 1e-8, value_parser = positive)]
        tol: f64,
        /// Compare stored weights and measures up to this relative tolerance
        /// instead of exactly.
        #[arg(long, value_parser = positive)]
        weight_tol: Option<f64>,
    },
    /// Harmonic extension of boundary values given as {"label": value}.
    Harmonic {
        file: PathBuf,
        #[arg(long)]
        values: PathBuf,
    },
    /// Build a comb whose sigma_2 meets the extended bound.
    #[command(allow_negative_numbers = true)]
    GenerateComb {
        #[arg(long)]
        path_len: usize,
        #[arg(long, value_parser = positive)]
        path_weight: f64,
        #[arg(long, value_parser = positive)]
        endpoint_mass: f64,
        /// JSON teeth description: {"explicit": [...]} or {"random": {...}}.
        #[arg(long)]
        teeth: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the bound and the rigidity characterization over a corpus.
    Verify {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Number of graphs in random mode.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        unit_only: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Random,
    Exhaustive,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err(format!("expected a positive finite number, got {s}")),
        Err(e) => Err(e.to_string()),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<BoundaryGraph, String> {
    parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_values(g: &BoundaryGraph, path: &Path) -> Result<BoundaryFunction, String> {
    let fail = |msg: String| format!("{}: {msg}", path.display());
    let doc: Map<String, Value> = serde_json::from_str(&read(path)?).map_err(|e| fail(e.to_string()))?;
    let mut pairs = Vec::with_capacity(doc.len());
    for (label, value) in &doc {
        let value = value
            .as_f64()
            .ok_or_else(|| fail(format!("value for '{label}' is not a number")))?;
        pairs.push((label.as_str(), value));
    }
    BoundaryFunction::from_labels(g, pairs).map_err(|e| fail(e.to_string()))
}

fn emit(out: &mut impl Write, value: &Value) {
    let _ = writeln!(out, "{value}");
}

fn run(command: Command) -> Result<ExitCode, String> {
    let mut out = io::stdout().lock();
    match command {
        Command::Spectrum { file } => {
            let g = load_graph(&file)?;
            let spectrum = steklov_spectrum(&g).map_err(|e| e.to_string())?;
            emit(&mut out, &spectrum.to_json(&g));
        }
        Command::Bounds { file } => {
            let g = load_graph(&file)?;
            emit(&mut out, &bound_report(&g).map_err(|e| e.to_string())?.to_json());
        }
        Command::Rigidity { file, tol, weight_tol } => {
            let g = load_graph(&file)?;
            let opts = RigidityOptions {
                tol,
                weight_tol,
                ..RigidityOptions::default()
            };
            emit(
                &mut out,
                &check_rigidity(&g, &opts).map_err(|e| e.to_string())?.to_json(&g),
            );
        }
        Command::Harmonic { file, values } => {
            let g = load_graph(&file)?;
            let f = load_values(&g, &values)?;
            let u = harmonic_extension(&g, &f).map_err(|e| e.to_string())?;
            let doc: Map<String, Value> = (0..g.vertex_count())
                .map(|x| (g.label(x).to_string(), json!(u.0[x])))
                .collect();
            emit(&mut out, &Value::Object(doc));
        }
        Command::GenerateComb {
            path_len,
            path_weight,
            endpoint_mass,
            teeth,
            seed,
        } => {
            let teeth = match teeth {
                Some(path) => {
                    Some(serde_json::from_str::<Teeth>(&read(&path)?).map_err(|e| format!("{}: {e}", path.display()))?)
                }
                None => None,
            };
            let spec = CombSpec {
                path_len,
                path_weight,
                endpoint_mass,
                teeth,
            };
            let g = generate_comb(&spec, seed).map_err(|e| e.to_string())?;
            eprintln!("{}", json!({ "seed": seed }));
            emit(&mut out, &g.to_json_value());
        }
        Command::Verify {
            mode,
            n_max,
            samples,
            seed,
            unit_only,
        } => {
            let mut spec = match mode {
                ModeArg::Random => CorpusSpec::random(samples, n_max, seed),
                ModeArg::Exhaustive => CorpusSpec::exhaustive(n_max, unit_only),
            };
            spec.seed = seed;
            spec.unit_only = unit_only;
            let mut found = 0u64;
            let checked = verify_corpus_streaming(&spec, &Checks::default(), |v| {
                found += 1;
                emit(&mut out, &serde_json::to_value(&v).expect("violation serializes"));
            })
            .map_err(|e| e.to_string())?;
            let _ = out.flush();
            let mode = match mode {
                ModeArg::Random => "random",
                ModeArg::Exhaustive => "exhaustive",
            };
            eprintln!(
                "{}",
                json!({ "mode": mode, "seed": seed, "checked": checked, "violations": found })
            );
            if found > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                eprintln!("steklov: missing subcommand (see steklov --help)");
                return ExitCode::from(2);
            }
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("steklov: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("steklov: {}", msg.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
