use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cloning_qcb::sweep::{self, Mode, RGrid, SweepConfig, SweepRow};
use cloning_qcb::verify::{self, VerifyOptions};
use cloning_qcb::{chernoff_bound, simulator, BlochQubit, CloneSpec, Error, SpectralQubit};

const EXIT_VALIDATION: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Quantum Chernoff bound between mixed qubits and their universal clones.
#[derive(Parser)]
#[command(name = "qcb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chernoff bound between two Bloch vectors.
    Chernoff {
        /// First state as x,y,z.
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        /// Second state as x,y,z.
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
        #[arg(long)]
        precision: Option<usize>,
    },
    /// Chernoff bound between an input of Bloch length r and its N->M clone.
    Clone(SweepArgs),
    /// Fixed N, one curve per M (defaults: N = 2, M = 5,10,50000).
    Fig1(SweepArgs),
    /// Fixed M, one curve per N (defaults: M = 1e6, N = 2,4,10).
    Fig2(SweepArgs),
    /// (N, M) surface at fixed r (defaults: r = 0.3, N, M in 1..20).
    Surface(SweepArgs),
    /// Simulate the cloning isometry and compare with the closed-form clone.
    Simulate {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Spin-up weight of the input (overrides --r).
        #[arg(long)]
        a: Option<f64>,
    },
    /// Run the self-check suite.
    Verify {
        #[arg(long, default_value_t = 1000)]
        sandwich_pairs: usize,
        #[arg(long, default_value_t = 20)]
        minimizer_pairs: usize,
        /// Scale η in the analytic oracle (negative control; breaks verification).
        #[arg(long, hide = true, default_value_t = 1.0)]
        corrupt_eta: f64,
    },
}

#[derive(Args, Default)]
struct SweepArgs {
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    n_list: Option<String>,
    #[arg(long)]
    m_list: Option<String>,
    #[arg(long)]
    r: Option<f64>,
    /// start:stop:step
    #[arg(long)]
    r_grid: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    precision: Option<usize>,
    /// key = value file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

struct Defaults {
    mode: Mode,
    n: &'static str,
    m: &'static str,
    r_grid: RGrid,
}

impl SweepArgs {
    fn resolve(&self, defaults: Defaults) -> Result<SweepConfig, Error> {
        let file = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("reading {}: {e}", path.display())))?;
                sweep::parse_config_file(&text)?
            }
            None => BTreeMap::new(),
        };
        let pick = |flags: [&Option<String>; 2], keys: [&str; 2], default: &str| -> String {
            flags
                .into_iter()
                .find_map(|f| f.clone())
                .or_else(|| keys.iter().find_map(|k| file.get(*k).cloned()))
                .unwrap_or_else(|| default.to_string())
        };
        let n_text = pick([&self.n, &self.n_list], ["n", "n-list"], defaults.n);
        let m_text = pick([&self.m, &self.m_list], ["m", "m-list"], defaults.m);
        // flags beat the file, and within each source a grid beats a single r
        let r_grid = match (&self.r_grid, self.r, file.get("r-grid"), file.get("r")) {
            (Some(g), ..) => RGrid::parse(g)?,
            (None, Some(r), ..) => RGrid::single(r),
            (None, None, Some(g), _) => RGrid::parse(g)?,
            (None, None, None, Some(r)) => RGrid::single(
                r.parse()
                    .map_err(|_| Error::Config(format!("bad r value {r:?}")))?,
            ),
            (None, None, None, None) => defaults.r_grid,
        };
        let precision = match self.precision {
            Some(p) => p,
            None => match file.get("precision") {
                Some(p) => p
                    .parse()
                    .map_err(|_| Error::Config(format!("bad precision {p:?}")))?,
                None => sweep::DEFAULT_PRECISION,
            },
        };
        let output_path = self
            .out
            .clone()
            .or_else(|| file.get("out").map(PathBuf::from));
        let config = SweepConfig {
            mode: defaults.mode,
            n_values: sweep::parse_list(&n_text)?,
            m_values: sweep::parse_list(&m_text)?,
            r_grid,
            output_path,
            precision,
        };
        config.validate()?;
        Ok(config)
    }
}

fn full_grid() -> RGrid {
    SweepConfig::fig1().r_grid
}

fn parse_bloch(text: &str) -> Result<BlochQubit, Error> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Error::Config(format!("bad Bloch vector {text:?}")))?;
    match parts.as_slice() {
        &[x, y, z] => BlochQubit::new(x, y, z),
        _ => Err(Error::Config(format!("Bloch vector needs three components, got {text:?}"))),
    }
}

fn emit(rows: &[SweepRow], config: &SweepConfig) -> Result<(), Error> {
    match &config.output_path {
        Some(path) => {
            let file = File::create(path).map_err(|e| Error::Config(format!("creating {}: {e}", path.display())))?;
            sweep::write_csv(rows, config.precision, BufWriter::new(file))
        }
        None => sweep::write_csv(rows, config.precision, io::stdout().lock()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Chernoff { rho, zeta, precision } => {
            let precision = precision.unwrap_or(sweep::DEFAULT_PRECISION);
            let res = chernoff_bound(&parse_bloch(&rho)?, &parse_bloch(&zeta)?);
            println!("s_star,q_min,xi");
            println!(
                "{},{},{}",
                sweep::format_sig(res.s_star, precision),
                sweep::format_sig(res.q_min, precision),
                sweep::format_sig(res.xi, precision)
            );
        }
        Command::Clone(args) => {
            let config = args.resolve(Defaults {
                mode: Mode::Single,
                n: "2",
                m: "10",
                r_grid: RGrid::single(0.9),
            })?;
            emit(&sweep::run_single(&config)?, &config)?;
        }
        Command::Fig1(args) => {
            let config = args.resolve(Defaults {
                mode: Mode::FixN,
                n: "2",
                m: "5,10,50000",
                r_grid: full_grid(),
            })?;
            emit(&sweep::run_fig1_sweep(&config)?, &config)?;
        }
        Command::Fig2(args) => {
            let config = args.resolve(Defaults {
                mode: Mode::FixM,
                n: "2,4,10",
                m: "1000000",
                r_grid: full_grid(),
            })?;
            emit(&sweep::run_fig2_sweep(&config)?, &config)?;
        }
        Command::Surface(args) => {
            let config = args.resolve(Defaults {
                mode: Mode::FixR,
                n: "1..20",
                m: "1..20",
                r_grid: RGrid::single(0.3),
            })?;
            emit(&sweep::run_fig34_surface(&config)?, &config)?;
        }
        Command::Simulate { sweep: args, a } => {
            let config = args.resolve(Defaults {
                mode: Mode::Simulate,
                n: "1",
                m: "2",
                r_grid: RGrid::single(0.8),
            })?;
            let spec = CloneSpec::new(config.n_values[0], config.m_values[0])?;
            let up_weights: Vec<f64> = match a {
                Some(a) => vec![a],
                None => config.r_grid.points().iter().map(|r| 0.5 * (1.0 + r)).collect(),
            };
            let mut stdout = io::stdout().lock();
            let mut failed = false;
            for a in up_weights {
                let input = SpectralQubit::from_up_weight(a)?;
                let report = simulator::oracle_check(&spec, &input)?;
                let ok = report.max_deviation <= verify::ORACLE_TOL;
                failed |= !ok;
                let [ax, ay, az] = report.analytic.bloch();
                let [sx, sy, sz] = report.simulated.bloch();
                writeln!(
                    stdout,
                    "N={} M={} a={a}: analytic ({ax:.12}, {ay:.12}, {az:.12}) simulated ({sx:.12}, {sy:.12}, {sz:.12}) deviation {:.3e} [{}]",
                    spec.n_in(),
                    spec.m_out(),
                    report.max_deviation,
                    if ok { "PASS" } else { "FAIL" }
                )
                .map_err(|e| Error::Config(e.to_string()))?;
            }
            if failed {
                return Ok(ExitCode::from(EXIT_VERIFICATION));
            }
        }
        Command::Verify {
            sandwich_pairs,
            minimizer_pairs,
            corrupt_eta,
        } => {
            let report = verify::run_verify(&VerifyOptions {
                eta_scale: corrupt_eta,
                sandwich_pairs,
                minimizer_pairs,
                ..VerifyOptions::default()
            });
            for check in &report.checks {
                println!("{check}");
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(EXIT_VERIFICATION));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_VALIDATION)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceCap(_) => EXIT_RESOURCE,
                _ => EXIT_VALIDATION,
            })
        }
    }
}
