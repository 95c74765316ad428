use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use squeezelab_cli::config::{
    Command as ScenarioCommand, ConfigError, FigureId, GridAxis, Overrides, Quantity,
    ScenarioConfig,
};
use squeezelab_cli::exit;
use squeezelab_cli::figures::run_figure;
use squeezelab_cli::output::{to_csv, write_outputs};
use squeezelab_cli::sweep::{run_sweep, SweepError, SweepTable};
use squeezelab_cli::verify::{run_verify, CheckGroup, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "squeezelab",
    version,
    about = "Quantum-noise spectra and photon statistics of self-phase-modulated pulses"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quadrature or photon-number spectra over a grid.
    Spectrum(ScenarioArgs),
    /// Frequency-resolved Mandel parameter over a grid.
    Mandel(ScenarioArgs),
    /// Windowed means and pulse photon totals over a grid.
    PhotonNumber(ScenarioArgs),
    /// Data for one of the four reference figures.
    Figure {
        #[arg(value_parser = parse::<FigureId>)]
        id: FigureId,
        #[command(flatten)]
        flags: FlagArgs,
    },
    /// Closed-form identities and oracle agreement; prints a JSON report.
    Verify(VerifyArgs),
    /// Run whatever command the config file names.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        flags: FlagArgs,
    },
}

#[derive(Args)]
struct ScenarioArgs {
    /// JSON scenario file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    flags: FlagArgs,
}

#[derive(Args, Default)]
struct FlagArgs {
    /// Peak nonlinear phase ψ₀.
    #[arg(long, allow_hyphen_values = true)]
    psi0: Option<f64>,
    /// Use the optimal linear phase for reduced frequency Ω₀.
    #[arg(long, allow_hyphen_values = true)]
    omega0: Option<f64>,
    /// Use an explicit linear phase φ₁ (radians).
    #[arg(long, allow_hyphen_values = true)]
    phi1: Option<f64>,
    /// Phase difference Δφ = φ₁ − φ₂ (radians).
    #[arg(long, allow_hyphen_values = true)]
    delta_phi: Option<f64>,
    /// Splitter reflectance R.
    #[arg(long)]
    reflectance: Option<f64>,
    /// Measurement window 𝒯/τ_p.
    #[arg(long)]
    t_over_taup: Option<f64>,
    /// Time within the pulse.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    /// Reduced frequency Ω = ωτ_r.
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long, value_parser = parse::<Quantity>)]
    quantity: Option<Quantity>,
    /// Output port, 1 or 2.
    #[arg(long)]
    port: Option<u8>,
    /// Sweep axis as name=start:stop:count; repeatable.
    #[arg(long = "grid", value_parser = parse::<GridAxis>)]
    grids: Vec<GridAxis>,
    /// CSV path; a .gp script is written beside it. Stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1e-6)]
    tol_ft: f64,
    #[arg(long, default_value_t = 1e-12)]
    tol_exact: f64,
    /// Skip a check group: oracle or algebraic.
    #[arg(long, value_parser = parse::<CheckGroup>)]
    skip: Vec<CheckGroup>,
    /// Also write the JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn parse<T>(s: &str) -> Result<T, String>
where
    T: std::str::FromStr<Err = ConfigError>,
{
    s.parse().map_err(|e: ConfigError| e.to_string())
}

impl FlagArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            psi0: self.psi0,
            omega0: self.omega0,
            phi1: self.phi1,
            delta_phi: self.delta_phi,
            reflectance: self.reflectance,
            t_over_taup: self.t_over_taup,
            t: self.t,
            omega: self.omega,
            quantity: self.quantity,
            port: self.port,
            grids: self.grids.clone(),
            output: self.output.clone(),
        }
    }
}

enum Failure {
    Config(String),
    Verification(String),
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        Self::Config(e.to_string())
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Self::Config(e.to_string())
    }
}

fn emit(table: &SweepTable, cfg: &ScenarioConfig) -> Result<(), Failure> {
    match &cfg.output_path {
        Some(path) => {
            write_outputs(table, path)
                .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("wrote {} rows to {}", table.rows.len(), path.display());
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(to_csv(table).as_bytes())
                .map_err(|e| Failure::Config(format!("cannot write to stdout: {e}")))?;
        }
    }
    Ok(())
}

fn warn_regime(cfg: &ScenarioConfig) -> Result<(), Failure> {
    for w in cfg
        .pulse
        .check_regime(&cfg.medium)
        .map_err(ConfigError::from)?
    {
        eprintln!("warning: {w}");
    }
    if cfg.window.t_over_taup > 1.0 {
        eprintln!("warning: T/tau_p = {} exceeds 1", cfg.window.t_over_taup);
    }
    Ok(())
}

fn scenario(cfg: ScenarioConfig, flags: &FlagArgs) -> Result<(), Failure> {
    if cfg.command == ScenarioCommand::Figure {
        let id = cfg
            .figure
            .ok_or_else(|| ConfigError::field("figure", "required for the figure command"))?;
        return figure(id, flags);
    }
    if cfg.command == ScenarioCommand::Verify {
        return verify(&VerifyArgs {
            tol_ft: 1e-6,
            tol_exact: 1e-12,
            skip: Vec::new(),
            report: cfg.output_path.clone(),
        });
    }
    let mut cfg = cfg;
    flags.overrides().apply(&mut cfg)?;
    warn_regime(&cfg)?;
    let table = run_sweep(&cfg)?;
    emit(&table, &cfg)
}

fn figure(id: FigureId, flags: &FlagArgs) -> Result<(), Failure> {
    let (cfg, table) = run_figure(id, &flags.overrides())?;
    emit(&table, &cfg)
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let options = VerifyOptions {
        tol_ft: args.tol_ft,
        tol_exact: args.tol_exact,
        skip: args.skip.clone(),
    };
    options.validate()?;
    let report = run_verify(&options);
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{json}");
    if let Some(path) = &args.report {
        std::fs::write(path, format!("{json}\n"))
            .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    let failing: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "failed checks: {}",
            failing.join(", ")
        )))
    }
}

fn load(path: Option<&PathBuf>, command: ScenarioCommand) -> Result<ScenarioConfig, Failure> {
    let mut cfg = match path {
        Some(p) => ScenarioConfig::load(p)?,
        None => ScenarioConfig::default(),
    };
    cfg.command = command;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Cmd::Spectrum(a) => scenario(
            load(a.config.as_ref(), ScenarioCommand::Spectrum)?,
            &a.flags,
        ),
        Cmd::Mandel(a) => scenario(load(a.config.as_ref(), ScenarioCommand::Mandel)?, &a.flags),
        Cmd::PhotonNumber(a) => scenario(
            load(a.config.as_ref(), ScenarioCommand::PhotonNumber)?,
            &a.flags,
        ),
        Cmd::Figure { id, flags } => figure(id, &flags),
        Cmd::Verify(args) => verify(&args),
        Cmd::Run { config, flags } => scenario(ScenarioConfig::load(&config)?, &flags),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(exit::SUCCESS),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(exit::CONFIG)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(exit::VERIFICATION)
        }
    }
}
