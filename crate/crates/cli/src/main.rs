use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use deltakit::hadamard::hadamard;
use deltakit::promonoidal::{delta, theta, DayClass, KernelClass};
use deltakit::realization::{compare_on_grid, homotopy_point, standard_contraction, BaryPoint, COINCIDENCE_NOTE};
use deltakit::report::{SuiteConfig, SuiteReport};
use deltakit::simplex::{count_maps, enumerate_maps};
use deltakit::{MonotoneMap, Ordinal, Rational};

#[derive(Parser)]
#[command(name = "deltakit", version, about = "Exact checks on the simplex category")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exit 1 if any instance fails.
    Verify(VerifyArgs),
    /// Measure the affine homotopy against the straight-line contraction.
    ProbeDiscrepancy(ProbeArgs),
    /// Evaluate a single operation on literal inputs.
    #[command(subcommand)]
    Evaluate(Evaluate),
    /// List every monotone map [m] -> [n].
    Enumerate { m: usize, n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of all, core, kernel, coherence, hadamard, homotopy, realization.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    grid_denominator: u64,
    /// Raise the costly coherence and Θ bounds to 2.
    #[arg(long)]
    deep: bool,
    /// Seed for --sample.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replace exhaustive relation checks by this many random instances.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = 10)]
    counterexample_limit: usize,
}

#[derive(Args)]
struct ProbeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Value table of α: [m] -> [n], e.g. "0,1".
    #[arg(long)]
    alpha: String,
    #[arg(long, default_value_t = 4)]
    grid_denominator: usize,
}

#[derive(Subcommand)]
enum Evaluate {
    /// α ⊠ β.
    Hadamard {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
    },
    /// δ[α, β, γ] = (α ⊠ β) ∘ γ.
    Delta {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
    },
    /// Θ[π; α, β] with π = [σx, σy, γ].
    Theta {
        #[arg(long)]
        sigma_x: String,
        #[arg(long)]
        sigma_y: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: Option<String>,
    },
    /// Image of (α, β; u) under |H^n|.
    HomotopyPoint {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        n: Option<String>,
    },
    /// Straight-line contraction of w at time t.
    Contraction {
        #[arg(long)]
        w: String,
        #[arg(long)]
        t: String,
    },
}

type CliResult<T> = std::result::Result<T, String>;

fn ordinal(literal: Option<&String>) -> CliResult<Option<Ordinal>> {
    literal
        .map(|s| s.parse::<Ordinal>().map_err(|e| e.to_string()))
        .transpose()
}

fn map(literal: &str, target: Option<&String>) -> CliResult<MonotoneMap> {
    MonotoneMap::parse(literal, ordinal(target)?).map_err(|e| e.to_string())
}

fn map_into(literal: &str, target: usize) -> CliResult<MonotoneMap> {
    MonotoneMap::parse(literal, Some(Ordinal::from(target))).map_err(|e| e.to_string())
}

fn evaluate(op: &Evaluate) -> CliResult<String> {
    let err = |e: deltakit::Error| e.to_string();
    match op {
        Evaluate::Hadamard { alpha, beta, p, q } => {
            let h = hadamard(&map(alpha, p.as_ref())?, &map(beta, q.as_ref())?).map_err(err)?;
            Ok(h.to_string())
        }
        Evaluate::Delta { alpha, beta, gamma, p, q } => {
            let alpha = map(alpha, p.as_ref())?;
            let gamma = map_into(gamma, alpha.source())?;
            let c = KernelClass::new(alpha, map(beta, q.as_ref())?, gamma).map_err(err)?;
            Ok(delta(&c).to_string())
        }
        Evaluate::Theta { sigma_x, sigma_y, gamma, x, y, alpha, beta, p, q } => {
            let sx = map(sigma_x, x.as_ref())?;
            let sy = map(sigma_y, y.as_ref())?;
            let gamma = map_into(gamma, sx.source())?;
            let pi = KernelClass::new(sx, sy, gamma).map_err(err)?;
            let d = DayClass::new(pi, map(alpha, p.as_ref())?, map(beta, q.as_ref())?).map_err(err)?;
            Ok(theta(&d).to_string())
        }
        Evaluate::HomotopyPoint { alpha, beta, u, n } => {
            let u: BaryPoint = u.parse().map_err(err)?;
            let v = homotopy_point(&map(alpha, n.as_ref())?, &map_into(beta, 1)?, &u).map_err(err)?;
            Ok(v.to_string())
        }
        Evaluate::Contraction { w, t } => {
            let w: BaryPoint = w.parse().map_err(err)?;
            let t: Rational = t.parse().map_err(err)?;
            Ok(standard_contraction(&w, &t).map_err(err)?.to_string())
        }
    }
}

fn render_text(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    let width = reports.iter().map(|r| r.suite.len()).max().unwrap_or(0);
    for r in reports {
        let tag = if r.is_pass() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{tag}  {:width$}  instances={} passed={} failed={}",
            r.suite, r.instances, r.passed, r.failed
        );
        for cx in &r.counterexamples {
            let _ = writeln!(
                out,
                "      {} on {}: expected {}, got {}",
                cx.operation, cx.inputs, cx.expected, cx.actual
            );
        }
    }
    let failed = reports.iter().filter(|r| !r.is_pass()).count();
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    let _ = writeln!(
        out,
        "{} checks, {instances} instances, {failed} failing checks",
        reports.len()
    );
    out
}

fn verify(args: &VerifyArgs) -> CliResult<(String, bool)> {
    let config = SuiteConfig {
        suite: args.suite.clone(),
        max_dim: args.max_dim,
        grid_denominator: usize::try_from(args.grid_denominator).map_err(|e| e.to_string())?,
        deep: args.deep,
        sample_seed: args.seed,
        sample: args.sample,
        counterexample_limit: args.counterexample_limit,
    };
    let reports = deltakit::suites::run(&config).map_err(|e| e.to_string())?;
    let pass = reports.iter().all(SuiteReport::is_pass);
    let text = match args.format {
        Format::Text => render_text(&reports),
        Format::Json => serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())? + "\n",
    };
    Ok((text, pass))
}

fn probe(args: &ProbeArgs) -> CliResult<String> {
    let alpha = map_into(&args.alpha, args.n)?;
    let report = compare_on_grid(args.n, args.m, &alpha, args.grid_denominator).map_err(|e| e.to_string())?;
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    let _ = writeln!(out, "grid points: {}", report.points);
    let _ = writeln!(out, "max deviation: {}", report.max_deviation);
    if let Some((point, a, b)) = &report.witness {
        let _ = writeln!(out, "witness: {point}");
        let _ = writeln!(out, "  affine homotopy: {a}");
        let _ = writeln!(out, "  straight-line contraction: {b}");
    }
    let _ = writeln!(out, "vertex agreement: {}", yes_no(report.vertex_agreement));
    let _ = writeln!(out, "slice agreement (t=0, t=1): {}", yes_no(report.slice_agreement));
    if !report.interior_agreement() {
        let _ = writeln!(out, "note: {COINCIDENCE_NOTE}");
    }
    Ok(out)
}

fn enumerate(m: usize, n: usize) -> String {
    let maps = enumerate_maps(m, n);
    let mut out = String::new();
    for f in &maps {
        let _ = writeln!(out, "{f}");
    }
    debug_assert_eq!(count_maps(m, n), maps.len().into());
    let _ = writeln!(out, "count: {}", maps.len());
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(args) => verify(args),
        Command::ProbeDiscrepancy(args) => probe(args).map(|s| (s, true)),
        Command::Evaluate(op) => evaluate(op).map(|s| (s + "\n", true)),
        Command::Enumerate { m, n } => Ok((enumerate(*m, *n), true)),
    };
    match result {
        Ok((text, pass)) => {
            print!("{text}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
