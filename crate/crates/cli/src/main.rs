mod affine_cmd;
mod cache;
mod ops;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hallshuffle::verify::{run_suite, CheckResult, Status};
use hallshuffle::{ShuffleElement, Suite, VerifyOptions, VerifyReport};

use cache::Cache;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invariant(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Parser, Debug)]
#[command(name = "hallshuffle", version, about = "Exact computations in the shuffle algebra and the extended affine symmetric group")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached results (default: $HALLSHUFFLE_CACHE, then the platform cache dir)
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
    /// Include the larger cases in `verify`
    #[arg(long, global = true)]
    long: bool,
    /// Largest number of variables `gen`, `mul` and `phi` will symmetrize over
    #[arg(long, global = true, default_value_t = 5, value_name = "K")]
    max_vars: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a named element: H m n | Hprime m n | Sbar m n d | SbarB m n d | Pbar m n d | R d1 .. dn | ribbon m n signs | matclass n
    Gen {
        kind: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
    },
    /// Shuffle product of two elements stored as JSON files
    Mul { lhs: PathBuf, rhs: PathBuf },
    /// Image of a symmetric function in the slope m/n subalgebra
    Phi {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        n: usize,
        expr: String,
    },
    /// Extended affine symmetric group computations on braid words
    Affine {
        #[command(subcommand)]
        cmd: affine_cmd::AffineCmd,
    },
    /// Run a verification suite: arith, shuffle, symfunc, affine, solomon, pbw, all
    Verify { suite: String },
}

fn render(v: &ShuffleElement, format: Format) -> String {
    match format {
        Format::Text => v.to_text(),
        Format::Json => v.to_json(),
        Format::Latex => v.to_latex(),
    }
}

fn read_element(path: &PathBuf) -> Result<ShuffleElement, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    ShuffleElement::from_json(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Recomputes up to `limit` cache entries and compares them with the stored payloads.
fn cache_check(cache: &Cache, limit: usize, max_vars: usize) -> CheckResult {
    let t0 = Instant::now();
    let title = "cached entries match recomputation".to_string();
    let Some(dir) = cache.dir() else {
        return CheckResult::skipped("cache", &title, "no cache directory");
    };
    let entries = cache.entries();
    let mut detail = vec![format!("{} entries in {}", entries.len(), dir.display())];
    let mut ok = true;
    let small: Vec<_> = entries.iter().filter(|e| ops::check_size(&e.op, &e.params, max_vars).is_ok()).collect();
    for e in small.iter().take(limit) {
        let stored = ShuffleElement::from_json(&e.payload.to_string());
        let fresh = ops::compute(&e.op, &e.params);
        let same = matches!((&stored, &fresh), (Ok(a), Ok(b)) if a == b);
        if !same {
            ok = false;
            detail.push(format!("mismatch: {} {}", e.op, e.params.join(" ")));
        }
    }
    detail.push(format!("{} spot-checked", small.len().min(limit)));
    CheckResult { id: "cache".into(), title, status: if ok { Status::Pass } else { Status::Fail }, wall_time: t0.elapsed(), detail }
}

/// Writes a line to stdout; a closed pipe ends output quietly.
fn emit(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Invariant(format!("writing output: {e}"))),
        _ => Ok(()),
    }
}

fn render_report(r: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => r.to_json(),
        Format::Text => r.to_text(),
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{lll}\n\\hline\nid & check & status \\\\\n\\hline\n");
            for c in &r.checks {
                s.push_str(&format!("{} & {} & {} \\\\\n", c.id, c.title.replace('_', "\\_"), c.status));
            }
            s.push_str("\\hline\n\\end{tabular}");
            s
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let cache = Cache::resolve(cli.cache_dir.clone(), cli.no_cache);
    match cli.command {
        Command::Gen { kind, params } => {
            let p = ops::gen_params(&kind, &params)?;
            ops::check_size("gen", &p, cli.max_vars)?;
            emit(&render(&ops::cached(&cache, "gen", &p)?, cli.format))?;
        }
        Command::Mul { lhs, rhs } => {
            let (a, b) = (read_element(&lhs)?, read_element(&rhs)?);
            let p = ops::mul_params(&a, &b);
            ops::check_size("mul", &p, cli.max_vars)?;
            emit(&render(&ops::cached(&cache, "mul", &p)?, cli.format))?;
        }
        Command::Phi { m, n, expr } => {
            let p = ops::phi_params(m, n, &expr)?;
            ops::check_size("phi", &p, cli.max_vars)?;
            emit(&render(&ops::cached(&cache, "phi", &p)?, cli.format))?;
        }
        Command::Affine { cmd } => emit(&affine_cmd::run(cmd, cli.format)?)?,
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(CliError::Usage)?;
            let opts = VerifyOptions { long: cli.long, ..VerifyOptions::default() };
            let mut report = run_suite(suite, &opts);
            // --no-cache only stops reads; the stored entries are still audited
            report.checks.push(cache_check(&Cache::resolve(cli.cache_dir, false), 8, cli.max_vars));
            emit(&render_report(&report, cli.format))?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Invariant(m) => eprintln!("internal error: {m}"),
            }
            ExitCode::from(e.code())
        }
    }
}
