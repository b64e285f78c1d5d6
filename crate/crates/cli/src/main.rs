mod eval;
mod format;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use fnteich::bounds::{
    bilipschitz_sandwich, fn_from_qc_upper, twist_change_bound, BoundAssumptions,
};
use fnteich::examples::{make_fn_pair, pants1_graph, ExampleKind};
use fnteich::fn_space::{
    fn_distance_variant, parse_input, to_linf, validate_pants_graph, window_upper_bounded,
    write_structure, Metric, StructureWindow,
};
use fnteich::suites::{GridAxis, Suite, SuiteResult};
use fnteich::Error;

use crate::format::sig15;

#[derive(Parser)]
#[command(
    name = "fnteich",
    version,
    about = "Fenchel-Nielsen and quasiconformal numerics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a named function; `fnteich eval list` shows them all.
    Eval {
        name: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// Distance between two structure files (fnstruct or generator specs).
    Dist {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "fn")]
        metric: Metric,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Print the l-infinity embedding of a structure as CSV.
    Embed {
        file: PathBuf,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Comparison bounds between the Fenchel-Nielsen distance and log K.
    Bounds {
        #[arg(long = "d-fn", allow_negative_numbers = true)]
        d_fn: f64,
        /// Upper bound N on decomposition curve lengths.
        #[arg(long, allow_negative_numbers = true)]
        cap: f64,
        /// The constant C(N) of the Bishop length bound.
        #[arg(long = "bishop-c", allow_negative_numbers = true)]
        bishop_c: f64,
        #[arg(long = "log-k", allow_negative_numbers = true)]
        log_k: Option<f64>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Override the leading grid axes in order, as lo:hi:steps.
        #[arg(long = "grid")]
        grid: Vec<GridAxis>,
        /// CSV output file; a directory when the suite is `all`.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long = "max-failures", default_value_t = 20)]
        max_failures: usize,
    },
    /// Write the files of an example family.
    Example {
        kind: ExampleKind,
        #[arg(long, default_value_t = 4)]
        n: u64,
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load(path: &Path, window: Option<usize>) -> Result<StructureWindow, Failure> {
    let text = read(path)?;
    let input = parse_input(&text).map_err(|e| match e {
        Error::Parse { line, reason } => {
            Error::Usage(format!("{}:{line}: {reason}", path.display()))
        }
        other => other,
    })?;
    Ok(input.window(window)?)
}

fn cmd_eval(name: &str, args: &[String]) -> CmdResult {
    if name == "list" {
        return Ok(eval::listing());
    }
    let mut out = eval::eval(name, args)?.join("\n");
    out.push('\n');
    Ok(out)
}

fn cmd_dist(a: &Path, b: &Path, metric: Metric, window: Option<usize>) -> CmdResult {
    let x = load(a, window)?;
    let y = load(b, window)?;
    let d = fn_distance_variant(&x, &y, metric)?;
    Ok(format!(
        "distance {}\nexactness {}\nargmax {}\n",
        sig15(d.value),
        d.exactness.as_str(),
        d.argmax
    ))
}

fn cmd_embed(file: &Path, window: Option<usize>) -> CmdResult {
    let x = load(file, window)?;
    let mut s = String::from("index,log_length,twist_term\n");
    for (i, p) in to_linf(&x).iter().enumerate() {
        let twist = p.twist_term.map_or(String::new(), |t| t.to_string());
        let _ = writeln!(s, "{},{},{}", i + 1, p.log_length, twist);
    }
    Ok(s)
}

fn cmd_bounds(d: f64, cap: f64, bishop_c: f64, log_k: Option<f64>) -> CmdResult {
    let a = BoundAssumptions::new(cap, bishop_c)?;
    let sandwich = bilipschitz_sandwich(d, &a)?;
    let twist = twist_change_bound(d, &a)?;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "combined {}",
        sig15(sandwich.forward.upper.unwrap_or(f64::NAN))
    );
    let _ = writeln!(s, "twist_only {}", sig15(twist.upper.unwrap_or(f64::NAN)));
    let _ = writeln!(
        s,
        "bishop_term 3C*d = {} (log K <= 3C max|log(l_i/m_i)| per pants, each term <= d)",
        sig15(3.0 * bishop_c * d)
    );
    let _ = writeln!(s, "inverse_constant {}", sig15(sandwich.inverse_constant));
    let _ = writeln!(s, "round_trip {}", sig15(sandwich.round_trip));
    let _ = writeln!(s, "L(N) {}", sig15(a.l_of_n));
    if let Some(lk) = log_k {
        let inv = fn_from_qc_upper(lk, &a)?;
        let _ = writeln!(
            s,
            "fn_from_qc_upper {}",
            sig15(inv.upper.unwrap_or(f64::NAN))
        );
    }
    let _ = write!(s, "{}", sandwich.forward);
    Ok(s)
}

fn run_suite(
    suite: Suite,
    grid: &[GridAxis],
    csv: Option<&Path>,
    max_failures: usize,
) -> Result<(SuiteResult, String), Failure> {
    let r = suite.run(grid)?;
    if let Some(path) = csv {
        write(path, &r.to_csv())?;
    }
    let mut text = r.render(max_failures);
    let _ = writeln!(text, "# wall time {:.3} s", r.elapsed.as_secs_f64());
    Ok((r, text))
}

fn cmd_verify(name: &str, grid: &[GridAxis], csv: Option<&Path>, max_failures: usize) -> CmdResult {
    if name != "all" {
        let (r, text) = run_suite(name.parse()?, grid, csv, max_failures)?;
        print!("{text}");
        return if r.passed() {
            Ok(String::new())
        } else {
            Err(Failure::Verification)
        };
    }
    if !grid.is_empty() {
        return Err(Error::Usage("--grid applies to a single suite, not all".into()).into());
    }
    if let Some(dir) = csv {
        fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.to_path_buf(), e))?;
    }
    let start = Instant::now();
    let mut failed = Vec::new();
    for suite in Suite::ALL {
        let path = csv.map(|d| d.join(format!("{}.csv", suite.name())));
        let (r, text) = run_suite(suite, &[], path.as_deref(), max_failures)?;
        println!("{text}");
        if !r.passed() {
            failed.push(suite.name());
        }
    }
    if failed.is_empty() {
        println!("all suites PASS");
    } else {
        println!("failing suites: {}", failed.join(", "));
    }
    println!("# total wall time {:.3} s", start.elapsed().as_secs_f64());
    if failed.is_empty() {
        Ok(String::new())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_example(kind: ExampleKind, n: u64, window: Option<usize>, out: &Path) -> CmdResult {
    fs::create_dir_all(out).map_err(|e| Failure::Io(out.to_path_buf(), e))?;
    let mut s = String::new();
    match kind {
        ExampleKind::Fn1 | ExampleKind::Fn2 => {
            let size = window.unwrap_or(usize::try_from(n).unwrap_or(usize::MAX));
            let (x, y) = make_fn_pair(kind, n, size)?;
            let tag = if kind == ExampleKind::Fn1 {
                "fn1"
            } else {
                "fn2"
            };
            for (suffix, w) in [("x", &x), ("y", &y)] {
                let path = out.join(format!("{tag}_{suffix}.fnstruct"));
                write(&path, &write_structure(w))?;
                let _ = writeln!(s, "wrote {}", path.display());
            }
        }
        ExampleKind::Pants1 => {
            let n_max =
                usize::try_from(n).map_err(|_| Error::Usage(format!("n = {n} is too large")))?;
            let d = pants1_graph(n_max)?;
            let files = [
                ("pants1_original.pantsgraph", d.original.to_text()),
                (
                    "pants1_original.fnstruct",
                    write_structure(&d.original_lengths),
                ),
                ("pants1_recut.pantsgraph", d.recut.to_text()),
                ("pants1_recut.fnstruct", write_structure(&d.recut_lengths)),
            ];
            for (name, text) in files {
                let path = out.join(name);
                write(&path, &text)?;
                let _ = writeln!(s, "wrote {}", path.display());
            }
            for (label, g) in [("original", &d.original), ("recut", &d.recut)] {
                let v = validate_pants_graph(g);
                let _ = writeln!(s, "{label} graph valid {}", v.passed());
            }
            let original = window_upper_bounded(&d.original_lengths, 1.0)?;
            let cap = d
                .recut_lengths
                .entries()
                .iter()
                .map(|c| c.length())
                .fold(1.0, f64::max);
            let recut = window_upper_bounded(&d.recut_lengths, cap)?;
            let _ = writeln!(
                s,
                "original lengths <= 1: {} (first witness {:?})",
                original.bounded, original.witness
            );
            let _ = writeln!(s, "recut lengths <= {}: {}", sig15(cap), recut.bounded);
        }
    }
    Ok(s)
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Verification => 1,
        Failure::Lib(Error::Usage(_) | Error::Parse { .. }) | Failure::Io(..) => 2,
        Failure::Lib(Error::Domain { .. } | Error::Assumption { .. }) => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval { name, args } => cmd_eval(name, args),
        Command::Dist {
            a,
            b,
            metric,
            window,
        } => cmd_dist(a, b, *metric, *window),
        Command::Embed { file, window } => cmd_embed(file, *window),
        Command::Bounds {
            d_fn,
            cap,
            bishop_c,
            log_k,
        } => cmd_bounds(*d_fn, *cap, *bishop_c, *log_k),
        Command::Verify {
            suite,
            grid,
            csv,
            max_failures,
        } => cmd_verify(suite, grid, csv.as_deref(), *max_failures),
        Command::Example {
            kind,
            n,
            window,
            out,
        } => cmd_example(*kind, *n, *window, out),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Io(path, e) => eprintln!("error: {}: {e}", path.display()),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}
