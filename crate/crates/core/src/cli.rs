//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success or affirmative result, 1 negative check result,
//! 2 usage error, 3 I/O or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cliques::{CliqueConfig, DEFAULT_CLIQUE_CAP};
use crate::error::Error;
use crate::graph::{build_complete, build_grid, build_shrikhande, clique_extension, ExtensionParams, Graph};
use crate::io::{read_any, write_graph};
use crate::lines::find_lines;
use crate::reconstruct::{run_pipeline_with, run_stage, PipelineOptions, Stage, Verdict};
use crate::spectra::{expected_spectrum, integral_spectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Environment variable overriding the maximal-clique output cap.
pub const CLIQUE_CAP_ENV: &str = "GRIDSPECTRA_CLIQUE_CAP";

#[derive(Debug, Parser)]
#[command(name = "gridspectra", version, about = "Clique extensions of grids: construction, exact spectra, reconstruction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named graph as an edge list.
    Construct(ConstructArgs),
    /// Print the certified integral spectrum of a graph.
    Spectrum(SpectrumArgs),
    /// Run a single pipeline stage.
    Check(CheckArgs),
    /// Print the line structure.
    Lines(LinesArgs),
    /// Run the full reconstruction pipeline.
    Pipeline(PipelineArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Grid,
    Extension,
    Shrikhande,
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Base {
    Grid,
    Shrikhande,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    kind: Kind,
    /// Side of the grid, or order of the complete graph.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    s: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    t: Option<u32>,
    /// Base graph for `extension`; `shrikhande` ignores --t.
    #[arg(long, value_enum, default_value = "grid")]
    base: Base,
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    s: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    t: u32,
}

impl ParamArgs {
    fn params(&self) -> ExtensionParams {
        ExtensionParams { s: self.s, t: self.t }
    }
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    input: PathBuf,
    /// Also compare with the extension spectrum for (s, t).
    #[arg(long, requires = "t", value_parser = clap::value_parser!(u32).range(2..))]
    s: Option<u32>,
    #[arg(long, requires = "s", value_parser = clap::value_parser!(u32).range(1..))]
    t: Option<u32>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    input: PathBuf,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_parser = PossibleValuesParser::new(Stage::ALL.map(Stage::name)))]
    stage: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct LinesArgs {
    input: PathBuf,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PipelineArgs {
    input: PathBuf,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long)]
    json: bool,
    /// Keep running stages after the first failure.
    #[arg(long)]
    full_report: bool,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "gridspectra: {msg}");
        code
    }

    fn error(&mut self, e: Error) -> i32 {
        let code = match e {
            Error::Io { .. } | Error::Parse { .. } => EXIT_IO,
            Error::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_NEGATIVE,
        };
        self.fail(code, e)
    }
}

fn clique_config() -> Result<CliqueConfig, String> {
    match std::env::var(CLIQUE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|cap| CliqueConfig { cap })
            .map_err(|_| format!("{CLIQUE_CAP_ENV}={v:?} is not a non-negative integer")),
        Err(_) => Ok(CliqueConfig { cap: DEFAULT_CLIQUE_CAP }),
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink = if code == 0 { &mut io.out } else { &mut io.err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let cfg = match clique_config() {
        Ok(c) => c,
        Err(m) => return io.fail(EXIT_USAGE, m),
    };
    match cli.command {
        Command::Construct(a) => construct(&mut io, a),
        Command::Spectrum(a) => spectrum(&mut io, a),
        Command::Check(a) => check(&mut io, a, cfg),
        Command::Lines(a) => lines(&mut io, a, cfg),
        Command::Pipeline(a) => pipeline(&mut io, a, cfg),
    }
}

fn construct(io: &mut Io, a: ConstructArgs) -> i32 {
    let built: Result<Graph, String> = match a.kind {
        Kind::Grid => a.m.ok_or("grid needs --m".to_string()).and_then(|m| build_grid(m).map_err(|e| e.to_string())),
        Kind::Complete => a
            .m
            .ok_or("complete needs --m".to_string())
            .and_then(|m| build_complete(m).map_err(|e| e.to_string())),
        Kind::Shrikhande => Ok(build_shrikhande()),
        Kind::Extension => match (a.base, a.s, a.t) {
            (_, None, _) => Err("extension needs --s".into()),
            (Base::Grid, _, None) => Err("extension of a grid needs --t".into()),
            (Base::Grid, Some(s), Some(t)) => build_grid(t as usize + 1)
                .and_then(|g| clique_extension(&g, s as usize))
                .map_err(|e| e.to_string()),
            (Base::Shrikhande, Some(s), _) => {
                clique_extension(&build_shrikhande(), s as usize).map_err(|e| e.to_string())
            }
        },
    };
    let g = match built {
        Ok(g) => g,
        Err(m) => return io.fail(EXIT_USAGE, m),
    };
    if let Err(e) = write_graph(&g, &a.out) {
        return io.error(e);
    }
    let _ = writeln!(io.out, "wrote {} ({} vertices, {} edges)", a.out.display(), g.order(), g.size());
    EXIT_OK
}

fn load(io: &mut Io, path: &PathBuf) -> Result<Graph, i32> {
    read_any(path).map_err(|e| io.error(e))
}

fn spectrum(io: &mut Io, a: SpectrumArgs) -> i32 {
    let g = match load(io, &a.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let spec = match integral_spectrum(&g) {
        Ok(Some(s)) => s,
        Ok(None) => {
            let _ = writeln!(io.out, "spectrum is not integral");
            return EXIT_NEGATIVE;
        }
        Err(e) => return io.error(e),
    };
    let _ = write!(io.out, "{spec}");
    if let (Some(s), Some(t)) = (a.s, a.t) {
        let p = ExtensionParams { s, t };
        let expected = match expected_spectrum(p) {
            Ok(e) => e,
            Err(e) => return io.error(e),
        };
        if expected != spec {
            let _ = writeln!(io.out, "differs from the extension spectrum for {p}");
            return EXIT_NEGATIVE;
        }
        let _ = writeln!(io.out, "matches the extension spectrum for {p}");
    }
    EXIT_OK
}

fn check(io: &mut Io, a: CheckArgs, cfg: CliqueConfig) -> i32 {
    let Some(stage) = Stage::from_name(&a.stage) else {
        return io.fail(EXIT_USAGE, format!("unknown stage {:?}", a.stage));
    };
    let g = match load(io, &a.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let r = run_stage(&g, a.params.params(), stage, PipelineOptions { full_report: false, cliques: cfg });
    if a.json {
        let _ = writeln!(io.out, "{}", serde_json::to_string_pretty(&r).expect("serializable"));
    } else {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        match &r.witness {
            Some(w) => {
                let _ = writeln!(io.out, "{tag} {stage}: {w}");
            }
            None => {
                let _ = writeln!(io.out, "{tag} {stage}");
            }
        }
    }
    if r.pass {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn lines(io: &mut Io, a: LinesArgs, cfg: CliqueConfig) -> i32 {
    let g = match load(io, &a.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let ls = match find_lines(&g, a.params.params(), cfg) {
        Ok(ls) => ls,
        Err(e) => return io.error(e),
    };
    if a.json {
        let _ = writeln!(io.out, "{}", serde_json::to_string_pretty(&ls).expect("serializable"));
        return EXIT_OK;
    }
    let _ = writeln!(io.out, "delta={}", ls.delta);
    let _ = writeln!(io.out, "alpha={}", ls.alpha);
    let q: Vec<String> = ls.q.iter().map(u64::to_string).collect();
    let _ = writeln!(io.out, "q={}", q.join(" "));
    if !ls.out_of_range.is_empty() {
        let _ = writeln!(io.out, "out_of_range={:?}", ls.out_of_range);
    }
    for (i, l) in ls.lines.iter().enumerate() {
        let vs: Vec<String> = l.vertices.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(io.out, "line {i} (order {}): {}", l.order(), vs.join(" "));
    }
    EXIT_OK
}

fn pipeline(io: &mut Io, a: PipelineArgs, cfg: CliqueConfig) -> i32 {
    let g = match load(io, &a.input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let report = run_pipeline_with(
        &g,
        a.params.params(),
        PipelineOptions {
            full_report: a.full_report,
            cliques: cfg,
        },
    );
    if a.json {
        let _ = writeln!(io.out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        let _ = write!(io.out, "{report}");
    }
    if report.verdict == Verdict::IsGridExtension {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}
