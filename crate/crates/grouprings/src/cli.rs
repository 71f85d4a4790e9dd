//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grouprings_core::group::MAX_ORDER;
use grouprings_core::nd::verify_nd_witness;
use grouprings_core::nd::witness::{thersy_verify, WitnessTriple};
use grouprings_core::structure::LatticeGuard;
use num_bigint::BigInt;
use serde_json::json;

use crate::analysis::{self, Command, Options};
use crate::batch::run_reference_catalog;
use crate::cache::{Cache, Lookup};
use crate::expr::{parse, ParseError};
use crate::report::{fingerprint, timestamp, AnalysisRecord, ARTIFACT_VERSION, SCHEMA_VERSION};
use crate::sl2cmd;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "grouprings", version, about = "Rational group algebras, nilpotent decomposition and SL(2,Z) tools")]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Args)]
pub struct Flags {
    /// Also write the JSON result to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub json_out: Option<PathBuf>,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Lift the group order guard to the hard limit (may be slow).
    #[arg(long, global = true)]
    pub force: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Number of sampled nilpotents for the G(2,2,3) congruence report.
    #[arg(long, global = true, default_value_t = 240)]
    pub samples: usize,
    /// Largest group order for subgroup lattice work (may be slow when raised).
    #[arg(long, global = true, default_value_t = 128)]
    pub max_order: usize,
    /// Largest number of subgroups enumerated (may be slow when raised).
    #[arg(long, global = true, default_value_t = 20_000)]
    pub max_subgroups: usize,
    /// Exit with code 2 when the ND verdict is Undetermined.
    #[arg(long, global = true)]
    pub expect_decided: bool,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Components, properties and ND verdict.
    Analyze { expr: String },
    /// Wedderburn components from strong Shoda pairs.
    Components { expr: String },
    /// Nilpotent decomposition verdict.
    Nd { expr: String },
    /// DK property.
    Dk { expr: String },
    /// SN by three routes, and SSN.
    Sn { expr: String },
    /// An explicit ND witness.
    Witness { expr: String },
    /// SL(2, Z) tools.
    Sl2z {
        #[command(subcommand)]
        op: Sl2Op,
    },
    /// Runs every check over the reference catalog.
    Batch {
        #[arg(long, value_enum)]
        catalog: Catalog,
    },
    /// Re-checks the witnesses stored in a JSON record.
    Verify { file: PathBuf },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Catalog {
    Paper,
}

#[derive(Debug, Subcommand)]
pub enum Sl2Op {
    /// Conjugates a unipotent matrix to [[1, m], [0, 1]].
    Normalize { matrix: String },
    /// Congruence level gcd(a - 1, b, c, d - 1).
    Level { matrix: String },
    /// Membership in V_m.
    InV {
        matrix: String,
        #[arg(long)]
        level: BigInt,
    },
    /// Whether a 2x2 integer matrix is nilpotent.
    Nilpotent { matrix: String },
    /// Whether the (2, 3, n) triangle group is finite.
    Triangle { n: u64 },
}

fn render_parse_error(src: &str, e: &ParseError) -> String {
    let col = src[..e.offset().min(src.len())].chars().count();
    format!("{e}\n  {src}\n  {}^", " ".repeat(col))
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, flags: &Flags, text: &str) -> i32 {
        if let Some(path) = &flags.json_out {
            if let Err(e) = std::fs::write(path, text) {
                return self.fail(format!("cannot write {}: {e}", path.display()));
            }
        }
        match self.out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => self.fail(format!("cannot write output: {e}")),
        }
    }

    fn fail(&mut self, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        EXIT_ERROR
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn options(flags: &Flags) -> Options {
    let max_order = if flags.force { MAX_ORDER } else { flags.max_order };
    Options {
        guard: LatticeGuard { max_order, max_subgroups: flags.max_subgroups },
        seed: flags.seed,
        samples: flags.samples,
    }
}

fn group_command(io: &mut Io<'_>, flags: &Flags, cmd: Command, src: &str) -> i32 {
    let expr = match parse(src) {
        Ok(e) => e,
        Err(e) => return io.fail(render_parse_error(src, &e)),
    };
    let g = match expr.build() {
        Ok(g) => g,
        Err(e) => return io.fail(e),
    };
    let opts = options(flags);
    let fp = fingerprint(&g);
    let args = opts.cache_args(&expr);
    let cache = if flags.no_cache { None } else { Cache::from_env() };
    let cached = match cache.as_ref().map(|c| c.get(&fp, cmd.name(), &args)) {
        Some(Lookup::Hit(text)) => Some(text),
        Some(Lookup::Corrupt) => {
            let _ = writeln!(io.err, "warning: ignoring a corrupt cache entry; recomputing");
            None
        }
        _ => None,
    };
    let text = match cached {
        Some(t) => t,
        None => {
            let rec = match analysis::run(cmd, &expr, &g, &opts) {
                Ok(r) => r,
                Err(e) => return io.fail(e),
            };
            let text = pretty(&rec);
            if let Some(c) = &cache {
                if let Err(e) = c.put(&fp, cmd.name(), &args, &text) {
                    let _ = writeln!(io.err, "warning: cache write to {} failed: {e}", c.dir().display());
                }
            }
            text
        }
    };
    let code = io.emit(flags, &text);
    if code != EXIT_OK {
        return code;
    }
    let rec: AnalysisRecord = match serde_json::from_str(&text) {
        Ok(r) => r,
        Err(e) => return io.fail(format!("malformed record: {e}")),
    };
    if flags.expect_decided && rec.nd_status() == Some("Undetermined") {
        let _ = writeln!(io.err, "ND verdict is Undetermined");
        return EXIT_UNDECIDED;
    }
    EXIT_OK
}

fn verify(io: &mut Io<'_>, flags: &Flags, file: &PathBuf) -> i32 {
    let rec: AnalysisRecord = match std::fs::read(file).map_err(|e| e.to_string()).and_then(|b| {
        serde_json::from_slice(&b).map_err(|e| e.to_string())
    }) {
        Ok(r) => r,
        Err(e) => return io.fail(format!("cannot read {}: {e}", file.display())),
    };
    let g = match parse(&rec.group.expr).map_err(|e| e.to_string()).and_then(|e| e.build().map_err(|e| e.to_string())) {
        Ok(g) => g,
        Err(e) => return io.fail(e),
    };
    let fingerprint_matches = fingerprint(&g) == rec.group.fingerprint;
    let mut witnesses = rec.witnesses.clone();
    for nd in [rec.nd.as_ref(), rec.properties.as_ref().map(|p| &p.nd)].into_iter().flatten() {
        witnesses.extend(nd.witness.iter().filter(|w| !rec.witnesses.contains(w)).cloned());
    }
    let witness_results: Vec<bool> = witnesses
        .iter()
        .map(|w| w.to_witness(&g).map(|w| verify_nd_witness(&g, &w)).unwrap_or(false))
        .collect();
    let triple = rec.triple.as_ref().map(|t| {
        let parts = (t.r.to_element(&g), t.s.to_element(&g), t.y.to_element(&g), t.e.to_element(&g));
        match parts {
            (Ok(r), Ok(s), Ok(y), Ok(e)) => thersy_verify(&WitnessTriple { r, s, y, e, p: t.p }, &g),
            _ => false,
        }
    });
    let checked = !witness_results.is_empty() || triple.is_some();
    let valid = fingerprint_matches && checked && witness_results.iter().all(|&b| b) && triple.unwrap_or(true);
    let out = json!({
        "schema_version": SCHEMA_VERSION,
        "artifact_version": ARTIFACT_VERSION,
        "command": "verify",
        "timestamp": timestamp(),
        "group": rec.group,
        "fingerprint_matches": fingerprint_matches,
        "witnesses": witness_results,
        "triple": triple,
        "valid": valid,
    });
    let code = io.emit(flags, &pretty(&out));
    if code != EXIT_OK {
        return code;
    }
    if valid {
        EXIT_OK
    } else {
        io.fail("verification failed")
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut io = Io { out, err };
    let flags = &cli.flags;
    match &cli.command {
        Cmd::Analyze { expr } => group_command(&mut io, flags, Command::Analyze, expr),
        Cmd::Components { expr } => group_command(&mut io, flags, Command::Components, expr),
        Cmd::Nd { expr } => group_command(&mut io, flags, Command::Nd, expr),
        Cmd::Dk { expr } => group_command(&mut io, flags, Command::Dk, expr),
        Cmd::Sn { expr } => group_command(&mut io, flags, Command::Sn, expr),
        Cmd::Witness { expr } => group_command(&mut io, flags, Command::Witness, expr),
        Cmd::Sl2z { op } => {
            let v = match op {
                Sl2Op::Normalize { matrix } => sl2cmd::normalize(matrix),
                Sl2Op::Level { matrix } => sl2cmd::level(matrix),
                Sl2Op::InV { matrix, level } => sl2cmd::in_v_cmd(matrix, level),
                Sl2Op::Nilpotent { matrix } => sl2cmd::nilpotent(matrix),
                Sl2Op::Triangle { n } => sl2cmd::triangle(*n),
            };
            match v {
                Ok(v) => io.emit(flags, &pretty(&v)),
                Err(e) => io.fail(e),
            }
        }
        Cmd::Batch { catalog: Catalog::Paper } => {
            let report = run_reference_catalog(flags.seed);
            for c in &report.criteria {
                let _ = writeln!(io.err, "criterion {} {}: {}", c.id, c.title, if c.passed { "PASS" } else { "FAIL" });
                for check in c.checks.iter().filter(|k| !k.passed) {
                    let _ = writeln!(io.err, "  failed {}: {}", check.name, check.detail);
                }
            }
            let code = io.emit(flags, &pretty(&report));
            match (code, report.passed) {
                (EXIT_OK, true) => EXIT_OK,
                (EXIT_OK, false) => EXIT_UNDECIDED,
                (c, _) => c,
            }
        }
        Cmd::Verify { file } => verify(&mut io, flags, file),
    }
}
