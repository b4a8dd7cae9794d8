//! Command-line front end. `run` is the whole program minus process I/O, so
//! tests can drive it directly.

use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::decider::{
    cross_check, decide, decide_orbifolds_with, hempel_partners, DecideOptions,
    DEFAULT_CATALOGUE_ORDER, DEFAULT_MAX_INDEX,
};
use crate::error::{Error, ParseError};
use crate::fp::catalogue::{default_catalogue, load_catalogue, FiniteGroupTable};
use crate::fp::fingerprint::{fingerprint, QuotientFingerprint};
use crate::grammar;
use crate::invariants::{invariant_report, presentation};
use crate::symbol::{FibrePair, OrbifoldData, SeifertSymbol};

/// Environment variable naming a catalogue file that replaces the shipped one.
pub const CATALOGUE_ENV: &str = "SEIFERT_CATALOGUE";

#[derive(Debug, Parser)]
#[command(name = "seifert", version, about = "Profinite classification of Seifert fibre spaces")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,
    /// Compact JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Read fibre pairs as raw solid-torus rotation invariants (p,q) and
    /// convert each to (p, β) with βq ≡ 1 mod p.
    #[arg(long, global = true)]
    rotation: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Depth {
    /// Largest subgroup index in the cover spectrum.
    #[arg(long, default_value_t = DEFAULT_MAX_INDEX)]
    max_index: usize,
    /// Catalogue file ("name; degree; perm, ..." per line).
    #[arg(long)]
    catalogue: Option<String>,
    /// Keep only catalogue groups of at most this order.
    #[arg(long, default_value_t = DEFAULT_CATALOGUE_ORDER)]
    max_order: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler number, orbifold Euler characteristic, geometry and H1.
    Invariants { symbol: String },
    /// Decide profinite equivalence of two closed or two bounded symbols.
    Decide {
        first: String,
        second: String,
        /// Also compare fingerprints and report agreement with the verdict.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        depth: Depth,
    },
    /// Canonical forms of all symbols related by unit scaling.
    Partners { symbol: String },
    /// Finite-quotient fingerprint of the fundamental group.
    Fingerprint {
        symbol: String,
        #[command(flatten)]
        depth: Depth,
    },
    /// Compare the fingerprints of two symbols.
    Compare {
        first: String,
        second: String,
        #[command(flatten)]
        depth: Depth,
    },
    /// Compare two closed 2-orbifolds.
    OrbifoldDecide {
        first: String,
        second: String,
        #[command(flatten)]
        depth: Depth,
    },
    /// Normal form and canonical form of a symbol.
    Normalize { symbol: String },
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Usage(p.to_string()),
            other => Failure::Domain(other),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Symbol text, or the contents of a file when the argument is a path.
fn argument_text(arg: &str, prefix: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with(prefix) {
        return Ok(arg.to_string());
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")));
    }
    Ok(arg.to_string())
}

struct Context {
    rotation: bool,
    env_catalogue: Option<String>,
}

impl Context {
    fn symbol(&self, arg: &str) -> Result<SeifertSymbol, Failure> {
        let text = argument_text(arg, "SFS")?;
        let s = if self.rotation {
            let raw = grammar::parse_symbol_unchecked(text.trim())?;
            let fibres = raw
                .fibres
                .iter()
                .map(|f| FibrePair::from_rotation(f.alpha, f.beta))
                .collect::<Result<Vec<_>, _>>()?;
            let s = SeifertSymbol::new(raw.b, raw.base, fibres);
            s.validate()?;
            s
        } else {
            text.trim().parse()?
        };
        Ok(s)
    }

    fn orbifold(&self, arg: &str) -> Result<OrbifoldData, Failure> {
        Ok(argument_text(arg, "ORB")?.trim().parse()?)
    }

    fn catalogue(&self, depth: &Depth) -> Result<Vec<FiniteGroupTable>, Failure> {
        let path = depth.catalogue.clone().or_else(|| self.env_catalogue.clone());
        let groups = match path {
            Some(p) => {
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| Failure::Usage(format!("cannot read catalogue {p}: {e}")))?;
                load_catalogue(&text).map_err(Error::from)?
            }
            None => default_catalogue(usize::MAX),
        };
        Ok(groups.into_iter().filter(|g| g.order() <= depth.max_order).collect())
    }

    fn options(&self, depth: &Depth) -> Result<DecideOptions, Failure> {
        Ok(DecideOptions { max_index: depth.max_index, catalogue: Some(self.catalogue(depth)?) })
    }

    fn fingerprint(&self, s: &SeifertSymbol, depth: &Depth) -> Result<QuotientFingerprint, Failure> {
        let cat = self.catalogue(depth)?;
        Ok(fingerprint(&presentation(&s.normalize()), depth.max_index, &cat)?)
    }
}

/// Output of a successful command: JSON plus a plain-text rendering.
struct Report {
    json: Value,
    text: String,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn render_fingerprint_text(f: &QuotientFingerprint) -> String {
    let mut lines = vec![format!("depth: index <= {}, catalogue {}", f.depth.max_index, f.depth.catalogue_id)];
    for (name, count) in &f.hom_counts {
        lines.push(format!("|Hom(G, {name})| = {count}"));
    }
    for r in &f.cover_spectrum {
        let normal = if r.is_normal { ", normal" } else { "" };
        lines.push(format!("index {}{normal}: H1 = {}", r.index, r.h1));
    }
    lines.join("\n")
}

fn verdict_text(v: &Value) -> String {
    let mut head = v["kind"].as_str().unwrap_or_default().to_string();
    if let Some(k) = v.get("k") {
        head.push_str(&format!(" (k = {k})"));
    }
    if let Some(s) = v.get("separator").and_then(Value::as_str) {
        head.push_str(&format!(" (separator: {s})"));
    }
    if let Some(i) = v.get("inconclusive") {
        head.push_str(&format!(" (inconclusive: {i})"));
    }
    format!("{head}\n{}", v["notes"].as_str().unwrap_or_default())
}

fn execute(cli: &Cli, ctx: &Context) -> Result<Report, Failure> {
    match &cli.command {
        Command::Invariants { symbol } => {
            let r = invariant_report(&ctx.symbol(symbol)?);
            let e = r.euler_number.map_or("undefined (bounded)".to_string(), |e| e.to_string());
            let text = format!(
                "symbol: {}\nbase orbifold: {}\nEuler number: {e}\norbifold Euler characteristic: {}\ngeometry: {}\nH1: {}",
                r.symbol, r.base_orbifold, r.chi_orb, r.geometry, r.h1
            );
            Ok(Report { json: to_value(&r), text })
        }
        Command::Decide { first, second, verify, depth } => {
            let (m1, m2) = (ctx.symbol(first)?, ctx.symbol(second)?);
            let opts = ctx.options(depth)?;
            let verdict = decide(&m1, &m2, &opts)?;
            let mut json = to_value(&verdict);
            let mut text = verdict_text(&json);
            if *verify {
                let (f1, f2) = (ctx.fingerprint(&m1, depth)?, ctx.fingerprint(&m2, depth)?);
                let check = cross_check(&verdict, &f1, &f2);
                text.push_str(&format!(
                    "\nverify: fingerprints {}, {} ({})",
                    if check.fingerprints_equal { "equal" } else { "differ" },
                    if check.consistent { "consistent" } else { "INCONSISTENT" },
                    check.note
                ));
                json["verify"] = to_value(&check);
            }
            Ok(Report { json, text })
        }
        Command::Partners { symbol } => {
            let partners: Vec<String> = hempel_partners(&ctx.symbol(symbol)?)?.iter().map(|s| s.to_string()).collect();
            let text = partners.join("\n");
            Ok(Report { json: json!({ "partners": partners }), text })
        }
        Command::Fingerprint { symbol, depth } => {
            let f = ctx.fingerprint(&ctx.symbol(symbol)?, depth)?;
            Ok(Report { json: to_value(&f), text: render_fingerprint_text(&f) })
        }
        Command::Compare { first, second, depth } => {
            let (m1, m2) = (ctx.symbol(first)?, ctx.symbol(second)?);
            let (f1, f2) = (ctx.fingerprint(&m1, depth)?, ctx.fingerprint(&m2, depth)?);
            let differences = f1.differences(&f2);
            let equal = differences.is_empty();
            let text = if equal {
                format!("fingerprints equal at index <= {}", depth.max_index)
            } else {
                format!("fingerprints differ:\n{}", differences.join("\n"))
            };
            let json = json!({ "equal": equal, "differences": differences, "depth": to_value(&f1.depth) });
            Ok(Report { json, text })
        }
        Command::OrbifoldDecide { first, second, depth } => {
            let (o1, o2) = (ctx.orbifold(first)?, ctx.orbifold(second)?);
            let verdict = decide_orbifolds_with(&o1, &o2, &ctx.options(depth)?)?;
            let json = to_value(&verdict);
            Ok(Report { text: verdict_text(&json), json })
        }
        Command::Normalize { symbol } => {
            let s = ctx.symbol(symbol)?;
            let (n, c) = (s.normalize(), s.canonical_form());
            let text = format!("normalized: {n}\ncanonical: {c}");
            Ok(Report { json: json!({ "normalized": n.to_string(), "canonical": c.to_string() }), text })
        }
    }
}

/// Runs the tool on `args` (including the program name). `env_catalogue`
/// stands in for the catalogue environment variable.
pub fn run<I, T>(args: I, env_catalogue: Option<String>) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (rendered, String::new()) } else { (String::new(), rendered) };
            return CliOutput { code, stdout, stderr };
        }
    };
    let ctx = Context { rotation: cli.rotation, env_catalogue };
    match execute(&cli, &ctx) {
        Ok(report) => {
            let stdout = if cli.pretty {
                report.text
            } else {
                serde_json::to_string(&report.json).expect("JSON value serializes")
            };
            CliOutput { code: 0, stdout: stdout + "\n", stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => CliOutput { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(e)) => {
            let body = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            CliOutput { code: 1, stdout: format!("{body}\n"), stderr: format!("error: {e}\n") }
        }
    }
}
