//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use gtg_core::algebra::{smith_diagonal, snf};
use gtg_core::certify::{analyze_with, run_suite, AnalyzeOptions, F2Witness, SUITES};
use gtg_core::groups::{
    abelianization, low_index_subgroups, reidemeister_schreier, todd_coxeter, FreeWord, DEFAULT_MAX_COSETS,
};
use gtg_core::trace::{sigma_polynomial, trace_polynomial, Signature};
use gtg_core::words::{enumerate_words, word_stats, Word};
use serde_json::json;

use crate::io;
use crate::json;
use crate::report::{RunReport, Status};
use crate::reproduce::{reproduce_all, survivor_value, ReproduceOptions, CORRUPTIBLE};
use crate::search::par_search;

pub const WITNESS_ENV: &str = "GTG_WITNESS_PATH";

#[derive(Parser, Debug)]
#[command(name = "gtg", version, about = "Trace polynomials, coset enumeration and certificate checks for ⟨x, y | x³ = y⁴ = w² = 1⟩")]
pub struct Cli {
    /// Emit the report as JSON instead of a table
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for searches (0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// F2 witness file for the k = 5 endgame
    #[arg(long, global = true, env = WITNESS_ENV)]
    pub witness_path: Option<PathBuf>,

    /// Coset limit for Todd–Coxeter
    #[arg(long, global = true)]
    pub max_cosets: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List canonical words with k syllables
    Words {
        #[arg(long)]
        k: usize,
    },
    /// Trace polynomial τ(λ) of a word, and σ(μ) when defined
    Trace {
        #[arg(long)]
        word: String,
    },
    /// Canonical words of length k whose τ has the surviving form
    Search {
        #[arg(long)]
        k: usize,
    },
    /// Run the certificate rules on a word
    Analyze {
        #[arg(long)]
        word: String,
    },
    /// Run named verification suites
    Verify {
        /// Suite name, repeatable or comma separated; `all` runs every suite
        #[arg(long, value_delimiter = ',', required = true)]
        suite: Vec<String>,
        /// Word for the lemma31 suite
        #[arg(long)]
        word: Option<String>,
    },
    /// Coset enumeration and low-index subgroups of a presentation file
    Cosets {
        #[arg(long)]
        presentation: PathBuf,
        /// List subgroup classes up to this index
        #[arg(long)]
        max_index: Option<usize>,
        /// Subgroup generators for a single enumeration, comma separated
        #[arg(long, value_delimiter = ',')]
        subgroup: Vec<String>,
    },
    /// Smith normal form of an integer matrix file
    Snf {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Every search, suite and endgame in one report
    Reproduce {
        #[arg(long, hide = true)]
        corrupt_constant: Option<String>,
    },
}

/// Exit code and the text for each stream.
#[derive(Debug)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<RunReport>,
}

impl Execution {
    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Execution { code: 2, stdout: String::new(), stderr, report: None }
    }
}

pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Execution { code, stdout: text, stderr: String::new(), report: None }
            } else {
                Execution::usage(text)
            };
        }
    };
    let start = Instant::now();
    let mut report = match dispatch(&cli) {
        Ok(r) => r,
        Err(msg) => return Execution::usage(format!("error: {}", msg)),
    };
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    let stdout = if cli.json {
        match report.to_json() {
            Ok(s) => s + "\n",
            Err(e) => return Execution { code: 1, stdout: String::new(), stderr: e + "\n", report: Some(report) },
        }
    } else {
        report.to_text()
    };
    let code = if report.passed() { 0 } else { 1 };
    Execution { code, stdout, stderr: String::new(), report: Some(report) }
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e| format!("word {:?}: {}", s, e))
}

/// The witness at `path` if the file exists. A missing file is not an
/// error; a malformed one is.
fn load_witness(path: Option<&Path>) -> Result<Option<F2Witness>, String> {
    match path {
        Some(p) if p.exists() => io::read_witness(p).map(Some),
        _ => Ok(None),
    }
}

fn witness_note(r: &mut RunReport, path: Option<&Path>, found: bool) {
    match (path, found) {
        (Some(p), true) => r.note(format!("F2 witness read from {}", p.display())),
        (Some(p), false) => r.note(format!(
            "no F2 witness at {}; the k = 5 endgame is checked in its necessary-condition form only",
            p.display()
        )),
        (None, _) => r.note(format!(
            "no F2 witness path (--witness-path or {}); the k = 5 endgame is checked in its necessary-condition form only",
            WITNESS_ENV
        )),
    }
}

fn dispatch(cli: &Cli) -> Result<RunReport, String> {
    let max_cosets = cli.max_cosets.unwrap_or(DEFAULT_MAX_COSETS);
    let wpath = cli.witness_path.as_deref();
    match &cli.command {
        Command::Words { k } => {
            if *k == 0 {
                return Err("--k must be positive".into());
            }
            let mut r = RunReport::new("words", json!({"k": k}));
            for w in enumerate_words(*k) {
                let st = word_stats(&w);
                r.push("words", w.to_string(), Status::Info, json!({"word": w.to_string(), "kappa": st.kappa, "mod12": st.mod12}));
            }
            Ok(r)
        }
        Command::Trace { word } => {
            let w = parse_word(word)?;
            let mut r = RunReport::new("trace", json!({"word": word}));
            let rep = trace_polynomial(&w, Signature::Gamma).map_err(|e| e.to_string())?;
            r.push("trace", format!("τ({}) = {}", w, rep.tau), Status::Info, json::trace_report(&rep));
            if let Ok(s) = sigma_polynomial(&w) {
                r.push(
                    "sigma",
                    format!("σ = {}", s),
                    Status::Info,
                    json!({"variable": Signature::GammaBar.variable(), "coefficients": json::rational_polynomial(&s)}),
                );
            }
            Ok(r)
        }
        Command::Search { k } => {
            if *k == 0 {
                return Err("--k must be positive".into());
            }
            let mut r = RunReport::new("search", json!({"k": k}));
            let found = par_search(*k, cli.jobs).map_err(|e| e.to_string())?;
            for s in &found {
                let label = match &s.verdict {
                    Ok(v) => format!("{}  {}", s.word, v.outcome),
                    Err(e) => format!("{}  {}", s.word, e),
                };
                r.check("survivors", label, s.verdict.is_ok(), survivor_value(s));
            }
            if *k == 1 {
                let opts = AnalyzeOptions { witness: None, max_cosets };
                for w in enumerate_words(1).filter(|w| !found.iter().any(|s| &s.word == w)) {
                    match analyze_with(&w, &opts) {
                        Ok(v) => r.check("analysis", format!("{}  {}", w, v.outcome), true, json::verdict(&v)),
                        Err(e) => r.check("analysis", format!("{}  {}", w, e), false, json::certify_error(&e)),
                    }
                }
            }
            r.note(format!("{} survivors", found.len()));
            Ok(r)
        }
        Command::Analyze { word } => {
            let w = parse_word(word)?;
            let witness = load_witness(wpath)?;
            let mut r = RunReport::new("analyze", json!({"word": word}));
            if w.len() == 5 {
                witness_note(&mut r, wpath, witness.is_some());
            }
            let opts = AnalyzeOptions { witness, max_cosets };
            match analyze_with(&w, &opts) {
                Ok(v) => r.check("verdict", format!("{}  {}", v.word, v.outcome), true, json::verdict(&v)),
                Err(e) => r.check("verdict", format!("{}  {}", w, e), false, json::certify_error(&e)),
            }
            Ok(r)
        }
        Command::Verify { suite, word } => {
            let mut names: Vec<&str> = Vec::new();
            for s in suite {
                if s == "all" {
                    names.extend(SUITES);
                } else if let Some(n) = SUITES.iter().find(|n| **n == s.as_str()) {
                    names.push(n);
                } else {
                    return Err(format!("unknown suite {:?}; known: {}, all", s, SUITES.join(", ")));
                }
            }
            let w = word.as_deref().map(parse_word).transpose()?;
            let witness = load_witness(wpath)?;
            let mut r = RunReport::new("verify", json!({"suites": names, "word": word}));
            if names.contains(&"k5") {
                witness_note(&mut r, wpath, witness.is_some());
            }
            let opts = AnalyzeOptions { witness, max_cosets };
            for name in names {
                let section = format!("suite {}", name);
                match run_suite(name, w.as_ref(), &opts) {
                    Ok(s) => {
                        for c in &s.checks {
                            r.check(&section, format!("{}: {}", c.name, c.detail), c.passed, json::check(c));
                        }
                    }
                    Err(e) => r.check(&section, e.to_string(), false, json::certify_error(&e)),
                }
            }
            Ok(r)
        }
        Command::Cosets { presentation, max_index, subgroup } => {
            let p = io::read_presentation(presentation)?;
            let mut r = RunReport::new(
                "cosets",
                json!({"presentation": p.to_string(), "max_index": max_index, "subgroup": subgroup, "max_cosets": max_cosets}),
            );
            if let Some(n) = max_index {
                if !subgroup.is_empty() {
                    return Err("--subgroup and --max-index are exclusive".into());
                }
                let tables = low_index_subgroups(&p, *n).map_err(|e| e.to_string())?;
                for t in &tables {
                    let q = reidemeister_schreier(&p, t).map_err(|e| e.to_string())?;
                    let ab = abelianization(&q);
                    r.push(
                        "subgroups",
                        format!("index {}  abelianization {}", t.index(), ab),
                        Status::Info,
                        json!({
                            "index": t.index(),
                            "table": json::coset_table(t),
                            "generators": q.ngens(),
                            "relators": q.relators().len(),
                            "abelianization": json::abelian_group(&ab),
                        }),
                    );
                }
                r.note(format!("{} conjugacy classes of subgroups of index <= {}", tables.len(), n));
            } else {
                let sub: Vec<FreeWord> = subgroup
                    .iter()
                    .map(|s| p.parse_word(s).map_err(|e| format!("subgroup generator {:?}: {}", s, e)))
                    .collect::<Result<_, _>>()?;
                let t = todd_coxeter(&p, &sub, max_cosets).map_err(|e| e.to_string())?;
                let what = if sub.is_empty() { "order".to_string() } else { format!("index of ⟨{}⟩", subgroup.join(", ")) };
                r.push(
                    "enumeration",
                    format!("{} = {}", what, t.index()),
                    Status::Info,
                    json!({"index": t.index(), "table": json::coset_table(&t)}),
                );
            }
            Ok(r)
        }
        Command::Snf { matrix } => {
            let m = io::read_matrix(matrix)?;
            let mut r = RunReport::new("snf", json!({"matrix": matrix.display().to_string(), "rows": m.rows(), "cols": m.cols()}));
            let diag: Vec<String> = smith_diagonal(&m).iter().map(|d| d.to_string()).collect();
            let g = snf(&m);
            r.push("snf", format!("diagonal [{}]", diag.join(", ")), Status::Info, json!(diag));
            r.push("snf", format!("cokernel {}", g), Status::Info, json::abelian_group(&g));
            Ok(r)
        }
        Command::Reproduce { corrupt_constant } => {
            if let Some(c) = corrupt_constant {
                if !CORRUPTIBLE.contains(&c.as_str()) {
                    return Err(format!("unknown constant {:?}; known: {}", c, CORRUPTIBLE.join(", ")));
                }
            }
            let witness = load_witness(wpath)?;
            let opts = ReproduceOptions {
                jobs: cli.jobs,
                witness,
                corrupt: corrupt_constant.clone(),
                max_cosets: cli.max_cosets,
            };
            Ok(reproduce_all(&opts))
        }
    }
}
