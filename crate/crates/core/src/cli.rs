//! The `nek` command line: argument parsing and dispatch. Output is
//! buffered in a [`RunOutput`] and written once by the caller.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::checks::{
    check_property_p, check_property_sj, check_property_t, check_property_u, CheckError, SearchCap,
    SjBase, SjOrdering, DEFAULT_MAX_NODES,
};
use crate::classify::{classify, flag_entries, ClassifyOptions, Flag};
use crate::events::EventSet;
use crate::fixtures;
use crate::format::{parse_gse, parse_poset, write_gse, write_poset};
use crate::oracle::enumerate::{enumerate_involutive_posets, MAX_ENUMERATION_SIZE};
use crate::oracle::random::{corpus_parameters, random_gse};
use crate::oracle::verify::{verify_theorems, Corpus, Provenance};
use crate::poset::InvolutivePoset;
use crate::rational::format_rational;
use crate::states::{embed, synthesize_full_proper, Certificate, Impossibility, Synthesis};
use crate::Verdict;

pub const SEED_ENV: &str = "NEK_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PropertySelector {
    #[value(name = "P")]
    P,
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
    #[value(name = "SJ")]
    Sj,
    #[value(name = "all")]
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "nek",
    version,
    about = "Classify sets of numerical events and synthesize state sets on involutive posets"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Human, global = true)]
    pub format: OutputFormat,
    /// Node budget for exhaustive searches; exceeding it yields exit code 3.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub clique_cap: u64,
    #[arg(long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full property report for a GSE file.
    Classify {
        path: PathBuf,
        /// Add missing complements instead of rejecting the file.
        #[arg(long)]
        autoclose: bool,
    },
    /// Evaluate selected properties of a GSE file.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = PropertySelector::All)]
        property: PropertySelector,
        #[arg(long)]
        autoclose: bool,
    },
    /// Decide and construct a full and proper state set for a poset file.
    States { path: PathBuf },
    /// Realize a poset file as a GSE of proper events.
    Embed { path: PathBuf },
    /// Enumerate involutive posets up to isomorphism.
    Enumerate {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..=MAX_ENUMERATION_SIZE as u64))]
        n_max: u64,
        /// Write one `.poset` file per class into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every cross-check on fixtures, enumerated posets, random GSEs
    /// and the given files or directories.
    Verify {
        paths: Vec<PathBuf>,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..=MAX_ENUMERATION_SIZE as u64))]
        n_max: u64,
        /// Number of random GSEs.
        #[arg(long, default_value_t = 1000)]
        random: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a reproducible random GSE.
    Random {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        states: u64,
        #[arg(long, default_value_t = 1)]
        pairs: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        denominator: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn ok(stdout: String) -> Self {
        RunOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: String) -> Self {
        RunOutput {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_gse(path: &Path, autoclose: bool) -> Result<EventSet, String> {
    parse_gse(&read(path)?, autoclose).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_poset(path: &Path) -> Result<InvolutivePoset, String> {
    parse_poset(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn effective_seed(flag: u64) -> Result<u64, String> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{SEED_ENV}={v} is not an unsigned integer")),
        Err(_) => Ok(flag),
    }
}

fn key_values(entries: &BTreeMap<String, String>) -> String {
    let mut out = String::new();
    for (k, v) in entries {
        let _ = writeln!(out, "{k}={v}");
    }
    out
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                RunOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                RunOutput::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> RunOutput {
    let cap = SearchCap {
        max_nodes: cli.clique_cap,
    };
    let result = match &cli.command {
        Command::Classify { path, autoclose } => load_gse(path, *autoclose).map(|g| {
            let report = classify(&g, ClassifyOptions { cap });
            let text = match cli.format {
                OutputFormat::Machine => report.machine(cli.verbose),
                OutputFormat::Human => report.human(cli.verbose),
            };
            RunOutput {
                code: report.exit_code(),
                stdout: text,
                stderr: String::new(),
            }
        }),
        Command::Check {
            path,
            property,
            autoclose,
        } => load_gse(path, *autoclose).map(|g| check(&g, *property, cap, cli)),
        Command::States { path } => load_poset(path).and_then(|p| states(&p, cli)),
        Command::Embed { path } => load_poset(path).and_then(|p| embed_command(&p)),
        Command::Enumerate { n_max, out } => enumerate(*n_max as usize, out.as_deref(), cli),
        Command::Verify {
            paths,
            n_max,
            random,
            seed,
        } => effective_seed(*seed)
            .and_then(|seed| verify(paths, *n_max as usize, *random, seed, cap, cli)),
        Command::Random {
            states,
            pairs,
            denominator,
            seed,
        } => effective_seed(*seed).map(|seed| {
            RunOutput::ok(write_gse(&random_gse(
                *states as usize,
                *pairs as usize,
                *denominator,
                seed,
            )))
        }),
    };
    result.unwrap_or_else(RunOutput::input_error)
}

fn to_flag(r: Result<Verdict, CheckError>) -> Result<Flag, String> {
    match r {
        Ok(v) => Ok(v.into()),
        Err(CheckError::CapExceeded(c)) => Ok(Flag::Inconclusive(c)),
        Err(CheckError::Precondition(p)) => Ok(Flag::NotApplicable(p.to_string())),
        Err(CheckError::Inconsistent(msg)) => Err(msg),
    }
}

fn check(g: &EventSet, property: PropertySelector, cap: SearchCap, cli: &Cli) -> RunOutput {
    use PropertySelector as S;
    let wanted = |s: S| property == s || property == S::All;
    let mut flags: Vec<(&str, Result<Flag, String>)> = Vec::new();
    if wanted(S::P) {
        flags.push(("prop_P", Ok(check_property_p(g).into())));
    }
    if wanted(S::T) {
        flags.push(("prop_T", to_flag(check_property_t(g))));
    }
    if wanted(S::U) {
        flags.push(("prop_U", to_flag(check_property_u(g, cap))));
    }
    if wanted(S::Sj) {
        flags.push((
            "prop_SJ",
            to_flag(check_property_sj(g, SjBase::Atoms, SjOrdering::All, cap)),
        ));
        if cli.verbose {
            for (name, base, ordering) in [
                ("sj_atoms_some", SjBase::Atoms, SjOrdering::Some),
                ("sj_elements_all", SjBase::Elements, SjOrdering::All),
                ("sj_elements_some", SjBase::Elements, SjOrdering::Some),
            ] {
                flags.push((name, to_flag(check_property_sj(g, base, ordering, cap))));
            }
        }
    }
    let mut code = EXIT_OK;
    let mut entries = BTreeMap::new();
    let mut human = String::new();
    for (name, flag) in flags {
        match flag {
            Ok(flag) => {
                if matches!(flag, Flag::Inconclusive(_)) && code == EXIT_OK {
                    code = EXIT_INCONCLUSIVE;
                }
                let kv = flag_entries(g.labels(), name, &flag);
                let _ = write!(human, "{name:<10} {}", kv[0].1);
                for (k, v) in &kv[1..] {
                    let _ = write!(human, "  {}={v}", &k[name.len() + 1..]);
                }
                human.push('\n');
                entries.extend(kv);
            }
            Err(msg) => {
                code = EXIT_VIOLATION;
                let _ = writeln!(human, "{name:<10} internal inconsistency: {msg}");
                entries.insert(format!("{name}.inconsistent"), msg);
            }
        }
    }
    RunOutput {
        code,
        stdout: match cli.format {
            OutputFormat::Machine => key_values(&entries),
            OutputFormat::Human => human,
        },
        stderr: String::new(),
    }
}

fn impossibility_text(p: &InvolutivePoset, reason: &Impossibility) -> String {
    match reason {
        Impossibility::NoFullSet { p: a, q: b } => {
            format!("no-full-set {} {}", p.label(*a), p.label(*b))
        }
        Impossibility::NoProperSet { p: a } => format!("no-proper-set {}", p.label(*a)),
        Impossibility::NoStates => "no-states".to_string(),
    }
}

fn states(p: &InvolutivePoset, cli: &Cli) -> Result<RunOutput, String> {
    let synthesis = synthesize_full_proper(p).map_err(|e| e.to_string())?;
    let (certificates, outcome) = match &synthesis {
        Synthesis::Found {
            states,
            certificates,
        } => (certificates, Ok(states)),
        Synthesis::Impossible {
            reason,
            certificates,
        } => (certificates, Err(reason)),
    };
    let mut human = String::new();
    let mut entries = BTreeMap::new();
    for c in certificates {
        match c {
            Certificate::Separation {
                p: a,
                q: b,
                optimum,
            } => {
                let (la, lb) = (p.label(*a), p.label(*b));
                let _ = writeln!(human, "sep {la} {lb} optimum={}", format_rational(optimum));
                entries.insert(format!("sep.{la}.{lb}"), format_rational(optimum));
            }
            Certificate::Properness { p: a, min, max } => {
                let la = p.label(*a);
                let _ = writeln!(
                    human,
                    "proper {la} min={} max={}",
                    format_rational(min),
                    format_rational(max)
                );
                entries.insert(
                    format!("proper.{la}"),
                    format!("{},{}", format_rational(min), format_rational(max)),
                );
            }
        }
    }
    match outcome {
        Err(reason) => {
            let text = impossibility_text(p, reason);
            let _ = writeln!(human, "impossible {text}");
            entries.insert("result".into(), "impossible".into());
            entries.insert("impossible".into(), text);
        }
        Ok(set) => {
            let _ = writeln!(human, "elements {}", p.labels().join(" "));
            let width = set.len().to_string().len();
            for (i, m) in set.members.iter().enumerate() {
                let values: Vec<String> = m.values.iter().map(format_rational).collect();
                let _ = writeln!(human, "state {} = {}", i + 1, values.join(" "));
                entries.insert(format!("state.{:0width$}", i + 1), values.join(" "));
            }
            let _ = writeln!(human, "full {} proper {}", set.full, set.proper);
            entries.insert("result".into(), "found".into());
            entries.insert("elements".into(), p.labels().join(" "));
            entries.insert("states".into(), set.len().to_string());
            entries.insert("full".into(), set.full.to_string());
            entries.insert("proper".into(), set.proper.to_string());
        }
    }
    Ok(RunOutput::ok(match cli.format {
        OutputFormat::Machine => key_values(&entries),
        OutputFormat::Human => human,
    }))
}

fn embed_command(p: &InvolutivePoset) -> Result<RunOutput, String> {
    match synthesize_full_proper(p).map_err(|e| e.to_string())? {
        Synthesis::Found { states, .. } => {
            let e = embed(p, &states).map_err(|e| e.to_string())?;
            Ok(RunOutput::ok(write_gse(&e.gse)))
        }
        Synthesis::Impossible { reason, .. } => Err(format!(
            "no full and proper state set: {}",
            impossibility_text(p, &reason)
        )),
    }
}

fn enumerate(n_max: usize, out: Option<&Path>, cli: &Cli) -> Result<RunOutput, String> {
    let mut entries = BTreeMap::new();
    let mut human = String::new();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    for n in 2..=n_max {
        let classes = enumerate_involutive_posets(n).map_err(|e| e.to_string())?;
        let _ = writeln!(human, "n={n} classes={}", classes.len());
        entries.insert(format!("classes.{n:02}"), classes.len().to_string());
        for (i, p) in classes.iter().enumerate() {
            let text = write_poset(p);
            if cli.verbose {
                let _ = writeln!(human, "# n={n} class {}\n{text}", i + 1);
            }
            if let Some(dir) = out {
                let file = dir.join(format!("n{n:02}_{:04}.poset", i + 1));
                std::fs::write(&file, text).map_err(|e| format!("{}: {e}", file.display()))?;
            }
        }
    }
    Ok(RunOutput::ok(match cli.format {
        OutputFormat::Machine => key_values(&entries),
        OutputFormat::Human => human,
    }))
}

fn collect_files(path: &Path, out: &mut Vec<PathBuf>) -> Result<(), String> {
    if path.is_dir() {
        let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| format!("{}: {e}", path.display()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .collect();
        entries.sort();
        for e in entries {
            if e.is_dir()
                || matches!(
                    e.extension().and_then(|x| x.to_str()),
                    Some("gse" | "poset")
                )
            {
                collect_files(&e, out)?;
            }
        }
    } else {
        out.push(path.to_path_buf());
    }
    Ok(())
}

fn verify(
    paths: &[PathBuf],
    n_max: usize,
    random: u64,
    seed: u64,
    cap: SearchCap,
    cli: &Cli,
) -> Result<RunOutput, String> {
    let mut corpus = Corpus::default();
    for (name, g) in fixtures::named_gse() {
        corpus.push_gse(Provenance::Fixture(name.into()), g);
    }
    for (name, p) in fixtures::named_posets() {
        corpus.push_poset(Provenance::Fixture(name.into()), p);
    }
    let mut index = 0;
    for n in 2..=n_max {
        for p in enumerate_involutive_posets(n).map_err(|e| e.to_string())? {
            index += 1;
            corpus.push_poset(Provenance::Enumerated(index), p);
        }
    }
    for i in 0..random {
        let (states, pairs, denominator, s) = corpus_parameters(seed, i);
        corpus.push_gse(
            Provenance::Random {
                states,
                pairs,
                denominator,
                seed: s,
            },
            random_gse(states, pairs, denominator, s),
        );
    }
    let mut files = Vec::new();
    for p in paths {
        collect_files(p, &mut files)?;
    }
    for f in files {
        let provenance = Provenance::File(f.display().to_string());
        if f.extension().and_then(|x| x.to_str()) == Some("poset") {
            corpus.push_poset(provenance, load_poset(&f)?);
        } else {
            corpus.push_gse(provenance, load_gse(&f, false)?);
        }
    }
    let report = verify_theorems(&corpus, ClassifyOptions { cap });
    Ok(RunOutput {
        code: report.exit_code(),
        stdout: match cli.format {
            OutputFormat::Machine => report.machine(),
            OutputFormat::Human => report.human(),
        },
        stderr: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn bad_arguments_are_input_errors() {
        assert_eq!(run(["nek", "frobnicate"]).code, EXIT_INPUT);
        assert_eq!(run(["nek", "enumerate", "--n-max", "11"]).code, EXIT_INPUT);
        assert_eq!(
            run(["nek", "classify", "/nonexistent.gse"]).code,
            EXIT_INPUT
        );
    }

    #[test]
    fn random_command() {
        let a = run([
            "nek",
            "random",
            "--states",
            "2",
            "--pairs",
            "1",
            "--denominator",
            "6",
            "--seed",
            "42",
        ]);
        assert_eq!(a.code, 0);
        assert!(a.stdout.starts_with("gse\nstates s1 s2\n"));
    }
}
