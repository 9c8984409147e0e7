//! The `qck` command line. [`run`] returns the exit code and the report
//! text so that tests can drive it without a process.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::axioms::{
    check_cor_infs, check_lemma_ij, check_local_ax_cases, check_lq1, check_lq2, check_lq3, check_lq3p,
    check_stembridge, AxiomError,
};
use crate::characters::{character, component_character, verify_schur_decomposition};
use crate::fuzz::{default_corpus, fuzz};
use crate::graph::{is_seminormal, validate, QuasiCrystalGraph};
use crate::io::{read_graph, write_dot, write_json, write_text};
use crate::quasify::{count_quasi_components, crystal_component_containing, crystal_of_content, quasify};
use crate::report::AxiomReport;
use crate::structure::{components, isomorphic, rank_table, unique_highest_weight, IsoOptions};
use crate::weight::{enumerate_syt, Partition};
use crate::word::{quasi_tensor_power, standard_crystal, tensor_power, Word};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_WITNESS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qck", version, about = "Build and check crystal and quasi-crystal graphs")]
struct Cli {
    /// Refuse to enumerate more vertices than this.
    #[arg(long, global = true, env = "QCK_SIZE_CAP", default_value_t = crate::word::DEFAULT_SIZE_CAP)]
    size_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct a graph.
    Build {
        #[command(subcommand)]
        what: BuildKind,
    },
    /// Run axiom checkers on a graph file.
    Check {
        file: PathBuf,
        /// Comma-separated subset of q,seminormal,lq1,lq2,lq3,lq3p,stembridge,cases,infs,lemij, or `all`.
        #[arg(long, default_value = "all")]
        axioms: String,
    },
    /// List connected components.
    Decompose { file: PathBuf },
    /// Quasify a connected Stembridge crystal.
    Quasify {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the quasi-component count of a shape with its tableau count.
    Count(ShapeArgs),
    /// Print the character of a graph.
    Char {
        file: PathBuf,
        #[arg(long)]
        per_component: bool,
    },
    /// Verify an identity.
    Verify {
        #[command(subcommand)]
        what: VerifyKind,
    },
    /// Isomorphism between two components, given as FILE#INDEX.
    Iso {
        first: String,
        second: String,
        /// Compare highest weights modulo (1,...,1).
        #[arg(long)]
        modulo_ones: bool,
    },
    /// Convert a graph file.
    Export {
        format: ExportFormat,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Measure checker sensitivity to random single-entry mutations.
    Fuzz {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
    },
}

#[derive(Debug, Subcommand)]
enum BuildKind {
    /// The standard crystal B_n.
    Std {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The classical tensor power of B_n.
    TensorPower(PowerArgs),
    /// The quasi-tensor power of B_n.
    QtensorPower(PowerArgs),
    /// The crystal component with the given highest weight.
    Content {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The crystal component containing a word.
    Component {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct PowerArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long)]
    shape: String,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum VerifyKind {
    /// s_λ as a sum of fundamental quasisymmetric polynomials.
    Schur(ShapeArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Text,
    Json,
    Dot,
}

/// Checker names in their canonical order.
pub const AXIOM_NAMES: [&str; 10] = [
    "q", "seminormal", "lq1", "lq2", "lq3", "lq3p", "stembridge", "cases", "infs", "lemij",
];

/// Parses `all` or a comma-separated subset of [`AXIOM_NAMES`].
pub fn parse_axiom_set(spec: &str) -> Result<Vec<&'static str>, String> {
    if spec.trim() == "all" {
        return Ok(AXIOM_NAMES.to_vec());
    }
    let mut chosen = Vec::new();
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match AXIOM_NAMES.iter().find(|&&a| a == name) {
            Some(a) if !chosen.contains(a) => chosen.push(*a),
            Some(_) => {}
            None => return Err(format!("unknown axiom {name:?}")),
        }
    }
    if chosen.is_empty() {
        return Err("empty axiom set".into());
    }
    chosen.sort_by_key(|a| AXIOM_NAMES.iter().position(|b| b == a));
    Ok(chosen)
}

fn run_axiom(g: &QuasiCrystalGraph, name: &str) -> Result<AxiomReport, AxiomError> {
    Ok(match name {
        "q" => validate(g),
        "seminormal" => is_seminormal(g),
        "lq1" => check_lq1(g),
        "lq2" => check_lq2(g),
        "lq3" => check_lq3(g),
        "lq3p" => check_lq3p(g),
        "stembridge" => AxiomReport::merged("stembridge", check_stembridge(g)?),
        "cases" => check_local_ax_cases(g)?,
        "infs" => check_cor_infs(g)?,
        "lemij" => check_lemma_ij(g)?,
        other => unreachable!("axiom {other} is validated by parse_axiom_set"),
    })
}

/// Exit code and report text for one invocation.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli) {
        Ok(result) => result,
        Err(message) => (EXIT_INPUT, format!("error: {message}\n")),
    }
}

type CmdResult = Result<(i32, String), String>;

fn load(path: &Path) -> Result<QuasiCrystalGraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    read_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: String, output: Option<&Path>) -> CmdResult {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok((EXIT_PASS, String::new()))
        }
        None => Ok((EXIT_PASS, text)),
    }
}

fn emit_graph(g: &QuasiCrystalGraph, output: Option<&Path>) -> CmdResult {
    emit(write_text(g).map_err(|e| e.to_string())?, output)
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: crate::weight::WeightError| e.to_string())
}

fn dispatch(cli: Cli) -> CmdResult {
    let cap = cli.size_cap;
    match cli.command {
        Command::Build { what } => build(what, cap),
        Command::Check { file, axioms } => {
            let names = parse_axiom_set(&axioms)?;
            let g = load(&file)?;
            check(&g, &names, axioms.trim() == "all")
        }
        Command::Decompose { file } => decompose(&load(&file)?),
        Command::Quasify { file, output } => {
            let q = quasify(&load(&file)?).map_err(|e| e.to_string())?;
            emit_graph(&q, output.as_deref())
        }
        Command::Count(args) => {
            let shape = parse_shape(&args.shape)?;
            let count = count_quasi_components(&shape, args.n).map_err(|e| e.to_string())?;
            let f = enumerate_syt(&shape).len();
            let ok = count == f;
            let verdict = if ok { "PASS" } else { "FAIL" };
            let text = format!("shape={shape}\tn={}\tcomponents={count}\tf_lambda={f}\t{verdict}\n", args.n);
            Ok((if ok { EXIT_PASS } else { EXIT_WITNESS }, text))
        }
        Command::Char { file, per_component } => char_report(&load(&file)?, per_component),
        Command::Verify {
            what: VerifyKind::Schur(args),
        } => verify_schur(&parse_shape(&args.shape)?, args.n),
        Command::Iso {
            first,
            second,
            modulo_ones,
        } => iso(&first, &second, IsoOptions { modulo_ones }),
        Command::Export { format, file, output } => {
            let g = load(&file)?;
            let text = match format {
                ExportFormat::Text => write_text(&g).map_err(|e| e.to_string())?,
                ExportFormat::Json => write_json(&g).map_err(|e| e.to_string())?,
                ExportFormat::Dot => write_dot(&g),
            };
            emit(text, output.as_deref())
        }
        Command::Fuzz { seed, count } => {
            let outcome = fuzz(&default_corpus(), count, seed);
            let mut text = String::new();
            for s in &outcome.silent {
                let why = if s.isolated { "isolated-vertex" } else { "unexplained" };
                writeln!(text, "silent\t{}\t{}\t{why}", s.graph, s.mutation).unwrap();
            }
            let rate = outcome.detection_rate();
            let ok = rate >= 0.99;
            writeln!(
                text,
                "fuzz\tseed={seed}\tmutations={}\tdetected={}\trate={rate:.4}\t{}",
                outcome.total,
                outcome.detected,
                if ok { "PASS" } else { "FAIL" }
            )
            .unwrap();
            Ok((if ok { EXIT_PASS } else { EXIT_WITNESS }, text))
        }
    }
}

fn build(what: BuildKind, cap: usize) -> CmdResult {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let (g, output) = match what {
        BuildKind::Std { n, output } => (standard_crystal(n).map_err(|e| err(&e))?, output),
        BuildKind::TensorPower(p) => (tensor_power(p.n, p.k, cap).map_err(|e| err(&e))?, p.output),
        BuildKind::QtensorPower(p) => (quasi_tensor_power(p.n, p.k, cap).map_err(|e| err(&e))?, p.output),
        BuildKind::Content { shape, output } => {
            let p = parse_shape(&shape.shape)?;
            (crystal_of_content(&p, shape.n).map_err(|e| err(&e))?, output)
        }
        BuildKind::Component { word, n, output } => {
            let w: Word = word.parse()?;
            (crystal_component_containing(&w, n).map_err(|e| err(&e))?, output)
        }
    };
    emit_graph(&g, output.as_deref())
}

fn check(g: &QuasiCrystalGraph, names: &[&str], all: bool) -> CmdResult {
    let mut text = String::new();
    let mut summary = String::new();
    let mut failed = false;
    for &name in names {
        match run_axiom(g, name) {
            Ok(report) => {
                text.push_str(&report.to_string());
                if report.passed() {
                    writeln!(summary, "summary\t{name}\tpass").unwrap();
                } else {
                    failed = true;
                    writeln!(summary, "summary\t{name}\tfail\t{}", report.witnesses.len()).unwrap();
                }
            }
            Err(AxiomError::Precondition { reason, .. }) if all => {
                writeln!(summary, "summary\t{name}\tskipped\t{reason}").unwrap();
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    text.push_str(&summary);
    Ok((if failed { EXIT_WITNESS } else { EXIT_PASS }, text))
}

fn decompose(g: &QuasiCrystalGraph) -> CmdResult {
    let mut text = String::new();
    let mut code = EXIT_PASS;
    for (k, c) in components(g).iter().enumerate() {
        match unique_highest_weight(c) {
            Ok(u) => {
                let mut hist: BTreeMap<i64, usize> = BTreeMap::new();
                for r in rank_table(c).map_err(|e| e.to_string())?.values() {
                    *hist.entry(*r).or_default() += 1;
                }
                let ranks: Vec<String> = hist.iter().map(|(r, m)| format!("{r}:{m}")).collect();
                writeln!(
                    text,
                    "component\t{k}\tsize={}\thw={}\twt={}\tranks={}",
                    c.len(),
                    g.id(u),
                    g.weight(u),
                    ranks.join(",")
                )
                .unwrap();
            }
            Err(e) => {
                code = EXIT_WITNESS;
                let hws: Vec<String> = c.highest_weight_vertices().iter().map(|&v| g.id(v).to_string()).collect();
                writeln!(text, "component\t{k}\tsize={}\thw=[{}]\t{e}", c.len(), hws.join(",")).unwrap();
            }
        }
    }
    writeln!(text, "components\t{}", components(g).len()).unwrap();
    Ok((code, text))
}

fn char_report(g: &QuasiCrystalGraph, per_component: bool) -> CmdResult {
    let mut text = String::new();
    if per_component {
        for (k, c) in components(g).iter().enumerate() {
            let p = component_character(c).map_err(|e| e.to_string())?;
            writeln!(text, "component\t{k}\t{p}").unwrap();
        }
    }
    let total = character(g).map_err(|e| e.to_string())?;
    writeln!(text, "total\t{total}").unwrap();
    Ok((EXIT_PASS, text))
}

fn verify_schur(shape: &Partition, n: usize) -> CmdResult {
    let d = verify_schur_decomposition(shape, n).map_err(|e| e.to_string())?;
    let mut text = String::new();
    for t in &d.terms {
        let rows: Vec<String> = t
            .tableau
            .rows()
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        writeln!(text, "term\t[{}]\tF{}\t{}", rows.join(" / "), t.composition, t.polynomial).unwrap();
    }
    for c in &d.components {
        let content = c.content.as_ref().map_or("-".to_string(), ToString::to_string);
        writeln!(
            text,
            "component\thw={}\tcontent={content}\tmatches_F={}\t{}",
            c.highest_weight_vertex, c.matches_content, c.character
        )
        .unwrap();
    }
    let verdict = |b: bool| if b { "PASS" } else { "FAIL" };
    writeln!(text, "schur\t{}", d.schur).unwrap();
    writeln!(text, "identity\t{}", verdict(d.polynomial_identity_holds())).unwrap();
    writeln!(text, "multiset\t{}", verdict(d.multisets_match())).unwrap();
    Ok((if d.passed() { EXIT_PASS } else { EXIT_WITNESS }, text))
}

fn split_component_ref(s: &str) -> Result<(PathBuf, usize), String> {
    let (file, index) = s
        .rsplit_once('#')
        .ok_or_else(|| format!("expected FILE#INDEX, got {s:?}"))?;
    let index = index.parse().map_err(|_| format!("bad component index in {s:?}"))?;
    Ok((PathBuf::from(file), index))
}

fn iso(first: &str, second: &str, options: IsoOptions) -> CmdResult {
    let (f1, k1) = split_component_ref(first)?;
    let (f2, k2) = split_component_ref(second)?;
    let (g1, g2) = (load(&f1)?, load(&f2)?);
    let (cs1, cs2) = (components(&g1), components(&g2));
    let c1 = cs1.get(k1).ok_or_else(|| format!("{first}: only {} components", cs1.len()))?;
    let c2 = cs2.get(k2).ok_or_else(|| format!("{second}: only {} components", cs2.len()))?;
    match isomorphic(c1, c2, options) {
        Ok(Some(theta)) => {
            let mut text = String::new();
            for (a, b) in theta.table(c1, c2) {
                writeln!(text, "{a}\t{b}").unwrap();
            }
            Ok((EXIT_PASS, text))
        }
        Ok(None) => Ok((EXIT_PASS, "NONE\n".into())),
        Err(crate::structure::StructureError::TheoremViolation(report)) => Ok((EXIT_WITNESS, report.to_string())),
        Err(e) => Err(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom_sets() {
        assert_eq!(parse_axiom_set("all").unwrap().len(), 10);
        assert_eq!(parse_axiom_set("lq2,q,lq2").unwrap(), ["q", "lq2"]);
        assert!(parse_axiom_set("lq9").is_err());
        assert!(parse_axiom_set("").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["qck", "frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run(["qck", "build", "std"]).0, EXIT_INPUT);
        assert_eq!(run(["qck", "check", "/nonexistent/file"]).0, EXIT_INPUT);
        assert_eq!(run(["qck", "--help"]).0, EXIT_PASS);
    }

    #[test]
    fn build_to_stdout() {
        let (code, text) = run(["qck", "build", "std", "--n", "2"]);
        assert_eq!(code, EXIT_PASS);
        assert!(text.starts_with("qcgraph v1\nrank 2\n"));
    }

    #[test]
    fn size_cap_is_enforced() {
        let (code, text) = run(["qck", "--size-cap", "10", "build", "tensor-power", "--n", "3", "--k", "3"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(text.contains("27"));
    }

    #[test]
    fn count_reports() {
        let (code, text) = run(["qck", "count", "--shape", "2,1,1", "--n", "3"]);
        assert_eq!(code, EXIT_PASS);
        assert!(text.contains("components=3\tf_lambda=3\tPASS"));
    }
}
