//! Command-line surface: seed closure, pinor groups, 4D induction, the
//! 240-vector construction, and the self-verification suite.
//!
//! Every artifact is emitted in a stable order, so repeated runs produce
//! byte-identical output. Formats are text (default), JSON, and DOT; DOT is
//! defined only for the verbs that produce a diagram (induce and e8), and
//! verify is a plain pass/fail table, so unsupported combinations are
//! rejected as usage errors before any computation starts.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::clifford::Versor;
use crate::e8::{build_e8, cartan_e8, coxeter_number, expand_8d, ReducedRootSet};
use crate::induce::induce_from_pin;
use crate::rootsys::{
    cartan, close, dynkin, extract_simple_roots, seed, CartanMatrix, DynkinGraph, GoldenVec,
    RootSystem, SeedName,
};
use crate::verify::{verify, VerifyTarget};
use crate::versor::{
    conjugacy_class_sizes, contains_inversion, even_subgroup, generate_pin, VersorGroup,
};
use crate::{Error, Result, DEFAULT_CAP};

/// Parsed command line.
#[derive(Parser, Debug)]
#[command(
    name = "spinor-roots",
    version,
    about = "Exact construction of 4D and E8 root systems from 3D reflection groups"
)]
pub struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,

    /// Write the artifact to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Size cap for reflection closure and group generation
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Close a seed entry into its full 3D root system
    Roots {
        /// Seed catalog entry
        #[arg(ignore_case = true)]
        target: Catalog,
    },
    /// Generate the pinor group of a seed entry
    Pin {
        /// Seed catalog entry
        #[arg(ignore_case = true)]
        target: Catalog,
    },
    /// Induce the 4D root system from a seed entry's spinors
    Induce {
        /// Seed catalog entry
        #[arg(ignore_case = true)]
        target: Catalog,
    },
    /// Construct the 240-vector set from the H3 pinor group
    E8,
    /// Run the invariant suite and print a pass/fail table
    Verify {
        /// Suite to run
        #[arg(ignore_case = true)]
        target: Target,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Catalog {
    A3,
    B3,
    H3,
}

impl From<Catalog> for SeedName {
    fn from(c: Catalog) -> SeedName {
        match c {
            Catalog::A3 => SeedName::A3,
            Catalog::B3 => SeedName::B3,
            Catalog::H3 => SeedName::H3,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Target {
    A3,
    B3,
    H3,
    E8,
}

impl From<Target> for VerifyTarget {
    fn from(t: Target) -> VerifyTarget {
        match t {
            Target::A3 => VerifyTarget::A3,
            Target::B3 => VerifyTarget::B3,
            Target::H3 => VerifyTarget::H3,
            Target::E8 => VerifyTarget::E8,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
}

/// An artifact ready to emit, plus the process exit code.
#[derive(Debug)]
struct Artifact {
    text: String,
    exit: i32,
}

impl Artifact {
    fn ok(text: String) -> Self {
        Artifact { text, exit: 0 }
    }
}

/// JSON shape of the `pin` verb.
#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct PinDump {
    order: usize,
    even_order: usize,
    n_classes: usize,
    has_inversion: bool,
    generators: Vec<Versor>,
    elements: Vec<Versor>,
}

/// JSON shape of the `induce` verb.
#[derive(Serialize)]
struct InduceDump {
    root_system: RootSystem,
    simple_roots: Vec<GoldenVec>,
    cartan: CartanMatrix,
    dynkin_edges: Vec<(usize, usize, u32)>,
}

/// JSON shape of the `e8` verb.
#[derive(Serialize)]
struct E8Dump {
    roots: Vec<GoldenVec>,
    simple_roots: Vec<GoldenVec>,
    cartan: CartanMatrix,
    coxeter_number: usize,
    expanded: Vec<Vec<[i64; 2]>>,
}

fn ratio_pair(r: &BigRational) -> Result<[i64; 2]> {
    let numer = i64::try_from(r.numer())
        .map_err(|_| Error::Construction("coordinate numerator exceeds i64".into()))?;
    let denom = i64::try_from(r.denom())
        .map_err(|_| Error::Construction("coordinate denominator exceeds i64".into()))?;
    Ok([numer, denom])
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn reject_dot(verb: &str) -> Error {
    Error::Usage(format!(
        "DOT output is not defined for `{}`; it is available for `induce` and `e8`",
        verb
    ))
}

fn closed_system(name: SeedName, cap: usize) -> Result<RootSystem> {
    close(&seed(name), cap)
}

fn pin_group(name: SeedName, cap: usize) -> Result<(RootSystem, VersorGroup)> {
    let rs = closed_system(name, cap)?;
    let pin = generate_pin(&rs, cap)?;
    Ok((rs, pin))
}

fn roots_text(name: SeedName, rs: &RootSystem) -> String {
    let mut out = format!("root system {}\ndim {}\nroots {}\n", name, rs.dim(), rs.len());
    for r in rs.iter() {
        let _ = writeln!(out, "{}", r);
    }
    out
}

fn roots_cmd(name: SeedName, format: OutputFormat, cap: usize) -> Result<Artifact> {
    let rs = closed_system(name, cap)?;
    match format {
        OutputFormat::Text => Ok(Artifact::ok(roots_text(name, &rs))),
        OutputFormat::Json => Ok(Artifact::ok(json_line(&rs)?)),
        OutputFormat::Dot => Err(reject_dot("roots")),
    }
}

fn pin_cmd(name: SeedName, format: OutputFormat, cap: usize) -> Result<Artifact> {
    if format == OutputFormat::Dot {
        return Err(reject_dot("pin"));
    }
    let (_, pin) = pin_group(name, cap)?;
    let spin = even_subgroup(&pin);
    let dump = PinDump {
        order: pin.order(),
        even_order: spin.order(),
        n_classes: conjugacy_class_sizes(&spin)?.len(),
        has_inversion: contains_inversion(&pin),
        generators: pin.generators().to_vec(),
        elements: pin.iter().cloned().collect(),
    };
    match format {
        OutputFormat::Json => Ok(Artifact::ok(json_line(&dump)?)),
        _ => {
            let mut out = format!(
                "pinor group {}\norder {}\neven order {}\nconjugacy classes {}\ncontains inversion {}\ngenerators {}\n",
                name, dump.order, dump.even_order, dump.n_classes, dump.has_inversion,
                dump.generators.len()
            );
            for g in &dump.generators {
                let _ = writeln!(out, "  {}", g);
            }
            let _ = writeln!(out, "elements {}", dump.elements.len());
            for e in &dump.elements {
                let _ = writeln!(out, "  {}", e);
            }
            Ok(Artifact::ok(out))
        }
    }
}

fn dynkin_text(graph: &DynkinGraph) -> String {
    let mut out = String::from("dynkin\n");
    for &(i, j, m) in graph.edges() {
        let _ = writeln!(out, "  α{} -{}- α{}", i + 1, m, j + 1);
    }
    out
}

fn induce_cmd(name: SeedName, format: OutputFormat, cap: usize) -> Result<Artifact> {
    let (_, pin) = pin_group(name, cap)?;
    let rs4 = induce_from_pin(&pin)?;
    let simple = extract_simple_roots(&rs4)?;
    let c = cartan(&simple)?;
    let graph = dynkin(&c)?;
    match format {
        OutputFormat::Dot => Ok(Artifact::ok(graph.to_dot())),
        OutputFormat::Json => Ok(Artifact::ok(json_line(&InduceDump {
            root_system: rs4,
            simple_roots: simple,
            cartan: c,
            dynkin_edges: graph.edges().to_vec(),
        })?)),
        OutputFormat::Text => {
            let mut out = format!(
                "induced 4D root system from {}\ndim {}\nroots {}\n",
                name,
                rs4.dim(),
                rs4.len()
            );
            for r in rs4.iter() {
                let _ = writeln!(out, "{}", r);
            }
            let _ = writeln!(out, "simple roots {}", simple.len());
            for (k, s) in simple.iter().enumerate() {
                let _ = writeln!(out, "  α{} = {}", k + 1, s);
            }
            let _ = writeln!(out, "cartan\n{}", c);
            out.push_str(&dynkin_text(&graph));
            Ok(Artifact::ok(out))
        }
    }
}

fn e8_cmd(format: OutputFormat, cap: usize) -> Result<Artifact> {
    let (_, pin) = pin_group(SeedName::H3, cap)?;
    let set = build_e8(&pin)?;
    let c = cartan_e8(&set)?;
    let graph = dynkin(&c)?;
    match format {
        OutputFormat::Dot => Ok(Artifact::ok(graph.to_dot())),
        OutputFormat::Json => {
            let h = coxeter_number(&set)?;
            let dump = e8_dump(&set, c, h)?;
            Ok(Artifact::ok(json_line(&dump)?))
        }
        OutputFormat::Text => {
            let h = coxeter_number(&set)?;
            let mut out = format!("E8 root set via Pin(H3)\nroots {}\ncoxeter number {}\n", set.len(), h);
            let _ = writeln!(out, "simple roots {}", set.simple_roots().len());
            for (k, s) in set.simple_roots().iter().enumerate() {
                let _ = writeln!(out, "  α{} = {}", k + 1, s);
            }
            let _ = writeln!(out, "cartan\n{}", c);
            out.push_str(&dynkin_text(&graph));
            let _ = writeln!(out, "roots (reduced coordinates)");
            for r in set.iter() {
                let _ = writeln!(out, "{}", r);
            }
            Ok(Artifact::ok(out))
        }
    }
}

fn e8_dump(set: &ReducedRootSet, cartan: CartanMatrix, coxeter: usize) -> Result<E8Dump> {
    let mut expanded = Vec::with_capacity(set.len());
    for r in set.iter() {
        let coords = expand_8d(r);
        let mut row = Vec::with_capacity(coords.len());
        for c in &coords {
            row.push(ratio_pair(c)?);
        }
        expanded.push(row);
    }
    Ok(E8Dump {
        roots: set.iter().cloned().collect(),
        simple_roots: set.simple_roots().to_vec(),
        cartan,
        coxeter_number: coxeter,
        expanded,
    })
}

fn verify_cmd(target: VerifyTarget, format: OutputFormat) -> Result<Artifact> {
    if format != OutputFormat::Text {
        return Err(Error::Usage(
            "`verify` prints a plain pass/fail table; use the default text output".into(),
        ));
    }
    let report = verify(target);
    Ok(Artifact {
        text: report.render_table(),
        exit: if report.passed() { 0 } else { 1 },
    })
}

fn execute(cli: &Cli) -> Result<Artifact> {
    let cap = cli.cap.unwrap_or(DEFAULT_CAP);
    match &cli.verb {
        Verb::Roots { target } => roots_cmd((*target).into(), cli.output, cap),
        Verb::Pin { target } => pin_cmd((*target).into(), cli.output, cap),
        Verb::Induce { target } => induce_cmd((*target).into(), cli.output, cap),
        Verb::E8 => e8_cmd(cli.output, cap),
        Verb::Verify { target } => verify_cmd((*target).into(), cli.output),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{}", text),
    }
    Ok(())
}

/// Parses the process arguments, runs the command, and returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(artifact) => {
            if let Err(e) = emit(&cli.out, &artifact.text) {
                eprintln!("error: {}", e);
                return 1;
            }
            artifact.exit
        }
        Err(Error::Usage(msg)) => {
            eprintln!("usage error: {}", msg);
            2
        }
        Err(e) => {
            eprintln!("error: {}", e);
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        let mut argv = vec!["spinor-roots"];
        argv.extend_from_slice(args);
        Cli::try_parse_from(argv).expect("arguments parse")
    }

    #[test]
    fn roots_json_round_trips_and_counts() {
        let artifact = execute(&parse(&["roots", "A3", "--output", "json"])).unwrap();
        assert_eq!(artifact.exit, 0);
        let rs: RootSystem = serde_json::from_str(&artifact.text).unwrap();
        assert_eq!(rs.len(), 12);
        assert_eq!(rs.dim(), 3);
        let again = json_line(&rs).unwrap();
        assert_eq!(again, artifact.text);
    }

    #[test]
    fn roots_text_is_deterministic() {
        let a = execute(&parse(&["roots", "h3"])).unwrap();
        let b = execute(&parse(&["roots", "H3"])).unwrap();
        assert_eq!(a.text, b.text);
        assert!(a.text.starts_with("root system H3\ndim 3\nroots 30\n"));
        assert_eq!(a.text.lines().count(), 33);
    }

    #[test]
    fn roots_rejects_dot() {
        let err = execute(&parse(&["roots", "a3", "--output", "dot"])).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn pin_json_round_trips() {
        let artifact = execute(&parse(&["pin", "a3", "--output", "json"])).unwrap();
        let dump: PinDump = serde_json::from_str(&artifact.text).unwrap();
        assert_eq!(dump.order, 48);
        assert_eq!(dump.even_order, 24);
        assert_eq!(dump.n_classes, 7);
        assert!(!dump.has_inversion);
        assert_eq!(dump.elements.len(), 48);
        assert_eq!(dump.generators.len(), 12);
        let again = json_line(&dump).unwrap();
        assert_eq!(again, artifact.text);
    }

    #[test]
    fn pin_text_reports_stats_and_rejects_dot() {
        let artifact = execute(&parse(&["pin", "b3"])).unwrap();
        assert!(artifact.text.contains("order 96\n"));
        assert!(artifact.text.contains("even order 48\n"));
        assert!(artifact.text.contains("contains inversion true\n"));
        let err = execute(&parse(&["pin", "b3", "--output", "dot"])).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn induce_emits_dynkin_dot() {
        let artifact = execute(&parse(&["induce", "a3", "--output", "dot"])).unwrap();
        assert!(artifact.text.starts_with("graph"));
        assert!(artifact.text.contains("α1"));
        assert!(artifact.text.contains("α4"));
        let b = execute(&parse(&["induce", "a3", "--output", "dot"])).unwrap();
        assert_eq!(artifact.text, b.text);
    }

    #[test]
    fn induce_text_labels_the_f4_bond() {
        let artifact = execute(&parse(&["induce", "b3"])).unwrap();
        assert!(artifact.text.starts_with("induced 4D root system from B3\ndim 4\nroots 48\n"));
        assert!(artifact.text.contains("simple roots 4\n"));
        assert!(artifact.text.contains("-4-"));
    }

    #[test]
    fn verify_is_text_only() {
        let err = execute(&parse(&["verify", "a3", "--output", "json"])).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn cap_overrides_propagate() {
        let err = execute(&parse(&["roots", "h3", "--cap", "10"])).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(10)));
    }

    #[test]
    fn unknown_target_fails_to_parse() {
        let mut argv = vec!["spinor-roots", "roots", "X9"];
        assert!(Cli::try_parse_from(argv.drain(..)).is_err());
    }
}
