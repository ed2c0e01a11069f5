//! Command-line front end.
//!
//! Every subcommand resolves its inputs, runs one library operation, and
//! emits a deterministic report: a human-readable table on stdout (or the
//! canonical JSON with `--format json`), plus the full JSON report to
//! `--out FILE` when given. Exit codes: 0 = success, 1 = a checked
//! property failed (not a resolution, not covered, witness FAILED, …),
//! 2 = bad input. Commands that evaluate a family-wide claim do so over an
//! explicit finite window and say so in their output.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::booth_lueker::bl_report;
use crate::complex::LabeledComplex;
use crate::covering::{covering_horizon, d_covering, full_covering, syzygy_fg_witness};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec, Graph, PathVariant};
use crate::field::{FieldChoice, FAST_PRIME};
use crate::io;
use crate::monomial::parse_ideal;
use crate::morphism::{find_multiplication_morphisms, find_renamed_embeddings};
use crate::resolution::{
    betti, free_complex_from_labeled, is_minimal, is_resolution, minimal_betti, taylor_complex,
};
use crate::subdivision::build_arrangement_complex;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cellres",
    version,
    about = "Exact-arithmetic cellular resolutions of monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a labelled complex and report or export it.
    Build(BuildArgs),
    /// Minimal Betti numbers of an ideal power (quotient convention).
    Betti(BettiArgs),
    /// Check that a complex is a cellular resolution.
    Acyclic(CheckArgs),
    /// Check minimality of a complex's free complex.
    Minimal(CheckArgs),
    /// Enumerate multiplication morphisms between two complexes.
    Morphisms(PairCmdArgs),
    /// Covering reports for a family: one index, or a horizon scan.
    Covering(CoveringArgs),
    /// Finite-generation witness for the degree-t syzygy data of a family.
    SyzygyWitness(WitnessArgs),
    /// Linear-quotients report for the derived graph of a graph.
    Bl(BlArgs),
    /// Enumerate injective variable renamings followed by embeddings.
    Rename(PairCmdArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    /// Exact rationals.
    Q,
    /// The prime field F_32003.
    P32003,
}

impl FieldArg {
    fn choice(self) -> FieldChoice {
        match self {
            FieldArg::Q => FieldChoice::Rational,
            FieldArg::P32003 => FieldChoice::Prime(FAST_PRIME),
        }
    }

    fn label(self) -> &'static str {
        match self {
            FieldArg::Q => "Q",
            FieldArg::P32003 => "F_32003",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    /// Human-readable summary.
    Table,
    /// Canonical JSON of the full report.
    Json,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write the full JSON report to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Stdout format.
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

/// Where a single complex comes from: a JSON file, an arrangement-spec
/// file, a family member, or the full simplex complex of an ideal.
#[derive(Args, Debug)]
struct SourceArgs {
    /// Import a complex from a JSON file.
    #[arg(long, value_name = "FILE")]
    complex: Option<PathBuf>,
    /// Build the subdivision complex of an arrangement-spec JSON file.
    #[arg(long, value_name = "FILE")]
    arrangement: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Member index within the family (default 1).
    #[arg(long)]
    index: Option<usize>,
}

/// Family parameters; `--family` names the kind, the rest feed it.
#[derive(Args, Debug)]
struct FamilyArgs {
    /// Family kind: maximal | cube | bounded | path_Y | path_Z |
    /// path_Zbar | taylor_powers (alias: taylor) | edge_ideal |
    /// simplex_growing.
    #[arg(long)]
    family: Option<String>,
    /// Variable count (maximal, bounded) or path length (path_*).
    #[arg(long)]
    vars: Option<usize>,
    /// Generator degree of the bounded base ideal.
    #[arg(long)]
    degree: Option<usize>,
    /// Exponent bounds, comma-separated (bounded), e.g. "1,1,1".
    #[arg(long)]
    bound: Option<String>,
    /// Disjoint 1-based variable pairs (cube), e.g. "1-2,3-4".
    #[arg(long)]
    pairs: Option<String>,
    /// An ideal, e.g. "(x,y,z)": the base of taylor_powers, or a direct
    /// complex source when no --family is given.
    #[arg(long)]
    ideal: Option<String>,
    /// A graph (edge_ideal, bl): "path(4)", "cycle(5)", "complete(3)", or
    /// explicit "4:1-2,2-3,3-4".
    #[arg(long)]
    graph: Option<String>,
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Input(format!("cannot parse {what} from '{s}'")))
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .map(|part| {
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| Error::Input(format!("pair '{part}' is not of the form a-b")))?;
            Ok((parse_num(a, "a vertex")?, parse_num(b, "a vertex")?))
        })
        .collect()
}

fn parse_bound(s: &str) -> Result<Vec<u32>> {
    s.split(',').map(|p| parse_num(p, "a bound entry")).collect()
}

fn parse_graph(s: &str) -> Result<Graph> {
    for (prefix, build) in [
        ("path(", Graph::path as fn(usize) -> Graph),
        ("cycle(", Graph::cycle as fn(usize) -> Graph),
        ("complete(", Graph::complete as fn(usize) -> Graph),
    ] {
        if let Some(inner) = s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
            let g = build(parse_num(inner, "a vertex count")?);
            g.validate()?;
            return Ok(g);
        }
    }
    if let Some((n, edges)) = s.split_once(':') {
        return Graph::new(parse_num(n, "a vertex count")?, parse_pairs(edges)?);
    }
    Err(Error::Input(format!(
        "cannot parse graph '{s}': use path(n), cycle(n), complete(n), or n:a-b,c-d"
    )))
}

fn req<T>(opt: Option<T>, kind: &str, what: &str) -> Result<T> {
    opt.ok_or_else(|| Error::Input(format!("family '{kind}' requires {what}")))
}

impl FamilyArgs {
    fn to_family(&self) -> Result<Family> {
        let kind = self
            .family
            .as_deref()
            .ok_or_else(|| Error::Input("no --family given".to_string()))?;
        let spec = match kind {
            "maximal" => FamilySpec::maximal(req(self.vars, kind, "--vars")?),
            "cube" => FamilySpec::cube(parse_pairs(&req(self.pairs.as_deref(), kind, "--pairs")?)?),
            "bounded" => FamilySpec::bounded(
                req(self.vars, kind, "--vars")?,
                req(self.degree, kind, "--degree")?,
                parse_bound(&req(self.bound.as_deref(), kind, "--bound")?)?,
            ),
            "path_Y" | "path_y" => FamilySpec::path(PathVariant::Y, req(self.vars, kind, "--vars")?),
            "path_Z" | "path_z" => FamilySpec::path(PathVariant::Z, req(self.vars, kind, "--vars")?),
            "path_Zbar" | "path_zbar" => {
                FamilySpec::path(PathVariant::Zbar, req(self.vars, kind, "--vars")?)
            }
            "taylor_powers" | "taylor" => {
                FamilySpec::taylor_powers(&req(self.ideal.as_deref(), kind, "--ideal")?)
            }
            "edge_ideal" => {
                FamilySpec::edge_ideal(parse_graph(&req(self.graph.as_deref(), kind, "--graph")?)?)
            }
            "simplex_growing" | "simplex" => FamilySpec::simplex_growing(),
            other => {
                return Err(Error::Input(format!("unknown family kind '{other}'")));
            }
        };
        Family::new(spec)
    }

    fn describe(&self) -> String {
        self.family.clone().unwrap_or_else(|| "?".to_string())
    }
}

impl SourceArgs {
    fn resolve(&self) -> Result<(LabeledComplex, String)> {
        if let Some(path) = &self.complex {
            let x = io::import_complex(&std::fs::read_to_string(path)?)?;
            return Ok((x, format!("file {}", path.display())));
        }
        if let Some(path) = &self.arrangement {
            let doc: io::ArrangementDoc = io::load_json(path)?;
            let x = build_arrangement_complex(&io::arrangement_from_doc(&doc)?)?;
            return Ok((x, format!("arrangement {}", path.display())));
        }
        if self.family.family.is_some() {
            let fam = self.family.to_family()?;
            let index = self.index.unwrap_or(1);
            let x = fam.complex(index)?;
            return Ok((x, format!("{} index {index}", self.family.describe())));
        }
        if let Some(ideal) = &self.family.ideal {
            let (names, i) = parse_ideal(ideal)?;
            let x = taylor_complex(&i, &names)?;
            return Ok((x, format!("full simplex complex of {ideal}")));
        }
        Err(Error::Input(
            "no input given: pass --complex FILE, --arrangement FILE, --family KIND, or --ideal '(…)'"
                .to_string(),
        ))
    }
}

/// Two complexes: explicit files, or two members of one family.
#[derive(Args, Debug)]
struct PairArgs {
    /// Source complex JSON file.
    #[arg(long, value_name = "FILE", requires = "target")]
    source: Option<PathBuf>,
    /// Target complex JSON file.
    #[arg(long, value_name = "FILE", requires = "source")]
    target: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Source member index within the family.
    #[arg(long)]
    from: Option<usize>,
    /// Target member index within the family.
    #[arg(long)]
    to: Option<usize>,
}

impl PairArgs {
    fn resolve(&self) -> Result<(LabeledComplex, LabeledComplex, String)> {
        if let (Some(s), Some(t)) = (&self.source, &self.target) {
            let x = io::import_complex(&std::fs::read_to_string(s)?)?;
            let y = io::import_complex(&std::fs::read_to_string(t)?)?;
            return Ok((x, y, format!("{} -> {}", s.display(), t.display())));
        }
        if self.family.family.is_some() {
            let fam = self.family.to_family()?;
            let from = req(self.from, &self.family.describe(), "--from")?;
            let to = req(self.to, &self.family.describe(), "--to")?;
            return Ok((
                fam.complex(from)?,
                fam.complex(to)?,
                format!("{} {from} -> {to}", self.family.describe()),
            ));
        }
        Err(Error::Input(
            "pass --source/--target files, or --family with --from and --to".to_string(),
        ))
    }
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct BettiArgs {
    /// Ideal, e.g. "(xz,xw,yz,yw)".
    #[arg(long)]
    ideal: String,
    /// Power of the ideal (default 1).
    #[arg(long, default_value_t = 1)]
    power: usize,
    #[arg(long, value_enum, default_value_t = FieldArg::Q)]
    field: FieldArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = FieldArg::Q)]
    field: FieldArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct PairCmdArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct CoveringArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Scan every index in 2..=MAX against all its predecessors.
    #[arg(long)]
    max: Option<usize>,
    /// Check a single target index instead of scanning.
    #[arg(long, conflicts_with = "max")]
    index: Option<usize>,
    /// Comma-separated source indices (single-index mode; default: all
    /// predecessors).
    #[arg(long)]
    sources: Option<String>,
    /// Restrict the single-index check to d-cells.
    #[arg(long)]
    dim: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Syzygy dimension t; the check covers the (t−1)-cells.
    #[arg(short = 't', long = "dim")]
    dim: usize,
    /// Largest family index scanned.
    #[arg(long)]
    horizon: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct BlArgs {
    /// Graph: "path(3)", "cycle(4)", "complete(5)", or "n:a-b,c-d".
    #[arg(long)]
    graph: String,
    #[command(flatten)]
    output: OutputArgs,
}

/// Entry point used by the binary: parse, run, and return the exit code.
pub fn entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT_ERROR
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Betti(args) => cmd_betti(args),
        Command::Acyclic(args) => cmd_acyclic(args),
        Command::Minimal(args) => cmd_minimal(args),
        Command::Morphisms(args) => cmd_morphisms(args),
        Command::Covering(args) => cmd_covering(args),
        Command::SyzygyWitness(args) => cmd_witness(args),
        Command::Bl(args) => cmd_bl(args),
        Command::Rename(args) => cmd_rename(args),
    }
}

fn emit<T: Serialize>(report: &T, table: &str, output: &OutputArgs) -> Result<()> {
    match output.format {
        FormatArg::Table => print!("{table}"),
        FormatArg::Json => print!("{}", io::canonical_json(report)?),
    }
    if let Some(path) = &output.out {
        io::save_json(path, report)?;
    }
    Ok(())
}

fn cmd_build(args: BuildArgs) -> Result<i32> {
    let (x, source) = args.source.resolve()?;
    // The JSON form is the bare complex document, so `build --out F` then
    // `--complex F` round-trips.
    let report = io::complex_to_doc(&x);
    let mut t = String::new();
    let _ = writeln!(t, "source: {source}");
    let _ = writeln!(t, "variables: {}", x.var_names().names().join(", "));
    let _ = writeln!(t, "f-vector: {:?}", x.f_vector());
    let _ = writeln!(t, "cells: {}", x.num_cells());
    emit(&report, &t, &args.output)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BettiReport {
    ideal: String,
    power: usize,
    field: String,
    minimal_generators: usize,
    /// β(S/I^k): quotient convention with leading 1.
    betti: Vec<usize>,
}

fn format_table(ranks: &[usize]) -> String {
    let parts: Vec<String> = ranks.iter().map(|r| r.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn cmd_betti(args: BettiArgs) -> Result<i32> {
    let (_, base) = parse_ideal(&args.ideal)?;
    if args.power < 1 {
        return Err(Error::Input("--power must be at least 1".to_string()));
    }
    let ideal = if args.power == 1 {
        base
    } else {
        base.power(args.power)
    };
    let table = betti(&ideal, args.field.choice())?;
    let report = BettiReport {
        ideal: args.ideal.clone(),
        power: args.power,
        field: args.field.label().to_string(),
        minimal_generators: ideal.num_generators(),
        betti: table.ranks.clone(),
    };
    let mut t = String::new();
    let _ = writeln!(t, "ideal: {}", args.ideal);
    let _ = writeln!(t, "power: {}", args.power);
    let _ = writeln!(t, "field: {}", args.field.label());
    let _ = writeln!(t, "minimal generators: {}", report.minimal_generators);
    let _ = writeln!(
        t,
        "betti (quotient convention): {}",
        format_table(&table.ranks)
    );
    emit(&report, &t, &args.output)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct AcyclicReport {
    source: String,
    field: String,
    f_vector: Vec<usize>,
    is_resolution: bool,
}

fn cmd_acyclic(args: CheckArgs) -> Result<i32> {
    let (x, source) = args.source.resolve()?;
    let ok = is_resolution(&x, args.field.choice())?;
    let report = AcyclicReport {
        source: source.clone(),
        field: args.field.label().to_string(),
        f_vector: x.f_vector(),
        is_resolution: ok,
    };
    let mut t = String::new();
    let _ = writeln!(t, "source: {source}");
    let _ = writeln!(t, "field: {}", args.field.label());
    let _ = writeln!(t, "f-vector: {:?}", report.f_vector);
    let _ = writeln!(
        t,
        "resolution: {}",
        if ok { "yes" } else { "NO (some restriction has homology)" }
    );
    emit(&report, &t, &args.output)?;
    Ok(if ok { EXIT_OK } else { EXIT_PROPERTY_FAILED })
}

#[derive(Serialize)]
struct MinimalReport {
    source: String,
    field: String,
    ranks: Vec<usize>,
    minimal: bool,
    minimal_betti: Vec<usize>,
}

fn cmd_minimal(args: CheckArgs) -> Result<i32> {
    let (x, source) = args.source.resolve()?;
    let f = free_complex_from_labeled(&x);
    let minimal = is_minimal(&f);
    let mb = minimal_betti(&f, args.field.choice())?;
    let report = MinimalReport {
        source: source.clone(),
        field: args.field.label().to_string(),
        ranks: f.ranks(),
        minimal,
        minimal_betti: mb.ranks.clone(),
    };
    let mut t = String::new();
    let _ = writeln!(t, "source: {source}");
    let _ = writeln!(t, "field: {}", args.field.label());
    let _ = writeln!(t, "ranks: {}", format_table(&report.ranks));
    let _ = writeln!(t, "minimal: {}", if minimal { "yes" } else { "no" });
    let _ = writeln!(t, "minimalized betti: {}", format_table(&mb.ranks));
    emit(&report, &t, &args.output)?;
    Ok(if minimal { EXIT_OK } else { EXIT_PROPERTY_FAILED })
}

#[derive(Serialize)]
struct MorphismsReport {
    pair: String,
    count: usize,
    multipliers: Vec<String>,
    morphisms: Vec<io::MorphismDoc>,
}

fn cmd_morphisms(args: PairCmdArgs) -> Result<i32> {
    let (x, y, pair) = args.pair.resolve()?;
    let found = find_multiplication_morphisms(&x, &y);
    let report = MorphismsReport {
        pair: pair.clone(),
        count: found.len(),
        multipliers: found
            .iter()
            .map(|g| y.var_names().monomial_string(&g.multiplier))
            .collect(),
        morphisms: found.iter().map(io::morphism_to_doc).collect(),
    };
    let mut t = String::new();
    let _ = writeln!(t, "pair: {pair}");
    let _ = writeln!(t, "morphisms found: {}", report.count);
    for m in &report.multipliers {
        let _ = writeln!(t, "  multiplier {m}");
    }
    emit(&report, &t, &args.output)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct EmbeddingEntry {
    injection: Vec<usize>,
    morphism: io::MorphismDoc,
}

#[derive(Serialize)]
struct RenameReport {
    pair: String,
    count: usize,
    embeddings: Vec<EmbeddingEntry>,
}

fn cmd_rename(args: PairCmdArgs) -> Result<i32> {
    let (x, y, pair) = args.pair.resolve()?;
    let found = find_renamed_embeddings(&x, &y)?;
    let report = RenameReport {
        pair: pair.clone(),
        count: found.len(),
        embeddings: found
            .iter()
            .map(|e| EmbeddingEntry {
                injection: e.injection.clone(),
                morphism: io::morphism_to_doc(&e.morphism),
            })
            .collect(),
    };
    let mut t = String::new();
    let _ = writeln!(t, "pair: {pair}");
    let _ = writeln!(t, "renamed embeddings found: {}", report.count);
    for e in &found {
        let names: Vec<String> = e
            .injection
            .iter()
            .enumerate()
            .map(|(i, &j)| format!("{} -> {}", x.var_names().name(i), y.var_names().name(j)))
            .collect();
        let _ = writeln!(t, "  {}", names.join(", "));
    }
    emit(&report, &t, &args.output)?;
    Ok(EXIT_OK)
}

fn parse_sources(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|p| parse_num(p, "a source index")).collect()
}

fn cmd_covering(args: CoveringArgs) -> Result<i32> {
    let fam = args.family.to_family()?;
    if let Some(index) = args.index {
        let sources = match &args.sources {
            Some(s) => parse_sources(s)?,
            None => (1..index).collect(),
        };
        let report = match args.dim {
            Some(d) => d_covering(&fam, index, &sources, d)?,
            None => full_covering(&fam, index, &sources)?,
        };
        let mut t = String::new();
        let _ = writeln!(t, "family: {}", args.family.describe());
        let _ = writeln!(t, "target index: {index}");
        let _ = writeln!(t, "sources: {:?}", report.source_indices);
        match report.dimension {
            Some(d) => {
                let _ = writeln!(t, "checked cells: dimension {d}");
            }
            None => {
                let _ = writeln!(t, "checked cells: all dimensions");
            }
        }
        let uncovered = report.uncovered();
        let _ = writeln!(
            t,
            "covered: {}",
            if report.covered { "yes" } else { "NO" }
        );
        for (i, cell) in uncovered.iter().enumerate() {
            if i == 20 {
                let _ = writeln!(t, "  … and {} more", uncovered.len() - 20);
                break;
            }
            let _ = writeln!(
                t,
                "  uncovered dim {} cell {}: {{{}}}",
                cell.dim,
                cell.cell,
                cell.labels.join(", ")
            );
        }
        let _ = writeln!(
            t,
            "scope: this checks index {index} against the listed sources only"
        );
        emit(&report, &t, &args.output)?;
        return Ok(if report.covered {
            EXIT_OK
        } else {
            EXIT_PROPERTY_FAILED
        });
    }

    let max = args
        .max
        .ok_or_else(|| Error::Input("pass --max N to scan, or --index I".to_string()))?;
    let report = covering_horizon(&fam, max)?;
    let mut t = String::new();
    let _ = writeln!(t, "family: {}", report.family);
    let _ = writeln!(t, "scanned indices: 2..={max}");
    for entry in &report.entries {
        if entry.covered {
            let _ = writeln!(t, "index {}: covered", entry.index);
        } else {
            let _ = writeln!(
                t,
                "index {}: UNCOVERED ({} cells)",
                entry.index,
                entry.uncovered.len()
            );
            for (i, cell) in entry.uncovered.iter().enumerate() {
                if i == 10 {
                    let _ = writeln!(t, "    … and {} more", entry.uncovered.len() - 10);
                    break;
                }
                let _ = writeln!(
                    t,
                    "    dim {} cell {}: {{{}}}",
                    cell.dim,
                    cell.cell,
                    cell.labels.join(", ")
                );
            }
        }
    }
    match report.threshold {
        Some(t0) => {
            let _ = writeln!(t, "threshold: {t0} (covered from index {t0} through {max})");
        }
        None => {
            let _ = writeln!(t, "threshold: FAILED (the last scanned index is uncovered)");
        }
    }
    for note in &report.notes {
        let _ = writeln!(t, "note: {note}");
    }
    emit(&report, &t, &args.output)?;
    Ok(if report.threshold.is_some() {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILED
    })
}

fn cmd_witness(args: WitnessArgs) -> Result<i32> {
    let fam = args.family.to_family()?;
    let witness = syzygy_fg_witness(&fam, args.dim, args.horizon)?;
    let mut t = String::new();
    let _ = writeln!(t, "family: {}", args.family.describe());
    let _ = writeln!(t, "syzygy dimension: {}", witness.dimension);
    let _ = writeln!(t, "horizon: 1..={}", witness.horizon);
    if witness.succeeded {
        let _ = writeln!(t, "witness: SUCCEEDED");
        let _ = writeln!(t, "threshold: {}", witness.threshold.unwrap());
        let _ = writeln!(t, "generators: {}", witness.generators.len());
        let _ = writeln!(t, "verified table rows: {}", witness.table.len());
    } else {
        let _ = writeln!(t, "witness: FAILED");
        let _ = writeln!(t, "uncovered cells: {}", witness.uncovered.len());
        for (i, cell) in witness.uncovered.iter().enumerate() {
            if i == 20 {
                let _ = writeln!(t, "  … and {} more", witness.uncovered.len() - 20);
                break;
            }
            let _ = writeln!(
                t,
                "  index {} cell {}: {{{}}}",
                cell.index,
                cell.cell,
                cell.labels.join(", ")
            );
        }
    }
    for note in &witness.notes {
        let _ = writeln!(t, "note: {note}");
    }
    emit(&witness, &t, &args.output)?;
    Ok(if witness.succeeded {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILED
    })
}

fn cmd_bl(args: BlArgs) -> Result<i32> {
    let graph = parse_graph(&args.graph)?;
    let report = bl_report(&graph)?;
    let ok = report.has_linear_quotients && report.regular_decomposition;
    let mut t = String::new();
    let _ = writeln!(
        t,
        "graph: {} vertices, {} edges",
        report.graph.n,
        report.graph.edges.len()
    );
    let _ = writeln!(
        t,
        "derived graph: {} vertices, {} edges",
        report.derived_graph.n,
        report.derived_graph.edges.len()
    );
    let _ = writeln!(t, "variables: {}", report.variables.join(", "));
    for row in &report.generators {
        let _ = writeln!(
            t,
            "  {}  set = {{{}}}",
            row.generator,
            row.set_variables.join(", ")
        );
    }
    let _ = writeln!(
        t,
        "linear quotients: {}",
        if report.has_linear_quotients { "yes" } else { "NO" }
    );
    let _ = writeln!(
        t,
        "regular decomposition: {}",
        if report.regular_decomposition { "yes" } else { "NO" }
    );
    let _ = writeln!(
        t,
        "betti of the ideal: {}",
        format_table(&report.betti_ideal)
    );
    let _ = writeln!(
        t,
        "betti (quotient convention): {}",
        format_table(&report.betti_quotient)
    );
    for note in &report.notes {
        let _ = writeln!(t, "note: {note}");
    }
    emit(&report, &t, &args.output)?;
    Ok(if ok { EXIT_OK } else { EXIT_PROPERTY_FAILED })
}
