//! Command-line front end. Records are streamed one JSON object per line, or
//! as CSV with vectors written space-separated inside a cell.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::cluster::ClusterAlgebra;
use crate::coxeter::{Family, GeneratorWord, RootSystem};
use crate::error::{Error, Result};
use crate::geometry::{DiagonalKind, PolygonModel};
use crate::roots::RootModel;
use crate::verify::{verify_all, SeedSample, VerificationReport, VerifyOptions, DEFAULT_BUDGET};

/// Exit status for a verification failure.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for bad input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "clusterden", version, about = "Denominator vectors of finite-type cluster algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of cluster variables, c-clusters and seeds.
    Count(Common),
    /// Every c-cluster with its roots and cluster variables.
    Clusters(Common),
    /// Every cluster variable, labelled by its position and root.
    Variables(Common),
    /// d-vectors of all variables with respect to a seed.
    Dvectors(Common),
    /// The compatibility degree table.
    Compat(Common),
    /// The rotation on positions, roots and variables.
    Rotate(Common),
    /// Polygon model: diagonals matched to positions (types A, B, C).
    Geometry(Common),
    /// Run the verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run every Coxeter word of the type.
        #[arg(long)]
        all_coxeter: bool,
        /// Only the subword and root layers (no exchange graph).
        #[arg(long)]
        subword_only: bool,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Cartan family.
    #[arg(long = "type", value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
    /// Generator order, one-based and comma-separated; defaults to 1,...,n.
    #[arg(long)]
    coxeter: Option<String>,
    /// `initial`, or `path:k1,k2,...` mutating X_c at one-based vertices.
    #[arg(long, default_value = "initial")]
    seed: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Maximum number of seeds enumerated in the exchange graph.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Worker threads for independent scenarios.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl Common {
    fn root_system(&self) -> Result<Arc<RootSystem>> {
        Ok(Arc::new(RootSystem::of_type(self.family, self.rank)?))
    }

    fn word(&self, rs: &RootSystem) -> Result<GeneratorWord> {
        let c = match &self.coxeter {
            Some(s) => GeneratorWord::parse_one_based(s)?,
            None => rs.standard_word(),
        };
        if !c.is_coxeter_word(rs.rank()) {
            return Err(Error::InvalidCoxeterWord(format!("{c} is not a permutation of 1..{}", rs.rank())));
        }
        Ok(c)
    }

    fn roots(&self) -> Result<RootModel> {
        let rs = self.root_system()?;
        let c = self.word(&rs)?;
        RootModel::of_type(rs, &c)
    }

    fn algebra(&self) -> Result<ClusterAlgebra> {
        ClusterAlgebra::new(self.roots()?, self.budget)
    }

    /// Zero-based mutation path from the `--seed` flag.
    fn seed_path(&self) -> Result<Vec<usize>> {
        let s = self.seed.trim();
        if s == "initial" {
            return Ok(Vec::new());
        }
        let Some(rest) = s.strip_prefix("path:") else {
            return Err(Error::InvalidPositions(format!("seed must be `initial` or `path:k1,k2,...`, got {s:?}")));
        };
        rest.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(k) if (1..=self.rank).contains(&k) => Ok(k - 1),
                _ => Err(Error::BadVertex { index: t.parse().unwrap_or(0), rank: self.rank }),
            })
            .collect()
    }
}

#[derive(Serialize)]
struct CountRecord {
    family: String,
    rank: usize,
    coxeter: Vec<usize>,
    positive_roots: usize,
    variables: usize,
    clusters: usize,
    seeds: usize,
}

#[derive(Serialize)]
struct ClusterRecord {
    positions: Vec<usize>,
    roots: Vec<Vec<i64>>,
    variables: Vec<String>,
    acyclic: bool,
}

#[derive(Serialize)]
struct VariableRecord {
    position: usize,
    root: Vec<i64>,
    laurent: String,
}

#[derive(Serialize)]
struct DvectorRecord {
    position: usize,
    root: Vec<i64>,
    dvector: Vec<i64>,
    laurent: String,
}

#[derive(Serialize)]
struct CompatRecord {
    i: usize,
    j: usize,
    alpha: Vec<i64>,
    beta: Vec<i64>,
    degree: i64,
}

#[derive(Serialize)]
struct RotateRecord {
    position: usize,
    rotated: usize,
    root: Vec<i64>,
    rotated_root: Vec<i64>,
    variable: String,
    rotated_variable: String,
}

#[derive(Serialize)]
struct DiagonalRecord {
    diagonal: Vec<usize>,
    kind: String,
    position: usize,
    root: Vec<i64>,
}

#[derive(Serialize)]
struct CheckRow<'a> {
    suite: &'a str,
    family: &'a str,
    rank: usize,
    coxeter: &'a [usize],
    seed: &'a str,
    check: &'a str,
    pass: bool,
    cases: usize,
    counterexample: &'a str,
}

/// Collects records and writes them in the chosen format.
struct Sink<'a> {
    format: Format,
    out: &'a mut dyn Write,
    rows: Vec<Map<String, Value>>,
}

impl<'a> Sink<'a> {
    fn new(format: Format, out: &'a mut dyn Write) -> Self {
        Sink { format, out, rows: Vec::new() }
    }

    fn emit(&mut self, record: &impl Serialize) -> Result<()> {
        let value = serde_json::to_value(record).map_err(|e| Error::Invariant(e.to_string()))?;
        match self.format {
            Format::Json => writeln!(self.out, "{value}").map_err(io_error),
            Format::Csv => {
                if let Value::Object(map) = value {
                    self.rows.push(map);
                }
                Ok(())
            }
        }
    }

    fn finish(self) -> Result<()> {
        if self.format != Format::Csv || self.rows.is_empty() {
            return Ok(());
        }
        let mut writer = csv::Writer::from_writer(self.out);
        let header: Vec<&String> = self.rows[0].keys().collect();
        writer.write_record(&header).map_err(|e| Error::Invariant(e.to_string()))?;
        for row in &self.rows {
            let cells: Vec<String> = row.values().map(csv_cell).collect();
            writer.write_record(&cells).map_err(|e| Error::Invariant(e.to_string()))?;
        }
        writer.flush().map_err(io_error)
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(csv_cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::Invariant(format!("write failed: {e}"))
}

/// Parses `args` (including the program name), runs the command and writes
/// its records to `out`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => EXIT_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => EXIT_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

/// `Ok(false)` when a verification check failed.
fn dispatch(command: Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Count(args) => count(&args, out),
        Command::Clusters(args) => clusters(&args, out),
        Command::Variables(args) => variables(&args, out),
        Command::Dvectors(args) => dvectors(&args, out),
        Command::Compat(args) => compat(&args, out),
        Command::Rotate(args) => rotate(&args, out),
        Command::Geometry(args) => geometry(&args, out),
        Command::Verify { common, all_coxeter, subword_only } => verify(&common, all_coxeter, subword_only, out),
    }
    .map(|_| true)
    .or_else(|e| match e {
        CommandError::Failed => Ok(false),
        CommandError::Other(e) => Err(e),
    })
}

enum CommandError {
    Failed,
    Other(Error),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Other(e)
    }
}

type CommandResult = std::result::Result<(), CommandError>;

fn count(args: &Common, out: &mut dyn Write) -> CommandResult {
    let alg = args.algebra()?;
    let sc = alg.complex();
    let rs = sc.root_system();
    let mut sink = Sink::new(args.format, out);
    sink.emit(&CountRecord {
        family: args.family.to_string(),
        rank: args.rank,
        coxeter: sc.c().to_one_based(),
        positive_roots: rs.num_positive(),
        variables: alg.graph().num_variables(),
        clusters: sc.enumerate_clusters()?.len(),
        seeds: alg.graph().num_seeds(),
    })?;
    Ok(sink.finish()?)
}

fn clusters(args: &Common, out: &mut dyn Write) -> CommandResult {
    let alg = args.algebra()?;
    let roots = alg.roots();
    let mut sink = Sink::new(args.format, out);
    for cl in alg.complex().enumerate_clusters()? {
        let ids = alg.variables_at(cl.positions());
        let node = alg.graph().node_of(&ids).ok_or(Error::NotACluster(cl.positions().to_vec()))?;
        sink.emit(&ClusterRecord {
            positions: cl.to_one_based(),
            roots: cl.positions().iter().map(|&p| roots.theta(p).coords().to_vec()).collect(),
            variables: ids.iter().map(|&x| alg.variable(x).to_canonical_string()).collect(),
            acyclic: alg.seed_is_acyclic(node),
        })?;
    }
    Ok(sink.finish()?)
}

fn variables(args: &Common, out: &mut dyn Write) -> CommandResult {
    let alg = args.algebra()?;
    let mut sink = Sink::new(args.format, out);
    for j in 0..alg.complex().len() {
        sink.emit(&VariableRecord {
            position: j + 1,
            root: alg.roots().theta(j).coords().to_vec(),
            laurent: alg.variable(alg.psi(j)).to_canonical_string(),
        })?;
    }
    Ok(sink.finish()?)
}

fn dvectors(args: &Common, out: &mut dyn Write) -> CommandResult {
    let alg = args.algebra()?;
    let path = args.seed_path()?;
    let (reseeded, dvecs) = alg.dvectors_at(&path)?;
    let mut sink = Sink::new(args.format, out);
    for (j, d) in dvecs.into_iter().enumerate() {
        sink.emit(&DvectorRecord {
            position: j + 1,
            root: alg.roots().theta(j).coords().to_vec(),
            dvector: d,
            laurent: reseeded.expression(alg.psi(j)).to_canonical_string(),
        })?;
    }
    Ok(sink.finish()?)
}

fn compat(args: &Common, out: &mut dyn Write) -> CommandResult {
    let roots = args.roots()?;
    let table = roots.complex().compat_table()?;
    let mut sink = Sink::new(args.format, out);
    let m = table.len();
    for i in 0..m {
        for j in 0..m {
            sink.emit(&CompatRecord {
                i: i + 1,
                j: j + 1,
                alpha: roots.theta(i).coords().to_vec(),
                beta: roots.theta(j).coords().to_vec(),
                degree: table.get(i, j),
            })?;
        }
    }
    Ok(sink.finish()?)
}

fn rotate(args: &Common, out: &mut dyn Write) -> CommandResult {
    let alg = args.algebra()?;
    let sc = alg.complex();
    let roots = alg.roots();
    let mut sink = Sink::new(args.format, out);
    for j in 0..sc.len() {
        let y = alg.psi(j);
        sink.emit(&RotateRecord {
            position: j + 1,
            rotated: sc.rotate_position(j) + 1,
            root: roots.theta(j).coords().to_vec(),
            rotated_root: roots.tau_root(roots.theta(j))?.coords().to_vec(),
            variable: alg.variable(y).to_canonical_string(),
            rotated_variable: alg.variable(alg.rotate_variable(y)).to_canonical_string(),
        })?;
    }
    Ok(sink.finish()?)
}

fn geometry(args: &Common, out: &mut dyn Write) -> CommandResult {
    let model = PolygonModel::new(args.family, args.rank)?;
    let alg = args.algebra()?;
    let matching = model
        .match_with_algebra(&alg)?
        .ok_or_else(|| Error::Invariant("no bijection between diagonals and cluster variables".into()))?;
    let mut sink = Sink::new(args.format, out);
    for (k, d) in model.diagonals().iter().enumerate() {
        let j = alg.psi_inv(matching.chi(k));
        let (u, v) = d.endpoints();
        let kind = match d.kind() {
            DiagonalKind::Plain => "plain",
            DiagonalKind::SymmetricPair => "pair",
            DiagonalKind::Long { doubled: true } => "long-doubled",
            DiagonalKind::Long { doubled: false } => "long",
        };
        sink.emit(&DiagonalRecord {
            diagonal: vec![u, v],
            kind: kind.into(),
            position: j + 1,
            root: alg.roots().theta(j).coords().to_vec(),
        })?;
    }
    Ok(sink.finish()?)
}

fn verify(args: &Common, all_coxeter: bool, subword_only: bool, out: &mut dyn Write) -> CommandResult {
    let rs = args.root_system()?;
    let words = if all_coxeter { rs.coxeter_words() } else { vec![args.word(&rs)?] };
    let options = VerifyOptions {
        budget: args.budget,
        seeds: SeedSample::default_for_rank(args.rank),
        subword_only,
    };
    let run_all = || -> Result<Vec<Vec<VerificationReport>>> {
        words.par_iter().map(|c| verify_all(rs.clone(), c, &options)).collect()
    };
    let results = match args.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Invariant(e.to_string()))?
            .install(run_all)?,
        None => run_all()?,
    };
    let mut sink = Sink::new(args.format, out);
    let mut passed = true;
    for report in results.iter().flatten() {
        passed &= report.passed();
        match args.format {
            Format::Json => sink.emit(report)?,
            Format::Csv => {
                for check in &report.checks {
                    sink.emit(&CheckRow {
                        suite: &report.suite,
                        family: &report.scenario.family,
                        rank: report.scenario.rank,
                        coxeter: &report.scenario.coxeter,
                        seed: &report.scenario.seed,
                        check: &check.name,
                        pass: check.pass,
                        cases: check.cases,
                        counterexample: check.counterexample.as_deref().unwrap_or(""),
                    })?;
                }
            }
        }
    }
    sink.finish()?;
    if passed {
        Ok(())
    } else {
        Err(CommandError::Failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("clusterden").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn count_b2() {
        let (code, out) = run_capture(&["count", "--type", "B", "--rank", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!((v["variables"].as_u64(), v["clusters"].as_u64()), (Some(6), Some(6)));
    }

    #[test]
    fn dvectors_a2() {
        let (code, out) = run_capture(&["dvectors", "--type", "A", "--rank", "2", "--coxeter", "1,2", "--seed", "initial"]);
        assert_eq!(code, 0);
        let dvecs: Vec<Vec<i64>> = out
            .lines()
            .map(|l| serde_json::from_str::<Value>(l).unwrap())
            .map(|v| serde_json::from_value(v["dvector"].clone()).unwrap())
            .collect();
        assert_eq!(dvecs, vec![vec![-1, 0], vec![0, -1], vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert!(out.lines().next().unwrap().starts_with(r#"{"position":1,"root":[-1,0],"dvector":[-1,0],"laurent":"x1"#));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["count", "--type", "Q", "--rank", "2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["count", "--type", "D", "--rank", "2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["count", "--type", "A", "--rank", "3", "--coxeter", "1,1,2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["dvectors", "--type", "A", "--rank", "2", "--seed", "path:3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["count", "--type", "E", "--rank", "6"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn csv_output() {
        let (code, out) = run_capture(&["variables", "--type", "A", "--rank", "2", "--format", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "position,root,laurent");
        assert_eq!(lines[1], "1,-1 0,x1^1");
        assert_eq!(lines.len(), 6);
    }
}
