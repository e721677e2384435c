//! Command-line front end. Every number is printed as an exact scalar literal.
//!
//! Exit codes: 0 success or SAT, 1 a checked property failed, 2 invalid input,
//! 3 request outside the supported scope, 10 UNSAT.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bub_clifton::{boolean_frame, enumerate_homs, project_state, BcError, DeterminateStructure, Observable};
use crate::datasets;
use crate::event::{check_axioms, AxiomReport, CLOSURE_CAP};
use crate::format::{
    read_json, FamilyFile, FormatError, ObservableFile, PropositionFile, RaySystemFile, StateFile, Workspace,
};
use crate::ks::{export_cnf, find_coloring, Coloring, Defect, Exclusivity, RaySystem};
use crate::laws::{check_laws, Law, LawReport};
use crate::linalg::Subspace;
use crate::scalar::QuadComplex;
use crate::truth::{
    conditions_check, contextual_state, expectation, global_valuate, pcc_valuate, ConditionViolation,
    MeasurementContext, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;
pub const EXIT_UNSAT: i32 = 10;

#[derive(Debug, Parser)]
#[command(name = "qlogic", version, about = "Exact quantum-logic toolkit")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for commands that sample at random.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a ray system admits a two-valued colouring.
    KsVerify(KsVerifyArgs),
    /// Determinate structure of a state relative to an observable.
    Bc(BcArgs),
    /// Global and context-relative truth values of a proposition.
    Valuate(ValuateArgs),
    /// Check the event-algebra axioms on a finite family of subspaces.
    Axioms(AxiomsArgs),
    /// Built-in ray systems.
    #[command(subcommand)]
    Datasets(DatasetsCommand),
    /// Random checks of the lattice laws (uses --seed).
    Laws(LawsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExclusivityArg {
    Contexts,
    Orthogonality,
}

impl From<ExclusivityArg> for Exclusivity {
    fn from(arg: ExclusivityArg) -> Self {
        match arg {
            ExclusivityArg::Contexts => Exclusivity::Contexts,
            ExclusivityArg::Orthogonality => Exclusivity::Orthogonality,
        }
    }
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "builtin"])))]
pub struct KsVerifyArgs {
    /// Ray system file.
    pub input: Option<PathBuf>,
    /// Name of a built-in dataset.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Also write the DIMACS encoding here.
    #[arg(long)]
    pub cnf: Option<PathBuf>,
    /// Which ray pairs may not both be 1.
    #[arg(long, value_enum, default_value = "orthogonality")]
    pub exclusivity: ExclusivityArg,
}

#[derive(Debug, Args)]
pub struct BcArgs {
    pub state: PathBuf,
    pub observable: PathBuf,
    /// Require the Boolean frame (refused for degenerate observables).
    #[arg(long)]
    pub frame: bool,
}

#[derive(Debug, Args)]
pub struct ValuateArgs {
    pub state: PathBuf,
    pub observable: PathBuf,
    pub proposition: PathBuf,
    /// Further observables whose pure and contextual expectations are compared.
    #[arg(long)]
    pub compare: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AxiomsArgs {
    pub family: PathBuf,
    /// Close the family under complements and orthogonal joins first.
    #[arg(long)]
    pub close: bool,
}

#[derive(Debug, Subcommand)]
pub enum DatasetsCommand {
    List,
    /// Print a dataset in the ray-system file format.
    Show { name: String },
}

#[derive(Debug, Args)]
pub struct LawsArgs {
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4, 5])]
    pub dims: Vec<usize>,
}

fn vector(v: &[QuadComplex]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn basis(s: &Subspace<QuadComplex>) -> Vec<Vec<String>> {
    s.basis().iter().map(|v| vector(v)).collect()
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn span(b: &[Vec<String>]) -> String {
    let parts: Vec<String> = b.iter().map(|v| tuple(v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum KsVerdict {
    Sat,
    Unsat,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfSummary {
    pub path: String,
    pub variables: usize,
    pub clauses: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KsReport {
    pub source: String,
    pub radicand: u32,
    pub dimension: usize,
    pub rays: usize,
    pub contexts: usize,
    pub exclusivity: Exclusivity,
    pub verdict: KsVerdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub defects: Vec<Defect>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree_hash: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cnf: Option<CnfSummary>,
}

impl KsReport {
    fn to_text(&self) -> String {
        let mut out = format!(
            "source: {}\nradicand: {}\ndimension: {}\nrays: {}\ncontexts: {}\nexclusivity: {}\n",
            self.source, self.radicand, self.dimension, self.rays, self.contexts, self.exclusivity
        );
        match self.verdict {
            KsVerdict::Invalid => {
                out.push_str("INVALID\n");
                for d in &self.defects {
                    out.push_str(&format!("  {}\n", d));
                }
            }
            KsVerdict::Sat => out.push_str("SAT\n"),
            KsVerdict::Unsat => out.push_str("UNSAT\n"),
        }
        if let Some(w) = &self.witness {
            let values: Vec<String> = w.iter().map(ToString::to_string).collect();
            out.push_str(&format!("witness: {}\n", values.join(" ")));
            let ones: Vec<String> = (0..w.len()).filter(|&i| w[i] == 1).map(|i| i.to_string()).collect();
            out.push_str(&format!("true rays: {}\n", ones.join(" ")));
        }
        if let Some(n) = self.nodes {
            out.push_str(&format!("nodes: {}\n", n));
        }
        if let Some(h) = &self.tree_hash {
            out.push_str(&format!("tree hash: {}\n", h));
        }
        if let Some(c) = &self.cnf {
            out.push_str(&format!("cnf: {} ({} variables, {} clauses)\n", c.path, c.variables, c.clauses));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenEntry {
    pub value: String,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomEntry {
    /// 1-based, as in `D1`.
    pub atom: usize,
    pub eigenvalue: String,
    pub vector: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameEntry {
    pub label: String,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcReport {
    pub radicand: u32,
    pub dimension: usize,
    pub state: Vec<String>,
    pub maximal: bool,
    pub k: usize,
    pub atoms: Vec<AtomEntry>,
    /// Eigenvalues whose eigenspaces are orthogonal to the state.
    pub dropped: Vec<String>,
    pub remainder: Vec<Vec<String>>,
    /// For each homomorphism, the 1-based atom it makes true.
    pub homs: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<Vec<FrameEntry>>,
}

impl BcReport {
    fn to_text(&self) -> String {
        let mut out = format!(
            "state: {}\nobservable: {}\nk = {}\natoms:\n",
            tuple(&self.state),
            if self.maximal { "maximal" } else { "degenerate" },
            self.k
        );
        for a in &self.atoms {
            out.push_str(&format!("  D{} (eigenvalue {}): {}\n", a.atom, a.eigenvalue, tuple(&a.vector)));
        }
        if !self.dropped.is_empty() {
            out.push_str(&format!("dropped eigenvalues: {}\n", self.dropped.join(" ")));
        }
        out.push_str(&format!("remainder rank {}: {}\n", self.remainder.len(), span(&self.remainder)));
        out.push_str(&format!("homomorphisms: {}\n", self.homs.len()));
        for (i, a) in self.homs.iter().enumerate() {
            out.push_str(&format!("  h{}: D{} -> 1, every other atom and null ray -> 0\n", i + 1, a));
        }
        match &self.frame {
            Some(frame) => {
                out.push_str(&format!("boolean frame: {} events\n", frame.len()));
                for e in frame {
                    out.push_str(&format!("  {}: {}\n", e.label, span(&e.basis)));
                }
            }
            None => out.push_str("boolean frame: not built (degenerate observable)\n"),
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextEntry {
    pub state: Vec<String>,
    pub observable: Vec<EigenEntry>,
    pub atoms: Vec<Vec<String>>,
    pub weights: Vec<String>,
    pub conditions: Vec<ConditionViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomVerdict {
    /// 1-based; hom `i` makes atom `Di` true.
    pub hom: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationEntry {
    pub observable: String,
    pub pure: String,
    pub contextual: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationReport {
    pub context: ContextEntry,
    pub proposition: Vec<Vec<String>>,
    pub global: Verdict,
    pub member: bool,
    pub verdicts: Vec<HomVerdict>,
    pub expectations: Vec<ExpectationEntry>,
}

impl ValuationReport {
    fn to_text(&self) -> String {
        let mut out = format!("state: {}\n", tuple(&self.context.state));
        for (i, (a, w)) in self.context.atoms.iter().zip(&self.context.weights).enumerate() {
            out.push_str(&format!("  D{} weight {}: {}\n", i + 1, w, tuple(a)));
        }
        for c in &self.context.conditions {
            out.push_str(&format!("condition violated: {}\n", c));
        }
        out.push_str(&format!("proposition: {}\n", span(&self.proposition)));
        out.push_str(&format!("global: {}\n", self.global));
        out.push_str(&format!("member: {}\n", if self.member { "yes" } else { "no" }));
        for v in &self.verdicts {
            out.push_str(&format!("  h{}: {}\n", v.hom, v.verdict));
        }
        for e in &self.expectations {
            out.push_str(&format!(
                "<{}>: pure {}, contextual {} ({})\n",
                e.observable,
                e.pure,
                e.contextual,
                if e.equal { "equal" } else { "differ" }
            ));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetEntry {
    pub name: String,
    pub radicand: u32,
    pub dimension: usize,
    pub rays: usize,
    pub contexts: usize,
    pub summary: String,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json: bool,
}

impl Io<'_> {
    fn emit<T: Serialize>(&mut self, report: &T, text: impl FnOnce() -> String) -> std::io::Result<()> {
        if self.json {
            let s = serde_json::to_string_pretty(report).expect("reports serialize");
            writeln!(self.out, "{}", s)
        } else {
            write!(self.out, "{}", text())
        }
    }

    fn fail(&mut self, message: impl std::fmt::Display, code: i32) -> i32 {
        let _ = writeln!(self.err, "error: {}", message);
        code
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut io = Io { out, err, json: cli.json };
    let result = match &cli.command {
        Command::KsVerify(args) => ks_verify(args, &mut io),
        Command::Bc(args) => bc(args, &mut io),
        Command::Valuate(args) => valuate(args, &mut io),
        Command::Axioms(args) => axioms(args, &mut io),
        Command::Datasets(cmd) => datasets_cmd(cmd, &mut io),
        Command::Laws(args) => laws(args, cli.seed, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(e) => io.fail(e, EXIT_FAILED),
    }
}

fn name(path: &Path) -> String {
    path.display().to_string()
}

fn ks_verify(args: &KsVerifyArgs, io: &mut Io) -> std::io::Result<i32> {
    let (source, radicand, rs): (String, u32, RaySystem<QuadComplex>) = match (&args.builtin, &args.input) {
        (Some(b), _) => match datasets::builtin(b) {
            Ok(ds) => (format!("builtin {}", ds.name), ds.radicand, ds.system),
            Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
        },
        (None, Some(path)) => {
            let loaded = read_json::<RaySystemFile>(path).and_then(|f| f.load(&name(path)));
            match loaded {
                Ok((m, rs)) => (name(path), m, rs),
                Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
            }
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let rule = Exclusivity::from(args.exclusivity);
    let mut report = KsReport {
        source,
        radicand,
        dimension: rs.dim(),
        rays: rs.rays().len(),
        contexts: rs.contexts().len(),
        exclusivity: rule,
        verdict: KsVerdict::Invalid,
        defects: Vec::new(),
        witness: None,
        nodes: None,
        tree_hash: None,
        cnf: None,
    };
    let validation = rs.validate();
    if !validation.is_valid() {
        report.defects = validation.defects;
        io.emit(&report, || report.to_text())?;
        return Ok(EXIT_INPUT);
    }
    let coloring = match find_coloring(&rs, rule) {
        Ok(c) => c,
        Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
    };
    if let Some(path) = &args.cnf {
        let cnf = match export_cnf(&rs, rule) {
            Ok(c) => c,
            Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
        };
        if let Err(e) = std::fs::write(path, &cnf) {
            return Ok(io.fail(format!("{}: {}", path.display(), e), EXIT_INPUT));
        }
        report.cnf = Some(CnfSummary {
            path: name(path),
            variables: rs.rays().len(),
            clauses: cnf.lines().count() - 1,
        });
    }
    let code = match coloring {
        Coloring::Sat { assignment, nodes } => {
            report.verdict = KsVerdict::Sat;
            report.witness = Some((0..assignment.len()).map(|i| assignment.get(i).unwrap_or(0)).collect());
            report.nodes = Some(nodes);
            EXIT_OK
        }
        Coloring::Unsat(cert) => {
            report.verdict = KsVerdict::Unsat;
            report.nodes = Some(cert.nodes);
            report.tree_hash = Some(cert.tree_hash);
            EXIT_UNSAT
        }
    };
    io.emit(&report, || report.to_text())?;
    Ok(code)
}

struct Loaded {
    ws: Workspace,
    state: String,
    observable: String,
}

fn load_context(state: &Path, observable: &Path) -> Result<Loaded, FormatError> {
    let mut ws = Workspace::new();
    let obs_name = format!("observable {}", name(observable));
    let (m, obs) = read_json::<ObservableFile>(observable)?.load(&name(observable))?;
    ws.add_observable(&obs_name, m, obs)?;
    let state_name = format!("state {}", name(state));
    let (m, st) = read_json::<StateFile>(state)?.load(&name(state), ws.radicand())?;
    ws.add_state(&state_name, m, st)?;
    Ok(Loaded {
        ws,
        state: state_name,
        observable: obs_name,
    })
}

fn observable_entries(obs: &Observable<QuadComplex>) -> Vec<EigenEntry> {
    obs.eigenpairs()
        .iter()
        .map(|p| EigenEntry {
            value: p.value.to_string(),
            basis: basis(&p.space),
        })
        .collect()
}

fn bc_report(ds: &DeterminateStructure<QuadComplex>, radicand: u32) -> Result<BcReport, BcError> {
    let obs = ds.observable();
    let frame = if obs.is_maximal() {
        let family = boolean_frame(ds)?;
        Some(
            (0..family.len())
                .map(|i| FrameEntry {
                    label: family.label(i),
                    basis: basis(&family.events()[i].subspace),
                })
                .collect(),
        )
    } else {
        None
    };
    Ok(BcReport {
        radicand,
        dimension: ds.state().dim(),
        state: vector(ds.state().vector()),
        maximal: obs.is_maximal(),
        k: ds.k(),
        atoms: ds
            .atoms()
            .iter()
            .enumerate()
            .map(|(i, a)| AtomEntry {
                atom: i + 1,
                eigenvalue: obs.eigenpairs()[a.eigenspace].value.to_string(),
                vector: vector(&a.ray.basis()[0]),
            })
            .collect(),
        dropped: ds
            .dropped()
            .into_iter()
            .map(|i| obs.eigenpairs()[i].value.to_string())
            .collect(),
        remainder: basis(ds.remainder()),
        homs: enumerate_homs(ds)?.iter().map(|h| h.true_atom + 1).collect(),
        frame,
    })
}

fn bc(args: &BcArgs, io: &mut Io) -> std::io::Result<i32> {
    let loaded = match load_context(&args.state, &args.observable) {
        Ok(l) => l,
        Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
    };
    let state = loaded.ws.state(&loaded.state).expect("loaded");
    let obs = loaded.ws.observable(&loaded.observable).expect("loaded");
    if args.frame && !obs.is_maximal() {
        return Ok(io.fail(BcError::NotMaximal, EXIT_REFUSED));
    }
    let report = match project_state(state, obs).and_then(|ds| bc_report(&ds, loaded.ws.radicand())) {
        Ok(r) => r,
        Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
    };
    io.emit(&report, || report.to_text())?;
    Ok(EXIT_OK)
}

fn valuate(args: &ValuateArgs, io: &mut Io) -> std::io::Result<i32> {
    let mut loaded = match load_context(&args.state, &args.observable) {
        Ok(l) => l,
        Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
    };
    let prop_name = format!("proposition {}", name(&args.proposition));
    let prop = read_json::<PropositionFile>(&args.proposition)
        .and_then(|f| f.load(&name(&args.proposition), loaded.ws.radicand()))
        .and_then(|(m, p)| loaded.ws.add_proposition(&prop_name, m, p));
    if let Err(e) = prop {
        return Ok(io.fail(e, EXIT_INPUT));
    }
    let mut compare = Vec::new();
    for path in &args.compare {
        let label = format!("observable {}", name(path));
        let added = read_json::<ObservableFile>(path)
            .and_then(|f| f.load(&name(path)))
            .and_then(|(m, o)| loaded.ws.add_observable(&label, m, o));
        if let Err(e) = added {
            return Ok(io.fail(e, EXIT_INPUT));
        }
        compare.push((name(path), label));
    }
    let ws = &loaded.ws;
    let state = ws.state(&loaded.state).expect("loaded");
    let obs = ws.observable(&loaded.observable).expect("loaded");
    let p = ws.proposition(&prop_name).expect("loaded");

    let build = || -> Result<ValuationReport, crate::truth::TruthError> {
        let ctx = MeasurementContext::new(state.clone(), obs.clone())?;
        let da = contextual_state(&ctx)?;
        let homs = enumerate_homs(ctx.structure())?;
        let verdicts = homs
            .iter()
            .map(|h| {
                Ok(HomVerdict {
                    hom: h.true_atom + 1,
                    verdict: pcc_valuate(&ctx, h, p)?,
                })
            })
            .collect::<Result<Vec<_>, crate::truth::TruthError>>()?;
        let mut expectations = Vec::new();
        let mut targets = vec![(name(&args.observable), obs)];
        targets.extend(compare.iter().map(|(n, label)| (n.clone(), ws.observable(label).expect("loaded"))));
        for (label, b) in targets {
            let pure = expectation(state, b)?;
            let contextual = expectation(&da, b)?;
            expectations.push(ExpectationEntry {
                observable: label,
                equal: pure == contextual,
                pure: pure.to_string(),
                contextual: contextual.to_string(),
            });
        }
        Ok(ValuationReport {
            context: ContextEntry {
                state: vector(state.vector()),
                observable: observable_entries(obs),
                atoms: ctx.structure().atoms().iter().map(|a| vector(&a.ray.basis()[0])).collect(),
                weights: da.weights().iter().map(ToString::to_string).collect(),
                conditions: conditions_check(&ctx)?,
            },
            proposition: basis(p),
            global: global_valuate(state, p)?,
            member: crate::bub_clifton::membership(ctx.structure(), p)?,
            verdicts,
            expectations,
        })
    };
    let report = match build() {
        Ok(r) => r,
        Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
    };
    io.emit(&report, || report.to_text())?;
    Ok(EXIT_OK)
}

fn axioms(args: &AxiomsArgs, io: &mut Io) -> std::io::Result<i32> {
    let loaded = read_json::<FamilyFile>(&args.family).and_then(|f| f.load(&name(&args.family)));
    let family = match loaded {
        Ok((_, f)) => f,
        Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
    };
    let family = if args.close {
        match family.close(CLOSURE_CAP) {
            Ok(f) => f,
            Err(e) => return Ok(io.fail(e, EXIT_REFUSED)),
        }
    } else {
        family
    };
    let report: AxiomReport = match check_axioms(&family) {
        Ok(r) => r,
        Err(e) => return Ok(io.fail(e, EXIT_INPUT)),
    };
    io.emit(&report, || {
        let mut text = format!(
            "events: {}\nclosed under ortho: {}\n",
            report.events,
            if report.closed_under_ortho { "yes" } else { "no" }
        );
        text.push_str(&report.to_text());
        text.push_str(if report.passes() { "AXIOMS PASS\n" } else { "AXIOMS FAIL\n" });
        text
    })?;
    Ok(if report.passes() { EXIT_OK } else { EXIT_FAILED })
}

fn datasets_cmd(cmd: &DatasetsCommand, io: &mut Io) -> std::io::Result<i32> {
    match cmd {
        DatasetsCommand::List => {
            let entries: Vec<DatasetEntry> = datasets::all()
                .into_iter()
                .map(|d| DatasetEntry {
                    name: d.name.to_string(),
                    radicand: d.radicand,
                    dimension: d.system.dim(),
                    rays: d.system.rays().len(),
                    contexts: d.system.contexts().len(),
                    summary: d.summary.to_string(),
                })
                .collect();
            io.emit(&entries, || {
                entries
                    .iter()
                    .map(|e| {
                        format!(
                            "{:<13} m={} d={} rays={:<3} contexts={:<3} {}\n",
                            e.name, e.radicand, e.dimension, e.rays, e.contexts, e.summary
                        )
                    })
                    .collect()
            })?;
            Ok(EXIT_OK)
        }
        DatasetsCommand::Show { name } => match datasets::builtin(name) {
            Ok(d) => {
                let file = RaySystemFile::from_system(d.radicand, &d.system);
                writeln!(io.out, "{}", serde_json::to_string(&file).expect("file serializes"))?;
                Ok(EXIT_OK)
            }
            Err(e) => Ok(io.fail(e, EXIT_INPUT)),
        },
    }
}

fn laws(args: &LawsArgs, seed: u64, io: &mut Io) -> std::io::Result<i32> {
    if args.dims.is_empty() || args.dims.contains(&0) {
        return Ok(io.fail("--dims needs positive dimensions", EXIT_INPUT));
    }
    let report: LawReport = match check_laws(seed, args.samples, &args.dims, &Law::ALL) {
        Ok(r) => r,
        Err(e) => return Ok(io.fail(e, EXIT_FAILED)),
    };
    io.emit(&report, || {
        let mut text = format!("seed {} samples {}\n", report.seed, report.samples);
        for t in &report.tallies {
            text.push_str(&format!("{}: {} checked, {} failed", t.law.name(), t.checked, t.failed));
            if let Some(p) = t.positive {
                text.push_str(&format!(" ({} compatible)", p));
            }
            text.push('\n');
        }
        match &report.distributivity_witness {
            Some([a, b, c]) => text.push_str(&format!(
                "distributivity fails for {}, {}, {}\n",
                tuple(a),
                tuple(b),
                tuple(c)
            )),
            None => text.push_str("no distributivity counterexample found\n"),
        }
        text
    })?;
    Ok(if report.passes() { EXIT_OK } else { EXIT_FAILED })
}
