//! The `subword` command line: argument types, the commands behind them and
//! the JSON run report they print.
//!
//! Exit codes: 0 true, 1 false, 2 indeterminate (search budget spent),
//! 3 usage, input or I/O error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem, Word};
use crate::decomp::{self, Property, SearchOptions, Side, StrongOutcome, VdCertificate, Verdict};
use crate::fixtures;
use crate::frgraph::{self, FrError, GraphIso, Reconstruction};
use crate::io::{self, ComplexJson, IoError, LabelStyle};
use crate::simplicial::{ComplexError, Face, SimplicialComplex};
use crate::subword::{self, SubwordComplex, SubwordError};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const USAGE_EXIT_CODE: i32 = 3;
/// Longest word accepted by `sweep`.
pub const MAX_SWEEP_LEN: usize = 10;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: IoError },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Subword(#[from] SubwordError),
    #[error(transparent)]
    FacetRidge(#[from] FrError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("{0}: the complex is not pure")]
    NotPure(PathBuf),
    #[error("the complexes have different dimensions ({0} and {1})")]
    DimensionMismatch(isize, isize),
    #[error("maximum word length {max_len} exceeds the cap of {cap}")]
    CapExceeded { max_len: usize, cap: usize },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

// ---------------------------------------------------------------------------
// Arguments

#[derive(Debug, Parser)]
#[command(
    name = "subword",
    version,
    about = "Subword complexes, decomposability checks and facet-ridge graph reconstruction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build SC(Q, π) and print it as JSON.
    Build(BuildArgs),
    /// Decide a property of a complex stored as JSON.
    Check(CheckArgs),
    /// Test whether facet-ridge isomorphisms extend to simplicial isomorphisms.
    Reconstruct(ReconstructArgs),
    /// Reconstruction and strong decomposability over all spherical subword complexes.
    Sweep(SweepArgs),
    /// Write a facet-ridge graph, or two with a correspondence, in DOT format.
    ExportDot(ExportDotArgs),
    /// Inspect the built-in reference complexes.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuildCheck {
    /// Dem(Q) = π.
    Spherical,
    /// Star and costar of every face are vertex decomposable.
    StrongVd,
    /// costar({i}) = del({i}) for every vertex i.
    CostarEqualsDeletion,
    /// {i} is a face of costar(I) for every face I with |I| >= 2 and i in I.
    CostarVertices,
    /// link(costar(I), i) = costar(SC(Q \ q_i, π), I \ i).
    CostarLink,
    /// del(costar(I), i) = del(i).
    CostarDeletion,
}

#[derive(Debug, Clone, Args)]
pub struct BuildArgs {
    /// Coxeter type such as A3, B2 or I2(5).
    #[arg(long = "type")]
    pub coxeter_type: String,
    /// The word Q as comma separated 1-indexed generators.
    #[arg(long, default_value = "")]
    pub word: String,
    /// A word for π; it need not be reduced.
    #[arg(long, default_value = "")]
    pub pi_word: String,
    /// Write the complex here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Run a check and print a report.
    #[arg(long = "check", value_enum)]
    pub checks: Vec<BuildCheck>,
    /// Search nodes per decomposability query.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckProperty {
    Spherical,
    Vd,
    Shellable,
    StrongVd,
    StrongShellable,
    Pseudomanifold,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Complex JSON file.
    pub input: PathBuf,
    #[arg(long, short, value_enum)]
    pub property: CheckProperty,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ReconstructArgs {
    /// Source complex; the face map starts here.
    pub first: PathBuf,
    /// Target complex.
    pub second: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long = "type")]
    pub coxeter_type: String,
    /// Longest word to include.
    #[arg(long)]
    pub max_len: usize,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Only run the reconstruction sweep.
    #[arg(long)]
    pub skip_strong: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ExportDotArgs {
    /// Complex JSON file.
    #[arg(required_unless_present = "fixture")]
    pub input: Option<PathBuf>,
    /// Draw both graphs, joined by a facet-ridge isomorphism.
    #[arg(long, requires = "input")]
    pub against: Option<PathBuf>,
    /// Use a built-in complex or pair instead of a file.
    #[arg(long, conflicts_with = "input")]
    pub fixture: Option<String>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum FixturesCommand {
    /// List the built-in fixtures.
    List,
    /// Rebuild a fixture and check every stored property.
    Verify { name: String },
    /// Write a fixture's complexes as JSON files.
    Export {
        name: String,
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        CheckResult {
            name: name.into(),
            verdict,
            witness: None,
            certificate: None,
            detail: None,
        }
    }

    pub fn witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn certificate(mut self, certificate: Value) -> Self {
        self.certificate = Some(certificate);
        self
    }

    pub fn detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

/// Everything a command decided, as printed on standard output.
///
/// Reports of identical runs differ only in `timings`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub timings: Timings,
}

impl RunReport {
    fn new(command: Vec<String>) -> Self {
        RunReport {
            tool: "subword".to_string(),
            version: VERSION.to_string(),
            command,
            verdict: Verdict::True,
            checks: Vec::new(),
            summary: None,
            notes: Vec::new(),
            timings: Timings { total_ms: 0.0 },
        }
    }

    fn push(&mut self, check: CheckResult) {
        self.verdict = self.verdict.and(check.verdict);
        self.checks.push(check);
    }

    fn finish(mut self, start: Instant) -> Self {
        self.timings.total_ms = start.elapsed().as_secs_f64() * 1000.0;
        self
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

fn labels(style: LabelStyle, face: Face) -> Value {
    json!(style.face_labels(face))
}

fn facet_list(style: LabelStyle, complex: &SimplicialComplex) -> Value {
    complex.facets().iter().map(|&f| labels(style, f)).collect()
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Star => "star",
        Side::Costar => "costar",
    }
}

fn strong_result(name: &str, outcome: &StrongOutcome, style: LabelStyle) -> CheckResult {
    let result = CheckResult::new(name, outcome.verdict);
    match outcome.witness {
        Some((face, side)) => result.witness(json!({
            "face": labels(style, face),
            "side": side_name(side),
        })),
        None => result,
    }
}

fn vd_json(cert: &VdCertificate, style: LabelStyle) -> Value {
    match cert {
        VdCertificate::Simplex { facet } => json!({
            "simplex": facet.map(|f| style.face_labels(f)),
        }),
        VdCertificate::Shed {
            vertex,
            deletion,
            link,
        } => json!({
            "shed": style.label(*vertex),
            "deletion": vd_json(deletion, style),
            "link": vd_json(link, style),
        }),
    }
}

fn word_string(word: &Word) -> String {
    word.one_indexed()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------------------
// build

impl BuildArgs {
    fn echo(&self) -> Vec<String> {
        let mut out = vec![
            "build".into(),
            "--type".into(),
            self.coxeter_type.clone(),
            "--word".into(),
            self.word.clone(),
            "--pi-word".into(),
            self.pi_word.clone(),
        ];
        for c in &self.checks {
            out.push("--check".into());
            out.push(
                c.to_possible_value()
                    .expect("no skipped values")
                    .get_name()
                    .into(),
            );
        }
        out.extend(["--budget".into(), self.budget.to_string()]);
        out
    }
}

pub fn build_complex(args: &BuildArgs) -> Result<SubwordComplex, CommandError> {
    let system = Arc::new(CoxeterSystem::from_type_str(&args.coxeter_type)?);
    let word: Word = args.word.parse()?;
    let pi_word: Word = args.pi_word.parse()?;
    system.check_word(&pi_word)?;
    let pi = system.evaluate(&pi_word);
    Ok(SubwordComplex::build(system, word, pi)?)
}

/// Runs the requested checks on a subword complex.
pub fn build_report(args: &BuildArgs, sc: &SubwordComplex) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport::new(args.echo());
    let options = SearchOptions {
        budget: args.budget,
        ..SearchOptions::default()
    };
    let spherical = sc.is_spherical().unwrap_or(false);
    for &check in &args.checks {
        report.push(subword_check(sc, check, spherical, options));
    }
    let guaranteed = args.checks.iter().any(|c| {
        matches!(
            c,
            BuildCheck::CostarEqualsDeletion
                | BuildCheck::CostarVertices
                | BuildCheck::CostarLink
                | BuildCheck::CostarDeletion
        )
    });
    if guaranteed && !spherical {
        report.notes.push(
            "the complex is not spherical, so the costar identities are not guaranteed to hold"
                .into(),
        );
    }
    report.summary = Some(json!({
        "type": sc.system().coxeter_type().to_string(),
        "word": sc.word().one_indexed(),
        "pi_word": sc.system().reduced_word(sc.pi()).one_indexed(),
        "facets": facet_list(LabelStyle::Decimal, sc.complex()),
    }));
    report.finish(start)
}

fn first_failure<T>(
    cases: impl Iterator<Item = T>,
    holds: impl Fn(&T) -> bool,
) -> (usize, Option<T>) {
    let mut count = 0;
    for case in cases {
        count += 1;
        if !holds(&case) {
            return (count, Some(case));
        }
    }
    (count, None)
}

fn identity_result(name: &str, cases: usize, failure: Option<Value>) -> CheckResult {
    let verdict = if failure.is_some() {
        Verdict::False
    } else {
        Verdict::True
    };
    let result = CheckResult::new(name, verdict).detail(json!({ "cases_checked": cases }));
    match failure {
        Some(w) => result.witness(w),
        None => result,
    }
}

fn subword_check(
    sc: &SubwordComplex,
    check: BuildCheck,
    spherical: bool,
    options: SearchOptions,
) -> CheckResult {
    let style = LabelStyle::Decimal;
    let complex = sc.complex();
    let big_faces = || complex.faces().into_iter().filter(|f| f.len() >= 2);
    let pairs = || big_faces().flat_map(|f| f.vertices().map(move |i| (f, i)));
    let mut result = match check {
        BuildCheck::Spherical => {
            let dem = sc.system().demazure_product(sc.word());
            CheckResult::new(
                "spherical",
                if spherical {
                    Verdict::True
                } else {
                    Verdict::False
                },
            )
            .detail(json!({
                "demazure_product": sc.system().reduced_word(&dem).one_indexed(),
                "pi_word": sc.system().reduced_word(sc.pi()).one_indexed(),
                "void": complex.is_void(),
            }))
        }
        BuildCheck::StrongVd => {
            let outcome = decomp::is_strongly_vertex_decomposable(complex, options);
            strong_result("strong-vd", &outcome, style)
        }
        BuildCheck::CostarEqualsDeletion => {
            let (n, bad) = first_failure(complex.vertex_set().vertices(), |&i| {
                sc.costar_equals_deletion(i).unwrap_or(false)
            });
            let witness = bad.map(|i| {
                let v = Face::singleton(i);
                json!({
                    "vertex": style.label(i),
                    "costar": facet_list(style, &complex.costar(v)),
                    "deletion": facet_list(style, &complex.deletion(v)),
                })
            });
            identity_result("costar-equals-deletion", n, witness)
        }
        BuildCheck::CostarVertices => {
            let (n, bad) = first_failure(pairs(), |&(f, i)| {
                complex.costar(f).contains_face(Face::singleton(i))
            });
            let witness = bad.map(|(f, i)| {
                json!({
                    "face": labels(style, f),
                    "vertex": style.label(i),
                    "costar": facet_list(style, &complex.costar(f)),
                })
            });
            identity_result("costar-vertices", n, witness)
        }
        BuildCheck::CostarLink => {
            let (n, bad) = first_failure(pairs(), |&(f, i)| {
                sc.costar_link_identity_raw(f, i).unwrap_or(false)
            });
            let witness =
                bad.map(|(f, i)| json!({ "face": labels(style, f), "vertex": style.label(i) }));
            identity_result("costar-link", n, witness)
        }
        BuildCheck::CostarDeletion => {
            let (n, bad) = first_failure(pairs(), |&(f, i)| {
                sc.costar_deletion_identity_raw(f, i).unwrap_or(false)
            });
            let witness = bad.map(|(f, i)| {
                let v = Face::singleton(i);
                json!({
                    "face": labels(style, f),
                    "vertex": style.label(i),
                    "costar_deletion": facet_list(style, &complex.costar(f).deletion(v)),
                    "deletion": facet_list(style, &complex.deletion(v)),
                })
            });
            identity_result("costar-deletion", n, witness)
        }
    };
    if check != BuildCheck::Spherical {
        match &mut result.detail {
            Some(Value::Object(map)) => {
                map.insert("spherical".into(), json!(spherical));
            }
            _ => result.detail = Some(json!({ "spherical": spherical })),
        }
    }
    result
}

// ---------------------------------------------------------------------------
// check

fn read_complex(path: &Path) -> Result<(ComplexJson, SimplicialComplex), CommandError> {
    let text = std::fs::read_to_string(path).map_err(|source| CommandError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let input = |source| CommandError::Input {
        path: path.to_path_buf(),
        source,
    };
    let parsed: ComplexJson = serde_json::from_str(&text).map_err(|e| input(e.into()))?;
    let complex = parsed.to_complex().map_err(input)?;
    Ok((parsed, complex))
}

pub fn check(args: &CheckArgs) -> Result<RunReport, CommandError> {
    let start = Instant::now();
    let (parsed, complex) = read_complex(&args.input)?;
    let style = parsed.style();
    let options = SearchOptions {
        budget: args.budget,
        ..SearchOptions::default()
    };
    let property = args
        .property
        .to_possible_value()
        .expect("no skipped values");
    let name = property.get_name();
    let mut report = RunReport::new(vec![
        "check".into(),
        args.input.display().to_string(),
        "--property".into(),
        name.into(),
        "--budget".into(),
        args.budget.to_string(),
    ]);
    let result = match args.property {
        CheckProperty::Spherical => {
            let meta = parsed.subword.as_ref().ok_or_else(|| {
                CommandError::Usage(format!(
                    "{}: sphericity needs the \"subword\" field recording Q and π",
                    args.input.display()
                ))
            })?;
            let sc = SubwordComplex::from_words(&meta.coxeter_type, &meta.word, &meta.pi_word)?;
            if sc.complex() != &complex {
                return Err(CommandError::Usage(format!(
                    "{}: the facets do not match the recorded subword complex",
                    args.input.display()
                )));
            }
            let spherical = sc.is_spherical().unwrap_or(false);
            subword_check(&sc, BuildCheck::Spherical, spherical, options)
        }
        CheckProperty::Vd => {
            let outcome = decomp::is_vertex_decomposable(&complex, options);
            let result = CheckResult::new(name, outcome.verdict());
            match outcome.certificate() {
                Some(cert) => result.certificate(vd_json(cert, style)),
                None => result,
            }
        }
        CheckProperty::Shellable => {
            let outcome = decomp::is_shellable(&complex, options);
            let result = CheckResult::new(name, outcome.verdict());
            match outcome.certificate() {
                Some(cert) => result.certificate(json!({
                    "order": cert.order.iter().map(|&f| labels(style, f)).collect::<Vec<_>>(),
                })),
                None => result,
            }
        }
        CheckProperty::StrongVd | CheckProperty::StrongShellable => {
            let prop = if args.property == CheckProperty::StrongVd {
                Property::VertexDecomposable
            } else {
                Property::Shellable
            };
            strong_result(name, &decomp::is_strongly(prop, &complex, options), style)
        }
        CheckProperty::Pseudomanifold => match complex.pseudomanifold_report() {
            Ok(pm) => {
                let verdict = if pm.holds() {
                    Verdict::True
                } else {
                    Verdict::False
                };
                let faces = |v: &[Face]| v.iter().map(|&f| labels(style, f)).collect::<Vec<_>>();
                CheckResult::new(name, verdict).detail(json!({
                    "boundary_ridges": faces(&pm.boundary_ridges),
                    "singular_ridges": faces(&pm.singular_ridges),
                    "connected": pm.connected,
                }))
            }
            Err(_) => CheckResult::new(name, Verdict::False).detail(json!({ "pure": false })),
        },
    };
    report.push(result);
    report.summary = Some(json!({
        "facets": complex.facet_count(),
        "dimension": complex.dim(),
        "f_vector": complex.f_vector(),
    }));
    Ok(report.finish(start))
}

// ---------------------------------------------------------------------------
// reconstruct

/// Runs the face-map verifier on every facet-ridge isomorphism from the
/// first complex to the second.
pub fn reconstruct(args: &ReconstructArgs) -> Result<RunReport, CommandError> {
    let start = Instant::now();
    let (pa, a) = read_complex(&args.first)?;
    let (pb, b) = read_complex(&args.second)?;
    let mut report = RunReport::new(vec![
        "reconstruct".into(),
        args.first.display().to_string(),
        args.second.display().to_string(),
    ]);
    reconstruct_complexes(
        &mut report,
        (&a, pa.style(), &args.first),
        (&b, pb.style(), &args.second),
    )?;
    Ok(report.finish(start))
}

fn reconstruct_complexes(
    report: &mut RunReport,
    (a, sa, path_a): (&SimplicialComplex, LabelStyle, &Path),
    (b, sb, path_b): (&SimplicialComplex, LabelStyle, &Path),
) -> Result<(), CommandError> {
    for (c, p) in [(a, path_a), (b, path_b)] {
        if !c.is_pure() {
            return Err(CommandError::NotPure(p.to_path_buf()));
        }
    }
    let (da, db) = (a.dim().unwrap_or(-2), b.dim().unwrap_or(-2));
    if da != db {
        return Err(CommandError::DimensionMismatch(da, db));
    }
    let fa = a.facet_ridge_graph()?;
    let fb = b.facet_ridge_graph()?;
    let isos = frgraph::isomorphisms(&fa.graph, &fb.graph);
    let simplicial = frgraph::find_simplicial_isomorphism(a, b).is_some();
    report.push(CheckResult::new(
        "facet-ridge graphs isomorphic",
        if isos.is_empty() {
            Verdict::False
        } else {
            Verdict::True
        },
    ));
    let mut per_iso = Vec::new();
    let mut first_failure = None;
    for (k, iso) in isos.iter().enumerate() {
        let entry = reconstruction_json(
            &frgraph::verify_reconstruction(iso, a, b)?,
            iso,
            a,
            b,
            sa,
            sb,
        );
        if first_failure.is_none() && entry["verdict"] == "failure" {
            let mut w = entry.clone();
            w["isomorphism"] = json!(k);
            first_failure = Some(w);
        }
        per_iso.push(entry);
    }
    let extending = per_iso
        .iter()
        .filter(|e| e["verdict"] == "isomorphism-extension")
        .count();
    if !isos.is_empty() {
        let result = CheckResult::new(
            "every isomorphism extends",
            if first_failure.is_some() {
                Verdict::False
            } else {
                Verdict::True
            },
        );
        report.push(match first_failure {
            Some(w) => result.witness(w),
            None => result,
        });
    }
    report.summary = Some(json!({
        "isomorphisms": isos.len(),
        "extending": extending,
        "simplicially_isomorphic": simplicial,
        "source_max_degree": frgraph::max_vertex_degree(a).map(|(v, d)| json!([sa.label(v), d])),
        "target_max_degree": frgraph::max_vertex_degree(b).map(|(v, d)| json!([sb.label(v), d])),
        "per_isomorphism": per_iso,
    }));
    Ok(())
}

fn reconstruction_json(
    r: &Reconstruction,
    iso: &GraphIso,
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    sa: LabelStyle,
    sb: LabelStyle,
) -> Value {
    let facet_map: Vec<Value> = iso
        .map
        .iter()
        .enumerate()
        .map(|(i, &j)| json!([sa.face_name(a.facets()[i]), sb.face_name(b.facets()[j])]))
        .collect();
    match r {
        Reconstruction::IsomorphismExtension { vertex_map } => {
            let vertex_map: BTreeMap<String, String> = vertex_map
                .iter()
                .map(|(&u, &v)| (sa.label(u), sb.label(v)))
                .collect();
            json!({
                "verdict": "isomorphism-extension",
                "vertex_map": vertex_map,
                "facet_map": facet_map,
            })
        }
        Reconstruction::Failure {
            witness,
            g_image,
            kind,
            degraded,
        } => {
            let empty_images: Vec<Value> = degraded
                .iter()
                .filter(|d| d.image.is_empty() && !d.face.is_empty())
                .map(|d| labels(sa, d.face))
                .collect();
            json!({
                "verdict": "failure",
                "witness": labels(sa, *witness),
                "g_image": labels(sb, *g_image),
                "kind": kind,
                "degraded_faces": degraded.len(),
                "empty_images": empty_images,
                "facet_map": facet_map,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// sweep

pub fn sweep(args: &SweepArgs) -> Result<RunReport, CommandError> {
    let start = Instant::now();
    if args.max_len > MAX_SWEEP_LEN {
        return Err(CommandError::CapExceeded {
            max_len: args.max_len,
            cap: MAX_SWEEP_LEN,
        });
    }
    let system = Arc::new(CoxeterSystem::from_type_str(&args.coxeter_type)?);
    let mut echo = vec![
        "sweep".into(),
        "--type".into(),
        system.coxeter_type().to_string(),
        "--max-len".into(),
        args.max_len.to_string(),
        "--budget".into(),
        args.budget.to_string(),
    ];
    if args.skip_strong {
        echo.push("--skip-strong".into());
    }
    let mut report = RunReport::new(echo);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()?;
    let options = SearchOptions {
        budget: args.budget,
        ..SearchOptions::default()
    };
    let inventory = subword::spherical_inventory(&system, args.max_len);
    let word_of = |i: usize| word_string(inventory[i].word());
    let (sweep_json, strong) = pool.install(|| -> Result<_, CommandError> {
        let mut by_dim: BTreeMap<isize, Vec<usize>> = BTreeMap::new();
        for (i, sc) in inventory.iter().enumerate() {
            by_dim
                .entry(sc.complex().dim().unwrap_or(-2))
                .or_default()
                .push(i);
        }
        let mut totals = (0usize, 0usize, 0u64);
        let mut flagged = Vec::new();
        for indices in by_dim.values() {
            let family: Vec<SimplicialComplex> = indices
                .iter()
                .map(|&i| inventory[i].complex().clone())
                .collect();
            let r = frgraph::exhaustive_reconstruction_sweep(&family)?;
            totals.0 += r.distinct;
            totals.1 += r.classes;
            totals.2 += r.isomorphisms_checked;
            flagged.extend(r.flagged.iter().map(|p| {
                json!({
                    "first": word_of(indices[p.first]),
                    "second": word_of(indices[p.second]),
                    "reason": p.reason,
                })
            }));
        }
        let strong: Option<Vec<StrongOutcome>> = (!args.skip_strong).then(|| {
            inventory
                .par_iter()
                .map(|sc| decomp::is_strongly_vertex_decomposable(sc.complex(), options))
                .collect()
        });
        let sweep_json = json!({
            "distinct": totals.0,
            "classes": totals.1,
            "isomorphisms_checked": totals.2,
            "flagged": flagged,
        });
        Ok((sweep_json, strong))
    })?;
    let flagged = sweep_json["flagged"].as_array().map_or(0, Vec::len);
    let result = CheckResult::new(
        "every isomorphism extends",
        if flagged == 0 {
            Verdict::True
        } else {
            Verdict::False
        },
    );
    report.push(match sweep_json["flagged"].get(0) {
        Some(w) => result.witness(w.clone()),
        None => result,
    });
    let mut summary = json!({
        "type": system.coxeter_type().to_string(),
        "max_len": args.max_len,
        "complexes": inventory.len(),
        "reconstruction": sweep_json,
    });
    if let Some(strong) = strong {
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        let mut verdict = Verdict::True;
        let mut witness = None;
        for (i, o) in strong.iter().enumerate() {
            *counts
                .entry(json!(o.verdict).as_str().unwrap_or_default().to_string())
                .or_default() += 1;
            verdict = verdict.and(o.verdict);
            if o.verdict != Verdict::True && witness.is_none() {
                let (face, side) = o.witness.expect("non-true outcomes carry a face");
                witness = Some(json!({
                    "word": word_of(i),
                    "face": labels(LabelStyle::Decimal, face),
                    "side": side_name(side),
                }));
            }
        }
        let result = CheckResult::new("strong-vd", verdict);
        report.push(match witness {
            Some(w) => result.witness(w),
            None => result,
        });
        summary["strong_vd"] = json!(counts);
    }
    report.summary = Some(summary);
    Ok(report.finish(start))
}

// ---------------------------------------------------------------------------
// export-dot

fn graph_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "complex".into(), |s| s.to_string_lossy().into_owned())
}

pub fn export_dot(args: &ExportDotArgs) -> Result<String, CommandError> {
    if let Some(name) = &args.fixture {
        return fixture_dot(name);
    }
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| CommandError::Usage("an input file or --fixture is required".into()))?;
    let (parsed, complex) = read_complex(path)?;
    let style = parsed.style();
    let fr = complex.facet_ridge_graph()?;
    match &args.against {
        None => Ok(io::fr_graph_dot(&fr, style, &graph_name(path))),
        Some(other) => {
            let (_, second) = read_complex(other)?;
            let fr2 = second.facet_ridge_graph()?;
            let iso = frgraph::find_isomorphism(&fr.graph, &fr2.graph).ok_or_else(|| {
                CommandError::Usage("the facet-ridge graphs are not isomorphic".into())
            })?;
            Ok(io::isomorphism_dot(&fr, &fr2, &iso, style))
        }
    }
}

fn fixture_dot(name: &str) -> Result<String, CommandError> {
    let style = LabelStyle::Alphanumeric;
    let single = |c: SimplicialComplex| -> Result<String, CommandError> {
        Ok(io::fr_graph_dot(&c.facet_ridge_graph()?, style, name))
    };
    match name {
        "rp2-minimal" => single(fixtures::rp2_minimal()),
        "torus-minimal" => single(fixtures::torus_minimal()),
        "rp2-pair" | "torus-pair" => {
            let fx = if name == "rp2-pair" {
                fixtures::rp2_pair()
            } else {
                fixtures::torus_pair()
            };
            Ok(io::isomorphism_dot(
                &fx.source.complex.facet_ridge_graph()?,
                &fx.target.complex.facet_ridge_graph()?,
                &fx.correspondence,
                style,
            ))
        }
        other => Err(CommandError::Usage(format!(
            "no facet-ridge drawing for fixture {other:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// fixtures

pub fn fixtures_verify(name: &str) -> Result<RunReport, CommandError> {
    let start = Instant::now();
    let fx = fixtures::verify(name)?;
    let mut report = RunReport::new(vec!["fixtures".into(), "verify".into(), name.into()]);
    for line in fx.checks {
        let verdict = if line.passed {
            Verdict::True
        } else {
            Verdict::False
        };
        report.push(CheckResult::new(line.check, verdict).detail(json!(line.detail)));
    }
    report.notes = fx.notes;
    Ok(report.finish(start))
}

/// File names and contents of a fixture's complexes.
pub fn fixtures_export(name: &str) -> Result<Vec<(String, String)>, CommandError> {
    let style = LabelStyle::Alphanumeric;
    let one = |file: &str, c: &SimplicialComplex| (file.to_string(), io::complex_to_json(c, style));
    Ok(match name {
        "rp2-minimal" => vec![one("rp2-minimal.json", &fixtures::rp2_minimal())],
        "torus-minimal" => vec![one("torus-minimal.json", &fixtures::torus_minimal())],
        "rp2-pair" | "torus-pair" => {
            let fx = if name == "rp2-pair" {
                fixtures::rp2_pair()
            } else {
                fixtures::torus_pair()
            };
            vec![
                one(&format!("{name}-source.json"), &fx.source.complex),
                one(&format!("{name}-target.json"), &fx.target.complex),
            ]
        }
        "subword" => fixtures::subword_fixtures()
            .iter()
            .map(|f| {
                let json = serde_json::to_string_pretty(&ComplexJson::from_subword(&f.build()))
                    .expect("plain data serialises");
                (format!("{}.json", f.name), json)
            })
            .collect(),
        other => return Err(IoError::BadLabel(format!("unknown fixture {other}")).into()),
    })
}

// ---------------------------------------------------------------------------
// Dispatch

/// What a command produced: text for standard output, files to write and
/// the exit code.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub files: Vec<(PathBuf, String)>,
    pub exit_code: i32,
}

impl Output {
    fn report(report: &RunReport) -> Self {
        Output {
            stdout: report.to_json(),
            files: Vec::new(),
            exit_code: report.exit_code(),
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Output, CommandError> {
    match &cli.command {
        Command::Build(args) => {
            let sc = build_complex(args)?;
            let complex = serde_json::to_string_pretty(&ComplexJson::from_subword(&sc))
                .expect("plain data serialises");
            let mut out = if args.checks.is_empty() {
                Output {
                    stdout: complex.clone(),
                    ..Output::default()
                }
            } else {
                Output::report(&build_report(args, &sc))
            };
            if let Some(path) = &args.output {
                if args.checks.is_empty() {
                    out.stdout.clear();
                }
                out.files.push((path.clone(), complex));
            }
            Ok(out)
        }
        Command::Check(args) => Ok(Output::report(&check(args)?)),
        Command::Reconstruct(args) => Ok(Output::report(&reconstruct(args)?)),
        Command::Sweep(args) => Ok(Output::report(&sweep(args)?)),
        Command::ExportDot(args) => {
            let dot = export_dot(args)?;
            Ok(match &args.output {
                Some(path) => Output {
                    files: vec![(path.clone(), dot)],
                    ..Output::default()
                },
                None => Output {
                    stdout: dot,
                    ..Output::default()
                },
            })
        }
        Command::Fixtures(FixturesCommand::List) => {
            let lines: Vec<String> = fixtures::NAMES.iter().map(|n| n.to_string()).collect();
            Ok(Output {
                stdout: lines.join("\n"),
                ..Output::default()
            })
        }
        Command::Fixtures(FixturesCommand::Verify { name }) => {
            Ok(Output::report(&fixtures_verify(name)?))
        }
        Command::Fixtures(FixturesCommand::Export { name, dir }) => Ok(Output {
            files: fixtures_export(name)?
                .into_iter()
                .map(|(file, text)| (dir.join(file), text))
                .collect(),
            ..Output::default()
        }),
    }
}

/// Parses arguments, runs the command and writes its output. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { USAGE_EXIT_CODE } else { 0 };
        }
    };
    let result = execute(&cli).and_then(|out| {
        for (path, text) in &out.files {
            let parent = path.parent().filter(|p| !p.as_os_str().is_empty());
            parent
                .map_or(Ok(()), std::fs::create_dir_all)
                .and_then(|()| std::fs::write(path, text))
                .map_err(|source| CommandError::Write {
                    path: path.clone(),
                    source,
                })?;
        }
        Ok(out)
    });
    match result {
        Ok(out) => {
            if !out.stdout.is_empty() {
                use std::io::Write;
                // A closed pipe on the reading side is not an error here.
                let _ = writeln!(std::io::stdout().lock(), "{}", out.stdout);
            }
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            USAGE_EXIT_CODE
        }
    }
}
