//! `lbt`: construct, analyze, transform, and verify simplicial complexes
//! with bounded missing-face dimension.
//!
//! Exit codes: 0 clean, 1 a proven check failed, 2 usage / bad parameters,
//! 3 file or parse error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lbt_core::complex::SimplicialComplex;
use lbt_core::homology::{
    alexander_duality_check, classify, reduced_homology, Classification,
};
use lbt_core::polyvec::{f_to_h, g_of_h, hierarchy_expand, join_expand};
use lbt_core::verify::{
    check_conjecture_1_3, check_conjecture_1_4, check_lower_bounds, enumerate_and_verify,
    verify_mpw, verify_recurrence, Check, CheckStatus, EnumerationOutcome, VerificationReport,
};
use lbt_core::{constructions, io, Error};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "lbt", version, about = "exact f/h/g-vector, homology and lower-bound toolkit for simplicial complexes")]
struct Cli {
    /// Output format: human-readable text or a JSON report document
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the named complexes and print its facet file
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Compute invariants of a complex read from a facet file
    #[command(subcommand)]
    Analyze(AnalyzeCmd),
    /// Apply an operation and print the resulting facet file
    #[command(subcommand)]
    Transform(TransformCmd),
    /// Run verification harnesses; exits 1 if a proven check fails
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Basis expansions of the polynomials P_{d,i}
    #[command(subcommand)]
    Expand(ExpandCmd),
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// S(i,d): join of simplex boundaries minimizing face numbers in C(i,d)
    Sid {
        #[arg(long)]
        i: i64,
        #[arg(long)]
        d: i64,
    },
    /// S(i,d,n): the n-vertex member of the equality family
    Sidn {
        #[arg(long)]
        i: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
    },
    /// Stacked d-sphere on n vertices
    Stacked {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: i64,
    },
    /// Boundary of the (d+1)-crosspolytope (= S(1,d))
    Crosspoly {
        #[arg(long)]
        d: i64,
    },
    /// Boundary of the d-simplex
    SimplexBoundary {
        #[arg(long)]
        d: i64,
    },
}

#[derive(Subcommand)]
enum AnalyzeCmd {
    /// Face numbers (f_{-1}, f_0, ..., f_d)
    Fvector { file: String },
    /// h-vector (binomial transform of the f-vector)
    Hvector { file: String },
    /// Coefficients of the h-polynomial in the basis B_{d,i}
    Gvector {
        #[arg(long)]
        i: i64,
        file: String,
    },
    /// Missing faces (minimal non-faces)
    Missing { file: String },
    /// Reduced integral homology: betti numbers and torsion
    Homology { file: String },
    /// Membership in C(i,d) / HS(i,d,n), flagness, homology-sphere test
    Classify {
        #[arg(long)]
        i: i64,
        file: String,
    },
}

#[derive(Subcommand)]
enum TransformCmd {
    /// Join of two complexes (labels of the second are offset)
    Join { file: String, file2: String },
    /// Join with two new points
    Suspend { file: String },
    /// Stellar subdivision of an edge
    Subdivide {
        #[arg(long, value_parser = parse_edge)]
        edge: (u32, u32),
        file: String,
    },
    /// Contract an edge (requires the link condition)
    Contract {
        #[arg(long, value_parser = parse_edge)]
        edge: (u32, u32),
        file: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Compare f(Δ) against f(S(i,d)) bound by bound
    Bounds {
        #[arg(long)]
        i: i64,
        file: String,
    },
    /// Total-face-count bound F(Δ) >= F(S(i,d))
    Conj13 {
        #[arg(long)]
        i: i64,
        file: String,
    },
    /// Nonnegativity of g^{(i)}(Δ)
    Conj14 {
        #[arg(long)]
        i: i64,
        file: String,
    },
    /// f_j(S(i,d)) = f_j(S(i,d-r)) + binomial recurrence, exhaustive over a range
    Recurrence {
        #[arg(long)]
        imax: i64,
        #[arg(long)]
        dmax: i64,
    },
    /// a_{k,d}, b_{k,d} recurrence vs closed form, and f_k(S(1,d,n)) = a·n − b
    Mpw {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        dmax: usize,
    },
    /// Exhaustive minimizer search over d-complexes on <= nmax vertices
    Enumerate {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        nmax: i64,
        #[arg(long)]
        i: i64,
        /// Lift the desk-scale guard on (d, nmax)
        #[arg(long)]
        override_guard: bool,
    },
    /// Alexander duality between Δ and its missing-face complex Γ
    Duality { file: String },
}

#[derive(Subcommand)]
enum ExpandCmd {
    /// P_{d,i} in the basis B_{d,i+1}
    Hierarchy {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        i: i64,
    },
    /// P_{d,i}·P_{d2,i} in the basis B_{d+d2+1,i}
    Joinpoly {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        d2: i64,
        #[arg(long)]
        i: i64,
    },
}

fn parse_edge(s: &str) -> Result<(u32, u32), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected u,v; got {s:?}"));
    }
    let u: u32 = parts[0].trim().parse().map_err(|_| format!("bad label {:?}", parts[0]))?;
    let v: u32 = parts[1].trim().parse().map_err(|_| format!("bad label {:?}", parts[1]))?;
    if u == 0 || v == 0 || u == v {
        return Err(format!("edge labels must be distinct and positive; got {s:?}"));
    }
    Ok((u, v))
}

/// The machine-readable report. Key names are part of the output contract.
#[derive(Default, Serialize)]
struct ReportDocument {
    schema_version: &'static str,
    subject: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    parameters: BTreeMap<&'static str, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f_vector: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h_vector: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g_vector: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    torsion: Option<Vec<(i64, Vec<u64>)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    facets: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    missing_faces: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumeration: Option<EnumerationOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<Check>,
}

impl ReportDocument {
    fn new(subject: impl Into<String>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            subject: subject.into(),
            ..Default::default()
        }
    }

    fn with_report(mut self, r: VerificationReport) -> Self {
        self.subject = r.subject;
        self.checks = r.checks;
        self
    }

    fn proven_failure(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.proven && c.status == CheckStatus::Fails)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits 2 on usage errors
    match run(cli.command) {
        Ok(doc) => {
            emit(&doc, cli.format);
            if doc.proven_failure() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// File and parse problems are 3; every other input rejection is usage (2).
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::EmptyInput | Error::BadLabel(_) => 3,
        _ => 2,
    }
}

fn read_complex(path: &str) -> Result<SimplicialComplex, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    io::parse_facets(&text)
}

fn run(cmd: Command) -> Result<ReportDocument, Error> {
    match cmd {
        Command::Construct(c) => run_construct(c),
        Command::Analyze(c) => run_analyze(c),
        Command::Transform(c) => run_transform(c),
        Command::Verify(c) => run_verify(c),
        Command::Expand(c) => run_expand(c),
    }
}

fn facet_doc(subject: String, params: &[(&'static str, i64)], cx: &SimplicialComplex) -> ReportDocument {
    let mut doc = ReportDocument::new(subject);
    doc.parameters = params.iter().copied().collect();
    let dense = cx.relabel_dense();
    doc.f_vector = Some(dense.f_vector().entries().to_vec());
    doc.facets = Some(dense.facets().to_vec());
    doc
}

fn run_construct(cmd: ConstructCmd) -> Result<ReportDocument, Error> {
    match cmd {
        ConstructCmd::Sid { i, d } => {
            let cx = constructions::construct_s(i, d)?;
            Ok(facet_doc(format!("S({i},{d})"), &[("i", i), ("d", d)], &cx))
        }
        ConstructCmd::Sidn { i, d, n } => {
            let cx = constructions::construct_s_idn(i, d, n)?;
            Ok(facet_doc(format!("S({i},{d},{n})"), &[("i", i), ("d", d), ("n", n)], &cx))
        }
        ConstructCmd::Stacked { d, n } => {
            let cx = constructions::stacked_sphere(d, n)?;
            Ok(facet_doc(format!("Sk({d},{n})"), &[("d", d), ("n", n)], &cx))
        }
        ConstructCmd::Crosspoly { d } => {
            let cx = constructions::crosspolytope_boundary(d)?;
            Ok(facet_doc(format!("crosspolytope boundary, d={d}"), &[("d", d)], &cx))
        }
        ConstructCmd::SimplexBoundary { d } => {
            let cx = constructions::simplex_boundary(d)?;
            Ok(facet_doc(format!("simplex boundary, d={d}"), &[("d", d)], &cx))
        }
    }
}

fn run_analyze(cmd: AnalyzeCmd) -> Result<ReportDocument, Error> {
    match cmd {
        AnalyzeCmd::Fvector { file } => {
            let cx = read_complex(&file)?;
            let mut doc = ReportDocument::new(format!("f-vector of {file}"));
            doc.f_vector = Some(cx.f_vector().entries().to_vec());
            Ok(doc)
        }
        AnalyzeCmd::Hvector { file } => {
            let cx = read_complex(&file)?;
            let mut doc = ReportDocument::new(format!("h-vector of {file}"));
            doc.f_vector = Some(cx.f_vector().entries().to_vec());
            doc.h_vector = Some(f_to_h(&cx.f_vector()).entries().to_vec());
            Ok(doc)
        }
        AnalyzeCmd::Gvector { i, file } => {
            let cx = read_complex(&file)?;
            let h = f_to_h(&cx.f_vector());
            let g = g_of_h(&h, i)?;
            let mut doc = ReportDocument::new(format!("g-vector of {file}"));
            doc.h_vector = Some(h.entries().to_vec());
            doc.g_vector = Some(g.entries.clone());
            doc.i = Some(i);
            Ok(doc)
        }
        AnalyzeCmd::Missing { file } => {
            let cx = read_complex(&file)?;
            let mut doc = ReportDocument::new(format!("missing faces of {file}"));
            doc.parameters.insert("max_missing_dim", cx.max_missing_dim());
            doc.missing_faces = Some(cx.missing_faces());
            Ok(doc)
        }
        AnalyzeCmd::Homology { file } => {
            let cx = read_complex(&file)?;
            let h = reduced_homology(&cx);
            let mut doc = ReportDocument::new(format!("reduced homology of {file}"));
            doc.betti = Some(h.betti_vec());
            doc.torsion = Some(h.torsion_u64());
            Ok(doc)
        }
        AnalyzeCmd::Classify { i, file } => {
            let cx = read_complex(&file)?;
            let cls = classify(&cx, i)?;
            let mut doc = ReportDocument::new(format!("classification of {file}"));
            doc.i = Some(i);
            doc.classification = Some(cls);
            Ok(doc)
        }
    }
}

fn run_transform(cmd: TransformCmd) -> Result<ReportDocument, Error> {
    match cmd {
        TransformCmd::Join { file, file2 } => {
            let a = read_complex(&file)?;
            let b = read_complex(&file2)?;
            Ok(facet_doc(format!("join of {file} and {file2}"), &[], &a.join(&b)))
        }
        TransformCmd::Suspend { file } => {
            let cx = read_complex(&file)?;
            Ok(facet_doc(format!("suspension of {file}"), &[], &cx.suspension()))
        }
        TransformCmd::Subdivide { edge, file } => {
            let cx = read_complex(&file)?;
            let e = if edge.0 < edge.1 { [edge.0, edge.1] } else { [edge.1, edge.0] };
            let out = cx.subdivide_edge(&e)?;
            Ok(facet_doc(format!("{file} with edge {},{} subdivided", edge.0, edge.1), &[], &out))
        }
        TransformCmd::Contract { edge, file } => {
            let cx = read_complex(&file)?;
            let out = cx.contract_edge(edge.0, edge.1)?;
            Ok(facet_doc(format!("{file} with edge {},{} contracted", edge.0, edge.1), &[], &out))
        }
    }
}

fn run_verify(cmd: VerifyCmd) -> Result<ReportDocument, Error> {
    match cmd {
        VerifyCmd::Bounds { i, file } => {
            let cx = read_complex(&file)?;
            let report = check_lower_bounds(&cx, i)?;
            let mut doc = ReportDocument::new("").with_report(report);
            doc.i = Some(i);
            doc.f_vector = Some(cx.f_vector().entries().to_vec());
            Ok(doc)
        }
        VerifyCmd::Conj13 { i, file } => {
            let cx = read_complex(&file)?;
            let report = check_conjecture_1_3(&cx, i)?;
            let mut doc = ReportDocument::new("").with_report(report);
            doc.i = Some(i);
            Ok(doc)
        }
        VerifyCmd::Conj14 { i, file } => {
            let cx = read_complex(&file)?;
            let report = check_conjecture_1_4(&cx, i)?;
            let mut doc = ReportDocument::new("").with_report(report);
            doc.i = Some(i);
            Ok(doc)
        }
        VerifyCmd::Recurrence { imax, dmax } => {
            let report = verify_recurrence(imax, dmax)?;
            let mut doc = ReportDocument::new("").with_report(report);
            doc.parameters.insert("imax", imax);
            doc.parameters.insert("dmax", dmax);
            Ok(doc)
        }
        VerifyCmd::Mpw { kmax, dmax } => {
            // cross-check against constructed complexes where that stays cheap
            let construct_d_max = (dmax as i64).min(5);
            let report = verify_mpw(kmax, dmax, construct_d_max, 12)?;
            let mut doc = ReportDocument::new("").with_report(report);
            doc.parameters.insert("kmax", kmax as i64);
            doc.parameters.insert("dmax", dmax as i64);
            Ok(doc)
        }
        VerifyCmd::Enumerate { d, nmax, i, override_guard } => {
            let (report, outcome) = enumerate_and_verify(d, nmax, i, override_guard)?;
            let mut doc = ReportDocument::new("").with_report(report);
            doc.parameters.insert("d", d);
            doc.parameters.insert("nmax", nmax);
            doc.parameters.insert("i", i);
            doc.enumeration = Some(outcome);
            Ok(doc)
        }
        VerifyCmd::Duality { file } => {
            let cx = read_complex(&file)?;
            let ok = alexander_duality_check(&cx)?;
            let mut doc = ReportDocument::new(format!("Alexander duality for {file}"));
            doc.checks.push(Check {
                name: "alexander-duality".into(),
                status: if ok { CheckStatus::Holds } else { CheckStatus::Fails },
                witness: format!("n = {}", cx.n_vertices()),
                proven: true,
            });
            Ok(doc)
        }
    }
}

fn run_expand(cmd: ExpandCmd) -> Result<ReportDocument, Error> {
    match cmd {
        ExpandCmd::Hierarchy { d, i } => {
            let coeffs = hierarchy_expand(d, i)?;
            let mut doc = ReportDocument::new(format!("P_{{{d},{i}}} in B_{{{d},{}}}", i + 1));
            doc.parameters.insert("d", d);
            doc.parameters.insert("i", i);
            doc.coefficients = Some(coeffs);
            Ok(doc)
        }
        ExpandCmd::Joinpoly { d, d2, i } => {
            let coeffs = join_expand(d, d2, i)?;
            let mut doc = ReportDocument::new(format!(
                "P_{{{d},{i}}}·P_{{{d2},{i}}} in B_{{{},{i}}}", d + d2 + 1
            ));
            doc.parameters.insert("d", d);
            doc.parameters.insert("d2", d2);
            doc.parameters.insert("i", i);
            doc.coefficients = Some(coeffs);
            Ok(doc)
        }
    }
}

fn emit(doc: &ReportDocument, format: Format) {
    match format {
        Format::Machine => {
            println!("{}", serde_json::to_string_pretty(doc).expect("report serialization"));
        }
        Format::Text => emit_text(doc),
    }
}

fn emit_text(doc: &ReportDocument) {
    // facet output doubles as the input file format, so keep it bare
    if let Some(facets) = &doc.facets {
        for f in facets {
            let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            println!("{}", line.join(" "));
        }
        return;
    }
    if !doc.subject.is_empty() {
        println!("{}", doc.subject);
    }
    fn vec_line(label: &str, v: &[i64]) {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("{label}: ({})", parts.join(", "));
    }
    if let Some(v) = &doc.f_vector {
        vec_line("f_vector", v);
    }
    if let Some(v) = &doc.h_vector {
        vec_line("h_vector", v);
    }
    if let Some(v) = &doc.g_vector {
        vec_line(&format!("g_vector[i={}]", doc.i.unwrap_or(0)), v);
    }
    if let Some(v) = &doc.betti {
        vec_line("betti", v);
    }
    if let Some(t) = &doc.torsion {
        if t.is_empty() {
            println!("torsion: none");
        } else {
            for (j, factors) in t {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                println!("torsion[{j}]: [{}]", parts.join(", "));
            }
        }
    }
    if let Some(m) = &doc.missing_faces {
        println!("missing faces: {}", m.len());
        for f in m {
            let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            println!("  {{{}}}", line.join(", "));
        }
    }
    if let Some(v) = &doc.coefficients {
        vec_line("coefficients", v);
    }
    if let Some(c) = &doc.classification {
        println!("dim: {}", c.dim);
        println!("n: {}", c.n);
        println!("max_missing_dim: {}", c.max_missing_dim);
        println!("flag: {}", c.is_flag);
        println!("homology sphere: {}", c.is_homology_sphere);
        println!("in C({},{}): {}", c.i, c.dim, c.in_c_id);
        println!("in HS({},{},{}): {}", c.i, c.dim, c.n, c.in_hs_idn);
    }
    if let Some(e) = &doc.enumeration {
        println!("members: {}", e.members);
        vec_line("min f_vector", &e.min_f);
        println!("minimizers: {} ({} up to isomorphism)", e.minimizers, e.minimizer_classes);
        println!("unique minimizer is S(i,d): {}", e.unique_minimizer_is_s_id);
    }
    if !doc.checks.is_empty() {
        let mut holds = 0usize;
        let mut fails = 0usize;
        for c in &doc.checks {
            let tag = match c.status {
                CheckStatus::Holds => {
                    holds += 1;
                    "holds"
                }
                CheckStatus::Fails => {
                    fails += 1;
                    "FAILS"
                }
                CheckStatus::NotApplicable => "n/a  ",
            };
            println!("{tag}  {}  [{}]", c.name, c.witness);
        }
        println!("checks: {holds} hold, {fails} fail, {} total", doc.checks.len());
    }
}
