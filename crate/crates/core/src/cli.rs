//! Command-line front end.
//!
//! Exit codes: 0 on success (audit discrepancies included), 2 on any parse
//! or domain error.

use std::ffi::OsString;
use std::fmt::{self, Write as _};
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::p1::{bracket_is_twice, tensor_reps, BStringRep};
use crate::parabolic::{NamedModel, Parabolic};
use crate::root_system::{LieType, Root, RootSystem};
use crate::splitting::{
    audit_model, curvature_report, flatness_report, AuditModel, AuditReport, CurvatureReport,
};
use crate::strings::{AlphaString, Tag};

/// A model given either by name (`projective:3`) or by type and crossed
/// nodes (`D4/4`, `A2/1,2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSpec {
    Named(NamedModel),
    Crossed { lie_type: LieType, crossed: Vec<usize> },
}

impl ModelSpec {
    pub fn parabolic(&self) -> Result<Parabolic> {
        match self {
            ModelSpec::Named(m) => m.to_parabolic(),
            ModelSpec::Crossed { lie_type, crossed } => {
                Parabolic::from_type(*lie_type, crossed.iter().copied())
            }
        }
    }
}

fn parse_list(token: &str) -> Result<Vec<usize>> {
    if token.trim().is_empty() {
        return Ok(Vec::new());
    }
    token
        .split(',')
        .map(|p| {
            p.trim().parse::<usize>().map_err(|_| Error::MalformedModel {
                token: token.to_string(),
                reason: format!("`{p}` is not a node index"),
            })
        })
        .collect()
}

impl FromStr for ModelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some((t, crossed)) = s.split_once('/') {
            let lie_type: LieType = t.parse()?;
            let mut crossed = parse_list(crossed)?;
            crossed.sort_unstable();
            crossed.dedup();
            if let Some(&index) = crossed.iter().find(|&&i| i == 0 || i > lie_type.rank()) {
                return Err(Error::CrossedOutOfRange {
                    index,
                    rank: lie_type.rank(),
                });
            }
            Ok(ModelSpec::Crossed { lie_type, crossed })
        } else {
            Ok(ModelSpec::Named(s.parse()?))
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Named(m) => write!(f, "{m}"),
            ModelSpec::Crossed { lie_type, crossed } => {
                let c: Vec<String> = crossed.iter().map(usize::to_string).collect();
                write!(f, "{lie_type}/{}", c.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "rootcircle", version, about = "Splitting types of homogeneous bundles on root circles of G/P")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tangent and curvature splittings along one circle or all of them.
    Report(ReportArgs),
    /// Whole-parabolic flatness certificate.
    Flatness(TargetArgs),
    /// Compare closed-form multiplicities with the string computation.
    Audit(AuditArgs),
    /// String representations of the Borel of SL(2) and their bundles on P¹.
    P1(P1Args),
    /// Dump a root system.
    Roots(RootsArgs),
}

#[derive(Args, Debug)]
struct TargetArgs {
    /// Cartan type, e.g. A3, D4, E8.
    #[arg(long = "type", value_name = "TYPE", conflicts_with = "model", required_unless_present = "model")]
    lie_type: Option<String>,
    /// Crossed nodes, 1-based Bourbaki numbering, comma-separated.
    #[arg(long, value_name = "I[,J...]", requires = "lie_type", default_value = "")]
    cross: String,
    /// Named model such as projective:3 or grassmannian:2,4, or TYPE/CROSS.
    #[arg(long, value_name = "NAME:PARAMS")]
    model: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[command(flatten)]
    target: TargetArgs,
    /// Omitted root as simple-root coefficients, e.g. -1,0,0.
    #[arg(long, allow_hyphen_values = true, value_name = "C1,...,CR", conflicts_with = "all_alphas", required_unless_present = "all_alphas")]
    alpha: Option<String>,
    /// Report every omitted root.
    #[arg(long)]
    all_alphas: bool,
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long, value_name = "NAME:PARAMS")]
    model: String,
    /// Matrix entry (i,j) selecting the circle.
    #[arg(long, value_name = "I,J")]
    ij: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct P1Args {
    /// Top weight k.
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    /// Node count m (k, k-2, ..., k-2(m-1)).
    #[arg(long)]
    m: usize,
    /// Keep the top KEEP nodes as a B-invariant subspace.
    #[arg(long, value_name = "KEEP")]
    sub: Option<usize>,
    /// Quotient by the top REMOVE nodes.
    #[arg(long, value_name = "REMOVE")]
    quot: Option<usize>,
    /// Tensor with the string of top weight K and M nodes.
    #[arg(long, allow_hyphen_values = true, value_name = "K,M")]
    tensor: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct RootsArgs {
    #[arg(long = "type", value_name = "TYPE")]
    lie_type: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(cli.command) {
        Ok(output) => {
            for w in &output.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = out.write_all(output.stdout.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Output {
    stdout: String,
    warnings: Vec<String>,
}

fn execute(command: Command) -> Result<Output> {
    match command {
        Command::Report(args) => {
            let (spec, parabolic) = target(&args.target)?;
            let alphas = match &args.alpha {
                Some(a) => vec![parse_alpha(&parabolic, a)?],
                None => parabolic.omitted_roots().to_vec(),
            };
            parabolic_output(&spec, &parabolic, &alphas, args.target.format)
        }
        Command::Flatness(args) => {
            let (spec, parabolic) = target(&args)?;
            let alphas = parabolic.omitted_roots().to_vec();
            parabolic_output(&spec, &parabolic, &alphas, args.format)
        }
        Command::Audit(args) => {
            let named: NamedModel = args.model.parse()?;
            let ij = match &args.ij {
                Some(s) => match parse_list(s)?.as_slice() {
                    [i, j] => Some((*i, *j)),
                    _ => {
                        return Err(Error::IndexOutOfRange(format!(
                            "--ij expects two indices, got `{s}`"
                        )))
                    }
                },
                None => None,
            };
            let report = audit_model(&AuditModel::from_named(&named, ij)?)?;
            let stdout = match args.format {
                Format::Json => to_json(&report),
                Format::Text => audit_text(&report),
            };
            Ok(Output {
                stdout,
                warnings: named.lie_type()?.warnings(),
            })
        }
        Command::P1(args) => p1_output(&args),
        Command::Roots(args) => {
            let lie_type: LieType = args.lie_type.parse()?;
            let rs = RootSystem::build(lie_type);
            let stdout = match args.format {
                Format::Json => to_json(&json!({
                    "type": lie_type.to_string(),
                    "rank": rs.rank(),
                    "dimension": rs.dimension(),
                    "root_count": rs.root_count(),
                    "cartan_matrix": rs.cartan_matrix(),
                    "symmetrizer": rs.symmetrizer(),
                    "positive_roots": rs.positive_roots(),
                })),
                Format::Text => roots_text(&rs),
            };
            Ok(Output {
                stdout,
                warnings: lie_type.warnings(),
            })
        }
    }
}

fn target(args: &TargetArgs) -> Result<(ModelSpec, Parabolic)> {
    let spec: ModelSpec = match (&args.model, &args.lie_type) {
        (Some(m), _) => m.parse()?,
        (None, Some(t)) => format!("{t}/{}", args.cross).parse()?,
        (None, None) => unreachable!("clap requires --type or --model"),
    };
    let parabolic = spec.parabolic()?;
    Ok((spec, parabolic))
}

fn parse_alpha(parabolic: &Parabolic, token: &str) -> Result<Root> {
    let coefficients = token
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::MalformedModel {
            token: token.to_string(),
            reason: "alpha must be comma-separated integers".into(),
        })?;
    let root = Root::from_coefficients(coefficients);
    parabolic.require_omitted(&root)?;
    Ok(root)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ParabolicJson<'a> {
    model: String,
    dim_g: usize,
    dim_gp: usize,
    alphas: &'a [CurvatureReport],
    verdict: bool,
    conclusion: String,
}

fn parabolic_output(spec: &ModelSpec, parabolic: &Parabolic, alphas: &[Root], format: Format) -> Result<Output> {
    let flatness = flatness_report(parabolic)?;
    let selected: Vec<CurvatureReport> = alphas
        .iter()
        .map(|a| curvature_report(parabolic, a))
        .collect::<Result<_>>()?;
    let model = spec.to_string();
    let conclusion = flatness.conclusion(&model);
    let stdout = match format {
        Format::Json => to_json(&ParabolicJson {
            model,
            dim_g: flatness.dim_g,
            dim_gp: flatness.dim_gp,
            alphas: &selected,
            verdict: flatness.verdict,
            conclusion,
        }),
        Format::Text => {
            let mut s = String::new();
            if model == parabolic.label() {
                let _ = writeln!(s, "model: {model}");
            } else {
                let _ = writeln!(s, "model: {model} ({})", parabolic.label());
            }
            let _ = writeln!(s, "dim g = {}, dim G/P = {}", flatness.dim_g, flatness.dim_gp);
            for r in &selected {
                s.push('\n');
                curvature_text(&mut s, r);
            }
            let _ = writeln!(s);
            let _ = writeln!(s, "verdict: {}", if flatness.verdict { "flat" } else { "not certified" });
            let _ = writeln!(s, "{conclusion}");
            s
        }
    };
    Ok(Output {
        stdout,
        warnings: parabolic.root_system().lie_type().warnings(),
    })
}

fn string_text(s: &AlphaString) -> String {
    let render = |tags: &[Tag]| {
        s.nodes()
            .iter()
            .filter(|n| tags.contains(&n.tag))
            .map(|n| {
                if n.tag == Tag::Zero {
                    format!("0@{}", n.weight)
                } else {
                    format!("{}@{}", n.root, n.weight)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let gp = render(&[Tag::Omitted]);
    let p = match render(&[Tag::Parabolic, Tag::Zero]) {
        p if p.is_empty() => "-".to_string(),
        p => p,
    };
    format!("g/p: {gp} | p: {p}  (n_s={}, d_s={})", s.n_s(), s.d_s())
}

fn curvature_text(s: &mut String, r: &CurvatureReport) {
    let _ = writeln!(s, "alpha {}", r.alpha);
    for st in &r.strings {
        let _ = writeln!(s, "  string  {}", string_text(st));
    }
    let _ = writeln!(s, "  tangent             {}", r.tangent);
    let _ = writeln!(s, "  curvature           {}", r.curvature);
    let _ = writeln!(s, "  h0                  {}", r.h0);
    let _ = writeln!(s, "  section subbundle   {}", r.section_subbundle);
    match r.alpha_slot_max_degree {
        Some(d) => {
            let _ = writeln!(s, "  alpha-slot max deg  {d}");
        }
        None => {
            let _ = writeln!(s, "  alpha-slot max deg  none");
        }
    }
    let _ = writeln!(s, "  contraction         {}", if r.contraction_vanishes { "vanishes" } else { "nonzero" });
}

fn audit_text(r: &AuditReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "audit {}  {}", r.model, r.parameters);
    let _ = writeln!(s, "alpha    {}", r.alpha);
    let _ = writeln!(s, "tangent  {}", r.tangent);
    let _ = writeln!(s, "dim G/P  {}", r.dim_gp);
    let _ = writeln!(s);
    let _ = writeln!(s, "{:<48} {:>11} {:>9}  status", "formula", "closed-form", "computed");
    for row in &r.rows {
        let _ = writeln!(
            s,
            "{:<48} {:>11} {:>9}  {}",
            row.formula,
            row.closed_form,
            row.computed,
            row.status.as_str()
        );
    }
    s
}

fn roots_text(rs: &RootSystem) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "type {}  rank {}  dim {}  roots {}", rs.lie_type(), rs.rank(), rs.dimension(), rs.root_count());
    let _ = writeln!(s, "cartan matrix C[i][j] = <a_j, a_i^v>:");
    for row in rs.cartan_matrix() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        let _ = writeln!(s, "  {}", cells.join(""));
    }
    let d: Vec<String> = rs.symmetrizer().iter().map(i64::to_string).collect();
    let _ = writeln!(s, "symmetrizer {}", d.join(" "));
    let _ = writeln!(s, "positive roots:");
    for r in rs.positive_roots() {
        let _ = writeln!(s, "  {:>3}  {}", r.height(), r);
    }
    s
}

fn parse_rep(token: &str) -> Result<BStringRep> {
    let bad = || Error::InvalidRep(format!("expected K,M, got `{token}`"));
    let (k, m) = token.split_once(',').ok_or_else(bad)?;
    BStringRep::new(k.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?)
}

fn p1_output(args: &P1Args) -> Result<Output> {
    let rep = BStringRep::new(args.k, args.m)?;
    let (h, x) = rep.canonical_matrices();
    let bracket = bracket_is_twice(&h, &x);
    let splitting = rep.to_splitting();
    let sub = args.sub.map(|keep| rep.invariant_subspace(keep)).transpose()?;
    let quot = args.quot.map(|remove| rep.quotient(remove)).transpose()?;
    let tensor = args.tensor.as_deref().map(parse_rep).transpose()?;
    let describe = |r: &BStringRep| {
        json!({"k": r.top_weight(), "m": r.node_count(), "splitting": r.to_splitting()})
    };

    let stdout = match args.format {
        Format::Json => {
            let mut v = json!({
                "k": rep.top_weight(),
                "m": rep.node_count(),
                "weights": rep.weights(),
                "h": h,
                "x": x,
                "bracket_holds": bracket,
                "equivariantly_trivial": rep.is_equivariantly_trivial(),
                "splitting": splitting,
                "h0": splitting.h0(),
            });
            if let Some(r) = &sub {
                v["subspace"] = describe(r);
            }
            if let Some(r) = &quot {
                v["quotient"] = describe(r);
            }
            if let Some(r) = &tensor {
                v["tensor"] = json!({"with": describe(r), "splitting": tensor_reps(&rep, r)});
            }
            to_json(&v)
        }
        Format::Text => {
            let mut s = String::new();
            let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
            let sup: Vec<i64> = (0..rep.node_count().saturating_sub(1)).map(|r| x[r][r + 1]).collect();
            let line = |r: &BStringRep| format!("k={} m={} -> {}", r.top_weight(), r.node_count(), r.to_splitting());
            let _ = writeln!(s, "string k={} m={}", rep.top_weight(), rep.node_count());
            let _ = writeln!(s, "weights        {}", join(&rep.weights()));
            let _ = writeln!(s, "rho(H) diag    {}", join(&rep.weights()));
            let _ = writeln!(s, "rho(X) super   {}", if sup.is_empty() { "-".to_string() } else { join(&sup) });
            let _ = writeln!(s, "[H,X] = 2X     {bracket}");
            let _ = writeln!(s, "trivial        {}", rep.is_equivariantly_trivial());
            let _ = writeln!(s, "bundle         {splitting}");
            let _ = writeln!(s, "h0             {}", splitting.h0());
            if let Some(r) = &sub {
                let _ = writeln!(s, "subspace       {}", line(r));
            }
            if let Some(r) = &quot {
                let _ = writeln!(s, "quotient       {}", line(r));
            }
            if let Some(r) = &tensor {
                let _ = writeln!(s, "tensor         {} -> {}", line(r), tensor_reps(&rep, r));
            }
            s
        }
    };
    Ok(Output {
        stdout,
        warnings: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("rootcircle").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn model_spec_round_trip() {
        for s in ["projective:3", "D4/4", "A2/1,2", "flag:1,2,1", "E6/"] {
            let spec: ModelSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<ModelSpec>().unwrap(), spec);
        }
        assert_eq!("A3/3,1,1".parse::<ModelSpec>().unwrap().to_string(), "A3/1,3");
        assert_eq!("grassmannian:1,3".parse::<ModelSpec>().unwrap().to_string(), "projective:2");
    }

    #[test]
    fn unknown_type_exits_2() {
        let (code, _, err) = run_str(&["flatness", "--type", "Q4", "--cross", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("Q4"), "{err}");
        let (code, _, err) = run_str(&["flatness", "--type", "A3", "--cross", "7"]);
        assert_eq!(code, 2);
        assert!(err.contains('7'));
    }

    #[test]
    fn bad_alpha_lists_omitted() {
        let (code, _, err) = run_str(&["report", "--model", "projective:2", "--alpha=0,-1"]);
        assert_eq!(code, 2);
        assert!(err.contains("[-1,0] [-1,-1]"), "{err}");
    }

    #[test]
    fn missing_alpha_choice_is_parse_error() {
        let (code, _, _) = run_str(&["report", "--model", "projective:2"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn p1_text() {
        let (code, out, _) = run_str(&["p1", "--k", "2", "--m", "3", "--quot", "2", "--tensor", "1,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("trivial        true"));
        assert!(out.contains("quotient       k=-2 m=1 -> O(2)"));
        assert!(out.contains("-> O(-1)^3"));
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("audit"));
    }
}
