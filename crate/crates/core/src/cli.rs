//! Command-line front end. The `kwsgp` binary only forwards to [`main_with`].

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kw2d::{enumerate_kw, render_path, KwCorners, KwMember, KwParams, LatticePath};
use crate::kw3d::{
    build_kw3, gap_cloud, gap_rep, strict_members, strict_points, type3_theorem,
    verify_apery_characterization, GapPoint3, Kw3Params, Kw3Semigroup, TableScan,
};
use crate::presentation::{appendix_generators, betti_elements, check_kw_presentation};
use crate::principal::{check_theorem31, closed_form, principal_matrix_bruteforce};
use crate::semigroup::NumericalSemigroup;

pub const SCHEMA: &str = "kwsgp/1";
pub const DEFAULT_CAP: usize = 100_000;

#[derive(Debug, Parser)]
#[command(name = "kwsgp", version, about = "Kunz-Waldi numerical semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, principal matrix and presentation data of one semigroup.
    Analyze(AnalyzeArgs),
    /// Exhaustive theorem checks over a whole family.
    Verify(VerifyArgs),
    /// Single- and two-gap extension tables of R(5,7,2,1,3).
    Table(TableArgs),
    /// Lattice path SVG or three-dimensional point data.
    Render(RenderArgs),
    /// List the members of a family.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct SpecArgs {
    /// Generators, e.g. 5,7,11,13.
    #[arg(long, allow_hyphen_values = true)]
    pub gens: Option<String>,
    /// KW parameters p,q.
    #[arg(long, allow_hyphen_values = true)]
    pub kw: Option<String>,
    /// Corners x:y,... for --kw.
    #[arg(long, allow_hyphen_values = true)]
    pub corners: Option<String>,
    /// Three-dimensional parameters p,q,r1,r2,s.
    #[arg(long, allow_hyphen_values = true)]
    pub kw3: Option<String>,
    /// Lattice points x:y:z,... for --kw3.
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OutputArgs {
    /// Emit JSON.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long)]
    pub csv: bool,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CapArgs {
    /// Largest family size processed.
    #[arg(long, env = "KWSGP_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Include Apéry sets with respect to every generator.
    #[arg(long)]
    pub apery: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// principal, presentation, type3, apery or all.
    #[arg(long, default_value = "all")]
    pub theorem: String,
    #[command(flatten)]
    pub cap: CapArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// type-5-7, mu-5-7 or mu2-5-7.
    pub id: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub cap: CapArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Exit code and rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub body: String,
}

impl Command {
    fn output(&self) -> &OutputArgs {
        match self {
            Command::Analyze(a) => &a.output,
            Command::Verify(a) => &a.output,
            Command::Table(a) => &a.output,
            Command::Render(a) => &a.output,
            Command::Enumerate(a) => &a.output,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Analyze(_) => "analyze",
            Command::Verify(_) => "verify",
            Command::Table(_) => "table",
            Command::Render(_) => "render",
            Command::Enumerate(_) => "enumerate",
        }
    }
}

/// Parses arguments, runs the command and writes its output. Returns the
/// process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            print!("{}", error_body("usage", "Usage", &e.kind().to_string()));
            return 2;
        }
    };
    let outcome = run(&cli);
    if outcome.code == 2 {
        print!("{}", outcome.body);
        return 2;
    }
    match &cli.command.output().out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.body) {
                print!("{}", error_body(cli.command.name(), "Io", &e.to_string()));
                return 2;
            }
        }
        None => print!("{}", outcome.body),
    }
    outcome.code
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
        Command::Render(a) => render(a),
        Command::Enumerate(a) => enumerate(a),
    };
    result.unwrap_or_else(|e| Outcome {
        code: 2,
        body: error_body(cli.command.name(), e.kind(), &e.to_string()),
    })
}

fn error_body(command: &str, kind: &str, message: &str) -> String {
    to_json(&json!({
        "schema": SCHEMA,
        "command": command,
        "status": "error",
        "error": {"kind": kind, "message": message},
    }))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn report(command: &str, inputs: Value, status: &str, result: Value) -> String {
    to_json(&json!({
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "status": status,
        "result": result,
    }))
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidSpec(format!("{what}: cannot parse {t:?}")))
        })
        .collect()
}

fn parse_tuples(s: &str, arity: usize, what: &str) -> Result<Vec<Vec<i64>>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let parts: Vec<&str> = t.split(':').collect();
            if parts.len() != arity {
                return Err(Error::InvalidSpec(format!(
                    "{what}: expected {arity} values separated by ':' in {t:?}"
                )));
            }
            parts
                .iter()
                .map(|v| {
                    v.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidSpec(format!("{what}: cannot parse {v:?}")))
                })
                .collect()
        })
        .collect()
}

enum Spec {
    Gens(Vec<i64>),
    Kw(KwParams, Option<Vec<(i64, i64)>>),
    Kw3(Kw3Params, Option<Vec<GapPoint3>>),
}

impl Spec {
    fn parse(a: &SpecArgs) -> Result<Spec> {
        let given = [a.gens.is_some(), a.kw.is_some(), a.kw3.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(Error::InvalidSpec(
                "give exactly one of --gens, --kw, --kw3".into(),
            ));
        }
        if a.corners.is_some() && a.kw.is_none() {
            return Err(Error::InvalidSpec("--corners requires --kw".into()));
        }
        if a.points.is_some() && a.kw3.is_none() {
            return Err(Error::InvalidSpec("--points requires --kw3".into()));
        }
        if let Some(g) = &a.gens {
            return Ok(Spec::Gens(parse_ints(g, "--gens")?));
        }
        if let Some(k) = &a.kw {
            let v = parse_ints(k, "--kw")?;
            let [p, q] = v[..] else {
                return Err(Error::InvalidSpec("--kw expects p,q".into()));
            };
            let corners = a
                .corners
                .as_deref()
                .map(|c| parse_tuples(c, 2, "--corners"))
                .transpose()?
                .map(|cs| cs.into_iter().map(|c| (c[0], c[1])).collect());
            return Ok(Spec::Kw(KwParams::new(p, q)?, corners));
        }
        let v = parse_ints(a.kw3.as_deref().expect("checked above"), "--kw3")?;
        let [p, q, r1, r2, s] = v[..] else {
            return Err(Error::InvalidSpec("--kw3 expects p,q,r1,r2,s".into()));
        };
        let points = a
            .points
            .as_deref()
            .map(|c| parse_tuples(c, 3, "--points"))
            .transpose()?
            .map(|ps| {
                ps.into_iter()
                    .map(|c| GapPoint3::new(c[0], c[1], c[2]))
                    .collect()
            });
        Ok(Spec::Kw3(Kw3Params::new(p, q, r1, r2, s)?, points))
    }

    fn inputs(&self) -> Value {
        match self {
            Spec::Gens(g) => json!({ "gens": g }),
            Spec::Kw(params, corners) => json!({
                "kw": [params.p(), params.q()],
                "corners": corners,
            }),
            Spec::Kw3(params, points) => json!({
                "kw3": [params.p(), params.q(), params.r1(), params.r2(), params.s()],
                "points": points,
            }),
        }
    }
}

fn kw_corners(params: KwParams, corners: &Option<Vec<(i64, i64)>>) -> Result<KwCorners> {
    KwCorners::new(params, corners.clone().unwrap_or_default())
}

fn invariants(h: &NumericalSemigroup, with_apery: bool) -> Result<Value> {
    let betti = betti_elements(h);
    let pm = principal_matrix_bruteforce(h)?;
    let pf = h.pseudo_frobenius();
    let mut v = json!({
        "generators": h.generators(),
        "frobenius": h.frobenius(),
        "genus": h.genus(),
        "multiplicity": h.multiplicity(),
        "embedding_dimension": h.embedding_dimension(),
        "pseudo_frobenius": pf.elements,
        "type": pf.semigroup_type(),
        "symmetric": h.is_symmetric(),
        "mu": betti.mu,
        "betti_elements": betti.elements,
        "principal_matrix": pm,
    });
    if with_apery {
        let mut ap = serde_json::Map::new();
        for &g in h.generators() {
            ap.insert(g.to_string(), json!(h.apery(g)?.elements));
        }
        v["apery"] = Value::Object(ap);
    }
    Ok(v)
}

fn analyze(a: &AnalyzeArgs) -> Result<Outcome> {
    let spec = Spec::parse(&a.spec)?;
    let mut result = match &spec {
        Spec::Gens(g) => invariants(&NumericalSemigroup::generated_by(g)?, a.apery)?,
        Spec::Kw(params, corners) => {
            let c = kw_corners(*params, corners)?;
            let h = crate::kw2d::build_kw(&c)?;
            let mut v = invariants(&h, a.apery)?;
            let mut kw = json!({
                "params": params,
                "corners": c.corners(),
                "generator_order": c.generators(),
                "principal": check_theorem31(&c)?,
            });
            if c.n() >= 3 {
                let (case, _) = closed_form(&c)?;
                kw["case"] = json!(case);
                kw["appendix"] = json!(appendix_generators(&c)?
                    .iter()
                    .map(|l| json!({"label": l.label, "binomial": l.binomial.to_string(), "degree": l.binomial.degree}))
                    .collect::<Vec<_>>());
            }
            kw["presentation"] = json!(check_kw_presentation(&c)?);
            v["kw"] = kw;
            v
        }
        Spec::Kw3(params, points) => {
            let k = build_kw3(*params, points.as_deref().unwrap_or(&[]))?;
            let mut v = invariants(&k.semigroup, a.apery)?;
            let mut kw3 = json!({
                "params": params,
                "points": k.points,
                "adjoined": k.adjoined,
                "strict_class": k.strict_class,
                "apery_characterization": verify_apery_characterization(&k),
            });
            if let [pt] = k.points[..] {
                kw3["type3"] = json!(type3_theorem(*params, pt)?);
            }
            v["kw3"] = kw3;
            v
        }
    };
    if !result.is_object() {
        result = json!({});
    }
    let body = if a.output.json {
        report("analyze", spec.inputs(), "pass", result)
    } else {
        analyze_text(&result)
    };
    Ok(Outcome { code: 0, body })
}

fn analyze_text(v: &Value) -> String {
    let mut s = String::new();
    for key in [
        "generators",
        "frobenius",
        "genus",
        "multiplicity",
        "embedding_dimension",
        "pseudo_frobenius",
        "type",
        "symmetric",
        "mu",
    ] {
        let _ = writeln!(s, "{key}: {}", v[key]);
    }
    s.push_str("principal_matrix:\n");
    if let Some(rows) = v["principal_matrix"]["entries"].as_array() {
        for r in rows {
            let _ = writeln!(s, "  {r}");
        }
    }
    if let Some(case) = v.get("kw").and_then(|k| k.get("case")) {
        let _ = writeln!(s, "case: {}", case.as_str().unwrap_or_default());
    }
    s
}

#[derive(Debug, Clone, Serialize)]
struct MemberOutcome {
    key: String,
    status: &'static str,
    #[serde(skip)]
    detail: Value,
}

fn status_of(ok: Option<bool>) -> &'static str {
    match ok {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "not_applicable",
    }
}

fn family_size(params: KwParams) -> usize {
    // C(p' + q', p')
    let (a, b) = (params.half_p() as u128, params.half_q() as u128);
    let mut c: u128 = 1;
    for i in 0..a {
        c = c * (a + b - i) / (i + 1);
    }
    usize::try_from(c).unwrap_or(usize::MAX)
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(())
}

fn member_key(m: &KwMember) -> String {
    match m.corners() {
        Some(c) => {
            let cs: Vec<String> = c
                .corners()
                .iter()
                .map(|(x, y)| format!("{x}:{y}"))
                .collect();
            format!("[{}]", cs.join(","))
        }
        None => format!("<{}>", join(&m.generators())),
    }
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn check_kw_member(m: &KwMember, theorem: &str) -> Result<MemberOutcome> {
    let key = member_key(m);
    let (ok, detail) = match (m, theorem) {
        (KwMember::Corners(c), "principal") => {
            let r = check_theorem31(c)?;
            (r.agrees, json!(r))
        }
        (KwMember::Corners(c), "presentation") => {
            let r = check_kw_presentation(c)?;
            (r.passes, json!(r))
        }
        (half, "principal") => {
            let gens = half.generators();
            let pm = crate::principal::principal_matrix_for(&gens)?;
            let ok = pm.diagonal() == vec![-gens[1], -gens[0]] && pm.is_principal();
            (ok, json!(pm))
        }
        (half, _) => {
            let h = half.semigroup()?;
            let mu = betti_elements(&h).mu;
            let t = h.semigroup_type();
            (
                mu == 1 && t == 1,
                json!({"generators": h.generators(), "mu": mu, "type": t}),
            )
        }
    };
    Ok(MemberOutcome {
        key,
        status: status_of(Some(ok)),
        detail,
    })
}

fn summarize(command_theorem: &str, mut members: Vec<MemberOutcome>) -> Value {
    members.sort_by(|a, b| a.key.cmp(&b.key));
    let count = |s: &str| members.iter().filter(|m| m.status == s).count();
    let first = members.iter().find(|m| m.status == "fail");
    json!({
        "theorem": command_theorem,
        "total": members.len(),
        "passed": count("pass"),
        "failed": count("fail"),
        "not_applicable": count("not_applicable"),
        "members": members,
        "first_counterexample": first.map(|m| json!({"key": m.key, "report": m.detail})),
    })
}

fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let spec = Spec::parse(&a.spec)?;
    let mut sections = Vec::new();
    match &spec {
        Spec::Kw(params, _) => {
            let theorems: Vec<&str> = match a.theorem.as_str() {
                "all" => vec!["principal", "presentation"],
                t @ ("principal" | "presentation") => vec![t],
                other => {
                    return Err(Error::InvalidSpec(format!(
                        "unknown theorem {other:?} for --kw"
                    )))
                }
            };
            check_cap(family_size(*params), a.cap.cap)?;
            let members = enumerate_kw(*params);
            for t in theorems {
                let outcomes = members
                    .par_iter()
                    .map(|m| check_kw_member(m, t))
                    .collect::<Result<Vec<_>>>()?;
                sections.push(summarize(t, outcomes));
            }
        }
        Spec::Kw3(params, _) => {
            let theorems: Vec<&str> = match a.theorem.as_str() {
                "all" => vec!["type3", "apery"],
                t @ ("type3" | "apery") => vec![t],
                other => {
                    return Err(Error::InvalidSpec(format!(
                        "unknown theorem {other:?} for --kw3"
                    )))
                }
            };
            for t in theorems {
                let outcomes = if t == "type3" {
                    let pts = strict_points(*params);
                    check_cap(pts.len(), a.cap.cap)?;
                    pts.par_iter()
                        .filter_map(|&pt| type3_theorem(*params, pt).ok())
                        .map(|r| MemberOutcome {
                            key: format!("({},{},{})", r.point.x, r.point.y, r.point.z),
                            status: status_of(r.agrees),
                            detail: json!(r),
                        })
                        .collect()
                } else {
                    let members = strict_members(*params);
                    check_cap(members.len(), a.cap.cap)?;
                    members
                        .par_iter()
                        .map(|k| {
                            let r = verify_apery_characterization(k);
                            MemberOutcome {
                                key: points_key(k),
                                status: status_of(Some(r.agrees)),
                                detail: json!(r),
                            }
                        })
                        .collect()
                };
                sections.push(summarize(t, outcomes));
            }
        }
        Spec::Gens(_) => {
            return Err(Error::InvalidSpec("verify needs --kw or --kw3".into()));
        }
    }
    let failed: usize = sections
        .iter()
        .map(|s| s["failed"].as_u64().unwrap_or(0) as usize)
        .sum();
    let status = if failed == 0 { "pass" } else { "fail" };
    let body = if a.output.json {
        report(
            "verify",
            spec.inputs(),
            status,
            json!({ "checks": sections }),
        )
    } else {
        let mut s = String::new();
        for sec in &sections {
            let _ = writeln!(
                s,
                "{}: {} members, {} pass, {} fail, {} not applicable",
                sec["theorem"].as_str().unwrap_or_default(),
                sec["total"],
                sec["passed"],
                sec["failed"],
                sec["not_applicable"]
            );
            if let Some(first) = sec["first_counterexample"].as_object() {
                let _ = writeln!(
                    s,
                    "first counterexample: {}",
                    first["key"].as_str().unwrap_or_default()
                );
                let _ = writeln!(
                    s,
                    "{}",
                    serde_json::to_string(&first["report"]).unwrap_or_default()
                );
            }
        }
        let _ = writeln!(s, "status: {status}");
        s
    };
    Ok(Outcome {
        code: if failed == 0 { 0 } else { 1 },
        body,
    })
}

fn points_key(k: &Kw3Semigroup) -> String {
    let ps: Vec<String> = k
        .points
        .iter()
        .map(|p| format!("{}:{}:{}", p.x, p.y, p.z))
        .collect();
    format!("[{}]", ps.join(","))
}

/// Identifiers accepted by the `table` command.
pub const TABLE_IDS: [&str; 3] = ["type-5-7", "mu-5-7", "mu2-5-7"];

/// The scan behind all three tables: R(5,7,2,1,3), fixed first gap at
/// `(2,0,0)` for the two-gap table.
pub fn table_scan() -> Result<TableScan> {
    crate::kw3d::scan_tables(Kw3Params::new(5, 7, 2, 1, 3)?, GapPoint3::new(2, 0, 0))
}

/// `(h, value)` rows ordered by value, then `h`.
pub fn table_rows(id: &str, scan: &TableScan) -> Result<Vec<(i64, i64)>> {
    let mut rows: Vec<(i64, i64)> = match id {
        "type-5-7" => scan
            .singles
            .iter()
            .map(|r| (r.h, r.semigroup_type as i64))
            .collect(),
        "mu-5-7" => scan.singles.iter().map(|r| (r.h, r.mu as i64)).collect(),
        "mu2-5-7" => scan.pairs.iter().map(|r| (r.h, r.mu as i64)).collect(),
        other => return Err(Error::UnknownTable(other.to_string())),
    };
    rows.sort_by_key(|&(h, v)| (v, h));
    Ok(rows)
}

pub fn table_csv(id: &str, rows: &[(i64, i64)]) -> String {
    let value = if id.starts_with("type") { "type" } else { "mu" };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["h", value]).expect("in-memory write");
    for (h, v) in rows {
        w.write_record([h.to_string(), v.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("ascii")
}

fn table(a: &TableArgs) -> Result<Outcome> {
    if !TABLE_IDS.contains(&a.id.as_str()) {
        return Err(Error::UnknownTable(a.id.clone()));
    }
    let rows = table_rows(&a.id, &table_scan()?)?;
    let body = if a.output.json {
        let key = if a.id.starts_with("type") {
            "type"
        } else {
            "mu"
        };
        let rows: Vec<Value> = rows.iter().map(|(h, v)| json!({"h": h, key: v})).collect();
        report(
            "table",
            json!({"id": a.id}),
            "pass",
            json!({ "rows": rows }),
        )
    } else {
        table_csv(&a.id, &rows)
    };
    Ok(Outcome { code: 0, body })
}

const CELL: i64 = 40;
const MARGIN: i64 = 20;

/// Hand-written SVG of the staircase, its grid and its corners.
pub fn path_svg(path: &LatticePath) -> String {
    let (w, h) = (path.width, path.height);
    let px = |x: i64| MARGIN + x * CELL;
    let py = |y: i64| MARGIN + (h - y) * CELL;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        2 * MARGIN + w * CELL,
        2 * MARGIN + h * CELL,
        2 * MARGIN + w * CELL,
        2 * MARGIN + h * CELL
    );
    s.push_str(r##"<g stroke="#cccccc" stroke-width="1">"##);
    s.push('\n');
    for x in 1..w {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(x),
            py(h),
            px(x),
            py(0)
        );
    }
    for y in 1..h {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(0),
            py(y),
            px(w),
            py(y)
        );
    }
    s.push_str("</g>\n");
    let _ = writeln!(
        s,
        r#"<rect class="boundary" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        px(0),
        py(h),
        w * CELL,
        h * CELL
    );
    if !path.corners.is_empty() {
        let pts: Vec<String> = path
            .vertices()
            .iter()
            .map(|&(x, y)| format!("{},{}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline class="path" points="{}" fill="none" stroke="blue" stroke-width="3"/>"#,
            pts.join(" ")
        );
        for &(x, y) in &path.corners {
            let _ = writeln!(
                s,
                r#"<circle class="corner" cx="{}" cy="{}" r="5" fill="red"><title>({x},{y})</title></circle>"#,
                px(x),
                py(y)
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

#[derive(Debug, Serialize)]
struct LabeledPoint {
    value: i64,
    point: Option<GapPoint3>,
}

fn labeled(params: Kw3Params, values: &[i64]) -> Vec<LabeledPoint> {
    values
        .iter()
        .map(|&value| LabeledPoint {
            value,
            point: gap_rep(params, value).ok(),
        })
        .collect()
}

fn render(a: &RenderArgs) -> Result<Outcome> {
    let spec = Spec::parse(&a.spec)?;
    let body = match &spec {
        Spec::Kw(params, corners) => {
            let c = kw_corners(*params, corners)?;
            let path = render_path(&c);
            if a.output.json {
                report(
                    "render",
                    spec.inputs(),
                    "pass",
                    json!({"steps": path.to_text(), "vertices": path.vertices(), "path": path}),
                )
            } else {
                path_svg(&path)
            }
        }
        Spec::Kw3(params, points) => {
            let cloud = gap_cloud(*params);
            let mut result = json!({
                "plane": {
                    "coefficients": params.base_generators(),
                    "rhs": params.frobenius_formula(),
                },
                "gap_points": cloud,
                "gap_count": cloud.len(),
            });
            if let Some(pts) = points {
                let k = build_kw3(*params, pts)?;
                let mut ap = serde_json::Map::new();
                for m in params.base_generators() {
                    ap.insert(
                        m.to_string(),
                        json!(labeled(*params, &k.semigroup.apery(m)?.elements)),
                    );
                }
                result["adjoined"] = json!(labeled(*params, &k.adjoined));
                result["apery"] = Value::Object(ap);
                result["apery_intersection"] = json!(labeled(*params, &k.apery_intersection()));
                result["pseudo_frobenius"] =
                    json!(labeled(*params, &k.semigroup.pseudo_frobenius().elements));
            }
            report("render", spec.inputs(), "pass", result)
        }
        Spec::Gens(_) => {
            return Err(Error::InvalidSpec("render needs --kw or --kw3".into()));
        }
    };
    Ok(Outcome { code: 0, body })
}

fn enumerate(a: &EnumerateArgs) -> Result<Outcome> {
    let spec = Spec::parse(&a.spec)?;
    let rows: Vec<(String, &'static str, Vec<i64>)> = match &spec {
        Spec::Kw(params, _) => {
            check_cap(family_size(*params), a.cap.cap)?;
            enumerate_kw(*params)
                .iter()
                .map(|m| {
                    let kind = match m {
                        KwMember::Corners(_) => "corners",
                        KwMember::HalfP { .. } => "half_p",
                        KwMember::HalfQ { .. } => "half_q",
                    };
                    (member_key(m), kind, m.generators())
                })
                .collect()
        }
        Spec::Kw3(params, _) => {
            let members = strict_members(*params);
            check_cap(members.len(), a.cap.cap)?;
            members
                .iter()
                .map(|k| (points_key(k), "points", k.generators().to_vec()))
                .collect()
        }
        Spec::Gens(_) => {
            return Err(Error::InvalidSpec("enumerate needs --kw or --kw3".into()));
        }
    };
    let body = if a.output.json {
        let members: Vec<Value> = rows
            .iter()
            .map(|(key, kind, gens)| json!({"key": key, "kind": kind, "generators": gens}))
            .collect();
        report(
            "enumerate",
            spec.inputs(),
            "pass",
            json!({"count": members.len(), "members": members}),
        )
    } else if a.output.csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["key", "kind", "generators"])
            .expect("in-memory write");
        for (key, kind, gens) in &rows {
            let g: Vec<String> = gens.iter().map(ToString::to_string).collect();
            w.write_record([key.as_str(), kind, &g.join(" ")])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("ascii")
    } else {
        let mut s = String::new();
        for (key, _, gens) in &rows {
            let _ = writeln!(s, "{key}\t<{}>", join(gens));
        }
        s
    };
    Ok(Outcome { code: 0, body })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["kwsgp"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn analyze_example() {
        let o = run_args(&["analyze", "--gens", "5,7,11,13", "--json"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.body).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["result"]["type"], 3);
        assert_eq!(v["result"]["mu"], 6);
        assert_eq!(
            v["result"]["principal_matrix"]["entries"],
            json!([[-4, 1, 0, 1], [2, -3, 1, 0], [3, 1, -2, 0], [1, 3, 0, -2]])
        );
    }

    #[test]
    fn analyze_kw_case() {
        let o = run_args(&["analyze", "--kw", "5,7", "--corners", "2:2,3:1", "--json"]);
        let v: Value = serde_json::from_str(&o.body).unwrap();
        assert_eq!(v["result"]["kw"]["case"], "i");
        assert_eq!(v["result"]["generators"], json!([5, 7, 11, 13]));
    }

    #[test]
    fn input_errors_exit_2() {
        let o = run_args(&["analyze", "--gens", "4,6", "--json"]);
        assert_eq!(o.code, 2);
        let v: Value = serde_json::from_str(&o.body).unwrap();
        assert_eq!(v["error"]["kind"], "NonCoprime");
        assert_eq!(run_args(&["table", "nope"]).code, 2);
        assert_eq!(run_args(&["render", "--gens", "5,7"]).code, 2);
    }

    #[test]
    fn cap_is_enforced() {
        let o = run_args(&["enumerate", "--kw", "9,10", "--cap", "10", "--json"]);
        assert_eq!(o.code, 2);
        assert!(o.body.contains("CapExceeded"));
        assert_eq!(family_size(KwParams::new(5, 7).unwrap()), 10);
    }

    #[test]
    fn svg_of_empty_path_is_rectangle_only() {
        let c = KwCorners::new(KwParams::new(5, 7).unwrap(), vec![]).unwrap();
        let svg = path_svg(&render_path(&c));
        assert!(svg.contains(r#"class="boundary""#));
        assert!(!svg.contains("polyline") && !svg.contains("circle"));
        let c = KwCorners::new(KwParams::new(5, 7).unwrap(), vec![(2, 2), (3, 1)]).unwrap();
        assert_eq!(path_svg(&render_path(&c)).matches("<circle").count(), 2);
    }

    #[test]
    fn json_keys_sorted() {
        let o = run_args(&["analyze", "--gens", "2,3", "--json"]);
        let keys: Vec<&str> = o
            .body
            .lines()
            .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        assert!(o.body.contains("\"frobenius\": 1"));
    }
}
