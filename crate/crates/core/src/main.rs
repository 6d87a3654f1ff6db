use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use spinweyl::error::{Error, Result};
use spinweyl::grouprep::{character_table, CharacterTable, FiniteGroup};
use spinweyl::nilpotent::{cuspidal_case, CuspidalFamily};
use spinweyl::num::{parse_rational, rat_to_string, Cyclotomic, QuadValue, Rational};
use spinweyl::psi::reference::reference_table;
use spinweyl::psi::{psi_classical, psi_cuspidal, psi_exceptional, CoverData, Report};
use spinweyl::rootsys::{build_root_system, default_group_bound, generate_weyl_group, weyl_group_order, Family, RootSystem};
use spinweyl::suites::{self, Suite};

#[derive(Parser)]
#[command(name = "spinweyl", version, about = "Spin covers of Weyl groups, genuine characters and the map to nilpotent orbits")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Allow the E6 cover computations.
    #[arg(long, global = true)]
    long: bool,
    /// Lift the group-order bound, including the refusal of E7 and E8 covers.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(clap::Args)]
struct TypeArgs {
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Simple and positive roots, Gram matrix and ρ̌.
    Roots(TypeArgs),
    /// Character table of W, or of W̃ with --cover.
    Chartable {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        cover: bool,
    },
    /// Casimir scalar of every irreducible of W̃.
    Casimir {
        #[command(flatten)]
        ty: TypeArgs,
        /// Accepted for symmetry with chartable; the Casimir element lives on W̃.
        #[arg(long)]
        cover: bool,
        /// One value per root orbit, e.g. 2,3 or 1/2,1.
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
    },
    /// Rows of the map from genuine types to nilpotent orbits.
    Psi {
        #[arg(long = "type")]
        family: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        /// Case id: B-sp, B-so-odd, C-like-4n-a, C-like-4n-b, G2-in-E6, F4-in-E7.
        #[arg(long)]
        cuspidal: Option<String>,
        /// Rank of a classical cuspidal case.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Parameter p of a classical cuspidal case.
        #[arg(long, default_value_t = 1)]
        p: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

struct Ctx {
    format: Format,
    long: bool,
    force: bool,
    bound: u128,
}

impl Ctx {
    fn root_system(&self, ty: &TypeArgs) -> Result<RootSystem> {
        let family = Family::parse(&ty.family).ok_or_else(|| Error::Usage(format!("unknown type {}", ty.family)))?;
        build_root_system(family, ty.rank)
    }

    /// Bound for a cover of the given root system, with the E6 and E7/E8
    /// gates applied.
    fn cover_bound(&self, rs: &RootSystem) -> Result<u128> {
        if self.force {
            return Ok(u128::MAX);
        }
        let what = format!("the cover of {}", rs.label());
        if rs.family == Family::E && rs.rank >= 7 {
            return Err(Error::Refused { what, flag: "--force" });
        }
        if rs.family == Family::E && !self.long {
            return Err(Error::Refused { what, flag: "--long" });
        }
        Ok(self.bound)
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(rat_to_string(r))
}

fn rats(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn quad(q: &QuadValue) -> Value {
    serde_json::to_value(q).expect("quad value")
}

/// Quadratic values as `{q0,q1,q2,q3}`; anything else as its coefficients
/// on the powers of a root of unity.
fn cyc(c: &Cyclotomic) -> Value {
    match c.to_quad() {
        Some(q) => quad(&q),
        None => json!({ "zeta": c.modulus().to_string(), "coeffs": rats(c.coeffs()) }),
    }
}

fn cyc_text(c: &Cyclotomic) -> String {
    match c.to_quad() {
        Some(q) => q.render(),
        None => c.render(),
    }
}

fn document(command: &str, payload: Value) -> Value {
    json!({ "schema_version": "1", "command": command, "payload": payload })
}

fn emit(ctx: &Ctx, doc: &Value, tsv: impl FnOnce() -> Vec<Vec<String>>) {
    match ctx.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(doc).expect("json")),
        Format::Tsv => {
            for row in tsv() {
                println!("{}", row.join("\t"));
            }
        }
    }
}

fn cmd_roots(ctx: &Ctx, ty: &TypeArgs) -> Result<()> {
    let rs = ctx.root_system(ty)?;
    let positive: Vec<Value> = rs
        .positive_coords
        .iter()
        .zip(&rs.positive_roots)
        .zip(&rs.orbit_of)
        .map(|((c, a), o)| json!({ "simple_coords": c.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "ambient": rats(a), "orbit": o }))
        .collect();
    let doc = document(
        "roots",
        json!({
            "type": rs.family.to_string(),
            "rank": rs.rank,
            "weyl_group_order": weyl_group_order(rs.family, rs.rank).to_string(),
            "simple_roots": rs.simple_roots.iter().map(|r| rats(r)).collect::<Vec<_>>(),
            "positive_roots": positive,
            "gram": rs.simple_gram().iter().map(|r| rats(r)).collect::<Vec<_>>(),
            "rho_check": rats(&rs.coroot_half_sum()),
            "two_rho_check_norm": rat(&rs.two_rho_check_norm()),
        }),
    );
    emit(ctx, &doc, || {
        let mut out = vec![vec!["index".into(), "simple_coords".into(), "ambient".into(), "orbit".into()]];
        for (i, ((c, a), o)) in rs.positive_coords.iter().zip(&rs.positive_roots).zip(&rs.orbit_of).enumerate() {
            let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            let a: Vec<String> = a.iter().map(rat_to_string).collect();
            out.push(vec![i.to_string(), c.join(","), a.join(","), o.to_string()]);
        }
        out
    });
    Ok(())
}

struct ClassInfo {
    size: usize,
    order: usize,
    elliptic: bool,
    splits: Option<bool>,
}

fn table_json(name: &str, order: usize, info: &[ClassInfo], t: &CharacterTable, cover: bool) -> Value {
    let classes: Vec<Value> = info
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut v = json!({ "index": i, "size": c.size, "order": c.order, "elliptic": c.elliptic });
            if let Some(s) = c.splits {
                v["splits"] = json!(s);
            }
            v
        })
        .collect();
    let chars: Vec<Value> = t
        .irreducibles
        .iter()
        .map(|irr| {
            let mut v = json!({ "degree": irr.degree.to_string(), "values": irr.values.iter().map(cyc).collect::<Vec<_>>() });
            if cover {
                v["genuine"] = json!(irr.genuine);
                v["self_associate"] = json!(irr.self_associate);
            }
            v
        })
        .collect();
    json!({ "group": name, "order": order.to_string(), "classes": classes, "characters": chars })
}

fn table_tsv(info: &[ClassInfo], t: &CharacterTable, cover: bool) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut head = vec!["degree".to_string()];
    if cover {
        head.push("genuine".into());
    }
    head.extend((0..info.len()).map(|i| format!("C{i}|{}|o{}", info[i].size, info[i].order)));
    out.push(head);
    for irr in &t.irreducibles {
        let mut row = vec![irr.degree.to_string()];
        if cover {
            row.push(irr.genuine.to_string());
        }
        row.extend(irr.values.iter().map(cyc_text));
        out.push(row);
    }
    out
}

fn det_one_minus(poly: &[Rational]) -> bool {
    use num_traits::Zero;
    !poly.iter().cloned().sum::<Rational>().is_zero()
}

fn cmd_chartable(ctx: &Ctx, ty: &TypeArgs, cover: bool) -> Result<()> {
    let rs = ctx.root_system(ty)?;
    let bound = if cover { ctx.cover_bound(&rs)? } else if ctx.force { u128::MAX } else { ctx.bound };
    let table_bound = usize::try_from(bound).unwrap_or(usize::MAX);
    let (doc, info, table) = if cover {
        let data = CoverData::new(&rs, bound)?;
        let cl = data.classes();
        let info: Vec<ClassInfo> = (0..cl.len())
            .map(|c| {
                let x = cl.reps[c];
                let poly = data.cover.weyl.element(data.cover.base(x)).char_poly();
                ClassInfo {
                    size: cl.sizes[c],
                    order: cl.element_orders[c],
                    elliptic: det_one_minus(&poly),
                    splits: Some(cl.class_of(data.cover.mul(data.cover.z(), x)) != c),
                }
            })
            .collect();
        let doc = table_json(&format!("W~({})", rs.label()), data.cover.order(), &info, &data.table, true);
        (doc, info, data.table)
    } else {
        let g = generate_weyl_group(&rs, bound)?;
        let t = character_table(&g, table_bound)?;
        let info: Vec<ClassInfo> = (0..t.classes.len())
            .map(|c| ClassInfo {
                size: t.classes.sizes[c],
                order: t.classes.element_orders[c],
                elliptic: det_one_minus(&g.element(t.classes.reps[c]).char_poly()),
                splits: None,
            })
            .collect();
        let doc = table_json(&format!("W({})", rs.label()), g.order(), &info, &t, false);
        (doc, info, t)
    };
    emit(ctx, &document("chartable", doc), || table_tsv(&info, &table, cover));
    Ok(())
}

fn parse_params(p: &[String]) -> Result<Vec<Rational>> {
    p.iter().map(|s| parse_rational(s).ok_or_else(|| Error::Usage(format!("bad parameter {s}")))).collect()
}

fn cmd_casimir(ctx: &Ctx, ty: &TypeArgs, params: &[String]) -> Result<()> {
    let mut rs = ctx.root_system(ty)?;
    if !params.is_empty() {
        rs = rs.with_params(&parse_params(params)?)?;
    }
    let data = CoverData::new(&rs, ctx.cover_bound(&rs)?)?;
    let mut rows = Vec::new();
    for (i, irr) in data.table.irreducibles.iter().enumerate() {
        rows.push((i, irr.degree, irr.genuine, data.scalar(i)?));
    }
    let doc = document(
        "casimir",
        json!({
            "group": format!("W~({})", rs.label()),
            "params": rats(&rs.param_c),
            "two_rho_check_norm": rat(&rs.two_rho_check_norm()),
            "rows": rows.iter().map(|(i, d, g, s)| json!({ "index": i, "degree": d.to_string(), "genuine": g, "scalar": quad(s) })).collect::<Vec<_>>(),
        }),
    );
    emit(ctx, &doc, || {
        let mut out = vec![vec!["index".into(), "degree".into(), "genuine".into(), "scalar".into()]];
        out.extend(rows.iter().map(|(i, d, g, s)| vec![i.to_string(), d.to_string(), g.to_string(), s.render()]));
        out
    });
    Ok(())
}

fn cuspidal_family(id: &str) -> Result<CuspidalFamily> {
    [
        CuspidalFamily::BSp,
        CuspidalFamily::BSoOdd,
        CuspidalFamily::CLike4nA,
        CuspidalFamily::CLike4nB,
        CuspidalFamily::G2InE6,
        CuspidalFamily::F4InE7,
    ]
    .into_iter()
    .find(|f| f.id().eq_ignore_ascii_case(id))
    .ok_or_else(|| Error::Usage(format!("unknown cuspidal case {id}")))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn psi_tsv(rows: &Value) -> Vec<Vec<String>> {
    let Some(arr) = rows.as_array() else { return Vec::new() };
    let keys: Vec<String> = arr.first().and_then(Value::as_object).map(|o| o.keys().cloned().collect()).unwrap_or_default();
    let mut out = vec![keys.clone()];
    for r in arr {
        out.push(keys.iter().map(|k| flat(&r[k])).collect());
    }
    out
}

/// Lossy one-cell rendering of a JSON value.
fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(a) => a.iter().map(flat).collect::<Vec<_>>().join(";"),
        Value::Object(o) if o.contains_key("q0") => {
            let q: Vec<Rational> = ["q0", "q1", "q2", "q3"].iter().map(|k| parse_rational(o[*k].as_str().unwrap_or("0")).unwrap_or_default()).collect();
            QuadValue { q: [q[0].clone(), q[1].clone(), q[2].clone(), q[3].clone()] }.render()
        }
        other => other.to_string(),
    }
}

fn cmd_psi(ctx: &Ctx, family: Option<&str>, rank: Option<usize>, params: &[String], cuspidal: Option<&str>, n: usize, p: usize) -> Result<()> {
    let (subject, rows) = if let Some(id) = cuspidal {
        let case = cuspidal_case(cuspidal_family(id)?, n, p)?;
        let bound = if ctx.force { u128::MAX } else { ctx.bound };
        let rows = if case.content_params.is_some() {
            to_value(&psi_classical(case.root_family, case.rank, &case.params, bound)?)
        } else {
            to_value(&psi_cuspidal(&case, bound)?)
        };
        (json!({ "case": to_value(&case) }), rows)
    } else {
        let ty = TypeArgs {
            family: family.ok_or_else(|| Error::Usage("psi needs --type and --rank, or --cuspidal".into()))?.to_string(),
            rank: rank.ok_or_else(|| Error::Usage("psi needs --rank".into()))?,
        };
        let rs = ctx.root_system(&ty)?;
        let rows = match rs.family {
            Family::A | Family::B | Family::C | Family::D => {
                let params = if params.is_empty() { rs.param_c.clone() } else { parse_params(params)? };
                let bound = if ctx.force { u128::MAX } else { ctx.bound };
                to_value(&psi_classical(rs.family, rs.rank, &params, bound)?)
            }
            _ => {
                let table = reference_table(&rs.label()).ok_or_else(|| Error::Usage(format!("no table for {}", rs.label())))?;
                to_value(&psi_exceptional(table, ctx.cover_bound(&rs)?)?)
            }
        };
        (json!({ "type": rs.family.to_string(), "rank": rs.rank }), rows)
    };
    let mut payload = subject;
    payload["rows"] = rows.clone();
    emit(ctx, &document("psi", payload), || psi_tsv(&rows));
    Ok(())
}

fn cmd_verify(ctx: &Ctx, suite: &str) -> Result<bool> {
    let suite = Suite::parse(suite).ok_or_else(|| Error::Usage(format!("unknown suite {suite}")))?;
    let opts = suites::Options { long: ctx.long, bound: if ctx.force { u128::MAX } else { ctx.bound } };
    eprintln!("running suite {}", suite.name());
    let reports = suites::run(suite, &opts)?;
    let passed = reports.iter().all(Report::passed);
    for r in &reports {
        eprintln!("{}: {}", if r.passed() { "pass" } else { "FAIL" }, r.subject);
    }
    let doc = document("verify", json!({ "suite": suite.name(), "passed": passed, "reports": to_value(&reports) }));
    emit(ctx, &doc, || {
        let mut out = vec![vec!["subject".into(), "check".into(), "pass".into(), "expected".into(), "actual".into()]];
        for r in &reports {
            for c in &r.checks {
                out.push(vec![r.subject.clone(), c.name.clone(), c.pass.to_string(), c.expected.clone(), c.actual.clone()]);
            }
        }
        out
    });
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool> {
    let ctx = Ctx { format: cli.format, long: cli.long, force: cli.force, bound: default_group_bound() };
    match &cli.command {
        Command::Roots(ty) => cmd_roots(&ctx, ty)?,
        Command::Chartable { ty, cover } => cmd_chartable(&ctx, ty, *cover)?,
        Command::Casimir { ty, params, .. } => cmd_casimir(&ctx, ty, params)?,
        Command::Psi { family, rank, params, cuspidal, n, p } => {
            cmd_psi(&ctx, family.as_deref(), *rank, params, cuspidal.as_deref(), *n, *p)?
        }
        Command::Verify { suite } => return cmd_verify(&ctx, suite),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Usage(_) => 2,
                Error::BoundExceeded { .. } | Error::Refused { .. } => 3,
                _ => 1,
            })
        }
    }
}
