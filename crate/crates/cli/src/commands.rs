use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::ops::RangeInclusive;

use degspread_core::bounds::{self, mop_bounds, tree_lower_bound, Rational};
use degspread_core::constructions::{ConstructionSpec, Family};
use degspread_core::error::Error;
use degspread_core::verify::{self, Check, Tamper};
use degspread_core::{parse_graph6, sp, to_edge_list, to_graph6, DegreeCensus, GraphClass, SearchRecord};
use serde_json::{json, Value};

use crate::args::{ClassArg, Cli, Command, GraphOut};
use crate::input;
use crate::output::{object, OutputEnvelope, Report, Table};
use crate::shards;

/// A failed command: exit status and diagnostic.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Infeasible(_)) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

impl From<input::InputError> for Failure {
    fn from(e: input::InputError) -> Self {
        Failure::usage(e.to_string())
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, Failure> {
    match &cli.command {
        Command::Compute { input, k } => compute(cli, input, *k, stdin),
        Command::Bounds { input, k } => bounds_cmd(cli, input, *k, stdin),
        Command::Construct { family, m, n, k, p, t, out } => {
            let given = [("m", *m), ("n", *n), ("k", *k), ("p", *p), ("t", *t)];
            construct(*family, &given, *out)
        }
        Command::Search { class, range, k, trend } => search(cli, *class, range.clone(), *k, *trend),
        Command::Verify { samples, n_max, k_max, tamper } => verify_cmd(cli, *samples, *n_max, *k_max, tamper.as_deref()),
    }
}

fn ratio_json(r: &Rational) -> Value {
    json!({ "num": *r.numer() as i64, "den": *r.denom() as i64 })
}

fn ratio_text(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn census_json(c: &DegreeCensus) -> Value {
    Value::Array(c.iter().map(|(d, n)| json!([d, n])).collect())
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn compute(cli: &Cli, path: &str, k: usize, stdin: &mut dyn Read) -> Result<Report, Failure> {
    let g = input::load(path, cli.format_in, stdin)?;
    let r = sp(&g, k)?;
    let mut table = Table::new(&["n", "k", "value", "window_lo", "window_hi", "witness"]);
    table.push([g.n(), k, r.value, r.window_lo, r.window_hi].map(|x| x.to_string()).into_iter().chain([joined(&r.witness)]));
    let text = format!(
        "sp(G,{k}) = {} on n = {}\nwindow [{}, {}]\nwitness {}",
        r.value,
        g.n(),
        r.window_lo,
        r.window_hi,
        joined(&r.witness)
    );
    Ok(Report {
        envelope: OutputEnvelope {
            command: "compute",
            inputs: object([("input", json!(path)), ("k", json!(k))]),
            results: json!({
                "n": g.n(),
                "k": k,
                "value": r.value,
                "window_lo": r.window_lo,
                "window_hi": r.window_hi,
                "witness": r.witness,
            }),
            violations: vec![],
        },
        table,
        text,
    })
}

fn bounds_cmd(cli: &Cli, path: &str, k: usize, stdin: &mut dyn Read) -> Result<Report, Failure> {
    let g = input::load(path, cli.format_in, stdin)?;
    let report = bounds::bound_report(&g, k)?;
    let computed = report.computed_sp.expect("bound_report fills computed_sp");
    let mut map = serde_json::Map::new();
    let mut table =
        Table::new(&["name", "kind", "value_num", "value_den", "ceil", "threshold", "applicable", "ref", "computed_sp"]);
    let mut text = format!("n = {}, k = {k}, sp = {computed}\n", g.n());
    for e in &report.entries {
        let ceil = bounds::ceil(&e.value);
        map.insert(
            e.name.to_string(),
            json!({
                "kind": e.kind.as_str(),
                "value_num": *e.value.numer() as i64,
                "value_den": *e.value.denom() as i64,
                "ceil": ceil as i64,
                "threshold": e.threshold() as i64,
                "applicable": e.applicable,
                "ref": e.formula,
            }),
        );
        table.push([
            e.name.to_string(),
            e.kind.as_str().to_string(),
            e.value.numer().to_string(),
            e.value.denom().to_string(),
            ceil.to_string(),
            e.threshold().to_string(),
            e.applicable.to_string(),
            e.formula.to_string(),
            computed.to_string(),
        ]);
        let status = match (e.applicable, e.is_violated_by(computed)) {
            (false, _) => "not applicable",
            (true, true) => "VIOLATED",
            (true, false) => "ok",
        };
        let _ = writeln!(
            text,
            "{:<20} {:<12} {:>12}  threshold {:>5}  {status}",
            e.name,
            e.kind.as_str(),
            ratio_text(&e.value),
            e.threshold()
        );
    }
    let violations = report
        .violations()
        .into_iter()
        .map(|e| json!({ "name": e.name, "kind": e.kind.as_str(), "threshold": e.threshold() as i64, "computed_sp": computed }))
        .collect();
    Ok(Report {
        envelope: OutputEnvelope {
            command: "bounds",
            inputs: object([("input", json!(path)), ("k", json!(k))]),
            results: json!({
                "n": g.n(),
                "k": k,
                "computed_sp": computed,
                "is_tree": g.is_tree(),
                "is_mop": g.is_mop(),
                "bounds": map,
            }),
            violations,
        },
        table,
        text,
    })
}

fn construct(family: Family, given: &[(&'static str, Option<usize>)], out: GraphOut) -> Result<Report, Failure> {
    let wanted = family.params();
    let precondition = || format!("{family} takes {} with {}", flags(wanted), family.precondition());
    if let Some((name, _)) = given.iter().find(|(name, v)| v.is_some() && !wanted.contains(name)) {
        return Err(Failure::usage(format!("unexpected --{name}; {}", precondition())));
    }
    let params: BTreeMap<String, usize> =
        given.iter().filter_map(|&(name, v)| v.map(|v| (name.to_string(), v))).collect();
    let spec = ConstructionSpec::from_params(family, &params).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}; {}", f.message, precondition());
        f
    })?;
    let g = spec.build()?;
    let validation = spec.validate(&g);
    let computed = sp(&g, spec.spread_k())?.value;
    let (encoding, graph) = match out {
        GraphOut::Graph6 => ("graph6", to_graph6(&g)),
        GraphOut::EdgeList => ("edge-list", to_edge_list(&g)),
    };
    let census = g.census();
    let mut table = Table::new(&["family", "n", "edges", "k", "expected_sp", "computed_sp", "census", "graph"]);
    table.push([
        family.to_string(),
        g.n().to_string(),
        g.edge_count().to_string(),
        spec.spread_k().to_string(),
        spec.expected_sp().to_string(),
        computed.to_string(),
        census.to_string(),
        graph.trim_end().to_string(),
    ]);
    let violations = if validation.passed() {
        vec![]
    } else {
        vec![json!({ "family": family.name(), "validation": validation.to_string() })]
    };
    let params_json: serde_json::Map<String, Value> =
        spec.params().into_iter().map(|(name, v)| (name.to_string(), json!(v))).collect();
    Ok(Report {
        envelope: OutputEnvelope {
            command: "construct",
            inputs: object([("family", json!(family.name())), ("params", Value::Object(params_json)), ("out", json!(encoding))]),
            results: json!({
                "n": g.n(),
                "edges": g.edge_count(),
                "class": family.class().as_str(),
                "k": spec.spread_k(),
                "expected_sp": spec.expected_sp(),
                "computed_sp": computed,
                "census": census_json(&census),
                "expected_census": census_json(&spec.expected_census()),
                "validation": validation.to_string(),
                "encoding": encoding,
                "graph": graph,
            }),
            violations,
        },
        table,
        text: graph,
    })
}

fn flags(names: &[&str]) -> String {
    names.iter().map(|n| format!("--{n}")).collect::<Vec<_>>().join(", ")
}

/// `minimum / n` with the k = 2 bracket for one search row.
struct Trend {
    ratio: Rational,
    lower: Rational,
    upper: Rational,
    witness_order: bool,
}

impl Trend {
    fn of(n: usize, minimum: usize) -> Self {
        let n_r = n as i128;
        Trend {
            ratio: Rational::new(minimum as i128, n_r),
            lower: Rational::new(4 * n_r + 6, 9 * n_r),
            upper: Rational::new(5 * n_r + 19, 11 * n_r),
            witness_order: n % 11 == 5 && n >= 27,
        }
    }
}

fn class_violations(rec: &SearchRecord) -> Vec<Value> {
    let mut out = Vec::new();
    match rec.class {
        GraphClass::Mop => {
            for e in mop_bounds(rec.n, rec.k).violations_at(rec.minimum) {
                out.push(json!({ "n": rec.n, "k": rec.k, "minimum": rec.minimum, "bound": e.name, "threshold": e.threshold() as i64 }));
            }
        }
        GraphClass::Tree => {
            if let Ok(b) = tree_lower_bound(rec.n, rec.k) {
                if (rec.minimum as i128) < bounds::ceil(&b) {
                    out.push(json!({ "n": rec.n, "k": rec.k, "minimum": rec.minimum, "bound": "tree_lower", "threshold": bounds::ceil(&b) as i64 }));
                }
            }
        }
    }
    let witness_ok = parse_graph6(&rec.witness)
        .ok()
        .filter(|w| if rec.class == GraphClass::Mop { w.is_mop() } else { w.is_tree() })
        .and_then(|w| sp(&w, rec.k).ok())
        .is_some_and(|r| r.value == rec.minimum);
    if !witness_ok {
        out.push(json!({ "n": rec.n, "k": rec.k, "minimum": rec.minimum, "bound": "witness", "witness": rec.witness }));
    }
    out
}

fn search(cli: &Cli, class: ClassArg, range: RangeInclusive<usize>, k: usize, trend: bool) -> Result<Report, Failure> {
    if trend && (class != ClassArg::Mop || k != 2) {
        return Err(Failure::usage("--trend needs --class mop and -k 2"));
    }
    let pool = shards::pool(cli.jobs)?;
    let records = match class {
        ClassArg::Mop => shards::mop_minima(&pool, range.clone(), k, cli.force)?,
        ClassArg::Tree => shards::tree_minima(&pool, range.clone(), k)?,
    };
    let mut header =
        vec!["class", "n", "k", "minimum", "inspected", "witness_graph6", "distinct_censuses"];
    if trend {
        header.extend(["ratio", "lower", "upper", "above_lower", "below_upper", "witness_order"]);
    }
    let mut table = Table::new(&header);
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut text = String::new();
    let _ = write!(text, "{:<5} {:>3} {:>2} {:>7} {:>10} {:>9}", "class", "n", "k", "minimum", "inspected", "censuses");
    if trend {
        let _ = write!(text, " {:>7} {:>9} {:>9}", "ratio", "lower", "upper");
    }
    let _ = writeln!(text, "  witness");
    for rec in &records {
        violations.extend(class_violations(rec));
        let mut row = vec![
            rec.class.to_string(),
            rec.n.to_string(),
            rec.k.to_string(),
            rec.minimum.to_string(),
            rec.inspected.to_string(),
            rec.witness.clone(),
            rec.distinct_censuses.to_string(),
        ];
        let mut obj = object([
            ("class", json!(rec.class.as_str())),
            ("n", json!(rec.n)),
            ("k", json!(rec.k)),
            ("minimum", json!(rec.minimum)),
            ("inspected", json!(rec.inspected)),
            ("witness_graph6", json!(rec.witness)),
            ("distinct_censuses", json!(rec.distinct_censuses)),
        ]);
        let _ = write!(
            text,
            "{:<5} {:>3} {:>2} {:>7} {:>10} {:>9}",
            rec.class.as_str(),
            rec.n,
            rec.k,
            rec.minimum,
            rec.inspected,
            rec.distinct_censuses
        );
        if trend {
            let t = Trend::of(rec.n, rec.minimum);
            let above = t.ratio >= t.lower;
            let below = t.ratio <= t.upper;
            if !above {
                violations.push(json!({ "n": rec.n, "k": 2, "minimum": rec.minimum, "bound": "trend_lower", "ratio": ratio_text(&t.ratio) }));
            }
            row.extend([
                ratio_text(&t.ratio),
                ratio_text(&t.lower),
                ratio_text(&t.upper),
                above.to_string(),
                below.to_string(),
                t.witness_order.to_string(),
            ]);
            obj.insert("ratio".into(), ratio_json(&t.ratio));
            obj.insert("lower".into(), ratio_json(&t.lower));
            obj.insert("upper".into(), ratio_json(&t.upper));
            obj.insert("above_lower".into(), json!(above));
            obj.insert("below_upper".into(), json!(below));
            obj.insert("witness_order".into(), json!(t.witness_order));
            let _ = write!(text, " {:>7} {:>9} {:>9}", ratio_text(&t.ratio), ratio_text(&t.lower), ratio_text(&t.upper));
        }
        let _ = writeln!(text, "  {}", rec.witness);
        table.push(row);
        rows.push(Value::Object(obj));
    }
    let mut inputs = object([
        ("class", json!(if class == ClassArg::Mop { "mop" } else { "tree" })),
        ("n_min", json!(range.start())),
        ("n_max", json!(range.end())),
        ("k", json!(k)),
    ]);
    if trend {
        inputs.insert("trend".into(), json!(true));
    }
    Ok(Report {
        envelope: OutputEnvelope { command: "search", inputs, results: Value::Array(rows), violations },
        table,
        text,
    })
}

fn parse_tamper(s: &str) -> Result<Tamper, Failure> {
    let (name, shift) = s.split_once('=').ok_or_else(|| Failure::usage(format!("--tamper expects CHECK=SHIFT, got {s:?}")))?;
    let check = match name {
        "baseline" => Check::Baseline,
        "gap" => Check::GapBest,
        "refined" => Check::Refined,
        "rep-upper" => Check::RepUpper,
        "complement" => Check::Complement,
        _ => return Err(Failure::usage(format!("unknown check {name:?}"))),
    };
    let shift = shift.trim_start_matches('+').parse().map_err(|_| Failure::usage(format!("invalid shift {shift:?}")))?;
    Ok(Tamper { check, shift })
}

fn verify_cmd(cli: &Cli, samples: usize, n_max: usize, k_max: usize, tamper: Option<&str>) -> Result<Report, Failure> {
    let tamper = tamper.map(parse_tamper).transpose()?;
    let report = verify::verify_bounds_random_with(n_max, k_max, samples, cli.seed, tamper)?;
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "sample": v.sample,
                "k": v.k,
                "check": v.check.as_str(),
                "sp": v.sp,
                "bound": v.bound as i64,
                "graph6": v.graph6,
            })
        })
        .collect();
    let mut table = Table::new(&["samples", "cases", "violations", "counterexample_graph6"]);
    let first = report.violations.first();
    table.push([
        report.samples.to_string(),
        report.cases.to_string(),
        report.violations.len().to_string(),
        first.map_or(String::new(), |v| v.graph6.clone()),
    ]);
    let text = match first {
        None => format!("{} graphs, {} (graph, k) cases: no violations", report.samples, report.cases),
        Some(v) => format!("violation: {v}"),
    };
    let mut inputs = object([
        ("samples", json!(samples)),
        ("n_max", json!(n_max)),
        ("k_max", json!(k_max)),
        ("seed", json!(cli.seed)),
        ("generator", json!(verify::GENERATOR)),
    ]);
    if let Some(t) = tamper {
        inputs.insert("tamper".into(), json!({ "check": t.check.as_str(), "shift": t.shift as i64 }));
    }
    Ok(Report {
        envelope: OutputEnvelope {
            command: "verify",
            inputs,
            results: json!({ "samples": report.samples, "cases": report.cases, "passed": report.passed() }),
            violations,
        },
        table,
        text,
    })
}
