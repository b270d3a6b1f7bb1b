//! Report rendering: canonical JSON, CSV rows and plain text.

use std::io::{self, Write};

use cage_spectra::feasibility::{rounded_multiplicities, GapVerdict, RootMultiplicity, ScanRow};
use cage_spectra::graphcore::{IdentityReport, SpectralReport, StructuralVerdict};
use cage_spectra::{FeasibilityReport, Interval};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{json, Value};

/// Significant digits kept in every serialized float.
pub const FLOAT_DIGITS: usize = 12;

/// Rounds to [`FLOAT_DIGITS`] significant digits and prints the shortest
/// form that reads back as the rounded value. Always contains `.` or `e`,
/// so a float never looks like an integer.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let r: f64 = format!("{:.*e}", FLOAT_DIGITS - 1, x).parse().expect("formatted float parses");
    let a = r.abs();
    if !(1e-4..1e15).contains(&a) {
        return format!("{r:e}");
    }
    let s = r.to_string();
    if s.contains('.') {
        s
    } else {
        s + ".0"
    }
}

struct Canonical;

impl Formatter for Canonical {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_float(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Single-line JSON with sorted keys and 12-digit floats.
pub fn to_canonical_json(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Canonical);
    value.serialize(&mut ser).expect("serializing a Value into memory cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// Integers that fit in 64 bits stay JSON numbers; larger ones become
/// decimal strings.
pub fn bigint_json(x: &BigInt) -> Value {
    if let Some(v) = x.to_i64() {
        Value::from(v)
    } else if let Some(v) = x.to_u64() {
        Value::from(v)
    } else {
        Value::String(x.to_string())
    }
}

pub fn biguint_json(x: &BigUint) -> Value {
    bigint_json(&BigInt::from(x.clone()))
}

fn float_json(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

fn interval_json(x: &Interval) -> Value {
    json!([float_json(x.lo_f64()), float_json(x.hi_f64())])
}

fn root_json(family: &str, r: &RootMultiplicity) -> Value {
    let rec = &r.record;
    json!({
        "family": family,
        "index": rec.index,
        "eta": rec.eta,
        "theta": float_json(rec.theta),
        "phi": float_json(rec.phi),
        "alpha": float_json(rec.alpha),
        "bracket": interval_json(&rec.bracket),
        "multiplicity_closed_form": float_json(r.closed_form),
        "multiplicity_trig": float_json(r.trig),
        "enclosure": interval_json(&r.integrality.enclosure),
        "nearest_integer": bigint_json(&r.integrality.nearest),
        "deviation": float_json(r.integrality.deviation),
        "integrality": format!("{:?}", r.integrality.status).to_lowercase(),
        "precision_bits": r.integrality.precision_bits,
    })
}

fn gap_json(gap: &GapVerdict) -> Value {
    match gap.report() {
        None => Value::Null,
        Some(g) => json!({
            "lower": float_json(g.lower()),
            "upper": float_json(g.upper()),
            "angular_bound": float_json(g.angular_bound),
            "analytic_bound": float_json(g.analytic_bound),
            "contains_integer": g.contains_integer(),
            "excluded": g.excluded(),
            "bounds_consistent": g.bounds_consistent(),
            "closing_chain": {
                "leading": float_json(g.chain.leading),
                "degree_term": float_json(g.chain.degree_term),
                "excess_term": float_json(g.chain.excess_term),
                "trailing": float_json(g.chain.trailing),
                "holds": g.chain.holds(),
            },
        }),
    }
}

/// Multiplicities in ascending eigenvalue order, including `+-k`: exact
/// integers when every root is certified integral, floats otherwise.
pub fn multiplicity_values(r: &FeasibilityReport) -> Vec<Value> {
    match rounded_multiplicities(r) {
        Some(ms) => ms.iter().map(bigint_json).collect(),
        None => r.multiplicities.entries.iter().map(|&(_, m)| float_json(m)).collect(),
    }
}

pub fn feasibility_json(r: &FeasibilityReport) -> Value {
    let order = r.order_report();
    let opt = |x: Option<f64>| x.map_or(Value::Null, float_json);
    json!({
        "k": r.k,
        "d": r.d,
        "e": r.e,
        "n": biguint_json(&r.n),
        "verdict": r.verdict.as_str(),
        "eigenvalues": r.multiplicities.entries.iter().map(|&(t, _)| float_json(t)).collect::<Vec<_>>(),
        "multiplicities": multiplicity_values(r),
        "roots": r.mu.iter().map(|x| root_json("mu", x))
            .chain(r.lambda.iter().map(|x| root_json("lambda", x)))
            .collect::<Vec<_>>(),
        "all_positive": r.all_positive(),
        "all_integral": r.all_integral(),
        "max_integrality_deviation": float_json(r.max_integrality_deviation()),
        "max_dual_formula_disagreement": float_json(r.max_dual_formula_disagreement()),
        "sum_check": {
            "total": float_json(r.sum_check.total),
            "expected": float_json(r.sum_check.expected),
            "passes": r.sum_check.passes(),
        },
        "moment_check": {
            "max_q": r.moment_check.max_q,
            "worst_q": r.moment_check.worst_q,
            "worst_relative_error": float_json(r.moment_check.worst_relative_error),
            "passes": r.moment_check.passes(),
        },
        "symmetry": {
            "mu_error": float_json(order.mu_symmetry_error),
            "lambda_error": float_json(order.lambda_symmetry_error),
            "mu_minimality_margin": opt(order.mu_minimality_margin),
            "lambda_minimality_margin": opt(order.lambda_minimality_margin),
            "passes": order.passes(),
        },
        "gap": gap_json(&r.gap),
    })
}

pub fn scan_row_json(row: &ScanRow) -> Value {
    match &row.outcome {
        Ok(r) => feasibility_json(r),
        Err(err) => json!({
            "k": row.k,
            "d": row.d,
            "e": row.e,
            "verdict": row.verdict().as_str(),
            "error": err.to_string(),
        }),
    }
}

pub const CSV_HEADER: [&str; 8] = ["k", "d", "e", "n", "verdict", "gap_lo", "gap_hi", "max_integrality_deviation"];

pub fn csv_record(row: &ScanRow) -> [String; 8] {
    let (n, gap_lo, gap_hi, dev) = match &row.outcome {
        Ok(r) => {
            let (lo, hi) = r
                .gap
                .report()
                .map_or((String::new(), String::new()), |g| (format_float(g.lower()), format_float(g.upper())));
            (r.n.to_string(), lo, hi, format_float(r.max_integrality_deviation()))
        }
        Err(_) => Default::default(),
    };
    [
        row.k.to_string(),
        row.d.to_string(),
        row.e.to_string(),
        n,
        row.verdict().as_str().to_string(),
        gap_lo,
        gap_hi,
        dev,
    ]
}

pub fn feasibility_text(r: &FeasibilityReport) -> String {
    let mut s = format!("k = {}, d = {}, e = {}, n = {}\nverdict: {}\n", r.k, r.d, r.e, r.n, r.verdict);
    let ms = multiplicity_values(r);
    s.push_str("eigenvalue            multiplicity\n");
    for (&(theta, _), m) in r.multiplicities.entries.iter().zip(&ms) {
        let m = match m {
            Value::Number(x) if x.is_f64() => format_float(x.as_f64().unwrap_or(f64::NAN)),
            other => other.to_string().trim_matches('"').to_string(),
        };
        s.push_str(&format!("{:<21} {m}\n", format_float(theta)));
    }
    s.push_str(&format!(
        "max integrality deviation: {}\nmax dual-formula disagreement: {}\nsum check: {}, moment check: {} (q <= {})\n",
        format_float(r.max_integrality_deviation()),
        format_float(r.max_dual_formula_disagreement()),
        pass_str(r.sum_check.passes()),
        pass_str(r.moment_check.passes()),
        r.moment_check.max_q,
    ));
    match r.gap.report() {
        None => s.push_str("gap test: not applicable (d below regime)\n"),
        Some(g) => s.push_str(&format!(
            "gap test: lambda2^2 - mu2^2 in [{}, {}], contains integer: {}, analytic bound {}\n",
            format_float(g.lower()),
            format_float(g.upper()),
            g.contains_integer(),
            format_float(g.analytic_bound),
        )),
    }
    s
}

pub fn scan_row_text(row: &ScanRow) -> String {
    match &row.outcome {
        Ok(r) => {
            let gap = r.gap.report().map_or_else(
                || "-".to_string(),
                |g| format!("[{}, {}]", format_float(g.lower()), format_float(g.upper())),
            );
            format!(
                "k={} d={} e={} n={} verdict={} gap={gap} max_integrality_deviation={}",
                r.k,
                r.d,
                r.e,
                r.n,
                r.verdict,
                format_float(r.max_integrality_deviation())
            )
        }
        Err(err) => format!("k={} d={} e={} verdict={} ({err})", row.k, row.d, row.e, row.verdict()),
    }
}

pub fn pass_str(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn opt_usize(x: Option<usize>) -> Value {
    x.map_or(Value::Null, Value::from)
}

pub fn structural_json(v: &StructuralVerdict) -> Value {
    json!({
        "k": v.k,
        "d": v.d,
        "e": v.e,
        "order": v.order,
        "degree": opt_usize(v.degree),
        "girth": opt_usize(v.girth),
        "diameter": opt_usize(v.diameter),
        "bipartite": v.bipartite,
        "excess": v.excess.to_string().parse::<i64>().map_or(Value::String(v.excess.to_string()), Value::from),
        "antipode_count_per_vertex": v.antipode_count_per_vertex.map_or(Value::from("non-uniform"), Value::from),
        "antipodal_cliques_ok": v.antipodal_cliques_ok,
        "clique_count": opt_usize(v.clique_count),
        "failures": v.failures.iter().map(|f| format!("{f:?}")).collect::<Vec<_>>(),
        "passes": v.passes(),
    })
}

pub fn identity_json(r: &Result<IdentityReport, String>) -> Value {
    match r {
        Ok(r) => json!({ "holds": r.holds(), "max_abs_residual": bigint_json(&r.max_abs_residual) }),
        Err(e) => json!({ "holds": false, "refused": e }),
    }
}

pub fn spectral_json(r: &Result<SpectralReport, String>) -> Value {
    match r {
        Ok(r) => json!({
            "passes": r.passes(),
            "max_deviation": float_json(r.max_deviation),
            "trivial_count": r.trivial_count,
            "checked": r.checks.len(),
        }),
        Err(e) => json!({ "passes": false, "refused": e }),
    }
}
