use affwhit::engine::{ModuleElement, SolveReport, TensorElement, Truncation, WhittakerSpec};
use affwhit::scalar;
use affwhit::seqspace::{Genericity, StrongGenericity, WindowRank};
use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::{json, Value};

use crate::config::RunConfig;

/// JSON object that keeps insertion order (monomial order for vectors).
pub struct OrderedMap(pub Vec<(String, String)>);

impl Serialize for OrderedMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

pub fn module_vector(spec: &WhittakerSpec, x: &ModuleElement) -> Value {
    let entries = x.iter().map(|(m, c)| (spec.render_monomial(m), scalar::render(c))).collect();
    serde_json::to_value(OrderedMap(entries)).expect("string map")
}

pub fn tensor_vector(a: &WhittakerSpec, b: &WhittakerSpec, x: &TensorElement) -> Value {
    let entries = x
        .iter()
        .map(|((m, n), c)| {
            (format!("{} ⊗ {}", a.render_monomial(m), b.render_monomial(n)), scalar::render(c))
        })
        .collect();
    serde_json::to_value(OrderedMap(entries)).expect("string map")
}

pub fn strong_verdict(v: &StrongGenericity) -> Value {
    match v {
        StrongGenericity::StronglyGeneric => json!({ "verdict": "strongly_generic" }),
        StrongGenericity::NotStronglyGeneric(r) => json!({
            "verdict": "not_strongly_generic",
            "reason": r,
            "detail": r.to_string(),
        }),
        StrongGenericity::Unknown => json!({ "verdict": "unknown" }),
    }
}

pub fn strong_verdict_text(v: &StrongGenericity) -> String {
    match v {
        StrongGenericity::StronglyGeneric => "strongly generic".into(),
        StrongGenericity::NotStronglyGeneric(r) => format!("not strongly generic: {r}"),
        StrongGenericity::Unknown => "unknown (fall back to window ranks)".into(),
    }
}

pub fn generic_verdict(v: &Genericity) -> Value {
    match v {
        Genericity::Generic => json!({ "verdict": "generic" }),
        Genericity::NotGeneric(w) => json!({ "verdict": "not_generic", "witness": w.to_string() }),
        Genericity::Unknown => json!({ "verdict": "unknown" }),
    }
}

pub fn generic_verdict_text(v: &Genericity) -> String {
    match v {
        Genericity::Generic => "generic".into(),
        Genericity::NotGeneric(w) => format!("not generic (witness {w})"),
        Genericity::Unknown => "unknown".into(),
    }
}

pub fn window_rank(r: &WindowRank, shifts: i64, window: i64, weighted: bool) -> Value {
    json!({
        "shifts": shifts,
        "window": window,
        "weighted": weighted,
        "full_rank": r.full_rank,
        "rank": r.rank,
        "count": r.count,
    })
}

pub fn solve_fields<V>(trunc: &Truncation, r: &SolveReport<V>) -> Value {
    json!({
        "truncation": trunc,
        "basis_size": r.basis_size,
        "condition_count": r.condition_count,
        "equation_count": r.equation_count,
        "matrix": { "rows": r.equation_count, "columns": r.basis_size },
        "rank": r.rank,
        "dimension": r.dimension,
    })
}

/// Common head of every report.
pub fn head(command: &str, cfg: &RunConfig) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(command));
    m.insert("config".into(), serde_json::to_value(cfg).expect("config serialises"));
    m
}

pub fn merge(into: &mut serde_json::Map<String, Value>, extra: Value) {
    if let Value::Object(o) = extra {
        into.extend(o);
    }
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}
