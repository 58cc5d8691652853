use std::fmt::Write as _;
use std::time::Instant;

use affwhit::affine::{AffineAlgebra, AffineElement, AffineGenerator};
use affwhit::engine::{self, Mode, TensorElement, WhittakerSpec};
use affwhit::rootdata::{FinBasis, RootDatum, Weight};
use affwhit::scalar;
use affwhit::seqspace::{self, BiSequence, Genericity};
use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use crate::config::{self, RunConfig};
use crate::report;

/// What a subcommand produced: human text, the JSON report and the exit code.
pub struct Outcome {
    pub text: String,
    pub report: Value,
    pub code: u8,
}

fn labels(d: &RootDatum, ids: &[affwhit::RootId]) -> Vec<String> {
    ids.iter().map(|&a| d.label(a)).collect()
}

fn algebra_line(d: &RootDatum) -> String {
    let levi: Vec<String> = d.levi().iter().map(|i| format!("a{i}")).collect();
    format!("sl({}), Levi simple roots {{{}}}", d.n(), levi.join(", "))
}

fn lambda_lines(spec: &WhittakerSpec, out: &mut String) {
    let d = spec.datum();
    for (id, s) in spec.lambda() {
        let lit = s.to_literal().map(|l| serde_json::to_string(&l).unwrap_or_default());
        let _ = writeln!(out, "  Λ({}) = {}", d.label(*id), lit.unwrap_or_else(|| "<derived sequence>".into()));
    }
    let _ = writeln!(out, "  θ = {}", scalar::render(spec.theta()));
}

pub fn describe(cfg: &RunConfig) -> Result<Outcome> {
    let d = config::datum(cfg)?;
    let mut text = String::new();
    let _ = writeln!(text, "algebra: {}", algebra_line(&d));
    let _ = writeln!(text, "roots: {}", labels(&d, &d.root_ids().collect::<Vec<_>>()).join(", "));
    let _ = writeln!(text, "Φ_n: {}", labels(&d, d.nilradical()).join(", "));
    let _ = writeln!(text, "Φ⁰_n: {}", labels(&d, d.phi0()).join(", "));
    let _ = writeln!(text, "Φ¹_n: {}", labels(&d, d.phi1()).join(", "));
    let strata: Vec<Vec<String>> = d.strata().iter().map(|s| labels(&d, s)).collect();
    for (i, s) in strata.iter().enumerate() {
        let _ = writeln!(text, "X_{i} = {{{}}}", s.join(", "));
    }
    let mut order = Vec::new();
    for w in d.ordered_weights() {
        match w {
            Weight::Zero => {
                for i in 1..=d.rank() {
                    order.push(format!("H[{i}]@t^*"));
                }
                if cfg.mode == Mode::Affine {
                    order.push("d".into());
                }
            }
            Weight::Root(id) => order.push(format!("X[{}]@t^*", d.label(*id))),
        }
    }
    let _ = writeln!(text, "generator order: {}", order.join(" < "));
    let _ = writeln!(text, "  (within a block, by t-exponent ascending, then Cartan index)");

    let mut rep = report::head("describe", cfg);
    report::merge(
        &mut rep,
        json!({
            "n": d.n(),
            "rank": d.rank(),
            "roots": labels(&d, &d.root_ids().collect::<Vec<_>>()),
            "nilradical": labels(&d, d.nilradical()),
            "phi0": labels(&d, d.phi0()),
            "phi1": labels(&d, d.phi1()),
            "levi_roots": labels(&d, d.levi_roots()),
            "strata": strata,
            "generator_order": order,
        }),
    );
    if !cfg.lambda.is_empty() {
        let spec = config::primary_spec(cfg, &d)?;
        let _ = writeln!(text, "Λ image: {}", report::strong_verdict_text(spec.genericity()));
        for w in spec.warnings() {
            let _ = writeln!(text, "warning: {w}");
        }
        rep.insert("lambda_genericity".into(), report::strong_verdict(spec.genericity()));
        rep.insert("warnings".into(), json!(spec.warnings()));
    }
    Ok(Outcome { text, report: Value::Object(rep), code: 0 })
}

pub fn check_sequences(cfg: &RunConfig, shifts: i64, window: i64) -> Result<Outcome> {
    let literals: Vec<_> = if cfg.sequences.is_empty() {
        cfg.lambda.values().cloned().collect()
    } else {
        cfg.sequences.clone()
    };
    let seqs: Vec<BiSequence> = literals.iter().map(config::parse_sequence).collect::<Result<_>>()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (i, (lit, s)) in literals.iter().zip(&seqs).enumerate() {
        let g = seqspace::is_generic(s);
        let single = seqspace::is_strongly_generic_set(std::slice::from_ref(s));
        let size = match &g {
            Genericity::NotGeneric(_) => seqspace::size(s).ok(),
            _ => None,
        };
        let lit_text = serde_json::to_string(lit)?;
        let _ = writeln!(text, "[{i}] {lit_text}");
        let _ = writeln!(text, "    {}", report::generic_verdict_text(&g));
        if let Some(m) = size {
            let _ = writeln!(text, "    size {m}");
        }
        let _ = writeln!(text, "    alone: {}", report::strong_verdict_text(&single));
        rows.push(json!({
            "sequence": lit,
            "genericity": report::generic_verdict(&g),
            "size": size,
            "strong_genericity": report::strong_verdict(&single),
        }));
    }
    let set = seqspace::is_strongly_generic_set(&seqs);
    let _ = writeln!(text, "set: {}", report::strong_verdict_text(&set));
    let mut ranks = Vec::new();
    for weighted in [false, true] {
        let r = seqspace::window_rank_check(&seqs, shifts, window, weighted)?;
        let _ = writeln!(
            text,
            "window rank S={shifts} W={window} weighted={weighted}: {} of {} rows ({})",
            r.rank,
            r.count,
            if r.full_rank { "full rank" } else { "dependent" }
        );
        ranks.push(report::window_rank(&r, shifts, window, weighted));
    }
    let mut rep = report::head("check-seq", cfg);
    report::merge(
        &mut rep,
        json!({ "sequences": rows, "set_genericity": report::strong_verdict(&set), "window_ranks": ranks }),
    );
    Ok(Outcome { text, report: Value::Object(rep), code: 0 })
}

fn exit_for(dimension: usize) -> u8 {
    if dimension == 1 {
        0
    } else {
        2
    }
}

pub fn whittaker(cfg: &RunConfig, timing: bool) -> Result<Outcome> {
    config::validate_truncation(&cfg.truncation)?;
    let d = config::datum(cfg)?;
    let spec = config::primary_spec(cfg, &d)?;
    let start = Instant::now();
    let r = spec.whittaker_solve(&cfg.truncation);
    let elapsed = start.elapsed();

    let mut text = String::new();
    let _ = writeln!(text, "algebra: {} ({:?}, {:?} cocycle)", algebra_line(&d), cfg.mode, cfg.cocycle);
    lambda_lines(&spec, &mut text);
    let _ = writeln!(text, "Λ image: {}", report::strong_verdict_text(spec.genericity()));
    for w in spec.warnings() {
        let _ = writeln!(text, "warning: {w}");
    }
    let _ = writeln!(
        text,
        "{}: basis {}, conditions {}, equations {}, rank {}",
        cfg.truncation, r.basis_size, r.condition_count, r.equation_count, r.rank
    );
    let _ = writeln!(text, "dimension: {}", r.dimension);
    for (i, v) in r.basis.iter().enumerate() {
        let _ = writeln!(text, "  [{i}] {}", spec.render_element(v));
    }

    let mut rep = report::head("whittaker", cfg);
    rep.insert("lambda_genericity".into(), report::strong_verdict(spec.genericity()));
    rep.insert("warnings".into(), json!(spec.warnings()));
    report::merge(&mut rep, report::solve_fields(&cfg.truncation, &r));
    rep.insert(
        "basis".into(),
        Value::Array(r.basis.iter().map(|v| report::module_vector(&spec, v)).collect()),
    );
    if timing {
        rep.insert("wall_time_ms".into(), json!(elapsed.as_millis() as u64));
    }
    Ok(Outcome { text, report: Value::Object(rep), code: exit_for(r.dimension) })
}

/// Checks `X_α ⊗ t^j · (v ⊗ w) = (Λ + Λ')(α)_j (v ⊗ w)` on `|j| <= window`
/// and `c · (v ⊗ w) = (θ + θ') (v ⊗ w)`.
pub fn additivity_holds(a: &WhittakerSpec, b: &WhittakerSpec, window: i64) -> Result<bool> {
    let vw = TensorElement::cyclic();
    let d = a.datum();
    for &id in d.nilradical() {
        for j in -window..=window {
            let g = AffineGenerator::Loop { x: FinBasis::Root(id), exp: j };
            let got = engine::tensor_act(a, b, g, &vw)?;
            if got != vw.scale(&(a.character(id, j) + b.character(id, j))) {
                return Ok(false);
            }
        }
    }
    if a.mode() == Mode::Affine {
        let got = engine::tensor_act(a, b, AffineGenerator::Central, &vw)?;
        if got != vw.scale(&(a.theta() + b.theta())) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const ADDITIVITY_WINDOW: i64 = 5;

pub fn tensor(cfg: &RunConfig, partner_cfg: Option<&RunConfig>, timing: bool) -> Result<Outcome> {
    config::validate_truncation(&cfg.truncation)?;
    let partner = match partner_cfg {
        Some(p) => {
            if p.algebra != cfg.algebra {
                bail!("tensor factors use different algebras: {:?} vs {:?}", cfg.algebra, p.algebra);
            }
            config::Partner { lambda: p.lambda.clone(), theta: p.theta.clone() }
        }
        None => cfg.partner.clone().context("tensor needs a partner (config field or --partner)")?,
    };
    let d = config::datum(cfg)?;
    let a = config::primary_spec(cfg, &d)?;
    let b = config::spec(&d, &partner.lambda, &partner.theta, cfg.mode, cfg.cocycle)?;
    let union: Vec<BiSequence> = a.lambda().values().chain(b.lambda().values()).cloned().collect();
    let union_verdict = seqspace::is_strongly_generic_set(&union);
    let additive = additivity_holds(&a, &b, ADDITIVITY_WINDOW)?;

    let start = Instant::now();
    let r = engine::tensor_whittaker_solve(&a, &b, &cfg.truncation)?;
    let elapsed = start.elapsed();

    let mut text = String::new();
    let _ = writeln!(text, "algebra: {} ({:?}, {:?} cocycle)", algebra_line(&d), cfg.mode, cfg.cocycle);
    let _ = writeln!(text, "first factor:");
    lambda_lines(&a, &mut text);
    let _ = writeln!(text, "second factor:");
    lambda_lines(&b, &mut text);
    let _ = writeln!(text, "Λ ∪ Λ' image: {}", report::strong_verdict_text(&union_verdict));
    let _ = writeln!(
        text,
        "eigenvalues on v ⊗ w equal Λ + Λ' for |j| <= {ADDITIVITY_WINDOW}, c acts as θ + θ': {}",
        if additive { "yes" } else { "NO" }
    );
    let _ = writeln!(
        text,
        "{}: basis {}, conditions {}, equations {}, rank {}",
        cfg.truncation, r.basis_size, r.condition_count, r.equation_count, r.rank
    );
    let _ = writeln!(text, "dimension: {}", r.dimension);
    for (i, v) in r.basis.iter().enumerate() {
        let _ = writeln!(text, "  [{i}] {}", v.render(&a, &b));
    }

    let mut rep = report::head("tensor", cfg);
    if let Some(p) = partner_cfg {
        rep.insert("partner_config".into(), serde_json::to_value(p)?);
    }
    rep.insert("union_genericity".into(), report::strong_verdict(&union_verdict));
    rep.insert(
        "additivity".into(),
        json!({ "window": ADDITIVITY_WINDOW, "holds": additive, "level": scalar::render(&(a.theta() + b.theta())) }),
    );
    report::merge(&mut rep, report::solve_fields(&cfg.truncation, &r));
    rep.insert(
        "basis".into(),
        Value::Array(r.basis.iter().map(|v| report::tensor_vector(&a, &b, v)).collect()),
    );
    if timing {
        rep.insert("wall_time_ms".into(), json!(elapsed.as_millis() as u64));
    }
    Ok(Outcome { text, report: Value::Object(rep), code: exit_for(r.dimension) })
}

pub fn bracket(cfg: &RunConfig, left: &str, right: &str) -> Result<Outcome> {
    let d = config::datum(cfg)?;
    let alg = match cfg.mode {
        Mode::Affine => AffineAlgebra::new(d.clone(), cfg.cocycle),
        Mode::LoopOnly => AffineAlgebra::loop_algebra(d.clone()),
    };
    let parse = |s: &str| -> Result<AffineGenerator> {
        let g = AffineGenerator::parse(&d, s)?;
        if cfg.mode == Mode::LoopOnly && matches!(g, AffineGenerator::Central | AffineGenerator::Derivation) {
            bail!("{s} is not in the loop algebra");
        }
        Ok(g)
    };
    let (x, y) = (parse(left)?, parse(right)?);
    let z = alg.bracket(&AffineElement::generator(x), &AffineElement::generator(y));
    let rendered = z.render(&d);
    let text = format!("[{}, {}] = {}\n", x.render(&d), y.render(&d), rendered);
    let terms: Vec<(String, String)> = z.iter().map(|(g, c)| (g.render(&d), scalar::render(c))).collect();
    let mut rep = report::head("bracket", cfg);
    report::merge(
        &mut rep,
        json!({
            "left": x.render(&d),
            "right": y.render(&d),
            "bracket": rendered,
            "terms": serde_json::to_value(report::OrderedMap(terms))?,
        }),
    );
    Ok(Outcome { text, report: Value::Object(rep), code: 0 })
}
