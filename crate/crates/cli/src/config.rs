use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use affwhit::engine::{Mode, Truncation, WhittakerSpec};
use affwhit::rootdata::{AlgebraConfig, RootDatum};
use affwhit::scalar;
use affwhit::seqspace::{BiSequence, SequenceLiteral};
use affwhit::Cocycle;
use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

/// Everything a run needs. Unknown fields are rejected so typos surface.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub algebra: AlgebraConfig,
    /// Root label (`"a1"`, `"a1+a2"`) to sequence literal.
    #[serde(default)]
    pub lambda: BTreeMap<String, SequenceLiteral>,
    #[serde(default = "default_theta")]
    pub theta: String,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default)]
    pub cocycle: Cocycle,
    #[serde(default = "default_truncation")]
    pub truncation: Truncation,
    /// Extra sequences for `check-seq`; the Λ values are used when empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sequences: Vec<SequenceLiteral>,
    /// Second factor for `tensor`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<Partner>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Partner {
    pub lambda: BTreeMap<String, SequenceLiteral>,
    #[serde(default = "default_theta")]
    pub theta: String,
}

fn default_theta() -> String {
    "0".into()
}

fn default_truncation() -> Truncation {
    Truncation::new(2, 2, 3)
}

pub const PRESETS: &[&str] = &[
    "sl2",
    "sl3-borel",
    "sl3-abelian",
    "sl2-loop",
    "sl2-tensor",
    "sl2-tensor-neg",
    "geometric-family",
];

fn geometric(j: &str) -> SequenceLiteral {
    SequenceLiteral::Geometric { j: j.into(), scale: None }
}

fn type_a(rank: usize, levi: &[usize]) -> AlgebraConfig {
    AlgebraConfig { kind: "A".into(), rank, levi: levi.to_vec() }
}

fn lambda(pairs: &[(&str, SequenceLiteral)]) -> BTreeMap<String, SequenceLiteral> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub fn preset(name: &str) -> Result<RunConfig> {
    let base = |algebra, lam, theta: &str, trunc| RunConfig {
        algebra,
        lambda: lam,
        theta: theta.into(),
        mode: Mode::Affine,
        cocycle: Cocycle::Standard,
        truncation: trunc,
        sequences: vec![],
        partner: None,
    };
    let sl2 = || base(type_a(1, &[]), lambda(&[("a1", geometric("2"))]), "1", Truncation::new(2, 2, 3));
    Ok(match name {
        "sl2" => sl2(),
        "sl3-borel" => base(
            type_a(2, &[]),
            lambda(&[("a1", geometric("2")), ("a2", geometric("3"))]),
            "1",
            Truncation::new(2, 1, 2),
        ),
        "sl3-abelian" => base(
            type_a(2, &[2]),
            lambda(&[("a1", geometric("2")), ("a1+a2", geometric("3"))]),
            "1",
            Truncation::new(2, 1, 2),
        ),
        "sl2-loop" => RunConfig {
            mode: Mode::LoopOnly,
            ..base(
                type_a(1, &[]),
                lambda(&[(
                    "a1",
                    SequenceLiteral::Finite { entries: [(1, "1".to_string())].into(), scale: None },
                )]),
                "0",
                Truncation::new(2, 2, 3),
            )
        },
        "sl2-tensor" => RunConfig {
            truncation: Truncation::new(1, 1, 2),
            partner: Some(Partner { lambda: lambda(&[("a1", geometric("3"))]), theta: "2".into() }),
            ..sl2()
        },
        "sl2-tensor-neg" => RunConfig {
            truncation: Truncation::new(1, 1, 2),
            partner: Some(Partner {
                lambda: lambda(&[(
                    "a1",
                    SequenceLiteral::Geometric { j: "2".into(), scale: Some("-1".into()) },
                )]),
                theta: "-1".into(),
            }),
            ..sl2()
        },
        "geometric-family" => RunConfig {
            sequences: vec![geometric("2"), geometric("3"), geometric("5/2")],
            ..sl2()
        },
        other => bail!("unknown preset {other:?} (known: {})", PRESETS.join(", ")),
    })
}

pub fn load(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Config from `--config` or `--preset`; exactly one may be given, and a
/// missing source falls back to `fallback` when provided.
pub fn select(config: Option<&Path>, preset_name: Option<&str>, fallback: Option<&str>) -> Result<RunConfig> {
    match (config, preset_name) {
        (Some(_), Some(_)) => bail!("--config and --preset are mutually exclusive"),
        (Some(p), None) => load(p),
        (None, Some(n)) => preset(n),
        (None, None) => match fallback {
            Some(n) => preset(n),
            None => bail!("one of --config or --preset is required"),
        },
    }
}

pub fn datum(cfg: &RunConfig) -> Result<Arc<RootDatum>> {
    Ok(Arc::new(cfg.algebra.build()?))
}

pub fn parse_sequence(lit: &SequenceLiteral) -> Result<BiSequence> {
    BiSequence::try_from(lit).map_err(|e| anyhow!("bad sequence literal {}: {e}", serde_json::to_string(lit).unwrap_or_default()))
}

pub fn spec(
    datum: &Arc<RootDatum>,
    lam: &BTreeMap<String, SequenceLiteral>,
    theta: &str,
    mode: Mode,
    cocycle: Cocycle,
) -> Result<WhittakerSpec> {
    let mut resolved = BTreeMap::new();
    for (label, lit) in lam {
        let id = datum.parse_root(label).with_context(|| format!("Λ key {label:?}"))?;
        if resolved.insert(id, parse_sequence(lit)?).is_some() {
            bail!("Λ assigns root {label:?} twice");
        }
    }
    let theta = scalar::parse(theta).map_err(|e| anyhow!("θ: {e}"))?;
    Ok(WhittakerSpec::new(datum.clone(), resolved, theta, mode, cocycle)?)
}

pub fn primary_spec(cfg: &RunConfig, datum: &Arc<RootDatum>) -> Result<WhittakerSpec> {
    spec(datum, &cfg.lambda, &cfg.theta, cfg.mode, cfg.cocycle)
}

pub fn validate_truncation(t: &Truncation) -> Result<()> {
    if t.exponent < 0 || t.window < 0 {
        bail!("truncation bounds must be non-negative, got {t}");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_round_trip_through_json() {
        for name in PRESETS {
            let cfg = preset(name).unwrap();
            let text = serde_json::to_string_pretty(&cfg).unwrap();
            let back: RunConfig = serde_json::from_str(&text).unwrap();
            assert_eq!(back, cfg, "{name}");
        }
    }

    #[test]
    fn presets_resolve() {
        for name in PRESETS {
            let cfg = preset(name).unwrap();
            let d = datum(&cfg).unwrap();
            primary_spec(&cfg, &d).unwrap();
        }
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"algebra":{"type":"A","rank":1},"lamda":{}}"#;
        assert!(serde_json::from_str::<RunConfig>(text).is_err());
    }

    #[test]
    fn minimal_config_uses_defaults() {
        let text = r#"{"algebra":{"type":"A","rank":1},"lambda":{"a1":{"kind":"geometric","j":"2"}}}"#;
        let cfg: RunConfig = serde_json::from_str(text).unwrap();
        assert_eq!(cfg.theta, "0");
        assert_eq!(cfg.mode, Mode::Affine);
        assert_eq!(cfg.truncation, Truncation::new(2, 2, 3));
    }
}
