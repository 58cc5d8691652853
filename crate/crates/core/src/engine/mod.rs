//! The induced module `M(Λ, θ) = U_θ ⊗_{U(L(n))} C_Λ` and computations in it.
//!
//! By PBW, `M(Λ, θ)` has a basis of standard monomials in the generators
//! outside `L(n) + Cc` applied to `1 ⊗ 1`. A generator acts on a monomial by
//! straightening:
//!
//! ```text
//! g · (u_1 u_2 ... u_m · 1) = u_1 · (g · (u_2 ... u_m · 1)) + [g, u_1] · (u_2 ... u_m · 1)
//! ```
//!
//! until `g` fits in front (`g <= u_1`, `g` outside `L(n)`), or it reaches the
//! cyclic vector, where `X_α ⊗ t^j` acts by `Λ(α)_j` for `α ∈ Φ⁰_n` and by zero
//! for `α ∈ Φ¹_n`. The central element acts by `θ`.

mod monomial;
mod solve;
mod tensor;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::{AffineAlgebra, AffineElement, AffineGenerator, Cocycle};
use crate::rootdata::{FinBasis, RootDatum, RootId, Weight};
use crate::scalar::{self, Scalar};
use crate::seqspace::{self, BiSequence, Genericity, StrongGenericity};

pub use monomial::{ModGen, ModuleElement, PbwMonomial};
pub use solve::{SolveReport, Truncation};
pub use tensor::{tensor_act, tensor_act_element, tensor_conditions, tensor_whittaker_solve, TensorElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("no Λ value given for root {0} of Φ⁰_n")]
    MissingLambda(String),
    #[error("Λ given for {0}, which is not in Φ⁰_n")]
    UnexpectedLambda(String),
    #[error("leading term of the zero element is undefined")]
    ZeroElement,
    #[error("{0} is not a module generator (it lies in L(n) or is central)")]
    NotModuleGenerator(String),
    #[error("{0} is not part of the algebra in loop-only mode")]
    NotInAlgebra(String),
    #[error("tensor factors must share the root datum and mode")]
    Mismatch,
}

/// Which algebra acts: the affine algebra, or the loop algebra `L(g)`
/// without `c` and `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Affine,
    LoopOnly,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "affine" => Ok(Mode::Affine),
            "loop-only" | "loop_only" => Ok(Mode::LoopOnly),
            other => Err(format!("unknown mode {other:?} (expected affine|loop-only)")),
        }
    }
}

type ActCache = RwLock<HashMap<(AffineGenerator, PbwMonomial), ModuleElement>>;

/// Data defining `M(Λ, θ)` plus the straightening cache.
pub struct WhittakerSpec {
    algebra: AffineAlgebra,
    lambda: BTreeMap<RootId, BiSequence>,
    theta: Scalar,
    mode: Mode,
    genericity: StrongGenericity,
    warnings: Vec<String>,
    zero_rank: u16,
    cache: ActCache,
}

impl std::fmt::Debug for WhittakerSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WhittakerSpec")
            .field("datum", &self.datum().config())
            .field("lambda", &self.lambda)
            .field("theta", &self.theta)
            .field("mode", &self.mode)
            .finish()
    }
}

impl WhittakerSpec {
    /// `lambda` must be defined exactly on `Φ⁰_n`. A Λ whose image is not
    /// strongly generic (generic in loop-only mode) is accepted with a warning.
    pub fn new(
        datum: Arc<RootDatum>,
        lambda: BTreeMap<RootId, BiSequence>,
        theta: Scalar,
        mode: Mode,
        cocycle: Cocycle,
    ) -> Result<Self, EngineError> {
        for &a in datum.phi0() {
            if !lambda.contains_key(&a) {
                return Err(EngineError::MissingLambda(datum.label(a)));
            }
        }
        for &a in lambda.keys() {
            if !datum.phi0().contains(&a) {
                return Err(EngineError::UnexpectedLambda(datum.label(a)));
            }
        }
        let values: Vec<BiSequence> = lambda.values().cloned().collect();
        let genericity = seqspace::is_strongly_generic_set(&values);
        let mut warnings = Vec::new();
        match mode {
            Mode::Affine => {
                if genericity != StrongGenericity::StronglyGeneric {
                    warnings.push(format!(
                        "image of Λ is not certified strongly generic ({}); simplicity is not guaranteed",
                        describe_verdict(&genericity)
                    ));
                }
            }
            Mode::LoopOnly => {
                let all_generic = values.iter().all(|s| seqspace::is_generic(s) == Genericity::Generic);
                let set_fails = matches!(
                    &genericity,
                    StrongGenericity::NotStronglyGeneric(r)
                        if !matches!(r, seqspace::NotStronglyGenericReason::WeightedDependent { .. })
                );
                if !all_generic || set_fails {
                    warnings.push(format!(
                        "image of Λ is not certified generic ({}); simplicity is not guaranteed",
                        describe_verdict(&genericity)
                    ));
                }
            }
        }
        let algebra = match mode {
            Mode::Affine => AffineAlgebra::new(datum.clone(), cocycle),
            Mode::LoopOnly => AffineAlgebra::loop_algebra(datum.clone()),
        };
        let zero_rank = datum.weight_rank(Weight::Zero).expect("zero weight is ranked") as u16;
        Ok(Self {
            algebra,
            lambda,
            theta,
            mode,
            genericity,
            warnings,
            zero_rank,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        self.algebra.datum()
    }

    pub fn algebra(&self) -> &AffineAlgebra {
        &self.algebra
    }

    pub fn lambda(&self) -> &BTreeMap<RootId, BiSequence> {
        &self.lambda
    }

    pub fn theta(&self) -> &Scalar {
        &self.theta
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn genericity(&self) -> &StrongGenericity {
        &self.genericity
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache poisoned").len()
    }

    /// Scalar by which `X_α ⊗ t^j` (α ∈ Φ_n) acts on the cyclic vector.
    pub fn character(&self, root: RootId, j: i64) -> Scalar {
        match self.lambda.get(&root) {
            Some(s) => s.entry(j),
            None => Scalar::zero(),
        }
    }

    /// Encodes a module generator; `None` for `c`, for `L(n)`, and for `d` in
    /// loop-only mode.
    pub fn mod_gen(&self, g: AffineGenerator) -> Option<ModGen> {
        let datum = self.datum();
        match g {
            AffineGenerator::Central => None,
            AffineGenerator::Derivation => (self.mode == Mode::Affine).then_some(ModGen {
                weight_rank: self.zero_rank,
                is_derivation: true,
                exp: 0,
                cartan: 0,
            }),
            AffineGenerator::Loop { x: FinBasis::Root(id), exp } => {
                let rank = datum.weight_rank(Weight::Root(id))?;
                Some(ModGen { weight_rank: rank as u16, is_derivation: false, exp, cartan: 0 })
            }
            AffineGenerator::Loop { x: FinBasis::Cartan(i), exp } => Some(ModGen {
                weight_rank: self.zero_rank,
                is_derivation: false,
                exp,
                cartan: i,
            }),
        }
    }

    pub fn generator(&self, g: ModGen) -> AffineGenerator {
        if g.is_derivation {
            return AffineGenerator::Derivation;
        }
        match self.datum().ordered_weights()[g.weight_rank as usize] {
            Weight::Zero => AffineGenerator::Loop { x: FinBasis::Cartan(g.cartan), exp: g.exp },
            Weight::Root(id) => AffineGenerator::Loop { x: FinBasis::Root(id), exp: g.exp },
        }
    }

    /// The generator order on module generators.
    pub fn gen_order(&self, a: AffineGenerator, b: AffineGenerator) -> Result<Ordering, EngineError> {
        let ma = self.require_mod_gen(a)?;
        let mb = self.require_mod_gen(b)?;
        Ok(ma.cmp(&mb))
    }

    fn require_mod_gen(&self, g: AffineGenerator) -> Result<ModGen, EngineError> {
        self.mod_gen(g).ok_or_else(|| {
            let label = g.render(self.datum());
            if self.mode == Mode::LoopOnly && g == AffineGenerator::Derivation {
                EngineError::NotInAlgebra(label)
            } else {
                EngineError::NotModuleGenerator(label)
            }
        })
    }

    /// The standard monomial with the given factors (as a multiset).
    pub fn monomial(&self, factors: &[AffineGenerator]) -> Result<PbwMonomial, EngineError> {
        let gens = factors.iter().map(|&g| self.require_mod_gen(g)).collect::<Result<Vec<_>, _>>()?;
        Ok(PbwMonomial::from_factors(gens))
    }

    pub fn factors(&self, m: &PbwMonomial) -> Vec<(AffineGenerator, u32)> {
        m.factors_raw().iter().map(|&(g, k)| (self.generator(g), k)).collect()
    }

    pub fn render_monomial(&self, m: &PbwMonomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let datum = self.datum();
        m.factors_raw()
            .iter()
            .map(|&(g, k)| {
                let s = self.generator(g).render(datum);
                if k == 1 { s } else { format!("({s})^{k}") }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn render_element(&self, x: &ModuleElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in x.iter().enumerate() {
            monomial::render_coeff_term(&mut out, k == 0, c, &self.render_monomial(m));
        }
        out
    }

    /// Minimal monomial of a nonzero element (`1 ⊗ 1` is the maximum).
    pub fn leading_term(&self, x: &ModuleElement) -> Result<PbwMonomial, EngineError> {
        x.iter().next().map(|(m, _)| m.clone()).ok_or(EngineError::ZeroElement)
    }

    fn check_in_algebra(&self, g: AffineGenerator) -> Result<(), EngineError> {
        if self.mode == Mode::LoopOnly && matches!(g, AffineGenerator::Derivation | AffineGenerator::Central) {
            return Err(EngineError::NotInAlgebra(g.render(self.datum())));
        }
        Ok(())
    }

    /// `g · x` in standard form.
    pub fn act(&self, g: AffineGenerator, x: &ModuleElement) -> Result<ModuleElement, EngineError> {
        self.check_in_algebra(g)?;
        Ok(self.act_gen_elem(g, x))
    }

    /// `a · x` for an arbitrary algebra element `a`.
    pub fn act_element(&self, a: &AffineElement, x: &ModuleElement) -> Result<ModuleElement, EngineError> {
        let mut out = ModuleElement::zero();
        for (g, c) in a.iter() {
            self.check_in_algebra(g)?;
            out.add_scaled(&self.act_gen_elem(g, x), c);
        }
        Ok(out)
    }

    pub(crate) fn act_gen_elem(&self, g: AffineGenerator, x: &ModuleElement) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (m, c) in x.iter() {
            out.add_scaled(&self.act_monomial(g, m), c);
        }
        out
    }

    /// `g · m` for a single standard monomial (cached).
    pub fn act_monomial(&self, g: AffineGenerator, m: &PbwMonomial) -> ModuleElement {
        if g == AffineGenerator::Central {
            let mut out = ModuleElement::zero();
            out.add_term(m.clone(), self.theta.clone());
            return out;
        }
        let own = self.mod_gen(g);
        if let Some(mg) = own {
            if m.first().is_none_or(|f| mg <= f) {
                return ModuleElement::monomial(m.prepend(mg));
            }
        }
        if m.is_one() {
            // g ∈ L(n) on the cyclic vector
            return match g {
                AffineGenerator::Loop { x: FinBasis::Root(id), exp } => {
                    let mut out = ModuleElement::zero();
                    out.add_term(m.clone(), self.character(id, exp));
                    out
                }
                _ => unreachable!("only L(n) generators reach the cyclic vector"),
            };
        }
        let key = (g, m.clone());
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(&key) {
            return hit.clone();
        }

        let first = m.first().expect("nonempty monomial");
        let first_gen = self.generator(first);
        let rest = m.without_first();
        // u_1 · (g · rest)
        let inner = self.act_monomial(g, &rest);
        let mut out = self.act_gen_elem(first_gen, &inner);
        // [g, u_1] · rest
        for (t, k) in self.algebra.bracket_gen(g, first_gen) {
            out.add_scaled(&self.act_monomial(t, &rest), &scalar::int(k));
        }

        self.cache.write().expect("cache poisoned").insert(key, out.clone());
        out
    }

    /// All generators outside `L(n) + Cc` with `|exp| <= max_exp`, in
    /// increasing generator order.
    pub fn module_generators(&self, max_exp: i64) -> Vec<ModGen> {
        let datum = self.datum();
        let mut out = Vec::new();
        for (rank, w) in datum.ordered_weights().iter().enumerate() {
            for exp in -max_exp..=max_exp {
                match w {
                    Weight::Root(_) => out.push(ModGen {
                        weight_rank: rank as u16,
                        is_derivation: false,
                        exp,
                        cartan: 0,
                    }),
                    Weight::Zero => {
                        for i in 1..=datum.rank() as u16 {
                            out.push(ModGen { weight_rank: rank as u16, is_derivation: false, exp, cartan: i });
                        }
                    }
                }
            }
        }
        if self.mode == Mode::Affine {
            out.push(ModGen { weight_rank: self.zero_rank, is_derivation: true, exp: 0, cartan: 0 });
        }
        out.sort();
        out
    }

    /// Standard monomials of degree `<= trunc.degree` with factor exponents in
    /// `[-trunc.exponent, trunc.exponent]`, by degree and then monomial order.
    pub fn basis_enumeration(&self, trunc: &Truncation) -> Vec<PbwMonomial> {
        let gens = self.module_generators(trunc.exponent);
        let mut out = vec![PbwMonomial::one()];
        let mut layer: Vec<(usize, Vec<ModGen>)> = vec![(0, vec![])];
        for _ in 0..trunc.degree {
            let mut next = Vec::new();
            for (start, factors) in &layer {
                for (i, g) in gens.iter().enumerate().skip(*start) {
                    let mut f = factors.clone();
                    f.push(*g);
                    next.push((i, f));
                }
            }
            let mut monos: Vec<PbwMonomial> =
                next.iter().map(|(_, f)| PbwMonomial::from_sorted_factors(f)).collect();
            monos.sort();
            out.extend(monos);
            layer = next;
        }
        out
    }

    /// Conditions `X_α ⊗ t^j` (α ∈ Φ_n, |j| <= window) with their target
    /// eigenvalues: `Λ(α)_j` on `Φ⁰_n`, zero on `Φ¹_n`.
    pub fn conditions(&self, window: i64) -> Vec<(AffineGenerator, Scalar)> {
        let datum = self.datum();
        let mut out = Vec::new();
        for &id in datum.nilradical() {
            for j in -window..=window {
                let g = AffineGenerator::Loop { x: FinBasis::Root(id), exp: j };
                out.push((g, self.character(id, j)));
            }
        }
        out
    }
}

fn describe_verdict(v: &StrongGenericity) -> String {
    match v {
        StrongGenericity::StronglyGeneric => "strongly generic".into(),
        StrongGenericity::NotStronglyGeneric(r) => r.to_string(),
        StrongGenericity::Unknown => "verdict unknown".into(),
    }
}
