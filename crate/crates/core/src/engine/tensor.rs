use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::solve::{nullspace_over, solve_system};
use super::{monomial, EngineError, ModuleElement, PbwMonomial, SolveReport, Truncation, WhittakerSpec};
use crate::affine::{AffineGenerator, AffineElement};
use crate::rootdata::FinBasis;
use crate::scalar::Scalar;

/// Element of `M(Λ, θ) ⊗ M(Λ', θ')` in the basis of monomial pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorElement(BTreeMap<(PbwMonomial, PbwMonomial), Scalar>);

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `v ⊗ w` for the two cyclic vectors.
    pub fn cyclic() -> Self {
        Self::pure(PbwMonomial::one(), PbwMonomial::one())
    }

    pub fn pure(a: PbwMonomial, b: PbwMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, Scalar::one());
        out
    }

    pub fn from_terms<I: IntoIterator<Item = ((PbwMonomial, PbwMonomial), Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in terms {
            out.add_term(a, b, c);
        }
        out
    }

    /// `x ⊗ y`
    pub fn product(x: &ModuleElement, y: &ModuleElement) -> Self {
        let mut out = Self::zero();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                out.add_term(a.clone(), b.clone(), c * d);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &Scalar)> {
        self.0.iter()
    }

    pub fn coeff(&self, a: &PbwMonomial, b: &PbwMonomial) -> Scalar {
        self.0.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, a: PbwMonomial, b: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let e = self.0.entry(key.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, f: &Scalar) {
        if f.is_zero() {
            return;
        }
        for ((a, b), c) in &other.0 {
            self.add_term(a.clone(), b.clone(), c * f);
        }
    }

    pub fn scale(&self, f: &Scalar) -> TensorElement {
        let mut out = Self::zero();
        out.add_scaled(self, f);
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn render(&self, a: &WhittakerSpec, b: &WhittakerSpec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, ((x, y), c)) in self.0.iter().enumerate() {
            let body = format!("({}) ⊗ ({})", a.render_monomial(x), b.render_monomial(y));
            monomial::render_coeff_term(&mut out, k == 0, c, &body);
        }
        out
    }
}

fn check_pair(a: &WhittakerSpec, b: &WhittakerSpec) -> Result<(), EngineError> {
    if a.datum().config() != b.datum().config()
        || a.mode() != b.mode()
        || a.algebra().cocycle() != b.algebra().cocycle()
    {
        return Err(EngineError::Mismatch);
    }
    Ok(())
}

fn act_pair(a: &WhittakerSpec, b: &WhittakerSpec, g: AffineGenerator, x: &PbwMonomial, y: &PbwMonomial) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in a.act_monomial(g, x).iter() {
        out.add_term(m.clone(), y.clone(), c.clone());
    }
    for (m, c) in b.act_monomial(g, y).iter() {
        out.add_term(x.clone(), m.clone(), c.clone());
    }
    out
}

/// Diagonal action `g·(x ⊗ y) = (g·x) ⊗ y + x ⊗ (g·y)`; `c` acts as `θ + θ'`.
pub fn tensor_act(
    a: &WhittakerSpec,
    b: &WhittakerSpec,
    g: AffineGenerator,
    elt: &TensorElement,
) -> Result<TensorElement, EngineError> {
    check_pair(a, b)?;
    a.check_in_algebra(g)?;
    let mut out = TensorElement::zero();
    for ((x, y), c) in elt.iter() {
        out.add_scaled(&act_pair(a, b, g, x, y), c);
    }
    Ok(out)
}

/// [`tensor_act`] for an arbitrary algebra element.
pub fn tensor_act_element(
    a: &WhittakerSpec,
    b: &WhittakerSpec,
    z: &AffineElement,
    elt: &TensorElement,
) -> Result<TensorElement, EngineError> {
    let mut out = TensorElement::zero();
    for (g, c) in z.iter() {
        out.add_scaled(&tensor_act(a, b, g, elt)?, c);
    }
    Ok(out)
}

/// Conditions on the tensor product: `Λ + Λ'` on `Φ⁰_n`, zero on `Φ¹_n`.
pub fn tensor_conditions(a: &WhittakerSpec, b: &WhittakerSpec, window: i64) -> Vec<(AffineGenerator, Scalar)> {
    let datum = a.datum();
    let mut out = Vec::new();
    for &id in datum.nilradical() {
        for j in -window..=window {
            let g = AffineGenerator::Loop { x: FinBasis::Root(id), exp: j };
            out.push((g, a.character(id, j) + b.character(id, j)));
        }
    }
    out
}

/// Whittaker vectors in the span of pairs of truncated basis monomials.
pub fn tensor_whittaker_solve(
    a: &WhittakerSpec,
    b: &WhittakerSpec,
    trunc: &Truncation,
) -> Result<SolveReport<TensorElement>, EngineError> {
    check_pair(a, b)?;
    let left = a.basis_enumeration(trunc);
    let right = b.basis_enumeration(trunc);
    let mut basis = Vec::with_capacity(left.len() * right.len());
    for x in &left {
        for y in &right {
            basis.push((x.clone(), y.clone()));
        }
    }
    let conditions = tensor_conditions(a, b, trunc.window);
    let (equation_count, red) = solve_system(basis.len(), &conditions, |g, col| {
        let (x, y) = &basis[col];
        let out = act_pair(a, b, g, x, y);
        ((x.clone(), y.clone()), out.iter().map(|(k, c)| (k.clone(), c.clone())).collect())
    });
    let vectors: Vec<TensorElement> = nullspace_over(&red, &basis).into_iter().map(TensorElement::from_terms).collect();
    Ok(SolveReport {
        basis_size: basis.len(),
        condition_count: conditions.len(),
        equation_count,
        rank: red.rank(),
        dimension: vectors.len(),
        basis: vectors,
    })
}
