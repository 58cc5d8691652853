//! The untwisted affine algebra `ĝ = L(g) + Cc + Cd` over `g = sl(n)`.
//!
//! ```text
//! [x t^i, y t^j] = [x, y] t^{i+j} + i δ_{i+j,0} κ(x, y) c
//! [d, x t^i]     = i x t^i
//! ```
//!
//! [`Cocycle::Literal`] drops the factor `i` in the central term. That variant
//! does not satisfy Jacobi and is only kept for experiments.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootdata::{FinBasis, RootDatum, RootError};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cocycle {
    /// `i δ_{i+j,0} κ(x, y) c`
    #[default]
    Standard,
    /// `δ_{i+j,0} κ(x, y) c`
    Literal,
}

impl std::str::FromStr for Cocycle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "standard" => Ok(Cocycle::Standard),
            "literal" => Ok(Cocycle::Literal),
            other => Err(format!("unknown cocycle {other:?} (expected standard|literal)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseGeneratorError {
    #[error("cannot parse generator literal {0:?}")]
    Syntax(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("Cartan index {0} out of range")]
    Cartan(u16),
}

/// `x ⊗ t^exp` for a single Chevalley basis element `x`, or `c`, or `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineGenerator {
    Loop { x: FinBasis, exp: i64 },
    Central,
    Derivation,
}

impl AffineGenerator {
    pub fn loop_gen(x: FinBasis, exp: i64) -> Self {
        AffineGenerator::Loop { x, exp }
    }

    /// True iff this is `X_α ⊗ t^j` with `α ∈ Φ_n`.
    pub fn is_in_ln(&self, datum: &RootDatum) -> bool {
        matches!(self, AffineGenerator::Loop { x: FinBasis::Root(id), .. } if datum.in_nilradical(*id))
    }

    pub fn render(&self, datum: &RootDatum) -> String {
        match self {
            AffineGenerator::Loop { x, exp } => format!("{}@t^{exp}", datum.basis_label(*x)),
            AffineGenerator::Central => "c".into(),
            AffineGenerator::Derivation => "d".into(),
        }
    }

    /// Parses `X[a1+a2]@t^-3`, `H[1]@t^2`, `c`, `d`; a missing `@t^j` means `j = 0`.
    pub fn parse(datum: &RootDatum, s: &str) -> Result<Self, ParseGeneratorError> {
        let bad = || ParseGeneratorError::Syntax(s.to_string());
        let s = s.trim();
        match s {
            "c" => return Ok(AffineGenerator::Central),
            "d" => return Ok(AffineGenerator::Derivation),
            _ => {}
        }
        let (head, exp) = match s.split_once('@') {
            Some((h, e)) => {
                let e = e.trim().strip_prefix("t^").ok_or_else(bad)?;
                (h.trim(), e.trim().parse::<i64>().map_err(|_| bad())?)
            }
            None => (s, 0),
        };
        let inner = head
            .get(2..head.len().saturating_sub(1))
            .filter(|_| head.len() > 3 && head.ends_with(']') && head.as_bytes()[1] == b'[')
            .ok_or_else(bad)?;
        let x = match head.as_bytes()[0] {
            b'X' => FinBasis::Root(datum.parse_root(inner)?),
            b'H' => {
                let i: u16 = inner.parse().map_err(|_| bad())?;
                if i == 0 || i as usize > datum.rank() {
                    return Err(ParseGeneratorError::Cartan(i));
                }
                FinBasis::Cartan(i)
            }
            _ => return Err(bad()),
        };
        Ok(AffineGenerator::Loop { x, exp })
    }
}

/// Sparse combination of affine generators.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AffineElement(BTreeMap<AffineGenerator, Scalar>);

impl AffineElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: AffineGenerator) -> Self {
        Self::from_terms([(g, Scalar::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (AffineGenerator, Scalar)>>(terms: I) -> Self {
        let mut m = BTreeMap::new();
        for (g, c) in terms {
            *m.entry(g).or_insert_with(Scalar::zero) += c;
        }
        m.retain(|_, c: &mut Scalar| !c.is_zero());
        Self(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (AffineGenerator, &Scalar)> {
        self.0.iter().map(|(g, c)| (*g, c))
    }

    pub fn coeff(&self, g: AffineGenerator) -> Scalar {
        self.0.get(&g).cloned().unwrap_or_else(Scalar::zero)
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

    pub fn add(&self, other: &AffineElement) -> AffineElement {
        Self::from_terms(self.iter().chain(other.iter()).map(|(g, c)| (g, c.clone())))
    }

    pub fn scale(&self, f: &Scalar) -> AffineElement {
        Self::from_terms(self.iter().map(|(g, c)| (g, c * f)))
    }

    pub fn render(&self, datum: &RootDatum) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (g, c)) in self.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&scalar::render(&mag));
                out.push('*');
            }
            out.push_str(&g.render(datum));
        }
        out
    }
}

/// `ĝ` (or the loop algebra `L(g)` when the central extension is switched
/// off) over a fixed root datum.
#[derive(Debug, Clone)]
pub struct AffineAlgebra {
    datum: Arc<RootDatum>,
    cocycle: Cocycle,
    central: bool,
    /// invariant form is `form_scale * tr(xy)`
    form_scale: i64,
}

impl AffineAlgebra {
    pub fn new(datum: Arc<RootDatum>, cocycle: Cocycle) -> Self {
        let form_scale = 2 * datum.n() as i64;
        Self { datum, cocycle, central: true, form_scale }
    }

    /// The loop algebra: no central term.
    pub fn loop_algebra(datum: Arc<RootDatum>) -> Self {
        Self { central: false, ..Self::new(datum, Cocycle::Standard) }
    }

    /// Replaces the Killing normalisation `2n tr(xy)` by `scale * tr(xy)`.
    pub fn with_form_scale(mut self, scale: i64) -> Self {
        self.form_scale = scale;
        self
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn cocycle(&self) -> Cocycle {
        self.cocycle
    }

    pub fn has_central_extension(&self) -> bool {
        self.central
    }

    /// Bracket of two generators; structure constants are integers.
    pub fn bracket_gen(&self, a: AffineGenerator, b: AffineGenerator) -> Vec<(AffineGenerator, i64)> {
        use AffineGenerator::*;
        match (a, b) {
            (Central, _) | (_, Central) | (Derivation, Derivation) => vec![],
            (Derivation, Loop { x, exp }) => {
                if exp == 0 { vec![] } else { vec![(Loop { x, exp }, exp)] }
            }
            (Loop { x, exp }, Derivation) => {
                if exp == 0 { vec![] } else { vec![(Loop { x, exp }, -exp)] }
            }
            (Loop { x: x1, exp: i }, Loop { x: x2, exp: j }) => {
                let mut out: Vec<(AffineGenerator, i64)> = self
                    .datum
                    .basis_bracket(x1, x2)
                    .into_iter()
                    .map(|(t, k)| (Loop { x: t, exp: i + j }, k))
                    .collect();
                if self.central && i + j == 0 {
                    let factor = match self.cocycle {
                        Cocycle::Standard => i,
                        Cocycle::Literal => 1,
                    };
                    let k = factor * self.form_scale * self.datum.basis_trace(x1, x2);
                    if k != 0 {
                        out.push((Central, k));
                    }
                }
                out
            }
        }
    }

    pub fn bracket(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let mut terms = Vec::new();
        for (g, cg) in a.iter() {
            for (h, ch) in b.iter() {
                let c = cg * ch;
                for (t, k) in self.bracket_gen(g, h) {
                    terms.push((t, &c * scalar::int(k)));
                }
            }
        }
        AffineElement::from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sl2() -> AffineAlgebra {
        AffineAlgebra::new(Arc::new(RootDatum::build(2, &[]).unwrap()), Cocycle::Standard)
    }

    fn gen(alg: &AffineAlgebra, s: &str) -> AffineElement {
        AffineElement::generator(AffineGenerator::parse(alg.datum(), s).unwrap())
    }

    #[test]
    fn derivation_scales_by_degree() {
        let alg = sl2();
        let r = alg.bracket(&gen(&alg, "d"), &gen(&alg, "X[a1]@t^3"));
        assert_eq!(r, gen(&alg, "X[a1]@t^3").scale(&int(3)));
    }

    #[test]
    fn central_term_with_standard_factor() {
        let alg = sl2();
        let r = alg.bracket(&gen(&alg, "X[a1]@t^2"), &gen(&alg, "X[-a1]@t^-2"));
        let expected = gen(&alg, "H[1]@t^0").add(&gen(&alg, "c").scale(&int(8)));
        assert_eq!(r, expected);
        assert_eq!(r.render(alg.datum()), "H[1]@t^0 + 8*c");
    }

    #[test]
    fn literal_cocycle_drops_factor() {
        let alg = AffineAlgebra::new(alg_datum(), Cocycle::Literal);
        let r = alg.bracket(&gen(&alg, "X[a1]@t^2"), &gen(&alg, "X[-a1]@t^-2"));
        assert_eq!(r.coeff(AffineGenerator::Central), int(4));
    }

    fn alg_datum() -> Arc<RootDatum> {
        Arc::new(RootDatum::build(2, &[]).unwrap())
    }

    #[test]
    fn central_element_is_central() {
        let alg = sl2();
        assert!(alg.bracket(&gen(&alg, "c"), &gen(&alg, "d")).is_zero());
        assert!(alg.bracket(&gen(&alg, "c"), &gen(&alg, "H[1]@t^4")).is_zero());
    }

    #[test]
    fn loop_algebra_has_no_central_term() {
        let alg = AffineAlgebra::loop_algebra(alg_datum());
        let r = alg.bracket(&gen(&alg, "X[a1]@t^2"), &gen(&alg, "X[-a1]@t^-2"));
        assert_eq!(r, gen(&alg, "H[1]@t^0"));
    }

    #[test]
    fn membership_in_loop_nilradical() {
        let alg = sl2();
        let d = alg.datum();
        assert!(AffineGenerator::parse(d, "X[a1]@t^-7").unwrap().is_in_ln(d));
        assert!(!AffineGenerator::parse(d, "X[-a1]@t^0").unwrap().is_in_ln(d));
        assert!(!AffineGenerator::parse(d, "H[1]@t^0").unwrap().is_in_ln(d));
        assert!(!AffineGenerator::Derivation.is_in_ln(d));
        assert!(!AffineGenerator::Central.is_in_ln(d));
    }

    #[test]
    fn generator_literals() {
        let d = alg_datum();
        for s in ["X[a1]@t^-3", "H[1]@t^2", "c", "d", "X[-a1]@t^0"] {
            assert_eq!(AffineGenerator::parse(&d, s).unwrap().render(&d), s);
        }
        assert_eq!(AffineGenerator::parse(&d, "H[1]").unwrap().render(&d), "H[1]@t^0");
        for s in ["X[a2]@t^1", "H[2]@t^0", "Y[a1]", "X[a1]@s^2", "X[a1]@t^x", ""] {
            assert!(AffineGenerator::parse(&d, s).is_err(), "{s}");
        }
    }
}
