use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{ModuleElement, WhittakerSpec};
use crate::affine::AffineGenerator;
use crate::linalg::{sparse_row, RowReducer};
use crate::scalar::Scalar;

/// Desk-scale cut of the module: total degree `<= degree`, loop exponents in
/// `[-exponent, exponent]`, conditions `X_α ⊗ t^j` for `|j| <= window`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Truncation {
    #[serde(rename = "D")]
    pub degree: u32,
    #[serde(rename = "E")]
    pub exponent: i64,
    #[serde(rename = "J")]
    pub window: i64,
}

impl Truncation {
    pub fn new(degree: u32, exponent: u32, window: u32) -> Self {
        Self { degree, exponent: exponent as i64, window: window as i64 }
    }
}

impl std::fmt::Display for Truncation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(D,E,J)=({},{},{})", self.degree, self.exponent, self.window)
    }
}

/// Result of a Whittaker-vector computation.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport<V = ModuleElement> {
    pub basis_size: usize,
    pub condition_count: usize,
    /// Number of linear equations (one per condition and output monomial).
    pub equation_count: usize,
    pub rank: usize,
    pub dimension: usize,
    pub basis: Vec<V>,
}

/// Assembles and solves `Σ x_m (g·m - λ_g m) = 0` for every condition
/// `(g, λ_g)`, with unknowns indexed by `basis`. `image(g, i)` is `g` applied
/// to basis element `i`, as a map from output keys to coefficients.
pub(crate) fn solve_system<K, F>(
    basis_len: usize,
    conditions: &[(AffineGenerator, Scalar)],
    image: F,
) -> (usize, RowReducer)
where
    K: Ord + Clone,
    F: Fn(AffineGenerator, usize) -> (K, Vec<(K, Scalar)>),
{
    let mut red = RowReducer::new(basis_len);
    let mut equations = 0;
    for (g, lambda) in conditions {
        let mut rows: BTreeMap<K, Vec<(usize, Scalar)>> = BTreeMap::new();
        for col in 0..basis_len {
            let (own, terms) = image(*g, col);
            let mut local: BTreeMap<K, Scalar> = BTreeMap::new();
            for (k, c) in terms {
                *local.entry(k).or_insert_with(Scalar::zero) += c;
            }
            *local.entry(own).or_insert_with(Scalar::zero) -= lambda;
            for (k, c) in local {
                if !c.is_zero() {
                    rows.entry(k).or_default().push((col, c));
                }
            }
        }
        for (_, row) in rows {
            equations += 1;
            red.insert(sparse_row(row));
        }
    }
    (equations, red)
}

/// Nullspace vectors as coordinate maps over `basis`.
pub(crate) fn nullspace_over<K: Clone>(red: &RowReducer, basis: &[K]) -> Vec<Vec<(K, Scalar)>> {
    red.nullspace()
        .into_iter()
        .map(|v| v.into_iter().map(|(i, c)| (basis[i].clone(), c)).collect())
        .collect()
}

impl WhittakerSpec {
    /// Whittaker vectors inside the span of [`WhittakerSpec::basis_enumeration`].
    ///
    /// Conditions are imposed in the full module, so terms leaving the span
    /// force their coefficients to vanish. The cyclic vector is always a
    /// solution, and dimension 1 certifies it is the only one up to scalars
    /// within the truncation.
    pub fn whittaker_solve(&self, trunc: &Truncation) -> SolveReport {
        let basis = self.basis_enumeration(trunc);
        let conditions = self.conditions(trunc.window);
        let (equation_count, red) = solve_system(basis.len(), &conditions, |g, col| {
            let m = &basis[col];
            let out = self.act_monomial(g, m);
            (m.clone(), out.iter().map(|(k, c)| (k.clone(), c.clone())).collect())
        });
        let basis_vectors: Vec<ModuleElement> = nullspace_over(&red, &basis)
            .into_iter()
            .map(ModuleElement::from_terms)
            .collect();
        SolveReport {
            basis_size: basis.len(),
            condition_count: conditions.len(),
            equation_count,
            rank: red.rank(),
            dimension: basis_vectors.len(),
            basis: basis_vectors,
        }
    }
}
