//! Type-A root data: `sl(n)` in its matrix-unit Chevalley basis, a parabolic
//! `p = l + n`, and the lower-central-series strata of the nilradical `n`.
//!
//! Root vectors are the matrix units `X_{e_p - e_q} = E_pq` and the Cartan
//! basis is `H_i = E_ii - E_{i+1,i+1}`, so all structure constants are
//! integers and come from `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("improper parabolic: levi {0:?} covers every simple root")]
    ImproperParabolic(Vec<usize>),
    #[error("sl(n) needs n >= 2 (rank >= 1)")]
    BadRank,
    #[error("levi index {index} is not a simple root index in 1..={rank}")]
    BadLevi { index: usize, rank: usize },
    #[error("only type A is supported, got {0:?}")]
    UnsupportedType(String),
    #[error("{0} lies in the nilradical and is outside the order's domain")]
    OutOfDomain(String),
    #[error("{0:?} is not a root of this algebra")]
    UnknownRoot(String),
}

/// Index into [`RootDatum::roots`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub u16);

/// Coefficients over the simple roots `α_1 .. α_{n-1}`; the all-zero vector
/// stands for the zero weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        self.add(&other.neg())
    }

    /// Parses `a1+a2`, `-a1`, `2a3-a1`, or `0`.
    pub fn parse(rank: usize, label: &str) -> Result<Root, RootError> {
        let bad = || RootError::UnknownRoot(label.to_string());
        let s: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Root::zero(rank));
        }
        let mut coeffs = vec![0; rank];
        let mut rest = s.as_str();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1..].find(['+', '-']).map_or(body.len(), |p| p + 1);
            let term = &body[..end];
            rest = &body[end..];
            let (mult, idx) = term.split_once('a').ok_or_else(bad)?;
            let mult: i32 = if mult.is_empty() { 1 } else { mult.parse().map_err(|_| bad())? };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 || idx > rank {
                return Err(bad());
            }
            coeffs[idx - 1] += sign * mult;
        }
        Ok(Root(coeffs))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// A Chevalley basis element of `sl(n)`: a root vector or `H_i` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FinBasis {
    Root(RootId),
    Cartan(u16),
}

/// Sparse linear combination of Chevalley basis elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChevalleyElement(BTreeMap<FinBasis, Scalar>);

impl ChevalleyElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: FinBasis) -> Self {
        Self::from_terms([(b, scalar::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (FinBasis, Scalar)>>(terms: I) -> Self {
        let mut m = BTreeMap::new();
        for (b, c) in terms {
            *m.entry(b).or_insert_with(Scalar::zero) += c;
        }
        m.retain(|_, c: &mut Scalar| !c.is_zero());
        Self(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (FinBasis, &Scalar)> {
        self.0.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, b: FinBasis) -> Scalar {
        self.0.get(&b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone)]
struct RootInfo {
    root: Root,
    /// matrix unit `E_pq`, 0-based
    p: usize,
    q: usize,
}

/// JSON schema `{"type":"A","rank":2,"levi":[2]}`; `rank` counts simple
/// roots, `levi` lists the simple roots kept in the Levi factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    #[serde(default)]
    pub levi: Vec<usize>,
}

impl AlgebraConfig {
    pub fn build(&self) -> Result<RootDatum, RootError> {
        if self.kind != "A" {
            return Err(RootError::UnsupportedType(self.kind.clone()));
        }
        RootDatum::build(self.rank + 1, &self.levi)
    }
}

/// Weights in the domain of [`RootDatum::root_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Zero,
    Root(RootId),
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    n: usize,
    levi: BTreeSet<usize>,
    roots: Vec<RootInfo>,
    by_root: HashMap<Root, RootId>,
    by_unit: HashMap<(usize, usize), RootId>,
    nilradical: Vec<RootId>,
    phi0: Vec<RootId>,
    phi1: Vec<RootId>,
    strata: Vec<Vec<RootId>>,
    stratum_of: HashMap<RootId, usize>,
    levi_roots: Vec<RootId>,
    /// `(Φ ∪ {0}) \ Φ_n` in increasing order
    order: Vec<Weight>,
    order_rank: HashMap<Weight, usize>,
}

impl RootDatum {
    /// `sl(n)` with the parabolic whose Levi keeps the simple roots `levi`
    /// (1-based indices).
    pub fn build(n: usize, levi: &[usize]) -> Result<Self, RootError> {
        if n < 2 {
            return Err(RootError::BadRank);
        }
        let rank = n - 1;
        for &index in levi {
            if index == 0 || index > rank {
                return Err(RootError::BadLevi { index, rank });
            }
        }
        let levi: BTreeSet<usize> = levi.iter().copied().collect();
        if levi.len() == rank {
            return Err(RootError::ImproperParabolic(levi.into_iter().collect()));
        }

        let mut infos = Vec::new();
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    infos.push(RootInfo { root: unit_root(rank, p, q), p, q });
                }
            }
        }
        infos.sort_by(|a, b| {
            let ka = (!a.root.is_positive(), a.root.height().abs(), a.root.clone());
            let kb = (!b.root.is_positive(), b.root.height().abs(), b.root.clone());
            ka.cmp(&kb)
        });
        let by_root = infos.iter().enumerate().map(|(i, r)| (r.root.clone(), RootId(i as u16))).collect();
        let by_unit = infos.iter().enumerate().map(|(i, r)| ((r.p, r.q), RootId(i as u16))).collect();

        let mut datum = RootDatum {
            n,
            levi,
            roots: infos,
            by_root,
            by_unit,
            nilradical: vec![],
            phi0: vec![],
            phi1: vec![],
            strata: vec![],
            stratum_of: HashMap::new(),
            levi_roots: vec![],
            order: vec![],
            order_rank: HashMap::new(),
        };
        datum.derive_parabolic();
        Ok(datum)
    }

    fn derive_parabolic(&mut self) {
        let ids: Vec<RootId> = (0..self.roots.len()).map(|i| RootId(i as u16)).collect();
        let outside = |r: &Root, levi: &BTreeSet<usize>| {
            r.coeffs().iter().enumerate().any(|(k, &c)| c != 0 && !levi.contains(&(k + 1)))
        };
        self.nilradical = ids
            .iter()
            .copied()
            .filter(|&id| {
                let r = self.root(id);
                r.is_positive() && outside(r, &self.levi)
            })
            .collect();
        self.levi_roots =
            ids.iter().copied().filter(|&id| !outside(self.root(id), &self.levi)).collect();

        // lower central series n_i = [n, n_{i-1}], read off the bracket
        let base: BTreeSet<RootId> = self.nilradical.iter().copied().collect();
        let mut layers: Vec<BTreeSet<RootId>> = vec![base.clone()];
        loop {
            let prev = layers.last().expect("nonempty");
            let mut next = BTreeSet::new();
            for &a in &base {
                for &b in prev {
                    for (t, _) in self.basis_bracket(FinBasis::Root(a), FinBasis::Root(b)) {
                        if let FinBasis::Root(id) = t {
                            next.insert(id);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        self.strata = (0..layers.len())
            .map(|i| {
                let below = layers.get(i + 1);
                layers[i].iter().copied().filter(|id| below.is_none_or(|b| !b.contains(id))).collect()
            })
            .collect();
        for (i, s) in self.strata.iter().enumerate() {
            for &id in s {
                self.stratum_of.insert(id, i);
            }
        }
        self.phi1 = layers.get(1).map(|l| l.iter().copied().collect()).unwrap_or_default();
        self.phi0 = self.nilradical.iter().copied().filter(|id| !self.phi1.contains(id)).collect();

        let mut order: Vec<Weight> = vec![Weight::Zero];
        for &id in &ids {
            let r = self.root(id);
            let neg_nil = self.by_root.get(&r.neg()).is_some_and(|m| self.stratum_of.contains_key(m));
            if neg_nil || self.levi_roots.contains(&id) {
                order.push(Weight::Root(id));
            }
        }
        order.sort_by_key(|w| self.weight_key(*w));
        self.order_rank = order.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        self.order = order;
    }

    fn weight_key(&self, w: Weight) -> (i32, i32, Root) {
        match w {
            Weight::Zero => (1, 0, Root::zero(self.rank())),
            Weight::Root(id) => {
                let r = self.root(id).clone();
                let group = match self.by_root.get(&r.neg()).and_then(|m| self.stratum_of.get(m)) {
                    Some(&i) => -(i as i32),
                    None => 1,
                };
                (group, r.height(), r)
            }
        }
    }

    /// `n` of `sl(n)`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn levi(&self) -> Vec<usize> {
        self.levi.iter().copied().collect()
    }

    pub fn config(&self) -> AlgebraConfig {
        AlgebraConfig { kind: "A".into(), rank: self.rank(), levi: self.levi() }
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(|i| RootId(i as u16))
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.0 as usize].root
    }

    pub fn root_id(&self, r: &Root) -> Option<RootId> {
        self.by_root.get(r).copied()
    }

    pub fn parse_root(&self, label: &str) -> Result<RootId, RootError> {
        let r = Root::parse(self.rank(), label)?;
        self.root_id(&r).ok_or_else(|| RootError::UnknownRoot(label.to_string()))
    }

    pub fn negative(&self, id: RootId) -> RootId {
        let info = &self.roots[id.0 as usize];
        self.by_unit[&(info.q, info.p)]
    }

    pub fn matrix_unit(&self, id: RootId) -> (usize, usize) {
        let info = &self.roots[id.0 as usize];
        (info.p, info.q)
    }

    pub fn label(&self, id: RootId) -> String {
        self.root(id).to_string()
    }

    /// `Φ_n`
    pub fn nilradical(&self) -> &[RootId] {
        &self.nilradical
    }

    /// `Φ⁰_n`: nilradical roots outside `[n, n]`.
    pub fn phi0(&self) -> &[RootId] {
        &self.phi0
    }

    /// `Φ¹_n`: roots of `[n, n]`.
    pub fn phi1(&self) -> &[RootId] {
        &self.phi1
    }

    /// `X_0, X_1, ..., X_k`
    pub fn strata(&self) -> &[Vec<RootId>] {
        &self.strata
    }

    pub fn stratum(&self, id: RootId) -> Option<usize> {
        self.stratum_of.get(&id).copied()
    }

    /// Roots of the Levi factor (both signs).
    pub fn levi_roots(&self) -> &[RootId] {
        &self.levi_roots
    }

    pub fn in_nilradical(&self, id: RootId) -> bool {
        self.stratum_of.contains_key(&id)
    }

    /// `(Φ ∪ {0}) \ Φ_n` listed in increasing [`Self::root_order`].
    pub fn ordered_weights(&self) -> &[Weight] {
        &self.order
    }

    /// Position of a weight in [`Self::ordered_weights`].
    pub fn weight_rank(&self, w: Weight) -> Option<usize> {
        self.order_rank.get(&w).copied()
    }

    pub fn weight_label(&self, w: Weight) -> String {
        match w {
            Weight::Zero => "0".into(),
            Weight::Root(id) => self.label(id),
        }
    }

    /// Linear order on `(Φ ∪ {0}) \ Φ_n`: `-X_k < ... < -X_0 < {Levi roots, 0}`;
    /// inside a group by height, then lexicographically on coefficients.
    pub fn root_order(&self, a: &Root, b: &Root) -> Result<Ordering, RootError> {
        let ra = self.weight_rank(self.domain_weight(a)?).expect("domain weight ranked");
        let rb = self.weight_rank(self.domain_weight(b)?).expect("domain weight ranked");
        Ok(ra.cmp(&rb))
    }

    fn domain_weight(&self, r: &Root) -> Result<Weight, RootError> {
        if r.is_zero() {
            return Ok(Weight::Zero);
        }
        let id = self.root_id(r).ok_or_else(|| RootError::UnknownRoot(r.to_string()))?;
        if self.in_nilradical(id) {
            return Err(RootError::OutOfDomain(r.to_string()));
        }
        Ok(Weight::Root(id))
    }

    /// Bracket of two basis elements with integer coefficients.
    pub fn basis_bracket(&self, a: FinBasis, b: FinBasis) -> Vec<(FinBasis, i64)> {
        match (a, b) {
            (FinBasis::Cartan(_), FinBasis::Cartan(_)) => vec![],
            (FinBasis::Cartan(i), FinBasis::Root(r)) => {
                let k = self.cartan_eval(i, r);
                if k == 0 { vec![] } else { vec![(FinBasis::Root(r), k)] }
            }
            (FinBasis::Root(r), FinBasis::Cartan(i)) => {
                let k = self.cartan_eval(i, r);
                if k == 0 { vec![] } else { vec![(FinBasis::Root(r), -k)] }
            }
            (FinBasis::Root(x), FinBasis::Root(y)) => {
                let (p, q) = self.matrix_unit(x);
                let (r, s) = self.matrix_unit(y);
                if q == r && p == s {
                    self.diagonal_to_cartan(p, q)
                } else if q == r {
                    vec![(FinBasis::Root(self.by_unit[&(p, s)]), 1)]
                } else if s == p {
                    vec![(FinBasis::Root(self.by_unit[&(r, q)]), -1)]
                } else {
                    vec![]
                }
            }
        }
    }

    /// `α(H_i)` for the root of `E_pq`.
    fn cartan_eval(&self, i: u16, r: RootId) -> i64 {
        let (p, q) = self.matrix_unit(r);
        let k = i as usize - 1;
        let d = |a: usize, b: usize| i64::from(a == b);
        (d(k, p) - d(k, q)) - (d(k + 1, p) - d(k + 1, q))
    }

    /// `E_pp - E_qq` in the basis `H_i`.
    fn diagonal_to_cartan(&self, p: usize, q: usize) -> Vec<(FinBasis, i64)> {
        let (lo, hi, sign) = if p < q { (p, q, 1) } else { (q, p, -1) };
        (lo..hi).map(|k| (FinBasis::Cartan(k as u16 + 1), sign)).collect()
    }

    /// `tr(ab)` in the defining representation.
    pub fn basis_trace(&self, a: FinBasis, b: FinBasis) -> i64 {
        match (a, b) {
            (FinBasis::Cartan(i), FinBasis::Cartan(j)) => match (i as i64 - j as i64).abs() {
                0 => 2,
                1 => -1,
                _ => 0,
            },
            (FinBasis::Root(x), FinBasis::Root(y)) => {
                let (p, q) = self.matrix_unit(x);
                let (r, s) = self.matrix_unit(y);
                i64::from(q == r && p == s)
            }
            _ => 0,
        }
    }

    /// Killing form on basis elements, `2n tr(ab)`.
    pub fn basis_killing(&self, a: FinBasis, b: FinBasis) -> i64 {
        2 * self.n as i64 * self.basis_trace(a, b)
    }

    pub fn bracket_fin(&self, x: &ChevalleyElement, y: &ChevalleyElement) -> ChevalleyElement {
        let mut terms = Vec::new();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let cab = ca * cb;
                for (t, k) in self.basis_bracket(a, b) {
                    terms.push((t, &cab * scalar::int(k)));
                }
            }
        }
        ChevalleyElement::from_terms(terms)
    }

    pub fn killing(&self, x: &ChevalleyElement, y: &ChevalleyElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let k = self.basis_killing(a, b);
                if k != 0 {
                    acc += ca * cb * scalar::int(k);
                }
            }
        }
        acc
    }

    /// Dense `n x n` matrix of an element in the defining representation.
    pub fn to_matrix(&self, x: &ChevalleyElement) -> Vec<Vec<Scalar>> {
        let mut m = vec![vec![Scalar::zero(); self.n]; self.n];
        for (b, c) in x.iter() {
            match b {
                FinBasis::Root(id) => {
                    let (p, q) = self.matrix_unit(id);
                    m[p][q] += c;
                }
                FinBasis::Cartan(i) => {
                    let k = i as usize - 1;
                    m[k][k] += c;
                    m[k + 1][k + 1] -= c;
                }
            }
        }
        m
    }

    /// All basis elements: roots in id order, then `H_1 .. H_{n-1}`.
    pub fn basis(&self) -> Vec<FinBasis> {
        self.root_ids()
            .map(FinBasis::Root)
            .chain((1..=self.rank() as u16).map(FinBasis::Cartan))
            .collect()
    }

    pub fn basis_label(&self, b: FinBasis) -> String {
        match b {
            FinBasis::Root(id) => format!("X[{}]", self.label(id)),
            FinBasis::Cartan(i) => format!("H[{i}]"),
        }
    }
}

/// Root of `E_pq` (0-based) in simple-root coordinates.
fn unit_root(rank: usize, p: usize, q: usize) -> Root {
    let mut c = vec![0; rank];
    if p < q {
        c[p..q].iter_mut().for_each(|x| *x = 1);
    } else {
        c[q..p].iter_mut().for_each(|x| *x = -1);
    }
    Root(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn labels(d: &RootDatum, ids: &[RootId]) -> Vec<String> {
        let mut v: Vec<String> = ids.iter().map(|&i| d.label(i)).collect();
        v.sort();
        v
    }

    #[test]
    fn sl2_borel() {
        let d = RootDatum::build(2, &[]).unwrap();
        assert_eq!(labels(&d, d.phi0()), ["a1"]);
        assert!(d.phi1().is_empty());
        assert_eq!(d.strata().len(), 1);
    }

    #[test]
    fn sl3_borel_strata() {
        let d = RootDatum::build(3, &[]).unwrap();
        assert_eq!(labels(&d, d.phi0()), ["a1", "a2"]);
        assert_eq!(labels(&d, d.phi1()), ["a1+a2"]);
        assert_eq!(labels(&d, &d.strata()[0]), ["a1", "a2"]);
        assert_eq!(labels(&d, &d.strata()[1]), ["a1+a2"]);
    }

    #[test]
    fn sl3_abelian_nilradical() {
        let d = RootDatum::build(3, &[2]).unwrap();
        assert_eq!(labels(&d, d.phi0()), ["a1", "a1+a2"]);
        assert!(d.phi1().is_empty());
        assert_eq!(labels(&d, d.levi_roots()), ["-a2", "a2"]);
    }

    #[test]
    fn rejects_improper_parabolic() {
        assert!(matches!(RootDatum::build(3, &[1, 2]), Err(RootError::ImproperParabolic(_))));
        assert!(matches!(RootDatum::build(2, &[1]), Err(RootError::ImproperParabolic(_))));
        assert!(matches!(RootDatum::build(3, &[3]), Err(RootError::BadLevi { .. })));
        assert!(matches!(RootDatum::build(1, &[]), Err(RootError::BadRank)));
    }

    #[test]
    fn sl2_brackets_and_killing() {
        let d = RootDatum::build(2, &[]).unwrap();
        let e = ChevalleyElement::basis(FinBasis::Root(d.parse_root("a1").unwrap()));
        let f = ChevalleyElement::basis(FinBasis::Root(d.parse_root("-a1").unwrap()));
        let h = ChevalleyElement::basis(FinBasis::Cartan(1));
        assert_eq!(d.bracket_fin(&e, &f), h);
        assert_eq!(d.bracket_fin(&h, &e), ChevalleyElement::from_terms([(FinBasis::Root(d.parse_root("a1").unwrap()), int(2))]));
        assert!(d.bracket_fin(&e, &e).is_zero());
        assert_eq!(d.killing(&e, &f), int(4));
        assert_eq!(d.killing(&h, &h), int(8));
        assert_eq!(d.killing(&e, &e), int(0));
    }

    #[test]
    fn root_order_examples() {
        let d = RootDatum::build(3, &[]).unwrap();
        let r = |s: &str| Root::parse(2, s).unwrap();
        assert_eq!(d.root_order(&r("-a1-a2"), &r("-a1")), Ok(Ordering::Less));
        assert_eq!(d.root_order(&r("-a1"), &r("0")), Ok(Ordering::Less));
        assert_eq!(d.root_order(&r("-a2"), &r("-a2")), Ok(Ordering::Equal));
        assert!(matches!(d.root_order(&r("a1"), &r("0")), Err(RootError::OutOfDomain(_))));

        let d = RootDatum::build(3, &[2]).unwrap();
        assert_eq!(d.root_order(&r("-a2"), &r("0")), Ok(Ordering::Less));
        assert_eq!(d.root_order(&r("0"), &r("a2")), Ok(Ordering::Less));
    }

    #[test]
    fn root_labels_parse() {
        assert_eq!(Root::parse(3, "a1+a2").unwrap(), Root::new(vec![1, 1, 0]));
        assert_eq!(Root::parse(3, "-a1-a2-a3").unwrap(), Root::new(vec![-1, -1, -1]));
        assert_eq!(Root::parse(2, "2a1-a2").unwrap(), Root::new(vec![2, -1]));
        assert_eq!(Root::new(vec![-1, -1]).to_string(), "-a1-a2");
        assert!(Root::parse(2, "a3").is_err());
        assert!(Root::parse(2, "").is_err());
        assert!(Root::parse(2, "b1").is_err());
    }

    #[test]
    fn config_schema() {
        let c: AlgebraConfig = serde_json::from_str(r#"{"type":"A","rank":2,"levi":[2]}"#).unwrap();
        let d = c.build().unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.config(), c);
        let bad: AlgebraConfig = serde_json::from_str(r#"{"type":"B","rank":2}"#).unwrap();
        assert!(matches!(bad.build(), Err(RootError::UnsupportedType(_))));
    }
}
