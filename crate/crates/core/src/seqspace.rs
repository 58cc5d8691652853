//! Bi-infinite sequences `Q^Z`, the finitary space `V = span{v_i}`, and the
//! genericity combinatorics between them.
//!
//! Two translation conventions are in play and they are not the same:
//!
//! - on [`FinVector`]s, `translate(v, n)` moves `v_i` to `v_{i+n}`;
//! - on [`BiSequence`]s, `translate(a, n)` is the sequence `b_i = a_{i+n}`.
//!
//! [`pairing`] takes two sequences; a [`FinVector`] converts into a
//! finite-support [`BiSequence`] with the same coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::RowReducer;
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("pairing needs at least one finitely supported argument")]
    BothInfiniteSupport,
    #[error("sequence is generic; size and annihilators are only defined for non-generic sequences")]
    GenericInput,
    #[error("annihilator of width 0 only admits the zero sequence, but {0} initial values were given")]
    DegenerateAnnihilator(usize),
    #[error("annihilating vector must be nonzero")]
    ZeroAnnihilator,
    #[error("annihilating vector must start at index 0, found l(v) = {0}")]
    NotNormalized(i64),
    #[error("expected {expected} initial values, got {got}")]
    InitialLength { expected: usize, got: usize },
    #[error("geometric parameter must be a rational j > 1, got {0}")]
    BadGeometric(String),
    #[error("window check needs W >= S >= 0, got S = {shifts}, W = {window}")]
    InvalidWindow { shifts: i64, window: i64 },
    #[error("operation not supported for this sequence class")]
    Unsupported,
    #[error(transparent)]
    Scalar(#[from] scalar::ParseScalarError),
}

/// Element of `V`: a finite combination of the basis vectors `v_i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinVector(BTreeMap<i64, Scalar>);

impl FinVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `v_i`.
    pub fn basis(i: i64) -> Self {
        Self::from_pairs([(i, Scalar::one())])
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, Scalar)>>(pairs: I) -> Self {
        let mut m = BTreeMap::new();
        for (i, c) in pairs {
            *m.entry(i).or_insert_with(Scalar::zero) += c;
        }
        m.retain(|_, c: &mut Scalar| !c.is_zero());
        Self(m)
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        Self::from_pairs(pairs.iter().map(|&(i, c)| (i, scalar::int(c))))
    }

    pub fn get(&self, i: i64) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    /// `l(v)`, the lowest index with a nonzero coefficient.
    pub fn low(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    /// `r(v)`, the highest index with a nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// `ω(v) = r(v) - l(v)`; zero for the zero vector.
    pub fn width(&self) -> usize {
        match (self.low(), self.high()) {
            (Some(l), Some(r)) => (r - l) as usize,
            _ => 0,
        }
    }

    /// `v_i -> v_{i+n}`.
    pub fn translate(&self, n: i64) -> Self {
        Self(self.0.iter().map(|(i, c)| (i + n, c.clone())).collect())
    }

    pub fn scale(&self, f: &Scalar) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        Self(self.0.iter().map(|(i, c)| (*i, c * f)).collect())
    }

    /// Translate so that `l(v) = 0`.
    pub fn normalized(&self) -> Self {
        match self.low() {
            Some(l) => self.translate(-l),
            None => self.clone(),
        }
    }
}

impl fmt::Display for FinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{}*", scalar::render(&mag))?;
            }
            write!(f, "v_{i}")?;
        }
        Ok(())
    }
}

/// A sequence satisfying `sum_k v_k a_{i+k} = 0` for every `i`, stored as the
/// defining vector `v` (with `l(v) = 0`) and the window `a_0 .. a_{ω(v)-1}`.
#[derive(Clone)]
pub struct Recurrence {
    v: FinVector,
    initial: Vec<Scalar>,
    memo: Arc<Mutex<BTreeMap<i64, Scalar>>>,
}

impl Recurrence {
    pub fn new(v: FinVector, initial: Vec<Scalar>) -> Result<Self, SeqError> {
        let l = v.low().ok_or(SeqError::ZeroAnnihilator)?;
        if l != 0 {
            return Err(SeqError::NotNormalized(l));
        }
        let w = v.width();
        if w == 0 && !initial.is_empty() {
            return Err(SeqError::DegenerateAnnihilator(initial.len()));
        }
        if initial.len() != w {
            return Err(SeqError::InitialLength { expected: w, got: initial.len() });
        }
        let memo = initial.iter().cloned().enumerate().map(|(i, a)| (i as i64, a)).collect();
        Ok(Self { v, initial, memo: Arc::new(Mutex::new(memo)) })
    }

    pub fn defining_vector(&self) -> &FinVector {
        &self.v
    }

    pub fn initial(&self) -> &[Scalar] {
        &self.initial
    }

    pub fn order(&self) -> usize {
        self.v.width()
    }

    pub fn is_zero(&self) -> bool {
        self.initial.iter().all(Zero::is_zero)
    }

    pub fn entry(&self, i: i64) -> Scalar {
        let w = self.order() as i64;
        if w == 0 {
            return Scalar::zero();
        }
        let mut memo = self.memo.lock().expect("recurrence memo poisoned");
        if let Some(a) = memo.get(&i) {
            return a.clone();
        }
        let lo = *memo.keys().next().expect("memo seeded");
        let hi = *memo.keys().next_back().expect("memo seeded");
        let top = self.v.get(w);
        let bottom = self.v.get(0);
        // forward: a_{k+w} = -(sum_{t<w} v_t a_{k+t}) / v_w
        for n in (hi + 1)..=i {
            let k = n - w;
            let s: Scalar = (0..w).map(|t| self.v.get(t) * &memo[&(k + t)]).sum();
            memo.insert(n, -s / &top);
        }
        // backward: a_k = -(sum_{t>0} v_t a_{k+t}) / v_0
        let mut k = lo - 1;
        while k >= i {
            let s: Scalar = (1..=w).map(|t| self.v.get(t) * &memo[&(k + t)]).sum();
            memo.insert(k, -s / &bottom);
            k -= 1;
        }
        memo[&i].clone()
    }
}

impl PartialEq for Recurrence {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.initial == other.initial
    }
}

impl fmt::Debug for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Recurrence").field("v", &self.v).field("initial", &self.initial).finish()
    }
}

/// An element of `Q^Z` drawn from one of the closed-form classes.
///
/// `Shifted`, `Weighted` and `Scaled` are lazy wrappers for results that
/// leave the three base classes.
#[derive(Debug, Clone, PartialEq)]
pub enum BiSequence {
    Finite(FinVector),
    /// `a_i = 0` for `i <= 0`, `a_i = j^i` for `i > 0`.
    Geometric { j: Scalar },
    Recurrence(Recurrence),
    /// `b_i = inner_{i + offset}`
    Shifted { inner: Box<BiSequence>, offset: i64 },
    /// `b_i = i * inner_i`
    Weighted(Box<BiSequence>),
    /// `b_i = factor * inner_i`
    Scaled { factor: Scalar, inner: Box<BiSequence> },
}

impl BiSequence {
    pub fn zero() -> Self {
        BiSequence::Finite(FinVector::zero())
    }

    pub fn delta(k: i64) -> Self {
        BiSequence::Finite(FinVector::basis(k))
    }

    pub fn finite(v: FinVector) -> Self {
        BiSequence::Finite(v)
    }

    pub fn geometric(j: Scalar) -> Result<Self, SeqError> {
        if j <= Scalar::one() {
            return Err(SeqError::BadGeometric(scalar::render(&j)));
        }
        Ok(BiSequence::Geometric { j })
    }

    /// The constant sequence, defined by `v_0 - v_1`.
    pub fn constant(c: Scalar) -> Self {
        let v = FinVector::from_ints(&[(0, 1), (1, -1)]);
        BiSequence::Recurrence(Recurrence::new(v, vec![c]).expect("valid recurrence"))
    }

    pub fn recurrence(v: FinVector, initial: Vec<Scalar>) -> Result<Self, SeqError> {
        Recurrence::new(v, initial).map(BiSequence::Recurrence)
    }

    pub fn scaled(&self, factor: Scalar) -> Self {
        if factor.is_one() {
            return self.clone();
        }
        match self {
            BiSequence::Finite(v) => BiSequence::Finite(v.scale(&factor)),
            BiSequence::Scaled { factor: f, inner } => inner.scaled(f * factor),
            _ => BiSequence::Scaled { factor, inner: Box::new(self.clone()) },
        }
    }

    /// The coordinate `a_i`.
    pub fn entry(&self, i: i64) -> Scalar {
        match self {
            BiSequence::Finite(v) => v.get(i),
            BiSequence::Geometric { j } => {
                if i <= 0 {
                    Scalar::zero()
                } else {
                    scalar::pow(j, i as u32)
                }
            }
            BiSequence::Recurrence(r) => r.entry(i),
            BiSequence::Shifted { inner, offset } => inner.entry(i + offset),
            BiSequence::Weighted(inner) => scalar::int(i) * inner.entry(i),
            BiSequence::Scaled { factor, inner } => factor * inner.entry(i),
        }
    }

    /// Entries `a_lo ..= a_hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<Scalar> {
        (lo..=hi).map(|i| self.entry(i)).collect()
    }

    /// The translate `b_i = a_{i+n}`.
    pub fn translate(&self, n: i64) -> Self {
        if n == 0 {
            return self.clone();
        }
        match self {
            BiSequence::Finite(v) => BiSequence::Finite(v.translate(-n)),
            BiSequence::Recurrence(r) => {
                let init = (0..r.order() as i64).map(|i| r.entry(i + n)).collect();
                BiSequence::Recurrence(
                    Recurrence::new(r.v.clone(), init).expect("translate keeps recurrence valid"),
                )
            }
            BiSequence::Shifted { inner, offset } => {
                if offset + n == 0 {
                    (**inner).clone()
                } else {
                    BiSequence::Shifted { inner: inner.clone(), offset: offset + n }
                }
            }
            BiSequence::Scaled { factor, inner } => {
                BiSequence::Scaled { factor: factor.clone(), inner: Box::new(inner.translate(n)) }
            }
            BiSequence::Geometric { .. } | BiSequence::Weighted(_) => {
                BiSequence::Shifted { inner: Box::new(self.clone()), offset: n }
            }
        }
    }

    /// The sequence `(i a_i)`.
    pub fn weighted(&self) -> Self {
        match self.finite_support() {
            Some(v) => BiSequence::Finite(FinVector::from_pairs(
                v.iter().map(|(i, c)| (i, scalar::int(i) * c)),
            )),
            None => BiSequence::Weighted(Box::new(self.clone())),
        }
    }

    /// The support as a [`FinVector`] when it is known to be finite.
    pub fn finite_support(&self) -> Option<FinVector> {
        match self {
            BiSequence::Finite(v) => Some(v.clone()),
            BiSequence::Geometric { .. } => None,
            BiSequence::Recurrence(r) => r.is_zero().then(FinVector::zero),
            BiSequence::Shifted { inner, offset } => {
                inner.finite_support().map(|v| v.translate(-offset))
            }
            BiSequence::Weighted(inner) => inner.finite_support().map(|v| {
                FinVector::from_pairs(v.iter().map(|(i, c)| (i, scalar::int(i) * c)))
            }),
            BiSequence::Scaled { factor, inner } => {
                inner.finite_support().map(|v| v.scale(factor))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.finite_support(), Some(v) if v.is_zero())
    }

    pub fn to_literal(&self) -> Option<SequenceLiteral> {
        let (base, scale) = match self {
            BiSequence::Scaled { factor, inner } => (&**inner, Some(scalar::render(factor))),
            other => (other, None),
        };
        match base {
            BiSequence::Finite(v) => Some(SequenceLiteral::Finite {
                entries: v.iter().map(|(i, c)| (i, scalar::render(c))).collect(),
                scale,
            }),
            BiSequence::Geometric { j } => {
                Some(SequenceLiteral::Geometric { j: scalar::render(j), scale })
            }
            BiSequence::Recurrence(r) => Some(SequenceLiteral::Recurrence {
                v: r.v.iter().map(|(i, c)| (i, scalar::render(c))).collect(),
                initial: r.initial.iter().map(scalar::render).collect(),
                scale,
            }),
            _ => None,
        }
    }
}

impl From<FinVector> for BiSequence {
    fn from(v: FinVector) -> Self {
        BiSequence::Finite(v)
    }
}

/// JSON form of a sequence, e.g. `{"kind":"geometric","j":"2"}`.
///
/// The optional `scale` multiplies every entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SequenceLiteral {
    Finite {
        #[serde(with = "index_map")]
        entries: BTreeMap<i64, String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scale: Option<String>,
    },
    Geometric {
        j: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scale: Option<String>,
    },
    Recurrence {
        #[serde(with = "index_map")]
        v: BTreeMap<i64, String>,
        initial: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scale: Option<String>,
    },
}

// Tagged enums buffer their content, which loses serde_json's integer-key
// handling, so keys go through strings explicitly.
mod index_map {
    use std::collections::BTreeMap;

    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<i64, String>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<i64, String>, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                k.trim()
                    .parse::<i64>()
                    .map(|i| (i, v))
                    .map_err(|_| D::Error::custom(format!("index {k:?} is not an integer")))
            })
            .collect()
    }
}

fn parse_map(m: &BTreeMap<i64, String>) -> Result<FinVector, SeqError> {
    let pairs = m
        .iter()
        .map(|(i, s)| scalar::parse(s).map(|c| (*i, c)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FinVector::from_pairs(pairs))
}

impl TryFrom<&SequenceLiteral> for BiSequence {
    type Error = SeqError;

    fn try_from(lit: &SequenceLiteral) -> Result<Self, SeqError> {
        let (seq, scale) = match lit {
            SequenceLiteral::Finite { entries, scale } => {
                (BiSequence::Finite(parse_map(entries)?), scale)
            }
            SequenceLiteral::Geometric { j, scale } => {
                (BiSequence::geometric(scalar::parse(j)?)?, scale)
            }
            SequenceLiteral::Recurrence { v, initial, scale } => {
                let init = initial.iter().map(|s| scalar::parse(s)).collect::<Result<_, _>>()?;
                (BiSequence::recurrence(parse_map(v)?, init)?, scale)
            }
        };
        match scale {
            Some(s) => Ok(seq.scaled(scalar::parse(s)?)),
            None => Ok(seq),
        }
    }
}

/// `sum_i x_i y_i`; defined when at least one side is finitely supported.
pub fn pairing(x: &BiSequence, y: &BiSequence) -> Result<Scalar, SeqError> {
    let (fin, other) = match (x.finite_support(), y.finite_support()) {
        (Some(f), _) => (f, y),
        (None, Some(f)) => (f, x),
        (None, None) => return Err(SeqError::BothInfiniteSupport),
    };
    Ok(fin.iter().map(|(i, c)| c * other.entry(i)).sum())
}

/// `<a, v>` for a vector `v` of `V`.
pub fn evaluate(a: &BiSequence, v: &FinVector) -> Scalar {
    v.iter().map(|(i, c)| c * a.entry(i)).sum()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Genericity {
    Generic,
    /// Every translate of the witness is annihilated by the sequence.
    NotGeneric(FinVector),
    Unknown,
}

pub fn is_generic(s: &BiSequence) -> Genericity {
    if let Some(v) = s.finite_support() {
        return if v.is_zero() {
            Genericity::NotGeneric(FinVector::basis(0))
        } else {
            Genericity::Generic
        };
    }
    match s {
        BiSequence::Geometric { .. } => Genericity::Generic,
        BiSequence::Recurrence(r) => Genericity::NotGeneric(r.v.clone()),
        BiSequence::Shifted { inner, .. } | BiSequence::Scaled { inner, .. } => is_generic(inner),
        BiSequence::Finite(_) | BiSequence::Weighted(_) => Genericity::Unknown,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NotStronglyGenericReason {
    ZeroElement { index: usize },
    NotGeneric { index: usize },
    /// The two members have proportional translates.
    CoincidingTranslates { first: usize, second: usize },
    /// `(i a_i)` lies in the span of the translates.
    WeightedDependent { index: usize },
    /// `sum_k left_k x^{(k)} = sum_k right_k y^{(k)}` for members `x = first`
    /// and `y = second`.
    TranslateRelation {
        first: usize,
        second: usize,
        #[serde(serialize_with = "serialize_poly")]
        left: FinVector,
        #[serde(serialize_with = "serialize_poly")]
        right: FinVector,
    },
}

fn serialize_poly<S: serde::Serializer>(p: &FinVector, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(p.iter().map(|(k, c)| (k.to_string(), scalar::render(c))))
}

impl fmt::Display for NotStronglyGenericReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroElement { index } => write!(f, "member {index} is zero"),
            Self::NotGeneric { index } => write!(f, "member {index} is not generic"),
            Self::CoincidingTranslates { first, second } => {
                write!(f, "members {first} and {second} have proportional translates")
            }
            Self::WeightedDependent { index } => {
                write!(f, "weighted sequence of member {index} is a combination of its translates")
            }
            Self::TranslateRelation { first, second, left, right } => write!(
                f,
                "members {first} and {second} satisfy a translate relation ({left} against {right})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StrongGenericity {
    StronglyGeneric,
    NotStronglyGeneric(NotStronglyGenericReason),
    Unknown,
}

enum Canon {
    Finite(FinVector),
    Geometric(Scalar),
    Other,
}

fn canon(s: &BiSequence) -> Canon {
    if let Some(v) = s.finite_support() {
        return Canon::Finite(v);
    }
    match s {
        BiSequence::Geometric { j } => Canon::Geometric(j.clone()),
        BiSequence::Shifted { inner, .. } | BiSequence::Scaled { inner, .. } => canon(inner),
        _ => Canon::Other,
    }
}

/// Product of two Laurent polynomials in the translation operator, each
/// stored with the coefficient of `x^{(k)}` under key `k`.
pub fn translate_poly_mul(p: &FinVector, q: &FinVector) -> FinVector {
    let mut out: BTreeMap<i64, Scalar> = BTreeMap::new();
    for (i, a) in p.iter() {
        for (k, b) in q.iter() {
            *out.entry(i + k).or_insert_with(Scalar::zero) += a * b;
        }
    }
    FinVector::from_pairs(out)
}

/// Coordinate `i` of `sum_k p_k s^{(k)}`.
pub fn apply_translates(s: &BiSequence, p: &FinVector, i: i64) -> Scalar {
    p.iter().map(|(k, c)| c * s.entry(i + k)).sum()
}

/// A nonzero `p` together with the finitely supported sequence
/// `sum_k p_k s^{(k)}`, when one is known.
pub fn finite_image(s: &BiSequence) -> Option<(FinVector, FinVector)> {
    if let Some(v) = s.finite_support() {
        return Some((FinVector::basis(0), v));
    }
    match s {
        BiSequence::Geometric { j } => {
            let p = FinVector::from_pairs([(1, Scalar::one()), (0, -j.clone())]);
            Some((p, FinVector::from_pairs([(0, j.clone())])))
        }
        BiSequence::Recurrence(r) => Some((r.v.clone(), FinVector::zero())),
        BiSequence::Shifted { inner, offset } => {
            finite_image(inner).map(|(p, f)| (p, f.translate(-offset)))
        }
        BiSequence::Scaled { factor, inner } => {
            finite_image(inner).map(|(p, f)| (p, f.scale(factor)))
        }
        BiSequence::Weighted(inner) => match &**inner {
            BiSequence::Geometric { j } => {
                // (T - j)^2 kills (i j^i) away from the boundary
                let q = FinVector::from_pairs([(1, Scalar::one()), (0, -j.clone())]);
                let p = translate_poly_mul(&q, &q);
                let f = FinVector::from_pairs([(-1, j.clone())]);
                Some((p, f))
            }
            _ => None,
        },
        BiSequence::Finite(_) => unreachable!("finite support handled above"),
    }
}

/// `f` as `F(T) δ_0`, i.e. coefficient `f_i` on `T^{-i}`.
fn as_translates_of_delta(f: &FinVector) -> FinVector {
    FinVector::from_pairs(f.iter().map(|(i, c)| (-i, c.clone())))
}

/// Nontrivial `(left, right)` with `sum_k left_k x^{(k)} = sum_k right_k y^{(k)}`.
pub fn translate_relation(x: &BiSequence, y: &BiSequence) -> Option<(FinVector, FinVector)> {
    let (p, f) = finite_image(x)?;
    let (q, g) = finite_image(y)?;
    if f.is_zero() {
        return Some((p, FinVector::zero()));
    }
    if g.is_zero() {
        return Some((FinVector::zero(), q));
    }
    let big_f = as_translates_of_delta(&f);
    let big_g = as_translates_of_delta(&g);
    Some((translate_poly_mul(&big_g, &p), translate_poly_mul(&big_f, &q)))
}

/// Exact strong-genericity verdict for the multiset `q` where the supported
/// classes allow one; [`StrongGenericity::Unknown`] otherwise.
///
/// Every class here has a finitely supported image under some nonzero
/// combination of translates, so any two members satisfy a relation
/// `p(T) x = q(T) y`. Sets with two or more members are therefore never
/// generic; the witness is returned in the reason.
pub fn is_strongly_generic_set(q: &[BiSequence]) -> StrongGenericity {
    use NotStronglyGenericReason as R;
    use StrongGenericity::*;
    for (index, s) in q.iter().enumerate() {
        if s.is_zero() {
            return NotStronglyGeneric(R::ZeroElement { index });
        }
    }
    for (index, s) in q.iter().enumerate() {
        if let Genericity::NotGeneric(_) = is_generic(s) {
            return NotStronglyGeneric(R::NotGeneric { index });
        }
    }
    let canons: Vec<Canon> = q.iter().map(canon).collect();
    for first in 0..canons.len() {
        for second in first + 1..canons.len() {
            if let (Canon::Geometric(a), Canon::Geometric(b)) = (&canons[first], &canons[second]) {
                if a == b {
                    return NotStronglyGeneric(R::CoincidingTranslates { first, second });
                }
            }
        }
    }
    for first in 0..q.len() {
        for second in first + 1..q.len() {
            if let Some((left, right)) = translate_relation(&q[first], &q[second]) {
                return NotStronglyGeneric(R::TranslateRelation { first, second, left, right });
            }
        }
    }
    match canons.as_slice() {
        [] | [Canon::Geometric(_)] => StronglyGeneric,
        [Canon::Finite(v)] => {
            // (i a_i) is in the span of translates iff a(t) divides t a'(t),
            // which for a nonzero Laurent polynomial happens iff it is a monomial
            if v.nnz() >= 2 {
                StronglyGeneric
            } else {
                NotStronglyGeneric(R::WeightedDependent { index: 0 })
            }
        }
        _ => Unknown,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowRank {
    pub full_rank: bool,
    pub rank: usize,
    pub count: usize,
}

/// Exact rank of the translates `x^{(s)}`, `|s| <= shifts`, of every member
/// (plus `(i x_i)` when `include_weighted`), restricted to coordinates
/// `[-window, window]`.
pub fn window_rank_check(
    q: &[BiSequence],
    shifts: i64,
    window: i64,
    include_weighted: bool,
) -> Result<WindowRank, SeqError> {
    if shifts < 0 || window < shifts {
        return Err(SeqError::InvalidWindow { shifts, window });
    }
    let ncols = (2 * window + 1) as usize;
    let mut red = RowReducer::new(ncols);
    let mut push = |s: &BiSequence| {
        let row = (-window..=window)
            .enumerate()
            .map(|(c, i)| (c, s.entry(i)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        red.insert(row);
    };
    for x in q {
        for s in -shifts..=shifts {
            push(&x.translate(s));
        }
        if include_weighted {
            push(&x.weighted());
        }
    }
    let count = red.rows_seen();
    let rank = red.rank();
    Ok(WindowRank { full_rank: rank == count, rank, count })
}

/// Minimal-width vector whose translates the sequence annihilates.
///
/// For a recurrence of order `w` the minimum is found by increasing `m` until
/// the Hankel matrix of the window `a_0 .. a_{2w}` with `m + 1` columns has a
/// kernel. Any kernel vector annihilates `2w + 1 - m > w` consecutive
/// positions of a sequence that itself satisfies an order-`w` recurrence, so
/// it annihilates everything.
pub fn minimal_annihilator(s: &BiSequence) -> Result<FinVector, SeqError> {
    if let Some(v) = s.finite_support() {
        return if v.is_zero() { Ok(FinVector::basis(0)) } else { Err(SeqError::GenericInput) };
    }
    match s {
        BiSequence::Geometric { .. } => Err(SeqError::GenericInput),
        BiSequence::Shifted { inner, .. } | BiSequence::Scaled { inner, .. } => {
            minimal_annihilator(inner)
        }
        BiSequence::Recurrence(r) => {
            let w = r.order();
            let a = s.window(0, 2 * w as i64);
            for m in 0..=w {
                let mut red = RowReducer::new(m + 1);
                for i in 0..=(2 * w - m) {
                    let row = (0..=m)
                        .map(|c| (c, a[i + c].clone()))
                        .filter(|(_, v)| !v.is_zero())
                        .collect();
                    red.insert(row);
                }
                if let Some(k) = red.nullspace().into_iter().next() {
                    if m == w {
                        return Ok(r.v.clone());
                    }
                    let v = FinVector::from_pairs(k.into_iter().map(|(c, x)| (c as i64, x)));
                    let lead = v.get(0);
                    debug_assert!(!lead.is_zero(), "minimal kernel vector starts at 0");
                    return Ok(v.scale(&lead.recip()));
                }
            }
            unreachable!("the defining vector is an annihilator of width w")
        }
        BiSequence::Finite(_) | BiSequence::Weighted(_) => Err(SeqError::Unsupported),
    }
}

/// The size of a non-generic sequence: the width of its minimal annihilator.
pub fn size(s: &BiSequence) -> Result<usize, SeqError> {
    minimal_annihilator(s).map(|v| v.width())
}

/// Translates of the minimal annihilator whose support lies in `[lo, hi]`.
pub fn annihilator_basis_window(
    s: &BiSequence,
    lo: i64,
    hi: i64,
) -> Result<Vec<FinVector>, SeqError> {
    let v = minimal_annihilator(s)?;
    let m = v.width() as i64;
    Ok((lo..=hi - m).map(|i| v.translate(i)).collect())
}

/// The unique sequence annihilated by all translates of `v` (with `l(v) = 0`)
/// starting with `initial = a_0 .. a_{ω(v)-1}`.
pub fn reconstruct(v: FinVector, initial: Vec<Scalar>) -> Result<BiSequence, SeqError> {
    BiSequence::recurrence(v, initial)
}
