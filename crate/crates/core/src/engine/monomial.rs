use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::scalar::{self, Scalar};

/// A module generator (an element of the PBW basis of the complement of
/// `L(n) + Cc`) encoded so that the derived `Ord` is the generator order:
/// weight first, then `d` above all weight-0 loop generators, then the
/// exponent, then the Cartan index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModGen {
    pub(crate) weight_rank: u16,
    pub(crate) is_derivation: bool,
    pub(crate) exp: i64,
    pub(crate) cartan: u16,
}

/// Standard monomial `u_1^{k_1} u_2^{k_2} ...` with `u_1 < u_2 < ...`,
/// applied to the cyclic vector. The empty monomial is `1 ⊗ 1`.
///
/// `Ord` is the lexicographic order on the expanded factor lists where a
/// proper prefix is *greater*; the empty monomial is the maximum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PbwMonomial(pub(crate) Vec<(ModGen, u32)>);

impl PbwMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub(crate) fn from_sorted_factors(factors: &[ModGen]) -> Self {
        let mut out: Vec<(ModGen, u32)> = Vec::new();
        for &g in factors {
            match out.last_mut() {
                Some((h, k)) if *h == g => *k += 1,
                _ => out.push((g, 1)),
            }
        }
        PbwMonomial(out)
    }

    pub(crate) fn from_factors(mut factors: Vec<ModGen>) -> Self {
        factors.sort();
        Self::from_sorted_factors(&factors)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|(_, k)| *k as usize).sum()
    }

    pub fn first(&self) -> Option<ModGen> {
        self.0.first().map(|(g, _)| *g)
    }

    pub fn last(&self) -> Option<ModGen> {
        self.0.last().map(|(g, _)| *g)
    }

    /// The monomial with one copy of its first factor removed.
    pub(crate) fn without_first(&self) -> Self {
        let mut v = self.0.clone();
        if v[0].1 == 1 {
            v.remove(0);
        } else {
            v[0].1 -= 1;
        }
        PbwMonomial(v)
    }

    /// `g * self` when `g` is not greater than the first factor.
    pub(crate) fn prepend(&self, g: ModGen) -> Self {
        debug_assert!(self.first().is_none_or(|f| g <= f));
        let mut v = Vec::with_capacity(self.0.len() + 1);
        match self.0.first() {
            Some(&(f, k)) if f == g => {
                v.push((g, k + 1));
                v.extend_from_slice(&self.0[1..]);
            }
            _ => {
                v.push((g, 1));
                v.extend_from_slice(&self.0);
            }
        }
        PbwMonomial(v)
    }

    pub(crate) fn expanded(&self) -> impl Iterator<Item = ModGen> + '_ {
        self.0.iter().flat_map(|&(g, k)| std::iter::repeat_n(g, k as usize))
    }

    pub(crate) fn factors_raw(&self) -> &[(ModGen, u32)] {
        &self.0
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.expanded();
        let mut b = other.expanded();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse combination of standard monomials, iterated from the leading
/// (minimal) monomial up to `1 ⊗ 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModuleElement(pub(crate) BTreeMap<PbwMonomial, Scalar>);

impl ModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The cyclic vector `1 ⊗ 1`.
    pub fn cyclic() -> Self {
        Self::monomial(PbwMonomial::one())
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        let mut map = BTreeMap::new();
        map.insert(m, Scalar::one());
        Self(map)
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
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

    pub fn iter(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.0.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Scalar {
        self.0.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += f * other`
    pub fn add_scaled(&mut self, other: &ModuleElement, f: &Scalar) {
        if f.is_zero() {
            return;
        }
        for (m, c) in &other.0 {
            self.add_term(m.clone(), c * f);
        }
    }

    pub fn scale(&self, f: &Scalar) -> ModuleElement {
        let mut out = Self::zero();
        out.add_scaled(self, f);
        out
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    /// Largest total degree among the monomials.
    pub fn degree(&self) -> usize {
        self.0.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }
}

pub(crate) fn render_coeff_term(out: &mut String, first: bool, c: &Scalar, body: &str) {
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else {
        out.push_str(if c.is_negative() { " - " } else { " + " });
    }
    let mag = c.abs();
    if !mag.is_one() {
        out.push_str(&scalar::render(&mag));
        out.push('*');
    }
    out.push_str(body);
}
