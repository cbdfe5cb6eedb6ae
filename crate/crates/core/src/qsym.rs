//! Quasi-symmetric functions in the fundamental basis `Q_{S,d}` and the
//! monomial basis `Q̃_{S,d}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{binomial, IntPartition};
use crate::scalar::Scalar;
use crate::symfunc::{Basis, SymPoly};

/// Degrees above this cannot be stored in the subset bitmask.
pub const MAX_QSYM_DEGREE: usize = 32;

/// A pair `(d, S)` with `S ⊆ [d-1]`, indexing `Q_{S,d}` and `Q̃_{S,d}`.
/// `S` is a bitmask: bit `i-1` is set iff `i ∈ S`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentClass {
    d: usize,
    set: u32,
}

impl DescentClass {
    pub fn new(d: usize, elements: &[usize]) -> Result<Self> {
        let mut set = 0u32;
        for &i in elements {
            if i == 0 || i >= d.max(1) {
                return Err(Error::Invalid { what: "descent set", reason: format!("{i} is not in [1, {}]", d.saturating_sub(1)) });
            }
            set |= 1 << (i - 1);
        }
        Self::from_mask(d, set)
    }

    pub fn from_mask(d: usize, set: u32) -> Result<Self> {
        if d > MAX_QSYM_DEGREE {
            return Err(Error::CapExceeded { what: "quasi-symmetric degree", size: d, cap: MAX_QSYM_DEGREE });
        }
        if set & !Self::full_mask(d) != 0 {
            return Err(Error::Invalid { what: "descent set", reason: format!("mask {set:#b} exceeds [{}]", d.saturating_sub(1)) });
        }
        Ok(DescentClass { d, set })
    }

    fn full_mask(d: usize) -> u32 {
        if d <= 1 {
            0
        } else {
            (((1u64) << (d - 1)) - 1) as u32
        }
    }

    pub fn empty(d: usize) -> Self {
        DescentClass { d, set: 0 }
    }

    /// `S = [d-1]`.
    pub fn full(d: usize) -> Self {
        DescentClass { d, set: Self::full_mask(d) }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn mask(&self) -> u32 {
        self.set
    }

    pub fn len(&self) -> usize {
        self.set.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.set == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.d && self.set >> (i - 1) & 1 == 1
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..self.d).filter(|&i| self.contains(i)).collect()
    }

    /// Lengths of the subwords of `12…d` broken after each element of `S`.
    pub fn composition(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut run = 0;
        for i in 1..=self.d {
            run += 1;
            if i == self.d || self.contains(i) {
                out.push(run);
                run = 0;
            }
        }
        out
    }

    /// `type(S)`: the composition sorted decreasingly.
    pub fn type_of(&self) -> IntPartition {
        IntPartition::from_unsorted(self.composition())
    }

    /// Every `T ⊇ S` within `[d-1]`.
    pub fn supersets(&self) -> impl Iterator<Item = DescentClass> {
        let free = Self::full_mask(self.d) & !self.set;
        let (d, set) = (self.d, self.set);
        // standard submask walk over the free bits
        let mut sub = Some(free);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == 0 { None } else { Some((cur - 1) & free) };
            Some(DescentClass { d, set: set | cur })
        })
    }

    /// Every `S ⊆ [d-1]`.
    pub fn all(d: usize) -> impl Iterator<Item = DescentClass> {
        (0..=Self::full_mask(d)).map(move |set| DescentClass { d, set })
    }
}

impl fmt::Display for DescentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.elements().iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for DescentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {{{self}}})", self.d)
    }
}

pub fn type_of_subset(c: &DescentClass) -> IntPartition {
    c.type_of()
}

/// All `S ⊆ [d-1]` with `type(S) = λ`, one per distinct ordering of the
/// parts of `λ`.
pub fn subsets_of_type(lambda: &IntPartition) -> Vec<DescentClass> {
    fn rec(counts: &mut Vec<(u32, usize)>, left: usize, pos: usize, set: u32, d: usize, out: &mut Vec<DescentClass>) {
        if left == 0 {
            out.push(DescentClass { d, set });
            return;
        }
        for k in 0..counts.len() {
            if counts[k].1 == 0 {
                continue;
            }
            counts[k].1 -= 1;
            let next = pos + counts[k].0 as usize;
            let set = if left > 1 { set | 1 << (next - 1) } else { set };
            rec(counts, left - 1, next, set, d, out);
            counts[k].1 += 1;
        }
    }
    let mut out = Vec::new();
    let mut counts = lambda.multiplicities();
    rec(&mut counts, lambda.len(), 0, 0, lambda.size(), &mut out);
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QBasis {
    /// Gessel's `Q_{S,d}`
    Fundamental,
    /// `Q̃_{S,d}`
    Monomial,
}

impl fmt::Display for QBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QBasis::Fundamental => "fundamental",
            QBasis::Monomial => "monomial",
        })
    }
}

/// A finite linear combination of `Q_{S,d}` or `Q̃_{S,d}`; mixed degrees are
/// allowed. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct QSymPoly<C> {
    basis: QBasis,
    terms: BTreeMap<DescentClass, C>,
}

impl<C: Scalar> QSymPoly<C> {
    pub fn zero(basis: QBasis) -> Self {
        QSymPoly { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: QBasis, c: DescentClass) -> Self {
        Self::from_terms(basis, [(c, C::one())])
    }

    pub fn from_terms(basis: QBasis, terms: impl IntoIterator<Item = (DescentClass, C)>) -> Self {
        let mut f = Self::zero(basis);
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    /// Builds a polynomial from integer multiplicities, e.g. sequencing
    /// counts.
    pub fn from_counts<'a>(basis: QBasis, counts: impl IntoIterator<Item = (&'a DescentClass, &'a u64)>) -> Self {
        Self::from_terms(basis, counts.into_iter().map(|(k, &n)| (*k, C::from_bigint(&BigInt::from(n)))))
    }

    pub fn basis(&self) -> QBasis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DescentClass, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, c: &DescentClass) -> C {
        self.terms.get(c).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, k: DescentClass, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(k, x)| (*k, x.clone() * c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.to_basis(self.basis).terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn to_basis(&self, basis: QBasis) -> Self {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (QBasis::Fundamental, QBasis::Monomial) => monomial_qsym_expand(self),
            _ => fundamental_from_monomial(self),
        }
    }

    /// Equality as quasi-symmetric functions, tested in the monomial basis.
    pub fn same_function(&self, other: &Self) -> bool {
        self.to_basis(QBasis::Monomial) == other.to_basis(QBasis::Monomial)
    }

    /// `f(1^n)` via `Q_{S,d}(1^n) = C(n+d-|S|-1, d)`.
    pub fn specialize_ones(&self, n: usize) -> C {
        let f = self.to_basis(QBasis::Fundamental);
        f.terms.iter().fold(C::zero(), |acc, (k, c)| acc + c.clone() * C::from_bigint(&BigInt::from(fundamental_at_ones(k, n))))
    }
}

/// `Q_{S,d}(1^n)`.
pub fn fundamental_at_ones(c: &DescentClass, n: usize) -> BigUint {
    if c.degree() == 0 {
        return BigUint::one();
    }
    binomial(n + c.degree() - c.len() - 1, c.degree())
}

pub fn specialize_ones<C: Scalar>(f: &QSymPoly<C>, n: usize) -> C {
    f.specialize_ones(n)
}

/// `Q_{S,d} = Σ_{T ⊇ S} Q̃_{T,d}`. A monomial-basis input is returned as is.
pub fn monomial_qsym_expand<C: Scalar>(f: &QSymPoly<C>) -> QSymPoly<C> {
    if f.basis == QBasis::Monomial {
        return f.clone();
    }
    let mut out = QSymPoly::zero(QBasis::Monomial);
    for (k, c) in &f.terms {
        for t in k.supersets() {
            out.add_term(t, c.clone());
        }
    }
    out
}

/// `Q̃_{S,d} = Σ_{T ⊇ S} (-1)^{|T|-|S|} Q_{T,d}`.
pub fn fundamental_from_monomial<C: Scalar>(f: &QSymPoly<C>) -> QSymPoly<C> {
    if f.basis == QBasis::Fundamental {
        return f.clone();
    }
    let mut out = QSymPoly::zero(QBasis::Fundamental);
    for (k, c) in &f.terms {
        for t in k.supersets() {
            let c = if (t.len() - k.len()) % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(t, c);
        }
    }
    out
}

/// Expansion of a symmetric function in the fundamental basis, using
/// `m_λ = Σ_{type(S)=λ} Q̃_{S,d}`.
pub fn sym_to_fundamental<C: Scalar>(f: &SymPoly<C>) -> Result<QSymPoly<C>> {
    Ok(fundamental_from_monomial(&sym_to_monomial_qsym(f)?))
}

pub fn sym_to_monomial_qsym<C: Scalar>(f: &SymPoly<C>) -> Result<QSymPoly<C>> {
    let m = f.convert(Basis::M)?;
    let mut out = QSymPoly::zero(QBasis::Monomial);
    for (lambda, c) in m.terms() {
        for s in subsets_of_type(lambda) {
            out.add_term(s, c.clone());
        }
    }
    Ok(out)
}

/// Monomial coefficients of `Q_{S,d}` in `x_1..x_cap`, keyed by exponent
/// vector of length `cap`, from the defining sum over index words
/// `i_1 ≤ … ≤ i_d` with `i_j < i_{j+1}` for `j ∈ S`.
pub fn fundamental_q_monomial_coefficients(c: &DescentClass, cap: usize) -> BTreeMap<Vec<u32>, BigUint> {
    fn rec(c: &DescentClass, cap: usize, j: usize, prev: usize, exps: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, BigUint>) {
        if j > c.degree() {
            *out.entry(exps.clone()).or_default() += 1u32;
            return;
        }
        let lo = if j == 1 { 0 } else if c.contains(j - 1) { prev + 1 } else { prev };
        for i in lo..cap {
            exps[i] += 1;
            rec(c, cap, j + 1, i, exps, out);
            exps[i] -= 1;
        }
    }
    let mut out = BTreeMap::new();
    rec(c, cap, 1, 0, &mut vec![0; cap], &mut out);
    out
}
