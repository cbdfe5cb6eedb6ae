//! The ring of symmetric functions over a [`Scalar`], in the bases
//! `m`, `m̃`, `p`, `e`, `h`, `s` and `ξ`.
//!
//! Every basis change goes through the monomial basis. Transition matrices are
//! exact and cached; see [`transition`].

pub mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{binomial, c_coefficient, enumerate_partitions, factorial, IntPartition};
use crate::scalar::Scalar;

pub use transition::{kostka_matrix, MAX_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    /// augmented monomial, `m̃_λ = r_λ! m_λ`
    #[serde(rename = "mt")]
    MTilde,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "s")]
    S,
    #[serde(rename = "xi")]
    Xi,
}

impl Basis {
    pub const ALL: [Basis; 7] = [Basis::M, Basis::MTilde, Basis::P, Basis::E, Basis::H, Basis::S, Basis::Xi];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::MTilde => "mt",
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
            Basis::S => "s",
            Basis::Xi => "xi",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis {s:?}")))
    }
}

/// A finite linear combination of basis elements indexed by integer
/// partitions. Zero coefficients are never stored, so `==` is equality of
/// symmetric functions whenever both sides use the same basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly<C> {
    basis: Basis,
    terms: BTreeMap<IntPartition, C>,
}

impl<C: Scalar> SymPoly<C> {
    pub fn zero(basis: Basis) -> Self {
        SymPoly { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, lambda: IntPartition) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, C::one());
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (IntPartition, C)>) -> Self {
        let mut f = Self::zero(basis);
        for (l, c) in terms {
            f.add_term(l, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntPartition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &IntPartition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c · b_λ`, dropping the term if it cancels.
    pub fn add_term(&mut self, lambda: IntPartition, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), x.clone() * c.clone())))
    }

    /// `self + other`, with `other` first converted into `self`'s basis.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let other = other.convert(self.basis)?;
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-C::one()))
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(IntPartition::size).collect();
        ds.dedup();
        ds
    }

    /// Re-expresses `self` in `target`.
    pub fn convert(&self, target: Basis) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let mut out = Self::zero(target);
        for d in self.degrees() {
            let parts = enumerate_partitions(d);
            let index: BTreeMap<&IntPartition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let to_m = transition::to_m_matrix(self.basis, d)?;
            let mut coords = vec![C::zero(); parts.len()];
            for (l, c) in self.terms.range(parts[0].clone()..=parts[parts.len() - 1].clone()) {
                let row = &to_m[index[l]];
                for (j, q) in row.iter().enumerate() {
                    if !q.is_zero() {
                        coords[j] = coords[j].clone() + c.clone() * C::from_rational(q);
                    }
                }
            }
            if target == Basis::M {
                for (p, c) in parts.iter().zip(coords) {
                    out.add_term(p.clone(), c);
                }
                continue;
            }
            let from_m = transition::from_m_matrix(target, d)?;
            let mut result = vec![C::zero(); parts.len()];
            for (i, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, q) in from_m[i].iter().enumerate() {
                    if !q.is_zero() {
                        result[j] = result[j].clone() + c.clone() * C::from_rational(q);
                    }
                }
            }
            for (p, c) in parts.iter().zip(result) {
                out.add_term(p.clone(), c);
            }
        }
        Ok(out)
    }

    /// The involution ω, computed as `p_λ ↦ sgn(λ) p_λ`; the result is in
    /// `self`'s basis.
    pub fn omega(&self) -> Result<Self> {
        let p = self.convert(Basis::P)?;
        let flipped = Self::from_terms(
            Basis::P,
            p.terms.into_iter().map(|(l, c)| {
                let c = if l.sign() < 0 { -c } else { c };
                (l, c)
            }),
        );
        flipped.convert(self.basis)
    }

    /// `f(1^n)`: `n` variables set to one and the rest to zero.
    pub fn principal_specialization(&self, n: usize) -> Result<C> {
        let m = self.convert(Basis::M)?;
        Ok(m.terms.iter().fold(C::zero(), |acc, (l, c)| {
            acc + c.clone() * C::from_rational(&monomial_at_ones(l, n))
        }))
    }
}

/// `m_λ(1^n) = C(n, ℓ) · ℓ! / r_λ!`.
pub fn monomial_at_ones(lambda: &IntPartition, n: usize) -> BigRational {
    let num = binomial(n, lambda.len()) * factorial(lambda.len());
    BigRational::new(BigInt::from(num), BigInt::from(lambda.r_factorial()))
}

pub fn principal_specialization<C: Scalar>(f: &SymPoly<C>, n: usize) -> Result<C> {
    f.principal_specialization(n)
}

pub fn convert<C: Scalar>(f: &SymPoly<C>, target: Basis) -> Result<SymPoly<C>> {
    f.convert(target)
}

pub fn omega<C: Scalar>(f: &SymPoly<C>) -> Result<SymPoly<C>> {
    f.omega()
}

/// The digraph `D_λ`: a disjoint union of directed paths, the `i`-th having
/// `λ_i` vertices. Vertices are numbered consecutively along each path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDigraph {
    parts: IntPartition,
    edges: Vec<(usize, usize)>,
}

impl PathDigraph {
    pub fn new(parts: &IntPartition) -> Self {
        let mut edges = Vec::new();
        let mut start = 0;
        for &p in parts.parts() {
            let p = p as usize;
            edges.extend((start..start + p - 1).map(|v| (v, v + 1)));
            start += p;
        }
        PathDigraph { parts: parts.clone(), edges }
    }

    pub fn parts(&self) -> &IntPartition {
        &self.parts
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `π(F)`: path sizes of the spanning subgraph keeping the edges whose
    /// bit is set in `subset`.
    pub fn path_type(&self, subset: u64) -> IntPartition {
        let n = self.parts.size();
        let mut linked = vec![false; n];
        for (i, &(u, _)) in self.edges.iter().enumerate() {
            if subset >> i & 1 == 1 {
                linked[u] = true;
            }
        }
        let mut sizes = Vec::new();
        let mut run = 0u32;
        for v in 0..n {
            run += 1;
            if !linked[v] {
                sizes.push(run);
                run = 0;
            }
        }
        IntPartition::from_unsorted(sizes)
    }

    /// Iterator over `π(F)` for all `2^|E|` edge subsets `F`.
    pub fn subset_types(&self) -> impl Iterator<Item = IntPartition> + '_ {
        assert!(self.edges.len() < 64);
        (0..1u64 << self.edges.len()).map(move |f| self.path_type(f))
    }
}

/// `ξ_λ` in the `m` basis straight from the edge-subset sum.
pub(crate) fn xi_expansion_in_m(lambda: &IntPartition) -> BTreeMap<IntPartition, BigRational> {
    let mut out: BTreeMap<IntPartition, BigRational> = BTreeMap::new();
    for ty in PathDigraph::new(lambda).subset_types() {
        // m̃_π / ℓ(π)! = r_π! / ℓ(π)! · m_π
        let c = BigRational::new(BigInt::from(ty.r_factorial()), BigInt::from(factorial(ty.len())));
        *out.entry(ty).or_insert_with(BigRational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `ξ_λ = Σ_{F ⊆ E(D_λ)} m̃_{π(F)} / ℓ(π(F))!`, in the `m` basis.
pub fn xi_basis_element<C: Scalar>(lambda: &IntPartition) -> SymPoly<C> {
    SymPoly::from_terms(Basis::M, xi_expansion_in_m(lambda).iter().map(|(l, c)| (l.clone(), C::from_rational(c))))
}

/// `ξ_μ = Σ_λ r_μ! c_{λ,μ} / ℓ(λ)! · m_λ`.
pub fn xi_to_m_closed_form<C: Scalar>(mu: &IntPartition) -> SymPoly<C> {
    let r_mu = BigInt::from(mu.r_factorial());
    SymPoly::from_terms(
        Basis::M,
        enumerate_partitions(mu.size()).into_iter().map(|lambda| {
            let c = c_coefficient(&lambda, mu).expect("sizes agree");
            let q = BigRational::new(&r_mu * BigInt::from(c), BigInt::from(factorial(lambda.len())));
            (lambda, C::from_rational(&q))
        }),
    )
}

/// Matrix `(sgn λ · c_{λ,μ})` over the partitions of `d`.
pub fn omega_c_matrix(d: usize) -> Vec<Vec<BigInt>> {
    let parts = enumerate_partitions(d);
    parts
        .iter()
        .map(|l| parts.iter().map(|m| BigInt::from(l.sign()) * BigInt::from(c_coefficient(l, m).unwrap())).collect())
        .collect()
}

/// Matrix of ω in the `m̃` basis: entry `[λ][μ]` is the coefficient of
/// `m̃_μ` in `ω(m̃_λ)`.
pub fn omega_matrix_mtilde(d: usize) -> Result<Vec<Vec<BigRational>>> {
    let parts = enumerate_partitions(d);
    parts
        .iter()
        .map(|l| {
            let img = SymPoly::<BigRational>::basis_element(Basis::MTilde, l.clone()).omega()?;
            Ok(parts.iter().map(|m| img.coefficient(m)).collect())
        })
        .collect()
}
