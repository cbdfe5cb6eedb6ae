//! Integer partitions, set partitions and the Doubilet coarsening statistics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `n choose k`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is by size first and then reverse lexicographic, so that
/// `(3) < (2,1) < (1,1,1)`. This is the order used for every enumeration and
/// matrix index in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct IntPartition {
    parts: Vec<u32>,
}

impl IntPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid { what: "partition", reason: "parts must be positive".into() });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid { what: "partition", reason: "parts must be weakly decreasing".into() });
        }
        Ok(IntPartition { parts })
    }

    /// Sorts `parts` decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition { parts }
    }

    pub fn empty() -> Self {
        IntPartition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part size, as `(part, count)` pairs in decreasing
    /// part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `r_λ! = r_1! r_2! ⋯` where `r_i` counts the parts equal to `i`.
    pub fn r_factorial(&self) -> BigUint {
        self.multiplicities().into_iter().map(|(_, c)| factorial(c)).product()
    }

    /// `(-1)^(|λ| - ℓ(λ))`, the sign of a permutation of cycle type `λ`.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn conjugate(&self) -> IntPartition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32).collect();
        IntPartition { parts }
    }

    /// Dominance order `self ⊵ other` on partitions of equal size.
    pub fn dominates(&self, other: &IntPartition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

pub fn r_factorial(lambda: &IntPartition) -> BigUint {
    lambda.r_factorial()
}

pub fn sign(lambda: &IntPartition) -> i32 {
    lambda.sign()
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for IntPartition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        IntPartition::new(parts)
    }
}

impl From<IntPartition> for Vec<u32> {
    fn from(p: IntPartition) -> Self {
        p.parts
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for IntPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("partition part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        IntPartition::new(parts)
    }
}

/// All partitions of `d` in reverse lexicographic order. `d = 0` yields the
/// empty partition.
pub fn enumerate_partitions(d: usize) -> Vec<IntPartition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
        if rest == 0 {
            out.push(IntPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d as u32, d as u32, &mut Vec::new(), &mut out);
    out
}

/// Visits set partitions of `0..n` in restricted-growth-string lexicographic
/// order. Blocks are passed as bitmasks. `can_join(block, x)` decides whether
/// element `x` may be added to an existing `block`; returning `true` always
/// gives every set partition.
pub(crate) fn visit_set_partitions<J, V>(n: usize, can_join: &J, visit: &mut V)
where
    J: Fn(u32, usize) -> bool,
    V: FnMut(&[u32]),
{
    fn rec<J, V>(x: usize, n: usize, blocks: &mut Vec<u32>, can_join: &J, visit: &mut V)
    where
        J: Fn(u32, usize) -> bool,
        V: FnMut(&[u32]),
    {
        if x == n {
            visit(blocks);
            return;
        }
        for b in 0..blocks.len() {
            if can_join(blocks[b], x) {
                blocks[b] |= 1 << x;
                rec(x + 1, n, blocks, can_join, visit);
                blocks[b] &= !(1 << x);
            }
        }
        blocks.push(1 << x);
        rec(x + 1, n, blocks, can_join, visit);
        blocks.pop();
    }
    assert!(n <= 32, "set partitions are limited to 32 elements");
    rec(0, n, &mut Vec::with_capacity(n), can_join, visit);
}

/// A partition of a finite set of `usize` elements into nonempty blocks.
///
/// Stored canonically: each block sorted ascending, blocks ordered by their
/// smallest element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Invalid { what: "set partition", reason: "empty block".into() });
            }
            b.sort_unstable();
        }
        blocks.sort();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid { what: "set partition", reason: "blocks overlap".into() });
        }
        Ok(SetPartition { blocks })
    }

    pub(crate) fn from_masks(masks: &[u32], ground: &[usize]) -> Self {
        let blocks = masks
            .iter()
            .map(|&m| (0..ground.len()).filter(|&i| m >> i & 1 == 1).map(|i| ground[i]).collect())
            .collect();
        // masks from `visit_set_partitions` are already ordered by minimum
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn ground(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    /// `type(π)`: block sizes sorted decreasingly.
    pub fn block_type(&self) -> IntPartition {
        IntPartition::from_unsorted(self.blocks.iter().map(|b| b.len() as u32).collect())
    }

    /// True iff every block of `self` lies inside some block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> Result<bool> {
        if self.ground() != coarser.ground() {
            return Err(Error::GroundSetMismatch);
        }
        Ok(self.blocks.iter().all(|b| coarser.blocks.iter().any(|c| b.iter().all(|x| c.contains(x)))))
    }
}

pub fn refines(pi: &SetPartition, sigma: &SetPartition) -> Result<bool> {
    pi.refines(sigma)
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|b| {
                b.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("set element {t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }
}

/// Every set partition of `ground`, in restricted-growth-string
/// lexicographic order (positions taken from the sorted ground set).
pub fn enumerate_set_partitions(ground: &[usize]) -> Vec<SetPartition> {
    let mut ground = ground.to_vec();
    ground.sort_unstable();
    ground.dedup();
    let mut out = Vec::new();
    visit_set_partitions(ground.len(), &|_, _| true, &mut |masks| out.push(SetPartition::from_masks(masks, &ground)));
    out
}

/// Doubilet's `λ(π,σ)! = Π_i (i!)^{k_i}`, where `k_i` counts the blocks of
/// `σ` made of exactly `i` blocks of `π`.
pub fn lambda_factorial(pi: &SetPartition, sigma: &SetPartition) -> Result<BigUint> {
    if !pi.refines(sigma)? {
        return Err(Error::NotARefinement);
    }
    Ok(sigma
        .blocks
        .iter()
        .map(|c| factorial(pi.blocks.iter().filter(|b| c.contains(&b[0])).count()))
        .product())
}

/// Set partition of `0..|μ|` of type `μ`, with blocks filled left to right
/// in decreasing part order: `(3,1)` gives `{0,1,2}|{3}`.
pub fn canonical_set_partition(mu: &IntPartition) -> SetPartition {
    let mut next = 0;
    let blocks = mu
        .parts()
        .iter()
        .map(|&p| {
            let b: Vec<usize> = (next..next + p as usize).collect();
            next += p as usize;
            b
        })
        .collect();
    SetPartition { blocks }
}

/// `Σ_{σ ≥ π, type(σ) = ν} λ(π,σ)!` for the given representative `π`.
pub fn c_coefficient_from(pi: &SetPartition, nu: &IntPartition) -> Result<BigUint> {
    let size = pi.ground().len();
    if size != nu.size() {
        return Err(Error::SizeMismatch(size, nu.size()));
    }
    let sizes: Vec<u32> = pi.blocks.iter().map(|b| b.len() as u32).collect();
    let mut total = BigUint::default();
    // coarsenings of π are set partitions of its blocks
    visit_set_partitions(sizes.len(), &|_, _| true, &mut |groups| {
        let ty = IntPartition::from_unsorted(
            groups.iter().map(|&g| (0..sizes.len()).filter(|&i| g >> i & 1 == 1).map(|i| sizes[i]).sum()).collect(),
        );
        if &ty == nu {
            total += groups.iter().map(|g| factorial(g.count_ones() as usize)).product::<BigUint>();
        }
    });
    Ok(total)
}

/// `c_{μ,ν}`, computed from the canonical set partition of type `μ`.
pub fn c_coefficient(mu: &IntPartition, nu: &IntPartition) -> Result<BigUint> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(mu.size(), nu.size()));
    }
    c_coefficient_from(&canonical_set_partition(mu), nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPartition {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    /// Euler's pentagonal recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for m in 1..=n {
            let mut acc = 0i64;
            for k in 1.. {
                let k = k as i64;
                let sgn = if k % 2 == 1 { 1 } else { -1 };
                let g1 = (k * (3 * k - 1) / 2) as usize;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                acc += sgn * table[m - g1];
                if g2 <= m {
                    acc += sgn * table[m - g2];
                }
            }
            table[m] = acc;
        }
        table[n] as u64
    }

    fn bell_triangle(n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 1..n {
            let mut next = vec![*row.last().unwrap()];
            for x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(1), vec![p("1")]);
        assert_eq!(enumerate_partitions(3), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(enumerate_partitions(0), vec![IntPartition::empty()]);
        assert_eq!(partition_count(7), 15);
        assert_eq!(enumerate_partitions(7).len(), 15);
        for d in 1..=10 {
            let ps = enumerate_partitions(d);
            assert_eq!(ps.len() as u64, partition_count(d));
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn r_factorial_and_sign() {
        assert_eq!(p("2,1").r_factorial(), BigUint::from(1u32));
        assert_eq!(p("1,1,1").r_factorial(), BigUint::from(6u32));
        assert_eq!(p("2,2,1,1,1").r_factorial(), BigUint::from(12u32));
        assert_eq!(p("1,1,1").sign(), 1);
        assert_eq!(p("2").sign(), -1);
        // 3-cycle (+1) times transposition (-1)
        assert_eq!(p("3,2").sign(), -1);
        for d in 1..=7 {
            for l in enumerate_partitions(d) {
                assert_eq!(l.sign() * l.sign(), 1);
                let composed: i32 = l.parts().iter().map(|&c| if c % 2 == 1 { 1 } else { -1 }).product();
                assert_eq!(l.sign(), composed);
            }
            assert_eq!(IntPartition::from_unsorted(vec![1; d]).sign(), 1);
        }
    }

    #[test]
    fn parse_rejects_bad_partitions() {
        assert!("1,2".parse::<IntPartition>().is_err());
        assert!("2,0".parse::<IntPartition>().is_err());
        assert!("x".parse::<IntPartition>().is_err());
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
    }

    #[test]
    fn set_partition_counts() {
        assert_eq!(enumerate_set_partitions(&[1]).len(), 1);
        assert_eq!(enumerate_set_partitions(&[1, 2, 3]).len(), 5);
        assert_eq!(bell_triangle(6), 203);
        assert_eq!(enumerate_set_partitions(&[1, 2, 3, 4, 5, 6]).len(), 203);
        let all = enumerate_set_partitions(&[0, 1, 2, 3]);
        let mut sorted = all.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        assert_eq!(all[0], sp("0 1 2 3"));
        assert_eq!(all.last().unwrap(), &sp("0|1|2|3"));
    }

    #[test]
    fn set_partitions_by_type() {
        for d in 1..=7 {
            let ground: Vec<usize> = (0..d).collect();
            let all = enumerate_set_partitions(&ground);
            for l in enumerate_partitions(d) {
                let count = all.iter().filter(|s| s.block_type() == l).count();
                let denom: BigUint =
                    l.parts().iter().map(|&x| factorial(x as usize)).product::<BigUint>() * l.r_factorial();
                assert_eq!(BigUint::from(count), factorial(d) / denom, "{l:?}");
            }
        }
    }

    #[test]
    fn refinement() {
        assert!(sp("1 2|3").refines(&sp("1 2|3")).unwrap());
        assert!(sp("1|2").refines(&sp("1 2")).unwrap());
        assert!(!sp("1 2|3").refines(&sp("1 3|2")).unwrap());
        assert_eq!(sp("1|2").refines(&sp("1 3")), Err(Error::GroundSetMismatch));
    }

    #[test]
    fn lambda_factorials() {
        let pi = sp("1 2|3|4");
        assert_eq!(lambda_factorial(&pi, &pi).unwrap(), BigUint::from(1u32));
        assert_eq!(lambda_factorial(&sp("1|2"), &sp("1 2")).unwrap(), BigUint::from(2u32));
        assert_eq!(lambda_factorial(&sp("1|2|3|4"), &sp("1 2 3|4")).unwrap(), BigUint::from(6u32));
        assert_eq!(lambda_factorial(&sp("1 2"), &sp("1|2")), Err(Error::NotARefinement));
        // multiplicative over σ-blocks
        assert_eq!(lambda_factorial(&sp("1|2|3|4|5"), &sp("1 2|3 4 5")).unwrap(), BigUint::from(12u32));
    }

    #[test]
    fn c_coefficients() {
        assert_eq!(c_coefficient(&p("2,1"), &p("2,1")).unwrap(), BigUint::from(1u32));
        assert_eq!(c_coefficient(&p("1,1"), &p("2")).unwrap(), BigUint::from(2u32));
        assert_eq!(c_coefficient(&p("1,1,1"), &p("2,1")).unwrap(), BigUint::from(6u32));
        assert_eq!(c_coefficient(&p("2"), &p("1,1")).unwrap(), BigUint::default());
        assert_eq!(c_coefficient(&p("2"), &p("1,1,1")), Err(Error::SizeMismatch(2, 3)));
    }

    #[test]
    fn c_coefficient_is_representative_independent() {
        for d in 1..=6 {
            let ground: Vec<usize> = (0..d).collect();
            let all = enumerate_set_partitions(&ground);
            for mu in enumerate_partitions(d) {
                for nu in enumerate_partitions(d) {
                    let expected = c_coefficient(&mu, &nu).unwrap();
                    for pi in all.iter().filter(|s| s.block_type() == mu) {
                        assert_eq!(c_coefficient_from(pi, &nu).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::default());
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
    }
}
