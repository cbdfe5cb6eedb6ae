use std::sync::Arc;

use super::graph::{check_names, default_names};
use crate::error::{Error, Result};

/// A finite poset with a transitively closed strict order.
///
/// `up[x]` is the bitmask of elements strictly above `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Arc<[String]>,
    up: Vec<u32>,
    down: Vec<u32>,
}

impl Poset {
    /// Poset generated by the relations `x < y` for each `(x, y)` in `less`.
    /// Fails if the relations contain a cycle.
    pub fn from_relations(n: usize, less: &[(usize, usize)]) -> Result<Self> {
        Self::named_from_relations(default_names(n).to_vec(), less)
    }

    pub fn named_from_relations(names: Vec<String>, less: &[(usize, usize)]) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        let mut up = vec![0u32; n];
        for &(x, y) in less {
            if x >= n || y >= n {
                return Err(Error::Invalid { what: "relation", reason: format!("({x}, {y}) out of range for {n} elements") });
            }
            up[x] |= 1 << y;
        }
        let up = transitive_closure(up);
        if let Some(x) = (0..n).find(|&x| up[x] >> x & 1 == 1) {
            return Err(Error::Invalid { what: "poset", reason: format!("relations form a cycle through {}", names[x]) });
        }
        Ok(Self::from_closed(names.into(), up))
    }

    /// `up` must already be irreflexive and transitively closed.
    pub(crate) fn from_closed(names: Arc<[String]>, up: Vec<u32>) -> Self {
        let n = up.len();
        let mut down = vec![0u32; n];
        for (x, &u) in up.iter().enumerate() {
            for (y, d) in down.iter_mut().enumerate() {
                if u >> y & 1 == 1 {
                    *d |= 1 << x;
                }
            }
        }
        Poset { names, up, down }
    }

    pub fn chain(n: usize) -> Self {
        let up = (0..n).map(|x| (((1u64 << n) - 1) as u32) & !((2u64 << x) - 1) as u32).collect();
        Self::from_closed(default_names(n), up)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_closed(default_names(n), vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn shared_names(&self) -> Arc<[String]> {
        self.names.clone()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y) || self.lt(y, x)
    }

    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.comparable(x, y)
    }

    pub fn up_set(&self, x: usize) -> u32 {
        self.up[x]
    }

    pub fn down_set(&self, x: usize) -> u32 {
        self.down[x]
    }

    pub(crate) fn up_sets(&self) -> &[u32] {
        &self.up
    }

    /// Strict relations `x < y` as index pairs, lexicographic.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|x| (0..n).filter(move |&y| self.lt(x, y)).map(move |y| (x, y))).collect()
    }

    /// Cover relations of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations().into_iter().filter(|&(x, y)| self.up[x] & self.down[y] == 0).collect()
    }

    pub fn is_chain(&self, elements: &[usize]) -> bool {
        elements.iter().enumerate().all(|(i, &x)| elements[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }
}

/// Warshall's algorithm on bitmask rows.
pub(crate) fn transitive_closure(mut up: Vec<u32>) -> Vec<u32> {
    let n = up.len();
    for k in 0..n {
        for x in 0..n {
            if up[x] >> k & 1 == 1 {
                up[x] |= up[k];
            }
        }
    }
    up
}
