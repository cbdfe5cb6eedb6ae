use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest vertex count representable by the adjacency bitmasks.
pub const MAX_VERTICES: usize = 32;

pub(crate) fn default_names(n: usize) -> Arc<[String]> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub(crate) fn check_names(names: &[String]) -> Result<()> {
    if names.len() > MAX_VERTICES {
        return Err(Error::CapExceeded { what: "vertex count", size: names.len(), cap: MAX_VERTICES });
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(Error::Invalid { what: "vertex names", reason: format!("duplicate name {a:?}") });
        }
    }
    Ok(())
}

/// A finite simple labelled undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Arc<[String]>,
    adj: Vec<u32>,
}

impl Graph {
    /// Edgeless graph on `n` vertices named `1..=n`.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { names: default_names(n), adj: vec![0; n] }
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        Ok(Graph { names: names.into(), adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(names: Arc<[String]>, adj: Vec<u32>) -> Self {
        Graph { names, adj }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = ((1u64 << n) - 1) as u32 & !(1 << u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n).expect("cycle needs n >= 3");
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u).unwrap();
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(Error::Invalid { what: "edge", reason: format!("({u}, {v}) out of range for {n} vertices") });
        }
        if u == v {
            return Err(Error::Invalid { what: "edge", reason: format!("loop at {}", self.names[u]) });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn shared_names(&self) -> Arc<[String]> {
        self.names.clone()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbours(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|u| (u + 1..n).filter(move |&v| self.adjacent(u, v)).map(move |v| (u, v))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Graph with `v` and its incident edges removed.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.len()).filter(|&u| u != v).collect();
        let names: Arc<[String]> = keep.iter().map(|&u| self.names[u].clone()).collect();
        let adj = keep
            .iter()
            .map(|&u| keep.iter().enumerate().filter(|&(_, &w)| self.adjacent(u, w)).fold(0u32, |m, (i, _)| m | 1 << i))
            .collect();
        Graph { names, adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(Graph::path(3).edges(), vec![(0, 1), (1, 2)]);
        assert!(Graph::new(2).add_edge(1, 1).is_err());
        assert!(Graph::new(2).add_edge(0, 2).is_err());
        assert!(Graph::with_names(vec!["a".into(), "a".into()]).is_err());
        let g = Graph::path(3).remove_vertex(1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.names(), &["1".to_string(), "3".to_string()]);
    }
}
