use itertools::Itertools;

use super::graph::default_names;
use super::{Graph, Poset, Sequencing};
use crate::error::{Error, Result};

/// Largest `d` for which all `d!` sequencings are enumerated.
pub const SEQUENCING_CAP: usize = 9;
/// Largest vertex count for exhaustive labelled graph enumeration.
pub const GRAPH_CAP: usize = 6;
/// Largest element count for exhaustive labelled poset enumeration.
pub const POSET_CAP: usize = 6;

fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded { what, size, cap });
    }
    Ok(())
}

/// All `d!` sequencings in lexicographic order.
pub fn enumerate_sequencings(d: usize) -> Result<impl Iterator<Item = Sequencing>> {
    cap("sequencing length", d, SEQUENCING_CAP)?;
    Ok((0..d).permutations(d).map(Sequencing))
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices. Graph `k` has the
/// edge `(i, j)` iff bit `t` of `k` is set, where `t` indexes the pairs
/// `i < j` lexicographically.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    cap("graph vertex count", n, GRAPH_CAP)?;
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let names = default_names(n);
    Ok((0u64..1 << pairs.len()).map(move |k| {
        let mut adj = vec![0u32; n];
        for (t, &(i, j)) in pairs.iter().enumerate() {
            if k >> t & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Graph::from_adjacency(names.clone(), adj)
    }))
}

/// All labelled posets on `n` elements, each exactly once.
///
/// Built by extending every poset on the first `k` elements with element `k`:
/// its down-set must be an order ideal, its up-set a filter, the two disjoint,
/// and everything in the down-set already below everything in the up-set.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    cap("poset element count", n, POSET_CAP)?;
    let mut level: Vec<Vec<u32>> = vec![vec![]];
    for k in 0..n {
        let all = (1u32 << k) - 1;
        let mut next = Vec::new();
        for up in &level {
            let down_of = |x: usize| (0..k).filter(|&y| up[y] >> x & 1 == 1).fold(0u32, |m, y| m | 1 << y);
            let downs: Vec<u32> = (0..k).map(down_of).collect();
            let ideals: Vec<u32> = (0..=all).filter(|&m| (0..k).all(|x| m >> x & 1 == 0 || downs[x] & !m == 0)).collect();
            let filters: Vec<u32> = (0..=all).filter(|&m| (0..k).all(|x| m >> x & 1 == 0 || up[x] & !m == 0)).collect();
            for &below in &ideals {
                for &above in &filters {
                    if below & above != 0 {
                        continue;
                    }
                    if (0..k).any(|x| below >> x & 1 == 1 && up[x] & above != above) {
                        continue;
                    }
                    let mut ext: Vec<u32> = up.clone();
                    for (x, e) in ext.iter_mut().enumerate() {
                        if below >> x & 1 == 1 {
                            *e |= 1 << k;
                        }
                    }
                    ext.push(above);
                    next.push(ext);
                }
            }
        }
        level = next;
    }
    let names = default_names(n);
    Ok(level.into_iter().map(|up| Poset::from_closed(names.clone(), up)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct filter over all `3^(n choose 2)` relation choices.
    fn brute_force_posets(n: usize) -> Vec<Vec<u32>> {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let mut out = Vec::new();
        for code in 0..3u32.pow(pairs.len() as u32) {
            let mut up = vec![0u32; n];
            let mut c = code;
            for &(i, j) in &pairs {
                match c % 3 {
                    1 => up[i] |= 1 << j,
                    2 => up[j] |= 1 << i,
                    _ => {}
                }
                c /= 3;
            }
            let transitive =
                (0..n).all(|x| (0..n).all(|y| up[x] >> y & 1 == 0 || up[y] & !up[x] == 0));
            if transitive {
                out.push(up);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_sequencings(3).unwrap().count(), 6);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(brute_force_posets(3).len(), 19);
        let expected = [1, 1, 3, 19, 219, 4231];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_posets(n).unwrap().len(), e);
        }
        for n in 0..=4 {
            let mut ours: Vec<Vec<u32>> = enumerate_posets(n).unwrap().iter().map(|p| p.up_sets().to_vec()).collect();
            ours.sort();
            assert_eq!(ours, brute_force_posets(n));
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate_sequencings(10), Err(Error::CapExceeded { .. })));
        assert!(enumerate_graphs(7).is_err());
        assert!(enumerate_posets(7).is_err());
    }

    #[test]
    fn enumerated_posets_are_closed() {
        for p in enumerate_posets(5).unwrap() {
            let up = p.up_sets();
            for x in 0..5 {
                assert_eq!(up[x] >> x & 1, 0);
                for y in 0..5 {
                    if up[x] >> y & 1 == 1 {
                        assert_eq!(up[y] & !up[x], 0);
                    }
                }
            }
        }
    }
}
