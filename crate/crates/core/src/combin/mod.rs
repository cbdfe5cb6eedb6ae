//! Graphs, posets, sequencings and labellings, together with the descent
//! statistics that index the quasi-symmetric expansions.
//!
//! Orientation convention: a sequencing `s` orients each edge `{s(i), s(j)}`
//! with `i < j` so that `s(i) < s(j)` in the induced poset. The vertex that
//! comes later in the sequencing is the larger one.

mod enumerate;
mod graph;
mod poset;

use std::fmt;

pub use enumerate::{enumerate_graphs, enumerate_posets, enumerate_sequencings, GRAPH_CAP, POSET_CAP, SEQUENCING_CAP};
pub use graph::{Graph, MAX_VERTICES};
pub use poset::Poset;

use crate::error::{Error, Result};
use crate::partitions::{visit_set_partitions, SetPartition};
use crate::qsym::DescentClass;
use crate::scalar::Scalar;
use crate::symfunc::{Basis, SymPoly};

/// A bijection from positions `1..=d` to vertices, stored 0-based:
/// `order()[i]` is the vertex at position `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequencing(Vec<usize>);

impl Sequencing {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let d = order.len();
        let mut seen = vec![false; d];
        for &v in &order {
            if v >= d || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid { what: "sequencing", reason: format!("{order:?} is not a permutation of 0..{d}") });
            }
        }
        Ok(Sequencing(order))
    }

    pub fn identity(d: usize) -> Self {
        Sequencing((0..d).collect())
    }

    /// Resolves element names against `names`, e.g. `["d", "a", "c", "b"]`.
    pub fn from_names(names: &[String], order: &[&str]) -> Result<Self> {
        let idx = order
            .iter()
            .map(|t| {
                names.iter().position(|n| n == t).ok_or_else(|| Error::Parse(format!("unknown element {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if idx.len() != names.len() {
            return Err(Error::Parse(format!("sequencing has {} elements, expected {}", idx.len(), names.len())));
        }
        Sequencing::new(idx)
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertex at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn reversed(&self) -> Self {
        Sequencing(self.0.iter().rev().copied().collect())
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a [usize], &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let s: Vec<&str> = self.0.iter().map(|&v| self.1[v].as_str()).collect();
                f.write_str(&s.join(","))
            }
        }
        D(&self.0, names)
    }
}

/// A bijection from vertices to labels `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labelling(Vec<usize>);

impl Labelling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let d = labels.len();
        let mut seen = vec![false; d + 1];
        for &l in &labels {
            if l == 0 || l > d || std::mem::replace(&mut seen[l], true) {
                return Err(Error::Invalid { what: "labelling", reason: format!("{labels:?} is not a bijection onto 1..={d}") });
            }
        }
        Ok(Labelling(labels))
    }

    pub fn identity(d: usize) -> Self {
        Labelling((1..=d).collect())
    }

    pub fn reverse(d: usize) -> Self {
        Labelling((1..=d).rev().collect())
    }

    /// Labelling that gives label `j + 1` to `order[j]`.
    pub fn from_order(order: &[usize]) -> Self {
        let mut labels = vec![0; order.len()];
        for (j, &v) in order.iter().enumerate() {
            labels[v] = j + 1;
        }
        Labelling(labels)
    }

    pub fn label(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff `α(x) > α(y)` whenever `x < y` in `p`.
    pub fn is_order_reversing(&self, p: &Poset) -> bool {
        p.relations().into_iter().all(|(x, y)| self.0[x] > self.0[y])
    }
}

/// Stable partitions of `g` (no block contains an edge), in
/// restricted-growth order.
pub fn stable_partitions(g: &Graph) -> Vec<SetPartition> {
    let ground: Vec<usize> = (0..g.len()).collect();
    let mut out = Vec::new();
    visit_set_partitions(g.len(), &|block, x| block & g.neighbours(x) == 0, &mut |masks| {
        out.push(SetPartition::from_masks(masks, &ground))
    });
    out
}

/// `X_G = Σ_π m̃_{type(π)}` over stable partitions, in the `m` basis.
pub fn chromatic_symmetric_function<C: Scalar>(g: &Graph) -> SymPoly<C> {
    let mut x = SymPoly::zero(Basis::M);
    for pi in stable_partitions(g) {
        let ty = pi.block_type();
        let c = C::from_bigint(&ty.r_factorial().into());
        x.add_term(ty, c);
    }
    x
}

fn check_len(what: &'static str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Invalid { what, reason: format!("has {got} entries, expected {want}") });
    }
    Ok(())
}

/// Up-sets of `ō̄(s)`, computed from the back of the sequencing.
pub(crate) fn orientation_up_sets(g: &Graph, s: &Sequencing) -> Vec<u32> {
    let mut up = vec![0u32; g.len()];
    let order = s.order();
    for i in (0..order.len()).rev() {
        let x = order[i];
        let mut acc = 0u32;
        for &y in &order[i + 1..] {
            if g.adjacent(x, y) {
                acc |= 1 << y | up[y];
            }
        }
        up[x] = acc;
    }
    up
}

/// The poset `ō̄(s)`: transitive closure of `s(i) < s(j)` for adjacent
/// `s(i), s(j)` with `i < j`.
pub fn induced_orientation_poset(g: &Graph, s: &Sequencing) -> Result<Poset> {
    check_len("sequencing", s.len(), g.len())?;
    Ok(Poset::from_closed(g.shared_names(), orientation_up_sets(g, s)))
}

/// `{i : α(s(i)) > α(s(i+1))}`.
pub fn alpha_descent_set(alpha: &Labelling, s: &Sequencing) -> Result<DescentClass> {
    check_len("labelling", alpha.len(), s.len())?;
    let o = s.order();
    let mask = (1..o.len()).filter(|&i| alpha.label(o[i - 1]) > alpha.label(o[i])).fold(0u32, |m, i| m | 1 << (i - 1));
    DescentClass::from_mask(o.len(), mask)
}

/// Peeling stage of every element from an up-set table; stages start at 1.
pub(crate) fn peel(up: &[u32]) -> Vec<usize> {
    let n = up.len();
    let mut down = vec![0u32; n];
    for (x, &u) in up.iter().enumerate() {
        for (y, d) in down.iter_mut().enumerate() {
            if u >> y & 1 == 1 {
                *d |= 1 << x;
            }
        }
    }
    let mut rank = vec![0; n];
    let mut remaining: u32 = if n == 0 { 0 } else { ((1u64 << n) - 1) as u32 };
    let mut stage = 1;
    while remaining != 0 {
        let minimal = (0..n).filter(|&x| remaining >> x & 1 == 1 && down[x] & remaining == 0).fold(0u32, |m, x| m | 1 << x);
        for (x, r) in rank.iter_mut().enumerate() {
            if minimal >> x & 1 == 1 {
                *r = stage;
            }
        }
        remaining &= !minimal;
        stage += 1;
    }
    rank
}

/// `ρ(x)`: the stage at which `x` is removed when minimal elements are peeled
/// off repeatedly.
pub fn peeling_rank(p: &Poset) -> Vec<usize> {
    peel(p.up_sets())
}

/// Positions `i` where `ρ(s(i)) < ρ(s(i+1))`, or the ranks tie and
/// `β(s(i)) < β(s(i+1))`; `ρ` is taken in `ō̄(s)`.
pub fn cg_ascent_set(g: &Graph, beta: &Labelling, s: &Sequencing) -> Result<DescentClass> {
    check_len("sequencing", s.len(), g.len())?;
    check_len("labelling", beta.len(), g.len())?;
    let rank = peel(&orientation_up_sets(g, s));
    let o = s.order();
    let mask = (1..o.len())
        .filter(|&i| {
            let (x, y) = (o[i - 1], o[i]);
            rank[x] < rank[y] || (rank[x] == rank[y] && beta.label(x) < beta.label(y))
        })
        .fold(0u32, |m, i| m | 1 << (i - 1));
    DescentClass::from_mask(o.len(), mask)
}

pub(crate) fn peeling_labelling_from_up(up: &[u32], beta: &Labelling) -> Labelling {
    let rank = peel(up);
    let mut order: Vec<usize> = (0..up.len()).collect();
    order.sort_by(|&x, &y| rank[y].cmp(&rank[x]).then(beta.label(y).cmp(&beta.label(x))));
    Labelling::from_order(&order)
}

/// `α_s`: vertices listed highest `ō̄(s)`-rank first, ties broken by
/// decreasing `β`, and labelled by position in that list.
pub fn canonical_peeling_labelling(g: &Graph, beta: &Labelling, s: &Sequencing) -> Result<Labelling> {
    check_len("sequencing", s.len(), g.len())?;
    check_len("labelling", beta.len(), g.len())?;
    Ok(peeling_labelling_from_up(&orientation_up_sets(g, s), beta))
}

/// Graph on the elements of `p` joining incomparable pairs.
pub fn incomparability_graph(p: &Poset) -> Graph {
    let n = p.len();
    let adj = (0..n).map(|x| (0..n).filter(|&y| p.incomparable(x, y)).fold(0u32, |m, y| m | 1 << y)).collect();
    Graph::from_adjacency(p.shared_names(), adj)
}

/// `{i : s(i) ≮ s(i+1)}`; incomparable neighbours count as descents.
pub fn poset_descent_set(p: &Poset, s: &Sequencing) -> Result<DescentClass> {
    check_len("sequencing", s.len(), p.len())?;
    let o = s.order();
    let mask = (1..o.len()).filter(|&i| !p.lt(o[i - 1], o[i])).fold(0u32, |m, i| m | 1 << (i - 1));
    DescentClass::from_mask(o.len(), mask)
}

/// An induced `3+1`: returns `[x, y, z, w]` with `x < y < z` and `w`
/// incomparable to all three.
pub fn find_three_plus_one(p: &Poset) -> Option<[usize; 4]> {
    let n = p.len();
    for x in 0..n {
        for y in (0..n).filter(|&y| p.lt(x, y)) {
            for z in (0..n).filter(|&z| p.lt(y, z)) {
                if let Some(w) = (0..n).find(|&w| p.incomparable(w, x) && p.incomparable(w, y) && p.incomparable(w, z)) {
                    return Some([x, y, z, w]);
                }
            }
        }
    }
    None
}

pub fn is_three_plus_one_free(p: &Poset) -> bool {
    find_three_plus_one(p).is_none()
}

/// An induced copy of the N poset, as `[a, b, c, d]` with `c < a`, `c < b`,
/// `d < b` and no other relations among them.
pub fn find_induced_n(p: &Poset) -> Option<[usize; 4]> {
    let n = p.len();
    for b in 0..n {
        for c in (0..n).filter(|&c| p.lt(c, b)) {
            for d in (0..n).filter(|&d| d != c && p.lt(d, b) && p.incomparable(c, d)) {
                for a in (0..n).filter(|&a| a != b && p.lt(c, a)) {
                    if p.incomparable(a, b) && p.incomparable(a, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_n_free(p: &Poset) -> bool {
    find_induced_n(p).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixture_poset;
    use crate::partitions::{enumerate_set_partitions, IntPartition};
    use num_rational::BigRational;

    type Q = BigRational;

    fn seq(v: &[usize]) -> Sequencing {
        Sequencing::new(v.to_vec()).unwrap()
    }

    fn n_poset() -> Poset {
        fixture_poset("N").unwrap()
    }

    fn by_name(p: &Poset, names: &[&str]) -> Sequencing {
        Sequencing::from_names(p.names(), names).unwrap()
    }

    #[test]
    fn sequencing_validation() {
        assert!(Sequencing::new(vec![0, 0]).is_err());
        assert!(Sequencing::new(vec![0, 2]).is_err());
        assert!(Labelling::new(vec![0, 1]).is_err());
        assert!(Labelling::new(vec![2, 2]).is_err());
        assert_eq!(Labelling::from_order(&[1, 0]), Labelling::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn stable_partition_counts() {
        assert_eq!(stable_partitions(&Graph::complete(3)).len(), 1);
        assert_eq!(stable_partitions(&Graph::new(2)).len(), 2);
        let c5 = Graph::cycle(5);
        let brute = enumerate_set_partitions(&[0, 1, 2, 3, 4])
            .into_iter()
            .filter(|pi| pi.blocks().iter().all(|b| b.iter().all(|&x| b.iter().all(|&y| !c5.adjacent(x, y)))))
            .count();
        // 1 + 5 + 5 partitions into 5, 4 and 3 blocks
        assert_eq!(brute, 11);
        assert_eq!(stable_partitions(&c5).len(), brute);
    }

    #[test]
    fn chromatic_symmetric_examples() {
        let q = |n: i64| Q::from_integer(n.into());
        let p = |s: &str| s.parse::<IntPartition>().unwrap();
        assert_eq!(chromatic_symmetric_function::<Q>(&Graph::complete(2)), SymPoly::from_terms(Basis::M, [(p("1,1"), q(2))]));
        let e2 = chromatic_symmetric_function::<Q>(&Graph::new(2));
        assert_eq!(e2, SymPoly::from_terms(Basis::M, [(p("2"), q(1)), (p("1,1"), q(2))]));
        assert_eq!(e2, SymPoly::basis_element(Basis::P, p("1,1")).convert(Basis::M).unwrap());
        assert_eq!(chromatic_symmetric_function::<Q>(&Graph::complete(3)), SymPoly::from_terms(Basis::M, [(p("1,1,1"), q(6))]));
    }

    #[test]
    fn orientation_examples() {
        let k2 = Graph::complete(2);
        let o = induced_orientation_poset(&k2, &seq(&[0, 1])).unwrap();
        assert!(o.lt(0, 1) && !o.lt(1, 0));
        let o = induced_orientation_poset(&Graph::new(3), &seq(&[2, 0, 1])).unwrap();
        assert!(o.relations().is_empty());
        // path a–b–c, s = (b, a, c)
        let path = Graph::path(3);
        let o = induced_orientation_poset(&path, &seq(&[1, 0, 2])).unwrap();
        assert_eq!(o.relations(), vec![(1, 0), (1, 2)]);
        assert!(o.incomparable(0, 2));
    }

    #[test]
    fn descent_sets() {
        let id = Labelling::identity(4);
        assert!(alpha_descent_set(&id, &seq(&[0, 1, 2, 3])).unwrap().is_empty());
        assert_eq!(alpha_descent_set(&id, &seq(&[3, 2, 1, 0])).unwrap(), DescentClass::full(4));
        // α∘s = (2, 4, 1, 3)
        assert_eq!(alpha_descent_set(&id, &seq(&[1, 3, 0, 2])).unwrap(), DescentClass::new(4, &[2]).unwrap());
    }

    #[test]
    fn peeling() {
        assert_eq!(peeling_rank(&Poset::antichain(3)), vec![1, 1, 1]);
        assert_eq!(peeling_rank(&Poset::chain(3)), vec![1, 2, 3]);
        let n = n_poset();
        let r = peeling_rank(&n);
        let idx = |s: &str| n.index_of(s).unwrap();
        assert_eq!((r[idx("c")], r[idx("d")], r[idx("a")], r[idx("b")]), (1, 1, 2, 2));
    }

    #[test]
    fn cg_ascents_and_peeling_labels() {
        let k2 = Graph::complete(2);
        let id = Labelling::identity(2);
        assert_eq!(cg_ascent_set(&k2, &id, &seq(&[0, 1])).unwrap(), DescentClass::new(2, &[1]).unwrap());
        assert!(cg_ascent_set(&Graph::new(1), &Labelling::identity(1), &seq(&[0])).unwrap().is_empty());
        assert!(cg_ascent_set(&Graph::new(2), &id, &seq(&[1, 0])).unwrap().is_empty());

        let alpha = canonical_peeling_labelling(&k2, &id, &seq(&[0, 1])).unwrap();
        assert_eq!(alpha.label(1), 1);
        let alpha = canonical_peeling_labelling(&Graph::new(2), &id, &seq(&[0, 1])).unwrap();
        assert_eq!(alpha, Labelling::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn incomparability() {
        assert_eq!(incomparability_graph(&Poset::chain(4)).edge_count(), 0);
        assert_eq!(incomparability_graph(&Poset::antichain(4)), Graph::complete(4));
        let n = n_poset();
        let g = incomparability_graph(&n);
        let mut edges: Vec<(String, String)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (n.name(u).to_string(), n.name(v).to_string());
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        edges.sort();
        let expected: Vec<(String, String)> =
            [("a", "b"), ("a", "d"), ("c", "d")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn poset_descents() {
        let c = Poset::chain(4);
        assert!(poset_descent_set(&c, &seq(&[0, 1, 2, 3])).unwrap().is_empty());
        assert_eq!(poset_descent_set(&c, &seq(&[3, 2, 1, 0])).unwrap(), DescentClass::full(4));
        let n = n_poset();
        let s = by_name(&n, &["d", "a", "c", "b"]);
        assert_eq!(poset_descent_set(&n, &s).unwrap(), DescentClass::new(4, &[1, 2]).unwrap());
    }

    #[test]
    fn forbidden_subposets() {
        assert!(is_three_plus_one_free(&Poset::chain(3)));
        assert!(is_three_plus_one_free(&Poset::antichain(3)));
        let p31 = Poset::from_relations(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_three_plus_one(&p31), Some([0, 1, 2, 3]));
        let n = n_poset();
        assert!(is_three_plus_one_free(&n));
        assert!(!is_n_free(&n));
        let [a, b, c, d] = find_induced_n(&n).unwrap();
        assert_eq!([n.name(a), n.name(b), n.name(c), n.name(d)], ["a", "b", "c", "d"]);
        assert!(is_n_free(&Poset::chain(5)));
    }
}
