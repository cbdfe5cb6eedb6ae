//! Standard Young tableaux, semistandard counts, P-tableaux and the
//! Sundquist–Wagner–West insertion for (3+1)-free posets.

mod sww;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use sww::{
    sww_bijection_report, sww_insert, sww_inverse_exists, sww_respects_descents, BijectionReport, DescentReport, DescentViolation,
    InsertionStep, InsertionTrace, RowAction, SwwInserter, SwwOutput,
};

use crate::combin::Poset;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, IntPartition};
use crate::qsym::DescentClass;

fn shape_of(rows: &[Vec<usize>]) -> IntPartition {
    IntPartition::from_unsorted(rows.iter().map(|r| r.len() as u32).collect())
}

fn is_shape(rows: &[Vec<usize>]) -> bool {
    rows.iter().all(|r| !r.is_empty()) && rows.windows(2).all(|w| w[0].len() >= w[1].len())
}

/// A standard Young tableau in English notation, entries `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = StandardYoungTableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        StandardYoungTableau { rows }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Err(Error::Invalid { what: "standard Young tableau", reason: reason.into() });
        if !is_shape(&self.rows) {
            return bad("rows do not form a Ferrers shape");
        }
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &x)| x != i + 1) {
            return bad("entries are not 1..=d");
        }
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return bad("a row does not increase");
        }
        for w in self.rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| above >= below) {
                return bad("a column does not increase");
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> IntPartition {
        shape_of(&self.rows)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row index holding each entry, indexed by `entry - 1`.
    fn rows_of_entries(&self) -> Vec<usize> {
        let mut at = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                at[x - 1] = r;
            }
        }
        at
    }

    /// `{i : i + 1 lies in a strictly lower row than i}`.
    pub fn descent_set(&self) -> DescentClass {
        let at = self.rows_of_entries();
        let mask = (1..at.len()).filter(|&i| at[i] > at[i - 1]).fold(0u32, |m, i| m | 1 << (i - 1));
        DescentClass::from_mask(at.len(), mask).expect("tableau degree fits a descent class")
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// All standard Young tableaux of shape `lambda`, in the order produced by
/// placing `1, 2, …` into the topmost available row first.
pub fn enumerate_syt(lambda: &IntPartition) -> Vec<StandardYoungTableau> {
    fn rec(shape: &[u32], next: usize, d: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardYoungTableau>) {
        if next > d {
            out.push(StandardYoungTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] as usize && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                rec(shape, next + 1, d, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    rec(lambda.parts(), 1, lambda.size(), &mut rows, &mut out);
    out
}

/// `f^λ_S` for every `S` that occurs.
pub fn syt_descent_distribution(lambda: &IntPartition) -> BTreeMap<DescentClass, u64> {
    let mut out = BTreeMap::new();
    for t in enumerate_syt(lambda) {
        *out.entry(t.descent_set()).or_insert(0) += 1;
    }
    out
}

/// Number of semistandard tableaux of shape `shape` and content `content`,
/// built one value at a time as horizontal strips.
pub fn count_ssyt(shape: &IntPartition, content: &IntPartition) -> BigUint {
    fn strips(shape: &[u32], content: &[u32], v: usize, cur: &mut Vec<u32>) -> BigUint {
        if v == content.len() {
            return if cur.as_slice() == shape { BigUint::one() } else { BigUint::zero() };
        }
        // place content[v] copies of v in a horizontal strip on top of cur
        fn place(shape: &[u32], content: &[u32], v: usize, row: usize, left: u32, base: &[u32], cur: &mut Vec<u32>) -> BigUint {
            if row == shape.len() {
                return if left == 0 { strips(shape, content, v + 1, cur) } else { BigUint::zero() };
            }
            let lo = base[row];
            let hi = if row == 0 { shape[0] } else { shape[row].min(base[row - 1]) };
            let mut total = BigUint::zero();
            for add in 0..=left.min(hi.saturating_sub(lo)) {
                cur[row] = lo + add;
                total += place(shape, content, v, row + 1, left - add, base, cur);
            }
            cur[row] = lo;
            total
        }
        let base = cur.clone();
        place(shape, content, v, 0, content[v], &base, cur)
    }
    if shape.size() != content.size() {
        return BigUint::zero();
    }
    let mut cur = vec![0u32; shape.len()];
    strips(shape.parts(), content.parts(), 0, &mut cur)
}

/// A P-tableau: each element once, rows are chains increasing left to right,
/// and no entry is greater than the one directly below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PTableau {
    rows: Vec<Vec<usize>>,
}

impl PTableau {
    pub fn new(p: &Poset, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = PTableau { rows };
        t.validate(p)?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        PTableau { rows }
    }

    pub fn validate(&self, p: &Poset) -> Result<()> {
        let bad = |reason: String| Err(Error::Invalid { what: "P-tableau", reason });
        if !is_shape(&self.rows) {
            return bad("rows do not form a Ferrers shape".into());
        }
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (0..p.len()).collect::<Vec<_>>() {
            return bad("entries are not each poset element exactly once".into());
        }
        for r in &self.rows {
            if let Some(w) = r.windows(2).find(|w| !p.lt(w[0], w[1])) {
                return bad(format!("row has {} ≮ {}", p.name(w[0]), p.name(w[1])));
            }
        }
        for w in self.rows.windows(2) {
            if let Some((u, v)) = w[0].iter().zip(&w[1]).find(|(&u, &v)| p.lt(v, u)) {
                return bad(format!("{} sits above {} but is greater", p.name(*u), p.name(*v)));
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> IntPartition {
        shape_of(&self.rows)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a [Vec<usize>], &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, r) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" / ")?;
                    }
                    let cells: Vec<&str> = r.iter().map(|&x| self.1[x].as_str()).collect();
                    f.write_str(&cells.join(" "))?;
                }
                Ok(())
            }
        }
        D(&self.rows, names)
    }
}

/// Every P-tableau of shape `lambda`.
pub fn enumerate_p_tableaux(p: &Poset, lambda: &IntPartition) -> Result<Vec<PTableau>> {
    fn rec(p: &Poset, shape: &[u32], r: usize, used: u32, rows: &mut Vec<Vec<usize>>, out: &mut Vec<PTableau>) {
        if r == shape.len() {
            out.push(PTableau { rows: rows.clone() });
            return;
        }
        let c = rows[r].len();
        if c == shape[r] as usize {
            rec(p, shape, r + 1, used, rows, out);
            return;
        }
        for x in (0..p.len()).filter(|&x| used >> x & 1 == 0) {
            if c > 0 && !p.lt(rows[r][c - 1], x) {
                continue;
            }
            if r > 0 && p.lt(x, rows[r - 1][c]) {
                continue;
            }
            rows[r].push(x);
            rec(p, shape, r, used | 1 << x, rows, out);
            rows[r].pop();
        }
    }
    if lambda.size() != p.len() {
        return Err(Error::SizeMismatch(lambda.size(), p.len()));
    }
    let mut out = Vec::new();
    rec(p, lambda.parts(), 0, 0, &mut vec![Vec::new(); lambda.len()], &mut out);
    Ok(out)
}

/// `f^λ_P` for every shape `λ ⊢ |P|`, including zeros.
pub fn p_tableau_counts(p: &Poset) -> BTreeMap<IntPartition, usize> {
    enumerate_partitions(p.len())
        .into_iter()
        .map(|l| {
            let n = enumerate_p_tableaux(p, &l).expect("sizes agree").len();
            (l, n)
        })
        .collect()
}
