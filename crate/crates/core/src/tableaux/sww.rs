//! Row insertion of a sequencing of a (3+1)-free poset.
//!
//! Each row of the insertion tableau is a chain, so an inserted element `x` is
//! incomparable to at most two of its entries:
//!
//! * none: behave like Robinson–Schensted (append if `x` exceeds the row,
//!   otherwise bump the smallest entry greater than `x`);
//! * one: `x` bumps that entry;
//! * two: `x` skips the row and moves on to the next one.
//!
//! A bumped entry, or a skipping `x`, is inserted into the next row by the same
//! rules; running off the bottom creates a new row.

use std::collections::HashMap;

use super::{PTableau, StandardYoungTableau};
use crate::combin::{enumerate_sequencings, find_induced_n, find_three_plus_one, poset_descent_set, Poset, Sequencing};
use crate::error::{Error, Result};
use crate::qsym::DescentClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowAction {
    /// `element` appended to the end of `row`
    Append { row: usize, element: usize },
    /// `element` starts a new bottom row
    NewRow { row: usize, element: usize },
    Bump { row: usize, element: usize, bumped: usize },
    Skip { row: usize, element: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionStep {
    pub element: usize,
    pub actions: Vec<RowAction>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InsertionTrace {
    pub steps: Vec<InsertionStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwwOutput {
    pub insertion: PTableau,
    pub recording: StandardYoungTableau,
    pub trace: InsertionTrace,
}

/// Insertion bound to a poset already checked to be (3+1)-free.
#[derive(Clone, Copy, Debug)]
pub struct SwwInserter<'a> {
    poset: &'a Poset,
}

fn witness_names(p: &Poset, w: [usize; 4]) -> Vec<String> {
    w.iter().map(|&x| p.name(x).to_string()).collect()
}

impl<'a> SwwInserter<'a> {
    pub fn new(poset: &'a Poset) -> Result<Self> {
        if let Some(w) = find_three_plus_one(poset) {
            return Err(Error::NotThreePlusOneFree(witness_names(poset, w)));
        }
        Ok(SwwInserter { poset })
    }

    pub fn poset(&self) -> &Poset {
        self.poset
    }

    /// Inserts `x` into `rows`, returning the row where a cell was created.
    /// Checks on the way that the incomparable entries of each visited row
    /// form one consecutive block with smaller entries to its left and larger
    /// ones to its right.
    fn insert_one(&self, rows: &mut Vec<Vec<usize>>, mut x: usize, actions: &mut Vec<RowAction>) -> Result<usize> {
        let p = self.poset;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                actions.push(RowAction::NewRow { row: r, element: x });
                return Ok(r);
            }
            let row = &mut rows[r];
            let incomparable: Vec<usize> = (0..row.len()).filter(|&j| p.incomparable(row[j], x)).collect();
            let (lo, hi) = match (incomparable.first(), incomparable.last()) {
                (Some(&a), Some(&b)) => (a, b + 1),
                _ => {
                    let split = row.iter().take_while(|&&y| p.lt(y, x)).count();
                    (split, split)
                }
            };
            let consistent = hi - lo == incomparable.len()
                && row[..lo].iter().all(|&y| p.lt(y, x))
                && row[hi..].iter().all(|&y| p.lt(x, y));
            if !consistent {
                return Err(Error::InsertionInvariant(format!(
                    "entries of row {} incomparable to {} are not a consecutive block between smaller and larger entries",
                    r + 1,
                    p.name(x)
                )));
            }
            match incomparable.len() {
                0 if lo == row.len() => {
                    row.push(x);
                    actions.push(RowAction::Append { row: r, element: x });
                    return Ok(r);
                }
                0 | 1 => {
                    let bumped = std::mem::replace(&mut row[lo], x);
                    actions.push(RowAction::Bump { row: r, element: x, bumped });
                    x = bumped;
                }
                2 => actions.push(RowAction::Skip { row: r, element: x }),
                k => {
                    return Err(Error::InsertionInvariant(format!(
                        "{} is incomparable to {k} entries of a chain",
                        p.name(x)
                    )))
                }
            }
            r += 1;
        }
    }

    pub fn insert(&self, s: &Sequencing) -> Result<SwwOutput> {
        let p = self.poset;
        if s.len() != p.len() {
            return Err(Error::Invalid { what: "sequencing", reason: format!("length {} for a poset of {}", s.len(), p.len()) });
        }
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut recording: Vec<Vec<usize>> = Vec::new();
        let mut trace = InsertionTrace::default();
        for (i, &x) in s.order().iter().enumerate() {
            let mut actions = Vec::new();
            let r = self.insert_one(&mut rows, x, &mut actions)?;
            if r == recording.len() {
                recording.push(Vec::new());
            }
            recording[r].push(i + 1);
            if let Some(row) = rows.iter().find(|row| row.windows(2).any(|w| !p.lt(w[0], w[1]))) {
                let names: Vec<&str> = row.iter().map(|&y| p.name(y)).collect();
                return Err(Error::InsertionInvariant(format!("row {names:?} is not a chain")));
            }
            trace.steps.push(InsertionStep { element: x, actions });
        }
        Ok(SwwOutput {
            insertion: PTableau::from_rows_unchecked(rows),
            recording: StandardYoungTableau::from_rows_unchecked(recording),
            trace,
        })
    }
}

/// Runs the insertion on one sequencing; rejects posets that are not
/// (3+1)-free.
pub fn sww_insert(p: &Poset, s: &Sequencing) -> Result<SwwOutput> {
    SwwInserter::new(p)?.insert(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub sequencings: usize,
    pub distinct_pairs: usize,
    /// every insertion tableau is a P-tableau and every recording tableau an
    /// SYT of the same shape
    pub all_valid: bool,
    pub collision: Option<(Sequencing, Sequencing)>,
    pub invalid: Option<(Sequencing, String)>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.all_valid && self.collision.is_none() && self.distinct_pairs == self.sequencings
    }
}

fn validate_output(p: &Poset, out: &SwwOutput) -> Result<()> {
    out.insertion.validate(p)?;
    out.recording.validate()?;
    if out.insertion.shape() != out.recording.shape() {
        return Err(Error::Invalid { what: "insertion output", reason: "tableau shapes differ".into() });
    }
    Ok(())
}

/// Runs the insertion on every sequencing of a (3+1)-free, N-free poset and
/// checks that the output pairs are valid and pairwise distinct.
pub fn sww_inverse_exists(p: &Poset) -> Result<BijectionReport> {
    SwwInserter::new(p)?;
    if let Some(w) = find_induced_n(p) {
        return Err(Error::ContainsN(witness_names(p, w)));
    }
    sww_bijection_report(p)
}

/// Same as [`sww_inverse_exists`] without the N-free requirement, for
/// reporting on posets where injectivity is not guaranteed.
pub fn sww_bijection_report(p: &Poset) -> Result<BijectionReport> {
    let ins = SwwInserter::new(p)?;
    let mut seen: HashMap<(PTableau, StandardYoungTableau), Sequencing> = HashMap::new();
    let mut report = BijectionReport { sequencings: 0, distinct_pairs: 0, all_valid: true, collision: None, invalid: None };
    for s in enumerate_sequencings(p.len())? {
        report.sequencings += 1;
        let out = ins.insert(&s)?;
        if let Err(e) = validate_output(p, &out) {
            report.all_valid = false;
            if report.invalid.is_none() {
                report.invalid = Some((s.clone(), e.to_string()));
            }
        }
        match seen.entry((out.insertion, out.recording)) {
            std::collections::hash_map::Entry::Occupied(o) => {
                if report.collision.is_none() {
                    report.collision = Some((o.get().clone(), s));
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(s);
            }
        }
    }
    report.distinct_pairs = seen.len();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentViolation {
    pub sequencing: Sequencing,
    pub poset_descents: DescentClass,
    pub recording_descents: DescentClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentReport {
    pub n_free: bool,
    pub sequencings: usize,
    pub violations: usize,
    pub first_violation: Option<DescentViolation>,
}

impl DescentReport {
    /// Descents are respected on every sequencing.
    pub fn respects_descents(&self) -> bool {
        self.violations == 0
    }
}

/// Compares `D(s)` with the descent set of the recording tableau for every
/// sequencing `s`. On posets containing N this is a counterexample search.
pub fn sww_respects_descents(p: &Poset) -> Result<DescentReport> {
    let ins = SwwInserter::new(p)?;
    let mut report = DescentReport { n_free: find_induced_n(p).is_none(), sequencings: 0, violations: 0, first_violation: None };
    for s in enumerate_sequencings(p.len())? {
        report.sequencings += 1;
        let out = ins.insert(&s)?;
        let poset_descents = poset_descent_set(p, &s)?;
        let recording_descents = out.recording.descent_set();
        if poset_descents != recording_descents {
            report.violations += 1;
            if report.first_violation.is_none() {
                report.first_violation = Some(DescentViolation { sequencing: s, poset_descents, recording_descents });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixture_poset;

    #[test]
    fn antichain_pair() {
        let p = Poset::antichain(2);
        let out = sww_insert(&p, &Sequencing::new(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(out.insertion.rows(), &[vec![1], vec![0]]);
        assert_eq!(out.recording.rows(), &[vec![1], vec![2]]);
        assert_eq!(
            out.trace.steps[1].actions,
            vec![RowAction::Bump { row: 0, element: 1, bumped: 0 }, RowAction::NewRow { row: 1, element: 0 }]
        );
    }

    #[test]
    fn chain_rows_and_columns() {
        let c = Poset::chain(3);
        let up = sww_insert(&c, &Sequencing::identity(3)).unwrap();
        assert_eq!(up.insertion.rows().len(), 1);
        let down = sww_insert(&c, &Sequencing::identity(3).reversed()).unwrap();
        assert_eq!(down.insertion.rows().len(), 3);
        assert_eq!(down.recording.rows(), &[vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn rejects_three_plus_one() {
        let p = Poset::from_relations(4, &[(0, 1), (1, 2)]).unwrap();
        let err = sww_insert(&p, &Sequencing::identity(4)).unwrap_err();
        assert_eq!(err, Error::NotThreePlusOneFree(vec!["1".into(), "2".into(), "3".into(), "4".into()]));
        let n = fixture_poset("N").unwrap();
        assert!(matches!(sww_inverse_exists(&n), Err(Error::ContainsN(_))));
    }

    #[test]
    fn skip_rule() {
        // x < y in row 1; z incomparable to both
        let p = Poset::from_relations(3, &[(0, 1)]).unwrap();
        let out = sww_insert(&p, &Sequencing::new(vec![0, 1, 2]).unwrap()).unwrap();
        assert_eq!(out.trace.steps[2].actions, vec![RowAction::Skip { row: 0, element: 2 }, RowAction::NewRow { row: 1, element: 2 }]);
        assert_eq!(out.insertion.rows(), &[vec![0, 1], vec![2]]);
    }

    #[test]
    fn poset_n_runs() {
        let n = fixture_poset("N").unwrap();
        for names in [["d", "a", "c", "b"], ["d", "b", "c", "a"]] {
            let s = Sequencing::from_names(n.names(), &names).unwrap();
            let out = sww_insert(&n, &s).unwrap();
            assert_eq!(out.insertion.shape(), out.recording.shape());
            out.recording.validate().unwrap();
        }
        let report = sww_respects_descents(&n).unwrap();
        assert!(!report.n_free);
        assert!(report.violations > 0);
        let b = sww_bijection_report(&n).unwrap();
        assert!(b.all_valid);
        assert_eq!(b.sequencings, 24);
    }
}
