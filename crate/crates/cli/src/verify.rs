//! Exhaustive sweeps behind `chromsym verify`.
//!
//! Objects of each size are checked in parallel; results are collected in
//! enumeration order so the report does not depend on scheduling.

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};

use chromsym::combin::{
    chromatic_symmetric_function, enumerate_graphs, enumerate_posets, is_n_free, is_three_plus_one_free, Graph,
    Labelling, Poset, GRAPH_CAP, POSET_CAP,
};
use chromsym::expansions::{
    gasharov_coefficient_check, verify_chromatic_polynomial, verify_corollary2, verify_corollary3,
    verify_corollary3_via_theorem1, verify_lemma1, verify_omega_matrix, verify_theorem1, verify_theorem5,
    ExpansionReport,
};
use chromsym::io::{fixture_poset, format_graph, format_poset, report_to_json};
use chromsym::partitions::enumerate_partitions;
use chromsym::symfunc::MAX_DEGREE;
use chromsym::tableaux::{sww_bijection_report, sww_inverse_exists, sww_respects_descents};
use chromsym::{Basis, Error, IntPartition, Result, SymFn, SymPoly};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Theorem1,
    Corollary2,
    Corollary3,
    Lemma1,
    Theorem5,
    Gasharov,
    SwwBijection,
    SwwDescents,
    OmegaMatrix,
}

impl Identity {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

pub struct SizeRow {
    size: usize,
    checked: usize,
    passed: usize,
}

pub struct Summary {
    identity: Identity,
    max_size: usize,
    sizes: Vec<SizeRow>,
    failure: Option<Value>,
    /// extra findings on the N fixture for the insertion identities
    poset_n: Option<Value>,
    poset_n_ok: bool,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.poset_n_ok
    }

    pub fn to_json(&self) -> Value {
        let sizes: Vec<Value> =
            self.sizes.iter().map(|r| json!({"size": r.size, "checked": r.checked, "passed": r.passed})).collect();
        let mut v = json!({
            "identity": self.identity.name(),
            "max_size": self.max_size,
            "passed": self.passed(),
            "sizes": sizes,
        });
        if let Some(f) = &self.failure {
            v["failure"] = f.clone();
        }
        if let Some(n) = &self.poset_n {
            v["poset_N"] = n.clone();
        }
        v
    }

    pub fn human(&self) -> String {
        let mut lines = vec![format!("{} up to size {}", self.identity.name(), self.max_size)];
        lines.push(format!("{:>6} {:>9} {:>9}", "size", "checked", "passed"));
        for r in &self.sizes {
            lines.push(format!("{:>6} {:>9} {:>9}", r.size, r.checked, r.passed));
        }
        if let Some(n) = &self.poset_n {
            lines.push(format!("poset N: {n}"));
        }
        match &self.failure {
            None if self.poset_n_ok => lines.push("PASS".into()),
            None => lines.push("FAIL on the poset N fixture".into()),
            Some(f) => lines.push(format!("FAIL: {}", serde_json::to_string_pretty(f).unwrap_or_default())),
        }
        lines.join("\n")
    }
}

/// Result of checking one object: `None` on success, otherwise a witness.
type Check = Result<Option<Value>>;

fn report(r: &ExpansionReport) -> Option<Value> {
    (!r.equal).then(|| report_to_json(r))
}

struct Sweep {
    sizes: Vec<SizeRow>,
    failure: Option<Value>,
}

fn sweep<T, D, C>(levels: Vec<(usize, Vec<T>)>, describe: D, check: C) -> Result<Sweep>
where
    T: Sync,
    D: Fn(&T) -> Value,
    C: Fn(&T) -> Check + Sync,
{
    let mut out = Sweep { sizes: Vec::new(), failure: None };
    for (size, objects) in levels {
        let results: Vec<Check> = objects.par_iter().map(&check).collect();
        let mut passed = 0;
        for (obj, r) in objects.iter().zip(results) {
            match r? {
                None => passed += 1,
                Some(w) => {
                    if out.failure.is_none() {
                        out.failure = Some(json!({"size": size, "object": describe(obj), "witness": w}));
                    }
                }
            }
        }
        out.sizes.push(SizeRow { size, checked: objects.len(), passed });
    }
    Ok(out)
}

fn cap(size: usize, limit: usize, what: &'static str) -> Result<()> {
    if size > limit {
        return Err(Error::CapExceeded { what, size, cap: limit });
    }
    Ok(())
}

fn graphs(max: usize) -> Result<Vec<(usize, Vec<Graph>)>> {
    cap(max, GRAPH_CAP, "graph vertex count")?;
    (1..=max).map(|n| Ok((n, enumerate_graphs(n)?.collect()))).collect()
}

fn posets(max: usize, keep: impl Fn(&Poset) -> bool) -> Result<Vec<(usize, Vec<Poset>)>> {
    cap(max, POSET_CAP, "poset element count")?;
    (1..=max).map(|n| Ok((n, enumerate_posets(n)?.into_iter().filter(|p| keep(p)).collect()))).collect()
}

fn betas(d: usize) -> Vec<Labelling> {
    let mut swapped: Vec<usize> = (1..=d).collect();
    if d >= 2 {
        swapped.swap(0, 1);
    }
    vec![Labelling::identity(d), Labelling::reverse(d), Labelling::new(swapped).expect("a permutation")]
}

fn describe_graph(g: &Graph) -> Value {
    Value::String(format_graph(g))
}

fn describe_poset(p: &Poset) -> Value {
    Value::String(format_poset(p))
}

fn graph_check(g: &Graph, f: impl Fn(&Graph, &Labelling) -> Result<ExpansionReport>) -> Check {
    for beta in betas(g.len()) {
        if let Some(w) = report(&f(g, &beta)?) {
            return Ok(Some(json!({"beta": beta.labels(), "report": w})));
        }
    }
    Ok(None)
}

pub fn run(identity: Identity, max_size: usize) -> std::result::Result<Summary, CliError> {
    let mut poset_n = None;
    let mut poset_n_ok = true;
    let s = match identity {
        Identity::Theorem1 => sweep(graphs(max_size)?, describe_graph, |g| graph_check(g, verify_theorem1))?,
        Identity::Corollary2 => sweep(graphs(max_size)?, describe_graph, |g| {
            if let Some(w) = graph_check(g, verify_corollary2)? {
                return Ok(Some(w));
            }
            graph_check(g, verify_chromatic_polynomial)
        })?,
        Identity::Corollary3 => sweep(posets(max_size, |_| true)?, describe_poset, |p| {
            if let Some(w) = report(&verify_corollary3(p)?) {
                return Ok(Some(w));
            }
            let r = verify_corollary3_via_theorem1(p)?;
            Ok((!r.passed()).then(|| {
                json!({
                    "order_reversing": r.order_reversing,
                    "orientation_only": r.orientation_only,
                    "descents_coincide": r.descents_coincide,
                    "total": report_to_json(&r.total),
                    "first_failure": r.first_failure,
                })
            }))
        })?,
        Identity::Lemma1 => {
            cap(max_size, MAX_DEGREE, "degree")?;
            let levels = (1..=max_size)
                .map(|d| {
                    let parts = enumerate_partitions(d);
                    let pairs: Vec<(IntPartition, IntPartition)> =
                        parts.iter().flat_map(|l| parts.iter().map(move |n| (l.clone(), n.clone()))).collect();
                    (d, pairs)
                })
                .collect();
            sweep(levels, |(l, n)| json!({"lambda": l.parts(), "nu": n.parts()}), |(l, n)| Ok(report(&verify_lemma1(l, n)?)))?
        }
        Identity::Theorem5 => {
            cap(max_size, GRAPH_CAP, "degree")?;
            let mut levels: Vec<(usize, Vec<(String, SymFn)>)> = Vec::new();
            for d in 1..=max_size {
                let mut fs = Vec::new();
                for l in enumerate_partitions(d) {
                    for b in [Basis::M, Basis::S] {
                        fs.push((format!("{b}[{l}]"), SymPoly::basis_element(b, l.clone())));
                    }
                }
                for g in enumerate_graphs(d)? {
                    fs.push((format!("X_G for\n{}", format_graph(&g)), chromatic_symmetric_function(&g)));
                }
                levels.push((d, fs));
            }
            sweep(levels, |(name, _)| Value::String(name.clone()), |(_, f)| Ok(report(&verify_theorem5(f)?)))?
        }
        Identity::Gasharov => sweep(posets(max_size, is_three_plus_one_free)?, describe_poset, |p| {
            Ok(report(&gasharov_coefficient_check(p)?))
        })?,
        Identity::SwwBijection => {
            let s = sweep(posets(max_size, |p| is_three_plus_one_free(p) && is_n_free(p))?, describe_poset, |p| {
                let r = sww_inverse_exists(p)?;
                Ok((!r.passed()).then(|| {
                    json!({
                        "sequencings": r.sequencings,
                        "distinct_pairs": r.distinct_pairs,
                        "all_valid": r.all_valid,
                        "invalid": r.invalid.as_ref().map(|(s, why)| json!([s.display_with(p.names()).to_string(), why])),
                        "collision": r.collision.as_ref().map(|(a, b)| {
                            json!([a.display_with(p.names()).to_string(), b.display_with(p.names()).to_string()])
                        }),
                    })
                }))
            })?;
            // injectivity on N is reported, not required
            let n = fixture_poset("N")?;
            let r = sww_bijection_report(&n)?;
            poset_n = Some(json!({
                "sequencings": r.sequencings,
                "distinct_pairs": r.distinct_pairs,
                "all_valid": r.all_valid,
                "injective": r.collision.is_none(),
            }));
            s
        }
        Identity::SwwDescents => {
            let s = sweep(posets(max_size, |p| is_three_plus_one_free(p) && is_n_free(p))?, describe_poset, |p| {
                let r = sww_respects_descents(p)?;
                Ok(r.first_violation.map(|v| {
                    json!({
                        "sequencing": v.sequencing.display_with(p.names()).to_string(),
                        "poset_descents": v.poset_descents.elements(),
                        "recording_descents": v.recording_descents.elements(),
                    })
                }))
            })?;
            // counterexample search: a violation on N is the expected outcome
            let n = fixture_poset("N")?;
            let r = sww_respects_descents(&n)?;
            poset_n_ok = r.violations > 0;
            poset_n = Some(json!({
                "sequencings": r.sequencings,
                "violations": r.violations,
                "counterexample": r.first_violation.map(|v| json!({
                    "sequencing": v.sequencing.display_with(n.names()).to_string(),
                    "poset_descents": v.poset_descents.elements(),
                    "recording_descents": v.recording_descents.elements(),
                })),
            }));
            s
        }
        Identity::OmegaMatrix => {
            cap(max_size, MAX_DEGREE, "degree")?;
            let levels = (1..=max_size).map(|d| (d, vec![d])).collect();
            sweep(levels, |d| json!(d), |&d| {
                let r = verify_omega_matrix(d)?;
                Ok((!r.passed()).then(|| {
                    json!({"squares_to_identity": r.squares_to_identity, "matches_omega": r.matches_omega})
                }))
            })?
        }
    };
    Ok(Summary { identity, max_size, sizes: s.sizes, failure: s.failure, poset_n, poset_n_ok })
}
