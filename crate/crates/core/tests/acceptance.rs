//! Exhaustive acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! status if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use chromsym::combin::{
    chromatic_symmetric_function, enumerate_graphs, enumerate_posets, enumerate_sequencings, is_n_free,
    is_three_plus_one_free, Graph, Labelling, Poset,
};
use chromsym::expansions::{
    chromatic_polynomial, cg_binomial_sum, cg_descent_number_counts, find_non_q_positive_xi, first_non_positive_term,
    gasharov_coefficient_check, theorem1_expansion, verify_corollary2, verify_corollary3,
    verify_corollary3_via_theorem1, verify_lemma1, verify_omega_matrix, verify_theorem1, verify_theorem5,
    xi_expansion_of_graph, xi_transfer,
};
use chromsym::io::fixture_poset;
use chromsym::partitions::enumerate_partitions;
use chromsym::qsym::{fundamental_at_ones, fundamental_q_monomial_coefficients, sym_to_fundamental};
use chromsym::symfunc::{xi_basis_element, PathDigraph};
use chromsym::tableaux::{p_tableau_counts, sww_insert, sww_inverse_exists, sww_respects_descents};
use chromsym::{BigInt, BigUint, Basis, DescentClass, IntPartition, QSymFn, SymFn, SymPoly};
use num_traits::{ToPrimitive, Zero};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_graphs(max: usize) -> Vec<Graph> {
    (0..=max).flat_map(|n| enumerate_graphs(n).unwrap()).collect()
}

fn all_posets(max: usize) -> Vec<Poset> {
    (0..=max).flat_map(|n| enumerate_posets(n).unwrap()).collect()
}

fn betas(d: usize) -> Vec<Labelling> {
    // identity, reverse, and the identity with its first two labels swapped
    let mut shuffle: Vec<usize> = (1..=d).collect();
    if d >= 2 {
        shuffle.swap(0, 1);
    }
    vec![Labelling::identity(d), Labelling::reverse(d), Labelling::new(shuffle).unwrap()]
}

/// Every map `V -> [k]`, as a vector of colours.
fn colourings(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.pow(n as u32);
    (0..total).map(move |mut c| {
        (0..n)
            .map(|_| {
                let x = c % k;
                c /= k;
                x
            })
            .collect()
    })
}

fn is_proper(g: &Graph, col: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| col[u] != col[v])
}

fn count_proper(g: &Graph, k: usize) -> u64 {
    if g.is_empty() {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    colourings(g.len(), k).filter(|c| is_proper(g, c)).count() as u64
}

/// Coefficient of `x_1^{α_1} … x_k^{α_k}` in `X_G`, for each composition
/// `α ⊨ d`: the number of proper colourings using exactly colours `1..k`
/// with class sizes `α`. Keyed by the descent set of `α`.
fn colouring_oracle(g: &Graph) -> BTreeMap<u32, u64> {
    let d = g.len();
    let mut out = BTreeMap::new();
    if d == 0 {
        out.insert(0, 1);
        return out;
    }
    for col in colourings(d, d).filter(|c| is_proper(g, c)) {
        let mut sizes = vec![0usize; d];
        for &c in &col {
            sizes[c] += 1;
        }
        let k = sizes.iter().take_while(|&&s| s > 0).count();
        if sizes[k..].iter().any(|&s| s > 0) {
            continue;
        }
        let mut mask = 0u32;
        let mut acc = 0;
        for &s in &sizes[..k - 1] {
            acc += s;
            mask |= 1 << (acc - 1);
        }
        *out.entry(mask).or_insert(0) += 1;
    }
    out
}

/// Coefficient of `x^α` in `Σ_S b_S Q_S` is `Σ_{S ⊆ set(α)} b_S`.
fn monomial_coefficients(f: &QSymFn, d: usize) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    let span = if d == 0 { 1 } else { 1u32 << (d - 1) };
    for alpha in 0..span {
        let mut total = BigInt::zero();
        for (s, c) in f.terms() {
            if s.mask() & !alpha == 0 {
                total += c.to_integer();
            }
        }
        if let Some(t) = total.to_u64().filter(|&t| t > 0) {
            out.insert(alpha, t);
        }
    }
    out
}

fn criterion1() -> Outcome {
    let graphs = all_graphs(5);
    for g in &graphs {
        let mut first: Option<QSymFn> = None;
        for beta in betas(g.len()) {
            let r = verify_theorem1(g, &beta).map_err(|e| e.to_string())?;
            ensure(r.equal, || format!("{:?} beta {:?}: {:?}", g.edges(), beta.labels(), r.witness))?;
            let t: QSymFn = theorem1_expansion(g, &beta).unwrap();
            match &first {
                None => first = Some(t),
                Some(f) => ensure(f == &t, || format!("{:?}: expansion depends on beta", g.edges()))?,
            }
        }
        let t = first.unwrap();
        ensure(monomial_coefficients(&t, g.len()) == colouring_oracle(g), || {
            format!("{:?}: sequencing sum disagrees with colouring counts", g.edges())
        })?;
    }
    Ok(format!("{} graphs on <= 5 vertices, 3 labellings each, checked against colouring counts", graphs.len()))
}

fn criterion2() -> Outcome {
    let graphs = all_graphs(5);
    for g in &graphs {
        let poly = chromatic_polynomial(g).map_err(|e| e.to_string())?;
        for beta in betas(g.len()) {
            let r = verify_corollary2(g, &beta).map_err(|e| e.to_string())?;
            ensure(r.equal, || format!("{:?}: {:?}", g.edges(), r.witness))?;
            let counts = cg_descent_number_counts(g, &beta).unwrap();
            for n in 0..=6 {
                let brute = BigInt::from(count_proper(g, n));
                let sum = cg_binomial_sum(&counts, g.len(), n);
                ensure(sum == brute, || format!("{:?} n={n}: binomial sum {sum}, colourings {brute}", g.edges()))?;
                ensure(poly.eval(&BigInt::from(n)) == brute, || format!("{:?} n={n}: polynomial {poly}", g.edges()))?;
            }
        }
    }
    Ok(format!("{} graphs, 3 labellings, n = 0..6", graphs.len()))
}

fn criterion3() -> Outcome {
    let posets = all_posets(5);
    for p in &posets {
        let r = verify_corollary3(p).map_err(|e| e.to_string())?;
        ensure(r.equal, || format!("{:?}: {:?}", p.relations(), r.witness))?;
        let c = verify_corollary3_via_theorem1(p).map_err(|e| e.to_string())?;
        ensure(c.passed(), || format!("{:?}: {:?}", p.relations(), c.first_failure))?;
    }
    Ok(format!("{} labelled posets on <= 5 elements, all four labelling checks", posets.len()))
}

fn criterion4() -> Outcome {
    let mut checked = 0;
    for d in 1..=6 {
        for n in 0..=8usize {
            // weakly increasing words over [n]; tally strict positions
            let mut by_strict: BTreeMap<u32, u64> = BTreeMap::new();
            let mut word = vec![0usize; d];
            fn rec(j: usize, lo: usize, n: usize, word: &mut Vec<usize>, out: &mut BTreeMap<u32, u64>) {
                if j == word.len() {
                    let mask = (1..word.len()).filter(|&i| word[i - 1] < word[i]).fold(0u32, |m, i| m | 1 << (i - 1));
                    *out.entry(mask).or_insert(0) += 1;
                    return;
                }
                for x in lo..n {
                    word[j] = x;
                    rec(j + 1, x, n, word, out);
                }
            }
            rec(0, 0, n, &mut word, &mut by_strict);
            for s in DescentClass::all(d) {
                let words: u64 = by_strict.iter().filter(|(&t, _)| s.mask() & !t == 0).map(|(_, c)| c).sum();
                let monomials: BigUint = fundamental_q_monomial_coefficients(&s, n).values().sum();
                let formula = fundamental_at_ones(&s, n);
                ensure(formula == BigUint::from(words) && monomials == formula, || {
                    format!("S={{{s}}} d={d} n={n}: formula {formula}, words {words}, monomials {monomials}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (S, d, n) triples"))
}

fn criterion5() -> Outcome {
    let mut pairs = 0;
    for d in 1..=7 {
        let parts = enumerate_partitions(d);
        for lambda in &parts {
            // independent tally of path types over edge subsets
            let dg = PathDigraph::new(lambda);
            let mut tally: BTreeMap<IntPartition, u64> = BTreeMap::new();
            for f in 0..1u64 << dg.edges().len() {
                *tally.entry(dg.path_type(f)).or_insert(0) += 1;
            }
            ensure(tally.values().sum::<u64>() == 1 << (d - lambda.len()), || format!("{lambda}: subset count"))?;
            for nu in &parts {
                let r = verify_lemma1(lambda, nu).map_err(|e| e.to_string())?;
                ensure(r.equal, || format!("lambda={lambda} nu={nu}: {:?}", r.witness))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs with d <= 7"))
}

fn criterion6() -> Outcome {
    let mut checked = 0;
    for d in 1..=6 {
        for lambda in enumerate_partitions(d) {
            for basis in [Basis::M, Basis::S] {
                let f: SymFn = SymPoly::basis_element(basis, lambda.clone());
                let r = verify_theorem5(&f).map_err(|e| e.to_string())?;
                ensure(r.equal, || format!("{basis}[{lambda}]: {:?}", r.witness))?;
                checked += 1;
            }
            let xi = sym_to_fundamental(&xi_basis_element::<chromsym::Rational>(&lambda)).map_err(|e| e.to_string())?;
            ensure(xi_transfer(&xi) == SymPoly::basis_element(Basis::Xi, lambda.clone()), || {
                format!("xi[{lambda}] does not transfer to its unit vector")
            })?;
        }
    }
    for g in all_graphs(4) {
        let r = verify_theorem5(&chromatic_symmetric_function(&g)).map_err(|e| e.to_string())?;
        ensure(r.equal, || format!("X_G for {:?}: {:?}", g.edges(), r.witness))?;
        checked += 1;
    }
    Ok(format!("{checked} functions, unit vectors for every xi of degree <= 6"))
}

fn criterion7() -> Outcome {
    let graphs = all_graphs(5);
    for g in &graphs {
        let x = xi_expansion_of_graph(g).map_err(|e| e.to_string())?;
        ensure(first_non_positive_term(&x).is_none(), || format!("{:?}: {:?}", g.edges(), first_non_positive_term(&x)))?;
    }
    let control = find_non_q_positive_xi(5).map_err(|e| e.to_string())?;
    let (lambda, s, c) = control.ok_or("no xi of size <= 5 with a negative Q coefficient")?;
    Ok(format!("{} graphs xi-positive; xi[{lambda}] has coefficient {c} on Q[{{{s}}},{}]", graphs.len(), s.degree()))
}

fn criterion8() -> Outcome {
    for d in 0..=7 {
        let r = verify_omega_matrix(d).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{r:?}"))?;
    }
    Ok("degrees 0..7".into())
}

fn hook_length_count(lambda: &IntPartition) -> usize {
    let conj = lambda.conjugate();
    let d = lambda.size();
    let mut hooks = 1usize;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            hooks *= row as usize - j + conj.parts()[j] as usize - i - 1;
        }
    }
    (1..=d).product::<usize>() / hooks
}

fn criterion9() -> Outcome {
    let mut checked = 0;
    for p in all_posets(5).iter().filter(|p| is_three_plus_one_free(p)) {
        let r = gasharov_coefficient_check(p).map_err(|e| e.to_string())?;
        ensure(r.equal, || format!("{:?}: {:?}", p.relations(), r.witness))?;
        checked += 1;
    }
    for d in 1..=6 {
        for (lambda, count) in p_tableau_counts(&Poset::chain(d)) {
            ensure(count == hook_length_count(&lambda), || format!("chain {d}, shape {lambda}: {count}"))?;
        }
    }
    Ok(format!("{checked} (3+1)-free posets; chains up to 6 give SYT counts"))
}

fn criterion10() -> Outcome {
    let mut checked = 0;
    for p in all_posets(5).iter().filter(|p| is_three_plus_one_free(p) && is_n_free(p)) {
        let d = sww_respects_descents(p).map_err(|e| e.to_string())?;
        ensure(d.respects_descents(), || format!("{:?}: {:?}", p.relations(), d.first_violation))?;
        let b = sww_inverse_exists(p).map_err(|e| e.to_string())?;
        ensure(b.passed(), || format!("{:?}: {b:?}", p.relations()))?;
        checked += 1;
    }
    let n = fixture_poset("N").unwrap();
    let d = sww_respects_descents(&n).map_err(|e| e.to_string())?;
    let v = d.first_violation.as_ref().ok_or("poset N: no sequencing violates descents")?;
    Ok(format!(
        "{checked} (3+1)-free N-free posets; poset N: {} of 24 sequencings violate, e.g. {} with D(s)={{{}}} vs {{{}}}",
        d.violations,
        v.sequencing.display_with(n.names()),
        v.poset_descents,
        v.recording_descents
    ))
}

/// Classical row insertion of a permutation of `0..d`.
fn classical_rs(word: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &w) in word.iter().enumerate() {
        let mut x = w;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(i) => {
                    x = std::mem::replace(&mut p[r][i], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

fn criterion11() -> Outcome {
    let mut checked = 0;
    for d in 0..=6 {
        let chain = Poset::chain(d);
        for s in enumerate_sequencings(d).unwrap() {
            let out = sww_insert(&chain, &s).map_err(|e| e.to_string())?;
            let (p, q) = classical_rs(s.order());
            ensure(out.insertion.rows() == p.as_slice() && out.recording.rows() == q.as_slice(), || {
                format!("chain {d}, sequencing {:?}", s.order())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} sequencings of chains up to 6"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("sequencing expansion with peeling labellings", criterion1),
        ("CG ascent expansion and binomial specialization", criterion2),
        ("poset descent expansion and its labelling family", criterion3),
        ("fundamental quasi-symmetric specialization", criterion4),
        ("edge-subset counts of path digraphs", criterion5),
        ("xi transfer from fundamental coefficients", criterion6),
        ("xi-positivity and negative control", criterion7),
        ("omega matrix in the augmented monomial basis", criterion8),
        ("P-tableau coefficient identity", criterion9),
        ("insertion respects descents and is injective", criterion10),
        ("insertion on chains is classical row insertion", criterion11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
