//! Sequencing expansions of chromatic symmetric functions, run as exact
//! identities.
//!
//! Each `verify_*` function computes both sides of an identity and returns an
//! [`ExpansionReport`]; nothing here panics on a failed identity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combin::{
    chromatic_symmetric_function, cg_ascent_set, enumerate_sequencings, find_three_plus_one, incomparability_graph,
    orientation_up_sets, peeling_labelling_from_up, poset_descent_set, alpha_descent_set, Graph, Labelling, Poset,
    Sequencing,
};
use crate::error::{Error, Result};
use crate::partitions::{binomial, c_coefficient, enumerate_partitions, IntPartition};
use crate::qsym::{sym_to_fundamental, DescentClass, QBasis, QSymPoly};
use crate::scalar::Scalar;
use crate::symfunc::{omega_c_matrix, omega_matrix_mtilde, xi_basis_element, Basis, PathDigraph, SymPoly};
use crate::tableaux::{p_tableau_counts, syt_descent_distribution};
use crate::{QSymFn, SymFn};

/// One side of a compared identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Expansion {
    Sym(SymFn),
    QSym(QSymFn),
    /// Labelled values, e.g. counts or polynomial evaluations.
    Table(Vec<(String, BigRational)>),
}

/// First index where the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionReport {
    pub lhs: Expansion,
    pub rhs: Expansion,
    pub equal: bool,
    pub witness: Option<Witness>,
}

fn first_difference<K: Ord + Clone, D: Fn(&K) -> String>(
    lhs: &BTreeMap<K, BigRational>,
    rhs: &BTreeMap<K, BigRational>,
    show: D,
) -> Option<Witness> {
    let zero = BigRational::zero();
    let mut keys: Vec<&K> = lhs.keys().chain(rhs.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().find_map(|k| {
        let (a, b) = (lhs.get(k).unwrap_or(&zero), rhs.get(k).unwrap_or(&zero));
        (a != b).then(|| Witness { index: show(k), lhs: a.to_string(), rhs: b.to_string() })
    })
}

impl ExpansionReport {
    /// Compares two symmetric functions; `rhs` is converted into `lhs`'s
    /// basis first.
    pub fn compare_sym(lhs: SymFn, rhs: SymFn) -> Result<Self> {
        let r = rhs.convert(lhs.basis())?;
        let collect = |f: &SymFn| f.terms().map(|(l, c)| (l.clone(), c.clone())).collect::<BTreeMap<_, _>>();
        let witness = first_difference(&collect(&lhs), &collect(&r), |l| format!("{}[{l}]", lhs.basis()));
        Ok(Self::from_witness(Expansion::Sym(lhs), Expansion::Sym(rhs), witness))
    }

    /// Compares two quasi-symmetric functions in `lhs`'s basis.
    pub fn compare_qsym(lhs: QSymFn, rhs: QSymFn) -> Self {
        let r = rhs.to_basis(lhs.basis());
        let collect = |f: &QSymFn| f.terms().map(|(k, c)| (*k, c.clone())).collect::<BTreeMap<_, _>>();
        let name = if lhs.basis() == QBasis::Fundamental { "Q" } else { "Qm" };
        let witness = first_difference(&collect(&lhs), &collect(&r), |k| format!("{name}[{{{k}}},{}]", k.degree()));
        Self::from_witness(Expansion::QSym(lhs), Expansion::QSym(rhs), witness)
    }

    /// Compares two tables entry by entry; labels must line up.
    pub fn compare_table(lhs: Vec<(String, BigRational)>, rhs: Vec<(String, BigRational)>) -> Self {
        let index = |t: &[(String, BigRational)]| {
            t.iter().enumerate().map(|(i, (_, v))| (i, v.clone())).collect::<BTreeMap<_, _>>()
        };
        let labels: Vec<String> = lhs.iter().chain(rhs.iter()).map(|(k, _)| k.clone()).collect();
        let witness = first_difference(&index(&lhs), &index(&rhs), |&i| labels[i].clone());
        let witness = witness.or_else(|| {
            lhs.iter().zip(&rhs).find(|(a, b)| a.0 != b.0).map(|(a, b)| Witness {
                index: "label".into(),
                lhs: a.0.clone(),
                rhs: b.0.clone(),
            })
        });
        Self::from_witness(Expansion::Table(lhs), Expansion::Table(rhs), witness)
    }

    fn from_witness(lhs: Expansion, rhs: Expansion, witness: Option<Witness>) -> Self {
        ExpansionReport { lhs, rhs, equal: witness.is_none(), witness }
    }
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn check_beta(g: &Graph, beta: &Labelling) -> Result<()> {
    if beta.len() != g.len() {
        return Err(Error::SizeMismatch(beta.len(), g.len()));
    }
    Ok(())
}

/// Counts `Q_{S,d}` indices over all sequencings of `g`, with `α_s` supplied
/// by `family` from the poset `ō̄(s)`.
pub fn theorem1_counts_with<F>(g: &Graph, mut family: F) -> Result<BTreeMap<DescentClass, u64>>
where
    F: FnMut(&Poset, &Sequencing) -> Result<Labelling>,
{
    let mut counts = BTreeMap::new();
    for s in enumerate_sequencings(g.len())? {
        let o = Poset::from_closed(g.shared_names(), orientation_up_sets(g, &s));
        let alpha = family(&o, &s)?;
        *counts.entry(alpha_descent_set(&alpha, &s)?).or_insert(0) += 1;
    }
    Ok(counts)
}

/// `Σ_s Q_{D(α_s,s),d}` for an arbitrary α family.
pub fn theorem1_expansion_with<C: Scalar, F>(g: &Graph, family: F) -> Result<QSymPoly<C>>
where
    F: FnMut(&Poset, &Sequencing) -> Result<Labelling>,
{
    Ok(QSymPoly::from_counts(QBasis::Fundamental, &theorem1_counts_with(g, family)?))
}

/// `Σ_s Q_{D(α_s,s),d}` with `α_s` the peeling labelling built from `β`.
pub fn theorem1_expansion<C: Scalar>(g: &Graph, beta: &Labelling) -> Result<QSymPoly<C>> {
    check_beta(g, beta)?;
    theorem1_expansion_with(g, |o, _| Ok(peeling_labelling_from_up(o.up_sets(), beta)))
}

/// Fundamental expansion of `X_G` against [`theorem1_expansion`].
pub fn verify_theorem1(g: &Graph, beta: &Labelling) -> Result<ExpansionReport> {
    let lhs = sym_to_fundamental(&chromatic_symmetric_function::<BigRational>(g))?;
    Ok(ExpansionReport::compare_qsym(lhs, theorem1_expansion(g, beta)?))
}

/// `N_S`: number of sequencings with CG β-ascent set `S`.
pub fn cg_ascent_counts(g: &Graph, beta: &Labelling) -> Result<BTreeMap<DescentClass, u64>> {
    check_beta(g, beta)?;
    let mut counts = BTreeMap::new();
    for s in enumerate_sequencings(g.len())? {
        *counts.entry(cg_ascent_set(g, beta, &s)?).or_insert(0) += 1;
    }
    Ok(counts)
}

/// `Σ_S N_S Q_{S,d}`.
pub fn cg_expansion<C: Scalar>(g: &Graph, beta: &Labelling) -> Result<QSymPoly<C>> {
    Ok(QSymPoly::from_counts(QBasis::Fundamental, &cg_ascent_counts(g, beta)?))
}

/// [`cg_expansion`] against [`theorem1_expansion`], termwise.
pub fn verify_corollary2(g: &Graph, beta: &Labelling) -> Result<ExpansionReport> {
    Ok(ExpansionReport::compare_qsym(theorem1_expansion(g, beta)?, cg_expansion(g, beta)?))
}

/// `N_k`: number of sequencings with `k` CG β-descents, i.e. `d - 1 - k`
/// CG β-ascents. Indexed by `k`; empty for the empty graph.
pub fn cg_descent_number_counts(g: &Graph, beta: &Labelling) -> Result<Vec<u64>> {
    let d = g.len();
    let mut n = vec![0; d];
    if d == 0 {
        return Ok(n);
    }
    for (s, c) in cg_ascent_counts(g, beta)? {
        n[d - 1 - s.len()] += c;
    }
    Ok(n)
}

/// `Σ_k N_k · C(n+k, d)`.
pub fn cg_binomial_sum(counts: &[u64], d: usize, n: usize) -> BigInt {
    if d == 0 {
        return BigInt::one();
    }
    counts.iter().enumerate().map(|(k, &c)| BigInt::from(c) * BigInt::from(binomial(n + k, d))).sum()
}

/// Integer polynomial in `n`, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticPolynomial {
    coefficients: Vec<BigInt>,
}

impl ChromaticPolynomial {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, c| acc * n + c)
    }
}

impl fmt::Display for ChromaticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                _ => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("n")?,
                _ => write!(f, "n^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `P_G(n) = X_G(1^n)`. Expanding `m_λ(1^n) = n(n-1)…(n-ℓ+1) / r_λ!` gives
/// the coefficients exactly.
pub fn chromatic_polynomial(g: &Graph) -> Result<ChromaticPolynomial> {
    let x = chromatic_symmetric_function::<BigRational>(g);
    let d = g.len();
    let mut coeffs = vec![BigRational::zero(); d + 1];
    for (lambda, c) in x.terms() {
        let mut falling = vec![BigInt::one()];
        for j in 0..lambda.len() {
            // multiply by (n - j)
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (k, a) in falling.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * BigInt::from(j);
            }
            falling = next;
        }
        let scale = c / int(lambda.r_factorial());
        for (k, a) in falling.into_iter().enumerate() {
            coeffs[k] += &scale * int(a);
        }
    }
    let mut coefficients = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::Invalid { what: "chromatic polynomial", reason: format!("non-integer coefficient {c}") });
        }
        coefficients.push(c.to_integer());
    }
    while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
        coefficients.pop();
    }
    Ok(ChromaticPolynomial { coefficients })
}

/// Values of `P_G(n)` (from the principal specialization of `X_G`) and of the
/// CG binomial sum at `n = 0..=d+1`. Two polynomials of degree at most `d`
/// agreeing at `d + 2` points are equal.
pub fn verify_chromatic_polynomial(g: &Graph, beta: &Labelling) -> Result<ExpansionReport> {
    let d = g.len();
    let x = chromatic_symmetric_function::<BigRational>(g);
    let counts = cg_descent_number_counts(g, beta)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for n in 0..=d + 1 {
        lhs.push((format!("n={n}"), x.principal_specialization(n)?));
        rhs.push((format!("n={n}"), int(cg_binomial_sum(&counts, d, n))));
    }
    Ok(ExpansionReport::compare_table(lhs, rhs))
}

/// `Σ_s Q_{D(s),d}` with `D(s) = {i : s(i) ≮ s(i+1)}`.
pub fn corollary3_expansion<C: Scalar>(p: &Poset) -> Result<QSymPoly<C>> {
    let mut counts = BTreeMap::new();
    for s in enumerate_sequencings(p.len())? {
        *counts.entry(poset_descent_set(p, &s)?).or_insert(0) += 1;
    }
    Ok(QSymPoly::from_counts(QBasis::Fundamental, &counts))
}

/// The labelling from the proof for incomparability graphs: among the
/// remaining `ō̄(s)`-maximal elements (always a chain in `p`) take the
/// `p`-minimal one, give it the next label, remove it and repeat.
pub fn corollary3_labelling(p: &Poset, s: &Sequencing) -> Result<Labelling> {
    let g = incomparability_graph(p);
    if s.len() != p.len() {
        return Err(Error::SizeMismatch(s.len(), p.len()));
    }
    Ok(corollary3_labelling_from_up(p, &orientation_up_sets(&g, s)))
}

fn corollary3_labelling_from_up(p: &Poset, up: &[u32]) -> Labelling {
    let n = p.len();
    let mut remaining: u32 = if n == 0 { 0 } else { ((1u64 << n) - 1) as u32 };
    let mut order = Vec::with_capacity(n);
    while remaining != 0 {
        let maximal: Vec<usize> = (0..n).filter(|&x| remaining >> x & 1 == 1 && up[x] & remaining == 0).collect();
        let v = *maximal
            .iter()
            .find(|&&x| maximal.iter().all(|&y| y == x || p.lt(x, y)))
            .expect("maximal elements of the orientation form a chain");
        order.push(v);
        remaining &= !(1 << v);
    }
    Labelling::from_order(&order)
}

/// Outcome of checking the incomparability-graph α family.
#[derive(Clone, Debug, PartialEq)]
pub struct Corollary3Report {
    /// every `α_s` is order-reversing on `ō̄(s)`
    pub order_reversing: bool,
    /// `α_s` depends only on the orientation `ō(s)`
    pub orientation_only: bool,
    /// `α_s`-descents of `s` equal the poset descents of `s`
    pub descents_coincide: bool,
    /// the α-family expansion against [`corollary3_expansion`]
    pub total: ExpansionReport,
    pub first_failure: Option<String>,
}

impl Corollary3Report {
    pub fn passed(&self) -> bool {
        self.order_reversing && self.orientation_only && self.descents_coincide && self.total.equal
    }
}

pub fn verify_corollary3_via_theorem1(p: &Poset) -> Result<Corollary3Report> {
    let g = incomparability_graph(p);
    let n = p.len();
    let mut by_orientation: HashMap<Vec<u32>, Labelling> = HashMap::new();
    let mut report = Corollary3Report {
        order_reversing: true,
        orientation_only: true,
        descents_coincide: true,
        total: ExpansionReport::compare_qsym(QSymPoly::zero(QBasis::Fundamental), QSymPoly::zero(QBasis::Fundamental)),
        first_failure: None,
    };
    fn fail(report: &mut Corollary3Report, msg: String) {
        if report.first_failure.is_none() {
            report.first_failure = Some(msg);
        }
    }
    let counts = theorem1_counts_with(&g, |o, s| {
        let alpha = corollary3_labelling_from_up(p, o.up_sets());
        let shown = || s.display_with(p.names()).to_string();
        if !alpha.is_order_reversing(o) {
            report.order_reversing = false;
            fail(&mut report, format!("labelling for {} is not order-reversing", shown()));
        }
        let orientation: Vec<u32> = (0..n).map(|x| o.up_set(x) & g.neighbours(x)).collect();
        match by_orientation.get(&orientation) {
            Some(prev) if prev != &alpha => {
                report.orientation_only = false;
                fail(&mut report, format!("labelling for {} differs on the same orientation", shown()));
            }
            Some(_) => {}
            None => {
                by_orientation.insert(orientation, alpha.clone());
            }
        }
        if alpha_descent_set(&alpha, s)? != poset_descent_set(p, s)? {
            report.descents_coincide = false;
            fail(&mut report, format!("descent sets differ for {}", shown()));
        }
        Ok(alpha)
    })?;
    let family: QSymFn = QSymPoly::from_counts(QBasis::Fundamental, &counts);
    report.total = ExpansionReport::compare_qsym(family, corollary3_expansion(p)?);
    if !report.total.equal {
        fail(&mut report, "expansion totals differ".into());
    }
    Ok(report)
}

/// `X_{inc(P)}` in the fundamental basis against [`corollary3_expansion`].
pub fn verify_corollary3(p: &Poset) -> Result<ExpansionReport> {
    let x = chromatic_symmetric_function::<BigRational>(&incomparability_graph(p));
    Ok(ExpansionReport::compare_qsym(sym_to_fundamental(&x)?, corollary3_expansion(p)?))
}

/// `a_λ = Σ_{type(S)=λ} b_S`: reads off the `ξ` coefficients of a symmetric
/// function from its fundamental expansion `Σ b_S Q_S`.
pub fn xi_transfer<C: Scalar>(b: &QSymPoly<C>) -> SymPoly<C> {
    let b = b.to_basis(QBasis::Fundamental);
    let mut out = SymPoly::zero(Basis::Xi);
    for (s, c) in b.terms() {
        out.add_term(s.type_of(), c.clone());
    }
    out
}

/// [`xi_transfer`] of the fundamental expansion of `f` against the basis
/// change of `f` into `ξ` through `m`.
pub fn verify_theorem5(f: &SymFn) -> Result<ExpansionReport> {
    let lhs = xi_transfer(&sym_to_fundamental(f)?);
    ExpansionReport::compare_sym(lhs, f.convert(Basis::Xi)?)
}

/// Counts edge subsets `F` of `D_λ` with `π(F) = ν` and compares with
/// `c_{ν,λ} r_λ! / r_ν!`.
pub fn verify_lemma1(lambda: &IntPartition, nu: &IntPartition) -> Result<ExpansionReport> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(lambda.size(), nu.size()));
    }
    let count = PathDigraph::new(lambda).subset_types().filter(|t| t == nu).count();
    let formula = int(c_coefficient(nu, lambda)?) * int(lambda.r_factorial()) / int(nu.r_factorial());
    let label = format!("lambda={lambda};nu={nu}");
    Ok(ExpansionReport::compare_table(vec![(label.clone(), int(count))], vec![(label, formula)]))
}

/// Each `Q_{S,d}` coefficient of [`corollary3_expansion`] against
/// `Σ_λ f^λ_P f^λ_S`.
pub fn gasharov_coefficient_check(p: &Poset) -> Result<ExpansionReport> {
    if let Some(w) = find_three_plus_one(p) {
        return Err(Error::NotThreePlusOneFree(w.iter().map(|&x| p.name(x).to_string()).collect()));
    }
    let lhs = corollary3_expansion(p)?;
    let mut rhs = QSymPoly::zero(QBasis::Fundamental);
    for (lambda, f_p) in p_tableau_counts(p) {
        for (s, f_s) in syt_descent_distribution(&lambda) {
            rhs.add_term(s, int(f_p as u64 * f_s));
        }
    }
    Ok(ExpansionReport::compare_qsym(lhs, rhs))
}

/// `ξ` coefficients of `X_G`, read off the sequencing expansion.
pub fn xi_expansion_of_graph(g: &Graph) -> Result<SymFn> {
    Ok(xi_transfer(&theorem1_expansion::<BigRational>(g, &Labelling::identity(g.len()))?))
}

pub fn is_nonnegative_integer(q: &BigRational) -> bool {
    q.is_integer() && !q.is_negative()
}

/// First term of `f` whose coefficient is not a nonnegative integer.
pub fn first_non_positive_term(f: &SymFn) -> Option<(IntPartition, BigRational)> {
    f.terms().find(|(_, c)| !is_nonnegative_integer(c)).map(|(l, c)| (l.clone(), c.clone()))
}

/// Searches `ξ_λ` for `|λ| ≤ max_size` for a negative coefficient in the
/// fundamental expansion.
pub fn find_non_q_positive_xi(max_size: usize) -> Result<Option<(IntPartition, DescentClass, BigRational)>> {
    for d in 1..=max_size {
        for lambda in enumerate_partitions(d) {
            let q = sym_to_fundamental(&xi_basis_element::<BigRational>(&lambda))?;
            let negative = q.terms().find(|(_, c)| c.is_negative()).map(|(s, c)| (*s, c.clone()));
            if let Some((s, c)) = negative {
                return Ok(Some((lambda, s, c)));
            }
        }
    }
    Ok(None)
}

/// The two facts about `M = (sgn λ · c_{λ,μ})` in degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMatrixReport {
    pub degree: usize,
    pub squares_to_identity: bool,
    /// `M` equals the matrix of ω in the `m̃` basis
    pub matches_omega: bool,
}

impl OmegaMatrixReport {
    pub fn passed(&self) -> bool {
        self.squares_to_identity && self.matches_omega
    }
}

pub fn verify_omega_matrix(d: usize) -> Result<OmegaMatrixReport> {
    let m = omega_c_matrix(d);
    let k = m.len();
    let squares_to_identity = (0..k).all(|i| {
        (0..k).all(|j| {
            let e: BigInt = (0..k).map(|t| &m[i][t] * &m[t][j]).sum();
            e == BigInt::from((i == j) as i32)
        })
    });
    let w = omega_matrix_mtilde(d)?;
    let matches_omega = (0..k).all(|i| (0..k).all(|j| w[i][j] == int(m[i][j].clone())));
    Ok(OmegaMatrixReport { degree: d, squares_to_identity, matches_omega })
}
