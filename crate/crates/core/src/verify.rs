//! Instance verifiers. Every check compares a computed value with an
//! expectation obtained a different way (closed formula, enumeration, or a
//! second algebraic route) and lands in a [`VerificationReport`]; only an
//! invalid instance is an `Err`.

use std::fmt::{self, Display};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::burnside::{CyclicBurnside, ElementaryBurnside, GroupFamily, Subquotient};
use crate::error::Result;
use crate::gfp::{gaussian_binomial, Caps};
use crate::intlat::{
    self, check_short_exact, hnf, kernel_lattice, snf, IntMatrix, IntegerLattice, ShortExactReport,
};
use crate::repq::{virtual_dimension, CyclicReps, ElementaryReps, RepElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub family: String,
    pub p: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    pub target: String,
}

impl Instance {
    pub fn new(family: GroupFamily, target: &str) -> Self {
        match family {
            GroupFamily::ElementaryAbelian { p, n } => Instance {
                family: "elementary".into(),
                p: p.to_string(),
                n: Some(n.to_string()),
                k: None,
                target: target.into(),
            },
            GroupFamily::CyclicCrossZp { p, k } => Instance {
                family: "cyclic".into(),
                p: p.to_string(),
                n: None,
                k: Some(k.to_string()),
                target: target.into(),
            },
        }
    }
}

impl Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} p={}", self.target, self.family, self.p)?;
        if let Some(n) = &self.n {
            write!(f, " n={n}")?;
        }
        if let Some(k) = &self.k {
            write!(f, " k={k}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub computed: String,
    pub expected: String,
    pub method: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub instance: Instance,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn new(instance: Instance) -> Self {
        VerificationReport {
            instance,
            checks: Vec::new(),
            verdict: Verdict::Pass,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn check(
        &mut self,
        name: &str,
        computed: impl Display,
        expected: impl Display,
        method: &str,
    ) -> bool {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        let pass = computed == expected;
        self.push(Check {
            name: name.into(),
            pass,
            computed,
            expected,
            method: method.into(),
        })
    }

    pub fn check_true(&mut self, name: &str, holds: bool, method: &str) -> bool {
        self.check(name, holds, true, method)
    }

    fn push(&mut self, c: Check) -> bool {
        let pass = c.pass;
        if !pass {
            self.verdict = Verdict::Fail;
        }
        self.checks.push(c);
        pass
    }

    /// Records a computation that could not be carried out.
    pub fn fail(&mut self, name: &str, why: impl Display, method: &str) {
        self.push(Check {
            name: name.into(),
            pass: false,
            computed: format!("error: {why}"),
            expected: "a value".into(),
            method: method.into(),
        });
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Pretty JSON in field order, newline-terminated.
    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check, then the verdict.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.instance);
        for c in &self.checks {
            out.push_str(&format!(
                "{} {}: computed {} expected {} ({})\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.computed,
                c.expected,
                c.method
            ));
        }
        out.push_str(&format!(
            "verdict: {}\n",
            if self.passed() { "pass" } else { "fail" }
        ));
        out
    }
}

fn elementary(p: u32, n: usize, caps: &Caps) -> Result<(ElementaryBurnside, ElementaryReps)> {
    let a = ElementaryBurnside::with_caps(p, n, caps)?;
    let r = ElementaryReps::for_burnside(&a);
    Ok((a, r))
}

fn g(k: usize, n: usize, p: u32) -> u64 {
    gaussian_binomial(k, n, p).expect("k <= n within caps")
}

/// Closed-form ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFormulas {
    pub a: Vec<u64>,
    pub a_rel: Vec<u64>,
    pub r: u64,
    pub r_rel: u64,
    pub b: u64,
    pub b_rel: i64,
}

impl RankFormulas {
    pub fn new(p: u32, n: usize) -> Self {
        let a: Vec<u64> = (0..=n + 1).map(|k| g(k, n + 1, p)).collect();
        let a_rel: Vec<u64> = (0..=n)
            .map(|k| (p as u64).pow(k as u32) * g(k, n, p))
            .collect();
        let r_rel = g(1, n + 1, p);
        RankFormulas {
            b: a[..n].iter().sum(),
            b_rel: a_rel.iter().sum::<u64>() as i64 - r_rel as i64,
            r: r_rel + 1,
            r_rel,
            a,
            a_rel,
        }
    }
}

/// Ranks of `A_k`, `A'_k`, `R`, `R'`, `N`, `N'`, each by formula and by
/// enumeration or elimination.
pub fn rank_report(p: u32, n: usize) -> Result<VerificationReport> {
    rank_report_with_caps(p, n, &Caps::default())
}

pub fn rank_report_with_caps(p: u32, n: usize, caps: &Caps) -> Result<VerificationReport> {
    let (a, r) = elementary(p, n, caps)?;
    let formulas = RankFormulas::new(p, n);
    let mut rep = VerificationReport::new(Instance::new(a.family(), "ranks"));
    for (k, want) in formulas.a.iter().enumerate() {
        rep.check(
            &format!("a_{k}"),
            a.grade(k).len(),
            want,
            "G(k,n+1) vs subspace enumeration",
        );
    }
    for (k, want) in formulas.a_rel.iter().enumerate() {
        rep.check(
            &format!("a'_{k}"),
            a.relative_grade(k).len(),
            want,
            "p^k G(k,n) vs enumeration of labels avoiding e",
        );
    }
    rep.check(
        "r",
        r.rank(),
        formulas.r,
        "G(1,n+1)+1 vs irreducible enumeration",
    );
    rep.check(
        "r'",
        r.relative_rep_basis().len(),
        formulas.r_rel,
        "G(1,n+1) vs R' basis size",
    );

    let f = r.f_matrix(&a)?;
    rep.check(
        "rank f",
        f.rank(),
        formulas.r,
        "HNF rank of f vs G(1,n+1)+1",
    );
    rep.check_true(
        "f surjective",
        hnf(&f) == IntegerLattice::full(f.ncols()),
        "HNF of f is the identity",
    );
    rep.check(
        "b",
        kernel_lattice(&f).rank(),
        formulas.b,
        "sum G(k,n+1), k<n vs kernel rank of f",
    );
    match r.f_prime_matrix(&a) {
        Ok(fp) => {
            rep.check(
                "rank f'",
                fp.rank(),
                formulas.r_rel,
                "HNF rank of f' vs G(1,n+1)",
            );
            rep.check_true(
                "f' surjective",
                hnf(&fp) == IntegerLattice::full(fp.ncols()),
                "HNF of f' is the identity",
            );
            rep.check(
                "b'",
                kernel_lattice(&fp).rank(),
                formulas.b_rel,
                "sum p^k G(k,n) - G(1,n+1) vs kernel rank of f'",
            );
        }
        Err(e) => rep.fail("f'", e, "integer solve in the R' basis"),
    }
    Ok(rep)
}

fn record_exactness(rep: &mut VerificationReport, row: &str, ses: &ShortExactReport) {
    let m = "check_short_exact";
    rep.check_true(&format!("{row}: t injective"), ses.alpha_injective, m);
    rep.check_true(&format!("{row}: f surjective"), ses.beta_surjective, m);
    rep.check_true(&format!("{row}: f∘t = 0"), ses.composite_zero, m);
    rep.check_true(
        &format!("{row}: coker t free"),
        ses.cokernel_free,
        "SNF invariant factors of t",
    );
    rep.check(
        &format!("{row}: rank im t = rank ker f"),
        ses.image_rank,
        ses.kernel_rank,
        "HNF ranks",
    );
    rep.check_true(
        &format!("{row}: im t = ker f"),
        ses.image_equals_kernel,
        "HNF lattice equality",
    );
    rep.check(
        &format!("{row}: free-cokernel route agrees with lattice equality"),
        ses.lemma_hypotheses_hold(),
        ses.exact_direct(),
        "rank-and-freeness hypotheses vs direct exactness",
    );
}

fn leading_entries_unit(t: &IntMatrix, columns: impl Fn(usize) -> usize) -> bool {
    (0..t.nrows()).all(|i| {
        let row = t.row(i);
        match row.iter().position(|x| !x.is_zero()) {
            Some(j) => j == columns(i) && row[j].is_one(),
            None => false,
        }
    })
}

/// Both rows of the commutative diagram of short exact sequences
/// `0 → dom t' → A' → R' → 0` over `0 → dom t → A → R → 0`.
pub fn verify_ses(p: u32, n: usize) -> Result<VerificationReport> {
    verify_ses_with_caps(p, n, &Caps::default())
}

pub fn verify_ses_with_caps(p: u32, n: usize, caps: &Caps) -> Result<VerificationReport> {
    let (a, r) = elementary(p, n, caps)?;
    let formulas = RankFormulas::new(p, n);
    let mut rep = VerificationReport::new(Instance::new(a.family(), "ses"));

    let t = a.t_matrix()?;
    let f = r.f_matrix(&a)?;
    rep.check("rank dom t", t.nrows(), formulas.b, "sum G(k,n+1), k<n");
    rep.check_true(
        "t upper triangular with unit diagonal",
        leading_entries_unit(&t, |i| a.t_domain()[i]),
        "leading entry of each t(L) sits at (L)",
    );
    rep.check_true(
        "coker t = A_n ⊕ A_{n+1} free",
        snf(&t).torsion_free_cokernel(),
        "SNF invariant factors",
    );
    let bottom = check_short_exact(&t, &f)?;
    record_exactness(&mut rep, "bottom", &bottom);

    let pairs = a.a_double_prime_basis();
    let want_a2 = g(1, n, p) * ((p as u64).pow(n as u32 - 1) - 1);
    rep.check(
        "rank A''_{n-1}",
        pairs.len(),
        want_a2,
        "G(1,n)(p^{n-1}-1) vs class partition",
    );
    let diffs: Vec<Vec<i64>> = pairs
        .iter()
        .map(|&(plus, minus)| {
            let mut v = vec![0; a.rank()];
            v[plus] = 1;
            v[minus] = -1;
            v
        })
        .collect();
    rep.check(
        "A'' generators independent",
        IntMatrix::from_i64_rows(&diffs, a.rank())?.rank(),
        pairs.len(),
        "HNF rank",
    );
    let gens = a.t_prime_domain();
    rep.check(
        "rank dom t'",
        gens.len(),
        formulas.b_rel,
        "sum p^k G(k,n) - G(1,n+1)",
    );

    let well_defined = gens
        .iter()
        .map(|&gen| {
            a.t_prime_image_full(gen)
                .map(|img| a.to_relative(&img).is_some())
        })
        .collect::<Result<Vec<bool>>>()?;
    let bad = well_defined.iter().filter(|&&ok| !ok).count();
    rep.check("t' images containing e", bad, 0, "support of each t image");

    let top = (|| -> Result<(IntMatrix, IntMatrix)> {
        Ok((a.t_prime_matrix()?, r.f_prime_matrix(&a)?))
    })();
    match top {
        Ok((tp, fp)) => {
            let ses = check_short_exact(&tp, &fp)?;
            record_exactness(&mut rep, "top", &ses);

            let incl_a = a.inclusion_matrix();
            let incl_dom = a.t_domain_inclusion();
            let incl_r = r.relative_inclusion_matrix()?;
            rep.check_true(
                "left square commutes",
                incl_dom.mul(&t)? == tp.mul(&incl_a)?,
                "incl∘t' vs t∘incl",
            );
            rep.check_true(
                "right square commutes",
                incl_a.mul(&f)? == fp.mul(&incl_r)?,
                "incl∘f' vs f∘incl",
            );
        }
        Err(e) => rep.fail("top row", e, "t' and f' matrices"),
    }
    Ok(rep)
}

/// Exactness of `0 → Z^a --alpha--> Z^b --beta--> Z^c → 0` for matrices
/// from anywhere, e.g. re-imported exports.
pub fn verify_exact_pair(
    instance: Instance,
    alpha: &IntMatrix,
    beta: &IntMatrix,
) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(instance);
    let ses = check_short_exact(alpha, beta)?;
    record_exactness(&mut rep, "sequence", &ses);
    Ok(rep)
}

/// All `C ≤ L ≤ G̃` with `dim L - dim C = 3`, ordered by `(L, C)`.
pub fn subquotients_rank3(p: u32, n: usize) -> Result<Vec<Subquotient>> {
    let a = ElementaryBurnside::new(p, n)?;
    Ok(subquotients_of_rank(&a, 3))
}

pub fn subquotients_of_rank(a: &ElementaryBurnside, rank: usize) -> Vec<Subquotient> {
    let mut out = Vec::new();
    for upper in a.basis().iter().filter(|l| l.dim() >= rank) {
        for j in a.grade(upper.dim() - rank) {
            let lower = a.subspace(j);
            if upper.contains_subspace(lower) {
                out.push(
                    Subquotient::new(lower.clone(), upper.clone()).expect("containment checked"),
                );
            }
        }
    }
    out
}

/// Lattice of `A(L/C)` spanned by the basis classes `D/C` with `e ∉ D`.
fn tilde_coordinates(a: &ElementaryBurnside, to_ambient: &[usize]) -> IntegerLattice {
    let rows: Vec<Vec<BigInt>> = to_ambient
        .iter()
        .enumerate()
        .filter(|(_, &j)| a.relative_position(j).is_some())
        .map(|(q, _)| {
            let mut v = vec![BigInt::zero(); to_ambient.len()];
            v[q] = BigInt::one();
            v
        })
        .collect();
    hnf(&IntMatrix::from_rows(rows, to_ambient.len()).expect("widths agree"))
}

/// `N(G,H) = Σ L/C↑ Ñ(L/C)` over the rank-3 subquotients, as lattices in
/// the relative coordinates.
pub fn verify_conjecture(p: u32, n: usize) -> Result<VerificationReport> {
    verify_conjecture_with_caps(p, n, &Caps::default())
}

pub fn verify_conjecture_with_caps(p: u32, n: usize, caps: &Caps) -> Result<VerificationReport> {
    let (a, r) = elementary(p, n, caps)?;
    let formulas = RankFormulas::new(p, n);
    let mut rep = VerificationReport::new(Instance::new(a.family(), "conjecture"));
    let fp = match r.f_prime_matrix(&a) {
        Ok(fp) => fp,
        Err(e) => {
            rep.fail("f'", e, "integer solve in the R' basis");
            return Ok(rep);
        }
    };
    let n_rel = kernel_lattice(&fp);
    rep.check(
        "rank N'",
        n_rel.rank(),
        formulas.b_rel,
        "kernel of f' vs sum p^k G(k,n) - G(1,n+1)",
    );

    let m = n + 1;
    let sqs = subquotients_of_rank(&a, 3);
    let want: u64 = (3..=m).map(|d| g(d, m, p) * g(d - 3, d, p)).sum();
    rep.check(
        "rank-3 subquotients",
        sqs.len(),
        want,
        "sum_d G(d,n+1) G(d-3,d) vs enumeration",
    );

    let quotient = ElementaryBurnside::over(a.field(), 3);
    let quotient_reps = ElementaryReps::for_burnside(&quotient);
    let n_quotient = kernel_lattice(&quotient_reps.f_matrix(&quotient)?);

    let mut induced: Vec<Vec<BigInt>> = Vec::new();
    let mut outside = 0usize;
    for sq in &sqs {
        let chart = a.chart(sq, &quotient)?;
        let tilde_n = n_quotient.intersection(&tilde_coordinates(&a, chart.to_ambient()))?;
        for i in 0..tilde_n.rank() {
            let mut v = vec![BigInt::zero(); a.relative().len()];
            for (q, c) in tilde_n.basis().row(i).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match a.relative_position(chart.to_ambient()[q]) {
                    Some(pos) => v[pos] += c,
                    None => outside += 1,
                }
            }
            induced.push(v);
        }
    }
    rep.check(
        "induced support containing e",
        outside,
        0,
        "Ñ lies in the span of e-avoiding classes",
    );
    let total = if induced.is_empty() {
        IntegerLattice::zero(a.relative().len())
    } else {
        hnf(&IntMatrix::from_rows(induced, a.relative().len())?)
    };
    rep.check(
        "rank of induced sum",
        total.rank(),
        n_rel.rank(),
        "HNF ranks",
    );
    rep.check_true(
        "induced sum ⊆ N'",
        n_rel.contains_lattice(&total)?,
        "HNF membership",
    );
    rep.check_true(
        "N' ⊆ induced sum",
        total.contains_lattice(&n_rel)?,
        "HNF membership",
    );
    rep.check_true(
        "N' = induced sum",
        intlat::lattice_equal(&total, &n_rel),
        "HNF equality",
    );
    Ok(rep)
}

/// `f' : A(G,H) → R(G,H)` is an isomorphism for `G = Z_{p^k}`.
pub fn verify_cyclic(p: u32, k: usize) -> Result<VerificationReport> {
    verify_cyclic_with_caps(p, k, &Caps::default())
}

pub fn verify_cyclic_with_caps(p: u32, k: usize, caps: &Caps) -> Result<VerificationReport> {
    let a = CyclicBurnside::with_caps(p, k, caps)?;
    let r = CyclicReps::for_burnside(&a);
    let mut rep = VerificationReport::new(Instance::new(a.family(), "cyclic-iso"));
    let kp = k as u64 * p as u64;
    rep.check(
        "rank A(G,H)",
        a.pairs().len(),
        kp + 1,
        "kp+1 vs (nu, rho) enumeration",
    );
    rep.check(
        "rank R(G~)",
        r.rank(),
        kp + 2,
        "kp+2 vs Galois orbit enumeration",
    );
    rep.check(
        "rank R(G,H)",
        r.relative_rep_basis().len(),
        kp + 1,
        "basis of ker δ",
    );

    let f = r.f_matrix(&a)?;
    let defects: Vec<i64> = a
        .pairs()
        .iter()
        .map(|&(nu, rho)| r.delta_defect(&r.decompose_perm(&a, nu, rho)))
        .collect::<Result<_>>()?;
    rep.check(
        "f' images with nonzero δ",
        defects.iter().filter(|&&d| d != 0).count(),
        0,
        "δ on each permutation module",
    );
    let delta_col = IntMatrix::from_i64_rows(
        &r.delta_values()
            .iter()
            .map(|&d| vec![d])
            .collect::<Vec<_>>(),
        1,
    )?;
    let ker_delta = kernel_lattice(&delta_col);
    let basis_lattice = hnf(&r.relative_inclusion_matrix()?);
    rep.check_true(
        "R' basis spans ker δ",
        basis_lattice == ker_delta,
        "HNF equality",
    );
    rep.check(
        "rank R(G~)/R(G,H)",
        r.rank() - ker_delta.rank(),
        1,
        "corank of ker δ",
    );
    rep.check("rank f", f.rank(), kp + 1, "HNF rank");

    match r.f_prime_matrix(&a) {
        Ok(fp) => {
            rep.check(
                "f' shape",
                format!("{}x{}", fp.nrows(), fp.ncols()),
                format!("{0}x{0}", kp + 1),
                "matrix",
            );
            let s = snf(&fp);
            let ones = s.diagonal.iter().filter(|d| d.is_one()).count();
            rep.check("f' invariant factors equal to 1", ones, kp + 1, "SNF");
            let kernel = kernel_lattice(&fp);
            rep.check("rank N(G,H)", kernel.rank(), 0, "kernel of f'");
            // G~ has p-rank 2, so no subquotient of rank 3 exists and the
            // induced sum is empty
            let p_rank = p_rank_cyclic(p, k);
            rep.check("p-rank of G~", p_rank, 2, "elements of order dividing p");
            rep.check_true(
                "N(G,H) = induced sum (empty)",
                kernel == IntegerLattice::zero(fp.nrows()),
                "HNF equality",
            );
        }
        Err(e) => rep.fail("f'", e, "integer solve in the R' basis"),
    }
    Ok(rep)
}

fn p_rank_cyclic(p: u32, k: usize) -> usize {
    // every element of Z_p has order dividing p
    let (p, q) = (p as u64, (p as u64).pow(k as u32));
    let count = (0..q).filter(|&g| (g * p).is_multiple_of(q)).count() as u64 * p;
    let mut rank = 0;
    let mut c = 1;
    while c < count {
        c *= p;
        rank += 1;
    }
    rank
}

/// `N(Z_p × Z_p)` is free of rank one on `[G] - Σ[G/C] + p[G/G]`.
pub fn verify_classical_kernel(p: u32) -> Result<VerificationReport> {
    let (a, r) = elementary(p, 1, &Caps::default())?;
    let mut rep = VerificationReport::new(Instance::new(a.family(), "classical-kernel"));
    let kernel = kernel_lattice(&r.f_matrix(&a)?);
    let gen = crate::burnside::classical_kernel_generator(p)?;
    let gen_row = IntMatrix::from_i64_rows(std::slice::from_ref(&gen.coeffs), a.rank())?;
    rep.check("rank N", kernel.rank(), 1, "kernel of f");
    rep.check_true(
        "N saturated",
        kernel.is_saturated(),
        "SNF invariant factors",
    );
    rep.check_true(
        "N = saturation of generator span",
        kernel == hnf(&gen_row).saturation(),
        "HNF equality",
    );
    rep.check_true("generator spans N", kernel == hnf(&gen_row), "HNF equality");
    Ok(rep)
}

/// Rule-based decomposition against the cyclotomic character oracle, for
/// every basis label and every irreducible, with dimension bookkeeping.
pub fn verify_decomposition(family: GroupFamily) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(Instance::new(family, "oracle"));
    let mut mismatches = 0usize;
    let mut bad_dims = 0usize;
    let mut pairs = 0usize;
    match family {
        GroupFamily::ElementaryAbelian { p, n } => {
            let (a, r) = elementary(p, n, &Caps::default())?;
            for l in a.basis() {
                let d = r.decompose_perm(l);
                for i in 0..r.rank() {
                    pairs += 1;
                    if r.character_oracle(l, i)? as i64 != d.coeffs[i] {
                        mismatches += 1;
                    }
                }
                let want = (family.order() / l.order()) as i64;
                if virtual_dimension(&d.coeffs, |i| r.dimension(i)) != want {
                    bad_dims += 1;
                }
            }
        }
        GroupFamily::CyclicCrossZp { p, k } => {
            let a = CyclicBurnside::new(p, k)?;
            let r = CyclicReps::for_burnside(&a);
            for &(nu, rho) in a.pairs() {
                let d: RepElement = r.decompose_perm(&a, nu, rho);
                for i in 0..r.rank() {
                    pairs += 1;
                    if r.character_oracle(&a, nu, rho, i)? as i64 != d.coeffs[i] {
                        mismatches += 1;
                    }
                }
                let want = (family.order() / a.graph_elements(nu, rho).len() as u64) as i64;
                if virtual_dimension(&d.coeffs, |i| r.dimension(i)) != want {
                    bad_dims += 1;
                }
            }
        }
    }
    rep.check(
        "(label, irreducible) pairs compared",
        pairs > 0,
        true,
        "enumeration",
    );
    rep.check(
        "decomposition mismatches",
        mismatches,
        0,
        "annihilator rule vs character inner product",
    );
    rep.check("dimension mismatches", bad_dims, 0, "Σ mult·dim vs |G~/L|");
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_report_small() {
        let rep = rank_report(2, 2).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        let f = RankFormulas::new(2, 2);
        assert_eq!(f.a, vec![1, 7, 7, 1]);
        assert_eq!(f.a_rel, vec![1, 6, 4]);
        assert_eq!((f.r, f.r_rel, f.b, f.b_rel), (8, 7, 8, 4));
        assert_eq!(RankFormulas::new(2, 3).b_rel, 36);
        assert_eq!(RankFormulas::new(3, 2).b_rel, 9);
    }

    #[test]
    fn ses_small() {
        for (p, n) in [(2, 1), (2, 2), (3, 1)] {
            let rep = verify_ses(p, n).unwrap();
            assert!(rep.passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn subquotient_counts() {
        assert!(subquotients_rank3(2, 1).unwrap().is_empty());
        let one = subquotients_rank3(2, 2).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rank(), 3);
        assert_eq!(subquotients_rank3(2, 3).unwrap().len(), 30);
    }

    #[test]
    fn conjecture_small() {
        let rep = verify_conjecture(2, 2).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
    }

    #[test]
    fn cyclic_small() {
        for (p, k) in [(2, 1), (2, 2), (3, 2)] {
            let rep = verify_cyclic(p, k).unwrap();
            assert!(rep.passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn classical_kernel() {
        for p in [2, 3, 5] {
            let rep = verify_classical_kernel(p).unwrap();
            assert!(rep.passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn report_json_shape() {
        let rep = verify_cyclic(2, 1).unwrap();
        let v = rep.to_json();
        assert_eq!(v["instance"]["family"], "cyclic");
        assert_eq!(v["instance"]["k"], "1");
        assert!(v["instance"].get("n").is_none());
        assert_eq!(v["verdict"], "pass");
        let c = &v["checks"][0];
        assert!(c["computed"].is_string() && c["expected"].is_string());
        assert!(c["pass"].is_boolean());
    }

    #[test]
    fn failing_check_flips_verdict() {
        let mut rep = VerificationReport::new(Instance::new(
            GroupFamily::CyclicCrossZp { p: 2, k: 1 },
            "x",
        ));
        assert!(rep.check("same", 1, 1, "m"));
        assert!(rep.passed());
        assert!(!rep.check("different", 1, 2, "m"));
        assert!(!rep.passed());
        assert!(rep.to_text().contains("FAIL different"));
    }
}
