//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use burnside_core::burnside::{BurnsideElement, ElementaryBurnside, GroupFamily};
use burnside_core::export::lattice_dot;
use burnside_core::intlat::{check_short_exact, hnf, kernel_lattice, snf};
use burnside_core::repq::ElementaryReps;
use burnside_core::verify::{
    rank_report, subquotients_of_rank, verify_classical_kernel, verify_conjecture, verify_cyclic,
    verify_decomposition, verify_ses, VerificationReport,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

const GOLDEN_DOT: &str = include_str!("golden/lattice_p2_n2.dot");

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(rep: VerificationReport) -> Result<VerificationReport, String> {
    if rep.passed() {
        Ok(rep)
    } else {
        let bad: Vec<String> = rep
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{}: {} != {}", c.name, c.computed, c.expected))
            .collect();
        Err(format!("{}: {}", rep.instance, bad.join("; ")))
    }
}

fn computed<'a>(rep: &'a VerificationReport, name: &str) -> &'a str {
    rep.checks
        .iter()
        .find(|c| c.name == name)
        .map(|c| c.computed.as_str())
        .unwrap_or("<missing>")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn rank_formulas() -> Outcome {
    for p in [2, 3] {
        for n in 1..=3 {
            passed(rank_report(p, n).map_err(err)?)?;
        }
    }
    let rep = rank_report(2, 2).map_err(err)?;
    let got: Vec<&str> = [
        "a_0", "a_1", "a_2", "a_3", "a'_0", "a'_1", "a'_2", "r", "r'", "b", "b'",
    ]
    .iter()
    .map(|n| computed(&rep, n))
    .collect();
    let want = ["1", "7", "7", "1", "1", "6", "4", "8", "7", "8", "4"];
    ensure(got == want, || format!("p=2 n=2 ranks {got:?}"))?;
    Ok("p in {2,3}, n in 1..3; a=(1,7,7,1) a'=(1,6,4) r=8 r'=7 b=8 b'=4".into())
}

fn ses_diagram() -> Outcome {
    let mut largest = Duration::ZERO;
    for p in [2, 3] {
        for n in 1..=3 {
            let start = Instant::now();
            let rep = passed(verify_ses(p, n).map_err(err)?)?;
            largest = largest.max(start.elapsed());
            let want = match (p, n) {
                (2, 3) => Some("21"),
                (3, 2) => Some("8"),
                _ => None,
            };
            if let Some(want) = want {
                let got = computed(&rep, "rank A''_{n-1}");
                ensure(got == want, || format!("rank A'' at p={p} n={n} is {got}"))?;
            }
        }
    }
    ensure(largest < Duration::from_secs(60), || {
        format!("slowest instance took {largest:?}")
    })?;
    Ok(format!(
        "both rows exact, squares commute; rank A'' 21 and 8; slowest {largest:.2?}"
    ))
}

fn golden_values() -> Outcome {
    let a = ElementaryBurnside::new(2, 2).map_err(err)?;
    let t1 = a.t_image(a.subspace(0)).map_err(err)?;
    let mut want = vec![0i64; 16];
    for (i, c) in [(1, 1), (3, -1), (5, -1), (7, -1), (12, 2)] {
        want[i - 1] = c;
    }
    ensure(t1 == want, || format!("t(e_1) = {t1:?}"))?;
    let pairs = a.a_double_prime_basis();
    ensure(pairs == [(3, 2), (5, 4), (7, 6)], || {
        format!("A'' pairs {pairs:?}")
    })?;
    let r = ElementaryReps::for_burnside(&a);
    let n = kernel_lattice(&r.f_matrix(&a).map_err(err)?).rank();
    let n_rel = kernel_lattice(&r.f_prime_matrix(&a).map_err(err)?).rank();
    ensure((n, n_rel) == (8, 4), || {
        format!("kernel ranks {n}, {n_rel}")
    })?;
    let dot = lattice_dot(&a, None).map_err(err)?;
    ensure(dot == lattice_dot(&a, None).map_err(err)?, || {
        "DOT differs between runs".into()
    })?;
    ensure(dot == GOLDEN_DOT, || {
        "DOT differs from the golden file".into()
    })?;
    Ok("t(e_1), A''_1 pairs (e_4,e_3) (e_6,e_5) (e_8,e_7), N rank 8, N' rank 4, DOT golden".into())
}

fn conjecture() -> Outcome {
    let mut seen = Vec::new();
    for (p, n) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        let rep = passed(verify_conjecture(p, n).map_err(err)?)?;
        for side in ["induced sum ⊆ N'", "N' ⊆ induced sum"] {
            ensure(computed(&rep, side) == "true", || {
                format!("{side} at p={p} n={n}")
            })?;
        }
        seen.push(format!("({p},{n}) rank {}", computed(&rep, "rank N'")));
    }
    Ok(format!(
        "equality and both containments for {}",
        seen.join(", ")
    ))
}

fn cyclic_iso() -> Outcome {
    for p in [2, 3] {
        for k in 1..=3 {
            passed(verify_cyclic(p, k).map_err(err)?)?;
        }
    }
    Ok("f' unimodular of size kp+1, kp+2 irreducibles, δ = 0 on images".into())
}

fn classical() -> Outcome {
    for p in [2, 3, 5] {
        passed(verify_classical_kernel(p).map_err(err)?)?;
    }
    Ok("N(Z_p x Z_p) rank 1, saturated span of the generator, p in {2,3,5}".into())
}

fn oracle() -> Outcome {
    let mut families = Vec::new();
    for p in [2, 3] {
        for n in 1..=3 {
            families.push(GroupFamily::ElementaryAbelian { p, n });
        }
        for k in 1..=3 {
            families.push(GroupFamily::CyclicCrossZp { p, k });
        }
    }
    for fam in &families {
        passed(verify_decomposition(*fam).map_err(err)?)?;
    }
    Ok(format!(
        "{} families, every (label, irreducible) pair",
        families.len()
    ))
}

fn induction_restriction() -> Result<usize, String> {
    let mut count = 0;
    for n in 1..=3 {
        let a = ElementaryBurnside::new(2, n).map_err(err)?;
        for rank in 0..=a.ambient_dim() {
            for sq in subquotients_of_rank(&a, rank) {
                let labels = a.interval(sq.lower(), sq.upper());
                let ind = a.induce_matrix(&sq).map_err(err)?;
                ensure(snf(&ind).rank() == labels.len(), || {
                    format!("induction from {sq:?} not injective")
                })?;
                let index = 2i64.pow(sq.upper().codim() as u32);
                let zero = burnside_core::gfp::Subspace::zero(a.field(), a.ambient_dim());
                let target = a.interval(&zero, sq.upper());
                for (r, &d) in labels.iter().enumerate() {
                    let mut x = vec![0i64; labels.len()];
                    x[r] = 1;
                    let up: BurnsideElement = a.induce(&sq, &x).map_err(err)?;
                    let down = a.restrict(sq.upper(), &up).map_err(err)?;
                    let mut want = vec![0i64; target.len()];
                    want[target.iter().position(|&j| j == d).expect("D lies below L")] = index;
                    ensure(down == want, || format!("Res Ind on {sq:?} label {d}"))?;
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

fn lemma_agreement(rng: &mut StdRng) -> Result<usize, String> {
    let mut exact_seen = 0;
    for case in 0..100 {
        let n = rng.random_range(2..=6);
        let a = rng.random_range(1..n);
        let (alpha, beta) = common::random_exact_triple(rng, n, a);
        let (alpha, beta, exact) = match case % 4 {
            0 => (alpha, beta, Some(true)),
            1 => {
                // doubling a row leaves torsion in the cokernel
                let mut rows = common::to_i64_rows(&alpha);
                let r = rng.random_range(0..a);
                rows[r].iter_mut().for_each(|x| *x *= 2);
                (common::mat(&rows, n), beta, Some(false))
            }
            2 => {
                let mut rows = common::to_i64_rows(&beta);
                rows.iter_mut().for_each(|r| r[0] *= 3);
                (alpha, common::mat(&rows, n - a), Some(false))
            }
            _ => {
                let alpha = common::mat(&common::random_matrix(rng, a, n, 2), n);
                let beta = common::mat(&common::random_matrix(rng, n, n - a, 2), n - a);
                (alpha, beta, None)
            }
        };
        let rep = check_short_exact(&alpha, &beta).map_err(err)?;
        ensure(rep.consistent(), || {
            format!("case {case}: lemma route disagrees with direct exactness")
        })?;
        if let Some(want) = exact {
            ensure(rep.exact_direct() == want, || {
                format!("case {case}: exactness {}", rep.exact_direct())
            })?;
        }
        exact_seen += rep.exact_direct() as usize;
    }
    Ok(exact_seen)
}

fn normal_forms(rng: &mut StdRng) -> Result<usize, String> {
    let cases = 600;
    for case in 0..cases {
        let rows = rng.random_range(1..=6);
        let cols = rng.random_range(1..=6);
        let m = common::random_matrix(rng, rows, cols, 5);
        let im = common::mat(&m, cols);
        let h = hnf(&im);
        let s = snf(&im);
        let rank = common::minor_rank(&m, cols);
        ensure(
            h.rank() == rank && s.rank() == rank && common::rational_rank(&m, cols) == rank,
            || {
                format!(
                    "case {case}: ranks hnf {} snf {} minors {rank}",
                    h.rank(),
                    s.rank()
                )
            },
        )?;
        ensure(common::is_hermite(h.basis()), || {
            format!("case {case}: HNF shape")
        })?;
        let (u, _) = common::random_unimodular(rng, rows, 8);
        let um = common::mat(&common::mul(&u, &m, cols), cols);
        ensure(hnf(&um) == h, || {
            format!("case {case}: HNF not invariant under GL_n(Z)")
        })?;
        let mut prod = BigInt::from(1);
        for k in 1..=rank {
            prod *= &s.diagonal[k - 1];
            ensure(prod == common::determinantal_divisor(&m, cols, k), || {
                format!("case {case}: d_1..d_{k} vs determinantal divisor")
            })?;
        }
        for i in 0..rows {
            ensure(h.member(im.row(i)).map_err(err)?, || {
                format!("case {case}: row {i} not in its HNF")
            })?;
        }
    }
    Ok(cases)
}

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let sqs = induction_restriction()?;
    let exact = lemma_agreement(&mut rng)?;
    let cases = normal_forms(&mut rng)?;
    Ok(format!(
        "{sqs} subquotients injective with Res∘Ind = [G~:L]; 100 triples agree ({exact} exact); {cases} HNF/SNF cases"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("rank formulas", Duration::from_secs(5), rank_formulas),
        (
            "exact sequence diagram",
            Duration::from_secs(360),
            ses_diagram,
        ),
        ("golden values", Duration::from_secs(5), golden_values),
        ("conjecture instances", Duration::from_secs(300), conjecture),
        ("cyclic isomorphism", Duration::from_secs(5), cyclic_iso),
        ("classical kernel", Duration::from_secs(5), classical),
        ("oracle equivalence", Duration::from_secs(120), oracle),
        ("property suites", Duration::from_secs(300), property_suites),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took <= *limit {
                Ok(msg)
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {} {name} [{took:.2?}]: {msg}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL {} {name} [{took:.2?}]: {msg}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
