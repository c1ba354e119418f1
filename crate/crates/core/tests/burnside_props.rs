use std::collections::BTreeMap;

use burnside_core::burnside::{BurnsideElement, ElementaryBurnside};
use burnside_core::gfp::{all_subspaces, canonicalize, gaussian_binomial, FpVector, Subspace};
use burnside_core::intlat::{hnf, kernel_lattice, snf, IntMatrix};
use burnside_core::repq::ElementaryReps;
use burnside_core::verify::subquotients_of_rank;
use proptest::prelude::*;

fn instances() -> Vec<ElementaryBurnside> {
    [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
        .into_iter()
        .map(|(p, n)| ElementaryBurnside::new(p, n).unwrap())
        .collect()
}

fn unit(a: &ElementaryBurnside, i: usize) -> BurnsideElement {
    let mut coeffs = vec![0; a.rank()];
    coeffs[i] = 1;
    BurnsideElement {
        family: a.family(),
        coeffs,
    }
}

#[test]
fn relative_grades_count() {
    for a in instances() {
        let (p, n) = (a.p(), a.n());
        for k in 0..=n {
            let want = (p as u64).pow(k as u32) * gaussian_binomial(k, n, p).unwrap();
            assert_eq!(a.relative_grade(k).len() as u64, want, "p={p} n={n} k={k}");
        }
        assert!(a.relative_grade(n + 1).is_empty());
    }
}

#[test]
fn graphs_biject_with_relative_labels() {
    for a in instances() {
        let f = a.field();
        let mut hit = BTreeMap::new();
        for k in all_subspaces(f, a.n()) {
            let choices = (f.p() as usize).pow(k.dim() as u32);
            for code in 0..choices {
                let rho: Vec<u32> = (0..k.dim())
                    .map(|i| (code / (f.p() as usize).pow(i as u32)) as u32 % f.p())
                    .collect();
                let l = a.pair_to_subspace(&k, &rho).unwrap();
                assert!(!l.contains(&a.distinguished()).unwrap());
                assert_eq!(a.subspace_to_pair(&l).unwrap(), (k.clone(), rho.clone()));
                *hit.entry(a.index_of(&l).unwrap()).or_insert(0) += 1;
            }
        }
        assert_eq!(hit.keys().copied().collect::<Vec<_>>(), a.relative());
        assert!(hit.values().all(|&c| c == 1));
    }
}

/// `[G̃/D]|_L` by listing the cosets of `D` and the `L`-orbits on them.
fn restrict_by_orbits(a: &ElementaryBurnside, l: &Subspace, d: &Subspace) -> Vec<i64> {
    let f = a.field();
    let d_elems = d.elements();
    let coset = |v: &FpVector| -> Vec<FpVector> {
        let mut c: Vec<FpVector> = d_elems
            .iter()
            .map(|x| x.iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect())
            .collect();
        c.sort();
        c
    };
    let l_elems = l.elements();
    let mut seen = std::collections::BTreeSet::new();
    let zero = Subspace::zero(f, a.ambient_dim());
    let target = a.interval(&zero, l);
    let mut out = vec![0i64; target.len()];
    for v in f.all_vectors(a.ambient_dim()) {
        let c = coset(&v);
        if !seen.insert(c.clone()) {
            continue;
        }
        let stab: Vec<FpVector> = l_elems
            .iter()
            .filter(|x| coset(&x.iter().zip(&v).map(|(&a, &b)| f.add(a, b)).collect()) == c)
            .cloned()
            .collect();
        for x in &l_elems {
            let moved: FpVector = x.iter().zip(&v).map(|(&a, &b)| f.add(a, b)).collect();
            seen.insert(coset(&moved));
        }
        let s = canonicalize(f, &stab, a.ambient_dim()).unwrap();
        let j = a.index_of(&s).unwrap();
        out[target.iter().position(|&t| t == j).unwrap()] += 1;
    }
    out
}

#[test]
fn restriction_matches_orbit_count() {
    for (p, n) in [(2, 1), (2, 2), (3, 1)] {
        let a = ElementaryBurnside::new(p, n).unwrap();
        for l in a.basis() {
            for (i, d) in a.basis().iter().enumerate() {
                assert_eq!(
                    a.restrict(l, &unit(&a, i)).unwrap(),
                    restrict_by_orbits(&a, l, d),
                    "L={l} D={d}"
                );
            }
        }
    }
}

#[test]
fn t_has_free_cokernel_and_lands_in_the_kernel() {
    for a in instances() {
        let t = a.t_matrix().unwrap();
        assert!(snf(&t).torsion_free_cokernel());
        let f = ElementaryReps::for_burnside(&a).f_matrix(&a).unwrap();
        assert!(t.mul(&f).unwrap().is_zero());
        let cols = a.t_domain();
        for (i, &l) in cols.iter().enumerate() {
            assert_eq!(t.get(i, l), &1.into());
            assert!((0..l).all(|j| t.get(i, j) == &0.into()));
        }
    }
}

#[test]
fn induction_commutes_with_linearization() {
    for n in 1..=3 {
        let a = ElementaryBurnside::new(2, n).unwrap();
        let reps = ElementaryReps::for_burnside(&a);
        let f = reps.f_matrix(&a).unwrap();
        for rank in 1..=3.min(a.ambient_dim()) {
            let q = ElementaryBurnside::over(a.field(), rank);
            let qreps = ElementaryReps::for_burnside(&q);
            let fq = qreps.f_matrix(&q).unwrap();
            for sq in subquotients_of_rank(&a, rank) {
                let chart = a.chart(&sq, &q).unwrap();
                let ind = chart.induce_matrix(a.rank());
                let ind_r = reps.induce_rep_matrix(&chart, &qreps).unwrap();
                assert_eq!(ind.mul(&f).unwrap(), fq.mul(&ind_r).unwrap(), "{sq:?}");
                assert_eq!(snf(&ind).rank(), q.rank());
            }
        }
    }
}

#[test]
fn relative_rep_basis_spans_ker_delta() {
    for a in instances() {
        let r = ElementaryReps::for_burnside(&a);
        let delta: Vec<Vec<i64>> = r.delta_values().into_iter().map(|d| vec![d]).collect();
        let ker = kernel_lattice(&IntMatrix::from_i64_rows(&delta, 1).unwrap());
        assert_eq!(hnf(&r.relative_inclusion_matrix().unwrap()), ker);
        for l in a.basis() {
            let d = r.decompose_perm(l);
            assert_eq!(
                r.delta_defect(&d).unwrap() == 0,
                !l.contains(&a.distinguished()).unwrap(),
                "{l}"
            );
        }
    }
}

proptest! {
    #[test]
    fn t_images_are_linearized_to_zero(coeffs in prop::collection::vec(-4i64..=4, 8)) {
        let a = ElementaryBurnside::new(2, 2).unwrap();
        let dom = a.t_domain();
        let mut x = vec![0; a.rank()];
        for (&i, &c) in dom.iter().zip(&coeffs) {
            x[i] = c;
        }
        let tx = a.t_map(&BurnsideElement { family: a.family(), coeffs: x }).unwrap();
        let f = ElementaryReps::for_burnside(&a).f_matrix(&a).unwrap();
        let row = IntMatrix::from_i64_rows(&[tx.coeffs], a.rank()).unwrap();
        prop_assert!(row.mul(&f).unwrap().is_zero());
    }

    #[test]
    fn restriction_is_additive(x in prop::collection::vec(-3i64..=3, 16), y in prop::collection::vec(-3i64..=3, 16), l in 0usize..16) {
        let a = ElementaryBurnside::new(2, 2).unwrap();
        let el = |c: Vec<i64>| BurnsideElement { family: a.family(), coeffs: c };
        let sum: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        let lsub = a.subspace(l).clone();
        let rx = a.restrict(&lsub, &el(x)).unwrap();
        let ry = a.restrict(&lsub, &el(y)).unwrap();
        let rs = a.restrict(&lsub, &el(sum)).unwrap();
        prop_assert_eq!(rs, rx.iter().zip(&ry).map(|(a, b)| a + b).collect::<Vec<_>>());
    }
}
