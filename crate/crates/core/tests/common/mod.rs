//! Independent oracles shared by the property suites and the acceptance
//! gate. Nothing here calls into the elimination code under test.
#![allow(dead_code, clippy::needless_range_loop)]

use burnside_core::intlat::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

pub fn to_i64_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("small entry")).collect())
        .collect()
}

pub fn mat(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_i64_rows(rows, cols).unwrap()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of all `k × k` minors, the `k`-th determinantal divisor.
pub fn determinantal_divisor(m: &[Vec<i64>], cols: usize, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in combinations(m.len(), k) {
        for cs in combinations(cols, k) {
            let minor: Vec<Vec<i128>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                .collect();
            g = g.gcd(&BigInt::from(det(&minor)));
        }
    }
    g
}

/// Rank as the largest `k` with a nonzero `k × k` minor.
pub fn minor_rank(m: &[Vec<i64>], cols: usize) -> usize {
    (1..=m.len().min(cols))
        .rev()
        .find(|&k| !determinantal_divisor(m, cols, k).is_zero())
        .unwrap_or(0)
}

/// Rank over `Q` by rational Gaussian elimination on `i128` fractions.
pub fn rational_rank(m: &[Vec<i64>], cols: usize) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let (x, y) = (a[rank][c], a[i][c]);
                for j in 0..cols {
                    a[i][j] = a[i][j] * x - a[rank][j] * y;
                }
                let g = a[i].iter().fold(0i128, |g, &v| num_integer::gcd(g, v));
                if g > 1 {
                    a[i].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A random unimodular `n × n` matrix and its inverse, as a product of
/// elementary row operations.
pub fn random_unimodular(
    rng: &mut impl Rng,
    n: usize,
    steps: usize,
) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    let mut inv = u.clone();
    if n < 2 {
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.random_range(0..3) {
            0 => {
                // row_i += c row_j on U; inverse gets col_j -= c col_i
                let c = rng.random_range(-2..=2);
                for k in 0..n {
                    u[i][k] += c * u[j][k];
                }
                for row in inv.iter_mut() {
                    row[j] -= c * row[i];
                }
            }
            1 => {
                u.swap(i, j);
                for row in inv.iter_mut() {
                    row.swap(i, j);
                }
            }
            _ => {
                u[i].iter_mut().for_each(|x| *x = -*x);
                for row in inv.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
    }
    (u, inv)
}

pub fn mul(a: &[Vec<i64>], b: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum())
                .collect()
        })
        .collect()
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| rng.random_range(-bound..=bound))
                .collect()
        })
        .collect()
}

/// Upper echelon, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`, no zero rows.
pub fn is_hermite(m: &IntMatrix) -> bool {
    let mut last: Option<usize> = None;
    let mut pivots = Vec::new();
    for i in 0..m.nrows() {
        let row = m.row(i);
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if last.is_some_and(|l| c <= l) || !row[c].is_positive() {
            return false;
        }
        last = Some(c);
        pivots.push((i, c));
    }
    pivots.iter().all(|&(i, c)| {
        let p = m.get(i, c);
        (0..i).all(|r| {
            let x = m.get(r, c);
            !x.is_negative() && x < p
        })
    })
}

/// A random exact triple `Z^a → Z^n → Z^{n-a}`: rows of `U` and columns
/// of `U^{-1}`.
pub fn random_exact_triple(rng: &mut impl Rng, n: usize, a: usize) -> (IntMatrix, IntMatrix) {
    let (u, inv) = random_unimodular(rng, n, 4 * n + 4);
    let alpha: Vec<Vec<i64>> = u[..a].to_vec();
    let beta: Vec<Vec<i64>> = inv.iter().map(|r| r[a..].to_vec()).collect();
    (mat(&alpha, n), mat(&beta, n - a))
}
