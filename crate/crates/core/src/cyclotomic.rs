//! Exact arithmetic in `Z[x]/Φ_m(x)` for evaluating character sums.
//!
//! Sums of roots of unity are accumulated in the group ring `Z[C_m]`
//! (exponents mod `m`) and only reduced modulo `Φ_m` at the end.

/// Coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: usize) -> Vec<i64> {
    assert!(m >= 1);
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut poly = vec![0i64; m + 1];
    poly[0] = -1;
    poly[m] = 1;
    for d in (1..m).filter(|&d| m.is_multiple_of(d)) {
        poly = divide_monic(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// A sum `Σ c_j ζ_m^j`, stored by exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSum {
    m: usize,
    coeffs: Vec<i128>,
}

impl RootSum {
    pub fn zero(m: usize) -> Self {
        RootSum {
            m,
            coeffs: vec![0; m],
        }
    }

    /// Adds `c · ζ^j`.
    pub fn add_root(&mut self, j: i64, c: i128) {
        let j = j.rem_euclid(self.m as i64) as usize;
        self.coeffs[j] += c;
    }

    pub fn add_assign(&mut self, other: &RootSum) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn scale(&mut self, c: i128) {
        for a in self.coeffs.iter_mut() {
            *a *= c;
        }
    }

    /// Complex conjugate: `ζ^j ↦ ζ^{-j}`.
    pub fn conj(&self) -> RootSum {
        let mut out = RootSum::zero(self.m);
        for (j, &c) in self.coeffs.iter().enumerate() {
            out.add_root(-(j as i64), c);
        }
        out
    }

    pub fn mul(&self, other: &RootSum) -> RootSum {
        let mut out = RootSum::zero(self.m);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out.coeffs[(i + j) % self.m] += a * b;
                }
            }
        }
        out
    }

    /// Remainder modulo `Φ_m`, degree below `φ(m)`.
    pub fn reduce(&self) -> Vec<i128> {
        let phi: Vec<i128> = cyclotomic_polynomial(self.m)
            .into_iter()
            .map(i128::from)
            .collect();
        let deg = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for i in (deg..rem.len()).rev() {
            let c = rem[i];
            if c != 0 {
                for (j, &pj) in phi.iter().enumerate() {
                    rem[i - deg + j] -= c * pj;
                }
            }
        }
        rem.truncate(deg);
        rem
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i128> {
        let r = self.reduce();
        r[1..].iter().all(|&c| c == 0).then(|| r[0])
    }
}
