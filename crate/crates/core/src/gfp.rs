//! Linear algebra over the prime field GF(p).
//!
//! Subspaces are kept in reduced row echelon form, which makes equality and
//! hashing structural. The module-wide order on subspaces is
//! `(dimension, sorted element list)` with residues compared as integers; it
//! is the order used to label Burnside basis elements `e_1, e_2, ...`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, Error, Result};

/// Upper bounds on the instance size enumerated exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_p: u32,
    pub max_ambient_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_p: 13,
            max_ambient_dim: 6,
        }
    }
}

pub const MAX_AMBIENT_DIM_ENV: &str = "BURNSIDE_MAX_AMBIENT_DIM";

impl Caps {
    /// Default caps with the ambient dimension overridable through
    /// `BURNSIDE_MAX_AMBIENT_DIM`.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Ok(raw) = std::env::var(MAX_AMBIENT_DIM_ENV) {
            caps.max_ambient_dim = raw.trim().parse().map_err(|_| {
                Error::Domain(format!("{MAX_AMBIENT_DIM_ENV}={raw:?} is not a dimension"))
            })?;
        }
        Ok(caps)
    }

    pub fn check_ambient_dim(&self, m: usize) -> Result<()> {
        if m > self.max_ambient_dim {
            return Err(Error::Resource(format!(
                "ambient dimension {m} exceeds cap {}",
                self.max_ambient_dim
            )));
        }
        Ok(())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        Self::with_caps(p, &Caps::default())
    }

    pub fn with_caps(p: u32, caps: &Caps) -> Result<Self> {
        if !is_prime(p) {
            return domain(format!("{p} is not prime"));
        }
        if p > caps.max_p {
            return Err(Error::Resource(format!(
                "prime {p} exceeds cap {}",
                caps.max_p
            )));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        let mut result = 1u32;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// All vectors of `GF(p)^m` in lexicographic order.
    pub fn all_vectors(&self, m: usize) -> Vec<FpVector> {
        let mut out = vec![Vec::new()];
        for _ in 0..m {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..self.p).map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// Residue vector; every entry lies in `[0, p)`.
pub type FpVector = Vec<u32>;

/// The distinguished vector `(0, ..., 0, 1)` of `GF(p)^m`.
pub fn distinguished(m: usize) -> FpVector {
    let mut e = vec![0; m];
    if m > 0 {
        e[m - 1] = 1;
    }
    e
}

/// Gaussian binomial coefficient: the number of `k`-dimensional subspaces
/// of `GF(p)^n`.
pub fn gaussian_binomial(k: usize, n: usize, p: u32) -> Result<u64> {
    if k > n {
        return domain(format!("gaussian_binomial: k = {k} exceeds n = {n}"));
    }
    let overflow = || Error::Resource(format!("G({k},{n}) at p={p} overflows u64"));
    let p = p as u128;
    let mut acc: u128 = 1;
    for j in 1..=k {
        let num = p.checked_pow((n - j + 1) as u32).ok_or_else(overflow)? - 1;
        let den = p.pow(j as u32) - 1;
        // the partial product is G(j, n), an integer
        acc = acc.checked_mul(num).ok_or_else(overflow)?;
        debug_assert_eq!(acc % den, 0);
        acc /= den;
    }
    u64::try_from(acc).map_err(|_| overflow())
}

/// A subspace of `GF(p)^m` in reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient_dim: usize,
    rows: Vec<FpVector>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write_vector(f, row, self.field.p)?;
        }
        write!(f, ">")
    }
}

fn write_vector(f: &mut fmt::Formatter<'_>, v: &[u32], p: u32) -> fmt::Result {
    // single digits read like the usual 010, 110 notation
    if p <= 10 {
        for c in v {
            write!(f, "{c}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn check_lengths(vectors: &[FpVector], m: usize) -> Result<()> {
    if let Some(bad) = vectors.iter().find(|v| v.len() != m) {
        return domain(format!(
            "vector of length {} in ambient dimension {m}",
            bad.len()
        ));
    }
    Ok(())
}

/// Row-reduces `vectors` to the reduced echelon basis of their span.
pub fn canonicalize(field: PrimeField, vectors: &[FpVector], m: usize) -> Result<Subspace> {
    check_lengths(vectors, m)?;
    let mut rows: Vec<FpVector> = vectors
        .iter()
        .map(|v| v.iter().map(|&c| c % field.p).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for c in rows[rank].iter_mut() {
            *c = field.mul(*c, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (c, &pc) in row.iter_mut().zip(&pivot_row) {
                *c = field.sub(*c, field.mul(factor, pc));
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    Ok(Subspace {
        field,
        ambient_dim: m,
        rows,
    })
}

impl Subspace {
    pub fn zero(field: PrimeField, m: usize) -> Self {
        Subspace {
            field,
            ambient_dim: m,
            rows: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, m: usize) -> Self {
        let rows = (0..m)
            .map(|i| {
                let mut v = vec![0; m];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            field,
            ambient_dim: m,
            rows,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.rows.len()
    }

    /// The echelon basis.
    pub fn rows(&self) -> &[FpVector] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&c| c != 0).expect("rows are nonzero"))
            .collect()
    }

    /// Number of elements, `p^dim`.
    pub fn order(&self) -> u64 {
        (self.field.p as u64).pow(self.dim() as u32)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return domain(format!(
                "vector of length {} tested against ambient dimension {}",
                v.len(),
                self.ambient_dim
            ));
        }
        let f = self.field;
        let mut w: FpVector = v.iter().map(|&c| c % f.p).collect();
        for (row, piv) in self.rows.iter().zip(self.pivots()) {
            let factor = w[piv];
            if factor != 0 {
                for (c, &rc) in w.iter_mut().zip(row) {
                    *c = f.sub(*c, f.mul(factor, rc));
                }
            }
        }
        Ok(w.iter().all(|&c| c == 0))
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim
            && other.dim() <= self.dim()
            && other.rows.iter().all(|r| self.contains(r).unwrap_or(false))
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim || self.field != other.field {
            return domain(format!(
                "ambient mismatch: GF({})^{} vs GF({})^{}",
                self.field.p, self.ambient_dim, other.field.p, other.ambient_dim
            ));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let mut vs = self.rows.clone();
        vs.extend(other.rows.iter().cloned());
        canonicalize(self.field, &vs, self.ambient_dim)
    }

    /// `self + span{v}`.
    pub fn extend_by(&self, v: &[u32]) -> Result<Subspace> {
        let mut vs = self.rows.clone();
        vs.push(v.to_vec());
        canonicalize(self.field, &vs, self.ambient_dim)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        self.annihilator()
            .sum(&other.annihilator())
            .map(|s| s.annihilator())
    }

    pub fn sum_intersect(&self, other: &Subspace) -> Result<(Subspace, Subspace)> {
        Ok((self.sum(other)?, self.intersection(other)?))
    }

    /// `{w : <w, v> = 0 for all v in self}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let f = self.field;
        let pivots = self.pivots();
        let mut vs = Vec::new();
        for free in (0..self.ambient_dim).filter(|c| !pivots.contains(c)) {
            let mut w = vec![0; self.ambient_dim];
            w[free] = 1;
            for (row, &piv) in self.rows.iter().zip(&pivots) {
                w[piv] = f.sub(0, row[free]);
            }
            vs.push(w);
        }
        canonicalize(f, &vs, self.ambient_dim).expect("lengths agree")
    }

    /// All elements, sorted lexicographically.
    pub fn elements(&self) -> Vec<FpVector> {
        let f = self.field;
        let coeffs = f.all_vectors(self.dim());
        let mut out: Vec<FpVector> = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![0; self.ambient_dim];
                for (&a, row) in c.iter().zip(&self.rows) {
                    if a != 0 {
                        for (x, &r) in v.iter_mut().zip(row) {
                            *x = f.add(*x, f.mul(a, r));
                        }
                    }
                }
                v
            })
            .collect();
        out.sort();
        out
    }

    /// Sort key realizing the canonical order.
    pub fn order_key(&self) -> (usize, Vec<FpVector>) {
        (self.dim(), self.elements())
    }

    /// Projective points lying in this subspace, in projective order.
    pub fn projective_points(&self) -> Vec<ProjectivePoint> {
        let mut pts: Vec<ProjectivePoint> = self
            .elements()
            .into_iter()
            .filter(|v| v.iter().any(|&c| c != 0))
            .map(|v| ProjectivePoint::normalize(self.field, &v))
            .collect();
        pts.sort();
        pts.dedup();
        pts
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<FpVector> {
        if !self.contains(v).ok()? {
            return None;
        }
        // in reduced echelon form the coordinate of row i is v[pivot_i]
        Some(self.pivots().iter().map(|&c| v[c] % self.field.p).collect())
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field, self.ambient_dim)
            .cmp(&(other.field, other.ambient_dim))
            .then_with(|| self.order_key().cmp(&other.order_key()))
    }
}

/// Nonzero vector scaled so its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    rep: FpVector,
}

impl ProjectivePoint {
    /// Panics on the zero vector.
    pub fn normalize(field: PrimeField, v: &[u32]) -> Self {
        let lead = *v
            .iter()
            .find(|&&c| c % field.p != 0)
            .expect("zero vector has no projective point");
        let inv = field.inv(lead);
        ProjectivePoint {
            rep: v.iter().map(|&c| field.mul(c, inv)).collect(),
        }
    }

    pub fn rep(&self) -> &[u32] {
        &self.rep
    }
}

pub fn projective_points(field: PrimeField, m: usize) -> Vec<ProjectivePoint> {
    Subspace::full(field, m).projective_points()
}

/// All `k`-dimensional subspaces of `GF(p)^m`, in canonical order.
pub fn enumerate_subspaces(field: PrimeField, m: usize, k: usize) -> Result<Vec<Subspace>> {
    if k > m {
        return domain(format!("no {k}-dimensional subspaces of GF(p)^{m}"));
    }
    let mut out = Vec::new();
    for pivots in combinations(m, k) {
        // free slots: (row, column) right of the row pivot, not a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &pc)| {
                let pivots = &pivots;
                ((pc + 1)..m)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        for assignment in field.all_vectors(free.len()) {
            let mut rows = vec![vec![0u32; m]; k];
            for (i, &pc) in pivots.iter().enumerate() {
                rows[i][pc] = 1;
            }
            for (&(i, c), &a) in free.iter().zip(&assignment) {
                rows[i][c] = a;
            }
            out.push(Subspace {
                field,
                ambient_dim: m,
                rows,
            });
        }
    }
    out.sort_by_cached_key(|s| s.order_key());
    Ok(out)
}

/// Every subspace of `GF(p)^m`, dimension by dimension, in canonical order.
pub fn all_subspaces(field: PrimeField, m: usize) -> Vec<Subspace> {
    (0..=m)
        .flat_map(|k| enumerate_subspaces(field, m, k).expect("k <= m"))
        .collect()
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Brute force: canonicalize every k-tuple of vectors and keep the
    /// distinct k-dimensional spans.
    fn brute_force_count(m: usize, k: usize, p: u32) -> usize {
        let f = gf(p);
        let vs = f.all_vectors(m);
        let mut seen = BTreeSet::new();
        let mut tuple = vec![0usize; k];
        loop {
            let chosen: Vec<FpVector> = tuple.iter().map(|&i| vs[i].clone()).collect();
            let s = canonicalize(f, &chosen, m).unwrap();
            if s.dim() == k {
                seen.insert(s.rows().to_vec());
            }
            let mut i = 0;
            loop {
                if i == k {
                    return seen.len().max(if k == 0 { 1 } else { 0 });
                }
                tuple[i] += 1;
                if tuple[i] < vs.len() {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(0, 4, 3).unwrap(), 1);
        assert_eq!(brute_force_count(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(1, 3, 2).unwrap(), 7);
        assert_eq!(brute_force_count(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(2, 4, 3).unwrap(), 130);
        assert!(matches!(gaussian_binomial(3, 2, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn primes_and_caps() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(matches!(PrimeField::new(17), Err(Error::Resource(_))));
        let caps = Caps {
            max_p: 17,
            ..Caps::default()
        };
        assert!(PrimeField::with_caps(17, &caps).is_ok());
    }

    #[test]
    fn canonicalize_examples() {
        let f = gf(2);
        let z = canonicalize(f, &[], 3).unwrap();
        assert_eq!(z.dim(), 0);
        let s = canonicalize(f, &[vec![1, 1, 0]], 3).unwrap();
        assert_eq!(s.rows(), &[vec![1, 1, 0]]);
        let s = canonicalize(f, &[vec![0, 1, 1], vec![0, 1, 0]], 3).unwrap();
        assert_eq!(s.rows(), &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(canonicalize(f, &[vec![1, 0], vec![1, 0, 0]], 3).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let lines = enumerate_subspaces(gf(2), 3, 1).unwrap();
        assert_eq!(lines.len(), 7);
        let lines3 = enumerate_subspaces(gf(3), 2, 1).unwrap();
        assert_eq!(lines3.len(), gaussian_binomial(1, 2, 3).unwrap() as usize);
        assert_eq!(lines3.len(), 4);
        let zero = enumerate_subspaces(gf(5), 3, 0).unwrap();
        assert_eq!(zero, vec![Subspace::zero(gf(5), 3)]);
        // lines of GF(2)^3 come out as 001, 010, 011, ..., 111
        let reps: Vec<_> = lines.iter().map(|l| l.rows()[0].clone()).collect();
        assert_eq!(reps[0], vec![0, 0, 1]);
        assert_eq!(reps[6], vec![1, 1, 1]);
    }

    #[test]
    fn plane_order_matches_lattice_labels() {
        let planes = enumerate_subspaces(gf(2), 3, 2).unwrap();
        // the fourth plane {000, 010, 100, 110} is the least avoiding (0,0,1)
        assert_eq!(planes[3].rows(), &[vec![1, 0, 0], vec![0, 1, 0]]);
        assert!(planes[..3].iter().all(|p| p.contains(&[0, 0, 1]).unwrap()));
    }

    #[test]
    fn contains_examples() {
        let f = gf(2);
        let s = canonicalize(f, &[vec![0, 1, 0], vec![0, 0, 1]], 3).unwrap();
        assert!(s.contains(&[0, 0, 0]).unwrap());
        assert!(s.contains(&[0, 1, 1]).unwrap());
        assert!(!s.contains(&[1, 0, 0]).unwrap());
        assert!(!Subspace::zero(f, 3).contains(&distinguished(3)).unwrap());
        assert!(s.contains(&[0, 1]).is_err());
    }

    #[test]
    fn sum_intersect_examples() {
        let f = gf(2);
        let a = canonicalize(f, &[vec![0, 1, 0]], 3).unwrap();
        let b = canonicalize(f, &[vec![0, 0, 1]], 3).unwrap();
        let (s, i) = a.sum_intersect(&b).unwrap();
        assert_eq!(s.rows(), &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(i.dim(), 0);
        assert_eq!(a.sum_intersect(&a).unwrap(), (a.clone(), a.clone()));
        let l1 = canonicalize(f, &[vec![1, 0]], 2).unwrap();
        let l2 = canonicalize(f, &[vec![1, 1]], 2).unwrap();
        let (s, i) = l1.sum_intersect(&l2).unwrap();
        assert_eq!(s, Subspace::full(f, 2));
        assert_eq!(i, Subspace::zero(f, 2));
        assert!(a.sum(&l1).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let f = gf(2);
        assert_eq!(Subspace::zero(f, 3).annihilator(), Subspace::full(f, 3));
        assert_eq!(Subspace::full(f, 3).annihilator(), Subspace::zero(f, 3));
        let l = canonicalize(f, &[vec![0, 1, 0]], 3).unwrap();
        assert_eq!(l.annihilator().rows(), &[vec![1, 0, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn projective_point_counts() {
        assert_eq!(projective_points(gf(7), 1).len(), 1);
        assert_eq!(projective_points(gf(2), 3).len(), 7);
        assert_eq!(projective_points(gf(3), 2).len(), 4);
        let pt = ProjectivePoint::normalize(gf(3), &[0, 2, 1]);
        assert_eq!(pt.rep(), &[0, 1, 2]);
    }

    #[test]
    fn coordinates_roundtrip() {
        let f = gf(3);
        let s = canonicalize(f, &[vec![1, 2, 0, 1], vec![0, 1, 1, 2]], 4).unwrap();
        for v in s.elements() {
            let c = s.coordinates(&v).unwrap();
            let mut w = vec![0; 4];
            for (a, row) in c.iter().zip(s.rows()) {
                for (x, r) in w.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(*a, *r));
                }
            }
            assert_eq!(w, v);
        }
        assert!(s.coordinates(&[0, 0, 0, 1]).is_none());
    }
}
