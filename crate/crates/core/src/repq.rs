//! Rational representation rings of the two group families.
//!
//! Rational irreducibles of an abelian group are Galois orbits of complex
//! characters. A permutation module `Q[G̃/L]` contains an orbit exactly when
//! its characters are trivial on `L`. The relative ring `R(G,H)` sits inside
//! `R(G̃)` as the kernel of the defect functional `δ`, which counts trivial
//! minus faithful summands after restricting to `H`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::burnside::{CyclicBurnside, ElementaryBurnside, GroupFamily, QuotientChart};
use crate::cyclotomic::RootSum;
use crate::error::{domain, Error, Result};
use crate::gfp::{self, FpVector, PrimeField, ProjectivePoint, Subspace};
use crate::intlat::{solve_integer, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RationalIrreducible {
    Trivial,
    /// `F_s` for the projective point `[s]`, of dimension `p - 1`.
    Orbit(ProjectivePoint),
    /// `F_{nu,phi}` of `Z_{p^k} × Z_p`; `nu = 0` only occurs as `F_{0,1}`.
    Cyclic {
        nu: usize,
        phi: u32,
    },
}

impl fmt::Display for RationalIrreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalIrreducible::Trivial => write!(f, "Q"),
            RationalIrreducible::Orbit(pt) => {
                let s: Vec<String> = pt.rep().iter().map(|c| c.to_string()).collect();
                write!(f, "F_[{}]", s.join(","))
            }
            RationalIrreducible::Cyclic { nu, phi } => write!(f, "F_{{{nu},{phi}}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepElement {
    pub family: GroupFamily,
    pub coeffs: Vec<i64>,
}

fn checked_delta(values: &[i64], x: &[i64]) -> Result<i64> {
    if values.len() != x.len() {
        return domain(format!(
            "element has {} coefficients, ring has rank {}",
            x.len(),
            values.len()
        ));
    }
    Ok(values.iter().zip(x).map(|(v, c)| v * c).sum())
}

/// `{irr - δ(irr)[Q]}` over the nontrivial irreducibles, in the given order.
fn kernel_delta_basis(values: &[i64], order: &[usize]) -> Vec<Vec<i64>> {
    order
        .iter()
        .map(|&i| {
            let mut v = vec![0i64; values.len()];
            v[i] = 1;
            v[0] -= values[i];
            v
        })
        .collect()
}

/// Re-expresses each row of `rows` (ambient coordinates) in `basis`.
fn express_rows(rows: &[Vec<i64>], basis: &[Vec<i64>], width: usize) -> Result<IntMatrix> {
    let b = IntMatrix::from_i64_rows(basis, width)?;
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let target: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        let x = solve_integer(&b, &target)?.ok_or_else(|| {
            Error::Consistency(format!(
                "row {r} of f' is not an integer combination of the R' basis"
            ))
        })?;
        out.push(x);
    }
    IntMatrix::from_rows(out, basis.len())
}

fn oracle_multiplicity(ip: &RootSum, norm: &RootSum, order: u64) -> Result<u64> {
    let ip = ip
        .as_integer()
        .ok_or_else(|| Error::Consistency("inner product is not rational".into()))?;
    let norm = norm
        .as_integer()
        .ok_or_else(|| Error::Consistency("orbit norm is not rational".into()))?;
    let order = order as i128;
    if ip % order != 0 || norm % order != 0 || norm == 0 {
        return Err(Error::Consistency(format!(
            "character sums {ip}, {norm} not divisible by |G| = {order}"
        )));
    }
    let (ip, norm) = (ip / order, norm / order);
    if ip < 0 || ip % norm != 0 {
        return Err(Error::Consistency(format!(
            "multiplicity {ip}/{norm} is not a nonnegative integer"
        )));
    }
    Ok((ip / norm) as u64)
}

/// `R(Z_p^m)`: trivial module first, then the orbit modules in projective order.
#[derive(Debug, Clone)]
pub struct ElementaryReps {
    field: PrimeField,
    m: usize,
    irreducibles: Vec<RationalIrreducible>,
    point_index: HashMap<ProjectivePoint, usize>,
}

impl ElementaryReps {
    pub fn new(field: PrimeField, m: usize) -> Self {
        let points = gfp::projective_points(field, m);
        let point_index = points.iter().cloned().zip(1..).collect();
        let mut irreducibles = vec![RationalIrreducible::Trivial];
        irreducibles.extend(points.into_iter().map(RationalIrreducible::Orbit));
        ElementaryReps {
            field,
            m,
            irreducibles,
            point_index,
        }
    }

    pub fn for_burnside(a: &ElementaryBurnside) -> Self {
        Self::new(a.field(), a.ambient_dim())
    }

    fn family(&self) -> GroupFamily {
        GroupFamily::ElementaryAbelian {
            p: self.field.p(),
            n: self.m.saturating_sub(1),
        }
    }

    pub fn irreducibles(&self) -> &[RationalIrreducible] {
        &self.irreducibles
    }

    pub fn rank(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn index_of_point(&self, pt: &ProjectivePoint) -> Option<usize> {
        self.point_index.get(pt).copied()
    }

    pub fn dimension(&self, i: usize) -> u64 {
        match i {
            0 => 1,
            _ => self.field.p() as u64 - 1,
        }
    }

    /// `Q[G̃/L] = [Q] + Σ_{[s] ∈ P(L^⊥)} [F_s]`.
    pub fn decompose_perm(&self, l: &Subspace) -> RepElement {
        let mut coeffs = vec![0i64; self.rank()];
        coeffs[0] = 1;
        for pt in l.annihilator().projective_points() {
            coeffs[self.point_index[&pt]] += 1;
        }
        RepElement {
            family: self.family(),
            coeffs,
        }
    }

    /// Per-irreducible values of `δ`.
    pub fn delta_values(&self) -> Vec<i64> {
        let p = self.field.p() as i64;
        self.irreducibles
            .iter()
            .map(|irr| match irr {
                RationalIrreducible::Orbit(pt) if pt.rep()[self.m - 1] != 0 => -1,
                RationalIrreducible::Orbit(_) => p - 1,
                _ => 1,
            })
            .collect()
    }

    pub fn delta_defect(&self, x: &RepElement) -> Result<i64> {
        checked_delta(&self.delta_values(), &x.coeffs)
    }

    /// `[F_{s'×1}] + [Q]` for `s'` in lexicographic order, then
    /// `[F_{t×0}] - (p-1)[Q]` for `[t]` in projective order.
    pub fn relative_rep_basis(&self) -> Vec<RepElement> {
        let n = self.m - 1;
        let f = self.field;
        let mut order = Vec::new();
        for s in f.all_vectors(n) {
            let mut v = s;
            v.push(1);
            order.push(self.point_index[&ProjectivePoint::normalize(f, &v)]);
        }
        for t in gfp::projective_points(f, n) {
            let mut v = t.rep().to_vec();
            v.push(0);
            order.push(self.point_index[&ProjectivePoint::normalize(f, &v)]);
        }
        kernel_delta_basis(&self.delta_values(), &order)
            .into_iter()
            .map(|coeffs| RepElement {
                family: self.family(),
                coeffs,
            })
            .collect()
    }

    /// Rows: `R'` basis, columns: irreducibles.
    pub fn relative_inclusion_matrix(&self) -> Result<IntMatrix> {
        let rows: Vec<Vec<i64>> = self
            .relative_rep_basis()
            .into_iter()
            .map(|r| r.coeffs)
            .collect();
        IntMatrix::from_i64_rows(&rows, self.rank())
    }

    /// Rows: full Burnside basis, columns: irreducibles.
    pub fn f_matrix(&self, a: &ElementaryBurnside) -> Result<IntMatrix> {
        self.check_burnside(a)?;
        let rows: Vec<Vec<i64>> = a
            .basis()
            .iter()
            .map(|l| self.decompose_perm(l).coeffs)
            .collect();
        IntMatrix::from_i64_rows(&rows, self.rank())
    }

    /// Rows: relative Burnside basis, columns: `R'` basis coordinates.
    pub fn f_prime_matrix(&self, a: &ElementaryBurnside) -> Result<IntMatrix> {
        self.check_burnside(a)?;
        let rows: Vec<Vec<i64>> = a
            .relative()
            .iter()
            .map(|&i| self.decompose_perm(a.subspace(i)).coeffs)
            .collect();
        let basis: Vec<Vec<i64>> = self
            .relative_rep_basis()
            .into_iter()
            .map(|r| r.coeffs)
            .collect();
        express_rows(&rows, &basis, self.rank())
    }

    fn check_burnside(&self, a: &ElementaryBurnside) -> Result<()> {
        if a.field() != self.field || a.ambient_dim() != self.m {
            return domain("Burnside module and representation ring of different groups");
        }
        Ok(())
    }

    fn orbit_characters(&self, i: usize) -> Vec<FpVector> {
        match &self.irreducibles[i] {
            RationalIrreducible::Orbit(pt) => (1..self.field.p())
                .map(|u| pt.rep().iter().map(|&c| self.field.mul(u, c)).collect())
                .collect(),
            _ => vec![vec![0; self.m]],
        }
    }

    /// Multiplicity of irreducible `i` in `Q[G̃/L]` from the character inner
    /// product, evaluated in `Z[ζ_p]`.
    pub fn character_oracle(&self, l: &Subspace, i: usize) -> Result<u64> {
        if l.ambient_dim() != self.m || i >= self.rank() {
            return domain("character_oracle arguments out of range");
        }
        let f = self.field;
        let p = f.p() as usize;
        let order = (p as u64).pow(self.m as u32);
        let index = (order / l.order()) as i128;
        let orbit = self.orbit_characters(i);
        let mut ip = RootSum::zero(p);
        let mut norm = RootSum::zero(p);
        for g in f.all_vectors(self.m) {
            let mut chi_o = RootSum::zero(p);
            for s in &orbit {
                chi_o.add_root(f.dot(s, &g) as i64, 1);
            }
            let conj = chi_o.conj();
            if l.contains(&g)? {
                let mut term = conj.clone();
                term.scale(index);
                ip.add_assign(&term);
            }
            norm.add_assign(&chi_o.mul(&conj));
        }
        oracle_multiplicity(&ip, &norm, order)
    }

    /// `L/C↑ : R(L/C) → R(G̃)` through `chart`. Rows: irreducibles of
    /// `quotient`, columns: irreducibles of `self`.
    pub fn induce_rep_matrix(
        &self,
        chart: &QuotientChart,
        quotient: &ElementaryReps,
    ) -> Result<IntMatrix> {
        let sq = chart.subquotient();
        if quotient.m != sq.rank() {
            return domain("quotient representation ring has the wrong rank");
        }
        let f = self.field;
        let mut m = IntMatrix::zeros(quotient.rank(), self.rank());
        for (col, irr) in self.irreducibles.iter().enumerate() {
            let s: FpVector = match irr {
                RationalIrreducible::Orbit(pt) => pt.rep().to_vec(),
                _ => vec![0; self.m],
            };
            // only characters trivial on C come from L/C
            if sq.lower().rows().iter().any(|c| f.dot(&s, c) != 0) {
                continue;
            }
            let restricted: FpVector = chart.complement().iter().map(|l| f.dot(&s, l)).collect();
            let row = if restricted.iter().all(|&c| c == 0) {
                0
            } else {
                quotient.point_index[&ProjectivePoint::normalize(f, &restricted)]
            };
            m.set(row, col, BigInt::from(1));
        }
        Ok(m)
    }
}

/// `R(Z_{p^k} × Z_p)`: `Q`, `F_{0,1}`, then `F_{nu,phi}` lexicographically.
#[derive(Debug, Clone)]
pub struct CyclicReps {
    p: u32,
    k: usize,
    irreducibles: Vec<RationalIrreducible>,
}

impl CyclicReps {
    pub fn new(p: u32, k: usize) -> Result<Self> {
        if !gfp::is_prime(p) || k == 0 {
            return domain(format!("no cyclic family for p = {p}, k = {k}"));
        }
        let mut irreducibles = vec![
            RationalIrreducible::Trivial,
            RationalIrreducible::Cyclic { nu: 0, phi: 1 },
        ];
        for nu in 1..=k {
            irreducibles.extend((0..p).map(|phi| RationalIrreducible::Cyclic { nu, phi }));
        }
        Ok(CyclicReps { p, k, irreducibles })
    }

    pub fn for_burnside(a: &CyclicBurnside) -> Self {
        Self::new(a.p(), a.k()).expect("validated by the Burnside module")
    }

    fn family(&self) -> GroupFamily {
        GroupFamily::CyclicCrossZp {
            p: self.p,
            k: self.k,
        }
    }

    fn q(&self) -> u64 {
        (self.p as u64).pow(self.k as u32)
    }

    pub fn irreducibles(&self) -> &[RationalIrreducible] {
        &self.irreducibles
    }

    pub fn rank(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn dimension(&self, i: usize) -> u64 {
        let p = self.p as u64;
        match self.irreducibles[i] {
            RationalIrreducible::Cyclic { nu: 0, .. } => p - 1,
            RationalIrreducible::Cyclic { nu, .. } => p.pow(nu as u32 - 1) * (p - 1),
            _ => 1,
        }
    }

    /// Representative character `(a mod p^k, b mod p)`.
    pub fn representative(&self, i: usize) -> (u64, u32) {
        match self.irreducibles[i] {
            RationalIrreducible::Cyclic { nu: 0, phi } => (0, phi),
            RationalIrreducible::Cyclic { nu, phi } => {
                ((self.p as u64).pow((self.k - nu) as u32), phi)
            }
            _ => (0, 0),
        }
    }

    /// Pairing exponent `ag + bh p^{k-1}` mod `p^k`.
    fn pairing(&self, (a, b): (u64, u32), (g, h): (u64, u32)) -> u64 {
        let q = self.q();
        (a * g + (b as u64 * h as u64 % self.p as u64) * (q / self.p as u64)) % q
    }

    pub fn decompose_perm(&self, a: &CyclicBurnside, nu: usize, rho: u32) -> RepElement {
        let gen = a.graph_generator(nu, rho);
        let coeffs = (0..self.rank())
            .map(|i| (self.pairing(self.representative(i), gen) == 0) as i64)
            .collect();
        RepElement {
            family: self.family(),
            coeffs,
        }
    }

    pub fn delta_values(&self) -> Vec<i64> {
        let p = self.p as i64;
        self.irreducibles
            .iter()
            .map(|irr| match *irr {
                RationalIrreducible::Cyclic { nu: 0, .. } => -1,
                RationalIrreducible::Cyclic { nu, phi: 0 } => p.pow(nu as u32 - 1) * (p - 1),
                RationalIrreducible::Cyclic { nu, .. } => -p.pow(nu as u32 - 1),
                _ => 1,
            })
            .collect()
    }

    pub fn delta_defect(&self, x: &RepElement) -> Result<i64> {
        checked_delta(&self.delta_values(), &x.coeffs)
    }

    /// `[irr] - δ(irr)[Q]` for each nontrivial irreducible.
    pub fn relative_rep_basis(&self) -> Vec<RepElement> {
        let order: Vec<usize> = (1..self.rank()).collect();
        kernel_delta_basis(&self.delta_values(), &order)
            .into_iter()
            .map(|coeffs| RepElement {
                family: self.family(),
                coeffs,
            })
            .collect()
    }

    /// Rows: `R'` basis, columns: irreducibles.
    pub fn relative_inclusion_matrix(&self) -> Result<IntMatrix> {
        let rows: Vec<Vec<i64>> = self
            .relative_rep_basis()
            .into_iter()
            .map(|r| r.coeffs)
            .collect();
        IntMatrix::from_i64_rows(&rows, self.rank())
    }

    /// Rows: relative Burnside basis, columns: irreducibles.
    pub fn f_matrix(&self, a: &CyclicBurnside) -> Result<IntMatrix> {
        let rows: Vec<Vec<i64>> = a
            .pairs()
            .iter()
            .map(|&(nu, rho)| self.decompose_perm(a, nu, rho).coeffs)
            .collect();
        IntMatrix::from_i64_rows(&rows, self.rank())
    }

    /// Rows: relative Burnside basis, columns: `R'` basis coordinates.
    pub fn f_prime_matrix(&self, a: &CyclicBurnside) -> Result<IntMatrix> {
        let rows: Vec<Vec<i64>> = a
            .pairs()
            .iter()
            .map(|&(nu, rho)| self.decompose_perm(a, nu, rho).coeffs)
            .collect();
        let basis: Vec<Vec<i64>> = self
            .relative_rep_basis()
            .into_iter()
            .map(|r| r.coeffs)
            .collect();
        express_rows(&rows, &basis, self.rank())
    }

    fn orbit_characters(&self, i: usize) -> Vec<(u64, u32)> {
        let (a, b) = self.representative(i);
        let q = self.q();
        let p = self.p as u64;
        let mut orbit: Vec<(u64, u32)> = (1..q)
            .filter(|u| u % p != 0)
            .map(|u| ((u * a) % q, ((u * b as u64) % p) as u32))
            .collect();
        orbit.sort();
        orbit.dedup();
        orbit
    }

    /// Multiplicity of irreducible `i` in `Q[G̃/Γ]` for the graph `Γ` of
    /// `(nu, rho)`, from the character inner product in `Z[ζ_{p^k}]`.
    pub fn character_oracle(
        &self,
        a: &CyclicBurnside,
        nu: usize,
        rho: u32,
        i: usize,
    ) -> Result<u64> {
        if i >= self.rank() {
            return domain("irreducible index out of range");
        }
        let q = self.q();
        let p = self.p as u64;
        let order = q * p;
        let graph = a.graph_elements(nu, rho);
        let index = (order / graph.len() as u64) as i128;
        let orbit = self.orbit_characters(i);
        let mut ip = RootSum::zero(q as usize);
        let mut norm = RootSum::zero(q as usize);
        for g in 0..q {
            for h in 0..self.p {
                let mut chi_o = RootSum::zero(q as usize);
                for &s in &orbit {
                    chi_o.add_root(self.pairing(s, (g, h)) as i64, 1);
                }
                let conj = chi_o.conj();
                if graph.contains(&(g, h)) {
                    let mut term = conj.clone();
                    term.scale(index);
                    ip.add_assign(&term);
                }
                norm.add_assign(&chi_o.mul(&conj));
            }
        }
        oracle_multiplicity(&ip, &norm, order)
    }
}

/// Virtual dimension `Σ c_i dim(irr_i)`.
pub fn virtual_dimension(coeffs: &[i64], dims: impl Fn(usize) -> u64) -> i64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| c * dims(i) as i64)
        .sum()
}
