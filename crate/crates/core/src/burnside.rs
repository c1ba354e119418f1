//! Burnside modules of `G̃ = Z_p^{n+1}` and `G̃ = Z_{p^k} × Z_p`.
//!
//! For the elementary abelian family the basis element `[G̃/L]` is labelled by
//! the subspace `L`, and basis elements are numbered `e_1, e_2, ...` in the
//! canonical subspace order. `H` is the last coordinate factor, so the
//! relative module `A(G,H)` is spanned by the labels avoiding the
//! distinguished vector `e = (0, ..., 0, 1)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::gfp::{self, distinguished, Caps, FpVector, PrimeField, Subspace};
use crate::intlat::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupFamily {
    /// `G = Z_p^n`, `G̃ = Z_p^{n+1}`.
    ElementaryAbelian { p: u32, n: usize },
    /// `G = Z_{p^k}`, `G̃ = Z_{p^k} × Z_p`.
    CyclicCrossZp { p: u32, k: usize },
}

impl GroupFamily {
    pub fn p(&self) -> u32 {
        match *self {
            GroupFamily::ElementaryAbelian { p, .. } | GroupFamily::CyclicCrossZp { p, .. } => p,
        }
    }

    /// Checks primality, positivity of `n`/`k` and the caps. The cyclic
    /// family counts `k + 1` against the ambient-dimension cap.
    pub fn validate(&self, caps: &Caps) -> Result<PrimeField> {
        let field = PrimeField::with_caps(self.p(), caps)?;
        match *self {
            GroupFamily::ElementaryAbelian { n, .. } => {
                if n == 0 {
                    return domain("elementary abelian family needs n >= 1");
                }
                caps.check_ambient_dim(n + 1)?;
            }
            GroupFamily::CyclicCrossZp { k, .. } => {
                if k == 0 {
                    return domain("cyclic family needs k >= 1");
                }
                caps.check_ambient_dim(k + 1)?;
            }
        }
        Ok(field)
    }

    /// `|G̃|`.
    pub fn order(&self) -> u64 {
        match *self {
            GroupFamily::ElementaryAbelian { p, n } => (p as u64).pow(n as u32 + 1),
            GroupFamily::CyclicCrossZp { p, k } => (p as u64).pow(k as u32 + 1),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::ElementaryAbelian { p, n } => write!(f, "elementary(p={p}, n={n})"),
            GroupFamily::CyclicCrossZp { p, k } => write!(f, "cyclic(p={p}, k={k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BurnsideBasisElement {
    /// `[G̃/L]`.
    Subgroup(Subspace),
    /// `[G ×_ρ H]` for the order-`p^nu` subgroup `K` of `Z_{p^k}`, with `ρ`
    /// sending the generator `p^{k-nu}` of `K` to `rho`.
    Pair { nu: usize, rho: u32 },
}

/// Integer combination of basis elements. Elementary abelian elements use
/// the full basis of `A(G̃)`; cyclic elements use the relative basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideElement {
    pub family: GroupFamily,
    pub coeffs: Vec<i64>,
}

impl BurnsideElement {
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Pair `C ≤ L` of subspaces of the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subquotient {
    lower: Subspace,
    upper: Subspace,
}

impl Subquotient {
    pub fn new(lower: Subspace, upper: Subspace) -> Result<Self> {
        if !upper.contains_subspace(&lower) {
            return domain(format!("{lower} is not contained in {upper}"));
        }
        Ok(Subquotient { lower, upper })
    }

    pub fn lower(&self) -> &Subspace {
        &self.lower
    }

    pub fn upper(&self) -> &Subspace {
        &self.upper
    }

    /// Rank of `L/C`.
    pub fn rank(&self) -> usize {
        self.upper.dim() - self.lower.dim()
    }
}

/// Generator of the domain of `t'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TPrimeGenerator {
    /// A relative basis element of grade at most `n - 2`.
    Basis(usize),
    /// `(plus) - (minus)` spanning `A''_{n-1}`.
    Difference { plus: usize, minus: usize },
}

/// The Burnside module of an elementary abelian group `GF(p)^m` with its
/// basis enumerated once.
#[derive(Debug, Clone)]
pub struct ElementaryBurnside {
    field: PrimeField,
    m: usize,
    basis: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    grade_starts: Vec<usize>,
    relative: Vec<usize>,
    relative_pos: Vec<Option<usize>>,
}

impl ElementaryBurnside {
    /// `A(Z_p^{n+1})` for the family `ElementaryAbelian { p, n }`.
    pub fn new(p: u32, n: usize) -> Result<Self> {
        Self::with_caps(p, n, &Caps::default())
    }

    pub fn with_caps(p: u32, n: usize, caps: &Caps) -> Result<Self> {
        let field = GroupFamily::ElementaryAbelian { p, n }.validate(caps)?;
        Ok(Self::over(field, n + 1))
    }

    /// `A(GF(p)^m)` for any `m`; used for quotients of subquotients.
    pub fn over(field: PrimeField, m: usize) -> Self {
        let basis = gfp::all_subspaces(field, m);
        let index = basis.iter().cloned().zip(0..).collect();
        let mut grade_starts = vec![0; m + 2];
        for s in &basis {
            grade_starts[s.dim() + 1] += 1;
        }
        for k in 1..grade_starts.len() {
            grade_starts[k] += grade_starts[k - 1];
        }
        let e = distinguished(m);
        let relative: Vec<usize> = if m == 0 {
            Vec::new()
        } else {
            (0..basis.len())
                .filter(|&i| !basis[i].contains(&e).expect("lengths agree"))
                .collect()
        };
        let mut relative_pos = vec![None; basis.len()];
        for (pos, &i) in relative.iter().enumerate() {
            relative_pos[i] = Some(pos);
        }
        ElementaryBurnside {
            field,
            m,
            basis,
            index,
            grade_starts,
            relative,
            relative_pos,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    /// `n`, so that the ambient space is `GF(p)^{n+1}`.
    pub fn n(&self) -> usize {
        self.m.saturating_sub(1)
    }

    pub fn ambient_dim(&self) -> usize {
        self.m
    }

    pub fn family(&self) -> GroupFamily {
        GroupFamily::ElementaryAbelian {
            p: self.p(),
            n: self.n(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Full basis of `A(G̃)` in canonical order.
    pub fn basis(&self) -> &[Subspace] {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<BurnsideBasisElement> {
        self.basis
            .iter()
            .cloned()
            .map(BurnsideBasisElement::Subgroup)
            .collect()
    }

    pub fn subspace(&self, i: usize) -> &Subspace {
        &self.basis[i]
    }

    /// One-based label `e_i`.
    pub fn label(i: usize) -> String {
        format!("e_{}", i + 1)
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).copied()
    }

    fn index_of_or_err(&self, s: &Subspace) -> Result<usize> {
        self.index_of(s)
            .ok_or_else(|| Error::Domain(format!("{s} is not a subspace of GF(p)^{}", self.m)))
    }

    /// Basis indices of the grade-`k` summand `A_k`.
    pub fn grade(&self, k: usize) -> Range<usize> {
        if k > self.m {
            return 0..0;
        }
        self.grade_starts[k]..self.grade_starts[k + 1]
    }

    pub fn distinguished(&self) -> FpVector {
        distinguished(self.m)
    }

    /// Basis indices of the labels avoiding `e`, i.e. the basis of `A(G,H)`.
    pub fn relative(&self) -> &[usize] {
        &self.relative
    }

    pub fn relative_basis(&self) -> Vec<BurnsideBasisElement> {
        self.relative
            .iter()
            .map(|&i| BurnsideBasisElement::Subgroup(self.basis[i].clone()))
            .collect()
    }

    /// Position of basis element `i` within the relative basis.
    pub fn relative_position(&self, i: usize) -> Option<usize> {
        self.relative_pos[i]
    }

    pub fn relative_grade(&self, k: usize) -> Vec<usize> {
        self.grade(k)
            .filter(|&i| self.relative_pos[i].is_some())
            .collect()
    }

    /// Rows: relative basis, columns: full basis.
    pub fn inclusion_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relative.len(), self.basis.len());
        for (r, &i) in self.relative.iter().enumerate() {
            m.set(r, i, BigInt::from(1));
        }
        m
    }

    /// Re-expresses a full-basis coefficient vector on relative coordinates,
    /// if it is supported on labels avoiding `e`.
    pub fn to_relative(&self, coeffs: &[i64]) -> Option<Vec<i64>> {
        let mut out = vec![0; self.relative.len()];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                out[self.relative_pos[i]?] = c;
            }
        }
        Some(out)
    }

    /// Graph of `rho: K → Z_p`, given by its values on the echelon rows of
    /// `K ≤ GF(p)^n`.
    pub fn pair_to_subspace(&self, k: &Subspace, rho: &[u32]) -> Result<Subspace> {
        if k.ambient_dim() + 1 != self.m || k.field() != self.field {
            return domain(format!("{k} does not live in GF(p)^{}", self.n()));
        }
        if rho.len() != k.dim() {
            return domain(format!(
                "rho has {} values on a {}-dimensional K",
                rho.len(),
                k.dim()
            ));
        }
        let graph: Vec<FpVector> = k
            .rows()
            .iter()
            .zip(rho)
            .map(|(row, &r)| {
                let mut v = row.clone();
                v.push(r % self.p());
                v
            })
            .collect();
        gfp::canonicalize(self.field, &graph, self.m)
    }

    /// Inverse of [`Self::pair_to_subspace`].
    pub fn subspace_to_pair(&self, l: &Subspace) -> Result<(Subspace, Vec<u32>)> {
        if l.ambient_dim() != self.m {
            return domain(format!("{l} does not live in GF(p)^{}", self.m));
        }
        if l.contains(&self.distinguished())? {
            return domain(format!("{l} contains the distinguished vector"));
        }
        // no echelon row of L can pivot on the last column, so projecting the
        // rows gives the echelon basis of K and the last entries are rho
        let n = self.m - 1;
        let k_rows: Vec<FpVector> = l.rows().iter().map(|r| r[..n].to_vec()).collect();
        let k = gfp::canonicalize(self.field, &k_rows, n)?;
        debug_assert_eq!(k.rows(), &k_rows[..]);
        let rho = l.rows().iter().map(|r| r[n]).collect();
        Ok((k, rho))
    }

    /// The canonically least `L* ⊇ L` with `dim L* = dim L + 2` that avoids
    /// `e` whenever `L` does and `L` has codimension at least 3.
    pub fn choose_l_star(&self, l: &Subspace) -> Result<Subspace> {
        let i = self.index_of_or_err(l)?;
        let l = &self.basis[i];
        if l.codim() < 2 {
            return domain(format!("{l} has codimension {} < 2", l.codim()));
        }
        let e = self.distinguished();
        let avoid_e = l.codim() >= 3 && !l.contains(&e)?;
        self.grade(l.dim() + 2)
            .map(|j| &self.basis[j])
            .find(|c| c.contains_subspace(l) && !(avoid_e && c.contains(&e).unwrap_or(true)))
            .cloned()
            .ok_or_else(|| Error::Consistency(format!("no valid L* above {l}")))
    }

    /// Basis indices `j` with `lo ≤ basis[j] ≤ hi`.
    pub fn interval(&self, lo: &Subspace, hi: &Subspace) -> Vec<usize> {
        (lo.dim()..=hi.dim())
            .flat_map(|k| self.grade(k))
            .filter(|&j| {
                let s = &self.basis[j];
                s.contains_subspace(lo) && hi.contains_subspace(s)
            })
            .collect()
    }

    /// `t(L) = (L) - Σ_{L<C<L*} (C) + p (L*)` on the full basis.
    pub fn t_image(&self, l: &Subspace) -> Result<Vec<i64>> {
        let star = self.choose_l_star(l)?;
        let mut coeffs = vec![0i64; self.rank()];
        coeffs[self.index_of_or_err(l)?] += 1;
        for j in self.interval(l, &star) {
            if self.basis[j].dim() == l.dim() + 1 {
                coeffs[j] -= 1;
            }
        }
        coeffs[self.index_of_or_err(&star)?] += self.p() as i64;
        Ok(coeffs)
    }

    /// Basis indices of `A_0 ⊕ ... ⊕ A_{n-1}`, the domain of `t`.
    pub fn t_domain(&self) -> Vec<usize> {
        if self.m < 2 {
            return Vec::new();
        }
        (0..self.grade_starts[self.m - 1]).collect()
    }

    /// Linear extension of `t` over an element supported on grades `≤ n-1`.
    pub fn t_map(&self, x: &BurnsideElement) -> Result<BurnsideElement> {
        if x.coeffs.len() != self.rank() {
            return domain(format!(
                "element has {} coefficients, basis has {}",
                x.coeffs.len(),
                self.rank()
            ));
        }
        let mut out = vec![0i64; self.rank()];
        for i in x.support() {
            if self.basis[i].codim() < 2 {
                return domain(format!(
                    "{} has dimension {} outside the domain of t",
                    Self::label(i),
                    self.basis[i].dim()
                ));
            }
            let img = self.t_image(&self.basis[i])?;
            for (o, v) in out.iter_mut().zip(img) {
                *o += x.coeffs[i] * v;
            }
        }
        Ok(BurnsideElement {
            family: self.family(),
            coeffs: out,
        })
    }

    /// Rows: [`Self::t_domain`], columns: full basis.
    pub fn t_matrix(&self) -> Result<IntMatrix> {
        let rows = self
            .t_domain()
            .iter()
            .map(|&i| self.t_image(&self.basis[i]))
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_i64_rows(&rows, self.rank())
    }

    /// Generators `(L, L_0)` of `A''_{n-1}`: `L_0` is the least member of the
    /// class of `L` under `L ~ L'  ⇔  L + <e> = L' + <e>`.
    pub fn a_double_prime_basis(&self) -> Vec<(usize, usize)> {
        if self.m < 2 {
            return Vec::new();
        }
        let e = self.distinguished();
        let mut classes: Vec<(Subspace, Vec<usize>)> = Vec::new();
        for i in self.relative_grade(self.m - 2) {
            let key = self.basis[i].extend_by(&e).expect("lengths agree");
            match classes.iter_mut().find(|(k, _)| *k == key) {
                Some((_, members)) => members.push(i),
                None => classes.push((key, vec![i])),
            }
        }
        let mut pairs: Vec<(usize, usize)> = classes
            .iter()
            .flat_map(|(_, members)| {
                let least = members[0];
                members[1..].iter().map(move |&i| (i, least))
            })
            .collect();
        pairs.sort();
        pairs
    }

    /// Relative basis elements of grade `≤ n-2` followed by the `A''` pairs.
    pub fn t_prime_domain(&self) -> Vec<TPrimeGenerator> {
        let mut gens: Vec<TPrimeGenerator> = (0..self.m.saturating_sub(2))
            .flat_map(|k| self.relative_grade(k))
            .map(TPrimeGenerator::Basis)
            .collect();
        gens.extend(
            self.a_double_prime_basis()
                .into_iter()
                .map(|(plus, minus)| TPrimeGenerator::Difference { plus, minus }),
        );
        gens
    }

    pub fn generator_coeffs(&self, g: TPrimeGenerator) -> Vec<i64> {
        let mut x = vec![0i64; self.rank()];
        match g {
            TPrimeGenerator::Basis(i) => x[i] = 1,
            TPrimeGenerator::Difference { plus, minus } => {
                x[plus] = 1;
                x[minus] = -1;
            }
        }
        x
    }

    /// `t` of a `t'` generator, on the full basis.
    pub fn t_prime_image_full(&self, g: TPrimeGenerator) -> Result<Vec<i64>> {
        let x = BurnsideElement {
            family: self.family(),
            coeffs: self.generator_coeffs(g),
        };
        Ok(self.t_map(&x)?.coeffs)
    }

    /// Rows: [`Self::t_prime_domain`], columns: relative basis. Fails if some
    /// image leaves `A(G,H)`.
    pub fn t_prime_matrix(&self) -> Result<IntMatrix> {
        let rows = self
            .t_prime_domain()
            .into_iter()
            .map(|g| {
                let full = self.t_prime_image_full(g)?;
                self.to_relative(&full).ok_or_else(|| {
                    Error::Consistency(format!("t'({g:?}) has support containing e"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_i64_rows(&rows, self.relative.len())
    }

    /// Rows: `t'` domain, columns: `t` domain; the vertical inclusion.
    pub fn t_domain_inclusion(&self) -> IntMatrix {
        let domain = self.t_domain();
        let gens = self.t_prime_domain();
        let mut m = IntMatrix::zeros(gens.len(), domain.len());
        for (r, g) in gens.iter().enumerate() {
            // the t domain is an initial segment of the basis
            for (i, c) in self.generator_coeffs(*g).into_iter().enumerate() {
                if c != 0 {
                    m.set(r, i, BigInt::from(c));
                }
            }
        }
        m
    }

    fn check_in_ambient(&self, s: &Subspace) -> Result<()> {
        self.index_of_or_err(s).map(|_| ())
    }

    /// Basis index in `A(G̃)` of the induced class of `[(L/C)/(D/C)]`.
    pub fn induce_label(&self, sq: &Subquotient, d: &Subspace) -> Result<usize> {
        self.check_in_ambient(sq.upper())?;
        if !(d.contains_subspace(sq.lower()) && sq.upper().contains_subspace(d)) {
            return domain(format!(
                "{d} lies outside the interval [{}, {}]",
                sq.lower(),
                sq.upper()
            ));
        }
        self.index_of_or_err(d)
    }

    /// `L/C↑` on an element of `A(L/C)` written over [`Self::interval`]`(C, L)`.
    pub fn induce(&self, sq: &Subquotient, x: &[i64]) -> Result<BurnsideElement> {
        self.check_in_ambient(sq.upper())?;
        let labels = self.interval(sq.lower(), sq.upper());
        if x.len() != labels.len() {
            return domain(format!(
                "A(L/C) has rank {}, got {} coefficients",
                labels.len(),
                x.len()
            ));
        }
        let mut out = vec![0i64; self.rank()];
        for (&j, &c) in labels.iter().zip(x) {
            out[j] += c;
        }
        Ok(BurnsideElement {
            family: self.family(),
            coeffs: out,
        })
    }

    /// Rows: [`Self::interval`]`(C, L)`, columns: full basis.
    pub fn induce_matrix(&self, sq: &Subquotient) -> Result<IntMatrix> {
        let labels = self.interval(sq.lower(), sq.upper());
        let mut m = IntMatrix::zeros(labels.len(), self.rank());
        for (r, &j) in labels.iter().enumerate() {
            m.set(r, j, BigInt::from(1));
        }
        Ok(m)
    }

    /// `L↓` into `A(L)` written over [`Self::interval`]`(0, L)`, using
    /// `[G̃/D]|_L = [G̃ : L + D] · [L / (L ∩ D)]`.
    pub fn restrict(&self, lsub: &Subspace, x: &BurnsideElement) -> Result<Vec<i64>> {
        self.check_in_ambient(lsub)?;
        let zero = Subspace::zero(self.field, self.m);
        let target = self.interval(&zero, lsub);
        let pos: HashMap<usize, usize> = target.iter().zip(0..).map(|(&j, r)| (j, r)).collect();
        let mut out = vec![0i64; target.len()];
        for i in x.support() {
            let d = &self.basis[i];
            let (sum, meet) = lsub.sum_intersect(d)?;
            let index = (self.p() as i64).pow(sum.codim() as u32);
            let j = self.index_of_or_err(&meet)?;
            out[pos[&j]] += x.coeffs[i] * index;
        }
        Ok(out)
    }

    /// Chart identifying `L/C` with `GF(p)^{rank}`: the quotient's own basis,
    /// in its canonical order, mapped to the matching `D` in `A(G̃)`.
    pub fn chart(&self, sq: &Subquotient, quotient: &ElementaryBurnside) -> Result<QuotientChart> {
        self.check_in_ambient(sq.upper())?;
        if quotient.ambient_dim() != sq.rank() || quotient.field != self.field {
            return domain(format!(
                "quotient module has ambient {} but L/C has rank {}",
                quotient.ambient_dim(),
                sq.rank()
            ));
        }
        let mut span = sq.lower().clone();
        let mut complement = Vec::new();
        for row in sq.upper().rows() {
            if !span.contains(row)? {
                span = span.extend_by(row)?;
                complement.push(row.clone());
            }
        }
        let f = self.field;
        let to_ambient = quotient
            .basis()
            .iter()
            .map(|dq| {
                let mut gens: Vec<FpVector> = sq.lower().rows().to_vec();
                for coords in dq.rows() {
                    let mut v = vec![0u32; self.m];
                    for (&a, l) in coords.iter().zip(&complement) {
                        for (x, &y) in v.iter_mut().zip(l) {
                            *x = f.add(*x, f.mul(a, y));
                        }
                    }
                    gens.push(v);
                }
                let d = gfp::canonicalize(f, &gens, self.m)?;
                self.index_of_or_err(&d)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QuotientChart {
            sq: sq.clone(),
            complement,
            to_ambient,
        })
    }

    /// Pairs `(i, j)` with `basis[i] < basis[j]` of index `p`.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in 0..self.m {
            for i in self.grade(k) {
                for j in self.grade(k + 1) {
                    if self.basis[j].contains_subspace(&self.basis[i]) {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }
}

/// Identification of `L/C` with `GF(p)^r` through a complement of `C` in `L`.
#[derive(Debug, Clone)]
pub struct QuotientChart {
    sq: Subquotient,
    complement: Vec<FpVector>,
    to_ambient: Vec<usize>,
}

impl QuotientChart {
    pub fn subquotient(&self) -> &Subquotient {
        &self.sq
    }

    /// Representatives in `L` of the quotient's standard basis.
    pub fn complement(&self) -> &[FpVector] {
        &self.complement
    }

    /// Quotient basis index → index in `A(G̃)`.
    pub fn to_ambient(&self) -> &[usize] {
        &self.to_ambient
    }

    /// Rows: quotient basis, columns: full basis of `A(G̃)`.
    pub fn induce_matrix(&self, ambient_rank: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.to_ambient.len(), ambient_rank);
        for (r, &j) in self.to_ambient.iter().enumerate() {
            m.set(r, j, BigInt::from(1));
        }
        m
    }
}

/// `[G] - Σ_C [G/C] + p[G/G]` in `A(Z_p × Z_p)`, over the basis of
/// [`ElementaryBurnside::new`]`(p, 1)`: trivial subgroup, the `p + 1` lines,
/// the whole group.
pub fn classical_kernel_generator(p: u32) -> Result<BurnsideElement> {
    PrimeField::new(p)?;
    let mut coeffs = vec![1i64];
    coeffs.extend(std::iter::repeat_n(-1, p as usize + 1));
    coeffs.push(p as i64);
    Ok(BurnsideElement {
        family: GroupFamily::ElementaryAbelian { p, n: 1 },
        coeffs,
    })
}

/// The relative Burnside module of `Z_{p^k} × Z_p`.
#[derive(Debug, Clone)]
pub struct CyclicBurnside {
    p: u32,
    k: usize,
    pairs: Vec<(usize, u32)>,
}

impl CyclicBurnside {
    pub fn new(p: u32, k: usize) -> Result<Self> {
        Self::with_caps(p, k, &Caps::default())
    }

    pub fn with_caps(p: u32, k: usize, caps: &Caps) -> Result<Self> {
        GroupFamily::CyclicCrossZp { p, k }.validate(caps)?;
        let mut pairs = vec![(0, 0)];
        for nu in 1..=k {
            pairs.extend((0..p).map(|rho| (nu, rho)));
        }
        Ok(CyclicBurnside { p, k, pairs })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn family(&self) -> GroupFamily {
        GroupFamily::CyclicCrossZp {
            p: self.p,
            k: self.k,
        }
    }

    /// `(nu, rho)` pairs in lexicographic order; `kp + 1` of them.
    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.pairs
    }

    pub fn relative_basis(&self) -> Vec<BurnsideBasisElement> {
        self.pairs
            .iter()
            .map(|&(nu, rho)| BurnsideBasisElement::Pair { nu, rho })
            .collect()
    }

    /// `|Z_{p^k}|`.
    pub fn cyclic_order(&self) -> u64 {
        (self.p as u64).pow(self.k as u32)
    }

    /// Generator `(p^{k-nu}, rho)` of the graph of `rho`; `(0, 0)` for `nu = 0`.
    pub fn graph_generator(&self, nu: usize, rho: u32) -> (u64, u32) {
        if nu == 0 {
            return (0, 0);
        }
        ((self.p as u64).pow((self.k - nu) as u32), rho)
    }

    /// Elements of the graph subgroup of `(nu, rho)`.
    pub fn graph_elements(&self, nu: usize, rho: u32) -> Vec<(u64, u32)> {
        let (a, b) = self.graph_generator(nu, rho);
        let order = (self.p as u64).pow(nu as u32);
        let q = self.cyclic_order();
        (0..order)
            .map(|j| ((j * a) % q, ((j * b as u64) % self.p as u64) as u32))
            .collect()
    }
}
