//! Exact integer linear algebra.
//!
//! Matrices act on row vectors: the image of `x` under `M` is `x·M`, and
//! the kernel of `M` is `{x : x·M = 0}`. Lattices are stored by their row
//! Hermite normal form: upper echelon, positive pivots, entries above each
//! pivot reduced into `[0, pivot)`. Equal HNF is equal lattice.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return domain(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            ));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.rows {
            return domain(format!(
                "vector of length {} applied to a {}x{} matrix",
                x.len(),
                self.rows,
                self.cols
            ));
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(i)) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return domain(format!(
                "cannot stack {} columns on {} columns",
                self.cols, other.cols
            ));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        hnf(self).rank()
    }
}

/// Row echelon data: `h = transform · input` with `transform` unimodular.
struct Echelon {
    h: Vec<Vec<BigInt>>,
    transform: Vec<Vec<BigInt>>,
    rank: usize,
    pivots: Vec<usize>,
}

/// `target -= q * src` on columns `from..`.
fn sub_mul(target: &mut [BigInt], src: &[BigInt], q: &BigInt, from: usize) {
    for (t, s) in target[from..].iter_mut().zip(&src[from..]) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

fn row_pair(rows: &mut [Vec<BigInt>], a: usize, b: usize) -> (&mut Vec<BigInt>, &mut Vec<BigInt>) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&mut lo[a], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&mut hi[0], &mut lo[b])
    }
}

/// Row-style Hermite reduction of the first `ncols` columns of `rows`;
/// trailing columns (an appended identity, when tracking the transform) are
/// carried along.
fn hermite_reduce(rows: &mut [Vec<BigInt>], ncols: usize) -> (usize, Vec<usize>) {
    let n = rows.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if r == n {
            break;
        }
        loop {
            let best = (r..n)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut cleared = true;
            for i in (r + 1)..n {
                if rows[i][col].is_zero() {
                    continue;
                }
                let (target, src) = row_pair(rows, i, r);
                let q = target[col].div_floor(&src[col]);
                sub_mul(target, src, &q, col);
                if !target[col].is_zero() {
                    cleared = false;
                }
            }
            if !cleared {
                continue;
            }
            if rows[r][col].is_negative() {
                for x in rows[r][col..].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                if rows[i][col].is_zero() {
                    continue;
                }
                let (target, src) = row_pair(rows, i, r);
                let q = target[col].div_floor(&src[col]);
                if !q.is_zero() {
                    sub_mul(target, src, &q, col);
                }
            }
            pivots.push(col);
            r += 1;
            break;
        }
    }
    (r, pivots)
}

fn echelon(m: &IntMatrix) -> Echelon {
    let n = m.rows;
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let (rank, pivots) = hermite_reduce(&mut rows, m.cols);
    let (h, transform) = rows
        .into_iter()
        .map(|mut row| {
            let t = row.split_off(m.cols);
            (row, t)
        })
        .unzip();
    Echelon {
        h,
        transform,
        rank,
        pivots,
    }
}

/// A sublattice of `Z^r`, stored as its row Hermite normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerLattice {
    ambient: usize,
    basis: IntMatrix,
}

impl IntegerLattice {
    pub fn zero(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: IntMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        IntegerLattice {
            ambient,
            basis: IntMatrix::identity(ambient),
        }
    }

    /// Lattice spanned by the rows of `m`.
    pub fn span(m: &IntMatrix) -> Self {
        hnf(m)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    fn check_ambient(&self, r: usize) -> Result<()> {
        if r != self.ambient {
            return domain(format!(
                "ambient rank mismatch: {r} against lattice in Z^{}",
                self.ambient
            ));
        }
        Ok(())
    }

    /// Coefficients `y` with `y · basis = v`, if `v` is in the lattice.
    pub fn coefficients(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        self.check_ambient(v.len())?;
        Ok(reduce_against(
            &self.basis.to_rows(),
            &pivot_columns(&self.basis),
            v,
        ))
    }

    pub fn member(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coefficients(v)?.is_some())
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for i in 0..other.rank() {
            if !self.member(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{x : kx ∈ L for some k ≠ 0}`.
    pub fn saturation(&self) -> IntegerLattice {
        let orth = kernel_lattice(&self.basis.transpose());
        kernel_lattice(&orth.basis.transpose())
    }

    /// Whether `Z^r / L` is torsion-free.
    pub fn is_saturated(&self) -> bool {
        snf(&self.basis).diagonal.iter().all(One::is_one)
    }

    pub fn intersection(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        self.check_ambient(other.ambient)?;
        let stacked = self.basis.stack(&other.basis)?;
        let relations = kernel_lattice(&stacked);
        // a relation (x, y) with x·A + y·B = 0 gives the common point x·A
        let mut points = Vec::with_capacity(relations.rank());
        for i in 0..relations.rank() {
            let x = &relations.basis.row(i)[..self.rank()];
            let mut pt = vec![BigInt::zero(); self.ambient];
            for (a, j) in x.iter().zip(0..) {
                if !a.is_zero() {
                    for (p, b) in pt.iter_mut().zip(self.basis.row(j)) {
                        *p += a * b;
                    }
                }
            }
            points.push(pt);
        }
        Ok(hnf(&IntMatrix::from_rows(points, self.ambient)?))
    }
}

fn pivot_columns(h: &IntMatrix) -> Vec<usize> {
    (0..h.rows)
        .map(|i| {
            h.row(i)
                .iter()
                .position(|x| !x.is_zero())
                .expect("HNF rows are nonzero")
        })
        .collect()
}

fn reduce_against(h: &[Vec<BigInt>], pivots: &[usize], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut w = v.to_vec();
    let mut coeffs = Vec::with_capacity(h.len());
    for (row, &c) in h.iter().zip(pivots) {
        let (q, rem) = w[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            sub_mul(&mut w, row, &q, c);
        }
        coeffs.push(q);
    }
    w.iter().all(Zero::is_zero).then_some(coeffs)
}

/// Row Hermite normal form of the row span of `m`.
pub fn hnf(m: &IntMatrix) -> IntegerLattice {
    let mut rows = m.to_rows();
    let (rank, _) = hermite_reduce(&mut rows, m.cols);
    rows.truncate(rank);
    IntegerLattice {
        ambient: m.cols,
        basis: IntMatrix::from_rows(rows, m.cols).expect("widths preserved"),
    }
}

/// Saturated basis of `{x ∈ Z^r : x·M = 0}`.
pub fn kernel_lattice(m: &IntMatrix) -> IntegerLattice {
    let ech = echelon(m);
    // rows of the unimodular transform that annihilate M span the kernel
    let rows: Vec<Vec<BigInt>> = ech.transform[ech.rank..].to_vec();
    hnf(&IntMatrix::from_rows(rows, m.rows).expect("widths preserved"))
}

/// Integer `x` with `x · basis = v`, if one exists.
pub fn solve_integer(basis: &IntMatrix, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if v.len() != basis.cols {
        return domain(format!(
            "target of length {} against {} columns",
            v.len(),
            basis.cols
        ));
    }
    let ech = echelon(basis);
    let h = &ech.h[..ech.rank];
    let Some(y) = reduce_against(h, &ech.pivots, v) else {
        return Ok(None);
    };
    let mut x = vec![BigInt::zero(); basis.rows];
    for (c, t) in y.iter().zip(&ech.transform) {
        if c.is_zero() {
            continue;
        }
        for (xi, ti) in x.iter_mut().zip(t) {
            *xi += c * ti;
        }
    }
    Ok(Some(x))
}

pub fn member(l: &IntegerLattice, v: &[BigInt]) -> Result<bool> {
    l.member(v)
}

pub fn lattice_equal(a: &IntegerLattice, b: &IntegerLattice) -> bool {
    a == b
}

/// HNF of the stacked bases.
pub fn lattice_sum(lattices: &[IntegerLattice]) -> Result<IntegerLattice> {
    let Some(first) = lattices.first() else {
        return domain("lattice_sum of an empty list has no ambient rank");
    };
    let mut rows = Vec::new();
    for l in lattices {
        first.check_ambient(l.ambient)?;
        rows.extend(l.basis.to_rows());
    }
    Ok(hnf(&IntMatrix::from_rows(rows, first.ambient)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `d_1 | d_2 | ...`, length `min(rows, cols)`, zeros last.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// All nonzero invariant factors equal one.
    pub fn torsion_free_cokernel(&self) -> bool {
        self.diagonal.iter().all(|d| d.is_zero() || d.is_one())
    }
}

/// Smith normal form by elementary operations, pivoting on the entry of
/// least absolute value. Satisfies `left · m · right = diag`.
pub fn snf(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.to_rows();
    let mut left = IntMatrix::identity(r).to_rows();
    let mut right = IntMatrix::identity(c).to_rows();

    fn col_sub_mul(mat: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
        for row in mat.iter_mut() {
            if !row[src].is_zero() {
                let delta = q * &row[src];
                row[target] -= delta;
            }
        }
    }
    fn col_swap(mat: &mut [Vec<BigInt>], x: usize, y: usize) {
        for row in mat.iter_mut() {
            row.swap(x, y);
        }
    }

    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            left.swap(t, bi);
            col_swap(&mut a, t, bj);
            col_swap(&mut right, t, bj);

            let mut clean = true;
            for i in (t + 1)..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (target, src) = row_pair(&mut a, i, t);
                sub_mul(target, src, &q, 0);
                let (target, src) = row_pair(&mut left, i, t);
                sub_mul(target, src, &q, 0);
                clean &= a[i][t].is_zero();
            }
            for j in (t + 1)..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_sub_mul(&mut a, j, t, &q);
                col_sub_mul(&mut right, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the remaining block; otherwise fold in the offender
            let offender =
                (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let one = -BigInt::one();
                    let (target, src) = row_pair(&mut a, t, i);
                    sub_mul(target, src, &one, 0);
                    let (target, src) = row_pair(&mut left, t, i);
                    sub_mul(target, src, &one, 0);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in left[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    SmithForm {
        diagonal: (0..r.min(c)).map(|i| a[i][i].clone()).collect(),
        left: IntMatrix::from_rows(left, r).expect("square"),
        right: IntMatrix::from_rows(right, c).expect("square"),
    }
}

/// Outcome of [`check_short_exact`] for `0 → A --α--> B --β--> C → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactReport {
    pub alpha_injective: bool,
    pub beta_surjective: bool,
    pub composite_zero: bool,
    pub cokernel_free: bool,
    pub image_rank: usize,
    pub kernel_rank: usize,
    pub image_equals_kernel: bool,
}

impl ShortExactReport {
    pub fn ranks_match(&self) -> bool {
        self.image_rank == self.kernel_rank
    }

    /// Injective α, surjective β, β∘α = 0, free cokernel of α and
    /// rank(im α) = rank(ker β): enough to conclude exactness.
    pub fn lemma_hypotheses_hold(&self) -> bool {
        self.alpha_injective
            && self.beta_surjective
            && self.composite_zero
            && self.cokernel_free
            && self.ranks_match()
    }

    /// Exactness checked as lattice equality `im α = ker β`.
    pub fn exact_direct(&self) -> bool {
        self.alpha_injective && self.beta_surjective && self.image_equals_kernel
    }

    /// The rank-and-freeness route never claims exactness the direct check refutes.
    pub fn consistent(&self) -> bool {
        !self.lemma_hypotheses_hold() || self.exact_direct()
    }
}

pub fn check_short_exact(alpha: &IntMatrix, beta: &IntMatrix) -> Result<ShortExactReport> {
    if alpha.cols != beta.rows {
        return domain(format!(
            "alpha maps into Z^{} but beta starts from Z^{}",
            alpha.cols, beta.rows
        ));
    }
    let image = hnf(alpha);
    let kernel = kernel_lattice(beta);
    let alpha_snf = snf(alpha);
    Ok(ShortExactReport {
        alpha_injective: image.rank() == alpha.rows,
        beta_surjective: hnf(beta) == IntegerLattice::full(beta.cols),
        composite_zero: alpha.mul(beta)?.is_zero(),
        cokernel_free: alpha_snf.torsion_free_cokernel(),
        image_rank: image.rank(),
        kernel_rank: kernel.rank(),
        image_equals_kernel: image == kernel,
    })
}

/// Convenience for building integer vectors in tests and callers.
pub fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}
