//! Smith normal form, kernels, images and integer linear solving.
//!
//! The reduction is the classical one: pick the nonzero entry of least
//! absolute value as pivot (ties broken by smallest row, then column), clear
//! its row and column by exact division steps, and repair divisibility of the
//! remaining block before moving on. Transform matrices are carried along so
//! kernels and solutions come out of the same pass.
//!
//! Elimination runs in `i128` whenever the input fits and every intermediate
//! value stays representable; any overflow restarts the computation with
//! `BigInt` entries, so results are exact regardless of coefficient growth.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// Result of the reduction `u * a * v = d` with `u`, `v` unimodular and `d`
/// diagonal satisfying `d[0] | d[1] | ...`, all diagonal entries nonnegative.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithNormalForm {
    /// The nonzero diagonal entries, in divisibility order.
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let (rows, cols) = (a.rows(), a.cols());
    if let Some(raw) = a.to_i128() {
        let grid = Grid {
            rows,
            cols,
            data: raw,
        };
        if let Some(core) = snf_core(grid) {
            return SmithNormalForm {
                u: IntMatrix::from_i128(rows, rows, &core.u.data),
                d: IntMatrix::from_i128(rows, cols, &core.a.data),
                v: IntMatrix::from_i128(cols, cols, &core.v.data),
                rank: core.rank,
            };
        }
    }
    let grid = Grid {
        rows,
        cols,
        data: (0..rows * cols)
            .map(|idx| a.get(idx / cols, idx % cols).clone())
            .collect::<Vec<BigInt>>(),
    };
    let core = snf_core(grid).expect("BigInt elimination cannot overflow");
    SmithNormalForm {
        u: big_grid_to_matrix(core.u),
        d: big_grid_to_matrix(core.a),
        v: big_grid_to_matrix(core.v),
        rank: core.rank,
    }
}

fn big_grid_to_matrix(g: Grid<BigInt>) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.rows, g.cols);
    for i in 0..g.rows {
        for j in 0..g.cols {
            let x = g.at(i, j);
            if !Zero::is_zero(x) {
                m.set(i, j, x.clone());
            }
        }
    }
    m
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank
}

/// The elementary divisors of `a`: nonzero diagonal of its Smith form.
pub fn elementary_divisors(a: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(a).divisors()
}

/// Columns form a basis of the integer kernel lattice `{x : a x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let idx: Vec<usize> = (snf.rank..a.cols()).collect();
    snf.v.select_columns(&idx)
}

/// Columns form a basis of the image lattice of `a` (the columns of `a v`
/// with nonzero Smith diagonal).
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let av = a.mul(&snf.v);
    let idx: Vec<usize> = (0..snf.rank).collect();
    av.select_columns(&idx)
}

/// Reusable integer solver for `a x = b`, built from one Smith reduction.
///
/// The returned solution is the canonical one: free coordinates in the Smith
/// basis are set to zero. Candidate solutions are verified against `a` by
/// exact re-multiplication, so only the top `rank` rows of the left transform
/// need to be retained.
pub struct LinearSolver {
    a: IntMatrix,
    rank: usize,
    diag: Vec<BigInt>,
    u_top: IntMatrix,
    v: IntMatrix,
}

impl LinearSolver {
    pub fn new(a: &IntMatrix) -> Self {
        let snf = smith_normal_form(a);
        let mut u_top = IntMatrix::zeros(snf.rank, a.rows());
        for i in 0..snf.rank {
            for j in 0..a.rows() {
                let x = snf.u.get(i, j);
                if !Zero::is_zero(x) {
                    u_top.set(i, j, x.clone());
                }
            }
        }
        LinearSolver {
            a: a.clone(),
            rank: snf.rank,
            diag: snf.divisors(),
            u_top,
            v: snf.v,
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Some integer solution of `a x = b`, or `None` when none exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.a.rows(), "rhs length mismatch");
        let c = self.u_top.mul_vec(b);
        let mut y = vec![BigInt::zero(); self.a.cols()];
        for i in 0..self.rank {
            let (q, r) = c[i].div_rem(&self.diag[i]);
            if !Zero::is_zero(&r) {
                return None;
            }
            y[i] = q;
        }
        let x = self.v.mul_vec(&y);
        if self.a.mul_vec(&x) == b {
            Some(x)
        } else {
            None
        }
    }

    /// Column-wise solve; fails if any column has no integer solution.
    pub fn solve_all(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(rhs.rows(), self.a.rows(), "rhs row count mismatch");
        let mut cols = Vec::with_capacity(rhs.cols());
        for j in 0..rhs.cols() {
            cols.push(self.solve(&rhs.column(j))?);
        }
        Some(IntMatrix::from_columns(self.a.cols(), &cols))
    }
}

/// One-shot integer solve of `a x = b`.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    LinearSolver::new(a).solve(b)
}

/// Inverse of a unimodular matrix; `None` if `m` is not square unimodular.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if m.rows() != m.cols() {
        return None;
    }
    LinearSolver::new(m).solve_all(&IntMatrix::identity(m.rows()))
}

// ---------------------------------------------------------------------------
// Elimination core, generic over the scalar so i128 and BigInt share one
// implementation. All arithmetic is fallible; the i128 lane reports overflow
// by returning `None` and the caller retries with BigInt.
// ---------------------------------------------------------------------------

trait Elim: Sized + Clone + From<i8> {
    fn elim_zero() -> Self;
    fn elim_is_zero(&self) -> bool;
    fn elim_is_negative(&self) -> bool;
    fn neg_checked(&self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul_checked(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add_checked(&self, b: &Self) -> Option<Self>;
    /// Truncated quotient; `b` is nonzero.
    fn div_trunc_checked(&self, b: &Self) -> Option<Self>;
    fn divides_checked(&self, other: &Self) -> Option<bool>;
    fn abs_lt(&self, other: &Self) -> bool;
}

impl Elim for i128 {
    fn elim_zero() -> Self {
        0
    }
    fn elim_is_zero(&self) -> bool {
        *self == 0
    }
    fn elim_is_negative(&self) -> bool {
        *self < 0
    }
    fn neg_checked(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn sub_mul_checked(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn add_checked(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b)
    }
    fn div_trunc_checked(&self, b: &Self) -> Option<Self> {
        self.checked_div(*b)
    }
    fn divides_checked(&self, other: &Self) -> Option<bool> {
        Some(other.checked_rem(*self)? == 0)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
}

impl Elim for BigInt {
    fn elim_zero() -> Self {
        Zero::zero()
    }
    fn elim_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn elim_is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg_checked(&self) -> Option<Self> {
        Some(-self)
    }
    fn sub_mul_checked(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn add_checked(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn div_trunc_checked(&self, b: &Self) -> Option<Self> {
        Some(self / b)
    }
    fn divides_checked(&self, other: &Self) -> Option<bool> {
        Some(Zero::is_zero(&(other % self)))
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
}

struct Grid<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Elim> Grid<T> {
    fn identity(n: usize) -> Self {
        let mut data = vec![T::elim_zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::from(1);
        }
        Grid {
            rows: n,
            cols: n,
            data,
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    #[inline]
    fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[i] -= q * row[k], columns `from..`.
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &T, from: usize) -> Option<()> {
        for j in from..self.cols {
            let b = self.at(k, j).clone();
            if b.elim_is_zero() {
                continue;
            }
            let e = self.at(i, j).sub_mul_checked(q, &b)?;
            *self.at_mut(i, j) = e;
        }
        Some(())
    }

    /// col[j] -= q * col[k], rows `from..`.
    fn col_sub_mul(&mut self, j: usize, k: usize, q: &T, from: usize) -> Option<()> {
        for i in from..self.rows {
            let b = self.at(i, k).clone();
            if b.elim_is_zero() {
                continue;
            }
            let e = self.at(i, j).sub_mul_checked(q, &b)?;
            *self.at_mut(i, j) = e;
        }
        Some(())
    }

    /// row[k] += row[i], columns `from..`.
    fn row_add(&mut self, k: usize, i: usize, from: usize) -> Option<()> {
        for j in from..self.cols {
            let b = self.at(i, j).clone();
            if b.elim_is_zero() {
                continue;
            }
            let e = self.at(k, j).add_checked(&b)?;
            *self.at_mut(k, j) = e;
        }
        Some(())
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        for j in 0..self.cols {
            let e = self.at(i, j).neg_checked()?;
            *self.at_mut(i, j) = e;
        }
        Some(())
    }
}

struct SnfCore<T> {
    a: Grid<T>,
    u: Grid<T>,
    v: Grid<T>,
    rank: usize,
}

/// Pivot: least nonzero absolute value in the trailing block, smallest row
/// then column on ties. Deterministic so reduced forms are reproducible.
fn find_pivot<T: Elim>(a: &Grid<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows {
        for j in k..a.cols {
            let x = a.at(i, j);
            if x.elim_is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if x.abs_lt(a.at(bi, bj)) {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn snf_core<T: Elim>(mut a: Grid<T>) -> Option<SnfCore<T>> {
    let (m, n) = (a.rows, a.cols);
    let mut u = Grid::<T>::identity(m);
    let mut v = Grid::<T>::identity(n);
    let mut k = 0;
    while k < m.min(n) {
        let Some((pi, pj)) = find_pivot(&a, k) else {
            break;
        };
        a.swap_rows(k, pi);
        u.swap_rows(k, pi);
        a.swap_cols(k, pj);
        v.swap_cols(k, pj);
        loop {
            let mut restart = false;
            for i in k + 1..m {
                if a.at(i, k).elim_is_zero() {
                    continue;
                }
                let q = a.at(i, k).div_trunc_checked(a.at(k, k))?;
                if !q.elim_is_zero() {
                    a.row_sub_mul(i, k, &q, k)?;
                    u.row_sub_mul(i, k, &q, 0)?;
                }
                if !a.at(i, k).elim_is_zero() {
                    a.swap_rows(i, k);
                    u.swap_rows(i, k);
                    restart = true;
                    break;
                }
            }
            if restart {
                continue;
            }
            for j in k + 1..n {
                if a.at(k, j).elim_is_zero() {
                    continue;
                }
                let q = a.at(k, j).div_trunc_checked(a.at(k, k))?;
                if !q.elim_is_zero() {
                    a.col_sub_mul(j, k, &q, k)?;
                    v.col_sub_mul(j, k, &q, 0)?;
                }
                if !a.at(k, j).elim_is_zero() {
                    a.swap_cols(j, k);
                    v.swap_cols(j, k);
                    restart = true;
                    break;
                }
            }
            if restart {
                continue;
            }
            // Both cleared; enforce that the pivot divides the whole block.
            let mut fixed = false;
            'scan: for i in k + 1..m {
                for j in k + 1..n {
                    if !a.at(k, k).divides_checked(a.at(i, j))? {
                        a.row_add(k, i, k)?;
                        u.row_add(k, i, 0)?;
                        fixed = true;
                        break 'scan;
                    }
                }
            }
            if !fixed {
                break;
            }
        }
        k += 1;
    }
    let mut rank = 0;
    for i in 0..m.min(n) {
        if a.at(i, i).elim_is_zero() {
            break;
        }
        if a.at(i, i).elim_is_negative() {
            a.negate_row(i)?;
            u.negate_row(i)?;
        }
        rank += 1;
    }
    Some(SnfCore { a, u, v, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn bigint_det(m: &IntMatrix) -> BigInt {
        // Fraction-free Bareiss elimination; test-side oracle only.
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if Zero::is_zero(&a[k][k]) {
                let Some(swap) = (k + 1..n).find(|&i| !Zero::is_zero(&a[i][k])) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    #[test]
    fn identity_is_its_own_smith_form() {
        let m = IntMatrix::identity(4);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, m);
        assert_eq!(snf.rank, 4);
    }

    #[test]
    fn diag_2_3_reduces_to_1_6() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.divisors(), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
        assert_eq!(bigint_det(&snf.u).abs(), BigInt::one());
        assert_eq!(bigint_det(&snf.v).abs(), BigInt::one());
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        // spanned by (1, -1) up to sign
        let g = k.column(0);
        assert_eq!(g[0].abs(), BigInt::one());
        assert_eq!(g[0], -g[1].clone());
    }

    #[test]
    fn solve_identity_and_insoluble() {
        let id = IntMatrix::identity(3);
        let b: Vec<BigInt> = vec![5.into(), (-2).into(), 0.into()];
        assert_eq!(solve(&id, &b), Some(b.clone()));
        let two = IntMatrix::from_rows(vec![vec![2]]);
        assert_eq!(solve(&two, &[BigInt::from(3)]), None);
        assert_eq!(
            solve(&two, &[BigInt::from(-8)]),
            Some(vec![BigInt::from(-4)])
        );
    }

    #[test]
    fn zero_matrix_kernel_is_identity() {
        let m = IntMatrix::zeros(3, 3);
        assert_eq!(kernel_basis(&m).cols(), 3);
        assert_eq!(rank(&m), 0);
    }

    #[test]
    fn unimodular_inverse_round_trip() {
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![0, 1]]);
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), IntMatrix::identity(2));
    }
}
