//! Exact integer and rational matrix arithmetic.
//!
//! Everything in this module works over `BigInt` / `BigRational`; no floating
//! point. The routines are written for desk-scale problems (rank up to a few
//! dozen), favouring clarity and exactness over asymptotics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type IVec = Vec<BigInt>;
pub type QVec = Vec<BigRational>;

/// Dense matrix with entries of type `T`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

pub type IMat = Mat<BigInt>;
pub type QMat = Mat<BigRational>;

impl<T: Clone + Zero> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T> Mat<T>
where
    T: Clone + Zero + One + std::ops::Mul<Output = T> + std::ops::AddAssign,
{
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.clone() * other[(k, j)].clone();
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc += self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Block-diagonal sum of two square matrices.
    pub fn block_diag(&self, other: &Self) -> Self {
        let n = self.rows + other.rows;
        let c = self.cols + other.cols;
        let mut m = Mat::zero(n, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }
}

impl IMat {
    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn to_rational(&self) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from(x.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IMat {
        IMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = &t / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    /// Row Hermite normal form. Returns `(h, u)` with `u * self = h`, `u`
    /// unimodular, `h` in row-echelon form with positive pivots and reduced
    /// entries above each pivot.
    pub fn row_hnf(&self) -> (IMat, IMat) {
        let mut h = self.clone();
        let mut u = IMat::identity(self.rows);
        let (m, n) = (self.rows, self.cols);
        let mut r = 0usize;
        for c in 0..n {
            if r == m {
                break;
            }
            // move a nonzero entry into the pivot position
            if let Some(i) = (r..m).find(|&i| !h[(i, c)].is_zero()) {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
            } else {
                continue;
            }
            // euclidean elimination below the pivot
            loop {
                let mut done = true;
                for i in r + 1..m {
                    if h[(i, c)].is_zero() {
                        continue;
                    }
                    done = false;
                    if h[(r, c)].abs() > h[(i, c)].abs() {
                        h.swap_rows(r, i);
                        u.swap_rows(r, i);
                    }
                    let q = rounded_div(&h[(i, c)], &h[(r, c)]);
                    row_axpy(&mut h, i, r, &-&q);
                    row_axpy(&mut u, i, r, &-&q);
                }
                if done {
                    break;
                }
            }
            if h[(r, c)].is_negative() {
                negate_row(&mut h, r);
                negate_row(&mut u, r);
            }
            // reduce entries above the pivot
            for i in 0..r {
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                if !q.is_zero() {
                    row_axpy(&mut h, i, r, &-&q);
                    row_axpy(&mut u, i, r, &-&q);
                }
            }
            r += 1;
        }
        (h, u)
    }

    pub fn rank(&self) -> usize {
        let (h, _) = self.row_hnf();
        (0..h.rows).filter(|&i| !h.row(i).iter().all(|x| x.is_zero())).count()
    }

    /// Basis of the integer kernel `{x : self * x = 0}`. The result is a
    /// saturated (primitive) sublattice of `Z^cols`.
    pub fn int_kernel(&self) -> Vec<IVec> {
        let (h, u) = self.transpose().row_hnf();
        (0..h.rows)
            .filter(|&i| h.row(i).iter().all(|x| x.is_zero()))
            .map(|i| u.row(i).to_vec())
            .collect()
    }

    /// Smith normal form: returns `(diag, v, w_inv)` where `v * self * w = d`
    /// for some unimodular `w` with inverse `w_inv`, and `diag` lists the
    /// diagonal of `d` (each entry nonnegative, dividing the next).
    pub fn snf(&self) -> SnfResult {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut v = IMat::identity(m);
        let mut w_inv = IMat::identity(n);
        let mut t = 0usize;
        while t < m.min(n) {
            // find a nonzero entry in the remaining block
            let piv = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_zero());
            let (pi, pj) = match piv {
                Some(p) => p,
                None => break,
            };
            a.swap_rows(t, pi);
            v.swap_rows(t, pi);
            swap_cols(&mut a, t, pj);
            w_inv.swap_rows(t, pj);
            loop {
                // clear column t with row ops
                let mut dirty = false;
                for i in t + 1..m {
                    if !a[(i, t)].is_zero() {
                        dirty = true;
                        if a[(t, t)].abs() > a[(i, t)].abs() {
                            a.swap_rows(t, i);
                            v.swap_rows(t, i);
                        }
                        let q = rounded_div(&a[(i, t)], &a[(t, t)]);
                        row_axpy(&mut a, i, t, &-&q);
                        row_axpy(&mut v, i, t, &-&q);
                    }
                }
                // clear row t with column ops
                for j in t + 1..n {
                    if !a[(t, j)].is_zero() {
                        dirty = true;
                        if a[(t, t)].abs() > a[(t, j)].abs() {
                            swap_cols(&mut a, t, j);
                            w_inv.swap_rows(t, j);
                        }
                        let q = rounded_div(&a[(t, j)], &a[(t, t)]);
                        col_axpy(&mut a, j, t, &-&q);
                        // column op A <- A*E adds -q*col_t to col_j;
                        // E^{-1} adds q*col_t to col_j, so on w_inv (tracked
                        // as left factor) add q*row_j to row_t.
                        row_axpy(&mut w_inv, t, j, &q);
                    }
                }
                if !dirty {
                    break;
                }
            }
            t += 1;
        }
        // enforce divisibility chain
        let k = t;
        loop {
            let mut fixed = true;
            for i in 0..k.saturating_sub(1) {
                let (d1, d2) = (a[(i, i)].clone(), a[(i + 1, i + 1)].clone());
                if d2.is_zero() || (&d2 % &d1).is_zero() {
                    continue;
                }
                fixed = false;
                let g = d1.gcd(&d2);
                let l = &d1 / &g * &d2;
                a[(i, i)] = g;
                a[(i + 1, i + 1)] = l;
            }
            if fixed {
                break;
            }
        }
        let diag: Vec<BigInt> =
            (0..m.min(n)).map(|i| a[(i, i)].abs()).collect();
        SnfResult { diag, v, w_inv }
    }
}

/// Result of a Smith normal form computation. `w_inv` is the inverse of the
/// column transform; its rows beyond the rank complete a saturated sublattice
/// to a basis of the ambient lattice.
pub struct SnfResult {
    pub diag: Vec<BigInt>,
    pub v: IMat,
    pub w_inv: IMat,
}

fn swap_cols(m: &mut IMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows {
        m.data.swap(i * m.cols + a, i * m.cols + b);
    }
}

/// row_i += q * row_j
fn row_axpy(m: &mut IMat, i: usize, j: usize, q: &BigInt) {
    for c in 0..m.cols {
        let t = &m[(j, c)] * q;
        m[(i, c)] += t;
    }
}

/// col_j += q * col_t
fn col_axpy(m: &mut IMat, j: usize, t: usize, q: &BigInt) {
    for r in 0..m.rows {
        let x = &m[(r, t)] * q;
        m[(r, j)] += x;
    }
}

fn negate_row(m: &mut IMat, i: usize) {
    for c in 0..m.cols {
        let t = -m[(i, c)].clone();
        m[(i, c)] = t;
    }
}

/// Integer division rounded to nearest (ties toward zero); keeps remainders
/// small during euclidean elimination.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2u8 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Divide an integer vector by the gcd of its entries; sign is preserved.
/// Returns `None` for the zero vector.
pub fn primitive_part(v: &[BigInt]) -> Option<IVec> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// Canonical sign representative: first nonzero coordinate positive.
pub fn canonical_sign(v: &[BigInt]) -> IVec {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.iter().map(|y| -y).collect(),
        _ => v.to_vec(),
    }
}

/// Clear denominators of a rational vector and reduce to a primitive
/// integer vector (zero vector maps to zero).
pub fn clear_denominators(v: &[BigRational]) -> IVec {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: IVec = v.iter().map(|x| (x * BigRational::from(l.clone())).to_integer()).collect();
    primitive_part(&ints).unwrap_or(ints)
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[BigRational], b: &[BigRational]) -> BigRational {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn ivec_to_q(v: &[BigInt]) -> QVec {
    v.iter().map(|x| BigRational::from(x.clone())).collect()
}

impl QMat {
    /// Rank over the rationals by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            if let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) {
                m.swap_rows(r, p);
                for i in r + 1..rows {
                    if m[(i, c)].is_zero() {
                        continue;
                    }
                    let f = &m[(i, c)] / &m[(r, c)];
                    for j in c..cols {
                        let t = &m[(r, j)] * &f;
                        let x = &m[(i, j)] - t;
                        m[(i, j)] = x;
                    }
                }
                r += 1;
            }
        }
        r
    }

    /// Solve `self * x = b` exactly. Returns one solution or `None` when
    /// inconsistent.
    pub fn solve(&self, b: &[BigRational]) -> Option<QVec> {
        assert_eq!(self.rows, b.len());
        let (rows, cols) = (self.rows, self.cols);
        let mut m = Mat::zero(rows, cols + 1);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            m[(i, cols)] = b[i].clone();
        }
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            if let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) {
                m.swap_rows(r, p);
                let piv = m[(r, c)].clone();
                for j in c..=cols {
                    let t = &m[(r, j)] / &piv;
                    m[(r, j)] = t;
                }
                for i in 0..rows {
                    if i != r && !m[(i, c)].is_zero() {
                        let f = m[(i, c)].clone();
                        for j in c..=cols {
                            let t = &m[(r, j)] * &f;
                            let x = &m[(i, j)] - t;
                            m[(i, j)] = x;
                        }
                    }
                }
                pivots.push((r, c));
                r += 1;
            }
        }
        // consistency: no pivot in the augmented column
        for i in r..rows {
            if !m[(i, cols)].is_zero() {
                return None;
            }
        }
        let mut x = vec![BigRational::zero(); cols];
        for &(pr, pc) in &pivots {
            x[pc] = m[(pr, cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse; errors when singular.
    pub fn inverse(&self) -> Result<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self[(i, j)].clone();
            }
            m[(i, n + i)] = BigRational::one();
        }
        for c in 0..n {
            let p = (c..n)
                .find(|&i| !m[(i, c)].is_zero())
                .ok_or(Error::DegenerateGram)?;
            m.swap_rows(c, p);
            let piv = m[(c, c)].clone();
            for j in 0..2 * n {
                let t = &m[(c, j)] / &piv;
                m[(c, j)] = t;
            }
            for i in 0..n {
                if i != c && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..2 * n {
                        let t = &m[(c, j)] * &f;
                        let x = &m[(i, j)] - t;
                        m[(i, j)] = x;
                    }
                }
            }
        }
        let mut inv = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = m[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }
}

/// Signature of a rational symmetric matrix by congruent diagonalization.
/// Pivot choice: first nonzero diagonal entry, else first nonzero
/// off-diagonal pair in lexicographic order.
pub fn symmetric_signature(g: &QMat) -> (usize, usize, usize) {
    assert_eq!(g.rows, g.cols);
    let n = g.rows;
    let mut m = g.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    while !active.is_empty() {
        let pivot = active.iter().position(|&i| !m[(i, i)].is_zero());
        let i = match pivot {
            Some(k) => active[k],
            None => {
                // first nonzero off-diagonal pair among active indices
                let mut found = None;
                'outer: for (a, &i) in active.iter().enumerate() {
                    for &j in &active[a + 1..] {
                        if !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => break, // all remaining rows are null
                    Some((i, j)) => {
                        // congruence x_i <- x_i + x_j makes m[i][i] nonzero
                        for c in 0..n {
                            let t = &m[(j, c)] + &m[(i, c)];
                            m[(i, c)] = t;
                        }
                        for r in 0..n {
                            let t = &m[(r, j)] + &m[(r, i)];
                            m[(r, i)] = t;
                        }
                        i
                    }
                }
            }
        };
        let d = m[(i, i)].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&k| k != i);
        for &j in &active {
            if m[(j, i)].is_zero() {
                continue;
            }
            let f = &m[(j, i)] / &d;
            for c in 0..n {
                let t = &m[(i, c)] * &f;
                let x = &m[(j, c)] - t;
                m[(j, c)] = x;
            }
            for r in 0..n {
                let t = &m[(r, i)] * &f;
                let x = &m[(r, j)] - t;
                m[(r, j)] = x;
            }
        }
    }
    (pos, neg, n - pos - neg)
}

pub fn ivec_from_i64(v: &[i64]) -> IVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn imat_from_i64(rows: &[&[i64]]) -> IMat {
    IMat::from_rows(rows.iter().map(|r| ivec_from_i64(r)).collect())
}
