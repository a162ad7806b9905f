//! Dense matrices over a [`CommRing`].

use crate::error::{Error, Result};
use crate::rings::{CommRing, DiffRing};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, e)| (k / self.cols, k % self.cols, e))
    }

    pub fn map<F, T: Clone>(&self, f: F) -> Matrix<T>
    where
        F: FnMut(&E) -> T,
    {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<F, T: Clone>(&self, f: F) -> Result<Matrix<T>>
    where
        F: FnMut(&E) -> Result<T>,
    {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn replace_row(&self, i: usize, row: &[E]) -> Self {
        let mut out = self.clone();
        for (j, v) in row.iter().enumerate() {
            out.set(i, j, v.clone());
        }
        out
    }
}

pub fn zero<R: CommRing>(ring: &R, rows: usize, cols: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(rows, cols, |_, _| ring.zero())
}

pub fn identity<R: CommRing>(ring: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

pub fn add<R: CommRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "matrix shape mismatch");
    Matrix::from_fn(a.rows, a.cols, |i, j| ring.add(a.get(i, j), b.get(i, j)))
}

pub fn sub<R: CommRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "matrix shape mismatch");
    Matrix::from_fn(a.rows, a.cols, |i, j| ring.sub(a.get(i, j), b.get(i, j)))
}

pub fn mul<R: CommRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "matrix shape mismatch");
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).fold(ring.zero(), |acc, k| {
            let x = a.get(i, k);
            let y = b.get(k, j);
            if ring.is_zero(x) || ring.is_zero(y) {
                acc
            } else {
                ring.add(&acc, &ring.mul(x, y))
            }
        })
    })
}

pub fn scale<R: CommRing>(ring: &R, c: &R::Elem, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.map(|x| ring.mul(c, x))
}

/// Entrywise derivative.
pub fn derive<R: DiffRing>(ring: &R, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.map(|x| ring.derive(x))
}

/// Row vector times matrix.
pub fn vec_mul<R: CommRing>(ring: &R, v: &[R::Elem], a: &Matrix<R::Elem>) -> Vec<R::Elem> {
    assert_eq!(v.len(), a.rows, "vector length mismatch");
    (0..a.cols)
        .map(|j| {
            v.iter().enumerate().fold(ring.zero(), |acc, (i, x)| {
                if ring.is_zero(x) {
                    acc
                } else {
                    ring.add(&acc, &ring.mul(x, a.get(i, j)))
                }
            })
        })
        .collect()
}

pub fn is_zero<R: CommRing>(ring: &R, a: &Matrix<R::Elem>) -> bool {
    a.data.iter().all(|x| ring.is_zero(x))
}

/// Division-free determinant by Laplace expansion over column subsets.
///
/// Works in any commutative ring; cost is `O(n · 2^n)` ring operations.
///
/// Rows are first cleared of denominators when the ring offers
/// [`CommRing::common_denominator`], and the product divided out at the end.
pub fn det_expansion<R: CommRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix has no determinant",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    if n > 20 {
        return Err(Error::Unsupported(format!("expansion determinant of size {n}")));
    }
    let one = ring.one();
    let multipliers: Vec<R::Elem> = (0..n)
        .map(|i| ring.common_denominator(a.row(i)).unwrap_or_else(|| one.clone()))
        .collect();
    if multipliers.iter().all(|m| *m == one) {
        return Ok(expand(ring, a));
    }
    let cleared = Matrix::from_fn(n, n, |i, j| ring.mul(&multipliers[i], a.get(i, j)));
    let product = multipliers.iter().fold(one.clone(), |acc, m| ring.mul(&acc, m));
    ring.divide(&expand(ring, &cleared), &product)
}

fn expand<R: CommRing>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    let n = a.rows;
    // partial[mask] = signed sum over bijections rows 0..|mask| -> mask
    let mut partial: Vec<Option<R::Elem>> = vec![None; 1 << n];
    partial[0] = Some(ring.one());
    for mask in 0usize..(1 << n) {
        let Some(acc) = partial[mask].take() else {
            continue;
        };
        let i = mask.count_ones() as usize;
        if i == n {
            return acc;
        }
        for j in 0..n {
            if mask & (1 << j) != 0 || ring.is_zero(a.get(i, j)) {
                continue;
            }
            let mut term = ring.mul(&acc, a.get(i, j));
            if (mask >> (j + 1)).count_ones() % 2 == 1 {
                term = ring.neg(&term);
            }
            let slot = &mut partial[mask | (1 << j)];
            *slot = Some(match slot.take() {
                Some(prev) => ring.add(&prev, &term),
                None => term,
            });
        }
    }
    ring.zero()
}

/// Fraction-free (Bareiss) determinant. Every division is exact; the
/// ring must be able to divide by the previous pivot, which holds in
/// fields and fails loudly elsewhere.
pub fn det_bareiss<R: CommRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix has no determinant",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    if n == 0 {
        return Ok(ring.one());
    }
    let mut m = a.to_rows();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(&m[k][k]) {
            match (k + 1..n).find(|&r| !ring.is_zero(&m[r][k])) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(&m[k][k], &m[i][j]), &ring.mul(&m[i][k], &m[k][j]));
                m[i][j] = ring.divide(&num, &prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { ring.neg(&det) } else { det })
}

/// Solves `x · a = b` for a row vector `x` by Cramer's rule. Requires
/// `det a` to be invertible in the ring.
pub fn solve_left<R: CommRing>(ring: &R, a: &Matrix<R::Elem>, b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    if !a.is_square() || b.len() != a.cols {
        return Err(Error::Dimension("solve_left needs a square system".into()));
    }
    let det = det_expansion(ring, a)?;
    let inv = ring.inverse(&det).ok_or(Error::NotABasis)?;
    (0..a.rows)
        .map(|k| Ok(ring.mul(&det_expansion(ring, &a.replace_row(k, b))?, &inv)))
        .collect()
}

/// Inverse by Gauss–Jordan elimination; needs a field.
pub fn inverse<R: CommRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    if !a.is_square() {
        return Err(Error::Dimension("only square matrices are invertible".into()));
    }
    let n = a.rows;
    if n <= 8 {
        let multipliers: Option<Vec<R::Elem>> = (0..n).map(|i| ring.common_denominator(a.row(i))).collect();
        if let Some(multipliers) = multipliers {
            return inverse_cleared(ring, a, &multipliers);
        }
    }
    let mut m = a.to_rows();
    let mut inv = identity(ring, n).to_rows();
    for k in 0..n {
        let pivot = (k..n)
            .find(|&r| ring.inverse(&m[r][k]).is_some())
            .ok_or_else(|| Error::NotInvertible("singular matrix".into()))?;
        m.swap(k, pivot);
        inv.swap(k, pivot);
        let p = ring.inverse(&m[k][k]).expect("pivot chosen invertible");
        for j in 0..n {
            m[k][j] = ring.mul(&p, &m[k][j]);
            inv[k][j] = ring.mul(&p, &inv[k][j]);
        }
        for i in 0..n {
            if i == k || ring.is_zero(&m[i][k]) {
                continue;
            }
            let f = m[i][k].clone();
            for j in 0..n {
                m[i][j] = ring.sub(&m[i][j], &ring.mul(&f, &m[k][j]));
                inv[i][j] = ring.sub(&inv[i][j], &ring.mul(&f, &inv[k][j]));
            }
        }
    }
    Matrix::from_rows(inv)
}

/// With `C = diag(m)·A` denominator-free, `A⁻¹ = adj(C)·diag(m) / det C`.
fn inverse_cleared<R: CommRing>(ring: &R, a: &Matrix<R::Elem>, multipliers: &[R::Elem]) -> Result<Matrix<R::Elem>> {
    let n = a.rows;
    let cleared = Matrix::from_fn(n, n, |i, j| ring.mul(&multipliers[i], a.get(i, j)));
    let det_inv = ring
        .inverse(&expand(ring, &cleared))
        .ok_or_else(|| Error::NotInvertible("singular matrix".into()))?;
    Ok(Matrix::from_fn(n, n, |i, j| {
        let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
            cleared
                .get(if r < j { r } else { r + 1 }, if c < i { c } else { c + 1 })
                .clone()
        });
        let mut cofactor = expand(ring, &minor);
        if (i + j) % 2 == 1 {
            cofactor = ring.neg(&cofactor);
        }
        ring.mul(&ring.mul(&cofactor, &multipliers[j]), &det_inv)
    }))
}
