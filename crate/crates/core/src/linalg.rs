//! Dense matrices over a [`Scalar`], the discrete Laplacian and its
//! Moore-Penrose inverse, and voltages/resistances between vertices.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::graph::MetrizedGraph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>, // row-major
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)].approx_eq(&self[(c, r)])))
    }

    pub fn row_sums(&self) -> Vec<S> {
        (0..self.rows).map(|r| self.row(r).iter().fold(S::zero(), |a, x| a + x.clone())).collect()
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |a, k| a + self[(k, k)].clone())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] = out[(r, c)].clone() + a.clone() * rhs[(k, c)].clone();
                }
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan inverse with partial pivoting by absolute value.
    /// `None` when the matrix is singular (or not square).
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a[(r, col)].is_zero())
                .max_by(|&x, &y| {
                    a[(x, col)].abs().partial_cmp(&a[(y, col)].abs()).expect("comparable pivots")
                })?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = a[(col, c)].clone() / p.clone();
                inv[(col, c)] = inv[(col, c)].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    a[(r, c)] = a[(r, c)].clone() - f.clone() * a[(col, c)].clone();
                    inv[(r, c)] = inv[(r, c)].clone() - f.clone() * inv[(col, c)].clone();
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (r, c): (usize, usize)) -> &S {
        assert!(r < self.rows && c < self.cols, "matrix index ({r}, {c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        assert!(r < self.rows && c < self.cols, "matrix index ({r}, {c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;

    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

/// Rows on separate lines, entries separated by single spaces.
impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Discrete Laplacian with edge weights `1 / length`.
pub fn laplacian<S: Scalar>(g: &MetrizedGraph<S>) -> Result<Matrix<S>> {
    if !g.is_adequate() {
        return Err(Error::NotAdequate);
    }
    let n = g.vertex_count();
    let mut lap = Matrix::zeros(n, n);
    for e in g.edges() {
        let w = S::one() / e.length.clone();
        let (p, q) = (e.tail, e.head);
        lap[(p, q)] = -w.clone();
        lap[(q, p)] = -w.clone();
        lap[(p, p)] = lap[(p, p)].clone() + w.clone();
        lap[(q, q)] = lap[(q, q)].clone() + w;
    }
    Ok(lap)
}

/// `L⁺ = (L − J/n)⁻¹ + J/n` for the Laplacian of a connected graph.
pub fn pseudo_inverse<S: Scalar>(lap: &Matrix<S>) -> Result<Matrix<S>> {
    if lap.rows() != lap.cols() {
        return Err(Error::Dimension(format!("{}x{} is not square", lap.rows(), lap.cols())));
    }
    let n = lap.rows();
    let avg = S::one() / S::from_i64(n as i64);
    let shifted = lap.map(|x| x.clone() - avg.clone());
    let inv = shifted.inverse().ok_or(Error::SingularShift)?;
    Ok(inv.map(|x| x.clone() + avg.clone()))
}

fn check_indices<S>(m: &Matrix<S>, idx: &[usize]) -> Result<()> {
    match idx.iter().find(|&&i| i >= m.rows) {
        Some(&i) => Err(Error::VertexOutOfRange { index: i, count: m.rows }),
        None => Ok(()),
    }
}

/// `j_s(p, q)`: voltage at `p` when unit current enters at `q` and leaves at `s`.
pub fn voltage_at_vertices<S: Scalar>(pinv: &Matrix<S>, s: usize, p: usize, q: usize) -> Result<S> {
    check_indices(pinv, &[s, p, q])?;
    Ok(pinv[(s, s)].clone() - pinv[(s, p)].clone() - pinv[(s, q)].clone() + pinv[(p, q)].clone())
}

/// Effective resistance `r(p, q)` between two vertices.
pub fn resistance_at_vertices<S: Scalar>(pinv: &Matrix<S>, p: usize, q: usize) -> Result<S> {
    check_indices(pinv, &[p, q])?;
    let two = S::from_i64(2);
    Ok(pinv[(p, p)].clone() - two * pinv[(p, q)].clone() + pinv[(q, q)].clone())
}
