//! Dense complex matrices over a generic float.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use num_traits::{Float, One, Zero};

/// Scalar bound for the numerical code.
pub trait Real: Float + fmt::Debug + Send + Sync + 'static {}
impl<T: Float + fmt::Debug + Send + Sync + 'static> Real for T {}

pub fn real<T: Real>(v: f64) -> T {
    T::from(v).expect("representable constant")
}

pub fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(real(re), real(im))
}

/// Row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

pub type CMatrixF64 = CMatrix<f64>;

impl<T: Real> CMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must be rows * cols");
        CMatrix { rows, cols, data }
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let cols = rows.first().map_or(0, |x| x.len());
        let data = rows.iter().flat_map(|row| row.iter().map(|&v| c(v, 0.0))).collect();
        Self::from_vec(r, cols, data)
    }

    /// Column vector.
    pub fn column(v: Vec<Complex<T>>) -> Self {
        let n = v.len();
        Self::from_vec(n, 1, v)
    }

    /// `|i><j|` in dimension `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Complex::one();
        m
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

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| v * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).fold(Complex::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        m
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, v| acc + v.norm_sqr()).sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).norm()))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols) && self.max_abs_diff(other) <= tol
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.is_square() && self.approx_eq(&self.adjoint(), tol)
    }

    /// Largest entry of `|U†U - I|`.
    pub fn unitarity_defect(&self) -> T {
        (&self.adjoint() * self).max_abs_diff(&Self::identity(self.cols))
    }

    /// Traces out the second factor of a `(da*db)`-square matrix.
    pub fn partial_trace_second(&self, da: usize, db: usize) -> Self {
        assert_eq!(self.rows, da * db);
        let mut m = Self::zeros(da, da);
        for i in 0..da {
            for j in 0..da {
                let mut s = Complex::zero();
                for k in 0..db {
                    s = s + self[(i * db + k, j * db + k)];
                }
                m[(i, j)] = s;
            }
        }
        m
    }

    /// Traces out the first factor of a `(da*db)`-square matrix.
    pub fn partial_trace_first(&self, da: usize, db: usize) -> Self {
        assert_eq!(self.rows, da * db);
        let mut m = Self::zeros(db, db);
        for i in 0..db {
            for j in 0..db {
                let mut s = Complex::zero();
                for k in 0..da {
                    s = s + self[(k * db + i, k * db + j)];
                }
                m[(i, j)] = s;
            }
        }
        m
    }

    /// `|v><v|` for a column vector.
    pub fn projector(&self) -> Self {
        self * &self.adjoint()
    }
}

impl<T> Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Real> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut m = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    m.data[i * rhs.cols + j] = m.data[i * rhs.cols + j] + a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl<T: Real> Add for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl<T: Real> Sub for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl<T: Real + fmt::Display> fmt::Debug for CMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| {
                    let v = self[(i, j)];
                    format!("{:.4}{:+.4}i", v.re, v.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_and_trace() {
        let x = CMatrixF64::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let i2 = CMatrixF64::identity(2);
        let xi = x.kron(&i2);
        assert_eq!(xi[(0, 2)], c(1.0, 0.0));
        assert_eq!(xi[(0, 1)], c(0.0, 0.0));
        assert_eq!(xi.trace(), c(0.0, 0.0));
        assert!((&xi * &xi).approx_eq(&CMatrix::identity(4), 1e-12));
        assert!(xi.unitarity_defect() < 1e-12);
    }

    #[test]
    fn partial_traces() {
        let a = CMatrixF64::from_real_rows(&[&[0.25, 0.0], &[0.0, 0.75]]);
        let b = CMatrixF64::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]);
        let ab = a.kron(&b);
        assert!(ab.partial_trace_second(2, 2).approx_eq(&a, 1e-12));
        assert!(ab.partial_trace_first(2, 2).approx_eq(&b, 1e-12));
    }

    #[test]
    fn works_in_single_precision() {
        let m = CMatrix::<f32>::identity(3).scale(Complex::new(2.0f32, 0.0));
        assert!((m.trace().re - 6.0).abs() < 1e-6);
    }
}
