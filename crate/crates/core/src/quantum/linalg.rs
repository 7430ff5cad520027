//! Characteristic polynomials and Hermitian eigenvalues.

use std::fmt;

use num_complex::Complex;
use num_traits::Zero;

use super::matrix::{real, CMatrix, Real};

/// Monic polynomial with real coefficients, highest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly<T> {
    pub coeffs: Vec<T>,
}

pub type CharPolyF64 = CharPoly<f64>;

impl<T: Real> CharPoly<T> {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        CharPoly { coeffs: out }
    }

    /// Largest coefficient-wise difference; degrees must agree.
    pub fn max_diff(&self, other: &Self) -> T {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).abs()))
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.coeffs.len() == other.coeffs.len() && self.max_diff(other) <= tol
    }
}

impl<T: Real + fmt::Display> fmt::Display for CharPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            let p = d - k;
            if c.abs() < real(1e-12) && !(first && p == 0) {
                continue;
            }
            let sign = if c < T::zero() { "-" } else { "+" };
            let mag = c.abs();
            let unit = (mag - T::one()).abs() < real(1e-12) && p > 0;
            let body = match (unit, p) {
                (true, 1) => "λ".to_string(),
                (true, _) => format!("λ^{p}"),
                (false, 0) => format!("{mag}"),
                (false, 1) => format!("{mag}λ"),
                (false, _) => format!("{mag}λ^{p}"),
            };
            if first {
                let lead = if sign == "-" { "-" } else { "" };
                write!(f, "{lead}{body}")?;
                first = false;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}

/// `det(λI - A)` by the Faddeev–LeVerrier recursion; imaginary parts are
/// dropped, so `A` should be Hermitian.
pub fn char_poly<T: Real>(a: &CMatrix<T>) -> CharPoly<T> {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![Complex::<T>::zero(); n + 1];
    coeffs[0] = Complex::new(T::one(), T::zero());
    let mut m = CMatrix::<T>::zeros(n, n);
    let id = CMatrix::<T>::identity(n);
    for k in 1..=n {
        m = &(a * &m) + &id.scale(coeffs[k - 1]);
        let am = a * &m;
        let kk: T = real(k as f64);
        coeffs[k] = -am.trace() / Complex::new(kk, T::zero());
    }
    CharPoly {
        coeffs: coeffs.into_iter().map(|c| c.re).collect(),
    }
}

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic Jacobi
/// rotations on the real symmetric embedding `[[Re, -Im], [Im, Re]]`.
pub fn hermitian_eigenvalues<T: Real>(h: &CMatrix<T>) -> Vec<T> {
    assert!(h.is_square());
    let n = h.rows();
    let m = 2 * n;
    let mut a = vec![T::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            let v = h[(i, j)];
            a[i * m + j] = v.re;
            a[(i + n) * m + j + n] = v.re;
            a[i * m + j + n] = -v.im;
            a[(i + n) * m + j] = v.im;
        }
    }
    let eps: T = real(1e-14);
    for _sweep in 0..100 {
        let off: T = (0..m)
            .flat_map(|p| (0..m).filter(move |&q| q != p).map(move |q| (p, q)))
            .fold(T::zero(), |acc, (p, q)| acc + a[p * m + q] * a[p * m + q]);
        if off <= eps * eps {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                let apq = a[p * m + q];
                if apq.abs() <= T::min_positive_value() {
                    continue;
                }
                let two: T = real(2.0);
                let theta = (a[q * m + q] - a[p * m + p]) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let cs = T::one() / (t * t + T::one()).sqrt();
                let sn = t * cs;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = cs * akp - sn * akq;
                    a[k * m + q] = sn * akp + cs * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = cs * apk - sn * aqk;
                    a[q * m + k] = sn * apk + cs * aqk;
                }
            }
        }
    }
    let mut diag: Vec<T> = (0..m).map(|i| a[i * m + i]).collect();
    diag.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    diag.into_iter().step_by(2).collect()
}

/// Whether `h` is Hermitian with eigenvalues at least `-tol`.
pub fn is_positive_semidefinite<T: Real>(h: &CMatrix<T>, tol: T) -> bool {
    h.is_hermitian(tol) && hermitian_eigenvalues(h).iter().all(|&e| e >= -tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::matrix::{c, CMatrixF64};

    #[test]
    fn char_poly_of_maximally_mixed_qubit() {
        let rho = CMatrixF64::identity(2).scale(c(0.5, 0.0));
        let p = char_poly(&rho);
        assert!(p.approx_eq(
            &CharPoly {
                coeffs: vec![1.0, -1.0, 0.25]
            },
            1e-12
        ));
        assert_eq!(p.to_string(), "λ^2 - λ + 0.25");
    }

    #[test]
    fn char_poly_matches_eigenvalues() {
        // Hermitian with eigenvalues 1 and 3
        let h = CMatrixF64::from_vec(2, 2, vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)]);
        let p = char_poly(&h);
        assert!(p.approx_eq(
            &CharPoly {
                coeffs: vec![1.0, -4.0, 3.0]
            },
            1e-12
        ));
        let ev = hermitian_eigenvalues(&h);
        assert!((ev[0] - 1.0).abs() < 1e-10 && (ev[1] - 3.0).abs() < 1e-10);
        assert!(p.eval(ev[0]).abs() < 1e-10);
    }

    #[test]
    fn psd_check() {
        let pure = CMatrixF64::column(vec![c(0.6, 0.0), c(0.0, 0.8)]).projector();
        assert!(is_positive_semidefinite(&pure, 1e-10));
        let z = CMatrixF64::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
        assert!(!is_positive_semidefinite(&z, 1e-10));
    }
}
