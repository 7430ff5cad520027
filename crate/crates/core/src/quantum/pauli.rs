//! Pauli strings, Clifford tableaux and the Clifford test.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::gate::UnitaryGate;
use super::matrix::{real, CMatrix, Real};
use super::QuantumError;

/// `i^phase · X^x Z^z` on each qubit, qubit 0 being the most significant
/// tensor factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliString {
    pub x: Vec<bool>,
    pub z: Vec<bool>,
    pub phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            x: vec![false; n],
            z: vec![false; n],
            phase: 0,
        }
    }

    pub fn x_on(n: usize, k: usize) -> Self {
        let mut p = Self::identity(n);
        p.x[k] = true;
        p
    }

    pub fn z_on(n: usize, k: usize) -> Self {
        let mut p = Self::identity(n);
        p.z[k] = true;
        p
    }

    /// `Z^i X^j` on a block of qubits starting at `offset`, with `i` and `j`
    /// read as bit masks over the block (most significant bit first).
    pub fn zx_block(n: usize, offset: usize, width: usize, i: usize, j: usize) -> Self {
        let mut z = Self::identity(n);
        let mut x = Self::identity(n);
        for b in 0..width {
            let bit = width - 1 - b;
            z.z[offset + b] = (i >> bit) & 1 == 1;
            x.x[offset + b] = (j >> bit) & 1 == 1;
        }
        z.mul(&x)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Group product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        let swaps = (0..self.len()).filter(|&k| self.z[k] && other.x[k]).count();
        PauliString {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a ^ b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a ^ b).collect(),
            phase: ((self.phase as usize + other.phase as usize + 2 * swaps) % 4) as u8,
        }
    }

    /// Same operator without its phase.
    pub fn unsigned(&self) -> Self {
        PauliString {
            phase: 0,
            ..self.clone()
        }
    }

    /// Restriction to qubits `from..to`, phase dropped.
    pub fn slice(&self, from: usize, to: usize) -> Self {
        PauliString {
            x: self.x[from..to].to_vec(),
            z: self.z[from..to].to_vec(),
            phase: 0,
        }
    }

    fn masks(&self) -> (usize, usize) {
        let n = self.len();
        let mut xm = 0;
        let mut zm = 0;
        for k in 0..n {
            if self.x[k] {
                xm |= 1 << (n - 1 - k);
            }
            if self.z[k] {
                zm |= 1 << (n - 1 - k);
            }
        }
        (xm, zm)
    }

    pub fn matrix<T: Real>(&self) -> CMatrix<T> {
        let n = self.len();
        let d = 1usize << n;
        let (xm, zm) = self.masks();
        let ph = phase_value::<T>(self.phase);
        let mut m = CMatrix::zeros(d, d);
        for col in 0..d {
            let sign = if (col & zm).count_ones() % 2 == 1 {
                -Complex::one()
            } else {
                Complex::one()
            };
            m[(col ^ xm, col)] = ph * sign;
        }
        m
    }

    /// The Pauli string equal to `m` within `tol`, if any.
    pub fn from_matrix<T: Real>(m: &CMatrix<T>, tol: T) -> Option<Self> {
        let d = m.rows();
        if !m.is_square() || !d.is_power_of_two() {
            return None;
        }
        let n = d.trailing_zeros() as usize;
        let xm = (0..d).find(|&r| m[(r, 0)].norm() > real(0.5))?;
        let ph = m[(xm, 0)];
        let phase = (0..4u8).find(|&p| (phase_value::<T>(p) - ph).norm() <= tol)?;
        let mut zm = 0;
        for b in 0..n {
            let col = 1usize << b;
            let v = m[(col ^ xm, col)] / ph;
            if (v + Complex::one()).norm() <= tol {
                zm |= col;
            }
        }
        let p = PauliString {
            x: (0..n).map(|k| (xm >> (n - 1 - k)) & 1 == 1).collect(),
            z: (0..n).map(|k| (zm >> (n - 1 - k)) & 1 == 1).collect(),
            phase,
        };
        if p.matrix::<T>().approx_eq(m, tol) {
            Some(p)
        } else {
            None
        }
    }
}

fn phase_value<T: Real>(p: u8) -> Complex<T> {
    match p % 4 {
        0 => Complex::one(),
        1 => Complex::i(),
        2 => -Complex::<T>::one(),
        _ => -Complex::<T>::i(),
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ys = (0..self.len()).filter(|&k| self.x[k] && self.z[k]).count();
        // X Z = -i Y
        let total = (self.phase as usize + 3 * ys) % 4;
        f.write_str(["", "i", "-", "-i"][total])?;
        let letters: Vec<&str> = (0..self.len())
            .map(|k| match (self.x[k], self.z[k]) {
                (false, false) => "I",
                (true, false) => "X",
                (false, true) => "Z",
                (true, true) => "Y",
            })
            .collect();
        f.write_str(&letters.join("⊗"))
    }
}

impl FromStr for PauliString {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rest = s.trim();
        let mut phase = 0usize;
        if let Some(r) = rest.strip_prefix('-') {
            phase += 2;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        if let Some(r) = rest.strip_prefix('i') {
            phase += 1;
            rest = r;
        }
        let mut p = PauliString::identity(0);
        for ch in rest.chars().filter(|c| !matches!(c, '⊗' | ' ' | '*')) {
            let (x, z) = match ch {
                'I' => (false, false),
                'X' => (true, false),
                'Z' => (false, true),
                'Y' => {
                    phase += 1;
                    (true, true)
                }
                _ => return Err(format!("bad Pauli letter `{ch}` in `{s}`")),
            };
            p.x.push(x);
            p.z.push(z);
        }
        if p.is_empty() {
            return Err(format!("empty Pauli string `{s}`"));
        }
        p.phase = (phase % 4) as u8;
        Ok(p)
    }
}

/// Images of `X_k` and `Z_k` under conjugation by a Clifford unitary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    pub x_images: Vec<PauliString>,
    pub z_images: Vec<PauliString>,
}

impl Tableau {
    pub fn qubits(&self) -> usize {
        self.x_images.len()
    }

    /// `U P U†` assembled from the generator images.
    pub fn image(&self, p: &PauliString) -> PauliString {
        let n = self.qubits();
        let mut out = PauliString::identity(n);
        out.phase = p.phase;
        for k in 0..n {
            if p.x[k] {
                out = out.mul(&self.x_images[k]);
            }
            if p.z[k] {
                out = out.mul(&self.z_images[k]);
            }
        }
        out
    }

    /// One `P ↦ U P U†` line per generator.
    pub fn lines(&self) -> Vec<String> {
        let n = self.qubits();
        let mut out = Vec::new();
        for k in 0..n {
            out.push(format!("{} ↦ {}", PauliString::x_on(n, k), self.x_images[k]));
            out.push(format!("{} ↦ {}", PauliString::z_on(n, k), self.z_images[k]));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum CliffordVerdict {
    Yes { tableau: Tableau },
    No { witness: PauliString },
}

pub fn qubit_count(d: usize) -> Result<usize, QuantumError> {
    if d.is_power_of_two() {
        Ok(d.trailing_zeros() as usize)
    } else {
        Err(QuantumError::Dimension(format!("dimension {d} is not a power of 2")))
    }
}

/// Conjugates `X_k`, `Z_k` for every qubit (in that order) and reports the
/// first generator whose image is not a Pauli string.
pub fn is_clifford_22<T: Real>(u: &UnitaryGate<T>) -> Result<CliffordVerdict, QuantumError> {
    let n = qubit_count(u.dim_in_a)? + qubit_count(u.dim_in_b)?;
    let tol: T = real(1e-9);
    let ud = u.matrix.adjoint();
    let conj = |p: &PauliString| -> Option<PauliString> {
        let m = &(&u.matrix * &p.matrix::<T>()) * &ud;
        PauliString::from_matrix(&m, tol)
    };
    let mut tableau = Tableau {
        x_images: Vec::with_capacity(n),
        z_images: Vec::with_capacity(n),
    };
    for k in 0..n {
        let x = PauliString::x_on(n, k);
        let Some(xi) = conj(&x) else {
            return Ok(CliffordVerdict::No { witness: x });
        };
        let z = PauliString::z_on(n, k);
        let Some(zi) = conj(&z) else {
            return Ok(CliffordVerdict::No { witness: z });
        };
        tableau.x_images.push(xi);
        tableau.z_images.push(zi);
    }
    Ok(CliffordVerdict::Yes { tableau })
}

/// Coefficients `tr(Q† M)/d` over all unsigned Pauli strings `Q`, in order
/// of the `(x, z)` masks.
pub fn pauli_decomposition<T: Real>(m: &CMatrix<T>) -> Result<Vec<(PauliString, Complex<T>)>, QuantumError> {
    let n = qubit_count(m.rows())?;
    let d = 1usize << n;
    let mut out = Vec::with_capacity(d * d);
    for xm in 0..d {
        for zm in 0..d {
            let q = PauliString {
                x: (0..n).map(|k| (xm >> (n - 1 - k)) & 1 == 1).collect(),
                z: (0..n).map(|k| (zm >> (n - 1 - k)) & 1 == 1).collect(),
                phase: 0,
            };
            let coeff = (&q.matrix::<T>().adjoint() * m).trace() / Complex::new(real::<T>(d as f64), T::zero());
            if !coeff.is_zero() {
                out.push((q, coeff));
            }
        }
    }
    Ok(out)
}
