//! Bipartite unitary gates, standard states and the gate JSON format.

use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::matrix::{c, real, CMatrix, Real};
use super::QuantumError;

/// Unitary `A ⊗ B -> C ⊗ D` with `C = A` and `D = B` as spaces.
#[derive(Clone, PartialEq)]
pub struct UnitaryGate<T> {
    pub dim_in_a: usize,
    pub dim_in_b: usize,
    pub dim_out_c: usize,
    pub dim_out_d: usize,
    pub matrix: CMatrix<T>,
}

pub type UnitaryGateF64 = UnitaryGate<f64>;

impl<T: Real> UnitaryGate<T> {
    /// Checks shape and unitarity within `1e-10`.
    pub fn new(dim_a: usize, dim_b: usize, matrix: CMatrix<T>) -> Result<Self, QuantumError> {
        let d = dim_a * dim_b;
        if dim_a == 0 || dim_b == 0 || matrix.rows() != d || matrix.cols() != d {
            return Err(QuantumError::Dimension(format!(
                "{}x{} matrix for dims [{dim_a},{dim_b}]",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let defect = matrix.unitarity_defect();
        if defect > real(1e-10) {
            return Err(QuantumError::NotUnitary(defect.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(UnitaryGate {
            dim_in_a: dim_a,
            dim_in_b: dim_b,
            dim_out_c: dim_a,
            dim_out_d: dim_b,
            matrix,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim_in_a * self.dim_in_b
    }

    /// Same gate times a global phase.
    pub fn with_phase(&self, phase: Complex<T>) -> Self {
        UnitaryGate {
            matrix: self.matrix.scale(phase),
            ..self.clone()
        }
    }

    /// `self` applied after `first`.
    pub fn after(&self, first: &Self) -> Self {
        UnitaryGate {
            matrix: &self.matrix * &first.matrix,
            ..self.clone()
        }
    }

    pub fn identity(dim_a: usize, dim_b: usize) -> Self {
        Self::new(dim_a, dim_b, CMatrix::identity(dim_a * dim_b)).expect("identity is unitary")
    }

    /// Control on the first qubit.
    pub fn cnot() -> Self {
        let m = CMatrix::from_real_rows(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[0.0, 0.0, 1.0, 0.0],
        ]);
        Self::new(2, 2, m).expect("CNOT is unitary")
    }

    pub fn cz() -> Self {
        let m = CMatrix::from_real_rows(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 0.0, 0.0, -1.0],
        ]);
        Self::new(2, 2, m).expect("CZ is unitary")
    }

    pub fn swap() -> Self {
        let m = CMatrix::from_real_rows(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
        ]);
        Self::new(2, 2, m).expect("SWAP is unitary")
    }

    /// `(T ⊗ I)·CNOT`, which is not Clifford.
    pub fn t_cnot() -> Self {
        let h: f64 = std::f64::consts::FRAC_1_SQRT_2;
        let t = CMatrix::from_vec(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, h)]);
        let local = t.kron(&CMatrix::identity(2));
        Self::new(2, 2, &local * &Self::cnot().matrix).expect("product of unitaries")
    }

    /// `cnot`, `cz`, `swap`, `identity` or `tcnot`.
    pub fn by_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "cnot" => Some(Self::cnot()),
            "cz" => Some(Self::cz()),
            "swap" => Some(Self::swap()),
            "identity" | "id" => Some(Self::identity(2, 2)),
            "tcnot" | "t-cnot" => Some(Self::t_cnot()),
            _ => None,
        }
    }

    pub fn from_json(data: &GateData) -> Result<Self, QuantumError> {
        let [a, b] = data.dims;
        let d = a * b;
        if data.matrix.len() != d * d {
            return Err(QuantumError::Dimension(format!(
                "{} entries for dims [{a},{b}], expected {}",
                data.matrix.len(),
                d * d
            )));
        }
        let entries = data.matrix.iter().map(|[re, im]| c(*re, *im)).collect();
        Self::new(a, b, CMatrix::from_vec(d, d, entries))
    }

    pub fn to_json(&self) -> GateData {
        GateData {
            dims: [self.dim_in_a, self.dim_in_b],
            matrix: self
                .matrix
                .data()
                .iter()
                .map(|v| [v.re.to_f64().unwrap_or(f64::NAN), v.im.to_f64().unwrap_or(f64::NAN)])
                .collect(),
        }
    }
}

impl<T: Real + fmt::Display> fmt::Debug for UnitaryGate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnitaryGate[{},{}] {:?}", self.dim_in_a, self.dim_in_b, self.matrix)
    }
}

/// `{"dims":[2,2],"matrix":[[re,im],...]}` with the matrix row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GateData {
    pub dims: [usize; 2],
    pub matrix: Vec<[f64; 2]>,
}

/// A labelled pure state.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedState<T> {
    pub label: String,
    pub vector: Vec<Complex<T>>,
}

impl<T: Real> NamedState<T> {
    pub fn new(label: &str, vector: Vec<Complex<T>>) -> Self {
        NamedState {
            label: label.to_string(),
            vector,
        }
    }

    pub fn zero() -> Self {
        Self::new("0", vec![c(1.0, 0.0), c(0.0, 0.0)])
    }

    pub fn one() -> Self {
        Self::new("1", vec![c(0.0, 0.0), c(1.0, 0.0)])
    }

    pub fn plus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::new("+", vec![c(h, 0.0), c(h, 0.0)])
    }

    pub fn minus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::new("-", vec![c(h, 0.0), c(-h, 0.0)])
    }

    pub fn plus_i() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::new("+i", vec![c(h, 0.0), c(0.0, h)])
    }

    pub fn norm(&self) -> T {
        self.vector.iter().fold(T::zero(), |acc, v| acc + v.norm_sqr()).sqrt()
    }
}

/// Qubit test states: `zero-plus` is `{|0>,|+>}`, `computational` is
/// `{|0>,|1>}`, `pauli` is `{|0>,|1>,|+>,|->,|+i>}`.
pub fn basis_states<T: Real>(name: &str) -> Option<Vec<NamedState<T>>> {
    match name {
        "zero-plus" => Some(vec![NamedState::zero(), NamedState::plus()]),
        "computational" => Some(vec![NamedState::zero(), NamedState::one()]),
        "pauli" => Some(vec![
            NamedState::zero(),
            NamedState::one(),
            NamedState::plus(),
            NamedState::minus(),
            NamedState::plus_i(),
        ]),
        _ => None,
    }
}
