//! Reduced-state characteristic polynomials and the product identity they
//! must satisfy for a two-way-communication implementation.

use num_complex::Complex;
use serde::Serialize;

use super::gate::{NamedState, UnitaryGate};
use super::linalg::{char_poly, CharPoly};
use super::matrix::{real, CMatrix, Real};
use super::QuantumError;

/// Characteristic polynomial of `tr_D U(|ψ>⊗|φ>)(..)†`.
pub fn reduced_char_poly<T: Real>(
    u: &UnitaryGate<T>,
    psi: &[Complex<T>],
    phi: &[Complex<T>],
) -> Result<CharPoly<T>, QuantumError> {
    Ok(char_poly(&reduced_state(u, psi, phi)?))
}

/// `tr_D U(|ψ>⊗|φ>)(..)†` as a `dim_out_c`-square density matrix.
pub fn reduced_state<T: Real>(
    u: &UnitaryGate<T>,
    psi: &[Complex<T>],
    phi: &[Complex<T>],
) -> Result<CMatrix<T>, QuantumError> {
    if psi.len() != u.dim_in_a || phi.len() != u.dim_in_b {
        return Err(QuantumError::Dimension(format!(
            "states of dims {}, {} for gate dims [{},{}]",
            psi.len(),
            phi.len(),
            u.dim_in_a,
            u.dim_in_b
        )));
    }
    for v in [psi, phi] {
        let norm = v.iter().fold(T::zero(), |acc, x| acc + x.norm_sqr()).sqrt();
        if (norm - T::one()).abs() > real(1e-9) {
            return Err(QuantumError::NotNormalized(norm.to_f64().unwrap_or(f64::NAN)));
        }
    }
    let input = CMatrix::column(psi.to_vec()).kron(&CMatrix::column(phi.to_vec()));
    let out = &u.matrix * &input;
    Ok(out.projector().partial_trace_second(u.dim_out_c, u.dim_out_d))
}

/// A quadruple `(ψ, ψ', φ, φ')` with `p_{ψφ}·p_{ψ'φ'} ≠ p_{ψ'φ}·p_{ψφ'}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvcondWitness {
    pub psi: String,
    pub psi_prime: String,
    pub phi: String,
    pub phi_prime: String,
    pub lhs: Vec<f64>,
    pub rhs: Vec<f64>,
    pub max_diff: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum EvcondVerdict {
    /// Necessary condition met on these states; inconclusive.
    Holds { quadruples: usize },
    /// No two-way-communication implementation exists.
    Violated(EvcondWitness),
}

/// Tolerance per coefficient of the product polynomials.
pub const EVCOND_TOL: f64 = 1e-8;

/// Checks the identity for every `ψ, ψ'` in `a_states` and `φ, φ'` in
/// `b_states`, iterated in that nesting order; the first violation wins.
pub fn evcond_check<T: Real>(
    u: &UnitaryGate<T>,
    a_states: &[NamedState<T>],
    b_states: &[NamedState<T>],
) -> Result<EvcondVerdict, QuantumError> {
    if a_states.is_empty() || b_states.is_empty() {
        return Err(QuantumError::EmptyStates);
    }
    let mut polys: Vec<Vec<CharPoly<T>>> = Vec::with_capacity(a_states.len());
    for psi in a_states {
        let row = b_states
            .iter()
            .map(|phi| reduced_char_poly(u, &psi.vector, &phi.vector))
            .collect::<Result<Vec<_>, _>>()?;
        polys.push(row);
    }
    let tol: T = real(EVCOND_TOL);
    let to_f64 = |p: &CharPoly<T>| p.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let mut count = 0;
    for a in 0..a_states.len() {
        for a2 in 0..a_states.len() {
            for b in 0..b_states.len() {
                for b2 in 0..b_states.len() {
                    count += 1;
                    let lhs = polys[a][b].mul(&polys[a2][b2]);
                    let rhs = polys[a2][b].mul(&polys[a][b2]);
                    let diff = lhs.max_diff(&rhs);
                    if diff > tol {
                        return Ok(EvcondVerdict::Violated(EvcondWitness {
                            psi: a_states[a].label.clone(),
                            psi_prime: a_states[a2].label.clone(),
                            phi: b_states[b].label.clone(),
                            phi_prime: b_states[b2].label.clone(),
                            lhs: to_f64(&lhs),
                            rhs: to_f64(&rhs),
                            max_diff: diff.to_f64().unwrap_or(f64::NAN),
                        }));
                    }
                }
            }
        }
    }
    Ok(EvcondVerdict::Holds { quadruples: count })
}
