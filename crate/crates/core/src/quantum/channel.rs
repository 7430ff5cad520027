//! Choi matrices and the one-zigzag gate-teleportation channel.

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::Serialize;

use super::gate::UnitaryGate;
use super::linalg::is_positive_semidefinite;
use super::matrix::{real, CMatrix, Real};
use super::pauli::{is_clifford_22, qubit_count, CliffordVerdict, PauliString, Tableau};
use super::QuantumError;

/// `Σ_ij |i><j| ⊗ Λ(|i><j|)` for a channel `Λ` from `dim_in` to `dim_out`.
#[derive(Clone, PartialEq)]
pub struct ChoiMatrix<T> {
    pub dim_in: usize,
    pub dim_out: usize,
    pub matrix: CMatrix<T>,
}

pub type ChoiMatrixF64 = ChoiMatrix<f64>;

impl<T: Real> ChoiMatrix<T> {
    pub fn from_kraus(dim_in: usize, kraus: &[CMatrix<T>]) -> Self {
        let dim_out = kraus.first().map_or(dim_in, |k| k.rows());
        let mut m = CMatrix::zeros(dim_in * dim_out, dim_in * dim_out);
        for i in 0..dim_in {
            for j in 0..dim_in {
                let e = CMatrix::unit(dim_in, i, j);
                let mut image = CMatrix::zeros(dim_out, dim_out);
                for k in kraus {
                    image = &image + &(&(k * &e) * &k.adjoint());
                }
                m = &m + &CMatrix::unit(dim_in, i, j).kron(&image);
            }
        }
        ChoiMatrix {
            dim_in,
            dim_out,
            matrix: m,
        }
    }

    /// Partial trace over the output equals the identity within `tol`.
    pub fn is_trace_preserving(&self, tol: T) -> bool {
        self.matrix
            .partial_trace_second(self.dim_in, self.dim_out)
            .approx_eq(&CMatrix::identity(self.dim_in), tol)
    }

    pub fn is_completely_positive(&self, tol: T) -> bool {
        is_positive_semidefinite(&self.matrix, tol)
    }
}

impl<T: Real + std::fmt::Display> std::fmt::Debug for ChoiMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Choi[{}->{}] {:?}", self.dim_in, self.dim_out, self.matrix)
    }
}

/// Choi matrix of `ρ ↦ U ρ U†`.
pub fn unitary_choi<T: Real>(u: &UnitaryGate<T>) -> ChoiMatrix<T> {
    ChoiMatrix::from_kraus(u.dim(), std::slice::from_ref(&u.matrix))
}

/// Frobenius norm of the difference.
pub fn choi_distance<T: Real>(a: &ChoiMatrix<T>, b: &ChoiMatrix<T>) -> Result<T, QuantumError> {
    if (a.dim_in, a.dim_out) != (b.dim_in, b.dim_out) {
        return Err(QuantumError::Dimension(format!(
            "Choi matrices {}->{} and {}->{}",
            a.dim_in, a.dim_out, b.dim_in, b.dim_out
        )));
    }
    Ok((&a.matrix - &b.matrix).frobenius_norm())
}

/// Pure state over a list of registers, first register most significant.
struct Registers<T> {
    dims: Vec<usize>,
    amp: Vec<Complex<T>>,
}

impl<T: Real> Registers<T> {
    fn product(parts: Vec<(Vec<usize>, Vec<Complex<T>>)>) -> Self {
        let mut dims = Vec::new();
        let mut amp = vec![Complex::one()];
        for (d, v) in parts {
            dims.extend(d);
            amp = amp.iter().flat_map(|a| v.iter().map(move |b| *a * *b)).collect();
        }
        Registers { dims, amp }
    }

    fn strides(&self) -> Vec<usize> {
        let mut s = vec![1; self.dims.len()];
        for k in (0..self.dims.len().saturating_sub(1)).rev() {
            s[k] = s[k + 1] * self.dims[k + 1];
        }
        s
    }

    /// Flat offsets of every joint value of `targets`, in row-major order.
    fn offsets(&self, targets: &[usize]) -> Vec<usize> {
        let strides = self.strides();
        let mut offs = vec![0usize];
        for &t in targets {
            let step = strides[t];
            offs = offs
                .iter()
                .flat_map(|&o| (0..self.dims[t]).map(move |v| o + v * step))
                .collect();
        }
        offs
    }

    /// Flat indices with every target digit zero.
    fn bases(&self, targets: &[usize]) -> Vec<usize> {
        let rest: Vec<usize> = (0..self.dims.len()).filter(|k| !targets.contains(k)).collect();
        self.offsets(&rest)
    }

    fn apply(&mut self, targets: &[usize], m: &CMatrix<T>) {
        let offs = self.offsets(targets);
        for base in self.bases(targets) {
            let sub: Vec<Complex<T>> = offs.iter().map(|&o| self.amp[base + o]).collect();
            for (r, &o) in offs.iter().enumerate() {
                let mut s = Complex::zero();
                for (cidx, v) in sub.iter().enumerate() {
                    s = s + m[(r, cidx)] * *v;
                }
                self.amp[base + o] = s;
            }
        }
    }

    /// Contracts `targets` with `<bra|`, removing those registers.
    fn project(&self, targets: &[usize], bra: &[Complex<T>]) -> Self {
        let offs = self.offsets(targets);
        let amp = self
            .bases(targets)
            .into_iter()
            .map(|base| {
                offs.iter()
                    .zip(bra)
                    .fold(Complex::zero(), |acc, (&o, b)| acc + b.conj() * self.amp[base + o])
            })
            .collect();
        let dims = (0..self.dims.len())
            .filter(|k| !targets.contains(k))
            .map(|k| self.dims[k])
            .collect();
        Registers { dims, amp }
    }
}

fn max_entangled<T: Real>(d: usize) -> Vec<Complex<T>> {
    let s: T = real::<T>(d as f64).sqrt().recip();
    let mut v = vec![Complex::zero(); d * d];
    for k in 0..d {
        v[k * d + k] = Complex::new(s, T::zero());
    }
    v
}

/// `(P ⊗ I)|Φ>` for a `d`-dimensional local Pauli matrix `P`.
fn bell_vector<T: Real>(p: &CMatrix<T>) -> Vec<Complex<T>> {
    let d = p.rows();
    let s: T = real::<T>(d as f64).sqrt().recip();
    let mut v = vec![Complex::zero(); d * d];
    for r in 0..d {
        for k in 0..d {
            v[r * d + k] = p[(r, k)] * s;
        }
    }
    v
}

/// Kraus operators of the one-zigzag implementation, one per pair of
/// measurement outcomes `((i_a, j_a), (i_b, j_b))`.
///
/// Registers are `A, A1, A2, B, B1, B2`. The resource is `|Φ>_{A1A2} ⊗
/// |Φ>_{B1B2}` with `U` applied to `A2 B2`; the parties Bell-measure `A A1`
/// and `B B1` in the basis `(Z^i X^j ⊗ I)|Φ>` and broadcast the outcomes.
/// Outputs `C = A2` and `D = B2` then undo the Pauli string that the tableau
/// assigns to the outcomes, each correction depending on both outcomes.
pub fn zigzag1_kraus<T: Real>(u: &UnitaryGate<T>, tableau: &Tableau) -> Result<Vec<CMatrix<T>>, QuantumError> {
    let (da, db) = (u.dim_in_a, u.dim_in_b);
    let (na, nb) = (qubit_count(da)?, qubit_count(db)?);
    let n = na + nb;
    let mut resource = Registers::product(vec![
        (vec![da, da], max_entangled::<T>(da)),
        (vec![db, db], max_entangled::<T>(db)),
    ]);
    // registers now A1, A2, B1, B2
    resource.apply(&[1, 3], &u.matrix);
    let mut kraus = Vec::new();
    for ia in 0..da {
        for ja in 0..da {
            for ib in 0..db {
                for jb in 0..db {
                    let pa = PauliString::zx_block(na, 0, na, ia, ja);
                    let pb = PauliString::zx_block(nb, 0, nb, ib, jb);
                    let bell_a = bell_vector(&pa.matrix::<T>());
                    let bell_b = bell_vector(&pb.matrix::<T>());
                    let joint = PauliString::zx_block(n, 0, na, ia, ja).mul(&PauliString::zx_block(n, na, nb, ib, jb));
                    let image = tableau.image(&joint);
                    let corr_c = image.slice(0, na).matrix::<T>().adjoint();
                    let corr_d = image.slice(na, n).matrix::<T>().adjoint();
                    let mut k = CMatrix::zeros(da * db, da * db);
                    for a_in in 0..da {
                        for b_in in 0..db {
                            let mut basis_a = vec![Complex::zero(); da];
                            basis_a[a_in] = Complex::one();
                            let mut basis_b = vec![Complex::zero(); db];
                            basis_b[b_in] = Complex::one();
                            // registers A, A1, A2, B1, B2, B
                            let full = Registers::product(vec![
                                (vec![da], basis_a),
                                (vec![da, da, db, db], resource.amp.clone()),
                                (vec![db], basis_b),
                            ]);
                            // then A2, B1, B2, B
                            let rest = full.project(&[0, 1], &bell_a);
                            // then A2, B2
                            let mut out = rest.project(&[3, 1], &bell_b);
                            out.apply(&[0], &corr_c);
                            out.apply(&[1], &corr_d);
                            for (row, v) in out.amp.iter().enumerate() {
                                k[(row, a_in * db + b_in)] = *v;
                            }
                        }
                    }
                    kraus.push(k);
                }
            }
        }
    }
    Ok(kraus)
}

/// Choi matrix of the one-zigzag implementation of a Clifford `u`.
pub fn zigzag1_channel<T: Real>(u: &UnitaryGate<T>) -> Result<ChoiMatrix<T>, QuantumError> {
    let tableau = match is_clifford_22(u)? {
        CliffordVerdict::Yes { tableau } => tableau,
        CliffordVerdict::No { witness } => return Err(QuantumError::NotClifford(witness)),
    };
    let kraus = zigzag1_kraus(u, &tableau)?;
    Ok(ChoiMatrix::from_kraus(u.dim(), &kraus))
}

/// Summary of a one-zigzag construction checked against `U ρ U†`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Zigzag1Report {
    pub tableau: Vec<String>,
    pub outcomes: usize,
    pub distance: f64,
    pub trace_preserving: bool,
    pub completely_positive: bool,
}

pub fn zigzag1_report<T: Real>(u: &UnitaryGate<T>) -> Result<Zigzag1Report, QuantumError> {
    let tableau = match is_clifford_22(u)? {
        CliffordVerdict::Yes { tableau } => tableau,
        CliffordVerdict::No { witness } => return Err(QuantumError::NotClifford(witness)),
    };
    let kraus = zigzag1_kraus(u, &tableau)?;
    let choi = ChoiMatrix::from_kraus(u.dim(), &kraus);
    let tol: T = real(1e-9);
    Ok(Zigzag1Report {
        tableau: tableau.lines(),
        outcomes: kraus.len(),
        distance: choi_distance(&choi, &unitary_choi(u))?.to_f64().unwrap_or(f64::NAN),
        trace_preserving: choi.is_trace_preserving(tol),
        completely_positive: choi.is_completely_positive(tol),
    })
}
