//! Two-mode truncated Fock space and the operators acting on it.
//!
//! Basis ordering is row-major in the first mode: index = n₁·dim_site + n₂,
//! which makes the partial trace over mode 2 a contiguous block sum.

use crate::error::{BhdError, Result};
use crate::sparse::CsrMatrix;
use crate::C64;
use ndarray::{Array1, Array2};
use num_traits::Zero;

/// Truncated product Fock space of two bosonic modes with a common per-site
/// cutoff (at most `cutoff_per_site` bosons in each mode).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    cutoff_per_site: usize,
}

/// Which single-particle mode an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Site1,
    Site2,
    /// (a₁ + a₂)/√2
    Bonding,
    /// (a₁ − a₂)/√2
    Antibonding,
}

/// Build a space, rejecting cutoffs below one boson per site.
pub fn build_space(cutoff_per_site: usize) -> Result<FockSpace> {
    if cutoff_per_site < 1 {
        return Err(BhdError::InvalidArgument(
            "cutoff_per_site must be at least 1".into(),
        ));
    }
    Ok(FockSpace { cutoff_per_site })
}

impl FockSpace {
    pub fn cutoff_per_site(&self) -> usize {
        self.cutoff_per_site
    }

    /// Single-mode dimension, cutoff + 1.
    pub fn dim_site(&self) -> usize {
        self.cutoff_per_site + 1
    }

    /// Total dimension, dim_site².
    pub fn dim_total(&self) -> usize {
        self.dim_site() * self.dim_site()
    }

    /// Basis index of |n₁, n₂⟩.
    pub fn index(&self, n1: usize, n2: usize) -> usize {
        debug_assert!(n1 <= self.cutoff_per_site && n2 <= self.cutoff_per_site);
        n1 * self.dim_site() + n2
    }

    /// Occupation labels (n₁, n₂) of a basis index.
    pub fn labels(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.dim_total());
        (index / self.dim_site(), index % self.dim_site())
    }
}

/// Tri-state operator metadata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Flag {
    Yes,
    No,
    #[default]
    Unknown,
}

/// A (sparse) matrix on a [`FockSpace`] with Hermiticity/unitarity metadata.
#[derive(Debug, Clone)]
pub struct Operator {
    matrix: CsrMatrix,
    space: FockSpace,
    pub hermitian: Flag,
    pub unitary: Flag,
}

impl Operator {
    pub fn new(matrix: CsrMatrix, space: FockSpace) -> Self {
        assert_eq!(matrix.nrows(), space.dim_total());
        assert_eq!(matrix.ncols(), space.dim_total());
        Operator {
            matrix,
            space,
            hermitian: Flag::Unknown,
            unitary: Flag::Unknown,
        }
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn matrix(&self) -> &CsrMatrix {
        &self.matrix
    }

    pub fn to_dense(&self) -> Array2<C64> {
        self.matrix.to_dense()
    }

    pub fn adjoint(&self) -> Operator {
        let mut out = Operator::new(self.matrix.adjoint(), self.space);
        out.hermitian = self.hermitian;
        out
    }

    pub fn matmul(&self, other: &Operator) -> Operator {
        assert_eq!(self.space, other.space);
        Operator::new(self.matrix.matmul(&other.matrix), self.space)
    }

    pub fn add(&self, other: &Operator) -> Operator {
        assert_eq!(self.space, other.space);
        Operator::new(self.matrix.add(&other.matrix), self.space)
    }

    pub fn scale(&self, s: C64) -> Operator {
        Operator::new(self.matrix.scale(s), self.space)
    }

    pub fn apply(&self, psi: &StateVector) -> StateVector {
        assert_eq!(psi.space, self.space);
        StateVector {
            amplitudes: self.matrix.matvec(psi.amplitudes.view()),
            space: self.space,
            norm_deficit: 0.0,
        }
    }

    /// ‖A − A†‖_max; zero for Hermitian matrices.
    pub fn hermiticity_defect(&self) -> f64 {
        self.matrix
            .add(&self.matrix.adjoint().scale(C64::new(-1.0, 0.0)))
            .max_norm()
    }
}

/// Pure state on a [`FockSpace`].
///
/// `norm_deficit` records the probability mass lost to truncation by the
/// construction that produced the state (0 when none was lost); amplitudes
/// themselves are renormalized to unit norm where the constructor says so.
#[derive(Debug, Clone)]
pub struct StateVector {
    pub amplitudes: Array1<C64>,
    space: FockSpace,
    pub norm_deficit: f64,
}

impl StateVector {
    pub fn new(amplitudes: Array1<C64>, space: FockSpace) -> Self {
        assert_eq!(amplitudes.len(), space.dim_total());
        StateVector {
            amplitudes,
            space,
            norm_deficit: 0.0,
        }
    }

    /// Basis state |n₁, n₂⟩.
    pub fn basis_state(space: FockSpace, n1: usize, n2: usize) -> Self {
        let mut amplitudes = Array1::zeros(space.dim_total());
        amplitudes[space.index(n1, n2)] = C64::new(1.0, 0.0);
        StateVector::new(amplitudes, space)
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            self.amplitudes.mapv_inplace(|a| a / n);
        }
    }

    /// ⟨self|O|self⟩ / ⟨self|self⟩.
    pub fn expectation(&self, op: &Operator) -> C64 {
        assert_eq!(self.space, op.space);
        let oy = op.matrix.matvec(self.amplitudes.view());
        let num: C64 = self
            .amplitudes
            .iter()
            .zip(oy.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        let den: f64 = self.amplitudes.iter().map(|a| a.norm_sqr()).sum();
        num / den
    }

    /// |ψ⟩⟨ψ| as a dense matrix (normalized).
    pub fn density_matrix(&self) -> Array2<C64> {
        let d = self.space.dim_total();
        let n2: f64 = self.amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let mut rho = Array2::zeros((d, d));
        for i in 0..d {
            for j in 0..d {
                rho[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj() / n2;
            }
        }
        rho
    }
}

/// Annihilation operator for the requested mode. Site operators act as
/// â|n⟩ = √n |n−1⟩ on their mode and as identity on the other; bonding and
/// antibonding are (a₁ ± a₂)/√2 exactly.
pub fn annihilation(space: FockSpace, mode: Mode) -> Operator {
    let ds = space.dim_site();
    match mode {
        Mode::Site1 | Mode::Site2 => {
            let mut triplets = Vec::new();
            for n1 in 0..ds {
                for n2 in 0..ds {
                    match mode {
                        Mode::Site1 if n1 > 0 => triplets.push((
                            space.index(n1 - 1, n2),
                            space.index(n1, n2),
                            C64::new((n1 as f64).sqrt(), 0.0),
                        )),
                        Mode::Site2 if n2 > 0 => triplets.push((
                            space.index(n1, n2 - 1),
                            space.index(n1, n2),
                            C64::new((n2 as f64).sqrt(), 0.0),
                        )),
                        _ => {}
                    }
                }
            }
            let d = space.dim_total();
            Operator::new(CsrMatrix::from_triplets(d, d, &triplets), space)
        }
        Mode::Bonding => {
            let s = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            annihilation(space, Mode::Site1)
                .scale(s)
                .add(&annihilation(space, Mode::Site2).scale(s))
        }
        Mode::Antibonding => {
            let s = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            annihilation(space, Mode::Site1)
                .scale(s)
                .add(&annihilation(space, Mode::Site2).scale(-s))
        }
    }
}

/// Number operator a†a of the requested mode.
pub fn number(space: FockSpace, mode: Mode) -> Operator {
    let a = annihilation(space, mode);
    let mut n = a.adjoint().matmul(&a);
    n.hermitian = Flag::Yes;
    n
}

/// Total number operator n̂₁ + n̂₂.
pub fn total_number(space: FockSpace) -> Operator {
    let mut n = number(space, Mode::Site1).add(&number(space, Mode::Site2));
    n.hermitian = Flag::Yes;
    n
}

/// Swapping operator Ẑ₂ = Σ |n₁,n₂⟩⟨n₂,n₁|: Hermitian, unitary, involutive.
pub fn swap_operator(space: FockSpace) -> Operator {
    let ds = space.dim_site();
    let d = space.dim_total();
    let mut triplets = Vec::with_capacity(d);
    for n1 in 0..ds {
        for n2 in 0..ds {
            triplets.push((
                space.index(n2, n1),
                space.index(n1, n2),
                C64::new(1.0, 0.0),
            ));
        }
    }
    let mut op = Operator::new(CsrMatrix::from_triplets(d, d, &triplets), space);
    op.hermitian = Flag::Yes;
    op.unitary = Flag::Yes;
    op
}

/// Identity on the space.
pub fn identity(space: FockSpace) -> Operator {
    let mut op = Operator::new(CsrMatrix::identity(space.dim_total()), space);
    op.hermitian = Flag::Yes;
    op.unitary = Flag::Yes;
    op
}

/// Truncated product coherent state |α₁⟩⊗|α₂⟩, renormalized to unit norm.
/// The truncation deficit 1 − ‖ψ_truncated‖² is recorded on the result.
pub fn coherent_state(space: FockSpace, alpha1: C64, alpha2: C64) -> StateVector {
    let ds = space.dim_site();
    let single = |alpha: C64| -> Vec<C64> {
        let mut amps = Vec::with_capacity(ds);
        let mut cur = C64::new((-alpha.norm_sqr() / 2.0).exp(), 0.0);
        amps.push(cur);
        for n in 1..ds {
            cur = cur * alpha / C64::new((n as f64).sqrt(), 0.0);
            amps.push(cur);
        }
        amps
    };
    let c1 = single(alpha1);
    let c2 = single(alpha2);
    let mut amplitudes = Array1::zeros(space.dim_total());
    for n1 in 0..ds {
        for n2 in 0..ds {
            amplitudes[space.index(n1, n2)] = c1[n1] * c2[n2];
        }
    }
    let pre_norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
    let mut psi = StateVector::new(amplitudes, space);
    psi.normalize();
    psi.norm_deficit = 1.0 - pre_norm_sq;
    psi
}

/// True when |α|² for either mode exceeds half the cutoff, the regime where
/// truncation starts to bite.
pub fn coherent_state_suspect(space: FockSpace, alpha1: C64, alpha2: C64) -> bool {
    let half = space.cutoff_per_site() as f64 / 2.0;
    alpha1.norm_sqr() > half || alpha2.norm_sqr() > half
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn build_space_validates_cutoff() {
        assert!(build_space(0).is_err());
        let s = build_space(1).unwrap();
        assert_eq!(s.dim_total(), 4);
        let s = build_space(10).unwrap();
        assert_eq!(s.dim_total(), 121);
    }

    #[test]
    fn index_label_roundtrip() {
        let s = build_space(2).unwrap();
        let idx = s.index(2, 1);
        assert_eq!(s.labels(idx), (2, 1));
        for i in 0..s.dim_total() {
            let (n1, n2) = s.labels(i);
            assert_eq!(s.index(n1, n2), i);
        }
    }

    #[test]
    fn annihilation_on_basis_states() {
        let s = build_space(3).unwrap();
        let a1 = annihilation(s, Mode::Site1);
        let psi = a1.apply(&StateVector::basis_state(s, 1, 0));
        assert_abs_diff_eq!((psi.amplitudes[s.index(0, 0)] - C64::new(1.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(psi.norm(), 1.0, epsilon = 1e-15);
        // vacuum in mode 1 is annihilated regardless of mode 2
        let psi = a1.apply(&StateVector::basis_state(s, 0, 2));
        assert_abs_diff_eq!(psi.norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn independent_modes_commute() {
        let s = build_space(3).unwrap();
        let a1 = annihilation(s, Mode::Site1);
        let a2dag = annihilation(s, Mode::Site2).adjoint();
        let comm = a1
            .matmul(&a2dag)
            .add(&a2dag.matmul(&a1).scale(C64::new(-1.0, 0.0)));
        assert_abs_diff_eq!(comm.matrix().max_norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn canonical_commutator_in_interior() {
        let s = build_space(4).unwrap();
        for mode in [Mode::Site1, Mode::Site2, Mode::Bonding, Mode::Antibonding] {
            let a = annihilation(s, mode);
            let comm = a
                .matmul(&a.adjoint())
                .add(&a.adjoint().matmul(&a).scale(C64::new(-1.0, 0.0)))
                .to_dense();
            // [a, a†] = 1 away from the truncation boundary rows
            for i in 0..s.dim_total() {
                let (n1, n2) = s.labels(i);
                if n1 < s.cutoff_per_site() && n2 < s.cutoff_per_site() {
                    for j in 0..s.dim_total() {
                        let expect = if i == j { C64::new(1.0, 0.0) } else { C64::zero() };
                        assert_abs_diff_eq!((comm[(i, j)] - expect).norm(), 0.0, epsilon = 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn bonding_antibonding_completeness() {
        let s = build_space(3).unwrap();
        let lhs = {
            let b = annihilation(s, Mode::Bonding);
            let a = annihilation(s, Mode::Antibonding);
            b.matmul(&b.adjoint()).add(&a.matmul(&a.adjoint()))
        };
        let rhs = {
            let a1 = annihilation(s, Mode::Site1);
            let a2 = annihilation(s, Mode::Site2);
            a1.matmul(&a1.adjoint()).add(&a2.matmul(&a2.adjoint()))
        };
        let diff = lhs.add(&rhs.scale(C64::new(-1.0, 0.0)));
        assert_abs_diff_eq!(diff.matrix().max_norm(), 0.0, epsilon = 1e-13);
    }

    #[test]
    fn swap_definition_and_involution() {
        let s = build_space(2).unwrap();
        let z2 = swap_operator(s);
        let psi = z2.apply(&StateVector::basis_state(s, 2, 0));
        assert_abs_diff_eq!((psi.amplitudes[s.index(0, 2)] - C64::new(1.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        let z2sq = z2.matmul(&z2);
        let diff = z2sq.add(&identity(s).scale(C64::new(-1.0, 0.0)));
        assert_abs_diff_eq!(diff.matrix().max_norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(z2.hermiticity_defect(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn swap_conjugation_exchanges_sites() {
        let s = build_space(3).unwrap();
        let z2 = swap_operator(s);
        let a1 = annihilation(s, Mode::Site1);
        let a2 = annihilation(s, Mode::Site2);
        let conj = z2.matmul(&a1).matmul(&z2);
        let diff = conj.add(&a2.scale(C64::new(-1.0, 0.0)));
        assert_abs_diff_eq!(diff.matrix().max_norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn coherent_vacuum_is_basis_state() {
        let s = build_space(4).unwrap();
        let psi = coherent_state(s, C64::zero(), C64::zero());
        assert_abs_diff_eq!((psi.amplitudes[s.index(0, 0)] - C64::new(1.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(psi.norm_deficit, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn coherent_occupation_matches_truncated_poisson() {
        // cutoff 10, alpha2 = 1: <n2> must match the Poisson moments summed to
        // the cutoff, and be within 1e-6 of the untruncated value 1.
        let s = build_space(10).unwrap();
        let psi = coherent_state(s, C64::zero(), C64::new(1.0, 0.0));
        let n2 = psi.expectation(&number(s, Mode::Site2)).re;
        let mut norm = 0.0;
        let mut first = 0.0;
        let mut weight = 1.0; // |alpha|^{2n} / n! at n=0, times e^{-|alpha|^2}
        for n in 0..=10usize {
            if n > 0 {
                weight /= n as f64; // |alpha|^2 = 1
            }
            norm += weight;
            first += n as f64 * weight;
        }
        let expect = first / norm;
        assert_abs_diff_eq!(n2, expect, epsilon = 1e-12);
        assert_abs_diff_eq!(n2, 1.0, epsilon = 1e-6);
    }

    #[test]
    fn coherent_swap_symmetry() {
        let s = build_space(6).unwrap();
        let a = C64::new(0.3, -0.2);
        let b = C64::new(-0.1, 0.5);
        let swapped = swap_operator(s).apply(&coherent_state(s, a, b));
        let direct = coherent_state(s, b, a);
        for (x, y) in swapped.amplitudes.iter().zip(direct.amplitudes.iter()) {
            assert_abs_diff_eq!((x - y).norm(), 0.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn coherent_truncation_warning() {
        let s = build_space(4).unwrap();
        assert!(coherent_state_suspect(s, C64::new(2.0, 0.0), C64::zero()));
        assert!(!coherent_state_suspect(s, C64::new(1.0, 0.0), C64::zero()));
    }
}
