//! Physical parameters, the dimer Hamiltonian, and the three dissipator
//! variants.
//!
//! Everything is expressed in units of the decay rate γ. The drive and the
//! Kerr interaction carry the scaling F = √N F̃ and U = Ũ/N, so that √U·F is
//! independent of the scale parameter N and occupations grow ∝ N.

use crate::error::{BhdError, Result};
use crate::hilbert::{annihilation, FockSpace, Flag, Mode, Operator};
use crate::C64;

/// Dissipation channel layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DissipationKind {
    /// Independent reservoirs: jump operators a₁ and a₂, each at rate γ.
    Local,
    /// One collective reservoir: single jump operator a₁ + a₂ at rate γ.
    Nonlocal,
    /// Collective reservoir with a residual coupling-phase mismatch Δφ:
    /// jump operator cos(Δφ/2)·a_B + i·sin(Δφ/2)·a_A at rate 2γ.
    Imperfect { delta_phi: f64 },
}

/// All physical constants of the model, in units of γ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Pump-cavity detuning Δ = ω_p − ω_c.
    pub delta: f64,
    /// Intermode coupling J ≥ 0.
    pub j: f64,
    /// Scaled interaction Ũ ≥ 0; the bare interaction is U = Ũ/N.
    pub u_tilde: f64,
    /// Scaled drive F̃ ≥ 0; the bare drive is F = √N F̃.
    pub f_tilde: f64,
    /// Decay rate γ > 0, the unit of frequency (defaults to 1).
    pub gamma: f64,
    /// Thermodynamic scale parameter N ≥ 1 (need not be an integer).
    pub n_scale: f64,
    pub dissipation: DissipationKind,
}

impl ModelParams {
    pub fn new(
        delta: f64,
        j: f64,
        u_tilde: f64,
        f_tilde: f64,
        gamma: f64,
        n_scale: f64,
        dissipation: DissipationKind,
    ) -> Result<Self> {
        let p = ModelParams {
            delta,
            j,
            u_tilde,
            f_tilde,
            gamma,
            n_scale,
            dissipation,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma > 0.0) {
            return Err(BhdError::InvalidArgument(format!(
                "gamma must be positive, got {}",
                self.gamma
            )));
        }
        if self.j < 0.0 || self.u_tilde < 0.0 || self.f_tilde < 0.0 {
            return Err(BhdError::InvalidArgument(
                "j, u_tilde and f_tilde must be nonnegative".into(),
            ));
        }
        if !(self.n_scale >= 1.0) {
            return Err(BhdError::InvalidArgument(format!(
                "n_scale must be at least 1, got {}",
                self.n_scale
            )));
        }
        Ok(())
    }

    /// Reference set Δ/γ = 0.7, J/γ = 1.5, Ũ/γ = 1 used for nonlocal runs.
    pub fn nonlocal_reference(n_scale: f64, f_tilde: f64) -> Self {
        ModelParams {
            delta: 0.7,
            j: 1.5,
            u_tilde: 1.0,
            f_tilde,
            gamma: 1.0,
            n_scale,
            dissipation: DissipationKind::Nonlocal,
        }
    }

    /// Reference set Δ = J = Ũ = γ used for local runs.
    pub fn local_reference(n_scale: f64, f_tilde: f64) -> Self {
        ModelParams {
            delta: 1.0,
            j: 1.0,
            u_tilde: 1.0,
            f_tilde,
            gamma: 1.0,
            n_scale,
            dissipation: DissipationKind::Local,
        }
    }

    /// Bare interaction U = Ũ/N.
    pub fn u(&self) -> f64 {
        self.u_tilde / self.n_scale
    }

    /// Bare drive F = √N F̃.
    pub fn f(&self) -> f64 {
        self.n_scale.sqrt() * self.f_tilde
    }
}

/// Jump operators with their rates.
#[derive(Debug, Clone)]
pub struct DissipatorSpec {
    pub jumps: Vec<(Operator, f64)>,
}

/// Dimer Hamiltonian in the frame rotating with the pump:
/// Ĥ = Σᵢ [−Δ n̂ᵢ + U a†ᵢa†ᵢaᵢaᵢ + F(a†ᵢ + aᵢ)] − J(a†₁a₂ + a₁a†₂).
pub fn hamiltonian(space: FockSpace, params: &ModelParams) -> Operator {
    let u = params.u();
    let f = params.f();
    let mut h: Option<Operator> = None;
    let mut acc = |op: Operator| {
        h = Some(match h.take() {
            Some(prev) => prev.add(&op),
            None => op,
        });
    };
    for mode in [Mode::Site1, Mode::Site2] {
        let a = annihilation(space, mode);
        let ad = a.adjoint();
        let n = ad.matmul(&a);
        acc(n.scale(C64::new(-params.delta, 0.0)));
        acc(ad.matmul(&ad).matmul(&a).matmul(&a).scale(C64::new(u, 0.0)));
        acc(ad.add(&a).scale(C64::new(f, 0.0)));
    }
    let a1 = annihilation(space, Mode::Site1);
    let a2 = annihilation(space, Mode::Site2);
    let hop = a1.adjoint().matmul(&a2).add(&a1.matmul(&a2.adjoint()));
    acc(hop.scale(C64::new(-params.j, 0.0)));
    let mut h = h.expect("nonempty sum");
    debug_assert!(h.hermiticity_defect() < 1e-12);
    h.hermitian = Flag::Yes;
    h
}

/// Jump operators of the configured dissipation channel.
pub fn dissipator_spec(space: FockSpace, params: &ModelParams) -> DissipatorSpec {
    let g = params.gamma;
    let jumps = match params.dissipation {
        DissipationKind::Local => vec![
            (annihilation(space, Mode::Site1), g),
            (annihilation(space, Mode::Site2), g),
        ],
        DissipationKind::Nonlocal => {
            let l = annihilation(space, Mode::Site1).add(&annihilation(space, Mode::Site2));
            vec![(l, g)]
        }
        DissipationKind::Imperfect { delta_phi } => {
            let c = C64::new((delta_phi / 2.0).cos(), 0.0);
            let s = C64::new(0.0, (delta_phi / 2.0).sin());
            let l = annihilation(space, Mode::Bonding)
                .scale(c)
                .add(&annihilation(space, Mode::Antibonding).scale(s));
            vec![(l, 2.0 * g)]
        }
    };
    DissipatorSpec { jumps }
}
