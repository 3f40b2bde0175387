//! The symmetric quasilinear MHD system.
//!
//! State vector U = (p, v₁, v₂, v₃, H₁, H₂, H₃, S). The nonconservative form
//!
//!   (1/ρc²) dp/dt + div v = 0,
//!   ρ dv/dt − (H,∇)H + ∇q = 0,      q = p + ½|H|²,
//!   dH/dt − (H,∇)v + H div v = 0,
//!   dS/dt = 0,
//!
//! reads as A₀(U)∂ₜU + Σ Aⱼ(U)∂ⱼU = 0 with symmetric Aⱼ and diagonal A₀.
//! The matrices are assembled entry-by-entry from one stored value per
//! symmetric pair, so symmetry is exact rather than a tolerance statement.

use crate::eos::{margin_from_values, EosError, EquationOfState};
use nalgebra::{Matrix8, Vector8};
use serde::{Deserialize, Serialize};

pub const DIM: usize = 8;

/// Plasma state (p, v, H, S) in nondimensional units. Hyperbolicity is a
/// checked property of a state, not a constructor constraint.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct PlasmaState {
    pub p: f64,
    pub v: [f64; 3],
    pub h: [f64; 3],
    pub s: f64,
}

impl PlasmaState {
    pub fn new(p: f64, v: [f64; 3], h: [f64; 3], s: f64) -> Self {
        Self { p, v, h, s }
    }

    pub fn to_vector(&self) -> Vector8<f64> {
        Vector8::from_column_slice(&[
            self.p, self.v[0], self.v[1], self.v[2], self.h[0], self.h[1], self.h[2], self.s,
        ])
    }

    pub fn from_vector(u: &Vector8<f64>) -> Self {
        Self {
            p: u[0],
            v: [u[1], u[2], u[3]],
            h: [u[4], u[5], u[6]],
            s: u[7],
        }
    }
}

/// Total pressure q = p + ½|H|².
pub fn total_pressure(u: &PlasmaState) -> f64 {
    u.p + 0.5 * (u.h[0] * u.h[0] + u.h[1] * u.h[1] + u.h[2] * u.h[2])
}

/// The four symmetric system matrices at a state point.
#[derive(Debug, Clone)]
pub struct MatrixSet {
    pub a0: Matrix8<f64>,
    pub a1: Matrix8<f64>,
    pub a2: Matrix8<f64>,
    pub a3: Matrix8<f64>,
}

impl MatrixSet {
    pub fn by_index(&self, alpha: usize) -> &Matrix8<f64> {
        match alpha {
            0 => &self.a0,
            1 => &self.a1,
            2 => &self.a2,
            3 => &self.a3,
            _ => panic!("matrix index out of range"),
        }
    }
}

fn sym_set(m: &mut Matrix8<f64>, i: usize, j: usize, v: f64) {
    m[(i, j)] = v;
    m[(j, i)] = v;
}

/// Assemble A₀..A₃ at the state `u`. Fails when the equation of state cannot
/// be evaluated there.
pub fn assemble_matrices(eos: &EquationOfState, u: &PlasmaState) -> Result<MatrixSet, EosError> {
    let e = eos.evaluate(u.p, u.s)?;
    Ok(assemble_with(e.rho, e.c2, u))
}

/// Assembly from raw (ρ, c²) values; useful for synthetic states in tests
/// and for frozen coefficients.
pub fn assemble_with(rho: f64, c2: f64, u: &PlasmaState) -> MatrixSet {
    let [v1, v2, v3] = u.v;
    let [h1, h2, h3] = u.h;
    let ac = 1.0 / (rho * c2);

    let a0 = Matrix8::from_diagonal(&Vector8::from_column_slice(&[
        ac, rho, rho, rho, 1.0, 1.0, 1.0, 1.0,
    ]));

    let mut a1 = Matrix8::from_diagonal(&Vector8::from_column_slice(&[
        v1 * ac,
        rho * v1,
        rho * v1,
        rho * v1,
        v1,
        v1,
        v1,
        v1,
    ]));
    sym_set(&mut a1, 0, 1, 1.0);
    sym_set(&mut a1, 1, 5, h2);
    sym_set(&mut a1, 1, 6, h3);
    sym_set(&mut a1, 2, 5, -h1);
    sym_set(&mut a1, 3, 6, -h1);

    let mut a2 = Matrix8::from_diagonal(&Vector8::from_column_slice(&[
        v2 * ac,
        rho * v2,
        rho * v2,
        rho * v2,
        v2,
        v2,
        v2,
        v2,
    ]));
    sym_set(&mut a2, 0, 2, 1.0);
    sym_set(&mut a2, 1, 4, -h2);
    sym_set(&mut a2, 2, 4, h1);
    sym_set(&mut a2, 2, 6, h3);
    sym_set(&mut a2, 3, 6, -h2);

    let mut a3 = Matrix8::from_diagonal(&Vector8::from_column_slice(&[
        v3 * ac,
        rho * v3,
        rho * v3,
        rho * v3,
        v3,
        v3,
        v3,
        v3,
    ]));
    sym_set(&mut a3, 0, 3, 1.0);
    sym_set(&mut a3, 1, 4, -h3);
    sym_set(&mut a3, 2, 5, -h3);
    sym_set(&mut a3, 3, 4, h1);
    sym_set(&mut a3, 3, 5, h2);

    MatrixSet { a0, a1, a2, a3 }
}

/// Hyperbolicity margin min(ρ, p_ρ); positive iff the symmetrizer A₀ is
/// positive definite at `u`. Outside the equation-of-state domain (ideal gas
/// with p ≤ 0) the margin is reported as the non-positive pressure itself —
/// finite, continuous through the ρ → 0 limit — so parameter scans can
/// classify failure regions instead of erroring.
pub fn hyperbolicity_margin(eos: &EquationOfState, u: &PlasmaState) -> f64 {
    match eos.evaluate(u.p, u.s) {
        Ok(e) => margin_from_values(e.rho, e.c2),
        Err(_) => u.p.min(0.0),
    }
}

/// A smooth plasma field with exact partial derivatives, used to probe the
/// operator pointwise with analytic test fields.
pub trait AnalyticPlasmaField {
    fn value(&self, t: f64, x: [f64; 3]) -> PlasmaState;
    /// ∂ₜU as an 8-vector.
    fn dt(&self, t: f64, x: [f64; 3]) -> Vector8<f64>;
    /// ∂ⱼU for axis ∈ {1, 2, 3}.
    fn dx(&self, t: f64, x: [f64; 3], axis: usize) -> Vector8<f64>;
}

/// Residual of the nonconservative operator A₀∂ₜU + Σ Aⱼ∂ⱼU at one point of
/// an analytic field (gravity source dropped).
pub fn nonconservative_residual(
    eos: &EquationOfState,
    field: &dyn AnalyticPlasmaField,
    t: f64,
    x: [f64; 3],
) -> Result<Vector8<f64>, EosError> {
    let u = field.value(t, x);
    let m = assemble_matrices(eos, &u)?;
    let mut r = m.a0 * field.dt(t, x);
    r += m.a1 * field.dx(t, x, 1);
    r += m.a2 * field.dx(t, x, 2);
    r += m.a3 * field.dx(t, x, 3);
    Ok(r)
}

/// Permutation that exchanges coordinate axes 2 ↔ 3 together with
/// (v₂, H₂) ↔ (v₃, H₃); conjugating A₂ at the swapped state reproduces A₃.
pub fn axis_swap_state(u: &PlasmaState) -> PlasmaState {
    PlasmaState {
        p: u.p,
        v: [u.v[0], u.v[2], u.v[1]],
        h: [u.h[0], u.h[2], u.h[1]],
        s: u.s,
    }
}

pub fn axis_swap_permutation() -> Matrix8<f64> {
    let mut p = Matrix8::zeros();
    let map = [0usize, 1, 3, 2, 4, 6, 5, 7];
    for (i, &j) in map.iter().enumerate() {
        p[(i, j)] = 1.0;
    }
    p
}
