//! Equation of state closures.
//!
//! The ideal-gas law is kept in the closed form p = e^S ρ^γ so that density,
//! sound speed and ρ_p are analytic in (p, S) and oracles stay exact.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EosError {
    #[error("ideal-gas state requires positive pressure, got p = {pressure}")]
    NonPositivePressure { pressure: f64 },
    #[error("adiabatic exponent must exceed 1, got gamma = {gamma}")]
    InvalidGamma { gamma: f64 },
}

/// Thermodynamic closure p = p(ρ, S).
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EquationOfState {
    /// p = e^S ρ^γ, so ρ(p,S) = (p e^{-S})^{1/γ}, c² = γ p / ρ, ρ_p = 1/c².
    IdealGas { gamma: f64 },
}

/// Density, squared sound speed and ρ_p at a state point. The three values
/// are mutually consistent: ρ_p · c² = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EosEval {
    pub rho: f64,
    pub c2: f64,
    pub rho_p: f64,
}

impl EquationOfState {
    pub fn ideal(gamma: f64) -> Self {
        EquationOfState::IdealGas { gamma }
    }

    pub fn validate(&self) -> Result<(), EosError> {
        match *self {
            EquationOfState::IdealGas { gamma } => {
                if gamma <= 1.0 || !gamma.is_finite() {
                    Err(EosError::InvalidGamma { gamma })
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Evaluate (ρ, c², ρ_p) at pressure `p` and entropy `s`.
    pub fn evaluate(&self, p: f64, s: f64) -> Result<EosEval, EosError> {
        self.validate()?;
        match *self {
            EquationOfState::IdealGas { gamma } => {
                if p <= 0.0 {
                    return Err(EosError::NonPositivePressure { pressure: p });
                }
                let rho = (p * (-s).exp()).powf(1.0 / gamma);
                let c2 = gamma * p / rho;
                Ok(EosEval { rho, c2, rho_p: 1.0 / c2 })
            }
        }
    }
}

/// Hyperbolicity margin from raw (ρ, p_ρ) values: min of the two quantities
/// whose positivity makes the symmetrizer positive definite.
pub fn margin_from_values(rho: f64, p_rho: f64) -> f64 {
    rho.min(p_rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ideal_gas_reference_points() {
        // γ = 5/3, S = 0, p = 1: ρ = 1, c² = 5/3.
        let eos = EquationOfState::ideal(5.0 / 3.0);
        let e = eos.evaluate(1.0, 0.0).unwrap();
        assert_relative_eq!(e.rho, 1.0, max_relative = 1e-14);
        assert_relative_eq!(e.c2, 5.0 / 3.0, max_relative = 1e-14);

        // γ = 2, p = 4: ρ = 2, c² = 4.
        let eos = EquationOfState::ideal(2.0);
        let e = eos.evaluate(4.0, 0.0).unwrap();
        assert_relative_eq!(e.rho, 2.0, max_relative = 1e-14);
        assert_relative_eq!(e.c2, 4.0, max_relative = 1e-14);
    }

    #[test]
    fn sound_speed_matches_finite_difference_of_pressure() {
        // c² = ∂p/∂ρ at fixed S, checked against a central difference of
        // p(ρ, S) = e^S ρ^γ.
        let gamma = 5.0 / 3.0;
        let eos = EquationOfState::ideal(gamma);
        for &(p, s) in &[(1.0, 0.0), (4.0, 0.3), (0.7, -1.0)] {
            let e = eos.evaluate(p, s).unwrap();
            let pressure = |rho: f64| s.exp() * rho.powf(gamma);
            let h = 1e-6 * e.rho;
            let fd = (pressure(e.rho + h) - pressure(e.rho - h)) / (2.0 * h);
            assert_relative_eq!(e.c2, fd, max_relative = 1e-8);
            // ρ_p · p_ρ = 1 consistency.
            assert_relative_eq!(e.rho_p * e.c2, 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn rejects_nonpositive_pressure() {
        let eos = EquationOfState::ideal(5.0 / 3.0);
        assert_eq!(
            eos.evaluate(0.0, 0.0),
            Err(EosError::NonPositivePressure { pressure: 0.0 })
        );
        assert!(matches!(
            eos.evaluate(-2.0, 0.0),
            Err(EosError::NonPositivePressure { pressure: -2.0 })
        ));
    }

    #[test]
    fn margin_from_raw_values() {
        assert_eq!(margin_from_values(2.0, 3.0), 2.0);
        assert_eq!(margin_from_values(0.5, 0.1), 0.1);
    }
}
