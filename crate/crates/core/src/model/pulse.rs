//! Time-dependent coupling schedules.

use serde::{Deserialize, Serialize};
use statrs::function::erf::erf;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PulseDirection {
    Emit,
    Absorb,
}

/// Coupling schedule J̃(t) for a node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PulseSpec {
    Constant {
        value: f64,
    },
    /// Wave-packet shaping pulse: J̃(t) = √(γ₁(t)·J/2) with the
    /// erf-compensated Gaussian rate γ₁(t); the absorb variant is the emit
    /// variant evaluated at total_time − t.
    TransferPulse {
        gamma_max: f64,
        kappa: f64,
        t_peak: f64,
        direction: PulseDirection,
        total_time: f64,
    },
    Piecewise {
        /// (t_start, t_end, value) segments; zero outside all segments.
        segments: Vec<(f64, f64, f64)>,
    },
}

impl PulseSpec {
    /// Transfer pulse with the standard parameter choices
    /// κ = 1.01 π γ_m²/4 and t_peak = 6/γ_m.
    pub fn transfer_defaults(gamma_max: f64, direction: PulseDirection, total_time: f64) -> Self {
        PulseSpec::TransferPulse {
            gamma_max,
            kappa: 1.01 * std::f64::consts::PI * gamma_max * gamma_max / 4.0,
            t_peak: 6.0 / gamma_max,
            direction,
            total_time,
        }
    }

    /// Coupling value at time t; `hopping` is the chain J entering the
    /// rate-to-coupling conversion.
    pub fn value(&self, t: f64, hopping: f64) -> Result<f64> {
        match self {
            PulseSpec::Constant { value } => Ok(*value),
            PulseSpec::TransferPulse {
                gamma_max,
                kappa,
                t_peak,
                direction,
                total_time,
            } => {
                let u = match direction {
                    PulseDirection::Emit => t,
                    PulseDirection::Absorb => total_time - t,
                };
                let rate = transfer_rate(u, *gamma_max, *kappa, *t_peak)?;
                Ok((rate * hopping.abs() / 2.0).sqrt())
            }
            PulseSpec::Piecewise { segments } => Ok(segments
                .iter()
                .find(|(a, b, _)| t >= *a && t < *b)
                .map(|&(_, _, v)| v)
                .unwrap_or(0.0)),
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, PulseSpec::Constant { .. })
    }

    /// Constant value, if the schedule is constant.
    pub fn constant_value(&self) -> Option<f64> {
        match self {
            PulseSpec::Constant { value } => Some(*value),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PulseSpec::Constant { value } => {
                if *value < 0.0 {
                    return Err(Error::InvalidPulse("constant coupling must be ≥ 0".into()));
                }
            }
            PulseSpec::TransferPulse { gamma_max, kappa, .. } => {
                if *gamma_max <= 0.0 || *kappa <= 0.0 {
                    return Err(Error::InvalidPulse("gamma_max and kappa must be > 0".into()));
                }
                // The denominator 2√κ − √π γ_m erf(...) is smallest as t→∞.
                if 2.0 * kappa.sqrt() - std::f64::consts::PI.sqrt() * gamma_max <= 0.0 {
                    return Err(Error::InvalidPulse(
                        "pulse denominator reaches zero: need 2√κ > √π γ_m".into(),
                    ));
                }
            }
            PulseSpec::Piecewise { segments } => {
                if segments.iter().any(|&(_, _, v)| v < 0.0) {
                    return Err(Error::InvalidPulse("piecewise values must be ≥ 0".into()));
                }
            }
        }
        Ok(())
    }
}

/// Shaped emission rate γ₁(t) = 2√κ γ_m e^{−κ(t−t_m)²} / (2√κ − √π γ_m erf(√κ(t−t_m))).
pub fn transfer_rate(t: f64, gamma_max: f64, kappa: f64, t_peak: f64) -> Result<f64> {
    let x = kappa.sqrt() * (t - t_peak);
    let denom = 2.0 * kappa.sqrt() - std::f64::consts::PI.sqrt() * gamma_max * erf(x);
    if denom <= 0.0 {
        return Err(Error::InvalidPulse(format!(
            "transfer pulse denominator {denom} ≤ 0 at t = {t}"
        )));
    }
    Ok(2.0 * kappa.sqrt() * gamma_max * (-x * x).exp() / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rate_at_peak_equals_gamma_max() {
        // erf(0) = 0 so γ₁(t_m) = γ_m.
        let gm = 0.3;
        let kappa = 1.01 * std::f64::consts::PI * gm * gm / 4.0;
        let r = transfer_rate(6.0 / gm, gm, kappa, 6.0 / gm).unwrap();
        assert_abs_diff_eq!(r, gm, epsilon = 1e-14);
    }

    #[test]
    fn rate_vanishes_far_before_pulse() {
        let gm = 0.3;
        let p = PulseSpec::transfer_defaults(gm, PulseDirection::Emit, 100.0);
        let v = p.value(-200.0, 1.0).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn absorb_is_time_reflected_emit() {
        let gm = 0.3;
        let tau = 50.0;
        let e = PulseSpec::transfer_defaults(gm, PulseDirection::Emit, tau);
        let a = PulseSpec::transfer_defaults(gm, PulseDirection::Absorb, tau);
        for &t in &[0.0, 10.0, 25.0, 40.0] {
            assert_abs_diff_eq!(
                a.value(t, 1.0).unwrap(),
                e.value(tau - t, 1.0).unwrap(),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn aggressive_pulse_rejected() {
        // κ too small for the requested rate: denominator would cross zero.
        let p = PulseSpec::TransferPulse {
            gamma_max: 1.0,
            kappa: 0.1,
            t_peak: 5.0,
            direction: PulseDirection::Emit,
            total_time: 20.0,
        };
        assert!(p.validate().is_err());
    }
}
