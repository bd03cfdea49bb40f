//! Dispersion, momentum-space couplings, and the Born-Markov rates.

use super::{BathCouplings, NetworkSpec};
use crate::{Error, Result};

/// Magnon dispersion ω(k·a). Cosine band ω = -2J cos(ka) for
/// nearest-neighbor couplings; the long-range linear-dispersion set gives
/// the triangular band ω = 2J|ka| - πJ (for the untruncated coupling sum).
pub fn dispersion(spec: &NetworkSpec, ka: f64) -> f64 {
    let j = spec.hopping;
    match spec.bath_couplings {
        BathCouplings::NearestNeighbor => -2.0 * j * ka.cos(),
        BathCouplings::LinearDispersion { .. } => {
            let range = spec.coupling_range();
            let mut w = 0.0;
            let mut r = 1;
            while r <= range {
                w -= 8.0 * j / std::f64::consts::PI * ((r as f64) * ka).cos()
                    / ((r * r) as f64);
                r += 2;
            }
            w
        }
    }
}

/// Group velocity ∂ω/∂k in units of J·a.
pub fn group_velocity(spec: &NetworkSpec, ka: f64) -> f64 {
    let j = spec.hopping;
    match spec.bath_couplings {
        BathCouplings::NearestNeighbor => 2.0 * j * ka.sin(),
        BathCouplings::LinearDispersion { .. } => {
            let range = spec.coupling_range();
            let mut v = 0.0;
            let mut r = 1;
            while r <= range {
                v += 8.0 * j / std::f64::consts::PI * ((r as f64) * ka).sin() / (r as f64);
                r += 2;
            }
            v
        }
    }
}

/// Engineered momentum-dependent coupling g_k = J̃ √(2a/π) cos(ka/2 − φ_α),
/// in units with a = 1.
pub fn momentum_coupling(spec: &NetworkSpec, alpha: usize, ka: f64) -> Result<f64> {
    let coupling = spec.node_coupling[alpha]
        .constant_value()
        .ok_or_else(|| Error::InvalidSpec("momentum coupling needs a constant J̃".into()))?;
    let phi = spec.chirality[alpha];
    Ok(coupling * (2.0 / std::f64::consts::PI).sqrt() * (ka / 2.0 - phi).cos())
}

/// Born-Markov decay rates and derived scales for a uniform network.
#[derive(Debug, Clone, Copy)]
pub struct MarkovRates {
    /// Decay into left-moving magnons.
    pub gamma_l: f64,
    /// Decay into right-moving magnons.
    pub gamma_r: f64,
    /// Total rate γ = γ_L + γ_R.
    pub gamma: f64,
    /// Lamb shift ω_LS = -(J̃²/J) cos 2φ.
    pub lamb_shift: f64,
    /// Renormalized detuning Δ̃ = Δ + ω_LS.
    pub detuning_renorm: f64,
    /// Resonant wavevector k̄a = arccos(Δ̃/2J) ∈ (0, π).
    pub kbar_a: f64,
    /// Propagation phase per node spacing, k̄d = k̄a · d/a.
    pub kbar_d: f64,
    /// Magnon propagation delay between adjacent nodes, τ = d/|v_k̄|.
    pub delay: f64,
}

/// Decay rates γ_ν = (J̃²/J)[1 + cos(k̄a − 2νφ)]/sin(k̄a), Lamb shift, and
/// the renormalized detuning. Requires uniform constant couplings and
/// |Δ̃| < 2J (inside the band).
pub fn markov_rates(spec: &NetworkSpec) -> Result<MarkovRates> {
    let coupling = uniform_coupling(spec)?;
    let phi = uniform_phi(spec)?;
    let j = spec.hopping;
    let g2 = coupling * coupling / j;
    let lamb_shift = -g2 * (2.0 * phi).cos();
    let dtil = spec.detuning + lamb_shift;
    if dtil.abs() >= 2.0 * j.abs() {
        return Err(Error::OutsideBand { detuning: dtil, band_edge: 2.0 * j.abs() });
    }
    let kbar_a = (dtil / (2.0 * j)).acos();
    let sin_k = kbar_a.sin();
    let rate = |nu: f64| g2 * (1.0 + (kbar_a - 2.0 * nu * phi).cos()) / sin_k;
    let gamma_r = rate(1.0);
    let gamma_l = rate(-1.0);
    let v = 2.0 * j * sin_k;
    let delay = spec.spacing as f64 / v.abs();
    Ok(MarkovRates {
        gamma_l,
        gamma_r,
        gamma: gamma_l + gamma_r,
        lamb_shift,
        detuning_renorm: dtil,
        kbar_a,
        kbar_d: kbar_a * spec.spacing as f64,
        delay,
    })
}

/// Bare detuning Δ that renormalizes to the requested Δ̃.
pub fn bare_detuning_for(spec_coupling: f64, hopping: f64, phi: f64, dtil: f64) -> f64 {
    dtil + spec_coupling * spec_coupling / hopping * (2.0 * phi).cos()
}

pub(crate) fn uniform_coupling(spec: &NetworkSpec) -> Result<f64> {
    let mut vals = spec.node_coupling.iter().map(|p| p.constant_value());
    let first = vals
        .next()
        .flatten()
        .ok_or_else(|| Error::InvalidSpec("Markov rates need constant couplings".into()))?;
    for v in vals {
        if v != Some(first) {
            return Err(Error::InvalidSpec("Markov rates need uniform couplings".into()));
        }
    }
    Ok(first)
}

pub(crate) fn uniform_phi(spec: &NetworkSpec) -> Result<f64> {
    let first = spec.chirality[0];
    if spec.chirality.iter().any(|&p| p != first) {
        return Err(Error::InvalidSpec("Markov rates need a uniform chirality phase".into()));
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::NetworkSpec;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn cosine_band_values() {
        let spec = NetworkSpec::uniform(1, 8, 4, 2, 0.1, 0.0);
        // ka = π/2: band center, maximal group velocity ±2Ja.
        assert_abs_diff_eq!(dispersion(&spec, PI / 2.0), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(group_velocity(&spec, PI / 2.0), 2.0, epsilon = 1e-14);
        // ka = 0: band edge.
        assert_abs_diff_eq!(dispersion(&spec, 0.0), -2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(group_velocity(&spec, 0.0), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn linear_band_center_and_velocity() {
        let mut spec = NetworkSpec::uniform(1, 200, 100, 2, 0.1, 0.0);
        spec.bath_couplings = BathCouplings::LinearDispersion { range: 0 };
        // Triangular band 2J|ka| − πJ: zero at ka = π/2, velocity 2Ja.
        // The velocity series converges only as 1/range at the band center.
        assert_abs_diff_eq!(dispersion(&spec, PI / 2.0), 0.0, epsilon = 2e-3);
        assert_abs_diff_eq!(group_velocity(&spec, PI / 2.0), 2.0, epsilon = 5e-2);
        // Band edges at ±πJ (slowest-converging points of the truncated sum).
        assert_abs_diff_eq!(dispersion(&spec, PI), PI, epsilon = 5e-2);
        assert_abs_diff_eq!(dispersion(&spec, 0.0), -PI, epsilon = 5e-2);
    }

    #[test]
    fn momentum_coupling_unidirectional_zero() {
        let spec = NetworkSpec::uniform(1, 8, 4, 2, 0.3, PI / 4.0);
        // φ = π/4 kills the backward mode ka = −π/2 ...
        let g = momentum_coupling(&spec, 0, -PI / 2.0).unwrap();
        assert_abs_diff_eq!(g, 0.0, epsilon = 1e-15);
        // ... while the forward mode couples at full strength.
        let g = momentum_coupling(&spec, 0, PI / 2.0).unwrap();
        assert_abs_diff_eq!(g, 0.3 * (2.0 / PI).sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn momentum_coupling_symmetric_at_phi_zero() {
        let spec = NetworkSpec::uniform(1, 8, 4, 2, 0.3, 0.0);
        for ka in [0.3, 1.1, 2.0] {
            assert_abs_diff_eq!(
                momentum_coupling(&spec, 0, ka).unwrap(),
                momentum_coupling(&spec, 0, -ka).unwrap(),
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn rates_unidirectional() {
        let spec = NetworkSpec::uniform(1, 8, 4, 2, 0.3, PI / 4.0);
        let r = markov_rates(&spec).unwrap();
        assert_abs_diff_eq!(r.gamma_l, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(r.gamma_r, 2.0 * 0.09, epsilon = 1e-14);
        assert_abs_diff_eq!(r.detuning_renorm, 0.0, epsilon = 1e-16);
    }

    #[test]
    fn rate_ratios_from_chirality() {
        // γ_L/γ_R = (1 − sin 2φ)/(1 + sin 2φ) at Δ̃ = 0.
        for (phi, expect) in [(PI / 10.0, 0.26), (PI / 16.0, 0.45)] {
            let mut spec = NetworkSpec::uniform(2, 12, 1, 10, 0.5, phi);
            spec.detuning = bare_detuning_for(0.5, 1.0, phi, 0.0);
            let r = markov_rates(&spec).unwrap();
            assert_abs_diff_eq!(r.gamma_l / r.gamma_r, expect, epsilon = 5e-3);
            assert_abs_diff_eq!(r.gamma, 2.0 * 0.25, epsilon = 1e-12);
        }
    }

    #[test]
    fn gamma_mirror_symmetry_in_band() {
        // γ_L(φ) = γ_R(−φ) for all Δ̃ in band.
        for dtil in [-1.2, -0.3, 0.0, 0.7, 1.5] {
            for phi in [0.1, 0.4, PI / 4.0] {
                let mut sp = NetworkSpec::uniform(1, 8, 4, 2, 0.3, phi);
                sp.detuning = bare_detuning_for(0.3, 1.0, phi, dtil);
                let mut sm = sp.clone();
                sm.chirality = vec![-phi];
                sm.detuning = bare_detuning_for(0.3, 1.0, -phi, dtil);
                let rp = markov_rates(&sp).unwrap();
                let rm = markov_rates(&sm).unwrap();
                assert_abs_diff_eq!(rp.gamma_l, rm.gamma_r, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn outside_band_rejected() {
        let mut spec = NetworkSpec::uniform(1, 8, 4, 2, 0.3, PI / 4.0);
        spec.detuning = 2.5;
        assert!(matches!(markov_rates(&spec), Err(Error::OutsideBand { .. })));
    }
}
