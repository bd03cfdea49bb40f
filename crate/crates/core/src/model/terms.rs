//! Hamiltonian term intermediate representation.
//!
//! Every engine (dense, sector, MPS) consumes the same list of one- and
//! two-site terms. Hermitian-conjugate partners are listed explicitly, so
//! the sum of all terms is the full (Hermitian) Hamiltonian at the
//! requested time.

use rand::SeedableRng;

use super::{BathCouplings, NetworkSpec};
use crate::{Result, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiteOp {
    Raise,
    Lower,
    Num,
}

/// A product of single-site operators with a complex amplitude.
#[derive(Debug, Clone)]
pub struct Term {
    pub factors: Vec<(usize, SiteOp)>,
    pub amp: C64,
}

impl Term {
    pub fn one(slot: usize, op: SiteOp, amp: C64) -> Self {
        Term { factors: vec![(slot, op)], amp }
    }

    pub fn two(s1: usize, o1: SiteOp, s2: usize, o2: SiteOp, amp: C64) -> Self {
        Term { factors: vec![(s1, o1), (s2, o2)], amp }
    }
}

/// Draw per-link nearest-neighbor hoppings J_j ~ N(J, σ²), i.i.d. per link;
/// negative draws are kept as-is. Returns one value per link (j, j+1),
/// j = 1..N_B-1.
pub fn sample_bath_hoppings(spec: &NetworkSpec, seed: u64) -> Vec<f64> {
    use rand_distr::Distribution;
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
    let sigma = spec.disorder_variance.sqrt();
    let normal = rand_distr::Normal::new(spec.hopping, sigma).expect("valid normal");
    (0..spec.n_bath - 1).map(|_| normal.sample(&mut rng)).collect()
}

/// Hopping terms of the waveguide. `nn_hoppings` overrides the
/// nearest-neighbor amplitudes (disorder); `sign` multiplies every hop
/// (−1 implements the time-reversed chain); `skip_link` suppresses the
/// nearest-neighbor link starting at the given 1-based bath site.
pub fn bath_terms(
    spec: &NetworkSpec,
    nn_hoppings: Option<&[f64]>,
    sign: f64,
    skip_link: Option<usize>,
) -> Vec<Term> {
    let layout = spec.layout();
    let j = spec.hopping;
    let mut out = Vec::new();
    let mut push_hop = |a: usize, b: usize, amp: f64| {
        // -amp (S⁺_b S⁻_a + S⁺_a S⁻_b)
        let c = C64::new(-amp, 0.0);
        out.push(Term::two(layout.bath_slot[b], SiteOp::Raise, layout.bath_slot[a], SiteOp::Lower, c));
        out.push(Term::two(layout.bath_slot[a], SiteOp::Raise, layout.bath_slot[b], SiteOp::Lower, c));
    };
    match spec.bath_couplings {
        BathCouplings::NearestNeighbor => {
            for l in 0..spec.n_bath - 1 {
                if skip_link == Some(l + 1) {
                    continue;
                }
                let base = nn_hoppings.map(|h| h[l]).unwrap_or(j);
                push_hop(l, l + 1, sign * base);
            }
        }
        BathCouplings::LinearDispersion { .. } => {
            let range = spec.coupling_range();
            let mut r = 1;
            while r <= range {
                let w = 4.0 * j / std::f64::consts::PI / ((r * r) as f64);
                for l in 0..spec.n_bath - r {
                    if r == 1 && skip_link == Some(l + 1) {
                        continue;
                    }
                    // Disorder perturbs the nearest-neighbor amplitudes only.
                    let amp = if r == 1 {
                        w + nn_hoppings.map(|h| h[l] - j).unwrap_or(0.0)
                    } else {
                        w
                    };
                    push_hop(l, l + r, sign * amp);
                }
                r += 2;
            }
        }
    }
    out
}

/// Node-chain coupling terms for node α at coupling value J̃:
/// J̃ (e^{-iφ} σ⁻ S⁺_L + e^{iφ} σ⁻ S⁺_R) + H.c.
pub fn node_sb_terms(spec: &NetworkSpec, alpha: usize, coupling: f64, phi: f64) -> Vec<Term> {
    let layout = spec.layout();
    let ns = layout.node_slot[alpha];
    let ls = layout.bath_slot[spec.left_site(alpha) - 1];
    let rs = layout.bath_slot[spec.right_site(alpha) - 1];
    let jl = C64::from_polar(coupling, -phi);
    let jr = C64::from_polar(coupling, phi);
    vec![
        Term::two(ns, SiteOp::Lower, ls, SiteOp::Raise, jl),
        Term::two(ns, SiteOp::Raise, ls, SiteOp::Lower, jl.conj()),
        Term::two(ns, SiteOp::Lower, rs, SiteOp::Raise, jr),
        Term::two(ns, SiteOp::Raise, rs, SiteOp::Lower, jr.conj()),
    ]
}

/// Detuning and drive terms of the nodes:
/// -Δ_α n_α + (Ω_α σ⁻_α + Ω*_α σ⁺_α)/2.
pub fn node_static_terms(spec: &NetworkSpec) -> Vec<Term> {
    let layout = spec.layout();
    let mut out = Vec::new();
    for alpha in 0..spec.n_nodes {
        let ns = layout.node_slot[alpha];
        let delta = spec.node_detuning(alpha);
        if delta != 0.0 {
            out.push(Term::one(ns, SiteOp::Num, C64::new(-delta, 0.0)));
        }
        let omega = spec.omega(alpha);
        if omega.norm() > 0.0 {
            out.push(Term::one(ns, SiteOp::Lower, omega / 2.0));
            out.push(Term::one(ns, SiteOp::Raise, omega.conj() / 2.0));
        }
    }
    out
}

/// Full Hamiltonian term list at time t (boundary losses are not part of the
/// Hamiltonian; engines add them as Lindblad jumps or non-Hermitian factors).
pub fn term_list(spec: &NetworkSpec, t: f64, nn_hoppings: Option<&[f64]>) -> Result<Vec<Term>> {
    spec.validate()?;
    let mut out = node_static_terms(spec);
    out.extend(bath_terms(spec, nn_hoppings, 1.0, None));
    for alpha in 0..spec.n_nodes {
        let coupling = spec.node_coupling[alpha].value(t, spec.hopping)?;
        if coupling != 0.0 {
            out.extend(node_sb_terms(spec, alpha, coupling, spec.chirality[alpha]));
        }
    }
    Ok(out)
}
