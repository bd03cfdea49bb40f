//! Network parameterization and Hamiltonian construction.
//!
//! A [`NetworkSpec`] fully determines the model: driven two-level nodes,
//! the XX-chain waveguide, chiral node-chain couplings, boundary losses,
//! and the waveguide statistics. All engines consume the same term list
//! built here.

mod layout;
mod pulse;
mod quantities;
mod terms;

pub use layout::{SiteLayout, SlotKind};
pub use pulse::{transfer_rate, PulseDirection, PulseSpec};
pub use quantities::{dispersion, group_velocity, momentum_coupling, markov_rates, MarkovRates};
pub use terms::{term_list, sample_bath_hoppings, SiteOp, Term};

use serde::{Deserialize, Serialize};

use crate::{Error, Result, C64};

/// Waveguide excitation statistics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Statistics {
    /// Spin waveguide: hard-core magnons, local dimension 2.
    Hardcore,
    /// Bosonic waveguide with a per-site occupation cutoff.
    Boson { n_max: usize },
}

impl Statistics {
    pub fn bath_dim(&self) -> usize {
        match self {
            Statistics::Hardcore => 2,
            Statistics::Boson { n_max } => n_max + 1,
        }
    }
}

/// Bath coupling range: nearest-neighbor (cosine band) or the long-range
/// set yielding a triangular (linear) dispersion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BathCouplings {
    NearestNeighbor,
    /// Hops at odd ranges 2n+1 with amplitude -(4J/π)(2n+1)⁻², truncated at
    /// `range` (defaults to min(N_B - 1, 41) when 0).
    LinearDispersion {
        #[serde(default)]
        range: usize,
    },
}

impl Default for BathCouplings {
    fn default() -> Self {
        BathCouplings::NearestNeighbor
    }
}

/// Full parameterization of a chiral spin network.
///
/// Bath sites are numbered 1..=n_bath. Node α (0-based here) couples to its
/// left bath neighbor L[α] = first_left_site + α·spacing and to
/// R[α] = L[α] + 1. Energies are in units of the reference hopping,
/// times in its inverse.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkSpec {
    pub n_nodes: usize,
    pub n_bath: usize,
    /// L[0], 1-based bath site index.
    pub first_left_site: usize,
    /// Bath sites between consecutive nodes, d/a.
    #[serde(default = "default_spacing")]
    pub spacing: usize,
    /// Chain hopping J (reference energy; normally 1).
    #[serde(default = "default_hopping")]
    pub hopping: f64,
    /// Per-node coupling schedule J̃_α(t) ≥ 0.
    pub node_coupling: Vec<PulseSpec>,
    /// Per-node chirality phase φ_α ∈ [-π/4, π/4].
    pub chirality: Vec<f64>,
    /// Uniform bare detuning Δ.
    #[serde(default)]
    pub detuning: f64,
    /// Optional per-node detuning offsets δΔ_α.
    #[serde(default)]
    pub detuning_offsets: Vec<f64>,
    /// Per-node drive Ω_α as (re, im).
    #[serde(default)]
    pub drive: Vec<[f64; 2]>,
    /// Loss rates Γ_0..Γ_{M-1} applied at the M outermost sites of each end.
    #[serde(default)]
    pub boundary_losses: Vec<f64>,
    #[serde(default = "default_statistics")]
    pub statistics: Statistics,
    #[serde(default)]
    pub bath_couplings: BathCouplings,
    /// Variance σ² of Gaussian nearest-neighbor hopping disorder.
    #[serde(default)]
    pub disorder_variance: f64,
}

fn default_spacing() -> usize {
    2
}
fn default_hopping() -> f64 {
    1.0
}
fn default_statistics() -> Statistics {
    Statistics::Hardcore
}

impl NetworkSpec {
    /// A minimal valid spec with uniform constant coupling, to be adjusted
    /// field by field.
    pub fn uniform(
        n_nodes: usize,
        n_bath: usize,
        first_left_site: usize,
        spacing: usize,
        coupling: f64,
        phi: f64,
    ) -> Self {
        NetworkSpec {
            n_nodes,
            n_bath,
            first_left_site,
            spacing,
            hopping: 1.0,
            node_coupling: vec![PulseSpec::Constant { value: coupling }; n_nodes],
            chirality: vec![phi; n_nodes],
            detuning: 0.0,
            detuning_offsets: vec![],
            drive: vec![],
            boundary_losses: vec![],
            statistics: Statistics::Hardcore,
            bath_couplings: BathCouplings::NearestNeighbor,
            disorder_variance: 0.0,
        }
    }

    /// Left bath neighbor L[α] (1-based), for 0-based node index.
    pub fn left_site(&self, alpha: usize) -> usize {
        self.first_left_site + alpha * self.spacing
    }

    /// Right bath neighbor R[α] = L[α] + 1 (1-based).
    pub fn right_site(&self, alpha: usize) -> usize {
        self.left_site(alpha) + 1
    }

    /// Bare detuning of node α including its offset.
    pub fn node_detuning(&self, alpha: usize) -> f64 {
        self.detuning + self.detuning_offsets.get(alpha).copied().unwrap_or(0.0)
    }

    /// Drive amplitude Ω_α.
    pub fn omega(&self, alpha: usize) -> C64 {
        match self.drive.get(alpha) {
            Some([re, im]) => C64::new(*re, *im),
            None => C64::new(0.0, 0.0),
        }
    }

    pub fn any_drive(&self) -> bool {
        (0..self.n_nodes).any(|a| self.omega(a).norm() > 0.0)
    }

    /// Number of sites (nodes + bath) in the interleaved chain.
    pub fn n_sites(&self) -> usize {
        self.n_nodes + self.n_bath
    }

    pub fn layout(&self) -> SiteLayout {
        SiteLayout::new(self)
    }

    /// Long-range truncation for the linear-dispersion coupling set.
    pub fn coupling_range(&self) -> usize {
        match self.bath_couplings {
            BathCouplings::NearestNeighbor => 1,
            BathCouplings::LinearDispersion { range } => {
                let r = if range == 0 { 41 } else { range };
                r.min(self.n_bath.saturating_sub(1)) | 1 // keep it odd
            }
        }
    }

    /// Check all structural invariants.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidSpec(msg));
        if self.n_nodes == 0 {
            return fail("n_nodes: must be positive".into());
        }
        if self.n_bath < 2 {
            return fail("n_bath: need at least two bath sites".into());
        }
        if self.first_left_site < 1 {
            return fail("first_left_site: bath sites are 1-based".into());
        }
        if self.n_nodes > 1 && self.spacing < 2 {
            return fail(format!(
                "spacing: node windows overlap for d/a = {} < 2",
                self.spacing
            ));
        }
        let last_right = self.right_site(self.n_nodes - 1);
        if last_right > self.n_bath {
            return fail(format!(
                "n_bath: node {} needs bath site {} but n_bath = {}",
                self.n_nodes - 1,
                last_right,
                self.n_bath
            ));
        }
        if self.node_coupling.len() != self.n_nodes {
            return fail("node_coupling: one schedule per node required".into());
        }
        if self.chirality.len() != self.n_nodes {
            return fail("chirality: one phase per node required".into());
        }
        if !self.detuning_offsets.is_empty() && self.detuning_offsets.len() != self.n_nodes {
            return fail("detuning_offsets: empty or one per node".into());
        }
        if !self.drive.is_empty() && self.drive.len() != self.n_nodes {
            return fail("drive: empty or one per node".into());
        }
        if self.boundary_losses.iter().any(|&g| g < 0.0) {
            return fail("boundary_losses: rates must be nonnegative".into());
        }
        if 2 * self.boundary_losses.len() > self.n_bath {
            return fail("boundary_losses: more loss sites than bath sites".into());
        }
        if let Statistics::Boson { n_max } = self.statistics {
            if n_max < 2 {
                return fail(format!("statistics.n_max: boson cutoff {} < 2", n_max));
            }
        }
        if self.disorder_variance < 0.0 {
            return fail("disorder_variance: must be nonnegative".into());
        }
        for (alpha, p) in self.node_coupling.iter().enumerate() {
            p.validate()
                .map_err(|e| Error::InvalidSpec(format!("node_coupling[{alpha}]: {e}")))?;
        }
        Ok(())
    }
}
