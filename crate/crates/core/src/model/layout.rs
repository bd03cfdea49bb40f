//! Interleaved site ordering.
//!
//! The network is laid out as a single 1D chain: bath sites in order, with
//! each node inserted between its bath neighbors L[α] and R[α]. Every
//! node-bath coupling is then nearest-neighbor; the bath link L[α]–R[α]
//! bridges the node and is next-nearest (handled with swap gates in the MPS
//! engine, transparently elsewhere).

use super::NetworkSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotKind {
    /// Bath site j (0-based).
    Bath(usize),
    /// Node α (0-based).
    Node(usize),
}

#[derive(Debug, Clone)]
pub struct SiteLayout {
    pub slots: Vec<SlotKind>,
    /// Local Hilbert-space dimension per slot.
    pub dims: Vec<usize>,
    /// bath site j (0-based) → slot index.
    pub bath_slot: Vec<usize>,
    /// node α → slot index.
    pub node_slot: Vec<usize>,
}

impl SiteLayout {
    pub fn new(spec: &NetworkSpec) -> Self {
        let n_slots = spec.n_bath + spec.n_nodes;
        let mut slots = Vec::with_capacity(n_slots);
        let mut bath_slot = vec![0; spec.n_bath];
        let mut node_slot = vec![0; spec.n_nodes];
        let mut next_node = 0;
        for j in 0..spec.n_bath {
            bath_slot[j] = slots.len();
            slots.push(SlotKind::Bath(j));
            if next_node < spec.n_nodes && j + 1 == spec.left_site(next_node) {
                node_slot[next_node] = slots.len();
                slots.push(SlotKind::Node(next_node));
                next_node += 1;
            }
        }
        debug_assert_eq!(next_node, spec.n_nodes, "all nodes placed");
        let bath_dim = spec.statistics.bath_dim();
        let dims = slots
            .iter()
            .map(|s| match s {
                SlotKind::Bath(_) => bath_dim,
                SlotKind::Node(_) => 2,
            })
            .collect();
        SiteLayout { slots, dims, bath_slot, node_slot }
    }

    pub fn n_slots(&self) -> usize {
        self.slots.len()
    }

    /// Slots carrying boundary losses, paired with their rates:
    /// Γ_n acts on bath sites 1+n and N_B−n (1-based).
    pub fn loss_slots(&self, spec: &NetworkSpec) -> Vec<(usize, f64)> {
        let nb = spec.n_bath;
        let mut out = Vec::new();
        for (n, &rate) in spec.boundary_losses.iter().enumerate() {
            if rate == 0.0 {
                continue;
            }
            out.push((self.bath_slot[n], rate));
            out.push((self.bath_slot[nb - 1 - n], rate));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::NetworkSpec;

    #[test]
    fn interleaving_matches_minimal_dimer() {
        // N_S=2, N_B=4, d=2a: B1 N1 B2 B3 N2 B4
        let spec = NetworkSpec::uniform(2, 4, 1, 2, 0.1, 0.0);
        let l = spec.layout();
        assert_eq!(
            l.slots,
            vec![
                SlotKind::Bath(0),
                SlotKind::Node(0),
                SlotKind::Bath(1),
                SlotKind::Bath(2),
                SlotKind::Node(1),
                SlotKind::Bath(3),
            ]
        );
        assert_eq!(l.bath_slot, vec![0, 2, 3, 5]);
        assert_eq!(l.node_slot, vec![1, 4]);
    }

    #[test]
    fn boson_dims() {
        let mut spec = NetworkSpec::uniform(1, 3, 1, 2, 0.1, 0.0);
        spec.statistics = crate::Statistics::Boson { n_max: 2 };
        let l = spec.layout();
        assert_eq!(l.dims, vec![3, 2, 3, 3]);
    }
}
