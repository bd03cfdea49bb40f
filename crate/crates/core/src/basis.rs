//! State bases for the exact engines.
//!
//! Two representations cover the working regimes:
//!
//! - [`ProductBasis`]: the full (or total-excitation-truncated) product
//!   space over the interleaved chain, with states encoded as mixed-radix
//!   u64 codes. Used by the dense master equation and MCWF engines.
//! - [`SectorBasis`]: a fixed-excitation-number basis storing occupied site
//!   lists, usable for chains of hundreds of sites when the dynamics
//!   conserves the total excitation number.

use std::collections::HashMap;

use crate::model::{SiteOp, Term};
use crate::C64;

/// Mixed-radix product basis over per-slot local dimensions.
#[derive(Debug, Clone)]
pub struct ProductBasis {
    pub dims: Vec<usize>,
    strides: Vec<u64>,
    /// Basis state codes; for the untruncated space this is 0..dim.
    pub states: Vec<u64>,
    index: Option<HashMap<u64, u32>>,
    pub dim: usize,
    full: bool,
}

impl ProductBasis {
    pub fn full(dims: &[usize]) -> Self {
        let strides = strides_for(dims);
        let dim: usize = dims.iter().product();
        ProductBasis {
            dims: dims.to_vec(),
            strides,
            states: (0..dim as u64).collect(),
            index: None,
            dim,
            full: true,
        }
    }

    /// States with total occupation ≤ `max_excitations`.
    pub fn truncated(dims: &[usize], max_excitations: usize) -> Self {
        let strides = strides_for(dims);
        let mut states = Vec::new();
        enumerate_truncated(dims, &strides, 0, 0, max_excitations, 0, &mut states);
        states.sort_unstable();
        let index = states
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect::<HashMap<_, _>>();
        let dim = states.len();
        ProductBasis { dims: dims.to_vec(), strides, states, index: Some(index), dim, full: false }
    }

    #[inline]
    pub fn code(&self, i: usize) -> u64 {
        if self.full {
            i as u64
        } else {
            self.states[i]
        }
    }

    #[inline]
    pub fn index_of(&self, code: u64) -> Option<usize> {
        if self.full {
            Some(code as usize)
        } else {
            self.index.as_ref().unwrap().get(&code).map(|&i| i as usize)
        }
    }

    #[inline]
    pub fn occupation(&self, code: u64, slot: usize) -> usize {
        ((code / self.strides[slot]) % self.dims[slot] as u64) as usize
    }

    /// Code of the product state with the given per-slot occupations.
    pub fn encode(&self, occs: &[usize]) -> u64 {
        occs.iter()
            .zip(&self.strides)
            .map(|(&n, &s)| n as u64 * s)
            .sum()
    }

    /// Apply a single-site ladder/number factor to a code.
    /// Returns the new code and the real matrix-element factor.
    #[inline]
    pub fn apply_factor(&self, code: u64, slot: usize, op: SiteOp) -> Option<(u64, f64)> {
        let n = self.occupation(code, slot);
        match op {
            SiteOp::Lower => {
                if n == 0 {
                    None
                } else {
                    Some((code - self.strides[slot], (n as f64).sqrt()))
                }
            }
            SiteOp::Raise => {
                if n + 1 > self.dims[slot] - 1 {
                    None
                } else {
                    Some((code + self.strides[slot], ((n + 1) as f64).sqrt()))
                }
            }
            SiteOp::Num => {
                if n == 0 {
                    None
                } else {
                    Some((code, n as f64))
                }
            }
        }
    }

    /// Apply a term to basis state `j`; returns (target index, amplitude).
    pub fn apply_term(&self, term: &Term, j: usize) -> Option<(usize, C64)> {
        let mut code = self.code(j);
        let mut factor = 1.0;
        for &(slot, op) in &term.factors {
            let (c, f) = self.apply_factor(code, slot, op)?;
            code = c;
            factor *= f;
        }
        let i = self.index_of(code)?;
        Some((i, term.amp * factor))
    }

    /// Total occupation of a basis state.
    pub fn total_occupation(&self, i: usize) -> usize {
        let code = self.code(i);
        (0..self.dims.len()).map(|s| self.occupation(code, s)).sum()
    }
}

fn strides_for(dims: &[usize]) -> Vec<u64> {
    let mut strides = vec![1u64; dims.len()];
    for s in (0..dims.len().saturating_sub(1)).rev() {
        strides[s] = strides[s + 1] * dims[s + 1] as u64;
    }
    strides
}

fn enumerate_truncated(
    dims: &[usize],
    strides: &[u64],
    slot: usize,
    used: usize,
    max: usize,
    code: u64,
    out: &mut Vec<u64>,
) {
    if slot == dims.len() {
        out.push(code);
        return;
    }
    let cap = (dims[slot] - 1).min(max - used);
    for n in 0..=cap {
        enumerate_truncated(
            dims,
            strides,
            slot + 1,
            used + n,
            max,
            code + n as u64 * strides[slot],
            out,
        );
    }
}

/// Basis of all states with at most `max_excitations` excitations, stored as
/// sorted occupied-slot lists (slots repeat for multiply occupied boson
/// sites). Scales to long chains.
#[derive(Debug, Clone)]
pub struct SectorBasis {
    pub dims: Vec<usize>,
    pub states: Vec<Vec<u16>>,
    index: HashMap<u64, u32>,
    pub max_excitations: usize,
}

fn pack(state: &[u16]) -> u64 {
    debug_assert!(state.len() <= 4);
    let mut key = 0u64;
    for (pos, &s) in state.iter().enumerate() {
        key |= (s as u64 + 1) << (16 * pos);
    }
    key
}

impl SectorBasis {
    pub fn new(dims: &[usize], max_excitations: usize) -> Self {
        assert!(max_excitations <= 4, "sector basis supports up to 4 excitations");
        let mut states: Vec<Vec<u16>> = vec![vec![]];
        let mut frontier: Vec<Vec<u16>> = vec![vec![]];
        for _ in 0..max_excitations {
            let mut next = Vec::new();
            for st in &frontier {
                let start = st.last().map(|&s| s as usize).unwrap_or(0);
                for s in start..dims.len() {
                    let occ = st.iter().filter(|&&x| x as usize == s).count();
                    if occ + 1 <= dims[s] - 1 {
                        let mut ns = st.clone();
                        ns.push(s as u16);
                        next.push(ns);
                    }
                }
            }
            states.extend(next.iter().cloned());
            frontier = next;
        }
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (pack(s), i as u32))
            .collect();
        SectorBasis { dims: dims.to_vec(), states, index, max_excitations }
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn index_of(&self, state: &[u16]) -> Option<usize> {
        self.index.get(&pack(state)).map(|&i| i as usize)
    }

    /// Index of the single-excitation state at `slot`.
    pub fn single(&self, slot: usize) -> usize {
        self.index_of(&[slot as u16]).expect("single-excitation state present")
    }

    pub fn occupation_of(&self, i: usize, slot: usize) -> usize {
        self.states[i].iter().filter(|&&s| s as usize == slot).count()
    }

    pub fn apply_term(&self, term: &Term, j: usize) -> Option<(usize, C64)> {
        let mut occ: Vec<u16> = self.states[j].clone();
        let mut factor = 1.0;
        // Apply lowering factors first: factors act on distinct sites, so
        // the order only matters for the transient excitation-cap check.
        let ordered = term
            .factors
            .iter()
            .filter(|f| f.1 == SiteOp::Lower)
            .chain(term.factors.iter().filter(|f| f.1 != SiteOp::Lower));
        for &(slot, op) in ordered {
            let s16 = slot as u16;
            let n = occ.iter().filter(|&&x| x == s16).count();
            match op {
                SiteOp::Lower => {
                    if n == 0 {
                        return None;
                    }
                    factor *= (n as f64).sqrt();
                    let pos = occ.iter().position(|&x| x == s16).unwrap();
                    occ.remove(pos);
                }
                SiteOp::Raise => {
                    if n + 1 > self.dims[slot] - 1 || occ.len() + 1 > self.max_excitations {
                        return None;
                    }
                    factor *= ((n + 1) as f64).sqrt();
                    let pos = occ.iter().position(|&x| x > s16).unwrap_or(occ.len());
                    occ.insert(pos, s16);
                }
                SiteOp::Num => {
                    if n == 0 {
                        return None;
                    }
                    factor *= n as f64;
                }
            }
        }
        let i = self.index_of(&occ)?;
        Some((i, term.amp * factor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_counts_binomials() {
        // 10 hardcore sites, ≤ 2 excitations: 1 + 10 + 45.
        let b = ProductBasis::truncated(&[2; 10], 2);
        assert_eq!(b.dim, 56);
        // Full space round-trip.
        let f = ProductBasis::full(&[2; 4]);
        assert_eq!(f.dim, 16);
        assert_eq!(f.index_of(9), Some(9));
    }

    #[test]
    fn sector_counts() {
        let b = SectorBasis::new(&[2; 40], 2);
        assert_eq!(b.dim(), 1 + 40 + 40 * 39 / 2);
        // boson chain admits doubly occupied sites
        let b = SectorBasis::new(&[3; 5], 2);
        assert_eq!(b.dim(), 1 + 5 + 10 + 5);
    }

    #[test]
    fn boson_ladder_factors() {
        let b = ProductBasis::full(&[3]);
        // b†|1⟩ = √2 |2⟩
        let (c, f) = b.apply_factor(1, 0, SiteOp::Raise).unwrap();
        assert_eq!(c, 2);
        assert!((f - 2.0f64.sqrt()).abs() < 1e-15);
        // b†|2⟩ = 0 at cutoff
        assert!(b.apply_factor(2, 0, SiteOp::Raise).is_none());
    }

    #[test]
    fn sector_term_application() {
        let b = SectorBasis::new(&[2; 6], 1);
        let t = Term::two(3, SiteOp::Raise, 2, SiteOp::Lower, C64::new(-1.0, 0.0));
        let j = b.single(2);
        let (i, amp) = b.apply_term(&t, j).unwrap();
        assert_eq!(i, b.single(3));
        assert_eq!(amp, C64::new(-1.0, 0.0));
        // lowering an empty site annihilates
        assert!(b.apply_term(&t, b.single(4)).is_none());
    }
}
