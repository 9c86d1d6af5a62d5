//! A root system together with a fixed dominant weight `δ` and the data
//! derived from it that every other computation shares.

use std::sync::Arc;

use crate::chars::{evaluate_s, shifted_char_weyl, weyl_dim, CharCache, WeightMultiset, DEFAULT_DIM_CAP};
use crate::paths::{build_growth_graph, generate_crystal, CrystalB, GraphKind, GrowthGraph, DEFAULT_LEVEL_CAP};
use crate::polytope::{admissible_subsets, AdmissibleSet};
use crate::rational::Q;
use crate::rootdata::{build_root_system, CartanDatum, CartanType};
use crate::{Error, Result, Weight};

pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Characters up to this dimension are evaluated from multiplicities; larger
/// ones through the Weyl character formula.
pub const EXACT_CHAR_THRESHOLD: u64 = 300;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub dim: u64,
    pub level: usize,
    pub enumeration: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { dim: DEFAULT_DIM_CAP, level: DEFAULT_LEVEL_CAP, enumeration: DEFAULT_ENUMERATION_CAP }
    }
}

/// A distinct weight `γ` of `V(δ)` with multiplicity and the simple-root
/// coordinates of `δ - γ`.
#[derive(Clone, Debug)]
pub struct DeltaWeight {
    pub weight: Weight,
    pub mult: u64,
    pub depth: Vec<i64>,
    pub alpha: Vec<f64>,
}

#[derive(Debug)]
pub struct Model {
    pub datum: CartanDatum,
    pub delta: Weight,
    pub caps: Caps,
    pub chars: CharCache,
    pub delta_char: Arc<WeightMultiset>,
    pub crystal: CrystalB,
    pub admissible: Vec<AdmissibleSet>,
    pub delta_weights: Vec<DeltaWeight>,
    pub delta_alpha: Vec<Q>,
    /// Simple-root coordinates of `δ - wt(b)` for each crystal letter `b`.
    pub letter_depths: Vec<Vec<i64>>,
}

impl Model {
    pub fn new(ty: CartanType, delta: &[i64], caps: Caps) -> Result<Model> {
        let datum = build_root_system(ty)?;
        if delta.len() != datum.rank() {
            return Err(Error::Invalid(format!("δ needs {} coordinates for {ty}", datum.rank())));
        }
        Model::from_datum(datum, Weight::new(delta), caps)
    }

    pub fn from_datum(datum: CartanDatum, delta: Weight, caps: Caps) -> Result<Model> {
        if !delta.is_dominant() || delta.is_zero() {
            return Err(Error::Invalid(format!("δ = {delta} must be dominant and nonzero")));
        }
        let chars = CharCache::new(caps.dim);
        let delta_char = chars.get(&datum, &delta)?;
        let crystal = generate_crystal(&datum, &delta, caps.dim)?;
        let admissible = admissible_subsets(&datum, &delta);
        let delta_weights = delta_char
            .iter()
            .rev()
            .map(|(g, &mult)| {
                let depth = datum.alpha_coords_int(&(delta - *g)).expect("δ - γ lies in the root lattice");
                let alpha = datum.alpha_coords(g).iter().map(crate::rational::to_f64).collect();
                DeltaWeight { weight: *g, mult, depth, alpha }
            })
            .collect();
        let delta_alpha = datum.alpha_coords(&delta);
        let letter_depths = crystal
            .letters
            .iter()
            .map(|l| datum.alpha_coords_int(&(delta - l.weight)).expect("δ - γ lies in the root lattice"))
            .collect();
        Ok(Model { datum, delta, caps, chars, delta_char, crystal, admissible, delta_weights, delta_alpha, letter_depths })
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// `Z = dim V(δ)`.
    pub fn dim_delta(&self) -> u64 {
        self.delta_char.total()
    }

    /// `S_δ(t) = S_{δ,δ}(t)`.
    pub fn s_delta(&self, t: &[f64]) -> f64 {
        self.delta_weights.iter().map(|g| g.mult as f64 * crate::chars::monomial(t, &g.depth)).sum()
    }

    pub fn graph(&self, kind: GraphKind, n_max: usize) -> Result<GrowthGraph> {
        build_growth_graph(&self.crystal, kind, n_max, self.caps.level)
    }

    /// `S_{λ,λ}(t)`, exactly summed for small characters.
    pub fn shifted_char(&self, lambda: &Weight, t: &[f64]) -> Result<f64> {
        if weyl_dim(&self.datum, lambda) <= EXACT_CHAR_THRESHOLD.min(self.caps.dim) {
            let ch = self.chars.get(&self.datum, lambda)?;
            evaluate_s(&self.datum, &ch, lambda, t)
        } else {
            Ok(shifted_char_weyl(&self.datum, lambda, t))
        }
    }

    pub fn description(&self) -> String {
        format!("{} δ={}", self.datum.ty, self.delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_delta() {
        let ty: CartanType = "A2".parse().unwrap();
        assert!(Model::new(ty, &[0, 0], Caps::default()).is_err());
        assert!(Model::new(ty, &[1, -1], Caps::default()).is_err());
        assert!(Model::new(ty, &[1], Caps::default()).is_err());
        let m = Model::new(ty, &[1, 1], Caps::default()).unwrap();
        assert_eq!(m.dim_delta(), 8);
        assert_eq!(m.s_delta(&[1.0, 1.0]), 8.0);
        assert_eq!(m.s_delta(&[0.0, 0.0]), 1.0);
    }
}
