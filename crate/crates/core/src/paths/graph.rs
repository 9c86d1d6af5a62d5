use std::collections::BTreeMap;

use serde::Serialize;

use crate::polytope::{depths, is_admissible};
use crate::rootdata::{mask_indices, CartanDatum};
use crate::{Error, Result, Weight};

use super::CrystalB;

pub const DEFAULT_LEVEL_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GraphKind {
    /// Walks in the whole weight lattice.
    Free,
    /// Walks confined to the dominant chamber.
    Chamber,
}

/// Outgoing edges `(μ, e(λ, μ))` of a vertex, grouped by target.
pub fn edge_row(crystal: &CrystalB, kind: GraphKind, lambda: &Weight) -> Vec<(Weight, u64)> {
    let mut row: BTreeMap<Weight, u64> = BTreeMap::new();
    for l in &crystal.letters {
        if kind == GraphKind::Free || l.fits(lambda) {
            *row.entry(*lambda + l.weight).or_insert(0) += 1;
        }
    }
    row.into_iter().collect()
}

/// Growth graph truncated at level `n_max`, with path counts from the origin.
#[derive(Clone, Debug)]
pub struct GrowthGraph {
    pub kind: GraphKind,
    pub n_max: usize,
    /// `levels[n][λ]` is the number of paths of length `n` from 0 to `λ`.
    pub levels: Vec<BTreeMap<Weight, u64>>,
    edges: BTreeMap<Weight, Vec<(Weight, u64)>>,
}

impl GrowthGraph {
    pub fn count_paths(&self, lambda: &Weight, n: usize) -> u64 {
        self.levels.get(n).and_then(|l| l.get(lambda)).copied().unwrap_or(0)
    }

    pub fn vertices(&self, n: usize) -> impl Iterator<Item = &Weight> {
        self.levels[n].keys()
    }

    /// Outgoing edges of a vertex at a level below `n_max`.
    pub fn edges(&self, lambda: &Weight) -> &[(Weight, u64)] {
        self.edges.get(lambda).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let levels: Vec<_> = self
            .levels
            .iter()
            .map(|l| {
                l.iter()
                    .map(|(w, c)| serde_json::json!({ "weight": w.coords(), "count": c }))
                    .collect::<Vec<_>>()
            })
            .collect();
        serde_json::json!({ "kind": self.kind, "n_max": self.n_max, "levels": levels })
    }
}

pub fn build_growth_graph(crystal: &CrystalB, kind: GraphKind, n_max: usize, level_cap: usize) -> Result<GrowthGraph> {
    let zero = Weight::zero(crystal.delta.rank());
    let mut levels = vec![BTreeMap::from([(zero, 1u64)])];
    let mut edges: BTreeMap<Weight, Vec<(Weight, u64)>> = BTreeMap::new();
    for n in 0..n_max {
        let mut next: BTreeMap<Weight, u64> = BTreeMap::new();
        for (lam, &c) in &levels[n] {
            let row = edges.entry(*lam).or_insert_with(|| edge_row(crystal, kind, lam));
            for (mu, e) in row.iter() {
                *next.entry(*mu).or_insert(0) += c * e;
            }
        }
        if next.len() > level_cap {
            return Err(Error::LevelCap { level: n + 1, size: next.len(), cap: level_cap });
        }
        levels.push(next);
    }
    Ok(GrowthGraph { kind, n_max, levels, edges })
}

/// Smallest `(λ, n)` with `λ` at level `n` of the chamber graph and
/// `nδ - λ = α_i + Σ_j k_j α_j`, the sum over `j` in the index set with
/// depth below the depth of `α_i`.
pub fn highest_weight_witness(
    datum: &CartanDatum,
    crystal: &CrystalB,
    mask: u32,
    i: usize,
    max_level: usize,
) -> Result<(Weight, usize)> {
    let delta = crystal.delta;
    if mask & (1 << i) == 0 || !is_admissible(datum, &delta, mask) {
        return Err(Error::NotAdmissible(format!("{:?} with root {}", mask_indices(mask, datum.rank()), i + 1)));
    }
    let depth = depths(datum, &delta, mask);
    let di = depth[&i];
    let allowed: Vec<bool> = (0..datum.rank())
        .map(|j| mask & (1 << j) != 0 && depth.get(&j).is_some_and(|&d| d < di))
        .collect();
    let zero = Weight::zero(datum.rank());
    let mut level: Vec<Weight> = vec![zero];
    for n in 1..=max_level {
        let mut next = std::collections::BTreeSet::new();
        for lam in &level {
            for (mu, _) in edge_row(crystal, GraphKind::Chamber, lam) {
                next.insert(mu);
            }
        }
        level = next.into_iter().collect();
        let target = delta.scale(n as i64);
        for lam in &level {
            let Some(k) = datum.alpha_coords_int(&(target - *lam)) else { continue };
            let ok = (0..datum.rank()).all(|j| {
                if j == i {
                    k[j] == 1
                } else if allowed[j] {
                    k[j] >= 0
                } else {
                    k[j] == 0
                }
            });
            if ok {
                return Ok((*lam, n));
            }
        }
    }
    Err(Error::LevelCap { level: max_level, size: level.len(), cap: max_level })
}
