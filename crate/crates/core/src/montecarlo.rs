//! Sampling walks under central measures, law-of-large-numbers checks and the
//! exact equality in law between Pitman-transformed free walks and chamber walks.

use std::collections::BTreeMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::CentralMeasure;
use crate::paths::{pitman_chain, GraphKind, PLPath};
use crate::{Error, Result, Weight};

/// Deviation threshold of [`lln_check`] at 5000 steps.
pub const LLN_THRESHOLD: f64 = 0.05;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    /// Crystal letter indices.
    pub letters: Vec<usize>,
    /// Positions at integer times, starting from `0`.
    pub positions: Vec<Weight>,
    pub seed: u64,
}

impl Trajectory {
    pub fn endpoint(&self) -> Weight {
        *self.positions.last().expect("trajectories start at the origin")
    }

    /// CSV with columns `step, omega_1, ..., omega_d`.
    pub fn to_csv(&self) -> String {
        let d = self.endpoint().rank();
        let header: Vec<String> = (1..=d).map(|i| format!("omega_{i}")).collect();
        let mut out = format!("step,{}\n", header.join(","));
        for (k, p) in self.positions.iter().enumerate() {
            let cells: Vec<String> = p.coords().iter().map(|x| x.to_string()).collect();
            out += &format!("{k},{}\n", cells.join(","));
        }
        out
    }
}

fn pick(probs: &[f64], rng: &mut ChaCha8Rng) -> Result<usize> {
    let dist = WeightedIndex::new(probs).map_err(|e| Error::Invalid(format!("transition probabilities: {e}")))?;
    Ok(dist.sample(rng))
}

/// A walk of `steps` letters from the origin: i.i.d. letters for the free
/// measure, Markov steps with the homogeneous kernel for the chamber measure.
pub fn sample_trajectory(measure: &CentralMeasure, steps: usize, seed: u64) -> Result<Trajectory> {
    let model = measure.model;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut here = Weight::zero(model.rank());
    let mut letters = Vec::with_capacity(steps);
    let mut positions = Vec::with_capacity(steps + 1);
    positions.push(here);
    let free = match measure.kind {
        GraphKind::Free => Some(WeightedIndex::new(measure.letter_probs(&here)?).map_err(|e| Error::Invalid(e.to_string()))?),
        GraphKind::Chamber => None,
    };
    for _ in 0..steps {
        let b = match &free {
            Some(dist) => dist.sample(&mut rng),
            None => pick(&measure.letter_probs(&here)?, &mut rng)?,
        };
        here += model.crystal.letters[b].weight;
        letters.push(b);
        positions.push(here);
    }
    Ok(Trajectory { letters, positions, seed })
}

#[derive(Clone, Debug, Serialize)]
pub struct SimReport {
    pub kind: GraphKind,
    pub n_steps: usize,
    pub n_reps: usize,
    pub seed: u64,
    /// Mean of `τ(n)/n` over the repetitions.
    pub empirical_drift: Vec<f64>,
    pub target_drift: Vec<f64>,
    /// `‖τ(n)/n - m‖∞` for each repetition.
    pub deviations: Vec<f64>,
    pub max_deviation: f64,
    /// Standard error of each coordinate of `τ(n)/n`, from the sampled increments.
    pub standard_errors: Vec<f64>,
    pub threshold: f64,
    pub passed: bool,
}

impl SimReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

/// Runs `reps` independent walks, repetition `r` seeded with `seed + r`.
pub fn lln_check(measure: &CentralMeasure, steps: usize, reps: usize, seed: u64) -> Result<SimReport> {
    if steps == 0 || reps == 0 {
        return Err(Error::Invalid("steps and reps must be positive".into()));
    }
    let target = measure.point.drift.clone();
    let d = target.len();
    let runs: Vec<(Vec<f64>, Vec<f64>)> = (0..reps)
        .into_par_iter()
        .map(|r| {
            let tr = sample_trajectory(measure, steps, seed.wrapping_add(r as u64))?;
            let end: Vec<f64> = tr.endpoint().to_f64().iter().map(|x| x / steps as f64).collect();
            let mut var = vec![0.0; d];
            for pair in tr.positions.windows(2) {
                for i in 0..d {
                    var[i] += ((pair[1][i] - pair[0][i]) as f64 - end[i]).powi(2) / steps as f64;
                }
            }
            Ok((end, var))
        })
        .collect::<Result<_>>()?;
    let ends: Vec<Vec<f64>> = runs.iter().map(|r| r.0.clone()).collect();
    let standard_errors: Vec<f64> =
        (0..d).map(|i| (runs.iter().map(|r| r.1[i]).sum::<f64>() / (reps * steps) as f64).sqrt()).collect();
    let deviations: Vec<f64> = ends
        .iter()
        .map(|e| e.iter().zip(&target).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
        .collect();
    let empirical_drift = (0..d).map(|i| ends.iter().map(|e| e[i]).sum::<f64>() / reps as f64).collect();
    let max_deviation = deviations.iter().cloned().fold(0.0, f64::max);
    Ok(SimReport {
        kind: measure.kind,
        n_steps: steps,
        n_reps: reps,
        seed,
        empirical_drift,
        target_drift: target,
        deviations,
        max_deviation,
        standard_errors,
        threshold: LLN_THRESHOLD,
        passed: max_deviation < LLN_THRESHOLD,
    })
}

/// Exact endpoint law of the chamber walk at time `n`.
pub fn chamber_marginal(measure: &CentralMeasure, n: usize) -> Result<BTreeMap<Weight, f64>> {
    let graph = measure.model.graph(GraphKind::Chamber, n)?;
    let chamber = CentralMeasure::at(measure.model, GraphKind::Chamber, measure.point.clone())?;
    Ok(chamber.marginal(&graph, n)?.into_iter().collect())
}

/// Endpoint law of `𝒫_{w0}` applied to the free walk of length `n`, by
/// enumerating all letter words.
pub fn pitman_endpoint_law(measure: &CentralMeasure, n: usize) -> Result<BTreeMap<Weight, f64>> {
    let model = measure.model;
    let b = model.crystal.len();
    let total = (b as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > model.caps.enumeration as u128 {
        return Err(Error::EnumerationCap { count: total.min(u64::MAX as u128) as u64, cap: model.caps.enumeration });
    }
    let free = CentralMeasure::at(model, GraphKind::Free, measure.point.clone())?;
    let probs = free.letter_probs(&Weight::zero(model.rank()))?;
    let mut law = BTreeMap::new();
    let mut word = vec![0usize; n];
    for _ in 0..total {
        let mut path = PLPath::empty(model.rank());
        let mut p = 1.0;
        for &l in &word {
            path = path.concat(&model.crystal.letters[l].path);
            p *= probs[l];
        }
        let end = pitman_chain(&model.datum, &path).endpoint().to_int().expect("integral endpoint");
        *law.entry(end).or_insert(0.0) += p;
        for slot in word.iter_mut() {
            *slot += 1;
            if *slot < b {
                break;
            }
            *slot = 0;
        }
    }
    Ok(law)
}

pub fn total_variation(a: &BTreeMap<Weight, f64>, b: &BTreeMap<Weight, f64>) -> f64 {
    let keys: std::collections::BTreeSet<&Weight> = a.keys().chain(b.keys()).collect();
    0.5 * keys
        .into_iter()
        .map(|k| (a.get(k).copied().unwrap_or(0.0) - b.get(k).copied().unwrap_or(0.0)).abs())
        .sum::<f64>()
}

/// Total-variation distance between the Pitman-transformed free endpoint law
/// and the chamber endpoint law at time `n`.
pub fn pitman_equality_in_law(measure: &CentralMeasure, n: usize) -> Result<f64> {
    let lhs = pitman_endpoint_law(measure, n)?;
    let rhs = chamber_marginal(measure, n)?;
    Ok(total_variation(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{central_measure, BoundaryPoint};
    use crate::{Caps, Model};

    fn model(ty: &str, delta: &[i64]) -> Model {
        Model::new(ty.parse().unwrap(), delta, Caps::default()).unwrap()
    }

    #[test]
    fn deterministic_and_confined() {
        let m = model("A2", &[1, 1]);
        let mu = central_measure(&m, GraphKind::Chamber, &[0.3, 0.2]).unwrap();
        let a = sample_trajectory(&mu, 300, 9).unwrap();
        let b = sample_trajectory(&mu, 300, 9).unwrap();
        assert_eq!(a, b);
        assert!(a.positions.iter().all(|p| p.is_dominant()));
        assert_eq!(a.to_csv().lines().count(), 302);
    }

    #[test]
    fn a1_pitman_by_hand() {
        let m = model("A1", &[1]);
        let mu = central_measure(&m, GraphKind::Chamber, &[0.0]).unwrap();
        let law = pitman_endpoint_law(&mu, 2).unwrap();
        assert_eq!(law[&Weight::new(&[2])], 0.75);
        assert_eq!(law[&Weight::new(&[0])], 0.25);
        assert!(pitman_equality_in_law(&mu, 2).unwrap() < 1e-15);
        assert!(pitman_equality_in_law(&mu, 1).unwrap() < 1e-15);
    }

    #[test]
    fn a2_pitman_interior() {
        let m = model("A2", &[1, 0]);
        let p = BoundaryPoint::at_identity(&m, vec![0.35, 0.8]).unwrap();
        let mu = CentralMeasure::at(&m, GraphKind::Chamber, p).unwrap();
        assert!(pitman_equality_in_law(&mu, 3).unwrap() < 1e-12);
    }

    #[test]
    fn enumeration_cap() {
        let caps = Caps { enumeration: 10, ..Caps::default() };
        let m = Model::new("A2".parse().unwrap(), &[1, 0], caps).unwrap();
        let mu = central_measure(&m, GraphKind::Chamber, &[0.0, 0.0]).unwrap();
        assert!(matches!(pitman_equality_in_law(&mu, 3), Err(Error::EnumerationCap { count: 27, cap: 10 })));
    }
}
