//! Central measures on the free and chamber graphs and their kernels.

use std::collections::BTreeMap;

use super::{invert_drift, psi_eval, BoundaryPoint};
use crate::chars::monomial;
use crate::paths::{edge_row, GraphKind, GrowthGraph};
use crate::{Error, Model, Result, Weight};

/// The central measure `P_m` (free graph) or `P_m⁺` (chamber graph).
#[derive(Clone, Debug)]
pub struct CentralMeasure<'a> {
    pub model: &'a Model,
    pub kind: GraphKind,
    pub point: BoundaryPoint,
    s_delta: f64,
    /// Free-walk probability of each crystal letter.
    free_letters: Vec<f64>,
}

/// The central measure whose drift is `m`.
pub fn central_measure<'a>(model: &'a Model, kind: GraphKind, m: &[f64]) -> Result<CentralMeasure<'a>> {
    CentralMeasure::at(model, kind, invert_drift(model, m)?)
}

impl<'a> CentralMeasure<'a> {
    pub fn at(model: &'a Model, kind: GraphKind, point: BoundaryPoint) -> Result<Self> {
        if kind == GraphKind::Chamber && point.w != 0 {
            let w = model.datum.element(point.w).word_1based();
            return Err(Error::NotDominantDrift(format!("drift {:?} needs w = {w:?}", point.drift)));
        }
        let s_delta = model.s_delta(&point.t);
        let w = model.datum.element(point.w);
        let free_letters = model
            .crystal
            .letters
            .iter()
            .map(|l| {
                let k = model.datum.alpha_coords_int(&(model.delta - w.apply(&l.weight))).expect("weights of δ");
                monomial(&point.t, &k) / s_delta
            })
            .collect();
        Ok(CentralMeasure { model, kind, point, s_delta, free_letters })
    }

    pub fn t(&self) -> &[f64] {
        &self.point.t
    }

    /// `S_δ(t)`.
    pub fn s_delta(&self) -> f64 {
        self.s_delta
    }

    /// Probability of any single path of length `n` ending at `λ`.
    pub fn p(&self, lambda: &Weight, n: usize) -> Result<f64> {
        match self.kind {
            GraphKind::Free => psi_eval(self.model, &self.point, lambda, n),
            GraphKind::Chamber => {
                let datum = &self.model.datum;
                let k = datum
                    .alpha_coords_int(&(self.model.delta.scale(n as i64) - *lambda))
                    .filter(|k| lambda.is_dominant() && k.iter().all(|&x| x >= 0))
                    .ok_or_else(|| Error::NotAWeight(format!("{lambda} at level {n}")))?;
                let s = self.model.shifted_char(lambda, self.t())?;
                Ok(monomial(self.t(), &k) * s / self.s_delta.powi(n as i32))
            }
        }
    }

    /// Transition probability of each crystal letter from `λ`; letters that
    /// leave the chamber get zero in the chamber case.
    pub fn letter_probs(&self, lambda: &Weight) -> Result<Vec<f64>> {
        match self.kind {
            GraphKind::Free => Ok(self.free_letters.clone()),
            GraphKind::Chamber => {
                let t = self.t();
                let here = self.model.shifted_char(lambda, t)?;
                let mut cache: BTreeMap<Weight, f64> = BTreeMap::new();
                let mut out = Vec::with_capacity(self.model.crystal.len());
                for (l, g) in self.model.crystal.letters.iter().zip(&self.model.letter_depths) {
                    if !l.fits(lambda) {
                        out.push(0.0);
                        continue;
                    }
                    let mu = *lambda + l.weight;
                    let s = match cache.get(&mu) {
                        Some(s) => *s,
                        None => {
                            let s = self.model.shifted_char(&mu, t)?;
                            cache.insert(mu, s);
                            s
                        }
                    };
                    out.push(monomial(t, g) * s / (self.s_delta * here));
                }
                Ok(out)
            }
        }
    }

    /// Kernel row `Q(λ → μ)` aggregated over letters.
    pub fn kernel_row(&self, lambda: &Weight) -> Result<Vec<(Weight, f64)>> {
        let probs = self.letter_probs(lambda)?;
        let mut row: BTreeMap<Weight, f64> = BTreeMap::new();
        for (l, p) in self.model.crystal.letters.iter().zip(probs) {
            if p > 0.0 || (self.kind == GraphKind::Chamber && l.fits(lambda)) {
                *row.entry(*lambda + l.weight).or_insert(0.0) += p;
            }
        }
        Ok(row.into_iter().collect())
    }

    /// `Q_n(λ → μ) = e(λ,μ) p(μ,n+1) / p(λ,n)`, computed from the marginals.
    pub fn kernel_row_at_level(&self, lambda: &Weight, n: usize) -> Result<Vec<(Weight, f64)>> {
        let here = self.p(lambda, n)?;
        edge_row(&self.model.crystal, self.kind, lambda)
            .into_iter()
            .map(|(mu, e)| Ok((mu, e as f64 * self.p(&mu, n + 1)? / here)))
            .collect()
    }

    /// `{#paths(λ,n)·p(λ,n)}` over the vertices of level `n`.
    pub fn marginal(&self, graph: &GrowthGraph, n: usize) -> Result<Vec<(Weight, f64)>> {
        graph.vertices(n).map(|l| Ok((*l, graph.count_paths(l, n) as f64 * self.p(l, n)?))).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let kind = match self.kind {
            GraphKind::Free => "free",
            GraphKind::Chamber => "chamber",
        };
        self.point.to_json(self.model, kind)
    }

    /// Kernel rows as CSV with columns `lambda_i, mu_i, probability`.
    pub fn kernel_csv(&self, lambdas: &[Weight]) -> Result<String> {
        let d = self.model.rank();
        let mut header: Vec<String> = (1..=d).map(|i| format!("lambda_{i}")).collect();
        header.extend((1..=d).map(|i| format!("mu_{i}")));
        header.push("probability".into());
        let mut out = header.join(",") + "\n";
        for l in lambdas {
            for (mu, p) in self.kernel_row(l)? {
                let cells: Vec<String> = l.coords().iter().chain(mu.coords()).map(|x| x.to_string()).collect();
                out += &format!("{},{p}\n", cells.join(","));
            }
        }
        Ok(out)
    }
}

/// `max |p(λ,n) - Σ_μ e(λ,μ) p(μ,n+1)|` over `n ≤ n_max` and the vertices of
/// `graph`, for an arbitrary vertex function `p`.
pub fn harmonicity_residual_with<F>(graph: &GrowthGraph, n_max: usize, p: F) -> Result<f64>
where
    F: Fn(&Weight, usize) -> Result<f64>,
{
    let mut worst = 0.0f64;
    for n in 0..=n_max.min(graph.n_max.saturating_sub(1)) {
        for l in graph.vertices(n) {
            let mut sum = 0.0;
            for (mu, e) in graph.edges(l) {
                sum += *e as f64 * p(mu, n + 1)?;
            }
            worst = worst.max((p(l, n)? - sum).abs());
        }
    }
    Ok(worst)
}

pub fn harmonicity_residual(measure: &CentralMeasure, n_max: usize) -> Result<f64> {
    let graph = measure.model.graph(measure.kind, n_max + 1)?;
    harmonicity_residual_with(&graph, n_max, |l, n| measure.p(l, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Caps;

    fn model(ty: &str, delta: &[i64]) -> Model {
        Model::new(ty.parse().unwrap(), delta, Caps::default()).unwrap()
    }

    #[test]
    fn a1_chamber_at_one() {
        let m = model("A1", &[1]);
        let mu = central_measure(&m, GraphKind::Chamber, &[0.0]).unwrap();
        assert_eq!(mu.t(), &[1.0]);
        for k in 0..6i64 {
            let row = mu.kernel_row(&Weight::new(&[k])).unwrap();
            let up = row.iter().find(|(w, _)| w[0] == k + 1).unwrap().1;
            let expected = (k + 2) as f64 / (2.0 * (k + 1) as f64);
            assert!((up - expected).abs() < 1e-15);
            assert!((row.iter().map(|r| r.1).sum::<f64>() - 1.0).abs() < 1e-15);
        }
        assert!((mu.p(&Weight::new(&[2]), 2).unwrap() - 0.75).abs() < 1e-15);
        assert!((mu.p(&Weight::new(&[0]), 2).unwrap() - 0.25).abs() < 1e-15);
        assert!(harmonicity_residual(&mu, 4).unwrap() < 1e-12);
    }

    #[test]
    fn free_uniform_at_one() {
        let m = model("B2", &[0, 1]);
        let mu = central_measure(&m, GraphKind::Free, &[0.0, 0.0]).unwrap();
        let probs = mu.letter_probs(&Weight::zero(2)).unwrap();
        assert!(probs.iter().all(|p| (p - 0.25).abs() < 1e-15));
    }

    #[test]
    fn harmonicity_a2() {
        let m = model("A2", &[1, 0]);
        let pt = BoundaryPoint::at_identity(&m, vec![0.3, 0.7]).unwrap();
        for kind in [GraphKind::Free, GraphKind::Chamber] {
            let mu = CentralMeasure::at(&m, kind, pt.clone()).unwrap();
            assert!(harmonicity_residual(&mu, 3).unwrap() < 1e-12);
        }
        let mu = CentralMeasure::at(&m, GraphKind::Chamber, pt).unwrap();
        let graph = m.graph(GraphKind::Chamber, 4).unwrap();
        let eps = 1e-3;
        let r = harmonicity_residual_with(&graph, 3, |l, n| Ok(mu.p(l, n)? + if n == 2 { eps } else { 0.0 })).unwrap();
        assert!(r >= eps / 2.0);
    }

    #[test]
    fn chamber_kernel_is_homogeneous() {
        let m = model("G2", &[1, 0]);
        let pt = BoundaryPoint::at_identity(&m, vec![0.6, 0.2]).unwrap();
        let mu = CentralMeasure::at(&m, GraphKind::Chamber, pt).unwrap();
        let graph = m.graph(GraphKind::Chamber, 4).unwrap();
        for n in 0..3 {
            for l in graph.vertices(n) {
                let direct = mu.kernel_row(l).unwrap();
                let from_p = mu.kernel_row_at_level(l, n).unwrap();
                for ((a, p), (b, q)) in direct.iter().zip(&from_p) {
                    assert_eq!(a, b);
                    assert!((p - q).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn chamber_needs_dominant_drift() {
        let m = model("A2", &[1, 0]);
        let r = central_measure(&m, GraphKind::Chamber, &[-0.2, 0.1]);
        assert!(matches!(r, Err(Error::NotDominantDrift(_))));
    }
}
