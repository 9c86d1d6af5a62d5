//! The acceptance checks, shared by the integration tests and `weylwalk verify`.
//!
//! Every check runs against one [`Model`] and reports its worst observed
//! error next to the tolerance it is held to.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::boundary::{
    c_harmonic_level, drift, harmonicity_residual, invert_drift, invert_drift_rat, log_s_delta_grad, s_hat_at,
    stabilizer_mask, BoundaryPoint, CentralMeasure, Level,
};
use crate::chars::{exterior_power_char, peel, tensor_power_weights, total_positivity_min_minor, weyl_dim};
use crate::montecarlo::{lln_check, pitman_equality_in_law, LLN_THRESHOLD};
use crate::paths::GraphKind;
use crate::polytope::{
    admissible_subsets, dominant_faces, dominant_polytope_vertices, in_hull, in_unit_box_delta, projection_vertex,
};
use crate::rational::to_f64;
use crate::rootdata::{mask_of, Family};
use crate::{Caps, Error, Model, RatWeight, Result, Weight};

/// The types and highest weights every criterion is run on.
pub const SUITE: [(&str, &[i64]); 7] = [
    ("A1", &[1]),
    ("A1", &[2]),
    ("A2", &[1, 0]),
    ("A2", &[1, 1]),
    ("B2", &[1, 0]),
    ("B2", &[0, 1]),
    ("G2", &[1, 0]),
];

pub const CRITERIA: [u8; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

pub fn suite_models(caps: Caps) -> Result<Vec<Model>> {
    SUITE.iter().map(|(ty, d)| Model::new(ty.parse()?, d, caps)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub criterion: u8,
    pub name: &'static str,
    pub cartan_type: String,
    pub delta: Vec<i64>,
    pub passed: bool,
    pub metrics: serde_json::Value,
    pub elapsed_ms: f64,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {} δ={:?}: {} {} ({:.0} ms)",
            self.criterion,
            self.name,
            self.cartan_type,
            self.delta,
            if self.passed { "PASS" } else { "FAIL" },
            self.metrics,
            self.elapsed_ms
        )
    }
}

pub fn criterion_name(id: u8) -> &'static str {
    match id {
        1 => "crystal",
        2 => "multiplicities",
        3 => "harmonicity",
        4 => "drift-homeomorphism",
        5 => "faces",
        6 => "pitman-law",
        7 => "lln",
        8 => "c-harmonic",
        9 => "total-positivity",
        10 => "thoma",
        _ => "unknown",
    }
}

/// Runs criterion `id` on `model`.
pub fn run_criterion(model: &Model, id: u8, seed: u64) -> Result<CheckResult> {
    let start = Instant::now();
    let (passed, metrics) = match id {
        1 => crystal(model)?,
        2 => multiplicities(model)?,
        3 => harmonicity(model, seed)?,
        4 => drift_homeomorphism(model, seed)?,
        5 => faces(model)?,
        6 => pitman_law(model, seed)?,
        7 => lln(model, seed)?,
        8 => c_harmonic(model, seed)?,
        9 => total_positivity(model, seed)?,
        10 => thoma(model.caps, seed)?,
        _ => return Err(Error::Invalid(format!("no criterion {id}"))),
    };
    let (cartan_type, delta) = if id == 10 {
        ("A2".to_string(), vec![1, 0])
    } else {
        (model.datum.ty.to_string(), model.delta.coords().to_vec())
    };
    Ok(CheckResult {
        criterion: id,
        name: criterion_name(id),
        cartan_type,
        delta,
        passed,
        metrics,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn run_all(model: &Model, seed: u64) -> Result<Vec<CheckResult>> {
    CRITERIA.iter().map(|&id| run_criterion(model, id, seed)).collect()
}

/// A random canonical boundary point; coordinates are set to exactly 0 or 1
/// with probability `boundary` each.
pub fn random_point(model: &Model, rng: &mut ChaCha8Rng, boundary: f64) -> BoundaryPoint {
    let d = model.rank();
    loop {
        let t: Vec<f64> = (0..d)
            .map(|_| {
                let r: f64 = rng.gen();
                if r < boundary {
                    0.0
                } else if r < 2.0 * boundary {
                    1.0
                } else {
                    rng.gen_range(0.02..0.98)
                }
            })
            .collect();
        if !in_unit_box_delta(&model.datum, &model.delta, &t) {
            continue;
        }
        let w = rng.gen_range(0..model.datum.weyl_order());
        return BoundaryPoint::canonical(model, t, w).expect("canonical points are valid");
    }
}

/// A random point in the interior of `K(δ)`: a Dirichlet combination of the
/// orbit of `δ`.
pub fn random_interior_drift(model: &Model, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let orbit = model.datum.orbit(&model.delta);
    let weights: Vec<f64> = orbit.iter().map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let total: f64 = weights.iter().sum();
    let mut m = vec![0.0; model.rank()];
    for (v, c) in orbit.iter().zip(&weights) {
        for (x, y) in m.iter_mut().zip(v.coords()) {
            *x += c / total * *y as f64;
        }
    }
    m
}

fn inf_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Extreme points of the dominant part of the polytope used as anchors:
/// `0`, `δ` and the `x_i` with `⟨δ, α_i∨⟩ ≠ 0`.
fn anchors(model: &Model) -> Vec<RatWeight> {
    let mut out = vec![RatWeight::zero(model.rank()), model.delta.to_rat()];
    for i in 0..model.rank() {
        if model.delta[i] != 0 {
            out.push(projection_vertex(&model.datum, &model.delta, i));
        }
    }
    out
}

type Outcome = Result<(bool, serde_json::Value)>;

fn crystal(model: &Model) -> Outcome {
    let dim = weyl_dim(&model.datum, &model.delta);
    let mut endpoints: Vec<Weight> = model.crystal.letters.iter().map(|l| l.weight).collect();
    endpoints.sort();
    let expected = model.delta_char.expanded();
    let ok = model.crystal.len() as u64 == dim && endpoints == expected;
    Ok((ok, json!({"size": model.crystal.len(), "weyl_dim": dim, "endpoints_match": endpoints == expected})))
}

/// Largest tensor power checked for path counts.
pub fn multiplicity_depth(model: &Model) -> usize {
    match model.datum.ty.family {
        Family::A if model.rank() <= 2 => 5,
        Family::B | Family::C if model.rank() == 2 => 4,
        _ => 3,
    }
}

fn multiplicities(model: &Model) -> Outcome {
    let n_max = multiplicity_depth(model);
    let free = model.graph(GraphKind::Free, n_max)?;
    let chamber = model.graph(GraphKind::Chamber, n_max)?;
    let powers = tensor_power_weights(&model.delta_char, n_max);
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for (n, weights) in powers.iter().enumerate() {
        let vertices: BTreeSet<Weight> = free.vertices(n).copied().collect();
        if vertices != weights.keys().copied().collect() {
            mismatches += 1;
        }
        for (g, &c) in weights {
            checked += 1;
            mismatches += (free.count_paths(g, n) != c) as usize;
        }
        let irreducibles = peel(&model.datum, &model.chars, weights)?;
        let dominant: BTreeSet<Weight> = chamber.vertices(n).copied().collect();
        if dominant != irreducibles.keys().copied().collect() {
            mismatches += 1;
        }
        for (l, &c) in &irreducibles {
            checked += 1;
            mismatches += (chamber.count_paths(l, n) != c) as usize;
        }
    }
    Ok((mismatches == 0, json!({"n_max": n_max, "counts_checked": checked, "mismatches": mismatches})))
}

fn harmonicity(model: &Model, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut boundary_points = 0;
    for _ in 0..20 {
        let p = random_point(model, &mut rng, 0.2);
        if p.t.iter().any(|&x| x == 0.0 || x == 1.0) {
            boundary_points += 1;
        }
        let free = CentralMeasure::at(model, GraphKind::Free, p.clone())?;
        worst = worst.max(harmonicity_residual(&free, 4)?);
        let at_id = BoundaryPoint::at_identity(model, p.t.clone())?;
        let chamber = CentralMeasure::at(model, GraphKind::Chamber, at_id)?;
        worst = worst.max(harmonicity_residual(&chamber, 4)?);
    }
    Ok((worst < 1e-10, json!({"points": 20, "boundary_points": boundary_points, "max_residual": worst, "tolerance": 1e-10})))
}

fn drift_homeomorphism(model: &Model, seed: u64) -> Outcome {
    let datum = &model.datum;
    let d = model.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut drift_error = 0.0f64;
    for _ in 0..100 {
        let m = random_interior_drift(model, &mut rng);
        let p = invert_drift(model, &m)?;
        drift_error = drift_error.max(inf_dist(&drift(model, &p.t, p.w), &m));
    }

    let mut t_error = 0.0f64;
    let mut w_mismatches = 0;
    let mut stabilizer_violations = 0;
    let mut ones_violations = 0;
    let mut coset_violations = 0;
    for _ in 0..100 {
        let p = random_point(model, &mut rng, 0.15);
        let q = invert_drift(model, &p.drift)?;
        t_error = t_error.max(inf_dist(&p.t, &q.t));
        w_mismatches += (p.w != q.w) as usize;
        let y = datum.element(p.w).apply_f64(&p.drift);
        let stab = stabilizer_mask(model, &p.t);
        let all_positive = p.t.iter().all(|&x| x > 0.0);
        for i in 0..d {
            let on_wall = y[i].abs() < 1e-10;
            stabilizer_violations += (on_wall != (stab & (1 << i) != 0)) as usize;
            if all_positive {
                ones_violations += (on_wall != (p.t[i] == 1.0)) as usize;
            }
        }
        if d <= 2 {
            let coset: BTreeSet<usize> = datum.coset(p.w, stab).into_iter().collect();
            for e in datum.elements() {
                let dominant = e.apply_f64(&p.drift).iter().all(|&x| x > -1e-10);
                coset_violations += (dominant != coset.contains(&e.index)) as usize;
            }
        }
    }

    let mut pattern_failures = Vec::new();
    for (k, a) in anchors(model).iter().enumerate() {
        let p = invert_drift_rat(model, a)?;
        let expected: Vec<f64> = match k {
            0 => vec![1.0; d],
            1 => vec![0.0; d],
            _ => {
                let i = (0..d).filter(|&i| model.delta[i] != 0).nth(k - 2).expect("anchor index");
                (0..d).map(|j| (j == i) as u8 as f64).collect()
            }
        };
        if p.t != expected || p.w != 0 {
            pattern_failures.push(a.to_string());
        }
    }

    let ok = drift_error < 1e-8
        && t_error < 1e-8
        && w_mismatches == 0
        && stabilizer_violations == 0
        && ones_violations == 0
        && coset_violations == 0
        && pattern_failures.is_empty();
    Ok((
        ok,
        json!({
            "max_drift_round_trip": drift_error,
            "max_parameter_round_trip": t_error,
            "w_mismatches": w_mismatches,
            "stabilizer_violations": stabilizer_violations,
            "ones_violations": ones_violations,
            "coset_violations": coset_violations,
            "pattern_failures": pattern_failures,
            "tolerance": 1e-8,
        }),
    ))
}

fn faces(model: &Model) -> Outcome {
    let datum = &model.datum;
    let faces = dominant_faces(datum, &model.delta_char);
    let admissible = admissible_subsets(datum, &model.delta);
    let mut failures = Vec::new();
    if faces.len() != admissible.len() {
        failures.push(format!("{} faces for {} admissible sets", faces.len(), admissible.len()));
    }
    let weights: Vec<Weight> = model.delta_char.iter().map(|(g, _)| *g).collect();
    for f in &faces {
        let s = &f.admissible;
        if f.dim != s.len() {
            failures.push(format!("face {:?} has dimension {}", s.labels(), f.dim));
        }
        let on_face: BTreeSet<Weight> = weights.iter().filter(|g| in_hull(&f.vertices, &g.to_rat())).copied().collect();
        let listed: BTreeSet<Weight> = f.face_weights.iter().copied().collect();
        if on_face != listed {
            failures.push(format!("weights of face {:?}", s.labels()));
        }
    }
    let mut remark = serde_json::Value::Null;
    if datum.ty.to_string() == "A2" && model.delta == Weight::new(&[1, 0]) {
        let masks: Vec<u32> = admissible.iter().map(|s| s.mask).collect();
        let expected = vec![0, mask_of(&[0]), mask_of(&[0, 1])];
        if masks != expected {
            failures.push("A2 admissible list".into());
        }
        remark = json!(admissible.iter().map(|s| s.labels()).collect::<Vec<_>>());
    }
    Ok((failures.is_empty(), json!({"faces": faces.len(), "failures": failures, "admissible_list": remark})))
}

/// Largest walk length for the exact Pitman comparison.
pub fn pitman_depth(model: &Model) -> usize {
    let b = model.crystal.len() as u64;
    let limit = match (model.datum.ty.family, model.rank()) {
        (Family::A, 1) => 6,
        (Family::A, 2) => 4,
        _ => 3,
    };
    (1..=limit).take_while(|&n| b.pow(n as u32) <= 100_000.min(model.caps.enumeration)).last().unwrap_or(1)
}

fn pitman_law(model: &Model, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = model.rank();
    let n_max = pitman_depth(model);
    let mut ts = vec![vec![1.0; d]];
    for _ in 0..2 {
        ts.push((0..d).map(|_| rng.gen_range(0.05..0.95)).collect());
    }
    let mut worst = 0.0f64;
    for t in &ts {
        let p = BoundaryPoint::at_identity(model, t.clone())?;
        let mu = CentralMeasure::at(model, GraphKind::Chamber, p)?;
        for n in 1..=n_max {
            worst = worst.max(pitman_equality_in_law(&mu, n)?);
        }
    }
    Ok((worst < 1e-12, json!({"n_max": n_max, "parameters": ts, "max_tv": worst, "tolerance": 1e-12})))
}

/// Three interior drifts `a δ + b x̄`, `x̄` the mean of the `x_i`.
pub fn lln_drifts(model: &Model) -> Vec<Vec<f64>> {
    let a = anchors(model);
    let xs = &a[2..];
    let d = model.rank();
    let mut mean = vec![0.0; d];
    for x in xs {
        for (m, c) in mean.iter_mut().zip(x.coords()) {
            *m += to_f64(c) / xs.len() as f64;
        }
    }
    let delta = model.delta.to_f64();
    [(0.3, 0.3), (0.5, 0.2), (0.2, 0.5)]
        .iter()
        .map(|(a, b)| (0..d).map(|i| a * delta[i] + b * mean[i]).collect())
        .collect()
}

pub const LLN_STEPS: usize = 5000;

fn lln(model: &Model, seed: u64) -> Outcome {
    let mut worst = 0.0f64;
    let mut reports = Vec::new();
    for m in lln_drifts(model) {
        let p = invert_drift(model, &m)?;
        let mu = CentralMeasure::at(model, GraphKind::Chamber, p)?;
        let r = lln_check(&mu, LLN_STEPS, 3, seed)?;
        worst = worst.max(r.max_deviation);
        reports.push(json!({"m": m, "max_deviation": r.max_deviation, "standard_errors": r.standard_errors}));
    }
    Ok((worst < LLN_THRESHOLD, json!({"steps": LLN_STEPS, "seeds": 3, "runs": reports, "threshold": LLN_THRESHOLD})))
}

fn c_harmonic(model: &Model, seed: u64) -> Outcome {
    let d = model.rank();
    let z = model.dim_delta() as f64;
    let at_one = s_hat_at(model, &vec![1.0; d]);
    let grad = log_s_delta_grad(model, &vec![0.0; d]);
    let grad_norm = grad.iter().zip(&model.delta_alpha).map(|(g, a)| (g - to_f64(a)).abs()).fold(0.0, f64::max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_ratio = f64::INFINITY;
    for _ in 0..200 {
        let p = random_point(model, &mut rng, 0.1);
        let t = p.t;
        min_ratio = min_ratio.min(s_hat_at(model, &t) / z);
    }
    let empty = c_harmonic_level(model, 0.9, 1, seed)? == Level::Empty;
    let singleton = matches!(c_harmonic_level(model, 1.0, 1, seed)?, Level::Singleton(ref p) if p.t == vec![1.0; d]);
    let ok = (at_one - z).abs() < 1e-12 * z && grad_norm < 1e-10 && min_ratio >= 1.0 - 1e-12 && empty && singleton;
    Ok((
        ok,
        json!({"s_hat_at_one": at_one, "dim": z, "gradient_at_one": grad_norm, "min_s_hat_over_dim": min_ratio, "empty_below_one": empty, "singleton_at_one": singleton}),
    ))
}

fn total_positivity(model: &Model, seed: u64) -> Outcome {
    let dim = model.dim_delta() as usize;
    let mut failures = Vec::new();
    for k in 0..=dim {
        let dec = exterior_power_char(&model.datum, &model.chars, &model.delta, k)?;
        let total: u64 = dec.iter().map(|(l, c)| c * weyl_dim(&model.datum, l)).sum();
        if total != binomial(dim as u64, k as u64) {
            failures.push(k);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::INFINITY;
    for _ in 0..50 {
        let p = random_point(model, &mut rng, 0.15);
        worst = worst.min(total_positivity_min_minor(&model.datum, &model.delta_char, &p.t, p.w, 3)?);
    }
    Ok((
        failures.is_empty() && worst >= -1e-9,
        json!({"exterior_power_failures": failures, "min_minor": worst, "tolerance": -1e-9}),
    ))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn thoma(caps: Caps, seed: u64) -> Outcome {
    let model = Model::new("A2".parse()?, &[1, 0], caps)?;
    let model = &model;
    let a = anchors(model);
    let expected: BTreeSet<RatWeight> = a.iter().copied().collect();
    let vertices: BTreeSet<RatWeight> = dominant_polytope_vertices(&model.datum, &model.delta).into_iter().collect();
    let vertices_match = vertices == expected;

    let tri: Vec<Vec<f64>> = a.iter().map(|v| v.to_f64()).collect();
    let bary = |m: &[f64]| -> [f64; 3] {
        let (p, q, r) = (&tri[0], &tri[1], &tri[2]);
        let det = (q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]);
        let l1 = ((m[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (m[1] - p[1])) / det;
        let l2 = ((q[0] - p[0]) * (m[1] - p[1]) - (m[0] - p[0]) * (q[1] - p[1])) / det;
        [1.0 - l1 - l2, l1, l2]
    };

    let mut corner_error = 0.0f64;
    for (t, v) in [([1.0, 1.0], &tri[0]), ([0.0, 0.0], &tri[1]), ([1.0, 0.0], &tri[2])] {
        corner_error = corner_error.max(inf_dist(&drift(model, &t, 0), v));
    }

    let mut outside = 0usize;
    let steps = 20;
    for i in 0..=steps {
        for j in 0..=steps {
            let t = [i as f64 / steps as f64, j as f64 / steps as f64];
            if !in_unit_box_delta(&model.datum, &model.delta, &t) {
                continue;
            }
            let m = drift(model, &t, 0);
            outside += (bary(&m).iter().any(|&l| l < -1e-10)) as usize;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut not_identity = 0usize;
    let mut preimage_error = 0.0f64;
    for _ in 0..50 {
        let mut l: [f64; 3] = [rng.gen(), rng.gen(), rng.gen()];
        let s: f64 = l.iter().sum();
        l.iter_mut().for_each(|x| *x /= s);
        let m: Vec<f64> = (0..2).map(|k| l[0] * tri[0][k] + l[1] * tri[1][k] + l[2] * tri[2][k]).collect();
        let p = invert_drift(model, &m)?;
        not_identity += (p.w != 0) as usize;
        preimage_error = preimage_error.max(inf_dist(&drift(model, &p.t, 0), &m));
    }
    let ok = vertices_match && corner_error < 1e-10 && outside == 0 && not_identity == 0 && preimage_error < 1e-8;
    Ok((
        ok,
        json!({
            "dominant_vertices": vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "vertices_match": vertices_match,
            "corner_error": corner_error,
            "image_points_outside": outside,
            "preimages_off_identity": not_identity,
            "max_preimage_error": preimage_error,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite() {
        let m = Model::new("A1".parse().unwrap(), &[1], Caps::default()).unwrap();
        for id in [1, 2, 3, 4, 5, 6, 8, 9, 10] {
            let r = run_criterion(&m, id, 1).unwrap();
            assert!(r.passed, "{}", r.line());
        }
        assert!(run_criterion(&m, 11, 1).is_err());
    }
}
