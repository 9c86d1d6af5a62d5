//! The log-partition function `Σ(u) = log S_δ(e^u)` and drift inversion.

use nalgebra::{DMatrix, DVector};

use super::BoundaryPoint;
use crate::polytope::{locate, SNAP_TOLERANCE};
use crate::rational::to_f64;
use crate::rootdata::mask_indices;
use crate::{Error, Model, RatWeight, Result};

const GRADIENT_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 200;
const CLAMP_TOL: f64 = 1e-9;

/// Exponent vectors (simple-root coordinates of `δ - γ`) restricted to `vars`,
/// for the weights whose exponents vanish outside `vars`.
fn face_terms(model: &Model, vars: &[usize]) -> Vec<(f64, Vec<f64>)> {
    model
        .delta_weights
        .iter()
        .filter(|g| g.depth.iter().enumerate().all(|(i, &k)| k == 0 || vars.contains(&i)))
        .map(|g| (g.mult as f64, vars.iter().map(|&i| g.depth[i] as f64).collect()))
        .collect()
}

/// Value, gradient and Hessian of `log Σ_j c_j e^{u·k_j}`.
fn log_partition(terms: &[(f64, Vec<f64>)], u: &[f64]) -> (f64, DVector<f64>, DMatrix<f64>) {
    let n = u.len();
    let exps: Vec<f64> = terms.iter().map(|(_, k)| k.iter().zip(u).map(|(a, b)| a * b).sum()).collect();
    let top = exps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = terms.iter().zip(&exps).map(|((c, _), e)| c * (e - top).exp()).collect();
    let z: f64 = weights.iter().sum();
    let mut mean = DVector::zeros(n);
    for ((_, k), w) in terms.iter().zip(&weights) {
        for i in 0..n {
            mean[i] += w * k[i] / z;
        }
    }
    let mut cov = DMatrix::zeros(n, n);
    for ((_, k), w) in terms.iter().zip(&weights) {
        for i in 0..n {
            for j in 0..n {
                cov[(i, j)] += w / z * (k[i] - mean[i]) * (k[j] - mean[j]);
            }
        }
    }
    (top + z.ln(), mean, cov)
}

fn all_vars(model: &Model) -> Vec<usize> {
    (0..model.rank()).collect()
}

/// `Σ(u) = log S_δ(e^u)`.
pub fn log_s_delta(model: &Model, u: &[f64]) -> f64 {
    log_partition(&face_terms(model, &all_vars(model)), u).0
}

/// `∇Σ(u)`: the simple-root coordinates of `δ - M(e^u, Id)`.
pub fn log_s_delta_grad(model: &Model, u: &[f64]) -> Vec<f64> {
    log_partition(&face_terms(model, &all_vars(model)), u).1.iter().copied().collect()
}

/// `∇²Σ(u)`, the covariance of the exponent vectors.
pub fn log_s_delta_hessian(model: &Model, u: &[f64]) -> DMatrix<f64> {
    log_partition(&face_terms(model, &all_vars(model)), u).2
}

/// Minimizes `Σ(u) - ⟨u, target⟩` by damped Newton with backtracking.
fn solve(terms: &[(f64, Vec<f64>)], target: &[f64]) -> Result<Vec<f64>> {
    let n = target.len();
    let b = DVector::from_column_slice(target);
    let objective = |u: &DVector<f64>| log_partition(terms, u.as_slice()).0 - u.dot(&b);
    let mut u = DVector::<f64>::zeros(n);
    let mut gradient = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let (f, g, h) = log_partition(terms, u.as_slice());
        let g = g - &b;
        gradient = g.amax();
        if gradient < GRADIENT_TOL {
            return Ok(u.iter().copied().collect());
        }
        let step = match h.clone().cholesky() {
            Some(c) => c.solve(&(-&g)),
            None => -&g,
        };
        let slope = g.dot(&step);
        let f = f - u.dot(&b);
        // Near the minimum the decrease drops below rounding; take full steps.
        if -slope < 1e-14 * (1.0 + f.abs()) {
            u += step;
            continue;
        }
        let mut s = 1.0;
        loop {
            let cand = &u + &step * s;
            if objective(&cand) <= f + 1e-4 * s * slope || s < 1e-12 {
                u = cand;
                break;
            }
            s *= 0.5;
        }
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS, gradient })
}

fn invert_on_face(model: &Model, mask: u32, y: &[f64], w: usize) -> Result<BoundaryPoint> {
    let d = model.rank();
    let vars = mask_indices(mask, d);
    let excess = model.datum.alpha_coords_f64(&model.delta.to_f64().iter().zip(y).map(|(a, b)| a - b).collect::<Vec<_>>());
    let target: Vec<f64> = vars.iter().map(|&i| excess[i]).collect();
    let mut t = vec![0.0; d];
    if !vars.is_empty() {
        let u = solve(&face_terms(model, &vars), &target)?;
        for (&i, ui) in vars.iter().zip(&u) {
            let ti = ui.exp();
            debug_assert!(ti < 1.0 + 1e-6, "t_{i} = {ti}");
            t[i] = if (ti - 1.0).abs() < CLAMP_TOL { 1.0 } else { ti.min(1.0) };
        }
    }
    BoundaryPoint::canonical(model, t, w)
}

/// Dominant conjugate `y = w(m)` and the smallest admissible set `S` with
/// `δ - y` supported in `S`, with coordinates within `1e-9` of zero treated
/// as zero.
pub fn locate_tolerant(model: &Model, m: &[f64]) -> Result<(Vec<f64>, usize, u32)> {
    if m.len() != model.rank() || m.iter().any(|x| !x.is_finite()) {
        return Err(Error::Invalid(format!("point {m:?} needs {} finite coordinates", model.rank())));
    }
    let (y, w) = model.datum.dominant_representative_f64(m, SNAP_TOLERANCE);
    let excess = model.datum.alpha_coords_f64(&model.delta.to_f64().iter().zip(&y).map(|(a, b)| a - b).collect::<Vec<_>>());
    if excess.iter().any(|&a| a < -SNAP_TOLERANCE) {
        return Err(Error::NotInPolytope(format!("{m:?}")));
    }
    let support = excess.iter().enumerate().filter(|(_, &a)| a > SNAP_TOLERANCE).fold(0u32, |s, (i, _)| s | (1 << i));
    let face = model
        .admissible
        .iter()
        .find(|s| s.mask & support == support)
        .expect("the full index set is admissible");
    Ok((y, w.index, face.mask))
}

/// The boundary parameter with drift `m`.
pub fn invert_drift(model: &Model, m: &[f64]) -> Result<BoundaryPoint> {
    let (y, w, mask) = locate_tolerant(model, m)?;
    invert_on_face(model, mask, &y, w)
}

/// As [`invert_drift`], locating `m` exactly.
pub fn invert_drift_rat(model: &Model, m: &RatWeight) -> Result<BoundaryPoint> {
    if m.rank() != model.rank() {
        return Err(Error::Invalid(format!("point {m} has rank {}, expected {}", m.rank(), model.rank())));
    }
    let loc = locate(&model.datum, &model.delta, m);
    let y: Vec<f64> = loc.y.coords().iter().map(to_f64).collect();
    invert_on_face(model, loc.face()?.mask, &y, loc.w)
}
