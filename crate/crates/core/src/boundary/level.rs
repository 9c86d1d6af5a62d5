//! The normalized character `ŝ_δ` and c-harmonic functions on the chamber graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{invert_drift, BoundaryPoint};
use crate::chars::{check_t, monomial_rat};
use crate::paths::GraphKind;
use crate::rational::to_f64;
use crate::{Error, Model, Result};

/// `ŝ_δ(t) = S_δ(t) / t^δ`, `+∞` as soon as some `t_i = 0`.
pub fn s_hat_at(model: &Model, t: &[f64]) -> f64 {
    if t.contains(&0.0) {
        return f64::INFINITY;
    }
    model.s_delta(t) / monomial_rat(t, &model.delta_alpha)
}

/// `log ŝ_δ(e^u)`.
pub fn log_s_hat(model: &Model, u: &[f64]) -> f64 {
    let shift: f64 = u.iter().zip(&model.delta_alpha).map(|(a, b)| a * to_f64(b)).sum();
    super::log_s_delta(model, u) - shift
}

/// `ŝ_δ` at the chamber measure with drift `m`.
pub fn s_hat(model: &Model, m: &[f64]) -> Result<f64> {
    let p = invert_drift(model, m)?;
    if p.w != 0 {
        return Err(Error::NotDominantDrift(format!("{m:?}")));
    }
    Ok(s_hat_at(model, &p.t))
}

/// The c-harmonic chamber measures, through their parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Level {
    Empty,
    Singleton(BoundaryPoint),
    /// Sampled points of `{ŝ_δ = c·dim V(δ)}`.
    Points(Vec<BoundaryPoint>),
}

/// Points `t` with `ŝ_δ(t) = c·dim V(δ)`, found along random rays
/// `u = s·v`, `v ≤ 0`, on which `log ŝ_δ` increases from `log dim V(δ)`.
pub fn c_harmonic_level(model: &Model, c: f64, count: usize, seed: u64) -> Result<Level> {
    let d = model.rank();
    if c < 1.0 {
        return Ok(Level::Empty);
    }
    if c == 1.0 {
        return Ok(Level::Singleton(BoundaryPoint::at_identity(model, vec![1.0; d])?));
    }
    let goal = (c * model.dim_delta() as f64).ln();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let v: Vec<f64> = (0..d).map(|_| -rng.gen::<f64>()).collect();
        let norm = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
        if norm < 1e-3 {
            continue;
        }
        let v: Vec<f64> = v.iter().map(|x| x / norm).collect();
        let f = |s: f64| log_s_hat(model, &v.iter().map(|x| x * s).collect::<Vec<_>>()) - goal;
        let mut hi = 1.0;
        while f(hi) < 0.0 {
            hi *= 2.0;
        }
        let mut lo = 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-15 * hi {
                break;
            }
        }
        let s = 0.5 * (lo + hi);
        let t: Vec<f64> = v.iter().map(|x| (x * s).exp()).collect();
        points.push(BoundaryPoint::at_identity(model, t)?);
    }
    Ok(Level::Points(points))
}

/// `max |h(λ) - (1/(cZ)) Σ_μ e(λ,μ) h(μ)|` over dominant `λ` of level at most
/// `n_max`, for `h(λ) = s_λ(t)` and `c = s_δ(t)/Z`.
pub fn harmonic_function_check(model: &Model, t: &[f64], n_max: usize) -> Result<f64> {
    check_t(t, model.rank())?;
    if t.contains(&0.0) {
        return Err(Error::Invalid(format!("t = {t:?} must be positive")));
    }
    let h = |l: &crate::Weight| -> Result<f64> {
        Ok(model.shifted_char(l, t)? / monomial_rat(t, &model.datum.alpha_coords(l)))
    };
    let cz = s_hat_at(model, t);
    let graph = model.graph(GraphKind::Chamber, n_max + 1)?;
    let mut worst = 0.0f64;
    for n in 0..=n_max {
        for l in graph.vertices(n) {
            let mut sum = 0.0;
            for (mu, e) in graph.edges(l) {
                sum += *e as f64 * h(mu)?;
            }
            worst = worst.max((h(l)? - sum / cz).abs());
        }
    }
    Ok(worst)
}
