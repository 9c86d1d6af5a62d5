//! Boundary parameters `(t, w)`, the drift map and its inverse, central
//! measures, harmonicity and the c-harmonic classification.
//!
//! The morphism attached to `(t, w)` sends `(e^γ, n)` to
//! `t^{nδ - w(γ)} / S_δ(t)^n`, exponents read in simple-root coordinates.

mod level;
mod measure;
mod newton;

pub use level::{c_harmonic_level, harmonic_function_check, log_s_hat, s_hat, s_hat_at, Level};
pub use measure::{central_measure, harmonicity_residual, harmonicity_residual_with, CentralMeasure};
pub use newton::{invert_drift, invert_drift_rat, locate_tolerant, log_s_delta, log_s_delta_grad, log_s_delta_hessian};

use crate::chars::monomial;
use crate::polytope::{face_weights, in_unit_box_delta, ones_mask, support_mask};
use crate::rational::fmt_q;
use crate::{Error, Model, Result, Weight};

/// Canonical boundary parameter: `t` with admissible support and `w` the
/// minimal element of its coset modulo the stabilizer of the dominant drift.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryPoint {
    pub t: Vec<f64>,
    pub w: usize,
    pub drift: Vec<f64>,
}

/// Stabilizer set of `M(t, Id)`: indices with `t_i = 1`, together with the
/// indices `i` for which no weight of the support face pairs positively with
/// `α_i∨`. The second part is empty whenever every `t_i > 0`.
pub fn stabilizer_mask(model: &Model, t: &[f64]) -> u32 {
    let face = face_weights(&model.datum, &model.delta_char, support_mask(t));
    let mut mask = ones_mask(t);
    for i in 0..model.rank() {
        if face.iter().all(|g| g[i] <= 0) {
            mask |= 1 << i;
        }
    }
    mask
}

impl BoundaryPoint {
    /// Validates a canonical pair.
    pub fn new(model: &Model, t: Vec<f64>, w: usize) -> Result<Self> {
        if !in_unit_box_delta(&model.datum, &model.delta, &t) {
            return Err(Error::NotAdmissible(format!("support of t = {t:?}")));
        }
        if w >= model.datum.weyl_order() || !model.datum.is_minimal_in_coset(w, stabilizer_mask(model, &t)) {
            return Err(Error::Invalid(format!("w = {w} is not a minimal coset representative for t = {t:?}")));
        }
        let drift = drift(model, &t, w);
        Ok(BoundaryPoint { t, w, drift })
    }

    /// Replaces `w` by the minimal element of its coset, then validates.
    pub fn canonical(model: &Model, t: Vec<f64>, w: usize) -> Result<Self> {
        let w = model.datum.minimal_coset_rep(w, stabilizer_mask(model, &t));
        BoundaryPoint::new(model, t, w)
    }

    pub fn at_identity(model: &Model, t: Vec<f64>) -> Result<Self> {
        BoundaryPoint::new(model, t, 0)
    }

    pub fn ones(&self) -> u32 {
        ones_mask(&self.t)
    }

    pub fn to_json(&self, model: &Model, kind: &str) -> serde_json::Value {
        let s = level::s_hat_at(model, &self.t);
        serde_json::json!({
            "type": kind,
            "cartan_type": model.datum.ty.to_string(),
            "rank": model.rank(),
            "delta": model.delta.coords(),
            "t": fmt_t(&self.t),
            "w_word": model.datum.element(self.w).word_1based(),
            "drift": self.drift,
            "s_hat": if s.is_finite() { serde_json::json!(s) } else { serde_json::json!("inf") },
        })
    }
}

/// `Ψ(t,w)(e^γ, n)`.
pub fn psi_eval(model: &Model, point: &BoundaryPoint, gamma: &Weight, n: usize) -> Result<f64> {
    let datum = &model.datum;
    let top = model.delta.scale(n as i64);
    if gamma.rank() != model.rank() || !datum.in_positive_root_monoid(&(top - datum.dominant_conjugate(gamma))) {
        return Err(Error::NotAWeight(format!("{gamma} at level {n}")));
    }
    let w = datum.element(point.w);
    let k = datum
        .alpha_coords_int(&(top - w.apply(gamma)))
        .ok_or_else(|| Error::NotAWeight(gamma.to_string()))?;
    Ok(monomial(&point.t, &k) / model.s_delta(&point.t).powi(n as i32))
}

/// `M(t,w) = S_δ(t)^{-1} Σ_γ K_{δ,γ} t^{δ - w(γ)} γ` in ω-coordinates.
pub fn drift(model: &Model, t: &[f64], w: usize) -> Vec<f64> {
    let datum = &model.datum;
    let we = datum.element(w);
    let mut acc = vec![0.0; model.rank()];
    let mut total = 0.0;
    for g in &model.delta_weights {
        let k = datum
            .alpha_coords_int(&(model.delta - we.apply(&g.weight)))
            .expect("Weyl images of weights stay below δ");
        let p = g.mult as f64 * monomial(t, &k);
        total += p;
        for (a, x) in acc.iter_mut().zip(g.weight.coords()) {
            *a += p * *x as f64;
        }
    }
    acc.iter().map(|a| a / total).collect()
}

/// `t` coordinates as strings: small fractions as `p/q`, anything else as a
/// shortest round-trip decimal.
pub fn fmt_t(t: &[f64]) -> Vec<String> {
    t.iter()
        .map(|&x| match crate::rational::snap(x, 1e-15) {
            Ok(r) if *r.denom() <= 10_000 && crate::rational::to_f64(&r) == x => fmt_q(&r),
            _ => format!("{x}"),
        })
        .collect()
}
