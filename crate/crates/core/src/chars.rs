//! Characters as weight multisets.
//!
//! Multiplicities come from the Freudenthal recursion. Evaluations of
//! `S_{λ,μ}(t) = Σ_γ K_{λ,γ} t^{μ-γ}` use the simple-root coordinates of
//! `μ - γ` as exponents, with `0^0 = 1`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::rational::Q;
use crate::rootdata::CartanDatum;
use crate::{Error, Result, Weight};

pub const DEFAULT_DIM_CAP: u64 = 1_000_000;

/// Weights of a representation with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    pub top: Weight,
    pub entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn mult(&self, g: &Weight) -> u64 {
        self.entries.get(g).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Weight, &u64)> {
        self.entries.iter()
    }

    /// The weights listed with repetition, in increasing order.
    pub fn expanded(&self) -> Vec<Weight> {
        self.entries
            .iter()
            .flat_map(|(g, &m)| std::iter::repeat_n(*g, m as usize))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<_> = self
            .entries
            .iter()
            .rev()
            .map(|(g, m)| serde_json::json!({ "weight": g.coords(), "mult": m }))
            .collect();
        serde_json::json!({ "highest": self.top.coords(), "dim": self.total(), "weights": list })
    }
}

/// `(x, β)` for a positive root `β` given by its simple-root coordinates.
fn pair_root(datum: &CartanDatum, x: &Weight, beta_alpha: &[i64]) -> Q {
    (0..datum.rank()).fold(Q::zero(), |acc, i| acc + datum.symmetrizer[i] * (x[i] * beta_alpha[i]))
}

/// Weyl dimension formula, exact.
pub fn weyl_dim_big(datum: &CartanDatum, lambda: &Weight) -> BigInt {
    let lr = *lambda + datum.rho;
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for b in datum.positive_roots_alpha() {
        let num = pair_root(datum, &lr, b);
        let den = pair_root(datum, &datum.rho, b);
        let r = num / den;
        acc *= BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    }
    assert!(acc.is_integer(), "Weyl dimension must be an integer");
    acc.to_integer()
}

/// Dimension of `V(λ)`, saturating at `u64::MAX`.
pub fn weyl_dim(datum: &CartanDatum, lambda: &Weight) -> u64 {
    weyl_dim_big(datum, lambda).to_u64().unwrap_or(u64::MAX)
}

pub fn weyl_dim_f64(datum: &CartanDatum, lambda: &Weight) -> f64 {
    let lr = *lambda + datum.rho;
    datum
        .positive_roots_alpha()
        .iter()
        .map(|b| crate::rational::to_f64(&(pair_root(datum, &lr, b) / pair_root(datum, &datum.rho, b))))
        .product()
}

/// Dominant weights `μ ≤ λ`, reached by subtracting positive roots inside the chamber.
pub fn dominant_weights_below(datum: &CartanDatum, lambda: &Weight) -> Vec<Weight> {
    let mut seen = BTreeMap::from([(*lambda, ())]);
    let mut queue = VecDeque::from([*lambda]);
    while let Some(mu) = queue.pop_front() {
        for b in &datum.positive_roots {
            let nu = mu - *b;
            if nu.is_dominant() && !seen.contains_key(&nu) {
                seen.insert(nu, ());
                queue.push_back(nu);
            }
        }
    }
    seen.into_keys().collect()
}

fn height(datum: &CartanDatum, x: &Weight) -> Q {
    datum.alpha_coords(x).into_iter().sum()
}

/// Freudenthal multiplicities of `V(λ)`.
pub fn weight_multiplicities(datum: &CartanDatum, lambda: &Weight, dim_cap: u64) -> Result<WeightMultiset> {
    if !lambda.is_dominant() || lambda.rank() != datum.rank() {
        return Err(Error::Invalid(format!("{lambda} is not a dominant weight of {}", datum.ty)));
    }
    let dim = weyl_dim(datum, lambda);
    if dim > dim_cap {
        return Err(Error::DimensionCap { dim, cap: dim_cap });
    }
    let mut dom = dominant_weights_below(datum, lambda);
    dom.sort_by_key(|mu| height(datum, &(*lambda - *mu)));

    let lr = *lambda + datum.rho;
    let norm = datum.inner(&lr, &lr);
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    for mu in dom {
        if mu == *lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut sum = Q::zero();
        for (b, ba) in datum.positive_roots.iter().zip(datum.positive_roots_alpha()) {
            let mut nu = mu + *b;
            loop {
                let conj = datum.dominant_conjugate(&nu);
                match mult.get(&conj) {
                    Some(&m) => sum += pair_root(datum, &nu, ba) * m,
                    None => break,
                }
                nu += *b;
            }
        }
        let mr = mu + datum.rho;
        let den = norm - datum.inner(&mr, &mr);
        let m = sum * 2 / den;
        assert!(m.is_integer(), "Freudenthal produced a non-integer multiplicity");
        let m = m.to_integer();
        if m > 0 {
            mult.insert(mu, m);
        }
    }

    let mut entries = BTreeMap::new();
    for (mu, m) in mult {
        for g in datum.orbit(&mu) {
            entries.insert(g, m as u64);
        }
    }
    Ok(WeightMultiset { top: *lambda, entries })
}

/// Write-once memo table of characters.
#[derive(Debug)]
pub struct CharCache {
    cap: u64,
    map: Mutex<HashMap<Weight, Arc<WeightMultiset>>>,
}

impl CharCache {
    pub fn new(dim_cap: u64) -> Self {
        CharCache { cap: dim_cap, map: Mutex::new(HashMap::new()) }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn get(&self, datum: &CartanDatum, lambda: &Weight) -> Result<Arc<WeightMultiset>> {
        if let Some(c) = self.map.lock().expect("cache lock").get(lambda) {
            return Ok(c.clone());
        }
        let c = Arc::new(weight_multiplicities(datum, lambda, self.cap)?);
        Ok(self.map.lock().expect("cache lock").entry(*lambda).or_insert(c).clone())
    }
}

/// `∏ t_i^{k_i}` with `0^0 = 1`.
pub fn monomial(t: &[f64], k: &[i64]) -> f64 {
    t.iter().zip(k).map(|(&ti, &ki)| ti.powi(ki as i32)).product()
}

/// `t^x` for a point with rational simple-root coordinates (`x` need not be integral).
pub fn monomial_rat(t: &[f64], x: &[Q]) -> f64 {
    t.iter()
        .zip(x)
        .map(|(&ti, xi)| {
            if xi.is_integer() {
                ti.powi(xi.to_integer() as i32)
            } else {
                ti.powf(crate::rational::to_f64(xi))
            }
        })
        .product()
}

pub fn check_t(t: &[f64], rank: usize) -> Result<()> {
    if t.len() != rank || t.iter().any(|x| !(0.0..=1.0).contains(x)) {
        return Err(Error::Invalid(format!("t = {t:?} is not in [0,1]^{rank}")));
    }
    Ok(())
}

/// `S_{λ,μ}(t)` from the character of `λ`.
pub fn evaluate_s(datum: &CartanDatum, ch: &WeightMultiset, mu: &Weight, t: &[f64]) -> Result<f64> {
    check_t(t, datum.rank())?;
    if !datum.in_positive_root_monoid(&(*mu - ch.top)) {
        return Err(Error::OrderViolation(format!("{mu} - {}", ch.top)));
    }
    let mu_a = datum.alpha_coords_int(mu).unwrap_or_default();
    let exps = |g: &Weight| -> Vec<i64> {
        let diff = *mu - *g;
        match datum.alpha_coords_int(&diff) {
            Some(a) => a,
            None => {
                let ga = datum.alpha_coords(g);
                mu_a.iter().zip(ga).map(|(m, x)| (Q::from_integer(*m) - x).to_integer()).collect()
            }
        }
    };
    Ok(ch.iter().map(|(g, &m)| m as f64 * monomial(t, &exps(g))).sum())
}

/// `S_{λ,λ}(t)` from the Weyl character formula.
///
/// With `J = {i : t_i = 1}` and `r` the number of positive roots supported in
/// `J`, numerator and denominator of the alternant both vanish to order `r`
/// along `t_J = e^{-ε}`; the ratio of their `ε^r` coefficients is returned.
/// This is used for weights whose characters are too large to enumerate.
pub fn shifted_char_weyl(datum: &CartanDatum, lambda: &Weight, t: &[f64]) -> f64 {
    let d = datum.rank();
    let in_j: Vec<bool> = t.iter().map(|&x| x == 1.0).collect();
    if in_j.iter().all(|&b| b) {
        return weyl_dim_f64(datum, lambda);
    }
    let big = *lambda + datum.rho;
    let split = |x: &[i64]| -> (f64, i64) {
        let mut c = 1.0;
        let mut h = 0;
        for i in 0..d {
            if in_j[i] {
                h += x[i];
            } else {
                c *= t[i].powi(x[i] as i32);
            }
        }
        (c, h)
    };
    let mut r = 0i32;
    let mut den = 1.0;
    for b in datum.positive_roots_alpha() {
        let (c, h) = split(b);
        if (0..d).all(|i| b[i] == 0 || in_j[i]) {
            r += 1;
            den *= h as f64;
        } else {
            den *= 1.0 - c;
        }
    }
    let mut num = 0.0;
    for e in datum.elements() {
        let x = datum
            .alpha_coords_int(&(big - e.apply(&big)))
            .expect("orbit differences lie in the root lattice");
        let (c, h) = split(&x);
        if c != 0.0 {
            num += e.sign() as f64 * c * (h as f64).powi(r);
        }
    }
    let fact: f64 = (1..=r).map(f64::from).product();
    let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
    sign * num / (fact * den)
}

pub type Multiplicities = BTreeMap<Weight, u64>;

pub fn convolve(a: &Multiplicities, b: &Multiplicities) -> Multiplicities {
    let mut out = BTreeMap::new();
    for (x, &m) in a {
        for (y, &n) in b {
            *out.entry(*x + *y).or_insert(0) += m * n;
        }
    }
    out
}

/// Weight multiplicities of `V(δ)^{⊗n}` for `n = 0..=n_max`, by repeated convolution.
pub fn tensor_power_weights(ch: &WeightMultiset, n_max: usize) -> Vec<Multiplicities> {
    let zero = Weight::zero(ch.top.rank());
    let mut levels = vec![BTreeMap::from([(zero, 1u64)])];
    for n in 0..n_max {
        levels.push(convolve(&levels[n], &ch.entries));
    }
    levels
}

/// Splits a W-invariant weight multiset into irreducible characters by
/// repeatedly removing the character of a highest remaining weight.
///
/// The weight removed is the one of greatest height (sum of simple-root
/// coordinates), ties broken by the largest ω-coordinates in lexicographic
/// order; height refines the dominance order, so the removed weight is always
/// dominant and maximal.
pub fn peel(datum: &CartanDatum, cache: &CharCache, weights: &Multiplicities) -> Result<BTreeMap<Weight, u64>> {
    let mut residual: BTreeMap<Weight, i128> = weights.iter().map(|(w, &m)| (*w, m as i128)).collect();
    let mut out = BTreeMap::new();
    loop {
        residual.retain(|_, m| *m != 0);
        let top = residual
            .keys()
            .max_by(|a, b| {
                let (ha, hb) = (height(datum, a), height(datum, b));
                ha.cmp(&hb).then_with(|| a.cmp(b))
            })
            .copied();
        let Some(top) = top else { break };
        let c = residual[&top];
        if c < 0 || !top.is_dominant() {
            return Err(Error::Invalid(format!("multiset is not a nonnegative sum of characters at {top}")));
        }
        let ch = cache.get(datum, &top)?;
        for (g, &m) in ch.iter() {
            *residual.entry(*g).or_insert(0) -= c * m as i128;
        }
        out.insert(top, c as u64);
    }
    Ok(out)
}

/// Decomposition of `V(λ) ⊗ V(δ)` into irreducibles.
pub fn tensor_decompose(
    datum: &CartanDatum,
    cache: &CharCache,
    lambda: &Weight,
    delta: &Weight,
) -> Result<BTreeMap<Weight, u64>> {
    let a = cache.get(datum, lambda)?;
    let b = cache.get(datum, delta)?;
    peel(datum, cache, &convolve(&a.entries, &b.entries))
}

/// Weight multisets of `⋀^k V(δ)` for all `k`, as elementary symmetric functions.
pub fn exterior_power_weights(ch: &WeightMultiset) -> Vec<Multiplicities> {
    let zero = Weight::zero(ch.top.rank());
    let mut e: Vec<Multiplicities> = vec![BTreeMap::from([(zero, 1u64)])];
    for g in ch.expanded() {
        e.push(BTreeMap::new());
        for k in (1..e.len()).rev() {
            let shifted: Vec<(Weight, u64)> = e[k - 1].iter().map(|(w, &m)| (*w + g, m)).collect();
            for (w, m) in shifted {
                *e[k].entry(w).or_insert(0) += m;
            }
        }
    }
    e
}

/// Character of `⋀^k V(δ)` as a combination of irreducible characters.
pub fn exterior_power_char(
    datum: &CartanDatum,
    cache: &CharCache,
    delta: &Weight,
    k: usize,
) -> Result<BTreeMap<Weight, u64>> {
    let ch = cache.get(datum, delta)?;
    let dim = ch.total() as usize;
    if k > dim {
        return Err(Error::Invalid(format!("k = {k} exceeds dim V(δ) = {dim}")));
    }
    peel(datum, cache, &exterior_power_weights(&ch)[k])
}

fn det(m: &mut [Vec<f64>]) -> f64 {
    let n = m.len();
    let mut acc = 1.0;
    for c in 0..n {
        let p = (c..n)
            .max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs()))
            .expect("nonempty");
        if m[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        acc *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for j in c..n {
                m[r][j] -= f * m[c][j];
            }
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Sequence `a_k = Ψ(t,w)(e_k, k)` for `k = 0..=N`, with `e_k` the character of `⋀^k V(δ)`.
pub fn toeplitz_sequence(datum: &CartanDatum, ch: &WeightMultiset, t: &[f64], w: usize) -> Result<Vec<f64>> {
    let s = evaluate_s(datum, ch, &ch.top, t)?;
    let we = datum.element(w);
    let ext = exterior_power_weights(ch);
    let mut out = Vec::with_capacity(ext.len());
    for (k, level) in ext.iter().enumerate() {
        let kd = ch.top.scale(k as i64);
        let mut a = 0.0;
        for (g, &m) in level {
            let x = datum
                .alpha_coords_int(&(kd - we.apply(g)))
                .expect("weights of a tensor power differ from its top by roots");
            a += m as f64 * monomial(t, &x);
        }
        out.push(a / s.powi(k as i32));
    }
    Ok(out)
}

/// Smallest minor of size at most `kmax` of the lower-triangular Toeplitz
/// matrix `T_{ij} = a_{i-j}`.
///
/// By shift invariance every minor equals one whose first row or first
/// column index is 0; rows and columns are taken in `0..N + kmax`.
pub fn total_positivity_min_minor(
    datum: &CartanDatum,
    ch: &WeightMultiset,
    t: &[f64],
    w: usize,
    kmax: usize,
) -> Result<f64> {
    if kmax == 0 || kmax > 4 {
        return Err(Error::Invalid(format!("kmax = {kmax} must be in 1..=4")));
    }
    let a = toeplitz_sequence(datum, ch, t, w)?;
    let n = a.len() - 1;
    let window = n + kmax;
    let entry = |i: usize, j: usize| if i >= j && i - j <= n { a[i - j] } else { 0.0 };
    let mut best = f64::INFINITY;
    for k in 1..=kmax {
        let sets = subsets(window, k);
        for rows in &sets {
            for cols in &sets {
                if rows[0] != 0 && cols[0] != 0 {
                    continue;
                }
                let mut m: Vec<Vec<f64>> = rows.iter().map(|&i| cols.iter().map(|&j| entry(i, j)).collect()).collect();
                best = best.min(det(&mut m));
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;

    fn datum(s: &str) -> CartanDatum {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c)
    }

    #[test]
    fn small_characters() {
        let a1 = datum("A1");
        let c = weight_multiplicities(&a1, &w(&[1]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(c.entries, BTreeMap::from([(w(&[1]), 1), (w(&[-1]), 1)]));

        let a2 = datum("A2");
        let adj = weight_multiplicities(&a2, &w(&[1, 1]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(adj.mult(&w(&[0, 0])), 2);
        assert_eq!(adj.entries.len(), 7);
        assert_eq!(adj.total(), 8);
        for r in &a2.positive_roots {
            assert_eq!(adj.mult(r), 1);
            assert_eq!(adj.mult(&-*r), 1);
        }

        let g2 = datum("G2");
        let seven = weight_multiplicities(&g2, &w(&[1, 0]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(seven.total(), 7);
        assert!(seven.iter().all(|(_, &m)| m == 1));
    }

    #[test]
    fn dimensions() {
        let a1 = datum("A1");
        for k in 0..6 {
            assert_eq!(weyl_dim(&a1, &w(&[k])), k as u64 + 1);
        }
        let a2 = datum("A2");
        assert_eq!(weyl_dim(&a2, &w(&[0, 0])), 1);
        assert_eq!(weyl_dim(&a2, &w(&[1, 1])), 8);
        assert_eq!(weyl_dim(&datum("B2"), &w(&[1, 0])), 5);
        assert_eq!(weyl_dim(&datum("B2"), &w(&[0, 1])), 4);
        assert_eq!(weyl_dim(&datum("G2"), &w(&[0, 1])), 14);
        assert_eq!(weyl_dim(&datum("F4"), &w(&[0, 0, 0, 1])), 26);
        assert_eq!(weyl_dim(&datum("D4"), &w(&[0, 1, 0, 0])), 28);
    }

    #[test]
    fn mass_and_invariance() {
        for (name, lams) in [
            ("A2", vec![w(&[2, 1]), w(&[3, 0])]),
            ("B2", vec![w(&[1, 1]), w(&[2, 1])]),
            ("G2", vec![w(&[1, 1]), w(&[2, 0])]),
            ("C3", vec![w(&[1, 0, 1])]),
        ] {
            let c = datum(name);
            for lam in lams {
                let ch = weight_multiplicities(&c, &lam, DEFAULT_DIM_CAP).unwrap();
                assert_eq!(ch.total(), weyl_dim(&c, &lam), "{name} {lam}");
                for (g, &m) in ch.iter() {
                    assert!(c.in_positive_root_monoid(&(lam - *g)));
                    for e in c.elements() {
                        assert_eq!(ch.mult(&e.apply(g)), m);
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_cap() {
        let a2 = datum("A2");
        let r = weight_multiplicities(&a2, &w(&[40, 40]), 1000);
        assert!(matches!(r, Err(Error::DimensionCap { .. })));
    }

    #[test]
    fn evaluate_s_examples() {
        let a1 = datum("A1");
        let ch = weight_multiplicities(&a1, &w(&[1]), DEFAULT_DIM_CAP).unwrap();
        for t in [0.0, 0.3, 1.0] {
            assert_eq!(evaluate_s(&a1, &ch, &w(&[1]), &[t]).unwrap(), 1.0 + t);
        }
        assert_eq!(evaluate_s(&a1, &ch, &w(&[3]), &[0.5]).unwrap(), 0.5 * 1.5);
        assert!(matches!(evaluate_s(&a1, &ch, &w(&[2]), &[0.5]), Err(Error::OrderViolation(_))));
        let a2 = datum("A2");
        let adj = weight_multiplicities(&a2, &w(&[1, 1]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(evaluate_s(&a2, &adj, &w(&[1, 1]), &[1.0, 1.0]).unwrap(), 8.0);
        assert_eq!(evaluate_s(&a2, &adj, &w(&[1, 1]), &[0.0, 0.0]).unwrap(), 1.0);
    }

    #[test]
    fn weyl_formula_matches_freudenthal() {
        for (name, lams) in [
            ("A1", vec![w(&[0]), w(&[3])]),
            ("A2", vec![w(&[0, 0]), w(&[2, 1]), w(&[0, 3])]),
            ("B2", vec![w(&[1, 0]), w(&[2, 3])]),
            ("G2", vec![w(&[1, 0]), w(&[1, 1])]),
        ] {
            let c = datum(name);
            let d = c.rank();
            let ts: Vec<Vec<f64>> = vec![
                vec![0.3; d],
                (0..d).map(|i| 0.2 + 0.5 * i as f64).collect(),
                (0..d).map(|i| if i == 0 { 1.0 } else { 0.4 }).collect(),
                (0..d).map(|i| if i == 0 { 0.0 } else { 1.0 }).collect(),
                (0..d).map(|i| if i == 0 { 0.0 } else { 0.7 }).collect(),
                vec![1.0; d],
            ];
            for lam in &lams {
                let ch = weight_multiplicities(&c, lam, DEFAULT_DIM_CAP).unwrap();
                for t in &ts {
                    let exact = evaluate_s(&c, &ch, lam, t).unwrap();
                    let alt = shifted_char_weyl(&c, lam, t);
                    assert!((exact - alt).abs() < 1e-9 * exact, "{name} {lam} {t:?}: {exact} vs {alt}");
                }
            }
        }
    }

    #[test]
    fn tensor_examples() {
        let cache = CharCache::new(DEFAULT_DIM_CAP);
        let a1 = datum("A1");
        assert_eq!(
            tensor_decompose(&a1, &cache, &w(&[1]), &w(&[1])).unwrap(),
            BTreeMap::from([(w(&[2]), 1), (w(&[0]), 1)])
        );
        let cache = CharCache::new(DEFAULT_DIM_CAP);
        let a2 = datum("A2");
        assert_eq!(
            tensor_decompose(&a2, &cache, &w(&[1, 0]), &w(&[1, 0])).unwrap(),
            BTreeMap::from([(w(&[2, 0]), 1), (w(&[0, 1]), 1)])
        );
        assert_eq!(
            tensor_decompose(&a2, &cache, &w(&[2, 1]), &w(&[0, 0])).unwrap(),
            BTreeMap::from([(w(&[2, 1]), 1)])
        );
        let adj = tensor_decompose(&a2, &cache, &w(&[1, 1]), &w(&[1, 1])).unwrap();
        assert_eq!(adj[&w(&[1, 1])], 2);
        assert_eq!(adj.values().sum::<u64>(), 6);
    }

    #[test]
    fn exterior_examples() {
        let a1 = datum("A1");
        let cache = CharCache::new(DEFAULT_DIM_CAP);
        assert_eq!(exterior_power_char(&a1, &cache, &w(&[1]), 0).unwrap(), BTreeMap::from([(w(&[0]), 1)]));
        assert_eq!(exterior_power_char(&a1, &cache, &w(&[1]), 2).unwrap(), BTreeMap::from([(w(&[0]), 1)]));
        let a2 = datum("A2");
        let cache = CharCache::new(DEFAULT_DIM_CAP);
        assert_eq!(
            exterior_power_char(&a2, &cache, &w(&[1, 0]), 2).unwrap(),
            BTreeMap::from([(w(&[0, 1]), 1)])
        );
        let g2 = datum("G2");
        let cache = CharCache::new(DEFAULT_DIM_CAP);
        let e2 = exterior_power_char(&g2, &cache, &w(&[1, 0]), 2).unwrap();
        let dims: u64 = e2.iter().map(|(l, m)| m * weyl_dim(&g2, l)).sum();
        assert_eq!(dims, 21);
    }

    #[test]
    fn binomial_sequence_minors() {
        let a1 = datum("A1");
        let ch = weight_multiplicities(&a1, &w(&[1]), DEFAULT_DIM_CAP).unwrap();
        let a = toeplitz_sequence(&a1, &ch, &[1.0], 0).unwrap();
        assert_eq!(a, vec![1.0, 1.0, 0.25]);
        let m1 = total_positivity_min_minor(&a1, &ch, &[1.0], 0, 1).unwrap();
        assert_eq!(m1, 0.0);
        let m3 = total_positivity_min_minor(&a1, &ch, &[1.0], 0, 3).unwrap();
        assert!(m3 >= -1e-12);
    }
}
