//! Cartan data, weights and Weyl groups of small-rank simple types.
//!
//! Conventions: `A[i][j] = 2(α_i, α_j)/(α_j, α_j)`, short roots have squared
//! length 2, weights are stored in the fundamental-weight basis, so the
//! pairing `⟨λ, α_i∨⟩` is the `i`-th coordinate of `λ`. Index sets of simple
//! roots are bitmasks with bit `i` standing for `α_i` (0-based).

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::rational::{fmt_q, q, Q};
use crate::{Error, RatWeight, Result, Weight, MAX_RANK};

pub const WEYL_ORDER_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A simple type such as `A2` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Ok(CartanType { family, rank })
    }
}

pub fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn mask_indices(mask: u32, rank: usize) -> Vec<usize> {
    (0..rank).filter(|i| mask & (1 << i) != 0).collect()
}

/// An element of the Weyl group, acting on fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub index: usize,
    /// Row-major `d×d` integer matrix acting on column vectors of ω-coordinates.
    pub matrix: Vec<i64>,
    /// A reduced word, `w = s_{word[0]} s_{word[1]} ⋯` (0-based indices).
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn rank(&self) -> usize {
        (self.matrix.len() as f64).sqrt().round() as usize
    }

    pub fn apply(&self, x: &Weight) -> Weight {
        let d = x.rank();
        let mut out = [0i64; MAX_RANK];
        for (j, o) in out.iter_mut().enumerate().take(d) {
            *o = (0..d).map(|k| self.matrix[j * d + k] * x[k]).sum();
        }
        Weight::new(&out[..d])
    }

    pub fn apply_rat(&self, x: &RatWeight) -> RatWeight {
        let d = x.rank();
        let mut out = [Q::zero(); MAX_RANK];
        for (j, o) in out.iter_mut().enumerate().take(d) {
            *o = (0..d).fold(Q::zero(), |acc, k| acc + x[k] * self.matrix[j * d + k]);
        }
        RatWeight::new(&out[..d])
    }

    pub fn apply_f64(&self, x: &[f64]) -> Vec<f64> {
        let d = self.rank();
        (0..d)
            .map(|j| (0..d).map(|k| self.matrix[j * d + k] as f64 * x[k]).sum())
            .collect()
    }

    /// The reduced word with 1-based indices, as used in exported artifacts.
    pub fn word_1based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }
}

/// Root system, Weyl group and invariant form of a simple type.
#[derive(Clone, Debug)]
pub struct CartanDatum {
    pub ty: CartanType,
    pub cartan: Vec<Vec<i64>>,
    /// `d_i = (α_i, α_i)/2`; the matrix `A_ij d_j = (α_i, α_j)` is symmetric.
    pub symmetrizer: Vec<Q>,
    pub positive_roots: Vec<Weight>,
    pub rho: Weight,
    pub w0_word: Vec<usize>,
    elements: Vec<WeylElement>,
    lookup: HashMap<Vec<i64>, usize>,
    left: Vec<Vec<usize>>,
    inv_cartan: Vec<Vec<Q>>,
    positive_roots_alpha: Vec<Vec<i64>>,
}

fn form_matrix(ty: CartanType) -> Result<Vec<Vec<i64>>> {
    let CartanType { family, rank: n } = ty;
    let unsupported = || Error::UnsupportedType(ty.to_string());
    let valid = match family {
        Family::A => (1..=MAX_RANK).contains(&n),
        Family::B | Family::C => (2..=MAX_RANK).contains(&n),
        Family::D => n == 4,
        Family::F => n == 4,
        Family::G => n == 2,
    };
    if !valid {
        return Err(unsupported());
    }
    let mut b = vec![vec![0i64; n]; n];
    match family {
        Family::A | Family::D => {
            for i in 0..n {
                b[i][i] = 2;
            }
            let edges: Vec<(usize, usize)> = if family == Family::A {
                (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
            } else {
                vec![(0, 1), (1, 2), (1, 3)]
            };
            for (i, j) in edges {
                b[i][j] = -1;
                b[j][i] = -1;
            }
        }
        Family::B => {
            for i in 0..n {
                b[i][i] = if i + 1 < n { 4 } else { 2 };
            }
            for i in 0..n - 1 {
                b[i][i + 1] = -2;
                b[i + 1][i] = -2;
            }
        }
        Family::C => {
            for i in 0..n {
                b[i][i] = if i + 1 < n { 2 } else { 4 };
            }
            for i in 0..n - 1 {
                let v = if i + 2 == n { -2 } else { -1 };
                b[i][i + 1] = v;
                b[i + 1][i] = v;
            }
        }
        Family::F => {
            b = vec![
                vec![4, -2, 0, 0],
                vec![-2, 4, -2, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
        }
        Family::G => {
            b = vec![vec![2, -3], vec![-3, 6]];
        }
    }
    Ok(b)
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| q(x)).collect();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrix is invertible");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn mat_mul(a: &[i64], b: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x != 0 {
                for j in 0..d {
                    out[i * d + j] += x * b[k * d + j];
                }
            }
        }
    }
    out
}

/// Builds the Cartan datum of a simple type of rank at most 4.
pub fn build_root_system(ty: CartanType) -> Result<CartanDatum> {
    let b = form_matrix(ty)?;
    let d = ty.rank;
    let cartan: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| 2 * b[i][j] / b[j][j]).collect())
        .collect();
    let symmetrizer: Vec<Q> = (0..d).map(|i| Q::new(b[i][i], 2)).collect();
    let inv_cartan = invert(&cartan);

    let simple: Vec<Vec<i64>> = (0..d)
        .map(|i| {
            let mut m = vec![0i64; d * d];
            for j in 0..d {
                m[j * d + j] = 1;
                m[j * d + i] -= cartan[i][j];
            }
            m
        })
        .collect();

    let mut id = vec![0i64; d * d];
    for j in 0..d {
        id[j * d + j] = 1;
    }
    let mut elements = vec![WeylElement { index: 0, matrix: id.clone(), word: vec![] }];
    let mut lookup = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(g) = queue.pop_front() {
        for (i, s) in simple.iter().enumerate() {
            let h = mat_mul(s, &elements[g].matrix, d);
            if !lookup.contains_key(&h) {
                if elements.len() >= WEYL_ORDER_CAP {
                    return Err(Error::UnsupportedType(format!("{ty}: Weyl group over {WEYL_ORDER_CAP}")));
                }
                let mut word = vec![i];
                word.extend_from_slice(&elements[g].word);
                let idx = elements.len();
                lookup.insert(h.clone(), idx);
                elements.push(WeylElement { index: idx, matrix: h, word });
                queue.push_back(idx);
            }
        }
    }
    let left: Vec<Vec<usize>> = elements
        .iter()
        .map(|e| simple.iter().map(|s| lookup[&mat_mul(s, &e.matrix, d)]).collect())
        .collect();

    let mut datum = CartanDatum {
        ty,
        cartan,
        symmetrizer,
        positive_roots: vec![],
        rho: Weight::new(&vec![1; d]),
        w0_word: vec![],
        elements,
        lookup,
        left,
        inv_cartan,
        positive_roots_alpha: vec![],
    };

    let mut roots: Vec<Weight> = Vec::new();
    for e in &datum.elements {
        for i in 0..d {
            let r = e.apply(&datum.simple_root(i));
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    let mut positive: Vec<(Vec<i64>, Weight)> = roots
        .into_iter()
        .filter_map(|r| {
            let a = datum.alpha_coords_int(&r).expect("roots lie in the root lattice");
            a.iter().all(|&x| x >= 0).then_some((a, r))
        })
        .collect();
    positive.sort_by_key(|(a, _)| (a.iter().sum::<i64>(), a.iter().map(|x| -x).collect::<Vec<_>>()));
    datum.positive_roots_alpha = positive.iter().map(|(a, _)| a.clone()).collect();
    datum.positive_roots = positive.into_iter().map(|(_, r)| r).collect();

    let (_, w) = datum.descend(&(-datum.rho));
    datum.w0_word = w;
    Ok(datum)
}

impl CartanDatum {
    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn weyl_order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &WeylElement {
        &self.elements[idx]
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn w0(&self) -> &WeylElement {
        self.element_from_word(&self.w0_word)
    }

    /// Index of `s_i · w`.
    pub fn left_mul(&self, i: usize, w: usize) -> usize {
        self.left[w][i]
    }

    pub fn element_from_word(&self, word: &[usize]) -> &WeylElement {
        let idx = word.iter().rev().fold(0, |w, &i| self.left[w][i]);
        &self.elements[idx]
    }

    pub fn element_by_matrix(&self, m: &[i64]) -> Option<&WeylElement> {
        self.lookup.get(m).map(|&i| &self.elements[i])
    }

    /// Index of the product `a · b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.elements[a].word.iter().rev().fold(b, |w, &i| self.left[w][i])
    }

    pub fn inverse(&self, a: usize) -> usize {
        let rev: Vec<usize> = self.elements[a].word.iter().rev().copied().collect();
        self.element_from_word(&rev).index
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(&self.cartan[i])
    }

    pub fn positive_roots_alpha(&self) -> &[Vec<i64>] {
        &self.positive_roots_alpha
    }

    pub fn inverse_cartan(&self) -> &[Vec<Q>] {
        &self.inv_cartan
    }

    /// Simple-root coordinates of a rational point.
    pub fn alpha_coords_rat(&self, x: &RatWeight) -> Vec<Q> {
        let d = self.rank();
        (0..d)
            .map(|k| (0..d).fold(Q::zero(), |acc, j| acc + x[j] * self.inv_cartan[j][k]))
            .collect()
    }

    pub fn alpha_coords(&self, x: &Weight) -> Vec<Q> {
        self.alpha_coords_rat(&x.to_rat())
    }

    /// Simple-root coordinates if they are all integers.
    pub fn alpha_coords_int(&self, x: &Weight) -> Option<Vec<i64>> {
        self.alpha_coords(x)
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn alpha_coords_f64(&self, x: &[f64]) -> Vec<f64> {
        let d = self.rank();
        (0..d)
            .map(|k| (0..d).map(|j| x[j] * crate::rational::to_f64(&self.inv_cartan[j][k])).sum())
            .collect()
    }

    /// Point with the given simple-root coordinates.
    pub fn from_alpha(&self, a: &[Q]) -> RatWeight {
        let d = self.rank();
        let v: Vec<Q> = (0..d)
            .map(|j| (0..d).fold(Q::zero(), |acc, i| acc + a[i] * self.cartan[i][j]))
            .collect();
        RatWeight::new(&v)
    }

    pub fn from_alpha_int(&self, a: &[i64]) -> Weight {
        let d = self.rank();
        let v: Vec<i64> = (0..d).map(|j| (0..d).map(|i| a[i] * self.cartan[i][j]).sum()).collect();
        Weight::new(&v)
    }

    pub fn from_alpha_f64(&self, a: &[f64]) -> Vec<f64> {
        let d = self.rank();
        (0..d)
            .map(|j| (0..d).map(|i| a[i] * self.cartan[i][j] as f64).sum())
            .collect()
    }

    /// Whether `x` lies in Q⁺, the monoid of nonnegative integer root combinations.
    pub fn in_positive_root_monoid(&self, x: &Weight) -> bool {
        self.alpha_coords_int(x).is_some_and(|a| a.iter().all(|&c| c >= 0))
    }

    /// Invariant form `(x, y)`.
    pub fn inner_rat(&self, x: &RatWeight, y: &RatWeight) -> Q {
        let ya = self.alpha_coords_rat(y);
        (0..self.rank()).fold(Q::zero(), |acc, i| acc + x[i] * self.symmetrizer[i] * ya[i])
    }

    pub fn inner(&self, x: &Weight, y: &Weight) -> Q {
        self.inner_rat(&x.to_rat(), &y.to_rat())
    }

    pub fn reflect(&self, i: usize, x: &Weight) -> Weight {
        *x - self.simple_root(i).scale(x[i])
    }

    pub fn reflect_rat(&self, i: usize, x: &RatWeight) -> RatWeight {
        *x - self.simple_root(i).to_rat().scale(x[i])
    }

    /// Lexicographically-least descent to the dominant chamber; returns the
    /// dominant point and the word `[i_1, …, i_k]` of reflections applied in order.
    fn descend(&self, x: &Weight) -> (Weight, Vec<usize>) {
        let mut y = *x;
        let mut applied = vec![];
        while let Some(i) = (0..self.rank()).find(|&i| y[i] < 0) {
            y = self.reflect(i, &y);
            applied.push(i);
        }
        (y, applied)
    }

    fn applied_to_element(&self, applied: &[usize]) -> usize {
        applied.iter().fold(0, |w, &i| self.left[w][i])
    }

    /// Minimal representative of the right coset `W_S · w`.
    pub fn minimal_coset_rep(&self, w: usize, mask: u32) -> usize {
        let mut cur = w;
        loop {
            let len = self.elements[cur].length();
            let next = (0..self.rank())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.left[cur][i])
                .find(|&v| self.elements[v].length() < len);
            match next {
                Some(v) => cur = v,
                None => return cur,
            }
        }
    }

    pub fn is_minimal_in_coset(&self, w: usize, mask: u32) -> bool {
        let len = self.elements[w].length();
        (0..self.rank())
            .filter(|i| mask & (1 << i) != 0)
            .all(|i| self.elements[self.left[w][i]].length() > len)
    }

    /// Elements of the parabolic subgroup `W_S`.
    pub fn parabolic(&self, mask: u32) -> Vec<usize> {
        self.elements
            .iter()
            .filter(|e| e.word.iter().all(|&i| mask & (1 << i) != 0))
            .map(|e| e.index)
            .collect()
    }

    /// The right coset `W_S · w`.
    pub fn coset(&self, w: usize, mask: u32) -> Vec<usize> {
        let mut out: Vec<usize> = self.parabolic(mask).into_iter().map(|v| self.mul(v, w)).collect();
        out.sort_unstable();
        out
    }

    pub fn stabilizer_mask(&self, y: &Weight) -> u32 {
        (0..self.rank()).filter(|&i| y[i] == 0).fold(0, |m, i| m | (1 << i))
    }

    /// Dominant conjugate of `x`, without tracking the Weyl element.
    pub fn dominant_conjugate(&self, x: &Weight) -> Weight {
        let mut y = *x;
        while let Some(i) = (0..self.rank()).find(|&i| y[i] < 0) {
            y = self.reflect(i, &y);
        }
        y
    }

    /// Orbit `W·x`, sorted.
    pub fn orbit(&self, x: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::BTreeSet::from([*x]);
        let mut stack = vec![*x];
        while let Some(y) = stack.pop() {
            for i in 0..self.rank() {
                if y[i] != 0 {
                    let z = self.reflect(i, &y);
                    if seen.insert(z) {
                        stack.push(z);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Dominant conjugate `y = w(x)` with `w` minimal in `W_{S_y} w`.
    pub fn dominant_representative(&self, x: &Weight) -> (Weight, &WeylElement) {
        let (y, applied) = self.descend(x);
        let w = self.applied_to_element(&applied);
        let w = self.minimal_coset_rep(w, self.stabilizer_mask(&y));
        (y, &self.elements[w])
    }

    pub fn dominant_representative_rat(&self, x: &RatWeight) -> (RatWeight, &WeylElement) {
        let mut y = *x;
        let mut applied = vec![];
        while let Some(i) = (0..self.rank()).find(|&i| y[i].is_negative()) {
            y = self.reflect_rat(i, &y);
            applied.push(i);
        }
        let mask = (0..self.rank()).filter(|&i| y[i].is_zero()).fold(0, |m, i| m | (1 << i));
        let w = self.minimal_coset_rep(self.applied_to_element(&applied), mask);
        (y, &self.elements[w])
    }

    /// Dominant conjugate of a float point; coordinates within `tol` of zero count as zero.
    pub fn dominant_representative_f64(&self, x: &[f64], tol: f64) -> (Vec<f64>, &WeylElement) {
        let mut y = x.to_vec();
        let mut applied = vec![];
        while let Some(i) = (0..self.rank()).find(|&i| y[i] < -tol) {
            let c = y[i];
            for (j, yj) in y.iter_mut().enumerate() {
                *yj -= c * self.cartan[i][j] as f64;
            }
            applied.push(i);
        }
        let mask = (0..self.rank()).filter(|&i| y[i].abs() <= tol).fold(0, |m, i| m | (1 << i));
        let w = self.minimal_coset_rep(self.applied_to_element(&applied), mask);
        (y, &self.elements[w])
    }

    /// Indices `j ≠ i` adjacent to `i` in the Dynkin diagram.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&j| j != i && self.cartan[i][j] != 0).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let roots: Vec<Vec<String>> = self
            .positive_roots
            .iter()
            .map(|r| r.coords().iter().map(|&x| fmt_q(&q(x))).collect())
            .collect();
        serde_json::json!({
            "type": self.ty.to_string(),
            "rank": self.rank(),
            "cartan": self.cartan,
            "symmetrizer": self.symmetrizer.iter().map(fmt_q).collect::<Vec<_>>(),
            "positive_roots": roots,
            "rho": self.rho.coords(),
            "weyl_order": self.weyl_order(),
            "w0_word": self.w0_word.iter().map(|i| i + 1).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CartanDatum {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn classical_counts() {
        let table = [
            ("A1", 1, 2),
            ("A2", 3, 6),
            ("A3", 6, 24),
            ("A4", 10, 120),
            ("B2", 4, 8),
            ("B3", 9, 48),
            ("B4", 16, 384),
            ("C3", 9, 48),
            ("C4", 16, 384),
            ("D4", 12, 192),
            ("F4", 24, 1152),
            ("G2", 6, 12),
        ];
        for (name, roots, order) in table {
            let c = datum(name);
            assert_eq!(c.positive_roots.len(), roots, "{name}");
            assert_eq!(c.weyl_order(), order, "{name}");
            assert_eq!(c.w0_word.len(), roots, "{name}");
            assert_eq!(c.w0().length(), roots, "{name}");
        }
        assert_eq!(datum("A3").weyl_order(), factorial(4));
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(datum("A1").cartan, vec![vec![2]]);
        assert_eq!(datum("A2").cartan, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(datum("B2").cartan, vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(datum("G2").cartan, vec![vec![2, -1], vec![-3, 2]]);
        for name in ["A4", "B3", "C4", "D4", "F4", "G2"] {
            let c = datum(name);
            let d = c.rank();
            for i in 0..d {
                assert_eq!(c.cartan[i][i], 2);
                for j in 0..d {
                    if i != j {
                        assert!(c.cartan[i][j] <= 0);
                        assert_eq!(c.cartan[i][j] == 0, c.cartan[j][i] == 0);
                        assert_eq!(
                            q(c.cartan[i][j]) * c.symmetrizer[j],
                            q(c.cartan[j][i]) * c.symmetrizer[i]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_invalid_types() {
        for s in ["Z9", "A5", "G3", "D3", "B1", "E6", "A"] {
            let r = s.parse::<CartanType>().and_then(build_root_system);
            assert!(matches!(r, Err(Error::UnsupportedType(_))), "{s}");
        }
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for name in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let c = datum(name);
            let sum = c.positive_roots.iter().fold(Weight::zero(c.rank()), |a, &b| a + b);
            assert_eq!(sum, c.rho.scale(2), "{name}");
        }
    }

    #[test]
    fn word_length_counts_inversions() {
        for name in ["A2", "B2", "G2", "A3"] {
            let c = datum(name);
            for e in c.elements() {
                let inversions = c
                    .positive_roots
                    .iter()
                    .filter(|b| !c.in_positive_root_monoid(&e.apply(b)))
                    .count();
                assert_eq!(inversions, e.length());
                let rebuilt = c.element_from_word(&e.word);
                assert_eq!(rebuilt.matrix, e.matrix);
            }
        }
    }

    #[test]
    fn form_is_invariant_on_roots() {
        for name in ["B3", "G2", "C3"] {
            let c = datum(name);
            for e in c.elements() {
                for b in &c.positive_roots {
                    let wb = e.apply(b);
                    assert_eq!(c.inner(&wb, &wb), c.inner(b, b));
                }
            }
            let short = c.positive_roots.iter().map(|b| c.inner(b, b)).min().unwrap();
            assert_eq!(short, q(2));
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let a1 = datum("A1");
        let (y, w) = a1.dominant_representative(&Weight::new(&[-1]));
        assert_eq!((y, w.word.clone()), (Weight::new(&[1]), vec![0]));

        let a2 = datum("A2");
        let lam = Weight::new(&[1, 1]);
        let s1s2 = a2.element_from_word(&[0, 1]);
        let x = s1s2.apply(&lam);
        let (y, w) = a2.dominant_representative(&x);
        assert_eq!(y, lam);
        assert_eq!(w.index, a2.inverse(s1s2.index));
        let mapping: Vec<_> = a2.elements().iter().filter(|e| e.apply(&x) == lam).collect();
        assert_eq!(mapping.len(), 1);

        let (y2, w2) = a2.dominant_representative(&lam);
        assert_eq!(y2, lam);
        assert!(w2.is_identity());
    }

    #[test]
    fn minimal_coset_examples() {
        let a2 = datum("A2");
        let s1 = a2.element_from_word(&[0]).index;
        let s1s2 = a2.element_from_word(&[0, 1]).index;
        let s2 = a2.element_from_word(&[1]).index;
        assert_eq!(a2.minimal_coset_rep(s1, 0b01), 0);
        assert_eq!(a2.minimal_coset_rep(s1s2, 0b01), s2);
        assert_eq!(a2.minimal_coset_rep(0, 0b11), 0);
    }

    #[test]
    fn fibres_are_cosets_of_the_stabilizer() {
        for name in ["A2", "B2", "G2"] {
            let c = datum(name);
            for a in -2..=2 {
                for b in -2..=2 {
                    let x = Weight::new(&[a, b]);
                    let (y, w) = c.dominant_representative(&x);
                    let fibre: Vec<usize> = c
                        .elements()
                        .iter()
                        .filter(|e| e.apply(&x) == y)
                        .map(|e| e.index)
                        .collect();
                    assert_eq!(fibre, c.coset(w.index, c.stabilizer_mask(&y)));
                    let min_len = fibre.iter().map(|&i| c.element(i).length()).min().unwrap();
                    assert_eq!(w.length(), min_len);
                }
            }
        }
    }

    #[test]
    fn alpha_coordinates_round_trip() {
        let a2 = datum("A2");
        let w1 = Weight::new(&[1, 0]);
        assert_eq!(a2.alpha_coords(&w1), vec![Q::new(2, 3), Q::new(1, 3)]);
        let g2 = datum("G2");
        for r in &g2.positive_roots {
            let a = g2.alpha_coords_int(r).unwrap();
            assert_eq!(g2.from_alpha_int(&a), *r);
        }
    }
}
