//! The weight polytope `K(δ) = Conv(W·δ)`, its dominant faces and point location.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_rational::BigRational;
use num_traits::Zero;

use crate::chars::WeightMultiset;
use crate::lp::feasible;
use crate::rational::{q, snap, to_big, Q};
use crate::rootdata::{mask_indices, CartanDatum};
use crate::{Error, RatWeight, Result, Weight};

pub const SNAP_TOLERANCE: f64 = 1e-9;

/// Connected components of an index set in the Dynkin diagram.
pub fn components(datum: &CartanDatum, mask: u32) -> Vec<u32> {
    let mut seen = 0u32;
    let mut out = vec![];
    for start in mask_indices(mask, datum.rank()) {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut comp = 0u32;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if comp & (1 << i) != 0 {
                continue;
            }
            comp |= 1 << i;
            stack.extend(datum.neighbours(i).into_iter().filter(|j| mask & (1 << j) != 0));
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

/// Every component of the index set contains a simple root not orthogonal to `δ`.
pub fn is_admissible(datum: &CartanDatum, delta: &Weight, mask: u32) -> bool {
    mask >> datum.rank() == 0
        && components(datum, mask)
            .into_iter()
            .all(|c| mask_indices(c, datum.rank()).iter().any(|&i| delta[i] != 0))
}

/// Depth of each root of an admissible set: the fewest roots in a chain of
/// adjacent roots of the set that starts there and ends at a root not
/// orthogonal to `δ`.
pub fn depths(datum: &CartanDatum, delta: &Weight, mask: u32) -> BTreeMap<usize, usize> {
    let members = mask_indices(mask, datum.rank());
    let mut depth: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &i in &members {
        if delta[i] != 0 {
            depth.insert(i, 1);
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        let d = depth[&i];
        for j in datum.neighbours(i) {
            if mask & (1 << j) != 0 && !depth.contains_key(&j) {
                depth.insert(j, d + 1);
                queue.push_back(j);
            }
        }
    }
    depth
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSet {
    pub mask: u32,
    pub indices: Vec<usize>,
    pub depths: BTreeMap<usize, usize>,
}

impl AdmissibleSet {
    pub fn new(datum: &CartanDatum, delta: &Weight, mask: u32) -> Result<Self> {
        if !is_admissible(datum, delta, mask) {
            return Err(Error::NotAdmissible(format!("{:?}", mask_indices(mask, datum.rank()))));
        }
        Ok(AdmissibleSet { mask, indices: mask_indices(mask, datum.rank()), depths: depths(datum, delta, mask) })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The indices with 1-based labels.
    pub fn labels(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

/// All admissible subsets, by increasing size and then by bitmask.
pub fn admissible_subsets(datum: &CartanDatum, delta: &Weight) -> Vec<AdmissibleSet> {
    let mut masks: Vec<u32> = (0..1u32 << datum.rank()).filter(|&m| is_admissible(datum, delta, m)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.into_iter().map(|m| AdmissibleSet::new(datum, delta, m).expect("filtered")).collect()
}

/// Orbit of `x` under the parabolic subgroup `W_S`.
pub fn parabolic_orbit(datum: &CartanDatum, x: &Weight, mask: u32) -> Vec<Weight> {
    let mut seen = BTreeSet::from([*x]);
    let mut stack = vec![*x];
    while let Some(y) = stack.pop() {
        for i in mask_indices(mask, datum.rank()) {
            let z = datum.reflect(i, &y);
            if seen.insert(z) {
                stack.push(z);
            }
        }
    }
    seen.into_iter().rev().collect()
}

/// Exact rank of the differences `p - p_0`.
pub fn affine_dim(points: &[RatWeight]) -> usize {
    let Some(first) = points.first() else { return 0 };
    let mut rows: Vec<Vec<Q>> = points[1..].iter().map(|p| (*p - *first).coords().to_vec()).collect();
    let cols = first.rank();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c] / pivot[c];
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x -= f * *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact membership of `x` in the convex hull of `points`.
pub fn in_hull(points: &[Weight], x: &RatWeight) -> bool {
    let d = x.rank();
    let mut a: Vec<Vec<BigRational>> = (0..d)
        .map(|i| points.iter().map(|p| BigRational::from_integer(p[i].into())).collect())
        .collect();
    a.push(points.iter().map(|_| BigRational::from_integer(1.into())).collect());
    let mut b: Vec<BigRational> = x.coords().iter().map(to_big).collect();
    b.push(BigRational::from_integer(1.into()));
    feasible(&a, &b)
}

#[derive(Clone, Debug)]
pub struct DominantFace {
    pub admissible: AdmissibleSet,
    pub vertices: Vec<Weight>,
    pub dim: usize,
    pub face_weights: Vec<Weight>,
}

/// Weights `γ` of `V(δ)` with `δ - γ` supported on the index set.
pub fn face_weights(datum: &CartanDatum, ch: &WeightMultiset, mask: u32) -> Vec<Weight> {
    ch.entries
        .keys()
        .rev()
        .filter(|g| {
            let a = datum.alpha_coords(&(ch.top - **g));
            (0..datum.rank()).all(|i| mask & (1 << i) != 0 || a[i].is_zero())
        })
        .copied()
        .collect()
}

/// One face `F_S = Conv(W_S δ)` per admissible set.
pub fn dominant_faces(datum: &CartanDatum, ch: &WeightMultiset) -> Vec<DominantFace> {
    admissible_subsets(datum, &ch.top)
        .into_iter()
        .map(|adm| {
            let vertices = parabolic_orbit(datum, &ch.top, adm.mask);
            let rat: Vec<RatWeight> = vertices.iter().map(Weight::to_rat).collect();
            let dim = affine_dim(&rat);
            let face_weights = face_weights(datum, ch, adm.mask);
            DominantFace { admissible: adm, vertices, dim, face_weights }
        })
        .collect()
}

pub fn faces_to_json(faces: &[DominantFace]) -> serde_json::Value {
    let list: Vec<_> = faces
        .iter()
        .map(|f| {
            serde_json::json!({
                "subset": f.admissible.labels(),
                "depths": f.admissible.depths.iter().map(|(k, v)| (format!("{}", k + 1), *v)).collect::<BTreeMap<_, _>>(),
                "vertices": f.vertices.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(),
                "dim": f.dim,
                "face_weights": f.face_weights.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::Value::Array(list)
}

/// Result of locating a point relative to `K(δ)`.
#[derive(Clone, Debug)]
pub struct Location {
    pub inside: bool,
    /// Dominant conjugate `y = w(m)`.
    pub y: RatWeight,
    /// Index of `w`, minimal in `W_{S_y} w`.
    pub w: usize,
    /// Smallest admissible set whose face contains `y`, when `m ∈ K(δ)`.
    pub face: Option<AdmissibleSet>,
}

impl Location {
    pub fn face(&self) -> Result<&AdmissibleSet> {
        self.face.as_ref().ok_or_else(|| Error::NotInPolytope(self.y.to_string()))
    }
}

pub fn locate(datum: &CartanDatum, delta: &Weight, m: &RatWeight) -> Location {
    let inside = in_hull(&datum.orbit(delta), m);
    let (y, w) = datum.dominant_representative_rat(m);
    let w = w.index;
    let face = if inside {
        admissible_subsets(datum, delta)
            .into_iter()
            .find(|s| in_hull(&parabolic_orbit(datum, delta, s.mask), &y))
    } else {
        None
    };
    Location { inside, y, w, face }
}

/// Snaps each coordinate to the simplest rational within `1e-9`.
pub fn snap_point(m: &[f64]) -> Result<RatWeight> {
    let v: Vec<Q> = m.iter().map(|&x| snap(x, SNAP_TOLERANCE)).collect::<Result<_>>()?;
    Ok(RatWeight::new(&v))
}

pub fn locate_f64(datum: &CartanDatum, delta: &Weight, m: &[f64]) -> Result<Location> {
    if m.len() != datum.rank() {
        return Err(Error::Invalid(format!("point has {} coordinates, expected {}", m.len(), datum.rank())));
    }
    Ok(locate(datum, delta, &snap_point(m)?))
}

/// Bitmask of the nonzero coordinates of `t`.
pub fn support_mask(t: &[f64]) -> u32 {
    t.iter().enumerate().filter(|(_, &x)| x != 0.0).fold(0, |m, (i, _)| m | (1 << i))
}

/// Bitmask of the coordinates of `t` equal to one.
pub fn ones_mask(t: &[f64]) -> u32 {
    t.iter().enumerate().filter(|(_, &x)| x == 1.0).fold(0, |m, (i, _)| m | (1 << i))
}

/// Whether `t ∈ [0,1]^d` has an admissible support.
pub fn in_unit_box_delta(datum: &CartanDatum, delta: &Weight, t: &[f64]) -> bool {
    t.len() == datum.rank()
        && t.iter().all(|x| (0.0..=1.0).contains(x))
        && is_admissible(datum, delta, support_mask(t))
}

/// The points `x_i = δ - (⟨δ, α_i∨⟩/2) α_i`.
pub fn projection_vertex(datum: &CartanDatum, delta: &Weight, i: usize) -> RatWeight {
    delta.to_rat() - datum.simple_root(i).to_rat().scale(Q::new(delta[i], 2))
}

/// Membership in `K(δ)` through dominance: `m ∈ K(δ)` iff the simple-root
/// coordinates of `δ - y` are nonnegative, `y` the dominant conjugate of `m`.
pub fn in_polytope_by_dominance(datum: &CartanDatum, delta: &Weight, m: &RatWeight) -> bool {
    let (y, _) = datum.dominant_representative_rat(m);
    datum.alpha_coords_rat(&(delta.to_rat() - y)).iter().all(|c| *c >= q(0))
}

/// Solves a square system over `Q`; `None` when singular.
fn solve_exact(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        b.swap(p, c);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c] / a[c][c];
                for j in c..n {
                    let v = a[c][j];
                    a[r][j] -= f * v;
                }
                let v = b[c];
                b[r] -= f * v;
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// Vertices of `K(δ) ∩ Δ`, the set of dominant `y` with `δ - y` in the
/// positive root cone, by exact vertex enumeration.
pub fn dominant_polytope_vertices(datum: &CartanDatum, delta: &Weight) -> Vec<RatWeight> {
    let d = datum.rank();
    let inv = datum.inverse_cartan();
    let top = datum.alpha_coords(delta);
    // Rows `(c, b)` of the system `c·y ≤ b`.
    let mut rows: Vec<(Vec<Q>, Q)> = (0..d).map(|i| ((0..d).map(|j| q(-((i == j) as i64))).collect(), q(0))).collect();
    rows.extend((0..d).map(|j| ((0..d).map(|i| inv[i][j]).collect(), top[j])));
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (2 * d)) {
        if mask.count_ones() as usize != d {
            continue;
        }
        let chosen = mask_indices(mask, 2 * d);
        let a = chosen.iter().map(|&r| rows[r].0.clone()).collect();
        let b = chosen.iter().map(|&r| rows[r].1).collect();
        let Some(y) = solve_exact(a, b) else { continue };
        let ok = rows.iter().all(|(c, b)| c.iter().zip(&y).map(|(x, z)| *x * *z).sum::<Q>() <= *b);
        if ok {
            out.insert(y);
        }
    }
    out.into_iter().map(|y| RatWeight::new(&y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{weight_multiplicities, DEFAULT_DIM_CAP};
    use crate::rootdata::build_root_system;

    fn datum(s: &str) -> CartanDatum {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn masks(v: &[AdmissibleSet]) -> Vec<u32> {
        v.iter().map(|a| a.mask).collect()
    }

    #[test]
    fn dominant_vertices() {
        let a2 = datum("A2");
        let v = dominant_polytope_vertices(&a2, &Weight::new(&[1, 0]));
        let expected: BTreeSet<RatWeight> =
            [RatWeight::zero(2), Weight::new(&[1, 0]).to_rat(), projection_vertex(&a2, &Weight::new(&[1, 0]), 0)].into();
        assert_eq!(v.into_iter().collect::<BTreeSet<_>>(), expected);
        let b2 = datum("B2");
        assert_eq!(dominant_polytope_vertices(&b2, &Weight::new(&[1, 1])).len(), 4);
    }

    #[test]
    fn admissible_examples() {
        let a2 = datum("A2");
        assert_eq!(masks(&admissible_subsets(&a2, &Weight::new(&[1, 0]))), vec![0, 0b01, 0b11]);
        assert_eq!(masks(&admissible_subsets(&a2, &Weight::new(&[0, 1]))), vec![0, 0b10, 0b11]);
        assert_eq!(admissible_subsets(&a2, &Weight::new(&[1, 1])).len(), 4);
        let a3 = datum("A3");
        assert_eq!(admissible_subsets(&a3, &Weight::new(&[1, 1, 1])).len(), 8);
        let d = depths(&a3, &Weight::new(&[1, 0, 0]), 0b111);
        assert_eq!(d, BTreeMap::from([(0, 1), (1, 2), (2, 3)]));
    }

    #[test]
    fn face_examples() {
        let a2 = datum("A2");
        let ch = weight_multiplicities(&a2, &Weight::new(&[1, 0]), DEFAULT_DIM_CAP).unwrap();
        let faces = dominant_faces(&a2, &ch);
        assert_eq!(faces.len(), 3);
        assert_eq!(faces[0].vertices, vec![Weight::new(&[1, 0])]);
        assert_eq!(faces[0].dim, 0);
        assert_eq!(faces[1].vertices, vec![Weight::new(&[1, 0]), Weight::new(&[-1, 1])]);
        assert_eq!(faces[1].dim, 1);
        assert_eq!(faces[2].dim, 2);
        assert_eq!(faces[2].face_weights.len(), 3);
    }

    #[test]
    fn locate_examples() {
        let a1 = datum("A1");
        let delta = Weight::new(&[1]);
        let loc = locate(&a1, &delta, &RatWeight::zero(1));
        assert!(loc.inside);
        assert_eq!(loc.w, 0);
        assert_eq!(loc.face.unwrap().mask, 1);
        let at_delta = locate(&a1, &delta, &delta.to_rat());
        assert_eq!(at_delta.face.unwrap().mask, 0);
        let out = locate(&a1, &delta, &delta.scale(2).to_rat());
        assert!(!out.inside);
        assert!(matches!(out.face(), Err(Error::NotInPolytope(_))));
    }

    #[test]
    fn hull_agrees_with_dominance() {
        for (name, delta) in [("A2", vec![1, 0]), ("B2", vec![0, 1]), ("G2", vec![1, 0])] {
            let c = datum(name);
            let delta = Weight::new(&delta);
            let verts = c.orbit(&delta);
            for a in -6..=6 {
                for b in -6..=6 {
                    let m = RatWeight::new(&[Q::new(a, 4), Q::new(b, 4)]);
                    assert_eq!(in_hull(&verts, &m), in_polytope_by_dominance(&c, &delta, &m), "{name} {m}");
                }
            }
        }
    }

    #[test]
    fn unit_box() {
        let a2 = datum("A2");
        let d = Weight::new(&[1, 0]);
        assert!(in_unit_box_delta(&a2, &d, &[1.0, 1.0]));
        assert!(!in_unit_box_delta(&a2, &d, &[0.0, 0.5]));
        assert!(in_unit_box_delta(&a2, &d, &[0.0, 0.0]));
    }
}
