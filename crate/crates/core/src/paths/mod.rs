//! The Littelmann path model.
//!
//! A [`PLPath`] is a list of segments `(duration, velocity)` starting at the
//! origin. Root operators use the cut-reflect recipe on the height function
//! `h(t) = ⟨π(t), α_i∨⟩`, which is the `i`-th ω-coordinate of the position.

mod crystal;
mod graph;

pub use crystal::{generate_crystal, CrystalB, Letter};
pub use graph::{build_growth_graph, edge_row, highest_weight_witness, GraphKind, GrowthGraph, DEFAULT_LEVEL_CAP};

use num_traits::{One, Signed, Zero};

use crate::rational::Q;
use crate::rootdata::CartanDatum;
use crate::{RatWeight, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub duration: Q,
    pub velocity: RatWeight,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLPath {
    rank: usize,
    segments: Vec<Segment>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    E,
    F,
}

impl PLPath {
    /// The path `t ↦ tδ` on `[0,1]`.
    pub fn straight(delta: &Weight) -> Self {
        PLPath::from_segments(delta.rank(), vec![Segment { duration: Q::one(), velocity: delta.to_rat() }])
    }

    pub fn empty(rank: usize) -> Self {
        PLPath { rank, segments: vec![] }
    }

    /// Builds a path, dropping empty segments and merging equal consecutive velocities.
    pub fn from_segments(rank: usize, segments: Vec<Segment>) -> Self {
        let mut out: Vec<Segment> = Vec::with_capacity(segments.len());
        for s in segments {
            assert!(!s.duration.is_negative(), "negative duration");
            if s.duration.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.velocity == s.velocity => last.duration += s.duration,
                _ => out.push(s),
            }
        }
        PLPath { rank, segments: out }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn length(&self) -> Q {
        self.segments.iter().map(|s| s.duration).sum()
    }

    pub fn endpoint(&self) -> RatWeight {
        self.segments
            .iter()
            .fold(RatWeight::zero(self.rank), |p, s| p + s.velocity.scale(s.duration))
    }

    /// Times and positions at every breakpoint, including both ends.
    pub fn breakpoints(&self) -> Vec<(Q, RatWeight)> {
        let mut t = Q::zero();
        let mut p = RatWeight::zero(self.rank);
        let mut out = vec![(t, p)];
        for s in &self.segments {
            t += s.duration;
            p = p + s.velocity.scale(s.duration);
            out.push((t, p));
        }
        out
    }

    pub fn position_at(&self, time: Q) -> RatWeight {
        let mut t = Q::zero();
        let mut p = RatWeight::zero(self.rank);
        for s in &self.segments {
            if t + s.duration >= time {
                return p + s.velocity.scale(time - t);
            }
            t += s.duration;
            p = p + s.velocity.scale(s.duration);
        }
        p
    }

    pub fn concat(&self, other: &PLPath) -> PLPath {
        let mut segs = self.segments.clone();
        segs.extend(other.segments.iter().cloned());
        PLPath::from_segments(self.rank, segs)
    }

    /// Minimum over the path of each coordinate `⟨π(t), α_i∨⟩`.
    pub fn min_heights(&self) -> Vec<Q> {
        let bps = self.breakpoints();
        (0..self.rank)
            .map(|i| bps.iter().map(|(_, p)| p[i]).min().expect("at least one breakpoint"))
            .collect()
    }

    /// Rebuilds the path with segments on `[a, b]` transformed by `f`.
    fn map_window(&self, a: Q, b: Q, f: impl Fn(&RatWeight) -> RatWeight) -> PLPath {
        let mut out = Vec::with_capacity(self.segments.len() + 2);
        let mut t = Q::zero();
        for s in &self.segments {
            let (s0, s1) = (t, t + s.duration);
            let cuts = [s0, a.clamp(s0, s1), b.clamp(s0, s1), s1];
            for k in 0..3 {
                let dur = cuts[k + 1] - cuts[k];
                if dur.is_zero() {
                    continue;
                }
                let inside = cuts[k] >= a && cuts[k + 1] <= b;
                let velocity = if inside { f(&s.velocity) } else { s.velocity };
                out.push(Segment { duration: dur, velocity });
            }
            t = s1;
        }
        PLPath::from_segments(self.rank, out)
    }
}

/// Height function values `⟨π(T_j), α_i∨⟩` at the breakpoint times `T_j`.
fn heights(path: &PLPath, i: usize) -> (Vec<Q>, Vec<Q>) {
    path.breakpoints().into_iter().map(|(t, p)| (t, p[i])).unzip()
}

/// Time in `[t_a, t_b]` where the linear interpolation of `h_a → h_b` equals `level`.
fn crossing(ta: Q, tb: Q, ha: Q, hb: Q, level: Q) -> Q {
    ta + (level - ha) * (tb - ta) / (hb - ha)
}

/// Root operator `e_i` or `f_i`; `None` when undefined.
pub fn root_operator(datum: &CartanDatum, path: &PLPath, i: usize, dir: Direction) -> Option<PLPath> {
    let (times, h) = heights(path, i);
    let k = h.len() - 1;
    let m = *h.iter().min()?;
    let one = Q::one();
    let (t0, t1) = match dir {
        Direction::F => {
            if h[k] - m < one {
                return None;
            }
            let j0 = (0..=k).rev().find(|&j| h[j] == m)?;
            let j = (j0..k).find(|&j| h[j + 1] >= m + one)?;
            (times[j0], crossing(times[j], times[j + 1], h[j], h[j + 1], m + one))
        }
        Direction::E => {
            if m > -one {
                return None;
            }
            let j1 = (0..=k).find(|&j| h[j] == m)?;
            let j = (1..=j1).rev().find(|&j| h[j - 1] >= m + one)?;
            (crossing(times[j - 1], times[j], h[j - 1], h[j], m + one), times[j1])
        }
    };
    Some(path.map_window(t0, t1, |v| datum.reflect_rat(i, v)))
}

/// Pitman transform `𝒫_{α_i}(τ)(t) = τ(t) - (inf_{s≤t} ⟨τ(s), α_i∨⟩) α_i`.
///
/// On intervals where the height reaches a new running minimum the velocity
/// is reflected; elsewhere it is unchanged.
pub fn pitman_transform(datum: &CartanDatum, path: &PLPath, i: usize) -> PLPath {
    let mut out = Vec::with_capacity(path.segments.len() + 4);
    let mut h = Q::zero();
    let mut running_min = Q::zero();
    for s in &path.segments {
        let slope = s.velocity[i];
        let end = h + slope * s.duration;
        if slope.is_negative() && end < running_min {
            let before = (h - running_min) / -slope;
            let before = before.max(Q::zero());
            out.push(Segment { duration: before, velocity: s.velocity });
            out.push(Segment { duration: s.duration - before, velocity: datum.reflect_rat(i, &s.velocity) });
            running_min = end;
        } else {
            out.push(s.clone());
        }
        h = end;
    }
    PLPath::from_segments(path.rank, out)
}

/// Composite `𝒫_{α_{i_1}} ∘ ⋯ ∘ 𝒫_{α_{i_r}}` along the stored reduced word of `w0`.
pub fn pitman_chain(datum: &CartanDatum, path: &PLPath) -> PLPath {
    datum
        .w0_word
        .iter()
        .rev()
        .fold(path.clone(), |p, &i| pitman_transform(datum, &p, i))
}

/// Whether `base + π(t)` stays in the closed dominant chamber; exact, at breakpoints.
pub fn in_chamber(path: &PLPath, base: &Weight) -> bool {
    let b = base.to_rat();
    path.breakpoints().iter().all(|(_, p)| (b + *p).is_dominant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;

    fn datum(s: &str) -> CartanDatum {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn seg(d: Q, v: &[i64]) -> Segment {
        Segment { duration: d, velocity: Weight::new(v).to_rat() }
    }

    #[test]
    fn a1_root_operators() {
        let a1 = datum("A1");
        let p0 = PLPath::straight(&Weight::new(&[1]));
        let p1 = root_operator(&a1, &p0, 0, Direction::F).unwrap();
        assert_eq!(p1, PLPath::straight(&Weight::new(&[-1])));
        assert!(root_operator(&a1, &p1, 0, Direction::F).is_none());
        assert_eq!(root_operator(&a1, &p1, 0, Direction::E).unwrap(), p0);
        assert!(root_operator(&a1, &p0, 0, Direction::E).is_none());
    }

    #[test]
    fn operator_cuts_inside_segments() {
        let a1 = datum("A1");
        let p = PLPath::straight(&Weight::new(&[2]));
        let q1 = root_operator(&a1, &p, 0, Direction::F).unwrap();
        let half = Q::new(1, 2);
        assert_eq!(q1, PLPath::from_segments(1, vec![seg(half, &[-2]), seg(half, &[2])]));
        assert_eq!(q1.endpoint(), Weight::new(&[0]).to_rat());
        assert_eq!(root_operator(&a1, &q1, 0, Direction::E).unwrap(), p);
    }

    #[test]
    fn pitman_examples() {
        let a1 = datum("A1");
        let p = PLPath::from_segments(1, vec![seg(Q::one(), &[-1]), seg(Q::one(), &[1])]);
        let t = pitman_transform(&a1, &p, 0);
        assert_eq!(t.endpoint(), Weight::new(&[2]).to_rat());
        assert_eq!(pitman_transform(&a1, &t, 0), t);
        let inside = PLPath::straight(&Weight::new(&[3]));
        assert_eq!(pitman_chain(&a1, &inside), inside);
    }

    #[test]
    fn chamber_membership() {
        let a1 = datum("A1");
        let p0 = PLPath::straight(&Weight::new(&[1]));
        let p1 = root_operator(&a1, &p0, 0, Direction::F).unwrap();
        assert!(in_chamber(&p0, &Weight::new(&[0])));
        assert!(!in_chamber(&p1, &Weight::new(&[0])));
        assert!(in_chamber(&p1, &Weight::new(&[1])));
    }
}
