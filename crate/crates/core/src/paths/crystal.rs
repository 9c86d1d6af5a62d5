use std::collections::{HashMap, VecDeque};
use std::fmt::Write;

use crate::chars::weyl_dim;
use crate::rational::Q;
use crate::rootdata::CartanDatum;
use crate::{Error, Result, Weight};

use super::{root_operator, Direction, PLPath};

/// A crystal path together with data used by chamber tests.
#[derive(Clone, Debug)]
pub struct Letter {
    pub path: PLPath,
    pub weight: Weight,
    /// `min_t ⟨π(t), α_i∨⟩` for each `i`.
    pub min_heights: Vec<Q>,
}

impl Letter {
    /// Whether `base + π` stays in the dominant chamber.
    pub fn fits(&self, base: &Weight) -> bool {
        self.min_heights
            .iter()
            .enumerate()
            .all(|(i, m)| *m + base[i] >= Q::from_integer(0))
    }
}

/// The crystal `B(δ)` of Littelmann paths.
#[derive(Clone, Debug)]
pub struct CrystalB {
    pub delta: Weight,
    pub letters: Vec<Letter>,
    /// Arrows `(source, i, target)` with `target = f_i(source)`.
    pub edges: Vec<(usize, usize, usize)>,
    pub highest: usize,
}

impl CrystalB {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn paths(&self) -> impl Iterator<Item = &PLPath> {
        self.letters.iter().map(|l| &l.path)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, l) in self.letters.iter().enumerate() {
            let _ = writeln!(s, "  p{k} [label=\"{k}: {}\"];", l.weight);
        }
        for (a, i, b) in &self.edges {
            let _ = writeln!(s, "  p{a} -> p{b} [label=\"{}\"];", i + 1);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let paths: Vec<_> = self
            .letters
            .iter()
            .enumerate()
            .map(|(k, l)| {
                let segs: Vec<_> = l
                    .path
                    .segments()
                    .iter()
                    .map(|s| {
                        serde_json::json!({
                            "duration": s.duration.to_string(),
                            "velocity": s.velocity.coords().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                serde_json::json!({ "id": k, "endpoint": l.weight.coords(), "segments": segs })
            })
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|(a, i, b)| serde_json::json!({ "from": a, "to": b, "root": i + 1 }))
            .collect();
        serde_json::json!({
            "delta": self.delta.coords(),
            "size": self.len(),
            "paths": paths,
            "edges": edges,
        })
    }
}

/// Closure of the straight path `t ↦ tδ` under the operators `f_i`.
pub fn generate_crystal(datum: &CartanDatum, delta: &Weight, dim_cap: u64) -> Result<CrystalB> {
    if !delta.is_dominant() || delta.rank() != datum.rank() {
        return Err(Error::Invalid(format!("{delta} is not a dominant weight of {}", datum.ty)));
    }
    let dim = weyl_dim(datum, delta);
    if dim > dim_cap {
        return Err(Error::DimensionCap { dim, cap: dim_cap });
    }
    let start = PLPath::straight(delta);
    let mut index: HashMap<PLPath, usize> = HashMap::from([(start.clone(), 0)]);
    let mut paths = vec![start];
    let mut edges = vec![];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 0..datum.rank() {
            if let Some(p) = root_operator(datum, &paths[k], i, Direction::F) {
                let target = match index.get(&p) {
                    Some(&t) => t,
                    None => {
                        let t = paths.len();
                        index.insert(p.clone(), t);
                        paths.push(p);
                        queue.push_back(t);
                        t
                    }
                };
                edges.push((k, i, target));
            }
        }
    }
    let letters = paths
        .into_iter()
        .map(|path| {
            let weight = path.endpoint().to_int().expect("crystal endpoints are integral");
            let min_heights = path.min_heights();
            Letter { path, weight, min_heights }
        })
        .collect();
    Ok(CrystalB { delta: *delta, letters, edges, highest: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{weight_multiplicities, DEFAULT_DIM_CAP};
    use crate::paths::in_chamber;
    use crate::rootdata::build_root_system;
    use std::collections::BTreeMap;

    #[test]
    fn sizes_and_endpoints() {
        for (name, delta) in [
            ("A1", vec![1]),
            ("A1", vec![2]),
            ("A2", vec![1, 0]),
            ("A2", vec![1, 1]),
            ("B2", vec![1, 0]),
            ("B2", vec![0, 1]),
            ("G2", vec![1, 0]),
            ("G2", vec![0, 1]),
            ("A3", vec![1, 0, 1]),
        ] {
            let c = build_root_system(name.parse().unwrap()).unwrap();
            let delta = Weight::new(&delta);
            let b = generate_crystal(&c, &delta, DEFAULT_DIM_CAP).unwrap();
            let ch = weight_multiplicities(&c, &delta, DEFAULT_DIM_CAP).unwrap();
            assert_eq!(b.len() as u64, ch.total(), "{name} {delta}");
            let mut ends: BTreeMap<Weight, u64> = BTreeMap::new();
            for l in &b.letters {
                *ends.entry(l.weight).or_insert(0) += 1;
                assert_eq!(l.fits(&Weight::zero(c.rank())), in_chamber(&l.path, &Weight::zero(c.rank())));
            }
            assert_eq!(ends, ch.entries, "{name} {delta}");
        }
    }

    #[test]
    fn a2_fundamental_endpoints() {
        let c = build_root_system("A2".parse().unwrap()).unwrap();
        let b = generate_crystal(&c, &Weight::new(&[1, 0]), DEFAULT_DIM_CAP).unwrap();
        let ends: Vec<Weight> = b.letters.iter().map(|l| l.weight).collect();
        assert_eq!(ends, vec![Weight::new(&[1, 0]), Weight::new(&[-1, 1]), Weight::new(&[0, -1])]);
        assert!(b.to_dot().contains("p0 -> p1 [label=\"1\"]"));
    }
}
