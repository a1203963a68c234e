use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hopf::{chi_polynomial, Species};
use crate::hypergraph::Hypergraph;
use crate::orientations::for_each_coloring;
use crate::polyring::RationalPoly;
use crate::setcomp::{bits, compress, map_mask, GroundSet, Mask, Relabeling};

/// A simple graph. Both coproduct factors are induced subgraphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    ground: GroundSet,
    edges: Vec<Mask>,
}

impl Graph {
    pub fn new(ground: GroundSet, mut edges: Vec<Mask>) -> Result<Self> {
        for &e in &edges {
            if e.count_ones() != 2 {
                return Err(Error::invalid("graph edge", ground.fmt_mask(e)));
            }
            ground.check_subset(e)?;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("graph", "repeated edge"));
        }
        Ok(Graph { ground, edges })
    }

    pub fn from_labels<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
        E: IntoIterator<Item = (S, S)>,
    {
        let ground = GroundSet::new(vertices)?;
        let masks = edges
            .into_iter()
            .map(|(a, b)| ground.mask_of([a, b]))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(ground, masks)
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        Graph::new(h.ground().clone(), h.edges().to_vec())
    }

    pub fn complete(ground: GroundSet) -> Self {
        let k = ground.len();
        let edges = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| 1 << a | 1 << b))
            .collect();
        Graph::new(ground, edges).expect("valid edges")
    }

    pub fn edges(&self) -> &[Mask] {
        &self.edges
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.ground.clone(), self.edges.clone()).expect("valid edges")
    }

    fn induced(&self, s: Mask) -> Graph {
        let edges: Vec<Mask> = self
            .edges
            .iter()
            .filter(|&&e| e & !s == 0)
            .map(|&e| compress(e, s))
            .collect();
        Graph {
            ground: self.ground.subset(s),
            edges,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.fmt_term(), self.ground)
    }
}

impl Species for Graph {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn unit() -> Self {
        Graph {
            ground: GroundSet::empty(),
            edges: Vec::new(),
        }
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let (ground, left, right) = self.ground.disjoint_union(&other.ground)?;
        let mut edges: Vec<Mask> = self
            .edges
            .iter()
            .map(|&e| map_mask(e, &left))
            .chain(other.edges.iter().map(|&e| map_mask(e, &right)))
            .collect();
        edges.sort_unstable();
        Ok(Graph { ground, edges })
    }

    fn restriction(&self, s: Mask) -> Result<Self> {
        self.ground.check_subset(s)?;
        Ok(self.induced(s))
    }

    /// `g/S = g|T`.
    fn contraction(&self, s: Mask) -> Result<Self> {
        self.ground.check_subset(s)?;
        Ok(self.induced(self.ground.full() & !s))
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        let (ground, perm) = sigma.apply(&self.ground)?;
        let mut edges: Vec<Mask> = self.edges.iter().map(|&e| map_mask(e, &perm)).collect();
        edges.sort_unstable();
        Ok(Graph { ground, edges })
    }

    fn is_discrete(&self) -> bool {
        self.edges.is_empty()
    }

    fn restriction_is_discrete(&self, s: Mask) -> bool {
        !self.edges.iter().any(|&e| e & !s == 0)
    }

    fn fmt_term(&self) -> String {
        let parts: Vec<String> = self.edges.iter().map(|&e| self.ground.fmt_mask(e)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// The basic invariant computed with the graph coproduct.
pub fn chi_graph(g: &Graph) -> RationalPoly {
    chi_polynomial(g)
}

/// Number of proper colorings with `[n]`, by enumeration.
pub fn chromatic_brute_force(g: &Graph, n: usize) -> u128 {
    let mut count = 0;
    for_each_coloring(g.ground().len(), n, |colors| {
        let proper = g.edges().iter().all(|&e| {
            let mut it = bits(e);
            let (a, b) = (it.next().expect("two ends"), it.next().expect("two ends"));
            colors[a] != colors[b]
        });
        if proper {
            count += 1;
        }
    });
    count
}

/// The chromatic polynomial by `P(g) = P(g - e) - P(g / e)`, memoized on the
/// normalized (vertex count, sorted edge list) form.
pub fn chromatic_deletion_contraction(g: &Graph) -> RationalPoly {
    let mut memo = HashMap::new();
    chromatic_rec(g.ground().len(), g.edges().to_vec(), &mut memo)
}

fn chromatic_rec(k: usize, edges: Vec<Mask>, memo: &mut HashMap<(usize, Vec<Mask>), RationalPoly>) -> RationalPoly {
    let Some(&e) = edges.first() else {
        return RationalPoly::power(k);
    };
    if let Some(p) = memo.get(&(k, edges.clone())) {
        return p.clone();
    }
    let deleted = edges[1..].to_vec();
    // merge the higher endpoint into the lower one and close the gap
    let keep = e.trailing_zeros() as usize;
    let gone = 63 - e.leading_zeros() as usize;
    let squeeze = |m: Mask| {
        let low = m & ((1 << gone) - 1);
        let high = m.checked_shr(gone as u32 + 1).unwrap_or(0) << gone;
        low | high
    };
    let mut contracted: Vec<Mask> = edges[1..]
        .iter()
        .map(|&f| {
            let f = if f >> gone & 1 == 1 { (f & !(1 << gone)) | 1 << keep } else { f };
            squeeze(f)
        })
        .filter(|f| f.count_ones() == 2)
        .collect();
    contracted.sort_unstable();
    contracted.dedup();
    let p = &chromatic_rec(k, deleted, memo) - &chromatic_rec(k - 1, contracted, memo);
    memo.insert((k, edges), p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{interpolate, rat};

    fn graph(v: &[&str], e: &[(&str, &str)]) -> Graph {
        Graph::from_labels(v.iter().copied(), e.iter().copied()).unwrap()
    }

    fn brute_poly(g: &Graph) -> RationalPoly {
        let pts: Vec<_> = (0..=g.ground().len())
            .map(|n| (n as i64, rat(chromatic_brute_force(g, n) as i64)))
            .collect();
        interpolate(&pts).unwrap()
    }

    #[test]
    fn coproduct_examples() {
        let k3 = Graph::complete(GroundSet::numbered(3));
        let s = k3.ground().mask_of(["0", "1"]).unwrap();
        let (l, r) = k3.coproduct(s).unwrap();
        assert_eq!(l, graph(&["0", "1"], &[("0", "1")]));
        assert_eq!(r, graph(&["2"], &[]));
        let (l, r) = k3.coproduct(k3.ground().full()).unwrap();
        assert_eq!((l, r), (k3.clone(), Graph::unit()));
        let empty = graph(&["a", "b", "c"], &[]);
        let (l, r) = empty.coproduct(0b010).unwrap();
        assert!(l.edges().is_empty() && r.edges().is_empty());
    }

    #[test]
    fn deletion_contraction_examples() {
        let k3 = Graph::complete(GroundSet::numbered(3));
        assert_eq!(chromatic_deletion_contraction(&k3), RationalPoly::from_integers(&[0, 2, -3, 1]));
        assert_eq!(chromatic_deletion_contraction(&k3), brute_poly(&k3));
        let edge = graph(&["a", "b"], &[("a", "b")]);
        assert_eq!(chromatic_deletion_contraction(&edge), RationalPoly::from_integers(&[0, -1, 1]));
        assert_eq!(chromatic_deletion_contraction(&graph(&["a", "b"], &[])), RationalPoly::power(2));
        let k5 = Graph::complete(GroundSet::numbered(5));
        assert_eq!(chromatic_deletion_contraction(&k5), brute_poly(&k5));
    }

    #[test]
    fn chi_graph_examples() {
        let k3 = Graph::complete(GroundSet::numbered(3));
        let chi = chi_graph(&k3);
        assert_eq!(chi, RationalPoly::from_integers(&[0, 2, -3, 1]));
        assert_eq!(-chi.eval_int(-1), rat(6));
        let path = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        // n(n-1)^2
        assert_eq!(chi_graph(&path), RationalPoly::from_integers(&[0, 1, -2, 1]));
        assert_eq!(chi_graph(&path), chromatic_deletion_contraction(&path));
        assert_eq!(chi_graph(&graph(&["a"], &[])), RationalPoly::variable());
    }

    #[test]
    fn rejects_non_graph_edges() {
        let h = Hypergraph::from_labels(["1", "2", "3"], [vec!["1", "2", "3"]]).unwrap();
        assert!(Graph::from_hypergraph(&h).is_err());
    }
}
