//! Hypergraphs over labeled ground sets: disjoint union as product,
//! restriction ⊗ contraction as coproduct.

use std::fmt;

use crate::error::{Error, Result};
use crate::hopf::Species;
use crate::setcomp::{bits, compress, map_mask, GroundSet, Mask, Relabeling};

/// A multiset of nonempty edges over a ground set.
///
/// The empty edge every hypergraph carries is implicit. Edges are kept
/// sorted, so two hypergraphs are equal exactly when their ground sets and
/// edge multisets agree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: Vec<Mask>,
}

impl Hypergraph {
    pub fn new(ground: GroundSet, mut edges: Vec<Mask>) -> Result<Self> {
        for &e in &edges {
            if e == 0 {
                return Err(Error::invalid("edge", "empty edges are implicit"));
            }
            ground.check_subset(e)?;
        }
        edges.sort_unstable();
        Ok(Hypergraph { ground, edges })
    }

    pub fn from_labels<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
        E: IntoIterator,
        E::Item: IntoIterator,
        <E::Item as IntoIterator>::Item: AsRef<str>,
    {
        let ground = GroundSet::new(vertices)?;
        let masks = edges
            .into_iter()
            .map(|e| ground.mask_of(e))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(ground, masks)
    }

    /// The hypergraph with no edges on `ground`.
    pub fn edgeless(ground: GroundSet) -> Self {
        Hypergraph {
            ground,
            edges: Vec::new(),
        }
    }

    pub(crate) fn from_sorted_unchecked(ground: GroundSet, edges: Vec<Mask>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] <= w[1]));
        Hypergraph { ground, edges }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Edge occurrences in canonical order.
    pub fn edges(&self) -> &[Mask] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `H|S`: the edges contained in `s`, over `s`.
    pub fn restriction(&self, s: Mask) -> Result<Hypergraph> {
        self.ground.check_subset(s)?;
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & !s == 0)
            .map(|&e| compress(e, s))
            .collect::<Vec<_>>();
        // compress is monotone on subsets of s
        Ok(Hypergraph::from_sorted_unchecked(self.ground.subset(s), edges))
    }

    /// `H/S`: one copy of `e ∩ T` for every edge `e ⊄ S`, over `T = I ∖ S`.
    pub fn contraction(&self, s: Mask) -> Result<Hypergraph> {
        self.ground.check_subset(s)?;
        let t = self.ground.full() & !s;
        let mut edges: Vec<Mask> = self
            .edges
            .iter()
            .filter(|&&e| e & !s != 0)
            .map(|&e| compress(e & t, t))
            .collect();
        edges.sort_unstable();
        Ok(Hypergraph::from_sorted_unchecked(self.ground.subset(t), edges))
    }

    /// Disjoint union.
    pub fn product(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let (ground, left, right) = self.ground.disjoint_union(&other.ground)?;
        let mut edges: Vec<Mask> = self
            .edges
            .iter()
            .map(|&e| map_mask(e, &left))
            .chain(other.edges.iter().map(|&e| map_mask(e, &right)))
            .collect();
        edges.sort_unstable();
        Ok(Hypergraph { ground, edges })
    }

    pub fn coproduct(&self, s: Mask) -> Result<(Hypergraph, Hypergraph)> {
        Ok((self.restriction(s)?, self.contraction(s)?))
    }

    pub fn relabel(&self, sigma: &Relabeling) -> Result<Hypergraph> {
        let (ground, perm) = sigma.apply(&self.ground)?;
        let mut edges: Vec<Mask> = self.edges.iter().map(|&e| map_mask(e, &perm)).collect();
        edges.sort_unstable();
        Ok(Hypergraph { ground, edges })
    }

    /// Every edge has at most one vertex.
    pub fn is_discrete(&self) -> bool {
        self.edges.iter().all(|e| e.count_ones() <= 1)
    }

    /// Vertices lying in no edge.
    pub fn isolated_vertices(&self) -> Mask {
        self.ground.full() & !self.edges.iter().fold(0, |acc, e| acc | e)
    }

    /// Whether no edge occurs twice.
    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn edge_labels(&self) -> Vec<Vec<String>> {
        self.edges
            .iter()
            .map(|&e| bits(e).map(|i| self.ground.label(i).to_string()).collect())
            .collect()
    }

    /// The edge multiset, e.g. `{{1,2},{2,3}}`.
    pub fn fmt_edges(&self) -> String {
        let parts: Vec<String> = self.edges.iter().map(|&e| self.ground.fmt_mask(e)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.fmt_edges(), self.ground)
    }
}

impl Species for Hypergraph {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn unit() -> Self {
        Hypergraph::edgeless(GroundSet::empty())
    }

    fn product(&self, other: &Self) -> Result<Self> {
        Hypergraph::product(self, other)
    }

    fn restriction(&self, s: Mask) -> Result<Self> {
        Hypergraph::restriction(self, s)
    }

    fn contraction(&self, s: Mask) -> Result<Self> {
        Hypergraph::contraction(self, s)
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        Hypergraph::relabel(self, sigma)
    }

    fn is_discrete(&self) -> bool {
        Hypergraph::is_discrete(self)
    }

    fn restriction_is_discrete(&self, s: Mask) -> bool {
        !self.edges.iter().any(|&e| e & !s == 0 && e.count_ones() > 1)
    }

    fn fmt_term(&self) -> String {
        self.fmt_edges()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcomp::Decomposition;

    fn hg(v: &[&str], e: &[&[&str]]) -> Hypergraph {
        Hypergraph::from_labels(v, e.iter().map(|x| x.iter())).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let h = hg(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let s = h.ground().mask_of(["1", "2"]).unwrap();
        assert_eq!(h.restriction(s).unwrap(), hg(&["1", "2"], &[&["1", "2"]]));
        assert_eq!(h.restriction(0).unwrap(), Hypergraph::unit());
        assert_eq!(h.restriction(h.ground().full()).unwrap(), h);
        assert_eq!(h.restriction(0b1000), Err(Error::NotSubset));
    }

    #[test]
    fn contraction_examples() {
        let h = hg(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let s = h.ground().mask_of(["1", "2"]).unwrap();
        assert_eq!(h.contraction(s).unwrap(), hg(&["3"], &[&["3"]]));
        assert_eq!(h.contraction(0).unwrap(), h);

        let h = hg(&["1", "2", "3"], &[&["1", "2"], &["1", "2"], &["1", "3"]]);
        let s = h.ground().mask_of(["1"]).unwrap();
        assert_eq!(h.contraction(s).unwrap(), hg(&["2", "3"], &[&["2"], &["2"], &["3"]]));
        assert_eq!(h.contraction(0b1000), Err(Error::NotSubset));
    }

    #[test]
    fn product_examples() {
        let a = hg(&["1"], &[&["1"]]);
        let b = hg(&["2"], &[&["2"]]);
        assert_eq!(a.product(&b).unwrap(), hg(&["1", "2"], &[&["1"], &["2"]]));
        assert_eq!(a.product(&Hypergraph::unit()).unwrap(), a);
        let c = hg(&["1", "2"], &[&["1", "2"]]);
        let d = hg(&["3"], &[]);
        assert_eq!(c.product(&d).unwrap(), hg(&["1", "2", "3"], &[&["1", "2"]]));
        assert_eq!(a.product(&a), Err(Error::Overlap));
    }

    #[test]
    fn coproduct_examples() {
        let h = hg(
            &["1", "2", "3", "4", "5"],
            &[&["1", "2"], &["2", "3", "4"], &["4", "5"], &["3", "4"], &["1", "5"]],
        );
        let s = h.ground().mask_of(["1", "2", "5"]).unwrap();
        let (l, r) = h.coproduct(s).unwrap();
        assert_eq!(l.ground().to_string(), "{1,2,5}");
        assert_eq!(r.ground().to_string(), "{3,4}");
        assert_eq!(l.fmt_edges(), "{{1,2},{1,5}}");
        assert_eq!(r.fmt_edges(), "{{4},{3,4},{3,4}}");

        let (l, r) = h.coproduct(h.ground().full()).unwrap();
        assert_eq!((l, r), (h.clone(), Hypergraph::unit()));
        let (l, r) = h.coproduct(0).unwrap();
        assert_eq!((l, r), (Hypergraph::unit(), h));
    }

    #[test]
    fn iterated_coproduct_examples() {
        let h = hg(&["1", "2"], &[&["1", "2"]]);
        let g = h.ground().clone();
        let whole = Decomposition::new(g.clone(), vec![g.full()]).unwrap();
        assert_eq!(h.iterated_coproduct(&whole).unwrap(), vec![h.clone()]);
        let counit = Decomposition::new(g.clone(), vec![0, g.full()]).unwrap();
        assert_eq!(h.iterated_coproduct(&counit).unwrap(), vec![Hypergraph::unit(), h.clone()]);
        let split = Decomposition::new(g.clone(), vec![0b01, 0b10]).unwrap();
        assert_eq!(
            h.iterated_coproduct(&split).unwrap(),
            vec![hg(&["1"], &[]), hg(&["2"], &[&["2"]])]
        );
        let other = Decomposition::new(GroundSet::numbered(2), vec![0b11]).unwrap();
        assert!(h.iterated_coproduct(&other).is_err());
    }

    #[test]
    fn relabel_examples() {
        let h = hg(&["1", "2"], &[&["1", "2"]]);
        assert_eq!(h.relabel(&Relabeling::identity(h.ground())).unwrap(), h);
        let sigma = Relabeling::new([("1", "a"), ("2", "b")]).unwrap();
        assert_eq!(h.relabel(&sigma).unwrap(), hg(&["a", "b"], &[&["a", "b"]]));

        let h = hg(&["1", "2", "3"], &[&["1"], &["1", "2"], &["3"]]);
        let sigma = Relabeling::new([("1", "z"), ("2", "y"), ("3", "x")]).unwrap();
        let tau = Relabeling::new([("z", "p"), ("y", "r"), ("x", "q")]).unwrap();
        assert_eq!(
            h.relabel(&tau.compose(&sigma).unwrap()).unwrap(),
            h.relabel(&sigma).unwrap().relabel(&tau).unwrap()
        );
    }

    #[test]
    fn discreteness_and_isolated_vertices() {
        assert!(hg(&["1", "2"], &[&["1"], &["2"], &["1"]]).is_discrete());
        assert!(!hg(&["1", "2"], &[&["1", "2"]]).is_discrete());
        assert!(hg(&["1", "2"], &[]).is_discrete());

        let h = hg(&["1", "2", "3"], &[&["1", "2"]]);
        assert_eq!(h.ground().labels_of(h.isolated_vertices()).len(), 1);
        assert_eq!(h.isolated_vertices(), 0b100);
        assert_eq!(hg(&["1", "2"], &[]).isolated_vertices(), 0b11);
        assert_eq!(hg(&["1", "2"], &[&["1"], &["2"]]).isolated_vertices(), 0);
    }

    #[test]
    fn same_edges_over_different_grounds_differ() {
        let a = hg(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["2", "3", "4"]]);
        let b = hg(&["1", "2", "3", "4", "a", "b"], &[&["1", "2", "3"], &["2", "3", "4"]]);
        assert_ne!(a, b);
    }

    #[test]
    fn contraction_composes() {
        let h = hg(&["1", "2", "3", "4"], &[&["1", "2"], &["2", "3", "4"], &["1", "4"], &["3"]]);
        let s = 0b0001;
        let inner = h.contraction(s).unwrap();
        // {3} inside the contracted ground {2,3,4}
        let s2 = inner.ground().mask_of(["3"]).unwrap();
        assert_eq!(inner.contraction(s2).unwrap(), h.contraction(0b0101).unwrap());
    }
}
