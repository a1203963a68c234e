use std::fmt;

use crate::error::{Error, Result};
use crate::hopf::{chi_polynomial, Species};
use crate::hypergraph::Hypergraph;
use crate::polyring::RationalPoly;
use crate::setcomp::{compress, map_mask, GroundSet, Mask, Relabeling};

/// A hypergraph without repeated edges. Contraction keeps one copy of each
/// distinct `e ∩ T`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleHypergraph {
    ground: GroundSet,
    edges: Vec<Mask>,
}

impl SimpleHypergraph {
    pub fn new(ground: GroundSet, mut edges: Vec<Mask>) -> Result<Self> {
        for &e in &edges {
            if e == 0 {
                return Err(Error::invalid("edge", "empty edges are implicit"));
            }
            ground.check_subset(e)?;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("simple hypergraph", "repeated edge"));
        }
        Ok(SimpleHypergraph { ground, edges })
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        SimpleHypergraph::new(h.ground().clone(), h.edges().to_vec())
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.ground.clone(), self.edges.clone()).expect("valid edges")
    }

    pub fn edges(&self) -> &[Mask] {
        &self.edges
    }

    fn dedup(ground: GroundSet, mut edges: Vec<Mask>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        SimpleHypergraph { ground, edges }
    }
}

impl fmt::Debug for SimpleHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SimpleHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.fmt_term(), self.ground)
    }
}

impl Species for SimpleHypergraph {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn unit() -> Self {
        SimpleHypergraph {
            ground: GroundSet::empty(),
            edges: Vec::new(),
        }
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let (ground, left, right) = self.ground.disjoint_union(&other.ground)?;
        let edges = self
            .edges
            .iter()
            .map(|&e| map_mask(e, &left))
            .chain(other.edges.iter().map(|&e| map_mask(e, &right)))
            .collect();
        Ok(Self::dedup(ground, edges))
    }

    fn restriction(&self, s: Mask) -> Result<Self> {
        self.ground.check_subset(s)?;
        let edges = self.edges.iter().filter(|&&e| e & !s == 0).map(|&e| compress(e, s)).collect();
        Ok(Self::dedup(self.ground.subset(s), edges))
    }

    /// `{B ⊆ T nonempty | ∃ A ⊆ S, A ⊔ B ∈ H}`.
    fn contraction(&self, s: Mask) -> Result<Self> {
        self.ground.check_subset(s)?;
        let t = self.ground.full() & !s;
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & t != 0)
            .map(|&e| compress(e & t, t))
            .collect();
        Ok(Self::dedup(self.ground.subset(t), edges))
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        let (ground, perm) = sigma.apply(&self.ground)?;
        Ok(Self::dedup(ground, self.edges.iter().map(|&e| map_mask(e, &perm)).collect()))
    }

    fn is_discrete(&self) -> bool {
        self.edges.iter().all(|e| e.count_ones() <= 1)
    }

    fn restriction_is_discrete(&self, s: Mask) -> bool {
        !self.edges.iter().any(|&e| e & !s == 0 && e.count_ones() > 1)
    }

    fn fmt_term(&self) -> String {
        let parts: Vec<String> = self.edges.iter().map(|&e| self.ground.fmt_mask(e)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// The basic invariant computed with the simple-hypergraph coproduct.
pub fn chi_shg(h: &SimpleHypergraph) -> RationalPoly {
    chi_polynomial(h)
}
