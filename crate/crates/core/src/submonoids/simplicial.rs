use std::fmt;

use crate::error::{Error, Result};
use crate::hopf::Species;
use crate::polyring::RationalPoly;
use crate::setcomp::{compress, map_mask, submasks, GroundSet, Mask, Relabeling};

use super::graph::Graph;
use super::simple::{chi_shg, SimpleHypergraph};

/// An abstract simplicial complex: a downward-closed family of faces.
/// The empty face is always present and stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialComplex {
    ground: GroundSet,
    faces: Vec<Mask>,
}

impl SimplicialComplex {
    /// Faces must be closed under taking subsets; `∅` is added if absent.
    pub fn new(ground: GroundSet, mut faces: Vec<Mask>) -> Result<Self> {
        for &f in &faces {
            ground.check_subset(f)?;
        }
        faces.push(0);
        faces.sort_unstable();
        faces.dedup();
        for &f in &faces {
            for i in crate::setcomp::bits(f) {
                let sub = f & !(1 << i);
                if faces.binary_search(&sub).is_err() {
                    return Err(Error::invalid(
                        "simplicial complex",
                        format!("{} is a face but {} is not", ground.fmt_mask(f), ground.fmt_mask(sub)),
                    ));
                }
            }
        }
        Ok(SimplicialComplex { ground, faces })
    }

    /// The downward closure of `facets`.
    pub fn from_facets(ground: GroundSet, facets: &[Mask]) -> Result<Self> {
        let mut faces = Vec::new();
        for &f in facets {
            ground.check_subset(f)?;
            faces.extend(submasks(f));
        }
        SimplicialComplex::new(ground, faces)
    }

    /// The full simplex on `ground`.
    pub fn simplex(ground: GroundSet) -> Self {
        let full = ground.full();
        SimplicialComplex::from_facets(ground, &[full]).expect("subset of ground")
    }

    pub fn faces(&self) -> &[Mask] {
        &self.faces
    }

    /// The graph of the faces of cardinality 2.
    pub fn one_skeleton(&self) -> Graph {
        let edges = self.faces.iter().copied().filter(|f| f.count_ones() == 2).collect();
        Graph::new(self.ground.clone(), edges).expect("2-element faces")
    }

    /// Nonempty faces as edges of a simple hypergraph.
    pub fn to_simple_hypergraph(&self) -> SimpleHypergraph {
        let edges = self.faces.iter().copied().filter(|&f| f != 0).collect();
        SimpleHypergraph::new(self.ground.clone(), edges).expect("distinct nonempty faces")
    }

    fn normalized(ground: GroundSet, mut faces: Vec<Mask>) -> Self {
        faces.push(0);
        faces.sort_unstable();
        faces.dedup();
        SimplicialComplex { ground, faces }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.fmt_term(), self.ground)
    }
}

impl Species for SimplicialComplex {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn unit() -> Self {
        SimplicialComplex {
            ground: GroundSet::empty(),
            faces: vec![0],
        }
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let (ground, left, right) = self.ground.disjoint_union(&other.ground)?;
        let faces = self
            .faces
            .iter()
            .map(|&f| map_mask(f, &left))
            .chain(other.faces.iter().map(|&f| map_mask(f, &right)))
            .collect();
        Ok(Self::normalized(ground, faces))
    }

    fn restriction(&self, s: Mask) -> Result<Self> {
        self.ground.check_subset(s)?;
        let faces = self.faces.iter().filter(|&&f| f & !s == 0).map(|&f| compress(f, s)).collect();
        Ok(Self::normalized(self.ground.subset(s), faces))
    }

    /// The simple-hypergraph contraction of the face set, which is again
    /// downward closed.
    fn contraction(&self, s: Mask) -> Result<Self> {
        self.ground.check_subset(s)?;
        let t = self.ground.full() & !s;
        let faces = self
            .faces
            .iter()
            .filter(|&&f| f & t != 0)
            .map(|&f| compress(f & t, t))
            .collect();
        Ok(Self::normalized(self.ground.subset(t), faces))
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        let (ground, perm) = sigma.apply(&self.ground)?;
        Ok(Self::normalized(ground, self.faces.iter().map(|&f| map_mask(f, &perm)).collect()))
    }

    fn is_discrete(&self) -> bool {
        self.faces.iter().all(|f| f.count_ones() <= 1)
    }

    fn restriction_is_discrete(&self, s: Mask) -> bool {
        !self.faces.iter().any(|&f| f & !s == 0 && f.count_ones() > 1)
    }

    fn fmt_term(&self) -> String {
        let parts: Vec<String> = self.faces.iter().map(|&f| self.ground.fmt_mask(f)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// The basic invariant, computed through the simple-hypergraph structure of
/// the face set.
pub fn chi_sc(c: &SimplicialComplex) -> RationalPoly {
    chi_shg(&c.to_simple_hypergraph())
}
