use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num::BigInt;

use crate::error::{Error, Result};
use crate::hopf::{chi_polynomial, Species};
use crate::orientations::for_each_coloring;
use crate::polyring::{binomial, RationalPoly};
use crate::setcomp::{GroundSet, Label, Mask, Relabeling};

/// A set partition of the ground set with a path (a word up to reversal) on
/// each block.
///
/// Each path is stored in its lexicographically smaller reading. Blocks keep
/// the order in which they were given or produced, which is what `Display`
/// shows; equality, ordering and hashing ignore block order.
#[derive(Clone)]
pub struct SetOfPaths {
    ground: GroundSet,
    paths: Vec<Vec<usize>>,
    sorted: Vec<Vec<usize>>,
}

fn orient(mut p: Vec<usize>) -> Vec<usize> {
    let rev: Vec<usize> = p.iter().rev().copied().collect();
    if rev < p {
        p = rev;
    }
    p
}

impl SetOfPaths {
    fn from_indices(ground: GroundSet, paths: Vec<Vec<usize>>) -> Self {
        let paths: Vec<Vec<usize>> = paths.into_iter().filter(|p| !p.is_empty()).map(orient).collect();
        let mut sorted = paths.clone();
        sorted.sort();
        SetOfPaths { ground, paths, sorted }
    }

    /// Paths given as label sequences; together they must cover `ground`
    /// exactly once.
    pub fn new<S: AsRef<str>>(ground: GroundSet, paths: &[Vec<S>]) -> Result<Self> {
        let mut seen: Mask = 0;
        let mut idx_paths = Vec::with_capacity(paths.len());
        for p in paths {
            if p.is_empty() {
                return Err(Error::invalid("path", "empty path"));
            }
            let mut idx = Vec::with_capacity(p.len());
            for l in p {
                let l = l.as_ref();
                let i = ground.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
                if seen >> i & 1 == 1 {
                    return Err(Error::DuplicateLabel(l.to_string()));
                }
                seen |= 1 << i;
                idx.push(i);
            }
            idx_paths.push(idx);
        }
        if seen != ground.full() {
            return Err(Error::invalid("set of paths", "paths do not cover the ground set"));
        }
        Ok(Self::from_indices(ground, idx_paths))
    }

    /// Paths written as words of one-character labels, e.g. `["bfcg", "aed"]`.
    pub fn from_words<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let paths: Vec<Vec<String>> = words
            .iter()
            .map(|w| w.as_ref().chars().map(|c| c.to_string()).collect())
            .collect();
        let ground = GroundSet::new(paths.iter().flatten())?;
        SetOfPaths::new(ground, &paths)
    }

    /// A single path visiting `ground` in its canonical order.
    pub fn single_path(ground: GroundSet) -> Self {
        let path = (0..ground.len()).collect();
        Self::from_indices(ground, vec![path])
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn path_labels(&self) -> Vec<Vec<Label>> {
        self.paths
            .iter()
            .map(|p| p.iter().map(|&i| self.ground.label(i).clone()).collect())
            .collect()
    }

    fn fmt_paths(&self) -> String {
        let compact = self.ground.labels().iter().all(|l| l.chars().count() == 1);
        let sep = if compact { "" } else { "-" };
        let words: Vec<String> = self
            .paths
            .iter()
            .map(|p| p.iter().map(|&i| self.ground.label(i).as_ref()).collect::<Vec<_>>().join(sep))
            .collect();
        words.join("|")
    }
}

impl PartialEq for SetOfPaths {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.sorted == other.sorted
    }
}

impl Eq for SetOfPaths {}

impl PartialOrd for SetOfPaths {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SetOfPaths {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.ground, &self.sorted).cmp(&(&other.ground, &other.sorted))
    }
}

impl Hash for SetOfPaths {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ground.hash(state);
        self.sorted.hash(state);
    }
}

impl fmt::Debug for SetOfPaths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Paths separated by `|`, e.g. `bc|e`.
impl fmt::Display for SetOfPaths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_paths())
    }
}

fn reindex(p: &[usize], within: Mask) -> Vec<usize> {
    p.iter().map(|&i| (within & ((1 << i) - 1)).count_ones() as usize).collect()
}

impl Species for SetOfPaths {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn unit() -> Self {
        Self::from_indices(GroundSet::empty(), Vec::new())
    }

    fn product(&self, other: &Self) -> Result<Self> {
        let (ground, left, right) = self.ground.disjoint_union(&other.ground)?;
        let paths = self
            .paths
            .iter()
            .map(|p| p.iter().map(|&i| left[i]).collect())
            .chain(other.paths.iter().map(|p| p.iter().map(|&i| right[i]).collect()))
            .collect();
        Ok(Self::from_indices(ground, paths))
    }

    /// Each path restricted to `S` in path order, empty ones dropped.
    fn restriction(&self, s: Mask) -> Result<Self> {
        self.ground.check_subset(s)?;
        let paths = self
            .paths
            .iter()
            .map(|p| {
                let kept: Vec<usize> = p.iter().copied().filter(|&i| s >> i & 1 == 1).collect();
                reindex(&kept, s)
            })
            .collect();
        Ok(Self::from_indices(self.ground.subset(s), paths))
    }

    /// Every element of `S` becomes a separator; the maximal `S`-free
    /// segments remain.
    fn contraction(&self, s: Mask) -> Result<Self> {
        self.ground.check_subset(s)?;
        let t = self.ground.full() & !s;
        let paths = self
            .paths
            .iter()
            .flat_map(|p| p.split(|&i| s >> i & 1 == 1).map(|seg| reindex(seg, t)))
            .collect();
        Ok(Self::from_indices(self.ground.subset(t), paths))
    }

    fn relabel(&self, sigma: &Relabeling) -> Result<Self> {
        let (ground, perm) = sigma.apply(&self.ground)?;
        let paths = self.paths.iter().map(|p| p.iter().map(|&i| perm[i]).collect()).collect();
        Ok(Self::from_indices(ground, paths))
    }

    fn is_discrete(&self) -> bool {
        self.paths.iter().all(|p| p.len() == 1)
    }

    fn restriction_is_discrete(&self, s: Mask) -> bool {
        self.paths
            .iter()
            .all(|p| p.iter().filter(|&&i| s >> i & 1 == 1).count() <= 1)
    }
}

/// The basic invariant computed with the paths coproduct.
pub fn chi_paths(alpha: &SetOfPaths) -> RationalPoly {
    chi_polynomial(alpha)
}

/// An unlabeled binary tree shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    /// All shapes with `m` internal vertices.
    pub fn all(m: usize) -> Vec<BinaryTree> {
        if m == 0 {
            return vec![BinaryTree::Leaf];
        }
        let mut out = Vec::new();
        for left in 0..m {
            for l in BinaryTree::all(left) {
                for r in BinaryTree::all(m - 1 - left) {
                    out.push(BinaryTree::Node(Box::new(l.clone()), Box::new(r)));
                }
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Parent of each vertex in preorder (`None` for the root).
    pub fn parents(&self) -> Vec<Option<usize>> {
        fn walk(t: &BinaryTree, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
            if let BinaryTree::Node(l, r) = t {
                let me = out.len();
                out.push(parent);
                walk(l, Some(me), out);
                walk(r, Some(me), out);
            }
        }
        let mut out = Vec::new();
        walk(self, None, &mut out);
        out
    }
}

/// Pairs (binary tree with `m` vertices, coloring of its vertices with
/// `[n]`) where every vertex has a color greater than its children's
/// (strictly, when `strict` is set).
pub fn count_tree_pairs(m: usize, n: usize, strict: bool) -> u128 {
    BinaryTree::all(m)
        .iter()
        .map(|t| {
            let parents = t.parents();
            let mut count = 0;
            for_each_coloring(m, n, |colors| {
                let ok = parents.iter().enumerate().all(|(v, p)| match p {
                    None => true,
                    Some(p) if strict => colors[*p] > colors[v],
                    Some(p) => colors[*p] >= colors[v],
                });
                if ok {
                    count += 1;
                }
            });
            count
        })
        .sum()
}

/// `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> BigInt {
    binomial(2 * m, m) / BigInt::from(m + 1)
}
