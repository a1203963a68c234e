//! Finite ground sets, decompositions and compositions.
//!
//! Subsets of a [`GroundSet`] are bitmasks over the ground set's canonical
//! (lexicographic) label order: bit `i` stands for `ground.labels()[i]`.
//! Every enumeration below walks masks in a fixed order so results are
//! reproducible run to run.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An atom label. Labels are opaque and ordered lexicographically.
pub type Label = Arc<str>;

/// A subset of a ground set, as a bitmask over its canonical order.
pub type Mask = u64;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A finite set of distinct labels kept in lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroundSet {
    labels: Arc<[Label]>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut v: Vec<Label> = labels.into_iter().map(|s| Label::from(s.as_ref())).collect();
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].to_string()));
        }
        Self::from_sorted(v)
    }

    /// Ground set `{0, 1, .., k-1}` rendered as decimal labels.
    ///
    /// Labels sort lexicographically, so for `k > 10` the canonical order is
    /// not numeric.
    pub fn numbered(k: usize) -> Self {
        Self::new((0..k).map(|i| i.to_string())).expect("distinct labels")
    }

    pub fn empty() -> Self {
        GroundSet::default()
    }

    fn from_sorted(v: Vec<Label>) -> Result<Self> {
        if v.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge(v.len()));
        }
        Ok(GroundSet { labels: v.into() })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_ref().cmp(label)).ok()
    }

    /// Mask of the whole ground set.
    pub fn full(&self) -> Mask {
        full_mask(self.len())
    }

    pub fn mask_of<I, S>(&self, labels: I) -> Result<Mask>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut m = 0;
        for l in labels {
            let l = l.as_ref();
            let i = self.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn labels_of(&self, mask: Mask) -> Vec<Label> {
        bits(mask).map(|i| self.labels[i].clone()).collect()
    }

    pub fn check_subset(&self, mask: Mask) -> Result<()> {
        if mask & !self.full() == 0 {
            Ok(())
        } else {
            Err(Error::NotSubset)
        }
    }

    /// The ground set formed by the elements of `mask`.
    pub fn subset(&self, mask: Mask) -> GroundSet {
        GroundSet {
            labels: bits(mask).map(|i| self.labels[i].clone()).collect(),
        }
    }

    /// Union of two disjoint ground sets, with the positions of each
    /// operand's elements inside the union.
    pub fn disjoint_union(&self, other: &GroundSet) -> Result<(GroundSet, Vec<usize>, Vec<usize>)> {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut left, mut right) = (Vec::with_capacity(self.len()), Vec::with_capacity(other.len()));
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let take_left = match (self.labels.get(i), other.labels.get(j)) {
                (Some(a), Some(b)) if a == b => return Err(Error::Overlap),
                (Some(a), Some(b)) => a < b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                left.push(merged.len());
                merged.push(self.labels[i].clone());
                i += 1;
            } else {
                right.push(merged.len());
                merged.push(other.labels[j].clone());
                j += 1;
            }
        }
        Ok((GroundSet::from_sorted(merged)?, left, right))
    }

    pub fn is_disjoint(&self, other: &GroundSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.labels[i].cmp(&other.labels[j]) {
                std::cmp::Ordering::Equal => return false,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        true
    }

    /// Renders a mask as `{a,b,c}`.
    pub fn fmt_mask(&self, mask: Mask) -> String {
        let parts: Vec<&str> = bits(mask).map(|i| self.labels[i].as_ref()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels.iter().map(|l| l.as_ref())).finish()
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_mask(self.full()))
    }
}

pub fn full_mask(k: usize) -> Mask {
    if k >= 64 {
        !0
    } else {
        (1 << k) - 1
    }
}

/// Indices of the set bits of `mask`, ascending.
pub fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Re-indexes `mask` (a subset of `within`) relative to the elements of
/// `within`, so bit `k` of the result is the `k`-th element of `within`.
pub fn compress(mask: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (k, i) in bits(within).enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}

/// Inverse of [`compress`].
pub fn expand(mask: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (k, i) in bits(within).enumerate() {
        if mask >> k & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

/// Sends bit `i` of `mask` to bit `positions[i]`.
pub fn map_mask(mask: Mask, positions: &[usize]) -> Mask {
    bits(mask).fold(0, |acc, i| acc | 1 << positions[i])
}

/// All submasks of `mask` in increasing numeric order, including `0` and
/// `mask` itself.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

/// A bijection between two ground sets, given label by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    map: BTreeMap<Label, Label>,
}

impl Relabeling {
    pub fn new<I, A, B>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut map = BTreeMap::new();
        let mut image = BTreeSet::new();
        for (a, b) in pairs {
            let (a, b) = (Label::from(a.as_ref()), Label::from(b.as_ref()));
            if !image.insert(b.clone()) {
                return Err(Error::invalid("relabeling", format!("`{b}` is hit twice")));
            }
            if map.insert(a.clone(), b).is_some() {
                return Err(Error::DuplicateLabel(a.to_string()));
            }
        }
        Ok(Relabeling { map })
    }

    pub fn identity(ground: &GroundSet) -> Self {
        Relabeling {
            map: ground.labels().iter().map(|l| (l.clone(), l.clone())).collect(),
        }
    }

    pub fn get(&self, label: &str) -> Option<&Label> {
        self.map.get(label)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Relabeling) -> Result<Relabeling> {
        let mut map = BTreeMap::new();
        for (a, b) in &inner.map {
            let c = self.map.get(b).ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            map.insert(a.clone(), c.clone());
        }
        Ok(Relabeling { map })
    }

    pub fn inverse(&self) -> Relabeling {
        Relabeling {
            map: self.map.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// Image ground set and, for each old index, its new index.
    ///
    /// The relabeling must be defined on exactly the elements of `ground`.
    pub fn apply(&self, ground: &GroundSet) -> Result<(GroundSet, Vec<usize>)> {
        if self.map.len() != ground.len() {
            return Err(Error::invalid("relabeling", "domain differs from the ground set"));
        }
        let image: Vec<Label> = ground
            .labels()
            .iter()
            .map(|l| self.map.get(l).cloned().ok_or_else(|| Error::UnknownLabel(l.to_string())))
            .collect::<Result<_>>()?;
        let target = GroundSet::new(image.iter())?;
        let perm = image.iter().map(|l| target.index_of(l).expect("present")).collect();
        Ok((target, perm))
    }
}

/// An ordered sequence of pairwise disjoint blocks covering a ground set.
/// Empty blocks are allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    ground: GroundSet,
    blocks: Vec<Mask>,
}

impl Decomposition {
    pub fn new(ground: GroundSet, blocks: Vec<Mask>) -> Result<Self> {
        let mut seen = 0;
        for &b in &blocks {
            ground.check_subset(b)?;
            if seen & b != 0 {
                return Err(Error::invalid("decomposition", "blocks overlap"));
            }
            seen |= b;
        }
        if seen != ground.full() {
            return Err(Error::invalid("decomposition", "blocks do not cover the ground set"));
        }
        Ok(Decomposition { ground, blocks })
    }

    pub fn from_label_blocks<S: AsRef<str>>(ground: GroundSet, blocks: &[Vec<S>]) -> Result<Self> {
        let masks = blocks
            .iter()
            .map(|b| ground.mask_of(b.iter()))
            .collect::<Result<Vec<_>>>()?;
        Decomposition::new(ground, masks)
    }

    /// The decomposition `(f⁻¹(1), …, f⁻¹(n))`, where `colors[i]` is the
    /// color of the `i`-th element of `ground`.
    pub fn from_function(ground: GroundSet, n: usize, colors: &[usize]) -> Result<Self> {
        if colors.len() != ground.len() {
            return Err(Error::invalid("function", "not total on the ground set"));
        }
        let mut blocks = vec![0; n];
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 || c > n {
                return Err(Error::ColorOutOfRange { value: c, n });
            }
            blocks[c - 1] |= 1 << i;
        }
        Ok(Decomposition { ground, blocks })
    }

    /// Inverse of [`Decomposition::from_function`]: the 1-based block index
    /// of each ground element.
    pub fn to_function(&self) -> Vec<usize> {
        let mut colors = vec![0; self.ground.len()];
        for (b, &mask) in self.blocks.iter().enumerate() {
            for i in bits(mask) {
                colors[i] = b + 1;
            }
        }
        colors
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    /// Number of blocks, `l(S)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Number of ground elements, `|S|`.
    pub fn size(&self) -> usize {
        self.ground.len()
    }

    /// 1-based index of the block containing ground element `i`.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|&b| b >> i & 1 == 1).map(|p| p + 1)
    }

    /// Drops the empty blocks.
    pub fn canonicalize(&self) -> Composition {
        Composition(Decomposition {
            ground: self.ground.clone(),
            blocks: self.blocks.iter().copied().filter(|&b| b != 0).collect(),
        })
    }

    /// Blockwise intersection with `j`; the result lives on `j`.
    pub fn restrict(&self, j: Mask) -> Result<Decomposition> {
        self.ground.check_subset(j)?;
        Ok(Decomposition {
            ground: self.ground.subset(j),
            blocks: self.blocks.iter().map(|&b| compress(b & j, j)).collect(),
        })
    }

    pub fn to_label_blocks(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|&b| bits(b).map(|i| self.ground.label(i).to_string()).collect())
            .collect()
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|&b| self.ground.fmt_mask(b)).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A decomposition without empty blocks (an ordered set partition).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Decomposition);

impl Deref for Composition {
    type Target = Decomposition;

    fn deref(&self) -> &Decomposition {
        &self.0
    }
}

impl From<Composition> for Decomposition {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl Composition {
    pub fn new(ground: GroundSet, blocks: Vec<Mask>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::invalid("composition", "empty block"));
        }
        Decomposition::new(ground, blocks).map(Composition)
    }

    pub fn from_label_blocks<S: AsRef<str>>(ground: GroundSet, blocks: &[Vec<S>]) -> Result<Self> {
        let d = Decomposition::from_label_blocks(ground, blocks)?;
        if d.blocks.contains(&0) {
            return Err(Error::invalid("composition", "empty block"));
        }
        Ok(Composition(d))
    }

    /// The one-block composition of `ground` (empty if the ground set is).
    pub fn single_block(ground: GroundSet) -> Self {
        let blocks = if ground.is_empty() { vec![] } else { vec![ground.full()] };
        Composition(Decomposition { ground, blocks })
    }

    pub fn as_decomposition(&self) -> &Decomposition {
        &self.0
    }

    /// Whether `self` factors as `Q₁·…·Q_l` with each `Qᵢ` a composition of
    /// the `i`-th block of `coarser`.
    pub fn refines(&self, coarser: &Composition) -> Result<bool> {
        if self.ground != coarser.ground {
            return Err(Error::GroundMismatch);
        }
        let mut it = self.blocks.iter().copied();
        for &target in &coarser.blocks {
            let mut acc = 0;
            while acc != target {
                match it.next() {
                    Some(b) if b & !target == 0 => acc |= b,
                    _ => return Ok(false),
                }
            }
        }
        Ok(it.next().is_none())
    }

    /// The product `P·Q`: blocks of `self` followed by blocks of `other`.
    pub fn concat(&self, other: &Composition) -> Result<Composition> {
        let (ground, left, right) = self.ground.disjoint_union(&other.ground)?;
        let blocks = self
            .blocks
            .iter()
            .map(|&b| map_mask(b, &left))
            .chain(other.blocks.iter().map(|&b| map_mask(b, &right)))
            .collect();
        Ok(Composition(Decomposition { ground, blocks }))
    }

    /// All compositions `R` of the union whose restrictions to the two
    /// operand ground sets canonicalize back to `self` and `other`.
    pub fn shuffle(&self, other: &Composition) -> Result<Vec<Composition>> {
        let (ground, left, right) = self.ground.disjoint_union(&other.ground)?;
        let p: Vec<Mask> = self.blocks.iter().map(|&b| map_mask(b, &left)).collect();
        let q: Vec<Mask> = other.blocks.iter().map(|&b| map_mask(b, &right)).collect();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(p.len() + q.len());
        quasi_shuffle(&p, &q, &mut cur, &mut out);
        Ok(out
            .into_iter()
            .map(|blocks| Composition(Decomposition { ground: ground.clone(), blocks }))
            .collect())
    }

    /// Every composition refining `self`, in a fixed order.
    pub fn refinements(&self) -> Vec<Composition> {
        let per_block: Vec<Vec<Vec<Mask>>> = self.blocks.iter().map(|&b| compositions_of_mask(b)).collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        product_of_blocks(&per_block, 0, &mut cur, &mut |blocks| {
            out.push(Composition(Decomposition {
                ground: self.ground.clone(),
                blocks: blocks.to_vec(),
            }))
        });
        out
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn quasi_shuffle(p: &[Mask], q: &[Mask], cur: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
    match (p.split_first(), q.split_first()) {
        (None, None) => out.push(cur.clone()),
        (Some((&a, pr)), None) => {
            cur.push(a);
            quasi_shuffle(pr, q, cur, out);
            cur.pop();
        }
        (None, Some((&b, qr))) => {
            cur.push(b);
            quasi_shuffle(p, qr, cur, out);
            cur.pop();
        }
        (Some((&a, pr)), Some((&b, qr))) => {
            cur.push(a);
            quasi_shuffle(pr, q, cur, out);
            cur.pop();
            cur.push(b);
            quasi_shuffle(p, qr, cur, out);
            cur.pop();
            cur.push(a | b);
            quasi_shuffle(pr, qr, cur, out);
            cur.pop();
        }
    }
}

fn product_of_blocks(per_block: &[Vec<Vec<Mask>>], at: usize, cur: &mut Vec<Mask>, emit: &mut impl FnMut(&[Mask])) {
    if at == per_block.len() {
        emit(cur);
        return;
    }
    for comp in &per_block[at] {
        let len = cur.len();
        cur.extend_from_slice(comp);
        product_of_blocks(per_block, at + 1, cur, emit);
        cur.truncate(len);
    }
}

/// Calls `visit` on every composition of the elements of `mask` (as a list
/// of block masks). The empty mask has exactly one composition, `()`.
pub fn for_each_composition(mask: Mask, visit: &mut impl FnMut(&[Mask])) {
    fn rec(rest: Mask, cur: &mut Vec<Mask>, visit: &mut impl FnMut(&[Mask])) {
        if rest == 0 {
            visit(cur);
            return;
        }
        for s in submasks(rest).skip(1) {
            cur.push(s);
            rec(rest & !s, cur, visit);
            cur.pop();
        }
    }
    rec(mask, &mut Vec::new(), visit)
}

fn compositions_of_mask(mask: Mask) -> Vec<Vec<Mask>> {
    let mut out = Vec::new();
    for_each_composition(mask, &mut |c| out.push(c.to_vec()));
    out
}

/// Iterator over the `n^|ground|` decompositions of length `n`, in
/// lexicographic order of their coloring functions.
pub struct Decompositions {
    ground: GroundSet,
    n: usize,
    colors: Option<Vec<usize>>,
}

impl Iterator for Decompositions {
    type Item = Decomposition;

    fn next(&mut self) -> Option<Decomposition> {
        let colors = self.colors.as_mut()?;
        let d = Decomposition::from_function(self.ground.clone(), self.n, colors).expect("colors in range");
        let mut i = colors.len();
        loop {
            if i == 0 {
                self.colors = None;
                break;
            }
            i -= 1;
            if colors[i] < self.n {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
        }
        Some(d)
    }
}

pub fn enumerate_decompositions(ground: &GroundSet, n: usize) -> Decompositions {
    let colors = if n == 0 && !ground.is_empty() {
        None
    } else {
        Some(vec![1; ground.len()])
    };
    Decompositions {
        ground: ground.clone(),
        n,
        colors,
    }
}

/// All compositions of `ground`. For the empty ground set the single empty
/// composition is included only when `allow_empty` is set.
pub fn enumerate_compositions(ground: &GroundSet, allow_empty: bool) -> Vec<Composition> {
    if ground.is_empty() && !allow_empty {
        return Vec::new();
    }
    compositions_of_mask(ground.full())
        .into_iter()
        .map(|blocks| {
            Composition(Decomposition {
                ground: ground.clone(),
                blocks,
            })
        })
        .collect()
}

/// Checks that `relation` (pairs of ground indices) has no directed cycle.
pub fn check_acyclic(k: usize, relation: &[(usize, usize)]) -> Result<()> {
    let mut indeg = vec![0usize; k];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(a, b) in relation {
        if a >= k || b >= k {
            return Err(Error::invalid("relation", format!("vertex index ({a}, {b}) out of range")));
        }
        out[a].push(b);
        indeg[b] += 1;
    }
    let mut stack: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    if seen == k {
        Ok(())
    } else {
        Err(Error::CyclicConstraint)
    }
}

/// The refinements `Q` of `p` such that `Q(v) < Q(v')` (or `≤` when
/// `strict` is false) for every pair `(v, v')` of ground indices in
/// `relation`.
pub fn constrained_refinements(relation: &[(usize, usize)], p: &Composition, strict: bool) -> Result<Vec<Composition>> {
    check_acyclic(p.size(), relation)?;
    Ok(p
        .refinements()
        .into_iter()
        .filter(|q| satisfies(relation, q, strict))
        .collect())
}

pub(crate) fn satisfies(relation: &[(usize, usize)], q: &Decomposition, strict: bool) -> bool {
    let pos = q.to_function();
    relation.iter().all(|&(a, b)| {
        if strict {
            pos[a] < pos[b]
        } else {
            pos[a] <= pos[b]
        }
    })
}
