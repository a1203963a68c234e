//! Orientations and colorings of hypergraphs, the closed-form expression of
//! `χ` as a sum of `F` polynomials over acyclic orientations, and the
//! matching expression for `(-1)^|I| χ(-n)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::polyring::{f_polynomial, f_polynomial_from_one, FSignature, RationalPoly};
use crate::setcomp::{bits, check_acyclic, compress, expand, for_each_composition, Composition, Decomposition, Mask};

/// A head vertex (ground index) for each edge occurrence, in the order of
/// [`Hypergraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    heads: Vec<usize>,
}

impl Orientation {
    pub fn new(h: &Hypergraph, heads: Vec<usize>) -> Result<Self> {
        if heads.len() != h.edge_count() {
            return Err(Error::invalid("orientation", "one head per edge occurrence required"));
        }
        for (&e, &v) in h.edges().iter().zip(&heads) {
            if v >= 64 || e >> v & 1 == 0 {
                return Err(Error::invalid("orientation", format!("head {v} not in its edge")));
            }
        }
        Ok(Orientation { heads })
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    /// `f(H)`.
    pub fn image(&self) -> Mask {
        self.heads.iter().fold(0, |acc, &v| acc | 1 << v)
    }

    /// Pairs `(v, f(e))` for `v ∈ e ∖ f(e)`, as ground indices.
    pub fn constraint_pairs(&self, h: &Hypergraph) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = h
            .edges()
            .iter()
            .zip(&self.heads)
            .flat_map(|(&e, &head)| bits(e & !(1 << head)).map(move |v| (v, head)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }
}

/// A function from the ground set to `[n]`; `colors[i]` is in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    n: usize,
}

impl Coloring {
    pub fn new(h: &Hypergraph, n: usize, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != h.ground().len() {
            return Err(Error::invalid("coloring", "not total on the ground set"));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > n) {
            return Err(Error::ColorOutOfRange { value: c, n });
        }
        Ok(Coloring { colors, n })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.n
    }

    pub fn as_decomposition(&self, h: &Hypergraph) -> Decomposition {
        Decomposition::from_function(h.ground().clone(), self.n, &self.colors).expect("valid coloring")
    }
}

/// Visits every function `[k] → [n]` as a color vector, in lexicographic
/// order.
pub(crate) fn for_each_coloring(k: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        if k == 0 {
            visit(&[]);
        }
        return;
    }
    let mut colors = vec![1; k];
    loop {
        visit(&colors);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if colors[i] < n {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
        }
    }
}

/// Whether edge occurrences `e₁, …, e_k` (distinct) exist with
/// `f(eᵢ) ∈ e_{i+1} ∖ f(e_{i+1})` cyclically.
pub fn has_directed_cycle(h: &Hypergraph, f: &Orientation) -> bool {
    let edges = h.edges();
    let heads = f.heads();
    let m = edges.len();
    // a → b iff f(a) ∈ b ∖ f(b)
    let succ: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            (0..m)
                .filter(|&b| edges[b] >> heads[a] & 1 == 1 && heads[b] != heads[a])
                .collect()
        })
        .collect();
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark = vec![Mark::New; m];
    fn visit(a: usize, succ: &[Vec<usize>], mark: &mut [Mark]) -> bool {
        mark[a] = Mark::Open;
        for &b in &succ[a] {
            let found = match mark[b] {
                Mark::Open => true,
                Mark::New => visit(b, succ, mark),
                Mark::Done => false,
            };
            if found {
                return true;
            }
        }
        mark[a] = Mark::Done;
        false
    }
    (0..m).any(|a| mark[a] == Mark::New && visit(a, &succ, &mut mark))
}

/// All `Π |e|` orientations, each edge's head ranging over its vertices in
/// increasing order, last edge fastest.
pub fn all_orientations(h: &Hypergraph) -> Vec<Orientation> {
    let choices: Vec<Vec<usize>> = h.edges().iter().map(|&e| bits(e).collect()).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(choices.len());
    fn rec(choices: &[Vec<usize>], cur: &mut Vec<usize>, out: &mut Vec<Orientation>) {
        match choices.split_first() {
            None => out.push(Orientation { heads: cur.clone() }),
            Some((first, rest)) => {
                for &v in first {
                    cur.push(v);
                    rec(rest, cur, out);
                    cur.pop();
                }
            }
        }
    }
    rec(&choices, &mut cur, &mut out);
    out
}

/// The set `𝒜_H` of acyclic orientations.
pub fn acyclic_orientations(h: &Hypergraph) -> Vec<Orientation> {
    all_orientations(h)
        .into_iter()
        .filter(|f| !has_directed_cycle(h, f))
        .collect()
}

fn edge_max(e: Mask, colors: &[usize]) -> usize {
    bits(e).map(|v| colors[v]).max().unwrap_or(0)
}

fn compatible_colors(h: &Hypergraph, heads: &[usize], colors: &[usize], strict: bool) -> bool {
    h.edges().iter().zip(heads).all(|(&e, &head)| {
        let c = colors[head];
        bits(e).all(|v| if v == head { true } else if strict { colors[v] < c } else { colors[v] <= c })
    })
}

/// Every head has its edge's maximal color.
pub fn is_compatible(h: &Hypergraph, f: &Orientation, c: &Coloring) -> bool {
    compatible_colors(h, f.heads(), c.colors(), false)
}

/// Every head is the unique vertex of maximal color in its edge.
pub fn is_strictly_compatible(h: &Hypergraph, f: &Orientation, c: &Coloring) -> bool {
    compatible_colors(h, f.heads(), c.colors(), true)
}

fn has_unique_maxima(h: &Hypergraph, colors: &[usize]) -> bool {
    h.edges().iter().all(|&e| {
        let m = edge_max(e, colors);
        bits(e).filter(|&v| colors[v] == m).count() == 1
    })
}

/// The orientation sending each edge to its unique maximal vertex, if every
/// edge has one.
pub fn unique_max_orientation(h: &Hypergraph, c: &Coloring) -> Option<Orientation> {
    if !has_unique_maxima(h, c.colors()) {
        return None;
    }
    let heads = h
        .edges()
        .iter()
        .map(|&e| {
            let m = edge_max(e, c.colors());
            bits(e).find(|&v| c.colors()[v] == m).expect("nonempty edge")
        })
        .collect();
    Some(Orientation { heads })
}

/// Colorings with `[n]` in which every edge has exactly one maximal vertex.
pub fn count_unique_max_colorings(h: &Hypergraph, n: usize) -> u128 {
    let mut count = 0;
    for_each_coloring(h.ground().len(), n, |colors| {
        if has_unique_maxima(h, colors) {
            count += 1;
        }
    });
    count
}

/// Pairs (acyclic orientation, coloring with `[n]`) that are compatible,
/// or strictly compatible when `strict` is set.
pub fn count_pairs(h: &Hypergraph, n: usize, strict: bool) -> u128 {
    let acyclic = acyclic_orientations(h);
    let mut count = 0;
    for_each_coloring(h.ground().len(), n, |colors| {
        count += acyclic
            .iter()
            .filter(|f| compatible_colors(h, f.heads(), colors, strict))
            .count() as u128;
    });
    count
}

/// Compositions `P` of `f(H)` with `P(v) < P(f(e))` (or `≤` when `strict` is
/// false) whenever `v ∈ e ∖ f(e)` and `v ∈ f(H)`. Blocks are masks over
/// `f(H)` as its own ground set.
pub fn constrained_compositions(h: &Hypergraph, f: &Orientation, strict: bool) -> Result<Vec<Composition>> {
    if has_directed_cycle(h, f) {
        return Err(Error::CyclicOrientation);
    }
    let image = f.image();
    let ground = h.ground().subset(image);
    let pairs = image_pairs(h, f, image);
    check_acyclic(ground.len(), &pairs)?;
    let mut out = Vec::new();
    for_each_composition(ground.full(), &mut |blocks| {
        if satisfies_pairs(&pairs, blocks, strict) {
            out.push(Composition::new(ground.clone(), blocks.to_vec()).expect("composition"));
        }
    });
    Ok(out)
}

/// `P_{H,f}`.
pub fn strict_constrained_compositions(h: &Hypergraph, f: &Orientation) -> Result<Vec<Composition>> {
    constrained_compositions(h, f, true)
}

/// `P'_{H,f}`.
pub fn weak_constrained_compositions(h: &Hypergraph, f: &Orientation) -> Result<Vec<Composition>> {
    constrained_compositions(h, f, false)
}

/// Constraint pairs restricted to `f(H)`, re-indexed over `f(H)`.
fn image_pairs(h: &Hypergraph, f: &Orientation, image: Mask) -> Vec<(usize, usize)> {
    let index = |v: usize| (compress(1 << v, image)).trailing_zeros() as usize;
    f.constraint_pairs(h)
        .into_iter()
        .filter(|&(v, _)| image >> v & 1 == 1)
        .map(|(v, w)| (index(v), index(w)))
        .collect()
}

fn satisfies_pairs(pairs: &[(usize, usize)], blocks: &[Mask], strict: bool) -> bool {
    let pos = |v: usize| blocks.iter().position(|&b| b >> v & 1 == 1).expect("covered");
    pairs.iter().all(|&(a, b)| {
        let (pa, pb) = (pos(a), pos(b));
        if strict {
            pa < pb
        } else {
            pa <= pb
        }
    })
}

/// The blocks `P̃ᵢ` (ground masks): vertices outside `f(H)` lying in an
/// edge whose head is in `Pᵢ`, not already claimed by an earlier block.
/// `p` is a composition of `f(H)` as returned by
/// [`constrained_compositions`].
pub fn tilde_blocks(h: &Hypergraph, f: &Orientation, p: &Composition) -> Vec<Mask> {
    let image = f.image();
    let mut claimed = 0;
    p.blocks()
        .iter()
        .map(|&b| {
            let heads = expand(b, image);
            let covered = h
                .edges()
                .iter()
                .zip(f.heads())
                .filter(|(_, &head)| heads >> head & 1 == 1)
                .fold(0, |acc, (&e, _)| acc | e);
            let block = covered & !image & !claimed;
            claimed |= block;
            block
        })
        .collect()
}

fn signature_of(h: &Hypergraph, f: &Orientation, p: &Composition) -> Option<FSignature> {
    let parts = tilde_blocks(h, f, p).iter().map(|b| b.count_ones()).collect();
    FSignature::new(parts).ok()
}

struct FCache {
    strict: HashMap<FSignature, RationalPoly>,
    shifted: HashMap<FSignature, RationalPoly>,
}

impl FCache {
    fn new() -> Self {
        FCache {
            strict: HashMap::new(),
            shifted: HashMap::new(),
        }
    }

    fn f(&mut self, sig: &FSignature) -> &RationalPoly {
        self.strict.entry(sig.clone()).or_insert_with(|| f_polynomial(sig))
    }

    /// `Σ_{1 ≤ k₁ < … < k_t ≤ n} Π kᵢ^{pᵢ}` as a polynomial in `n`.
    fn weak(&mut self, sig: &FSignature) -> &RationalPoly {
        self.shifted
            .entry(sig.clone())
            .or_insert_with(|| f_polynomial_from_one(sig).shift(1))
    }
}

/// `χ(H)` as `n^{|J_H|} Σ_{f ∈ 𝒜_H} Σ_{P ∈ P_{H,f}} F_{|P̃₁|,…,|P̃_{l(P)}|}(n)`.
///
/// The empty composition (no edges) contributes the constant 1.
pub fn chi_formula(h: &Hypergraph) -> RationalPoly {
    closed_form(h, true)
}

/// `(-1)^|I| χ(H)(-n)` as `n^{|J_H|} Σ_{f ∈ 𝒜_H} Σ_{P ∈ P'_{H,f}} G_p(n)`,
/// where `G_p(n)` sums `Π kᵢ^{pᵢ}` over `1 ≤ k₁ < … < k_t ≤ n`.
///
/// `G_p(n) = F_p(n+1)` whenever `p₁ > 0`; the two differ on signatures with
/// a leading zero part, which arise from heads whose edges are singletons.
pub fn reciprocity_formula(h: &Hypergraph) -> RationalPoly {
    closed_form(h, false)
}

fn closed_form(h: &Hypergraph, strict: bool) -> RationalPoly {
    let mut cache = FCache::new();
    let mut sum = RationalPoly::zero();
    for f in acyclic_orientations(h) {
        for p in constrained_compositions(h, &f, strict).expect("acyclic") {
            match signature_of(h, &f, &p) {
                None => sum = &sum + &RationalPoly::one(),
                Some(sig) => {
                    let term = if strict { cache.f(&sig) } else { cache.weak(&sig) };
                    sum = &sum + term;
                }
            }
        }
    }
    let isolated = h.isolated_vertices().count_ones() as usize;
    &RationalPoly::power(isolated) * &sum
}
