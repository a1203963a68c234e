//! Exhaustive and seeded random instance families.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hopf::Species;
use crate::hypergraph::Hypergraph;
use crate::polyring::FSignature;
use crate::setcomp::{bits, check_acyclic, full_mask, map_mask, submasks, GroundSet, Mask, Relabeling};
use crate::submonoids::{Graph, SetOfPaths, SimpleHypergraph, SimplicialComplex};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn multisets(items: &[Mask], size: usize, start: usize, cur: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for i in start..items.len() {
        cur.push(items[i]);
        multisets(items, size, i, cur, out);
        cur.pop();
    }
}

/// Every hypergraph on the numbered ground sets of size `0..=max_vertices`
/// with at most `max_edges` edges (repetition allowed).
pub fn all_hypergraphs(max_vertices: usize, max_edges: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for k in 0..=max_vertices {
        let ground = GroundSet::numbered(k);
        let subsets: Vec<Mask> = (1..=full_mask(k)).collect();
        for m in 0..=max_edges {
            let mut edge_sets = Vec::new();
            multisets(&subsets, m, 0, &mut Vec::new(), &mut edge_sets);
            if k == 0 && m > 0 {
                continue;
            }
            out.extend(
                edge_sets
                    .into_iter()
                    .map(|edges| Hypergraph::new(ground.clone(), edges).expect("edges inside ground")),
            );
        }
    }
    out
}

/// A hypergraph on `1..=k` vertices (`k ≤ max_vertices`) with up to
/// `max_edges` edges, drawn uniformly among nonempty subsets.
pub fn random_hypergraph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Hypergraph {
    let k = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let full = full_mask(k);
    let edges = (0..m).map(|_| rng.gen_range(1..=full)).collect();
    Hypergraph::new(GroundSet::numbered(k), edges).expect("edges inside ground")
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn canonical_edges(edges: &[Mask], perms: &[Vec<usize>]) -> Vec<Mask> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<Mask> = edges.iter().map(|&m| map_mask(m, p)).collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

/// One representative per isomorphism class of simple hypergraphs on the
/// numbered ground sets of size `0..=max_vertices`.
pub fn simple_hypergraph_classes(max_vertices: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for k in 0..=max_vertices {
        let ground = GroundSet::numbered(k);
        let perms = permutations(k);
        let subsets: Vec<Mask> = (1..=full_mask(k)).collect();
        let seen: BTreeSet<Vec<Mask>> = (0..1u64 << subsets.len())
            .map(|choice| {
                let edges: Vec<Mask> = bits(choice).map(|i| subsets[i]).collect();
                canonical_edges(&edges, &perms)
            })
            .collect();
        out.extend(
            seen.into_iter()
                .map(|edges| Hypergraph::new(ground.clone(), edges).expect("edges inside ground")),
        );
    }
    out
}

/// Every simple graph on `k` numbered vertices.
pub fn all_graphs(k: usize) -> Vec<Graph> {
    let ground = GroundSet::numbered(k);
    let pairs: Vec<Mask> = (0..k).flat_map(|a| (a + 1..k).map(move |b| 1 << a | 1 << b)).collect();
    (0..1u64 << pairs.len())
        .map(|choice| {
            let edges = bits(choice).map(|i| pairs[i]).collect();
            Graph::new(ground.clone(), edges).expect("valid edges")
        })
        .collect()
}

/// Every simplicial complex on `k` numbered vertices (vertices need not be
/// faces).
pub fn all_complexes(k: usize) -> Vec<SimplicialComplex> {
    let ground = GroundSet::numbered(k);
    let subsets: Vec<Mask> = (1..=full_mask(k)).collect();
    let mut out = Vec::new();
    for choice in 0..1u64 << subsets.len() {
        let faces: BTreeSet<Mask> = bits(choice).map(|i| subsets[i]).collect();
        let closed = faces
            .iter()
            .all(|&f| bits(f).all(|i| f == 1 << i || faces.contains(&(f & !(1 << i)))));
        if closed {
            out.push(SimplicialComplex::new(ground.clone(), faces.into_iter().collect()).expect("closed"));
        }
    }
    out
}

/// Every single path on `k` vertices, one per unordered vertex sequence.
pub fn all_single_paths(k: usize) -> Vec<SetOfPaths> {
    let labels: Vec<String> = (0..k).map(|i| char::from(b'a' + i as u8).to_string()).collect();
    let ground = GroundSet::new(&labels).expect("distinct labels");
    let mut out: Vec<SetOfPaths> = permutations(k)
        .into_iter()
        .filter(|p| k == 0 || p.first() <= p.last())
        .map(|p| {
            let path: Vec<&str> = p.iter().map(|&i| labels[i].as_str()).collect();
            let paths = if k == 0 { Vec::new() } else { vec![path] };
            SetOfPaths::new(ground.clone(), &paths).expect("valid path")
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every acyclic relation on `k` vertices (irreflexive, at most one
/// direction per pair).
pub fn all_dags(k: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    (0..1u64 << pairs.len())
        .map(|choice| bits(choice).map(|i| pairs[i]).collect::<Vec<_>>())
        .filter(|rel| check_acyclic(k, rel).is_ok())
        .collect()
}

/// Signatures with `Σ pᵢ + t ≤ max_degree`; parts are positive unless
/// `allow_zero`.
pub fn signatures(max_degree: usize, allow_zero: bool) -> Vec<FSignature> {
    fn rec(budget: usize, allow_zero: bool, cur: &mut Vec<u32>, out: &mut Vec<FSignature>) {
        if !cur.is_empty() {
            out.push(FSignature::new(cur.clone()).expect("nonempty"));
        }
        let lowest = if allow_zero { 0 } else { 1 };
        for p in lowest..budget {
            cur.push(p as u32);
            rec(budget - p - 1, allow_zero, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_degree, allow_zero, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A relabeling of `ground` onto labels drawn from `pool` without
/// repetition. `pool` must hold at least `ground.len()` labels.
pub fn random_relabeling<R: Rng>(rng: &mut R, ground: &GroundSet, pool: &[String]) -> Relabeling {
    let image: Vec<&String> = pool.choose_multiple(rng, ground.len()).collect();
    Relabeling::new(ground.labels().iter().map(|l| l.as_ref()).zip(image)).expect("injective")
}

/// Labels `a`, `b`, … used for random ground sets.
pub fn label_pool(size: usize) -> Vec<String> {
    (0..size).map(|i| char::from(b'a' + i as u8).to_string()).collect()
}

/// Pairwise disjoint ground sets of the given sizes, drawn from `pool`.
pub fn disjoint_grounds<R: Rng>(rng: &mut R, sizes: &[usize], pool: &[String]) -> Vec<GroundSet> {
    let total: usize = sizes.iter().sum();
    let mut chosen: Vec<&String> = pool.choose_multiple(rng, total).collect();
    chosen.shuffle(rng);
    let mut out = Vec::new();
    let mut start = 0;
    for &s in sizes {
        out.push(GroundSet::new(&chosen[start..start + s]).expect("distinct labels"));
        start += s;
    }
    out
}

/// Random elements of a species on a prescribed ground set.
pub trait Sample: Species {
    fn sample<R: Rng>(rng: &mut R, ground: &GroundSet) -> Self;
}

impl Sample for Hypergraph {
    fn sample<R: Rng>(rng: &mut R, ground: &GroundSet) -> Self {
        let full = ground.full();
        if full == 0 {
            return Hypergraph::edgeless(ground.clone());
        }
        let m = rng.gen_range(0..=4);
        let edges = (0..m).map(|_| random_submask(rng, full)).filter(|&e| e != 0).collect();
        Hypergraph::new(ground.clone(), edges).expect("edges inside ground")
    }
}

impl Sample for SimpleHypergraph {
    fn sample<R: Rng>(rng: &mut R, ground: &GroundSet) -> Self {
        let h = Hypergraph::sample(rng, ground);
        let mut edges = h.edges().to_vec();
        edges.dedup();
        SimpleHypergraph::new(ground.clone(), edges).expect("distinct edges")
    }
}

impl Sample for Graph {
    fn sample<R: Rng>(rng: &mut R, ground: &GroundSet) -> Self {
        let k = ground.len();
        let edges = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| 1 << a | 1 << b))
            .filter(|_| rng.gen_bool(0.5))
            .collect::<Vec<Mask>>();
        Graph::new(ground.clone(), edges).expect("valid edges")
    }
}

impl Sample for SimplicialComplex {
    fn sample<R: Rng>(rng: &mut R, ground: &GroundSet) -> Self {
        let full = ground.full();
        let facets: Vec<Mask> = (0..rng.gen_range(0..=3)).map(|_| random_submask(rng, full)).collect();
        let faces: Vec<Mask> = facets.iter().flat_map(|&f| submasks(f)).collect();
        SimplicialComplex::new(ground.clone(), faces).expect("downward closed")
    }
}

impl Sample for SetOfPaths {
    fn sample<R: Rng>(rng: &mut R, ground: &GroundSet) -> Self {
        let mut order: Vec<&str> = ground.labels().iter().map(|l| l.as_ref()).collect();
        order.shuffle(rng);
        let mut paths: Vec<Vec<&str>> = Vec::new();
        for l in order {
            match paths.last_mut() {
                Some(p) if rng.gen_bool(0.6) => p.push(l),
                _ => paths.push(vec![l]),
            }
        }
        SetOfPaths::new(ground.clone(), &paths).expect("partition of ground")
    }
}

pub fn random_submask<R: Rng>(rng: &mut R, within: Mask) -> Mask {
    bits(within).filter(|_| rng.gen_bool(0.5)).fold(0, |m, i| m | 1 << i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        // 15 nonempty subsets of a 4-set: 1 + 15 + 120 + 680 multisets of size ≤ 3
        let on_four = all_hypergraphs(4, 3).iter().filter(|h| h.ground().len() == 4).count();
        assert_eq!(on_four, 1 + 15 + 120 + 680);
        assert_eq!(all_graphs(4).len(), 64);
        assert_eq!(all_dags(3).len(), 25);
        assert_eq!(all_dags(4).len(), 543);
        assert_eq!(all_single_paths(4).len(), 12);
        assert_eq!(all_single_paths(1).len(), 1);
    }

    #[test]
    fn complexes_on_small_grounds() {
        // nonempty downsets of the boolean lattice: Dedekind numbers minus one
        let counts: Vec<usize> = (0..4).map(|k| all_complexes(k).len()).collect();
        assert_eq!(counts, [1, 2, 5, 19]);
    }

    #[test]
    fn simple_classes_on_three_vertices() {
        let classes = simple_hypergraph_classes(3);
        let on_three = classes.iter().filter(|h| h.ground().len() == 3).count();
        let brute: BTreeSet<Vec<Mask>> = (0..1u64 << 7)
            .map(|c| canonical_edges(&bits(c).map(|i| i as Mask + 1).collect::<Vec<_>>(), &permutations(3)))
            .collect();
        assert_eq!(on_three, brute.len());
        assert!(classes.iter().all(|h| h.is_simple()));
    }

    #[test]
    fn signature_enumeration() {
        let pos: Vec<String> = signatures(3, false).iter().map(|s| s.to_string()).collect();
        assert_eq!(pos, ["(1)", "(2)"]);
        assert_eq!(signatures(4, false).len(), 4);
        assert!(signatures(6, true).iter().all(|s| s.degree() <= 6));
        assert_eq!(signatures(2, true).len(), 3);
    }

    #[test]
    fn seeded_draws_are_reproducible() {
        let draw = |seed| {
            let mut r = seeded(seed);
            (0..5).map(|_| random_hypergraph(&mut r, 5, 4)).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
        let mut r = seeded(1);
        let pool = label_pool(10);
        let gs = disjoint_grounds(&mut r, &[3, 4], &pool);
        assert!(gs[0].is_disjoint(&gs[1]));
        let sigma = random_relabeling(&mut r, &gs[0], &pool);
        assert_eq!(sigma.apply(&gs[0]).unwrap().0.len(), 3);
    }
}
