//! Identity suites shared by the `check` command and the test harness.
//!
//! Each suite returns the number of cases it checked, or a description of
//! the first counterexample.

use std::fmt;

use num::{BigInt, One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::generate::{
    all_complexes, all_dags, all_graphs, all_hypergraphs, all_single_paths, disjoint_grounds, label_pool,
    random_hypergraph, random_relabeling, random_submask, seeded, signatures, simple_hypergraph_classes, Sample,
};
use crate::hopf::{antipode, chi_direct, chi_of_combination, chi_polynomial, AntipodeSign, Species};
use crate::hypergraph::Hypergraph;
use crate::orientations::{
    acyclic_orientations, chi_formula, count_pairs, count_unique_max_colorings, reciprocity_formula,
};
use crate::polyring::{f_polynomial, f_polynomial_from_one, faulhaber, rat, FSignature, Rational, RationalPoly};
use crate::setcomp::{compress, enumerate_compositions, satisfies, Composition, GroundSet, Mask, Relabeling};
use crate::submonoids::{
    catalan, chi_graph, chi_paths, chi_sc, chromatic_brute_force, chromatic_deletion_contraction, count_tree_pairs,
    Graph, SetOfPaths, SimpleHypergraph, SimplicialComplex,
};

pub type Outcome = std::result::Result<usize, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn int(v: u128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Both signed sums over refinements, for every composition of a ground set
/// of size at most `max_size` and every acyclic relation on at most
/// `max_dag_vertices` vertices. The constrained sets are also compared with
/// a filter over all compositions.
pub fn compsum(max_size: usize, max_dag_vertices: usize) -> Outcome {
    let mut cases = 0;
    for k in 0..=max_size {
        let ground = GroundSet::numbered(k);
        for p in enumerate_compositions(&ground, false) {
            let total: i64 = p.refinements().iter().map(|q| sign(q.len())).sum();
            ensure!(total == sign(k), "Σ (-1)^l(Q) over refinements of {p} is {total}");
            cases += 1;
        }
    }
    for k in 0..=max_dag_vertices {
        let ground = GroundSet::numbered(k);
        let all = enumerate_compositions(&ground, false);
        let dags = all_dags(k);
        for p in &all {
            let refining: Vec<&Composition> = all.iter().filter(|q| q.refines(p).expect("same ground")).collect();
            let pos = p.to_function();
            for rel in &dags {
                let c = crate::setcomp::constrained_refinements(rel, p, true).map_err(|e| e.to_string())?;
                let brute: Vec<&Composition> = refining.iter().copied().filter(|q| satisfies(rel, q, true)).collect();
                ensure!(
                    c.len() == brute.len() && c.iter().all(|q| brute.contains(&q)),
                    "C(G,P) mismatch for P = {p}, G = {rel:?}"
                );
                let total: i64 = c.iter().map(|q| sign(q.len())).sum();
                let expected = if rel.iter().any(|&(a, b)| pos[b] < pos[a]) { 0 } else { sign(k) };
                ensure!(total == expected, "P = {p}, G = {rel:?}: signed sum {total}, expected {expected}");
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// The defining nested sum, evaluated directly.
pub fn brute_f(p: &[u32], n: u64) -> BigInt {
    fn rec(p: &[u32], from: u64, n: u64) -> BigInt {
        match p.split_first() {
            None => BigInt::one(),
            Some((&e, rest)) => (from..n).map(|k| BigInt::from(k).pow(e) * rec(rest, k + 1, n)).sum(),
        }
    }
    rec(p, 0, n)
}

/// `F_p(-n) = (-1)^{Σp+t} Σ_{q coarsening p} F_q(n+1)` for positive
/// signatures with `Σp + t ≤ max_degree` and `0 ≤ n ≤ max_n`. The right side
/// uses the defining sum.
pub fn f_reflection(max_degree: usize, max_n: u64) -> Outcome {
    let mut cases = 0;
    for p in signatures(max_degree, false) {
        let f = f_polynomial(&p);
        for n in 0..=max_n {
            let lhs = f.eval_int(-(n as i64));
            let sum: BigInt = p.coarsenings().iter().map(|q| brute_f(q.parts(), n + 1)).sum();
            let rhs = Rational::from_integer(sum * sign(p.degree()));
            ensure!(lhs == rhs, "F_{p}(-{n}) = {lhs}, coarsening side {rhs}");
            cases += 1;
        }
    }
    Ok(cases)
}

/// The same reflection with zero parts allowed: coarsenings are counted
/// with multiplicity and the right side sums from `k₁ = 1`.
pub fn f_reflection_general(max_degree: usize, max_n: u64) -> Outcome {
    let mut cases = 0;
    for p in signatures(max_degree, true) {
        let f = f_polynomial(&p);
        for n in 0..=max_n {
            let lhs = f.eval_int(-(n as i64));
            let sum: Rational = p
                .coarsenings_with_multiplicity()
                .iter()
                .map(|q| f_polynomial_from_one(q).eval_int(n as i64 + 1))
                .sum();
            let rhs = sum * rat(sign(p.degree()));
            ensure!(lhs == rhs, "F_{p}(-{n}) = {lhs}, coarsening side {rhs}");
            cases += 1;
        }
    }
    Ok(cases)
}

/// Degree law for positive signatures with `Σp + t ≤ max_degree`, and
/// `F_(p)` against the Bernoulli expansion and the defining sum for
/// `1 ≤ p ≤ max_power`.
pub fn faulhaber_suite(max_degree: usize, max_power: u32) -> Outcome {
    let mut cases = 0;
    for p in signatures(max_degree, false) {
        let f = f_polynomial(&p);
        ensure!(f.degree() == Some(p.degree()), "deg F_{p} = {:?}, expected {}", f.degree(), p.degree());
        for n in 0..=6 {
            ensure!(f.eval_int(n as i64) == Rational::from_integer(brute_f(p.parts(), n)), "F_{p}({n})");
        }
        cases += 1;
    }
    for e in 1..=max_power {
        let sig = FSignature::new(vec![e]).expect("nonempty");
        let f = f_polynomial(&sig);
        let b = faulhaber(e as usize);
        ensure!(f == b, "F_({e}) = {f}, Bernoulli expansion {b}");
        ensure!(f.leading_coeff() == Rational::new(BigInt::one(), BigInt::from(e + 1)), "leading coefficient of F_({e})");
        cases += 1;
    }
    Ok(cases)
}

/// Exhaustive hypergraphs on at most 4 vertices with at most 3 edges, then
/// 50 random multiedge hypergraphs on at most 5 vertices.
pub fn coloring_family(seed: u64) -> Vec<Hypergraph> {
    let mut out = all_hypergraphs(4, 3);
    let mut rng = seeded(seed);
    out.extend((0..50).map(|_| random_hypergraph(&mut rng, 5, 4)));
    out
}

/// `chi_direct = count_unique_max_colorings = count_pairs(strict) = chi_formula`
/// at every `0 ≤ n ≤ max_n`.
pub fn colorings(family: &[Hypergraph], max_n: usize) -> Outcome {
    let mut cases = 0;
    for h in family {
        let formula = chi_formula(h);
        for n in 0..=max_n {
            let direct = chi_direct(h, n);
            let unique = count_unique_max_colorings(h, n);
            let pairs = count_pairs(h, n, true);
            let closed = formula.eval_int(n as i64);
            ensure!(
                direct == unique && unique == pairs && int(pairs) == closed,
                "{h}, n = {n}: direct {direct}, unique-max {unique}, strict pairs {pairs}, formula {closed}"
            );
            cases += 1;
        }
    }
    Ok(cases)
}

/// `(-1)^{|I|} χ(-n) = count_pairs(weak)` for `1 ≤ n ≤ max_n`, the weak
/// closed form agrees, and at `n = 1` both count acyclic orientations.
pub fn reciprocity(family: &[Hypergraph], max_n: usize) -> Outcome {
    let mut cases = 0;
    for h in family {
        let chi = chi_polynomial(h);
        let weak_formula = reciprocity_formula(h);
        let k = h.ground().len();
        for n in 1..=max_n {
            let lhs = chi.eval_int(-(n as i64)) * rat(sign(k));
            let pairs = count_pairs(h, n, false);
            let closed = weak_formula.eval_int(n as i64);
            ensure!(
                lhs == int(pairs) && lhs == closed,
                "{h}, n = {n}: (-1)^|I| χ(-n) = {lhs}, weak pairs {pairs}, formula {closed}"
            );
            if n == 1 {
                let acyclic = acyclic_orientations(h).len();
                ensure!(int(acyclic as u128) == lhs, "{h}: {acyclic} acyclic orientations, (-1)^|I| χ(-1) = {lhs}");
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Exhaustive multiedge hypergraphs on at most 4 vertices with at most 3
/// edges together with one simple hypergraph per isomorphism class on at
/// most 4 vertices.
pub fn antipode_family() -> Vec<Hypergraph> {
    let mut out = all_hypergraphs(4, 3);
    out.extend(simple_hypergraph_classes(4).into_iter().filter(|h| h.edge_count() > 3));
    out
}

/// `χ(x)(-n) = χ(S(x))(n)` for `0 ≤ n ≤ max_n`.
pub fn antipode_reciprocity(family: &[Hypergraph], max_n: usize, sign: AntipodeSign) -> Outcome {
    let mut cases = 0;
    for h in family {
        let chi = chi_polynomial(h);
        let s = antipode(h, sign);
        for n in 0..=max_n as i64 {
            let lhs = chi.eval_int(-n);
            let rhs = Rational::from_integer(chi_of_combination(&s, n));
            ensure!(lhs == rhs, "{h}, n = {n}: χ(-n) = {lhs}, χ(S(x))(n) = {rhs} with S(x) = {s}");
            cases += 1;
        }
    }
    Ok(cases)
}

fn restrict_relabeling(sigma: &Relabeling, ground: &GroundSet) -> Relabeling {
    Relabeling::new(
        ground
            .labels()
            .iter()
            .map(|l| (l.as_ref(), sigma.get(l).expect("in domain").as_ref())),
    )
    .expect("injective")
}

/// `mask` on `big`, read on the subset `small` of its labels.
fn trace(big: &GroundSet, mask: Mask, small: &GroundSet) -> Mask {
    small
        .mask_of(big.labels_of(mask).iter().filter(|l| small.index_of(l).is_some()))
        .expect("labels of small")
}

fn image_mask(sigma: &Relabeling, from: &GroundSet, mask: Mask, to: &GroundSet) -> Mask {
    to.mask_of(from.labels_of(mask).iter().map(|l| sigma.get(l).expect("in domain")))
        .expect("image labels")
}

type Check = std::result::Result<(), String>;

fn fail<T: Species>(axiom: &str, what: &[&T]) -> String {
    let parts: Vec<String> = what.iter().map(|x| format!("{x} over {}", x.ground())).collect();
    format!("{axiom} fails at {}", parts.join("; "))
}

fn naturality<T: Sample, R: Rng>(rng: &mut R, pool: &[String]) -> Check {
    let sizes = [rng.gen_range(0..=4), rng.gen_range(0..=4)];
    let g = disjoint_grounds(rng, &sizes, pool);
    let (x, y) = (T::sample(rng, &g[0]), T::sample(rng, &g[1]));
    let xy = x.product(&y).map_err(|e| e.to_string())?;
    let sigma = random_relabeling(rng, xy.ground(), pool);
    let moved = xy.relabel(&sigma).map_err(|e| e.to_string())?;
    let (sx, sy) = (restrict_relabeling(&sigma, &g[0]), restrict_relabeling(&sigma, &g[1]));
    let separately = x
        .relabel(&sx)
        .and_then(|a| y.relabel(&sy).and_then(|b| a.product(&b)))
        .map_err(|e| e.to_string())?;
    if moved != separately {
        return Err(fail("naturality of the product", &[&x, &y]));
    }
    let s = random_submask(rng, xy.ground().full());
    let (l, r) = xy.coproduct(s).map_err(|e| e.to_string())?;
    let (ml, mr) = moved
        .coproduct(image_mask(&sigma, xy.ground(), s, moved.ground()))
        .map_err(|e| e.to_string())?;
    let l2 = l.relabel(&restrict_relabeling(&sigma, l.ground())).map_err(|e| e.to_string())?;
    let r2 = r.relabel(&restrict_relabeling(&sigma, r.ground())).map_err(|e| e.to_string())?;
    if (ml, mr) != (l2, r2) {
        return Err(fail("naturality of the coproduct", &[&xy]));
    }
    Ok(())
}

fn unitality<T: Sample, R: Rng>(rng: &mut R, pool: &[String]) -> Check {
    let size = rng.gen_range(0..=5);
    let g = disjoint_grounds(rng, &[size], pool);
    let x = T::sample(rng, &g[0]);
    let one = T::unit();
    let ok = x.product(&one).as_ref() == Ok(&x)
        && one.product(&x).as_ref() == Ok(&x)
        && x.coproduct(x.ground().full()) == Ok((x.clone(), one.clone()))
        && x.coproduct(0) == Ok((one, x.clone()));
    if ok {
        Ok(())
    } else {
        Err(fail("unitality", &[&x]))
    }
}

fn associativity<T: Sample, R: Rng>(rng: &mut R, pool: &[String]) -> Check {
    let sizes = [rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen_range(0..=3)];
    let g = disjoint_grounds(rng, &sizes, pool);
    let (x, y, z) = (T::sample(rng, &g[0]), T::sample(rng, &g[1]), T::sample(rng, &g[2]));
    let left = x.product(&y).and_then(|xy| xy.product(&z));
    let right = y.product(&z).and_then(|yz| x.product(&yz));
    match (left, right) {
        (Ok(a), Ok(b)) if a == b => Ok(()),
        _ => Err(fail("associativity", &[&x, &y, &z])),
    }
}

fn coassociativity<T: Sample, R: Rng>(rng: &mut R, pool: &[String]) -> Check {
    let size = rng.gen_range(0..=6);
    let g = disjoint_grounds(rng, &[size], pool);
    let x = T::sample(rng, &g[0]);
    let full = x.ground().full();
    let st = random_submask(rng, full);
    let s = random_submask(rng, st);
    let t = st & !s;
    let run = || -> Result<bool> {
        let x_st = x.restriction(st)?;
        let x_s = x.restriction(s)?;
        let over_s = x.contraction(s)?;
        let first = x_st.restriction(compress(s, st))? == x_s;
        let middle = x_st.contraction(compress(s, st))? == over_s.restriction(compress(t, full & !s))?;
        let last = x.contraction(st)? == over_s.contraction(compress(t, full & !s))?;
        Ok(first && middle && last)
    };
    match run() {
        Ok(true) => Ok(()),
        Ok(false) => Err(format!(
            "{} with S = {}, T = {}",
            fail("co-associativity", &[&x]),
            x.ground().fmt_mask(s),
            x.ground().fmt_mask(t)
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn compatibility<T: Sample, R: Rng>(rng: &mut R, pool: &[String]) -> Check {
    let sizes = [rng.gen_range(0..=4), rng.gen_range(0..=4)];
    let g = disjoint_grounds(rng, &sizes, pool);
    let (x, y) = (T::sample(rng, &g[0]), T::sample(rng, &g[1]));
    let xy = x.product(&y).map_err(|e| e.to_string())?;
    let s = random_submask(rng, xy.ground().full());
    let run = || -> Result<bool> {
        let (a, b) = (trace(xy.ground(), s, x.ground()), trace(xy.ground(), s, y.ground()));
        let (xl, xr) = x.coproduct(a)?;
        let (yl, yr) = y.coproduct(b)?;
        Ok(xy.coproduct(s)? == (xl.product(&yl)?, xr.product(&yr)?))
    };
    match run() {
        Ok(true) => Ok(()),
        Ok(false) => Err(fail("compatibility", &[&x, &y])),
        Err(e) => Err(e.to_string()),
    }
}

/// The five Hopf monoid axioms on `cases` random instances each.
pub fn hopf_axioms<T: Sample>(seed: u64, cases: usize) -> Outcome {
    let pool = label_pool(12);
    let mut rng = seeded(seed);
    let axioms: [fn(&mut rand_chacha::ChaCha8Rng, &[String]) -> Check; 5] = [
        naturality::<T, _>,
        unitality::<T, _>,
        associativity::<T, _>,
        coassociativity::<T, _>,
        compatibility::<T, _>,
    ];
    for axiom in axioms {
        for _ in 0..cases {
            axiom(&mut rng, &pool)?;
        }
    }
    Ok(axioms.len() * cases)
}

/// The axioms for every species: HG, SHG, G, SC and F.
pub fn hopf_axioms_all(seed: u64, cases: usize) -> Outcome {
    let mut total = 0;
    total += hopf_axioms::<Hypergraph>(seed, cases).map_err(|e| format!("HG: {e}"))?;
    total += hopf_axioms::<SimpleHypergraph>(seed, cases).map_err(|e| format!("SHG: {e}"))?;
    total += hopf_axioms::<Graph>(seed, cases).map_err(|e| format!("G: {e}"))?;
    total += hopf_axioms::<SimplicialComplex>(seed, cases).map_err(|e| format!("SC: {e}"))?;
    total += hopf_axioms::<SetOfPaths>(seed, cases).map_err(|e| format!("F: {e}"))?;
    Ok(total)
}

/// `chi_graph` against deletion–contraction on every graph with at most
/// `max_vertices` vertices, against enumeration at `n ≤ 3`, and
/// `(-1)^{|I|}χ(-1)` against acyclic orientations.
pub fn graphs(max_vertices: usize) -> Outcome {
    let mut cases = 0;
    let k3 = Graph::complete(GroundSet::numbered(3));
    let expected = RationalPoly::from_integers(&[0, 2, -3, 1]);
    ensure!(chi_graph(&k3) == expected, "χ(K₃) = {}", chi_graph(&k3));
    ensure!(acyclic_orientations(&k3.to_hypergraph()).len() == 6, "K₃ acyclic orientations");
    ensure!(chi_graph(&k3).eval_int(-1) == rat(-6), "χ(K₃)(-1)");
    for k in 0..=max_vertices {
        for g in all_graphs(k) {
            let chi = chi_graph(&g);
            let dc = chromatic_deletion_contraction(&g);
            ensure!(chi == dc, "{g}: χ = {chi}, deletion–contraction {dc}");
            for n in 0..=3 {
                ensure!(chi.eval_int(n as i64) == int(chromatic_brute_force(&g, n)), "{g}: proper colorings at {n}");
            }
            let acyclic = acyclic_orientations(&g.to_hypergraph()).len();
            ensure!(chi.eval_int(-1) * rat(sign(k)) == int(acyclic as u128), "{g}: {acyclic} acyclic orientations");
            cases += 1;
        }
    }
    Ok(cases)
}

/// `chi_sc` against the chromatic polynomial of the 1-skeleton on every
/// complex with at most `max_vertices` vertices.
pub fn simplicial(max_vertices: usize) -> Outcome {
    let mut cases = 0;
    for k in 0..=max_vertices {
        for c in all_complexes(k) {
            let chi = chi_sc(&c);
            let skeleton = chromatic_deletion_contraction(&c.one_skeleton());
            ensure!(chi == skeleton, "{c}: χ = {chi}, 1-skeleton {skeleton}");
            cases += 1;
        }
    }
    Ok(cases)
}

/// Single paths on `1..=max_vertices` vertices against binary tree counts
/// at `1 ≤ n ≤ max_n` and the Catalan numbers, plus the reference
/// coproduct of `bfcg|aed`.
pub fn paths(max_vertices: usize, max_n: usize) -> Outcome {
    let alpha = SetOfPaths::from_words(&["bfcg", "aed"]).map_err(|e| e.to_string())?;
    let s = alpha.ground().mask_of(["b", "c", "e"]).map_err(|e| e.to_string())?;
    let (l, r) = alpha.coproduct(s).map_err(|e| e.to_string())?;
    let shown = format!("{l} ⊗ {r}");
    ensure!(shown == "bc|e ⊗ f|g|a|d", "coproduct of bfcg|aed at {{b,c,e}} printed as {shown}");
    let mut cases = 1;
    for k in 1..=max_vertices {
        let cat = Rational::from_integer(catalan(k as u64));
        for alpha in all_single_paths(k) {
            let chi = chi_paths(&alpha);
            ensure!(chi.eval_int(0).is_zero(), "{alpha}: χ(0) = {}", chi.eval_int(0));
            for n in 1..=max_n {
                let strict = count_tree_pairs(k, n, true);
                let weak = count_tree_pairs(k, n, false);
                ensure!(chi.eval_int(n as i64) == int(strict), "{alpha}: χ({n}) vs {strict} strict pairs");
                let reflected = chi.eval_int(-(n as i64)) * rat(sign(k));
                ensure!(reflected == int(weak), "{alpha}: (-1)^|I| χ(-{n}) = {reflected} vs {weak} weak pairs");
            }
            let at_minus_one = chi.eval_int(-1) * rat(sign(k));
            ensure!(at_minus_one == cat, "{alpha}: (-1)^|I| χ(-1) = {at_minus_one}, C_{k} = {cat}");
            cases += 1;
        }
    }
    Ok(cases)
}

/// Names accepted by [`run_suite`], in report order.
pub const SUITES: [&str; 10] = [
    "compsum",
    "f-n",
    "faulhaber",
    "colorings",
    "reciprocity",
    "antipode",
    "hopf-axioms",
    "graphs",
    "simplicial",
    "paths",
];

/// Expands a comma-separated scope into suite names. Besides the names
/// themselves, `all`, `lemmas`, `invariants` and `submonoids` are accepted.
pub fn resolve_scope(scope: &str) -> Result<Vec<&'static str>> {
    let mut wanted = Vec::new();
    for item in scope.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let group: &[&str] = match item {
            "all" => &SUITES,
            "lemmas" => &["compsum", "f-n"],
            "invariants" => &["colorings", "reciprocity", "antipode"],
            "submonoids" => &["graphs", "simplicial", "paths"],
            other => match SUITES.iter().find(|s| **s == other) {
                Some(s) => std::slice::from_ref(s),
                None => return Err(Error::invalid("scope", format!("unknown suite `{other}`"))),
            },
        };
        wanted.extend_from_slice(group);
    }
    if wanted.is_empty() {
        return Err(Error::invalid("scope", "no suite selected"));
    }
    Ok(SUITES.iter().copied().filter(|s| wanted.contains(s)).collect())
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub seed: u64,
    pub antipode_sign: AntipodeSign,
    pub axiom_cases: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { seed: 0, antipode_sign: AntipodeSign::Takeuchi, axiom_cases: 200 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Ok(cases) => write!(f, "PASS {} ({cases} cases)", self.name),
            Err(why) => write!(f, "FAIL {}: {why}", self.name),
        }
    }
}

/// Runs one named suite at its default bounds.
pub fn run_suite(name: &'static str, opts: &CheckOptions) -> SuiteReport {
    let outcome = match name {
        "compsum" => compsum(5, 4),
        "f-n" => f_reflection(6, 5).and_then(|a| f_reflection_general(6, 5).map(|b| a + b)),
        "faulhaber" => faulhaber_suite(8, 8),
        "colorings" => colorings(&coloring_family(opts.seed), 4),
        "reciprocity" => reciprocity(&coloring_family(opts.seed), 3),
        "antipode" => antipode_reciprocity(&antipode_family(), 3, opts.antipode_sign),
        "hopf-axioms" => hopf_axioms_all(opts.seed, opts.axiom_cases),
        "graphs" => graphs(5),
        "simplicial" => simplicial(4),
        "paths" => paths(5, 3),
        other => Err(format!("unknown suite `{other}`")),
    };
    SuiteReport { name, outcome }
}

/// Every suite of `scope`, in canonical order.
pub fn run_scope(scope: &[&'static str], opts: &CheckOptions) -> Vec<SuiteReport> {
    scope.iter().map(|s| run_suite(s, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_f_examples() {
        assert_eq!(brute_f(&[1], 4), BigInt::from(6));
        assert_eq!(brute_f(&[0, 0], 4), BigInt::from(6));
        assert_eq!(brute_f(&[1, 1], 3), BigInt::from(2));
    }

    #[test]
    fn scopes() {
        assert_eq!(resolve_scope("lemmas").unwrap(), ["compsum", "f-n"]);
        assert_eq!(resolve_scope("paths, compsum").unwrap(), ["compsum", "paths"]);
        assert_eq!(resolve_scope("all").unwrap().len(), SUITES.len());
        assert!(resolve_scope("nope").is_err());
        assert!(resolve_scope("").is_err());
    }

    #[test]
    fn small_suites_pass() {
        assert!(compsum(3, 3).is_ok());
        assert!(f_reflection(4, 3).is_ok());
        assert!(f_reflection_general(4, 3).is_ok());
        assert!(colorings(&all_hypergraphs(2, 2), 3).is_ok());
        assert!(reciprocity(&all_hypergraphs(2, 2), 3).is_ok());
        assert!(hopf_axioms_all(3, 10).is_ok());
        assert!(paths(3, 2).is_ok());
    }

    #[test]
    fn unsigned_antipode_is_caught() {
        let family = all_hypergraphs(1, 1);
        assert!(antipode_reciprocity(&family, 2, AntipodeSign::Takeuchi).is_ok());
        let err = antipode_reciprocity(&family, 2, AntipodeSign::Unsigned).unwrap_err();
        assert!(err.contains("χ(-n)"), "{err}");
    }
}
