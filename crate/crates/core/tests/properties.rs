use hghopf::generate::{self, Sample};
use hghopf::hopf::{
    antipode, antipode_convolution, chi_direct, chi_direct_by_decompositions, chi_polynomial, zeta_basic, AntipodeSign,
    LinearCombination,
};
use hghopf::orientations::{chi_formula, count_pairs, reciprocity_formula};
use hghopf::polyring::rat;
use hghopf::setcomp::{enumerate_compositions, full_mask};
use hghopf::submonoids::{Graph, SetOfPaths, SimpleHypergraph, SimplicialComplex};
use hghopf::{Composition, Decomposition, GroundSet, Hypergraph, Mask, Species};
use proptest::prelude::*;

fn hypergraph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (0..=max_vertices).prop_flat_map(move |k| {
        let edge = if k == 0 { (0..1u64).boxed() } else { (1..=full_mask(k)).boxed() };
        prop::collection::vec(edge, 0..=max_edges).prop_map(move |edges| {
            let edges = edges.into_iter().filter(|&e| e != 0).collect();
            Hypergraph::new(GroundSet::numbered(k), edges).unwrap()
        })
    })
}

fn lettered(x: &Hypergraph, offset: u8) -> Hypergraph {
    let sigma = hghopf::Relabeling::new(
        x.ground()
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| (l.to_string(), char::from(b'a' + offset + i as u8).to_string())),
    )
    .unwrap();
    x.relabel(&sigma).unwrap()
}

fn apply_antipode(c: &LinearCombination<Hypergraph>) -> LinearCombination<Hypergraph> {
    let mut out = LinearCombination::zero(c.ground().clone());
    for (x, coeff) in c.terms() {
        for (y, d) in antipode(x, AntipodeSign::Takeuchi).terms() {
            out.add_term(coeff * d, y.clone()).unwrap();
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chi_is_multiplicative(x in hypergraph(3, 3), y in hypergraph(3, 3)) {
        let (x, y) = (lettered(&x, 0), lettered(&y, 3));
        let xy = x.product(&y).unwrap();
        prop_assert_eq!(chi_polynomial(&xy), &chi_polynomial(&x) * &chi_polynomial(&y));
    }

    #[test]
    fn chi_at_one_is_zeta(x in hypergraph(5, 4)) {
        prop_assert_eq!(chi_direct(&x, 1), u128::from(zeta_basic(&x)));
        prop_assert_eq!(chi_polynomial(&x).eval_int(1), rat(i64::from(zeta_basic(&x))));
    }

    #[test]
    fn recursive_chi_matches_enumeration(x in hypergraph(4, 3), n in 0usize..4) {
        prop_assert_eq!(chi_direct(&x, n), chi_direct_by_decompositions(&x, n));
    }

    #[test]
    fn closed_forms_match_chi(x in hypergraph(5, 4)) {
        let chi = chi_polynomial(&x);
        prop_assert_eq!(chi_formula(&x), chi.clone());
        let k = x.ground().len() as i64;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(reciprocity_formula(&x), chi.reflect().scale(&rat(sign)));
        for n in 1..=2 {
            prop_assert_eq!(chi.eval_int(-(n as i64)) * rat(sign), rat(count_pairs(&x, n, false) as i64));
        }
    }

    #[test]
    fn chi_is_invariant_under_relabeling(x in hypergraph(5, 4), seed in any::<u64>()) {
        let mut rng = generate::seeded(seed);
        let sigma = generate::random_relabeling(&mut rng, x.ground(), &generate::label_pool(8));
        prop_assert_eq!(chi_polynomial(&x.relabel(&sigma).unwrap()), chi_polynomial(&x));
    }

    #[test]
    fn antipode_is_a_convolution_inverse(x in hypergraph(4, 3)) {
        prop_assume!(!x.ground().is_empty());
        prop_assert!(antipode_convolution(&x, AntipodeSign::Takeuchi).is_empty());
    }

    #[test]
    fn antipode_is_an_involution(x in hypergraph(3, 3)) {
        let twice = apply_antipode(&antipode(&x, AntipodeSign::Takeuchi));
        prop_assert_eq!(twice, LinearCombination::single(x));
    }

    #[test]
    fn function_round_trip(k in 0usize..6, n in 1usize..4, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = generate::seeded(seed);
        let colors: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
        let d = Decomposition::from_function(GroundSet::numbered(k), n, &colors).unwrap();
        prop_assert_eq!(d.to_function(), colors.clone());
        prop_assert_eq!(Decomposition::from_function(d.ground().clone(), n, &d.to_function()).unwrap(), d);
    }

    #[test]
    fn shuffles_restrict_back(i in 0usize..13, j in 0usize..13) {
        let left = GroundSet::new(["a", "b", "c"]).unwrap();
        let right = GroundSet::new(["d", "e", "f"]).unwrap();
        let ps = enumerate_compositions(&left, false);
        let qs = enumerate_compositions(&right, false);
        let (p, q) = (&ps[i], &qs[j]);
        let all = p.shuffle(q).unwrap();
        prop_assert!(!all.is_empty());
        for r in &all {
            let pm: Mask = r.ground().mask_of(["a", "b", "c"]).unwrap();
            prop_assert_eq!(&r.restrict(pm).unwrap().canonicalize(), p);
            prop_assert_eq!(&r.restrict(r.ground().full() & !pm).unwrap().canonicalize(), q);
        }
        let mut sorted: Vec<&Composition> = all.iter().collect();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn hopf_axioms_hold(seed in any::<u64>()) {
        prop_assert!(hghopf::verify::hopf_axioms::<Hypergraph>(seed, 4).is_ok());
        prop_assert!(hghopf::verify::hopf_axioms::<SimpleHypergraph>(seed, 4).is_ok());
        prop_assert!(hghopf::verify::hopf_axioms::<Graph>(seed, 4).is_ok());
        prop_assert!(hghopf::verify::hopf_axioms::<SimplicialComplex>(seed, 4).is_ok());
        prop_assert!(hghopf::verify::hopf_axioms::<SetOfPaths>(seed, 4).is_ok());
    }

    #[test]
    fn simplicial_contraction_is_induced(seed in any::<u64>()) {
        let mut rng = generate::seeded(seed);
        let ground = GroundSet::numbered(5);
        let c = SimplicialComplex::sample(&mut rng, &ground);
        let s = generate::random_submask(&mut rng, ground.full());
        let t = ground.full() & !s;
        prop_assert_eq!(c.contraction(s).unwrap(), c.restriction(t).unwrap());
    }
}
