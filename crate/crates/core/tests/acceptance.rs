//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hghopf::generate::all_hypergraphs;
use hghopf::hopf::AntipodeSign;
use hghopf::orientations::acyclic_orientations;
use hghopf::submonoids::{catalan, chi_graph, chi_paths, Graph, SetOfPaths};
use hghopf::verify::{self, Outcome};
use hghopf::{GroundSet, Species};
use num::BigInt;

const SEED: u64 = 20_160_404;

type Criterion = (&'static str, fn() -> Outcome);

fn timed(limit: Option<Duration>, run: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let cases = run()?;
    let spent = start.elapsed();
    match limit {
        Some(limit) if spent >= limit => Err(format!("{cases} cases passed but took {spent:.1?}, limit {limit:?}")),
        _ => Ok(cases),
    }
}

fn criterion_1() -> Outcome {
    let family = verify::coloring_family(SEED);
    timed(Some(Duration::from_secs(60)), || verify::colorings(&family, 4))
}

fn criterion_2() -> Outcome {
    let family = verify::coloring_family(SEED);
    timed(Some(Duration::from_secs(60)), || verify::reciprocity(&family, 3))
}

fn criterion_3() -> Outcome {
    let family = verify::antipode_family();
    let cases = verify::antipode_reciprocity(&family, 3, AntipodeSign::Takeuchi)?;
    match verify::antipode_reciprocity(&all_hypergraphs(2, 1), 3, AntipodeSign::Unsigned) {
        Ok(_) => Err("the unsigned antipode was not refuted".into()),
        Err(counterexample) => {
            println!("    unsigned antipode counterexample: {counterexample}");
            Ok(cases + 1)
        }
    }
}

fn criterion_4() -> Outcome {
    verify::compsum(5, 4)
}

fn criterion_5() -> Outcome {
    let positive = verify::f_reflection(6, 5)?;
    let general = verify::f_reflection_general(6, 5)?;
    Ok(positive + general)
}

fn criterion_6() -> Outcome {
    let k3 = Graph::complete(GroundSet::numbered(3));
    let chi = chi_graph(&k3);
    if chi.to_string() != "n^3 - 3n^2 + 2n" {
        return Err(format!("χ(K₃) = {chi}"));
    }
    let acyclic = acyclic_orientations(&k3.to_hypergraph()).len();
    if acyclic != 6 || chi.eval_integer(-1) != Some(BigInt::from(-6)) {
        return Err(format!("K₃: {acyclic} acyclic orientations, χ(-1) = {}", chi.eval_int(-1)));
    }
    verify::graphs(5)
}

fn criterion_7() -> Outcome {
    verify::simplicial(4)
}

fn criterion_8() -> Outcome {
    let alpha = SetOfPaths::from_words(&["bfcg", "aed"]).map_err(|e| e.to_string())?;
    let s = alpha.ground().mask_of(["b", "c", "e"]).map_err(|e| e.to_string())?;
    let (l, r) = alpha.coproduct(s).map_err(|e| e.to_string())?;
    println!("    Δ_{{b,c,e}},{{a,d,f,g}}(bfcg|aed) = {l} ⊗ {r}");
    let expected: Vec<BigInt> = [1, 2, 5, 14, 42].into_iter().map(BigInt::from).collect();
    let found: Vec<BigInt> = (1..=5).map(catalan).collect();
    if found != expected {
        return Err(format!("Catalan numbers {found:?}"));
    }
    for (k, word) in ["a", "ab", "abc", "abcd", "abcde"].iter().enumerate() {
        let chi = chi_paths(&SetOfPaths::from_words(&[word]).map_err(|e| e.to_string())?);
        let v = chi.eval_integer(-1).expect("integer value");
        let v = if k % 2 == 0 { -v } else { v };
        if v != expected[k] {
            return Err(format!("path {word}: (-1)^|I| χ(-1) = {v}"));
        }
    }
    verify::paths(5, 3)
}

fn criterion_9() -> Outcome {
    timed(Some(Duration::from_secs(120)), || verify::hopf_axioms_all(SEED, 200))
}

fn criterion_10() -> Outcome {
    verify::faulhaber_suite(8, 8)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 strict colorings: direct = unique-max = strict pairs = closed form", criterion_1),
        ("2 reciprocity: (-1)^|I| χ(-n) = weak pairs, acyclic orientations at n = 1", criterion_2),
        ("3 antipode reciprocity χ(x)(-n) = χ(S(x))(n)", criterion_3),
        ("4 signed sums over (constrained) refinements", criterion_4),
        ("5 F_p(-n) as a signed sum over coarsenings", criterion_5),
        ("6 graphs: chromatic polynomial and acyclic orientations", criterion_6),
        ("7 simplicial complexes: chromatic polynomial of the 1-skeleton", criterion_7),
        ("8 paths: binary tree pairs, Catalan numbers, reference coproduct", criterion_8),
        ("9 Hopf monoid axioms for HG, SHG, G, SC, F", criterion_9),
        ("10 degree of F_p and the Bernoulli expansion", criterion_10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let spent = start.elapsed();
        match outcome {
            Ok(cases) => println!("PASS criterion {name} ({cases} cases, {spent:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
