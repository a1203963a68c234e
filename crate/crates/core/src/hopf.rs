//! Generic Hopf monoid machinery: the basic character, the basic invariant
//! `χ`, and the antipode in Takeuchi form.
//!
//! Everything here is written against [`Species`], so hypergraphs, simple
//! hypergraphs, graphs, simplicial complexes and sets of paths all share one
//! implementation of `χ` and of the antipode.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::polyring::{interpolate, rat, RationalPoly};
use crate::setcomp::{compress, enumerate_decompositions, submasks, Decomposition, GroundSet, Mask, Relabeling};

/// An element of a connected Hopf monoid in species, given by its basis
/// element over a labeled ground set.
///
/// Subsets passed to `restriction`/`contraction` are masks over
/// `self.ground()`. The coproduct along `S` is `(restriction(S),
/// contraction(S))`, the second factor living on the complement of `S`.
pub trait Species: Clone + Eq + Ord + fmt::Debug + fmt::Display + Send + Sync {
    fn ground(&self) -> &GroundSet;

    /// The unit, living on the empty ground set.
    fn unit() -> Self;

    fn product(&self, other: &Self) -> Result<Self>;

    fn restriction(&self, s: Mask) -> Result<Self>;

    fn contraction(&self, s: Mask) -> Result<Self>;

    fn relabel(&self, sigma: &Relabeling) -> Result<Self>;

    fn is_discrete(&self) -> bool;

    /// `is_discrete(restriction(s))`, possibly without building the
    /// restriction.
    fn restriction_is_discrete(&self, s: Mask) -> bool {
        self.restriction(s).is_ok_and(|r| r.is_discrete())
    }

    /// Short rendering used when printing linear combinations, which show
    /// the shared ground set once.
    fn fmt_term(&self) -> String {
        self.to_string()
    }

    fn coproduct(&self, s: Mask) -> Result<(Self, Self)> {
        Ok((self.restriction(s)?, self.contraction(s)?))
    }

    /// `Δ_{S₁,…,S_l}`: component `i` is the restriction to `Sᵢ` of the
    /// contraction of `S₁ ∪ … ∪ S_{i-1}`.
    fn iterated_coproduct(&self, d: &Decomposition) -> Result<Vec<Self>> {
        if d.ground() != self.ground() {
            return Err(Error::GroundMismatch);
        }
        let mut remaining = self.ground().full();
        let mut cur = self.clone();
        let mut out = Vec::with_capacity(d.len());
        for &block in d.blocks() {
            let rel = compress(block, remaining);
            out.push(cur.restriction(rel)?);
            cur = cur.contraction(rel)?;
            remaining &= !block;
        }
        Ok(out)
    }
}

/// `μ` applied to a list of elements over pairwise disjoint ground sets.
pub fn product_all<T: Species>(items: &[T]) -> Result<T> {
    items.iter().try_fold(T::unit(), |acc, x| acc.product(x))
}

/// The basic character: 1 on discrete elements, 0 elsewhere.
pub fn zeta_basic<T: Species>(x: &T) -> u32 {
    u32::from(x.is_discrete())
}

/// `χ(x)(n)`: the number of length-`n` decompositions of the ground set
/// whose iterated coproduct components are all discrete.
///
/// Sums over the first block and recurses on the contraction, which is the
/// same sum as [`chi_direct_by_decompositions`] with shared prefixes and
/// zero branches pruned. Contractions met more than once are evaluated once.
pub fn chi_direct<T: Species>(x: &T, n: usize) -> u128 {
    fn rec<T: Species>(x: &T, n: usize, memo: &mut BTreeMap<(T, usize), u128>) -> u128 {
        if x.ground().is_empty() {
            return 1;
        }
        match n {
            0 => 0,
            1 => u128::from(zeta_basic(x)),
            _ => {
                if let Some(&v) = memo.get(&(x.clone(), n)) {
                    return v;
                }
                let v = submasks(x.ground().full())
                    .filter(|&s| x.restriction_is_discrete(s))
                    .map(|s| rec(&x.contraction(s).expect("subset of ground"), n - 1, memo))
                    .sum();
                memo.insert((x.clone(), n), v);
                v
            }
        }
    }
    rec(x, n, &mut BTreeMap::new())
}

/// `χ(x)(n)` by literally enumerating all `n^|I|` decompositions.
pub fn chi_direct_by_decompositions<T: Species>(x: &T, n: usize) -> u128 {
    enumerate_decompositions(x.ground(), n)
        .map(|d| {
            x.iterated_coproduct(&d)
                .expect("decomposition of the ground set")
                .iter()
                .map(|c| u128::from(zeta_basic(c)))
                .product::<u128>()
        })
        .sum()
}

/// The polynomial through `χ(x)(n)` for `n = 0, …, |I|`; `χ` has degree at
/// most `|I|`.
pub fn chi_polynomial<T: Species>(x: &T) -> RationalPoly {
    let points: Vec<_> = (0..=x.ground().len())
        .map(|n| (n as i64, num::BigRational::from_integer(BigInt::from(chi_direct(x, n)))))
        .collect();
    interpolate(&points).expect("distinct abscissae")
}

/// A formal integer combination of elements over one ground set.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCombination<T> {
    ground: GroundSet,
    terms: BTreeMap<T, i64>,
}

impl<T: Species> LinearCombination<T> {
    pub fn zero(ground: GroundSet) -> Self {
        LinearCombination {
            ground,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(x: T) -> Self {
        let mut c = Self::zero(x.ground().clone());
        c.terms.insert(x, 1);
        c
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn add_term(&mut self, coeff: i64, x: T) -> Result<()> {
        if x.ground() != &self.ground {
            return Err(Error::GroundMismatch);
        }
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(x);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn add(&mut self, other: &LinearCombination<T>) -> Result<()> {
        for (x, &c) in &other.terms {
            self.add_term(c, x.clone())?;
        }
        Ok(())
    }

    /// `μ(self ⊗ y)`, extended linearly.
    pub fn product_with(&self, y: &T) -> Result<LinearCombination<T>> {
        let (ground, _, _) = self.ground.disjoint_union(y.ground())?;
        let mut out = LinearCombination::zero(ground);
        for (x, &c) in &self.terms {
            out.add_term(c, x.product(y)?)?;
        }
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&T, i64)> {
        self.terms.iter().map(|(x, &c)| (x, c))
    }

    pub fn coefficient(&self, x: &T) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Species> fmt::Debug for LinearCombination<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Species> fmt::Display for LinearCombination<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, c)| format!("{c} × {}", x.fmt_term()))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Sign convention for [`antipode`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeSign {
    /// `(-1)^k` for a composition with `k` blocks.
    Takeuchi,
    /// Every composition counted with `+1`. Does not satisfy
    /// `χ(x)(-n) = χ(S(x))(n)`; kept for diagnostics.
    Unsigned,
}

/// `S(x) = Σ_{(S₁,…,S_k) ⊨ I} (-1)^k μ ∘ Δ_{S₁,…,S_k}(x)`.
///
/// On the empty ground set the antipode is the identity.
pub fn antipode_takeuchi<T: Species>(x: &T) -> LinearCombination<T> {
    antipode(x, AntipodeSign::Takeuchi)
}

pub fn antipode<T: Species>(x: &T, sign: AntipodeSign) -> LinearCombination<T> {
    let mut out = LinearCombination::zero(x.ground().clone());
    if x.ground().is_empty() {
        out.add_term(1, x.clone()).expect("same ground");
        return out;
    }
    fn rec<T: Species>(cur: &T, k: usize, acc: &T, sign: AntipodeSign, out: &mut LinearCombination<T>) {
        for s in submasks(cur.ground().full()).skip(1) {
            let (first, rest) = cur.coproduct(s).expect("subset of ground");
            let acc = acc.product(&first).expect("disjoint components");
            if rest.ground().is_empty() {
                let c = match sign {
                    AntipodeSign::Takeuchi if k.is_multiple_of(2) => -1,
                    _ => 1,
                };
                out.add_term(c, acc).expect("same ground");
            } else {
                rec(&rest, k + 1, &acc, sign, out);
            }
        }
    }
    rec(x, 0, &T::unit(), sign, &mut out);
    out
}

/// `Σ_{S ⊔ T = I} μ(S(x|S) ⊗ x/S)`, which vanishes for nonempty ground sets
/// when `S` is the antipode.
pub fn antipode_convolution<T: Species>(x: &T, sign: AntipodeSign) -> LinearCombination<T> {
    let mut out = LinearCombination::zero(x.ground().clone());
    for s in submasks(x.ground().full()) {
        let (left, right) = x.coproduct(s).expect("subset of ground");
        let term = antipode(&left, sign).product_with(&right).expect("disjoint");
        out.add(&term).expect("same ground");
    }
    out
}

/// `Σ cᵢ·χ(xᵢ)(n)`. Negative `n` goes through polynomial evaluation.
pub fn chi_of_combination<T: Species>(c: &LinearCombination<T>, n: i64) -> BigInt {
    c.terms().fold(BigInt::zero(), |acc, (x, coeff)| {
        let v = if n >= 0 {
            BigInt::from(chi_direct(x, n as usize))
        } else {
            chi_polynomial(x)
                .eval_integer(n)
                .expect("χ takes integer values at integers")
        };
        acc + v * coeff
    })
}

/// `eval(χ(x), n)` for any integer `n`.
pub fn chi_at<T: Species>(x: &T, n: i64) -> BigInt {
    if n >= 0 {
        BigInt::from(chi_direct(x, n as usize))
    } else {
        let v = chi_polynomial(x).eval(&rat(n));
        v.to_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;

    fn hg(v: &[&str], e: &[&[&str]]) -> Hypergraph {
        Hypergraph::from_labels(v, e.iter().map(|x| x.iter())).unwrap()
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_basic(&hg(&["1", "2"], &[&["1"], &["2"]])), 1);
        assert_eq!(zeta_basic(&hg(&["1", "2"], &[&["1", "2"]])), 0);
        assert_eq!(zeta_basic(&Hypergraph::unit()), 1);
    }

    #[test]
    fn chi_direct_examples() {
        let edge = hg(&["1", "2"], &[&["1", "2"]]);
        assert_eq!(chi_direct(&edge, 2), 2);
        let tri = hg(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert_eq!(chi_direct(&tri, 2), 3);
        for x in [&edge, &tri] {
            assert_eq!(chi_direct(x, 1), u128::from(zeta_basic(x)));
            for n in 0..=4 {
                assert_eq!(chi_direct(x, n), chi_direct_by_decompositions(x, n));
            }
        }
        assert_eq!(chi_direct(&Hypergraph::unit(), 0), 1);
    }

    #[test]
    fn chi_polynomial_examples() {
        let edge = hg(&["1", "2"], &[&["1", "2"]]);
        assert_eq!(chi_polynomial(&edge), RationalPoly::from_integers(&[0, -1, 1]));
        let discrete = hg(&["1", "2", "3"], &[&["1"], &["3"]]);
        assert_eq!(chi_polynomial(&discrete), RationalPoly::power(3));
        assert_eq!(chi_polynomial(&Hypergraph::unit()), RationalPoly::one());
    }

    #[test]
    fn antipode_of_singleton_is_negation() {
        let x = hg(&["a"], &[&["a"], &["a"]]);
        let s = antipode_takeuchi(&x);
        assert_eq!(s.len(), 1);
        assert_eq!(s.coefficient(&x), -1);
        let e = antipode_takeuchi(&Hypergraph::unit());
        assert_eq!(e.coefficient(&Hypergraph::unit()), 1);
    }

    #[test]
    fn antipode_reciprocity_on_an_edge() {
        let edge = hg(&["1", "2"], &[&["1", "2"]]);
        let s = antipode_takeuchi(&edge);
        let chi = chi_polynomial(&edge);
        for n in 1..=3i64 {
            assert_eq!(
                chi_of_combination(&s, n),
                chi.eval_integer(-n).unwrap(),
                "n = {n}"
            );
        }
        assert_eq!(chi_of_combination(&s, 1), BigInt::from(2));
    }

    #[test]
    fn antipode_axiom_annihilates() {
        let xs = [
            hg(&["1"], &[&["1"]]),
            hg(&["1", "2"], &[&["1", "2"]]),
            hg(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "2", "3"]]),
        ];
        for x in &xs {
            assert!(antipode_convolution(x, AntipodeSign::Takeuchi).is_empty(), "{x}");
        }
        assert!(!antipode_convolution(&xs[1], AntipodeSign::Unsigned).is_empty());
    }

    #[test]
    fn combination_examples() {
        let edge = hg(&["1", "2"], &[&["1", "2"]]);
        let single = LinearCombination::single(edge.clone());
        assert_eq!(chi_of_combination(&single, 3), BigInt::from(6));
        let zero = LinearCombination::<Hypergraph>::zero(edge.ground().clone());
        assert_eq!(chi_of_combination(&zero, 3), BigInt::zero());
        let mut c = LinearCombination::zero(edge.ground().clone());
        assert_eq!(c.add_term(1, Hypergraph::unit()), Err(Error::GroundMismatch));
        c.add_term(2, edge.clone()).unwrap();
        c.add_term(-2, edge.clone()).unwrap();
        assert!(c.is_empty());
    }
}
