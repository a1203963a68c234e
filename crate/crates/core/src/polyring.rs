//! Exact univariate polynomials over the rationals, Bernoulli numbers,
//! discrete summation and the `F_{p₁,…,p_t}` family of nested power sums.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense polynomial; `coeffs[i]` is the coefficient of `n^i`. The leading
/// coefficient is never zero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        RationalPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn variable() -> Self {
        Self::monomial(rat(1), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `n^k`.
    pub fn power(k: usize) -> Self {
        Self::monomial(rat(1), k)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat(x))
    }

    /// Evaluates at an integer and returns the value if it is an integer.
    pub fn eval_integer(&self, x: i64) -> Option<BigInt> {
        let v = self.eval_int(x);
        v.is_integer().then(|| v.to_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(n + k)`.
    pub fn shift(&self, k: i64) -> Self {
        let step = Self::from_integers(&[k, 1]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// `p(-n)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficients as `"num/den"` strings (or `"num"` for integers) from
    /// degree 0 upward.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coeff_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        coeffs
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<Rational>()
                    .map_err(|e| Error::invalid("coefficient", format!("{:?}: {e}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Descending powers with explicit signs, e.g. `n^3 - 3n^2 + 2n`.
impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let mag = if a.is_integer() {
                a.to_integer().to_string()
            } else {
                format!("({a})")
            };
            match d {
                0 => f.write_str(&mag)?,
                _ => {
                    if !a.is_one() {
                        f.write_str(&mag)?;
                    }
                    if d == 1 {
                        f.write_str("n")?;
                    } else {
                        write!(f, "n^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalPoly {
            type Output = RationalPoly;

            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for RationalPoly {
    fn sum<I: Iterator<Item = RationalPoly>>(iter: I) -> Self {
        iter.fold(RationalPoly::zero(), |a, b| &a + &b)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `B₀, …, B_upto` with the convention `B₁ = -1/2`, from the recurrence
/// `Σ_{j=0}^{m} C(m+1, j)·B_j = 0` for `m ≥ 1`.
pub fn bernoulli_numbers(upto: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![rat(1)];
    for m in 1..=upto as u64 {
        let s: Rational = (0..m)
            .map(|j| Rational::from_integer(binomial(m + 1, j)) * &b[j as usize])
            .fold(Rational::zero(), |a, x| a + x);
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

pub fn bernoulli(j: usize) -> Rational {
    bernoulli_numbers(j).pop().expect("nonempty")
}

/// Faulhaber's expansion of `Σ_{k=0}^{n-1} k^p`:
/// `(1/(p+1)) Σ_j C(p+1, j)·B_j·n^{p+1-j}`.
pub fn faulhaber(p: usize) -> RationalPoly {
    let b = bernoulli_numbers(p);
    let denom = rat(p as i64 + 1);
    (0..=p)
        .map(|j| {
            let c = Rational::from_integer(binomial(p as u64 + 1, j as u64)) * &b[j] / &denom;
            RationalPoly::monomial(c, p + 1 - j)
        })
        .sum()
}

/// Stirling numbers of the second kind `S(j, i)` for `0 ≤ i ≤ j ≤ upto`.
fn stirling2(upto: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); upto + 1]; upto + 1];
    s[0][0] = BigInt::one();
    for j in 1..=upto {
        for i in 1..=j {
            s[j][i] = &s[j - 1][i - 1] + BigInt::from(i) * &s[j - 1][i];
        }
    }
    s
}

/// The falling factorial `n(n-1)…(n-m+1)`.
fn falling(m: usize) -> RationalPoly {
    (0..m as i64).fold(RationalPoly::one(), |acc, i| &acc * &RationalPoly::from_integers(&[-i, 1]))
}

/// The unique `Q` with `Q(0) = 0` and `Q(m+1) - Q(m) = q(m)`, that is
/// `Q(n) = Σ_{k=0}^{n-1} q(k)` for `n ≥ 0`.
///
/// Works in the falling-factorial basis: `k^j = Σ_i S(j,i)·k^(i)` and
/// `Σ_{k<n} k^(i) = n^(i+1)/(i+1)`.
pub fn discrete_sum(q: &RationalPoly) -> RationalPoly {
    let Some(deg) = q.degree() else {
        return RationalPoly::zero();
    };
    let s = stirling2(deg);
    let mut in_falling = vec![Rational::zero(); deg + 1];
    for (j, c) in q.coeffs().iter().enumerate() {
        for (i, sji) in s[j].iter().enumerate().take(j + 1) {
            in_falling[i] += c * Rational::from_integer(sji.clone());
        }
    }
    in_falling
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| falling(i + 1).scale(&(c / rat(i as i64 + 1))))
        .sum()
}

/// Exponent sequence `(p₁, …, p_t)` of an `F` polynomial. Zero parts are
/// allowed and read with `0⁰ = 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FSignature(Vec<u32>);

impl FSignature {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptySignature);
        }
        Ok(FSignature(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `Σ pᵢ + t`.
    pub fn degree(&self) -> usize {
        self.weight() as usize + self.len()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    /// Every signature obtained by merging runs of adjacent parts
    /// (`2^{t-1}` of them, `self` included).
    pub fn coarsenings(&self) -> Vec<FSignature> {
        let t = self.len();
        let mut out = BTreeSet::new();
        for cuts in 0..1u64 << (t - 1) {
            let mut parts = vec![self.0[0]];
            for i in 1..t {
                if cuts >> (i - 1) & 1 == 1 {
                    *parts.last_mut().expect("nonempty") += self.0[i];
                } else {
                    parts.push(self.0[i]);
                }
            }
            out.insert(FSignature(parts));
        }
        // merging can collide only when zero parts are present
        out.into_iter().collect()
    }

    /// The coarsenings as a list with multiplicity, one per cut pattern.
    pub fn coarsenings_with_multiplicity(&self) -> Vec<FSignature> {
        let t = self.len();
        (0..1u64 << (t - 1))
            .map(|cuts| {
                let mut parts = vec![self.0[0]];
                for i in 1..t {
                    if cuts >> (i - 1) & 1 == 1 {
                        *parts.last_mut().expect("nonempty") += self.0[i];
                    } else {
                        parts.push(self.0[i]);
                    }
                }
                FSignature(parts)
            })
            .collect()
    }
}

impl fmt::Display for FSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `F_p(n) = Σ_{0 ≤ k₁ < … < k_t ≤ n-1} k₁^{p₁}…k_t^{p_t}`, by iterated
/// discrete summation from the innermost index outward.
pub fn f_polynomial(p: &FSignature) -> RationalPoly {
    p.parts().iter().fold(RationalPoly::one(), |inner, &e| {
        discrete_sum(&(&RationalPoly::power(e as usize) * &inner))
    })
}

/// The same nested sum with every index at least 1:
/// `Σ_{1 ≤ k₁ < … < k_t ≤ n-1} k₁^{p₁}…k_t^{p_t}`.
///
/// Differs from [`f_polynomial`] only when `p₁ = 0`, through the terms with
/// `k₁ = 0`.
pub fn f_polynomial_from_one(p: &FSignature) -> RationalPoly {
    let full = f_polynomial(p);
    if p.parts()[0] > 0 {
        return full;
    }
    let rest = match FSignature::new(p.parts()[1..].to_vec()) {
        Ok(rest) => f_polynomial_from_one(&rest),
        Err(_) => RationalPoly::one(),
    };
    &full - &rest
}

/// The unique polynomial of degree below `points.len()` through `points`.
pub fn interpolate(points: &[(i64, Rational)]) -> Result<RationalPoly> {
    let mut xs = BTreeSet::new();
    for (x, _) in points {
        if !xs.insert(*x) {
            return Err(Error::DuplicateAbscissa(*x));
        }
    }
    // Newton divided differences
    let n = points.len();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut newton = Vec::with_capacity(n);
    for level in 0..n {
        newton.push(table[level].clone());
        for i in (level + 1..n).rev() {
            let dx = rat(points[i].0 - points[i - level - 1].0);
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
    }
    let mut poly = RationalPoly::zero();
    for level in (0..n).rev() {
        let factor = RationalPoly::from_integers(&[-points[level].0, 1]);
        poly = &(&poly * &factor) + &RationalPoly::constant(newton[level].clone());
    }
    Ok(poly)
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn poly(max_deg: usize) -> impl Strategy<Value = RationalPoly> {
        prop::collection::vec((-20i64..20, 1i64..5), 0..=max_deg + 1)
            .prop_map(|v| RationalPoly::new(v.into_iter().map(|(a, b)| ratio(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn discrete_sum_telescopes(q in poly(6)) {
            let big_q = discrete_sum(&q);
            prop_assert_eq!(big_q.eval_int(0), rat(0));
            for m in -5..=5 {
                prop_assert_eq!(big_q.eval_int(m + 1) - big_q.eval_int(m), q.eval_int(m));
            }
            if let Some(d) = q.degree() {
                prop_assert_eq!(big_q.degree(), Some(d + 1));
            }
        }

        #[test]
        fn discrete_sum_is_linear(a in poly(6), b in poly(6), c in -5i64..5) {
            let lhs = discrete_sum(&(&a + &b.scale(&rat(c))));
            let rhs = &discrete_sum(&a) + &discrete_sum(&b).scale(&rat(c));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn interpolate_recovers_polynomial(p in poly(6), start in -4i64..4) {
            let pts: Vec<_> = (start..start + 8).map(|x| (x, p.eval_int(x))).collect();
            prop_assert_eq!(interpolate(&pts).unwrap(), p);
        }
    }
}
