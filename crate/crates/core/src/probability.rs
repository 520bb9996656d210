//! Edge probabilities given as decimals, fractions or powers of `n`.
//!
//! Accepted forms: `0.25`, `1e-6`, `3/40`, `n^-4`, `n^-2.75`, `n^(-11/4)`.
//! A power of `n` stays symbolic after evaluation unless the exponent is an
//! integer, and sums of such powers are compared through rational
//! enclosures of the irrational roots.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

type Rational = BigRational;

/// Decimal digits used for root enclosures.
pub const ENCLOSURE_DIGITS: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbabilitySpec {
    Exact(Rational),
    PowerOfN(Rational),
}

impl ProbabilitySpec {
    /// Evaluates the spec for a given vertex count.
    pub fn at(&self, n: u64) -> Result<Probability> {
        let p = match self {
            ProbabilitySpec::Exact(q) => Probability::Exact(q.clone()),
            ProbabilitySpec::PowerOfN(x) => Probability::power(n, x.clone()),
        };
        p.check_range()?;
        Ok(p)
    }
}

impl FromStr for ProbabilitySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("n^") {
            let rest = rest.trim();
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest);
            return Ok(ProbabilitySpec::PowerOfN(parse_number(inner)?));
        }
        let q = parse_number(s)?;
        if q.is_negative() || q > Rational::one() {
            return Err(Error::param(format!("probability {s} outside [0, 1]")));
        }
        Ok(ProbabilitySpec::Exact(q))
    }
}

impl fmt::Display for ProbabilitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbabilitySpec::Exact(q) => write!(f, "{q}"),
            ProbabilitySpec::PowerOfN(x) => write!(f, "n^({x})"),
        }
    }
}

/// Parses a decimal (with optional exponent) or a fraction `a/b` exactly.
pub fn parse_number(s: &str) -> Result<Rational> {
    let bad = || Error::param(format!("cannot parse number `{s}`"));
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(a, b));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int_part}{frac_part}")
        .parse()
        .map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        Rational::from_integer(digits * ten.pow(scale as u32))
    } else {
        Rational::new(digits, ten.pow((-scale) as u32))
    };
    if negative {
        q = -q;
    }
    Ok(q)
}

/// An evaluated probability: an exact rational, or `base^exponent` with a
/// non-integer rational exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Probability {
    Exact(Rational),
    Power { base: u64, exponent: Rational },
}

impl Probability {
    pub fn power(base: u64, exponent: Rational) -> Self {
        if exponent.is_integer() {
            Probability::Exact(int_power(base, exponent.to_integer()))
        } else {
            Probability::Power { base, exponent }
        }
    }

    fn check_range(&self) -> Result<()> {
        let ok = match self {
            Probability::Exact(q) => !q.is_negative() && *q <= Rational::one(),
            Probability::Power { base, exponent } => {
                *base >= 1 && !exponent.is_positive() || *base == 1
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::param(format!("probability {self} outside [0, 1]")))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Probability::Exact(q) if q.is_zero())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Probability::Exact(q) => q.to_f64().unwrap_or(0.0),
            Probability::Power { base, exponent } => {
                (*base as f64).powf(exponent.to_f64().expect("small exponent"))
            }
        }
    }

    /// `p^k` as a single power term.
    pub fn pow(&self, k: u32) -> PowerSum {
        match self {
            Probability::Exact(q) => PowerSum::constant(q.clone().pow(k)),
            Probability::Power { base, exponent } => PowerSum {
                base: *base,
                terms: vec![(Rational::one(), exponent * Rational::from_integer(k.into()))],
            }
            .normalized(),
        }
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Probability::Exact(q) => write!(f, "{q}"),
            Probability::Power { base, exponent } => write!(f, "{base}^({exponent})"),
        }
    }
}

fn int_power(base: u64, e: BigInt) -> Rational {
    let magnitude = e.abs().to_u32().expect("exponent fits in u32");
    let value = BigInt::from(base).pow(magnitude);
    if e.is_negative() {
        Rational::new(BigInt::one(), value)
    } else {
        Rational::from_integer(value)
    }
}

/// A finite sum `Σ coeff · base^exponent` with nonnegative rational
/// coefficients and rational exponents over one common base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSum {
    base: u64,
    terms: Vec<(Rational, Rational)>,
}

impl PowerSum {
    pub fn constant(value: Rational) -> Self {
        PowerSum {
            base: 1,
            terms: vec![(value, Rational::zero())],
        }
    }

    pub fn zero() -> Self {
        PowerSum {
            base: 1,
            terms: Vec::new(),
        }
    }

    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    fn merged_base(&self, other: &Self) -> u64 {
        match (self.base, other.base) {
            (1, b) | (b, 1) => b,
            (a, b) => {
                assert_eq!(a, b, "power sums over different bases");
                a
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let base = self.merged_base(other);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        PowerSum { base, terms }.normalized()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let base = self.merged_base(other);
        let mut terms = Vec::new();
        for (c1, e1) in &self.terms {
            for (c2, e2) in &other.terms {
                terms.push((c1 * c2, e1 + e2));
            }
        }
        PowerSum { base, terms }.normalized()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        PowerSum {
            base: self.base,
            terms: self
                .terms
                .iter()
                .map(|(c, e)| (c * factor, e.clone()))
                .collect(),
        }
        .normalized()
    }

    /// Divides by a single-term sum.
    pub fn div_monomial(&self, other: &Self) -> Option<Self> {
        let [(c, e)] = other.terms.as_slice() else {
            return None;
        };
        if c.is_zero() {
            return None;
        }
        let base = self.merged_base(other);
        Some(
            PowerSum {
                base,
                terms: self.terms.iter().map(|(c1, e1)| (c1 / c, e1 - e)).collect(),
            }
            .normalized(),
        )
    }

    /// Merges equal exponents, drops zero terms, folds exact powers into the
    /// coefficients, and sorts by exponent.
    fn normalized(mut self) -> Self {
        let base = self.base;
        let mut out: Vec<(Rational, Rational)> = Vec::new();
        for (c, e) in self.terms.drain(..) {
            if c.is_zero() {
                continue;
            }
            let (c, e) = match exact_power(base, &e) {
                Some(v) => (c * v, Rational::zero()),
                None => (c, e),
            };
            match out.iter_mut().find(|(_, e2)| *e2 == e) {
                Some((c2, _)) => *c2 += c,
                None => out.push((c, e)),
            }
        }
        out.sort_by(|a, b| a.1.cmp(&b.1));
        PowerSum { base, terms: out }
    }

    /// Exact value when no irrational power remains.
    pub fn exact(&self) -> Option<Rational> {
        self.terms
            .iter()
            .all(|(_, e)| e.is_zero())
            .then(|| self.terms.iter().map(|(c, _)| c.clone()).sum())
    }

    /// Rational bounds `lo <= value <= hi`, tight to about `digits` decimal
    /// digits of every root.
    pub fn enclosure(&self, digits: u32) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (c, e) in &self.terms {
            let (l, h) = power_enclosure(self.base, e, digits);
            lo += c * l;
            hi += c * h;
        }
        (lo, hi)
    }

    /// True iff the value is provably below `bound`, refining the enclosure
    /// until it decides or the value equals `bound` exactly.
    pub fn is_less_than(&self, bound: &Rational) -> bool {
        if let Some(v) = self.exact() {
            return v < *bound;
        }
        let mut digits = ENCLOSURE_DIGITS;
        loop {
            let (lo, hi) = self.enclosure(digits);
            if hi < *bound {
                return true;
            }
            if lo >= *bound {
                return false;
            }
            digits *= 2;
            assert!(digits <= 5000, "enclosure failed to separate from bound");
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(c, e)| {
                let ln = ln_rational(c) + e.to_f64().unwrap_or(0.0) * (self.base as f64).ln();
                ln.exp()
            })
            .sum()
    }
}

/// `base^e` when it is rational.
fn exact_power(base: u64, e: &Rational) -> Option<Rational> {
    if base <= 1 {
        return None;
    }
    if e.is_integer() {
        return Some(int_power(base, e.to_integer()));
    }
    let num = e.numer().abs().to_u32()?;
    let den = e.denom().to_u32()?;
    let value = BigUint::from(base).pow(num);
    let root = value.nth_root(den);
    if BigUint::pow(&root, den) != value {
        return None;
    }
    let root = Rational::from_integer(BigInt::from(root));
    Some(if e.is_negative() { root.recip() } else { root })
}

fn ln_rational(q: &Rational) -> f64 {
    ln_biguint(&q.numer().magnitude().clone()) - ln_biguint(&q.denom().magnitude().clone())
}

fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Bounds on `base^exponent` with `lo <= value <= hi`.
fn power_enclosure(base: u64, exponent: &Rational, digits: u32) -> (Rational, Rational) {
    if exponent.is_integer() || base <= 1 {
        let v = int_power(base, exponent.to_integer());
        return (v.clone(), v);
    }
    let num = exponent
        .numer()
        .abs()
        .to_u32()
        .expect("exponent numerator fits in u32");
    let den = exponent
        .denom()
        .to_u32()
        .expect("exponent denominator fits in u32");
    let scale = BigUint::from(10u32).pow(digits);
    // floor((base^num · scale^den)^(1/den)) / scale <= base^(num/den)
    let radicand = BigUint::from(base).pow(num) * BigUint::pow(&scale, den);
    let root = radicand.nth_root(den);
    let exact = BigUint::pow(&root, den) == radicand;
    let scale = BigInt::from(scale);
    let lo = Rational::new(BigInt::from(root.clone()), scale.clone());
    let hi = if exact {
        lo.clone()
    } else {
        Rational::new(BigInt::from(root + 1u32), scale)
    };
    if exponent.is_negative() {
        (hi.recip(), lo.recip())
    } else {
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_all_forms() {
        assert_eq!(
            "0.1".parse::<ProbabilitySpec>().unwrap(),
            ProbabilitySpec::Exact(q(1, 10))
        );
        assert_eq!(
            "1e-6".parse::<ProbabilitySpec>().unwrap(),
            ProbabilitySpec::Exact(q(1, 1_000_000))
        );
        assert_eq!(
            "3/40".parse::<ProbabilitySpec>().unwrap(),
            ProbabilitySpec::Exact(q(3, 40))
        );
        assert_eq!(
            "1".parse::<ProbabilitySpec>().unwrap(),
            ProbabilitySpec::Exact(q(1, 1))
        );
        assert_eq!(
            "n^-4".parse::<ProbabilitySpec>().unwrap(),
            ProbabilitySpec::PowerOfN(q(-4, 1))
        );
        assert_eq!(
            "n^-2.75".parse::<ProbabilitySpec>().unwrap(),
            ProbabilitySpec::PowerOfN(q(-11, 4))
        );
        assert_eq!(
            "n^(-11/4)".parse::<ProbabilitySpec>().unwrap(),
            ProbabilitySpec::PowerOfN(q(-11, 4))
        );
        assert!("1.5".parse::<ProbabilitySpec>().is_err());
        assert!("-0.5".parse::<ProbabilitySpec>().is_err());
        assert!("abc".parse::<ProbabilitySpec>().is_err());
        assert!("1/0".parse::<ProbabilitySpec>().is_err());
    }

    #[test]
    fn integer_powers_are_exact() {
        let p = "n^-4".parse::<ProbabilitySpec>().unwrap().at(2000).unwrap();
        assert_eq!(p, Probability::Exact(q(1, 16_000_000_000_000)));
        assert!("n^1/2".parse::<ProbabilitySpec>().unwrap().at(4).is_err());
    }

    #[test]
    fn root_enclosure_brackets_value() {
        let p = "n^-2.75"
            .parse::<ProbabilitySpec>()
            .unwrap()
            .at(200)
            .unwrap();
        let (lo, hi) = p.pow(1).enclosure(30);
        let approx = 200f64.powf(-2.75);
        assert!(lo.to_f64().unwrap() <= approx * (1.0 + 1e-12));
        assert!(hi.to_f64().unwrap() >= approx * (1.0 - 1e-12));
        assert!(lo < hi);
        // p^4 = 200^-11 is exact
        let p4 = p.pow(4);
        assert_eq!(p4.exact().unwrap(), int_power(200, BigInt::from(-11)));
    }

    #[test]
    fn power_sum_comparisons() {
        // 16^(1/2) = 4 exactly
        let s = Probability::Power {
            base: 16,
            exponent: q(1, 2),
        }
        .pow(1);
        assert!(s.is_less_than(&q(41, 10)));
        assert!(!s.is_less_than(&q(4, 1)));
        let s = Probability::Power {
            base: 2,
            exponent: q(1, 2),
        }
        .pow(1);
        assert!(s.is_less_than(&q(1415, 1000)));
        assert!(!s.is_less_than(&q(1414, 1000)));
        assert!((s.to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn power_sum_arithmetic() {
        let x = Probability::Power {
            base: 9,
            exponent: q(1, 4),
        }
        .pow(1); // sqrt(3)
        let sq = x.mul(&x); // 3
        assert_eq!(sq.exact(), Some(q(3, 1)));
        let sum = x.add(&x).scale(&q(1, 2));
        assert_eq!(sum, x);
        let ratio = sq.div_monomial(&x).unwrap(); // sqrt(3)
        assert!((ratio.to_f64() - 3f64.sqrt()).abs() < 1e-12);
    }
}
