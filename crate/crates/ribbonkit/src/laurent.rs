//! Exact integer Laurent polynomials and symmetric Alexander classes.
//!
//! `IntLaurent` is a sparse Laurent polynomial in one variable `t` with
//! arbitrary-precision integer coefficients.  It is the common currency of
//! the crate: Alexander polynomials, Kauffman brackets, and factorization
//! witnesses are all values of this type.
//!
//! `AlexClass` is the quotient of nonzero symmetric Laurent polynomials by
//! units `±t^k`: every class has a unique representative that is symmetric
//! about exponent 0 with positive lowest coefficient, and is stored as the
//! half-coefficient tuple from the lowest exponent up to the constant term.
//! The trivial class `(1)` is the constant polynomial 1.
//!
//! All arithmetic is exact; there is no floating point in this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A sparse Laurent polynomial over the integers.
///
/// Stored as a map from exponent to nonzero coefficient; the zero polynomial
/// is the empty map.  Supports exact ring operations, the involution
/// `t ↦ t⁻¹`, evaluation at nonzero integers, and exact division.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntLaurent {
    terms: BTreeMap<i64, BigInt>,
}

/// Failure modes of [`IntLaurent::normalize_alex`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizeError {
    /// The zero polynomial has no Alexander class.
    #[error("cannot normalize the zero polynomial")]
    ZeroInput,
    /// No unit multiple of the input is symmetric under `t ↦ t⁻¹`.
    #[error("polynomial is not symmetric up to units: {0}")]
    NotUnitSymmetric(String),
}

impl IntLaurent {
    /// The zero polynomial.
    #[must_use]
    pub fn zero() -> Self {
        IntLaurent::default()
    }

    /// The constant polynomial 1.
    #[must_use]
    pub fn one() -> Self {
        IntLaurent::monomial(BigInt::one(), 0)
    }

    /// The single-term polynomial `coeff * t^exp` (zero if `coeff` is 0).
    #[must_use]
    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        IntLaurent { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut out = IntLaurent::zero();
        for (e, c) in pairs {
            out.add_term(e, c);
        }
        out
    }

    /// Convenience constructor from machine-integer coefficients.
    pub fn from_i64_terms<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        IntLaurent::from_terms(pairs.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// True iff this is the zero polynomial.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff this is the constant polynomial 1.
    #[must_use]
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&0)
                .map_or(false, |c| c == &BigInt::one())
    }

    /// The coefficient of `t^exp` (zero when absent).
    #[must_use]
    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero
    /// polynomial.
    #[must_use]
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero
    /// polynomial.
    #[must_use]
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Iterates over `(exponent, coefficient)` pairs in increasing exponent
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Number of nonzero terms.
    #[must_use]
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of two polynomials.
    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    /// Difference of two polynomials.
    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Additive inverse.
    #[must_use]
    pub fn neg(&self) -> Self {
        IntLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Product of two polynomials (exact convolution).
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = IntLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by the unit `t^k`.
    #[must_use]
    pub fn shift(&self, k: i64) -> Self {
        IntLaurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The involution `t ↦ t⁻¹` (negates every exponent).
    #[must_use]
    pub fn conj(&self) -> Self {
        IntLaurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluates at a nonzero integer, returning an exact rational (negative
    /// exponents contribute fractions).
    ///
    /// # Panics
    ///
    /// Panics if `x == 0`: Laurent polynomials are not defined at 0.
    #[must_use]
    pub fn eval_int(&self, x: i64) -> BigRational {
        assert!(x != 0, "Laurent polynomial evaluated at 0");
        let big = BigInt::from(x);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = big.pow(e.unsigned_abs() as u32);
            let term = if *e >= 0 {
                BigRational::from(c * p)
            } else {
                BigRational::new(c.clone(), p)
            };
            acc += term;
        }
        acc
    }

    /// Evaluates at `t = -1`, which is always an integer since `(-1)^e = ±1`
    /// for every integer exponent `e`.
    #[must_use]
    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Evaluates at `t = 1` (the coefficient sum).
    #[must_use]
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True iff `self = ±t^k · other` for some integer `k`.
    #[must_use]
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        match (self.min_exp(), other.min_exp()) {
            (None, None) => true,
            (None, _) | (_, None) => false,
            (Some(a), Some(b)) => {
                let shifted = other.shift(a - b);
                *self == shifted || *self == shifted.neg()
            }
        }
    }

    /// Exact division: returns `Some(q)` with `self = q · divisor` when the
    /// division is exact in `Z[t, t⁻¹]`, and `None` otherwise (including
    /// division by zero).  Non-divisibility is an ordinary result, not an
    /// error.
    #[must_use]
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntLaurent::zero());
        }
        // Shift both operands into ordinary polynomials; units are invertible
        // so this changes the quotient only by t^k, restored at the end.
        let lo_n = self.min_exp().unwrap();
        let lo_d = divisor.min_exp().unwrap();
        let deg_n = (self.max_exp().unwrap() - lo_n) as usize;
        let deg_d = (divisor.max_exp().unwrap() - lo_d) as usize;
        if deg_n < deg_d {
            return None;
        }
        let mut num = vec![BigInt::zero(); deg_n + 1];
        for (e, c) in &self.terms {
            num[(e - lo_n) as usize] = c.clone();
        }
        let mut den = vec![BigInt::zero(); deg_d + 1];
        for (e, c) in &divisor.terms {
            den[(e - lo_d) as usize] = c.clone();
        }
        let lead = den[deg_d].clone();
        let mut quot = vec![BigInt::zero(); deg_n - deg_d + 1];
        for k in (0..=deg_n - deg_d).rev() {
            let c = num[k + deg_d].clone();
            if c.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&c, &lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in den.iter().enumerate() {
                num[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        if num.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntLaurent::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + lo_n - lo_d, c)),
        ))
    }

    /// Normalizes a nonzero polynomial that is symmetric up to units into its
    /// [`AlexClass`]: multiply by `±t^k` so the result is symmetric about
    /// exponent 0 with positive lowest coefficient.
    ///
    /// Fails on the zero polynomial and on inputs no unit multiple of which
    /// is symmetric (odd exponent span, genuinely asymmetric coefficients, or
    /// antisymmetric inputs satisfying `p(t) = -p(t⁻¹)` after centering).
    pub fn normalize_alex(&self) -> Result<AlexClass, NormalizeError> {
        let lo = self.min_exp().ok_or(NormalizeError::ZeroInput)?;
        let hi = self.max_exp().unwrap();
        if (lo + hi).rem_euclid(2) != 0 {
            return Err(NormalizeError::NotUnitSymmetric(format!(
                "exponent span {}..{} has odd length and cannot be centered at 0",
                lo, hi
            )));
        }
        let centered = self.shift(-(lo + hi) / 2);
        let flipped = centered.conj();
        if centered != flipped {
            let msg = if centered == flipped.neg() {
                "input is antisymmetric (p(t) = -p(1/t) after centering)".to_string()
            } else {
                let bad = centered
                    .iter()
                    .map(|(e, _)| e)
                    .find(|e| centered.coefficient(*e) != flipped.coefficient(*e))
                    .unwrap();
                format!(
                    "coefficient mismatch at exponent {}: {} vs {} at its mirror",
                    bad,
                    centered.coefficient(bad),
                    centered.coefficient(-bad)
                )
            };
            return Err(NormalizeError::NotUnitSymmetric(msg));
        }
        let d = centered.max_exp().unwrap();
        let lowest = centered.coefficient(-d);
        let fixed = if lowest.is_negative() {
            centered.neg()
        } else {
            centered
        };
        Ok(AlexClass {
            half: (-d..=0).map(|e| fixed.coefficient(e)).collect(),
        })
    }
}

impl fmt::Display for IntLaurent {
    /// Renders terms in increasing exponent order as `coeff*t^exp`, joined by
    /// `+`/`-`, e.g. `2*t^-1 - 5 + 2*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match e {
                0 => write!(f, "{}", mag)?,
                1 => write!(f, "{}*t", mag)?,
                _ => write!(f, "{}*t^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

/// An Alexander polynomial up to units `±t^k`, in normal form.
///
/// Stored as the half-coefficient tuple `(a_{-d}, …, a_0)` of the unique
/// representative that is symmetric about exponent 0 with `a_{-d} > 0`.  The
/// trivial class is `(1)`.  Rendering and parsing use the comma-separated
/// tuple text, e.g. `2,-5` for `2t⁻¹ - 5 + 2t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexClass {
    half: Vec<BigInt>,
}

/// Failure modes of parsing [`AlexClass`] tuple text.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseAlexError {
    /// The text had no entries.
    #[error("empty Alexander tuple")]
    Empty,
    /// An entry was not an integer.
    #[error("bad integer {0:?} in Alexander tuple")]
    BadInteger(String),
    /// The leading (lowest-exponent) entry must be positive.
    #[error("leading entry of Alexander tuple must be positive, got {0}")]
    NonPositiveLead(BigInt),
}

impl AlexClass {
    /// The trivial class `(1)`.
    #[must_use]
    pub fn one() -> Self {
        AlexClass {
            half: vec![BigInt::one()],
        }
    }

    /// True iff this is the trivial class `(1)`.
    #[must_use]
    pub fn is_one(&self) -> bool {
        self.half.len() == 1 && self.half[0].is_one()
    }

    /// The half-coefficient tuple `(a_{-d}, …, a_0)`.
    #[must_use]
    pub fn half_coeffs(&self) -> &[BigInt] {
        &self.half
    }

    /// Constructs directly from a half tuple.
    ///
    /// # Panics
    ///
    /// Panics if the tuple is empty or its leading entry is not positive;
    /// use [`IntLaurent::normalize_alex`] for untrusted input.
    #[must_use]
    pub fn from_half(half: Vec<BigInt>) -> Self {
        assert!(!half.is_empty(), "empty Alexander tuple");
        assert!(
            half[0].is_positive(),
            "leading entry of Alexander tuple must be positive"
        );
        AlexClass { half }
    }

    /// Half tuple from machine integers, for fixtures and tests.
    ///
    /// # Panics
    ///
    /// As [`AlexClass::from_half`].
    #[must_use]
    pub fn from_i64(half: &[i64]) -> Self {
        AlexClass::from_half(half.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The degree `d` of the normal representative (top exponent).
    #[must_use]
    pub fn degree(&self) -> i64 {
        self.half.len() as i64 - 1
    }

    /// The full symmetric representative `a_{-d} t^{-d} + … + a_0 + … +
    /// a_{-d} t^d`.
    #[must_use]
    pub fn to_laurent(&self) -> IntLaurent {
        let d = self.degree();
        IntLaurent::from_terms(self.half.iter().enumerate().flat_map(|(i, c)| {
            let e = i as i64 - d;
            if e == 0 {
                vec![(0, c.clone())]
            } else {
                vec![(e, c.clone()), (-e, c.clone())]
            }
        }))
    }

    /// The knot determinant `|Δ(-1)|` of this class.
    #[must_use]
    pub fn determinant(&self) -> BigInt {
        self.to_laurent().eval_at_minus_one().abs()
    }

    /// The coefficient sum `Δ(1)`, which is `±1` for Alexander polynomials of
    /// knots.
    #[must_use]
    pub fn eval_at_one(&self) -> BigInt {
        self.to_laurent().eval_at_one()
    }
}

impl fmt::Display for AlexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.half.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for AlexClass {
    type Err = ParseAlexError;

    /// Parses tuple text such as `2,-5`; surrounding parentheses and
    /// whitespace are tolerated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Err(ParseAlexError::Empty);
        }
        let mut half = Vec::new();
        for piece in trimmed.split(',') {
            let piece = piece.trim();
            let value = piece
                .parse::<BigInt>()
                .map_err(|_| ParseAlexError::BadInteger(piece.to_string()))?;
            half.push(value);
        }
        if !half[0].is_positive() {
            return Err(ParseAlexError::NonPositiveLead(half[0].clone()));
        }
        Ok(AlexClass { half })
    }
}

impl PartialOrd for AlexClass {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlexClass {
    /// Orders by degree first, then lexicographically on the half tuple;
    /// gives deterministic listings with `(1)` first.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.half
            .len()
            .cmp(&other.half.len())
            .then_with(|| self.half.cmp(&other.half))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(pairs: &[(i64, i64)]) -> IntLaurent {
        IntLaurent::from_i64_terms(pairs.iter().copied())
    }

    #[test]
    fn product_of_symmetric_factors() {
        // (t² - t + 1)(t⁻² - t⁻¹ + 1) = t⁻² - 2t⁻¹ + 3 - 2t + t²
        let p = lp(&[(2, 1), (1, -1), (0, 1)]);
        let q = p.conj();
        let expect = lp(&[(-2, 1), (-1, -2), (0, 3), (1, -2), (2, 1)]);
        assert_eq!(p.mul(&q), expect);
    }

    #[test]
    fn product_two_minus_t_with_conj() {
        // (2 - t)(2 - t⁻¹) = 5 - 2t - 2t⁻¹
        let p = lp(&[(0, 2), (1, -1)]);
        let prod = p.mul(&p.conj());
        assert_eq!(prod, lp(&[(-1, -2), (0, 5), (1, -2)]));
        assert_eq!(
            prod.normalize_alex().unwrap(),
            AlexClass::from_i64(&[2, -5])
        );
    }

    #[test]
    fn eval_at_minus_one_is_exact() {
        let p = lp(&[(-1, 2), (0, -5), (1, 2)]);
        assert_eq!(p.eval_at_minus_one(), BigInt::from(-9));
        assert_eq!(p.eval_at_one(), BigInt::from(-1));
    }

    #[test]
    fn eval_int_handles_negative_exponents() {
        let p = lp(&[(-2, 3), (1, 4)]);
        // 3/x² + 4x at x = 2: 3/4 + 8 = 35/4.
        let v = p.eval_int(2);
        assert_eq!(v, BigRational::new(BigInt::from(35), BigInt::from(4)));
    }

    #[test]
    #[should_panic(expected = "evaluated at 0")]
    fn eval_int_rejects_zero() {
        let _ = lp(&[(1, 1)]).eval_int(0);
    }

    #[test]
    fn normalize_recenters_and_fixes_sign() {
        // -2t² + 5t - 2 is a unit multiple of 2t⁻¹ - 5 + 2t.
        let p = lp(&[(2, -2), (1, 5), (0, -2)]);
        assert_eq!(p.normalize_alex().unwrap(), AlexClass::from_i64(&[2, -5]));
        let q = lp(&[(4, 1), (3, -2), (2, 3), (1, -2), (0, 1)]);
        assert_eq!(
            q.normalize_alex().unwrap(),
            AlexClass::from_i64(&[1, -2, 3])
        );
    }

    #[test]
    fn normalize_keeps_interior_zeros() {
        // t² - 3 + t⁻² → (1, 0, -3).
        let p = lp(&[(2, 1), (0, -3), (-2, 1)]);
        assert_eq!(
            p.normalize_alex().unwrap(),
            AlexClass::from_i64(&[1, 0, -3])
        );
    }

    #[test]
    fn normalize_rejects_zero_odd_span_asymmetric_antisymmetric() {
        assert_eq!(
            IntLaurent::zero().normalize_alex(),
            Err(NormalizeError::ZeroInput)
        );
        assert!(matches!(
            lp(&[(0, 1), (1, 1)]).normalize_alex(),
            Err(NormalizeError::NotUnitSymmetric(_))
        ));
        assert!(matches!(
            lp(&[(-1, 1), (0, 3), (1, 2)]).normalize_alex(),
            Err(NormalizeError::NotUnitSymmetric(_))
        ));
        let anti = lp(&[(1, 1), (-1, -1)]);
        match anti.normalize_alex() {
            Err(NormalizeError::NotUnitSymmetric(msg)) => {
                assert!(msg.contains("antisymmetric"), "diagnostic was {msg:?}")
            }
            other => panic!("expected antisymmetry error, got {other:?}"),
        }
    }

    #[test]
    fn div_exact_detects_non_divisibility() {
        let p = lp(&[(2, 1), (0, 1)]);
        let q = lp(&[(1, 1), (0, 1)]);
        assert_eq!(p.div_exact(&q), None);
        let prod = p.mul(&q);
        assert_eq!(prod.div_exact(&q), Some(p.clone()));
        assert_eq!(prod.div_exact(&IntLaurent::zero()), None);
    }

    #[test]
    fn equal_up_to_units_spans_signs_and_shifts() {
        let p = lp(&[(0, 2), (1, -5), (2, 2)]);
        assert!(p.equal_up_to_units(&p.shift(-4)));
        assert!(p.equal_up_to_units(&p.neg().shift(3)));
        assert!(!p.equal_up_to_units(&lp(&[(0, 2), (1, 5), (2, 2)])));
        assert!(IntLaurent::zero().equal_up_to_units(&IntLaurent::zero()));
        assert!(!IntLaurent::zero().equal_up_to_units(&p));
    }

    #[test]
    fn display_formats() {
        let p = lp(&[(-1, 2), (0, -5), (1, 2)]);
        assert_eq!(p.to_string(), "2*t^-1 - 5 + 2*t");
        assert_eq!(lp(&[(3, -2), (0, 1)]).to_string(), "1 - 2*t^3");
        assert_eq!(IntLaurent::zero().to_string(), "0");
        assert_eq!(AlexClass::from_i64(&[2, -5]).to_string(), "2,-5");
    }

    #[test]
    fn alex_parse_round_trip() {
        for text in ["1", "2,-5", "1,-2,3", "1,0,-3", "(3, -12, 19)"] {
            let class: AlexClass = text.parse().unwrap();
            let rendered = class.to_string();
            let again: AlexClass = rendered.parse().unwrap();
            assert_eq!(class, again);
        }
        assert!("".parse::<AlexClass>().is_err());
        assert!("2,x".parse::<AlexClass>().is_err());
        assert!("-2,5".parse::<AlexClass>().is_err());
    }

    #[test]
    fn alex_determinant_and_ordering() {
        assert_eq!(
            AlexClass::from_i64(&[2, -5]).determinant(),
            BigInt::from(9)
        );
        assert_eq!(
            AlexClass::from_i64(&[1, -2, 3]).determinant(),
            BigInt::from(9)
        );
        assert_eq!(AlexClass::one().determinant(), BigInt::one());
        let mut v = vec![
            AlexClass::from_i64(&[1, -2, 3]),
            AlexClass::one(),
            AlexClass::from_i64(&[2, -5]),
        ];
        v.sort();
        assert_eq!(v[0], AlexClass::one());
        assert_eq!(v[1], AlexClass::from_i64(&[2, -5]));
    }

    fn arb_laurent() -> impl Strategy<Value = IntLaurent> {
        proptest::collection::vec(((-6i64..=6), (-9i64..=9)), 0..6)
            .prop_map(|pairs| IntLaurent::from_i64_terms(pairs))
    }

    fn arb_nonzero_laurent() -> impl Strategy<Value = IntLaurent> {
        arb_laurent().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&IntLaurent::one()), a.clone());
            prop_assert_eq!(a.add(&a.neg()), IntLaurent::zero());
        }

        #[test]
        fn conj_is_a_ring_involution(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_laurent(), b in arb_laurent(), x in prop_oneof![-4i64..=-1, 1i64..=4]) {
            prop_assert_eq!(a.mul(&b).eval_int(x), a.eval_int(x) * b.eval_int(x));
            prop_assert_eq!(a.add(&b).eval_int(x), a.eval_int(x) + b.eval_int(x));
            prop_assert_eq!(
                BigRational::from(a.eval_at_minus_one()),
                a.eval_int(-1)
            );
        }

        #[test]
        fn normalize_is_idempotent_and_unit_invariant(
            p in arb_nonzero_laurent(),
            k in -5i64..=5,
            flip in proptest::bool::ANY,
        ) {
            let sym = p.mul(&p.conj()); // always symmetric and nonzero
            let class = sym.normalize_alex().unwrap();
            prop_assert_eq!(
                class.to_laurent().normalize_alex().unwrap(),
                class.clone()
            );
            let unit_mult = if flip { sym.neg().shift(k) } else { sym.shift(k) };
            prop_assert_eq!(unit_mult.normalize_alex().unwrap(), class);
        }

        #[test]
        fn div_exact_inverts_multiplication(p in arb_laurent(), q in arb_nonzero_laurent()) {
            prop_assert_eq!(p.mul(&q).div_exact(&q), Some(p.clone()));
        }
    }
}
