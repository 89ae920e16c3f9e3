//! Kauffman bracket and the associated ribbon obstruction.
//!
//! The *bracket* of a planar diagram is the state sum over all smoothings:
//! each crossing `X(a,b,c,d)` is replaced either by the `A`-smoothing,
//! joining arcs `a`–`b` and `c`–`d`, or by the `B`-smoothing, joining
//! `a`–`d` and `b`–`c`.  A state with `k` resulting circles contributes
//! `A^{#A - #B} · δ^{k-1}` where `δ = -A² - A⁻²`.  [`bracket`] computes the
//! sum directly over all `2^n` states; [`bracket_by_skein`] computes the
//! same value by recursively resolving one crossing at a time and is kept as
//! an independent cross-check.
//!
//! The obstruction pipeline evaluates the bracket at a primitive eighth root
//! of unity `ω` (so `A⁴ = -1` and `δ(ω) = 0`):
//!
//! 1. an `n`-component diagram's bracket is divided by `δ^{n-1}` *before*
//!    evaluating ([`divisibility_check`]); failure of exact division is
//!    already an obstruction;
//! 2. the quotient is evaluated in `ℤ[ω]` ([`eval_at_eighth_root`],
//!    [`CycloEight`]);
//! 3. the squared modulus lands in `ℤ[√2]` ([`CycloEight::norm`],
//!    [`QuadSqrt2`]) and equals the squared determinant for a knot;
//! 4. a diagram presentable with `r` fusion bands keeps this value at most
//!    `81^r`, checked exactly by [`ribbon_bound_check`];
//!    [`min_r_from_jones`] inverts the inequality into a bound.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::diagram::PdCode;
use crate::laurent::IntLaurent;
use crate::util::UnionFind;

/// Largest crossing number accepted by the bracket state sum.
pub const STATE_SUM_LIMIT: usize = 24;

/// Error raised by the bracket machinery.
#[derive(Debug, Error)]
pub enum JonesError {
    /// The diagram has too many crossings for the exhaustive state sum.
    #[error("{crossings} crossings exceed the state-sum limit {limit}")]
    Budget {
        /// Crossings in the offending diagram.
        crossings: usize,
        /// The largest accepted crossing number.
        limit: usize,
    },
    /// The bracket is not divisible by `δ^{n-1}`, which already obstructs a
    /// ribbon presentation with `n` fusion components.
    #[error("bracket not divisible by delta^{}", components - 1)]
    NotDivisible {
        /// The claimed component count.
        components: usize,
    },
}

/// The loop value `δ = -A² - A⁻²`.
pub fn delta() -> IntLaurent {
    IntLaurent::from_i64_terms([(2, -1), (-2, -1)])
}

/// Kauffman bracket by the exhaustive state sum.
///
/// Diagrams with more than [`STATE_SUM_LIMIT`] crossings are refused.
pub fn bracket(pd: &PdCode) -> Result<IntLaurent, JonesError> {
    let n = pd.crossing_count();
    if n > STATE_SUM_LIMIT {
        return Err(JonesError::Budget {
            crossings: n,
            limit: STATE_SUM_LIMIT,
        });
    }
    let mut index: BTreeMap<u32, usize> = BTreeMap::new();
    for crossing in pd.crossings() {
        for &label in crossing {
            let next = index.len();
            index.entry(label).or_insert(next);
        }
    }
    let delta = delta();
    // Powers of delta, extended on demand.
    let mut delta_powers = vec![IntLaurent::one()];
    let mut total = IntLaurent::zero();
    for state in 0u64..(1u64 << n) {
        let mut uf = UnionFind::new(index.len());
        let mut exponent = 0i64;
        for (bit, crossing) in pd.crossings().iter().enumerate() {
            let [a, b, c, d] = *crossing;
            if state & (1 << bit) == 0 {
                exponent += 1;
                uf.union(index[&a], index[&b]);
                uf.union(index[&c], index[&d]);
            } else {
                exponent -= 1;
                uf.union(index[&a], index[&d]);
                uf.union(index[&b], index[&c]);
            }
        }
        let loops = uf.class_count() + pd.free_loops().len();
        while delta_powers.len() < loops {
            let next = delta_powers.last().expect("nonempty").mul(&delta);
            delta_powers.push(next);
        }
        total = total.add(&delta_powers[loops - 1].shift(exponent));
    }
    Ok(total)
}

/// Kauffman bracket by recursive crossing resolution.
///
/// Resolves the first crossing into its two smoothings, rewriting arc labels
/// in the remaining crossings, and recurses.  Independent of [`bracket`] in
/// everything but the smoothing convention, so the two serve as mutual
/// cross-checks.
pub fn bracket_by_skein(pd: &PdCode) -> Result<IntLaurent, JonesError> {
    let n = pd.crossing_count();
    if n > STATE_SUM_LIMIT {
        return Err(JonesError::Budget {
            crossings: n,
            limit: STATE_SUM_LIMIT,
        });
    }
    let crossings: Vec<[u32; 4]> = pd.crossings().to_vec();
    Ok(resolve(&crossings, pd.free_loops().len()))
}

fn resolve(crossings: &[[u32; 4]], loops: usize) -> IntLaurent {
    let Some(([a, b, c, d], rest)) = crossings.split_first() else {
        // Every arc is closed once no crossings remain.
        let delta = delta();
        let mut value = IntLaurent::one();
        for _ in 1..loops.max(1) {
            value = value.mul(&delta);
        }
        return value;
    };
    let (rest_a, gained_a) = smooth(rest, [(*a, *b), (*c, *d)]);
    let (rest_b, gained_b) = smooth(rest, [(*a, *d), (*b, *c)]);
    let from_a = resolve(&rest_a, loops + gained_a).shift(1);
    let from_b = resolve(&rest_b, loops + gained_b).shift(-1);
    from_a.add(&from_b)
}

/// Applies two arc joins to the remaining crossings, returning the rewritten
/// crossings and the number of circles closed by the joins.
fn smooth(crossings: &[[u32; 4]], joins: [(u32, u32); 2]) -> (Vec<[u32; 4]>, usize) {
    let mut rewritten = crossings.to_vec();
    let mut gained = 0;
    let (x, y) = joins[0];
    let mut second = joins[1];
    if x == y {
        gained += 1;
    } else {
        for crossing in &mut rewritten {
            for label in crossing {
                if *label == y {
                    *label = x;
                }
            }
        }
        if second.0 == y {
            second.0 = x;
        }
        if second.1 == y {
            second.1 = x;
        }
    }
    let (x, y) = second;
    if x == y {
        gained += 1;
    } else {
        for crossing in &mut rewritten {
            for label in crossing {
                if *label == y {
                    *label = x;
                }
            }
        }
    }
    (rewritten, gained)
}

/// Divides a bracket by `δ^{components - 1}`, exactly or not at all.
///
/// Returns `None` when the division leaves a remainder; for a claimed
/// ribbon presentation with that many fusion components this is already an
/// obstruction.
pub fn divisibility_check(bracket: &IntLaurent, components: usize) -> Option<IntLaurent> {
    let delta = delta();
    let mut value = bracket.clone();
    for _ in 1..components.max(1) {
        value = value.div_exact(&delta)?;
    }
    Some(value)
}

/// An element of `ℤ[ω]` where `ω` is a primitive eighth root of unity,
/// stored as coefficients of `1, ω, ω², ω³` with `ω⁴ = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloEight {
    coeffs: [BigInt; 4],
}

impl CycloEight {
    /// The zero element.
    pub fn zero() -> Self {
        CycloEight {
            coeffs: [
                BigInt::zero(),
                BigInt::zero(),
                BigInt::zero(),
                BigInt::zero(),
            ],
        }
    }

    /// An integer constant.
    pub fn from_int(value: BigInt) -> Self {
        let mut out = Self::zero();
        out.coeffs[0] = value;
        out
    }

    /// The element with the given coefficients of `1, ω, ω², ω³`.
    pub fn new(coeffs: [BigInt; 4]) -> Self {
        CycloEight { coeffs }
    }

    /// The coefficients of `1, ω, ω², ω³`.
    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.coeffs
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The unit `ω^k` for any integer `k`.
    pub fn omega_power(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut out = Self::zero();
        if k < 4 {
            out.coeffs[k] = BigInt::one();
        } else {
            out.coeffs[k - 4] = -BigInt::one();
        }
        out
    }

    /// Sum of two elements.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (lhs, rhs) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *lhs += rhs;
        }
        out
    }

    /// Product of two elements, reducing by `ω⁴ = -1`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, lhs) in self.coeffs.iter().enumerate() {
            for (j, rhs) in other.coeffs.iter().enumerate() {
                let term = lhs * rhs;
                if i + j < 4 {
                    out.coeffs[i + j] += term;
                } else {
                    out.coeffs[i + j - 4] -= term;
                }
            }
        }
        out
    }

    /// Complex conjugate: `ω ↦ ω⁻¹ = -ω³`.
    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = self.coeffs.clone();
        CycloEight {
            coeffs: [c0, -c3, -c2, -c1],
        }
    }

    /// The squared modulus `v·v̄`, which lands in `ℤ[√2]` because
    /// `ω + ω⁻¹ = √2`.
    pub fn norm(&self) -> QuadSqrt2 {
        let product = self.mul(&self.conj());
        let [a, b, c2, c3] = product.coeffs;
        assert!(
            c2.is_zero() && c3 == -b.clone(),
            "squared modulus must be real"
        );
        QuadSqrt2 { a, b }
    }
}

/// An element `a + b·√2` of `ℤ[√2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSqrt2 {
    /// The rational integer part.
    pub a: BigInt,
    /// The coefficient of `√2`.
    pub b: BigInt,
}

impl QuadSqrt2 {
    /// An integer constant.
    pub fn from_int(value: i64) -> Self {
        QuadSqrt2 {
            a: BigInt::from(value),
            b: BigInt::zero(),
        }
    }
}

impl fmt::Display for QuadSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt(2)", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}*sqrt(2)", self.a, self.b)
        }
    }
}

/// Evaluates a Laurent polynomial in `A` at the primitive eighth root `ω`.
pub fn eval_at_eighth_root(poly: &IntLaurent) -> CycloEight {
    let mut out = CycloEight::zero();
    for (exp, coeff) in poly.iter() {
        let unit = CycloEight::omega_power(exp);
        out = out.add(&unit.mul(&CycloEight::from_int(coeff.clone())));
    }
    out
}

/// Squared modulus of the bracket at `ω`, after dividing out `δ^{n-1}` for
/// an `n`-component diagram.
///
/// For a knot this equals the squared determinant.  Failure of the division
/// reports [`JonesError::NotDivisible`].
pub fn jones_det_sq(pd: &PdCode) -> Result<QuadSqrt2, JonesError> {
    let components = pd.component_count();
    let bracket = bracket(pd)?;
    let divided = divisibility_check(&bracket, components)
        .ok_or(JonesError::NotDivisible { components })?;
    Ok(eval_at_eighth_root(&divided).norm())
}

/// Whether `value ≤ 81^r`, decided exactly in `ℤ[√2]`.
///
/// A diagram presentable with `r` fusion bands keeps its squared bracket
/// modulus within this budget, so failure for every small `r` forces bands.
pub fn ribbon_bound_check(value: &QuadSqrt2, r: u32) -> bool {
    let budget = BigInt::from(81).pow(r);
    let margin = &budget - &value.a;
    if value.b.is_zero() {
        return !margin.is_negative();
    }
    let doubled = 2 * &value.b * &value.b;
    if value.b.is_positive() {
        // a + b√2 ≤ N  ⇔  N - a ≥ 0 and 2b² ≤ (N - a)².
        !margin.is_negative() && doubled <= &margin * &margin
    } else {
        // a - |b|√2 ≤ N  ⇔  a ≤ N or (a - N)² ≤ 2b².
        !margin.is_negative() || &margin * &margin <= doubled
    }
}

/// Smallest `r` whose budget admits `value`; the bound grows without limit,
/// so the loop always terminates.
pub fn min_r_from_jones(value: &QuadSqrt2) -> u32 {
    let mut r = 0;
    while !ribbon_bound_check(value, r) {
        r += 1;
    }
    r
}
