//! Lower and upper bounds for ribbon numbers.
//!
//! Every rule here turns a knot invariant into a bound on the minimal number
//! of markings among ribbon codes presenting the knot.  The lower-bound rules
//! are independent and of very different strength, so [`lower_bound`] runs all
//! of them and reports the maximum together with the rule that achieved it.
//!
//! The rules, in the order used to break ties:
//!
//! * **asserted** — a bound taken from an external source, with citation;
//! * **ribbon set** — the Alexander class first appears in the set realized
//!   with `r` markings, so fewer markings are impossible (see
//!   [`crate::enumerate`]);
//! * **factorization** — an Alexander class realized with `r` markings splits
//!   as `±f(t)·f(1/t)` where `f` has degree at most `r` and the coefficient of
//!   `t^i` is bounded by the binomial coefficient `C(r, i)`; the smallest `r`
//!   admitting such a factor is a lower bound ([`factor_lower_bound`]);
//! * **genus and crosscap** — a knot with Seifert genus at least `2` and
//!   crosscap number at least `3` needs at least `3` markings;
//! * **genus** — the Seifert genus itself is a lower bound;
//! * **unknotting** — half the unknotting number, rounded up;
//! * **determinant** — a code with `r ≥ 1` markings has determinant at most
//!   `(2^r - 1)^2`, so large determinants force many markings;
//! * **nontrivial** — a nontrivial knot (or one with nontrivial Alexander
//!   polynomial) needs at least `2` markings.
//!
//! Upper bounds are always citations of explicit constructions, so they enter
//! as data; [`fusion_upper_bound`] converts a ribbon-number upper bound into
//! one for the fusion number.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::enumerate::{self, EnumerateError};
use crate::laurent::{AlexClass, IntLaurent};

/// Largest factorization degree [`factor_lower_bound`] accepts.
///
/// The search space grows like the product of the binomial coefficients, so
/// degrees beyond this are refused rather than left to run for hours.
pub const FACTOR_DEGREE_LIMIT: u32 = 8;

/// Ribbon sets indexed by marking budget, as produced by
/// [`computed_ribbon_sets`] or loaded from cache files.
///
/// Keys must be contiguous from `0`; the sets are nested, so membership is
/// first tested at the smallest budget.
pub type RibbonSets = BTreeMap<u32, BTreeSet<AlexClass>>;

/// Error produced by the bound engine.
#[derive(Debug, Error)]
pub enum BoundError {
    /// A factorization search was requested beyond [`FACTOR_DEGREE_LIMIT`].
    #[error("factorization degree {requested} exceeds the limit {limit}")]
    Budget {
        /// The degree that was asked for.
        requested: u32,
        /// The largest degree the engine accepts.
        limit: u32,
    },
    /// A computed lower bound exceeds a recorded upper bound.
    #[error("lower bound {lower} exceeds upper bound {upper}")]
    Inconsistent {
        /// The computed lower bound.
        lower: u32,
        /// The recorded upper bound.
        upper: u32,
    },
}

/// The rule that produced a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LowerRule {
    /// Bound asserted by an external source.
    Asserted,
    /// Exclusion from the ribbon sets of smaller budgets.
    RibbonSet,
    /// Absence of an admissible symmetric factorization.
    Factor,
    /// Genus at least two combined with crosscap number at least three.
    GenusCrosscap,
    /// The Seifert genus.
    Genus,
    /// Half the unknotting number, rounded up.
    Unknotting,
    /// The determinant growth bound.
    Determinant,
    /// Nontriviality of the knot or of its Alexander polynomial.
    Nontrivial,
}

impl fmt::Display for LowerRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LowerRule::Asserted => "asserted",
            LowerRule::RibbonSet => "ribbon set",
            LowerRule::Factor => "factorization",
            LowerRule::GenusCrosscap => "genus+crosscap",
            LowerRule::Genus => "genus",
            LowerRule::Unknotting => "unknotting",
            LowerRule::Determinant => "determinant",
            LowerRule::Nontrivial => "nontrivial",
        };
        f.write_str(name)
    }
}

/// A lower bound together with the rule that achieved it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    /// The bound itself.
    pub value: u32,
    /// The strongest rule attaining [`value`](Self::value).
    pub rule: LowerRule,
    /// Human-readable justification for display.
    pub detail: String,
}

/// The invariants of a single knot that feed the bound engine.
///
/// Every field except the Alexander class is optional; rules whose inputs are
/// missing simply do not fire.
#[derive(Clone, Debug)]
pub struct KnotFacts {
    /// Normalized Alexander class.
    pub alex: AlexClass,
    /// Seifert genus, if known.
    pub genus: Option<u32>,
    /// Crosscap (nonorientable genus) number, if known.
    pub crosscap: Option<u32>,
    /// Unknotting number, if known.
    pub unknotting: Option<u32>,
    /// Whether the knot is known to be nontrivial even if its Alexander
    /// polynomial is trivial.
    pub nontrivial: bool,
    /// An externally asserted lower bound with its citation.
    pub asserted_lower: Option<(u32, String)>,
}

impl KnotFacts {
    /// Facts carrying only an Alexander class.
    pub fn from_alex(alex: AlexClass) -> Self {
        KnotFacts {
            alex,
            genus: None,
            crosscap: None,
            unknotting: None,
            nontrivial: false,
            asserted_lower: None,
        }
    }
}

/// Smallest `r` whose marking-count determinant budget admits `det`.
///
/// A code with `r ≥ 1` markings has determinant at most `(2^r - 1)^2`, while
/// a code without markings has determinant exactly `1`.  Determinants of at
/// most `1` therefore force nothing.
pub fn determinant_lower_bound(det: &BigInt) -> u32 {
    if det <= &BigInt::one() {
        return 0;
    }
    let mut r = 1u32;
    loop {
        let cap = (BigInt::one() << r) - BigInt::one();
        if &cap * &cap >= *det {
            return r;
        }
        r += 1;
    }
}

/// Lower bound from the unknotting number: `⌈u / 2⌉`.
pub fn unknotting_lower_bound(unknotting: u32) -> u32 {
    unknotting.div_ceil(2)
}

/// Lower bound of `3` for knots with genus at least `2` and crosscap number
/// at least `3`; `None` when the hypotheses fail.
pub fn genus_crosscap_lower_bound(genus: u32, crosscap: u32) -> Option<u32> {
    (genus >= 2 && crosscap >= 3).then_some(3)
}

/// Smallest budget whose ribbon set contains `alex`.
///
/// The sets are nested, so this is a lower bound: budgets below the returned
/// value cannot realize the class.  A class absent from every provided set
/// yields `max + 1` where `max` is the largest cached budget.
pub fn ribbon_set_lower_bound(alex: &AlexClass, sets: &RibbonSets) -> u32 {
    for (r, set) in sets {
        if set.contains(alex) {
            return *r;
        }
    }
    sets.keys().next_back().map_or(0, |max| max + 1)
}

/// Ribbon sets for every budget up to `rmax`, computed by exhaustive
/// enumeration.
pub fn computed_ribbon_sets(rmax: u32) -> Result<RibbonSets, EnumerateError> {
    let mut sets = RibbonSets::new();
    for r in 0..=rmax {
        sets.insert(r, enumerate::enumerate_report(r)?.ribbon_set);
    }
    Ok(sets)
}

fn binomial(r: u32, i: u32) -> i64 {
    let mut value = 1i64;
    for k in 0..i.min(r - i) {
        value = value * i64::from(r - k) / i64::from(k + 1);
    }
    value
}

/// A polynomial `f` witnessing that `alex` splits as `±f(t)·f(1/t)` with the
/// degree-`r` binomial coefficient profile, or `None` when no such `f` exists.
///
/// The witness has exponents in `0..=r`, coefficient of `t^i` bounded by
/// `C(r, i)` in absolute value, and leading (lowest nonzero) coefficient
/// positive.  Classes realized with `r` markings always admit a witness, so
/// absence proves a lower bound of `r + 1`.
pub fn factor_witness(alex: &AlexClass, r: u32) -> Option<IntLaurent> {
    if alex.degree() > i64::from(r) {
        // `f(t)·f(1/t)` spans twice the span of `f`, which is at most `r`.
        return None;
    }
    let det = alex.determinant();
    let sqrt_det = det.sqrt();
    if &sqrt_det * &sqrt_det != det {
        // `f(-1)^2` equals the determinant, which must be a perfect square.
        return None;
    }
    let caps: Vec<i64> = (0..=r).map(|i| binomial(r, i)).collect();
    let total: i64 = caps.iter().sum();
    if sqrt_det > BigInt::from(total) {
        return None;
    }
    let sqrt_det = i64::try_from(&sqrt_det).expect("small by the capacity check");
    let symmetric = alex.to_laurent();
    let target = if alex.eval_at_one() == BigInt::one() {
        symmetric
    } else {
        symmetric.neg()
    };
    // Suffix capacities bound how far the partial sums can still move.
    let mut slack = vec![0i64; caps.len() + 1];
    for i in (0..caps.len()).rev() {
        slack[i] = slack[i + 1] + caps[i];
    }
    let mut coeffs = vec![0i64; caps.len()];
    search_factor(&mut coeffs, 0, 0, 0, false, &caps, &slack, sqrt_det, &target)
}

#[allow(clippy::too_many_arguments)]
fn search_factor(
    coeffs: &mut [i64],
    index: usize,
    at_one: i64,
    at_minus_one: i64,
    nonzero_seen: bool,
    caps: &[i64],
    slack: &[i64],
    sqrt_det: i64,
    target: &IntLaurent,
) -> Option<IntLaurent> {
    if index == caps.len() {
        if at_one.abs() != 1 || at_minus_one.abs() != sqrt_det {
            return None;
        }
        let f = IntLaurent::from_i64_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as i64, c)),
        );
        return (f.mul(&f.conj()) == *target).then_some(f);
    }
    if (at_one.abs() - slack[index]) > 1 || (at_minus_one.abs() - slack[index]) > sqrt_det {
        return None;
    }
    let cap = caps[index];
    let low = if nonzero_seen { -cap } else { 0 };
    let parity = if index % 2 == 0 { 1 } else { -1 };
    for c in low..=cap {
        coeffs[index] = c;
        if let Some(f) = search_factor(
            coeffs,
            index + 1,
            at_one + c,
            at_minus_one + parity * c,
            nonzero_seen || c != 0,
            caps,
            slack,
            sqrt_det,
            target,
        ) {
            return Some(f);
        }
    }
    coeffs[index] = 0;
    None
}

/// Smallest degree up to `rmax` admitting a factorization witness, with the
/// witness; `(rmax + 1, None)` when every degree fails.
///
/// Degrees beyond [`FACTOR_DEGREE_LIMIT`] are refused with
/// [`BoundError::Budget`].
pub fn factor_lower_bound(
    alex: &AlexClass,
    rmax: u32,
) -> Result<(u32, Option<IntLaurent>), BoundError> {
    if rmax > FACTOR_DEGREE_LIMIT {
        return Err(BoundError::Budget {
            requested: rmax,
            limit: FACTOR_DEGREE_LIMIT,
        });
    }
    for r in 0..=rmax {
        if let Some(f) = factor_witness(alex, r) {
            return Ok((r, Some(f)));
        }
    }
    Ok((rmax + 1, None))
}

/// The strongest lower bound for the knot described by `facts`.
///
/// `sets` supplies cached ribbon sets for the ribbon-set rule (skipped when
/// `None`); `factor_rmax` caps the factorization search.  Ties between rules
/// are broken by the order of [`LowerRule`].
pub fn lower_bound(
    facts: &KnotFacts,
    sets: Option<&RibbonSets>,
    factor_rmax: u32,
) -> Result<LowerBound, BoundError> {
    let mut candidates: Vec<LowerBound> = Vec::new();
    if let Some((value, citation)) = &facts.asserted_lower {
        candidates.push(LowerBound {
            value: *value,
            rule: LowerRule::Asserted,
            detail: citation.clone(),
        });
    }
    if let Some(sets) = sets {
        let value = ribbon_set_lower_bound(&facts.alex, sets);
        let max_cached = sets.keys().next_back().copied().unwrap_or(0);
        let detail = if value > max_cached {
            format!("class not realized with at most {max_cached} markings")
        } else if value == 0 {
            "class realized by the trivial code".to_string()
        } else {
            format!("class not realized with fewer than {value} markings")
        };
        candidates.push(LowerBound {
            value,
            rule: LowerRule::RibbonSet,
            detail,
        });
    }
    let (factor_value, witness) = factor_lower_bound(&facts.alex, factor_rmax)?;
    let detail = match &witness {
        Some(f) if factor_value == 0 => format!("factors trivially as {f}"),
        Some(f) => format!("no admissible factorization below degree {factor_value}; at degree {factor_value}: {f}"),
        None => format!("no admissible factorization through degree {factor_rmax}"),
    };
    candidates.push(LowerBound {
        value: factor_value,
        rule: LowerRule::Factor,
        detail,
    });
    if let (Some(genus), Some(crosscap)) = (facts.genus, facts.crosscap) {
        if let Some(value) = genus_crosscap_lower_bound(genus, crosscap) {
            candidates.push(LowerBound {
                value,
                rule: LowerRule::GenusCrosscap,
                detail: format!("genus {genus} with crosscap number {crosscap}"),
            });
        }
    }
    if let Some(genus) = facts.genus {
        candidates.push(LowerBound {
            value: genus,
            rule: LowerRule::Genus,
            detail: format!("Seifert genus {genus}"),
        });
    }
    if let Some(unknotting) = facts.unknotting {
        candidates.push(LowerBound {
            value: unknotting_lower_bound(unknotting),
            rule: LowerRule::Unknotting,
            detail: format!("unknotting number {unknotting}"),
        });
    }
    let det = facts.alex.determinant();
    let det_value = determinant_lower_bound(&det);
    candidates.push(LowerBound {
        value: det_value,
        rule: LowerRule::Determinant,
        detail: format!("determinant {det}"),
    });
    if !facts.alex.is_one() {
        candidates.push(LowerBound {
            value: 2,
            rule: LowerRule::Nontrivial,
            detail: "nontrivial Alexander polynomial".to_string(),
        });
    } else if facts.nontrivial {
        candidates.push(LowerBound {
            value: 2,
            rule: LowerRule::Nontrivial,
            detail: "recorded as a nontrivial knot".to_string(),
        });
    }
    let mut best = candidates.swap_remove(0);
    for candidate in candidates {
        let earlier_rule = candidate.rule < best.rule;
        if candidate.value > best.value || (candidate.value == best.value && earlier_rule) {
            best = candidate;
        }
    }
    Ok(best)
}

/// Upper bound for the fusion number derived from a ribbon-number upper
/// bound: one less, and only meaningful when the ribbon bound is positive.
pub fn fusion_upper_bound(ribbon_upper: u32) -> Option<u32> {
    (ribbon_upper >= 1).then(|| ribbon_upper - 1)
}

/// Checks that a computed lower bound does not exceed a recorded upper bound.
pub fn check_interval(lower: u32, upper: u32) -> Result<(), BoundError> {
    if lower > upper {
        Err(BoundError::Inconsistent { lower, upper })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegen::random_code;
    use crate::seifert;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alex(half: &[i64]) -> AlexClass {
        AlexClass::from_i64(half)
    }

    fn assert_splits(alex: &AlexClass, f: &IntLaurent) {
        let product = f.mul(&f.conj());
        let symmetric = alex.to_laurent();
        assert!(
            product == symmetric || product == symmetric.neg(),
            "witness {f} does not split {alex}"
        );
    }

    #[test]
    fn determinant_anchor_bounds() {
        for (det, expected) in [
            (1, 0),
            (9, 2),
            (25, 3),
            (49, 3),
            (81, 4),
            (121, 4),
            (169, 4),
            (225, 4),
            (227, 5),
        ] {
            assert_eq!(
                determinant_lower_bound(&BigInt::from(det)),
                expected,
                "determinant {det}"
            );
        }
    }

    #[test]
    fn determinant_bound_is_monotone() {
        let mut previous = 0;
        for det in 1..2000 {
            let value = determinant_lower_bound(&BigInt::from(det));
            assert!(value >= previous);
            previous = value;
        }
    }

    #[test]
    fn unknotting_rounds_up() {
        assert_eq!(unknotting_lower_bound(0), 0);
        assert_eq!(unknotting_lower_bound(1), 1);
        assert_eq!(unknotting_lower_bound(2), 1);
        assert_eq!(unknotting_lower_bound(3), 2);
        assert_eq!(unknotting_lower_bound(7), 4);
    }

    #[test]
    fn genus_crosscap_needs_both_hypotheses() {
        assert_eq!(genus_crosscap_lower_bound(2, 3), Some(3));
        assert_eq!(genus_crosscap_lower_bound(5, 9), Some(3));
        assert_eq!(genus_crosscap_lower_bound(1, 3), None);
        assert_eq!(genus_crosscap_lower_bound(2, 2), None);
    }

    #[test]
    fn factor_witness_for_small_classes() {
        let six_one = alex(&[2, -5]);
        assert!(factor_witness(&six_one, 1).is_none());
        let f = factor_witness(&six_one, 2).expect("degree 2 suffices");
        assert_splits(&six_one, &f);

        let granny_mirror = alex(&[1, -2, 3]);
        let f = factor_witness(&granny_mirror, 2).expect("degree 2 suffices");
        assert_splits(&granny_mirror, &f);

        assert!(factor_witness(&AlexClass::one(), 0).is_some());
    }

    #[test]
    fn factor_respects_the_binomial_profile() {
        // The class (6, -13) only splits through 2t - 3t^2, whose middle
        // coefficient exceeds every degree-2 cap.
        let class = alex(&[6, -13]);
        assert!(factor_witness(&class, 2).is_none());
        let f = factor_witness(&class, 3).expect("degree 3 suffices");
        assert_splits(&class, &f);

        // (4, -12, 17) only splits through 2 - 3t + 2t^2, which no degree-3
        // placement admits.
        let class = alex(&[4, -12, 17]);
        assert!(factor_witness(&class, 3).is_none());
        let f = factor_witness(&class, 4).expect("degree 4 suffices");
        assert_splits(&class, &f);
    }

    #[test]
    fn factor_span_obstruction() {
        // Span 6 cannot come from a factor of degree 2, whatever the
        // determinant (here it is 1).
        let class = alex(&[1, -1, -1, 3]);
        assert!(factor_witness(&class, 2).is_none());
        let f = factor_witness(&class, 3).expect("degree 3 suffices");
        assert_splits(&class, &f);
    }

    #[test]
    fn factor_can_pass_where_set_exclusion_does_not() {
        // (1, 0, -3) splits already in degree 2, although no code with two
        // markings realizes it.
        let class = alex(&[1, 0, -3]);
        let f = factor_witness(&class, 2).expect("degree 2 suffices");
        assert_splits(&class, &f);
    }

    #[test]
    fn factor_rejects_non_square_determinants() {
        // Determinant 3 is not a perfect square, so nothing can split it.
        let class = alex(&[1, -1]);
        assert_eq!(class.determinant(), BigInt::from(3));
        for r in 0..=4 {
            assert!(factor_witness(&class, r).is_none());
        }
    }

    #[test]
    fn factor_lower_bound_values() {
        let cases: [(&[i64], u32); 6] = [
            (&[1], 0),
            (&[2, -5], 2),
            (&[1, -2, 3], 2),
            (&[6, -13], 3),
            (&[1, -1, -1, 3], 3),
            (&[4, -12, 17], 4),
        ];
        for (half, expected) in cases {
            let class = alex(half);
            let (value, witness) = factor_lower_bound(&class, 4).expect("within budget");
            assert_eq!(value, expected, "class {class}");
            assert_splits(&class, &witness.expect("witness at the bound"));
        }
    }

    #[test]
    fn factor_budget_guard() {
        let err = factor_lower_bound(&alex(&[2, -5]), 9).unwrap_err();
        assert!(matches!(err, BoundError::Budget { requested: 9, .. }));
    }

    #[test]
    fn factor_witnesses_are_monotone_in_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xB0); // stable test stream
        for _ in 0..60 {
            let code = random_code(&mut rng, 4);
            let class = seifert::alexander(&code);
            let (value, _) = factor_lower_bound(&class, 5).expect("within budget");
            if value <= 5 {
                for r in value..=5 {
                    assert!(
                        factor_witness(&class, r).is_some(),
                        "witness for {class} lost at degree {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn ribbon_set_rule_uses_smallest_containing_set() {
        let sets = computed_ribbon_sets(3).expect("small budget");
        assert_eq!(ribbon_set_lower_bound(&AlexClass::one(), &sets), 0);
        assert_eq!(ribbon_set_lower_bound(&alex(&[2, -5]), &sets), 2);
        assert_eq!(ribbon_set_lower_bound(&alex(&[1, -2, 3]), &sets), 2);
        assert_eq!(ribbon_set_lower_bound(&alex(&[1, 0, -3]), &sets), 3);
        assert_eq!(ribbon_set_lower_bound(&alex(&[6, -13]), &sets), 4);
    }

    #[test]
    fn combine_prefers_the_strongest_rule() {
        let sets = computed_ribbon_sets(3).expect("small budget");

        // Trivial polynomial, nontrivial knot, asserted bound: the assertion
        // wins the tie against the genus+crosscap rule.
        let facts = KnotFacts {
            alex: AlexClass::one(),
            genus: Some(2),
            crosscap: Some(3),
            unknotting: None,
            nontrivial: true,
            asserted_lower: Some((3, "external computation".to_string())),
        };
        let bound = lower_bound(&facts, Some(&sets), 4).expect("within budget");
        assert_eq!((bound.value, bound.rule), (3, LowerRule::Asserted));

        // Same invariants without the assertion: genus+crosscap takes over.
        let facts = KnotFacts {
            asserted_lower: None,
            alex: alex(&[2, -5]),
            ..facts
        };
        let bound = lower_bound(&facts, Some(&sets), 4).expect("within budget");
        assert_eq!((bound.value, bound.rule), (3, LowerRule::GenusCrosscap));

        // Ribbon-set exclusion beats everything for (6, -13).
        let mut facts = KnotFacts::from_alex(alex(&[6, -13]));
        facts.genus = Some(1);
        let bound = lower_bound(&facts, Some(&sets), 4).expect("within budget");
        assert_eq!((bound.value, bound.rule), (4, LowerRule::RibbonSet));

        // The unknot is bounded by zero.
        let facts = KnotFacts::from_alex(AlexClass::one());
        let bound = lower_bound(&facts, Some(&sets), 4).expect("within budget");
        assert_eq!(bound.value, 0);

        // Without cached sets the factorization rule still reaches 3 here.
        let facts = KnotFacts::from_alex(alex(&[1, -1, -1, 3]));
        let bound = lower_bound(&facts, None, 4).expect("within budget");
        assert_eq!((bound.value, bound.rule), (3, LowerRule::Factor));
    }

    #[test]
    fn interval_checks() {
        assert!(check_interval(2, 3).is_ok());
        assert!(check_interval(3, 3).is_ok());
        let err = check_interval(4, 3).unwrap_err();
        assert!(matches!(err, BoundError::Inconsistent { lower: 4, upper: 3 }));
        assert_eq!(fusion_upper_bound(0), None);
        assert_eq!(fusion_upper_bound(2), Some(1));
    }

    #[test]
    fn every_enumerated_class_factors_at_its_budget() {
        for r in 0..=2u32 {
            let report = enumerate::enumerate_report(r).expect("small budget");
            for class in &report.ribbon_set {
                let f = factor_witness(class, r)
                    .unwrap_or_else(|| panic!("no witness for {class} at degree {r}"));
                assert_splits(class, &f);
            }
        }
    }
}
