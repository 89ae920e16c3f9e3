//! Exhaustive enumeration of irreducible ribbon codes and the Alexander
//! sets they realize.
//!
//! For a marking budget `r`, the enumerator visits every irreducible ribbon
//! code with exactly `r` markings, up to vertex relabeling: an irreducible
//! code has at least one marking per edge, so its tree has `e ≤ r` edges and
//! `e + 1 ≤ r + 1` vertices.  Generation runs over canonical free trees
//! (deduplicated Prüfer sequences), compositions of `r` into `e` positive
//! parts, and signed labels with incremental pruning (end markings never
//! name their own endpoint, adjacent markings never cancel, and every
//! valence-≤-2 vertex must end up used).  Classes are deduplicated by
//! canonical key, optionally also identifying mirror images.
//!
//! The *ribbon set* for budget `r` is the set of Alexander classes of all
//! irreducible codes with at most `r` markings, together with the trivial
//! class; these sets are finite, increase with `r`, and membership bounds
//! ribbon numbers of knots from below.  Reports serialize to a plain-text
//! cache format with a versioned header.

use crate::code::RibbonCode;
use crate::laurent::AlexClass;
use crate::seifert;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};
use std::str::FromStr;
use thiserror::Error;

/// Largest marking budget the enumerator accepts.  The search space grows
/// roughly like `(2r+2)^r`; past this point a smarter generator is needed.
pub const MAX_R: u32 = 5;

/// Errors from enumeration and report serialization.
#[derive(Debug, Error)]
pub enum EnumerateError {
    /// The requested budget exceeds [`MAX_R`].
    #[error("marking budget r = {0} exceeds the supported maximum {MAX_R}")]
    BudgetExceeded(u32),
    /// A cache file was malformed or had the wrong version.
    #[error("ribbon set cache: {0}")]
    Format(String),
    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// The result of enumerating budget `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    /// The marking budget.
    pub r: u32,
    /// Number of isomorphism classes of irreducible codes with exactly `r`
    /// markings.
    pub class_count: u32,
    /// Number of classes with exactly `r` markings when mirror images are
    /// also identified.
    pub class_count_mod_mirror: u32,
    /// Alexander classes of all irreducible codes with at most `r` markings
    /// (always contains the trivial class).
    pub ribbon_set: BTreeSet<AlexClass>,
    /// One witness code per Alexander class, as compact serialization; the
    /// witness has the fewest markings among codes realizing the class,
    /// with canonical-key order breaking ties.
    pub witnesses: BTreeMap<AlexClass, String>,
}

/// Canonical free trees on `n ≥ 1` labeled vertices: one representative
/// edge list per isomorphism class.  Counts for `n = 1..=6` are
/// 1, 1, 1, 2, 3, 6.
#[must_use]
pub fn free_trees(n: u32) -> Vec<Vec<(u32, u32)>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    if n == 2 {
        return vec![vec![(1, 2)]];
    }
    let mut reps: BTreeMap<String, Vec<(u32, u32)>> = BTreeMap::new();
    let len = (n - 2) as usize;
    let mut seq = vec![1u32; len];
    loop {
        let edges = prufer_decode(&seq, n);
        let code = RibbonCode::new(
            n,
            edges
                .iter()
                .map(|&(u, v)| crate::code::Edge { u, v, markings: Vec::new() })
                .collect(),
        )
        .expect("Prüfer decoding yields a tree");
        let key = code.canonical_key();
        reps.entry(key.clone()).or_insert_with(|| {
            RibbonCode::parse(&key)
                .expect("canonical keys parse back")
                .edges()
                .iter()
                .map(|e| (e.u, e.v))
                .collect()
        });
        // Advance the sequence like an odometer over 1..=n.
        let mut i = 0;
        loop {
            if i == len {
                return reps.into_values().collect();
            }
            if seq[i] < n {
                seq[i] += 1;
                break;
            }
            seq[i] = 1;
            i += 1;
        }
    }
}

/// Standard Prüfer decoding into a tree edge list.
fn prufer_decode(seq: &[u32], n: u32) -> Vec<(u32, u32)> {
    let mut degree = vec![1u32; n as usize + 1];
    for &a in seq {
        degree[a as usize] += 1;
    }
    let mut leaves: BTreeSet<u32> = (1..=n).filter(|&v| degree[v as usize] == 1).collect();
    let mut edges = Vec::with_capacity(n as usize - 1);
    for &a in seq {
        let u = *leaves.iter().next().expect("a tree always has a leaf");
        leaves.remove(&u);
        edges.push((u, a));
        degree[a as usize] -= 1;
        if degree[a as usize] == 1 {
            leaves.insert(a);
        }
    }
    let last: Vec<u32> = leaves.into_iter().collect();
    debug_assert_eq!(last.len(), 2);
    edges.push((last[0], last[1]));
    edges
}

/// All compositions of `total` into `parts` positive summands.
fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=total - parts + 1 {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    if total >= parts {
        rec(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// All irreducible codes on the given tree with the given marking counts
/// per edge, found by depth-first label assignment with pruning.
fn assign_labels(tree: &[(u32, u32)], counts: &[u32]) -> Vec<RibbonCode> {
    let n = tree.len() as u32 + 1;
    let mut valence = vec![0u32; n as usize + 1];
    for &(u, v) in tree {
        valence[u as usize] += 1;
        valence[v as usize] += 1;
    }
    // Flat slot list in global marking order.
    let slots: Vec<(usize, usize)> = tree
        .iter()
        .enumerate()
        .flat_map(|(e, _)| (0..counts[e] as usize).map(move |s| (e, s)))
        .collect();
    let mut lists: Vec<Vec<i32>> = counts.iter().map(|&c| Vec::with_capacity(c as usize)).collect();
    let mut used = vec![0u32; n as usize + 1];
    let mut out = Vec::new();

    fn rec(
        tree: &[(u32, u32)],
        counts: &[u32],
        slots: &[(usize, usize)],
        depth: usize,
        n: u32,
        valence: &[u32],
        lists: &mut Vec<Vec<i32>>,
        used: &mut Vec<u32>,
        out: &mut Vec<RibbonCode>,
    ) {
        if depth == slots.len() {
            // Condition 4: every valence-≤-2 vertex appears as a label.
            if (1..=n).all(|v| valence[v as usize] > 2 || used[v as usize] > 0) {
                let code = RibbonCode::new(
                    n,
                    tree.iter()
                        .zip(lists.iter())
                        .map(|(&(u, v), m)| crate::code::Edge { u, v, markings: m.clone() })
                        .collect(),
                )
                .expect("generated codes are valid");
                debug_assert!(code.is_irreducible());
                out.push(code);
            }
            return;
        }
        let (e, s) = slots[depth];
        let (u, v) = tree[e];
        let last = counts[e] as usize - 1;
        for magnitude in 1..=n {
            // Condition 3 at the ends of the edge.
            if (s == 0 && magnitude == u) || (s == last && magnitude == v) {
                continue;
            }
            for sign in [1i32, -1] {
                let label = sign * magnitude as i32;
                // Condition 2 against the previous marking on this edge.
                if s > 0 && lists[e][s - 1] == -label {
                    continue;
                }
                lists[e].push(label);
                used[magnitude as usize] += 1;
                rec(tree, counts, slots, depth + 1, n, valence, lists, used, out);
                used[magnitude as usize] -= 1;
                lists[e].pop();
            }
        }
    }
    rec(tree, counts, &slots, 0, n, &valence, &mut lists, &mut used, &mut out);
    out
}

/// Canonical representatives of all isomorphism classes of irreducible
/// codes with exactly `r` markings, keyed and sorted by canonical key.
///
/// Work is parallelized over (tree, composition) pairs with a
/// deterministic, worker-count-independent merge.
pub fn enumerate_exact(r: u32) -> Result<BTreeMap<String, RibbonCode>, EnumerateError> {
    enumerate_exact_with_progress(r, &|_, _| {})
}

/// As [`enumerate_exact`], reporting `(items_done, items_total)` after each
/// unit of work.
pub fn enumerate_exact_with_progress(
    r: u32,
    progress: &(dyn Fn(usize, usize) + Sync),
) -> Result<BTreeMap<String, RibbonCode>, EnumerateError> {
    if r > MAX_R {
        return Err(EnumerateError::BudgetExceeded(r));
    }
    if r == 0 {
        let code = RibbonCode::one_vertex();
        return Ok(BTreeMap::from([(code.canonical_key(), code)]));
    }
    let mut work: Vec<(Vec<(u32, u32)>, Vec<u32>)> = Vec::new();
    for e in 1..=r {
        for tree in free_trees(e + 1) {
            for comp in compositions(r, e) {
                work.push((tree.clone(), comp));
            }
        }
    }
    let total = work.len();
    let done = std::sync::atomic::AtomicUsize::new(0);
    let batches: Vec<Vec<RibbonCode>> = work
        .par_iter()
        .map(|(tree, comp)| {
            let found = assign_labels(tree, comp);
            let k = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
            progress(k, total);
            found
        })
        .collect();
    // Deterministic sequential merge: the canonical key both deduplicates
    // classes and names the representative (keys parse back into codes).
    let mut classes = BTreeMap::new();
    for code in batches.into_iter().flatten() {
        let key = code.canonical_key();
        classes.entry(key.clone()).or_insert_with(|| {
            RibbonCode::parse(&key).expect("canonical keys parse back")
        });
    }
    Ok(classes)
}

/// Runs the full enumeration for budget `r` and assembles the report.
pub fn enumerate_report(r: u32) -> Result<EnumerationReport, EnumerateError> {
    enumerate_report_with_progress(r, &|_, _| {})
}

/// As [`enumerate_report`], forwarding progress from the exact-`r` stage
/// (the dominant cost).
pub fn enumerate_report_with_progress(
    r: u32,
    progress: &(dyn Fn(usize, usize) + Sync),
) -> Result<EnumerationReport, EnumerateError> {
    let mut ribbon_set = BTreeSet::new();
    let mut witnesses: BTreeMap<AlexClass, String> = BTreeMap::new();
    let mut class_count = 0;
    let mut class_count_mod_mirror = 0;
    for k in 0..=r {
        let classes = if k == r {
            enumerate_exact_with_progress(k, progress)?
        } else {
            enumerate_exact(k)?
        };
        if k == r {
            class_count = classes.len() as u32;
            class_count_mod_mirror = classes
                .values()
                .map(|c| c.canonical_key_mod_mirror())
                .collect::<BTreeSet<_>>()
                .len() as u32;
        }
        // Keys iterate in sorted order, so the first witness of a class is
        // the one with smallest (marking count, canonical key).
        for code in classes.values() {
            let alex = seifert::alexander(code);
            ribbon_set.insert(alex.clone());
            witnesses
                .entry(alex)
                .or_insert_with(|| code.serialize_compact());
        }
    }
    Ok(EnumerationReport {
        r,
        class_count,
        class_count_mod_mirror,
        ribbon_set,
        witnesses,
    })
}

impl EnumerationReport {
    /// Serializes to the cache format: a versioned header line
    /// `ribbonset v1 r=<r> classes=<iso> mirror_classes=<m> members=<k>`
    /// followed by one `<alex tuple> | <witness code>` line per member.
    pub fn save<W: Write>(&self, mut out: W) -> Result<(), EnumerateError> {
        writeln!(
            out,
            "ribbonset v1 r={} classes={} mirror_classes={} members={}",
            self.r,
            self.class_count,
            self.class_count_mod_mirror,
            self.ribbon_set.len()
        )?;
        for alex in &self.ribbon_set {
            let witness = self
                .witnesses
                .get(alex)
                .expect("every member has a witness");
            writeln!(out, "{} | {}", alex, witness)?;
        }
        Ok(())
    }

    /// The cache text as a string.
    #[must_use]
    pub fn to_cache_text(&self) -> String {
        let mut buf = Vec::new();
        self.save(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("cache text is UTF-8")
    }

    /// Parses the cache format, rejecting unknown versions and malformed
    /// lines.
    pub fn load<R: BufRead>(input: R) -> Result<Self, EnumerateError> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| EnumerateError::Format("empty cache file".into()))??;
        let mut words = header.split_whitespace();
        if words.next() != Some("ribbonset") {
            return Err(EnumerateError::Format(
                "missing `ribbonset` magic in header".into(),
            ));
        }
        match words.next() {
            Some("v1") => {}
            Some(other) => {
                return Err(EnumerateError::Format(format!(
                    "unsupported cache version {:?} (expected v1)",
                    other
                )))
            }
            None => return Err(EnumerateError::Format("truncated header".into())),
        }
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| EnumerateError::Format(format!("bad header field {:?}", w)))?;
            fields.insert(k, v);
        }
        let get = |k: &str| -> Result<u32, EnumerateError> {
            fields
                .get(k)
                .ok_or_else(|| EnumerateError::Format(format!("header missing {}=", k)))?
                .parse()
                .map_err(|_| EnumerateError::Format(format!("bad {}= value", k)))
        };
        let r = get("r")?;
        let class_count = get("classes")?;
        let class_count_mod_mirror = get("mirror_classes")?;
        let members = get("members")?;
        let mut ribbon_set = BTreeSet::new();
        let mut witnesses = BTreeMap::new();
        for (idx, line) in lines.enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let (alex_text, witness) = trimmed.split_once('|').ok_or_else(|| {
                EnumerateError::Format(format!("line {}: missing `|`", idx + 2))
            })?;
            let alex = AlexClass::from_str(alex_text.trim()).map_err(|e| {
                EnumerateError::Format(format!("line {}: {}", idx + 2, e))
            })?;
            let witness = witness.trim().to_string();
            RibbonCode::parse(&witness).map_err(|e| {
                EnumerateError::Format(format!("line {}: bad witness: {}", idx + 2, e))
            })?;
            ribbon_set.insert(alex.clone());
            witnesses.insert(alex, witness);
        }
        if ribbon_set.len() as u32 != members {
            return Err(EnumerateError::Format(format!(
                "header claims {} members but file has {}",
                members,
                ribbon_set.len()
            )));
        }
        Ok(EnumerationReport {
            r,
            class_count,
            class_count_mod_mirror,
            ribbon_set,
            witnesses,
        })
    }

    /// Conventional cache file name for budget `r`.
    #[must_use]
    pub fn file_name(r: u32) -> String {
        format!("r{}.ribbonset", r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set_of(tuples: &[&[i64]]) -> BTreeSet<AlexClass> {
        tuples.iter().map(|t| AlexClass::from_i64(t)).collect()
    }

    #[test]
    fn free_tree_counts_match_the_classics() {
        let counts: Vec<usize> = (1..=6).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6]);
    }

    #[test]
    fn budget_zero_and_one() {
        let zero = enumerate_report(0).unwrap();
        assert_eq!(zero.class_count, 1);
        assert_eq!(zero.ribbon_set, set_of(&[&[1]]));
        let one = enumerate_report(1).unwrap();
        assert_eq!(one.class_count, 0);
        assert_eq!(one.class_count_mod_mirror, 0);
        assert_eq!(one.ribbon_set, set_of(&[&[1]]));
    }

    #[test]
    fn budget_two_realizes_exactly_three_classes() {
        let report = enumerate_report(2).unwrap();
        assert_eq!(report.class_count, 3);
        assert_eq!(report.class_count_mod_mirror, 2);
        assert_eq!(report.ribbon_set, set_of(&[&[1], &[2, -5], &[1, -2, 3]]));
        // Witnesses parse and realize their classes with ≤ 2 markings.
        for (alex, witness) in &report.witnesses {
            let code = RibbonCode::parse(witness).unwrap();
            assert!(code.marking_count() <= 2);
            assert_eq!(&seifert::alexander(&code), alex);
        }
    }

    #[test]
    fn budget_three_matches_the_published_classification() {
        let report = enumerate_report(3).unwrap();
        assert_eq!(report.class_count_mod_mirror, 8);
        let expected = set_of(&[
            &[1],
            &[2, -5],
            &[1, -2, 3],
            &[2, -6, 9],
            &[1, -3, 5, -7],
            &[1, -5, 11, -15],
            &[3, -12, 19],
            &[1, -6, 11],
            &[1, -1, -1, 3],
            &[1, 0, -3],
        ]);
        assert_eq!(report.ribbon_set, expected);
        // Exactly-3 classes split by edge count as 2 + 4 + 2 mod mirror.
        let classes = enumerate_exact(3).unwrap();
        let mut by_edges: BTreeMap<u32, BTreeSet<String>> = BTreeMap::new();
        for code in classes.values() {
            by_edges
                .entry(code.edge_count())
                .or_default()
                .insert(code.canonical_key_mod_mirror());
        }
        let split: Vec<usize> = by_edges.values().map(|s| s.len()).collect();
        assert_eq!(split, vec![2, 4, 2]);
    }

    #[test]
    fn enumerated_codes_are_irreducible_with_fusion_at_most_ribbon() {
        for r in 0..=4 {
            for code in enumerate_exact(r).unwrap().values() {
                assert!(code.is_irreducible());
                assert_eq!(code.marking_count(), r);
                assert!(code.edge_count() <= code.marking_count() || r == 0);
            }
        }
    }

    #[test]
    fn ribbon_sets_are_monotone() {
        let mut previous = BTreeSet::new();
        for r in 0..=4 {
            let report = enumerate_report(r).unwrap();
            assert!(report.ribbon_set.is_superset(&previous));
            assert!(report.ribbon_set.contains(&AlexClass::one()));
            previous = report.ribbon_set;
        }
    }

    #[test]
    fn budget_guard_rejects_oversized_requests() {
        assert!(matches!(
            enumerate_report(MAX_R + 1),
            Err(EnumerateError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn cache_round_trip_and_version_check() {
        let report = enumerate_report(3).unwrap();
        let text = report.to_cache_text();
        assert!(text.starts_with("ribbonset v1 r=3 "));
        let loaded = EnumerationReport::load(text.as_bytes()).unwrap();
        assert_eq!(loaded, report);
        let err = EnumerationReport::load("ribbonset v9 r=1".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("version"));
        assert!(EnumerationReport::load("garbage".as_bytes()).is_err());
    }

    #[test]
    fn output_is_worker_count_independent() {
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| enumerate_report(3).unwrap());
        let many = rayon::ThreadPoolBuilder::new()
            .num_threads(8)
            .build()
            .unwrap()
            .install(|| enumerate_report(3).unwrap());
        assert_eq!(single.to_cache_text(), many.to_cache_text());
    }
}
