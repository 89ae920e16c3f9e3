//! Ribbon codes: trees with signed, labeled edge markings.
//!
//! A ribbon code on `n` vertices is a tree with vertex set `{1, …, n}`
//! together with an ordered list of markings on each edge.  Each marking
//! carries a nonzero label `±i` with `1 ≤ i ≤ n`, referring to vertex `i`.
//! Markings on an edge `(u, v)` are listed in order from the `u` end to the
//! `v` end.  The *fusion number* of a code is its edge count and its *ribbon
//! number* is its marking count; the operations here compute those for the
//! fully reduced form of a code.
//!
//! The module provides the text grammar (`vertices n` / `edge u v : l …`),
//! canonical keys deciding isomorphism (vertex relabeling), the mirror
//! involution (negate every label), the four-part irreducibility check, and
//! the rewrite system that reduces any code to an irreducible one.

use std::fmt;
use thiserror::Error;

/// One edge of a ribbon code, with its ordered marking labels.
///
/// The marking list runs from the `u` end of the edge to the `v` end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    /// First endpoint (the marking list starts at this end).
    pub u: u32,
    /// Second endpoint.
    pub v: u32,
    /// Marking labels in order from `u` to `v`; each label `l` satisfies
    /// `l ≠ 0` and `|l| ≤ n`.
    pub markings: Vec<i32>,
}

/// A ribbon code: a tree on vertices `1..=n` with marked edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonCode {
    n: u32,
    edges: Vec<Edge>,
}

/// A reference to one marking in the global order (edges in list order, and
/// within an edge from the `u` end to the `v` end).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarkingRef {
    /// Index into [`RibbonCode::edges`].
    pub edge: usize,
    /// Position within that edge's marking list.
    pub slot: usize,
    /// The signed label.
    pub label: i32,
}

/// Errors from parsing or validating ribbon codes.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    /// A syntax or validity problem at a specific input line.
    #[error("line {line}: {message}")]
    Parse {
        /// 1-based line number in the input text.
        line: usize,
        /// What went wrong.
        message: String,
    },
    /// A structural validity problem (not tied to an input line).
    #[error("{0}")]
    Invalid(String),
}

/// The first (lowest-numbered) irreducibility condition a code violates,
/// with a leftmost witness.  A code violating none of the four conditions is
/// irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Condition 1: the edge at this index carries no marking.
    UnmarkedEdge {
        /// Index of the offending edge.
        edge: usize,
    },
    /// Condition 2: two adjacent markings on one edge are labeled `i` and
    /// `-i`.
    AdjacentCancellingPair {
        /// Index of the offending edge.
        edge: usize,
        /// Slot of the first marking of the pair.
        slot: usize,
    },
    /// Condition 3: the marking nearest vertex `i` on an incident edge is
    /// labeled `±i`.
    EndMarkingAtOwnVertex {
        /// The vertex whose nearest marking offends.
        vertex: u32,
        /// Index of the offending edge.
        edge: usize,
    },
    /// Condition 4: a vertex of valence 1 or 2 never appears as a label.
    UnusedLowValenceVertex {
        /// The unused vertex.
        vertex: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnmarkedEdge { edge } => {
                write!(f, "condition 1: edge #{} carries no marking", edge + 1)
            }
            Violation::AdjacentCancellingPair { edge, slot } => write!(
                f,
                "condition 2: adjacent cancelling pair on edge #{} at slots {}-{}",
                edge + 1,
                slot + 1,
                slot + 2
            ),
            Violation::EndMarkingAtOwnVertex { vertex, edge } => write!(
                f,
                "condition 3: marking nearest vertex {} on edge #{} is labeled ±{}",
                vertex,
                edge + 1,
                vertex
            ),
            Violation::UnusedLowValenceVertex { vertex } => write!(
                f,
                "condition 4: vertex {} has valence ≤ 2 but never appears as a label",
                vertex
            ),
        }
    }
}

/// Upper bound on vertex count for canonical-key computation, which tries
/// all `n!` relabelings.
pub const CANONICAL_VERTEX_LIMIT: u32 = 9;

impl RibbonCode {
    /// The one-vertex code: no edges, no markings.  It is irreducible and
    /// has trivial Alexander polynomial.
    #[must_use]
    pub fn one_vertex() -> Self {
        RibbonCode { n: 1, edges: Vec::new() }
    }

    /// Builds a code from parts, validating tree structure and labels.
    pub fn new(n: u32, edges: Vec<Edge>) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::Invalid("vertex count must be at least 1".into()));
        }
        if edges.len() != (n - 1) as usize {
            return Err(CodeError::Invalid(format!(
                "a tree on {} vertices needs {} edges, got {}",
                n,
                n - 1,
                edges.len()
            )));
        }
        let mut uf = UnionFind::new(n as usize + 1);
        let mut seen = std::collections::BTreeSet::new();
        for (idx, e) in edges.iter().enumerate() {
            if e.u == 0 || e.u > n || e.v == 0 || e.v > n {
                return Err(CodeError::Invalid(format!(
                    "edge #{} endpoint out of range 1..={}",
                    idx + 1,
                    n
                )));
            }
            if e.u == e.v {
                return Err(CodeError::Invalid(format!(
                    "edge #{} is a self-loop at vertex {}",
                    idx + 1,
                    e.u
                )));
            }
            let key = (e.u.min(e.v), e.u.max(e.v));
            if !seen.insert(key) {
                return Err(CodeError::Invalid(format!(
                    "duplicate edge {}-{}",
                    key.0, key.1
                )));
            }
            if !uf.union(e.u as usize, e.v as usize) {
                return Err(CodeError::Invalid(format!(
                    "edge #{} closes a cycle",
                    idx + 1
                )));
            }
            for &l in &e.markings {
                if l == 0 || l.unsigned_abs() > n {
                    return Err(CodeError::Invalid(format!(
                        "marking label {} on edge #{} outside ±1..±{}",
                        l,
                        idx + 1,
                        n
                    )));
                }
            }
        }
        // n-1 cycle-free edges on n vertices are automatically connected.
        Ok(RibbonCode { n, edges })
    }

    /// Parses the text grammar.  Lines are `vertices <n>` followed by
    /// `edge <u> <v> : <l1> <l2> …` (the colon and labels may be omitted for
    /// an unmarked edge); `#` starts a comment; blank lines are ignored.
    /// Compact one-line form with `;` separators is accepted as well.
    pub fn parse(text: &str) -> Result<Self, CodeError> {
        let canon = text.replace(';', "\n");
        let mut n: Option<(u32, usize)> = None;
        let mut edges = Vec::new();
        let mut edge_lines = Vec::new();
        for (lineno, raw) in canon.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            match words.next() {
                Some("vertices") => {
                    if n.is_some() {
                        return Err(CodeError::Parse {
                            line,
                            message: "duplicate `vertices` directive".into(),
                        });
                    }
                    let count = parse_u32(words.next(), line, "vertex count")?;
                    if count == 0 {
                        return Err(CodeError::Parse {
                            line,
                            message: "vertex count must be at least 1".into(),
                        });
                    }
                    if words.next().is_some() {
                        return Err(CodeError::Parse {
                            line,
                            message: "trailing tokens after `vertices <n>`".into(),
                        });
                    }
                    n = Some((count, line));
                }
                Some("edge") => {
                    if n.is_none() {
                        return Err(CodeError::Parse {
                            line,
                            message: "`edge` before `vertices`".into(),
                        });
                    }
                    let u = parse_u32(words.next(), line, "edge endpoint")?;
                    let v = parse_u32(words.next(), line, "edge endpoint")?;
                    let rest: Vec<&str> = words.collect();
                    let labels: &[&str] = match rest.first() {
                        Some(&":") => &rest[1..],
                        Some(other) => {
                            return Err(CodeError::Parse {
                                line,
                                message: format!(
                                    "expected `:` before marking labels, got {:?}",
                                    other
                                ),
                            })
                        }
                        None => &[],
                    };
                    let mut markings = Vec::with_capacity(labels.len());
                    for tok in labels {
                        let l: i32 = tok.parse().map_err(|_| CodeError::Parse {
                            line,
                            message: format!("bad marking label {:?}", tok),
                        })?;
                        if l == 0 {
                            return Err(CodeError::Parse {
                                line,
                                message: "marking label 0 is not allowed".into(),
                            });
                        }
                        markings.push(l);
                    }
                    edges.push(Edge { u, v, markings });
                    edge_lines.push(line);
                }
                Some(other) => {
                    return Err(CodeError::Parse {
                        line,
                        message: format!("unknown directive {:?}", other),
                    })
                }
                None => unreachable!("blank lines are skipped"),
            }
        }
        let (n, n_line) = n.ok_or(CodeError::Parse {
            line: 1,
            message: "missing `vertices <n>` directive".into(),
        })?;
        RibbonCode::new(n, edges).map_err(|e| match e {
            // Pin structural complaints to the most relevant line so the
            // message points into the user's file.
            CodeError::Invalid(message) => CodeError::Parse {
                line: edge_lines.last().copied().unwrap_or(n_line),
                message,
            },
            other => other,
        })
    }

    /// Number of vertices `n`.
    #[must_use]
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// Number of edges (the raw fusion count of this code).
    #[must_use]
    pub fn edge_count(&self) -> u32 {
        self.edges.len() as u32
    }

    /// Total number of markings (the raw ribbon count of this code).
    #[must_use]
    pub fn marking_count(&self) -> u32 {
        self.edges.iter().map(|e| e.markings.len() as u32).sum()
    }

    /// The edges in list order.
    #[must_use]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// All markings in global order: edges in list order, and within an edge
    /// from the `u` end to the `v` end.
    #[must_use]
    pub fn markings(&self) -> Vec<MarkingRef> {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(edge, e)| {
                e.markings
                    .iter()
                    .enumerate()
                    .map(move |(slot, &label)| MarkingRef { edge, slot, label })
            })
            .collect()
    }

    /// Valence of a vertex.
    #[must_use]
    pub fn degree(&self, vertex: u32) -> usize {
        self.edges
            .iter()
            .filter(|e| e.u == vertex || e.v == vertex)
            .count()
    }

    /// True iff some marking is labeled `±vertex`.
    #[must_use]
    pub fn label_used(&self, vertex: u32) -> bool {
        self.edges
            .iter()
            .any(|e| e.markings.iter().any(|l| l.unsigned_abs() == vertex))
    }

    /// Multi-line serialization in the input grammar.
    #[must_use]
    pub fn serialize(&self) -> String {
        let mut out = format!("vertices {}", self.n);
        for e in &self.edges {
            out.push('\n');
            out.push_str(&edge_text(e));
        }
        out
    }

    /// One-line serialization with `;` separators, parseable by
    /// [`RibbonCode::parse`].
    #[must_use]
    pub fn serialize_compact(&self) -> String {
        let mut parts = vec![format!("vertices {}", self.n)];
        parts.extend(self.edges.iter().map(edge_text));
        parts.join(" ; ")
    }

    /// The mirror code: every marking label negated.  An involution that
    /// mirrors the associated knot.
    #[must_use]
    pub fn mirror(&self) -> Self {
        RibbonCode {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    u: e.u,
                    v: e.v,
                    markings: e.markings.iter().map(|l| -l).collect(),
                })
                .collect(),
        }
    }

    /// Applies a vertex permutation: `perm[i-1]` is the new name of vertex
    /// `i`.  Edge endpoints and marking labels are renamed together; edge
    /// order and marking order are preserved.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `1..=n`.
    #[must_use]
    pub fn relabeled(&self, perm: &[u32]) -> Self {
        assert_eq!(perm.len(), self.n as usize, "permutation length mismatch");
        let mut seen = vec![false; self.n as usize + 1];
        for &p in perm {
            assert!(p >= 1 && p <= self.n && !seen[p as usize], "not a permutation");
            seen[p as usize] = true;
        }
        let map = |v: u32| perm[(v - 1) as usize];
        RibbonCode {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    u: map(e.u),
                    v: map(e.v),
                    markings: e
                        .markings
                        .iter()
                        .map(|&l| l.signum() * map(l.unsigned_abs()) as i32)
                        .collect(),
                })
                .collect(),
        }
    }

    /// Canonical key: equal keys exactly when two codes differ by a vertex
    /// relabeling.  Computed as the minimum, over all `n!` relabelings, of a
    /// normal-form serialization (each edge oriented with its smaller
    /// endpoint first, edges sorted).
    ///
    /// # Panics
    ///
    /// Panics if the code has more than [`CANONICAL_VERTEX_LIMIT`] vertices;
    /// the exhaustive search is meant for the small codes this crate
    /// enumerates.
    #[must_use]
    pub fn canonical_key(&self) -> String {
        assert!(
            self.n <= CANONICAL_VERTEX_LIMIT,
            "canonical_key supports at most {} vertices, got {}",
            CANONICAL_VERTEX_LIMIT,
            self.n
        );
        let mut perm: Vec<u32> = (1..=self.n).collect();
        let mut best: Option<String> = None;
        permute(&mut perm, 0, &mut |p| {
            let candidate = self.relabeled(p).normal_form_text();
            if best.as_ref().map_or(true, |b| candidate < *b) {
                best = Some(candidate);
            }
        });
        best.expect("at least the identity permutation is tried")
    }

    /// Canonical key of the pair `{code, mirror}`: equal exactly when two
    /// codes differ by relabeling and/or mirroring.
    #[must_use]
    pub fn canonical_key_mod_mirror(&self) -> String {
        self.canonical_key().min(self.mirror().canonical_key())
    }

    /// Serialization that is invariant under edge reordering and edge
    /// orientation (but not vertex relabeling).
    fn normal_form_text(&self) -> String {
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                if e.u <= e.v {
                    e.clone()
                } else {
                    Edge {
                        u: e.v,
                        v: e.u,
                        markings: e.markings.iter().rev().copied().collect(),
                    }
                }
            })
            .collect();
        edges.sort_by(|a, b| (a.u, a.v).cmp(&(b.u, b.v)));
        RibbonCode { n: self.n, edges }.serialize_compact()
    }

    /// Checks the four irreducibility conditions in order, returning the
    /// lowest violated condition with a leftmost witness, or `Ok(())` when
    /// the code is irreducible.
    pub fn irreducibility_check(&self) -> Result<(), Violation> {
        // Condition 1: every edge carries at least one marking.
        for (idx, e) in self.edges.iter().enumerate() {
            if e.markings.is_empty() {
                return Err(Violation::UnmarkedEdge { edge: idx });
            }
        }
        // Condition 2: no adjacent i, -i pair on an edge.
        for (idx, e) in self.edges.iter().enumerate() {
            for slot in 0..e.markings.len().saturating_sub(1) {
                if e.markings[slot] == -e.markings[slot + 1] {
                    return Err(Violation::AdjacentCancellingPair { edge: idx, slot });
                }
            }
        }
        // Condition 3: the marking nearest v_i on an incident edge is not
        // labeled ±i.
        for vertex in 1..=self.n {
            for (idx, e) in self.edges.iter().enumerate() {
                let nearest = if e.u == vertex {
                    e.markings.first()
                } else if e.v == vertex {
                    e.markings.last()
                } else {
                    None
                };
                if let Some(l) = nearest {
                    if l.unsigned_abs() == vertex {
                        return Err(Violation::EndMarkingAtOwnVertex { vertex, edge: idx });
                    }
                }
            }
        }
        // Condition 4: every vertex of valence ≤ 2 appears as a label.
        // (Vacuous for the one-vertex code, which has no edges.)
        if self.edge_count() > 0 {
            for vertex in 1..=self.n {
                if self.degree(vertex) <= 2 && !self.label_used(vertex) {
                    return Err(Violation::UnusedLowValenceVertex { vertex });
                }
            }
        }
        Ok(())
    }

    /// True iff no reduction move applies.
    #[must_use]
    pub fn is_irreducible(&self) -> bool {
        self.irreducibility_check().is_ok()
    }

    /// Fully reduces the code, returning the irreducible result.
    ///
    /// Moves are tried in fixed priority with leftmost witnesses:
    /// (a) contract an unmarked edge; (b) delete an adjacent `i, -i` pair;
    /// (c) delete the marking nearest `v_i` when labeled `±i`; (d) delete a
    /// valence-1 vertex whose index is never used as a label, together with
    /// its edge and that edge's markings; (e) splice out a valence-2 unused
    /// vertex, concatenating the marking lists of its two edges.  Vertices
    /// are renumbered to `1..=n'` after structural moves.  Every move
    /// strictly decreases `edges + markings`, so reduction terminates; the
    /// moves mirror the four irreducibility conditions, so the result is
    /// irreducible.  The reduced code preserves the Alexander polynomial of
    /// the input.
    #[must_use]
    pub fn reduce(&self) -> Self {
        self.reduce_with_trace().0
    }

    /// As [`RibbonCode::reduce`], also returning a human-readable move log.
    #[must_use]
    pub fn reduce_with_trace(&self) -> (Self, Vec<String>) {
        let mut code = self.clone();
        let mut trace = Vec::new();
        loop {
            match code.irreducibility_check() {
                Ok(()) => break,
                Err(Violation::UnmarkedEdge { edge }) => {
                    let e = &code.edges[edge];
                    trace.push(format!(
                        "(a) contract unmarked edge {}-{}",
                        e.u, e.v
                    ));
                    code.contract_edge(edge);
                }
                Err(Violation::AdjacentCancellingPair { edge, slot }) => {
                    let e = &mut code.edges[edge];
                    trace.push(format!(
                        "(b) delete adjacent pair {}, {} on edge {}-{}",
                        e.markings[slot],
                        e.markings[slot + 1],
                        e.u,
                        e.v
                    ));
                    e.markings.drain(slot..slot + 2);
                }
                Err(Violation::EndMarkingAtOwnVertex { vertex, edge }) => {
                    let e = &mut code.edges[edge];
                    let slot = if e.u == vertex { 0 } else { e.markings.len() - 1 };
                    trace.push(format!(
                        "(c) delete marking {} nearest vertex {} on edge {}-{}",
                        e.markings[slot], vertex, e.u, e.v
                    ));
                    e.markings.remove(slot);
                }
                Err(Violation::UnusedLowValenceVertex { vertex }) => {
                    if code.degree(vertex) == 1 {
                        let edge = code
                            .edges
                            .iter()
                            .position(|e| e.u == vertex || e.v == vertex)
                            .expect("valence-1 vertex has an incident edge");
                        let e = &code.edges[edge];
                        trace.push(format!(
                            "(d) delete unused leaf vertex {} with edge {}-{} and its markings",
                            vertex, e.u, e.v
                        ));
                        code.edges.remove(edge);
                        code.remove_vertex(vertex);
                    } else {
                        trace.push(format!(
                            "(e) splice out unused valence-2 vertex {}",
                            vertex
                        ));
                        code.splice_vertex(vertex);
                    }
                }
            }
        }
        (code, trace)
    }

    /// Edge count of the reduced code.
    #[must_use]
    pub fn fusion_number(&self) -> u32 {
        self.reduce().edge_count()
    }

    /// Marking count of the reduced code.
    #[must_use]
    pub fn ribbon_number(&self) -> u32 {
        self.reduce().marking_count()
    }

    /// Move (a): contract the (unmarked) edge at `idx`, merging its
    /// endpoints into the smaller one.
    fn contract_edge(&mut self, idx: usize) {
        let e = self.edges.remove(idx);
        debug_assert!(e.markings.is_empty(), "only unmarked edges are contracted");
        let keep = e.u.min(e.v);
        let gone = e.u.max(e.v);
        for edge in &mut self.edges {
            if edge.u == gone {
                edge.u = keep;
            }
            if edge.v == gone {
                edge.v = keep;
            }
            for l in &mut edge.markings {
                if l.unsigned_abs() == gone {
                    *l = l.signum() * keep as i32;
                }
            }
        }
        self.remove_vertex(gone);
    }

    /// Move (e): splice out a valence-2 vertex, concatenating the marking
    /// lists of its two edges in path order.
    fn splice_vertex(&mut self, vertex: u32) {
        let incident: Vec<usize> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.u == vertex || e.v == vertex)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(incident.len(), 2, "splice requires valence 2");
        let (k1, k2) = (incident[0], incident[1]);
        let e2 = self.edges.remove(k2);
        let e1 = std::mem::replace(
            &mut self.edges[k1],
            Edge { u: 0, v: 0, markings: Vec::new() },
        );
        // Traverse e1 from its far end into `vertex`, then e2 onward.
        let (a, mut list) = if e1.v == vertex {
            (e1.u, e1.markings)
        } else {
            (e1.v, e1.markings.into_iter().rev().collect())
        };
        let (b, tail) = if e2.u == vertex {
            (e2.v, e2.markings)
        } else {
            (e2.u, e2.markings.into_iter().rev().collect())
        };
        list.extend(tail);
        self.edges[k1] = Edge { u: a, v: b, markings: list };
        self.remove_vertex(vertex);
    }

    /// Renumbers vertices after `removed` has lost all incidences: names
    /// above it shift down by one, in endpoints and labels alike.
    fn remove_vertex(&mut self, removed: u32) {
        debug_assert!(self.edges.iter().all(|e| e.u != removed && e.v != removed));
        debug_assert!(!self.label_used(removed));
        for e in &mut self.edges {
            if e.u > removed {
                e.u -= 1;
            }
            if e.v > removed {
                e.v -= 1;
            }
            for l in &mut e.markings {
                if l.unsigned_abs() > removed {
                    *l = l.signum() * (l.unsigned_abs() - 1) as i32;
                }
            }
        }
        self.n -= 1;
    }
}

impl fmt::Display for RibbonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize())
    }
}

fn edge_text(e: &Edge) -> String {
    if e.markings.is_empty() {
        format!("edge {} {} :", e.u, e.v)
    } else {
        let labels: Vec<String> = e.markings.iter().map(|l| l.to_string()).collect();
        format!("edge {} {} : {}", e.u, e.v, labels.join(" "))
    }
}

fn parse_u32(tok: Option<&str>, line: usize, what: &str) -> Result<u32, CodeError> {
    let tok = tok.ok_or_else(|| CodeError::Parse {
        line,
        message: format!("missing {}", what),
    })?;
    tok.parse().map_err(|_| CodeError::Parse {
        line,
        message: format!("bad {} {:?}", what, tok),
    })
}

/// Heap's algorithm: calls `visit` with every permutation of `items`.
fn permute(items: &mut [u32], k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Minimal union-find for tree validation.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind { parent: (0..size).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
