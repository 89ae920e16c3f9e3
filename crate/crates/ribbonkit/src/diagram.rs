//! Knot diagrams: Gauss codes and planar diagram (PD) codes.
//!
//! A *Gauss code* records a walk along a knot: at each crossing the walk
//! passes over (`O<id>`) or under (`U<id>`), and every crossing id appears
//! exactly once in each role.  The code is read cyclically.  A *bridge* is a
//! maximal cyclic run of passes of the same kind; a diagram with `c`
//! crossings and a bridge of length `ell` yields a presentation with
//! `c - ell` underpasses, giving the upper bound in
//! [`GaussCode::underpass_upper_bound`].
//!
//! Torus knots come with a systematic diagram: [`torus_gauss`] walks the
//! closure of the braid `(s_1 s_2 ... s_{p-1})^q` and emits its Gauss code,
//! with crossings numbered by the braid letter that created them.
//!
//! A *PD code* lists crossings as `X(a,b,c,d)` — the four arc labels around
//! a crossing, starting at the incoming underpass and proceeding
//! counterclockwise, so `a`/`c` are the underpass arcs and `b`/`d` the
//! overpass arcs — plus `L(a)` entries for closed components that meet no
//! crossing.  Every arc label occurs exactly twice among the `X` entries or
//! exactly once as an `L`.  PD codes feed the bracket machinery in
//! [`crate::jones`].

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::util::UnionFind;

/// Error raised when parsing or constructing a diagram.
#[derive(Debug, Error)]
pub enum DiagramError {
    /// The input text is not a valid code.
    #[error("parse error: {0}")]
    Parse(String),
    /// The parsed structure violates a diagram invariant.
    #[error("invalid diagram: {0}")]
    Invalid(String),
}

/// The role of one pass through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pass {
    /// The strand goes over the crossing.
    Over,
    /// The strand goes under the crossing.
    Under,
}

/// A Gauss code: the cyclic sequence of passes along a knot diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCode {
    events: Vec<(Pass, u32)>,
}

impl GaussCode {
    /// Parses a Gauss code such as `"O1 U2 O3 U1 O2 U3"`.
    ///
    /// Tokens are `O<id>` or `U<id>` (case-insensitive), separated by
    /// whitespace or commas.  Ids must be `1..=c` with every id appearing
    /// exactly once as an overpass and once as an underpass.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let cleaned = text.replace(',', " ");
        let mut events = Vec::new();
        for token in cleaned.split_whitespace() {
            let mut chars = token.chars();
            let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
                Some('O') => Pass::Over,
                Some('U') => Pass::Under,
                _ => {
                    return Err(DiagramError::Parse(format!(
                        "token `{token}` must start with O or U"
                    )))
                }
            };
            let id: u32 = chars.as_str().parse().map_err(|_| {
                DiagramError::Parse(format!("token `{token}` has no crossing id"))
            })?;
            if id == 0 {
                return Err(DiagramError::Parse("crossing ids start at 1".to_string()));
            }
            events.push((kind, id));
        }
        Self::new(events)
    }

    /// Builds a Gauss code from its event list, validating the invariants.
    pub fn new(events: Vec<(Pass, u32)>) -> Result<Self, DiagramError> {
        if events.is_empty() {
            return Err(DiagramError::Invalid("empty diagram".to_string()));
        }
        let count = events.len() / 2;
        if events.len() != 2 * count {
            return Err(DiagramError::Invalid(
                "a Gauss code has two passes per crossing".to_string(),
            ));
        }
        let mut overs = vec![0usize; count];
        let mut unders = vec![0usize; count];
        for &(kind, id) in &events {
            if id == 0 || id as usize > count {
                return Err(DiagramError::Invalid(format!(
                    "crossing ids must be 1..={count}, found {id}"
                )));
            }
            match kind {
                Pass::Over => overs[id as usize - 1] += 1,
                Pass::Under => unders[id as usize - 1] += 1,
            }
        }
        for id in 0..count {
            if overs[id] != 1 || unders[id] != 1 {
                return Err(DiagramError::Invalid(format!(
                    "crossing {} must be passed exactly once over and once under",
                    id + 1
                )));
            }
        }
        Ok(GaussCode { events })
    }

    /// The passes along the walk, in order.
    pub fn events(&self) -> &[(Pass, u32)] {
        &self.events
    }

    /// Number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.events.len() / 2
    }

    /// Length of the longest cyclic run of same-kind passes.
    pub fn max_bridge_length(&self) -> usize {
        let n = self.events.len();
        let kind = |i: usize| self.events[i % n].0;
        let mut best = 1usize;
        let mut run = 1usize;
        for i in 1..2 * n {
            if kind(i) == kind(i - 1) {
                run += 1;
            } else {
                run = 1;
            }
            best = best.max(run.min(n));
        }
        best
    }

    /// Upper bound from the underpass presentation: crossings minus the
    /// longest bridge.
    pub fn underpass_upper_bound(&self) -> usize {
        self.crossing_count() - self.max_bridge_length().min(self.crossing_count())
    }

    /// The code rotated so the walk starts `k` passes later.
    pub fn rotated(&self, k: usize) -> Self {
        let n = self.events.len();
        let events = (0..n).map(|i| self.events[(i + k) % n]).collect();
        GaussCode { events }
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (kind, id)) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let letter = match kind {
                Pass::Over => 'O',
                Pass::Under => 'U',
            };
            write!(f, "{letter}{id}")?;
        }
        Ok(())
    }
}

/// Gauss code of the `(p, q)` torus knot from the closed braid
/// `(s_1 s_2 ... s_{p-1})^q`.
///
/// Both parameters must be at least `2` and coprime (otherwise the closure
/// is a link, which has no single Gauss code).  Crossings are numbered by
/// braid letter, so the code has `q·(p-1)` crossings.  The walk starts on
/// the top strand; at the letter `s_i` the strand at position `i` passes
/// over the strand at position `i + 1`.
pub fn torus_gauss(p: u32, q: u32) -> Result<GaussCode, DiagramError> {
    if p < 2 || q < 2 {
        return Err(DiagramError::Invalid(
            "torus parameters must both be at least 2".to_string(),
        ));
    }
    if gcd(p, q) != 1 {
        return Err(DiagramError::Invalid(format!(
            "torus parameters {p} and {q} must be coprime"
        )));
    }
    let word_len = (q * (p - 1)) as usize;
    let mut events = Vec::with_capacity(2 * word_len);
    let mut position = 1u32;
    for step in 0..(p as usize) * word_len {
        let letter = step % word_len;
        let strand = (letter % (p as usize - 1)) as u32 + 1;
        let id = letter as u32 + 1;
        if position == strand {
            events.push((Pass::Over, id));
            position += 1;
        } else if position == strand + 1 {
            events.push((Pass::Under, id));
            position -= 1;
        }
    }
    debug_assert_eq!(position, 1);
    GaussCode::new(events)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A planar diagram code: crossings plus crossing-free loop components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
    loops: Vec<u32>,
}

impl PdCode {
    /// Parses a PD code such as `"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"`.
    ///
    /// Entries are `X(a,b,c,d)` for crossings and `L(a)` for crossing-free
    /// loops; whitespace and commas between entries are free-form.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let mut crossings = Vec::new();
        let mut loops = Vec::new();
        let mut rest = text.trim_start_matches([' ', '\t', '\n', ','].as_ref());
        while !rest.is_empty() {
            let kind = rest.chars().next().expect("nonempty");
            let kind = kind.to_ascii_uppercase();
            if kind != 'X' && kind != 'L' {
                return Err(DiagramError::Parse(format!(
                    "expected X(...) or L(...), found `{}`",
                    rest.chars().take(12).collect::<String>()
                )));
            }
            let open = rest.find('(').ok_or_else(|| {
                DiagramError::Parse("missing ( after entry letter".to_string())
            })?;
            let close = rest.find(')').ok_or_else(|| {
                DiagramError::Parse("missing ) in entry".to_string())
            })?;
            if rest[1..open].trim() != "" || close < open {
                return Err(DiagramError::Parse(format!(
                    "malformed entry `{}`",
                    &rest[..=close.min(rest.len() - 1)]
                )));
            }
            let labels: Result<Vec<u32>, _> = rest[open + 1..close]
                .split(',')
                .map(|part| part.trim().parse::<u32>())
                .collect();
            let labels = labels.map_err(|_| {
                DiagramError::Parse(format!("bad arc labels in `{}`", &rest[..=close]))
            })?;
            if labels.iter().any(|&label| label == 0) {
                return Err(DiagramError::Parse("arc labels start at 1".to_string()));
            }
            match (kind, labels.len()) {
                ('X', 4) => crossings.push([labels[0], labels[1], labels[2], labels[3]]),
                ('L', 1) => loops.push(labels[0]),
                ('X', n) => {
                    return Err(DiagramError::Parse(format!(
                        "X entries take 4 arc labels, found {n}"
                    )))
                }
                ('L', n) => {
                    return Err(DiagramError::Parse(format!(
                        "L entries take 1 arc label, found {n}"
                    )))
                }
                _ => unreachable!(),
            }
            rest = rest[close + 1..].trim_start_matches([' ', '\t', '\n', ','].as_ref());
        }
        Self::new(crossings, loops)
    }

    /// Builds a PD code, validating that every crossing label occurs exactly
    /// twice and every loop label exactly once.
    pub fn new(crossings: Vec<[u32; 4]>, loops: Vec<u32>) -> Result<Self, DiagramError> {
        if crossings.is_empty() && loops.is_empty() {
            return Err(DiagramError::Invalid("empty diagram".to_string()));
        }
        let mut uses: BTreeMap<u32, usize> = BTreeMap::new();
        for crossing in &crossings {
            for &label in crossing {
                *uses.entry(label).or_default() += 1;
            }
        }
        for (label, count) in &uses {
            if *count != 2 {
                return Err(DiagramError::Invalid(format!(
                    "arc label {label} occurs {count} times among crossings; expected 2"
                )));
            }
        }
        for &label in &loops {
            if uses.insert(label, 1).is_some() {
                return Err(DiagramError::Invalid(format!(
                    "loop label {label} also occurs elsewhere"
                )));
            }
        }
        Ok(PdCode { crossings, loops })
    }

    /// The crossing entries.
    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    /// The crossing-free loop labels.
    pub fn free_loops(&self) -> &[u32] {
        &self.loops
    }

    /// Number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of link components.
    ///
    /// Opposite arcs at a crossing (`a`/`c` and `b`/`d`) belong to the same
    /// strand; components are the classes of that relation, plus one per
    /// crossing-free loop.
    pub fn component_count(&self) -> usize {
        let mut index: BTreeMap<u32, usize> = BTreeMap::new();
        for crossing in &self.crossings {
            for &label in crossing {
                let next = index.len();
                index.entry(label).or_insert(next);
            }
        }
        let mut uf = UnionFind::new(index.len());
        for crossing in &self.crossings {
            uf.union(index[&crossing[0]], index[&crossing[2]]);
            uf.union(index[&crossing[1]], index[&crossing[3]]);
        }
        uf.class_count() + self.loops.len()
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for [a, b, c, d] in &self.crossings {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
            first = false;
        }
        for label in &self.loops {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "L({label})")?;
            first = false;
        }
        Ok(())
    }
}
