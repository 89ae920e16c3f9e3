//! Pseudo-random ribbon codes for stress testing.
//!
//! The generators here produce structurally valid (but not necessarily
//! irreducible) ribbon codes: a uniform random labeled tree via a random
//! parent sequence, markings scattered over its edges, labels drawn
//! uniformly from `±1..±n`.  They exist so that property suites can hammer
//! the exact-arithmetic pipeline with thousands of inputs; callers seed the
//! RNG to keep failures reproducible.

use crate::code::{Edge, RibbonCode};
use rand::Rng;

/// Generates a random ribbon code with at most `max_markings` markings.
///
/// The tree has between 0 and `max_markings.min(5)` edges (so at most 6
/// vertices, within the canonical-key budget), and the total marking count
/// is at most `max_markings`.  Edges may be unmarked and labels may violate
/// irreducibility; pair with [`RibbonCode::reduce`] when an irreducible code
/// is wanted.
pub fn random_code(rng: &mut impl Rng, max_markings: usize) -> RibbonCode {
    let e = rng.gen_range(0..=max_markings.min(5)) as u32;
    let n = e + 1;
    let mut edges: Vec<Edge> = (2..=n)
        .map(|v| {
            // Attaching each vertex to a random earlier one samples a
            // uniform random labeled tree shape.
            let u = rng.gen_range(1..v);
            Edge { u, v, markings: Vec::new() }
        })
        .collect();
    if !edges.is_empty() {
        let r = rng.gen_range(0..=max_markings);
        for _ in 0..r {
            let idx = rng.gen_range(0..edges.len());
            let slot = rng.gen_range(0..=edges[idx].markings.len());
            let label = random_label(rng, n);
            edges[idx].markings.insert(slot, label);
        }
    }
    RibbonCode::new(n, edges).expect("generated codes are structurally valid")
}

/// A uniform random label in `±1..=±n`.
fn random_label(rng: &mut impl Rng, n: u32) -> i32 {
    let magnitude = rng.gen_range(1..=n) as i32;
    if rng.gen_bool(0.5) {
        magnitude
    } else {
        -magnitude
    }
}

/// A uniform random permutation of `1..=n`, in the form accepted by
/// [`RibbonCode::relabeled`].
pub fn random_permutation(rng: &mut impl Rng, n: u32) -> Vec<u32> {
    let mut perm: Vec<u32> = (1..=n).collect();
    // Fisher-Yates shuffle.
    for i in (1..perm.len()).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// Flips the sign of the marking at global index `which` (mod the marking
/// count), returning the modified code.  Used by determinant-invariance
/// property tests; returns the code unchanged when it has no markings.
pub fn flip_one_sign(code: &RibbonCode, which: usize) -> RibbonCode {
    let marks = code.markings();
    if marks.is_empty() {
        return code.clone();
    }
    let target = marks[which % marks.len()];
    let mut edges: Vec<Edge> = code.edges().to_vec();
    edges[target.edge].markings[target.slot] *= -1;
    RibbonCode::new(code.vertex_count(), edges).expect("sign flip preserves validity")
}
