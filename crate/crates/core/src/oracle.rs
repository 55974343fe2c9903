//! Definition-level ground truth for mixed metric generators.
//!
//! Nothing here uses cycle structure. A set is checked by comparing the
//! distance profiles of all `n + m` elements, and the dimension is found by
//! exhaustive search over vertex subsets.

use alloc::vec::Vec;

use itertools::Itertools;

use crate::graph::{all_pairs_distances, Element, Graph};
use crate::{Error, Result};

/// Outcome of a generator check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub generator: bool,
    /// Two distinct elements with equal profiles, when the check fails.
    pub failing_pair: Option<(Element, Element)>,
}

/// Distances from every element to every vertex, rows in element order.
struct ElementTable {
    elements: Vec<Element>,
    n: usize,
    dist: Vec<u32>,
}

impl ElementTable {
    fn new(g: &Graph) -> Self {
        let d = all_pairs_distances(g);
        let n = g.order();
        let elements = g.elements();
        let mut dist = Vec::with_capacity(elements.len() * n);
        for x in &elements {
            match *x {
                Element::Vertex(v) => dist.extend_from_slice(d.row(v)),
                Element::Edge(u, v) => {
                    dist.extend(d.row(u).iter().zip(d.row(v)).map(|(&a, &b)| a.min(b)))
                }
            }
        }
        ElementTable { elements, n, dist }
    }

    fn at(&self, x: usize, s: usize) -> u32 {
        self.dist[x * self.n + s]
    }

    /// Sorts element indices by profile and returns the first collision.
    ///
    /// Elements are ordered by `(profile, element)`, so the reported pair has
    /// the smallest shared profile and within it the two smallest elements.
    fn first_collision(&self, set: &[usize], order: &mut Vec<usize>) -> Option<(usize, usize)> {
        order.clear();
        order.extend(0..self.elements.len());
        let cmp = |a: &usize, b: &usize| {
            set.iter()
                .map(|&s| self.at(*a, s))
                .cmp(set.iter().map(|&s| self.at(*b, s)))
        };
        order.sort_by(|a, b| cmp(a, b).then(a.cmp(b)));
        order
            .windows(2)
            .find(|w| cmp(&w[0], &w[1]).is_eq())
            .map(|w| (w[0], w[1]))
    }
}

fn validate(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&v) = s.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(s.iter().copied().sorted_unstable().dedup().collect())
}

/// Checks whether `s` distinguishes every pair of elements of `V(G) ∪ E(G)`.
pub fn is_mixed_generator(g: &Graph, s: &[usize]) -> Result<Verdict> {
    let set = validate(g, s)?;
    let table = ElementTable::new(g);
    let mut order = Vec::new();
    let failing_pair = table
        .first_collision(&set, &mut order)
        .map(|(a, b)| (table.elements[a], table.elements[b]));
    Ok(Verdict {
        generator: failing_pair.is_none(),
        failing_pair,
    })
}

/// Vertices every mixed metric generator must contain: the leaves.
///
/// A leaf outside `S` leaves its neighbor and its pendant edge with equal
/// profiles.
pub fn forced_vertices(g: &Graph) -> Vec<usize> {
    g.leaves()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Maximum number of non-leaf candidate vertices searched over.
    pub max_candidates: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_candidates: 16 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForce {
    pub value: usize,
    /// Lexicographically first minimum generator, ascending.
    pub witness: Vec<usize>,
}

/// Mixed metric dimension by exhaustive search.
///
/// Every candidate set contains all leaves. The remaining vertices are added
/// in increasing cardinality and lexicographic order, so the first generator
/// found is both minimum and lexicographically first.
pub fn brute_force_mdim(g: &Graph, limits: OracleLimits) -> Result<BruteForce> {
    let forced = forced_vertices(g);
    let candidates: Vec<usize> = (0..g.order())
        .filter(|v| forced.binary_search(v).is_err())
        .collect();
    if candidates.len() > limits.max_candidates {
        return Err(Error::TooLarge {
            candidates: candidates.len(),
            max: limits.max_candidates,
        });
    }
    let table = ElementTable::new(g);
    let mut order = Vec::new();
    let mut set = Vec::with_capacity(g.order());
    for k in 0..=candidates.len() {
        for extra in candidates.iter().copied().combinations(k) {
            if forced.is_empty() && extra.is_empty() {
                continue;
            }
            set.clear();
            set.extend(forced.iter().chain(&extra).copied());
            set.sort_unstable();
            if table.first_collision(&set, &mut order).is_none() {
                return Ok(BruteForce {
                    value: set.len(),
                    witness: set,
                });
            }
        }
    }
    unreachable!("the full vertex set is always a mixed metric generator")
}
