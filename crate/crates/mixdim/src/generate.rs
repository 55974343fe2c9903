//! Seeded random graph families.
//!
//! Every generator is a deterministic function of its arguments: the seed
//! feeds a ChaCha8 stream and nothing else contributes randomness.

use std::collections::BTreeSet;

use mixdim_core::{classify, Graph};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("need at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("invalid cactus spec: {0}")]
    InvalidSpec(&'static str),
    #[error("no connected simple graph has {n} vertices and {m} edges")]
    InfeasibleEdgeCount { n: usize, m: usize },
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Edges of a uniformly random labeled tree, decoded from a random Prüfer sequence.
fn tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(GenerateError::TooSmall(n));
    }
    let mut rng = rng_for(seed);
    Ok(Graph::new(n, tree_edges(n, &mut rng)).expect("Prüfer decoding yields a tree"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CactusSpec {
    pub cycle_count: usize,
    /// Inclusive range of cycle lengths.
    pub cycle_length_range: (usize, usize),
    pub extra_tree_edges: usize,
    pub seed: u64,
}

enum Step {
    Cycle,
    Pendant,
}

/// Grows a cactus by attaching cycles and pendant edges at uniformly random
/// existing vertices, then relabels the vertices at random.
pub fn random_cactus(spec: &CactusSpec) -> Result<Graph, GenerateError> {
    let (lo, hi) = spec.cycle_length_range;
    if lo < 3 {
        return Err(GenerateError::InvalidSpec("cycles need length at least 3"));
    }
    if hi < lo {
        return Err(GenerateError::InvalidSpec("empty cycle length range"));
    }
    if spec.cycle_count == 0 && spec.extra_tree_edges == 0 {
        return Err(GenerateError::InvalidSpec(
            "a single vertex is not a graph here",
        ));
    }
    let mut rng = rng_for(spec.seed);
    let mut steps: Vec<Step> = std::iter::repeat_with(|| Step::Cycle)
        .take(spec.cycle_count)
        .chain(std::iter::repeat_with(|| Step::Pendant).take(spec.extra_tree_edges))
        .collect();
    steps.shuffle(&mut rng);

    let mut n = 1;
    let mut edges = Vec::new();
    for step in steps {
        let at = rng.random_range(0..n);
        match step {
            Step::Pendant => {
                edges.push((at, n));
                n += 1;
            }
            Step::Cycle => {
                let len = rng.random_range(lo..=hi);
                let mut ring = vec![at];
                ring.extend(n..n + len - 1);
                n += len - 1;
                edges.extend((0..len).map(|i| (ring[i], ring[(i + 1) % len])));
            }
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let g = Graph::new(n, edges.into_iter().map(|(u, v)| (label[u], label[v])))
        .expect("attach-only growth keeps the graph simple and connected");
    let class = classify(&g);
    assert!(
        class.tag.is_cactus_family() && class.cycle_count == spec.cycle_count,
        "attach-only growth produced {class:?}"
    );
    Ok(g)
}

/// A uniform random spanning tree plus `m - n + 1` distinct random chords.
pub fn random_connected_graph(n: usize, m: usize, seed: u64) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(GenerateError::TooSmall(n));
    }
    if m + 1 < n || m > n * (n - 1) / 2 {
        return Err(GenerateError::InfeasibleEdgeCount { n, m });
    }
    let mut rng = rng_for(seed);
    let mut edges: Vec<(usize, usize)> = tree_edges(n, &mut rng)
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    let present: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let absent: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !present.contains(e))
        .collect();
    edges.extend(absent.choose_multiple(&mut rng, m + 1 - n).copied());
    Ok(Graph::new(n, edges).expect("tree plus distinct chords is simple and connected"))
}
