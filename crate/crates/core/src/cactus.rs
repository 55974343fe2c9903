//! Block decomposition, cactus recognition and per-cycle data.
//!
//! Cycles are reported as rings of vertex ids. Ring positions are the unit
//! used by every per-cycle query here: root flags, the `T_v` partition,
//! active marks and geodesic triples.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Tree,
    Cycle,
    Unicyclic,
    Cactus,
    General,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Tree => "tree",
            ClassTag::Cycle => "cycle",
            ClassTag::Unicyclic => "unicyclic",
            ClassTag::Cactus => "cactus",
            ClassTag::General => "general",
        }
    }

    /// True for every class the closed-form formula covers.
    pub fn is_cactus_family(self) -> bool {
        self != ClassTag::General
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The most specific class of a graph and its number of cycle blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClass {
    pub tag: ClassTag,
    pub cycle_count: usize,
}

/// One cycle of a cactus as an ordered ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInfo {
    pub ring: Vec<usize>,
    /// Ring positions whose vertex has degree at least 3, ascending.
    pub root_positions: Vec<usize>,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.ring.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ring.is_empty()
    }

    pub fn rt(&self) -> usize {
        self.root_positions.len()
    }

    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.ring.iter().position(|&x| x == v)
    }

    pub fn root_vertices(&self) -> Vec<usize> {
        self.root_positions.iter().map(|&i| self.ring[i]).collect()
    }
}

/// For one cycle `C`, the ring position of the component of `G - E(C)`
/// containing each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TvPartition {
    pub anchor: Vec<usize>,
}

impl TvPartition {
    /// Vertices whose component is anchored at ring position `pos`.
    pub fn members(&self, pos: usize) -> Vec<usize> {
        (0..self.anchor.len())
            .filter(|&v| self.anchor[v] == pos)
            .collect()
    }
}

/// Ring positions that are active for a vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActiveMark {
    pub positions: Vec<usize>,
}

impl ActiveMark {
    pub fn count(&self) -> usize {
        self.positions.len()
    }
}

/// Biconnected blocks as edge lists (Hopcroft-Tarjan with an explicit edge stack).
pub(crate) fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        frames.push((root, UNSEEN, 0));
        while let Some(top) = frames.last_mut() {
            let (v, parent, idx) = *top;
            if let Some(&w) = g.neighbors(v).get(idx) {
                top.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent == UNSEEN {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (parent, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    out.push(block);
                }
            }
        }
    }
    out
}

fn block_vertices(block: &[(usize, usize)]) -> Vec<usize> {
    block
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .sorted_unstable()
        .dedup()
        .collect()
}

/// A block with as many edges as vertices is a cycle.
fn is_cycle_block(block: &[(usize, usize)]) -> bool {
    block.len() >= 3 && block_vertices(block).len() == block.len()
}

/// Walks a cycle block from its lowest vertex towards the smaller neighbor.
fn ring_of(block: &[(usize, usize)]) -> Vec<usize> {
    let verts = block_vertices(block);
    let nbrs = |v: usize| -> (usize, usize) {
        let mut it = block
            .iter()
            .filter_map(move |&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            });
        let x = it.next().expect("cycle vertex has two ring neighbors");
        let y = it.next().expect("cycle vertex has two ring neighbors");
        (x.min(y), x.max(y))
    };
    let start = verts[0];
    let mut ring = Vec::with_capacity(verts.len());
    ring.push(start);
    let mut prev = start;
    let mut cur = nbrs(start).0;
    while cur != start {
        ring.push(cur);
        let (a, b) = nbrs(cur);
        let next = if a == prev { b } else { a };
        prev = cur;
        cur = next;
    }
    ring
}

pub fn classify(g: &Graph) -> GraphClass {
    let blocks = blocks(g);
    let cycle_count = blocks.iter().filter(|b| is_cycle_block(b)).count();
    let cactus = blocks.iter().all(|b| b.len() == 1 || is_cycle_block(b));
    let tag = if !cactus {
        ClassTag::General
    } else if cycle_count == 0 {
        ClassTag::Tree
    } else if cycle_count == 1 && g.is_cycle() {
        ClassTag::Cycle
    } else if cycle_count == 1 {
        ClassTag::Unicyclic
    } else {
        ClassTag::Cactus
    };
    GraphClass { tag, cycle_count }
}

/// Cycles of a cactus, sorted by ring. Trees yield an empty list.
pub fn extract_cycles(g: &Graph) -> Result<Vec<CycleInfo>> {
    let blocks = blocks(g);
    if !blocks.iter().all(|b| b.len() == 1 || is_cycle_block(b)) {
        return Err(Error::NotACactus);
    }
    let mut cycles: Vec<CycleInfo> = blocks
        .iter()
        .filter(|b| is_cycle_block(b))
        .map(|b| {
            let ring = ring_of(b);
            let root_positions = (0..ring.len())
                .filter(|&i| g.degree(ring[i]) >= 3)
                .collect();
            CycleInfo {
                ring,
                root_positions,
            }
        })
        .collect();
    cycles.sort_by(|a, b| a.ring.cmp(&b.ring));
    Ok(cycles)
}

pub fn tv_partition(g: &Graph, c: &CycleInfo) -> TvPartition {
    let n = g.order();
    let len = c.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in c.ring.iter().enumerate() {
        pos[v] = i;
    }
    let on_cycle_edge = |u: usize, w: usize| {
        let (pu, pw) = (pos[u], pos[w]);
        pu != usize::MAX && pw != usize::MAX && {
            let diff = pu.abs_diff(pw);
            diff == 1 || diff == len - 1
        }
    };
    let mut anchor = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for (i, &v) in c.ring.iter().enumerate() {
        anchor[v] = i;
        stack.push(v);
        while let Some(x) = stack.pop() {
            for &w in g.neighbors(x) {
                if anchor[w] == usize::MAX && !on_cycle_edge(x, w) {
                    anchor[w] = i;
                    stack.push(w);
                }
            }
        }
    }
    TvPartition { anchor }
}

pub fn active_marks(p: &TvPartition, s: &[usize]) -> ActiveMark {
    let positions = s
        .iter()
        .map(|&v| p.anchor[v])
        .sorted_unstable()
        .dedup()
        .collect();
    ActiveMark { positions }
}

/// Whether three of the `marked` ring positions cut a ring of length `len`
/// into arcs of length at most `len / 2` each.
pub fn has_geodesic_triple(len: usize, marked: &[usize]) -> bool {
    let pts: Vec<usize> = marked.iter().copied().sorted_unstable().dedup().collect();
    if pts.len() < 3 {
        return false;
    }
    let half = len / 2;
    // a < b < c: arcs b - a, c - b and len - (c - a)
    for (i, &a) in pts.iter().enumerate() {
        for (j, &b) in pts.iter().enumerate().skip(i + 1) {
            if b - a > half {
                break;
            }
            let lo = (b + 1).max((a + len).saturating_sub(half));
            let hi = b + half;
            let rest = &pts[j + 1..];
            let k = rest.partition_point(|&c| c < lo);
            if rest.get(k).is_some_and(|&c| c <= hi) {
                return true;
            }
        }
    }
    false
}

/// Smallest maximum arc over all geodesic triples of `pts`.
fn tightest_triple(len: usize, pts: &[usize]) -> Option<usize> {
    let half = len / 2;
    pts.iter()
        .copied()
        .sorted_unstable()
        .dedup()
        .tuple_combinations()
        .map(|(a, b, c)| (b - a).max(c - b).max(len - (c - a)))
        .filter(|&widest| widest <= half)
        .min()
}

/// Smallest set of new ring positions, avoiding `forbidden`, whose union with
/// `marked` has a geodesic triple.
///
/// Among sets of minimum size the one admitting the most even split of the
/// ring wins (smallest widest arc), then the lexicographically smallest
/// ascending sequence.
pub fn augment_for_triple(len: usize, marked: &[usize], forbidden: &[usize]) -> Result<Vec<usize>> {
    if has_geodesic_triple(len, marked) {
        return Ok(Vec::new());
    }
    let blocked: BTreeSet<usize> = marked.iter().chain(forbidden).copied().collect();
    let candidates: Vec<usize> = (0..len).filter(|i| !blocked.contains(i)).collect();
    let mut trial: Vec<usize> = marked.to_vec();
    for k in 1..=3 {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for extra in candidates.iter().copied().combinations(k) {
            trial.truncate(marked.len());
            trial.extend_from_slice(&extra);
            if let Some(widest) = tightest_triple(len, &trial) {
                if best.as_ref().is_none_or(|(w, _)| widest < *w) {
                    best = Some((widest, extra));
                }
            }
        }
        if let Some((_, extra)) = best {
            return Ok(extra);
        }
    }
    Err(Error::Infeasible)
}
