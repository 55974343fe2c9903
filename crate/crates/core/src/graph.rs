//! Simple undirected connected graphs, hop distances and global invariants.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// An immutable simple connected graph on vertices `0..n`.
///
/// Edges are stored canonically as `(min, max)` in sorted order and every
/// adjacency list is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges, out-of-range
    /// endpoints and disconnected inputs.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 2 {
            return Err(Error::TooSmall { n });
        }
        let mut canon = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(Error::DuplicateEdge { u, v });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph {
            n,
            edges: canon,
            adj,
        };
        let components = g.component_count(&vec![false; n]);
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// `m - n + 1`.
    pub fn cyclomatic(&self) -> usize {
        self.size() + 1 - self.n
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// True when the graph is exactly the cycle `C_n`.
    pub fn is_cycle(&self) -> bool {
        self.size() == self.n && self.adj.iter().all(|a| a.len() == 2)
    }

    /// All vertices followed by all edges, in the canonical element order.
    pub fn elements(&self) -> Vec<Element> {
        (0..self.n)
            .map(Element::Vertex)
            .chain(self.edges.iter().map(|&(u, v)| Element::Edge(u, v)))
            .collect()
    }

    /// Number of connected components after deleting the `removed` vertices.
    pub(crate) fn component_count(&self, removed: &[bool]) -> usize {
        let mut seen = removed.to_vec();
        let mut stack = Vec::new();
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Hop distances from `source` to every vertex.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let next = dist[v] + 1;
            for &w in &self.adj[v] {
                if dist[w] == u32::MAX {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Same as [`Graph::new`].
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

/// A vertex or an edge of a graph. Vertices order before edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    /// Canonical endpoints `(min, max)`.
    Edge(usize, usize),
}

impl Element {
    pub fn edge(u: usize, v: usize) -> Self {
        Element::Edge(u.min(v), u.max(v))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Edge(u, v) => write!(f, "edge {{{u},{v}}}"),
        }
    }
}

/// Dense `n × n` matrix of hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }
}

/// One breadth-first traversal per source.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut data = Vec::with_capacity(n * n);
    for s in 0..n {
        data.extend(g.bfs(s));
    }
    DistanceMatrix { n, data }
}

/// Distance from a vertex or edge to the vertex `s`.
pub fn element_distance(g: &Graph, d: &DistanceMatrix, x: Element, s: usize) -> Result<u32> {
    if s >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: s,
            n: g.order(),
        });
    }
    match x {
        Element::Vertex(v) if v < g.order() => Ok(d.get(v, s)),
        Element::Edge(u, v) if u < v && g.has_edge(u, v) => Ok(d.get(u, s).min(d.get(v, s))),
        _ => Err(Error::UnknownElement(x)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub leaf_set: Vec<usize>,
    pub l1: usize,
    pub cyclomatic: usize,
    pub min_degree: usize,
    pub is_3_connected: bool,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let leaf_set = g.leaves();
    GraphStats {
        l1: leaf_set.len(),
        leaf_set,
        cyclomatic: g.cyclomatic(),
        min_degree: (0..g.order()).map(|v| g.degree(v)).min().unwrap_or(0),
        is_3_connected: is_3_connected(g),
    }
}

/// Decided by deleting every single vertex and every vertex pair.
pub fn is_3_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 {
        return false;
    }
    let mut removed = vec![false; n];
    for a in 0..n {
        removed[a] = true;
        if g.component_count(&removed) != 1 {
            return false;
        }
        for b in a + 1..n {
            removed[b] = true;
            let ok = g.component_count(&removed) == 1;
            removed[b] = false;
            if !ok {
                return false;
            }
        }
        removed[a] = false;
    }
    true
}
