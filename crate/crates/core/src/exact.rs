//! Exact mixed metric dimension of trees, unicyclic graphs and cacti.
//!
//! For a cactus with cycles `C_1..C_c` the value is
//!
//! ```text
//! mdim(G) = L1(G) + Σ max{3 - rt(C_i), 0} + Δ
//! ```
//!
//! where `rt(C)` counts the root vertices of `C` (degree at least 3) and `Δ`
//! counts the cycles with `rt ≥ 3` whose roots contain no geodesic triple.
//! A tree has no cycle terms, so its value is the number of leaves.

use alloc::vec::Vec;

use crate::cactus::{
    augment_for_triple, classify, extract_cycles, has_geodesic_triple, ClassTag, CycleInfo,
};
use crate::graph::Graph;
use crate::oracle::is_mixed_generator;
use crate::{Error, Result};

/// Contribution of one cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleTerm {
    /// Index into the cycle list returned by [`extract_cycles`].
    pub id: usize,
    pub rt: usize,
    /// `max{3 - rt, 0}`.
    pub term: usize,
    /// `rt ≥ 3` and the roots admit no geodesic triple.
    pub needs_delta: bool,
}

impl CycleTerm {
    pub fn contribution(&self) -> usize {
        self.term + usize::from(self.needs_delta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdimReport {
    pub l1: usize,
    pub cycles: Vec<CycleTerm>,
    pub delta: usize,
    pub total: usize,
}

fn cycle_term(id: usize, c: &CycleInfo) -> CycleTerm {
    let rt = c.rt();
    CycleTerm {
        id,
        rt,
        term: 3usize.saturating_sub(rt),
        needs_delta: rt >= 3 && !has_geodesic_triple(c.len(), &c.root_positions),
    }
}

fn cactus_cycles(g: &Graph) -> Result<Vec<CycleInfo>> {
    if !classify(g).tag.is_cactus_family() {
        return Err(Error::NotACactus);
    }
    extract_cycles(g)
}

pub fn mdim_exact(g: &Graph) -> Result<MdimReport> {
    let cycles = cactus_cycles(g)?;
    let l1 = g.leaves().len();
    let terms: Vec<CycleTerm> = cycles
        .iter()
        .enumerate()
        .map(|(i, c)| cycle_term(i, c))
        .collect();
    let delta = delta_count(&cycles);
    let total = l1 + terms.iter().map(|t| t.term).sum::<usize>() + delta;
    Ok(MdimReport {
        l1,
        cycles: terms,
        delta,
        total,
    })
}

/// Number of cycles with at least three roots and no geodesic triple among them.
pub fn delta_count(cycles: &[CycleInfo]) -> usize {
    cycles
        .iter()
        .filter(|c| c.rt() >= 3 && !has_geodesic_triple(c.len(), &c.root_positions))
        .count()
}

/// A minimum mixed metric generator split by the role of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCertificate {
    /// `sa ∪ sb ∪ sc`, ascending.
    pub set: Vec<usize>,
    /// All leaves.
    pub sa: Vec<usize>,
    /// Non-root ring vertices added to cycles with fewer than three roots,
    /// as `(cycle id, vertices)`.
    pub sb: Vec<(usize, Vec<usize>)>,
    /// One ring vertex per cycle counted by `Δ`, as `(cycle id, vertex)`.
    pub sc: Vec<(usize, usize)>,
    /// Whether the oracle accepted `set`.
    pub verified: bool,
}

/// Builds a generator of size [`mdim_exact`] and checks it with the oracle.
///
/// Every root of a cycle is active for the leaves alone, so each cycle is
/// completed independently: cycles with fewer than three roots receive
/// non-root ring vertices, and every `Δ` cycle receives one ring vertex
/// closing a geodesic triple with two of its roots.
pub fn build_min_generator(g: &Graph) -> Result<GeneratorCertificate> {
    let cycles = cactus_cycles(g)?;
    let sa = g.leaves();
    let mut sb: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut sc = Vec::new();
    for (id, c) in cycles.iter().enumerate() {
        let t = cycle_term(id, c);
        if t.term > 0 {
            let add = augment_for_triple(c.len(), &c.root_positions, &c.root_positions)?;
            debug_assert_eq!(add.len(), t.term);
            sb.push((id, add.iter().map(|&i| c.ring[i]).collect()));
        } else if t.needs_delta {
            let add = augment_for_triple(c.len(), &c.root_positions, &[])?;
            debug_assert_eq!(add.len(), 1);
            sc.push((id, c.ring[add[0]]));
        }
    }
    let mut set: Vec<usize> = sa
        .iter()
        .copied()
        .chain(sb.iter().flat_map(|(_, vs)| vs.iter().copied()))
        .chain(sc.iter().map(|&(_, v)| v))
        .collect();
    set.sort_unstable();
    let verified = is_mixed_generator(g, &set)?.generator;
    Ok(GeneratorCertificate {
        set,
        sa,
        sb,
        sc,
        verified,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    /// `L1 + 2c`.
    pub bound: usize,
    /// The value equals the bound: every cycle has exactly one root.
    pub attained: bool,
}

/// The upper bound `L1 + 2c` for cacti other than `C_n`.
pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    let class = classify(g);
    match class.tag {
        ClassTag::General => return Err(Error::NotACactus),
        ClassTag::Cycle => return Err(Error::CycleExcluded),
        _ => {}
    }
    let cycles = extract_cycles(g)?;
    Ok(BoundReport {
        bound: g.leaves().len() + 2 * cycles.len(),
        attained: cycles.iter().all(|c| c.rt() == 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::oracle::{brute_force_mdim, OracleLimits};
    use alloc::vec;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn bowtie() -> Graph {
        build_graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    /// `C_len` with one pendant leaf at each listed ring position.
    fn cycle_with_pendants(len: usize, at: &[usize]) -> Graph {
        let mut edges: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
        edges.extend(at.iter().enumerate().map(|(k, &p)| (p, len + k)));
        Graph::new(len + at.len(), edges).unwrap()
    }

    fn oracle(g: &Graph) -> usize {
        brute_force_mdim(g, OracleLimits::default()).unwrap().value
    }

    #[test]
    fn formula_examples() {
        assert_eq!(mdim_exact(&path(5)).unwrap().total, 2);
        assert!(mdim_exact(&path(5)).unwrap().cycles.is_empty());

        let b = mdim_exact(&bowtie()).unwrap();
        assert_eq!((b.l1, b.delta, b.total), (0, 0, 4));
        assert_eq!(b.cycles.iter().map(|t| t.term).collect::<Vec<_>>(), [2, 2]);

        let g = cycle_with_pendants(8, &[0, 1, 2]);
        let r = mdim_exact(&g).unwrap();
        assert_eq!(
            (r.l1, r.cycles[0].rt, r.cycles[0].term, r.delta, r.total),
            (3, 3, 0, 1, 4)
        );
        assert!(r.cycles[0].needs_delta);
        assert_eq!(oracle(&g), 4);

        let c7 = mdim_exact(&cycle(7)).unwrap();
        assert_eq!((c7.cycles[0].rt, c7.total), (0, 3));
        assert_eq!(oracle(&cycle(7)), 3);

        let k4 = Graph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(mdim_exact(&k4), Err(Error::NotACactus));
        assert_eq!(build_min_generator(&k4), Err(Error::NotACactus));
    }

    #[test]
    fn delta_examples() {
        let g = cycle_with_pendants(8, &[0, 1, 2]);
        assert_eq!(delta_count(&extract_cycles(&g).unwrap()), 1);
        let g = cycle_with_pendants(8, &[0, 3, 6]);
        assert_eq!(delta_count(&extract_cycles(&g).unwrap()), 0);
        assert_eq!(mdim_exact(&g).unwrap().total, 3);
        assert_eq!(oracle(&g), 3);
        assert_eq!(delta_count(&extract_cycles(&bowtie()).unwrap()), 0);
    }

    #[test]
    fn generator_examples() {
        let p4 = build_min_generator(&path(4)).unwrap();
        assert_eq!(p4.set, [0, 3]);
        assert!(p4.sb.is_empty() && p4.sc.is_empty() && p4.verified);

        let c6 = build_min_generator(&cycle(6)).unwrap();
        assert_eq!(c6.set, [0, 2, 4]);
        assert!(c6.verified);

        let b = build_min_generator(&bowtie()).unwrap();
        assert_eq!(b.set, [1, 2, 3, 4]);
        assert_eq!(b.sb, [(0, vec![1, 2]), (1, vec![3, 4])]);
        assert!(b.verified);

        let g = cycle_with_pendants(8, &[0, 1, 2]);
        let cert = build_min_generator(&g).unwrap();
        assert_eq!(cert.sa, [8, 9, 10]);
        assert_eq!(cert.sc, [(0, 5)]);
        assert!(cert.verified);
    }

    #[test]
    fn bound_examples() {
        assert_eq!(
            bound_report(&bowtie()),
            Ok(BoundReport {
                bound: 4,
                attained: true
            })
        );
        let tadpole = build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        assert_eq!(
            bound_report(&tadpole),
            Ok(BoundReport {
                bound: 3,
                attained: true
            })
        );
        assert_eq!(mdim_exact(&tadpole).unwrap().total, 3);
        let g = cycle_with_pendants(8, &[0, 3, 6]);
        assert_eq!(
            bound_report(&g),
            Ok(BoundReport {
                bound: 5,
                attained: false
            })
        );
        assert_eq!(bound_report(&cycle(5)), Err(Error::CycleExcluded));
        assert_eq!(
            bound_report(&path(4)),
            Ok(BoundReport {
                bound: 2,
                attained: true
            })
        );
    }

    #[test]
    fn leafless_cycle_can_contribute_nothing() {
        // a triangle with another triangle hung on each of its vertices
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        for (k, hub) in [0, 1, 2].into_iter().enumerate() {
            let (a, b) = (3 + 2 * k, 4 + 2 * k);
            edges.extend([(hub, a), (a, b), (b, hub)]);
        }
        let g = Graph::new(9, edges).unwrap();
        let r = mdim_exact(&g).unwrap();
        let contributions: Vec<usize> = r.cycles.iter().map(|t| t.contribution()).collect();
        assert_eq!(contributions.iter().filter(|&&c| c == 0).count(), 1);
        assert_eq!(r.total, 6);
        assert_eq!(oracle(&g), 6);
        assert!(build_min_generator(&g).unwrap().verified);
    }

    /// Cycles glued at existing vertices or hung from pendant paths.
    fn arb_cactus() -> impl Strategy<Value = Graph> {
        proptest::collection::vec((0usize..4, 3usize..7, any::<usize>()), 1..6).prop_map(|ops| {
            let mut edges = Vec::new();
            let mut n = 1;
            for (kind, len, hook) in ops {
                let at = hook % n;
                if kind == 0 {
                    edges.push((at, n));
                    n += 1;
                } else {
                    let mut ring = vec![at];
                    ring.extend(n..n + len - 1);
                    n += len - 1;
                    for i in 0..len {
                        edges.push((ring[i], ring[(i + 1) % len]));
                    }
                }
            }
            if n == 1 {
                edges.push((0, 1));
                n = 2;
            }
            Graph::new(n, edges).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn formula_agrees_with_oracle(g in arb_cactus()) {
            prop_assume!(g.order() - g.leaves().len() <= 14);
            let r = mdim_exact(&g).unwrap();
            let c = r.cycles.len();
            prop_assert_eq!(r.total, oracle(&g));
            prop_assert_eq!(r.total, r.l1 + r.cycles.iter().map(|t| t.term).sum::<usize>() + r.delta);
            prop_assert!(r.total >= r.l1);
            if c >= 1 && !g.is_cycle() {
                prop_assert!(r.total <= r.l1 + 2 * c);
                prop_assert_eq!(r.total == r.l1 + 2 * c, bound_report(&g).unwrap().attained);
            }
            if c >= 2 && r.l1 == 0 {
                prop_assert!(r.total <= 2 * c);
                for t in &r.cycles {
                    prop_assert!(t.contribution() <= 2);
                    prop_assert_eq!(t.contribution() == 0, t.rt >= 3 && !t.needs_delta);
                }
            }
            let cert = build_min_generator(&g).unwrap();
            prop_assert!(cert.verified);
            prop_assert_eq!(cert.set.len(), r.total);
        }
    }
}
