use serde::{Deserialize, Serialize};

use super::{Obstruction, ObstructionKind};
use crate::graph::Graph;

/// Partition of the vertices into a clique and a stable set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique_side: Vec<usize>,
    pub stable_side: Vec<usize>,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> bool {
        let mut all: Vec<usize> = self
            .clique_side
            .iter()
            .chain(&self.stable_side)
            .copied()
            .collect();
        all.sort_unstable();
        all == (0..g.n()).collect::<Vec<_>>()
            && g.is_clique(&self.clique_side)
            && g.is_stable(&self.stable_side)
    }
}

/// Split partition, or an induced `2K_2`, `C_4` or `C_5` (kind `not_split`).
///
/// The candidate partition comes from the degree sequence: with vertices
/// sorted by decreasing degree, the clique side is the longest prefix whose
/// `i`-th degree is at least `i - 1`.
pub fn is_split(g: &Graph) -> Result<SplitPartition, Obstruction> {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = by_degree
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let mut clique_side = by_degree[..m].to_vec();
    let mut stable_side = by_degree[m..].to_vec();
    clique_side.sort_unstable();
    stable_side.sort_unstable();
    let p = SplitPartition {
        clique_side,
        stable_side,
    };
    if p.validate(g) {
        return Ok(p);
    }
    let w = find_split_obstruction(g).expect("a non-split graph contains 2K2, C4 or C5");
    Err(Obstruction::new(ObstructionKind::NotSplit, w))
}

/// Induced `2K_2` (as `[a, b, c, d]` with edges `ab`, `cd`), `C_4` or `C_5`
/// (in cyclic order), if present.
pub fn find_split_obstruction(g: &Graph) -> Option<Vec<usize>> {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let cross = [(a, c), (a, d), (b, c), (b, d)]
                .iter()
                .filter(|&&(x, y)| g.has_edge(x, y))
                .count();
            if cross == 0 {
                return Some(vec![a, b, c, d]);
            }
            if cross == 2 && g.has_edge(a, c) && g.has_edge(b, d) {
                return Some(vec![a, b, d, c]);
            }
            if cross == 2 && g.has_edge(a, d) && g.has_edge(b, c) {
                return Some(vec![a, b, c, d]);
            }
        }
    }
    // induced C5: a-b-c-d-e-a
    for a in 0..g.n() {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d == b || g.has_edge(d, a) || g.has_edge(d, b) {
                        continue;
                    }
                    for &e in g.neighbors(d) {
                        if e != c && g.has_edge(e, a) && !g.has_edge(e, b) && !g.has_edge(e, c) {
                            return Some(vec![a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_split() {
        let p = is_split(&Graph::path(4)).unwrap();
        assert_eq!(p.clique_side, vec![1, 2]);
        assert_eq!(p.stable_side, vec![0, 3]);
    }

    #[test]
    fn c4_not_split() {
        let err = is_split(&Graph::cycle(4)).unwrap_err();
        assert_eq!(err.kind, ObstructionKind::NotSplit);
        let c = &err.witness;
        assert!((0..4).all(|i| Graph::cycle(4).has_edge(c[i], c[(i + 1) % 4])));
    }

    #[test]
    fn c5_and_2k2() {
        let err = is_split(&Graph::cycle(5)).unwrap_err();
        assert_eq!(err.witness.len(), 5);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_split(&two_k2).unwrap_err().witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn k3_and_empty() {
        let p = is_split(&Graph::complete(3)).unwrap();
        assert_eq!(p.clique_side, vec![0, 1, 2]);
        assert!(p.stable_side.is_empty());
        assert!(is_split(&Graph::new(0)).is_ok());
    }
}
