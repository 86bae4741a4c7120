use serde::{Deserialize, Serialize};

use super::chordal::chordality;
use super::cop::consecutive_ones;
use super::minimize::minimize_witness;
use super::{Obstruction, ObstructionKind};
use crate::graph::{maximal_cliques_from_peo, CliqueSet, Graph};

/// Linear arrangement of the maximal cliques of an interval graph in which
/// every vertex occupies a consecutive run `left[v]..=right[v]` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueChain {
    /// The maximal cliques in chain order, each sorted.
    pub cliques: Vec<Vec<usize>>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl CliqueChain {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Checks the chain invariants against `g`: the members of position `i`
    /// are exactly the vertices with `left <= i <= right`, and the listed
    /// cliques are precisely the maximal cliques of `g`.
    pub fn validate(&self, g: &Graph, maximal: &CliqueSet) -> Result<(), String> {
        let n = g.n();
        if self.left.len() != n || self.right.len() != n {
            return Err("interval index arrays have the wrong length".into());
        }
        let mut sorted = self.cliques.clone();
        sorted.sort();
        if sorted != maximal.cliques {
            return Err("chain does not list exactly the maximal cliques".into());
        }
        for (i, q) in self.cliques.iter().enumerate() {
            let expect: Vec<usize> = (0..n)
                .filter(|&v| self.left[v] <= i && i <= self.right[v])
                .collect();
            if *q != expect {
                return Err(format!(
                    "clique at position {i} is not the run of its members"
                ));
            }
        }
        Ok(())
    }

    /// Vertices sorted lexicographically by `(left, right)`, ties by id.
    pub fn vertex_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.left.len()).collect();
        order.sort_by_key(|&v| (self.left[v], self.right[v], v));
        order
    }
}

fn chain_of(g: &Graph) -> Result<CliqueChain, Obstruction> {
    let peo = chordality(g)?;
    let cliques = maximal_cliques_from_peo(g, &peo);
    let n = g.n();
    let mut rows = vec![Vec::new(); n];
    for (i, q) in cliques.iter().enumerate() {
        for &v in q {
            rows[v].push(i);
        }
    }
    let order = consecutive_ones(&rows, cliques.len())
        .map_err(|_| Obstruction::new(ObstructionKind::NotInterval, Vec::new()))?;
    let mut pos = vec![0; cliques.len()];
    for (i, &c) in order.iter().enumerate() {
        pos[c] = i;
    }
    let mut left = vec![usize::MAX; n];
    let mut right = vec![0; n];
    for v in 0..n {
        for &c in &rows[v] {
            left[v] = left[v].min(pos[c]);
            right[v] = right[v].max(pos[c]);
        }
    }
    Ok(CliqueChain {
        cliques: order.iter().map(|&c| cliques.cliques[c].clone()).collect(),
        left,
        right,
    })
}

/// Consecutive arrangement of the maximal cliques, or a hole (non-chordal
/// input) or the vertex set of a minimal non-interval induced subgraph.
pub fn interval_model(g: &Graph) -> Result<CliqueChain, Obstruction> {
    match chain_of(g) {
        Ok(chain) => Ok(chain),
        Err(o) if o.kind == ObstructionKind::Hole => Err(o),
        Err(_) => {
            let witness = minimize_witness((0..g.n()).collect(), |vs| {
                chain_of(&g.induced_subgraph(vs)).is_err()
            });
            Err(Obstruction::new(ObstructionKind::NotInterval, witness))
        }
    }
}

/// An induced claw `[center, a, b, c]`, if any.
pub fn find_claw(g: &Graph) -> Option<[usize; 4]> {
    for c in 0..g.n() {
        let nc = g.neighbor_set(c);
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut rest = nc.clone();
                rest.difference_with(g.neighbor_set(a));
                rest.difference_with(g.neighbor_set(b));
                rest.set(a, false);
                rest.set(b, false);
                if let Some(d) = rest.ones().next() {
                    return Some([c, a, b, d]);
                }
            }
        }
    }
    None
}

/// Unit interval test: an interval model plus claw-freeness.
pub fn is_unit_interval(g: &Graph) -> Result<CliqueChain, Obstruction> {
    let chain = interval_model(g)?;
    match find_claw(g) {
        Some(claw) => Err(Obstruction::new(ObstructionKind::Claw, claw.to_vec())),
        None => Ok(chain),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::maximal_cliques;

    fn claw() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn p4_chain() {
        let p4 = Graph::path(4);
        let chain = interval_model(&p4).unwrap();
        chain.validate(&p4, &maximal_cliques(&p4)).unwrap();
        // the chain is forced up to reversal
        let forward = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
        let mut backward = forward.clone();
        backward.reverse();
        assert!(chain.cliques == forward || chain.cliques == backward);
        if chain.cliques == forward {
            assert_eq!((chain.left[1], chain.right[1]), (0, 1));
        }
    }

    #[test]
    fn c4_is_not_interval() {
        let err = interval_model(&Graph::cycle(4)).unwrap_err();
        assert_eq!(err.kind, ObstructionKind::Hole);
    }

    #[test]
    fn claw_is_interval_but_not_unit() {
        let g = claw();
        let chain = interval_model(&g).unwrap();
        chain.validate(&g, &maximal_cliques(&g)).unwrap();
        let err = is_unit_interval(&g).unwrap_err();
        assert_eq!(err.kind, ObstructionKind::Claw);
        assert_eq!(err.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn unit_interval_successes() {
        assert!(is_unit_interval(&Graph::path(4)).is_ok());
        assert!(is_unit_interval(&Graph::complete(3)).is_ok());
        assert!(is_unit_interval(&Graph::new(0)).is_ok());
    }

    #[test]
    fn subdivided_claw_is_chordal_but_not_interval() {
        // center 0, arms 0-1-2, 0-3-4, 0-5-6
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let err = interval_model(&g).unwrap_err();
        assert_eq!(err.kind, ObstructionKind::NotInterval);
        assert_eq!(err.witness, (0..7).collect::<Vec<_>>());
    }
}
