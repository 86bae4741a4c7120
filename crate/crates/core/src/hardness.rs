//! Edge Clique Cover and its reduction to half-squares of balanced bisplit
//! graphs.
//!
//! `reduce_ecc` adds `k` universal vertices to a graph. A cover of the
//! original edges by `k` cliques turns into a balanced bisplit root of the
//! enlarged graph (`build_root_from_cover`), and any such root yields a
//! cover back (`extract_cover_from_root`).

use serde::{Deserialize, Serialize};

use crate::error::HardnessError;
use crate::graph::{half_square, BipartiteGraph, Graph, Side};
use crate::halfsquare::{verify_root, ClassTag, RootCertificate, Witness};
use crate::recognition::{check_bisplit_partition, is_balanced_bisplit, BisplitPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccInstance {
    pub g: Graph,
    pub k: usize,
}

/// Cliques whose union of edge sets is the edge set of a graph. Serializes
/// as a plain list of vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CliqueCover {
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Checks that every member is a clique of `g` and every edge of `g` lies
    /// in some member.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        for q in &self.cliques {
            if let Some(&v) = q.iter().find(|&&v| v >= g.n()) {
                return Err(format!("vertex {v} out of range"));
            }
            if !g.is_clique(q) {
                return Err(format!("{q:?} is not a clique"));
            }
        }
        let mut covered = vec![Vec::new(); g.n()];
        for q in &self.cliques {
            for &v in q {
                covered[v].extend(q.iter().copied());
            }
        }
        match g
            .edges()
            .into_iter()
            .find(|&(u, v)| !covered[u].contains(&v))
        {
            Some((u, v)) => Err(format!("edge ({u}, {v}) is not covered")),
            None => Ok(()),
        }
    }

    /// Pads with copies of the last clique (or empty cliques if there is
    /// none) up to exactly `k` members.
    fn padded(mut self, k: usize) -> CliqueCover {
        let filler = self.cliques.last().cloned().unwrap_or_default();
        while self.cliques.len() < k {
            self.cliques.push(filler.clone());
        }
        self
    }
}

/// The enlarged graph `g'`: vertices `0..n` are the original ones and
/// `u_set` lists the `k` added universal vertices `n..n+k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub g_prime: Graph,
    pub u_set: Vec<usize>,
}

impl ReductionOutput {
    /// Number of original vertices.
    pub fn n_original(&self) -> usize {
        self.g_prime.n() - self.u_set.len()
    }

    pub fn k(&self) -> usize {
        self.u_set.len()
    }

    /// The original graph, induced on `0..n`.
    pub fn original(&self) -> Graph {
        let kept: Vec<usize> = (0..self.n_original()).collect();
        self.g_prime.induced_subgraph(&kept)
    }
}

/// A balanced bisplit graph with its partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedBisplitRoot {
    pub b: BipartiteGraph,
    pub partition: BisplitPartition,
}

impl BalancedBisplitRoot {
    /// Wraps `b` with the partition found by the balanced bisplit test.
    pub fn from_bipartite(b: BipartiteGraph) -> Option<BalancedBisplitRoot> {
        let partition = is_balanced_bisplit(&b)?;
        Some(BalancedBisplitRoot { b, partition })
    }
}

struct CoverSearch<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    k: usize,
    cliques: Vec<Vec<usize>>,
}

impl CoverSearch<'_> {
    fn covered(&self, u: usize, v: usize) -> bool {
        self.cliques
            .iter()
            .any(|q| q.contains(&u) && q.contains(&v))
    }

    fn fits(&self, q: &[usize], v: usize) -> bool {
        q.contains(&v) || q.iter().all(|&w| self.g.has_edge(v, w))
    }

    fn run(&mut self, i: usize) -> bool {
        let Some(&(u, v)) = self.edges[i..].iter().find(|&&(u, v)| !self.covered(u, v)) else {
            return true;
        };
        let next = self.edges.iter().position(|&e| e == (u, v)).unwrap() + 1;
        for c in 0..self.cliques.len() {
            if self.fits(&self.cliques[c], u) && self.fits(&self.cliques[c], v) {
                let before = self.cliques[c].len();
                for w in [u, v] {
                    if !self.cliques[c].contains(&w) {
                        self.cliques[c].push(w);
                    }
                }
                if self.run(next) {
                    return true;
                }
                self.cliques[c].truncate(before);
            }
        }
        if self.cliques.len() < self.k {
            self.cliques.push(vec![u, v]);
            if self.run(next) {
                return true;
            }
            self.cliques.pop();
        }
        false
    }
}

/// Extends `q` to a maximal clique by adding vertices in ascending order.
fn maximalize(g: &Graph, q: &[usize]) -> Vec<usize> {
    let mut out = q.to_vec();
    for v in 0..g.n() {
        if !out.contains(&v) && out.iter().all(|&w| g.has_edge(v, w)) {
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

/// Exact Edge Clique Cover by branch and bound: edges are taken in sorted
/// order and each uncovered edge joins an existing clique (lowest index
/// first) or opens a new one. Returns a cover with at most `k` cliques, each
/// extended to a maximal clique, or `None` if no such cover exists.
pub fn solve_ecc(inst: &EccInstance) -> Option<CliqueCover> {
    let g = &inst.g;
    let mut search = CoverSearch {
        g,
        edges: g.edges(),
        k: inst.k,
        cliques: Vec::new(),
    };
    if !search.run(0) {
        return None;
    }
    let cover = CliqueCover {
        cliques: search.cliques.iter().map(|q| maximalize(g, q)).collect(),
    };
    debug_assert!(cover.validate(g).is_ok());
    Some(cover)
}

/// Adds `k` pairwise adjacent vertices joined to every vertex of `g`.
///
/// The input must be connected, without universal vertex, and have at least
/// `k >= 1` edges; violations are reported, never repaired.
pub fn reduce_ecc(inst: &EccInstance) -> Result<ReductionOutput, HardnessError> {
    let g = &inst.g;
    let k = inst.k;
    if k == 0 {
        return Err(HardnessError::ZeroK);
    }
    if !g.is_connected() {
        return Err(HardnessError::Disconnected);
    }
    if let Some(&u) = g.universal_vertices().first() {
        return Err(HardnessError::UniversalVertex(u));
    }
    if k > g.m() {
        return Err(HardnessError::KTooLarge { k, m: g.m() });
    }
    let n = g.n();
    let mut edges = g.edges();
    for u in n..n + k {
        edges.extend((0..u).map(|v| (v, u)));
    }
    let labels = (0..n)
        .map(|v| g.label(v))
        .chain((1..=k).map(|i| format!("u{i}")))
        .collect();
    let g_prime = Graph::from_edges(n + k, edges)
        .and_then(|h| h.with_labels(labels))
        .expect("gadget edges are valid");
    Ok(ReductionOutput {
        g_prime,
        u_set: (n..n + k).collect(),
    })
}

/// Balanced bisplit root of `red.g_prime` from a cover of the original
/// graph. X is `0..n` (original) then the added vertices; Y is one vertex
/// per cover clique (`0..k`), then one private vertex per original vertex
/// (`k..k+n`). A cover with fewer than `k` cliques is padded by repeating
/// its last clique.
pub fn build_root_from_cover(
    red: &ReductionOutput,
    cover: &CliqueCover,
) -> Result<BalancedBisplitRoot, HardnessError> {
    let n = red.n_original();
    let k = red.k();
    cover
        .validate(&red.original())
        .map_err(HardnessError::InvalidCover)?;
    if cover.len() > k {
        return Err(HardnessError::CoverTooLarge {
            got: cover.len(),
            k,
        });
    }
    let cover = cover.clone().padded(k);
    let mut yadj: Vec<Vec<usize>> = cover
        .cliques
        .iter()
        .map(|q| q.iter().copied().chain(red.u_set.iter().copied()).collect())
        .collect();
    yadj.extend((0..n).map(|v| {
        std::iter::once(v)
            .chain(red.u_set.iter().copied())
            .collect()
    }));
    let b = BipartiteGraph::from_y_neighborhoods(n + k, yadj);
    let partition = BisplitPartition {
        x1: red.u_set.clone(),
        x2: (0..n).collect(),
        y1: (0..k).collect(),
        y2: (k..k + n).collect(),
        matching: (0..n).map(|v| (v, k + v)).collect(),
    };
    check_bisplit_partition(&b, &partition).expect("gadget root is balanced bisplit");
    assert!(
        half_square(&b, Side::X) == red.g_prime,
        "gadget root reproduces the enlarged graph"
    );
    Ok(BalancedBisplitRoot { b, partition })
}

/// Reads a cover of the original graph off a balanced bisplit root of
/// `red.g_prime`: the neighborhoods of the `Y1` vertices restricted to the
/// original vertices, padded to exactly `k` cliques.
pub fn extract_cover_from_root(
    red: &ReductionOutput,
    root: &BalancedBisplitRoot,
) -> Result<CliqueCover, HardnessError> {
    let n = red.n_original();
    let b = &root.b;
    if b.nx() != red.g_prime.n() {
        return Err(HardnessError::InvalidRoot(format!(
            "root has {} X-vertices, expected {}",
            b.nx(),
            red.g_prime.n()
        )));
    }
    check_bisplit_partition(b, &root.partition).map_err(HardnessError::InvalidRoot)?;
    if half_square(b, Side::X) != red.g_prime {
        return Err(HardnessError::InvalidRoot(
            "half-square of the root differs from the enlarged graph".into(),
        ));
    }
    let cliques = root
        .partition
        .y1
        .iter()
        .map(|&q| {
            b.y_neighbors(q)
                .iter()
                .copied()
                .filter(|&v| v < n)
                .collect()
        })
        .collect();
    let cover = CliqueCover { cliques }.padded(red.k());
    let original = red.original();
    cover
        .validate(&original)
        .map_err(|e| HardnessError::InvalidRoot(format!("extracted cover is invalid: {e}")))?;
    debug_assert!(cover.len() == red.k());
    Ok(cover)
}

/// Result of [`strip_universal_vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrippedInstance {
    /// The graph without its universal vertices.
    pub g: Graph,
    /// Original ids of the vertices of `g`, ascending.
    pub kept: Vec<usize>,
    /// The removed universal vertices.
    pub removed: Vec<usize>,
    /// Budget for the stripped graph: the edges of the input are coverable by
    /// `k` cliques iff those of `g` are coverable by `adjusted_k` cliques.
    /// `None` when `k` is below the number of vertices left isolated, which
    /// makes the instance infeasible.
    pub adjusted_k: Option<usize>,
}

/// Removes all universal vertices. Every vertex left isolated needs its own
/// clique with the removed vertices, so the budget drops by their number.
/// This is a helper for preparing inputs to [`reduce_ecc`]; it is never
/// applied automatically.
pub fn strip_universal_vertices(inst: &EccInstance) -> Result<StrippedInstance, HardnessError> {
    if inst.k == 0 {
        return Err(HardnessError::ZeroK);
    }
    let removed = inst.g.universal_vertices();
    let (g, kept) = inst.g.without(&removed);
    let isolated = g.isolated_vertices().len();
    Ok(StrippedInstance {
        g,
        kept,
        removed,
        adjusted_k: inst.k.checked_sub(isolated),
    })
}

/// Exact (exponential) test for being the half-square of a balanced
/// bisplit graph.
///
/// The universal vertices `U` can always serve as `X1`, after which the
/// remaining edges must be covered by `|U|` cliques; the test therefore
/// runs [`solve_ecc`] on `g - U` with budget `|U|`.
pub fn hs_balanced_bisplit(g: &Graph) -> Option<RootCertificate> {
    let n = g.n();
    let universal = g.universal_vertices();
    let j = universal.len();
    let (rest, kept) = g.without(&universal);
    let cover = solve_ecc(&EccInstance { g: rest, k: j })?.padded(j);
    let mut yadj: Vec<Vec<usize>> = cover
        .cliques
        .iter()
        .map(|q| {
            let mut nb: Vec<usize> = q.iter().map(|&i| kept[i]).collect();
            nb.extend(universal.iter().copied());
            nb
        })
        .collect();
    yadj.extend(kept.iter().map(|&x| {
        std::iter::once(x)
            .chain(universal.iter().copied())
            .collect()
    }));
    let partition = BisplitPartition {
        x1: universal,
        x2: kept.clone(),
        y1: (0..j).collect(),
        y2: (j..n).collect(),
        matching: kept.iter().enumerate().map(|(i, &x)| (x, j + i)).collect(),
    };
    let cert = RootCertificate {
        class: ClassTag::BalancedBisplit,
        root: BipartiteGraph::from_y_neighborhoods(n, yadj),
        witness: Witness::Bisplit(partition),
    };
    if let Err(e) = verify_root(g, &cert) {
        panic!("constructed balanced bisplit root failed verification: {e}");
    }
    Some(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_star_convex;

    fn inst(g: Graph, k: usize) -> EccInstance {
        EccInstance { g, k }
    }

    #[test]
    fn solve_examples() {
        let c4 = Graph::cycle(4);
        let cover = solve_ecc(&inst(c4.clone(), 4)).unwrap();
        let mut cl = cover.cliques.clone();
        cl.sort();
        assert_eq!(cl, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert!(solve_ecc(&inst(c4, 3)).is_none());
        let k3 = solve_ecc(&inst(Graph::complete(3), 1)).unwrap();
        assert_eq!(k3.cliques, vec![vec![0, 1, 2]]);
        assert_eq!(solve_ecc(&inst(Graph::new(3), 0)).unwrap().len(), 0);
    }

    #[test]
    fn reduce_examples() {
        let red = reduce_ecc(&inst(Graph::cycle(4), 2)).unwrap();
        assert_eq!(red.g_prime.n(), 6);
        assert_eq!(red.g_prime.universal_vertices(), vec![4, 5]);
        assert_eq!(red.original(), Graph::cycle(4));
        assert_eq!(
            reduce_ecc(&inst(Graph::complete(3), 1)).unwrap_err(),
            HardnessError::UniversalVertex(0)
        );
        assert_eq!(
            reduce_ecc(&inst(Graph::path(4), 5)).unwrap_err(),
            HardnessError::KTooLarge { k: 5, m: 3 }
        );
        assert_eq!(
            reduce_ecc(&inst(Graph::path(4), 0)).unwrap_err(),
            HardnessError::ZeroK
        );
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            reduce_ecc(&inst(two_k2, 1)).unwrap_err(),
            HardnessError::Disconnected
        );
    }

    #[test]
    fn build_and_extract_c4() {
        let c4 = Graph::cycle(4);
        let red = reduce_ecc(&inst(c4.clone(), 4)).unwrap();
        let cover = solve_ecc(&inst(c4.clone(), 4)).unwrap();
        let root = build_root_from_cover(&red, &cover).unwrap();
        assert_eq!((root.b.nx(), root.b.ny()), (8, 8));
        assert!(is_balanced_bisplit(&root.b).is_some());
        assert!(is_star_convex(&root.b, Side::X).is_ok());
        let back = extract_cover_from_root(&red, &root).unwrap();
        assert_eq!(back.len(), 4);
        back.validate(&c4).unwrap();
    }

    #[test]
    fn build_pads_short_covers() {
        let p4 = Graph::path(4);
        let red = reduce_ecc(&inst(p4.clone(), 3)).unwrap();
        let cover = CliqueCover {
            cliques: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
        };
        let root = build_root_from_cover(&red, &cover).unwrap();
        assert_eq!((root.b.nx(), root.b.ny()), (7, 7));
        let uncovered = CliqueCover {
            cliques: vec![vec![0, 1], vec![2, 3]],
        };
        assert_eq!(
            build_root_from_cover(&red, &uncovered).unwrap_err().token(),
            "invalid_cover"
        );
        let two = CliqueCover {
            cliques: vec![vec![0, 1], vec![1, 2, 3]],
        };
        assert!(build_root_from_cover(&red, &two).is_err());
        // C5 with the chord 0-2 needs only 4 cliques; a budget of 5 pads
        let house = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let red5 = reduce_ecc(&inst(house.clone(), 5)).unwrap();
        let short = solve_ecc(&inst(house, 5)).unwrap();
        assert_eq!(short.len(), 4);
        let root = build_root_from_cover(&red5, &short).unwrap();
        assert_eq!((root.b.nx(), root.b.ny()), (10, 10));
        assert_eq!(extract_cover_from_root(&red5, &root).unwrap().len(), 5);
        let too_many = reduce_ecc(&inst(p4, 2)).unwrap();
        assert_eq!(
            build_root_from_cover(&too_many, &cover).unwrap_err(),
            HardnessError::CoverTooLarge { got: 3, k: 2 }
        );
    }

    #[test]
    fn extract_rejects_broken_matching() {
        let c4 = Graph::cycle(4);
        let red = reduce_ecc(&inst(c4.clone(), 4)).unwrap();
        let root = build_root_from_cover(&red, &solve_ecc(&inst(c4, 4)).unwrap()).unwrap();
        let (x, y) = root.partition.matching[0];
        let edges = root.b.edges().into_iter().filter(|&e| e != (x, y));
        let broken = BalancedBisplitRoot {
            b: BipartiteGraph::from_edges(8, 8, edges).unwrap(),
            partition: root.partition.clone(),
        };
        assert_eq!(
            extract_cover_from_root(&red, &broken).unwrap_err().token(),
            "invalid_root"
        );
    }

    #[test]
    fn strip_adjusts_budget() {
        // removing the universal vertex 0 leaves the edge 1-2 and the isolated 3
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let s = strip_universal_vertices(&inst(g, 2)).unwrap();
        assert_eq!(s.removed, vec![0]);
        assert_eq!(s.kept, vec![1, 2, 3]);
        assert_eq!(s.adjusted_k, Some(1));
    }

    #[test]
    fn balanced_bisplit_recognition() {
        let red = reduce_ecc(&inst(Graph::cycle(4), 4)).unwrap();
        assert!(hs_balanced_bisplit(&red.g_prime).is_some());
        let red3 = reduce_ecc(&inst(Graph::cycle(4), 3)).unwrap();
        assert!(hs_balanced_bisplit(&red3.g_prime).is_none());
        assert!(hs_balanced_bisplit(&Graph::new(3)).is_some());
        assert!(hs_balanced_bisplit(&Graph::path(3)).is_some());
        assert!(hs_balanced_bisplit(&Graph::path(4)).is_none());
        assert!(hs_balanced_bisplit(&Graph::complete(3)).is_some());
        assert!(hs_balanced_bisplit(&Graph::new(0)).is_some());
    }
}
