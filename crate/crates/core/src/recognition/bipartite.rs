use serde::{Deserialize, Serialize};

use super::cop::{consecutive_ones, is_consecutive_under};
use super::lexical::{doubly_lexical, BinaryMatrix, DoublyLexOrdering};
use super::minimize::minimize_witness;
use super::{Obstruction, ObstructionKind};
use crate::graph::{BipartiteGraph, Side};

/// Linear order on one side of a bipartite graph; witnesses convexity when
/// every neighborhood of an other-side vertex is an interval in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideOrdering {
    pub side: Side,
    pub perm: Vec<usize>,
}

fn combined_id(b: &BipartiteGraph, side: Side, v: usize) -> usize {
    match side {
        Side::X => v,
        Side::Y => b.nx() + v,
    }
}

fn neighborhoods(b: &BipartiteGraph, side: Side) -> Vec<Vec<usize>> {
    (0..b.side_len(side))
        .map(|v| b.neighbors(side, v).to_vec())
        .collect()
}

/// Ordering of `side` in which all other-side neighborhoods are intervals.
fn convex_on(b: &BipartiteGraph, side: Side) -> Result<SideOrdering, Obstruction> {
    let other = side.other();
    consecutive_ones(&neighborhoods(b, other), b.side_len(side))
        .map(|perm| SideOrdering { side, perm })
        .map_err(|o| {
            let witness = o
                .witness
                .iter()
                .map(|&v| combined_id(b, other, v))
                .collect();
            Obstruction::new(ObstructionKind::NotCop, witness)
        })
}

/// Checks that `ord` is a permutation of its side under which every
/// other-side neighborhood is contiguous.
pub fn check_side_ordering(b: &BipartiteGraph, ord: &SideOrdering) -> Result<(), String> {
    let n = b.side_len(ord.side);
    let mut sorted = ord.perm.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(format!(
            "ordering is not a permutation of side {}",
            ord.side
        ));
    }
    if !is_consecutive_under(&neighborhoods(b, ord.side.other()), &ord.perm) {
        return Err(format!(
            "some {}-neighborhood is not an interval in the {} ordering",
            ord.side.other(),
            ord.side
        ));
    }
    Ok(())
}

/// Convex bipartite test: an X ordering is tried first, then a Y ordering.
/// The obstruction reports the X attempt.
pub fn is_convex(b: &BipartiteGraph) -> Result<SideOrdering, Obstruction> {
    match convex_on(b, Side::X) {
        Ok(o) => Ok(o),
        Err(obs) => convex_on(b, Side::Y).map_err(|_| obs),
    }
}

/// Biconvex test: both sides are checked independently. Returns the X and
/// then the Y ordering.
pub fn is_biconvex(b: &BipartiteGraph) -> Result<(SideOrdering, SideOrdering), Obstruction> {
    let x = convex_on(b, Side::X)?;
    let y = convex_on(b, Side::Y)?;
    Ok((x, y))
}

fn gamma_free_bigraph(b: &BipartiteGraph) -> bool {
    let supports: Vec<Vec<usize>> = (0..b.nx()).map(|x| b.x_neighbors(x).to_vec()).collect();
    doubly_lexical(&BinaryMatrix::from_row_supports(&supports, b.ny())).gamma_free
}

/// Induced subgraph of `b` on combined ids.
fn induced_combined(b: &BipartiteGraph, ids: &[usize]) -> BipartiteGraph {
    let xs: Vec<usize> = ids.iter().copied().filter(|&v| v < b.nx()).collect();
    let ys: Vec<usize> = ids
        .iter()
        .filter(|&&v| v >= b.nx())
        .map(|&v| v - b.nx())
        .collect();
    b.induced(&xs, &ys)
}

/// Chordal bipartite test via a Γ-free doubly lexical ordering of the
/// biadjacency matrix (rows X, columns Y). A negative answer carries an
/// induced cycle of length at least six in combined ids, in cyclic order.
pub fn is_chordal_bipartite(b: &BipartiteGraph) -> Result<DoublyLexOrdering, Obstruction> {
    let supports: Vec<Vec<usize>> = (0..b.nx()).map(|x| b.x_neighbors(x).to_vec()).collect();
    let ordering = doubly_lexical(&BinaryMatrix::from_row_supports(&supports, b.ny()));
    if ordering.gamma_free {
        return Ok(ordering);
    }
    let ids = minimize_witness((0..b.nx() + b.ny()).collect(), |s| {
        !gamma_free_bigraph(&induced_combined(b, s))
    });
    Err(Obstruction::new(
        ObstructionKind::Hole,
        cycle_order(b, &ids),
    ))
}

/// Orders the vertex set of an induced cycle of `b` (combined ids) cyclically,
/// starting from its smallest id.
fn cycle_order(b: &BipartiteGraph, ids: &[usize]) -> Vec<usize> {
    let g = b.as_graph();
    let mut cycle = vec![ids[0]];
    let mut prev = usize::MAX;
    while cycle.len() < ids.len() {
        let cur = *cycle.last().unwrap();
        let next = *ids
            .iter()
            .find(|&&w| w != prev && w != cur && g.has_edge(cur, w) && !cycle[1..].contains(&w))
            .expect("minimal non-chordal-bipartite graph is an induced cycle");
        prev = cur;
        cycle.push(next);
    }
    cycle
}

/// Vertices of `side` adjacent to every other-side vertex of degree at least
/// two.
fn star_centers(b: &BipartiteGraph, side: Side) -> Vec<usize> {
    let n = b.side_len(side);
    let mut ok = vec![true; n];
    for w in 0..b.side_len(side.other()) {
        let nb = b.neighbors(side.other(), w);
        if nb.len() >= 2 {
            let mut inside = vec![false; n];
            for &v in nb {
                inside[v] = true;
            }
            for v in 0..n {
                ok[v] &= inside[v];
            }
        }
    }
    (0..n).filter(|&v| ok[v]).collect()
}

/// Star convexity on `side`: a center vertex lying in every other-side
/// neighborhood of size at least two (so that every neighborhood induces a
/// substar of the star around it). `None` only when the side is empty.
pub fn is_star_convex(b: &BipartiteGraph, side: Side) -> Result<Option<usize>, Obstruction> {
    if b.side_len(side) == 0 {
        return Ok(None);
    }
    if let Some(&c) = star_centers(b, side).first() {
        return Ok(Some(c));
    }
    let other = side.other();
    let big: Vec<usize> = (0..b.side_len(other))
        .filter(|&w| b.neighbors(other, w).len() >= 2)
        .collect();
    let ws = minimize_witness(big, |sub| {
        let n = b.side_len(side);
        (0..n).all(|v| sub.iter().any(|&w| !b.neighbors(other, w).contains(&v)))
    });
    Err(Obstruction::new(
        ObstructionKind::NoStarCenter,
        ws.into_iter().map(|w| combined_id(b, other, w)).collect(),
    ))
}

/// Checks that `center` on `side` meets every other-side neighborhood of size
/// at least two. An empty side admits no center and is accepted with `None`.
pub fn check_star_center(
    b: &BipartiteGraph,
    side: Side,
    center: Option<usize>,
) -> Result<(), String> {
    match center {
        None if b.side_len(side) == 0 => Ok(()),
        None => Err(format!("no star center given for non-empty side {side}")),
        Some(c) if c >= b.side_len(side) => Err(format!("star center {c} out of range")),
        Some(c) => {
            let other = side.other();
            match (0..b.side_len(other)).find(|&w| {
                let nb = b.neighbors(other, w);
                nb.len() >= 2 && nb.binary_search(&c).is_err()
            }) {
                Some(w) => Err(format!(
                    "{other}-vertex {w} has degree >= 2 but misses star center {c}"
                )),
                None => Ok(()),
            }
        }
    }
}

/// Witness for a balanced bisplit graph: `X = X1 ∪ X2`, `Y = Y1 ∪ Y2`,
/// `X1` complete to `Y`, and the edges between `X2` and `Y2` are exactly the
/// perfect matching `matching` (pairs `(x, y)`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BisplitPartition {
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
    pub y1: Vec<usize>,
    pub y2: Vec<usize>,
    pub matching: Vec<(usize, usize)>,
}

/// Checks every balanced bisplit condition for `p` on `b`.
pub fn check_bisplit_partition(b: &BipartiteGraph, p: &BisplitPartition) -> Result<(), String> {
    if b.nx() != b.ny() {
        return Err(format!("sides differ in size: {} vs {}", b.nx(), b.ny()));
    }
    let covers = |a: &[usize], c: &[usize], n: usize| {
        let mut all: Vec<usize> = a.iter().chain(c).copied().collect();
        all.sort_unstable();
        all == (0..n).collect::<Vec<_>>()
    };
    if !covers(&p.x1, &p.x2, b.nx()) {
        return Err("x1, x2 do not partition X".into());
    }
    if !covers(&p.y1, &p.y2, b.ny()) {
        return Err("y1, y2 do not partition Y".into());
    }
    if let Some(&x) = p.x1.iter().find(|&&x| b.x_neighbors(x).len() != b.ny()) {
        return Err(format!("x1 vertex {x} is not adjacent to all of Y"));
    }
    let mut in_y2 = vec![false; b.ny()];
    for &y in &p.y2 {
        in_y2[y] = true;
    }
    let mut actual: Vec<(usize, usize)> =
        p.x2.iter()
            .flat_map(|&x| {
                b.x_neighbors(x)
                    .iter()
                    .filter(|&&y| in_y2[y])
                    .map(move |&y| (x, y))
            })
            .collect();
    actual.sort_unstable();
    let mut claimed = p.matching.clone();
    claimed.sort_unstable();
    if actual != claimed {
        return Err("edges between x2 and y2 differ from the claimed matching".into());
    }
    let mut xs: Vec<usize> = claimed.iter().map(|e| e.0).collect();
    let mut ys: Vec<usize> = claimed.iter().map(|e| e.1).collect();
    xs.sort_unstable();
    ys.sort_unstable();
    let mut x2 = p.x2.clone();
    let mut y2 = p.y2.clone();
    x2.sort_unstable();
    y2.sort_unstable();
    if xs != x2 || ys != y2 {
        return Err("matching is not perfect between x2 and y2".into());
    }
    Ok(())
}

/// Balanced bisplit test. `X1` is taken as all X-vertices adjacent to the
/// whole of Y (any valid partition can be enlarged to this one); then every
/// remaining X-vertex needs a private Y-vertex whose only neighbor outside
/// `X1` is that vertex.
pub fn is_balanced_bisplit(b: &BipartiteGraph) -> Option<BisplitPartition> {
    if b.nx() != b.ny() {
        return None;
    }
    let ny = b.ny();
    let (x1, x2): (Vec<usize>, Vec<usize>) =
        (0..b.nx()).partition(|&x| b.x_neighbors(x).len() == ny);
    let mut in_x2 = vec![false; b.nx()];
    for &x in &x2 {
        in_x2[x] = true;
    }
    let mut matching = Vec::with_capacity(x2.len());
    let mut used = vec![false; ny];
    for &x in &x2 {
        let private =
            b.x_neighbors(x).iter().copied().find(|&y| {
                !used[y] && b.y_neighbors(y).iter().filter(|&&v| in_x2[v]).count() == 1
            })?;
        used[private] = true;
        matching.push((x, private));
    }
    let (y2, y1): (Vec<usize>, Vec<usize>) = (0..ny).partition(|&y| used[y]);
    let p = BisplitPartition {
        x1,
        x2,
        y1,
        y2,
        matching,
    };
    debug_assert!(check_bisplit_partition(b, &p).is_ok());
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{subdivision, Graph};

    fn subdivided_claw() -> BipartiteGraph {
        // X = a b c d, Y = edges ab ac ad
        subdivision(&Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap())
    }

    #[test]
    fn subdivided_claw_convex_not_biconvex() {
        let b = subdivided_claw();
        let ord = is_convex(&b).unwrap();
        assert_eq!(ord.side, Side::Y);
        check_side_ordering(&b, &ord).unwrap();
        let err = is_biconvex(&b).unwrap_err();
        assert_eq!(err.kind, ObstructionKind::NotCop);
        // the three Y-vertices, in combined ids
        assert_eq!(err.witness, vec![4, 5, 6]);
    }

    #[test]
    fn path_and_biclique_biconvex() {
        let p7 = subdivision(&Graph::path(4));
        let (x, y) = is_biconvex(&p7).unwrap();
        check_side_ordering(&p7, &x).unwrap();
        check_side_ordering(&p7, &y).unwrap();
        let k23 =
            BipartiteGraph::from_edges(2, 3, (0..2).flat_map(|x| (0..3).map(move |y| (x, y))))
                .unwrap();
        assert!(is_biconvex(&k23).is_ok());
    }

    #[test]
    fn six_cycle_not_chordal_bipartite() {
        let c6 = subdivision(&Graph::complete(3));
        let err = is_chordal_bipartite(&c6).unwrap_err();
        assert_eq!(err.kind, ObstructionKind::Hole);
        assert_eq!(err.witness.len(), 6);
        let g = c6.as_graph();
        let w = &err.witness;
        assert!((0..6).all(|i| g.has_edge(w[i], w[(i + 1) % 6])));
    }

    #[test]
    fn trees_are_chordal_bipartite() {
        assert!(is_chordal_bipartite(&subdivided_claw()).is_ok());
    }

    #[test]
    fn star_center_examples() {
        let leaves = BipartiteGraph::from_edges(3, 3, [(0, 0), (1, 1), (1, 2)]).unwrap();
        assert_eq!(is_star_convex(&leaves, Side::X).unwrap(), Some(0));
        let c6 = subdivision(&Graph::complete(3));
        assert_eq!(
            is_star_convex(&c6, Side::X).unwrap_err().kind,
            ObstructionKind::NoStarCenter
        );
        assert!(is_star_convex(&c6, Side::Y).is_err());
        assert_eq!(
            is_star_convex(&BipartiteGraph::new(0, 2), Side::X).unwrap(),
            None
        );
    }

    #[test]
    fn bisplit_examples() {
        assert!(is_balanced_bisplit(&subdivision(&Graph::complete(3))).is_none());
        assert!(is_balanced_bisplit(&BipartiteGraph::new(2, 3)).is_none());
        // X1 = {0}; x1 matched to y1; y0 in Y1 also sees x1
        let b = BipartiteGraph::from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let p = is_balanced_bisplit(&b).unwrap();
        check_bisplit_partition(&b, &p).unwrap();
    }
}
