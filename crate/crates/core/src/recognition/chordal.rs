use std::collections::VecDeque;

use super::{Obstruction, ObstructionKind};
use crate::graph::Graph;

/// Maximum cardinality search; returns vertices in visiting order. Ties go to
/// the smallest id.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Checks the perfect elimination property of `order`; on failure returns a
/// vertex together with two of its later neighbors that are non-adjacent.
fn peo_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&w) = later
            .iter()
            .find(|&&w| w != parent && !g.has_edge(parent, w))
        {
            return Some((v, parent, w));
        }
    }
    None
}

pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    order.len() == g.n()
        && order
            .iter()
            .all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
        && peo_violation(g, order).is_none()
}

/// Induced cycle through `v` whose neighbors on the cycle are the
/// non-adjacent `u` and `w`, if one exists.
fn hole_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        if x != u && x != w {
            blocked[x] = true;
        }
    }
    // shortest u-w path avoiding v and its other neighbors has no chords
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([u]);
    prev[u] = u;
    while let Some(a) = queue.pop_front() {
        if a == w {
            break;
        }
        for &b in g.neighbors(a) {
            if !blocked[b] && prev[b] == usize::MAX {
                prev[b] = a;
                queue.push_back(b);
            }
        }
    }
    if prev[w] == usize::MAX {
        return None;
    }
    let mut path = vec![w];
    let mut cur = w;
    while cur != u {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

fn find_hole(g: &Graph, hint: (usize, usize, usize)) -> Vec<usize> {
    if let Some(c) = hole_through(g, hint.0, hint.1, hint.2) {
        return c;
    }
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    if let Some(c) = hole_through(g, v, u, w) {
                        return c;
                    }
                }
            }
        }
    }
    unreachable!("a graph without a perfect elimination ordering has a hole")
}

/// Perfect elimination ordering of a chordal graph, or an induced cycle of
/// length at least four.
pub fn chordality(g: &Graph) -> Result<Vec<usize>, Obstruction> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    match peo_violation(g, &order) {
        None => Ok(order),
        Some(hint) => Err(Obstruction::new(ObstructionKind::Hole, find_hole(g, hint))),
    }
}

/// An induced diamond `[a, b, c, d]` (`a d` missing), if any.
pub fn find_diamond(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        let common: Vec<usize> = g.neighbor_set(b).intersection(g.neighbor_set(c)).collect();
        for (i, &a) in common.iter().enumerate() {
            if let Some(&d) = common[i + 1..].iter().find(|&&d| !g.has_edge(a, d)) {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

/// Block graph test: chordal and diamond-free (equivalently, every
/// biconnected component is a clique).
pub fn is_block_graph(g: &Graph) -> Result<(), Obstruction> {
    chordality(g)?;
    match find_diamond(g) {
        Some(d) => Err(Obstruction::new(ObstructionKind::Diamond, d.to_vec())),
        None => Ok(()),
    }
}
