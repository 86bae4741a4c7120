//! Simple undirected graphs, bipartite graphs, and the constructions that
//! connect them: half-squares, subdivisions and vertex-clique incidence
//! graphs.
//!
//! Vertices are dense ids `0..n`. Display labels, when present, live in a
//! sidecar vector and never influence any algorithm.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::GraphError;

/// One of the two colour classes of a [`BipartiteGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::X => f.write_str("x"),
            Side::Y => f.write_str("y"),
        }
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" | "X" => Ok(Side::X),
            "y" | "Y" => Ok(Side::Y),
            other => Err(format!("unknown side `{other}`, expected x or y")),
        }
    }
}

/// Finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted; a bitset row per vertex gives constant-time
/// adjacency tests.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        for v in 0..n {
            g.adj[v] = g.rows[v].ones().collect();
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.n(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if one is set, otherwise the id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Open neighborhood of `v` as a bitset over `0..n`.
    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    /// Closed neighborhood `N[v]` as a bitset.
    pub fn closed_neighbor_set(&self, v: usize) -> FixedBitSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.rows[u].contains(v)
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Whether `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether `vertices` are pairwise non-adjacent.
    pub fn is_stable(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for &w in &self.adj[u] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let mut g = Graph::from_edges(vertices.len(), edges).expect("induced edges are valid");
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Graph with the vertices in `removed` deleted, together with the
    /// surviving original ids in increasing order.
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let kept: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        (self.induced_subgraph(&kept), kept)
    }

    /// Copy of the graph with vertex ids permuted: old vertex `v` becomes
    /// `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n(), edges).expect("relabelled edges are valid")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Components with at least two vertices.
    pub fn big_components(&self) -> Vec<Vec<usize>> {
        self.components()
            .into_iter()
            .filter(|c| c.len() >= 2)
            .collect()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        let n = self.n();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 0).collect()
    }
}

/// Bipartite graph with sides `X = 0..nx` and `Y = 0..ny`.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    xadj: Vec<Vec<usize>>,
    yadj: Vec<Vec<usize>>,
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("nx", &self.nx())
            .field("ny", &self.ny())
            .field("edges", &self.edges())
            .finish()
    }
}

impl BipartiteGraph {
    pub fn new(nx: usize, ny: usize) -> Self {
        BipartiteGraph {
            xadj: vec![Vec::new(); nx],
            yadj: vec![Vec::new(); ny],
        }
    }

    /// Builds from `(x, y)` pairs; duplicates are merged.
    pub fn from_edges<I>(nx: usize, ny: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut xadj = vec![Vec::new(); nx];
        for (x, y) in edges {
            if x >= nx {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: nx });
            }
            if y >= ny {
                return Err(GraphError::VertexOutOfRange { vertex: y, n: ny });
            }
            xadj[x].push(y);
        }
        Ok(Self::from_x_neighborhoods(ny, xadj))
    }

    /// Builds from the Y-neighborhood of every X-vertex.
    pub fn from_x_neighborhoods(ny: usize, mut xadj: Vec<Vec<usize>>) -> Self {
        let mut yadj = vec![Vec::new(); ny];
        for (x, nb) in xadj.iter_mut().enumerate() {
            nb.sort_unstable();
            nb.dedup();
            for &y in nb.iter() {
                yadj[y].push(x);
            }
        }
        BipartiteGraph { xadj, yadj }
    }

    /// Builds from the X-neighborhood of every Y-vertex.
    pub fn from_y_neighborhoods(nx: usize, yadj: Vec<Vec<usize>>) -> Self {
        let mut xadj = vec![Vec::new(); nx];
        for (y, nb) in yadj.iter().enumerate() {
            for &x in nb {
                xadj[x].push(y);
            }
        }
        Self::from_x_neighborhoods(yadj.len(), xadj)
    }

    pub fn nx(&self) -> usize {
        self.xadj.len()
    }

    pub fn ny(&self) -> usize {
        self.yadj.len()
    }

    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::X => self.nx(),
            Side::Y => self.ny(),
        }
    }

    pub fn x_neighbors(&self, x: usize) -> &[usize] {
        &self.xadj[x]
    }

    pub fn y_neighbors(&self, y: usize) -> &[usize] {
        &self.yadj[y]
    }

    /// Neighbors of vertex `v` of `side` (they lie on the other side).
    pub fn neighbors(&self, side: Side, v: usize) -> &[usize] {
        match side {
            Side::X => &self.xadj[v],
            Side::Y => &self.yadj[v],
        }
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.nx() && self.xadj[x].binary_search(&y).is_ok()
    }

    pub fn num_edges(&self) -> usize {
        self.xadj.iter().map(Vec::len).sum()
    }

    /// Edges `(x, y)` sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.xadj
            .iter()
            .enumerate()
            .flat_map(|(x, nb)| nb.iter().map(move |&y| (x, y)))
            .collect()
    }

    /// The same graph with the roles of X and Y exchanged.
    pub fn swapped(&self) -> BipartiteGraph {
        BipartiteGraph {
            xadj: self.yadj.clone(),
            yadj: self.xadj.clone(),
        }
    }

    /// Copy without the Y-vertex `y`; later Y ids shift down by one.
    pub fn without_y(&self, y: usize) -> BipartiteGraph {
        let mut yadj = self.yadj.clone();
        yadj.remove(y);
        BipartiteGraph::from_y_neighborhoods(self.nx(), yadj)
    }

    /// Sub-bigraph induced by the given X- and Y-vertices, relabelled in the
    /// given orders.
    pub fn induced(&self, xs: &[usize], ys: &[usize]) -> BipartiteGraph {
        let mut ypos = vec![usize::MAX; self.ny()];
        for (j, &y) in ys.iter().enumerate() {
            ypos[y] = j;
        }
        let xadj = xs
            .iter()
            .map(|&x| {
                self.xadj[x]
                    .iter()
                    .filter_map(|&y| (ypos[y] != usize::MAX).then_some(ypos[y]))
                    .collect()
            })
            .collect();
        BipartiteGraph::from_x_neighborhoods(ys.len(), xadj)
    }

    /// The bipartite graph viewed as an ordinary graph on `nx + ny` vertices;
    /// X-vertex `x` keeps id `x` and Y-vertex `y` becomes `nx + y`.
    pub fn as_graph(&self) -> Graph {
        let nx = self.nx();
        Graph::from_edges(
            nx + self.ny(),
            self.edges().into_iter().map(|(x, y)| (x, nx + y)),
        )
        .expect("bipartite edges are valid")
    }

    /// Biadjacency matrix, rows indexed by X and columns by Y.
    pub fn biadjacency(&self) -> Vec<Vec<bool>> {
        self.xadj
            .iter()
            .map(|nb| {
                let mut row = vec![false; self.ny()];
                for &y in nb {
                    row[y] = true;
                }
                row
            })
            .collect()
    }
}

/// Half-square of `b` on `side`: two vertices of that side are adjacent iff
/// they have a common neighbor on the other side.
pub fn half_square(b: &BipartiteGraph, side: Side) -> Graph {
    let n = b.side_len(side);
    let other = side.other();
    let mut rows: Vec<FixedBitSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
    for w in 0..b.side_len(other) {
        let nb = b.neighbors(other, w);
        for &u in nb {
            for &v in nb {
                if u != v {
                    rows[u].insert(v);
                }
            }
        }
    }
    let edges = rows
        .iter()
        .enumerate()
        .flat_map(|(u, r)| r.ones().filter(move |&v| v > u).map(move |v| (u, v)))
        .collect::<Vec<_>>();
    Graph::from_edges(n, edges).expect("half-square edges are valid")
}

/// Subdivision of `g`: X is `V(g)`, Y is the sorted edge list, and each
/// edge-vertex is joined to its two endpoints.
pub fn subdivision(g: &Graph) -> BipartiteGraph {
    let yadj = g.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
    BipartiteGraph::from_y_neighborhoods(g.n(), yadj)
}

/// The maximal cliques of a graph, each sorted ascending, listed in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSet {
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueSet {
    fn canonical(mut cliques: Vec<Vec<usize>>) -> Self {
        for c in cliques.iter_mut() {
            c.sort_unstable();
        }
        cliques.sort();
        cliques.dedup();
        CliqueSet { cliques }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vec<usize>> {
        self.cliques.iter()
    }
}

/// All maximal cliques via Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &Graph) -> CliqueSet {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return CliqueSet::canonical(out);
    }
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, p, x, &mut out);
    CliqueSet::canonical(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.count_ones(..) == 0 {
        if x.count_ones(..) == 0 {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximizing |P ∩ N(u)| over u in P ∪ X
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection(g.neighbor_set(u)).count())
        .expect("P is non-empty");
    let candidates: Vec<usize> = p.difference(g.neighbor_set(pivot)).collect();
    for v in candidates {
        let nv = g.neighbor_set(v);
        let mut p2 = p.clone();
        p2.intersect_with(nv);
        let mut x2 = x.clone();
        x2.intersect_with(nv);
        r.push(v);
        bron_kerbosch(g, r, p2, x2, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// Maximal cliques of a chordal graph from a perfect elimination ordering
/// `peo` (every vertex's later neighbors form a clique).
///
/// The caller guarantees that `peo` is a perfect elimination ordering.
pub fn maximal_cliques_from_peo(g: &Graph, peo: &[usize]) -> CliqueSet {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<FixedBitSet> = peo
        .iter()
        .map(|&v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(v);
            for &w in g.neighbors(v) {
                if pos[w] > pos[v] {
                    s.insert(w);
                }
            }
            s
        })
        .collect();
    // Candidate i is maximal iff no earlier candidate contains it. Any
    // strict superset of candidate i must come from an earlier vertex.
    let mut out = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let size = c.count_ones(..);
        let dominated = candidates[..i]
            .iter()
            .any(|d| d.count_ones(..) > size && c.is_subset(d));
        if !dominated {
            out.push(c.ones().collect());
        }
    }
    CliqueSet::canonical(out)
}

/// Vertex-clique incidence bipartite graph: X is `V(g)`, Y the maximal
/// cliques of `g` in canonical order.
pub fn vertex_clique_incidence(g: &Graph) -> BipartiteGraph {
    incidence_from_cliques(g, &maximal_cliques(g))
}

/// Vertex-clique incidence graph for an already computed clique set.
pub fn incidence_from_cliques(g: &Graph, cliques: &CliqueSet) -> BipartiteGraph {
    let b = BipartiteGraph::from_y_neighborhoods(g.n(), cliques.cliques.clone());
    debug_assert!(half_square(&b, Side::X) == *g);
    b
}

/// Partition of the vertices into classes of true twins (equal closed
/// neighborhoods).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes sorted ascending, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Index into `classes` for every vertex.
    pub class_of: Vec<usize>,
}

impl TwinPartition {
    /// Smallest member of every class, in class order.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

pub fn true_twin_classes(g: &Graph) -> TwinPartition {
    let n = g.n();
    let mut by_nbhd: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let key: Vec<usize> = g.closed_neighbor_set(v).ones().collect();
        by_nbhd.entry(key).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_nbhd.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    let mut class_of = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    TwinPartition { classes, class_of }
}

/// Twin quotient: the subgraph induced by one representative (the smallest
/// id) per true-twin class. Vertex `i` of the quotient is class `i`.
pub fn twin_quotient(g: &Graph) -> (Graph, TwinPartition) {
    let twins = true_twin_classes(g);
    (g.induced_subgraph(&twins.representatives()), twins)
}

/// Replaces every vertex `v` by a clique of `sizes[v]` vertices, joining the
/// cliques of adjacent vertices completely. The copies of `v` receive the
/// consecutive ids starting at `sum(sizes[..v])`.
pub fn substitute(g: &Graph, sizes: &[usize]) -> Result<Graph, GraphError> {
    if sizes.len() != g.n() {
        return Err(GraphError::SizeCount {
            sizes: sizes.len(),
            n: g.n(),
        });
    }
    if let Some(v) = sizes.iter().position(|&s| s == 0) {
        return Err(GraphError::ZeroSubstitution(v));
    }
    let mut offset = Vec::with_capacity(g.n() + 1);
    offset.push(0);
    for &s in sizes {
        offset.push(offset.last().unwrap() + s);
    }
    let total = offset[g.n()];
    let mut edges = Vec::new();
    for v in 0..g.n() {
        for a in offset[v]..offset[v + 1] {
            for b in a + 1..offset[v + 1] {
                edges.push((a, b));
            }
        }
    }
    for (u, v) in g.edges() {
        for a in offset[u]..offset[u + 1] {
            for b in offset[v]..offset[v + 1] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(total, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(matches!(
            Graph::from_edges(2, [(1, 1)]),
            Err(GraphError::SelfLoop(1))
        ));
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(BipartiteGraph::from_edges(1, 1, [(0, 1)]).is_err());
    }

    #[test]
    fn half_square_of_six_cycle_is_triangle() {
        // x0 y0 x1 y1 x2 y2 (x0)
        let b = BipartiteGraph::from_edges(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])
            .unwrap();
        assert_eq!(half_square(&b, Side::X), Graph::complete(3));
        assert_eq!(half_square(&b, Side::Y), Graph::complete(3));
    }

    #[test]
    fn half_square_of_single_hub() {
        let b = BipartiteGraph::from_y_neighborhoods(4, vec![vec![0, 1, 2, 3]]);
        assert_eq!(half_square(&b, Side::X), Graph::complete(4));
        assert_eq!(half_square(&b, Side::Y), Graph::new(1));
    }

    #[test]
    fn subdivision_of_p4_round_trips() {
        let p4 = Graph::path(4);
        let s = subdivision(&p4);
        assert_eq!((s.nx(), s.ny()), (4, 3));
        assert_eq!(
            s.edges(),
            vec![(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)]
        );
        assert!((0..3).all(|y| s.y_neighbors(y).len() == 2));
        assert_eq!(half_square(&s, Side::X), p4);
    }

    #[test]
    fn subdivision_small_cases() {
        let s = subdivision(&Graph::complete(3));
        assert_eq!((s.nx(), s.ny(), s.num_edges()), (3, 3, 6));
        let e = subdivision(&Graph::new(3));
        assert_eq!((e.nx(), e.ny(), e.num_edges()), (3, 0, 0));
    }

    #[test]
    fn maximal_cliques_examples() {
        assert_eq!(
            maximal_cliques(&Graph::complete(3)).cliques,
            vec![vec![0, 1, 2]]
        );
        assert_eq!(
            maximal_cliques(&Graph::path(4)).cliques,
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
        // diamond a=0 b=1 c=2 d=3, missing ad
        let diamond = g(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            maximal_cliques(&diamond).cliques,
            vec![vec![0, 1, 2], vec![1, 2, 3]]
        );
        assert!(maximal_cliques(&Graph::new(0)).is_empty());
        assert_eq!(
            maximal_cliques(&Graph::new(2)).cliques,
            vec![vec![0], vec![1]]
        );
    }

    #[test]
    fn incidence_examples() {
        let k3 = vertex_clique_incidence(&Graph::complete(3));
        assert_eq!(k3.ny(), 1);
        assert_eq!(k3.y_neighbors(0), &[0, 1, 2]);
        let p4 = Graph::path(4);
        assert_eq!(vertex_clique_incidence(&p4), subdivision(&p4));
    }

    #[test]
    fn twin_classes_examples() {
        let two_k2 = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            true_twin_classes(&two_k2).classes,
            vec![vec![0, 1], vec![2, 3]]
        );
        assert_eq!(true_twin_classes(&Graph::cycle(4)).classes.len(), 4);
        assert_eq!(
            true_twin_classes(&Graph::complete(4)).classes,
            vec![vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn substitution_examples() {
        let two_k1 = Graph::new(2);
        assert_eq!(
            substitute(&two_k1, &[2, 2]).unwrap(),
            g(4, &[(0, 1), (2, 3)])
        );
        let p4 = Graph::path(4);
        assert_eq!(substitute(&p4, &[1, 1, 1, 1]).unwrap(), p4);
        assert_eq!(
            substitute(&Graph::complete(2), &[2, 3]).unwrap(),
            Graph::complete(5)
        );
        assert!(matches!(
            substitute(&p4, &[1, 0, 1, 1]),
            Err(GraphError::ZeroSubstitution(1))
        ));
    }

    #[test]
    fn components_and_universal() {
        // K1 + K3
        let h = g(4, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(h.components(), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(h.big_components(), vec![vec![1, 2, 3]]);
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(claw.universal_vertices(), vec![0]);
        assert!(Graph::path(4).universal_vertices().is_empty());
    }

    #[test]
    fn peo_cliques_match_general() {
        // paw: triangle 0 1 2 plus pendant 3 on 2
        let paw = g(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        let peo = [3, 0, 1, 2];
        assert_eq!(maximal_cliques_from_peo(&paw, &peo), maximal_cliques(&paw));
    }
}
