//! Brute-force ground truth for testing.
//!
//! Everything here works straight from definitions (subset scans,
//! permutation searches, exhaustive root enumeration) and uses only the
//! basic graph data model. Nothing in this module calls the polynomial
//! recognizers or the half-square constructions. Searches that would exceed
//! their budget refuse with an error instead of answering.

use crate::error::OracleError;
use crate::graph::{BipartiteGraph, Graph};
use crate::halfsquare::ClassTag;

/// Default cap on the vertex count for graph enumeration.
pub const DEFAULT_CAP: usize = 7;
/// Default step budget for the permutation and root searches.
pub const DEFAULT_BUDGET: u64 = 50_000_000;
/// Largest vertex count accepted by subset scans.
const SUBSET_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMode {
    AllLabeled,
    ConnectedOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub mode: EnumerationMode,
    pub cap: usize,
}

impl EnumerationSpec {
    pub fn all(n: usize) -> Self {
        EnumerationSpec {
            n,
            mode: EnumerationMode::AllLabeled,
            cap: DEFAULT_CAP,
        }
    }

    pub fn connected(n: usize) -> Self {
        EnumerationSpec {
            n,
            mode: EnumerationMode::ConnectedOnly,
            cap: DEFAULT_CAP,
        }
    }
}

/// All labeled graphs on `n` vertices (or the connected ones), in the order
/// of the bitmask over vertex pairs `(u, v)`, `u < v`, listed
/// lexicographically.
pub fn enumerate_graphs(
    spec: &EnumerationSpec,
) -> Result<impl Iterator<Item = Graph>, OracleError> {
    if spec.n > spec.cap {
        return Err(OracleError::CapExceeded {
            n: spec.n,
            cap: spec.cap,
        });
    }
    let n = spec.n;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    let connected_only = spec.mode == EnumerationMode::ConnectedOnly;
    Ok((0..total).filter_map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("enumerated edges are valid");
        (!connected_only || g.is_connected()).then_some(g)
    }))
}

struct Steps {
    left: u64,
    budget: u64,
}

impl Steps {
    fn new(budget: u64) -> Self {
        Steps {
            left: budget,
            budget,
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        if self.left == 0 {
            return Err(OracleError::BudgetExceeded {
                budget: self.budget,
            });
        }
        self.left -= 1;
        Ok(())
    }
}

/// Adjacency as vertex bitmasks.
fn masks(g: &Graph) -> Result<Vec<u32>, OracleError> {
    if g.n() > SUBSET_CAP {
        return Err(OracleError::TooLarge(format!(
            "{} vertices exceed the subset-scan limit of {SUBSET_CAP}",
            g.n()
        )));
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect())
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask >> i & 1 == 1)
}

fn is_clique_mask(adj: &[u32], s: u32) -> bool {
    members(s).all(|v| s & !(1 << v) & !adj[v] == 0)
}

fn is_connected_mask(adj: &[u32], s: u32) -> bool {
    if s == 0 {
        return true;
    }
    let mut seen = 1u32 << s.trailing_zeros();
    loop {
        let next = members(seen).fold(seen, |acc, v| acc | (adj[v] & s));
        if next == seen {
            return seen == s;
        }
        seen = next;
    }
}

/// Nonempty cliques, in increasing mask order.
fn all_cliques(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    (1u32..1 << n).filter(|&s| is_clique_mask(adj, s)).collect()
}

fn maximal_clique_masks(adj: &[u32]) -> Vec<u32> {
    let cl = all_cliques(adj);
    cl.iter()
        .copied()
        .filter(|&c| !cl.iter().any(|&d| d != c && d & c == c))
        .collect()
}

/// Whether some induced subgraph on at least `min_len` vertices is a cycle.
fn has_induced_cycle(adj: &[u32], min_len: u32) -> bool {
    let n = adj.len();
    (1u32..1 << n).any(|s| {
        s.count_ones() >= min_len
            && members(s).all(|v| (adj[v] & s).count_ones() == 2)
            && is_connected_mask(adj, s)
    })
}

/// Whether the induced subgraph on `s` is a k-sun: `k` pairwise nonadjacent
/// vertices of degree two, the other `k` forming a clique, and the
/// degree-two vertices joined to consecutive clique vertices around one
/// cycle.
fn is_sun(adj: &[u32], s: u32) -> bool {
    let size = s.count_ones();
    if size < 6 || size % 2 == 1 {
        return false;
    }
    let k = size / 2;
    let low: u32 = members(s)
        .filter(|&v| (adj[v] & s).count_ones() == 2)
        .fold(0, |m, v| m | 1 << v);
    let high = s & !low;
    if low.count_ones() != k || !is_clique_mask(adj, high) {
        return false;
    }
    if members(low).any(|v| adj[v] & low != 0 || (adj[v] & high).count_ones() != 2) {
        return false;
    }
    if members(high).any(|t| (adj[t] & low).count_ones() != 2) {
        return false;
    }
    // the edges between the two halves must form a single cycle
    let mut cross = vec![0u32; adj.len()];
    for v in members(s) {
        cross[v] = adj[v] & s & if low >> v & 1 == 1 { high } else { low };
    }
    is_connected_mask(&cross, s)
}

/// Interval graph test by backtracking over arrangements of the maximal
/// cliques: a vertex may not reappear once a clique without it follows one
/// with it.
pub fn brute_interval(g: &Graph) -> Result<bool, OracleError> {
    brute_interval_with(g, DEFAULT_BUDGET)
}

pub fn brute_interval_with(g: &Graph, budget: u64) -> Result<bool, OracleError> {
    let adj = masks(g)?;
    let cliques = maximal_clique_masks(&adj);
    let mut steps = Steps::new(budget);
    let mut used = vec![false; cliques.len()];
    arrange(&cliques, &mut used, 0, 0, &mut steps)
}

fn arrange(
    cliques: &[u32],
    used: &mut [bool],
    open: u32,
    closed: u32,
    steps: &mut Steps,
) -> Result<bool, OracleError> {
    if used.iter().all(|&u| u) {
        return Ok(true);
    }
    for c in 0..cliques.len() {
        if used[c] || cliques[c] & closed != 0 {
            continue;
        }
        steps.tick()?;
        used[c] = true;
        let now_closed = closed | (open & !cliques[c]);
        if arrange(cliques, used, cliques[c], now_closed, steps)? {
            return Ok(true);
        }
        used[c] = false;
    }
    Ok(false)
}

pub fn brute_has_claw(g: &Graph) -> Result<bool, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    Ok((0..n).any(|c| {
        let nb: Vec<usize> = members(adj[c]).collect();
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                adj[a] >> b & 1 == 0
                    && nb[i + j + 2..]
                        .iter()
                        .any(|&d| adj[a] >> d & 1 == 0 && adj[b] >> d & 1 == 0)
            })
        })
    }))
}

/// Interval and claw-free.
pub fn brute_unit_interval(g: &Graph) -> Result<bool, OracleError> {
    Ok(brute_interval(g)? && !brute_has_claw(g)?)
}

/// No induced cycle of length at least four.
pub fn brute_chordal(g: &Graph) -> Result<bool, OracleError> {
    Ok(!has_induced_cycle(&masks(g)?, 4))
}

/// Chordal and free of induced k-suns for every `k >= 3`.
pub fn brute_strongly_chordal(g: &Graph) -> Result<bool, OracleError> {
    let adj = masks(g)?;
    if has_induced_cycle(&adj, 4) {
        return Ok(false);
    }
    Ok(!(1u32..1 << g.n()).any(|s| is_sun(&adj, s)))
}

/// Every induced subgraph that is 2-connected (connected, at least three
/// vertices, no cut vertex) is complete. Connectivity is not required.
pub fn brute_block_graph(g: &Graph) -> Result<bool, OracleError> {
    let adj = masks(g)?;
    Ok(!(1u32..1 << g.n()).any(|s| {
        s.count_ones() >= 3
            && is_connected_mask(&adj, s)
            && members(s).all(|v| is_connected_mask(&adj, s & !(1 << v)))
            && !is_clique_mask(&adj, s)
    }))
}

/// Consecutive-ones test by building column orders position by position;
/// a partial order is abandoned as soon as some row's placed columns are
/// not a block that can still be completed.
pub fn brute_cop(rows: &[Vec<usize>], ncols: usize) -> Result<bool, OracleError> {
    brute_cop_with(rows, ncols, DEFAULT_BUDGET)
}

pub fn brute_cop_with(rows: &[Vec<usize>], ncols: usize, budget: u64) -> Result<bool, OracleError> {
    let sets: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| {
            let mut s = vec![false; ncols];
            for &c in r {
                s[c] = true;
            }
            s
        })
        .collect();
    let mut order = Vec::with_capacity(ncols);
    let mut used = vec![false; ncols];
    let mut steps = Steps::new(budget);
    extend_cop(&sets, &mut order, &mut used, &mut steps)
}

fn prefix_ok(sets: &[Vec<bool>], order: &[usize]) -> bool {
    sets.iter().all(|s| {
        let total = s.iter().filter(|&&b| b).count();
        let pos: Vec<usize> = (0..order.len()).filter(|&i| s[order[i]]).collect();
        let Some((&first, &last)) = pos.first().zip(pos.last()) else {
            return true;
        };
        let contiguous = last - first + 1 == pos.len();
        contiguous && (pos.len() == total || last + 1 == order.len())
    })
}

fn extend_cop(
    sets: &[Vec<bool>],
    order: &mut Vec<usize>,
    used: &mut [bool],
    steps: &mut Steps,
) -> Result<bool, OracleError> {
    if order.len() == used.len() {
        return Ok(true);
    }
    for c in 0..used.len() {
        if used[c] {
            continue;
        }
        steps.tick()?;
        order.push(c);
        used[c] = true;
        if prefix_ok(sets, order) && extend_cop(sets, order, used, steps)? {
            return Ok(true);
        }
        order.pop();
        used[c] = false;
    }
    Ok(false)
}

/// Whether some row and column permutation leaves no Γ (rows `i < j`,
/// columns `k < l`, ones at `(i,k)`, `(i,l)`, `(j,k)` and a zero at
/// `(j,l)`).
///
/// Every row permutation is tried. For a fixed row order, placing column
/// `a` before column `b` creates a Γ exactly when some row pair forces it,
/// so a suitable column order exists iff these forbidden placements leave
/// an acyclic precedence relation.
pub fn brute_gamma_free(m: &[Vec<bool>]) -> Result<bool, OracleError> {
    brute_gamma_free_with(m, DEFAULT_BUDGET)
}

pub fn brute_gamma_free_with(m: &[Vec<bool>], budget: u64) -> Result<bool, OracleError> {
    let r = m.len();
    let c = m.first().map_or(0, |row| row.len());
    let mut steps = Steps::new(budget);
    let mut perm: Vec<usize> = (0..r).collect();
    loop {
        steps.tick()?;
        if columns_orderable(m, &perm, c) {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn columns_orderable(m: &[Vec<bool>], rows: &[usize], c: usize) -> bool {
    // bad[a][b]: a placed before b creates a Γ
    let mut bad = vec![vec![false; c]; c];
    for (p, &i) in rows.iter().enumerate() {
        for &j in &rows[p + 1..] {
            for a in 0..c {
                for b in 0..c {
                    if a != b && m[i][a] && m[i][b] && m[j][a] && !m[j][b] {
                        bad[a][b] = true;
                    }
                }
            }
        }
    }
    // b must precede a whenever bad[a][b]; check the precedences are acyclic
    let mut indeg: Vec<usize> = bad
        .iter()
        .map(|row| row.iter().filter(|&&x| x).count())
        .collect();
    let mut ready: Vec<usize> = (0..c).filter(|&a| indeg[a] == 0).collect();
    let mut done = 0;
    while let Some(b) = ready.pop() {
        done += 1;
        for a in 0..c {
            if bad[a][b] {
                indeg[a] -= 1;
                if indeg[a] == 0 {
                    ready.push(a);
                }
            }
        }
    }
    done == c
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn twin_reps(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let closed = |v: usize| adj[v] | 1 << v;
    (0..n)
        .filter(|&v| (0..v).all(|w| closed(w) != closed(v)))
        .collect()
}

fn is_split_brute(adj: &[u32], vs: &[usize]) -> bool {
    let k = vs.len();
    (0u32..1 << k).any(|sel| {
        let (mut q, mut s) = (0u32, 0u32);
        for (i, &v) in vs.iter().enumerate() {
            if sel >> i & 1 == 1 {
                q |= 1 << v;
            } else {
                s |= 1 << v;
            }
        }
        is_clique_mask(adj, q) && members(s).all(|v| adj[v] & s == 0)
    })
}

fn big_component_masks(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut seen = 0u32;
    let mut out = Vec::new();
    for v in 0..n {
        if seen >> v & 1 == 1 {
            continue;
        }
        let mut comp = 1u32 << v;
        loop {
            let next = members(comp).fold(comp, |acc, w| acc | adj[w]);
            if next == comp {
                break;
            }
            comp = next;
        }
        seen |= comp;
        if comp.count_ones() >= 2 {
            out.push(comp);
        }
    }
    out
}

/// The star convex half-square condition: at most one big component with a
/// universal vertex, or a split graph after keeping one vertex per class of
/// equal closed neighborhoods.
pub fn brute_star_convex_condition(g: &Graph) -> Result<bool, OracleError> {
    let adj = masks(g)?;
    let big = big_component_masks(&adj);
    let first = match big.as_slice() {
        [] => true,
        [c] => members(*c).any(|v| (adj[v] & c).count_ones() + 1 == c.count_ones()),
        _ => false,
    };
    Ok(first || is_split_brute(&adj, &twin_reps(&adj)))
}

/// The star biconvex half-square condition: at most one big component, and
/// its twin quotient is a split graph with a universal vertex.
pub fn brute_star_biconvex_condition(g: &Graph) -> Result<bool, OracleError> {
    let adj = masks(g)?;
    let big = big_component_masks(&adj);
    let comp = match big.as_slice() {
        [] => return Ok(true),
        [c] => *c,
        _ => return Ok(false),
    };
    let reps: Vec<usize> = twin_reps(&adj)
        .into_iter()
        .filter(|&v| comp >> v & 1 == 1)
        .collect();
    let rep_mask = reps.iter().fold(0u32, |m, &v| m | 1 << v);
    let universal = reps
        .iter()
        .any(|&v| (adj[v] & rep_mask).count_ones() + 1 == reps.len() as u32);
    Ok(universal && is_split_brute(&adj, &reps))
}

/// Class-level ground truth for "is a half-square of a root in `class`".
/// Tree membership is strict unless `forest` is set.
pub fn class_oracle(g: &Graph, class: ClassTag, forest: bool) -> Result<bool, OracleError> {
    match class {
        ClassTag::StarConvex => brute_star_convex_condition(g),
        ClassTag::StarBiconvex => brute_star_biconvex_condition(g),
        ClassTag::Convex => brute_interval(g),
        ClassTag::Biconvex => brute_unit_interval(g),
        ClassTag::ChordalBipartite => brute_strongly_chordal(g),
        ClassTag::Tree => Ok(brute_block_graph(g)? && (forest || g.is_connected())),
        ClassTag::BalancedBisplit => Ok(brute_root_search(g, class, g.n(), true)?.is_some()),
    }
}

fn neighborhoods(b: &BipartiteGraph, x_side: bool) -> Vec<Vec<usize>> {
    if x_side {
        (0..b.nx()).map(|x| b.x_neighbors(x).to_vec()).collect()
    } else {
        (0..b.ny()).map(|y| b.y_neighbors(y).to_vec()).collect()
    }
}

/// Some ordering of X makes every `N(y)` contiguous, or vice versa.
pub fn is_convex_def(b: &BipartiteGraph) -> Result<bool, OracleError> {
    Ok(brute_cop(&neighborhoods(b, false), b.nx())? || brute_cop(&neighborhoods(b, true), b.ny())?)
}

pub fn is_biconvex_def(b: &BipartiteGraph) -> Result<bool, OracleError> {
    Ok(brute_cop(&neighborhoods(b, false), b.nx())? && brute_cop(&neighborhoods(b, true), b.ny())?)
}

/// No induced cycle of length at least six.
pub fn is_chordal_bipartite_def(b: &BipartiteGraph) -> Result<bool, OracleError> {
    Ok(!has_induced_cycle(&masks(&b.as_graph())?, 6))
}

/// A star on one side with center `c` such that every other-side
/// neighborhood induces a substar: it contains `c` or has at most one
/// vertex.
fn star_on(nbhds: &[Vec<usize>], side_len: usize) -> bool {
    side_len == 0 || (0..side_len).any(|c| nbhds.iter().all(|nb| nb.len() <= 1 || nb.contains(&c)))
}

pub fn is_star_convex_def(b: &BipartiteGraph) -> bool {
    star_on(&neighborhoods(b, false), b.nx()) || star_on(&neighborhoods(b, true), b.ny())
}

pub fn is_star_biconvex_def(b: &BipartiteGraph) -> bool {
    star_on(&neighborhoods(b, false), b.nx()) && star_on(&neighborhoods(b, true), b.ny())
}

/// Connected and acyclic (the empty graph counts as a tree); with `forest`
/// only acyclic.
pub fn is_tree_def(b: &BipartiteGraph, forest: bool) -> bool {
    let g = b.as_graph();
    let comps = g.components().len();
    g.m() + comps == g.n() && (forest || comps <= 1)
}

/// Definition check over all choices of `X1`: equal sides, `X1` complete to
/// Y, and the edges between `X2` and some `Y2` a perfect matching. Such a
/// `Y2` exists iff every `x` in `X2` has a Y-vertex whose only `X2`-neighbor
/// is `x`; those Y-vertices are then distinct and can be taken as `Y2`.
pub fn is_balanced_bisplit_def(b: &BipartiteGraph) -> Result<bool, OracleError> {
    let (nx, ny) = (b.nx(), b.ny());
    if nx != ny {
        return Ok(false);
    }
    let full: Vec<usize> = (0..nx).filter(|&x| b.x_neighbors(x).len() == ny).collect();
    if full.len() > SUBSET_CAP {
        return Err(OracleError::TooLarge(format!(
            "{} full-degree vertices",
            full.len()
        )));
    }
    let ym: Vec<u64> = (0..ny)
        .map(|y| b.y_neighbors(y).iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    let all: u64 = if nx == 64 { u64::MAX } else { (1u64 << nx) - 1 };
    Ok((0u32..1 << full.len()).any(|sel| {
        let x1 = members(sel).fold(0u64, |m, i| m | 1 << full[i]);
        let x2 = all & !x1;
        (0..nx)
            .filter(|&x| x2 >> x & 1 == 1)
            .all(|x| ym.iter().any(|&n| n & x2 == 1 << x))
    }))
}

/// Whether `b` belongs to `class`, by definition.
pub fn root_in_class(b: &BipartiteGraph, class: ClassTag) -> Result<bool, OracleError> {
    match class {
        ClassTag::StarConvex => Ok(is_star_convex_def(b)),
        ClassTag::StarBiconvex => Ok(is_star_biconvex_def(b)),
        ClassTag::Convex => is_convex_def(b),
        ClassTag::Biconvex => is_biconvex_def(b),
        ClassTag::ChordalBipartite => is_chordal_bipartite_def(b),
        ClassTag::Tree => Ok(is_tree_def(b, false)),
        ClassTag::BalancedBisplit => is_balanced_bisplit_def(b),
    }
}

/// Whether the Y-neighborhoods (vertex masks) produce exactly the edges of
/// the graph with adjacency masks `adj` as common-neighbor pairs.
fn reproduces(adj: &[u32], family: &[u32]) -> bool {
    let mut got = vec![0u32; adj.len()];
    for &s in family {
        for v in members(s) {
            got[v] |= s & !(1 << v);
        }
    }
    got == adj
}

fn root_from_masks(n: usize, family: &[u32]) -> BipartiteGraph {
    BipartiteGraph::from_y_neighborhoods(n, family.iter().map(|&s| members(s).collect()).collect())
}

/// Exhaustive search for a root of `g` in `class` with at most `w_max`
/// Y-vertices.
///
/// A Y-neighborhood must be a clique of `g`, otherwise it creates a
/// non-edge. With `pruned` set only cliques of size at least two forming an
/// antichain are tried: dropping a Y-vertex of degree at most one, or one
/// whose neighborhood lies inside another's, keeps the half-square and the
/// class. Without it all multisets of nonempty cliques are searched.
///
/// For balanced bisplit roots `|Y| = |V|` is forced and the pruned search
/// takes `X1` among the universal vertices (which are interchangeable),
/// matches every other vertex to a private Y-vertex, and tries all
/// multisets of `|X1|` neighborhoods built from maximal cliques of the
/// rest. The unpruned search enumerates all multisets of `|V|` cliques,
/// including the empty one.
pub fn brute_root_search(
    g: &Graph,
    class: ClassTag,
    w_max: usize,
    pruned: bool,
) -> Result<Option<BipartiteGraph>, OracleError> {
    brute_root_search_with(g, class, w_max, pruned, DEFAULT_BUDGET)
}

pub fn brute_root_search_with(
    g: &Graph,
    class: ClassTag,
    w_max: usize,
    pruned: bool,
    budget: u64,
) -> Result<Option<BipartiteGraph>, OracleError> {
    let adj = masks(g)?;
    let n = g.n();
    let mut steps = Steps::new(budget);
    if class == ClassTag::BalancedBisplit {
        return if pruned {
            bisplit_search(&adj, &mut steps)
        } else {
            let mut cands = vec![0u32];
            cands.extend(all_cliques(&adj));
            let mut fam = Vec::new();
            multiset_search(&adj, class, &cands, n, n, &mut fam, 0, &mut steps)
        };
    }
    let cands: Vec<u32> = all_cliques(&adj)
        .into_iter()
        .filter(|&s| !pruned || s.count_ones() >= 2)
        .collect();
    let mut fam = Vec::new();
    if pruned {
        antichain_search(&adj, class, &cands, w_max, &mut fam, 0, &mut steps)
    } else {
        multiset_search(&adj, class, &cands, 0, w_max, &mut fam, 0, &mut steps)
    }
}

fn accept(
    adj: &[u32],
    class: ClassTag,
    fam: &[u32],
) -> Result<Option<BipartiteGraph>, OracleError> {
    if !reproduces(adj, fam) {
        return Ok(None);
    }
    let b = root_from_masks(adj.len(), fam);
    Ok(root_in_class(&b, class)?.then_some(b))
}

fn antichain_search(
    adj: &[u32],
    class: ClassTag,
    cands: &[u32],
    w_max: usize,
    fam: &mut Vec<u32>,
    from: usize,
    steps: &mut Steps,
) -> Result<Option<BipartiteGraph>, OracleError> {
    steps.tick()?;
    if let Some(b) = accept(adj, class, fam)? {
        return Ok(Some(b));
    }
    if fam.len() == w_max {
        return Ok(None);
    }
    for i in from..cands.len() {
        let c = cands[i];
        if fam.iter().any(|&f| f & c == c || f & c == f) {
            continue;
        }
        fam.push(c);
        if let Some(b) = antichain_search(adj, class, cands, w_max, fam, i + 1, steps)? {
            return Ok(Some(b));
        }
        fam.pop();
    }
    Ok(None)
}

/// Multisets of size between `w_min` and `w_max`, in nondecreasing index
/// order.
#[allow(clippy::too_many_arguments)]
fn multiset_search(
    adj: &[u32],
    class: ClassTag,
    cands: &[u32],
    w_min: usize,
    w_max: usize,
    fam: &mut Vec<u32>,
    from: usize,
    steps: &mut Steps,
) -> Result<Option<BipartiteGraph>, OracleError> {
    steps.tick()?;
    if fam.len() >= w_min {
        if let Some(b) = accept(adj, class, fam)? {
            return Ok(Some(b));
        }
    }
    if fam.len() == w_max {
        return Ok(None);
    }
    for i in from..cands.len() {
        fam.push(cands[i]);
        if let Some(b) = multiset_search(adj, class, cands, w_min, w_max, fam, i, steps)? {
            return Ok(Some(b));
        }
        fam.pop();
    }
    Ok(None)
}

fn bisplit_search(adj: &[u32], steps: &mut Steps) -> Result<Option<BipartiteGraph>, OracleError> {
    let n = adj.len();
    let all: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let universal: Vec<usize> = (0..n).filter(|&v| adj[v] | 1 << v == all).collect();
    for j in 0..=universal.len() {
        let x1 = universal[..j].iter().fold(0u32, |m, &v| m | 1 << v);
        let x2 = all & !x1;
        // maximal cliques of the graph induced on X2, plus the empty set
        let sub: Vec<u32> = (0..n).map(|v| adj[v] & x2).collect();
        let mut parts = vec![0u32];
        parts.extend(
            maximal_clique_masks(&sub)
                .into_iter()
                .filter(|&c| c & x2 == c),
        );
        let private: Vec<u32> = members(x2).map(|x| x1 | 1 << x).collect();
        let mut chosen = Vec::new();
        if let Some(b) = bisplit_y1(adj, x1, &parts, &private, j, &mut chosen, 0, steps)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn bisplit_y1(
    adj: &[u32],
    x1: u32,
    parts: &[u32],
    private: &[u32],
    j: usize,
    chosen: &mut Vec<u32>,
    from: usize,
    steps: &mut Steps,
) -> Result<Option<BipartiteGraph>, OracleError> {
    steps.tick()?;
    if chosen.len() == j {
        let fam: Vec<u32> = chosen
            .iter()
            .map(|&c| c | x1)
            .chain(private.iter().copied())
            .collect();
        if !reproduces(adj, &fam) {
            return Ok(None);
        }
        let b = root_from_masks(adj.len(), &fam);
        return Ok(is_balanced_bisplit_def(&b)?.then_some(b));
    }
    for i in from..parts.len() {
        chosen.push(parts[i]);
        if let Some(b) = bisplit_y1(adj, x1, parts, private, j, chosen, i, steps)? {
            return Ok(Some(b));
        }
        chosen.pop();
    }
    Ok(None)
}
