//! Doubly lexical orderings of 0-1 matrices and the Γ-freeness test behind
//! strongly chordal and chordal bipartite recognition.
//!
//! Convention: under the ordering, rows and columns read as 0-1 vectors with
//! the last position most significant are nondecreasing. A Γ is a pair of
//! rows `i < j` and columns `k < l` with ones at `(i,k)`, `(i,l)`, `(j,k)`
//! and a zero at `(j,l)`. A matrix admits a Γ-free ordering iff its doubly
//! lexical ordering is Γ-free.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use super::chordal::chordality;
use super::minimize::minimize_witness;
use super::{Obstruction, ObstructionKind};
use crate::graph::Graph;

/// Dense 0-1 matrix stored as one bitset per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMatrix {
    ncols: usize,
    rows: Vec<FixedBitSet>,
}

impl BinaryMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        BinaryMatrix {
            ncols,
            rows: (0..nrows)
                .map(|_| FixedBitSet::with_capacity(ncols))
                .collect(),
        }
    }

    /// From rows given as lists of column indices with a one.
    pub fn from_row_supports(supports: &[Vec<usize>], ncols: usize) -> Self {
        let mut m = BinaryMatrix::zeros(supports.len(), ncols);
        for (r, s) in supports.iter().enumerate() {
            for &c in s {
                m.rows[r].insert(c);
            }
        }
        m
    }

    pub fn from_dense(rows: &[Vec<bool>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let supports: Vec<Vec<usize>> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix");
                r.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(c, _)| c)
                    .collect()
            })
            .collect();
        Self::from_row_supports(&supports, ncols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].contains(c)
    }

    pub fn row(&self, r: usize) -> &FixedBitSet {
        &self.rows[r]
    }

    pub fn to_dense(&self) -> Vec<Vec<bool>> {
        self.rows
            .iter()
            .map(|r| (0..self.ncols).map(|c| r.contains(c)).collect())
            .collect()
    }

    /// The matrix with rows and columns rearranged: entry `(i, j)` of the
    /// result is entry `(row_perm[i], col_perm[j])` of `self`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(row_perm.len(), col_perm.len());
        for (i, &r) in row_perm.iter().enumerate() {
            for (j, &c) in col_perm.iter().enumerate() {
                if self.rows[r].contains(c) {
                    out.rows[i].insert(j);
                }
            }
        }
        out
    }
}

/// Closed-neighborhood matrix of `g`: adjacency plus a full diagonal.
pub fn closed_neighborhood_matrix(g: &Graph) -> BinaryMatrix {
    BinaryMatrix {
        ncols: g.n(),
        rows: (0..g.n()).map(|v| g.closed_neighbor_set(v)).collect(),
    }
}

/// Row and column arrangement of a 0-1 matrix; `row_perm[i]` is the original
/// row shown at position `i`, likewise for columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublyLexOrdering {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub gamma_free: bool,
}

/// Compares two rows' block-count profiles. `Greater` means `a` is the
/// lexicographically larger row once every block puts the next row's ones
/// first.
fn compare_profiles(a: &[(usize, usize)], b: &[(usize, usize)]) -> Ordering {
    for (&(ba, ca), &(bb, cb)) in a.iter().zip(b) {
        if ba != bb {
            return if ba < bb {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        if ca != cb {
            return ca.cmp(&cb);
        }
    }
    a.len().cmp(&b.len())
}

/// Computes a doubly lexical ordering by greedy row selection with column
/// partition refinement, then reports whether it is Γ-free.
///
/// Rows are chosen one at a time (first to last in descending form): the
/// next row is the one whose ones, counted per current column block, form
/// the largest profile. Each chosen row splits every column block into its
/// ones followed by its zeros. Reversing both resulting orders yields the
/// ascending, last-most-significant convention. Ties are resolved so that
/// equal rows and equal columns end up in ascending id order.
pub fn doubly_lexical(m: &BinaryMatrix) -> DoublyLexOrdering {
    let nrows = m.nrows();
    let ncols = m.ncols();
    let mut blocks: Vec<Vec<usize>> = if ncols == 0 {
        Vec::new()
    } else {
        vec![(0..ncols).rev().collect()]
    };
    let mut block_of = vec![0usize; ncols];
    let mut remaining: Vec<usize> = (0..nrows).collect();
    let mut row_order = Vec::with_capacity(nrows);
    let mut scratch = Vec::new();

    while !remaining.is_empty() {
        let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
        for (idx, &r) in remaining.iter().enumerate() {
            scratch.clear();
            scratch.extend(m.rows[r].ones().map(|c| block_of[c]));
            scratch.sort_unstable();
            let mut profile: Vec<(usize, usize)> = Vec::new();
            for &b in &scratch {
                match profile.last_mut() {
                    Some((lb, cnt)) if *lb == b => *cnt += 1,
                    _ => profile.push((b, 1)),
                }
            }
            let better = match &best {
                None => true,
                Some((bi, bp)) => match compare_profiles(&profile, bp) {
                    Ordering::Greater => true,
                    Ordering::Equal => r > remaining[*bi],
                    Ordering::Less => false,
                },
            };
            if better {
                best = Some((idx, profile));
            }
        }
        let (idx, _) = best.expect("remaining is non-empty");
        let r = remaining.remove(idx);
        row_order.push(r);

        let row = &m.rows[r];
        let mut next = Vec::with_capacity(blocks.len() * 2);
        for block in blocks.drain(..) {
            let (ones, zeros): (Vec<usize>, Vec<usize>) =
                block.into_iter().partition(|&c| row.contains(c));
            if !ones.is_empty() {
                next.push(ones);
            }
            if !zeros.is_empty() {
                next.push(zeros);
            }
        }
        blocks = next;
        for (bi, block) in blocks.iter().enumerate() {
            for &c in block {
                block_of[c] = bi;
            }
        }
    }

    let mut col_order: Vec<usize> = blocks.into_iter().flatten().collect();
    row_order.reverse();
    col_order.reverse();
    let mut ordering = DoublyLexOrdering {
        row_perm: row_order,
        col_perm: col_order,
        gamma_free: false,
    };
    ordering.gamma_free = find_gamma(m, &ordering).is_none();
    ordering
}

/// Checks the doubly lexical convention for `ord` on `m` by direct scan.
pub fn is_doubly_lexical(m: &BinaryMatrix, ord: &DoublyLexOrdering) -> bool {
    if !is_permutation(&ord.row_perm, m.nrows()) || !is_permutation(&ord.col_perm, m.ncols()) {
        return false;
    }
    let p = m.permuted(&ord.row_perm, &ord.col_perm);
    let rows_ok = (1..p.nrows()).all(|i| {
        (0..p.ncols())
            .rev()
            .find(|&c| p.get(i - 1, c) != p.get(i, c))
            .is_none_or(|c| p.get(i, c))
    });
    let cols_ok = (1..p.ncols()).all(|j| {
        (0..p.nrows())
            .rev()
            .find(|&r| p.get(r, j - 1) != p.get(r, j))
            .is_none_or(|r| p.get(r, j))
    });
    rows_ok && cols_ok
}

fn is_permutation(perm: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    perm.len() == n
        && perm
            .iter()
            .all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

/// First Γ in the matrix arranged by `ord`, as original indices
/// `(row_i, row_j, col_k, col_l)` with `row_i` above `row_j` and `col_k` left
/// of `col_l`.
pub fn find_gamma(
    m: &BinaryMatrix,
    ord: &DoublyLexOrdering,
) -> Option<(usize, usize, usize, usize)> {
    let p = m.permuted(&ord.row_perm, &ord.col_perm);
    for i in 0..p.nrows() {
        for j in i + 1..p.nrows() {
            let ri = p.row(i);
            let rj = p.row(j);
            let Some(k) = ri.intersection(rj).next() else {
                continue;
            };
            if let Some(l) = ri.difference(rj).find(|&l| l > k) {
                return Some((
                    ord.row_perm[i],
                    ord.row_perm[j],
                    ord.col_perm[k],
                    ord.col_perm[l],
                ));
            }
        }
    }
    None
}

fn gamma_free_closed(g: &Graph) -> bool {
    doubly_lexical(&closed_neighborhood_matrix(g)).gamma_free
}

/// Arranges a vertex set inducing a k-sun as `[t_1..t_k, s_1..s_k]`.
fn order_sun(g: &Graph, vs: &[usize]) -> Vec<usize> {
    let h = g.induced_subgraph(vs);
    let (ts, ss): (Vec<usize>, Vec<usize>) = (0..h.n()).partition(|&v| h.degree(v) > 2);
    let k = ts.len();
    debug_assert_eq!(
        k,
        ss.len(),
        "minimal non-strongly-chordal chordal graph is a sun"
    );
    let mut t_seq = vec![ts[0]];
    let mut s_seq = Vec::with_capacity(k);
    let mut used = vec![false; h.n()];
    while s_seq.len() < k {
        let t = *t_seq.last().unwrap();
        let s = *ss
            .iter()
            .find(|&&s| !used[s] && h.has_edge(s, t))
            .expect("every sun clique vertex has two stable neighbors");
        used[s] = true;
        s_seq.push(s);
        let next = *h
            .neighbors(s)
            .iter()
            .find(|&&u| u != t)
            .expect("stable sun vertices have degree two");
        if s_seq.len() < k {
            t_seq.push(next);
        }
    }
    t_seq.iter().chain(&s_seq).map(|&i| vs[i]).collect()
}

/// Strongly chordal test via a Γ-free doubly lexical ordering of the
/// closed-neighborhood matrix. Non-chordal graphs yield a hole; chordal
/// failures yield a k-sun found by shrinking to a minimal bad induced
/// subgraph.
pub fn is_strongly_chordal(g: &Graph) -> Result<DoublyLexOrdering, Obstruction> {
    chordality(g)?;
    let ordering = doubly_lexical(&closed_neighborhood_matrix(g));
    if ordering.gamma_free {
        return Ok(ordering);
    }
    let vs = minimize_witness((0..g.n()).collect(), |s| {
        !gamma_free_closed(&g.induced_subgraph(s))
    });
    Err(Obstruction::new(ObstructionKind::KSun, order_sun(g, &vs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sun3() -> Graph {
        Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 0),
                (3, 1),
                (4, 1),
                (4, 2),
                (5, 2),
                (5, 0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn zeros_keep_identity() {
        let m = BinaryMatrix::zeros(3, 3);
        let o = doubly_lexical(&m);
        assert!(o.gamma_free);
        assert!(is_doubly_lexical(&m, &o));
        assert_eq!(o.row_perm, vec![0, 1, 2]);
        assert_eq!(o.col_perm, vec![0, 1, 2]);
    }

    #[test]
    fn two_by_two() {
        let m = BinaryMatrix::from_dense(&[vec![true, true], vec![true, false]]);
        let o = doubly_lexical(&m);
        assert!(is_doubly_lexical(&m, &o));
        assert!(o.gamma_free);
        // arranged as [[0,1],[1,1]]
        assert_eq!(
            m.permuted(&o.row_perm, &o.col_perm).to_dense(),
            vec![vec![false, true], vec![true, true]]
        );
    }

    #[test]
    fn six_cycle_biadjacency_has_gamma() {
        let m = BinaryMatrix::from_row_supports(&[vec![0, 2], vec![0, 1], vec![1, 2]], 3);
        let o = doubly_lexical(&m);
        assert!(is_doubly_lexical(&m, &o));
        assert!(!o.gamma_free);
    }

    #[test]
    fn sun_is_not_strongly_chordal() {
        let g = sun3();
        let err = is_strongly_chordal(&g).unwrap_err();
        assert_eq!(err.kind, ObstructionKind::KSun);
        assert_eq!(err.witness, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn small_strongly_chordal() {
        assert!(is_strongly_chordal(&Graph::new(1)).is_ok());
        assert!(is_strongly_chordal(&Graph::path(4)).is_ok());
        assert_eq!(
            is_strongly_chordal(&Graph::cycle(4)).unwrap_err().kind,
            ObstructionKind::Hole
        );
    }

    #[test]
    fn sun_inside_larger_graph() {
        // 3-sun on 0..6 plus a pendant path 6-7 attached to vertex 0
        let mut edges = sun3().edges();
        edges.extend([(0, 6), (6, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        let err = is_strongly_chordal(&g).unwrap_err();
        let mut w = err.witness.clone();
        w.sort();
        assert_eq!(w, vec![0, 1, 2, 3, 4, 5]);
    }
}
