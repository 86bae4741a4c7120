//! Consecutive-ones property by overlap-component refinement.
//!
//! Rows that overlap (intersect without containment) are grouped into
//! components. Within a component the arrangement of its atoms (classes of
//! columns with identical membership) is forced up to reversal and is built
//! incrementally. Component unions form a laminar family in which every
//! nested union sits inside a single atom of its parent, so the final column
//! order is assembled by recursive placement.

use fixedbitset::FixedBitSet;

use super::minimize::minimize_witness;
use super::{Obstruction, ObstructionKind};

/// Whether every row is contiguous under the column order `order`
/// (`order[i]` is the column placed at position `i`).
pub fn is_consecutive_under(rows: &[Vec<usize>], order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; order.len()];
    for (i, &c) in order.iter().enumerate() {
        if c >= pos.len() || pos[c] != usize::MAX {
            return false;
        }
        pos[c] = i;
    }
    rows.iter().all(|row| {
        let mut cols: Vec<usize> = row.iter().map(|&c| pos[c]).collect();
        cols.sort_unstable();
        cols.dedup();
        cols.len() <= 1 || cols[cols.len() - 1] - cols[0] + 1 == cols.len()
    })
}

/// Column order making every row contiguous, or the not_cop obstruction
/// listing an inclusion-minimal set of offending row indices.
///
/// Panics if a row mentions a column `>= ncols`.
pub fn consecutive_ones(rows: &[Vec<usize>], ncols: usize) -> Result<Vec<usize>, Obstruction> {
    for row in rows {
        assert!(row.iter().all(|&c| c < ncols), "row column out of range");
    }
    if let Some(order) = cop_order(rows, ncols) {
        assert!(
            is_consecutive_under(rows, &order),
            "consecutive-ones certificate failed its own check"
        );
        return Ok(order);
    }
    let witness = minimize_witness((0..rows.len()).collect(), |subset| {
        let sub: Vec<Vec<usize>> = subset.iter().map(|&i| rows[i].clone()).collect();
        cop_order(&sub, ncols).is_none()
    });
    Err(Obstruction::new(ObstructionKind::NotCop, witness))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Touch {
    Empty,
    Partial,
    Full,
}

struct Component {
    atoms: Vec<FixedBitSet>,
    union: FixedBitSet,
    rows: usize,
}

fn overlaps(a: &FixedBitSet, b: &FixedBitSet) -> bool {
    !a.is_disjoint(b) && !a.is_subset(b) && !b.is_subset(a)
}

fn cop_order(rows: &[Vec<usize>], ncols: usize) -> Option<Vec<usize>> {
    let mut sets: Vec<FixedBitSet> = rows
        .iter()
        .filter(|r| {
            let mut r2 = (*r).clone();
            r2.sort_unstable();
            r2.dedup();
            r2.len() >= 2
        })
        .map(|r| {
            let mut s = FixedBitSet::with_capacity(ncols);
            for &c in r {
                s.insert(c);
            }
            s
        })
        .collect();
    sets.sort_by(|a, b| a.ones().cmp(b.ones()));
    sets.dedup();

    let comps = overlap_components(&sets);
    let mut components = Vec::with_capacity(comps.len());
    for comp in comps {
        components.push(arrange_component(&sets, &comp, ncols)?);
    }
    assemble(components, ncols)
}

/// Overlap components, each listed in an order where every row after the
/// first overlaps some earlier row.
fn overlap_components(sets: &[FixedBitSet]) -> Vec<Vec<usize>> {
    let r = sets.len();
    let mut seen = vec![false; r];
    let mut out = Vec::new();
    for s in 0..r {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut order = vec![s];
        let mut head = 0;
        while head < order.len() {
            let a = order[head];
            head += 1;
            for b in 0..r {
                if !seen[b] && overlaps(&sets[a], &sets[b]) {
                    seen[b] = true;
                    order.push(b);
                }
            }
        }
        out.push(order);
    }
    out
}

/// Splits `atom` into (outside `row`, inside `row`).
fn split(atom: &FixedBitSet, row: &FixedBitSet) -> (FixedBitSet, FixedBitSet) {
    let mut inside = atom.clone();
    inside.intersect_with(row);
    let mut outside = atom.clone();
    outside.difference_with(row);
    (outside, inside)
}

fn arrange_component(sets: &[FixedBitSet], comp: &[usize], ncols: usize) -> Option<Component> {
    let first = &sets[comp[0]];
    let mut atoms = vec![first.clone()];
    let mut union = first.clone();
    for &ri in &comp[1..] {
        let row = &sets[ri];
        let touch: Vec<Touch> = atoms
            .iter()
            .map(|a| {
                let k = a.intersection(row).count();
                if k == 0 {
                    Touch::Empty
                } else if k == a.count_ones(..) {
                    Touch::Full
                } else {
                    Touch::Partial
                }
            })
            .collect();
        let lo = touch.iter().position(|&t| t != Touch::Empty)?;
        let hi = touch.iter().rposition(|&t| t != Touch::Empty)?;
        if hi > lo + 1 && touch[lo + 1..hi].iter().any(|&t| t != Touch::Full) {
            return None;
        }
        let mut fresh = row.clone();
        fresh.difference_with(&union);
        let last = atoms.len() - 1;
        let has_fresh = fresh.count_ones(..) > 0;

        let mut next: Vec<FixedBitSet> = Vec::with_capacity(atoms.len() + 3);
        if !has_fresh {
            // an overlapping row always touches at least two atoms
            if lo == hi {
                return None;
            }
            next.extend(atoms[..lo].iter().cloned());
            let (out, inn) = split(&atoms[lo], row);
            push_nonempty(&mut next, out);
            push_nonempty(&mut next, inn);
            next.extend(atoms[lo + 1..hi].iter().cloned());
            let (out, inn) = split(&atoms[hi], row);
            push_nonempty(&mut next, inn);
            push_nonempty(&mut next, out);
            next.extend(atoms[hi + 1..].iter().cloned());
        } else if lo == hi {
            if hi == last {
                next.extend(atoms[..lo].iter().cloned());
                let (out, inn) = split(&atoms[lo], row);
                push_nonempty(&mut next, out);
                push_nonempty(&mut next, inn);
                next.push(fresh);
            } else if lo == 0 {
                next.push(fresh);
                let (out, inn) = split(&atoms[0], row);
                push_nonempty(&mut next, inn);
                push_nonempty(&mut next, out);
                next.extend(atoms[1..].iter().cloned());
            } else {
                return None;
            }
        } else if hi == last && touch[hi] == Touch::Full {
            next.extend(atoms[..lo].iter().cloned());
            let (out, inn) = split(&atoms[lo], row);
            push_nonempty(&mut next, out);
            push_nonempty(&mut next, inn);
            next.extend(atoms[lo + 1..].iter().cloned());
            next.push(fresh);
        } else if lo == 0 && touch[0] == Touch::Full {
            next.push(fresh);
            next.extend(atoms[..hi].iter().cloned());
            let (out, inn) = split(&atoms[hi], row);
            push_nonempty(&mut next, inn);
            push_nonempty(&mut next, out);
            next.extend(atoms[hi + 1..].iter().cloned());
        } else {
            return None;
        }
        atoms = next;
        union.union_with(row);
    }
    debug_assert!(atoms.iter().all(|a| a.len() == ncols));
    Some(Component {
        atoms,
        union,
        rows: comp.len(),
    })
}

fn push_nonempty(v: &mut Vec<FixedBitSet>, s: FixedBitSet) {
    if s.count_ones(..) > 0 {
        v.push(s);
    }
}

fn assemble(mut comps: Vec<Component>, ncols: usize) -> Option<Vec<usize>> {
    // parents come before children: larger unions first, and for equal unions
    // the single-row component (whose only atom is the whole union)
    comps.sort_by(|a, b| {
        b.union
            .count_ones(..)
            .cmp(&a.union.count_ones(..))
            .then(a.rows.cmp(&b.rows))
            .then(a.union.ones().cmp(b.union.ones()))
    });
    // children[c][atom] lists the component indices nested in that atom
    let mut children: Vec<Vec<Vec<usize>>> = comps
        .iter()
        .map(|c| vec![Vec::new(); c.atoms.len()])
        .collect();
    let mut roots = Vec::new();
    for c in 0..comps.len() {
        let mut parent = None;
        for p in (0..c).rev() {
            if comps[p].union.is_disjoint(&comps[c].union) {
                continue;
            }
            let atom = comps[p]
                .atoms
                .iter()
                .position(|a| comps[c].union.is_subset(a));
            // intersecting unions must nest inside one atom
            parent = Some((p, atom?));
            break;
        }
        match parent {
            Some((p, a)) => children[p][a].push(c),
            None => roots.push(c),
        }
    }

    let mut order = Vec::with_capacity(ncols);
    let mut placed = FixedBitSet::with_capacity(ncols);
    let min_col = |c: usize| comps[c].union.ones().next().unwrap_or(usize::MAX);
    roots.sort_by_key(|&c| min_col(c));
    for &r in &roots {
        place(&comps, &children, r, &mut order, &mut placed);
    }
    order.extend((0..ncols).filter(|&c| !placed.contains(c)));
    Some(order)
}

fn place(
    comps: &[Component],
    children: &[Vec<Vec<usize>>],
    c: usize,
    order: &mut Vec<usize>,
    placed: &mut FixedBitSet,
) {
    for (ai, atom) in comps[c].atoms.iter().enumerate() {
        let mut kids = children[c][ai].clone();
        kids.sort_by_key(|&k| comps[k].union.ones().next().unwrap_or(usize::MAX));
        for k in kids {
            place(comps, children, k, order, placed);
        }
        for col in atom.ones() {
            if !placed.contains(col) {
                placed.insert(col);
                order.push(col);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_chain() {
        let rows = vec![vec![0, 1], vec![1, 2]];
        let order = consecutive_ones(&rows, 3).unwrap();
        assert!(order == vec![0, 1, 2] || order == vec![2, 1, 0]);
    }

    #[test]
    fn subdivided_claw_rows_fail() {
        // a=0 with b, c, d
        let rows = vec![vec![0, 1], vec![0, 2], vec![0, 3]];
        let err = consecutive_ones(&rows, 4).unwrap_err();
        assert_eq!(err.kind, ObstructionKind::NotCop);
        assert_eq!(err.witness, vec![0, 1, 2]);
    }

    #[test]
    fn single_row_unsorted() {
        let order = consecutive_ones(&[vec![2, 0]], 3).unwrap();
        let p0 = order.iter().position(|&c| c == 0).unwrap();
        let p2 = order.iter().position(|&c| c == 2).unwrap();
        assert_eq!(p0.abs_diff(p2), 1);
    }

    #[test]
    fn nested_components() {
        // outer chain on 0..6, inner overlapping pair inside atom {2,3,4}
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![2, 3, 4, 5],
            vec![2, 3],
            vec![3, 4],
        ];
        let order = consecutive_ones(&rows, 6).unwrap();
        assert!(is_consecutive_under(&rows, &order));
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(consecutive_ones(&[], 0).unwrap(), Vec::<usize>::new());
        assert_eq!(consecutive_ones(&[], 3).unwrap(), vec![0, 1, 2]);
        assert_eq!(consecutive_ones(&[vec![], vec![1]], 2).unwrap(), vec![0, 1]);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(!is_consecutive_under(&[vec![0, 2]], &[0, 1, 2]));
        assert!(!is_consecutive_under(&[vec![0]], &[0, 0]));
    }
}
