/// Shrinks `items` to an inclusion-minimal subset on which `still_bad` holds.
///
/// `still_bad` must be monotone: if it holds for a set it holds for every
/// superset (true for "contains a forbidden induced substructure"). Chunks
/// are removed first so that large inputs converge in few evaluations.
pub fn minimize_witness<F>(items: Vec<usize>, mut still_bad: F) -> Vec<usize>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut cur = items;
    let mut chunk = (cur.len() / 2).max(1);
    loop {
        let mut i = 0;
        while i < cur.len() {
            let end = (i + chunk).min(cur.len());
            let candidate: Vec<usize> = cur[..i].iter().chain(&cur[end..]).copied().collect();
            if still_bad(&candidate) {
                cur = candidate;
            } else {
                i = end;
            }
        }
        if chunk == 1 {
            // monotonicity makes one full single-element pass sufficient
            return cur;
        }
        chunk = (chunk / 2).max(1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_minimal_superset_witness() {
        // bad iff the set contains both 3 and 7
        let out = minimize_witness((0..10).collect(), |s| s.contains(&3) && s.contains(&7));
        assert_eq!(out, vec![3, 7]);
    }

    #[test]
    fn keeps_everything_when_all_needed() {
        let out = minimize_witness(vec![1, 2, 3], |s| s.len() == 3);
        assert_eq!(out, vec![1, 2, 3]);
    }
}
