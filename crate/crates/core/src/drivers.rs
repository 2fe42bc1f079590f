//! Possible driver nodes and minimum driver counts.
//!
//! A node can be a driver in some minimum driver set iff its in-copy is reachable
//! from an unmatched in-copy by an even-length alternating path, for any single
//! maximum matching. That avoids enumerating the maximum matchings.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{to_bipartite, BipartiteGraph, DirectedGraph};
use crate::matching::{even_alternating_reachability, maximum_matching, Matching};
use crate::nodeset::NodeSet;

fn ensure_nonempty(g: &DirectedGraph) -> Result<()> {
    if g.is_empty() {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Every node that is a driver under at least one maximum matching.
pub fn all_possible_drivers(g: &DirectedGraph) -> Result<NodeSet> {
    drivers_and_matching_size(g).map(|(drivers, _)| drivers)
}

pub(crate) fn drivers_and_matching_size(g: &DirectedGraph) -> Result<(NodeSet, usize)> {
    ensure_nonempty(g)?;
    let b = to_bipartite(g);
    let m = maximum_matching(&b);
    Ok((drivers_for_matching(&b, &m), m.size()))
}

/// Driver candidates computed from a caller-supplied maximum matching of `b`.
pub fn drivers_for_matching(b: &BipartiteGraph, m: &Matching) -> NodeSet {
    even_alternating_reachability(b, m).reachable_right
}

/// `max(n - |M|, 1)`: one input is still needed when the matching is perfect.
pub fn min_driver_count(g: &DirectedGraph) -> Result<usize> {
    ensure_nonempty(g)?;
    let m = maximum_matching(&to_bipartite(g));
    Ok((g.node_count() - m.size()).max(1))
}

/// A minimum driver set: the unmatched in-copies of the deterministic maximum
/// matching, or the lowest-index node when the matching is perfect.
pub fn one_mds(g: &DirectedGraph) -> Result<NodeSet> {
    ensure_nonempty(g)?;
    let m = maximum_matching(&to_bipartite(g));
    let unmatched = m.unmatched_right();
    if unmatched.is_empty() {
        Ok(NodeSet::from_indices(g.node_count(), [0]))
    } else {
        Ok(unmatched)
    }
}

/// Possible drivers by the incremental procedure: start from the empty matching,
/// search alternating paths from all unmatched in-copies, augment along every
/// vertex-disjoint augmenting path found, and repeat until a search finds none.
/// The in-copies visited by that last search are the result.
///
/// This is `O(N * L)` and exists as an independent cross-check of
/// [`all_possible_drivers`].
pub fn all_possible_drivers_incremental(g: &DirectedGraph) -> Result<NodeSet> {
    ensure_nonempty(g)?;
    let b = to_bipartite(g);
    let n = b.side_len();
    let mut mate_left: Vec<Option<usize>> = vec![None; n];
    let mut mate_right: Vec<Option<usize>> = vec![None; n];

    loop {
        // parent_right[l] = right node l was entered from; root_of[r] = origin tree.
        let mut parent_right = vec![usize::MAX; n];
        let mut root_of = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for r in 0..n {
            if mate_right[r].is_none() {
                root_of[r] = r;
                queue.push_back(r);
            }
        }
        let mut free_ends = Vec::new();
        while let Some(r) = queue.pop_front() {
            for l in b.right_neighbors(r).iter().map(|&l| l as usize) {
                if mate_right[r] == Some(l) || parent_right[l] != usize::MAX {
                    continue;
                }
                parent_right[l] = r;
                match mate_left[l] {
                    None => free_ends.push(l),
                    Some(next) if root_of[next] == usize::MAX => {
                        root_of[next] = root_of[r];
                        queue.push_back(next);
                    }
                    Some(_) => {}
                }
            }
        }

        if free_ends.is_empty() {
            let visited = (0..n).filter(|&r| root_of[r] != usize::MAX);
            return Ok(NodeSet::from_indices(n, visited));
        }

        // Paths ending in distinct search trees are vertex-disjoint.
        let mut tree_used = vec![false; n];
        free_ends.sort_unstable();
        for l in free_ends {
            let root = root_of[parent_right[l]];
            if tree_used[root] {
                continue;
            }
            tree_used[root] = true;
            let mut left = l;
            loop {
                let r = parent_right[left];
                let previous = mate_right[r];
                mate_right[r] = Some(left);
                mate_left[left] = Some(r);
                match previous {
                    Some(prev_left) => left = prev_left,
                    None => break,
                }
            }
        }
    }
}
