//! Maximum bipartite matching (Hopcroft-Karp) and alternating-path reachability.
//!
//! Left nodes are out-copies, right nodes are in-copies. Every traversal walks
//! adjacency lists in ascending index order and seeds searches from the lowest
//! index first, so the matching returned for a given graph is reproducible.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::nodeset::NodeSet;

/// Marks an unmatched node in the partner arrays.
const NONE: u32 = u32::MAX;

fn partner(slot: u32) -> Option<usize> {
    (slot != NONE).then_some(slot as usize)
}

/// A set of vertex-disjoint `(left, right)` pairs of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    match_of_left: Vec<u32>,
    match_of_right: Vec<u32>,
    size: usize,
}

impl Matching {
    /// The empty matching on `n` nodes per side.
    pub fn empty(n: usize) -> Self {
        Matching { match_of_left: vec![NONE; n], match_of_right: vec![NONE; n], size: 0 }
    }

    /// Builds a matching from pairs, rejecting out-of-range indices and pairs
    /// that share an endpoint.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut m = Self::empty(n);
        for (l, r) in pairs {
            if l >= n || r >= n {
                return Err(Error::InvalidMatching(format!("pair ({l}, {r}) outside 0..{n}")));
            }
            if m.match_of_left[l] != NONE || m.match_of_right[r] != NONE {
                return Err(Error::InvalidMatching(format!("pair ({l}, {r}) shares an endpoint")));
            }
            m.match_of_left[l] = r as u32;
            m.match_of_right[r] = l as u32;
            m.size += 1;
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn side_len(&self) -> usize {
        self.match_of_left.len()
    }

    pub fn partner_of_left(&self, left: usize) -> Option<usize> {
        partner(self.match_of_left[left])
    }

    pub fn partner_of_right(&self, right: usize) -> Option<usize> {
        partner(self.match_of_right[right])
    }

    /// Matched pairs in ascending left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.side_len()).filter_map(|l| self.partner_of_left(l).map(|r| (l, r))).collect()
    }

    pub fn unmatched_right(&self) -> NodeSet {
        let n = self.side_len();
        NodeSet::from_indices(n, (0..n).filter(|&r| self.match_of_right[r] == NONE))
    }

    pub fn unmatched_left(&self) -> NodeSet {
        let n = self.side_len();
        NodeSet::from_indices(n, (0..n).filter(|&l| self.match_of_left[l] == NONE))
    }

    pub fn is_perfect(&self) -> bool {
        self.size == self.side_len()
    }

    /// The same pairs with sides exchanged, i.e. a matching of `b.swapped()`.
    pub fn swapped(&self) -> Matching {
        Matching {
            match_of_left: self.match_of_right.clone(),
            match_of_right: self.match_of_left.clone(),
            size: self.size,
        }
    }

    /// Checks mutual consistency, the size count, and that each pair is an edge of `b`.
    pub fn validate(&self, b: &BipartiteGraph) -> Result<()> {
        let n = b.side_len();
        if self.match_of_left.len() != n || self.match_of_right.len() != n {
            return Err(Error::InvalidMatching(format!(
                "matching has {} nodes per side, graph has {n}",
                self.match_of_left.len()
            )));
        }
        let mut count = 0;
        for l in 0..n {
            let Some(r) = self.partner_of_left(l) else { continue };
            count += 1;
            if r >= n || self.partner_of_right(r) != Some(l) {
                return Err(Error::InvalidMatching(format!("left {l} -> right {r} is not mirrored")));
            }
            if !b.has_edge(l, r) {
                return Err(Error::InvalidMatching(format!("pair ({l}, {r}) is not an edge")));
            }
        }
        for r in 0..n {
            if let Some(l) = self.partner_of_right(r) {
                if l >= n || self.partner_of_left(l) != Some(r) {
                    return Err(Error::InvalidMatching(format!("right {r} -> left {l} is not mirrored")));
                }
            }
        }
        if count != self.size {
            return Err(Error::InvalidMatching(format!("size {} but {count} matched pairs", self.size)));
        }
        Ok(())
    }
}

const UNREACHED: u32 = u32::MAX;

/// Hopcroft-Karp maximum matching, `O(sqrt(V) * E)`.
pub fn maximum_matching(b: &BipartiteGraph) -> Matching {
    let n = b.side_len();
    let mut m = Matching::empty(n);
    let mut dist = vec![UNREACHED; n];
    let mut next_edge = vec![0u32; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut stack = Vec::new();

    loop {
        // Layer the left side by alternating distance from the free left nodes.
        queue.clear();
        for (l, d) in dist.iter_mut().enumerate() {
            if m.match_of_left[l] == NONE {
                *d = 0;
                queue.push_back(l);
            } else {
                *d = UNREACHED;
            }
        }
        let mut free_layer = UNREACHED;
        while let Some(l) = queue.pop_front() {
            if dist[l] >= free_layer {
                break;
            }
            for &r in b.left_neighbors(l) {
                let next = m.match_of_right[r as usize];
                if next == NONE {
                    free_layer = free_layer.min(dist[l]);
                } else if dist[next as usize] == UNREACHED {
                    dist[next as usize] = dist[l] + 1;
                    queue.push_back(next as usize);
                }
            }
        }
        if free_layer == UNREACHED {
            return m;
        }

        // Vertex-disjoint shortest augmenting paths along the layers.
        next_edge.fill(0);
        for root in 0..n {
            if m.match_of_left[root] != NONE || dist[root] != 0 {
                continue;
            }
            stack.clear();
            stack.push(root);
            while let Some(&l) = stack.last() {
                let adj = b.left_neighbors(l);
                let cursor = next_edge[l] as usize;
                if cursor == adj.len() {
                    dist[l] = UNREACHED;
                    stack.pop();
                    continue;
                }
                let r = adj[cursor];
                next_edge[l] += 1;
                let next = m.match_of_right[r as usize];
                if next == NONE {
                    if dist[l] == free_layer {
                        augment(&mut m, &stack, r);
                        break;
                    }
                } else if dist[l] < free_layer && dist[next as usize] == dist[l] + 1 {
                    stack.push(next as usize);
                }
            }
        }
    }
}

/// Flips the alternating path `stack[0] -> ... -> stack.last() -> free_right`.
fn augment(m: &mut Matching, stack: &[usize], free_right: u32) {
    let mut right = free_right;
    for &l in stack.iter().rev() {
        let previous = m.match_of_left[l];
        m.match_of_left[l] = right;
        m.match_of_right[right as usize] = l as u32;
        if previous == NONE {
            break;
        }
        right = previous;
    }
    m.size += 1;
}

/// Berge certificate: `true` iff no augmenting path exists for `m` in `b`.
///
/// Searches alternating paths from every free left node, following non-matching
/// edges left-to-right and matching edges right-to-left.
pub fn is_maximum(b: &BipartiteGraph, m: &Matching) -> Result<bool> {
    m.validate(b)?;
    let n = b.side_len();
    let mut seen_left = vec![false; n];
    let mut seen_right = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&l| m.match_of_left[l] == NONE).collect();
    for &l in &queue {
        seen_left[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for r in b.left_neighbors(l).iter().map(|&r| r as usize) {
            if seen_right[r] || m.partner_of_left(l) == Some(r) {
                continue;
            }
            seen_right[r] = true;
            match m.partner_of_right(r) {
                None => return Ok(false),
                Some(next) if !seen_left[next] => {
                    seen_left[next] = true;
                    queue.push_back(next);
                }
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

/// Nodes reachable from the unmatched right nodes by alternating paths of even length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingReachability {
    /// Right nodes at even alternating distance, including the unmatched origins.
    pub reachable_right: NodeSet,
    /// Left nodes lying on those paths.
    pub reachable_left: NodeSet,
}

/// Breadth-first alternating search from every unmatched right node.
///
/// From a right node, non-matching edges lead to left nodes; from a left node,
/// its matching edge leads back to a right node. `m` must be maximum, so every
/// left node reached this way is matched.
pub fn even_alternating_reachability(b: &BipartiteGraph, m: &Matching) -> AlternatingReachability {
    debug_assert_eq!(is_maximum(b, m), Ok(true), "reachability requires a maximum matching");
    let n = b.side_len();
    let mut reachable_right = m.unmatched_right();
    let mut reachable_left = NodeSet::empty(n);
    let mut queue: VecDeque<usize> = reachable_right.iter().collect();
    while let Some(r) = queue.pop_front() {
        for l in b.right_neighbors(r).iter().map(|&l| l as usize) {
            if m.partner_of_right(r) == Some(l) || !reachable_left.insert(l) {
                continue;
            }
            if let Some(next) = m.partner_of_left(l) {
                if reachable_right.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    AlternatingReachability { reachable_right, reachable_left }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, to_bipartite, DirectedGraph};
    use proptest::prelude::*;

    fn bip(text: &str) -> BipartiteGraph {
        to_bipartite(&parse_edge_list(text).unwrap())
    }

    /// Maximum matching size by checking every edge subset.
    fn brute_force_max(b: &BipartiteGraph) -> usize {
        let edges = b.edges();
        assert!(edges.len() <= 20);
        (0u32..1 << edges.len())
            .filter(|mask| {
                let chosen = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]);
                Matching::from_pairs(b.side_len(), chosen).is_ok()
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    const CHAIN: &str = "1 2\n2 3";
    const STAR: &str = "1 2\n1 3";
    const DIAMOND: &str = "1 2\n1 3\n2 4\n3 4";

    #[test]
    fn chain_matching() {
        let m = maximum_matching(&bip(CHAIN));
        assert_eq!(m.size(), 2);
        assert_eq!(m.pairs(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn star_matching() {
        let b = bip(STAR);
        let m = maximum_matching(&b);
        assert_eq!(m.size(), 1);
        assert_eq!(brute_force_max(&b), 1);
    }

    #[test]
    fn diamond_matching() {
        let b = bip(DIAMOND);
        assert_eq!(brute_force_max(&b), 2);
        assert_eq!(maximum_matching(&b).size(), 2);
    }

    #[test]
    fn berge_certificate() {
        let b = bip(CHAIN);
        assert_eq!(is_maximum(&b, &maximum_matching(&b)), Ok(true));
        assert_eq!(is_maximum(&b, &Matching::empty(3)), Ok(false));
        let d = bip(DIAMOND);
        for pair in d.edges() {
            let single = Matching::from_pairs(4, [*pair]).unwrap();
            assert_eq!(is_maximum(&d, &single), Ok(false), "{pair:?}");
        }
    }

    #[test]
    fn is_maximum_rejects_invalid_matchings() {
        let b = bip(CHAIN);
        let not_an_edge = Matching::from_pairs(3, [(2, 0)]).unwrap();
        assert!(matches!(is_maximum(&b, &not_an_edge), Err(Error::InvalidMatching(_))));
        assert!(matches!(is_maximum(&b, &Matching::empty(4)), Err(Error::InvalidMatching(_))));
        assert!(Matching::from_pairs(3, [(0, 1), (0, 2)]).is_err());
        assert!(Matching::from_pairs(3, [(0, 1), (2, 1)]).is_err());
    }

    #[test]
    fn reachability_on_chain() {
        let b = bip(CHAIN);
        let reach = even_alternating_reachability(&b, &maximum_matching(&b));
        assert_eq!(reach.reachable_right.to_vec(), vec![0]);
        assert!(reach.reachable_left.is_empty());
    }

    #[test]
    fn reachability_on_star() {
        let b = bip(STAR);
        let m = Matching::from_pairs(3, [(0, 1)]).unwrap();
        let reach = even_alternating_reachability(&b, &m);
        assert_eq!(reach.reachable_right.to_vec(), vec![0, 1, 2]);
        assert_eq!(reach.reachable_left.to_vec(), vec![0]);
    }

    #[test]
    fn reachability_empty_under_perfect_matching() {
        let b = bip("1 2\n2 3\n3 1");
        let m = maximum_matching(&b);
        assert!(m.is_perfect());
        let reach = even_alternating_reachability(&b, &m);
        assert!(reach.reachable_right.is_empty() && reach.reachable_left.is_empty());
    }

    #[test]
    fn self_loop_is_matched() {
        let b = bip("a a");
        let m = maximum_matching(&b);
        assert_eq!(m.pairs(), vec![(0, 0)]);
        assert!(m.is_perfect());
    }

    #[test]
    fn long_augmenting_paths_do_not_overflow_the_stack() {
        // Adjacency order makes the first phase match greedily and later phases
        // need long augmenting paths.
        let n = 200_000;
        let edges = (0..n - 1).flat_map(|i| [(i, i), (i, i + 1)]);
        let g = DirectedGraph::from_edges(n, edges).unwrap();
        let b = to_bipartite(&g);
        let m = maximum_matching(&b);
        assert_eq!(m.size(), n - 1);
        assert_eq!(is_maximum(&b, &m), Ok(true));
    }

    fn arb_bipartite() -> impl Strategy<Value = BipartiteGraph> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..=12)
                .prop_map(move |edges| BipartiteGraph::new(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn hopcroft_karp_matches_brute_force(b in arb_bipartite()) {
            let m = maximum_matching(&b);
            prop_assert!(m.validate(&b).is_ok());
            prop_assert_eq!(m.size(), brute_force_max(&b));
            prop_assert_eq!(is_maximum(&b, &m), Ok(true));
        }

        #[test]
        fn reachability_contains_unmatched_origins(b in arb_bipartite()) {
            let m = maximum_matching(&b);
            let reach = even_alternating_reachability(&b, &m);
            prop_assert!(m.unmatched_right().is_subset(&reach.reachable_right));
            for r in reach.reachable_right.iter() {
                prop_assert!(m.partner_of_right(r).is_none() || reach.reachable_left.contains(m.partner_of_right(r).unwrap()));
            }
        }
    }
}
