//! Brute-force ground truth for small graphs.
//!
//! Every maximum matching is enumerated, each is decomposed into its control
//! scheme, and head/tail/hub sets are read off the schemes directly. The number
//! of maximum matchings grows like a permanent, so enumeration is capped.

use crate::error::Result;
use crate::graph::{to_bipartite, BipartiteGraph, DirectedGraph};
use crate::matching::{maximum_matching, Matching};
use crate::nodeset::NodeSet;
use crate::scheme::{extract_scheme, Role};

pub const DEFAULT_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingEnumeration {
    /// All maximum matchings in lexicographic order of their sorted pair lists.
    /// Empty when truncated.
    pub matchings: Vec<Matching>,
    /// More than `limit` maximum matchings exist.
    pub truncated: bool,
}

/// Lists every maximum matching of `b`, giving up once more than `limit` exist.
///
/// Branches on each left node in turn: match it to a free right neighbour
/// (ascending), or leave it unmatched. A branch is cut when even matching every
/// remaining left node with an edge cannot reach the best size known. The fast
/// maximum size only seeds that bound; if a larger matching turns up the
/// collected set is discarded and the bound raised.
pub fn enumerate_maximum_matchings(b: &BipartiteGraph, limit: usize) -> MatchingEnumeration {
    assert!(limit >= 1, "limit must be at least 1");
    let n = b.side_len();
    let mut usable_after = vec![0usize; n + 1];
    for l in (0..n).rev() {
        usable_after[l] = usable_after[l + 1] + usize::from(!b.left_neighbors(l).is_empty());
    }
    let mut search = Search {
        b,
        limit,
        usable_after,
        target: maximum_matching(b).size(),
        used_right: vec![false; n],
        current: Vec::with_capacity(n),
        found: Vec::new(),
        truncated: false,
    };
    search.branch(0);
    if search.truncated {
        return MatchingEnumeration { matchings: Vec::new(), truncated: true };
    }
    search.found.sort();
    search.found.dedup();
    let matchings = search
        .found
        .into_iter()
        .map(|pairs| Matching::from_pairs(n, pairs).expect("enumerated pairs are disjoint"))
        .collect();
    MatchingEnumeration { matchings, truncated: false }
}

struct Search<'a> {
    b: &'a BipartiteGraph,
    limit: usize,
    usable_after: Vec<usize>,
    target: usize,
    used_right: Vec<bool>,
    current: Vec<(usize, usize)>,
    found: Vec<Vec<(usize, usize)>>,
    truncated: bool,
}

impl Search<'_> {
    fn branch(&mut self, left: usize) {
        if self.truncated || self.current.len() + self.usable_after[left] < self.target {
            return;
        }
        if left == self.b.side_len() {
            self.record();
            return;
        }
        for r in self.b.left_neighbors(left).iter().map(|&r| r as usize) {
            if self.used_right[r] {
                continue;
            }
            self.used_right[r] = true;
            self.current.push((left, r));
            self.branch(left + 1);
            self.current.pop();
            self.used_right[r] = false;
        }
        self.branch(left + 1);
    }

    fn record(&mut self) {
        if self.current.len() > self.target {
            self.target = self.current.len();
            self.found.clear();
        }
        if self.found.len() == self.limit {
            self.truncated = true;
            return;
        }
        self.found.push(self.current.clone());
    }
}

/// Head/tail/hub sets computed from every control scheme. The set fields are
/// `None` when enumeration was truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub matching_count: usize,
    /// Nodes that head a path (or form a single-node path) in some scheme.
    pub head_union: Option<NodeSet>,
    /// Nodes that end a path (or form a single-node path) in some scheme.
    pub tail_union: Option<NodeSet>,
    /// `V - head_union - tail_union`.
    pub theorem_hubs: Option<NodeSet>,
    /// Nodes that are a middle node in every scheme.
    pub definitional_hubs: Option<NodeSet>,
    pub truncated: bool,
}

pub fn oracle_hubs(g: &DirectedGraph, limit: usize) -> Result<OracleReport> {
    let enumeration = enumerate_maximum_matchings(&to_bipartite(g), limit);
    summarize(g, &enumeration)
}

/// Builds the oracle report from an enumeration already computed for `g`.
pub fn summarize(g: &DirectedGraph, enumeration: &MatchingEnumeration) -> Result<OracleReport> {
    if enumeration.truncated {
        return Ok(OracleReport {
            matching_count: 0,
            head_union: None,
            tail_union: None,
            theorem_hubs: None,
            definitional_hubs: None,
            truncated: true,
        });
    }
    let n = g.node_count();
    let mut head_union = NodeSet::empty(n);
    let mut tail_union = NodeSet::empty(n);
    let mut always_middle = vec![true; n];
    for m in &enumeration.matchings {
        let scheme = extract_scheme(g, m)?;
        for (node, &role) in scheme.role_of.iter().enumerate() {
            if role.is_head() {
                head_union.insert(node);
            }
            if role.is_tail() {
                tail_union.insert(node);
            }
            if role != Role::Middle {
                always_middle[node] = false;
            }
        }
    }
    let theorem_hubs = head_union.union(&tail_union).complement();
    let definitional_hubs = NodeSet::from_indices(n, (0..n).filter(|&v| always_middle[v]));
    Ok(OracleReport {
        matching_count: enumeration.matchings.len(),
        head_union: Some(head_union),
        tail_union: Some(tail_union),
        theorem_hubs: Some(theorem_hubs),
        definitional_hubs: Some(definitional_hubs),
        truncated: false,
    })
}
