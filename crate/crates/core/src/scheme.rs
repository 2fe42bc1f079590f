//! Decomposition of a maximum matching into control paths and cycles.
//!
//! Node `v` hands control to `w` when `(v_out, w_in)` is matched. Following those
//! links from each node whose in-copy is unmatched traces a control path; the
//! nodes left over are matched on both sides and close into cycles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{to_bipartite, DirectedGraph};
use crate::matching::{is_maximum, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Head,
    Middle,
    Tail,
    /// A single-node path: both head and tail.
    IsolatedDriver,
    CycleMember,
}

impl Role {
    pub fn is_head(self) -> bool {
        matches!(self, Role::Head | Role::IsolatedDriver)
    }

    pub fn is_tail(self) -> bool {
        matches!(self, Role::Tail | Role::IsolatedDriver)
    }
}

/// Paths are sorted by head index; cycles start at their lowest index and are
/// sorted by that index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ControlScheme {
    pub paths: Vec<Vec<usize>>,
    pub cycles: Vec<Vec<usize>>,
    pub role_of: Vec<Role>,
}

impl ControlScheme {
    pub fn node_count(&self) -> usize {
        self.role_of.len()
    }

    /// Number of matched edges the decomposition accounts for.
    pub fn matched_edge_count(&self) -> usize {
        let along_paths: usize = self.paths.iter().map(|p| p.len() - 1).sum();
        let around_cycles: usize = self.cycles.iter().map(Vec::len).sum();
        along_paths + around_cycles
    }

    /// Checks the partition and count invariants against the generating matching.
    pub fn check_against(&self, m: &Matching) -> std::result::Result<(), String> {
        let n = self.node_count();
        if m.side_len() != n {
            return Err(format!("scheme covers {n} nodes, matching {}", m.side_len()));
        }
        let mut seen = vec![false; n];
        for node in self.paths.iter().chain(&self.cycles).flatten() {
            if std::mem::replace(&mut seen[*node], true) {
                return Err(format!("node {node} appears twice"));
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(format!("node {missing} is in no path or cycle"));
        }
        if self.paths.len() != m.unmatched_right().len() {
            return Err(format!("{} paths but {} unmatched in-copies", self.paths.len(), m.unmatched_right().len()));
        }
        if self.matched_edge_count() != m.size() {
            return Err(format!("decomposition uses {} edges, matching has {}", self.matched_edge_count(), m.size()));
        }
        for path in &self.paths {
            let (head, tail) = (path[0], path[path.len() - 1]);
            if m.partner_of_right(head).is_some() || m.partner_of_left(tail).is_some() {
                return Err(format!("path {path:?} does not run from a free in-copy to a free out-copy"));
            }
            if path.windows(2).any(|w| m.partner_of_left(w[0]) != Some(w[1])) {
                return Err(format!("path {path:?} leaves the matching"));
            }
        }
        for cycle in &self.cycles {
            let closed = cycle.iter().zip(cycle.iter().cycle().skip(1));
            if closed.clone().any(|(&a, &b)| m.partner_of_left(a) != Some(b)) {
                return Err(format!("cycle {cycle:?} leaves the matching"));
            }
        }
        Ok(())
    }
}

/// Decomposes the maximum matching `m` of `to_bipartite(g)` into control paths
/// and cycles.
pub fn extract_scheme(g: &DirectedGraph, m: &Matching) -> Result<ControlScheme> {
    if !is_maximum(&to_bipartite(g), m)? {
        return Err(Error::NotMaximum);
    }
    Ok(decompose(m))
}

/// Decomposition without the maximality check; `m` must be a valid matching.
pub(crate) fn decompose(m: &Matching) -> ControlScheme {
    let n = m.side_len();
    let mut role_of = vec![Role::CycleMember; n];
    let mut placed = vec![false; n];
    let mut paths = Vec::new();

    for head in 0..n {
        if m.partner_of_right(head).is_some() {
            continue;
        }
        let mut path = vec![head];
        placed[head] = true;
        let mut current = head;
        while let Some(next) = m.partner_of_left(current) {
            path.push(next);
            placed[next] = true;
            current = next;
        }
        if path.len() == 1 {
            role_of[head] = Role::IsolatedDriver;
        } else {
            role_of[head] = Role::Head;
            for &mid in &path[1..path.len() - 1] {
                role_of[mid] = Role::Middle;
            }
            role_of[current] = Role::Tail;
        }
        paths.push(path);
    }

    // Scanning upward, the first unplaced node is the lowest of its cycle.
    let mut cycles = Vec::new();
    for start in 0..n {
        if placed[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut current = start;
        loop {
            placed[current] = true;
            cycle.push(current);
            current = m.partner_of_left(current).expect("unplaced nodes are matched on both sides");
            if current == start {
                break;
            }
        }
        cycles.push(cycle);
    }

    ControlScheme { paths, cycles, role_of }
}

/// Whether two schemes over the same node universe decompose differently.
pub fn schemes_differ(a: &ControlScheme, b: &ControlScheme) -> Result<bool> {
    if a.node_count() != b.node_count() {
        return Err(Error::UniverseMismatch(a.node_count(), b.node_count()));
    }
    Ok(a.paths != b.paths || a.cycles != b.cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;
    use crate::matching::maximum_matching;

    fn scheme_of(text: &str, pairs: &[(usize, usize)]) -> ControlScheme {
        let g = parse_edge_list(text).unwrap();
        let m = Matching::from_pairs(g.node_count(), pairs.iter().copied()).unwrap();
        let s = extract_scheme(&g, &m).unwrap();
        s.check_against(&m).unwrap();
        s
    }

    const DIAMOND: &str = "1 2\n1 3\n2 4\n3 4";

    #[test]
    fn chain_is_one_path() {
        let g = parse_edge_list("1 2\n2 3").unwrap();
        let s = extract_scheme(&g, &maximum_matching(&to_bipartite(&g))).unwrap();
        assert_eq!(s.paths, vec![vec![0, 1, 2]]);
        assert!(s.cycles.is_empty());
        assert_eq!(s.role_of, vec![Role::Head, Role::Middle, Role::Tail]);
    }

    #[test]
    fn three_cycle_is_normalized() {
        // 2 -> 3 -> 1 -> 2 with labels chosen so the lowest index is not first in the file.
        let s = scheme_of("2 3\n3 1\n1 2", &[(0, 1), (1, 2), (2, 0)]);
        assert!(s.paths.is_empty());
        assert_eq!(s.cycles, vec![vec![0, 1, 2]]);
        assert!(s.role_of.iter().all(|&r| r == Role::CycleMember));
    }

    #[test]
    fn diamond_two_paths() {
        // (1->2), (3->4)
        let s = scheme_of(DIAMOND, &[(0, 1), (2, 3)]);
        assert_eq!(s.paths, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(s.role_of, vec![Role::Head, Role::Tail, Role::Head, Role::Tail]);
    }

    #[test]
    fn self_loop_is_a_one_cycle() {
        let s = scheme_of("a a\na b", &[(0, 0)]);
        assert_eq!(s.cycles, vec![vec![0]]);
        assert_eq!(s.paths, vec![vec![1]]);
        assert_eq!(s.role_of, vec![Role::CycleMember, Role::IsolatedDriver]);
        assert_eq!(s.matched_edge_count(), 1);
    }

    #[test]
    fn distinct_matchings_give_distinct_schemes() {
        let via_two = scheme_of(DIAMOND, &[(0, 1), (1, 3)]);
        let via_three = scheme_of(DIAMOND, &[(0, 2), (2, 3)]);
        assert_eq!(via_two.paths, vec![vec![0, 1, 3], vec![2]]);
        assert_eq!(via_three.paths, vec![vec![0, 2, 3], vec![1]]);
        assert_eq!(schemes_differ(&via_two, &via_three), Ok(true));
        assert_eq!(schemes_differ(&via_two, &via_two.clone()), Ok(false));
    }

    #[test]
    fn mismatched_universes_are_rejected() {
        let chain = scheme_of("1 2\n2 3", &[(0, 1), (1, 2)]);
        let pair = scheme_of("1 2", &[(0, 1)]);
        assert_eq!(schemes_differ(&chain, &pair), Err(Error::UniverseMismatch(3, 2)));
    }

    #[test]
    fn non_maximum_matching_is_rejected() {
        let g = parse_edge_list("1 2\n2 3").unwrap();
        let partial = Matching::from_pairs(3, [(0, 1)]).unwrap();
        assert_eq!(extract_scheme(&g, &partial), Err(Error::NotMaximum));
        let bogus = Matching::from_pairs(3, [(2, 0)]).unwrap();
        assert!(matches!(extract_scheme(&g, &bogus), Err(Error::InvalidMatching(_))));
    }

    #[test]
    fn check_against_catches_a_foreign_matching() {
        let s = scheme_of("1 2\n2 3", &[(0, 1), (1, 2)]);
        let other = Matching::from_pairs(3, [(0, 1)]).unwrap();
        assert!(s.check_against(&other).is_err());
    }
}
