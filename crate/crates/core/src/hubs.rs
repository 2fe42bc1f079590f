//! Head nodes, tail nodes and control hubs.

use crate::drivers::{all_possible_drivers, drivers_and_matching_size};
use crate::error::{Error, Result};
use crate::graph::{transpose, DirectedGraph};
use crate::nodeset::NodeSet;

/// Graphs with at least this many edges run the head and tail searches on two threads.
const PARALLEL_EDGE_THRESHOLD: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HubReport {
    /// Nodes that head a control path in some control scheme.
    pub heads: NodeSet,
    /// Nodes that end a control path in some control scheme.
    pub tails: NodeSet,
    /// `V - heads - tails`.
    pub hubs: NodeSet,
    /// Minimum number of driver nodes, at least 1.
    pub n_d: usize,
    /// Every node is matched on both sides. No control paths exist and every
    /// node is reported as a hub.
    pub perfect_matching: bool,
    pub n: usize,
    pub edge_count: usize,
}

pub fn head_nodes(g: &DirectedGraph) -> Result<NodeSet> {
    all_possible_drivers(g)
}

/// The possible drivers of the transposed network.
pub fn tail_nodes(g: &DirectedGraph) -> Result<NodeSet> {
    all_possible_drivers(&transpose(g))
}

pub fn control_hubs(g: &DirectedGraph) -> Result<HubReport> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let (heads, tails) = if g.edge_count() >= PARALLEL_EDGE_THRESHOLD {
        std::thread::scope(|s| {
            let tails = s.spawn(|| tail_nodes(g));
            let heads = drivers_and_matching_size(g);
            (heads, tails.join().expect("tail search panicked"))
        })
    } else {
        (drivers_and_matching_size(g), tail_nodes(g))
    };
    let ((heads, matching_size), tails) = (heads?, tails?);

    let n = g.node_count();
    let hubs = heads.union(&tails).complement();
    Ok(HubReport {
        heads,
        tails,
        hubs,
        n_d: (n - matching_size).max(1),
        perfect_matching: matching_size == n,
        n,
        edge_count: g.edge_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, to_bipartite};
    use crate::matching::{is_maximum, maximum_matching};

    fn labels(g: &DirectedGraph, set: &NodeSet) -> Vec<String> {
        set.iter().map(|i| g.label(i).to_string()).collect()
    }

    fn report(text: &str) -> (DirectedGraph, HubReport) {
        let g = parse_edge_list(text).unwrap();
        let r = control_hubs(&g).unwrap();
        (g, r)
    }

    #[test]
    fn heads_and_tails() {
        let cases = [
            ("1 2\n2 3", vec!["1"], vec!["3"]),
            ("1 2\n1 3", vec!["1", "2", "3"], vec!["2", "3"]),
            ("1 2\n1 3\n2 4\n3 4", vec!["1", "2", "3"], vec!["2", "3", "4"]),
            ("1 2\n2 3\n3 1", vec![], vec![]),
        ];
        for (text, heads, tails) in cases {
            let g = parse_edge_list(text).unwrap();
            assert_eq!(labels(&g, &head_nodes(&g).unwrap()), heads, "{text}");
            assert_eq!(labels(&g, &tail_nodes(&g).unwrap()), tails, "{text}");
        }
    }

    #[test]
    fn hubs_of_small_networks() {
        let (g, r) = report("1 2\n2 3");
        assert_eq!(labels(&g, &r.hubs), vec!["2"]);
        assert_eq!((r.n_d, r.perfect_matching, r.n, r.edge_count), (1, false, 3, 2));

        let (g, r) = report("1 2\n2 3\n3 4");
        assert_eq!(labels(&g, &r.hubs), vec!["2", "3"]);

        let (_, r) = report("1 2\n1 3");
        assert!(r.hubs.is_empty());
        assert_eq!(r.n_d, 2);

        let (_, r) = report("1 2\n1 3\n2 4\n3 4");
        assert!(r.hubs.is_empty());
    }

    #[test]
    fn perfect_matching_regime_reports_every_node() {
        let (g, r) = report("a a");
        assert_eq!(labels(&g, &r.hubs), vec!["a"]);
        assert!(r.perfect_matching);
        assert_eq!(r.n_d, 1);

        let (_, r) = report("1 2\n2 3\n3 1");
        assert_eq!(r.hubs.len(), 3);
        assert!(r.perfect_matching);
    }

    #[test]
    fn empty_graph_is_rejected() {
        let empty = DirectedGraph::from_edges(0, []).unwrap();
        assert_eq!(control_hubs(&empty), Err(Error::EmptyGraph));
        assert_eq!(tail_nodes(&empty), Err(Error::EmptyGraph));
    }

    #[test]
    fn matching_of_graph_is_maximum_for_transpose() {
        let g = parse_edge_list("1 2\n1 3\n2 4\n3 4\n4 5\n5 2").unwrap();
        let b = to_bipartite(&g);
        let m = maximum_matching(&b);
        let bt = to_bipartite(&transpose(&g));
        assert_eq!(is_maximum(&bt, &m.swapped()), Ok(true));
        assert_eq!(maximum_matching(&bt).size(), m.size());
    }

    #[test]
    fn parallel_path_agrees_with_sequential() {
        let g = crate::generators::erdos_renyi_directed(50_000, PARALLEL_EDGE_THRESHOLD, 3, false).unwrap();
        let r = control_hubs(&g).unwrap();
        assert_eq!(r.heads, head_nodes(&g).unwrap());
        assert_eq!(r.tails, tail_nodes(&g).unwrap());
    }
}
