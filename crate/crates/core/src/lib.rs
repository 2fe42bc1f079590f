//! Control hub identification for directed networks.
//!
//! A control hub is a node that sits in the middle of a control path in every
//! control scheme of a network. Hubs are found without enumerating schemes:
//! the set of possible heads `H` comes from even alternating reachability on a
//! maximum bipartite matching, the set of possible tails `T` is the same
//! computation on the transposed network, and the hubs are `V - H - T`.
//!
//! The [`oracle`] module enumerates every maximum matching of small graphs and
//! serves as independent ground truth for the fast pipeline.

pub mod bench;
pub mod cli;
pub mod drivers;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hubs;
pub mod matching;
pub mod nodeset;
pub mod oracle;
pub mod output;
pub mod scheme;

pub use drivers::{all_possible_drivers, min_driver_count, one_mds};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, to_bipartite, transpose, BipartiteGraph, DirectedGraph};
pub use hubs::{control_hubs, head_nodes, tail_nodes, HubReport};
pub use matching::{even_alternating_reachability, is_maximum, maximum_matching, AlternatingReachability, Matching};
pub use nodeset::NodeSet;
pub use oracle::{enumerate_maximum_matchings, oracle_hubs, OracleReport};
pub use scheme::{extract_scheme, schemes_differ, ControlScheme, Role};
