//! Serialized reports. Node identifiers are always external labels.
//!
//! JSON output wraps each report in an envelope:
//!
//! ```json
//! { "tool": "ctrlhub", "version": "0.1.0", "input_sha256": "…", "report": { … } }
//! ```
//!
//! Node sets are sorted in natural label order: all-digit labels compare by
//! numeric value and sort before other labels, which compare bytewise.

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::drivers;
use crate::error::Result;
use crate::graph::{to_bipartite, DirectedGraph};
use crate::hubs::HubReport;
use crate::matching::maximum_matching;
use crate::nodeset::NodeSet;
use crate::oracle::OracleReport;
use crate::scheme::{ControlScheme, Role};

pub const TOOL_NAME: &str = "ctrlhub";

#[derive(Debug, Serialize)]
pub struct Envelope<T> {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_sha256: String,
    pub report: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(input: &[u8], report: T) -> Self {
        Envelope {
            tool: TOOL_NAME,
            version: env!("CARGO_PKG_VERSION"),
            input_sha256: hex::encode(Sha256::digest(input)),
            report,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let numeric = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
    match (numeric(a), numeric(b)) {
        (true, true) => {
            let (ta, tb) = (a.trim_start_matches('0'), b.trim_start_matches('0'));
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb)).then_with(|| a.cmp(b))
        }
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => a.cmp(b),
    }
}

pub fn sorted_labels(g: &DirectedGraph, set: &NodeSet) -> Vec<String> {
    let mut labels: Vec<String> = set.iter().map(|i| g.label(i).to_owned()).collect();
    labels.sort_by(|a, b| natural_cmp(a, b));
    labels
}

fn path_labels(g: &DirectedGraph, nodes: &[usize]) -> Vec<String> {
    nodes.iter().map(|&i| g.label(i).to_owned()).collect()
}

fn join(labels: &[String]) -> String {
    if labels.is_empty() {
        "-".to_owned()
    } else {
        labels.join(" ")
    }
}

pub trait TextReport {
    fn to_text(&self) -> String;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HubOutput {
    pub n: usize,
    pub edge_count: usize,
    pub heads: Vec<String>,
    pub tails: Vec<String>,
    pub hubs: Vec<String>,
    pub n_d: usize,
    pub perfect_matching: bool,
}

impl HubOutput {
    pub fn new(g: &DirectedGraph, r: &HubReport) -> Self {
        HubOutput {
            n: r.n,
            edge_count: r.edge_count,
            heads: sorted_labels(g, &r.heads),
            tails: sorted_labels(g, &r.tails),
            hubs: sorted_labels(g, &r.hubs),
            n_d: r.n_d,
            perfect_matching: r.perfect_matching,
        }
    }
}

impl TextReport for HubOutput {
    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "nodes: {}", self.n);
        let _ = writeln!(s, "edges: {}", self.edge_count);
        let _ = writeln!(s, "heads ({}): {}", self.heads.len(), join(&self.heads));
        let _ = writeln!(s, "tails ({}): {}", self.tails.len(), join(&self.tails));
        let _ = writeln!(s, "hubs ({}): {}", self.hubs.len(), join(&self.hubs));
        let _ = writeln!(s, "n_d: {}", self.n_d);
        let _ = writeln!(s, "perfect_matching: {}", self.perfect_matching);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DriverOutput {
    pub n: usize,
    pub edge_count: usize,
    pub drivers: Vec<String>,
    pub n_d: usize,
    pub mds: Vec<String>,
    pub perfect_matching: bool,
}

impl DriverOutput {
    pub fn new(g: &DirectedGraph) -> Result<Self> {
        let drivers = drivers::all_possible_drivers(g)?;
        let mds = drivers::one_mds(g)?;
        Ok(DriverOutput {
            n: g.node_count(),
            edge_count: g.edge_count(),
            drivers: sorted_labels(g, &drivers),
            n_d: drivers::min_driver_count(g)?,
            mds: sorted_labels(g, &mds),
            perfect_matching: maximum_matching(&to_bipartite(g)).is_perfect(),
        })
    }
}

impl TextReport for DriverOutput {
    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "nodes: {}", self.n);
        let _ = writeln!(s, "edges: {}", self.edge_count);
        let _ = writeln!(s, "drivers ({}): {}", self.drivers.len(), join(&self.drivers));
        let _ = writeln!(s, "n_d: {}", self.n_d);
        let _ = writeln!(s, "mds: {}", join(&self.mds));
        let _ = writeln!(s, "perfect_matching: {}", self.perfect_matching);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoleEntry {
    pub node: String,
    pub role: Role,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeOutput {
    pub paths: Vec<Vec<String>>,
    pub cycles: Vec<Vec<String>>,
    pub role_of: Vec<RoleEntry>,
}

impl SchemeOutput {
    pub fn new(g: &DirectedGraph, s: &ControlScheme) -> Self {
        let mut role_of: Vec<RoleEntry> = s
            .role_of
            .iter()
            .enumerate()
            .map(|(i, &role)| RoleEntry { node: g.label(i).to_owned(), role })
            .collect();
        role_of.sort_by(|a, b| natural_cmp(&a.node, &b.node));
        SchemeOutput {
            paths: s.paths.iter().map(|p| path_labels(g, p)).collect(),
            cycles: s.cycles.iter().map(|c| path_labels(g, c)).collect(),
            role_of,
        }
    }
}

impl TextReport for SchemeOutput {
    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "paths: {}", self.paths.len());
        for p in &self.paths {
            let _ = writeln!(s, "  {}", p.join(" -> "));
        }
        let _ = writeln!(s, "cycles: {}", self.cycles.len());
        for c in &self.cycles {
            let _ = writeln!(s, "  {} -> {}", c.join(" -> "), c[0]);
        }
        let _ = writeln!(s, "roles:");
        for entry in &self.role_of {
            let role = serde_json::to_value(entry.role).expect("role serializes");
            let _ = writeln!(s, "  {} {}", entry.node, role.as_str().unwrap_or_default());
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleOutput {
    pub matching_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub head_union: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_union: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_hubs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub definitional_hubs: Option<Vec<String>>,
    pub truncated: bool,
    /// Oracle hubs equal the fast pipeline's hubs; absent when truncated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

impl OracleOutput {
    pub fn new(g: &DirectedGraph, oracle: &OracleReport, fast: &HubReport) -> Self {
        let labels = |s: &Option<NodeSet>| s.as_ref().map(|s| sorted_labels(g, s));
        OracleOutput {
            matching_count: oracle.matching_count,
            head_union: labels(&oracle.head_union),
            tail_union: labels(&oracle.tail_union),
            theorem_hubs: labels(&oracle.theorem_hubs),
            definitional_hubs: labels(&oracle.definitional_hubs),
            truncated: oracle.truncated,
            agree: oracle.theorem_hubs.as_ref().map(|hubs| *hubs == fast.hubs),
        }
    }
}

impl TextReport for OracleOutput {
    fn to_text(&self) -> String {
        let mut s = String::new();
        if self.truncated {
            let _ = writeln!(s, "truncated: true (enumeration limit exceeded)");
            return s;
        }
        let set = |v: &Option<Vec<String>>| v.as_deref().map(join).unwrap_or_default();
        let _ = writeln!(s, "matching_count: {}", self.matching_count);
        let _ = writeln!(s, "head_union: {}", set(&self.head_union));
        let _ = writeln!(s, "tail_union: {}", set(&self.tail_union));
        let _ = writeln!(s, "theorem_hubs: {}", set(&self.theorem_hubs));
        let _ = writeln!(s, "definitional_hubs: {}", set(&self.definitional_hubs));
        let _ = writeln!(s, "agree: {}", self.agree.unwrap_or(false));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;
    use crate::hubs::control_hubs;

    #[test]
    fn natural_order() {
        let mut labels = vec!["10", "b", "2", "a", "1", "02", "B"];
        labels.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(labels, vec!["1", "02", "2", "10", "B", "a", "b"]);
    }

    #[test]
    fn hub_output_uses_labels() {
        let g = parse_edge_list("10 9\n9 2").unwrap();
        let out = HubOutput::new(&g, &control_hubs(&g).unwrap());
        assert_eq!(out.heads, vec!["10"]);
        assert_eq!(out.hubs, vec!["9"]);
        assert_eq!(out.tails, vec!["2"]);
        assert!(out.to_text().contains("hubs (1): 9\n"));
    }

    #[test]
    fn envelope_carries_digest() {
        let env = Envelope::new(b"", 1u8);
        assert_eq!(env.input_sha256, "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
        assert!(env.to_json().ends_with("}\n"));
    }
}
