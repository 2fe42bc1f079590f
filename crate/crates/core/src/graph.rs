//! Directed graphs, edge-list ingestion, transposition and the bipartite split.
//!
//! Nodes are re-indexed densely (`0..n`) by first appearance. Duplicate edges
//! collapse to one; self-loops are kept since `(u_out, u_in)` is a legitimate
//! bipartite edge.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported node count. Adjacency and matching arrays hold `u32`
/// indices and reserve `u32::MAX` as a sentinel.
pub const MAX_NODES: usize = u32::MAX as usize;

fn check_node_count(n: usize) -> Result<()> {
    if n > MAX_NODES {
        return Err(Error::Parameter(format!("{n} nodes exceeds the supported maximum of {MAX_NODES}")));
    }
    Ok(())
}

/// Compressed adjacency: the neighbours of node `i` are
/// `targets[offsets[i]..offsets[i + 1]]`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Adjacency {
    fn build(n: usize, pairs: impl Iterator<Item = (usize, usize)> + Clone) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for (from, _) in pairs.clone() {
            offsets[from + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0u32; offsets[n]];
        for (from, to) in pairs {
            targets[cursor[from]] = to as u32;
            cursor[from] += 1;
        }
        for i in 0..n {
            targets[offsets[i]..offsets[i + 1]].sort_unstable();
        }
        Adjacency { offsets, targets }
    }

    fn neighbors(&self, node: usize) -> &[u32] {
        &self.targets[self.offsets[node]..self.offsets[node + 1]]
    }
}

/// A directed network `G(V, E)` over dense node indices with external labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    out_adj: Adjacency,
    labels: Arc<[String]>,
    index_of: Arc<HashMap<String, usize>>,
}

impl DirectedGraph {
    /// Builds a graph on `n` nodes labelled `"0"`, `"1"`, ... from index pairs.
    ///
    /// Nodes with no incident edge are allowed here, unlike in the edge-list
    /// format. Duplicate edges keep their first occurrence.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_labeled_edges(labels, edges)
    }

    /// Builds a graph whose node `i` carries `labels[i]`.
    pub fn from_labeled_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        check_node_count(n)?;
        let mut index_of = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index_of.insert(label.clone(), i).is_some() {
                return Err(Error::Parameter(format!("duplicate node label {label:?}")));
            }
        }
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!("edge ({u}, {v}) outside node range 0..{n}")));
            }
            if seen.insert((u, v)) {
                kept.push((u, v));
            }
        }
        Ok(Self::assemble(labels.into(), Arc::new(index_of), kept))
    }

    fn assemble(labels: Arc<[String]>, index_of: Arc<HashMap<String, usize>>, edges: Vec<(usize, usize)>) -> Self {
        let n = labels.len();
        let out_adj = Adjacency::build(n, edges.iter().copied());
        DirectedGraph { n, edges, out_adj, labels, index_of }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Edges in first-appearance order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Successors of `node`, ascending.
    pub fn successors(&self, node: usize) -> &[u32] {
        self.out_adj.neighbors(node)
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index_of.get(label).copied()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(_, v) in &self.edges {
            deg[v] += 1;
        }
        deg
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.successors(node).len()
    }

    /// Renumbers nodes so that old index `i` becomes `perm[i]`; labels travel
    /// with their nodes.
    pub fn permuted(&self, perm: &[usize]) -> DirectedGraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal node count");
        let mut labels = vec![String::new(); self.n];
        for (old, &new) in perm.iter().enumerate() {
            labels[new] = self.labels[old].clone();
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let index_of = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Self::assemble(labels.into(), Arc::new(index_of), edges)
    }

    /// Renders the graph in edge-list format, one `source target` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.edges.len() * 8);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }
}

/// Parses whitespace-separated `source target` label pairs, one edge per line.
///
/// Blank lines and lines whose first non-blank character is `#` are skipped.
/// LF and CRLF terminators are both accepted.
pub fn parse_edge_list(text: &str) -> Result<DirectedGraph> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut labels: Vec<String> = Vec::new();
    let mut index_of: HashMap<String, usize> = HashMap::new();
    let mut seen = HashSet::new();
    let mut edges = Vec::new();

    let mut intern = |label: &str, labels: &mut Vec<String>| -> usize {
        if let Some(&i) = index_of.get(label) {
            return i;
        }
        let i = labels.len();
        labels.push(label.to_owned());
        index_of.insert(label.to_owned(), i);
        i
    };

    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(src), Some(dst), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            let count = line.split_whitespace().count();
            return Err(Error::Parse {
                line: lineno + 1,
                message: format!("expected 2 labels (source target), found {count}"),
            });
        };
        let u = intern(src, &mut labels);
        let v = intern(dst, &mut labels);
        if seen.insert((u, v)) {
            edges.push((u, v));
        }
    }

    if labels.is_empty() {
        return Err(Error::EmptyGraph);
    }
    check_node_count(labels.len())?;
    let index_of = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    Ok(DirectedGraph::assemble(labels.into(), Arc::new(index_of), edges))
}

/// Reverses every edge. Node indices and labels are unchanged.
pub fn transpose(g: &DirectedGraph) -> DirectedGraph {
    let edges = g.edges.iter().map(|&(u, v)| (v, u)).collect();
    DirectedGraph::assemble(g.labels.clone(), g.index_of.clone(), edges)
}

/// The bipartite split `B(V_out, V_in, E)`: node `u` contributes a left copy
/// `u_out` and a right copy `u_in`; edge `u -> v` becomes `(u_out, v_in)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    left_adj: Adjacency,
    right_adj: Adjacency,
}

impl BipartiteGraph {
    /// Builds a bipartite graph with `n` nodes per side. Duplicate pairs collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_node_count(n)?;
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for (l, r) in edges {
            if l >= n || r >= n {
                return Err(Error::Parameter(format!("bipartite edge ({l}, {r}) outside 0..{n}")));
            }
            if seen.insert((l, r)) {
                kept.push((l, r));
            }
        }
        Ok(Self::assemble(n, kept))
    }

    fn assemble(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let left_adj = Adjacency::build(n, edges.iter().copied());
        let right_adj = Adjacency::build(n, edges.iter().map(|&(l, r)| (r, l)));
        BipartiteGraph { n, edges, left_adj, right_adj }
    }

    /// Nodes per side.
    pub fn side_len(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `(left, right)` pairs in source-edge order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Right neighbours of a left node, ascending.
    pub fn left_neighbors(&self, left: usize) -> &[u32] {
        self.left_adj.neighbors(left)
    }

    /// Left neighbours of a right node, ascending.
    pub fn right_neighbors(&self, right: usize) -> &[u32] {
        self.right_adj.neighbors(right)
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        right < self.n && self.left_neighbors(left).binary_search(&(right as u32)).is_ok()
    }

    /// Same edges with the two sides exchanged.
    pub fn swapped(&self) -> BipartiteGraph {
        Self::assemble(self.n, self.edges.iter().map(|&(l, r)| (r, l)).collect())
    }
}

pub fn to_bipartite(g: &DirectedGraph) -> BipartiteGraph {
    let right_adj = Adjacency::build(g.n, g.edges.iter().map(|&(u, v)| (v, u)));
    BipartiteGraph { n: g.n, edges: g.edges.clone(), left_adj: g.out_adj.clone(), right_adj }
}
