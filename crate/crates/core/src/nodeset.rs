use std::fmt;

/// A subset of the dense node indices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    members: Vec<bool>,
    len: usize,
}

impl NodeSet {
    pub fn empty(universe: usize) -> Self {
        NodeSet { members: vec![false; universe], len: 0 }
    }

    pub fn full(universe: usize) -> Self {
        NodeSet { members: vec![true; universe], len: universe }
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Returns `true` if the node was not already present.
    pub fn insert(&mut self, node: usize) -> bool {
        assert!(node < self.members.len(), "node {node} outside universe of {}", self.members.len());
        let fresh = !self.members[node];
        if fresh {
            self.members[node] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn contains(&self, node: usize) -> bool {
        self.members.get(node).copied().unwrap_or(false)
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &NodeSet) -> NodeSet {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        self.zip_with(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> NodeSet {
        NodeSet {
            members: self.members.iter().map(|&m| !m).collect(),
            len: self.universe() - self.len,
        }
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.iter().all(|i| other.contains(i))
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        self.iter().all(|i| !other.contains(i))
    }

    /// Image of the set under a node permutation (`perm[old] = new`).
    pub fn permuted(&self, perm: &[usize]) -> NodeSet {
        NodeSet::from_indices(self.universe(), self.iter().map(|i| perm[i]))
    }

    fn zip_with(&self, other: &NodeSet, f: impl Fn(bool, bool) -> bool) -> NodeSet {
        assert_eq!(self.universe(), other.universe(), "node sets over different universes");
        let members: Vec<bool> = self.members.iter().zip(&other.members).map(|(&a, &b)| f(a, b)).collect();
        let len = members.iter().filter(|&&m| m).count();
        NodeSet { members, len }
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = NodeSet::from_indices(5, [0, 1, 2]);
        let b = NodeSet::from_indices(5, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 1]);
        assert_eq!(a.complement().to_vec(), vec![3, 4]);
        assert_eq!(a.complement().len(), 2);
        assert!(!a.is_disjoint(&b));
        assert!(NodeSet::from_indices(5, [2]).is_subset(&b));
    }

    #[test]
    fn insert_reports_novelty() {
        let mut s = NodeSet::empty(3);
        assert!(s.insert(1));
        assert!(!s.insert(1));
        assert_eq!(s.len(), 1);
        assert!(!s.contains(7));
    }

    #[test]
    #[should_panic(expected = "outside universe")]
    fn insert_out_of_range_panics() {
        NodeSet::empty(2).insert(2);
    }
}
