//! Finite simple graphs with a fixed vertex order.
//!
//! Vertices are `0..n` and the integer order on ids is the order used by
//! every sign convention downstream, so it is part of the value: the same
//! edge set under a different numbering is a different graph. Supports up to
//! 64 vertices, which comfortably covers desk-scale instances.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Sorted, duplicate-free list of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Build from arbitrary ids; sorts and deduplicates.
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub(crate) fn from_mask(mut mask: u64) -> Self {
        let mut ids = Vec::new();
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            ids.push(v);
            mask &= mask - 1;
        }
        VertexSet(ids)
    }

    pub(crate) fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut ids = self.0.clone();
        ids.extend(other.iter());
        VertexSet::new(ids)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn insert(&self, v: usize) -> VertexSet {
        let mut ids = self.0.clone();
        ids.push(v);
        VertexSet::new(ids)
    }

    pub fn remove(&self, v: usize) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&w| w != v).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Finite simple graph on vertices `0..n` with adjacency stored as bitmask
/// rows. Immutable after construction.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}{})",
            self.n,
            self.edge_count(),
            match &self.name {
                Some(s) => format!(", {s}"),
                None => String::new(),
            }
        )
    }
}

/// Construct a graph, normalizing duplicate edges. Rejects out-of-range ids
/// and self-loops.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    if n > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "at most {MAX_VERTICES} vertices supported, got {n}"
        )));
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        if u >= n {
            return Err(Error::VertexOutOfRange { vertex: u, n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(Graph { n, adj, name: None })
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("graph(n={},m={})", self.n, self.edge_count()))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        for v in s.iter() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(())
    }

    /// Open neighborhood `N(U)`: union of the neighbor sets of members of `U`.
    pub fn open_neighborhood(&self, u: &VertexSet) -> Result<VertexSet> {
        self.check_set(u)?;
        let mut mask = 0u64;
        for v in u.iter() {
            mask |= self.adj[v];
        }
        Ok(VertexSet::from_mask(mask))
    }

    /// Closed neighborhood `N[U] = U ∪ N(U)`.
    pub fn closed_neighborhood(&self, u: &VertexSet) -> Result<VertexSet> {
        self.check_set(u)?;
        let mut mask = u.mask();
        for v in u.iter() {
            mask |= self.adj[v];
        }
        Ok(VertexSet::from_mask(mask))
    }

    /// Induced subgraph on the complement of `w`, together with the
    /// order-preserving relabeling old id -> new id.
    pub fn delete_vertices(&self, w: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_set(w)?;
        let mut relabel = vec![None; self.n];
        let mut kept = Vec::new();
        for v in 0..self.n {
            if !w.contains(v) {
                relabel[v] = Some(kept.len());
                kept.push(v);
            }
        }
        let mut edges = Vec::new();
        for (new_u, &old_u) in kept.iter().enumerate() {
            for (new_v, &old_v) in kept.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    edges.push((new_u, new_v));
                }
            }
        }
        let g = build_graph(kept.len(), &edges)?;
        Ok((g, relabel))
    }

    /// Whether every connected component of the induced subgraph on `s` has
    /// at most `r` vertices. For `r = 1` this is plain independence.
    pub fn is_r_independent(&self, s: &VertexSet, r: usize) -> bool {
        debug_assert!(r >= 1);
        self.mask_is_r_independent(s.mask(), r)
    }

    fn mask_is_r_independent(&self, mask: u64, r: usize) -> bool {
        if r == 1 {
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                if self.adj[v] & mask != 0 {
                    return false;
                }
                m &= m - 1;
            }
            return true;
        }
        // Union-find restricted to the members of the set.
        let members: Vec<usize> = VertexSet::from_mask(mask).0;
        let mut parent: Vec<usize> = (0..members.len()).collect();
        let mut size = vec![1usize; members.len()];
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    let ri = find(&mut parent, i);
                    let rj = find(&mut parent, j);
                    if ri != rj {
                        let (big, small) = if size[ri] >= size[rj] { (ri, rj) } else { (rj, ri) };
                        parent[small] = big;
                        size[big] += size[small];
                        if size[big] > r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// All r-independent sets in lexicographic order (of the sorted id
    /// lists), optionally restricted to one cardinality. Always contains the
    /// empty set when no size filter excludes it.
    pub fn r_independent_sets(&self, r: usize, size: Option<usize>) -> Vec<VertexSet> {
        assert!(r >= 1, "r must be at least 1");
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.enumerate_rec(r, size, 0, 0u64, &mut current, &mut out);
        out
    }

    fn enumerate_rec(
        &self,
        r: usize,
        size: Option<usize>,
        next: usize,
        mask: u64,
        current: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        match size {
            Some(s) if current.len() == s => {
                out.push(VertexSet(current.clone()));
                return;
            }
            None => out.push(VertexSet(current.clone())),
            _ => {}
        }
        for v in next..self.n {
            let m = mask | (1 << v);
            if self.mask_is_r_independent(m, r) {
                current.push(v);
                self.enumerate_rec(r, size, v + 1, m, current, out);
                current.pop();
            }
        }
    }

    /// Whether `s` is r-independent and cannot be extended by any vertex.
    pub fn is_maximal_r_independent(&self, s: &VertexSet, r: usize) -> bool {
        if !self.is_r_independent(s, r) {
            return false;
        }
        let mask = s.mask();
        (0..self.n).all(|v| s.contains(v) || !self.mask_is_r_independent(mask | (1 << v), r))
    }

    /// All maximal r-independent sets, in lexicographic order.
    pub fn maximal_r_independent_sets(&self, r: usize) -> Vec<VertexSet> {
        self.r_independent_sets(r, None)
            .into_iter()
            .filter(|s| self.is_maximal_r_independent(s, r))
            .collect()
    }

    /// Count of maximal r-independent sets by cardinality, plus the
    /// r-independence number.
    pub fn maximal_census(&self, r: usize) -> Census {
        let all = self.r_independent_sets(r, None);
        let alpha = all.iter().map(VertexSet::len).max().unwrap_or(0);
        let mut counts = BTreeMap::new();
        for s in &all {
            if self.is_maximal_r_independent(s, r) {
                *counts.entry(s.len()).or_insert(0usize) += 1;
            }
        }
        Census { counts, alpha }
    }
}

/// Maximal-set census: `counts[p]` maximal r-independent sets of size `p`;
/// `alpha` is the r-independence number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub counts: BTreeMap<usize, usize>,
    pub alpha: usize,
}

impl Census {
    pub fn count(&self, p: usize) -> usize {
        self.counts.get(&p).copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    #[test]
    fn build_normalizes_duplicate_edges() {
        let g = build_graph(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            build_graph(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(build_graph(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn single_vertex_graph() {
        let g = build_graph(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        let census = g.maximal_census(1);
        assert_eq!(census.alpha, 1);
        assert_eq!(census.count(1), 1);
    }

    #[test]
    fn closed_neighborhood_on_cycle() {
        let c6 = family::cycle(6).unwrap();
        // N[{0, 3}] covers the whole 6-cycle.
        let n = c6
            .closed_neighborhood(&VertexSet::new(vec![0, 3]))
            .unwrap();
        assert_eq!(n, c6.vertices());
        assert_eq!(
            c6.closed_neighborhood(&VertexSet::empty()).unwrap(),
            VertexSet::empty()
        );
    }

    #[test]
    fn deletion_keeps_relative_order() {
        let c6 = family::cycle(6).unwrap();
        let nbhd = c6.closed_neighborhood(&VertexSet::singleton(0)).unwrap();
        assert_eq!(nbhd, VertexSet::new(vec![5, 0, 1]));
        let (g, relabel) = c6.delete_vertices(&nbhd).unwrap();
        // Remaining vertices 2,3,4 form a path.
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert_eq!(relabel[2], Some(0));
        assert_eq!(relabel[4], Some(2));
        assert_eq!(relabel[0], None);

        let (same, relabel) = c6.delete_vertices(&VertexSet::empty()).unwrap();
        assert_eq!(same, c6);
        assert!(relabel.iter().enumerate().all(|(v, r)| *r == Some(v)));
    }

    #[test]
    fn r_independence_examples() {
        let p3 = family::path(3).unwrap();
        assert!(p3.is_r_independent(&VertexSet::new(vec![0, 2]), 1));
        assert!(!p3.is_r_independent(&VertexSet::new(vec![0, 1]), 1));
        assert!(p3.is_r_independent(&VertexSet::empty(), 1));

        let c4 = family::cycle(4).unwrap();
        // Every triple of C4 induces a 3-vertex path, so none is
        // 2-independent; the six pairs all are.
        assert!(!c4.is_r_independent(&VertexSet::new(vec![0, 1, 2]), 2));
        assert!(!c4.is_r_independent(&VertexSet::new(vec![0, 1, 3]), 2));
        assert_eq!(c4.r_independent_sets(2, Some(2)).len(), 6);
        assert!(c4.r_independent_sets(2, Some(3)).is_empty());
    }

    #[test]
    fn enumeration_matches_paper_counts() {
        let c6 = family::cycle(6).unwrap();
        let triples = c6.r_independent_sets(1, Some(3));
        assert_eq!(
            triples,
            vec![VertexSet::new(vec![0, 2, 4]), VertexSet::new(vec![1, 3, 5])]
        );

        let k4 = family::complete(4).unwrap();
        assert!(k4.r_independent_sets(1, Some(2)).is_empty());

        let c5 = family::cycle(5).unwrap();
        assert_eq!(c5.r_independent_sets(2, Some(3)).len(), 5);
    }

    #[test]
    fn census_examples() {
        let c6 = family::cycle(6).unwrap();
        let census = c6.maximal_census(1);
        assert_eq!(census.alpha, 3);
        assert_eq!(census.count(2), 3);
        assert_eq!(census.count(3), 2);
        assert_eq!(census.count(1), 0);

        let petersen = family::petersen();
        let census = petersen.maximal_census(1);
        assert_eq!(census.alpha, 4);
        assert_eq!(census.count(4), 5);
        assert_eq!(census.count(3), 10);
    }

    #[test]
    fn deleting_closed_neighborhood_removes_adjacency() {
        for g in [family::petersen(), family::cycle(7).unwrap()] {
            for v in 0..g.vertex_count() {
                let u = VertexSet::singleton(v);
                let nbhd = g.closed_neighborhood(&u).unwrap();
                let (_, relabel) = g.delete_vertices(&nbhd).unwrap();
                for w in 0..g.vertex_count() {
                    if relabel[w].is_some() {
                        assert!(!g.has_edge(v, w));
                    }
                }
            }
        }
    }
}
