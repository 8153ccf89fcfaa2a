//! Multigraphs with stable edge ids, minors, and a spanning-forest basis of
//! the cycle space.
//!
//! Edge ids are positional in the graph a user builds and are carried
//! unchanged through [`MultiGraph::restrict`], [`MultiGraph::contract`] and
//! [`MultiGraph::delete`], so an orientation or edge vector of `G` can be
//! read on any minor without translation. Ids are limited to `0..64` so that
//! edge sets fit in one machine word.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard limit on the number of edges (and on edge ids).
pub const MAX_EDGES: usize = 64;

/// A set of edge ids, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn singleton(id: usize) -> Self {
        EdgeSet(1 << id)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        EdgeSet(ids.into_iter().fold(0, |m, id| m | (1 << id)))
    }

    pub fn contains(self, id: usize) -> bool {
        id < MAX_EDGES && self.0 >> id & 1 == 1
    }

    pub fn insert(&mut self, id: usize) {
        self.0 |= 1 << id;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn minus(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ids in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let id = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(id)
        })
    }

    /// Every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = EdgeSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(EdgeSet(cur))
        })
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// One edge; `tail -> head` is its reference orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub components: usize,
    pub rank: usize,
    pub nullity: usize,
}

/// Signed edge list of the fundamental circuit of one non-forest edge.
///
/// Signs are relative to the reference orientation along a traversal that
/// crosses `edge` forwards, so `edge` itself always carries `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub edge: usize,
    pub terms: Vec<(usize, i8)>,
    pub positive: EdgeSet,
    pub negative: EdgeSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestData {
    pub forest_edges: EdgeSet,
    pub fundamental_circuits: Vec<Circuit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// Union-find whose representative is always the smallest member.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl MultiGraph {
    /// Builds a graph whose edge `i` is `pairs[i]`, oriented `u -> v`.
    pub fn new(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs.iter().enumerate().map(|(id, &(tail, head))| Edge { id, tail, head }).collect();
        Self::from_edges(vertex_count, edges)
    }

    /// Builds a graph from explicitly labelled edges. Ids must be distinct,
    /// strictly increasing and below [`MAX_EDGES`].
    pub fn from_edges(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges { max: MAX_EDGES, got: edges.len() });
        }
        let mut last = None;
        for e in &edges {
            if e.id >= MAX_EDGES || last.is_some_and(|l| e.id <= l) {
                return Err(Error::InvalidArgument(format!(
                    "edge ids must be strictly increasing and below {MAX_EDGES}"
                )));
            }
            last = Some(e.id);
            for v in [e.tail, e.head] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
                }
            }
        }
        Ok(MultiGraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Option<&Edge> {
        self.position(id).map(|i| &self.edges[i])
    }

    /// Index of edge `id` in [`MultiGraph::edges`]; edge vectors are indexed
    /// this way.
    pub fn position(&self, id: usize) -> Option<usize> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok()
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet::from_ids(self.edges.iter().map(|e| e.id))
    }

    pub fn loops(&self) -> EdgeSet {
        EdgeSet::from_ids(self.edges.iter().filter(|e| e.is_loop()).map(|e| e.id))
    }

    fn check_subset(&self, x: EdgeSet) -> Result<()> {
        match x.minus(self.edge_set()).iter().next() {
            Some(id) => Err(Error::UnknownEdge(id)),
            None => Ok(()),
        }
    }

    fn union_find(&self, x: EdgeSet) -> UnionFind {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in self.edges.iter().filter(|e| x.contains(e.id)) {
            uf.union(e.tail, e.head);
        }
        uf
    }

    pub fn components(&self) -> usize {
        let mut uf = self.union_find(self.edge_set());
        (0..self.vertex_count).filter(|&v| uf.find(v) == v).count()
    }

    pub fn stats(&self) -> GraphStats {
        let components = self.components();
        let rank = self.vertex_count - components;
        GraphStats { components, rank, nullity: self.edges.len() - rank }
    }

    /// `G|X`: all vertices, only the edges in `x`.
    pub fn restrict(&self, x: EdgeSet) -> Result<Self> {
        self.check_subset(x)?;
        Ok(MultiGraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().filter(|e| x.contains(e.id)).copied().collect(),
        })
    }

    /// `G/X`: merges the vertices of each component of `G|X` and drops the
    /// edges of `x`. Merged vertices are numbered by their smallest member.
    pub fn contract(&self, x: EdgeSet) -> Result<Self> {
        self.check_subset(x)?;
        let mut uf = self.union_find(x);
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = uf.find(v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[v] = label[r];
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !x.contains(e.id))
            .map(|e| Edge { id: e.id, tail: label[e.tail], head: label[e.head] })
            .collect();
        Ok(MultiGraph { vertex_count: next, edges })
    }

    pub fn delete(&self, id: usize) -> Result<Self> {
        if self.edge(id).is_none() {
            return Err(Error::UnknownEdge(id));
        }
        self.restrict(self.edge_set().minus(EdgeSet::singleton(id)))
    }

    /// True when removing the (non-loop) edge disconnects its endpoints.
    pub fn is_bridge(&self, id: usize) -> Result<bool> {
        let e = *self.edge(id).ok_or(Error::UnknownEdge(id))?;
        if e.is_loop() {
            return Ok(false);
        }
        let mut uf = self.union_find(self.edge_set().minus(EdgeSet::singleton(id)));
        Ok(uf.find(e.tail) != uf.find(e.head))
    }

    /// Spanning forest chosen greedily in id order, with the fundamental
    /// circuit of every other edge.
    pub fn spanning_structure(&self) -> ForestData {
        let n = self.vertex_count;
        let mut uf = UnionFind::new(n);
        let mut forest = EdgeSet::EMPTY;
        // adjacency of the forest: (neighbour, edge id, sign when walked from here)
        let mut adj: Vec<Vec<(usize, usize, i8)>> = vec![Vec::new(); n];
        for e in &self.edges {
            if uf.union(e.tail, e.head) {
                forest.insert(e.id);
                adj[e.tail].push((e.head, e.id, 1));
                adj[e.head].push((e.tail, e.id, -1));
            }
        }

        let mut circuits = Vec::with_capacity(self.edges.len() - forest.len());
        for e in self.edges.iter().filter(|e| !forest.contains(e.id)) {
            let mut terms = vec![(e.id, 1i8)];
            if !e.is_loop() {
                terms.extend(forest_path(&adj, e.head, e.tail));
            }
            let mut positive = EdgeSet::EMPTY;
            let mut negative = EdgeSet::EMPTY;
            for &(id, s) in &terms {
                if s > 0 {
                    positive.insert(id);
                } else {
                    negative.insert(id);
                }
            }
            circuits.push(Circuit { edge: e.id, terms, positive, negative });
        }
        ForestData { forest_edges: forest, fundamental_circuits: circuits }
    }
}

/// Signed forest edges on the unique path `from -> to`.
fn forest_path(adj: &[Vec<(usize, usize, i8)>], from: usize, to: usize) -> Vec<(usize, i8)> {
    let mut prev: Vec<Option<(usize, usize, i8)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, id, s) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, id, s));
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let (p, id, s) = prev[v].expect("endpoints of a non-forest edge share a tree");
        path.push((id, s));
        v = p;
    }
    path.reverse();
    path
}

impl fmt::Display for MultiGraph {
    /// The plain-text graph format accepted by [`parse_graph`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "v {}", self.vertex_count)?;
        for e in &self.edges {
            writeln!(f, "e {} {}", e.tail, e.head)?;
        }
        Ok(())
    }
}

/// Parses the line format
///
/// ```text
/// # optional comments
/// v 3
/// e 0 2
/// e 0 1
/// ```
///
/// Edge ids follow file order and each `e u v` line is oriented `u -> v`.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut vertex_count = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap_or_default();
        let nums = parts
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("expected a nonnegative integer, got `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        match (tag, nums.as_slice()) {
            ("v", [n]) if vertex_count.is_none() => vertex_count = Some(*n),
            ("v", [_]) => return Err(err("duplicate `v` line".into())),
            ("e", [u, v]) => {
                let n = vertex_count.ok_or_else(|| err("`e` line before `v` line".into()))?;
                for &x in [u, v] {
                    if x >= n {
                        return Err(err(format!("vertex {x} out of range for {n} vertices")));
                    }
                }
                pairs.push((*u, *v));
            }
            _ => return Err(err(format!("unrecognised line `{line}`"))),
        }
    }
    let n = vertex_count.ok_or(Error::Parse { line: 0, message: "missing `v` line".into() })?;
    MultiGraph::new(n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p8() -> MultiGraph {
        MultiGraph::new(3, &[(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_endpoints() {
        assert_eq!(MultiGraph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, vertex_count: 2 }));
    }

    #[test]
    fn stats_of_small_graphs() {
        let s = p8().stats();
        assert_eq!((s.components, s.rank, s.nullity), (1, 2, 3));
        let k2 = MultiGraph::new(2, &[(0, 1)]).unwrap().stats();
        assert_eq!((k2.components, k2.rank, k2.nullity), (1, 1, 0));
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap().stats();
        assert_eq!((l1.components, l1.rank, l1.nullity), (1, 0, 1));
    }

    #[test]
    fn restrict_keeps_vertices_and_ids() {
        let g = p8();
        let h = g.restrict(EdgeSet::from_ids([1, 3])).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges().iter().map(|e| e.id).collect::<Vec<_>>(), vec![1, 3]);
        assert!(h.edges().iter().all(|e| (e.tail, e.head) == (0, 1)));
        assert_eq!(g.restrict(EdgeSet::EMPTY).unwrap().edge_count(), 0);
        assert_eq!(g.restrict(EdgeSet::singleton(9)), Err(Error::UnknownEdge(9)));
    }

    #[test]
    fn contract_merges_and_makes_parallels() {
        let g = p8();
        let h = g.contract(EdgeSet::from_ids([1, 3])).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edges().iter().map(|e| e.id).collect::<Vec<_>>(), vec![0, 2, 4]);
        assert!(h.edges().iter().all(|e| !e.is_loop()));

        let k2 = MultiGraph::new(2, &[(0, 1)]).unwrap();
        let c = k2.contract(EdgeSet::singleton(0)).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (1, 0));
        assert_eq!(g.contract(EdgeSet::EMPTY).unwrap(), g);
    }

    #[test]
    fn contracting_a_cycle_edge_creates_loops() {
        let g = p8().contract(EdgeSet::from_ids([1])).unwrap();
        assert!(g.edge(3).unwrap().is_loop());
    }

    #[test]
    fn delete_examples() {
        let g = p8().delete(0).unwrap();
        assert_eq!(g.edge_count(), 4);
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap().delete(0).unwrap();
        assert_eq!((l1.vertex_count(), l1.edge_count()), (1, 0));
        let k2 = MultiGraph::new(2, &[(0, 1)]).unwrap().delete(0).unwrap();
        assert_eq!(k2.stats().components, 2);
    }

    #[test]
    fn spanning_structure_invariants() {
        for g in [
            p8(),
            MultiGraph::new(2, &[(0, 1)]).unwrap(),
            MultiGraph::new(1, &[(0, 0)]).unwrap(),
            MultiGraph::new(4, &[(0, 1), (1, 1), (2, 3), (3, 2), (1, 0)]).unwrap(),
        ] {
            let s = g.stats();
            let fd = g.spanning_structure();
            assert_eq!(fd.forest_edges.len(), s.rank);
            assert_eq!(fd.fundamental_circuits.len(), s.nullity);
            assert!(fd.forest_edges.intersection(g.loops()).is_empty());
            for c in &fd.fundamental_circuits {
                assert_eq!(c.terms[0], (c.edge, 1));
                assert!(c.terms[1..].iter().all(|&(id, _)| fd.forest_edges.contains(id)));
                // the signed circuit has zero boundary
                let mut b = vec![0i64; g.vertex_count()];
                for &(id, s) in &c.terms {
                    let e = g.edge(id).unwrap();
                    b[e.tail] += s as i64;
                    b[e.head] -= s as i64;
                }
                assert!(b.iter().all(|&x| x == 0));
            }
        }
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap().spanning_structure();
        assert_eq!(l1.fundamental_circuits[0].terms, vec![(0, 1)]);
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let s = EdgeSet::from_ids([1, 4, 6]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], EdgeSet::EMPTY);
        assert!(all.iter().all(|x| x.is_subset(s)));
        assert_eq!(EdgeSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn parse_and_print_round_trip() {
        let text = "# the example graph\nv 3\ne 0 2\ne 0 1\ne 1 2\ne 0 1\ne 1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, p8());
        assert_eq!(parse_graph(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_graph("v 2\ne 0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("e 0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("v 2\nx\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("# nothing\n"), Err(Error::Parse { .. })));
    }
}
