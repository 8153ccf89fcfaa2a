//! Orientations, the bond/circuit (Minty) partition, and the cut, Eulerian
//! and cut-Eulerian equivalence relations.
//!
//! An orientation is stored as the set of edges reversed relative to the
//! reference orientation of the graph. Loops carry a flip bit like every
//! other edge: reversing a loop leaves incidences unchanged but negates the
//! sign with which a value on the loop is read, and a loop always lies in
//! the circuit part.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, MultiGraph, UnionFind};
use crate::Budget;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Orientation {
    flips: EdgeSet,
    support: EdgeSet,
}

impl Orientation {
    pub fn reference(g: &MultiGraph) -> Self {
        Orientation { flips: EdgeSet::EMPTY, support: g.edge_set() }
    }

    pub fn from_flips(g: &MultiGraph, flips: EdgeSet) -> Result<Self> {
        if !flips.is_subset(g.edge_set()) {
            return Err(Error::OrientationMismatch);
        }
        Ok(Orientation { flips, support: g.edge_set() })
    }

    /// Parses a `0`/`1` string with one character per edge in id order.
    pub fn parse(g: &MultiGraph, bits: &str) -> Result<Self> {
        if bits.len() != g.edge_count() {
            return Err(Error::DimensionMismatch { expected: g.edge_count(), got: bits.len() });
        }
        let mut flips = EdgeSet::EMPTY;
        for (c, e) in bits.chars().zip(g.edges()) {
            match c {
                '0' => {}
                '1' => flips.insert(e.id),
                _ => return Err(Error::InvalidArgument(format!("bad orientation character `{c}`"))),
            }
        }
        Self::from_flips(g, flips)
    }

    /// All `2^|E|` orientations of `g`, in increasing flip-mask order.
    pub fn all(g: &MultiGraph) -> impl Iterator<Item = Orientation> {
        let support = g.edge_set();
        support.subsets().map(move |flips| Orientation { flips, support })
    }

    pub fn flips(&self) -> EdgeSet {
        self.flips
    }

    pub fn is_flipped(&self, id: usize) -> bool {
        self.flips.contains(id)
    }

    pub fn flipped(&self, set: EdgeSet) -> Orientation {
        Orientation { flips: EdgeSet(self.flips.0 ^ set.intersection(self.support).0), support: self.support }
    }

    /// Key whose numeric order is the lexicographic order of the flip string.
    pub fn lex_key(&self) -> u64 {
        self.support.iter().fold(0, |k, id| k << 1 | self.flips.contains(id) as u64)
    }

    /// `(tail, head)` of `e` under this orientation.
    pub fn arc(&self, e: &Edge) -> (usize, usize) {
        if self.flips.contains(e.id) {
            (e.head, e.tail)
        } else {
            (e.tail, e.head)
        }
    }

    /// `+1` where the orientation agrees with the reference, `-1` where not.
    pub fn sign(&self, id: usize) -> i64 {
        if self.flips.contains(id) {
            -1
        } else {
            1
        }
    }

    pub(crate) fn check(&self, g: &MultiGraph) -> Result<()> {
        if self.support == g.edge_set() {
            Ok(())
        } else {
            Err(Error::OrientationMismatch)
        }
    }

    /// Restriction to the edges of a minor of the graph it was built for.
    pub fn on_minor(&self, minor: &MultiGraph) -> Result<Orientation> {
        if !minor.edge_set().is_subset(self.support) {
            return Err(Error::OrientationMismatch);
        }
        Ok(Orientation { flips: self.flips.intersection(minor.edge_set()), support: minor.edge_set() })
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for id in self.support.iter() {
            f.write_str(if self.flips.contains(id) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation({self})")
    }
}

impl MultiGraph {
    /// The same graph with every edge's reference orientation replaced by
    /// its orientation under `o`.
    pub fn directed_by(&self, o: &Orientation) -> Result<MultiGraph> {
        o.check(self)?;
        let edges = self
            .edges()
            .iter()
            .map(|e| {
                let (tail, head) = o.arc(e);
                Edge { id: e.id, tail, head }
            })
            .collect();
        MultiGraph::from_edges(self.vertex_count(), edges)
    }
}

/// How an edge meets a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Incidence {
    None,
    /// The arrow leaves the vertex (`+1`).
    Out,
    /// The arrow enters the vertex (`-1`).
    In,
    /// A loop: counted once as `+1` and once as `-1`.
    Both,
}

impl Incidence {
    pub fn signs(self) -> &'static [i64] {
        match self {
            Incidence::None => &[],
            Incidence::Out => &[1],
            Incidence::In => &[-1],
            Incidence::Both => &[1, -1],
        }
    }
}

pub fn incidence_sign(g: &MultiGraph, o: &Orientation, vertex: usize, edge: usize) -> Result<Incidence> {
    o.check(g)?;
    let e = g.edge(edge).ok_or(Error::UnknownEdge(edge))?;
    let (tail, head) = o.arc(e);
    Ok(match (tail == vertex, head == vertex) {
        (true, true) => Incidence::Both,
        (true, false) => Incidence::Out,
        (false, true) => Incidence::In,
        (false, false) => Incidence::None,
    })
}

fn check_len(g: &MultiGraph, values: &[i64]) -> Result<()> {
    if values.len() == g.edge_count() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: g.edge_count(), got: values.len() })
    }
}

/// `(∂g)(v) = Σ_e sign(v, e) g(e)`; loops contribute nothing.
pub fn boundary(g: &MultiGraph, o: &Orientation, values: &[i64]) -> Result<Vec<i64>> {
    o.check(g)?;
    check_len(g, values)?;
    let mut b = vec![0i64; g.vertex_count()];
    for (e, &x) in g.edges().iter().zip(values) {
        let (tail, head) = o.arc(e);
        b[tail] += x;
        b[head] -= x;
    }
    Ok(b)
}

fn is_zero_mod(x: i64, modulus: u64) -> bool {
    if modulus == 0 {
        x == 0
    } else {
        x.rem_euclid(modulus as i64) == 0
    }
}

/// Membership in the flow group over `ℤ` (`modulus == 0`) or `ℤ_m`.
pub fn is_flow(g: &MultiGraph, o: &Orientation, values: &[i64], modulus: u64) -> Result<bool> {
    Ok(boundary(g, o, values)?.into_iter().all(|x| is_zero_mod(x, modulus)))
}

/// Membership in the tension group: the signed sum around every fundamental
/// circuit vanishes.
pub fn is_tension(g: &MultiGraph, o: &Orientation, values: &[i64], modulus: u64) -> Result<bool> {
    o.check(g)?;
    check_len(g, values)?;
    let fd = g.spanning_structure();
    Ok(fd.fundamental_circuits.iter().all(|c| {
        let sum: i64 = c.terms.iter().map(|&(id, s)| s as i64 * o.sign(id) * values[g.position(id).unwrap()]).sum();
        is_zero_mod(sum, modulus)
    }))
}

/// Edges on directed bonds (`bond_part`) versus edges on directed circuits
/// (`circuit_part`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MintyPartition {
    pub bond_part: EdgeSet,
    pub circuit_part: EdgeSet,
}

/// An edge lies on a directed circuit iff it is a loop or both of its ends
/// sit in the same strongly connected component.
pub fn minty_partition(g: &MultiGraph, o: &Orientation) -> Result<MintyPartition> {
    o.check(g)?;
    let comp = strong_components(g, o);
    let mut circuit_part = EdgeSet::EMPTY;
    for e in g.edges() {
        if comp[e.tail] == comp[e.head] {
            circuit_part.insert(e.id);
        }
    }
    Ok(MintyPartition { bond_part: g.edge_set().minus(circuit_part), circuit_part })
}

/// Kosaraju; returns a component label per vertex.
fn strong_components(g: &MultiGraph, o: &Orientation) -> Vec<usize> {
    let n = g.vertex_count();
    let mut fwd = vec![Vec::new(); n];
    let mut rev = vec![Vec::new(); n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        let (t, h) = o.arc(e);
        fwd[t].push(h);
        rev[h].push(t);
    }

    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some((v, i)) = stack.pop() {
            if i < fwd[v].len() {
                stack.push((v, i + 1));
                let w = fwd[v][i];
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
            }
        }
    }

    let mut comp = vec![usize::MAX; n];
    let mut label = 0;
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = label;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &rev[v] {
                if comp[w] == usize::MAX {
                    comp[w] = label;
                    stack.push(w);
                }
            }
        }
        label += 1;
    }
    comp
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationClassification {
    pub is_acyclic: bool,
    pub is_totally_cyclic: bool,
    pub partition: MintyPartition,
}

pub fn classify(g: &MultiGraph, o: &Orientation) -> Result<OrientationClassification> {
    let partition = minty_partition(g, o)?;
    Ok(OrientationClassification {
        is_acyclic: partition.circuit_part.is_empty(),
        is_totally_cyclic: partition.bond_part.is_empty(),
        partition,
    })
}

fn check_pair(g: &MultiGraph, r: &Orientation, s: &Orientation) -> Result<()> {
    r.check(g)?;
    s.check(g)
}

/// `[R, S]`: `+1` where the two orientations agree, `-1` where they differ.
pub fn coupling(g: &MultiGraph, r: &Orientation, s: &Orientation) -> Result<Vec<i8>> {
    check_pair(g, r, s)?;
    Ok(g.edges().iter().map(|e| if r.is_flipped(e.id) == s.is_flipped(e.id) { 1 } else { -1 }).collect())
}

/// The 0-1 indicator of the edges where `R` and `S` disagree.
pub fn indicator(g: &MultiGraph, r: &Orientation, s: &Orientation) -> Result<Vec<i64>> {
    Ok(coupling(g, r, s)?.into_iter().map(|c| ((1 - c) / 2) as i64).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Cut,
    Eulerian,
    CutEulerian,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Cut => "cut",
            Relation::Eulerian => "eulerian",
            Relation::CutEulerian => "cut-eulerian",
        })
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "cut" => Ok(Relation::Cut),
            "eulerian" => Ok(Relation::Eulerian),
            "cut-eulerian" => Ok(Relation::CutEulerian),
            _ => Err(Error::InvalidArgument(format!("unknown relation `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    All,
    Acyclic,
    TotallyCyclic,
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::Acyclic => "acyclic",
            Filter::TotallyCyclic => "totally-cyclic",
        })
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "all" => Ok(Filter::All),
            "acyclic" => Ok(Filter::Acyclic),
            "totally-cyclic" => Ok(Filter::TotallyCyclic),
            _ => Err(Error::InvalidArgument(format!("unknown filter `{s}`"))),
        }
    }
}

/// Bitmask tests for 0-1 tensions and flows of a reoriented graph.
///
/// A 0-1 vector is given by its support `d` and read in the frame of an
/// orientation with flip set `rf`.
pub(crate) struct ZeroOneTester {
    circuits: Vec<(u64, u64)>,
    out_ref: Vec<u64>,
    in_ref: Vec<u64>,
}

impl ZeroOneTester {
    pub(crate) fn new(g: &MultiGraph) -> Self {
        let fd = g.spanning_structure();
        let circuits = fd.fundamental_circuits.iter().map(|c| (c.positive.0, c.negative.0)).collect();
        let mut out_ref = vec![0u64; g.vertex_count()];
        let mut in_ref = vec![0u64; g.vertex_count()];
        for e in g.edges().iter().filter(|e| !e.is_loop()) {
            out_ref[e.tail] |= 1 << e.id;
            in_ref[e.head] |= 1 << e.id;
        }
        ZeroOneTester { circuits, out_ref, in_ref }
    }

    pub(crate) fn is_tension(&self, rf: u64, d: u64) -> bool {
        self.circuits.iter().all(|&(p, n)| {
            let pos = (p & !rf) | (n & rf);
            let neg = (n & !rf) | (p & rf);
            (pos & d).count_ones() == (neg & d).count_ones()
        })
    }

    pub(crate) fn is_flow(&self, rf: u64, d: u64) -> bool {
        self.out_ref.iter().zip(&self.in_ref).all(|(&o, &i)| {
            let out = (o & !rf) | (i & rf);
            let inn = (i & !rf) | (o & rf);
            (out & d).count_ones() == (inn & d).count_ones()
        })
    }

    fn equivalent(&self, r: &Orientation, minty_r: &MintyPartition, s: &Orientation, rel: Relation) -> bool {
        let rf = r.flips.0;
        let d = rf ^ s.flips.0;
        match rel {
            Relation::Cut => self.is_tension(rf, d),
            Relation::Eulerian => self.is_flow(rf, d),
            Relation::CutEulerian => {
                self.is_tension(rf, d & minty_r.bond_part.0) && self.is_flow(rf, d & minty_r.circuit_part.0)
            }
        }
    }
}

/// Decides `R ~ S`: the disagreement set, read with `R`'s arrows, must be
/// the support of a 0-1 tension (cut), of a 0-1 flow (Eulerian), or split
/// along `R`'s Minty partition into both (cut-Eulerian).
pub fn equivalent(g: &MultiGraph, r: &Orientation, s: &Orientation, relation: Relation) -> Result<bool> {
    check_pair(g, r, s)?;
    let minty = minty_partition(g, r)?;
    Ok(ZeroOneTester::new(g).equivalent(r, &minty, s, relation))
}

/// `(G, ρ)` is a disjoint union of directed bonds.
pub fn is_locally_directed_cut(g: &MultiGraph, o: &Orientation) -> Result<bool> {
    o.check(g)?;
    Ok(ZeroOneTester::new(g).is_tension(o.flips.0, g.edge_set().0))
}

/// Every vertex of `(G, ρ)` has equal in- and out-degree.
pub fn is_directed_eulerian(g: &MultiGraph, o: &Orientation) -> Result<bool> {
    o.check(g)?;
    Ok(ZeroOneTester::new(g).is_flow(o.flips.0, g.edge_set().0))
}

/// `(G, ρ)` splits into a locally directed cut and a directed Eulerian
/// subgraph.
pub fn is_cut_eulerian(g: &MultiGraph, o: &Orientation) -> Result<bool> {
    let m = minty_partition(g, o)?;
    let t = ZeroOneTester::new(g);
    Ok(t.is_tension(o.flips.0, m.bond_part.0) && t.is_flow(o.flips.0, m.circuit_part.0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub relation: Relation,
    /// Members of each class in lexicographic order; classes ordered by
    /// their first member.
    pub classes: Vec<Vec<Orientation>>,
    /// Lexicographically smallest member of each class.
    pub representatives: Vec<Orientation>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, o: &Orientation) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(o))
    }

    /// Lexicographically largest member of each class.
    pub fn max_representatives(&self) -> Vec<Orientation> {
        self.classes.iter().map(|c| *c.last().unwrap()).collect()
    }
}

pub(crate) fn check_orientation_budget(g: &MultiGraph, budget: &Budget) -> Result<()> {
    if g.edge_count() > budget.max_orientation_edges {
        return Err(Error::BudgetExceeded(format!(
            "{} edges exceeds the orientation sweep limit of {}",
            g.edge_count(),
            budget.max_orientation_edges
        )));
    }
    Ok(())
}

/// Orientations of `g` passing `filter`.
pub fn filtered_orientations(g: &MultiGraph, filter: Filter, budget: &Budget) -> Result<Vec<Orientation>> {
    check_orientation_budget(g, budget)?;
    let mut out = Vec::new();
    for o in Orientation::all(g) {
        let keep = match filter {
            Filter::All => true,
            Filter::Acyclic => classify(g, &o)?.is_acyclic,
            Filter::TotallyCyclic => classify(g, &o)?.is_totally_cyclic,
        };
        if keep {
            out.push(o);
        }
    }
    Ok(out)
}

pub fn enumerate_classes(
    g: &MultiGraph,
    relation: Relation,
    filter: Filter,
    budget: &Budget,
) -> Result<ClassPartition> {
    let set = filtered_orientations(g, filter, budget)?;
    classes_of(g, relation, set, budget)
}

/// Partitions an arbitrary set of orientations of `g` by pairwise closure.
pub fn classes_of(
    g: &MultiGraph,
    relation: Relation,
    mut set: Vec<Orientation>,
    budget: &Budget,
) -> Result<ClassPartition> {
    if g.edge_count() > budget.max_class_edges {
        return Err(Error::BudgetExceeded(format!(
            "{} edges exceeds the equivalence-class limit of {}",
            g.edge_count(),
            budget.max_class_edges
        )));
    }
    for o in &set {
        o.check(g)?;
    }
    set.sort_by_key(Orientation::lex_key);
    set.dedup();
    let tester = ZeroOneTester::new(g);
    let minty = set.iter().map(|o| minty_partition(g, o)).collect::<Result<Vec<_>>>()?;

    let mut uf = UnionFind::new(set.len());
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            if uf.find(i) != uf.find(j) && tester.equivalent(&set[i], &minty[i], &set[j], relation) {
                uf.union(i, j);
            }
        }
    }

    let mut classes: Vec<Vec<Orientation>> = Vec::new();
    let mut slot = vec![usize::MAX; set.len()];
    for (i, &o) in set.iter().enumerate() {
        let root = uf.find(i);
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[root]].push(o);
    }
    let representatives = classes.iter().map(|c| c[0]).collect();
    Ok(ClassPartition { relation, classes, representatives })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p8() -> MultiGraph {
        MultiGraph::new(3, &[(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)]).unwrap()
    }

    fn flips(g: &MultiGraph, ids: &[usize]) -> Orientation {
        Orientation::from_flips(g, EdgeSet::from_ids(ids.iter().copied())).unwrap()
    }

    #[test]
    fn incidence_examples() {
        let g = p8();
        let r = Orientation::reference(&g);
        assert_eq!(incidence_sign(&g, &r, 0, 0).unwrap(), Incidence::Out);
        assert_eq!(incidence_sign(&g, &r, 2, 0).unwrap(), Incidence::In);
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap();
        let s = incidence_sign(&l1, &Orientation::reference(&l1), 0, 0).unwrap();
        assert_eq!(s.signs(), &[1, -1]);
    }

    #[test]
    fn boundary_examples() {
        let g = p8();
        let r = Orientation::reference(&g);
        assert_eq!(boundary(&g, &r, &[0, 1, 0, 0, 0]).unwrap(), vec![1, -1, 0]);
        assert_eq!(boundary(&g, &r, &[-1, 1, 1, 0, 0]).unwrap(), vec![0, 0, 0]);
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap();
        assert_eq!(boundary(&l1, &Orientation::reference(&l1), &[5]).unwrap(), vec![0]);
        assert!(matches!(boundary(&g, &r, &[1]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn flow_and_tension_membership() {
        let g = p8();
        let r = Orientation::reference(&g);
        assert!(is_flow(&g, &r, &[-1, 1, 1, 0, 0], 0).unwrap());
        assert!(!is_flow(&g, &r, &[1, 0, 0, 0, 0], 0).unwrap());
        assert!(is_flow(&g, &r, &[1, 1, 1, 0, 0], 2).unwrap());
        assert!(is_tension(&g, &r, &[2, 1, 1, 1, 1], 0).unwrap());
        assert!(!is_tension(&g, &r, &[1, 1, 1, 1, 1], 0).unwrap());
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap();
        assert!(!is_tension(&l1, &Orientation::reference(&l1), &[1], 0).unwrap());
        // reading in a flipped frame negates the value on the flipped edge
        let s = flips(&g, &[0]);
        assert!(is_tension(&g, &s, &[-2, 1, 1, 1, 1], 0).unwrap());
    }

    #[test]
    fn minty_examples() {
        let g = p8();
        let m = minty_partition(&g, &Orientation::reference(&g)).unwrap();
        assert_eq!(m.circuit_part, EdgeSet::EMPTY);
        let m = minty_partition(&g, &flips(&g, &[3])).unwrap();
        assert_eq!(m.circuit_part, EdgeSet::from_ids([1, 3]));
        assert_eq!(m.bond_part, EdgeSet::from_ids([0, 2, 4]));
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap();
        for o in Orientation::all(&l1) {
            assert_eq!(minty_partition(&l1, &o).unwrap().circuit_part, EdgeSet::singleton(0));
        }
    }

    #[test]
    fn classify_examples() {
        let g = p8();
        assert!(classify(&g, &Orientation::reference(&g)).unwrap().is_acyclic);
        let tc = classify(&g, &flips(&g, &[0, 3, 4])).unwrap();
        assert!(tc.is_totally_cyclic && !tc.is_acyclic);
        let mixed = classify(&g, &flips(&g, &[3])).unwrap();
        assert!(!mixed.is_acyclic && !mixed.is_totally_cyclic);
    }

    #[test]
    fn coupling_and_indicator() {
        let g = p8();
        let r = Orientation::reference(&g);
        assert!(coupling(&g, &r, &r).unwrap().iter().all(|&c| c == 1));
        assert_eq!(indicator(&g, &r, &flips(&g, &[3])).unwrap(), vec![0, 0, 0, 1, 0]);
        let all: Vec<_> = Orientation::all(&g).collect();
        for a in all.iter().step_by(3) {
            for b in all.iter().step_by(5) {
                for c in all.iter().step_by(7) {
                    let ab = coupling(&g, a, b).unwrap();
                    let bc = coupling(&g, b, c).unwrap();
                    let ac = coupling(&g, a, c).unwrap();
                    assert!((0..5).all(|i| ab[i] * bc[i] == ac[i]));
                }
            }
        }
        let k2 = MultiGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(coupling(&g, &r, &Orientation::reference(&k2)), Err(Error::OrientationMismatch));
    }

    #[test]
    fn equivalence_examples() {
        let g = p8();
        let r = Orientation::reference(&g);
        assert!(equivalent(&g, &r, &flips(&g, &[0, 1, 3]), Relation::Cut).unwrap());
        assert!(equivalent(&g, &flips(&g, &[3]), &flips(&g, &[1]), Relation::Eulerian).unwrap());
        for rel in [Relation::Cut, Relation::Eulerian, Relation::CutEulerian] {
            assert!(equivalent(&g, &r, &r, rel).unwrap());
        }
    }

    #[test]
    fn loop_flip_is_eulerian_not_cut() {
        let l1 = MultiGraph::new(1, &[(0, 0)]).unwrap();
        let (a, b) = (Orientation::reference(&l1), flips(&l1, &[0]));
        assert!(equivalent(&l1, &a, &b, Relation::Eulerian).unwrap());
        assert!(equivalent(&l1, &a, &b, Relation::CutEulerian).unwrap());
        assert!(!equivalent(&l1, &a, &b, Relation::Cut).unwrap());
    }

    #[test]
    fn p8_censuses() {
        let g = p8();
        let b = Budget::default();
        let n = |rel, f| enumerate_classes(&g, rel, f, &b).unwrap().len();
        assert_eq!(n(Relation::CutEulerian, Filter::All), 8);
        assert_eq!(n(Relation::Cut, Filter::Acyclic), 2);
        assert_eq!(n(Relation::Eulerian, Filter::TotallyCyclic), 4);
        assert_eq!(n(Relation::Cut, Filter::All), 24);
        assert_eq!(n(Relation::Eulerian, Filter::All), 14);
        assert_eq!(filtered_orientations(&g, Filter::All, &b).unwrap().len(), 32);
        assert_eq!(filtered_orientations(&g, Filter::Acyclic, &b).unwrap().len(), 6);
    }

    #[test]
    fn representatives_are_lexicographic_minima() {
        let g = p8();
        let cp = enumerate_classes(&g, Relation::CutEulerian, Filter::All, &Budget::default()).unwrap();
        for (class, rep) in cp.classes.iter().zip(&cp.representatives) {
            let min = class.iter().map(|o| o.to_string()).min().unwrap();
            assert_eq!(rep.to_string(), min);
        }
        assert_eq!(cp.sizes().iter().sum::<usize>(), 32);
    }

    #[test]
    fn orientation_strings() {
        let g = p8();
        let o = flips(&g, &[0, 3]);
        assert_eq!(o.to_string(), "10010");
        assert_eq!(Orientation::parse(&g, "10010").unwrap(), o);
        assert!(Orientation::parse(&g, "101").is_err());
        assert!(Orientation::parse(&g, "10x10").is_err());
    }

    #[test]
    fn class_budget_is_enforced() {
        let g = p8();
        let tight = Budget { max_class_edges: 4, ..Budget::default() };
        assert!(matches!(enumerate_classes(&g, Relation::Cut, Filter::All, &tight), Err(Error::BudgetExceeded(_))));
    }
}
