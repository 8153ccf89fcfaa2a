//! Tensions, flows and tension-flow pairs: membership, enumeration over
//! finite abelian groups and over integer boxes, and the reorientation maps.
//!
//! Every vector is read in the frame of an [`Orientation`]: its value on an
//! edge is measured along the arrow that orientation gives the edge.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, MultiGraph};
use crate::group::GroupShape;
use crate::lattice::{Dependent, Interval, LatticeBox};
use crate::orientation::{self, Orientation};
use crate::Budget;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    Integer,
    Group(GroupShape),
}

/// Edge-indexed values, positionally aligned with `MultiGraph::edges`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeVector {
    pub values: Vec<i64>,
    pub domain: Domain,
}

impl EdgeVector {
    pub fn integer(values: Vec<i64>) -> Self {
        EdgeVector { values, domain: Domain::Integer }
    }

    pub fn modular(values: Vec<i64>, shape: GroupShape) -> Result<Self> {
        let order = shape.order() as i64;
        if values.iter().any(|&v| !(0..order).contains(&v)) {
            return Err(Error::InvalidArgument(format!("group element out of range for order {order}")));
        }
        Ok(EdgeVector { values, domain: Domain::Group(shape) })
    }

    pub fn zero(len: usize) -> Self {
        Self::integer(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Edges carrying a non-identity value.
    pub fn support(&self, g: &MultiGraph) -> Result<EdgeSet> {
        self.check_len(g)?;
        Ok(EdgeSet::from_ids(g.edges().iter().zip(&self.values).filter(|(_, &v)| v != 0).map(|(e, _)| e.id)))
    }

    /// Edges carrying the identity.
    pub fn kernel(&self, g: &MultiGraph) -> Result<EdgeSet> {
        Ok(g.edge_set().minus(self.support(g)?))
    }

    fn check_len(&self, g: &MultiGraph) -> Result<()> {
        if self.values.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: g.edge_count(), got: self.values.len() })
        }
    }

    /// One integer vector per cyclic factor, holding that coordinate.
    fn components(&self) -> Vec<(Vec<i64>, u64)> {
        match &self.domain {
            Domain::Integer => vec![(self.values.clone(), 0)],
            Domain::Group(shape) => {
                let digits: Vec<Vec<u64>> = self.values.iter().map(|&v| shape.decode(v as u64)).collect();
                shape
                    .moduli()
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (digits.iter().map(|d| d[i] as i64).collect(), m))
                    .collect()
            }
        }
    }

    pub fn is_tension(&self, g: &MultiGraph, o: &Orientation) -> Result<bool> {
        self.check_len(g)?;
        for (v, m) in self.components() {
            if !orientation::is_tension(g, o, &v, m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_flow(&self, g: &MultiGraph, o: &Orientation) -> Result<bool> {
        self.check_len(g)?;
        for (v, m) in self.components() {
            if !orientation::is_flow(g, o, &v, m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A tension `f` and a flow `g` of the same digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensionFlowPair {
    pub f: EdgeVector,
    pub g: EdgeVector,
    pub orientation: Orientation,
}

impl TensionFlowPair {
    pub fn new(graph: &MultiGraph, orientation: Orientation, f: EdgeVector, g: EdgeVector) -> Result<Self> {
        if !f.is_tension(graph, &orientation)? {
            return Err(Error::InvalidArgument("first component is not a tension".into()));
        }
        if !g.is_flow(graph, &orientation)? {
            return Err(Error::InvalidArgument("second component is not a flow".into()));
        }
        Ok(TensionFlowPair { f, g, orientation })
    }

    /// `ker f = supp g`: on every edge exactly one of the two vanishes.
    pub fn is_complementary(&self) -> bool {
        self.f.values.iter().zip(&self.g.values).all(|(&a, &b)| (a == 0) != (b == 0))
    }
}

/// Integer bounds on a single edge value, inclusive at both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeBound {
    pub lower: i64,
    pub upper: i64,
    pub nonzero: bool,
}

impl EdgeBound {
    pub fn closed(lower: i64, upper: i64) -> Self {
        EdgeBound { lower, upper, nonzero: false }
    }

    /// `lower < x < upper`.
    pub fn open(lower: i64, upper: i64) -> Self {
        EdgeBound { lower: lower + 1, upper: upper - 1, nonzero: false }
    }

    pub fn nonzero(self) -> Self {
        EdgeBound { nonzero: true, ..self }
    }

    pub fn zero() -> Self {
        Self::closed(0, 0)
    }

    fn interval(self) -> Interval {
        Interval { lo: self.lower, hi: self.upper, nonzero: self.nonzero }
    }
}

/// Fundamental circuits of `g` with signs taken in the frame of `o`.
pub(crate) struct Frame {
    edges: usize,
    forest: Vec<usize>,
    /// `(position of the non-forest edge, other terms (position, sign))`,
    /// signs normalised so the non-forest edge itself has sign `+1`.
    circuits: Vec<(usize, Vec<(usize, i64)>)>,
}

impl Frame {
    pub(crate) fn new(g: &MultiGraph, o: &Orientation) -> Result<Self> {
        o.check(g)?;
        let fd = g.spanning_structure();
        let pos = |id| g.position(id).unwrap();
        let forest = fd.forest_edges.iter().map(pos).collect();
        let circuits = fd
            .fundamental_circuits
            .iter()
            .map(|c| {
                let own = o.sign(c.edge);
                let rest = c.terms.iter().skip(1).map(|&(id, s)| (pos(id), own * s as i64 * o.sign(id))).collect();
                (pos(c.edge), rest)
            })
            .collect();
        Ok(Frame { edges: g.edge_count(), forest, circuits })
    }

    /// Tensions: forest values are free; each other edge's value is minus
    /// the signed sum over the rest of its circuit.
    fn tension_box(&self, bounds: &[EdgeBound]) -> (LatticeBox, Vec<usize>) {
        let mut slot = vec![usize::MAX; self.edges];
        for (i, &p) in self.forest.iter().enumerate() {
            slot[p] = i;
        }
        let free = self.forest.iter().map(|&p| bounds[p].interval()).collect();
        let deps = self
            .circuits
            .iter()
            .map(|(p, rest)| Dependent {
                terms: rest.iter().map(|&(q, s)| (slot[q], -s)).collect(),
                range: bounds[*p].interval(),
            })
            .collect();
        let order = self.forest.iter().copied().chain(self.circuits.iter().map(|c| c.0)).collect();
        (LatticeBox { free, deps }, order)
    }

    /// Flows: non-forest values are free; a forest edge carries the signed
    /// sum of the circuits through it.
    fn flow_box(&self, bounds: &[EdgeBound]) -> (LatticeBox, Vec<usize>) {
        let mut slot = vec![usize::MAX; self.edges];
        for (i, &p) in self.forest.iter().enumerate() {
            slot[p] = i;
        }
        let mut terms = vec![Vec::new(); self.forest.len()];
        for (k, (_, rest)) in self.circuits.iter().enumerate() {
            for &(q, s) in rest {
                terms[slot[q]].push((k, s));
            }
        }
        let free = self.circuits.iter().map(|c| bounds[c.0].interval()).collect();
        let deps = terms
            .into_iter()
            .zip(&self.forest)
            .map(|(terms, &p)| Dependent { terms, range: bounds[p].interval() })
            .collect();
        let order = self.circuits.iter().map(|c| c.0).chain(self.forest.iter().copied()).collect();
        (LatticeBox { free, deps }, order)
    }
}

fn check_bounds(g: &MultiGraph, bounds: &[EdgeBound]) -> Result<()> {
    if bounds.len() == g.edge_count() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: g.edge_count(), got: bounds.len() })
    }
}

fn boxed(
    g: &MultiGraph,
    o: &Orientation,
    bounds: &[EdgeBound],
    budget: &Budget,
    tensions: bool,
) -> Result<(LatticeBox, Vec<usize>)> {
    check_bounds(g, bounds)?;
    let frame = Frame::new(g, o)?;
    let (b, order) = if tensions { frame.tension_box(bounds) } else { frame.flow_box(bounds) };
    b.check_budget(budget.max_candidates)?;
    Ok((b, order))
}

fn collect(b: &LatticeBox, order: &[usize]) -> Vec<EdgeVector> {
    let mut out = Vec::new();
    b.for_each(|free, deps| {
        let mut v = vec![0i64; order.len()];
        for (&p, &x) in order.iter().zip(free.iter().chain(deps)) {
            v[p] = x;
        }
        out.push(EdgeVector::integer(v));
    });
    out
}

/// Integer tensions of `(g, o)` within per-edge bounds.
pub fn enum_integer_tensions_box(
    g: &MultiGraph,
    o: &Orientation,
    bounds: &[EdgeBound],
    budget: &Budget,
) -> Result<Vec<EdgeVector>> {
    let (b, order) = boxed(g, o, bounds, budget, true)?;
    Ok(collect(&b, &order))
}

/// Integer flows of `(g, o)` within per-edge bounds.
pub fn enum_integer_flows_box(
    g: &MultiGraph,
    o: &Orientation,
    bounds: &[EdgeBound],
    budget: &Budget,
) -> Result<Vec<EdgeVector>> {
    let (b, order) = boxed(g, o, bounds, budget, false)?;
    Ok(collect(&b, &order))
}

pub fn count_integer_tensions_box(
    g: &MultiGraph,
    o: &Orientation,
    bounds: &[EdgeBound],
    budget: &Budget,
) -> Result<u64> {
    Ok(boxed(g, o, bounds, budget, true)?.0.count())
}

pub fn count_integer_flows_box(g: &MultiGraph, o: &Orientation, bounds: &[EdgeBound], budget: &Budget) -> Result<u64> {
    Ok(boxed(g, o, bounds, budget, false)?.0.count())
}

/// Histogram of zero-sets (as position masks) over the lattice points of a
/// tension or flow box.
pub(crate) fn integer_zero_histogram(
    g: &MultiGraph,
    o: &Orientation,
    bounds: &[EdgeBound],
    budget: &Budget,
    tensions: bool,
) -> Result<HashMap<u64, u64>> {
    let (b, order) = boxed(g, o, bounds, budget, tensions)?;
    let mut hist = HashMap::new();
    b.for_each(|free, deps| {
        let mut mask = 0u64;
        for (&p, &x) in order.iter().zip(free.iter().chain(deps)) {
            if x == 0 {
                mask |= 1 << p;
            }
        }
        *hist.entry(mask).or_insert(0) += 1;
    });
    Ok(hist)
}

fn power_budget(base: u64, exp: usize, budget: &Budget) -> Result<()> {
    let total = (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
    if total > budget.max_candidates as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{base}^{exp} group assignments exceeds the limit of {}",
            budget.max_candidates
        )));
    }
    Ok(())
}

/// Steps a mixed-radix counter of `digits.len()` digits in base `base`;
/// returns false after the last state.
fn odometer(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Calls `visit` with every `A`-tension of `(g, o)`, as encoded group
/// elements. Each tension is the coboundary of a unique potential vanishing
/// on the smallest vertex of every component.
pub(crate) fn visit_modular_tensions(
    g: &MultiGraph,
    o: &Orientation,
    shape: &GroupShape,
    budget: &Budget,
    mut visit: impl FnMut(&[u32]),
) -> Result<()> {
    o.check(g)?;
    let stats = g.stats();
    power_budget(shape.order(), stats.rank, budget)?;
    let t = shape.tables();
    let mut uf = crate::graph::UnionFind::new(g.vertex_count());
    for e in g.edges() {
        uf.union(e.tail, e.head);
    }
    let free: Vec<usize> = (0..g.vertex_count()).filter(|&v| uf.find(v) != v).collect();
    let arcs: Vec<(usize, usize)> = g.edges().iter().map(|e| o.arc(e)).collect();
    let mut digits = vec![0u32; free.len()];
    let mut h = vec![0u32; g.vertex_count()];
    let mut f = vec![0u32; arcs.len()];
    loop {
        for (&v, &d) in free.iter().zip(&digits) {
            h[v] = d;
        }
        for (x, &(tail, head)) in f.iter_mut().zip(&arcs) {
            *x = t.sub(h[head], h[tail]);
        }
        visit(&f);
        if !odometer(&mut digits, t.order as u32) {
            return Ok(());
        }
    }
}

/// Calls `visit` with every `B`-flow of `(g, o)`.
pub(crate) fn visit_modular_flows(
    g: &MultiGraph,
    o: &Orientation,
    shape: &GroupShape,
    budget: &Budget,
    mut visit: impl FnMut(&[u32]),
) -> Result<()> {
    let frame = Frame::new(g, o)?;
    power_budget(shape.order(), frame.circuits.len(), budget)?;
    let t = shape.tables();
    let mut digits = vec![0u32; frame.circuits.len()];
    let mut v = vec![0u32; frame.edges];
    loop {
        for &p in &frame.forest {
            v[p] = 0;
        }
        for ((p, rest), &d) in frame.circuits.iter().zip(&digits) {
            v[*p] = d;
            for &(q, s) in rest {
                v[q] = t.add(v[q], t.signed(s as i8, d));
            }
        }
        visit(&v);
        if !odometer(&mut digits, t.order as u32) {
            return Ok(());
        }
    }
}

fn collect_modular(
    shape: &GroupShape,
    visit: impl FnOnce(&mut dyn FnMut(&[u32])) -> Result<()>,
) -> Result<Vec<EdgeVector>> {
    let mut out = Vec::new();
    visit(&mut |v: &[u32]| {
        out.push(EdgeVector { values: v.iter().map(|&x| x as i64).collect(), domain: Domain::Group(shape.clone()) })
    })?;
    Ok(out)
}

pub fn enum_modular_tensions(
    g: &MultiGraph,
    o: &Orientation,
    shape: &GroupShape,
    budget: &Budget,
) -> Result<Vec<EdgeVector>> {
    collect_modular(shape, |f| visit_modular_tensions(g, o, shape, budget, f))
}

pub fn enum_modular_flows(
    g: &MultiGraph,
    o: &Orientation,
    shape: &GroupShape,
    budget: &Budget,
) -> Result<Vec<EdgeVector>> {
    collect_modular(shape, |f| visit_modular_flows(g, o, shape, budget, f))
}

/// Position mask of the identity entries of a group-valued vector.
pub(crate) fn zero_mask(v: &[u32]) -> u64 {
    v.iter().enumerate().filter(|(_, &x)| x == 0).fold(0, |m, (i, _)| m | 1 << i)
}

/// Reduces an integer tension-flow pair to `ℤ_p × ℤ_q`.
pub fn mod_map(pair: &TensionFlowPair, p: u64, q: u64) -> Result<TensionFlowPair> {
    if pair.f.domain != Domain::Integer || pair.g.domain != Domain::Integer {
        return Err(Error::InvalidArgument("mod_map expects an integer pair".into()));
    }
    let a = GroupShape::cyclic(p)?;
    let b = GroupShape::cyclic(q)?;
    let reduce = |v: &EdgeVector, s: &GroupShape| EdgeVector {
        values: v.values.iter().map(|&x| s.reduce(x) as i64).collect(),
        domain: Domain::Group(s.clone()),
    };
    Ok(TensionFlowPair { f: reduce(&pair.f, &a), g: reduce(&pair.g, &b), orientation: pair.orientation })
}

/// `P_{R,S}`: multiplies by the coupling `[R, S]`, carrying vectors of
/// `(G, S)` to vectors of `(G, R)`.
pub fn reorient_p(g: &MultiGraph, r: &Orientation, s: &Orientation, v: &EdgeVector) -> Result<EdgeVector> {
    let c = orientation::coupling(g, r, s)?;
    if v.values.len() != c.len() {
        return Err(Error::DimensionMismatch { expected: c.len(), got: v.values.len() });
    }
    let values = match &v.domain {
        Domain::Integer => v.values.iter().zip(&c).map(|(&x, &k)| x * k as i64).collect(),
        Domain::Group(shape) => {
            v.values.iter().zip(&c).map(|(&x, &k)| if k < 0 { shape.neg(x as u64) as i64 } else { x }).collect()
        }
    };
    Ok(EdgeVector { values, domain: v.domain.clone() })
}

/// `Q^p_{R,S,X}`: replaces `v(e)` by `p - v(e)` on the edges of `subset`
/// where `R` and `S` disagree.
pub fn reorient_q(
    g: &MultiGraph,
    r: &Orientation,
    s: &Orientation,
    subset: EdgeSet,
    bound: i64,
    v: &EdgeVector,
) -> Result<EdgeVector> {
    let c = orientation::coupling(g, r, s)?;
    if v.values.len() != c.len() {
        return Err(Error::DimensionMismatch { expected: c.len(), got: v.values.len() });
    }
    if v.domain != Domain::Integer || v.values.iter().any(|&x| x < 0 || x > bound) {
        return Err(Error::InvalidArgument(format!("values must lie in [0, {bound}]")));
    }
    let values = g
        .edges()
        .iter()
        .zip(&v.values)
        .zip(&c)
        .map(|((e, &x), &k)| if k < 0 && subset.contains(e.id) { bound - x } else { x })
        .collect();
    Ok(EdgeVector::integer(values))
}
