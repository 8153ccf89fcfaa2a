//! Pointwise values of the counting functions, by exhaustive enumeration.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, MultiGraph};
use crate::group::GroupShape;
use crate::orientation::{self, Filter, Orientation, Relation};
use crate::tfspace::{self, EdgeBound};
use crate::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    TauMod,
    PhiMod,
    TauInt,
    PhiInt,
    TauLocal,
    PhiLocal,
    TauBarLocal,
    PhiBarLocal,
    TauBarInt,
    PhiBarInt,
    TauBarMod,
    PhiBarMod,
    KappaMod,
    KappaInt,
    KappaLocal,
    KappaBarLocal,
    KappaBarInt,
    KappaBarMod,
}

impl Family {
    pub const ALL: [Family; 18] = [
        Family::TauMod,
        Family::PhiMod,
        Family::TauInt,
        Family::PhiInt,
        Family::TauLocal,
        Family::PhiLocal,
        Family::TauBarLocal,
        Family::PhiBarLocal,
        Family::TauBarInt,
        Family::PhiBarInt,
        Family::TauBarMod,
        Family::PhiBarMod,
        Family::KappaMod,
        Family::KappaInt,
        Family::KappaLocal,
        Family::KappaBarLocal,
        Family::KappaBarInt,
        Family::KappaBarMod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TauMod => "tau_mod",
            Family::PhiMod => "phi_mod",
            Family::TauInt => "tau_int",
            Family::PhiInt => "phi_int",
            Family::TauLocal => "tau_local",
            Family::PhiLocal => "phi_local",
            Family::TauBarLocal => "tau_bar_local",
            Family::PhiBarLocal => "phi_bar_local",
            Family::TauBarInt => "tau_bar_int",
            Family::PhiBarInt => "phi_bar_int",
            Family::TauBarMod => "tau_bar_mod",
            Family::PhiBarMod => "phi_bar_mod",
            Family::KappaMod => "kappa_mod",
            Family::KappaInt => "kappa_int",
            Family::KappaLocal => "kappa_local",
            Family::KappaBarLocal => "kappa_bar_local",
            Family::KappaBarInt => "kappa_bar_int",
            Family::KappaBarMod => "kappa_bar_mod",
        }
    }

    /// Closed-box families, defined for nonnegative arguments.
    pub fn is_bar(self) -> bool {
        matches!(
            self,
            Family::TauBarLocal
                | Family::PhiBarLocal
                | Family::TauBarInt
                | Family::PhiBarInt
                | Family::TauBarMod
                | Family::PhiBarMod
                | Family::KappaBarLocal
                | Family::KappaBarInt
                | Family::KappaBarMod
        )
    }

    /// Families attached to a single orientation.
    pub fn is_local(self) -> bool {
        matches!(
            self,
            Family::TauLocal
                | Family::PhiLocal
                | Family::TauBarLocal
                | Family::PhiBarLocal
                | Family::KappaLocal
                | Family::KappaBarLocal
        )
    }

    pub fn uses_p(self) -> bool {
        !self.name().starts_with("phi")
    }

    pub fn uses_q(self) -> bool {
        !self.name().starts_with("tau")
    }

    /// Modular families are integer combinations of Tutte evaluations;
    /// the integral and local ones are Ehrhart-type and may have
    /// fractional coefficients while taking integer values.
    pub fn has_integer_coefficients(self) -> bool {
        matches!(
            self,
            Family::TauMod
                | Family::PhiMod
                | Family::KappaMod
                | Family::TauBarMod
                | Family::PhiBarMod
                | Family::KappaBarMod
        )
    }

    pub fn is_modular(self) -> bool {
        matches!(self, Family::TauMod | Family::PhiMod | Family::KappaMod)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family `{s}`")))
    }
}

/// One evaluation request. `p` feeds the tension side and `q` the flow side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountQuery {
    pub family: Family,
    pub p: u64,
    pub q: u64,
    /// Required by the local families; ignored otherwise.
    pub orientation: Option<Orientation>,
    /// Tension group for modular families; defaults to `ℤ_p`.
    pub tension_group: Option<GroupShape>,
    /// Flow group for modular families; defaults to `ℤ_q`.
    pub flow_group: Option<GroupShape>,
}

impl CountQuery {
    pub fn new(family: Family, p: u64, q: u64) -> Self {
        CountQuery { family, p, q, orientation: None, tension_group: None, flow_group: None }
    }

    pub fn local(family: Family, orientation: Orientation, p: u64, q: u64) -> Self {
        CountQuery { orientation: Some(orientation), ..Self::new(family, p, q) }
    }

    pub fn with_groups(mut self, tension: Option<GroupShape>, flow: Option<GroupShape>) -> Self {
        self.tension_group = tension;
        self.flow_group = flow;
        self
    }

    fn validate(&self) -> Result<()> {
        let min = if self.family.is_bar() { 0 } else { 1 };
        for (used, name, v) in [(self.family.uses_p(), "p", self.p), (self.family.uses_q(), "q", self.q)] {
            if used && v < min {
                return Err(Error::InvalidArgument(format!("{} needs {name} >= {min}", self.family)));
            }
        }
        if self.family.is_local() && self.orientation.is_none() {
            return Err(Error::InvalidArgument(format!("{} needs an orientation", self.family)));
        }
        for (g, v, name) in [(&self.tension_group, self.p, "tension"), (&self.flow_group, self.q, "flow")] {
            if let Some(g) = g {
                if g.order() != v {
                    return Err(Error::InvalidArgument(format!(
                        "{name} group of order {} does not match argument {v}",
                        g.order()
                    )));
                }
            }
        }
        Ok(())
    }
}

fn overflow() -> Error {
    Error::Internal("count overflows u64".into())
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::InvalidArgument(format!("argument {v} too large")))
}

/// Evaluates a counting function at one point.
pub fn count(g: &MultiGraph, query: &CountQuery, budget: &Budget) -> Result<u64> {
    query.validate()?;
    let (p, q) = (query.p, query.q);
    let shape = |s: &Option<GroupShape>, order| s.clone().map_or_else(|| GroupShape::cyclic(order), Ok);
    let reference = Orientation::reference(g);
    let o = match query.orientation {
        Some(o) => {
            o.check(g)?;
            o
        }
        None => reference,
    };
    let m = g.edge_count();
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    match query.family {
        Family::TauMod => {
            let a = shape(&query.tension_group, p)?;
            let mut n = 0;
            tfspace::visit_modular_tensions(g, &reference, &a, budget, |f| n += f.iter().all(|&x| x != 0) as u64)?;
            Ok(n)
        }
        Family::PhiMod => {
            let b = shape(&query.flow_group, q)?;
            let mut n = 0;
            tfspace::visit_modular_flows(g, &reference, &b, budget, |f| n += f.iter().all(|&x| x != 0) as u64)?;
            Ok(n)
        }
        Family::KappaMod => {
            let a = shape(&query.tension_group, p)?;
            let b = shape(&query.flow_group, q)?;
            let mut kernels: HashMap<u64, u64> = HashMap::new();
            tfspace::visit_modular_tensions(g, &reference, &a, budget, |f| {
                *kernels.entry(tfspace::zero_mask(f)).or_insert(0) += 1
            })?;
            let mut supports: HashMap<u64, u64> = HashMap::new();
            tfspace::visit_modular_flows(g, &reference, &b, budget, |f| {
                *supports.entry(full & !tfspace::zero_mask(f)).or_insert(0) += 1
            })?;
            match_histograms(&kernels, &supports)
        }
        Family::TauInt => {
            let b = vec![EdgeBound::open(-to_i64(p)?, to_i64(p)?).nonzero(); m];
            tfspace::count_integer_tensions_box(g, &reference, &b, budget)
        }
        Family::PhiInt => {
            let b = vec![EdgeBound::open(-to_i64(q)?, to_i64(q)?).nonzero(); m];
            tfspace::count_integer_flows_box(g, &reference, &b, budget)
        }
        Family::KappaInt => {
            let (pi, qi) = (to_i64(p)?, to_i64(q)?);
            let kernels =
                tfspace::integer_zero_histogram(g, &reference, &vec![EdgeBound::open(-pi, pi); m], budget, true)?;
            let zeros =
                tfspace::integer_zero_histogram(g, &reference, &vec![EdgeBound::open(-qi, qi); m], budget, false)?;
            let supports = zeros.into_iter().map(|(z, c)| (full & !z, c)).collect();
            match_histograms(&kernels, &supports)
        }
        Family::TauLocal => local_tensions(g, &o, EdgeBound::open(0, to_i64(p)?), budget),
        Family::PhiLocal => local_flows(g, &o, EdgeBound::open(0, to_i64(q)?), budget),
        Family::TauBarLocal => local_tensions(g, &o, EdgeBound::closed(0, to_i64(p)?), budget),
        Family::PhiBarLocal => local_flows(g, &o, EdgeBound::closed(0, to_i64(q)?), budget),
        Family::KappaLocal => kappa_local(g, &o, p, q, budget),
        Family::KappaBarLocal => kappa_bar_local(g, &o, p, q, budget),
        Family::TauBarInt => sum_over(g, Filter::Acyclic, false, budget, |o| {
            local_tensions(g, o, EdgeBound::closed(0, to_i64(p)?), budget)
        }),
        Family::PhiBarInt => sum_over(g, Filter::TotallyCyclic, false, budget, |o| {
            local_flows(g, o, EdgeBound::closed(0, to_i64(q)?), budget)
        }),
        Family::TauBarMod => sum_over(g, Filter::Acyclic, true, budget, |o| {
            local_tensions(g, o, EdgeBound::closed(0, to_i64(p)?), budget)
        }),
        Family::PhiBarMod => sum_over(g, Filter::TotallyCyclic, true, budget, |o| {
            local_flows(g, o, EdgeBound::closed(0, to_i64(q)?), budget)
        }),
        Family::KappaBarInt => sum_over(g, Filter::All, false, budget, |o| kappa_bar_local(g, o, p, q, budget)),
        Family::KappaBarMod => sum_over(g, Filter::All, true, budget, |o| kappa_bar_local(g, o, p, q, budget)),
    }
}

/// `Σ_m a[m]·b[m]`: pairs whose tension kernel equals the flow support.
fn match_histograms(kernels: &HashMap<u64, u64>, supports: &HashMap<u64, u64>) -> Result<u64> {
    let mut total = 0u64;
    for (mask, &a) in kernels {
        if let Some(&b) = supports.get(mask) {
            total = a.checked_mul(b).and_then(|x| total.checked_add(x)).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

fn local_tensions(g: &MultiGraph, o: &Orientation, bound: EdgeBound, budget: &Budget) -> Result<u64> {
    tfspace::count_integer_tensions_box(g, o, &vec![bound; g.edge_count()], budget)
}

fn local_flows(g: &MultiGraph, o: &Orientation, bound: EdgeBound, budget: &Budget) -> Result<u64> {
    tfspace::count_integer_flows_box(g, o, &vec![bound; g.edge_count()], budget)
}

/// Sums `f` over the orientations passing `filter`, or over the canonical
/// cut-Eulerian class representatives among them.
fn sum_over(
    g: &MultiGraph,
    filter: Filter,
    representatives: bool,
    budget: &Budget,
    f: impl Fn(&Orientation) -> Result<u64>,
) -> Result<u64> {
    let set = if representatives {
        orientation::enumerate_classes(g, Relation::CutEulerian, filter, budget)?.representatives
    } else {
        orientation::filtered_orientations(g, filter, budget)?
    };
    sum_values(set.iter().map(f))
}

pub(crate) fn sum_values(values: impl Iterator<Item = Result<u64>>) -> Result<u64> {
    let mut total = 0u64;
    for v in values {
        total = total.checked_add(v?).ok_or_else(overflow)?;
    }
    Ok(total)
}

/// Pairs `(f, g)` of `(G, ρ)` with `0 ≤ f ≤ p`, `0 ≤ g ≤ q`. Nonnegativity
/// already forces `f = 0` on the circuit part and `g = 0` on the bond part,
/// so every such pair is complementary off the zero entries and the count
/// factors.
fn kappa_bar_local(g: &MultiGraph, o: &Orientation, p: u64, q: u64, budget: &Budget) -> Result<u64> {
    let t = local_tensions(g, o, EdgeBound::closed(0, to_i64(p)?), budget)?;
    let f = local_flows(g, o, EdgeBound::closed(0, to_i64(q)?), budget)?;
    t.checked_mul(f).ok_or_else(overflow)
}

/// Complementary pairs of `(G, ρ)` with `0 < f < p` on the bond part and
/// `0 < g < q` on the circuit part, counted directly and again as the
/// product over `G/C_ρ` and `G|C_ρ`.
fn kappa_local(g: &MultiGraph, o: &Orientation, p: u64, q: u64, budget: &Budget) -> Result<u64> {
    let (pi, qi) = (to_i64(p)?, to_i64(q)?);
    let minty = orientation::minty_partition(g, o)?;
    let c = minty.circuit_part;
    let on = |set: EdgeSet, inside: EdgeBound| -> Vec<EdgeBound> {
        g.edges().iter().map(|e| if set.contains(e.id) { inside } else { EdgeBound::zero() }).collect()
    };
    let t = tfspace::count_integer_tensions_box(g, o, &on(minty.bond_part, EdgeBound::open(0, pi)), budget)?;
    let f = tfspace::count_integer_flows_box(g, o, &on(c, EdgeBound::open(0, qi)), budget)?;
    let direct = t.checked_mul(f).ok_or_else(overflow)?;

    let contracted = g.contract(c)?;
    let restricted = g.restrict(c)?;
    let t2 = local_tensions(&contracted, &o.on_minor(&contracted)?, EdgeBound::open(0, pi), budget)?;
    let f2 = local_flows(&restricted, &o.on_minor(&restricted)?, EdgeBound::open(0, qi), budget)?;
    let product = t2.checked_mul(f2).ok_or_else(overflow)?;
    if direct != product {
        return Err(Error::Internal(format!(
            "local product decomposition failed for orientation {o}: {direct} != {product}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p8() -> MultiGraph {
        MultiGraph::new(3, &[(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)]).unwrap()
    }

    fn at(g: &MultiGraph, family: Family, p: u64, q: u64) -> u64 {
        count(g, &CountQuery::new(family, p, q), &Budget::default()).unwrap()
    }

    #[test]
    fn example_values() {
        let g = p8();
        assert_eq!(at(&g, Family::KappaMod, 3, 3), 12);
        assert_eq!(at(&g, Family::KappaMod, 2, 2), 2);
        assert_eq!(at(&g, Family::KappaInt, 2, 2), 8);
        assert_eq!(at(&g, Family::PhiMod, 1, 3), 2);
        assert_eq!(at(&g, Family::KappaBarInt, 0, 0), 32);
        let c3 = MultiGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(at(&c3, Family::TauMod, 3, 1), 2);
    }

    #[test]
    fn kappa_bar_local_at_origin() {
        let g = p8();
        for o in Orientation::all(&g) {
            let q = CountQuery::local(Family::KappaBarLocal, o, 0, 0);
            assert_eq!(count(&g, &q, &Budget::default()).unwrap(), 1);
        }
    }

    #[test]
    fn argument_validation() {
        let g = p8();
        let b = Budget::default();
        assert!(count(&g, &CountQuery::new(Family::KappaMod, 0, 2), &b).is_err());
        assert!(count(&g, &CountQuery::new(Family::KappaBarMod, 0, 0), &b).is_ok());
        assert!(count(&g, &CountQuery::new(Family::TauLocal, 2, 1), &b).is_err());
        let wrong = CountQuery::new(Family::KappaMod, 4, 2).with_groups(Some("2,3".parse().unwrap()), None);
        assert!(count(&g, &wrong, &b).is_err());
    }

    #[test]
    fn klein_group_matches_cyclic() {
        let g = p8();
        let b = Budget::default();
        let v4: GroupShape = "2,2".parse().unwrap();
        for q in 1..=4 {
            let cyc = count(&g, &CountQuery::new(Family::KappaMod, 4, q), &b).unwrap();
            let prod =
                count(&g, &CountQuery::new(Family::KappaMod, 4, q).with_groups(Some(v4.clone()), None), &b).unwrap();
            assert_eq!(cyc, prod);
        }
    }

    #[test]
    fn family_names_roundtrip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("kappa".parse::<Family>().is_err());
    }
}
