//! Identity checks on one graph, and the sweep over all small multigraphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;

use num::{BigInt, BigRational, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::count::{count, CountQuery, Family};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, MultiGraph};
use crate::group::GroupShape;
use crate::orientation::{self, ClassPartition, Filter, MintyPartition, Orientation, Relation};
use crate::poly::BivariatePolynomial as Poly;
use crate::polys::{counting_polynomial, local_polynomial};
use crate::tfspace;
use crate::tutte::{rank_generating, tutte};
use crate::Budget;

type EdgeList = Vec<(usize, usize)>;
type MinorKey = (Family, usize, EdgeList);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityEntry {
    pub id: String,
    pub tag: String,
    pub status: Status,
    /// Counterexample data for a failure.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IdentityReport {
    pub entries: Vec<IdentityEntry>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&IdentityEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            writeln!(f, "{:<4} {:<5} {}", e.id, status, e.tag)?;
            if let Some(w) = &e.witness {
                writeln!(f, "           {w}")?;
            }
        }
        Ok(())
    }
}

/// Identity ids and tags, in report order.
pub const IDENTITIES: [(&str, &str); 16] = [
    ("T1b", "integral decomposition over all orientations"),
    ("T1c", "integral reciprocity laws"),
    ("T1d", "integral specializations"),
    ("T1e", "integral convolution formulas"),
    ("T2b", "modular decomposition over cut-Eulerian classes"),
    ("T2c", "modular reciprocity laws"),
    ("T2d", "modular specializations"),
    ("T2e", "modular convolution formulas"),
    ("PL", "local product decomposition, reciprocity and specializations"),
    ("T3", "dual modular polynomial equals rank generating polynomial; triple counts"),
    ("PE", "class sizes: ce = cu * eu = local dual value at (1,1)"),
    ("RPQ", "rank generating polynomial as sums over modular tension-flows"),
    ("IM", "integral-modular relations"),
    ("CS", "special values and orientation censuses"),
    ("TC", "Tutte convolution over edge subsets"),
    ("IND", "independence of reference orientation and class representatives"),
];

/// `None` on success, or a witness describing the failure.
type Check = Result<Option<String>>;

fn poly_eq(what: &str, lhs: &Poly, rhs: &Poly) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs} != {rhs}"))
}

fn int_eq(what: &str, lhs: &BigInt, rhs: &BigInt) -> Option<String> {
    (lhs != rhs).then(|| format!("{what}: {lhs} != {rhs}"))
}

fn first_failure(checks: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    checks.into_iter().flatten().next()
}

fn sign(exp: usize) -> BigRational {
    BigRational::from_integer(if exp.is_multiple_of(2) { 1.into() } else { (-1).into() })
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

/// Integer value of a polynomial at an integer point.
fn at(p: &Poly, x: i64, y: i64) -> Result<BigInt> {
    p.evaluate_integer(x, y)
}

fn neg(p: &Poly) -> Poly {
    p.substitute(-1, 0, -1, 0)
}

struct LocalData {
    o: Orientation,
    minty: MintyPartition,
    kappa: Poly,
    kappa_bar: Poly,
    tau: Poly,
    phi: Poly,
    tau_bar: Poly,
    phi_bar: Poly,
}

/// Everything the checks share, computed once.
struct Context<'a> {
    g: &'a MultiGraph,
    budget: &'a Budget,
    rank: usize,
    kz: Poly,
    kzb: Poly,
    k: Poly,
    kb: Poly,
    tz: Poly,
    pz: Poly,
    tau: Poly,
    phi: Poly,
    tzb: Poly,
    pzb: Poly,
    taub: Poly,
    phib: Poly,
    tutte: Poly,
    rank_gen: Poly,
    locals: Vec<LocalData>,
    ce: ClassPartition,
    cu: ClassPartition,
    eu: ClassPartition,
    /// Graph-level polynomials of minors, keyed by family and edge list.
    cache: Mutex<HashMap<MinorKey, Poly>>,
}

impl<'a> Context<'a> {
    fn new(g: &'a MultiGraph, budget: &'a Budget) -> Result<Self> {
        orientation::check_orientation_budget(g, budget)?;
        let f = |family| counting_polynomial(g, family, budget);
        let locals = Orientation::all(g)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|o| {
                let l = |family| local_polynomial(g, &o, family, budget);
                Ok(LocalData {
                    o,
                    minty: orientation::minty_partition(g, &o)?,
                    kappa: l(Family::KappaLocal)?,
                    kappa_bar: l(Family::KappaBarLocal)?,
                    tau: l(Family::TauLocal)?,
                    phi: l(Family::PhiLocal)?,
                    tau_bar: l(Family::TauBarLocal)?,
                    phi_bar: l(Family::PhiBarLocal)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let classes = |rel| orientation::enumerate_classes(g, rel, Filter::All, budget);
        Ok(Context {
            g,
            budget,
            rank: g.stats().rank,
            kz: f(Family::KappaInt)?,
            kzb: f(Family::KappaBarInt)?,
            k: f(Family::KappaMod)?,
            kb: f(Family::KappaBarMod)?,
            tz: f(Family::TauInt)?,
            pz: f(Family::PhiInt)?,
            tau: f(Family::TauMod)?,
            phi: f(Family::PhiMod)?,
            tzb: f(Family::TauBarInt)?,
            pzb: f(Family::PhiBarInt)?,
            taub: f(Family::TauBarMod)?,
            phib: f(Family::PhiBarMod)?,
            tutte: tutte(g),
            rank_gen: rank_generating(g, budget)?,
            locals,
            ce: classes(Relation::CutEulerian)?,
            cu: classes(Relation::Cut)?,
            eu: classes(Relation::Eulerian)?,
            cache: Mutex::new(HashMap::new()),
        })
    }

    fn local(&self, o: &Orientation) -> &LocalData {
        self.locals.iter().find(|l| l.o == *o).expect("every orientation has local data")
    }

    fn minor_poly(&self, h: &MultiGraph, family: Family) -> Result<Poly> {
        let key = (family, h.vertex_count(), h.edges().iter().map(|e| (e.tail, e.head)).collect());
        if let Some(p) = self.cache.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let p = counting_polynomial(h, family, self.budget)?;
        self.cache.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }

    fn reciprocity_sign(&self, l: &LocalData) -> BigRational {
        sign(self.rank + l.minty.circuit_part.len())
    }

    /// `Σ_X A(G/X, x)·B(G|X, y)`.
    fn convolution(&self, tension: Family, flow: Family) -> Result<Poly> {
        let mut total = Poly::zero();
        for x in self.g.edge_set().subsets() {
            let a = self.minor_poly(&self.g.contract(x)?, tension)?;
            let b = self.minor_poly(&self.g.restrict(x)?, flow)?;
            total = &total + &(&a * &b);
        }
        Ok(total)
    }

    fn sum_locals<'b>(&self, set: impl Iterator<Item = &'b Orientation>, pick: impl Fn(&LocalData) -> Poly) -> Poly {
        set.map(|o| pick(self.local(o))).sum()
    }

    fn t1b(&self) -> Check {
        let all = self.locals.iter().map(|l| &l.o);
        let kz = self.sum_locals(all.clone(), |l| l.kappa.clone());
        let kzb = self.sum_locals(all, |l| l.kappa_bar.clone());
        Ok(first_failure([
            poly_eq("kappa_int vs sum of local kappa", &self.kz, &kz),
            poly_eq("kappa_bar_int vs sum of local kappa_bar", &self.kzb, &kzb),
        ]))
    }

    fn signed_sums<'b>(&self, set: impl Iterator<Item = &'b Orientation> + Clone) -> (Poly, Poly) {
        let a = self.sum_locals(set.clone(), |l| l.kappa_bar.scale(&self.reciprocity_sign(l)));
        let b = self.sum_locals(set, |l| l.kappa.scale(&self.reciprocity_sign(l)));
        (a, b)
    }

    fn t1c(&self) -> Check {
        let (a, b) = self.signed_sums(self.locals.iter().map(|l| &l.o));
        Ok(first_failure([
            poly_eq("kappa_int(-x,-y) vs signed sum of local kappa_bar", &neg(&self.kz), &a),
            poly_eq("kappa_bar_int(-x,-y) vs signed sum of local kappa", &neg(&self.kzb), &b),
        ]))
    }

    fn specializations(
        kappa: &Poly,
        kappa_bar: &Poly,
        tau: &Poly,
        phi: &Poly,
        tau_bar: &Poly,
        phi_bar: &Poly,
    ) -> Option<String> {
        first_failure([
            poly_eq("kappa(x,1) vs tau", &kappa.at_y(1), tau),
            poly_eq("kappa(1,y) vs phi", &kappa.at_x(1), phi),
            poly_eq("kappa_bar(x,-1) vs tau_bar", &kappa_bar.at_y(-1), tau_bar),
            poly_eq("kappa_bar(-1,y) vs phi_bar", &kappa_bar.at_x(-1), phi_bar),
        ])
    }

    fn t1d(&self) -> Check {
        Ok(Self::specializations(&self.kz, &self.kzb, &self.tz, &self.pz, &self.tzb, &self.pzb))
    }

    fn t1e(&self) -> Check {
        let a = self.convolution(Family::TauInt, Family::PhiInt)?;
        let b = self.convolution(Family::TauBarInt, Family::PhiBarInt)?;
        Ok(first_failure([
            poly_eq("kappa_int vs convolution", &self.kz, &a),
            poly_eq("kappa_bar_int vs convolution", &self.kzb, &b),
        ]))
    }

    fn t2b(&self) -> Check {
        let reps = self.ce.representatives.iter();
        let k = self.sum_locals(reps.clone(), |l| l.kappa.clone());
        let kb = self.sum_locals(reps, |l| l.kappa_bar.clone());
        Ok(first_failure([
            poly_eq("kappa_mod vs sum over class representatives", &self.k, &k),
            poly_eq("kappa_bar_mod vs sum over class representatives", &self.kb, &kb),
        ]))
    }

    fn t2c(&self) -> Check {
        let (a, b) = self.signed_sums(self.ce.representatives.iter());
        Ok(first_failure([
            poly_eq("kappa_mod(-x,-y) vs signed sum of local kappa_bar", &neg(&self.k), &a),
            poly_eq("kappa_bar_mod(-x,-y) vs signed sum of local kappa", &neg(&self.kb), &b),
        ]))
    }

    fn t2d(&self) -> Check {
        Ok(Self::specializations(&self.k, &self.kb, &self.tau, &self.phi, &self.taub, &self.phib))
    }

    fn t2e(&self) -> Check {
        let a = self.convolution(Family::TauMod, Family::PhiMod)?;
        let b = self.convolution(Family::TauBarMod, Family::PhiBarMod)?;
        Ok(first_failure([
            poly_eq("kappa_mod vs convolution", &self.k, &a),
            poly_eq("kappa_bar_mod vs convolution", &self.kb, &b),
        ]))
    }

    /// Bar specializations carry the indicator of acyclicity (resp. total
    /// cyclicity) where the open ones carry a sign.
    fn pl(&self) -> Check {
        for l in &self.locals {
            let c = l.minty.circuit_part;
            let contracted = self.g.contract(c)?;
            let restricted = self.g.restrict(c)?;
            let oc = l.o.on_minor(&contracted)?;
            let or = l.o.on_minor(&restricted)?;
            let tau_c = local_polynomial(&contracted, &oc, Family::TauLocal, self.budget)?;
            let phi_r = local_polynomial(&restricted, &or, Family::PhiLocal, self.budget)?;
            let taub_c = local_polynomial(&contracted, &oc, Family::TauBarLocal, self.budget)?;
            let phib_r = local_polynomial(&restricted, &or, Family::PhiBarLocal, self.budget)?;
            let indicator = |b: bool| if b { l.tau_bar.clone() } else { Poly::zero() };
            let indicator_phi = |b: bool| if b { l.phi_bar.clone() } else { Poly::zero() };
            let failure = first_failure([
                poly_eq("kappa_local vs product over minors", &l.kappa, &(&tau_c * &phi_r)),
                poly_eq("kappa_bar_local vs product over minors", &l.kappa_bar, &(&taub_c * &phib_r)),
                poly_eq("local reciprocity", &neg(&l.kappa), &l.kappa_bar.scale(&self.reciprocity_sign(l))),
                poly_eq("kappa_local(x,1) vs tau_local", &l.kappa.at_y(1), &l.tau),
                poly_eq("kappa_local(1,y) vs phi_local", &l.kappa.at_x(1), &l.phi),
                poly_eq("kappa_bar_local(x,-1)", &l.kappa_bar.at_y(-1), &indicator(c.is_empty())),
                poly_eq("kappa_bar_local(-1,y)", &l.kappa_bar.at_x(-1), &indicator_phi(l.minty.bond_part.is_empty())),
            ]);
            if let Some(w) = failure {
                return Ok(Some(format!("orientation {}: {w}", l.o)));
            }
        }
        Ok(None)
    }

    fn t3(&self) -> Check {
        let mut checks = vec![
            poly_eq("kappa_bar_mod vs rank generating", &self.kb, &self.rank_gen),
            poly_eq("tutte vs shifted rank generating", &self.tutte, &self.rank_gen.substitute(1, -1, 1, -1)),
        ];
        for p in 1..=3u64 {
            for q in 1..=3u64 {
                let triples = count(self.g, &CountQuery::new(Family::KappaBarMod, p - 1, q - 1), self.budget)?;
                checks.push(int_eq(
                    &format!("T({p},{q}) vs triples"),
                    &at(&self.tutte, p as i64, q as i64)?,
                    &big(triples),
                ));
            }
        }
        Ok(first_failure(checks))
    }

    fn pe(&self) -> Check {
        for l in &self.locals {
            let size = |cp: &ClassPartition| cp.classes[cp.class_of(&l.o).unwrap()].len();
            let (ce, cu, eu) = (size(&self.ce), size(&self.cu), size(&self.eu));
            let local = at(&l.kappa_bar, 1, 1)?;
            if ce != cu * eu || big(ce as u64) != local {
                return Ok(Some(format!(
                    "orientation {}: #ce={ce}, #cu={cu}, #eu={eu}, kappa_bar_local(1,1)={local}",
                    l.o
                )));
            }
        }
        Ok(None)
    }

    fn rpq(&self) -> Check {
        let r = self.reference_orientation();
        let m = self.g.edge_count();
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut checks = Vec::new();
        for p in 1..=3u64 {
            for q in 1..=3u64 {
                let mut kernels: HashMap<u64, u64> = HashMap::new();
                tfspace::visit_modular_tensions(self.g, &r, &GroupShape::cyclic(p)?, self.budget, |f| {
                    *kernels.entry(tfspace::zero_mask(f)).or_insert(0) += 1
                })?;
                let mut supports: HashMap<u64, u64> = HashMap::new();
                tfspace::visit_modular_flows(self.g, &r, &GroupShape::cyclic(q)?, self.budget, |f| {
                    *supports.entry(full & !tfspace::zero_mask(f)).or_insert(0) += 1
                })?;
                let (mut positive, mut negative) = (BigInt::zero(), BigInt::zero());
                for (&k, &a) in &kernels {
                    for (&s, &b) in &supports {
                        let pairs = big(a) * big(b);
                        if s & !k == 0 {
                            positive += &pairs << (k & !s).count_ones() as usize;
                        }
                        if s == k {
                            if s.count_ones() % 2 == 0 {
                                negative += pairs;
                            } else {
                                negative -= pairs;
                            }
                        }
                    }
                }
                if self.rank % 2 == 1 {
                    negative = -negative;
                }
                let (pi, qi) = (p as i64, q as i64);
                checks.push(int_eq(&format!("R({p},{q})"), &at(&self.rank_gen, pi, qi)?, &positive));
                checks.push(int_eq(&format!("R(-{p},-{q})"), &at(&self.rank_gen, -pi, -qi)?, &negative));
            }
        }
        Ok(first_failure(checks))
    }

    fn reference_orientation(&self) -> Orientation {
        Orientation::reference(self.g)
    }

    fn weighted_class_sum(&self, cp: &ClassPartition, pick: impl Fn(&LocalData) -> Poly) -> Poly {
        cp.classes.iter().map(|c| pick(self.local(&c[0])).scale(&BigRational::from_integer(big(c.len() as u64)))).sum()
    }

    fn im(&self) -> Check {
        let kz = self.weighted_class_sum(&self.ce, |l| l.kappa.clone());
        let kzb = self.weighted_class_sum(&self.ce, |l| l.kappa_bar.clone());
        let ac = orientation::enumerate_classes(self.g, Relation::Cut, Filter::Acyclic, self.budget)?;
        let tc = orientation::enumerate_classes(self.g, Relation::Eulerian, Filter::TotallyCyclic, self.budget)?;
        let tz = self.weighted_class_sum(&ac, |l| l.tau.clone());
        let pz = self.weighted_class_sum(&tc, |l| l.phi.clone());
        Ok(first_failure([
            poly_eq("kappa_int vs weighted class sum", &self.kz, &kz),
            poly_eq("kappa_bar_int vs weighted class sum", &self.kzb, &kzb),
            poly_eq("tau_int vs weighted cut-class sum", &self.tz, &tz),
            poly_eq("phi_int vs weighted Eulerian-class sum", &self.pz, &pz),
        ]))
    }

    fn census(&self, pred: impl Fn(&Orientation) -> Result<bool>) -> Result<Vec<Orientation>> {
        let mut out = Vec::new();
        for l in &self.locals {
            if pred(&l.o)? {
                out.push(l.o);
            }
        }
        Ok(out)
    }

    fn cs(&self) -> Check {
        let g = self.g;
        let b = self.budget;
        let n = |v: usize| big(v as u64);
        let ac = self.census(|o| Ok(orientation::classify(g, o)?.is_acyclic))?;
        let tc = self.census(|o| Ok(orientation::classify(g, o)?.is_totally_cyclic))?;
        let cu = self.census(|o| orientation::is_locally_directed_cut(g, o))?;
        let eu = self.census(|o| orientation::is_directed_eulerian(g, o))?;
        let ce = self.census(|o| orientation::is_cut_eulerian(g, o))?;
        let classes = |set: &Vec<Orientation>| -> Result<BigInt> {
            Ok(n(orientation::classes_of(g, Relation::CutEulerian, set.clone(), b)?.len()))
        };
        let class_sizes = |cp: &ClassPartition| -> BigInt {
            self.locals.iter().map(|l| n(cp.classes[cp.class_of(&l.o).unwrap()].len())).sum()
        };
        let (kz, kzb, k, kb, t) = (&self.kz, &self.kzb, &self.k, &self.kb, &self.tutte);
        let all = n(self.locals.len());
        let zero = BigInt::zero();
        let mut checks = vec![
            int_eq("kappa_bar_int(0,0) vs |O|", &at(kzb, 0, 0)?, &all),
            int_eq("|kappa_int(1,0)| vs |O_tc|", &at(kz, 1, 0)?.abs(), &n(tc.len())),
            int_eq("kappa_bar_int(-1,0) vs |O_tc|", &at(kzb, -1, 0)?, &n(tc.len())),
            int_eq("|kappa_int(0,1)| vs |O_ac|", &at(kz, 0, 1)?.abs(), &n(ac.len())),
            int_eq("kappa_bar_int(0,-1) vs |O_ac|", &at(kzb, 0, -1)?, &n(ac.len())),
            int_eq("kappa_int(2,1) vs |O_cu|", &at(kz, 2, 1)?, &n(cu.len())),
            int_eq("|kappa_bar_int(-2,-1)| vs |O_cu|", &at(kzb, -2, -1)?.abs(), &n(cu.len())),
            int_eq("kappa_int(1,2) vs |O_eu|", &at(kz, 1, 2)?, &n(eu.len())),
            int_eq("|kappa_bar_int(-1,-2)| vs |O_eu|", &at(kzb, -1, -2)?.abs(), &n(eu.len())),
            int_eq("kappa_int(2,2) vs |O_ce|", &at(kz, 2, 2)?, &n(ce.len())),
            int_eq("kappa_bar_int(1,0) vs sum of cut class sizes", &at(kzb, 1, 0)?, &class_sizes(&self.cu)),
            int_eq("kappa_bar_int(0,1) vs sum of Eulerian class sizes", &at(kzb, 0, 1)?, &class_sizes(&self.eu)),
            int_eq("kappa_bar_int(1,1) vs sum of cut-Eulerian class sizes", &at(kzb, 1, 1)?, &class_sizes(&self.ce)),
            int_eq("T(1,1) vs kappa_bar_mod(0,0)", &at(t, 1, 1)?, &at(kb, 0, 0)?),
            int_eq("T(1,1) vs #[O]", &at(t, 1, 1)?, &n(self.ce.len())),
            int_eq("T(2,2) vs kappa_bar_mod(1,1)", &at(t, 2, 2)?, &at(kb, 1, 1)?),
            int_eq("T(2,2) vs |O|", &at(t, 2, 2)?, &all),
            int_eq("kappa_mod(2,2) vs #[O_ce]", &at(k, 2, 2)?, &classes(&ce)?),
            int_eq("|T(0,-1)| vs |kappa_bar_mod(-1,-2)|", &at(t, 0, -1)?.abs(), &at(kb, -1, -2)?.abs()),
            int_eq("|T(0,-1)| vs kappa_mod(1,2)", &at(t, 0, -1)?.abs(), &at(k, 1, 2)?),
            int_eq("kappa_mod(1,2) vs #[O_eu]", &at(k, 1, 2)?, &classes(&eu)?),
            int_eq("|T(-1,0)| vs |kappa_bar_mod(-2,-1)|", &at(t, -1, 0)?.abs(), &at(kb, -2, -1)?.abs()),
            int_eq("|T(-1,0)| vs kappa_mod(2,1)", &at(t, -1, 0)?.abs(), &at(k, 2, 1)?),
            int_eq("kappa_mod(2,1) vs #[O_cu]", &at(k, 2, 1)?, &classes(&cu)?),
            int_eq("T(1,0) vs kappa_bar_mod(0,-1)", &at(t, 1, 0)?, &at(kb, 0, -1)?),
            int_eq("T(1,0) vs |kappa_mod(0,1)|", &at(t, 1, 0)?, &at(k, 0, 1)?.abs()),
            int_eq("T(1,0) vs #[O_ac]", &at(t, 1, 0)?, &classes(&ac)?),
            int_eq("T(0,1) vs kappa_bar_mod(-1,0)", &at(t, 0, 1)?, &at(kb, -1, 0)?),
            int_eq("T(0,1) vs |kappa_mod(1,0)|", &at(t, 0, 1)?, &at(k, 1, 0)?.abs()),
            int_eq("T(0,1) vs #[O_tc]", &at(t, 0, 1)?, &classes(&tc)?),
            int_eq("T(1,2) vs kappa_bar_mod(0,1)", &at(t, 1, 2)?, &at(kb, 0, 1)?),
            int_eq("T(1,2) vs #[O]_cu", &at(t, 1, 2)?, &n(self.cu.len())),
            int_eq("T(2,1) vs kappa_bar_mod(1,0)", &at(t, 2, 1)?, &at(kb, 1, 0)?),
            int_eq("T(2,1) vs #[O]_eu", &at(t, 2, 1)?, &n(self.eu.len())),
        ];
        if g.edge_count() > 0 {
            checks.extend([
                int_eq("kappa_int(1,1)", &at(kz, 1, 1)?, &zero),
                int_eq("kappa_bar_int(-1,-1)", &at(kzb, -1, -1)?, &zero),
                int_eq("T(0,0)", &at(t, 0, 0)?, &zero),
                int_eq("kappa_bar_mod(-1,-1)", &at(kb, -1, -1)?, &zero),
                int_eq("kappa_mod(1,1)", &at(k, 1, 1)?, &zero),
            ]);
        }
        Ok(first_failure(checks))
    }

    fn tc(&self) -> Check {
        let mut total = Poly::zero();
        for x in self.g.edge_set().subsets() {
            let a = tutte(&self.g.contract(x)?).at_y(0);
            let b = tutte(&self.g.restrict(x)?).at_x(0);
            total = &total + &(&a * &b);
        }
        Ok(poly_eq("tutte vs convolution", &self.tutte, &total))
    }

    fn ind(&self) -> Check {
        let alternate =
            Orientation::from_flips(self.g, EdgeSet::from_ids(self.g.edges().iter().map(|e| e.id).step_by(2)))?;
        let g2 = self.g.directed_by(&alternate)?;
        let kz2 = counting_polynomial(&g2, Family::KappaInt, self.budget)?;
        let k2 = counting_polynomial(&g2, Family::KappaMod, self.budget)?;
        let max_reps = self.ce.max_representatives();
        let kb_max = self.sum_locals(max_reps.iter(), |l| l.kappa_bar.clone());
        let k_max = self.sum_locals(max_reps.iter(), |l| l.kappa.clone());
        Ok(first_failure([
            poly_eq("kappa_int under another reference orientation", &self.kz, &kz2),
            poly_eq("kappa_mod under another reference orientation", &self.k, &k2),
            poly_eq("kappa_bar_mod from largest representatives", &self.kb, &kb_max),
            poly_eq("kappa_mod from largest representatives", &self.k, &k_max),
        ]))
    }

    fn run(&self, id: &str) -> Check {
        match id {
            "T1b" => self.t1b(),
            "T1c" => self.t1c(),
            "T1d" => self.t1d(),
            "T1e" => self.t1e(),
            "T2b" => self.t2b(),
            "T2c" => self.t2c(),
            "T2d" => self.t2d(),
            "T2e" => self.t2e(),
            "PL" => self.pl(),
            "T3" => self.t3(),
            "PE" => self.pe(),
            "RPQ" => self.rpq(),
            "IM" => self.im(),
            "CS" => self.cs(),
            "TC" => self.tc(),
            "IND" => self.ind(),
            _ => Err(Error::InvalidArgument(format!("unknown identity `{id}`"))),
        }
    }
}

fn entry(id: &str, tag: &str, outcome: Check) -> IdentityEntry {
    let (status, witness) = match outcome {
        Ok(None) => (Status::Pass, None),
        Ok(Some(w)) => (Status::Fail, Some(w)),
        Err(e) => (Status::Fail, Some(format!("skipped: {e}"))),
    };
    IdentityEntry { id: id.to_string(), tag: tag.to_string(), status, witness }
}

/// Runs every identity on `g`. Budget overruns are reported as failing
/// entries rather than errors.
pub fn verify_graph(g: &MultiGraph, budget: &Budget) -> IdentityReport {
    let entries = match Context::new(g, budget) {
        Ok(ctx) => IDENTITIES.par_iter().map(|&(id, tag)| entry(id, tag, ctx.run(id))).collect(),
        Err(e) => IDENTITIES.iter().map(|&(id, tag)| entry(id, tag, Err(e.clone()))).collect(),
    };
    IdentityReport { entries }
}

/// Lexicographically smallest sorted edge list over all vertex
/// relabelings; two graphs are isomorphic iff their forms agree.
fn canonical_form(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut form: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (perm[a], perm[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        form.sort_unstable();
        if best.as_ref().is_none_or(|b| form < *b) {
            best = Some(form);
        }
        if !next_permutation(&mut perm) {
            return best.unwrap_or_default();
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Multisets of `m` edges among `pairs`, as index lists in nondecreasing order.
fn multisets(pairs: usize, m: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == m {
        out.push(current.clone());
        return;
    }
    for i in start..pairs {
        current.push(i);
        multisets(pairs, m, i, current, out);
        current.pop();
    }
}

/// All multigraphs with at most `max_edges` edges on `1..=max_edges + 1`
/// vertices, one per isomorphism class, ordered by (edges, vertices, form).
pub fn corpus(max_edges: usize, include_loops: bool) -> Vec<MultiGraph> {
    let max_vertices = max_edges + 1;
    let mut seen: BTreeSet<(usize, usize, EdgeList)> = BTreeSet::new();
    for m in 0..=max_edges {
        // graphs without isolated vertices on k vertices, then padded
        for k in 0..=max_vertices.min(2 * m) {
            let pairs: Vec<(usize, usize)> =
                (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).filter(|(a, b)| include_loops || a != b).collect();
            let mut choices = Vec::new();
            multisets(pairs.len(), m, 0, &mut Vec::new(), &mut choices);
            let forms: BTreeSet<Vec<(usize, usize)>> = choices
                .par_iter()
                .filter_map(|c| {
                    let edges: Vec<(usize, usize)> = c.iter().map(|&i| pairs[i]).collect();
                    let mut covered = vec![false; k];
                    for &(a, b) in &edges {
                        covered[a] = true;
                        covered[b] = true;
                    }
                    covered.iter().all(|&c| c).then(|| canonical_form(k, &edges))
                })
                .collect();
            for form in forms {
                for n in k.max(1)..=max_vertices {
                    seen.insert((m, n, form.clone()));
                }
            }
        }
    }
    seen.into_iter().map(|(_, n, form)| MultiGraph::new(n, &form).expect("valid corpus graph")).collect()
}

/// Verifies every graph of [`corpus`]`(max_edges, include_loops)`.
pub fn verify_corpus(max_edges: usize, include_loops: bool, budget: &Budget) -> Vec<(MultiGraph, IdentityReport)> {
    corpus(max_edges, include_loops)
        .into_par_iter()
        .map(|g| {
            let r = verify_graph(&g, budget);
            (g, r)
        })
        .collect()
}
