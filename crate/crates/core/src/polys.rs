//! Counting polynomials obtained by sampling `count` on a grid and
//! interpolating.

use std::fmt;

use num::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::count::{count, CountQuery, Family};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::orientation::Orientation;
use crate::poly::{interpolate, BivariatePolynomial};
use crate::tutte::{rank_generating, tutte};
use crate::Budget;

/// Sample nodes per variable and two held-out checkpoints. Open families
/// start at `1`, closed ones at `0`; an unused variable gets one node.
fn sample_plan(g: &MultiGraph, family: Family) -> (Vec<i64>, Vec<i64>, [(i64, i64); 2]) {
    let stats = g.stats();
    let start = if family.is_bar() { 0 } else { 1 };
    let nodes = |used: bool, degree: usize| -> Vec<i64> {
        if used {
            (start..=start + degree as i64).collect()
        } else {
            vec![start]
        }
    };
    let xs = nodes(family.uses_p(), stats.rank);
    let ys = nodes(family.uses_q(), stats.nullity);
    let (x_end, y_end) = (*xs.last().unwrap(), *ys.last().unwrap());
    let step = |used: bool, v: i64, by: i64| if used { v + by } else { v };
    let held =
        [(step(family.uses_p(), x_end, 1), step(family.uses_q(), y_end, 1)), (step(family.uses_p(), x_end, 2), start)];
    (xs, ys, held)
}

fn fit(g: &MultiGraph, family: Family, eval: impl Fn(u64, u64) -> Result<u64> + Sync) -> Result<BivariatePolynomial> {
    let (xs, ys, held) = sample_plan(g, family);
    let points: Vec<(i64, i64)> = xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect();
    let values: Vec<u64> = points.par_iter().map(|&(x, y)| eval(x as u64, y as u64)).collect::<Result<_>>()?;
    let grid: Vec<Vec<BigInt>> = values.chunks(ys.len()).map(|row| row.iter().map(|&v| v.into()).collect()).collect();
    let poly = interpolate(&xs, &ys, &grid)?;
    if family.has_integer_coefficients() && !poly.is_integral() {
        return Err(Error::Interpolation(format!("{family} interpolated to non-integral {poly}")));
    }
    for (x, y) in held {
        let expected = BigInt::from(eval(x as u64, y as u64)?);
        let got = poly.evaluate_integer(x, y)?;
        if got != expected {
            return Err(Error::Interpolation(format!(
                "{family} check at ({x}, {y}) failed: polynomial gives {got}, count gives {expected}"
            )));
        }
    }
    Ok(poly)
}

/// The polynomial of a graph-level family, in `x` (the `p` slot) and `y`
/// (the `q` slot).
pub fn counting_polynomial(g: &MultiGraph, family: Family, budget: &Budget) -> Result<BivariatePolynomial> {
    if family.is_local() {
        return Err(Error::InvalidArgument(format!("{family} needs an orientation; use local_polynomial")));
    }
    fit(g, family, |p, q| count(g, &CountQuery::new(family, p, q), budget))
}

/// The polynomial of a local family at orientation `o`.
pub fn local_polynomial(
    g: &MultiGraph,
    o: &Orientation,
    family: Family,
    budget: &Budget,
) -> Result<BivariatePolynomial> {
    if !family.is_local() {
        return Err(Error::InvalidArgument(format!("{family} is not a local family")));
    }
    o.check(g)?;
    fit(g, family, |p, q| count(g, &CountQuery::local(family, *o, p, q), budget))
}

/// Every graph-level polynomial of one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolynomialReport {
    pub tutte: BivariatePolynomial,
    pub rank_generating: BivariatePolynomial,
    pub kappa_mod: BivariatePolynomial,
    pub kappa_int: BivariatePolynomial,
    pub kappa_bar_mod: BivariatePolynomial,
    pub kappa_bar_int: BivariatePolynomial,
    pub tau_mod: BivariatePolynomial,
    pub tau_int: BivariatePolynomial,
    pub phi_mod: BivariatePolynomial,
    pub phi_int: BivariatePolynomial,
    pub tau_bar_mod: BivariatePolynomial,
    pub tau_bar_int: BivariatePolynomial,
    pub phi_bar_mod: BivariatePolynomial,
    pub phi_bar_int: BivariatePolynomial,
}

impl PolynomialReport {
    pub fn compute(g: &MultiGraph, budget: &Budget) -> Result<Self> {
        let f = |family| counting_polynomial(g, family, budget);
        Ok(PolynomialReport {
            tutte: tutte(g),
            rank_generating: rank_generating(g, budget)?,
            kappa_mod: f(Family::KappaMod)?,
            kappa_int: f(Family::KappaInt)?,
            kappa_bar_mod: f(Family::KappaBarMod)?,
            kappa_bar_int: f(Family::KappaBarInt)?,
            tau_mod: f(Family::TauMod)?,
            tau_int: f(Family::TauInt)?,
            phi_mod: f(Family::PhiMod)?,
            phi_int: f(Family::PhiInt)?,
            tau_bar_mod: f(Family::TauBarMod)?,
            tau_bar_int: f(Family::TauBarInt)?,
            phi_bar_mod: f(Family::PhiBarMod)?,
            phi_bar_int: f(Family::PhiBarInt)?,
        })
    }

    pub fn entries(&self) -> [(&'static str, &BivariatePolynomial); 14] {
        [
            ("tutte", &self.tutte),
            ("rank_generating", &self.rank_generating),
            ("kappa_mod", &self.kappa_mod),
            ("kappa_int", &self.kappa_int),
            ("kappa_bar_mod", &self.kappa_bar_mod),
            ("kappa_bar_int", &self.kappa_bar_int),
            ("tau_mod", &self.tau_mod),
            ("tau_int", &self.tau_int),
            ("phi_mod", &self.phi_mod),
            ("phi_int", &self.phi_int),
            ("tau_bar_mod", &self.tau_bar_mod),
            ("tau_bar_int", &self.tau_bar_int),
            ("phi_bar_mod", &self.phi_bar_mod),
            ("phi_bar_int", &self.phi_bar_int),
        ]
    }
}

impl fmt::Display for PolynomialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, p) in self.entries() {
            writeln!(f, "{name} = {p}")?;
        }
        Ok(())
    }
}
