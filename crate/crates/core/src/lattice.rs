//! Depth-first enumeration of lattice points in a box cut out by linear
//! side conditions.
//!
//! Points are given by free integer coordinates, each ranging over an
//! interval, and dependent coordinates that are fixed integer combinations
//! of the free ones and must land in their own interval. A dependent
//! coordinate is tested as soon as the last free coordinate it mentions has
//! been assigned, which prunes whole subtrees.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Interval {
    pub lo: i64,
    pub hi: i64,
    pub nonzero: bool,
}

impl Interval {
    #[cfg(test)]
    pub(crate) fn closed(lo: i64, hi: i64) -> Self {
        Interval { lo, hi, nonzero: false }
    }

    #[inline]
    pub(crate) fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi && !(self.nonzero && x == 0)
    }

    fn size(&self) -> u128 {
        if self.hi < self.lo {
            0
        } else {
            (self.hi - self.lo + 1) as u128
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Dependent {
    pub terms: Vec<(usize, i64)>,
    pub range: Interval,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct LatticeBox {
    pub free: Vec<Interval>,
    pub deps: Vec<Dependent>,
}

struct Plan {
    /// Per level, the dependents whose partial sums it feeds.
    touches: Vec<Vec<(usize, i64)>>,
    /// Per level, the dependents that become fully determined there.
    finals: Vec<Vec<usize>>,
}

impl LatticeBox {
    pub(crate) fn candidates(&self) -> u128 {
        self.free.iter().map(Interval::size).product()
    }

    pub(crate) fn check_budget(&self, max_candidates: u64) -> Result<()> {
        let c = self.candidates();
        if c > max_candidates as u128 {
            return Err(Error::BudgetExceeded(format!("{c} lattice candidates exceeds the limit of {max_candidates}")));
        }
        Ok(())
    }

    fn plan(&self) -> Option<Plan> {
        let k = self.free.len();
        let mut touches = vec![Vec::new(); k];
        let mut finals = vec![Vec::new(); k];
        for (d, dep) in self.deps.iter().enumerate() {
            let last = dep.terms.iter().filter(|t| t.1 != 0).map(|t| t.0).max();
            match last {
                None => {
                    if !dep.range.contains(0) {
                        return None;
                    }
                }
                Some(level) => {
                    for &(i, c) in dep.terms.iter().filter(|t| t.1 != 0) {
                        touches[i].push((d, c));
                    }
                    finals[level].push(d);
                }
            }
        }
        Some(Plan { touches, finals })
    }

    /// Calls `visit(free, dependents)` for every lattice point.
    pub(crate) fn for_each(&self, mut visit: impl FnMut(&[i64], &[i64])) {
        let Some(plan) = self.plan() else { return };
        let mut free = vec![0i64; self.free.len()];
        let mut sums = vec![0i64; self.deps.len()];
        self.descend(&plan, 0, &mut free, &mut sums, &mut visit);
    }

    pub(crate) fn count(&self) -> u64 {
        let mut n = 0u64;
        self.for_each(|_, _| n += 1);
        n
    }

    fn descend(
        &self,
        plan: &Plan,
        level: usize,
        free: &mut [i64],
        sums: &mut [i64],
        visit: &mut impl FnMut(&[i64], &[i64]),
    ) {
        if level == free.len() {
            visit(free, sums);
            return;
        }
        let range = self.free[level];
        for x in range.lo..=range.hi {
            if range.nonzero && x == 0 {
                continue;
            }
            free[level] = x;
            for &(d, c) in &plan.touches[level] {
                sums[d] += c * x;
            }
            if plan.finals[level].iter().all(|&d| self.deps[d].range.contains(sums[d])) {
                self.descend(plan, level + 1, free, sums, visit);
            }
            for &(d, c) in &plan.touches[level] {
                sums[d] -= c * x;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(b: &LatticeBox) -> u64 {
        let mut n = 0;
        let k = b.free.len();
        let mut x: Vec<i64> = b.free.iter().map(|r| r.lo).collect();
        if b.free.iter().any(|r| r.hi < r.lo) {
            return 0;
        }
        loop {
            let ok_free = x.iter().zip(&b.free).all(|(&v, r)| r.contains(v));
            let ok_dep = b.deps.iter().all(|d| d.range.contains(d.terms.iter().map(|&(i, c)| c * x[i]).sum()));
            if ok_free && ok_dep {
                n += 1;
            }
            let mut i = 0;
            loop {
                if i == k {
                    return n;
                }
                if x[i] < b.free[i].hi {
                    x[i] += 1;
                    break;
                }
                x[i] = b.free[i].lo;
                i += 1;
            }
        }
    }

    #[test]
    fn matches_brute_force() {
        let b = LatticeBox {
            free: vec![Interval::closed(-2, 2), Interval { lo: -1, hi: 3, nonzero: true }, Interval::closed(0, 2)],
            deps: vec![
                Dependent { terms: vec![(0, 1), (1, -1)], range: Interval::closed(-1, 1) },
                Dependent { terms: vec![(0, 1), (2, 2)], range: Interval { lo: -3, hi: 3, nonzero: true } },
            ],
        };
        assert_eq!(b.count(), brute(&b));
        assert!(b.count() > 0);
    }

    #[test]
    fn constant_dependents() {
        let mut b = LatticeBox { free: vec![Interval::closed(0, 3)], deps: vec![] };
        b.deps.push(Dependent { terms: vec![], range: Interval::closed(0, 0) });
        assert_eq!(b.count(), 4);
        b.deps[0].range.nonzero = true;
        assert_eq!(b.count(), 0);
    }

    #[test]
    fn empty_box_has_one_point() {
        assert_eq!(LatticeBox::default().count(), 1);
    }

    #[test]
    fn budget() {
        let b = LatticeBox { free: vec![Interval::closed(0, 9); 3], deps: vec![] };
        assert!(b.check_budget(1000).is_ok());
        assert!(b.check_budget(999).is_err());
    }
}
