//! Finite abelian groups given as products of cyclic groups.
//!
//! Elements of `ℤ_{m₁} × … × ℤ_{m_k}` are encoded as integers in
//! `[0, m₁⋯m_k)` in mixed radix with `m₁` the least significant digit.
//! The identity is always `0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupShape(Vec<u64>);

impl GroupShape {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() || moduli.contains(&0) {
            return Err(Error::InvalidArgument("group moduli must be positive".into()));
        }
        let mut order: u64 = 1;
        for &m in &moduli {
            order = order
                .checked_mul(m)
                .filter(|&o| o <= u32::MAX as u64)
                .ok_or_else(|| Error::InvalidArgument("group order too large".into()))?;
        }
        Ok(GroupShape(moduli))
    }

    pub fn cyclic(order: u64) -> Result<Self> {
        Self::new(vec![order])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn decode(&self, mut a: u64) -> Vec<u64> {
        self.0
            .iter()
            .map(|&m| {
                let d = a % m;
                a /= m;
                d
            })
            .collect()
    }

    pub fn encode(&self, digits: &[u64]) -> u64 {
        self.0.iter().zip(digits).rev().fold(0, |acc, (&m, &d)| acc * m + d % m)
    }

    /// Reduces an integer componentwise (the image of `ℤ` under the
    /// diagonal map `n ↦ (n mod m₁, …, n mod m_k)`).
    pub fn reduce(&self, n: i64) -> u64 {
        let digits: Vec<u64> = self.0.iter().map(|&m| n.rem_euclid(m as i64) as u64).collect();
        self.encode(&digits)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for &m in &self.0 {
            out += (a % m + b % m) % m * place;
            place *= m;
            a /= m;
            b /= m;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let mut a = a;
        let (mut out, mut place) = (0, 1);
        for &m in &self.0 {
            out += (m - a % m) % m * place;
            place *= m;
            a /= m;
        }
        out
    }

    /// Dense addition and negation tables.
    pub(crate) fn tables(&self) -> GroupTables {
        let n = self.order() as usize;
        let mut add = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = self.add(a as u64, b as u64) as u32;
            }
        }
        let neg = (0..n).map(|a| self.neg(a as u64) as u32).collect();
        GroupTables { order: n, add, neg }
    }
}

pub(crate) struct GroupTables {
    pub(crate) order: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
}

impl GroupTables {
    #[inline]
    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub(crate) fn signed(&self, sign: i8, a: u32) -> u32 {
        if sign > 0 {
            a
        } else {
            self.neg[a as usize]
        }
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for GroupShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let moduli = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::InvalidArgument(format!("bad group modulus `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(moduli)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_arithmetic() {
        let g: GroupShape = "2,2".parse().unwrap();
        assert_eq!(g.order(), 4);
        for a in 0..4 {
            assert_eq!(g.add(a, a), 0);
            assert_eq!(g.neg(a), a);
        }
        assert_eq!(g.add(1, 2), 3);
        assert_eq!(g.decode(2), vec![0, 1]);
        assert_eq!(g.encode(&[1, 1]), 3);
    }

    #[test]
    fn cyclic_arithmetic() {
        let g = GroupShape::cyclic(5).unwrap();
        assert_eq!(g.add(3, 4), 2);
        assert_eq!(g.neg(2), 3);
        assert_eq!(g.reduce(-1), 4);
        let t = g.tables();
        assert_eq!(t.sub(1, 3), 3);
        assert_eq!(t.signed(-1, 1), 4);
    }

    #[test]
    fn mixed_radix_roundtrip() {
        let g = GroupShape::new(vec![3, 2, 4]).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.encode(&g.decode(a)), a);
            assert_eq!(g.add(a, g.neg(a)), 0);
        }
        assert_eq!(g.reduce(7), g.encode(&[1, 1, 3]));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(GroupShape::new(vec![]).is_err());
        assert!(GroupShape::new(vec![3, 0]).is_err());
        assert!("2,x".parse::<GroupShape>().is_err());
        assert_eq!("4".parse::<GroupShape>().unwrap().to_string(), "4");
    }
}
