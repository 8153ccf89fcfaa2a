//! Exact bivariate polynomials over `ℚ` and tensor-product interpolation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Monomial order used for display: total degree descending, then the
/// power of `x` descending.
fn graded(a: &(u32, u32), b: &(u32, u32)) -> Ordering {
    (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0))
}

/// A polynomial in `x`, `y`; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, BigRational::from_integer(c.into()))
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, BigRational::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, BigRational::one())
    }

    pub fn monomial(i: u32, j: u32, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// Builds a polynomial from `(i, j, c)` triples meaning `c·x^i·y^j`.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in display order.
    pub fn terms(&self) -> Vec<(u32, u32, BigRational)> {
        let mut t: Vec<_> = self.terms.iter().map(|(&(i, j), c)| (i, j, c.clone())).collect();
        t.sort_by(|a, b| graded(&(a.0, a.1), &(b.0, b.1)));
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.0 + k.1).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut p = Self::zero();
        for (&(i, j), v) in &self.terms {
            p.add_term(i, j, v * c);
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            total += c * num::pow(x.clone(), i as usize) * num::pow(y.clone(), j as usize);
        }
        total
    }

    pub fn evaluate_int(&self, x: i64, y: i64) -> BigRational {
        self.evaluate(&BigRational::from_integer(x.into()), &BigRational::from_integer(y.into()))
    }

    /// Value at an integer point, or an error if it is not an integer.
    pub fn evaluate_integer(&self, x: i64, y: i64) -> Result<BigInt> {
        let v = self.evaluate_int(x, y);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::Interpolation(format!("value {v} at ({x}, {y}) is not an integer")))
        }
    }

    /// `P(a·x + b, c·y + d)`.
    pub fn substitute(&self, a: i64, b: i64, c: i64, d: i64) -> Self {
        let lin = |s: Self, k: i64, t: i64| &s.scale(&BigRational::from_integer(k.into())) + &Self::constant(t);
        let xs = lin(Self::x(), a, b);
        let ys = lin(Self::y(), c, d);
        let mut out = Self::zero();
        for (&(i, j), coef) in &self.terms {
            out = &out + &(&xs.pow(i) * &ys.pow(j)).scale(coef);
        }
        out
    }

    /// The univariate polynomial in `x` obtained by fixing `y`.
    pub fn at_y(&self, y: i64) -> Self {
        let y = BigRational::from_integer(y.into());
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, 0, c * num::pow(y.clone(), j as usize));
        }
        out
    }

    /// The univariate polynomial in `y` obtained by fixing `x`.
    pub fn at_x(&self, x: i64) -> Self {
        let x = BigRational::from_integer(x.into());
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(0, j, c * num::pow(x.clone(), i as usize));
        }
        out
    }

    /// Swaps the roles of `x` and `y`.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(j, i, c.clone());
        }
        out
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

fn monomial_text(i: u32, j: u32) -> String {
    let power = |v: &str, e: u32| if e == 1 { v.to_string() } else { format!("{v}^{e}") };
    match (i, j) {
        (0, 0) => String::new(),
        (_, 0) => power("x", i),
        (0, _) => power("y", j),
        _ => format!("{}*{}", power("x", i), power("y", j)),
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Writes e.g. `y^3+x^2+2*x*y-1/2*x+8`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, j, c)) in self.terms().into_iter().enumerate() {
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let mono = monomial_text(i, j);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for BivariatePolynomial {
    /// `{"vars":["x","y"],"monomials":[[i,j,"c"],...]}` in display order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let monomials: Vec<(u32, u32, String)> =
            self.terms().into_iter().map(|(i, j, c)| (i, j, c.to_string())).collect();
        let mut st = s.serialize_struct("BivariatePolynomial", 2)?;
        st.serialize_field("vars", &["x", "y"])?;
        st.serialize_field("monomials", &monomials)?;
        st.end()
    }
}

/// Coefficients (constant first) of the Lagrange basis polynomial that is
/// `1` at `nodes[k]` and `0` at the other nodes.
fn lagrange_basis(nodes: &[BigRational], k: usize) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::one()];
    let mut denom = BigRational::one();
    for (m, node) in nodes.iter().enumerate() {
        if m == k {
            continue;
        }
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * node;
        }
        coeffs = next;
        denom *= &nodes[k] - node;
    }
    coeffs.into_iter().map(|c| c / &denom).collect()
}

/// The unique polynomial of `x`-degree `< xs.len()` and `y`-degree
/// `< ys.len()` with value `values[a][b]` at `(xs[a], ys[b])`.
pub fn interpolate(xs: &[i64], ys: &[i64], values: &[Vec<BigInt>]) -> Result<BivariatePolynomial> {
    if values.len() != xs.len() {
        return Err(Error::DimensionMismatch { expected: xs.len(), got: values.len() });
    }
    if let Some(row) = values.iter().find(|r| r.len() != ys.len()) {
        return Err(Error::DimensionMismatch { expected: ys.len(), got: row.len() });
    }
    for nodes in [xs, ys] {
        let mut s = nodes.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != nodes.len() {
            return Err(Error::Interpolation("sample points must be distinct".into()));
        }
    }
    let rx: Vec<BigRational> = xs.iter().map(|&v| BigRational::from_integer(v.into())).collect();
    let ry: Vec<BigRational> = ys.iter().map(|&v| BigRational::from_integer(v.into())).collect();
    let lx: Vec<_> = (0..xs.len()).map(|a| lagrange_basis(&rx, a)).collect();
    let ly: Vec<_> = (0..ys.len()).map(|b| lagrange_basis(&ry, b)).collect();

    let mut out = BivariatePolynomial::zero();
    for (a, row) in values.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let v = BigRational::from_integer(v.clone());
            for (i, cx) in lx[a].iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                let vx = &v * cx;
                for (j, cy) in ly[b].iter().enumerate() {
                    out.add_term(i as u32, j as u32, &vx * cy);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn display_order_and_signs() {
        let t = BivariatePolynomial::from_terms([(0, 3, 1), (2, 0, 1), (1, 1, 2), (0, 2, 2), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(t.to_string(), "y^3+x^2+2*x*y+2*y^2+x+y");
        let p = BivariatePolynomial::from_terms([(1, 0, -3), (0, 0, 8)]);
        assert_eq!(p.to_string(), "-3*x+8");
        assert_eq!(BivariatePolynomial::zero().to_string(), "0");
        let half = BivariatePolynomial::monomial(1, 0, BigRational::new(big(1), big(2)));
        assert_eq!(half.to_string(), "1/2*x");
        assert_eq!(BivariatePolynomial::constant(-1).to_string(), "-1");
    }

    #[test]
    fn json_form() {
        let p = BivariatePolynomial::from_terms([(1, 0, 1), (0, 0, -1)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"vars":["x","y"],"monomials":[[1,0,"1"],[0,0,"-1"]]}"#);
    }

    #[test]
    fn interpolation_examples() {
        let grid = vec![vec![big(0), big(0)], vec![big(0), big(1)]];
        let p = interpolate(&[0, 1], &[0, 1], &grid).unwrap();
        assert_eq!(p, BivariatePolynomial::from_terms([(1, 1, 1)]));
        let c = interpolate(&[3, 7], &[1], &[vec![big(5)], vec![big(5)]]).unwrap();
        assert_eq!(c, BivariatePolynomial::constant(5));
        assert!(interpolate(&[1, 1], &[0], &[vec![big(1)], vec![big(1)]]).is_err());
        assert!(interpolate(&[1, 2], &[0], &[vec![big(1)]]).is_err());
    }

    #[test]
    fn interpolation_recovers_random_polynomial() {
        let p = BivariatePolynomial::from_terms([(2, 1, 3), (0, 2, -7), (1, 0, 4), (0, 0, 11)]);
        let xs = [-1, 0, 2];
        let ys = [1, 2, 5];
        let grid: Vec<Vec<BigInt>> =
            xs.iter().map(|&x| ys.iter().map(|&y| p.evaluate_integer(x, y).unwrap()).collect()).collect();
        assert_eq!(interpolate(&xs, &ys, &grid).unwrap(), p);
    }

    #[test]
    fn substitution_and_evaluation() {
        let r = BivariatePolynomial::from_terms([(1, 0, 1), (0, 0, 1)]);
        let t = r.substitute(1, -1, 1, -1);
        assert_eq!(t, BivariatePolynomial::x());
        assert_eq!(r.substitute(-1, 0, 1, 0).to_string(), "-x+1");
        let p = BivariatePolynomial::from_terms([(1, 1, 2), (0, 1, 1)]);
        assert_eq!(p.evaluate_integer(2, 3).unwrap(), big(15));
        assert_eq!(p.at_x(2), BivariatePolynomial::from_terms([(0, 1, 5)]));
        assert_eq!(p.at_y(1), BivariatePolynomial::from_terms([(1, 0, 2), (0, 0, 1)]));
        assert_eq!(p.swap().to_string(), "2*x*y+x");
    }

    #[test]
    fn arithmetic() {
        let x = BivariatePolynomial::x();
        let y = BivariatePolynomial::y();
        let s = &x + &y;
        assert_eq!((&s * &s).to_string(), "x^2+2*x*y+y^2");
        assert!((&s - &s).is_zero());
        assert_eq!(s.pow(0), BivariatePolynomial::one());
        assert_eq!((&s * &s).total_degree(), 2);
        assert!(!BivariatePolynomial::monomial(0, 0, BigRational::new(big(1), big(3))).is_integral());
    }
}
