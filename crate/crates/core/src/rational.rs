//! Exact scalars and fixed-length vectors.
//!
//! Scalars are arbitrary-precision rationals kept in lowest terms with a
//! positive denominator, so equality of values is equality of representations.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    Rational::from_str(s).map_err(|e| Error::Input(format!("bad rational `{s}`: {e}")))
}

/// Renders `p/q` in lowest terms, or `p` for integers.
pub fn fmt_rational(q: &Rational) -> String {
    q.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// Canonical basis vector `e_k` (0-based).
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[k] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    /// Parses each entry as `p/q` or an integer. Panics on malformed input;
    /// meant for literals in tests and fixtures.
    pub fn from_strs(coords: &[&str]) -> Self {
        Vector(
            coords
                .iter()
                .map(|s| parse_rational(s).expect("rational literal"))
                .collect(),
        )
    }

    /// Whitespace-separated rationals.
    pub fn parse(line: &str) -> Result<Self> {
        line.split_whitespace()
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Vector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn assert_same_dim(&self, other: &Vector) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "mixed-dimension vector arithmetic"
        );
    }

    /// Inner product. Panics on mismatched dimensions; see [`Vector::checked_dot`].
    pub fn dot(&self, other: &Vector) -> Rational {
        self.assert_same_dim(other);
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn checked_dot(&self, other: &Vector) -> Result<Rational> {
        crate::error::check_dim(self.dim(), other.dim())?;
        Ok(self.dot(other))
    }

    pub fn checked_add(&self, other: &Vector) -> Result<Vector> {
        crate::error::check_dim(self.dim(), other.dim())?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Vector) -> Result<Vector> {
        crate::error::check_dim(self.dim(), other.dim())?;
        Ok(self - other)
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector(self.0.iter().map(|c| c * s).collect())
    }

    pub fn abs(&self) -> Vector {
        Vector(self.0.iter().map(Signed::abs).collect())
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut c = self.0.clone();
        c.extend(other.0.iter().cloned());
        Vector(c)
    }

    pub fn slice(&self, start: usize, end: usize) -> Vector {
        Vector(self.0[start..end].to_vec())
    }

    /// Scales by a positive factor so the entries become coprime integers.
    /// The zero vector is returned unchanged.
    pub fn primitive(&self) -> Vector {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Vector(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &gcd))
                .collect(),
        )
    }

    /// True when the first nonzero coordinate is positive.
    pub fn is_positive_leading(&self) -> bool {
        self.0
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_positive())
    }

    pub fn max_abs(&self) -> Rational {
        self.0
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        self.assert_same_dim(rhs);
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self.assert_same_dim(rhs);
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(fmt_rational(&q), "-3/2");
        assert_eq!(fmt_rational(&rat(4, 2)), "2");
    }

    #[test]
    fn parse_and_display() {
        let v = Vector::parse("1 -1/2  3/6").unwrap();
        assert_eq!(v.to_string(), "(1,-1/2,1/2)");
        assert!(Vector::parse("1 x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn primitive_scaling() {
        let v = Vector::from_strs(&["1/2", "-3/4", "0"]);
        assert_eq!(v.primitive(), Vector::from_ints(&[2, -3, 0]));
        assert_eq!(Vector::zeros(2).primitive(), Vector::zeros(2));
    }

    #[test]
    fn mixed_dimensions_are_rejected() {
        let a = Vector::from_ints(&[1, 2]);
        let b = Vector::from_ints(&[1, 2, 3]);
        assert!(matches!(
            a.checked_dot(&b),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        ));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed-dimension")]
    fn mixed_dimension_operator_panics() {
        let _ = &Vector::from_ints(&[1]) + &Vector::from_ints(&[1, 2]);
    }
}
