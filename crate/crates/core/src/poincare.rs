//! Integer polynomials in `t` recording graded dimensions.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::is_prime;
use crate::error::{Error, Result};

/// `Σ c_i t^i` with arbitrary-precision coefficients. Trailing zeros are
/// never stored, so the zero series has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PoincareSeries {
    coefficients: Vec<BigInt>,
}

impl PoincareSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: usize, coefficient: impl Into<BigInt>) -> Self {
        let mut s = Self::zero();
        s.add_term(degree, coefficient);
        s
    }

    pub fn from_coefficients<I, T>(coefficients: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = PoincareSeries {
            coefficients: coefficients.into_iter().map(Into::into).collect(),
        };
        s.normalize();
        s
    }

    /// Builds a series from `(degree, coefficient)` pairs; repeated degrees
    /// are summed.
    pub fn from_sparse<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, T)>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero();
        for (degree, c) in terms {
            s.add_term(degree, c);
        }
        s
    }

    pub fn add_term(&mut self, degree: usize, coefficient: impl Into<BigInt>) {
        let c = coefficient.into();
        if c.is_zero() {
            return;
        }
        if self.coefficients.len() <= degree {
            self.coefficients.resize(degree + 1, BigInt::zero());
        }
        self.coefficients[degree] += c;
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, degree: usize) -> BigInt {
        self.coefficients
            .get(degree)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Multiplies by `t^k`; graded pieces of the engines sit in even degrees
    /// only, so odd `k` is refused.
    pub fn shift(&self, k: usize) -> Result<Self> {
        if k % 2 == 1 {
            return Err(Error::OddShift(k));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut coefficients = vec![BigInt::zero(); k];
        coefficients.extend(self.coefficients.iter().cloned());
        Ok(PoincareSeries { coefficients })
    }

    /// Value at `t = -1`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Value at `t = 1`: the total dimension.
    pub fn total(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn vanishes_in_odd_degrees(&self) -> bool {
        self.coefficients.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.coefficients.iter().any(Signed::is_negative)
    }

    /// First degree with a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<(usize, BigInt)> {
        self.coefficients
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
            .map(|(i, c)| (i, c.clone()))
    }

    /// Whether every coefficient is at most the corresponding one of `other`.
    pub fn dominated_by(&self, other: &PoincareSeries) -> bool {
        let n = self.coefficients.len().max(other.coefficients.len());
        (0..n).all(|i| self.coefficient(i) <= other.coefficient(i))
    }

    /// Nonzero terms as `(degree, coefficient)`, degrees increasing.
    pub fn sparse(&self) -> Vec<(usize, BigInt)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }
}

impl Add for &PoincareSeries {
    type Output = PoincareSeries;

    fn add(self, rhs: &PoincareSeries) -> PoincareSeries {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        PoincareSeries::from_coefficients((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)))
    }
}

impl Add for PoincareSeries {
    type Output = PoincareSeries;

    fn add(self, rhs: PoincareSeries) -> PoincareSeries {
        &self + &rhs
    }
}

impl Sub for &PoincareSeries {
    type Output = PoincareSeries;

    fn sub(self, rhs: &PoincareSeries) -> PoincareSeries {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        PoincareSeries::from_coefficients((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)))
    }
}

impl std::iter::Sum for PoincareSeries {
    fn sum<I: Iterator<Item = PoincareSeries>>(iter: I) -> Self {
        iter.fold(PoincareSeries::zero(), |acc, s| &acc + &s)
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sparse();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (degree, c)) in terms.iter().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match degree {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                    if *degree == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{degree}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Poincaré series of `Ext*(I^(r), I^(r))`: one dimension in each even
/// degree `0, 2, .., 2p^r - 2`.
pub fn e_r_series(p: u64, r: u32) -> Result<PoincareSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let q = p.pow(r) as usize;
    Ok(PoincareSeries::from_sparse((0..q).map(|i| (2 * i, 1))))
}
