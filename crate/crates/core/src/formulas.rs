//! Closed forms for divided powers: the `Γ^{p(r)} gl` series, the top degree
//! of `Γ^{p^k(r)} gl`, and the Euler-characteristic comparison of `S^{p(r)}`
//! with `Γ^{p(r)}`.

use num_bigint::BigInt;

use crate::coinvariants::orbit_series;
use crate::combinatorics::{is_prime, Partition};
use crate::error::{Error, Result};
use crate::poincare::PoincareSeries;

/// `(t^{2p-2} - 1) · Σ_{i<p^r} t^{2pi}`, the expansion of
/// `(t^{2p-2} - 1)(1 - t^{2p^{r+1}})/(1 - t^{2p})`.
pub fn gamma_correction(p: u64, r: u32) -> Result<PoincareSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p_us = p as usize;
    let q = p.pow(r) as usize;
    let mut s = PoincareSeries::zero();
    for i in 0..q {
        s.add_term(2 * p_us * i + 2 * p_us - 2, 1);
        s.add_term(2 * p_us * i, -1);
    }
    Ok(s)
}

/// Poincaré series of `H*_P(GL, Γ^{p(r)} gl)`.
pub fn gamma_p_series(p: u64, r: u32) -> Result<PoincareSeries> {
    if r == 0 {
        return Err(Error::InvalidShape("the Γ^{p(r)} formula needs r ≥ 1".into()));
    }
    let sym = orbit_series(&Partition::row(p as usize), p, r)?;
    let series = &sym + &gamma_correction(p, r)?;
    if let Some((degree, c)) = series.first_negative() {
        return Err(Error::NegativeCoefficient {
            context: "Γ^{p(r)} series",
            degree,
            coefficient: c.to_string(),
        });
    }
    Ok(series)
}

/// `p^k (2p^r - 2) + 2p^k - 2`: top nonzero degree of `H*_P(GL, Γ^{p^k(r)} gl)`.
pub fn gamma_top_degree(k: u32, p: u64, r: u32) -> Result<BigInt> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pk = BigInt::from(p).pow(k);
    let pr = BigInt::from(p).pow(r);
    Ok(&pk * (2 * pr - 2) + 2 * &pk - 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub p: u64,
    pub r: u32,
    pub symmetric: BigInt,
    pub divided: BigInt,
}

impl DualityReport {
    pub fn agree(&self) -> bool {
        self.symmetric == self.divided
    }
}

/// Euler characteristics of the `S^{p(r)} gl` and `Γ^{p(r)} gl` series.
pub fn euler_duality_check(p: u64, r: u32) -> Result<DualityReport> {
    let sym = orbit_series(&Partition::row(p as usize), p, r)?;
    let gamma = gamma_p_series(p, r)?;
    Ok(DualityReport {
        p,
        r,
        symmetric: sym.euler_characteristic(),
        divided: gamma.euler_characteristic(),
    })
}
