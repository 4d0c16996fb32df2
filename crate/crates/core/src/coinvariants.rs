//! Poincaré series of `H*_P(GL, S^{μ(r)} gl)` as the coinvariants of
//! `H*_P(GL, ⊗^{d(r)} gl)` under `S_μ` acting through `Δ*`.
//!
//! Every summand is a permutation module for the diagonal action
//! `g · ([τ], σ) = ([gτ], g σ g⁻¹)`, so its coinvariants have the orbit
//! count as dimension over any field.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::action::orbits;
use crate::combinatorics::{
    centralizer_order, fixed_cosets, is_prime, Composition, Partition, YoungSubgroup,
};
use crate::error::{Error, Result};
use crate::model::{gamma_of_multiset, multisets, summand_count, BimoduleBasis};
use crate::poincare::PoincareSeries;

/// Largest `d` accepted by the naive orbit enumeration.
pub const NAIVE_MAX_DEGREE: usize = 6;

/// Largest `d` accepted by the Burnside route (keeps `d!` inside `u128`).
pub const ORBIT_MAX_DEGREE: usize = 30;

/// Number of `S_μ`-orbits on the basis of `k[S_d/S_γ] ⊗ k[S_d]` under the
/// diagonal action, by Burnside's lemma:
/// `(1/|S_μ|) Σ_{g ∈ S_μ} fixed_cosets(g, γ) · |C_{S_d}(g)|`.
pub fn orbit_count(gamma: &Composition, mu: &Composition) -> Result<BigUint> {
    if gamma.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: gamma.weight(),
            right: mu.weight(),
        });
    }
    if mu.weight() > ORBIT_MAX_DEGREE {
        return Err(Error::ScaleGuard {
            what: "d",
            value: mu.weight(),
            limit: ORBIT_MAX_DEGREE,
        });
    }
    let group = YoungSubgroup::from_composition(mu);
    let mut sum = BigUint::zero();
    for (g, class_size) in group.conjugacy_classes() {
        let fixed = BigUint::from(fixed_cosets(&g, gamma)) * BigUint::from(centralizer_order(&g));
        sum += class_size * fixed;
    }
    let order = group.order();
    assert!(
        (&sum % &order).is_zero(),
        "Burnside sum {sum} not divisible by |S_μ| = {order}"
    );
    Ok(sum / order)
}

/// Orbit count by explicit union-find over the full basis.
pub fn naive_orbit_count(gamma: &Composition, mu: &Composition) -> Result<u64> {
    if gamma.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: gamma.weight(),
            right: mu.weight(),
        });
    }
    if mu.weight() > NAIVE_MAX_DEGREE {
        return Err(Error::ScaleGuard {
            what: "d",
            value: mu.weight(),
            limit: NAIVE_MAX_DEGREE,
        });
    }
    let basis = BimoduleBasis::new(gamma);
    let maps: Vec<Vec<u32>> = YoungSubgroup::from_composition(mu)
        .generators()
        .iter()
        .map(|g| basis.diagonal_map(g))
        .collect();
    Ok(orbits(basis.len(), maps.iter().map(Vec::as_slice)).count as u64)
}

/// Σ over multisets `m` of `orbit_count(γ(m), μ) · t^{2|m|}`.
pub fn orbit_series(mu: &Partition, p: u64, r: u32) -> Result<PoincareSeries> {
    coinvariant_series(&mu.to_composition(), p, r)
}

/// `orbit_series` for an arbitrary ordering of the parts of `μ`.
pub fn coinvariant_series(mu: &Composition, p: u64, r: u32) -> Result<PoincareSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let d = mu.weight();
    if d == 0 {
        return Err(Error::InvalidShape("μ must have positive weight".into()));
    }
    let limit = 5_000_000;
    let count = summand_count(d, p, r);
    if count > limit as u128 {
        return Err(Error::ScaleGuard {
            what: "number of summands",
            value: count.min(usize::MAX as u128) as usize,
            limit,
        });
    }
    let mut cache: HashMap<Composition, BigInt> = HashMap::new();
    let mut series = PoincareSeries::zero();
    for m in multisets(d, p.pow(r) as usize) {
        let gamma = gamma_of_multiset(&m);
        let value = match cache.get(&gamma) {
            Some(v) => v.clone(),
            None => {
                let v = BigInt::from(orbit_count(&gamma, mu)?);
                cache.insert(gamma, v.clone());
                v
            }
        };
        series.add_term(2 * m.iter().sum::<usize>(), value);
    }
    Ok(series)
}
