//! The graded `S_d`-bimodule `H*_P(GL, ⊗^{d(r)} gl)`, as a direct sum of
//! degree-shifted elementary bimodules.
//!
//! Model: `⊕_{σ ∈ S_d} E_r^{⊗d}` with basis `(f, σ)`, where
//! `f: {0..d-1} -> {0..p^r-1}` records the degree of each tensor factor.
//! Grouping basis vectors by the multiset of values of `f` gives one
//! elementary bimodule `k[S_d/S_γ] ⊗ k[S_d]` per multiset, with `γ` the
//! multiplicities of the values, placed in degree `2 Σ f`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::combinatorics::{
    binomial, factorial, is_prime, multinomial, words_with_content, Composition, Permutation,
};
use crate::error::{Error, Result};
use crate::poincare::PoincareSeries;

/// `k[S_d/S_γ] ⊗ k[S_d]` with `λ · (e_[τ] ⊗ e_σ) · μ = e_[λτ] ⊗ e_{λσμ}`,
/// concentrated in one even cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryBimodule {
    gamma: Composition,
    cohomological_degree: usize,
}

impl ElementaryBimodule {
    pub fn new(gamma: Composition, cohomological_degree: usize) -> Result<Self> {
        if cohomological_degree % 2 == 1 {
            return Err(Error::OddShift(cohomological_degree));
        }
        Ok(ElementaryBimodule {
            gamma,
            cohomological_degree,
        })
    }

    /// The bimodule in degree 0.
    pub fn in_degree_zero(gamma: Composition) -> Self {
        ElementaryBimodule {
            gamma,
            cohomological_degree: 0,
        }
    }

    pub fn d(&self) -> usize {
        self.gamma.weight()
    }

    pub fn gamma(&self) -> &Composition {
        &self.gamma
    }

    pub fn cohomological_degree(&self) -> usize {
        self.cohomological_degree
    }

    pub fn coset_count(&self) -> u128 {
        multinomial(self.gamma.parts())
    }

    /// `(d! / Π γ_i!) · d!`.
    pub fn dimension(&self) -> u128 {
        self.coset_count() * factorial(self.d())
    }
}

/// Multiplicities of the distinct values of `m`, in increasing value order.
pub fn gamma_of_multiset(m: &[usize]) -> Composition {
    let mut sorted = m.to_vec();
    sorted.sort_unstable();
    let mut parts: Vec<usize> = Vec::new();
    for (i, v) in sorted.iter().enumerate() {
        if i > 0 && sorted[i - 1] == *v {
            *parts.last_mut().expect("nonempty") += 1;
        } else {
            parts.push(1);
        }
    }
    Composition::new(parts).expect("multiplicities are positive")
}

/// All multisets of size `d` over `{0, .., values-1}`, as nondecreasing
/// sequences in lexicographic order.
pub fn multisets(d: usize, values: usize) -> Vec<Vec<usize>> {
    fn fill(d: usize, min: usize, values: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == d {
            out.push(current.clone());
            return;
        }
        for v in min..values {
            current.push(v);
            fill(d, v, values, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    fill(d, 0, values, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub multiset: Vec<usize>,
    pub bimodule: ElementaryBimodule,
}

/// `H*_P(GL, ⊗^{d(r)} gl)` as a list of elementary bimodules, one per
/// multiset of factor degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorGlCohomology {
    pub d: usize,
    pub p: u64,
    pub r: u32,
    pub summands: Vec<Summand>,
}

impl TensorGlCohomology {
    pub fn max_degree(&self) -> usize {
        self.summands
            .iter()
            .map(|s| s.bimodule.cohomological_degree())
            .max()
            .unwrap_or(0)
    }
}

/// Number of multisets the decomposition of `⊗^{d(r)} gl` has.
pub fn summand_count(d: usize, p: u64, r: u32) -> u128 {
    let q = p.pow(r) as usize;
    binomial(q + d - 1, d)
}

pub fn build_tensor_cohomology(d: usize, p: u64, r: u32) -> Result<TensorGlCohomology> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 {
        return Err(Error::InvalidShape("d must be positive".into()));
    }
    let q = p.pow(r) as usize;
    let summands = multisets(d, q)
        .into_iter()
        .map(|m| {
            let bimodule = ElementaryBimodule {
                gamma: gamma_of_multiset(&m),
                cohomological_degree: 2 * m.iter().sum::<usize>(),
            };
            Summand { multiset: m, bimodule }
        })
        .collect();
    Ok(TensorGlCohomology { d, p, r, summands })
}

/// `Σ dim(summand) · t^degree`.
pub fn total_series(t: &TensorGlCohomology) -> PoincareSeries {
    PoincareSeries::from_sparse(t.summands.iter().map(|s| {
        (
            s.bimodule.cohomological_degree(),
            BigInt::from(s.bimodule.dimension()),
        )
    }))
}

/// Explicit basis `([τ], σ)` of an elementary bimodule with lookup tables for
/// the left, right and diagonal actions.
///
/// Cosets are stored as words `f` of content `γ`; the left action is
/// `λ · f = f ∘ λ⁻¹`. With `opposite`, the roles of the two actions are
/// exchanged through inversion: `g ·' x ·' h = h⁻¹ · x · g⁻¹`.
#[derive(Clone, Debug)]
pub struct BimoduleBasis {
    d: usize,
    words: Vec<Vec<u8>>,
    word_index: HashMap<Vec<u8>, u32>,
    perms: Vec<Permutation>,
    perm_index: HashMap<Vec<usize>, u32>,
    opposite: bool,
}

impl BimoduleBasis {
    pub fn new(gamma: &Composition) -> Self {
        let words = words_with_content(gamma.parts());
        let word_index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        let perms = Permutation::all(gamma.weight());
        let perm_index = perms
            .iter()
            .enumerate()
            .map(|(i, s)| (s.images().to_vec(), i as u32))
            .collect();
        BimoduleBasis {
            d: gamma.weight(),
            words,
            word_index,
            perms,
            perm_index,
            opposite: false,
        }
    }

    pub fn opposite(mut self) -> Self {
        self.opposite = !self.opposite;
        self
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.words.len() * self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, word: usize, perm: usize) -> usize {
        word * self.perms.len() + perm
    }

    /// `(coset word, σ)` of a basis index.
    pub fn element(&self, index: usize) -> (&[u8], &Permutation) {
        let n = self.perms.len();
        (&self.words[index / n], &self.perms[index % n])
    }

    fn word_table(&self, g: &Permutation) -> Vec<u32> {
        let inv = g.inverse();
        self.words
            .iter()
            .map(|f| {
                let moved: Vec<u8> = (0..self.d).map(|i| f[inv.apply(i)]).collect();
                self.word_index[&moved]
            })
            .collect()
    }

    fn perm_table(&self, op: impl Fn(&Permutation) -> Permutation) -> Vec<u32> {
        self.perms
            .iter()
            .map(|s| self.perm_index[op(s).images()])
            .collect()
    }

    fn combine(&self, words: Option<&[u32]>, perms: &[u32]) -> Vec<u32> {
        let n = self.perms.len();
        let mut out = Vec::with_capacity(self.len());
        for w in 0..self.words.len() {
            let w2 = words.map_or(w, |t| t[w] as usize);
            for (s, &s2) in perms.iter().enumerate() {
                debug_assert_eq!(out.len(), w * n + s);
                out.push((w2 * n + s2 as usize) as u32);
            }
        }
        out
    }

    fn raw_left(&self, g: &Permutation) -> Vec<u32> {
        let words = self.word_table(g);
        let perms = self.perm_table(|s| g.compose(s));
        self.combine(Some(&words), &perms)
    }

    fn raw_right(&self, g: &Permutation) -> Vec<u32> {
        let perms = self.perm_table(|s| s.compose(g));
        self.combine(None, &perms)
    }

    /// Basis permutation `x ↦ g · x`.
    pub fn left_map(&self, g: &Permutation) -> Vec<u32> {
        if self.opposite {
            self.raw_right(&g.inverse())
        } else {
            self.raw_left(g)
        }
    }

    /// Basis permutation `x ↦ x · g`.
    pub fn right_map(&self, g: &Permutation) -> Vec<u32> {
        if self.opposite {
            self.raw_left(&g.inverse())
        } else {
            self.raw_right(g)
        }
    }

    /// Basis permutation `x ↦ g · x · g⁻¹`.
    pub fn diagonal_map(&self, g: &Permutation) -> Vec<u32> {
        let left = self.left_map(g);
        let right = self.right_map(&g.inverse());
        left.iter().map(|&i| right[i as usize]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_of_multiset(&[0, 0]), comp(&[2]));
        assert_eq!(gamma_of_multiset(&[0, 1]), comp(&[1, 1]));
        assert_eq!(gamma_of_multiset(&[0, 0, 2]), comp(&[2, 1]));
        assert_eq!(gamma_of_multiset(&[3, 1, 3]), comp(&[1, 2]));
    }

    #[test]
    fn tensor_model_d2_p2() {
        let t = build_tensor_cohomology(2, 2, 1).unwrap();
        let shape: Vec<_> = t
            .summands
            .iter()
            .map(|s| (s.bimodule.gamma().clone(), s.bimodule.cohomological_degree()))
            .collect();
        assert_eq!(shape, vec![(comp(&[2]), 0), (comp(&[1, 1]), 2), (comp(&[2]), 4)]);
        assert_eq!(total_series(&t), PoincareSeries::from_coefficients([2, 0, 4, 0, 2]));
    }

    #[test]
    fn tensor_model_d1_and_d2_p3() {
        for (p, r) in [(2u64, 1u32), (3, 1), (5, 2), (3, 0)] {
            let t = build_tensor_cohomology(1, p, r).unwrap();
            assert_eq!(t.summands.len() as u64, p.pow(r));
            assert!(t.summands.iter().all(|s| s.bimodule.dimension() == 1));
            assert_eq!(total_series(&t), crate::poincare::e_r_series(p, r).unwrap());
        }
        let t = build_tensor_cohomology(2, 3, 1).unwrap();
        let degrees: Vec<_> = t.summands.iter().map(|s| s.bimodule.cohomological_degree()).collect();
        assert_eq!(degrees, vec![0, 2, 4, 4, 6, 8]);
        assert!(build_tensor_cohomology(2, 6, 1).is_err());
    }

    #[test]
    fn total_dimension_and_degrees() {
        for d in 1..=6 {
            for p in [2u64, 3, 5] {
                for r in 0..=2 {
                    let t = build_tensor_cohomology(d, p, r).unwrap();
                    let q = p.pow(r) as u128;
                    let expected = factorial(d) * q.pow(d as u32);
                    assert_eq!(total_series(&t).total(), BigInt::from(expected));
                    assert_eq!(t.summands.len() as u128, summand_count(d, p, r));
                    let first = &t.summands[0];
                    assert_eq!(first.bimodule.gamma(), &comp(&[d]));
                    assert_eq!(first.bimodule.cohomological_degree(), 0);
                    assert_eq!(t.max_degree() as u128, 2 * d as u128 * (q - 1));
                    assert!(total_series(&t).vanishes_in_odd_degrees());
                }
            }
        }
    }

    #[test]
    fn actions_are_actions_and_commute() {
        let basis = BimoduleBasis::new(&comp(&[2, 1]));
        assert_eq!(basis.len(), 18);
        let all = Permutation::all(3);
        for g in &all {
            for h in &all {
                let lg = basis.left_map(g);
                let lh = basis.left_map(h);
                let lgh = basis.left_map(&g.compose(h));
                let rg = basis.right_map(g);
                let rh = basis.right_map(h);
                let rgh = basis.right_map(&g.compose(h));
                for x in 0..basis.len() {
                    // g · (h · x) = (gh) · x and (x · g) · h = x · (gh).
                    assert_eq!(lg[lh[x] as usize], lgh[x]);
                    assert_eq!(rh[rg[x] as usize], rgh[x]);
                    assert_eq!(rh[lg[x] as usize], lg[rh[x] as usize]);
                }
            }
        }
    }

    #[test]
    fn odd_degree_rejected() {
        assert_eq!(ElementaryBimodule::new(comp(&[1]), 3), Err(Error::OddShift(3)));
        assert!(build_tensor_cohomology(0, 2, 1).is_err());
    }
}
