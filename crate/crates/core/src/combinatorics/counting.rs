use std::collections::HashMap;

use num_bigint::BigUint;

use super::permutation::{next_permutation, Permutation};
use super::shapes::Composition;

/// Degrees up to this bound use direct coset enumeration in `fixed_cosets`.
pub const ENUMERATION_THRESHOLD: usize = 6;

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| {
        acc.checked_mul(k).expect("factorial overflows u128")
    })
}

pub fn factorial_big(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `(Σ parts)! / Π parts!`: the number of left cosets of a Young subgroup.
pub fn multinomial(parts: &[usize]) -> u128 {
    let mut remaining: usize = parts.iter().sum();
    let mut out = 1u128;
    for &k in parts {
        out = out
            .checked_mul(binomial(remaining, k))
            .expect("multinomial overflows u128");
        remaining -= k;
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Words over `{0, .., n-1}` in which the letter `i` occurs `content[i]`
/// times, in lexicographic order. These index the left cosets of `S_content`
/// in `S_d`: the coset `τ S_γ` is the word `i ↦ block(τ⁻¹(i))`.
pub fn words_with_content(content: &[usize]) -> Vec<Vec<u8>> {
    let mut word: Vec<u8> = content
        .iter()
        .enumerate()
        .flat_map(|(letter, &count)| std::iter::repeat(letter as u8).take(count))
        .collect();
    let mut out = vec![word.clone()];
    while next_permutation(&mut word) {
        out.push(word.clone());
    }
    out
}

/// Number of left cosets `τ S_γ` fixed by left multiplication by `g`.
///
/// Uses direct enumeration of the cosets up to `ENUMERATION_THRESHOLD`, the
/// cycle-type count beyond.
pub fn fixed_cosets(g: &Permutation, gamma: &Composition) -> u128 {
    if g.degree() <= ENUMERATION_THRESHOLD {
        fixed_cosets_by_enumeration(g, gamma)
    } else {
        fixed_cosets_by_cycle_type(g, gamma)
    }
}

pub fn fixed_cosets_by_enumeration(g: &Permutation, gamma: &Composition) -> u128 {
    assert_eq!(gamma.weight(), g.degree(), "weight of γ must equal the degree of g");
    // g fixes the word f iff f ∘ g⁻¹ = f, i.e. f is constant along g.
    words_with_content(gamma.parts())
        .iter()
        .filter(|f| (0..g.degree()).all(|i| f[g.apply(i)] == f[i]))
        .count() as u128
}

/// Counts ways of distributing the cycles of `g` into the blocks of `γ`
/// so that each block is filled exactly.
pub fn fixed_cosets_by_cycle_type(g: &Permutation, gamma: &Composition) -> u128 {
    assert_eq!(gamma.weight(), g.degree(), "weight of γ must equal the degree of g");
    let mut states: HashMap<Vec<usize>, u128> = HashMap::new();
    states.insert(gamma.parts().to_vec(), 1);
    for cycle in g.cycles() {
        let len = cycle.len();
        let mut next: HashMap<Vec<usize>, u128> = HashMap::new();
        for (room, count) in states {
            for bin in 0..room.len() {
                if room[bin] >= len {
                    let mut r = room.clone();
                    r[bin] -= len;
                    *next.entry(r).or_insert(0) += count;
                }
            }
        }
        states = next;
    }
    states
        .into_iter()
        .filter(|(room, _)| room.iter().all(|&r| r == 0))
        .map(|(_, c)| c)
        .sum()
}

/// Order of the centralizer of `g` in `S_d`: `Π i^{a_i} a_i!` where `a_i`
/// counts the `i`-cycles.
pub fn centralizer_order(g: &Permutation) -> u128 {
    let mut multiplicity: HashMap<usize, usize> = HashMap::new();
    for c in g.cycles() {
        *multiplicity.entry(c.len()).or_insert(0) += 1;
    }
    multiplicity.into_iter().fold(1u128, |acc, (len, a)| {
        acc * (len as u128).pow(a as u32) * factorial(a)
    })
}
