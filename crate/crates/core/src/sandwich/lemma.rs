//! One-sided commutation checks over `F_p`.
//!
//! For the left sandwich `s_μ N` (twisted invariants under the rows of `μ`
//! mapped into coinvariants under its columns) and a Young subgroup `H`
//! acting on the right of `M`, the natural maps
//! `(s_μ M)_H → s_μ (M_H)` and `s_μ (M^{alt H}) → (s_μ M)^{alt H}` are
//! isomorphisms. Both sides are computed here with dense linear algebra.

use crate::action::{orbits, signed_orbit_sums, Generator, Orbits, SignedVector};
use crate::combinatorics::{column_group, row_group, SkewTuple, YoungSubgroup};
use crate::linalg::{rank_mod_p, Field};
use crate::model::BimoduleBasis;

use super::{alt_invariants, coinvariant_projection, generators, image_rank};

/// Dimensions of the source and target of one natural map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapDims {
    pub source: usize,
    pub target: usize,
}

fn representatives(o: &Orbits) -> Vec<u32> {
    let mut reps = vec![u32::MAX; o.count];
    for (b, &c) in o.class_of.iter().enumerate() {
        if reps[c as usize] == u32::MAX {
            reps[c as usize] = b as u32;
        }
    }
    reps
}

/// Action of a basis permutation on the orbit classes of a commuting action.
fn induced(o: &Orbits, reps: &[u32], map: &[u32]) -> Vec<u32> {
    reps.iter().map(|&b| o.class_of[map[b as usize] as usize]).collect()
}

fn project(v: &SignedVector, o: &Orbits) -> Vec<i64> {
    let mut out = vec![0; o.count];
    for &(b, neg) in &v.terms {
        out[o.class_of[b as usize] as usize] += if neg { -1 } else { 1 };
    }
    out
}

/// `v - g·v`, where `g·e_b = e_{map[b]}`.
fn minus_translate(v: &[i64], map: &[u32]) -> Vec<i64> {
    let mut out = v.to_vec();
    for (b, &x) in v.iter().enumerate() {
        out[map[b] as usize] -= x;
    }
    out
}

fn stacked(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter().chain(b).cloned().collect()
}

/// Image of the left twisted invariants in the left coinvariants, as
/// vectors over the left coinvariant classes.
fn left_sandwich(basis: &BimoduleBasis, shape: &SkewTuple, p: u64) -> (Orbits, Vec<Vec<i64>>) {
    let d = basis.d();
    let coinv = coinvariant_projection(basis, &column_group(shape), &YoungSubgroup::trivial(d));
    let alt = alt_invariants(basis, &row_group(shape), &YoungSubgroup::trivial(d), Field::Prime(p));
    let image = alt.iter().map(|v| project(v, &coinv)).collect();
    (coinv, image)
}

/// `(s_μ M)_H` against `s_μ (M_H)`.
pub fn coinvariants_commute(basis: &BimoduleBasis, shape: &SkewTuple, h: &YoungSubgroup, p: u64) -> MapDims {
    let (coinv, image) = left_sandwich(basis, shape, p);
    let reps = representatives(&coinv);
    let h_on_classes: Vec<Vec<u32>> = h
        .generators()
        .iter()
        .map(|g| induced(&coinv, &reps, &basis.right_map(g)))
        .collect();
    let differences: Vec<Vec<i64>> = image
        .iter()
        .flat_map(|v| h_on_classes.iter().map(move |m| minus_translate(v, m)))
        .collect();
    let source = rank_mod_p(coinv.count, &image, p) - rank_mod_p(coinv.count, &differences, p);

    let quotient = coinvariant_projection(basis, &YoungSubgroup::trivial(basis.d()), h);
    let reps = representatives(&quotient);
    let rows = generators(&row_group(shape), true, |g| induced(&quotient, &reps, &basis.left_map(g)));
    let twisted = signed_orbit_sums(quotient.count, &rows, p);
    let columns: Vec<Vec<u32>> = column_group(shape)
        .generators()
        .iter()
        .map(|g| induced(&quotient, &reps, &basis.left_map(g)))
        .collect();
    let target_projection = orbits(quotient.count, columns.iter().map(Vec::as_slice));
    let target = image_rank(&twisted, &target_projection, Field::Prime(p));
    MapDims { source, target }
}

/// `s_μ (M^{alt H})` against `(s_μ M)^{alt H}`.
pub fn invariants_commute(basis: &BimoduleBasis, shape: &SkewTuple, h: &YoungSubgroup, p: u64) -> MapDims {
    let n = basis.len();
    let field = Field::Prime(p);
    let right_twisted: Vec<Generator> = generators(h, true, |g| basis.right_map(g));
    let invariants: Vec<Vec<i64>> = signed_orbit_sums(n, &right_twisted, p)
        .iter()
        .map(|v| v.to_dense(n))
        .collect();
    let both: Vec<Vec<i64>> = alt_invariants(basis, &row_group(shape), h, field)
        .iter()
        .map(|v| v.to_dense(n))
        .collect();
    let column_maps: Vec<Vec<u32>> = column_group(shape)
        .generators()
        .iter()
        .map(|g| basis.left_map(g))
        .collect();
    let kernel: Vec<Vec<i64>> = invariants
        .iter()
        .flat_map(|v| column_maps.iter().map(move |m| minus_translate(v, m)))
        .collect();
    let source = rank_mod_p(n, &stacked(&both, &kernel), p) - rank_mod_p(n, &kernel, p);

    let (coinv, image) = left_sandwich(basis, shape, p);
    let reps = representatives(&coinv);
    let h_on_classes = generators(h, true, |g| induced(&coinv, &reps, &basis.right_map(g)));
    let twisted_classes: Vec<Vec<i64>> = signed_orbit_sums(coinv.count, &h_on_classes, p)
        .iter()
        .map(|v| v.to_dense(coinv.count))
        .collect();
    let m = coinv.count;
    let target = rank_mod_p(m, &image, p) + rank_mod_p(m, &twisted_classes, p)
        - rank_mod_p(m, &stacked(&image, &twisted_classes), p);
    MapDims { source, target }
}
