//! Dimensions of `s_λ M s_λ'`: the image of the sign-twisted invariants of an
//! elementary bimodule `M` in its two-sided coinvariants.
//!
//! With the standard convention the twisted invariants are taken under the
//! row stabilizers of the two shapes and the coinvariants under their column
//! stabilizers, all in row-major box numbering. Summing over the summands
//! of `H*_P(GL, ⊗^{d(r)} gl)` and over tuples `(λ_1 | .. | λ_n)` with
//! `λ_i ⊢ μ_i` gives a second route to the series of `S^{μ(r)} gl`.

pub mod lemma;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::action::{orbits, signed_orbit_sums, Generator, Orbits, SignedVector};
use crate::combinatorics::{
    column_group, consecutive_conjugate_group, is_prime, row_group, tuples_refining, Composition,
    Partition, SkewTuple, YoungSubgroup,
};
use crate::error::{Error, Result};
use crate::linalg::{rank_over, Field};
use crate::model::{gamma_of_multiset, multisets, BimoduleBasis, ElementaryBimodule};
use crate::poincare::PoincareSeries;

/// Default bound on `d` for sandwich computations (basis size `≤ 14400`).
pub const DEFAULT_MAX_DEGREE: usize = 5;

type GroupOf = fn(&SkewTuple) -> YoungSubgroup;

/// Which groups of a shape carry the sign-twisted invariants and which the
/// coinvariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Twisted invariants under rows, coinvariants under columns.
    RowsAlternating,
    /// Rows and columns exchanged.
    ColumnsAlternating,
    /// Coinvariants under the consecutive Young subgroup of the conjugate
    /// shape instead of the column stabilizer.
    ConsecutiveConjugate,
    /// Negative control: the right-hand invariants lose their sign twist.
    UntwistedRight,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention::RowsAlternating,
        Convention::ColumnsAlternating,
        Convention::ConsecutiveConjugate,
        Convention::UntwistedRight,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Convention::RowsAlternating => "rows-alternating",
            Convention::ColumnsAlternating => "columns-alternating",
            Convention::ConsecutiveConjugate => "consecutive-conjugate",
            Convention::UntwistedRight => "untwisted-right",
        }
    }

    /// The groups acting on `M` for the query `s_left M s_right`.
    pub fn groups(&self, left: &SkewTuple, right: &SkewTuple) -> SandwichGroups {
        let (alt, coinv): (GroupOf, GroupOf) = match self {
            Convention::RowsAlternating | Convention::UntwistedRight => (row_group, column_group),
            Convention::ColumnsAlternating => (column_group, row_group),
            Convention::ConsecutiveConjugate => (row_group, consecutive_conjugate_group),
        };
        SandwichGroups {
            left_alternating: alt(left),
            right_alternating: alt(right),
            left_coinvariant: coinv(left),
            right_coinvariant: coinv(right),
            twist_right: *self != Convention::UntwistedRight,
        }
    }
}

/// The four groups of a sandwich: two acting on the left of `M`, two on the
/// right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichGroups {
    pub left_alternating: YoungSubgroup,
    pub right_alternating: YoungSubgroup,
    pub left_coinvariant: YoungSubgroup,
    pub right_coinvariant: YoungSubgroup,
    pub twist_right: bool,
}

impl SandwichGroups {
    /// Every group conjugated by `pi`.
    pub fn relabel(&self, pi: &crate::combinatorics::Permutation) -> SandwichGroups {
        SandwichGroups {
            left_alternating: self.left_alternating.conjugate_by(pi),
            right_alternating: self.right_alternating.conjugate_by(pi),
            left_coinvariant: self.left_coinvariant.conjugate_by(pi),
            right_coinvariant: self.right_coinvariant.conjugate_by(pi),
            twist_right: self.twist_right,
        }
    }
}

/// `s_left M s_right` over `field`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichQuery {
    pub module: ElementaryBimodule,
    pub left: SkewTuple,
    pub right: SkewTuple,
    pub field: Field,
}

impl SandwichQuery {
    pub fn new(module: ElementaryBimodule, left: SkewTuple, right: SkewTuple, field: Field) -> Self {
        SandwichQuery {
            module,
            left,
            right,
            field,
        }
    }

    fn validate(&self) -> Result<()> {
        let d = self.module.d();
        for shape in [&self.left, &self.right] {
            if shape.weight() != d {
                return Err(Error::WeightMismatch {
                    left: shape.weight(),
                    right: d,
                });
            }
        }
        Ok(())
    }
}

pub(crate) fn generators(
    group: &YoungSubgroup,
    twisted: bool,
    map: impl Fn(&crate::combinatorics::Permutation) -> Vec<u32>,
) -> Vec<Generator> {
    group
        .generators()
        .iter()
        .map(|g| Generator {
            map: map(g),
            negative: twisted && g.sign() < 0,
        })
        .collect()
}

/// Basis of `{x ∈ M : g·x = sgn(g) x for g ∈ left, x·h = sgn(h) x for h ∈ right}`.
pub fn alt_invariants(
    basis: &BimoduleBasis,
    left: &YoungSubgroup,
    right: &YoungSubgroup,
    field: Field,
) -> Vec<SignedVector> {
    alt_invariants_twisted(basis, left, right, true, field)
}

fn alt_invariants_twisted(
    basis: &BimoduleBasis,
    left: &YoungSubgroup,
    right: &YoungSubgroup,
    twist_right: bool,
    field: Field,
) -> Vec<SignedVector> {
    let mut gens = generators(left, true, |g| basis.left_map(g));
    gens.extend(generators(right, twist_right, |g| basis.right_map(g)));
    signed_orbit_sums(basis.len(), &gens, field.characteristic())
}

/// The projection `M → (_{left} M)_{right}`. The quotient has the orbits of
/// `left × right` as basis, and a basis vector maps to its orbit.
pub fn coinvariant_projection(
    basis: &BimoduleBasis,
    left: &YoungSubgroup,
    right: &YoungSubgroup,
) -> Orbits {
    let mut maps: Vec<Vec<u32>> = left.generators().iter().map(|g| basis.left_map(g)).collect();
    maps.extend(right.generators().iter().map(|g| basis.right_map(g)));
    orbits(basis.len(), maps.iter().map(Vec::as_slice))
}

/// Rank of the images of `vectors` under `projection`.
///
/// The matrix is block diagonal after grouping columns that share a target
/// orbit, and each block is ranked on its own.
pub fn image_rank(vectors: &[SignedVector], projection: &Orbits, field: Field) -> usize {
    let columns: Vec<Vec<(u32, i64)>> = vectors
        .iter()
        .map(|v| {
            let mut entries: HashMap<u32, i64> = HashMap::new();
            for &(b, neg) in &v.terms {
                *entries.entry(projection.class_of[b as usize]).or_insert(0) += if neg { -1 } else { 1 };
            }
            let mut entries: Vec<(u32, i64)> = entries.into_iter().filter(|&(_, x)| x != 0).collect();
            entries.sort_unstable();
            entries
        })
        .collect();

    // Union columns through shared rows.
    let mut owner: Vec<Option<usize>> = vec![None; projection.count];
    let mut parent: Vec<usize> = (0..columns.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (j, col) in columns.iter().enumerate() {
        for &(row, _) in col {
            match owner[row as usize] {
                None => owner[row as usize] = Some(j),
                Some(k) => {
                    let (a, b) = (root(&mut parent, j), root(&mut parent, k));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
    }
    let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
    for j in 0..columns.len() {
        if columns[j].is_empty() {
            continue;
        }
        let r = root(&mut parent, j);
        blocks.entry(r).or_default().push(j);
    }

    let mut keys: Vec<usize> = blocks.keys().copied().collect();
    keys.sort_unstable();
    keys.into_iter()
        .map(|k| {
            let cols = &blocks[&k];
            let mut rows: Vec<u32> = cols
                .iter()
                .flat_map(|&j| columns[j].iter().map(|&(r, _)| r))
                .collect();
            rows.sort_unstable();
            rows.dedup();
            if cols.len() == 1 || rows.len() == 1 {
                // A single nonzero column or row: rank one unless every entry
                // vanishes in the field.
                let p = field.characteristic() as i64;
                let nonzero = cols.iter().any(|&j| {
                    columns[j].iter().any(|&(_, x)| p == 0 || x.rem_euclid(p) != 0)
                });
                return usize::from(nonzero);
            }
            let position: HashMap<u32, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
            let matrix: Vec<Vec<i64>> = cols
                .iter()
                .map(|&j| {
                    let mut v = vec![0i64; rows.len()];
                    for &(r, x) in &columns[j] {
                        v[position[&r]] = x;
                    }
                    v
                })
                .collect();
            rank_over(field, rows.len(), &matrix)
        })
        .sum()
}

/// Sandwich dimension for explicit groups.
pub fn sandwich_dim_with_groups(basis: &BimoduleBasis, groups: &SandwichGroups, field: Field) -> usize {
    let alt = alt_invariants_twisted(
        basis,
        &groups.left_alternating,
        &groups.right_alternating,
        groups.twist_right,
        field,
    );
    if alt.is_empty() {
        return 0;
    }
    let projection = coinvariant_projection(basis, &groups.left_coinvariant, &groups.right_coinvariant);
    image_rank(&alt, &projection, field)
}

/// `dim s_left M s_right` with the standard convention.
pub fn sandwich_dim(q: &SandwichQuery) -> Result<usize> {
    SandwichEngine::default().sandwich_dim(q)
}

/// Rank of the sandwich over `Z`, i.e. its dimension over `Q`.
pub fn rational_rank(q: &SandwichQuery) -> Result<usize> {
    let mut q = q.clone();
    q.field = Field::Rational;
    sandwich_dim(&q)
}

/// `Σ_m Σ_{λ_i ⊢ μ_i} dim (s_Λ B_m) s_Λ · t^{2|m|}` over `F_p`.
pub fn sandwich_series(mu: &Partition, p: u64, r: u32) -> Result<PoincareSeries> {
    SandwichEngine::default().sandwich_series(&mu.to_composition(), p, r)
}

/// Sandwich computations with a fixed convention, a scale guard and a
/// cache of bimodule bases.
pub struct SandwichEngine {
    convention: Convention,
    max_degree: usize,
    bases: Mutex<HashMap<Composition, Arc<BimoduleBasis>>>,
}

impl Default for SandwichEngine {
    fn default() -> Self {
        Self::new(Convention::RowsAlternating)
    }
}

impl SandwichEngine {
    pub fn new(convention: Convention) -> Self {
        SandwichEngine {
            convention,
            max_degree: DEFAULT_MAX_DEGREE,
            bases: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    fn guard(&self, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::ScaleGuard {
                what: "sandwich degree d",
                value: d,
                limit: self.max_degree,
            });
        }
        Ok(())
    }

    pub fn basis(&self, gamma: &Composition) -> Result<Arc<BimoduleBasis>> {
        self.guard(gamma.weight())?;
        if let Some(b) = self.bases.lock().expect("basis cache").get(gamma) {
            return Ok(Arc::clone(b));
        }
        let basis = Arc::new(BimoduleBasis::new(gamma));
        self.bases
            .lock()
            .expect("basis cache")
            .entry(gamma.clone())
            .or_insert_with(|| Arc::clone(&basis));
        Ok(basis)
    }

    pub fn sandwich_dim(&self, q: &SandwichQuery) -> Result<usize> {
        q.validate()?;
        let basis = self.basis(q.module.gamma())?;
        let groups = self.convention.groups(&q.left, &q.right);
        Ok(sandwich_dim_with_groups(&basis, &groups, q.field))
    }

    fn summand_dims(
        &self,
        d: usize,
        p: u64,
        r: u32,
        value: impl Fn(&Composition) -> Result<usize> + Sync,
    ) -> Result<PoincareSeries> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        self.guard(d)?;
        let all = multisets(d, p.pow(r) as usize);
        let mut gammas: Vec<Composition> = all.iter().map(|m| gamma_of_multiset(m)).collect();
        gammas.sort();
        gammas.dedup();
        let values: HashMap<Composition, usize> = gammas
            .par_iter()
            .map(|g| value(g).map(|v| (g.clone(), v)))
            .collect::<Result<_>>()?;
        Ok(PoincareSeries::from_sparse(all.iter().map(|m| {
            (2 * m.iter().sum::<usize>(), values[&gamma_of_multiset(m)] as u64)
        })))
    }

    /// The sandwich route to the series of `S^{μ(r)} gl`, for any ordering of
    /// the parts of `μ`.
    pub fn sandwich_series(&self, mu: &Composition, p: u64, r: u32) -> Result<PoincareSeries> {
        let field = Field::prime(p)?;
        let shapes = tuples_refining(mu.parts());
        self.summand_dims(mu.weight(), p, r, |gamma| {
            let basis = self.basis(gamma)?;
            Ok(shapes
                .iter()
                .map(|shape| {
                    let groups = self.convention.groups(shape, shape);
                    sandwich_dim_with_groups(&basis, &groups, field)
                })
                .sum())
        })
    }

    /// `Σ_m dim (s_left B_m) s_right · t^{2|m|}` over `F_p`.
    pub fn ext_series(&self, left: &SkewTuple, right: &SkewTuple, p: u64, r: u32) -> Result<PoincareSeries> {
        if left.weight() != right.weight() {
            return Err(Error::WeightMismatch {
                left: left.weight(),
                right: right.weight(),
            });
        }
        if left.weight() == 0 {
            return Err(Error::InvalidShape("shapes must have positive weight".into()));
        }
        let field = Field::prime(p)?;
        let groups = self.convention.groups(left, right);
        self.summand_dims(left.weight(), p, r, |gamma| {
            let basis = self.basis(gamma)?;
            Ok(sandwich_dim_with_groups(&basis, &groups, field))
        })
    }
}

#[cfg(test)]
mod tests;
