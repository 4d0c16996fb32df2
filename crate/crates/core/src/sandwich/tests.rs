use super::*;
use crate::combinatorics::{compositions_of, skew_tuples_of, Permutation};
use crate::linalg::PrimeFieldMatrix;

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn tuple(s: &str) -> SkewTuple {
    s.parse().unwrap()
}

fn module(parts: &[usize], degree: usize) -> ElementaryBimodule {
    ElementaryBimodule::new(comp(parts), degree).unwrap()
}

fn dim(gamma: &[usize], degree: usize, left: &str, right: &str, field: Field) -> usize {
    sandwich_dim(&SandwichQuery::new(module(gamma, degree), tuple(left), tuple(right), field)).unwrap()
}

/// Sandwich dimension by dense linear algebra: nullspace of the stacked
/// operators `(g - sgn g)`, pushed through the explicit projection matrix.
fn dense_sandwich(basis: &BimoduleBasis, groups: &SandwichGroups, p: u64) -> usize {
    let n = basis.len();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut add_operator = |map: Vec<u32>, sign: i64| {
        for b in 0..n {
            // (g x)_{map[b]} = x_b, so each b gives x_b - sign x_{map[b]} = 0.
            let mut row = vec![0i64; n];
            row[b] += 1;
            row[map[b] as usize] -= sign;
            rows.push(row);
        }
    };
    for g in groups.left_alternating.generators() {
        add_operator(basis.left_map(&g), g.sign() as i64);
    }
    for g in groups.right_alternating.generators() {
        let sign = if groups.twist_right { g.sign() as i64 } else { 1 };
        add_operator(basis.right_map(&g), sign);
    }
    let invariants = if rows.is_empty() {
        (0..n)
            .map(|i| {
                let mut v = vec![0u64; n];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        PrimeFieldMatrix::from_int_rows(p, n, &rows).nullspace()
    };
    let classes = coinvariant_projection(basis, &groups.left_coinvariant, &groups.right_coinvariant);
    let image: Vec<Vec<i64>> = invariants
        .iter()
        .map(|v| {
            let mut w = vec![0i64; classes.count];
            for (b, &x) in v.iter().enumerate() {
                w[classes.class_of[b] as usize] += x as i64;
            }
            w
        })
        .collect();
    crate::linalg::rank_mod_p(classes.count, &image, p)
}

#[test]
fn alt_invariant_examples() {
    let basis = BimoduleBasis::new(&comp(&[2]));
    let trivial = YoungSubgroup::trivial(2);
    assert_eq!(alt_invariants(&basis, &trivial, &trivial, Field::Prime(3)).len(), 2);
    let s2 = YoungSubgroup::from_composition(&comp(&[2]));
    let odd = alt_invariants(&basis, &s2, &s2, Field::Prime(3));
    assert_eq!(odd.len(), 1);
    assert_eq!(odd[0].to_dense(2), vec![1, -1]);
    let even = alt_invariants(&basis, &s2, &s2, Field::Prime(2));
    assert_eq!(even.len(), 1);
    assert_eq!(even[0].to_dense(2), vec![1, 1]);
}

#[test]
fn coinvariant_projection_examples() {
    let basis = BimoduleBasis::new(&comp(&[2]));
    let trivial = YoungSubgroup::trivial(2);
    let s2 = YoungSubgroup::from_composition(&comp(&[2]));
    let id = coinvariant_projection(&basis, &trivial, &trivial);
    assert_eq!(id.count, 2);
    assert_eq!(id.class_of, vec![0, 1]);
    assert_eq!(coinvariant_projection(&basis, &s2, &s2).count, 1);
    let basis = BimoduleBasis::new(&comp(&[1, 1]));
    assert_eq!(coinvariant_projection(&basis, &s2, &s2).count, 1);
}

#[test]
fn sandwich_examples() {
    assert_eq!(dim(&[2], 0, "2", "2", Field::Prime(3)), 1);
    assert_eq!(dim(&[2], 0, "1,1", "1,1", Field::Prime(3)), 1);
    assert_eq!(dim(&[1, 1], 2, "2", "2", Field::Prime(3)), 1);
    assert_eq!(dim(&[2], 0, "2", "2", Field::Rational), 1);
    assert_eq!(dim(&[2], 0, "1,1", "1,1", Field::Rational), 1);
    for gamma in compositions_of(3) {
        let m = ElementaryBimodule::in_degree_zero(gamma);
        let q = SandwichQuery::new(m.clone(), tuple("1|1|1"), tuple("1|1|1"), Field::Rational);
        assert_eq!(rational_rank(&q).unwrap() as u128, m.dimension());
    }
    let bad = SandwichQuery::new(module(&[2], 0), tuple("2,1"), tuple("2"), Field::Prime(3));
    assert!(matches!(sandwich_dim(&bad), Err(Error::WeightMismatch { .. })));
}

#[test]
fn sandwich_series_examples() {
    assert_eq!(
        sandwich_series(&Partition::row(2), 3, 1).unwrap(),
        PoincareSeries::from_coefficients([2, 0, 2, 0, 4, 0, 2, 0, 2])
    );
    assert_eq!(
        sandwich_series(&Partition::row(2), 2, 1).unwrap(),
        PoincareSeries::from_coefficients([2, 0, 2, 0, 2])
    );
    for (p, r) in [(2u64, 1u32), (3, 1), (5, 2)] {
        assert_eq!(
            sandwich_series(&Partition::row(1), p, r).unwrap(),
            crate::poincare::e_r_series(p, r).unwrap()
        );
    }
}

#[test]
fn union_find_matches_dense_nullspace() {
    for d in 1..=3 {
        let shapes = skew_tuples_of(d);
        for gamma in compositions_of(d) {
            let basis = BimoduleBasis::new(&gamma);
            for left in &shapes {
                for right in &shapes {
                    for convention in Convention::ALL {
                        let groups = convention.groups(left, right);
                        for p in [2u64, 3, 5] {
                            assert_eq!(
                                sandwich_dim_with_groups(&basis, &groups, Field::Prime(p)),
                                dense_sandwich(&basis, &groups, p),
                                "γ={gamma} {left} / {right} p={p} {convention:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn untwisted_right_breaks_at_mu_2_p_3() {
    let engine = SandwichEngine::new(Convention::UntwistedRight);
    let s2 = comp(&[2]);
    assert_eq!(
        engine.sandwich_series(&s2, 2, 1).unwrap(),
        crate::coinvariants::orbit_series(&Partition::row(2), 2, 1).unwrap()
    );
    assert_ne!(
        engine.sandwich_series(&s2, 3, 1).unwrap(),
        crate::coinvariants::orbit_series(&Partition::row(2), 3, 1).unwrap()
    );
}

#[test]
fn relabelling_boxes_preserves_dimensions() {
    for d in 2..=3 {
        let shapes = skew_tuples_of(d);
        let perms = Permutation::all(d);
        for gamma in compositions_of(d) {
            let basis = BimoduleBasis::new(&gamma);
            for left in &shapes {
                for right in &shapes {
                    let groups = Convention::RowsAlternating.groups(left, right);
                    let expected = sandwich_dim_with_groups(&basis, &groups, Field::Prime(3));
                    for pi in &perms {
                        let moved = groups.relabel(pi);
                        assert_eq!(sandwich_dim_with_groups(&basis, &moved, Field::Prime(3)), expected);
                    }
                }
            }
        }
    }
}

#[test]
fn opposite_bimodule_swaps_shapes() {
    for d in 1..=3 {
        let shapes = skew_tuples_of(d);
        for gamma in compositions_of(d) {
            let basis = BimoduleBasis::new(&gamma);
            let opposite = BimoduleBasis::new(&gamma).opposite();
            for left in &shapes {
                for right in &shapes {
                    for field in [Field::Prime(2), Field::Prime(3), Field::Rational] {
                        let a = sandwich_dim_with_groups(&opposite, &Convention::RowsAlternating.groups(left, right), field);
                        let b = sandwich_dim_with_groups(&basis, &Convention::RowsAlternating.groups(right, left), field);
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }
}

#[test]
fn one_sided_maps_are_isomorphisms_up_to_3_for_odd_p() {
    for d in 1..=3 {
        let shapes = skew_tuples_of(d);
        for gamma in compositions_of(d) {
            let basis = BimoduleBasis::new(&gamma);
            for shape in &shapes {
                for other in &shapes {
                    for h in [row_group(other), column_group(other)] {
                        for p in [3u64, 5] {
                            let c = lemma::coinvariants_commute(&basis, shape, &h, p);
                            assert_eq!(c.source, c.target, "coinvariants γ={gamma} μ={shape} H={h:?} p={p}");
                            let i = lemma::invariants_commute(&basis, shape, &h, p);
                            assert_eq!(i.source, i.target, "invariants γ={gamma} μ={shape} H={h:?} p={p}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn one_sided_maps_sample_at_4_for_odd_p() {
    let shapes = ["2,2", "3,1", "2,1|1", "1,1|2"];
    let others = ["2,1,1", "2|2", "4"];
    for gamma in [comp(&[2, 2]), comp(&[1, 2, 1])] {
        let basis = BimoduleBasis::new(&gamma);
        for s in shapes {
            for o in others {
                let h = row_group(&tuple(o));
                for p in [3u64, 5] {
                    let c = lemma::coinvariants_commute(&basis, &tuple(s), &h, p);
                    assert_eq!(c.source, c.target);
                    let i = lemma::invariants_commute(&basis, &tuple(s), &h, p);
                    assert_eq!(i.source, i.target);
                }
            }
        }
    }
}

// In characteristic 2, s_{(2,1)} k[S_3] is the two-dimensional simple module,
// whose S_3-coinvariants vanish, while s_{(2,1)} of the trivial module is k.
#[test]
fn one_sided_coinvariants_fail_for_2_1_in_characteristic_2() {
    let basis = BimoduleBasis::new(&comp(&[3]));
    let s3 = YoungSubgroup::from_composition(&comp(&[3]));
    let c = lemma::coinvariants_commute(&basis, &tuple("2,1"), &s3, 2);
    assert_eq!((c.source, c.target), (0, 1));
    let i = lemma::invariants_commute(&basis, &tuple("2,1"), &s3, 2);
    assert_eq!((i.source, i.target), (1, 0));
}

#[test]
fn characteristic_2_failures_are_confined_to_2_1() {
    for d in 1..=3 {
        let shapes = skew_tuples_of(d);
        for gamma in compositions_of(d) {
            let basis = BimoduleBasis::new(&gamma);
            for shape in &shapes {
                for other in &shapes {
                    for h in [row_group(other), column_group(other)] {
                        let c = lemma::coinvariants_commute(&basis, shape, &h, 2);
                        let i = lemma::invariants_commute(&basis, shape, &h, 2);
                        if c.source != c.target || i.source != i.target {
                            assert_eq!(shape.to_string(), "2,1", "γ={gamma} H={h:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn scale_guard() {
    let engine = SandwichEngine::default();
    assert!(matches!(
        engine.sandwich_series(&comp(&[6]), 2, 1),
        Err(Error::ScaleGuard { .. })
    ));
    assert!(SandwichEngine::default().with_max_degree(6).basis(&comp(&[6])).is_ok());
}
