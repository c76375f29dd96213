//! Algebraic law and oracle-agreement properties across the crate.

use proptest::prelude::*;
use residua::oracle::{brute_greatest_scalar, Grid};
use residua::{pi_step, Interval, IntervalMatrix, Matrix, Scalar, SemiringTag};

const TAGS: [SemiringTag; 2] = [SemiringTag::MaxPlus, SemiringTag::MaxMin];

fn grid_scalars() -> Vec<Scalar> {
    Grid::default_grid().values().to_vec()
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => Just(Scalar::NegInf),
        8 => (-10i64..=10).prop_map(Scalar::Finite),
        1 => Just(Scalar::PosInf),
    ]
}

fn tag_strategy() -> impl Strategy<Value = SemiringTag> {
    prop_oneof![Just(SemiringTag::MaxPlus), Just(SemiringTag::MaxMin)]
}

fn interval_strategy(tag: SemiringTag) -> impl Strategy<Value = Interval> {
    (scalar_strategy(), scalar_strategy())
        .prop_map(move |(a, b)| Interval::new(tag, a.min(b), a.max(b)).unwrap())
}

fn matrix_strategy(tag: SemiringTag, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar_strategy(), rows * cols)
        .prop_map(move |entries| Matrix::new(tag, rows, cols, entries).unwrap())
}

fn interval_matrix_strategy(
    tag: SemiringTag,
    rows: usize,
    cols: usize,
) -> impl Strategy<Value = IntervalMatrix> {
    proptest::collection::vec(interval_strategy(tag), rows * cols)
        .prop_map(move |entries| IntervalMatrix::new(tag, rows, cols, entries).unwrap())
}

proptest! {
    #[test]
    fn scalar_semiring_laws(tag in tag_strategy(), a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        // ⊕ laws
        prop_assert_eq!(tag.add(a, a), a);
        prop_assert_eq!(tag.add(a, b), tag.add(b, a));
        prop_assert_eq!(tag.add(tag.add(a, b), c), tag.add(a, tag.add(b, c)));
        prop_assert_eq!(tag.add(tag.zero(), a), a);
        // ⊗ laws
        let ab = tag.mul(a, b).unwrap();
        prop_assert_eq!(tag.mul(ab, c).unwrap(), tag.mul(a, tag.mul(b, c).unwrap()).unwrap());
        prop_assert_eq!(tag.mul(tag.one(), a).unwrap(), a);
        prop_assert_eq!(tag.mul(a, tag.one()).unwrap(), a);
        prop_assert_eq!(tag.mul(tag.zero(), a).unwrap(), tag.zero());
        prop_assert_eq!(tag.mul(a, tag.zero()).unwrap(), tag.zero());
        // distributivity
        prop_assert_eq!(
            tag.mul(a, tag.add(b, c)).unwrap(),
            tag.add(tag.mul(a, b).unwrap(), tag.mul(a, c).unwrap())
        );
    }

    #[test]
    fn scalar_order_is_a_partial_order(tag in tag_strategy(), a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert!(tag.leq(a, a));
        if tag.leq(a, b) && tag.leq(b, a) {
            prop_assert_eq!(a, b);
        }
        if tag.leq(a, b) && tag.leq(b, c) {
            prop_assert!(tag.leq(a, c));
        }
        prop_assert_eq!(tag.leq(a, b), tag.add(a, b) == b);
    }

    #[test]
    fn interval_galois_laws(tag in tag_strategy(), seed in (scalar_strategy(), scalar_strategy(), scalar_strategy(), scalar_strategy(), scalar_strategy(), scalar_strategy())) {
        let (a1, a2, b1, b2, x1, x2) = seed;
        let a = Interval::new(tag, a1.min(a2), a1.max(a2)).unwrap();
        let b = Interval::new(tag, b1.min(b2), b1.max(b2)).unwrap();
        let x = Interval::new(tag, x1.min(x2), x1.max(x2)).unwrap();
        let r = a.left_residual(&b).unwrap();
        prop_assert!(a.mul(&r).unwrap().leq(&b).unwrap());
        let image = a.mul(&x).unwrap();
        prop_assert!(x.leq(&a.left_residual(&image).unwrap()).unwrap());
    }

    #[test]
    fn interval_operations_preserve_validity(tag in tag_strategy(), seed in (scalar_strategy(), scalar_strategy(), scalar_strategy(), scalar_strategy())) {
        let (a1, a2, b1, b2) = seed;
        let a = Interval::new(tag, a1.min(a2), a1.max(a2)).unwrap();
        let b = Interval::new(tag, b1.min(b2), b1.max(b2)).unwrap();
        for result in [a.add(&b).unwrap(), a.mul(&b).unwrap(), a.left_residual(&b).unwrap()] {
            prop_assert!(tag.leq(result.lower(), result.upper()));
        }
    }

    #[test]
    fn interval_inclusion_isotonicity(tag in tag_strategy(), seed in proptest::collection::vec(scalar_strategy(), 8)) {
        // Build x ⊂ x2 and y ⊂ y2 by widening.
        let s = |i: usize| (seed[2 * i].min(seed[2 * i + 1]), seed[2 * i].max(seed[2 * i + 1]));
        let (xl, xu) = s(0);
        let (wl, wu) = s(1);
        let (yl, yu) = s(2);
        let (vl, vu) = s(3);
        let x = Interval::new(tag, xl, xu).unwrap();
        let x2 = Interval::new(tag, xl.min(wl), xu.max(wu)).unwrap();
        let y = Interval::new(tag, yl, yu).unwrap();
        let y2 = Interval::new(tag, yl.min(vl), yu.max(vu)).unwrap();
        prop_assert!(x.subset(&x2).unwrap());
        prop_assert!(y.subset(&y2).unwrap());
        prop_assert!(x.add(&y).unwrap().subset(&x2.add(&y2).unwrap()).unwrap());
        prop_assert!(x.mul(&y).unwrap().subset(&x2.mul(&y2).unwrap()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_product_laws((tag, a, b, c, d) in tag_strategy().prop_flat_map(|tag| {
        (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(move |(n, k, m, p)| {
            (
                Just(tag),
                matrix_strategy(tag, n, k),
                matrix_strategy(tag, k, m),
                matrix_strategy(tag, m, p),
                matrix_strategy(tag, k, m),
            )
        })
    })) {
        let _ = tag;
        // associativity
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        // distributivity over ⊕
        prop_assert_eq!(
            a.mul(&b.add(&d).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&d).unwrap()).unwrap()
        );
    }

    #[test]
    fn matrix_residual_galois_laws((a, b, x) in tag_strategy().prop_flat_map(|tag| {
        (1usize..=3, 1usize..=3, 1usize..=2).prop_flat_map(move |(n, p, m)| {
            (
                matrix_strategy(tag, n, p),
                matrix_strategy(tag, n, m),
                matrix_strategy(tag, p, m),
            )
        })
    })) {
        let r = a.left_residual(&b).unwrap();
        prop_assert!(a.mul(&r).unwrap().leq(&b).unwrap());
        // every subsolution is dominated
        if a.mul(&x).unwrap().leq(&b).unwrap() {
            prop_assert!(x.leq(&r).unwrap());
        }
        // and the image point maps back above the original
        let image = a.mul(&x).unwrap();
        prop_assert!(x.leq(&a.left_residual(&image).unwrap()).unwrap());
    }

    #[test]
    fn matrix_residual_is_monotone_in_target((a, b, b2) in tag_strategy().prop_flat_map(|tag| {
        (1usize..=3, 1usize..=3, 1usize..=2).prop_flat_map(move |(n, p, m)| {
            (
                matrix_strategy(tag, n, p),
                matrix_strategy(tag, n, m),
                matrix_strategy(tag, n, m),
            )
        })
    })) {
        let bigger = b.add(&b2).unwrap();
        prop_assert!(a.left_residual(&b).unwrap().leq(&a.left_residual(&bigger).unwrap()).unwrap());
    }

    #[test]
    fn right_residual_matches_transposed_left((b, c) in tag_strategy().prop_flat_map(|tag| {
        (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(move |(n, m, p)| {
            (matrix_strategy(tag, n, m), matrix_strategy(tag, p, m))
        })
    })) {
        let direct = b.right_residual(&c).unwrap();
        let via_transpose = c.transpose().left_residual(&b.transpose()).unwrap().transpose();
        prop_assert_eq!(direct, via_transpose);
    }

    #[test]
    fn interval_matrix_bounds_match_point_kernels((a, b) in tag_strategy().prop_flat_map(|tag| {
        (interval_matrix_strategy(tag, 3, 3), interval_matrix_strategy(tag, 3, 3))
    })) {
        let product = a.mul(&b).unwrap();
        prop_assert_eq!(product.lower_matrix(), a.lower_matrix().mul(&b.lower_matrix()).unwrap());
        prop_assert_eq!(product.upper_matrix(), a.upper_matrix().mul(&b.upper_matrix()).unwrap());
        let sum = a.add(&b).unwrap();
        prop_assert_eq!(sum.lower_matrix(), a.lower_matrix().add(&b.lower_matrix()).unwrap());
        prop_assert_eq!(sum.upper_matrix(), a.upper_matrix().add(&b.upper_matrix()).unwrap());
    }

    #[test]
    fn interval_matrix_residual_is_greatest((a, b, x) in tag_strategy().prop_flat_map(|tag| {
        (1usize..=3, 1usize..=2).prop_flat_map(move |(n, p)| {
            (
                interval_matrix_strategy(tag, n, p),
                interval_matrix_strategy(tag, n, 1),
                interval_matrix_strategy(tag, p, 1),
            )
        })
    })) {
        let r = a.left_residual(&b).unwrap();
        prop_assert!(a.mul(&r).unwrap().leq(&b).unwrap());
        if a.mul(&x).unwrap().leq(&b).unwrap() {
            prop_assert!(x.leq(&r).unwrap());
        }
    }

    #[test]
    fn pi_is_anti_extensive_after_one_application((a, b, x) in tag_strategy().prop_flat_map(|tag| {
        (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(move |(n, p, q)| {
            (
                matrix_strategy(tag, n, p),
                matrix_strategy(tag, n, q),
                matrix_strategy(tag, p, 1),
            )
        })
    })) {
        let once = pi_step(&a, &b, &x).unwrap();
        let twice = pi_step(&a, &b, &once).unwrap();
        prop_assert!(twice.leq(&once).unwrap());
    }
}

/// Exhaustive oracle agreement on the default grid: the analytic residual
/// equals the brute-force greatest feasible grid element for every pair.
#[test]
fn scalar_residual_matches_oracle_exhaustively() {
    let grid = Grid::default_grid();
    for tag in TAGS {
        for &a in &grid_scalars() {
            for &b in &grid_scalars() {
                let analytic = tag.left_residual(a, b).unwrap();
                let brute = brute_greatest_scalar(tag, a, b, &grid);
                if grid.values().contains(&analytic) {
                    assert_eq!(analytic, brute, "{tag}: {a}∖{b}");
                } else {
                    // feasibility is x ⪯ a∖b, so off-grid the oracle returns
                    // the greatest grid element below the analytic residual
                    let expected = grid
                        .values()
                        .iter()
                        .copied()
                        .filter(|&x| tag.leq(x, analytic))
                        .fold(Scalar::NegInf, Scalar::max);
                    assert_eq!(brute, expected, "{tag}: {a}∖{b} = {analytic}");
                }
            }
        }
    }
}

/// Distributivity survives the interval lifting, exhaustively on a coarse
/// sub-grid.
#[test]
fn interval_distributivity_on_coarse_grid() {
    let coarse: Vec<Scalar> = vec![
        Scalar::NegInf,
        Scalar::Finite(-2),
        Scalar::Finite(0),
        Scalar::Finite(3),
        Scalar::PosInf,
    ];
    let mut intervals = Vec::new();
    for tag in TAGS {
        intervals.clear();
        for (i, &lo) in coarse.iter().enumerate() {
            for &hi in &coarse[i..] {
                intervals.push(Interval::new(tag, lo, hi).unwrap());
            }
        }
        for x in &intervals {
            for y in &intervals {
                for z in &intervals {
                    let lhs = x.mul(&y.add(z).unwrap()).unwrap();
                    let rhs = x.mul(y).unwrap().add(&x.mul(z).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{tag}: {x:?} ⊗ ({y:?} ⊕ {z:?})");
                }
            }
        }
    }
}
