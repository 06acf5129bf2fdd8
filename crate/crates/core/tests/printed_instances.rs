//! Worked instances with hand-checkable data.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toda_rpp::algebra::{var_bracket, BracketConvention, Scalar};
use toda_rpp::identities::{lp_to_rpp, pf_x_rhs, rpp_to_lp, weight_x};
use toda_rpp::lattice::{LatticePath, Point, RegularLattice};
use toda_rpp::shapes::{enumerate_rpp, PartitionShape, RppTable};
use toda_rpp::toda::{ni_sum_check, sample_until, SampleFunction};

/// Staircase with rows -2..=8 and columns up to 8.
fn staircase() -> RegularLattice {
    RegularLattice::new(-2, vec![7, 4, 4, 3, 1, 1, 0, 0, 0, -1, -2], 8).unwrap()
}

fn four_paths() -> Vec<LatticePath> {
    ["NEENENNENEN", "NEEENNENNEN", "EENENENNENN", "EEEENNENNNN"]
        .iter()
        .enumerate()
        .map(|(k, w)| LatticePath::from_word(Point::new(5 + k as i64, k as i64), w).unwrap())
        .collect()
}

#[test]
fn staircase_family_anchors_at_five_five() {
    let l = staircase();
    let tuple = four_paths();
    for (k, p) in tuple.iter().enumerate() {
        let (start, end) = l.ni_endpoints(5, 5, k as i64).unwrap();
        assert_eq!((p.start, p.end()), (start, end), "path {k}");
        assert!(p.points().iter().all(|&q| l.contains(q)));
    }
    assert!(l.enum_ni_tuples(5, 5, 4).unwrap().contains(&tuple));
    // Column 4 has the same top row, but the drawn paths end one column further east.
    assert_eq!(l.x_of(4).unwrap(), l.x_of(5).unwrap());
    assert_ne!(l.ni_endpoints(5, 4, 0).unwrap().1, tuple[0].end());
}

#[test]
fn staircase_family_sums() {
    let l = staircase();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (_, rep) = sample_until(
        &mut rng,
        100,
        |g| SampleFunction::random_integer(g, (-2, 16), (-2, 16), 1, 9),
        |f| ni_sum_check(f, &l, 5, 5, 4),
    )
    .unwrap();
    assert!(rep.is_empty(), "{:?}", rep.violations);
}

#[test]
fn five_row_filling_and_its_paths() {
    let shape: PartitionShape = "5,4,4,2,1".parse().unwrap();
    let tuple: Vec<LatticePath> = ["NEENEENNNE", "NEEENENNEN", "ENEEENENNN", "EEENENENNN"]
        .iter()
        .enumerate()
        .map(|(k, w)| LatticePath::from_word(Point::new(5 + k as i64, k as i64), w).unwrap())
        .collect();
    let rows = vec![
        vec![0, 0, 1, 1, 2],
        vec![0, 2, 3, 4],
        vec![2, 4, 4, 4],
        vec![2, 4],
        vec![3],
    ];
    let pi = RppTable::new(shape.clone(), 4, rows).unwrap();
    assert_eq!(lp_to_rpp(&tuple, &shape, 4).unwrap(), pi);
    assert_eq!(rpp_to_lp(&pi, &shape, 4).unwrap(), tuple);
    assert_eq!(pi.size(), 36);
}

#[test]
fn single_cell_by_hand() {
    let one: PartitionShape = "1".parse().unwrap();
    let x = Scalar::x;
    let one_minus = |s: Scalar| &Scalar::one() - &s;
    for n in 1..=3u32 {
        let sum: Scalar = enumerate_rpp(&one, n)
            .map(|pi| weight_x(&one, n, &pi))
            .sum();
        let top = Scalar::monomial(var_bracket(
            'x',
            -(n as i32),
            0,
            BracketConvention::Verbatim,
        ));
        let expected = &one_minus(top) / &one_minus(x(0));
        assert_eq!(sum, expected, "n={n}");
        assert_eq!(pf_x_rhs(&one, n), expected);
    }
    assert_eq!(pf_x_rhs(&one, 1).to_string(), "(1-x[-1]*x[0])/(1-x[0])");
}
