use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toda_rpp::algebra::{
    bracket, cofactor_det, det_exact, q, series_truncate, BracketConvention, Monomial, Scalar,
};
use toda_rpp::identities::{lp_to_rpp, pf_x_rhs, rpp_to_lp, x_to_q, AlphaClause, AlphaGrid};
use toda_rpp::lattice::{Point, RegularLattice};
use toda_rpp::shapes::{enumerate_rpp, PartitionShape};
use toda_rpp::toda::{gauge_check, verify_bilinear, FreeLabels, SampleFunction, Window};
use toda_rpp::Error;

fn shape(max_rows: usize, max_part: usize) -> impl Strategy<Value = PartitionShape> {
    prop::collection::vec(1..=max_part, 0..=max_rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        PartitionShape::new(parts).unwrap()
    })
}

/// Small Laurent-free polynomials in `x[-1..=1]`.
fn poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -1i32..=1, 0i32..=2), 1..=3).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, i, e)| &Scalar::from_int(c) * &Scalar::x(i).pow(e).unwrap())
            .sum()
    })
}

/// Quotients of small polynomials, possibly constant.
fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_map(|(a, b)| if b.is_zero() { a } else { &a / &b })
}

fn matrix(k: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(poly(), k), k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_operations_are_consistent(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn forward_brackets_concatenate(m in -4i32..=2, len1 in 0i32..=3, len2 in 1i32..=3) {
        let z = Scalar::x;
        let k = m + len1;
        let n = k + len2;
        for conv in [BracketConvention::Verbatim, BracketConvention::Telescoping] {
            let left = bracket(z, m, k, conv).unwrap();
            let right = bracket(z, k + 1, n, conv).unwrap();
            prop_assert_eq!(&left * &right, bracket(z, m, n, conv).unwrap());
        }
    }

    #[test]
    fn determinant_is_multilinear_and_alternating(
        m in matrix(3),
        row in prop::collection::vec(poly(), 3),
        k in 0usize..3,
        lam in poly(),
    ) {
        let d = det_exact(&m).unwrap();
        prop_assert_eq!(&d, &cofactor_det(&m).unwrap());

        let mut swapped = m.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(det_exact(&swapped).unwrap(), -&d);

        let mut scaled = m.clone();
        scaled[k] = scaled[k].iter().map(|e| e * &lam).collect();
        prop_assert_eq!(det_exact(&scaled).unwrap(), &d * &lam);

        let mut added = m.clone();
        added[k] = added[k].iter().zip(&row).map(|(e, r)| e + r).collect();
        let mut replaced = m.clone();
        replaced[k] = row.clone();
        prop_assert_eq!(
            det_exact(&added).unwrap(),
            &d + &det_exact(&replaced).unwrap()
        );
    }

    #[test]
    fn truncation_commutes_with_products(
        a in poly(), b in poly(), i in -1i32..=1, j in -1i32..=1, d in 0u32..=5,
    ) {
        // Geometric factors keep the series infinite.
        let s = &(&Scalar::one() + &a) / &(&Scalar::one() - &Scalar::x(i));
        let t = &(&Scalar::one() + &b) / &(&Scalar::one() - &(&Scalar::x(i) * &Scalar::x(j)));
        let lhs = series_truncate(&(&s * &t), d).unwrap();
        let rhs = series_truncate(&s, d).unwrap().mul(&series_truncate(&t, d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_and_extended_indices(sh in shape(5, 5), k in 0i32..4) {
        prop_assert_eq!(sh.conjugate().conjugate(), sh.clone());
        prop_assert_eq!(sh.conj_ext(-k), sh.rows() as i32);
        prop_assert_eq!(sh.part_ext(-k), sh.cols() as i32);
    }

    #[test]
    fn filling_counts_are_monotone(sh in shape(3, 3), n in 0u32..=2, row in 1usize..=4) {
        let count = |s: &PartitionShape, n| enumerate_rpp(s, n).count();
        let here = count(&sh, n);
        prop_assert!(count(&sh, n + 1) >= here);
        if let Some(bigger) = sh.add_cell(row) {
            prop_assert!(count(&bigger, n) >= here);
        }
        for pi in enumerate_rpp(&sh, n) {
            prop_assert!(pi.is_valid());
        }
    }

    #[test]
    fn alpha_diagonals_are_covered_once(sh in shape(6, 6)) {
        let (r, c) = (sh.rows() as i64, sh.cols() as i64);
        for l in -r..c {
            prop_assert_eq!(AlphaGrid::clauses(&sh, l).len(), 1, "diagonal {}", l);
        }
        for l in [-r - 1, c] {
            prop_assert!(AlphaGrid::clauses(&sh, l).is_empty());
        }
        let rows = (-r..c)
            .flat_map(|l| AlphaGrid::clauses(&sh, l))
            .filter(|cl| matches!(cl, AlphaClause::Row { .. }))
            .count();
        prop_assert_eq!(rows, sh.rows());
    }

    #[test]
    fn bijection_roundtrips(sh in shape(3, 3), n in 0u32..=3) {
        for pi in enumerate_rpp(&sh, n) {
            let tuple = rpp_to_lp(&pi, &sh, n).unwrap();
            prop_assert_eq!(tuple.len(), n as usize);
            let back = lp_to_rpp(&tuple, &sh, n).unwrap();
            prop_assert_eq!(rpp_to_lp(&back, &sh, n).unwrap(), tuple);
            prop_assert_eq!(back, pi);
        }
    }

    #[test]
    fn path_sum_dp_matches_enumeration(seed in any::<u64>(), a in 0usize..30, b in 0usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = RegularLattice::random(&mut rng, 0, 4, 3, 4);
        let pts: Vec<Point> = (l.top()..=l.bottom())
            .flat_map(|i| (l.col_min()..=l.col_max()).map(move |j| Point::new(i, j)))
            .filter(|&p| l.contains(p))
            .collect();
        let (p, q) = (pts[a % pts.len()], pts[b % pts.len()]);
        let (from, to) = if p.i >= q.i { (p, q) } else { (q, p) };
        prop_assert_eq!(
            l.g_sum(&FreeLabels, from, to).unwrap(),
            l.g_sum_enumerated(&FreeLabels, from, to).unwrap()
        );
    }

    #[test]
    fn single_variable_products_grow_with_the_bound(sh in shape(2, 3), n in 0u32..=2) {
        let d = 6;
        let at = |n| series_truncate(&x_to_q(&pf_x_rhs(&sh, n)), d).unwrap();
        let (lo, hi) = (at(n), at(n + 1));
        for k in 0..=d as i32 {
            let m = Monomial::from_pairs([(q(), k)]);
            prop_assert!(lo.coefficient(&m) <= hi.coefficient(&m), "degree {}", k);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn bilinear_holds_for_every_sample(seed in any::<u64>(), ones in any::<bool>()) {
        let w = Window::centered(2, 2);
        let (rows, cols) = w.sample_rows_cols();
        let f = if ones {
            SampleFunction::ones(rows, cols)
        } else {
            SampleFunction::random_integer(&mut ChaCha8Rng::seed_from_u64(seed), rows, cols, -9, 9)
        };
        prop_assert!(verify_bilinear(&f, &w).unwrap().is_empty());
    }

    #[test]
    fn column_gauges_leave_solutions_unchanged(
        seed in any::<u64>(),
        phi in prop::collection::vec((1i64..=9, any::<bool>()), 16),
    ) {
        let w = Window::centered(1, 2);
        let (rows, cols) = w.sample_rows_cols();
        let f = SampleFunction::random_integer(&mut ChaCha8Rng::seed_from_u64(seed), rows, cols, 1, 9);
        let factor = |j: i64| {
            let (k, neg) = phi[(j - cols.0) as usize % phi.len()];
            Scalar::from_int(if neg { -k } else { k })
        };
        let g = f.gauge(factor).unwrap();
        match gauge_check(&f, &g, &w) {
            Ok(rep) => prop_assert!(rep.is_empty()),
            // Gauges scale minors by nonzero factors, so only an already singular f can fail.
            Err(e) => prop_assert!(matches!(e, Error::SingularMinor { .. }), "{}", e),
        }
    }
}
