use num_bigint::BigInt;
use proptest::prelude::*;

use altbraid::braid::{BlockBraid, Sign};
use altbraid::burau::alexander;
use altbraid::conjecture::{
    check_conjecture, closed_form_m1, closed_form_m2, det_formula_m2, leading_coeffs_formula,
    stable_length_m1,
};
use altbraid::laurent::analyze_shape;

proptest! {
    #[test]
    fn two_block_formula_symmetric_in_blocks(v in prop::collection::vec(1u64..=7, 6)) {
        prop_assert_eq!(
            closed_form_m2(v[0], v[1], v[2], v[3], v[4], v[5]),
            closed_form_m2(v[3], v[4], v[5], v[0], v[1], v[2])
        );
    }

    #[test]
    fn determinant_is_coefficient_sum(v in prop::collection::vec(1u64..=9, 6)) {
        let poly = closed_form_m2(v[0], v[1], v[2], v[3], v[4], v[5]);
        prop_assert_eq!(
            poly.evaluate_int(1).unwrap().to_integer(),
            det_formula_m2(v[0], v[1], v[2], v[3], v[4], v[5])
        );
    }

    #[test]
    fn two_block_shape(v in prop::collection::vec(1u64..=6, 6)) {
        let poly = closed_form_m2(v[0], v[1], v[2], v[3], v[4], v[5]);
        let sigma = v[1] as i64 + v[4] as i64 - v[0] as i64 - v[3] as i64 - v[2] as i64 - v[5] as i64 + 1;
        let r = analyze_shape(&poly, Some(sigma)).unwrap();
        prop_assert!(r.is_symmetric && r.is_trapezoidal);
        prop_assert_eq!(r.bound_holds, Some(true));
    }
}

#[test]
fn single_block_degree_and_stable_length() {
    for p in 1..=10 {
        for q in 1..=10 {
            for r in 1..=10 {
                let poly = closed_form_m1(p, q, r);
                assert_eq!(poly.span() as u64, p + q + r - 3);
                let shape = analyze_shape(&poly, None).unwrap();
                assert_eq!(
                    shape.stable_length,
                    Some(stable_length_m1(p, q, r) as usize),
                    "({p},{q},{r})"
                );
            }
        }
    }
}

#[test]
fn leading_coefficients_against_burau() {
    let cases: &[(usize, u64, u64)] = &[
        (3, 4, 4),
        (3, 4, 5),
        (4, 4, 4),
        (4, 3, 5),
        (5, 3, 4),
        (5, 2, 5),
    ];
    for &(n, max_m, entry) in cases {
        for m in 1..=max_m {
            let b = BlockBraid::new(n, vec![vec![entry; n - 1]; m as usize], Sign::Positive).unwrap();
            let r = alexander(&b.expand()).unwrap();
            let got: Vec<BigInt> = r.poly_s.coeffs().iter().take(4).cloned().collect();
            let want = leading_coeffs_formula(n as u64, m).unwrap().prefix();
            assert_eq!(got, want, "n={n} m={m} entry={entry}");
        }
    }
}

#[test]
fn leading_coefficients_with_unequal_entries() {
    // Only the minimum entry matters for the thresholds.
    let b = BlockBraid::parse(4, "4,5,6;7,4,9", Sign::Positive).unwrap();
    let r = alexander(&b.expand()).unwrap();
    let got: Vec<BigInt> = r.poly_s.coeffs().iter().take(4).cloned().collect();
    let want = leading_coeffs_formula(4, 2)
        .unwrap()
        .restrict_to_min_entry(b.min_magnitude())
        .prefix();
    assert_eq!(got, want);

    let b = BlockBraid::parse(4, "3,5,6;7,3,9", Sign::Positive).unwrap();
    let r = alexander(&b.expand()).unwrap();
    let want = leading_coeffs_formula(4, 2)
        .unwrap()
        .restrict_to_min_entry(b.min_magnitude())
        .prefix();
    assert_eq!(want.len(), 3);
    let got: Vec<BigInt> = r.poly_s.coeffs().iter().take(3).cloned().collect();
    assert_eq!(got, want);
}

#[test]
fn negative_family_matches_mirror() {
    for v in [[3u64, 2, 5], [1, 4, 2], [2, 2, 2]] {
        let pos = BlockBraid::new(4, vec![v.to_vec()], Sign::Positive).unwrap();
        let a = check_conjecture(&pos).unwrap();
        let b = check_conjecture(&pos.mirror()).unwrap();
        assert_eq!(a.alexander.poly_s, b.alexander.poly_s);
        assert_eq!(a.sigma, -b.sigma);
        assert_eq!(a.shape.unwrap().bound_holds, b.shape.unwrap().bound_holds);
    }
}
