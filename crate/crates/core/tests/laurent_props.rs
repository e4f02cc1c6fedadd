use num_bigint::BigInt;
use num_rational::Rational64;
use proptest::prelude::*;

use altbraid::laurent::{analyze_shape, LaurentPoly};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-20i64..20, 0..8))
        .prop_map(|(off, cs)| LaurentPoly::from_i64s(off, &cs))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn q(n: u32) -> LaurentPoly {
    LaurentPoly::quantum_integer(n).unwrap()
}

/// Oracle for the trapezoid shape, written against the sign pattern of the
/// first differences: `+...+ 0...0 -...-`. Returns the plateau length.
fn plateau_by_differences(c: &[BigInt]) -> Option<usize> {
    let signs: Vec<i8> = c
        .windows(2)
        .map(|w| match w[1].cmp(&w[0]) {
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => -1,
        })
        .collect();
    let mut phase = 1;
    for &s in &signs {
        match (phase, s) {
            (1, 1) | (0, 0) | (-1, -1) => {}
            (1, 0) => phase = 0,
            (1, -1) | (0, -1) => phase = -1,
            _ => return None,
        }
    }
    Some(signs.iter().filter(|&&s| s == 0).count())
}

/// Random symmetric trapezoid: strictly rising run, flat top of `top` equal
/// coefficients, mirrored fall.
fn trapezoid() -> impl Strategy<Value = Vec<i64>> {
    (prop::collection::vec(1i64..5, 0..6), 1usize..8).prop_map(|(steps, top)| build(&steps, top))
}

fn build(steps: &[i64], top: usize) -> Vec<i64> {
    let mut rise = Vec::new();
    let mut v = 0;
    for s in steps {
        v += s;
        rise.push(v);
    }
    let peak = v + 1;
    let mut out = rise.clone();
    out.extend(std::iter::repeat(peak).take(top));
    out.extend(rise.iter().rev());
    out
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_offsets_add(a in nonzero_poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).offset(), a.offset() + b.offset());
    }

    #[test]
    fn exact_div_inverts_mul(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_involution(a in poly()) {
        prop_assert_eq!(a.substitute_neg().substitute_neg(), a);
    }

    #[test]
    fn normalization_is_idempotent(a in nonzero_poly()) {
        let once = a.normalize_symmetric().unwrap();
        let twice = once.poly.normalize_symmetric().unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once.poly.offset(), 0);
    }

    #[test]
    fn trapezoid_verdict_matches_difference_oracle(cs in prop::collection::vec(1i64..6, 1..10)) {
        let p = LaurentPoly::from_i64s(0, &cs);
        let r = analyze_shape(&p, None).unwrap();
        let oracle = plateau_by_differences(p.coeffs());
        prop_assert_eq!(r.is_trapezoidal, oracle.is_some());
        if r.is_symmetric {
            prop_assert_eq!(r.stable_length, oracle);
        }
    }

    #[test]
    fn product_with_quantum_integer(cs in trapezoid(), n_pick in 0usize..64, off in -3i64..3) {
        let p = LaurentPoly::from_i64s(off, &cs);
        let m = p.span();
        let n = 1 + n_pick % (m + 1);
        let l = plateau_by_differences(p.coeffs()).unwrap();
        let prod = &p * &q(n as u32);
        let report = analyze_shape(&prod, None).unwrap();
        let predicted_len = if l >= n {
            l - n + 1
        } else if (m + n - 1) % 2 == 0 {
            0
        } else {
            1
        };
        prop_assert!(report.is_symmetric && report.is_trapezoidal);
        prop_assert_eq!(report.center, Rational64::new(2 * off + (m + n - 1) as i64, 2));
        prop_assert_eq!(report.stable_length, Some(predicted_len));
    }

    #[test]
    fn sum_with_common_support(
        (a, b) in (1usize..14).prop_flat_map(|len| {
            let half = (len - 1) / 2;
            (Just(len), 0..=half, 0..=half)
        }).prop_flat_map(|(len, ra, rb)| (
            prop::collection::vec(1i64..5, ra).prop_map(move |st| build(&st, len - 2 * ra)),
            prop::collection::vec(1i64..5, rb).prop_map(move |st| build(&st, len - 2 * rb)),
        ))
    ) {
        // Same span and offset, hence a common center; plateaus differ.
        let p = LaurentPoly::from_i64s(0, &a);
        let qq = LaurentPoly::from_i64s(0, &b);
        let rp = analyze_shape(&p, None).unwrap();
        let rq = analyze_shape(&qq, None).unwrap();
        prop_assert_eq!(rp.center, rq.center);
        let rs = analyze_shape(&(&p + &qq), None).unwrap();
        prop_assert!(rs.is_symmetric && rs.is_trapezoidal);
        prop_assert_eq!(rs.center, rp.center);
        prop_assert_eq!(
            rs.stable_length,
            Some(rp.stable_length.unwrap().min(rq.stable_length.unwrap()))
        );
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: LaurentPoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn quantum_products_brute_force() {
    for a in 1..=12u32 {
        for b in 1..=a {
            let prod = &q(a) * &q(b);
            let r = analyze_shape(&prod, None).unwrap();
            assert!(r.is_symmetric && r.is_trapezoidal, "[{a}][{b}]");
            assert_eq!(r.center, Rational64::new((a + b - 2) as i64, 2));
            // the plateau is a - b + 1 coefficients wide
            assert_eq!(r.stable_length, Some((a - b) as usize), "[{a}][{b}]");
            assert_eq!(plateau_by_differences(prod.coeffs()), Some((a - b) as usize));
        }
    }
}

#[test]
fn sum_rule_needs_matching_supports() {
    // A narrow summand sitting inside a wide plateau breaks the shape.
    let wide = LaurentPoly::from_i64s(0, &[1, 1, 1, 1, 1]);
    let narrow = LaurentPoly::monomial(1, 2);
    let r = analyze_shape(&(&wide + &narrow), None).unwrap();
    assert!(r.is_symmetric);
    assert!(!r.is_trapezoidal);
}

#[test]
fn json_schema_shape() {
    let p = LaurentPoly::from_i64s(-1, &[1, 3, 1]);
    assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"offset":-1,"coeffs":[1,3,1]}"#);
    let big = LaurentPoly::constant(BigInt::from(u64::MAX) * 5);
    let text = serde_json::to_string(&big).unwrap();
    assert_eq!(text, r#"{"offset":0,"coeffs":["92233720368547758075"]}"#);
    assert_eq!(serde_json::from_str::<LaurentPoly>(&text).unwrap(), big);
    // non-canonical input is canonicalized
    let p: LaurentPoly = serde_json::from_str(r#"{"offset":2,"coeffs":[0,4,0]}"#).unwrap();
    assert_eq!(p, LaurentPoly::monomial(4, 3));
}
