mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;
use radgen::{Error, Field, Monomial, MonomialOrder, Polynomial, RingContext};

#[test]
fn parse_examples() {
    let r = ring(6);
    let f = p(&r, "x1*x2 + x3*x4");
    assert_eq!(f.len(), 2);
    assert!(f.terms().iter().all(|t| t.coeff.is_one()));
    assert_eq!(f.to_string(), "x1*x2 + x3*x4");

    let zero = p(&r, "0");
    assert!(zero.is_zero());
    assert!(zero.terms().is_empty());
}

#[test]
fn parse_cancellation_matches_dense_expansion() {
    let r = ring(2);
    let f = p(&r, "(x1+x2)^2 - x1^2 - 2*x1*x2");
    // (x1 + x2)^2 expanded by repeated multiplication in the dense model.
    let s: Dense = [(vec![1, 0], 1), (vec![0, 1], 1)].into_iter().collect();
    let sq = dense_mul(&s, &s);
    let minus: Dense = [(vec![2, 0], -1), (vec![1, 1], -2)].into_iter().collect();
    let expected = dense_add(&sq, &minus);
    assert_eq!(to_dense(&f), expected);
    assert_eq!(expected, [(vec![0, 2], 1)].into_iter().collect());
    assert_eq!(f.to_string(), "x2^2");
}

#[test]
fn parse_errors() {
    let r = ring(3);
    assert!(matches!(
        Polynomial::parse("x1 + * x2", &r),
        Err(Error::Syntax { pos: 6, .. })
    ));
    assert!(matches!(
        Polynomial::parse("x1 + y", &r),
        Err(Error::UnknownVariable { .. })
    ));
    assert!(Polynomial::parse("x1x2", &r).is_err());
    assert!(Polynomial::parse("x1 x2", &r).is_err());
    let f7 = ring_with(Field::Prime(7), 2, MonomialOrder::Grevlex);
    assert!(matches!(
        Polynomial::parse("1/7*x1", &f7),
        Err(Error::NotRepresentable(_))
    ));
    assert!(matches!(
        Polynomial::parse("1/0", &r),
        Err(Error::NotRepresentable(_))
    ));
}

#[test]
fn parse_named_variables_by_position() {
    let r = RingContext::new(
        Field::Rational,
        vec!["a".into(), "b".into()],
        MonomialOrder::Lex,
    )
    .unwrap();
    let f = p(&r, "b^2 - 3/2*a*b + -a");
    assert_eq!(f.to_string(), "-3/2*a*b - a + b^2");
}

#[test]
fn arith_examples() {
    let r = ring(5);
    let sum = p(&r, "x1*x2") + p(&r, "x3*x4");
    assert_eq!(sum, p(&r, "x1*x2 + x3*x4"));

    let q1 = p(&r, "x2") * p(&r, "x1*x2 + x3*x4") + p(&r, "x3*x5");
    assert_eq!(q1.to_string(), "x1*x2^2 + x2*x3*x4 + x3*x5");

    assert!(p(&r, "x1 + x2").pow(0).is_one());
}

#[test]
fn freshmans_dream_over_f3() {
    let r = ring_with(Field::Prime(3), 2, MonomialOrder::Grevlex);
    let cube = p(&r, "x1 + x2").pow(3);
    // Full expansion: binomial coefficients of (x1 + x2)^3, reduced mod 3.
    let binom = [1i128, 3, 3, 1];
    let expected: Dense = binom
        .iter()
        .enumerate()
        .map(|(k, c)| (vec![3 - k as u32, k as u32], c.rem_euclid(3)))
        .filter(|(_, c)| *c != 0)
        .collect();
    assert_eq!(to_dense(&cube), expected);
    assert_eq!(cube.to_string(), "x1^3 + x2^3");
}

#[test]
fn context_mismatch_is_rejected() {
    let a = ring(2);
    let b = ring_with(Field::Prime(5), 2, MonomialOrder::Grevlex);
    let f = p(&a, "x1");
    let g = p(&b, "x1");
    assert!(matches!(f.checked_add(&g), Err(Error::ContextMismatch)));
    assert!(matches!(f.checked_mul(&g), Err(Error::ContextMismatch)));
    assert!(RingContext::new(
        Field::Rational,
        vec!["x".into(), "x".into()],
        MonomialOrder::Lex
    )
    .is_err());
}

#[test]
fn divide_multi_examples() {
    let r = ring_with(Field::Rational, 5, MonomialOrder::Lex);
    let f = p(&r, "x1*x2^2 + x2*x3*x4 + x3*x5");
    let (q, rem) = f.divide_multi(&[p(&r, "x1"), p(&r, "x3")]).unwrap();
    assert_eq!(q, vec![p(&r, "x2^2"), p(&r, "x2*x4 + x5")]);
    assert!(rem.is_zero());

    let (q, rem) = p(&r, "x1").divide_multi(&[p(&r, "x1")]).unwrap();
    assert_eq!(q, vec![p(&r, "1")]);
    assert!(rem.is_zero());

    let (q, rem) = p(&r, "x2").divide_multi(&[p(&r, "x1"), p(&r, "x3")]).unwrap();
    assert!(q.iter().all(Polynomial::is_zero));
    assert_eq!(rem, p(&r, "x2"));

    assert!(matches!(
        f.divide_multi(&[p(&r, "0")]),
        Err(Error::ZeroDivisor)
    ));
}

#[test]
fn cmp_monomial_examples() {
    let x1 = Monomial::new([1, 0]);
    let x2sq = Monomial::new([0, 2]);
    assert_eq!(MonomialOrder::Lex.compare(&x1, &x2sq), Ordering::Greater);
    assert_eq!(MonomialOrder::Grevlex.compare(&x1, &x2sq), Ordering::Less);
    assert!(matches!(
        MonomialOrder::Lex.try_compare(&x1, &Monomial::new([1, 0, 0])),
        Err(Error::LengthMismatch { .. })
    ));
}

/// Textbook grevlex: a > b iff deg a > deg b, or the degrees agree and the
/// rightmost nonzero entry of a - b is negative.
fn grevlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
    if da != db {
        return da.cmp(&db);
    }
    let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| *x as i64 - *y as i64).collect();
    match diff.iter().rev().find(|d| **d != 0) {
        None => Ordering::Equal,
        Some(d) if *d < 0 => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

#[test]
fn grevlex_degree_two_in_three_variables() {
    let mut all = Vec::new();
    for a in 0..=2u32 {
        for b in 0..=2 - a {
            all.push(vec![a, b, 2 - a - b]);
        }
    }
    assert_eq!(all.len(), 6);
    let order = MonomialOrder::Grevlex;
    let mono = |v: &Vec<u32>| Monomial::new(v.iter().copied());
    for a in &all {
        for b in &all {
            let got = order.compare(&mono(a), &mono(b));
            assert_eq!(got, grevlex_oracle(a, b), "{a:?} vs {b:?}");
            assert_eq!(got, order.compare(&mono(b), &mono(a)).reverse());
            for c in &all {
                if got == Ordering::Less && order.compare(&mono(b), &mono(c)) == Ordering::Less {
                    assert_eq!(order.compare(&mono(a), &mono(c)), Ordering::Less);
                }
            }
        }
    }
    // x1*x3 < x2^2.
    assert_eq!(
        order.compare(&mono(&vec![1, 0, 1]), &mono(&vec![0, 2, 0])),
        Ordering::Less
    );
    let mut sorted = all.clone();
    sorted.sort_by(|a, b| order.compare(&mono(b), &mono(a)));
    let names: Vec<String> = sorted
        .iter()
        .map(|m| Polynomial::term(&ring(3), mono(m), Field::Rational.one()).to_string())
        .collect();
    assert_eq!(
        names,
        ["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_against_dense_model(
        a in dense_strategy(3, 5, 3, 6),
        b in dense_strategy(3, 5, 3, 6),
        c in dense_strategy(3, 5, 3, 6),
    ) {
        let r = ring(3);
        let (f, g, h) = (from_dense(&r, &a), from_dense(&r, &b), from_dense(&r, &c));
        prop_assert_eq!((&f + &g) + &h, &f + (&g + &h));
        prop_assert_eq!(&f * (&g + &h), &f * &g + &f * &h);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(to_dense(&(&f * &g)), dense_mul(&a, &b));
        prop_assert_eq!(to_dense(&(&f + &g)), dense_add(&a, &b));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn terms_stay_sorted_and_nonzero(a in dense_strategy(3, 6, 4, 5), b in dense_strategy(3, 6, 4, 5)) {
        for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
            let r = ring_with(Field::Rational, 3, order);
            let f = from_dense(&r, &a) * from_dense(&r, &b);
            for w in f.terms().windows(2) {
                prop_assert_eq!(order.compare(&w[0].monomial, &w[1].monomial), Ordering::Greater);
            }
            prop_assert!(f.terms().iter().all(|t| !t.coeff.is_zero()));
        }
    }

    #[test]
    fn division_reconstructs(
        f in rational_poly(ring(3), 6, 4),
        ds in prop::collection::vec(rational_poly(ring(3), 3, 3), 1..4),
    ) {
        let ds: Vec<Polynomial> = ds.into_iter().filter(|d| !d.is_zero()).collect();
        prop_assume!(!ds.is_empty());
        let (qs, rem) = f.divide_multi(&ds).unwrap();
        let sum = qs.iter().zip(&ds).fold(rem.clone(), |acc, (q, d)| acc + q * d);
        prop_assert_eq!(sum, f);
        for t in rem.terms() {
            for d in &ds {
                prop_assert!(!d.leading_monomial().unwrap().divides(&t.monomial));
            }
        }
    }

    #[test]
    fn print_parse_round_trip(f in rational_poly(ring(4), 6, 4)) {
        let r = f.ring().clone();
        let printed = f.to_string();
        let back = Polynomial::parse(&printed, &r).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn print_parse_round_trip_mod_p(a in dense_strategy(3, 6, 4, 50)) {
        let r = ring_with(Field::Prime(32003), 3, MonomialOrder::Lex);
        let f = from_dense(&r, &a);
        prop_assert_eq!(Polynomial::parse(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn reduction_mod_p_commutes(
        a in dense_strategy(3, 5, 3, 1000),
        b in dense_strategy(3, 5, 3, 1000),
        p in prop::sample::select(vec![2u64, 3, 7, 101, 32003]),
    ) {
        let q = ring(3);
        let fp = ring_with(Field::Prime(p), 3, MonomialOrder::Grevlex);
        let (f, g) = (from_dense(&q, &a), from_dense(&q, &b));
        let map = |h: &Polynomial| h.map_field(&fp).unwrap();
        prop_assert_eq!(map(&(&f + &g)), map(&f) + map(&g));
        prop_assert_eq!(map(&(&f * &g)), map(&f) * map(&g));
    }

    #[test]
    fn rational_coefficients_map_when_denominator_is_coprime(
        n in -50i64..50, d in 1i64..50,
    ) {
        let p = 7u64;
        prop_assume!(d % 7 != 0);
        let q = ring(1);
        let fp = ring_with(Field::Prime(p), 1, MonomialOrder::Grevlex);
        let f = Polynomial::parse(&format!("{n}/{d}*x1 + 1"), &q).unwrap();
        let mapped = f.map_field(&fp).unwrap();
        let back = &mapped * &Polynomial::from_i64(&fp, d);
        let expected = Polynomial::parse(&format!("{n}*x1 + {d}"), &fp).unwrap();
        prop_assert_eq!(back, expected);
    }
}
