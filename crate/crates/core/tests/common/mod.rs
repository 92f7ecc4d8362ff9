#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use radgen::{Field, Monomial, MonomialOrder, Polynomial, Ring, RingContext, Scalar};

pub fn ring(n: usize) -> Ring {
    RingContext::standard(Field::Rational, n, MonomialOrder::Grevlex)
}

pub fn ring_with(field: Field, n: usize, order: MonomialOrder) -> Ring {
    RingContext::standard(field, n, order)
}

pub fn p(ring: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(s, ring).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Independent dense model: exponent vector -> integer coefficient.
pub type Dense = BTreeMap<Vec<u32>, i128>;

pub fn dense_add(a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (m, c) in b {
        *out.entry(m.clone()).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn to_dense(f: &Polynomial) -> Dense {
    f.terms()
        .iter()
        .map(|t| {
            let c = match &t.coeff {
                Scalar::Rational(q) => {
                    assert!(q.is_integer(), "non-integer coefficient {q}");
                    i128::try_from(q.to_integer()).unwrap()
                }
                Scalar::Mod(r) => *r as i128,
            };
            (t.monomial.exponents().to_vec(), c)
        })
        .collect()
}

pub fn from_dense(ring: &Ring, d: &Dense) -> Polynomial {
    let field = ring.field();
    Polynomial::from_terms(
        ring,
        d.iter().map(|(m, c)| {
            (
                Monomial::new(m.iter().copied()),
                field.from_bigint(&BigInt::from(*c)),
            )
        }),
    )
}

/// Random sparse integer polynomial data: up to `terms` terms with exponents
/// below `max_exp` and coefficients in `-coef..=coef`.
pub fn dense_strategy(n: usize, terms: usize, max_exp: u32, coef: i64) -> impl Strategy<Value = Dense> {
    prop::collection::vec(
        (prop::collection::vec(0..max_exp, n), -coef..=coef),
        0..=terms,
    )
    .prop_map(|ts| {
        let mut d = Dense::new();
        for (m, c) in ts {
            *d.entry(m).or_insert(0) += c as i128;
        }
        d.retain(|_, c| *c != 0);
        d
    })
}

/// Random polynomials with small rational coefficients.
pub fn rational_poly(ring: Ring, terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec(
        (prop::collection::vec(0..max_exp, n), -9i64..=9, 1i64..=4),
        0..=terms,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(
            &ring,
            ts.into_iter().map(|(m, a, b)| {
                (
                    Monomial::new(m),
                    Scalar::Rational(BigRational::new(a.into(), b.into())),
                )
            }),
        )
    })
}
