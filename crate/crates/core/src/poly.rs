//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::ring::{same_ring, Ring};

/// One nonzero term `coeff * monomial`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: Scalar,
}

/// An immutable polynomial tied to a [`Ring`].
///
/// Terms are stored strictly descending in the ring's monomial order with no
/// zero coefficients, so the leading term is always `terms[0]` and equality
/// is structural.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    /// The variable with index `i` (0-based).
    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::term(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    pub fn term(ring: &Ring, monomial: Monomial, coeff: Scalar) -> Self {
        assert_eq!(monomial.nvars(), ring.nvars());
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { monomial, coeff }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Canonicalizes an arbitrary list of terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let order = ring.order();
        let field = ring.field();
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(monomial, coeff)| {
                assert_eq!(monomial.nvars(), ring.nvars());
                Term { monomial, coeff }
            })
            .collect();
        raw.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].coeff.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Indices of the variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for t in &self.terms {
            for i in t.monomial.support() {
                seen[i] = true;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.clone(),
                    coeff: field.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.mul(m),
                    coeff: field.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    /// Scales to leading coefficient one. The zero polynomial is returned as is.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&self.ring.field().inv(lc)),
            _ => self.clone(),
        }
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |t: &Term| Term {
            monomial: t.monomial.clone(),
            coeff: if subtract {
                field.neg(&t.coeff)
            } else {
                t.coeff.clone()
            },
        };
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].monomial, &b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(rhs(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        field.sub(&a[i].coeff, &b[j].coeff)
                    } else {
                        field.add(&a[i].coeff, &b[j].coeff)
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            monomial: a[i].monomial.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(rhs));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for o in &other.terms {
                raw.push((s.monomial.mul(&o.monomial), field.mul(&s.coeff, &o.coeff)));
            }
        }
        Polynomial::from_terms(&self.ring, raw)
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub(crate) fn sub_scaled(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.merge(&g.mul_term(m, c), true)
    }

    /// Multivariate division by an ordered list of divisors.
    ///
    /// Returns `(quotients, remainder)` with `self = sum q_i d_i + r` and no
    /// term of `r` divisible by any leading monomial of the divisors. At each
    /// step the first divisor (in list order) whose leading monomial divides
    /// the current leading term is used.
    pub fn divide_multi(&self, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
        for d in divisors {
            self.check_ring(d)?;
            if d.is_zero() {
                return Err(Error::ZeroDivisor);
            }
        }
        let field = self.ring.field();
        let mut quotients: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); divisors.len()];
        let mut remainder = Vec::new();
        let mut p = self.clone();
        while let Some(lt) = p.terms.first().cloned() {
            let hit = divisors.iter().enumerate().find_map(|(i, d)| {
                let ld = d.leading_term().unwrap();
                ld.monomial
                    .quotient_of(&lt.monomial)
                    .map(|m| (i, m, field.div(&lt.coeff, &ld.coeff)))
            });
            match hit {
                Some((i, m, c)) => {
                    p = p.sub_scaled(&c, &m, &divisors[i]);
                    quotients[i].push((m, c));
                }
                None => {
                    remainder.push(lt);
                    p.terms.remove(0);
                }
            }
        }
        let quotients = quotients
            .into_iter()
            .map(|q| Polynomial::from_terms(&self.ring, q))
            .collect();
        Ok((
            quotients,
            Polynomial {
                ring: self.ring.clone(),
                terms: remainder,
            },
        ))
    }

    /// Moves the polynomial into `ring`, which must have the same field.
    /// `var_map[i]` is the index in `ring` of this ring's variable `i`.
    pub fn remap(&self, ring: &Ring, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .map(|t| (t.monomial.remap(var_map, ring.nvars()), t.coeff.clone())),
        )
    }

    /// Re-sorts the terms for a ring that differs only in its monomial order.
    pub fn with_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(Error::ContextMismatch);
        }
        let ident: Vec<usize> = (0..ring.nvars()).collect();
        Ok(self.remap(ring, &ident))
    }

    /// Maps coefficients into the field of `ring` (same variables), e.g. from
    /// `Q` to `F_p`. Fails on a denominator divisible by `p`.
    pub fn map_field(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.vars() != self.ring.vars() {
            return Err(Error::ContextMismatch);
        }
        let target = ring.field();
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = match &t.coeff {
                Scalar::Rational(q) => target.from_rational(q)?,
                Scalar::Mod(r) => {
                    if self.ring.field() != target {
                        return Err(Error::ContextMismatch);
                    }
                    Scalar::Mod(*r)
                }
            };
            raw.push((t.monomial.clone(), c));
        }
        Ok(Polynomial::from_terms(ring, raw))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different rings; use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field().from_i64(-1))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::{MonomialOrder, RingContext};

    fn ring(n: usize, order: MonomialOrder) -> Ring {
        RingContext::standard(Field::Rational, n, order)
    }

    #[test]
    fn pow_zero_is_one() {
        let r = ring(2, MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        assert!(x.pow(0).is_one());
        assert!(Polynomial::zero(&r).pow(0).is_one());
    }

    #[test]
    fn add_disjoint_supports() {
        let r = ring(4, MonomialOrder::Grevlex);
        let x = |i| Polynomial::var(&r, i);
        let s = &x(0) * &x(1) + &x(2) * &x(3);
        assert_eq!(s.len(), 2);
        assert!(s.terms().iter().all(|t| t.coeff.is_one()));
    }

    #[test]
    fn freshmans_dream_mod_three() {
        let r = RingContext::standard(Field::prime(3).unwrap(), 2, MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let cube = (&x + &y).pow(3);
        assert_eq!(cube, x.pow(3) + y.pow(3));
    }

    #[test]
    fn cross_ring_arithmetic_rejected() {
        let a = Polynomial::var(&ring(2, MonomialOrder::Lex), 0);
        let b = Polynomial::var(&ring(2, MonomialOrder::Grevlex), 0);
        assert!(matches!(a.checked_add(&b), Err(Error::ContextMismatch)));
    }

    #[test]
    fn divide_trivial_cases() {
        let r = ring(3, MonomialOrder::Lex);
        let x = |i| Polynomial::var(&r, i);
        let (q, rem) = x(0).divide_multi(&[x(0)]).unwrap();
        assert!(q[0].is_one() && rem.is_zero());
        let (q, rem) = x(1).divide_multi(&[x(0), x(2)]).unwrap();
        assert!(q.iter().all(Polynomial::is_zero));
        assert_eq!(rem, x(1));
        assert!(matches!(
            x(1).divide_multi(&[Polynomial::zero(&r)]),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn with_ring_resorts_terms() {
        let lex = ring(2, MonomialOrder::Lex);
        let grevlex = lex.with_order(MonomialOrder::Grevlex);
        let f = Polynomial::var(&lex, 0) + Polynomial::var(&lex, 1).pow(2);
        let g = f.with_ring(&grevlex).unwrap();
        assert_eq!(g.leading_monomial().unwrap().exponents(), &[0, 2]);
        assert_eq!(f.leading_monomial().unwrap().exponents(), &[1, 0]);
    }
}
