//! Recursive construction for `J = (a1*b1 + a2*b2) + (b1, b2)(g_1, ..., g_{n-1})`.
//!
//! Start from the two-row matrix construction for `g_1`. For each further
//! `g_m`, write the current first generator as `q1 = a1'*b1 + a2'*b2` and
//! replace it by `a1'*q1 + b2*g_m`, appending `a2'*q1 - b1*g_m`. All outputs
//! stay inside `(b1, b2)`, and `n` outputs generate `J` up to radical.

use crate::constructions::matrix::Corollary1;
use crate::error::{Error, Result};
use crate::groebner::Engine;
use crate::ideal::Ideal;
use crate::membership::{MembershipCertificate, RadicalEquality};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Prop1Input {
    pub alpha1: Polynomial,
    pub alpha2: Polynomial,
    pub beta1: Polynomial,
    pub beta2: Polynomial,
    pub gammas: Vec<Polynomial>,
}

impl Prop1Input {
    pub fn new(
        alpha1: Polynomial,
        alpha2: Polynomial,
        beta1: Polynomial,
        beta2: Polynomial,
        gammas: Vec<Polynomial>,
    ) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::MalformedInput(
                "at least one gamma is required".into(),
            ));
        }
        let ring = alpha1.ring().clone();
        for f in [&alpha2, &beta1, &beta2].into_iter().chain(&gammas) {
            if !same_ring(&ring, f.ring()) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(Prop1Input {
            alpha1,
            alpha2,
            beta1,
            beta2,
            gammas,
        })
    }

    pub fn ring(&self) -> &Ring {
        self.alpha1.ring()
    }

    /// `a1*b1 + a2*b2, b1*g_1, b2*g_1, b1*g_2, ...`
    pub fn target(&self) -> Ideal {
        let mut gens = vec![&self.alpha1 * &self.beta1 + &self.alpha2 * &self.beta2];
        for g in &self.gammas {
            gens.push(&self.beta1 * g);
            gens.push(&self.beta2 * g);
        }
        Ideal::new(self.ring(), gens).expect("same ring")
    }

    pub fn beta_ideal(&self) -> Ideal {
        Ideal::new(self.ring(), [self.beta1.clone(), self.beta2.clone()]).expect("same ring")
    }
}

#[derive(Clone, Debug)]
pub struct Prop1Construction {
    /// `q1, q2, ..., qn` in the order produced (the first one updated in place).
    pub generators: Vec<Polynomial>,
    /// The witnesses `(a1', a2')` used at each inductive step.
    pub lifts: Vec<(Polynomial, Polynomial)>,
    /// Membership of every output in `(b1, b2)`.
    pub beta_membership: Vec<MembershipCertificate>,
    pub target: Ideal,
    pub certificate: RadicalEquality,
}

impl Prop1Construction {
    pub fn certified(&self) -> bool {
        self.certificate.equal && self.beta_membership.iter().all(|c| c.holds())
    }
}

impl Engine {
    /// Witness `(a1', a2')` with `f = a1'*b1 + a2'*b2`.
    ///
    /// Dividing by `[b1, b2]` in the ring's order is tried first, which keeps
    /// the witness canonical for a fixed order; if it leaves a remainder the
    /// representation is recovered from a cofactor-tracking Gröbner basis.
    pub fn lift_in_ideal(
        &self,
        f: &Polynomial,
        b1: &Polynomial,
        b2: &Polynomial,
    ) -> Result<(Polynomial, Polynomial)> {
        let ring = f.ring();
        if !same_ring(ring, b1.ring()) || !same_ring(ring, b2.ring()) {
            return Err(Error::ContextMismatch);
        }
        let zero = Polynomial::zero(ring);
        if f.is_zero() {
            return Ok((zero.clone(), zero));
        }
        let nonzero: Vec<(usize, &Polynomial)> = [b1, b2]
            .into_iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .collect();
        let not_in = || Error::NotInIdeal {
            poly: f.to_string(),
            ideal: format!("({b1}, {b2})"),
        };
        if nonzero.is_empty() {
            return Err(not_in());
        }
        let divisors: Vec<Polynomial> = nonzero.iter().map(|(_, b)| (*b).clone()).collect();
        let ideal = Ideal::new(ring, divisors.clone())?;
        let (quotients, rem) = f.divide_multi(&divisors)?;
        let quotients = if rem.is_zero() {
            quotients
        } else {
            self.lift(f, &ideal)?.ok_or_else(not_in)?
        };
        let mut out = [zero.clone(), zero];
        for ((k, _), q) in nonzero.iter().zip(quotients) {
            out[*k] = q;
        }
        let [a, b] = out;
        Ok((a, b))
    }

    /// Runs the recursion and returns the outputs with their membership
    /// certificates for `(b1, b2)`, without the final radical comparison.
    pub fn prop1_outputs(
        &self,
        input: &Prop1Input,
    ) -> Result<(Vec<Polynomial>, Vec<MembershipCertificate>)> {
        let (generators, _, membership) = self.prop1_recursion(input)?;
        Ok((generators, membership))
    }

    #[allow(clippy::type_complexity)]
    fn prop1_recursion(
        &self,
        input: &Prop1Input,
    ) -> Result<(
        Vec<Polynomial>,
        Vec<(Polynomial, Polynomial)>,
        Vec<MembershipCertificate>,
    )> {
        let (b1, b2) = (&input.beta1, &input.beta2);
        let (q1, q2) =
            Corollary1::generators(&input.alpha1, &input.alpha2, b1, b2, &input.gammas[0])?;
        let mut generators = vec![q1, q2];
        let mut lifts = Vec::new();
        for g in &input.gammas[1..] {
            let q1 = generators[0].clone();
            let (a1, a2) = self.lift_in_ideal(&q1, b1, b2).map_err(|e| match e {
                Error::NotInIdeal { poly, ideal } => {
                    Error::LiftFailure(format!("{poly} left the ideal {ideal}"))
                }
                other => other,
            })?;
            if &a1 * b1 + &a2 * b2 != q1 {
                return Err(Error::LiftFailure(format!("reconstruction of {q1} failed")));
            }
            generators[0] = &a1 * &q1 + b2 * g;
            generators.push(&a2 * &q1 - b1 * g);
            lifts.push((a1, a2));
        }

        let beta = input.beta_ideal();
        let beta_membership = generators
            .iter()
            .map(|q| self.ideal_member(q, &beta))
            .collect::<Result<Vec<_>>>()?;
        if let Some(bad) = beta_membership.iter().find(|c| !c.holds()) {
            return Err(Error::LiftFailure(format!(
                "{} is not in {}",
                bad.query, bad.ideal
            )));
        }
        Ok((generators, lifts, beta_membership))
    }

    /// The recursive construction with every output checked to lie in
    /// `(b1, b2)` and the final list certified against [`Prop1Input::target`].
    pub fn prop1_construct(&self, input: &Prop1Input) -> Result<Prop1Construction> {
        let (generators, lifts, beta_membership) = self.prop1_recursion(input)?;
        let target = input.target();
        let outputs = Ideal::new(input.ring(), generators.clone())?;
        let certificate = self.radical_equal(&target, &outputs)?;
        Ok(Prop1Construction {
            generators,
            lifts,
            beta_membership,
            target,
            certificate,
        })
    }
}
