//! Ideal membership, radical membership (Rabinowitsch) and radical equality,
//! each backed by a re-checkable certificate.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{is_groebner, normal_form, Counters, Engine, GroebnerBasis};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    RadicalMember,
    NonMember,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QueryKind {
    /// `f ∈ I`
    Ideal,
    /// `f ∈ √I`
    Radical,
}

/// Evidence for a membership verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// Reduced basis of the ideal and the normal form of the query.
    NormalForm {
        basis: Vec<Polynomial>,
        normal_form: Polynomial,
    },
    /// Reduced basis of `I + (1 - t*f)` in the ring extended by `t`, which is
    /// appended as the last variable. It is `{1}` exactly when `f ∈ √I`.
    Rabinowitsch {
        variable: String,
        basis: Vec<Polynomial>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipCertificate {
    pub query: Polynomial,
    pub ideal: Ideal,
    pub kind: QueryKind,
    pub verdict: Verdict,
    pub witness: Witness,
    pub counters: Counters,
}

/// Serialized form of a [`MembershipCertificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub query: String,
    pub ideal_hash: String,
    pub verdict: Verdict,
    pub kind: QueryKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fresh_variable: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_basis: Option<Vec<String>>,
    pub order: String,
}

impl MembershipCertificate {
    pub fn holds(&self) -> bool {
        self.verdict != Verdict::NonMember
    }

    pub fn record(&self) -> CertificateRecord {
        let strings = |b: &[Polynomial]| b.iter().map(ToString::to_string).collect();
        let (fresh_variable, normal_form, witness_basis) = match &self.witness {
            Witness::NormalForm { basis, normal_form } => {
                (None, Some(normal_form.to_string()), Some(strings(basis)))
            }
            Witness::Rabinowitsch { variable, basis } => {
                (Some(variable.clone()), None, Some(strings(basis)))
            }
        };
        CertificateRecord {
            query: self.query.to_string(),
            ideal_hash: self.ideal.content_hash(),
            verdict: self.verdict,
            kind: self.kind,
            fresh_variable,
            normal_form,
            witness_basis,
            order: self.ideal.ring().order().name(),
        }
    }

    /// Checks the witness without running Buchberger: the stored basis must
    /// pass Buchberger's S-polynomial criterion, contain the (augmented)
    /// ideal, and agree with the verdict.
    pub fn recheck(&self) -> bool {
        match &self.witness {
            Witness::NormalForm {
                basis,
                normal_form: nf,
            } => {
                let ring = self.ideal.ring();
                let gb = GroebnerBasis::from_elements(ring, basis.clone(), true);
                is_groebner(basis)
                    && self
                        .ideal
                        .gens()
                        .iter()
                        .all(|g| normal_form(g, &gb).is_ok_and(|r| r.is_zero()))
                    && normal_form(&self.query, &gb).is_ok_and(|r| r == *nf)
                    && (nf.is_zero() == (self.verdict == Verdict::Member))
            }
            Witness::Rabinowitsch { variable, basis } => {
                let (ext, aug) = rabinowitsch_ideal(&self.query, &self.ideal, variable);
                let Ok(lifted) = basis
                    .iter()
                    .map(|b| Polynomial::parse(&b.to_string(), &ext))
                    .collect::<Result<Vec<_>>>()
                else {
                    return false;
                };
                let gb = GroebnerBasis::from_elements(&ext, lifted.clone(), true);
                let unit = lifted.iter().any(Polynomial::is_unit);
                is_groebner(&lifted)
                    && aug
                        .gens()
                        .iter()
                        .all(|g| normal_form(g, &gb).is_ok_and(|r| r.is_zero()))
                    && (unit == (self.verdict == Verdict::RadicalMember))
            }
        }
    }

    /// Recomputes the certificate from scratch and compares.
    pub fn replay(&self, engine: &Engine) -> Result<bool> {
        let again = match self.kind {
            QueryKind::Ideal => engine.ideal_member(&self.query, &self.ideal)?,
            QueryKind::Radical => engine.radical_member(&self.query, &self.ideal)?,
        };
        Ok(again.verdict == self.verdict && again.witness == self.witness)
    }
}

/// Result of comparing two ideals up to radical.
#[derive(Clone, Debug, PartialEq)]
pub struct RadicalEquality {
    pub equal: bool,
    /// Generators of the first ideal tested against the radical of the second.
    pub forward: Vec<MembershipCertificate>,
    /// Generators of the second ideal tested against the radical of the first.
    pub backward: Vec<MembershipCertificate>,
}

impl RadicalEquality {
    pub fn counters(&self) -> Counters {
        let mut c = Counters::default();
        for cert in self.forward.iter().chain(&self.backward) {
            c += cert.counters;
        }
        c
    }

    pub fn certificates(&self) -> impl Iterator<Item = &MembershipCertificate> {
        self.forward.iter().chain(&self.backward)
    }
}

/// `K[vars, t]` and `I + (1 - t*f)` in it.
fn rabinowitsch_ideal(f: &Polynomial, ideal: &Ideal, variable: &str) -> (Ring, Ideal) {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut vars = ring.vars().to_vec();
    vars.push(variable.to_string());
    let ext = crate::ring::RingContext::new(ring.field(), vars, ring.order())
        .expect("fresh variable name");
    let embed: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&ext, n);
    let one = Polynomial::one(&ext);
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.remap(&ext, &embed)).collect();
    gens.push(one - t * f.remap(&ext, &embed));
    let aug = Ideal::new(&ext, gens).expect("same ring");
    (ext, aug)
}

impl Engine {
    /// Decides `f ∈ I` by reduction modulo the reduced Gröbner basis.
    pub fn ideal_member(&self, f: &Polynomial, ideal: &Ideal) -> Result<MembershipCertificate> {
        if !same_ring(f.ring(), ideal.ring()) {
            return Err(Error::ContextMismatch);
        }
        let gb = self.groebner(ideal)?;
        let nf = normal_form(f, &gb)?;
        Ok(MembershipCertificate {
            query: f.clone(),
            ideal: ideal.clone(),
            kind: QueryKind::Ideal,
            verdict: if nf.is_zero() {
                Verdict::Member
            } else {
                Verdict::NonMember
            },
            counters: gb.counters(),
            witness: Witness::NormalForm {
                basis: gb.elements().to_vec(),
                normal_form: nf,
            },
        })
    }

    /// Decides `f ∈ √I`: true iff `1 ∈ I + (1 - t*f)` for a fresh variable `t`.
    pub fn radical_member(&self, f: &Polynomial, ideal: &Ideal) -> Result<MembershipCertificate> {
        if !same_ring(f.ring(), ideal.ring()) {
            return Err(Error::ContextMismatch);
        }
        let variable = ideal.ring().fresh_name("t");
        let (_, aug) = rabinowitsch_ideal(f, ideal, &variable);
        let gb = self.groebner(&aug)?;
        let verdict = if gb.is_unit() {
            Verdict::RadicalMember
        } else {
            Verdict::NonMember
        };
        Ok(MembershipCertificate {
            query: f.clone(),
            ideal: ideal.clone(),
            kind: QueryKind::Radical,
            verdict,
            counters: gb.counters(),
            witness: Witness::Rabinowitsch {
                variable,
                basis: gb.elements().to_vec(),
            },
        })
    }

    /// `√I = √J`, decided generator by generator in both directions. Every
    /// generator gets a certificate even after a failure is found.
    pub fn radical_equal(&self, a: &Ideal, b: &Ideal) -> Result<RadicalEquality> {
        if !same_ring(a.ring(), b.ring()) {
            return Err(Error::ContextMismatch);
        }
        let forward = self.radical_members(a.gens(), b)?;
        let backward = self.radical_members(b.gens(), a)?;
        let equal = forward.iter().chain(&backward).all(|c| c.holds());
        Ok(RadicalEquality {
            equal,
            forward,
            backward,
        })
    }

    /// Certifies each of `polys` against `√ideal`; runs the queries in
    /// parallel and returns them in input order.
    pub fn radical_members(
        &self,
        polys: &[Polynomial],
        ideal: &Ideal,
    ) -> Result<Vec<MembershipCertificate>> {
        polys
            .par_iter()
            .map(|f| self.radical_member(f, ideal))
            .collect()
    }

    /// Cofactors `c` with `f = sum c_i * gens_i`, or `None` if `f ∉ I`.
    pub fn lift(&self, f: &Polynomial, ideal: &Ideal) -> Result<Option<Vec<Polynomial>>> {
        if !same_ring(f.ring(), ideal.ring()) {
            return Err(Error::ContextMismatch);
        }
        let ring = ideal.ring();
        if ideal.is_zero() {
            return Ok(f.is_zero().then(Vec::new));
        }
        let tracked = self.buchberger_tracked(ideal)?;
        let (quotients, rem) = f.divide_multi(tracked.basis.elements())?;
        if !rem.is_zero() {
            return Ok(None);
        }
        let mut out = vec![Polynomial::zero(ring); ideal.gens().len()];
        for (q, cof) in quotients.iter().zip(&tracked.cofactors) {
            if q.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(cof) {
                *o = &*o + &(q * c);
            }
        }
        Ok(Some(out))
    }
}
