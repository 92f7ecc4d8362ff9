use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{same_ring, MonomialOrder, Ring};

/// A finitely generated ideal. Zero generators are dropped on construction;
/// the remaining order is kept for deterministic output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::new();
        for g in gens {
            if !same_ring(ring, g.ring()) {
                return Err(Error::ContextMismatch);
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
        })
    }

    /// Parses each generator with [`Polynomial::parse`].
    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|g| Polynomial::parse(g.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The same generators, re-sorted for another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        let ring = self.ring.with_order(order);
        Ideal {
            gens: self
                .gens
                .iter()
                .map(|g| g.with_ring(&ring).expect("same variables"))
                .collect(),
            ring,
        }
    }

    /// The same generators with coefficients mapped into `ring`'s field.
    pub fn map_field(&self, ring: &Ring) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_field(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::ContextMismatch);
        }
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `self * other`, generated by pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::ContextMismatch);
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b));
        Ideal::new(&self.ring, gens)
    }

    /// The ideal file form: ring header plus one generator per line.
    pub fn to_file_string(&self) -> String {
        let mut s = self.ring.header();
        s.push('\n');
        for g in &self.gens {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// SHA-256 of [`to_file_string`](Self::to_file_string), hex encoded.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_file_string().as_bytes()))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
