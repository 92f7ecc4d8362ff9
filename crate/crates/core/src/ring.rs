//! Ring contexts: coefficient field, variable names, monomial order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;

/// Monomial orders. Variables are ranked `x1 > x2 > ... > xn` in every order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Pure lexicographic.
    Lex,
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Elimination order: grevlex on the first `k` variables, ties broken by
    /// grevlex on the remaining ones.
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "monomials of different lengths");
        self.compare_exps(a.exponents(), b.exponents())
    }

    fn compare_exps(&self, x: &[u32], y: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => x.cmp(y),
            MonomialOrder::Grevlex => grevlex(x, y),
            MonomialOrder::Block(k) => {
                let k = (*k).min(x.len());
                grevlex(&x[..k], &y[..k]).then_with(|| grevlex(&x[k..], &y[k..]))
            }
        }
    }

    /// Whether larger total degree always means a larger monomial.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }

    /// Like [`compare`](Self::compare) but reports a length mismatch.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        Ok(self.compare_exps(a.exponents(), b.exponents()))
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Block(k) => format!("block:{k}"),
        }
    }
}

fn grevlex(x: &[u32], y: &[u32]) -> Ordering {
    let dx: u64 = x.iter().map(|&e| e as u64).sum();
    let dy: u64 = y.iter().map(|&e| e as u64).sum();
    dx.cmp(&dy).then_with(|| {
        // The rightmost differing exponent decides; the smaller exponent wins.
        for (a, b) in x.iter().zip(y).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::Grevlex),
            _ => match s.strip_prefix("block:").map(str::parse) {
                Some(Ok(k)) => Ok(MonomialOrder::Block(k)),
                _ => Err(Error::InvalidRing(format!("unknown monomial order `{s}`"))),
            },
        }
    }
}

/// A polynomial ring `K[x1, ..., xn]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// Shared handle to a ring context; every polynomial holds one.
pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!(
                    "`{v}` is not a valid variable name"
                )));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(RingContext { field, vars, order }))
    }

    /// `K[x1, ..., xn]`.
    pub fn standard(field: Field, n: usize, order: MonomialOrder) -> Ring {
        let vars = (1..=n).map(|i| format!("x{i}")).collect();
        Arc::new(RingContext { field, vars, order })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingContext {
            order,
            ..self.clone()
        })
    }

    pub fn with_field(&self, field: Field) -> Ring {
        Arc::new(RingContext {
            field,
            ..self.clone()
        })
    }

    /// A variable name not yet used in this ring, based on `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}_{i}"))
            .find(|c| self.var_index(c).is_none())
            .unwrap()
    }

    /// Inserts a fresh variable at `position`, keeping the field and order.
    pub fn extend(&self, base: &str, position: usize, order: MonomialOrder) -> Ring {
        let mut vars = self.vars.clone();
        vars.insert(position, self.fresh_name(base));
        Arc::new(RingContext {
            field: self.field,
            vars,
            order,
        })
    }

    /// The `ring <field> <vars...>` header line of the ideal file format.
    pub fn header(&self) -> String {
        let mut s = format!("ring {}", self.field);
        for v in &self.vars {
            s.push(' ');
            s.push_str(v);
        }
        s
    }
}

/// Two handles denote the same ring.
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
