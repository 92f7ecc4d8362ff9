pub mod constructions;
pub mod elimination;
pub mod error;
pub mod field;
pub mod formats;
pub mod groebner;
pub mod ideal;
pub mod membership;
pub mod monomial;
pub mod paper;
pub mod parse;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use groebner::{normal_form, reduce_basis, Counters, Engine, GroebnerBasis, Limits, Selection};
pub use ideal::Ideal;
pub use membership::{MembershipCertificate, QueryKind, RadicalEquality, Verdict, Witness};
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::{Polynomial, Term};
pub use ring::{MonomialOrder, Ring, RingContext};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/elimination.md")]
    mod elimination {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/matrix.md")]
    mod matrix {}
    #[doc = include_str!("../../../book/src/recursion.md")]
    mod recursion {}
    #[doc = include_str!("../../../book/src/cases.md")]
    mod cases {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
