//! The matrix criterion.
//!
//! Let `A` be the `n × (n-1)` matrix whose row `k` is `c_k * e_{i_k}`, and
//! let `Δ_k` be the minor obtained by deleting row `k`. With arbitrary
//! weights `α_k0`,
//!
//! ```text
//! p0  = Σ_k (-1)^k α_k0 Δ_k
//! q_k = α_k0 p0 + c_k p_{i_k}
//! ```
//!
//! and `Σ_k (-1)^k Δ_k q_k = p0²`, so `(p0, c_1 p_{i_1}, ..., c_n p_{i_n})`
//! and `(q_1, ..., q_n)` have the same radical.

use crate::error::{Error, Result};
use crate::groebner::Engine;
use crate::ideal::Ideal;
use crate::membership::RadicalEquality;
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

/// Row `c * e_column` of the matrix; `column` is 1-based.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRow {
    pub coeff: Polynomial,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixCriterionInput {
    ring: Ring,
    p: Vec<Polynomial>,
    rows: Vec<MatrixRow>,
    alpha0: Vec<Polynomial>,
}

impl MatrixCriterionInput {
    /// `p` has `n - 1` entries, `rows` and `alpha0` have `n`, with `n ≥ 2`.
    pub fn new(
        ring: &Ring,
        p: Vec<Polynomial>,
        rows: Vec<MatrixRow>,
        alpha0: Vec<Polynomial>,
    ) -> Result<Self> {
        let n = rows.len();
        if n < 2 {
            return Err(Error::MalformedInput(
                "the matrix needs at least two rows".into(),
            ));
        }
        if p.len() != n - 1 {
            return Err(Error::MalformedInput(format!(
                "{n} rows need {} polynomials p, found {}",
                n - 1,
                p.len()
            )));
        }
        if alpha0.len() != n {
            return Err(Error::MalformedInput(format!(
                "{n} rows need {n} weights alpha0, found {}",
                alpha0.len()
            )));
        }
        if let Some(r) = rows.iter().find(|r| r.column == 0 || r.column >= n) {
            return Err(Error::MalformedInput(format!(
                "row column {} outside 1..={}",
                r.column,
                n - 1
            )));
        }
        let all = p.iter().chain(&alpha0).chain(rows.iter().map(|r| &r.coeff));
        for f in all {
            if !same_ring(ring, f.ring()) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(MatrixCriterionInput {
            ring: ring.clone(),
            p,
            rows,
            alpha0,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of rows `n`.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn p(&self) -> &[Polynomial] {
        &self.p
    }

    pub fn rows(&self) -> &[MatrixRow] {
        &self.rows
    }

    pub fn alpha0(&self) -> &[Polynomial] {
        &self.alpha0
    }

    /// Entry `A[k][j]` with 0-based row `k` and 0-based column `j`.
    pub fn entry(&self, k: usize, j: usize) -> Polynomial {
        let row = &self.rows[k];
        if row.column == j + 1 {
            row.coeff.clone()
        } else {
            Polynomial::zero(&self.ring)
        }
    }
}

/// Signed maximal minors `Δ_1, ..., Δ_n` of the single-entry-per-row matrix.
///
/// `Δ_k` vanishes unless the columns of the remaining rows are all distinct;
/// then it is the sign of that column permutation times the product of the
/// remaining row coefficients.
pub fn matrix_minors(input: &MatrixCriterionInput) -> Vec<Polynomial> {
    let n = input.n();
    (0..n)
        .map(|k| {
            let cols: Vec<usize> = (0..n)
                .filter(|&j| j != k)
                .map(|j| input.rows[j].column)
                .collect();
            let mut seen = vec![false; n];
            for &c in &cols {
                if seen[c] {
                    return Polynomial::zero(input.ring());
                }
                seen[c] = true;
            }
            let inversions = (0..cols.len())
                .flat_map(|a| (a + 1..cols.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| cols[a] > cols[b])
                .count();
            let product = (0..n)
                .filter(|&j| j != k)
                .fold(Polynomial::one(input.ring()), |acc, j| {
                    acc * &input.rows[j].coeff
                });
            if inversions % 2 == 1 {
                -product
            } else {
                product
            }
        })
        .collect()
}

fn alternating(k: usize, f: Polynomial) -> Polynomial {
    // Rows are numbered from 1, so 0-based row k carries (-1)^(k+1).
    if k % 2 == 0 {
        -f
    } else {
        f
    }
}

/// Minors, `p0`, the outputs `q_k`, and (when certified) the radical equality
/// between the source ideal and the outputs.
#[derive(Clone, Debug)]
pub struct MatrixConstruction {
    pub minors: Vec<Polynomial>,
    pub p0: Polynomial,
    pub outputs: Vec<Polynomial>,
    /// `(p0, c_1 p_{i_1}, ..., c_n p_{i_n})`.
    pub source: Vec<Polynomial>,
    pub certificate: Option<RadicalEquality>,
}

impl MatrixConstruction {
    /// Computes minors, `p0` and the outputs without certifying.
    pub fn build(input: &MatrixCriterionInput) -> MatrixConstruction {
        let ring = input.ring();
        let minors = matrix_minors(input);
        let p0 = minors
            .iter()
            .zip(&input.alpha0)
            .enumerate()
            .fold(Polynomial::zero(ring), |acc, (k, (d, a))| {
                acc + alternating(k, a * d)
            });
        let products: Vec<Polynomial> = input
            .rows
            .iter()
            .map(|r| &r.coeff * &input.p[r.column - 1])
            .collect();
        let outputs = input
            .alpha0
            .iter()
            .zip(&products)
            .map(|(a, cp)| a * &p0 + cp)
            .collect();
        let mut source = vec![p0.clone()];
        source.extend(products);
        MatrixConstruction {
            minors,
            p0,
            outputs,
            source,
            certificate: None,
        }
    }

    /// `Σ_k (-1)^k Δ_k q_k - p0²`; zero for every valid construction.
    pub fn square_identity_defect(&self) -> Polynomial {
        let ring = self.p0.ring();
        let lhs = self
            .minors
            .iter()
            .zip(&self.outputs)
            .enumerate()
            .fold(Polynomial::zero(ring), |acc, (k, (d, q))| {
                acc + alternating(k, d * q)
            });
        lhs - self.p0.pow(2)
    }

    /// `Σ_k (-1)^k Δ_k A[k][j]` for each column `j`; all zero since they
    /// expand determinants with a repeated column.
    pub fn laplace_column_sums(&self, input: &MatrixCriterionInput) -> Vec<Polynomial> {
        let ring = input.ring();
        (0..input.n() - 1)
            .map(|j| {
                self.minors
                    .iter()
                    .enumerate()
                    .fold(Polynomial::zero(ring), |acc, (k, d)| {
                        acc + alternating(k, d * input.entry(k, j))
                    })
            })
            .collect()
    }

    pub fn certified(&self) -> bool {
        self.certificate.as_ref().is_some_and(|c| c.equal)
    }
}

/// Outputs of the two-row special case.
#[derive(Clone, Debug)]
pub struct Corollary1 {
    pub q1: Polynomial,
    pub q2: Polynomial,
    /// `(a1*b1 + a2*b2, b1*g, b2*g)`.
    pub target: Ideal,
    pub certificate: RadicalEquality,
}

impl Corollary1 {
    /// The two generators without certification:
    /// `q1 = a1*p0 + b2*g`, `q2 = a2*p0 - b1*g` with `p0 = a1*b1 + a2*b2`.
    pub fn generators(
        a1: &Polynomial,
        a2: &Polynomial,
        b1: &Polynomial,
        b2: &Polynomial,
        g: &Polynomial,
    ) -> Result<(Polynomial, Polynomial)> {
        let ring = a1.ring();
        let input = MatrixCriterionInput::new(
            ring,
            vec![g.clone()],
            vec![
                MatrixRow {
                    coeff: b2.clone(),
                    column: 1,
                },
                MatrixRow {
                    coeff: -b1,
                    column: 1,
                },
            ],
            vec![a1.clone(), a2.clone()],
        )?;
        let mut out = MatrixConstruction::build(&input).outputs.into_iter();
        Ok((out.next().unwrap(), out.next().unwrap()))
    }
}

impl Engine {
    /// Builds the construction and certifies
    /// `√(p0, c_k p_{i_k}) = √(q_1, ..., q_n)`.
    pub fn theorem1_construct(&self, input: &MatrixCriterionInput) -> Result<MatrixConstruction> {
        let mut c = MatrixConstruction::build(input);
        let source = Ideal::new(input.ring(), c.source.clone())?;
        let outputs = Ideal::new(input.ring(), c.outputs.clone())?;
        c.certificate = Some(self.radical_equal(&source, &outputs)?);
        Ok(c)
    }

    /// `√(a1*b1 + a2*b2, b1*g, b2*g) = √(q1, q2)`.
    pub fn corollary1(
        &self,
        a1: &Polynomial,
        a2: &Polynomial,
        b1: &Polynomial,
        b2: &Polynomial,
        g: &Polynomial,
    ) -> Result<Corollary1> {
        let (q1, q2) = Corollary1::generators(a1, a2, b1, b2, g)?;
        let ring = a1.ring();
        let p0 = a1 * b1 + a2 * b2;
        let target = Ideal::new(ring, [p0, b1 * g, b2 * g])?;
        let outputs = Ideal::new(ring, [q1.clone(), q2.clone()])?;
        let certificate = self.radical_equal(&target, &outputs)?;
        Ok(Corollary1 {
            q1,
            q2,
            target,
            certificate,
        })
    }
}
