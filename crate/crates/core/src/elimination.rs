//! Elimination ideals, intersections and Krull dimension.

use crate::error::{Error, Result};
use crate::groebner::Engine;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{same_ring, MonomialOrder, RingContext};

impl Engine {
    /// `I ∩ K[remaining variables]`, read off a lex basis with the eliminated
    /// variables moved to the front. The result lives in the subring on the
    /// remaining variables (original relative order, original monomial order).
    pub fn eliminate(&self, ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
        let ring = ideal.ring();
        let n = ring.nvars();
        if let Some(&bad) = vars.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedInput(format!(
                "variable index {bad} out of range"
            )));
        }
        let keep: Vec<usize> = (0..n).filter(|i| !vars.contains(i)).collect();
        let mut elim: Vec<usize> = vars.to_vec();
        elim.sort_unstable();
        elim.dedup();

        // Variable i of `ring` goes to position perm[i] of the lex ring.
        let mut perm = vec![0; n];
        for (pos, &v) in elim.iter().chain(&keep).enumerate() {
            perm[v] = pos;
        }
        let lex_vars: Vec<String> = elim
            .iter()
            .chain(&keep)
            .map(|&v| ring.vars()[v].clone())
            .collect();
        let lex = RingContext::new(ring.field(), lex_vars, MonomialOrder::Lex)?;
        let moved = Ideal::new(&lex, ideal.gens().iter().map(|g| g.remap(&lex, &perm)))?;
        let gb = self.groebner(&moved)?;

        let sub_vars: Vec<String> = keep.iter().map(|&v| ring.vars()[v].clone()).collect();
        let sub = RingContext::new(ring.field(), sub_vars, ring.order())?;
        let k = elim.len();
        // Lex ring position k + j maps to subring index j.
        let back: Vec<usize> = (0..n).map(|pos| pos.saturating_sub(k)).collect();
        let gens = gb
            .elements()
            .iter()
            .filter(|g| g.variables().iter().all(|&v| v >= k))
            .map(|g| g.remap(&sub, &back));
        Ideal::new(&sub, gens)
    }

    /// `I ∩ J` as the elimination of `t` from `t*I + (1 - t)*J`.
    pub fn intersect(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        if !same_ring(a.ring(), b.ring()) {
            return Err(Error::ContextMismatch);
        }
        let ring = a.ring();
        let ext = ring.extend("t", 0, ring.order());
        let shift: Vec<usize> = (1..=ring.nvars()).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext) - &t;
        let gens = a.gens().iter().map(|g| &t * g.remap(&ext, &shift)).chain(
            b.gens()
                .iter()
                .map(|g| &one_minus_t * g.remap(&ext, &shift)),
        );
        let both = Ideal::new(&ext, gens)?;
        let cut = self.eliminate(&both, &[0])?;
        let gens = cut
            .gens()
            .iter()
            .map(|g| g.with_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// Krull dimension of `R/I`, computed from the leading monomials of the
    /// reduced basis: `n` minus the size of a smallest variable set meeting
    /// the support of every leading monomial.
    pub fn dimension(&self, ideal: &Ideal) -> Result<usize> {
        let n = ideal.ring().nvars();
        if n > 64 {
            return Err(Error::MalformedInput(
                "dimension supports at most 64 variables".into(),
            ));
        }
        let gb = self.groebner(ideal)?;
        if gb.is_unit() {
            return Err(Error::ImproperIdeal);
        }
        let mut supports: Vec<u64> = gb
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u64, |acc, i| acc | 1 << i))
            .collect();
        supports.sort_unstable();
        supports.dedup();
        // Only inclusion-minimal supports matter for hitting sets.
        let minimal: Vec<u64> = supports
            .iter()
            .copied()
            .filter(|&s| !supports.iter().any(|&o| o != s && o & s == o))
            .collect();
        let mut best = n;
        min_hitting_set(&minimal, 0, 0, &mut best);
        Ok(n - best)
    }
}

fn min_hitting_set(sets: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match sets.iter().find(|&&s| s & chosen == 0) {
        None => *best = size,
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                min_hitting_set(sets, chosen | v, size + 1, best);
                bits &= bits - 1;
            }
        }
    }
}
