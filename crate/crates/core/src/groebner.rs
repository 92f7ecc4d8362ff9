//! Buchberger's algorithm, reduced bases and normal forms.
//!
//! Pairs are selected by the normal strategy (smallest lcm in the monomial
//! order, which for grevlex means smallest lcm degree first;
//! [`Selection::Sugar`] is available as an alternative) and pruned with the
//! Gebauer–Möller installation of Buchberger's
//! coprime and chain criteria.

use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Term};
use crate::ring::{same_ring, Ring};

/// Resource guard for a single Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum number of elements in the (unreduced) basis.
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 200_000,
            max_basis: 20_000,
        }
    }
}

/// Work counters, summed over all Gröbner computations of an operation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub bases: u64,
    pub pairs: u64,
    pub new_elements: u64,
    pub zero_reductions: u64,
}

impl AddAssign for Counters {
    fn add_assign(&mut self, o: Counters) {
        self.bases += o.bases;
        self.pairs += o.pairs;
        self.new_elements += o.new_elements;
        self.zero_reductions += o.zero_reductions;
    }
}

/// A Gröbner basis for the order of its ring.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    reduced: bool,
    counters: Counters,
}

impl GroebnerBasis {
    /// Wraps a list that is asserted (not checked) to be a Gröbner basis.
    /// Use [`is_groebner`] to validate untrusted input.
    pub fn from_elements(ring: &Ring, elements: Vec<Polynomial>, reduced: bool) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            elements,
            reduced,
            counters: Counters::default(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn counters(&self) -> Counters {
        self.counters
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(Polynomial::is_unit)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.elements.iter().cloned()).expect("same ring")
    }
}

/// How the next S-pair is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Selection {
    /// Smallest lcm in the monomial order (for grevlex: smallest lcm degree).
    #[default]
    Normal,
    /// Smallest sugar degree first. Agrees with `Normal` on homogeneous input.
    Sugar,
}

/// Gröbner engine configured with resource limits.
#[derive(Clone, Copy, Debug, Default)]
pub struct Engine {
    pub limits: Limits,
    pub selection: Selection,
}

/// A Gröbner basis together with, for each element, cofactors expressing it
/// in terms of the original generators.
#[derive(Clone, Debug)]
pub struct TrackedBasis {
    pub basis: GroebnerBasis,
    pub cofactors: Vec<Vec<Polynomial>>,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    mask: u64,
    deg: u64,
}

struct Step {
    coeff: Scalar,
    mono: Monomial,
    index: usize,
}

struct Completion {
    polys: Vec<Polynomial>,
    cofactors: Vec<Vec<Polynomial>>,
    active: Vec<bool>,
    sugar: Vec<u64>,
    counters: Counters,
}

impl Engine {
    pub fn new(limits: Limits) -> Self {
        Engine {
            limits,
            selection: Selection::default(),
        }
    }

    pub fn with_selection(mut self, selection: Selection) -> Self {
        self.selection = selection;
        self
    }

    /// Buchberger completion of the generators. The result is a Gröbner basis
    /// but not necessarily reduced; see [`reduce_basis`] and [`Engine::groebner`].
    pub fn buchberger(&self, ideal: &Ideal) -> Result<GroebnerBasis> {
        let c = self.complete(ideal, false)?;
        let elements = active_elements(&c.polys, &c.active);
        Ok(GroebnerBasis {
            ring: ideal.ring().clone(),
            elements,
            reduced: false,
            counters: c.counters,
        })
    }

    /// The reduced Gröbner basis of `ideal`.
    pub fn groebner(&self, ideal: &Ideal) -> Result<GroebnerBasis> {
        Ok(reduce_basis(&self.buchberger(ideal)?))
    }

    /// Buchberger completion that also records, for every basis element, a
    /// representation in terms of `ideal.gens()`.
    pub fn buchberger_tracked(&self, ideal: &Ideal) -> Result<TrackedBasis> {
        let c = self.complete(ideal, true)?;
        let mut elements = Vec::new();
        let mut cofactors = Vec::new();
        for (k, p) in c.polys.iter().enumerate() {
            if c.active[k] {
                elements.push(p.clone());
                cofactors.push(c.cofactors[k].clone());
            }
        }
        Ok(TrackedBasis {
            basis: GroebnerBasis {
                ring: ideal.ring().clone(),
                elements,
                reduced: false,
                counters: c.counters,
            },
            cofactors,
        })
    }

    fn complete(&self, ideal: &Ideal, track: bool) -> Result<Completion> {
        let ring = ideal.ring();
        let field = ring.field();
        let order = ring.order();
        let ngens = ideal.gens().len();
        let mut st = Completion {
            polys: Vec::new(),
            cofactors: Vec::new(),
            active: Vec::new(),
            sugar: Vec::new(),
            counters: Counters {
                bases: 1,
                ..Counters::default()
            },
        };
        let mut pairs: Vec<Pair> = Vec::new();
        // Pairs of the current smallest selection degree, largest lcm first.
        let mut batch: Vec<Pair> = Vec::new();

        for (k, g) in ideal.gens().iter().enumerate() {
            let inv = field.inv(g.leading_coeff().expect("nonzero generator"));
            if track {
                let mut cof = vec![Polynomial::zero(ring); ngens];
                cof[k] = Polynomial::constant(ring, inv.clone());
                st.cofactors.push(cof);
            }
            st.polys.push(g.scale(&inv));
            st.sugar.push(g.total_degree().unwrap());
            update(
                &st.polys,
                &st.sugar,
                &mut st.active,
                &mut pairs,
                &mut batch,
                self.selection,
            );
            if g.is_unit() {
                return Ok(unit_completion(st));
            }
        }
        let mut active_idx: Vec<usize> = (0..st.polys.len()).filter(|&k| st.active[k]).collect();

        let by_lcm = |p: &Pair, q: &Pair| {
            order
                .compare(&q.lcm, &p.lcm)
                .then_with(|| (q.j, q.i).cmp(&(p.j, p.i)))
        };
        let mut cur = 0;
        loop {
            if batch.is_empty() {
                let Some(deg) = pairs.iter().map(|p| p.deg).min() else {
                    break;
                };
                cur = deg;
                let (now, later): (Vec<Pair>, Vec<Pair>) =
                    pairs.drain(..).partition(|p| p.deg == deg);
                pairs = later;
                batch = now;
                batch.sort_by(by_lcm);
            }
            let pair = batch.pop().unwrap();
            st.counters.pairs += 1;
            if st.counters.pairs as usize > self.limits.max_pairs {
                return Err(Error::ResourceLimit {
                    what: "S-pairs",
                    limit: self.limits.max_pairs,
                });
            }

            let (gi, gj) = (&st.polys[pair.i], &st.polys[pair.j]);
            let mi = gi
                .leading_monomial()
                .unwrap()
                .quotient_of(&pair.lcm)
                .unwrap();
            let mj = gj
                .leading_monomial()
                .unwrap()
                .quotient_of(&pair.lcm)
                .unwrap();
            let one = field.one();
            let s = gi.mul_term(&mi, &one) - gj.mul_term(&mj, &one);

            let divisors: Vec<&Polynomial> = active_idx.iter().map(|&k| &st.polys[k]).collect();
            let mut steps = Vec::new();
            let h = reduce(&s, &divisors, true, track.then_some(&mut steps));
            if h.is_zero() {
                st.counters.zero_reductions += 1;
                continue;
            }
            st.counters.new_elements += 1;
            let inv = field.inv(h.leading_coeff().unwrap());
            if track {
                let mut cof: Vec<Polynomial> = st.cofactors[pair.i]
                    .iter()
                    .zip(&st.cofactors[pair.j])
                    .map(|(a, b)| a.mul_term(&mi, &one) - b.mul_term(&mj, &one))
                    .collect();
                for step in &steps {
                    let src = &st.cofactors[active_idx[step.index]];
                    for (c, s) in cof.iter_mut().zip(src) {
                        *c = c.sub_scaled(&step.coeff, &step.mono, s);
                    }
                }
                st.cofactors
                    .push(cof.iter().map(|c| c.scale(&inv)).collect());
            }
            let unit = h.is_unit();
            st.polys.push(h.scale(&inv));
            st.sugar.push(pair.deg);
            if unit {
                return Ok(unit_completion(st));
            }
            update(
                &st.polys,
                &st.sugar,
                &mut st.active,
                &mut pairs,
                &mut batch,
                self.selection,
            );
            if pairs.iter().any(|p| p.deg <= cur) {
                let (now, later): (Vec<Pair>, Vec<Pair>) =
                    pairs.drain(..).partition(|p| p.deg <= cur);
                pairs = later;
                batch.extend(now);
                batch.sort_by(by_lcm);
            }
            active_idx = (0..st.polys.len()).filter(|&k| st.active[k]).collect();
            if active_idx.len() > self.limits.max_basis {
                return Err(Error::ResourceLimit {
                    what: "basis size",
                    limit: self.limits.max_basis,
                });
            }
        }
        Ok(st)
    }
}

/// Keeps only the last element, a constant, which alone generates the ideal.
fn unit_completion(mut st: Completion) -> Completion {
    let last = st.polys.len() - 1;
    st.active = (0..st.polys.len()).map(|k| k == last).collect();
    st
}

fn active_elements(polys: &[Polynomial], active: &[bool]) -> Vec<Polynomial> {
    polys
        .iter()
        .zip(active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect()
}

/// Gebauer–Möller update for the newest element `polys.last()`.
fn update(
    polys: &[Polynomial],
    sugar: &[u64],
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    batch: &mut Vec<Pair>,
    selection: Selection,
) {
    let h = polys.len() - 1;
    let lh = polys[h].leading_monomial().unwrap();
    let hmask = lh.divmask();

    let cands: Vec<(usize, Monomial, bool)> = (0..h)
        .filter(|&i| active[i])
        .map(|i| {
            let li = polys[i].leading_monomial().unwrap();
            (i, li.lcm(lh), li.is_coprime(lh))
        })
        .collect();
    let masks: Vec<u64> = cands.iter().map(|c| c.1.divmask()).collect();
    let mut kept: Vec<usize> = Vec::new();
    for a in 0..cands.len() {
        let (_, l, coprime) = &cands[a];
        let divides = |b: usize| masks[b] & !masks[a] == 0 && cands[b].1.divides(l);
        let dominated =
            !coprime && ((a + 1..cands.len()).any(divides) || kept.iter().any(|&b| divides(b)));
        if !dominated {
            kept.push(a);
        }
    }

    let keep = |p: &Pair| {
        if hmask & !p.mask != 0 || !lh.divides(&p.lcm) {
            return true;
        }
        let li = polys[p.i].leading_monomial().unwrap();
        let lj = polys[p.j].leading_monomial().unwrap();
        li.lcm_is(lh, &p.lcm) || lj.lcm_is(lh, &p.lcm)
    };
    pairs.retain(keep);
    batch.retain(keep);
    let lhd = lh.degree();
    let graded = polys[h].ring().order().is_graded();
    for a in kept {
        let (i, l, coprime) = &cands[a];
        if !coprime {
            let li = polys[*i].leading_monomial().unwrap().degree();
            let ld = l.degree();
            pairs.push(Pair {
                i: *i,
                j: h,
                deg: match selection {
                    Selection::Normal if graded => ld,
                    Selection::Normal => 0,
                    Selection::Sugar => (sugar[*i] + ld - li).max(sugar[h] + ld - lhd),
                },
                mask: masks[a],
                lcm: l.clone(),
            });
        }
    }

    for i in 0..h {
        if active[i] && lh.divides(polys[i].leading_monomial().unwrap()) {
            active[i] = false;
        }
    }
    active.push(true);
}

/// Reduces `f` by `divisors`. With `full` every term is reduced, otherwise
/// only the leading term is (top reduction). Each elementary step
/// `f -= coeff * mono * divisors[index]` is appended to `steps` if given.
fn reduce(
    f: &Polynomial,
    divisors: &[&Polynomial],
    full: bool,
    mut steps: Option<&mut Vec<Step>>,
) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let leads: Vec<&Term> = divisors.iter().map(|g| g.leading_term().unwrap()).collect();
    let masks: Vec<u64> = leads.iter().map(|l| l.monomial.divmask()).collect();
    // Work on the terms in ascending order so the leading term is `last()`.
    let mut p: Vec<Term> = f.terms().iter().rev().cloned().collect();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.last() {
        let tmask = lt.monomial.divmask();
        let hit = leads.iter().enumerate().find_map(|(k, l)| {
            if masks[k] & !tmask != 0 {
                return None;
            }
            l.monomial.quotient_of(&lt.monomial).map(|m| (k, m))
        });
        match hit {
            Some((k, m)) => {
                let c = field.div(&lt.coeff, &leads[k].coeff);
                p.pop();
                let tail = divisors[k].terms()[1..].iter().rev().map(|t| Term {
                    monomial: t.monomial.mul(&m),
                    coeff: field.neg(&field.mul(&c, &t.coeff)),
                });
                p = merge_ascending(p, tail, ring);
                if let Some(steps) = steps.as_deref_mut() {
                    steps.push(Step {
                        coeff: c,
                        mono: m,
                        index: k,
                    });
                }
            }
            None if full => rem.push(p.pop().unwrap()),
            None => break,
        }
    }
    rem.extend(p.into_iter().rev());
    Polynomial::from_terms(ring, rem.into_iter().map(|t| (t.monomial, t.coeff)))
}

fn merge_ascending(a: Vec<Term>, b: impl Iterator<Item = Term>, ring: &Ring) -> Vec<Term> {
    let field = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + 4);
    let mut a = a.into_iter().peekable();
    let mut b = b.peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => match order.compare(&x.monomial, &y.monomial) {
                std::cmp::Ordering::Less => out.push(a.next().unwrap()),
                std::cmp::Ordering::Greater => out.push(b.next().unwrap()),
                std::cmp::Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let c = field.add(&x.coeff, &y.coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            monomial: x.monomial,
                            coeff: c,
                        });
                    }
                }
            },
            (Some(_), None) => out.push(a.next().unwrap()),
            (None, Some(_)) => out.push(b.next().unwrap()),
            (None, None) => return out,
        }
    }
}

/// Inter-reduces a basis: removes redundant elements, tail-reduces the rest,
/// makes everything monic and sorts by ascending leading monomial.
///
/// For a Gröbner basis the result is the unique reduced Gröbner basis.
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    let ring = gb.ring();
    let order = ring.order();
    let mut elems: Vec<Polynomial> = gb
        .elements
        .iter()
        .filter(|g| !g.is_zero())
        .map(Polynomial::monic)
        .collect();
    if elems.iter().any(Polynomial::is_unit) {
        elems = vec![Polynomial::one(ring)];
    }
    let sort = |v: &mut Vec<Polynomial>| {
        v.sort_by(|a, b| {
            order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        })
    };
    sort(&mut elems);
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < elems.len() {
            let others: Vec<&Polynomial> = elems
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g)
                .collect();
            let h = reduce(&elems[i], &others, true, None);
            if h.is_zero() {
                elems.remove(i);
                changed = true;
                continue;
            }
            let h = h.monic();
            if h != elems[i] {
                elems[i] = h;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
        sort(&mut elems);
    }
    GroebnerBasis {
        ring: ring.clone(),
        elements: elems,
        reduced: true,
        counters: gb.counters,
    }
}

/// Fully reduced remainder of `f` modulo the basis. Zero iff `f` lies in the
/// ideal; unique when the basis is reduced.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if !same_ring(f.ring(), gb.ring()) {
        return Err(Error::ContextMismatch);
    }
    let divisors: Vec<&Polynomial> = gb.elements.iter().collect();
    Ok(reduce(f, &divisors, true, None))
}

/// The S-polynomial `lcm/LT(f) * f - lcm/LT(g) * g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.ring().field();
    let (tf, tg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let l = tf.monomial.lcm(&tg.monomial);
    let a = f.mul_term(&tf.monomial.quotient_of(&l).unwrap(), &field.inv(&tf.coeff));
    let b = g.mul_term(&tg.monomial.quotient_of(&l).unwrap(), &field.inv(&tg.coeff));
    a - b
}

/// Buchberger's criterion checked directly: every S-polynomial of the list
/// reduces to zero modulo the list.
pub fn is_groebner(basis: &[Polynomial]) -> bool {
    let divisors: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    for i in 0..divisors.len() {
        for j in i + 1..divisors.len() {
            let s = s_polynomial(divisors[i], divisors[j]);
            if !reduce(&s, &divisors, true, None).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The groebner engine with default limits.
pub fn groebner(ideal: &Ideal) -> Result<GroebnerBasis> {
    Engine::default().groebner(ideal)
}
