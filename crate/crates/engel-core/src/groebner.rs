//! Gröbner bases over the rationals and the ideal-geometry predicates
//! built on them.
//!
//! An [`Ideal`] keeps its presentation (the generators as given) and lazily
//! computes one *reduced* Gröbner basis per monomial order, caching it
//! behind a mutex so repeated queries share the work.  The reduced basis is
//! unique for a given ideal and order, which makes every downstream verdict
//! — membership, radical membership, variety equality, dimension —
//! reproducible byte for byte.
//!
//! Radical membership uses the classical trick of adjoining one variable
//! `t` and testing whether `1 - t·p` together with the generators produces
//! the unit ideal.  Dimension is read off the leading monomials of a graded
//! basis: the codimension is the minimum number of variables needed to meet
//! the support of every leading monomial, found by a small branch-and-bound
//! search.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::ring::{Monomial, MonomialOrder, OrderKind, Polynomial, Rational};
use crate::{Error, Result};

/// Dimension of the vanishing locus over the complex numbers.
///
/// The empty variety is a categorical verdict, not a number: the unit ideal
/// reports `Empty` rather than a sentinel dimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum DimensionVerdict {
    Empty,
    Proper { dimension: usize, codimension: usize },
}

type CacheKey = (u8, Vec<usize>);

fn cache_key(ord: &MonomialOrder) -> CacheKey {
    let kind = match ord.kind() {
        OrderKind::GradedReverseLex => 0,
        OrderKind::Lex => 1,
    };
    (kind, ord.priority().to_vec())
}

/// Finitely generated polynomial ideal with cached reduced Gröbner bases.
#[derive(Debug)]
pub struct Ideal {
    ambient: usize,
    generators: Vec<Polynomial>,
    cache: Mutex<BTreeMap<CacheKey, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("cache lock").clone();
        Ideal { ambient: self.ambient, generators: self.generators.clone(), cache: Mutex::new(cache) }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.generators == other.generators
    }
}

impl Eq for Ideal {}

impl Ideal {
    /// Build from generators; zero generators are dropped.
    ///
    /// # Panics
    /// If a generator lives in a different ambient ring.
    pub fn new(ambient: usize, generators: Vec<Polynomial>) -> Ideal {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &generators {
            assert_eq!(g.ambient(), ambient, "generator ambient mismatch");
        }
        Ideal { ambient, generators, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Gröbner basis under `ord`: minimal, inter-reduced,
    /// monic, sorted by ascending leading monomial.  Cached per order.
    pub fn reduced_basis(&self, ord: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if ord.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: ord.ambient() });
        }
        let key = cache_key(ord);
        let mut cache = self.cache.lock().expect("cache lock");
        if let Some(basis) = cache.get(&key) {
            return Ok(Arc::clone(basis));
        }
        let basis = Arc::new(reduced_groebner(&self.generators, ord));
        cache.insert(key, Arc::clone(&basis));
        Ok(basis)
    }

    /// Fully reduced remainder of `p` modulo the reduced basis under `ord`.
    /// Zero exactly when `p` lies in the ideal; independent of the
    /// generator presentation.
    pub fn normal_form(&self, p: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
        if p.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: p.ambient() });
        }
        let basis = self.reduced_basis(ord)?;
        let prepared = prepare(&basis, ord);
        Ok(reduce_full(p, &prepared, ord))
    }

    /// Exact ideal membership.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p, &MonomialOrder::grevlex(self.ambient))?.is_zero())
    }

    /// Membership in the radical: does some power of `p` lie in the ideal?
    /// Plain membership is tried first; otherwise a fresh variable `t` is
    /// adjoined and `1 - t·p` saturates the ideal exactly when `p` is in
    /// the radical.
    pub fn radical_contains(&self, p: &Polynomial) -> Result<bool> {
        if self.contains(p)? {
            return Ok(true);
        }
        if p.is_zero() {
            return Ok(true);
        }
        let ext = self.ambient + 1;
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.extended(ext)).collect();
        let t = Polynomial::var(ext, self.ambient);
        gens.push(Polynomial::one(ext).checked_sub(&t.checked_mul(&p.extended(ext))?)?);
        let saturated = Ideal::new(ext, gens);
        let basis = saturated.reduced_basis(&MonomialOrder::grevlex(ext))?;
        Ok(is_unit_basis(&basis))
    }

    /// Do the two ideals cut out the same variety over the complex numbers?
    /// Both inclusions of radicals are checked generator by generator.
    pub fn same_variety(&self, other: &Ideal) -> Result<bool> {
        if other.ambient != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: other.ambient });
        }
        for g in &other.generators {
            if !self.radical_contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of the vanishing locus, from the leading monomials of the
    /// graded reverse lexicographic basis.
    pub fn dimension(&self) -> DimensionVerdict {
        let ord = MonomialOrder::grevlex(self.ambient);
        let basis = self.reduced_basis(&ord).expect("order matches ambient");
        if basis.is_empty() {
            return DimensionVerdict::Proper { dimension: self.ambient, codimension: 0 };
        }
        if is_unit_basis(&basis) {
            return DimensionVerdict::Empty;
        }
        // Support of each leading monomial as a variable bitmask.  A set S
        // of variables is independent when no leading monomial is supported
        // inside S; dim = max |S|, so codim = minimum number of variables
        // meeting every support.
        assert!(self.ambient <= 128, "dimension computation supports at most 128 variables");
        let masks: Vec<u128> = basis
            .iter()
            .map(|g| {
                let (lm, _) = g.leading_term(&ord).expect("basis elements are nonzero");
                lm.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u128, |m, (i, _)| m | (1u128 << i))
            })
            .collect();
        let mut best = self.ambient + 1;
        min_hitting_set(&masks, 0, 0, &mut best);
        let codimension = best;
        DimensionVerdict::Proper { dimension: self.ambient - codimension, codimension }
    }
}

fn is_unit_basis(basis: &[Polynomial]) -> bool {
    basis.len() == 1 && basis[0].is_constant()
}

/// Branch and bound for the smallest variable set meeting every mask.
fn min_hitting_set(masks: &[u128], chosen: u128, count: usize, best: &mut usize) {
    if count >= *best {
        return;
    }
    match masks.iter().find(|&&m| m & chosen == 0) {
        None => *best = count,
        Some(&uncovered) => {
            let mut m = uncovered;
            while m != 0 {
                let bit = m & m.wrapping_neg();
                min_hitting_set(masks, chosen | bit, count + 1, best);
                m ^= bit;
            }
        }
    }
}

/// Basis element with its leading data precomputed for division loops.
struct Prepared {
    poly: Polynomial,
    lm: Monomial,
    lc: Rational,
}

fn prepare(basis: &[Polynomial], ord: &MonomialOrder) -> Vec<Prepared> {
    basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (lm, lc) = g.leading_term(ord).expect("nonzero");
            Prepared { poly: g.clone(), lm: lm.clone(), lc: lc.clone() }
        })
        .collect()
}

/// Fully reduced remainder: no term of the output is divisible by any
/// basis leading monomial.
fn reduce_full(p: &Polynomial, basis: &[Prepared], ord: &MonomialOrder) -> Polynomial {
    let ambient = p.ambient();
    let mut remainder = Polynomial::zero(ambient);
    let mut work = p.clone();
    'outer: while let Some((lm, lc)) = work.leading_term(ord) {
        let (lm, lc) = (lm.clone(), lc.clone());
        for b in basis {
            if b.lm.divides(&lm) {
                let q = b.lm.quotient_into(&lm);
                let c = &lc / &b.lc;
                work = work.checked_sub(&b.poly.mul_term(&q, &c)).expect("same ambient");
                continue 'outer;
            }
        }
        let head = Polynomial::monomial(ambient, lm.clone(), lc.clone());
        remainder = remainder.checked_add(&head).expect("same ambient");
        work = work.checked_sub(&head).expect("same ambient");
    }
    remainder
}

fn s_polynomial(f: &Prepared, g: &Prepared) -> Polynomial {
    let lcm = f.lm.lcm(&g.lm);
    let qf = f.lm.quotient_into(&lcm);
    let qg = g.lm.quotient_into(&lcm);
    let sf = f.poly.mul_term(&qf, &f.lc.recip());
    let sg = g.poly.mul_term(&qg, &g.lc.recip());
    sf.checked_sub(&sg).expect("same ambient")
}

fn normalize_pair(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Buchberger's algorithm with the coprimality criterion and the chain
/// criterion (counting only pairs whose S-polynomial was actually
/// reduced), followed by minimization, inter-reduction, and monic
/// normalization.  The result is the unique reduced basis, sorted by
/// ascending leading monomial.
fn reduced_groebner(generators: &[Polynomial], ord: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Prepared> = prepare(
        &generators.iter().filter(|g| !g.is_zero()).map(|g| g.integer_normalized()).collect::<Vec<_>>(),
        ord,
    );
    if basis.is_empty() {
        return Vec::new();
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert((i, j));
        }
    }
    let mut reduced_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();

    while !pending.is_empty() {
        // normal selection: smallest lcm of leading monomials under ord
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                let l1 = basis[a].lm.lcm(&basis[b].lm);
                let l2 = basis[c].lm.lcm(&basis[d].lm);
                ord.cmp(&l1, &l2)
            })
            .expect("nonempty");
        pending.remove(&(i, j));

        let lcm = basis[i].lm.lcm(&basis[j].lm);
        // coprime leading monomials: the S-polynomial reduces to zero
        if basis[i].lm.mul(&basis[j].lm) == lcm {
            continue;
        }
        // chain criterion over pairs already genuinely reduced
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm.divides(&lcm)
                && reduced_pairs.contains(&normalize_pair(i, k))
                && reduced_pairs.contains(&normalize_pair(j, k))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        let remainder = reduce_full(&s, &basis, ord);
        reduced_pairs.insert((i, j));
        if remainder.is_zero() {
            continue;
        }
        let remainder = remainder.integer_normalized();
        let (lm, lc) = remainder.leading_term(ord).expect("nonzero");
        let new = Prepared { lm: lm.clone(), lc: lc.clone(), poly: remainder.clone() };
        let t = basis.len();
        basis.push(new);
        for k in 0..t {
            pending.insert((k, t));
        }
    }

    // minimize: drop elements whose leading monomial another one divides
    let mut order_idx: Vec<usize> = (0..basis.len()).collect();
    order_idx.sort_by(|&a, &b| ord.cmp(&basis[a].lm, &basis[b].lm));
    let mut kept: Vec<Prepared> = Vec::new();
    for idx in order_idx {
        if kept.iter().any(|k| k.lm.divides(&basis[idx].lm)) {
            continue;
        }
        kept.push(Prepared {
            poly: basis[idx].poly.clone(),
            lm: basis[idx].lm.clone(),
            lc: basis[idx].lc.clone(),
        });
    }

    // inter-reduce tails to a fixed point
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<Prepared> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, b)| Prepared { poly: b.poly.clone(), lm: b.lm.clone(), lc: b.lc.clone() })
                .collect();
            let reduced = reduce_full(&kept[i].poly, &others, ord);
            if reduced != kept[i].poly {
                debug_assert!(!reduced.is_zero(), "minimized basis element reduced away");
                let (lm, lc) = reduced.leading_term(ord).expect("nonzero");
                kept[i] = Prepared { lm: lm.clone(), lc: lc.clone(), poly: reduced.clone() };
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut result: Vec<Polynomial> = kept.iter().map(|b| b.poly.monic(ord)).collect();
    result.sort_by(|a, b| {
        let (la, _) = a.leading_term(ord).expect("nonzero");
        let (lb, _) = b.leading_term(ord).expect("nonzero");
        ord.cmp(la, lb)
    });
    result
}
