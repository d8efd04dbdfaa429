//! Exact-rational scalars, sparse multivariate polynomials, and monomial orders.
//!
//! Everything downstream (Groebner bases, differential forms, Pfaff systems)
//! is built over [`Polynomial`]: a canonical sparse map from [`Monomial`] to
//! [`Rational`] over a fixed variable set of runtime size.  Arithmetic is
//! exact; there is no floating-point mode.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator (guaranteed by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer rational.
pub fn ratz(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Display name of variable `index` in an `ambient`-variable session.
///
/// Chart convention: a 4-variable ambient is the local chart with variables
/// `z1..z4`; every other ambient indexes from `z0`.
pub fn var_name(ambient: usize, index: usize) -> String {
    if ambient == 4 {
        format!("z{}", index + 1)
    } else {
        format!("z{index}")
    }
}

/// Resolve a printed variable number back to its internal index.
pub fn var_index(ambient: usize, printed: usize) -> Option<usize> {
    let index = if ambient == 4 {
        printed.checked_sub(1)?
    } else {
        printed
    };
    (index < ambient).then_some(index)
}

/// Exponent vector of fixed length equal to the ambient variable count.
///
/// The derived `Ord` is *storage* order only (natural graded reverse
/// lexicographic); algorithms that need a configurable order go through
/// [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// Multiplicative identity in `ambient` variables.
    pub fn one(ambient: usize) -> Self {
        Monomial { exps: vec![0; ambient] }
    }

    /// The single variable `index`.
    pub fn var(ambient: usize, index: usize) -> Self {
        let mut exps = vec![0; ambient];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Self) -> Self {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// Pad with zero exponents up to `ambient` (for adjoined variables).
    pub fn extended(&self, ambient: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.resize(ambient, 0);
        Monomial { exps }
    }
}

// Natural grevlex so BTreeMap iteration ascends and `.last()` is the
// natural leading monomial.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.exps, &other.exps, None)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn grevlex_cmp(a: &[u32], b: &[u32], priority: Option<&[usize]>) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // equal degree: the monomial with the smaller exponent in the least
    // significant differing position is the greater one
    let positions: Vec<usize> = match priority {
        Some(p) => p.iter().rev().copied().collect(),
        None => (0..a.len()).rev().collect(),
    };
    for i in positions {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex_cmp(a: &[u32], b: &[u32], priority: &[usize]) -> Ordering {
    for &i in priority {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// Kind of admissible monomial order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    GradedReverseLex,
    Lex,
}

/// A total multiplicative monomial order: a kind plus a variable priority
/// permutation (most significant variable first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Graded reverse lexicographic with the natural priority `z0 > z1 > …`.
    pub fn grevlex(ambient: usize) -> Self {
        MonomialOrder { kind: OrderKind::GradedReverseLex, priority: (0..ambient).collect() }
    }

    /// Lexicographic with the natural priority.
    pub fn lex(ambient: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..ambient).collect() }
    }

    /// Same kind over a custom variable priority (a permutation of `0..n`).
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        MonomialOrder { kind, priority }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ambient(&self) -> usize {
        self.priority.len()
    }

    /// Variable priority, most significant first.
    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// The same order on an enlarged ambient; adjoined variables become the
    /// least significant ones.
    pub fn extended(&self, ambient: usize) -> Self {
        let mut priority = self.priority.clone();
        priority.extend(self.priority.len()..ambient);
        MonomialOrder { kind: self.kind, priority }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::GradedReverseLex => grevlex_cmp(&a.exps, &b.exps, Some(&self.priority)),
            OrderKind::Lex => lex_cmp(&a.exps, &b.exps, &self.priority),
        }
    }
}

/// Homogeneity verdict of a polynomial.
///
/// The zero polynomial is homogeneous of every degree, so it gets its own
/// verdict rather than a number.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Homogeneity {
    Zero,
    Homogeneous { degree: u32 },
    Inhomogeneous,
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: no stored zero coefficients; equality is term-map
/// equality.  All operations are pure and leave their inputs untouched.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ambient: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ambient: usize) -> Self {
        Polynomial { ambient, terms: BTreeMap::new() }
    }

    pub fn constant(ambient: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ambient), c);
        }
        Polynomial { ambient, terms }
    }

    pub fn one(ambient: usize) -> Self {
        Self::constant(ambient, Rational::one())
    }

    /// The variable `z_index`.
    pub fn var(ambient: usize, index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ambient, index), Rational::one());
        Polynomial { ambient, terms }
    }

    pub fn from_terms<I>(ambient: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut out = Polynomial::zero(ambient);
        for (m, c) in terms {
            debug_assert_eq!(m.ambient(), ambient);
            out.accumulate(m, c);
        }
        out
    }

    pub fn monomial(ambient: usize, m: Monomial, c: Rational) -> Self {
        Self::from_terms(ambient, [(m, c)])
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_canonical(&self) {
        debug_assert!(self.terms.values().all(|c| !c.is_zero()), "stored zero coefficient");
        debug_assert!(self.terms.keys().all(|m| m.ambient() == self.ambient));
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Exact sum; errors when the ambients differ.
    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out.assert_canonical();
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ambient);
        }
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Exact product; errors when the ambients differ.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = Polynomial::zero(self.ambient);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.mul(mb), ca * cb);
            }
        }
        out.assert_canonical();
        Ok(out)
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ambient);
        }
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.ambient);
        for _ in 0..e {
            out = out.checked_mul(self).expect("same ambient");
        }
        out
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        if index >= self.ambient {
            return Err(Error::IndexOutOfRange { index, ambient: self.ambient });
        }
        let mut out = Polynomial::zero(self.ambient);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] = e - 1;
            out.accumulate(Monomial::new(exps), c * Rational::from(BigInt::from(e)));
        }
        out.assert_canonical();
        Ok(out)
    }

    /// Substitute `images[i]` for variable `i`.  All images must share one
    /// target ambient, which becomes the ambient of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: images.len() });
        }
        let target = images.first().map(|p| p.ambient).unwrap_or(self.ambient);
        for p in images {
            if p.ambient != target {
                return Err(Error::AmbientMismatch { expected: target, found: p.ambient });
            }
        }
        // memoized powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().checked_mul(&images[i])?;
                    cache.push(next);
                }
                acc = acc.checked_mul(&cache[e as usize])?;
            }
            out = out.checked_add(&acc)?;
        }
        Ok(out)
    }

    /// Total degree of the highest term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Homogeneity verdict: one degree shared by every term, or not.
    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Homogeneous { degree: d }
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Leading (monomial, coefficient) with respect to `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|(a, _), (b, _)| ord.cmp(a, b))
    }

    /// Divide by the leading coefficient so the leading term becomes 1.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Scale to integer coefficients with content 1, preserving sign.
    /// Keeps S-polynomial arithmetic small during basis computation.
    pub fn integer_normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
        let factor = Rational::new(denom_lcm, numer_gcd.abs());
        self.scale(&factor)
    }

    /// Reinterpret in a larger ambient, padding exponents with zeros.
    pub fn extended(&self, ambient: usize) -> Polynomial {
        debug_assert!(ambient >= self.ambient);
        Polynomial {
            ambient,
            terms: self.terms.iter().map(|(m, c)| (m.extended(ambient), c.clone())).collect(),
        }
    }

    /// Evaluate at the origin: the constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ambient))
    }

    /// Parse from the `z`-variable text grammar; see the crate docs.
    pub fn parse(ambient: usize, text: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(ambient, text)
    }
}

impl fmt::Display for Polynomial {
    /// Deterministic printing: terms descend in natural grevlex, so equal
    /// polynomials print identically byte for byte.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = abs.is_one();
            if !coeff_is_one || m.is_one() {
                write!(f, "{abs}")?;
            }
            let mut first_var = coeff_is_one && !m.is_one();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                } else {
                    first_var = false;
                }
                write!(f, "{}", var_name(self.ambient, v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
