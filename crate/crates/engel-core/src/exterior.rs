//! Differential forms with polynomial coefficients.
//!
//! A [`DiffForm`] of degree `q` stores its coefficients on strictly
//! increasing index tuples; every tuple produced mid-computation is pushed
//! through one canonicalization point that sorts indices and folds the
//! permutation parity into the coefficient, so equality is map equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::groebner::Ideal;
use crate::ring::{var_name, Homogeneity, Polynomial, Rational};
use crate::{Error, Result};

/// Sort `idx` ascending, returning the permutation sign; `None` when an
/// index repeats (the alternating product vanishes).
fn canonical_tuple(mut idx: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut negative = false;
    // insertion sort, counting inversions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((idx, negative))
}

/// Alternating form of fixed degree with [`Polynomial`] coefficients.
#[derive(Clone, Debug)]
pub struct DiffForm {
    ambient: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Polynomial>,
}

/// Equality ignores the degree tag on zero forms: an empty form is the
/// zero of every degree, matching the additive conventions.  Nonzero
/// forms with equal terms agree in degree automatically.
impl PartialEq for DiffForm {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.terms == other.terms
    }
}

impl Eq for DiffForm {}

impl DiffForm {
    pub fn zero(ambient: usize, degree: usize) -> Self {
        DiffForm { ambient, degree, terms: BTreeMap::new() }
    }

    /// A polynomial viewed as a 0-form.
    pub fn function(p: Polynomial) -> Self {
        let ambient = p.ambient();
        let mut form = DiffForm::zero(ambient, 0);
        form.accumulate(Vec::new(), p);
        form
    }

    /// The coordinate differential `dz_index`.
    pub fn dz(ambient: usize, index: usize) -> Result<Self> {
        if index >= ambient {
            return Err(Error::IndexOutOfRange { index, ambient });
        }
        let mut form = DiffForm::zero(ambient, 1);
        form.accumulate(vec![index], Polynomial::one(ambient));
        Ok(form)
    }

    /// Build from terms whose index tuples may be unsorted; parity is folded
    /// into the coefficients here.
    pub fn from_terms<I>(ambient: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Polynomial)>,
    {
        let mut form = DiffForm::zero(ambient, degree);
        for (idx, p) in terms {
            if idx.len() != degree {
                return Err(Error::FormDegreeMismatch { expected: degree, found: idx.len() });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= ambient) {
                return Err(Error::IndexOutOfRange { index: bad, ambient });
            }
            if p.ambient() != ambient {
                return Err(Error::AmbientMismatch { expected: ambient, found: p.ambient() });
            }
            let Some((key, negative)) = canonical_tuple(idx) else { continue };
            form.accumulate(key, if negative { p.neg() } else { p });
        }
        Ok(form)
    }

    fn accumulate(&mut self, key: Vec<usize>, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(&p).expect("same ambient");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, idx: &[usize]) -> Polynomial {
        self.terms.get(idx).cloned().unwrap_or_else(|| Polynomial::zero(self.ambient))
    }

    /// First stored term, a concrete nonzero witness for "not identically
    /// zero" verdicts.  Deterministic: smallest index tuple.
    pub fn witness(&self) -> Option<(&Vec<usize>, &Polynomial)> {
        self.terms.iter().next()
    }

    fn check_ambient(&self, other: &DiffForm) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Sum.  Zero forms are degree-agnostic; otherwise degrees must agree.
    pub fn checked_add(&self, other: &DiffForm) -> Result<DiffForm> {
        self.check_ambient(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::FormDegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut out = self.clone();
        for (k, p) in &other.terms {
            out.accumulate(k.clone(), p.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &DiffForm) -> Result<DiffForm> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> DiffForm {
        DiffForm {
            ambient: self.ambient,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, p)| (k.clone(), p.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> DiffForm {
        let mut out = DiffForm::zero(self.ambient, self.degree);
        for (k, p) in &self.terms {
            out.accumulate(k.clone(), p.scale(c));
        }
        out
    }

    /// Multiply every coefficient by `p`.
    pub fn scale_poly(&self, p: &Polynomial) -> Result<DiffForm> {
        if p.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: p.ambient() });
        }
        let mut out = DiffForm::zero(self.ambient, self.degree);
        for (k, q) in &self.terms {
            out.accumulate(k.clone(), q.checked_mul(p)?);
        }
        Ok(out)
    }

    /// Alternating product; degrees add, parity handled by the
    /// canonicalization point.
    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm> {
        self.check_ambient(other)?;
        let mut out = DiffForm::zero(self.ambient, self.degree + other.degree);
        for (ka, pa) in &self.terms {
            for (kb, pb) in &other.terms {
                let mut idx = ka.clone();
                idx.extend_from_slice(kb);
                let Some((key, negative)) = canonical_tuple(idx) else { continue };
                let prod = pa.checked_mul(pb)?;
                out.accumulate(key, if negative { prod.neg() } else { prod });
            }
        }
        Ok(out)
    }

    /// Left-associated wedge of several forms.
    pub fn wedge_all<'a, I>(forms: I) -> Result<DiffForm>
    where
        I: IntoIterator<Item = &'a DiffForm>,
    {
        let mut it = forms.into_iter();
        let first = it.next().expect("wedge_all needs at least one form");
        let mut acc = first.clone();
        for f in it {
            acc = acc.wedge(f)?;
        }
        Ok(acc)
    }

    /// Exterior derivative: `d(p dz_J) = sum_i (dp/dz_i) dz_i ^ dz_J`.
    pub fn exterior_derivative(&self) -> DiffForm {
        let mut out = DiffForm::zero(self.ambient, self.degree + 1);
        for (k, p) in &self.terms {
            for i in 0..self.ambient {
                let dp = p.partial_derivative(i).expect("index in range");
                if dp.is_zero() {
                    continue;
                }
                let mut idx = Vec::with_capacity(k.len() + 1);
                idx.push(i);
                idx.extend_from_slice(k);
                let Some((key, negative)) = canonical_tuple(idx) else { continue };
                out.accumulate(key, if negative { dp.neg() } else { dp });
            }
        }
        out
    }

    /// Interior product with `field`: the degree `-1` antiderivation.
    pub fn interior_product(&self, field: &VecField) -> Result<DiffForm> {
        if field.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: field.ambient() });
        }
        if self.degree == 0 {
            return Ok(DiffForm::zero(self.ambient, 0));
        }
        let mut out = DiffForm::zero(self.ambient, self.degree - 1);
        for (k, p) in &self.terms {
            for (pos, &i) in k.iter().enumerate() {
                let c = p.checked_mul(field.component(i))?;
                let contribution = if pos % 2 == 1 { c.neg() } else { c };
                let mut rest = k.clone();
                rest.remove(pos);
                out.accumulate(rest, contribution);
            }
        }
        Ok(out)
    }

    /// Pullback along `map`: substitute in the coefficients and replace
    /// each `dz_i` by the differential of the i-th component.
    pub fn pullback(&self, map: &PolyMap) -> Result<DiffForm> {
        if map.target() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: map.target() });
        }
        let source = map.source();
        let differentials: Vec<DiffForm> =
            (0..self.ambient).map(|i| DiffForm::function(map.component(i).clone()).exterior_derivative()).collect();
        let mut out = DiffForm::zero(source, self.degree);
        for (k, p) in &self.terms {
            let mut acc = DiffForm::function(p.substitute(map.components())?);
            for &i in k {
                acc = acc.wedge(&differentials[i])?;
            }
            out = out.checked_add(&acc)?;
        }
        Ok(out)
    }

    /// `r`-fold wedge power; the zeroth power is the constant function 1.
    pub fn form_power(&self, r: u32) -> DiffForm {
        let mut out = DiffForm::function(Polynomial::one(self.ambient));
        for _ in 0..r {
            out = out.wedge(self).expect("same ambient");
        }
        out
    }

    /// Ideal generated by all coefficient polynomials; its variety is the
    /// vanishing locus of the form.
    pub fn coefficient_ideal(&self) -> Ideal {
        Ideal::new(self.ambient, self.terms.values().cloned().collect())
    }

    /// One homogeneity verdict across all coefficients.
    pub fn coefficient_homogeneity(&self) -> Homogeneity {
        let mut verdict = Homogeneity::Zero;
        for p in self.terms.values() {
            match (verdict, p.homogeneous_degree()) {
                (_, Homogeneity::Inhomogeneous) => return Homogeneity::Inhomogeneous,
                (_, Homogeneity::Zero) => unreachable!("no stored zero coefficients"),
                (Homogeneity::Zero, h) => verdict = h,
                (Homogeneity::Homogeneous { degree: a }, Homogeneity::Homogeneous { degree: b }) => {
                    if a != b {
                        return Homogeneity::Inhomogeneous;
                    }
                }
                (Homogeneity::Inhomogeneous, _) => unreachable!(),
            }
        }
        verdict
    }

    /// Parse from the form text grammar; see the crate docs.
    pub fn parse(ambient: usize, text: &str) -> Result<DiffForm> {
        crate::parse::parse_form(ambient, text)
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, p)) in self.terms.iter().enumerate() {
            // coefficient rendering: single-term inline, multi-term in parens
            let (joiner_neg, body) = if k.is_empty() {
                let s = p.to_string();
                match s.strip_prefix('-') {
                    Some(rest) if p.term_count() == 1 => (true, rest.to_string()),
                    _ => (false, s),
                }
            } else if p.term_count() == 1 {
                let s = p.to_string();
                let (neg, s) = match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                };
                let dz = dz_chain(self.ambient, k);
                if s == "1" {
                    (neg, dz)
                } else {
                    (neg, format!("{s}*{dz}"))
                }
            } else {
                (false, format!("({p})*{}", dz_chain(self.ambient, k)))
            };
            if i == 0 {
                if joiner_neg {
                    write!(f, "-")?;
                }
            } else if joiner_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

fn dz_chain(ambient: usize, idx: &[usize]) -> String {
    idx.iter().map(|&i| format!("d{}", var_name(ambient, i))).collect::<Vec<_>>().join("^")
}

/// Polynomial vector field, one component per variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VecField {
    components: Vec<Polynomial>,
}

impl VecField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let ambient = components.len();
        for c in &components {
            if c.ambient() != ambient {
                return Err(Error::AmbientMismatch { expected: ambient, found: c.ambient() });
            }
        }
        Ok(VecField { components })
    }

    /// The radial field `sum_i z_i d/dz_i`.
    pub fn radial(ambient: usize) -> Self {
        VecField { components: (0..ambient).map(|i| Polynomial::var(ambient, i)).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }
}

/// Polynomial map between affine spaces; one component per target variable,
/// written in source variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMap {
    source: usize,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(source: usize, components: Vec<Polynomial>) -> Result<Self> {
        for c in &components {
            if c.ambient() != source {
                return Err(Error::AmbientMismatch { expected: source, found: c.ambient() });
            }
        }
        Ok(PolyMap { source, components })
    }

    pub fn identity(ambient: usize) -> Self {
        PolyMap { source: ambient, components: (0..ambient).map(|i| Polynomial::var(ambient, i)).collect() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(ambient: usize, s: &str) -> DiffForm {
        DiffForm::parse(ambient, s).unwrap()
    }

    fn poly(ambient: usize, s: &str) -> Polynomial {
        Polynomial::parse(ambient, s).unwrap()
    }

    #[test]
    fn wedge_alternates() {
        let dz1 = DiffForm::dz(4, 0).unwrap();
        let dz2 = DiffForm::dz(4, 1).unwrap();
        assert!(dz1.wedge(&dz1).unwrap().is_zero());
        assert_eq!(dz1.wedge(&dz2).unwrap(), dz2.wedge(&dz1).unwrap().neg());
    }

    #[test]
    fn derivative_of_single_term() {
        // d(z2 dz1) = -dz1^dz2 in the chart
        let w = form(4, "z2*dz1");
        let d = w.exterior_derivative();
        assert_eq!(d, form(4, "-dz1^dz2"));
    }

    #[test]
    fn derivative_of_contact_generator() {
        let w = form(4, "dz3 - z2*dz1");
        assert_eq!(w.exterior_derivative(), form(4, "dz1^dz2"));
    }

    #[test]
    fn d_squared_is_zero() {
        let w = form(5, "(z0^2*z3 - z1*z4)*dz2 + 3*z3^2*z4*dz0");
        assert!(w.exterior_derivative().exterior_derivative().is_zero());
    }

    #[test]
    fn interior_product_examples() {
        let r5 = VecField::radial(5);
        assert_eq!(form(5, "dz0").interior_product(&r5).unwrap(), DiffForm::function(poly(5, "z0")));
        let two = form(5, "dz0^dz1");
        assert_eq!(two.interior_product(&r5).unwrap(), form(5, "z0*dz1 - z1*dz0"));
    }

    #[test]
    fn interior_product_of_function_is_zero() {
        let f = DiffForm::function(poly(5, "z0*z1"));
        assert!(f.interior_product(&VecField::radial(5)).unwrap().is_zero());
    }

    #[test]
    fn pullback_examples() {
        let id = PolyMap::identity(4);
        let w = form(4, "z1*dz3^dz4 - dz1^dz2");
        assert_eq!(w.pullback(&id).unwrap(), w);

        // f4 = z3*z4: chain rule gives z4 dz3 + z3 dz4
        let mut comps: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(4, i)).collect();
        comps[3] = poly(4, "z3*z4");
        let f = PolyMap::new(4, comps).unwrap();
        assert_eq!(form(4, "dz4").pullback(&f).unwrap(), form(4, "z4*dz3 + z3*dz4"));
    }

    #[test]
    fn pullback_of_canonical_generator_is_normal_form() {
        // for any map f, (dz4 - z3 dz1) pulls back to df4 - f3 df1
        let f1 = poly(4, "z1^2");
        let f2 = poly(4, "z2 - z4");
        let f3 = poly(4, "z2 + z3");
        let f4 = poly(4, "z4 + z1*z2");
        let f = PolyMap::new(4, vec![f1.clone(), f2, f3.clone(), f4.clone()]).unwrap();
        let pulled = form(4, "dz4 - z3*dz1").pullback(&f).unwrap();
        let df = |p: &Polynomial| DiffForm::function(p.clone()).exterior_derivative();
        let expected = df(&f4).checked_sub(&df(&f1).scale_poly(&f3).unwrap()).unwrap();
        assert_eq!(pulled, expected);
    }

    #[test]
    fn form_power_examples() {
        let w = form(3, "dz1^dz2");
        assert!(w.form_power(2).is_zero());

        let s = form(4, "dz1^dz2 + dz3^dz4");
        assert_eq!(s.form_power(2), form(4, "2*dz1^dz2^dz3^dz4"));

        assert_eq!(s.form_power(0), DiffForm::function(Polynomial::one(4)));
    }

    #[test]
    fn coefficient_ideal_examples() {
        let w = form(5, "z0*dz1");
        let ideal = w.coefficient_ideal();
        assert_eq!(ideal.generators(), &[poly(5, "z0")]);
        assert!(DiffForm::zero(5, 2).coefficient_ideal().generators().is_empty());
    }

    #[test]
    fn top_degree_contraction_grounds_vanishing() {
        // a 5-form on 5 variables with i_R w = 0 must be zero: check the
        // contrapositive shape on the volume form
        let vol = form(5, "dz0^dz1^dz2^dz3^dz4");
        assert!(!vol.interior_product(&VecField::radial(5)).unwrap().is_zero());
    }

    #[test]
    fn degree_exceeding_ambient_collapses() {
        let a = form(3, "dz1^dz2");
        let b = form(3, "dz0^dz1");
        let w = a.wedge(&b).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.degree(), 4);
    }

    #[test]
    fn graded_commutativity_fixed_instances() {
        // odd*odd anticommutes, odd*even commutes
        let a = form(5, "z3*dz0 + dz2");
        let b = form(5, "z0*dz1 - z2*dz4");
        assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().neg());
        let c = form(5, "z0*dz1^dz4");
        assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap());
    }

    #[test]
    fn display_round_trips() {
        let b = form(5, "z0^2*dz3 - z0*z2*dz1 + (z1*z2 - z0*z3)*dz0");
        let printed = b.to_string();
        assert_eq!(DiffForm::parse(5, &printed).unwrap(), b);
        assert_eq!(printed, "(z1*z2 - z0*z3)*dz0 - z0*z2*dz1 + z0^2*dz3");
    }

    #[test]
    fn coefficient_homogeneity_verdicts() {
        assert_eq!(form(5, "z0^2*dz3 - z0*z2*dz1").coefficient_homogeneity(), Homogeneity::Homogeneous { degree: 2 });
        assert_eq!(form(5, "z0*dz3 + dz1").coefficient_homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(DiffForm::zero(5, 1).coefficient_homogeneity(), Homogeneity::Zero);
    }
}
