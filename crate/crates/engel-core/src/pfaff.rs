//! Rank-`k` Pfaffian systems and the predicates defined on them:
//! singular ideal, integrability, derived-flag membership, the Engel
//! conditions, the class of a one-form, integral varieties, and system
//! equality.
//!
//! The Engel check never trusts the order in which generators are listed.
//! The derived generator β is re-derived by testing each generator against
//! the full wedge; when neither generator qualifies on its own, a
//! constant-coefficient pencil `λω₁ + μω₂` is searched before giving up.
//! All verdicts are identities of polynomial forms — "≠ 0" always means
//! "not the identically-zero form".

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::exterior::DiffForm;
use crate::groebner::{DimensionVerdict, Ideal};
use crate::ring::{var_name, Polynomial, Rational};
use crate::{Error, Result};

/// Which form serves as the derived generator β.
///
/// `First`/`Second` point at an input generator.  `Pencil` records a
/// constant recombination `λω₁ + μω₂` that qualifies when neither
/// generator does alone.  `Both` and `Neither` are failure modes: every
/// recombination qualifies (so condition (i) is unsatisfiable), or none
/// does.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BetaRole {
    First,
    Second,
    Pencil { lambda: Rational, mu: Rational },
    Both,
    Neither,
}

impl Serialize for BetaRole {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BetaRole::First => s.serialize_str("first"),
            BetaRole::Second => s.serialize_str("second"),
            BetaRole::Both => s.serialize_str("both"),
            BetaRole::Neither => s.serialize_str("neither"),
            BetaRole::Pencil { lambda, mu } => {
                #[derive(Serialize)]
                struct Repr {
                    lambda: String,
                    mu: String,
                }
                let mut outer = s.serialize_map(Some(1))?;
                outer.serialize_entry("pencil", &Repr { lambda: lambda.to_string(), mu: mu.to_string() })?;
                outer.end()
            }
        }
    }
}

/// Length of the derived flag; only reported when certified.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DerivedLength {
    Known(u32),
    NotDetermined,
}

impl Serialize for DerivedLength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DerivedLength::Known(n) => s.serialize_u32(*n),
            DerivedLength::NotDetermined => s.serialize_str("not determined"),
        }
    }
}

/// A concrete nonzero term certifying a "not identically zero" verdict.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TermWitness {
    pub term: String,
    pub coefficient: String,
}

fn witness_of(form: &DiffForm) -> Option<TermWitness> {
    form.witness().map(|(idx, coeff)| TermWitness {
        term: idx.iter().map(|&i| format!("d{}", var_name(form.ambient(), i))).collect::<Vec<_>>().join("^"),
        coefficient: coeff.to_string(),
    })
}

/// Witnesses for the two "≠ 0" Engel conditions; absent when the
/// corresponding form vanishes identically.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct EngelWitnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition_i: Option<TermWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition_iii: Option<TermWitness>,
}

/// Complete verdict of [`PfaffSystem::engel_check`].
///
/// `is_engel` is the conjunction of the three conditions under the
/// reported role assignment.  The forms α and β actually used are carried
/// along for downstream computation but stay out of the serialized report.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EngelReport {
    pub is_engel: bool,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub condition_iii: bool,
    pub role: BetaRole,
    pub extra_iii_prime: bool,
    pub class_of_beta: u32,
    pub derived_length: DerivedLength,
    pub sing_system: DimensionVerdict,
    pub sing_dbeta: DimensionVerdict,
    pub witnesses: EngelWitnesses,
    #[serde(skip)]
    pub alpha: DiffForm,
    #[serde(skip)]
    pub beta: DiffForm,
}

/// Codimension of the singular locus against the expected bound `k + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CodimReport {
    pub sing: DimensionVerdict,
    pub expected_codimension: usize,
    pub atypical: bool,
}

/// Pfaffian system spanned by degree-1 forms with polynomial coefficients.
///
/// Construction enforces generic linear independence: the wedge of all
/// generators must not vanish identically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PfaffSystem {
    ambient: usize,
    generators: Vec<DiffForm>,
}

impl PfaffSystem {
    pub fn new(generators: Vec<DiffForm>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::InvalidInput("a Pfaff system needs at least one generator".into()));
        };
        let ambient = first.ambient();
        for g in &generators {
            if g.ambient() != ambient {
                return Err(Error::AmbientMismatch { expected: ambient, found: g.ambient() });
            }
            if g.degree() != 1 {
                return Err(Error::FormDegreeMismatch { expected: 1, found: g.degree() });
            }
            if g.is_zero() {
                return Err(Error::InvalidInput("zero generator in a Pfaff system".into()));
            }
        }
        let system = PfaffSystem { ambient, generators };
        if system.full_wedge().is_zero() {
            return Err(Error::InvalidInput(
                "generators are generically linearly dependent: their wedge vanishes identically".into(),
            ));
        }
        Ok(system)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of generators `k`.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[DiffForm] {
        &self.generators
    }

    /// The wedge `ω₁∧…∧ω_k` of all generators.
    pub fn full_wedge(&self) -> DiffForm {
        DiffForm::wedge_all(self.generators.iter()).expect("generators share one ambient")
    }

    /// Ideal of the `k × k` minors: the coefficients of the full wedge.
    /// Its variety is the singular locus of the system.
    pub fn singular_ideal(&self) -> Ideal {
        self.full_wedge().coefficient_ideal()
    }

    /// Frobenius condition: `dωᵢ ∧ ω₁∧…∧ω_k ≡ 0` for every generator.
    pub fn is_integrable(&self) -> bool {
        let wedge = self.full_wedge();
        self.generators
            .iter()
            .all(|g| g.exterior_derivative().wedge(&wedge).expect("same ambient").is_zero())
    }

    /// First-level derived-flag membership of `γ`:
    /// `dγ ∧ ω₁∧…∧ω_k ≡ 0`.
    pub fn in_derived(&self, gamma: &DiffForm) -> Result<bool> {
        if gamma.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: gamma.ambient() });
        }
        if gamma.degree() != 1 && !gamma.is_zero() {
            return Err(Error::FormDegreeMismatch { expected: 1, found: gamma.degree() });
        }
        Ok(gamma.exterior_derivative().wedge(&self.full_wedge())?.is_zero())
    }

    /// Evaluate the Engel conditions on a rank-2 system.
    ///
    /// The role of β is re-derived: exactly one generator with
    /// `dω ∧ ω₁∧ω₂ ≡ 0` becomes β; when neither qualifies a constant
    /// pencil `λω₁ + μω₂` is searched; the failure modes `Both` and
    /// `Neither` fall back to a fixed generator so the conditions are
    /// still evaluated and reported honestly (they cannot all hold).
    pub fn engel_check(&self) -> Result<EngelReport> {
        if self.rank() != 2 {
            return Err(Error::WrongGeneratorCount { expected: 2, found: self.rank() });
        }
        let w1 = &self.generators[0];
        let w2 = &self.generators[1];
        let wedge = self.full_wedge();
        let theta1 = w1.exterior_derivative().wedge(&wedge)?;
        let theta2 = w2.exterior_derivative().wedge(&wedge)?;

        let (role, beta, alpha) = match (theta1.is_zero(), theta2.is_zero()) {
            (true, false) => (BetaRole::First, w1.clone(), w2.clone()),
            (false, true) => (BetaRole::Second, w2.clone(), w1.clone()),
            (true, true) => (BetaRole::Both, w1.clone(), w2.clone()),
            (false, false) => match constant_ratio(&theta2, &theta1) {
                // θ₂ = c·θ₁ means λθ₁ + μθ₂ = 0 at (λ, μ) = (−c, 1)
                Some(c) => {
                    let lambda = -c;
                    let beta = w1.scale(&lambda).checked_add(w2)?;
                    (
                        BetaRole::Pencil { lambda, mu: Rational::from_integer(1.into()) },
                        beta,
                        w1.clone(),
                    )
                }
                None => (BetaRole::Neither, w2.clone(), w1.clone()),
            },
        };

        let dalpha = alpha.exterior_derivative();
        let dbeta = beta.exterior_derivative();
        let alpha_beta = alpha.wedge(&beta)?;
        let form_i = alpha_beta.wedge(&dalpha)?;
        let form_ii = alpha_beta.wedge(&dbeta)?;
        let form_iii = beta.wedge(&dbeta)?;
        let form_extra = form_iii.wedge(&dbeta)?;

        let condition_i = !form_i.is_zero();
        let condition_ii = form_ii.is_zero();
        let condition_iii = !form_iii.is_zero();
        let is_engel = condition_i && condition_ii && condition_iii;

        Ok(EngelReport {
            is_engel,
            condition_i,
            condition_ii,
            condition_iii,
            role,
            extra_iii_prime: form_extra.is_zero(),
            class_of_beta: class_of(&beta)?,
            derived_length: if is_engel { DerivedLength::Known(2) } else { DerivedLength::NotDetermined },
            sing_system: self.singular_ideal().dimension(),
            sing_dbeta: dbeta.coefficient_ideal().dimension(),
            witnesses: EngelWitnesses {
                condition_i: witness_of(&form_i),
                condition_iii: witness_of(&form_iii),
            },
            alpha,
            beta,
        })
    }

    /// Is the common zero set of `gens` an integral variety of the system?
    /// Tests that every coefficient of `ωᵢ ∧ df₁∧…∧df_r` lies in `⟨gens⟩`.
    pub fn is_integral_variety(&self, gens: &[Polynomial]) -> Result<bool> {
        for g in gens {
            if g.ambient() != self.ambient {
                return Err(Error::AmbientMismatch { expected: self.ambient, found: g.ambient() });
            }
        }
        let ideal = Ideal::new(self.ambient, gens.to_vec());
        let mut dwedge = DiffForm::function(Polynomial::one(self.ambient));
        for g in gens {
            dwedge = dwedge.wedge(&DiffForm::function(g.clone()).exterior_derivative())?;
        }
        for w in &self.generators {
            let total = w.wedge(&dwedge)?;
            for (_, coeff) in total.terms() {
                if !ideal.contains(coeff)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Generic coincidence of two systems of the same rank: every
    /// generator of one wedges to zero against the full wedge of the
    /// other, in both directions.
    pub fn same_system(&self, other: &PfaffSystem) -> Result<bool> {
        if other.ambient != self.ambient {
            return Err(Error::AmbientMismatch { expected: self.ambient, found: other.ambient });
        }
        if other.rank() != self.rank() {
            return Err(Error::WrongGeneratorCount { expected: self.rank(), found: other.rank() });
        }
        let ws = self.full_wedge();
        let wt = other.full_wedge();
        for g in &self.generators {
            if !g.wedge(&wt)?.is_zero() {
                return Ok(false);
            }
        }
        for g in &other.generators {
            if !g.wedge(&ws)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Codimension of the singular locus against the expected `k + 1`.
    pub fn codim_report(&self) -> CodimReport {
        let sing = self.singular_ideal().dimension();
        let expected_codimension = self.rank() + 1;
        let atypical = match sing {
            DimensionVerdict::Empty => false,
            DimensionVerdict::Proper { codimension, .. } => codimension < expected_codimension,
        };
        CodimReport { sing, expected_codimension, atypical }
    }
}

/// `Some(c)` iff `a = c·b` with a single rational constant; `b` must be
/// nonzero.
fn constant_ratio(a: &DiffForm, b: &DiffForm) -> Option<Rational> {
    let (k0, p0) = b.witness()?;
    let (m0, c0) = p0.terms().next()?;
    let ca = a.coefficient(k0).coefficient(m0);
    let c = ca / c0;
    (*a == b.scale(&c)).then_some(c)
}

/// The class of a nonzero 1-form: the unique `r ≥ 0` with
/// `β∧(dβ)^r ≠ 0` and `β∧(dβ)^{r+1} ≡ 0`.
pub fn class_of(beta: &DiffForm) -> Result<u32> {
    if beta.degree() != 1 {
        return Err(Error::FormDegreeMismatch { expected: 1, found: beta.degree() });
    }
    if beta.is_zero() {
        return Err(Error::ZeroFormClass);
    }
    let dbeta = beta.exterior_derivative();
    let mut current = beta.clone();
    let mut r = 0u32;
    loop {
        let next = current.wedge(&dbeta)?;
        if next.is_zero() {
            return Ok(r);
        }
        current = next;
        r += 1;
    }
}
