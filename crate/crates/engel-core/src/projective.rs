//! Homogeneous systems on projective space: Euler-contraction checks,
//! degree and twist bookkeeping, the contraction identity
//! `i_R dη + d(i_R η) = (q+s)η`, the homogeneity relations that force
//! degeneracy of global normal forms, and the built-in example corpus.
//!
//! The primitive notion throughout is the *coefficient degree* `s` of a
//! form; the classical degree `d = s − 1` and line-bundle twist
//! `d + k + 1 = s + k` are derived from it, which keeps the contraction
//! factor `q + s` unambiguous.

use serde::Serialize;

use crate::exterior::{DiffForm, VecField};
use crate::groebner::DimensionVerdict;
use crate::pfaff::PfaffSystem;
use crate::ring::{ratz, Homogeneity, Polynomial};
use crate::{Error, Result};

/// Checks the Euler condition: the radial field contracts `w` to zero.
pub fn euler_check(w: &DiffForm) -> bool {
    w.interior_product(&VecField::radial(w.ambient())).expect("radial field matches ambient").is_zero()
}

/// Degree bookkeeping of a homogeneous Euler-compatible form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FormDegree {
    /// Common degree `s` of all coefficient polynomials.
    pub coefficient_degree: u32,
    /// Classical degree `d = s − 1` (a constant-coefficient form has
    /// degree −1).
    pub degree: i64,
    /// Line-bundle twist `d + k + 1 = s + k`, `k` the form degree.
    pub twist: i64,
}

/// Degree and twist of `w`; errors on the zero form, inhomogeneous
/// coefficients, or an Euler violation.
pub fn degree_of(w: &DiffForm) -> Result<FormDegree> {
    let s = match w.coefficient_homogeneity() {
        Homogeneity::Homogeneous { degree } => degree,
        Homogeneity::Zero => {
            return Err(Error::InvalidInput("the zero form has no well-defined degree".into()))
        }
        Homogeneity::Inhomogeneous => return Err(Error::Inhomogeneous),
    };
    if !euler_check(w) {
        return Err(Error::EulerViolation);
    }
    let k = w.degree() as i64;
    let degree = i64::from(s) - 1;
    Ok(FormDegree { coefficient_degree: s, degree, twist: degree + k + 1 })
}

/// Verifies the contraction identity `i_R dη + d(i_R η) = (q+s)η` for a
/// form of degree `q` with homogeneous coefficients of degree `s`.  The
/// identity always holds; this is a self-test and a convention checker.
pub fn jouanolou_identity_check(eta: &DiffForm) -> Result<bool> {
    if eta.is_zero() {
        return Ok(true);
    }
    let s = match eta.coefficient_homogeneity() {
        Homogeneity::Homogeneous { degree } => degree,
        _ => return Err(Error::Inhomogeneous),
    };
    let radial = VecField::radial(eta.ambient());
    let lhs = eta
        .exterior_derivative()
        .interior_product(&radial)?
        .checked_add(&eta.interior_product(&radial)?.exterior_derivative())?;
    let factor = ratz(eta.degree() as i64 + i64::from(s));
    Ok(lhs == eta.scale(&factor))
}

/// Outcome of [`degeneracy_check`]: what homogenization forces on a
/// would-be global normal form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct DegeneracyReport {
    pub euler_alpha: bool,
    pub euler_beta: bool,
    /// The forced identities `k₄f₄ = k₁f₃f₁` and `k₃f₃ = k₁f₂f₁`
    /// (`kᵢ = deg fᵢ`); only evaluated when both Euler checks pass, since
    /// the Euler condition is what forces them.
    pub relations: Option<bool>,
    pub beta_wedge_dbeta_vanishes: bool,
    pub alpha_beta_dalpha_vanishes: bool,
}

fn homogeneous_degree_of(f: &Polynomial, name: &str) -> Result<u32> {
    match f.homogeneous_degree() {
        Homogeneity::Homogeneous { degree } => Ok(degree),
        Homogeneity::Zero => Err(Error::InvalidInput(format!("{name} must be nonzero"))),
        Homogeneity::Inhomogeneous => Err(Error::Inhomogeneous),
    }
}

/// Builds `α = df₄ − f₃df₁` and `β = df₃ − f₂df₁` from homogeneous data
/// and reports the relations that homogeneity forces.  `f₁`, `f₃`, `f₄`
/// must be nonzero; a zero `f₂` is rejected unless `allow_degenerate`
/// opts into degenerate diagnostics.
pub fn degeneracy_check(f: &[Polynomial; 4], allow_degenerate: bool) -> Result<DegeneracyReport> {
    let ambient = f[0].ambient();
    for fi in f.iter() {
        if fi.ambient() != ambient {
            return Err(Error::AmbientMismatch { expected: ambient, found: fi.ambient() });
        }
    }
    let k1 = homogeneous_degree_of(&f[0], "f1")?;
    let k3 = homogeneous_degree_of(&f[2], "f3")?;
    let k4 = homogeneous_degree_of(&f[3], "f4")?;
    if f[1].is_zero() {
        if !allow_degenerate {
            return Err(Error::InvalidInput(
                "f2 is zero; enable degenerate diagnostics to proceed".into(),
            ));
        }
    } else if matches!(f[1].homogeneous_degree(), Homogeneity::Inhomogeneous) {
        return Err(Error::Inhomogeneous);
    }

    let d = |p: &Polynomial| DiffForm::function(p.clone()).exterior_derivative();
    let alpha = d(&f[3]).checked_sub(&d(&f[0]).scale_poly(&f[2])?)?;
    let beta = d(&f[2]).checked_sub(&d(&f[0]).scale_poly(&f[1])?)?;

    let euler_alpha = euler_check(&alpha);
    let euler_beta = euler_check(&beta);
    let relations = if euler_alpha && euler_beta {
        let scaled = |k: u32, p: &Polynomial| p.scale(&ratz(i64::from(k)));
        let rel_alpha = scaled(k4, &f[3]) == scaled(k1, &f[2].checked_mul(&f[0])?);
        let rel_beta = scaled(k3, &f[2]) == scaled(k1, &f[1].checked_mul(&f[0])?);
        Some(rel_alpha && rel_beta)
    } else {
        None
    };

    let dbeta = beta.exterior_derivative();
    let dalpha = alpha.exterior_derivative();
    let beta_wedge_dbeta_vanishes = beta.wedge(&dbeta)?.is_zero();
    let alpha_beta_dalpha_vanishes = alpha.wedge(&beta)?.wedge(&dalpha)?.is_zero();

    Ok(DegeneracyReport {
        euler_alpha,
        euler_beta,
        relations,
        beta_wedge_dbeta_vanishes,
        alpha_beta_dalpha_vanishes,
    })
}

/// On exactly five variables, a homogeneous Euler-compatible 1-form can
/// never have class ≥ 2: `β∧(dβ)²` is a top-degree form annihilated by
/// the radial contraction, hence identically zero.  This check certifies
/// that vanishing on concrete input.
pub fn five_form_vanishing_check(beta: &DiffForm) -> Result<bool> {
    if beta.ambient() != 5 {
        return Err(Error::InvalidInput(format!(
            "the five-form vanishing check needs exactly 5 variables, got {}",
            beta.ambient()
        )));
    }
    if beta.is_zero() {
        return Ok(true);
    }
    if beta.degree() != 1 {
        return Err(Error::FormDegreeMismatch { expected: 1, found: beta.degree() });
    }
    if matches!(beta.coefficient_homogeneity(), Homogeneity::Inhomogeneous) {
        return Err(Error::Inhomogeneous);
    }
    if !euler_check(beta) {
        return Err(Error::EulerViolation);
    }
    let dbeta = beta.exterior_derivative();
    Ok(beta.wedge(&dbeta)?.wedge(&dbeta)?.is_zero())
}

/// Pfaffian system whose generators are homogeneous and Euler-compatible,
/// carrying the per-generator coefficient degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectiveSystem {
    underlying: PfaffSystem,
    coefficient_degrees: Vec<u32>,
}

impl ProjectiveSystem {
    pub fn new(system: PfaffSystem) -> Result<Self> {
        let mut coefficient_degrees = Vec::with_capacity(system.rank());
        for g in system.generators() {
            let s = match g.coefficient_homogeneity() {
                Homogeneity::Homogeneous { degree } => degree,
                _ => return Err(Error::Inhomogeneous),
            };
            if !euler_check(g) {
                return Err(Error::EulerViolation);
            }
            coefficient_degrees.push(s);
        }
        Ok(ProjectiveSystem { underlying: system, coefficient_degrees })
    }

    pub fn underlying(&self) -> &PfaffSystem {
        &self.underlying
    }

    pub fn coefficient_degrees(&self) -> &[u32] {
        &self.coefficient_degrees
    }
}

/// Which branch of the atypical-codimension alternative an instance
/// realizes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AtypicalBranch {
    SingSystemCodimOne,
    SingDbetaCodimTwo,
    Neither,
}

/// Report of [`atypicality_verdict`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct AtypicalityReport {
    pub sing_system: DimensionVerdict,
    pub sing_dbeta: DimensionVerdict,
    /// Certifies `V(coeff dβ) ⊆ V(coeff β∧α)`: every generator of the
    /// right ideal lies in the radical of the left one.
    pub containment: bool,
    pub branch: AtypicalBranch,
}

/// For a rank-2 homogeneous Engel system: codimensions of the singular
/// loci, the containment `Sing(dβ) ⊆ Sing(β∧α)`, and the branch of the
/// alternative realized.  Errors on non-Engel input.
pub fn atypicality_verdict(system: &ProjectiveSystem) -> Result<AtypicalityReport> {
    let report = system.underlying().engel_check()?;
    if !report.is_engel {
        return Err(Error::NotEngel);
    }
    let dbeta_ideal = report.beta.exterior_derivative().coefficient_ideal();
    let pair_ideal = report.beta.wedge(&report.alpha)?.coefficient_ideal();
    let mut containment = true;
    for g in pair_ideal.generators() {
        if !dbeta_ideal.radical_contains(g)? {
            containment = false;
            break;
        }
    }
    let branch = match (report.sing_system, report.sing_dbeta) {
        (DimensionVerdict::Proper { codimension: 1, .. }, _) => AtypicalBranch::SingSystemCodimOne,
        (_, DimensionVerdict::Proper { codimension: 2, .. }) => AtypicalBranch::SingDbetaCodimTwo,
        _ => AtypicalBranch::Neither,
    };
    Ok(AtypicalityReport {
        sing_system: report.sing_system,
        sing_dbeta: report.sing_dbeta,
        containment,
        branch,
    })
}

/// Built-in example systems, resolvable by name from the command line.
pub mod corpus {
    use super::PfaffSystem;
    use crate::exterior::DiffForm;

    /// Names accepted by [`system`].
    pub const NAMES: [&str; 3] = ["canonical", "example1", "example2"];

    fn build(ambient: usize, texts: &[&str]) -> PfaffSystem {
        let generators =
            texts.iter().map(|t| DiffForm::parse(ambient, t).expect("corpus form parses")).collect();
        PfaffSystem::new(generators).expect("corpus system is nondegenerate")
    }

    /// The flat rank-2 system `⟨dz₄ − z₃dz₁, dz₃ − z₂dz₁⟩` on four
    /// variables; the model every Engel system is locally equivalent to.
    pub fn canonical() -> PfaffSystem {
        build(4, &["dz4 - z3*dz1", "dz3 - z2*dz1"])
    }

    /// Homogeneous rank-2 system on five variables with singular locus
    /// `{z₀ = 0}` of codimension one.
    pub fn example1() -> PfaffSystem {
        build(
            5,
            &[
                "z0^2*dz4 - z0*z3*dz1 + (z1*z3 - z0*z4)*dz0",
                "z0^2*dz3 - z0*z2*dz1 + (z1*z2 - z0*z3)*dz0",
            ],
        )
    }

    /// Homogeneous rank-2 system on five variables, coefficient degree 3,
    /// with `Sing(dβ) = {z₀ = z₃ = z₄ = 0}` of codimension three.
    pub fn example2() -> PfaffSystem {
        build(
            5,
            &[
                "z0^3*dz1 - z0*z4^2*dz3 + 2*z0^2*z4*dz4 + (z3*z4^2 - 2*z0*z4^2 - z0^2*z1)*dz0",
                "z0^3*dz2 - (z0^2*z1 + z0*z3^2 + z0*z4^2)*dz3 + (z3^3 + z3*z4^2 + z0*z1*z3 - z0^2*z2)*dz0",
            ],
        )
    }

    /// Look up a corpus entry by name.
    pub fn system(name: &str) -> Option<PfaffSystem> {
        match name {
            "canonical" => Some(canonical()),
            "example1" => Some(example1()),
            "example2" => Some(example2()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfaff::BetaRole;

    fn form(ambient: usize, s: &str) -> DiffForm {
        DiffForm::parse(ambient, s).unwrap()
    }

    fn poly(ambient: usize, s: &str) -> Polynomial {
        Polynomial::parse(ambient, s).unwrap()
    }

    #[test]
    fn euler_examples() {
        for g in corpus::example1().generators() {
            assert!(euler_check(g));
        }
        for g in corpus::example2().generators() {
            assert!(euler_check(g));
        }
        assert!(!euler_check(&form(5, "dz0")));
        // the canonical chart generators are not Euler-compatible
        assert!(!euler_check(&corpus::canonical().generators()[0]));
    }

    #[test]
    fn degree_examples() {
        let wedge = corpus::example1().full_wedge();
        assert_eq!(
            degree_of(&wedge).unwrap(),
            FormDegree { coefficient_degree: 4, degree: 3, twist: 6 }
        );
        assert_eq!(
            degree_of(&form(5, "z1*dz2 - z2*dz1")).unwrap(),
            FormDegree { coefficient_degree: 1, degree: 0, twist: 2 }
        );
        assert_eq!(
            degree_of(&corpus::example2().generators()[0]).unwrap(),
            FormDegree { coefficient_degree: 3, degree: 2, twist: 4 }
        );
        assert!(matches!(degree_of(&form(5, "dz0")), Err(Error::EulerViolation)));
        assert!(matches!(degree_of(&form(5, "z0*dz1 + dz2")), Err(Error::Inhomogeneous)));
        assert!(degree_of(&DiffForm::zero(5, 1)).is_err());
    }

    #[test]
    fn contraction_identity_fixed_instances() {
        assert!(jouanolou_identity_check(&form(5, "z0*dz1")).unwrap());
        assert!(jouanolou_identity_check(&form(5, "dz0")).unwrap());
        assert!(jouanolou_identity_check(&form(5, "z0*z1*z2 - z3^3")).unwrap());
        assert!(jouanolou_identity_check(&corpus::example1().generators()[1]).unwrap());
        assert!(jouanolou_identity_check(&DiffForm::zero(5, 2)).unwrap());
        assert!(matches!(
            jouanolou_identity_check(&form(5, "z0*dz1 + dz2")),
            Err(Error::Inhomogeneous)
        ));
    }

    #[test]
    fn euler_forms_contract_their_derivative_back() {
        // i_R(dβ) = (1+s)β whenever i_Rβ = 0
        for g in corpus::example1().generators() {
            let contracted =
                g.exterior_derivative().interior_product(&VecField::radial(5)).unwrap();
            assert_eq!(contracted, g.scale(&ratz(3)));
        }
        for g in corpus::example2().generators() {
            let contracted =
                g.exterior_derivative().interior_product(&VecField::radial(5)).unwrap();
            assert_eq!(contracted, g.scale(&ratz(4)));
        }
    }

    #[test]
    fn degeneracy_on_the_textbook_quadruple() {
        let f = [
            poly(2, "z0"),
            poly(2, "z1"),
            poly(2, "1/2*z0*z1"),
            poly(2, "1/6*z0^2*z1"),
        ];
        let report = degeneracy_check(&f, false).unwrap();
        assert!(report.euler_alpha && report.euler_beta);
        assert_eq!(report.relations, Some(true));
        assert!(report.beta_wedge_dbeta_vanishes);
        assert!(report.alpha_beta_dalpha_vanishes);
    }

    #[test]
    fn degeneracy_rejects_degenerate_data_by_default() {
        let bad = [poly(2, "z0"), poly(2, "z1"), Polynomial::zero(2), poly(2, "z0^2")];
        assert!(degeneracy_check(&bad, false).is_err());
        assert!(degeneracy_check(&bad, true).is_err()); // f3 still zero

        let zero_f2 = [poly(2, "z0"), Polynomial::zero(2), poly(2, "z0*z1"), poly(2, "z0^2*z1")];
        assert!(degeneracy_check(&zero_f2, false).is_err());
        let report = degeneracy_check(&zero_f2, true).unwrap();
        // with f2 = 0 the relation k3 f3 = k1 f2 f1 forces f3 = 0, so the
        // Euler check for beta = df3 must fail
        assert!(!report.euler_beta);
    }

    #[test]
    fn degeneracy_detects_euler_failure() {
        let f = [poly(2, "z0"), poly(2, "z1"), poly(2, "z0^2"), poly(2, "z0^3")];
        let report = degeneracy_check(&f, false).unwrap();
        assert!(!report.euler_beta);
        assert_eq!(report.relations, None);
    }

    #[test]
    fn five_form_vanishing_examples() {
        for g in corpus::example1().generators() {
            assert!(five_form_vanishing_check(g).unwrap());
        }
        for g in corpus::example2().generators() {
            assert!(five_form_vanishing_check(g).unwrap());
        }
        // contracting a 2-form against the radial field always produces
        // an Euler-compatible 1-form
        let theta = form(5, "z0*z3*dz1^dz4 + z2^2*dz0^dz3 - z1*z4*dz2^dz4");
        let beta = theta.interior_product(&VecField::radial(5)).unwrap();
        assert!(five_form_vanishing_check(&beta).unwrap());

        assert!(five_form_vanishing_check(&form(4, "dz1")).is_err());
        assert!(matches!(five_form_vanishing_check(&form(5, "dz0")), Err(Error::EulerViolation)));
    }

    #[test]
    fn projective_wrapper_validates_generators() {
        let p1 = ProjectiveSystem::new(corpus::example1()).unwrap();
        assert_eq!(p1.coefficient_degrees(), &[2, 2]);
        let p2 = ProjectiveSystem::new(corpus::example2()).unwrap();
        assert_eq!(p2.coefficient_degrees(), &[3, 3]);
        // the canonical chart has mixed coefficient degrees (1 and -z2),
        // so homogeneity is what fails first
        assert!(matches!(ProjectiveSystem::new(corpus::canonical()), Err(Error::Inhomogeneous)));
    }

    #[test]
    fn example1_engel_and_atypicality() {
        let report = corpus::example1().engel_check().unwrap();
        assert!(report.is_engel);
        assert_eq!(report.role, BetaRole::First);
        assert_eq!(report.class_of_beta, 1);
        assert_eq!(report.sing_system, DimensionVerdict::Proper { dimension: 4, codimension: 1 });
        assert_eq!(report.sing_dbeta, DimensionVerdict::Proper { dimension: 2, codimension: 3 });

        let verdict = atypicality_verdict(&ProjectiveSystem::new(corpus::example1()).unwrap()).unwrap();
        assert!(verdict.containment);
        assert_eq!(verdict.branch, AtypicalBranch::SingSystemCodimOne);
    }

    #[test]
    fn example2_engel_and_atypicality() {
        let report = corpus::example2().engel_check().unwrap();
        assert!(report.is_engel);
        assert_eq!(report.role, BetaRole::Second);
        assert_eq!(report.class_of_beta, 1);
        assert_eq!(report.sing_system, DimensionVerdict::Proper { dimension: 4, codimension: 1 });
        assert_eq!(report.sing_dbeta, DimensionVerdict::Proper { dimension: 2, codimension: 3 });

        let verdict = atypicality_verdict(&ProjectiveSystem::new(corpus::example2()).unwrap()).unwrap();
        assert!(verdict.containment);
        assert_eq!(verdict.branch, AtypicalBranch::SingSystemCodimOne);
    }

    #[test]
    fn corpus_lookup() {
        for name in corpus::NAMES {
            assert!(corpus::system(name).is_some(), "{name} resolves");
        }
        assert!(corpus::system("unknown").is_none());
        assert_eq!(corpus::canonical().ambient(), 4);
        assert_eq!(corpus::example1().ambient(), 5);
    }
}
