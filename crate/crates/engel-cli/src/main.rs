//! Command-line front end: parse polynomials, forms, and systems from
//! inline text, files, or the built-in corpus; dispatch to the kernel;
//! and emit human-readable or JSON reports.
//!
//! Exit codes separate verdicts from failures: a computed verdict exits 0
//! even when the answer is "false" or "not Engel"; input errors exit 1;
//! usage errors exit 2.  Verdict JSON on stdout is byte-stable across
//! runs — the timing line goes to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use engel_core::pfaff::{class_of, TermWitness};
use engel_core::projective::{self, corpus};
use engel_core::ring::var_name;
use engel_core::{
    BetaRole, DiffForm, DimensionVerdict, Ideal, MonomialOrder, PfaffSystem, PolyMap, Polynomial,
};

#[derive(Parser)]
#[command(
    name = "engel",
    version,
    about = "Exact symbolic toolkit for polynomial differential forms and Pfaffian systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full Engel analysis of a rank-2 system: conditions, role, class,
    /// derived length, singular loci, witnesses
    #[command(name = "engel-check")]
    EngelCheck(SystemArgs),
    /// Singular locus of a system: coefficient ideal, reduced basis, codimension
    Sing(SystemArgs),
    /// Dimension of the vanishing locus of an ideal
    Dim(IdealArgs),
    /// Class of a 1-form: the largest r with form ^ (d form)^r nonzero
    Class(FormArgs),
    /// Does a 1-form lie in the derived system?
    Derived(DerivedArgs),
    /// Is the variety cut out by the given polynomials an integral variety?
    Integral(IntegralArgs),
    /// Do two generator sets span the same system?
    #[command(name = "same-system")]
    SameSystem(SameSystemArgs),
    /// Does the radial field contract the form to zero?
    Euler(FormArgs),
    /// Coefficient degree, degree, and twist of a homogeneous Euler-compatible form
    Degree(FormArgs),
    /// Verify the radial contraction identity i_R d(w) + d(i_R w) = (q+s) w
    Jouanolou(FormArgs),
    /// Degeneracy diagnostics for normal-form data f1, f2, f3, f4
    Degeneracy(DegeneracyArgs),
    /// Atypical-codimension verdict for a homogeneous Engel system
    Atypical(SystemArgs),
    /// Reduced Groebner basis of an ideal
    Groebner(IdealArgs),
    /// Ideal membership, or radical membership with --radical
    Member(MemberArgs),
    /// Pull a system back along a polynomial map
    Pullback(PullbackArgs),
    /// List the built-in example systems
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct SessionArgs {
    /// Number of ambient variables
    #[arg(long)]
    vars: usize,
    /// Emit the report as JSON on stdout
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SystemArgs {
    #[command(flatten)]
    session: SessionArgs,
    /// Use a built-in system (see `engel corpus`)
    #[arg(long, conflicts_with_all = ["file", "forms"])]
    corpus: Option<String>,
    /// Read generator forms from a file, one per line, `#` comments allowed
    #[arg(long, conflicts_with = "forms")]
    file: Option<PathBuf>,
    /// Generator 1-forms given inline
    forms: Vec<String>,
}

#[derive(Args)]
struct FormArgs {
    #[command(flatten)]
    session: SessionArgs,
    /// Read the form from a file instead of the command line
    #[arg(long, conflicts_with = "form")]
    file: Option<PathBuf>,
    /// The form, e.g. "dz4 - z3*dz1"
    form: Option<String>,
}

#[derive(Args)]
struct DerivedArgs {
    #[command(flatten)]
    session: SessionArgs,
    /// System to test against (see `engel corpus`)
    #[arg(long)]
    corpus: Option<String>,
    /// Read the system's generators from a file
    #[arg(long)]
    file: Option<PathBuf>,
    /// With --corpus or --file: the single form to test.  Otherwise the
    /// system's generators followed by the form to test.
    forms: Vec<String>,
}

#[derive(Args)]
struct IntegralArgs {
    #[command(flatten)]
    session: SessionArgs,
    /// System whose integral varieties are being probed
    #[arg(long, conflicts_with_all = ["file", "forms"])]
    corpus: Option<String>,
    /// Read the system's generators from a file
    #[arg(long, conflicts_with = "forms")]
    file: Option<PathBuf>,
    /// Generator 1-forms given inline
    forms: Vec<String>,
    /// Polynomial generator of the variety; repeat for several
    #[arg(long = "ideal", required = true)]
    ideal: Vec<String>,
}

#[derive(Args)]
struct SameSystemArgs {
    #[command(flatten)]
    session: SessionArgs,
    /// Built-in system; may be given twice to compare two corpus entries
    #[arg(long)]
    corpus: Vec<String>,
    /// File with one generator form per line; may be given twice
    #[arg(long)]
    file: Vec<PathBuf>,
    /// Inline generator forms, treated as one further system
    forms: Vec<String>,
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    session: SessionArgs,
    /// Monomial order for the basis computation
    #[arg(long, value_enum, default_value_t = OrderChoice::Grevlex)]
    order: OrderChoice,
    /// Read generators from a file, one per line
    #[arg(long, conflicts_with = "polys")]
    file: Option<PathBuf>,
    /// Generator polynomials given inline
    polys: Vec<String>,
}

#[derive(Args)]
struct MemberArgs {
    #[command(flatten)]
    session: SessionArgs,
    /// Test membership in the radical instead of the ideal itself
    #[arg(long)]
    radical: bool,
    /// Generator of the ideal; repeat for several
    #[arg(long = "ideal")]
    ideal: Vec<String>,
    /// Read further ideal generators from a file
    #[arg(long)]
    file: Option<PathBuf>,
    /// The polynomial to test
    probe: String,
}

#[derive(Args)]
struct DegeneracyArgs {
    #[command(flatten)]
    session: SessionArgs,
    #[arg(long)]
    f1: String,
    #[arg(long)]
    f2: String,
    #[arg(long)]
    f3: String,
    #[arg(long)]
    f4: String,
    /// Allow a zero f2 and report degenerate diagnostics
    #[arg(long)]
    allow_degenerate: bool,
}

#[derive(Args)]
struct PullbackArgs {
    #[command(flatten)]
    session: SessionArgs,
    /// System to pull back (lives in --vars variables)
    #[arg(long, conflicts_with_all = ["file", "forms"])]
    corpus: Option<String>,
    /// Read the system's generators from a file
    #[arg(long, conflicts_with = "forms")]
    file: Option<PathBuf>,
    /// Generator 1-forms given inline
    forms: Vec<String>,
    /// File with one polynomial per line: the image of each variable,
    /// written in the source variables
    #[arg(long)]
    map_file: PathBuf,
    /// Number of variables of the map's source
    #[arg(long)]
    source_vars: usize,
}

#[derive(Args)]
struct CorpusArgs {
    /// Emit the report as JSON on stdout
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderChoice {
    Grevlex,
    Lex,
}

impl OrderChoice {
    fn build(self, ambient: usize) -> MonomialOrder {
        match self {
            OrderChoice::Grevlex => MonomialOrder::grevlex(ambient),
            OrderChoice::Lex => MonomialOrder::lex(ambient),
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderChoice::Grevlex => "grevlex",
            OrderChoice::Lex => "lex",
        }
    }
}

// ------------------------------------------------------------------ loading

fn read_entries(path: &Path) -> Result<Vec<String>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(str::to_string)
        .collect())
}

fn parse_forms(ambient: usize, texts: &[String]) -> Result<Vec<DiffForm>> {
    texts
        .iter()
        .map(|t| DiffForm::parse(ambient, t).with_context(|| format!("in form `{t}`")))
        .collect()
}

fn parse_polys(ambient: usize, texts: &[String]) -> Result<Vec<Polynomial>> {
    texts
        .iter()
        .map(|t| Polynomial::parse(ambient, t).with_context(|| format!("in polynomial `{t}`")))
        .collect()
}

fn corpus_system(name: &str, vars: usize) -> Result<PfaffSystem> {
    let system = corpus::system(name)
        .ok_or_else(|| anyhow!("unknown corpus entry `{name}`; known: {}", corpus::NAMES.join(", ")))?;
    if system.ambient() != vars {
        bail!("corpus entry `{name}` has {} variables, but --vars is {vars}", system.ambient());
    }
    Ok(system)
}

fn load_system(
    vars: usize,
    corpus_name: &Option<String>,
    file: &Option<PathBuf>,
    forms: &[String],
) -> Result<PfaffSystem> {
    if let Some(name) = corpus_name {
        return corpus_system(name, vars);
    }
    let texts = match file {
        Some(path) => read_entries(path)?,
        None => forms.to_vec(),
    };
    if texts.is_empty() {
        bail!("no generator forms given; use --corpus, --file, or inline forms");
    }
    Ok(PfaffSystem::new(parse_forms(vars, &texts)?)?)
}

fn load_form(args: &FormArgs) -> Result<DiffForm> {
    let text = match (&args.file, &args.form) {
        (Some(path), _) => {
            let entries = read_entries(path)?;
            entries.into_iter().next().ok_or_else(|| anyhow!("{} is empty", path.display()))?
        }
        (None, Some(text)) => text.clone(),
        (None, None) => bail!("no form given; pass it inline or with --file"),
    };
    DiffForm::parse(args.session.vars, &text).with_context(|| format!("in form `{text}`"))
}

fn load_ideal_texts(file: &Option<PathBuf>, inline: &[String]) -> Result<Vec<String>> {
    let mut texts = inline.to_vec();
    if let Some(path) = file {
        texts.extend(read_entries(path)?);
    }
    Ok(texts)
}

// ------------------------------------------------------------------ reports

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'static str,
    report: &'a T,
}

fn emit<T: Serialize>(json: bool, command: &'static str, report: &T, text: String) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string(&Envelope { command, report })?);
    } else {
        println!("{text}");
    }
    Ok(())
}

fn witness_of(form: &DiffForm) -> Option<TermWitness> {
    form.witness().map(|(idx, coeff)| TermWitness {
        term: if idx.is_empty() {
            "1".to_string()
        } else {
            idx.iter()
                .map(|&i| format!("d{}", var_name(form.ambient(), i)))
                .collect::<Vec<_>>()
                .join("^")
        },
        coefficient: coeff.to_string(),
    })
}

fn dimension_text(v: &DimensionVerdict) -> String {
    match v {
        DimensionVerdict::Empty => "empty".to_string(),
        DimensionVerdict::Proper { dimension, codimension } => {
            format!("proper (dimension {dimension}, codimension {codimension})")
        }
    }
}

fn role_text(role: &BetaRole) -> String {
    match role {
        BetaRole::First => "first".to_string(),
        BetaRole::Second => "second".to_string(),
        BetaRole::Both => "both".to_string(),
        BetaRole::Neither => "neither".to_string(),
        BetaRole::Pencil { lambda, mu } => format!("pencil (lambda = {lambda}, mu = {mu})"),
    }
}

fn witness_text(w: &Option<TermWitness>) -> String {
    match w {
        Some(w) => format!("{} on {}", w.coefficient, w.term),
        None => "none".to_string(),
    }
}

#[derive(Serialize)]
struct VerdictReport {
    verdict: bool,
}

#[derive(Serialize)]
struct SingReport {
    generators: Vec<String>,
    reduced_basis: Vec<String>,
    sing: DimensionVerdict,
    expected_codimension: usize,
    atypical: bool,
}

#[derive(Serialize)]
struct ClassReport {
    class: u32,
    witness: Option<TermWitness>,
}

#[derive(Serialize)]
struct DerivedReport {
    verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction: Option<TermWitness>,
}

#[derive(Serialize)]
struct EulerReport {
    verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<TermWitness>,
}

#[derive(Serialize)]
struct GroebnerReport {
    order: &'static str,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct MemberReport {
    radical: bool,
    verdict: bool,
}

#[derive(Serialize)]
struct PullbackReport {
    source_vars: usize,
    target_vars: usize,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct CorpusEntry {
    name: &'static str,
    vars: usize,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct CorpusReport {
    systems: Vec<CorpusEntry>,
}

// ------------------------------------------------------------------ commands

fn run_engel_check(args: &SystemArgs) -> Result<()> {
    let system =
        load_system(args.session.vars, &args.corpus, &args.file, &args.forms)?;
    let report = system.engel_check()?;
    let text = format!(
        "is engel: {}\ncondition (i): {}\ncondition (ii): {}\ncondition (iii): {}\nrole: {}\nbeta ^ (d beta)^2 vanishes: {}\nclass of beta: {}\nderived length: {}\nsing(system): {}\nsing(d beta): {}\nwitness (i): {}\nwitness (iii): {}",
        report.is_engel,
        report.condition_i,
        report.condition_ii,
        report.condition_iii,
        role_text(&report.role),
        report.extra_iii_prime,
        report.class_of_beta,
        match report.derived_length {
            engel_core::DerivedLength::Known(n) => n.to_string(),
            engel_core::DerivedLength::NotDetermined => "not determined".to_string(),
        },
        dimension_text(&report.sing_system),
        dimension_text(&report.sing_dbeta),
        witness_text(&report.witnesses.condition_i),
        witness_text(&report.witnesses.condition_iii),
    );
    emit(args.session.json, "engel-check", &report, text)
}

fn run_sing(args: &SystemArgs) -> Result<()> {
    let system =
        load_system(args.session.vars, &args.corpus, &args.file, &args.forms)?;
    let ideal = system.singular_ideal();
    let codim = system.codim_report();
    let basis = ideal.reduced_basis(&MonomialOrder::grevlex(args.session.vars))?;
    let report = SingReport {
        generators: ideal.generators().iter().map(Polynomial::to_string).collect(),
        reduced_basis: basis.iter().map(Polynomial::to_string).collect(),
        sing: codim.sing,
        expected_codimension: codim.expected_codimension,
        atypical: codim.atypical,
    };
    let mut text = String::from("singular ideal generators:\n");
    for g in &report.generators {
        text.push_str(&format!("  {g}\n"));
    }
    text.push_str("reduced basis:\n");
    for g in &report.reduced_basis {
        text.push_str(&format!("  {g}\n"));
    }
    text.push_str(&format!(
        "sing: {}\nexpected codimension: {}\natypical: {}",
        dimension_text(&report.sing),
        report.expected_codimension,
        report.atypical
    ));
    emit(args.session.json, "sing", &report, text)
}

fn run_dim(args: &IdealArgs) -> Result<()> {
    let texts = load_ideal_texts(&args.file, &args.polys)?;
    let ideal = Ideal::new(args.session.vars, parse_polys(args.session.vars, &texts)?);
    let verdict = ideal.dimension();
    emit(args.session.json, "dim", &verdict, dimension_text(&verdict))
}

fn run_class(args: &FormArgs) -> Result<()> {
    let form = load_form(args)?;
    let class = class_of(&form)?;
    // witness: the first surviving term of form ^ (d form)^class
    let certificate = form.wedge(&form.exterior_derivative().form_power(class))?;
    let report = ClassReport { class, witness: witness_of(&certificate) };
    emit(args.session.json, "class", &report, class.to_string())
}

fn run_derived(args: &DerivedArgs) -> Result<()> {
    let vars = args.session.vars;
    let (system, gamma_text) = if args.corpus.is_some() || args.file.is_some() {
        if args.forms.len() != 1 {
            bail!("with --corpus or --file, give exactly one form to test");
        }
        (load_system(vars, &args.corpus, &args.file, &[])?, args.forms[0].clone())
    } else {
        if args.forms.len() < 2 {
            bail!("give the system's generators followed by the form to test");
        }
        let (gamma, gens) = args.forms.split_last().expect("nonempty");
        (PfaffSystem::new(parse_forms(vars, gens)?)?, gamma.clone())
    };
    let gamma = DiffForm::parse(vars, &gamma_text)
        .with_context(|| format!("in form `{gamma_text}`"))?;
    let verdict = system.in_derived(&gamma)?;
    let obstruction = if verdict {
        None
    } else {
        witness_of(&gamma.exterior_derivative().wedge(&system.full_wedge())?)
    };
    let report = DerivedReport { verdict, obstruction };
    emit(args.session.json, "derived", &report, verdict.to_string())
}

fn run_integral(args: &IntegralArgs) -> Result<()> {
    let system =
        load_system(args.session.vars, &args.corpus, &args.file, &args.forms)?;
    let gens = parse_polys(args.session.vars, &args.ideal)?;
    let verdict = system.is_integral_variety(&gens)?;
    emit(args.session.json, "integral", &VerdictReport { verdict }, verdict.to_string())
}

fn run_same_system(args: &SameSystemArgs) -> Result<()> {
    let vars = args.session.vars;
    let mut systems: Vec<PfaffSystem> = Vec::new();
    for name in &args.corpus {
        systems.push(corpus_system(name, vars)?);
    }
    for path in &args.file {
        systems.push(PfaffSystem::new(parse_forms(vars, &read_entries(path)?)?)?);
    }
    if !args.forms.is_empty() {
        systems.push(PfaffSystem::new(parse_forms(vars, &args.forms)?)?);
    }
    if systems.len() != 2 {
        bail!(
            "need exactly two systems (got {}); combine --corpus, --file, and inline forms",
            systems.len()
        );
    }
    let verdict = systems[0].same_system(&systems[1])?;
    emit(args.session.json, "same-system", &VerdictReport { verdict }, verdict.to_string())
}

fn run_euler(args: &FormArgs) -> Result<()> {
    let form = load_form(args)?;
    let radial = engel_core::VecField::radial(args.session.vars);
    let contracted = form.interior_product(&radial)?;
    let verdict = contracted.is_zero();
    let report = EulerReport { verdict, residual: witness_of(&contracted) };
    emit(args.session.json, "euler", &report, verdict.to_string())
}

fn run_degree(args: &FormArgs) -> Result<()> {
    let form = load_form(args)?;
    let report = projective::degree_of(&form)?;
    let text = format!(
        "coefficient degree: {}\ndegree: {}\ntwist: {}",
        report.coefficient_degree, report.degree, report.twist
    );
    emit(args.session.json, "degree", &report, text)
}

fn run_jouanolou(args: &FormArgs) -> Result<()> {
    let form = load_form(args)?;
    let verdict = projective::jouanolou_identity_check(&form)?;
    emit(args.session.json, "jouanolou", &VerdictReport { verdict }, verdict.to_string())
}

fn run_degeneracy(args: &DegeneracyArgs) -> Result<()> {
    let vars = args.session.vars;
    let p = |text: &String| {
        Polynomial::parse(vars, text).with_context(|| format!("in polynomial `{text}`"))
    };
    let f = [p(&args.f1)?, p(&args.f2)?, p(&args.f3)?, p(&args.f4)?];
    let report = projective::degeneracy_check(&f, args.allow_degenerate)?;
    let text = format!(
        "euler(alpha): {}\neuler(beta): {}\nrelations: {}\nbeta ^ d(beta) vanishes: {}\nalpha ^ beta ^ d(alpha) vanishes: {}",
        report.euler_alpha,
        report.euler_beta,
        match report.relations {
            Some(v) => v.to_string(),
            None => "not evaluated".to_string(),
        },
        report.beta_wedge_dbeta_vanishes,
        report.alpha_beta_dalpha_vanishes,
    );
    emit(args.session.json, "degeneracy", &report, text)
}

fn run_atypical(args: &SystemArgs) -> Result<()> {
    let system =
        load_system(args.session.vars, &args.corpus, &args.file, &args.forms)?;
    let projective_system = projective::ProjectiveSystem::new(system)?;
    let report = projective::atypicality_verdict(&projective_system)?;
    let branch = match report.branch {
        projective::AtypicalBranch::SingSystemCodimOne => "sing(system) has codimension one",
        projective::AtypicalBranch::SingDbetaCodimTwo => "sing(d beta) has codimension two",
        projective::AtypicalBranch::Neither => "neither branch",
    };
    let text = format!(
        "sing(system): {}\nsing(d beta): {}\ncontainment sing(d beta) in sing(system pair): {}\nbranch: {}",
        dimension_text(&report.sing_system),
        dimension_text(&report.sing_dbeta),
        report.containment,
        branch,
    );
    emit(args.session.json, "atypical", &report, text)
}

fn run_groebner(args: &IdealArgs) -> Result<()> {
    let vars = args.session.vars;
    let texts = load_ideal_texts(&args.file, &args.polys)?;
    let ideal = Ideal::new(vars, parse_polys(vars, &texts)?);
    let basis = ideal.reduced_basis(&args.order.build(vars))?;
    let report = GroebnerReport {
        order: args.order.name(),
        basis: basis.iter().map(Polynomial::to_string).collect(),
    };
    let mut text = format!("reduced basis ({}):", report.order);
    for g in &report.basis {
        text.push_str(&format!("\n  {g}"));
    }
    emit(args.session.json, "groebner", &report, text)
}

fn run_member(args: &MemberArgs) -> Result<()> {
    let vars = args.session.vars;
    let texts = load_ideal_texts(&args.file, &args.ideal)?;
    let ideal = Ideal::new(vars, parse_polys(vars, &texts)?);
    let probe = Polynomial::parse(vars, &args.probe)
        .with_context(|| format!("in polynomial `{}`", args.probe))?;
    let verdict =
        if args.radical { ideal.radical_contains(&probe)? } else { ideal.contains(&probe)? };
    let report = MemberReport { radical: args.radical, verdict };
    emit(args.session.json, "member", &report, verdict.to_string())
}

fn run_pullback(args: &PullbackArgs) -> Result<()> {
    let target = args.session.vars;
    let system = load_system(target, &args.corpus, &args.file, &args.forms)?;
    let component_texts = read_entries(&args.map_file)?;
    if component_texts.len() != target {
        bail!(
            "{} lists {} components, but the target has {target} variables",
            args.map_file.display(),
            component_texts.len()
        );
    }
    let components = parse_polys(args.source_vars, &component_texts)?;
    let map = PolyMap::new(args.source_vars, components)?;
    let pulled: Vec<DiffForm> = system
        .generators()
        .iter()
        .map(|g| g.pullback(&map))
        .collect::<engel_core::Result<_>>()?;
    let report = PullbackReport {
        source_vars: args.source_vars,
        target_vars: target,
        generators: pulled.iter().map(DiffForm::to_string).collect(),
    };
    let mut text = String::from("pulled-back generators:");
    for g in &report.generators {
        text.push_str(&format!("\n  {g}"));
    }
    emit(args.session.json, "pullback", &report, text)
}

fn run_corpus(args: &CorpusArgs) -> Result<()> {
    let systems: Vec<CorpusEntry> = corpus::NAMES
        .iter()
        .map(|&name| {
            let system = corpus::system(name).expect("listed name resolves");
            CorpusEntry {
                name,
                vars: system.ambient(),
                generators: system.generators().iter().map(DiffForm::to_string).collect(),
            }
        })
        .collect();
    let report = CorpusReport { systems };
    let mut text = String::new();
    for entry in &report.systems {
        text.push_str(&format!("{} ({} variables):\n", entry.name, entry.vars));
        for g in &entry.generators {
            text.push_str(&format!("  {g}\n"));
        }
    }
    emit(args.json, "corpus", &report, text.trim_end().to_string())
}

fn run(cli: Cli) -> Result<()> {
    match &cli.command {
        Command::EngelCheck(args) => run_engel_check(args),
        Command::Sing(args) => run_sing(args),
        Command::Dim(args) => run_dim(args),
        Command::Class(args) => run_class(args),
        Command::Derived(args) => run_derived(args),
        Command::Integral(args) => run_integral(args),
        Command::SameSystem(args) => run_same_system(args),
        Command::Euler(args) => run_euler(args),
        Command::Degree(args) => run_degree(args),
        Command::Jouanolou(args) => run_jouanolou(args),
        Command::Degeneracy(args) => run_degeneracy(args),
        Command::Atypical(args) => run_atypical(args),
        Command::Groebner(args) => run_groebner(args),
        Command::Member(args) => run_member(args),
        Command::Pullback(args) => run_pullback(args),
        Command::Corpus(args) => run_corpus(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = run(cli);
    eprintln!("computed in {:.1?}", started.elapsed());
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
