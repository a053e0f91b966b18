use std::fmt::{self, Write as _};
use std::fs;
use std::process::ExitCode;

use serde::Serialize;
use skewalg_core::fuzz::{self, SuiteOutcome};
use skewalg_core::spectra::{
    goldie_decomposition, verify_jm_closure_report, BivariateRecord, ClosureReport, JmRecord, PmRecord, SCHEMA,
};
use skewalg_core::{
    build_jm, exceptional_ideal, exceptional_lambdas, find_pm, find_pm_bivariate, make_example, maximality_scan,
    parse_central, parse_scalar, spectrum_report, Error, Example, ExampleFamily, GoldieReport, Scalar,
};

use crate::{Command, FamilyArgs, FamilyKind, Format, OutputArgs};

/// Outcome of a command that ran to completion.
pub enum Status {
    Pass,
    WitnessFailure,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        match s {
            Status::Pass => ExitCode::SUCCESS,
            Status::WitnessFailure => ExitCode::from(1),
        }
    }
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::WitnessFailure
    }
}

pub enum CliError {
    Usage(String),
    Engine(Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Engine(_) | CliError::Io(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidFamily(_)
            | Error::Parse { .. }
            | Error::NoSpectralData(_)
            | Error::NotExceptional(_)
            | Error::IndexOutOfRange(_) => CliError::Usage(e.to_string()),
            e => CliError::Engine(e),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    family: String,
    #[serde(flatten)]
    body: T,
}

fn family(args: &FamilyArgs) -> Result<ExampleFamily> {
    let fam = match args.kind {
        FamilyKind::Usl2 => ExampleFamily::Usl2,
        FamilyKind::Uqsl2 => ExampleFamily::Uqsl2,
        FamilyKind::Qtorus => ExampleFamily::Qtorus { p: args.p },
        FamilyKind::Adu => ExampleFamily::Adu { n: args.n, f: parse_central(&args.f, "k")? },
    };
    fam.validate()?;
    Ok(fam)
}

fn emit(out: &OutputArgs, json: impl FnOnce() -> String, md: impl FnOnce() -> String) -> Result<()> {
    let text = match out.format {
        Format::Json => json() + "\n",
        Format::Md => md(),
    };
    match &out.out {
        Some(path) => fs::write(path, text).map_err(CliError::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_enveloped<T: Serialize>(
    out: &OutputArgs,
    command: &str,
    fam: &ExampleFamily,
    body: &T,
    md: impl FnOnce() -> String,
) -> Result<()> {
    let env = Envelope { schema: SCHEMA, command, family: fam.to_string(), body };
    emit(out, || serde_json::to_string_pretty(&env).expect("serializable"), md)
}

fn lambda_or_default(ex: &Example, lambda: Option<&str>, m: u32) -> Result<Scalar> {
    match lambda {
        Some(src) => Ok(parse_scalar(src)?),
        None => Ok(exceptional_lambdas(&ex.family, m)?.remove(0).value),
    }
}

pub fn run(cmd: Command) -> Result<Status> {
    match cmd {
        Command::CheckIdentities { family: f, m_max, trials, seed, out } => {
            check_identities(&family(&f)?, m_max, trials, seed, &out)
        }
        Command::Exceptional { family: f, m_max, out } => exceptional(&family(&f)?, m_max, &out),
        Command::Scan { family: f, lambda, m_max, out } => scan(&family(&f)?, &lambda, m_max, &out),
        Command::JmTable { family: f, m, lambda, out } => jm_table(&family(&f)?, m, lambda.as_deref(), &out),
        Command::Goldie { family: f, m, lambda, out } => goldie(&family(&f)?, m, lambda.as_deref(), &out),
        Command::Report { family: f, m_max, out } => report(&family(&f)?, m_max, &out),
        Command::FindPm { family: f, m_max, out } => find_pm_cmd(&family(&f)?, m_max, &out),
    }
}

#[derive(Serialize)]
struct IdentityRow {
    m: u32,
    skew_commutation: bool,
    power_identities: bool,
}

#[derive(Serialize)]
struct IdentityBody {
    m_max: u32,
    seed: u64,
    identities: Vec<IdentityRow>,
    suites: Vec<SuiteOutcome>,
    passed: bool,
}

fn check_identities(fam: &ExampleFamily, m_max: u32, trials: usize, seed: u64, out: &OutputArgs) -> Result<Status> {
    let ex = make_example(fam)?;
    let w = ex.gwa(&Scalar::zero())?;
    let identities: Vec<_> = (1..=m_max)
        .map(|m| IdentityRow { m, skew_commutation: ex.ring.check_skewcomm(m), power_identities: w.power_identities(m) })
        .collect();
    let suites = if trials == 0 {
        Vec::new()
    } else {
        vec![
            fuzz::base_associativity(seed, ex.signature(), trials),
            fuzz::ore_associativity(seed.wrapping_add(1), &ex.ring, trials),
            fuzz::gwa_associativity(seed.wrapping_add(2), &w, trials),
            fuzz::gwa_grading(seed.wrapping_add(3), &w, trials),
            fuzz::ideal_lattice(seed.wrapping_add(4), ex.laurent(), trials),
        ]
    };
    let passed = identities.iter().all(|r| r.skew_commutation && r.power_identities) && suites.iter().all(|s| s.passed());
    let body = IdentityBody { m_max, seed, identities, suites, passed };
    emit_enveloped(out, "check-identities", fam, &body, || {
        let mut md = format!("# Identities for {fam}\n\n| m | skew commutation | power identities |\n|---|---|---|\n");
        for r in &body.identities {
            let _ = writeln!(md, "| {} | {} | {} |", r.m, r.skew_commutation, r.power_identities);
        }
        if !body.suites.is_empty() {
            md.push_str("\n| suite | trials | failures |\n|---|---|---|\n");
            for s in &body.suites {
                let _ = writeln!(md, "| {} | {} | {} |", s.name, s.trials, s.failures);
            }
        }
        md
    })?;
    Ok(status(passed))
}

#[derive(Serialize)]
struct ExceptionalRow {
    m: u32,
    sign: i8,
    lambda: String,
    m_generator: String,
    scan: Vec<u32>,
}

#[derive(Serialize)]
struct ExceptionalBody {
    m_max: u32,
    scan_bound: u32,
    lambdas: Vec<ExceptionalRow>,
}

fn exceptional(fam: &ExampleFamily, m_max: u32, out: &OutputArgs) -> Result<Status> {
    let ex = make_example(fam)?;
    let bound = (2 * m_max).max(10);
    let mut lambdas = Vec::new();
    for m in 1..=m_max {
        for l in exceptional_lambdas(fam, m)? {
            lambdas.push(ExceptionalRow {
                m,
                sign: l.sign,
                lambda: l.value.to_string(),
                m_generator: exceptional_ideal(&ex, &l.value, m)?.to_string(),
                scan: maximality_scan(&ex, &l.value, bound)?,
            });
        }
    }
    let ok = lambdas.iter().all(|r| r.scan == [r.m]);
    let body = ExceptionalBody { m_max, scan_bound: bound, lambdas };
    emit_enveloped(out, "exceptional", fam, &body, || {
        let mut md = format!("# Exceptional λ for {fam}\n\n| m | sign | λ | M | scan |\n|---|---|---|---|---|\n");
        for r in &body.lambdas {
            let sign = if r.sign > 0 { "+" } else { "-" };
            let _ = writeln!(md, "| {} | {sign} | {} | ({}) | {:?} |", r.m, r.lambda, r.m_generator, r.scan);
        }
        md
    })?;
    Ok(status(ok))
}

#[derive(Serialize)]
struct ScanBody {
    lambda: String,
    m_max: u32,
    hits: Vec<u32>,
}

fn scan(fam: &ExampleFamily, lambda: &str, m_max: u32, out: &OutputArgs) -> Result<Status> {
    let ex = make_example(fam)?;
    let lam = parse_scalar(lambda)?;
    let body = ScanBody { lambda: lam.to_string(), m_max, hits: maximality_scan(&ex, &lam, m_max)? };
    emit_enveloped(out, "scan", fam, &body, || {
        format!("# Scan for {fam}\n\nλ = {}, m ≤ {}: proper for m ∈ {:?}\n", body.lambda, body.m_max, body.hits)
    })?;
    Ok(Status::Pass)
}

#[derive(Serialize)]
struct JmBody {
    table: JmRecord,
    closure: ClosureReport,
}

fn jm_table(fam: &ExampleFamily, m: u32, lambda: Option<&str>, out: &OutputArgs) -> Result<Status> {
    let ex = make_example(fam)?;
    let lam = lambda_or_default(&ex, lambda, m)?;
    let t = build_jm(&ex, &lam, m)?;
    let body = JmBody { table: t.to_record(), closure: verify_jm_closure_report(&t) };
    emit_enveloped(out, "jm-table", fam, &body, || {
        let mut md = format!("# J(M) for {fam}, m = {m}, λ = {lam}\n\nM = ({})\n\n| d | I_d |\n|---|---|\n", t.ideal);
        for d in -(m as i64 - 1)..=(m as i64 - 1) {
            let _ = writeln!(md, "| {d} | ({}) |", t.component(d));
        }
        let verdict = if body.closure.passed() { "holds".to_string() } else { format!("fails: {:?}", body.closure.failures) };
        let _ = writeln!(md, "\nclosure ({} checks) {verdict}", body.closure.checked);
        md
    })?;
    Ok(status(body.closure.passed()))
}

#[derive(Serialize)]
struct GoldieBody {
    m: u32,
    lambda: String,
    m_generator: String,
    report: GoldieReport,
}

fn goldie(fam: &ExampleFamily, m: u32, lambda: Option<&str>, out: &OutputArgs) -> Result<Status> {
    let ex = make_example(fam)?;
    let lam = lambda_or_default(&ex, lambda, m)?;
    let t = build_jm(&ex, &lam, m)?;
    let report = goldie_decomposition(&t);
    let body = GoldieBody { m, lambda: lam.to_string(), m_generator: t.ideal.to_string(), report };
    emit_enveloped(out, "goldie", fam, &body, || {
        let rep = &body.report;
        let mut md = format!("# Goldie decomposition for {fam}, m = {m}, λ = {}\n\n", body.lambda);
        md.push_str("| r | comaximality | injectivity | annihilation | window | memberships |\n|---|---|---|---|---|---|\n");
        let tick = |ws: &[skewalg_core::spectra::WitnessLine]| format!("{}/{}", ws.iter().filter(|w| w.passed).count(), ws.len());
        for s in &rep.summands {
            let _ = writeln!(
                md,
                "| {} | {} | {} | {} | {} | {:?} |",
                s.r,
                tick(&s.comaximality),
                tick(&s.injectivity),
                tick(&s.annihilation),
                tick(&s.window),
                s.membership_set
            );
        }
        let _ = writeln!(md, "\ndirect sum: {}", tick(&rep.direct_sum));
        match rep.rank {
            Some(k) => {
                let _ = writeln!(md, "rank: {k}");
            }
            None => {
                let _ = writeln!(md, "rank: not established; failing witnesses: {:?}", rep.failures());
            }
        }
        md
    })?;
    Ok(status(body.report.passed()))
}

fn report(fam: &ExampleFamily, m_max: u32, out: &OutputArgs) -> Result<Status> {
    let r = spectrum_report(fam, m_max)?;
    emit(out, || serde_json::to_string_pretty(&r).expect("serializable"), || r.to_markdown())?;
    Ok(status(r.all_passed()))
}

#[derive(Serialize)]
#[serde(untagged)]
enum PmRows {
    Univariate(Vec<PmRecord>),
    Bivariate(Vec<BivariateRecord>),
}

#[derive(Serialize)]
struct PmBody {
    m_max: u32,
    certificates: PmRows,
}

fn find_pm_cmd(fam: &ExampleFamily, m_max: u32, out: &OutputArgs) -> Result<Status> {
    let ex = make_example(fam)?;
    let (rows, ok, lines): (PmRows, bool, Vec<String>) = if fam.has_spectral_data() {
        let rs = (1..=m_max).map(|m| find_pm(&ex, m).map(|w| w.to_record())).collect::<std::result::Result<Vec<_>, _>>()?;
        let ok = rs.iter().all(|r| r.certified);
        let lines = rs.iter().map(|r| format!("| {} | {} | ({}) | {} |", r.m, r.p, r.vm_generator, r.certified)).collect();
        (PmRows::Univariate(rs), ok, lines)
    } else {
        let rs = (1..=m_max)
            .map(|m| find_pm_bivariate(&ex, m).map(|w| w.to_record()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let ok = rs.iter().all(|r| r.certified);
        let lines = rs.iter().map(|r| format!("| {} | {} | ({}) | {} |", r.m, r.p, r.vm, r.certified)).collect();
        (PmRows::Bivariate(rs), ok, lines)
    };
    let body = PmBody { m_max, certificates: rows };
    emit_enveloped(out, "find-pm", fam, &body, || {
        let mut md = format!("# p_m certificates for {fam}\n\n| m | p_m | v^(m)A | certified |\n|---|---|---|---|\n");
        for l in &lines {
            let _ = writeln!(md, "{l}");
        }
        md
    })?;
    Ok(status(ok))
}
