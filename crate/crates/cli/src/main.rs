//! `radgen`: Gröbner bases, radical membership and the generator
//! constructions from the command line.
//!
//! Exit status: 0 when every requested verdict holds, 1 when a verification
//! fails, 2 on usage or input errors, 3 when a resource limit is hit.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use radgen::constructions::{Prop1Input, SvVariant};
use radgen::formats::{parse_ideal_file, parse_matrix_json, parse_partition_file, parse_ring_spec};
use radgen::membership::CertificateRecord;
use radgen::paper::{certify_cases, CaseId, CertifyOptions, DEFAULT_FAMILY_CAP};
use radgen::{
    Engine, Error, Field, Ideal, Limits, MembershipCertificate, MonomialOrder, Polynomial,
    RadicalEquality, Ring,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "radgen",
    version,
    about = "Generating ideals up to radical, with certificates"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Ideal file (`ring ...` header plus generators) or an inline ring such
    /// as "Q x1 x2 x3"
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Coefficient field, overriding the ring header: Q or Fp:<prime>
    #[arg(long, global = true)]
    field: Option<Field>,
    /// Monomial order
    #[arg(long, global = true, default_value = "grevlex", value_parser = parse_order)]
    order: MonomialOrder,
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    /// Emit constructions whose hypotheses fail, without certifying them
    #[arg(long, global = true)]
    force: bool,
    /// Maximum number of S-pairs per Gröbner computation
    #[arg(long, global = true, value_name = "N")]
    limit_pairs: Option<usize>,
    /// Directory with golden `<case>.txt` files
    #[arg(long, global = true, value_name = "DIR")]
    golden_dir: Option<PathBuf>,
    /// Partition condition: lemma1 or lemma2
    #[arg(long, global = true)]
    variant: Option<SvVariant>,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    match s {
        "lex" => Ok(MonomialOrder::Lex),
        "grevlex" => Ok(MonomialOrder::Grevlex),
        other => Err(format!("unknown order `{other}` (expected lex or grevlex)")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print expressions in canonical form
    Parse { exprs: Vec<String> },
    /// Reduced Gröbner basis
    Gb {
        /// Ideal: comma-separated generators or an ideal file (default: --ring file)
        ideal: Option<String>,
    },
    /// Decide f ∈ I
    Member { f: String, ideal: Option<String> },
    /// Decide f ∈ √I
    Radmember { f: String, ideal: Option<String> },
    /// Decide √I = √J
    Radequal { first: String, second: String },
    /// Generators of I ∩ J
    Intersect { first: String, second: String },
    /// Krull dimension of the quotient
    Dim { ideal: Option<String> },
    /// Combine a partition file into one generator per part
    Sv { partition: PathBuf },
    /// Matrix-criterion construction from a JSON input file
    Matrix { input: PathBuf },
    /// Recursive construction for (a1*b1 + a2*b2) + (b1, b2)(g1, ..., gm)
    Prop1 {
        a1: String,
        a2: String,
        b1: String,
        b2: String,
        #[arg(required = true)]
        gammas: Vec<String>,
    },
    /// Certify the worked examples
    Paper {
        /// example1, example2, j6 or in:<n>
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        case: Option<String>,
        /// Every case, with the family up to --max-n
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_FAMILY_CAP, value_name = "N")]
        max_n: usize,
    },
}

/// Failures with their exit status.
enum Failure {
    Verification(String),
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(msg),
            Error::ConditionFailed(_) | Error::LiftFailure(_) | Error::NotInIdeal { .. } => {
                Failure::Verification(msg)
            }
            _ => Failure::Usage(msg),
        }
    }
}

type Outcome = Result<bool, Failure>;

struct Session {
    global: Global,
    engine: Engine,
    ring: Option<Ring>,
    ideal: Option<Ideal>,
}

impl Session {
    fn new(global: Global) -> Result<Session, Failure> {
        let mut limits = Limits::default();
        if let Some(n) = global.limit_pairs {
            limits.max_pairs = n;
        }
        let mut s = Session {
            engine: Engine::new(limits),
            ring: None,
            ideal: None,
            global,
        };
        if let Some(spec) = s.global.ring.clone() {
            if Path::new(&spec).is_file() {
                let ideal = s.read_ideal_file(Path::new(&spec))?;
                s.ring = Some(ideal.ring().clone());
                s.ideal = Some(ideal);
            } else {
                let spec = spec.strip_prefix("ring ").unwrap_or(&spec);
                s.ring = Some(parse_ring_spec(
                    spec,
                    Field::Rational,
                    s.global.field,
                    s.global.order,
                )?);
            }
        }
        Ok(s)
    }

    fn read_ideal_file(&self, path: &Path) -> Result<Ideal, Failure> {
        let text = read(path)?;
        Ok(parse_ideal_file(
            &text,
            self.global.field,
            self.global.order,
        )?)
    }

    fn ring(&self) -> Result<&Ring, Failure> {
        self.ring
            .as_ref()
            .ok_or_else(|| Failure::Usage("no ring given (use --ring)".into()))
    }

    fn poly(&self, text: &str) -> Result<Polynomial, Failure> {
        Ok(Polynomial::parse(text, self.ring()?)?)
    }

    /// An ideal argument: an ideal file, comma-separated generators, or the
    /// `--ring` file's generators when absent.
    fn ideal(&mut self, arg: Option<&str>) -> Result<Ideal, Failure> {
        let Some(arg) = arg else {
            return self.ideal.clone().ok_or_else(|| {
                Failure::Usage("no ideal given (pass generators or an ideal file)".into())
            });
        };
        if Path::new(arg).is_file() {
            let ideal = self.read_ideal_file(Path::new(arg))?;
            match &self.ring {
                None => self.ring = Some(ideal.ring().clone()),
                Some(r) if r.vars() != ideal.ring().vars() || r.field() != ideal.ring().field() => {
                    return Err(Failure::Usage(format!(
                        "{arg}: ring differs from `{}`",
                        r.header()
                    )))
                }
                Some(r) => return Ok(ideal.map_field(r)?),
            }
            return Ok(ideal);
        }
        let ring = self.ring()?.clone();
        let gens = arg
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Polynomial::parse(s, &ring))
            .collect::<radgen::Result<Vec<_>>>()?;
        Ok(Ideal::new(&ring, gens)?)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn records(certs: &[MembershipCertificate]) -> Vec<CertificateRecord> {
    certs.iter().map(MembershipCertificate::record).collect()
}

fn equality_json(eq: &RadicalEquality) -> Value {
    json!({
        "equal": eq.equal,
        "forward": records(&eq.forward),
        "backward": records(&eq.backward),
        "counters": eq.counters(),
    })
}

struct Out {
    json: bool,
    buf: String,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        if !self.json {
            self.buf.push_str(s.as_ref());
            self.buf.push('\n');
        }
    }

    fn value(&mut self, v: Value) {
        if self.json {
            self.buf = serde_json::to_string_pretty(&v).expect("json") + "\n";
        }
    }
}

fn verdict_name(holds: bool) -> &'static str {
    if holds {
        "true"
    } else {
        "false"
    }
}

fn run(cli: Cli, out: &mut Out) -> Outcome {
    let mut s = Session::new(cli.global)?;
    match cli.command {
        Command::Parse { exprs } => {
            let ps = exprs
                .iter()
                .map(|e| s.poly(e))
                .collect::<Result<Vec<_>, _>>()?;
            for p in &ps {
                out.line(p.to_string());
            }
            out.value(json!({ "polynomials": strings(&ps) }));
            Ok(true)
        }
        Command::Gb { ideal } => {
            let ideal = s.ideal(ideal.as_deref())?;
            let gb = s.engine.groebner(&ideal)?;
            for g in gb.elements() {
                out.line(g.to_string());
            }
            out.value(json!({
                "ring": ideal.ring().header(),
                "order": ideal.ring().order().name(),
                "basis": strings(gb.elements()),
                "counters": gb.counters(),
            }));
            Ok(true)
        }
        Command::Member { f, ideal } => {
            let ideal = s.ideal(ideal.as_deref())?;
            let cert = s.engine.ideal_member(&s.poly(&f)?, &ideal)?;
            membership(out, &cert)
        }
        Command::Radmember { f, ideal } => {
            let ideal = s.ideal(ideal.as_deref())?;
            let cert = s.engine.radical_member(&s.poly(&f)?, &ideal)?;
            membership(out, &cert)
        }
        Command::Radequal { first, second } => {
            let a = s.ideal(Some(&first))?;
            let b = s.ideal(Some(&second))?;
            let eq = s.engine.radical_equal(&a, &b)?;
            out.line(format!("radical equality: {}", verdict_name(eq.equal)));
            for c in eq.certificates().filter(|c| !c.holds()) {
                out.line(format!(
                    "  {} is not in the radical of {}",
                    c.query, c.ideal
                ));
            }
            out.value(equality_json(&eq));
            Ok(eq.equal)
        }
        Command::Intersect { first, second } => {
            let a = s.ideal(Some(&first))?;
            let b = s.ideal(Some(&second))?;
            let i = s.engine.intersect(&a, &b)?;
            for g in i.gens() {
                out.line(g.to_string());
            }
            out.value(json!({ "generators": strings(i.gens()) }));
            Ok(true)
        }
        Command::Dim { ideal } => {
            let ideal = s.ideal(ideal.as_deref())?;
            let d = s.engine.dimension(&ideal)?;
            out.line(d.to_string());
            out.value(json!({ "dimension": d, "nvars": ideal.ring().nvars() }));
            Ok(true)
        }
        Command::Sv { partition } => {
            let text = read(&partition)?;
            let variant = s.global.variant.unwrap_or_default();
            let mut p = parse_partition_file(&text, s.global.field, s.global.order, variant)?;
            if let Some(v) = s.global.variant {
                p = p.with_variant(v);
            }
            let c = s.engine.sv_combine(&p, s.global.force)?;
            for g in &c.generators {
                out.line(g.to_string());
            }
            out.line(c.condition.to_string());
            match &c.certificate {
                Some(eq) => out.line(format!("radical equality: {}", verdict_name(eq.equal))),
                None => out.line("not certified (--force)"),
            }
            out.value(json!({
                "generators": strings(&c.generators),
                "condition": {
                    "variant": c.condition.variant,
                    "holds": c.condition.holds,
                    "violations": c.condition.violations.iter().map(|v| json!({
                        "level": v.level,
                        "first": v.first.to_string(),
                        "second": v.second.to_string(),
                    })).collect::<Vec<_>>(),
                },
                "certificate": c.certificate.as_ref().map(equality_json),
            }));
            Ok(c.certificate.as_ref().is_none_or(|eq| eq.equal)
                && (c.condition.holds || s.global.force))
        }
        Command::Matrix { input } => {
            let text = read(&input)?;
            let m = parse_matrix_json(&text, s.ring.as_ref(), s.global.field, s.global.order)?;
            let c = if s.global.force {
                radgen::constructions::MatrixConstruction::build(&m)
            } else {
                s.engine.theorem1_construct(&m)?
            };
            let defect = c.square_identity_defect();
            let laplace = c.laplace_column_sums(&m);
            let identities = defect.is_zero() && laplace.iter().all(Polynomial::is_zero);
            for (k, q) in c.outputs.iter().enumerate() {
                out.line(format!("q{} = {q}", k + 1));
            }
            out.line(format!("p0 = {}", c.p0));
            out.line(format!("identities: {}", verdict_name(identities)));
            match &c.certificate {
                Some(eq) => out.line(format!("radical equality: {}", verdict_name(eq.equal))),
                None => out.line("not certified (--force)"),
            }
            out.value(json!({
                "minors": strings(&c.minors),
                "p0": c.p0.to_string(),
                "outputs": strings(&c.outputs),
                "source": strings(&c.source),
                "identities": identities,
                "certificate": c.certificate.as_ref().map(equality_json),
            }));
            Ok(identities && c.certificate.as_ref().is_none_or(|eq| eq.equal))
        }
        Command::Prop1 {
            a1,
            a2,
            b1,
            b2,
            gammas,
        } => {
            let gammas = gammas
                .iter()
                .map(|g| s.poly(g))
                .collect::<Result<Vec<_>, _>>()?;
            let input = Prop1Input::new(
                s.poly(&a1)?,
                s.poly(&a2)?,
                s.poly(&b1)?,
                s.poly(&b2)?,
                gammas,
            )?;
            let c = s.engine.prop1_construct(&input)?;
            for g in &c.generators {
                out.line(g.to_string());
            }
            out.line(format!(
                "radical equality: {}",
                verdict_name(c.certificate.equal)
            ));
            out.value(json!({
                "generators": strings(&c.generators),
                "target": strings(c.target.gens()),
                "lifts": c.lifts.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                "beta_membership": records(&c.beta_membership),
                "certificate": equality_json(&c.certificate),
            }));
            Ok(c.certified())
        }
        Command::Paper { case, all, max_n } => {
            let ids = if all {
                CaseId::all(max_n)
            } else {
                vec![case.expect("clap enforces --case or --all").parse()?]
            };
            let opts = CertifyOptions {
                field: s.global.field.unwrap_or(Field::Rational),
                order: s.global.order,
                engine: s.engine,
                golden_dir: s.global.golden_dir.clone(),
            };
            let mut certs = Vec::new();
            for r in certify_cases(&ids, &opts) {
                certs.push(r?.certificate);
            }
            let ok = certs.iter().all(|c| c.holds());
            for c in &certs {
                out.line(format!(
                    "{}: {}",
                    c.case_id,
                    if c.holds() { "certified" } else { "FAILED" }
                ));
                for g in &c.generators {
                    out.line(format!("  {g}"));
                }
                let v = &c.verdicts;
                let opt = |o: Option<bool>| o.map_or("n/a", verdict_name);
                out.line(format!(
                    "  radical_equality={} decomposition={} dimension={} golden={} hypothesis={}",
                    verdict_name(v.radical_equality),
                    opt(v.decomposition),
                    opt(v.dimension),
                    opt(v.golden),
                    verdict_name(v.hypothesis),
                ));
                out.line(format!(
                    "  claimed lower bound {} ({})",
                    c.claimed_lower_bound.value, c.claimed_lower_bound.provenance
                ));
                for n in &c.notes {
                    out.line(format!("  note: {}", n.replace('\n', "; ")));
                }
            }
            if all {
                out.value(serde_json::to_value(&certs).expect("json"));
            } else {
                out.value(serde_json::to_value(&certs[0]).expect("json"));
            }
            Ok(ok)
        }
    }
}

fn membership(out: &mut Out, cert: &MembershipCertificate) -> Outcome {
    let verdict = serde_json::to_value(cert.verdict).expect("json");
    out.line(verdict.as_str().unwrap_or_default());
    let mut v = serde_json::to_value(cert.record()).expect("json");
    v["counters"] = serde_json::to_value(cert.counters).expect("json");
    out.value(v);
    Ok(cert.holds())
}

fn one_line(msg: &str) -> String {
    msg.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join("; ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                let _ = e.print();
                return if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                    ExitCode::from(2)
                } else {
                    ExitCode::SUCCESS
                };
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("usage error");
            eprintln!("{}", first.trim());
            return ExitCode::from(2);
        }
    };
    let mut out = Out {
        json: cli.global.json,
        buf: String::new(),
    };
    let result = run(cli, &mut out);
    let _ = std::io::stdout().write_all(out.buf.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(m)) => {
            eprintln!("error: {}", one_line(&m));
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", one_line(&m));
            ExitCode::from(2)
        }
        Err(Failure::Resource(m)) => {
            eprintln!("error: {}", one_line(&m));
            ExitCode::from(3)
        }
    }
}
