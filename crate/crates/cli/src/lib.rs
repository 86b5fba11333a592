//! Command-line front end: argument parsing, file loading and report
//! formatting. [`run`] is the whole program minus process I/O.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pi_atlas::cayley::{ch_check, TracedModel};
use pi_atlas::central::{
    central_poly, classify_stratum, formanek, hall, irreducible_via, strata, CentralPolynomial,
    CentralVerdict, StratumReport,
};
use pi_atlas::fingerprint::{
    blowup, default_bound, fingerprints_equal, psi, theta, DEFAULT_BOUND_CAP,
};
use pi_atlas::oracle::{burnside_irreducible, isomorphic, semisimplification_equal};
use pi_atlas::presentations::pi_multiple;
use pi_atlas::{sampling, Error, Field, Matrix, Presentation, Representation, Scalar, Word};

pub mod corpus;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "pi-atlas",
    version,
    about = "Trace coordinates, central polynomials and Cayley–Hamilton checks for representations of presented algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical fingerprint of a representation.
    Fingerprint(FingerprintArgs),
    /// Compare two representations by fingerprint and by the oracle.
    Equiv(EquivArgs),
    /// Central-polynomial irreducibility test, checked against the oracle.
    Irred(IrredArgs),
    /// Describe, emit or spot-check a central polynomial.
    CentralPoly(CentralArgs),
    /// Check the n-th Cayley–Hamilton trace identity on sampled elements.
    ChCheck(ChArgs),
    /// Stratum classification of representations.
    Strata(StrataArgs),
    /// Injectivity and strata report for a sample of a built-in corpus.
    Atlas(AtlasArgs),
    /// Check a representation against a presentation's relations.
    Validate(ValidateArgs),
}

#[derive(Args, Debug)]
struct FieldArg {
    /// Work over F_p instead of the rationals.
    #[arg(long)]
    modulus: Option<u64>,
}

#[derive(Args, Debug)]
struct FingerprintArgs {
    /// Presentation file or built-in corpus name.
    #[arg(short = 'p', long = "presentation")]
    presentation: String,
    /// Representation file (JSON).
    #[arg(short = 'r', long = "rep")]
    rep: String,
    /// Blow up to this ambient dimension first.
    #[arg(long = "N")]
    big_n: Option<usize>,
    /// Word length bound L.
    #[arg(long)]
    bound: Option<usize>,
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Args, Debug)]
struct EquivArgs {
    #[arg(short = 'p', long = "presentation")]
    presentation: String,
    /// Exactly two representation files.
    #[arg(short = 'r', long = "rep", num_args = 1, required = true)]
    reps: Vec<String>,
    #[arg(long)]
    bound: Option<usize>,
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Args, Debug)]
struct IrredArgs {
    #[arg(short = 'p', long = "presentation")]
    presentation: String,
    #[arg(short = 'r', long = "rep")]
    rep: String,
    /// Maximum word length per central-polynomial argument.
    #[arg(long = "search-bound", default_value_t = 2)]
    search_bound: usize,
    #[arg(long, value_enum)]
    construction: Option<ConstructionArg>,
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructionArg {
    Hall,
    Formanek,
}

#[derive(Args, Debug)]
struct CentralArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum)]
    construction: Option<ConstructionArg>,
    /// Print the polynomial and nothing else.
    #[arg(long)]
    emit: bool,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Full,
    Zero,
}

#[derive(Args, Debug)]
struct ChArgs {
    /// Matrix size of the model.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trace scale c: tr(r) = c · trace(r).
    #[arg(long, default_value_t = 1)]
    scale: u64,
    /// Embed into this many diagonal copies.
    #[arg(long, default_value_t = 1)]
    block: usize,
    /// Degree of the identity to check; defaults to n · block · scale.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModelArg::Full)]
    model: ModelArg,
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Args, Debug)]
struct StrataArgs {
    #[arg(short = 'p', long = "presentation")]
    presentation: String,
    #[arg(short = 'r', long = "rep", required = true)]
    reps: Vec<String>,
    /// Ambient dimension; defaults to lcm(1..d).
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long = "search-bound", default_value_t = 2)]
    search_bound: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Args, Debug)]
struct AtlasArgs {
    /// Built-in corpus: qplane, free2 or commutative.
    #[arg(long, default_value = "qplane")]
    corpus: String,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long = "search-bound", default_value_t = 2)]
    search_bound: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    field: FieldArg,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(short = 'p', long = "presentation")]
    presentation: String,
    #[arg(short = 'r', long = "rep")]
    rep: String,
    #[command(flatten)]
    field: FieldArg,
}

/// Exit code plus everything the program writes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Run = Result<(i32, String), Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match cli.command {
        Command::Fingerprint(a) => fingerprint_cmd(a),
        Command::Equiv(a) => equiv_cmd(a),
        Command::Irred(a) => irred_cmd(a),
        Command::CentralPoly(a) => central_cmd(a),
        Command::ChCheck(a) => ch_cmd(a),
        Command::Strata(a) => strata_cmd(a),
        Command::Atlas(a) => atlas_cmd(a),
        Command::Validate(a) => validate_cmd(a),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn field_of(arg: &FieldArg) -> Result<Option<Field>, Failure> {
    arg.modulus
        .map(Field::prime)
        .transpose()
        .map_err(Failure::from)
}

fn load_presentation(source: &str) -> Result<Presentation, Failure> {
    let path = Path::new(source);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {source}: {e}")))?;
        return Presentation::parse(&text).map_err(|e| Failure::usage(format!("{source}: {e}")));
    }
    corpus::lookup(source)
        .map(|e| e.presentation())
        .ok_or_else(|| {
            Failure::usage(format!(
                "no presentation file or built-in corpus named {source}"
            ))
        })
}

fn load_rep(path: &str, field: Option<Field>) -> Result<Representation, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
    let rep =
        Representation::from_json(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    match field {
        Some(f) if f != rep.field() => rep
            .to_field(f)
            .map_err(|e| Failure::usage(format!("{path}: {e}"))),
        _ => Ok(rep),
    }
}

/// Relation violations and out-of-range dimensions are validation failures.
fn check_valid(pres: &Presentation, rep: &Representation, label: &str) -> Result<(), Failure> {
    let v = pres
        .validate(rep)
        .map_err(|e| Failure::invalid(format!("{label}: {e}")))?;
    if let Some(first) = v.violations.first() {
        return Err(Failure::invalid(format!(
            "{label}: relation {} ({}) does not vanish: {}",
            first.index + 1,
            pres.render_poly(&pres.relations()[first.index]),
            render_matrix(&first.value)
        )));
    }
    Ok(())
}

fn load_checked(
    pres: &Presentation,
    path: &str,
    field: Option<Field>,
) -> Result<Representation, Failure> {
    let rep = load_rep(path, field)?;
    check_valid(pres, &rep, path)?;
    Ok(rep)
}

fn render_matrix(m: &Matrix<Scalar>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let r: Vec<String> = m.row(i).iter().map(Scalar::value_string).collect();
            format!("[{}]", r.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn render_word(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.render(names)
    }
}

fn fingerprint_cmd(a: FingerprintArgs) -> Run {
    let field = field_of(&a.field)?;
    let pres = load_presentation(&a.presentation)?;
    let rep = load_checked(&pres, &a.rep, field)?;
    let target = match a.big_n {
        Some(n) => blowup(&rep, n)?,
        None => rep,
    };
    let bound = a
        .bound
        .unwrap_or_else(|| default_bound(target.dim(), DEFAULT_BOUND_CAP));
    Ok((EXIT_OK, theta(&target, bound)?.to_string()))
}

fn equiv_cmd(a: EquivArgs) -> Run {
    if a.reps.len() != 2 {
        return Err(Failure::usage("equiv takes exactly two -r files"));
    }
    let field = field_of(&a.field)?;
    let pres = load_presentation(&a.presentation)?;
    let ra = load_checked(&pres, &a.reps[0], field)?;
    let rb = load_checked(&pres, &a.reps[1], field)?;
    if ra.field() != rb.field() {
        return Err(Failure::usage(format!(
            "representations over different fields ({} and {}); use --modulus",
            ra.field(),
            rb.field()
        )));
    }
    let (equal, verdict) = if ra.dim() != rb.dim() {
        (
            false,
            format!("different: dimensions {} and {}", ra.dim(), rb.dim()),
        )
    } else {
        let bound = a
            .bound
            .unwrap_or_else(|| default_bound(ra.dim(), DEFAULT_BOUND_CAP));
        let (fa, fb) = (theta(&ra, bound)?, theta(&rb, bound)?);
        match fa.first_difference(&fb)? {
            None => (true, "equal".to_string()),
            Some((w, i)) => (
                false,
                format!(
                    "different at {} coefficient {i}",
                    render_word(&w, pres.names())
                ),
            ),
        }
    };
    let (oracle, agrees) = match semisimplification_equal(&ra, &rb) {
        Ok(true) => ("semisimplifications isomorphic".to_string(), equal),
        Ok(false) => ("semisimplifications differ".to_string(), !equal),
        Err(Error::GaveUp(m)) => (format!("gave up ({m})"), true),
        Err(e) => return Err(e.into()),
    };
    let mut out = format!("{verdict}; oracle: {oracle}\n");
    let code = if !agrees {
        out.push_str("counterexample: fingerprint and oracle disagree\n");
        EXIT_COUNTEREXAMPLE
    } else if equal {
        EXIT_OK
    } else {
        EXIT_INVALID
    };
    Ok((code, out))
}

fn chosen_poly(m: usize, c: Option<ConstructionArg>) -> Result<CentralPolynomial, Failure> {
    match c {
        None => Ok(central_poly(m)),
        Some(ConstructionArg::Hall) if m == 2 => Ok(hall()),
        Some(ConstructionArg::Hall) => Err(Failure::usage(
            "the Hall polynomial is central for m = 2 only",
        )),
        Some(ConstructionArg::Formanek) => Ok(formanek(m)),
    }
}

fn irred_cmd(a: IrredArgs) -> Run {
    let field = field_of(&a.field)?;
    let pres = load_presentation(&a.presentation)?;
    let rep = load_checked(&pres, &a.rep, field)?;
    let poly = chosen_poly(rep.dim(), a.construction)?;
    let absolutely = burnside_irreducible(&rep);
    let oracle = if absolutely {
        "absolutely irreducible"
    } else {
        "not absolutely irreducible"
    };
    let (code, mut out) = match irreducible_via(&rep, &poly, a.search_bound)? {
        CentralVerdict::Irreducible(w) => {
            let args: Vec<String> = w
                .args
                .iter()
                .map(|v| render_word(v, pres.names()))
                .collect();
            (
                if absolutely {
                    EXIT_OK
                } else {
                    EXIT_COUNTEREXAMPLE
                },
                format!(
                    "irreducible; witness ({}) value {}; oracle: {oracle}\n",
                    args.join(", "),
                    w.value.value_string()
                ),
            )
        }
        CentralVerdict::NoWitnessFound => (
            EXIT_INVALID,
            format!(
                "no witness found at search bound {}; oracle: {oracle}\n",
                a.search_bound
            ),
        ),
    };
    if code == EXIT_COUNTEREXAMPLE {
        out.push_str("counterexample: central witness on a reducible representation\n");
    }
    Ok((code, out))
}

fn central_cmd(a: CentralArgs) -> Run {
    if a.m == 0 {
        return Err(Failure::usage("--m must be at least 1"));
    }
    let poly = chosen_poly(a.m, a.construction)?;
    if a.emit {
        return Ok((EXIT_OK, format!("{}\n", poly.render())));
    }
    let field = field_of(&a.field)?.unwrap_or(Field::Rational);
    let mut out = format!(
        "m={} construction={} arity={} degree={} terms={}\n",
        poly.m(),
        poly.construction(),
        poly.arity(),
        poly.body().degree(),
        poly.body().terms().len()
    );
    let mut rng = sampling::rng(a.seed);
    let (mut scalar, mut nonzero) = (0, 0);
    let mut bad = None;
    for k in 0..a.samples {
        let args: Vec<Matrix<Scalar>> = (0..poly.arity())
            .map(|_| sampling::matrix(a.m, field, sampling::DEFAULT_BOX, &mut rng))
            .collect();
        let v = poly.evaluate(&args)?;
        match v.scalar_value() {
            Some(c) => {
                scalar += 1;
                if !pi_atlas::Ring::is_zero(&c) {
                    nonzero += 1;
                }
            }
            None if bad.is_none() => bad = Some((k + 1, v)),
            None => {}
        }
    }
    writeln!(
        out,
        "scalar on {scalar}/{} samples over {field}; nonzero on {nonzero}",
        a.samples
    )
    .unwrap();
    let code = match bad {
        Some((k, v)) => {
            writeln!(
                out,
                "counterexample: sample {k} value {}",
                render_matrix(&v)
            )
            .unwrap();
            EXIT_COUNTEREXAMPLE
        }
        None if nonzero == 0 && a.samples > 0 => {
            writeln!(out, "counterexample: every sampled value is zero").unwrap();
            EXIT_COUNTEREXAMPLE
        }
        None => EXIT_OK,
    };
    Ok((code, out))
}

fn ch_cmd(a: ChArgs) -> Run {
    if a.n == 0 || a.block == 0 || a.scale == 0 {
        return Err(Failure::usage("--n, --block and --scale must be positive"));
    }
    let field = field_of(&a.field)?.unwrap_or(Field::Rational);
    let base = match a.model {
        ModelArg::Full => TracedModel::full(a.n, field),
        ModelArg::Zero => TracedModel::zero(a.n, field),
    };
    let model = base.with_scale(a.scale).block_embed(a.block);
    let degree = a.degree.unwrap_or(a.n * a.block * a.scale as usize);
    let report = ch_check(&model, degree, a.samples, a.seed)?;
    Ok(match report.counterexample {
        None => (
            EXIT_OK,
            format!(
                "CH_{degree} holds on {}/{} samples\n",
                report.checked, a.samples
            ),
        ),
        Some(r) => (
            EXIT_COUNTEREXAMPLE,
            format!(
                "CH_{degree} fails at sample {}/{}: r = {}\n",
                report.checked,
                a.samples,
                render_matrix(&r)
            ),
        ),
    })
}

fn render_witness(r: &StratumReport) -> String {
    r.km_witness
        .as_ref()
        .map_or_else(|| "-".to_string(), Scalar::value_string)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn strata_line(out: &mut String, format: Format, id: &str, dim: usize, reports: &[StratumReport]) {
    match format {
        Format::Tsv => {
            for r in reports {
                writeln!(
                    out,
                    "{id}\t{dim}\t{}\t{}\t{}\t{}",
                    r.m,
                    yes_no(r.jm_ok),
                    render_witness(r),
                    yes_no(r.member())
                )
                .unwrap();
            }
        }
        Format::Text => {
            let cells: Vec<String> = reports
                .iter()
                .map(|r| format!("m={} J={} K={}", r.m, yes_no(r.jm_ok), render_witness(r)))
                .collect();
            let s: Vec<String> = strata(reports).iter().map(usize::to_string).collect();
            let s = if s.is_empty() {
                "none".to_string()
            } else {
                s.join(",")
            };
            writeln!(out, "{id} dim={dim} stratum={s} | {}", cells.join(" | ")).unwrap();
        }
    }
}

const TSV_HEADER: &str = "rep\tdim\tm\tjm_ok\tkm_witness\tmember\n";

fn strata_cmd(a: StrataArgs) -> Run {
    let field = field_of(&a.field)?;
    let pres = load_presentation(&a.presentation)?;
    let reps: Vec<Representation> = a
        .reps
        .iter()
        .map(|p| load_checked(&pres, p, field))
        .collect::<Result<_, _>>()?;
    let d = pres
        .bound()
        .unwrap_or_else(|| reps.iter().map(Representation::dim).max().unwrap_or(1));
    let n = a.big_n.unwrap_or_else(|| pi_multiple(d));
    let bound = a
        .bound
        .unwrap_or_else(|| default_bound(n, DEFAULT_BOUND_CAP));
    let mut out = String::new();
    if a.format == Format::Tsv {
        out.push_str(TSV_HEADER);
    }
    for (path, rep) in a.reps.iter().zip(&reps) {
        let reports = classify_stratum(rep, n, bound, a.search_bound, d)?;
        strata_line(&mut out, a.format, path, rep.dim(), &reports);
    }
    Ok((EXIT_OK, out))
}

fn atlas_cmd(a: AtlasArgs) -> Run {
    let entry = corpus::lookup(&a.corpus)
        .ok_or_else(|| Failure::usage(format!("unknown corpus {}", a.corpus)))?;
    let field = field_of(&a.field)?.unwrap_or(Field::Rational);
    let d = entry.d();
    let n = a.big_n.unwrap_or_else(|| entry.n());
    let bound = a
        .bound
        .unwrap_or_else(|| default_bound(n, DEFAULT_BOUND_CAP));
    let reps = entry.sample(a.count, a.seed, field);
    let report = atlas(&reps, n, bound, a.search_bound, d)?;

    let mut out = String::new();
    if a.format == Format::Text {
        writeln!(
            out,
            "corpus {} over {field}: count={} seed={} d={d} N={n} L={bound}",
            entry.name, a.count, a.seed
        )
        .unwrap();
    } else {
        out.push_str(TSV_HEADER);
    }
    for (k, (rep, reports)) in reps.iter().zip(&report.strata).enumerate() {
        let id = format!("r{}", k + 1);
        strata_line(&mut out, a.format, &id, rep.dim(), reports);
    }
    if a.format == Format::Text {
        for (k, rep) in reps.iter().enumerate() {
            let images: Vec<String> = rep.images().iter().map(render_matrix).collect();
            writeln!(out, "r{}: {}", k + 1, images.join(" ")).unwrap();
        }
        for (i, j) in &report.isomorphic {
            writeln!(out, "isomorphic: r{} r{}", i + 1, j + 1).unwrap();
        }
        for v in &report.violations {
            writeln!(out, "violation: r{} r{}: {}", v.0 + 1, v.1 + 1, v.2).unwrap();
        }
        let mut counts = std::collections::BTreeMap::new();
        for reports in &report.strata {
            let s = strata(reports);
            let key = if s.len() == 1 {
                format!("m={}", s[0])
            } else {
                format!("strata={s:?}")
            };
            *counts.entry(key).or_insert(0) += 1;
        }
        let counts: Vec<String> = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        writeln!(out, "strata: {}", counts.join(", ")).unwrap();
        writeln!(
            out,
            "injectivity: {} pairs, {} isomorphic, {} violations",
            reps.len() * reps.len().saturating_sub(1) / 2,
            report.isomorphic.len(),
            report.violations.len()
        )
        .unwrap();
    }
    let code = if report.violations.is_empty() && report.misclassified == 0 {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    Ok((code, out))
}

/// Outcome of [`atlas`].
#[derive(Clone, Debug, Default)]
pub struct AtlasReport {
    pub strata: Vec<Vec<StratumReport>>,
    /// Index pairs found isomorphic by the oracle.
    pub isomorphic: Vec<(usize, usize)>,
    /// Pairs whose Ψ points disagree with the oracle, with a reason.
    pub violations: Vec<(usize, usize, String)>,
    /// Representations not classified into exactly the stratum of their dimension.
    pub misclassified: usize,
}

/// Ψ points, strata and pairwise injectivity for a list of absolutely
/// irreducible representations.
pub fn atlas(
    reps: &[Representation],
    n: usize,
    bound: usize,
    search_bound: usize,
    d: usize,
) -> pi_atlas::Result<AtlasReport> {
    let mut report = AtlasReport::default();
    let mut points = Vec::with_capacity(reps.len());
    for rep in reps {
        points.push(psi(rep, n, bound)?);
        let reports = classify_stratum(rep, n, bound, search_bound, d)?;
        if strata(&reports) != [rep.dim()] {
            report.misclassified += 1;
        }
        report.strata.push(reports);
    }
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let iso = reps[i].dim() == reps[j].dim() && isomorphic(&reps[i], &reps[j])?;
            let same = fingerprints_equal(&points[i], &points[j])?;
            if iso {
                report.isomorphic.push((i, j));
                if !same {
                    report
                        .violations
                        .push((i, j, "isomorphic but fingerprints differ".into()));
                }
            } else if same {
                report
                    .violations
                    .push((i, j, "non-isomorphic with equal fingerprints".into()));
            }
        }
    }
    Ok(report)
}

fn validate_cmd(a: ValidateArgs) -> Run {
    let field = field_of(&a.field)?;
    let pres = load_presentation(&a.presentation)?;
    let rep = load_rep(&a.rep, field)?;
    let v = pres
        .validate(&rep)
        .map_err(|e| Failure::invalid(format!("{}: {e}", a.rep)))?;
    if v.is_ok() {
        return Ok((
            EXIT_OK,
            format!(
                "valid: dimension {} over {}, {} relation(s)\n",
                rep.dim(),
                rep.field(),
                pres.relations().len()
            ),
        ));
    }
    let mut out = String::new();
    for viol in &v.violations {
        writeln!(
            out,
            "relation {} ({}) fails: {}",
            viol.index + 1,
            pres.render_poly(&pres.relations()[viol.index]),
            render_matrix(&viol.value)
        )
        .unwrap();
    }
    Ok((EXIT_INVALID, out))
}
