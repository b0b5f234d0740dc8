//! The `braidscope` command line. Every subcommand produces a JSON payload
//! (or raw text for `render` and `--csv`), an exit status and diagnostics.
//!
//! Exit statuses: 0 success, 2 usage or malformed input, 3 a ball or
//! budget limit was hit, 4 an internal invariant failed.

use std::collections::HashSet;
use std::io::{self, BufRead};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::census::{
    self, class_growth, conjecture_scan, element_growth, fit_recurrence, geodesic_growth,
    trace_growth, CensusError, GrowthSeries, ScanId, ScanOptions, WordClass,
};
use crate::conway::{self, ConwayError, Ordering};
use crate::garside::{CanonicalForm, GarsideError};
use crate::generator::{self, GeneratorError, GeneratorSpec};
use crate::geodesy::{BallTable, GeodesyError, LengthBound, DEFAULT_BUDGET};
use crate::render::render_ascii;
use crate::winding::{
    k_regular_certificate, verify_winding, Evidence, WindingCertificate, WindingError,
};
use crate::word::{BraidWord, SignPattern, WordError};

/// Environment variable naming the ball cache directory.
pub const BALL_CACHE_ENV: &str = "BRAID_BALL_CACHE";

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: i32,
    pub payload: Value,
    /// Raw output replacing the JSON payload on stdout.
    pub text: Option<String>,
    pub diagnostics: String,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult { status: 0, payload, text: None, diagnostics: String::new() }
    }

    fn text(text: String) -> Self {
        CommandResult { status: 0, payload: Value::Null, text: Some(text), diagnostics: String::new() }
    }

    /// What the binary writes to stdout.
    pub fn stdout(&self) -> String {
        match &self.text {
            Some(t) => t.clone(),
            None => format!("{}\n", self.payload),
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Limit(String),
    Invariant(String),
}

impl CliError {
    fn status(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Limit(m) | CliError::Invariant(m) => m,
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GarsideError> for CliError {
    fn from(e: GarsideError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GeodesyError> for CliError {
    fn from(e: GeodesyError) -> Self {
        match e {
            GeodesyError::OutOfBall { .. } | GeodesyError::BudgetExceeded { .. } => {
                CliError::Limit(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ConwayError> for CliError {
    fn from(e: ConwayError) -> Self {
        match e {
            ConwayError::BudgetExceeded { .. } => CliError::Limit(e.to_string()),
            ConwayError::Geodesy(g) => g.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<WindingError> for CliError {
    fn from(e: WindingError) -> Self {
        match e {
            WindingError::Geodesy(g) => g.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::CertificateFailed(_) => CliError::Invariant(e.to_string()),
            GeneratorError::Winding(w) => w.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::InsufficientBall { .. } => CliError::Limit(e.to_string()),
            CensusError::Disagreement(_) => CliError::Invariant(e.to_string()),
            CensusError::Geodesy(g) => g.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "braidscope", version, about = "Word problem, geodesics and growth in braid groups")]
struct Cli {
    /// Worker threads for parallel work (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for cached ball tables (default: $BRAID_BALL_CACHE)
    #[arg(long, global = true)]
    ball_cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Number of strands
    #[arg(short = 'n', long = "strands")]
    strands: usize,
    /// Braid word (letters `aB…` or signed indices `1 -2 …`); one per line
    /// on stdin when omitted
    #[arg(allow_hyphen_values = true)]
    word: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Word classes: positive, homogeneous, alternating, …
    Classify(WordArgs),
    /// Letter counts and exponent sum
    Stats(WordArgs),
    /// Whether two words represent the same braid
    Equal {
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Left-greedy normal form
    Nf(WordArgs),
    /// Crossing number and whether the word attains it
    Geodesic {
        #[command(flatten)]
        word: WordArgs,
        /// Ball radius (default: half the freely reduced length, rounded up)
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Letters ending geodesic representatives
    Rset {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Conway polynomial by state sum
    Conway {
        #[command(flatten)]
        word: WordArgs,
        /// Input labels by top position, comma separated
        #[arg(long, requires = "bottom")]
        top: Option<String>,
        /// Output labels by bottom position, comma separated
        #[arg(long, requires = "top")]
        bottom: Option<String>,
        /// Use a homogeneous ordering instead of the standard one
        #[arg(long, conflicts_with = "top")]
        homogeneous: bool,
    },
    /// Homogeneous orderings of a diagram
    Order {
        #[command(flatten)]
        word: WordArgs,
        /// List orderings instead of returning one
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Minimality certificate for homogeneous words
    Certify(WordArgs),
    /// k-regular winding check, or verification of a certificate file
    Winding {
        #[arg(short = 'n', long = "strands")]
        strands: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        /// JSON certificate to verify
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Ball radius for oracle evidence (default: the word length)
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Geodesic words that are neither homogeneous nor alternating
    Generate {
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        #[arg(short = 'k', default_value_t = 1)]
        k: usize,
        /// Shadow lengths x_1,…,x_{k+1}
        #[arg(long)]
        x: String,
        #[arg(long)]
        seed: Option<u64>,
        /// Explicit shadow columns, shadows separated by `;`
        #[arg(long)]
        shadows: Option<String>,
        /// Also report the lower bound on distinct outputs of this length
        #[arg(long)]
        bound_length: Option<usize>,
    },
    /// Growth series
    Census {
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        /// Largest length
        #[arg(short = 'L', long = "length")]
        length: usize,
        /// Comma-separated: elements, geodesics, positive, alternating,
        /// homogeneous, trace
        #[arg(long, default_value = "elements,geodesics")]
        series: String,
        #[arg(long)]
        csv: bool,
        /// Fit recurrences up to this degree
        #[arg(long)]
        fit: Option<usize>,
    },
    /// Bounded conjecture scan
    Scan {
        /// smbc1, smbc2, smbc3, hbgr, blocks, rset-witness or dead-end
        id: String,
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        #[arg(short = 'L', long = "length")]
        length: usize,
        /// Full sign pattern for hbgr, e.g. 1,-1,1
        #[arg(long, allow_hyphen_values = true)]
        pattern: Option<String>,
        #[arg(long, default_value_t = 2)]
        conj_bound: usize,
        /// Resumable progress file
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// ASCII diagram
    Render(WordArgs),
    /// Build (and cache) a ball table
    Ball {
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

struct Context {
    cache: Option<PathBuf>,
    /// Non-empty stdin lines, read up front for batch commands.
    input: Vec<String>,
    ball: Option<BallTable>,
}

impl Command {
    fn word_args(&self) -> Option<&WordArgs> {
        match self {
            Command::Classify(a) | Command::Stats(a) | Command::Nf(a) | Command::Certify(a) | Command::Render(a) => Some(a),
            Command::Geodesic { word, .. } | Command::Rset { word, .. } | Command::Conway { word, .. } | Command::Order { word, .. } => {
                Some(word)
            }
            _ => None,
        }
    }
}

impl Context {
    /// A ball for `strands` of at least `radius`, reusing the last one.
    fn ball(&mut self, strands: usize, radius: usize) -> Result<&BallTable, CliError> {
        let reuse = self.ball.as_ref().is_some_and(|b| b.strands() == strands && b.radius() >= radius);
        if !reuse {
            self.ball = Some(BallTable::load_or_build(strands, radius, self.cache.as_deref())?);
        }
        Ok(self.ball.as_ref().expect("just set"))
    }

    fn words(&mut self, args: &WordArgs) -> Result<Vec<BraidWord>, CliError> {
        match &args.word {
            Some(w) => Ok(vec![BraidWord::parse(w, args.strands)?]),
            None => Ok(self
                .input
                .iter()
                .map(|line| BraidWord::parse(line, args.strands))
                .collect::<Result<_, _>>()?),
        }
    }
}

/// Runs a single word command, or the batch of stdin words when no word is
/// given on the command line.
fn per_word<F>(ctx: &mut Context, args: &WordArgs, mut f: F) -> Result<Value, CliError>
where
    F: FnMut(&mut Context, &BraidWord) -> Result<Value, CliError>,
{
    let batch = args.word.is_none();
    let words = ctx.words(args)?;
    let mut out = Vec::with_capacity(words.len());
    for w in &words {
        out.push(f(ctx, w)?);
    }
    Ok(if batch { Value::Array(out) } else { out.pop().expect("one word") })
}

fn parse_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Usage(format!("bad list entry `{s}`"))))
        .collect()
}

fn classify_payload(w: &BraidWord) -> Value {
    let c = w.classify();
    json!({
        "positive": c.positive,
        "negative": c.negative,
        "homogeneous": c.homogeneous.map(|p| p.to_string()),
        "alternating": c.alternating,
        "reduced": c.reduced,
        "degenerate": c.degenerate,
        "pure": w.is_pure(),
    })
}

fn nf_payload(w: &BraidWord) -> Result<Value, CliError> {
    let f = CanonicalForm::from_word(w)?;
    let factors: Vec<Vec<usize>> = f.factors().iter().map(|s| s.permutation().images()).collect();
    Ok(json!({
        "strands": f.strands(),
        "delta_power": f.delta_power(),
        "factors": factors,
        "normal_form": f.to_word().render(),
    }))
}

fn geodesic_payload(ctx: &mut Context, w: &BraidWord, radius: Option<usize>) -> Result<Value, CliError> {
    let reduced = w.free_reduce().len();
    let r = radius.unwrap_or(reduced.div_ceil(2));
    let ball = ctx.ball(w.strands(), r)?;
    let form = CanonicalForm::from_word(w)?;
    match ball.length_extended(&form) {
        LengthBound::Exact(l) => Ok(json!({ "geodesic": l as usize == w.len(), "length": l })),
        LengthBound::Greater(_) if w.len() <= 2 * ball.radius() => {
            Err(CliError::Invariant("braid longer than a word representing it".into()))
        }
        LengthBound::Greater(_) => Err(GeodesyError::OutOfBall { radius: 2 * ball.radius() }.into()),
    }
}

fn rset_payload(ctx: &mut Context, w: &BraidWord, radius: Option<usize>) -> Result<Value, CliError> {
    let r = radius.unwrap_or(w.free_reduce().len());
    let ball = ctx.ball(w.strands(), r)?;
    let rset = ball.r_set(w)?;
    Ok(json!({
        "rset": rset.render(),
        "length": ball.length(w)?,
        "dead_end": rset.len() == 2 * (w.strands() - 1),
    }))
}

fn conway_payload(
    w: &BraidWord,
    top: &Option<String>,
    bottom: &Option<String>,
    homogeneous: bool,
) -> Result<Value, CliError> {
    let ordering = match (top, bottom) {
        (Some(t), Some(b)) => Ordering::new(parse_list(t)?, parse_list(b)?)?,
        _ if homogeneous => conway::find_homogeneous_ordering(w)
            .ok_or_else(|| CliError::Usage("word is not homogeneous".into()))?,
        _ => Ordering::standard(w.strands()),
    };
    let p = conway::conway(w, &ordering)?;
    Ok(json!({
        "coefficients": p.to_json(),
        "polynomial": p.to_string(),
        "degree": p.degree(),
        "ordering": ordering.to_json(),
    }))
}

fn certify_payload(w: &BraidWord) -> Result<Value, CliError> {
    match conway::certify_minimal_homogeneous(w) {
        Ok(cert) => {
            let mut v = cert.to_json();
            v["certified"] = json!(true);
            Ok(v)
        }
        Err(ConwayError::NotHomogeneous(column)) => Ok(json!({
            "certified": false,
            "reason": format!("column {column} has both signs; the word may still be geodesic"),
        })),
        Err(e) => Err(e.into()),
    }
}

fn oracle_sizes(cert: &WindingCertificate, out: &mut HashSet<usize>) {
    for (subset, e) in cert.subsets.iter().zip(&cert.evidence) {
        match e {
            Evidence::Oracle => {
                out.insert(subset.len());
            }
            Evidence::Nested(inner) => oracle_sizes(inner, out),
            _ => {}
        }
    }
}

fn winding_payload(
    ctx: &Context,
    strands: Option<usize>,
    word: Option<&str>,
    k: usize,
    certificate: Option<&PathBuf>,
    radius: Option<usize>,
) -> Result<Value, CliError> {
    let cert = match (certificate, strands, word) {
        (Some(path), _, _) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(e.to_string()))?;
            let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            WindingCertificate::from_json(&value)?
        }
        (None, Some(n), Some(w)) => {
            let word = BraidWord::parse(w, n)?;
            if k < 2 || k > n {
                return Err(CliError::Usage(format!("k must be between 2 and {n}")));
            }
            let mut cert = k_regular_certificate(&word, k);
            if k > 3 {
                cert.evidence = vec![Evidence::Oracle; cert.subsets.len()];
            }
            cert
        }
        _ => return Err(CliError::Usage("give a word with -n, or --certificate".into())),
    };
    let mut sizes = HashSet::new();
    oracle_sizes(&cert, &mut sizes);
    let r = radius.unwrap_or(cert.word.len());
    let mut balls = Vec::new();
    let mut sizes: Vec<usize> = sizes.into_iter().collect();
    sizes.sort_unstable();
    for s in sizes {
        balls.push(BallTable::load_or_build(s, r, ctx.cache.as_deref())?);
    }
    let refs: Vec<&BallTable> = balls.iter().collect();
    let report = verify_winding(&cert, &refs)?;
    Ok(json!({
        "valid": report.valid,
        "first_failing_subset": report.first_failing_subset,
        "subdiagram_lengths": report.subdiagram_lengths,
        "total": report.total,
        "certificate": cert.to_json(),
    }))
}

fn generate_payload(
    strands: usize,
    k: usize,
    x: &str,
    seed: Option<u64>,
    shadows: Option<&str>,
    bound_length: Option<usize>,
) -> Result<Value, CliError> {
    let shadows = match shadows {
        Some(s) => s.split(';').map(parse_list).collect::<Result<Vec<Vec<usize>>, _>>()?,
        None => Vec::new(),
    };
    let spec = GeneratorSpec { strands, k, x: parse_list(x)?, shadows, seed };
    let out = generator::construct(&spec)?;
    let mut v = json!({
        "word": out.word.render(),
        "strands": strands,
        "length": out.word.len(),
        "shadows": out.shadows,
        "routing_lengths": out.routing_lengths,
        "certificate": out.certificate.to_json(),
    });
    if let Some(m) = bound_length {
        v["lower_bound_count"] = json!(generator::lower_bound_count(strands, k, m).to_string());
        v["threshold"] = json!(generator::threshold(strands, k));
    }
    Ok(v)
}

fn census_result(
    ctx: &mut Context,
    strands: usize,
    length: usize,
    series: &str,
    csv: bool,
    fit: Option<usize>,
) -> Result<CommandResult, CliError> {
    let mut out: Vec<GrowthSeries> = Vec::new();
    for name in series.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let s = match name {
            "elements" => element_growth(strands, length, ctx.ball(strands, length)?)?,
            "geodesics" => geodesic_growth(strands, length, ctx.ball(strands, length)?)?,
            "positive" => class_growth(strands, length, WordClass::Positive),
            "alternating" => class_growth(strands, length, WordClass::Alternating),
            "homogeneous" => class_growth(strands, length, WordClass::Homogeneous),
            "trace" => trace_growth(strands, length)?.0,
            other => return Err(CliError::Usage(format!("unknown series `{other}`"))),
        };
        out.push(s);
    }
    if csv {
        return Ok(CommandResult::text(census::to_csv(&out)));
    }
    let mut payload = json!({ "strands": strands, "length": length, "series": out });
    if let Some(d) = fit {
        let mut fits = serde_json::Map::new();
        for s in &out {
            let fitted = fit_recurrence(&s.counts, d)?;
            fits.insert(
                s.kind.name().to_string(),
                fitted.map_or(Value::Null, |r| json!({ "coefficients": r.coefficients, "valid_from": r.valid_from, "text": r.to_string() })),
            );
        }
        payload["recurrences"] = Value::Object(fits);
    }
    Ok(CommandResult::ok(payload))
}

#[allow(clippy::too_many_arguments)]
fn scan_payload(
    ctx: &mut Context,
    id: &str,
    strands: usize,
    length: usize,
    pattern: Option<&str>,
    conj_bound: usize,
    checkpoint: Option<PathBuf>,
    radius: Option<usize>,
) -> Result<Value, CliError> {
    let id: ScanId = id.parse()?;
    let pattern = match pattern {
        Some(p) => Some(SignPattern::from_signs(&parse_list::<i8>(p)?)),
        None => None,
    };
    let opts = ScanOptions { pattern, conj_bound, checkpoint, ..Default::default() };
    let ball = match id {
        ScanId::Hbgr | ScanId::Blocks => None,
        _ => Some(ctx.ball(strands, radius.unwrap_or(length))?),
    };
    let report = conjecture_scan(id, strands, length, ball, &opts)?;
    Ok(serde_json::to_value(report).expect("serializable"))
}

fn dispatch(cli: Cli, ctx: &mut Context) -> Result<CommandResult, CliError> {
    let payload = match cli.command {
        Command::Classify(args) => per_word(ctx, &args, |_, w| Ok(classify_payload(w)))?,
        Command::Stats(args) => per_word(ctx, &args, |_, w| Ok(json!(w.stats())))?,
        Command::Equal { strands, u, v } => {
            let (u, v) = (BraidWord::parse(&u, strands)?, BraidWord::parse(&v, strands)?);
            json!({ "equal": crate::garside::equal(&u, &v)? })
        }
        Command::Nf(args) => per_word(ctx, &args, |_, w| nf_payload(w))?,
        Command::Geodesic { word, radius } => per_word(ctx, &word, |c, w| geodesic_payload(c, w, radius))?,
        Command::Rset { word, radius } => per_word(ctx, &word, |c, w| rset_payload(c, w, radius))?,
        Command::Conway { word, top, bottom, homogeneous } => {
            per_word(ctx, &word, |_, w| conway_payload(w, &top, &bottom, homogeneous))?
        }
        Command::Order { word, all, limit } => per_word(ctx, &word, |_, w| {
            Ok(if all {
                let list: Vec<Value> =
                    conway::homogeneous_orderings(w, limit).iter().map(Ordering::to_json).collect();
                json!({ "orderings": list })
            } else {
                json!({ "ordering": conway::find_homogeneous_ordering(w).map(|o| o.to_json()) })
            })
        })?,
        Command::Certify(args) => per_word(ctx, &args, |_, w| certify_payload(w))?,
        Command::Winding { strands, word, k, certificate, radius } => {
            winding_payload(ctx, strands, word.as_deref(), k, certificate.as_ref(), radius)?
        }
        Command::Generate { strands, k, x, seed, shadows, bound_length } => {
            generate_payload(strands, k, &x, seed, shadows.as_deref(), bound_length)?
        }
        Command::Census { strands, length, series, csv, fit } => {
            return census_result(ctx, strands, length, &series, csv, fit);
        }
        Command::Scan { id, strands, length, pattern, conj_bound, checkpoint, radius } => {
            scan_payload(ctx, &id, strands, length, pattern.as_deref(), conj_bound, checkpoint, radius)?
        }
        Command::Render(args) => {
            let words = ctx.words(&args)?;
            let text: Vec<String> = words.iter().map(render_ascii).collect();
            return Ok(CommandResult::text(text.join("\n")));
        }
        Command::Ball { strands, radius, budget } => {
            let ball = match &ctx.cache {
                Some(dir) if budget == DEFAULT_BUDGET => BallTable::load_or_build(strands, radius, Some(dir))?,
                _ => BallTable::build(strands, radius, budget)?,
            };
            json!({
                "strands": strands,
                "radius": radius,
                "elements": ball.len(),
                "layer_counts": ball.layer_counts(),
            })
        }
    };
    Ok(CommandResult::ok(payload))
}

/// Runs with stdin as the batch input.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = io::stdin();
    let mut lock = stdin.lock();
    run_with_input(argv, &mut lock)
}

/// Parses `argv` (program name first) and runs the subcommand, reading
/// batch words from `input`.
pub fn run_with_input<I, T>(argv: I, input: &mut dyn BufRead) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return CommandResult {
                status,
                payload: if status == 0 { Value::Null } else { json!({ "error": rendered.trim() }) },
                text: (status == 0).then(|| rendered.clone()),
                diagnostics: if status == 0 { String::new() } else { rendered },
            };
        }
    };
    let cache = cli.ball_cache.clone().or_else(|| std::env::var_os(BALL_CACHE_ENV).map(PathBuf::from));
    let mut lines = Vec::new();
    if cli.command.word_args().is_some_and(|a| a.word.is_none()) {
        for line in input.lines() {
            match line {
                Ok(l) if !l.trim().is_empty() => lines.push(l.trim().to_string()),
                Ok(_) => {}
                Err(e) => {
                    return CommandResult {
                        status: 2,
                        payload: json!({ "error": e.to_string() }),
                        text: None,
                        diagnostics: format!("error: {e}\n"),
                    }
                }
            }
        }
    }
    let mut ctx = Context { cache, input: lines, ball: None };
    let result = match cli.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(cli, &mut ctx)),
            Err(e) => Err(CliError::Usage(e.to_string())),
        },
        None => dispatch(cli, &mut ctx),
    };
    match result {
        Ok(r) => r,
        Err(e) => CommandResult {
            status: e.status(),
            payload: json!({ "error": e.message() }),
            text: None,
            diagnostics: format!("error: {}\n", e.message()),
        },
    }
}
