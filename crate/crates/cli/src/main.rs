mod cache;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dyckseq_core::conjectures::{find_check, run_all};
use dyckseq_core::cores::{
    core, core_subsequence, core_top, decompose, subsegments, Core, ShapeLibrary,
};
use dyckseq_core::dyck::{self, big, classify, dyck_pred, dyck_succ};
use dyckseq_core::fixtures::{bundled_bfile, bundled_ids, listing_terms};
use dyckseq_core::levels::{
    level_scan_bounded, level_structural, DEFAULT_SCAN_BOUND, DEFAULT_STRUCTURAL_BOUND,
};
use dyckseq_core::oeis::{
    self, compare, index_shift, local_values, read_cached, BFile, FetchConfig, SequenceId,
};
use dyckseq_core::report::{compare_terms, VerificationOutcome};
use dyckseq_core::{DyckError, DyckNumber};

use cache::{CacheKind, TermCache};
use error::CliError;

const DEFAULT_MAX_N: u32 = 22;

/// Generate, query and verify Dyck numbers (OEIS A036991).
#[derive(Debug, Parser)]
#[command(name = "dyckseq", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached levels, cores and b-files.
    #[arg(
        long,
        global = true,
        env = "DYCKSEQ_CACHE_DIR",
        default_value = ".oeis-cache"
    )]
    cache_dir: PathBuf,
    /// Recompute everything; neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Never touch the network.
    #[arg(long, global = true, env = "DYCKSEQ_OFFLINE")]
    offline: bool,
    /// Largest level checked against the brute-force scan.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_BOUND)]
    scan_bound: u32,
    /// Largest level built structurally.
    #[arg(long, global = true, default_value_t = DEFAULT_STRUCTURAL_BOUND)]
    structural_bound: u32,
    /// Largest n for the verification checks.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Space-separated terms or plain lines.
    Text,
    /// Tab-separated records under a fixed header line.
    Records,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print terms of the sequence, a level or a core.
    Gen(GenArgs),
    /// Neighbours, class or level of a single term.
    Query {
        #[command(subcommand)]
        query: Query,
    },
    /// Pack a core or level into named patterns.
    Decompose(Target),
    /// Run structural checks and OEIS comparisons.
    Verify {
        #[command(subcommand)]
        selector: Selector,
    },
    /// Download a b-file into the cache.
    Fetch { id: SequenceId },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    what: GenTarget,
    /// Also compare against the brute-force scan when within the scan bound.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GenTarget {
    /// The first COUNT terms, starting at 0.
    #[arg(long)]
    count: Option<usize>,
    /// All terms with N binary digits.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    level: Option<u32>,
    /// The core opening even level N.
    #[arg(long = "core", value_name = "N", value_parser = clap::value_parser!(u32).range(6..))]
    core_n: Option<u32>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// The core opening even level N.
    #[arg(long = "core", value_name = "N", value_parser = clap::value_parser!(u32).range(6..))]
    core_n: Option<u32>,
    /// All terms with N binary digits.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    level: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Query {
    /// Previous Dyck number.
    Pred { t: String },
    /// Next Dyck number.
    Succ { t: String },
    /// Root, triplet position or origin.
    Classify { t: String },
    /// Binary length of the term.
    LevelOf { t: String },
}

#[derive(Debug, Subcommand)]
enum Selector {
    /// Every check, the published core listing and all bundled b-files.
    All,
    Eq1,
    Eq2,
    Prop12,
    Conj16,
    Conj18,
    Rejected,
    Sizes,
    /// Cores against the published core listing.
    Appendix,
    /// Computed terms against a b-file.
    Oeis {
        id: SequenceId,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Returns whether every selected check passed.
fn run(cli: Cli) -> Result<bool, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen(args) => cmd_gen(g, args),
        Command::Query { query } => cmd_query(g, query).map(|()| true),
        Command::Decompose(target) => cmd_decompose(g, target).map(|()| true),
        Command::Verify { selector } => cmd_verify(g, selector),
        Command::Fetch { id } => cmd_fetch(g, *id).map(|()| true),
    }
}

fn term_cache(g: &GlobalOpts) -> TermCache {
    TermCache::new((!g.no_cache).then(|| g.cache_dir.clone()))
}

fn within_structural(g: &GlobalOpts, n: u32) -> Result<(), CliError> {
    if n > g.structural_bound {
        return Err(DyckError::Bound {
            n,
            bound: g.structural_bound,
        }
        .into());
    }
    Ok(())
}

fn level_terms(g: &GlobalOpts, n: u32) -> Result<Vec<u64>, CliError> {
    within_structural(g, n)?;
    term_cache(g).get_or_compute(CacheKind::Level, n, || Ok(level_structural(n)?.terms))
}

fn core_terms(g: &GlobalOpts, n: u32) -> Result<Vec<u64>, CliError> {
    within_structural(g, n)?;
    term_cache(g).get_or_compute(CacheKind::Core, n, || Ok(core(n)?.terms))
}

fn print_terms(format: Format, terms: &[u64]) {
    match format {
        Format::Text => {
            let line: Vec<String> = terms.iter().map(u64::to_string).collect();
            println!("{}", line.join(" "));
        }
        Format::Records => {
            println!("index\tterm");
            for (i, t) in terms.iter().enumerate() {
                println!("{i}\t{t}");
            }
        }
    }
}

fn cmd_gen(g: &GlobalOpts, args: &GenArgs) -> Result<bool, CliError> {
    let w = &args.what;
    let (terms, scan_level) = if let Some(count) = w.count {
        let terms = dyckseq_core::levels::stream_terms(count)?;
        let top_level = terms.last().map_or(0, |&t| dyck::bit_length(t));
        (terms, top_level)
    } else if let Some(n) = w.level {
        (level_terms(g, n)?, n)
    } else {
        let n = w.core_n.expect("clap requires one target");
        (core_terms(g, n)?, n)
    };
    print_terms(g.format, &terms);
    if !args.check {
        return Ok(true);
    }
    if scan_level > g.scan_bound {
        eprintln!(
            "check skipped: level {scan_level} is above the scan bound {}",
            g.scan_bound
        );
        return Ok(true);
    }
    let expected = scanned_prefix(g, scan_level, terms.len(), w)?;
    match compare_terms(&expected, &terms) {
        Ok(()) => {
            eprintln!("check passed: {} terms agree with the scan", terms.len());
            Ok(true)
        }
        Err(c) => {
            eprintln!(
                "check FAILED at {}: expected {}, got {}",
                c.term, c.expected, c.actual
            );
            Ok(false)
        }
    }
}

/// The brute-force counterpart of a `gen` target.
fn scanned_prefix(
    g: &GlobalOpts,
    top_level: u32,
    count: usize,
    w: &GenTarget,
) -> Result<Vec<u64>, CliError> {
    if w.count.is_some() {
        let mut out = vec![0u64];
        for n in 1..=top_level {
            out.extend(level_scan_bounded(n, g.scan_bound)?.terms);
        }
        out.truncate(count);
        return Ok(out);
    }
    let level = level_scan_bounded(top_level, g.scan_bound)?.terms;
    Ok(match w.core_n {
        Some(n) => level
            .into_iter()
            .take_while(|&t| t <= core_top(n))
            .collect(),
        None => level,
    })
}

fn parse_term(text: &str) -> Result<num_value::Value, CliError> {
    num_value::parse(text)
        .ok_or_else(|| CliError::Usage(format!("{text:?} is not a nonnegative integer")))
}

/// Terms given on the command line, which may exceed 64 bits.
mod num_value {
    use dyckseq_core::dyck::big::BigUint;

    pub enum Value {
        Small(u64),
        Big(BigUint),
    }

    pub fn parse(text: &str) -> Option<Value> {
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        Some(match text.parse::<u64>() {
            Ok(v) => Value::Small(v),
            Err(_) => Value::Big(text.parse().ok()?),
        })
    }
}

fn cmd_query(g: &GlobalOpts, query: &Query) -> Result<(), CliError> {
    use num_value::Value;
    let (name, input, result) = match query {
        Query::Pred { t } => {
            let result = match parse_term(t)? {
                Value::Small(v) => dyck_pred(member(v)?)?.to_string(),
                Value::Big(v) => {
                    big_member(&v)?;
                    big::dyck_pred(&v)?.to_string()
                }
            };
            ("pred", t, result)
        }
        Query::Succ { t } => {
            let result = match parse_term(t)? {
                Value::Small(v) => match dyck_succ(member(v)?) {
                    Ok(next) => next.to_string(),
                    // Past u64::MAX the arbitrary precision path takes over.
                    Err(DyckError::Overflow(_)) => big::dyck_succ(&v.into()).to_string(),
                    Err(e) => return Err(e.into()),
                },
                Value::Big(v) => {
                    big_member(&v)?;
                    big::dyck_succ(&v).to_string()
                }
            };
            ("succ", t, result)
        }
        Query::Classify { t } => {
            let result = match parse_term(t)? {
                Value::Small(v) => classify(member(v)?).to_string(),
                Value::Big(_) => {
                    return Err(
                        DyckError::Domain("classify supports terms below 2^64".into()).into(),
                    )
                }
            };
            ("classify", t, result)
        }
        Query::LevelOf { t } => {
            let result = match parse_term(t)? {
                Value::Small(v) => dyck::bit_length(member(v)?.get()).to_string(),
                Value::Big(v) => {
                    big_member(&v)?;
                    v.bits().to_string()
                }
            };
            ("level-of", t, result)
        }
    };
    match g.format {
        Format::Text => println!("{result}"),
        Format::Records => println!("query\tinput\tresult\n{name}\t{input}\t{result}"),
    }
    Ok(())
}

fn member(v: u64) -> Result<DyckNumber, CliError> {
    Ok(DyckNumber::try_from(v)?)
}

fn big_member(v: &big::BigUint) -> Result<(), CliError> {
    if big::is_dyck_number(v) {
        Ok(())
    } else {
        Err(DyckError::Domain(format!("{v} is not a Dyck number")).into())
    }
}

fn cmd_decompose(g: &GlobalOpts, target: &Target) -> Result<(), CliError> {
    let mut rows: Vec<(String, String)> = Vec::new();
    if let Some(n) = target.core_n {
        if n % 2 == 1 {
            return Err(DyckError::Domain(format!("cores exist on even levels, not {n}")).into());
        }
        let terms = core_terms(g, n)?;
        let mut lib = ShapeLibrary::standard(n - 2)?;
        if n >= 10 {
            let c = Core {
                n,
                terms: terms.clone(),
            };
            for (i, part) in subsegments(&c)?.iter().enumerate() {
                rows.push((format!("μ{n}/{}", i + 1), decompose(part, &lib).to_string()));
            }
        }
        if n >= 12 {
            lib.register_subsegments(n)?;
        }
        rows.push((format!("μ{n}"), decompose(&terms, &lib).to_string()));
    } else {
        let n = target.level.expect("clap requires one target");
        let terms = level_terms(g, n)?;
        let mut lib = ShapeLibrary::new();
        for k in 4..n {
            lib.register_level(k)?;
        }
        for k in (6..=n).step_by(2) {
            lib.register_core(k)?;
        }
        rows.push((format!("π{n}"), decompose(&terms, &lib).to_string()));
    }
    match g.format {
        Format::Text => rows.iter().for_each(|(_, e)| println!("{e}")),
        Format::Records => {
            println!("part\texpression");
            rows.iter().for_each(|(p, e)| println!("{p}\t{e}"));
        }
    }
    Ok(())
}

fn cmd_verify(g: &GlobalOpts, selector: &Selector) -> Result<bool, CliError> {
    let checked_levels = g.max_n + 2;
    if checked_levels > g.structural_bound {
        return Err(DyckError::Bound {
            n: checked_levels,
            bound: g.structural_bound,
        }
        .into());
    }
    let outcomes = match selector {
        Selector::All => {
            let mut all = run_all(g.max_n);
            all.push(verify_listing()?);
            for id in bundled_ids() {
                all.push(verify_oeis(g, id)?);
            }
            all
        }
        Selector::Appendix => vec![verify_listing()?],
        Selector::Oeis { id } => vec![verify_oeis(g, *id)?],
        other => {
            let name = match other {
                Selector::Eq1 => "eq1",
                Selector::Eq2 => "eq2",
                Selector::Prop12 => "prop12",
                Selector::Conj16 => "conj16",
                Selector::Conj18 => "conj18",
                Selector::Rejected => "rejected",
                _ => "sizes",
            };
            find_check(name)
                .expect("every selector names a check")
                .run_up_to(g.max_n)
        }
    };
    if outcomes.is_empty() {
        return Err(CliError::Usage(format!(
            "no checks apply for --max-n {}",
            g.max_n
        )));
    }
    print_outcomes(g.format, &outcomes);
    Ok(outcomes.iter().all(|o| o.passed))
}

fn print_outcomes(format: Format, outcomes: &[VerificationOutcome]) {
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    match format {
        Format::Text => {
            for o in outcomes {
                println!("{o}");
            }
            println!("{} passed, {failed} failed", outcomes.len() - failed);
        }
        Format::Records => {
            println!("name\tn\tstatus\tterm\texpected\tactual\tnote");
            for o in outcomes {
                let status = if o.passed { "pass" } else { "fail" };
                let (term, expected, actual) = match &o.detail {
                    Some(d) => (d.term.to_string(), d.expected.clone(), d.actual.clone()),
                    None => Default::default(),
                };
                let note = o.note.clone().unwrap_or_default();
                println!(
                    "{}\t{}\t{status}\t{term}\t{expected}\t{actual}\t{note}",
                    o.name, o.n
                );
            }
        }
    }
}

/// The largest core the published listing reaches into.
const LISTING_MAX_CORE: u32 = 16;

fn verify_listing() -> Result<VerificationOutcome, CliError> {
    let listing = listing_terms();
    let computed = core_subsequence(LISTING_MAX_CORE)?;
    let prefix = &computed[..listing.len().min(computed.len())];
    Ok(VerificationOutcome::timed(|| {
        match compare_terms(&listing, prefix) {
            Ok(()) => VerificationOutcome::pass("appendix", 0).with_note(format!(
                "{} terms matched, cores 6..={LISTING_MAX_CORE}",
                listing.len()
            )),
            Err(c) => VerificationOutcome::fail("appendix", 0, c),
        }
    }))
}

/// Where a b-file was read from.
fn load_bfile(g: &GlobalOpts, id: SequenceId) -> Result<(BFile, &'static str), CliError> {
    if !g.no_cache {
        match read_cached(&g.cache_dir, id) {
            Ok(b) => return Ok((b, "cache")),
            Err(DyckError::CacheMiss(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if let Some(bundled) = bundled_bfile(id) {
        return Ok((bundled?, "bundled"));
    }
    if g.offline {
        return Err(DyckError::CacheMiss(id.to_string()).into());
    }
    Ok((oeis::fetch_bfile(id, &fetch_config(g))?, "network"))
}

fn fetch_config(g: &GlobalOpts) -> FetchConfig {
    FetchConfig {
        base_url: std::env::var("DYCKSEQ_OEIS_URL")
            .unwrap_or_else(|_| oeis::DEFAULT_BASE_URL.into()),
        cache_dir: g.cache_dir.clone(),
        offline: g.offline,
        ..FetchConfig::default()
    }
}

fn verify_oeis(g: &GlobalOpts, id: SequenceId) -> Result<VerificationOutcome, CliError> {
    let shift =
        index_shift(id).ok_or_else(|| DyckError::Domain(format!("{id} has no local formula")))?;
    let (bfile, source) = load_bfile(g, id)?;
    let count = if id == SequenceId::A036991 {
        10_000
    } else {
        64
    };
    let values = local_values(id, count)?;
    let outcome = compare(&id.to_string(), &values, &bfile, shift)?;
    let note = format!(
        "{}, {source} b-file",
        outcome.note.clone().unwrap_or_default()
    );
    Ok(outcome.with_note(note))
}

fn cmd_fetch(g: &GlobalOpts, id: SequenceId) -> Result<(), CliError> {
    if g.offline {
        return Err(DyckError::Network("fetch requested in offline mode".into()).into());
    }
    let bfile = oeis::fetch_bfile(id, &fetch_config(g))?;
    println!(
        "{id}: {} records cached in {}",
        bfile.records.len(),
        oeis::cache_path(&g.cache_dir, id).display()
    );
    Ok(())
}
