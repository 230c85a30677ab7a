//! Command-line front end: generation, classification, counting and the
//! verification suites, with JSON/CSV/text reports.

mod cache;
mod report;
mod wordspec;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use lagrange3::constructions::{
    degenerate_example, projection_glue_len, witness, Variant, WitnessN, WitnessSpec,
};
use lagrange3::cuts::{
    classify_finite_cut, classify_infinite_cut, count_bad_cuts, CutClass, LazyWord,
};
use lagrange3::markov::{m_tilde, m_tilde_evidence, markov_numbers, markov_tree, spectrum_value};
use lagrange3::suites::{self, CaseStatus, SuiteReport};
use lagrange3::words::{chi_factor, cohn_tree, pair_tree, PairFamily};
use lagrange3::{BigInt, Interval, Quad};

use cache::PairCache;
use report::{exact_fields, value_fields, Record, Report, Status, DECIMAL_DIGITS};
use wordspec::{parse_cf_input, parse_word_input, WordInput};

#[derive(Parser)]
#[command(name = "lagrange3")]
#[command(about = "Exact continued-fraction and bad-cut tooling around the constant 3")]
#[command(version)]
struct Cli {
    /// Output format: json | csv | text
    #[arg(long, global = true, default_value = "json")]
    format: String,

    /// Seed for the randomized verification suites
    #[arg(long, global = true, default_value_t = suites::DEFAULT_SEED)]
    seed: u64,

    /// Advisory tilde-pair cache file (path<TAB>alpha<TAB>beta lines)
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the substitution-tree vertices up to a depth
    Cohn {
        #[arg(long)]
        depth: usize,
        /// Append the Markov number and spectrum value of every vertex
        #[arg(long)]
        markov: bool,
    },
    /// List the pair-tree vertices of a family up to a depth
    Pairs {
        /// bar | tilde
        #[arg(long, default_value = "bar")]
        family: String,
        #[arg(long)]
        depth: usize,
    },
    /// Emit the digit prefix of a construction
    Word {
        /// Witness spec, e.g. "n=0;ops=UV;cont=alt;variant=projection"
        #[arg(long)]
        spec: Option<String>,
        /// Strictly increasing run lengths, e.g. "1,2,3"
        #[arg(long)]
        degenerate: Option<String>,
        #[arg(long)]
        length: usize,
    },
    /// Classify one cut of a finite or infinite word
    Classify {
        /// Word literal: finite "bbaab", periodic "a(baab)", open "abaab..."
        #[arg(long)]
        word: Option<String>,
        /// Witness spec instead of a literal
        #[arg(long)]
        spec: Option<String>,
        /// Digits strictly left of the cut
        #[arg(long)]
        pos: usize,
        #[arg(long, default_value_t = 4096)]
        max_depth: usize,
    },
    /// Classify all cuts with left length up to a horizon and count the bad
    Count {
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, default_value_t = 4096)]
        max_depth: usize,
    },
    /// Witness report: prefix, bad-cut positions, count, undecided list
    Witness {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, default_value_t = 4096)]
        max_depth: usize,
        /// Digits of the word to echo
        #[arg(long, default_value_t = 48)]
        prefix: usize,
    },
    /// Markov triples up to a bound, optionally with exact spectrum values
    Markov {
        #[arg(long, default_value = "1000")]
        limit: String,
        #[arg(long)]
        spectrum: bool,
    },
    /// Sup of the approximation values: exact on an eventually periodic
    /// expansion (--cf) or rigorously enclosed along a witness (--spec)
    Mtilde {
        /// e.g. "[1;(1)]" or "0;2,1,(1,2)"
        #[arg(long)]
        cf: Option<String>,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, default_value_t = 4096)]
        max_depth: usize,
    },
    /// Run a named verification suite
    Verify {
        /// identities | cuts | markov | counts | injectivity | lagrange |
        /// biinfinite | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Bar-tree depth for the identity suite
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Tilde operator word length bound
        #[arg(long, default_value_t = 4)]
        tilde_len: usize,
        /// Cut-scan horizon for the cut suite
        #[arg(long, default_value_t = 200)]
        horizon: usize,
        #[arg(long, default_value_t = 4096)]
        max_depth: usize,
        /// Markov tree bound
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
        /// Substitution-tree depth for the correspondence check
        #[arg(long, default_value_t = 4)]
        cohn_depth: usize,
        /// Two-sided window for the bi-infinite checks
        #[arg(long, default_value_t = 200)]
        window: i64,
        /// Operator seed length bound for the count suite
        #[arg(long, default_value_t = 1)]
        seed_len: usize,
        /// Largest projection-witness n in the count suite
        #[arg(long, default_value_t = 2)]
        n_max: u32,
        /// Stages for the stage-cut and evidence scans
        #[arg(long, default_value_t = 2)]
        stages: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let mut cache = cli.cache.as_deref().map(PairCache::load);
    let start = Instant::now();
    let mut report = match run(&cli, &mut cache) {
        Ok(report) => report,
        Err(message) => {
            let mut r = Report::new("error", String::new());
            r.status = Status::Failed;
            r.set_summary("error", json!(message));
            r
        }
    };
    report.elapsed_ms = start.elapsed().as_millis();
    if let (Some(cache), Some(path)) = (&cache, cli.cache.as_deref()) {
        if let Err(e) = cache.save(path) {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    print!("{}", report.render(&cli.format));
    if !report.render(&cli.format).ends_with('\n') {
        println!();
    }
    std::process::exit(report.status.exit_code());
}

fn run(cli: &Cli, cache: &mut Option<PairCache>) -> Result<Report, String> {
    match &cli.command {
        Command::Cohn { depth, markov } => cmd_cohn(*depth, *markov),
        Command::Pairs { family, depth } => cmd_pairs(family, *depth, cache),
        Command::Word {
            spec,
            degenerate,
            length,
        } => cmd_word(spec.as_deref(), degenerate.as_deref(), *length, cache),
        Command::Classify {
            word,
            spec,
            pos,
            max_depth,
        } => cmd_classify(word.as_deref(), spec.as_deref(), *pos, *max_depth),
        Command::Count {
            word,
            spec,
            horizon,
            max_depth,
        } => cmd_count(word.as_deref(), spec.as_deref(), *horizon, *max_depth),
        Command::Witness {
            spec,
            horizon,
            max_depth,
            prefix,
        } => cmd_witness(spec, *horizon, *max_depth, *prefix, cache),
        Command::Markov { limit, spectrum } => cmd_markov(limit, *spectrum),
        Command::Mtilde {
            cf,
            spec,
            horizon,
            max_depth,
        } => cmd_mtilde(cf.as_deref(), spec.as_deref(), *horizon, *max_depth),
        Command::Verify {
            suite,
            depth,
            tilde_len,
            horizon,
            max_depth,
            limit,
            cohn_depth,
            window,
            seed_len,
            n_max,
            stages,
        } => cmd_verify(
            suite,
            *depth,
            *tilde_len,
            *horizon,
            *max_depth,
            *limit,
            *cohn_depth,
            *window,
            *seed_len,
            *n_max,
            *stages,
            cli.seed,
        ),
    }
}

fn cmd_cohn(depth: usize, with_markov: bool) -> Result<Report, String> {
    if depth > 12 {
        return Err(format!("depth {depth} too large (limit 12)"));
    }
    let mut report = Report::new("cohn", format!("depth={depth};markov={with_markov}"));
    let vertices = cohn_tree(depth);
    report.set_summary("vertices", json!(vertices.len()));
    for (i, (word, path)) in vertices.iter().enumerate() {
        let mut rec = Record::new();
        rec.insert("index".into(), i.to_string());
        rec.insert("word".into(), word.to_string());
        rec.insert(
            "path".into(),
            path.iter()
                .map(|o| match o {
                    lagrange3::words::Renorm::U => 'U',
                    lagrange3::words::Renorm::V => 'V',
                })
                .collect(),
        );
        if with_markov {
            let z = lagrange3::markov::cohn_to_markov(word).map_err(|e| e.to_string())?;
            let value = lagrange3::markov::periodic_markov_value(word);
            rec.insert("z".into(), z.to_string());
            rec.insert("value".into(), value.to_decimal(DECIMAL_DIGITS));
            exact_fields(&mut rec, &value);
        }
        report.push(rec);
    }
    Ok(report)
}

fn cmd_pairs(family: &str, depth: usize, cache: &mut Option<PairCache>) -> Result<Report, String> {
    let (family, limit) = match family {
        "bar" => (PairFamily::Bar, 12),
        "tilde" => (PairFamily::Tilde, 8),
        other => return Err(format!("unknown family {other:?}")),
    };
    if depth > limit {
        return Err(format!("depth {depth} too large (limit {limit})"));
    }
    let mut report = Report::new("pairs", format!("family={family:?};depth={depth}"));
    let pairs = pair_tree(family, depth);
    if let (Some(cache), PairFamily::Tilde) = (cache.as_mut(), family) {
        for p in &pairs {
            cache.insert(p);
        }
    }
    report.set_summary("pairs", json!(pairs.len()));
    for (i, p) in pairs.iter().enumerate() {
        let mut rec = Record::new();
        rec.insert("index".into(), i.to_string());
        rec.insert(
            "path".into(),
            p.path
                .iter()
                .map(|o| match o {
                    lagrange3::words::Renorm::U => 'U',
                    lagrange3::words::Renorm::V => 'V',
                })
                .collect(),
        );
        rec.insert("alpha".into(), p.alpha.to_string());
        rec.insert("beta".into(), p.beta.to_string());
        report.push(rec);
    }
    Ok(report)
}

fn warm_cache(cache: &mut Option<PairCache>, spec: &WitnessSpec, digits: usize) {
    if let Some(cache) = cache.as_mut() {
        let mut stage = 0usize;
        loop {
            let ops: Vec<_> = (0..stage).map(|i| spec.stream.op(i)).collect();
            let pair = cache.tilde_pair(&ops);
            if pair.beta.digit_len() >= digits || stage > 16 {
                break;
            }
            stage += 1;
        }
    }
}

fn cmd_word(
    spec: Option<&str>,
    degenerate: Option<&str>,
    length: usize,
    cache: &mut Option<PairCache>,
) -> Result<Report, String> {
    if length == 0 {
        return Err("length must be positive".into());
    }
    let (input, digits) = match (spec, degenerate) {
        (Some(spec_str), None) => {
            let spec: WitnessSpec = spec_str
                .parse()
                .map_err(|e: lagrange3::constructions::BadSpec| e.to_string())?;
            warm_cache(cache, &spec, length);
            let w = witness(&spec).map_err(|e| e.to_string())?;
            (format!("spec={spec_str};length={length}"), w.prefix(length))
        }
        (None, Some(runs)) => {
            let l: Vec<u64> = runs
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| format!("bad run length {p:?}"))
                })
                .collect::<Result<_, _>>()?;
            let w = degenerate_example(&l, length).map_err(|e| e.to_string())?;
            (
                format!("degenerate={runs};length={length}"),
                w.digits().to_vec(),
            )
        }
        _ => return Err("pass exactly one of --spec or --degenerate".into()),
    };
    let mut report = Report::new("word", input);
    let word = lagrange3::words::DigitWord::new(digits.clone());
    let mut rec = Record::new();
    rec.insert("digits".into(), word.to_string());
    rec.insert("length".into(), digits.len().to_string());
    if let Ok(ab) = chi_factor(&word) {
        rec.insert("letters".into(), ab.to_string());
    }
    report.push(rec);
    Ok(report)
}

fn classify_record(class: &CutClass, pos: usize, encl: &Interval, exact: Option<&Quad>) -> Record {
    let mut rec = Record::new();
    rec.insert("position".into(), pos.to_string());
    rec.insert("class".into(), class.to_string());
    value_fields(&mut rec, encl, exact);
    rec
}

fn cmd_classify(
    word: Option<&str>,
    spec: Option<&str>,
    pos: usize,
    max_depth: usize,
) -> Result<Report, String> {
    let input = format!(
        "word={};spec={};pos={pos}",
        word.unwrap_or("-"),
        spec.unwrap_or("-")
    );
    let mut report = Report::new("classify", input);
    let report_class;
    match (word, spec) {
        (Some(literal), None) => match parse_word_input(literal)? {
            WordInput::Finite(w) => {
                if pos == 0 || pos >= w.len() {
                    return Err(format!(
                        "cut position must be interior: 0 < pos < {}",
                        w.len()
                    ));
                }
                let r = classify_finite_cut(w.digits(), pos);
                report.push(classify_record(
                    &r.class,
                    r.pos,
                    &r.enclosure,
                    r.exact.as_ref(),
                ));
                report_class = r.class;
            }
            WordInput::Periodic { pre, period } => {
                let w = LazyWord::periodic(pre.digits().to_vec(), period.digits().to_vec());
                let r = classify_infinite_cut(&w, pos, &[], max_depth);
                report.push(classify_record(
                    &r.class,
                    r.pos,
                    &r.enclosure,
                    r.exact.as_ref(),
                ));
                report_class = r.class;
            }
            WordInput::Open(w) => {
                if pos >= w.len() {
                    return Err("cut position beyond the known prefix".into());
                }
                let r = classify_open_cut(w.digits(), pos);
                report.push(classify_record(&r.0, pos, &r.1, None));
                report_class = r.0;
            }
        },
        (None, Some(spec_str)) => {
            let spec: WitnessSpec = spec_str
                .parse()
                .map_err(|e: lagrange3::constructions::BadSpec| e.to_string())?;
            let w = witness(&spec).map_err(|e| e.to_string())?;
            let r = classify_infinite_cut(&w, pos, &[], max_depth);
            report.push(classify_record(
                &r.class,
                r.pos,
                &r.enclosure,
                r.exact.as_ref(),
            ));
            report_class = r.class;
        }
        _ => return Err("pass exactly one of --word or --spec".into()),
    }
    if let CutClass::Undecided { .. } = report_class {
        report.status.worsen(Status::Undecided);
    }
    Ok(report)
}

/// Classification of a cut in a word known only by a prefix: sound for every
/// `{1,2}` continuation; indeterminate when the enclosure straddles 3.
fn classify_open_cut(digits: &[u8], pos: usize) -> (CutClass, Interval) {
    let eta = lagrange3::cuts::eta_of_left(&digits[..pos]);
    let quotients: Vec<u32> = digits[pos..].iter().map(|&d| d as u32).collect();
    let encl = lagrange3::cf::tail_enclosure(&quotients).shift(&eta);
    let class = if encl.entirely_above_int(3) {
        CutClass::Bad
    } else if encl.entirely_at_most_int(3) {
        CutClass::Good
    } else {
        CutClass::Indeterminate
    };
    (class, encl)
}

fn witness_auto_horizon(spec: &WitnessSpec) -> usize {
    let stream = &spec.stream;
    match (spec.n, spec.variant) {
        (WitnessN::Infinite, _) => {
            let p = stream.stage_pair(3);
            p.alpha.digit_len() + 2 * p.beta.digit_len()
        }
        (WitnessN::Finite(n), Variant::Projection) => {
            projection_glue_len(stream, n) + stream.stage_pair(4).beta.digit_len()
        }
        (WitnessN::Finite(n), Variant::Threes) => {
            n as usize + stream.stage_pair(4).beta.digit_len()
        }
    }
}

fn count_into_report(report: &mut Report, w: &LazyWord, horizon: usize, max_depth: usize) {
    let count = count_bad_cuts(w, horizon, max_depth);
    report.set_summary("horizon", json!(horizon));
    report.set_summary(
        "count",
        match count.verdict {
            Some(c) => json!(c),
            None => json!(null),
        },
    );
    report.set_summary("undecided", json!(count.undecided.clone()));
    for pos in &count.bad {
        let mut rec = Record::new();
        rec.insert("position".into(), pos.to_string());
        rec.insert("class".into(), "bad".into());
        report.push(rec);
    }
    for pos in &count.undecided {
        let mut rec = Record::new();
        rec.insert("position".into(), pos.to_string());
        rec.insert(
            "class".into(),
            format!("{}", CutClass::Undecided { depth: max_depth }),
        );
        report.push(rec);
    }
    if count.verdict.is_none() {
        report.status.worsen(Status::Undecided);
    }
}

fn cmd_count(
    word: Option<&str>,
    spec: Option<&str>,
    horizon: Option<usize>,
    max_depth: usize,
) -> Result<Report, String> {
    let input = format!(
        "word={};spec={};horizon={horizon:?}",
        word.unwrap_or("-"),
        spec.unwrap_or("-")
    );
    let mut report = Report::new("count", input);
    match (word, spec) {
        (Some(literal), None) => {
            let parsed = parse_word_input(literal)?;
            let (w, default_h, cap) = match &parsed {
                WordInput::Finite(d) => {
                    let last = d.len().saturating_sub(1);
                    (parsed.lazy(), last, Some(last))
                }
                WordInput::Periodic { pre, period } => {
                    (parsed.lazy(), pre.len() + 8 * period.len(), None)
                }
                WordInput::Open(_) => return Err("counting needs a fully specified word".into()),
            };
            let mut horizon = horizon.unwrap_or(default_h);
            if let Some(cap) = cap {
                // cuts of a finite word stop at its last digit
                horizon = horizon.min(cap);
            }
            count_into_report(&mut report, &w, horizon, max_depth);
        }
        (None, Some(spec_str)) => {
            let spec: WitnessSpec = spec_str
                .parse()
                .map_err(|e: lagrange3::constructions::BadSpec| e.to_string())?;
            let w = witness(&spec).map_err(|e| e.to_string())?;
            let horizon = horizon.unwrap_or_else(|| witness_auto_horizon(&spec));
            count_into_report(&mut report, &w, horizon, max_depth);
        }
        _ => return Err("pass exactly one of --word or --spec".into()),
    }
    Ok(report)
}

fn cmd_witness(
    spec_str: &str,
    horizon: Option<usize>,
    max_depth: usize,
    prefix: usize,
    cache: &mut Option<PairCache>,
) -> Result<Report, String> {
    let spec: WitnessSpec = spec_str
        .parse()
        .map_err(|e: lagrange3::constructions::BadSpec| e.to_string())?;
    let mut report = Report::new("witness", spec.to_string());
    let horizon = horizon.unwrap_or_else(|| witness_auto_horizon(&spec));
    warm_cache(cache, &spec, horizon);
    let w = witness(&spec).map_err(|e| e.to_string())?;
    let echo: String = w.prefix(prefix).iter().map(|d| d.to_string()).collect();
    report.set_summary("prefix", json!(echo));
    if spec.stream.eventually_constant() {
        report.set_summary("flags", json!(["eventually-constant-continuation"]));
    }
    count_into_report(&mut report, &w, horizon, max_depth);
    Ok(report)
}

fn cmd_markov(limit: &str, spectrum: bool) -> Result<Report, String> {
    let limit: BigInt = limit.parse().map_err(|_| format!("bad limit {limit:?}"))?;
    let mut report = Report::new("markov", format!("limit={limit};spectrum={spectrum}"));
    let triples = markov_tree(&limit);
    report.set_summary("triples", json!(triples.len()));
    if spectrum {
        let numbers = markov_numbers(&limit);
        for z in numbers {
            let v = spectrum_value(&z).map_err(|e| e.to_string())?;
            let mut rec = Record::new();
            rec.insert("z".into(), z.to_string());
            rec.insert("value".into(), v.value.to_decimal(DECIMAL_DIGITS));
            exact_fields(&mut rec, &v.value);
            report.push(rec);
        }
    } else {
        for t in &triples {
            let mut rec = Record::new();
            rec.insert("z1".into(), t.z1.to_string());
            rec.insert("z2".into(), t.z2.to_string());
            rec.insert("z3".into(), t.z3.to_string());
            report.push(rec);
        }
    }
    Ok(report)
}

fn cmd_mtilde(
    cf: Option<&str>,
    spec: Option<&str>,
    horizon: Option<usize>,
    max_depth: usize,
) -> Result<Report, String> {
    match (cf, spec) {
        (Some(cf_str), None) => {
            let cf = parse_cf_input(cf_str)?;
            let mut report = Report::new("mtilde", format!("cf={cf_str}"));
            let r = m_tilde(&cf.pre, &cf.period);
            let mut rec = Record::new();
            rec.insert("value".into(), r.value.to_decimal(DECIMAL_DIGITS));
            rec.insert("attained".into(), r.attained.to_string());
            if let Some(n) = r.attained_at {
                rec.insert("attained_at".into(), n.to_string());
            }
            exact_fields(&mut rec, &r.value);
            report.push(rec);
            Ok(report)
        }
        (None, Some(spec_str)) => {
            let spec: WitnessSpec = spec_str
                .parse()
                .map_err(|e: lagrange3::constructions::BadSpec| e.to_string())?;
            let w = witness(&spec).map_err(|e| e.to_string())?;
            let horizon = horizon.unwrap_or_else(|| spec.stream.stage_pair(3).beta.digit_len());
            let mut report = Report::new("mtilde", format!("spec={spec_str};horizon={horizon}"));
            let ev = m_tilde_evidence(&w, horizon, max_depth);
            let mut rec = Record::new();
            rec.insert("position".into(), "max".into());
            value_fields(&mut rec, &ev.max, None);
            report.push(rec);
            report.set_summary("horizon", json!(horizon));
            report.set_summary("undecided", json!(ev.undecided.clone()));
            if !ev.undecided.is_empty() {
                report.status.worsen(Status::Undecided);
            }
            Ok(report)
        }
        _ => Err("pass exactly one of --cf or --spec".into()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: &str,
    depth: usize,
    tilde_len: usize,
    horizon: usize,
    max_depth: usize,
    limit: u64,
    cohn_depth: usize,
    window: i64,
    seed_len: usize,
    n_max: u32,
    stages: usize,
    seed: u64,
) -> Result<Report, String> {
    let mut reports: Vec<SuiteReport> = Vec::new();
    let all = suite == "all";
    if all || suite == "identities" {
        reports.push(suites::identities_suite(depth, tilde_len, seed));
    }
    if all || suite == "cuts" {
        reports.push(suites::cuts_suite(seed, horizon, max_depth));
    }
    if all || suite == "markov" {
        reports.push(suites::markov_suite(cohn_depth, limit, seed));
    }
    if all || suite == "counts" {
        reports.push(suites::counts_suite(
            seed_len,
            n_max,
            n_max + 1,
            stages,
            3,
            max_depth,
            seed,
        ));
    }
    if all || suite == "injectivity" {
        reports.push(suites::injectivity_suite(tilde_len));
    }
    if all || suite == "lagrange" {
        reports.push(suites::lagrange_suite(stages, max_depth.max(8192)));
    }
    if all || suite == "biinfinite" {
        reports.push(suites::biinfinite_evidence_suite(
            window,
            max_depth.max(8192),
        ));
    }
    if reports.is_empty() {
        return Err(format!("unknown suite {suite:?}"));
    }
    let mut report = Report::new("verify", format!("suite={suite};seed={seed}"));
    let mut pass = 0usize;
    let mut fail = 0usize;
    let mut undecided = 0usize;
    for sr in &reports {
        for case in &sr.cases {
            let mut rec = Record::new();
            rec.insert("suite".into(), sr.suite.clone());
            rec.insert("case".into(), case.name.clone());
            rec.insert(
                "status".into(),
                match case.status {
                    CaseStatus::Pass => "pass".into(),
                    CaseStatus::Fail => "fail".into(),
                    CaseStatus::Undecided => "undecided".into(),
                },
            );
            if !case.detail.is_empty() {
                rec.insert("detail".into(), case.detail.clone());
            }
            report.push(rec);
            match case.status {
                CaseStatus::Pass => pass += 1,
                CaseStatus::Fail => fail += 1,
                CaseStatus::Undecided => undecided += 1,
            }
        }
    }
    report.set_summary("pass", json!(pass));
    report.set_summary("fail", json!(fail));
    report.set_summary("undecided", json!(undecided));
    if fail > 0 {
        report.status.worsen(Status::Failed);
    } else if undecided > 0 {
        report.status.worsen(Status::Undecided);
    }
    Ok(report)
}
