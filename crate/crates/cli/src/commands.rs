use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use palinkit::omega::hunt_periodic_palindromes;
use palinkit::omega::{scan_omega_with, Comparison, ScanOptions, PL_BOUND_CHECK_MAX_LEN};
use palinkit::palen::{mpf_enumerate, pl_profile_fast};
use palinkit::wordgen::WordFamily;
use palinkit::Word;

use crate::config::{positive, required, usage, FileConfig, Format};
use crate::report::Report;

#[derive(Args, Debug, Default)]
pub struct Source {
    /// Word family, e.g. `periodic:01`, `thue-morse`, `morphic:0:01,1:10`, `mechanical:2/5`
    #[arg(long)]
    pub family: Option<String>,
    /// Prefix length taken from the family
    #[arg(long)]
    pub length: Option<usize>,
}

#[derive(Args, Debug, Default)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Report path; stdout when absent
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// A family prefix plus the canonical family text used in config hashes.
fn family_prefix(src: &Source, file: &FileConfig) -> anyhow::Result<(String, usize, Word)> {
    let text = required(src.family.clone(), file.family.clone(), "family")?;
    let family: WordFamily = text.parse()?;
    let length = positive(required(src.length, file.length, "length")?, "length")?;
    let word = family.prefix(length)?;
    Ok((family.to_string(), length, word))
}

fn output_of(out: &Output, file: &FileConfig) -> (Format, Option<PathBuf>) {
    (
        out.format.or(file.format).unwrap_or_default(),
        out.output.clone().or(file.output.clone()),
    )
}

#[derive(Args, Debug)]
pub struct PlArgs {
    /// The word: printable ASCII, or comma-separated symbol ids
    pub word: Option<String>,
    #[command(flatten)]
    pub source: Source,
    /// Also print one minimal palindromic factorization
    #[arg(long)]
    pub factorize: bool,
    /// Print every minimal palindromic factorization
    #[arg(long, conflicts_with = "factorize")]
    pub all_mpf: bool,
    /// Stop after this many factorizations
    #[arg(long)]
    pub limit: Option<usize>,
}

pub fn pl(args: &PlArgs, file: &FileConfig) -> anyhow::Result<()> {
    let w = match &args.word {
        Some(text) => {
            if args.source.family.is_some() {
                return Err(usage("give either a word or --family, not both"));
            }
            Word::parse(text).map_err(|e| usage(e.to_string()))?
        }
        None => family_prefix(&args.source, file)?.2,
    };
    let profile = pl_profile_fast(&w);
    println!("{}", profile.value());
    if w.is_empty() || !(args.factorize || args.all_mpf) {
        return Ok(());
    }
    let limit = if args.factorize { Some(1) } else { args.limit };
    for f in mpf_enumerate(&w, limit)? {
        println!("{f}");
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Serialize)]
struct ProfileConfig<'a> {
    family: &'a str,
    length: usize,
    format: Format,
}

#[derive(Serialize)]
struct ProfileRow {
    i: usize,
    pl: u32,
    running_max: u32,
}

pub fn profile(args: &ProfileArgs, file: &FileConfig) -> anyhow::Result<()> {
    let (family, length, w) = family_prefix(&args.source, file)?;
    let (format, path) = output_of(&args.output, file);
    let mut report = Report::new(
        "profile",
        &ProfileConfig {
            family: &family,
            length,
            format,
        },
        format,
    )?;
    let mut running_max = 0;
    for (i, &pl) in pl_profile_fast(&w).pl().iter().enumerate() {
        running_max = running_max.max(pl);
        report.row(&ProfileRow { i, pl, running_max })?;
    }
    eprintln!("max PL over prefixes: {running_max}");
    report.finish(path.as_deref())
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub source: Source,
    /// Palindromic length bound k
    #[arg(long)]
    pub k: Option<u32>,
    /// Require strictly more than (n/k)^(1/k) palindromic prefixes
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Serialize)]
struct ScanConfig<'a> {
    family: &'a str,
    length: usize,
    k: u32,
    mode: Comparison,
    format: Format,
}

pub fn scan_omega(args: &ScanArgs, file: &FileConfig) -> anyhow::Result<()> {
    let (family, length, w) = family_prefix(&args.source, file)?;
    let k = required(args.k, file.k, "k")?;
    if k == 0 {
        return Err(usage("--k must be positive"));
    }
    let mode = if args.strict || file.strict.unwrap_or(false) {
        Comparison::Greater
    } else {
        Comparison::AtLeast
    };
    let (format, path) = output_of(&args.output, file);
    let config = ScanConfig {
        family: &family,
        length,
        k,
        mode,
        format,
    };
    let mut report = Report::new("scan-omega", &config, format)?;
    let options = ScanOptions {
        mode,
        check_pl_bound: true,
    };
    let result = scan_omega_with(&w, k, options)?;
    match (result.pl_bound_holds(), result.max_factor_pl) {
        (Some(false), Some(m)) => report.caveat(format!(
            "max PL over factors is {m}, above k={k}; Ω is reported anyway"
        )),
        (None, _) => report.caveat(format!(
            "PL bound not checked for prefixes longer than {PL_BOUND_CHECK_MAX_LEN}"
        )),
        _ => {}
    }
    for m in &result.members {
        report.row(m)?;
    }
    eprintln!(
        "members: {}, max palindromic prefix count: {}",
        result.members.len(),
        result.max_count()
    );
    report.finish(path.as_deref())
}

#[derive(Args, Debug)]
pub struct HuntArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub k: Option<u32>,
    /// Target exponent
    #[arg(long)]
    pub j: Option<usize>,
}

fn shown(w: &Word) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}

pub fn hunt(args: &HuntArgs, file: &FileConfig) -> anyhow::Result<()> {
    let (_, _, w) = family_prefix(&args.source, file)?;
    let k = required(args.k, file.k, "k")?;
    let j = positive(required(args.j, file.j, "j")?, "j")?;
    if k == 0 {
        return Err(usage("--k must be positive"));
    }
    match hunt_periodic_palindromes(&w, k, j)? {
        Some(found) => println!(
            "found a={} b={} exponent={} host={}..{}",
            shown(&found.a),
            shown(&found.b),
            found.exponent,
            found.host.start,
            found.host.end
        ),
        None => println!("not found"),
    }
    Ok(())
}
