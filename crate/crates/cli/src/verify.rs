//! Exhaustive verification suites. Rows are counterexamples, except for the
//! quadruple suites which report every quadruple checked.

use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use palinkit::delta::{central_gaps, delta_enumerate, verify_all, DeltaQuad, QuadReport};
use palinkit::palen::{mpf_infix_violation, pl_oracle, pl_oracle_prefixes, pl_profile_fast};
use palinkit::periodicity::{
    decompose_periodic_palindrome, has_period, period_from_palindromic_affix, period_set,
};
use palinkit::wordgen::all_words;
use palinkit::{Alphabet, Word};

use crate::commands::Output;
use crate::config::{positive, usage, FileConfig, Format};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ConcatInequalities,
    MpfInfix,
    LemmaDvd,
    LemmaCentral,
    MainTheorem,
    OracleEquivalence,
    Periodicity,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Longest word checked exhaustively
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Alphabet size
    #[arg(long)]
    pub alpha: Option<usize>,
    #[arg(long)]
    pub max_d: Option<usize>,
    #[arg(long)]
    pub max_v: Option<usize>,
    #[arg(long)]
    pub n_slack: Option<usize>,
    /// Extra random words for oracle-equivalence
    #[arg(long)]
    pub random_count: Option<usize>,
    #[arg(long)]
    pub random_len: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub output: Output,
}

/// The effective caps; this is what the report's config hash covers.
#[derive(Debug, Serialize)]
struct VerifyConfig {
    suite: Suite,
    max_len: usize,
    alpha: usize,
    max_d: usize,
    max_v: usize,
    n_slack: usize,
    random_count: usize,
    random_len: usize,
    seed: u64,
    format: Format,
}

/// A suite found counterexamples; exit status 3.
#[derive(Debug)]
pub struct Failed {
    pub suite: Suite,
    pub failures: usize,
}

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} counterexample(s) found",
            suite_name(self.suite),
            self.failures
        )
    }
}

impl std::error::Error for Failed {}

fn resolve(args: &VerifyArgs, file: &FileConfig) -> anyhow::Result<VerifyConfig> {
    let default_len = match args.suite {
        Suite::OracleEquivalence => 16,
        Suite::Periodicity => 14,
        _ => 12,
    };
    let alpha = args.alpha.or(file.alpha).unwrap_or(2);
    if !(1..=10).contains(&alpha) {
        return Err(usage("--alpha must lie in 1..=10"));
    }
    Ok(VerifyConfig {
        suite: args.suite,
        max_len: args.max_len.or(file.max_len).unwrap_or(default_len),
        alpha,
        max_d: positive(args.max_d.or(file.max_d).unwrap_or(4), "max-d")?,
        max_v: args.max_v.or(file.max_v).unwrap_or(3),
        n_slack: args.n_slack.or(file.n_slack).unwrap_or(2),
        random_count: args.random_count.or(file.random_count).unwrap_or(0),
        random_len: args.random_len.or(file.random_len).unwrap_or(1000),
        seed: args.seed.or(file.seed).unwrap_or(0),
        format: args.output.format.or(file.format).unwrap_or_default(),
    })
}

fn words(c: &VerifyConfig) -> anyhow::Result<Vec<Word>> {
    let alphabet = Alphabet::digits(c.alpha.max(2))?;
    let alphabet = Alphabet::new(alphabet.symbols()[..c.alpha].iter().copied())?;
    Ok((1..=c.max_len)
        .flat_map(|n| all_words(&alphabet, n).collect::<Vec<_>>())
        .collect())
}

#[derive(Serialize)]
struct ConcatRow {
    x: Word,
    y: Word,
    pl_x: usize,
    pl_y: usize,
    pl_xy: usize,
    rule: &'static str,
}

fn concat_violations(w: &Word) -> Vec<ConcatRow> {
    let mut out = Vec::new();
    for split in 0..=w.len() {
        let (x, y) = (w.prefix(split), w.suffix(w.len() - split));
        let (pl_x, pl_y, pl_xy) = (pl_oracle(&x), pl_oracle(&y), pl_oracle(w));
        let mut broken = Vec::new();
        if pl_xy > pl_x + pl_y {
            broken.push("subadditivity");
        }
        if pl_y > pl_x + pl_xy || pl_x > pl_y + pl_xy {
            broken.push("triangle");
        }
        if y.is_palindrome() && pl_xy.abs_diff(pl_x) > 1 {
            broken.push("palindrome-append");
        }
        if w.is_palindrome() && pl_x.abs_diff(pl_y) > 1 {
            broken.push("palindrome-split");
        }
        for rule in broken {
            out.push(ConcatRow {
                x: x.clone(),
                y: y.clone(),
                pl_x,
                pl_y,
                pl_xy,
                rule,
            });
        }
    }
    out
}

#[derive(Serialize)]
struct InfixRow {
    word: Word,
    factorization: String,
    i: usize,
    j: usize,
    pl: usize,
}

#[derive(Serialize)]
struct OracleRow {
    word: Word,
    prefix: usize,
    fast: usize,
    oracle: usize,
}

fn oracle_mismatch(w: &Word) -> Option<OracleRow> {
    let fast = pl_profile_fast(w);
    let oracle = pl_oracle_prefixes(w);
    let i = fast
        .pl()
        .iter()
        .zip(&oracle)
        .position(|(&f, &o)| f as usize != o)?;
    Some(OracleRow {
        word: w.clone(),
        prefix: i,
        fast: fast.pl()[i] as usize,
        oracle: oracle[i],
    })
}

#[derive(Serialize)]
struct PeriodRow {
    word: Word,
    period: usize,
    check: &'static str,
}

fn periodicity_failures(w: &Word) -> anyhow::Result<Vec<PeriodRow>> {
    let mut out = Vec::new();
    if w.len() < 2 || !w.is_palindrome() {
        return Ok(out);
    }
    for e in period_set(w)? {
        let ok = decompose_periodic_palindrome(w, e.root_length).is_ok_and(|d| {
            d.reconstruct() == *w && d.a.is_palindrome() && d.b.is_palindrome() && !d.b.is_empty()
        });
        if !ok {
            out.push(PeriodRow {
                word: w.clone(),
                period: e.root_length,
                check: "decompose",
            });
        }
    }
    for u in w
        .palindromic_prefixes()
        .into_iter()
        .filter(|&l| l > 0 && l < w.len())
    {
        let p = period_from_palindromic_affix(w, &w.prefix(u))?;
        if p != w.len() - u || !has_period(w.symbols(), p) {
            out.push(PeriodRow {
                word: w.clone(),
                period: p,
                check: "palindromic-prefix",
            });
        }
    }
    Ok(out)
}

fn quad_failed(suite: Suite, r: &QuadReport) -> bool {
    match suite {
        Suite::LemmaDvd => !r.dvd_factor_ok,
        Suite::LemmaCentral => !r.central_witness_ok,
        _ => !r.theorem_ok,
    }
}

fn describe_gaps(quads: &[DeltaQuad], reports: &[QuadReport]) -> anyhow::Result<()> {
    let mut shown = 0;
    for (q, _) in quads
        .iter()
        .zip(reports)
        .filter(|(_, r)| !r.central_witness_ok)
    {
        for gap in central_gaps(q)? {
            if shown == 3 {
                return Ok(());
            }
            shown += 1;
            let degenerate = match &gap.degenerate {
                Some(wit) => format!("part {} has the γ=0 form with p={}", wit.j, wit.p),
                None => "no γ=0 part either".into(),
            };
            eprintln!(
                "  (u={}, v={}, d={}, n={}): MPF {} has no γ>=1 central part; {degenerate}",
                q.u(),
                q.v(),
                q.d(),
                q.n(),
                gap.factorization
            );
        }
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs, file: &FileConfig) -> anyhow::Result<()> {
    let c = resolve(args, file)?;
    let path = args.output.output.clone().or(file.output.clone());
    let mut report = Report::new("verify", &c, c.format)?;
    let (checked, failures) = match c.suite {
        Suite::ConcatInequalities => {
            let ws = words(&c)?;
            let rows: Vec<ConcatRow> = ws
                .par_iter()
                .flat_map_iter(concat_violations)
                .collect();
            for r in &rows {
                report.row(r)?;
            }
            (ws.len(), rows.len())
        }
        Suite::MpfInfix => {
            let ws = words(&c)?;
            let found: Vec<Option<InfixRow>> = ws
                .par_iter()
                .map(|w| {
                    Ok(mpf_infix_violation(w)?.map(|v| InfixRow {
                        word: w.clone(),
                        factorization: v.factorization.to_string(),
                        i: v.i,
                        j: v.j,
                        pl: v.pl,
                    }))
                })
                .collect::<palinkit::Result<_>>()?;
            let rows: Vec<InfixRow> = found.into_iter().flatten().collect();
            for r in &rows {
                report.row(r)?;
            }
            (ws.len(), rows.len())
        }
        Suite::OracleEquivalence => {
            let mut ws = words(&c)?;
            let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
            let alphabet = Alphabet::digits(c.alpha.max(2))?;
            for _ in 0..c.random_count {
                let symbols = (0..c.random_len)
                    .map(|_| alphabet.symbols()[rng.gen_range(0..c.alpha)])
                    .collect();
                ws.push(Word::from_symbols(symbols));
            }
            let rows: Vec<OracleRow> = ws.par_iter().filter_map(oracle_mismatch).collect();
            for r in &rows {
                report.row(r)?;
            }
            (ws.len(), rows.len())
        }
        Suite::Periodicity => {
            let ws = words(&c)?;
            let found: Vec<Vec<PeriodRow>> = ws
                .par_iter()
                .map(periodicity_failures)
                .collect::<anyhow::Result<_>>()?;
            let rows: Vec<PeriodRow> = found.into_iter().flatten().collect();
            for r in &rows {
                report.row(r)?;
            }
            (ws.len(), rows.len())
        }
        Suite::LemmaDvd | Suite::LemmaCentral | Suite::MainTheorem => {
            let quads = delta_enumerate(c.alpha, c.max_d, c.max_v, c.n_slack)?;
            let reports = verify_all(&quads)?;
            for r in &reports {
                report.row(r)?;
            }
            let failures = reports.iter().filter(|r| quad_failed(c.suite, r)).count();
            if c.suite == Suite::LemmaCentral && failures > 0 {
                describe_gaps(&quads, &reports)?;
            }
            (quads.len(), failures)
        }
    };
    report.finish(path.as_deref())?;
    eprintln!(
        "{}: {checked} checked, {failures} failed",
        suite_name(c.suite)
    );
    if failures > 0 {
        return Err(Failed {
            suite: c.suite,
            failures,
        }
        .into());
    }
    Ok(())
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}
