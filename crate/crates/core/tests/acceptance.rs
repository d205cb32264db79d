// Acceptance run: one PASS/FAIL line per criterion.
//
// A known-red criterion prints FAIL but does not fail the run as long as its
// failure matches the pinned counterexample profile exactly.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use palinkit::delta::{
    central_gaps, delta_enumerate, find_central_palindrome, verify_all, witness_is_valid,
};
use palinkit::omega::{hunt_periodic_palindromes, scan_omega};
use palinkit::palen::{
    check_mpf_infix, check_palindrome_append, check_subadditivity, check_triangle, mpf_enumerate,
    pl_oracle, pl_oracle_prefixes, pl_profile_fast,
};
use palinkit::periodicity::{
    decompose_periodic_palindrome, has_period, period_from_palindromic_affix, period_set,
};
use palinkit::wordgen::{all_words, morphic_prefix, periodic_prefix, Morphism};
use palinkit::{Alphabet, Symbol, Word};

const RANDOM_SEED: u64 = 0x5eed_2024;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Failed, with the failure matching the pinned profile.
    KnownRed(String),
}

fn timed(limit: Duration, elapsed: Duration, detail: String, ok: bool) -> Outcome {
    let detail = format!("{detail}; {:.2?} (limit {:?})", elapsed, limit);
    if ok && elapsed <= limit {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn binary_upto(max_len: usize) -> Vec<Word> {
    let alphabet = Alphabet::digits(2).unwrap();
    (1..=max_len)
        .flat_map(|n| all_words(&alphabet, n).collect::<Vec<_>>())
        .collect()
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let w = Word::parse("011001").unwrap();
    let pl = pl_profile_fast(&w).value();
    let mut got: Vec<String> = mpf_enumerate(&w, None)
        .unwrap()
        .iter()
        .map(|f| f.to_string())
        .collect();
    got.sort();
    let ok = pl == 3 && pl_oracle(&w) == 3 && got == ["(0)(1)(1001)", "(0110)(0)(1)"];
    timed(
        Duration::from_secs(1),
        start.elapsed(),
        format!("PL=3, MPF={got:?}"),
        ok,
    )
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let words = binary_upto(16);
    let exhaustive_bad = words
        .par_iter()
        .filter(|w| {
            let fast: Vec<usize> = pl_profile_fast(w)
                .pl()
                .iter()
                .map(|&x| x as usize)
                .collect();
            fast != pl_oracle_prefixes(w)
        })
        .count();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let randoms: Vec<Word> = (0..1000)
        .map(|i| {
            let sigma = 2 + (i % 3) as u8;
            let bytes: Vec<u8> = (0..10_000)
                .map(|_| b'a' + rng.gen_range(0..sigma))
                .collect();
            Word::from_bytes(&bytes)
        })
        .collect();
    let random_bad = randoms
        .par_iter()
        .filter(|w| {
            let fast: Vec<usize> = pl_profile_fast(w)
                .pl()
                .iter()
                .map(|&x| x as usize)
                .collect();
            fast != pl_oracle_prefixes(w)
        })
        .count();
    timed(
        Duration::from_secs(600),
        start.elapsed(),
        format!(
            "{} binary words, {exhaustive_bad} mismatches; 1000 random words of length 10^4, {random_bad} mismatches",
            words.len()
        ),
        exhaustive_bad == 0 && random_bad == 0,
    )
}

fn concat_inequalities() -> Outcome {
    let mut words = binary_upto(12);
    words.push(Word::empty());
    let checked: usize = words.par_iter().map(|w| w.len() + 1).sum();
    let bad = words
        .par_iter()
        .map(|w| {
            (0..=w.len())
                .filter(|&k| {
                    let (x, y) = (w.prefix(k), w.suffix(w.len() - k));
                    !(check_subadditivity(&x, &y)
                        && check_triangle(&x, &y)
                        && check_palindrome_append(&x, &y))
                })
                .count()
        })
        .sum::<usize>();
    let detail = format!("{checked} splits, {bad} violations");
    if bad == 0 {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn mpf_infix() -> Outcome {
    let words = binary_upto(12);
    let bad = words.par_iter().filter(|w| !check_mpf_infix(w)).count();
    let mpfs: usize = words
        .par_iter()
        .map(|w| mpf_enumerate(w, None).unwrap().len())
        .sum();
    let detail = format!(
        "{} words, {mpfs} factorizations, {bad} violations",
        words.len()
    );
    if bad == 0 {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn periodic_palindromes() -> Outcome {
    let pals: Vec<Word> = binary_upto(14)
        .into_iter()
        .filter(Word::is_palindrome)
        .collect();
    let (mut periods, mut prefixes, mut bad) = (0, 0, 0);
    for w in &pals {
        if w.len() < 2 {
            continue;
        }
        for e in period_set(w).unwrap() {
            periods += 1;
            let ok = match decompose_periodic_palindrome(w, e.root_length) {
                Ok(d) => {
                    d.reconstruct() == *w
                        && d.a.is_palindrome()
                        && d.b.is_palindrome()
                        && !d.b.is_empty()
                        && d.period() == e.root_length
                }
                Err(_) => false,
            };
            bad += usize::from(!ok);
        }
        for u_len in w
            .palindromic_prefixes()
            .into_iter()
            .filter(|&l| l > 0 && l < w.len())
        {
            prefixes += 1;
            let p = period_from_palindromic_affix(w, &w.prefix(u_len)).unwrap();
            bad += usize::from(p != w.len() - u_len || !has_period(w.symbols(), p));
        }
    }
    let detail = format!(
        "{} palindromes, {periods} decompositions, {prefixes} prefix periods, {bad} failures",
        pals.len()
    );
    if bad == 0 {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

// Independent brute force over the same 540 quadruples: 24 of them have 36
// minimal factorizations with no central part for γ >= 1, and each of those
// has one of the form p d p^R (γ = 0).
const GAP_QUADS: usize = 24;
const GAP_MPFS: usize = 36;

fn main_theorem() -> Outcome {
    let start = Instant::now();
    let quads = delta_enumerate(2, 4, 3, 2).unwrap();
    let reports = verify_all(&quads).unwrap();
    let dvd_bad = reports.iter().filter(|r| !r.dvd_factor_ok).count();
    let theorem_bad = reports.iter().filter(|r| !r.theorem_ok).count();
    let central_bad = reports.iter().filter(|r| !r.central_witness_ok).count();
    // witnesses that were found are re-validated independently
    let invalid = quads
        .par_iter()
        .filter_map(|q| find_central_palindrome(q).ok().map(|found| (q, found)))
        .filter(|(q, found)| !found.iter().all(|(f, w)| witness_is_valid(q, f, w)))
        .count();
    let gaps: Vec<_> = quads.par_iter().map(|q| central_gaps(q).unwrap()).collect();
    let gap_mpfs: usize = gaps.iter().map(Vec::len).sum();
    let degenerate_missing = gaps
        .iter()
        .flatten()
        .filter(|g| g.degenerate.is_none())
        .count();
    let first = quads
        .iter()
        .zip(&gaps)
        .find(|(_, g)| !g.is_empty())
        .map(|(q, g)| {
            format!(
                "(u={}, v={}, d={}, n={}) {}",
                q.u(),
                q.v(),
                q.d(),
                q.n(),
                g[0].factorization
            )
        })
        .unwrap_or_default();
    let elapsed = start.elapsed();
    let detail = format!(
        "{} quadruples; dvd-factor failures {dvd_bad}; theorem failures {theorem_bad}; \
         quadruples without a γ>=1 central part {central_bad} ({gap_mpfs} MPFs, {degenerate_missing} \
         without a γ=0 part either), e.g. {first}; invalid witnesses {invalid}; {elapsed:.2?}",
        quads.len()
    );
    let rest_ok =
        dvd_bad == 0 && theorem_bad == 0 && invalid == 0 && elapsed <= Duration::from_secs(1800);
    if rest_ok && central_bad == 0 {
        Outcome::Pass(detail)
    } else if rest_ok
        && quads.len() == 540
        && central_bad == GAP_QUADS
        && gap_mpfs == GAP_MPFS
        && degenerate_missing == 0
    {
        Outcome::KnownRed(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn hunt() -> Outcome {
    let start = Instant::now();
    let w = periodic_prefix(&Word::parse("01").unwrap(), 500).unwrap();
    let first = hunt_periodic_palindromes(&w, 2, 50).unwrap();
    let again = hunt_periodic_palindromes(&w, 2, 50).unwrap();
    let elapsed = start.elapsed();
    match first {
        Some(found) => {
            let host = w.factor(found.host.start, found.host.end).unwrap();
            let ok = !found.b.is_empty()
                && found.exponent >= 50
                && host.starts_with(&found.power())
                && again.as_ref() == Some(&found);
            timed(
                Duration::from_secs(10),
                elapsed,
                format!(
                    "a={}, b={}, exponent {}, host [{}, {}]",
                    found.a, found.b, found.exponent, found.host.start, found.host.end
                ),
                ok,
            )
        }
        None => Outcome::Fail("nothing found".into()),
    }
}

fn omega_growth() -> Outcome {
    let r = Word::parse("01").unwrap();
    let counts: Vec<usize> = [100, 200, 400, 800]
        .iter()
        .map(|&n| {
            scan_omega(&periodic_prefix(&r, n).unwrap(), 2)
                .unwrap()
                .members
                .len()
        })
        .collect();
    let ok = counts.windows(2).all(|p| p[0] < p[1]);
    let detail = format!("|Ω| at 100/200/400/800 = {counts:?}");
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn performance() -> Outcome {
    let tm = morphic_prefix(&Morphism::thue_morse(), Symbol(b'0'), 1_000_000).unwrap();
    let start = Instant::now();
    let profile = pl_profile_fast(&tm);
    let elapsed = start.elapsed();
    let fast_at = profile.pl()[2000] as usize;
    let oracle_at = pl_oracle(&tm.prefix(2000));
    timed(
        Duration::from_secs(10),
        elapsed,
        format!(
            "PL(prefix 10^6)={}, PL(prefix 2000) fast {fast_at} oracle {oracle_at}",
            profile.value()
        ),
        fast_at == oracle_at,
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 worked example 011001", worked_example),
        ("2 oracle equivalence", oracle_equivalence),
        ("3 concatenation inequalities", concat_inequalities),
        ("4 MPF infix property", mpf_infix),
        ("5 periodic palindrome decomposition", periodic_palindromes),
        ("6 main theorem suite", main_theorem),
        ("7 periodic palindrome extraction", hunt),
        ("8 Ω growth on (01)^∞", omega_growth),
        ("9 Thue-Morse 10^6 performance", performance),
    ];
    let mut unexpected = 0;
    for (name, run) in criteria {
        match run() {
            Outcome::Pass(detail) => println!("PASS  {name}: {detail}"),
            Outcome::Fail(detail) => {
                unexpected += 1;
                println!("FAIL  {name}: {detail}");
            }
            Outcome::KnownRed(detail) => {
                println!("FAIL  {name} (known counterexample, see README): {detail}")
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
