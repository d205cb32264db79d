//! Factors with many palindromic prefixes.
//!
//! For a length `n` and bound `k`, the threshold is `τ(n, k) = (n / k)^(1/k)`.
//! A factor `t` is an Ω-member when its number of palindromic prefixes
//! (the empty prefix included) reaches `τ(|t|, k)`. Membership is decided
//! exactly as `count^k · k >= |t|`, never through floating-point roots.
//!
//! The extraction side follows the ratio argument on consecutive palindromic
//! prefix lengths: if `μ_{i+1} / μ_i <= 1 + 1/j`, the longer prefix is a
//! palindrome with period `μ_{i+1} - μ_i` and splits as `(ab)^k a` with `k >= j`.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::palen::pl_profile_fast;
use crate::periodicity::{decompose_periodic_palindrome, period_from_palindromic_affix};
use crate::word::{PalindromeIndex, Word};

/// Longest scanned word for which the optional `max PL` over factors is computed.
pub const PL_BOUND_CHECK_MAX_LEN: usize = 200;

/// How the palindromic-prefix count is compared with `τ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    /// `count >= τ`, the formal definition.
    #[default]
    AtLeast,
    /// `count > τ`.
    Greater,
}

/// `τ(n, k) = (n / k)^(1/k)`.
pub fn tau(n: usize, k: u32) -> f64 {
    (n as f64 / k as f64).powf(1.0 / k as f64)
}

/// Exact comparison of `count` against `τ(n, k)`.
pub fn meets_threshold(count: usize, n: usize, k: u32, mode: Comparison) -> bool {
    let lhs = (count as u128)
        .checked_pow(k)
        .and_then(|p| p.checked_mul(k as u128));
    match lhs {
        Some(lhs) => match mode {
            Comparison::AtLeast => lhs >= n as u128,
            Comparison::Greater => lhs > n as u128,
        },
        None => {
            let lhs = BigUint::from(count).pow(k) * BigUint::from(k);
            let n = BigUint::from(n);
            match mode {
                Comparison::AtLeast => lhs >= n,
                Comparison::Greater => lhs > n,
            }
        }
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    Ok(())
}

/// Ω-membership of a nonempty word under the formal `>=` comparison.
pub fn omega_member(t: &Word, k: u32) -> Result<bool> {
    omega_member_with(t, k, Comparison::AtLeast)
}

pub fn omega_member_with(t: &Word, k: u32, mode: Comparison) -> Result<bool> {
    check_k(k)?;
    if t.is_empty() {
        return Err(Error::Precondition(
            "Ω membership is defined for nonempty factors".into(),
        ));
    }
    Ok(meets_threshold(
        t.palindromic_prefixes().len(),
        t.len(),
        k,
        mode,
    ))
}

/// One distinct factor in Ω, at its leftmost occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaMember {
    /// 1-based start.
    pub start: usize,
    /// 1-based inclusive end.
    pub end: usize,
    pub length: usize,
    pub count_with_eps: usize,
    pub count_without_eps: usize,
    /// The threshold is `(threshold_num / threshold_den_power)^(1 / threshold_den_power)`.
    pub threshold_num: usize,
    pub threshold_den_power: u32,
}

impl OmegaMember {
    pub fn threshold(&self) -> f64 {
        tau(self.threshold_num, self.threshold_den_power)
    }

    pub fn factor(&self, w: &Word) -> Word {
        w.factor(self.start, self.end)
            .expect("member positions come from w")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub k: u32,
    pub mode: Comparison,
    pub scanned_prefix_length: usize,
    pub distinct_factors: usize,
    /// Sorted by length, then content.
    pub members: Vec<OmegaMember>,
    /// `max PL` over all factors, computed when the word is short enough.
    pub max_factor_pl: Option<usize>,
}

impl OmegaReport {
    /// `None` when the bound was not computed.
    pub fn pl_bound_holds(&self) -> Option<bool> {
        self.max_factor_pl.map(|m| m <= self.k as usize)
    }

    pub fn max_count(&self) -> usize {
        self.members
            .iter()
            .map(|m| m.count_with_eps)
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ScanOptions {
    pub mode: Comparison,
    /// Compute `max PL` over all factors (only for `|w| <= PL_BOUND_CHECK_MAX_LEN`).
    pub check_pl_bound: bool,
}

/// Longest previous factor: `lpf[i]` is the longest prefix of `w[i..]` that
/// also starts at some `j < i`.
fn longest_previous_factor(w: &Word) -> Vec<usize> {
    let s = w.symbols();
    let n = s.len();
    let mut lpf = vec![0usize; n];
    // row[j] = lcp(i + 1, j) for j <= i
    let mut row = vec![0usize; n + 1];
    let mut cur = vec![0usize; n + 1];
    for i in (0..n).rev() {
        for j in 0..i {
            cur[j] = if s[i] == s[j] { row[j + 1] + 1 } else { 0 };
        }
        lpf[i] = cur[..i].iter().copied().max().unwrap_or(0);
        cur[i] = 0;
        std::mem::swap(&mut row, &mut cur);
    }
    lpf
}

/// Largest `PL` over all factors of `w`.
pub fn max_factor_pl(w: &Word) -> usize {
    (0..w.len())
        .into_par_iter()
        .map(|i| {
            let suffix = w.suffix(w.len() - i);
            pl_profile_fast(&suffix)
                .pl()
                .iter()
                .copied()
                .max()
                .unwrap_or(0) as usize
        })
        .max()
        .unwrap_or(0)
}

/// All distinct factors of `w` that belong to Ω under `>=`.
pub fn scan_omega(w: &Word, k: u32) -> Result<OmegaReport> {
    scan_omega_with(w, k, ScanOptions::default())
}

pub fn scan_omega_with(w: &Word, k: u32, options: ScanOptions) -> Result<OmegaReport> {
    check_k(k)?;
    let n = w.len();
    let index = PalindromeIndex::new(w.symbols());
    let lpf = longest_previous_factor(w);

    let per_start: Vec<(usize, Vec<OmegaMember>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut members = Vec::new();
            let mut nonempty = 0usize;
            for len in 1..=n - i {
                if index.is_palindrome(i, i + len) {
                    nonempty += 1;
                }
                if len <= lpf[i] {
                    continue;
                }
                if meets_threshold(nonempty + 1, len, k, options.mode) {
                    members.push(OmegaMember {
                        start: i + 1,
                        end: i + len,
                        length: len,
                        count_with_eps: nonempty + 1,
                        count_without_eps: nonempty,
                        threshold_num: len,
                        threshold_den_power: k,
                    });
                }
            }
            (n - i - lpf[i].min(n - i), members)
        })
        .collect();

    let distinct_factors = per_start.iter().map(|(d, _)| d).sum();
    let s = w.symbols();
    let mut members: Vec<OmegaMember> = per_start.into_iter().flat_map(|(_, m)| m).collect();
    members.par_sort_by(|x, y| {
        (x.length, &s[x.start - 1..x.end]).cmp(&(y.length, &s[y.start - 1..y.end]))
    });

    let max_factor_pl =
        (options.check_pl_bound && n <= PL_BOUND_CHECK_MAX_LEN).then(|| max_factor_pl(w));
    Ok(OmegaReport {
        k,
        mode: options.mode,
        scanned_prefix_length: n,
        distinct_factors,
        members,
        max_factor_pl,
    })
}

/// A factor location, 1-based and inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FactorRef {
    pub start: usize,
    pub end: usize,
}

/// Palindromes `a`, `b` (`b` nonempty) with `(ab)^exponent` a prefix of the host factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicPalPrefix {
    pub a: Word,
    pub b: Word,
    pub exponent: usize,
    pub host: FactorRef,
}

impl PeriodicPalPrefix {
    /// `(ab)^exponent`.
    pub fn power(&self) -> Word {
        self.a.concat(&self.b).pow(self.exponent)
    }
}

/// Looks for consecutive nonempty palindromic prefix lengths `μ_i < μ_{i+1}`
/// of `t` with `μ_{i+1} / μ_i <= 1 + 1/j` and turns the first such pair into
/// a `(ab)^k` prefix with `k >= j`. The host is all of `t`.
pub fn extract_periodic_prefix(t: &Word, j: usize) -> Result<Option<PeriodicPalPrefix>> {
    if j == 0 {
        return Err(Error::Domain("j must be positive".into()));
    }
    let mu: Vec<usize> = t.palindromic_prefixes().into_iter().skip(1).collect();
    let Some(pair) = mu.windows(2).find(|p| j * p[1] <= (j + 1) * p[0]) else {
        return Ok(None);
    };
    let (short, long) = (pair[0], pair[1]);
    let v = t.prefix(long);
    let period = period_from_palindromic_affix(&v, &t.prefix(short))?;
    let split = decompose_periodic_palindrome(&v, period)?;
    let found = PeriodicPalPrefix {
        a: split.a,
        b: split.b,
        exponent: split.exponent_k,
        host: FactorRef {
            start: 1,
            end: t.len(),
        },
    };
    if found.exponent < j || !t.starts_with(&found.power()) {
        return Err(Error::Invariant(format!(
            "prefix `{v}` of `{t}` gave a=`{}`, b=`{}`, exponent {} for j={j}",
            found.a, found.b, found.exponent
        )));
    }
    Ok(Some(found))
}

/// Scans Ω and tries [`extract_periodic_prefix`] on members with the most
/// palindromic prefixes first. For `j = 1` any member yields the trivial
/// witness `a = ε`, `b` = its first letter.
pub fn hunt_periodic_palindromes(w: &Word, k: u32, j: usize) -> Result<Option<PeriodicPalPrefix>> {
    if j == 0 {
        return Err(Error::Domain("j must be positive".into()));
    }
    let report = scan_omega(w, k)?;
    let mut order: Vec<&OmegaMember> = report.members.iter().collect();
    order.sort_by_key(|m| std::cmp::Reverse(m.count_with_eps));
    for m in &order {
        if let Some(mut found) = extract_periodic_prefix(&m.factor(w), j)? {
            found.host = FactorRef {
                start: m.start,
                end: m.end,
            };
            return Ok(Some(found));
        }
    }
    if j == 1 {
        if let Some(m) = order.first() {
            return Ok(Some(PeriodicPalPrefix {
                a: Word::empty(),
                b: w.factor(m.start, m.start)?,
                exponent: 1,
                host: FactorRef {
                    start: m.start,
                    end: m.end,
                },
            }));
        }
    }
    Ok(None)
}

/// Smallest `N0 <= limit` with `τ(n, k) > ln n` for every `N0 <= n <= limit`,
/// or `None` when the inequality fails at `limit` itself.
pub fn tau_exceeds_ln_from(k: u32, limit: usize) -> Option<usize> {
    let mut last_failure = 0;
    for n in 1..=limit {
        if tau(n, k) <= (n as f64).ln() {
            last_failure = n;
        }
    }
    (last_failure < limit).then_some(last_failure + 1)
}
