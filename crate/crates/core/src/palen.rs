//! Palindromic length.
//!
//! `PL(w)` is the least number of nonempty palindromes whose concatenation is
//! `w`, with `PL(ε) = 0`. Two independent routes are provided:
//!
//! * [`pl_oracle`]: the textbook recurrence `pl[i] = 1 + min pl[i - ℓ]` over
//!   palindromic suffixes `ℓ`, tracking those suffixes directly. Quadratic in
//!   the worst case, no tree involved.
//! * [`pl_profile_fast`]: the same recurrence evaluated one eertree series at
//!   a time, O(n log n).

use std::fmt;

use serde::Serialize;

use crate::eertree::Eertree;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// Words longer than this need an explicit limit for [`mpf_enumerate`].
pub const MPF_UNLIMITED_MAX_LEN: usize = 100_000;

/// `PL` of every prefix of a word, plus what is needed to rebuild factorizations.
#[derive(Clone, Debug)]
pub struct PLProfile {
    word: Word,
    pl: Vec<u32>,
    tree: Eertree,
}

impl PLProfile {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `pl()[i]` is `PL` of the length-`i` prefix.
    pub fn pl(&self) -> &[u32] {
        &self.pl
    }

    /// `PL` of the whole word.
    pub fn value(&self) -> usize {
        *self.pl.last().expect("pl[0] always exists") as usize
    }

    pub fn tree(&self) -> &Eertree {
        &self.tree
    }

    /// Lengths `ℓ` of palindromic suffixes of prefix `i` with `pl[i] = pl[i - ℓ] + 1`,
    /// shortest first. Empty for `i = 0`.
    pub fn backpointers(&self, i: usize) -> Result<Vec<usize>> {
        let target = self.pl.get(i).ok_or(Error::Range {
            i,
            j: i,
            len: self.word.len(),
        })?;
        let mut lengths: Vec<usize> = self
            .tree
            .suffix_chain(self.tree.last_at(i)?)
            .map(|v| self.tree.node(v).length as usize)
            .filter(|&len| self.pl[i - len] + 1 == *target)
            .collect();
        lengths.reverse();
        Ok(lengths)
    }
}

/// A factorization into nonempty palindromes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Factorization {
    parts: Vec<Word>,
}

impl Factorization {
    /// Checks that every part is a nonempty palindrome.
    pub fn new(parts: Vec<Word>) -> Result<Self> {
        if let Some(bad) = parts.iter().find(|p| p.is_empty() || !p.is_palindrome()) {
            return Err(Error::Precondition(format!(
                "part `{bad}` is not a nonempty palindrome"
            )));
        }
        Ok(Factorization { parts })
    }

    pub fn parts(&self) -> &[Word] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_lengths(&self) -> Vec<usize> {
        self.parts.iter().map(Word::len).collect()
    }

    /// Concatenation of parts `i..=j`, 1-based.
    pub fn infix(&self, i: usize, j: usize) -> Word {
        self.parts[i - 1..j]
            .iter()
            .fold(Word::empty(), |acc, p| acc.concat(p))
    }

    pub fn concat(&self) -> Word {
        self.infix(1, self.parts.len())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.parts {
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

/// `PL(w)` by direct dynamic programming.
pub fn pl_oracle(w: &Word) -> usize {
    pl_oracle_prefixes(w).pop().unwrap_or(0)
}

/// `PL` of every prefix by direct dynamic programming; entry 0 is 0.
pub fn pl_oracle_prefixes(w: &Word) -> Vec<usize> {
    let s: &[Symbol] = w.symbols();
    let mut pl = vec![0usize; s.len() + 1];
    // start positions l with s[l..i] a nonempty palindrome
    let mut starts: Vec<usize> = Vec::new();
    let mut next: Vec<usize> = Vec::new();
    for i in 0..s.len() {
        next.clear();
        // s[l-1..=i] is a palindrome iff s[l..i] is one and s[l-1] == s[i];
        // the empty palindrome s[i..i] seeds the even length 2 case
        for &l in starts.iter().chain(std::iter::once(&i)) {
            if l >= 1 && s[l - 1] == s[i] {
                next.push(l - 1);
            }
        }
        next.push(i);
        pl[i + 1] = 1 + next.iter().map(|&l| pl[l]).min().expect("single letter");
        std::mem::swap(&mut starts, &mut next);
    }
    pl
}

/// Per-prefix palindromic length in O(n log n) via eertree series links.
pub fn pl_profile_fast(w: &Word) -> PLProfile {
    let n = w.len();
    let mut tree = Eertree::new(Alphabet::of(w));
    let mut pl = vec![0u32; n + 1];
    // best pl[i - ℓ] over the series headed by each node, refreshed when the
    // node is visited; valid because the previous visit of the series tail
    // happened exactly diff positions earlier
    let mut series_best: Vec<u32> = vec![u32::MAX; 2];
    for (i, &s) in w.symbols().iter().enumerate() {
        let end = i + 1;
        let mut v = tree
            .append(s)
            .expect("symbol drawn from the word's own alphabet");
        series_best.resize(tree.node_count(), u32::MAX);
        let mut best = u32::MAX;
        while tree.node(v).length > 0 {
            let node = tree.node(v);
            let series = tree.node(node.series_link);
            let shortest = (series.length.max(0) as u32 + node.diff) as usize;
            let mut candidate = pl[end - shortest];
            let link = node.suffix_link;
            if node.diff == tree.node(link).diff {
                candidate = candidate.min(series_best[link as usize]);
            }
            series_best[v as usize] = candidate;
            best = best.min(candidate + 1);
            v = node.series_link;
        }
        pl[end] = best;
    }
    PLProfile {
        word: w.clone(),
        pl,
        tree,
    }
}

/// `PL(w)` via [`pl_profile_fast`].
pub fn palindromic_length(w: &Word) -> usize {
    pl_profile_fast(w).value()
}

/// All minimal palindromic factorizations of `w`, at most `limit` of them.
///
/// Factorizations are produced depth-first from the end of the word; at each
/// branch the shortest last part is tried first. Distinct cut sequences give
/// distinct tuples, so no deduplication pass is needed.
pub fn mpf_enumerate(w: &Word, limit: Option<usize>) -> Result<Vec<Factorization>> {
    if w.is_empty() {
        return Err(Error::Precondition(
            "the empty word has no palindromic factorization".into(),
        ));
    }
    if limit.is_none() && w.len() > MPF_UNLIMITED_MAX_LEN {
        return Err(Error::Resource(format!(
            "word of length {} exceeds {MPF_UNLIMITED_MAX_LEN}; pass a limit",
            w.len()
        )));
    }
    let profile = pl_profile_fast(w);
    mpf_from_profile(&profile, limit)
}

/// [`mpf_enumerate`] over an already computed profile.
pub fn mpf_from_profile(profile: &PLProfile, limit: Option<usize>) -> Result<Vec<Factorization>> {
    let w = profile.word();
    let n = w.len();
    let mut out = Vec::new();
    if n == 0 || limit == Some(0) {
        return Ok(out);
    }
    // cuts[k] is the position whose choices are frames[k]
    let mut cuts = vec![n];
    let mut frames = vec![(profile.backpointers(n)?, 0usize)];
    while let Some((choices, next)) = frames.last_mut() {
        let Some(&len) = choices.get(*next) else {
            frames.pop();
            cuts.pop();
            continue;
        };
        *next += 1;
        let pos = cuts.last().expect("aligned with frames") - len;
        if pos > 0 {
            cuts.push(pos);
            frames.push((profile.backpointers(pos)?, 0));
            continue;
        }
        let mut bounds: Vec<usize> = cuts.iter().rev().copied().collect();
        bounds.insert(0, 0);
        let parts = bounds
            .windows(2)
            .map(|b| Word::from_symbols(w.symbols()[b[0]..b[1]].to_vec()))
            .collect();
        out.push(Factorization { parts });
        if limit.is_some_and(|l| out.len() >= l) {
            break;
        }
    }
    Ok(out)
}

/// `PL(xy) <= PL(x) + PL(y)`.
pub fn check_subadditivity(x: &Word, y: &Word) -> bool {
    pl_oracle(&x.concat(y)) <= pl_oracle(x) + pl_oracle(y)
}

/// `PL(y) <= PL(x) + PL(xy)` and `PL(x) <= PL(y) + PL(xy)`.
pub fn check_triangle(x: &Word, y: &Word) -> bool {
    let (px, py, pxy) = (pl_oracle(x), pl_oracle(y), pl_oracle(&x.concat(y)));
    py <= px + pxy && px <= py + pxy
}

/// `|PL(xy) - PL(x)| <= 1` when `y` is a palindrome, and
/// `|PL(x) - PL(y)| <= 1` when `xy` is a palindrome.
pub fn check_palindrome_append(x: &Word, y: &Word) -> bool {
    let xy = x.concat(y);
    let (px, py, pxy) = (pl_oracle(x), pl_oracle(y), pl_oracle(&xy));
    let append_ok = !y.is_palindrome() || pxy.abs_diff(px) <= 1;
    let split_ok = !xy.is_palindrome() || px.abs_diff(py) <= 1;
    append_ok && split_ok
}

/// A factorization and 1-based part range `i..=j` whose concatenation has
/// palindromic length different from `j - i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfixViolation {
    pub factorization: Factorization,
    pub i: usize,
    pub j: usize,
    pub pl: usize,
}

/// First violation of `PL(t_i ... t_j) = j - i + 1` over every MPF of `w`.
pub fn mpf_infix_violation(w: &Word) -> Result<Option<InfixViolation>> {
    if w.is_empty() {
        return Ok(None);
    }
    for f in mpf_enumerate(w, None)? {
        let k = f.len();
        for i in 1..=k {
            for j in i..=k {
                let pl = pl_oracle(&f.infix(i, j));
                if pl != j - i + 1 {
                    return Ok(Some(InfixViolation {
                        factorization: f,
                        i,
                        j,
                        pl,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Whether every infix of every MPF of `w` has the expected palindromic length.
pub fn check_mpf_infix(w: &Word) -> bool {
    matches!(mpf_infix_violation(w), Ok(None))
}
