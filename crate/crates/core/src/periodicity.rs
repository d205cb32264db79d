//! Periods of finite words and the structure of periodic palindromes.
//!
//! A word `w` has period `p` (with `1 <= p < |w|`) when `w[i] = w[i + p]`
//! wherever both sides are defined; the matching root is the length-`p`
//! prefix and the exponent is `|w| / p`, kept as an exact fraction.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::word::{Symbol, Word};

/// One element of the period set: the root length and the exponent `|w| / |r| > 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodEntry {
    pub root_length: usize,
    pub exponent: Ratio<usize>,
}

impl PeriodEntry {
    /// The root `r`, i.e. the prefix of `w` of length `root_length`.
    pub fn root(&self, w: &Word) -> Word {
        w.prefix(self.root_length)
    }
}

/// A periodic palindrome written as `(ab)^k a` with `a`, `b` palindromes and `b` nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodDecomposition {
    pub a: Word,
    pub b: Word,
    pub exponent_k: usize,
    /// Whether the trailing `a` is nonempty.
    pub tail: bool,
}

impl PeriodDecomposition {
    pub fn period(&self) -> usize {
        self.a.len() + self.b.len()
    }

    /// `(ab)^k a`.
    pub fn reconstruct(&self) -> Word {
        self.a.concat(&self.b).pow(self.exponent_k).concat(&self.a)
    }
}

fn nonempty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::Domain("the empty word has no periods".into()))
    } else {
        Ok(())
    }
}

/// Failure function: entry `i` is the longest proper border of `w[1, i+1]`.
pub fn border_array(w: &Word) -> Result<Vec<usize>> {
    nonempty(w)?;
    Ok(borders(w.symbols()))
}

fn borders(s: &[Symbol]) -> Vec<usize> {
    let mut border = vec![0usize; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// Direct shift test: `s[i] == s[i + p]` for all valid `i`.
pub fn has_period(s: &[Symbol], p: usize) -> bool {
    p >= 1 && p < s.len() && s.iter().zip(&s[p..]).all(|(x, y)| x == y)
}

/// All proper periods of `w` in increasing order, each with its exponent.
pub fn period_set(w: &Word) -> Result<Vec<PeriodEntry>> {
    let border = border_array(w)?;
    let n = w.len();
    // periods are exactly n - b for the nonzero borders b of w
    let mut periods = Vec::new();
    let mut b = border[n - 1];
    while b > 0 {
        periods.push(n - b);
        b = border[b - 1];
    }
    Ok(periods
        .into_iter()
        .map(|p| PeriodEntry {
            root_length: p,
            exponent: Ratio::new(n, p),
        })
        .collect())
}

/// Least proper period, or `None` when `w` has no period with exponent above 1.
pub fn min_period(w: &Word) -> Result<Option<usize>> {
    let border = border_array(w)?;
    let b = border[w.len() - 1];
    Ok((b > 0).then(|| w.len() - b))
}

/// Splits a palindrome with period `p` into `(ab)^k a`.
///
/// The split is forced by lengths: `|w| = k p + |a|` with `|a| < p`, so
/// `|a| = |w| mod p`. Both parts are checked to be palindromes.
pub fn decompose_periodic_palindrome(w: &Word, p: usize) -> Result<PeriodDecomposition> {
    if w.is_empty() || !w.is_palindrome() {
        return Err(Error::Precondition(format!(
            "`{w}` is not a nonempty palindrome"
        )));
    }
    if !has_period(w.symbols(), p) {
        return Err(Error::Precondition(format!("{p} is not a period of `{w}`")));
    }
    let n = w.len();
    let a_len = n % p;
    let a = w.prefix(a_len);
    let b = Word::from_symbols(w.symbols()[a_len..p].to_vec());
    let decomposition = PeriodDecomposition {
        tail: !a.is_empty(),
        a,
        b,
        exponent_k: n / p,
    };
    if !decomposition.a.is_palindrome()
        || !decomposition.b.is_palindrome()
        || decomposition.reconstruct() != *w
    {
        return Err(Error::Invariant(format!(
            "period {p} of palindrome `{w}` gives non-palindromic split a=`{}`, b=`{}`",
            decomposition.a, decomposition.b
        )));
    }
    Ok(decomposition)
}

/// Returns `|w| - |u|` for a palindrome `w` and a nonempty proper palindromic
/// prefix or suffix `u`, after checking it is a period of `w`.
///
/// # Panics
///
/// If the difference is not a period; that would contradict the classical
/// lemma this function exercises.
pub fn period_from_palindromic_affix(w: &Word, u: &Word) -> Result<usize> {
    if !w.is_palindrome() {
        return Err(Error::Precondition(format!("`{w}` is not a palindrome")));
    }
    if u.is_empty() || u.len() >= w.len() || !u.is_palindrome() {
        return Err(Error::Precondition(format!(
            "`{u}` is not a nonempty proper palindrome of `{w}`"
        )));
    }
    if !w.starts_with(u) && !w.ends_with(u) {
        return Err(Error::Precondition(format!(
            "`{u}` is neither a prefix nor a suffix of `{w}`"
        )));
    }
    let p = w.len() - u.len();
    assert!(
        has_period(w.symbols(), p),
        "{p} is not a period of palindrome `{w}` with palindromic affix `{u}`"
    );
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn border_examples() {
        assert_eq!(border_array(&w("aabaa")).unwrap(), [0, 1, 0, 1, 2]);
        assert_eq!(border_array(&w("aaaa")).unwrap(), [0, 1, 2, 3]);
        assert_eq!(border_array(&w("ab")).unwrap(), [0, 0]);
        assert!(matches!(
            border_array(&Word::empty()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn period_set_examples() {
        let ps = period_set(&w("12341")).unwrap();
        assert_eq!(
            ps,
            [PeriodEntry {
                root_length: 4,
                exponent: Ratio::new(5, 4)
            }]
        );
        assert_eq!(ps[0].root(&w("12341")), w("1234"));

        let ps = period_set(&w("12341234123")).unwrap();
        assert!(ps.contains(&PeriodEntry {
            root_length: 4,
            exponent: Ratio::new(11, 4)
        }));

        assert!(period_set(&w("ab")).unwrap().is_empty());
        assert!(period_set(&Word::empty()).is_err());
    }

    #[test]
    fn exponent_is_reduced() {
        let ps = period_set(&w("abababab")).unwrap();
        let p6 = ps.iter().find(|e| e.root_length == 6).unwrap();
        assert_eq!(p6.exponent, Ratio::new(4, 3));
        assert_eq!(*p6.exponent.numer(), 4);
    }

    #[test]
    fn min_period_examples() {
        assert_eq!(min_period(&w("aba")).unwrap(), Some(2));
        assert_eq!(min_period(&w("aaaa")).unwrap(), Some(1));
        assert_eq!(min_period(&w("ab")).unwrap(), None);
        assert_eq!(min_period(&w("a")).unwrap(), None);
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_periodic_palindrome(&w("aabaa"), 3).unwrap();
        assert_eq!((d.a, d.b, d.exponent_k, d.tail), (w("aa"), w("b"), 1, true));

        let d = decompose_periodic_palindrome(&w("abababa"), 2).unwrap();
        assert_eq!((d.a, d.b, d.exponent_k), (w("a"), w("b"), 3));

        let d = decompose_periodic_palindrome(&w("aaaa"), 1).unwrap();
        assert_eq!(
            (d.a, d.b, d.exponent_k, d.tail),
            (Word::empty(), w("a"), 4, false)
        );
    }

    #[test]
    fn decompose_rejects_bad_input() {
        assert!(matches!(
            decompose_periodic_palindrome(&w("aab"), 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            decompose_periodic_palindrome(&w("aabaa"), 2),
            Err(Error::Precondition(_))
        ));
        // p = |w| is not a period under the exponent > 1 convention
        assert!(decompose_periodic_palindrome(&w("aba"), 3).is_err());
        assert!(decompose_periodic_palindrome(&Word::empty(), 1).is_err());
    }

    #[test]
    fn affix_examples() {
        assert_eq!(
            period_from_palindromic_affix(&w("aabaa"), &w("aa")).unwrap(),
            3
        );
        assert_eq!(
            period_from_palindromic_affix(&w("abababa"), &w("ababa")).unwrap(),
            2
        );
        assert_eq!(
            period_from_palindromic_affix(&w("aaa"), &w("a")).unwrap(),
            2
        );
    }

    #[test]
    fn affix_preconditions() {
        assert!(period_from_palindromic_affix(&w("ab"), &w("a")).is_err());
        assert!(period_from_palindromic_affix(&w("aba"), &w("aba")).is_err());
        assert!(period_from_palindromic_affix(&w("aba"), &Word::empty()).is_err());
        assert!(period_from_palindromic_affix(&w("abcba"), &w("b")).is_err());
    }
}
