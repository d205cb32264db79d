//! Quadruples `(u, v, d, n)` with `d` a nonempty palindrome, `v` a palindrome,
//! `u` a nonempty suffix of `d`, `|dv| = MinPer(dvd)` and `n >= 3 PL(u)`, and
//! checkers for the statements made about `w = u(vd)^n`:
//!
//! * every factor of `w` of length at least `3|vd|` contains `dvd`;
//! * every minimal palindromic factorization of `w` has a part of the form
//!   `p d (vd)^γ p^R` with `p` a proper suffix of `dv` and `γ >= 1`;
//! * `PL(w) >= PL(u)`.
//!
//! Field order is `(u, v, d, n)` everywhere, including serialized reports.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::palen::{mpf_from_profile, pl_oracle, pl_profile_fast, Factorization};
use crate::periodicity::min_period;
use crate::word::{Alphabet, Symbol, Word};

/// Above this length [`check_main_theorem`] skips the oracle cross-check.
pub const ORACLE_CROSS_CHECK_MAX_LEN: usize = 64;

/// A validated quadruple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DeltaQuad {
    u: Word,
    v: Word,
    d: Word,
    n: usize,
}

impl DeltaQuad {
    pub fn new(u: Word, v: Word, d: Word, n: usize) -> Result<Self> {
        if let Some(reason) = delta_violation(&u, &v, &d, n) {
            return Err(Error::Precondition(format!(
                "(u={u}, v={v}, d={d}, n={n}) is not a valid quadruple: {reason}"
            )));
        }
        Ok(DeltaQuad { u, v, d, n })
    }

    pub fn u(&self) -> &Word {
        &self.u
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    pub fn d(&self) -> &Word {
        &self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `vd`.
    pub fn block(&self) -> Word {
        self.v.concat(&self.d)
    }

    /// `u (vd)^n`.
    pub fn word(&self) -> Word {
        self.u.concat(&self.block().pow(self.n))
    }

    /// `dvd`.
    pub fn dvd(&self) -> Word {
        self.d.concat(&self.v).concat(&self.d)
    }
}

fn delta_violation(u: &Word, v: &Word, d: &Word, n: usize) -> Option<&'static str> {
    if d.is_empty() || !d.is_palindrome() {
        return Some("d is not a nonempty palindrome");
    }
    if !v.is_palindrome() {
        return Some("v is not a palindrome");
    }
    if u.is_empty() || !d.ends_with(u) {
        return Some("u is not a nonempty suffix of d");
    }
    let dv = d.concat(v);
    let dvd = dv.concat(d);
    if min_period(&dvd).ok().flatten() != Some(dv.len()) {
        return Some("|dv| is not the minimal period of dvd");
    }
    if n < 3 * pl_oracle(u) {
        return Some("n < 3 PL(u)");
    }
    None
}

/// Whether `(u, v, d, n)` satisfies all quadruple conditions.
pub fn delta_check(u: &Word, v: &Word, d: &Word, n: usize) -> bool {
    delta_violation(u, v, d, n).is_none()
}

/// All palindromes over `alphabet` with length in `min_len..=max_len`, by length then content.
fn palindromes(alphabet: &Alphabet, min_len: usize, max_len: usize) -> Vec<Word> {
    let sigma = alphabet.size();
    let mut out = Vec::new();
    for len in min_len..=max_len {
        let half = len.div_ceil(2);
        let total = sigma.pow(half as u32);
        for code in 0..total {
            let mut left = Vec::with_capacity(half);
            let mut c = code;
            for _ in 0..half {
                left.push(alphabet.symbol(c % sigma).expect("digit below size"));
                c /= sigma;
            }
            left.reverse();
            let mut symbols: Vec<Symbol> = left.clone();
            symbols.extend(left.iter().rev().skip(len % 2));
            out.push(Word::from_symbols(symbols));
        }
    }
    out
}

/// Every quadruple over the first `alphabet_size` letters `a, b, ...` with
/// `|d| <= max_d`, `|v| <= max_v`, `u` any nonempty suffix of `d`, and
/// `n` in `3 PL(u) ..= 3 PL(u) + max_n_slack`.
///
/// Ordered by `d` (length, content), then `v` (length, content), then `|u|`, then `n`.
pub fn delta_enumerate(
    alphabet_size: usize,
    max_d: usize,
    max_v: usize,
    max_n_slack: usize,
) -> Result<Vec<DeltaQuad>> {
    let alphabet = Alphabet::letters(alphabet_size)?;
    let vs = palindromes(&alphabet, 0, max_v);
    let mut out = Vec::new();
    for d in palindromes(&alphabet, 1, max_d) {
        for v in &vs {
            let dv = d.concat(v);
            if min_period(&dv.concat(&d))? != Some(dv.len()) {
                continue;
            }
            for u_len in 1..=d.len() {
                let u = d.suffix(u_len);
                let base = 3 * pl_oracle(&u);
                for n in base..=base + max_n_slack {
                    out.push(DeltaQuad::new(u.clone(), v.clone(), d.clone(), n)?);
                }
            }
        }
    }
    Ok(out)
}

/// A factor `w[start, end]` (1-based) of length at least `3|vd|` missing `dvd`.
pub fn dvd_factor_counterexample(q: &DeltaQuad) -> Option<(usize, usize)> {
    let w = q.word();
    let dvd = q.dvd();
    let min_len = 3 * q.block().len();
    let n = w.len();
    for start in 1..=n {
        for end in (start + min_len - 1)..=n {
            if !w.factor(start, end).expect("in range").contains(&dvd) {
                return Some((start, end));
            }
        }
    }
    None
}

/// Every factor of `u(vd)^n` of length `>= 3|vd|` contains `dvd`.
pub fn check_dvd_factor(q: &DeltaQuad) -> bool {
    dvd_factor_counterexample(q).is_none()
}

/// A part `t_j = p d (vd)^γ p^R` of a minimal palindromic factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralWitness {
    /// 1-based index of the part.
    pub j: usize,
    pub p: Word,
    pub gamma: usize,
}

impl CentralWitness {
    pub fn reconstruct(&self, q: &DeltaQuad) -> Word {
        self.p
            .concat(q.d())
            .concat(&q.block().pow(self.gamma))
            .concat(&self.p.reverse())
    }
}

/// Matches `part` against `p d (vd)^γ p^R` for the given `p`; returns `γ >= min_gamma`.
fn central_gamma(q: &DeltaQuad, part: &Word, p: &Word, min_gamma: usize) -> Option<usize> {
    let outer = 2 * p.len() + q.d().len();
    let block = q.block().len();
    if part.len() < outer + min_gamma * block || !(part.len() - outer).is_multiple_of(block) {
        return None;
    }
    let gamma = (part.len() - outer) / block;
    let candidate = CentralWitness {
        j: 0,
        p: p.clone(),
        gamma,
    };
    (candidate.reconstruct(q) == *part).then_some(gamma)
}

/// The first part (smallest `j`, then shortest `p`) of `f` with the central shape, `γ >= 1`.
pub fn central_witness(q: &DeltaQuad, f: &Factorization) -> Option<CentralWitness> {
    central_witness_with(q, f, 1)
}

/// [`central_witness`] with an explicit lower bound on `γ`.
///
/// With `min_gamma = 0` the shape `p d p^R` is also accepted; some
/// factorizations only have a central part of that degenerate form.
pub fn central_witness_with(
    q: &DeltaQuad,
    f: &Factorization,
    min_gamma: usize,
) -> Option<CentralWitness> {
    let dv = q.d().concat(q.v());
    for (idx, part) in f.parts().iter().enumerate() {
        for p_len in 0..dv.len() {
            let p = dv.suffix(p_len);
            if let Some(gamma) = central_gamma(q, part, &p, min_gamma) {
                return Some(CentralWitness {
                    j: idx + 1,
                    p,
                    gamma,
                });
            }
        }
    }
    None
}

/// A minimal palindromic factorization with no `γ >= 1` central part,
/// together with its `γ = 0` part when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralGap {
    pub factorization: Factorization,
    pub degenerate: Option<CentralWitness>,
}

/// Every minimal palindromic factorization of `u(vd)^n` that lacks a `γ >= 1` central part.
pub fn central_gaps(q: &DeltaQuad) -> Result<Vec<CentralGap>> {
    let profile = pl_profile_fast(&q.word());
    Ok(mpf_from_profile(&profile, None)?
        .into_iter()
        .filter(|f| central_witness(q, f).is_none())
        .map(|f| {
            let degenerate = central_witness_with(q, &f, 0);
            CentralGap {
                factorization: f,
                degenerate,
            }
        })
        .collect())
}

/// Independent re-check of a witness against its factorization.
pub fn witness_is_valid(q: &DeltaQuad, f: &Factorization, witness: &CentralWitness) -> bool {
    let dv = q.d().concat(q.v());
    let Some(part) = witness.j.checked_sub(1).and_then(|i| f.parts().get(i)) else {
        return false;
    };
    witness.p.len() < dv.len()
        && dv.ends_with(&witness.p)
        && witness.gamma >= 1
        && witness.reconstruct(q) == *part
        && part.is_palindrome()
}

/// Witnesses for every minimal palindromic factorization of `u(vd)^n`.
///
/// Fails with [`Error::Invariant`] naming the quadruple and the first
/// factorization that has no central part.
pub fn find_central_palindrome(q: &DeltaQuad) -> Result<Vec<(Factorization, CentralWitness)>> {
    let profile = pl_profile_fast(&q.word());
    let mut out = Vec::new();
    for f in mpf_from_profile(&profile, None)? {
        match central_witness(q, &f) {
            Some(witness) => out.push((f, witness)),
            None => {
                return Err(Error::Invariant(format!(
                    "no central palindrome in MPF {f} of (u={}, v={}, d={}, n={})",
                    q.u, q.v, q.d, q.n
                )))
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRecord {
    pub pl_u: usize,
    pub pl_w: usize,
    pub holds: bool,
}

/// `PL(u(vd)^n) >= PL(u)`, computed with the fast profile and cross-checked
/// by the oracle on short words.
pub fn check_main_theorem(q: &DeltaQuad) -> Result<TheoremRecord> {
    let w = q.word();
    let pl_u = pl_profile_fast(q.u()).value();
    let pl_w = pl_profile_fast(&w).value();
    if w.len() <= ORACLE_CROSS_CHECK_MAX_LEN {
        let (ou, ow) = (pl_oracle(q.u()), pl_oracle(&w));
        if (ou, ow) != (pl_u, pl_w) {
            return Err(Error::Invariant(format!(
                "fast PL ({pl_u}, {pl_w}) disagrees with oracle ({ou}, {ow}) on u={}, w={w}",
                q.u
            )));
        }
    }
    Ok(TheoremRecord {
        pl_u,
        pl_w,
        holds: pl_w >= pl_u,
    })
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadReport {
    pub u: Word,
    pub v: Word,
    pub d: Word,
    pub n: usize,
    pub pl_u: usize,
    pub pl_w: usize,
    pub dvd_factor_ok: bool,
    pub central_witness_ok: bool,
    pub theorem_ok: bool,
}

impl QuadReport {
    pub fn all_ok(&self) -> bool {
        self.dvd_factor_ok && self.central_witness_ok && self.theorem_ok
    }
}

/// Runs the three checkers on one quadruple. Every witness is re-validated.
pub fn verify_quad(q: &DeltaQuad) -> Result<QuadReport> {
    let record = check_main_theorem(q)?;
    let central_witness_ok = match find_central_palindrome(q) {
        Ok(found) => found.iter().all(|(f, wit)| witness_is_valid(q, f, wit)),
        Err(Error::Invariant(_)) => false,
        Err(e) => return Err(e),
    };
    Ok(QuadReport {
        u: q.u.clone(),
        v: q.v.clone(),
        d: q.d.clone(),
        n: q.n,
        pl_u: record.pl_u,
        pl_w: record.pl_w,
        dvd_factor_ok: check_dvd_factor(q),
        central_witness_ok,
        theorem_ok: record.holds,
    })
}

/// [`verify_quad`] over many quadruples in parallel; output keeps input order.
pub fn verify_all(quads: &[DeltaQuad]) -> Result<Vec<QuadReport>> {
    quads.par_iter().map(verify_quad).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn quad(u: &str, v: &str, d: &str, n: usize) -> DeltaQuad {
        DeltaQuad::new(w(u), w(v), w(d), n).unwrap()
    }

    #[test]
    fn check_examples() {
        assert!(delta_check(&w("a"), &w("b"), &w("a"), 3));
        assert!(delta_check(&w("a"), &Word::empty(), &w("a"), 3));
        assert!(!delta_check(&w("a"), &w("b"), &w("a"), 2));
    }

    #[test]
    fn check_rejections() {
        assert!(!delta_check(&w("a"), &Word::empty(), &Word::empty(), 3));
        assert!(!delta_check(&w("a"), &w("ab"), &w("a"), 3));
        assert!(!delta_check(&w("b"), &w("b"), &w("a"), 3));
        assert!(!delta_check(&Word::empty(), &w("b"), &w("a"), 3));
        // MinPer(aaaa) = 1 but |dv| = 2
        assert!(!delta_check(&w("a"), &Word::empty(), &w("aa"), 3));
        assert!(DeltaQuad::new(w("a"), w("b"), w("a"), 2).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let qs = delta_enumerate(2, 1, 1, 0).unwrap();
        assert!(qs.contains(&quad("a", "b", "a", 3)));
        assert!(qs.contains(&quad("b", "a", "b", 3)));
        assert!(qs.contains(&quad("a", "", "a", 3)));
        assert_eq!(qs.len(), 4);

        let qs = delta_enumerate(2, 2, 0, 0).unwrap();
        assert!(!qs.iter().any(|q| q.d() == &w("aa")));
        assert!(delta_enumerate(1, 2, 0, 0).is_err());
    }

    #[test]
    fn palindrome_generation() {
        let ab = Alphabet::letters(2).unwrap();
        let ps: Vec<String> = palindromes(&ab, 0, 3)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(ps, ["", "a", "b", "aa", "bb", "aaa", "aba", "bab", "bbb"]);
    }

    #[test]
    fn dvd_examples() {
        assert!(check_dvd_factor(&quad("a", "b", "a", 3)));
        assert!(check_dvd_factor(&quad("a", "", "a", 3)));
        assert!(check_dvd_factor(&quad("ba", "", "aba", 6)));
    }

    #[test]
    fn central_examples() {
        let q = quad("a", "b", "a", 3);
        let found = find_central_palindrome(&q).unwrap();
        assert_eq!(found.len(), 1);
        let (f, wit) = &found[0];
        assert_eq!(f.to_string(), "(abababa)");
        assert_eq!(
            *wit,
            CentralWitness {
                j: 1,
                p: Word::empty(),
                gamma: 3
            }
        );
        assert!(witness_is_valid(&q, f, wit));

        let q = quad("a", "", "a", 3);
        let found = find_central_palindrome(&q).unwrap();
        assert_eq!(
            found[0].1,
            CentralWitness {
                j: 1,
                p: Word::empty(),
                gamma: 3
            }
        );
    }

    #[test]
    fn central_rejects_off_center_shape() {
        let q = quad("a", "b", "a", 3);
        // a · a(ba)^2 · a is not the part
        let f = Factorization::new(vec![w("abababa")]).unwrap();
        let bogus = CentralWitness {
            j: 1,
            p: w("a"),
            gamma: 2,
        };
        assert!(!witness_is_valid(&q, &f, &bogus));
        let bogus = CentralWitness {
            j: 2,
            p: Word::empty(),
            gamma: 3,
        };
        assert!(!witness_is_valid(&q, &f, &bogus));
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(
            check_main_theorem(&quad("a", "b", "a", 3)).unwrap(),
            TheoremRecord {
                pl_u: 1,
                pl_w: 1,
                holds: true
            }
        );
        assert_eq!(
            check_main_theorem(&quad("a", "", "a", 3)).unwrap(),
            TheoremRecord {
                pl_u: 1,
                pl_w: 1,
                holds: true
            }
        );
        let r = check_main_theorem(&quad("ba", "", "aba", 6)).unwrap();
        assert_eq!(r.pl_u, 2);
        assert!(r.pl_w >= 2 && r.holds);
    }

    #[test]
    fn quad_report() {
        let r = verify_quad(&quad("ba", "", "aba", 6)).unwrap();
        assert!(r.all_ok());
        assert_eq!(
            (r.u.to_string(), r.v.to_string(), r.d.to_string(), r.n),
            ("ba".into(), "".into(), "aba".into(), 6)
        );
        let all = verify_all(&delta_enumerate(2, 1, 1, 0).unwrap()).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(QuadReport::all_ok));
    }

    #[test]
    fn central_gap_with_positive_gamma() {
        let q = quad("a", "b", "abba", 3);
        assert_eq!(q.word(), w("ababbababbababba"));
        assert!(find_central_palindrome(&q).is_err());
        let gaps = central_gaps(&q).unwrap();
        let shown: Vec<String> = gaps.iter().map(|g| g.factorization.to_string()).collect();
        assert_eq!(shown.len(), 2);
        assert!(shown.contains(&"(aba)(bbababbababb)(a)".to_string()));
        assert!(shown.contains(&"(ababbaba)(bbababb)(a)".to_string()));
        for g in &gaps {
            let degenerate = g.degenerate.as_ref().unwrap();
            assert_eq!(degenerate.gamma, 0);
            assert!(g.factorization.parts()[degenerate.j - 1] == degenerate.reconstruct(&q));
        }
        let report = verify_quad(&q).unwrap();
        assert!(report.dvd_factor_ok && report.theorem_ok && !report.central_witness_ok);
    }
}
