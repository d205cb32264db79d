//! Prefixes of infinite words used as scan corpora.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

/// Generators refuse lengths above this.
pub const MAX_GENERATED_LEN: usize = 10_000_000;

fn check_len(length: usize) -> Result<()> {
    if length > MAX_GENERATED_LEN {
        return Err(Error::Resource(format!(
            "length {length} exceeds the generator cap {MAX_GENERATED_LEN}"
        )));
    }
    Ok(())
}

/// Length-`length` prefix of `r^∞`.
pub fn periodic_prefix(r: &Word, length: usize) -> Result<Word> {
    if r.is_empty() {
        return Err(Error::Domain("period word must be nonempty".into()));
    }
    check_len(length)?;
    Ok(Word::from_symbols(
        r.symbols().iter().copied().cycle().take(length).collect(),
    ))
}

/// A map from symbols to nonempty words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    rules: BTreeMap<Symbol, Word>,
}

impl Morphism {
    pub fn new<I: IntoIterator<Item = (Symbol, Word)>>(rules: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (s, image) in rules {
            if image.is_empty() {
                return Err(Error::Domain(format!(
                    "image of {} is empty",
                    Word::from_symbols(vec![s])
                )));
            }
            if map.insert(s, image).is_some() {
                return Err(Error::Domain(format!(
                    "duplicate rule for {}",
                    Word::from_symbols(vec![s])
                )));
            }
        }
        Ok(Morphism { rules: map })
    }

    /// Thue–Morse: `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Self {
        "0:01,1:10".parse().expect("valid rule list")
    }

    /// Fibonacci: `0 -> 01, 1 -> 0`.
    pub fn fibonacci() -> Self {
        "0:01,1:0".parse().expect("valid rule list")
    }

    pub fn image(&self, s: Symbol) -> Option<&Word> {
        self.rules.get(&s)
    }

    pub fn rules(&self) -> impl Iterator<Item = (Symbol, &Word)> {
        self.rules.iter().map(|(s, w)| (*s, w))
    }

    /// The image of `seed` starts with `seed` and is longer than one symbol.
    pub fn is_prolongable(&self, seed: Symbol) -> bool {
        match self.rules.get(&seed) {
            Some(img) => img.len() >= 2 && img.symbols()[0] == seed,
            None => false,
        }
    }
}

impl FromStr for Morphism {
    type Err = Error;

    /// Parses a rule list such as `0:01,1:10`.
    fn from_str(text: &str) -> Result<Self> {
        let rules = text
            .split(',')
            .map(|rule| {
                let (src, img) = rule
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("rule `{rule}` lacks `:`")))?;
                let src = src.trim().as_bytes();
                if src.len() != 1 {
                    return Err(Error::Parse(format!(
                        "rule source `{}` is not one symbol",
                        rule
                    )));
                }
                Ok((Symbol(src[0]), Word::parse(img.trim())?))
            })
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(rules)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, img)) in self.rules.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{img}", Word::from_symbols(vec![*s]))?;
        }
        Ok(())
    }
}

/// Length-`length` prefix of the fixed point of `m` starting with `seed`.
pub fn morphic_prefix(m: &Morphism, seed: Symbol, length: usize) -> Result<Word> {
    if !m.is_prolongable(seed) {
        return Err(Error::Domain(format!(
            "morphism {m} is not prolongable on {}",
            Word::from_symbols(vec![seed])
        )));
    }
    check_len(length)?;
    // the fixed point is its own image, so expanding symbols in order from
    // position 0 rewrites the word in place
    let mut out: Vec<Symbol> = vec![seed];
    let mut read = 0;
    while out.len() < length {
        let s = out[read];
        let img = m.image(s).ok_or_else(|| {
            Error::Domain(format!(
                "morphism {m} has no rule for {}",
                Word::from_symbols(vec![s])
            ))
        })?;
        if read == 0 {
            out.extend_from_slice(&img.symbols()[1..]);
        } else {
            out.extend_from_slice(img.symbols());
        }
        read += 1;
    }
    out.truncate(length);
    Ok(Word::from_symbols(out))
}

fn mechanical(p: u64, q: u64, intercept: u64, length: usize) -> Word {
    let floor = |i: u64| (i * p + intercept) / q;
    Word::from_symbols(
        (0..length as u64)
            .map(|i| {
                if floor(i + 1) - floor(i) == 1 {
                    Symbol(b'1')
                } else {
                    Symbol(b'0')
                }
            })
            .collect(),
    )
}

fn check_slope(p: u64, q: u64) -> Result<()> {
    if p == 0 || p >= q {
        return Err(Error::Domain(format!("slope {p}/{q} is not in (0, 1)")));
    }
    Ok(())
}

/// Lower mechanical word of slope `p/q` and intercept 0:
/// `s[i] = ⌊(i+1)p/q⌋ - ⌊ip/q⌋` over the symbols `0`, `1`.
pub fn mechanical_prefix(p: u64, q: u64, length: usize) -> Result<Word> {
    mechanical_prefix_with_intercept(p, q, 0, length)
}

/// Lower mechanical word of slope `p/q` and intercept `rho/q`, `0 <= rho < q`:
/// `s[i] = ⌊((i+1)p + rho)/q⌋ - ⌊(ip + rho)/q⌋`.
pub fn mechanical_prefix_with_intercept(p: u64, q: u64, rho: u64, length: usize) -> Result<Word> {
    check_slope(p, q)?;
    if rho >= q {
        return Err(Error::Domain(format!(
            "intercept {rho}/{q} is not in [0, 1)"
        )));
    }
    check_len(length)?;
    if (length as u64)
        .checked_add(1)
        .and_then(|l| l.checked_mul(p))
        .and_then(|x| x.checked_add(rho))
        .is_none()
    {
        return Err(Error::Resource(format!(
            "slope {p}/{q} overflows at length {length}"
        )));
    }
    Ok(mechanical(p, q, rho, length))
}

/// Consecutive Fibonacci numbers `(F_k, F_{k+2})`, a convergent of `1/φ²`.
pub fn golden_convergent(k: usize) -> (u64, u64) {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 1..k {
        (a, b) = (b, a + b);
    }
    (a, a + b)
}

/// Every word of length `len` over `alphabet`, in lexicographic order of symbol indices.
pub fn all_words(alphabet: &Alphabet, len: usize) -> impl Iterator<Item = Word> + '_ {
    let sigma = alphabet.size();
    let total = (sigma as u128)
        .checked_pow(len as u32)
        .expect("enumeration size fits in u128");
    (0..total).map(move |mut code| {
        let mut symbols = vec![Symbol(0); len];
        for slot in symbols.iter_mut().rev() {
            *slot = alphabet
                .symbol((code % sigma as u128) as usize)
                .expect("digit below size");
            code /= sigma as u128;
        }
        Word::from_symbols(symbols)
    })
}

/// A family of infinite words, as named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordFamily {
    Periodic { period: Word },
    Morphic { morphism: Morphism, seed: Symbol },
    Mechanical { p: u64, q: u64, intercept: u64 },
}

impl WordFamily {
    pub fn prefix(&self, length: usize) -> Result<Word> {
        match self {
            WordFamily::Periodic { period } => periodic_prefix(period, length),
            WordFamily::Morphic { morphism, seed } => morphic_prefix(morphism, *seed, length),
            WordFamily::Mechanical { p, q, intercept } => {
                mechanical_prefix_with_intercept(*p, *q, *intercept, length)
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            WordFamily::Periodic { .. } => "periodic",
            WordFamily::Morphic { .. } => "morphic",
            WordFamily::Mechanical { .. } => "mechanical",
        }
    }
}

impl FromStr for WordFamily {
    type Err = Error;

    /// Accepted forms:
    ///
    /// * `periodic:012`
    /// * `morphic:0:01,1:10` (seed is the first rule's symbol), optionally `@seed` at the end
    /// * `mechanical:1/3`, optionally `@rho` for intercept `rho/q`
    /// * `thue-morse`, `fibonacci`
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "thue-morse" | "thue_morse" | "tm" => {
                return Ok(WordFamily::Morphic {
                    morphism: Morphism::thue_morse(),
                    seed: Symbol(b'0'),
                })
            }
            "fibonacci" | "fib" => {
                return Ok(WordFamily::Morphic {
                    morphism: Morphism::fibonacci(),
                    seed: Symbol(b'0'),
                })
            }
            _ => {}
        }
        let (kind, params) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family `{text}` lacks `kind:parameters`")))?;
        match kind {
            "periodic" => Ok(WordFamily::Periodic {
                period: Word::parse(params)?,
            }),
            "morphic" => {
                let (rules, seed) = match params.rsplit_once('@') {
                    Some((rules, seed)) => (rules, Some(seed)),
                    None => (params, None),
                };
                let morphism: Morphism = rules.parse()?;
                let seed = match seed {
                    Some(s) if s.len() == 1 => Symbol(s.as_bytes()[0]),
                    Some(s) => return Err(Error::Parse(format!("seed `{s}` is not one symbol"))),
                    None => Symbol(rules.trim().as_bytes()[0]),
                };
                Ok(WordFamily::Morphic { morphism, seed })
            }
            "mechanical" => {
                let (slope, intercept) = match params.split_once('@') {
                    Some((slope, rho)) => (slope, rho),
                    None => (params, "0"),
                };
                let (p, q) = slope
                    .split_once('/')
                    .ok_or_else(|| Error::Parse(format!("slope `{slope}` is not p/q")))?;
                let num = |s: &str| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("`{s}` is not an integer")))
                };
                let (p, q, intercept) = (num(p)?, num(q)?, num(intercept)?);
                check_slope(p, q)?;
                if intercept >= q {
                    return Err(Error::Domain(format!(
                        "intercept {intercept}/{q} is not in [0, 1)"
                    )));
                }
                Ok(WordFamily::Mechanical { p, q, intercept })
            }
            other => Err(Error::Parse(format!("unknown family kind `{other}`"))),
        }
    }
}

impl fmt::Display for WordFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordFamily::Periodic { period } => write!(f, "periodic:{period}"),
            WordFamily::Morphic { morphism, seed } => {
                write!(f, "morphic:{morphism}@{}", Word::from_symbols(vec![*seed]))
            }
            WordFamily::Mechanical { p, q, intercept: 0 } => write!(f, "mechanical:{p}/{q}"),
            WordFamily::Mechanical { p, q, intercept } => {
                write!(f, "mechanical:{p}/{q}@{intercept}")
            }
        }
    }
}

impl Serialize for WordFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
