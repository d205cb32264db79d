//! Palindromic length toolkit.
//!
//! * [`word`]: words, reversal, palindromes, factors and palindromic prefixes.
//! * [`periodicity`]: border arrays, period sets and periodic palindromes.
//! * [`eertree`]: the online palindromic tree with suffix and series links.
//! * [`palen`]: palindromic length (oracle and fast), minimal palindromic
//!   factorizations and the concatenation inequalities.
//! * [`omega`]: factors with many palindromic prefixes and `(ab)^j` extraction.
//! * [`delta`]: `u(vd)^n` quadruples and their checkers.
//! * [`wordgen`]: periodic, morphic and mechanical word generators.

pub mod delta;
pub mod eertree;
pub mod error;
pub mod omega;
pub mod palen;
pub mod periodicity;
pub mod word;
pub mod wordgen;

pub use error::{Error, Result};
pub use palen::{palindromic_length, pl_oracle, pl_profile_fast, Factorization, PLProfile};
pub use word::{Alphabet, Symbol, Word};
