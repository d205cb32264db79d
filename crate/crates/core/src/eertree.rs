//! Online palindromic tree (eertree).
//!
//! One node per distinct nonempty palindromic factor plus two roots: the
//! imaginary root of length -1 and the empty root of length 0. Each node
//! keeps a suffix link to its longest proper palindromic suffix and a series
//! link that skips the run of suffixes sharing its period (`diff`), so the
//! palindromic suffixes of any prefix split into O(log n) arithmetic series.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol, Word};

pub type NodeId = u32;

/// The root of length -1.
pub const IMAGINARY_ROOT: NodeId = 0;
/// The root of length 0.
pub const EMPTY_ROOT: NodeId = 1;

const NONE: NodeId = NodeId::MAX;
const DENSE_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EertreeNode {
    /// -1 for the imaginary root, 0 for the empty root, else the palindrome length.
    pub length: i32,
    pub suffix_link: NodeId,
    pub series_link: NodeId,
    /// `length - length(suffix_link)`, the smallest period of the palindrome; 0 on roots.
    pub diff: u32,
    /// 1-based end position of the first occurrence; 0 on roots.
    pub first_end: usize,
}

#[derive(Clone, Debug)]
enum Transitions {
    Dense { width: usize, table: Vec<NodeId> },
    Sorted(Vec<Vec<(u8, NodeId)>>),
}

impl Transitions {
    fn new(alphabet_size: usize) -> Self {
        if alphabet_size <= DENSE_LIMIT {
            Transitions::Dense {
                width: alphabet_size.max(1),
                table: Vec::new(),
            }
        } else {
            Transitions::Sorted(Vec::new())
        }
    }

    fn add_node(&mut self) {
        match self {
            Transitions::Dense { width, table } => table.extend(std::iter::repeat_n(NONE, *width)),
            Transitions::Sorted(lists) => lists.push(Vec::new()),
        }
    }

    fn get(&self, node: NodeId, symbol: usize) -> Option<NodeId> {
        match self {
            Transitions::Dense { width, table } => {
                let t = table[node as usize * *width + symbol];
                (t != NONE).then_some(t)
            }
            Transitions::Sorted(lists) => {
                let list = &lists[node as usize];
                list.binary_search_by_key(&(symbol as u8), |&(s, _)| s)
                    .ok()
                    .map(|i| list[i].1)
            }
        }
    }

    fn set(&mut self, node: NodeId, symbol: usize, target: NodeId) {
        match self {
            Transitions::Dense { width, table } => table[node as usize * *width + symbol] = target,
            Transitions::Sorted(lists) => {
                let list = &mut lists[node as usize];
                match list.binary_search_by_key(&(symbol as u8), |&(s, _)| s) {
                    Ok(i) => list[i].1 = target,
                    Err(i) => list.insert(i, (symbol as u8, target)),
                }
            }
        }
    }
}

/// Palindromic tree over a growing word.
#[derive(Clone, Debug)]
pub struct Eertree {
    alphabet: Alphabet,
    nodes: Vec<EertreeNode>,
    transitions: Transitions,
    word: Vec<Symbol>,
    /// `history[i]` is the longest palindromic suffix node of the length-`i` prefix.
    history: Vec<NodeId>,
}

impl Eertree {
    pub fn new(alphabet: Alphabet) -> Self {
        let mut transitions = Transitions::new(alphabet.size());
        transitions.add_node();
        transitions.add_node();
        let root = |length| EertreeNode {
            length,
            suffix_link: IMAGINARY_ROOT,
            series_link: IMAGINARY_ROOT,
            diff: 0,
            first_end: 0,
        };
        Eertree {
            alphabet,
            nodes: vec![root(-1), root(0)],
            transitions,
            word: Vec::new(),
            history: vec![EMPTY_ROOT],
        }
    }

    /// Builds the tree of `w` over the alphabet of its own symbols.
    pub fn from_word(w: &Word) -> Self {
        let mut tree = Eertree::new(Alphabet::of(w));
        tree.nodes.reserve(w.len());
        tree.history.reserve(w.len());
        for &s in w.symbols() {
            tree.append(s)
                .expect("symbol drawn from the word's own alphabet");
        }
        tree
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Length of the word built so far.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> Word {
        Word::from_symbols(self.word.clone())
    }

    pub fn node(&self, id: NodeId) -> &EertreeNode {
        &self.nodes[id as usize]
    }

    pub fn nodes(&self) -> &[EertreeNode] {
        &self.nodes
    }

    /// Number of nodes including both roots.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of distinct nonempty palindromic factors of the current word.
    pub fn distinct_palindromes(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Node of the longest palindromic suffix of the current word.
    pub fn last(&self) -> NodeId {
        *self
            .history
            .last()
            .expect("history starts with the empty root")
    }

    pub fn transition(&self, node: NodeId, s: Symbol) -> Option<NodeId> {
        self.alphabet
            .index_of(s)
            .and_then(|i| self.transitions.get(node, i))
    }

    /// Walks suffix links from `last` until the suffix `x` with `x`-`s`-`x`-shape fits.
    fn extendable(&self, mut node: NodeId, pos: usize, s: Symbol) -> NodeId {
        loop {
            let len = self.nodes[node as usize].length;
            // the imaginary root always fits: its "mirror" position is pos itself
            let mirror = pos as i64 - len as i64 - 1;
            if mirror >= 0 && self.word[mirror as usize] == s {
                return node;
            }
            node = self.nodes[node as usize].suffix_link;
        }
    }

    /// Appends `s`; returns the node of the longest palindromic suffix of the new word.
    pub fn append(&mut self, s: Symbol) -> Result<NodeId> {
        let symbol = self.alphabet.index_of(s).ok_or_else(|| {
            Error::Domain(format!(
                "symbol {} is not in the tree alphabet {:?}",
                s.0, self.alphabet
            ))
        })?;
        let pos = self.word.len();
        self.word.push(s);

        let parent = self.extendable(self.last(), pos, s);
        if let Some(existing) = self.transitions.get(parent, symbol) {
            self.history.push(existing);
            return Ok(existing);
        }

        let length = self.nodes[parent as usize].length + 2;
        let suffix_link = if length == 1 {
            EMPTY_ROOT
        } else {
            let from = self.nodes[parent as usize].suffix_link;
            let host = self.extendable(from, pos, s);
            self.transitions
                .get(host, symbol)
                .expect("the shorter palindromic suffix already exists")
        };
        let link = &self.nodes[suffix_link as usize];
        let diff = (length - link.length) as u32;
        let series_link = if diff == link.diff {
            link.series_link
        } else {
            suffix_link
        };

        let id = self.nodes.len() as NodeId;
        self.nodes.push(EertreeNode {
            length,
            suffix_link,
            series_link,
            diff,
            first_end: pos + 1,
        });
        self.transitions.add_node();
        self.transitions.set(parent, symbol, id);
        self.history.push(id);
        Ok(id)
    }

    /// Longest palindromic suffix node of the length-`i` prefix.
    pub fn last_at(&self, i: usize) -> Result<NodeId> {
        self.history.get(i).copied().ok_or(Error::Range {
            i,
            j: i,
            len: self.len(),
        })
    }

    /// Nodes on the suffix-link chain from `node`, longest first, stopping before the roots.
    pub fn suffix_chain(&self, node: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        std::iter::successors(Some(node), move |&v| {
            Some(self.nodes[v as usize].suffix_link)
        })
        .take_while(move |&v| self.nodes[v as usize].length > 0)
    }

    /// Nodes on the series-link chain from `node`, stopping before the roots.
    pub fn series_chain(&self, node: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        std::iter::successors(Some(node), move |&v| {
            Some(self.nodes[v as usize].series_link)
        })
        .take_while(move |&v| self.nodes[v as usize].length > 0)
    }

    /// Lengths of all nonempty palindromic suffixes of the length-`i` prefix, increasing.
    pub fn pal_suffix_lengths_at(&self, i: usize) -> Result<Vec<usize>> {
        let mut lengths: Vec<usize> = self
            .suffix_chain(self.last_at(i)?)
            .map(|v| self.nodes[v as usize].length as usize)
            .collect();
        lengths.reverse();
        Ok(lengths)
    }

    /// The palindrome a node stands for.
    pub fn palindrome(&self, node: NodeId) -> Word {
        let n = &self.nodes[node as usize];
        if n.length <= 0 {
            return Word::empty();
        }
        let end = n.first_end;
        Word::from_symbols(self.word[end - n.length as usize..end].to_vec())
    }

    /// Text edge list, one node per line: `id length suffix_link series_link`.
    pub fn dump(&self) -> String {
        let mut out = String::from("# id length suffix_link series_link\n");
        for (id, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "{id} {} {} {}", n.length, n.suffix_link, n.series_link);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(s: &str) -> Eertree {
        Eertree::from_word(&Word::parse(s).unwrap())
    }

    #[test]
    fn append_examples() {
        let mut t = Eertree::new(Alphabet::letters(2).unwrap());
        let before = t.node_count();
        let a = t.append(Symbol(b'a')).unwrap();
        assert_eq!(t.node(a).length, 1);
        assert_eq!(t.node_count(), before + 1);

        t.append(Symbol(b'b')).unwrap();
        let aba = t.append(Symbol(b'a')).unwrap();
        assert_eq!(t.palindrome(aba).to_string(), "aba");
    }

    #[test]
    fn foreign_symbol_rejected() {
        let mut t = Eertree::new(Alphabet::letters(2).unwrap());
        assert!(matches!(t.append(Symbol(b'z')), Err(Error::Domain(_))));
        assert!(t.is_empty());
    }

    #[test]
    fn eertree_word() {
        let t = tree("eertree");
        let mut pals: Vec<String> = (2..t.node_count() as NodeId)
            .map(|v| t.palindrome(v).to_string())
            .collect();
        pals.sort();
        assert_eq!(pals, ["e", "ee", "eertree", "ertre", "r", "rtr", "t"]);
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(tree("aaaa").distinct_palindromes(), 4);
        assert_eq!(tree("ab").distinct_palindromes(), 2);
        assert_eq!(tree("011001").distinct_palindromes(), 6);
        assert_eq!(tree("").distinct_palindromes(), 0);
    }

    #[test]
    fn suffix_lengths() {
        assert_eq!(tree("aabaa").pal_suffix_lengths_at(5).unwrap(), [1, 2, 5]);
        assert_eq!(tree("ab").pal_suffix_lengths_at(2).unwrap(), [1]);
        assert_eq!(tree("aaa").pal_suffix_lengths_at(3).unwrap(), [1, 2, 3]);
        assert_eq!(
            tree("aaa").pal_suffix_lengths_at(0).unwrap(),
            Vec::<usize>::new()
        );
        assert!(matches!(
            tree("aaa").pal_suffix_lengths_at(4),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn sorted_transitions_for_large_alphabets() {
        let w = Word::parse("abcdefghijjihgfedcba").unwrap();
        let t = Eertree::from_word(&w);
        assert!(t.alphabet().size() > DENSE_LIMIT);
        assert_eq!(t.pal_suffix_lengths_at(20).unwrap(), [1, 20]);
        assert_eq!(t.distinct_palindromes(), 20);
    }

    #[test]
    fn dump_format() {
        let d = tree("aba").dump();
        let lines: Vec<&str> = d.lines().collect();
        assert_eq!(lines[0], "# id length suffix_link series_link");
        assert_eq!(lines[1], "0 -1 0 0");
        assert_eq!(lines[2], "1 0 0 0");
        assert_eq!(lines[3], "2 1 1 1");
        assert_eq!(lines[5], "4 3 2 2");
        assert_eq!(lines.len(), 6);
    }
}
