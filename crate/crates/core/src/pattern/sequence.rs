use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use super::PatternError;

pub type Symbol = u32;

/// A finite sequence over an integer alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SymbolSequence {
    symbols: Vec<Symbol>,
}

impl SymbolSequence {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Self { symbols }
    }

    /// `"abab"` → `[0, 1, 0, 1]`. Only `a`–`z` are accepted.
    pub fn from_letters(s: &str) -> Result<Self, PatternError> {
        s.chars()
            .map(|c| {
                if c.is_ascii_lowercase() {
                    Ok(c as Symbol - 'a' as Symbol)
                } else {
                    Err(PatternError::BadPattern(s.to_string()))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of distinct symbols.
    pub fn alphabet_size(&self) -> usize {
        self.symbols.iter().collect::<HashSet<_>>().len()
    }

    pub fn push(&mut self, s: Symbol) {
        self.symbols.push(s);
    }

    pub fn extend_from_slice(&mut self, s: &[Symbol]) {
        self.symbols.extend_from_slice(s);
    }

    /// Occurrence count per symbol.
    pub fn multiplicities(&self) -> HashMap<Symbol, usize> {
        let mut m = HashMap::new();
        for &s in &self.symbols {
            *m.entry(s).or_insert(0) += 1;
        }
        m
    }

    /// Renames symbols to `0, 1, 2, …` in order of first appearance.
    pub fn canonical(&self) -> SymbolSequence {
        let mut names = HashMap::new();
        let symbols = self
            .symbols
            .iter()
            .map(|s| {
                let next = names.len() as Symbol;
                *names.entry(*s).or_insert(next)
            })
            .collect();
        SymbolSequence { symbols }
    }

    /// Sorted positions of each symbol.
    pub(crate) fn positions(&self) -> HashMap<Symbol, Vec<usize>> {
        let mut m: HashMap<Symbol, Vec<usize>> = HashMap::new();
        for (i, &s) in self.symbols.iter().enumerate() {
            m.entry(s).or_default().push(i);
        }
        m
    }
}

impl From<Vec<Symbol>> for SymbolSequence {
    fn from(v: Vec<Symbol>) -> Self {
        Self::new(v)
    }
}

impl fmt::Display for SymbolSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for SymbolSequence {
    type Err = PatternError;

    /// Whitespace-separated non-negative integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .map(|t| {
                t.parse::<Symbol>()
                    .map_err(|_| PatternError::BadSymbol(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// One sequence per line; blank lines yield empty sequences.
pub fn parse_sequence_file(src: &str) -> Result<Vec<SymbolSequence>, PatternError> {
    src.lines().map(str::parse).collect()
}

pub fn write_sequence_file<'a>(seqs: impl IntoIterator<Item = &'a SymbolSequence>) -> String {
    let mut out = String::new();
    for s in seqs {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}

/// Every two occurrences of a symbol are at index distance `>= c`.
pub fn is_regular(seq: &SymbolSequence, c: usize) -> bool {
    let mut last: HashMap<Symbol, usize> = HashMap::new();
    for (i, &s) in seq.symbols.iter().enumerate() {
        if let Some(j) = last.insert(s, i) {
            if i - j < c {
                return false;
            }
        }
    }
    true
}

/// Collapses each run of equal adjacent symbols; also returns how many
/// symbols were dropped.
pub fn remove_repetitions(seq: &SymbolSequence) -> (SymbolSequence, usize) {
    let mut v = seq.symbols.clone();
    v.dedup();
    let removed = seq.len() - v.len();
    (SymbolSequence::new(v), removed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> SymbolSequence {
        SymbolSequence::from_letters(s).unwrap()
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&l("aba"), 2));
        assert!(!is_regular(&l("aab"), 2));
        assert!(is_regular(&l("abcdef"), 2));
        assert!(is_regular(&l("abcabc"), 3));
        assert!(!is_regular(&l("abcab"), 4));
        assert!(is_regular(&l("aa"), 1));
    }

    #[test]
    fn repetition_removal() {
        assert_eq!(remove_repetitions(&l("aabb")), (l("ab"), 2));
        assert_eq!(remove_repetitions(&l("abab")), (l("abab"), 0));
        assert_eq!(remove_repetitions(&l("aaab")), (l("ab"), 2));
    }

    #[test]
    fn text_format() {
        let s: SymbolSequence = "7 3  12".parse().unwrap();
        assert_eq!(s.symbols(), &[7, 3, 12]);
        assert_eq!(s.to_string(), "7 3 12");
        assert_eq!(s.alphabet_size(), 3);
        assert!("1 x".parse::<SymbolSequence>().is_err());
        let file = parse_sequence_file("1 2\n\n3\n").unwrap();
        assert_eq!(file.len(), 3);
        assert!(file[1].is_empty());
    }

    #[test]
    fn canonical_form() {
        let s = SymbolSequence::new(vec![9, 4, 9, 7]);
        assert_eq!(s.canonical().symbols(), &[0, 1, 0, 2]);
        assert!(SymbolSequence::from_letters("aB").is_err());
    }
}
