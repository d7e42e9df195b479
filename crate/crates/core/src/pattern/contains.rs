//! Pattern containment up to renaming of symbols.

use std::collections::{HashMap, HashSet};

use super::sequence::{Symbol, SymbolSequence};

/// Does `text` contain a subsequence isomorphic to `pattern`?
///
/// Two-symbol alternations (`abab…`) take the pairwise-alternation route;
/// everything else goes through [`find_pattern`].
pub fn contains_pattern(pattern: &SymbolSequence, text: &SymbolSequence) -> bool {
    match alternation_length(pattern) {
        Some(s) => longest_alternation(text) >= s,
        None => find_pattern(pattern, text).is_some(),
    }
}

/// If `pattern` is `abab…` (or a single symbol), its length.
pub fn alternation_length(pattern: &SymbolSequence) -> Option<usize> {
    let c = pattern.canonical();
    let ok = !c.is_empty()
        && c.symbols()
            .iter()
            .enumerate()
            .all(|(i, &s)| s as usize == i % 2);
    ok.then_some(c.len())
}

/// Length of the longest subsequence of the form `abab…` with `a != b`
/// (1 for a one-symbol text, 0 for the empty text).
pub fn longest_alternation(text: &SymbolSequence) -> usize {
    let pos = text.positions();
    if pos.len() < 2 {
        return usize::from(!text.is_empty());
    }
    let mut syms: Vec<Symbol> = pos.keys().copied().collect();
    syms.sort_unstable();
    let mut best = 2;
    for (i, &a) in syms.iter().enumerate() {
        for &b in &syms[i + 1..] {
            let (pa, pb) = (&pos[&a], &pos[&b]);
            // upper bound: an alternation uses at most 2·min+1 symbols
            if 2 * pa.len().min(pb.len()) < best {
                continue;
            }
            best = best.max(pair_alternation(pa, pb));
        }
    }
    best
}

/// Longest alternation between two disjoint sorted position lists,
/// whichever symbol starts.
fn pair_alternation(pa: &[usize], pb: &[usize]) -> usize {
    // Greedy over the merged order: count maximal runs.
    let (mut i, mut j) = (0, 0);
    let mut runs = 0;
    let mut last: Option<bool> = None;
    while i < pa.len() || j < pb.len() {
        let from_a = j >= pb.len() || (i < pa.len() && pa[i] < pb[j]);
        if from_a {
            i += 1;
        } else {
            j += 1;
        }
        if last != Some(from_a) {
            runs += 1;
            last = Some(from_a);
        }
    }
    runs
}

/// Generic backtracking over injective renamings. Returns the matched text
/// positions of the first witness found.
pub fn find_pattern(pattern: &SymbolSequence, text: &SymbolSequence) -> Option<Vec<usize>> {
    let pat = pattern.canonical();
    let pat = pat.symbols();
    if pat.is_empty() {
        return Some(Vec::new());
    }
    if pat.len() > text.len() {
        return None;
    }
    let k = pat.iter().max().map_or(0, |&m| m as usize + 1);
    let pos = text.positions();
    let mut syms: Vec<Symbol> = pos.keys().copied().collect();
    syms.sort_unstable();
    let mut search = Search {
        pat,
        text_len: text.len(),
        pos: &pos,
        syms: &syms,
        map: vec![None; k],
        used: HashSet::new(),
        picked: Vec::with_capacity(pat.len()),
    };
    search.go(0, 0).then_some(search.picked)
}

struct Search<'a> {
    pat: &'a [Symbol],
    text_len: usize,
    pos: &'a HashMap<Symbol, Vec<usize>>,
    syms: &'a [Symbol],
    map: Vec<Option<Symbol>>,
    used: HashSet<Symbol>,
    picked: Vec<usize>,
}

impl Search<'_> {
    fn next_occ(&self, s: Symbol, from: usize) -> Option<usize> {
        let p = &self.pos[&s];
        let i = p.partition_point(|&x| x < from);
        p.get(i).copied()
    }

    fn go(&mut self, i: usize, from: usize) -> bool {
        if i == self.pat.len() {
            return true;
        }
        if self.text_len - from < self.pat.len() - i {
            return false;
        }
        let c = self.pat[i] as usize;
        if let Some(s) = self.map[c] {
            // With the renaming fixed, the earliest occurrence is optimal.
            let Some(p) = self.next_occ(s, from) else {
                return false;
            };
            self.picked.push(p);
            if self.go(i + 1, p + 1) {
                return true;
            }
            self.picked.pop();
            return false;
        }
        for idx in 0..self.syms.len() {
            let s = self.syms[idx];
            if self.used.contains(&s) {
                continue;
            }
            let Some(p) = self.next_occ(s, from) else {
                continue;
            };
            self.map[c] = Some(s);
            self.used.insert(s);
            self.picked.push(p);
            if self.go(i + 1, p + 1) {
                return true;
            }
            self.picked.pop();
            self.used.remove(&s);
            self.map[c] = None;
        }
        false
    }
}

/// Backtracking decision without the alternation shortcut.
pub fn contains_pattern_generic(pattern: &SymbolSequence, text: &SymbolSequence) -> bool {
    find_pattern(pattern, text).is_some()
}

/// Alternation decision for an `abab…` pattern of length `s`.
pub fn contains_alternation(s: usize, text: &SymbolSequence) -> bool {
    longest_alternation(text) >= s
}

/// First pair `(a, b)` with `b > a` such that the literal sequence
/// `b a b b a` is a subsequence of `text`.
pub fn find_babba(text: &SymbolSequence) -> Option<(Symbol, Symbol)> {
    let pos = text.positions();
    let mut syms: Vec<Symbol> = pos
        .iter()
        .filter(|(_, p)| p.len() >= 2)
        .map(|(s, _)| *s)
        .collect();
    syms.sort_unstable();
    for (i, &a) in syms.iter().enumerate() {
        for &b in &syms[i + 1..] {
            if pos[&b].len() < 3 {
                continue;
            }
            if literal_in_pair(&[b, a, b, b, a], &pos[&a], a, &pos[&b], b) {
                return Some((a, b));
            }
        }
    }
    None
}

fn literal_in_pair(want: &[Symbol], pa: &[usize], a: Symbol, pb: &[usize], b: Symbol) -> bool {
    let (mut i, mut j, mut k) = (0, 0, 0);
    while k < want.len() && (i < pa.len() || j < pb.len()) {
        let from_a = j >= pb.len() || (i < pa.len() && pa[i] < pb[j]);
        let sym = if from_a {
            i += 1;
            a
        } else {
            j += 1;
            b
        };
        if sym == want[k] {
            k += 1;
        }
    }
    k == want.len()
}
