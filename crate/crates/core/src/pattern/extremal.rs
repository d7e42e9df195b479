//! Exhaustive search for `Ex(σ, n)`: the longest `‖σ‖`-regular, σ-free
//! sequence using exactly `n` symbols.

use super::contains::contains_pattern;
use super::sequence::{is_regular, Symbol, SymbolSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExOutcome {
    /// Longest qualifying length found; `None` when no sequence uses all
    /// `n` symbols without containing the pattern.
    pub value: Option<usize>,
    /// `false` when the length cap or node budget cut the search short, in
    /// which case `value` is only a lower bound.
    pub exact: bool,
    pub witness: Option<SymbolSequence>,
    pub nodes_visited: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct ExLimits {
    /// Sequences are never extended past this length.
    pub length_cap: usize,
    pub node_budget: u64,
}

impl ExLimits {
    pub fn with_cap(length_cap: usize) -> Self {
        Self {
            length_cap,
            node_budget: 50_000_000,
        }
    }
}

/// Depth-first enumeration of canonical sequences (each new symbol is the
/// smallest unused one). Both regularity and pattern-freedom are closed
/// under taking prefixes, so a branch dies as soon as it violates either.
pub fn ex_bruteforce(pattern: &SymbolSequence, n: usize, limits: ExLimits) -> ExOutcome {
    let c = pattern.alphabet_size().max(1);
    let mut st = ExSearch {
        pattern,
        n,
        gap: c,
        limits,
        seq: Vec::new(),
        best: None,
        truncated: false,
        nodes: 0,
    };
    st.go(0);
    ExOutcome {
        value: st.best.as_ref().map(Vec::len),
        exact: !st.truncated,
        witness: st.best.map(SymbolSequence::new),
        nodes_visited: st.nodes,
    }
}

struct ExSearch<'a> {
    pattern: &'a SymbolSequence,
    n: usize,
    gap: usize,
    limits: ExLimits,
    seq: Vec<Symbol>,
    best: Option<Vec<Symbol>>,
    truncated: bool,
    nodes: u64,
}

impl ExSearch<'_> {
    fn go(&mut self, used: usize) {
        self.nodes += 1;
        if used == self.n && self.best.as_ref().is_none_or(|b| b.len() < self.seq.len()) {
            self.best = Some(self.seq.clone());
        }
        let at_cap = self.seq.len() >= self.limits.length_cap;
        if self.nodes >= self.limits.node_budget {
            self.truncated = true;
            return;
        }
        let recent = self.seq.len().saturating_sub(self.gap - 1);
        for s in 0..(used + 1).min(self.n) as Symbol {
            if self.seq[recent..].contains(&s) {
                continue;
            }
            self.seq.push(s);
            let cand = SymbolSequence::new(self.seq.clone());
            if !contains_pattern(self.pattern, &cand) {
                debug_assert!(is_regular(&cand, self.gap));
                if at_cap {
                    // a longer sequence exists beyond the cap
                    self.truncated = true;
                    self.seq.pop();
                    return;
                }
                let next_used = if s as usize == used { used + 1 } else { used };
                self.go(next_used);
            }
            self.seq.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> SymbolSequence {
        SymbolSequence::from_letters(s).unwrap()
    }

    #[test]
    fn abab_small_values() {
        let r = ex_bruteforce(&l("abab"), 2, ExLimits::with_cap(10));
        assert_eq!(r.value, Some(3));
        assert!(r.exact);
        let r = ex_bruteforce(&l("abab"), 3, ExLimits::with_cap(12));
        assert_eq!(r.value, Some(5));
        assert!(r.exact);
    }

    #[test]
    fn cap_turns_result_into_lower_bound() {
        let r = ex_bruteforce(&l("abab"), 3, ExLimits::with_cap(4));
        assert_eq!(r.value, Some(4));
        assert!(!r.exact);
    }

    #[test]
    fn ab_admits_no_two_symbol_sequence() {
        let r = ex_bruteforce(&l("ab"), 2, ExLimits::with_cap(10));
        assert_eq!(r.value, None);
        assert!(r.exact);
        assert_eq!(
            ex_bruteforce(&l("ab"), 1, ExLimits::with_cap(10)).value,
            Some(1)
        );
    }
}
