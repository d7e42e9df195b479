mod common;

use std::collections::VecDeque;

use proptest::prelude::*;
use splay_deque::pattern::{
    alpha, contains_pattern, is_regular, remove_repetitions, Symbol, SymbolSequence,
};
use splay_deque::splay::{NodeId, SplayTree};

proptest! {
    #[test]
    fn splay_deque_matches_vecdeque(init in 0usize..20, ops in prop::collection::vec(0u8..4, 0..200)) {
        let mut t = SplayTree::left_path(init);
        let mut model: VecDeque<NodeId> = (1..=init as i64).map(NodeId).collect();
        for op in ops {
            match op {
                0 => model.push_front(t.push()),
                1 => model.push_back(t.inject()),
                2 => {
                    let want = model.pop_front();
                    let got = t.pop().ok().map(|r| r.deleted);
                    prop_assert_eq!(got, want);
                }
                _ => {
                    let want = model.pop_back();
                    let got = t.eject().ok().map(|r| r.deleted);
                    prop_assert_eq!(got, want);
                }
            }
            prop_assert!(t.validate().is_ok());
        }
        prop_assert_eq!(t.in_order(), model.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn splay_brings_node_to_root(n in 1usize..60, pick in 0usize..60) {
        let mut t = SplayTree::left_path(n);
        let x = NodeId((pick % n) as i64 + 1);
        t.splay(x).unwrap();
        prop_assert_eq!(t.root(), Some(x));
        prop_assert_eq!(t.in_order(), (1..=n as i64).map(NodeId).collect::<Vec<_>>());
    }

    #[test]
    fn spinal_compressions_preserve_order(seed in any::<u64>()) {
        prop_assert_eq!(common::compression_case(seed), Ok(()));
    }

    #[test]
    fn repetition_removal_is_two_regular(v in prop::collection::vec(0u32..5, 0..60)) {
        let s = SymbolSequence::new(v.clone());
        let (r, removed) = remove_repetitions(&s);
        prop_assert!(is_regular(&r, 2));
        prop_assert_eq!(r.len() + removed, v.len());
        prop_assert_eq!(remove_repetitions(&r).1, 0);
    }

    #[test]
    fn containment_is_monotone(v in prop::collection::vec(0u32..4, 0..30), extra in 0u32..4, cut in 0usize..30) {
        let p = SymbolSequence::from_letters("abab").unwrap();
        let s = SymbolSequence::new(v.clone());
        let mut longer = v.clone();
        longer.insert(cut.min(v.len()), extra);
        if contains_pattern(&p, &s) {
            prop_assert!(contains_pattern(&p, &SymbolSequence::new(longer)));
        }
        // every sequence contains itself
        prop_assert!(contains_pattern(&s, &s));
    }

    #[test]
    fn alpha_is_monotone(m in 0u128..1u128 << 40, n in 1u128..1u128 << 40, dm in 0u128..1u128 << 20, dn in 0u128..1u128 << 20) {
        prop_assert!(alpha(m + dm, n) <= alpha(m, n));
        prop_assert!(alpha(m, n) <= alpha(m, n + dn) || m > 0);
        prop_assert!(alpha(0, n) <= alpha(0, n + dn));
    }
}

#[test]
fn renaming_preserves_containment() {
    let p = SymbolSequence::from_letters("abaabba").unwrap();
    let s: Vec<Symbol> = vec![1, 2, 1, 1, 2, 2, 1];
    let renamed: Vec<Symbol> = s.iter().map(|&x| 100 - x).collect();
    assert!(contains_pattern(&p, &SymbolSequence::new(s)));
    assert!(contains_pattern(&p, &SymbolSequence::new(renamed)));
}
