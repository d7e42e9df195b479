//! Checks that each deque operation changes the left-half view exactly as
//! the compression model predicts.

use super::view::{left_half_view, LeftHalfView, ViewEffect};
use super::CompressionError;
use crate::splay::{NodeId, PopRecord, SplayTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DequeOp {
    Push,
    Pop,
    Inject,
    Eject,
}

impl DequeOp {
    pub fn as_str(self) -> &'static str {
        match self {
            DequeOp::Push => "push",
            DequeOp::Pop => "pop",
            DequeOp::Inject => "inject",
            DequeOp::Eject => "eject",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub op: DequeOp,
    pub subject: NodeId,
    pub matched: bool,
    /// The model effect that reproduced the observed view (for a mismatch,
    /// the effect the model predicted).
    pub effect: ViewEffect,
    pub mismatch: Option<String>,
}

impl CorrespondenceReport {
    fn new(op: DequeOp, subject: NodeId, effect: ViewEffect, mismatch: Option<String>) -> Self {
        Self {
            op,
            subject,
            matched: mismatch.is_none(),
            effect,
            mismatch,
        }
    }
}

/// Compares the view before and after one operation on `subject` (the node
/// pushed, popped, injected or ejected).
pub fn check_step(
    op: DequeOp,
    subject: NodeId,
    before: &LeftHalfView,
    after: &LeftHalfView,
) -> CorrespondenceReport {
    let mut model = before.clone();
    advance(op, subject, &mut model, after)
}

/// Like [`check_step`], but applies the modelled effect to `model` in place.
/// On a mismatch `model` is left in an unspecified state.
pub fn advance(
    op: DequeOp,
    subject: NodeId,
    model: &mut LeftHalfView,
    after: &LeftHalfView,
) -> CorrespondenceReport {
    let applied = match op {
        DequeOp::Push => model.apply_push(subject),
        DequeOp::Inject => Ok(ViewEffect::default()),
        DequeOp::Pop => model.apply_pop().and_then(|effect| {
            if effect.deleted == Some(subject) {
                Ok(effect)
            } else {
                Err(CompressionError::Invariant(format!(
                    "model deletes {:?} but the splay tree removed {subject}",
                    effect.deleted
                )))
            }
        }),
        DequeOp::Eject => return eject_search(subject, model, after),
    };
    match applied {
        Ok(effect) => {
            let d = model.diff(after);
            CorrespondenceReport::new(op, subject, effect, d)
        }
        Err(e) => {
            CorrespondenceReport::new(op, subject, ViewEffect::default(), Some(e.to_string()))
        }
    }
}

/// Finds the eject effect: a halving compression from the designated root
/// `r` or from its parent, possibly with relocation of `r` to its parent.
/// The relocation is read off the observed designated root and the length
/// off the highest node whose parent changed, so only the starting point is
/// searched.
fn eject_search(
    subject: NodeId,
    model: &mut LeftHalfView,
    after: &LeftHalfView,
) -> CorrespondenceReport {
    let op = DequeOp::Eject;
    let fail =
        |msg: String| CorrespondenceReport::new(op, subject, ViewEffect::default(), Some(msg));
    if model.tree.contains(subject) {
        return fail(format!("eject removed left-half node {subject}"));
    }
    let Some(r) = model.designated_root else {
        let d = model.diff(after);
        return CorrespondenceReport::new(op, subject, ViewEffect::default(), d);
    };
    let up = model.tree.parent(r);
    let relocate = match after.designated_root {
        Some(x) if x == r => false,
        x if x.is_some() && x == up => true,
        x => {
            return fail(format!(
                "designated root moved from {r} to {x:?}, not to its parent"
            ))
        }
    };
    let mut candidates = Vec::new();
    for start in [Some(r), up].into_iter().flatten() {
        let mut path = vec![start];
        while let Some(p) = model.tree.parent(*path.last().unwrap()) {
            path.push(p);
        }
        let moved = path
            .iter()
            .rposition(|&v| after.tree.parent(v) != model.tree.parent(v));
        let len = moved.map_or(1, |i| i + 3);
        candidates.push((start != r, len));
    }
    let original = model.clone();
    for (i, &(from_parent, len)) in candidates.iter().enumerate() {
        if i > 0 {
            *model = original.clone();
        }
        let Ok(effect) = model.apply_eject_candidate(from_parent, len, relocate) else {
            continue;
        };
        if model.diff(after).is_none() {
            return CorrespondenceReport::new(op, subject, effect, None);
        }
    }
    *model = original;
    fail(format!(
        "no halving compression from {r} explains the eject: {}",
        model.diff(after).unwrap_or_else(|| "view unchanged".into())
    ))
}

/// Pop correspondence on raw splay trees: the view of `after` must equal the
/// view of `before` with the modelled pop applied.
pub fn check_pop_correspondence(
    before: &SplayTree,
    after: &SplayTree,
    rec: &PopRecord,
    boundary: Option<NodeId>,
) -> CorrespondenceReport {
    check_step(
        DequeOp::Pop,
        rec.deleted,
        &left_half_view(before, boundary),
        &left_half_view(after, boundary),
    )
}

pub fn check_push(
    before: &SplayTree,
    after: &SplayTree,
    pushed: NodeId,
    boundary: Option<NodeId>,
) -> CorrespondenceReport {
    check_step(
        DequeOp::Push,
        pushed,
        &left_half_view(before, boundary),
        &left_half_view(after, boundary),
    )
}

pub fn check_inject(
    before: &SplayTree,
    after: &SplayTree,
    injected: NodeId,
    boundary: Option<NodeId>,
) -> CorrespondenceReport {
    check_step(
        DequeOp::Inject,
        injected,
        &left_half_view(before, boundary),
        &left_half_view(after, boundary),
    )
}

/// Eject correspondence: the view delta must be a halving compression that
/// starts at the designated root and stops at some ancestor, possibly
/// followed by relocating the designated root to its parent. The matched
/// terminus is recorded in the report.
pub fn mirror_eject_check(
    before: &SplayTree,
    after: &SplayTree,
    rec: &PopRecord,
    boundary: Option<NodeId>,
) -> CorrespondenceReport {
    check_step(
        DequeOp::Eject,
        rec.deleted,
        &left_half_view(before, boundary),
        &left_half_view(after, boundary),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pop_report(src: &str, boundary: Option<NodeId>) -> CorrespondenceReport {
        let before = SplayTree::parse(src).unwrap();
        let mut after = before.clone();
        let rec = after.pop().unwrap();
        check_pop_correspondence(&before, &after, &rec, boundary)
    }

    #[test]
    fn single_node_pop_is_a_bare_deletion() {
        let r = pop_report("(1)", None);
        assert!(r.matched);
        assert_eq!(r.effect.compression, None);
        assert_eq!(r.effect.deleted, Some(NodeId(1)));
    }

    #[test]
    fn three_node_left_path_pop() {
        // u1 = 1 is deleted; (2, 3) has no node to move, and the designated
        // root relocates from 3 to 2
        let r = pop_report("(((1) 2) 3)", None);
        assert!(r.matched, "{:?}", r.mismatch);
        assert_eq!(r.effect.compression, None);
        assert_eq!(
            r.effect.relocation,
            Some((Some(NodeId(3)), Some(NodeId(2))))
        );
    }

    #[test]
    fn four_node_left_path_pop_halves_above_the_leaf() {
        let r = pop_report("((((1) 2) 3) 4)", None);
        assert!(r.matched, "{:?}", r.mismatch);
        let c = r.effect.compression.unwrap();
        assert_eq!(c.path, vec![NodeId(2), NodeId(3), NodeId(4)]);
        assert_eq!(c.length, 1);
        assert_eq!(r.effect.relocation, None);
    }

    #[test]
    fn push_and_inject() {
        let before = SplayTree::parse("((1) 2 (3))").unwrap();
        let mut after = before.clone();
        let v = after.push();
        let r = check_push(&before, &after, v, Some(NodeId(2)));
        assert!(r.matched, "{:?}", r.mismatch);
        assert_eq!(r.effect.relocation, Some((Some(NodeId(2)), Some(v))));

        let mut after = before.clone();
        let v = after.inject();
        let r = check_inject(&before, &after, v, Some(NodeId(2)));
        assert!(r.matched, "{:?}", r.mismatch);
    }

    #[test]
    fn inject_into_the_left_half_is_caught() {
        // with every node counted as left half, inject does change the view
        let before = SplayTree::parse("((1) 2 (3))").unwrap();
        let mut after = before.clone();
        let v = after.inject();
        assert!(!check_inject(&before, &after, v, None).matched);
    }

    fn eject_report(src: &str, boundary: i64) -> CorrespondenceReport {
        let before = SplayTree::parse(src).unwrap();
        let mut after = before.clone();
        let rec = after.eject().unwrap();
        mirror_eject_check(&before, &after, &rec, Some(NodeId(boundary)))
    }

    #[test]
    fn eject_of_a_single_right_half_node_only_relocates() {
        let r = eject_report("(-2 (5 (6)))", 5);
        assert!(r.matched, "{:?}", r.mismatch);
        assert_eq!(r.effect.compression, None);
        assert_eq!(
            r.effect.relocation,
            Some((Some(NodeId(-2)), Some(NodeId(5))))
        );
    }

    #[test]
    fn eject_with_stunted_compression() {
        let r = eject_report("(-3 (-2 (-1 ((2) 5))))", 2);
        assert!(r.matched, "{:?}", r.mismatch);
        let c = r.effect.compression.unwrap();
        assert_eq!(c.path, vec![NodeId(-3), NodeId(-2), NodeId(-1)]);
        assert!(c.stunted);
        assert_eq!(r.effect.relocation, None);
    }

    #[test]
    fn wrong_deletion_is_reported() {
        let before = SplayTree::parse("((1) 2)").unwrap();
        let v = left_half_view(&before, None);
        let mut after_tree = before.clone();
        after_tree.pop().unwrap();
        let after = left_half_view(&after_tree, None);
        let r = check_step(DequeOp::Pop, NodeId(2), &v, &after);
        assert!(!r.matched);
    }
}
