//! The general-tree view of the left half of a splay tree.
//!
//! Given the binary tree `L` induced by the left half, rotate the nodes of
//! its right spine across the root until the root has a single left child
//! (`L'`), then read `L'` as a left-child/right-sibling encoding of an
//! ordered tree (`L''`). The root of `L` is kept as the *designated root*;
//! in `L''` it sits on the spine below the former right-spine nodes.

use rustc_hash::FxHashMap;

use super::tree::{CompressionRecord, GeneralTree, HalvingOptions, NodeClass};
use super::CompressionError;
use crate::splay::{NodeId, SplayTree};

#[derive(Debug, Clone, Default)]
pub struct LeftHalfView {
    pub tree: GeneralTree,
    /// Root of the induced binary tree `L`.
    pub designated_root: Option<NodeId>,
}

/// Model-level effect of one deque operation on the view.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ViewEffect {
    pub compression: Option<CompressionRecord>,
    pub deleted: Option<NodeId>,
    /// New leaf and its parent.
    pub added: Option<(NodeId, Option<NodeId>)>,
    /// Designated root moved from `.0` to `.1`.
    pub relocation: Option<(Option<NodeId>, Option<NodeId>)>,
}

/// `L''` of the whole tree (every node in the left half).
pub fn binary_to_general(t: &SplayTree) -> GeneralTree {
    left_half_view(t, None).tree
}

/// `L''` of the nodes `<= boundary` (all nodes when `boundary` is `None`).
pub fn left_half_view(t: &SplayTree, boundary: Option<NodeId>) -> LeftHalfView {
    let in_left = |v: NodeId| boundary.is_none_or(|b| v <= b);
    // First left-half node on the leftward descent from `start`.
    let first_left = |mut cur: Option<NodeId>| {
        while let Some(u) = cur {
            if in_left(u) {
                return Some(u);
            }
            cur = t.left(u);
        }
        None
    };
    let l_left = |v: NodeId| t.left(v);
    let l_right = |v: NodeId| first_left(t.right(v));

    let Some(r) = first_left(t.root()) else {
        return LeftHalfView::default();
    };
    let mut spine = vec![r];
    while let Some(s) = l_right(*spine.last().unwrap()) {
        spine.push(s);
    }
    // Links of L' that differ from L: only right-spine nodes change.
    let mut over: FxHashMap<NodeId, (Option<NodeId>, Option<NodeId>)> = FxHashMap::default();
    for (i, &s) in spine.iter().enumerate() {
        let left = if i == 0 {
            l_left(s)
        } else {
            Some(spine[i - 1])
        };
        let right = spine.get(i + 1).and_then(|&n| l_left(n));
        over.insert(s, (left, right));
    }
    let lp_left = |v: NodeId| over.get(&v).map_or_else(|| l_left(v), |o| o.0);
    let lp_right = |v: NodeId| over.get(&v).map_or_else(|| l_right(v), |o| o.1);

    let top = *spine.last().unwrap();
    let mut g = GeneralTree::new();
    g.add_root(top, NodeClass::Essential);
    let mut stack = vec![top];
    while let Some(v) = stack.pop() {
        let mut c = lp_left(v);
        while let Some(ch) = c {
            g.attach_last(ch, v, NodeClass::Essential);
            stack.push(ch);
            c = lp_right(ch);
        }
    }
    LeftHalfView {
        tree: g,
        designated_root: Some(r),
    }
}

impl LeftHalfView {
    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    /// Description of the first difference, or `None` when identical.
    pub fn diff(&self, other: &LeftHalfView) -> Option<String> {
        if self.designated_root != other.designated_root {
            return Some(format!(
                "designated root {:?} vs {:?}",
                self.designated_root, other.designated_root
            ));
        }
        self.tree.diff(&other.tree)
    }

    /// Push: a new leaf `v` becomes the leftmost child of the designated
    /// root, then the designated root relocates to `v`.
    pub fn apply_push(&mut self, v: NodeId) -> Result<ViewEffect, CompressionError> {
        let r = self.designated_root;
        match r {
            Some(r) => self.tree.add_leftmost_leaf(v, r, NodeClass::Essential)?,
            None => self.tree.add_root(v, NodeClass::Essential),
        }
        self.designated_root = Some(v);
        Ok(ViewEffect {
            added: Some((v, r)),
            relocation: Some((r, Some(v))),
            ..ViewEffect::default()
        })
    }

    /// Pop: the leftmost leaf `x = u_1` with ancestors `u_2, …, u_k = r`.
    /// The leaf is deleted and `(u_2, …, u_k)` undergoes a halving
    /// compression, so the nodes moved are `u_2, u_4, …`. When `k` is odd
    /// the designated root relocates to its leftmost child `u_{k-1}`; when
    /// `x` is the designated root itself it relocates to `x`'s parent.
    pub fn apply_pop(&mut self) -> Result<ViewEffect, CompressionError> {
        let x = self
            .tree
            .leftmost_leaf()
            .ok_or(CompressionError::EmptyView)?;
        let r = self.designated_root.ok_or(CompressionError::EmptyView)?;
        let mut path = vec![x];
        while *path.last().unwrap() != r {
            match self.tree.parent(*path.last().unwrap()) {
                Some(p) => path.push(p),
                None => return Err(CompressionError::RootNotOnSpine(r)),
            }
        }
        let k = path.len();
        let mut effect = ViewEffect::default();
        if k == 1 {
            let up = self.tree.parent(x);
            self.tree.remove_leaf(x)?;
            effect.deleted = Some(x);
            self.designated_root = up;
            effect.relocation = Some((Some(r), up));
            return Ok(effect);
        }
        let upper = &path[1..];
        if upper.len() >= 3 {
            effect.compression = Some(
                self.tree
                    .halving_compress(upper, HalvingOptions::default())?,
            );
        }
        self.tree.remove_leaf(x)?;
        effect.deleted = Some(x);
        if k % 2 == 1 {
            let to = path[k - 2];
            debug_assert_eq!(self.tree.leftmost_child(r), Some(to));
            self.designated_root = Some(to);
            effect.relocation = Some((Some(r), Some(to)));
        }
        Ok(effect)
    }

    /// Candidate eject effect: a halving compression along `len` nodes
    /// starting at the designated root `r` (or at its parent when
    /// `from_parent`), none when fewer than 3 nodes, optionally followed by a
    /// relocation of the designated root to its parent.
    pub fn apply_eject_candidate(
        &mut self,
        from_parent: bool,
        len: usize,
        relocate: bool,
    ) -> Result<ViewEffect, CompressionError> {
        let r = self.designated_root.ok_or(CompressionError::EmptyView)?;
        let start = if from_parent {
            self.tree.parent(r).ok_or(CompressionError::ZeroLength)?
        } else {
            r
        };
        let mut path = vec![start];
        while path.len() < len {
            match self.tree.parent(*path.last().unwrap()) {
                Some(p) => path.push(p),
                None => return Err(CompressionError::ZeroLength),
            }
        }
        let mut effect = ViewEffect::default();
        if path.len() >= 3 {
            effect.compression = Some(
                self.tree
                    .halving_compress(&path, HalvingOptions::default())?,
            );
        }
        if relocate {
            let up = self.tree.parent(r);
            if up.is_none() {
                return Err(CompressionError::ZeroLength);
            }
            self.designated_root = up;
            effect.relocation = Some((Some(r), up));
        }
        Ok(effect)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[i64]) -> Vec<NodeId> {
        v.iter().copied().map(NodeId).collect()
    }

    #[test]
    fn right_child_is_rotated_over_the_root() {
        // r = 2 with left child a = 1 and right child b = 3
        let t = SplayTree::parse("((1) 2 (3))").unwrap();
        let g = binary_to_general(&t);
        assert_eq!(g.spine(), ids(&[3, 2, 1]));
        assert_eq!(g.len(), 3);
        assert_eq!(left_half_view(&t, None).designated_root, Some(NodeId(2)));
    }

    #[test]
    fn trivial_shapes() {
        let g = binary_to_general(&SplayTree::left_path(1));
        assert_eq!(g.postorder(), ids(&[1]));
        let g = binary_to_general(&SplayTree::left_path(4));
        assert_eq!(g.spine(), ids(&[4, 3, 2, 1]));
        assert!(binary_to_general(&SplayTree::new()).is_empty());
    }

    #[test]
    fn postorder_is_deque_order() {
        let t = SplayTree::parse("(((1) 2 ((3) 4)) 5 ((6) 7 (8)))").unwrap();
        let v = left_half_view(&t, None);
        assert_eq!(v.tree.postorder(), t.in_order());
        let v = left_half_view(&t, Some(NodeId(4)));
        assert_eq!(v.tree.postorder(), ids(&[1, 2, 3, 4]));
        // L's root is the first left-half node on the leftward descent
        assert_eq!(v.designated_root, Some(NodeId(2)));
    }

    #[test]
    fn push_mirror() {
        let t = SplayTree::parse("((1) 2 (3))").unwrap();
        let mut v = left_half_view(&t, None);
        let e = v.apply_push(NodeId(0)).unwrap();
        assert_eq!(e.added, Some((NodeId(0), Some(NodeId(2)))));
        assert_eq!(v.designated_root, Some(NodeId(0)));
        assert_eq!(v.tree.leftmost_child(NodeId(2)), Some(NodeId(0)));
        assert_eq!(v.tree.postorder(), ids(&[0, 1, 2, 3]));
    }

    #[test]
    fn pop_on_empty_view_fails() {
        let mut v = LeftHalfView::default();
        assert_eq!(v.apply_pop(), Err(CompressionError::EmptyView));
    }
}
