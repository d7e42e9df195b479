//! Splay tree restricted to deque operations.
//!
//! Node identifiers double as keys: pushes draw identifiers below every
//! identifier ever handed out and injects draw identifiers above, so the
//! symmetric order of the tree is plain numeric order. Every rotation is
//! recorded in a [`RotationLedger`].

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Identifier of a deque element. Numeric order is deque order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub i64);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplayError {
    #[error("node {0} is not in the tree")]
    NotFound(NodeId),
    #[error("operation on an empty tree")]
    Empty,
    #[error("identifier {id} cannot be {op}ed: it must {rule}")]
    BadIdentifier {
        id: NodeId,
        op: &'static str,
        rule: &'static str,
    },
    #[error("malformed tree dump: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Running rotation counts. Step counters count splay steps; `rotations`
/// counts single edge rotations (a zig-zig or zig-zag step is two).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RotationLedger {
    pub zig: u64,
    pub zig_zig: u64,
    pub zig_zag: u64,
    pub rotations: u64,
    /// Rotations performed while splaying for `pop`.
    pub pop_rotations: u64,
    /// Rotations performed while splaying for `eject`.
    pub eject_rotations: u64,
}

impl RotationLedger {
    pub fn steps(&self) -> (u64, u64, u64) {
        (self.zig, self.zig_zig, self.zig_zag)
    }
}

/// What a `pop` (or `eject`) did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopRecord {
    /// Pre-operation path from the removed node up to the pre-operation root.
    pub splayed_path: Vec<NodeId>,
    pub rotations: u64,
    pub deleted: NodeId,
}

#[derive(Debug, Clone, Copy, Default)]
struct Node {
    parent: Option<NodeId>,
    left: Option<NodeId>,
    right: Option<NodeId>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// Binary search tree over [`NodeId`]s, supporting the four deque
/// operations plus `splay` of an arbitrary node.
#[derive(Debug, Clone, Default)]
pub struct SplayTree {
    slots: VecDeque<Option<Node>>,
    /// Identifier stored at `slots[0]`.
    base: i64,
    root: Option<NodeId>,
    len: usize,
    min: Option<NodeId>,
    max: Option<NodeId>,
    /// Smallest and largest identifiers ever admitted.
    lowest_ever: Option<i64>,
    highest_ever: Option<i64>,
    ledger: RotationLedger,
}

impl SplayTree {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` nodes `1..=n` arranged as a left path: the root is `n` and every
    /// other node is the left child of its successor.
    pub fn left_path(n: usize) -> Self {
        let mut t = Self::new();
        if n == 0 {
            return t;
        }
        t.base = 1;
        for i in 1..=n as i64 {
            let node = Node {
                parent: (i < n as i64).then_some(NodeId(i + 1)),
                left: (i > 1).then_some(NodeId(i - 1)),
                right: None,
            };
            t.slots.push_back(Some(node));
        }
        t.root = Some(NodeId(n as i64));
        t.len = n;
        t.min = Some(NodeId(1));
        t.max = Some(NodeId(n as i64));
        t.lowest_ever = Some(1);
        t.highest_ever = Some(n as i64);
        t
    }

    /// Mirror image of [`SplayTree::left_path`]: root `1`, each node the right
    /// child of its predecessor.
    pub fn right_path(n: usize) -> Self {
        let mut t = Self::new();
        if n == 0 {
            return t;
        }
        t.base = 1;
        for i in 1..=n as i64 {
            let node = Node {
                parent: (i > 1).then_some(NodeId(i - 1)),
                left: None,
                right: (i < n as i64).then_some(NodeId(i + 1)),
            };
            t.slots.push_back(Some(node));
        }
        t.root = Some(NodeId(1));
        t.len = n;
        t.min = Some(NodeId(1));
        t.max = Some(NodeId(n as i64));
        t.lowest_ever = Some(1);
        t.highest_ever = Some(n as i64);
        t
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn root(&self) -> Option<NodeId> {
        self.root
    }

    pub fn min(&self) -> Option<NodeId> {
        self.min
    }

    pub fn max(&self) -> Option<NodeId> {
        self.max
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.node(id).is_some()
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.node(id).and_then(|n| n.parent)
    }

    pub fn left(&self, id: NodeId) -> Option<NodeId> {
        self.node(id).and_then(|n| n.left)
    }

    pub fn right(&self, id: NodeId) -> Option<NodeId> {
        self.node(id).and_then(|n| n.right)
    }

    pub fn rotation_count(&self) -> RotationLedger {
        self.ledger
    }

    /// The identifier the next `push` would receive.
    pub fn next_push_id(&self) -> NodeId {
        NodeId(self.lowest_ever.map_or(0, |l| l - 1))
    }

    /// The identifier the next `inject` would receive.
    pub fn next_inject_id(&self) -> NodeId {
        NodeId(self.highest_ever.map_or(0, |h| h + 1))
    }

    pub fn highest_ever(&self) -> Option<NodeId> {
        self.highest_ever.map(NodeId)
    }

    fn index(&self, id: NodeId) -> Option<usize> {
        let off = id.0.checked_sub(self.base)?;
        if off < 0 {
            return None;
        }
        let off = off as usize;
        (off < self.slots.len()).then_some(off)
    }

    fn node(&self, id: NodeId) -> Option<&Node> {
        self.index(id).and_then(|i| self.slots[i].as_ref())
    }

    fn node_mut(&mut self, id: NodeId) -> &mut Node {
        let i = self.index(id).expect("live node");
        self.slots[i].as_mut().expect("live node")
    }

    fn side_of(&self, child: NodeId, parent: NodeId) -> Side {
        if self.node(parent).and_then(|p| p.left) == Some(child) {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Rotates the edge between `x` and its parent, lifting `x`.
    fn rotate(&mut self, x: NodeId) {
        let y = self
            .node(x)
            .and_then(|n| n.parent)
            .expect("rotate needs a parent");
        let z = self.node(y).and_then(|n| n.parent);
        match self.side_of(x, y) {
            Side::Left => {
                let b = self.node(x).unwrap().right;
                self.node_mut(y).left = b;
                if let Some(b) = b {
                    self.node_mut(b).parent = Some(y);
                }
                self.node_mut(x).right = Some(y);
            }
            Side::Right => {
                let b = self.node(x).unwrap().left;
                self.node_mut(y).right = b;
                if let Some(b) = b {
                    self.node_mut(b).parent = Some(y);
                }
                self.node_mut(x).left = Some(y);
            }
        }
        self.node_mut(y).parent = Some(x);
        self.node_mut(x).parent = z;
        match z {
            None => self.root = Some(x),
            Some(z) => {
                let zn = self.node_mut(z);
                if zn.left == Some(y) {
                    zn.left = Some(x);
                } else {
                    zn.right = Some(x);
                }
            }
        }
        self.ledger.rotations += 1;
    }

    /// Moves `x` to the root by zig, zig-zig and zig-zag steps. Returns the
    /// number of edge rotations performed.
    pub fn splay(&mut self, x: NodeId) -> Result<u64, SplayError> {
        if !self.contains(x) {
            return Err(SplayError::NotFound(x));
        }
        let before = self.ledger.rotations;
        while let Some(y) = self.parent(x) {
            match self.parent(y) {
                None => {
                    self.rotate(x);
                    self.ledger.zig += 1;
                }
                Some(z) => {
                    if self.side_of(x, y) == self.side_of(y, z) {
                        // the edge (y,z) goes first, then (x,y)
                        self.rotate(y);
                        self.rotate(x);
                        self.ledger.zig_zig += 1;
                    } else {
                        self.rotate(x);
                        self.rotate(x);
                        self.ledger.zig_zag += 1;
                    }
                }
            }
        }
        Ok(self.ledger.rotations - before)
    }

    fn admit(&mut self, id: NodeId, node: Node) {
        if self.slots.is_empty() {
            self.base = id.0;
            self.slots.push_back(Some(node));
        } else if id.0 < self.base {
            while self.base > id.0 + 1 {
                self.slots.push_front(None);
                self.base -= 1;
            }
            self.slots.push_front(Some(node));
            self.base -= 1;
        } else {
            let off = (id.0 - self.base) as usize;
            while self.slots.len() < off {
                self.slots.push_back(None);
            }
            self.slots.push_back(Some(node));
        }
        self.lowest_ever = Some(self.lowest_ever.map_or(id.0, |l| l.min(id.0)));
        self.highest_ever = Some(self.highest_ever.map_or(id.0, |h| h.max(id.0)));
        self.len += 1;
    }

    /// Pushes a fresh node with the next push identifier.
    pub fn push(&mut self) -> NodeId {
        let id = self.next_push_id();
        self.push_node(id).expect("fresh push identifier");
        id
    }

    /// Makes `v` the root with the former root as its right child.
    pub fn push_node(&mut self, v: NodeId) -> Result<(), SplayError> {
        if self.lowest_ever.is_some_and(|l| v.0 >= l) {
            return Err(SplayError::BadIdentifier {
                id: v,
                op: "push",
                rule: "precede every identifier ever used",
            });
        }
        let old = self.root;
        self.admit(
            v,
            Node {
                parent: None,
                left: None,
                right: old,
            },
        );
        if let Some(r) = old {
            self.node_mut(r).parent = Some(v);
        }
        self.root = Some(v);
        self.min = Some(v);
        if self.max.is_none() {
            self.max = Some(v);
        }
        Ok(())
    }

    /// Injects a fresh node with the next inject identifier.
    pub fn inject(&mut self) -> NodeId {
        let id = self.next_inject_id();
        self.inject_node(id).expect("fresh inject identifier");
        id
    }

    /// Makes `v` the root with the former root as its left child.
    pub fn inject_node(&mut self, v: NodeId) -> Result<(), SplayError> {
        if self.highest_ever.is_some_and(|h| v.0 <= h) {
            return Err(SplayError::BadIdentifier {
                id: v,
                op: "inject",
                rule: "follow every identifier ever used",
            });
        }
        let old = self.root;
        self.admit(
            v,
            Node {
                parent: None,
                left: old,
                right: None,
            },
        );
        if let Some(r) = old {
            self.node_mut(r).parent = Some(v);
        }
        self.root = Some(v);
        self.max = Some(v);
        if self.min.is_none() {
            self.min = Some(v);
        }
        Ok(())
    }

    fn path_to_root(&self, mut x: NodeId) -> Vec<NodeId> {
        let mut path = vec![x];
        while let Some(p) = self.parent(x) {
            path.push(p);
            x = p;
        }
        path
    }

    fn remove_slot(&mut self, id: NodeId) {
        let i = self.index(id).expect("live node");
        self.slots[i] = None;
        self.len -= 1;
        if self.len == 0 {
            self.slots.clear();
        }
    }

    /// Splays the leftmost node to the root and deletes it.
    pub fn pop(&mut self) -> Result<PopRecord, SplayError> {
        let x = self.min.ok_or(SplayError::Empty)?;
        let splayed_path = self.path_to_root(x);
        let rotations = self.splay(x)?;
        self.ledger.pop_rotations += rotations;
        let rest = self.node(x).unwrap().right;
        debug_assert!(self.node(x).unwrap().left.is_none());
        if let Some(r) = rest {
            self.node_mut(r).parent = None;
        }
        self.root = rest;
        self.remove_slot(x);
        self.min = rest.map(|r| self.leftmost_below(r));
        if rest.is_none() {
            self.max = None;
        }
        Ok(PopRecord {
            splayed_path,
            rotations,
            deleted: x,
        })
    }

    /// Splays the rightmost node to the root and deletes it.
    pub fn eject(&mut self) -> Result<PopRecord, SplayError> {
        let x = self.max.ok_or(SplayError::Empty)?;
        let splayed_path = self.path_to_root(x);
        let rotations = self.splay(x)?;
        self.ledger.eject_rotations += rotations;
        let rest = self.node(x).unwrap().left;
        debug_assert!(self.node(x).unwrap().right.is_none());
        if let Some(r) = rest {
            self.node_mut(r).parent = None;
        }
        self.root = rest;
        self.remove_slot(x);
        self.max = rest.map(|r| self.rightmost_below(r));
        if rest.is_none() {
            self.min = None;
        }
        Ok(PopRecord {
            splayed_path,
            rotations,
            deleted: x,
        })
    }

    fn leftmost_below(&self, mut x: NodeId) -> NodeId {
        while let Some(l) = self.left(x) {
            x = l;
        }
        x
    }

    fn rightmost_below(&self, mut x: NodeId) -> NodeId {
        while let Some(r) = self.right(x) {
            x = r;
        }
        x
    }

    /// Symmetric-order listing of the live nodes.
    pub fn in_order(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.len);
        let mut stack = Vec::new();
        let mut cur = self.root;
        loop {
            while let Some(c) = cur {
                stack.push(c);
                cur = self.left(c);
            }
            match stack.pop() {
                None => break,
                Some(c) => {
                    out.push(c);
                    cur = self.right(c);
                }
            }
        }
        out
    }

    /// Full structural check: link symmetry, node count, strictly increasing
    /// symmetric order and the cached extremes.
    pub fn validate(&self) -> Result<(), SplayError> {
        let bad = |msg: String| Err(SplayError::Invariant(msg));
        if let Some(r) = self.root {
            if self.parent(r).is_some() {
                return bad(format!("root {r} has a parent"));
            }
        }
        let order = self.in_order();
        if order.len() != self.len {
            return bad(format!(
                "reachable nodes {} differ from len {}",
                order.len(),
                self.len
            ));
        }
        if order.windows(2).any(|w| w[0] >= w[1]) {
            return bad("symmetric order is not increasing".into());
        }
        for &v in &order {
            let n = self.node(v).unwrap();
            for c in [n.left, n.right].into_iter().flatten() {
                if self.parent(c) != Some(v) {
                    return bad(format!("child {c} of {v} does not point back"));
                }
            }
        }
        if self.min != order.first().copied() || self.max != order.last().copied() {
            return bad("cached extremes are stale".into());
        }
        if let Some(r) = self.root {
            if self.min != Some(self.leftmost_below(r)) {
                return bad("cached leftmost node disagrees with descent".into());
            }
        }
        Ok(())
    }

    /// Parenthesised dump: `(L id R)` with absent subtrees omitted, e.g.
    /// `((1) 2 (3))`. The empty tree dumps as `()`.
    pub fn dump(&self) -> String {
        fn go(t: &SplayTree, v: NodeId, out: &mut String) {
            out.push('(');
            if let Some(l) = t.left(v) {
                go(t, l, out);
                out.push(' ');
            }
            out.push_str(&v.to_string());
            if let Some(r) = t.right(v) {
                out.push(' ');
                go(t, r, out);
            }
            out.push(')');
        }
        let mut out = String::new();
        match self.root {
            None => out.push_str("()"),
            Some(r) => go(self, r, &mut out),
        }
        out
    }

    /// Parses the output of [`SplayTree::dump`]. Identifiers must appear in
    /// strictly increasing symmetric order.
    pub fn parse(src: &str) -> Result<Self, SplayError> {
        let tokens = tokenize(src)?;
        let mut t = SplayTree::new();
        if tokens == [Tok::Open, Tok::Close] {
            return Ok(t);
        }
        let mut pos = 0;
        let mut nodes: Vec<(NodeId, Node)> = Vec::new();
        let root = parse_subtree(&tokens, &mut pos, None, &mut nodes)?;
        if pos != tokens.len() {
            return Err(SplayError::Parse("trailing input".into()));
        }
        nodes.sort_by_key(|(id, _)| *id);
        if nodes.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(SplayError::Parse("duplicate identifier".into()));
        }
        for (id, node) in nodes {
            t.admit(id, node);
        }
        t.root = Some(root);
        t.min = Some(t.leftmost_below(root));
        t.max = Some(t.rightmost_below(root));
        let order = t.in_order();
        if order.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SplayError::Parse(
                "identifiers not in symmetric order".into(),
            ));
        }
        Ok(t)
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Id(i64),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, SplayError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '(' => {
                out.push(Tok::Open);
                chars.next();
            }
            ')' => {
                out.push(Tok::Close);
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '-' | '0'..='9' => {
                let mut s = String::new();
                s.push(c);
                chars.next();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let v = s
                    .parse()
                    .map_err(|_| SplayError::Parse(format!("bad identifier {s:?}")))?;
                out.push(Tok::Id(v));
            }
            other => return Err(SplayError::Parse(format!("unexpected {other:?}"))),
        }
    }
    Ok(out)
}

fn parse_subtree(
    toks: &[Tok],
    pos: &mut usize,
    parent: Option<NodeId>,
    nodes: &mut Vec<(NodeId, Node)>,
) -> Result<NodeId, SplayError> {
    let err = |m: &str| SplayError::Parse(m.to_string());
    if toks.get(*pos) != Some(&Tok::Open) {
        return Err(err("expected '('"));
    }
    *pos += 1;
    // Left subtree is parsed before we know our id; patch its parent after.
    let left = if toks.get(*pos) == Some(&Tok::Open) {
        Some(parse_subtree(toks, pos, None, nodes)?)
    } else {
        None
    };
    let id = match toks.get(*pos) {
        Some(Tok::Id(v)) => NodeId(*v),
        _ => return Err(err("expected identifier")),
    };
    *pos += 1;
    if let Some(l) = left {
        nodes.iter_mut().find(|(i, _)| *i == l).unwrap().1.parent = Some(id);
    }
    let right = if toks.get(*pos) == Some(&Tok::Open) {
        Some(parse_subtree(toks, pos, Some(id), nodes)?)
    } else {
        None
    };
    if toks.get(*pos) != Some(&Tok::Close) {
        return Err(err("expected ')'"));
    }
    *pos += 1;
    nodes.push((
        id,
        Node {
            parent,
            left,
            right,
        },
    ));
    Ok(id)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SplayTree {
        SplayTree::parse(s).unwrap()
    }

    #[test]
    fn zig_zig_hangs_subtrees_per_rotation_order() {
        // z=30 with left y=20 with left x=10; subtrees a,b,c,d = 5,15,25,35
        let mut tree = t("((((5) 10 (15)) 20 (25)) 30 (35))");
        let rot = tree.splay(NodeId(10)).unwrap();
        assert_eq!(rot, 2);
        assert_eq!(tree.dump(), "((5) 10 ((15) 20 ((25) 30 (35))))");
        assert_eq!(tree.rotation_count().steps(), (0, 1, 0));
        assert_eq!(tree.rotation_count().rotations, 2);
        tree.validate().unwrap();
    }

    #[test]
    fn zig_zag_splits_grandparent_and_parent() {
        // z=30, left y=10, y's right x=20
        let mut tree = t("(((5) 10 ((15) 20 (25))) 30 (35))");
        assert_eq!(tree.splay(NodeId(20)).unwrap(), 2);
        assert_eq!(tree.dump(), "(((5) 10 (15)) 20 ((25) 30 (35)))");
        assert_eq!(tree.rotation_count().steps(), (0, 0, 1));
    }

    #[test]
    fn splay_of_root_is_identity() {
        let mut tree = t("((1) 2 (3))");
        assert_eq!(tree.splay(NodeId(2)).unwrap(), 0);
        assert_eq!(tree.dump(), "((1) 2 (3))");
        assert_eq!(tree.rotation_count(), RotationLedger::default());
    }

    #[test]
    fn splay_missing_node_is_not_found() {
        let mut tree = t("((1) 2)");
        assert_eq!(tree.splay(NodeId(9)), Err(SplayError::NotFound(NodeId(9))));
    }

    #[test]
    fn push_hangs_old_root_on_the_right() {
        let mut tree = SplayTree::new();
        let v = tree.push();
        assert_eq!(tree.dump(), format!("({v})"));
        let mut tree = SplayTree::left_path(2);
        let v = tree.push();
        let w = tree.push();
        assert!(w < v);
        assert_eq!(tree.root(), Some(w));
        assert_eq!(tree.right(w), Some(v));
        assert_eq!(tree.right(v), Some(NodeId(2)));
        assert_eq!(tree.rotation_count().rotations, 0);
        tree.validate().unwrap();
    }

    #[test]
    fn push_rejects_used_identifier() {
        let mut tree = SplayTree::left_path(3);
        assert!(matches!(
            tree.push_node(NodeId(2)),
            Err(SplayError::BadIdentifier { .. })
        ));
        // popping does not free the identifier for reuse
        tree.pop().unwrap();
        assert!(tree.push_node(NodeId(1)).is_err());
        assert!(tree.push_node(NodeId(0)).is_ok());
    }

    #[test]
    fn pop_examples() {
        let mut one = SplayTree::left_path(1);
        let rec = one.pop().unwrap();
        assert_eq!(rec.rotations, 0);
        assert!(one.is_empty());
        assert_eq!(one.dump(), "()");

        let mut two = SplayTree::left_path(2);
        let rec = two.pop().unwrap();
        assert_eq!(rec.rotations, 1);
        assert_eq!(rec.deleted, NodeId(1));
        assert_eq!(two.dump(), "(2)");

        let mut three = SplayTree::left_path(3);
        let rec = three.pop().unwrap();
        assert_eq!(rec.splayed_path, vec![NodeId(1), NodeId(2), NodeId(3)]);
        assert_eq!(rec.rotations, 2);
        assert_eq!(three.dump(), "(2 (3))");
        assert_eq!(three.rotation_count().steps(), (0, 1, 0));
    }

    #[test]
    fn pop_with_lone_right_child_promotes_it() {
        let mut tree = t("(1 ((2) 3))");
        let rec = tree.pop().unwrap();
        assert_eq!(rec.rotations, 0);
        assert_eq!(tree.dump(), "((2) 3)");
        assert_eq!(tree.min(), Some(NodeId(2)));
    }

    #[test]
    fn empty_pop_and_eject_fail() {
        let mut tree = SplayTree::new();
        assert_eq!(tree.pop(), Err(SplayError::Empty));
        assert_eq!(tree.eject(), Err(SplayError::Empty));
    }

    #[test]
    fn inject_and_eject_mirror_push_and_pop() {
        let mut tree = SplayTree::left_path(1);
        let v = tree.inject();
        assert_eq!(tree.root(), Some(v));
        assert_eq!(tree.left(v), Some(NodeId(1)));

        let mut single = SplayTree::right_path(1);
        single.eject().unwrap();
        assert!(single.is_empty());

        let mut three = SplayTree::right_path(3);
        let rec = three.eject().unwrap();
        assert_eq!(rec.rotations, 2);
        assert_eq!(rec.deleted, NodeId(3));
        assert_eq!(three.dump(), "((1) 2)");
    }

    #[test]
    fn ledger_untouched_by_single_node_pop() {
        let mut tree = SplayTree::left_path(1);
        tree.pop().unwrap();
        assert_eq!(tree.rotation_count(), RotationLedger::default());
    }

    #[test]
    fn dump_round_trips() {
        let s = "(((-3) 0 (2)) 4 ((5) 7))";
        assert_eq!(t(s).dump(), s);
        assert!(SplayTree::parse("((2) 1)").is_err());
        assert!(SplayTree::parse("((1) 2").is_err());
    }

    #[test]
    fn identifiers_survive_emptying() {
        let mut tree = SplayTree::left_path(2);
        tree.pop().unwrap();
        tree.pop().unwrap();
        let v = tree.push();
        assert_eq!(v, NodeId(0));
        let w = tree.inject();
        assert_eq!(w, NodeId(3));
        assert_eq!(tree.in_order(), vec![v, w]);
        tree.validate().unwrap();
    }
}
