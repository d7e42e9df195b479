//! Rooted forests with ordered children and postorder-preserving path
//! compressions.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::CompressionError;
use crate::splay::NodeId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeClass {
    Essential,
    /// Deleted automatically as soon as it becomes a leaf.
    Fluff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompressionKind {
    Halving,
    Total,
}

impl CompressionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CompressionKind::Halving => "halving",
            CompressionKind::Total => "total",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressionRecord {
    /// `path[i+1]` was the parent of `path[i]` when the compression ran.
    pub path: Vec<NodeId>,
    pub kind: CompressionKind,
    /// Number of nodes whose parent changed.
    pub length: usize,
    /// The compression did not terminate at a root.
    pub stunted: bool,
}

impl CompressionRecord {
    pub fn origin(&self) -> NodeId {
        self.path[0]
    }

    pub fn terminus(&self) -> NodeId {
        *self.path.last().unwrap()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HalvingOptions {
    /// When the path has an even number of nodes and ends at a root, also
    /// detach `u_{k-1}` so that it becomes a root.
    pub even_root_step: bool,
}

#[derive(Debug, Clone)]
struct GNode {
    parent: Option<NodeId>,
    children: VecDeque<NodeId>,
    class: NodeClass,
}

/// A forest whose roots and child lists carry a left-to-right order.
#[derive(Debug, Clone, Default)]
pub struct GeneralTree {
    nodes: FxHashMap<NodeId, GNode>,
    roots: Vec<NodeId>,
}

impl GeneralTree {
    pub fn new() -> Self {
        Self::default()
    }

    /// A single path `ids[0]` (leaf) up to `ids[last]` (root).
    pub fn path(ids: &[NodeId], class: impl Fn(NodeId) -> NodeClass) -> Self {
        let mut t = Self::new();
        let mut above: Option<NodeId> = None;
        for &id in ids.iter().rev() {
            match above {
                None => t.add_root(id, class(id)),
                Some(p) => t.attach_last(id, p, class(id)),
            }
            above = Some(id);
        }
        t
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.nodes.contains_key(&id)
    }

    pub fn roots(&self) -> &[NodeId] {
        &self.roots
    }

    pub fn root(&self) -> Option<NodeId> {
        self.roots.first().copied()
    }

    pub fn is_root(&self, id: NodeId) -> bool {
        self.nodes.get(&id).is_some_and(|n| n.parent.is_none())
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes.get(&id).and_then(|n| n.parent)
    }

    pub fn children(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes
            .get(&id)
            .into_iter()
            .flat_map(|n| n.children.iter().copied())
    }

    pub fn child_count(&self, id: NodeId) -> usize {
        self.nodes.get(&id).map_or(0, |n| n.children.len())
    }

    pub fn leftmost_child(&self, id: NodeId) -> Option<NodeId> {
        self.nodes
            .get(&id)
            .and_then(|n| n.children.front().copied())
    }

    pub fn class(&self, id: NodeId) -> Option<NodeClass> {
        self.nodes.get(&id).map(|n| n.class)
    }

    pub fn depth(&self, mut id: NodeId) -> usize {
        let mut d = 0;
        while let Some(p) = self.parent(id) {
            d += 1;
            id = p;
        }
        d
    }

    pub fn is_ancestor(&self, anc: NodeId, mut of: NodeId) -> bool {
        while let Some(p) = self.parent(of) {
            if p == anc {
                return true;
            }
            of = p;
        }
        false
    }

    pub fn add_root(&mut self, id: NodeId, class: NodeClass) {
        self.insert_node(id, None, class);
        self.roots.push(id);
    }

    /// Adds `id` as the new rightmost child of `parent`.
    pub fn attach_last(&mut self, id: NodeId, parent: NodeId, class: NodeClass) {
        self.insert_node(id, Some(parent), class);
        self.nodes
            .get_mut(&parent)
            .expect("parent")
            .children
            .push_back(id);
    }

    /// Adds a new leaf as the leftmost child of `parent`.
    pub fn add_leftmost_leaf(
        &mut self,
        id: NodeId,
        parent: NodeId,
        class: NodeClass,
    ) -> Result<(), CompressionError> {
        if !self.contains(parent) {
            return Err(CompressionError::UnknownNode(parent));
        }
        if self.contains(id) {
            return Err(CompressionError::Duplicate(id));
        }
        self.insert_node(id, Some(parent), class);
        self.nodes.get_mut(&parent).unwrap().children.push_front(id);
        Ok(())
    }

    fn insert_node(&mut self, id: NodeId, parent: Option<NodeId>, class: NodeClass) {
        let prev = self.nodes.insert(
            id,
            GNode {
                parent,
                children: VecDeque::new(),
                class,
            },
        );
        assert!(prev.is_none(), "node {id} inserted twice");
    }

    /// Root to leftmost leaf of the first tree.
    pub fn spine(&self) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut cur = self.root();
        while let Some(c) = cur {
            out.push(c);
            cur = self.leftmost_child(c);
        }
        out
    }

    pub fn leftmost_leaf(&self) -> Option<NodeId> {
        let mut cur = self.root()?;
        while let Some(c) = self.leftmost_child(cur) {
            cur = c;
        }
        Some(cur)
    }

    pub fn postorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        // (node, index of next child to visit)
        let mut stack: Vec<(NodeId, usize)> = Vec::new();
        for &r in &self.roots {
            stack.push((r, 0));
            while let Some(top) = stack.last_mut() {
                let (v, i) = *top;
                let node = &self.nodes[&v];
                if i < node.children.len() {
                    top.1 += 1;
                    stack.push((node.children[i], 0));
                } else {
                    out.push(v);
                    stack.pop();
                }
            }
        }
        out
    }

    pub fn postorder_of(&self, class: NodeClass) -> Vec<NodeId> {
        self.postorder()
            .into_iter()
            .filter(|v| self.nodes[v].class == class)
            .collect()
    }

    /// Removes a leaf. Fluff ancestors left childless are removed too; the
    /// returned list holds every removed node, starting with `id`.
    pub fn remove_leaf(&mut self, id: NodeId) -> Result<Vec<NodeId>, CompressionError> {
        let node = self
            .nodes
            .get(&id)
            .ok_or(CompressionError::UnknownNode(id))?;
        if !node.children.is_empty() {
            return Err(CompressionError::NotALeaf(id));
        }
        let mut removed = vec![id];
        let mut cur = node.parent;
        self.unlink(id);
        self.nodes.remove(&id);
        while let Some(p) = cur {
            let n = &self.nodes[&p];
            if n.class == NodeClass::Fluff && n.children.is_empty() {
                let up = n.parent;
                self.unlink(p);
                self.nodes.remove(&p);
                removed.push(p);
                cur = up;
            } else {
                break;
            }
        }
        Ok(removed)
    }

    fn unlink(&mut self, id: NodeId) {
        let parent = self.nodes[&id].parent;
        match parent {
            None => self.roots.retain(|&r| r != id),
            Some(p) => {
                let ch = &mut self.nodes.get_mut(&p).unwrap().children;
                if ch.front() == Some(&id) {
                    ch.pop_front();
                } else if let Some(i) = ch.iter().position(|&c| c == id) {
                    ch.remove(i);
                }
            }
        }
        self.nodes.get_mut(&id).unwrap().parent = None;
    }

    /// Deletes every fluff node in `candidates` that has become a leaf.
    fn sweep_fluff(&mut self, candidates: &[NodeId]) {
        for &c in candidates {
            if self
                .nodes
                .get(&c)
                .is_some_and(|n| n.class == NodeClass::Fluff && n.children.is_empty())
            {
                let _ = self.remove_leaf(c);
            }
        }
    }

    fn check_path(&self, path: &[NodeId]) -> Result<(), CompressionError> {
        for &v in path {
            if !self.contains(v) {
                return Err(CompressionError::UnknownNode(v));
            }
        }
        for w in path.windows(2) {
            if self.parent(w[0]) != Some(w[1]) {
                return Err(CompressionError::NotAPath {
                    child: w[0],
                    claimed_parent: w[1],
                });
            }
        }
        Ok(())
    }

    /// True when every node of `path` except the top is the leftmost child
    /// of the next one, i.e. the path lies along a left spine.
    pub fn is_spinal(&self, path: &[NodeId]) -> bool {
        path.windows(2)
            .all(|w| self.leftmost_child(w[1]) == Some(w[0]))
    }

    /// Moves `v` under `new_parent` as its leftmost child.
    fn reparent_leftmost(&mut self, v: NodeId, new_parent: NodeId) {
        self.unlink(v);
        self.nodes.get_mut(&v).unwrap().parent = Some(new_parent);
        self.nodes
            .get_mut(&new_parent)
            .unwrap()
            .children
            .push_front(v);
    }

    /// Halving compression of `path = (u_1, …, u_k)`: `p(u_i) := u_{i+2}` for
    /// every odd `i ≤ k-2`, each moved node becoming the leftmost child of
    /// its new parent.
    pub fn halving_compress(
        &mut self,
        path: &[NodeId],
        opts: HalvingOptions,
    ) -> Result<CompressionRecord, CompressionError> {
        self.check_path(path)?;
        let k = path.len();
        let top = *path.last().ok_or(CompressionError::ZeroLength)?;
        let moves = (k.saturating_sub(1)) / 2;
        let root_step = opts.even_root_step && k >= 2 && k.is_multiple_of(2) && self.is_root(top);
        let length = moves + usize::from(root_step);
        if length == 0 {
            return Err(CompressionError::ZeroLength);
        }
        let stunted = !self.is_root(top);
        let mut emptied = Vec::new();
        for i in (0..k.saturating_sub(2)).step_by(2) {
            emptied.push(path[i + 1]);
            self.reparent_leftmost(path[i], path[i + 2]);
        }
        if root_step {
            let v = path[k - 2];
            self.unlink(v);
            let at = self.roots.iter().position(|&r| r == top).unwrap();
            self.roots.insert(at, v);
            emptied.push(top);
        }
        self.sweep_fluff(&emptied);
        Ok(CompressionRecord {
            path: path.to_vec(),
            kind: CompressionKind::Halving,
            length,
            stunted,
        })
    }

    /// Total compression of `path = (u_1, …, u_k)`: `p(u_i) := u_k` for
    /// `i ≤ k-2`, with `u_1, …, u_{k-2}` prepended, in order, to the children
    /// of `u_k`.
    pub fn total_compress(
        &mut self,
        path: &[NodeId],
    ) -> Result<CompressionRecord, CompressionError> {
        self.check_path(path)?;
        let k = path.len();
        if k < 3 {
            return Err(CompressionError::ZeroLength);
        }
        let top = path[k - 1];
        let stunted = !self.is_root(top);
        let mut emptied = Vec::new();
        // Prepending in reverse keeps u_1 leftmost.
        for i in (0..k - 2).rev() {
            emptied.push(path[i + 1]);
            self.reparent_leftmost(path[i], top);
        }
        self.sweep_fluff(&emptied);
        Ok(CompressionRecord {
            path: path.to_vec(),
            kind: CompressionKind::Total,
            length: k - 2,
            stunted,
        })
    }

    /// Structural equality: same roots in order and same ordered child
    /// lists. Returns a description of the first difference in postorder.
    pub fn diff(&self, other: &GeneralTree) -> Option<String> {
        if self.roots != other.roots {
            return Some(format!("roots {:?} vs {:?}", self.roots, other.roots));
        }
        if self.nodes.len() != other.nodes.len() {
            return Some(format!(
                "node count {} vs {}",
                self.nodes.len(),
                other.nodes.len()
            ));
        }
        let same = |v: &NodeId, a: &GNode| {
            other.nodes.get(v).is_some_and(|b| {
                a.parent == b.parent && a.class == b.class && a.children == b.children
            })
        };
        if self.nodes.iter().all(|(v, a)| same(v, a)) {
            return None;
        }
        for v in self.postorder() {
            let a = &self.nodes[&v];
            let Some(b) = other.nodes.get(&v) else {
                return Some(format!("node {v} missing"));
            };
            if a.parent != b.parent {
                return Some(format!("parent of {v}: {:?} vs {:?}", a.parent, b.parent));
            }
            if a.children != b.children {
                return Some(format!(
                    "children of {v}: {:?} vs {:?}",
                    a.children, b.children
                ));
            }
            if a.class != b.class {
                return Some(format!("class of {v} differs"));
            }
        }
        Some("trees differ".into())
    }

    /// Link consistency: every child points back, every non-root has one
    /// parent, roots are exactly the parentless nodes, no duplicates.
    pub fn validate(&self) -> Result<(), CompressionError> {
        let bad = |m: String| Err(CompressionError::Invariant(m));
        let mut seen = std::collections::HashSet::new();
        for &r in &self.roots {
            if self.parent(r).is_some() {
                return bad(format!("root {r} has a parent"));
            }
        }
        for (&v, n) in &self.nodes {
            for &c in &n.children {
                if !seen.insert(c) {
                    return bad(format!("{c} listed as a child twice"));
                }
                if self.parent(c) != Some(v) {
                    return bad(format!("child {c} of {v} does not point back"));
                }
            }
            if n.parent.is_none() && !self.roots.contains(&v) {
                return bad(format!("{v} is parentless but not a root"));
            }
            if n.class == NodeClass::Fluff && n.children.is_empty() {
                return bad(format!("fluff leaf {v} survived"));
            }
        }
        if self.postorder().len() != self.nodes.len() {
            return bad("unreachable nodes".into());
        }
        Ok(())
    }
}
