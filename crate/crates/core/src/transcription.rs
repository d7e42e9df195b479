//! Transcription of a compression trace into a Davenport-Schinzel sequence.
//!
//! Each phase of the trace starts from a snapshot tree. Its nodes, in
//! postorder (deletion order), are cut into blocks of `B`; nodes added later
//! by pushes belong to no block. Epoch `j` is the stretch of compressions
//! while the leftmost leaf lies in block `j`; `I_j` collects the nodes those
//! compressions touch outside block `j`. At the start of epoch `j`, the
//! exposed nodes `Î_j` are the blocked members of `I_j` with no ancestor in
//! the same block or sharing an affiliation. A dense epoch
//! (`|Î_j| log|Î_j| >= |I_j|`) affiliates all of `I_j` with `j` and splits
//! `Î_j` into pieces of at most `t` nodes; every piece gets a fresh symbol,
//! which is prepended to the labels of its nodes. Deleting the leftmost leaf
//! appends its label to `S'`. `S` is `S'` with adjacent repeats removed.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::compression::{
    CompressionError, CompressionKind, GeneralTree, HalvingOptions, NodeClass, TraceRecord,
};
use crate::pattern::{contains_pattern, find_babba, remove_repetitions, Symbol, SymbolSequence};
use crate::splay::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranscriptionError {
    #[error("record {index}: {source}")]
    Replay {
        index: usize,
        source: CompressionError,
    },
    #[error("deleted node {node} is not the leftmost leaf ({leftmost:?})")]
    NotLeftmost {
        node: NodeId,
        leftmost: Option<NodeId>,
    },
    #[error("record {index}: {msg}")]
    Malformed { index: usize, msg: String },
}

/// `max(4, ⌈log₂² n⌉)`, the default for both `B` and `t`.
pub fn default_parameter(n: usize) -> usize {
    let l = (n.max(1) as f64).log2();
    ((l * l).ceil() as usize).max(4)
}

/// Consecutive blocks of `b` positions out of `n`, bottom first; the last
/// block may be short.
pub fn partition_blocks(n: usize, b: usize) -> Vec<std::ops::Range<usize>> {
    assert!(b >= 1, "block size must be positive");
    (0..n).step_by(b).map(|s| s..(s + b).min(n)).collect()
}

/// `|Î| log₂|Î| >= |I|`.
pub fn is_dense(exposed: usize, touched: usize) -> bool {
    if exposed == 0 {
        return touched == 0;
    }
    let e = exposed as f64;
    e * e.log2() >= touched as f64
}

/// Contiguous pieces of at most `t` nodes; `⌈|Î|/t⌉` of them.
pub fn split_large(exposed: &[NodeId], t: usize) -> Vec<Vec<NodeId>> {
    assert!(t >= 1, "split bound must be positive");
    exposed.chunks(t).map(<[NodeId]>::to_vec).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpochRecord {
    /// Global epoch index; equals the block index.
    pub epoch: usize,
    pub block: usize,
    pub touched: usize,
    pub exposed: usize,
    pub dense: bool,
    pub pieces: usize,
    pub labels_assigned: usize,
    pub compressions: usize,
    pub stunted: usize,
    /// Parent pointers changed by the epoch's compressions.
    pub cascade_cost: usize,
    /// `I_j` was not a single ancestor chain at commencement.
    pub path_violation: bool,
    /// The spine nodes affiliated with some earlier epoch were not
    /// consecutive.
    pub subpath_violation: bool,
    /// Two exposed nodes from one block.
    pub block_violation: bool,
    /// Members of `I_j` that did not exist yet at commencement.
    pub late: usize,
}

#[derive(Debug, Clone, Default)]
pub struct TranscriptReport {
    pub block_size: usize,
    pub split_bound: usize,
    pub blocks: usize,
    pub phases: usize,
    pub epochs: usize,
    pub dense_epochs: usize,
    pub symbols: usize,
    pub removed_repetitions: usize,
    pub max_multiplicity: usize,
    pub contains_abababa: bool,
    pub contains_abaabba: bool,
    /// First pair `(a, b)`, `b > a`, with `b a b b a` in `S'`.
    pub babba: Option<(Symbol, Symbol)>,
    pub path_violations: usize,
    pub subpath_violations: usize,
    pub block_violations: usize,
    /// Compressions while the leftmost leaf belonged to no block.
    pub on_hold: usize,
}

impl TranscriptReport {
    /// Every checked property holds.
    pub fn holds(&self) -> bool {
        !self.contains_abababa
            && !self.contains_abaabba
            && self.babba.is_none()
            && self.max_multiplicity <= self.split_bound
            && self.removed_repetitions <= self.blocks.saturating_sub(1)
            && self.block_violations == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut kv = |k: &str, v: String| writeln!(s, "{k}: {v}").unwrap();
        kv("block_size", self.block_size.to_string());
        kv("split_bound", self.split_bound.to_string());
        kv("phases", self.phases.to_string());
        kv("blocks", self.blocks.to_string());
        kv("epochs", self.epochs.to_string());
        kv("dense_epochs", self.dense_epochs.to_string());
        kv("symbols", self.symbols.to_string());
        kv("removed_repetitions", self.removed_repetitions.to_string());
        kv("max_multiplicity", self.max_multiplicity.to_string());
        kv("contains_abababa", self.contains_abababa.to_string());
        kv("contains_abaabba", self.contains_abaabba.to_string());
        kv(
            "babba",
            self.babba
                .map_or_else(|| "none".into(), |(a, b)| format!("a={a} b={b}")),
        );
        kv("path_violations", self.path_violations.to_string());
        kv("subpath_violations", self.subpath_violations.to_string());
        kv("block_violations", self.block_violations.to_string());
        kv("on_hold", self.on_hold.to_string());
        s
    }
}

pub const EPOCH_CSV_HEADER: &str =
    "epoch,block,touched,exposed,tag,pieces,labels,compressions,stunted,cascade_cost";

pub fn epochs_csv(epochs: &[EpochRecord]) -> String {
    let mut s = String::new();
    writeln!(s, "{EPOCH_CSV_HEADER}").unwrap();
    for e in epochs {
        writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{}",
            e.epoch,
            e.block,
            e.touched,
            e.exposed,
            if e.dense { "dense" } else { "sparse" },
            e.pieces,
            e.labels_assigned,
            e.compressions,
            e.stunted,
            e.cascade_cost
        )
        .unwrap();
    }
    s
}

#[derive(Debug, Clone)]
pub struct Transcription {
    pub s_prime: SymbolSequence,
    pub s: SymbolSequence,
    pub epochs: Vec<EpochRecord>,
    pub report: TranscriptReport,
}

/// Labelling state over the current phase tree.
#[derive(Debug, Clone)]
pub struct Transcript {
    pub block_size: usize,
    pub split_bound: usize,
    tree: GeneralTree,
    block: HashMap<NodeId, usize>,
    /// Descending symbol list per node.
    labels: HashMap<NodeId, Vec<Symbol>>,
    affiliations: HashMap<NodeId, Vec<usize>>,
    emitted: Vec<Symbol>,
    epochs: Vec<EpochRecord>,
    blocks: usize,
    phases: usize,
    next_symbol: Symbol,
    on_hold: usize,
}

impl Transcript {
    pub fn new(block_size: usize, split_bound: usize) -> Self {
        assert!(block_size >= 1 && split_bound >= 1);
        Self {
            block_size,
            split_bound,
            tree: GeneralTree::new(),
            block: HashMap::new(),
            labels: HashMap::new(),
            affiliations: HashMap::new(),
            emitted: Vec::new(),
            epochs: Vec::new(),
            blocks: 0,
            phases: 0,
            next_symbol: 0,
            on_hold: 0,
        }
    }

    pub fn tree(&self) -> &GeneralTree {
        &self.tree
    }

    pub fn label(&self, v: NodeId) -> &[Symbol] {
        self.labels.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn block_of(&self, v: NodeId) -> Option<usize> {
        self.block.get(&v).copied()
    }

    pub fn emitted(&self) -> &[Symbol] {
        &self.emitted
    }

    /// Flushes the previous phase and blocks the new tree's nodes.
    pub fn start_phase(&mut self, tree: GeneralTree) {
        self.flush();
        let order = tree.postorder_of(NodeClass::Essential);
        for range in partition_blocks(order.len(), self.block_size) {
            self.blocks += 1;
            for &v in &order[range] {
                self.block.insert(v, self.blocks);
            }
        }
        self.tree = tree;
        self.phases += 1;
    }

    /// Emits the labels of all remaining nodes in postorder, as if deleted.
    fn flush(&mut self) {
        for v in self.tree.postorder() {
            if let Some(l) = self.labels.remove(&v) {
                self.emitted.extend(l);
            }
        }
        self.tree = GeneralTree::new();
        self.block.clear();
        self.affiliations.clear();
        self.labels.clear();
    }

    /// Opens epoch `block` with touched set `touched` (nodes outside the
    /// block), classifies it and, if dense, assigns labels.
    pub fn begin_epoch(&mut self, block: usize, touched: &[NodeId]) -> &EpochRecord {
        let present: Vec<NodeId> = touched
            .iter()
            .copied()
            .filter(|&v| self.tree.contains(v))
            .collect();
        let mut rec = EpochRecord {
            epoch: block,
            block,
            touched: touched.len(),
            exposed: 0,
            dense: false,
            pieces: 0,
            labels_assigned: 0,
            compressions: 0,
            stunted: 0,
            cascade_cost: 0,
            path_violation: !self.is_chain(&present),
            subpath_violation: !self.affiliated_form_spine_subpath(),
            block_violation: false,
            late: touched.len() - present.len(),
        };
        // Bottom-up so that pieces are contiguous along the path.
        let mut chain = present;
        chain.sort_by_key(|&v| std::cmp::Reverse(self.tree.depth(v)));
        let exposed: Vec<NodeId> = chain
            .iter()
            .copied()
            .filter(|&v| self.is_exposed(v))
            .collect();
        let mut seen_blocks = HashSet::new();
        rec.block_violation = !exposed.iter().all(|v| seen_blocks.insert(self.block[v]));
        rec.exposed = exposed.len();
        rec.dense = !touched.is_empty() && is_dense(exposed.len(), touched.len());
        if rec.dense {
            for &v in touched {
                self.affiliations.entry(v).or_default().push(block);
            }
            let pieces = split_large(&exposed, self.split_bound);
            rec.pieces = pieces.len();
            for piece in pieces {
                let sym = self.next_symbol;
                self.next_symbol += 1;
                for v in piece {
                    self.labels.entry(v).or_default().insert(0, sym);
                    rec.labels_assigned += 1;
                }
            }
        }
        self.epochs.push(rec);
        self.epochs.last().unwrap()
    }

    fn is_exposed(&self, v: NodeId) -> bool {
        let Some(&b) = self.block.get(&v) else {
            return false;
        };
        let mine = self.affiliations.get(&v);
        let mut cur = self.tree.parent(v);
        while let Some(u) = cur {
            if self.tree.class(u) == Some(NodeClass::Essential) {
                if self.block.get(&u) == Some(&b) {
                    return false;
                }
                if let (Some(a), Some(c)) = (mine, self.affiliations.get(&u)) {
                    if a.iter().any(|x| c.contains(x)) {
                        return false;
                    }
                }
            }
            cur = self.tree.parent(u);
        }
        true
    }

    fn is_chain(&self, nodes: &[NodeId]) -> bool {
        let mut by_depth = nodes.to_vec();
        by_depth.sort_by_key(|&v| self.tree.depth(v));
        by_depth
            .windows(2)
            .all(|w| self.tree.is_ancestor(w[0], w[1]))
    }

    /// For every earlier epoch, its affiliated nodes on the spine are
    /// consecutive there.
    fn affiliated_form_spine_subpath(&self) -> bool {
        let mut span: HashMap<usize, (usize, usize, usize)> = HashMap::new();
        for (pos, v) in self.tree.spine().into_iter().enumerate() {
            for &e in self.affiliations.get(&v).map_or(&[][..], Vec::as_slice) {
                let s = span.entry(e).or_insert((pos, pos, 0));
                s.1 = pos;
                s.2 += 1;
            }
        }
        span.values()
            .all(|&(first, last, count)| last - first + 1 == count)
    }

    /// Deletes the leftmost leaf and appends its label to `S'`.
    pub fn emit_on_delete(&mut self, v: NodeId) -> Result<(), TranscriptionError> {
        let leftmost = self.tree.leftmost_leaf();
        if leftmost != Some(v) {
            return Err(TranscriptionError::NotLeftmost { node: v, leftmost });
        }
        self.tree
            .remove_leaf(v)
            .map_err(|source| TranscriptionError::Replay { index: 0, source })?;
        if let Some(l) = self.labels.remove(&v) {
            self.emitted.extend(l);
        }
        self.affiliations.remove(&v);
        Ok(())
    }

    pub fn finalize(mut self) -> Transcription {
        self.flush();
        let s_prime = SymbolSequence::new(self.emitted);
        let (s, removed) = remove_repetitions(&s_prime);
        let max_multiplicity = s.multiplicities().values().copied().max().unwrap_or(0);
        let report = TranscriptReport {
            block_size: self.block_size,
            split_bound: self.split_bound,
            blocks: self.blocks,
            phases: self.phases,
            epochs: self.epochs.len(),
            dense_epochs: self.epochs.iter().filter(|e| e.dense).count(),
            symbols: self.next_symbol as usize,
            removed_repetitions: removed,
            max_multiplicity,
            contains_abababa: contains_pattern(
                &SymbolSequence::new(vec![0, 1, 0, 1, 0, 1, 0]),
                &s_prime,
            ),
            contains_abaabba: contains_pattern(
                &SymbolSequence::new(vec![0, 1, 0, 0, 1, 1, 0]),
                &s_prime,
            ),
            babba: find_babba(&s_prime),
            path_violations: self.epochs.iter().filter(|e| e.path_violation).count(),
            subpath_violations: self.epochs.iter().filter(|e| e.subpath_violation).count(),
            block_violations: self.epochs.iter().filter(|e| e.block_violation).count(),
            on_hold: self.on_hold,
        };
        Transcription {
            s_prime,
            s,
            epochs: self.epochs,
            report,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TranscribeOptions {
    /// `B`; defaults to [`default_parameter`] of the number of nodes.
    pub block_size: Option<usize>,
    /// `t`; same default.
    pub split_bound: Option<usize>,
}

/// Applies one structural record to `tree`. Returns the compression's
/// length for `C` records.
fn replay(
    tree: &mut GeneralTree,
    rec: &TraceRecord,
    index: usize,
) -> Result<usize, TranscriptionError> {
    let err = |source| TranscriptionError::Replay { index, source };
    match rec {
        TraceRecord::Compress { kind, path, .. } => {
            let r = match kind {
                CompressionKind::Halving => tree.halving_compress(path, HalvingOptions::default()),
                CompressionKind::Total => tree.total_compress(path),
            };
            r.map(|c| c.length).map_err(err)
        }
        TraceRecord::Add { id, parent } => {
            match parent {
                Some(p) => tree
                    .add_leftmost_leaf(*id, *p, NodeClass::Essential)
                    .map_err(err)?,
                None => {
                    if !tree.is_empty() {
                        return Err(TranscriptionError::Malformed {
                            index,
                            msg: format!("parentless ADD {id} into a nonempty tree"),
                        });
                    }
                    tree.add_root(*id, NodeClass::Essential);
                }
            }
            Ok(0)
        }
        TraceRecord::Delete(v) => {
            let leftmost = tree.leftmost_leaf();
            if leftmost != Some(*v) {
                return Err(TranscriptionError::NotLeftmost { node: *v, leftmost });
            }
            tree.remove_leaf(*v).map_err(err)?;
            Ok(0)
        }
        _ => Ok(0),
    }
}

/// Builds the snapshot tree from `NODE` records starting at `start`; returns
/// it with the index of the first record after the snapshot.
fn read_snapshot(
    records: &[TraceRecord],
    start: usize,
) -> Result<(GeneralTree, usize), TranscriptionError> {
    let mut tree = GeneralTree::new();
    let mut i = start;
    let mut pending: Vec<(NodeId, Option<NodeId>, NodeClass)> = Vec::new();
    while let Some(TraceRecord::Node { id, parent, class }) = records.get(i) {
        pending.push((*id, *parent, *class));
        i += 1;
    }
    // Postorder lists children before parents and siblings left to right.
    let mut children: HashMap<Option<NodeId>, Vec<(NodeId, NodeClass)>> = HashMap::new();
    for &(id, parent, class) in &pending {
        children.entry(parent).or_default().push((id, class));
    }
    let mut stack: Vec<NodeId> = Vec::new();
    for &(r, class) in children.get(&None).map_or(&[][..], Vec::as_slice) {
        tree.add_root(r, class);
        stack.push(r);
    }
    while let Some(v) = stack.pop() {
        for &(c, class) in children.get(&Some(v)).map_or(&[][..], Vec::as_slice) {
            tree.attach_last(c, v, class);
            stack.push(c);
        }
    }
    if tree.len() != pending.len() {
        return Err(TranscriptionError::Malformed {
            index: start,
            msg: "snapshot is not a forest".into(),
        });
    }
    Ok((tree, i))
}

/// Transcribes a whole compression trace.
pub fn transcribe(
    records: &[TraceRecord],
    opts: TranscribeOptions,
) -> Result<Transcription, TranscriptionError> {
    let mut ids = HashSet::new();
    for r in records {
        match r {
            TraceRecord::Node { id, .. } | TraceRecord::Add { id, .. } => {
                ids.insert(*id);
            }
            _ => {}
        }
    }
    let d = default_parameter(ids.len());
    let mut tr = Transcript::new(opts.block_size.unwrap_or(d), opts.split_bound.unwrap_or(d));

    // Phase boundaries.
    let mut starts: Vec<usize> = records
        .iter()
        .enumerate()
        .filter(|(_, r)| matches!(r, TraceRecord::Phase { .. }))
        .map(|(i, _)| i)
        .collect();
    if starts.first() != Some(&0) {
        // records before the first PHASE run on an empty tree
        starts.insert(0, usize::MAX);
    }
    for (pi, &s) in starts.iter().enumerate() {
        let end = starts.get(pi + 1).copied().unwrap_or(records.len());
        let (tree, body) = if s == usize::MAX {
            (GeneralTree::new(), 0)
        } else {
            read_snapshot(records, s + 1)?
        };
        tr.start_phase(tree.clone());
        transcribe_phase(&mut tr, tree, &records[body..end], body)?;
    }
    Ok(tr.finalize())
}

struct EpochPlan {
    block: usize,
    /// Index (within the phase body) of the commencing compression.
    start: usize,
    touched: Vec<NodeId>,
}

fn transcribe_phase(
    tr: &mut Transcript,
    mut scratch: GeneralTree,
    body: &[TraceRecord],
    offset: usize,
) -> Result<(), TranscriptionError> {
    // Pass 1: epochs and their touched sets.
    let mut plans: Vec<EpochPlan> = Vec::new();
    let mut seen: HashSet<NodeId> = HashSet::new();
    let mut epoch_of: Vec<Option<usize>> = vec![None; body.len()];
    for (i, rec) in body.iter().enumerate() {
        if let TraceRecord::Compress { path, .. } = rec {
            let leaf_block = scratch.leftmost_leaf().and_then(|v| tr.block_of(v));
            match leaf_block {
                None => tr.on_hold += 1,
                Some(b) => {
                    if plans.last().is_none_or(|p| p.block < b) {
                        plans.push(EpochPlan {
                            block: b,
                            start: i,
                            touched: Vec::new(),
                        });
                        seen.clear();
                    }
                    epoch_of[i] = Some(plans.len() - 1);
                    let plan = plans.last_mut().unwrap();
                    for &v in path {
                        if tr.block_of(v) != Some(b) && seen.insert(v) {
                            plan.touched.push(v);
                        }
                    }
                }
            }
        }
        replay(&mut scratch, rec, offset + i)?;
    }

    // Pass 2: label and emit.
    let mut next_plan = 0;
    for (i, rec) in body.iter().enumerate() {
        if let Some(p) = plans.get(next_plan) {
            if p.start == i {
                tr.begin_epoch(p.block, &p.touched);
                next_plan += 1;
            }
        }
        match rec {
            TraceRecord::Delete(v) => tr.emit_on_delete(*v).map_err(|e| match e {
                TranscriptionError::Replay { source, .. } => TranscriptionError::Replay {
                    index: offset + i,
                    source,
                },
                other => other,
            })?,
            _ => {
                let len = replay(&mut tr.tree, rec, offset + i)?;
                if let (Some(_), TraceRecord::Compress { stunted, .. }) = (epoch_of[i], rec) {
                    let e = tr.epochs.last_mut().unwrap();
                    e.compressions += 1;
                    e.stunted += usize::from(*stunted);
                    e.cascade_cost += len;
                }
            }
        }
    }
    Ok(())
}
