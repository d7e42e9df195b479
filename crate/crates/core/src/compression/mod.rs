//! Ordered general trees, spinal path compressions, and the correspondence
//! between splay-tree deque operations and compressions on the left-half
//! view.

mod check;
mod trace;
mod tree;
mod view;

use thiserror::Error;

use crate::splay::NodeId;

pub use check::{
    advance, check_inject, check_pop_correspondence, check_push, check_step, mirror_eject_check,
    CorrespondenceReport, DequeOp,
};
pub use trace::{parse_trace, write_trace, TraceError, TraceRecord};
pub use tree::{CompressionKind, CompressionRecord, GeneralTree, HalvingOptions, NodeClass};
pub use view::{binary_to_general, left_half_view, LeftHalfView, ViewEffect};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompressionError {
    #[error("node {0} is not in the tree")]
    UnknownNode(NodeId),
    #[error("node {0} is already in the tree")]
    Duplicate(NodeId),
    #[error("node {0} is not a leaf")]
    NotALeaf(NodeId),
    #[error("{claimed_parent} is not the parent of {child}")]
    NotAPath {
        child: NodeId,
        claimed_parent: NodeId,
    },
    #[error("compression would change no parent pointer")]
    ZeroLength,
    #[error("the view is empty")]
    EmptyView,
    #[error("designated root {0} is not an ancestor of the leftmost leaf")]
    RootNotOnSpine(NodeId),
    #[error("invariant violated: {0}")]
    Invariant(String),
}
