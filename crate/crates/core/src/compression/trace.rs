//! Line-oriented compression trace.
//!
//! ```text
//! PHASE <boundary|->            start of a phase; a snapshot follows
//! NODE <id> <parent|-> <e|f>    snapshot node, listed in postorder
//! ROOT <id|->                   designated root (initial or relocated)
//! C <halving|total> <0|1> <ids> compression path, stunted flag
//! DEL <id>                      leftmost-leaf deletion
//! ADD <id> <parent|->           new leftmost leaf under parent
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use super::tree::{CompressionKind, CompressionRecord, NodeClass};
use super::view::{LeftHalfView, ViewEffect};
use crate::splay::NodeId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceRecord {
    Phase {
        boundary: Option<NodeId>,
    },
    Node {
        id: NodeId,
        parent: Option<NodeId>,
        class: NodeClass,
    },
    Root(Option<NodeId>),
    Compress {
        kind: CompressionKind,
        stunted: bool,
        path: Vec<NodeId>,
    },
    Delete(NodeId),
    Add {
        id: NodeId,
        parent: Option<NodeId>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace line {line}: {msg}")]
pub struct TraceError {
    pub line: usize,
    pub msg: String,
}

impl TraceRecord {
    /// `PHASE`, the view's nodes in postorder, and its designated root.
    pub fn snapshot(boundary: Option<NodeId>, view: &LeftHalfView) -> Vec<TraceRecord> {
        let mut out = vec![TraceRecord::Phase { boundary }];
        for v in view.tree.postorder() {
            out.push(TraceRecord::Node {
                id: v,
                parent: view.tree.parent(v),
                class: view.tree.class(v).unwrap(),
            });
        }
        out.push(TraceRecord::Root(view.designated_root));
        out
    }

    /// Records for one modelled effect, in replay order: addition,
    /// compression, deletion, relocation.
    pub fn from_effect(effect: &ViewEffect) -> Vec<TraceRecord> {
        let mut out = Vec::new();
        if let Some((id, parent)) = effect.added {
            out.push(TraceRecord::Add { id, parent });
        }
        if let Some(c) = &effect.compression {
            out.push(TraceRecord::from_compression(c));
        }
        if let Some(d) = effect.deleted {
            out.push(TraceRecord::Delete(d));
        }
        if let Some((_, to)) = effect.relocation {
            out.push(TraceRecord::Root(to));
        }
        out
    }

    pub fn from_compression(c: &CompressionRecord) -> TraceRecord {
        TraceRecord::Compress {
            kind: c.kind,
            stunted: c.stunted,
            path: c.path.clone(),
        }
    }
}

fn opt(id: Option<NodeId>) -> String {
    id.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn write_trace(records: &[TraceRecord]) -> String {
    let mut s = String::new();
    for r in records {
        match r {
            TraceRecord::Phase { boundary } => writeln!(s, "PHASE {}", opt(*boundary)),
            TraceRecord::Node { id, parent, class } => {
                let c = match class {
                    NodeClass::Essential => 'e',
                    NodeClass::Fluff => 'f',
                };
                writeln!(s, "NODE {id} {} {c}", opt(*parent))
            }
            TraceRecord::Root(id) => writeln!(s, "ROOT {}", opt(*id)),
            TraceRecord::Compress {
                kind,
                stunted,
                path,
            } => {
                write!(s, "C {} {}", kind.as_str(), u8::from(*stunted)).unwrap();
                for v in path {
                    write!(s, " {v}").unwrap();
                }
                writeln!(s)
            }
            TraceRecord::Delete(id) => writeln!(s, "DEL {id}"),
            TraceRecord::Add { id, parent } => writeln!(s, "ADD {id} {}", opt(*parent)),
        }
        .unwrap();
    }
    s
}

pub fn parse_trace(src: &str) -> Result<Vec<TraceRecord>, TraceError> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| TraceError { line, msg };
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let mut f = text.split_whitespace();
        let tag = f.next().unwrap();
        let id = |tok: Option<&str>| -> Result<NodeId, TraceError> {
            let tok = tok.ok_or_else(|| err("missing node".into()))?;
            tok.parse()
                .map(NodeId)
                .map_err(|_| err(format!("bad node {tok:?}")))
        };
        let opt_id = |tok: Option<&str>| -> Result<Option<NodeId>, TraceError> {
            match tok {
                Some("-") => Ok(None),
                other => id(other).map(Some),
            }
        };
        let rec = match tag {
            "PHASE" => TraceRecord::Phase {
                boundary: opt_id(f.next())?,
            },
            "NODE" => {
                let node = id(f.next())?;
                let parent = opt_id(f.next())?;
                let class = match f.next() {
                    None | Some("e") => NodeClass::Essential,
                    Some("f") => NodeClass::Fluff,
                    Some(o) => return Err(err(format!("bad node class {o:?}"))),
                };
                TraceRecord::Node {
                    id: node,
                    parent,
                    class,
                }
            }
            "ROOT" => TraceRecord::Root(opt_id(f.next())?),
            "C" => {
                let kind = match f.next() {
                    Some("halving") => CompressionKind::Halving,
                    Some("total") => CompressionKind::Total,
                    o => return Err(err(format!("bad compression kind {o:?}"))),
                };
                let stunted = match f.next() {
                    Some("0") => false,
                    Some("1") => true,
                    o => return Err(err(format!("bad stunted flag {o:?}"))),
                };
                let path = f
                    .by_ref()
                    .map(|t| id(Some(t)))
                    .collect::<Result<Vec<_>, _>>()?;
                if path.is_empty() {
                    return Err(err("empty compression path".into()));
                }
                TraceRecord::Compress {
                    kind,
                    stunted,
                    path,
                }
            }
            "DEL" => TraceRecord::Delete(id(f.next())?),
            "ADD" => {
                let node = id(f.next())?;
                TraceRecord::Add {
                    id: node,
                    parent: opt_id(f.next())?,
                }
            }
            other => return Err(err(format!("unknown record {other:?}"))),
        };
        if f.next().is_some() {
            return Err(err("trailing tokens".into()));
        }
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compression::left_half_view;
    use crate::splay::SplayTree;

    #[test]
    fn round_trip() {
        let t = SplayTree::parse("((1) 2 (3))").unwrap();
        let mut recs = TraceRecord::snapshot(Some(NodeId(3)), &left_half_view(&t, Some(NodeId(3))));
        recs.push(TraceRecord::Compress {
            kind: CompressionKind::Halving,
            stunted: true,
            path: vec![NodeId(1), NodeId(2), NodeId(3)],
        });
        recs.push(TraceRecord::Delete(NodeId(1)));
        recs.push(TraceRecord::Add {
            id: NodeId(0),
            parent: Some(NodeId(3)),
        });
        recs.push(TraceRecord::Root(None));
        let text = write_trace(&recs);
        assert!(text.contains("C halving 1 1 2 3\n"));
        assert_eq!(parse_trace(&text).unwrap(), recs);
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(parse_trace("# c\n\nDEL x\n").unwrap_err().line, 3);
        assert!(parse_trace("C halving 2 1 2").is_err());
        assert!(parse_trace("C halving 0").is_err());
        assert!(parse_trace("DEL 1 2").is_err());
        assert!(parse_trace("FOO").is_err());
    }
}
