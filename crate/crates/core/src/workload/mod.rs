//! Workload generation, mirrored execution and CSV reporting.
//!
//! Trace files are line oriented: an optional first line `init <n>` (the
//! initial tree is an `n`-node left path), then one of `push`, `pop`,
//! `inject`, `eject` per line. Blank lines and `#` comments are ignored.

mod generate;
mod report;
mod run;

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

pub use crate::compression::DequeOp;
pub use generate::{generate, WorkloadKind, RNG_NAME};
pub use report::{report_csv, REPORT_HEADER};
pub use run::{run, CostReport, Phases, RunOptions, RunOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkloadError {
    #[error("trace line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("operation {index} ({op}) on an empty deque")]
    Infeasible { index: usize, op: &'static str },
    #[error("unknown workload kind {0:?}")]
    UnknownKind(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkloadTrace {
    /// Size of the initial left path.
    pub init: usize,
    pub ops: Vec<DequeOp>,
    pub seed: Option<u64>,
    /// Generator name and arguments, e.g. `random-mix n=8 m=100`.
    pub params: String,
}

impl WorkloadTrace {
    pub fn new(init: usize, ops: Vec<DequeOp>) -> Self {
        Self {
            init,
            ops,
            seed: None,
            params: String::new(),
        }
    }

    /// Every pop and eject finds a nonempty deque.
    pub fn validate(&self) -> Result<(), WorkloadError> {
        let mut live = self.init;
        for (index, &op) in self.ops.iter().enumerate() {
            match op {
                DequeOp::Push | DequeOp::Inject => live += 1,
                DequeOp::Pop | DequeOp::Eject => {
                    live = live.checked_sub(1).ok_or(WorkloadError::Infeasible {
                        index,
                        op: op.as_str(),
                    })?;
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if !self.params.is_empty() {
            writeln!(s, "# {}", self.params).unwrap();
        }
        if let Some(seed) = self.seed {
            writeln!(s, "# seed {seed} rng {RNG_NAME}").unwrap();
        }
        writeln!(s, "init {}", self.init).unwrap();
        for op in &self.ops {
            s.push_str(op.as_str());
            s.push('\n');
        }
        s
    }
}

impl FromStr for DequeOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "push" => Ok(DequeOp::Push),
            "pop" => Ok(DequeOp::Pop),
            "inject" => Ok(DequeOp::Inject),
            "eject" => Ok(DequeOp::Eject),
            other => Err(format!("unknown operation {other:?}")),
        }
    }
}

impl FromStr for WorkloadTrace {
    type Err = WorkloadError;

    fn from_str(src: &str) -> Result<Self, Self::Err> {
        let mut trace = WorkloadTrace::new(0, Vec::new());
        let mut seen_op = false;
        for (i, raw) in src.lines().enumerate() {
            let line = i + 1;
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let err = |msg: String| WorkloadError::Parse { line, msg };
            if let Some(rest) = text.strip_prefix("init") {
                if seen_op {
                    return Err(err("init must precede all operations".into()));
                }
                trace.init = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad init size {:?}", rest.trim())))?;
                seen_op = true;
                continue;
            }
            trace.ops.push(text.parse().map_err(err)?);
            seen_op = true;
        }
        Ok(trace)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let t: WorkloadTrace = "# hi\ninit 3\npop\n\ninject\neject\npush\n"
            .parse()
            .unwrap();
        assert_eq!(t.init, 3);
        assert_eq!(
            t.ops,
            vec![DequeOp::Pop, DequeOp::Inject, DequeOp::Eject, DequeOp::Push]
        );
        let again: WorkloadTrace = t.to_text().parse().unwrap();
        assert_eq!(again.ops, t.ops);
        assert_eq!(again.init, 3);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = "init 2\npop\nshove\n".parse::<WorkloadTrace>().unwrap_err();
        assert_eq!(
            e,
            WorkloadError::Parse {
                line: 3,
                msg: "unknown operation \"shove\"".into()
            }
        );
        assert!("pop\ninit 2\n".parse::<WorkloadTrace>().is_err());
    }

    #[test]
    fn feasibility() {
        let t = WorkloadTrace::new(1, vec![DequeOp::Pop, DequeOp::Eject]);
        assert_eq!(
            t.validate(),
            Err(WorkloadError::Infeasible {
                index: 1,
                op: "eject"
            })
        );
        let t = WorkloadTrace::new(0, vec![DequeOp::Inject, DequeOp::Pop]);
        assert!(t.validate().is_ok());
    }
}
