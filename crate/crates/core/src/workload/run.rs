use crate::compression::{
    advance, left_half_view, CorrespondenceReport, LeftHalfView, TraceRecord, ViewEffect,
};
use crate::splay::{NodeId, SplayTree};

use super::{DequeOp, WorkloadTrace};

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Rebuild the left-half view after every operation and check it against
    /// the compression model.
    pub mirror: bool,
    /// Keep the compression trace (requires `mirror`).
    pub record_trace: bool,
    /// Validate the splay tree after every operation.
    pub check_invariants: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostReport {
    pub n: usize,
    pub m: usize,
    pub total_rotations: u64,
    /// Rotations spent by each operation.
    pub per_op: Vec<u64>,
}

impl CostReport {
    pub fn amortized(&self) -> f64 {
        let ops = self.m + self.n;
        if ops == 0 {
            0.0
        } else {
            self.total_rotations as f64 / ops as f64
        }
    }
}

/// Phase bookkeeping: the deque is split into a left half (identifiers up to
/// `boundary`) and a right half. Pushes join the left half and injects the
/// right. A pop that finds the left half empty, or an eject that finds the
/// right half empty, starts a new phase and re-splits the live nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Phases {
    pub boundary: NodeId,
    pub count: usize,
}

impl Phases {
    /// Splits the live nodes; the left half gets the lower `⌈k/2⌉` nodes
    /// when `for_pop`, `⌊k/2⌋` otherwise.
    fn split(t: &SplayTree, for_pop: bool) -> NodeId {
        let ids = t.in_order();
        let k = ids.len();
        let left = if for_pop { k.div_ceil(2) } else { k / 2 };
        if left > 0 {
            ids[left - 1]
        } else if let Some(&lo) = ids.first() {
            NodeId(lo.0 - 1)
        } else {
            t.highest_ever().unwrap_or(NodeId(0))
        }
    }

    fn left_empty(&self, t: &SplayTree) -> bool {
        t.min().is_none_or(|v| v > self.boundary)
    }

    fn right_empty(&self, t: &SplayTree) -> bool {
        t.max().is_none_or(|v| v <= self.boundary)
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub cost: CostReport,
    /// Number of operations whose view delta was checked.
    pub checked: usize,
    pub mismatches: Vec<CorrespondenceReport>,
    /// First splay-tree validation failure, with the operation index.
    pub invariant_failure: Option<(usize, String)>,
    pub phases: usize,
    pub trace: Vec<TraceRecord>,
    /// Matched eject effects, in order, for terminus statistics.
    pub ejects: Vec<ViewEffect>,
}

impl RunOutcome {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.invariant_failure.is_none()
    }
}

pub fn run(trace: &WorkloadTrace, opts: RunOptions) -> RunOutcome {
    let mirror = opts.mirror || opts.record_trace;
    let mut t = SplayTree::left_path(trace.init);
    let boundary = if trace.init == 0 {
        // Fresh tree: the first push receives 0 and the first inject too.
        match trace.ops.first() {
            Some(DequeOp::Inject) => NodeId(-1),
            _ => NodeId(0),
        }
    } else {
        Phases::split(&t, true)
    };
    let mut phases = Phases { boundary, count: 1 };
    let mut out = RunOutcome {
        cost: CostReport {
            n: trace.init,
            m: trace.ops.len(),
            total_rotations: 0,
            per_op: Vec::with_capacity(trace.ops.len()),
        },
        checked: 0,
        mismatches: Vec::new(),
        invariant_failure: None,
        phases: 1,
        trace: Vec::new(),
        ejects: Vec::new(),
    };
    let mut view = LeftHalfView::default();
    if mirror {
        view = left_half_view(&t, Some(phases.boundary));
        if opts.record_trace {
            out.trace
                .extend(TraceRecord::snapshot(Some(phases.boundary), &view));
        }
    }

    for (index, &op) in trace.ops.iter().enumerate() {
        let new_phase = match op {
            DequeOp::Pop => phases.left_empty(&t),
            DequeOp::Eject => phases.right_empty(&t),
            _ => false,
        };
        if new_phase {
            phases.boundary = Phases::split(&t, op == DequeOp::Pop);
            phases.count += 1;
            if mirror {
                view = left_half_view(&t, Some(phases.boundary));
                if opts.record_trace {
                    out.trace
                        .extend(TraceRecord::snapshot(Some(phases.boundary), &view));
                }
            }
        }
        let before = t.rotation_count().rotations;
        let subject = match op {
            DequeOp::Push => t.push(),
            DequeOp::Inject => t.inject(),
            DequeOp::Pop => t.pop().expect("feasible trace").deleted,
            DequeOp::Eject => t.eject().expect("feasible trace").deleted,
        };
        out.cost.per_op.push(t.rotation_count().rotations - before);
        if opts.check_invariants && out.invariant_failure.is_none() {
            if let Err(e) = t.validate() {
                out.invariant_failure = Some((index, e.to_string()));
            }
        }
        if mirror {
            let after = left_half_view(&t, Some(phases.boundary));
            let report = advance(op, subject, &mut view, &after);
            out.checked += 1;
            if opts.record_trace {
                if report.matched {
                    out.trace.extend(TraceRecord::from_effect(&report.effect));
                } else {
                    // resynchronise consumers on the observed view
                    out.trace
                        .extend(TraceRecord::snapshot(Some(phases.boundary), &after));
                }
            }
            if !report.matched {
                out.mismatches.push(report);
                view = after;
            } else if op == DequeOp::Eject {
                out.ejects.push(report.effect);
            }
        }
    }
    out.cost.total_rotations = t.rotation_count().rotations;
    out.phases = phases.count;
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workload::{generate, WorkloadKind};

    fn pops(n: usize) -> WorkloadTrace {
        generate(WorkloadKind::PopOnly, n, 0, 0).unwrap()
    }

    #[test]
    fn pop_only_costs() {
        assert_eq!(run(&pops(1), RunOptions::default()).cost.total_rotations, 0);
        let r = run(&pops(3), RunOptions::default());
        assert_eq!(r.cost.per_op, vec![2, 0, 0]);
        assert_eq!(r.cost.total_rotations, 2);
    }

    #[test]
    fn mirrored_small_runs_match() {
        for seed in 0..20 {
            let w = generate(WorkloadKind::RandomMix { eject: true }, 6, 60, seed).unwrap();
            let r = run(
                &w,
                RunOptions {
                    mirror: true,
                    record_trace: true,
                    check_invariants: true,
                },
            );
            assert!(r.invariant_failure.is_none());
            assert!(
                r.mismatches.is_empty(),
                "seed {seed}: {:?}",
                r.mismatches[0]
            );
            assert_eq!(r.checked, 60);
        }
    }

    #[test]
    fn total_matches_ledger_sum() {
        let w = generate(WorkloadKind::PushBurst, 10, 200, 5).unwrap();
        let r = run(&w, RunOptions::default());
        assert_eq!(r.cost.per_op.iter().sum::<u64>(), r.cost.total_rotations);
    }
}
