use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{DequeOp, WorkloadError, WorkloadTrace};

/// Generator named in reports so runs can be reproduced elsewhere.
pub const RNG_NAME: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WorkloadKind {
    /// `n` pops on an `n`-node left path.
    PopOnly,
    /// `m` uniformly chosen operations; pops and ejects only when nonempty.
    RandomMix { eject: bool },
    /// Alternating bursts of pushes and pops.
    PushBurst,
    /// Pops on a left path; right after every `block`-th pop, `block` pushes.
    PeriodHold { block: usize },
}

impl fmt::Display for WorkloadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorkloadKind::PopOnly => f.write_str("pop-only"),
            WorkloadKind::RandomMix { eject: true } => f.write_str("random-mix"),
            WorkloadKind::RandomMix { eject: false } => f.write_str("push-pop-inject"),
            WorkloadKind::PushBurst => f.write_str("push-burst"),
            WorkloadKind::PeriodHold { block } => write!(f, "period-hold B={block}"),
        }
    }
}

impl FromStr for WorkloadKind {
    type Err = WorkloadError;

    /// `period-hold` takes its block size separately; 4 until overridden.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "pop-only" => WorkloadKind::PopOnly,
            "random-mix" => WorkloadKind::RandomMix { eject: true },
            "push-pop-inject" => WorkloadKind::RandomMix { eject: false },
            "push-burst" => WorkloadKind::PushBurst,
            "period-hold" => WorkloadKind::PeriodHold { block: 4 },
            other => return Err(WorkloadError::UnknownKind(other.to_string())),
        })
    }
}

/// Deterministic trace for `(kind, n, m, seed)`. `m` is ignored by
/// `pop-only`, which always emits exactly `n` pops.
pub fn generate(
    kind: WorkloadKind,
    n: usize,
    m: usize,
    seed: u64,
) -> Result<WorkloadTrace, WorkloadError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ops = Vec::with_capacity(m);
    match kind {
        WorkloadKind::PopOnly => ops.resize(n, DequeOp::Pop),
        WorkloadKind::RandomMix { eject } => {
            let mut live = n;
            let choices: &[DequeOp] = if eject {
                &[DequeOp::Push, DequeOp::Pop, DequeOp::Inject, DequeOp::Eject]
            } else {
                &[DequeOp::Push, DequeOp::Pop, DequeOp::Inject]
            };
            while ops.len() < m {
                let op = choices[rng.gen_range(0..choices.len())];
                let removes = matches!(op, DequeOp::Pop | DequeOp::Eject);
                if removes && live == 0 {
                    continue;
                }
                live = if removes { live - 1 } else { live + 1 };
                ops.push(op);
            }
        }
        WorkloadKind::PushBurst => {
            let mut live = n;
            while ops.len() < m {
                let k = rng.gen_range(1..=16).min(m - ops.len());
                ops.extend(std::iter::repeat_n(DequeOp::Push, k));
                live += k;
                let k = rng.gen_range(1..=live).min(m - ops.len());
                ops.extend(std::iter::repeat_n(DequeOp::Pop, k));
                live -= k;
            }
        }
        WorkloadKind::PeriodHold { block } => {
            if block == 0 {
                return Err(WorkloadError::BadParameter(
                    "block size must be positive".into(),
                ));
            }
            let mut live = n;
            let mut pops = 0usize;
            while ops.len() < m && live > 0 {
                ops.push(DequeOp::Pop);
                live -= 1;
                pops += 1;
                if pops % block == 1 || block == 1 {
                    let k = block.min(m - ops.len());
                    ops.extend(std::iter::repeat_n(DequeOp::Push, k));
                    live += k;
                }
            }
        }
    }
    let trace = WorkloadTrace {
        init: n,
        seed: Some(seed),
        params: format!("{kind} n={n} m={}", ops.len()),
        ops,
    };
    trace.validate()?;
    Ok(trace)
}
