use std::fmt::Write as _;

use super::CostReport;
use crate::pattern::alpha_star;

pub const REPORT_HEADER: &str =
    "n,m,total_rotations,amortized,log2_ref,alpha_star_ref,amortized_over_log2,amortized_over_alpha_star";

/// One row per report, sorted by `(n, m)`, with fixed precision so equal
/// inputs give byte-identical output.
pub fn report_csv(costs: &[CostReport]) -> String {
    let mut rows: Vec<&CostReport> = costs.iter().collect();
    rows.sort_by_key(|c| (c.n, c.m));
    let mut s = String::new();
    writeln!(s, "{REPORT_HEADER}").unwrap();
    for c in rows {
        let size = (c.m + c.n) as u128;
        let amortized = c.amortized();
        let log2 = (size.max(1) as f64).log2();
        let astar = alpha_star(size);
        let ratio = |den: f64| if den > 0.0 { amortized / den } else { 0.0 };
        writeln!(
            s,
            "{},{},{},{:.6},{:.6},{},{:.6},{:.6}",
            c.n,
            c.m,
            c.total_rotations,
            amortized,
            log2,
            astar,
            ratio(log2),
            ratio(f64::from(astar)),
        )
        .unwrap();
    }
    s
}
