//! Slowly growing functions: iterated logarithms and inverse Ackermann.
//!
//! Logarithms are base 2. For a decreasing `f`, `f*(x)` is the least
//! `i >= 0` with `f` applied `i` times to `x` giving at most 2. Level 1 of
//! the tower is `log`, level `i+1` is the star of level `i`.

/// Value of level `level >= 1` of the log-star tower at `x`.
pub fn iter_star(level: u32, x: f64) -> f64 {
    assert!(level >= 1, "levels start at 1");
    if level == 1 {
        return x.log2();
    }
    let mut cur = x;
    let mut count = 0u32;
    while cur > 2.0 {
        cur = iter_star(level - 1, cur);
        count += 1;
    }
    f64::from(count)
}

pub fn log_star(n: u128) -> u32 {
    iter_star(2, n as f64) as u32
}

/// Least `i >= 1` whose level-`i` value at `n` is at most `2 + m/n`.
/// `n = 0` is treated as `n = 1`.
pub fn alpha(m: u128, n: u128) -> u32 {
    let n = n.max(1);
    let mut i = 1;
    loop {
        if level_within(i, m, n) {
            return i;
        }
        i += 1;
    }
}

/// `alpha(n, n)`.
pub fn alpha_n(n: u128) -> u32 {
    alpha(n, n)
}

/// Least `i >= 0` with `alpha_n` applied `i` times to `n` giving at most 2.
pub fn alpha_star(n: u128) -> u32 {
    let mut cur = n;
    let mut i = 0;
    while cur > 2 {
        cur = u128::from(alpha_n(cur));
        i += 1;
    }
    i
}

// Is level `i` at `n` at most 2 + m/n? The rational side is handled by
// cross-multiplying; only the level-1 logarithm of a non-power of two is
// compared in floating point, where equality cannot occur.
fn level_within(i: u32, m: u128, n: u128) -> bool {
    if i == 1 {
        let budget = 2u128.saturating_mul(n).saturating_add(m);
        if n.is_power_of_two() {
            let e = u128::from(n.trailing_zeros());
            return e.saturating_mul(n) <= budget;
        }
        let nf = n as f64;
        return nf * nf.log2() <= budget as f64;
    }
    let v = iter_star(i, n as f64) as u128;
    v <= 2 || (v - 2).saturating_mul(n) <= m
}
