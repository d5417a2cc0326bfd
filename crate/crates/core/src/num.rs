//! Integer-exact helpers shared by the search caps, the closed-form bounds,
//! and the construction floors. Everything saturates instead of overflowing
//! so comparisons against group orders stay exact.

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_saturating(base: u128, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

/// `k!` saturating at `u128::MAX`.
pub(crate) fn factorial_saturating(k: u64) -> u128 {
    let mut acc: u128 = 1;
    for i in 2..=k as u128 {
        acc = acc.saturating_mul(i);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

/// Binomial coefficient `C(n, k)` saturating at `u128::MAX`.
pub(crate) fn binomial_saturating(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128);
        if acc == u128::MAX {
            return acc;
        }
        acc /= (i + 1) as u128;
    }
    acc
}

/// Largest `m ≥ 0` with `2·C(m + ⌊t/2⌋, ⌊t/2⌋) − 1 ≤ n`: no t-independent
/// set can be bigger, because the signed sums of weight up to ⌊t/2⌋ of an
/// m-element t-independent set are pairwise distinct.
pub(crate) fn strong_size_cap(n: u64, t: u64) -> u64 {
    let q = t / 2;
    if q == 0 {
        // Weight-1 distinctness bounds nothing beyond the trivial n.
        return n;
    }
    let mut m = 0;
    while 2 * binomial_saturating(m + 1 + q, q) - 1 <= n as u128 {
        m += 1;
    }
    m
}

/// Largest `m ≥ 0` with `Σ_{h=0..⌊t/2⌋} C(m, h) ≤ n`: the 0/1-coefficient
/// sums of weight up to ⌊t/2⌋ of a weakly t-independent m-element set are
/// pairwise distinct.
pub(crate) fn weak_size_cap(n: u64, t: u64) -> u64 {
    let q = t / 2;
    if q == 0 {
        return n;
    }
    let sum_through = |m: u64| -> u128 {
        let mut s: u128 = 0;
        for h in 0..=q.min(m) {
            s = s.saturating_add(binomial_saturating(m, h));
            if s >= u128::MAX / 2 {
                break;
            }
        }
        s
    };
    let mut m = 0;
    while sum_through(m + 1) <= n as u128 {
        m += 1;
    }
    m
}

/// Largest `r ≥ 0` with `r^t · 2σ ≤ n`; a t-independent set of that size
/// always exists, by counting translates of the order-bounded elements.
pub(crate) fn general_floor(n: u64, t: u64, sigma: u64) -> u64 {
    debug_assert!(t >= 1);
    let bound = n as u128;
    let mut r = 0u64;
    while pow_saturating((r + 1) as u128, t).saturating_mul(2 * sigma as u128) <= bound {
        r += 1;
    }
    r
}

/// Largest `m ≥ 0` with `(2m - 2 + t)^t < t! · n`; a weakly t-independent
/// set of that size always exists: while the strict inequality holds, the
/// zero-or-sign sums of the current members cannot cover the group, so one
/// more element can always be added.
pub(crate) fn weakly_floor(n: u64, t: u64) -> u64 {
    if t == 0 {
        return 0;
    }
    let bound = factorial_saturating(t).saturating_mul(n as u128);
    let mut m = 0u64;
    while pow_saturating((2 * m + t) as u128, t) < bound {
        m += 1;
    }
    m
}

/// `⌈log_κ n⌉` for κ ≥ 2: the least `w` with `κ^w ≥ n`.
pub(crate) fn ceil_log(base: u64, n: u64) -> u64 {
    debug_assert!(base >= 2);
    let mut w = 0u64;
    while pow_saturating(base as u128, w) < n as u128 {
        w += 1;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial_saturating(5, 2), 10);
        assert_eq!(binomial_saturating(5, 0), 1);
        assert_eq!(binomial_saturating(5, 6), 0);
        assert_eq!(binomial_saturating(60, 30), 118_264_581_564_861_424);
    }

    #[test]
    fn strong_cap_values() {
        // t = 3: 2(m+1) - 1 <= n  =>  m <= (n-1)/2.
        assert_eq!(strong_size_cap(9, 3), 4);
        assert_eq!(strong_size_cap(9, 2), 4);
        // t = 4: 2*C(m+2,2) - 1 <= n; m = 9 would need 109 <= 101.
        assert_eq!(strong_size_cap(101, 4), 8);
        // m = 2 gives exactly 2*C(4,2) - 1 = 11.
        assert_eq!(strong_size_cap(11, 4), 2);
        assert_eq!(strong_size_cap(2, 2), 0);
    }

    #[test]
    fn weak_cap_values() {
        // q = 1: m + 1 <= n.
        assert_eq!(weak_size_cap(16, 2), 15);
        // q = 2: 1 + m + m(m-1)/2 <= 16 allows m = 5.
        assert_eq!(weak_size_cap(16, 4), 5);
        assert_eq!(weak_size_cap(16, 5), 5);
    }

    #[test]
    fn general_floor_values() {
        // Z_27, t = 3, sigma = 5: r^3 * 10 <= 27 holds for r = 1 only.
        assert_eq!(general_floor(27, 3, 5), 1);
        assert_eq!(general_floor(101, 4, 4), 1);
        // Zero never satisfied beyond r where r^t*2sigma exceeds n.
        assert_eq!(general_floor(1, 1, 1), 0);
        assert_eq!(general_floor(1_000_000, 2, 2), 500);
    }

    #[test]
    fn weakly_floor_values() {
        // (2m)^2 < 2*16 holds through m = 2 (16 < 32), fails at m = 3.
        assert_eq!(weakly_floor(16, 2), 2);
        // t = 1: 2m - 1 < n; n = 5 admits m = 2 (3 < 5) but not m = 3.
        assert_eq!(weakly_floor(5, 1), 2);
        assert_eq!(weakly_floor(2, 1), 1);
        // (2m+1)^3 < 6000 holds through m = 8 (17^3 = 4913).
        assert_eq!(weakly_floor(1000, 3), 8);
        assert_eq!(weakly_floor(7, 0), 0);
    }

    #[test]
    fn ceil_log_values() {
        assert_eq!(ceil_log(2, 8), 3);
        assert_eq!(ceil_log(2, 9), 4);
        assert_eq!(ceil_log(12, 1), 0);
        assert_eq!(ceil_log(3, 27), 3);
    }
}
