//! Enumeration of the closed sets of a closure operator on a bitmask
//! universe, by include/exclude search with pruning.

/// Every fixed point `C = close(C)` inside `universe`, ascending by mask.
///
/// `close` must be extensive, monotone and idempotent. The search decides
/// elements one at a time; including an element jumps straight to the
/// closure, and a branch dies as soon as that closure hits an element
/// already excluded. Each closed set is reached by exactly one path.
pub(crate) fn closed_sets(universe: u64, close: impl Fn(u64) -> u64) -> Vec<u64> {
    let mut out = Vec::new();
    let start = close(0);
    let mut stack = vec![(start, 0u64)];
    while let Some((incl, excl)) = stack.pop() {
        let open = universe & !incl & !excl;
        if open == 0 {
            out.push(incl);
            continue;
        }
        let bit = open & open.wrapping_neg();
        stack.push((incl, excl | bit));
        let grown = close(incl | bit);
        if grown & excl == 0 {
            stack.push((grown, excl));
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // Subsets closed under "contains i ⇒ contains i+1" on 0..5: the suffixes.
    #[test]
    fn suffix_closure() {
        let universe = 0b11111;
        let close = |mut s: u64| loop {
            let next = (s | s << 1) & universe;
            if next == s {
                return s;
            }
            s = next;
        };
        let sets = closed_sets(universe, close);
        assert_eq!(sets, vec![0, 0b10000, 0b11000, 0b11100, 0b11110, 0b11111]);
    }

    #[test]
    fn identity_closure_gives_power_set() {
        let sets = closed_sets(0b1111, |s| s);
        assert_eq!(sets, (0..16).collect::<Vec<u64>>());
    }
}
