//! Odometers over ordered tuples and sorted multisets of element indices.

/// Calls `visit` on every ordered `len`-tuple over `0..order`, in
/// lexicographic order. Stops early when `visit` returns `false`.
pub(crate) fn for_each_tuple(order: usize, len: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if order == 0 {
        return;
    }
    let mut t = vec![0usize; len];
    loop {
        if !visit(&t) {
            return;
        }
        let mut k = len;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            t[k] += 1;
            if t[k] < order {
                break;
            }
            t[k] = 0;
        }
    }
}

/// Calls `visit` on every non-decreasing `len`-tuple over `0..order`, in
/// lexicographic order.
pub(crate) fn for_each_multiset(order: usize, len: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if order == 0 {
        return;
    }
    let mut t = vec![0usize; len];
    loop {
        if !visit(&t) {
            return;
        }
        // rightmost position that can still grow
        let mut k = len;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if t[k] + 1 < order {
                break;
            }
        }
        let v = t[k] + 1;
        for slot in &mut t[k..] {
            *slot = v;
        }
    }
}

/// All sorted multisets, collected.
#[cfg(test)]
pub(crate) fn multisets(order: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_multiset(order, len, |t| {
        out.push(t.to_vec());
        true
    });
    out
}

/// Position of an ordered tuple in a row-major table of side `order`.
#[inline]
pub(crate) fn flat_index(order: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * order + x)
}

/// Binomial coefficient, saturating.
pub(crate) fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n.saturating_sub(k));
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        // C(n+k-1, k)
        assert_eq!(multisets(3, 3).len(), 10);
        assert_eq!(multisets(6, 2).len(), 21);
        assert_eq!(multisets(3, 3)[0], vec![0, 0, 0]);
        assert_eq!(multisets(3, 3)[9], vec![2, 2, 2]);
        let m = multisets(4, 3);
        assert!(m.windows(2).all(|w| w[0] < w[1]));
        assert!(m.iter().all(|t| t.windows(2).all(|p| p[0] <= p[1])));
    }

    #[test]
    fn tuple_order_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_tuple(3, 2, |t| {
            seen.push(t.to_vec());
            true
        });
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
        assert_eq!(flat_index(3, &[1, 0]), 3);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 0), 1);
        assert_eq!(binomial(6, 3), 20);
    }
}
