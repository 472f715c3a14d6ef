//! Word-level helpers for vertex bitsets. Vertex `v` (1-based) lives at bit `v - 1`.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test(words: &[u64], v: usize) -> bool {
    let b = v - 1;
    words[b / 64] >> (b % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(words: &mut [u64], v: usize) {
    let b = v - 1;
    words[b / 64] |= 1 << (b % 64);
}

#[inline]
pub(crate) fn clear(words: &mut [u64], v: usize) {
    let b = v - 1;
    words[b / 64] &= !(1 << (b % 64));
}

pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut w = vec![u64::MAX; words_for(n)];
    if n % 64 != 0 {
        if let Some(last) = w.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    w
}

#[inline]
pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// Iterates set bits as 1-based vertices in ascending order.
pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + t + 1)
        })
    })
}
