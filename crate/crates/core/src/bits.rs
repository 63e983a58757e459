//! Word-array bit manipulation shared by the adjacency rows and search sets.

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn set(words: &mut [u64], i: usize) {
    words[i >> 6] |= 1u64 << (i & 63);
}

#[inline]
pub(crate) fn clear(words: &mut [u64], i: usize) {
    words[i >> 6] &= !(1u64 << (i & 63));
}

#[inline]
pub(crate) fn get(words: &[u64], i: usize) -> bool {
    (words[i >> 6] >> (i & 63)) & 1 != 0
}

#[inline]
pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

#[inline]
pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// Iterates the indices of set bits in ascending order.
pub(crate) fn iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors(
            if w == 0 { None } else { Some(w) },
            |&rest| {
                let next = rest & (rest - 1);
                if next == 0 {
                    None
                } else {
                    Some(next)
                }
            },
        )
        .map(move |rest| (wi << 6) | rest.trailing_zeros() as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_iter_roundtrip() {
        let mut w = vec![0u64; 3];
        for &i in &[0, 1, 63, 64, 65, 130, 191] {
            set(&mut w, i);
        }
        assert!(get(&w, 63));
        assert!(!get(&w, 62));
        assert_eq!(count(&w), 7);
        assert_eq!(iter(&w).collect::<Vec<_>>(), vec![0, 1, 63, 64, 65, 130, 191]);
        clear(&mut w, 63);
        assert!(!get(&w, 63));
        assert_eq!(count(&w), 6);
    }
}
