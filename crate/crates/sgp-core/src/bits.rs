//! Small-word subset helpers used by the exponential searches.
//!
//! All of these operate on `u64` masks, so callers must keep the ground set
//! at 64 elements or fewer. Masks index *positions* in whatever slice the
//! caller is working with; they are not tied to graph vertex ids.

/// Iterates all `k`-element subsets of `{0, .., m-1}` in increasing mask
/// order (Gosper's hack). Supports the full word, `m <= 64`.
pub fn k_subset_masks(m: usize, k: usize) -> KSubsets {
    debug_assert!(m <= 64);
    let first = if k == 0 || k > m {
        None
    } else {
        Some(low_bits(k))
    };
    KSubsets {
        m,
        cur: first,
        emit_empty: k == 0,
    }
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

pub struct KSubsets {
    m: usize,
    cur: Option<u64>,
    emit_empty: bool,
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.emit_empty {
            self.emit_empty = false;
            return Some(0);
        }
        let v = self.cur?;
        // Gosper: next mask with the same popcount; stop on word overflow
        // or once a bit would leave the ground set.
        let c = v & v.wrapping_neg();
        self.cur = v
            .checked_add(c)
            .map(|r| (((r ^ v) >> 2) / c) | r)
            .filter(|&next| self.m == 64 || next >> self.m == 0);
        Some(v)
    }
}

/// Iterates every submask of `mask`, including `mask` itself and `0`.
pub fn submasks(mask: u64) -> Submasks {
    Submasks {
        mask,
        cur: mask,
        done: false,
    }
}

pub struct Submasks {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Submasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let v = self.cur;
        if v == 0 {
            self.done = true;
        } else {
            self.cur = (v - 1) & self.mask;
        }
        Some(v)
    }
}

/// Vertex ids set in `mask`, ascending.
pub fn mask_to_ids(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros());
        m &= m - 1;
    }
    out
}

pub fn ids_to_mask(ids: &[u32]) -> u64 {
    ids.iter().fold(0u64, |acc, &v| acc | 1u64 << v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_counts() {
        for m in 0..=10usize {
            for k in 0..=m {
                let n = k_subset_masks(m, k).count();
                let binom = (0..k).fold(1usize, |acc, i| acc * (m - i) / (i + 1));
                assert_eq!(n, binom, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn gosper_members_have_right_size() {
        for mask in k_subset_masks(8, 3) {
            assert_eq!(mask.count_ones(), 3);
            assert!(mask < 1 << 8);
        }
    }

    #[test]
    fn submask_count_is_power_of_two() {
        assert_eq!(submasks(0b10110).count(), 8);
        assert_eq!(submasks(0).count(), 1);
    }

    #[test]
    fn gosper_full_word() {
        // top-of-word subsets terminate cleanly
        assert_eq!(k_subset_masks(64, 63).count(), 64);
        assert_eq!(k_subset_masks(64, 64).count(), 1);
        assert_eq!(k_subset_masks(64, 1).count(), 64);
        let last = k_subset_masks(64, 64).next().unwrap();
        assert_eq!(last, u64::MAX);
    }

    #[test]
    fn ids_roundtrip() {
        let ids = vec![0, 3, 17, 63];
        assert_eq!(mask_to_ids(ids_to_mask(&ids)), ids);
    }
}
