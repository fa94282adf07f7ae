//! Colour domains for the feasibility search.
//!
//! A domain is the set of colours still admissible for one element. For
//! p <= 64 it is a plain bitmask; for larger p it is a union of disjoint
//! colour intervals, so that removing the forbidden arc around an assigned
//! neighbour costs time proportional to the number of runs, not to p.

#[derive(Clone, Debug)]
pub(crate) enum Domain {
    Mask(u64),
    /// Disjoint inclusive runs `[lo, hi]`, sorted, never wrapping.
    Runs(Vec<(u32, u32)>),
}

impl Domain {
    pub fn full(p: u32) -> Self {
        if p <= 64 {
            Domain::Mask(if p == 64 { u64::MAX } else { (1u64 << p) - 1 })
        } else {
            Domain::Runs(vec![(0, p - 1)])
        }
    }

    pub fn size(&self) -> u32 {
        match self {
            Domain::Mask(bits) => bits.count_ones(),
            Domain::Runs(runs) => runs.iter().map(|(lo, hi)| hi - lo + 1).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Domain::Mask(bits) => *bits == 0,
            Domain::Runs(runs) => runs.is_empty(),
        }
    }

    pub fn min(&self) -> Option<u32> {
        match self {
            Domain::Mask(bits) => (*bits != 0).then(|| bits.trailing_zeros()),
            Domain::Runs(runs) => runs.first().map(|(lo, _)| *lo),
        }
    }

    pub fn contains(&self, c: u32) -> bool {
        match self {
            Domain::Mask(bits) => bits & (1 << c) != 0,
            Domain::Runs(runs) => runs.iter().any(|&(lo, hi)| lo <= c && c <= hi),
        }
    }

    /// Removes the inclusive, non-wrapping range `[lo, hi]`; true if any
    /// colour was actually removed.
    pub fn remove_range(&mut self, lo: u32, hi: u32) -> bool {
        match self {
            Domain::Mask(bits) => {
                let width = hi - lo + 1;
                let mask = if width >= 64 {
                    u64::MAX
                } else {
                    ((1u64 << width) - 1) << lo
                };
                let before = *bits;
                *bits &= !mask;
                *bits != before
            }
            Domain::Runs(runs) => {
                if runs.iter().all(|&(a, b)| b < lo || a > hi) {
                    return false;
                }
                let mut out = Vec::with_capacity(runs.len() + 1);
                for &(a, b) in runs.iter() {
                    if b < lo || a > hi {
                        out.push((a, b));
                        continue;
                    }
                    if a < lo {
                        out.push((a, lo - 1));
                    }
                    if b > hi {
                        out.push((hi + 1, b));
                    }
                }
                *runs = out;
                true
            }
        }
    }

    /// Removes the inclusive circular arc from `lo` to `hi` (may wrap);
    /// true if any colour was removed.
    pub fn remove_arc(&mut self, lo: u32, hi: u32, p: u32) -> bool {
        if lo <= hi {
            self.remove_range(lo, hi)
        } else {
            let a = self.remove_range(lo, p - 1);
            let b = self.remove_range(0, hi);
            a | b
        }
    }

    /// Shrinks the domain to the single colour `c` (which must be present).
    pub fn retain_single(&mut self, c: u32) {
        debug_assert!(self.contains(c));
        match self {
            Domain::Mask(bits) => *bits = 1u64 << c,
            Domain::Runs(runs) => {
                runs.clear();
                runs.push((c, c));
            }
        }
    }

    /// Smallest circular arc `(start, width)` containing the domain: the
    /// complement of the largest circular gap between consecutive colours.
    /// The domain must be nonempty.
    pub fn circular_hull(&self, p: u32) -> (u32, u32) {
        debug_assert!(!self.is_empty());
        let mut best_gap = 0u32;
        let mut best_after = 0u32; // start of the run following the best gap
        match self {
            Domain::Mask(bits) => {
                let first = bits.trailing_zeros();
                let last = 63 - bits.leading_zeros();
                let mut prev = first;
                let mut rest = bits & (bits - 1);
                while rest != 0 {
                    let b = rest.trailing_zeros();
                    let gap = b - prev - 1;
                    if gap > best_gap {
                        best_gap = gap;
                        best_after = b;
                    }
                    prev = b;
                    rest &= rest - 1;
                }
                let wrap = first + p - last - 1;
                if wrap > best_gap {
                    best_gap = wrap;
                    best_after = first;
                }
            }
            Domain::Runs(runs) => {
                for w in runs.windows(2) {
                    let gap = w[1].0 - w[0].1 - 1;
                    if gap > best_gap {
                        best_gap = gap;
                        best_after = w[1].0;
                    }
                }
                let first = runs[0].0;
                let last = runs[runs.len() - 1].1;
                let wrap = first + p - last - 1;
                if wrap > best_gap {
                    best_gap = wrap;
                    best_after = first;
                }
            }
        }
        (best_after, p - best_gap)
    }

    /// Ascending iteration over the remaining colours.
    pub fn iter(&self) -> DomainIter<'_> {
        match self {
            Domain::Mask(bits) => DomainIter::Mask(*bits),
            Domain::Runs(runs) => DomainIter::Runs {
                runs,
                idx: 0,
                next: runs.first().map(|(lo, _)| *lo).unwrap_or(0),
            },
        }
    }
}

pub(crate) enum DomainIter<'a> {
    Mask(u64),
    Runs {
        runs: &'a [(u32, u32)],
        idx: usize,
        next: u32,
    },
}

impl Iterator for DomainIter<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        match self {
            DomainIter::Mask(bits) => {
                if *bits == 0 {
                    return None;
                }
                let c = bits.trailing_zeros();
                *bits &= *bits - 1;
                Some(c)
            }
            DomainIter::Runs { runs, idx, next } => {
                let &(_, hi) = runs.get(*idx)?;
                let c = *next;
                if c == hi {
                    *idx += 1;
                    if let Some(&(lo, _)) = runs.get(*idx) {
                        *next = lo;
                    }
                } else {
                    *next = c + 1;
                }
                Some(c)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(d: &Domain) -> Vec<u32> {
        d.iter().collect()
    }

    #[test]
    fn mask_removal_and_iteration() {
        let mut d = Domain::full(7);
        assert_eq!(d.size(), 7);
        d.remove_range(2, 4);
        assert_eq!(values(&d), vec![0, 1, 5, 6]);
        assert!(!d.contains(3));
        assert_eq!(d.min(), Some(0));
        d.remove_range(0, 1);
        d.remove_range(5, 6);
        assert!(d.is_empty());
    }

    #[test]
    fn runs_removal_splits_and_merges() {
        let mut d = Domain::full(100);
        d.remove_range(10, 19);
        d.remove_range(15, 30);
        d.remove_range(90, 99);
        assert_eq!(d.size(), 100 - 21 - 10);
        assert!(d.contains(9) && !d.contains(10) && !d.contains(30) && d.contains(31));
        assert!(!d.contains(95));
        let v = values(&d);
        assert_eq!(v.len() as u32, d.size());
        assert_eq!(v.first(), Some(&0));
        assert_eq!(v.last(), Some(&89));
    }

    #[test]
    fn full_64_does_not_overflow() {
        let d = Domain::full(64);
        assert_eq!(d.size(), 64);
        assert!(d.contains(63));
    }

    #[test]
    fn remove_range_reports_changes() {
        let mut d = Domain::full(10);
        assert!(d.remove_range(3, 5));
        assert!(!d.remove_range(3, 5));
        let mut d = Domain::full(100);
        assert!(d.remove_range(10, 20));
        assert!(!d.remove_range(12, 18));
    }

    #[test]
    fn circular_hull_cases() {
        let mut d = Domain::full(10);
        assert_eq!(d.circular_hull(10), (0, 10));
        d.remove_range(4, 7);
        // remaining {8, 9, 0..3}: hull starts at 8, width 6
        assert_eq!(d.circular_hull(10), (8, 6));
        d.retain_single(9);
        assert_eq!(d.circular_hull(10), (9, 1));

        let mut d = Domain::full(90);
        d.remove_range(0, 39);
        d.remove_range(60, 89);
        // remaining [40, 59]
        assert_eq!(d.circular_hull(90), (40, 20));
        d.remove_range(45, 55);
        assert_eq!(d.circular_hull(90), (40, 20));
    }
}
