//! Latin squares over the symbols `1..=k`.
//!
//! The base colourings in [`crate::constructions`] are read off a Latin
//! square row by row; the back-circulant square and squares with a pinned
//! first column are the only ones those constructions need.

use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum LatinError {
    #[error("Latin square order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },
}

/// A `k x k` array with entries in `1..=k`, every symbol exactly once per
/// row and per column. Indexing is 1-based to match the usual `l_ij`
/// convention of the constructions built on top.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<u32>, // row-major
}

impl LatinSquare {
    /// The back-circulant square: `l_ij = ((i + j - 2) mod k) + 1`.
    pub fn back_circulant(k: usize) -> Result<Self, LatinError> {
        if k < 1 {
            return Err(LatinError::OrderTooSmall { min: 1, got: k });
        }
        let mut cells = Vec::with_capacity(k * k);
        for i in 1..=k {
            for j in 1..=k {
                cells.push(((i + j - 2) % k) as u32 + 1);
            }
        }
        Ok(LatinSquare { order: k, cells })
    }

    /// A square with `l_11 = 1` and `l_21 = k`: the back-circulant square
    /// with rows 2 and k swapped.
    pub fn constrained(k: usize) -> Result<Self, LatinError> {
        if k < 2 {
            return Err(LatinError::OrderTooSmall { min: 2, got: k });
        }
        let mut sq = Self::back_circulant(k)?;
        sq.swap_rows(2, k);
        Ok(sq)
    }

    /// Row permutation of the back-circulant square placing the given
    /// first-column symbols at the given rows; remaining rows keep their
    /// ascending order. `pins` are `(row, symbol)`, both 1-based.
    ///
    /// The back-circulant first column is `1, 2, ..., k`, so the pin
    /// `(r, s)` moves back-circulant row `s` to row `r`.
    pub(crate) fn first_column_pinned(
        k: usize,
        pins: &[(usize, u32)],
    ) -> Result<Self, LatinError> {
        if k < pins.len().max(1) {
            return Err(LatinError::OrderTooSmall {
                min: pins.len().max(1),
                got: k,
            });
        }
        for &(r, s) in pins {
            assert!((1..=k).contains(&r) && (1..=k as u32).contains(&s));
        }
        let base = Self::back_circulant(k)?;
        let mut source_row = vec![0usize; k + 1]; // 1-based target -> base row
        let mut used = vec![false; k + 1];
        for &(r, s) in pins {
            assert!(source_row[r] == 0, "duplicate pinned row {r}");
            assert!(!used[s as usize], "duplicate pinned symbol {s}");
            source_row[r] = s as usize;
            used[s as usize] = true;
        }
        let mut free = (1..=k).filter(|s| !used[*s]);
        for r in 1..=k {
            if source_row[r] == 0 {
                source_row[r] = free.next().expect("row counts match");
            }
        }
        let mut cells = Vec::with_capacity(k * k);
        for r in 1..=k {
            for j in 1..=k {
                cells.push(base.entry(source_row[r], j));
            }
        }
        Ok(LatinSquare { order: k, cells })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry `l_ij`, 1-based. Panics out of range.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        assert!(
            (1..=self.order).contains(&i) && (1..=self.order).contains(&j),
            "Latin square index ({i},{j}) out of range for order {}",
            self.order
        );
        self.cells[(i - 1) * self.order + (j - 1)]
    }

    pub fn is_valid(&self) -> bool {
        let k = self.order;
        let full: u64 = if k >= 64 { u64::MAX } else { (1 << k) - 1 };
        for i in 1..=k {
            let mut row = 0u64;
            let mut col = 0u64;
            for j in 1..=k {
                let a = self.entry(i, j);
                let b = self.entry(j, i);
                if !(1..=k as u32).contains(&a) || !(1..=k as u32).contains(&b) {
                    return false;
                }
                row |= 1 << (a - 1);
                col |= 1 << (b - 1);
            }
            if row != full || col != full {
                return false;
            }
        }
        true
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let k = self.order;
        for j in 0..k {
            self.cells.swap((a - 1) * k + j, (b - 1) * k + j);
        }
    }

    /// Applies row, column and symbol permutations (0-based, each a
    /// permutation of `0..k`). The result is again a Latin square.
    pub fn permuted(&self, rows: &[usize], cols: &[usize], symbols: &[usize]) -> LatinSquare {
        let k = self.order;
        assert!(rows.len() == k && cols.len() == k && symbols.len() == k);
        let mut cells = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                let v = self.entry(rows[i] + 1, cols[j] + 1) as usize - 1;
                cells.push(symbols[v] as u32 + 1);
            }
        }
        LatinSquare { order: k, cells }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn back_circulant_small_orders() {
        let one = LatinSquare::back_circulant(1).unwrap();
        assert_eq!(one.entry(1, 1), 1);

        let three = LatinSquare::back_circulant(3).unwrap();
        let rows: Vec<Vec<u32>> = (1..=3)
            .map(|i| (1..=3).map(|j| three.entry(i, j)).collect())
            .collect();
        assert_eq!(rows, vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);

        // 2 + 4 - 1 = 5 = 1 mod 4
        let four = LatinSquare::back_circulant(4).unwrap();
        assert_eq!(four.entry(2, 4), 1);

        assert_eq!(
            LatinSquare::back_circulant(0),
            Err(LatinError::OrderTooSmall { min: 1, got: 0 })
        );
    }

    #[test]
    fn constrained_pins_hold() {
        let two = LatinSquare::constrained(2).unwrap();
        assert_eq!(
            (1..=2)
                .flat_map(|i| (1..=2).map(move |j| (i, j)))
                .map(|(i, j)| two.entry(i, j))
                .collect::<Vec<_>>(),
            vec![1, 2, 2, 1]
        );

        for k in 2..=8 {
            let sq = LatinSquare::constrained(k).unwrap();
            assert!(sq.is_valid(), "k={k}");
            assert_eq!(sq.entry(1, 1), 1, "k={k}");
            assert_eq!(sq.entry(2, 1), k as u32, "k={k}");
        }
        assert!(LatinSquare::constrained(1).is_err());
    }

    #[test]
    fn first_column_pins_hold() {
        for k in 3..=8 {
            let sq = LatinSquare::first_column_pinned(k, &[(1, 1), (k, k as u32)]).unwrap();
            assert!(sq.is_valid());
            assert_eq!(sq.entry(1, 1), 1);
            assert_eq!(sq.entry(k, 1), k as u32);
        }
        let sq = LatinSquare::first_column_pinned(3, &[(1, 1), (3, 2)]).unwrap();
        assert!(sq.is_valid());
        assert_eq!(sq.entry(1, 1), 1);
        assert_eq!(sq.entry(3, 1), 2);
    }

    #[test]
    fn permutations_preserve_validity() {
        let sq = LatinSquare::back_circulant(4).unwrap();
        let p = sq.permuted(&[2, 0, 3, 1], &[1, 3, 0, 2], &[3, 2, 1, 0]);
        assert!(p.is_valid());
    }
}
