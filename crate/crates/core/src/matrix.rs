use std::fmt;

const WORD: usize = 64;

/// A dense n-by-n boolean relation, bit-packed row by row.
///
/// Entry `(u, v)` answers a reachability question for the pair. On the
/// diagonal the convention throughout this crate is "non-empty": `(u, u)`
/// is set only when a walk with at least one edge witnesses it, never by
/// definition.
#[derive(Clone, PartialEq, Eq)]
pub struct ReachMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl ReachMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD);
        ReachMatrix {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ReachMatrix::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        let w = self.bits[u * self.words_per_row + v / WORD];
        w >> (v % WORD) & 1 == 1
    }

    pub fn set(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words_per_row + v / WORD] |= 1 << (v % WORD);
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words_per_row..(u + 1) * self.words_per_row]
    }

    /// Set positions of row `u` in ascending order.
    pub fn row_bits(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u)
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| BitIter { word: w, base: k * WORD })
    }

    /// OR the row `src` of `other` into row `dst` of `self`.
    pub fn or_row_from(&mut self, dst: usize, other: &ReachMatrix, src: usize) {
        debug_assert_eq!(self.words_per_row, other.words_per_row);
        let start = dst * self.words_per_row;
        for k in 0..self.words_per_row {
            self.bits[start + k] |= other.bits[src * other.words_per_row + k];
        }
    }

    /// Like [`or_row_from`](Self::or_row_from), but also appends the
    /// positions that were newly set to `newly_set`.
    pub fn absorb_row(
        &mut self,
        dst: usize,
        other: &ReachMatrix,
        src: usize,
        newly_set: &mut Vec<usize>,
    ) {
        debug_assert_eq!(self.words_per_row, other.words_per_row);
        let start = dst * self.words_per_row;
        for k in 0..self.words_per_row {
            let add = other.bits[src * other.words_per_row + k] & !self.bits[start + k];
            if add != 0 {
                self.bits[start + k] |= add;
                newly_set.extend(BitIter {
                    word: add,
                    base: k * WORD,
                });
            }
        }
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True if every set entry of `self` is also set in `other`.
    pub fn subset_of(&self, other: &ReachMatrix) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0)
    }
}

struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

impl fmt::Debug for ReachMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ReachMatrix({})", self.n)?;
        for u in 0..self.n {
            for v in 0..self.n {
                write!(f, "{}", if self.get(u, v) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
