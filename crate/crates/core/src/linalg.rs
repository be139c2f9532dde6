//! Packed bit rows and incremental row echelon bases over GF(2).
//!
//! Column 0 is treated as the most significant position: the pivot of a
//! stored row is its lowest set column. When columns are listed from the
//! greatest monomial down, pivots are leading monomials and reducing a vector
//! against the basis yields a canonical remainder supported on non-pivot
//! columns.

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, col: usize) -> bool {
        debug_assert!(col < self.len);
        self.words[col / WORD] >> (col % WORD) & 1 == 1
    }

    pub fn set(&mut self, col: usize) {
        debug_assert!(col < self.len);
        self.words[col / WORD] |= 1 << (col % WORD);
    }

    pub fn flip(&mut self, col: usize) {
        debug_assert!(col < self.len);
        self.words[col / WORD] ^= 1 << (col % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set column at or after `from`.
    pub fn first_one_from(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut w = from / WORD;
        let mut bits = self.words[w] & (!0u64 << (from % WORD));
        loop {
            if bits != 0 {
                return Some(w * WORD + bits.trailing_zeros() as usize);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            bits = self.words[w];
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }

    /// `self ^= other`, touching only words at or after the one holding `from`.
    pub fn xor_from(&mut self, other: &BitRow, from: usize) {
        debug_assert_eq!(self.len, other.len);
        let start = from / WORD;
        for (a, b) in self.words[start..].iter_mut().zip(&other.words[start..]) {
            *a ^= b;
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        let mut next = self.first_one();
        std::iter::from_fn(move || {
            let cur = next?;
            next = self.first_one_from(cur + 1);
            Some(cur)
        })
    }
}

/// Row echelon basis indexed by pivot column.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<Option<BitRow>>,
    rank: usize,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            rows: vec![None; cols],
            rank: 0,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.cols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows[col].is_some()
    }

    /// Adds a row to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut row: BitRow) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        let mut from = 0;
        while let Some(pivot) = row.first_one_from(from) {
            match &self.rows[pivot] {
                Some(basis_row) => {
                    row.xor_from(basis_row, pivot);
                    from = pivot + 1;
                }
                None => {
                    self.rows[pivot] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }

    /// Fully reduces `row` so that no pivot column remains set.
    pub fn reduce(&self, row: &mut BitRow) {
        let mut from = 0;
        while let Some(col) = row.first_one_from(from) {
            if let Some(basis_row) = &self.rows[col] {
                row.xor_from(basis_row, col);
            }
            from = col + 1;
        }
    }

    pub fn contains(&self, row: &BitRow) -> bool {
        let mut r = row.clone();
        self.reduce(&mut r);
        r.is_zero()
    }
}
