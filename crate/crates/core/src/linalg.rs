//! Row reduction over F2 on fixed-width packed words.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

/// Capacity of a [`Word`] in bits.
pub const WORD_BITS: usize = 192;

/// A binary word of up to [`WORD_BITS`] bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word([u64; 3]);

impl Word {
    pub const ZERO: Word = Word([0; 3]);

    pub fn unit(i: usize) -> Word {
        let mut w = Word::ZERO;
        w.flip(i);
        w
    }

    pub fn get(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, on: bool) {
        if self.get(i) != on {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 3]
    }

    pub fn count_ones(&self) -> u32 {
        self.0.iter().map(|l| l.count_ones()).sum()
    }

    /// Parity of `self AND other`, the F2 inner product.
    pub fn dot(&self, other: &Word) -> bool {
        let mut acc = 0u64;
        for i in 0..3 {
            acc ^= self.0[i] & other.0[i];
        }
        acc.count_ones() & 1 == 1
    }

    pub fn lowest_set_bit(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &l)| l != 0)
            .map(|(i, l)| 64 * i + l.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..WORD_BITS).filter(|&i| self.get(i))
    }
}

impl BitXor for Word {
    type Output = Word;
    fn bitxor(mut self, rhs: Word) -> Word {
        self ^= rhs;
        self
    }
}

impl BitXorAssign for Word {
    fn bitxor_assign(&mut self, rhs: Word) {
        for i in 0..3 {
            self.0[i] ^= rhs.0[i];
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.ones().last().map_or(0, |i| i + 1);
        let bits: String = (0..top)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "Word({bits})")
    }
}

/// An F2 subspace held in fully reduced row echelon form.
///
/// The pivot of a row is its lowest set bit; rows are sorted by pivot and
/// no row has a bit set at another row's pivot. The form is unique per
/// subspace, so equality of spans is equality of row lists.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Span {
    rows: Vec<Word>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut span = Span::new();
        for w in words {
            span.insert(w);
        }
        span
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after eliminating every pivot.
    pub fn reduce(&self, mut v: Word) -> Word {
        for row in &self.rows {
            if let Some(p) = row.lowest_set_bit() {
                if v.get(p) {
                    v ^= *row;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Word) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false if it was already inside.
    pub fn insert(&mut self, v: Word) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.lowest_set_bit() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                *row ^= v;
            }
        }
        let at = self
            .rows
            .partition_point(|r| r.lowest_set_bit().is_some_and(|q| q < p));
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.rows.iter().all(|&r| other.contains(r))
    }
}

/// Basis of `{x : e.x = 0 for every equation e}` inside the first `nbits`
/// coordinates.
pub fn kernel(equations: &[Word], nbits: usize) -> Vec<Word> {
    let span = Span::from_words(equations.iter().copied());
    let pivots: Vec<(usize, Word)> = span
        .rows()
        .iter()
        .filter_map(|r| r.lowest_set_bit().map(|p| (p, *r)))
        .collect();
    let mut is_pivot = vec![false; nbits];
    for &(p, _) in &pivots {
        is_pivot[p] = true;
    }
    (0..nbits)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = Word::unit(f);
            for &(p, row) in &pivots {
                if row.get(f) {
                    x.flip(p);
                }
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(bits: &[usize]) -> Word {
        let mut w = Word::ZERO;
        for &b in bits {
            w.flip(b);
        }
        w
    }

    #[test]
    fn span_is_reduced_and_sorted() {
        let span = Span::from_words([word(&[1, 2]), word(&[0, 1]), word(&[0, 2])]);
        assert_eq!(span.rank(), 2);
        assert_eq!(span.rows(), &[word(&[0, 2]), word(&[1, 2])]);
        assert!(span.contains(word(&[0, 1])));
        assert!(!span.contains(word(&[2])));
    }

    #[test]
    fn kernel_of_parity_check() {
        // single even-parity equation on 3 bits
        let k = kernel(&[word(&[0, 1, 2])], 3);
        assert_eq!(k.len(), 2);
        assert!(k.iter().all(|x| !x.dot(&word(&[0, 1, 2]))));
    }

    #[test]
    fn words_cross_limb_boundaries() {
        let w = word(&[63, 64, 191]);
        assert_eq!(w.count_ones(), 3);
        assert_eq!(w.lowest_set_bit(), Some(63));
        assert_eq!(w.ones().collect::<Vec<_>>(), vec![63, 64, 191]);
    }

    fn arb_word(nbits: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(any::<bool>(), nbits).prop_map(|bits| {
            let mut w = Word::ZERO;
            for (i, b) in bits.into_iter().enumerate() {
                w.set(i, b);
            }
            w
        })
    }

    proptest! {
        #[test]
        fn kernel_is_orthogonal_complement(eqs in prop::collection::vec(arb_word(40), 0..30)) {
            let k = kernel(&eqs, 40);
            let rank = Span::from_words(eqs.iter().copied()).rank();
            prop_assert_eq!(k.len() + rank, 40);
            for x in &k {
                for e in &eqs {
                    prop_assert!(!x.dot(e));
                }
            }
        }

        #[test]
        fn span_is_canonical(ws in prop::collection::vec(arb_word(70), 0..20)) {
            let forward = Span::from_words(ws.iter().copied());
            let backward = Span::from_words(ws.iter().rev().copied());
            prop_assert_eq!(&forward, &backward);
            for w in &ws {
                prop_assert!(forward.contains(*w));
            }
        }
    }
}
