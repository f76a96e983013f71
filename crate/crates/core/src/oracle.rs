//! Brute-force referees, independent of the row-reduction paths in
//! [`crate::codes`].
//!
//! Gray images have two layouts. [`GrayWord`] keeps elementwise triples
//! `(a_i, a_i+c_i, b_i)`; [`BlockWord`] groups them into three length-`n`
//! blocks `a | a+c | b`. Triple position `3i + j` is block position
//! `j*n + i`.

use crate::codes::{CodeBasis, DualBasis, LinearCode};
use crate::error::{Error, Result};
use crate::linalg::{Span, Word};
use crate::ring::{gray_map, lee_distance, shift, GrayWord, RElem};

/// A Gray image in three-block layout.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BlockWord(pub Vec<bool>);

impl BlockWord {
    pub fn from_gray(g: &GrayWord) -> Result<BlockWord> {
        let len = g.len();
        if !len.is_multiple_of(3) {
            return Err(Error::BadWordLength(len));
        }
        let n = len / 3;
        let mut out = vec![false; len];
        for i in 0..n {
            for j in 0..3 {
                out[j * n + i] = g.0[3 * i + j];
            }
        }
        Ok(BlockWord(out))
    }

    pub fn to_gray(&self) -> Result<GrayWord> {
        let len = self.0.len();
        if !len.is_multiple_of(3) {
            return Err(Error::BadWordLength(len));
        }
        let n = len / 3;
        let mut out = vec![false; len];
        for i in 0..n {
            for j in 0..3 {
                out[3 * i + j] = self.0[j * n + i];
            }
        }
        Ok(GrayWord(out))
    }
}

/// Cyclic shift of each of the three blocks.
pub fn tau_map(w: &BlockWord) -> Result<BlockWord> {
    let len = w.0.len();
    if !len.is_multiple_of(3) {
        return Err(Error::BadWordLength(len));
    }
    let n = len / 3;
    if n == 0 {
        return Ok(w.clone());
    }
    Ok(BlockWord(w.0.chunks(n).flat_map(shift).collect()))
}

/// `Φ(σ(v)) = τ(Φ(v))`
pub fn check_shift_commutation(v: &[RElem]) -> bool {
    let lhs = gray_map(&shift(v));
    let rhs = BlockWord::from_gray(&gray_map(v))
        .and_then(|b| tau_map(&b))
        .and_then(|b| b.to_gray());
    rhs.is_ok_and(|r| r == lhs)
}

/// `d_L(x, y) = d_H(Φx, Φy)`
pub fn check_isometry(x: &[RElem], y: &[RElem]) -> bool {
    lee_distance(x, y) == gray_map(x).distance(&gray_map(y))
}

fn gray_word(g: &GrayWord) -> Word {
    let mut w = Word::ZERO;
    for (i, &b) in g.0.iter().enumerate() {
        w.set(i, b);
    }
    w
}

/// The F2-span of the Gray images of the basis is closed under `τ`.
pub fn check_quasi_cyclic(code: &CodeBasis) -> bool {
    let vectors = code.vectors();
    let images: Vec<GrayWord> = vectors.iter().map(|v| gray_map(v)).collect();
    let span = Span::from_words(images.iter().map(gray_word));
    images.iter().all(|g| {
        BlockWord::from_gray(g)
            .and_then(|b| tau_map(&b))
            .and_then(|b| b.to_gray())
            .is_ok_and(|t| span.contains(gray_word(&t)))
    })
}

/// For a self-orthogonal code over `R`, the Gray images of its basis are
/// pairwise orthogonal over F2.
pub fn check_gray_self_orthogonal(code: &CodeBasis) -> Result<bool> {
    if !code.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let images: Vec<GrayWord> = code.vectors().iter().map(|v| gray_map(v)).collect();
    Ok(images
        .iter()
        .enumerate()
        .all(|(i, x)| images[i..].iter().all(|y| !x.dot(y))))
}

/// Largest length scanned by [`exhaustive_dual`].
pub const EXHAUSTIVE_MAX_N: usize = 7;

/// The dual found by testing every vector of `R^n` against the basis.
///
/// Vectors are visited in Gray-code order over their `3n` raw bits
/// `(a, b, c)`. Each raw bit carries a precomputed column holding the
/// products `e * y_k[i]` for all basis vectors `y_k`, so flipping a bit
/// XORs one column into the running syndrome of `(x.y_k)_k`.
pub fn exhaustive_dual(code: &CodeBasis) -> Result<DualBasis> {
    let n = code.len();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::LengthTooLarge {
            n,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    let basis = code.vectors();
    let columns: Vec<u64> = (0..3 * n)
        .map(|j| {
            let unit = RElem::from_packed(1 << (j % 3));
            basis.iter().enumerate().fold(0u64, |acc, (k, y)| {
                acc | u64::from((unit * y[j / 3]).packed()) << (3 * k)
            })
        })
        .collect();

    let decode = |g: u64| -> Vec<RElem> {
        (0..n)
            .map(|i| RElem::from_packed(((g >> (3 * i)) & 7) as u8))
            .collect()
    };
    let packer = LinearCode::<RElem>::zero(n)?;
    let mut span = Span::new();
    let mut hits = 1u64;
    let mut syndrome = 0u64;
    for i in 1u64..(1u64 << (3 * n)) {
        syndrome ^= columns[i.trailing_zeros() as usize];
        if syndrome == 0 {
            hits += 1;
            span.insert(packer.pack(&decode(i ^ (i >> 1)))?);
        }
    }
    debug_assert_eq!(hits, 1u64 << span.rank());
    LinearCode::from_span(n, span)
}

/// Minimum nonzero Lee weight by enumerating every codeword as a vector
/// over `R` and summing `table` over its coordinates.
pub fn exhaustive_min_lee_weight(code: &CodeBasis, table: &[u32; 8]) -> Result<u32> {
    const MAX_RANK: usize = 22;
    let basis = code.vectors();
    let m = basis.len();
    if m == 0 {
        return Err(Error::ZeroCode);
    }
    if m > MAX_RANK {
        return Err(Error::LengthTooLarge {
            n: m,
            max: MAX_RANK,
        });
    }
    let mut current = vec![RElem::ZERO; code.len()];
    let mut best = u32::MAX;
    for i in 1u64..(1u64 << m) {
        let row = &basis[i.trailing_zeros() as usize];
        for (c, &r) in current.iter_mut().zip(row) {
            *c = *c + r;
        }
        let weight: u32 = current.iter().map(|x| table[x.packed() as usize]).sum();
        best = best.min(weight);
    }
    Ok(best)
}
