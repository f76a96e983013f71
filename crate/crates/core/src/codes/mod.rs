//! Linear and cyclic codes over F2, `Rw` and `R`.
//!
//! A code is stored as the F2-span of its codewords, each codeword packed
//! into a [`Word`] with symbol coordinate `t` of position `i` at bit
//! `t*n + i`. For `R` the coordinates are the Gray coordinates, so a packed
//! codeword is literally its Gray image in three-block layout
//! (`a`-block, `(a+c)`-block, `b`-block) and the Lee weight is a popcount.
//! Pivots of the canonical basis therefore run over the `a`-block first,
//! then the `(a+c)`-block, then the `b`-block, each by ascending index.

mod spec;

pub use spec::{
    binary_criterion_holds, is_self_dual, rw_code_from_factors, CodeSpec, ContainmentEvidence,
    DualFormulaCheck,
};

use std::marker::PhantomData;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kernel, Span, Word, WORD_BITS};
use crate::ring::{dot, fold_cyclic, shift, RElem, Symbol};

/// Code over `R`; the F2-span of its basis is the code.
pub type CodeBasis = LinearCode<RElem>;
/// The dual of a [`CodeBasis`], same representation.
pub type DualBasis = LinearCode<RElem>;

/// An F2-linear code of length `n` over the alphabet `S`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearCode<S> {
    n: usize,
    span: Span,
    _alphabet: PhantomData<S>,
}

impl<S: Symbol> LinearCode<S> {
    pub fn max_len() -> usize {
        WORD_BITS / S::BITS
    }

    fn check_len(n: usize) -> Result<()> {
        if n > Self::max_len() {
            return Err(Error::LengthTooLarge {
                n,
                max: Self::max_len(),
            });
        }
        Ok(())
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::check_len(n)?;
        Ok(Self {
            n,
            span: Span::new(),
            _alphabet: PhantomData,
        })
    }

    pub fn whole_space(n: usize) -> Result<Self> {
        Self::check_len(n)?;
        let span = Span::from_words((0..n * S::BITS).map(Word::unit));
        Ok(Self {
            n,
            span,
            _alphabet: PhantomData,
        })
    }

    /// F2-span of the given vectors (no closure under ring scalars or shifts).
    pub fn from_vectors(n: usize, vectors: &[Vec<S>]) -> Result<Self> {
        Self::check_len(n)?;
        let mut span = Span::new();
        for v in vectors {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            span.insert(pack(v));
        }
        Ok(Self {
            n,
            span,
            _alphabet: PhantomData,
        })
    }

    /// The ideal of `S[x]/(x^n - 1)` generated by the given polynomials:
    /// the F2-span of `s * x^i * g` over ring basis elements `s`, shifts
    /// `0 <= i < n` and generators `g`. Coefficient lists longer than `n`
    /// are reduced modulo `x^n - 1`.
    pub fn cyclic_ideal(n: usize, generators: &[Vec<S>]) -> Result<Self> {
        Self::check_len(n)?;
        if n == 0 {
            return Self::zero(0);
        }
        let mut span = Span::new();
        for g in generators {
            let mut v = fold_cyclic(g, n);
            for _ in 0..n {
                for &s in S::f2_basis() {
                    let sv: Vec<S> = v.iter().map(|&c| s * c).collect();
                    span.insert(pack(&sv));
                }
                v = shift(&v);
            }
        }
        Ok(Self {
            n,
            span,
            _alphabet: PhantomData,
        })
    }

    /// A code from an already reduced span of packed words.
    pub fn from_span(n: usize, span: Span) -> Result<Self> {
        Self::check_len(n)?;
        let limit = n * S::BITS;
        if span.rows().iter().any(|w| w.ones().any(|b| b >= limit)) {
            return Err(Error::BadWordLength(limit));
        }
        Ok(Self {
            n,
            span,
            _alphabet: PhantomData,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Length zero.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `log2 |C|`
    pub fn size_log2(&self) -> usize {
        self.span.rank()
    }

    pub fn is_zero_code(&self) -> bool {
        self.span.rank() == 0
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    /// Canonical basis as packed words.
    pub fn words(&self) -> &[Word] {
        self.span.rows()
    }

    /// Canonical basis as symbol vectors.
    pub fn vectors(&self) -> Vec<Vec<S>> {
        self.span
            .rows()
            .iter()
            .map(|w| unpack(*w, self.n))
            .collect()
    }

    pub fn pack(&self, v: &[S]) -> Result<Word> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(pack(v))
    }

    pub fn contains(&self, v: &[S]) -> Result<bool> {
        Ok(self.span.contains(self.pack(v)?))
    }

    pub fn is_subcode_of(&self, other: &LinearCode<S>) -> bool {
        self.n == other.n && self.span.is_subspace_of(&other.span)
    }

    /// `C^perp = {x : x.y = 0 for all y in C}` under the ring inner product.
    ///
    /// Each basis vector `y` contributes `BITS` binary equations, one per
    /// coordinate of `x.y`; the dual is their common kernel.
    pub fn dual(&self) -> LinearCode<S> {
        let nbits = self.n * S::BITS;
        let mut equations = Vec::with_capacity(self.size_log2() * S::BITS);
        for y in self.vectors() {
            let mut rows = vec![Word::ZERO; S::BITS];
            for (i, &yi) in y.iter().enumerate() {
                for s in 0..S::BITS {
                    let product = (S::from_bits(1 << s) * yi).to_bits();
                    for (t, row) in rows.iter_mut().enumerate() {
                        if (product >> t) & 1 == 1 {
                            row.flip(s * self.n + i);
                        }
                    }
                }
            }
            equations.extend(rows);
        }
        let span = Span::from_words(kernel(&equations, nbits));
        LinearCode {
            n: self.n,
            span,
            _alphabet: PhantomData,
        }
    }

    /// `C^perp ⊆ C`
    pub fn is_dual_containing(&self) -> bool {
        self.dual().is_subcode_of(self)
    }

    /// `C ⊆ C^perp`, checked on all pairs of basis vectors.
    pub fn is_self_orthogonal(&self) -> bool {
        let vs = self.vectors();
        vs.iter()
            .enumerate()
            .all(|(i, x)| vs[i..].iter().all(|y| dot(x, y) == S::ZERO))
    }

    /// Closed under the cyclic shift.
    pub fn is_cyclic(&self) -> bool {
        self.vectors()
            .iter()
            .all(|v| self.span.contains(pack(&shift(v))))
    }

    /// Closed under multiplication by every ring element.
    pub fn is_submodule(&self) -> bool {
        self.vectors().iter().all(|v| {
            S::f2_basis().iter().all(|&s| {
                let sv: Vec<S> = v.iter().map(|&c| s * c).collect();
                self.span.contains(pack(&sv))
            })
        })
    }
}

fn pack<S: Symbol>(v: &[S]) -> Word {
    let n = v.len();
    let mut w = Word::ZERO;
    for (i, &x) in v.iter().enumerate() {
        let bits = x.to_bits();
        for t in 0..S::BITS {
            if (bits >> t) & 1 == 1 {
                w.flip(t * n + i);
            }
        }
    }
    w
}

fn unpack<S: Symbol>(w: Word, n: usize) -> Vec<S> {
    (0..n)
        .map(|i| {
            let bits = (0..S::BITS).fold(0u8, |acc, t| acc | (w.get(t * n + i) as u8) << t);
            S::from_bits(bits)
        })
        .collect()
}

/// A minimum-distance value and whether it is proven minimal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Distance {
    pub value: u32,
    pub exact: bool,
}

/// Default enumeration limit on `log2 |C|` for exact distances.
pub const DEFAULT_BUDGET: usize = 24;
/// Default number of basis rows combined when the budget is exceeded.
pub const DEFAULT_MAX_COMBINATION: usize = 3;

impl LinearCode<RElem> {
    /// Minimum nonzero Lee weight, which for a linear code is its minimum
    /// Lee distance.
    ///
    /// With `log2 |C| <= budget` every nonzero codeword is visited (in Gray
    /// code order, one row XOR per step) and the result is exact. Otherwise
    /// only sums of at most `max_combination` basis rows are tried and the
    /// result is an upper bound with `exact = false`.
    pub fn min_lee_distance(&self, budget: usize, max_combination: usize) -> Result<Distance> {
        let rows = self.words();
        let m = rows.len();
        if m == 0 {
            return Err(Error::ZeroCode);
        }
        if m <= budget && m < 64 {
            let mut best = u32::MAX;
            let mut w = Word::ZERO;
            for i in 1u64..(1u64 << m) {
                w ^= rows[i.trailing_zeros() as usize];
                best = best.min(w.count_ones());
                if best == 1 {
                    break;
                }
            }
            return Ok(Distance {
                value: best,
                exact: true,
            });
        }
        let mut best = u32::MAX;
        bounded_search(rows, 0, Word::ZERO, max_combination.max(1), &mut best);
        Ok(Distance {
            value: best,
            exact: false,
        })
    }
}

fn bounded_search(rows: &[Word], start: usize, acc: Word, left: usize, best: &mut u32) {
    for (j, &row) in rows.iter().enumerate().skip(start) {
        let w = acc ^ row;
        *best = (*best).min(w.count_ones());
        if left > 1 {
            bounded_search(rows, j + 1, w, left - 1, best);
        }
    }
}
