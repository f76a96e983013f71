//! Arithmetic in `R = F2 + uF2 + u^2F2` (`u^3 = u`) and `Rw = F2 + wF2`
//! (`w^2 = 0`), the Gray map `R -> F2^3`, Lee weights and the ring
//! isomorphism `R -> F2 x Rw`.
//!
//! `R` splits along the orthogonal idempotents `e1 = 1 + u^2` and
//! `e2 = u^2`: `x*e1 = a*e1` recovers the F2 component, while `R*e2` is a
//! copy of `Rw` with `1 -> u^2` and `w -> u + u^2`.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A ring whose elements are stored as a few binary coordinates, so that
/// codes over it can be handled by F2 linear algebra.
pub trait Symbol:
    Copy + Eq + Ord + fmt::Debug + Add<Output = Self> + Mul<Output = Self> + Send + Sync + 'static
{
    /// Binary coordinates per symbol.
    const BITS: usize;
    const ZERO: Self;
    const ONE: Self;

    /// An F2-basis of the ring. The F2-span of `{s * v}` over this basis is
    /// the ring-module generated by `v`.
    fn f2_basis() -> &'static [Self];

    /// Binary coordinates, bit `t` being coordinate `t`. Must be F2-linear.
    fn to_bits(self) -> u8;

    fn from_bits(bits: u8) -> Self;
}

/// An element of F2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F2(pub bool);

impl Add for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl Mul for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Symbol for F2 {
    const BITS: usize = 1;
    const ZERO: Self = F2(false);
    const ONE: Self = F2(true);

    fn f2_basis() -> &'static [Self] {
        &[F2(true)]
    }

    fn to_bits(self) -> u8 {
        u8::from(self.0)
    }

    fn from_bits(bits: u8) -> Self {
        F2(bits & 1 == 1)
    }
}

/// An element `a + ub + u^2c` of `R`, packed as bits `a = 1`, `b = 2`, `c = 4`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RElem(u8);

const fn r_mul_raw(x: u8, y: u8) -> u8 {
    let (a1, b1, c1) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
    let (a2, b2, c2) = (y & 1, (y >> 1) & 1, (y >> 2) & 1);
    // u^3 = u, u^4 = u^2
    let a = a1 & a2;
    let b = (a1 & b2) ^ (a2 & b1) ^ (b1 & c2) ^ (b2 & c1);
    let c = (a1 & c2) ^ (a2 & c1) ^ (b1 & b2) ^ (c1 & c2);
    a | (b << 1) | (c << 2)
}

const R_MUL: [[u8; 8]; 8] = {
    let mut t = [[0u8; 8]; 8];
    let mut x = 0;
    while x < 8 {
        let mut y = 0;
        while y < 8 {
            t[x][y] = r_mul_raw(x as u8, y as u8);
            y += 1;
        }
        x += 1;
    }
    t
};

/// Lee weights indexed by the packed element.
pub const LEE_WEIGHTS: [u32; 8] = {
    let mut t = [0u32; 8];
    let mut x = 0;
    while x < 8 {
        let (a, b, c) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
        t[x] = (a + (a ^ c) + b) as u32;
        x += 1;
    }
    t
};

impl RElem {
    pub const ZERO: RElem = RElem(0);
    pub const ONE: RElem = RElem(1);
    pub const U: RElem = RElem(2);
    pub const U2: RElem = RElem(4);
    /// The idempotent `1 + u^2` selecting the F2 component.
    pub const E1: RElem = RElem(5);
    /// The idempotent `u^2` selecting the `Rw` component.
    pub const E2: RElem = RElem(4);

    pub const fn new(a: bool, b: bool, c: bool) -> Self {
        RElem(a as u8 | (b as u8) << 1 | (c as u8) << 2)
    }

    /// All eight elements in packed order.
    pub fn all() -> impl Iterator<Item = RElem> {
        (0..8).map(RElem)
    }

    pub const fn from_packed(bits: u8) -> Self {
        RElem(bits & 7)
    }

    pub const fn packed(self) -> u8 {
        self.0
    }

    pub const fn a(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn b(self) -> bool {
        self.0 & 2 == 2
    }

    pub const fn c(self) -> bool {
        self.0 & 4 == 4
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_unit(self) -> bool {
        RElem::all().any(|y| self * y == RElem::ONE)
    }

    pub fn lee_weight(self) -> u32 {
        LEE_WEIGHTS[self.0 as usize]
    }

    /// `(a, a + c, b)`
    pub fn gray(self) -> [bool; 3] {
        [self.a(), self.a() ^ self.c(), self.b()]
    }

    /// `a + ub + u^2c -> (a, (a + b + c) + bw)`
    pub fn crt_split(self) -> (F2, RwElem) {
        let (a, b, c) = (self.a(), self.b(), self.c());
        (F2(a), RwElem::new(a ^ b ^ c, b))
    }

    /// `(a, A + Bw) -> a + Bu + (a + A + B)u^2`
    pub fn crt_join(f: F2, g: RwElem) -> RElem {
        let (a, big_a, big_b) = (f.0, g.alpha(), g.beta());
        RElem::new(a, big_b, a ^ big_a ^ big_b)
    }

    /// Image of an `Rw` element under `1 -> u^2`, `w -> u + u^2`.
    pub fn embed_rw(g: RwElem) -> RElem {
        RElem::crt_join(F2(false), g)
    }
}

impl Add for RElem {
    type Output = RElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: RElem) -> RElem {
        RElem(self.0 ^ rhs.0)
    }
}

impl Mul for RElem {
    type Output = RElem;
    fn mul(self, rhs: RElem) -> RElem {
        RElem(R_MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl Symbol for RElem {
    const BITS: usize = 3;
    const ZERO: Self = RElem::ZERO;
    const ONE: Self = RElem::ONE;

    fn f2_basis() -> &'static [Self] {
        &[RElem::ONE, RElem::U, RElem::U2]
    }

    /// Gray coordinates `(a, a + c, b)`.
    fn to_bits(self) -> u8 {
        let [g0, g1, g2] = self.gray();
        g0 as u8 | (g1 as u8) << 1 | (g2 as u8) << 2
    }

    fn from_bits(bits: u8) -> Self {
        let (g0, g1, g2) = (bits & 1 == 1, bits & 2 == 2, bits & 4 == 4);
        RElem::new(g0, g2, g0 ^ g1)
    }
}

impl fmt::Display for RElem {
    /// `0`, or a `+`-joined subset of `1`, `u`, `u^2` in that order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<&str> = [(self.a(), "1"), (self.b(), "u"), (self.c(), "u^2")]
            .into_iter()
            .filter_map(|(on, t)| on.then_some(t))
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse {
                what: "ring element",
                input: s.into(),
            });
        }
        let mut x = RElem::ZERO;
        for term in text.split('+') {
            x = x + match term {
                "0" => RElem::ZERO,
                "1" => RElem::ONE,
                "u" => RElem::U,
                "u^2" => RElem::U2,
                _ => {
                    return Err(Error::Parse {
                        what: "ring element",
                        input: s.into(),
                    })
                }
            };
        }
        Ok(x)
    }
}

/// An element `alpha + beta*w` of `Rw`, packed as bits `alpha = 1`, `beta = 2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RwElem(u8);

impl RwElem {
    pub const ZERO: RwElem = RwElem(0);
    pub const ONE: RwElem = RwElem(1);
    pub const W: RwElem = RwElem(2);

    pub const fn new(alpha: bool, beta: bool) -> Self {
        RwElem(alpha as u8 | (beta as u8) << 1)
    }

    pub fn all() -> impl Iterator<Item = RwElem> {
        (0..4).map(RwElem)
    }

    pub const fn alpha(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn beta(self) -> bool {
        self.0 & 2 == 2
    }
}

impl Add for RwElem {
    type Output = RwElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: RwElem) -> RwElem {
        RwElem(self.0 ^ rhs.0)
    }
}

impl Mul for RwElem {
    type Output = RwElem;
    fn mul(self, rhs: RwElem) -> RwElem {
        let (a1, b1, a2, b2) = (self.alpha(), self.beta(), rhs.alpha(), rhs.beta());
        RwElem::new(a1 & a2, (a1 & b2) ^ (a2 & b1))
    }
}

impl Symbol for RwElem {
    const BITS: usize = 2;
    const ZERO: Self = RwElem::ZERO;
    const ONE: Self = RwElem::ONE;

    fn f2_basis() -> &'static [Self] {
        &[RwElem::ONE, RwElem::W]
    }

    fn to_bits(self) -> u8 {
        self.0
    }

    fn from_bits(bits: u8) -> Self {
        RwElem(bits & 3)
    }
}

impl fmt::Display for RwElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.alpha(), self.beta()) {
            (false, false) => f.write_str("0"),
            (true, false) => f.write_str("1"),
            (false, true) => f.write_str("w"),
            (true, true) => f.write_str("1+w"),
        }
    }
}

impl fmt::Debug for RwElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Euclidean inner product `sum x_i y_i`.
pub fn dot<S: Symbol>(x: &[S], y: &[S]) -> S {
    x.iter().zip(y).fold(S::ZERO, |acc, (&a, &b)| acc + a * b)
}

pub fn lee_weight(v: &[RElem]) -> u32 {
    v.iter().map(|x| x.lee_weight()).sum()
}

pub fn lee_distance(x: &[RElem], y: &[RElem]) -> u32 {
    x.iter().zip(y).map(|(&a, &b)| (a + b).lee_weight()).sum()
}

/// Right cyclic shift `(c0, ..., c_{n-1}) -> (c_{n-1}, c0, ..., c_{n-2})`.
pub fn shift<T: Clone>(v: &[T]) -> Vec<T> {
    let mut out = v.to_vec();
    out.rotate_right(1.min(v.len()));
    out
}

/// CRT applied coordinatewise.
pub fn crt_split_vec(v: &[RElem]) -> (Vec<F2>, Vec<RwElem>) {
    v.iter().map(|x| x.crt_split()).unzip()
}

pub fn crt_join_vec(f: &[F2], g: &[RwElem]) -> Vec<RElem> {
    f.iter()
        .zip(g)
        .map(|(&a, &b)| RElem::crt_join(a, b))
        .collect()
}

/// A binary word of length `3n` holding a Gray image in elementwise-triple
/// order: `(a0, a0+c0, b0, a1, a1+c1, b1, ...)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GrayWord(pub Vec<bool>);

impl GrayWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().filter(|&&b| b).count() as u32
    }

    pub fn distance(&self, other: &GrayWord) -> u32 {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count() as u32
    }

    /// Inner product over F2.
    pub fn dot(&self, other: &GrayWord) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .fold(false, |acc, (&a, &b)| acc ^ (a & b))
    }

    pub fn add(&self, other: &GrayWord) -> GrayWord {
        GrayWord(self.0.iter().zip(&other.0).map(|(&a, &b)| a ^ b).collect())
    }
}

impl fmt::Display for GrayWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Gray map `R^n -> F2^(3n)`.
pub fn gray_map(v: &[RElem]) -> GrayWord {
    GrayWord(v.iter().flat_map(|x| x.gray()).collect())
}

/// Inverse Gray map; the word length must be a multiple of 3.
pub fn gray_unmap(w: &GrayWord) -> Result<Vec<RElem>> {
    if !w.len().is_multiple_of(3) {
        return Err(Error::BadWordLength(w.len()));
    }
    Ok(w.0
        .chunks(3)
        .map(|t| RElem::from_bits(t[0] as u8 | (t[1] as u8) << 1 | (t[2] as u8) << 2))
        .collect())
}

/// A polynomial over `R`, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RPoly {
    coeffs: Vec<RElem>,
}

impl RPoly {
    pub fn new(mut coeffs: Vec<RElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[RElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Reduction modulo `x^n - 1`, as a length-`n` vector.
    pub fn cyclic_vector(&self, n: usize) -> Vec<RElem> {
        fold_cyclic(&self.coeffs, n)
    }
}

/// Folds a coefficient sequence onto `n` positions (`x^n = 1`).
pub fn fold_cyclic<S: Symbol>(coeffs: &[S], n: usize) -> Vec<S> {
    let mut out = vec![S::ZERO; n];
    for (i, &c) in coeffs.iter().enumerate() {
        out[i % n] = out[i % n] + c;
    }
    out
}

impl fmt::Display for RPoly {
    /// Ascending terms; coefficients other than 1 are parenthesized
    /// when they multiply a power of `x` or are compound: `(1+u+u^2)+x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let coef = c.to_string();
            let power = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            if *c == RElem::ONE {
                f.write_str(if i == 0 { "1" } else { &power })?;
            } else if i == 0 && !coef.contains('+') {
                f.write_str(&coef)?;
            } else {
                write!(f, "({coef}){power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RElem {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(r("1") + r("1"), RElem::ZERO);
        assert_eq!(r("u") + r("u^2"), r("u+u^2"));
        assert_eq!(r("1+u") + r("u+u^2"), r("1+u^2"));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(r("u") * r("u^2"), r("u"));
        assert_eq!(r("1+u^2") * r("u"), RElem::ZERO);
        assert_eq!(r("1+u+u^2") * r("1+u+u^2"), RElem::ONE);
        assert_eq!(r("u") * r("u") * r("u"), r("u"));
    }

    #[test]
    fn units_are_one_and_one_plus_u_plus_u2() {
        let units: Vec<RElem> = RElem::all().filter(|x| x.is_unit()).collect();
        assert_eq!(units, vec![r("1"), r("1+u+u^2")]);
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in RElem::all() {
            for y in RElem::all() {
                assert_eq!(x * y, y * x);
                for z in RElem::all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn rw_multiplication_examples() {
        let one_w = RwElem::ONE + RwElem::W;
        assert_eq!(RwElem::W * RwElem::W, RwElem::ZERO);
        assert_eq!(one_w * one_w, RwElem::ONE);
        assert_eq!(one_w * RwElem::W, RwElem::W);
    }

    #[test]
    fn lee_weight_table() {
        let table = [
            ("0", 0),
            ("1", 2),
            ("u", 1),
            ("u^2", 1),
            ("1+u", 3),
            ("1+u^2", 1),
            ("u+u^2", 2),
            ("1+u+u^2", 2),
        ];
        for (x, w) in table {
            assert_eq!(r(x).lee_weight(), w, "{x}");
        }
    }

    #[test]
    fn gray_examples() {
        assert_eq!(gray_map(&[r("1+u^2")]).0, [true, false, false]);
        assert_eq!(gray_map(&[RElem::ZERO]).0, [false, false, false]);
        assert_eq!(gray_map(&[r("u+u^2")]).0, [false, true, true]);
        for x in RElem::all() {
            assert_eq!(gray_map(&[x]).weight(), x.lee_weight());
            assert_eq!(RElem::from_bits(x.to_bits()), x);
        }
    }

    #[test]
    fn gray_is_linear() {
        for x in RElem::all() {
            for y in RElem::all() {
                assert_eq!(gray_map(&[x + y]), gray_map(&[x]).add(&gray_map(&[y])));
            }
        }
    }

    #[test]
    fn crt_examples() {
        assert_eq!(RElem::ONE.crt_split(), (F2(true), RwElem::ONE));
        assert_eq!(r("u").crt_split(), (F2(false), RwElem::ONE + RwElem::W));
        assert_eq!(r("u+u^2").crt_split(), (F2(false), RwElem::W));
        assert_eq!(RElem::crt_join(F2(true), RwElem::ONE), RElem::ONE);
        assert_eq!(RElem::crt_join(F2(false), RwElem::W), r("u+u^2"));
        assert_eq!(RElem::crt_join(F2(true), RwElem::W), r("1+u"));
    }

    #[test]
    fn crt_is_ring_isomorphism() {
        for x in RElem::all() {
            let (f, g) = x.crt_split();
            assert_eq!(RElem::crt_join(f, g), x);
        }
        for a in [F2(false), F2(true)] {
            for g in RwElem::all() {
                assert_eq!(RElem::crt_join(a, g).crt_split(), (a, g));
            }
        }
        for x in RElem::all() {
            for y in RElem::all() {
                let ((fx, gx), (fy, gy)) = (x.crt_split(), y.crt_split());
                assert_eq!((x + y).crt_split(), (fx + fy, gx + gy));
                assert_eq!((x * y).crt_split(), (fx * fy, gx * gy));
            }
        }
    }

    #[test]
    fn idempotents() {
        assert_eq!(RElem::E1 * RElem::E1, RElem::E1);
        assert_eq!(RElem::E2 * RElem::E2, RElem::E2);
        assert_eq!(RElem::E1 * RElem::E2, RElem::ZERO);
        assert_eq!(RElem::E1 + RElem::E2, RElem::ONE);
        assert_eq!(RElem::embed_rw(RwElem::ONE), RElem::U2);
        assert_eq!(RElem::embed_rw(RwElem::W), r("u+u^2"));
    }

    #[test]
    fn gray_preserves_orthogonality_at_length_one() {
        for x in RElem::all() {
            for y in RElem::all() {
                if (x * y).is_zero() {
                    assert!(!gray_map(&[x]).dot(&gray_map(&[y])), "{x} . {y}");
                }
            }
        }
    }

    #[test]
    fn element_text_round_trips() {
        for x in RElem::all() {
            assert_eq!(r(&x.to_string()), x);
        }
        assert_eq!(r("u^2 + 1"), r("1+u^2"));
        assert!("v".parse::<RElem>().is_err());
        assert!("".parse::<RElem>().is_err());
    }

    #[test]
    fn shift_examples() {
        let v = vec![r("1"), r("u"), RElem::ZERO];
        assert_eq!(shift(&v), vec![RElem::ZERO, r("1"), r("u")]);
        let mut w = v.clone();
        for _ in 0..3 {
            w = shift(&w);
        }
        assert_eq!(w, v);
        let k = vec![r("u"); 4];
        assert_eq!(shift(&k), k);
        assert!(shift::<RElem>(&[]).is_empty());
    }

    #[test]
    fn rpoly_display() {
        let g = RPoly::new(vec![r("1+u+u^2"), RElem::ONE]);
        assert_eq!(g.to_string(), "(1+u+u^2)+x");
        let h = RPoly::new(vec![r("u"), RElem::ZERO, r("u^2"), RElem::ZERO]);
        assert_eq!(h.to_string(), "u+(u^2)x^2");
        assert_eq!(RPoly::new(vec![RElem::ZERO]).to_string(), "0");
    }
}
