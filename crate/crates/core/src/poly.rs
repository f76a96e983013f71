//! Polynomials over F2 and the factorization of `x^n + 1` for odd `n`.
//!
//! Coefficients are bit-packed into `u64` limbs, bit `i` of the packed
//! sequence being the coefficient of `x^i`. The representation is kept
//! normalized: no trailing zero limbs, so the zero polynomial has no limbs.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A polynomial over F2.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinPoly {
    limbs: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x`
    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut p = Self::zero();
        p.flip(k);
        p
    }

    /// `x^n + 1`
    pub fn xn_plus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.flip(0);
        p
    }

    /// Builds a polynomial from ascending coefficients (index `i` is the
    /// coefficient of `x^i`).
    pub fn from_coeffs<I: IntoIterator<Item = bool>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            if c {
                p.flip(i);
            }
        }
        p
    }

    /// Builds a polynomial whose coefficients are the bits of `bits`.
    pub fn from_bits(bits: u64) -> Self {
        let mut p = Self { limbs: vec![bits] };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some(64 * (self.limbs.len() - 1) + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|limb| (limb >> (i % 64)) & 1 == 1)
    }

    /// Ascending coefficient sequence, empty for zero.
    pub fn coeffs(&self) -> Vec<bool> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    fn flip(&mut self, i: usize) {
        let limb = i / 64;
        if self.limbs.len() <= limb {
            self.limbs.resize(limb + 1, 0);
        }
        self.limbs[limb] ^= 1 << (i % 64);
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    fn xor_shifted(&mut self, other: &BinPoly, shift: usize) {
        let limb_shift = shift / 64;
        let bit_shift = shift % 64;
        let needed = other.limbs.len() + limb_shift + 1;
        if self.limbs.len() < needed {
            self.limbs.resize(needed, 0);
        }
        for (i, &limb) in other.limbs.iter().enumerate() {
            self.limbs[i + limb_shift] ^= limb << bit_shift;
            if bit_shift != 0 {
                self.limbs[i + limb_shift + 1] ^= limb >> (64 - bit_shift);
            }
        }
        self.normalize();
    }

    /// Carry-less product.
    pub fn mul(&self, other: &BinPoly) -> BinPoly {
        let mut out = BinPoly::zero();
        let Some(d) = other.degree() else {
            return out;
        };
        for i in 0..=d {
            if other.coeff(i) {
                out.xor_shifted(self, i);
            }
        }
        out
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = BinPoly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            quot.flip(dr - dd);
            rem.xor_shifted(divisor, dr - dd);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &BinPoly) -> Result<BinPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// True when `self` divides `other` (`other` may be zero).
    pub fn divides(&self, other: &BinPoly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Exact quotient; fails if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &BinPoly) -> Result<BinPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible {
                divisor: divisor.to_string(),
                dividend: self.to_string(),
            });
        }
        Ok(q)
    }

    pub fn gcd(&self, other: &BinPoly) -> Result<BinPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Reciprocal `x^deg(h) h(1/x)`: coefficients reversed, then renormalized.
    pub fn reciprocal(&self) -> Result<BinPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial("reciprocal"))?;
        Ok(BinPoly::from_coeffs((0..=d).map(|i| self.coeff(d - i))))
    }

    /// Equal to its own reciprocal.
    pub fn is_palindromic(&self) -> bool {
        self.reciprocal().is_ok_and(|r| &r == self)
    }

    /// `self^2 mod m`
    fn square_mod(&self, m: &BinPoly) -> Result<BinPoly> {
        self.mul(self).rem(m)
    }

    /// Irreducibility by trial division with every polynomial of degree at
    /// most half the degree. Only meant for small degrees.
    pub fn is_irreducible_by_trial(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        for bits in 2u64..(1u64 << (d / 2 + 1)) {
            let q = BinPoly::from_bits(bits);
            if q.degree().unwrap_or(0) > d / 2 {
                continue;
            }
            if q.divides(self).unwrap_or(false) {
                return false;
            }
        }
        true
    }
}

impl Ord for BinPoly {
    /// Orders by degree, then by coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for BinPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &BinPoly {
    type Output = BinPoly;
    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = self.clone();
        out.xor_shifted(rhs, 0);
        out
    }
}

impl Mul for &BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: &BinPoly) -> BinPoly {
        BinPoly::mul(self, rhs)
    }
}

impl fmt::Display for BinPoly {
    /// Algebraic form, highest degree first: `x^2+x+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=d).rev().filter(|&i| self.coeff(i)) {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl BinPoly {
    /// Ascending binary coefficient string, `"1101"` for `x^3+x+1`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs()
            .iter()
            .map(|&c| if c { '1' } else { '0' })
            .collect()
    }
}

impl FromStr for BinPoly {
    type Err = Error;

    /// Accepts algebraic form (`x^3+x+1`, terms in any order) or an
    /// ascending coefficient string made only of `0`/`1` (`1101`).
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse {
            what: "polynomial",
            input: s.to_string(),
        };
        if text.is_empty() {
            return Err(bad());
        }
        if text.chars().all(|c| c == '0' || c == '1') {
            return Ok(BinPoly::from_coeffs(text.chars().map(|c| c == '1')));
        }
        let mut p = BinPoly::zero();
        for term in text.split('+') {
            let exp = match term {
                "1" => 0,
                "0" => continue,
                "x" => 1,
                _ => term
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(bad)?,
            };
            p.flip(exp);
        }
        Ok(p)
    }
}

fn check_odd(n: usize) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    Ok(())
}

/// 2-cyclotomic cosets modulo `n`, each sorted, ordered by representative.
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<Vec<usize>>> {
    check_odd(n)?;
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            coset.push(j);
            j = (2 * j) % n;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Splits `f`, a product of distinct irreducibles all of degree `d`, into
/// its factors. Candidates `a` run deterministically over all nonconstant
/// polynomials of degree below `deg f`; the trace
/// `a + a^2 + ... + a^(2^(d-1)) mod f` separates factors for some `a`.
fn equal_degree_split(f: &BinPoly, d: usize, out: &mut Vec<BinPoly>) -> Result<()> {
    let deg = f.degree().unwrap_or(0);
    if deg == d {
        out.push(f.clone());
        return Ok(());
    }
    let mut candidate = 2u64;
    loop {
        let a = BinPoly::from_bits(candidate).rem(f)?;
        candidate += 1;
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut trace = a.clone();
        let mut power = a;
        for _ in 1..d {
            power = power.square_mod(f)?;
            trace = &trace + &power;
        }
        if trace.is_zero() {
            continue;
        }
        let g = f.gcd(&trace)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < deg {
            equal_degree_split(&g, d, out)?;
            equal_degree_split(&f.exact_div(&g)?, d, out)?;
            return Ok(());
        }
    }
}

/// Irreducible factors of `x^n + 1` over F2 for odd `n`, sorted by
/// `(degree, coefficients)`.
///
/// Coset sizes fix the multiset of factor degrees; distinct-degree
/// factorization groups the factors and trace splitting separates them.
pub fn factor_xn_minus_1(n: usize) -> Result<Vec<BinPoly>> {
    let cosets = cyclotomic_cosets(n)?;
    let mut expected: Vec<usize> = cosets.iter().map(Vec::len).collect();
    expected.sort_unstable();

    let mut rest = BinPoly::xn_plus_one(n);
    let mut factors = Vec::new();
    let max_degree = *expected.last().unwrap_or(&1);
    // x^(2^d) mod rest, updated by squaring
    let mut frob = BinPoly::x();
    for d in 1..=max_degree {
        if rest.degree() == Some(0) {
            break;
        }
        frob = frob.square_mod(&rest)?;
        let g = rest.gcd(&(&frob + &BinPoly::x()))?;
        if g.degree().unwrap_or(0) > 0 {
            equal_degree_split(&g, d, &mut factors)?;
            rest = rest.exact_div(&g)?;
            frob = frob.rem(&rest)?;
        }
    }
    factors.sort();

    let mut got: Vec<usize> = factors.iter().filter_map(BinPoly::degree).collect();
    got.sort_unstable();
    debug_assert_eq!(got, expected, "factor degrees disagree with coset sizes");
    Ok(factors)
}

/// All monic divisors of `x^n + 1` as subset products of its irreducible
/// factors, sorted.
pub fn divisors_xn1(n: usize) -> Result<Vec<BinPoly>> {
    let factors = factor_xn_minus_1(n)?;
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << factors.len()) {
        let p = factors
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i) & 1 == 1)
            .fold(BinPoly::one(), |acc, (_, f)| &acc * f);
        out.insert(p);
    }
    Ok(out.into_iter().collect())
}
