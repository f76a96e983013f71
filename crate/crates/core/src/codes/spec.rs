use std::fmt;

use serde::{Deserialize, Serialize};

use super::LinearCode;
use crate::error::{Error, Result};
use crate::poly::BinPoly;
use crate::ring::{fold_cyclic, RElem, RPoly, RwElem, F2};

/// A cyclic code over `R` of odd length `n`, given by its components under
/// `R = F2 x Rw`: the binary code `<g2>` and the `Rw` code `<g1 + w a1>`,
/// with `a1 | g1 | x^n + 1` and `g2 | x^n + 1`.
///
/// The zero ideal is written with the polynomial `x^n + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CodeSpec {
    n: usize,
    g1: BinPoly,
    a1: BinPoly,
    g2: BinPoly,
}

impl CodeSpec {
    /// Largest supported length.
    pub const MAX_LEN: usize = 64;

    pub fn new(n: usize, g1: BinPoly, a1: BinPoly, g2: BinPoly) -> Result<Self> {
        if n == 0 || n.is_multiple_of(2) {
            return Err(Error::EvenLength(n));
        }
        if n > Self::MAX_LEN {
            return Err(Error::LengthTooLarge {
                n,
                max: Self::MAX_LEN,
            });
        }
        for (name, p) in [("g1", &g1), ("a1", &a1), ("g2", &g2)] {
            if p.is_zero() {
                return Err(Error::InvalidSpec(format!(
                    "{name} is the zero polynomial (write x^{n}+1 for the zero ideal)"
                )));
            }
        }
        let xn1 = BinPoly::xn_plus_one(n);
        if !a1.divides(&g1)? {
            return Err(Error::InvalidSpec(format!(
                "a1 = {a1} does not divide g1 = {g1}"
            )));
        }
        if !g1.divides(&xn1)? {
            return Err(Error::InvalidSpec(format!(
                "g1 = {g1} does not divide x^{n}+1"
            )));
        }
        if !g2.divides(&xn1)? {
            return Err(Error::InvalidSpec(format!(
                "g2 = {g2} does not divide x^{n}+1"
            )));
        }
        Ok(Self { n, g1, a1, g2 })
    }

    /// Parses the three polynomials from text.
    pub fn parse(n: usize, g1: &str, a1: &str, g2: &str) -> Result<Self> {
        Self::new(n, g1.parse()?, a1.parse()?, g2.parse()?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g1(&self) -> &BinPoly {
        &self.g1
    }

    pub fn a1(&self) -> &BinPoly {
        &self.a1
    }

    pub fn g2(&self) -> &BinPoly {
        &self.g2
    }

    fn deg(p: &BinPoly) -> usize {
        p.degree().unwrap_or(0)
    }

    /// `log2 |C| = 3n - deg g1 - deg a1 - deg g2`
    pub fn size_log2(&self) -> usize {
        3 * self.n - Self::deg(&self.g1) - Self::deg(&self.a1) - Self::deg(&self.g2)
    }

    /// `log2 |C^perp| = deg g1 + deg a1 + deg g2`
    pub fn dual_size_log2(&self) -> usize {
        Self::deg(&self.g1) + Self::deg(&self.a1) + Self::deg(&self.g2)
    }

    /// The single generator `g = (1+u^2) g2 + u^2 g1 + (u+u^2) a1`, reduced
    /// modulo `x^n - 1`.
    ///
    /// `1+u^2` and `u^2` are the orthogonal idempotents of the two CRT
    /// components and `u+u^2` is the image of `w`.
    pub fn generator_poly(&self) -> RPoly {
        let len = [&self.g1, &self.a1, &self.g2]
            .iter()
            .map(|p| Self::deg(p) + 1)
            .max()
            .unwrap_or(1);
        let coeffs: Vec<RElem> = (0..len)
            .map(|i| {
                let pick = |p: &BinPoly, e: RElem| if p.coeff(i) { e } else { RElem::ZERO };
                pick(&self.g2, RElem::E1)
                    + pick(&self.g1, RElem::E2)
                    + pick(&self.a1, RElem::embed_rw(RwElem::W))
            })
            .collect();
        RPoly::new(fold_cyclic(&coeffs, self.n))
    }

    /// The code `<g>` as an F2 span of `x^i g`, `u x^i g`, `u^2 x^i g`.
    pub fn code(&self) -> LinearCode<RElem> {
        LinearCode::cyclic_ideal(self.n, &[self.generator_poly().coeffs().to_vec()])
            .expect("length checked at construction")
    }

    /// Binary component `<g2>`.
    pub fn binary_component(&self) -> LinearCode<F2> {
        let g: Vec<F2> = (0..=Self::deg(&self.g2))
            .map(|i| F2(self.g2.coeff(i)))
            .collect();
        LinearCode::cyclic_ideal(self.n, &[g]).expect("length checked at construction")
    }

    /// `Rw` component `<g1 + w a1>`.
    pub fn rw_component(&self) -> LinearCode<RwElem> {
        let len = Self::deg(&self.g1).max(Self::deg(&self.a1)) + 1;
        let g: Vec<RwElem> = (0..len)
            .map(|i| RwElem::new(self.g1.coeff(i), self.a1.coeff(i)))
            .collect();
        LinearCode::cyclic_ideal(self.n, &[g]).expect("length checked at construction")
    }

    /// Checks the closed-form dual generator `ĥ2 + r̂1 u + (ĥ2 + r̂1) u^2`
    /// (`h2 = (x^n+1)/g2`, `r1 = (x^n+1)/g1`) against the dual obtained by
    /// linear algebra.
    ///
    /// Under CRT that formula is `(ĥ2, w r̂1)`, whose `Rw` part misses the
    /// residue `ĥa`, `ha = (x^n+1)/a1`; it therefore agrees with the true
    /// dual exactly when `a1 = 1`. The generator that always agrees is
    /// returned as well: `(1+u^2) ĥ2 + u^2 ĥa + (u+u^2) r̂1`.
    pub fn dual_generator_formula(&self) -> Result<DualFormulaCheck> {
        let xn1 = BinPoly::xn_plus_one(self.n);
        let h2 = xn1.exact_div(&self.g2)?.reciprocal()?;
        let r1 = xn1.exact_div(&self.g1)?.reciprocal()?;
        let ha = xn1.exact_div(&self.a1)?.reciprocal()?;
        let truth = self.code().dual();

        let closed_form = self.r_poly(|i| {
            let (h, r) = (h2.coeff(i), r1.coeff(i));
            RElem::new(h, r, h ^ r)
        });
        let full = self.r_poly(|i| {
            let mut x = RElem::ZERO;
            if h2.coeff(i) {
                x = x + RElem::E1;
            }
            if ha.coeff(i) {
                x = x + RElem::E2;
            }
            if r1.coeff(i) {
                x = x + RElem::embed_rw(RwElem::W);
            }
            x
        });
        let span = |g: &RPoly| {
            LinearCode::<RElem>::cyclic_ideal(self.n, &[g.coeffs().to_vec()])
                .expect("length checked at construction")
        };
        Ok(DualFormulaCheck {
            matches_dual: span(&closed_form) == truth,
            generator: closed_form,
            full_matches_dual: span(&full) == truth,
            full_generator: full,
        })
    }

    fn r_poly(&self, coeff: impl Fn(usize) -> RElem) -> RPoly {
        let coeffs: Vec<RElem> = (0..=self.n).map(coeff).collect();
        RPoly::new(fold_cyclic(&coeffs, self.n))
    }

    /// Decides `C^perp ⊆ C` three ways and fails if they disagree:
    ///
    /// 1. polynomial: `x^n+1 ≡ 0 (mod g2 ĝ2)` for the binary component and
    ///    `g1 | ĥa` (`ha = (x^n+1)/a1`) for the `Rw` component;
    /// 2. componentwise: basis checks of both CRT components;
    /// 3. direct: every dual basis vector over `R` lies in `C`.
    pub fn is_dual_containing(&self) -> Result<ContainmentEvidence> {
        let evidence = self.containment_evidence()?;
        if !evidence.unanimous() {
            return Err(Error::MethodDisagreement(format!("{self}: {evidence:?}")));
        }
        Ok(evidence)
    }

    /// The verdicts behind [`CodeSpec::is_dual_containing`], returned even
    /// when they disagree.
    pub fn containment_evidence(&self) -> Result<ContainmentEvidence> {
        let xn1 = BinPoly::xn_plus_one(self.n);
        let binary_criterion = binary_criterion_holds(&self.g2, self.n)?;
        let rw = self.rw_component();
        let rw_basis = rw.is_dual_containing();
        let ha = xn1.exact_div(&self.a1)?.reciprocal()?;
        let rw_polynomial = self.g1.divides(&ha.rem(&xn1)?)?;

        let binary_basis = self.binary_component().is_dual_containing();
        let componentwise = binary_basis && rw_basis;
        let direct = self.code().is_dual_containing();

        // sufficient condition: binary part as above and Rw part self-dual
        let f1 = self.a1.clone();
        let f2 = self.g1.exact_div(&self.a1)?;
        let f3 = xn1.exact_div(&self.g1)?;
        let self_dual_rw = is_self_dual(&f1, &f2, &f3, self.n)?;

        let evidence = ContainmentEvidence {
            polynomial: binary_criterion && rw_polynomial,
            componentwise,
            direct,
            binary_criterion,
            rw_basis,
            rw_polynomial,
            binary_with_self_dual_rw: binary_criterion && self_dual_rw,
        };
        Ok(evidence)
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} g1={} a1={} g2={}",
            self.n, self.g1, self.a1, self.g2
        )
    }
}

/// Result of [`CodeSpec::dual_generator_formula`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualFormulaCheck {
    /// `ĥ2 + r̂1 u + (ĥ2 + r̂1) u^2` reduced modulo `x^n - 1`.
    pub generator: RPoly,
    /// Whether `<generator>` equals the dual.
    pub matches_dual: bool,
    /// `(1+u^2) ĥ2 + u^2 ĥa + (u+u^2) r̂1`.
    pub full_generator: RPoly,
    pub full_matches_dual: bool,
}

/// Verdicts gathered by [`CodeSpec::is_dual_containing`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ContainmentEvidence {
    /// Method 1: polynomial criteria on both components.
    pub polynomial: bool,
    /// Method 2: basis checks on both CRT components.
    pub componentwise: bool,
    /// Method 3: basis check over `R`.
    pub direct: bool,
    /// `x^n + 1 ≡ 0 (mod g2 ĝ2)`
    pub binary_criterion: bool,
    pub rw_basis: bool,
    /// `g1 | ĥa` with `ha = (x^n+1)/a1`
    pub rw_polynomial: bool,
    /// Binary criterion together with self-duality of the `Rw` component
    /// (`a1 = f̂3`, `g1/a1` palindromic, `f3 = (x^n+1)/g1`). Sufficient for
    /// containment, not necessary; informational only.
    pub binary_with_self_dual_rw: bool,
}

impl ContainmentEvidence {
    pub fn verdict(&self) -> bool {
        self.direct
    }

    pub fn unanimous(&self) -> bool {
        self.polynomial == self.componentwise
            && self.componentwise == self.direct
            && self.rw_basis == self.rw_polynomial
    }
}

/// Binary cyclic code `<g>` of length `n` contains its dual iff
/// `x^n + 1 ≡ 0 (mod g ĝ)`.
pub fn binary_criterion_holds(g: &BinPoly, n: usize) -> Result<bool> {
    let gg = g * &g.reciprocal()?;
    BinPoly::xn_plus_one(n).rem(&gg).map(|r| r.is_zero())
}

/// Self-duality of the `Rw` code `(f1 f2, w f1 f3)` with
/// `f1 f2 f3 = x^n + 1`: holds iff `f1 = f̂3` and `f2 = f̂2`.
pub fn is_self_dual(f1: &BinPoly, f2: &BinPoly, f3: &BinPoly, n: usize) -> Result<bool> {
    let product = &(f1 * f2) * f3;
    if product != BinPoly::xn_plus_one(n) {
        return Err(Error::BadFactorization {
            product: product.to_string(),
            n,
        });
    }
    Ok(*f1 == f3.reciprocal()? && f2.is_palindromic())
}

/// The `Rw` code generated by `f1 f2` and `w f1 f3`.
pub fn rw_code_from_factors(
    f1: &BinPoly,
    f2: &BinPoly,
    f3: &BinPoly,
    n: usize,
) -> Result<LinearCode<RwElem>> {
    let residue = f1 * f2;
    let torsion = f1 * f3;
    let to_rw = |p: &BinPoly, e: RwElem| -> Vec<RwElem> {
        (0..=p.degree().unwrap_or(0))
            .map(|i| if p.coeff(i) { e } else { RwElem::ZERO })
            .collect()
    };
    LinearCode::cyclic_ideal(
        n,
        &[to_rw(&residue, RwElem::ONE), to_rw(&torsion, RwElem::W)],
    )
}
