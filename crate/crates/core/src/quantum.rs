//! CSS quantum codes from dual-containing cyclic codes over `R`.
//!
//! A code `C` over `R` with `C^perp ⊆ C` has a binary Gray image of length
//! `3n` and dimension `log2 |C|` that contains its own binary dual, so the
//! CSS construction yields `[[3n, 2 log2|C| - 3n, d_L(C)]]`.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{
    CodeSpec, ContainmentEvidence, Distance, DEFAULT_BUDGET, DEFAULT_MAX_COMBINATION,
};
use crate::error::{Error, Result};
use crate::poly::divisors_xn1;

/// `[[length, dimension, distance]]`
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuantumParams {
    pub length: usize,
    pub dimension: usize,
    pub distance: Distance,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bound = if self.distance.exact { "" } else { "<=" };
        write!(
            f,
            "[[{},{},{bound}{}]]",
            self.length, self.dimension, self.distance.value
        )
    }
}

/// Distance evaluation settings.
#[derive(Clone, Copy, Debug)]
pub struct DistanceOptions {
    /// Exact enumeration when `log2 |C|` is at most this.
    pub budget: usize,
    /// Basis rows combined per candidate beyond the budget.
    pub max_combination: usize,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            max_combination: DEFAULT_MAX_COMBINATION,
        }
    }
}

/// `(3n, 2 log2|C| - 3n, d_L)` computed without checking that the CSS
/// hypothesis holds. The dimension is negative when `|C|^2 < 2^(3n)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FormulaParams {
    pub length: usize,
    pub dimension: i64,
    pub distance: Distance,
}

impl fmt::Display for FormulaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bound = if self.distance.exact { "" } else { "<=" };
        write!(
            f,
            "[[{},{},{bound}{}]]",
            self.length, self.dimension, self.distance.value
        )
    }
}

pub fn formula_params(spec: &CodeSpec, opts: DistanceOptions) -> Result<FormulaParams> {
    let m = spec.code().size_log2();
    let distance = spec
        .code()
        .min_lee_distance(opts.budget, opts.max_combination)?;
    Ok(FormulaParams {
        length: 3 * spec.n(),
        dimension: 2 * m as i64 - 3 * spec.n() as i64,
        distance,
    })
}

/// CSS parameters of a dual-containing spec.
pub fn css_params(spec: &CodeSpec, opts: DistanceOptions) -> Result<QuantumParams> {
    if !spec.is_dual_containing()?.verdict() {
        return Err(Error::NotDualContaining);
    }
    params_unchecked(spec, opts)
}

fn params_unchecked(spec: &CodeSpec, opts: DistanceOptions) -> Result<QuantumParams> {
    let code = spec.code();
    let m = code.size_log2();
    let n3 = 3 * spec.n();
    debug_assert!(2 * m >= n3);
    Ok(QuantumParams {
        length: n3,
        dimension: 2 * m - n3,
        distance: code.min_lee_distance(opts.budget, opts.max_combination)?,
    })
}

/// A dual-containing spec with its parameters.
#[derive(Clone, Debug)]
pub struct SearchRecord {
    pub spec: CodeSpec,
    pub params: QuantumParams,
    pub evidence: ContainmentEvidence,
    pub elapsed: Duration,
}

impl SearchRecord {
    /// Recomputes containment and parameters from scratch.
    pub fn reverify(&self, opts: DistanceOptions) -> Result<bool> {
        let fresh = CodeSpec::new(
            self.spec.n(),
            self.spec.g1().clone(),
            self.spec.a1().clone(),
            self.spec.g2().clone(),
        )?;
        let evidence = fresh.is_dual_containing()?;
        Ok(evidence.verdict()
            && evidence == self.evidence
            && css_params(&fresh, opts)? == self.params)
    }
}

/// Search settings.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub distance: DistanceOptions,
    /// Largest length accepted.
    pub max_n: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            distance: DistanceOptions::default(),
            max_n: 63,
        }
    }
}

/// Every generator triple `(g1, a1, g2)` of length `n` with `a1 | g1`.
pub fn all_specs(n: usize) -> Result<Vec<CodeSpec>> {
    let divs = divisors_xn1(n)?;
    let mut specs = Vec::new();
    for g1 in &divs {
        for a1 in &divs {
            if !a1.divides(g1)? {
                continue;
            }
            for g2 in &divs {
                specs.push(CodeSpec::new(n, g1.clone(), a1.clone(), g2.clone())?);
            }
        }
    }
    Ok(specs)
}

/// Evaluates every triple at length `n` and returns the dual-containing
/// codes, one record per distinct code (the least spec text represents
/// duplicates), sorted by dimension then distance, both descending, then
/// by spec text.
pub fn search_quantum(n: usize, opts: SearchOptions) -> Result<Vec<SearchRecord>> {
    if n > opts.max_n {
        return Err(Error::LengthTooLarge { n, max: opts.max_n });
    }
    let specs = all_specs(n)?;
    let evaluated: Vec<Option<SearchRecord>> = specs
        .into_par_iter()
        .map(|spec| -> Result<Option<SearchRecord>> {
            let start = Instant::now();
            let evidence = spec.is_dual_containing()?;
            if !evidence.verdict() {
                return Ok(None);
            }
            let params = params_unchecked(&spec, opts.distance)?;
            Ok(Some(SearchRecord {
                spec,
                params,
                evidence,
                elapsed: start.elapsed(),
            }))
        })
        .collect::<Result<_>>()?;

    let mut by_code: HashMap<_, SearchRecord> = HashMap::new();
    for rec in evaluated.into_iter().flatten() {
        let key = rec.spec.code();
        match by_code.get(&key) {
            Some(kept) if kept.spec.to_string() <= rec.spec.to_string() => {}
            _ => {
                by_code.insert(key, rec);
            }
        }
    }
    let mut records: Vec<SearchRecord> = by_code.into_values().collect();
    records.sort_by_cached_key(|r| {
        (
            Reverse(r.params.dimension),
            Reverse(r.params.distance.value),
            r.spec.to_string(),
        )
    });
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, g1: &str, a1: &str, g2: &str) -> CodeSpec {
        CodeSpec::parse(n, g1, a1, g2).unwrap()
    }

    #[test]
    fn formula_reproduces_printed_numbers() {
        let opts = DistanceOptions::default();
        let ex1 = formula_params(&spec(3, "x+1", "1", "x+1"), opts).unwrap();
        assert_eq!(ex1.to_string(), "[[9,5,2]]");
        let ex2 = formula_params(&spec(5, "x+1", "1", "x+1"), opts).unwrap();
        assert_eq!(ex2.to_string(), "[[15,11,2]]");
        let second = formula_params(&spec(3, "x+1", "1", "x^2+x+1"), opts).unwrap();
        assert_eq!(second.to_string(), "[[9,3,2]]");
    }

    #[test]
    fn css_requires_containment() {
        let opts = DistanceOptions::default();
        assert_eq!(
            css_params(&spec(3, "x+1", "1", "x+1"), opts),
            Err(Error::NotDualContaining)
        );
        let q = css_params(&spec(7, "x+1", "1", "x^3+x+1"), opts).unwrap();
        assert_eq!((q.length, q.dimension), (21, 2 * 17 - 21));
    }

    #[test]
    fn length_one_search() {
        let recs = search_quantum(1, SearchOptions::default()).unwrap();
        let whole = recs
            .iter()
            .find(|r| r.spec.to_string() == "n=1 g1=1 a1=1 g2=1")
            .unwrap();
        assert_eq!(whole.params.to_string(), "[[3,3,1]]");
        assert!(recs
            .iter()
            .all(|r| r.reverify(DistanceOptions::default()).unwrap()));
    }

    #[test]
    fn guards() {
        assert!(matches!(
            search_quantum(2, SearchOptions::default()),
            Err(Error::EvenLength(2))
        ));
        let opts = SearchOptions {
            max_n: 5,
            ..Default::default()
        };
        assert!(matches!(
            search_quantum(7, opts),
            Err(Error::LengthTooLarge { .. })
        ));
    }

    #[test]
    fn parity_of_dimension() {
        for n in [3, 5, 7] {
            for r in search_quantum(n, SearchOptions::default()).unwrap() {
                assert_eq!(r.params.dimension % 2, (3 * n) % 2);
                assert!(r.params.dimension <= 3 * n);
                assert!(r.params.distance.value >= 1);
            }
        }
    }
}
