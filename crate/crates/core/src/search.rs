//! Exhaustive determination of the shortest length admitting a minimal code,
//! searching distinct unit-orbit column representatives in ascending size.
//!
//! Restricting to orbit representatives loses nothing: scaling a column by a
//! unit preserves every orthogonality relation, and duplicate columns never
//! change a span.

use itertools::Itertools;
use serde::Serialize;

use crate::code::{is_minimal_code, ColumnMultiset, LinearCode};
use crate::error::{Error, Result};
use crate::linalg::{is_linearly_independent, ZnVec};
use crate::perp::classify_root_word;
use crate::ring::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConstraints {
    /// For k = 1: every candidate set must contain a unit of Z_n.
    pub require_unit_column: bool,
    /// Restrict the candidate pool to root words.
    pub root_words_only: bool,
}

impl Default for SearchConstraints {
    fn default() -> Self {
        SearchConstraints {
            require_unit_column: true,
            root_words_only: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub n: u64,
    pub k: usize,
    pub m_cap: usize,
    /// None when the cap was exhausted without a witness.
    pub m_min: Option<usize>,
    pub witness: Option<Vec<Vec<u64>>>,
    /// Size of the candidate column pool.
    pub candidates: usize,
    pub subsets_examined: u64,
    pub subsets_pruned: u64,
    pub constraints: SearchConstraints,
}

fn contains_unit_column(ring: &RingSpec, subset: &[&ZnVec]) -> bool {
    subset.iter().any(|c| c.entries().iter().any(|&e| ring.is_unit(e)))
}

/// Smallest m <= m_cap for which some m distinct candidate columns give a
/// minimal code, with the lexicographically first witness at that size.
pub fn search_m_min(
    ring: &RingSpec,
    k: usize,
    m_cap: usize,
    constraints: SearchConstraints,
    threshold: u128,
) -> Result<SearchReport> {
    if m_cap < k {
        return Err(Error::Unsupported(format!(
            "search cap {m_cap} is below the dimension {k}"
        )));
    }
    let mut pool = crate::perp::root_words_mod_units(ring, k, threshold)?;
    if !constraints.root_words_only {
        let mut rest: Vec<ZnVec> = crate::code::unit_orbit_representatives(ring, k, threshold)?
            .into_iter()
            .filter(|v| !classify_root_word(v).is_root)
            .collect();
        pool.append(&mut rest);
        pool.sort();
    }
    let mut subsets_examined = 0u64;
    let mut subsets_pruned = 0u64;
    for m in k..=m_cap.min(pool.len()) {
        for subset in pool.iter().combinations(m) {
            if k == 1 && constraints.require_unit_column && !contains_unit_column(ring, &subset) {
                subsets_pruned += 1;
                continue;
            }
            let owned: Vec<ZnVec> = subset.iter().map(|v| (**v).clone()).collect();
            if !subset
                .iter()
                .combinations(k)
                .any(|sub| is_linearly_independent(&sub.iter().map(|v| (***v).clone()).collect::<Vec<_>>()))
            {
                subsets_pruned += 1;
                continue;
            }
            subsets_examined += 1;
            let lam = ColumnMultiset::new(ring.clone(), k, owned)?;
            let code = LinearCode::new(lam)?;
            if is_minimal_code(&code, threshold, false)?.verdict {
                return Ok(SearchReport {
                    n: ring.n(),
                    k,
                    m_cap,
                    m_min: Some(m),
                    witness: Some(
                        code.lambda()
                            .columns()
                            .iter()
                            .map(|c| c.entries().to_vec())
                            .collect(),
                    ),
                    candidates: pool.len(),
                    subsets_examined,
                    subsets_pruned,
                    constraints,
                });
            }
        }
    }
    Ok(SearchReport {
        n: ring.n(),
        k,
        m_cap,
        m_min: None,
        witness: None,
        candidates: pool.len(),
        subsets_examined,
        subsets_pruned,
        constraints,
    })
}

/// Verifies that appending columns keeps minimality: for each extra length up
/// to `extra` past the witness, pads with copies of the witness's first
/// column and re-checks the code.
pub fn monotonicity_check(base: &SearchReport, ring: &RingSpec, extra: usize, threshold: u128) -> Result<bool> {
    let witness = base
        .witness
        .as_ref()
        .ok_or_else(|| Error::Unsupported("monotonicity check needs a witness".into()))?;
    let cols: Vec<ZnVec> = witness
        .iter()
        .map(|e| ZnVec::new(ring.clone(), e.clone()))
        .collect();
    let pad = cols[0].clone();
    for extra_len in 1..=extra {
        let mut padded = cols.clone();
        padded.extend(std::iter::repeat_n(pad.clone(), extra_len));
        let lam = ColumnMultiset::new(ring.clone(), base.k, padded)?;
        if !is_minimal_code(&LinearCode::new(lam)?, threshold, false)?.verdict {
            return Ok(false);
        }
    }
    Ok(true)
}
