//! Explicit minimal-code constructions: the pairwise-elimination column sets
//! over Z_{p^l} and Z_{p1p2}, and the one-dimensional ideal-generator codes
//! over arbitrary Z_n.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::code::ColumnMultiset;
use crate::error::{Error, Result};
use crate::linalg::{ZnVec, DEFAULT_THRESHOLD};
use crate::perp::root_words_mod_units;
use crate::ring::{RingShape, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecipeName {
    Lambda0,
    Lambda0Bi,
    OneDimNaive,
    OneDimGcd,
    RootWordsModUnits,
}

impl RecipeName {
    pub fn parse(s: &str) -> Option<RecipeName> {
        match s {
            "lambda0" => Some(RecipeName::Lambda0),
            "lambda0-bi" => Some(RecipeName::Lambda0Bi),
            "onedim-naive" => Some(RecipeName::OneDimNaive),
            "onedim-gcd" => Some(RecipeName::OneDimGcd),
            "root-words-mod-units" => Some(RecipeName::RootWordsModUnits),
        _ => None,
        }
    }
}

/// A named construction together with the length its closed form predicts
/// (when one exists).
#[derive(Debug, Clone, Serialize)]
pub struct Recipe {
    pub name: RecipeName,
    pub ring: RingSpec,
    pub k: usize,
    pub predicted_length: Option<u128>,
}

/// Runs the named recipe, returning the columns and their metadata.
pub fn build_recipe(name: RecipeName, ring: &RingSpec, k: usize) -> Result<(ColumnMultiset, Recipe)> {
    let lambda = match name {
        RecipeName::Lambda0 => {
            let RingShape::PrimePower { p, l } = ring.shape() else {
                return Err(Error::ShapeMismatch {
                    expected: "prime power",
                    n: ring.n(),
                });
            };
            lambda0_prime_power(p, l, k)?
        }
        RecipeName::Lambda0Bi => {
            let RingShape::TwoPrimes { p1, p2 } = ring.shape() else {
                return Err(Error::ShapeMismatch {
                    expected: "product of two distinct primes",
                    n: ring.n(),
                });
            };
            lambda0_two_primes(p1, p2, k)?
        }
        RecipeName::OneDimNaive => {
            if k != 1 {
                return Err(Error::DimensionMismatch { expected: 1, got: k });
            }
            onedim_naive(ring)?
        }
        RecipeName::OneDimGcd => {
            if k != 1 {
                return Err(Error::DimensionMismatch { expected: 1, got: k });
            }
            onedim_gcd(ring)?
        }
        RecipeName::RootWordsModUnits => {
            let cols = root_words_mod_units(ring, k, DEFAULT_THRESHOLD)?;
            ColumnMultiset::new(ring.clone(), k, cols)?
        }
    };
    let recipe = Recipe {
        name,
        ring: ring.clone(),
        k,
        predicted_length: predicted_length(name, ring, k),
    };
    Ok((lambda, recipe))
}

/// Closed-form length of the pairwise construction for k >= 2:
/// pairs * (per-pair family size) + k.
pub fn predicted_pairwise_length(ring: &RingSpec, k: usize) -> Option<u128> {
    if k < 2 {
        return None;
    }
    let pairs = (k as u128) * (k as u128 - 1) / 2;
    match ring.shape() {
        RingShape::PrimePower { p, l } => {
            let p = p as u128;
            Some(pairs * (p.pow(l) + p.pow(l - 1) - 2) + k as u128)
        }
        RingShape::TwoPrimes { p1, p2 } => {
            let (p1, p2) = (p1 as u128, p2 as u128);
            Some(pairs * (p1 * p2 + p1 + p2 - 1) + k as u128)
        }
        RingShape::General => None,
    }
}

fn predicted_length(name: RecipeName, ring: &RingSpec, k: usize) -> Option<u128> {
    match (name, ring.shape()) {
        (RecipeName::Lambda0, RingShape::PrimePower { .. })
        | (RecipeName::Lambda0Bi, RingShape::TwoPrimes { .. })
            if k >= 2 =>
        {
            predicted_pairwise_length(ring, k)
        }
        (RecipeName::OneDimNaive, _) => {
            let d: u128 = ring
                .factors()
                .iter()
                .map(|&(_, e)| e as u128 + 1)
                .product();
            Some(d - 1)
        }
        (RecipeName::OneDimGcd, _) => {
            let s: u128 = ring.factors().iter().map(|&(_, e)| e as u128).sum();
            if ring.factors().len() == 1 {
                Some(s)
            } else {
                Some(s + 1)
            }
        }
        _ => None,
    }
}

/// Columns built from pairwise unit/zero-divisor eliminations between
/// coordinate positions. One column set per ordered family, each family in
/// (i, j, scalar) lexicographic order.
pub fn lambda0_prime_power(p: u64, l: u32, k: usize) -> Result<ColumnMultiset> {
    let ring = RingSpec::new(p.checked_pow(l).ok_or(Error::InvalidModulus(0))?)?;
    if !matches!(ring.shape(), RingShape::PrimePower { .. }) {
        return Err(Error::ShapeMismatch {
            expected: "prime power",
            n: ring.n(),
        });
    }
    if k == 1 {
        return onedim_gcd(&ring);
    }
    let units = ring.units();
    let zds = ring.zero_divisors();
    let per_pair = units.len() + 2 * zds.len();
    assert_eq!(
        per_pair as u64,
        p.pow(l) + p.pow(l - 1) - 2,
        "pairwise family cardinality"
    );
    let mut cols: Vec<ZnVec> = (0..k).map(|i| ZnVec::basis(ring.clone(), k, i)).collect();
    for scalars in [&units, &zds] {
        for (i, j) in (0..k).tuple_combinations() {
            for &s in scalars.iter() {
                cols.push(pair_column(&ring, k, i, 1, j, s));
            }
        }
    }
    for (i, j) in (0..k).tuple_combinations() {
        for &d in &zds {
            cols.push(pair_column(&ring, k, i, d, j, 1));
        }
    }
    ColumnMultiset::new(ring, k, cols)
}

/// The two-prime analogue: unit and zero-divisor eliminations plus the two
/// cross-prime bridge columns p1*e_i + p2*e_j and p2*e_i + p1*e_j per pair.
pub fn lambda0_two_primes(p1: u64, p2: u64, k: usize) -> Result<ColumnMultiset> {
    let ring = RingSpec::new(p1 * p2)?;
    let RingShape::TwoPrimes { .. } = ring.shape() else {
        return Err(Error::ShapeMismatch {
            expected: "product of two distinct primes",
            n: ring.n(),
        });
    };
    if k == 1 {
        return onedim_gcd(&ring);
    }
    let units = ring.units();
    let zds = ring.zero_divisors();
    let per_pair = units.len() + 2 * zds.len() + 2;
    assert_eq!(per_pair as u64, p1 * p2 + p1 + p2 - 1, "pairwise family cardinality");
    let mut cols: Vec<ZnVec> = (0..k).map(|i| ZnVec::basis(ring.clone(), k, i)).collect();
    for scalars in [&units, &zds] {
        for (i, j) in (0..k).tuple_combinations() {
            for &s in scalars.iter() {
                cols.push(pair_column(&ring, k, i, 1, j, s));
            }
        }
    }
    for (i, j) in (0..k).tuple_combinations() {
        for &d in &zds {
            cols.push(pair_column(&ring, k, i, d, j, 1));
        }
    }
    for (i, j) in (0..k).tuple_combinations() {
        cols.push(pair_column(&ring, k, i, p1, j, p2));
    }
    for (i, j) in (0..k).tuple_combinations() {
        cols.push(pair_column(&ring, k, i, p2, j, p1));
    }
    ColumnMultiset::new(ring, k, cols)
}

fn pair_column(ring: &RingSpec, k: usize, i: usize, a: u64, j: usize, b: u64) -> ZnVec {
    let mut e = vec![0u64; k];
    e[i] = a;
    e[j] = b;
    ZnVec::new(ring.clone(), e)
}

/// One column per proper ideal generator (every proper divisor of n), plus
/// the unit 1.
pub fn onedim_naive(ring: &RingSpec) -> Result<ColumnMultiset> {
    let n = ring.n();
    let mut cols = vec![1u64];
    cols.extend((2..n).filter(|d| n % d == 0));
    let cols = cols
        .into_iter()
        .map(|d| ZnVec::new(ring.clone(), vec![d]))
        .collect();
    ColumnMultiset::new(ring.clone(), 1, cols)
}

/// The shorter one-dimensional column set: 1 together with, for each prime
/// p_i | n, the chain (n / p_i^a_i) * p_i^t for t < a_i. Every proper
/// divisor of n arises as a gcd of a subset, which is what minimality needs.
pub fn onedim_gcd(ring: &RingSpec) -> Result<ColumnMultiset> {
    let n = ring.n();
    let mut cols: Vec<u64> = vec![1];
    for &(p, a) in ring.factors() {
        let cofactor = n / p.pow(a);
        for t in 0..a {
            let v = cofactor * p.pow(t);
            if !cols.contains(&v) {
                cols.push(v);
            }
        }
    }
    let coverage = verify_gcd_coverage(ring, &cols[1..]);
    debug_assert!(coverage.is_complete(), "uncovered divisors: {:?}", coverage.uncovered);
    let cols = cols
        .into_iter()
        .map(|d| ZnVec::new(ring.clone(), vec![d]))
        .collect();
    ColumnMultiset::new(ring.clone(), 1, cols)
}

/// For each proper divisor D of n, the subset of `generators` whose gcd
/// (together with n) equals D, or D listed as uncovered.
#[derive(Debug, Clone, Serialize)]
pub struct GcdCoverage {
    pub covered: BTreeMap<u64, Vec<u64>>,
    pub uncovered: Vec<u64>,
}

impl GcdCoverage {
    pub fn is_complete(&self) -> bool {
        self.uncovered.is_empty()
    }
}

pub fn verify_gcd_coverage(ring: &RingSpec, generators: &[u64]) -> GcdCoverage {
    let n = ring.n();
    let mut covered = BTreeMap::new();
    let mut uncovered = Vec::new();
    for d in 2..n {
        if n % d != 0 {
            continue;
        }
        let witness = (1..=generators.len())
            .flat_map(|size| generators.iter().copied().combinations(size))
            .find(|subset| {
                subset
                    .iter()
                    .fold(n, |g, &x| num_integer::gcd(g, x % n))
                    == d
            });
        match witness {
            Some(s) => {
                covered.insert(d, s);
            }
            None => uncovered.push(d),
        }
    }
    GcdCoverage { covered, uncovered }
}
