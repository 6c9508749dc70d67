//! Root-word classification, explicit generator sets for the orthogonal
//! module v-perp, and the double-perp identity.
//!
//! Each explicit construction is cross-validated against the generic kernel
//! in the test suite; the kernel is always the authority.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{enumerate_vectors, kernel, span_of, Submodule, ZnVec};
use crate::ring::{RingShape, RingSpec};

/// Which explicit construction produced a perp basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PerpConstruction {
    /// Some component is a unit: elimination basis of k-1 rows (free).
    UnitComponent,
    /// Prime-power ring, v = p^r * y with y a root word: k generators, the
    /// extra one carrying p^s with s the least integer such that s + r >= l.
    PrimePowerNonRoot,
    /// Z_{p1 p2}, every component a multiple of p1: k generators.
    AllFirstPrime,
    /// Z_{p1 p2}, every component a multiple of p2: k generators.
    AllSecondPrime,
    /// Z_{p1 p2}, both prime blocks present: k-1 generators including the
    /// bridging vector with p2 and p1 at the two anchors (free).
    MixedPrimes,
}

/// Result of classifying a vector as root word or not.
#[derive(Debug, Clone, Serialize)]
pub struct RootWordClassification {
    pub vector: ZnVec,
    pub is_root: bool,
    /// A nonzero scalar annihilating the vector, when one exists.
    pub witness: Option<u64>,
    /// In prime-power rings, (r, y) with vector = p^r * y and y a root word,
    /// r minimal.
    pub prime_power_decomposition: Option<(u32, ZnVec)>,
}

/// An explicit generator set for v-perp.
#[derive(Debug, Clone, Serialize)]
pub struct PerpBasis {
    pub source: ZnVec,
    pub generators: Vec<ZnVec>,
    pub claimed_free: bool,
    /// None when the generic kernel fallback was used (general ring shape).
    pub construction: Option<PerpConstruction>,
}

impl PerpBasis {
    pub fn span(&self) -> Result<Submodule> {
        Submodule::from_generators(self.source.ring().clone(), self.source.len(), &self.generators)
    }
}

/// A vector is a root word iff no nonzero scalar annihilates it, which for
/// Z_n comes down to gcd of the entries with n being 1.
pub fn classify_root_word(v: &ZnVec) -> RootWordClassification {
    let ring = v.ring().clone();
    let n = ring.n();
    let g = v.entries().iter().fold(n, |g, &e| num_integer::gcd(g, e));
    let is_root = g == 1;
    let witness = if is_root { None } else { Some(n / g) };
    let prime_power_decomposition = match ring.shape() {
        RingShape::PrimePower { p, .. } if !is_root && !v.is_zero() => {
            let mut r = 0u32;
            let mut gg = g;
            while gg % p == 0 {
                gg /= p;
                r += 1;
            }
            debug_assert!(r >= 1);
            let pr = p.pow(r);
            let y = ZnVec::new(ring.clone(), v.entries().iter().map(|&e| e / pr).collect());
            Some((r, y))
        }
        _ => None,
    };
    RootWordClassification {
        vector: v.clone(),
        is_root,
        witness,
        prime_power_decomposition,
    }
}

/// Exhaustive root-word count, with the closed-form count reported alongside
/// when the ring shape has one. Discrepancies are surfaced, never reconciled.
pub fn count_root_words(ring: &RingSpec, k: usize, threshold: u128) -> Result<(u64, Option<u64>)> {
    let count = enumerate_vectors(ring, k, threshold)?
        .iter()
        .filter(|v| classify_root_word(v).is_root)
        .count() as u64;
    let formula = match ring.shape() {
        RingShape::PrimePower { p, l } => {
            Some(p.pow(l * k as u32) - p.pow((l - 1) * k as u32))
        }
        RingShape::TwoPrimes { p1, p2 } => Some(
            p1.pow(k as u32) * p2.pow(k as u32)
                - (p2 - 1).pow(k as u32)
                - (p1 - 1).pow(k as u32)
                - 1,
        ),
        RingShape::General => None,
    };
    Ok((count, formula))
}

fn swap_coords(v: &ZnVec, i: usize, j: usize) -> ZnVec {
    let mut e = v.entries().to_vec();
    e.swap(i, j);
    ZnVec::new(v.ring().clone(), e)
}

/// Elimination basis for a vector whose component at `unit_pos` is a unit:
/// move the unit to the front, scale it to 1, emit the k-1 rows
/// (-a_i, .., 1, ..) and undo the move.
fn unit_component_basis(v: &ZnVec, unit_pos: usize) -> Result<Vec<ZnVec>> {
    let ring = v.ring().clone();
    let k = v.len();
    let w = swap_coords(v, 0, unit_pos);
    let inv = ring.invert(w.get(0))?;
    let scaled = w.scale(inv);
    let mut gens = Vec::with_capacity(k - 1);
    for i in 1..k {
        let mut e = vec![0u64; k];
        e[0] = ring.neg(scaled.get(i));
        e[i] = 1 % ring.n();
        gens.push(swap_coords(&ZnVec::new(ring.clone(), e), 0, unit_pos));
    }
    Ok(gens)
}

/// Explicit generator set for v-perp, chosen per the ring shape and the
/// classification of v. Falls back to the generic kernel for general rings.
pub fn perp_basis(v: &ZnVec) -> Result<PerpBasis> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let ring = v.ring().clone();
    let k = v.len();
    match ring.shape() {
        RingShape::PrimePower { p, l } => {
            if let Some(pos) = (0..k).find(|&i| ring.is_unit(v.get(i))) {
                return Ok(PerpBasis {
                    source: v.clone(),
                    generators: unit_component_basis(v, pos)?,
                    claimed_free: true,
                    construction: Some(PerpConstruction::UnitComponent),
                });
            }
            let cls = classify_root_word(v);
            let (r, y) = cls.prime_power_decomposition.expect("nonzero non-root in Z_{p^l}");
            let s = l - r; // least s with s + r >= l
            let ps = p.pow(s) % ring.n();
            let generators = if k == 1 {
                vec![ZnVec::new(ring.clone(), vec![ps])]
            } else {
                let pos = (0..k).find(|&i| ring.is_unit(y.get(i))).expect("root word");
                let w = swap_coords(&y, 0, pos);
                let inv = ring.invert(w.get(0))?;
                let scaled = w.scale(inv);
                let mut gens = unit_component_basis(&y, pos)?;
                // bridge row: (p^s - a_2, 1, 0, ..) in the permuted frame
                let mut e = vec![0u64; k];
                e[0] = ring.sub(ps, scaled.get(1));
                e[1] = 1 % ring.n();
                gens.push(swap_coords(&ZnVec::new(ring.clone(), e), 0, pos));
                gens
            };
            Ok(PerpBasis {
                source: v.clone(),
                generators,
                claimed_free: false,
                construction: Some(PerpConstruction::PrimePowerNonRoot),
            })
        }
        RingShape::TwoPrimes { p1, p2 } => {
            if let Some(pos) = (0..k).find(|&i| ring.is_unit(v.get(i))) {
                return Ok(PerpBasis {
                    source: v.clone(),
                    generators: unit_component_basis(v, pos)?,
                    claimed_free: true,
                    construction: Some(PerpConstruction::UnitComponent),
                });
            }
            let block1: Vec<usize> = (0..k)
                .filter(|&i| v.get(i) != 0 && v.get(i) % p1 == 0)
                .collect();
            let block2: Vec<usize> = (0..k)
                .filter(|&i| v.get(i) != 0 && v.get(i) % p2 == 0)
                .collect();
            debug_assert_eq!(
                block1.len() + block2.len(),
                v.support().len(),
                "nonzero non-units of Z_(p1 p2) are multiples of exactly one prime"
            );
            if block2.is_empty() {
                Ok(PerpBasis {
                    source: v.clone(),
                    generators: one_prime_block_basis(v, p2, &block1),
                    claimed_free: false,
                    construction: Some(PerpConstruction::AllFirstPrime),
                })
            } else if block1.is_empty() {
                Ok(PerpBasis {
                    source: v.clone(),
                    generators: one_prime_block_basis(v, p1, &block2),
                    claimed_free: false,
                    construction: Some(PerpConstruction::AllSecondPrime),
                })
            } else {
                Ok(PerpBasis {
                    source: v.clone(),
                    generators: mixed_block_basis(v, p1, p2, &block1, &block2),
                    claimed_free: true,
                    construction: Some(PerpConstruction::MixedPrimes),
                })
            }
        }
        RingShape::General => {
            let ker = kernel(&ring, k, std::slice::from_ref(v))?;
            Ok(PerpBasis {
                source: v.clone(),
                generators: ker.canon_rows(),
                claimed_free: false,
                construction: None,
            })
        }
    }
}

/// All nonzero entries of v are multiples of one prime and `p_out` is the
/// other. Emits k generators: e_i for zero coordinates, the within-block
/// eliminations against the anchor, and p_out * e_anchor.
fn one_prime_block_basis(v: &ZnVec, p_out: u64, block: &[usize]) -> Vec<ZnVec> {
    let ring = v.ring().clone();
    let k = v.len();
    let anchor = block[0];
    // inverse of v[anchor] modulo p_out; v[anchor] = p_in * w with w a unit
    // mod p_out, so it is invertible there
    let inv = inv_mod(v.get(anchor) % p_out, p_out);
    let mut gens = Vec::with_capacity(k);
    for i in 0..k {
        if i == anchor {
            continue;
        }
        let mut e = vec![0u64; k];
        if v.get(i) == 0 {
            e[i] = 1 % ring.n();
        } else {
            let c = (v.get(i) % p_out) * inv % p_out;
            e[i] = 1 % ring.n();
            e[anchor] = ring.neg(c);
        }
        gens.push(ZnVec::new(ring.clone(), e));
    }
    let mut e = vec![0u64; k];
    e[anchor] = p_out % ring.n();
    gens.push(ZnVec::new(ring, e));
    debug_assert_eq!(gens.len(), k);
    gens
}

/// v has a nonzero p1-multiple block and a nonzero p2-multiple block. Emits
/// the k-1 generators: e_i for zero coordinates, within-block eliminations
/// against each block's anchor, and the bridging vector
/// p2 * e_anchor1 + p1 * e_anchor2.
fn mixed_block_basis(
    v: &ZnVec,
    p1: u64,
    p2: u64,
    block1: &[usize],
    block2: &[usize],
) -> Vec<ZnVec> {
    let ring = v.ring().clone();
    let k = v.len();
    let a1 = block1[0];
    let a2 = block2[0];
    let inv1 = inv_mod(v.get(a1) % p2, p2); // block1 entries are units mod p2
    let inv2 = inv_mod(v.get(a2) % p1, p1);
    let mut gens = Vec::with_capacity(k - 1);
    for i in 0..k {
        if v.get(i) == 0 {
            let mut e = vec![0u64; k];
            e[i] = 1 % ring.n();
            gens.push(ZnVec::new(ring.clone(), e));
        }
    }
    for &i in &block1[1..] {
        let c = (v.get(i) % p2) * inv1 % p2;
        let mut e = vec![0u64; k];
        e[i] = 1 % ring.n();
        e[a1] = ring.neg(c);
        gens.push(ZnVec::new(ring.clone(), e));
    }
    for &i in &block2[1..] {
        let c = (v.get(i) % p1) * inv2 % p1;
        let mut e = vec![0u64; k];
        e[i] = 1 % ring.n();
        e[a2] = ring.neg(c);
        gens.push(ZnVec::new(ring.clone(), e));
    }
    let mut e = vec![0u64; k];
    e[a1] = p2 % ring.n();
    e[a2] = p1 % ring.n();
    gens.push(ZnVec::new(ring, e));
    debug_assert_eq!(gens.len(), k - 1);
    gens
}

fn inv_mod(a: u64, m: u64) -> u64 {
    let (g, s, _) = crate::ring::egcd(a as i128, m as i128);
    debug_assert_eq!(g, 1);
    s.rem_euclid(m as i128) as u64
}

/// Verified double-perp: returns (v-perp)-perp and fails loudly if it does
/// not equal the cyclic module generated by v.
pub fn double_perp(v: &ZnVec) -> Result<Submodule> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let ring = v.ring().clone();
    let k = v.len();
    let first = kernel(&ring, k, std::slice::from_ref(v))?;
    let second = kernel(&ring, k, &first.canon_rows())?;
    if !second.equal(&span_of(v))? {
        return Err(Error::DoublePerpViolated(v.to_string()));
    }
    Ok(second)
}

/// One lexicographically-least representative per orbit {u*v : u a unit} of
/// the root words of Z_n^k, sorted.
pub fn root_words_mod_units(ring: &RingSpec, k: usize, threshold: u128) -> Result<Vec<ZnVec>> {
    let units = ring.units();
    let mut reps = std::collections::BTreeSet::new();
    for v in enumerate_vectors(ring, k, threshold)? {
        if !classify_root_word(&v).is_root {
            continue;
        }
        let rep = units.iter().map(|&u| v.scale(u)).min().expect("units nonempty");
        reps.insert(rep);
    }
    Ok(reps.into_iter().collect())
}
