//! Codes C(Lambda) generated by a column multiset, with two independent
//! minimality deciders: the definitional cover-scan oracle and the
//! orthogonal-module criterion M(v, Lambda) = O(v).

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    enumerate_vectors, is_linearly_independent, kernel, Submodule, ZnMatrix, ZnVec,
};
use crate::ring::RingSpec;

/// Ordered multiset of defining columns alpha_i in Z_n^k. Order fixes the
/// codeword coordinate order; duplicates are allowed and never change spans.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnMultiset {
    ring: RingSpec,
    k: usize,
    columns: Vec<ZnVec>,
}

impl ColumnMultiset {
    /// Builds the multiset, checking that it contains k linearly independent
    /// vectors.
    pub fn new(ring: RingSpec, k: usize, columns: Vec<ZnVec>) -> Result<Self> {
        for c in &columns {
            if c.ring().n() != ring.n() {
                return Err(Error::RingMismatch(ring.n(), c.ring().n()));
            }
            if c.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    got: c.len(),
                });
            }
        }
        let distinct: Vec<&ZnVec> = columns.iter().unique().collect();
        let ok = distinct.len() >= k
            && distinct
                .iter()
                .combinations(k)
                .any(|sub| is_linearly_independent(&sub.iter().map(|v| (**v).clone()).collect::<Vec<_>>()));
        if !ok {
            return Err(Error::NotEnoughIndependent { k });
        }
        Ok(ColumnMultiset { ring, k, columns })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[ZnVec] {
        &self.columns
    }

    pub fn with_appended(&self, extra: &[ZnVec]) -> Result<ColumnMultiset> {
        let mut cols = self.columns.clone();
        cols.extend_from_slice(extra);
        ColumnMultiset::new(self.ring.clone(), self.k, cols)
    }
}

/// The linear code C(Lambda) with its k x m generator matrix.
#[derive(Debug, Clone, Serialize)]
pub struct LinearCode {
    lambda: ColumnMultiset,
    generator_matrix: ZnMatrix,
    injective_encoding: bool,
}

impl LinearCode {
    pub fn new(lambda: ColumnMultiset) -> Result<Self> {
        let ring = lambda.ring().clone();
        let k = lambda.k();
        let rows: Vec<ZnVec> = (0..k)
            .map(|i| {
                ZnVec::new(
                    ring.clone(),
                    lambda.columns().iter().map(|c| c.get(i)).collect(),
                )
            })
            .collect();
        let generator_matrix = ZnMatrix::from_rows(ring.clone(), lambda.m(), rows)?;
        // v -> c(v) is injective iff nothing but zero is orthogonal to all
        // columns; a k-independent column set forces this, but we verify
        // rather than assume
        let injective_encoding = kernel(&ring, k, lambda.columns())?.is_zero();
        Ok(LinearCode {
            lambda,
            generator_matrix,
            injective_encoding,
        })
    }

    pub fn lambda(&self) -> &ColumnMultiset {
        &self.lambda
    }

    pub fn generator_matrix(&self) -> &ZnMatrix {
        &self.generator_matrix
    }

    pub fn injective_encoding(&self) -> bool {
        self.injective_encoding
    }

    pub fn ring(&self) -> &RingSpec {
        self.lambda.ring()
    }

    pub fn k(&self) -> usize {
        self.lambda.k()
    }

    pub fn m(&self) -> usize {
        self.lambda.m()
    }

    /// c(v) = (<v, alpha_1>, .., <v, alpha_m>).
    pub fn encode(&self, v: &ZnVec) -> Result<ZnVec> {
        if v.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                got: v.len(),
            });
        }
        let entries: Result<Vec<u64>> = self
            .lambda
            .columns()
            .iter()
            .map(|c| v.inner_product(c))
            .collect();
        Ok(ZnVec::new(self.ring().clone(), entries?))
    }
}

/// The distinct columns orthogonal to v (O(v, Lambda)) and their span
/// (M(v, Lambda)).
pub fn orthogonal_columns(v: &ZnVec, lambda: &ColumnMultiset) -> Result<(Vec<ZnVec>, Submodule)> {
    if v.len() != lambda.k() {
        return Err(Error::DimensionMismatch {
            expected: lambda.k(),
            got: v.len(),
        });
    }
    let mut o: Vec<ZnVec> = Vec::new();
    for c in lambda.columns() {
        if v.inner_product(c)? == 0 && !o.contains(c) {
            o.push(c.clone());
        }
    }
    o.sort();
    let m = Submodule::from_generators(lambda.ring().clone(), lambda.k(), &o)?;
    Ok((o, m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    Criterion,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Subject {
    Message(Vec<u64>),
    WholeCode,
}

/// A covered-but-not-scalar-multiple witness against minimality.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub message: Vec<u64>,
    pub covered_codeword: Vec<u64>,
    pub covering_codeword: Vec<u64>,
    pub reason: String,
}

/// Canonical forms backing a criterion verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionEvidence {
    /// Howell form of M(v, Lambda).
    pub spanned_orthogonal_columns: Vec<Vec<u64>>,
    /// Howell form of O(v) = v-perp.
    pub full_orthogonal_module: Vec<Vec<u64>>,
}

/// Structured minimality verdict with provenance.
#[derive(Debug, Clone, Serialize)]
pub struct MinimalityReport {
    pub n: u64,
    pub k: usize,
    pub m: usize,
    pub subject: Subject,
    pub verdict: bool,
    pub method: Method,
    pub counterexample: Option<Counterexample>,
    pub criterion_evidence: Option<CriterionEvidence>,
    pub per_message_failures: Vec<Vec<u64>>,
}

fn is_scalar_multiple(ring: &RingSpec, base: &ZnVec, target: &ZnVec) -> bool {
    (1..ring.n()).any(|a| &base.scale(a) == target)
}

/// Definitional oracle: c(v) is minimal iff every nonzero codeword it covers
/// is one of its scalar multiples. Decided by full enumeration of the
/// message space.
pub fn is_minimal_codeword_oracle(
    v: &ZnVec,
    code: &LinearCode,
    threshold: u128,
) -> Result<MinimalityReport> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let ring = code.ring().clone();
    let cv = code.encode(v)?;
    let cv_mask = cv.support_mask();
    // deduplicate codewords in case the encoding is not injective
    let mut codewords: BTreeMap<ZnVec, Vec<u64>> = BTreeMap::new();
    for msg in enumerate_vectors(&ring, code.k(), threshold)? {
        let c = code.encode(&msg)?;
        codewords.entry(c).or_insert_with(|| msg.entries().to_vec());
    }
    let mut counterexample = None;
    for (c, msg) in &codewords {
        if c.is_zero() {
            continue;
        }
        let mask = c.support_mask();
        if mask & !cv_mask != 0 {
            continue; // not covered
        }
        if !is_scalar_multiple(&ring, &cv, c) {
            counterexample = Some(Counterexample {
                message: msg.clone(),
                covered_codeword: c.entries().to_vec(),
                covering_codeword: cv.entries().to_vec(),
                reason: format!(
                    "c({}) is covered by c({}) but is not a scalar multiple of it",
                    ZnVec::new(ring.clone(), msg.clone()),
                    v
                ),
            });
            break;
        }
    }
    Ok(MinimalityReport {
        n: ring.n(),
        k: code.k(),
        m: code.m(),
        subject: Subject::Message(v.entries().to_vec()),
        verdict: counterexample.is_none(),
        method: Method::Oracle,
        counterexample,
        criterion_evidence: None,
        per_message_failures: vec![],
    })
}

/// Criterion decider: c(v) is minimal iff M(v, Lambda) = O(v).
pub fn is_minimal_codeword(v: &ZnVec, code: &LinearCode) -> Result<MinimalityReport> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let ring = code.ring().clone();
    let (_, m_sub) = orthogonal_columns(v, code.lambda())?;
    let o_sub = kernel(&ring, code.k(), std::slice::from_ref(v))?;
    let verdict = m_sub.equal(&o_sub)?;
    Ok(MinimalityReport {
        n: ring.n(),
        k: code.k(),
        m: code.m(),
        subject: Subject::Message(v.entries().to_vec()),
        verdict,
        method: Method::Criterion,
        counterexample: None,
        criterion_evidence: Some(CriterionEvidence {
            spanned_orthogonal_columns: m_sub.canon_raw().to_vec(),
            full_orthogonal_module: o_sub.canon_raw().to_vec(),
        }),
        per_message_failures: vec![],
    })
}

/// Lexicographically-least representatives of the unit-scaling orbits of the
/// nonzero vectors of Z_n^k. Verdicts for v and u*v always coincide, so the
/// whole-code check may restrict to these.
pub fn unit_orbit_representatives(
    ring: &RingSpec,
    k: usize,
    threshold: u128,
) -> Result<Vec<ZnVec>> {
    let units = ring.units();
    let mut reps = BTreeSet::new();
    for v in enumerate_vectors(ring, k, threshold)? {
        if v.is_zero() {
            continue;
        }
        let rep = units.iter().map(|&u| v.scale(u)).min().expect("units nonempty");
        reps.insert(rep);
    }
    Ok(reps.into_iter().collect())
}

/// Whole-code criterion check. Iterates unit-orbit representatives by
/// default; `full_sweep` forces the slow pass over every nonzero message.
pub fn is_minimal_code(
    code: &LinearCode,
    threshold: u128,
    full_sweep: bool,
) -> Result<MinimalityReport> {
    let ring = code.ring().clone();
    let messages = if full_sweep {
        enumerate_vectors(&ring, code.k(), threshold)?
            .into_iter()
            .filter(|v| !v.is_zero())
            .collect()
    } else {
        unit_orbit_representatives(&ring, code.k(), threshold)?
    };
    let failures: Vec<Vec<u64>> = messages
        .par_iter()
        .map(|v| is_minimal_codeword(v, code).map(|r| (!r.verdict).then(|| v.entries().to_vec())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(MinimalityReport {
        n: ring.n(),
        k: code.k(),
        m: code.m(),
        subject: Subject::WholeCode,
        verdict: failures.is_empty(),
        method: Method::Criterion,
        counterexample: None,
        criterion_evidence: None,
        per_message_failures: failures,
    })
}

/// Whole-code definitional oracle: pairwise cover scan over the distinct
/// nonzero codewords.
pub fn is_minimal_code_oracle(code: &LinearCode, threshold: u128) -> Result<MinimalityReport> {
    let ring = code.ring().clone();
    let mut codewords: BTreeMap<ZnVec, Vec<u64>> = BTreeMap::new();
    for msg in enumerate_vectors(&ring, code.k(), threshold)? {
        let c = code.encode(&msg)?;
        if !c.is_zero() {
            codewords.entry(c).or_insert_with(|| msg.entries().to_vec());
        }
    }
    let list: Vec<(&ZnVec, u64, &Vec<u64>)> = codewords
        .iter()
        .map(|(c, m)| (c, c.support_mask(), m))
        .collect();
    let mut counterexample = None;
    let mut failures: Vec<Vec<u64>> = Vec::new();
    'outer: for &(big, big_mask, big_msg) in &list {
        for &(small, small_mask, small_msg) in &list {
            if small_mask & !big_mask != 0 {
                continue;
            }
            if !is_scalar_multiple(&ring, big, small) {
                failures.push(big_msg.clone());
                if counterexample.is_none() {
                    counterexample = Some(Counterexample {
                        message: small_msg.clone(),
                        covered_codeword: small.entries().to_vec(),
                        covering_codeword: big.entries().to_vec(),
                        reason: format!(
                            "c({}) is covered by c({}) but is not a scalar multiple of it",
                            ZnVec::new(ring.clone(), small_msg.clone()),
                            ZnVec::new(ring.clone(), big_msg.clone()),
                        ),
                    });
                }
                continue 'outer;
            }
        }
    }
    Ok(MinimalityReport {
        n: ring.n(),
        k: code.k(),
        m: code.m(),
        subject: Subject::WholeCode,
        verdict: failures.is_empty(),
        method: Method::Oracle,
        counterexample,
        criterion_evidence: None,
        per_message_failures: failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lambda0_prime_power;
    use crate::linalg::DEFAULT_THRESHOLD;

    fn ring(n: u64) -> RingSpec {
        RingSpec::new(n).unwrap()
    }

    fn v(n: u64, e: &[u64]) -> ZnVec {
        ZnVec::new(ring(n), e.to_vec())
    }

    fn basis_lambda(n: u64) -> ColumnMultiset {
        ColumnMultiset::new(ring(n), 2, vec![v(n, &[1, 0]), v(n, &[0, 1])]).unwrap()
    }

    #[test]
    fn column_multiset_requires_independent_columns() {
        let err = ColumnMultiset::new(ring(4), 2, vec![v(4, &[2, 0]), v(4, &[0, 2])]);
        assert!(matches!(err, Err(Error::NotEnoughIndependent { k: 2 })));
        assert!(ColumnMultiset::new(ring(4), 1, vec![v(4, &[2])]).is_err());
        assert!(ColumnMultiset::new(ring(4), 1, vec![v(4, &[1]), v(4, &[2])]).is_ok());
    }

    #[test]
    fn encode_examples() {
        let code = LinearCode::new(lambda0_prime_power(2, 2, 2).unwrap()).unwrap();
        assert_eq!(code.encode(&v(4, &[1, 0])).unwrap(), ZnVec::new(ring(4), vec![1, 0, 1, 1, 1, 2]));
        assert_eq!(code.encode(&v(4, &[0, 1])).unwrap(), ZnVec::new(ring(4), vec![0, 1, 1, 3, 2, 1]));
        assert!(code.encode(&v(4, &[0, 0])).unwrap().is_zero());
        assert!(code.injective_encoding());
    }

    #[test]
    fn orthogonal_columns_examples() {
        let lam = basis_lambda(4);
        let (o, m) = orthogonal_columns(&v(4, &[1, 1]), &lam).unwrap();
        assert!(o.is_empty());
        assert!(m.is_zero());

        let (o, m) = orthogonal_columns(&v(4, &[1, 0]), &lam).unwrap();
        assert_eq!(o, vec![v(4, &[0, 1])]);
        assert_eq!(m.cardinality(), 4);

        let lam0 = lambda0_prime_power(2, 2, 2).unwrap();
        let (_, m) = orthogonal_columns(&v(4, &[2, 2]), &lam0).unwrap();
        assert_eq!(m.cardinality(), 8);
        let ker = kernel(&ring(4), 2, &[v(4, &[2, 2])]).unwrap();
        assert!(m.equal(&ker).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let code = LinearCode::new(basis_lambda(4)).unwrap();
        let r = is_minimal_codeword_oracle(&v(4, &[1, 1]), &code, DEFAULT_THRESHOLD).unwrap();
        assert!(!r.verdict);
        let ce = r.counterexample.unwrap();
        // (1,3) is covered by (1,1) but is no scalar multiple of it
        assert_eq!(ce.covering_codeword, vec![1, 1]);

        let lam0 = lambda0_prime_power(2, 2, 2).unwrap();
        let code0 = LinearCode::new(lam0).unwrap();
        assert!(is_minimal_codeword_oracle(&v(4, &[1, 0]), &code0, DEFAULT_THRESHOLD).unwrap().verdict);
        assert!(is_minimal_codeword_oracle(&v(4, &[2, 2]), &code0, DEFAULT_THRESHOLD).unwrap().verdict);
    }

    #[test]
    fn criterion_examples() {
        let code = LinearCode::new(basis_lambda(4)).unwrap();
        let r = is_minimal_codeword(&v(4, &[1, 1]), &code).unwrap();
        assert!(!r.verdict);
        let ev = r.criterion_evidence.unwrap();
        assert!(ev.spanned_orthogonal_columns.is_empty());
        assert_eq!(ev.full_orthogonal_module.len(), 1);

        let code0 = LinearCode::new(lambda0_prime_power(2, 2, 2).unwrap()).unwrap();
        assert!(is_minimal_codeword(&v(4, &[1, 0]), &code0).unwrap().verdict);
    }

    #[test]
    fn whole_code_examples() {
        let code0 = LinearCode::new(lambda0_prime_power(2, 2, 2).unwrap()).unwrap();
        assert!(is_minimal_code(&code0, DEFAULT_THRESHOLD, false).unwrap().verdict);
        assert!(is_minimal_code(&code0, DEFAULT_THRESHOLD, true).unwrap().verdict);
        assert!(is_minimal_code_oracle(&code0, DEFAULT_THRESHOLD).unwrap().verdict);

        let code = LinearCode::new(basis_lambda(4)).unwrap();
        let r = is_minimal_code(&code, DEFAULT_THRESHOLD, false).unwrap();
        assert!(!r.verdict);
        assert!(r.per_message_failures.contains(&vec![1, 1]));
        assert!(!is_minimal_code_oracle(&code, DEFAULT_THRESHOLD).unwrap().verdict);
    }

    #[test]
    fn duplicate_columns_change_no_verdict() {
        let lam = lambda0_prime_power(2, 2, 2).unwrap();
        let dup = lam.with_appended(&[lam.columns()[0].clone()]).unwrap();
        let a = is_minimal_code(&LinearCode::new(lam).unwrap(), DEFAULT_THRESHOLD, false).unwrap();
        let b = is_minimal_code(&LinearCode::new(dup).unwrap(), DEFAULT_THRESHOLD, false).unwrap();
        assert_eq!(a.verdict, b.verdict);
    }

    #[test]
    fn encoding_is_linear() {
        let code = LinearCode::new(lambda0_prime_power(2, 2, 2).unwrap()).unwrap();
        let r = ring(4);
        for x in enumerate_vectors(&r, 2, DEFAULT_THRESHOLD).unwrap() {
            for y in enumerate_vectors(&r, 2, DEFAULT_THRESHOLD).unwrap() {
                let lhs = code.encode(&x.add(&y).unwrap()).unwrap();
                let rhs = code.encode(&x).unwrap().add(&code.encode(&y).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
            for a in 0..4 {
                assert_eq!(
                    code.encode(&x.scale(a)).unwrap(),
                    code.encode(&x).unwrap().scale(a)
                );
            }
        }
    }
}
