//! Randomized invariants: canonical-form stability, kernel correctness,
//! encoding linearity, and the verdict symmetries the deciders rely on.

use proptest::prelude::*;

use zncodes::code::{is_minimal_code, ColumnMultiset, LinearCode};
use zncodes::linalg::{enumerate_vectors, kernel, Submodule, ZnVec, DEFAULT_THRESHOLD};
use zncodes::ring::RingSpec;

fn ring_and_vectors(max_k: usize, max_m: usize) -> impl Strategy<Value = (RingSpec, usize, Vec<Vec<u64>>)> {
    (2u64..=16, 1..=max_k).prop_flat_map(move |(n, k)| {
        let vecs = prop::collection::vec(prop::collection::vec(0..n, k), 1..=max_m);
        (Just(RingSpec::new(n).unwrap()), Just(k), vecs)
    })
}

fn to_vecs(r: &RingSpec, raw: &[Vec<u64>]) -> Vec<ZnVec> {
    raw.iter().map(|e| ZnVec::new(r.clone(), e.clone())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_idempotent_and_contains_generators((r, k, raw) in ring_and_vectors(3, 4)) {
        let gens = to_vecs(&r, &raw);
        let s = Submodule::from_generators(r.clone(), k, &gens).unwrap();
        let again = Submodule::from_generators(r.clone(), k, &s.canon_rows()).unwrap();
        prop_assert!(s.equal(&again).unwrap());
        prop_assert_eq!(s.canon_raw(), again.canon_raw());
        for g in &gens {
            prop_assert!(s.contains(g).unwrap());
        }
    }

    #[test]
    fn span_is_order_insensitive_and_absorbs_combinations((r, k, raw) in ring_and_vectors(3, 4)) {
        let gens = to_vecs(&r, &raw);
        let s = Submodule::from_generators(r.clone(), k, &gens).unwrap();

        let mut reversed = gens.clone();
        reversed.reverse();
        let t = Submodule::from_generators(r.clone(), k, &reversed).unwrap();
        prop_assert!(s.equal(&t).unwrap());

        // appending a combination of the generators changes nothing
        let mut extra = ZnVec::zero(r.clone(), k);
        for (i, g) in gens.iter().enumerate() {
            extra = extra.add(&g.scale(i as u64 + 2)).unwrap();
        }
        let mut augmented = gens.clone();
        augmented.push(extra);
        let u = Submodule::from_generators(r.clone(), k, &augmented).unwrap();
        prop_assert!(s.equal(&u).unwrap());
    }

    #[test]
    fn kernel_matches_pointwise_orthogonality((r, k, raw) in ring_and_vectors(2, 3)) {
        let constraints = to_vecs(&r, &raw);
        let ker = kernel(&r, k, &constraints).unwrap();
        for x in enumerate_vectors(&r, k, DEFAULT_THRESHOLD).unwrap() {
            let orthogonal = constraints.iter().all(|c| x.inner_product(c).unwrap() == 0);
            prop_assert_eq!(ker.contains(&x).unwrap(), orthogonal, "x = {}", x);
        }
    }

    #[test]
    fn encoding_is_linear((r, k, raw) in ring_and_vectors(2, 5),
                          x in prop::collection::vec(0u64..16, 2),
                          a in 0u64..16) {
        let cols = to_vecs(&r, &raw);
        let Ok(lam) = ColumnMultiset::new(r.clone(), k, cols) else {
            return Ok(()); // not enough independent columns; nothing to test
        };
        let code = LinearCode::new(lam).unwrap();
        let x = ZnVec::new(r.clone(), x.iter().map(|&e| e % r.n()).collect::<Vec<_>>()[..k].to_vec());
        let y = ZnVec::new(r.clone(), vec![1; k]);
        let lhs = code.encode(&x.add(&y).unwrap()).unwrap();
        let rhs = code.encode(&x).unwrap().add(&code.encode(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(code.encode(&x.scale(a)).unwrap(), code.encode(&x).unwrap().scale(a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn minimality_survives_supersets(n in prop::sample::select(vec![4u64, 6, 8, 9]),
                                     extra_raw in prop::collection::vec(prop::collection::vec(0u64..9, 2), 1..4)) {
        let r = RingSpec::new(n).unwrap();
        let base = match r.shape() {
            zncodes::ring::RingShape::PrimePower { p, l } =>
                zncodes::constructions::lambda0_prime_power(p, l, 2).unwrap(),
            zncodes::ring::RingShape::TwoPrimes { p1, p2 } =>
                zncodes::constructions::lambda0_two_primes(p1, p2, 2).unwrap(),
            zncodes::ring::RingShape::General => unreachable!(),
        };
        prop_assert!(is_minimal_code(&LinearCode::new(base.clone()).unwrap(), DEFAULT_THRESHOLD, false).unwrap().verdict);
        let extra = to_vecs(&r, &extra_raw);
        let bigger = base.with_appended(&extra).unwrap();
        prop_assert!(is_minimal_code(&LinearCode::new(bigger).unwrap(), DEFAULT_THRESHOLD, false).unwrap().verdict);
    }

    #[test]
    fn verdicts_ignore_duplicates_and_unit_scaling((r, k, raw) in ring_and_vectors(2, 4),
                                                   pick in any::<prop::sample::Index>()) {
        let cols = to_vecs(&r, &raw);
        let Ok(lam) = ColumnMultiset::new(r.clone(), k, cols) else {
            return Ok(());
        };
        let code = LinearCode::new(lam.clone()).unwrap();
        let verdict = is_minimal_code(&code, DEFAULT_THRESHOLD, false).unwrap().verdict;

        // duplicate one column
        let dup_col = lam.columns()[pick.index(lam.m())].clone();
        let dup = lam.with_appended(std::slice::from_ref(&dup_col)).unwrap();
        let dup_verdict = is_minimal_code(&LinearCode::new(dup).unwrap(), DEFAULT_THRESHOLD, false).unwrap().verdict;
        prop_assert_eq!(verdict, dup_verdict);

        // scale one column by a unit
        let u = *r.units().last().unwrap();
        let mut scaled_cols: Vec<ZnVec> = lam.columns().to_vec();
        let i = pick.index(scaled_cols.len());
        scaled_cols[i] = scaled_cols[i].scale(u);
        let scaled = ColumnMultiset::new(r.clone(), k, scaled_cols).unwrap();
        let scaled_verdict = is_minimal_code(&LinearCode::new(scaled).unwrap(), DEFAULT_THRESHOLD, false).unwrap().verdict;
        prop_assert_eq!(verdict, scaled_verdict);
    }

    #[test]
    fn codeword_verdicts_are_unit_orbit_invariant((r, k, raw) in ring_and_vectors(2, 4),
                                                  v_raw in prop::collection::vec(1u64..16, 2)) {
        let cols = to_vecs(&r, &raw);
        let Ok(lam) = ColumnMultiset::new(r.clone(), k, cols) else {
            return Ok(());
        };
        let code = LinearCode::new(lam).unwrap();
        let v = ZnVec::new(r.clone(), v_raw[..k].to_vec());
        if v.is_zero() {
            return Ok(());
        }
        let base = zncodes::code::is_minimal_codeword(&v, &code).unwrap().verdict;
        for u in r.units() {
            let w = v.scale(u);
            prop_assert_eq!(zncodes::code::is_minimal_codeword(&w, &code).unwrap().verdict, base);
        }
    }
}
