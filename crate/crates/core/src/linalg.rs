//! Vectors, matrices and canonically-represented submodules of Z_n^k.
//!
//! Submodules are stored in Howell normal form. Over Z_n a Hermite-style
//! echelon form is not unique per submodule; the Howell form's closure
//! property (every span element with a zero prefix lies in the span of the
//! later rows) restores uniqueness, so set equality of submodules reduces to
//! syntactic equality of the canonical matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{egcd, RingSpec};

/// Default cap on how many elements an enumeration may produce.
pub const DEFAULT_THRESHOLD: u128 = 1_000_000;

/// A vector in Z_n^k with entries reduced to [0, n).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZnVec {
    ring: RingSpec,
    entries: Vec<u64>,
}

// serialized as the bare entry list; the ambient ring travels separately in
// every report that contains vectors
impl Serialize for ZnVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl ZnVec {
    pub fn new(ring: RingSpec, entries: Vec<u64>) -> Self {
        let n = ring.n();
        let entries = entries.into_iter().map(|e| e % n).collect();
        ZnVec { ring, entries }
    }

    pub fn from_signed(ring: RingSpec, entries: &[i128]) -> Self {
        let entries = entries.iter().map(|&e| ring.reduce(e)).collect();
        ZnVec { ring, entries }
    }

    pub fn zero(ring: RingSpec, k: usize) -> Self {
        ZnVec {
            ring,
            entries: vec![0; k],
        }
    }

    /// Standard basis vector e_i (0-based index).
    pub fn basis(ring: RingSpec, k: usize, i: usize) -> Self {
        let mut entries = vec![0; k];
        entries[i] = 1 % ring.n();
        ZnVec { ring, entries }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> u64 {
        self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn check_compat(&self, other: &ZnVec) -> Result<()> {
        if self.ring.n() != other.ring.n() {
            return Err(Error::RingMismatch(self.ring.n(), other.ring.n()));
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ZnVec) -> Result<ZnVec> {
        self.check_compat(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.ring.add(a, b))
            .collect();
        Ok(ZnVec {
            ring: self.ring.clone(),
            entries,
        })
    }

    pub fn scale(&self, a: u64) -> ZnVec {
        let entries = self.entries.iter().map(|&e| self.ring.mul(a, e)).collect();
        ZnVec {
            ring: self.ring.clone(),
            entries,
        }
    }

    pub fn inner_product(&self, other: &ZnVec) -> Result<u64> {
        self.check_compat(other)?;
        let mut acc = 0u64;
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            acc = self.ring.add(acc, self.ring.mul(a, b));
        }
        Ok(acc)
    }

    /// Indices of nonzero coordinates, 0-based.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support as a bitmask; requires length <= 64.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.len() <= 64);
        self.entries
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, &e)| if e != 0 { m | (1 << i) } else { m })
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    pub fn distance(&self, other: &ZnVec) -> Result<usize> {
        self.check_compat(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// True iff Supp(small) is contained in Supp(self).
    pub fn covers(&self, small: &ZnVec) -> Result<bool> {
        self.check_compat(small)?;
        Ok(self
            .entries
            .iter()
            .zip(&small.entries)
            .all(|(&big, &sm)| sm == 0 || big != 0))
    }
}

impl std::fmt::Display for ZnVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A rectangular matrix over Z_n, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZnMatrix {
    ring: RingSpec,
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

impl ZnMatrix {
    pub fn from_rows(ring: RingSpec, ncols: usize, rows: Vec<ZnVec>) -> Result<Self> {
        let mut raw = Vec::with_capacity(rows.len());
        for r in rows {
            if r.ring().n() != ring.n() {
                return Err(Error::RingMismatch(ring.n(), r.ring().n()));
            }
            if r.len() != ncols {
                return Err(Error::LengthMismatch(ncols, r.len()));
            }
            raw.push(r.entries().to_vec());
        }
        Ok(ZnMatrix {
            ring,
            ncols,
            rows: raw,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn raw_rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> ZnVec {
        ZnVec::new(self.ring.clone(), self.rows[i].clone())
    }
}

/// A submodule of Z_n^k, uniquely represented by its Howell-form generator
/// matrix (zero rows removed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Submodule {
    ring: RingSpec,
    ambient: usize,
    canon: Vec<Vec<u64>>,
    pivots: Vec<(usize, u64)>,
    cardinality: u128,
}

fn row_is_zero(r: &[u64]) -> bool {
    r.iter().all(|&e| e == 0)
}

fn row_combine(n: u64, a: &[u64], ca: i128, b: &[u64], cb: i128) -> Vec<u64> {
    let n128 = n as i128;
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (ca * x as i128 + cb * y as i128).rem_euclid(n128) as u64)
        .collect()
}

fn row_scale(ring: &RingSpec, r: &[u64], c: u64) -> Vec<u64> {
    r.iter().map(|&x| ring.mul(c, x)).collect()
}

/// Howell normal form of the row span. Pivot columns strictly increase, each
/// pivot is the positive divisor of n generating its leading ideal, entries
/// above a pivot are reduced into [0, pivot), and annihilator multiples of
/// every pivot row are folded back in (the Howell closure).
fn howell_raw(ring: &RingSpec, ambient: usize, rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = ring.n();
    let mut pending: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&e| e % n).collect::<Vec<u64>>())
        .filter(|r| !row_is_zero(r))
        .collect();
    let mut canon: Vec<Vec<u64>> = Vec::new();

    for col in 0..ambient {
        let mut with: Vec<Vec<u64>> = Vec::new();
        let mut rest: Vec<Vec<u64>> = Vec::new();
        for r in pending.drain(..) {
            if r[col] != 0 {
                with.push(r);
            } else {
                rest.push(r);
            }
        }
        pending = rest;
        let Some(mut piv) = with.pop() else { continue };
        for r in with {
            let a = piv[col] as i128;
            let b = r[col] as i128;
            let (g, s, t) = egcd(a, b);
            let combined = row_combine(n, &piv, s, &r, t);
            let eliminated = row_combine(n, &r, a / g, &piv, -(b / g));
            debug_assert_eq!(eliminated[col], 0);
            piv = combined;
            if !row_is_zero(&eliminated) {
                pending.push(eliminated);
            }
        }
        let d = num_integer::gcd(piv[col], n);
        if piv[col] != d {
            let u = ring.associate_unit(piv[col]);
            piv = row_scale(ring, &piv, u);
        }
        debug_assert_eq!(piv[col], d);
        if d > 1 {
            let ann = row_scale(ring, &piv, n / d);
            debug_assert_eq!(ann[col], 0);
            if !row_is_zero(&ann) {
                pending.push(ann);
            }
        }
        canon.push(piv);
    }

    // reduce entries above each pivot into [0, pivot)
    for j in 0..canon.len() {
        let cj = (0..ambient).find(|&c| canon[j][c] != 0).unwrap();
        let dj = canon[j][cj];
        for i in 0..j {
            let q = canon[i][cj] / dj;
            if q > 0 {
                canon[i] = row_combine(n, &canon[i], 1, &canon[j], -(q as i128));
            }
            debug_assert!(canon[i][cj] < dj);
        }
    }
    canon
}

impl Submodule {
    fn from_raw(ring: RingSpec, ambient: usize, rows: &[Vec<u64>]) -> Submodule {
        let canon = howell_raw(&ring, ambient, rows);
        let n = ring.n();
        let pivots: Vec<(usize, u64)> = canon
            .iter()
            .map(|r| {
                let c = (0..ambient).find(|&c| r[c] != 0).unwrap();
                (c, r[c])
            })
            .collect();
        let cardinality = pivots
            .iter()
            .fold(1u128, |acc, &(_, d)| acc * (n / d) as u128);
        Submodule {
            ring,
            ambient,
            canon,
            pivots,
            cardinality,
        }
    }

    pub fn from_generators(ring: RingSpec, ambient: usize, gens: &[ZnVec]) -> Result<Submodule> {
        let mut raw = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring().n() != ring.n() {
                return Err(Error::RingMismatch(ring.n(), g.ring().n()));
            }
            if g.len() != ambient {
                return Err(Error::LengthMismatch(ambient, g.len()));
            }
            raw.push(g.entries().to_vec());
        }
        Ok(Submodule::from_raw(ring, ambient, &raw))
    }

    pub fn zero(ring: RingSpec, ambient: usize) -> Submodule {
        Submodule::from_raw(ring, ambient, &[])
    }

    pub fn full(ring: RingSpec, ambient: usize) -> Submodule {
        let rows: Vec<Vec<u64>> = (0..ambient)
            .map(|i| {
                let mut r = vec![0; ambient];
                r[i] = 1 % ring.n();
                r
            })
            .collect();
        Submodule::from_raw(ring, ambient, &rows)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn canon_raw(&self) -> &[Vec<u64>] {
        &self.canon
    }

    pub fn canon_rows(&self) -> Vec<ZnVec> {
        self.canon
            .iter()
            .map(|r| ZnVec::new(self.ring.clone(), r.clone()))
            .collect()
    }

    pub fn pivots(&self) -> &[(usize, u64)] {
        &self.pivots
    }

    pub fn cardinality(&self) -> u128 {
        self.cardinality
    }

    pub fn is_zero(&self) -> bool {
        self.canon.is_empty()
    }

    /// Set equality, decided by canonical-form equality.
    pub fn equal(&self, other: &Submodule) -> Result<bool> {
        if self.ring.n() != other.ring.n() {
            return Err(Error::RingMismatch(self.ring.n(), other.ring.n()));
        }
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(self.canon == other.canon)
    }

    /// Membership by reduction against the canonical rows.
    pub fn contains(&self, x: &ZnVec) -> Result<bool> {
        if x.ring().n() != self.ring.n() {
            return Err(Error::RingMismatch(self.ring.n(), x.ring().n()));
        }
        if x.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, x.len()));
        }
        let n = self.ring.n();
        let mut v: Vec<u64> = x.entries().to_vec();
        for (row, &(c, d)) in self.canon.iter().zip(&self.pivots) {
            if v[c] % d != 0 {
                return Ok(false);
            }
            let q = v[c] / d;
            if q > 0 {
                v = row_combine(n, &v, 1, row, -(q as i128));
            }
        }
        Ok(row_is_zero(&v))
    }

    /// All elements, sorted lexicographically.
    pub fn enumerate(&self, threshold: u128) -> Result<Vec<ZnVec>> {
        if self.cardinality > threshold {
            return Err(Error::ThresholdExceeded {
                cardinality: self.cardinality,
                threshold,
            });
        }
        let n = self.ring.n();
        let radices: Vec<u64> = self.pivots.iter().map(|&(_, d)| n / d).collect();
        let mut out: Vec<Vec<u64>> = Vec::with_capacity(self.cardinality as usize);
        let mut coeffs = vec![0u64; self.canon.len()];
        loop {
            let mut elem = vec![0u64; self.ambient];
            for (c, row) in coeffs.iter().zip(&self.canon) {
                for (e, &r) in elem.iter_mut().zip(row) {
                    *e = self.ring.add(*e, self.ring.mul(*c, r));
                }
            }
            out.push(elem);
            // odometer over the coefficient ranges
            let mut i = 0;
            loop {
                if i == coeffs.len() {
                    break;
                }
                coeffs[i] += 1;
                if coeffs[i] < radices[i] {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == coeffs.len() {
                break;
            }
        }
        out.sort_unstable();
        debug_assert_eq!(out.len() as u128, self.cardinality);
        Ok(out
            .into_iter()
            .map(|e| ZnVec::new(self.ring.clone(), e))
            .collect())
    }
}

/// Canonicalize the row span of a matrix.
pub fn howell_form(m: &ZnMatrix) -> Submodule {
    Submodule::from_raw(m.ring().clone(), m.ncols(), m.raw_rows())
}

/// The cyclic submodule generated by a single vector.
pub fn span_of(v: &ZnVec) -> Submodule {
    Submodule::from_raw(v.ring().clone(), v.len(), &[v.entries().to_vec()])
}

/// The orthogonal module {x : <x, w> = 0 for every constraint w}.
///
/// Computed by Howell-reducing the augmented rows [w_1[i] .. w_r[i] | e_i];
/// the Howell closure guarantees that the rows whose constraint prefix is
/// zero generate exactly the solution set.
pub fn kernel(ring: &RingSpec, ambient: usize, constraints: &[ZnVec]) -> Result<Submodule> {
    let r = constraints.len();
    for w in constraints {
        if w.ring().n() != ring.n() {
            return Err(Error::RingMismatch(ring.n(), w.ring().n()));
        }
        if w.len() != ambient {
            return Err(Error::AmbientMismatch(ambient, w.len()));
        }
    }
    if r == 0 {
        return Ok(Submodule::full(ring.clone(), ambient));
    }
    let one = 1 % ring.n();
    let aug: Vec<Vec<u64>> = (0..ambient)
        .map(|i| {
            let mut row = Vec::with_capacity(r + ambient);
            for w in constraints {
                row.push(w.get(i));
            }
            let mut tail = vec![0u64; ambient];
            tail[i] = one;
            row.extend(tail);
            row
        })
        .collect();
    let h = howell_raw(ring, r + ambient, &aug);
    let gens: Vec<Vec<u64>> = h
        .into_iter()
        .filter(|row| row[..r].iter().all(|&e| e == 0))
        .map(|row| row[r..].to_vec())
        .collect();
    Ok(Submodule::from_raw(ring.clone(), ambient, &gens))
}

/// True iff the only Z_n-combination of the rows equal to zero has all
/// coefficients zero. Decided through the syzygy module of the rows.
pub fn is_linearly_independent(rows: &[ZnVec]) -> bool {
    let Some(first) = rows.first() else {
        return true;
    };
    let ring = first.ring().clone();
    let k = first.len();
    let t = rows.len();
    let one = 1 % ring.n();
    let aug: Vec<Vec<u64>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.entries().to_vec();
            let mut tail = vec![0u64; t];
            tail[i] = one;
            r.extend(tail);
            r
        })
        .collect();
    let h = howell_raw(&ring, k + t, &aug);
    !h.iter().any(|row| row[..k].iter().all(|&e| e == 0))
}

/// All n^k vectors of Z_n^k in lexicographic order.
pub fn enumerate_vectors(ring: &RingSpec, k: usize, threshold: u128) -> Result<Vec<ZnVec>> {
    let n = ring.n();
    let total = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > threshold {
        return Err(Error::ThresholdExceeded {
            cardinality: total,
            threshold,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut cur = vec![0u64; k];
    loop {
        out.push(ZnVec::new(ring.clone(), cur.clone()));
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < n {
                break;
            }
            cur[i] = 0;
            if i == 0 {
                return Ok(out);
            }
        }
    }
}
