//! Distinguishing and matching algebras: transport-invariant fingerprints
//! over Q, and an exhaustive transport-of-structure search over GL_n(F_p)
//! for small n and p.
//!
//! Finite-field verdicts are evidence, not proofs, about the characteristic
//! zero question: isomorphism over the complex numbers neither implies nor
//! is implied by isomorphism over F_p. Reports say so explicitly.

use crate::algebra::{HomTrialgebra, OpSelector, TableLine};
use crate::linalg::{scalar, Matrix, Scalar};
use crate::subspaces::{
    center, centroid_rows, derivation_system, CentralizerProducts, SignConvention,
};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

/// Primes supported by the finite-field proxy.
pub const SUPPORTED_PRIMES: [u32; 3] = [2, 3, 5];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("prime {0} is not one of the supported primes 2, 3, 5")]
    UnsupportedPrime(u32),
    #[error("a structure constant has denominator divisible by {0}")]
    BadReduction(u32),
    #[error("algebras have different primes or dimensions")]
    Mismatch,
}

/// A square matrix over F_p, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMat {
    pub p: u32,
    pub n: usize,
    pub entries: Vec<u32>,
}

impl FpMat {
    pub fn new(p: u32, n: usize, entries: Vec<u32>) -> Self {
        assert_eq!(entries.len(), n * n);
        let entries = entries.iter().map(|&e| e % p).collect();
        FpMat { p, n, entries }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FpMat { p, n, entries }
    }

    pub fn at(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.n + c]
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.p, other.p);
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + a * other.at(k, j)) % self.p;
                }
            }
        }
        FpMat {
            p: self.p,
            n,
            entries: out,
        }
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.at(i, j) * v[j])
                    .sum::<u32>()
                    % self.p
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan over F_p, if invertible.
    pub fn inverse(&self) -> Option<FpMat> {
        let n = self.n;
        let p = self.p as u64;
        let mut aug: Vec<Vec<u64>> = (0..n)
            .map(|r| {
                let mut row: Vec<u64> = (0..n).map(|c| self.at(r, c) as u64).collect();
                row.extend((0..n).map(|c| u64::from(c == r)));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| aug[r][col] % p != 0)?;
            aug.swap(col, pivot);
            let inv = mod_inverse(aug[col][col] % p, p)?;
            for x in aug[col].iter_mut() {
                *x = (*x % p) * inv % p;
            }
            for r in 0..n {
                if r != col && aug[r][col] % p != 0 {
                    let f = aug[r][col] % p;
                    for c in 0..2 * n {
                        let sub = f * aug[col][c] % p;
                        aug[r][c] = (aug[r][c] % p + p - sub) % p;
                    }
                }
            }
        }
        let entries = (0..n)
            .flat_map(|r| (n..2 * n).map(move |c| (r, c)))
            .map(|(r, c)| aug[r][c] as u32)
            .collect();
        Some(FpMat {
            p: self.p,
            n,
            entries,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    // p is tiny and prime; Fermat.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    Some(result)
}

/// Iterates every n x n matrix over F_p in lexicographic order over the
/// row-major entry list.
pub fn all_matrices(p: u32, n: usize) -> impl Iterator<Item = FpMat> {
    let total = (p as u64).pow((n * n) as u32);
    (0..total).map(move |mut index| {
        let mut entries = vec![0u32; n * n];
        for slot in entries.iter_mut().rev() {
            *slot = (index % p as u64) as u32;
            index /= p as u64;
        }
        FpMat { p, n, entries }
    })
}

/// A trialgebra with structure constants reduced into F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpAlgebra {
    pub p: u32,
    pub dim: usize,
    /// Tensors in operation order left, right, middle; flattened like
    /// [`crate::algebra::ProductTensor`].
    pub tensors: [Vec<u32>; 3],
    pub alpha: FpMat,
}

fn reduce_scalar(s: &Scalar, p: u32) -> Result<u32, FpError> {
    let pb = BigInt::from(p);
    if (s.denom() % &pb).is_zero() {
        return Err(FpError::BadReduction(p));
    }
    let num = ((s.numer() % &pb) + &pb) % &pb;
    let den = ((s.denom() % &pb) + &pb) % &pb;
    let num = num.to_u64().expect("reduced residue fits");
    let den = den.to_u64().expect("reduced residue fits");
    let inv = mod_inverse(den, p as u64).ok_or(FpError::BadReduction(p))?;
    Ok((num * inv % p as u64) as u32)
}

/// Entrywise reduction of all structure constants and the twist.
pub fn reduce_mod_p(a: &HomTrialgebra, p: u32) -> Result<FpAlgebra, FpError> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(FpError::UnsupportedPrime(p));
    }
    let n = a.dim();
    let mut tensors: [Vec<u32>; 3] = [
        vec![0; n * n * n],
        vec![0; n * n * n],
        vec![0; n * n * n],
    ];
    for (slot, op) in OpSelector::ALL.iter().enumerate() {
        let t = a.tensor(*op);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    tensors[slot][(i * n + j) * n + k] = reduce_scalar(t.at(i, j, k), p)?;
                }
            }
        }
    }
    let mut alpha = vec![0u32; n * n];
    for r in 0..n {
        for c in 0..n {
            alpha[r * n + c] = reduce_scalar(a.alpha().matrix().at(r, c), p)?;
        }
    }
    Ok(FpAlgebra {
        p,
        dim: n,
        tensors,
        alpha: FpMat::new(p, n, alpha),
    })
}

impl FpAlgebra {
    pub fn tensor_at(&self, op: OpSelector, i: usize, j: usize, k: usize) -> u32 {
        let slot = match op {
            OpSelector::Left => 0,
            OpSelector::Right => 1,
            OpSelector::Middle => 2,
        };
        self.tensors[slot][(i * self.dim + j) * self.dim + k]
    }

    /// Bilinear product of F_p coordinate vectors.
    pub fn multiply(&self, op: OpSelector, x: &[u32], y: &[u32]) -> Vec<u32> {
        let n = self.dim;
        let mut out = vec![0u32; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                let coeff = x[i] * y[j] % self.p;
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + coeff * self.tensor_at(op, i, j, k)) % self.p;
                }
            }
        }
        out
    }

    pub fn apply_twist(&self, x: &[u32]) -> Vec<u32> {
        self.alpha.apply(x)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// Transport of structure along an invertible `g`: the unique structure
    /// making `g` an isomorphism from `self` to the result.
    pub fn transport(&self, g: &FpMat) -> FpAlgebra {
        assert_eq!(g.n, self.dim);
        assert_eq!(g.p, self.p);
        let h = g.inverse().expect("transport needs an invertible matrix");
        let n = self.dim;
        let mut tensors: [Vec<u32>; 3] = [
            vec![0; n * n * n],
            vec![0; n * n * n],
            vec![0; n * n * n],
        ];
        for (slot, op) in OpSelector::ALL.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let hi: Vec<u32> = (0..n).map(|s| h.at(s, i)).collect();
                    let hj: Vec<u32> = (0..n).map(|s| h.at(s, j)).collect();
                    let prod = self.multiply(*op, &hi, &hj);
                    let image = g.apply(&prod);
                    for (k, v) in image.iter().enumerate() {
                        tensors[slot][(i * n + j) * n + k] = *v;
                    }
                }
            }
        }
        let alpha = g.mul(&self.alpha).mul(&h);
        FpAlgebra {
            p: self.p,
            dim: n,
            tensors,
            alpha,
        }
    }

    /// Lifts the residue representatives back to an integer-entried
    /// trialgebra, for reuse of the rational row assemblers. Reducing those
    /// rows entrywise mod p yields exactly the F_p constraint system.
    pub fn lift(&self) -> HomTrialgebra {
        let n = self.dim;
        let mut lines = Vec::new();
        for op in OpSelector::ALL {
            for i in 0..n {
                for j in 0..n {
                    let value: Vec<Scalar> = (0..n)
                        .map(|k| scalar(self.tensor_at(op, i, j, k) as i64))
                        .collect();
                    if value.iter().any(|s| !s.is_zero()) {
                        lines.push(TableLine {
                            op,
                            i: i + 1,
                            j: j + 1,
                            value,
                        });
                    }
                }
            }
        }
        let alpha_cols: Vec<(usize, Vec<Scalar>)> = (0..n)
            .map(|i| {
                (
                    i + 1,
                    (0..n).map(|j| scalar(self.alpha.at(j, i) as i64)).collect(),
                )
            })
            .collect();
        HomTrialgebra::from_tables(n, &lines, &alpha_cols, None).expect("lift is well-formed")
    }
}

/// True when `g` carries `a` to `b`: `g ∘ α_a = α_b ∘ g` and
/// `g(x ∘_a y) = g(x) ∘_b g(y)` on all basis pairs and products.
pub fn is_isomorphism(a: &FpAlgebra, b: &FpAlgebra, g: &FpMat) -> bool {
    if g.mul(&a.alpha) != b.alpha.mul(g) {
        return false;
    }
    let n = a.dim;
    for op in OpSelector::ALL {
        for i in 0..n {
            for j in 0..n {
                let lhs = g.apply(&a.multiply(op, &a.basis_vector(i), &a.basis_vector(j)));
                let gi = g.apply(&a.basis_vector(i));
                let gj = g.apply(&a.basis_vector(j));
                if lhs != b.multiply(op, &gi, &gj) {
                    return false;
                }
            }
        }
    }
    true
}

/// Exhaustive isomorphism search over GL_n(F_p), in lexicographic order over
/// matrix entries. Twist compatibility is checked before invertibility since
/// it kills most candidates. The returned witness is the lexicographically
/// least one and is re-verified before returning.
pub fn isomorphic_over_fp(a: &FpAlgebra, b: &FpAlgebra) -> Result<Option<FpMat>, FpError> {
    if a.p != b.p || a.dim != b.dim {
        return Err(FpError::Mismatch);
    }
    for g in all_matrices(a.p, a.dim) {
        if g.mul(&a.alpha) != b.alpha.mul(&g) {
            continue;
        }
        if !g.is_invertible() {
            continue;
        }
        if is_isomorphism(a, b, &g) {
            debug_assert!(is_isomorphism(a, b, &g));
            return Ok(Some(g));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Fingerprints over Q
// ---------------------------------------------------------------------------

/// Transport-invariant integers attached to an algebra; differing
/// fingerprints certify non-isomorphism over any field extension of Q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub rank_alpha: usize,
    /// Monic characteristic polynomial of the twist, leading coefficient
    /// first, as exact rational strings.
    pub charpoly_alpha: Vec<String>,
    pub dim_der_minus: usize,
    pub dim_der_plus: usize,
    pub dim_centroid: usize,
    pub dim_square: usize,
    pub dim_center: usize,
}

/// Characteristic polynomial coefficients by the trace recursion, exact over
/// Q: returns `[1, c_1, ..., c_n]` with `det(xI - A) = x^n + c_1 x^{n-1} + ...`.
fn charpoly(a: &Matrix) -> Vec<Scalar> {
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[0] = num_traits::One::one();
    let mut m = Matrix::zero(n, n);
    for k in 1..=n {
        // M_k = A (M_{k-1} + c_{k-1} I)
        let mut shifted = m.clone();
        for i in 0..n {
            *shifted.at_mut(i, i) += &coeffs[k - 1];
        }
        m = a.matmul(&shifted).expect("square");
        let trace = (0..n).fold(Scalar::zero(), |acc, i| acc + m.at(i, i));
        coeffs[k] = -trace / scalar(k as i64);
    }
    coeffs
}

/// Computes every fingerprint component exactly over Q.
pub fn fingerprint(a: &HomTrialgebra) -> Fingerprint {
    let n = a.dim();
    let alpha = a.alpha().matrix();
    let square = crate::subspaces::algebra_square(a);
    let der_minus = derivation_system(a, SignConvention::Minus);
    let der_plus = derivation_system(a, SignConvention::Plus);
    let cent = centroid_rows(a);
    Fingerprint {
        dim: n,
        rank_alpha: alpha.rank(),
        charpoly_alpha: charpoly(alpha).iter().map(|c| c.to_string()).collect(),
        dim_der_minus: n * n - der_minus.rank(),
        dim_der_plus: n * n - der_plus.rank(),
        dim_centroid: n * n - cent.rank(),
        dim_square: square.dimension(),
        dim_center: center(a, CentralizerProducts { include_middle: false }).dimension(),
    }
}

// ---------------------------------------------------------------------------
// F_p analogue dimensions
// ---------------------------------------------------------------------------

/// Subspace dimensions of the derivation/centroid systems solved over F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FpDims {
    pub der_minus: usize,
    pub der_plus: usize,
    pub centroid: usize,
}

fn matrix_rows_mod_p(m: &Matrix, p: u32) -> Vec<Vec<u32>> {
    let pb = BigInt::from(p);
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|s| {
                    debug_assert!(s.denom().is_one(), "assembled rows must be integral");
                    let v = ((s.numer() % &pb) + &pb) % &pb;
                    v.to_u32().expect("residue fits")
                })
                .collect()
        })
        .collect()
}

/// Rank of a matrix over F_p by elimination.
pub fn fp_rank(rows: &[Vec<u32>], p: u32) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let p64 = p as u64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as u64 % p64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], p64).expect("nonzero pivot");
        for c in col..cols {
            m[rank][c] = m[rank][c] * inv % p64;
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..cols {
                    let sub = f * m[rank][c] % p64;
                    m[r][c] = (m[r][c] + p64 - sub) % p64;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Assembles the same constraint systems as the rational path (through the
/// integral lift) and solves them over F_p.
pub fn fp_subspace_dims(fp: &FpAlgebra) -> FpDims {
    let lifted = fp.lift();
    let n = fp.dim;
    let der_minus = matrix_rows_mod_p(&derivation_system(&lifted, SignConvention::Minus), fp.p);
    let der_plus = matrix_rows_mod_p(&derivation_system(&lifted, SignConvention::Plus), fp.p);
    let cent = matrix_rows_mod_p(&centroid_rows(&lifted), fp.p);
    FpDims {
        der_minus: n * n - fp_rank(&der_minus, fp.p),
        der_plus: n * n - fp_rank(&der_plus, fp.p),
        centroid: n * n - fp_rank(&cent, fp.p),
    }
}

// ---------------------------------------------------------------------------
// Pairwise report
// ---------------------------------------------------------------------------

/// Verdict for one ordered pair of algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum PairVerdict {
    /// Fingerprints over Q differ; no search needed.
    DistinctByFingerprint,
    /// Exhaustive search found this witness over F_p.
    FpIsomorphic { witness: Vec<Vec<u32>> },
    /// Exhaustive search found no isomorphism over F_p.
    FpDistinct,
    /// The pair could not be compared over F_p.
    Skipped { reason: String },
}

/// Pairwise comparison of a family of algebras sharing a dimension.
#[derive(Debug, Clone, Serialize)]
pub struct PairwiseReport {
    pub prime: u32,
    pub labels: Vec<String>,
    pub verdicts: Vec<Vec<PairVerdict>>,
    /// Stated caveat: F_p verdicts are evidence, not proofs, over C.
    pub caveat: String,
}

pub fn pairwise_report(algebras: &[HomTrialgebra], p: u32) -> Result<PairwiseReport, FpError> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(FpError::UnsupportedPrime(p));
    }
    let labels: Vec<String> = algebras
        .iter()
        .enumerate()
        .map(|(i, a)| a.label().map(str::to_string).unwrap_or_else(|| format!("#{i}")))
        .collect();
    let fingerprints: Vec<Fingerprint> = algebras.iter().map(fingerprint).collect();
    let reductions: Vec<Result<FpAlgebra, FpError>> =
        algebras.iter().map(|a| reduce_mod_p(a, p)).collect();
    let mut verdicts = Vec::new();
    for i in 0..algebras.len() {
        let mut row = Vec::new();
        for j in 0..algebras.len() {
            let verdict = if fingerprints[i] != fingerprints[j] {
                PairVerdict::DistinctByFingerprint
            } else {
                match (&reductions[i], &reductions[j]) {
                    (Ok(ai), Ok(aj)) => match isomorphic_over_fp(ai, aj)? {
                        Some(g) => PairVerdict::FpIsomorphic {
                            witness: (0..g.n)
                                .map(|r| (0..g.n).map(|c| g.at(r, c)).collect())
                                .collect(),
                        },
                        None => PairVerdict::FpDistinct,
                    },
                    (Err(e), _) | (_, Err(e)) => PairVerdict::Skipped {
                        reason: e.to_string(),
                    },
                }
            };
            row.push(verdict);
        }
        verdicts.push(row);
    }
    Ok(PairwiseReport {
        prime: p,
        labels,
        verdicts,
        caveat: "finite-field verdicts are evidence only: isomorphism over F_p neither implies nor is implied by isomorphism in characteristic zero".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{sample_passing, sample_two_dim};
    use crate::algebra::{ProductTensor, TwistMap};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn gl_orders_match_the_formulas() {
        let count = |p: u32, n: usize| {
            all_matrices(p, n)
                .filter(FpMat::is_invertible)
                .count()
        };
        assert_eq!(count(2, 2), 6);
        assert_eq!(count(3, 2), 48);
        assert_eq!(count(2, 3), 168);
    }

    #[test]
    fn reduce_mod_p_examples() {
        let a = sample_two_dim();
        let f3 = reduce_mod_p(&a, 3).unwrap();
        // -1 becomes 2 mod 3.
        assert_eq!(f3.tensor_at(OpSelector::Left, 0, 0, 0), 2);
        let f2 = reduce_mod_p(&a, 2).unwrap();
        assert_eq!(f2.tensor_at(OpSelector::Left, 0, 0, 0), 1);
        // Halves do not reduce mod 2.
        let mut t = ProductTensor::zero(2);
        *t.at_mut(0, 0, 0) = crate::linalg::scalar_ratio(3, 2);
        let bad = HomTrialgebra::new(
            t,
            ProductTensor::zero(2),
            ProductTensor::zero(2),
            TwistMap::identity(2),
            None,
        )
        .unwrap();
        assert_eq!(reduce_mod_p(&bad, 2), Err(FpError::BadReduction(2)));
        assert!(reduce_mod_p(&bad, 3).is_ok());
    }

    #[test]
    fn self_isomorphism_is_the_identity() {
        let a = reduce_mod_p(&sample_passing(), 3).unwrap();
        let g = isomorphic_over_fp(&a, &a).unwrap().expect("reflexive");
        assert_eq!(g, FpMat::identity(3, 2));
    }

    #[test]
    fn transported_algebra_is_isomorphic() {
        let a = reduce_mod_p(&sample_passing(), 3).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..5 {
            let g = loop {
                let entries: Vec<u32> = (0..4).map(|_| rng.gen_range(0..3)).collect();
                let g = FpMat::new(3, 2, entries);
                if g.is_invertible() {
                    break g;
                }
            };
            let b = a.transport(&g);
            assert!(is_isomorphism(&a, &b, &g));
            let w = isomorphic_over_fp(&a, &b).unwrap().expect("transported");
            assert!(is_isomorphism(&a, &b, &w));
            // Symmetry on the domain.
            assert!(isomorphic_over_fp(&b, &a).unwrap().is_some());
        }
    }

    #[test]
    fn charpoly_of_companion_like_matrices() {
        // diag(1, -1): x^2 - ... = x^2 + 0x - 1.
        let m = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let c = charpoly(&m);
        assert_eq!(c, vec![scalar(1), scalar(0), scalar(-1)]);
        // Nilpotent Jordan block: x^3.
        let m = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(charpoly(&m), vec![scalar(1), scalar(0), scalar(0), scalar(0)]);
    }

    #[test]
    fn fingerprint_of_zero_algebra_with_identity_twist() {
        let id_cols = vec![
            (1, vec![scalar(1), scalar(0)]),
            (2, vec![scalar(0), scalar(1)]),
        ];
        let a = HomTrialgebra::from_tables(2, &[], &id_cols, None).unwrap();
        let f = fingerprint(&a);
        assert_eq!(f.dim_der_minus, 4);
        assert_eq!(f.dim_der_plus, 4);
        assert_eq!(f.dim_centroid, 4);
        assert_eq!(f.dim_square, 0);
        assert_eq!(f.dim_center, 2);
        assert_eq!(f.rank_alpha, 2);
    }

    #[test]
    fn fp_dims_match_rational_dims_on_fixture() {
        let a = sample_passing();
        let fp = reduce_mod_p(&a, 3).unwrap();
        let dims = fp_subspace_dims(&fp);
        assert_eq!(dims.der_minus, 1);
        assert_eq!(dims.centroid, 2);
    }

    #[test]
    fn pairwise_on_singleton() {
        let report = pairwise_report(&[sample_passing()], 3).unwrap();
        assert_eq!(report.verdicts.len(), 1);
        assert!(matches!(
            report.verdicts[0][0],
            PairVerdict::FpIsomorphic { .. }
        ));
    }

    #[test]
    fn everything_is_immutable_and_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::algebra::HomTrialgebra>();
        assert_send_sync::<crate::subspaces::SubspaceBasis>();
        assert_send_sync::<FpAlgebra>();
        assert_send_sync::<Fingerprint>();
        assert_send_sync::<PairwiseReport>();
    }
}
