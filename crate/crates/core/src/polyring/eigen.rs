//! Generalized eigendecomposition of multiplication operators.
//!
//! Eigenvalues are sought only in the ground field: by scanning GF(p), or by
//! a rational-root search on the characteristic polynomial over Q. Spaces
//! are kernels of (M - lambda)^n. An `exhaustive` flag reports whether the
//! found spaces fill the whole space; eigenvalues living in an extension
//! field make the flag false rather than raising an error.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{Characteristic, FieldElement, Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// (eigenvalue, generalized eigenspace) pairs, dimension > 0 each.
    pub pairs: Vec<(FieldElement, Subspace)>,
    /// True when the eigenspace dimensions sum to the full dimension.
    pub exhaustive: bool,
}

impl EigenDecomposition {
    pub fn total_dim(&self) -> usize {
        self.pairs.iter().map(|(_, s)| s.dim()).sum()
    }
}

/// Decomposes the space into generalized eigenspaces ker (M - lambda)^n for
/// eigenvalues lambda found in the ground field.
pub fn generalized_eigendecomposition(m: &Matrix) -> EigenDecomposition {
    assert!(m.is_square(), "eigendecomposition of a non-square matrix");
    let n = m.rows();
    let ch = m.characteristic();
    let candidates: Vec<FieldElement> = if ch.is_rational() {
        rational_eigenvalue_candidates(m)
    } else {
        (0..ch.0)
            .map(|v| FieldElement::from_integer(v as i64, ch))
            .collect()
    };
    let mut pairs = Vec::new();
    for lambda in candidates {
        let shifted = m.sub_matrix(&Matrix::identity(n, ch).scale(&lambda));
        let powered = shifted.pow(n.max(1));
        let kernel = powered.kernel_basis();
        if !kernel.is_empty() {
            pairs.push((lambda, Subspace::from_vectors(&kernel, n, ch)));
        }
    }
    let exhaustive = pairs.iter().map(|(_, s)| s.dim()).sum::<usize>() == n;
    EigenDecomposition { pairs, exhaustive }
}

/// Characteristic polynomial over Q by the Faddeev-LeVerrier recurrence.
/// Returns coefficients c_0..c_n with c_n = 1 (ascending powers).
pub fn rational_char_poly(m: &Matrix) -> Vec<FieldElement> {
    assert!(m.is_square());
    assert!(m.characteristic().is_rational());
    let n = m.rows();
    let ch = Characteristic::RATIONAL;
    let mut coeffs = vec![FieldElement::zero(ch); n + 1];
    coeffs[n] = FieldElement::one(ch);
    let mut aux = Matrix::identity(n, ch);
    for k in 1..=n {
        let am = m.mat_mul(&aux);
        let c_k = am
            .trace()
            .mul(&FieldElement::from_rational(-1, k as i64).expect("k > 0"));
        coeffs[n - k] = c_k.clone();
        if k < n {
            aux = am.add_matrix(&Matrix::identity(n, ch).scale(&c_k));
        }
    }
    coeffs
}

fn as_rational(f: &FieldElement) -> BigRational {
    match f {
        FieldElement::Rational(r) => (**r).clone(),
        FieldElement::Prime { .. } => unreachable!("rational context"),
    }
}

/// Rational roots of the characteristic polynomial, via the rational root
/// theorem after clearing denominators. Divisor enumeration uses trial
/// division up to 10^6 plus the unfactored cofactor; a missed root only
/// degrades the exhaustiveness flag downstream, never correctness.
fn rational_eigenvalue_candidates(m: &Matrix) -> Vec<FieldElement> {
    let coeffs = rational_char_poly(m);
    rational_roots(&coeffs)
}

/// Rational roots of a polynomial with rational coefficients (ascending).
pub fn rational_roots(coeffs: &[FieldElement]) -> Vec<FieldElement> {
    let mut rats: Vec<BigRational> = coeffs.iter().map(as_rational).collect();
    while rats.last().is_some_and(|c| c.is_zero()) {
        rats.pop();
    }
    if rats.len() <= 1 {
        return Vec::new();
    }
    let mut roots: Vec<BigRational> = Vec::new();
    // Strip powers of lambda: zero constant terms mean 0 is a root.
    let mut start = 0;
    while start < rats.len() && rats[start].is_zero() {
        start += 1;
    }
    if start > 0 {
        roots.push(BigRational::zero());
        rats.drain(..start);
    }
    if rats.len() > 1 {
        // Clear denominators to an integer polynomial.
        let mut lcm = BigInt::one();
        for c in &rats {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = rats.iter().map(|c| (c * &lcm).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let ps = bounded_divisors(&a0, 4096);
        let qs = bounded_divisors(&an, 4096);
        for p in &ps {
            for q in &qs {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                    if roots.contains(&cand) {
                        continue;
                    }
                    let mut acc = BigRational::zero();
                    for c in rats.iter().rev() {
                        acc = acc * &cand + c;
                    }
                    if acc.is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
        .into_iter()
        .map(|r| FieldElement::Rational(Box::new(r)))
        .collect()
}

/// Positive divisors of |n| discovered through trial division up to 10^6;
/// any remaining cofactor participates as a single extra factor. Capped.
fn bounded_divisors(n: &BigInt, cap: usize) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= 1_000_000 {
        let bd = BigInt::from(d);
        if (&n % &bd).is_zero() {
            let mut mult = 0;
            while (&n % &bd).is_zero() {
                n /= &bd;
                mult += 1;
            }
            factors.push((bd, mult));
        }
        if n.is_one() {
            break;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut divisors = vec![BigInt::one()];
    for (p, mult) in factors {
        let mut extended = Vec::new();
        for existing in &divisors {
            let mut power = BigInt::one();
            for _ in 0..=mult {
                extended.push(existing * &power);
                power *= &p;
                if extended.len() + divisors.len() > cap {
                    break;
                }
            }
        }
        divisors = extended;
        divisors.sort();
        divisors.dedup();
        if divisors.len() > cap {
            divisors.truncate(cap);
        }
    }
    divisors
}

#[cfg(test)]
mod tests {
    use super::*;

    const GF7: Characteristic = Characteristic(7);
    const Q: Characteristic = Characteristic::RATIONAL;

    #[test]
    fn identity_has_single_eigenvalue_one() {
        let m = Matrix::identity(2, GF7);
        let d = generalized_eigendecomposition(&m);
        assert_eq!(d.pairs.len(), 1);
        assert_eq!(d.pairs[0].0, FieldElement::one(GF7));
        assert_eq!(d.pairs[0].1.dim(), 2);
        assert!(d.exhaustive);
    }

    #[test]
    fn nilpotent_has_full_generalized_zero_space() {
        let m = Matrix::from_integers(&[&[0, 1], &[0, 0]], GF7);
        let d = generalized_eigendecomposition(&m);
        assert_eq!(d.pairs.len(), 1);
        assert!(d.pairs[0].0.is_zero());
        assert_eq!(d.pairs[0].1.dim(), 2);
        assert!(d.exhaustive);
    }

    #[test]
    fn eigenspaces_are_invariant() {
        let m = Matrix::from_integers(&[&[3, 1, 0], &[0, 3, 0], &[0, 0, 5]], GF7);
        let d = generalized_eigendecomposition(&m);
        assert!(d.exhaustive);
        for (_, space) in &d.pairs {
            for v in space.basis() {
                let w = m.mat_vec(v);
                assert!(space.contains(&w));
            }
        }
    }

    #[test]
    fn rational_char_poly_of_companion_matrix() {
        // Companion of t^2 - 3t + 2 = (t-1)(t-2).
        let m = Matrix::from_integers(&[&[0, -2], &[1, 3]], Q);
        let coeffs = rational_char_poly(&m);
        assert_eq!(coeffs[0], FieldElement::from_integer(2, Q));
        assert_eq!(coeffs[1], FieldElement::from_integer(-3, Q));
        assert_eq!(coeffs[2], FieldElement::one(Q));
        let d = generalized_eigendecomposition(&m);
        assert_eq!(d.pairs.len(), 2);
        assert!(d.exhaustive);
    }

    #[test]
    fn irrational_eigenvalues_flag_nonexhaustive() {
        // t^2 - 2: no rational roots.
        let m = Matrix::from_integers(&[&[0, 2], &[1, 0]], Q);
        let d = generalized_eigendecomposition(&m);
        assert!(d.pairs.is_empty());
        assert!(!d.exhaustive);
    }
}
