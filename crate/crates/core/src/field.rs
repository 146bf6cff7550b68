//! Exact arithmetic over prime fields GF(p) and arbitrary-precision
//! rationals, plus the dense linear algebra used by every other module.
//!
//! A characteristic of 0 always means exact `BigRational` arithmetic; there
//! is deliberately no floating-point fallback, since every downstream
//! verdict is an exact certificate. Only prime fields are supported (no
//! GF(p^k)), which covers every instance the toolkit certifies.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field characteristic: a prime p for GF(p), or 0 for the rationals.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Characteristic(pub u64);

impl Characteristic {
    pub const RATIONAL: Characteristic = Characteristic(0);

    pub fn is_rational(self) -> bool {
        self.0 == 0
    }

    /// Checks that the value is 0 or a prime.
    pub fn validate(self) -> Result<Self, FieldError> {
        if self.0 == 0 || is_prime(self.0) {
            Ok(self)
        } else {
            Err(FieldError::NotPrime(self.0))
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "Q")
        } else {
            write!(f, "GF({})", self.0)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldError {
    DivisionByZero,
    /// Arithmetic attempted between elements of different fields.
    CharacteristicMismatch(Characteristic, Characteristic),
    NotPrime(u64),
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    /// The operation needs a specific characteristic (e.g. Frobenius in
    /// characteristic 2, Hessian diagonalization away from 2).
    WrongCharacteristic {
        found: Characteristic,
        needed: &'static str,
    },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::CharacteristicMismatch(a, b) => {
                write!(f, "characteristic mismatch: {a} vs {b}")
            }
            FieldError::NotPrime(n) => write!(f, "{n} is not prime (and not 0)"),
            FieldError::DimensionMismatch {
                rows,
                cols,
                expected,
            } => write!(
                f,
                "dimension mismatch: {rows}x{cols} against length {expected}"
            ),
            FieldError::WrongCharacteristic { found, needed } => {
                write!(f, "wrong characteristic {found}: needed {needed}")
            }
        }
    }
}

/// An element of GF(p) (canonical residue `0 <= value < p`) or of Q
/// (reduced fraction; `BigRational` keeps it canonical).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Prime { value: u64, modulus: u64 },
    Rational(Box<BigRational>),
}

impl FieldElement {
    pub fn zero(ch: Characteristic) -> Self {
        Self::from_integer(0, ch)
    }

    pub fn one(ch: Characteristic) -> Self {
        Self::from_integer(1, ch)
    }

    /// Canonical image of an integer in the field.
    pub fn from_integer(n: i64, ch: Characteristic) -> Self {
        if ch.is_rational() {
            FieldElement::Rational(Box::new(BigRational::from_integer(BigInt::from(n))))
        } else {
            let p = ch.0;
            let r = n.rem_euclid(p as i64) as u64;
            FieldElement::Prime {
                value: r % p,
                modulus: p,
            }
        }
    }

    pub fn from_rational(num: i64, den: i64) -> Result<Self, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(FieldElement::Rational(Box::new(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        ))))
    }

    pub fn characteristic(&self) -> Characteristic {
        match self {
            FieldElement::Prime { modulus, .. } => Characteristic(*modulus),
            FieldElement::Rational(_) => Characteristic::RATIONAL,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 0,
            FieldElement::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 1,
            FieldElement::Rational(r) => r.is_one(),
        }
    }

    fn check_same(&self, other: &Self) -> Characteristic {
        let (a, b) = (self.characteristic(), other.characteristic());
        assert_eq!(
            a, b,
            "field arithmetic across characteristics ({a} vs {b}) is a bug in the caller"
        );
        a
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        match (self, other) {
            (FieldElement::Prime { value: a, modulus }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(Box::new(&**a + &**b))
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
            FieldElement::Rational(r) => FieldElement::Rational(Box::new(-&**r)),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        match (self, other) {
            (FieldElement::Prime { value: a, modulus }, FieldElement::Prime { value: b, .. }) => {
                FieldElement::Prime {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(Box::new(&**a * &**b))
            }
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: mod_pow(*value, *modulus - 2, *modulus),
                modulus: *modulus,
            },
            FieldElement::Rational(r) => FieldElement::Rational(Box::new(r.recip())),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    /// `self^e` for any integer exponent (negative exponents invert).
    pub fn pow(&self, e: i64) -> Result<Self, FieldError> {
        let ch = self.characteristic();
        if e == 0 {
            return Ok(Self::one(ch));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(ch);
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b.clone());
            n >>= 1;
        }
        Ok(acc)
    }

    /// Image of `n` in the same field as `self`.
    pub fn scalar(&self, n: i64) -> Self {
        Self::from_integer(n, self.characteristic())
    }
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
            FieldElement::Rational(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Dense row-major matrix over a single field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    ch: Characteristic,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, ch: Characteristic) -> Self {
        Matrix {
            rows,
            cols,
            ch,
            entries: vec![FieldElement::zero(ch); rows * cols],
        }
    }

    pub fn identity(n: usize, ch: Characteristic) -> Self {
        let mut m = Self::zeros(n, n, ch);
        for i in 0..n {
            m[(i, i)] = FieldElement::one(ch);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>, ch: Characteristic) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for e in row {
                assert_eq!(e.characteristic(), ch, "mixed characteristics in matrix");
                entries.push(e);
            }
        }
        Matrix {
            rows: r,
            cols: c,
            ch,
            entries,
        }
    }

    /// Integer matrix mapped into the field.
    pub fn from_integers(rows: &[&[i64]], ch: Characteristic) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&n| FieldElement::from_integer(n, ch))
                        .collect()
                })
                .collect(),
            ch,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows, self.ch);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mat_mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols, self.ch);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.mul(&other[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&prod);
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![FieldElement::zero(self.ch); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[j]));
            }
        }
        out
    }

    pub fn add_matrix(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = out.entries[i].add(&other.entries[i]);
        }
        out
    }

    pub fn sub_matrix(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = out.entries[i].sub(&other.entries[i]);
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.mul(c);
        }
        out
    }

    pub fn pow(&self, mut n: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows, self.ch);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mat_mul(&base);
            }
            base = base.mat_mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Row echelon form with first-nonzero pivoting. Returns (rref matrix,
    /// pivot column per pivot row).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(pr) = pivot_row else { continue };
            m.swap_rows(row, pr);
            let inv = m[(row, col)].inv().expect("pivot nonzero");
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    m.sub_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec_out = vec![FieldElement::zero(self.ch); self.cols];
            vec_out[free] = FieldElement::one(self.ch);
            for (prow, &pcol) in pivots.iter().enumerate() {
                vec_out[pcol] = r[(prow, free)].neg();
            }
            basis.push(vec_out);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, self.ch);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = FieldElement::one(self.ch);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n, self.ch);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn trace(&self) -> FieldElement {
        assert!(self.is_square());
        let mut t = FieldElement::zero(self.ch);
        for i in 0..self.rows {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &FieldElement) {
        for j in 0..self.cols {
            self[(r, j)] = self[(r, j)].mul(c);
        }
    }

    fn sub_scaled_row(&mut self, target: usize, source: usize, c: &FieldElement) {
        for j in 0..self.cols {
            let s = self[(source, j)].mul(c);
            self[(target, j)] = self[(target, j)].sub(&s);
        }
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.ch)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Outcome of an exact linear solve: either a particular solution together
/// with a kernel basis, or a row combination certifying infeasibility
/// (`y^T A = 0`, `y^T b != 0`).
#[derive(Clone, Debug)]
pub enum LinearOutcome {
    Solved {
        solution: Vec<FieldElement>,
        kernel: Vec<Vec<FieldElement>>,
    },
    Infeasible {
        certificate: Vec<FieldElement>,
    },
}

impl LinearOutcome {
    pub fn solution(&self) -> Option<&Vec<FieldElement>> {
        match self {
            LinearOutcome::Solved { solution, .. } => Some(solution),
            LinearOutcome::Infeasible { .. } => None,
        }
    }
}

/// Solves `A x = b` exactly. The returned certificate (if infeasible) is
/// checked by construction: it is a left kernel vector of `A` that pairs
/// nontrivially with `b`.
pub fn solve_linear(a: &Matrix, b: &[FieldElement]) -> Result<LinearOutcome, FieldError> {
    if b.len() != a.rows() {
        return Err(FieldError::DimensionMismatch {
            rows: a.rows(),
            cols: a.cols(),
            expected: b.len(),
        });
    }
    let ch = a.characteristic();
    let n = a.rows();
    let m = a.cols();
    // Eliminate on [A | b | I]; a pivot in the b column exposes an
    // inconsistent row whose I-part is the certificate.
    let mut aug = Matrix::zeros(n, m + 1 + n, ch);
    for i in 0..n {
        for j in 0..m {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, m)] = b[i].clone();
        aug[(i, m + 1 + i)] = FieldElement::one(ch);
    }
    let (r, _) = aug.rref();
    for i in 0..n {
        let a_part_zero = (0..m).all(|j| r[(i, j)].is_zero());
        if a_part_zero && !r[(i, m)].is_zero() {
            let certificate: Vec<FieldElement> =
                (0..n).map(|j| r[(i, m + 1 + j)].clone()).collect();
            return Ok(LinearOutcome::Infeasible { certificate });
        }
    }
    // Consistent: read a particular solution off the rref of [A | b].
    let mut ab = Matrix::zeros(n, m + 1, ch);
    for i in 0..n {
        for j in 0..m {
            ab[(i, j)] = a[(i, j)].clone();
        }
        ab[(i, m)] = b[i].clone();
    }
    let (r2, pivots) = ab.rref();
    let mut solution = vec![FieldElement::zero(ch); m];
    for (prow, &pcol) in pivots.iter().enumerate() {
        if pcol < m {
            solution[pcol] = r2[(prow, m)].clone();
        }
    }
    Ok(LinearOutcome::Solved {
        solution,
        kernel: a.kernel_basis(),
    })
}

/// Row-echelonized spanning set; the working representation for subspaces of
/// coordinate vectors (kernels, ideals-as-subspaces, eigenspaces).
#[derive(Clone, Debug)]
pub struct Subspace {
    ch: Characteristic,
    ambient_dim: usize,
    /// Rows in reduced echelon form, no zero rows.
    basis: Vec<Vec<FieldElement>>,
}

impl Subspace {
    pub fn new(ambient_dim: usize, ch: Characteristic) -> Self {
        Subspace {
            ch,
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn from_vectors(
        vectors: &[Vec<FieldElement>],
        ambient_dim: usize,
        ch: Characteristic,
    ) -> Self {
        let mut s = Self::new(ambient_dim, ch);
        for v in vectors {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    /// Inserts a vector, keeping echelon form. Returns true if it enlarged
    /// the span.
    pub fn insert(&mut self, mut v: Vec<FieldElement>) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        for row in &self.basis {
            let lead = leading_index(row).expect("no zero rows stored");
            if !v[lead].is_zero() {
                let c = v[lead].clone();
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    *vi = vi.sub(&c.mul(ri));
                }
            }
        }
        match leading_index(&v) {
            None => false,
            Some(lead) => {
                let inv = v[lead].inv().expect("lead nonzero");
                for vi in v.iter_mut() {
                    *vi = vi.mul(&inv);
                }
                // Back-substitute into existing rows, keep rows sorted by lead.
                for row in &mut self.basis {
                    if !row[lead].is_zero() {
                        let c = row[lead].clone();
                        for (ri, vi) in row.iter_mut().zip(v.iter()) {
                            *ri = ri.sub(&c.mul(vi));
                        }
                    }
                }
                let pos = self
                    .basis
                    .iter()
                    .position(|r| leading_index(r).unwrap() > lead)
                    .unwrap_or(self.basis.len());
                self.basis.insert(pos, v);
                true
            }
        }
    }

    /// Canonical representative of `v` modulo this subspace.
    pub fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut v = v.to_vec();
        for row in &self.basis {
            let lead = leading_index(row).unwrap();
            if !v[lead].is_zero() {
                let c = v[lead].clone();
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    *vi = vi.sub(&c.mul(ri));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Equality as subspaces (echelon bases are canonical).
    pub fn equals(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis == other.basis
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }
}

fn leading_index(v: &[FieldElement]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Characteristic {
        Characteristic(p)
    }

    #[test]
    fn inverse_in_gf7_matches_exhaustive_scan() {
        // Oracle: scan all of GF(7) for the inverse of 3.
        let p = 7;
        let mut scanned = None;
        for b in 1..p {
            if (3 * b) % p == 1 {
                scanned = Some(b);
            }
        }
        assert_eq!(scanned, Some(5));
        let a = FieldElement::from_integer(3, gf(7));
        assert_eq!(a.inv().unwrap(), FieldElement::from_integer(5, gf(7)));
    }

    #[test]
    fn inverse_identities() {
        assert_eq!(
            FieldElement::from_integer(1, gf(2)).inv().unwrap(),
            FieldElement::from_integer(1, gf(2))
        );
        let two_thirds = FieldElement::from_rational(2, 3).unwrap();
        assert_eq!(
            two_thirds.inv().unwrap(),
            FieldElement::from_rational(3, 2).unwrap()
        );
        assert_eq!(
            FieldElement::zero(gf(5)).inv(),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn field_axioms_random_trials() {
        // (a*b) * inv(b) = a over 1000 random pairs per prime.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for &p in &[2u64, 3, 5, 7, 101] {
            for _ in 0..1000 {
                let a = FieldElement::from_integer((next() % p) as i64, gf(p));
                let b = FieldElement::from_integer((1 + next() % (p - 1).max(1)) as i64, gf(p));
                let lhs = a.mul(&b).mul(&b.inv().unwrap());
                assert_eq!(lhs, a);
            }
        }
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let x = FieldElement::from_integer(3, gf(7));
        assert_eq!(x.pow(-1).unwrap(), FieldElement::from_integer(5, gf(7)));
        assert_eq!(x.pow(0).unwrap(), FieldElement::one(gf(7)));
        let q = FieldElement::from_integer(2, Characteristic::RATIONAL);
        assert_eq!(
            q.pow(-2).unwrap(),
            FieldElement::from_rational(1, 4).unwrap()
        );
    }

    #[test]
    fn solve_diagonal_gf2() {
        let a = Matrix::from_integers(&[&[1, 0], &[0, 0]], gf(2));
        let b = [FieldElement::one(gf(2)), FieldElement::zero(gf(2))];
        match solve_linear(&a, &b).unwrap() {
            LinearOutcome::Solved { solution, kernel } => {
                assert_eq!(solution[0], FieldElement::one(gf(2)));
                assert_eq!(solution[1], FieldElement::zero(gf(2)));
                assert_eq!(kernel.len(), 1);
                assert_eq!(kernel[0][1], FieldElement::one(gf(2)));
            }
            LinearOutcome::Infeasible { .. } => panic!("should solve"),
        }
    }

    #[test]
    fn solve_zero_row_infeasible_with_certificate() {
        let a = Matrix::from_integers(&[&[1, 0], &[0, 0]], gf(2));
        let b = [FieldElement::zero(gf(2)), FieldElement::one(gf(2))];
        match solve_linear(&a, &b).unwrap() {
            LinearOutcome::Infeasible { certificate } => {
                // y^T A = 0 and y^T b != 0.
                assert_eq!(certificate[0], FieldElement::zero(gf(2)));
                assert_eq!(certificate[1], FieldElement::one(gf(2)));
            }
            LinearOutcome::Solved { .. } => panic!("should be infeasible"),
        }
    }

    #[test]
    fn solve_gf7_matches_scan() {
        let a = Matrix::from_integers(&[&[2, 1], &[1, 3]], gf(7));
        let b = [FieldElement::one(gf(7)), FieldElement::zero(gf(7))];
        // Oracle: exhaustive scan over GF(7)^2.
        let mut found = Vec::new();
        for x0 in 0..7i64 {
            for x1 in 0..7i64 {
                if (2 * x0 + x1) % 7 == 1 && (x0 + 3 * x1) % 7 == 0 {
                    found.push((x0, x1));
                }
            }
        }
        assert_eq!(found, vec![(2, 4)]);
        match solve_linear(&a, &b).unwrap() {
            LinearOutcome::Solved { solution, kernel } => {
                assert_eq!(solution[0], FieldElement::from_integer(2, gf(7)));
                assert_eq!(solution[1], FieldElement::from_integer(4, gf(7)));
                assert!(kernel.is_empty());
            }
            LinearOutcome::Infeasible { .. } => panic!("solvable"),
        }
    }

    #[test]
    fn rank_nullity_on_random_matrices() {
        let mut state = 12345u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state >> 33
        };
        for trial in 0..50 {
            let p = [2u64, 3, 5, 7][trial % 4];
            let rows = 1 + (next() as usize % 6);
            let cols = 1 + (next() as usize % 6);
            let mut m = Matrix::zeros(rows, cols, gf(p));
            for i in 0..rows {
                for j in 0..cols {
                    m[(i, j)] = FieldElement::from_integer((next() % p) as i64, gf(p));
                }
            }
            assert_eq!(m.rank() + m.kernel_basis().len(), cols);
        }
    }

    #[test]
    fn certificate_is_verified_left_kernel_vector() {
        let a = Matrix::from_integers(&[&[1, 2], &[2, 4], &[0, 1]], gf(5));
        let b = [
            FieldElement::from_integer(1, gf(5)),
            FieldElement::from_integer(3, gf(5)),
            FieldElement::from_integer(0, gf(5)),
        ];
        match solve_linear(&a, &b).unwrap() {
            LinearOutcome::Infeasible { certificate } => {
                // verify y^T A = 0, y^T b != 0
                for j in 0..2 {
                    let mut acc = FieldElement::zero(gf(5));
                    for i in 0..3 {
                        acc = acc.add(&certificate[i].mul(&a[(i, j)]));
                    }
                    assert!(acc.is_zero());
                }
                let mut dot = FieldElement::zero(gf(5));
                for i in 0..3 {
                    dot = dot.add(&certificate[i].mul(&b[i]));
                }
                assert!(!dot.is_zero());
            }
            LinearOutcome::Solved { .. } => panic!("2*row1 != row2 on b side"),
        }
    }

    #[test]
    fn matrix_inverse_round_trip() {
        let m = Matrix::from_integers(&[&[2, 1], &[1, 3]], gf(7));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mat_mul(&inv), Matrix::identity(2, gf(7)));
        let singular = Matrix::from_integers(&[&[1, 2], &[2, 4]], gf(7));
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn subspace_insert_and_equality() {
        let ch = gf(2);
        let mut s = Subspace::new(3, ch);
        let e = |a: i64, b: i64, c: i64| {
            vec![
                FieldElement::from_integer(a, ch),
                FieldElement::from_integer(b, ch),
                FieldElement::from_integer(c, ch),
            ]
        };
        assert!(s.insert(e(1, 1, 0)));
        assert!(s.insert(e(0, 1, 1)));
        assert!(!s.insert(e(1, 0, 1))); // sum of the other two
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&e(1, 0, 1)));
        assert!(!s.contains(&e(0, 0, 1)));
        let t = Subspace::from_vectors(&[e(1, 0, 1), e(0, 1, 1)], 3, ch);
        assert!(s.equals(&t));
    }
}
