//! Laurent polynomials: finite maps from integer exponent vectors (negative
//! entries allowed) to nonzero field coefficients.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::PolyError;
use crate::field::{Characteristic, FieldElement};

/// Monomial order on exponent vectors. Degrevlex is the default everywhere;
/// lex is used only for elimination in critical-point solving.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b.iter()) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                let da: i64 = a.iter().sum();
                let db: i64 = b.iter().sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        // Larger = smaller exponent in the last position
                        // where they differ.
                        for (x, y) in a.iter().zip(b.iter()).rev() {
                            match x.cmp(y) {
                                Ordering::Equal => continue,
                                Ordering::Less => return Ordering::Greater,
                                Ordering::Greater => return Ordering::Less,
                            }
                        }
                        Ordering::Equal
                    }
                    other => other,
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    ch: Characteristic,
    /// Exponent vector -> nonzero coefficient.
    terms: BTreeMap<Vec<i64>, FieldElement>,
}

impl LaurentPoly {
    pub fn zero(vars: &[String], ch: Characteristic) -> Self {
        LaurentPoly {
            vars: vars.to_vec(),
            ch,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], ch: Characteristic, c: FieldElement) -> Self {
        let mut p = Self::zero(vars, ch);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[String], ch: Characteristic) -> Self {
        Self::constant(vars, ch, FieldElement::one(ch))
    }

    pub fn variable(vars: &[String], ch: Characteristic, index: usize) -> Self {
        assert!(index < vars.len());
        let mut e = vec![0i64; vars.len()];
        e[index] = 1;
        Self::monomial(vars, ch, e, FieldElement::one(ch))
    }

    pub fn monomial(vars: &[String], ch: Characteristic, exps: Vec<i64>, c: FieldElement) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars, ch);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(
        vars: &[String],
        ch: Characteristic,
        terms: impl IntoIterator<Item = (Vec<i64>, FieldElement)>,
    ) -> Self {
        let mut p = Self::zero(vars, ch);
        for (e, c) in terms {
            p.add_term(&e, &c);
        }
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_integer_terms(
        vars: &[String],
        ch: Characteristic,
        terms: &[(Vec<i64>, i64)],
    ) -> Self {
        Self::from_terms(
            vars,
            ch,
            terms
                .iter()
                .map(|(e, n)| (e.clone(), FieldElement::from_integer(*n, ch))),
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i64]) -> FieldElement {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.ch))
    }

    fn same_context(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variables"
        );
        assert_eq!(self.ch, other.ch, "polynomials over different fields");
    }

    pub fn add_term(&mut self, exps: &[i64], c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        assert_eq!(exps.len(), self.vars.len());
        match self.terms.get_mut(exps) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps.to_vec(), c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_context(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars, self.ch);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_context(other);
        let mut out = Self::zero(&self.vars, self.ch);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.add_term(&e, &ca.mul(cb));
            }
        }
        out
    }

    /// Multiplication by a single term.
    pub fn mul_term(&self, exps: &[i64], c: &FieldElement) -> Self {
        let mut out = Self::zero(&self.vars, self.ch);
        for (e, v) in &self.terms {
            let shifted: Vec<i64> = e.iter().zip(exps.iter()).map(|(x, y)| x + y).collect();
            out.add_term(&shifted, &v.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars, self.ch);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Integer power, allowing negative exponents only for single terms.
    pub fn int_pow(&self, e: i64) -> Result<Self, PolyError> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        if self.terms.len() != 1 {
            return Err(PolyError::NonMonomialInverse(self.to_string()));
        }
        let (exps, c) = self.terms.iter().next().unwrap();
        let inv_c = c.inv().map_err(|_| PolyError::ZeroDenominator)?;
        let base = Self::monomial(
            &self.vars,
            self.ch,
            exps.iter().map(|x| -x).collect(),
            inv_c,
        );
        Ok(base.pow((-e) as u32))
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Vec<i64>, &FieldElement)> {
        self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Formal partial derivative with the Laurent rule d(x^e) = e x^(e-1).
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.vars.len());
        let mut out = Self::zero(&self.vars, self.ch);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let factor = FieldElement::from_integer(e[var], self.ch);
            let coeff = c.mul(&factor);
            if coeff.is_zero() {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(&e2, &coeff);
        }
        out
    }

    /// Evaluates at a point; coordinates must be nonzero wherever a negative
    /// exponent occurs.
    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement, PolyError> {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = FieldElement::zero(self.ch);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &exp) in point.iter().zip(e.iter()) {
                if exp == 0 {
                    continue;
                }
                let p = x.pow(exp).map_err(|_| PolyError::ZeroDenominator)?;
                term = term.mul(&p);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Minimal exponent per variable (0 for absent variables).
    pub fn min_exponents(&self) -> Vec<i64> {
        let mut mins = vec![0i64; self.vars.len()];
        for e in self.terms.keys() {
            for (m, &x) in mins.iter_mut().zip(e.iter()) {
                if x < *m {
                    *m = x;
                }
            }
        }
        mins
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    /// Multiplies by the smallest monomial making every exponent
    /// non-negative. A unit multiple in the Laurent ring, so ideals are
    /// unchanged.
    pub fn cleared(&self) -> Self {
        let mins = self.min_exponents();
        let shift: Vec<i64> = mins.iter().map(|&m| -m).collect();
        if shift.iter().all(|&s| s == 0) {
            return self.clone();
        }
        self.mul_term(&shift, &FieldElement::one(self.ch))
    }

    /// Reinterprets the polynomial over a larger variable list;
    /// `positions[i]` is the index of old variable `i` in `new_vars`.
    pub fn embed(&self, new_vars: &[String], positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.vars.len());
        let mut out = LaurentPoly::zero(new_vars, self.ch);
        for (e, c) in &self.terms {
            let mut e2 = vec![0i64; new_vars.len()];
            for (i, &pos) in positions.iter().enumerate() {
                e2[pos] = e[i];
            }
            out.add_term(&e2, c);
        }
        out
    }

    /// Monomial substitution x_i -> prod_j x_j^(images\[i\]\[j\]). For a
    /// unimodular integer matrix this is a coordinate change of the torus.
    pub fn monomial_substitution(&self, images: &[Vec<i64>]) -> Self {
        assert_eq!(images.len(), self.vars.len());
        let mut out = Self::zero(&self.vars, self.ch);
        for (e, c) in &self.terms {
            let mut e2 = vec![0i64; self.vars.len()];
            for (i, &exp) in e.iter().enumerate() {
                for (j, out_exp) in e2.iter_mut().enumerate() {
                    *out_exp += exp * images[i][j];
                }
            }
            out.add_term(&e2, c);
        }
        out
    }

    /// Univariate helper: coefficient list c_0..c_d (empty for zero).
    pub fn univariate_coeffs(&self) -> Result<Vec<FieldElement>, PolyError> {
        if self.vars.len() != 1 {
            return Err(PolyError::ContextMismatch);
        }
        if self.has_negative_exponent() {
            return Err(PolyError::NegativeExponent);
        }
        let deg = self.terms.keys().map(|e| e[0]).max().unwrap_or(-1);
        if deg < 0 {
            return Ok(Vec::new());
        }
        let mut coeffs = vec![FieldElement::zero(self.ch); deg as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Ok(coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
        for (i, e) in keys.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let c = &self.terms[*e];
            let is_const = e.iter().all(|&x| x == 0);
            if is_const {
                write!(f, "{c}")?;
                continue;
            }
            let mut first = !c.is_one();
            if !c.is_one() {
                write!(f, "{c}")?;
            }
            for (name, &exp) in self.vars.iter().zip(e.iter()) {
                if exp == 0 {
                    continue;
                }
                if first {
                    write!(f, "*")?;
                }
                first = true;
                if exp == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
