//! Finite-dimensional quotient rings with Groebner normal forms.
//!
//! A `QuotientRing` is either a quotient of a Laurent ring (every variable
//! inverted via a `*_inv` companion) or of an ordinary polynomial ring.
//! Elements are coordinate vectors over the standard monomial basis.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::groebner::{groebner_basis, reduce_by_basis, verify_buchberger};
use super::poly::{LaurentPoly, MonomialOrder};
use super::PolyError;
use crate::field::{Characteristic, FieldElement, Matrix, Subspace};

/// An ideal of a (Laurent) polynomial ring, given by generators.
#[derive(Clone, Debug)]
pub struct Ideal {
    vars: Vec<String>,
    ch: Characteristic,
    generators: Vec<LaurentPoly>,
}

impl Ideal {
    pub fn new(
        vars: &[String],
        ch: Characteristic,
        generators: Vec<LaurentPoly>,
    ) -> Result<Self, PolyError> {
        for g in &generators {
            if g.is_zero() {
                return Err(PolyError::ZeroGenerator);
            }
            if g.vars() != vars || g.characteristic() != ch {
                return Err(PolyError::ContextMismatch);
            }
        }
        Ok(Ideal {
            vars: vars.to_vec(),
            ch,
            generators,
        })
    }

    pub fn generators(&self) -> &[LaurentPoly] {
        &self.generators
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }
}

/// Element of a quotient ring: coordinates over the monomial basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    pub coords: Vec<FieldElement>,
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

#[derive(Clone)]
pub struct QuotientRing {
    original_vars: Vec<String>,
    poly_vars: Vec<String>,
    ch: Characteristic,
    laurent: bool,
    order: MonomialOrder,
    groebner: Vec<LaurentPoly>,
    monomial_basis: Vec<Vec<i64>>,
    basis_index: BTreeMap<Vec<i64>, usize>,
}

impl QuotientRing {
    /// Quotient of the Laurent ring k[x_1^{+-1},...] by `ideal`. Generators
    /// are cleared to polynomial form (a unit multiple, so the ideal is
    /// unchanged) and one inverse companion per variable is adjoined.
    pub fn laurent_quotient(ideal: &Ideal) -> Result<Self, PolyError> {
        let n = ideal.vars().len();
        let mut poly_vars = ideal.vars().to_vec();
        for v in ideal.vars() {
            assert!(
                !v.ends_with("_inv"),
                "variable names ending in _inv are reserved"
            );
            poly_vars.push(format!("{v}_inv"));
        }
        let positions: Vec<usize> = (0..n).collect();
        let mut gens: Vec<LaurentPoly> = ideal
            .generators()
            .iter()
            .map(|g| g.cleared().embed(&poly_vars, &positions))
            .collect();
        let ch = ideal.characteristic();
        for i in 0..n {
            let mut e = vec![0i64; 2 * n];
            e[i] = 1;
            e[n + i] = 1;
            let rel = LaurentPoly::from_terms(
                &poly_vars,
                ch,
                [
                    (e, FieldElement::one(ch)),
                    (vec![0; 2 * n], FieldElement::one(ch).neg()),
                ],
            );
            gens.push(rel);
        }
        Self::build(ideal.vars().to_vec(), poly_vars, ch, true, gens)
    }

    /// Quotient of the ordinary polynomial ring; generators must have
    /// non-negative exponents and no variable is inverted.
    pub fn polynomial_quotient(ideal: &Ideal) -> Result<Self, PolyError> {
        for g in ideal.generators() {
            if g.has_negative_exponent() {
                return Err(PolyError::NegativeExponent);
            }
        }
        Self::build(
            ideal.vars().to_vec(),
            ideal.vars().to_vec(),
            ideal.characteristic(),
            false,
            ideal.generators().to_vec(),
        )
    }

    fn build(
        original_vars: Vec<String>,
        poly_vars: Vec<String>,
        ch: Characteristic,
        laurent: bool,
        gens: Vec<LaurentPoly>,
    ) -> Result<Self, PolyError> {
        let order = MonomialOrder::DegRevLex;
        let groebner = groebner_basis(&gens, order)?;
        let monomial_basis = standard_monomials(&groebner, &poly_vars, order)?;
        let basis_index = monomial_basis
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(QuotientRing {
            original_vars,
            poly_vars,
            ch,
            laurent,
            order,
            groebner,
            monomial_basis,
            basis_index,
        })
    }

    pub fn dim(&self) -> usize {
        self.monomial_basis.len()
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    pub fn original_vars(&self) -> &[String] {
        &self.original_vars
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn groebner(&self) -> &[LaurentPoly] {
        &self.groebner
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn monomial_basis(&self) -> &[Vec<i64>] {
        &self.monomial_basis
    }

    /// Checks every S-polynomial of the stored basis reduces to zero.
    pub fn verify_groebner(&self) -> bool {
        verify_buchberger(&self.groebner, self.order)
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coords: vec![FieldElement::zero(self.ch); self.dim()],
        }
    }

    pub fn one(&self) -> RingElement {
        self.normal_form(&LaurentPoly::one(&self.original_vars, self.ch))
            .expect("constant is reducible")
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        let mut e = self.zero();
        e.coords[i] = FieldElement::one(self.ch);
        e
    }

    /// Image of the i-th original variable.
    pub fn var(&self, i: usize) -> RingElement {
        self.normal_form(&LaurentPoly::variable(&self.original_vars, self.ch, i))
            .expect("variable is reducible")
    }

    /// Translates a Laurent exponent vector over the original variables into
    /// the polynomial presentation.
    fn embed_exponents(&self, e: &[i64]) -> Result<Vec<i64>, PolyError> {
        let n = self.original_vars.len();
        let mut out = vec![0i64; self.poly_vars.len()];
        for (i, &x) in e.iter().enumerate() {
            if x >= 0 {
                out[i] = x;
            } else if self.laurent {
                out[n + i] = -x;
            } else {
                return Err(PolyError::NegativeExponent);
            }
        }
        Ok(out)
    }

    /// Unique remainder modulo the Groebner basis, expressed over the
    /// monomial basis.
    pub fn normal_form(&self, f: &LaurentPoly) -> Result<RingElement, PolyError> {
        if f.vars() != self.original_vars.as_slice() || f.characteristic() != self.ch {
            return Err(PolyError::ContextMismatch);
        }
        let mut embedded = LaurentPoly::zero(&self.poly_vars, self.ch);
        for (e, c) in f.terms() {
            embedded.add_term(&self.embed_exponents(e)?, c);
        }
        Ok(self.reduce_embedded(&embedded))
    }

    fn reduce_embedded(&self, f: &LaurentPoly) -> RingElement {
        let r = if self.groebner.is_empty() {
            f.clone()
        } else {
            reduce_by_basis(f, &self.groebner, self.order)
        };
        let mut coords = vec![FieldElement::zero(self.ch); self.dim()];
        for (e, c) in r.terms() {
            let idx = *self
                .basis_index
                .get(e)
                .expect("reduced monomial is standard");
            coords[idx] = c.clone();
        }
        RingElement { coords }
    }

    /// Canonical lift to the polynomial presentation.
    pub fn lift(&self, e: &RingElement) -> LaurentPoly {
        assert_eq!(e.coords.len(), self.dim());
        LaurentPoly::from_terms(
            &self.poly_vars,
            self.ch,
            e.coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.monomial_basis[i].clone(), c.clone())),
        )
    }

    /// Canonical lift as a Laurent polynomial over the original variables
    /// (inverse companions fold back into negative exponents).
    pub fn to_laurent(&self, e: &RingElement) -> LaurentPoly {
        let n = self.original_vars.len();
        LaurentPoly::from_terms(
            &self.original_vars,
            self.ch,
            e.coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    let me = &self.monomial_basis[i];
                    let folded: Vec<i64> = (0..n)
                        .map(|v| me[v] - if self.laurent { me[n + v] } else { 0 })
                        .collect();
                    (folded, c.clone())
                }),
        )
    }

    pub fn element_string(&self, e: &RingElement) -> String {
        format!("{}", self.to_laurent(e))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            coords: a
                .coords
                .iter()
                .zip(b.coords.iter())
                .map(|(x, y)| x.add(y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            coords: a
                .coords
                .iter()
                .zip(b.coords.iter())
                .map(|(x, y)| x.sub(y))
                .collect(),
        }
    }

    pub fn scale(&self, a: &RingElement, c: &FieldElement) -> RingElement {
        RingElement {
            coords: a.coords.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.reduce_embedded(&self.lift(a).mul(&self.lift(b)))
    }

    pub fn pow(&self, a: &RingElement, e: u32) -> RingElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of multiplication by `f` in the monomial basis.
    pub fn multiplication_matrix(&self, f: &RingElement) -> Matrix {
        let d = self.dim();
        let lifted = self.lift(f);
        let mut m = Matrix::zeros(d, d, self.ch);
        for j in 0..d {
            let prod = self.reduce_embedded(
                &lifted.mul_term(&self.monomial_basis[j], &FieldElement::one(self.ch)),
            );
            for i in 0..d {
                m[(i, j)] = prod.coords[i].clone();
            }
        }
        m
    }

    /// Full multiplication table: entry (i, j) holds coords of b_i * b_j.
    pub fn multiplication_table(&self) -> Vec<Vec<RingElement>> {
        let d = self.dim();
        let one = FieldElement::one(self.ch);
        (0..d)
            .map(|i| {
                let bi = LaurentPoly::monomial(
                    &self.poly_vars,
                    self.ch,
                    self.monomial_basis[i].clone(),
                    one.clone(),
                );
                (0..d)
                    .map(|j| self.reduce_embedded(&bi.mul_term(&self.monomial_basis[j], &one)))
                    .collect()
            })
            .collect()
    }

    /// Inverse of `f`, when multiplication by `f` is invertible. The result
    /// is verified by multiplying back.
    pub fn inverse(&self, f: &RingElement) -> Option<RingElement> {
        let m = self.multiplication_matrix(f);
        let one = self.one();
        match crate::field::solve_linear(&m, &one.coords).ok()? {
            crate::field::LinearOutcome::Solved { solution, .. } => {
                let candidate = RingElement { coords: solution };
                (self.mul(f, &candidate) == one).then_some(candidate)
            }
            crate::field::LinearOutcome::Infeasible { .. } => None,
        }
    }

    pub fn is_invertible(&self, f: &RingElement) -> bool {
        self.inverse(f).is_some()
    }

    /// Integer power allowing negatives (via the verified inverse).
    pub fn int_pow(&self, a: &RingElement, e: i64) -> Option<RingElement> {
        if e >= 0 {
            Some(self.pow(a, e as u32))
        } else {
            let inv = self.inverse(a)?;
            Some(self.pow(&inv, (-e) as u32))
        }
    }

    /// Matrix of the Frobenius x -> x^2 (linear in characteristic 2).
    pub fn frobenius_matrix(&self) -> Result<Matrix, PolyError> {
        if self.ch != Characteristic(2) {
            return Err(PolyError::WrongCharacteristic {
                found: self.ch,
                needed: "2 (Frobenius is linear only over GF(2))",
            });
        }
        let d = self.dim();
        let mut m = Matrix::zeros(d, d, self.ch);
        let one = FieldElement::one(self.ch);
        for j in 0..d {
            let bj = LaurentPoly::monomial(
                &self.poly_vars,
                self.ch,
                self.monomial_basis[j].clone(),
                one.clone(),
            );
            let sq = self.reduce_embedded(&bj.mul(&bj));
            for i in 0..d {
                m[(i, j)] = sq.coords[i].clone();
            }
        }
        Ok(m)
    }

    /// Kernel of Frobenius as ring elements (echelonized basis).
    pub fn frobenius_kernel(&self) -> Result<Vec<RingElement>, PolyError> {
        let m = self.frobenius_matrix()?;
        Ok(m.kernel_basis()
            .into_iter()
            .map(|coords| RingElement { coords })
            .collect())
    }

    /// Frobenius image of an element: its square.
    pub fn frobenius(&self, f: &RingElement) -> RingElement {
        self.mul(f, f)
    }

    /// Smallest multiplication-closed subspace containing the span of
    /// `gens`: the ideal they generate, as a subspace. Closure under the
    /// original variables suffices; in a Laurent quotient the variables act
    /// invertibly, so a finite-dimensional invariant subspace is
    /// automatically invariant under their inverses too.
    pub fn ideal_subspace(&self, gens: &[RingElement]) -> Subspace {
        let d = self.dim();
        let mut space = Subspace::new(d, self.ch);
        let mut frontier: Vec<RingElement> = Vec::new();
        for g in gens {
            if space.insert(g.coords.clone()) {
                frontier.push(g.clone());
            }
        }
        let var_mats: Vec<Matrix> = (0..self.original_vars.len())
            .map(|i| self.multiplication_matrix(&self.var(i)))
            .collect();
        while let Some(v) = frontier.pop() {
            for m in &var_mats {
                let w = m.mat_vec(&v.coords);
                if space.insert(w.clone()) {
                    frontier.push(RingElement { coords: w });
                }
            }
        }
        space
    }

    /// Do two generating sets span the same ideal?
    pub fn ideal_equal(&self, a: &[RingElement], b: &[RingElement]) -> bool {
        self.ideal_subspace(a).equals(&self.ideal_subspace(b))
    }

    /// All pairwise products of the given elements vanish (used for
    /// square-zero kernel checks).
    pub fn span_product_is_zero(&self, gens: &[RingElement]) -> bool {
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i..] {
                if !self.mul(a, b).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Enumerates the standard monomials under the staircase of leading terms.
/// Finite-dimensionality requires a pure power of every variable among the
/// leading monomials.
fn standard_monomials(
    groebner: &[LaurentPoly],
    poly_vars: &[String],
    order: MonomialOrder,
) -> Result<Vec<Vec<i64>>, PolyError> {
    let n = poly_vars.len();
    let leads: Vec<Vec<i64>> = groebner
        .iter()
        .map(|g| g.leading(order).expect("nonzero").0.clone())
        .collect();
    // Unit ideal: zero ring, empty basis.
    if leads.iter().any(|e| e.iter().all(|&x| x == 0)) {
        return Ok(Vec::new());
    }
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mut bounds = vec![None; n];
    for lead in &leads {
        let nonzero: Vec<usize> = (0..n).filter(|&i| lead[i] != 0).collect();
        if nonzero.len() == 1 {
            let v = nonzero[0];
            let d = lead[v];
            if bounds[v].map_or(true, |b| d < b) {
                bounds[v] = Some(d);
            }
        }
    }
    let bounds: Vec<i64> = bounds
        .into_iter()
        .collect::<Option<Vec<i64>>>()
        .ok_or(PolyError::InfiniteDimensional)?;
    let mut basis = Vec::new();
    let mut current = vec![0i64; n];
    loop {
        let standard = !leads
            .iter()
            .any(|lead| lead.iter().zip(current.iter()).all(|(a, b)| a <= b));
        if standard {
            basis.push(current.clone());
        }
        // Odometer over the box [0, bounds).
        let mut i = 0;
        loop {
            if i == n {
                basis.sort_by(|a, b| order.cmp(a, b));
                return Ok(basis);
            }
            current[i] += 1;
            if current[i] < bounds[i] {
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const GF2: Characteristic = Characteristic(2);
    const GF7: Characteristic = Characteristic(7);

    fn univariate_quotient(name: &str, ch: Characteristic, coeffs: &[(i64, i64)]) -> QuotientRing {
        let vars = vec![name.to_string()];
        let f = LaurentPoly::from_integer_terms(
            &vars,
            ch,
            &coeffs
                .iter()
                .map(|&(e, c)| (vec![e], c))
                .collect::<Vec<_>>(),
        );
        let ideal = Ideal::new(&vars, ch, vec![f]).unwrap();
        QuotientRing::polynomial_quotient(&ideal).unwrap()
    }

    #[test]
    fn normal_form_reduces_relations() {
        // x^4 = 1 in k[x]/(x^4 - 1).
        let r = univariate_quotient("x", GF7, &[(4, 1), (0, -1)]);
        assert_eq!(r.dim(), 4);
        let vars = vec!["x".to_string()];
        let x4 = LaurentPoly::from_integer_terms(&vars, GF7, &[(vec![4], 1)]);
        assert_eq!(r.normal_form(&x4).unwrap(), r.one());
    }

    #[test]
    fn char2_square_reduces_to_zero() {
        // (x^3+1)^2 = x^6+1 = 0 in GF(2)[x]/(x^6+1).
        let r = univariate_quotient("x", GF2, &[(6, 1), (0, 1)]);
        let vars = vec!["x".to_string()];
        let f = LaurentPoly::from_integer_terms(&vars, GF2, &[(vec![3], 1), (vec![0], 1)]);
        let sq = f.mul(&f);
        assert!(r.normal_form(&sq).unwrap().is_zero());
    }

    #[test]
    fn multiplication_matrix_shapes() {
        // f = 1 gives the identity.
        let r = univariate_quotient("x", GF2, &[(2, 1), (0, 1)]);
        let id = r.multiplication_matrix(&r.one());
        assert_eq!(id, Matrix::identity(2, GF2));
        // f = x in GF(2)[x]/(x^2+1) swaps the basis {1, x}.
        let mx = r.multiplication_matrix(&r.var(0));
        assert_eq!(mx, Matrix::from_integers(&[&[0, 1], &[1, 0]], GF2));
        // f = x in k[x]/(x^3 - 1) is a cyclic permutation.
        let r3 = univariate_quotient("x", GF7, &[(3, 1), (0, -1)]);
        let mx3 = r3.multiplication_matrix(&r3.var(0));
        assert_eq!(
            mx3,
            Matrix::from_integers(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]], GF7)
        );
    }

    #[test]
    fn invertibility_examples() {
        // u invertible in GF(2)[u]/(u^24+u^18+1): constant term 1.
        let r = univariate_quotient("u", GF2, &[(24, 1), (18, 1), (0, 1)]);
        let u = r.var(0);
        let inv = r.inverse(&u).expect("unit");
        assert_eq!(r.mul(&u, &inv), r.one());
        // x^2+1 is nilpotent in GF(2)[x]/(x^4+1).
        let r4 = univariate_quotient("x", GF2, &[(4, 1), (0, 1)]);
        let vars = vec!["x".to_string()];
        let f = r4
            .normal_form(&LaurentPoly::from_integer_terms(
                &vars,
                GF2,
                &[(vec![2], 1), (vec![0], 1)],
            ))
            .unwrap();
        assert!(!r4.is_invertible(&f));
        assert!(r4.is_invertible(&r4.one()));
    }

    #[test]
    fn laurent_quotient_inverts_variables() {
        // k[x^{+-1}]/(x^2 - 1) over GF(7): dim 2, x inverse exists.
        let vars = vec!["x".to_string()];
        let f = LaurentPoly::from_integer_terms(&vars, GF7, &[(vec![2], 1), (vec![0], -1)]);
        let ideal = Ideal::new(&vars, GF7, vec![f]).unwrap();
        let r = QuotientRing::laurent_quotient(&ideal).unwrap();
        assert_eq!(r.dim(), 2);
        // x^-1 as a Laurent input works directly.
        let xinv = LaurentPoly::from_integer_terms(&vars, GF7, &[(vec![-1], 1)]);
        let nf = r.normal_form(&xinv).unwrap();
        assert_eq!(r.mul(&nf, &r.var(0)), r.one());
    }

    #[test]
    fn picard_rank2_flagship_ideal_has_dim_24() {
        // Cleared relations of the rank-2 instance (n,k,a)=(9,2,(1,1)) over
        // GF(2): x(x+y)^2 + 1 and y^8 + (x+y)^2.
        let vars = vec!["x".to_string(), "y".to_string()];
        let x = LaurentPoly::variable(&vars, GF2, 0);
        let y = LaurentPoly::variable(&vars, GF2, 1);
        let xy = x.add(&y);
        let g1 = x.mul(&xy.pow(2)).add(&LaurentPoly::one(&vars, GF2));
        let g2 = y.pow(8).add(&xy.pow(2));
        let ideal = Ideal::new(&vars, GF2, vec![g1, g2]).unwrap();
        let r = QuotientRing::laurent_quotient(&ideal).unwrap();
        assert_eq!(r.dim(), 24);
        assert!(r.verify_groebner());
    }

    #[test]
    fn frobenius_kernels_match_ideals() {
        // CP^2: injective.
        let r3 = univariate_quotient("x", GF2, &[(3, 1), (0, 1)]);
        assert!(r3.frobenius_kernel().unwrap().is_empty());
        // CP^3: kernel = (x^2+1), dim 2.
        let r4 = univariate_quotient("x", GF2, &[(4, 1), (0, 1)]);
        let ker = r4.frobenius_kernel().unwrap();
        assert_eq!(ker.len(), 2);
        let vars = vec!["x".to_string()];
        let gen = r4
            .normal_form(&LaurentPoly::from_integer_terms(
                &vars,
                GF2,
                &[(vec![2], 1), (vec![0], 1)],
            ))
            .unwrap();
        assert!(r4.ideal_equal(&ker, &[gen]));
        // Zero ideal comparison for the injective case.
        assert!(r3.ideal_equal(&[], &r3.frobenius_kernel().unwrap()));
    }

    #[test]
    fn frobenius_kernel_of_square_presentation() {
        // GF(2)[u]/(V^2), V = u^12+u^9+1: kernel = (V), dim 12.
        let vars = vec!["u".to_string()];
        let v = LaurentPoly::from_integer_terms(
            &vars,
            GF2,
            &[(vec![12], 1), (vec![9], 1), (vec![0], 1)],
        );
        let ideal = Ideal::new(&vars, GF2, vec![v.mul(&v)]).unwrap();
        let r = QuotientRing::polynomial_quotient(&ideal).unwrap();
        assert_eq!(r.dim(), 24);
        let ker = r.frobenius_kernel().unwrap();
        assert_eq!(ker.len(), 12);
        let v_elem = r.normal_form(&v).unwrap();
        assert!(r.ideal_equal(&ker, &[v_elem]));
        // (ker F)^2 = 0.
        assert!(r.span_product_is_zero(&ker));
    }

    #[test]
    fn wrong_characteristic_for_frobenius() {
        let r = univariate_quotient("x", GF7, &[(2, 1), (0, -1)]);
        assert!(matches!(
            r.frobenius_matrix(),
            Err(PolyError::WrongCharacteristic { .. })
        ));
    }

    #[test]
    fn normal_form_is_ring_homomorphism_on_random_pairs() {
        let r = univariate_quotient("x", GF7, &[(4, 1), (0, -1)]);
        let vars = vec!["x".to_string()];
        let mut state = 7u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            state >> 33
        };
        for _ in 0..200 {
            let rand_poly = |next: &mut dyn FnMut() -> u64| {
                let mut terms = Vec::new();
                for _ in 0..3 {
                    terms.push((vec![(next)() as i64 % 9], ((next)() % 7) as i64));
                }
                LaurentPoly::from_integer_terms(&vars, GF7, &terms)
            };
            let f = rand_poly(&mut next);
            let g = rand_poly(&mut next);
            let nf_sum = r.normal_form(&f.add(&g)).unwrap();
            let sum_nf = r.add(&r.normal_form(&f).unwrap(), &r.normal_form(&g).unwrap());
            assert_eq!(nf_sum, sum_nf);
            let nf_prod = r.normal_form(&f.mul(&g)).unwrap();
            let prod_nf = r.mul(&r.normal_form(&f).unwrap(), &r.normal_form(&g).unwrap());
            assert_eq!(nf_prod, prod_nf);
            // Idempotence: nf(lift(nf(f))) = nf(f).
            let once = r.normal_form(&f).unwrap();
            let again = r.normal_form(&r.to_laurent(&once)).unwrap();
            assert_eq!(once, again);
        }
    }
}
