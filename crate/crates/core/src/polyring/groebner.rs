//! Buchberger's algorithm with the coprime-leading-monomial criterion,
//! multivariate division, and post-hoc S-polynomial verification.
//!
//! Inputs must be honest polynomials (non-negative exponents); Laurent
//! ideals are polynomialized by the quotient layer before they get here.

use alloc::vec::Vec;

use super::poly::{LaurentPoly, MonomialOrder};
use super::PolyError;
use crate::field::FieldElement;

fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn exp_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

fn exp_lcm(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

/// Full remainder of `f` on division by `basis`: no term of the result is
/// divisible by any leading monomial of the basis.
pub fn reduce_by_basis(
    f: &LaurentPoly,
    basis: &[LaurentPoly],
    order: MonomialOrder,
) -> LaurentPoly {
    let mut p = f.clone();
    let mut remainder = LaurentPoly::zero(f.vars(), f.characteristic());
    let leads: Vec<(Vec<i64>, FieldElement)> = basis
        .iter()
        .map(|g| {
            let (e, c) = g.leading(order).expect("basis polynomials are nonzero");
            (e.clone(), c.clone())
        })
        .collect();
    while !p.is_zero() {
        let (lead_exp, lead_coeff) = {
            let (e, c) = p.leading(order).unwrap();
            (e.clone(), c.clone())
        };
        let reducer = leads.iter().position(|(le, _)| divides(le, &lead_exp));
        match reducer {
            Some(i) => {
                let factor_exp = exp_sub(&lead_exp, &leads[i].0);
                let factor_coeff = lead_coeff.div(&leads[i].1).expect("lead coeff nonzero");
                p = p.sub(&basis[i].mul_term(&factor_exp, &factor_coeff));
            }
            None => {
                remainder.add_term(&lead_exp, &lead_coeff);
                // Remove the term properly: subtract it.
                let mut single = LaurentPoly::zero(f.vars(), f.characteristic());
                single.add_term(&lead_exp, &lead_coeff);
                p = p.sub(&single);
            }
        }
    }
    remainder
}

fn s_polynomial(f: &LaurentPoly, g: &LaurentPoly, order: MonomialOrder) -> LaurentPoly {
    let (fe, fc) = f.leading(order).unwrap();
    let (ge, gc) = g.leading(order).unwrap();
    let l = exp_lcm(fe, ge);
    let one = FieldElement::one(f.characteristic());
    let lhs = f.mul_term(&exp_sub(&l, fe), &one.div(fc).unwrap());
    let rhs = g.mul_term(&exp_sub(&l, ge), &one.div(gc).unwrap());
    lhs.sub(&rhs)
}

/// Reduced Groebner basis of the ideal generated by `gens` (polynomials
/// only). Termination is Buchberger's; the result is monic, minimal and
/// tail-reduced, hence canonical for the order.
pub fn groebner_basis(
    gens: &[LaurentPoly],
    order: MonomialOrder,
) -> Result<Vec<LaurentPoly>, PolyError> {
    let mut basis: Vec<LaurentPoly> = Vec::new();
    for g in gens {
        if g.has_negative_exponent() {
            return Err(PolyError::NegativeExponent);
        }
        if g.is_zero() {
            return Err(PolyError::ZeroGenerator);
        }
        basis.push(make_monic(g, order));
    }
    if basis.is_empty() {
        return Ok(basis);
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (ei, _) = basis[i].leading(order).unwrap();
        let (ej, _) = basis[j].leading(order).unwrap();
        // Coprime leading monomials: S-polynomial reduces to zero.
        if ei.iter().zip(ej.iter()).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce_by_basis(&s, &basis, order);
        if !r.is_zero() {
            let r = make_monic(&r, order);
            let new_index = basis.len();
            basis.push(r);
            for k in 0..new_index {
                pairs.push((k, new_index));
            }
        }
    }
    Ok(auto_reduce(basis, order))
}

fn make_monic(f: &LaurentPoly, order: MonomialOrder) -> LaurentPoly {
    let (_, c) = f.leading(order).unwrap();
    let inv = c.inv().expect("leading coefficient nonzero");
    f.scale(&inv)
}

/// Minimalizes (drops generators whose lead is divisible by another lead)
/// and tail-reduces every survivor against the others.
fn auto_reduce(mut basis: Vec<LaurentPoly>, order: MonomialOrder) -> Vec<LaurentPoly> {
    // Minimal generating set of the leading-term ideal.
    let mut keep: Vec<bool> = alloc::vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (ei, _) = basis[i].leading(order).unwrap();
        let ei = ei.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (ej, _) = basis[j].leading(order).unwrap();
            if divides(&ei, ej) && (ej != &ei || i < j) {
                keep[j] = false;
            }
        }
    }
    let minimal: Vec<LaurentPoly> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // Tail reduction to the canonical reduced basis.
    let mut reduced: Vec<LaurentPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<LaurentPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = if others.is_empty() {
            minimal[i].clone()
        } else {
            reduce_by_basis(&minimal[i], &others, order)
        };
        if !r.is_zero() {
            reduced.push(make_monic(&r, order));
        }
    }
    reduced.sort_by(|a, b| {
        let (ea, _) = a.leading(order).unwrap();
        let (eb, _) = b.leading(order).unwrap();
        order.cmp(ea, eb)
    });
    reduced
}

/// Post-hoc Buchberger check: every S-polynomial of the basis reduces to 0.
pub fn verify_buchberger(basis: &[LaurentPoly], order: MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !reduce_by_basis(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Characteristic;
    use alloc::string::ToString;
    use alloc::vec;

    const GF2: Characteristic = Characteristic(2);

    #[test]
    fn principal_ideal_is_already_reduced() {
        let vars = vec!["x".to_string()];
        let f = LaurentPoly::from_integer_terms(&vars, GF2, &[(vec![2], 1), (vec![0], 1)]);
        let gb = groebner_basis(&[f.clone()], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb, vec![f]);
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        // (x*y - 1, x^2): x invertible and nilpotent forces 1.
        let vars = vec!["x".to_string(), "y".to_string()];
        let f = LaurentPoly::from_integer_terms(&vars, GF2, &[(vec![1, 1], 1), (vec![0, 0], -1)]);
        let g = LaurentPoly::from_integer_terms(&vars, GF2, &[(vec![2, 0], 1)]);
        let gb = groebner_basis(&[f, g], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0], LaurentPoly::one(&vars, GF2));
    }

    #[test]
    fn every_s_polynomial_reduces_to_zero() {
        let vars = vec!["x".to_string(), "y".to_string()];
        // Relations of a CP^1-bundle presentation, already cleared.
        let f = LaurentPoly::from_integer_terms(
            &vars,
            GF2,
            &[(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 0], 1)],
        );
        let g = LaurentPoly::from_integer_terms(&vars, GF2, &[(vec![0, 3], 1), (vec![0, 0], 1)]);
        let gb = groebner_basis(&[f, g], MonomialOrder::DegRevLex).unwrap();
        assert!(verify_buchberger(&gb, MonomialOrder::DegRevLex));
    }

    #[test]
    fn rejects_laurent_generators() {
        let vars = vec!["x".to_string()];
        let f = LaurentPoly::from_integer_terms(&vars, GF2, &[(vec![-1], 1), (vec![0], 1)]);
        assert_eq!(
            groebner_basis(&[f], MonomialOrder::DegRevLex),
            Err(PolyError::NegativeExponent)
        );
    }
}
