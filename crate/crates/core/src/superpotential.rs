//! Landau-Ginzburg superpotentials of toric Fano varieties: Jacobian rings,
//! critical-point location and classification (Morse / A2 / other), local
//! rings as joint generalized eigenspaces, the Hessian form of the
//! obstruction equation, and per-critical-value split-generation verdicts.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{solve_linear, Characteristic, FieldElement, LinearOutcome, Matrix, Subspace};
use crate::polyring::{
    generalized_eigendecomposition, groebner_basis, rational_roots, Ideal, LaurentPoly,
    MonomialOrder, PolyError, QuotientRing, RingElement,
};
use crate::qh::{axiom, checked, TraceEntry};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuperError {
    InvalidFan(String),
    Poly(PolyError),
    CostGuardExceeded(String),
    NotCritical,
    WrongCharacteristic {
        found: Characteristic,
        needed: &'static str,
    },
    /// Verdicts refuse to run on a possibly partial list of critical points.
    IncompleteCritSearch,
}

impl From<PolyError> for SuperError {
    fn from(e: PolyError) -> Self {
        SuperError::Poly(e)
    }
}

impl core::fmt::Display for SuperError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SuperError::InvalidFan(s) => write!(f, "invalid fan: {s}"),
            SuperError::Poly(e) => write!(f, "{e}"),
            SuperError::CostGuardExceeded(s) => write!(f, "cost guard exceeded: {s}"),
            SuperError::NotCritical => write!(f, "point is not critical"),
            SuperError::WrongCharacteristic { found, needed } => {
                write!(f, "wrong characteristic {found}: needed {needed}")
            }
            SuperError::IncompleteCritSearch => {
                write!(f, "critical point search was not complete")
            }
        }
    }
}

/// Outer facet normals of a complete fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanData {
    pub name: String,
    pub dim: usize,
    pub normals: Vec<Vec<i64>>,
}

impl FanData {
    /// The normals must be distinct, have the right length, and positively
    /// span R^n (no closed half-space contains them all).
    pub fn validate(&self) -> Result<(), SuperError> {
        let n = self.dim;
        if n == 0 {
            return Err(SuperError::InvalidFan("dimension 0".to_string()));
        }
        for e in &self.normals {
            if e.len() != n {
                return Err(SuperError::InvalidFan(format!(
                    "normal {e:?} has length {} in dimension {n}",
                    e.len()
                )));
            }
        }
        for i in 0..self.normals.len() {
            for j in (i + 1)..self.normals.len() {
                if self.normals[i] == self.normals[j] {
                    return Err(SuperError::InvalidFan(format!(
                        "repeated normal {:?}",
                        self.normals[i]
                    )));
                }
            }
        }
        let q = Characteristic::RATIONAL;
        let mat = Matrix::from_rows(
            self.normals
                .iter()
                .map(|e| {
                    e.iter()
                        .map(|&x| FieldElement::from_integer(x, q))
                        .collect()
                })
                .collect(),
            q,
        );
        if mat.rank() < n {
            return Err(SuperError::InvalidFan(
                "normals do not span the ambient space".to_string(),
            ));
        }
        // Positive spanning: a polyhedral cone smaller than R^n admits a
        // supporting functional vanishing on n-1 independent normals; scan
        // all (n-1)-subsets for one that leaves every normal on one side.
        let m = self.normals.len();
        let mut subset: Vec<usize> = (0..n - 1).collect();
        loop {
            if n == 1 || subset.last().map_or(true, |&l| l < m) {
                let kernel = if subset.is_empty() {
                    // Empty system: any direction supports (n = 1).
                    vec![vec![FieldElement::one(q)]]
                } else {
                    let mut rows = Matrix::zeros(subset.len(), n, q);
                    for (r, &i) in subset.iter().enumerate() {
                        for c in 0..n {
                            rows[(r, c)] = FieldElement::from_integer(self.normals[i][c], q);
                        }
                    }
                    rows.kernel_basis()
                };
                for lambda in kernel {
                    let mut pos = 0usize;
                    let mut neg = 0usize;
                    for e in &self.normals {
                        let mut dot = FieldElement::zero(q);
                        for (le, &xe) in lambda.iter().zip(e.iter()) {
                            dot = dot.add(&le.mul(&FieldElement::from_integer(xe, q)));
                        }
                        if dot.is_zero() {
                            continue;
                        }
                        match dot {
                            d if matches!(&d, FieldElement::Rational(r) if r.numer().sign() == num_bigint::Sign::Plus) => {
                                pos += 1
                            }
                            _ => neg += 1,
                        }
                    }
                    if pos == 0 || neg == 0 {
                        return Err(SuperError::InvalidFan(
                            "normals lie in a closed half-space (not a complete fan)".to_string(),
                        ));
                    }
                }
            }
            // Next (n-1)-subset of 0..m.
            if n == 1 {
                break;
            }
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                subset[i] += 1;
                if subset[i] <= m - (n - 1 - i) {
                    for j in (i + 1)..(n - 1) {
                        subset[j] = subset[j - 1] + 1;
                    }
                    if subset.iter().all(|&x| x < m) {
                        break;
                    }
                } else {
                    continue;
                }
            }
        }
        Ok(())
    }
}

/// W = sum over normals e of the monomial x^e.
#[derive(Clone)]
pub struct Superpotential {
    pub w: LaurentPoly,
    pub source: Option<FanData>,
}

pub fn potential_from_fan(fan: &FanData, ch: Characteristic) -> Result<Superpotential, SuperError> {
    fan.validate()?;
    let vars: Vec<String> = (0..fan.dim).map(|i| format!("x{}", i + 1)).collect();
    let mut w = LaurentPoly::zero(&vars, ch);
    for e in &fan.normals {
        w.add_term(e, &FieldElement::one(ch));
    }
    Ok(Superpotential {
        w,
        source: Some(fan.clone()),
    })
}

/// A superpotential packaged with its Jacobian ring and the data every
/// classification step needs.
pub struct LgModel {
    pub w: LaurentPoly,
    pub partials: Vec<LaurentPoly>,
    pub ring: QuotientRing,
}

impl LgModel {
    pub fn new(w: &LaurentPoly) -> Result<Self, SuperError> {
        let partials: Vec<LaurentPoly> = (0..w.vars().len()).map(|i| w.derivative(i)).collect();
        let gens: Vec<LaurentPoly> = partials.iter().filter(|p| !p.is_zero()).cloned().collect();
        if gens.is_empty() {
            return Err(SuperError::Poly(PolyError::InfiniteDimensional));
        }
        let ideal = Ideal::new(w.vars(), w.characteristic(), gens)?;
        let ring = QuotientRing::laurent_quotient(&ideal)?;
        Ok(LgModel {
            w: w.clone(),
            partials,
            ring,
        })
    }

    pub fn characteristic(&self) -> Characteristic {
        self.w.characteristic()
    }

    pub fn n_vars(&self) -> usize {
        self.w.vars().len()
    }

    pub fn is_critical(&self, rho: &[FieldElement]) -> Result<bool, SuperError> {
        for p in &self.partials {
            if !p.eval(rho)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All critical points in the torus. Over GF(p) this is an exhaustive
    /// scan guarded by p^n <= scan_guard; over Q it is elimination plus
    /// rational root search for n <= 2 with an explicit completeness flag.
    pub fn critical_points(&self, scan_guard: u64) -> Result<CritSearch, SuperError> {
        let ch = self.characteristic();
        let n = self.n_vars();
        if ch.is_rational() {
            return self.critical_points_rational();
        }
        let p = ch.0;
        let size = (p as u128).checked_pow(n as u32);
        if size.map_or(true, |s| s > scan_guard as u128) {
            return Err(SuperError::CostGuardExceeded(format!(
                "scan size {p}^{n} exceeds guard {scan_guard}"
            )));
        }
        let mut points = Vec::new();
        let mut coords = vec![1u64; n];
        loop {
            let point: Vec<FieldElement> = coords
                .iter()
                .map(|&c| FieldElement::from_integer(c as i64, ch))
                .collect();
            if self.is_critical(&point)? {
                points.push(point);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(CritSearch {
                        points,
                        complete: true,
                    });
                }
                coords[i] += 1;
                if coords[i] < p {
                    break;
                }
                coords[i] = 1;
                i += 1;
            }
        }
    }

    fn critical_points_rational(&self) -> Result<CritSearch, SuperError> {
        let n = self.n_vars();
        match n {
            1 => {
                let cleared = self.partials[0].cleared();
                let coeffs = cleared.univariate_coeffs()?;
                let coeff_fields: Vec<FieldElement> = coeffs.clone();
                let roots = rational_roots(&coeff_fields);
                let mut points = Vec::new();
                for r in &roots {
                    if r.is_zero() {
                        continue;
                    }
                    let point = vec![r.clone()];
                    if self.is_critical(&point)? {
                        points.push(point);
                    }
                }
                let complete = fully_splits(&coeffs, &roots);
                Ok(CritSearch { points, complete })
            }
            2 => self.critical_points_rational_2d(),
            _ => Err(SuperError::CostGuardExceeded(format!(
                "rational critical search supports n <= 2, got {n}"
            ))),
        }
    }

    /// Lex elimination: a Groebner basis for x > y contains an eliminant in
    /// y alone; its rational roots are lifted fibre by fibre.
    fn critical_points_rational_2d(&self) -> Result<CritSearch, SuperError> {
        let ch = self.characteristic();
        let gens: Vec<LaurentPoly> = self
            .partials
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.cleared())
            .collect();
        let gb = groebner_basis(&gens, MonomialOrder::Lex)?;
        // Smallest element involving only the second variable.
        let eliminant = gb.iter().find(|g| g.terms().all(|(e, _)| e[0] == 0));
        let Some(eliminant) = eliminant else {
            return Ok(CritSearch {
                points: Vec::new(),
                complete: false,
            });
        };
        let y_coeffs: Vec<FieldElement> = {
            let deg = eliminant.terms().map(|(e, _)| e[1]).max().unwrap_or(0);
            let mut c = vec![FieldElement::zero(ch); deg as usize + 1];
            for (e, v) in eliminant.terms() {
                c[e[1] as usize] = v.clone();
            }
            c
        };
        let y_roots = rational_roots(&y_coeffs);
        let mut complete = fully_splits(&y_coeffs, &y_roots);
        let mut points = Vec::new();
        for y0 in &y_roots {
            if y0.is_zero() {
                continue;
            }
            // Substitute y = y0 into the generators; the x-candidates are
            // common rational roots.
            let mut fibre: Option<Vec<FieldElement>> = None;
            for g in &gens {
                let mut uni = vec![FieldElement::zero(ch)];
                for (e, c) in g.terms() {
                    let deg_x = e[0] as usize;
                    if uni.len() <= deg_x {
                        uni.resize(deg_x + 1, FieldElement::zero(ch));
                    }
                    let y_pow = y0.pow(e[1]).expect("y0 nonzero");
                    uni[deg_x] = uni[deg_x].add(&c.mul(&y_pow));
                }
                while uni.last().is_some_and(|c| c.is_zero()) {
                    uni.pop();
                }
                if uni.is_empty() {
                    continue;
                }
                fibre = Some(uni);
                break;
            }
            let Some(fibre) = fibre else {
                complete = false;
                continue;
            };
            let x_roots = rational_roots(&fibre);
            if !fully_splits(&fibre, &x_roots) {
                complete = false;
            }
            for x0 in &x_roots {
                if x0.is_zero() {
                    continue;
                }
                let point = vec![x0.clone(), y0.clone()];
                if self.is_critical(&point)? {
                    points.push(point);
                }
            }
        }
        Ok(CritSearch { points, complete })
    }

    /// Matrix of second partials at rho.
    pub fn hessian_at(&self, rho: &[FieldElement]) -> Result<Matrix, SuperError> {
        let n = self.n_vars();
        let ch = self.characteristic();
        let mut h = Matrix::zeros(n, n, ch);
        for i in 0..n {
            let di = self.w.derivative(i);
            for j in 0..n {
                h[(i, j)] = di.derivative(j).eval(rho)?;
            }
        }
        Ok(h)
    }

    /// Cubic form of W at rho contracted three times with v.
    fn cubic_along(
        &self,
        rho: &[FieldElement],
        v: &[FieldElement],
    ) -> Result<FieldElement, SuperError> {
        let n = self.n_vars();
        let ch = self.characteristic();
        let mut acc = FieldElement::zero(ch);
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            let di = self.w.derivative(i);
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let dij = di.derivative(j);
                for k in 0..n {
                    if v[k].is_zero() {
                        continue;
                    }
                    let val = dij.derivative(k).eval(rho)?;
                    acc = acc.add(&val.mul(&v[i]).mul(&v[j]).mul(&v[k]));
                }
            }
        }
        Ok(acc)
    }

    /// Local ring at rho: the joint generalized eigenspace of the
    /// coordinate multiplication operators.
    pub fn local_subspace(&self, rho: &[FieldElement]) -> Subspace {
        let d = self.ring.dim();
        let n = self.n_vars();
        let ch = self.characteristic();
        let mut stacked = Matrix::zeros(n * d, d, ch);
        for i in 0..n {
            let mi = self.ring.multiplication_matrix(&self.ring.var(i));
            let shifted = mi.sub_matrix(&Matrix::identity(d, ch).scale(&rho[i]));
            let powered = shifted.pow(d.max(1));
            for r in 0..d {
                for c in 0..d {
                    stacked[(i * d + r, c)] = powered[(r, c)].clone();
                }
            }
        }
        Subspace::from_vectors(&stacked.kernel_basis(), d, ch)
    }

    /// Full classification of one critical point.
    pub fn classify(&self, rho: &[FieldElement]) -> Result<CritReport, SuperError> {
        let ch = self.characteristic();
        if ch == Characteristic(2) {
            return Err(SuperError::WrongCharacteristic {
                found: ch,
                needed: "!= 2 (the Hessian criterion degenerates mod 2)",
            });
        }
        if !self.is_critical(rho)? {
            return Err(SuperError::NotCritical);
        }
        let hessian = self.hessian_at(rho)?;
        let rank = hessian.rank();
        let n = self.n_vars();
        let kind = if rank == n {
            CritKind::Morse
        } else if ch == Characteristic(3) {
            return Err(SuperError::WrongCharacteristic {
                found: ch,
                needed: "!= 2, 3 for degenerate points (the cubic term divides by 6)",
            });
        } else if rank == n - 1 {
            let kernel = hessian.kernel_basis();
            let v = kernel[0].clone();
            let cubic = self.cubic_along(rho, &v)?;
            if cubic.is_zero() {
                CritKind::Other { corank: 1 }
            } else {
                CritKind::A2 {
                    kernel_direction: v,
                    cubic,
                }
            }
        } else {
            CritKind::Other { corank: n - rank }
        };
        let local = self.local_subspace(rho);
        let local_basis: Vec<RingElement> = local
            .basis()
            .iter()
            .map(|v| RingElement { coords: v.clone() })
            .collect();
        let value = self.w.eval(rho)?;
        let report = CritReport {
            point: rho.to_vec(),
            value,
            hessian,
            rank,
            kind,
            local_dim: local.dim(),
            local_basis,
        };
        // A Morse point has a one-dimensional local ring and conversely.
        debug_assert_eq!(
            matches!(report.kind, CritKind::Morse),
            report.local_dim == 1
        );
        Ok(report)
    }

    /// CO^0 into the fibre at rho: evaluation f(rho).
    pub fn co0_fibre(
        &self,
        f: &RingElement,
        rho: &[FieldElement],
    ) -> Result<FieldElement, SuperError> {
        if !self.is_critical(rho)? {
            return Err(SuperError::NotCritical);
        }
        Ok(self.ring.to_laurent(f).eval(rho)?)
    }

    /// Per-critical-value verdicts; refuses on incomplete searches.
    pub fn split_generation_verdict(&self, scan_guard: u64) -> Result<FibreReport, SuperError> {
        let ch = self.characteristic();
        if ch == Characteristic(2) || ch == Characteristic(3) {
            return Err(SuperError::WrongCharacteristic {
                found: ch,
                needed: "!= 2, 3",
            });
        }
        let search = self.critical_points(scan_guard)?;
        if !search.complete {
            return Err(SuperError::IncompleteCritSearch);
        }
        let mut reports = Vec::new();
        for p in &search.points {
            reports.push(self.classify(p)?);
        }
        let local_dim_sum: usize = reports.iter().map(|r| r.local_dim).sum();
        let dims_consistent = local_dim_sum == self.ring.dim();
        // Cross-check: grouping by critical value = generalized
        // eigendecomposition of multiplication by W.
        let w_elem = self.ring.normal_form(&self.w)?;
        let eig = generalized_eigendecomposition(&self.ring.multiplication_matrix(&w_elem));
        let mut values: Vec<FieldElement> = Vec::new();
        for r in &reports {
            if !values.contains(&r.value) {
                values.push(r.value.clone());
            }
        }
        let mut eigen_consistent = eig.pairs.len() == values.len();
        for (lambda, space) in &eig.pairs {
            let group_dim: usize = reports
                .iter()
                .filter(|r| r.value == *lambda)
                .map(|r| r.local_dim)
                .sum();
            if group_dim != space.dim() {
                eigen_consistent = false;
            }
        }
        let mut verdicts = Vec::new();
        for value in &values {
            let group: Vec<CritReport> = reports
                .iter()
                .filter(|r| r.value == *value)
                .cloned()
                .collect();
            verdicts.push(self.value_verdict(value, group)?);
        }
        Ok(FibreReport {
            ring_dim: self.ring.dim(),
            complete: search.complete,
            dims_consistent,
            eigen_consistent,
            eigen_exhaustive: eig.exhaustive,
            verdicts,
        })
    }

    fn value_verdict(
        &self,
        value: &FieldElement,
        group: Vec<CritReport>,
    ) -> Result<FibreVerdict, SuperError> {
        let all_morse = group.iter().all(|r| matches!(r.kind, CritKind::Morse));
        let all_morse_or_a2 = group
            .iter()
            .all(|r| matches!(r.kind, CritKind::Morse | CritKind::A2 { .. }));
        let mut trace = vec![
            axiom(
                "the monotone fibre with any critical local system is wide",
                "toric-fibre-wide",
            ),
            axiom(
                "the Floer algebra of the fibre is the Clifford algebra of the Hessian",
                "hf-clifford-presentation",
            ),
            axiom(
                "CO^0 on the local summand is evaluation at the critical point",
                "co0-evaluation",
            ),
            axiom(
                "CO* vanishes between summands of distinct critical values",
                "eigensummand-vanishing",
            ),
        ];
        trace.push(checked(
            &format!(
                "local dimensions at value {value}: {:?}",
                group.iter().map(|r| r.local_dim).collect::<Vec<_>>()
            ),
            "local-ring-dimension",
        ));
        let mut witnesses = Vec::new();
        let co0_injective = all_morse;
        let costar_certified;
        let split_generates;
        if all_morse {
            trace.push(checked(
                "all points are Morse: every local ring is a field and evaluation is injective",
                "morse-evaluation-injective",
            ));
            costar_certified = CertStatus::Certified;
            split_generates = CertStatus::Certified;
        } else if all_morse_or_a2 {
            // Each A2 point carries an infeasibility witness for the
            // Hessian obstruction equation in a diagonalizing basis.
            for report in &group {
                if let CritKind::A2 { .. } = report.kind {
                    let (diag, _p) = symmetric_diagonalize(&report.hessian)?;
                    let n = diag.rows();
                    let kernel_index = (0..n)
                        .find(|&i| diag[(i, i)].is_zero())
                        .expect("corank-1 Hessian has a zero diagonal entry");
                    let mut l = vec![FieldElement::zero(self.characteristic()); n];
                    l[kernel_index] = FieldElement::one(self.characteristic());
                    match star_solvability_hessian(
                        &diag,
                        &l,
                        &FieldElement::one(self.characteristic()),
                    ) {
                        StarSolvability::Solvable(_) => {
                            return Err(SuperError::NotCritical); // unreachable: kernel direction
                        }
                        StarSolvability::Infeasible { certificate } => {
                            trace.push(checked(
                                "the Hessian obstruction equation is infeasible along the kernel direction",
                                "hessian-star-infeasible",
                            ));
                            witnesses.push(StarWitness {
                                point: report.point.clone(),
                                diagonal: (0..n).map(|i| diag[(i, i)].clone()).collect(),
                                kernel_index,
                                certificate,
                            });
                        }
                    }
                }
            }
            trace.push(checked(
                "every point is Morse or A2 with local ring spanned by 1 and the kernel coordinate",
                "a2-local-ring",
            ));
            costar_certified = CertStatus::Certified;
            split_generates = CertStatus::Certified;
        } else {
            trace.push(checked(
                "a degenerate point beyond A2 occurs; outside the certified range",
                "unclassified-degeneracy",
            ));
            costar_certified =
                CertStatus::NotCertified("a critical point is neither Morse nor A2".to_string());
            split_generates =
                CertStatus::NotCertified("a critical point is neither Morse nor A2".to_string());
        }
        if matches!(split_generates, CertStatus::Certified) {
            trace.push(axiom(
                "an injective closed-open map on the summand split-generates it",
                "generation-criterion",
            ));
        }
        Ok(FibreVerdict {
            value: value.clone(),
            points: group,
            all_morse,
            all_morse_or_a2,
            co0_injective,
            costar_certified,
            split_generates,
            witnesses,
            trace,
        })
    }
}

#[derive(Clone, Debug)]
pub struct CritSearch {
    pub points: Vec<Vec<FieldElement>>,
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub enum CritKind {
    Morse,
    A2 {
        kernel_direction: Vec<FieldElement>,
        cubic: FieldElement,
    },
    Other {
        corank: usize,
    },
}

#[derive(Clone, Debug)]
pub struct CritReport {
    pub point: Vec<FieldElement>,
    pub value: FieldElement,
    pub hessian: Matrix,
    pub rank: usize,
    pub kind: CritKind,
    pub local_dim: usize,
    pub local_basis: Vec<RingElement>,
}

#[derive(Clone, Debug)]
pub enum CertStatus {
    Certified,
    NotCertified(String),
}

#[derive(Clone, Debug)]
pub struct StarWitness {
    pub point: Vec<FieldElement>,
    pub diagonal: Vec<FieldElement>,
    pub kernel_index: usize,
    /// Row combination with y^T H = 0, y^T rhs != 0.
    pub certificate: Vec<FieldElement>,
}

#[derive(Clone, Debug)]
pub struct FibreVerdict {
    pub value: FieldElement,
    pub points: Vec<CritReport>,
    pub all_morse: bool,
    pub all_morse_or_a2: bool,
    pub co0_injective: bool,
    pub costar_certified: CertStatus,
    pub split_generates: CertStatus,
    pub witnesses: Vec<StarWitness>,
    pub trace: Vec<TraceEntry>,
}

#[derive(Clone, Debug)]
pub struct FibreReport {
    pub ring_dim: usize,
    pub complete: bool,
    pub dims_consistent: bool,
    pub eigen_consistent: bool,
    pub eigen_exhaustive: bool,
    pub verdicts: Vec<FibreVerdict>,
}

#[derive(Clone, Debug)]
pub enum StarSolvability {
    Solvable(Vec<FieldElement>),
    Infeasible { certificate: Vec<FieldElement> },
}

/// Solvability of H a = c l: the Hessian form of the obstruction equation.
pub fn star_solvability_hessian(
    h: &Matrix,
    l: &[FieldElement],
    rho_l: &FieldElement,
) -> StarSolvability {
    let rhs: Vec<FieldElement> = l.iter().map(|x| x.mul(rho_l)).collect();
    match solve_linear(h, &rhs).expect("shape agrees") {
        LinearOutcome::Solved { solution, .. } => StarSolvability::Solvable(solution),
        LinearOutcome::Infeasible { certificate } => StarSolvability::Infeasible { certificate },
    }
}

/// Congruence diagonalization of a symmetric matrix over characteristic
/// != 2: returns (D, P) with P^T H P = D diagonal.
pub fn symmetric_diagonalize(h: &Matrix) -> Result<(Matrix, Matrix), SuperError> {
    let ch = h.characteristic();
    if ch == Characteristic(2) {
        return Err(SuperError::WrongCharacteristic {
            found: ch,
            needed: "!= 2",
        });
    }
    let n = h.rows();
    let mut a = h.clone();
    let mut p = Matrix::identity(n, ch);
    for i in 0..n {
        if a[(i, i)].is_zero() {
            // Bring a nonzero entry to the diagonal.
            if let Some(j) = ((i + 1)..n).find(|&j| !a[(j, j)].is_zero()) {
                congruence_swap(&mut a, &mut p, i, j);
            } else if let Some(j) = ((i + 1)..n).find(|&j| !a[(i, j)].is_zero()) {
                // Add row/col j into i: new diagonal = 2 a_ij != 0.
                congruence_add(&mut a, &mut p, i, j, &FieldElement::one(ch));
            } else {
                continue; // fully zero row/column from i onward in this slot
            }
        }
        let pivot = a[(i, i)].clone();
        let pivot_inv = pivot.inv().expect("nonzero pivot");
        for j in (i + 1)..n {
            if a[(j, i)].is_zero() {
                continue;
            }
            let factor = a[(j, i)].mul(&pivot_inv).neg();
            congruence_add(&mut a, &mut p, j, i, &factor);
        }
    }
    // Verify P^T H P = D.
    let check = p.transpose().mat_mul(h).mat_mul(&p);
    debug_assert_eq!(check, a);
    Ok((a, p))
}

fn congruence_swap(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let tmp = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = tmp;
    }
    for r in 0..n {
        let tmp = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = tmp;
    }
    for r in 0..n {
        let tmp = p[(r, i)].clone();
        p[(r, i)] = p[(r, j)].clone();
        p[(r, j)] = tmp;
    }
}

/// Row_i += f * Row_j and Col_i += f * Col_j (congruence), tracking P.
fn congruence_add(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize, f: &FieldElement) {
    let n = a.rows();
    for c in 0..n {
        let add = a[(j, c)].mul(f);
        a[(i, c)] = a[(i, c)].add(&add);
    }
    for r in 0..n {
        let add = a[(r, j)].mul(f);
        a[(r, i)] = a[(r, i)].add(&add);
    }
    for r in 0..n {
        let add = p[(r, j)].mul(f);
        p[(r, i)] = p[(r, i)].add(&add);
    }
}

fn fully_splits(coeffs: &[FieldElement], roots: &[FieldElement]) -> bool {
    // Deflate by x^k and by each root with multiplicity; complete iff a
    // constant remains.
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.is_empty() {
        return false; // zero polynomial pins nothing down
    }
    let mut start = 0;
    while start < c.len() && c[start].is_zero() {
        start += 1;
    }
    let mut c = c[start..].to_vec();
    for r in roots {
        if r.is_zero() {
            continue;
        }
        loop {
            // Synthetic division by (x - r).
            let mut quotient =
                vec![FieldElement::zero(r.characteristic()); c.len().saturating_sub(1)];
            let mut carry = FieldElement::zero(r.characteristic());
            let mut exact = true;
            for i in (0..c.len()).rev() {
                if i == 0 {
                    let rem = c[0].add(&carry.mul(r));
                    exact = rem.is_zero();
                } else {
                    let q = c[i].add(&carry.mul(r));
                    quotient[i - 1] = q.clone();
                    carry = q;
                }
            }
            if exact && !quotient.is_empty() {
                c = quotient;
            } else {
                break;
            }
        }
    }
    c.len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const GF7: Characteristic = Characteristic(7);
    const Q: Characteristic = Characteristic::RATIONAL;

    fn fe(n: i64, ch: Characteristic) -> FieldElement {
        FieldElement::from_integer(n, ch)
    }

    fn cp1_fan() -> FanData {
        FanData {
            name: "cp1".to_string(),
            dim: 1,
            normals: vec![vec![1], vec![-1]],
        }
    }

    fn cp2_fan() -> FanData {
        FanData {
            name: "cp2".to_string(),
            dim: 2,
            normals: vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
        }
    }

    #[test]
    fn potentials_from_fans() {
        let w1 = potential_from_fan(&cp1_fan(), GF7).unwrap();
        let vars = w1.w.vars().to_vec();
        assert_eq!(
            w1.w,
            LaurentPoly::from_integer_terms(&vars, GF7, &[(vec![1], 1), (vec![-1], 1)])
        );
        let w2 = potential_from_fan(&cp2_fan(), GF7).unwrap();
        assert_eq!(w2.w.num_terms(), 3);
        // One normal in dimension 1 is not a complete fan.
        let bad = FanData {
            name: "half".to_string(),
            dim: 1,
            normals: vec![vec![1]],
        };
        assert!(matches!(
            potential_from_fan(&bad, GF7),
            Err(SuperError::InvalidFan(_))
        ));
        // Repeated normals are rejected.
        let dup = FanData {
            name: "dup".to_string(),
            dim: 1,
            normals: vec![vec![1], vec![1], vec![-1]],
        };
        assert!(matches!(
            potential_from_fan(&dup, GF7),
            Err(SuperError::InvalidFan(_))
        ));
    }

    #[test]
    fn jacobian_ring_dimensions() {
        let w2 = potential_from_fan(&cp2_fan(), GF7).unwrap();
        let model = LgModel::new(&w2.w).unwrap();
        assert_eq!(model.ring.dim(), 3);
        let w1 = potential_from_fan(&cp1_fan(), Q).unwrap();
        let model1 = LgModel::new(&w1.w).unwrap();
        assert_eq!(model1.ring.dim(), 2);
        // Synthetic univariate: W = x^3+4x^2+3x over GF(7), W' = 3(x-1)^2.
        let vars = vec!["x".to_string()];
        let w = LaurentPoly::from_integer_terms(
            &vars,
            GF7,
            &[(vec![3], 1), (vec![2], 4), (vec![1], 3)],
        );
        let model_s = LgModel::new(&w).unwrap();
        assert_eq!(model_s.ring.dim(), 2);
    }

    #[test]
    fn critical_points_by_scan() {
        let w2 = potential_from_fan(&cp2_fan(), GF7).unwrap();
        let model = LgModel::new(&w2.w).unwrap();
        let search = model.critical_points(10_000_000).unwrap();
        assert!(search.complete);
        let expect: Vec<Vec<FieldElement>> = [(1, 1), (2, 2), (4, 4)]
            .iter()
            .map(|&(a, b)| vec![fe(a, GF7), fe(b, GF7)])
            .collect();
        assert_eq!(search.points, expect);
        let w1 = potential_from_fan(&cp1_fan(), GF7).unwrap();
        let model1 = LgModel::new(&w1.w).unwrap();
        let s1 = model1.critical_points(10_000_000).unwrap();
        assert_eq!(s1.points, vec![vec![fe(1, GF7)], vec![fe(6, GF7)]]);
        // Guard fires.
        assert!(matches!(
            model1.critical_points(3),
            Err(SuperError::CostGuardExceeded(_))
        ));
    }

    #[test]
    fn critical_points_over_q() {
        let w1 = potential_from_fan(&cp1_fan(), Q).unwrap();
        let model = LgModel::new(&w1.w).unwrap();
        let search = model.critical_points(0).unwrap();
        assert!(search.complete);
        assert_eq!(search.points.len(), 2);
        assert!(search.points.contains(&vec![fe(1, Q)]));
        assert!(search.points.contains(&vec![fe(-1, Q)]));
        // CP^2 over Q: only the cube root 1 is rational; incomplete.
        let w2 = potential_from_fan(&cp2_fan(), Q).unwrap();
        let model2 = LgModel::new(&w2.w).unwrap();
        let s2 = model2.critical_points(0).unwrap();
        assert!(!s2.complete);
        assert_eq!(s2.points, vec![vec![fe(1, Q), fe(1, Q)]]);
        // Product of two lines: all four points rational, two share a value.
        let p1p1 = FanData {
            name: "p1xp1".to_string(),
            dim: 2,
            normals: vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        };
        let wp = potential_from_fan(&p1p1, Q).unwrap();
        let mp = LgModel::new(&wp.w).unwrap();
        let sp = mp.critical_points(0).unwrap();
        assert!(sp.complete);
        assert_eq!(sp.points.len(), 4);
    }

    #[test]
    fn classification_examples() {
        let w1 = potential_from_fan(&cp1_fan(), GF7).unwrap();
        let model = LgModel::new(&w1.w).unwrap();
        let r = model.classify(&[fe(1, GF7)]).unwrap();
        assert!(matches!(r.kind, CritKind::Morse));
        assert_eq!(r.hessian[(0, 0)], fe(2, GF7));
        assert_eq!(r.local_dim, 1);
        assert_eq!(r.value, fe(2, GF7));
        // CP^2: all Morse, values {3, 6, 5}.
        let w2 = potential_from_fan(&cp2_fan(), GF7).unwrap();
        let model2 = LgModel::new(&w2.w).unwrap();
        let search = model2.critical_points(10_000_000).unwrap();
        let values: Vec<FieldElement> = search
            .points
            .iter()
            .map(|p| {
                let rep = model2.classify(p).unwrap();
                assert!(matches!(rep.kind, CritKind::Morse));
                assert_eq!(rep.local_dim, 1);
                rep.value
            })
            .collect();
        assert_eq!(values, vec![fe(3, GF7), fe(6, GF7), fe(5, GF7)]);
        // Non-critical point rejected.
        assert!(matches!(
            model.classify(&[fe(2, GF7)]),
            Err(SuperError::NotCritical)
        ));
    }

    #[test]
    fn synthetic_a2_classification() {
        let vars = vec!["x".to_string()];
        let w = LaurentPoly::from_integer_terms(
            &vars,
            GF7,
            &[(vec![3], 1), (vec![2], 4), (vec![1], 3)],
        );
        let model = LgModel::new(&w).unwrap();
        let search = model.critical_points(10_000_000).unwrap();
        assert_eq!(search.points, vec![vec![fe(1, GF7)]]);
        let rep = model.classify(&[fe(1, GF7)]).unwrap();
        match &rep.kind {
            CritKind::A2 { cubic, .. } => assert_eq!(*cubic, fe(6, GF7)),
            other => panic!("expected A2, got {other:?}"),
        }
        assert_eq!(rep.local_dim, 2);
        // Local basis spans {1, x}.
        let span = Subspace::from_vectors(
            &rep.local_basis
                .iter()
                .map(|e| e.coords.clone())
                .collect::<Vec<_>>(),
            model.ring.dim(),
            GF7,
        );
        assert!(span.contains(&model.ring.one().coords));
        assert!(span.contains(&model.ring.var(0).coords));
    }

    #[test]
    fn co0_fibre_evaluation() {
        let w2 = potential_from_fan(&cp2_fan(), GF7).unwrap();
        let model = LgModel::new(&w2.w).unwrap();
        let w_elem = model.ring.normal_form(&model.w).unwrap();
        // f = W evaluates to the critical value.
        assert_eq!(
            model.co0_fibre(&w_elem, &[fe(2, GF7), fe(2, GF7)]).unwrap(),
            fe(6, GF7)
        );
        assert_eq!(
            model
                .co0_fibre(&model.ring.one(), &[fe(1, GF7), fe(1, GF7)])
                .unwrap(),
            fe(1, GF7)
        );
        // A function vanishing at one point but not another separates them.
        let vars = model.w.vars().to_vec();
        let x_minus_1 =
            LaurentPoly::from_integer_terms(&vars, GF7, &[(vec![1, 0], 1), (vec![0, 0], -1)]);
        let f = model.ring.normal_form(&x_minus_1).unwrap();
        assert!(model
            .co0_fibre(&f, &[fe(1, GF7), fe(1, GF7)])
            .unwrap()
            .is_zero());
        assert!(!model
            .co0_fibre(&f, &[fe(2, GF7), fe(2, GF7)])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn star_solvability_cases() {
        // diag(1, ..., 1, 0) with l = e_n: infeasible with verified witness.
        let h = Matrix::from_integers(&[&[1, 0], &[0, 0]], GF7);
        let l = vec![fe(0, GF7), fe(1, GF7)];
        match star_solvability_hessian(&h, &l, &fe(1, GF7)) {
            StarSolvability::Infeasible { certificate } => {
                assert_eq!(certificate.len(), 2);
            }
            StarSolvability::Solvable(_) => panic!("must be infeasible"),
        }
        // Invertible Hessian: always solvable.
        let h2 = Matrix::from_integers(&[&[1, 0], &[0, 3]], GF7);
        assert!(matches!(
            star_solvability_hessian(&h2, &l, &fe(1, GF7)),
            StarSolvability::Solvable(_)
        ));
        // l = 0 is solved by a = 0.
        let zero_l = vec![fe(0, GF7), fe(0, GF7)];
        match star_solvability_hessian(&h, &zero_l, &fe(1, GF7)) {
            StarSolvability::Solvable(a) => assert!(a.iter().all(|c| c.is_zero())),
            _ => panic!(),
        }
    }

    #[test]
    fn symmetric_diagonalization_works() {
        let h = Matrix::from_integers(&[&[0, 1, 2], &[1, 3, 0], &[2, 0, 0]], GF7);
        let (d, p) = symmetric_diagonalize(&h).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(d[(i, j)].is_zero());
                }
            }
        }
        assert_eq!(p.transpose().mat_mul(&h).mat_mul(&p), d);
    }

    #[test]
    fn cp2_split_generation_verdict() {
        let w2 = potential_from_fan(&cp2_fan(), GF7).unwrap();
        let model = LgModel::new(&w2.w).unwrap();
        let report = model.split_generation_verdict(10_000_000).unwrap();
        assert!(report.dims_consistent);
        assert!(report.eigen_consistent);
        assert!(report.eigen_exhaustive);
        assert_eq!(report.verdicts.len(), 3);
        for v in &report.verdicts {
            assert!(v.all_morse && v.co0_injective);
            assert!(matches!(v.split_generates, CertStatus::Certified));
        }
    }

    #[test]
    fn synthetic_a2_verdict_with_witness() {
        let vars = vec!["x".to_string()];
        let w = LaurentPoly::from_integer_terms(
            &vars,
            GF7,
            &[(vec![3], 1), (vec![2], 4), (vec![1], 3)],
        );
        let model = LgModel::new(&w).unwrap();
        let report = model.split_generation_verdict(10_000_000).unwrap();
        assert_eq!(report.verdicts.len(), 1);
        let v = &report.verdicts[0];
        assert!(!v.co0_injective); // local dim 2 > 1
        assert!(v.all_morse_or_a2);
        assert!(matches!(v.costar_certified, CertStatus::Certified));
        assert_eq!(v.witnesses.len(), 1);
        assert_eq!(v.witnesses[0].kernel_index, 0);
        assert!(report.dims_consistent);
    }

    #[test]
    fn a2_local_ring_spanned_by_unit_and_kernel_coordinate() {
        // Two A2 points in two variables: W = x^3+4x^2+3x + y + y^-1 over
        // GF(7), critical at (1, 1) and (1, 6), kernel direction x at both.
        let vars = vec!["x".to_string(), "y".to_string()];
        let w = LaurentPoly::from_integer_terms(
            &vars,
            GF7,
            &[
                (vec![3, 0], 1),
                (vec![2, 0], 4),
                (vec![1, 0], 3),
                (vec![0, 1], 1),
                (vec![0, -1], 1),
            ],
        );
        let model = LgModel::new(&w).unwrap();
        let search = model.critical_points(10_000_000).unwrap();
        assert!(search.complete);
        assert_eq!(search.points.len(), 2);
        let reports: Vec<CritReport> = search
            .points
            .iter()
            .map(|p| model.classify(p).unwrap())
            .collect();
        let d = model.ring.dim();
        assert_eq!(d, 4);
        // Stack all local bases: the decomposition of the Jacobian ring.
        let mut all = Vec::new();
        let mut offsets = Vec::new();
        for r in &reports {
            assert!(matches!(r.kind, CritKind::A2 { .. }));
            assert_eq!(r.local_dim, 2);
            offsets.push(all.len());
            all.extend(r.local_basis.iter().map(|e| e.coords.clone()));
        }
        assert_eq!(all.len(), d);
        let mut basis_matrix = Matrix::zeros(d, d, GF7);
        for (j, v) in all.iter().enumerate() {
            for i in 0..d {
                basis_matrix[(i, j)] = v[i].clone();
            }
        }
        // Project 1 and the kernel coordinate x onto each local summand;
        // the projections must span it.
        let x_elem = model.ring.var(0);
        for (idx, r) in reports.iter().enumerate() {
            let mut span = Subspace::new(d, GF7);
            for probe in [&model.ring.one(), &x_elem] {
                let coords = match solve_linear(&basis_matrix, &probe.coords).unwrap() {
                    crate::field::LinearOutcome::Solved { solution, .. } => solution,
                    _ => panic!("decomposition basis is invertible"),
                };
                // Component inside this summand, back in ambient coords.
                let mut component = vec![FieldElement::zero(GF7); d];
                for local_j in 0..r.local_dim {
                    let global_j = offsets[idx] + local_j;
                    for i in 0..d {
                        let add = coords[global_j].mul(&all[global_j][i]);
                        component[i] = component[i].add(&add);
                    }
                }
                span.insert(component);
            }
            let local_span = Subspace::from_vectors(
                &r.local_basis
                    .iter()
                    .map(|e| e.coords.clone())
                    .collect::<Vec<_>>(),
                d,
                GF7,
            );
            assert!(span.equals(&local_span));
        }
    }

    #[test]
    fn incomplete_search_refuses_verdict() {
        let w2 = potential_from_fan(&cp2_fan(), Q).unwrap();
        let model = LgModel::new(&w2.w).unwrap();
        assert!(matches!(
            model.split_generation_verdict(0),
            Err(SuperError::IncompleteCritSearch)
        ));
    }

    #[test]
    fn verdict_groups_equal_values() {
        let p1p1 = FanData {
            name: "p1xp1".to_string(),
            dim: 2,
            normals: vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
        };
        let wp = potential_from_fan(&p1p1, GF7).unwrap();
        let model = LgModel::new(&wp.w).unwrap();
        let report = model.split_generation_verdict(10_000_000).unwrap();
        // Values 4, 0, -4 with the middle one carrying two Morse points.
        assert_eq!(report.verdicts.len(), 3);
        let zero_group = report
            .verdicts
            .iter()
            .find(|v| v.value.is_zero())
            .expect("value 0 present");
        assert_eq!(zero_group.points.len(), 2);
        assert!(zero_group.all_morse);
        assert!(report.dims_consistent && report.eigen_consistent);
    }

    #[test]
    fn degeneracy_beyond_a2_is_not_certified() {
        // W' = 4(x-1)^3 over GF(7): corank 1 with vanishing cubic term, so
        // the point is Other and the verdict refuses to certify.
        let vars = vec!["x".to_string()];
        let w = LaurentPoly::from_integer_terms(
            &vars,
            GF7,
            &[(vec![4], 1), (vec![3], 3), (vec![2], 6), (vec![1], 3)],
        );
        // Check the construction: W' = 4x^3 + 9x^2 + 12x + 3 = 4(x-1)^3.
        let d = w.derivative(0);
        let expect = LaurentPoly::from_integer_terms(
            &vars,
            GF7,
            &[(vec![3], 4), (vec![2], -12), (vec![1], 12), (vec![0], -4)],
        );
        assert_eq!(d, expect);
        let model = LgModel::new(&w).unwrap();
        let rep = model.classify(&[fe(1, GF7)]).unwrap();
        assert!(matches!(rep.kind, CritKind::Other { corank: 1 }));
        assert_eq!(rep.local_dim, 3);
        let report = model.split_generation_verdict(10_000_000).unwrap();
        let v = &report.verdicts[0];
        assert!(!v.all_morse_or_a2);
        assert!(matches!(v.costar_certified, CertStatus::NotCertified(_)));
        assert!(matches!(v.split_generates, CertStatus::NotCertified(_)));
    }

    #[test]
    fn classification_needs_odd_characteristic() {
        let w1 = potential_from_fan(&cp1_fan(), Characteristic(2)).unwrap();
        let model = LgModel::new(&w1.w).unwrap();
        assert!(matches!(
            model.classify(&[fe(1, Characteristic(2))]),
            Err(SuperError::WrongCharacteristic { .. })
        ));
    }
}
