//! One function per subcommand. Each returns the machine-readable JSON
//! value together with an aligned text table; the caller picks per the
//! --format flag. Errors carry the exit-code class.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use cocert_core::ainfinity::{
    check_ainf_relations, circle_model, is_coboundary_through_length, massey_triple, AInfAlgebra,
    AInfError, BasisGen, CircleConfig, CoboundaryOutcome, HochschildCochain, MultiLinear,
};
use cocert_core::field::FieldElement;
use cocert_core::hochschild::{
    bar_hh_oracle, nonformality_certificate, AssocAlgebra, HochschildError, MonicAlgebra,
};
use cocert_core::polyring::PolyError;
use cocert_core::qh::{
    build_phi, co0_real, qh_picard2, qh_projective, seidel_picard2, verdict_real_lagrangian,
    QhError, QhPresentation, RealTarget, ToricInstance,
};
use cocert_core::superpotential::{potential_from_fan, FanData, LgModel, SuperError};
use cocert_core::{Characteristic, LaurentPoly, QuotientRing};

use crate::formats::*;
use crate::parse::{parse_univariate, ParseError};

/// Error classes mapped to exit codes: input 2, hypothesis 1, guard 3.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    #[error("cost guard: {0}")]
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Hypothesis(_) => 1,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<QhError> for CliError {
    fn from(e: QhError) -> Self {
        match &e {
            QhError::Poly(PolyError::InfiniteDimensional) => CliError::Hypothesis(e.to_string()),
            QhError::Poly(_) => CliError::Input(e.to_string()),
            _ => CliError::Hypothesis(e.to_string()),
        }
    }
}

impl From<SuperError> for CliError {
    fn from(e: SuperError) -> Self {
        match &e {
            SuperError::InvalidFan(_) => CliError::Input(e.to_string()),
            SuperError::CostGuardExceeded(_) => CliError::Guard(e.to_string()),
            _ => CliError::Hypothesis(e.to_string()),
        }
    }
}

impl From<HochschildError> for CliError {
    fn from(e: HochschildError) -> Self {
        match &e {
            HochschildError::CostGuardExceeded(_) => CliError::Guard(e.to_string()),
            HochschildError::NotUnivariate | HochschildError::Poly(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Hypothesis(e.to_string()),
        }
    }
}

impl From<AInfError> for CliError {
    fn from(e: AInfError) -> Self {
        match &e {
            AInfError::CostGuardExceeded(_) => CliError::Guard(e.to_string()),
            AInfError::ShapeMismatch(_) => CliError::Input(e.to_string()),
            _ => CliError::Hypothesis(e.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub struct CommandOutput {
    pub json: Value,
    pub table: String,
}

fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String], widths: &[usize]| -> String {
        cells
            .iter()
            .zip(widths.iter())
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    out.push_str(&fmt_row(
        &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
        &widths,
    ));
    out.push('\n');
    out.push_str(
        &widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .join("  "),
    );
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row, &widths));
        out.push('\n');
    }
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// Sixteen seeded random pairs: CO^0 must be multiplicative on the ring.
fn co0_spot_check(pres: &QhPresentation, seed: u64) -> SpotChecks {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = &pres.ring;
    let d = ring.dim();
    let trials = 16;
    let mut passed = true;
    for _ in 0..trials {
        let mut a = ring.zero();
        let mut b = ring.zero();
        for i in 0..d {
            a.coords[i] = FieldElement::from_integer(rng.gen_range(0..2), Characteristic(2));
            b.coords[i] = FieldElement::from_integer(rng.gen_range(0..2), Characteristic(2));
        }
        let lhs = co0_real(pres, &ring.mul(&a, &b));
        let rhs = ring.mul(&co0_real(pres, &a), &co0_real(pres, &b));
        if lhs != rhs {
            passed = false;
        }
    }
    SpotChecks {
        seed,
        trials,
        passed,
        description: "CO^0 multiplicativity on random pairs".to_string(),
    }
}

/// Sixteen seeded random pairs: the normal form must be a ring map.
fn nf_spot_check(ring: &QuotientRing, seed: u64) -> SpotChecks {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ch = ring.characteristic();
    let vars = ring.original_vars().to_vec();
    let trials = 16;
    let mut passed = true;
    let span = if ch.is_rational() { 5 } else { ch.0 as i64 };
    for _ in 0..trials {
        let random_poly = |rng: &mut ChaCha8Rng| {
            let mut p = LaurentPoly::zero(&vars, ch);
            for _ in 0..3 {
                let exps: Vec<i64> = (0..vars.len()).map(|_| rng.gen_range(-2..=2)).collect();
                p.add_term(
                    &exps,
                    &FieldElement::from_integer(rng.gen_range(0..span), ch),
                );
            }
            p
        };
        let f = random_poly(&mut rng);
        let g = random_poly(&mut rng);
        let lhs = ring.normal_form(&f.mul(&g)).expect("reduces");
        let rhs = ring.mul(
            &ring.normal_form(&f).expect("reduces"),
            &ring.normal_form(&g).expect("reduces"),
        );
        if lhs != rhs {
            passed = false;
        }
    }
    SpotChecks {
        seed,
        trials,
        passed,
        description: "normal form multiplicativity on random Laurent pairs".to_string(),
    }
}

pub fn cmd_rp_report(n_max: u64, seed: u64) -> Result<CommandOutput, CliError> {
    if !(1..=64).contains(&n_max) {
        return Err(CliError::Input(format!(
            "n_max must be in 1..=64, got {n_max}"
        )));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let v = verdict_real_lagrangian(&RealTarget::Projective { n })?;
        let nonformality = if n % 2 == 0 {
            "-".to_string()
        } else {
            let vars = vec!["u".to_string()];
            let f = LaurentPoly::from_integer_terms(
                &vars,
                Characteristic(2),
                &[(vec![n as i64 + 1], 1), (vec![0], 1)],
            );
            let cert = nonformality_certificate(&f, 1, true)?;
            if cert.issued {
                "certified".to_string()
            } else {
                "refused".to_string()
            }
        };
        rows.push(RpRow {
            n,
            qh_dim: v.qh_dim,
            kernel_dim: v.kernel_dim,
            co0_injective: v.co0_injective,
            costar_injective: v.costar_injective,
            split_generates: v.split_generates,
            nonformality,
        });
    }
    let pres = qh_projective(n_max.min(9), Characteristic(2))?;
    let spot = co0_spot_check(&pres, seed);
    let report = RpReportJson {
        rows: rows.clone(),
        spot_checks: spot,
    };
    let table_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.qh_dim.to_string(),
                r.kernel_dim.to_string(),
                yes_no(r.co0_injective),
                yes_no(r.costar_injective),
                yes_no(r.split_generates),
                r.nonformality.clone(),
            ]
        })
        .collect();
    let table = render_table(
        &[
            "n",
            "dim QH",
            "dim ker F",
            "CO^0 inj",
            "CO* inj",
            "split-gen",
            "non-formality",
        ],
        &table_rows,
    );
    Ok(CommandOutput {
        json: serde_json::to_value(report).expect("serializable"),
        table,
    })
}

pub fn cmd_picard2(instance: &InstanceFile, seed: u64) -> Result<CommandOutput, CliError> {
    let ch = Characteristic(instance.characteristic);
    ch.validate().map_err(|e| CliError::Input(e.to_string()))?;
    let (target, hypotheses, presentation) = match instance.family.as_str() {
        "CPn" => {
            if instance.characteristic != 2 {
                return Err(CliError::Hypothesis(
                    "real-Lagrangian verdicts are fixed to characteristic 2".to_string(),
                ));
            }
            (
                RealTarget::Projective { n: instance.n },
                vec![("n >= 1".to_string(), instance.n >= 1)],
                None,
            )
        }
        "picard2" => {
            let inst = ToricInstance::new(instance.n, instance.k, instance.a.clone(), ch)?;
            let hypotheses = inst.hypothesis_checklist();
            // The single-variable presentation exists on the higher-order
            // branch; attach its verified data when available.
            // The single-variable presentation is extra verified data; a
            // failed verification is reported, never silently trusted and
            // never fatal (the verdict route does not depend on it).
            let presentation = if hypotheses.iter().all(|(_, ok)| *ok) {
                let pres = qh_picard2(&inst)?;
                let s = seidel_picard2(&inst, &pres)?;
                let ring = &pres.ring;
                match build_phi(&inst, &pres) {
                    Ok(phi) => {
                        let s_plus_one = ring.add(&s, &ring.one());
                        let unit_mult =
                            phi.unit_multiple_of_v(&phi.map_to_u(&s_plus_one)).is_some();
                        Some(PresentationJson {
                            verified: true,
                            note: None,
                            v_poly: format!("{}", phi.v_poly),
                            seidel: ring.element_string(&s),
                            seidel_plus_one_is_unit_times_v: unit_mult,
                            phi_alpha: phi.alpha,
                            phi_beta: phi.beta,
                            phi_gcd: phi.g,
                        })
                    }
                    Err(e) => Some(PresentationJson {
                        verified: false,
                        note: Some(format!("single-variable presentation did not verify: {e}")),
                        v_poly: String::new(),
                        seidel: ring.element_string(&s),
                        seidel_plus_one_is_unit_times_v: false,
                        phi_alpha: 0,
                        phi_beta: 0,
                        phi_gcd: 0,
                    }),
                }
            } else {
                None
            };
            (RealTarget::Picard2(inst), hypotheses, presentation)
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown family '{other}' (expected \"CPn\" or \"picard2\")"
            )))
        }
    };
    let verdict = verdict_real_lagrangian(&target)?;
    let pres_for_spot = match &target {
        RealTarget::Projective { n } => qh_projective(*n, ch)?,
        RealTarget::Picard2(inst) => qh_picard2(inst)?,
    };
    let spot = co0_spot_check(&pres_for_spot, seed);
    let json = verdict_to_json(instance, hypotheses.clone(), &verdict, presentation, spot);
    let mut rows: Vec<Vec<String>> = vec![
        vec!["branch".to_string(), verdict.branch.clone()],
        vec!["QH rank".to_string(), verdict.qh_dim.to_string()],
        vec!["dim ker F".to_string(), verdict.kernel_dim.to_string()],
        vec![
            "minimal Chern".to_string(),
            verdict.minimal_chern.to_string(),
        ],
        vec!["CO^0 injective".to_string(), yes_no(verdict.co0_injective)],
        vec![
            "CO* injective".to_string(),
            yes_no(verdict.costar_injective),
        ],
        vec![
            "split-generates".to_string(),
            yes_no(verdict.split_generates),
        ],
    ];
    for (name, ok) in &hypotheses {
        rows.push(vec![format!("hypothesis: {name}"), yes_no(*ok)]);
    }
    if let Some(a) = &verdict.anomaly {
        rows.push(vec!["ANOMALY".to_string(), a.clone()]);
    }
    let table = render_table(&["field", "value"], &rows);
    Ok(CommandOutput {
        json: serde_json::to_value(json).expect("serializable"),
        table,
    })
}

pub fn cmd_fibre(
    fan_file: &FanFile,
    characteristic: u64,
    guard_scan: u64,
    seed: u64,
) -> Result<CommandOutput, CliError> {
    let ch = Characteristic(characteristic);
    ch.validate().map_err(|e| CliError::Input(e.to_string()))?;
    let fan = FanData {
        name: fan_file.name.clone(),
        dim: fan_file.dim,
        normals: fan_file.normals.clone(),
    };
    let w = potential_from_fan(&fan, ch)?;
    let model = LgModel::new(&w.w)?;
    let report = model.split_generation_verdict(guard_scan)?;
    let spot = nf_spot_check(&model.ring, seed);
    let json = fibre_report_to_json(fan_file, characteristic, &report, &model.ring, spot);
    let mut rows = Vec::new();
    for v in &report.verdicts {
        for p in &v.points {
            rows.push(vec![
                format!(
                    "({})",
                    p.point.iter().map(field_str).collect::<Vec<_>>().join(", ")
                ),
                field_str(&p.value),
                match &p.kind {
                    cocert_core::superpotential::CritKind::Morse => "Morse".to_string(),
                    cocert_core::superpotential::CritKind::A2 { .. } => "A2".to_string(),
                    cocert_core::superpotential::CritKind::Other { corank } => {
                        format!("Other(corank {corank})")
                    }
                },
                p.local_dim.to_string(),
                yes_no(v.co0_injective),
                match &v.split_generates {
                    cocert_core::superpotential::CertStatus::Certified => "certified".to_string(),
                    cocert_core::superpotential::CertStatus::NotCertified(_) => {
                        "not certified".to_string()
                    }
                },
            ]);
        }
    }
    let table = render_table(
        &[
            "point",
            "value",
            "type",
            "local dim",
            "CO^0 inj",
            "split-gen",
        ],
        &rows,
    );
    Ok(CommandOutput {
        json: serde_json::to_value(json).expect("serializable"),
        table,
    })
}

pub fn cmd_circle(config: CircleConfig) -> Result<CommandOutput, CliError> {
    let model = circle_model(config);
    let a = &model.algebra;
    let gf2 = Characteristic(2);
    let names = ["1", "u"];
    let elem_str = |v: &[FieldElement]| -> String {
        if v.iter().all(|c| c.is_zero()) {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                parts.push(names[i].to_string());
            }
        }
        parts.join("+")
    };
    // mu^3 on all display tuples.
    let mu3 = a.mu_k(3).expect("arity 3 present");
    let mut mu3_table = Vec::new();
    for t in 0..8usize {
        let display = [(t >> 2) & 1, (t >> 1) & 1, t & 1];
        let args: Vec<usize> = display.iter().rev().copied().collect();
        let val = mu3.get(&args);
        mu3_table.push(Mu3Entry {
            inputs: display.iter().map(|&i| names[i].to_string()).collect(),
            value: elem_str(val),
        });
    }
    let relations = check_ainf_relations(a, 4)?;
    let one_plus_u = vec![FieldElement::one(gf2), FieldElement::one(gf2)];
    let massey = massey_triple(a, &one_plus_u)?;
    let massey_json = MasseyJson {
        literal_value: elem_str(&massey.value),
        tabulated_value: elem_str(&model.tabulated_triple),
        discrepancy: massey.value != model.tabulated_triple,
        indeterminacy_dim: massey.indeterminacy.dim(),
        nonzero_mod_indeterminacy: massey.nonzero_mod_ideal,
    };
    let mut h = HochschildCochain::zero(a, 1, 0);
    h.components[1].set(&[1], vec![FieldElement::one(gf2), FieldElement::zero(gf2)]);
    let co1_is_coboundary = matches!(
        is_coboundary_through_length(&h, a, 1)?,
        CoboundaryOutcome::Primitive(_)
    );
    let report = CircleReportJson {
        config: match config {
            CircleConfig::A => "a".to_string(),
            CircleConfig::B => "b".to_string(),
        },
        mu3_table,
        relation_check_through_arity_4: relation_check_to_json(&relations),
        massey: massey_json.clone(),
        co1_cochain_is_coboundary: co1_is_coboundary,
    };
    let mut rows: Vec<Vec<String>> = report
        .mu3_table
        .iter()
        .map(|e| {
            vec![
                format!("mu3({}, {}, {})", e.inputs[0], e.inputs[1], e.inputs[2]),
                e.value.clone(),
            ]
        })
        .collect();
    rows.push(vec![
        "structure relations through arity 4".to_string(),
        if report.relation_check_through_arity_4.passed {
            "pass".to_string()
        } else {
            "FAIL (reported as data)".to_string()
        },
    ]);
    rows.push(vec![
        "Massey value (literal / tabulated)".to_string(),
        format!(
            "{} / {}",
            massey_json.literal_value, massey_json.tabulated_value
        ),
    ]);
    rows.push(vec![
        "nonzero mod (1+u)".to_string(),
        yes_no(massey_json.nonzero_mod_indeterminacy),
    ]);
    rows.push(vec![
        "CO^1 cochain is a coboundary".to_string(),
        yes_no(co1_is_coboundary),
    ]);
    let table = render_table(&["item", "value"], &rows);
    Ok(CommandOutput {
        json: serde_json::to_value(report).expect("serializable"),
        table,
    })
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_hochschild(
    f_text: &str,
    characteristic: u64,
    k_max: usize,
    run_oracle: bool,
    guard_dim: usize,
    generator_exponent: Option<u64>,
    pairing_axiom: bool,
) -> Result<CommandOutput, CliError> {
    let ch = Characteristic(characteristic);
    ch.validate().map_err(|e| CliError::Input(e.to_string()))?;
    let f = parse_univariate(f_text, ch)?;
    let alg = MonicAlgebra::new(&f)?;
    let dims = alg.hh_dims_holm(k_max);
    let (oracle_dims, oracle_agrees) = if run_oracle {
        let assoc = AssocAlgebra::from_quotient_ring(&alg.ring);
        let mut od = Vec::new();
        for k in 0..=k_max.min(3) {
            od.push(bar_hh_oracle(&assoc, k, guard_dim)?);
        }
        let agrees = od.iter().zip(dims.iter()).all(|(a, b)| a == b);
        (Some(od), Some(agrees))
    } else {
        (None, None)
    };
    let e = alg.yoneda_scale_element();
    let e_inv = alg.ring.is_invertible(&e);
    let certificate = match generator_exponent {
        Some(t) => Some(certificate_to_json(&nonformality_certificate(
            &f,
            t,
            pairing_axiom,
        )?)),
        None => None,
    };
    let report = HochschildReportJson {
        f: format!("{f}"),
        characteristic,
        algebra_dim: alg.dim(),
        hh_dims: dims.clone(),
        oracle_dims: oracle_dims.clone(),
        oracle_agrees,
        yoneda_scale: alg.ring.element_string(&e),
        yoneda_scale_invertible: e_inv,
        certificate: certificate.clone(),
    };
    let mut rows: Vec<Vec<String>> = vec![
        vec!["f".to_string(), report.f.clone()],
        vec!["dim A".to_string(), report.algebra_dim.to_string()],
        vec![
            format!("HH^0..HH^{k_max}"),
            dims.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", "),
        ],
        vec!["E".to_string(), report.yoneda_scale.clone()],
        vec!["E invertible".to_string(), yes_no(e_inv)],
    ];
    if let Some(od) = &oracle_dims {
        rows.push(vec![
            "bar oracle".to_string(),
            od.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", "),
        ]);
        rows.push(vec![
            "oracle agrees".to_string(),
            yes_no(oracle_agrees.unwrap_or(false)),
        ]);
    }
    if let Some(cert) = &certificate {
        rows.push(vec![
            "non-formality certificate".to_string(),
            if cert.issued { "issued" } else { "refused" }.to_string(),
        ]);
        for c in &cert.hypotheses {
            rows.push(vec![format!("clause: {}", c.name), c.status.clone()]);
        }
    }
    let table = render_table(&["item", "value"], &rows);
    Ok(CommandOutput {
        json: serde_json::to_value(report).expect("serializable"),
        table,
    })
}

fn multilinear_from_json(
    entries: &[Vec<i64>],
    arity: usize,
    dim: usize,
    ch: Characteristic,
) -> Result<MultiLinear, CliError> {
    let expected = dim.pow(arity as u32);
    if entries.len() != expected {
        return Err(CliError::Input(format!(
            "mu^{arity} needs {expected} entries (dim^{arity}), got {}",
            entries.len()
        )));
    }
    let mut m = MultiLinear::zero(arity, dim, ch);
    for (t, coords) in entries.iter().enumerate() {
        if coords.len() != dim {
            return Err(CliError::Input(format!(
                "mu^{arity} entry {t} has {} coordinates, expected {dim}",
                coords.len()
            )));
        }
        // Display-order unranking: leftmost input most significant.
        let mut display = vec![0usize; arity];
        let mut idx = t;
        for slot in (0..arity).rev() {
            display[slot] = idx % dim;
            idx /= dim;
        }
        let value: Vec<FieldElement> = coords
            .iter()
            .map(|&c| FieldElement::from_integer(c, ch))
            .collect();
        m.set_display(&display, value);
    }
    Ok(m)
}

pub fn ainf_from_file(file: &AInfFile) -> Result<AInfAlgebra, CliError> {
    let ch = Characteristic(file.characteristic);
    ch.validate().map_err(|e| CliError::Input(e.to_string()))?;
    let dim = file.basis.len();
    if dim == 0 {
        return Err(CliError::Input("empty basis".to_string()));
    }
    let mut max_arity = 1;
    for key in file.mu.keys() {
        let k: usize = key
            .parse()
            .map_err(|_| CliError::Input(format!("mu key '{key}' is not an arity")))?;
        if k == 0 {
            return Err(CliError::Input(
                "mu^0 (curvature) is not supported".to_string(),
            ));
        }
        max_arity = max_arity.max(k);
    }
    let mut mu = Vec::new();
    for k in 1..=max_arity {
        let m = match file.mu.get(&k.to_string()) {
            Some(entries) => multilinear_from_json(entries, k, dim, ch)?,
            None => MultiLinear::zero(k, dim, ch),
        };
        mu.push(m);
    }
    Ok(AInfAlgebra {
        basis: file
            .basis
            .iter()
            .map(|b| BasisGen {
                name: b.name.clone(),
                z2_degree: (b.deg.rem_euclid(2)) as u8,
                z_degree: Some(b.deg),
            })
            .collect(),
        ch,
        unit: None,
        mu,
    })
}

/// mu^2(b_i, b_j) must land in degree |b_i| + |b_j| mod 2 for a graded
/// algebra; reported as data since user tables may be deliberately odd.
fn mu2_is_degree_additive(a: &AInfAlgebra) -> bool {
    let Some(mu2) = a.mu_k(2) else { return true };
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            let val = mu2.get(&[j, i]);
            let want = (a.basis[i].z2_degree + a.basis[j].z2_degree) % 2;
            for (out, c) in val.iter().enumerate() {
                if !c.is_zero() && a.basis[out].z2_degree != want {
                    return false;
                }
            }
        }
    }
    true
}

pub fn cmd_ainf_check(
    file: &AInfFile,
    arity: Option<usize>,
    cochain: Option<(&CochainFile, usize)>,
) -> Result<CommandOutput, CliError> {
    let a = ainf_from_file(file)?;
    let m = arity.unwrap_or(a.arity_bound()).min(a.arity_bound());
    let relations = check_ainf_relations(&a, m)?;
    let mu2_degree_additive = mu2_is_degree_additive(&a);
    let coboundary = match cochain {
        None => None,
        Some((cfile, length)) => {
            let mut h = HochschildCochain::zero(&a, length, cfile.parity);
            for (key, entries) in &cfile.components {
                let k: usize = key
                    .parse()
                    .map_err(|_| CliError::Input(format!("component key '{key}'")))?;
                if k > length {
                    continue;
                }
                let m = multilinear_from_json(entries, k, a.dim(), a.ch)?;
                h.components[k] = m;
            }
            match is_coboundary_through_length(&h, &a, length)? {
                CoboundaryOutcome::Primitive(_) => Some(CoboundaryJson {
                    length,
                    is_coboundary: true,
                    infeasibility_certificate: None,
                }),
                CoboundaryOutcome::NotCoboundary { certificate } => Some(CoboundaryJson {
                    length,
                    is_coboundary: false,
                    infeasibility_certificate: Some(certificate.iter().map(field_str).collect()),
                }),
            }
        }
    };
    let report = AinfCheckJson {
        dim: a.dim(),
        characteristic: file.characteristic,
        arity_checked: m,
        mu2_degree_additive,
        relations: relation_check_to_json(&relations),
        coboundary: coboundary.clone(),
    };
    let mut rows = vec![
        vec!["dimension".to_string(), a.dim().to_string()],
        vec![
            "mu^2 degree-additive mod 2".to_string(),
            yes_no(mu2_degree_additive),
        ],
        vec!["relations checked through arity".to_string(), m.to_string()],
        vec![
            "relations".to_string(),
            if relations.passed {
                "pass".to_string()
            } else {
                "fail".to_string()
            },
        ],
    ];
    if let Some((k, inputs, _)) = &relations.first_failure {
        rows.push(vec![
            "first failure".to_string(),
            format!("arity {k} at ({})", inputs.join(", ")),
        ]);
    }
    if let Some(c) = &coboundary {
        rows.push(vec![
            format!("coboundary through length {}", c.length),
            yes_no(c.is_coboundary),
        ]);
    }
    let table = render_table(&["item", "value"], &rows);
    Ok(CommandOutput {
        json: serde_json::to_value(report).expect("serializable"),
        table,
    })
}
