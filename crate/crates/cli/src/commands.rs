//! One function per subcommand; each returns a [`Report`].

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use psilab_core::equivariant::{
    equivariant_tors, predicted_equivariant_tors, restriction_decomposition, schur_character, CharacterTable, SpechtDecomposition,
    TorReading,
};
use psilab_core::field::{Field, FieldChoice, PrimeField, Rationals};
use psilab_core::homology::{closed_form_betti, golod_series, koszul_betti, koszul_substituted_series, resolve_k_over_a, series_quotient};
use psilab_core::inverse::{classify, QuotientAlgebra};
use psilab_core::linrel::{analyze_aprime, build_full_system, build_symmetric_matrix, relation_report};
use psilab_core::monomial::count_monomials;
use psilab_core::partitions::{partition_count, Partition};
use psilab_core::poly::parse_rational;
use psilab_core::psi::{build_construction_f, extract_params, orbit_span, sample_general_f, TParams};
use psilab_core::{Error as CoreError, Polynomial};

use crate::config::{BettiMode, Cli, Command, PolySource, RunConfig};
use crate::report::{Check, Claim, Provenance, Report, Section, Status};
use crate::verify;

/// Runs the parsed command line.
pub fn run(cli: &Cli) -> Result<Report> {
    let cfg = RunConfig::from_cli(cli);
    let start = Instant::now();
    let result = match cli.field {
        FieldChoice::Rational => dispatch(&Rationals, &cfg, &cli.command),
        FieldChoice::Prime(p) => dispatch(&PrimeField::new(p)?, &cfg, &cli.command),
    };
    let mut report = match result {
        Ok(r) => r,
        Err(e) => match e.downcast_ref::<CoreError>() {
            // Resource guards turn into a partial report rather than a hard error.
            Some(CoreError::Resource(_)) | Some(CoreError::NonArtinian { .. }) => {
                let mut r = Report::new(command_name(&cli.command), serde_json::to_value(&cfg)?);
                r.status = Status::Partial(e.to_string());
                r
            }
            _ => return Err(e),
        },
    };
    report.set_elapsed(start.elapsed());
    Ok(report)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Sample { .. } => "sample",
        Command::Construct { .. } => "construct",
        Command::OrbitDim { .. } => "orbit-dim",
        Command::Inverse { .. } => "inverse",
        Command::Classify { .. } => "classify",
        Command::Betti { .. } => "betti",
        Command::GolodCheck { .. } => "golod-check",
        Command::Linrel { .. } => "linrel",
        Command::Equivariant { .. } => "equivariant",
        Command::Restrict { .. } => "restrict",
        Command::VerifyPaper { .. } => "verify-paper",
    }
}

fn dispatch<F: Field>(field: &F, cfg: &RunConfig, cmd: &Command) -> Result<Report> {
    let mut report = Report::new(command_name(cmd), serde_json::to_value(cfg)?);
    match cmd {
        Command::Sample { n, d, seed, bound } => sample(field, cfg, *n, *d, *seed, *bound, &mut report)?,
        Command::Construct { d, n } => construct(field, cfg, *d, *n, &mut report)?,
        Command::OrbitDim { source } => orbit_dim(field, cfg, source, &mut report)?,
        Command::Inverse { source, degree, cap } => inverse(field, cfg, source, *degree, *cap, &mut report)?,
        Command::Classify { source, cap } => classify_cmd(field, cfg, source, *cap, &mut report)?,
        Command::Betti { source, oracle, formula, .. } => betti(field, cfg, source, BettiMode::from_flags(*oracle, *formula), &mut report)?,
        Command::GolodCheck { source, max_i, max_entries } => golod_check(field, cfg, source, *max_i, *max_entries, &mut report)?,
        Command::Linrel { n, d, t, t_zero, t_seed } => linrel(field, *n, *d, t.as_deref(), *t_zero, *t_seed, &mut report)?,
        Command::Equivariant { source, i, j } => equivariant(field, cfg, source, *i, *j, &mut report)?,
        Command::Restrict { schur, n } => restrict(schur, *n, &mut report)?,
        Command::VerifyPaper { suite } => verify_paper(suite, &mut report)?,
    }
    Ok(report)
}

/// The polynomial echo: text, exponent-vector terms and the variable count.
pub fn poly_echo<F: Field>(f: &Polynomial<F>) -> Value {
    json!({"text": f.to_string(), "n": f.nvars(), "terms": f.to_json_terms()})
}

/// Reads or samples the generator described by `src`, and records it in the report.
fn load_poly<F: Field>(field: &F, cfg: &RunConfig, src: &PolySource, report: &mut Report) -> Result<Polynomial<F>> {
    let f = match &src.poly {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Polynomial::parse(field.clone(), &text, src.n)?
        }
        None => {
            let n = src.n.ok_or_else(|| anyhow!("either --poly or both --n and --d are required"))?;
            let d = src.d.ok_or_else(|| anyhow!("either --poly or both --n and --d are required"))?;
            sample_general_f(field, n, d, src.seed, src.bound)?
        }
    };
    let d = f.homogeneous_degree().ok_or_else(|| anyhow!("the generator must be nonzero and homogeneous"))?;
    if let Some(dd) = src.d {
        if src.poly.is_some() && dd != d {
            bail!("--d {dd} disagrees with the degree {d} of the polynomial file");
        }
    }
    cfg.validate(f.nvars(), d)?;
    if let Value::Object(m) = &mut report.inputs {
        m.insert("poly".into(), poly_echo(&f));
    }
    Ok(f)
}

fn quotient<F: Field>(f: &Polynomial<F>, cap: Option<usize>) -> Result<QuotientAlgebra<F>> {
    let ideal = orbit_span(f)?;
    Ok(match cap {
        Some(c) => QuotientAlgebra::from_psi_with_cap(&ideal, c)?,
        None => QuotientAlgebra::from_psi(&ideal)?,
    })
}

fn params_json<F: Field>(t: &TParams<F>) -> Value {
    let f = &t.field;
    json!({
        "alpha": t.alpha.iter().map(|(l, v)| (l.to_string(), f.display(v))).collect::<BTreeMap<_, _>>(),
        "t": t.t.iter().map(|(l, v)| (l.to_string(), f.display(v))).collect::<BTreeMap<_, _>>(),
    })
}

fn sample<F: Field>(field: &F, cfg: &RunConfig, n: usize, d: usize, seed: u64, bound: u64, r: &mut Report) -> Result<()> {
    cfg.validate(n, d)?;
    let f = sample_general_f(field, n, d, seed, bound)?;
    r.section(Section::new("polynomial", Provenance::Oracle, poly_echo(&f), f.to_string()));
    let t = extract_params(&f)?;
    let text = t.t.iter().map(|(l, v)| format!("t{l} = {}", field.display(v))).collect::<Vec<_>>().join("\n");
    r.section(Section::new("type-sum parameters", Provenance::Oracle, params_json(&t), text));
    Ok(())
}

fn construct<F: Field>(field: &F, cfg: &RunConfig, d: usize, n: Option<usize>, r: &mut Report) -> Result<()> {
    let c = build_construction_f(field, d, n)?;
    cfg.validate(c.n, d)?;
    let ideal = orbit_span(&c.f)?;
    r.section(Section::new("polynomial", Provenance::Oracle, poly_echo(&c.f), c.f.to_string()));
    let summands: Vec<Value> =
        c.summands.iter().map(|s| json!({"lambda": s.lambda.to_string(), "gamma": s.gamma.to_string(), "binomial": s.binomial.to_string()})).collect();
    let text = c.summands.iter().map(|s| format!("b{}{} = {}", s.lambda, s.gamma, s.binomial)).collect::<Vec<_>>().join("\n");
    r.section(Section::new("binomial summands", Provenance::Oracle, summands, text));
    let hyp = json!({"n": c.n, "minimum_n": c.min_n, "n_at_least_minimum": c.n >= c.min_n, "n_greater_than_3d": c.n > 3 * d});
    r.section(Section::new("hypotheses", Provenance::Formula, &hyp, hyp.to_string()));
    r.check(Check::compare(
        "dim I_d = dim R_d − (P(d) − 1)",
        Claim::formula(count_monomials(c.n, d) - (partition_count(d) - 1)),
        Claim::oracle(ideal.dim()),
    ));
    let mut all_in = true;
    for s in &c.summands {
        all_in &= ideal.contains(&s.binomial)?;
    }
    r.check(Check::holds("every binomial summand lies in I", all_in, Provenance::PaperConstant));
    r.check(Check::holds("all type-sum parameters vanish", extract_params(&c.f)?.is_zero(), Provenance::PaperConstant));
    Ok(())
}

fn orbit_dim<F: Field>(field: &F, cfg: &RunConfig, src: &PolySource, r: &mut Report) -> Result<()> {
    let f = load_poly(field, cfg, src, r)?;
    let ideal = orbit_span(&f)?;
    let (n, d) = (ideal.n, ideal.d);
    let data = json!({"dim_I_d": ideal.dim(), "dim_R_d": count_monomials(n, d), "codimension": count_monomials(n, d) - ideal.dim()});
    r.section(Section::new("orbit span", Provenance::Oracle, &data, data.to_string()));
    r.check(Check::holds("span is stable under every adjacent transposition", ideal.is_stable(), Provenance::Oracle));
    Ok(())
}

fn inverse<F: Field>(field: &F, cfg: &RunConfig, src: &PolySource, degree: usize, cap: Option<usize>, r: &mut Report) -> Result<()> {
    let f = load_poly(field, cfg, src, r)?;
    let a = quotient(&f, cap)?;
    let comp = a.inverse_system_component(degree);
    let duals: Vec<String> = comp.duals().iter().map(|g| g.to_string()).collect();
    r.section(Section::new(
        format!("(I^⊥)_(-{degree}), dimension {}", comp.dim()),
        Provenance::Oracle,
        json!({"degree": -(degree as i64), "dim": comp.dim(), "basis": duals}),
        duals.join("\n"),
    ));
    r.check(Check::compare(
        format!("dim (I^⊥)_(-{degree}) = dim A_{degree}"),
        Claim::oracle(a.hf(degree)),
        Claim::oracle(comp.dim()),
    ));
    Ok(())
}

fn classify_cmd<F: Field>(field: &F, cfg: &RunConfig, src: &PolySource, cap: Option<usize>, r: &mut Report) -> Result<()> {
    let f = load_poly(field, cfg, src, r)?;
    let a = quotient(&f, cap)?;
    let c = classify(&a)?;
    let text = format!(
        "hilbert {:?}\nsocle {}\nt(I) = {}, s(A) = {}\nnarrow = {}\nextremely_narrow = {}\nwitness = {}\ncompressed = {}\npermissible_socle = {}\ngorenstein = {}",
        c.hilbert,
        c.socle_polynomial,
        c.t,
        c.s,
        c.narrow,
        c.extremely_narrow,
        c.witness.as_deref().unwrap_or("-"),
        c.compressed,
        c.permissible_socle,
        c.gorenstein
    );
    r.section(Section::new("classification", Provenance::Oracle, &c, text));
    let socle_total: usize = c.socle.iter().sum();
    r.check(Check::compare("Gorenstein exactly when the socle is one-dimensional", Claim::oracle(socle_total == 1), Claim::oracle(c.gorenstein)));
    Ok(())
}

fn betti<F: Field>(field: &F, cfg: &RunConfig, src: &PolySource, mode: BettiMode, r: &mut Report) -> Result<()> {
    let f = load_poly(field, cfg, src, r)?;
    let (n, d) = (f.nvars(), f.homogeneous_degree().expect("checked on load"));
    let oracle = if mode != BettiMode::Formula {
        let a = quotient(&f, None)?;
        let t = koszul_betti(&a.to_module(false)?)?;
        r.section(Section::new("betti table (Koszul homology)", Provenance::Oracle, t.to_json_entries(), t.to_string()));
        Some(t)
    } else {
        None
    };
    let formula = if mode != BettiMode::Oracle {
        let cf = closed_form_betti(n, d)?;
        match cf.table() {
            Ok(t) => {
                r.section(Section::new("betti table (closed form)", Provenance::Formula, t.to_json_entries(), t.to_string()));
                Some(t)
            }
            Err(e) => {
                r.section(Section::new("betti table (closed form)", Provenance::Formula, json!({"error": e.to_string(), "closed_form": cf}), e.to_string()));
                None
            }
        }
    } else {
        None
    };
    if mode == BettiMode::Both {
        match (&oracle, &formula) {
            (Some(o), Some(t)) => {
                let diff = o.diff(t);
                let mut c = Check::compare("Koszul homology equals the closed form", Claim::formula(t.to_json_entries()), Claim::oracle(o.to_json_entries()));
                if !diff.is_empty() {
                    c = c.with_note(format!("differing (i, j, oracle, formula): {diff:?}"));
                }
                r.check(c);
            }
            (Some(_), None) => r.check(Check::holds("closed form defined for these (n, d)", false, Provenance::Formula)),
            _ => {}
        }
    }
    Ok(())
}

fn golod_check<F: Field>(field: &F, cfg: &RunConfig, src: &PolySource, max_i: usize, max_entries: usize, r: &mut Report) -> Result<()> {
    let f = load_poly(field, cfg, src, r)?;
    let (n, d) = (f.nvars(), f.homogeneous_degree().expect("checked on load"));
    let a = quotient(&f, None)?;
    let res = resolve_k_over_a(&a, max_i, max_entries)?;
    if let Some(reason) = &res.stopped {
        r.status = Status::Partial(reason.clone());
    }
    r.section(Section::new("resolution of k over A", Provenance::Oracle, res.betti.to_json_entries(), res.betti.to_string()));
    let totals: Vec<i128> = res.totals().iter().map(|&b| b as i128).collect();
    let len = totals.len().saturating_sub(1);
    let a_totals = koszul_betti(&a.to_module(false)?)?.totals();
    let bound = golod_series(n, &a_totals, len);
    let printed = koszul_substituted_series(n, len);
    let series = json!({"betti_of_k": totals, "golod_bound": bound, "koszul_substituted": printed, "betti_of_A": a_totals});
    r.section(Section::new("Poincaré series coefficients", Provenance::Formula, &series, series.to_string()));
    let below = totals.iter().zip(&bound).all(|(x, y)| x <= y);
    r.check(Check::holds("coefficientwise below the Golod bound", below, Provenance::Formula));
    if d >= 3 {
        r.check(Check::compare("Golod: the bound is attained", Claim::formula(&bound), Claim::oracle(&totals)));
    } else {
        let koszul = series_quotient(&[1], &[1, -(n as i128), 1], len);
        r.check(Check::holds("Koszul: the resolution is linear", res.is_linear(), Provenance::PaperConstant));
        r.check(Check::compare("Poincaré series 1/(1 − nt + t²)", Claim::formula(&koszul), Claim::oracle(&totals)));
    }
    Ok(())
}

fn parse_t_map<F: Field>(field: &F, d: usize, text: &str) -> Result<TParams<F>> {
    let raw: BTreeMap<String, Value> = serde_json::from_str(text).context("--t expects a JSON object")?;
    let mut values = BTreeMap::new();
    for (k, v) in raw {
        let l: Partition = k.parse()?;
        let s = match v {
            Value::String(s) => s,
            Value::Number(x) => x.to_string(),
            other => bail!("t value for {k} must be a number or string, got {other}"),
        };
        values.insert(l, field.from_rational(&parse_rational(&s)?)?);
    }
    Ok(TParams::from_t(field, d, values)?)
}

fn linrel<F: Field>(field: &F, n: usize, d: usize, t: Option<&str>, t_zero: bool, t_seed: Option<u64>, r: &mut Report) -> Result<()> {
    FieldChoice::validate(&field_choice(field), n, d)?;
    let params = match (t, t_zero, t_seed) {
        (Some(text), _, _) => parse_t_map(field, d, text)?,
        (None, _, Some(s)) => TParams::random(field, d, s, 1, 1000),
        (None, true, None) | (None, false, None) => TParams::zero(field, d),
    };
    r.section(Section::new("parameters", Provenance::Oracle, params_json(&params), params_json(&params).to_string()));
    let sym = build_symmetric_matrix(n, d)?;
    r.section(Section::new("symmetric system A (rows q ⊢ d−1, columns λ ⊢ d, λ ≠ (d))", Provenance::Formula, sym.render(), sym.render()));
    let full = build_full_system(&params, n)?;
    let kernel: Vec<Vec<String>> = full.kernel().iter().map(|v| v.iter().map(|x| field.display(x)).collect()).collect();
    let cols: Vec<String> = full.cols.iter().map(|(i, l)| format!("x{}·{l}", i + 1)).collect();
    r.section(Section::new(
        "kernel of the full system",
        Provenance::Oracle,
        json!({"rank": full.rank(), "columns": cols, "kernel": kernel}),
        format!("rank {} of {} columns\nkernel basis: {:?}", full.rank(), cols.len(), kernel),
    ));
    let rep = relation_report(&params, n)?;
    r.check(Check::compare("dim L = P(d) − P(d−1) − 1 (inverse systems)", Claim::formula(rep.expected_dim), Claim::oracle(rep.oracle_dim)));
    r.check(Check::compare("full system solution dimension", Claim::formula(rep.expected_dim), Claim::oracle(rep.full_solution_dim)));
    r.check(Check::holds("full system and inverse-system relations agree", rep.spaces_agree, Provenance::Oracle));
    r.check(Check::holds("relations are component-symmetric", rep.component_symmetric, Provenance::PaperConstant));
    if n >= d {
        let an = analyze_aprime(&params, n)?;
        r.section(Section::new("A′ analysis", Provenance::Oracle, &an, serde_json::to_string_pretty(&an)?));
        r.check(Check::compare("det A′ at t = 0", Claim::formula(an.predicted_det_at_zero.to_string()), Claim::oracle(&an.det_at_zero)));
        r.check(Check::holds("det A′ is affine in t", an.det_affine_in_t, Provenance::PaperConstant));
    }
    Ok(())
}

fn field_choice<F: Field>(field: &F) -> FieldChoice {
    match field.characteristic() {
        0 => FieldChoice::Rational,
        p => FieldChoice::Prime(p),
    }
}

fn decomposition_json(dec: &SpechtDecomposition) -> Value {
    json!(dec.multiplicities.iter().map(|(l, m)| (l.parts().to_vec(), *m)).collect::<Vec<_>>())
}

fn equivariant<F: Field>(field: &F, cfg: &RunConfig, src: &PolySource, i: Option<usize>, j: Option<i32>, r: &mut Report) -> Result<()> {
    let f = load_poly(field, cfg, src, r)?;
    let (n, d) = (f.nvars(), f.homogeneous_degree().expect("checked on load"));
    let a = quotient(&f, None)?;
    let module = a.to_module(true)?;
    let betti = koszul_betti(&module)?;
    let tors = match equivariant_tors(&module) {
        Ok(t) => t,
        Err(CoreError::NotACharacter(msg)) => {
            r.check(Check::holds("characters have nonnegative integer multiplicities", false, Provenance::Oracle).with_note(msg));
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    r.check(Check::holds("characters have nonnegative integer multiplicities", true, Provenance::Oracle));
    let dims_ok = betti.entries().all(|(bi, bj, b)| tors.get(&(bi, bj)).map_or(false, |t| t.1.dimension() == b as u128));
    r.check(Check::holds("weighted dimensions match the betti table", dims_ok, Provenance::Oracle));
    let predicted = if n >= 2 && d >= 2 { predicted_equivariant_tors(n, d, TorReading::ExactSequence).ok() } else { None };
    let mut rows = Vec::new();
    let mut text = String::new();
    for ((ti, tj), (_, dec)) in &tors {
        if i.map_or(false, |x| x != *ti) || j.map_or(false, |x| x != *tj) {
            continue;
        }
        rows.push(json!({"i": ti, "j": tj, "specht": decomposition_json(dec)}));
        text.push_str(&format!("Tor_{ti}(A,k)_{tj} = {dec}\n"));
        if let Some(p) = predicted.as_ref().and_then(|ps| ps.iter().find(|p| p.i == *ti && p.j == *tj)) {
            r.check(Check::compare(
                format!("({ti}, {tj}) against the prediction for a general generator"),
                Claim::formula(psilab_core::equivariant::format_signed(&p.multiplicities)),
                Claim::oracle(psilab_core::equivariant::format_signed(&dec.signed())),
            ));
        }
    }
    if rows.is_empty() {
        text.push_str("0\n");
    }
    r.section(Section::new("Specht decomposition", Provenance::Oracle, rows, text));
    Ok(())
}

fn restrict(schur: &str, n: usize, r: &mut Report) -> Result<()> {
    let lambda: Partition = schur.parse()?;
    if let Value::Object(m) = &mut r.inputs {
        m.insert("schur".into(), json!(lambda.to_string()));
    }
    let table = CharacterTable::new(n);
    let dec = restriction_decomposition(&lambda, n, &table)?;
    r.section(Section::new(format!("restriction of S_{lambda} to S_{n}"), Provenance::Oracle, decomposition_json(&dec), dec.to_string()));
    let degree = schur_character(&lambda, n).degree();
    r.check(Check::compare(
        "dimension of the decomposition equals dim S_λ(k^n)",
        Claim::oracle(degree.to_string()),
        Claim::oracle(dec.dimension().to_string()),
    ));
    Ok(())
}

fn verify_paper(suite: &str, r: &mut Report) -> Result<()> {
    if let Value::Object(m) = &mut r.inputs {
        m.insert("suite".into(), json!(suite));
    }
    for k in verify::suite_criteria(suite)? {
        let sub = verify::criterion(k)?;
        let verdict = if sub.all_pass() { "PASS" } else { "FAIL" };
        r.section(Section::new(
            format!("criterion {k}: {} — {verdict} ({} ms)", verify::criterion_title(k), sub.elapsed_ms),
            Provenance::Oracle,
            json!({"criterion": k, "inputs": sub.inputs, "elapsed_ms": sub.elapsed_ms, "sections": sub.sections}),
            sub.sections.iter().map(|s| format!("{}:\n{}", s.title, s.text)).collect::<Vec<_>>().join("\n"),
        ));
        if let Status::Partial(reason) = &sub.status {
            r.status = Status::Partial(format!("criterion {k}: {reason}"));
        }
        for mut c in sub.checks {
            c.name = format!("[{k}] {}", c.name);
            r.check(c);
        }
    }
    Ok(())
}
