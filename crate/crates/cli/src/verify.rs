//! The verification harness: ten numbered criteria, each producing a report
//! whose checks compare computed values with closed forms or published constants.
//!
//! Seeds and case lists are pinned in `fixtures/seeds.json`. A check whose
//! expected value is a published statement known to be misprinted carries a
//! `known_defect` annotation; its verdict is still the computed one.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::json;

use psilab_core::equivariant::{
    equivariant_duality_check, equivariant_tors, format_signed, hook, nu_of_n, predicted_equivariant_tors, quadratic_display,
    restriction_decomposition, specht_decompose, tensor_rule_holds, tor_character, CharacterTable, NonPartitionRule, TorReading,
};
use psilab_core::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use psilab_core::homology::{
    boij_duality_check, closed_form_betti, golod_series, koszul_betti, koszul_substituted_series, resolve_k_over_a, BettiTable,
};
use psilab_core::inverse::{hilbert_and_socle, QuotientAlgebra};
use psilab_core::linalg::RowSpace;
use psilab_core::linrel::{analyze_aprime, predicted_aprime_det_at_zero, relation_report};
use psilab_core::monomial::count_monomials;
use psilab_core::partitions::{enumerate_partitions, monomial_symmetric, partition_count, Partition};
use psilab_core::psi::{build_construction_f, orbit_span, sample_general_f, TParams};
use psilab_core::Polynomial;

use crate::report::{Check, Claim, Provenance, Report, Section, Status};

/// Seeds and case lists used by the harness.
#[derive(Clone, Debug, Deserialize)]
pub struct Fixtures {
    pub cubic_rational_seed: u64,
    pub formula_cases: Vec<(usize, usize)>,
    pub formula_seeds: Vec<u64>,
    pub fewvar_seeds: Vec<u64>,
    pub hilbert_cases: Vec<(usize, usize)>,
    pub hilbert_seed: u64,
    pub linrel_t_seeds: Vec<u64>,
    pub duality_cases: Vec<(usize, usize)>,
    pub duality_seed: u64,
    pub golod_seed: u64,
    pub equivariant_seed: u64,
    pub tensor_seed: u64,
    pub coefficient_bound: u64,
}

pub const SEEDS_JSON: &str = include_str!("../fixtures/seeds.json");
pub const LIANA: &str = include_str!("../fixtures/liana.txt");
pub const CUBIC_N5: &str = include_str!("../fixtures/cubic_n5.txt");

pub fn fixtures() -> Fixtures {
    serde_json::from_str(SEEDS_JSON).expect("committed fixture parses")
}

/// Suite names accepted by `verify-paper --suite`, with their criterion numbers.
pub const SUITES: [(&str, u32); 10] = [
    ("cubic-n5", 1),
    ("formula", 2),
    ("fewvar", 3),
    ("hilbert-socle", 4),
    ("inverse-systems", 5),
    ("linrel", 6),
    ("duality", 7),
    ("golod", 8),
    ("equivariant", 9),
    ("restriction", 10),
];

/// Criterion numbers selected by a suite name (`all` selects every criterion).
pub fn suite_criteria(name: &str) -> Result<Vec<u32>> {
    if name == "all" {
        return Ok(SUITES.iter().map(|s| s.1).collect());
    }
    SUITES
        .iter()
        .find(|s| s.0 == name)
        .map(|s| vec![s.1])
        .ok_or_else(|| anyhow!("unknown suite {name:?}; expected one of all, {}", SUITES.map(|s| s.0).join(", ")))
}

/// Runs one numbered criterion.
pub fn criterion(k: u32) -> Result<Report> {
    let fx = fixtures();
    let start = Instant::now();
    let mut report = match k {
        1 => golden_cubic(&fx)?,
        2 => formula_vs_oracle(&fx)?,
        3 => few_variables(&fx)?,
        4 => hilbert_socle(&fx)?,
        5 => inverse_systems()?,
        6 => linear_relations(&fx)?,
        7 => duality(&fx)?,
        8 => golod(&fx)?,
        9 => equivariant(&fx)?,
        10 => restriction(&fx)?,
        _ => bail!("criteria are numbered 1 to 10"),
    };
    report.set_elapsed(start.elapsed());
    Ok(report)
}

/// Title of each criterion, for summaries.
pub fn criterion_title(k: u32) -> &'static str {
    match k {
        1 => "golden cubic betti table (n = 5)",
        2 => "closed-form betti table equals Koszul homology",
        3 => "cubic betti tables for n = 1..4",
        4 => "Hilbert function and socle of general samples",
        5 => "inverse systems and the explicit construction",
        6 => "linear relations of the inverse-system generators",
        7 => "betti duality between A and its inverse system",
        8 => "Poincaré series of the residue field",
        9 => "equivariant Tor decompositions",
        10 => "restriction coefficients and the tensor rule",
        _ => "unknown",
    }
}

fn prime() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).expect("default modulus is prime")
}

fn quotient<F: Field>(f: &Polynomial<F>) -> Result<QuotientAlgebra<F>> {
    Ok(QuotientAlgebra::from_psi(&orbit_span(f)?)?)
}

fn general<F: Field>(field: &F, n: usize, d: usize, seed: u64, bound: u64) -> Result<(Polynomial<F>, QuotientAlgebra<F>)> {
    let f = sample_general_f(field, n, d, seed, bound)?;
    let a = quotient(&f)?;
    Ok((f, a))
}

fn table_json(t: &BettiTable) -> serde_json::Value {
    serde_json::to_value(t.to_json_entries()).expect("betti entries serialize")
}

fn within(name: &str, elapsed: Duration, limit: Duration) -> Check {
    Check::holds(name, elapsed < limit, Provenance::PaperConstant)
        .with_note(format!("{:.2} s (limit {} s)", elapsed.as_secs_f64(), limit.as_secs()))
}

fn golden_cubic(fx: &Fixtures) -> Result<Report> {
    let mut r = Report::new("verify-paper cubic-n5", json!({"criterion": 1, "poly": CUBIC_N5.trim(), "field": "q"}));
    let golden = BettiTable::from_entries([(0, 0, 1), (1, 3, 33), (2, 4, 95), (3, 5, 106), (4, 6, 50), (5, 7, 5), (5, 8, 2)]);
    let start = Instant::now();
    let f = Polynomial::parse(Rationals, CUBIC_N5, Some(5))?;
    let a = quotient(&f)?;
    let table = koszul_betti(&a.to_module(false)?)?;
    let elapsed = start.elapsed();
    r.section(Section::new("betti table of the explicit cubic", Provenance::Oracle, table_json(&table), table.to_string()));
    r.check(Check::compare("explicit cubic table", Claim::paper(table_json(&golden)), Claim::oracle(table_json(&table))));
    r.check(within("explicit cubic runtime", elapsed, Duration::from_secs(60)));
    let formula = closed_form_betti(5, 3)?.table()?;
    r.check(Check::compare("closed form at n = 5, d = 3", Claim::paper(table_json(&golden)), Claim::formula(table_json(&formula))));
    let (_, g) = general(&Rationals, 5, 3, fx.cubic_rational_seed, fx.coefficient_bound)?;
    let general_table = koszul_betti(&g.to_module(false)?)?;
    r.check(
        Check::compare("general cubic table", Claim::paper(table_json(&golden)), Claim::oracle(table_json(&general_table)))
            .with_note(format!("seed {}", fx.cubic_rational_seed)),
    );
    Ok(r)
}

fn formula_vs_oracle(fx: &Fixtures) -> Result<Report> {
    let mut r = Report::new(
        "verify-paper formula",
        json!({"criterion": 2, "cases": fx.formula_cases, "seeds": fx.formula_seeds, "field": "q"}),
    );
    for &(d, n) in &fx.formula_cases {
        let formula = closed_form_betti(n, d)?.table()?;
        for &seed in &fx.formula_seeds {
            let (f, a) = general(&Rationals, n, d, seed, fx.coefficient_bound)?;
            let oracle = koszul_betti(&a.to_module(false)?)?;
            let mut c = Check::compare(
                format!("d = {d}, n = {n}, seed {seed}"),
                Claim::formula(table_json(&formula)),
                Claim::oracle(table_json(&oracle)),
            );
            if !c.passed() {
                let coeffs: Vec<String> = f.terms().map(|(_, v)| Rationals.display(v)).collect();
                c = c.with_note(format!("coefficient vector [{}]", coeffs.join(", ")));
            }
            r.check(c);
        }
    }
    // Stretch case d = 4, n = 8 in the prime field.
    let formula = closed_form_betti(8, 4)?.table()?;
    for &seed in &fx.formula_seeds {
        let (_, a) = general(&prime(), 8, 4, seed, fx.coefficient_bound)?;
        let oracle = koszul_betti(&a.to_module(false)?)?;
        r.check(Check::compare(
            format!("stretch d = 4, n = 8 (fp:{DEFAULT_PRIME}), seed {seed}"),
            Claim::formula(table_json(&formula)),
            Claim::oracle(table_json(&oracle)),
        ));
    }
    Ok(r)
}

fn few_variables(fx: &Fixtures) -> Result<Report> {
    let expected = [
        vec![(0, 0, 1), (1, 3, 1)],
        vec![(0, 0, 1), (1, 3, 2), (2, 6, 1)],
        vec![(0, 0, 1), (1, 3, 6), (2, 4, 4), (2, 5, 3), (3, 6, 1), (3, 7, 1)],
        vec![(0, 0, 1), (1, 3, 15), (2, 4, 26), (3, 5, 10), (3, 6, 4), (4, 7, 1), (4, 8, 1)],
    ];
    let mut r = Report::new("verify-paper fewvar", json!({"criterion": 3, "seeds": fx.fewvar_seeds, "field": "q"}));
    for (k, entries) in expected.iter().enumerate() {
        let n = k + 1;
        let golden = BettiTable::from_entries(entries.iter().copied());
        let mut hits = 0;
        let mut misses = Vec::new();
        for &seed in &fx.fewvar_seeds {
            let (_, a) = general(&Rationals, n, 3, seed, fx.coefficient_bound)?;
            let t = koszul_betti(&a.to_module(false)?)?;
            if t == golden {
                hits += 1;
            } else {
                misses.push(seed);
            }
        }
        let needed = fx.fewvar_seeds.len().saturating_sub(1);
        let c = Check::holds(format!("n = {n}: at least {needed} of {} seeds reproduce the table", fx.fewvar_seeds.len()), hits >= needed, Provenance::PaperConstant)
            .with_note(format!("{hits} matched; mismatching seeds {misses:?}"));
        r.section(Section::new(format!("n = {n}"), Provenance::PaperConstant, table_json(&golden), golden.to_string()));
        r.check(c);
    }
    Ok(r)
}

fn hilbert_socle(fx: &Fixtures) -> Result<Report> {
    let mut r = Report::new("verify-paper hilbert-socle", json!({"criterion": 4, "cases": fx.hilbert_cases, "seed": fx.hilbert_seed, "field": "q"}));
    for &(d, n) in &fx.hilbert_cases {
        let (_, a) = general(&Rationals, n, d, fx.hilbert_seed, fx.coefficient_bound)?;
        let hs = hilbert_and_socle(&a)?;
        let cf = closed_form_betti(n, d)?;
        let mut hf: Vec<usize> = (0..d).map(|j| count_monomials(n, j)).collect();
        hf.push(partition_count(d) - 1);
        let mut socle = vec![0usize; d + 1];
        socle[d - 1] = cf.b as usize;
        socle[d] = cf.a as usize;
        r.check(Check::compare(format!("d = {d}, n = {n}: Hilbert function"), Claim::formula(&hf), Claim::oracle(&hs.hilbert)));
        r.check(Check::compare(format!("d = {d}, n = {n}: socle degrees"), Claim::formula(&socle), Claim::oracle(&hs.socle)));
        if d == 3 {
            r.check(Check::compare(
                format!("n = {n}: cubic socle coefficients"),
                Claim::paper(json!([n * (n - 3) / 2, 2])),
                Claim::formula(json!([cf.b, cf.a])),
            ));
        }
    }
    Ok(r)
}

/// `(I^⊥)_{−d}` of a degree-`d` orbit span is the annihilator of `I_d` under
/// the perfect pairing between `R_d` and the divided powers of degree `d`.
fn degree_d_annihilator<F: Field>(f: &Polynomial<F>) -> Result<(usize, RowSpace<F>, RowSpace<F>)> {
    let ideal = orbit_span(f)?;
    let (n, d) = (ideal.n, ideal.d);
    let field = ideal.field().clone();
    let perp = RowSpace::from_rows(&field, ideal.basis.len(), ideal.span.annihilator());
    let mut rows = Vec::new();
    for l in enumerate_partitions(d) {
        if l != Partition::row(d) && l.len() <= n {
            rows.push(monomial_symmetric(&field, &l, n)?.coords(&ideal.basis)?);
        }
    }
    let m = RowSpace::from_rows(&field, ideal.basis.len(), rows);
    Ok((ideal.dim(), perp, m))
}

fn inverse_systems() -> Result<Report> {
    let mut r = Report::new("verify-paper inverse-systems", json!({"criterion": 5, "poly": LIANA.trim()}));
    for n in 2..=8 {
        let f = Polynomial::parse(Rationals, LIANA, Some(n))?;
        let a = quotient(&f)?;
        let comp = a.inverse_system_component(2);
        let sum = monomial_symmetric(&Rationals, &Partition::row(2), n)?;
        let ok = comp.dim() == 1 && comp.contains_dual(&sum)?;
        r.check(Check::holds(format!("n = {n}: (I^⊥)_(-2) = span of the sum of y_i^(2)"), ok, Provenance::PaperConstant));
    }
    let cases: [(usize, Option<usize>, bool); 2] = [(2, Some(8), false), (3, None, true)];
    for (d, n, use_prime) in cases {
        let start = Instant::now();
        let (nn, dim, perp_ok, summands_ok) = if use_prime {
            let c = build_construction_f(&prime(), d, n)?;
            let ideal = orbit_span(&c.f)?;
            let summands_ok = c.summands.iter().map(|s| ideal.contains(&s.binomial)).collect::<psilab_core::Result<Vec<_>>>()?.into_iter().all(|b| b);
            let (dim, perp, m) = degree_d_annihilator(&c.f)?;
            (c.n, dim, perp.same_space(&m), summands_ok)
        } else {
            let c = build_construction_f(&Rationals, d, n)?;
            let ideal = orbit_span(&c.f)?;
            let summands_ok = c.summands.iter().map(|s| ideal.contains(&s.binomial)).collect::<psilab_core::Result<Vec<_>>>()?.into_iter().all(|b| b);
            let (dim, perp, m) = degree_d_annihilator(&c.f)?;
            (c.n, dim, perp.same_space(&m), summands_ok)
        };
        let field = if use_prime { format!("fp:{DEFAULT_PRIME}") } else { "q".into() };
        let tag = format!("d = {d}, n = {nn} ({field})");
        r.check(Check::holds(format!("{tag}: every summand lies in I"), summands_ok, Provenance::PaperConstant));
        r.check(Check::compare(
            format!("{tag}: dim I_d"),
            Claim::formula(count_monomials(nn, d) - (partition_count(d) - 1)),
            Claim::oracle(dim),
        ));
        r.check(Check::holds(format!("{tag}: (I^⊥)_(-d) spanned by m_λ, λ ≠ (d)"), perp_ok, Provenance::PaperConstant));
        if use_prime {
            r.check(within(&format!("{tag}: runtime"), start.elapsed(), Duration::from_secs(600)));
        }
    }
    Ok(r)
}

fn linear_relations(fx: &Fixtures) -> Result<Report> {
    let mut r = Report::new("verify-paper linrel", json!({"criterion": 6, "t_seeds": fx.linrel_t_seeds, "field": "q", "t_range": [1, 1000]}));
    for d in 3..=5usize {
        for n in [d, d + 2, 10] {
            let expected = partition_count(d) - partition_count(d - 1) - 1;
            let mut points = vec![("t = 0".to_string(), TParams::zero(&Rationals, d))];
            // Draw parameter points until enough pass the genericity certificate
            // (full rank of the symmetric system).
            let mut accepted = 0;
            let mut rejected = Vec::new();
            let mut seed = fx.linrel_t_seeds.first().copied().unwrap_or(0);
            let mut pool = fx.linrel_t_seeds.clone();
            while accepted < fx.linrel_t_seeds.len() && rejected.len() < 20 {
                let s = if pool.is_empty() {
                    seed += 1000;
                    seed
                } else {
                    pool.remove(0)
                };
                let t = TParams::random(&Rationals, d, s, 1, 1000);
                if analyze_aprime(&t, n)?.full_rank {
                    points.push((format!("t-seed {s}"), t));
                    accepted += 1;
                } else {
                    rejected.push(s);
                }
            }
            r.check(
                Check::compare(
                    format!("d = {d}, n = {n}: generic parameter points"),
                    Claim::paper(fx.linrel_t_seeds.len()),
                    Claim::oracle(accepted),
                )
                .with_note(format!("non-generic seeds {rejected:?}")),
            );
            for (label, t) in &points {
                let rep = relation_report(t, n)?;
                let ok_dims = rep.oracle_dim == expected && rep.full_solution_dim == expected && rep.symmetric_solution_dim == expected;
                r.check(
                    Check::compare(format!("d = {d}, n = {n}, {label}: dim L"), Claim::formula(expected), Claim::oracle(rep.oracle_dim))
                        .with_note(format!(
                            "full system {}, symmetric system {}, spaces agree {}",
                            rep.full_solution_dim, rep.symmetric_solution_dim, rep.spaces_agree
                        ))
                        .require(ok_dims && rep.spaces_agree),
                );
                r.check(Check::holds(
                    format!("d = {d}, n = {n}, {label}: relations are component-symmetric"),
                    rep.component_symmetric,
                    Provenance::PaperConstant,
                ));
            }
            let an = analyze_aprime(&TParams::zero(&Rationals, d), n)?;
            r.check(Check::compare(
                format!("d = {d}, n = {n}: det A′ at t = 0"),
                Claim::formula(an.predicted_det_at_zero.to_string()),
                Claim::oracle(&an.det_at_zero),
            ));
        }
    }
    for n in [5i128, 6, 7, 10] {
        let printed = (n - 4) * (n - 3) * (n - 2) * (n - 2) * (n - 1);
        let an = analyze_aprime(&TParams::zero(&Rationals, 5), n as usize)?;
        r.check(Check::compare(
            format!("d = 5, n = {n}: det A′ at t = 0 against (n−4)(n−3)(n−2)²(n−1)"),
            Claim::paper(printed.to_string()),
            Claim::oracle(&an.det_at_zero),
        ));
        r.check(Check::compare(
            format!("d = 5, n = {n}: product formula"),
            Claim::paper(printed.to_string()),
            Claim::formula(predicted_aprime_det_at_zero(n as usize, 5).to_string()),
        ));
    }
    Ok(r)
}

fn duality(fx: &Fixtures) -> Result<Report> {
    let mut r = Report::new("verify-paper duality", json!({"criterion": 7, "cases": fx.duality_cases, "seed": fx.duality_seed, "field": "q"}));
    for &(d, n) in &fx.duality_cases {
        let (_, a) = general(&Rationals, n, d, fx.duality_seed, fx.coefficient_bound)?;
        let ok = boij_duality_check(&a.to_module(false)?, &a.inverse_system_module(false)?)?;
        r.check(Check::holds(format!("general sample d = {d}, n = {n}"), ok, Provenance::PaperConstant));
    }
    for n in 2..=5 {
        let a = quotient(&Polynomial::parse(Rationals, LIANA, Some(n))?)?;
        let ok = boij_duality_check(&a.to_module(false)?, &a.inverse_system_module(false)?)?;
        r.check(Check::holds(format!("quadric example, n = {n}"), ok, Provenance::PaperConstant));
    }
    Ok(r)
}

const GOLOD_DEFECT: &str = "the printed series substitutes the Koszul Betti numbers of k for those of A; \
     it already predicts β_2 = 15 where the residue-field resolution has 43";

fn golod(fx: &Fixtures) -> Result<Report> {
    let fp = prime();
    let mut r = Report::new(
        "verify-paper golod",
        json!({"criterion": 8, "seed": fx.golod_seed, "field": format!("fp:{DEFAULT_PRIME}"), "max_i": [4, 5]}),
    );
    let start = Instant::now();
    let (_, a) = general(&fp, 5, 3, fx.golod_seed, fx.coefficient_bound)?;
    let res = resolve_k_over_a(&a, 4, 400_000_000)?;
    if let Some(reason) = &res.stopped {
        r.status = Status::Partial(reason.clone());
    }
    let totals = res.totals();
    r.section(Section::new("residue-field resolution, d = 3, n = 5", Provenance::Oracle, table_json(&res.betti), res.betti.to_string()));
    let totals_i: Vec<i128> = totals.iter().map(|&b| b as i128).collect();
    let literal = koszul_substituted_series(5, 4);
    r.check(
        Check::compare("d = 3, n = 5: (1+t)^5 / (1 − t((1+t)^5 − 1))", Claim::paper(&literal), Claim::oracle(&totals_i))
            .with_known_defect(GOLOD_DEFECT),
    );
    let a_totals = koszul_betti(&a.to_module(false)?)?.totals();
    let bound = golod_series(5, &a_totals, 4);
    r.check(
        Check::compare("d = 3, n = 5: Golod bound (1+t)^5 / (1 − Σ β_i(A) t^(i+1))", Claim::formula(&bound), Claim::oracle(&totals_i))
            .with_note(format!("β(A) totals {a_totals:?}")),
    );

    let (_, q) = general(&fp, 3, 2, fx.golod_seed, fx.coefficient_bound)?;
    let res2 = resolve_k_over_a(&q, 5, 400_000_000)?;
    if let Some(reason) = &res2.stopped {
        r.status = Status::Partial(reason.clone());
    }
    r.section(Section::new("residue-field resolution, d = 2, n = 3", Provenance::Oracle, table_json(&res2.betti), res2.betti.to_string()));
    r.check(Check::holds("d = 2, n = 3: linear through i = 5", res2.is_linear() && res2.computed_through >= 5, Provenance::PaperConstant));
    let first: Vec<usize> = res2.totals().into_iter().take(5).collect();
    r.check(Check::compare("d = 2, n = 3: β_i(k), i ≤ 4", Claim::paper([1, 3, 8, 21, 55]), Claim::oracle(&first)));
    r.check(within("resolution runtime", start.elapsed(), Duration::from_secs(300)));
    Ok(r)
}

fn signed_json(m: &BTreeMap<Partition, i64>) -> serde_json::Value {
    json!(format_signed(m))
}

const INTERIOR_DEFECT: &str = "with the convention Sp_α = 0 for non-partitions α, line n−2 carries one extra \
     Sp_(1^n); straightening Sp_(1,2,1^(n−3)) = −Sp_(1^n) removes it";
const THIRD_DISPLAY_DEFECT: &str = "the printed display adds P(d−1)+1 sign copies and omits the −a hook \
     correction; its dimension disagrees with β_(n,n−1+d)";

fn equivariant(fx: &Fixtures) -> Result<Report> {
    let fp = prime();
    let mut r = Report::new("verify-paper equivariant", json!({"criterion": 9, "seed": fx.equivariant_seed, "field": format!("fp:{DEFAULT_PRIME}")}));

    // (a) Tor(k, k).
    for n in 1..=6 {
        let table = CharacterTable::new(n);
        let k = psilab_core::GradedModule::residue_field(&Rationals, n);
        let mut ok = true;
        for i in 0..=n {
            let dec = specht_decompose(&tor_character(&k, i, i as i32)?, &table)?;
            let mut expected = BTreeMap::new();
            for h in [hook(n, i as i64), hook(n, i as i64 - 1)].into_iter().flatten() {
                *expected.entry(h).or_insert(0) += 1;
            }
            ok &= dec.signed() == expected;
        }
        r.check(Check::holds(format!("(a) Tor_i(k,k), n = {n}, all i"), ok, Provenance::PaperConstant));
    }

    // (b) General quadrics.
    for n in 3..=5 {
        let (_, a) = general(&fp, n, 2, fx.equivariant_seed, fx.coefficient_bound)?;
        let module = a.to_module(true)?;
        let betti = koszul_betti(&module)?;
        let tors = equivariant_tors(&module)?;
        let dims_ok = betti.entries().all(|(i, j, b)| tors.get(&(i, j)).map_or(false, |t| t.1.dimension() == b as u128));
        r.check(Check::holds(format!("(b) n = {n}: integral characters with betti dimensions"), dims_ok, Provenance::Oracle));
        let mut text = String::new();
        for ((i, j), (_, dec)) in &tors {
            text.push_str(&format!("Tor_{i}(A)_{j} = {dec}\n"));
        }
        r.section(Section::new(
            format!("Tor of a general quadric, n = {n}"),
            Provenance::Oracle,
            tors.iter().map(|((i, j), (_, dec))| json!({"i": i, "j": j, "specht": dec.to_string()})).collect::<Vec<_>>(),
            text,
        ));
        let actual_line = |i: usize| tors.get(&(i + 1, i as i32 + 2)).map(|t| t.1.signed()).unwrap_or_default();
        for i in 1..=n - 2 {
            let mut c = Check::compare(
                format!("(b) n = {n}: interior line i = {i}, Sp_α = 0 convention"),
                Claim::paper(signed_json(&quadratic_display(n, i, NonPartitionRule::Zero))),
                Claim::oracle(signed_json(&actual_line(i))),
            );
            if i == n - 2 {
                c = c.with_known_defect(INTERIOR_DEFECT);
            }
            r.check(c);
            r.check(Check::compare(
                format!("(b) n = {n}: interior line i = {i}, straightened"),
                Claim::formula(signed_json(&quadratic_display(n, i, NonPartitionRule::Straighten))),
                Claim::oracle(signed_json(&actual_line(i))),
            ));
        }
        for i in [0, n - 1] {
            let shown = quadratic_display(n, i, NonPartitionRule::Zero);
            let actual = actual_line(i);
            let note = format!("boundary line i = {i}: display {} vs computed {}", format_signed(&shown), format_signed(&actual));
            r.section(Section::new(format!("(b) n = {n}: boundary line {i} (reported only)"), Provenance::PaperConstant, &note, note.clone()));
        }
        let predicted = predicted_equivariant_tors(n, 2, TorReading::ExactSequence)?;
        let all = predicted.iter().all(|p| tors.get(&(p.i, p.j)).map(|t| p.matches(&t.1)).unwrap_or(p.multiplicities.is_empty()))
            && tors.keys().all(|key| predicted.iter().any(|p| (p.i, p.j) == *key));
        r.check(Check::holds(format!("(b) n = {n}: exact-sequence prediction in every bidegree"), all, Provenance::Formula));
    }

    // (c) General cubic in five variables.
    let (n, d) = (5usize, 3usize);
    let (_, a) = general(&fp, n, d, fx.equivariant_seed, fx.coefficient_bound)?;
    let module = a.to_module(true)?;
    let tors = equivariant_tors(&module)?;
    let get = |i: usize, j: usize| tors.get(&(i, j as i32)).map(|t| t.1.signed()).unwrap_or_default();
    r.check(Check::compare(
        "(c) Tor_4(A)_7 = 0",
        Claim::paper(signed_json(&BTreeMap::new())),
        Claim::oracle(signed_json(&get(n - 1, n - 1 + d))),
    ));
    r.check(Check::compare(
        "(c) Tor_5(A)_8 = Sp_(1^5)^2",
        Claim::paper(signed_json(&BTreeMap::from([(Partition::column(n), 2)]))),
        Claim::oracle(signed_json(&get(n, n + d))),
    ));
    let third = |reading| -> Result<BTreeMap<Partition, i64>> {
        Ok(predicted_equivariant_tors(n, d, reading)?
            .into_iter()
            .find(|p| p.i == n && p.j == (n - 1 + d) as i32)
            .map(|p| p.multiplicities)
            .unwrap_or_default())
    };
    r.check(
        Check::compare(
            "(c) Tor_5(A)_7 as printed",
            Claim::paper(signed_json(&third(TorReading::Literal)?)),
            Claim::oracle(signed_json(&get(n, n - 1 + d))),
        )
        .with_known_defect(THIRD_DISPLAY_DEFECT),
    );
    r.check(Check::compare(
        "(c) Tor_5(A)_7 from the exact sequences",
        Claim::formula(signed_json(&third(TorReading::ExactSequence)?)),
        Claim::oracle(signed_json(&get(n, n - 1 + d))),
    ));

    // (d) Equivariant duality.
    for (d, n) in [(2usize, 3usize), (3, 5)] {
        let (_, a) = general(&fp, n, d, fx.equivariant_seed, fx.coefficient_bound)?;
        let ok = equivariant_duality_check(&a.to_module(true)?, &a.inverse_system_module(true)?)?;
        r.check(Check::holds(format!("(d) equivariant duality, d = {d}, n = {n}"), ok, Provenance::PaperConstant));
    }
    Ok(r)
}

fn restriction(fx: &Fixtures) -> Result<Report> {
    let mut r = Report::new("verify-paper restriction", json!({"criterion": 10, "tensor_seed": fx.tensor_seed}));
    for n in [8usize, 10] {
        let table = CharacterTable::new(n);
        let mut ok = true;
        let mut bad = Vec::new();
        for size in 1..=3 {
            let parts = enumerate_partitions(size);
            for l in &parts {
                let dec = restriction_decomposition(l, n, &table)?;
                for nu in &parts {
                    let nu_n = nu_of_n(nu, n).ok_or_else(|| anyhow!("ν[n] undefined"))?;
                    if dec.get(&nu_n) != u64::from(l == nu) {
                        ok = false;
                        bad.push(format!("λ = {l}, ν = {nu}"));
                    }
                }
            }
        }
        let mut c = Check::holds(format!("n = {n}: a_λ^ν = δ for |λ| = |ν| ≤ 3"), ok, Provenance::PaperConstant);
        if !bad.is_empty() {
            c = c.with_note(bad.join("; "));
        }
        r.check(c);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(fx.tensor_seed);
    let tables: Vec<CharacterTable> = (0..=8).map(CharacterTable::new).collect();
    let mut tested = Vec::new();
    let mut ok = true;
    for _ in 0..20 {
        let n = rng.gen_range(2..=8usize);
        let parts = enumerate_partitions(n);
        let l = parts[rng.gen_range(0..parts.len())].clone();
        ok &= tensor_rule_holds(&l, &tables[n])?;
        tested.push(l.to_string());
    }
    r.check(Check::holds("tensor rule for 20 random λ, n ≤ 8", ok, Provenance::PaperConstant).with_note(tested.join(" ")));
    Ok(r)
}
