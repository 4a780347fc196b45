//! Betti tables of general principal symmetric ideals against the closed form and
//! hand-computed small cases, plus residue-field resolutions.

use psilab_core::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use psilab_core::homology::{closed_form_betti, koszul_betti, resolve_k_over_a, tables_are_dual, BettiTable};
use psilab_core::inverse::QuotientAlgebra;
use psilab_core::psi::{orbit_span, sample_general_f};

fn general_quotient<F: Field>(field: &F, n: usize, d: usize, seed: u64) -> QuotientAlgebra<F> {
    let f = sample_general_f(field, n, d, seed, 100).unwrap();
    QuotientAlgebra::from_psi(&orbit_span(&f).unwrap()).unwrap()
}

#[test]
fn cubic_in_five_variables_matches_golden_table() {
    let golden = BettiTable::from_entries([(0, 0, 1), (1, 3, 33), (2, 4, 95), (3, 5, 106), (4, 6, 50), (5, 7, 5), (5, 8, 2)]);
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    let a = general_quotient(&fp, 5, 3, 1);
    let table = koszul_betti(&a.to_module(false).unwrap()).unwrap();
    assert_eq!(table, golden, "\n{table}");
    assert_eq!(closed_form_betti(5, 3).unwrap().table().unwrap(), golden);
    let dual = koszul_betti(&a.inverse_system_module(false).unwrap()).unwrap();
    assert!(tables_are_dual(&table, &dual, 5));

    let q = general_quotient(&Rationals, 5, 3, 7);
    assert_eq!(koszul_betti(&q.to_module(false).unwrap()).unwrap(), golden);
}

#[test]
fn cubic_in_few_variables() {
    let expected = [
        vec![(0, 0, 1), (1, 3, 1)],
        vec![(0, 0, 1), (1, 3, 2), (2, 6, 1)],
        vec![(0, 0, 1), (1, 3, 6), (2, 4, 4), (2, 5, 3), (3, 6, 1), (3, 7, 1)],
        vec![(0, 0, 1), (1, 3, 15), (2, 4, 26), (3, 5, 10), (3, 6, 4), (4, 7, 1), (4, 8, 1)],
    ];
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    for (k, entries) in expected.iter().enumerate() {
        let n = k + 1;
        let a = general_quotient(&fp, n, 3, 11);
        let table = koszul_betti(&a.to_module(false).unwrap()).unwrap();
        assert_eq!(table, BettiTable::from_entries(entries.iter().copied()), "n = {n}\n{table}");
    }
}

#[test]
fn closed_form_in_the_stable_range() {
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    for (n, d) in [(4, 2), (5, 2), (6, 2), (6, 3)] {
        let a = general_quotient(&fp, n, d, 3);
        let table = koszul_betti(&a.to_module(false).unwrap()).unwrap();
        assert_eq!(table, closed_form_betti(n, d).unwrap().table().unwrap(), "n = {n}, d = {d}\n{table}");
    }
}

#[test]
fn residue_field_over_quadric_quotient() {
    // A general quadric orbit in three variables gives a Gorenstein algebra with
    // Hilbert function (1,3,1), whose Poincaré series is 1/(1 − 3t + t²).
    let a = general_quotient(&Rationals, 3, 2, 5);
    assert_eq!(a.hilbert(), vec![1, 3, 1]);
    let res = resolve_k_over_a(&a, 4, 50_000_000).unwrap();
    assert!(res.stopped.is_none());
    assert_eq!(res.totals(), vec![1, 3, 8, 21, 55]);
    assert!(res.is_linear());
}

#[test]
fn residue_field_over_polynomial_truncation() {
    // Over k[x]/(x^3) every syzygy module is k shifted alternately by 1 and 2.
    let a = QuotientAlgebra::power_of_maximal_ideal(&Rationals, 1, 3).unwrap();
    let res = resolve_k_over_a(&a, 4, 1_000_000).unwrap();
    let expected = BettiTable::from_entries([(0, 0, 1), (1, 1, 1), (2, 3, 1), (3, 4, 1), (4, 6, 1)]);
    assert_eq!(res.betti, expected);
}
