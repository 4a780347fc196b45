//! Characters of Koszul homology against restriction multiplicities, the
//! predicted equivariant Tor modules, and equivariant duality.

use std::collections::BTreeMap;

use num_rational::BigRational;
use psilab_core::equivariant::*;
use psilab_core::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use psilab_core::homology::koszul_betti;
use psilab_core::inverse::QuotientAlgebra;
use psilab_core::module::GradedModule;
use psilab_core::partitions::{enumerate_partitions, Partition};
use psilab_core::perm::Permutation;
use psilab_core::psi::{orbit_span, sample_general_f};

fn general<F: Field>(field: &F, n: usize, d: usize, seed: u64) -> QuotientAlgebra<F> {
    let f = sample_general_f(field, n, d, seed, 100).unwrap();
    QuotientAlgebra::from_psi(&orbit_span(&f).unwrap()).unwrap()
}

#[test]
fn tor_of_residue_field_is_exterior_power_of_permutation_rep() {
    for n in 1..=6 {
        let table = CharacterTable::new(n);
        let k = GradedModule::residue_field(&Rationals, n);
        // Tor_i(k, k) is computed from the Koszul complex of k ⊗ k: Λ^i R_1 in bidegree (i, i).
        let exterior = truncated_exterior(n);
        for i in 0..=n {
            let chi = tor_character(&exterior, i, i as i32).unwrap();
            let dec = specht_decompose(&chi, &table).unwrap();
            let mut expected = BTreeMap::new();
            if let Some(h) = hook(n, i as i64) {
                expected.insert(h, 1);
            }
            if let Some(h) = hook(n, i as i64 - 1) {
                expected.insert(h, 1);
            }
            assert_eq!(dec.signed(), expected, "n = {n}, i = {i}");
        }
        assert_eq!(tor_character(&k, 0, 0).unwrap().degree(), BigRational::from_integer(1.into()));
    }
}

/// `k` itself: its Koszul homology is `Λ^i k^n` in bidegree `(i, i)`.
fn truncated_exterior(n: usize) -> GradedModule<Rationals> {
    GradedModule::residue_field(&Rationals, n)
}

#[test]
fn quadrics_decompose_consistently() {
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    for n in 3..=5 {
        let a = general(&fp, n, 2, 2);
        let module = a.to_module(true).unwrap();
        let betti = koszul_betti(&module).unwrap();
        let tors = equivariant_tors(&module).unwrap();
        let predicted = predicted_equivariant_tors(n, 2, TorReading::ExactSequence).unwrap();
        for (i, j, b) in betti.entries() {
            let (_, dec) = &tors[&(i, j)];
            assert_eq!(dec.dimension(), b as u128);
            let p = predicted.iter().find(|p| p.i == i && p.j == j).unwrap();
            assert!(p.matches(dec), "n = {n}, ({i},{j}): {dec} vs {}", format_signed(&p.multiplicities));
        }
        // The interior display for Tor_i(I) = Tor_{i+1}(A): exact with straightening on
        // 1 ≤ i ≤ n−2; with the zero convention it is off by one sign summand at i = n−2.
        for i in 1..=n - 2 {
            let actual = tors[&(i + 1, i as i32 + 2)].1.signed();
            assert_eq!(quadratic_display(n, i, NonPartitionRule::Straighten), actual, "n = {n}, i = {i}");
            let zero = quadratic_display(n, i, NonPartitionRule::Zero);
            if i < n - 2 {
                assert_eq!(zero, actual);
            } else {
                let mut bumped = actual.clone();
                *bumped.entry(Partition::column(n)).or_insert(0) += 1;
                assert_eq!(zero, bumped);
            }
        }
    }
}

#[test]
fn cubic_five_variables_equivariant_structure() {
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    let (n, d) = (5, 3);
    let a = general(&fp, n, d, 4);
    let module = a.to_module(true).unwrap();
    let tors = equivariant_tors(&module).unwrap();
    assert!(!tors.contains_key(&(n - 1, (n - 1 + d) as i32)));
    let top = &tors[&(n, (n + d) as i32)].1;
    assert_eq!(top.signed(), BTreeMap::from([(Partition::column(n), 2)]));
    let exact = predicted_equivariant_tors(n, d, TorReading::ExactSequence).unwrap();
    for p in &exact {
        let actual = tors.get(&(p.i, p.j)).map(|t| t.1.signed()).unwrap_or_default();
        assert_eq!(p.multiplicities, actual, "({}, {})", p.i, p.j);
    }
    let literal = predicted_equivariant_tors(n, d, TorReading::Literal).unwrap();
    let third = literal.iter().find(|p| p.i == n && p.j == (n - 1 + d) as i32).unwrap();
    assert_eq!(third.dimension(), 10);
    assert_eq!(tors[&(n, (n - 1 + d) as i32)].1.dimension(), 5);
}

#[test]
fn equivariant_duality() {
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    for (d, n) in [(2, 3), (3, 5)] {
        let a = general(&fp, n, d, 9);
        let m = a.to_module(true).unwrap();
        let dual = a.inverse_system_module(true).unwrap();
        assert!(equivariant_duality_check(&m, &dual).unwrap(), "d = {d}, n = {n}");
    }
}

#[test]
fn characters_do_not_depend_on_the_representative() {
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    let n = 4;
    let a = general(&fp, n, 2, 5);
    let base = a.to_module(true).unwrap();
    let mut conj = base.clone();
    let tau = Permutation::from_cycles(n, &[vec![1, 3, 4]]).unwrap();
    for mu in enumerate_partitions(n) {
        let s = Permutation::of_cycle_type(&mu);
        let c = tau.compose(&s).compose(&tau.inverse());
        let mats = (0..=a.top_degree()).map(|j| a.action_matrix(&c, j)).collect();
        conj.add_action(c, mats).unwrap();
    }
    for (i, j, _) in koszul_betti(&base).unwrap().entries() {
        assert_eq!(tor_character(&base, i, j).unwrap(), tor_character(&conj, i, j).unwrap());
    }
}

#[test]
fn powers_of_the_maximal_ideal() {
    for (n, d) in [(3, 2), (4, 3)] {
        let m = truncated_power_module(&Rationals, n, d, d + n + 1).unwrap();
        let table = CharacterTable::new(n);
        for i in 0..n {
            let chi = tor_character(&m, i, (i + d) as i32).unwrap();
            let mut lambda = vec![d];
            lambda.extend(std::iter::repeat(1).take(i));
            let expected = restriction_decomposition(&Partition::new(lambda).unwrap(), n, &table).unwrap();
            assert_eq!(specht_decompose(&chi, &table).unwrap(), expected);
        }
    }
}

#[test]
fn stable_restriction_coefficients() {
    for n in [8usize, 10] {
        let table = CharacterTable::new(n);
        for size in 1..=3 {
            let lambdas = enumerate_partitions(size);
            for l in &lambdas {
                let dec = restriction_decomposition(l, n, &table).unwrap();
                for nu in &lambdas {
                    let nu_n = nu_of_n(nu, n).unwrap();
                    assert_eq!(dec.get(&nu_n), u64::from(l == nu), "λ = {l}, ν = {nu}, n = {n}");
                }
            }
        }
    }
}
