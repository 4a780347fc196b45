//! Property-based invariants: orbit stability, oracle-versus-formula betti
//! tables, duality, character integrality, and text round trips.

use proptest::prelude::*;

use psilab_core::equivariant::{equivariant_tors, CharacterTable};
use psilab_core::field::{PrimeField, Rationals, DEFAULT_PRIME};
use psilab_core::homology::{closed_form_betti, koszul_betti, tables_are_dual};
use psilab_core::inverse::QuotientAlgebra;
use psilab_core::monomial::MonomialBasis;
use psilab_core::partitions::enumerate_partitions;
use psilab_core::psi::{orbit_span, sample_general_f};
use psilab_core::{Field, Polynomial};

fn prime() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn orbit_spans_are_stable(n in 1usize..5, d in 1usize..4, coeffs in prop::collection::vec(-3i64..=3, 35)) {
        let basis = MonomialBasis::new(n, d);
        let terms = basis.monomials().iter().zip(&coeffs).map(|(m, &c)| (m.clone(), Rationals.from_i64(c)));
        let f = Polynomial::from_terms(Rationals, n, terms);
        prop_assume!(!f.is_zero());
        let ideal = orbit_span(&f).unwrap();
        prop_assert!(ideal.is_stable());
        prop_assert!(ideal.contains(&f).unwrap());
    }

    #[test]
    fn general_quadrics_follow_the_closed_form(n in 2usize..6, seed in 0u64..1_000) {
        let fp = prime();
        let f = sample_general_f(&fp, n, 2, seed, 1_000).unwrap();
        let a = QuotientAlgebra::from_psi(&orbit_span(&f).unwrap()).unwrap();
        let table = koszul_betti(&a.to_module(false).unwrap()).unwrap();
        prop_assert_eq!(table.clone(), closed_form_betti(n, 2).unwrap().table().unwrap());
        let dual = koszul_betti(&a.inverse_system_module(false).unwrap()).unwrap();
        prop_assert!(tables_are_dual(&table, &dual, n));
    }

    #[test]
    fn general_cubics_in_five_variables(seed in 0u64..1_000) {
        let fp = prime();
        let f = sample_general_f(&fp, 5, 3, seed, 1_000).unwrap();
        let a = QuotientAlgebra::from_psi(&orbit_span(&f).unwrap()).unwrap();
        let table = koszul_betti(&a.to_module(false).unwrap()).unwrap();
        prop_assert_eq!(table, closed_form_betti(5, 3).unwrap().table().unwrap());
    }

    #[test]
    fn tor_characters_are_integral(n in 2usize..5, d in 2usize..4, seed in 0u64..1_000) {
        let fp = prime();
        let f = sample_general_f(&fp, n, d, seed, 1_000).unwrap();
        let a = QuotientAlgebra::from_psi(&orbit_span(&f).unwrap()).unwrap();
        let module = a.to_module(true).unwrap();
        let table = koszul_betti(&module).unwrap();
        let tors = equivariant_tors(&module).unwrap();
        for (i, j, b) in table.entries() {
            prop_assert_eq!(tors[&(i, j)].1.dimension(), b as u128);
        }
    }

    #[test]
    fn polynomial_text_round_trips(n in 1usize..5, d in 0usize..4, coeffs in prop::collection::vec((-20i64..=20, 1i64..=6), 35)) {
        let basis = MonomialBasis::new(n, d);
        let terms = basis.monomials().iter().zip(&coeffs).map(|(m, &(a, b))| {
            (m.clone(), num_rational::BigRational::new(a.into(), b.into()))
        });
        let f = Polynomial::from_terms(Rationals, n, terms);
        let back = Polynomial::parse(Rationals, &f.to_string(), Some(n)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn specht_dimensions_square_to_the_group_order(n in 1usize..9) {
        let total: u128 = enumerate_partitions(n).iter().map(|l| l.specht_dimension().pow(2)).sum();
        let factorial: u128 = (1..=n as u128).product();
        prop_assert_eq!(total, factorial);
        let table = CharacterTable::new(n);
        for l in enumerate_partitions(n) {
            let chi = table.character(&l).unwrap();
            prop_assert_eq!(chi.inner(&chi), num_rational::BigRational::from_integer(1.into()));
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(chi.sign_twist(), table.character(&l.conjugate()).unwrap());
        }
    }
}
