//! Dimension of the degree-d piece of the ideal generated by the explicit
//! construction: dim I_d = dim R_d − (P(d) − 1), and every summand lies in I_d.

use psilab_core::field::{PrimeField, Rationals, DEFAULT_PRIME};
use psilab_core::monomial::count_monomials;
use psilab_core::partitions::partition_count;
use psilab_core::psi::{build_construction_f, orbit_span};

#[test]
fn quadratic_construction_over_rationals() {
    for n in [8, 9, 10] {
        let c = build_construction_f(&Rationals, 2, Some(n)).unwrap();
        let i = orbit_span(&c.f).unwrap();
        assert_eq!(i.dim(), count_monomials(n, 2) - (partition_count(2) - 1));
        for s in &c.summands {
            assert!(i.contains(&s.binomial).unwrap());
        }
        assert!(i.is_stable());
    }
}

#[test]
fn cubic_construction_in_26_variables() {
    let p = PrimeField::new(DEFAULT_PRIME).unwrap();
    let c = build_construction_f(&p, 3, None).unwrap();
    let start = std::time::Instant::now();
    let i = orbit_span(&c.f).unwrap();
    eprintln!("n=26 closure: {:?}", start.elapsed());
    assert_eq!(i.dim(), 3276 - 2);
    for s in &c.summands {
        assert!(i.contains(&s.binomial).unwrap());
    }
}
