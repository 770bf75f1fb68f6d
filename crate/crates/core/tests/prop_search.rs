//! Randomized laws for factorization, triple search, gcd scans and the
//! classical quadruple formulas.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

use pisotriple_core::recurrence::{fibonacci, lucas, tribonacci, RecurrenceSpec};
use pisotriple_core::search::{
    brute_force_triples, dplus_extension, euler_quadruple, factorize, find_triples, gcd_scan,
};
use pisotriple_core::Int;

/// Trial-division primality for u64 values: the independent oracle.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(210))]

    #[test]
    fn factorization_is_complete_and_prime(n in 1u64..1_000_000_000_000) {
        let f = factorize(&Int::from(n), 10_000).unwrap();
        prop_assert_eq!(f.value(), Int::from(n));
        prop_assert!(f.certified);
        let mut last = Int::one();
        for (p, e) in &f.factors {
            prop_assert!(*e >= 1);
            prop_assert!(p > &last, "primes not strictly ascending");
            last = p.clone();
            prop_assert!(is_prime_u64(p.to_u64().unwrap()));
        }
    }

    #[test]
    fn dplus_exceeds_c_on_euler_triples(r in 2u64..2_000, da in 0usize..8) {
        // any divisor pair a*b = r^2-1 with a < b gives a Diophantine pair;
        // Euler's construction then yields a triple to extend
        let v = r * r - 1;
        let divs: Vec<u64> = (1..=v).take_while(|d| d * d <= v)
            .filter(|d| v % d == 0)
            .collect();
        let a = divs[da % divs.len()];
        let b = v / a;
        prop_assume!(a < b);
        let quad = euler_quadruple(&Int::from(a), &Int::from(b)).unwrap();
        let [qa, qb, qc, qd] = &quad;
        prop_assert!(qc > qb && qb > qa);
        prop_assert!(qd > qc, "d+ must exceed c");
        // dplus_extension on the inner triple reproduces the fourth element
        let d = dplus_extension(qa, qb, qc).unwrap();
        prop_assert_eq!(&d, qd);
        prop_assert!(&d > qc);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn find_triples_matches_brute_force(
        si in 0usize..3,
        c_max in 10u64..200,
        a_min in 1u64..=2,
    ) {
        let spec: RecurrenceSpec = [fibonacci, lucas, tribonacci][si]();
        let fast = find_triples(&spec, c_max, a_min, 10_000).unwrap();
        let slow = brute_force_triples(&spec, c_max, a_min).unwrap();
        prop_assert_eq!(fast, slow);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn gcd_scan_records_are_true_gcds(si in 0usize..2, span in 10u64..40) {
        let (spec, y_lo): (RecurrenceSpec, u64) =
            if si == 0 { (fibonacci(), 10) } else { (tribonacci(), 10) };
        let z_hi = y_lo + span;
        let report = gcd_scan(&spec, y_lo, z_hi).unwrap();
        let values = spec.eval_range(0, z_hi);
        for rec in &report.records {
            let fy: Int = &values[rec.y as usize] - 1;
            let fz: Int = &values[rec.z as usize] - 1;
            prop_assert_eq!(&rec.g, &fy.gcd(&fz), "y={} z={}", rec.y, rec.z);
            prop_assert!((&fy % &rec.g).is_zero());
            prop_assert!((&fz % &rec.g).is_zero());
        }
        // empirical slack bound for the ineffective constant
        let k = spec.order() as i64;
        let bound = pisotriple_core::Rat::new(Int::from(k), Int::from(k + 1))
            + pisotriple_core::Rat::new(Int::from(10), Int::from(y_lo));
        prop_assert!(report.max_ratio <= bound);
    }
}
