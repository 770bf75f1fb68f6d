//! Randomized laws for recurrence evaluation and Binet data: recursion
//! vs. matrix powering, trace round-trips, a 256-bit interval Binet check
//! and sign stabilization of the dominant term.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pisotriple_core::arith::roots::RatInterval;
use pisotriple_core::recurrence::{
    binet_coefficients, build_from_trace, fibonacci, lucas, plastic_exceptional, tribonacci,
    RecurrenceSpec,
};
use pisotriple_core::{Int, IntPoly, Rat, RatPoly};

fn test_specs() -> Vec<RecurrenceSpec> {
    vec![fibonacci(), lucas(), tribonacci(), plastic_exceptional()]
}

/// Small pool of Pisot characteristic polynomials for random specs.
fn poly_pool() -> Vec<IntPoly> {
    vec![
        IntPoly::from_i64(&[-1, -1, 1]),
        IntPoly::from_i64(&[-1, -2, 1]),
        IntPoly::from_i64(&[-1, -1, 0, 1]),
        IntPoly::from_i64(&[-1, -1, -1, 1]),
        IntPoly::from_i64(&[-1, -1, -1, -1, 1]),
    ]
}

#[test]
fn eval_range_agrees_with_matrix_powering() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for spec in test_specs() {
        let table = spec.eval_range(0, 10_000);
        for _ in 0..50 {
            let n = rng.gen_range(0u64..=10_000);
            assert_eq!(spec.eval_at(n), table[n as usize], "n = {n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(210))]

    #[test]
    fn binet_build_round_trip(
        pi in 0usize..5,
        init in prop::collection::vec(-9i64..=9, 4),
    ) {
        let p = poly_pool()[pi].clone();
        let k = p.deg();
        let init: Vec<Int> = init.iter().take(k).map(|v| Int::from(*v)).collect();
        prop_assume!(init.iter().any(|v| !v.is_zero()));
        let spec = RecurrenceSpec::new(p.clone(), init.clone()).unwrap();
        let bd = binet_coefficients(&spec).unwrap();

        // (f, d) is in lowest terms: gcd of f's coordinates with d is 1
        let f_ints: Vec<Int> = bd
            .f()
            .coords()
            .iter()
            .map(|c| {
                prop_assert!(c.is_integer());
                Ok(c.numer().clone())
            })
            .collect::<Result<_, _>>()?;
        let mut g = bd.d().clone();
        for c in &f_ints {
            g = g.gcd(c);
        }
        prop_assert!(g.is_one());

        // build_from_trace on (f, d) recovers the spec exactly
        let spec2 = build_from_trace(&p, &f_ints, bd.d()).unwrap();
        prop_assert_eq!(spec2.initial_values(), spec.initial_values());

        // and binet_coefficients of the rebuilt spec is the identity on (f, d)
        let bd2 = binet_coefficients(&spec2).unwrap();
        prop_assert_eq!(bd2.f(), bd.f());
        prop_assert_eq!(bd2.d(), bd.d());
    }
}

#[test]
fn numerical_binet_interval_contains_sequence() {
    for spec in test_specs() {
        let bd = binet_coefficients(&spec).unwrap();
        let field = bd.f1().field().clone();
        let boxes = field.root_boxes_at(256).unwrap();
        let coord = bd.f1().coord_poly();
        let values = spec.eval_range(0, 50);
        for (n, fnv) in values.iter().enumerate() {
            // sum over conjugates of f1^(i) * alpha_i^n, as one polynomial
            let mut pn = coord.clone();
            for _ in 0..n {
                pn = pn.mul(&RatPoly::x());
            }
            let mut re = RatInterval::point(Rat::zero());
            let mut im = RatInterval::point(Rat::zero());
            for b in &boxes {
                let reduced = pn.div_rem(&field.defining_poly().to_rat()).1;
                let v = b.eval_poly(&reduced);
                re = re.add(&v.re());
                im = im.add(&v.im());
            }
            assert!(
                re.contains(&Rat::from_integer(fnv.clone())),
                "n = {n}: {re:?} misses {fnv}"
            );
            assert!(im.contains_zero(), "n = {n}");
        }
    }
}

#[test]
fn sign_stabilizes_to_dominant_embedding() {
    for spec in test_specs() {
        let cert = spec.validate_pisot_type().unwrap();
        let bd = binet_coefficients(&spec).unwrap();
        let field = bd.f1().field().clone();
        let k = field.degree();
        let boxes = field.root_boxes_at(256).unwrap();
        let coord = bd.f1().coord_poly();

        // dominant embedding of f1: boxes are dominant-first
        let dom = boxes[0].eval_poly(&coord);
        assert!(dom.is_real());
        let dom_re = dom.re();
        assert!(!dom_re.contains_zero(), "f1 dominant embedding straddles 0");
        let positive = dom_re.lo > Rat::zero();

        // conjugate contributions are bounded by sum of |f1^(i)| since
        // |alpha_i| < 1; find n with |f1^(1)| alpha_1^n beating that bound
        let mut tail = Rat::zero();
        for b in boxes.iter().skip(1) {
            let v = b.eval_poly(&coord);
            tail += v.modulus_upper(128);
        }
        let dom_lo_abs = if positive { dom_re.lo.clone() } else { -dom_re.hi.clone() };
        let alpha_lo = cert.dominant_box().re().lo;
        assert!(alpha_lo > Rat::one());
        let mut growth = dom_lo_abs.clone();
        let mut n0 = 0u64;
        while growth <= tail {
            growth *= &alpha_lo;
            n0 += 1;
            assert!(n0 < 10_000, "threshold not reached");
        }
        let n0 = n0.max(k as u64);
        let values = spec.eval_range(n0, n0 + 30);
        for (i, v) in values.iter().enumerate() {
            assert_eq!(
                v.is_positive(),
                positive,
                "n = {}, value = {v}",
                n0 + i as u64
            );
        }
    }
}
