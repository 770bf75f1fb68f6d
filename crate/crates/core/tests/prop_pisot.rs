//! Randomized laws for Pisot certification: consistency of the certified
//! root boxes with the constant coefficient, and dominant-root growth of
//! the power traces.

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use pisotriple_core::arith::power_traces;
use pisotriple_core::arith::roots::RatInterval;
use pisotriple_core::arith::isolate_roots;
use pisotriple_core::{certify_pisot, Int, IntPoly, Rat};

/// x^k - a_1 x^(k-1) - ... - a_k with a_1 >= ... >= a_k >= 1 always has a
/// single real root > 1 dominating all conjugates, so certification can
/// only fail on reducibility; this gives a rich accepted sample.
fn arb_pisot_candidate() -> impl Strategy<Value = IntPoly> {
    (2usize..=6, prop::collection::vec(0i64..=4, 6), 1i64..=5).prop_map(|(k, bumps, a_last)| {
        let mut coeffs = vec![a_last];
        for b in bumps.iter().take(k - 1) {
            coeffs.push(coeffs.last().unwrap() + b);
        }
        // coeffs now ascend from a_k up to a_1; lay the polynomial out
        let mut c: Vec<i64> = coeffs.iter().map(|a| -a).collect();
        c.push(1);
        IntPoly::from_i64(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(210))]

    #[test]
    fn accepted_boxes_enclose_constant_coefficient(p in arb_pisot_candidate()) {
        let cert = match certify_pisot(&p) {
            Ok(c) => c,
            Err(_) => return Ok(()), // reducible candidates are vacuous here
        };
        let mut prod = RatInterval::point(Rat::one());
        prod = prod.mul(&cert.dominant_box().modulus_sq());
        for b in cert.conjugate_boxes() {
            prod = prod.mul(&b.modulus_sq());
        }
        let c2 = Rat::from_integer(p.coeff(0) * p.coeff(0));
        prop_assert!(prod.contains(&c2), "prod {prod:?} vs {c2}");
    }

    #[test]
    fn accepted_traces_grow_like_dominant_root(p in arb_pisot_candidate()) {
        let cert = match certify_pisot(&p) {
            Ok(c) => c,
            Err(_) => return Ok(()),
        };
        let k = cert.degree();
        // conjugate tail bound (k-1) * ub^n, ub < 1 certified
        let ub = cert
            .conjugate_boxes()
            .iter()
            .map(|b| b.modulus_upper(64))
            .max()
            .unwrap_or_else(Rat::zero);
        prop_assert!(ub < Rat::one());
        let half = Rat::new(Int::from(1), Int::from(2));
        let km1 = Rat::from_integer(Int::from(k as i64 - 1));
        let mut tail = km1.clone();
        let mut n = 0usize;
        while !km1.is_zero() && tail >= half {
            tail *= &ub;
            n += 1;
            prop_assert!(n < 2000, "tail bound did not shrink");
        }
        // at that n, the exact trace is within 1 of the dominant midpoint
        // power; the certificate box may be too coarse for mid^n, so take
        // the dominant midpoint from a high-precision re-isolation
        let traces = power_traces(&p, n).unwrap();
        // width 2^-(bits+2) must beat n * dom^(n-1) ~ 2^(3n) with room
        let bits = 96u32.max(8 * n as u32);
        let boxes = isolate_roots(&p, bits).unwrap();
        let mid = boxes
            .iter()
            .filter(|b| b.is_real() && b.re_lo > Rat::one())
            .map(|b| b.re().mid())
            .next()
            .expect("dominant real box");
        let mut mid_pow = Rat::one();
        for _ in 0..n {
            mid_pow *= &mid;
        }
        let diff = (Rat::from_integer(traces[n].clone()) - mid_pow).abs();
        prop_assert!(diff < Rat::one(), "n = {n}, diff = {diff}");
    }
}
