//! Dyadic rounding, certified rational square-root bounds and a
//! high-precision natural logarithm. Everything here is exact rational
//! arithmetic; "bits" always means an absolute error bound of 2^-bits.

use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, Rat};

/// Round to the nearest multiple of 2^-bits.
pub fn round_to_bits(x: &Rat, bits: u32) -> Rat {
    let scale = Int::one() << bits;
    let scaled = x * Rat::from_integer(scale.clone());
    let half = Rat::new(Int::one(), Int::from(2));
    let n = (scaled + half).floor().to_integer();
    Rat::new(n, scale)
}

/// Floor of the integer square root.
pub fn isqrt(n: &Int) -> Int {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Rational lower bound on sqrt(x) with error at most 2^-bits.
pub fn sqrt_lower(x: &Rat, bits: u32) -> Rat {
    assert!(!x.is_negative());
    let scaled = x * Rat::from_integer(Int::one() << (2 * bits));
    let s = isqrt(&scaled.floor().to_integer());
    Rat::new(s, Int::one() << bits)
}

/// Rational strict upper bound on sqrt(x), within 2^-bits of it.
pub fn sqrt_upper(x: &Rat, bits: u32) -> Rat {
    assert!(!x.is_negative());
    let scaled = x * Rat::from_integer(Int::one() << (2 * bits));
    let s = isqrt(&scaled.floor().to_integer()) + Int::one();
    Rat::new(s, Int::one() << bits)
}

/// True iff x is the square of a rational; returns the nonnegative root.
pub fn rational_sqrt_exact(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let ns = isqrt(x.numer());
    let ds = isqrt(x.denom());
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// floor(log2(x)) for x > 0.
pub fn floor_log2(x: &Rat) -> i64 {
    assert!(x.is_positive());
    let nb = x.numer().bits() as i64;
    let db = x.denom().bits() as i64;
    let mut e = nb - db; // 2^(e) <= x < 2^(e+2)
    let two = Rat::from_integer(Int::from(2));
    let pow = |e: i64| -> Rat {
        if e >= 0 {
            Rat::from_integer(Int::one() << (e as u32))
        } else {
            Rat::new(Int::one(), Int::one() << ((-e) as u32))
        }
    };
    while pow(e) > *x {
        e -= 1;
    }
    while pow(e + 1) <= *x {
        e += 1;
    }
    let _ = two;
    e
}

/// atanh(t) by its power series, for |t| <= 1/2, to within 2^-bits.
fn atanh_series(t: &Rat, bits: u32) -> Rat {
    let wb = bits + 16;
    let t = round_to_bits(t, wb);
    let t2 = round_to_bits(&(&t * &t), wb);
    let mut term = t.clone();
    let mut sum = Rat::zero();
    let mut n = 1u32;
    let eps = Rat::new(Int::one(), Int::one() << (bits + 4));
    loop {
        sum += &term / Rat::from_integer(Int::from(n));
        term = round_to_bits(&(&term * &t2), wb);
        n += 2;
        if term.abs() < eps || n > 10 * wb {
            break;
        }
    }
    round_to_bits(&sum, wb)
}

/// ln(2) to within 2^-bits.
pub fn ln2(bits: u32) -> Rat {
    // ln 2 = 2 atanh(1/3)
    let t = Rat::new(Int::one(), Int::from(3));
    atanh_series(&t, bits + 2) * Rat::from_integer(Int::from(2))
}

/// Natural logarithm of a positive rational to within 2^-bits.
pub fn ln_rat(x: &Rat, bits: u32) -> Rat {
    assert!(x.is_positive(), "ln of non-positive rational");
    let e = floor_log2(x);
    // m = x / 2^e in [1, 2)
    let m = if e >= 0 {
        x / Rat::from_integer(Int::one() << (e as u32))
    } else {
        x * Rat::from_integer(Int::one() << ((-e) as u32))
    };
    // ln m = 2 atanh((m-1)/(m+1)), argument in [0, 1/3)
    let t = (&m - Rat::one()) / (&m + Rat::one());
    let lm = atanh_series(&t, bits + 4) * Rat::from_integer(Int::from(2));
    let l2 = ln2(bits + 4 + 64);
    lm + l2 * Rat::from_integer(Int::from(e))
}

/// Natural logarithm of a positive big integer to within 2^-bits.
pub fn ln_int(n: &Int, bits: u32) -> Rat {
    assert_eq!(n.sign(), Sign::Plus, "ln of non-positive integer");
    ln_rat(&Rat::from_integer(n.clone()), bits)
}

/// Decimal string of a rational truncated to `digits` fractional digits.
pub fn decimal_string(x: &Rat, digits: u32) -> String {
    let neg = x.is_negative();
    let a = x.abs();
    let scale = Int::from(10u32).pow(digits);
    let scaled = (a * Rat::from_integer(scale.clone())).floor().to_integer();
    let (ip, fp) = scaled.div_rem(&scale);
    let frac = fp.to_string();
    let pad = "0".repeat(digits as usize - frac.len());
    format!("{}{}.{}{}", if neg { "-" } else { "" }, ip, pad, frac)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let x = rat(2, 1);
        let lo = sqrt_lower(&x, 64);
        let hi = sqrt_upper(&x, 64);
        assert!(&lo * &lo <= x);
        assert!(&hi * &hi > x);
        assert!(&hi - &lo <= rat(1, 1 << 30));
    }

    #[test]
    fn exact_square_detection() {
        assert_eq!(rational_sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt_exact(&rat(2, 1)), None);
        assert_eq!(rational_sqrt_exact(&rat(-4, 1)), None);
    }

    #[test]
    fn ln_matches_f64() {
        for (n, d) in [(2i64, 1i64), (10, 1), (1, 3), (355, 113)] {
            let x = rat(n, d);
            let l = ln_rat(&x, 128);
            let lf = (n as f64 / d as f64).ln();
            let approx: f64 = num_traits::ToPrimitive::to_f64(&l).unwrap();
            assert!((approx - lf).abs() < 1e-12, "{n}/{d}: {approx} vs {lf}");
        }
    }

    #[test]
    fn floor_log2_edges() {
        assert_eq!(floor_log2(&rat(1, 1)), 0);
        assert_eq!(floor_log2(&rat(1, 2)), -1);
        assert_eq!(floor_log2(&rat(3, 1)), 1);
        assert_eq!(floor_log2(&rat(4, 1)), 2);
        assert_eq!(floor_log2(&rat(1, 5)), -3);
    }

    #[test]
    fn decimal_string_shape() {
        assert_eq!(decimal_string(&rat(-7, 2), 3), "-3.500");
        assert_eq!(decimal_string(&rat(1, 3), 5), "0.33333");
    }
}
