//! Integer factorization sized for desk-scale search values: trial
//! division, deterministic Miller-Rabin, and Brent's variant of Pollard
//! rho under a wall-clock budget.

use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Int;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("factorization budget exhausted; unfactored cofactor {cofactor}")]
pub struct BudgetExhausted {
    pub cofactor: Int,
}

/// Complete prime factorization, exponents collected, primes ascending.
/// `certified` is false when any primality call exceeded the range of the
/// deterministic Miller-Rabin bases and fell back to probabilistic rounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(Int, u32)>,
    pub certified: bool,
}

impl Factorization {
    pub fn value(&self) -> Int {
        let mut v = Int::one();
        for (p, e) in &self.factors {
            for _ in 0..*e {
                v *= p;
            }
        }
        v
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<Int> {
        let mut divs = vec![Int::one()];
        for (p, e) in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
            let mut pk = Int::one();
            for _ in 0..=*e {
                for d in &divs {
                    next.push(d * &pk);
                }
                pk *= p;
            }
            divs = next;
        }
        divs.sort();
        divs
    }
}

/// Deterministic Miller-Rabin bases: first 13 primes certify primality
/// for all n below 3.3 * 10^24.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn deterministic_bound() -> Int {
    Int::from(33u8) * Int::from(10u64).pow(23)
}

fn miller_rabin_round(n: &Int, a: &Int, d: &Int, s: u32) -> bool {
    // returns true if n passes the round (probably prime)
    if a.mod_floor(n).is_zero() {
        return true;
    }
    let n1 = n - 1;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Primality test. Second component: true when the answer is certified
/// (deterministic bases applied below their proven bound).
pub fn is_prime(n: &Int) -> (bool, bool) {
    if n < &Int::from(2) {
        return (false, true);
    }
    for small in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let sp = Int::from(small);
        if n == &sp {
            return (true, true);
        }
        if n.is_multiple_of(&sp) {
            return (false, true);
        }
    }
    let n1: Int = n - 1;
    let s = n1.trailing_zeros().unwrap_or(0) as u32;
    let d = &n1 >> (s as usize);
    let certified = n < &deterministic_bound();
    if certified {
        for a in MR_BASES {
            if !miller_rabin_round(n, &Int::from(a), &d, s) {
                return (false, true);
            }
        }
        (true, true)
    } else {
        // fixed pseudo-random bases: deterministic output, >= 64 rounds
        let mut a = Int::from(0x9e3779b97f4a7c15u64);
        for _ in 0..64 {
            a = (&a * Int::from(6364136223846793005u64) + Int::from(1442695040888963407u64))
                % (n - 3);
            let base = &a + 2;
            if !miller_rabin_round(n, &base, &d, s) {
                return (false, false);
            }
        }
        (true, false)
    }
}

fn brent_rho(n: &Int, deadline: Instant) -> Option<Int> {
    // n odd composite, not a prime power of a small prime
    for c in 1u64..64 {
        if Instant::now() > deadline {
            return None;
        }
        let cc = Int::from(c);
        let f = |x: &Int| (x * x + &cc) % n;
        let mut y = Int::from(2);
        let mut r: u64 = 1;
        let mut q = Int::one();
        let mut g = Int::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                if Instant::now() > deadline {
                    return None;
                }
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = f(&y);
                    let diff = (&x - &y).abs();
                    q = (&q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            // backtrack one step at a time
            g = Int::one();
            while g.is_one() {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
            }
        }
        if !g.is_one() && &g != n {
            return Some(g);
        }
    }
    None
}

/// Factor n >= 1 completely within the budget. The budget error names
/// the unfactored cofactor so callers can checkpoint and resume.
pub fn factorize(n: &Int, budget_ms: u64) -> Result<Factorization, BudgetExhausted> {
    assert!(n >= &Int::one(), "factorize needs n >= 1");
    let deadline = Instant::now() + Duration::from_millis(budget_ms);
    let mut factors: Vec<(Int, u32)> = Vec::new();
    let mut m = n.clone();
    let mut certified = true;

    // trial division by small primes
    let push = |factors: &mut Vec<(Int, u32)>, p: Int, e: u32| {
        if let Some(last) = factors.last_mut() {
            if last.0 == p {
                last.1 += e;
                return;
            }
        }
        factors.push((p, e));
    };
    let mut d = Int::from(2);
    while &(&d * &d) <= &m && d < Int::from(10_000) {
        let mut e = 0u32;
        while m.is_multiple_of(&d) {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            push(&mut factors, d.clone(), e);
        }
        d += if d == Int::from(2) { 1 } else { 2 };
    }

    // recursive splitting of the remaining cofactor
    let mut stack = Vec::new();
    if !m.is_one() {
        stack.push(m);
    }
    let mut found: Vec<Int> = Vec::new();
    while let Some(v) = stack.pop() {
        let (prime, cert) = is_prime(&v);
        certified &= cert;
        if prime {
            found.push(v);
            continue;
        }
        if Instant::now() > deadline {
            let mut cofactor = v;
            for w in stack {
                cofactor *= w;
            }
            return Err(BudgetExhausted { cofactor });
        }
        // perfect squares defeat rho's cycle structure; peel them first
        let r = v.sqrt();
        if &r * &r == v {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        match brent_rho(&v, deadline) {
            Some(g) => {
                stack.push(&v / &g);
                stack.push(g);
            }
            None => {
                let mut cofactor = v;
                for w in stack {
                    cofactor *= w;
                }
                return Err(BudgetExhausted { cofactor });
            }
        }
    }
    found.sort();
    for p in found {
        push(&mut factors, p, 1);
    }
    factors.sort();
    Ok(Factorization { factors, certified })
}
