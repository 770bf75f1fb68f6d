//! Factorization of integer polynomials over the rationals: Yun squarefree
//! decomposition, Cantor-Zassenhaus factorization modulo a small prime,
//! quadratic Hensel lifting to a power beyond the Mignotte bound, then
//! subset recombination.

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ArithError, Int, IntPoly};

const DEGREE_CAP: usize = 64;

/// Irreducible factors over Q with multiplicities. Each factor is
/// primitive with positive leading coefficient; the product of
/// factor^multiplicity equals the input up to a rational unit. Factors are
/// ordered by (degree, coefficient vector).
pub fn factor_over_rationals(
    p: &IntPoly,
) -> Result<Vec<(IntPoly, usize)>, ArithError> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let n = p.deg();
    if n > DEGREE_CAP {
        return Err(ArithError::DegreeCap(n, DEGREE_CAP));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let prim = p.primitive();
    let mut out: Vec<(IntPoly, usize)> = Vec::new();
    for (sf, mult) in yun_squarefree(&prim) {
        for f in factor_squarefree(&sf) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg()
            .cmp(&b.0.deg())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(out)
}

/// Yun's squarefree decomposition of a primitive polynomial with positive
/// leading coefficient. Returns (squarefree part, multiplicity) pairs.
fn yun_squarefree(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    let mut out = Vec::new();
    let dp = p.derivative();
    let g = int_gcd(p, &dp);
    if g.degree() == Some(0) {
        out.push((p.clone(), 1));
        return out;
    }
    let mut w = p.div_exact(&g).expect("gcd divides");
    let mut y = dp.div_exact(&g).expect("gcd divides derivative");
    let mut i = 1usize;
    loop {
        let z = y.sub(&w.derivative());
        if z.is_zero() {
            if w.deg() > 0 {
                out.push((w.primitive(), i));
            }
            break;
        }
        let f = int_gcd(&w, &z);
        if f.deg() > 0 {
            out.push((f.primitive(), i));
        }
        w = w.div_exact(&f).expect("gcd divides w");
        y = z.div_exact(&f).expect("gcd divides z");
        i += 1;
        if w.degree() == Some(0) {
            break;
        }
    }
    out
}

/// Primitive gcd in Z[x] via the monic gcd over Q.
fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let g = a.to_rat().gcd(&b.to_rat());
    g.clear_denominators().0.primitive()
}

/// Factor a primitive squarefree polynomial with positive leading
/// coefficient into irreducibles over Q.
fn factor_squarefree(p: &IntPoly) -> Vec<IntPoly> {
    let n = p.deg();
    if n == 1 {
        return vec![p.clone()];
    }
    // Strip a power of x (p squarefree, so at most one).
    if p.coeff(0).is_zero() {
        let q = p.div_exact(&IntPoly::x()).expect("x divides");
        let mut f = factor_squarefree(&q);
        f.push(IntPoly::x());
        return f;
    }
    let lc = p.lc();
    if lc.is_one() {
        return zassenhaus_monic(p);
    }
    // Monic transform: m(x) = lc^(n-1) * p(x/lc) is monic with integer
    // coefficients; factors map back via x -> lc*x and primitive parts.
    let mut mc = Vec::with_capacity(n + 1);
    for (i, c) in p.coeffs().iter().enumerate().take(n) {
        // coefficient of x^i in m is c_i * lc^(n-1-i)
        mc.push(c * lc.pow((n - 1 - i) as u32));
    }
    mc.push(Int::one());
    let m = IntPoly::new(mc);
    let mut out = Vec::new();
    for f in zassenhaus_monic(&m) {
        // substitute x -> lc*x then take the primitive part
        let d = f.deg();
        let back = IntPoly::new(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c * lc.pow(i as u32))
                .collect(),
        );
        debug_assert_eq!(back.deg(), d);
        out.push(back.primitive());
    }
    out
}

/// Zassenhaus factorization of a monic squarefree integer polynomial.
fn zassenhaus_monic(p: &IntPoly) -> Vec<IntPoly> {
    let n = p.deg();
    debug_assert!(p.is_monic());
    if n == 1 {
        return vec![p.clone()];
    }
    // Pick a small odd prime keeping p squarefree mod p.
    let prime = choose_prime(p);
    let modular = factor_mod_p(p, prime);
    if modular.len() == 1 {
        return vec![p.clone()];
    }
    // Mignotte-style bound: |coeff of any monic factor| <= 2^n * ||p||_2.
    let norm2_sq: Int = p.coeffs().iter().map(|c| c * c).sum();
    let bound = (Int::one() << n) * (norm2_sq.sqrt() + Int::one());
    let target = &bound * Int::from(2) + Int::one();
    let mut pk = Int::from(prime);
    let mut e = 1u32;
    while pk < target {
        pk = &pk * Int::from(prime);
        e += 1;
    }
    let lifted = hensel_lift_tree(p, &modular, prime, e);
    recombine(p, lifted, &pk)
}

fn choose_prime(p: &IntPoly) -> u64 {
    let candidates = [
        3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
        181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277,
        281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389,
        397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499,
    ];
    for &q in &candidates {
        let f = ModPoly::from_int(p, q);
        if f.deg() != p.deg() {
            continue; // lc vanished (cannot happen for monic, kept for safety)
        }
        let d = f.derivative();
        if d.is_zero() {
            continue;
        }
        if f.gcd(&d).deg() == 0 {
            return q;
        }
    }
    // p squarefree over Q, so only finitely many primes fail; extend the
    // search past the table.
    let mut q = 503u64;
    loop {
        if is_prime_u64(q) {
            let f = ModPoly::from_int(p, q);
            if f.deg() == p.deg() {
                let d = f.derivative();
                if !d.is_zero() && f.gcd(&d).deg() == 0 {
                    return q;
                }
            }
        }
        q += 2;
    }
}

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

// ---------------------------------------------------------------------
// Arithmetic in F_p[x] for a small odd prime p.
// ---------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
struct ModPoly {
    c: Vec<u64>,
    p: u64,
}

impl ModPoly {
    fn new(mut c: Vec<u64>, p: u64) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { c, p }
    }

    fn from_int(f: &IntPoly, p: u64) -> Self {
        let pm = Int::from(p);
        ModPoly::new(
            f.coeffs()
                .iter()
                .map(|a| {
                    let r = a.mod_floor(&pm);
                    u64::try_from(r).expect("reduced residue fits u64")
                })
                .collect(),
            p,
        )
    }

    fn zero(p: u64) -> Self {
        ModPoly { c: Vec::new(), p }
    }

    fn one(p: u64) -> Self {
        ModPoly::new(vec![1], p)
    }

    fn x(p: u64) -> Self {
        ModPoly::new(vec![0, 1], p)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        if self.c.is_empty() {
            0
        } else {
            self.c.len() - 1
        }
    }

    fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    fn coeff(&self, i: usize) -> u64 {
        *self.c.get(i).unwrap_or(&0)
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        ModPoly::new(
            (0..n)
                .map(|i| (self.coeff(i) + self.p - o.coeff(i) % self.p) % self.p)
                .collect(),
            self.p,
        )
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = ((v[i + j] as u128 + (a as u128) * (b as u128)) % self.p as u128) as u64;
            }
        }
        ModPoly::new(v, self.p)
    }

    fn scale(&self, s: u64) -> Self {
        ModPoly::new(
            self.c
                .iter()
                .map(|&a| ((a as u128 * s as u128) % self.p as u128) as u64)
                .collect(),
            self.p,
        )
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let p = self.p;
        let dd = d.deg();
        let inv_lc = inv_mod(d.lc(), p);
        let mut r = self.c.clone();
        if self.is_zero() || self.deg() < dd {
            return (ModPoly::zero(p), self.clone());
        }
        let mut q = vec![0u64; self.deg() - dd + 1];
        for i in (0..q.len()).rev() {
            let top = r[i + dd] % p;
            if top == 0 {
                continue;
            }
            let f = (top as u128 * inv_lc as u128 % p as u128) as u64;
            q[i] = f;
            for (j, &b) in d.c.iter().enumerate() {
                let s = (f as u128 * b as u128 % p as u128) as u64;
                r[i + j] = (r[i + j] + p - s) % p;
            }
        }
        (ModPoly::new(q, p), ModPoly::new(r, p))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        ModPoly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, &a)| (a as u128 * ((i + 1) as u128) % self.p as u128) as u64)
                .collect(),
            self.p,
        )
    }

    /// self^e mod m
    fn pow_mod(&self, e: &Int, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = ModPoly::one(self.p);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        acc
    }

    fn to_int_symmetric(&self, modulus: &Int) -> IntPoly {
        // lift with coefficients in (-m/2, m/2]; here self.c holds residues
        // mod a u64 prime only, so this is used for the mod-p stage tests.
        let half = modulus / Int::from(2);
        IntPoly::new(
            self.c
                .iter()
                .map(|&a| {
                    let v = Int::from(a);
                    if v > half {
                        v - modulus
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

/// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
/// monic squarefree polynomial mod p. Deterministic via a fixed RNG seed.
fn factor_mod_p(p_int: &IntPoly, p: u64) -> Vec<ModPoly> {
    let f = ModPoly::from_int(p_int, p).monic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut out = Vec::new();
    let mut h = ModPoly::x(p);
    let mut rest = f.clone();
    let mut d = 0usize;
    while rest.deg() > 0 {
        d += 1;
        if 2 * d > rest.deg() {
            out.push(rest.clone());
            break;
        }
        h = h.pow_mod(&Int::from(p), &rest);
        let g = h.sub(&ModPoly::x(p)).gcd(&rest);
        if g.deg() > 0 {
            equal_degree_split(&g, d, p, &mut rng, &mut out);
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
        }
    }
    out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.c.cmp(&b.c)));
    out
}

fn equal_degree_split(
    f: &ModPoly,
    d: usize,
    p: u64,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<ModPoly>,
) {
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    let e: Int = (Int::from(p).pow(d as u32) - Int::one()) / Int::from(2);
    loop {
        let r = ModPoly::new(
            (0..f.deg()).map(|_| rng.gen_range(0..p)).collect(),
            p,
        );
        if r.is_zero() {
            continue;
        }
        let s = r.pow_mod(&e, f).sub(&ModPoly::one(p));
        let g = s.gcd(f);
        if g.deg() > 0 && g.deg() < f.deg() {
            equal_degree_split(&g, d, p, rng, out);
            equal_degree_split(&f.div_rem(&g).0.monic(), d, p, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------
// Hensel lifting over Z/p^e.
// ---------------------------------------------------------------------

/// Polynomial arithmetic helpers mod an arbitrary BigInt modulus.
fn poly_mod(f: &IntPoly, m: &Int) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn poly_mul_mod(a: &IntPoly, b: &IntPoly, m: &Int) -> IntPoly {
    poly_mod(&a.mul(b), m)
}

fn poly_sub_mod(a: &IntPoly, b: &IntPoly, m: &Int) -> IntPoly {
    poly_mod(&a.sub(b), m)
}

/// Division with remainder mod m by a monic divisor.
fn poly_div_rem_monic_mod(a: &IntPoly, d: &IntPoly, m: &Int) -> (IntPoly, IntPoly) {
    debug_assert!(d.lc().is_one());
    let mut r = poly_mod(a, m);
    let dd = d.deg();
    let mut q = IntPoly::zero();
    while let Some(dr) = r.degree() {
        if dr < dd {
            break;
        }
        let t = IntPoly::monomial(r.lc(), dr - dd);
        q = q.add(&t);
        r = poly_mod(&r.sub(&t.mul(d)), m);
    }
    (poly_mod(&q, m), r)
}

fn symmetric_lift(f: &IntPoly, m: &Int) -> IntPoly {
    let half = m / Int::from(2);
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let v = c.mod_floor(m);
                if v > half {
                    v - m
                } else {
                    v
                }
            })
            .collect(),
    )
}

/// Quadratic Hensel step: given f = g*h mod m and s*g + t*h = 1 mod m
/// (g monic), produce the same data mod m^2.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &Int,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = poly_sub_mod(f, &g.mul(h), &m2);
    let (q, r) = poly_div_rem_monic_mod(&poly_mul_mod(s, &e, &m2), h, &m2);
    let g1 = poly_mod(&g.add(&e.mul(t)).add(&q.mul(g)), &m2);
    let h1 = poly_mod(&h.add(&r), &m2);
    let b = poly_mod(
        &s.mul(&g1).add(&t.mul(&h1)).sub(&IntPoly::one()),
        &m2,
    );
    let (c, d) = poly_div_rem_monic_mod(&poly_mul_mod(s, &b, &m2), &h1, &m2);
    let s1 = poly_mod(&poly_sub_mod(s, &d, &m2), &m2);
    let t1 = poly_mod(&t.sub(&t.mul(&b)).sub(&c.mul(&g1)), &m2);
    (g1, h1, s1, t1)
}

/// Lift the mod-p factor list of a monic f to factors mod p^e via a
/// recursive two-way split.
fn hensel_lift_tree(f: &IntPoly, factors: &[ModPoly], p: u64, e: u32) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let m = Int::from(p).pow(e);
        return vec![poly_mod(f, &m)];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let pm = Int::from(p);
    let mut g = IntPoly::one();
    for u in left {
        g = poly_mul_mod(&g, &u.to_int_symmetric(&pm), &pm);
    }
    let mut h = IntPoly::one();
    for u in right {
        h = poly_mul_mod(&h, &u.to_int_symmetric(&pm), &pm);
    }
    let g = poly_mod(&g, &pm);
    let h = poly_mod(&h, &pm);
    // Bezout: s*g + t*h = 1 mod p via extended Euclid in F_p[x].
    let (s, t) = bezout_mod_p(&g, &h, p);
    let mut m = pm.clone();
    let target = Int::from(p).pow(e);
    let (mut gg, mut hh, mut ss, mut tt) = (g, h, s, t);
    while m < target {
        let f_red = poly_mod(f, &(&m * &m));
        let (g1, h1, s1, t1) = hensel_step(&f_red, &gg, &hh, &ss, &tt, &m);
        gg = g1;
        hh = h1;
        ss = s1;
        tt = t1;
        m = &m * &m;
    }
    gg = poly_mod(&gg, &target);
    hh = poly_mod(&hh, &target);
    let mut out = hensel_lift_tree(&gg, left, p, e);
    out.extend(hensel_lift_tree(&hh, right, p, e));
    out
}

fn bezout_mod_p(g: &IntPoly, h: &IntPoly, p: u64) -> (IntPoly, IntPoly) {
    let gp = ModPoly::from_int(g, p);
    let hp = ModPoly::from_int(h, p);
    // extended Euclid over F_p[x]
    let (mut r0, mut r1) = (gp.clone(), hp.clone());
    let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
    let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let ns = s0.sub(&q.mul(&s1));
        let nt = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    // r0 = gcd = nonzero constant; normalize to 1
    assert_eq!(r0.deg(), 0, "factors not coprime mod p");
    let inv = inv_mod(r0.lc(), p);
    let s = s0.scale(inv);
    let t = t0.scale(inv);
    let pm = Int::from(p);
    (s.to_int_symmetric(&pm), t.to_int_symmetric(&pm))
}

/// Subset recombination of lifted modular factors into true factors of the
/// monic polynomial f.
fn recombine(f: &IntPoly, lifted: Vec<IntPoly>, pk: &Int) -> Vec<IntPoly> {
    let mut remaining: Vec<IntPoly> = lifted;
    let mut current = f.clone();
    let mut out = Vec::new();
    let mut subset_size = 1usize;
    'outer: while 2 * subset_size <= remaining.len() {
        let idx: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idx, subset_size) {
            let mut prod = IntPoly::one();
            for &i in &combo {
                prod = poly_mul_mod(&prod, &remaining[i], pk);
            }
            let cand = symmetric_lift(&prod, pk);
            if cand.is_zero() {
                continue;
            }
            if let Some(quot) = current.div_exact(&cand) {
                out.push(cand.primitive());
                let mut keep = Vec::new();
                for (i, g) in remaining.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(g);
                    }
                }
                remaining = keep;
                current = quot;
                continue 'outer;
            }
        }
        subset_size += 1;
    }
    if current.deg() > 0 {
        out.push(current.primitive());
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Convenience: true iff p is irreducible over Q (degree >= 1).
pub fn is_irreducible(p: &IntPoly) -> Result<bool, ArithError> {
    if p.is_zero() || p.deg() == 0 {
        return Ok(false);
    }
    let f = factor_over_rationals(p)?;
    Ok(f.len() == 1 && f[0].1 == 1 && f[0].0.deg() == p.deg())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    fn expand(f: &[(IntPoly, usize)]) -> IntPoly {
        let mut acc = IntPoly::one();
        for (q, m) in f {
            for _ in 0..*m {
                acc = acc.mul(q);
            }
        }
        acc
    }

    #[test]
    fn difference_of_squares() {
        let f = factor_over_rationals(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(f, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn plastic_poly_is_irreducible() {
        let f = factor_over_rationals(&p(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(f, vec![(p(&[-1, -1, 0, 1]), 1)]);
    }

    #[test]
    fn sophie_germain_quartic() {
        let f = factor_over_rationals(&p(&[4, 0, 0, 0, 1])).unwrap();
        assert_eq!(f, vec![(p(&[2, -2, 1]), 1), (p(&[2, 2, 1]), 1)]);
    }

    #[test]
    fn multiplicities_and_content() {
        let sq = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[3, 1])).scale(&Int::from(6));
        let f = factor_over_rationals(&sq).unwrap();
        assert_eq!(f, vec![(p(&[-1, 1]), 2), (p(&[3, 1]), 1)]);
    }

    #[test]
    fn expansion_reproduces_primitive_part() {
        let q = p(&[2, 0, -3, 1]).mul(&p(&[-5, 1, 2]));
        let f = factor_over_rationals(&q).unwrap();
        assert_eq!(expand(&f), q.primitive());
    }

    #[test]
    fn non_monic_factors() {
        let q = p(&[1, 2]).mul(&p(&[-1, 3])); // (2x+1)(3x-1)
        let f = factor_over_rationals(&q).unwrap();
        assert_eq!(f, vec![(p(&[-1, 3]), 1), (p(&[1, 2]), 1)]);
    }

    #[test]
    fn x_factor_handled() {
        let q = p(&[0, -1, 0, 1]); // x(x^2-1)
        let f = factor_over_rationals(&q).unwrap();
        assert_eq!(expand(&f), q);
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn zero_rejected() {
        assert!(factor_over_rationals(&IntPoly::zero()).is_err());
    }

    #[test]
    fn cyclotomic_like_high_degree() {
        // x^12 - 1 factors into the six cyclotomic polynomials dividing 12
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = factor_over_rationals(&p(&c)).unwrap();
        assert_eq!(f.iter().map(|(q, m)| q.deg() * m).sum::<usize>(), 12);
        assert_eq!(f.len(), 6);
        assert_eq!(expand(&f), p(&c));
    }
}
