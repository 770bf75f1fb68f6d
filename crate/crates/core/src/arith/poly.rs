//! Dense univariate polynomials with exact coefficients, ascending degree.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Int, Rat};

/// Polynomial with arbitrary-precision integer coefficients, ascending
/// degree. Canonical form has no trailing zeros; the zero polynomial has an
/// empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

/// Polynomial with exact rational coefficients, ascending degree. Every
/// coefficient is kept in lowest terms with positive denominator (the
/// invariant `BigRational` maintains itself).
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPoly::new(vec![Int::zero(), Int::one()])
    }

    /// c * x^n
    pub fn monomial(c: Int, n: usize) -> Self {
        let mut v = vec![Int::zero(); n + 1];
        v[n] = c;
        IntPoly::new(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a nonzero polynomial; panics on the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("zero polynomial has no degree")
    }

    pub fn lc(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    pub fn scale(&self, c: &Int) -> Self {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^n.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![Int::zero(); n];
        v.extend(self.coeffs.iter().cloned());
        IntPoly::new(v)
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Int::from(i + 1))
                .collect(),
        )
    }

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact division in Z[x]; returns None when `other` does not divide
    /// `self` over the integers.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (dq, dr) = (self.deg(), other.deg());
        if dq < dr {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); dq - dr + 1];
        let lcd = other.lc();
        for i in (0..=dq - dr).rev() {
            let top = rem[i + dr].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lcd);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[i + j] -= &q * b;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Pseudo-remainder with the canonical multiplier
    /// lc(d)^(deg n - deg d + 1), i.e. lc(d)^(delta+1) * n = q*d + r.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        pseudo_rem_canonical(self, d)
    }

    /// Resultant of two nonzero integer polynomials via the subresultant
    /// polynomial remainder sequence (Cohen, Alg. 3.3.7). Exact, no floats.
    pub fn resultant(&self, other: &Self) -> Result<Int, ArithError> {
        if self.is_zero() || other.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut sign = 1i32;
        if a.deg() < b.deg() {
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                sign = -sign;
            }
            std::mem::swap(&mut a, &mut b);
        }
        if b.deg() == 0 {
            let r = b.lc().pow(a.deg() as u32);
            return Ok(if sign < 0 { -r } else { r });
        }
        let ca = a.content();
        let cb = b.content();
        let a0 = IntPoly::new(a.coeffs.iter().map(|c| c / &ca).collect());
        let b0 = IntPoly::new(b.coeffs.iter().map(|c| c / &cb).collect());
        let t = ca.pow(b.deg() as u32) * cb.pow(a.deg() as u32);
        let mut a = a0;
        let mut b = b0;
        let mut g = Int::one();
        let mut h = Int::one();
        loop {
            let d = a.deg();
            let e = b.deg();
            let delta = (d - e) as u32;
            if d % 2 == 1 && e % 2 == 1 {
                sign = -sign;
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return Ok(Int::zero());
            }
            a = b;
            let div = &g * h.pow(delta);
            b = IntPoly::new(r.coeffs.iter().map(|c| c / &div).collect());
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                let num = g.pow(delta);
                let den = h.pow(delta - 1);
                num / den
            };
            if b.deg() == 0 {
                let da = a.deg() as u32;
                let num = b.lc().pow(da);
                let den = h.pow(da.saturating_sub(1));
                let res = num / den;
                let res = t * res;
                return Ok(if sign < 0 { -res } else { res });
            }
        }
    }

    /// Squarefree part: p / gcd(p, p'), primitive with positive lc.
    pub fn squarefree_part(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        if self.deg() == 0 {
            return Ok(IntPoly::one());
        }
        let g = self.to_rat().gcd(&self.derivative().to_rat());
        let q = self.to_rat().div_rem(&g).0;
        Ok(q.clear_denominators().0.primitive())
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self
                .to_rat()
                .gcd(&self.derivative().to_rat())
                .degree()
                .unwrap()
                == 0,
        }
    }

    /// p(-x)
    pub fn compose_neg(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

/// Pseudo remainder with the canonical multiplier lc(d)^(deg n - deg d + 1).
fn pseudo_rem_canonical(n: &IntPoly, d: &IntPoly) -> IntPoly {
    let dn = n.deg();
    let dd = d.deg();
    let lcd = d.lc();
    let mut r = n.clone();
    let mut mults = 0u32;
    while let Some(dr) = r.degree() {
        if dr < dd {
            break;
        }
        let t = IntPoly::monomial(r.lc(), dr - dd);
        r = r.scale(&lcd).sub(&t.mul(d));
        mults += 1;
    }
    let want = (dn - dd + 1) as u32;
    if mults < want {
        r = r.scale(&lcd.pow(want - mults));
    }
    r
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn x() -> Self {
        RatPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("zero polynomial has no degree")
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    pub fn neg(&self) -> Self {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::new(v)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(Int::from(i + 1)))
                .collect(),
        )
    }

    /// Quotient and remainder of polynomial division over Q.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let lcd = d.lc();
        let mut r = self.clone();
        let mut q = RatPoly::zero();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = r.lc() / &lcd;
            let mut t = vec![Rat::zero(); dr - dd + 1];
            t[dr - dd] = c;
            let t = RatPoly::new(t);
            q = q.add(&t);
            r = r.sub(&t.mul(d));
        }
        (q, r)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        self.scale(&(Rat::one() / lc))
    }

    /// Monic gcd via the Euclidean algorithm over Q.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// (primitive integer polynomial, denominator d) with d*self integral
    /// up to the returned content scaling: self = int_poly * (num/den) is
    /// NOT preserved; this returns the primitive part and is meant for
    /// callers who only need self up to a rational unit.
    pub fn clear_denominators(&self) -> (IntPoly, Int) {
        let mut den = Int::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ip = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect(),
        );
        (ip, den)
    }

    /// Resultant under the convention Res(p,q) = lc(p)^deg(q) * prod q(a_i)
    /// over the roots a_i of p.
    pub fn resultant(&self, other: &Self) -> Result<Rat, ArithError> {
        if self.is_zero() || other.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        if self.deg() == 0 {
            return Ok(self.lc().pow(other.deg() as i32));
        }
        if other.deg() == 0 {
            return Ok(other.lc().pow(self.deg() as i32));
        }
        let (pi, pd) = self.clear_denominators();
        let (qi, qd) = other.clear_denominators();
        let r = pi.resultant(&qi)?;
        let scale = Rat::new(Int::one(), pd.pow(other.deg() as u32))
            * Rat::new(Int::one(), qd.pow(self.deg() as u32));
        Ok(Rat::from_integer(r) * scale)
    }
}

fn fmt_poly<C: fmt::Display + PartialOrd + Zero + One + PartialEq>(
    coeffs: &[C],
    f: &mut fmt::Formatter<'_>,
    neg: impl Fn(&C) -> bool,
    abs: impl Fn(&C) -> String,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let is_neg = neg(c);
        if first {
            if is_neg {
                write!(f, "-")?;
            }
            first = false;
        } else if is_neg {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        let a = abs(c);
        let unit = a == "1";
        match i {
            0 => write!(f, "{a}")?,
            1 => {
                if unit {
                    write!(f, "x")?
                } else {
                    write!(f, "{a}*x")?
                }
            }
            _ => {
                if unit {
                    write!(f, "x^{i}")?
                } else {
                    write!(f, "{a}*x^{i}")?
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f, |c| c.is_negative(), |c| c.abs().to_string())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(
            &self.coeffs,
            f,
            |c| c.is_negative(),
            |c| {
                let a = c.abs();
                if a.is_integer() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                }
            },
        )
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn canonical_trailing_zeros() {
        let q = IntPoly::new(vec![Int::from(1), Int::from(0), Int::from(0)]);
        assert_eq!(q.degree(), Some(0));
        assert!(IntPoly::new(vec![Int::zero()]).is_zero());
    }

    #[test]
    fn resultant_degree_one_is_evaluation() {
        // Res(x - a, q) = q(a)
        let q = p(&[3, -1, 2, 7]);
        for a in [-3i64, 0, 2, 11] {
            let lin = p(&[-a, 1]);
            let r = lin
                .to_rat()
                .resultant(&q.to_rat())
                .unwrap();
            assert_eq!(r, q.eval_rat(&Rat::from_integer(Int::from(a))));
        }
    }

    #[test]
    fn resultant_frozen_examples() {
        // Res(x^2-2, x-1) = -1 : (sqrt2 - 1)(-sqrt2 - 1) = -(2-1)... = -1
        let r = p(&[-2, 0, 1]).to_rat().resultant(&p(&[-1, 1]).to_rat()).unwrap();
        assert_eq!(r, Rat::from_integer(Int::from(-1)));
        // Res(x^2-2, x^2-3) = (2-3)(2-3) = 1
        let r = p(&[-2, 0, 1]).to_rat().resultant(&p(&[-3, 0, 1]).to_rat()).unwrap();
        assert_eq!(r, Rat::from_integer(Int::from(1)));
    }

    #[test]
    fn resultant_zero_iff_common_factor() {
        let a = p(&[-1, 1]).mul(&p(&[2, 3, 1]));
        let b = p(&[-1, 1]).mul(&p(&[5, 1]));
        assert_eq!(a.resultant(&b).unwrap(), Int::zero());
        let c = p(&[-5, 1]);
        assert_ne!(a.resultant(&c).unwrap(), Int::zero());
    }

    #[test]
    fn resultant_rejects_zero_input() {
        assert_eq!(
            IntPoly::zero().resultant(&p(&[1, 1])),
            Err(ArithError::ZeroPolynomial)
        );
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[-1, 1]);
        let g = a.to_rat().gcd(&b.to_rat());
        assert_eq!(g, b.to_rat().monic());
        assert_eq!(a.div_exact(&b).unwrap(), p(&[1, 1]));
        assert!(p(&[1, 0, 1]).div_exact(&b).is_none());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let a = p(&[-1, 1]); // x-1
        let sq = a.mul(&a).mul(&p(&[2, 1]));
        let sf = sq.squarefree_part().unwrap();
        assert_eq!(sf, p(&[-1, 1]).mul(&p(&[2, 1])));
    }

    #[test]
    fn display_round_trip_shape() {
        assert_eq!(p(&[-1, -1, 0, 1]).to_string(), "x^3-x-1");
        assert_eq!(p(&[2, 0, -3]).to_string(), "-3*x^2+2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
