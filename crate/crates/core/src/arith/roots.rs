//! Certified complex root isolation over exact rational arithmetic.
//!
//! Real roots are counted and isolated by Sturm sequences and refined by
//! sign bisection. Nonreal roots are approximated by Aberth iteration in
//! dyadic rational arithmetic and certified with Weierstrass inclusion
//! disks: with approximations z_1..z_k, every root of p lies in the union
//! of the disks D(z_i, k*|p(z_i)/(lc * prod_{j!=i}(z_i - z_j))|), and a
//! connected component made of m disks contains exactly m roots. Pairwise
//! disjoint disks therefore isolate one root each.

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dyadic::{round_to_bits, sqrt_upper};
use super::{ArithError, Int, IntPoly, Rat, RatPoly};

/// Axis-aligned rational rectangle in the complex plane. A box tagged real
/// has im_lo = im_hi = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBox {
    pub re_lo: Rat,
    pub re_hi: Rat,
    pub im_lo: Rat,
    pub im_hi: Rat,
}

/// Exact complex rational number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        CRat { re, im }
    }

    pub fn zero() -> Self {
        CRat::new(Rat::zero(), Rat::zero())
    }

    pub fn from_re(re: Rat) -> Self {
        CRat::new(re, Rat::zero())
    }

    pub fn conj(&self) -> Self {
        CRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        CRat::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        CRat::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        CRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sq();
        assert!(!d.is_zero(), "complex division by zero");
        let n = self.mul(&o.conj());
        CRat::new(n.re / &d, n.im / &d)
    }

    pub fn inv(&self) -> Self {
        CRat::from_re(Rat::one()).div(self)
    }

    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn round(&self, bits: u32) -> Self {
        CRat::new(round_to_bits(&self.re, bits), round_to_bits(&self.im, bits))
    }
}

/// Closed rational interval, used for box arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Self) -> Self {
        RatInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rat::zero())
    }

    /// Interval of squares: [min x^2, max x^2] over the interval.
    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        let hi = a.clone().max(b.clone());
        let lo = if self.contains_zero() {
            Rat::zero()
        } else {
            a.min(b)
        };
        RatInterval::new(lo, hi)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(Int::from(2))
    }

    pub fn intersects(&self, o: &Self) -> bool {
        !(self.hi < o.lo || o.hi < self.lo)
    }
}

impl ComplexBox {
    pub fn new(re_lo: Rat, re_hi: Rat, im_lo: Rat, im_hi: Rat) -> Self {
        assert!(re_lo <= re_hi && im_lo <= im_hi, "malformed box");
        ComplexBox { re_lo, re_hi, im_lo, im_hi }
    }

    pub fn from_intervals(re: RatInterval, im: RatInterval) -> Self {
        ComplexBox::new(re.lo, re.hi, im.lo, im.hi)
    }

    pub fn point(z: &CRat) -> Self {
        ComplexBox::new(z.re.clone(), z.re.clone(), z.im.clone(), z.im.clone())
    }

    pub fn re(&self) -> RatInterval {
        RatInterval::new(self.re_lo.clone(), self.re_hi.clone())
    }

    pub fn im(&self) -> RatInterval {
        RatInterval::new(self.im_lo.clone(), self.im_hi.clone())
    }

    pub fn is_real(&self) -> bool {
        self.im_lo.is_zero() && self.im_hi.is_zero()
    }

    pub fn center(&self) -> CRat {
        CRat::new(self.re().mid(), self.im().mid())
    }

    pub fn width(&self) -> Rat {
        self.re().width().max(self.im().width())
    }

    pub fn conj(&self) -> Self {
        ComplexBox::new(
            self.re_lo.clone(),
            self.re_hi.clone(),
            -self.im_hi.clone(),
            -self.im_lo.clone(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBox::from_intervals(self.re().add(&o.re()), self.im().add(&o.im()))
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBox::from_intervals(self.re().sub(&o.re()), self.im().sub(&o.im()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let re = self.re().mul(&o.re()).sub(&self.im().mul(&o.im()));
        let im = self.re().mul(&o.im()).add(&self.im().mul(&o.re()));
        ComplexBox::from_intervals(re, im)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let ci = RatInterval::point(c.clone());
        ComplexBox::from_intervals(self.re().mul(&ci), self.im().mul(&ci))
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = ComplexBox::point(&CRat::from_re(Rat::one()));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Interval enclosing |z|^2 over the box.
    pub fn modulus_sq(&self) -> RatInterval {
        self.re().square().add(&self.im().square())
    }

    /// Rational lower bound on |z| over the box.
    pub fn modulus_lower(&self, bits: u32) -> Rat {
        let m = self.modulus_sq();
        super::dyadic::sqrt_lower(&m.lo, bits)
    }

    /// Rational upper bound on |z| over the box.
    pub fn modulus_upper(&self, bits: u32) -> Rat {
        let m = self.modulus_sq();
        sqrt_upper(&m.hi, bits)
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re().intersects(&o.re()) && self.im().intersects(&o.im())
    }

    pub fn contains(&self, z: &CRat) -> bool {
        self.re().contains(&z.re) && self.im().contains(&z.im)
    }

    /// Evaluate a rational polynomial over the box by interval Horner.
    pub fn eval_poly(&self, p: &RatPoly) -> ComplexBox {
        let mut acc = ComplexBox::point(&CRat::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            acc = acc.add(&ComplexBox::point(&CRat::from_re(c.clone())));
        }
        acc
    }
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Sturm chain of a squarefree rational polynomial.
struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    fn new(p: &RatPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            chain.push(r.neg());
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for q in &self.chain {
            let s = {
                let val = q.eval(x);
                if val.is_zero() {
                    0
                } else if val.is_positive() {
                    1
                } else {
                    -1
                }
            };
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Number of distinct real roots in (a, b].
    fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Cauchy root bound: all roots have modulus < 1 + max|a_i| / |lc|.
pub fn cauchy_bound(p: &IntPoly) -> Rat {
    let lc = p.lc();
    let mut m = Rat::zero();
    for c in p.coeffs() {
        let q = Rat::new(c.clone(), lc.clone()).abs();
        if q > m {
            m = q;
        }
    }
    Rat::one() + m
}

/// Isolating intervals (lo, hi] for all real roots of squarefree p,
/// refined so that each has width <= target. Roots hit exactly are
/// returned as point intervals.
fn isolate_real_roots(p: &IntPoly, target: &Rat) -> Vec<RatInterval> {
    let prat = p.to_rat();
    let sturm = SturmChain::new(&prat);
    let bound = cauchy_bound(p);
    let mut stack = vec![RatInterval::new(-bound.clone(), bound)];
    let mut isolated: Vec<RatInterval> = Vec::new();
    while let Some(iv) = stack.pop() {
        let n = sturm.count(&iv.lo, &iv.hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            isolated.push(iv);
            continue;
        }
        let mid = iv.mid();
        stack.push(RatInterval::new(iv.lo.clone(), mid.clone()));
        stack.push(RatInterval::new(mid, iv.hi.clone()));
    }
    // Refine each isolating interval by sign bisection down to `target`.
    let mut out = Vec::new();
    for iv in isolated {
        out.push(refine_real_root(&prat, &sturm, iv, target));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

fn refine_real_root(
    p: &RatPoly,
    sturm: &SturmChain,
    iv: RatInterval,
    target: &Rat,
) -> RatInterval {
    // The root lies in (lo, hi]. If an endpoint evaluates to zero it is
    // the root itself.
    let mut lo = iv.lo;
    let mut hi = iv.hi;
    if p.eval(&hi).is_zero() {
        return RatInterval::point(hi);
    }
    loop {
        if &(&hi - &lo) <= target {
            return RatInterval::new(lo, hi);
        }
        let mid = (&lo + &hi) / rat(2, 1);
        let vm = p.eval(&mid);
        if vm.is_zero() {
            return RatInterval::point(mid);
        }
        if sturm.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// f64 Durand-Kerner to get starting points for the certified phase.
fn durand_kerner_f64(coeffs: &[f64]) -> Option<Vec<(f64, f64)>> {
    let k = coeffs.len() - 1;
    if k == 0 {
        return Some(Vec::new());
    }
    let lc = coeffs[k];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lc).collect();
    if monic.iter().any(|c| !c.is_finite()) {
        return None;
    }
    let radius = 1.0
        + monic[..k]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<(f64, f64)> = (0..k)
        .map(|i| {
            let ang = 2.0 * std::f64::consts::PI * (i as f64) / (k as f64) + 0.4;
            (radius * 0.7 * ang.cos(), radius * 0.7 * ang.sin())
        })
        .collect();
    let eval = |z: (f64, f64)| -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for c in monic.iter().rev() {
            let nre = re * z.0 - im * z.1 + c;
            let nim = re * z.1 + im * z.0;
            re = nre;
            im = nim;
        }
        (re, im)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..k {
            let (pre, pim) = eval(z[i]);
            let mut dre = 1.0;
            let mut dim = 0.0;
            for j in 0..k {
                if j == i {
                    continue;
                }
                let (a, b) = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                let nre = dre * a - dim * b;
                let nim = dre * b + dim * a;
                dre = nre;
                dim = nim;
            }
            let den = dre * dre + dim * dim;
            if den == 0.0 || !den.is_finite() {
                return None;
            }
            let wre = (pre * dre + pim * dim) / den;
            let wim = (pim * dre - pre * dim) / den;
            z[i].0 -= wre;
            z[i].1 -= wim;
            moved = moved.max(wre.abs().max(wim.abs()));
        }
        if moved < 1e-14 {
            break;
        }
    }
    if z.iter().all(|&(a, b)| a.is_finite() && b.is_finite()) {
        Some(z)
    } else {
        None
    }
}

struct Approximations {
    /// All current approximations; real ones have im = 0 exactly and
    /// nonreal ones come in exact conjugate pairs (i, partner[i]).
    points: Vec<CRat>,
    real_count: usize,
}

/// Certified isolation of all roots of a squarefree integer polynomial.
/// Returns exactly deg(p) pairwise disjoint boxes, widths <= 2^-precision_bits,
/// sorted by (re, im) of box centers; conjugate pairs are exact mirrors and
/// real roots sit in real-tagged boxes.
pub fn isolate_roots(p: &IntPoly, precision_bits: u32) -> Result<Vec<ComplexBox>, ArithError> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(Vec::new());
    }
    if !p.is_squarefree() {
        return Err(ArithError::NotSquarefree);
    }
    let p = p.primitive();
    let k = p.deg();
    let target = Rat::new(Int::one(), Int::one() << (precision_bits + 2));

    // Real roots, exactly counted and certified by Sturm.
    let real_ivs = isolate_real_roots(&p, &target);
    let n_real = real_ivs.len();
    let n_complex = k - n_real;
    debug_assert!(n_complex % 2 == 0);

    let mut boxes: Vec<ComplexBox> = real_ivs
        .iter()
        .map(|iv| {
            ComplexBox::new(iv.lo.clone(), iv.hi.clone(), Rat::zero(), Rat::zero())
        })
        .collect();

    if n_complex > 0 {
        let complex_boxes = isolate_complex_roots(&p, &real_ivs, precision_bits)?;
        boxes.extend(complex_boxes);
    }

    boxes.sort_by(|a, b| {
        let ca = a.center();
        let cb = b.center();
        ca.re.cmp(&cb.re).then(ca.im.cmp(&cb.im))
    });
    Ok(boxes)
}

fn isolate_complex_roots(
    p: &IntPoly,
    real_ivs: &[RatInterval],
    precision_bits: u32,
) -> Result<Vec<ComplexBox>, ArithError> {
    let k = p.deg();
    let n_real = real_ivs.len();
    let prat = p.to_rat();
    let pder = prat.derivative();

    // Starting points: f64 Durand-Kerner, matched against the certified
    // real roots; leftover approximations are the nonreal ones.
    let coeffs_f64: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| Rat::from_integer(c.clone()).to_f64().unwrap_or(f64::NAN))
        .collect();
    let init = durand_kerner_f64(&coeffs_f64).ok_or(ArithError::IsolationFailed)?;
    let real_mids: Vec<f64> = real_ivs
        .iter()
        .map(|iv| iv.mid().to_f64().unwrap_or(0.0))
        .collect();
    // Take the approximations with positive imaginary part, farthest from
    // being real; there must be exactly (k - n_real)/2 of them.
    let mut pos: Vec<(f64, f64)> = init.iter().copied().filter(|&(_, b)| b > 0.0).collect();
    pos.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    let pairs = (k - n_real) / 2;
    if pos.len() < pairs {
        return Err(ArithError::IsolationFailed);
    }
    pos.truncate(pairs);
    let _ = real_mids;

    let mut wb: u32 = 64.max(precision_bits / 2);
    let wb_max: u32 = 4 * precision_bits + 1024;

    let mut approx = Approximations {
        points: {
            let mut v: Vec<CRat> = real_ivs
                .iter()
                .map(|iv| CRat::from_re(iv.mid()))
                .collect();
            for &(a, b) in &pos {
                let z = CRat::new(
                    Rat::from_float(a).unwrap_or_else(Rat::zero),
                    Rat::from_float(b).unwrap_or_else(Rat::one),
                );
                v.push(z.clone());
                v.push(z.conj());
            }
            v
        },
        real_count: n_real,
    };

    let max_rounds = 220;
    for round in 0..max_rounds {
        // Aberth update of the nonreal representatives (even offsets past
        // the real block); partners are mirrored to keep exact symmetry.
        let pts = approx.points.clone();
        let mut i = approx.real_count;
        while i < pts.len() {
            let z = &pts[i];
            let pv = eval_crat(&prat, z);
            let dv = eval_crat(&pder, z);
            if !dv.is_zero() {
                let newton = pv.div(&dv);
                let mut repel = CRat::zero();
                for (j, other) in pts.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    let diff = z.sub(other);
                    if diff.is_zero() {
                        continue;
                    }
                    repel = repel.add(&diff.inv());
                }
                let denom = CRat::from_re(Rat::one()).sub(&newton.mul(&repel));
                if !denom.is_zero() {
                    let step = newton.div(&denom);
                    let newz = z.sub(&step).round(wb);
                    approx.points[i] = newz.clone();
                    approx.points[i + 1] = newz.conj();
                }
            }
            i += 2;
        }

        if round % 3 == 2 || round + 1 == max_rounds {
            if let Some(boxes) = try_certify(p, &approx, real_ivs, precision_bits) {
                return Ok(boxes);
            }
            if wb < wb_max {
                wb = (wb * 2).min(wb_max);
            }
        }
    }
    Err(ArithError::IsolationFailed)
}

fn eval_crat(p: &RatPoly, z: &CRat) -> CRat {
    let mut acc = CRat::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc = acc.add(&CRat::from_re(c.clone()));
    }
    acc
}

/// Weierstrass-disk certification. Returns the nonreal boxes when every
/// disk is small enough, pairwise disjoint (including against the real
/// boxes) and strictly off the real axis.
fn try_certify(
    p: &IntPoly,
    approx: &Approximations,
    real_ivs: &[RatInterval],
    precision_bits: u32,
) -> Option<Vec<ComplexBox>> {
    let k = p.deg();
    let prat = p.to_rat();
    let lc_sq = {
        let lc = Rat::from_integer(p.lc());
        &lc * &lc
    };
    let sqrt_bits = precision_bits + 16;
    let n = approx.points.len();
    debug_assert_eq!(n, k);

    // r_i^2 = k^2 |p(z_i)|^2 / (|lc|^2 prod_{j!=i} |z_i - z_j|^2)
    let mut radii: Vec<Rat> = Vec::with_capacity(n);
    for i in 0..n {
        let z = &approx.points[i];
        let pv = eval_crat(&prat, z);
        let mut prod = Rat::one();
        for (j, other) in approx.points.iter().enumerate() {
            if j == i {
                continue;
            }
            let d = z.sub(other).norm_sq();
            if d.is_zero() {
                return None;
            }
            prod *= d;
        }
        let r_sq = Rat::from_integer(Int::from(k * k)) * pv.norm_sq() / (&lc_sq * prod);
        radii.push(sqrt_upper(&r_sq, sqrt_bits));
    }

    let width_cap = Rat::new(Int::one(), Int::one() << (precision_bits + 1));
    // Nonreal representatives must have certified radius below target and
    // stay strictly off the axis.
    for i in approx.real_count..n {
        if radii[i] > width_cap {
            return None;
        }
        if approx.points[i].im.abs() <= radii[i] {
            return None;
        }
    }

    // Pairwise disjoint disks: |c_i - c_j| > r_i + r_j.
    for i in 0..n {
        for j in i + 1..n {
            let d = approx.points[i].sub(&approx.points[j]).norm_sq();
            let s = &radii[i] + &radii[j];
            if d <= &s * &s {
                return None;
            }
        }
    }

    // Build square boxes around the nonreal disks and check disjointness
    // against the real boxes and each other (boxes are supersets of disks).
    let mut boxes: Vec<ComplexBox> = Vec::new();
    for i in approx.real_count..n {
        let c = &approx.points[i];
        let r = &radii[i];
        boxes.push(ComplexBox::new(
            &c.re - r,
            &c.re + r,
            &c.im - r,
            &c.im + r,
        ));
    }
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if boxes[i].intersects(&boxes[j]) {
                return None;
            }
        }
        for iv in real_ivs {
            let rb = ComplexBox::new(iv.lo.clone(), iv.hi.clone(), Rat::zero(), Rat::zero());
            if boxes[i].intersects(&rb) {
                return None;
            }
        }
    }
    Some(boxes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    fn contains_real(boxes: &[ComplexBox], x: f64) -> bool {
        boxes.iter().any(|b| {
            b.is_real()
                && b.re_lo.to_f64().unwrap() <= x
                && x <= b.re_hi.to_f64().unwrap()
        })
    }

    #[test]
    fn pure_imaginary_pair() {
        let boxes = isolate_roots(&poly(&[1, 0, 1]), 64).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().all(|b| !b.is_real()));
        assert_eq!(boxes[0], boxes[1].conj());
        assert!(boxes[0].modulus_sq().contains(&Rat::one()));
    }

    #[test]
    fn golden_ratio_roots() {
        let boxes = isolate_roots(&poly(&[-1, -1, 1]), 80).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().all(|b| b.is_real()));
        assert!(contains_real(&boxes, 1.618033988749895));
        assert!(contains_real(&boxes, -0.6180339887498949));
    }

    #[test]
    fn plastic_constant_roots() {
        let boxes = isolate_roots(&poly(&[-1, -1, 0, 1]), 64).unwrap();
        assert_eq!(boxes.len(), 3);
        let real: Vec<_> = boxes.iter().filter(|b| b.is_real()).collect();
        assert_eq!(real.len(), 1);
        assert!(contains_real(&boxes, 1.3247179572447460));
        let complex: Vec<_> = boxes.iter().filter(|b| !b.is_real()).collect();
        for b in &complex {
            assert!(b.modulus_upper(64) < Rat::one());
        }
    }

    #[test]
    fn widths_meet_precision() {
        let boxes = isolate_roots(&poly(&[-1, -1, 0, 1]), 100).unwrap();
        let cap = Rat::new(Int::one(), Int::one() << 100);
        for b in boxes {
            assert!(b.width() <= cap);
        }
    }

    #[test]
    fn rejects_non_squarefree() {
        let sq = poly(&[-2, 1]).mul(&poly(&[-2, 1]));
        assert_eq!(isolate_roots(&sq, 32), Err(ArithError::NotSquarefree));
    }

    #[test]
    fn boxes_pairwise_disjoint() {
        // x^5 - x - 1: one real root, two conjugate pairs
        let boxes = isolate_roots(&poly(&[-1, -1, 0, 0, 0, 1]), 96).unwrap();
        assert_eq!(boxes.len(), 5);
        for i in 0..boxes.len() {
            for j in i + 1..boxes.len() {
                assert!(!boxes[i].intersects(&boxes[j]));
            }
        }
    }
}
