//! Arithmetic in Q(alpha) for a fixed monic irreducible defining
//! polynomial: exact element arithmetic in the power basis, trace/norm,
//! minimal polynomials, in-field square roots and splitting fields.

pub mod poly;
pub mod splitting;
pub mod sqrt;
pub mod trager;

pub use splitting::{build_splitting_field, SplittingField};
pub use sqrt::nf_sqrt;

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::arith::factor::is_irreducible;
use crate::arith::linalg::first_dependence;
use crate::arith::roots::isolate_roots;
use crate::arith::{power_traces, ArithError, ComplexBox, Int, IntPoly, Rat, RatPoly};

/// Errors raised by number-field operations.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum NfError {
    #[error("defining polynomial must be monic")]
    NotMonic,
    #[error("defining polynomial is reducible over Q")]
    Reducible,
    #[error("defining polynomial must have degree >= 1")]
    DegreeZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero element")]
    DivisionByZero,
    #[error("splitting degree would exceed the cap {cap}; reached {reached}")]
    DegreeCapExceeded { cap: usize, reached: usize },
    #[error("operation cancelled")]
    Cancelled,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Number field Q(alpha) = Q[x]/(defining_poly). Root boxes are certified
/// enclosures of the embeddings, one per root, ordered by descending
/// (real part, imaginary part) of box centers, so for a Pisot defining
/// polynomial the dominant real root is index 0.
#[derive(Debug)]
pub struct NumberField {
    defining_poly: IntPoly,
    root_boxes: Vec<ComplexBox>,
    root_precision: u32,
}

pub const DEFAULT_ROOT_BITS: u32 = 128;

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.defining_poly == other.defining_poly
    }
}
impl Eq for NumberField {}

fn sort_boxes_dominant_first(boxes: &mut [ComplexBox]) {
    boxes.sort_by(|a, b| {
        let ca = a.center();
        let cb = b.center();
        cb.re.cmp(&ca.re).then(cb.im.cmp(&ca.im))
    });
}

impl NumberField {
    /// Build a field from a monic irreducible integer polynomial.
    pub fn new(defining_poly: IntPoly) -> Result<Arc<Self>, NfError> {
        if defining_poly.is_zero() || defining_poly.degree() == Some(0) {
            return Err(NfError::DegreeZero);
        }
        if !defining_poly.is_monic() {
            return Err(NfError::NotMonic);
        }
        if defining_poly.deg() > 1 && !is_irreducible(&defining_poly)? {
            return Err(NfError::Reducible);
        }
        let mut root_boxes = isolate_roots(&defining_poly, DEFAULT_ROOT_BITS)?;
        sort_boxes_dominant_first(&mut root_boxes);
        Ok(Arc::new(NumberField {
            defining_poly,
            root_boxes,
            root_precision: DEFAULT_ROOT_BITS,
        }))
    }

    pub fn degree(&self) -> usize {
        self.defining_poly.deg()
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.defining_poly
    }

    pub fn root_boxes(&self) -> &[ComplexBox] {
        &self.root_boxes
    }

    pub fn root_precision(&self) -> u32 {
        self.root_precision
    }

    /// Root boxes re-isolated at the requested precision, same order.
    pub fn root_boxes_at(&self, bits: u32) -> Result<Vec<ComplexBox>, NfError> {
        if bits <= self.root_precision {
            return Ok(self.root_boxes.clone());
        }
        let mut boxes = isolate_roots(&self.defining_poly, bits)?;
        sort_boxes_dominant_first(&mut boxes);
        Ok(boxes)
    }
}

/// Element of a number field as exact rational coordinates in the power
/// basis 1, alpha, ..., alpha^(k-1).
#[derive(Clone, PartialEq, Eq)]
pub struct NFElem {
    field: Arc<NumberField>,
    coords: Vec<Rat>,
}

impl NFElem {
    pub fn new(field: Arc<NumberField>, mut coords: Vec<Rat>) -> Self {
        let k = field.degree();
        assert!(coords.len() <= k, "coordinate vector too long");
        coords.resize(k, Rat::zero());
        NFElem { field, coords }
    }

    pub fn zero(field: Arc<NumberField>) -> Self {
        let k = field.degree();
        NFElem::new(field, vec![Rat::zero(); k])
    }

    pub fn one(field: Arc<NumberField>) -> Self {
        NFElem::from_rat(field, Rat::one())
    }

    pub fn from_rat(field: Arc<NumberField>, c: Rat) -> Self {
        NFElem::new(field, vec![c])
    }

    pub fn from_int(field: Arc<NumberField>, c: Int) -> Self {
        NFElem::from_rat(field, Rat::from_integer(c))
    }

    /// The generator alpha.
    pub fn alpha(field: Arc<NumberField>) -> Self {
        if field.degree() == 1 {
            // alpha is rational: x + c0 = 0
            let c = -field.defining_poly().coeff(0);
            return NFElem::from_int(field, c);
        }
        NFElem::new(field, vec![Rat::zero(), Rat::one()])
    }

    /// Reduce an arbitrary-degree rational polynomial in alpha into the
    /// power basis.
    pub fn from_poly(field: Arc<NumberField>, p: &RatPoly) -> Self {
        let rem = p.div_rem(&field.defining_poly().to_rat()).1;
        let mut coords = rem.coeffs().to_vec();
        coords.resize(field.degree(), Rat::zero());
        NFElem { field, coords }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Coordinates as a polynomial in alpha.
    pub fn coord_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> Option<Rat> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &Self) -> Result<(), NfError> {
        if self.field != other.field {
            return Err(NfError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, NfError> {
        self.check_same_field(other)?;
        Ok(NFElem::new(
            self.field.clone(),
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, NfError> {
        self.check_same_field(other)?;
        Ok(NFElem::new(
            self.field.clone(),
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        NFElem::new(
            self.field.clone(),
            self.coords.iter().map(|c| -c).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self, NfError> {
        self.check_same_field(other)?;
        let prod = self.coord_poly().mul(&other.coord_poly());
        Ok(NFElem::from_poly(self.field.clone(), &prod))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        NFElem::new(
            self.field.clone(),
            self.coords.iter().map(|a| a * c).collect(),
        )
    }

    /// Exact inverse via the extended Euclidean algorithm against the
    /// defining polynomial.
    pub fn inverse(&self) -> Result<Self, NfError> {
        if self.is_zero() {
            return Err(NfError::DivisionByZero);
        }
        let m = self.field.defining_poly().to_rat();
        let a = self.coord_poly();
        // extended Euclid: s*a + t*m = gcd = constant
        let (mut r0, mut r1) = (a, m.clone());
        let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let ns = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
        }
        debug_assert_eq!(r0.degree(), Some(0), "defining polynomial irreducible");
        let inv_gcd = Rat::one() / r0.coeff(0);
        Ok(NFElem::from_poly(self.field.clone(), &s0.scale(&inv_gcd)))
    }

    pub fn div(&self, other: &Self) -> Result<Self, NfError> {
        self.check_same_field(other)?;
        let inv = other.inverse()?;
        self.mul(&inv)
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = NFElem::one(self.field.clone());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            n >>= 1;
        }
        acc
    }

    /// Exact field trace over Q: sum of coords weighted by the power
    /// traces of alpha.
    pub fn trace(&self) -> Rat {
        let k = self.field.degree();
        let tr = power_traces(self.field.defining_poly(), k - 1).expect("monic");
        self.coords
            .iter()
            .zip(&tr)
            .map(|(c, t)| c * Rat::from_integer(t.clone()))
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// Exact field norm over Q: Res(defining_poly, coord_poly) for a monic
    /// defining polynomial.
    pub fn norm(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        self.field
            .defining_poly()
            .to_rat()
            .resultant(&self.coord_poly())
            .expect("nonzero inputs")
    }

    /// Monic minimal polynomial over Q; its degree divides the field degree.
    pub fn minpoly(&self) -> RatPoly {
        let k = self.field.degree();
        // power vectors 1, a, a^2, ... until dependence
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(k + 1);
        let mut cur = NFElem::one(self.field.clone());
        for _ in 0..=k {
            powers.push(cur.coords.clone());
            if let Some(dep) = first_dependence(&powers) {
                return RatPoly::new(dep);
            }
            cur = cur.mul(self).expect("same field");
        }
        unreachable!("dependence must occur by degree k")
    }

    /// Certified enclosure of the image of this element under the i-th
    /// embedding, using root boxes at the given precision.
    pub fn embedding_box(&self, index: usize, bits: u32) -> Result<ComplexBox, NfError> {
        let boxes = self.field.root_boxes_at(bits)?;
        Ok(boxes[index].eval_poly(&self.coord_poly()))
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            let coeff = if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            };
            match i {
                0 => write!(f, "{coeff}")?,
                1 if coeff == "1" => write!(f, "a")?,
                1 => write!(f, "{coeff}*a")?,
                _ if coeff == "1" => write!(f, "a^{i}")?,
                _ => write!(f, "{coeff}*a^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NFElem({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib_field() -> Arc<NumberField> {
        NumberField::new(IntPoly::from_i64(&[-1, -1, 1])).unwrap()
    }

    fn plastic_field() -> Arc<NumberField> {
        NumberField::new(IntPoly::from_i64(&[-1, -1, 0, 1])).unwrap()
    }

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn rejects_reducible_and_non_monic() {
        assert_eq!(
            NumberField::new(IntPoly::from_i64(&[-1, 0, 1])).unwrap_err(),
            NfError::Reducible
        );
        assert_eq!(
            NumberField::new(IntPoly::from_i64(&[-1, 0, 2])).unwrap_err(),
            NfError::NotMonic
        );
    }

    #[test]
    fn golden_defining_relation() {
        let f = fib_field();
        let phi = NFElem::alpha(f.clone());
        let sq = phi.mul(&phi).unwrap();
        // phi^2 = phi + 1
        assert_eq!(sq.coords(), &[r(1, 1), r(1, 1)]);
    }

    #[test]
    fn golden_inverse() {
        let f = fib_field();
        let phi = NFElem::alpha(f.clone());
        let inv = NFElem::one(f).div(&phi).unwrap();
        // 1/phi = phi - 1
        assert_eq!(inv.coords(), &[r(-1, 1), r(1, 1)]);
    }

    #[test]
    fn plastic_defining_relation() {
        let f = plastic_field();
        let th = NFElem::alpha(f.clone());
        let prod = th.mul(&th.mul(&th).unwrap()).unwrap();
        // theta^3 = theta + 1
        assert_eq!(prod.coords(), &[r(1, 1), r(1, 1), r(0, 1)]);
    }

    #[test]
    fn trace_norm_examples() {
        let f = fib_field();
        let one = NFElem::one(f.clone());
        assert_eq!(one.trace(), r(2, 1));
        assert_eq!(one.norm(), r(1, 1));
        let phi = NFElem::alpha(f);
        assert_eq!(phi.trace(), r(1, 1));
        assert_eq!(phi.norm(), r(-1, 1));
        let p = plastic_field();
        let th = NFElem::alpha(p);
        assert_eq!(th.trace(), r(0, 1));
        assert_eq!(th.norm(), r(1, 1));
    }

    #[test]
    fn minpoly_examples() {
        let f = fib_field();
        let seven = NFElem::from_rat(f.clone(), r(7, 1));
        assert_eq!(seven.minpoly(), RatPoly::new(vec![r(-7, 1), r(1, 1)]));
        // 2*phi - 1 has minimal polynomial x^2 - 5
        let phi = NFElem::alpha(f.clone());
        let e = phi.scale(&r(2, 1)).sub(&NFElem::one(f.clone())).unwrap();
        assert_eq!(
            e.minpoly(),
            RatPoly::new(vec![r(-5, 1), r(0, 1), r(1, 1)])
        );
        // 1 + phi: x^2 - 3x + 1
        let e = phi.add(&NFElem::one(f)).unwrap();
        assert_eq!(
            e.minpoly(),
            RatPoly::new(vec![r(1, 1), r(-3, 1), r(1, 1)])
        );
    }

    #[test]
    fn minpoly_annihilates() {
        let p = plastic_field();
        let th = NFElem::alpha(p.clone());
        let e = th.mul(&th).unwrap().sub(&th).unwrap();
        let mp = e.minpoly();
        // evaluate mp at e inside the field
        let mut acc = NFElem::zero(p);
        for c in mp.coeffs().iter().rev() {
            acc = acc.mul(&e).unwrap();
            acc = acc
                .add(&NFElem::from_rat(e.field().clone(), c.clone()))
                .unwrap();
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn dominant_root_first_for_pisot_poly() {
        let p = plastic_field();
        let boxes = p.root_boxes();
        assert!(boxes[0].is_real());
        assert!(boxes[0].re_lo > Rat::one());
    }

    #[test]
    fn field_mismatch_detected() {
        let a = NFElem::alpha(fib_field());
        let b = NFElem::alpha(plastic_field());
        assert_eq!(a.add(&b).unwrap_err(), NfError::FieldMismatch);
    }
}
