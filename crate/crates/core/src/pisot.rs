//! Pisot certification: certified proof that a polynomial is the minimal
//! polynomial of a Pisot number, plus the explicit families used in the
//! finiteness results.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::arith::factor::is_irreducible;
use crate::arith::roots::isolate_roots;
use crate::arith::{ArithError, ComplexBox, IntPoly, Rat};

/// Machine-readable reasons a polynomial fails Pisot certification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PisotRejection {
    #[error("non-monic")]
    NonMonic,
    #[error("reducible")]
    Reducible,
    #[error("degree<2")]
    DegreeTooSmall,
    #[error("conjugate-outside-unit-disk")]
    ConjugateOutsideUnitDisk,
    #[error("dominant-not-real-positive")]
    DominantNotRealPositive,
    #[error("undecidable at max precision {0} bits")]
    UndecidableAtMaxPrecision(u32),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Certified witness of the Pisot property: isolating boxes with exact
/// rational comparisons |alpha_1| > 1 and |alpha_i| < 1 for i >= 2.
#[derive(Debug, Clone)]
pub struct PisotCertificate {
    poly: IntPoly,
    dominant_box: ComplexBox,
    conjugate_boxes: Vec<ComplexBox>,
    is_unit: bool,
    precision_bits: u32,
}

impl PisotCertificate {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    /// Box around the dominant real root, with re_lo > 1 exactly.
    pub fn dominant_box(&self) -> &ComplexBox {
        &self.dominant_box
    }

    /// Boxes around the k-1 conjugates, each with modulus upper bound < 1.
    pub fn conjugate_boxes(&self) -> &[ComplexBox] {
        &self.conjugate_boxes
    }

    /// Whether alpha is a unit in the ring of integers, i.e. the constant
    /// coefficient is +-1.
    pub fn is_unit(&self) -> bool {
        self.is_unit
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    /// Rational midpoint approximation of the dominant root.
    pub fn dominant_midpoint(&self) -> Rat {
        self.dominant_box.re().mid()
    }
}

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 4096;

/// Certify that p is the minimal polynomial of a Pisot number. Rejection
/// is a value carrying the first failing condition; the modulus
/// comparisons are exact rational tests on squared moduli, refined by
/// doubling precision up to a hard cap.
pub fn certify_pisot(p: &IntPoly) -> Result<PisotCertificate, PisotRejection> {
    if p.is_zero() || p.deg() < 2 {
        return Err(PisotRejection::DegreeTooSmall);
    }
    if !p.is_monic() {
        return Err(PisotRejection::NonMonic);
    }
    if !is_irreducible(p)? {
        return Err(PisotRejection::Reducible);
    }

    let one = Rat::one();
    let mut bits = START_BITS;
    loop {
        let boxes = isolate_roots(p, bits)?;
        let mut outside: Vec<&ComplexBox> = Vec::new();
        let mut inside = 0usize;
        let mut undecided = false;
        for b in &boxes {
            let m2 = b.modulus_sq();
            if m2.lo > one {
                outside.push(b);
            } else if m2.hi < one {
                inside += 1;
            } else {
                undecided = true;
            }
        }
        if outside.len() >= 2 {
            return Err(PisotRejection::ConjugateOutsideUnitDisk);
        }
        if outside.len() == 1 && inside == boxes.len() - 1 {
            let dom = outside[0];
            if !dom.is_real() || !(dom.re_lo > one) {
                // a lone root outside the disk is real (conjugates share
                // moduli), so this is a negative dominant root
                return Err(PisotRejection::DominantNotRealPositive);
            }
            let dominant_box = dom.clone();
            let conjugate_boxes: Vec<ComplexBox> = boxes
                .iter()
                .filter(|b| *b != dom)
                .cloned()
                .collect();
            let is_unit = p.coeff(0).abs().is_one();
            return Ok(PisotCertificate {
                poly: p.clone(),
                dominant_box,
                conjugate_boxes,
                is_unit,
                precision_bits: bits,
            });
        }
        if outside.is_empty() && !undecided {
            // all roots strictly inside the unit disk: impossible for a
            // monic integer polynomial, but report the dominant failure
            return Err(PisotRejection::DominantNotRealPositive);
        }
        if bits >= MAX_BITS {
            return Err(PisotRejection::UndecidableAtMaxPrecision(bits));
        }
        bits *= 2;
    }
}

/// The explicit Pisot families of degree 2k+1 (towers) and k+2
/// (Fibonacci perturbation).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    TowerA,
    TowerB,
    FibPerturbed,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::TowerA => "tower-a",
            Family::TowerB => "tower-b",
            Family::FibPerturbed => "fib-perturbed",
        })
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tower-a" => Ok(Family::TowerA),
            "tower-b" => Ok(Family::TowerB),
            "fib-perturbed" => Ok(Family::FibPerturbed),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

/// Fully expanded family polynomial; k >= 3.
pub fn family_poly(family: Family, k: usize) -> Result<IntPoly, String> {
    if k < 3 {
        return Err(format!("family parameter k must be >= 3, got {k}"));
    }
    let poly = match family {
        Family::TowerA => {
            // x^(2k+1) - (x^(2k) - 1)/(x - 1) = x^(2k+1) - sum_{i<2k} x^i
            let mut c = vec![-1i64; 2 * k];
            c.push(0); // no x^(2k) term
            c.push(1);
            IntPoly::from_i64(&c)
        }
        Family::TowerB => {
            // x^(2k+1) - (x^(2k+2) - 1)/(x^2 - 1) = x^(2k+1) - sum x^(2i)
            let mut c = vec![0i64; 2 * k + 2];
            for i in 0..=k {
                c[2 * i] = -1;
            }
            c[2 * k + 1] = 1;
            IntPoly::from_i64(&c)
        }
        Family::FibPerturbed => {
            // x^k (x^2 - x - 1) + x^2 - 1
            let mut c = vec![0i64; k + 3];
            c[0] = -1;
            c[2] = 1;
            c[k] -= 1;
            c[k + 1] -= 1;
            c[k + 2] += 1;
            IntPoly::from_i64(&c)
        }
    };
    Ok(poly)
}
