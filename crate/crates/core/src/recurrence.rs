//! Pisot-type linear recurrences: exact evaluation, Binet coefficients
//! through the trace-form system, and reconstruction from trace data.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{power_traces, Int, IntPoly, Rat};
use crate::nf::{NFElem, NfError, NumberField};
use crate::pisot::{certify_pisot, PisotCertificate, PisotRejection};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecError {
    #[error("characteristic polynomial rejected: {0}")]
    Pisot(#[from] PisotRejection),
    #[error("expected {expected} initial values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("all-zero initial values give the zero sequence")]
    ZeroSequence,
    #[error("trace value at index {index} is not an integer: {value}")]
    NonIntegralTrace { index: usize, value: Rat },
    #[error("f must be nonzero")]
    ZeroElement,
    #[error(transparent)]
    Nf(#[from] NfError),
    #[error("internal verification failed: {0}")]
    Internal(String),
}

/// Integer linear recurrence F_{n+k} = a_{k-1} F_{n+k-1} + ... + a_0 F_n
/// where the a_i are the negated lower coefficients of the characteristic
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    char_poly: IntPoly,
    initial_values: Vec<Int>,
}

impl RecurrenceSpec {
    pub fn new(char_poly: IntPoly, initial_values: Vec<Int>) -> Result<Self, RecError> {
        if char_poly.is_zero() || !char_poly.is_monic() {
            return Err(RecError::Pisot(PisotRejection::NonMonic));
        }
        let k = char_poly.deg();
        if initial_values.len() != k {
            return Err(RecError::LengthMismatch {
                expected: k,
                got: initial_values.len(),
            });
        }
        Ok(RecurrenceSpec {
            char_poly,
            initial_values,
        })
    }

    pub fn char_poly(&self) -> &IntPoly {
        &self.char_poly
    }

    pub fn initial_values(&self) -> &[Int] {
        &self.initial_values
    }

    pub fn order(&self) -> usize {
        self.char_poly.deg()
    }

    /// Certify the Pisot property of the characteristic polynomial and
    /// reject the degenerate zero sequence.
    pub fn validate_pisot_type(&self) -> Result<PisotCertificate, RecError> {
        let cert = certify_pisot(&self.char_poly)?;
        if self.initial_values.iter().all(|v| v.is_zero()) {
            return Err(RecError::ZeroSequence);
        }
        Ok(cert)
    }

    /// Exact values F_{n_lo}..F_{n_hi} by direct linear recursion.
    pub fn eval_range(&self, n_lo: u64, n_hi: u64) -> Vec<Int> {
        assert!(n_lo <= n_hi, "empty evaluation range");
        let k = self.order();
        let mut window: Vec<Int> = self.initial_values.clone();
        let mut out = Vec::new();
        for n in 0..=n_hi {
            let next = if (n as usize) < k {
                window[n as usize].clone()
            } else {
                let mut s = Int::zero();
                for i in 0..k {
                    s -= self.char_poly.coeff(i) * &window[i];
                }
                window.rotate_left(1);
                window[k - 1] = s.clone();
                s
            };
            if n >= n_lo {
                out.push(next);
            }
        }
        out
    }

    /// Single value F_n by companion-matrix binary powering; agrees with
    /// `eval_range` and is fast for isolated large n.
    pub fn eval_at(&self, n: u64) -> Int {
        let k = self.order();
        if (n as usize) < k {
            return self.initial_values[n as usize].clone();
        }
        // companion matrix acting on the state [F_m, ..., F_{m+k-1}]
        let mut m = vec![vec![Int::zero(); k]; k];
        for j in 1..k {
            m[j - 1][j] = Int::one();
        }
        for i in 0..k {
            m[k - 1][i] = -self.char_poly.coeff(i);
        }
        let mn = mat_pow(&m, n);
        mn[0].iter()
            .zip(&self.initial_values)
            .map(|(a, b)| a * b)
            .sum()
    }
}

fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    let mut c = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        for l in 0..n {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                c[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    c
}

fn mat_pow(m: &[Vec<Int>], mut e: u64) -> Vec<Vec<Int>> {
    let n = m.len();
    let mut acc: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut base = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    acc
}

/// Leading Binet coefficient f1 with its integral presentation f/d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinetData {
    f1: NFElem,
    d: Int,
    f: NFElem,
}

impl BinetData {
    pub fn f1(&self) -> &NFElem {
        &self.f1
    }

    /// Positive denominator with f1 = f/d in lowest terms.
    pub fn d(&self) -> &Int {
        &self.d
    }

    /// d * f1, with integer power-basis coordinates.
    pub fn f(&self) -> &NFElem {
        &self.f
    }
}

/// Solve the trace-form system sum_j Tr(alpha^{n+j}) v_j = F_n
/// (n = 0..k-1) for the power-basis coordinates of f1, then verify the
/// trace identity on a window.
pub fn binet_coefficients(spec: &RecurrenceSpec) -> Result<BinetData, RecError> {
    let k = spec.order();
    let field = NumberField::new(spec.char_poly().clone())?;
    let window = (2 * k).max(20) as u64;
    let values = spec.eval_range(0, window);

    let traces = power_traces(spec.char_poly(), 2 * k - 2).map_err(NfError::Arith)?;
    let a: Vec<Vec<Rat>> = (0..k)
        .map(|n| {
            (0..k)
                .map(|j| Rat::from_integer(traces[n + j].clone()))
                .collect()
        })
        .collect();
    let b: Vec<Rat> = values[..k]
        .iter()
        .map(|v| Rat::from_integer(v.clone()))
        .collect();
    let v = crate::arith::linalg::solve(&a, &b)
        .ok_or_else(|| RecError::Internal("trace-form matrix singular".into()))?;
    let f1 = NFElem::new(field.clone(), v);

    // verification window: Tr(f1 * alpha^n) = F_n exactly
    let alpha = NFElem::alpha(field.clone());
    let mut e = f1.clone();
    for (n, fv) in values.iter().enumerate() {
        if e.trace() != Rat::from_integer(fv.clone()) {
            return Err(RecError::Internal(format!(
                "trace identity fails at n = {n}"
            )));
        }
        e = e.mul(&alpha)?;
    }

    let d = f1
        .coords()
        .iter()
        .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
    let d = d.abs();
    let f = f1.scale(&Rat::from_integer(d.clone()));
    debug_assert!(f.coords().iter().all(|c| c.is_integer()));
    Ok(BinetData { f1, d, f })
}

/// Build the recurrence with dF_n = Tr(f * alpha^n): the first k traces
/// divided by d must be integers, which then propagates to all n.
pub fn build_from_trace(
    pisot_poly: &IntPoly,
    f_coords: &[Int],
    d: &Int,
) -> Result<RecurrenceSpec, RecError> {
    certify_pisot(pisot_poly)?;
    assert!(d.is_positive(), "d must be positive");
    let field = NumberField::new(pisot_poly.clone())?;
    let f = NFElem::new(
        field.clone(),
        f_coords
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect(),
    );
    if f.is_zero() {
        return Err(RecError::ZeroElement);
    }
    let k = field.degree();
    let alpha = NFElem::alpha(field.clone());
    let mut e = f.clone();
    let mut init = Vec::with_capacity(k);
    let drat = Rat::from_integer(d.clone());
    for n in 0..k {
        let t = e.trace() / &drat;
        if !t.is_integer() {
            return Err(RecError::NonIntegralTrace { index: n, value: t });
        }
        init.push(t.to_integer());
        e = e.mul(&alpha)?;
    }
    RecurrenceSpec::new(pisot_poly.clone(), init)
}

/// Convenience constructors for the specs exercised throughout the tests.
pub fn fibonacci() -> RecurrenceSpec {
    RecurrenceSpec::new(IntPoly::from_i64(&[-1, -1, 1]), vec![Int::zero(), Int::one()]).unwrap()
}

pub fn lucas() -> RecurrenceSpec {
    RecurrenceSpec::new(
        IntPoly::from_i64(&[-1, -1, 1]),
        vec![Int::from(2), Int::one()],
    )
    .unwrap()
}

pub fn tribonacci() -> RecurrenceSpec {
    RecurrenceSpec::new(
        IntPoly::from_i64(&[-1, -1, -1, 1]),
        vec![Int::zero(), Int::zero(), Int::one()],
    )
    .unwrap()
}

/// The plastic-constant recurrence with the exceptional initial values.
pub fn plastic_exceptional() -> RecurrenceSpec {
    RecurrenceSpec::new(
        IntPoly::from_i64(&[-1, -1, 0, 1]),
        vec![Int::from(6), Int::from(-9), Int::from(2)],
    )
    .unwrap()
}
