//! Membership index: every sequence value in [0, bound], with certified
//! termination of the scan via Binet dominance.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::roots::RatInterval;
use crate::arith::{Int, Rat};
use crate::recurrence::{binet_coefficients, RecError, RecurrenceSpec};

/// Sorted map value -> indices n with F_n = value, complete for
/// 0 <= F_n <= value_bound. `max_index` is the certified cutoff: for all
/// n > max_index, |F_n| > value_bound.
#[derive(Debug, Clone)]
pub struct MembershipIndex {
    spec: RecurrenceSpec,
    value_bound: Int,
    entries: BTreeMap<Int, Vec<u64>>,
    max_index: u64,
}

impl MembershipIndex {
    pub fn spec(&self) -> &RecurrenceSpec {
        &self.spec
    }

    pub fn value_bound(&self) -> &Int {
        &self.value_bound
    }

    pub fn entries(&self) -> &BTreeMap<Int, Vec<u64>> {
        &self.entries
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    /// Indices n with F_n = value, if the value is in range.
    pub fn lookup(&self, value: &Int) -> Option<&[u64]> {
        self.entries.get(value).map(|v| v.as_slice())
    }

    pub fn contains(&self, value: &Int) -> bool {
        self.entries.contains_key(value)
    }
}

/// Index all sequence values in [0, value_bound]. The scan stops at the
/// first n where interval arithmetic on the Binet expansion certifies
/// |F_m| > value_bound for every m >= n: the dominant term's magnitude
/// lower bound grows monotonically (alpha_1 > 1) while the conjugate
/// tail bound shrinks (all |alpha_i| < 1).
pub fn build_index(spec: &RecurrenceSpec, value_bound: &Int) -> Result<MembershipIndex, RecError> {
    assert!(value_bound >= &Int::one(), "value_bound must be >= 1");
    spec.validate_pisot_type()?;
    let bd = binet_coefficients(spec)?;
    let field = bd.f1().field().clone();
    let k = field.degree();

    // certified embeddings of f1 at working precision; refine until the
    // dominant embedding excludes zero
    let mut bits = 128u32;
    let (dom_f1, dom_alpha, conj) = loop {
        let boxes = field.root_boxes_at(bits)?;
        let dom_f1 = boxes[0].eval_poly(&bd.f1().coord_poly());
        let dom_f1_abs = abs_interval(&dom_f1.re());
        if dom_f1_abs.lo > Rat::zero() || bits >= 4096 {
            let conj: Vec<(Rat, Rat)> = boxes[1..]
                .iter()
                .map(|b| {
                    let f1j = b.eval_poly(&bd.f1().coord_poly());
                    (f1j.modulus_upper(bits), b.modulus_upper(bits))
                })
                .collect();
            break (dom_f1_abs, boxes[0].re(), conj);
        }
        bits *= 2;
    };
    debug_assert!(dom_alpha.lo > Rat::one());

    let bound_rat = Rat::from_integer(value_bound.clone());
    let mut entries: BTreeMap<Int, Vec<u64>> = BTreeMap::new();

    // iterate F_n alongside interval bounds for |f1^(1)| alpha_1^n and
    // the tail sum_{j>=2} |f1^(j)| |alpha_j|^n
    let mut window: Vec<Int> = spec.initial_values().to_vec();
    let mut dom = dom_f1.clone();
    let mut tails: Vec<(Rat, Rat)> = conj;
    let mut n: u64 = 0;
    loop {
        let fn_val = if (n as usize) < k {
            window[n as usize].clone()
        } else {
            let mut s = Int::zero();
            for i in 0..k {
                s -= spec.char_poly().coeff(i) * &window[i];
            }
            window.rotate_left(1);
            window[k - 1] = s.clone();
            s
        };
        if fn_val >= Int::zero() && fn_val <= *value_bound {
            entries.entry(fn_val).or_default().push(n);
        }

        let tail_hi: Rat = tails
            .iter()
            .fold(Rat::zero(), |acc, (f, _)| acc + f);
        if n as usize >= k && &dom.lo - &tail_hi > bound_rat {
            break;
        }

        // advance the bounds to n+1
        dom = dom.mul(&dom_alpha);
        for (f, a) in tails.iter_mut() {
            *f = &*f * &*a;
        }
        n += 1;
    }

    Ok(MembershipIndex {
        spec: spec.clone(),
        value_bound: value_bound.clone(),
        entries,
        max_index: n,
    })
}

fn abs_interval(iv: &RatInterval) -> RatInterval {
    if iv.lo >= Rat::zero() {
        iv.clone()
    } else if iv.hi <= Rat::zero() {
        iv.neg()
    } else {
        RatInterval::new(Rat::zero(), iv.lo.clone().max(iv.hi.clone()))
    }
}
