//! Empirical scan of gcd(F_y - 1, F_z - 1) against the lemma exponent
//! k/(k+1): the constant in the bound is ineffective, so the artifact
//! measures the observed ratios instead.

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::dyadic::ln_rat;
use crate::arith::{Int, Rat};
use crate::recurrence::{RecError, RecurrenceSpec};

const LN_BITS: u32 = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdRecord {
    pub y: u64,
    pub z: u64,
    pub g: Int,
    /// ln g / (z ln alpha-hat), alpha-hat the dominant-root midpoint.
    pub ratio: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdScanReport {
    pub spec: RecurrenceSpec,
    pub y_lo: u64,
    pub z_hi: u64,
    pub kappa: Rat,
    pub records: Vec<GcdRecord>,
    pub max_ratio: Rat,
    /// max over records of ln g - (k/(k+1)) z ln alpha-hat.
    pub fitted_slack: Rat,
}

/// Scan all y_lo <= y < z <= z_hi. Ratios use 128-bit dyadic logarithms.
pub fn gcd_scan(spec: &RecurrenceSpec, y_lo: u64, z_hi: u64) -> Result<GcdScanReport, RecError> {
    assert!(z_hi > y_lo, "need y_lo < z_hi");
    let cert = spec.validate_pisot_type()?;
    let k = cert.degree();
    let kappa = Rat::new(Int::from(k), Int::from(k + 1));
    let alpha_hat = cert.dominant_midpoint();
    let ln_alpha = ln_rat(&alpha_hat, LN_BITS);

    let values = spec.eval_range(0, z_hi);
    assert!(
        values[y_lo as usize] >= Int::from(2),
        "y_lo must start where F_n >= 2"
    );
    let shifted: Vec<Int> = values.iter().map(|v| v - 1).collect();

    let pairs: Vec<(u64, u64, Int)> = (y_lo..z_hi)
        .into_par_iter()
        .flat_map_iter(|y| {
            let shifted = &shifted;
            ((y + 1)..=z_hi).map(move |z| {
                let g = shifted[y as usize].gcd(&shifted[z as usize]);
                (y, z, g)
            })
        })
        .collect();

    // the same small gcd values recur across the grid; take each logarithm once
    let mut distinct: Vec<&Int> = pairs
        .iter()
        .map(|(_, _, g)| g)
        .filter(|g| !g.is_one() && !g.is_zero())
        .collect();
    distinct.sort();
    distinct.dedup();
    let ln_table: std::collections::BTreeMap<Int, Rat> = distinct
        .par_iter()
        .map(|g| ((*g).clone(), ln_rat(&Rat::from_integer((*g).clone()), LN_BITS)))
        .collect();

    let mut records: Vec<GcdRecord> = pairs
        .into_iter()
        .map(|(y, z, g)| {
            let ratio = match ln_table.get(&g) {
                Some(ln_g) => ln_g / (Rat::from_integer(Int::from(z)) * &ln_alpha),
                None => Rat::zero(),
            };
            GcdRecord { y, z, g, ratio }
        })
        .collect();
    records.sort_by_key(|r| (r.y, r.z));

    let max_ratio = records
        .iter()
        .map(|r| r.ratio.clone())
        .max()
        .unwrap_or_else(Rat::zero);
    // ln g = ratio * z * ln alpha-hat by construction, so the slack needs
    // no further logarithms
    let fitted_slack = records
        .iter()
        .map(|r| {
            let zl = Rat::from_integer(Int::from(r.z)) * &ln_alpha;
            &r.ratio * &zl - &kappa * zl
        })
        .max()
        .expect("nonempty scan");

    Ok(GcdScanReport {
        spec: spec.clone(),
        y_lo,
        z_hi,
        kappa,
        records,
        max_ratio,
        fitted_slack,
    })
}
