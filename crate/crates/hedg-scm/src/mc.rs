//! Monte-Carlo tooling: samplers for two reference four-node cyclic systems
//! (one multiplicative, one averaged and linear) and a binned estimator of
//! conditional mutual information with a within-stratum permutation null.

use std::collections::BTreeMap;

use hedg_core::NodeId;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;

use crate::error::ScmError;

/// Minimum draw count accepted by the reference samplers.
pub const MIN_MC_SAMPLES: usize = 100_000;

/// Default bin count for the conditional-mutual-information estimator.
pub const DEFAULT_CMI_BINS: usize = 8;

/// Default permutation count for the estimator's null distribution.
pub const DEFAULT_CMI_PERMUTATIONS: usize = 200;

/// Column-oriented sample table keyed by node name.
#[derive(Debug, Clone)]
pub struct SampleMatrix {
    names: Vec<NodeId>,
    columns: Vec<Vec<f64>>,
}

impl SampleMatrix {
    pub fn new(names: Vec<NodeId>, columns: Vec<Vec<f64>>) -> Result<Self, ScmError> {
        let len = columns.first().map(Vec::len).unwrap_or(0);
        if names.len() != columns.len() || columns.iter().any(|c| c.len() != len) {
            return Err(ScmError::MatrixShape {
                rows: len,
                cols: columns.len(),
                n: names.len(),
            });
        }
        Ok(SampleMatrix { names, columns })
    }

    pub fn names(&self) -> &[NodeId] {
        &self.names
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.columns.first().map(Vec::len).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn column(&self, v: &NodeId) -> Option<&[f64]> {
        let i = self.names.iter().position(|name| name == v)?;
        Some(&self.columns[i])
    }
}

fn mc_names() -> Vec<NodeId> {
    ["w", "x", "y", "z"]
        .iter()
        .map(|l| NodeId::new(*l).expect("static labels are valid"))
        .collect()
}

/// Simulates the cyclic system `w = (w + z + e_w)/2`, `x = w·e_x`,
/// `y = x + e_y`, `z = y·e_z` with independent standard-normal noise, using
/// its closed-form solution `w = (e_w + e_y·e_z)/(1 - e_x·e_z)`. Draws whose
/// denominator falls within `1e-12` of zero are redrawn; if more than one in
/// ten thousand attempts hit the guard the sampler reports a degenerate
/// system instead of returning.
pub fn nonlinear_example(seed: u64, n: usize) -> Result<SampleMatrix, ScmError> {
    if n < MIN_MC_SAMPLES {
        return Err(ScmError::TooFewSamples {
            got: n,
            min: MIN_MC_SAMPLES,
        });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut cols: Vec<Vec<f64>> = vec![Vec::with_capacity(n); 4];
    let mut hits = 0usize;
    let mut draws = 0usize;
    while cols[0].len() < n {
        draws += 1;
        let ew: f64 = rng.sample(StandardNormal);
        let ex: f64 = rng.sample(StandardNormal);
        let ey: f64 = rng.sample(StandardNormal);
        let ez: f64 = rng.sample(StandardNormal);
        let denom = 1.0 - ex * ez;
        if denom.abs() <= 1e-12 {
            hits += 1;
            if hits * 10_000 > draws {
                return Err(ScmError::DegenerateSample { hits, draws });
            }
            continue;
        }
        let w = (ew + ey * ez) / denom;
        let x = w * ex;
        let y = x + ey;
        let z = y * ez;
        cols[0].push(w);
        cols[1].push(x);
        cols[2].push(y);
        cols[3].push(z);
    }
    SampleMatrix::new(mc_names(), cols)
}

/// Simulates the averaged linear variant `w = z + e_w`, `x = (w + e_x)/2`,
/// `y = (x + e_y)/2`, `z = (y + e_z)/2` with independent standard-normal
/// noise, via the closed form `w = (e_x + 2e_y + 4e_z + 8e_w)/7`.
pub fn linearized_example(seed: u64, n: usize) -> Result<SampleMatrix, ScmError> {
    if n < MIN_MC_SAMPLES {
        return Err(ScmError::TooFewSamples {
            got: n,
            min: MIN_MC_SAMPLES,
        });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut cols: Vec<Vec<f64>> = vec![Vec::with_capacity(n); 4];
    for _ in 0..n {
        let ew: f64 = rng.sample(StandardNormal);
        let ex: f64 = rng.sample(StandardNormal);
        let ey: f64 = rng.sample(StandardNormal);
        let ez: f64 = rng.sample(StandardNormal);
        let w = (ex + 2.0 * ey + 4.0 * ez + 8.0 * ew) / 7.0;
        let x = (w + ex) / 2.0;
        let y = (x + ey) / 2.0;
        let z = (y + ez) / 2.0;
        cols[0].push(w);
        cols[1].push(x);
        cols[2].push(y);
        cols[3].push(z);
    }
    SampleMatrix::new(mc_names(), cols)
}

/// A conditional-mutual-information estimate together with its permutation
/// null distribution (sorted ascending).
#[derive(Debug, Clone)]
pub struct CmiEstimate {
    statistic: f64,
    null: Vec<f64>,
}

impl CmiEstimate {
    /// The plug-in estimate, in nats.
    pub fn statistic(&self) -> f64 {
        self.statistic
    }

    /// The null statistics, sorted ascending.
    pub fn null(&self) -> &[f64] {
        &self.null
    }

    /// Empirical `q`-quantile of the null; infinite when no permutations were
    /// drawn.
    pub fn null_quantile(&self, q: f64) -> f64 {
        if self.null.is_empty() {
            return f64::INFINITY;
        }
        let len = self.null.len();
        let pos = ((len as f64) * q).ceil() as usize;
        self.null[pos.clamp(1, len) - 1]
    }

    /// True iff the statistic exceeds the `q`-quantile of the null.
    pub fn exceeds(&self, q: f64) -> bool {
        self.statistic > self.null_quantile(q)
    }
}

/// Estimates the conditional mutual information between `x` and `y` given the
/// variables in `z` by equal-count binning each variable into `bins` bins and
/// computing the plug-in statistic in nats. The null is built by repeatedly
/// permuting the binned `x` labels within each stratum of joint `z` bins,
/// which preserves the x–z and y–z margins while breaking any conditional
/// association.
pub fn cmi_estimate(
    samples: &SampleMatrix,
    x: &NodeId,
    y: &NodeId,
    z: &[NodeId],
    bins: usize,
    permutations: usize,
    seed: u64,
) -> Result<CmiEstimate, ScmError> {
    let col = |v: &NodeId| {
        samples
            .column(v)
            .ok_or_else(|| ScmError::UnknownVariable(v.as_str().to_owned()))
    };
    let n = samples.len();
    if n == 0 {
        return Err(ScmError::TooFewSamples { got: 0, min: 1 });
    }
    let bins = bins.max(1);
    let xb = quantile_bins(col(x)?, bins);
    let yb = quantile_bins(col(y)?, bins);
    let zbs: Vec<Vec<u8>> = z
        .iter()
        .map(|v| Ok(quantile_bins(col(v)?, bins)))
        .collect::<Result<_, ScmError>>()?;

    // Dense id per joint z-bin stratum.
    let mut stratum_ids: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut stratum_of = Vec::with_capacity(n);
    for row in 0..n {
        let key: Vec<u8> = zbs.iter().map(|zb| zb[row]).collect();
        let next = stratum_ids.len();
        let id = *stratum_ids.entry(key).or_insert(next);
        stratum_of.push(id);
    }
    let strata = stratum_ids.len();

    let statistic = plug_in_cmi(&xb, &yb, &stratum_of, strata, bins);

    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); strata];
    for (row, &s) in stratum_of.iter().enumerate() {
        groups[s].push(row);
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut xperm = xb.clone();
    let mut null = Vec::with_capacity(permutations);
    for _ in 0..permutations {
        for rows in &groups {
            for i in (1..rows.len()).rev() {
                let j = rng.gen_range(0..=i);
                xperm.swap(rows[i], rows[j]);
            }
        }
        null.push(plug_in_cmi(&xperm, &yb, &stratum_of, strata, bins));
    }
    null.sort_by(f64::total_cmp);

    Ok(CmiEstimate { statistic, null })
}

/// Equal-count binning by rank; ties are split by sample order.
fn quantile_bins(vals: &[f64], bins: usize) -> Vec<u8> {
    let n = vals.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    let mut out = vec![0u8; n];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = ((rank * bins) / n) as u8;
    }
    out
}

fn plug_in_cmi(xb: &[u8], yb: &[u8], stratum_of: &[usize], strata: usize, bins: usize) -> f64 {
    let n = xb.len();
    let mut n_xyz = vec![0usize; strata * bins * bins];
    let mut n_xz = vec![0usize; strata * bins];
    let mut n_yz = vec![0usize; strata * bins];
    let mut n_z = vec![0usize; strata];
    for row in 0..n {
        let (xv, yv, s) = (xb[row] as usize, yb[row] as usize, stratum_of[row]);
        n_xyz[(s * bins + xv) * bins + yv] += 1;
        n_xz[s * bins + xv] += 1;
        n_yz[s * bins + yv] += 1;
        n_z[s] += 1;
    }
    let mut cmi = 0.0;
    for s in 0..strata {
        for xv in 0..bins {
            for yv in 0..bins {
                let c = n_xyz[(s * bins + xv) * bins + yv];
                if c == 0 {
                    continue;
                }
                let num = (c as f64) * (n_z[s] as f64);
                let den = (n_xz[s * bins + xv] as f64) * (n_yz[s * bins + yv] as f64);
                cmi += (c as f64) / (n as f64) * (num / den).ln();
            }
        }
    }
    cmi
}
