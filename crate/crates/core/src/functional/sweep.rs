use rayon::prelude::*;

use super::{conjecture_formula, hankel_report, MomentFunctional};
use crate::algebra::{Field, FieldValue};
use crate::rng;

/// Coefficient bound for sampled nodes and weights.
pub const SWEEP_BOUND: i64 = 9;

/// A trial where the closed form and the determinant differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: u64,
    pub k: usize,
    pub nodes: Vec<FieldValue>,
    pub weights: Vec<FieldValue>,
    pub determinant: FieldValue,
    pub formula: FieldValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureSweep {
    pub n: usize,
    pub trials: u64,
    /// Number of `(trial, k)` comparisons made.
    pub checks: u64,
    pub failures: Vec<Counterexample>,
}

/// Compare `det H_k` of `Σ ω_i f(x_i)` against [`conjecture_formula`] for
/// `k = 0..=n` over `trials` random draws of `n` distinct nodes and nonzero
/// weights. Trial `i` uses `rng::stream(seed, i)`.
pub fn conjecture_sweep(field: Field, n: usize, trials: u64, seed: u64) -> ConjectureSweep {
    let per_trial: Vec<(u64, Vec<Counterexample>)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut r = rng::stream(seed, trial);
            let nodes = rng::distinct(&mut r, field, n, |r| rng::fraction(r, field, SWEEP_BOUND));
            let weights: Vec<FieldValue> = (0..n).map(|_| rng::nonzero_fraction(&mut r, field, SWEEP_BOUND)).collect();
            let l = MomentFunctional::point_masses(nodes.clone(), weights.clone()).expect("distinct nodes, nonzero weights");
            let report = hankel_report(&l, n + 1);
            let mut bad = Vec::new();
            for (k, det) in report.hankel_dets.iter().enumerate() {
                let formula = conjecture_formula(&nodes, &weights, k).expect("valid sample");
                if &formula != det {
                    bad.push(Counterexample {
                        trial,
                        k,
                        nodes: nodes.clone(),
                        weights: weights.clone(),
                        determinant: det.clone(),
                        formula,
                    });
                }
            }
            (report.hankel_dets.len() as u64, bad)
        })
        .collect();
    ConjectureSweep {
        n,
        trials,
        checks: per_trial.iter().map(|(c, _)| c).sum(),
        failures: per_trial.into_iter().flat_map(|(_, b)| b).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_holds() {
        let s = conjecture_sweep(Field::Q, 3, 10, 1);
        assert_eq!(s.checks, 40);
        assert!(s.failures.is_empty());
        let s = conjecture_sweep(Field::prime(7).unwrap(), 4, 10, 1);
        assert!(s.failures.is_empty());
    }
}
