//! Adaptive Dormand–Prince 5(4) integrator for the 4-dimensional radial
//! phase space.
//!
//! The embedded pair takes the fifth-order solution forward (local error
//! O(h⁶)) and uses the fourth-order companion for step control, with the
//! first-same-as-last property saving one derivative evaluation per
//! accepted step.  The driven trap equations are linear and non-stiff at
//! every parameter point this crate targets, so an explicit pair with
//! standard step-control safety factors is the right tool.
//!
//! Local error is measured against the vector ∞-norm of the state: all
//! callers feed states whose four components share one physical scale (the
//! monodromy and trajectory drivers nondimensionalise velocities first), so
//! a per-component scale would add nothing but zero-crossing artifacts.

use super::FloquetError;

/// Butcher nodes c₂..c₆ (c₇ = 1 is implicit in the FSAL arrangement).
const C: [f64; 5] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0];

const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
/// Fifth-order weights; also the last stage row (first-same-as-last).
const B5: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];
/// Difference between the fifth- and fourth-order weights, for the error
/// estimate (the seventh entry weights the FSAL stage).
const E: [f64; 7] = [
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
];

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;

/// Step-control parameters shared by all integration drivers.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AdaptiveOptions {
    /// Relative tolerance on the state ∞-norm.
    pub rtol: f64,
    /// Absolute tolerance floor, in state units.
    pub atol: f64,
    /// Hard cap on accepted + rejected steps.
    pub max_steps: u64,
    /// Initial trial step; `None` picks span·1e-4.
    pub initial_step: Option<f64>,
}

fn norm_inf(y: &[f64; 4]) -> f64 {
    y.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

/// Integrates `rhs` from `(t0, y0)`, recording the state at each of
/// `sample_times` (strictly increasing, all ≥ t0).  Steps are clipped to
/// land exactly on sample times, so no interpolation error enters the
/// recorded states.
pub(crate) fn integrate_sampled(
    mut rhs: impl FnMut(f64, &[f64; 4]) -> [f64; 4],
    t0: f64,
    y0: [f64; 4],
    sample_times: &[f64],
    opts: &AdaptiveOptions,
) -> Result<Vec<[f64; 4]>, FloquetError> {
    debug_assert!(sample_times.windows(2).all(|w| w[0] < w[1]));
    let mut out = Vec::with_capacity(sample_times.len());
    let mut next_sample = 0usize;
    // A sample exactly at the start needs no integration.
    while next_sample < sample_times.len() && sample_times[next_sample] <= t0 {
        out.push(y0);
        next_sample += 1;
    }
    if next_sample >= sample_times.len() {
        return Ok(out);
    }
    let t_end = *sample_times.last().unwrap();
    let span = t_end - t0;

    let mut t = t0;
    let mut y = y0;
    let mut k1 = rhs(t, &y);
    // `h` is the controller's preferred step; clipping to a sample time
    // must not influence the next preferred step.
    let mut h = opts.initial_step.unwrap_or(span * 1e-4).min(span);
    let mut steps: u64 = 0;

    while next_sample < sample_times.len() {
        if steps >= opts.max_steps {
            return Err(FloquetError::StepBudgetExceeded {
                max_steps: opts.max_steps,
            });
        }
        steps += 1;

        let target = sample_times[next_sample];
        let h_try = h.min(target - t);
        if !(h_try > 0.0) || t + h_try == t {
            return Err(FloquetError::StepSizeUnderflow { time: t, step: h_try });
        }

        // Stages 2..6 plus the fifth-order combination.
        let stage = |y: &[f64; 4], ks: &[&[f64; 4]], coeffs: &[f64], h: f64| -> [f64; 4] {
            let mut out = *y;
            for (k, &c) in ks.iter().zip(coeffs) {
                for i in 0..4 {
                    out[i] += h * c * k[i];
                }
            }
            out
        };
        let k2 = rhs(t + C[0] * h_try, &stage(&y, &[&k1], &A2, h_try));
        let k3 = rhs(t + C[1] * h_try, &stage(&y, &[&k1, &k2], &A3, h_try));
        let k4 = rhs(t + C[2] * h_try, &stage(&y, &[&k1, &k2, &k3], &A4, h_try));
        let k5 = rhs(t + C[3] * h_try, &stage(&y, &[&k1, &k2, &k3, &k4], &A5, h_try));
        let k6 = rhs(
            t + C[4] * h_try,
            &stage(&y, &[&k1, &k2, &k3, &k4, &k5], &A6, h_try),
        );
        let y1 = stage(&y, &[&k1, &k2, &k3, &k4, &k5, &k6], &B5, h_try);
        let t1 = t + h_try;
        let k7 = rhs(t1, &y1);

        let ks = [&k1, &k2, &k3, &k4, &k5, &k6, &k7];
        let mut err_max = 0.0_f64;
        for i in 0..4 {
            let e: f64 = ks
                .iter()
                .zip(&E)
                .map(|(k, &w)| w * k[i])
                .sum::<f64>()
                * h_try;
            err_max = err_max.max(e.abs());
        }
        let sc = opts.atol + opts.rtol * norm_inf(&y).max(norm_inf(&y1));
        let err_ratio = if err_max == 0.0 {
            0.0
        } else if sc == 0.0 {
            f64::INFINITY
        } else {
            err_max / sc
        };

        if err_ratio <= 1.0 {
            t = t1;
            y = y1;
            k1 = k7;
            if t >= target {
                out.push(y);
                next_sample += 1;
            }
            let factor = if err_ratio == 0.0 {
                MAX_FACTOR
            } else {
                (SAFETY * err_ratio.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR)
            };
            // Grow from the attempted step only if it was not clipped;
            // otherwise keep the controller's preferred step.
            h = if h_try < h { h } else { h_try * factor };
        } else {
            let factor = (SAFETY * err_ratio.powf(-0.2)).clamp(MIN_FACTOR, 1.0);
            h = h_try * factor;
        }
    }
    Ok(out)
}
