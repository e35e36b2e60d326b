//! Steady-state response of the axialized, laser-cooled ion to a weak
//! dipolar excitation.
//!
//! A rotating dipolar force probes the coupled radial modes near either the
//! modified-cyclotron or the magnetron frequency.  In the frame rotating at
//! ω_r = ω_c/2 + Δ, the driven steady state has two circular components:
//! the directly driven component with complex amplitude `a` at the drive
//! frequency, and the counter-sense component `b` that the axializing
//! coupling ε builds up at the mirror frequency ω_a − ω_d.  They satisfy the
//! linear system
//!
//! C_m·a + ε·b̄ = F,  C_c·b̄ + ε·a = 0,
//!
//! whose constants for a drive detuned by δ from the cyclotron-side
//! reference (lab frequency ω_d = ω_c′ + Δ + δ) are
//!
//! C_m = −2ω₁[(δ + Δ) − iγ_cyc],  C_c = −2ω₁[(δ − Δ) − iγ_mag],
//!
//! with γ_cyc, γ_mag the undriven damping rates.  Driving near the
//! magnetron side (ω_d = ω_m + Δ + δ) obeys the same algebra with the two
//! rates exchanged and the overall sign of both constants flipped — which
//! is why a magnetron-side resonance *leads* the drive by π/2 where a
//! cyclotron-side resonance lags by π/2: the magnetron motion is the
//! inverted-oscillator mode of the trap.
//!
//! The force amplitude F is an acceleration (m/s²), so `a` and `b` carry
//! metres; absolute amplitudes scale linearly with F and all phases and
//! ratios are independent of it.

use crate::axialization::AxializationDrive;
use crate::cooling::{cooling_rates, CoolingCoefficients};
use crate::trap::TrapFrequencies;
use num_complex::Complex64;
use thiserror::Error;

/// Relative floor under |C_m·C_c − ε²| below which the steady state is
/// reported singular rather than astronomically large.
pub const DEFAULT_SINGULAR_FLOOR: f64 = 1e-12;

/// Errors arising from the steady-state response computation.
#[derive(Debug, Error, PartialEq)]
pub enum ResponseError {
    /// The linear system is singular: the drive sits on an exactly undamped
    /// normal mode (possible only when the mode damping vanishes).
    #[error("singular response: |C_m*C_c - epsilon^2| = {magnitude:.3e} is below {floor:.3e} of the system scale {scale:.3e}; the drive sits on an undamped normal mode")]
    Singular {
        /// |C_m·C_c − ε²| at the requested drive point.
        magnitude: f64,
        /// The relative floor in effect.
        floor: f64,
        /// The comparison scale max(ε², |C_m|·|C_c|).
        scale: f64,
    },
    /// An excitation parameter is out of its allowed domain.
    #[error("invalid excitation parameter {name}: {value} ({reason})")]
    InvalidParameter {
        /// Name of the offending field.
        name: &'static str,
        /// Value supplied.
        value: f64,
        /// Why the value is rejected.
        reason: &'static str,
    },
    /// A sweep grid is empty or not strictly increasing.
    #[error("invalid excitation detuning grid: {reason}")]
    InvalidGrid {
        /// Why it is rejected.
        reason: &'static str,
    },
}

/// Which trap mode the excitation drive probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DriveSide {
    /// Drive near the modified cyclotron frequency ω_c′ (the default).
    #[default]
    Cyclotron,
    /// Drive near the magnetron frequency ω_m.
    Magnetron,
}

impl DriveSide {
    /// Stable lowercase name, used in serialized output.
    pub fn name(&self) -> &'static str {
        match self {
            DriveSide::Cyclotron => "cyclotron",
            DriveSide::Magnetron => "magnetron",
        }
    }

    /// The undriven mode frequency this side is referenced to.
    pub fn reference_frequency(&self, fr: &TrapFrequencies) -> f64 {
        match self {
            DriveSide::Cyclotron => fr.omega_c_prime,
            DriveSide::Magnetron => fr.omega_m,
        }
    }
}

/// The weak dipolar excitation probing the coupled modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcitationDrive {
    /// Acceleration amplitude F of the rotating dipolar force, m/s² (≥ 0).
    pub force_amplitude: f64,
    /// Rotating-frame detuning δ, rad/s: the laboratory drive frequency is
    /// ω_d = ω_ref + Δ + δ with ω_ref the side's mode frequency.
    pub detuning: f64,
    /// Which mode the drive probes.
    pub side: DriveSide,
}

impl ExcitationDrive {
    /// Builds the drive from a laboratory frequency instead of a detuning:
    /// δ = ω_d − ω_ref − Δ.
    pub fn from_lab_frequency(
        force_amplitude: f64,
        lab_frequency: f64,
        side: DriveSide,
        fr: &TrapFrequencies,
        axial: &AxializationDrive,
    ) -> Self {
        ExcitationDrive {
            force_amplitude,
            detuning: lab_frequency - side.reference_frequency(fr) - axial.half_detuning,
            side,
        }
    }

    /// Laboratory drive frequency ω_d = ω_ref + Δ + δ, rad/s.
    pub fn lab_frequency(&self, fr: &TrapFrequencies, axial: &AxializationDrive) -> f64 {
        self.side.reference_frequency(fr) + axial.half_detuning + self.detuning
    }

    /// Laboratory frequency ω_a − ω_d of the coupled component `b`, rad/s.
    pub fn mirror_lab_frequency(&self, fr: &TrapFrequencies, axial: &AxializationDrive) -> f64 {
        axial.axial_frequency(fr) - self.lab_frequency(fr, axial)
    }

    /// Checks the domain of every field, reporting the first violation.
    pub fn validate(&self) -> Result<(), ResponseError> {
        if !(self.force_amplitude >= 0.0 && self.force_amplitude.is_finite()) {
            return Err(ResponseError::InvalidParameter {
                name: "force_amplitude",
                value: self.force_amplitude,
                reason: "must be finite and >= 0",
            });
        }
        if !self.detuning.is_finite() {
            return Err(ResponseError::InvalidParameter {
                name: "detuning",
                value: self.detuning,
                reason: "must be finite",
            });
        }
        Ok(())
    }
}

/// Steady-state amplitudes of the driven two-component motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResponseSolution {
    /// Directly driven component at the drive frequency, complex metres;
    /// its argument is the ion phase relative to the drive.
    pub a: Complex64,
    /// Coupled component at the mirror frequency ω_a − ω_d, complex metres.
    pub b: Complex64,
    /// Diagnostic system constant multiplying `a`, rad²/s².
    pub c_m: Complex64,
    /// Diagnostic system constant multiplying `b̄`, rad²/s².
    pub c_c: Complex64,
}

/// System constants (C_m, C_c) for a drive at rotating-frame detuning δ.
fn system_constants(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    axial: &AxializationDrive,
    delta: f64,
    side: DriveSide,
) -> (Complex64, Complex64) {
    let rates = cooling_rates(co, fr);
    let big_delta = axial.half_detuning;
    let two_omega_1 = 2.0 * fr.omega_1;
    match side {
        DriveSide::Cyclotron => (
            Complex64::new(delta + big_delta, -rates.gamma_cyclotron) * -two_omega_1,
            Complex64::new(delta - big_delta, -rates.gamma_magnetron) * -two_omega_1,
        ),
        DriveSide::Magnetron => (
            Complex64::new(delta + big_delta, -rates.gamma_magnetron) * two_omega_1,
            Complex64::new(delta - big_delta, -rates.gamma_cyclotron) * two_omega_1,
        ),
    }
}

/// Steady-state response with the default singularity floor.
///
/// See [`response_with_floor`].
pub fn response(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    axial: &AxializationDrive,
    exc: &ExcitationDrive,
) -> Result<ResponseSolution, ResponseError> {
    response_with_floor(co, fr, axial, exc, DEFAULT_SINGULAR_FLOOR)
}

/// Steady-state response of the coupled modes to the excitation drive.
///
/// Solves C_m·a + ε·b̄ = F, C_c·b̄ + ε·a = 0:
/// a = F·C_c/(C_m·C_c − ε²) and b = −F·ε/conj(C_m·C_c − ε²), with b = 0
/// exactly when ε = 0.  Amplitudes are independent of F up to scale.
///
/// # Errors
///
/// [`ResponseError::Singular`] when |C_m·C_c − ε²| falls below
/// `floor · max(ε², |C_m||C_c|)` — an exactly undamped resonance, possible
/// only for β = 0 with the drive on a free normal mode.  Domain violations
/// return [`ResponseError::InvalidParameter`].
pub fn response_with_floor(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    axial: &AxializationDrive,
    exc: &ExcitationDrive,
    floor: f64,
) -> Result<ResponseSolution, ResponseError> {
    exc.validate()?;
    let (c_m, c_c) = system_constants(co, fr, axial, exc.detuning, exc.side);
    let eps = axial.epsilon;
    let eps_sq = eps * eps;
    let denom = c_m * c_c - Complex64::new(eps_sq, 0.0);
    let scale = eps_sq.max(c_m.norm() * c_c.norm());
    if scale == 0.0 || denom.norm() < floor * scale {
        return Err(ResponseError::Singular {
            magnitude: denom.norm(),
            floor,
            scale,
        });
    }
    let f = exc.force_amplitude;
    let a = c_c * f / denom;
    let b = if eps == 0.0 {
        Complex64::ZERO
    } else {
        -Complex64::new(f * eps, 0.0) / denom.conj()
    };
    Ok(ResponseSolution { a, b, c_m, c_c })
}

/// One point of an excitation-detuning sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    /// Rotating-frame drive detuning δ, rad/s.
    pub delta: f64,
    /// |a|, metres.
    pub abs_a: f64,
    /// Arg(a) in (−π, π]; always in [−π, 0] for a cyclotron-side drive
    /// with positive damping rates (the ion lags the drive).
    pub arg_a: f64,
    /// |b|, metres.
    pub abs_b: f64,
    /// Arg(b) in (−π, π].
    pub arg_b: f64,
}

/// Sweeps the excitation detuning and reports amplitude and phase of both
/// motion components.
///
/// The force amplitude and side are taken from `template`; its detuning is
/// replaced by each grid value in turn.
///
/// # Errors
///
/// [`ResponseError::InvalidGrid`] for an empty or non-increasing grid, and
/// per-point errors from [`response`].
pub fn phase_sweep(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    axial: &AxializationDrive,
    template: &ExcitationDrive,
    delta_grid: &[f64],
) -> Result<Vec<PhasePoint>, ResponseError> {
    if delta_grid.is_empty() {
        return Err(ResponseError::InvalidGrid {
            reason: "grid is empty",
        });
    }
    if delta_grid.iter().any(|v| !v.is_finite()) {
        return Err(ResponseError::InvalidGrid {
            reason: "grid contains non-finite values",
        });
    }
    if delta_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ResponseError::InvalidGrid {
            reason: "grid must be strictly increasing",
        });
    }
    delta_grid
        .iter()
        .map(|&delta| {
            let exc = ExcitationDrive {
                detuning: delta,
                ..*template
            };
            let sol = response(co, fr, axial, &exc)?;
            Ok(PhasePoint {
                delta,
                abs_a: sol.a.norm(),
                arg_a: sol.a.arg(),
                abs_b: sol.b.norm(),
                arg_b: sol.b.arg(),
            })
        })
        .collect()
}

/// Relative amplitude |b/a| of the coupled component when driving exactly
/// at a mode line of laboratory frequency `mode_frequency`.
///
/// The side is chosen by proximity (cyclotron family if the frequency is
/// nearer ω_c′ than ω_m) and the ratio ε/|C_c| is evaluated at the matching
/// detuning δ = ω_mode − ω_ref − Δ.  Returns 0 for ε = 0 and +∞ in the
/// pathological fully undamped case C_c = 0.
pub fn amplitude_ratio(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    axial: &AxializationDrive,
    mode_frequency: f64,
) -> f64 {
    if axial.epsilon == 0.0 {
        return 0.0;
    }
    let side = if (mode_frequency - fr.omega_c_prime).abs()
        <= (mode_frequency - fr.omega_m).abs()
    {
        DriveSide::Cyclotron
    } else {
        DriveSide::Magnetron
    };
    let delta = mode_frequency - side.reference_frequency(fr) - axial.half_detuning;
    let (_, c_c) = system_constants(co, fr, axial, delta, side);
    axial.epsilon / c_c.norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::khz_to_rad_per_s;
    use crate::trap::frequencies_from_pair;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    fn setup() -> (CoolingCoefficients, TrapFrequencies) {
        let fr = frequencies_from_pair(khz_to_rad_per_s(380.0), khz_to_rad_per_s(165.0)).unwrap();
        let co =
            CoolingCoefficients::from_ratio_and_strength(khz_to_rad_per_s(100.0), TAU * 100.0, &fr);
        (co, fr)
    }

    fn no_axialization() -> AxializationDrive {
        AxializationDrive {
            epsilon: 0.0,
            half_detuning: 0.0,
        }
    }

    fn strong_axialization(co: &CoolingCoefficients, fr: &TrapFrequencies) -> AxializationDrive {
        AxializationDrive {
            epsilon: 10.0 * co.m.abs() * fr.omega_1,
            half_detuning: 0.0,
        }
    }

    #[test]
    fn no_coupling_means_no_second_component() {
        let (co, fr) = setup();
        let axial = no_axialization();
        for delta in [-5000.0, 0.0, 137.0, 8000.0] {
            let exc = ExcitationDrive {
                force_amplitude: 1.0,
                detuning: delta,
                side: DriveSide::Cyclotron,
            };
            let sol = response(&co, &fr, &axial, &exc).unwrap();
            assert_eq!(sol.b, Complex64::ZERO);
            assert!(sol.a.norm() > 0.0);
        }
    }

    #[test]
    fn cyclotron_resonance_lags_by_quarter_turn() {
        let (co, fr) = setup();
        let rates = cooling_rates(&co, &fr);
        let exc = ExcitationDrive {
            force_amplitude: 1.0,
            detuning: 0.0,
            side: DriveSide::Cyclotron,
        };
        let sol = response(&co, &fr, &no_axialization(), &exc).unwrap();
        let expected_abs = 1.0 / (co.beta * fr.omega_c_prime - co.alpha);
        assert_relative_eq!(sol.a.norm(), expected_abs, max_relative = 1e-12);
        assert_relative_eq!(sol.a.arg(), -FRAC_PI_2, max_relative = 1e-12);
        // The same magnitude expressed through the damping rate.
        assert_relative_eq!(
            sol.a.norm(),
            1.0 / (2.0 * fr.omega_1 * rates.gamma_cyclotron),
            max_relative = 1e-12
        );
    }

    #[test]
    fn magnetron_resonance_leads_by_quarter_turn() {
        let (co, fr) = setup();
        let rates = cooling_rates(&co, &fr);
        let exc = ExcitationDrive {
            force_amplitude: 1.0,
            detuning: 0.0,
            side: DriveSide::Magnetron,
        };
        let sol = response(&co, &fr, &no_axialization(), &exc).unwrap();
        assert_relative_eq!(sol.a.arg(), FRAC_PI_2, max_relative = 1e-12);
        assert_relative_eq!(
            sol.a.norm(),
            1.0 / (2.0 * fr.omega_1 * rates.gamma_magnetron),
            max_relative = 1e-12
        );
    }

    #[test]
    fn response_is_linear_in_force() {
        let (co, fr) = setup();
        let axial = strong_axialization(&co, &fr);
        let base = ExcitationDrive {
            force_amplitude: 0.5,
            detuning: 1234.5,
            side: DriveSide::Cyclotron,
        };
        let scaled = ExcitationDrive {
            force_amplitude: 1.5,
            ..base
        };
        let s0 = response(&co, &fr, &axial, &base).unwrap();
        let s1 = response(&co, &fr, &axial, &scaled).unwrap();
        assert_relative_eq!(s1.a.norm(), 3.0 * s0.a.norm(), max_relative = 1e-13);
        assert_relative_eq!(s1.b.norm(), 3.0 * s0.b.norm(), max_relative = 1e-13);
        assert_relative_eq!(s1.a.arg(), s0.a.arg(), max_relative = 1e-13);
        assert_relative_eq!(s1.b.arg(), s0.b.arg(), max_relative = 1e-13);
    }

    #[test]
    fn solution_satisfies_the_linear_system() {
        let (co, fr) = setup();
        for (eps_factor, big_delta, delta, side) in [
            (1.0, 700.0, -300.0, DriveSide::Cyclotron),
            (10.0, 0.0, 3141.6, DriveSide::Cyclotron),
            (0.1, -900.0, 40.0, DriveSide::Magnetron),
            (3.0, 250.0, 2.0, DriveSide::Magnetron),
        ] {
            let axial = AxializationDrive {
                epsilon: eps_factor * co.m.abs() * fr.omega_1,
                half_detuning: big_delta,
            };
            let exc = ExcitationDrive {
                force_amplitude: 2.0,
                detuning: delta,
                side,
            };
            let sol = response(&co, &fr, &axial, &exc).unwrap();
            let f = Complex64::new(exc.force_amplitude, 0.0);
            let r1 = sol.c_m * sol.a + axial.epsilon * sol.b.conj() - f;
            let r2 = sol.c_c * sol.b.conj() + axial.epsilon * sol.a;
            assert!(r1.norm() <= 1e-12 * exc.force_amplitude);
            assert!(r2.norm() <= 1e-12 * (axial.epsilon * sol.a.norm()).max(f64::MIN_POSITIVE));
        }
    }

    #[test]
    fn undriven_lorentzian_halfwidth_equals_damping_rate() {
        let (co, fr) = setup();
        let rates = cooling_rates(&co, &fr);
        let axial = no_axialization();
        let at = |delta: f64| {
            let exc = ExcitationDrive {
                force_amplitude: 1.0,
                detuning: delta,
                side: DriveSide::Cyclotron,
            };
            response(&co, &fr, &axial, &exc).unwrap().a.norm_sqr()
        };
        let ratio = at(rates.gamma_cyclotron) / at(0.0);
        assert_relative_eq!(ratio, 0.5, max_relative = 1e-12);
    }

    #[test]
    fn strong_drive_splits_the_resonance_and_mixes_components() {
        let (co, fr) = setup();
        let axial = strong_axialization(&co, &fr);
        let split = axial.epsilon / (2.0 * fr.omega_1);
        let at = |delta: f64| {
            let exc = ExcitationDrive {
                force_amplitude: 1.0,
                detuning: delta,
                side: DriveSide::Cyclotron,
            };
            response(&co, &fr, &axial, &exc).unwrap()
        };
        let centre = at(0.0);
        let peak_plus = at(split);
        let peak_minus = at(-split);
        // Two resonances of similar height, well above the midpoint dip.
        assert!(peak_plus.a.norm() > 10.0 * centre.a.norm());
        assert!(peak_minus.a.norm() > 10.0 * centre.a.norm());
        assert_relative_eq!(peak_plus.a.norm(), peak_minus.a.norm(), max_relative = 0.05);
        // At either peak the coupled component rivals the driven one.
        assert!(peak_plus.b.norm() > 0.8 * peak_plus.a.norm());
        assert!(peak_minus.b.norm() > 0.8 * peak_minus.a.norm());
    }

    #[test]
    fn far_off_resonance_amplitude_and_phase_asymptotes() {
        let (co, fr) = setup();
        let axial = no_axialization();
        let delta = khz_to_rad_per_s(50.0);
        for sign in [1.0, -1.0] {
            let exc = ExcitationDrive {
                force_amplitude: 1.0,
                detuning: sign * delta,
                side: DriveSide::Cyclotron,
            };
            let sol = response(&co, &fr, &axial, &exc).unwrap();
            assert_relative_eq!(
                sol.a.norm(),
                1.0 / (2.0 * delta * fr.omega_1),
                max_relative = 1e-4
            );
            if sign > 0.0 {
                assert!(sol.a.arg() < -0.99 * PI);
            } else {
                assert!(sol.a.arg() > -0.01 && sol.a.arg() <= 0.0);
            }
        }
    }

    #[test]
    fn cyclotron_phase_always_lags() {
        let (co, fr) = setup();
        for axial in [no_axialization(), strong_axialization(&co, &fr)] {
            let template = ExcitationDrive {
                force_amplitude: 1.0,
                detuning: 0.0,
                side: DriveSide::Cyclotron,
            };
            let grid: Vec<f64> = (-40..=40).map(|i| f64::from(i) * 250.0).collect();
            let points = phase_sweep(&co, &fr, &axial, &template, &grid).unwrap();
            assert_eq!(points.len(), 81);
            for p in points {
                assert!(
                    (-PI..=0.0).contains(&p.arg_a),
                    "Arg(a) = {} escaped [-pi, 0] at delta = {}",
                    p.arg_a,
                    p.delta
                );
            }
        }
    }

    #[test]
    fn sweep_rejects_bad_grids() {
        let (co, fr) = setup();
        let template = ExcitationDrive {
            force_amplitude: 1.0,
            detuning: 0.0,
            side: DriveSide::Cyclotron,
        };
        assert!(matches!(
            phase_sweep(&co, &fr, &no_axialization(), &template, &[]),
            Err(ResponseError::InvalidGrid { .. })
        ));
        assert!(matches!(
            phase_sweep(&co, &fr, &no_axialization(), &template, &[1.0, 1.0]),
            Err(ResponseError::InvalidGrid { .. })
        ));
    }

    #[test]
    fn undamped_free_mode_is_reported_singular() {
        let fr = frequencies_from_pair(khz_to_rad_per_s(380.0), khz_to_rad_per_s(165.0)).unwrap();
        let free = CoolingCoefficients::from_alpha_beta(0.0, 0.0, &fr);
        // No cooling, no coupling, drive exactly on the mode: fully singular.
        let exc = ExcitationDrive {
            force_amplitude: 1.0,
            detuning: 0.0,
            side: DriveSide::Cyclotron,
        };
        let err = response(&free, &fr, &no_axialization(), &exc).unwrap_err();
        assert!(matches!(err, ResponseError::Singular { .. }));
        // No cooling with coupling: singular at the split normal modes.
        let axial = AxializationDrive {
            epsilon: khz_to_rad_per_s(1.0) * fr.omega_1,
            half_detuning: 0.0,
        };
        let on_mode = ExcitationDrive {
            force_amplitude: 1.0,
            detuning: axial.epsilon / (2.0 * fr.omega_1),
            side: DriveSide::Cyclotron,
        };
        assert!(matches!(
            response(&free, &fr, &axial, &on_mode),
            Err(ResponseError::Singular { .. })
        ));
        // Restoring damping removes the singularity at the same point.
        let (co, _) = setup();
        assert!(response(&co, &fr, &axial, &on_mode).is_ok());
    }

    #[test]
    fn amplitude_ratio_examples() {
        let (co, fr) = setup();
        // ε = 0: no coupled component at any mode frequency.
        assert_eq!(amplitude_ratio(&co, &fr, &no_axialization(), fr.omega_c_prime), 0.0);
        // Weak drive far detuned: ratio well under the thin-line threshold.
        let weak = AxializationDrive {
            epsilon: 0.1 * co.m.abs() * fr.omega_1,
            half_detuning: khz_to_rad_per_s(2.0),
        };
        let ratio = amplitude_ratio(&co, &fr, &weak, fr.omega_c_prime);
        assert!(ratio < 0.05, "expected thin line, got ratio {ratio}");
        // Strong drive on resonance: both split lines are heavily mixed.
        let strong = strong_axialization(&co, &fr);
        let split = strong.epsilon / (2.0 * fr.omega_1);
        for sign in [1.0, -1.0] {
            let ratio = amplitude_ratio(&co, &fr, &strong, fr.omega_c_prime + sign * split);
            assert!(ratio > 0.8, "expected mixed line, got ratio {ratio}");
        }
    }

    #[test]
    fn lab_frequency_bookkeeping_is_consistent() {
        let (_, fr) = setup();
        let axial = AxializationDrive {
            epsilon: 1e9,
            half_detuning: 700.0,
        };
        let exc = ExcitationDrive {
            force_amplitude: 1.0,
            detuning: -450.0,
            side: DriveSide::Cyclotron,
        };
        let lab = exc.lab_frequency(&fr, &axial);
        assert_relative_eq!(lab, fr.omega_c_prime + 700.0 - 450.0, max_relative = 1e-15);
        // Drive line and coupled line always sum to the axializing drive.
        assert_relative_eq!(
            lab + exc.mirror_lab_frequency(&fr, &axial),
            axial.axial_frequency(&fr),
            max_relative = 1e-15
        );
        let back = ExcitationDrive::from_lab_frequency(1.0, lab, DriveSide::Cyclotron, &fr, &axial);
        assert_relative_eq!(back.detuning, exc.detuning, max_relative = 1e-9);
    }

    #[test]
    fn invalid_excitation_fields_are_named() {
        let (co, fr) = setup();
        let exc = ExcitationDrive {
            force_amplitude: -2.0,
            detuning: 0.0,
            side: DriveSide::Cyclotron,
        };
        assert!(matches!(
            response(&co, &fr, &no_axialization(), &exc),
            Err(ResponseError::InvalidParameter { name: "force_amplitude", .. })
        ));
    }
}
