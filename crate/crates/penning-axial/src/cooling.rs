//! Linearised radiation-pressure model of Doppler cooling in the radial
//! plane, and the damping rates of the two radial modes.
//!
//! A laser beam propagating along +x with a Gaussian transverse profile
//! centred at y = y0 scatters photons at the power-broadened rate
//!
//! R(y, ẋ) = (Γ/2)·s(y) / (1 + s(y) + (2δ_eff/Γ)²),
//!
//! with s(y) = s0·exp(−2(y − y0)²/w²) and δ_eff = Δ_L − kẋ the
//! Doppler-shifted detuning.  Expanding the radiation-pressure force
//! F = ħkR about the trap centre (y = 0, ẋ = 0) and discarding the constant
//! term gives the two linear coefficients used throughout the crate:
//!
//! F_α = −2αmy (position dependence through the beam profile) and
//! F_β = −2βmẋ (velocity dependence through the Doppler shift),
//!
//! so α = −(ħk/2m)·∂R/∂y and β = −(ħk/2m)·∂R/∂ẋ at the origin.  With the
//! magnetic field along −ẑ the ion circulates counterclockwise, so the beam
//! co-propagates with the ion's motion on the y < 0 side; a red-detuned beam
//! (Δ_L < 0) displaced to y0 < 0 produces α > 0 and β > 0.
//!
//! The damped radial modes then rotate at the complex frequencies of
//! [`cooling_roots_exact`]; to first order in α, β the damping rates are
//! γ_cyc = (βω_c′ − α)/2ω₁ and γ_mag = (α − βω_m)/2ω₁, and both modes are
//! cooled precisely when ω_m < α/β < ω_c′.

use crate::constants::REDUCED_PLANCK;
use crate::trap::{compute_frequencies, TrapConfig, TrapError, TrapFrequencies};
use num_complex::Complex64;
use std::f64::consts::TAU;
use thiserror::Error;

/// Errors arising from laser-cooling inputs.
#[derive(Debug, Error, PartialEq)]
pub enum CoolingError {
    /// A laser parameter is out of its allowed domain.
    #[error("invalid laser parameter {name}: {value} ({reason})")]
    InvalidParameter {
        /// Name of the offending field.
        name: &'static str,
        /// Value supplied.
        value: f64,
        /// Why the value is rejected.
        reason: &'static str,
    },
    /// A sweep grid is empty or not strictly increasing.
    #[error("invalid {name} grid: {reason}")]
    InvalidGrid {
        /// Which grid is malformed.
        name: &'static str,
        /// Why it is rejected.
        reason: &'static str,
    },
}

/// Parameters of the cooling laser and of the driven optical transition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaserConfig {
    /// Laser detuning Δ_L = 2π(ν_L − ν_0) from atomic resonance, rad/s.
    pub detuning: f64,
    /// Transverse offset y0 of the beam axis from the trap centre, metres.
    pub beam_offset: f64,
    /// Gaussian beam waist w (1/e² intensity radius), metres (> 0).
    pub beam_waist: f64,
    /// Peak saturation parameter s0 = I_peak/I_sat, dimensionless (≥ 0).
    pub peak_saturation: f64,
    /// Natural linewidth Γ of the transition, rad/s (> 0).
    pub linewidth: f64,
    /// Transition wavelength λ, metres (> 0); the wavenumber is k = 2π/λ.
    pub wavelength: f64,
}

impl LaserConfig {
    /// The 397 nm cooling transition of Ca⁺ (Γ = 2π·21.6 MHz) with a given
    /// detuning, beam offset, waist and peak saturation.
    pub fn calcium_397(
        detuning: f64,
        beam_offset: f64,
        beam_waist: f64,
        peak_saturation: f64,
    ) -> Self {
        LaserConfig {
            detuning,
            beam_offset,
            beam_waist,
            peak_saturation,
            linewidth: TAU * 21.6e6,
            wavelength: 397e-9,
        }
    }

    /// Wavenumber k = 2π/λ in rad/m.
    pub fn wavenumber(&self) -> f64 {
        TAU / self.wavelength
    }

    /// Checks the domain of every field, reporting the first violation.
    pub fn validate(&self) -> Result<(), CoolingError> {
        let checks: [(&'static str, f64, bool, &'static str); 6] = [
            (
                "detuning",
                self.detuning,
                self.detuning.is_finite(),
                "must be finite",
            ),
            (
                "beam_offset",
                self.beam_offset,
                self.beam_offset.is_finite(),
                "must be finite",
            ),
            (
                "beam_waist",
                self.beam_waist,
                self.beam_waist > 0.0 && self.beam_waist.is_finite(),
                "must be finite and > 0",
            ),
            (
                "peak_saturation",
                self.peak_saturation,
                self.peak_saturation >= 0.0 && self.peak_saturation.is_finite(),
                "must be finite and >= 0",
            ),
            (
                "linewidth",
                self.linewidth,
                self.linewidth > 0.0 && self.linewidth.is_finite(),
                "must be finite and > 0",
            ),
            (
                "wavelength",
                self.wavelength,
                self.wavelength > 0.0 && self.wavelength.is_finite(),
                "must be finite and > 0",
            ),
        ];
        for (name, value, ok, reason) in checks {
            if !ok {
                return Err(CoolingError::InvalidParameter { name, value, reason });
            }
        }
        Ok(())
    }
}

/// Linearised force coefficients of the cooling beam.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoolingCoefficients {
    /// Position coefficient, s⁻²: the beam contributes a force −2αmy.
    pub alpha: f64,
    /// Velocity coefficient, s⁻¹: the beam contributes a force −2βmẋ.
    pub beta: f64,
    /// Coupling-strength parameter m = (2α − βω_c)/(2ω₁), rad/s.  It sets
    /// the scale of the damping asymmetry between the two radial modes and
    /// is the natural yardstick for the axializing drive strength.
    pub m: f64,
}

impl CoolingCoefficients {
    /// Builds coefficients directly from α and β, deriving m from the trap.
    pub fn from_alpha_beta(alpha: f64, beta: f64, fr: &TrapFrequencies) -> Self {
        CoolingCoefficients {
            alpha,
            beta,
            m: (2.0 * alpha - beta * fr.omega_c) / (2.0 * fr.omega_1),
        }
    }

    /// Builds coefficients from the damping ratio ρ = α/β and a prescribed
    /// coupling-strength magnitude |m|, taking β > 0.
    ///
    /// Since m = β(ρ − ω_c/2)/ω₁, the pair (ρ, |m|) fixes
    /// β = |m|·ω₁/|ρ − ω_c/2| and α = ρβ; the sign of m follows the sign of
    /// ρ − ω_c/2.  This is the natural parameterisation of the sweep
    /// presets, which quote α/β and |m| rather than α and β themselves.
    ///
    /// # Panics
    ///
    /// If ρ = ω_c/2 exactly, where no finite β realises a nonzero |m|.
    pub fn from_ratio_and_strength(ratio: f64, m_magnitude: f64, fr: &TrapFrequencies) -> Self {
        let lever = ratio - fr.omega_c / 2.0;
        assert!(
            lever != 0.0,
            "alpha/beta = omega_c/2 cannot produce a nonzero coupling strength"
        );
        let beta = m_magnitude * fr.omega_1 / lever.abs();
        Self::from_alpha_beta(ratio * beta, beta, fr)
    }
}

/// First-order damping rates of the two radial modes, s⁻¹ (positive values
/// damp the motion).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoolingRates {
    /// Damping rate of the modified cyclotron mode, (βω_c′ − α)/2ω₁.
    pub gamma_cyclotron: f64,
    /// Damping rate of the magnetron mode, (α − βω_m)/2ω₁.
    pub gamma_magnetron: f64,
}

/// One cell of a cooling-rate map over (beam offset, laser detuning).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoolingMapCell {
    /// Beam offset y0 of this cell, metres.
    pub beam_offset: f64,
    /// Laser detuning Δ_L of this cell, rad/s.
    pub detuning: f64,
    /// Linearised coefficients at this cell.
    pub coefficients: CoolingCoefficients,
    /// First-order damping rates at this cell.
    pub rates: CoolingRates,
}

/// Photon scattering rate R(y, ẋ) in photons/s.
///
/// R = (Γ/2)·s(y)/(1 + s(y) + (2δ_eff/Γ)²) with
/// s(y) = s0·exp(−2(y − y0)²/w²) and δ_eff = Δ_L − kẋ.  Total on valid
/// configurations and nonnegative everywhere.
pub fn scattering_rate(laser: &LaserConfig, y: f64, xdot: f64) -> f64 {
    let dy = y - laser.beam_offset;
    let s = laser.peak_saturation * (-2.0 * dy * dy / (laser.beam_waist * laser.beam_waist)).exp();
    let delta_eff = laser.detuning - laser.wavenumber() * xdot;
    let q = 2.0 * delta_eff / laser.linewidth;
    (laser.linewidth / 2.0) * s / (1.0 + s + q * q)
}

/// Linearises the radiation-pressure force about the trap centre.
///
/// Returns α = −(ħk/2m)·∂R/∂y and β = −(ħk/2m)·∂R/∂ẋ, both evaluated
/// analytically at y = 0, ẋ = 0, together with m = (2α − βω_c)/2ω₁.  The
/// constant force term is dropped: it only displaces the equilibrium.
///
/// # Errors
///
/// [`CoolingError::InvalidParameter`] if the laser configuration is out of
/// domain or the ion mass is not positive.
pub fn linearize_force(
    laser: &LaserConfig,
    ion_mass: f64,
    fr: &TrapFrequencies,
) -> Result<CoolingCoefficients, CoolingError> {
    laser.validate()?;
    if !(ion_mass > 0.0 && ion_mass.is_finite()) {
        return Err(CoolingError::InvalidParameter {
            name: "ion_mass",
            value: ion_mass,
            reason: "must be finite and > 0",
        });
    }
    let k = laser.wavenumber();
    let w2 = laser.beam_waist * laser.beam_waist;
    // Saturation parameter at the trap centre, s(0) = s0·exp(−2y0²/w²).
    let s_centre =
        laser.peak_saturation * (-2.0 * laser.beam_offset * laser.beam_offset / w2).exp();
    // Normalised detuning d0 = 2Δ_L/Γ and the shared squared denominator.
    let d0 = 2.0 * laser.detuning / laser.linewidth;
    let den = 1.0 + s_centre + d0 * d0;
    let den2 = den * den;
    // ∂R/∂y at the origin: only s(y) depends on y, and
    // s′(0) = s(0)·4y0/w², so ∂R/∂y = (Γ/2)(1 + d0²)·s′(0)/den².
    let dr_dy = (laser.linewidth / 2.0) * (1.0 + d0 * d0) * s_centre * (4.0 * laser.beam_offset / w2)
        / den2;
    // ∂R/∂ẋ at the origin: only δ_eff depends on ẋ, giving 2k·d0·s(0)/den².
    let dr_dxdot = 2.0 * k * d0 * s_centre / den2;
    let scale = REDUCED_PLANCK * k / (2.0 * ion_mass);
    Ok(CoolingCoefficients::from_alpha_beta(
        -scale * dr_dy,
        -scale * dr_dxdot,
        fr,
    ))
}

/// [`linearize_force`] for a trap given by physical parameters; computes the
/// trap frequencies internally.
///
/// # Errors
///
/// Propagates trap validation/stability errors and laser domain errors.
pub fn linearize_force_for_trap(
    laser: &LaserConfig,
    cfg: &TrapConfig,
) -> Result<CoolingCoefficients, LinearizeError> {
    let fr = compute_frequencies(cfg)?;
    Ok(linearize_force(laser, cfg.ion_mass, &fr)?)
}

/// Error type of [`linearize_force_for_trap`]: either side can fail.
#[derive(Debug, Error, PartialEq)]
pub enum LinearizeError {
    /// The trap configuration is invalid or unstable.
    #[error(transparent)]
    Trap(#[from] TrapError),
    /// The laser configuration is invalid.
    #[error(transparent)]
    Cooling(#[from] CoolingError),
}

/// First-order damping rates of the two radial modes.
///
/// γ_cyc = (βω_c′ − α)/2ω₁ and γ_mag = (α − βω_m)/2ω₁; their sum is β
/// identically.  Valid for |α| ≪ ω₁², |β| ≪ ω₁ (see
/// [`validity_warnings`]); the exact roots are available from
/// [`cooling_roots_exact`].
pub fn cooling_rates(co: &CoolingCoefficients, fr: &TrapFrequencies) -> CoolingRates {
    let two_omega_1 = 2.0 * fr.omega_1;
    CoolingRates {
        gamma_cyclotron: (co.beta * fr.omega_c_prime - co.alpha) / two_omega_1,
        gamma_magnetron: (co.alpha - co.beta * fr.omega_m) / two_omega_1,
    }
}

/// The two exact complex mode frequencies of the cooled (undriven) radial
/// motion, for u = x + iy ∝ e^{iωt}.
///
/// Roots of ω² − (ω_c + iβ)ω + (ω_z²/2 + iα) = 0:
/// ω± = (ω_c + iβ)/2 ± √(ω₁² − β²/4 + iβω_c/2 − iα).
/// Index 0 is the + root (the modified-cyclotron family), index 1 the −
/// root (the magnetron family).  Im(ω) > 0 means the mode is damped.
pub fn cooling_roots_exact(co: &CoolingCoefficients, fr: &TrapFrequencies) -> [Complex64; 2] {
    let centre = Complex64::new(fr.omega_c / 2.0, co.beta / 2.0);
    let radicand = Complex64::new(
        fr.omega_1 * fr.omega_1 - co.beta * co.beta / 4.0,
        co.beta * fr.omega_c / 2.0 - co.alpha,
    );
    let root = radicand.sqrt();
    [centre + root, centre - root]
}

/// Warnings when the linearised model is pushed outside its design regime.
///
/// Returns one message per violated condition (|β| ≤ 0.1ω₁ and
/// |α| ≤ 0.1ω₁²), quoting the offending ratio.  The closed-form operations
/// remain well defined outside the regime; these are advisories only.
pub fn validity_warnings(co: &CoolingCoefficients, fr: &TrapFrequencies) -> Vec<String> {
    let mut warnings = Vec::new();
    let w1 = fr.omega_1;
    if co.beta.abs() > 0.1 * w1 {
        warnings.push(format!(
            "velocity coefficient beta is not small: |beta|/omega_1 = {:.3e} (> 0.1); first-order rates are unreliable",
            co.beta.abs() / w1
        ));
    }
    if co.alpha.abs() > 0.1 * w1 * w1 {
        warnings.push(format!(
            "position coefficient alpha is not small: |alpha|/omega_1^2 = {:.3e} (> 0.1); first-order rates are unreliable",
            co.alpha.abs() / (w1 * w1)
        ));
    }
    warnings
}

/// Evaluates the damping rates of both radial modes over a rectangular
/// (beam offset, laser detuning) grid.
///
/// Every grid cell reuses `laser_template` with its `beam_offset` and
/// `detuning` replaced by the cell coordinates.  Cells are returned in
/// row-major order: beam offset ascending in the outer loop, detuning
/// ascending in the inner loop.
///
/// # Errors
///
/// [`CoolingError::InvalidGrid`] when a grid is empty or not strictly
/// increasing, and laser domain errors from the template.
pub fn cooling_map(
    laser_template: &LaserConfig,
    ion_mass: f64,
    fr: &TrapFrequencies,
    y0_grid: &[f64],
    detuning_grid: &[f64],
) -> Result<Vec<CoolingMapCell>, CoolingError> {
    check_grid("beam_offset", y0_grid)?;
    check_grid("detuning", detuning_grid)?;
    let mut cells = Vec::with_capacity(y0_grid.len() * detuning_grid.len());
    for &y0 in y0_grid {
        for &detuning in detuning_grid {
            let laser = LaserConfig {
                beam_offset: y0,
                detuning,
                ..*laser_template
            };
            let coefficients = linearize_force(&laser, ion_mass, fr)?;
            let rates = cooling_rates(&coefficients, fr);
            cells.push(CoolingMapCell {
                beam_offset: y0,
                detuning,
                coefficients,
                rates,
            });
        }
    }
    Ok(cells)
}

fn check_grid(name: &'static str, grid: &[f64]) -> Result<(), CoolingError> {
    if grid.is_empty() {
        return Err(CoolingError::InvalidGrid {
            name,
            reason: "grid is empty",
        });
    }
    if grid.iter().any(|v| !v.is_finite()) {
        return Err(CoolingError::InvalidGrid {
            name,
            reason: "grid contains non-finite values",
        });
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CoolingError::InvalidGrid {
            name,
            reason: "grid must be strictly increasing",
        });
    }
    Ok(())
}
