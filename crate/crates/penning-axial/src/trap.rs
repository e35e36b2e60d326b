//! Trap configuration and the unperturbed radial/axial eigenfrequencies.
//!
//! A Penning trap combines a static quadrupole electric potential
//! φ = U0 (2z² − x² − y²)/(2z0² + r0²) with a static magnetic field
//! B = −B ẑ.  The axial motion is harmonic at ω_z; the radial motion is a
//! superposition of two circular modes, the modified cyclotron motion at
//! ω_c′ = ω_c/2 + ω₁ and the magnetron motion at ω_m = ω_c/2 − ω₁, where
//! ω_c = eB/m is the true cyclotron frequency and
//! ω₁ = √(ω_c²/4 − ω_z²/2).
//!
//! With this field orientation a positive ion circulates counterclockwise in
//! the x–y plane: both radial modes have positive angular frequency for the
//! complex coordinate u = x + iy ∝ e^{iωt}.

use crate::constants::{ion_charge_c, ion_mass_kg};
use thiserror::Error;

/// Errors arising from trap configuration or frequency computation.
#[derive(Debug, Error, PartialEq)]
pub enum TrapError {
    /// A configuration field is out of its allowed domain.
    #[error("invalid trap parameter {name}: {value} ({reason})")]
    InvalidParameter {
        /// Name of the offending field.
        name: &'static str,
        /// Value supplied.
        value: f64,
        /// Why the value is rejected.
        reason: &'static str,
    },
    /// The radial motion is unbounded: ω_c²/4 ≤ ω_z²/2.
    #[error("unstable trap: omega_c^2/4 = {omega_c_sq_over_4} <= omega_z^2/2 = {omega_z_sq_over_2}; increase the magnetic field or lower the endcap voltage")]
    UnstableTrap {
        /// ω_c²/4 in rad²/s².
        omega_c_sq_over_4: f64,
        /// ω_z²/2 in rad²/s².
        omega_z_sq_over_2: f64,
    },
}

/// Physical parameters of an ideal Penning trap and the stored ion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapConfig {
    /// Endcap bias voltage U0 in volts (≥ 0; zero gives a field-free axis).
    pub endcap_voltage: f64,
    /// Axial half-gap z0 in metres (> 0).
    pub axial_half_gap: f64,
    /// Ring electrode radius r0 in metres (> 0).
    pub ring_radius: f64,
    /// Magnetic field magnitude B in tesla (> 0); the field points along −ẑ.
    pub magnetic_field: f64,
    /// Ion mass m in kilograms (> 0).
    pub ion_mass: f64,
    /// Ion charge e in coulombs (> 0; positive ions only).
    pub ion_charge: f64,
}

impl TrapConfig {
    /// Builds a configuration for an ion given by mass number and charge
    /// state (mass = A·u, charge = Z·e; isotope mass defects ignored).
    pub fn with_species(
        endcap_voltage: f64,
        axial_half_gap: f64,
        ring_radius: f64,
        magnetic_field: f64,
        mass_number: f64,
        charge_state: f64,
    ) -> Self {
        TrapConfig {
            endcap_voltage,
            axial_half_gap,
            ring_radius,
            magnetic_field,
            ion_mass: ion_mass_kg(mass_number),
            ion_charge: ion_charge_c(charge_state),
        }
    }

    /// Checks the domain of every field, reporting the first violation.
    pub fn validate(&self) -> Result<(), TrapError> {
        let checks: [(&'static str, f64, bool, &'static str); 6] = [
            (
                "endcap_voltage",
                self.endcap_voltage,
                self.endcap_voltage >= 0.0 && self.endcap_voltage.is_finite(),
                "must be finite and >= 0",
            ),
            (
                "axial_half_gap",
                self.axial_half_gap,
                self.axial_half_gap > 0.0 && self.axial_half_gap.is_finite(),
                "must be finite and > 0",
            ),
            (
                "ring_radius",
                self.ring_radius,
                self.ring_radius > 0.0 && self.ring_radius.is_finite(),
                "must be finite and > 0",
            ),
            (
                "magnetic_field",
                self.magnetic_field,
                self.magnetic_field > 0.0 && self.magnetic_field.is_finite(),
                "must be finite and > 0",
            ),
            (
                "ion_mass",
                self.ion_mass,
                self.ion_mass > 0.0 && self.ion_mass.is_finite(),
                "must be finite and > 0",
            ),
            (
                "ion_charge",
                self.ion_charge,
                self.ion_charge > 0.0 && self.ion_charge.is_finite(),
                "must be finite and > 0",
            ),
        ];
        for (name, value, ok, reason) in checks {
            if !ok {
                return Err(TrapError::InvalidParameter { name, value, reason });
            }
        }
        Ok(())
    }
}

/// The five characteristic angular frequencies of a stable Penning trap,
/// all in rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapFrequencies {
    /// Axial frequency ω_z.
    pub omega_z: f64,
    /// True cyclotron frequency ω_c = eB/m.
    pub omega_c: f64,
    /// Radial splitting ω₁ = √(ω_c²/4 − ω_z²/2).
    pub omega_1: f64,
    /// Modified cyclotron frequency ω_c′ = ω_c/2 + ω₁.
    pub omega_c_prime: f64,
    /// Magnetron frequency ω_m = ω_c/2 − ω₁.
    pub omega_m: f64,
}

impl TrapFrequencies {
    fn from_omega_c_and_omega_1(omega_c: f64, omega_1: f64, omega_z: f64) -> Self {
        TrapFrequencies {
            omega_z,
            omega_c,
            omega_1,
            omega_c_prime: omega_c / 2.0 + omega_1,
            omega_m: omega_c / 2.0 - omega_1,
        }
    }
}

/// Computes all five trap frequencies from physical parameters.
///
/// ω_c = eB/m, ω_z = √(4eU0 / (m(2z0² + r0²))), ω₁ = √(ω_c²/4 − ω_z²/2),
/// ω_c′ = ω_c/2 + ω₁ and ω_m = ω_c/2 − ω₁.
///
/// # Errors
///
/// [`TrapError::InvalidParameter`] if a field is out of domain and
/// [`TrapError::UnstableTrap`] when ω_c²/4 ≤ ω_z²/2, in which case the radial
/// motion is unbounded and ω₁ is not real.
pub fn compute_frequencies(cfg: &TrapConfig) -> Result<TrapFrequencies, TrapError> {
    cfg.validate()?;
    let omega_c = cfg.ion_charge * cfg.magnetic_field / cfg.ion_mass;
    let omega_z_sq = 4.0 * cfg.ion_charge * cfg.endcap_voltage
        / (cfg.ion_mass * (2.0 * cfg.axial_half_gap.powi(2) + cfg.ring_radius.powi(2)));
    let omega_c_sq_over_4 = omega_c * omega_c / 4.0;
    let omega_z_sq_over_2 = omega_z_sq / 2.0;
    if omega_c_sq_over_4 <= omega_z_sq_over_2 {
        return Err(TrapError::UnstableTrap {
            omega_c_sq_over_4,
            omega_z_sq_over_2,
        });
    }
    let omega_1 = (omega_c_sq_over_4 - omega_z_sq_over_2).sqrt();
    Ok(TrapFrequencies::from_omega_c_and_omega_1(
        omega_c,
        omega_1,
        omega_z_sq.sqrt(),
    ))
}

/// Builds the full frequency set from a measured (ω_c, ω₁) pair in rad/s.
///
/// This is the convenient entry point when the trap is characterised by its
/// observed frequencies rather than by voltages and geometry.  The axial
/// frequency follows from ω_z² = 2(ω_c²/4 − ω₁²), evaluated in product form
/// to avoid cancellation.
///
/// # Errors
///
/// [`TrapError::InvalidParameter`] unless ω_c/2 ≥ ω₁ ≥ 0.
pub fn frequencies_from_pair(omega_c: f64, omega_1: f64) -> Result<TrapFrequencies, TrapError> {
    if !(omega_c > 0.0 && omega_c.is_finite()) {
        return Err(TrapError::InvalidParameter {
            name: "omega_c",
            value: omega_c,
            reason: "must be finite and > 0",
        });
    }
    if !(omega_1 >= 0.0 && omega_1.is_finite()) {
        return Err(TrapError::InvalidParameter {
            name: "omega_1",
            value: omega_1,
            reason: "must be finite and >= 0",
        });
    }
    if omega_1 > omega_c / 2.0 {
        return Err(TrapError::InvalidParameter {
            name: "omega_1",
            value: omega_1,
            reason: "must not exceed omega_c / 2",
        });
    }
    let omega_z = (2.0 * (omega_c / 2.0 - omega_1) * (omega_c / 2.0 + omega_1)).sqrt();
    Ok(TrapFrequencies::from_omega_c_and_omega_1(
        omega_c, omega_1, omega_z,
    ))
}
