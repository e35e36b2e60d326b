//! Physical constants and unit-conversion helpers.
//!
//! All frequencies inside the library are angular frequencies in rad/s.
//! Configuration files and CLI output use ordinary frequencies in kHz; the
//! conversion by 2π happens exactly once, at that boundary, through the two
//! helpers below.

use std::f64::consts::TAU;

/// Elementary charge in coulombs (CODATA 2018, exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Unified atomic mass unit in kilograms (CODATA 2018).
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// Reduced Planck constant in joule-seconds (CODATA 2018, exact).
pub const REDUCED_PLANCK: f64 = 1.054_571_817e-34;

/// Converts an ordinary frequency in kHz to an angular frequency in rad/s.
pub fn khz_to_rad_per_s(f_khz: f64) -> f64 {
    f_khz * 1e3 * TAU
}

/// Converts an angular frequency in rad/s to an ordinary frequency in kHz.
pub fn rad_per_s_to_khz(omega: f64) -> f64 {
    omega / (1e3 * TAU)
}

/// Mass in kilograms of an ion with the given mass number.
///
/// Isotope mass defects are ignored; they are far below the accuracy of the
/// model.
pub fn ion_mass_kg(mass_number: f64) -> f64 {
    mass_number * ATOMIC_MASS_UNIT
}

/// Charge in coulombs of an ion with the given charge state.
pub fn ion_charge_c(charge_state: f64) -> f64 {
    charge_state * ELEMENTARY_CHARGE
}
