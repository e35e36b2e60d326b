//! Closed-form mode structure of the laser-cooled ion under an axializing
//! quadrupole drive.
//!
//! The axializing drive is a quadrupole field oscillating at ω_a = ω_c + 2Δ,
//! close to twice the rotating-frame frequency ω_r = ω_c/2 + Δ.  In the
//! frame rotating at ω_r, its co-rotating component couples the two radial
//! modes with strength ε, shifting the rotating-frame mode frequencies by
//! ±δ₀ and redistributing the laser-cooling damping between the modes.
//!
//! With m = (2α − βω_c)/2ω₁ the coupling-strength parameter of the cooling
//! beam and N = Δ² − m²/4 + ε²/4ω₁², the shifts are the real roots of
//!
//! δ₀⁴ − N·δ₀² − Δ²m²/4 = 0,
//!
//! i.e. δ₀ = ±√((N + √(N² + Δ²m²))/2), and each branch is damped at
//! γ₀ = β/2 + Δm/(2δ₀).  Both formulas are evaluated here in
//! cancellation-free form, so the quartic residual, the reduction to the
//! undriven rates at ε = 0 and the pairwise sum γ₀(+) + γ₀(−) = β hold to
//! machine precision.
//!
//! In the laboratory frame each branch appears at two frequencies at once —
//! ω_c′ + Δ + δ₀ in the modified-cyclotron family and ω_m + Δ − δ₀ in the
//! magnetron family — with relative amplitudes fixed by the same linear
//! system; [`ModeSolution::dominance`] records each line's amplitude
//! relative to the stronger line of its branch.

use crate::cooling::{cooling_rates, CoolingCoefficients};
use crate::trap::{TrapConfig, TrapFrequencies};
use num_complex::Complex64;
use thiserror::Error;

/// Errors arising from axializing-drive inputs.
#[derive(Debug, Error, PartialEq)]
pub enum AxializationError {
    /// A drive parameter is out of its allowed domain.
    #[error("invalid axialization parameter {name}: {value} ({reason})")]
    InvalidParameter {
        /// Name of the offending field.
        name: &'static str,
        /// Value supplied.
        value: f64,
        /// Why the value is rejected.
        reason: &'static str,
    },
    /// Both the coupling strength m and the drive ε vanish, so no
    /// weak/strong comparison is possible.
    #[error("indeterminate drive regime: both the coupling strength m and the drive amplitude epsilon are zero")]
    Indeterminate,
}

/// The axializing quadrupole drive.
///
/// The drive oscillates at ω_a = ω_c + 2Δ; its strength parameter is
/// ε = eV0/(2mr0²) for a drive voltage V0 applied across a trap of ring
/// radius r0.  ε is stored nonnegative — a drive phase only reorients the
/// response ellipse and is absorbed into the coordinate origin of time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxializationDrive {
    /// Drive strength ε in s⁻² (≥ 0).
    pub epsilon: f64,
    /// Half detuning Δ of the drive from 2ω_r resonance, rad/s:
    /// ω_a = ω_c + 2Δ.
    pub half_detuning: f64,
}

impl AxializationDrive {
    /// Builds the drive from a physical drive voltage: ε = eV0/(2mr0²).
    ///
    /// # Errors
    ///
    /// [`AxializationError::InvalidParameter`] for a negative or non-finite
    /// voltage (the drive phase convention requires ε ≥ 0).
    pub fn from_voltage(
        drive_voltage: f64,
        trap: &TrapConfig,
        half_detuning: f64,
    ) -> Result<Self, AxializationError> {
        if !(drive_voltage >= 0.0 && drive_voltage.is_finite()) {
            return Err(AxializationError::InvalidParameter {
                name: "drive_voltage",
                value: drive_voltage,
                reason: "must be finite and >= 0",
            });
        }
        let epsilon = trap.ion_charge * drive_voltage
            / (2.0 * trap.ion_mass * trap.ring_radius * trap.ring_radius);
        let drive = AxializationDrive {
            epsilon,
            half_detuning,
        };
        drive.validate()?;
        Ok(drive)
    }

    /// Drive frequency ω_a = ω_c + 2Δ in rad/s.
    pub fn axial_frequency(&self, fr: &TrapFrequencies) -> f64 {
        fr.omega_c + 2.0 * self.half_detuning
    }

    /// Rotating-frame frequency ω_r = ω_c/2 + Δ in rad/s.
    pub fn rotating_frequency(&self, fr: &TrapFrequencies) -> f64 {
        fr.omega_c / 2.0 + self.half_detuning
    }

    /// Checks the domain of every field, reporting the first violation.
    pub fn validate(&self) -> Result<(), AxializationError> {
        if !(self.epsilon >= 0.0 && self.epsilon.is_finite()) {
            return Err(AxializationError::InvalidParameter {
                name: "epsilon",
                value: self.epsilon,
                reason: "must be finite and >= 0",
            });
        }
        if !self.half_detuning.is_finite() {
            return Err(AxializationError::InvalidParameter {
                name: "half_detuning",
                value: self.half_detuning,
                reason: "must be finite",
            });
        }
        Ok(())
    }
}

/// Which sign of the rotating-frame shift δ₀ a solution belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The +δ₀ root.
    Plus,
    /// The −δ₀ root.
    Minus,
}

impl Branch {
    /// Stable lowercase name, used in serialized output.
    pub fn name(&self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }
}

/// Which laboratory-frame frequency family a spectral line belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModeFamily {
    /// Lines near the modified cyclotron frequency ω_c′.
    Cyclotron,
    /// Lines near the magnetron frequency ω_m.
    Magnetron,
}

impl ModeFamily {
    /// Stable lowercase name, used in serialized output.
    pub fn name(&self) -> &'static str {
        match self {
            ModeFamily::Cyclotron => "cyclotron",
            ModeFamily::Magnetron => "magnetron",
        }
    }
}

/// Drive-strength regime relative to the cooling coupling strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DriveRegime {
    /// (ε/ω₁)² < 0.1·m².
    Weak,
    /// Neither weak nor strong.
    Intermediate,
    /// (ε/ω₁)² > 10·m².
    Strong,
}

impl DriveRegime {
    /// Stable lowercase name, used in serialized output.
    pub fn name(&self) -> &'static str {
        match self {
            DriveRegime::Weak => "weak",
            DriveRegime::Intermediate => "intermediate",
            DriveRegime::Strong => "strong",
        }
    }
}

/// One spectral line of the driven, cooled radial motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSolution {
    /// Rotating-frame frequency shift δ₀ of this branch, rad/s (signed).
    pub delta0: f64,
    /// Damping rate γ₀ of this branch, s⁻¹ (positive damps).
    pub gamma0: f64,
    /// Laboratory-frame frequency of this line, rad/s:
    /// ω_c′ + Δ + δ₀ for the cyclotron family, ω_m + Δ − δ₀ for the
    /// magnetron family.
    pub lab_frequency: f64,
    /// Sign branch of δ₀.
    pub branch: Branch,
    /// Frequency family of this line.
    pub mode_family: ModeFamily,
    /// Amplitude of this line relative to the stronger line of the same
    /// branch, in [0, 1]: 1 marks the dominant line, values < 1/2 mark
    /// lines conventionally drawn thin in mode-spectrum plots.
    pub dominance: f64,
}

/// The discriminant N = Δ² − m²/4 + ε²/(4ω₁²) in rad²/s².
///
/// Its sign at Δ = 0 separates the sub-critical drive (N < 0: no frequency
/// splitting on resonance) from the super-critical drive (N > 0: the mode
/// lines split by 2δ₀, forming an avoided crossing).
pub fn mode_discriminant(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    drive: &AxializationDrive,
) -> f64 {
    let q = drive.epsilon / fr.omega_1;
    let d = drive.half_detuning;
    d * d - 0.25 * co.m * co.m + 0.25 * q * q
}

/// Nonnegative root δ₀ of the mode-shift quartic
/// δ₀⁴ − n·δ₀² − (Δm)²/4 = 0, evaluated in cancellation-free form.
///
/// `coupling_n` is the discriminant N and `delta_m_product` the product Δm.
/// The returned δ₀ satisfies the quartic with relative residual at machine
/// precision for every sign combination, including n < 0 with |Δm| ≪ |n|
/// where the naive formula √((n + √(n² + Δ²m²))/2) suffers catastrophic
/// cancellation.
pub fn mode_shift_root(coupling_n: f64, delta_m_product: f64) -> f64 {
    let x = delta_m_product * delta_m_product;
    let s = if x == 0.0 {
        // Pure biquadratic: δ₀² = max(N, 0).
        coupling_n.max(0.0)
    } else if coupling_n >= 0.0 {
        0.5 * (coupling_n + f64::hypot(coupling_n, delta_m_product))
    } else {
        // δ₀² = (N + √(N² + x))/2 rewritten as x/(2(√(N² + x) − N)),
        // which avoids subtracting nearly equal quantities when N < 0.
        x / (2.0 * (f64::hypot(coupling_n, delta_m_product) - coupling_n))
    };
    s.sqrt()
}

/// Branch shift and damping pair: (δ₀, γ₀ − β/2) for the + branch; the −
/// branch is the negation of both.
fn shift_and_damping_offset(coupling_n: f64, delta_m_product: f64) -> (f64, f64) {
    let delta0 = mode_shift_root(coupling_n, delta_m_product);
    let offset = if delta0 > 0.0 {
        delta_m_product / (2.0 * delta0)
    } else {
        // Degenerate δ₀ = 0 (only at Δm = 0): the quartic factorises and
        // the damping offset is ±√(−N) for sub-critical N, zero otherwise.
        (-coupling_n).max(0.0).sqrt()
    };
    (delta0, offset)
}

/// Solves for the four spectral lines of the driven, cooled ion.
///
/// Returns the lines ordered by family then branch:
/// `[cyclotron+, cyclotron−, magnetron+, magnetron−]`.
///
/// # Errors
///
/// [`AxializationError::InvalidParameter`] when the drive is out of domain
/// or ω₁ ≤ 0.  Use [`drive_validity_warnings`] to detect parameters outside
/// the perturbative regime the closed forms were derived in.
pub fn solve_modes(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    drive: &AxializationDrive,
) -> Result<[ModeSolution; 4], AxializationError> {
    drive.validate()?;
    if !(fr.omega_1 > 0.0) {
        return Err(AxializationError::InvalidParameter {
            name: "omega_1",
            value: fr.omega_1,
            reason: "must be > 0 for distinct radial modes",
        });
    }
    let delta = drive.half_detuning;
    let n = mode_discriminant(co, fr, drive);
    let (delta0, gamma_offset) = shift_and_damping_offset(n, delta * co.m);
    let rates = cooling_rates(co, fr);
    let half_beta = co.beta / 2.0;

    let make = |branch: Branch| -> [ModeSolution; 2] {
        let (d0, g0) = match branch {
            Branch::Plus => (delta0, half_beta + gamma_offset),
            Branch::Minus => (-delta0, half_beta - gamma_offset),
        };
        // Relative line amplitudes of this branch from the homogeneous
        // linear system of the coupled modes: the cyclotron-family line
        // amplitude A and magnetron-family line amplitude B satisfy
        // A·P_A = εB* and B*·P_B = εA with
        // P_A ∝ (δ₀ + Δ) + i(γ₀ − γ_cyc), P_B ∝ (δ₀ − Δ) + i(γ₀ − γ_mag),
        // so |B/A| = √(|P_A|/|P_B|).
        let p_a = Complex64::new(d0 + delta, g0 - rates.gamma_cyclotron).norm();
        let p_b = Complex64::new(d0 - delta, g0 - rates.gamma_magnetron).norm();
        let cyclotron_dominance = if p_b >= p_a { 1.0 } else { (p_b / p_a).sqrt() };
        let magnetron_dominance = if p_a >= p_b { 1.0 } else { (p_a / p_b).sqrt() };
        [
            ModeSolution {
                delta0: d0,
                gamma0: g0,
                lab_frequency: fr.omega_c_prime + delta + d0,
                branch,
                mode_family: ModeFamily::Cyclotron,
                dominance: cyclotron_dominance,
            },
            ModeSolution {
                delta0: d0,
                gamma0: g0,
                lab_frequency: fr.omega_m + delta - d0,
                branch,
                mode_family: ModeFamily::Magnetron,
                dominance: magnetron_dominance,
            },
        ]
    };

    let [cyc_plus, mag_plus] = make(Branch::Plus);
    let [cyc_minus, mag_minus] = make(Branch::Minus);
    Ok([cyc_plus, cyc_minus, mag_plus, mag_minus])
}

/// Residual of the pairwise damping identity γ₀(+) + γ₀(−) − β.
///
/// The Δm/2δ₀ contributions cancel between the two branches, so the
/// residual is zero up to rounding for every drive, including the
/// degenerate δ₀ = 0 case where both branch rates are β/2 ± √(−N).
pub fn damping_sum_check(solutions: &[ModeSolution; 4], co: &CoolingCoefficients) -> f64 {
    let gamma_plus = solutions
        .iter()
        .find(|s| s.branch == Branch::Plus)
        .expect("solve_modes always returns both branches")
        .gamma0;
    let gamma_minus = solutions
        .iter()
        .find(|s| s.branch == Branch::Minus)
        .expect("solve_modes always returns both branches")
        .gamma0;
    gamma_plus + gamma_minus - co.beta
}

/// Classifies the drive strength relative to the cooling coupling strength.
///
/// Weak when (ε/ω₁)² < 0.1·m², strong when (ε/ω₁)² > 10·m², intermediate
/// otherwise.  The factor-of-ten thresholds are a reporting convention; the
/// closed forms do not change between regimes.
///
/// # Errors
///
/// [`AxializationError::Indeterminate`] when m = 0 and ε = 0.
pub fn classify_regime(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    drive: &AxializationDrive,
) -> Result<DriveRegime, AxializationError> {
    let m2 = co.m * co.m;
    let q = drive.epsilon / fr.omega_1;
    let q2 = q * q;
    if m2 == 0.0 && q2 == 0.0 {
        return Err(AxializationError::Indeterminate);
    }
    Ok(if q2 < 0.1 * m2 {
        DriveRegime::Weak
    } else if q2 > 10.0 * m2 {
        DriveRegime::Strong
    } else {
        DriveRegime::Intermediate
    })
}

/// Gap between the two laboratory-frame branch frequencies at drive
/// resonance (Δ = 0), in rad/s.
///
/// Equal to 2δ₀(Δ=0) = √(max((ε/ω₁)² − m², 0)): zero for a sub-critical
/// drive, approaching ε/ω₁ in the strong-drive limit.  This is the size of
/// the avoided crossing in a frequency-versus-Δ sweep.
pub fn avoided_crossing_gap(
    co: &CoolingCoefficients,
    fr: &TrapFrequencies,
    drive: &AxializationDrive,
) -> f64 {
    let q = drive.epsilon / fr.omega_1;
    (q * q - co.m * co.m).max(0.0).sqrt()
}

/// Warnings when the rotating-frame model is pushed outside its design
/// regime: the drive must be perturbative (ε ≤ 0.1·ω₁²) and near resonance
/// (|Δ| ≤ 0.1·ω₁).  Advisories only; the closed forms stay well defined.
pub fn drive_validity_warnings(fr: &TrapFrequencies, drive: &AxializationDrive) -> Vec<String> {
    let mut warnings = Vec::new();
    let w1 = fr.omega_1;
    if drive.epsilon > 0.1 * w1 * w1 {
        warnings.push(format!(
            "axializing drive is not perturbative: epsilon/omega_1^2 = {:.3e} (> 0.1); rotating-frame solutions are unreliable",
            drive.epsilon / (w1 * w1)
        ));
    }
    if drive.half_detuning.abs() > 0.1 * w1 {
        warnings.push(format!(
            "drive detuning is not small: |Delta|/omega_1 = {:.3e} (> 0.1); rotating-frame solutions are unreliable",
            drive.half_detuning.abs() / w1
        ));
    }
    warnings
}
