//! Analytical model of laser cooling and axialization of a single ion in a
//! Penning trap, with a Floquet verification oracle and a parameter-sweep
//! command-line tool.
//!
//! The crate computes, in closed form:
//!
//! * the trap eigenfrequencies of the axial, modified-cyclotron and
//!   magnetron motions ([`trap`]);
//! * the linearised radiation-pressure coefficients of an offset,
//!   red-detuned cooling beam and the resulting damping rates of the two
//!   radial modes ([`cooling`]);
//! * the mode structure under a near-resonant quadrupole "axializing" drive
//!   that couples the cyclotron and magnetron motions, including the
//!   avoided-crossing shape of the mode lines and the redistribution of
//!   damping ([`axialization`]);
//! * the steady-state response to an additional weak dipole excitation,
//!   used to probe the coupled modes ([`response`]).
//!
//! Every closed-form result can be cross-checked against direct numerical
//! integration of the full time-dependent equations of motion via the
//! [`floquet`] module, which builds the one-period monodromy matrix of the
//! driven system and extracts its characteristic exponents.
//!
//! Angular frequencies are in rad/s throughout the library; the sweep layer
//! converts to and from kHz exactly once at the interface.

pub mod axialization;
pub mod constants;
pub mod cooling;
pub mod floquet;
pub mod response;
pub mod sweep;
pub mod trap;

pub use axialization::{
    avoided_crossing_gap, classify_regime, damping_sum_check, solve_modes, AxializationDrive,
    AxializationError, Branch, DriveRegime, ModeFamily, ModeSolution,
};
pub use cooling::{
    cooling_map, cooling_rates, cooling_roots_exact, linearize_force, linearize_force_for_trap,
    scattering_rate, validity_warnings, CoolingCoefficients, CoolingError, CoolingMapCell,
    CoolingRates, LaserConfig, LinearizeError,
};
pub use floquet::{
    counterrotating_error, demodulate, integrate, lab_frame_rhs, monodromy, DemodResult,
    FloquetError, IntegrationOptions, MonodromyResult, QuadrupoleModel, RadialState, SystemParams,
    Trajectory,
};
pub use response::{
    amplitude_ratio, phase_sweep, response, DriveSide, ExcitationDrive, ResponseError,
    ResponseSolution,
};
pub use trap::{compute_frequencies, frequencies_from_pair, TrapConfig, TrapError, TrapFrequencies};
