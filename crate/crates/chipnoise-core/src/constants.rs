//! Physical constants (CODATA 2018) and centralized unit conversions.
//!
//! All internal arithmetic is SI; public interfaces speak µΩ·cm for
//! resistivity, µm for lengths, MHz for frequencies and gauss for fields.

/// Vacuum permeability µ₀ [N/A²].
pub const MU_0: f64 = 1.256_637_062_12e-6;
/// Boltzmann constant k_B [J/K].
pub const K_B: f64 = 1.380_649e-23;
/// Reduced Planck constant ħ [J·s].
pub const HBAR: f64 = 1.054_571_817e-34;
/// Bohr magneton µ_B [J/T].
pub const MU_B: f64 = 9.274_010_078_3e-24;

/// Resistivity of gold at 300 K [µΩ·cm]; the normalization standard used
/// throughout the screening and noise modules.
pub const RHO_AU_300K_UOHM_CM: f64 = 2.21;

/// Reference temperature for the gold standard, in K.
pub const T_REF_K: f64 = 300.0;

pub const UOHM_CM_TO_OHM_M: f64 = 1e-8;
pub const UM_TO_M: f64 = 1e-6;
pub const PER_UM_TO_PER_M: f64 = 1e6;
pub const GAUSS_TO_TESLA: f64 = 1e-4;
pub const MHZ_TO_HZ: f64 = 1e6;
pub const A_PER_CM2_TO_A_PER_M2: f64 = 1e4;
