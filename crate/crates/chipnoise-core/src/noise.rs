//! Magnetic noise spectral density near a warm conductor, generic transition
//! rates, and the hyperfine spin-flip rate driving trap loss.
//!
//! In the quasi-static regime (skin depth large against distance and wire
//! thickness) the spectral density factorizes into a material part T/ρ and
//! the geometry tensor: S_B^{ij} = µ₀²k_B T/(4π²ρ) · Y_ij, independent of
//! frequency. Transition rates follow from Fermi's golden rule,
//! Γ = Σ_ij ⟨0|µ_i|f⟩⟨f|µ_j|0⟩ S_B^{ij} / ħ².

use crate::constants::{
    GAUSS_TO_TESLA, HBAR, K_B, MHZ_TO_HZ, MU_0, MU_B, PER_UM_TO_PER_M, RHO_AU_300K_UOHM_CM,
    T_REF_K, UOHM_CM_TO_OHM_M,
};
use crate::error::{Error, Result};
use crate::geometry::{TrapPoint, YTensor};

/// Complex magnetic-moment matrix element, in units of the Bohr magneton.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Moment {
    pub re: f64,
    pub im: f64,
}

impl Moment {
    pub fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Magnetic noise spectral density tensor [T²/Hz].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseTensor {
    elems: [[f64; 3]; 3],
    temperature_k: f64,
    rho_uohm_cm: f64,
}

impl NoiseTensor {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.elems[i][j]
    }

    pub fn as_matrix(&self) -> &[[f64; 3]; 3] {
        &self.elems
    }

    /// Dimensionless material factor (T/ρ)/(300 K/ρ_Au,300K) of this tensor:
    /// 1 for gold at room temperature by definition.
    pub fn material_norm(&self) -> f64 {
        material_noise_norm(self.temperature_k, self.rho_uohm_cm)
    }
}

/// (T/ρ) relative to gold at 300 K: the normalized noise level a material
/// produces for fixed geometry.
pub fn material_noise_norm(t_k: f64, rho_uohm_cm: f64) -> f64 {
    (t_k / T_REF_K) * (RHO_AU_300K_UOHM_CM / rho_uohm_cm)
}

/// Quasi-static spectral density S_B^{ij} = µ₀²k_B T/(4π²ρ)·Y_ij.
///
/// `y` carries 1/µm entries; the result is in T²/Hz. Zero resistivity is a
/// domain error (the quasi-static regime breaks down long before).
pub fn spectral_density(t_k: f64, rho_uohm_cm: f64, y: &YTensor) -> Result<NoiseTensor> {
    if !(t_k >= 0.0) {
        return Err(Error::Domain("temperature must be non-negative"));
    }
    if !(rho_uohm_cm > 0.0) {
        return Err(Error::Domain("resistivity must be positive"));
    }
    let rho = rho_uohm_cm * UOHM_CM_TO_OHM_M;
    let pi = core::f64::consts::PI;
    let prefactor = MU_0 * MU_0 * K_B * t_k / (4.0 * pi * pi * rho);
    let mut elems = [[0.0; 3]; 3];
    for (i, row) in elems.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = prefactor * y.get(i, j) * PER_UM_TO_PER_M;
        }
    }
    Ok(NoiseTensor {
        elems,
        temperature_k: t_k,
        rho_uohm_cm,
    })
}

/// Golden-rule transition rate Γ = Σ_ij µ_i* µ_j S^{ij}/ħ² [1/s] for moment
/// matrix elements given in units of µ_B. Real and non-negative for a
/// symmetric spectral tensor.
pub fn transition_rate(moments: &[Moment; 3], s: &NoiseTensor) -> Result<f64> {
    if moments.iter().any(|m| !m.is_finite()) {
        return Err(Error::Domain("moment matrix elements must be finite"));
    }
    let mut gamma = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            // Re(µ_i* µ_j); the imaginary parts cancel over the symmetric sum.
            let re = moments[i].re * moments[j].re + moments[i].im * moments[j].im;
            gamma += re * s.get(i, j);
        }
    }
    Ok(gamma * MU_B * MU_B / (HBAR * HBAR))
}

/// |⟨F, m−1|F_j|F, m⟩|² for an axis j transverse to the quantization axis:
/// (F(F+1) − m(m−1))/4.
pub fn spin_ladder_element(f_total: f64, m: f64) -> Result<f64> {
    validate_spin(f_total, m)?;
    if m - 1.0 < -f_total - 1e-9 {
        return Err(Error::Domain("no Zeeman level below m"));
    }
    Ok((f_total * (f_total + 1.0) - m * (m - 1.0)) / 4.0)
}

fn validate_spin(f_total: f64, m: f64) -> Result<()> {
    if !(f_total >= 0.0) {
        return Err(Error::Domain("total spin must be non-negative"));
    }
    let twice_f = 2.0 * f_total;
    let twice_m = 2.0 * m;
    if (twice_f - libm::round(twice_f)).abs() > 1e-9 || (twice_m - libm::round(twice_m)).abs() > 1e-9
    {
        return Err(Error::Domain("spin quantum numbers must be (half-)integers"));
    }
    let diff = f_total - m;
    if (diff - libm::round(diff)).abs() > 1e-9 {
        return Err(Error::Domain("F and m must differ by an integer"));
    }
    if m.abs() > f_total + 1e-9 {
        return Err(Error::Domain("|m| must not exceed F"));
    }
    Ok(())
}

/// How the trap's noise frequency is pinned: directly, or through the bias
/// field at the trap center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BiasField {
    Gauss(f64),
    LarmorMhz(f64),
}

/// Trap state: location, bias field (or Larmor frequency), hyperfine state
/// and field direction (unit vector, along the wire axis by default).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapSpec {
    pub point: TrapPoint,
    pub field: BiasField,
    pub f_total: f64,
    pub m: f64,
    pub g_f: f64,
    pub direction: [f64; 3],
}

/// Wire-axis unit vector, the default quantization direction.
pub const WIRE_AXIS: [f64; 3] = [0.0, 1.0, 0.0];

impl TrapSpec {
    pub fn new(point: TrapPoint, field: BiasField, f_total: f64, m: f64, g_f: f64) -> Result<Self> {
        validate_spin(f_total, m)?;
        match field {
            BiasField::Gauss(b) if !(b > 0.0) => {
                return Err(Error::Domain("bias field must be positive"))
            }
            BiasField::LarmorMhz(f) if !(f > 0.0) => {
                return Err(Error::Domain("Larmor frequency must be positive"))
            }
            _ => {}
        }
        Ok(Self {
            point,
            field,
            f_total,
            m,
            g_f,
            direction: WIRE_AXIS,
        })
    }

    /// Rb-87 in |F=2, m=2⟩ with g_F = 1/2, the workhorse trapped state.
    pub fn rb87_stretched(point: TrapPoint, field: BiasField) -> Result<Self> {
        Self::new(point, field, 2.0, 2.0, 0.5)
    }

    /// Larmor frequency of the trap in MHz, whichever way the field was given.
    pub fn larmor_mhz(&self) -> f64 {
        match self.field {
            BiasField::LarmorMhz(f) => f,
            BiasField::Gauss(b) => larmor_frequency_mhz(b),
        }
    }

    fn quantized_along_wire(&self) -> bool {
        let d = self.direction;
        let norm = libm::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        norm > 0.0 && (d[1].abs() / norm) > 1.0 - 1e-9
    }
}

/// Larmor frequency f = µ_B·B/(2πħ) in MHz for a bias field in gauss.
/// µ_B/(2πħ) = 1.3996 MHz/G.
pub fn larmor_frequency_mhz(b_gauss: f64) -> f64 {
    let b = b_gauss * GAUSS_TO_TESLA;
    MU_B * b / (2.0 * core::f64::consts::PI * HBAR) / MHZ_TO_HZ
}

/// Spin-flip rate |F,m⟩ → |F,m−1⟩ above the wire, for a bias field along the
/// wire axis:
///
/// γ = µ₀²µ_B²g_F²k_B T/(4π²ρħ²) · (Y₁₁ + Y₃₃)·|⟨F,m|F_j|F,m−1⟩|²
///
/// Both transverse axes carry the same ladder element; off-diagonal tensor
/// elements drop out because the transverse moment components are 90° out of
/// phase. m = −F has no lower level and returns rate 0.
pub fn spin_flip_rate(t_k: f64, rho_uohm_cm: f64, y: &YTensor, trap: &TrapSpec) -> Result<f64> {
    if !trap.quantized_along_wire() {
        return Err(Error::Domain("bias field must point along the wire axis"));
    }
    if (trap.m + trap.f_total).abs() < 1e-9 {
        return Ok(0.0); // stretched low state: nothing below it
    }
    let ladder = spin_ladder_element(trap.f_total, trap.m)?;
    let s = spectral_density(t_k, rho_uohm_cm, y)?;
    let transverse = s.get(0, 0) + s.get(2, 2);
    Ok(trap.g_f * trap.g_f * ladder * transverse * MU_B * MU_B / (HBAR * HBAR))
}

/// Golden-rule rate for a unit moment budget on gold at 300 K with
/// Y·1µm = 1; the prefactor that normalizes all quasi-static rates.
/// CODATA constants give ≈ 58 s⁻¹.
pub fn reference_rate_per_s() -> f64 {
    let pi = core::f64::consts::PI;
    let rho = RHO_AU_300K_UOHM_CM * UOHM_CM_TO_OHM_M;
    MU_0 * MU_0 * MU_B * MU_B * K_B * T_REF_K * PER_UM_TO_PER_M
        / (4.0 * pi * pi * rho * HBAR * HBAR)
}
