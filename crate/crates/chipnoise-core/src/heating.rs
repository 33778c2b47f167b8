//! Ohmic temperature rise of a current-carrying chip wire.
//!
//! Two stages: a fast, contact-limited step that saturates at ΔT = hρj²/k,
//! and a slow logarithmic rise from heat spreading in the substrate,
//! ΔT_s = (hwρj²/2πλ)·ln(4π²λt/Cw²). Resistivity is treated as constant
//! across ΔT; an optional one-step re-evaluation of ρ at the raised
//! temperature is available for models that supply ρ(T).

use crate::constants::{A_PER_CM2_TO_A_PER_M2, UM_TO_M, UOHM_CM_TO_OHM_M};
use crate::error::{Error, Result};

/// Wire cross-section, drive and thermal environment.
///
/// Defaults carry a 5 µm × 1.4 µm gold-standard wire on a silicon-like
/// substrate for 30 s. The contact conductance `k` and the substrate pair
/// (λ, C) are calibrated round numbers, not measured data; override them
/// when the real stack is known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatingConfig {
    pub width_um: f64,
    /// Wire thickness h (the vertical extent).
    pub height_um: f64,
    pub rho_uohm_cm: f64,
    /// Current density j [A/cm²].
    pub current_density_a_cm2: f64,
    /// Contact/insulation-layer conductance k [W/(m²·K)].
    pub contact_conductance_w_m2k: f64,
    /// Substrate thermal conductivity λ [W/(m·K)].
    pub substrate_conductivity_w_mk: f64,
    /// Substrate volumetric heat capacity C [J/(m³·K)].
    pub substrate_heat_capacity_j_m3k: f64,
    /// Duration of the slow stage in s.
    pub duration_s: f64,
    /// Initial system temperature T₀ in K; shifts plots, not ΔT itself.
    pub base_temperature_k: f64,
}

impl Default for HeatingConfig {
    fn default() -> Self {
        Self {
            width_um: 5.0,
            height_um: 1.4,
            rho_uohm_cm: 2.21,
            current_density_a_cm2: 1e7,
            contact_conductance_w_m2k: 2.2e7,
            substrate_conductivity_w_mk: 150.0,
            substrate_heat_capacity_j_m3k: 1.6e6,
            duration_s: 30.0,
            base_temperature_k: 300.0,
        }
    }
}

impl HeatingConfig {
    fn validate(&self) -> Result<()> {
        let positive = self.width_um > 0.0
            && self.height_um > 0.0
            && self.rho_uohm_cm > 0.0
            && self.contact_conductance_w_m2k > 0.0
            && self.substrate_conductivity_w_mk > 0.0
            && self.substrate_heat_capacity_j_m3k > 0.0
            && self.base_temperature_k > 0.0;
        if !positive || !(self.duration_s >= 0.0) || !(self.current_density_a_cm2 >= 0.0) {
            return Err(Error::Domain("heating config entries must be positive"));
        }
        Ok(())
    }

    /// Areal heating power hρj² [W/m²].
    fn areal_power(&self) -> f64 {
        let h = self.height_um * UM_TO_M;
        let rho = self.rho_uohm_cm * UOHM_CM_TO_OHM_M;
        let j = self.current_density_a_cm2 * A_PER_CM2_TO_A_PER_M2;
        h * rho * j * j
    }
}

/// Steady-state value of the fast, contact-limited rise ΔT = hρj²/k, in K.
pub fn fast_rise(cfg: &HeatingConfig) -> Result<f64> {
    cfg.validate()?;
    Ok(cfg.areal_power() / cfg.contact_conductance_w_m2k)
}

/// Slow substrate-diffusion rise after `duration_s`, in K.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlowRise {
    pub delta_t_k: f64,
    /// False while 4π²λt ≤ Cw²: diffusion has not spread past the wire
    /// footprint yet and the logarithmic model returns 0.
    pub diffusive: bool,
}

pub fn slow_rise(cfg: &HeatingConfig) -> Result<SlowRise> {
    cfg.validate()?;
    let w = cfg.width_um * UM_TO_M;
    let lambda = cfg.substrate_conductivity_w_mk;
    let pi = core::f64::consts::PI;
    let log_arg = 4.0 * pi * pi * lambda * cfg.duration_s
        / (cfg.substrate_heat_capacity_j_m3k * w * w);
    if log_arg <= 1.0 {
        return Ok(SlowRise {
            delta_t_k: 0.0,
            diffusive: false,
        });
    }
    let delta_t_k = cfg.areal_power() * w / (2.0 * pi * lambda) * libm::log(log_arg);
    Ok(SlowRise {
        delta_t_k,
        diffusive: true,
    })
}

/// Total rise in K: fast step plus slow substrate stage.
pub fn total_rise(cfg: &HeatingConfig) -> Result<f64> {
    Ok(fast_rise(cfg)? + slow_rise(cfg)?.delta_t_k)
}

/// Total rise with one self-consistency pass: evaluate ρ at T₀, compute the
/// rise, re-evaluate ρ at T₀ + ΔT and recompute once.
pub fn total_rise_self_consistent<R>(cfg: &HeatingConfig, rho_at: R) -> Result<f64>
where
    R: Fn(f64) -> Result<f64>,
{
    let mut step = *cfg;
    step.rho_uohm_cm = rho_at(cfg.base_temperature_k)?;
    let first = total_rise(&step)?;
    step.rho_uohm_cm = rho_at(cfg.base_temperature_k + first)?;
    total_rise(&step)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_rise_reference_value() {
        // 1.4 µm × 2.21 µΩ·cm × (10⁷ A/cm²)² against k = 2.2e7 → ≈ 14 K.
        let cfg = HeatingConfig::default();
        let dt = fast_rise(&cfg).unwrap();
        assert!((dt - 14.06).abs() < 0.1, "fast = {dt}");
    }

    #[test]
    fn fast_rise_zero_current() {
        let cfg = HeatingConfig {
            current_density_a_cm2: 0.0,
            ..Default::default()
        };
        assert_eq!(fast_rise(&cfg).unwrap(), 0.0);
    }

    #[test]
    fn slow_rise_reference_value() {
        // w=5 µm, h=1.4 µm, ρ=2.21, λ=150, C=1.6e6, t=30 s, j=1e7 → ≈ 36 K.
        let cfg = HeatingConfig::default();
        let s = slow_rise(&cfg).unwrap();
        assert!(s.diffusive);
        assert!((s.delta_t_k - 36.46).abs() < 0.2, "slow = {}", s.delta_t_k);
    }

    #[test]
    fn slow_rise_pre_diffusive_boundary() {
        // Pick t so that 4π²λt = Cw² exactly: ln(1) = 0.
        let cfg = HeatingConfig::default();
        let w = cfg.width_um * UM_TO_M;
        let pi = core::f64::consts::PI;
        let t_star =
            cfg.substrate_heat_capacity_j_m3k * w * w / (4.0 * pi * pi * cfg.substrate_conductivity_w_mk);
        let boundary = HeatingConfig {
            duration_s: t_star,
            ..cfg
        };
        let s = slow_rise(&boundary).unwrap();
        assert_eq!(s.delta_t_k, 0.0);
        assert!(!s.diffusive);
        let just_after = HeatingConfig {
            duration_s: t_star * 1.001,
            ..cfg
        };
        assert!(slow_rise(&just_after).unwrap().diffusive);
    }

    #[test]
    fn total_rise_reference_values() {
        let cfg = HeatingConfig::default();
        let high = total_rise(&cfg).unwrap();
        assert!((40.0..=60.0).contains(&high), "total(1e7) = {high}");

        let low = HeatingConfig {
            current_density_a_cm2: 1e6,
            ..cfg
        };
        let small = total_rise(&low).unwrap();
        assert!((0.4..=0.6).contains(&small), "total(1e6) = {small}");
    }

    #[test]
    fn quadratic_current_scaling_exact() {
        let cfg = HeatingConfig::default();
        let reduced = HeatingConfig {
            current_density_a_cm2: cfg.current_density_a_cm2 / libm::sqrt(10.0),
            ..cfg
        };
        let ratio = total_rise(&cfg).unwrap() / total_rise(&reduced).unwrap();
        assert!((ratio - 10.0).abs() < 1e-9, "ratio = {ratio}");
    }

    #[test]
    fn rise_independent_of_base_temperature() {
        let a = total_rise(&HeatingConfig::default()).unwrap();
        let b = total_rise(&HeatingConfig {
            base_temperature_k: 4.2,
            ..Default::default()
        })
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn slow_rise_monotone_concave_in_time() {
        let cfg = HeatingConfig::default();
        let at = |t: f64| {
            slow_rise(&HeatingConfig {
                duration_s: t,
                ..cfg
            })
            .unwrap()
            .delta_t_k
        };
        let mut prev = at(1.0);
        let mut prev_gain = f64::INFINITY;
        for i in 2..=40 {
            let t = i as f64;
            let v = at(t);
            let gain = v - prev;
            assert!(v > prev, "not increasing at t={t}");
            assert!(gain < prev_gain, "not concave at t={t}");
            prev = v;
            prev_gain = gain;
        }
    }

    #[test]
    fn additivity_of_stages() {
        let cfg = HeatingConfig::default();
        let total = total_rise(&cfg).unwrap();
        let parts = fast_rise(&cfg).unwrap() + slow_rise(&cfg).unwrap().delta_t_k;
        assert_eq!(total, parts);
    }

    #[test]
    fn self_consistent_step_uses_raised_temperature() {
        // A resistivity model growing linearly with T must heat more than
        // the frozen-ρ(T₀) answer.
        let cfg = HeatingConfig {
            base_temperature_k: 300.0,
            ..Default::default()
        };
        let rho_model = |t: f64| Ok(2.21 * t / 300.0);
        let sc = total_rise_self_consistent(&cfg, rho_model).unwrap();
        let frozen = total_rise(&cfg).unwrap();
        assert!(sc > frozen, "sc = {sc}, frozen = {frozen}");
    }
}
