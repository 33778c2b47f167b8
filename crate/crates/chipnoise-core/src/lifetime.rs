//! Population dynamics of the two-step spin-flip cascade
//! |2,2⟩ ↔ |2,1⟩ → |2,0⟩ and the resulting trap lifetimes.
//!
//! Because the surface temperature dwarfs the Zeeman splitting, the upper
//! transition is bidirectional with equal rates, while atoms reaching the
//! untrapped |2,0⟩ level leave immediately. With γ₁₀ = (3/2)γ₂₁ the trapped
//! population has the closed form
//! P_mag(t) = [6e^(−γ₂₁t/2) − e^(−3γ₂₁t)]/5, whose 1/e time is ≈ 2.364/γ₂₁.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{interp_factor, skin_depth, y_slab, SlabGeometry, TrapPoint};
use crate::materials::OperatingPoint;
use crate::noise::{spin_flip_rate, TrapSpec};
use crate::solve;

/// The two cascade rates; for a field along the wire their ratio is fixed at
/// γ₁₀/γ₂₁ = 3/2 by the ladder matrix elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CascadeRates {
    pub gamma21_per_s: f64,
    pub gamma10_per_s: f64,
}

impl CascadeRates {
    /// Build the standard cascade from the upper rate alone.
    pub fn from_gamma21(gamma21_per_s: f64) -> Result<Self> {
        if !(gamma21_per_s > 0.0) {
            return Err(Error::Domain("cascade rate must be positive"));
        }
        Ok(Self {
            gamma21_per_s,
            gamma10_per_s: 1.5 * gamma21_per_s,
        })
    }
}

/// Trapped-state survival probability P_mag(t) for the standard cascade.
/// Depends on t only through γ₂₁·t and decreases strictly from 1 to 0.
pub fn survival(t_s: f64, gamma21_per_s: f64) -> Result<f64> {
    if !(t_s >= 0.0) {
        return Err(Error::Domain("time must be non-negative"));
    }
    if !(gamma21_per_s > 0.0) {
        return Err(Error::Domain("cascade rate must be positive"));
    }
    let u = gamma21_per_s * t_s;
    Ok((6.0 * libm::exp(-0.5 * u) - libm::exp(-3.0 * u)) / 5.0)
}

/// One sample of the numerically integrated cascade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CascadeState {
    pub t_s: f64,
    pub p22: f64,
    pub p21: f64,
    pub p20: f64,
}

impl CascadeState {
    pub fn trapped(&self) -> f64 {
        self.p22 + self.p21
    }

    pub fn total(&self) -> f64 {
        self.p22 + self.p21 + self.p20
    }
}

/// Reference integrator for the cascade rate equations
///
///   dP₂₂/dt = −γ₂₁(P₂₂ − P₂₁)
///   dP₂₁/dt =  γ₂₁(P₂₂ − P₂₁) − γ₁₀P₂₁
///   dP₂₀/dt =  γ₁₀P₂₁
///
/// with γ₁₀ = 1.5·γ₂₁, by classical fixed-step RK4 on the given time grid
/// (strictly increasing, starting at t ≥ 0). Exists to validate the closed
/// form, not to replace it.
pub fn solve_cascade_numeric(gamma21_per_s: f64, t_grid_s: &[f64]) -> Result<Vec<CascadeState>> {
    if !(gamma21_per_s > 0.0) {
        return Err(Error::Domain("cascade rate must be positive"));
    }
    if t_grid_s.is_empty() || t_grid_s[0] < 0.0 {
        return Err(Error::Domain("time grid must start at t >= 0"));
    }
    for pair in t_grid_s.windows(2) {
        if !(pair[1] > pair[0]) {
            return Err(Error::Domain("time grid must be strictly increasing"));
        }
    }

    let g21 = gamma21_per_s;
    let g10 = 1.5 * gamma21_per_s;
    let deriv = |p: [f64; 3]| -> [f64; 3] {
        let flow = g21 * (p[0] - p[1]);
        [-flow, flow - g10 * p[1], g10 * p[1]]
    };

    // Fixed internal step small against the fastest time scale.
    let h_max = 1e-3 / g10.max(g21);
    let mut state = [1.0, 0.0, 0.0];
    let mut t = 0.0;
    let mut out = Vec::with_capacity(t_grid_s.len());

    let record = |t: f64, p: [f64; 3]| CascadeState {
        t_s: t,
        p22: p[0],
        p21: p[1],
        p20: p[2],
    };

    for &target in t_grid_s {
        while t < target {
            let h = h_max.min(target - t);
            let k1 = deriv(state);
            let mid1 = add_scaled(state, k1, 0.5 * h);
            let k2 = deriv(mid1);
            let mid2 = add_scaled(state, k2, 0.5 * h);
            let k3 = deriv(mid2);
            let end = add_scaled(state, k3, h);
            let k4 = deriv(end);
            for i in 0..3 {
                state[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
            t += h;
        }
        out.push(record(target, state));
    }
    Ok(out)
}

fn add_scaled(p: [f64; 3], k: [f64; 3], s: f64) -> [f64; 3] {
    [p[0] + s * k[0], p[1] + s * k[1], p[2] + s * k[2]]
}

/// Effective (1/e) lifetime of the cascade: the root of P_mag(τ) = 1/e by
/// bracketed bisection. τ·γ₂₁ ≈ 2.3637 for the 3/2 cascade.
pub fn effective_lifetime(gamma21_per_s: f64) -> Result<f64> {
    if !(gamma21_per_s > 0.0) {
        return Err(Error::Domain("cascade rate must be positive"));
    }
    let target = 1.0 / core::f64::consts::E;
    let f = |t: f64| survival(t, gamma21_per_s).unwrap_or(0.0) - target;
    let lo = 0.1 / gamma21_per_s;
    let hi = 10.0 / gamma21_per_s;
    solve::bisect(f, lo, hi, 1e-12, 200)
        .ok_or(Error::Domain("survival root not bracketed"))
}

/// Lifetime estimate that chains the two levels one way:
/// τ = 1/γ₂₁ + 1/γ₁₀. Underestimates the cascade because it ignores
/// repopulation of the upper level.
pub fn simple_lifetime(rates: CascadeRates) -> Result<f64> {
    if !(rates.gamma21_per_s > 0.0) || !(rates.gamma10_per_s > 0.0) {
        return Err(Error::Domain("cascade rates must be positive"));
    }
    Ok(1.0 / rates.gamma21_per_s + 1.0 / rates.gamma10_per_s)
}

/// Harmonic combination of the magnetic lifetime with the distance-
/// independent technical ceiling: τ_trap = (τ_mag⁻¹ + τ_tech⁻¹)⁻¹.
/// `tau_tech_s` may be infinite.
pub fn total_lifetime(tau_mag_s: f64, tau_tech_s: f64) -> Result<f64> {
    if !(tau_mag_s > 0.0) || !(tau_tech_s > 0.0) {
        return Err(Error::Domain("lifetimes must be positive"));
    }
    Ok(1.0 / (1.0 / tau_mag_s + 1.0 / tau_tech_s))
}

/// Which cascade-to-lifetime reduction to use for τ_mag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LifetimeModel {
    /// τ_mag = 1/γ₂₁ + 1/γ₁₀ (one-way cascade).
    Simple,
    /// τ_mag from the 1/e time of the full bidirectional cascade.
    Complete,
}

/// One height sample of a lifetime-vs-distance curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifetimePoint {
    pub height_um: f64,
    pub gamma21_per_s: f64,
    pub tau_mag_s: f64,
    pub tau_trap_s: f64,
}

/// Inputs for [`lifetime_curve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifetimeCurveParams {
    /// Wire temperature and resistivity.
    pub wire: OperatingPoint,
    pub geom: SlabGeometry,
    /// Trap template; its height is replaced per curve point, its lateral
    /// offset, state and field carry over.
    pub trap: TrapSpec,
    /// Technical lifetime ceiling in s; may be infinite.
    pub tau_tech_s: f64,
    pub model: LifetimeModel,
    /// Multiply the noise by the short-skin-depth interpolation factor.
    pub skin_correction: bool,
}

/// Trap lifetime versus height above the wire: per height, the slab tensor,
/// the spin-flip rate, τ_mag from the chosen model and the technical
/// combination. Output order follows the input heights.
pub fn lifetime_curve(params: &LifetimeCurveParams, heights_um: &[f64]) -> Result<Vec<LifetimePoint>> {
    if heights_um.iter().any(|&d| !(d > 0.0)) {
        return Err(Error::Domain("heights must be positive"));
    }
    if !(params.tau_tech_s > 0.0) {
        return Err(Error::Domain("technical lifetime must be positive"));
    }
    let delta_um = if params.skin_correction {
        Some(skin_depth(params.wire.rho_uohm_cm, params.trap.larmor_mhz())?)
    } else {
        None
    };

    let mut out = Vec::with_capacity(heights_um.len());
    for &d in heights_um {
        let point = TrapPoint::new(params.trap.point.x_um, d)?;
        let y = y_slab(params.geom, point)?;
        let mut trap = params.trap;
        trap.point = point;
        let mut gamma21 = spin_flip_rate(
            params.wire.temperature_k,
            params.wire.rho_uohm_cm,
            &y,
            &trap,
        )?;
        if let Some(delta) = delta_um {
            gamma21 *= interp_factor(d, delta)?;
        }
        let tau_mag = if gamma21 > 0.0 {
            match params.model {
                LifetimeModel::Simple => simple_lifetime(CascadeRates::from_gamma21(gamma21)?)?,
                LifetimeModel::Complete => effective_lifetime(gamma21)?,
            }
        } else {
            f64::INFINITY
        };
        let tau_trap = total_lifetime(tau_mag, params.tau_tech_s)?;
        out.push(LifetimePoint {
            height_um: d,
            gamma21_per_s: gamma21,
            tau_mag_s: tau_mag,
            tau_trap_s: tau_trap,
        });
    }
    Ok(out)
}
