//! Material, temperature and composition screening against the
//! room-temperature gold standard.
//!
//! A chip material wins on both axes when its normalized noise T/ρ (relative
//! to gold at 300 K) and its normalized resistivity ρ/ρ_Au,300K are below 1
//! at its operating temperature. Pure metals are swept as-is; dilute alloys
//! add the solute concentration as a tunable knob, with the boundary
//! concentration pinning ρ(x, T) to the gold standard.

use alloc::string::String;
use alloc::vec::Vec;

use crate::constants::{RHO_AU_300K_UOHM_CM, T_REF_K};
use crate::error::{Error, Result};
use crate::geometry::{interp_factor, skin_depth};
use crate::materials::{AlloySpec, Conductor, MaterialDb, MaterialRecord, OperatingPoint};
use crate::noise::material_noise_norm;
use crate::solve;

/// One material at one temperature, located on the noise/resistivity plane.
#[derive(Debug, Clone, PartialEq)]
pub struct ScreenPoint {
    pub label: String,
    pub temperature_k: f64,
    pub rho_uohm_cm: f64,
    /// (T/ρ)/(300 K/ρ_Au,300K).
    pub noise_norm: f64,
    /// ρ/ρ_Au,300K.
    pub rho_norm: f64,
    /// Both normalized coordinates below 1.
    pub better_than_gold: bool,
}

fn screen_point(label: &str, t_k: f64, rho_uohm_cm: f64) -> ScreenPoint {
    let noise_norm = material_noise_norm(t_k, rho_uohm_cm);
    let rho_norm = rho_uohm_cm / RHO_AU_300K_UOHM_CM;
    ScreenPoint {
        label: String::from(label),
        temperature_k: t_k,
        rho_uohm_cm,
        noise_norm,
        rho_norm,
        better_than_gold: noise_norm < 1.0 && rho_norm < 1.0,
    }
}

/// Normalized noise and resistivity of every metal in the database at
/// temperature `t_k`, in lexicographic label order. `rrr` overrides the
/// residual-resistance ratio of all records when given.
pub fn screen_metals(db: &MaterialDb, t_k: f64, rrr: Option<f64>) -> Result<Vec<ScreenPoint>> {
    if !(t_k > 0.0) {
        return Err(Error::Domain("temperature must be positive"));
    }
    let mut out = Vec::with_capacity(db.len_metals());
    for record in db.metals() {
        let rho = match rrr {
            Some(r) => record.with_rrr(r)?.resistivity(t_k)?,
            None => record.resistivity(t_k)?,
        };
        out.push(screen_point(&record.name, t_k, rho));
    }
    Ok(out)
}

/// Normalized noise T/ρ(x, T) of one alloy over a temperature grid.
pub fn alloy_curve(alloy: &AlloySpec, t_grid_k: &[f64]) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::with_capacity(t_grid_k.len());
    for &t in t_grid_k {
        if !(t > 0.0) {
            return Err(Error::Domain("temperature must be positive"));
        }
        let rho = alloy.resistivity(t)?;
        out.push((t, material_noise_norm(t, rho)));
    }
    Ok(out)
}

/// Temperature window scanned for the noise peak.
pub const PEAK_SEARCH_RANGE_K: (f64, f64) = (4.2, 300.0);

/// Interior maximum of T/ρ(T) over [4.2, 300] K, or `None` when the maximum
/// sits on either boundary (the curve is then monotone over the window).
///
/// The smooth model is searched by golden section; conductors carrying a
/// tabulated phonon curve go through a 1 K grid argmax instead to avoid
/// chasing interpolation kinks.
pub fn peak_temperature<C: Conductor>(conductor: &C) -> Result<Option<f64>> {
    if conductor.has_tabulated_phonon() {
        return peak_temperature_gridded(conductor);
    }
    let (lo, hi) = PEAK_SEARCH_RANGE_K;
    let objective = |t: f64| -> f64 {
        match conductor.resistivity(t) {
            Ok(rho) if rho > 0.0 => t / rho,
            _ => f64::NEG_INFINITY,
        }
    };
    let edge_margin = 0.5;
    let t_peak = solve::golden_max(objective, lo, hi, 1e-6);
    if t_peak < lo + edge_margin || t_peak > hi - edge_margin {
        return Ok(None);
    }
    // Golden section assumes unimodality; double-check against the edges.
    if objective(t_peak) <= objective(lo).max(objective(hi)) {
        return Ok(None);
    }
    Ok(Some(t_peak))
}

/// Grid route for tabulated resistivity data: argmax of T/ρ on a 1 K grid,
/// `None` on boundary maxima.
pub fn peak_temperature_gridded<C: Conductor>(conductor: &C) -> Result<Option<f64>> {
    let (lo, hi) = PEAK_SEARCH_RANGE_K;
    let mut best_t = lo;
    let mut best = f64::NEG_INFINITY;
    let mut t = lo;
    while t <= hi {
        let rho = conductor.resistivity(t)?;
        let v = t / rho;
        if v > best {
            best = v;
            best_t = t;
        }
        t += 1.0;
    }
    if (best_t - lo).abs() < 1.5 || (best_t - hi).abs() < 1.5 {
        return Ok(None);
    }
    Ok(Some(best_t))
}

/// Solute concentration x* at which the alloy's total resistivity at `t_k`
/// equals `rho_target`: x* = (ρ_target − ρ_ph,solvent(T))/slope. Errors when
/// the target is below the solvent's phonon floor, naming that floor.
pub fn boundary_concentration(
    solvent: &MaterialRecord,
    slope_uohm_cm_per_at_pct: f64,
    t_k: f64,
    rho_target_uohm_cm: f64,
) -> Result<f64> {
    if !(slope_uohm_cm_per_at_pct > 0.0) {
        return Err(Error::Domain("alloy residual slope must be positive"));
    }
    let floor = solvent.phonon_resistivity(t_k)?;
    if rho_target_uohm_cm < floor {
        return Err(Error::InfeasibleTarget {
            min_rho_uohm_cm: floor,
        });
    }
    Ok((rho_target_uohm_cm - floor) / slope_uohm_cm_per_at_pct)
}

/// Largest noise reduction available from an alloy pinned to the gold
/// standard resistivity while cooled to `t_k`: the factor 300 K/T.
pub fn max_noise_reduction(t_k: f64) -> Result<f64> {
    if !(t_k > 0.0 && t_k <= T_REF_K) {
        return Err(Error::Domain("temperature must lie in (0, 300] K"));
    }
    Ok(T_REF_K / t_k)
}

/// Distance at which the skin-depth-corrected noise of two wire states
/// crosses: root of (T_a/ρ_a)g(d, δ_a) = (T_b/ρ_b)g(d, δ_b) with g the
/// interpolation factor. `None` when one side wins over the whole range.
/// Symmetric in its two arguments by construction.
pub fn crossover_distance(
    a: OperatingPoint,
    b: OperatingPoint,
    f_mhz: f64,
    d_range_um: (f64, f64),
) -> Result<Option<f64>> {
    let (d_lo, d_hi) = d_range_um;
    if !(d_lo > 0.0) || !(d_hi > d_lo) {
        return Err(Error::Domain("distance range must be positive and ordered"));
    }
    // Canonical argument order makes the result exactly exchange-invariant.
    let (first, second) = if (a.temperature_k, a.rho_uohm_cm) <= (b.temperature_k, b.rho_uohm_cm) {
        (a, b)
    } else {
        (b, a)
    };
    let delta_a = skin_depth(first.rho_uohm_cm, f_mhz)?;
    let delta_b = skin_depth(second.rho_uohm_cm, f_mhz)?;
    let level = |p: &OperatingPoint, delta: f64, d: f64| {
        material_noise_norm(p.temperature_k, p.rho_uohm_cm)
            * interp_factor(d, delta).unwrap_or(f64::NAN)
    };
    let diff = |d: f64| level(&first, delta_a, d) - level(&second, delta_b, d);
    // Require a strict sign change: identical states (diff ≡ 0) and ranges
    // where one material wins throughout both report no crossover.
    let f_lo = diff(d_lo);
    let f_hi = diff(d_hi);
    if !(f_lo * f_hi < 0.0) {
        return Ok(None);
    }
    Ok(solve::bisect(diff, d_lo, d_hi, 1e-10, 200))
}
