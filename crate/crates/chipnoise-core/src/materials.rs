//! Resistivity models for pure metals and dilute binary alloys.
//!
//! A pure metal is modeled as ρ(T) = ρ₀ + ρ_ph(T): a temperature-independent
//! residual term set by the residual-resistance ratio ϱ = ρ(300 K)/ρ₀, plus a
//! phonon term from the Bloch–Grüneisen law calibrated so the model
//! reproduces the room-temperature resistivity. A dilute alloy keeps the
//! solvent's phonon term (Matthiessen's rule) and replaces the residual by a
//! term linear in the solute concentration.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quad;

/// Upper integration cutoff for the Bloch–Grüneisen integral; the integrand
/// decays like z⁵e⁻ᶻ, so anything beyond contributes < 1e-16 of the total.
const BG_Z_CUTOFF: f64 = 60.0;

/// Relative tolerance for the phonon-integral quadrature.
const BG_REL_TOL: f64 = 1e-9;

/// Concentration beyond which the linear residual-vs-concentration model is
/// no longer trustworthy (ordering effects may set in).
pub const ALLOY_LINEARITY_LIMIT_AT_PCT: f64 = 15.0;

/// Phonon resistivity ρ_ph(T) = A·(T/Θ)⁵·∫₀^{Θ/T} z⁵eᶻ/(eᶻ−1)² dz [µΩ·cm].
///
/// `amplitude` is the prefactor A in µΩ·cm. Returns 0 at T = 0 and a domain
/// error for negative temperatures or non-positive Θ. The quadrature is
/// accurate to better than 1e-6 relative.
pub fn bloch_gruneisen(t_k: f64, theta_k: f64, amplitude: f64) -> Result<f64> {
    if !(t_k >= 0.0) {
        return Err(Error::Domain("temperature must be non-negative"));
    }
    if !(theta_k > 0.0) {
        return Err(Error::Domain("Debye temperature must be positive"));
    }
    if t_k == 0.0 {
        return Ok(0.0);
    }
    let x_max = (theta_k / t_k).min(BG_Z_CUTOFF);
    let integral = quad::integrate(&bg_integrand, 0.0, x_max, BG_REL_TOL);
    let ratio = t_k / theta_k;
    Ok(amplitude * ratio * ratio * ratio * ratio * ratio * integral)
}

/// z⁵eᶻ/(eᶻ−1)², evaluated through expm1 so the z → 0 limit (→ z³) is
/// computed without cancellation.
fn bg_integrand(z: f64) -> f64 {
    if z == 0.0 {
        return 0.0;
    }
    let em1 = libm::expm1(z);
    z * z * z * z * z * (em1 + 1.0) / (em1 * em1)
}

/// Solve for the Bloch–Grüneisen amplitude A such that the phonon term alone
/// accounts for the non-residual part of the room-temperature resistivity:
/// ρ_ph(300 K) = ρ(300 K)·(1 − 1/ϱ). Linear in A, so a single division.
pub fn calibrate_bg_amplitude(rho_room_uohm_cm: f64, theta_k: f64, rrr: f64) -> Result<f64> {
    if !(rho_room_uohm_cm > 0.0) {
        return Err(Error::Domain("room-temperature resistivity must be positive"));
    }
    if !(rrr > 1.0) {
        return Err(Error::Domain("residual-resistance ratio must exceed 1"));
    }
    let unit_phonon = bloch_gruneisen(300.0, theta_k, 1.0)?;
    Ok(rho_room_uohm_cm * (1.0 - 1.0 / rrr) / unit_phonon)
}

/// Tabulated ρ_ph(T) override: (T in K, ρ_ph in µΩ·cm) pairs sorted by T.
///
/// Queries interpolate linearly inside the table, follow a T⁵ law below the
/// first entry and extrapolate linearly above the last (the physically
/// correct limits of phonon resistivity on both sides).
#[derive(Debug, Clone, PartialEq)]
pub struct PhononTable {
    points: Vec<(f64, f64)>,
}

impl PhononTable {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Domain("phonon table needs at least two points"));
        }
        for pair in points.windows(2) {
            if !(pair[1].0 > pair[0].0) {
                return Err(Error::Domain("phonon table temperatures must increase"));
            }
        }
        if points.iter().any(|&(t, r)| !(t > 0.0) || !(r >= 0.0)) {
            return Err(Error::Domain("phonon table entries must be positive"));
        }
        Ok(Self { points })
    }

    pub fn value(&self, t_k: f64) -> f64 {
        let pts = &self.points;
        let (t0, r0) = pts[0];
        if t_k <= t0 {
            let s = t_k / t0;
            return r0 * s * s * s * s * s;
        }
        let (tn, rn) = pts[pts.len() - 1];
        if t_k >= tn {
            let (tp, rp) = pts[pts.len() - 2];
            return rn + (rn - rp) / (tn - tp) * (t_k - tn);
        }
        let idx = pts.partition_point(|&(t, _)| t <= t_k);
        let (ta, ra) = pts[idx - 1];
        let (tb, rb) = pts[idx];
        ra + (rb - ra) / (tb - ta) * (t_k - ta)
    }
}

/// A pure metal's resistivity model.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialRecord {
    pub name: String,
    /// Debye temperature Θ in K.
    pub theta_k: f64,
    /// ρ(300 K) [µΩ·cm].
    pub rho_room_uohm_cm: f64,
    /// Residual-resistance ratio ϱ = ρ(300 K)/ρ₀ (dimensionless, > 1).
    pub rrr: f64,
    /// Bloch–Grüneisen amplitude A [µΩ·cm], calibrated at construction.
    pub bg_amplitude_uohm_cm: f64,
    /// Optional measured ρ_ph(T) table that replaces the model curve.
    pub phonon_table: Option<PhononTable>,
}

impl MaterialRecord {
    pub fn new(name: &str, theta_k: f64, rho_room_uohm_cm: f64, rrr: f64) -> Result<Self> {
        if !(theta_k > 0.0) {
            return Err(Error::Domain("Debye temperature must be positive"));
        }
        let bg_amplitude_uohm_cm = calibrate_bg_amplitude(rho_room_uohm_cm, theta_k, rrr)?;
        Ok(Self {
            name: String::from(name),
            theta_k,
            rho_room_uohm_cm,
            rrr,
            bg_amplitude_uohm_cm,
            phonon_table: None,
        })
    }

    pub fn with_phonon_table(mut self, table: PhononTable) -> Self {
        self.phonon_table = Some(table);
        self
    }

    /// Same metal recalibrated to a different residual-resistance ratio.
    pub fn with_rrr(&self, rrr: f64) -> Result<Self> {
        let mut rec = Self::new(&self.name, self.theta_k, self.rho_room_uohm_cm, rrr)?;
        rec.phonon_table = self.phonon_table.clone();
        Ok(rec)
    }
}

/// Dilute binary alloy: solvent metal plus a solute at concentration x.
/// Its residual resistivity is `residual_slope · x`; the phonon term is the
/// solvent's, unchanged by the solute.
#[derive(Debug, Clone, PartialEq)]
pub struct AlloySpec {
    pub solvent: MaterialRecord,
    pub solute_name: String,
    /// Solute concentration x [at.%].
    pub concentration_at_pct: f64,
    /// dρ₀/dx [µΩ·cm per at.%].
    pub residual_slope: f64,
}

impl AlloySpec {
    pub fn new(
        solvent: MaterialRecord,
        solute_name: &str,
        concentration_at_pct: f64,
        residual_slope: f64,
    ) -> Result<Self> {
        if !(concentration_at_pct >= 0.0) {
            return Err(Error::Domain("alloy concentration must be non-negative"));
        }
        if !(residual_slope > 0.0) {
            return Err(Error::Domain("alloy residual slope must be positive"));
        }
        Ok(Self {
            solvent,
            solute_name: String::from(solute_name),
            concentration_at_pct,
            residual_slope,
        })
    }

    /// True above the concentration where the linear ρ₀(x) model starts to
    /// break down; callers should warn but may proceed.
    pub fn beyond_linear_range(&self) -> bool {
        self.concentration_at_pct > ALLOY_LINEARITY_LIMIT_AT_PCT
    }

    pub fn label(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(
            s,
            "{}+{}%{}",
            self.solvent.name, self.concentration_at_pct, self.solute_name
        );
        s
    }
}

/// Anything with a decomposition ρ(T) = ρ₀ + ρ_ph(T).
pub trait Conductor {
    /// Temperature-independent residual resistivity ρ₀ [µΩ·cm].
    fn residual_resistivity(&self) -> f64;

    /// Phonon resistivity ρ_ph(T) [µΩ·cm].
    fn phonon_resistivity(&self, t_k: f64) -> Result<f64>;

    /// Total resistivity ρ₀ + ρ_ph(T) [µΩ·cm].
    fn resistivity(&self, t_k: f64) -> Result<f64> {
        Ok(self.residual_resistivity() + self.phonon_resistivity(t_k)?)
    }

    /// True when the phonon term comes from measured data points instead of
    /// the smooth model (optimizers then avoid derivative-based searches).
    fn has_tabulated_phonon(&self) -> bool {
        false
    }
}

impl Conductor for MaterialRecord {
    fn residual_resistivity(&self) -> f64 {
        self.rho_room_uohm_cm / self.rrr
    }

    fn phonon_resistivity(&self, t_k: f64) -> Result<f64> {
        if !(t_k >= 0.0) {
            return Err(Error::Domain("temperature must be non-negative"));
        }
        match &self.phonon_table {
            Some(table) => Ok(table.value(t_k)),
            None => bloch_gruneisen(t_k, self.theta_k, self.bg_amplitude_uohm_cm),
        }
    }

    fn has_tabulated_phonon(&self) -> bool {
        self.phonon_table.is_some()
    }
}

impl Conductor for AlloySpec {
    fn residual_resistivity(&self) -> f64 {
        // The solvent's own residual is second-order next to the solute term
        // and is not counted here.
        self.residual_slope * self.concentration_at_pct
    }

    fn phonon_resistivity(&self, t_k: f64) -> Result<f64> {
        self.solvent.phonon_resistivity(t_k)
    }

    fn has_tabulated_phonon(&self) -> bool {
        self.solvent.has_tabulated_phonon()
    }
}

/// A wire's resolved thermodynamic state: its temperature and resistivity.
/// Either derived from a material model or pinned directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingPoint {
    pub temperature_k: f64,
    pub rho_uohm_cm: f64,
}

impl OperatingPoint {
    pub fn new(temperature_k: f64, rho_uohm_cm: f64) -> Result<Self> {
        if !(temperature_k > 0.0) {
            return Err(Error::Domain("temperature must be positive"));
        }
        if !(rho_uohm_cm > 0.0) {
            return Err(Error::Domain("resistivity must be positive"));
        }
        Ok(Self {
            temperature_k,
            rho_uohm_cm,
        })
    }

    pub fn of<C: Conductor>(conductor: &C, temperature_k: f64) -> Result<Self> {
        let rho = conductor.resistivity(temperature_k)?;
        Self::new(temperature_k, rho)
    }
}

/// Residual-slope entry for a binary alloy family (solvent, solute).
#[derive(Debug, Clone, PartialEq)]
pub struct AlloyFamily {
    pub solvent: String,
    pub solute: String,
    /// dρ₀/dx [µΩ·cm per at.%].
    pub slope_uohm_cm_per_at_pct: f64,
}

/// Immutable collection of metal records and alloy families.
#[derive(Debug, Clone, Default)]
pub struct MaterialDb {
    metals: BTreeMap<String, MaterialRecord>,
    alloys: Vec<AlloyFamily>,
}

impl MaterialDb {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert_metal(&mut self, record: MaterialRecord) -> Result<()> {
        if self.metals.contains_key(&record.name) {
            return Err(Error::DuplicateName(record.name));
        }
        self.metals.insert(record.name.clone(), record);
        Ok(())
    }

    pub fn insert_alloy(&mut self, family: AlloyFamily) -> Result<()> {
        if !(family.slope_uohm_cm_per_at_pct > 0.0) {
            return Err(Error::Domain("alloy residual slope must be positive"));
        }
        if self
            .alloys
            .iter()
            .any(|a| a.solvent == family.solvent && a.solute == family.solute)
        {
            let mut key = family.solvent;
            key.push('-');
            key.push_str(&family.solute);
            return Err(Error::DuplicateName(key));
        }
        self.alloys.push(family);
        Ok(())
    }

    pub fn metal(&self, name: &str) -> Result<&MaterialRecord> {
        self.metals
            .get(name)
            .ok_or_else(|| Error::UnknownName(String::from(name)))
    }

    /// Metals in deterministic (lexicographic) order.
    pub fn metals(&self) -> impl Iterator<Item = &MaterialRecord> {
        self.metals.values()
    }

    pub fn alloy_families(&self) -> &[AlloyFamily] {
        &self.alloys
    }

    pub fn alloy_family(&self, solvent: &str, solute: &str) -> Result<&AlloyFamily> {
        self.alloys
            .iter()
            .find(|a| a.solvent == solvent && a.solute == solute)
            .ok_or_else(|| {
                let mut key = String::from(solvent);
                key.push('-');
                key.push_str(solute);
                Error::UnknownName(key)
            })
    }

    /// Build a concrete alloy at concentration `x` from a registered family.
    pub fn make_alloy(&self, solvent: &str, solute: &str, x_at_pct: f64) -> Result<AlloySpec> {
        let family = self.alloy_family(solvent, solute)?;
        let record = self.metal(solvent)?.clone();
        AlloySpec::new(record, solute, x_at_pct, family.slope_uohm_cm_per_at_pct)
    }

    pub fn len_metals(&self) -> usize {
        self.metals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.metals.is_empty() && self.alloys.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Converged value of ∫₀^∞ z⁵eᶻ/(eᶻ−1)² dz, frozen from the independent
    /// fixed-grid oracle in `bg_integral_matches_independent_oracle`.
    const BG_INTEGRAL_INF: f64 = 124.4313;

    fn gold() -> MaterialRecord {
        MaterialRecord::new("Au", 170.0, 2.21, 100.0).unwrap()
    }

    fn silver() -> MaterialRecord {
        MaterialRecord::new("Ag", 225.0, 1.63, 100.0).unwrap()
    }

    fn copper() -> MaterialRecord {
        MaterialRecord::new("Cu", 343.0, 1.7, 100.0).unwrap()
    }

    /// Independent oracle: trapezoid-free fixed-grid Simpson over [0, 60]
    /// with 60k panels, no shared code with the adaptive integrator.
    fn bg_integral_oracle() -> f64 {
        let n = 60_000usize;
        let h = 60.0 / n as f64;
        let f = |z: f64| {
            if z == 0.0 {
                0.0
            } else {
                let e = libm::exp(z);
                z.powi(5) * e / ((e - 1.0) * (e - 1.0))
            }
        };
        let mut acc = 0.0;
        for i in 0..n {
            let x0 = i as f64 * h;
            acc += h / 6.0 * (f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h));
        }
        acc
    }

    #[test]
    fn bg_integral_matches_independent_oracle() {
        let oracle = bg_integral_oracle();
        assert!(
            (oracle - BG_INTEGRAL_INF).abs() / BG_INTEGRAL_INF < 1e-6,
            "oracle gave {oracle}"
        );
    }

    #[test]
    fn bg_zero_temperature_vanishes() {
        assert_eq!(bloch_gruneisen(0.0, 300.0, 5.0).unwrap(), 0.0);
    }

    #[test]
    fn bg_negative_temperature_rejected() {
        assert!(bloch_gruneisen(-1.0, 300.0, 5.0).is_err());
    }

    #[test]
    fn bg_low_temperature_t5_law() {
        // T = Θ/20: the integral is converged, so ρ_ph = 124.4313·A·(T/Θ)⁵.
        let theta = 300.0;
        let t = theta / 20.0;
        let a = 3.7;
        let got = bloch_gruneisen(t, theta, a).unwrap();
        let want = BG_INTEGRAL_INF * a * (t / theta).powi(5);
        assert!((got / want - 1.0).abs() < 1e-3, "got {got}, want {want}");
    }

    #[test]
    fn bg_high_temperature_linear_law() {
        // T = 10Θ: integrand ≈ z³ ⇒ integral ≈ (Θ/T)⁴/4 ⇒ ρ_ph ≈ A·T/(4Θ).
        let theta = 250.0;
        let t = 10.0 * theta;
        let a = 2.0;
        let got = bloch_gruneisen(t, theta, a).unwrap();
        let want = a * t / (4.0 * theta);
        assert!((got / want - 1.0).abs() < 1e-2, "got {got}, want {want}");
    }

    #[test]
    fn bg_monotone_in_temperature_and_amplitude() {
        let mut prev = 0.0;
        for i in 1..=60 {
            let t = 6.0 * i as f64;
            let v = bloch_gruneisen(t, 320.0, 4.0).unwrap();
            assert!(v > prev, "not increasing at T={t}");
            prev = v;
        }
        let lo = bloch_gruneisen(100.0, 320.0, 1.0).unwrap();
        let hi = bloch_gruneisen(100.0, 320.0, 2.0).unwrap();
        assert!((hi / lo - 2.0).abs() < 1e-12);
    }

    #[test]
    fn bg_continuous_at_integration_cutoff() {
        // The upper limit saturates at BG_Z_CUTOFF once T < Θ/cutoff; the
        // discarded tail is ~1e-16 of the integral, so ρ_ph stays smooth
        // across that temperature.
        let theta = 300.0;
        let t_star = theta / BG_Z_CUTOFF;
        let below = bloch_gruneisen(t_star * (1.0 - 1e-9), theta, 1.0).unwrap();
        let above = bloch_gruneisen(t_star * (1.0 + 1e-9), theta, 1.0).unwrap();
        assert!((above - below).abs() <= 1e-7 * above, "{below} vs {above}");
    }

    #[test]
    fn bg_low_t_loglog_slope_is_five() {
        let theta = 343.0;
        for &t in &[theta / 60.0, theta / 40.0, theta / 25.0] {
            let r1 = bloch_gruneisen(t, theta, 1.0).unwrap();
            let r2 = bloch_gruneisen(t * 1.05, theta, 1.0).unwrap();
            let slope = libm::log(r2 / r1) / libm::log(1.05);
            assert!((slope - 5.0).abs() < 0.1, "slope {slope} at T={t}");
        }
    }

    #[test]
    fn bg_high_t_second_derivative_small() {
        // Exact high-T curvature is ρ'' = −AΘ/(36T³), i.e. Θ²/(9T²) of
        // ρ_ph/T²: 4.4e-3 at T = 5Θ, below 1e-3 only for T ≳ 10.5Θ.
        let theta = 200.0;
        let a = 1.0;
        let curvature_ratio = |t: f64| {
            let h = t * 1e-3;
            let r_m = bloch_gruneisen(t - h, theta, a).unwrap();
            let r_0 = bloch_gruneisen(t, theta, a).unwrap();
            let r_p = bloch_gruneisen(t + h, theta, a).unwrap();
            let second = (r_p - 2.0 * r_0 + r_m) / (h * h);
            second.abs() / (r_0 / (t * t))
        };
        assert!(curvature_ratio(5.0 * theta) < 5e-3);
        assert!(curvature_ratio(12.0 * theta) < 1e-3);
    }

    #[test]
    fn calibration_hits_room_temperature() {
        let rec = gold();
        let rho300 = rec.resistivity(300.0).unwrap();
        assert!((rho300 - 2.21).abs() < 1e-12);
    }

    #[test]
    fn calibration_zero_residual_limit() {
        // ϱ → ∞: the phonon term alone carries the full room-T resistivity.
        let a = calibrate_bg_amplitude(2.21, 170.0, 1e15).unwrap();
        let rho_ph = bloch_gruneisen(300.0, 170.0, a).unwrap();
        assert!((rho_ph - 2.21).abs() < 1e-9);
    }

    #[test]
    fn calibration_linear_in_room_resistivity() {
        let a1 = calibrate_bg_amplitude(2.21, 170.0, 100.0).unwrap();
        let a2 = calibrate_bg_amplitude(4.42, 170.0, 100.0).unwrap();
        assert!((a2 / a1 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn residual_is_one_percent_at_rrr_100() {
        let rec = gold();
        assert!((rec.residual_resistivity() - 0.0221).abs() < 1e-15);
    }

    #[test]
    fn copper_matches_reference_points() {
        let cu = copper();
        assert!((cu.resistivity(300.0).unwrap() - 1.7).abs() < 1e-12);
        let rho_he = cu.resistivity(4.2).unwrap();
        assert!((rho_he - 0.017).abs() < 1e-4, "rho(4.2K) = {rho_he}");
    }

    #[test]
    fn alloy_residual_is_linear() {
        let slope = 2.21 / 6.0;
        let alloy = AlloySpec::new(silver(), "Au", 6.0, slope).unwrap();
        assert!((alloy.residual_resistivity() - 2.21).abs() < 1e-12);
        let zero = AlloySpec::new(silver(), "Au", 0.0, slope).unwrap();
        assert_eq!(zero.residual_resistivity(), 0.0);
    }

    #[test]
    fn alloy_resistivity_at_77k() {
        // Ag+5%Au at 77 K: residual 1.842 plus silver's phonon term; the
        // total should land within 10% of 2.1 µΩ·cm.
        let alloy = AlloySpec::new(silver(), "Au", 5.0, 2.21 / 6.0).unwrap();
        let rho = alloy.resistivity(77.0).unwrap();
        assert!((rho - 2.1).abs() / 2.1 < 0.10, "rho = {rho}");
    }

    #[test]
    fn alloy_zero_temperature_is_residual() {
        let alloy = AlloySpec::new(silver(), "Au", 3.0, 2.21 / 6.0).unwrap();
        assert_eq!(
            alloy.resistivity(0.0).unwrap(),
            alloy.residual_resistivity()
        );
    }

    #[test]
    fn alloy_linearity_warning_threshold() {
        let ok = AlloySpec::new(silver(), "Au", 10.0, 0.4).unwrap();
        assert!(!ok.beyond_linear_range());
        let warn = AlloySpec::new(silver(), "Au", 20.0, 0.4).unwrap();
        assert!(warn.beyond_linear_range());
    }

    #[test]
    fn resistivity_never_below_residual() {
        let cu = copper();
        for i in 0..=30 {
            let t = 10.0 * i as f64;
            let rho = cu.resistivity(t).unwrap();
            assert!(rho >= cu.residual_resistivity());
        }
    }

    #[test]
    fn matthiessen_additivity_independent_of_temperature() {
        let a5 = AlloySpec::new(silver(), "Au", 5.0, 2.21 / 6.0).unwrap();
        let a0 = AlloySpec::new(silver(), "Au", 0.0, 2.21 / 6.0).unwrap();
        let mut deltas = Vec::new();
        for &t in &[4.2, 20.0, 77.0, 150.0, 300.0] {
            deltas.push(a5.resistivity(t).unwrap() - a0.resistivity(t).unwrap());
        }
        for d in &deltas {
            assert!((d - deltas[0]).abs() < 1e-12);
        }
    }

    #[test]
    fn phonon_table_override_interpolates() {
        let table = PhononTable::new(alloc::vec![(10.0, 0.01), (100.0, 1.0), (300.0, 3.0)]).unwrap();
        let rec = copper().with_phonon_table(table);
        // interior: linear between (100, 1.0) and (300, 3.0)
        assert!((rec.phonon_resistivity(200.0).unwrap() - 2.0).abs() < 1e-12);
        // below: T⁵ scaling off the first point
        let lo = rec.phonon_resistivity(5.0).unwrap();
        assert!((lo - 0.01 * 0.5f64.powi(5)).abs() < 1e-12);
        // above: linear extrapolation
        let hi = rec.phonon_resistivity(400.0).unwrap();
        assert!((hi - 4.0).abs() < 1e-12);
    }

    #[test]
    fn phonon_table_rejects_bad_input() {
        assert!(PhononTable::new(alloc::vec![(10.0, 0.01)]).is_err());
        assert!(PhononTable::new(alloc::vec![(10.0, 0.01), (10.0, 0.02)]).is_err());
    }

    #[test]
    fn db_rejects_duplicates_and_reports_unknown() {
        let mut db = MaterialDb::new();
        db.insert_metal(gold()).unwrap();
        assert!(matches!(
            db.insert_metal(gold()),
            Err(Error::DuplicateName(_))
        ));
        assert!(matches!(db.metal("Xx"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn db_builds_alloys_from_families() {
        let mut db = MaterialDb::new();
        db.insert_metal(silver()).unwrap();
        db.insert_alloy(AlloyFamily {
            solvent: String::from("Ag"),
            solute: String::from("Au"),
            slope_uohm_cm_per_at_pct: 2.21 / 6.0,
        })
        .unwrap();
        let alloy = db.make_alloy("Ag", "Au", 6.0).unwrap();
        assert!((alloy.residual_resistivity() - 2.21).abs() < 1e-12);
        assert!(db.make_alloy("Ag", "Ge", 1.0).is_err());
    }

    #[test]
    fn rrr_must_exceed_one() {
        assert!(MaterialRecord::new("X", 200.0, 1.0, 1.0).is_err());
        assert!(MaterialRecord::new("X", 200.0, 1.0, 0.5).is_err());
    }
}
