//! Geometry tensor Y_ij of a conductor seen from a trap point, plus skin
//! depth and the short-skin-depth interpolation factor.
//!
//! Coordinates: x across the wire width, y along the wire axis, z vertical.
//! A slab wire occupies x′ ∈ [−w/2, w/2], y′ ∈ (−∞, ∞), z′ ∈ [−t, 0]; the
//! trap sits at (x, 0, z) with z > 0 above the top surface.
//!
//! The tensor derives from X_ij = ½∫ d³x′ (x−x′)_i(x−x′)_j / |x−x′|⁶ over
//! the metal volume, via Y_ij = tr{X}δ_ij − X_ij. For the slab all four
//! nonzero elements have closed forms; for arbitrary unions of axis-aligned
//! boxes an adaptive Gauss–Legendre quadrature serves as the general route
//! (and as the independent oracle for the closed form).

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;

use libm::sqrt;

use crate::constants::{MHZ_TO_HZ, MU_0, UOHM_CM_TO_OHM_M};
use crate::error::{Error, Result};

/// Rectangular wire cross-section, infinite along its axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlabGeometry {
    pub width_um: f64,
    pub thickness_um: f64,
}

impl SlabGeometry {
    pub fn new(width_um: f64, thickness_um: f64) -> Result<Self> {
        if !(width_um > 0.0) || !(thickness_um > 0.0) {
            return Err(Error::Domain("wire width and thickness must be positive"));
        }
        Ok(Self {
            width_um,
            thickness_um,
        })
    }
}

/// Trap location relative to the wire: lateral offset x and height z above
/// the top surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapPoint {
    pub x_um: f64,
    pub z_um: f64,
}

impl TrapPoint {
    pub fn new(x_um: f64, z_um: f64) -> Result<Self> {
        if !(z_um > 0.0) {
            return Err(Error::Domain("trap height must be positive (outside the metal)"));
        }
        Ok(Self { x_um, z_um })
    }

    pub fn above_center(z_um: f64) -> Result<Self> {
        Self::new(0.0, z_um)
    }
}

/// Symmetric geometry tensor, entries in 1/µm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YTensor {
    elems: [[f64; 3]; 3],
}

impl YTensor {
    pub fn from_symmetric(elems: [[f64; 3]; 3]) -> Self {
        Self { elems }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.elems[i][j]
    }

    pub fn as_matrix(&self) -> &[[f64; 3]; 3] {
        &self.elems
    }

    pub fn xx(&self) -> f64 {
        self.elems[0][0]
    }

    pub fn yy(&self) -> f64 {
        self.elems[1][1]
    }

    pub fn zz(&self) -> f64 {
        self.elems[2][2]
    }

    /// The only off-diagonal element surviving slab symmetry.
    pub fn zx(&self) -> f64 {
        self.elems[2][0]
    }

    pub fn trace(&self) -> f64 {
        self.elems[0][0] + self.elems[1][1] + self.elems[2][2]
    }

    /// Sum of the two diagonal elements transverse to the wire axis, the
    /// combination driving spin flips for a field along the wire.
    pub fn transverse_sum(&self) -> f64 {
        self.elems[0][0] + self.elems[2][2]
    }
}

// Stable evaluations of the v-paired bracket differences f(u,c) − f(u,d).
// The raw kernels carry 1/u factors that blow up individually when the trap
// sits over a wire edge (u → 0); the rationalized forms below stay finite.

/// [√(u²+c²)/c − √(u²+d²)/d] / u, kernel of the trace bracket.
fn pair_diff_trace(u: f64, c: f64, d: f64) -> f64 {
    let ra = sqrt(u * u + c * c);
    let rb = sqrt(u * u + d * d);
    u * (d * d - c * c) / (c * d * (d * ra + c * rb))
}

/// [c/√(u²+c²) − d/√(u²+d²)] / u, kernel of the Y₁₁ correction.
fn pair_diff_xx(u: f64, c: f64, d: f64) -> f64 {
    let ra = sqrt(u * u + c * c);
    let rb = sqrt(u * u + d * d);
    u * (c * c - d * d) / (ra * rb * (c * rb + d * ra))
}

/// (u/c)/√(u²+c²) − (u/d)/√(u²+d²), kernel of the Y₃₃ correction.
fn pair_diff_zz(u: f64, c: f64, d: f64) -> f64 {
    let ra = sqrt(u * u + c * c);
    let rb = sqrt(u * u + d * d);
    u / (c * ra) - u / (d * rb)
}

/// 1/√(u²+c²) − 1/√(u²+d²), kernel of the Y₃₁ element.
fn pair_diff_zx(u: f64, c: f64, d: f64) -> f64 {
    1.0 / sqrt(u * u + c * c) - 1.0 / sqrt(u * u + d * d)
}

/// Closed-form geometry tensor of an infinite rectangular slab wire.
///
/// Each element is a double bracket \[\[f\]\] = f(a,c) − f(a,d) − f(b,c) + f(b,d)
/// over u ∈ [a, b] = [−w/2 − x, w/2 − x] and v ∈ [c, d] = [−z−t, −z]. The
/// diagonal elements are built from trace shares, so the identity
/// Y₂₂ = (3/8)·tr{Y} holds to machine precision by construction.
pub fn y_slab(geom: SlabGeometry, p: TrapPoint) -> Result<YTensor> {
    if !(p.z_um > 0.0) {
        return Err(Error::Domain("trap must sit above the wire surface"));
    }
    let a = -0.5 * geom.width_um - p.x_um;
    let b = 0.5 * geom.width_um - p.x_um;
    let c = -p.z_um - geom.thickness_um;
    let d = -p.z_um;

    let pi = core::f64::consts::PI;
    let bracket_tr = pair_diff_trace(a, c, d) - pair_diff_trace(b, c, d);
    let y22 = -(3.0 * pi / 16.0) * bracket_tr;
    let trace_share = y22; // (3/8)·tr

    let y11 = trace_share + (pi / 16.0) * (pair_diff_xx(a, c, d) - pair_diff_xx(b, c, d));
    let y33 = trace_share + (pi / 16.0) * (pair_diff_zz(a, c, d) - pair_diff_zz(b, c, d));
    // Sign fixed to the defining integral Y₃₁ = −X₃₁ (metal left of and
    // below a trap at x > 0 anti-correlates B_x and B_z); the volume
    // quadrature independently confirms it.
    let y31 = -(pi / 16.0) * (pair_diff_zx(a, c, d) - pair_diff_zx(b, c, d));

    Ok(YTensor::from_symmetric([
        [y11, 0.0, y31],
        [0.0, y22, 0.0],
        [y31, 0.0, y33],
    ]))
}

/// Axis-aligned box, corners in µm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Box3 {
    pub lo: [f64; 3],
    pub hi: [f64; 3],
}

impl Box3 {
    pub fn new(lo: [f64; 3], hi: [f64; 3]) -> Result<Self> {
        for k in 0..3 {
            if !(hi[k] > lo[k]) {
                return Err(Error::Domain("box must have positive extent on every axis"));
            }
        }
        Ok(Self { lo, hi })
    }

    fn contains(&self, p: [f64; 3]) -> bool {
        (0..3).all(|k| p[k] >= self.lo[k] && p[k] <= self.hi[k])
    }

    fn distance_to(&self, p: [f64; 3]) -> f64 {
        let mut d2 = 0.0;
        for ((&x, &lo), &hi) in p.iter().zip(&self.lo).zip(&self.hi) {
            let d = if x < lo {
                lo - x
            } else if x > hi {
                x - hi
            } else {
                0.0
            };
            d2 += d * d;
        }
        sqrt(d2)
    }

    fn diameter(&self) -> f64 {
        let dx = self.hi[0] - self.lo[0];
        let dy = self.hi[1] - self.lo[1];
        let dz = self.hi[2] - self.lo[2];
        sqrt(dx * dx + dy * dy + dz * dz)
    }

    fn longest_axis(&self) -> usize {
        let mut axis = 0;
        let mut best = self.hi[0] - self.lo[0];
        for k in 1..3 {
            let ext = self.hi[k] - self.lo[k];
            if ext > best {
                best = ext;
                axis = k;
            }
        }
        axis
    }

    fn split(&self) -> (Box3, Box3) {
        let axis = self.longest_axis();
        let mid = 0.5 * (self.lo[axis] + self.hi[axis]);
        let mut left = *self;
        let mut right = *self;
        left.hi[axis] = mid;
        right.lo[axis] = mid;
        (left, right)
    }
}

/// Symmetric moment accumulator: xx, yy, zz, xy, xz, yz.
type Sym6 = [f64; 6];

fn sym6_add(a: &mut Sym6, b: &Sym6) {
    for k in 0..6 {
        a[k] += b[k];
    }
}

fn sym6_sub(a: &mut Sym6, b: &Sym6) {
    for k in 0..6 {
        a[k] -= b[k];
    }
}

/// ½·r_i r_j / |r|⁶ at displacement r = p − q.
fn moment_integrand(p: [f64; 3], q: [f64; 3]) -> Sym6 {
    let r = [p[0] - q[0], p[1] - q[1], p[2] - q[2]];
    let r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    let w = 0.5 / (r2 * r2 * r2);
    [
        w * r[0] * r[0],
        w * r[1] * r[1],
        w * r[2] * r[2],
        w * r[0] * r[1],
        w * r[0] * r[2],
        w * r[1] * r[2],
    ]
}

const GL2_NODES: [f64; 2] = [-0.577_350_269_189_625_7, 0.577_350_269_189_625_7];
const GL2_WEIGHTS: [f64; 2] = [1.0, 1.0];
const GL3_NODES: [f64; 3] = [-0.774_596_669_241_483_4, 0.0, 0.774_596_669_241_483_4];
const GL3_WEIGHTS: [f64; 3] = [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0];

fn gl_cell(cell: &Box3, p: [f64; 3], nodes: &[f64], weights: &[f64]) -> Sym6 {
    let half = [
        0.5 * (cell.hi[0] - cell.lo[0]),
        0.5 * (cell.hi[1] - cell.lo[1]),
        0.5 * (cell.hi[2] - cell.lo[2]),
    ];
    let mid = [
        0.5 * (cell.hi[0] + cell.lo[0]),
        0.5 * (cell.hi[1] + cell.lo[1]),
        0.5 * (cell.hi[2] + cell.lo[2]),
    ];
    let jac = half[0] * half[1] * half[2];
    let mut acc = [0.0; 6];
    for (ix, &nx) in nodes.iter().enumerate() {
        let qx = mid[0] + half[0] * nx;
        for (iy, &ny) in nodes.iter().enumerate() {
            let qy = mid[1] + half[1] * ny;
            let wxy = weights[ix] * weights[iy];
            for (iz, &nz) in nodes.iter().enumerate() {
                let q = [qx, qy, mid[2] + half[2] * nz];
                let w = wxy * weights[iz] * jac;
                let f = moment_integrand(p, q);
                for k in 0..6 {
                    acc[k] += w * f[k];
                }
            }
        }
    }
    acc
}

struct Cell {
    geom: Box3,
    value: Sym6,
    err: f64,
    seq: u64,
}

impl Cell {
    fn evaluate(geom: Box3, p: [f64; 3], seq: u64) -> Self {
        let low = gl_cell(&geom, p, &GL2_NODES, &GL2_WEIGHTS);
        let high = gl_cell(&geom, p, &GL3_NODES, &GL3_WEIGHTS);
        let mut err = 0.0;
        for k in 0..6 {
            err += (high[k] - low[k]).abs();
        }
        Self {
            geom,
            value: high,
            err,
            seq,
        }
    }
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.seq == other.seq
    }
}

impl Eq for Cell {}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        // Max-heap on error; sequence number breaks ties deterministically.
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Work limit for the adaptive refinement (number of cell evaluations).
const MAX_CELLS: usize = 400_000;

/// Default relative tolerance for [`y_numeric`].
pub const DEFAULT_QUAD_TOL: f64 = 1e-3;

/// Geometry tensor of a union of axis-aligned boxes by adaptive volume
/// quadrature of the second-moment integral.
///
/// Cells are pre-subdivided until their diameter is below their distance to
/// the trap point, then refined globally (largest error first, embedded
/// 2/3-point Gauss–Legendre estimates) until the summed error estimate drops
/// under `rel_tol` of the moment trace. Deterministic for fixed inputs.
pub fn y_numeric(boxes: &[Box3], p: TrapPoint, rel_tol: f64) -> Result<YTensor> {
    let moments = integrate_moments([p.x_um, 0.0, p.z_um], boxes, rel_tol)?;
    Ok(moments_to_tensor(moments))
}

fn integrate_moments(point: [f64; 3], boxes: &[Box3], rel_tol: f64) -> Result<Sym6> {
    if !(rel_tol > 0.0) {
        return Err(Error::Domain("quadrature tolerance must be positive"));
    }
    if boxes.is_empty() {
        return Err(Error::Domain("volume must contain at least one box"));
    }
    for b in boxes {
        if b.contains(point) {
            return Err(Error::Domain("trap point lies inside the conductor volume"));
        }
    }

    let mut seq: u64 = 0;
    let mut heap: BinaryHeap<Cell> = BinaryHeap::new();
    let mut total: Sym6 = [0.0; 6];
    let mut total_err = 0.0;

    // Admissibility pre-split: no cell may be wider than its distance to the
    // trap point, which keeps the embedded error estimates honest near the
    // 1/r⁴ growth.
    let mut work: Vec<Box3> = boxes.to_vec();
    while let Some(cell) = work.pop() {
        let dist = cell.distance_to(point);
        if cell.diameter() > dist && seq < MAX_CELLS as u64 {
            let (l, r) = cell.split();
            work.push(l);
            work.push(r);
            seq += 1;
            continue;
        }
        let evaluated = Cell::evaluate(cell, point, seq);
        seq += 1;
        total_err += evaluated.err;
        sym6_add(&mut total, &evaluated.value);
        heap.push(evaluated);
    }

    let scale = |t: &Sym6| (t[0] + t[1] + t[2]).abs().max(f64::MIN_POSITIVE);

    let mut evals = heap.len();
    while total_err > rel_tol * scale(&total) {
        if evals >= MAX_CELLS {
            return Err(Error::NoConvergence {
                achieved_rel: total_err / scale(&total),
                requested_rel: rel_tol,
            });
        }
        let worst = match heap.pop() {
            Some(c) => c,
            None => break,
        };
        total_err -= worst.err;
        sym6_sub(&mut total, &worst.value);
        let (l, r) = worst.geom.split();
        for child in [l, r] {
            let evaluated = Cell::evaluate(child, point, seq);
            seq += 1;
            evals += 1;
            total_err += evaluated.err;
            sym6_add(&mut total, &evaluated.value);
            heap.push(evaluated);
        }
    }

    Ok(total)
}

fn moments_to_tensor(x: Sym6) -> YTensor {
    let tr = x[0] + x[1] + x[2];
    YTensor::from_symmetric([
        [tr - x[0], -x[3], -x[4]],
        [-x[3], tr - x[1], -x[5]],
        [-x[4], -x[5], tr - x[2]],
    ])
}

/// Factor by which the y-truncation length used by [`y_slab_quadrature`]
/// exceeds the largest geometric scale.
pub const SLAB_TRUNCATION_FACTOR: f64 = 50.0;

/// Quadrature route to the slab tensor: the infinite wire is truncated at
/// ±L with L = 50·max(z, w, t) and the lost |y′| > L contribution restored
/// by its leading analytic tail, A/(3L³) on the axial moment (the integrand
/// decays as |x−x′|⁻⁴, so everything else is O(L⁻⁵)).
///
/// Fully independent of [`y_slab`]; serves as its oracle.
pub fn y_slab_quadrature(geom: SlabGeometry, p: TrapPoint, rel_tol: f64) -> Result<YTensor> {
    if !(p.z_um > 0.0) {
        return Err(Error::Domain("trap must sit above the wire surface"));
    }
    let l = SLAB_TRUNCATION_FACTOR * p.z_um.max(geom.width_um).max(geom.thickness_um);
    let slab = Box3::new(
        [-0.5 * geom.width_um, -l, -geom.thickness_um],
        [0.5 * geom.width_um, l, 0.0],
    )?;
    let point = [p.x_um, 0.0, p.z_um];
    if slab.contains(point) {
        return Err(Error::Domain("trap point lies inside the conductor volume"));
    }

    let mut total = integrate_moments(point, &[slab], rel_tol)?;
    let cross_section = geom.width_um * geom.thickness_um;
    total[1] += cross_section / (3.0 * l * l * l);
    Ok(moments_to_tensor(total))
}

/// Skin depth δ = √(2ρ/µ₀ω) in µm for resistivity in µΩ·cm and frequency in
/// MHz.
pub fn skin_depth(rho_uohm_cm: f64, f_mhz: f64) -> Result<f64> {
    if !(rho_uohm_cm > 0.0) {
        return Err(Error::Domain("resistivity must be positive"));
    }
    if !(f_mhz > 0.0) {
        return Err(Error::Domain("frequency must be positive"));
    }
    let rho = rho_uohm_cm * UOHM_CM_TO_OHM_M;
    let omega = 2.0 * core::f64::consts::PI * f_mhz * MHZ_TO_HZ;
    let delta_m = sqrt(2.0 * rho / (MU_0 * omega));
    Ok(delta_m / crate::constants::UM_TO_M)
}

/// Interpolation factor (1 + 2d³/3δ³)⁻¹ multiplying the quasi-static noise
/// power when the trap distance approaches the skin depth. Known to
/// overestimate the true noise by up to ~3× around d ≈ δ, so it is applied
/// only on request.
pub fn interp_factor(d_um: f64, delta_um: f64) -> Result<f64> {
    if !(d_um >= 0.0) {
        return Err(Error::Domain("distance must be non-negative"));
    }
    if !(delta_um > 0.0) {
        return Err(Error::Domain("skin depth must be positive"));
    }
    let ratio = d_um / delta_um;
    Ok(1.0 / (1.0 + 2.0 / 3.0 * ratio * ratio * ratio))
}

/// The two half-space noise scalings: the quasi-static T/(ρd) scale and the
/// far-field scale it crosses over to, far = quasi·(3/2)(δ/d)³ ∝ T√ρ/d⁴.
/// Relative magnitudes are meaningful; absolute normalization is arbitrary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticScales {
    pub quasi_static: f64,
    pub far: f64,
}

pub fn asymptotic_scales(
    t_k: f64,
    rho_uohm_cm: f64,
    d_um: f64,
    f_mhz: f64,
) -> Result<AsymptoticScales> {
    if !(t_k > 0.0) || !(d_um > 0.0) {
        return Err(Error::Domain("temperature and distance must be positive"));
    }
    let delta = skin_depth(rho_uohm_cm, f_mhz)?;
    let quasi_static = t_k / (rho_uohm_cm * d_um);
    let ratio = delta / d_um;
    let far = quasi_static * 1.5 * ratio * ratio * ratio;
    Ok(AsymptoticScales { quasi_static, far })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn assert_close(got: f64, want: f64, rel: f64, what: &str) {
        let denom = want.abs().max(1e-300);
        assert!(
            (got - want).abs() / denom <= rel,
            "{what}: got {got}, want {want}"
        );
    }

    #[test]
    fn slab_rejects_trap_inside_metal() {
        let geom = SlabGeometry::new(10.0, 2.0).unwrap();
        assert!(TrapPoint::new(0.0, 0.0).is_err());
        assert!(y_slab(geom, TrapPoint { x_um: 0.0, z_um: -1.0 }).is_err());
    }

    #[test]
    fn slab_off_diagonal_vanishes_on_axis() {
        let geom = SlabGeometry::new(10.0, 2.15).unwrap();
        let y = y_slab(geom, TrapPoint::above_center(5.0).unwrap()).unwrap();
        assert!(y.zx().abs() < 1e-15);
    }

    #[test]
    fn slab_trace_identity_exact() {
        let geom = SlabGeometry::new(7.0, 1.3).unwrap();
        for &(x, z) in &[(0.0, 2.0), (3.0, 0.7), (-11.0, 4.0), (3.5, 0.2)] {
            let y = y_slab(geom, TrapPoint::new(x, z).unwrap()).unwrap();
            assert_close(y.yy(), 3.0 / 8.0 * y.trace(), 1e-12, "trace identity");
            assert!(y.trace() > 0.0);
        }
    }

    #[test]
    fn slab_half_space_limit() {
        // w, t → ∞ at height d: Y₁₁ = Y₂₂ → 3π/(8d), Y₃₃ → π/(4d).
        let d = 1.0;
        let geom = SlabGeometry::new(2000.0 * d, 2000.0 * d).unwrap();
        let y = y_slab(geom, TrapPoint::above_center(d).unwrap()).unwrap();
        assert_close(y.xx(), 3.0 * PI / (8.0 * d), 1e-2, "Y11 half-space");
        assert_close(y.yy(), 3.0 * PI / (8.0 * d), 1e-2, "Y22 half-space");
        assert_close(y.zz(), PI / (4.0 * d), 1e-2, "Y33 half-space");
        assert_close(y.xx() / y.zz(), 1.5, 1e-2, "anisotropy ratio");
    }

    #[test]
    fn slab_mirror_symmetry() {
        let geom = SlabGeometry::new(12.0, 3.0).unwrap();
        let plus = y_slab(geom, TrapPoint::new(4.5, 2.0).unwrap()).unwrap();
        let minus = y_slab(geom, TrapPoint::new(-4.5, 2.0).unwrap()).unwrap();
        assert_close(plus.xx(), minus.xx(), 1e-14, "xx mirror");
        assert_close(plus.yy(), minus.yy(), 1e-14, "yy mirror");
        assert_close(plus.zz(), minus.zz(), 1e-14, "zz mirror");
        assert_close(plus.zx(), -minus.zx(), 1e-14, "zx mirror");
    }

    #[test]
    fn slab_diagonals_decrease_with_height() {
        let geom = SlabGeometry::new(10.0, 2.15).unwrap();
        let mut prev = y_slab(geom, TrapPoint::above_center(0.5).unwrap()).unwrap();
        for i in 1..40 {
            let z = 0.5 + 0.5 * i as f64;
            let y = y_slab(geom, TrapPoint::above_center(z).unwrap()).unwrap();
            assert!(y.xx() < prev.xx() && y.yy() < prev.yy() && y.zz() < prev.zz());
            prev = y;
        }
    }

    #[test]
    fn slab_finite_above_edge() {
        // Trap exactly over an edge (u = 0 in one bracket term): the stable
        // pair-difference forms must stay finite and match the quadrature.
        let geom = SlabGeometry::new(10.0, 2.0).unwrap();
        let p = TrapPoint::new(5.0, 1.5).unwrap();
        let closed = y_slab(geom, p).unwrap();
        assert!(closed.trace().is_finite() && closed.trace() > 0.0);
        let quad = y_slab_quadrature(geom, p, 1e-4).unwrap();
        assert_close(quad.xx(), closed.xx(), 5e-3, "edge xx");
        assert_close(quad.zz(), closed.zz(), 5e-3, "edge zz");
        assert_close(quad.zx(), closed.zx(), 5e-3, "edge zx");
    }

    #[test]
    fn numeric_matches_closed_form_reference_case() {
        let geom = SlabGeometry::new(10.0, 2.15).unwrap();
        let p = TrapPoint::above_center(5.0).unwrap();
        let closed = y_slab(geom, p).unwrap();
        let quad = y_slab_quadrature(geom, p, 2e-4).unwrap();
        assert_close(quad.xx(), closed.xx(), 5e-3, "xx");
        assert_close(quad.yy(), closed.yy(), 5e-3, "yy");
        assert_close(quad.zz(), closed.zz(), 5e-3, "zz");
    }

    #[test]
    fn numeric_point_source_limit() {
        // A small cube far away acts as a point volume:
        // X_ij → V/2·r_i r_j/|r|⁶.
        let s = 0.2;
        let cube = Box3::new([-0.5 * s, -0.5 * s, -0.5 * s], [0.5 * s, 0.5 * s, 0.5 * s]).unwrap();
        let p = TrapPoint::new(0.0, 30.0).unwrap();
        let y = y_numeric(&[cube], p, 1e-6).unwrap();
        let v = s * s * s;
        let r = 30.0f64;
        // On the axis X_zz = V/(2r⁴) dominates, so Y_xx = Y_yy → V/(2r⁴)
        // and Y_zz → 0; the whole tensor scales as volume/d⁴.
        let x_zz = 0.5 * v / r.powi(4);
        assert_close(y.trace(), 2.0 * x_zz, 1e-3, "point-source trace");
        assert_close(y.xx(), x_zz, 2e-3, "point-source xx");
        assert_close(y.yy(), x_zz, 2e-3, "point-source yy");
        assert!(y.zz().abs() < 1e-4 * y.trace(), "point-source zz ~ 0");
    }

    #[test]
    fn numeric_additive_over_disjoint_boxes() {
        let b1 = Box3::new([-2.0, -2.0, -1.0], [0.0, 2.0, 0.0]).unwrap();
        let b2 = Box3::new([1.0, -2.0, -1.0], [3.0, 2.0, 0.0]).unwrap();
        let p = TrapPoint::new(0.5, 2.5).unwrap();
        let both = y_numeric(&[b1, b2], p, 1e-6).unwrap();
        let first = y_numeric(&[b1], p, 1e-6).unwrap();
        let second = y_numeric(&[b2], p, 1e-6).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let sum = first.get(i, j) + second.get(i, j);
                assert!(
                    (both.get(i, j) - sum).abs() <= 2e-5 * both.trace(),
                    "additivity at ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn numeric_rejects_interior_point() {
        let b = Box3::new([-1.0, -1.0, -1.0], [1.0, 1.0, 1.0]).unwrap();
        let err = integrate_moments([0.0, 0.0, 0.0], &[b], 1e-3);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn numeric_reports_achieved_error_when_starved() {
        // A tolerance below floating-point resolution exhausts the work
        // budget; the error must carry the error level actually reached.
        let b = Box3::new([-1.0, -1.0, -1.0], [1.0, 1.0, 0.0]).unwrap();
        let err = y_numeric(&[b], TrapPoint::new(0.0, 0.5).unwrap(), 1e-18).unwrap_err();
        match err {
            Error::NoConvergence {
                achieved_rel,
                requested_rel,
            } => {
                assert!(achieved_rel > requested_rel);
                assert!(achieved_rel < 1e-6, "achieved {achieved_rel}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn skin_depth_reference_values() {
        // Copper at 0.79 MHz across its cooling ladder, plus the alloy value.
        assert_close(skin_depth(1.7, 0.79).unwrap(), 74.0, 0.01, "room T");
        assert_close(skin_depth(0.2, 0.79).unwrap(), 25.3, 0.01, "liquid N2");
        assert_close(skin_depth(0.017, 0.79).unwrap(), 7.4, 0.01, "liquid He");
        assert_close(skin_depth(2.21, 0.79).unwrap(), 84.0, 0.01, "gold standard");
    }

    #[test]
    fn skin_depth_rejects_nonpositive() {
        assert!(skin_depth(0.0, 1.0).is_err());
        assert!(skin_depth(1.0, -1.0).is_err());
    }

    #[test]
    fn interp_factor_limits() {
        assert_eq!(interp_factor(0.0, 10.0).unwrap(), 1.0);
        assert_close(interp_factor(10.0, 10.0).unwrap(), 0.6, 1e-12, "d = delta");
        // Far asymptote (3/2)(δ/d)³ within 1% at d = 10δ.
        let g = interp_factor(100.0, 10.0).unwrap();
        assert_close(g, 1.5e-3, 0.01, "far asymptote");
    }

    #[test]
    fn asymptotic_scales_consistency() {
        let s = asymptotic_scales(300.0, 1.7, skin_depth(1.7, 0.79).unwrap(), 0.79).unwrap();
        assert_close(s.far / s.quasi_static, 1.5, 1e-12, "d = delta ratio");

        // Far scale grows as √ρ at fixed large distance.
        let s1 = asymptotic_scales(300.0, 1.0, 500.0, 0.79).unwrap();
        let s4 = asymptotic_scales(300.0, 4.0, 500.0, 0.79).unwrap();
        assert_close(s4.far / s1.far, 2.0, 1e-9, "sqrt-rho scaling");

        // Doubling the distance drops the far scale 16-fold.
        let d1 = asymptotic_scales(300.0, 1.7, 200.0, 0.79).unwrap();
        let d2 = asymptotic_scales(300.0, 1.7, 400.0, 0.79).unwrap();
        assert_close(d1.far / d2.far, 16.0, 1e-9, "d^-4 scaling");
    }
}
