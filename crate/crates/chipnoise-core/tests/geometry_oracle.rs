//! Oracle equivalence between the closed-form slab tensor and the adaptive
//! volume quadrature, on randomized wire/trap configurations.

use chipnoise_core::geometry::{y_slab, y_slab_quadrature, SlabGeometry, TrapPoint};

/// Deterministic xorshift64* stream so every run sees the same configs.
struct Rng(u64);

impl Rng {
    fn next_f64(&mut self) -> f64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        let x = self.0.wrapping_mul(0x2545_f491_4f6c_dd1d);
        (x >> 11) as f64 / (1u64 << 53) as f64
    }

    fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

#[test]
fn quadrature_confirms_slab_closed_form_on_random_configs() {
    let mut rng = Rng(0x9e37_79b9_7f4a_7c15);
    let mut checked = 0;
    while checked < 12 {
        let geom = SlabGeometry::new(rng.in_range(2.0, 40.0), rng.in_range(0.5, 5.0)).unwrap();
        let p = TrapPoint::new(
            rng.in_range(-0.8, 0.8) * geom.width_um,
            rng.in_range(1.0, 20.0),
        )
        .unwrap();

        let closed = y_slab(geom, p).unwrap();
        let quad = y_slab_quadrature(geom, p, 2e-4).unwrap();

        let scale = closed.trace();
        for (i, j) in [(0, 0), (1, 1), (2, 2), (2, 0)] {
            let want = closed.get(i, j);
            let got = quad.get(i, j);
            let tol = 0.005 * want.abs().max(0.01 * scale);
            assert!(
                (got - want).abs() <= tol,
                "config w={} t={} x={} z={}: Y[{i}][{j}] closed {want} vs quad {got}",
                geom.width_um,
                geom.thickness_um,
                p.x_um,
                p.z_um
            );
        }
        checked += 1;
    }
}

#[test]
fn quadrature_handles_near_surface_traps() {
    // Heights small against the cross-section stress the distance-keyed
    // subdivision the most.
    let geom = SlabGeometry::new(10.0, 2.15).unwrap();
    for &(x, z) in &[(0.0, 0.3), (3.0, 0.25), (4.9, 0.4)] {
        let p = TrapPoint::new(x, z).unwrap();
        let closed = y_slab(geom, p).unwrap();
        let quad = y_slab_quadrature(geom, p, 2e-4).unwrap();
        for (i, j) in [(0, 0), (1, 1), (2, 2), (2, 0)] {
            let tol = 0.005 * closed.get(i, j).abs().max(0.01 * closed.trace());
            assert!(
                (quad.get(i, j) - closed.get(i, j)).abs() <= tol,
                "x={x} z={z} Y[{i}][{j}]: {} vs {}",
                quad.get(i, j),
                closed.get(i, j)
            );
        }
    }
}

#[test]
fn quadrature_converges_toward_slab_under_refinement() {
    let geom = SlabGeometry::new(10.0, 2.15).unwrap();
    let p = TrapPoint::new(1.5, 5.0).unwrap();
    let closed = y_slab(geom, p).unwrap();
    let mut prev_err = f64::INFINITY;
    for &tol in &[1e-2, 1e-3, 1e-4] {
        let quad = y_slab_quadrature(geom, p, tol).unwrap();
        let err = (quad.trace() - closed.trace()).abs() / closed.trace();
        assert!(err <= prev_err * 1.5, "error did not shrink at tol {tol}");
        prev_err = err;
    }
    assert!(prev_err < 5e-4);
}
