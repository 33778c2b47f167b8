//! Numerical core for estimating thermally driven magnetic near-field noise
//! around rectangular chip wires and its consequences for magnetically
//! trapped atoms.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`materials`]: resistivity of pure metals (Bloch–Grüneisen phonon term
//!   plus residual) and of dilute binary alloys (Matthiessen's rule).
//! * [`geometry`]: the geometry tensor `Y_ij` of a conductor as seen from a
//!   trap point, both in closed form for an infinite rectangular slab and by
//!   adaptive volume quadrature for unions of axis-aligned boxes; skin depth
//!   and the short-skin-depth interpolation factor.
//! * [`noise`]: magnetic noise spectral density, generic transition rates,
//!   and hyperfine spin-flip rates.
//! * [`lifetime`]: the two-step spin-flip cascade, closed-form survival,
//!   effective (1/e) lifetimes, and lifetime-vs-distance curves.
//! * [`heating`]: ohmic temperature rise of a current-carrying wire.
//! * [`screening`]: material/temperature/concentration optimization against
//!   the room-temperature gold standard.
//!
//! Everything is pure and deterministic; the crate is `no_std` (with `alloc`)
//! so the numerics can be embedded anywhere. Interfaces use µΩ·cm, µm, MHz,
//! gauss and kelvin; conversions to SI live in [`constants`].

#![cfg_attr(not(test), no_std)]
// `!(x > 0.0)` guards reject NaN along with the out-of-range values;
// `x <= 0.0` would wave NaN through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod constants;
pub mod error;
pub mod geometry;
pub mod heating;
pub mod lifetime;
pub mod materials;
pub mod noise;
pub mod screening;

mod quad;
mod solve;

pub use error::{Error, Result};
