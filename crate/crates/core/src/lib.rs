//! Design and analysis toolkit for surface-acoustic-wave (SAW) acousto-optic
//! phase modulators on piezoelectric substrates.
//!
//! The crate covers the full modeling chain:
//!
//! * [`materials`] — anisotropic stiffness/piezoelectric/permittivity tensors,
//!   Voigt conversions, frame rotations, and the photoelastic/electro-optic
//!   constants of the modulation formula.
//! * [`saw`] — Rayleigh-wave solver for a piezoelectric half-space by the
//!   partial-wave method (free and metalized surfaces), with depth profiles
//!   of displacement and electric potential.
//! * [`resonator`] — one-port SAW resonator model: reflection spectrum,
//!   Lorentzian fitting, and the drive-power → phonon-number → amplitude chain.
//! * [`optics`] — standing-wave field in the resonator, strain and field
//!   evaluation, refractive-index modulation, Gaussian-mode overlap, and the
//!   half-wave voltage.
//! * [`cavity`] — waveguide optical cavity math: FSR, finesse, sideband
//!   enhancement, and the resulting half-wave-voltage reduction.
//! * [`analysis`] — heterodyne sideband measurement model and half-wave-voltage
//!   extraction from relative sideband power.
//! * [`device`] — device configuration files tying the modules together, plus
//!   parameter sweeps.
//!
//! All quantities are strict SI unless a name says otherwise. Types are
//! immutable after construction and the operations are pure functions, so
//! everything is safe to use concurrently. With the default `parallel` feature
//! the velocity grid scan and parameter sweeps run on rayon; disabling the
//! feature produces bit-identical results sequentially.

pub mod analysis;
pub mod cavity;
pub mod constants;
pub mod device;
pub mod error;
pub mod materials;
pub mod optics;
pub mod quadrature;
pub mod resonator;
pub mod saw;

mod linalg;

pub use error::{Error, ErrorCategory, Result};
