//! Exact counting of element orders and cyclic subgroups in finite abelian
//! groups presented as direct products of cyclic groups `C_{n1} x ... x C_{nr}`.
//!
//! The closed-form routes live in [`spectra`], the brute-force ground truth
//! in [`oracle`], and the identity suites that pit one against the other in
//! [`verify`]. Everything is exact: counts are computed in a caller-chosen
//! [`Exact`] integer type (`u64`, `u128` or `BigUint`) with overflow reported
//! instead of wrapped, and averages are reduced rationals.

pub mod arith;
mod error;
mod limits;
pub mod oracle;
mod scalar;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
pub use scalar::Exact;
pub use spectra::{GroupSpec, OrderSpectrum, PGroupType, SpectrumEntry};

/// Default count type: wide enough for every count at desk scale.
pub type Count = u128;
/// Arbitrary-width count type for inputs whose counts outgrow 128 bits.
pub type BigCount = num_bigint::BigUint;
/// Exact rational over [`Count`], used for average orders.
pub type Ratio = num_rational::Ratio<Count>;
/// Order spectrum with [`Count`] entries.
pub type Spectrum = OrderSpectrum<Count>;
