//! Radiation profiles of radial free waves and their exterior energy channels.
//!
//! The crate has three layers:
//!
//! * grids, sampled signals, radial fields and their energy quadrature
//!   ([`sample`], [`quadrature`], [`field`], [`profile`]);
//! * the 1-D singular operator calculus — Hilbert transform, half-order
//!   integrals, Laplace transform, half-line extension, Chebyshev-weight
//!   Hilbert tables ([`ops`]);
//! * a Hankel-spectral solver for the radial wave equation used as ground
//!   truth ([`oracle`]), the explicit profile-to-data maps ([`maps`]), and
//!   the channel-of-energy projections and estimate verifiers ([`channel`]).

pub mod channel;
pub mod dim;
pub mod error;
pub mod field;
pub mod io;
pub mod maps;
pub mod ops;
pub mod oracle;
pub mod profile;
pub mod quadrature;
pub mod report;
pub mod sample;
pub mod trial;

pub use dim::{DimensionContext, Parity};
pub use error::{Error, Result};
pub use field::{RadialField, Region, Tail};
pub use profile::{Direction, RadialProfile};
pub use quadrature::{PanelGrid, Rule};
pub use report::VerificationReport;
pub use sample::SampledLine;
