//! Qubit temporal-correlation toolkit.
//!
//! The crate models the statistics of measuring a dichotomic qubit observable
//! at several times under unitary precession: sequential (possibly unsharp)
//! joint probabilities, Kirkwood and Margenau-Hill quasiprobabilities over two
//! and three measurement bases, the Leggett-Garg inequality families built
//! from them, and a Mach-Zehnder switch interferometer whose port amplitudes
//! read the two-time quasiprobability out directly. A small derivative-free
//! search locates quasiprobability negativity and inequality violations.
//!
//! Everything is pure computation on small dense complex matrices; the crate
//! is `no_std` (with `alloc`) and routes all transcendental math through
//! `libm` so results are bit-identical across platforms.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod inequality;
pub mod linalg;
pub mod observable;
pub mod quasiprob;
pub mod scenario;
pub mod search;
pub mod sequential;
pub mod state;
pub mod switch;
pub mod tol;

pub use error::Error;
pub use linalg::{CMatrix, CVector, Complex};
pub use observable::{DichotomicObservable, MeasurementBasis, Outcome};
pub use scenario::LgScenario;
pub use state::QuantumState;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
