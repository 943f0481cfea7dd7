//! Symmetric-function families over the Fock space: monomial/power-sum
//! transitions, Schur, Jack (integral normalization), monic Macdonald, and
//! Haiman polynomials.

pub mod haiman;
pub mod jack;
pub mod macdonald;
pub mod msp;
pub mod schur;

pub use haiman::{haiman_h, haiman_matrix, upsilon};
pub use jack::{jack, jack_all, jack_matrix, jack_norm, JackVector};
pub use macdonald::{macdonald_p, MacdonaldVector};
pub use schur::schur;
