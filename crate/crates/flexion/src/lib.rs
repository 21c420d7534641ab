#![allow(clippy::len_without_is_empty, clippy::needless_range_loop)]

pub mod ds;
pub mod error;
pub mod exact;
pub mod gari;
pub mod io;
pub mod mould;
pub mod random;
pub mod report;
pub mod special;
pub mod suites;
pub mod symmetry;

pub use error::{Error, Result};

pub use exact::{Alphabet, Lfd, Rational};
pub use mould::Mould;
pub use report::VerificationReport;
