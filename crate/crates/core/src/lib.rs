//! Burnside rings, relative Burnside modules and rational representation
//! rings for `Z_p^n × Z_p` and `Z_{p^k} × Z_p`, with exact integer
//! linear algebra for their linearization kernels.

pub mod burnside;
pub mod cyclotomic;
pub mod error;
pub mod export;
pub mod gfp;
pub mod intlat;
pub mod repq;
pub mod verify;

pub use error::{Error, Result};
