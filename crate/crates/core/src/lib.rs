//! Linear codes over the ring R = F_q + vF_q + v^2F_q with v^3 = v.
//!
//! Covers field and ring arithmetic, the Gray map and Lee weight, linear and
//! cyclic codes over F_q and R, weight enumerators with MacWilliams
//! transforms, formally self-dual constructions, and a verification harness
//! driven by the `ringcodes` command-line tool.

#![allow(clippy::needless_range_loop)] // matrix code reads best with explicit indices

pub mod cli;
pub mod codes_fq;
pub mod codes_r;
pub mod cyclic_r;
pub mod error;
pub mod fsd;
pub mod gf;
pub mod linalg;
pub mod ring;
pub mod sample;
pub mod verify;
pub mod wenum;

pub use error::{Error, Result};
