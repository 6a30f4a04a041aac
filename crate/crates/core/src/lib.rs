//! Systematic encoding and syndrome computation for Hermitian codes over
//! GF(q²), q = 2^s.
//!
//! A codeword is handled as a q × q² array. Multiplying each column by a
//! structured q × q matrix turns the code into q extended Reed-Solomon-like
//! row codes, which gives both a fast syndrome path and a systematic encoder
//! that sweeps the columns once. [`arch_sim`] models the hardware version of
//! that encoder with cycle counts.

pub mod arch_sim;
pub mod encoder;
pub mod error;
pub mod gf;
pub mod hermitian;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod row_codes;
pub mod transforms;

pub use encoder::{syndromes_direct, Encoded, HermitianCode, SyndromeTable};
pub use error::{Error, Result};
pub use gf::{Elem, FieldSpec};
pub use hermitian::{enumerate_points, make_code, make_code_in_range, CodeArray, CodeParams};
