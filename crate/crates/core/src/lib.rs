//! Exact computation of Green functions of finite reductive groups by the
//! Lusztig–Shoji algorithm, together with independent classical oracles and
//! a verifier for the congruence `Q_{T,F}(u) ≡ Q_{T,F^r}(u) mod r`.

pub mod algebra;
pub mod partition;
pub mod weyl;
pub mod orders;
pub mod arith;
pub mod springer;
pub mod error;
pub mod group_data;
pub mod lusztig_shoji;
pub mod oracles;
pub mod green;
pub mod congruence;

pub use error::{Error, Result};
