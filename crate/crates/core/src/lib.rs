//! Exact-arithmetic kernels for k-Narayana number families, Hilbert series of
//! Grassmannians and Schubert varieties, and the generalized hypergeometric
//! Euler transform, certified by brute-force path-counting oracles.

pub mod euler;
pub mod exact;
pub mod grassmann;
pub mod hypergeom;
pub mod identities;
pub mod matrix;
pub mod narayana;
pub mod oracle;
pub mod poly;
pub mod ratfn;
pub mod series;

pub use exact::{Int, Rat};
pub use matrix::Mat;
pub use poly::Poly;
pub use ratfn::RatFn;
pub use series::Series;
