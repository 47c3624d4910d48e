//! Kippenhahn curves of reciprocal tridiagonal matrices: exact elliptic-component
//! criteria and a numerical envelope sampler to check them against.

pub mod algebra;
pub mod criteria;
pub mod curve;
pub mod kippenhahn;
pub mod reciprocal;
