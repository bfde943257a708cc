//! Exact computations for real and complex super division algebras,
//! Clifford algebras and their Bott periodicity, and the threefold way for
//! finite matrix groups.

pub mod clifford;
pub mod divclass;
pub mod linalg;
pub mod repthree;
pub mod scalar;
pub mod superalg;
pub mod selftest;
