//! Exact arithmetic over the Gaussian rationals Q(xi), xi^2 = -1, plus the
//! dense linear algebra (rank, kernels, solving, Kronecker products) used
//! throughout the workspace.

pub mod mat;
pub mod rat;
pub mod scalar;
pub mod sparse;
pub mod tensor;

pub use mat::{kernel_basis, kron, rank, solve_linear, Mat};
pub use rat::Rat;
pub use scalar::Scalar;
pub use sparse::{Acc, Echelon, MapAcc, SparseVec};
pub use tensor::Tensor3;

/// Shorthand constructors used by data tables elsewhere.
pub fn s(n: i64) -> Scalar {
    Scalar::int(n)
}

pub fn xi() -> Scalar {
    Scalar::xi()
}

pub fn half() -> Scalar {
    Scalar::half()
}
