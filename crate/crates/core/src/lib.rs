//! Exact-arithmetic engine for orthogonal bases of spherical harmonics and
//! Clifford-algebra-valued spherical monogenics.
//!
//! Everything is computed over the Gaussian rationals: Clifford products,
//! Fischer inner products, the harmonic/monogenic projectors and their
//! Jacobi-polynomial closed forms, and the step-two branching recursion that
//! assembles orthogonal bases of `Har_n(R^m)` and `Mon_n(R^m, C_m)`. No
//! floating point is involved anywhere in the construction; orthogonality and
//! eigenvalue claims are checked as exact identities.

pub mod branching;
pub mod clifford;
pub mod error;
pub mod jacobi;
pub mod json;
pub mod nullspace;
pub mod operator;
pub mod poly;
pub mod projections;
pub mod scalar;

pub use branching::{
    base_har_basis, base_mon_basis, branch_basis, branch_basis_seq, default_chain, eigen_signature,
    kernel_dim_oracle, scasimir_u, scasimir_v, tau_h, tau_m, verify_basis, BasisElement, BasisMode,
    BranchLabel, CheckResult, Family, LabelLevel, SpaceSplit, VerifyReport,
};
pub use clifford::{
    blade_product, pseudoscalar_projectors, signed_pseudoscalar, witt_fixtures, Blade, Involution,
    Multivector, WittFixtures, MAX_DIM,
};
pub use error::{Error, Result};
pub use jacobi::{
    gen_binomial, jacobi_poly, jacobi_poly_hypergeometric, pochhammer, RationalUniPoly,
};
pub use operator::PolyOperator;
pub use poly::{
    angular_l, casimir_h, casimir_l, dirac, euler, fischer_gram, fischer_gram_seq, fischer_inner,
    gamma, laplace, moment_m, rsq_mul, sphere_inner_monogenic, vector_mul, CliffordPolynomial,
    IndexRange, MultiIndex,
};
pub use projections::{
    constants, harmonic_component, harmonic_part, harmonic_product_fast, monogenic_component,
    monogenic_part, monogenic_product, Parity, ProjectionConstants, SplitProductInput,
};
pub use scalar::{GaussianRational, Rat};
