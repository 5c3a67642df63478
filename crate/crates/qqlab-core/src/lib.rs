//! Exact, desk-scale laboratory for quantum query complexity.
//!
//! The crate simulates quantum query algorithms in canonical form with exact
//! state-vector arithmetic, checks the classic lower-bound methods (hybrid,
//! polynomial, recording, adversary) as machine-verifiable inequalities, and
//! compiles dual-adversary certificates into working algorithms whose success
//! probabilities are verified by exact simulation.
//!
//! Modules map onto the pieces of the pipeline:
//!
//! - [`linalg`]: dense complex linear algebra (Jacobi eigensolver, spectral
//!   norms, projectors, Gram factorization),
//! - [`boolfn`]: Boolean functions, relations and combinatorial measures,
//! - [`qsim`]: exact simulation of query algorithms plus reference algorithms,
//! - [`hybrid`]: progress traces and query-weight certificates,
//! - [`poly`]: acceptance polynomials, approximate degree by LP, symmetrization,
//! - [`recording`]: compressed-oracle simulation and progress analyses,
//! - [`adversary`]: adversary matrices, the dual SDP and vector realizations,
//! - [`dual`]: reflection systems, phase gaps and the phase-estimation algorithm,
//! - [`report`]: machine-readable experiment reports.

pub mod adversary;
pub mod boolfn;
pub mod dual;
pub mod error;
pub mod hybrid;
pub mod linalg;
pub mod poly;
pub mod qsim;
pub mod recording;
pub mod report;

pub use error::Error;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Numerical tolerances used by every module.
///
/// Two levels are distinguished: `structure` guards structural predicates
/// (hermiticity, unitarity, projector identities) and `algebra` guards
/// algebraic identities accumulated over arithmetic (eigen-residuals,
/// feasibility sums, progress inequalities).
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Structural checks (hermitian / unitary / projector predicates).
    pub structure: f64,
    /// Algebraic identities (residuals, feasibility, inequality slack).
    pub algebra: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { structure: 1e-10, algebra: 1e-9 }
    }
}

/// Default structural tolerance, 1e-10.
pub const TOL_STRUCTURE: f64 = 1e-10;
/// Default algebraic tolerance, 1e-9.
pub const TOL_ALGEBRA: f64 = 1e-9;
