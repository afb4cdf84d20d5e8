//! Error types shared across the crate.

use crate::newton::IterationReport;

/// Errors produced by the solvers and their supporting machinery.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A coordinate fell outside the domain it was evaluated on.
    #[error("coordinate {coordinate} lies outside the domain [{left}, {right}])")]
    OutsideDomain {
        coordinate: f64,
        left: f64,
        right: f64,
    },

    /// An argument violated a precondition (non-positive step size, bad degree, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Vector or matrix sizes do not match the discretization.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The flow map lost monotonicity: its Jacobian is not positive everywhere.
    #[error("flow-map Jacobian not positive: min {min:.6e} at quadrature point {index}")]
    NonPositiveJacobian { min: f64, index: usize },

    /// A radial map produced a non-positive radius away from the origin.
    #[error("radial map not positive: r = {value:.6e} at quadrature point {index}")]
    NonPositiveRadius { value: f64, index: usize },

    /// Newton iteration exhausted its budget without meeting the residual tolerance.
    #[error(
        "Newton did not converge: residual {:.3e} after {} iterations",
        report.final_residual_norm,
        report.iterations
    )]
    NonConvergence { report: IterationReport },

    /// The linearized system could not be factorized.
    #[error("singular tangent matrix in Newton iteration {iteration}")]
    SingularTangent { iteration: usize },

    /// Backtracking reduced the step below a useful size without satisfying the guard.
    #[error("positivity guard unsatisfiable at iteration {iteration} (step factor {alpha:.3e})")]
    GuardUnsatisfiable { iteration: usize, alpha: f64 },

    /// A second-order step was requested without the required history level.
    #[error("missing history: a second-order step needs the previous time level")]
    MissingHistory,

    /// Interface diagnostics were requested on a field without a sign change.
    #[error("no interface: the sampled field has no zero crossing")]
    NoInterface,

    /// The Eulerian reference solver detected a blow-up.
    #[error("Eulerian solve diverged: max |f| reached {max_abs:.3e} (bound {bound:.3e})")]
    Diverged { max_abs: f64, bound: f64 },

    /// Experiment configuration failed validation.
    #[error("configuration error: {0}")]
    Config(String),

    /// A time step failed inside an experiment run.
    #[error("solver failure at step {step} (t = {time:.6e}): {source}")]
    SolverAtStep {
        step: usize,
        time: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
