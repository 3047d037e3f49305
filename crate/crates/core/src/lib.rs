//! Two-qubit anisotropic Heisenberg XYZ model with a Dzyaloshinskii–Moriya
//! term and inhomogeneous magnetic field along z or x.
//!
//! The crate builds the Hamiltonians, diagonalizes them in closed form and
//! numerically, forms Gibbs states and computes Wootters concurrence, both
//! through closed-form expressions and through a general density-matrix
//! route that serves as a cross-check. [`analysis`] adds critical parameters,
//! revival detection and parameter sweeps.
//!
//! ```
//! use spinchain_core::{thermal_concurrence, ModelParams, Temperature};
//!
//! let p = ModelParams::x(1.0, 0.5, 0.2, 3.0, 0.0, 0.0);
//! let c = thermal_concurrence(&p, Temperature::new(3.0)?)?;
//! assert!(c.value() > 0.7);
//! # Ok::<(), spinchain_core::Error>(())
//! ```

pub mod analysis;
pub mod entanglement;
mod error;
pub mod linalg;
pub mod model;
pub mod spectrum;
pub mod thermal;

pub use analysis::{
    critical_b_nonuniform, critical_b_uniform, critical_dm_strength, critical_temperatures,
    detect_revival, sweep, RevivalReport, SweepAxis, SweepParam, SweepResult, SweepSpec,
};
pub use entanglement::{
    concurrence_mixed, concurrence_pure, ground_state_concurrence_x, thermal_concurrence,
    wootters_lambdas_oracle, Concurrence, LambdaQuadruple,
};
pub use error::{Error, Result};
pub use model::{
    build_hamiltonian, build_hamiltonian_x, build_hamiltonian_z, couplings_from_mean_anisotropy,
    Axis, AxisFields, CouplingTriple, HermitianMatrix4, MeanAnisotropy, ModelParams,
};
pub use spectrum::{
    analytic_spectrum, analytic_spectrum_x, analytic_spectrum_z, hermitian_eigensolve, EigenSystem,
};
pub use thermal::{gibbs_state, partition_function, DensityMatrix4, PartitionFunction, Temperature};
