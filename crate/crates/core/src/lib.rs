//! Joint modeling of multivariate financial returns via copulas.
//!
//! Two interchangeable dependence models are provided: a classical
//! Student-t marginal + t-copula pipeline, and a quantum circuit Born
//! machine (QCBM) trained against the discretized copula histogram on an
//! exact statevector simulator. Both feed the same risk-aggregation
//! backtests (value at risk, expected shortfall, failure and severity
//! ratios with bootstrap confidence intervals).
//!
//! Module map, roughly in pipeline order:
//!
//! - [`data`]: price ingestion, log returns, standardization, train/test split
//! - [`marginals`]: Student-t marginal fits and the probability integral transform
//! - [`tcopula`]: classical t-copula calibration and sampling
//! - [`sim`]: dense statevector simulation of the gate set
//! - [`ansatz`]: the GHZ-entangled copula circuit family
//! - [`codec`]: bitstring encoding/decoding between copula space and qubits
//! - [`train`]: clipped KL cost, SPSA, and annealing-schedule training
//! - [`risk`]: correlators, VaR/ES, failure/severity ratios, bootstrap CIs
//! - [`synthetic`]: deterministic synthetic fixtures standing in for market data

pub mod ansatz;
pub mod codec;
pub mod data;
pub mod marginals;
pub mod risk;
pub mod sim;
pub mod special;
pub mod synthetic;
pub mod tcopula;
pub mod train;

mod linalg;
mod seed;

pub use seed::derive_seed;
