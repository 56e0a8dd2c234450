//! Discrete-time simulator for on-demand ride-sourcing markets.
//!
//! The simulator runs on a real road-network graph rather than an artificial
//! grid. Each tick the platform matches waiting passengers to idle vehicles
//! (Kuhn–Munkres over a reward matrix), lets both sides react, injects new
//! priced orders from a historical pool, repositions idle vehicles, applies
//! offline schedules, and advances every vehicle along its itinerary.
//!
//! On top of the engine sit two harnesses:
//!
//! - [`rl`]: episodic MDP interfaces with tabular learners (value-table
//!   dispatch, actor-critic repositioning) and the Myopic / PDB / Random
//!   baselines.
//! - [`theory`]: six analytical matching-function models evaluated against
//!   simulated ground truth over supply/demand scenario sweeps, plus the
//!   utilization-rate calibration check.
//!
//! Everything is deterministic given `(config, seed)`.

pub mod agents;
pub mod config;
pub mod engine;
pub mod error;
pub mod market_ops;
pub mod rl;
pub mod road_network;
pub mod synth;
pub mod theory;

pub use config::SimulationConfig;
pub use engine::{run, MetricsReport, SimulationState};
pub use error::Error;
pub use road_network::{GridOverlay, RoadNetwork, Route, RouteCache};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
