//! Allocation procedures for single-peaked house markets.
//!
//! A house market has `n` agents and `n` resources; every agent holds
//! exactly one resource and ranks all of them with a strict order. The crate
//! provides:
//!
//! * the domain model and deal semantics ([`market`]),
//! * single-peaked checks and the IC-SP / UP-SP preference cultures ([`sp`]),
//! * Top Trading Cycle and the Crawler ([`central`]),
//! * improving-deal dynamics with several selection heuristics ([`dynamics`]),
//! * exact average-rank and minimum-rank optimizers ([`optimize`]),
//! * brute-force oracles and worst-case instance families ([`oracles`]),
//! * the batch experiment pipeline ([`experiment`]).
//!
//! Agents and resources are 0-based indices in the API. The text formats and
//! `Display` implementations use 1-based labels (`a1`, `r1`).

pub mod central;
pub mod dynamics;
pub mod error;
pub mod experiment;
pub mod market;
pub mod optimize;
pub mod oracles;
pub mod sp;

pub use error::{MarketError, Result};
pub use market::{Agent, Allocation, Deal, DealTrace, Instance, LinearOrder, Resource};
