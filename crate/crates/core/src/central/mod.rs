//! Centralized procedures: Gale's Top Trading Cycle and the Crawler.
//!
//! Both return the final allocation together with the trace of cycle deals
//! they implemented, picks (deals of size 1) included.

mod crawler;
mod ttc;

pub use crawler::crawler;
pub use ttc::{ttc, ttc_random_order};
