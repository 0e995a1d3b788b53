use crate::error::{MarketError, Result};
use crate::market::{Agent, Allocation, Deal, DealTrace, Instance, Resource};

/// The Crawler, scanning left to right.
///
/// Remaining agents are kept sorted by the axis position of the resource they
/// hold. The scan passes over agents whose remaining peak lies to their
/// right. The first agent whose peak is at or left of her position takes it;
/// every agent between the peak and her shifts one resource to the left.
/// That agent and her peak then leave and the scan restarts at the left end.
///
/// Requires an instance with an axis; the profile is single-peaked on it by
/// construction of [`Instance`].
pub fn crawler(instance: &Instance) -> Result<(Allocation, DealTrace)> {
    let axis = instance
        .axis()
        .ok_or_else(|| MarketError::Domain("the Crawler needs a single-peaked axis".into()))?;
    let n = instance.n();
    let owners = instance.endowment().owners();
    let mut resources: Vec<Resource> = axis.order().to_vec();
    let mut agents: Vec<Agent> = resources.iter().map(|&r| owners[r]).collect();
    let mut available = vec![true; n];
    let mut current = instance.endowment().clone();
    let mut trace = DealTrace::new(current.clone());

    while !resources.is_empty() {
        let mut i = 0;
        let (peak_at, holder_at) = loop {
            let agent = agents[i];
            let peak = instance
                .order(agent)
                .top_among(|r| available[r])
                .expect("some resource remains");
            let t = resources.iter().position(|&r| r == peak).expect("peak is available");
            if t <= i {
                break (t, i);
            }
            i += 1;
        };
        // The taker gives to her left neighbour, each neighbour passes hers
        // further left, and the peak's holder gives it to the taker.
        let cycle: Vec<Agent> = agents[peak_at..=holder_at].iter().rev().copied().collect();
        let deal = Deal::new(cycle).expect("agents are distinct");
        current.apply_in_place(&deal);
        trace.push(deal, current.clone());
        available[resources[peak_at]] = false;
        resources.remove(peak_at);
        agents.remove(holder_at);
    }
    Ok((current, trace))
}
