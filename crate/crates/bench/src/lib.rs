//! Shared fixtures for the enumeration benchmarks.

use cbasis_core::HighestWeight;

/// `(label, highest weight, depth)` cases, from cheap to heavy.
pub fn cases() -> Vec<(&'static str, HighestWeight, u32)> {
    [("l2_L0", "1,0,0", 8), ("l2_L1", "0,1,0", 8), ("l3_L0+L3", "1,0,0,1", 5), ("l2_2L2", "0,0,2", 6)]
        .into_iter()
        .map(|(name, hw, d)| (name, hw.parse().expect("fixture weights parse"), d))
        .collect()
}
