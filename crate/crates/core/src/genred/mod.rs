//! Small verified generating sets.

mod analysis;
mod cyclic;
mod greedy;
mod report;
mod two_generated;
mod verify;

pub use analysis::{
    all_reductions, auto_reduce, bound_report, pick_best, is_simple, min_generators, sylow_subgroup, BoundReport, SylowInfo, TheoremBound,
};
pub use cyclic::{cyclic_lift, cyclic_setup, reduce_cyclic, reduce_theorem_a_i, CyclicSetup, FHomomorphism, ReduceOptions};
pub use greedy::greedy_reduce;
pub use report::{GenSetReport, Method, BUDGET_EXHAUSTED, EXCEEDS_THEOREM_BOUND, KER_F_DISCREPANCY, NON_MINIMAL};
pub use two_generated::{generating_pair, reduce_two_generated};
pub use verify::{generates, naive_generating_set, verify_generates, Verification};
