//! `Z^n` as a module over the group ring of a finite matrix group.

mod bounds;
mod module;
mod search;

pub use bounds::{bound_cyclic, bound_prime, c4_block_reduce, factorize, is_prime};
pub use module::{coinvariant_lower_bound, zg_span_is_full, GModule};
pub use search::{
    default_pool, formula_bound, rank_upper_search, FormulaBound, FormulaKind, RankBounds, DEFAULT_BUDGET,
};
