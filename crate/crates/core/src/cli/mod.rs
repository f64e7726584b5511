//! File formats, the bundled corpus and the command implementations behind
//! the `flatgroup` binary.

pub mod commands;
pub mod corpus;
pub mod format;
pub mod render;

pub use commands::{
    bound_violations, cmd_bounds, cmd_check_torsion, cmd_corpus, cmd_reduce, cmd_validate, cmd_verify, MethodChoice,
    Outcome, RunOptions, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK,
};
pub use format::{ElementRecord, Expected, GroupFile, InputError, LoadedGroup};
