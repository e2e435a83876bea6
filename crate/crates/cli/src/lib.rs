//! Library behind the `hypergirth` binary: file handling, recipes, the
//! pipeline runner and the subcommand bodies.

pub mod artifact;
pub mod commands;
pub mod error;
pub mod ops;
pub mod pipeline;
pub mod recipe;

pub use error::CliError;

/// Environment variable overriding the oracle's incidence budget.
pub const ORACLE_BUDGET_ENV: &str = "HYPERGIRTH_ORACLE_BUDGET";

/// Oracle budget from the environment, or the library default.
pub fn oracle_budget() -> Result<usize, CliError> {
    match std::env::var(ORACLE_BUDGET_ENV) {
        Ok(v) => ops::parse_count(&v)
            .map_err(|_| CliError::Parse(format!("{ORACLE_BUDGET_ENV}={v:?} is not a count"))),
        Err(_) => Ok(hypergirth::girth::DEFAULT_ORACLE_INCIDENCES),
    }
}
