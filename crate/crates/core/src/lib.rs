pub mod error;
pub mod classify;
pub mod cli;
pub mod factroid;
pub mod oracle;
pub mod regular_egyptian;
pub mod rings;
pub mod subspace;
