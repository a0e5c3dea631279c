pub mod alternating;
pub mod branching;
pub mod classifier;
pub mod error;
pub mod mullineux;
pub mod partition;
pub mod selftest;
pub mod specht;
