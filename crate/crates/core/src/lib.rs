pub mod exactfield;
pub mod presentation;
pub mod tensorspace;
pub mod verdict;
pub mod hopfcore;
pub mod comodule;
pub mod duality;
pub mod galois;
pub mod cli;
pub mod corpus;

#[cfg(test)]
mod testutil;
