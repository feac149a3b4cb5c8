//! Core library for query performance prediction experiments.
//!
//! Everything in this crate is pure computation over parsed, immutable data:
//! TREC-style run files and qrels are parsed into the shared data model
//! ([`RunSet`], [`QrelsSet`], [`FeatureTable`], [`EvalTable`]), per-query
//! retrieval effectiveness is measured ([`metrics`]), post-retrieval
//! predictors are computed ([`sota`], [`letor`]), and predictor quality is
//! analysed with correlation statistics ([`stats`]), learned models
//! ([`learn`]), and selective routing policies ([`routing`]).
//!
//! The crate is `no_std` (with `alloc`); file IO, the CLI, and the synthetic
//! collection generator live in the companion `qpp-lab` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod letor;
pub mod learn;
pub mod metrics;
pub mod parse;
pub mod report;
pub mod routing;
pub mod sota;
pub mod stats;
pub mod types;

pub use types::{
    CorpusScoreTable, EvalTable, FeatureTable, Provenance, QrelsSet, QueryId, QueryTermStats,
    RunEntry, RunSet, Warnings,
};
