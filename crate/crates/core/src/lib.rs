//! Brand slogan generation by remixing famous quotes.
//!
//! The pipeline decomposes slogan writing into four controlled stages
//! (quote matching, structure breakdown, vocabulary replacement, remix
//! generation), validates the remix constraints deterministically, and
//! evaluates slogan sets with n-gram diversity metrics and LLM-as-a-judge
//! protocols (binary fluency/faithfulness verdicts and pairwise hook
//! tournaments).
//!
//! Modules:
//! - [`domain`] — shared domain types (brands, personas, quotes, slogans).
//! - [`metrics`] — Distinct-2, sentence/pairwise/self BLEU, mean±std.
//! - [`gateway`] — chat-completion access with retries, rate limiting,
//!   caching, and a deterministic mock backend.
//! - [`remix`] — prompt cards, transcript parsing, edit-distance
//!   constraints, and the four-stage remix pipeline.
//! - [`judge`] — binary and pairwise LLM-as-a-judge protocols with
//!   tournament tallies and hook scores.
//! - [`harness`] — the brand × persona experiment grid, persistence,
//!   evaluation, and report emission.
//! - [`config`] — the TOML configuration schema (roster, models, limits).

pub mod config;
pub mod domain;
pub mod gateway;
pub mod harness;
pub mod judge;
pub mod metrics;
pub mod remix;
