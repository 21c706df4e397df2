//! Verification engine for congruences of Franel, Apery, Domb and
//! Catalan-Larcombe-French numbers.
//!
//! The crate generates the underlying combinatorial sequences exactly and in
//! residue rings Z/p^e Z, checks a registry of polynomial identities in exact
//! rational arithmetic, computes quadratic-form representations p = x^2 + d y^2
//! (and 4p = x^2 + d y^2) of primes, and mechanically verifies a registry of
//! congruence statements over configurable prime ranges, producing
//! reproducible reports.
//!
//! Modules:
//! - [`modarith`]: prime generation, Z/p^e Z, p-adic residues, binomials
//! - [`sequences`]: exact and mod-p^e sequence tables
//! - [`identities`]: exact integer/rational identity checks
//! - [`quadforms`]: Cornacchia representations and branch selection
//! - [`engine`]: truncated-sum evaluation and the congruence case registry
//! - [`conjectures`]: bounded empirical stress tests of open conjectures
//! - [`report`]: JSON/CSV/Markdown report rendering
//! - [`cli`]: command-line front end

pub mod cli;
pub mod conjectures;
pub mod engine;
pub mod identities;
pub mod modarith;
pub mod quadforms;
pub mod report;
pub mod sequences;
