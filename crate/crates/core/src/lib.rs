//! A desk-scale laboratory for countable linear orders and the model
//! theory built on them.
//!
//! The crate has three layers:
//!
//! * [`order`] — linear orders as finite terms, with decidable point
//!   comparison, a fixed enumeration, neighbor and endpoint queries,
//!   tail views, and a textual grammar;
//! * [`logic`], [`iso`], [`reduce`] — first-order point classification,
//!   EF-invariant and isomorphism machinery, and the expansion/stacking
//!   reductions whose image class identifies tail isomorphism with
//!   isomorphism;
//! * [`models`], [`invariants`] — concrete ordered structures (discrete
//!   chains, Hahn-style divisible groups, their affine variant) with
//!   Archimedean ladders, nonsimplicity search and faithfulness checks,
//!   and the smooth / countable-set invariants for a dense theory whose
//!   type spaces stay simple.
//!
//! [`catalog`] fixes the fourteen benchmark orders and [`verify`] runs
//! every claim-level suite over them; the `ordlab` binary exposes all of
//! it on the command line.

pub mod catalog;
pub mod invariants;
pub mod models;
pub mod iso;
pub mod logic;
pub mod order;
pub mod reduce;
pub mod verify;

pub use order::{parse_term, OrderTerm, Point, TailView};
