//! Structured, abstract and value-based argumentation, dialogical logic games
//! and a DKQ derivation checker.

pub mod af;
pub mod argument;
pub mod dialogue;
pub mod dkq;
pub mod logic;
pub mod vaf;
