//! Std companion to `seqthy-core`: text formats for every value kind,
//! JSON certificate files, and axiom report rendering.  The binary in
//! `main.rs` is a thin front end over these modules.

pub mod certio;
pub mod report;
pub mod text;
