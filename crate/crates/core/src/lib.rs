//! Core algorithms for theories of finite nested sequences.
//!
//! The crate is organised around the standard model of nested sequences:
//! the [`seq`] module holds the sequences themselves, [`logic`] the
//! first-order syntax over the three signatures, [`eval`] truth evaluation
//! in the standard model, [`cert`] proof certificates for true
//! Σ-sentences, [`indexed`] the indexed-sequence algebra, [`snake`] the
//! snake codec for binary trees and [`hf`] the ordered-snake encoding of
//! hereditarily finite sets.  [`axioms`] checks every axiom system on a
//! bounded domain by brute force.
//!
//! The crate is `no_std` (with `alloc`); IO, text formats and the CLI
//! live in the companion `seqthy` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod axioms;
pub mod cert;
pub mod eval;
pub mod hf;
pub mod indexed;
pub mod logic;
pub mod seq;
pub mod snake;
