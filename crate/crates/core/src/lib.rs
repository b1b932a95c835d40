//! Abstract Stone duality over bases of codes: code algebras, abstract bases,
//! the nucleus, matrices between bases, and exact real arithmetic built on
//! the interval basis.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod basis;
pub mod bitset;
pub mod code_algebra;
pub mod instances;
pub mod matrices;
pub mod nucleus;
pub mod rational;
pub mod realcalc;
pub mod report;
pub mod spatial;
