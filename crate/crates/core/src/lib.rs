#![no_std]
extern crate alloc;

pub mod arith;
pub mod catalog;
pub mod elim;
pub mod group;
pub mod hgf;
pub mod solver;
pub mod topology;
