//! Finite, machine-checkable intercategories.
//!
//! An intercategory is a 3-dimensional categorical structure with one strict
//! (transversal) and two weak (horizontal, vertical) compositions, where the
//! interchange between the two weak directions holds only up to directed,
//! generally non-invertible comparison cells. This crate provides:
//!
//! - the eight-sorted model and an abstract instance interface ([`model`]);
//! - a finite-set kernel with pullbacks, pushouts and mediators ([`finset`]);
//! - two computed instances: the one-object duoidal instance on finite sets
//!   (product / coproduct) and spans of cospans of finite sets
//!   ([`instances`]);
//! - an exhaustive-or-sampled coherence-law verifier with witness-bearing
//!   reports ([`laws`]);
//! - the morphism, double-cell and commuting-cube layer of the strict triple
//!   category of intercategories ([`morphisms`]);
//! - the h / v / tr dualities ([`dualities`]);
//! - a JSON description format for table-backed instances ([`describe`]).
//!
//! The `intercat` binary exposes `check`, `demo` and `export` subcommands
//! over the same machinery.

pub mod describe;
pub mod dualities;
pub mod finset;
pub mod instances;
pub mod laws;
pub mod model;
pub mod morphisms;

pub use finset::{coproduct, product, pullback, pullback_mediate, pushout, pushout_mediate};
pub use finset::{FinFun, FinSet, LimitResult};
pub use instances::duoidal::DuoidalInstance;
pub use instances::span_cospan::SpanCospanInstance;
pub use instances::table::TableInstance;
pub use model::{
    BasicCell, Chirality, Cube, HorArrow, HorCell, InstanceHandle, InterInstance, ObjId, OpError,
    OpResult, TransArrow, Val, VertArrow, VertCell,
};
