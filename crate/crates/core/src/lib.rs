//! Splay-tree deques, spinal path compressions on ordered trees, and the
//! Davenport-Schinzel transcription of compression traces.
//!
//! * [`splay`]: splay tree with push/pop/inject/eject and a rotation ledger.
//! * [`compression`]: ordered forests, halving/total compressions, the
//!   left-half general-tree view and per-operation correspondence checks.
//! * [`pattern`]: symbol sequences, forbidden-pattern containment, the
//!   extremal-function oracle and the inverse-Ackermann family.
//! * [`transcription`]: blocks, epochs, exposed nodes and label emission.
//! * [`workload`]: workload generation, execution and CSV reporting.

pub mod compression;
pub mod pattern;
pub mod splay;
pub mod transcription;
pub mod workload;
