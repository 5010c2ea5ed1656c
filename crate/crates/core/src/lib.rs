//! Compiler library for the oopspec exercise-diagram language.
//!
//! The pipeline is: [`parser::parse`] source text into a typed
//! [`model::ExerciseAssignment`], [`validator::validate`] it against the
//! notation rules, [`layout::layout`] each diagram into a deterministic
//! [`layout::SceneGraph`], and [`render::render`] that scene to byte-stable
//! SVG. Every stage is a pure function; rendering the same sources twice
//! yields identical bytes.

pub mod layout;
pub mod model;
pub mod parser;
pub mod render;
pub mod validator;

pub use model::ExerciseAssignment;
pub use parser::{parse, print, ParseError};
pub use render::{render, Theme};
pub use validator::{validate, RuleConfig};
