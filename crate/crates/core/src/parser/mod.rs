//! Text form of exercise assignments: parsing with spans, and canonical
//! pretty-printing. `parse` and `print` are pure; for every valid tree `A`,
//! `parse(print(A))` equals `A` modulo spans.

mod grammar;
mod lexer;
mod printer;

use std::fmt;

use crate::model::{ExerciseAssignment, SourceSpan};

pub use printer::print;

/// The first syntax violation found, with what the parser would have
/// accepted at that point.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, found {}",
            self.span,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

/// Parse DSL source text into an assignment. Every AST node carries the
/// span it was parsed from; on failure no partial AST is returned.
pub fn parse(source: &str, file: &str) -> Result<ExerciseAssignment, ParseError> {
    let tokens = lexer::lex(source, file)?;
    grammar::Parser::new(tokens).assignment()
}
