//! Compiler-style diagnostic lines on standard error:
//! `file:line:col: [CODE] severity: message`, colored when stderr is a
//! terminal and NO_COLOR is unset.

use std::io::IsTerminal;

use oopspec_core::model::{Diagnostic, Severity};
use oopspec_core::ParseError;

pub fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stderr().is_terminal()
}

fn paint(severity: Severity, text: &str, color: bool) -> String {
    if !color {
        return text.to_string();
    }
    let code = match severity {
        Severity::Error => "31",
        Severity::Warning => "33",
        Severity::Info => "36",
    };
    format!("\x1b[{code}m{text}\x1b[0m")
}

pub fn print_diagnostic(diagnostic: &Diagnostic, color: bool) {
    eprintln!(
        "{}:{}:{}: [{}] {}: {}",
        diagnostic.span.file,
        diagnostic.span.start_line,
        diagnostic.span.start_col,
        diagnostic.rule,
        paint(diagnostic.severity, diagnostic.severity.as_str(), color),
        diagnostic.message
    );
}

pub fn print_parse_error(error: &ParseError, color: bool) {
    eprintln!(
        "{}:{}:{}: [parse] {}: expected {}, found {}",
        error.span.file,
        error.span.start_line,
        error.span.start_col,
        paint(Severity::Error, "error", color),
        error.expected.join(" or "),
        error.found
    );
}

pub fn print_failure(context: &str, message: &str, color: bool) {
    eprintln!(
        "{context}: {}: {message}",
        paint(Severity::Error, "error", color)
    );
}
