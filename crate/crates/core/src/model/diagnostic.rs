//! Validator and linter findings.

use std::fmt;

use super::span::SourceSpan;

/// Every rule the validator and linter can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleCode {
    V1,
    V2,
    V3,
    V4,
    V5,
    V6,
    V7,
    V8,
    V9,
    V10,
    L1,
    L2,
    L3,
}

impl RuleCode {
    pub const ALL: [RuleCode; 13] = [
        RuleCode::V1,
        RuleCode::V2,
        RuleCode::V3,
        RuleCode::V4,
        RuleCode::V5,
        RuleCode::V6,
        RuleCode::V7,
        RuleCode::V8,
        RuleCode::V9,
        RuleCode::V10,
        RuleCode::L1,
        RuleCode::L2,
        RuleCode::L3,
    ];

    pub fn parse(text: &str) -> Option<RuleCode> {
        RuleCode::ALL.iter().copied().find(|c| c.as_str() == text)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            RuleCode::V1 => "V1",
            RuleCode::V2 => "V2",
            RuleCode::V3 => "V3",
            RuleCode::V4 => "V4",
            RuleCode::V5 => "V5",
            RuleCode::V6 => "V6",
            RuleCode::V7 => "V7",
            RuleCode::V8 => "V8",
            RuleCode::V9 => "V9",
            RuleCode::V10 => "V10",
            RuleCode::L1 => "L1",
            RuleCode::L2 => "L2",
            RuleCode::L3 => "L3",
        }
    }
}

impl fmt::Display for RuleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl Severity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One validator or linter finding, anchored to a source span.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub rule: RuleCode,
    pub severity: Severity,
    pub message: String,
    pub span: SourceSpan,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}: [{}] {}: {}",
            self.span.file,
            self.span.start_line,
            self.span.start_col,
            self.rule,
            self.severity,
            self.message
        )
    }
}
