//! The value model: literals appearing in example inputs, outputs and
//! object snapshots, plus the semantic comparison operations.

use super::span::SourceSpan;
use super::Ident;

/// A literal value written in an example.
///
/// Array homogeneity and symbolic-count shape are checked by the validator
/// and parser respectively, not by construction.
#[derive(Debug, Clone, PartialEq)]
pub enum ValueLiteral {
    Int {
        value: i64,
        span: SourceSpan,
    },
    Bool {
        value: bool,
        span: SourceSpan,
    },
    Text {
        value: String,
        span: SourceSpan,
    },
    Array {
        elements: Vec<ValueLiteral>,
        span: SourceSpan,
    },
    Object(ObjectSnapshot),
    /// A relative collection size such as `N + 1 "tasks"`.
    SymbolicCount {
        base: String,
        offset: i64,
        unit: String,
        span: SourceSpan,
    },
}

impl ValueLiteral {
    pub fn span(&self) -> &SourceSpan {
        match self {
            ValueLiteral::Int { span, .. }
            | ValueLiteral::Bool { span, .. }
            | ValueLiteral::Text { span, .. }
            | ValueLiteral::Array { span, .. }
            | ValueLiteral::SymbolicCount { span, .. } => span,
            ValueLiteral::Object(snapshot) => &snapshot.span,
        }
    }

    /// The variant name, used for homogeneity checks and messages.
    pub fn kind_name(&self) -> &'static str {
        match self {
            ValueLiteral::Int { .. } => "int",
            ValueLiteral::Bool { .. } => "bool",
            ValueLiteral::Text { .. } => "text",
            ValueLiteral::Array { .. } => "array",
            ValueLiteral::Object(_) => "object",
            ValueLiteral::SymbolicCount { .. } => "symbolic count",
        }
    }
}

/// The observed state of one object: class, field values and an optional
/// tag naming a state in a state-transition rules diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectSnapshot {
    pub class_name: Ident,
    pub state_tag: Option<Ident>,
    /// Field order is preserved from source for rendering; semantic
    /// equality ignores it. Names are unique (enforced by the parser).
    pub fields: Vec<(Ident, ValueLiteral)>,
    pub span: SourceSpan,
}

impl ObjectSnapshot {
    pub fn field(&self, name: &str) -> Option<&ValueLiteral> {
        self.fields
            .iter()
            .find(|(n, _)| n.name == name)
            .map(|(_, v)| v)
    }
}

/// Structural value equality.
///
/// Text compares case- and whitespace-sensitively. Symbolic counts compare
/// by (base, offset, unit). Object snapshots compare by class, state tag and
/// field *set* (declaration order is a rendering concern only).
pub fn value_equal(a: &ValueLiteral, b: &ValueLiteral) -> bool {
    match (a, b) {
        (ValueLiteral::Int { value: x, .. }, ValueLiteral::Int { value: y, .. }) => x == y,
        (ValueLiteral::Bool { value: x, .. }, ValueLiteral::Bool { value: y, .. }) => x == y,
        (ValueLiteral::Text { value: x, .. }, ValueLiteral::Text { value: y, .. }) => x == y,
        (ValueLiteral::Array { elements: xs, .. }, ValueLiteral::Array { elements: ys, .. }) => {
            xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| value_equal(x, y))
        }
        (ValueLiteral::Object(x), ValueLiteral::Object(y)) => snapshot_equal(x, y),
        (
            ValueLiteral::SymbolicCount {
                base: b1,
                offset: o1,
                unit: u1,
                ..
            },
            ValueLiteral::SymbolicCount {
                base: b2,
                offset: o2,
                unit: u2,
                ..
            },
        ) => b1 == b2 && o1 == o2 && u1 == u2,
        _ => false,
    }
}

/// Semantic snapshot equality: class, state tag and fields as an unordered map.
pub fn snapshot_equal(a: &ObjectSnapshot, b: &ObjectSnapshot) -> bool {
    if a.class_name.name != b.class_name.name {
        return false;
    }
    let tag = |s: &ObjectSnapshot| s.state_tag.as_ref().map(|t| t.name.clone());
    if tag(a) != tag(b) {
        return false;
    }
    if a.fields.len() != b.fields.len() {
        return false;
    }
    a.fields
        .iter()
        .all(|(name, value)| match b.field(&name.name) {
            Some(other) => value_equal(value, other),
            None => false,
        })
}

/// The signed difference between two symbolic counts with the same base and
/// unit, or `None` when the values are not comparable symbolically.
pub fn symbolic_delta(before: &ValueLiteral, after: &ValueLiteral) -> Option<i64> {
    match (before, after) {
        (
            ValueLiteral::SymbolicCount {
                base: b1,
                offset: o1,
                unit: u1,
                ..
            },
            ValueLiteral::SymbolicCount {
                base: b2,
                offset: o2,
                unit: u2,
                ..
            },
        ) if b1 == b2 && u1 == u2 => Some(o2 - o1),
        _ => None,
    }
}
