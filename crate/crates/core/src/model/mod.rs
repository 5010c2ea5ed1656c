//! Typed abstract syntax for exercise assignments.
//!
//! Everything here is immutable after construction and carries the span it
//! was parsed from. Derived equality is span-sensitive; use [`strip`] before
//! comparing trees that came from different sources, and [`value_equal`] for
//! semantic value comparison.

mod diagnostic;
mod span;
pub mod strip;
mod value;

pub use diagnostic::{Diagnostic, RuleCode, Severity};
pub use span::{SourceSpan, Spanned};
pub use value::{snapshot_equal, symbolic_delta, value_equal, ObjectSnapshot, ValueLiteral};

/// An identifier token: class names, field names, state names, function names.
#[derive(Debug, Clone, PartialEq)]
pub struct Ident {
    pub name: String,
    pub span: SourceSpan,
}

impl Ident {
    pub fn new(name: impl Into<String>, span: SourceSpan) -> Self {
        Ident {
            name: name.into(),
            span,
        }
    }

    pub fn dummy(name: impl Into<String>) -> Self {
        Ident {
            name: name.into(),
            span: SourceSpan::dummy(),
        }
    }
}

/// A cross-reference from a function diagram to a state-transition rules
/// diagram. Resolution is the validator's job (rule V5).
#[derive(Debug, Clone, PartialEq)]
pub struct RuleRef {
    pub target: String,
    pub span: SourceSpan,
}

/// The root document: a named set of diagrams distributed as one assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExerciseAssignment {
    pub id: Spanned<String>,
    pub title: Option<Spanned<String>>,
    pub diagrams: Vec<Diagram>,
    pub span: SourceSpan,
}

impl ExerciseAssignment {
    pub fn diagram(&self, id: &str) -> Option<&Diagram> {
        self.diagrams.iter().find(|d| d.id.node == id)
    }
}

/// One diagram of the assignment. The five-variant body is a closed sum:
/// no other diagram kind is representable.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagram {
    pub id: Spanned<String>,
    pub note: Option<Spanned<String>>,
    pub body: DiagramBody,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DiagramBody {
    AlgorithmicFunction(FunctionSpec),
    StateChangeFunction(FunctionSpec),
    ClassDeclaration(Vec<ClassDecl>),
    Inheritance(Vec<ClassDecl>),
    StateTransitionRules(StateTransitionRules),
}

impl DiagramBody {
    /// The concrete-syntax keyword for this diagram kind.
    pub fn kind_name(&self) -> &'static str {
        match self {
            DiagramBody::AlgorithmicFunction(_) => "algorithmic",
            DiagramBody::StateChangeFunction(_) => "state_change",
            DiagramBody::ClassDeclaration(_) => "class",
            DiagramBody::Inheritance(_) => "inheritance",
            DiagramBody::StateTransitionRules(_) => "state_transitions",
        }
    }

    pub fn function_spec(&self) -> Option<&FunctionSpec> {
        match self {
            DiagramBody::AlgorithmicFunction(spec) | DiagramBody::StateChangeFunction(spec) => {
                Some(spec)
            }
            _ => None,
        }
    }
}

/// A semantic type reference used for parameters, returns and attributes.
#[derive(Debug, Clone, PartialEq)]
pub enum TypeRef {
    Int,
    Bool,
    Text,
    Array(Box<TypeRef>),
    /// A reference to a domain class by name.
    Class(String),
}

impl TypeRef {
    pub fn display(&self) -> String {
        match self {
            TypeRef::Int => "int".into(),
            TypeRef::Bool => "bool".into(),
            TypeRef::Text => "text".into(),
            TypeRef::Array(inner) => format!("{}[]", inner.display()),
            TypeRef::Class(name) => name.clone(),
        }
    }
}

/// The function drawn in a black box, with its example set.
///
/// `rule_ref`, when present, names the state-transition rules diagram the
/// starred examples point at; every example `rule_marker` carries the same
/// target (the parser guarantees this).
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSpec {
    pub display_name: Ident,
    pub params: Vec<Spanned<TypeRef>>,
    pub return_type: Option<Spanned<TypeRef>>,
    pub examples: Vec<FunctionExample>,
    pub rule_ref: Option<RuleRef>,
    pub span: SourceSpan,
}

/// One example row: inputs, optional output, and optional before/after
/// object states (positionally paired).
///
/// Input arity versus the signature is validator rule V2; before/after
/// pairing is rule V4. Neither is enforced by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionExample {
    pub before: Option<Vec<ObjectSnapshot>>,
    pub inputs: Vec<ValueLiteral>,
    pub output: Option<ValueLiteral>,
    /// The asterisk: this example's validity follows the referenced rules diagram.
    pub rule_marker: Option<RuleRef>,
    pub after: Option<Vec<ObjectSnapshot>>,
    pub span: SourceSpan,
}

impl FunctionExample {
    /// Positionally paired before/after snapshots. Empty when either list is
    /// missing; trailing unpaired snapshots are skipped (rule V4 reports them).
    pub fn snapshot_pairs(&self) -> Vec<(&ObjectSnapshot, &ObjectSnapshot)> {
        match (&self.before, &self.after) {
            (Some(before), Some(after)) => before.iter().zip(after.iter()).collect(),
            _ => Vec::new(),
        }
    }
}

/// One class box: attributes, constructors and method behaviors.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassDecl {
    pub name: Ident,
    pub attributes: Vec<AttributeSpec>,
    pub constructors: Vec<ConstructorSpec>,
    pub methods: Vec<MethodBehavior>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttributeSpec {
    pub name: Ident,
    pub ty: Option<Spanned<TypeRef>>,
    /// Rendered with the accompanying object glyph.
    pub object_valued: bool,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstructorSpec {
    pub params: Vec<Spanned<TypeRef>>,
    pub span: SourceSpan,
}

/// Expected behavior of one method, described by example (like a function).
#[derive(Debug, Clone, PartialEq)]
pub struct MethodBehavior {
    pub name: Ident,
    pub examples: Vec<FunctionExample>,
    pub span: SourceSpan,
}

/// A simplified state machine: only the valid transitions are representable;
/// the absence of a transition means it is forbidden.
#[derive(Debug, Clone, PartialEq)]
pub struct StateTransitionRules {
    pub states: Vec<StateDecl>,
    pub transitions: Vec<TransitionDecl>,
    pub span: SourceSpan,
}

impl StateTransitionRules {
    pub fn state(&self, name: &str) -> Option<&StateDecl> {
        self.states.iter().find(|s| s.name.name == name)
    }

    pub fn has_transition(&self, from: &str, to: &str) -> bool {
        self.transitions
            .iter()
            .any(|t| t.from.name == from && t.to.name == to)
    }
}

/// A state and the fields visible inside the object while in that state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateDecl {
    pub name: Ident,
    pub visible_fields: Vec<Ident>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransitionDecl {
    pub from: Ident,
    pub to: Ident,
    pub action: Spanned<String>,
    pub span: SourceSpan,
}

#[cfg(test)]
mod thread_safety {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn model_types_are_shareable_across_threads() {
        assert_send_sync::<ExerciseAssignment>();
        assert_send_sync::<Diagram>();
        assert_send_sync::<ValueLiteral>();
        assert_send_sync::<Diagnostic>();
    }
}
