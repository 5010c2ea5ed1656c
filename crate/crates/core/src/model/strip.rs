//! Span erasure, for comparing trees parsed from different sources.

use super::*;

pub fn strip_assignment(a: &mut ExerciseAssignment) {
    a.span = SourceSpan::dummy();
    a.id.span = SourceSpan::dummy();
    if let Some(title) = &mut a.title {
        title.span = SourceSpan::dummy();
    }
    for diagram in &mut a.diagrams {
        strip_diagram(diagram);
    }
}

pub fn strip_diagram(d: &mut Diagram) {
    d.span = SourceSpan::dummy();
    d.id.span = SourceSpan::dummy();
    if let Some(note) = &mut d.note {
        note.span = SourceSpan::dummy();
    }
    match &mut d.body {
        DiagramBody::AlgorithmicFunction(spec) | DiagramBody::StateChangeFunction(spec) => {
            strip_function_spec(spec)
        }
        DiagramBody::ClassDeclaration(classes) | DiagramBody::Inheritance(classes) => {
            classes.iter_mut().for_each(strip_class)
        }
        DiagramBody::StateTransitionRules(rules) => strip_rules(rules),
    }
}

pub fn strip_function_spec(spec: &mut FunctionSpec) {
    spec.span = SourceSpan::dummy();
    strip_ident(&mut spec.display_name);
    for param in &mut spec.params {
        param.span = SourceSpan::dummy();
    }
    if let Some(ret) = &mut spec.return_type {
        ret.span = SourceSpan::dummy();
    }
    if let Some(rule_ref) = &mut spec.rule_ref {
        rule_ref.span = SourceSpan::dummy();
    }
    spec.examples.iter_mut().for_each(strip_example);
}

pub fn strip_example(example: &mut FunctionExample) {
    example.span = SourceSpan::dummy();
    if let Some(before) = &mut example.before {
        before.iter_mut().for_each(strip_snapshot);
    }
    example.inputs.iter_mut().for_each(strip_value);
    if let Some(output) = &mut example.output {
        strip_value(output);
    }
    if let Some(marker) = &mut example.rule_marker {
        marker.span = SourceSpan::dummy();
    }
    if let Some(after) = &mut example.after {
        after.iter_mut().for_each(strip_snapshot);
    }
}

pub fn strip_class(class: &mut ClassDecl) {
    class.span = SourceSpan::dummy();
    strip_ident(&mut class.name);
    for attr in &mut class.attributes {
        attr.span = SourceSpan::dummy();
        strip_ident(&mut attr.name);
        if let Some(ty) = &mut attr.ty {
            ty.span = SourceSpan::dummy();
        }
    }
    for ctor in &mut class.constructors {
        ctor.span = SourceSpan::dummy();
        for param in &mut ctor.params {
            param.span = SourceSpan::dummy();
        }
    }
    for method in &mut class.methods {
        method.span = SourceSpan::dummy();
        strip_ident(&mut method.name);
        method.examples.iter_mut().for_each(strip_example);
    }
}

pub fn strip_rules(rules: &mut StateTransitionRules) {
    rules.span = SourceSpan::dummy();
    for state in &mut rules.states {
        state.span = SourceSpan::dummy();
        strip_ident(&mut state.name);
        state.visible_fields.iter_mut().for_each(strip_ident);
    }
    for transition in &mut rules.transitions {
        transition.span = SourceSpan::dummy();
        strip_ident(&mut transition.from);
        strip_ident(&mut transition.to);
        transition.action.span = SourceSpan::dummy();
    }
}

pub fn strip_value(value: &mut ValueLiteral) {
    match value {
        ValueLiteral::Int { span, .. }
        | ValueLiteral::Bool { span, .. }
        | ValueLiteral::Text { span, .. }
        | ValueLiteral::SymbolicCount { span, .. } => *span = SourceSpan::dummy(),
        ValueLiteral::Array { elements, span } => {
            *span = SourceSpan::dummy();
            elements.iter_mut().for_each(strip_value);
        }
        ValueLiteral::Object(snapshot) => strip_snapshot(snapshot),
    }
}

pub fn strip_snapshot(snapshot: &mut ObjectSnapshot) {
    snapshot.span = SourceSpan::dummy();
    strip_ident(&mut snapshot.class_name);
    if let Some(tag) = &mut snapshot.state_tag {
        strip_ident(tag);
    }
    for (name, value) in &mut snapshot.fields {
        strip_ident(name);
        strip_value(value);
    }
}

fn strip_ident(ident: &mut Ident) {
    ident.span = SourceSpan::dummy();
}

/// Structural equality modulo spans (field order still matters, unlike
/// [`super::value_equal`]). The printer uses this to recognize inputs that
/// repeat a `before:` snapshot.
pub fn snapshot_eq_modulo_spans(a: &ObjectSnapshot, b: &ObjectSnapshot) -> bool {
    let mut a = a.clone();
    let mut b = b.clone();
    strip_snapshot(&mut a);
    strip_snapshot(&mut b);
    a == b
}
