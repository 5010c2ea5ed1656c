//! The individual notation rules. Diagram-local rules live here; rules that
//! need assignment context (V5, V6, V9, V10 tag resolution) are driven from
//! the module root.

use std::collections::BTreeSet;

use crate::model::{
    ClassDecl, Diagnostic, Diagram, DiagramBody, FunctionExample, FunctionSpec, ObjectSnapshot,
    RuleCode, Severity, SourceSpan, StateTransitionRules, ValueLiteral,
};

use super::config::RuleConfig;
use super::infer_common_members;

pub(super) struct Collector<'a> {
    pub config: &'a RuleConfig,
    pub diagnostics: Vec<Diagnostic>,
}

impl<'a> Collector<'a> {
    pub fn new(config: &'a RuleConfig) -> Self {
        Collector {
            config,
            diagnostics: Vec::new(),
        }
    }

    pub fn emit(&mut self, rule: RuleCode, default: Severity, span: &SourceSpan, message: String) {
        if let Some(severity) = self.config.effective_severity(rule, default) {
            self.diagnostics.push(Diagnostic {
                rule,
                severity,
                message,
                span: span.clone(),
            });
        }
    }

    /// Deterministic presentation order: source position, then rule code.
    /// Identical findings collapse into one; a `@k` input reference is the
    /// same source object as its `before:` snapshot and must not report twice.
    pub fn into_sorted(mut self) -> Vec<Diagnostic> {
        self.diagnostics.sort_by(|a, b| {
            (a.span.start_line, a.span.start_col, a.rule).cmp(&(
                b.span.start_line,
                b.span.start_col,
                b.rule,
            ))
        });
        self.diagnostics.dedup();
        self.diagnostics
    }
}

/// All rules that can be decided from one diagram alone.
pub(super) fn check_diagram_local(diagram: &Diagram, cx: &mut Collector<'_>) {
    if let Some(note) = &diagram.note {
        let words = note.node.split_whitespace().count();
        if words > cx.config.max_note_words {
            cx.emit(
                RuleCode::L2,
                Severity::Warning,
                &note.span,
                format!(
                    "note has {words} words; limit is {} (keep text out of diagrams)",
                    cx.config.max_note_words
                ),
            );
        }
    }

    match &diagram.body {
        DiagramBody::AlgorithmicFunction(spec) => {
            check_function_common(spec, cx);
        }
        DiagramBody::StateChangeFunction(spec) => {
            check_function_common(spec, cx);
            check_state_change_effects(spec, cx);
        }
        DiagramBody::ClassDeclaration(classes) => check_classes(classes, cx),
        DiagramBody::Inheritance(classes) => {
            check_classes(classes, cx);
            check_inheritance(diagram, classes, cx);
        }
        DiagramBody::StateTransitionRules(rules) => check_rules_integrity(rules, cx),
    }
}

fn check_function_common(spec: &FunctionSpec, cx: &mut Collector<'_>) {
    // V1: at least two examples.
    if spec.examples.len() < 2 {
        cx.emit(
            RuleCode::V1,
            Severity::Error,
            &spec.display_name.span,
            format!(
                "function diagram has {} example(s); a minimum of two examples is required",
                spec.examples.len()
            ),
        );
    }

    for example in &spec.examples {
        // V2: arity.
        if example.inputs.len() != spec.params.len() {
            cx.emit(
                RuleCode::V2,
                Severity::Error,
                &example.span,
                format!(
                    "example has {} inputs but `{}` declares {} parameters",
                    example.inputs.len(),
                    spec.display_name.name,
                    spec.params.len()
                ),
            );
        }
        // V4: before/after pairing.
        check_pairing(example, cx);
        // V8: arrays, everywhere a value can appear.
        walk_example_values(example, &mut |value| check_array_homogeneity(value, cx));
    }

    // L1: obfuscated display name.
    if !cx.config.name_is_obfuscated(&spec.display_name.name) {
        cx.emit(
            RuleCode::L1,
            Severity::Warning,
            &spec.display_name.span,
            format!(
                "function name `{}` is not obfuscated (expected pattern `{}`)",
                spec.display_name.name, cx.config.obfuscation_pattern
            ),
        );
    }
    // L3: descriptive words leak intent.
    let lowered = spec.display_name.name.to_lowercase();
    if let Some(stem) = cx
        .config
        .descriptive_stems
        .iter()
        .find(|stem| lowered.contains(stem.as_str()))
    {
        cx.emit(
            RuleCode::L3,
            Severity::Warning,
            &spec.display_name.span,
            format!(
                "function name `{}` contains descriptive word `{stem}`",
                spec.display_name.name
            ),
        );
    }
}

/// V3: a state-change example must change at least one snapshot, or be a
/// failure case: a returned value with every snapshot unchanged.
fn check_state_change_effects(spec: &FunctionSpec, cx: &mut Collector<'_>) {
    for example in &spec.examples {
        if !pairing_holds(example) {
            continue; // V4 already reported; "changed" is not well defined.
        }
        let changed = example
            .snapshot_pairs()
            .iter()
            .any(|(before, after)| !crate::model::snapshot_equal(before, after));
        if !changed && example.output.is_none() {
            cx.emit(
                RuleCode::V3,
                Severity::Error,
                &example.span,
                "state-change example neither changes any object state nor returns a value".into(),
            );
        }
    }
}

fn pairing_holds(example: &FunctionExample) -> bool {
    match (&example.before, &example.after) {
        (None, None) => true,
        (Some(before), Some(after)) => {
            before.len() == after.len()
                && before
                    .iter()
                    .zip(after)
                    .all(|(b, a)| b.class_name.name == a.class_name.name)
        }
        _ => false,
    }
}

fn check_pairing(example: &FunctionExample, cx: &mut Collector<'_>) {
    match (&example.before, &example.after) {
        (None, None) => {}
        (Some(_), None) => cx.emit(
            RuleCode::V4,
            Severity::Error,
            &example.span,
            "example has a `before:` list but no `after:` list".into(),
        ),
        (None, Some(_)) => cx.emit(
            RuleCode::V4,
            Severity::Error,
            &example.span,
            "example has an `after:` list but no `before:` list".into(),
        ),
        (Some(before), Some(after)) => {
            if before.len() != after.len() {
                cx.emit(
                    RuleCode::V4,
                    Severity::Error,
                    &example.span,
                    format!(
                        "before/after lists have different lengths ({} vs {})",
                        before.len(),
                        after.len()
                    ),
                );
                return;
            }
            for (index, (b, a)) in before.iter().zip(after).enumerate() {
                if b.class_name.name != a.class_name.name {
                    cx.emit(
                        RuleCode::V4,
                        Severity::Error,
                        &a.span,
                        format!(
                            "before/after pair {} changes class from `{}` to `{}`",
                            index + 1,
                            b.class_name.name,
                            a.class_name.name
                        ),
                    );
                }
            }
        }
    }
}

fn check_classes(classes: &[ClassDecl], cx: &mut Collector<'_>) {
    for class in classes {
        for method in &class.methods {
            for example in &method.examples {
                check_pairing(example, cx);
                walk_example_values(example, &mut |value| check_array_homogeneity(value, cx));
            }
        }
    }
}

/// V7: an inheritance exercise needs at least two child classes, and warns
/// when they imply no superclass at all.
fn check_inheritance(diagram: &Diagram, classes: &[ClassDecl], cx: &mut Collector<'_>) {
    match infer_common_members(classes) {
        Err(_) => cx.emit(
            RuleCode::V7,
            Severity::Error,
            &diagram.id.span,
            format!(
                "inheritance diagram declares {} class(es); at least 2 are required",
                classes.len()
            ),
        ),
        Ok(members) if members.is_empty() => cx.emit(
            RuleCode::V7,
            Severity::Warning,
            &diagram.id.span,
            "child classes share no common attributes or methods; there is no superclass to infer"
                .into(),
        ),
        Ok(_) => {}
    }
}

/// V10 (local part): states unique, transition endpoints declared.
fn check_rules_integrity(rules: &StateTransitionRules, cx: &mut Collector<'_>) {
    let mut seen = BTreeSet::new();
    for state in &rules.states {
        if !seen.insert(state.name.name.clone()) {
            cx.emit(
                RuleCode::V10,
                Severity::Error,
                &state.name.span,
                format!("duplicate state `{}`", state.name.name),
            );
        }
    }
    for transition in &rules.transitions {
        for endpoint in [&transition.from, &transition.to] {
            if !seen.contains(&endpoint.name) {
                cx.emit(
                    RuleCode::V10,
                    Severity::Error,
                    &endpoint.span,
                    format!("transition references undeclared state `{}`", endpoint.name),
                );
            }
        }
    }
}

/// V8: every array literal holds elements of one kind.
fn check_array_homogeneity(value: &ValueLiteral, cx: &mut Collector<'_>) {
    if let ValueLiteral::Array { elements, span } = value {
        let mut kinds: Vec<&'static str> = elements.iter().map(|e| e.kind_name()).collect();
        kinds.dedup();
        if kinds.len() > 1 {
            cx.emit(
                RuleCode::V8,
                Severity::Error,
                span,
                format!("array mixes {} elements", kinds.join(" and ")),
            );
        }
    }
}

/// Visit every value reachable from an example, including snapshot fields.
pub(super) fn walk_example_values(
    example: &FunctionExample,
    visit: &mut impl FnMut(&ValueLiteral),
) {
    for value in &example.inputs {
        walk_value(value, visit);
    }
    if let Some(output) = &example.output {
        walk_value(output, visit);
    }
    for list in [&example.before, &example.after].into_iter().flatten() {
        for snapshot in list {
            walk_snapshot_fields(snapshot, visit);
        }
    }
}

fn walk_value(value: &ValueLiteral, visit: &mut impl FnMut(&ValueLiteral)) {
    visit(value);
    match value {
        ValueLiteral::Array { elements, .. } => {
            for element in elements {
                walk_value(element, visit);
            }
        }
        ValueLiteral::Object(snapshot) => walk_snapshot_fields(snapshot, visit),
        _ => {}
    }
}

fn walk_snapshot_fields(snapshot: &ObjectSnapshot, visit: &mut impl FnMut(&ValueLiteral)) {
    for (_, value) in &snapshot.fields {
        walk_value(value, visit);
    }
}

/// Visit every snapshot reachable from an example (inputs and outputs may
/// nest objects inside arrays and other objects).
pub(super) fn walk_example_snapshots(
    example: &FunctionExample,
    visit: &mut impl FnMut(&ObjectSnapshot),
) {
    let mut from_value = |value: &ValueLiteral| {
        walk_value_snapshots(value, visit);
    };
    for value in &example.inputs {
        from_value(value);
    }
    if let Some(output) = &example.output {
        from_value(output);
    }
    for list in [&example.before, &example.after].into_iter().flatten() {
        for snapshot in list {
            walk_snapshot_snapshots(snapshot, visit);
        }
    }
}

fn walk_value_snapshots(value: &ValueLiteral, visit: &mut impl FnMut(&ObjectSnapshot)) {
    match value {
        ValueLiteral::Array { elements, .. } => {
            for element in elements {
                walk_value_snapshots(element, visit);
            }
        }
        ValueLiteral::Object(snapshot) => walk_snapshot_snapshots(snapshot, visit),
        _ => {}
    }
}

fn walk_snapshot_snapshots(snapshot: &ObjectSnapshot, visit: &mut impl FnMut(&ObjectSnapshot)) {
    visit(snapshot);
    for (_, value) in &snapshot.fields {
        walk_value_snapshots(value, visit);
    }
}
