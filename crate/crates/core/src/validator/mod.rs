//! Semantic validation: the notation rules (V1–V10), the anti-leakage
//! linter (L1–L3), cross-diagram transition consistency and inheritance
//! common-member inference.
//!
//! `validate` is deterministic and pure: the same assignment and config
//! always produce the identical diagnostic list, byte for byte.

mod config;
mod rules;

use std::collections::BTreeSet;
use std::fmt;

use crate::model::{
    ClassDecl, Diagnostic, Diagram, DiagramBody, ExerciseAssignment, FunctionExample, FunctionSpec,
    RuleCode, Severity, StateTransitionRules, TypeRef,
};

pub use config::{
    ConfigError, RuleConfig, RuleSetting, DEFAULT_MAX_NOTE_WORDS, DEFAULT_OBFUSCATION_PATTERN,
    DEFAULT_STEMS,
};

use rules::Collector;

/// Validate a whole assignment: every diagram-local rule plus the
/// cross-diagram rules (V5, V6, V9 and state-tag resolution).
pub fn validate(assignment: &ExerciseAssignment, config: &RuleConfig) -> Vec<Diagnostic> {
    let mut cx = Collector::new(config);

    for diagram in &assignment.diagrams {
        rules::check_diagram_local(diagram, &mut cx);
    }

    check_unique_ids(assignment, &mut cx);

    for diagram in &assignment.diagrams {
        if let Some(spec) = diagram.body.function_spec() {
            check_cross_references(assignment, spec, &mut cx);
        }
    }

    cx.into_sorted()
}

/// The rules that can be decided from one diagram in isolation. Used by the
/// layout contract check; cross-diagram rules are the caller's business.
pub fn validate_diagram(diagram: &Diagram, config: &RuleConfig) -> Vec<Diagnostic> {
    let mut cx = Collector::new(config);
    rules::check_diagram_local(diagram, &mut cx);
    cx.into_sorted()
}

/// V9: diagram ids are unique within the assignment.
fn check_unique_ids(assignment: &ExerciseAssignment, cx: &mut Collector<'_>) {
    let mut first_lines = std::collections::BTreeMap::new();
    for diagram in &assignment.diagrams {
        match first_lines.get(&diagram.id.node) {
            None => {
                first_lines.insert(diagram.id.node.clone(), diagram.id.span.start_line);
            }
            Some(first_line) => cx.emit(
                RuleCode::V9,
                Severity::Error,
                &diagram.id.span,
                format!(
                    "duplicate diagram id `{}` (first declared at line {first_line})",
                    diagram.id.node
                ),
            ),
        }
    }
}

/// V5, V6 and the cross-diagram half of V10 for one function diagram.
fn check_cross_references(
    assignment: &ExerciseAssignment,
    spec: &FunctionSpec,
    cx: &mut Collector<'_>,
) {
    let resolved: Option<&StateTransitionRules> = match &spec.rule_ref {
        Some(rule_ref) => {
            let target = assignment.diagram(&rule_ref.target).map(|d| &d.body);
            match target {
                Some(DiagramBody::StateTransitionRules(rules)) => Some(rules),
                _ => {
                    // V5: unresolvable reference; dependent checks are skipped.
                    cx.emit(
                        RuleCode::V5,
                        Severity::Error,
                        &rule_ref.span,
                        format!(
                            "rule_ref `{}` does not name a state_transitions diagram in this assignment",
                            rule_ref.target
                        ),
                    );
                    return;
                }
            }
        }
        None => None,
    };

    for example in &spec.examples {
        check_state_tags(example, resolved, cx);
        if let Some(rules) = resolved {
            check_example_transitions(example, rules, cx);
        }
    }
}

/// V10 (cross-diagram half): every state tag resolves against the
/// referenced rules diagram.
fn check_state_tags(
    example: &FunctionExample,
    rules: Option<&StateTransitionRules>,
    cx: &mut Collector<'_>,
) {
    rules::walk_example_snapshots(example, &mut |snapshot| {
        let Some(tag) = &snapshot.state_tag else {
            return;
        };
        match rules {
            None => cx.emit(
                RuleCode::V10,
                Severity::Error,
                &tag.span,
                format!(
                    "state tag `{}` cannot be resolved: the diagram has no rule_ref",
                    tag.name
                ),
            ),
            Some(rules) if rules.state(&tag.name).is_none() => cx.emit(
                RuleCode::V10,
                Severity::Error,
                &tag.span,
                format!(
                    "state tag `{}` is not declared in the referenced rules diagram",
                    tag.name
                ),
            ),
            Some(_) => {}
        }
    });
}

/// V6: example state changes follow the declared transitions.
fn check_example_transitions(
    example: &FunctionExample,
    rules: &StateTransitionRules,
    cx: &mut Collector<'_>,
) {
    let has_checkable_pair = example.snapshot_pairs().iter().any(|(b, a)| {
        matches!((&b.state_tag, &a.state_tag), (Some(from), Some(to))
            if rules.state(&from.name).is_some() && rules.state(&to.name).is_some())
    });
    if !has_checkable_pair {
        return;
    }
    match check_transition_consistency(example, rules) {
        Ok(TransitionConsistency::Ok) => {}
        Ok(TransitionConsistency::Violation { pair_index, class_name, from, to }) => cx.emit(
            RuleCode::V6,
            Severity::Error,
            &example.span,
            format!(
                "pair {} (`{class_name}`) moves from `{from}` to `{to}` but no such transition is declared",
                pair_index + 1
            ),
        ),
        // Unknown states were already reported by the tag sweep (V10).
        Err(_) => {}
    }
}

/// Outcome of checking one example against a rules diagram.
#[derive(Debug, Clone, PartialEq)]
pub enum TransitionConsistency {
    Ok,
    Violation {
        pair_index: usize,
        class_name: String,
        from: String,
        to: String,
    },
}

/// A state tag that is not declared in the rules diagram. Surfaces as V10.
#[derive(Debug, Clone, PartialEq)]
pub struct UnknownStateError {
    pub pair_index: usize,
    pub state: String,
}

impl fmt::Display for UnknownStateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pair {} names undeclared state `{}`",
            self.pair_index + 1,
            self.state
        )
    }
}

impl std::error::Error for UnknownStateError {}

/// Check every tagged before/after pair of `example` against `rules`.
///
/// A pair passes when the states are equal (no transition happened) or a
/// transition from the before state to the after state is declared. Pairs
/// where either side has no tag are skipped.
pub fn check_transition_consistency(
    example: &FunctionExample,
    rules: &StateTransitionRules,
) -> Result<TransitionConsistency, UnknownStateError> {
    for (pair_index, (before, after)) in example.snapshot_pairs().into_iter().enumerate() {
        let (Some(from), Some(to)) = (&before.state_tag, &after.state_tag) else {
            continue;
        };
        for endpoint in [from, to] {
            if rules.state(&endpoint.name).is_none() {
                return Err(UnknownStateError {
                    pair_index,
                    state: endpoint.name.clone(),
                });
            }
        }
        if from.name == to.name {
            continue;
        }
        if !rules.has_transition(&from.name, &to.name) {
            return Ok(TransitionConsistency::Violation {
                pair_index,
                class_name: before.class_name.name.clone(),
                from: from.name.clone(),
                to: to.name.clone(),
            });
        }
    }
    Ok(TransitionConsistency::Ok)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MemberKind {
    Attribute,
    Method,
}

impl MemberKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MemberKind::Attribute => "attribute",
            MemberKind::Method => "method",
        }
    }
}

/// A member every child class shares: part of the implied superclass.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CommonMember {
    pub kind: MemberKind,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NotEnoughClassesError {
    pub found: usize,
}

impl fmt::Display for NotEnoughClassesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "common-member inference needs at least 2 classes, found {}",
            self.found
        )
    }
}

impl std::error::Error for NotEnoughClassesError {}

/// The superclass candidate an inheritance diagram implies: attribute names
/// shared by every child class (type-compatible where both sides are typed)
/// and method names shared by every child class.
///
/// An untyped attribute matches any type of the same name. The result is
/// independent of class declaration order.
pub fn infer_common_members(
    classes: &[ClassDecl],
) -> Result<BTreeSet<CommonMember>, NotEnoughClassesError> {
    if classes.len() < 2 {
        return Err(NotEnoughClassesError {
            found: classes.len(),
        });
    }

    let mut members = BTreeSet::new();

    let attr_names: BTreeSet<&str> = classes[0]
        .attributes
        .iter()
        .map(|attr| attr.name.name.as_str())
        .collect();
    'attrs: for name in attr_names {
        let mut seen_type: Option<&TypeRef> = None;
        for class in classes {
            let Some(attr) = class.attributes.iter().find(|a| a.name.name == name) else {
                continue 'attrs;
            };
            if let Some(ty) = &attr.ty {
                match seen_type {
                    None => seen_type = Some(&ty.node),
                    Some(previous) if previous == &ty.node => {}
                    Some(_) => continue 'attrs, // typed on both sides and incompatible
                }
            }
        }
        members.insert(CommonMember {
            kind: MemberKind::Attribute,
            name: name.to_string(),
        });
    }

    let method_names: BTreeSet<&str> = classes[0]
        .methods
        .iter()
        .map(|method| method.name.name.as_str())
        .collect();
    for name in method_names {
        if classes
            .iter()
            .all(|class| class.methods.iter().any(|m| m.name.name == name))
        {
            members.insert(CommonMember {
                kind: MemberKind::Method,
                name: name.to_string(),
            });
        }
    }

    Ok(members)
}
