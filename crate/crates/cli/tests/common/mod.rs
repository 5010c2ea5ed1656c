//! Shared strategies for generating assignments: a broad reparseable
//! generator for round-trip checks, and a stricter validation-clean
//! generator for layout properties.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;

use oopspec_core::model::{
    AttributeSpec, ClassDecl, ConstructorSpec, Diagram, DiagramBody, ExerciseAssignment,
    FunctionExample, FunctionSpec, Ident, MethodBehavior, ObjectSnapshot, RuleRef, SourceSpan,
    Spanned, StateDecl, StateTransitionRules, TransitionDecl, TypeRef, ValueLiteral,
};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn oopspec(args: &[&str], cwd: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oopspec"))
        .args(args)
        .current_dir(cwd)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

pub fn sp() -> SourceSpan {
    SourceSpan::dummy()
}

pub fn ident(name: &str) -> Ident {
    Ident::dummy(name)
}

fn arb_name() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,5}"
}

fn arb_class_name() -> impl Strategy<Value = String> {
    "[A-Z][a-zA-Z0-9]{0,5}"
}

fn arb_state_name() -> impl Strategy<Value = String> {
    "[A-Z][a-z]{1,6}"
}

fn arb_text() -> impl Strategy<Value = String> {
    prop_oneof![
        4 => "[ -~]{0,12}",
        1 => Just("line\nbreak \"q\" \\ tab\t".to_string()),
    ]
}

fn arb_type() -> impl Strategy<Value = TypeRef> {
    let leaf = prop_oneof![
        Just(TypeRef::Int),
        Just(TypeRef::Bool),
        Just(TypeRef::Text),
        arb_class_name().prop_map(TypeRef::Class),
    ];
    leaf.prop_recursive(2, 4, 1, |inner| {
        inner.prop_map(|t| TypeRef::Array(Box::new(t)))
    })
}

fn spanned<T: std::fmt::Debug + Clone>(node: T) -> Spanned<T> {
    Spanned::dummy(node)
}

// ---- broad value model (round-trip corpus) ---------------------------------

pub fn arb_value() -> impl Strategy<Value = ValueLiteral> {
    // i64::MIN is excluded: its absolute value does not fit the integer
    // token the printer would emit.
    let leaf = prop_oneof![
        ((i64::MIN + 1)..=i64::MAX).prop_map(|value| ValueLiteral::Int { value, span: sp() }),
        any::<bool>().prop_map(|value| ValueLiteral::Bool { value, span: sp() }),
        arb_text().prop_map(|value| ValueLiteral::Text { value, span: sp() }),
        ("[A-Z]", -9i64..9, "[a-z]{1,6}").prop_map(|(base, offset, unit)| {
            ValueLiteral::SymbolicCount {
                base,
                offset,
                unit,
                span: sp(),
            }
        }),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            proptest::collection::vec(inner.clone(), 0..3).prop_map(|elements| {
                ValueLiteral::Array {
                    elements,
                    span: sp(),
                }
            }),
            arb_snapshot_with(inner.boxed()).prop_map(ValueLiteral::Object),
        ]
    })
}

fn arb_snapshot_with(value: BoxedStrategy<ValueLiteral>) -> impl Strategy<Value = ObjectSnapshot> {
    (
        arb_class_name(),
        proptest::option::of(arb_state_name()),
        proptest::collection::btree_map(arb_name(), value, 0..3),
    )
        .prop_map(|(class, tag, fields)| ObjectSnapshot {
            class_name: ident(&class),
            state_tag: tag.map(|t| ident(&t)),
            fields: fields.into_iter().map(|(k, v)| (ident(&k), v)).collect(),
            span: sp(),
        })
}

pub fn arb_snapshot() -> impl Strategy<Value = ObjectSnapshot> {
    arb_snapshot_with(arb_value().boxed())
}

fn arb_example(has_rule_ref: bool) -> impl Strategy<Value = FunctionExample> {
    (
        proptest::option::of(proptest::collection::vec(arb_snapshot(), 1..3)),
        proptest::collection::vec(arb_value(), 0..3),
        proptest::collection::vec(any::<bool>(), 0..3),
        proptest::option::of(arb_value()),
        any::<bool>(),
        proptest::option::of(proptest::collection::vec(arb_snapshot(), 1..3)),
    )
        .prop_map(
            move |(before, extra_inputs, reuse, output, marked, after)| {
                // Some inputs repeat `before:` snapshots, exercising @k references.
                let mut inputs: Vec<ValueLiteral> = Vec::new();
                if let Some(before) = &before {
                    for (snapshot, reuse) in before.iter().zip(&reuse) {
                        if *reuse {
                            inputs.push(ValueLiteral::Object(snapshot.clone()));
                        }
                    }
                }
                inputs.extend(extra_inputs);
                let rule_marker = if marked && has_rule_ref && output.is_some() {
                    Some(RuleRef {
                        target: "linked-rules".into(),
                        span: sp(),
                    })
                } else {
                    None
                };
                FunctionExample {
                    before,
                    inputs,
                    output,
                    rule_marker,
                    after,
                    span: sp(),
                }
            },
        )
}

fn arb_function_spec() -> impl Strategy<Value = FunctionSpec> {
    (
        arb_name(),
        proptest::collection::vec(arb_type(), 0..3),
        proptest::option::of(arb_type()),
        any::<bool>(),
    )
        .prop_flat_map(|(name, params, ret, has_ref)| {
            let ret = if params.is_empty() && ret.is_none() {
                Some(TypeRef::Int)
            } else {
                ret
            };
            proptest::collection::vec(arb_example(has_ref), 0..3).prop_map(move |examples| {
                FunctionSpec {
                    display_name: ident(&name),
                    params: params.iter().cloned().map(spanned).collect(),
                    return_type: ret.clone().map(spanned),
                    examples,
                    rule_ref: has_ref.then(|| RuleRef {
                        target: "linked-rules".into(),
                        span: sp(),
                    }),
                    span: sp(),
                }
            })
        })
}

fn arb_class_decl() -> impl Strategy<Value = ClassDecl> {
    (
        arb_class_name(),
        proptest::collection::btree_map(
            arb_name(),
            (proptest::option::of(arb_type()), any::<bool>()),
            0..4,
        ),
        proptest::collection::vec(proptest::collection::vec(arb_type(), 0..3), 0..2),
        proptest::collection::btree_map(
            arb_name(),
            proptest::collection::vec(arb_example(false), 0..2),
            0..2,
        ),
    )
        .prop_map(|(name, attrs, ctors, methods)| ClassDecl {
            name: ident(&name),
            attributes: attrs
                .into_iter()
                .map(|(attr_name, (ty, object_valued))| AttributeSpec {
                    name: ident(&attr_name),
                    ty: ty.map(spanned),
                    object_valued,
                    span: sp(),
                })
                .collect(),
            constructors: ctors
                .into_iter()
                .map(|params| ConstructorSpec {
                    params: params.into_iter().map(spanned).collect(),
                    span: sp(),
                })
                .collect(),
            methods: methods
                .into_iter()
                .map(|(method_name, examples)| MethodBehavior {
                    name: ident(&method_name),
                    examples,
                    span: sp(),
                })
                .collect(),
            span: sp(),
        })
}

pub fn arb_rules() -> impl Strategy<Value = StateTransitionRules> {
    proptest::collection::btree_map(
        arb_state_name(),
        proptest::collection::vec(arb_name(), 0..3),
        1..5,
    )
    .prop_flat_map(|states| {
        let names: Vec<String> = states.keys().cloned().collect();
        let n = names.len();
        let transitions =
            proptest::collection::vec((0..n, 0..n, arb_name()), 0..5).prop_map(move |raw| {
                raw.into_iter()
                    .map(|(from, to, action)| TransitionDecl {
                        from: ident(&names[from]),
                        to: ident(&names[to]),
                        action: spanned(action),
                        span: sp(),
                    })
                    .collect::<Vec<_>>()
            });
        let state_decls: Vec<StateDecl> = states
            .iter()
            .map(|(name, fields)| StateDecl {
                name: ident(name),
                visible_fields: fields.iter().map(|f| ident(f)).collect(),
                span: sp(),
            })
            .collect();
        transitions.prop_map(move |transitions| StateTransitionRules {
            states: state_decls.clone(),
            transitions,
            span: sp(),
        })
    })
}

fn arb_body() -> impl Strategy<Value = DiagramBody> {
    prop_oneof![
        arb_function_spec().prop_map(DiagramBody::AlgorithmicFunction),
        arb_function_spec().prop_map(DiagramBody::StateChangeFunction),
        proptest::collection::vec(arb_class_decl(), 1..3).prop_map(DiagramBody::ClassDeclaration),
        proptest::collection::vec(arb_class_decl(), 1..3).prop_map(DiagramBody::Inheritance),
        arb_rules().prop_map(DiagramBody::StateTransitionRules),
    ]
}

/// Reparseable assignments spanning all five diagram kinds. Not necessarily
/// lint-clean: the round-trip property holds for every printable tree.
pub fn arb_assignment() -> impl Strategy<Value = ExerciseAssignment> {
    (
        "[a-z][a-z0-9-]{0,6}",
        proptest::option::of(arb_text()),
        proptest::collection::vec((arb_body(), proptest::option::of(arb_text())), 0..4),
    )
        .prop_map(|(assignment_id, title, bodies)| ExerciseAssignment {
            id: spanned(assignment_id),
            title: title.map(spanned),
            diagrams: bodies
                .into_iter()
                .enumerate()
                .map(|(index, (body, note))| Diagram {
                    id: spanned(format!("d{index}")),
                    note: note.map(spanned),
                    body,
                    span: sp(),
                })
                .collect(),
            span: sp(),
        })
}

// ---- validation-clean diagrams (layout corpus) ------------------------------

fn arb_clean_scalar() -> impl Strategy<Value = ValueLiteral> {
    prop_oneof![
        (-999i64..999).prop_map(|value| ValueLiteral::Int { value, span: sp() }),
        any::<bool>().prop_map(|value| ValueLiteral::Bool { value, span: sp() }),
        "[ -~]{0,8}".prop_map(|value| ValueLiteral::Text { value, span: sp() }),
        ("[A-Z]", -4i64..4, "[a-z]{1,5}").prop_map(|(base, offset, unit)| {
            ValueLiteral::SymbolicCount {
                base,
                offset,
                unit,
                span: sp(),
            }
        }),
    ]
}

/// Homogeneous arrays only (rule V8 clean).
fn arb_clean_value() -> impl Strategy<Value = ValueLiteral> {
    prop_oneof![
        3 => arb_clean_scalar(),
        1 => (0..3usize).prop_flat_map(|kind| {
            let element: BoxedStrategy<ValueLiteral> = match kind {
                0 => (-99i64..99).prop_map(|value| ValueLiteral::Int { value, span: sp() }).boxed(),
                1 => any::<bool>().prop_map(|value| ValueLiteral::Bool { value, span: sp() }).boxed(),
                _ => "[a-z]{0,5}".prop_map(|value| ValueLiteral::Text { value, span: sp() }).boxed(),
            };
            proptest::collection::vec(element, 0..5)
                .prop_map(|elements| ValueLiteral::Array { elements, span: sp() })
        }),
        1 => arb_clean_snapshot(false).prop_map(ValueLiteral::Object),
    ]
}

fn arb_clean_snapshot(tagged: bool) -> impl Strategy<Value = ObjectSnapshot> {
    (
        arb_class_name(),
        proptest::option::of(arb_state_name()),
        proptest::collection::btree_map(arb_name(), arb_clean_scalar(), 0..3),
    )
        .prop_map(move |(class, tag, fields)| ObjectSnapshot {
            class_name: ident(&class),
            state_tag: if tagged { tag.map(|t| ident(&t)) } else { None },
            fields: fields.into_iter().map(|(k, v)| (ident(&k), v)).collect(),
            span: sp(),
        })
}

/// A state-change example that satisfies V2/V3/V4 for a signature with
/// `param_count` parameters: paired before/after lists with equal classes,
/// inputs made of the before objects plus scalars, and always an output.
fn arb_clean_state_change_example(
    param_count: usize,
    has_ref: bool,
) -> impl Strategy<Value = FunctionExample> {
    let max_pairs = param_count.min(2);
    (0..=max_pairs).prop_flat_map(move |pair_count| {
        (
            proptest::collection::vec(arb_clean_snapshot(false), pair_count),
            proptest::collection::vec(any::<bool>(), pair_count),
            proptest::collection::vec(arb_clean_scalar(), param_count - pair_count),
            any::<bool>(),
            any::<bool>(),
        )
            .prop_map(move |(before, mutate, scalars, output_value, marked)| {
                let after: Vec<ObjectSnapshot> = before
                    .iter()
                    .zip(&mutate)
                    .map(|(snapshot, mutate)| {
                        let mut next = snapshot.clone();
                        if *mutate {
                            // Field name longer than the generator can produce,
                            // so it never collides with an existing field.
                            next.fields.push((
                                ident("mutated7"),
                                ValueLiteral::Bool {
                                    value: true,
                                    span: sp(),
                                },
                            ));
                        }
                        next
                    })
                    .collect();
                let mut inputs: Vec<ValueLiteral> =
                    before.iter().cloned().map(ValueLiteral::Object).collect();
                inputs.extend(scalars);
                FunctionExample {
                    before: (!before.is_empty()).then_some(before),
                    inputs,
                    output: Some(ValueLiteral::Bool {
                        value: output_value,
                        span: sp(),
                    }),
                    rule_marker: (marked && has_ref).then(|| RuleRef {
                        target: "linked-rules".into(),
                        span: sp(),
                    }),
                    after: (!after.is_empty()).then_some(after),
                    span: sp(),
                }
            })
    })
}

fn arb_clean_function(state_change: bool) -> impl Strategy<Value = FunctionSpec> {
    (1..=3usize, "f[0-9]{1,2}", any::<bool>()).prop_flat_map(move |(param_count, name, has_ref)| {
        let has_ref = has_ref && state_change;
        let examples = if state_change {
            proptest::collection::vec(arb_clean_state_change_example(param_count, has_ref), 2..5)
                .boxed()
        } else {
            proptest::collection::vec(
                (
                    proptest::collection::vec(arb_clean_value(), param_count),
                    arb_clean_value(),
                )
                    .prop_map(|(inputs, output)| FunctionExample {
                        before: None,
                        inputs,
                        output: Some(output),
                        rule_marker: None,
                        after: None,
                        span: sp(),
                    }),
                2..5,
            )
            .boxed()
        };
        examples.prop_map(move |examples| FunctionSpec {
            display_name: ident(&name),
            params: (0..param_count)
                .map(|_| spanned(TypeRef::Class("Obj".into())))
                .collect(),
            return_type: Some(spanned(TypeRef::Bool)),
            examples,
            rule_ref: has_ref.then(|| RuleRef {
                target: "linked-rules".into(),
                span: sp(),
            }),
            span: sp(),
        })
    })
}

fn arb_clean_class() -> impl Strategy<Value = ClassDecl> {
    (
        proptest::collection::btree_map(
            arb_name(),
            (proptest::option::of(arb_type()), any::<bool>()),
            0..4,
        ),
        proptest::collection::vec(proptest::collection::vec(arb_type(), 0..3), 0..2),
        proptest::collection::btree_map(
            arb_name(),
            proptest::collection::vec(
                (
                    proptest::collection::vec(arb_clean_value(), 1..3),
                    arb_clean_value(),
                )
                    .prop_map(|(inputs, output)| FunctionExample {
                        before: None,
                        inputs,
                        output: Some(output),
                        rule_marker: None,
                        after: None,
                        span: sp(),
                    }),
                1..3,
            ),
            0..2,
        ),
    )
        .prop_map(|(attrs, ctors, methods)| ClassDecl {
            name: ident("Class"),
            attributes: attrs
                .into_iter()
                .map(|(name, (ty, object_valued))| AttributeSpec {
                    name: ident(&name),
                    ty: ty.map(spanned),
                    object_valued,
                    span: sp(),
                })
                .collect(),
            constructors: ctors
                .into_iter()
                .map(|params| ConstructorSpec {
                    params: params.into_iter().map(spanned).collect(),
                    span: sp(),
                })
                .collect(),
            methods: methods
                .into_iter()
                .map(|(name, examples)| MethodBehavior {
                    name: ident(&name),
                    examples,
                    span: sp(),
                })
                .collect(),
            span: sp(),
        })
}

fn arb_clean_classes(min: usize) -> impl Strategy<Value = Vec<ClassDecl>> {
    proptest::collection::vec(arb_clean_class(), min..=3).prop_map(|mut classes| {
        for (index, class) in classes.iter_mut().enumerate() {
            class.name = ident(&format!("Class{index}"));
        }
        classes
    })
}

/// Diagrams that pass every diagram-local validation rule, so `layout`
/// accepts them. Covers all five kinds.
pub fn arb_valid_diagram() -> impl Strategy<Value = Diagram> {
    let body = prop_oneof![
        arb_clean_function(false).prop_map(DiagramBody::AlgorithmicFunction),
        arb_clean_function(true).prop_map(DiagramBody::StateChangeFunction),
        arb_clean_classes(1).prop_map(DiagramBody::ClassDeclaration),
        arb_clean_classes(2).prop_map(DiagramBody::Inheritance),
        arb_rules().prop_map(DiagramBody::StateTransitionRules),
    ];
    (body, proptest::option::of("[a-z ]{0,40}")).prop_map(|(body, note)| Diagram {
        id: spanned("gen".to_string()),
        note: note.map(spanned),
        body,
        span: sp(),
    })
}

/// A rules diagram plus an example whose before/after pairs are all
/// identity pairs over states declared in those rules.
pub fn arb_rules_with_identity_example(
) -> impl Strategy<Value = (StateTransitionRules, FunctionExample)> {
    arb_rules().prop_flat_map(|rules| {
        let state_names: Vec<String> = rules.states.iter().map(|s| s.name.name.clone()).collect();
        let n = state_names.len();
        (
            proptest::collection::vec((0..n, any::<bool>()), 1..4),
            proptest::option::of(any::<bool>()),
        )
            .prop_map(move |(picks, output)| {
                let snapshots: Vec<ObjectSnapshot> = picks
                    .iter()
                    .map(|(state_index, tagged)| ObjectSnapshot {
                        class_name: ident("Task"),
                        state_tag: tagged.then(|| ident(&state_names[*state_index])),
                        fields: Vec::new(),
                        span: sp(),
                    })
                    .collect();
                let example = FunctionExample {
                    before: Some(snapshots.clone()),
                    inputs: snapshots
                        .iter()
                        .cloned()
                        .map(ValueLiteral::Object)
                        .collect(),
                    output: output.map(|value| ValueLiteral::Bool { value, span: sp() }),
                    rule_marker: None,
                    after: Some(snapshots),
                    span: sp(),
                };
                (rules.clone(), example)
            })
    })
}
