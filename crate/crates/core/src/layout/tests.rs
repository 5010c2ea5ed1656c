use super::*;
use crate::parser::parse;

fn diagram_from(source: &str) -> crate::model::Diagram {
    parse(source, "mem.oos").unwrap().diagrams.remove(0)
}

fn interleave_source(example_count: usize) -> String {
    let mut body = String::new();
    for i in 0..example_count {
        body.push_str(&format!(
            "    example {{ in: [{0}, 2, 3], [4, 5, 6]\n out: [{0}, 4, 2, 5, 3, 6] }}\n",
            i + 1
        ));
    }
    format!("assignment \"a\" {{\n  algorithmic \"d\" {{\n    function f(int[], int[]) returns int[]\n{body}  }}\n}}")
}

fn strips(scene: &SceneGraph) -> Vec<usize> {
    scene
        .nodes
        .iter()
        .filter_map(|n| match &n.kind {
            NodeKind::ArrayStrip { cells } => Some(cells.len()),
            _ => None,
        })
        .collect()
}

#[test]
fn interleave_rows_have_expected_strips() {
    let scene = layout(&diagram_from(&interleave_source(2))).unwrap();
    // Per row: two 3-cell input strips and one 6-cell output strip.
    assert_eq!(strips(&scene), vec![3, 3, 6, 3, 3, 6]);
    let boxes = scene
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::FunctionBox { .. }))
        .count();
    assert_eq!(boxes, 2);
    assert_eq!(scene.edges.len(), 6); // 2 inputs + 1 output per row
}

#[test]
fn layout_is_deterministic() {
    let diagram = diagram_from(&interleave_source(3));
    assert_eq!(layout(&diagram).unwrap(), layout(&diagram).unwrap());
}

#[test]
fn adding_examples_never_shrinks_the_canvas() {
    let mut last_height = 0.0;
    for count in 2..7 {
        let scene = layout(&diagram_from(&interleave_source(count))).unwrap();
        assert!(scene.canvas_height >= last_height);
        last_height = scene.canvas_height;
    }
}

const WITHDRAW: &str = r#"
assignment "a" {
  state_change "w" {
    function f02(Account, int) returns bool
    example {
      before: Account { balance: 500 }
      in: @1, 300
      out: true
      after: Account { balance: 200 }
    }
    example {
      before: Account { balance: 100 }
      in: @1, 300
      out: false
      after: Account { balance: 100 }
    }
  }
}
"#;

#[test]
fn state_change_gets_exactly_one_caption() {
    let scene = layout(&diagram_from(WITHDRAW)).unwrap();
    let captions = scene
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Caption { .. }))
        .count();
    assert_eq!(captions, 1);

    // Only the changed pair gets a dashed mutation arrow.
    let dashed = scene
        .edges
        .iter()
        .filter(|e| e.style == EdgeStyle::DashedMutation)
        .count();
    assert_eq!(dashed, 1);
}

#[test]
fn single_class_without_attributes_is_a_lone_box() {
    let scene = layout(&diagram_from(
        "assignment \"a\" {\n  class \"c\" {\n    class Counter {}\n  }\n}",
    ))
    .unwrap();
    assert_eq!(scene.nodes.len(), 1);
    assert!(matches!(scene.nodes[0].kind, NodeKind::ClassBox { .. }));
    assert!(scene.edges.is_empty());
    let rect = scene.nodes[0].rect;
    assert_eq!(rect.x, MARGIN);
    assert_eq!(rect.y, MARGIN);
    assert_eq!(scene.canvas_width, rect.w + 2.0 * MARGIN);
    assert_eq!(scene.canvas_height, rect.h + 2.0 * MARGIN);
}

#[test]
fn object_attributes_get_glyphs_and_no_interclass_edges() {
    let src = r#"
assignment "a" {
  class "c" {
    class Person {
      attr name
      attr home: Apartment object
    }
    class Apartment {
      attr floor: int
    }
  }
}
"#;
    let scene = layout(&diagram_from(src)).unwrap();
    let glyphs = scene
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Glyph))
        .count();
    assert_eq!(glyphs, 1);
    assert!(scene.edges.is_empty());

    // The glyph sits inside its class box; decorations are exempt from the
    // overlap invariant.
    let glyph = scene
        .nodes
        .iter()
        .find(|n| matches!(n.kind, NodeKind::Glyph))
        .unwrap();
    let class_box = &scene.nodes[0];
    assert!(glyph.rect.overlaps(&class_box.rect));
}

const F06: &str = r#"
assignment "a" {
  state_transitions "task-lifecycle" {
    state Created { description }
    state Planned { description, estimate }
    state Assigned { description, estimate, employee }
    transition Created -> Planned on "plan"
    transition Planned -> Assigned on "assign"
  }
  state_change "assign-task" {
    function f06(Company, Employee, Task) returns bool
    example {
      before: Employee { tasks: N "tasks" }, Task @ Planned { description: "Deploy" }
      in: Company { name: "ACME" }, @1, @2
      out: true *
      after: Employee { tasks: N + 1 "tasks" }, Task @ Assigned { description: "Deploy" }
    }
    example {
      before: Employee { tasks: N "tasks" }, Task @ Created { description: "Audit" }
      in: Company { name: "ACME" }, @1, @2
      out: false
      after: Employee { tasks: N "tasks" }, Task @ Created { description: "Audit" }
    }
    rule_ref "task-lifecycle"
  }
}
"#;

#[test]
fn rule_markers_become_adjacent_asterisks() {
    let assignment = parse(F06, "mem.oos").unwrap();
    let scene = layout(assignment.diagram("assign-task").unwrap()).unwrap();

    let asterisks: Vec<&SceneNode> = scene
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Asterisk { .. }))
        .collect();
    assert_eq!(asterisks.len(), 1);
    assert_eq!(scene.footnote_targets(), vec!["task-lifecycle"]);

    // Adjacent to the starred output's box: the first `true` label.
    let output = scene
        .nodes
        .iter()
        .find(|n| matches!(&n.kind, NodeKind::Label { text } if text == "true"))
        .unwrap();
    let asterisk = asterisks[0].rect;
    assert!((asterisk.x - output.rect.right()).abs() <= 2.0 * ASTERISK_SIZE);
    assert!((asterisk.y - output.rect.y).abs() <= 2.0 * ASTERISK_SIZE);

    // Both changed pairs of the first example mutate.
    let dashed = scene
        .edges
        .iter()
        .filter(|e| e.style == EdgeStyle::DashedMutation)
        .count();
    assert_eq!(dashed, 2);
}

#[test]
fn transition_diagram_layers_left_to_right() {
    let assignment = parse(F06, "mem.oos").unwrap();
    let scene = layout(assignment.diagram("task-lifecycle").unwrap()).unwrap();

    assert!(scene.edges.iter().all(|e| e.style == EdgeStyle::Transition));
    assert_eq!(scene.edges.len(), 2);
    assert_eq!(scene.edges[0].label.as_deref(), Some("plan"));

    let xs: Vec<f64> = scene
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::StateNode { .. }))
        .map(|n| n.rect.x)
        .collect();
    assert_eq!(xs.len(), 3);
    assert!(xs[0] < xs[1] && xs[1] < xs[2]);
}

#[test]
fn cycles_fall_back_to_declaration_order() {
    let src = "assignment \"a\" {\n  state_transitions \"loop\" {\n    state A {}\n    state B {}\n    transition A -> B on \"go\"\n    transition B -> A on \"back\"\n  }\n}";
    let scene = layout(&diagram_from(src)).unwrap();
    let xs: Vec<f64> = scene.nodes.iter().map(|n| n.rect.x).collect();
    assert!(xs[0] < xs[1], "declaration order broken: {xs:?}");
    assert_eq!(scene.edges.len(), 2);
    check_invariants(&scene);
}

#[test]
fn layout_refuses_diagrams_with_validation_errors() {
    let one_example = "assignment \"a\" {\n  algorithmic \"d\" {\n    function f(int) returns int\n    example { in: 1\n out: 1 }\n  }\n}";
    let err = layout(&diagram_from(one_example)).unwrap_err();
    let LayoutError::DiagramHasErrors(diagnostic) = err;
    assert_eq!(diagnostic.rule, crate::model::RuleCode::V1);
}

#[test]
fn notes_render_as_labels() {
    let src = "assignment \"a\" {\n  class \"c\" {\n    note \"short hint\"\n    class A { attr x }\n  }\n}";
    let scene = layout(&diagram_from(src)).unwrap();
    assert!(scene
        .nodes
        .iter()
        .any(|n| matches!(&n.kind, NodeKind::Label { text } if text == "short hint")));
}

pub(crate) fn check_invariants(scene: &SceneGraph) {
    let eps = 1e-6;
    // Opaque nodes never overlap.
    let opaque: Vec<&SceneNode> = scene.nodes.iter().filter(|n| !n.is_decoration()).collect();
    for (i, a) in opaque.iter().enumerate() {
        for b in &opaque[i + 1..] {
            assert!(!a.rect.overlaps(&b.rect), "nodes overlap: {a:?} vs {b:?}");
        }
    }
    // Every edge endpoint lies on its anchor node's boundary.
    for edge in &scene.edges {
        let from_rect = scene.nodes[edge.from_node].rect;
        let to_rect = scene.nodes[edge.to_node].rect;
        assert!(
            from_rect.on_boundary(edge.from, eps),
            "from point off boundary: {edge:?}"
        );
        assert!(
            to_rect.on_boundary(edge.to, eps),
            "to point off boundary: {edge:?}"
        );
    }
    // The canvas contains all geometry with the fixed margin.
    for node in &scene.nodes {
        assert!(
            node.rect.x >= MARGIN - eps,
            "node outside left margin: {node:?}"
        );
        assert!(
            node.rect.y >= MARGIN - eps,
            "node outside top margin: {node:?}"
        );
        assert!(
            node.rect.right() <= scene.canvas_width - MARGIN + eps,
            "node outside right margin: {node:?}"
        );
        assert!(
            node.rect.bottom() <= scene.canvas_height - MARGIN + eps,
            "node outside bottom margin: {node:?}"
        );
    }
}

#[test]
fn invariants_hold_on_representative_diagrams() {
    for source in [
        interleave_source(2),
        interleave_source(5),
        WITHDRAW.to_string(),
        F06.to_string(),
    ] {
        let assignment = parse(&source, "mem.oos").unwrap();
        for diagram in &assignment.diagrams {
            check_invariants(&layout(diagram).unwrap());
        }
    }
}
