//! Node sizing. Text width is estimated as characters times a constant em
//! width; no font metrics, so geometry is identical on every platform.

use crate::model::{ObjectSnapshot, ValueLiteral};

use super::scene::NodeKind;
use super::{CHAR_W, LINE_H, PAD};

pub(super) struct NodeSpec {
    pub kind: NodeKind,
    pub w: f64,
    pub h: f64,
}

pub(super) fn text_width(text: &str) -> f64 {
    text.chars().count() as f64 * CHAR_W
}

/// Single-line display form of a value, as drawn inside the diagram.
/// Unlike source syntax, symbolic counts drop the unit quotes: `N + 1 tasks`.
pub(super) fn display(value: &ValueLiteral) -> String {
    match value {
        ValueLiteral::Int { value, .. } => value.to_string(),
        ValueLiteral::Bool { value, .. } => value.to_string(),
        ValueLiteral::Text { value, .. } => format!("\"{}\"", escape_single_line(value)),
        ValueLiteral::Array { elements, .. } => {
            let inner = elements.iter().map(display).collect::<Vec<_>>().join(", ");
            format!("[{inner}]")
        }
        ValueLiteral::Object(snapshot) => display_snapshot(snapshot),
        ValueLiteral::SymbolicCount {
            base, offset, unit, ..
        } => match offset.signum() {
            0 => format!("{base} {unit}"),
            1 => format!("{base} + {offset} {unit}"),
            _ => format!("{base} - {} {unit}", -offset),
        },
    }
}

fn display_snapshot(snapshot: &ObjectSnapshot) -> String {
    let mut out = snapshot.class_name.name.clone();
    if let Some(tag) = &snapshot.state_tag {
        out.push_str(&format!("@{}", tag.name));
    }
    let fields = snapshot
        .fields
        .iter()
        .map(|(name, value)| format!("{}: {}", name.name, display(value)))
        .collect::<Vec<_>>()
        .join(", ");
    out.push_str(&format!(" {{{fields}}}"));
    out
}

fn escape_single_line(text: &str) -> String {
    text.chars()
        .flat_map(|c| match c {
            '\n' => "\\n".chars().collect::<Vec<_>>(),
            '\t' => "\\t".chars().collect(),
            other => vec![other],
        })
        .collect()
}

/// Size a value for placement in an example row.
pub(super) fn value_node(value: &ValueLiteral) -> NodeSpec {
    match value {
        ValueLiteral::Array { elements, .. } => {
            let cells: Vec<String> = if elements.is_empty() {
                vec![String::new()]
            } else {
                elements.iter().map(display).collect()
            };
            let cell_w = cells.iter().map(|c| text_width(c)).fold(0.0, f64::max) + PAD;
            let cell_w = cell_w.max(3.0 * CHAR_W);
            let w = cell_w * cells.len() as f64;
            NodeSpec {
                kind: NodeKind::ArrayStrip { cells },
                w,
                h: LINE_H + PAD,
            }
        }
        ValueLiteral::Object(snapshot) => snapshot_node(snapshot),
        other => {
            let text = display(other);
            let w = text_width(&text) + 2.0 * PAD;
            NodeSpec {
                kind: NodeKind::Label { text },
                w,
                h: LINE_H + PAD,
            }
        }
    }
}

/// Size a snapshot box: class name title, optional state line, field lines.
pub(super) fn snapshot_node(snapshot: &ObjectSnapshot) -> NodeSpec {
    let title = snapshot.class_name.name.clone();
    let state = snapshot.state_tag.as_ref().map(|tag| tag.name.clone());
    let lines: Vec<String> = snapshot
        .fields
        .iter()
        .map(|(name, value)| format!("{}: {}", name.name, display(value)))
        .collect();

    let mut w = text_width(&title);
    if let Some(state) = &state {
        w = w.max(text_width(state) + 2.0 * CHAR_W); // brackets around the state
    }
    for line in &lines {
        w = w.max(text_width(line));
    }
    let line_count = 1 + usize::from(state.is_some()) + lines.len();
    NodeSpec {
        kind: NodeKind::SnapshotBox {
            title,
            state,
            lines,
        },
        w: w + 2.0 * PAD,
        h: line_count as f64 * LINE_H + 2.0 * PAD,
    }
}

pub(super) fn function_box(label: &str) -> NodeSpec {
    NodeSpec {
        kind: NodeKind::FunctionBox {
            label: label.to_string(),
        },
        w: (text_width(label) + 2.0 * PAD).max(6.0 * CHAR_W),
        h: LINE_H + 2.0 * PAD,
    }
}
