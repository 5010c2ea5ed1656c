//! Deterministic diagram geometry. `layout` turns a validated diagram into
//! a [`SceneGraph`]: absolute rectangles, arrow anchor points and text
//! payloads on an 8-unit grid, with no font or platform dependencies.

mod class_diagram;
mod function_diagram;
mod measure;
mod scene;
mod state_diagram;

use std::fmt;

use crate::model::{Diagnostic, Diagram, DiagramBody, Severity};
use crate::validator::{validate_diagram, RuleConfig};

pub use scene::{ColorToken, EdgeStyle, NodeKind, Point, Rect, SceneEdge, SceneGraph, SceneNode};

pub const GRID: f64 = 8.0;
pub const CHAR_W: f64 = GRID;
pub const LINE_H: f64 = 2.0 * GRID;
pub const PAD: f64 = GRID;
pub const MARGIN: f64 = 3.0 * GRID;
/// Horizontal span an arrow crosses between columns.
pub const H_GAP: f64 = 6.0 * GRID;
/// Vertical gap between nodes stacked in one column.
pub const V_GAP: f64 = 2.0 * GRID;
/// Vertical gap between example rows.
pub const ROW_GAP: f64 = 4.0 * GRID;
/// Horizontal gap between class columns.
pub const COL_GAP: f64 = 5.0 * GRID;
pub const STATE_H_GAP: f64 = 9.0 * GRID;
pub const STATE_V_GAP: f64 = 3.0 * GRID;
pub const GLYPH_SIZE: f64 = 12.0;
pub const ASTERISK_SIZE: f64 = 8.0;
pub const ASTERISK_GAP: f64 = 4.0;
/// Height reserved per asterisk footnote line at the canvas bottom.
pub const FOOTNOTE_LINE_H: f64 = LINE_H;

/// Legend appended to every state-change diagram.
pub const STATE_CHANGE_CAPTION: &str =
    "Dashed arrows show changes to object state. Solid arrows show returned values.";

#[derive(Debug, Clone, PartialEq)]
pub enum LayoutError {
    /// The diagram carries validation errors; the layout contract requires a
    /// clean diagram (warnings are fine).
    DiagramHasErrors(Diagnostic),
}

impl fmt::Display for LayoutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayoutError::DiagramHasErrors(first) => {
                write!(f, "diagram has validation errors; first: {first}")
            }
        }
    }
}

impl std::error::Error for LayoutError {}

/// Lay out one diagram, refusing diagrams that fail their local validation
/// rules (checked under the default rule configuration).
pub fn layout(diagram: &Diagram) -> Result<SceneGraph, LayoutError> {
    let first_error = validate_diagram(diagram, &RuleConfig::default())
        .into_iter()
        .find(|d| d.severity == Severity::Error);
    match first_error {
        Some(diagnostic) => Err(LayoutError::DiagramHasErrors(diagnostic)),
        None => Ok(layout_unchecked(diagram)),
    }
}

/// Lay out a diagram without the validation gate. Callers that already
/// validated (possibly under a custom config) use this to avoid checking
/// twice; degenerate inputs produce degenerate scenes, never panics.
pub fn layout_unchecked(diagram: &Diagram) -> SceneGraph {
    let mut scene = SceneBuilder::new();

    match &diagram.body {
        DiagramBody::AlgorithmicFunction(spec) | DiagramBody::StateChangeFunction(spec) => {
            function_diagram::build_example_rows(
                &mut scene,
                &spec.examples,
                &spec.display_name.name,
                Point { x: 0.0, y: 0.0 },
            );
        }
        DiagramBody::ClassDeclaration(classes) | DiagramBody::Inheritance(classes) => {
            class_diagram::build_class_diagram(&mut scene, classes);
        }
        DiagramBody::StateTransitionRules(rules) => {
            state_diagram::build_state_diagram(&mut scene, rules);
        }
    }

    // Side note, then the dashed-vs-solid legend for state-change diagrams.
    if let Some(note) = &diagram.note {
        let text = note.node.clone();
        scene.append_bottom_line(
            NodeKind::Label { text: text.clone() },
            measure::text_width(&text),
        );
    }
    if matches!(diagram.body, DiagramBody::StateChangeFunction(_)) {
        scene.append_bottom_line(
            NodeKind::Caption {
                text: STATE_CHANGE_CAPTION.to_string(),
            },
            measure::text_width(STATE_CHANGE_CAPTION),
        );
    }

    scene.finalize()
}

/// Accumulates nodes and edges in local coordinates; `finalize` shifts
/// everything inside the margin and sizes the canvas.
pub(crate) struct SceneBuilder {
    nodes: Vec<SceneNode>,
    edges: Vec<SceneEdge>,
}

impl SceneBuilder {
    fn new() -> Self {
        SceneBuilder {
            nodes: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub(crate) fn push_node(&mut self, kind: NodeKind, rect: Rect) -> usize {
        self.nodes.push(SceneNode { kind, rect });
        self.nodes.len() - 1
    }

    pub(crate) fn node_rect(&self, id: usize) -> Rect {
        self.nodes[id].rect
    }

    pub(crate) fn push_edge(
        &mut self,
        from_node: usize,
        to_node: usize,
        from: Point,
        to: Point,
        style: EdgeStyle,
        label: Option<String>,
    ) {
        self.edges.push(SceneEdge {
            from_node,
            to_node,
            from,
            to,
            style,
            color: style.color_token(),
            label,
        });
    }

    fn bbox(&self) -> Option<Rect> {
        let mut iter = self.nodes.iter();
        let first = iter.next()?.rect;
        let mut min_x = first.x;
        let mut min_y = first.y;
        let mut max_x = first.right();
        let mut max_y = first.bottom();
        for node in iter {
            min_x = min_x.min(node.rect.x);
            min_y = min_y.min(node.rect.y);
            max_x = max_x.max(node.rect.right());
            max_y = max_y.max(node.rect.bottom());
        }
        Some(Rect {
            x: min_x,
            y: min_y,
            w: max_x - min_x,
            h: max_y - min_y,
        })
    }

    /// Place a full-width text line under everything laid out so far.
    fn append_bottom_line(&mut self, kind: NodeKind, width: f64) {
        let y = self.bbox().map_or(0.0, |b| b.bottom() + ROW_GAP);
        self.push_node(
            kind,
            Rect {
                x: 0.0,
                y,
                w: width + 2.0 * PAD,
                h: LINE_H + PAD,
            },
        );
    }

    fn finalize(mut self) -> SceneGraph {
        let bbox = self.bbox().unwrap_or(Rect {
            x: 0.0,
            y: 0.0,
            w: 0.0,
            h: 0.0,
        });
        let dx = MARGIN - bbox.x;
        let dy = MARGIN - bbox.y;
        for node in &mut self.nodes {
            node.rect.x += dx;
            node.rect.y += dy;
        }
        for edge in &mut self.edges {
            edge.from.x += dx;
            edge.from.y += dy;
            edge.to.x += dx;
            edge.to.y += dy;
        }
        let mut graph = SceneGraph {
            canvas_width: bbox.w + 2.0 * MARGIN,
            canvas_height: bbox.h + 2.0 * MARGIN,
            nodes: self.nodes,
            edges: self.edges,
        };
        let footnotes = graph.footnote_targets().len();
        graph.canvas_height += footnotes as f64 * FOOTNOTE_LINE_H;
        graph
    }
}

#[cfg(test)]
mod tests;
