//! Resolved geometry: the contract between layout and the SVG renderer.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl Rect {
    pub fn right(&self) -> f64 {
        self.x + self.w
    }

    pub fn bottom(&self) -> f64 {
        self.y + self.h
    }

    pub fn center_x(&self) -> f64 {
        self.x + self.w / 2.0
    }

    pub fn center_y(&self) -> f64 {
        self.y + self.h / 2.0
    }

    /// Strict area intersection; rectangles that merely touch do not overlap.
    pub fn overlaps(&self, other: &Rect) -> bool {
        self.x < other.right()
            && other.x < self.right()
            && self.y < other.bottom()
            && other.y < self.bottom()
    }

    /// Is `p` on the rectangle's boundary (within `eps`)?
    pub fn on_boundary(&self, p: Point, eps: f64) -> bool {
        let on_vertical = ((p.x - self.x).abs() <= eps || (p.x - self.right()).abs() <= eps)
            && p.y >= self.y - eps
            && p.y <= self.bottom() + eps;
        let on_horizontal = ((p.y - self.y).abs() <= eps || (p.y - self.bottom()).abs() <= eps)
            && p.x >= self.x - eps
            && p.x <= self.right() + eps;
        on_vertical || on_horizontal
    }
}

/// What a node is and the text it carries. Geometry lives in [`SceneNode`].
#[derive(Debug, Clone, PartialEq)]
pub enum NodeKind {
    /// The black box with the (obfuscated) function or method name.
    FunctionBox {
        label: String,
    },
    ClassBox {
        title: String,
        lines: Vec<String>,
    },
    /// A line of small boxes for an array value, one cell per element.
    ArrayStrip {
        cells: Vec<String>,
    },
    SnapshotBox {
        title: String,
        state: Option<String>,
        lines: Vec<String>,
    },
    StateNode {
        title: String,
        lines: Vec<String>,
    },
    Label {
        text: String,
    },
    /// The nested-box icon marking an object-valued attribute.
    Glyph,
    /// The marker tying an output to a state-transition rules diagram.
    Asterisk {
        target: String,
    },
    /// The legend explaining dashed versus solid arrows.
    Caption {
        text: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SceneNode {
    pub kind: NodeKind,
    pub rect: Rect,
}

impl SceneNode {
    /// Decorations (glyphs, asterisks) may sit on top of other nodes; every
    /// other node is opaque and subject to the non-overlap invariant.
    pub fn is_decoration(&self) -> bool {
        matches!(self.kind, NodeKind::Glyph | NodeKind::Asterisk { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStyle {
    SolidInput,
    SolidOutput,
    DashedMutation,
    Transition,
}

impl EdgeStyle {
    pub fn color_token(&self) -> ColorToken {
        match self {
            EdgeStyle::SolidInput => ColorToken::InputArrow,
            EdgeStyle::SolidOutput => ColorToken::OutputArrow,
            EdgeStyle::DashedMutation => ColorToken::MutationArrow,
            EdgeStyle::Transition => ColorToken::TransitionArrow,
        }
    }
}

/// A theme color slot. The renderer resolves tokens to hex values; nothing
/// downstream of the theme hardcodes a color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorToken {
    InputArrow,
    OutputArrow,
    MutationArrow,
    TransitionArrow,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SceneEdge {
    pub from_node: usize,
    pub to_node: usize,
    /// Anchor points; each lies on the boundary of its node.
    pub from: Point,
    pub to: Point,
    pub style: EdgeStyle,
    pub color: ColorToken,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SceneGraph {
    pub canvas_width: f64,
    pub canvas_height: f64,
    pub nodes: Vec<SceneNode>,
    pub edges: Vec<SceneEdge>,
}

impl SceneGraph {
    /// Rules diagrams referenced by asterisk markers, unique, in node order.
    /// Each becomes one footnote line at the canvas bottom.
    pub fn footnote_targets(&self) -> Vec<&str> {
        let mut targets = Vec::new();
        for node in &self.nodes {
            if let NodeKind::Asterisk { target } = &node.kind {
                if !targets.contains(&target.as_str()) {
                    targets.push(target.as_str());
                }
            }
        }
        targets
    }
}
