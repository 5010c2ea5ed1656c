//! Byte-stable SVG emission. Elements are written in scene order with fixed
//! two-decimal coordinates, so rendering the same scene twice produces
//! identical bytes on any platform. Only a small SVG 1.1 subset is used
//! (rect, line, path, text, g, title) and nothing references external
//! resources.

use std::fmt;
use std::fmt::Write as _;

use crate::layout::{NodeKind, Point, Rect, SceneEdge, SceneGraph, SceneNode, MARGIN};

use super::outline_font;
use super::theme::Theme;

const STROKE_WIDTH: &str = "1.2";
const DASH_PATTERN: &str = "6 3";
const ARROW_LEN: f64 = 7.0;
const ARROW_HALF_WIDTH: f64 = 3.0;
const LINE_H: f64 = crate::layout::LINE_H;
const PAD: f64 = crate::layout::PAD;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RenderOptions {
    /// Emit labels as stroke paths instead of text elements, so no string
    /// in the file is machine-readable.
    pub outline_text: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RenderError {
    /// A scene with zero nodes has nothing to draw; rendering it is a
    /// pipeline bug, not an empty image.
    EmptyScene,
}

impl fmt::Display for RenderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RenderError::EmptyScene => write!(f, "refusing to render an empty scene"),
        }
    }
}

impl std::error::Error for RenderError {}

pub fn render(scene: &SceneGraph, theme: &Theme) -> Result<String, RenderError> {
    render_with(scene, theme, &RenderOptions::default())
}

pub fn render_with(
    scene: &SceneGraph,
    theme: &Theme,
    options: &RenderOptions,
) -> Result<String, RenderError> {
    if scene.nodes.is_empty() {
        return Err(RenderError::EmptyScene);
    }
    let mut writer = SvgWriter {
        out: String::new(),
        theme,
        outline: options.outline_text,
    };
    writer.document(scene);
    Ok(writer.out)
}

struct SvgWriter<'a> {
    out: String,
    theme: &'a Theme,
    outline: bool,
}

#[derive(Clone, Copy, PartialEq)]
enum Anchor {
    Start,
    Middle,
}

#[derive(Clone, Copy, Default)]
struct TextStyle {
    bold: bool,
    italic: bool,
    scale: Option<f64>,
}

impl<'a> SvgWriter<'a> {
    fn document(&mut self, scene: &SceneGraph) {
        let w = fmt_num(scene.canvas_width);
        let h = fmt_num(scene.canvas_height);
        self.out
            .push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            self.out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
        );

        for node in &scene.nodes {
            self.node(node);
        }
        for edge in &scene.edges {
            self.edge(edge);
        }
        self.footnotes(scene);

        self.out.push_str("</svg>\n");
    }

    fn node(&mut self, node: &SceneNode) {
        let r = node.rect;
        self.out.push_str("<g>\n");
        match &node.kind {
            NodeKind::FunctionBox { label } => {
                self.rect(r, &self.theme.function_box_fill.clone(), true);
                self.centered_text(
                    r,
                    label,
                    &self.theme.function_box_text.clone(),
                    TextStyle::default(),
                );
            }
            NodeKind::Label { text } => {
                let text = text.clone();
                self.centered_text(r, &text, &self.theme.text.clone(), TextStyle::default());
            }
            NodeKind::ArrayStrip { cells } => {
                let cells = cells.clone();
                let cell_w = r.w / cells.len() as f64;
                for (i, cell) in cells.iter().enumerate() {
                    let cell_rect = Rect {
                        x: r.x + i as f64 * cell_w,
                        y: r.y,
                        w: cell_w,
                        h: r.h,
                    };
                    self.rect(cell_rect, &self.theme.box_fill.clone(), true);
                    self.centered_text(
                        cell_rect,
                        cell,
                        &self.theme.text.clone(),
                        TextStyle::default(),
                    );
                }
            }
            NodeKind::SnapshotBox {
                title,
                state,
                lines,
            } => {
                let (title, state, lines) = (title.clone(), state.clone(), lines.clone());
                self.rect(r, &self.theme.box_fill.clone(), true);
                self.titled_box_text(r, &title, state.as_deref(), &lines);
            }
            NodeKind::StateNode { title, lines } => {
                let (title, lines) = (title.clone(), lines.clone());
                self.rect(r, &self.theme.state_node_fill.clone(), true);
                self.titled_box_text(r, &title, None, &lines);
            }
            NodeKind::ClassBox { title, lines } => {
                let (title, lines) = (title.clone(), lines.clone());
                self.rect(r, &self.theme.box_fill.clone(), true);
                self.titled_box_text(r, &title, None, &lines);
            }
            NodeKind::Glyph => {
                // Nested boxes: the generic "this attribute is an object" icon.
                self.rect(r, "none", true);
                let inset = r.w / 4.0;
                self.rect(
                    Rect {
                        x: r.x + inset,
                        y: r.y + inset,
                        w: r.w - 2.0 * inset,
                        h: r.h - 2.0 * inset,
                    },
                    "none",
                    true,
                );
            }
            NodeKind::Asterisk { .. } => {
                let center = Point {
                    x: r.center_x(),
                    y: r.center_y(),
                };
                let baseline = center.y + self.theme.base_font_size * 0.45;
                self.text(
                    center.x,
                    baseline,
                    Anchor::Middle,
                    "*",
                    &self.theme.text.clone(),
                    TextStyle {
                        bold: true,
                        italic: false,
                        scale: Some(1.4),
                    },
                );
            }
            NodeKind::Caption { text } => {
                let text = text.clone();
                let baseline = r.y + r.h / 2.0 + self.theme.base_font_size * 0.35;
                self.text(
                    r.x + PAD,
                    baseline,
                    Anchor::Start,
                    &text,
                    &self.theme.text.clone(),
                    TextStyle {
                        bold: false,
                        italic: true,
                        scale: None,
                    },
                );
            }
        }
        self.out.push_str("</g>\n");
    }

    /// Title line, separator, optional bracketed state line, then body lines.
    fn titled_box_text(&mut self, r: Rect, title: &str, state: Option<&str>, lines: &[String]) {
        let text_color = self.theme.text.clone();
        let mut baseline = r.y + PAD + LINE_H * 0.75;
        self.text(
            r.center_x(),
            baseline,
            Anchor::Middle,
            title,
            &text_color,
            TextStyle {
                bold: true,
                italic: false,
                scale: None,
            },
        );
        let separator_y = r.y + PAD + LINE_H;
        self.line(
            Point {
                x: r.x,
                y: separator_y,
            },
            Point {
                x: r.right(),
                y: separator_y,
            },
            &self.theme.stroke.clone(),
            false,
        );
        baseline += LINE_H;
        if let Some(state) = state {
            self.text(
                r.center_x(),
                baseline,
                Anchor::Middle,
                &format!("[{state}]"),
                &text_color,
                TextStyle {
                    bold: false,
                    italic: true,
                    scale: None,
                },
            );
            baseline += LINE_H;
        }
        for line in lines {
            self.text(
                r.x + PAD,
                baseline,
                Anchor::Start,
                line,
                &text_color,
                TextStyle::default(),
            );
            baseline += LINE_H;
        }
    }

    fn edge(&mut self, edge: &SceneEdge) {
        let color = self.theme.color(edge.color).to_string();
        self.out.push_str("<g>\n");

        let dx = edge.to.x - edge.from.x;
        let dy = edge.to.y - edge.from.y;
        let len = (dx * dx + dy * dy).sqrt();
        let (ux, uy) = if len > 0.0 {
            (dx / len, dy / len)
        } else {
            (1.0, 0.0)
        };

        // Shaft stops at the arrowhead base so dashes never cross the head.
        let base = Point {
            x: edge.to.x - ux * ARROW_LEN,
            y: edge.to.y - uy * ARROW_LEN,
        };
        let dashed = edge.style == crate::layout::EdgeStyle::DashedMutation;
        self.line(edge.from, base, &color, dashed);

        let left = Point {
            x: base.x - uy * ARROW_HALF_WIDTH,
            y: base.y + ux * ARROW_HALF_WIDTH,
        };
        let right = Point {
            x: base.x + uy * ARROW_HALF_WIDTH,
            y: base.y - ux * ARROW_HALF_WIDTH,
        };
        let _ = writeln!(
            self.out,
            "<path d=\"M {} {} L {} {} L {} {} Z\" fill=\"{}\"/>",
            fmt_num(edge.to.x),
            fmt_num(edge.to.y),
            fmt_num(left.x),
            fmt_num(left.y),
            fmt_num(right.x),
            fmt_num(right.y),
            color
        );

        if let Some(label) = &edge.label {
            let label = label.clone();
            let mid = Point {
                x: (edge.from.x + edge.to.x) / 2.0,
                y: (edge.from.y + edge.to.y) / 2.0,
            };
            self.text(
                mid.x,
                mid.y - 4.0,
                Anchor::Middle,
                &label,
                &color,
                TextStyle::default(),
            );
        }
        self.out.push_str("</g>\n");
    }

    /// One footnote line per referenced rules diagram, at the canvas bottom.
    fn footnotes(&mut self, scene: &SceneGraph) {
        let targets: Vec<String> = scene
            .footnote_targets()
            .iter()
            .map(|t| t.to_string())
            .collect();
        if targets.is_empty() {
            return;
        }
        let count = targets.len() as f64;
        let block_top = scene.canvas_height - count * LINE_H - 4.0;
        for (index, target) in targets.iter().enumerate() {
            let baseline = block_top + (index as f64 + 1.0) * LINE_H;
            let text = format!("* see state transition rules \"{target}\"");
            self.text(
                MARGIN,
                baseline,
                Anchor::Start,
                &text,
                &self.theme.text.clone(),
                TextStyle {
                    bold: false,
                    italic: true,
                    scale: None,
                },
            );
        }
    }

    fn rect(&mut self, r: Rect, fill: &str, stroked: bool) {
        let stroke = if stroked {
            format!(
                " stroke=\"{}\" stroke-width=\"{STROKE_WIDTH}\"",
                escape(&self.theme.stroke)
            )
        } else {
            String::new()
        };
        let _ = writeln!(
            self.out,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"{stroke}/>",
            fmt_num(r.x),
            fmt_num(r.y),
            fmt_num(r.w),
            fmt_num(r.h),
            escape(fill)
        );
    }

    fn line(&mut self, from: Point, to: Point, color: &str, dashed: bool) {
        let dash = if dashed {
            format!(" stroke-dasharray=\"{DASH_PATTERN}\"")
        } else {
            String::new()
        };
        let _ = writeln!(
            self.out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{STROKE_WIDTH}\"{dash}/>",
            fmt_num(from.x),
            fmt_num(from.y),
            fmt_num(to.x),
            fmt_num(to.y),
            escape(color)
        );
    }

    fn centered_text(&mut self, r: Rect, content: &str, fill: &str, style: TextStyle) {
        let baseline = r.y + r.h / 2.0 + self.theme.base_font_size * 0.35;
        self.text(r.center_x(), baseline, Anchor::Middle, content, fill, style);
    }

    fn text(
        &mut self,
        x: f64,
        baseline: f64,
        anchor: Anchor,
        content: &str,
        fill: &str,
        style: TextStyle,
    ) {
        let size = self.theme.base_font_size * style.scale.unwrap_or(1.0);
        if self.outline {
            self.outline_text(x, baseline, anchor, content, fill, size);
            return;
        }
        let anchor_attr = match anchor {
            Anchor::Start => "start",
            Anchor::Middle => "middle",
        };
        let weight = if style.bold {
            " font-weight=\"bold\""
        } else {
            ""
        };
        let slant = if style.italic {
            " font-style=\"italic\""
        } else {
            ""
        };
        let _ = writeln!(
            self.out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"{anchor_attr}\" font-family=\"{}\" font-size=\"{}\" fill=\"{}\"{weight}{slant}>{}</text>",
            fmt_num(x),
            fmt_num(baseline),
            escape(&self.theme.font_family),
            fmt_num(size),
            escape(fill),
            escape(content)
        );
    }

    /// Stroke-font emission: the whole string becomes one path per glyph
    /// polyline, grouped, with no text element at all.
    fn outline_text(
        &mut self,
        x: f64,
        baseline: f64,
        anchor: Anchor,
        content: &str,
        fill: &str,
        size: f64,
    ) {
        let advance = size * 8.0 / 14.0;
        let chars: Vec<char> = content.chars().collect();
        let total = advance * chars.len() as f64;
        let start_x = match anchor {
            Anchor::Start => x,
            Anchor::Middle => x - total / 2.0,
        };
        let sx = advance * 0.72 / 4.0;
        let sy = size * 0.66 / 6.0;
        let inset = (advance - 4.0 * sx) / 2.0;

        let mut d = String::new();
        for (index, c) in chars.iter().enumerate() {
            let strokes = match outline_font::glyph(*c) {
                Some(strokes) => strokes,
                None => outline_font::PLACEHOLDER,
            };
            let origin_x = start_x + index as f64 * advance + inset;
            for polyline in strokes {
                for (point_index, (gx, gy)) in polyline.iter().enumerate() {
                    let px = origin_x + *gx as f64 * sx;
                    let py = baseline + (*gy as f64 - 6.0) * sy;
                    let op = if point_index == 0 { 'M' } else { 'L' };
                    let _ = write!(d, "{op} {} {} ", fmt_num(px), fmt_num(py));
                }
            }
        }
        if d.is_empty() {
            return;
        }
        let _ = writeln!(
            self.out,
            "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.1\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>",
            d.trim_end(),
            escape(fill)
        );
    }
}

/// Fixed two-decimal formatting for every coordinate: byte stability.
fn fmt_num(value: f64) -> String {
    format!("{value:.2}")
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            other => out.push(other),
        }
    }
    out
}
