//! Class and inheritance diagrams: one box per class, side by side, with
//! attribute and constructor lines inside and method behaviors as example
//! rows underneath. Relationship edges between classes are never drawn;
//! composition shows only as the object glyph on the attribute line, and
//! the implied superclass of an inheritance diagram is deliberately absent.

use crate::model::{AttributeSpec, ClassDecl};

use super::function_diagram::build_example_rows;
use super::measure::text_width;
use super::scene::{NodeKind, Point, Rect};
use super::{SceneBuilder, COL_GAP, GLYPH_SIZE, LINE_H, PAD, V_GAP};

pub(super) fn build_class_diagram(scene: &mut SceneBuilder, classes: &[ClassDecl]) {
    let mut x = 0.0;
    for class in classes {
        let width = build_class_column(scene, class, x);
        x += width + COL_GAP;
    }
}

/// One class column: the box, its glyphs, then method rows. Returns the
/// column width consumed.
fn build_class_column(scene: &mut SceneBuilder, class: &ClassDecl, x: f64) -> f64 {
    let mut lines = Vec::new();
    let mut glyph_lines = Vec::new();
    for attr in &class.attributes {
        if attr.object_valued {
            glyph_lines.push(lines.len());
        }
        lines.push(attr_line(attr));
    }
    for ctor in &class.constructors {
        let params = ctor
            .params
            .iter()
            .map(|p| p.node.display())
            .collect::<Vec<_>>()
            .join(", ");
        lines.push(format!("ctor({params})"));
    }

    let mut box_w = text_width(&class.name.name);
    for (index, line) in lines.iter().enumerate() {
        let mut line_w = text_width(line);
        if glyph_lines.contains(&index) {
            line_w += GLYPH_SIZE + PAD;
        }
        box_w = box_w.max(line_w);
    }
    let box_w = box_w + 2.0 * PAD;
    let box_h = (1 + lines.len()) as f64 * LINE_H + 2.0 * PAD;

    let box_rect = Rect {
        x,
        y: 0.0,
        w: box_w,
        h: box_h,
    };
    scene.push_node(
        NodeKind::ClassBox {
            title: class.name.name.clone(),
            lines: lines.clone(),
        },
        box_rect,
    );

    // Object glyphs sit at the right end of their attribute line.
    for line_index in &glyph_lines {
        let line_y = box_rect.y + PAD + (1 + line_index) as f64 * LINE_H;
        scene.push_node(
            NodeKind::Glyph,
            Rect {
                x: box_rect.right() - PAD - GLYPH_SIZE,
                y: line_y + (LINE_H - GLYPH_SIZE) / 2.0,
                w: GLYPH_SIZE,
                h: GLYPH_SIZE,
            },
        );
    }

    let mut width = box_w;
    let mut y = box_rect.bottom() + 2.0 * V_GAP;
    for method in &class.methods {
        let (row_w, row_h) =
            build_example_rows(scene, &method.examples, &method.name.name, Point { x, y });
        width = width.max(row_w);
        if row_h > 0.0 {
            y += row_h + 2.0 * V_GAP;
        }
    }

    width
}

fn attr_line(attr: &AttributeSpec) -> String {
    match &attr.ty {
        Some(ty) => format!("{}: {}", attr.name.name, ty.node.display()),
        None => attr.name.name.clone(),
    }
}
