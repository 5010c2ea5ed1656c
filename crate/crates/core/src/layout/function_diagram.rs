//! Example rows: inputs on the left, the black function box in the center,
//! the output and after-state snapshots on the right. One row per example,
//! stacked vertically. Class diagrams reuse this for method behaviors.

use crate::model::{snapshot_equal, FunctionExample};

use super::measure::{self, NodeSpec};
use super::scene::{EdgeStyle, NodeKind, Point, Rect};
use super::{SceneBuilder, ASTERISK_GAP, ASTERISK_SIZE, H_GAP, ROW_GAP, V_GAP};

struct RowPlan {
    inputs: Vec<NodeSpec>,
    /// Output value first (if any), then one snapshot box per after state.
    right: Vec<RightItem>,
}

enum RightItem {
    Output {
        spec: NodeSpec,
        starred: Option<String>,
    },
    After {
        spec: NodeSpec,
        changed: bool,
    },
}

impl RightItem {
    fn spec(&self) -> &NodeSpec {
        match self {
            RightItem::Output { spec, .. } | RightItem::After { spec, .. } => spec,
        }
    }
}

/// Lay out one row per example at `origin`, growing down and to the right.
/// Returns the extent consumed (width, height).
pub(super) fn build_example_rows(
    scene: &mut SceneBuilder,
    examples: &[FunctionExample],
    box_label: &str,
    origin: Point,
) -> (f64, f64) {
    let rows: Vec<RowPlan> = examples.iter().map(plan_row).collect();
    let fbox = measure::function_box(box_label);

    let left_w = rows
        .iter()
        .flat_map(|r| &r.inputs)
        .map(|n| n.w)
        .fold(0.0, f64::max);

    let x_fbox = origin.x + if left_w > 0.0 { left_w + H_GAP } else { 0.0 };
    let x_right = x_fbox + fbox.w + H_GAP;

    let mut y = origin.y;
    let mut max_right_edge = x_fbox + fbox.w;

    for row in &rows {
        let left_h = stack_height(row.inputs.iter().map(|n| n.h));
        let right_h = stack_height(row.right.iter().map(|i| i.spec().h));
        let row_h = left_h.max(right_h).max(fbox.h);

        // Inputs, right-aligned so arrows start flush at the column edge.
        let mut input_ids = Vec::new();
        let mut cursor = y + (row_h - left_h) / 2.0;
        for input in &row.inputs {
            let rect = Rect {
                x: origin.x + left_w - input.w,
                y: cursor,
                w: input.w,
                h: input.h,
            };
            input_ids.push(scene.push_node(input.kind.clone(), rect));
            cursor += input.h + V_GAP;
        }

        let fbox_rect = Rect {
            x: x_fbox,
            y: y + (row_h - fbox.h) / 2.0,
            w: fbox.w,
            h: fbox.h,
        };
        let fbox_id = scene.push_node(fbox.kind.clone(), fbox_rect);

        // Input arrows fan in along the box's left edge.
        let n = input_ids.len();
        for (i, &input_id) in input_ids.iter().enumerate() {
            let input_rect = scene.node_rect(input_id);
            scene.push_edge(
                input_id,
                fbox_id,
                Point {
                    x: input_rect.right(),
                    y: input_rect.center_y(),
                },
                Point {
                    x: fbox_rect.x,
                    y: fbox_rect.y + fbox_rect.h * (i + 1) as f64 / (n + 1) as f64,
                },
                EdgeStyle::SolidInput,
                None,
            );
        }

        // Right column: output, then after states. Arrows leave the box only
        // for the output and for pairs that actually changed.
        let mut cursor = y + (row_h - right_h) / 2.0;
        let arrow_count = row
            .right
            .iter()
            .filter(|i| {
                matches!(
                    i,
                    RightItem::Output { .. } | RightItem::After { changed: true, .. }
                )
            })
            .count();
        let mut arrow_index = 0;
        for item in &row.right {
            let spec = item.spec();
            let rect = Rect {
                x: x_right,
                y: cursor,
                w: spec.w,
                h: spec.h,
            };
            let node_id = scene.push_node(spec.kind.clone(), rect);
            max_right_edge = max_right_edge.max(rect.right());
            cursor += spec.h + V_GAP;

            let style = match item {
                RightItem::Output { .. } => Some(EdgeStyle::SolidOutput),
                RightItem::After { changed: true, .. } => Some(EdgeStyle::DashedMutation),
                RightItem::After { changed: false, .. } => None,
            };
            if let Some(style) = style {
                scene.push_edge(
                    fbox_id,
                    node_id,
                    Point {
                        x: fbox_rect.right(),
                        y: fbox_rect.y
                            + fbox_rect.h * (arrow_index + 1) as f64 / (arrow_count + 1) as f64,
                    },
                    Point {
                        x: rect.x,
                        y: rect.center_y(),
                    },
                    style,
                    None,
                );
                arrow_index += 1;
            }

            if let RightItem::Output {
                starred: Some(target),
                ..
            } = item
            {
                let asterisk = Rect {
                    x: rect.right() + ASTERISK_GAP,
                    y: rect.y - ASTERISK_SIZE / 2.0,
                    w: ASTERISK_SIZE,
                    h: ASTERISK_SIZE,
                };
                scene.push_node(
                    NodeKind::Asterisk {
                        target: target.clone(),
                    },
                    asterisk,
                );
                max_right_edge = max_right_edge.max(asterisk.right());
            }
        }

        y += row_h + ROW_GAP;
    }

    let height = if rows.is_empty() {
        0.0
    } else {
        y - ROW_GAP - origin.y
    };
    (max_right_edge - origin.x, height)
}

fn plan_row(example: &FunctionExample) -> RowPlan {
    let inputs = example.inputs.iter().map(measure::value_node).collect();

    let mut right = Vec::new();
    if let Some(output) = &example.output {
        right.push(RightItem::Output {
            spec: measure::value_node(output),
            starred: example.rule_marker.as_ref().map(|m| m.target.clone()),
        });
    }
    for (before, after) in example.snapshot_pairs() {
        right.push(RightItem::After {
            spec: measure::snapshot_node(after),
            changed: !snapshot_equal(before, after),
        });
    }
    // Unpaired after-states (rule V4 flags them) still render, unconnected.
    if example.before.is_none() {
        if let Some(after) = &example.after {
            for snapshot in after {
                right.push(RightItem::After {
                    spec: measure::snapshot_node(snapshot),
                    changed: false,
                });
            }
        }
    }

    RowPlan { inputs, right }
}

fn stack_height(heights: impl Iterator<Item = f64>) -> f64 {
    let mut total = 0.0;
    let mut any = false;
    for h in heights {
        total += h + V_GAP;
        any = true;
    }
    if any {
        total - V_GAP
    } else {
        0.0
    }
}
