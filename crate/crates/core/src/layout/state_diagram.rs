//! State-transition rules diagrams: states flow left to right in topological
//! order (longest-path layering), with labeled transition edges. Cycles are
//! legal in state machines; nodes on a cycle fall back to declaration order.

use std::collections::VecDeque;

use crate::model::StateTransitionRules;

use super::measure::text_width;
use super::scene::{EdgeStyle, NodeKind, Point, Rect};
use super::{SceneBuilder, LINE_H, PAD, STATE_H_GAP, STATE_V_GAP};

pub(super) fn build_state_diagram(scene: &mut SceneBuilder, rules: &StateTransitionRules) {
    let layers = assign_layers(rules);
    let layer_count = layers.iter().copied().max().map_or(0, |m| m + 1);

    // Size every state box up front.
    let specs: Vec<(Vec<String>, f64, f64)> = rules
        .states
        .iter()
        .map(|state| {
            let lines: Vec<String> = state
                .visible_fields
                .iter()
                .map(|f| f.name.clone())
                .collect();
            let mut w = text_width(&state.name.name);
            for line in &lines {
                w = w.max(text_width(line));
            }
            let h = (1 + lines.len()) as f64 * LINE_H + 2.0 * PAD;
            (lines, w + 2.0 * PAD, h)
        })
        .collect();

    // Column positions: each layer as wide as its widest state.
    let mut layer_widths = vec![0.0f64; layer_count];
    for (state_index, layer) in layers.iter().enumerate() {
        layer_widths[*layer] = layer_widths[*layer].max(specs[state_index].1);
    }
    let mut layer_x = Vec::with_capacity(layer_count);
    let mut x = 0.0;
    for width in &layer_widths {
        layer_x.push(x);
        x += width + STATE_H_GAP;
    }

    // Place states top-down per layer, in declaration order.
    let mut node_ids = vec![usize::MAX; rules.states.len()];
    let mut layer_cursor = vec![0.0f64; layer_count];
    for (state_index, state) in rules.states.iter().enumerate() {
        let layer = layers[state_index];
        let (lines, w, h) = &specs[state_index];
        let rect = Rect {
            x: layer_x[layer],
            y: layer_cursor[layer],
            w: *w,
            h: *h,
        };
        layer_cursor[layer] += h + STATE_V_GAP;
        node_ids[state_index] = scene.push_node(
            NodeKind::StateNode {
                title: state.name.name.clone(),
                lines: lines.clone(),
            },
            rect,
        );
    }

    for transition in &rules.transitions {
        let (Some(from_index), Some(to_index)) = (
            state_index(rules, &transition.from.name),
            state_index(rules, &transition.to.name),
        ) else {
            continue; // undeclared endpoint: V10 territory, nothing to draw
        };
        let from_rect = scene.node_rect(node_ids[from_index]);
        let to_rect = scene.node_rect(node_ids[to_index]);

        let (from, to) = if from_index == to_index {
            // Self transition: a short mark on the right boundary.
            (
                Point {
                    x: from_rect.right(),
                    y: from_rect.center_y() - 4.0,
                },
                Point {
                    x: from_rect.right(),
                    y: from_rect.center_y() + 4.0,
                },
            )
        } else if layers[to_index] > layers[from_index] {
            (
                Point {
                    x: from_rect.right(),
                    y: from_rect.center_y(),
                },
                Point {
                    x: to_rect.x,
                    y: to_rect.center_y(),
                },
            )
        } else if layers[to_index] < layers[from_index] {
            (
                Point {
                    x: from_rect.x,
                    y: from_rect.center_y(),
                },
                Point {
                    x: to_rect.right(),
                    y: to_rect.center_y(),
                },
            )
        } else if from_rect.y < to_rect.y {
            (
                Point {
                    x: from_rect.center_x(),
                    y: from_rect.bottom(),
                },
                Point {
                    x: to_rect.center_x(),
                    y: to_rect.y,
                },
            )
        } else {
            (
                Point {
                    x: from_rect.center_x(),
                    y: from_rect.y,
                },
                Point {
                    x: to_rect.center_x(),
                    y: to_rect.bottom(),
                },
            )
        };

        scene.push_edge(
            node_ids[from_index],
            node_ids[to_index],
            from,
            to,
            EdgeStyle::Transition,
            Some(transition.action.node.clone()),
        );
    }
}

fn state_index(rules: &StateTransitionRules, name: &str) -> Option<usize> {
    rules.states.iter().position(|s| s.name.name == name)
}

/// Longest-path layering over the acyclic part; states left unprocessed by
/// the topological pass (the cyclic remainder) get one trailing layer each,
/// in declaration order.
fn assign_layers(rules: &StateTransitionRules) -> Vec<usize> {
    let n = rules.states.len();
    let mut successors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for transition in &rules.transitions {
        let (Some(from), Some(to)) = (
            state_index(rules, &transition.from.name),
            state_index(rules, &transition.to.name),
        ) else {
            continue;
        };
        if from == to {
            continue;
        }
        successors[from].push(to);
        indegree[to] += 1;
    }

    let mut layer = vec![0usize; n];
    let mut done = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    while let Some(current) = queue.pop_front() {
        done[current] = true;
        for &next in &successors[current] {
            layer[next] = layer[next].max(layer[current] + 1);
            indegree[next] -= 1;
            if indegree[next] == 0 {
                queue.push_back(next);
            }
        }
    }

    let mut next_layer = (0..n)
        .filter(|&i| done[i])
        .map(|i| layer[i] + 1)
        .max()
        .unwrap_or(0);
    for index in 0..n {
        if !done[index] {
            layer[index] = next_layer;
            next_layer += 1;
        }
    }
    layer
}
