//! The visual vocabulary: every color the renderer uses comes from here.
//! Defaults follow the notation (orange inputs, green outputs, black
//! function box, gray dashed mutations, light blue states); the exact hex
//! values are this tool's choice and every one can be overridden from a
//! `key = value` theme file.

use std::fmt;
use std::path::Path;

use crate::layout::ColorToken;

#[derive(Debug, Clone, PartialEq)]
pub struct Theme {
    pub input_arrow: String,
    pub output_arrow: String,
    pub mutation_arrow: String,
    pub transition_arrow: String,
    pub function_box_fill: String,
    pub function_box_text: String,
    pub state_node_fill: String,
    pub box_fill: String,
    pub stroke: String,
    pub text: String,
    pub font_family: String,
    pub base_font_size: f64,
}

impl Default for Theme {
    fn default() -> Self {
        Theme {
            input_arrow: "#E07B26".into(),
            output_arrow: "#2E8B57".into(),
            mutation_arrow: "#555555".into(),
            transition_arrow: "#333333".into(),
            function_box_fill: "#000000".into(),
            function_box_text: "#FFFFFF".into(),
            state_node_fill: "#D6E8F5".into(),
            box_fill: "#FFFFFF".into(),
            stroke: "#000000".into(),
            text: "#000000".into(),
            font_family: "sans-serif".into(),
            base_font_size: 14.0,
        }
    }
}

impl Theme {
    pub fn color(&self, token: ColorToken) -> &str {
        match token {
            ColorToken::InputArrow => &self.input_arrow,
            ColorToken::OutputArrow => &self.output_arrow,
            ColorToken::MutationArrow => &self.mutation_arrow,
            ColorToken::TransitionArrow => &self.transition_arrow,
        }
    }

    /// Parse a `key = value` theme file; unknown keys and malformed hex
    /// values are errors.
    pub fn from_str(text: &str) -> Result<Self, ThemeError> {
        let mut theme = Theme::default();
        for (index, raw_line) in text.lines().enumerate() {
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ThemeError {
                    line: index + 1,
                    problem: "expected `key = value`".into(),
                });
            };
            let key = key.trim();
            let value = value.trim().trim_matches('"').to_string();
            let fail = |problem: String| ThemeError {
                line: index + 1,
                problem,
            };

            match key {
                "font_family" => theme.font_family = value,
                "base_font_size" => {
                    theme.base_font_size = value
                        .parse::<f64>()
                        .ok()
                        .filter(|size| size.is_finite() && *size > 0.0)
                        .ok_or_else(|| fail(format!("`{value}` is not a positive number")))?;
                }
                _ => {
                    let slot = match key {
                        "input_arrow" => &mut theme.input_arrow,
                        "output_arrow" => &mut theme.output_arrow,
                        "mutation_arrow" => &mut theme.mutation_arrow,
                        "transition_arrow" => &mut theme.transition_arrow,
                        "function_box_fill" => &mut theme.function_box_fill,
                        "function_box_text" => &mut theme.function_box_text,
                        "state_node_fill" => &mut theme.state_node_fill,
                        "box_fill" => &mut theme.box_fill,
                        "stroke" => &mut theme.stroke,
                        "text" => &mut theme.text,
                        other => return Err(fail(format!("unknown key `{other}`"))),
                    };
                    if !is_hex_color(&value) {
                        return Err(fail(format!("`{value}` is not a `#RRGGBB` color")));
                    }
                    *slot = value;
                }
            }
        }
        Ok(theme)
    }

    pub fn from_file(path: &Path) -> Result<Self, ThemeError> {
        let text = std::fs::read_to_string(path).map_err(|e| ThemeError {
            line: 0,
            problem: format!("cannot read `{}`: {e}", path.display()),
        })?;
        Theme::from_str(&text)
    }
}

fn is_hex_color(value: &str) -> bool {
    value.len() == 7 && value.starts_with('#') && value[1..].chars().all(|c| c.is_ascii_hexdigit())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThemeError {
    pub line: usize,
    pub problem: String,
}

impl fmt::Display for ThemeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "theme: {}", self.problem)
        } else {
            write!(f, "theme line {}: {}", self.line, self.problem)
        }
    }
}

impl std::error::Error for ThemeError {}
