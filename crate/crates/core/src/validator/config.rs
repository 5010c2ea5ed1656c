//! Rule configuration, readable from a `key = value` text file
//! (conventionally `oopspec.toml` in the working directory).

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use regex::Regex;

use crate::model::{RuleCode, Severity};

/// Default stems for the descriptive-name heuristic (rule L3). Small and
/// transparent on purpose; override with `descriptive_stems = ...`.
pub const DEFAULT_STEMS: [&str; 22] = [
    "add", "avg", "balance", "calc", "compute", "count", "create", "delete", "deposit", "find",
    "get", "insert", "max", "min", "pay", "print", "remove", "search", "set", "sort", "sum",
    "withdraw",
];

pub const DEFAULT_OBFUSCATION_PATTERN: &str = "f[0-9]*";
pub const DEFAULT_MAX_NOTE_WORDS: usize = 12;

/// Per-rule severity override.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleSetting {
    Off,
    Severity(Severity),
}

#[derive(Debug, Clone)]
pub struct RuleConfig {
    pub overrides: BTreeMap<RuleCode, RuleSetting>,
    /// Anchored pattern accepted function display names must match (rule L1).
    pub obfuscation_pattern: String,
    pub max_note_words: usize,
    /// Promote every warning to an error.
    pub strict: bool,
    pub descriptive_stems: Vec<String>,
    pattern: Regex,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig::with_pattern(DEFAULT_OBFUSCATION_PATTERN)
            .expect("default obfuscation pattern compiles")
    }
}

impl RuleConfig {
    fn with_pattern(pattern: &str) -> Result<Self, ConfigError> {
        let compiled = compile_anchored(pattern)?;
        Ok(RuleConfig {
            overrides: BTreeMap::new(),
            obfuscation_pattern: pattern.to_string(),
            max_note_words: DEFAULT_MAX_NOTE_WORDS,
            strict: false,
            descriptive_stems: DEFAULT_STEMS.iter().map(|s| s.to_string()).collect(),
            pattern: compiled,
        })
    }

    pub fn strict() -> Self {
        let mut config = RuleConfig::default();
        config.strict = true;
        config
    }

    pub fn set_obfuscation_pattern(&mut self, pattern: &str) -> Result<(), ConfigError> {
        if pattern.is_empty() {
            return Err(ConfigError::Value {
                key: "obfuscation_pattern".into(),
                problem: "pattern must be non-empty".into(),
            });
        }
        self.pattern = compile_anchored(pattern)?;
        self.obfuscation_pattern = pattern.to_string();
        Ok(())
    }

    pub fn name_is_obfuscated(&self, name: &str) -> bool {
        self.pattern.is_match(name)
    }

    /// The effective severity for a rule finding, or `None` when disabled.
    /// `strict` promotes warnings after per-rule overrides are applied.
    pub fn effective_severity(&self, rule: RuleCode, default: Severity) -> Option<Severity> {
        let base = match self.overrides.get(&rule) {
            Some(RuleSetting::Off) => return None,
            Some(RuleSetting::Severity(severity)) => *severity,
            None => default,
        };
        if self.strict && base == Severity::Warning {
            Some(Severity::Error)
        } else {
            Some(base)
        }
    }

    /// Parse the `key = value` configuration format. Lines starting with `#`
    /// and blank lines are ignored; values may be double-quoted.
    pub fn from_str(text: &str) -> Result<Self, ConfigError> {
        let mut config = RuleConfig::default();
        for (index, raw_line) in text.lines().enumerate() {
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::Line {
                    line: index + 1,
                    problem: "expected `key = value`".into(),
                });
            };
            let key = key.trim();
            let value = unquote(value.trim());
            config
                .apply(key, value)
                .map_err(|problem| ConfigError::Line {
                    line: index + 1,
                    problem,
                })?;
        }
        Ok(config)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        RuleConfig::from_str(&text)
    }

    fn apply(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "strict" => {
                self.strict = parse_bool(value)?;
            }
            "max_note_words" => {
                self.max_note_words = value
                    .parse()
                    .map_err(|_| format!("`{value}` is not a non-negative integer"))?;
            }
            "obfuscation_pattern" => {
                self.set_obfuscation_pattern(value)
                    .map_err(|e| e.to_string())?;
            }
            "descriptive_stems" => {
                self.descriptive_stems = value
                    .split(',')
                    .map(|s| s.trim().to_lowercase())
                    .filter(|s| !s.is_empty())
                    .collect();
            }
            rule_key => match RuleCode::parse(rule_key) {
                Some(rule) => {
                    let setting = match value {
                        "off" => RuleSetting::Off,
                        "error" => RuleSetting::Severity(Severity::Error),
                        "warning" => RuleSetting::Severity(Severity::Warning),
                        "info" => RuleSetting::Severity(Severity::Info),
                        other => {
                            return Err(format!(
                                "`{other}` is not `error`, `warning`, `info` or `off`"
                            ))
                        }
                    };
                    self.overrides.insert(rule, setting);
                }
                None => return Err(format!("unknown key `{rule_key}`")),
            },
        }
        Ok(())
    }
}

fn compile_anchored(pattern: &str) -> Result<Regex, ConfigError> {
    Regex::new(&format!("^(?:{pattern})$")).map_err(|e| ConfigError::Value {
        key: "obfuscation_pattern".into(),
        problem: e.to_string(),
    })
}

fn parse_bool(value: &str) -> Result<bool, String> {
    match value {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(format!("`{other}` is not `true` or `false`")),
    }
}

fn unquote(value: &str) -> &str {
    if value.len() >= 2 && value.starts_with('"') && value.ends_with('"') {
        &value[1..value.len() - 1]
    } else {
        value
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    Io { path: String, message: String },
    Line { line: usize, problem: String },
    Value { key: String, problem: String },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Io { path, message } => {
                write!(f, "cannot read config `{path}`: {message}")
            }
            ConfigError::Line { line, problem } => write!(f, "config line {line}: {problem}"),
            ConfigError::Value { key, problem } => write!(f, "config key `{key}`: {problem}"),
        }
    }
}

impl std::error::Error for ConfigError {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_pattern_accepts_obfuscated_names() {
        let config = RuleConfig::default();
        for name in ["f", "f0", "f06", "f123"] {
            assert!(config.name_is_obfuscated(name), "{name}");
        }
        for name in ["withdraw", "f06x", "g1", "F06"] {
            assert!(!config.name_is_obfuscated(name), "{name}");
        }
    }

    #[test]
    fn parses_key_value_text() {
        let config = RuleConfig::from_str(
            "# comment\nstrict = true\nmax_note_words = 5\nL1 = off\nV7 = error\nobfuscation_pattern = \"fn[0-9]+\"\n",
        )
        .unwrap();
        assert!(config.strict);
        assert_eq!(config.max_note_words, 5);
        assert_eq!(config.overrides.get(&RuleCode::L1), Some(&RuleSetting::Off));
        assert!(config.name_is_obfuscated("fn9"));
        assert!(!config.name_is_obfuscated("f9"));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(RuleConfig::from_str("nope = 1").is_err());
        assert!(RuleConfig::from_str("V1 = shout").is_err());
        assert!(RuleConfig::from_str("strict").is_err());
        assert!(RuleConfig::from_str("obfuscation_pattern = (").is_err());
    }

    #[test]
    fn strict_promotes_warnings_only() {
        let config = RuleConfig::strict();
        assert_eq!(
            config.effective_severity(RuleCode::L1, Severity::Warning),
            Some(Severity::Error)
        );
        assert_eq!(
            config.effective_severity(RuleCode::V1, Severity::Error),
            Some(Severity::Error)
        );
    }

    #[test]
    fn off_override_disables_a_rule() {
        let config = RuleConfig::from_str("L1 = off").unwrap();
        assert_eq!(
            config.effective_severity(RuleCode::L1, Severity::Warning),
            None
        );
    }
}
