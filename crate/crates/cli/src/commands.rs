//! Subcommand implementations. Exit codes form a total contract:
//! 0 = clean, 1 = validation errors, 2 = parse, I/O or configuration
//! failures. When several files fail differently, the gravest class wins.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use oopspec_core::layout::{layout_unchecked, SceneGraph};
use oopspec_core::model::{Diagnostic, ExerciseAssignment, Severity};
use oopspec_core::render::{render_with, RenderOptions, Theme};
use oopspec_core::validator::{infer_common_members, validate, RuleConfig};
use oopspec_core::{parse, print};

use crate::diagnostics::{color_enabled, print_diagnostic, print_failure, print_parse_error};
use crate::manifest::{sha256_hex, BundleManifest, ManifestEntry};

pub const CONFIG_FILE: &str = "oopspec.toml";

/// Tracks the gravest failure class seen so far.
struct ExitTracker {
    code: i32,
}

impl ExitTracker {
    fn new() -> Self {
        ExitTracker { code: 0 }
    }

    fn validation_failure(&mut self) {
        self.code = self.code.max(1);
    }

    fn hard_failure(&mut self) {
        self.code = 2;
    }
}

fn load_config(strict: bool) -> Result<RuleConfig, String> {
    let path = Path::new(CONFIG_FILE);
    let mut config = if path.exists() {
        RuleConfig::from_file(path).map_err(|e| e.to_string())?
    } else {
        RuleConfig::default()
    };
    config.strict = config.strict || strict;
    Ok(config)
}

fn load_theme(path: Option<&Path>) -> Result<Theme, String> {
    match path {
        Some(path) => Theme::from_file(path).map_err(|e| e.to_string()),
        None => Ok(Theme::default()),
    }
}

struct CheckedFile {
    path: String,
    assignment: ExerciseAssignment,
    diagnostics: Vec<Diagnostic>,
}

impl CheckedFile {
    fn has_errors(&self) -> bool {
        self.diagnostics
            .iter()
            .any(|d| d.severity == Severity::Error)
    }
}

/// Read, parse and validate one file. Failures are printed here; the caller
/// only records the exit class.
fn check_file(path: &Path, config: &RuleConfig, color: bool) -> Result<CheckedFile, ()> {
    let display = path.display().to_string();
    let source = match std::fs::read_to_string(path) {
        Ok(source) => source,
        Err(error) => {
            print_failure(&display, &error.to_string(), color);
            return Err(());
        }
    };
    let assignment = match parse(&source, &display) {
        Ok(assignment) => assignment,
        Err(error) => {
            print_parse_error(&error, color);
            return Err(());
        }
    };
    let diagnostics = validate(&assignment, config);
    Ok(CheckedFile {
        path: display,
        assignment,
        diagnostics,
    })
}

/// `check` prints errors only; `lint` shows every severity.
pub fn cmd_check(paths: &[PathBuf], strict: bool, show_all: bool) -> i32 {
    let color = color_enabled();
    let mut exit = ExitTracker::new();
    let config = match load_config(strict) {
        Ok(config) => config,
        Err(message) => {
            print_failure(CONFIG_FILE, &message, color);
            return 2;
        }
    };

    for path in paths {
        let Ok(checked) = check_file(path, &config, color) else {
            exit.hard_failure();
            continue;
        };
        for diagnostic in &checked.diagnostics {
            if show_all || diagnostic.severity == Severity::Error {
                print_diagnostic(diagnostic, color);
            }
        }
        if checked.has_errors() {
            exit.validation_failure();
        }
    }
    exit.code
}

pub struct RenderParams {
    pub out: PathBuf,
    pub theme: Option<PathBuf>,
    pub force: bool,
    pub outline_text: bool,
    pub strict: bool,
}

struct RenderedDiagram {
    diagram_id: String,
    kind: &'static str,
    file_name: String,
    svg: String,
}

/// Lay out and render every diagram of a checked file. In force mode,
/// diagrams that still cannot render are reported and skipped; otherwise a
/// render failure aborts the file (unreachable for validation-clean input).
fn render_diagrams(
    checked: &CheckedFile,
    theme: &Theme,
    options: &RenderOptions,
    force: bool,
    color: bool,
) -> Result<Vec<RenderedDiagram>, ()> {
    let mut rendered = Vec::new();
    for diagram in &checked.assignment.diagrams {
        let scene: SceneGraph = layout_unchecked(diagram);
        match render_with(&scene, theme, options) {
            Ok(svg) => rendered.push(RenderedDiagram {
                diagram_id: diagram.id.node.clone(),
                kind: diagram.body.kind_name(),
                file_name: format!("{}__{}.svg", checked.assignment.id.node, diagram.id.node),
                svg,
            }),
            Err(error) => {
                print_failure(
                    &format!("{}: diagram `{}`", checked.path, diagram.id.node),
                    &error.to_string(),
                    color,
                );
                if !force {
                    return Err(());
                }
            }
        }
    }
    Ok(rendered)
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, bytes)?;
    std::fs::rename(&tmp, path)
}

pub fn cmd_render(paths: &[PathBuf], params: &RenderParams) -> i32 {
    let color = color_enabled();
    let mut exit = ExitTracker::new();
    let (config, theme) = match (
        load_config(params.strict),
        load_theme(params.theme.as_deref()),
    ) {
        (Ok(config), Ok(theme)) => (config, theme),
        (Err(message), _) | (_, Err(message)) => {
            print_failure("render", &message, color);
            return 2;
        }
    };
    if let Err(error) = std::fs::create_dir_all(&params.out) {
        print_failure(&params.out.display().to_string(), &error.to_string(), color);
        return 2;
    }
    let options = RenderOptions {
        outline_text: params.outline_text,
    };

    for path in paths {
        let Ok(checked) = check_file(path, &config, color) else {
            exit.hard_failure();
            continue;
        };
        if checked.has_errors() {
            for diagnostic in checked
                .diagnostics
                .iter()
                .filter(|d| d.severity == Severity::Error)
            {
                print_diagnostic(diagnostic, color);
            }
            if !params.force {
                exit.validation_failure();
                continue;
            }
        }
        let Ok(rendered) = render_diagrams(&checked, &theme, &options, params.force, color) else {
            exit.hard_failure();
            continue;
        };
        for item in rendered {
            let target = params.out.join(&item.file_name);
            if let Err(error) = write_atomic(&target, item.svg.as_bytes()) {
                print_failure(&target.display().to_string(), &error.to_string(), color);
                exit.hard_failure();
            } else {
                println!("wrote {}", target.display());
            }
        }
    }
    exit.code
}

pub fn cmd_bundle(paths: &[PathBuf], params: &RenderParams, embed_source: bool) -> i32 {
    let color = color_enabled();
    let mut exit = ExitTracker::new();
    let (config, theme) = match (
        load_config(params.strict),
        load_theme(params.theme.as_deref()),
    ) {
        (Ok(config), Ok(theme)) => (config, theme),
        (Err(message), _) | (_, Err(message)) => {
            print_failure("bundle", &message, color);
            return 2;
        }
    };
    let options = RenderOptions {
        outline_text: params.outline_text,
    };

    for path in paths {
        let Ok(checked) = check_file(path, &config, color) else {
            exit.hard_failure();
            continue;
        };
        if checked.has_errors() {
            for diagnostic in checked
                .diagnostics
                .iter()
                .filter(|d| d.severity == Severity::Error)
            {
                print_diagnostic(diagnostic, color);
            }
            if !params.force {
                exit.validation_failure();
                continue;
            }
        }

        let bundle_dir = params.out.join(&checked.assignment.id.node);
        if let Err(error) = std::fs::create_dir_all(&bundle_dir) {
            print_failure(&bundle_dir.display().to_string(), &error.to_string(), color);
            exit.hard_failure();
            continue;
        }

        let Ok(rendered) = render_diagrams(&checked, &theme, &options, params.force, color) else {
            exit.hard_failure();
            continue;
        };
        let mut entries = Vec::new();
        let mut io_failed = false;
        for item in rendered {
            let target = bundle_dir.join(&item.file_name);
            if let Err(error) = write_atomic(&target, item.svg.as_bytes()) {
                print_failure(&target.display().to_string(), &error.to_string(), color);
                exit.hard_failure();
                io_failed = true;
                break;
            }
            entries.push(ManifestEntry {
                id: item.diagram_id,
                kind: item.kind.to_string(),
                source_file: checked.path.clone(),
                svg_file: item.file_name,
                content_hash: sha256_hex(item.svg.as_bytes()),
            });
        }
        if io_failed {
            continue;
        }
        entries.sort_by(|a, b| a.id.cmp(&b.id));

        let mut summary = BTreeMap::from([
            ("error".to_string(), 0usize),
            ("warning".to_string(), 0usize),
            ("info".to_string(), 0usize),
        ]);
        for diagnostic in &checked.diagnostics {
            *summary
                .entry(diagnostic.severity.as_str().to_string())
                .or_insert(0) += 1;
        }

        let manifest = BundleManifest {
            assignment_id: checked.assignment.id.node.clone(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            diagrams: entries,
            diagnostics_summary: summary,
        };
        let manifest_path = bundle_dir.join("manifest.json");
        if let Err(error) = write_atomic(&manifest_path, manifest.to_json().as_bytes()) {
            print_failure(
                &manifest_path.display().to_string(),
                &error.to_string(),
                color,
            );
            exit.hard_failure();
            continue;
        }
        println!("wrote {}", manifest_path.display());

        if embed_source {
            let file_name = Path::new(&checked.path).file_name().unwrap_or_default();
            let target = bundle_dir.join(file_name);
            if let Err(error) = std::fs::copy(&checked.path, &target) {
                print_failure(&target.display().to_string(), &error.to_string(), color);
                exit.hard_failure();
            }
        }
    }
    exit.code
}

/// Recompute every bundle hash and compare against the manifest.
pub fn cmd_verify(dirs: &[PathBuf]) -> i32 {
    let color = color_enabled();
    let mut exit = ExitTracker::new();
    for dir in dirs {
        let manifest_path = dir.join("manifest.json");
        let manifest = match BundleManifest::load(&manifest_path) {
            Ok(manifest) => manifest,
            Err(message) => {
                print_failure(&manifest_path.display().to_string(), &message, color);
                exit.hard_failure();
                continue;
            }
        };
        let mut mismatches = 0;
        for entry in &manifest.diagrams {
            let svg_path = dir.join(&entry.svg_file);
            match std::fs::read(&svg_path) {
                Ok(bytes) => {
                    let actual = sha256_hex(&bytes);
                    if actual != entry.content_hash {
                        eprintln!(
                            "{}: hash mismatch (manifest {}, actual {actual})",
                            svg_path.display(),
                            entry.content_hash
                        );
                        mismatches += 1;
                    }
                }
                Err(error) => {
                    print_failure(&svg_path.display().to_string(), &error.to_string(), color);
                    exit.hard_failure();
                }
            }
        }
        if mismatches > 0 {
            exit.validation_failure();
        } else if exit.code == 0 {
            println!(
                "{}: {} diagrams verified",
                dir.display(),
                manifest.diagrams.len()
            );
        }
    }
    exit.code
}

/// Rewrite files in canonical form. Unparseable files are left untouched.
pub fn cmd_fmt(paths: &[PathBuf]) -> i32 {
    let color = color_enabled();
    let mut exit = ExitTracker::new();
    for path in paths {
        let display = path.display().to_string();
        let source = match std::fs::read_to_string(path) {
            Ok(source) => source,
            Err(error) => {
                print_failure(&display, &error.to_string(), color);
                exit.hard_failure();
                continue;
            }
        };
        let assignment = match parse(&source, &display) {
            Ok(assignment) => assignment,
            Err(error) => {
                print_parse_error(&error, color);
                exit.hard_failure();
                continue;
            }
        };
        let formatted = print(&assignment);
        if formatted != source {
            if let Err(error) = write_atomic(path, formatted.as_bytes()) {
                print_failure(&display, &error.to_string(), color);
                exit.hard_failure();
            } else {
                println!("formatted {display}");
            }
        }
    }
    exit.code
}

/// Print the inferred common members of every inheritance diagram: the
/// superclass candidate instructors expect students to discover.
pub fn cmd_infer(paths: &[PathBuf]) -> i32 {
    let color = color_enabled();
    let mut exit = ExitTracker::new();
    for path in paths {
        let display = path.display().to_string();
        let source = match std::fs::read_to_string(path) {
            Ok(source) => source,
            Err(error) => {
                print_failure(&display, &error.to_string(), color);
                exit.hard_failure();
                continue;
            }
        };
        let assignment = match parse(&source, &display) {
            Ok(assignment) => assignment,
            Err(error) => {
                print_parse_error(&error, color);
                exit.hard_failure();
                continue;
            }
        };
        let mut found = false;
        for diagram in &assignment.diagrams {
            let oopspec_core::model::DiagramBody::Inheritance(classes) = &diagram.body else {
                continue;
            };
            found = true;
            match infer_common_members(classes) {
                Ok(members) if members.is_empty() => {
                    println!(
                        "{}: no common members across {} classes",
                        diagram.id.node,
                        classes.len()
                    );
                }
                Ok(members) => {
                    println!(
                        "{}: common members across {} classes:",
                        diagram.id.node,
                        classes.len()
                    );
                    for member in members {
                        println!("  {} {}", member.kind.as_str(), member.name);
                    }
                }
                Err(error) => {
                    print_failure(
                        &format!("{display}: diagram `{}`", diagram.id.node),
                        &error.to_string(),
                        color,
                    );
                    exit.validation_failure();
                }
            }
        }
        if !found {
            println!("{display}: no inheritance diagrams");
        }
    }
    exit.code
}
