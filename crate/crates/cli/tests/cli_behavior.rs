//! End-to-end checks of the command-line surface: exit codes, diagnostic
//! format, formatting idempotence, bundle verification and flag behavior.

mod common;

use std::fs;
use std::path::Path;

use common::{corpus_dir, oopspec};

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.display().to_string()
}

const CLEAN: &str = "assignment \"ok\" {\n  algorithmic \"d\" {\n    function f1(int) returns int\n    example {\n      in: 1\n      out: 2\n    }\n    example {\n      in: 3\n      out: 4\n    }\n  }\n}\n";

const ONE_EXAMPLE: &str = "assignment \"bad\" {\n  algorithmic \"d\" {\n    function f1(int) returns int\n    example { in: 1\n out: 2 }\n  }\n}\n";

const WARN_ONLY: &str = "assignment \"warn\" {\n  algorithmic \"d\" {\n    function shuffle(int) returns int\n    example { in: 1\n out: 2 }\n    example { in: 3\n out: 4 }\n  }\n}\n";

#[test]
fn check_exit_codes_cover_the_contract() {
    let temp = tempfile::tempdir().unwrap();
    let clean = write(temp.path(), "clean.oos", CLEAN);
    let bad = write(temp.path(), "bad.oos", ONE_EXAMPLE);
    let unparseable = write(temp.path(), "broken.oos", "assignment \"x\" {");

    let output = oopspec(&["check", &clean], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert!(
        output.stderr.is_empty(),
        "clean check wrote: {}",
        String::from_utf8_lossy(&output.stderr)
    );

    let output = oopspec(&["check", &bad], temp.path());
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.contains("[V1]"), "{stderr}");
    assert!(stderr.contains("bad.oos:3:14:"), "span missing: {stderr}");

    let output = oopspec(&["check", &unparseable], temp.path());
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("[parse]"));

    let output = oopspec(
        &["check", temp.path().join("missing.oos").to_str().unwrap()],
        temp.path(),
    );
    assert_eq!(output.status.code(), Some(2));

    // Parse failures outrank validation failures across a file set.
    let output = oopspec(&["check", &bad, &unparseable], temp.path());
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn lint_shows_warnings_check_hides_them() {
    let temp = tempfile::tempdir().unwrap();
    let warn = write(temp.path(), "warn.oos", WARN_ONLY);

    let output = oopspec(&["check", &warn], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stderr.is_empty());

    let output = oopspec(&["lint", &warn], temp.path());
    assert_eq!(
        output.status.code(),
        Some(0),
        "warnings alone never fail the build"
    );
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(
        stderr.contains("[L1]") && stderr.contains("warning"),
        "{stderr}"
    );
}

#[test]
fn strict_promotes_warnings_to_errors() {
    let temp = tempfile::tempdir().unwrap();
    let warn = write(temp.path(), "warn.oos", WARN_ONLY);

    let output = oopspec(&["check", "--strict", &warn], temp.path());
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("error"));
}

#[test]
fn config_file_in_working_directory_applies() {
    let temp = tempfile::tempdir().unwrap();
    let warn = write(temp.path(), "warn.oos", WARN_ONLY);
    write(temp.path(), "oopspec.toml", "L1 = off\nL3 = off\n");

    let output = oopspec(&["lint", &warn], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert!(
        output.stderr.is_empty(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );

    write(temp.path(), "oopspec.toml", "strict = maybe\n");
    let output = oopspec(&["check", &warn], temp.path());
    assert_eq!(
        output.status.code(),
        Some(2),
        "malformed config is a hard failure"
    );
}

#[test]
fn fmt_is_canonical_and_idempotent() {
    let temp = tempfile::tempdir().unwrap();
    let messy = "assignment \"m\"{algorithmic \"d\"{function f1(int) returns int\nexample{in: N+1 \"tasks\"\nout: 2}example{in: M \"x\"\nout: 3}}}";
    let path = write(temp.path(), "messy.oos", messy);

    let output = oopspec(&["fmt", &path], temp.path());
    assert_eq!(output.status.code(), Some(0));
    let formatted = fs::read_to_string(&path).unwrap();
    assert!(formatted.contains("N + 1 \"tasks\""));
    assert!(formatted.starts_with("assignment \"m\" {\n"));

    let output = oopspec(&["fmt", &path], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty(), "second fmt run must be a no-op");
    assert_eq!(fs::read_to_string(&path).unwrap(), formatted);

    let broken_path = write(temp.path(), "broken.oos", "assignment \"x\" {");
    let output = oopspec(&["fmt", &broken_path], temp.path());
    assert_eq!(output.status.code(), Some(2));
    assert_eq!(
        fs::read_to_string(&broken_path).unwrap(),
        "assignment \"x\" {",
        "unparseable file was touched"
    );
}

#[test]
fn render_writes_named_files_and_is_reproducible() {
    let temp = tempfile::tempdir().unwrap();
    let clean = write(temp.path(), "clean.oos", CLEAN);
    let out = temp.path().join("svg");
    let out_str = out.display().to_string();

    let output = oopspec(&["render", &clean, "--out", &out_str], temp.path());
    assert_eq!(output.status.code(), Some(0));
    let svg_path = out.join("ok__d.svg");
    let first = fs::read(&svg_path).unwrap();

    let output = oopspec(&["render", &clean, "--out", &out_str], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        fs::read(&svg_path).unwrap(),
        first,
        "re-render changed bytes"
    );

    // Validation errors block rendering without --force.
    let bad = write(temp.path(), "bad.oos", ONE_EXAMPLE);
    let output = oopspec(&["render", &bad, "--out", &out_str], temp.path());
    assert_eq!(output.status.code(), Some(1));
    assert!(!out.join("bad__d.svg").exists());

    let output = oopspec(&["render", &bad, "--out", &out_str, "--force"], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert!(
        out.join("bad__d.svg").exists(),
        "--force renders what it can"
    );
}

#[test]
fn render_reports_unwritable_output() {
    let temp = tempfile::tempdir().unwrap();
    let clean = write(temp.path(), "clean.oos", CLEAN);
    let blocked = temp.path().join("blocked");
    fs::write(&blocked, "a file, not a directory").unwrap();
    let out_str = blocked.join("svg").display().to_string();

    let output = oopspec(&["render", &clean, "--out", &out_str], temp.path());
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn outline_text_removes_text_elements() {
    let temp = tempfile::tempdir().unwrap();
    let clean = write(temp.path(), "clean.oos", CLEAN);
    let out = temp.path().join("svg");
    let out_str = out.display().to_string();

    let output = oopspec(
        &["render", &clean, "--out", &out_str, "--outline-text"],
        temp.path(),
    );
    assert_eq!(output.status.code(), Some(0));
    let svg = fs::read_to_string(out.join("ok__d.svg")).unwrap();
    assert!(!svg.contains("<text"), "outline mode leaked text elements");
}

#[test]
fn theme_file_recolors_output() {
    let temp = tempfile::tempdir().unwrap();
    let clean = write(temp.path(), "clean.oos", CLEAN);
    let theme = write(temp.path(), "theme.toml", "input_arrow = #123456\n");
    let out = temp.path().join("svg");
    let out_str = out.display().to_string();

    let output = oopspec(
        &["render", &clean, "--out", &out_str, "--theme", &theme],
        temp.path(),
    );
    assert_eq!(output.status.code(), Some(0));
    let svg = fs::read_to_string(out.join("ok__d.svg")).unwrap();
    assert!(svg.contains("#123456"));
    assert!(!svg.contains("#E07B26"));

    let bad_theme = write(temp.path(), "bad_theme.toml", "input_arrow = red\n");
    let output = oopspec(
        &["render", &clean, "--out", &out_str, "--theme", &bad_theme],
        temp.path(),
    );
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn bundle_manifest_verifies_and_detects_tampering() {
    let temp = tempfile::tempdir().unwrap();
    let corpus = corpus_dir();
    let tasks = corpus.join("task_assignment.oos").display().to_string();
    let out = temp.path().join("bundles");
    let out_str = out.display().to_string();

    let output = oopspec(&["bundle", &tasks, "--out", &out_str], temp.path());
    assert_eq!(
        output.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );

    let bundle_dir = out.join("pl06");
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(bundle_dir.join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["assignment_id"], "pl06");
    let diagrams = manifest["diagrams"].as_array().unwrap();
    assert_eq!(diagrams.len(), 2);
    // Entries are ordered by diagram id.
    assert_eq!(diagrams[0]["id"], "assign-task");
    assert_eq!(diagrams[1]["id"], "task-lifecycle");
    assert_eq!(diagrams[1]["kind"], "state_transitions");
    assert_eq!(manifest["diagnostics_summary"]["error"], 0);

    let bundle_str = bundle_dir.display().to_string();
    let output = oopspec(&["verify", &bundle_str], temp.path());
    assert_eq!(
        output.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );

    // Flip one byte of a rendered SVG: verify must report the mismatch.
    let svg_file = bundle_dir.join(diagrams[0]["svg_file"].as_str().unwrap());
    let mut bytes = fs::read(&svg_file).unwrap();
    let last = bytes.len() - 2;
    bytes[last] = bytes[last].wrapping_add(1);
    fs::write(&svg_file, bytes).unwrap();

    let output = oopspec(&["verify", &bundle_str], temp.path());
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("hash mismatch"));
}

#[test]
fn bundle_of_empty_assignment_has_empty_diagram_list() {
    let temp = tempfile::tempdir().unwrap();
    let empty = write(temp.path(), "empty.oos", "assignment \"nothing\" {}\n");
    let out = temp.path().join("bundles");
    let out_str = out.display().to_string();

    let output = oopspec(&["bundle", &empty, "--out", &out_str], temp.path());
    assert_eq!(output.status.code(), Some(0));
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("nothing/manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["diagrams"].as_array().unwrap().len(), 0);
}

#[test]
fn bundle_embed_source_copies_the_dsl_file() {
    let temp = tempfile::tempdir().unwrap();
    let clean = write(temp.path(), "clean.oos", CLEAN);
    let out = temp.path().join("bundles");
    let out_str = out.display().to_string();

    let output = oopspec(&["bundle", &clean, "--out", &out_str], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert!(
        !out.join("ok/clean.oos").exists(),
        "source embedded without the flag"
    );

    let output = oopspec(
        &["bundle", &clean, "--out", &out_str, "--embed-source"],
        temp.path(),
    );
    assert_eq!(output.status.code(), Some(0));
    assert!(out.join("ok/clean.oos").exists());
}

#[test]
fn infer_prints_common_members() {
    let temp = tempfile::tempdir().unwrap();
    let corpus = corpus_dir();
    let inheritance = corpus.join("manager_technician.oos").display().to_string();

    let output = oopspec(&["infer", &inheritance], temp.path());
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("manager-technician"), "{stdout}");
    assert!(stdout.contains("attribute name"));
    assert!(stdout.contains("attribute salary"));
    assert!(stdout.contains("method f10"));
    assert!(!stdout.contains("attribute bonus"));

    let clean = write(temp.path(), "clean.oos", CLEAN);
    let output = oopspec(&["infer", &clean], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&output.stdout).contains("no inheritance diagrams"));
}

#[test]
fn corpus_files_are_already_canonical() {
    // `fmt` over the shipped corpus must not want to change anything.
    for entry in fs::read_dir(corpus_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "oos") {
            continue;
        }
        let source = fs::read_to_string(&path).unwrap();
        let parsed = oopspec_core::parse(&source, path.to_str().unwrap()).unwrap();
        let printed = oopspec_core::print(&parsed);
        let reparsed = oopspec_core::parse(&printed, "canon").unwrap();
        let mut lhs = parsed;
        let mut rhs = reparsed;
        oopspec_core::model::strip::strip_assignment(&mut lhs);
        oopspec_core::model::strip::strip_assignment(&mut rhs);
        assert_eq!(lhs, rhs, "{path:?} does not round trip");
    }
}

#[test]
fn lint_clean_files_render_only_short_notes() {
    // The pipeline property behind the note linter: when lint reports no
    // L2, every note that reaches a rendered diagram is within the word
    // budget; oversized notes can only appear by suppressing L2.
    let temp = tempfile::tempdir().unwrap();
    let short = "assignment \"n\" {\n  class \"c\" {\n    note \"remember the invariants\"\n    class A { attr x }\n  }\n}\n";
    let long = "assignment \"n\" {\n  class \"c\" {\n    note \"w1 w2 w3 w4 w5 w6 w7 w8 w9 w10 w11 w12 w13\"\n    class A { attr x }\n  }\n}\n";
    let out = temp.path().join("svg");
    let out_str = out.display().to_string();

    let short_path = write(temp.path(), "short.oos", short);
    let output = oopspec(&["lint", &short_path], temp.path());
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stderr.is_empty());
    let output = oopspec(&["render", &short_path, "--out", &out_str], temp.path());
    assert_eq!(output.status.code(), Some(0));
    let svg = fs::read_to_string(out.join("n__c.svg")).unwrap();
    assert!(svg.contains("remember the invariants"));

    let long_path = write(temp.path(), "long.oos", long);
    let output = oopspec(&["lint", &long_path], temp.path());
    assert!(String::from_utf8_lossy(&output.stderr).contains("[L2]"));
}
