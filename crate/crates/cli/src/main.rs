//! `oopspec` — compile OOP exercise diagrams from text to SVG.
//!
//! The pipeline per file is parse, validate, lay out, render. `check` and
//! `lint` stop after validation; `render` and `bundle` emit one SVG per
//! diagram (bundles add a hashed manifest); `fmt` rewrites sources in
//! canonical form; `infer` previews the superclass an inheritance diagram
//! implies; `verify` re-hashes a bundle.

mod commands;
mod diagnostics;
mod manifest;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::RenderParams;

#[derive(Parser)]
#[command(
    name = "oopspec",
    version,
    about = "Compiler for diagram-based OOP exercise assignments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate; print error diagnostics.
    Check {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Promote warnings to errors.
        #[arg(long)]
        strict: bool,
    },
    /// Like `check`, but also show warnings and infos.
    Lint {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long)]
        strict: bool,
    },
    /// Render one SVG per diagram into --out.
    Render {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
        /// Theme file (key = value overrides).
        #[arg(long)]
        theme: Option<PathBuf>,
        /// Render even when validation reports errors.
        #[arg(long)]
        force: bool,
        /// Emit labels as stroke paths instead of text elements.
        #[arg(long)]
        outline_text: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Render and write a hashed manifest.json per assignment.
    Bundle {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        theme: Option<PathBuf>,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        outline_text: bool,
        #[arg(long)]
        strict: bool,
        /// Copy the DSL source into the bundle (off by default: handing the
        /// text form to students defeats the notation).
        #[arg(long)]
        embed_source: bool,
    },
    /// Recompute bundle hashes and compare with the manifest.
    Verify {
        #[arg(required = true)]
        dirs: Vec<PathBuf>,
    },
    /// Rewrite files in canonical formatting.
    Fmt {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Print the common members implied by inheritance diagrams.
    Infer {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { paths, strict } => commands::cmd_check(&paths, strict, false),
        Command::Lint { paths, strict } => commands::cmd_check(&paths, strict, true),
        Command::Render {
            paths,
            out,
            theme,
            force,
            outline_text,
            strict,
        } => commands::cmd_render(
            &paths,
            &RenderParams {
                out,
                theme,
                force,
                outline_text,
                strict,
            },
        ),
        Command::Bundle {
            paths,
            out,
            theme,
            force,
            outline_text,
            strict,
            embed_source,
        } => commands::cmd_bundle(
            &paths,
            &RenderParams {
                out,
                theme,
                force,
                outline_text,
                strict,
            },
            embed_source,
        ),
        Command::Verify { dirs } => commands::cmd_verify(&dirs),
        Command::Fmt { paths } => commands::cmd_fmt(&paths),
        Command::Infer { paths } => commands::cmd_infer(&paths),
    };
    std::process::exit(code);
}
